//! Orbits of a group of Hamming-space symmetries on the full vertex set.
//!
//! The orbit partition of {0,1}^m under a subgroup of translations and
//! coordinate permutations is computed by breadth-first search over vertex
//! indices.  Generator images are evaluated through per-byte lookup tables:
//! a coordinate permutation acts on a packed index one byte at a time, so a
//! single image costs a handful of table reads instead of m bit moves.
//!
//! Labels are deterministic: orbits are numbered in increasing order of
//! their smallest vertex index, which is also the stored representative.

use crate::error::{Error, Result};
use crate::groups::haut::GroupGens;
use crate::partition::MAX_SPACE_LOG2;

/// Orbit partition of the full space {0,1}^m under a group.
#[derive(Clone, Debug)]
pub struct OrbitLabeling {
    m: usize,
    label: Vec<u32>,
    reps: Vec<u64>,
    sizes: Vec<u64>,
}

impl OrbitLabeling {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn orbit_count(&self) -> usize {
        self.reps.len()
    }

    /// Orbit label of a vertex index, in 0..orbit_count().
    pub fn label(&self, v: u64) -> u32 {
        self.label[v as usize]
    }

    /// Smallest vertex index in each orbit, indexed by label.
    pub fn reps(&self) -> &[u64] {
        &self.reps
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// True when every vertex of `cell` carries the same label.
    pub fn is_single_orbit(&self, cell: &[u64]) -> bool {
        match cell.split_first() {
            None => true,
            Some((first, rest)) => {
                let l = self.label(*first);
                rest.iter().all(|v| self.label(*v) == l)
            }
        }
    }
}

/// Byte-sliced evaluator for one generator acting on packed vertex indices.
struct GenTable {
    t: u32,
    chunks: Vec<[u32; 256]>,
}

impl GenTable {
    fn new(g: &crate::groups::haut::HammingAut, m: usize) -> GenTable {
        let n_chunks = m.div_ceil(8);
        let mut chunks = vec![[0u32; 256]; n_chunks];
        for (c, table) in chunks.iter_mut().enumerate() {
            let width = (m - 8 * c).min(8);
            for (x, slot) in table.iter_mut().enumerate() {
                let mut img = 0u32;
                for i in 0..width {
                    if x >> i & 1 == 1 {
                        img |= 1 << g.p.image(8 * c + i);
                    }
                }
                *slot = img;
            }
        }
        GenTable {
            t: g.t.index() as u32,
            chunks,
        }
    }

    #[inline]
    fn image(&self, v: u32) -> u32 {
        let x = v ^ self.t;
        let mut img = 0u32;
        for (c, table) in self.chunks.iter().enumerate() {
            img |= table[(x >> (8 * c) & 0xFF) as usize];
        }
        img
    }
}

/// Orbit partition of all 2^m vertices under the generated group.
///
/// Requires m <= 26; the labeling array has one u32 entry per vertex.
pub fn full_space_orbits(g: &GroupGens) -> Result<OrbitLabeling> {
    if g.m > MAX_SPACE_LOG2 {
        return Err(Error::SpaceTooLarge(g.m));
    }
    let n: usize = 1 << g.m;
    let tables: Vec<GenTable> = g.gens.iter().map(|x| GenTable::new(x, g.m)).collect();
    const UNSEEN: u32 = u32::MAX;
    let mut label = vec![UNSEEN; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    for start in 0..n as u32 {
        if label[start as usize] != UNSEEN {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(start as u64);
        let mut size = 0u64;
        label[start as usize] = id;
        stack.push(start);
        while let Some(v) = stack.pop() {
            size += 1;
            for t in &tables {
                let w = t.image(v);
                if label[w as usize] == UNSEEN {
                    label[w as usize] = id;
                    stack.push(w);
                }
            }
        }
        sizes.push(size);
    }
    Ok(OrbitLabeling {
        m: g.m,
        label,
        reps,
        sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::haut::HammingAut;
    use crate::groups::perm::Perm;
    use crate::word::Word;

    fn cyclic_shift(m: usize) -> Perm {
        Perm::new((0..m).map(|i| (i + 1) % m).collect()).unwrap()
    }

    #[test]
    fn symmetric_group_orbits_are_weight_classes() {
        let m = 10;
        let gens = GroupGens::from_perms(
            m,
            "sym",
            vec![
                cyclic_shift(m),
                Perm::new(vec![1, 0, 2, 3, 4, 5, 6, 7, 8, 9]).unwrap(),
            ],
        )
        .unwrap();
        let orb = full_space_orbits(&gens).unwrap();
        assert_eq!(orb.orbit_count(), m + 1);
        for v in 0..1u64 << m {
            let w = Word::from_index(m, v).weight();
            assert_eq!(orb.label(v), orb.label((1u64 << w) - 1));
        }
        let mut sizes = orb.sizes().to_vec();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 10, 10, 45, 45, 120, 120, 210, 210, 252]);
        for (id, rep) in orb.reps().iter().enumerate() {
            assert_eq!(orb.label(*rep), id as u32);
            assert_eq!(rep.count_ones() as usize, Word::from_index(m, *rep).weight());
        }
    }

    #[test]
    fn translations_alone_give_cosets() {
        let m = 6;
        let code_words = [
            Word::zero(m),
            "111000".parse().unwrap(),
            "000111".parse().unwrap(),
            "111111".parse().unwrap(),
        ];
        let gens = GroupGens::new(
            m,
            "trans",
            vec![
                HammingAut::translation(code_words[1]),
                HammingAut::translation(code_words[2]),
            ],
        )
        .unwrap();
        let orb = full_space_orbits(&gens).unwrap();
        assert_eq!(orb.orbit_count(), 16);
        assert!(orb.sizes().iter().all(|&s| s == 4));
        for w in &code_words {
            assert_eq!(orb.label(w.index()), 0);
        }
    }

    #[test]
    fn representatives_are_orbit_minima() {
        let m = 8;
        let gens = GroupGens::new(
            m,
            "mix",
            vec![
                HammingAut::new("10000001".parse().unwrap(), cyclic_shift(m)).unwrap(),
                HammingAut::permutation(Perm::new(vec![0, 1, 2, 3, 4, 5, 7, 6]).unwrap()),
            ],
        )
        .unwrap();
        let orb = full_space_orbits(&gens).unwrap();
        let mut min_seen = vec![u64::MAX; orb.orbit_count()];
        for v in 0..1u64 << m {
            let l = orb.label(v) as usize;
            min_seen[l] = min_seen[l].min(v);
        }
        assert_eq!(min_seen, orb.reps());
        let total: u64 = orb.sizes().iter().sum();
        assert_eq!(total, 1 << m);
    }
}
