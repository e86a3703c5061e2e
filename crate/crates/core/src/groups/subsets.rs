//! Orbits of a permutation group on k-subsets and transitivity testing.
//!
//! Subsets are bit-packed words, so a generator acts on a subset in one
//! permutation application.  Orbits come from breadth-first search seeded
//! in colex order, which makes orbit numbering and representatives
//! deterministic.  Ordered-tuple transitivity is tested the same way on
//! packed tuples of distinct points.

use crate::comb::{for_each_combination, BinomTable};
use crate::error::{Error, Result};
use crate::groups::haut::GroupGens;
use crate::groups::perm::Perm;
use crate::word::Word;

/// Largest number of k-subsets the orbit scan will enumerate.
pub const MAX_SUBSETS: u64 = 10_000_000;

/// Orbit partition of the k-subsets of {0,..,m-1} under a permutation group.
#[derive(Clone, Debug)]
pub struct SubsetOrbits {
    pub m: usize,
    pub k: usize,
    /// Orbits in order of discovery; each orbit lists its subsets in
    /// ascending colex rank, and orbit 0 starts at the colex-least subset.
    pub orbits: Vec<Vec<Word>>,
}

impl SubsetOrbits {
    pub fn sizes(&self) -> Vec<u64> {
        self.orbits.iter().map(|o| o.len() as u64).collect()
    }

    pub fn min_size(&self) -> u64 {
        self.sizes().into_iter().min().unwrap_or(0)
    }

    pub fn orbit_of(&self, s: &Word) -> Option<usize> {
        self.orbits.iter().position(|o| o.binary_search(s).is_ok())
    }
}

fn perm_parts_checked(g: &GroupGens) -> Result<Vec<Perm>> {
    if !g.is_permutation_group() {
        return Err(Error::Unsupported(format!(
            "subset orbits need a pure permutation group, but {} has translation parts",
            g.label
        )));
    }
    Ok(g.perm_parts())
}

/// Orbits of the generated group on k-element subsets.
///
/// Requires a translation-free group and C(m,k) <= 10^7.
pub fn orbits_on_k_subsets(g: &GroupGens, k: usize) -> Result<SubsetOrbits> {
    let m = g.m;
    if k > m {
        return Err(Error::Undefined(format!("k = {k} exceeds m = {m}")));
    }
    let perms = perm_parts_checked(g)?;
    let binom = BinomTable::new(m);
    let total = binom.get(m, k);
    if total > MAX_SUBSETS {
        return Err(Error::SpaceTooLarge(m));
    }
    let total = total as usize;
    let mut all = Vec::with_capacity(total);
    for_each_combination(m, k, |s| all.push(Word::from_support(m, s)));
    const UNSEEN: u32 = u32::MAX;
    let mut label = vec![UNSEEN; total];
    let mut orbits: Vec<Vec<Word>> = Vec::new();
    let mut stack: Vec<Word> = Vec::new();
    for start in 0..total {
        if label[start] != UNSEEN {
            continue;
        }
        let id = orbits.len() as u32;
        let mut members = Vec::new();
        label[start] = id;
        stack.push(all[start]);
        while let Some(s) = stack.pop() {
            members.push(s);
            for p in &perms {
                let img = p.apply(&s);
                let r = binom.rank(&img.support()) as usize;
                if label[r] == UNSEEN {
                    label[r] = id;
                    stack.push(img);
                }
            }
        }
        members.sort();
        orbits.push(members);
    }
    Ok(SubsetOrbits { m, k, orbits })
}

/// True when the group has a single orbit on k-subsets.
pub fn is_k_homogeneous(g: &GroupGens, k: usize) -> Result<bool> {
    Ok(orbits_on_k_subsets(g, k)?.orbits.len() == 1)
}

fn pack_tuple(tuple: &[usize]) -> u64 {
    let mut key = 0u64;
    for (i, &p) in tuple.iter().enumerate() {
        key |= (p as u64) << (8 * i);
    }
    key
}

/// True when the group is transitive on ordered t-tuples of distinct points.
///
/// The orbit of the tuple (0,1,..,t-1) is grown by breadth-first search and
/// compared against the count m(m-1)..(m-t+1) of all such tuples.  Requires
/// t <= 8, m <= 256, and at most 10^7 tuples.
pub fn is_t_transitive(g: &GroupGens, t: usize) -> Result<bool> {
    let m = g.m;
    if t > m {
        return Err(Error::Undefined(format!("t = {t} exceeds m = {m}")));
    }
    if t > 8 || m > 256 {
        return Err(Error::Unsupported(format!(
            "tuple transitivity supports t <= 8 on at most 256 points, got t = {t}, m = {m}"
        )));
    }
    let mut total: u64 = 1;
    for i in 0..t {
        total *= (m - i) as u64;
    }
    if total > MAX_SUBSETS {
        return Err(Error::SpaceTooLarge(m));
    }
    let perms = perm_parts_checked(g)?;
    let start: Vec<usize> = (0..t).collect();
    let mut seen = std::collections::HashSet::with_capacity(total as usize);
    seen.insert(pack_tuple(&start));
    let mut stack = vec![start];
    let mut count: u64 = 1;
    while let Some(tuple) = stack.pop() {
        for p in &perms {
            let img: Vec<usize> = tuple.iter().map(|&x| p.image(x)).collect();
            if seen.insert(pack_tuple(&img)) {
                count += 1;
                stack.push(img);
            }
        }
    }
    Ok(count == total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(m: usize) -> Perm {
        Perm::new((0..m).map(|i| (i + 1) % m).collect()).unwrap()
    }

    fn transposition(m: usize, a: usize, b: usize) -> Perm {
        let mut v: Vec<usize> = (0..m).collect();
        v.swap(a, b);
        Perm::new(v).unwrap()
    }

    #[test]
    fn symmetric_group_is_homogeneous_and_transitive() {
        let g = GroupGens::from_perms(7, "sym7", vec![cyclic(7), transposition(7, 0, 1)]).unwrap();
        for k in 0..=3 {
            assert!(is_k_homogeneous(&g, k).unwrap());
        }
        assert!(is_t_transitive(&g, 3).unwrap());
        assert!(is_t_transitive(&g, 7).unwrap());
    }

    #[test]
    fn cyclic_group_orbit_sizes() {
        let g = GroupGens::from_perms(6, "c6", vec![cyclic(6)]).unwrap();
        let orb = orbits_on_k_subsets(&g, 2).unwrap();
        let mut sizes = orb.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 6, 6]);
        assert!(!is_t_transitive(&g, 2).unwrap());
        assert!(is_t_transitive(&g, 1).unwrap());
        let total: usize = orb.orbits.iter().map(|o| o.len()).sum();
        assert_eq!(total, 15);
        let diameters: Word = "100100".parse().unwrap();
        let orbit_id = orb.orbit_of(&diameters).unwrap();
        assert_eq!(orb.orbits[orbit_id].len(), 3);
    }

    #[test]
    fn alternating_group_on_ordered_tuples() {
        let three_cycle = Perm::new(vec![1, 2, 0, 3, 4]).unwrap();
        let five_cycle = cyclic(5);
        let g = GroupGens::from_perms(5, "a5", vec![three_cycle, five_cycle]).unwrap();
        assert!(is_t_transitive(&g, 3).unwrap());
        assert!(!is_t_transitive(&g, 4).unwrap());
    }

    #[test]
    fn translations_are_rejected() {
        let g = GroupGens::new(
            4,
            "mixed",
            vec![crate::groups::haut::HammingAut::translation(
                "1100".parse().unwrap(),
            )],
        )
        .unwrap();
        assert!(orbits_on_k_subsets(&g, 2).is_err());
        assert!(is_t_transitive(&g, 1).is_err());
    }
}
