//! Distance partition of the Hamming space around a code.
//!
//! For a code C in H(m,2) the vertex set splits into cells C_0 = C, C_1, ...,
//! C_rho by distance to the nearest codeword; rho is the covering radius.
//! The partition is computed by multi-source breadth-first search over all
//! 2^m vertices, so it is gated at m <= 26 (a 64 MiB distance array).
//!
//! The BFS works on bitsets: one dilation step ORs together the 2^i-bit
//! shifts of the frontier for intra-block coordinates and block swaps for the
//! rest, which visits all m neighbour directions in a handful of passes over
//! the array instead of per-vertex loops.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::word::Word;

pub const MAX_SPACE_LOG2: usize = 26;

const HALF_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

#[derive(Clone)]
pub struct DistancePartition {
    m: usize,
    dist: Vec<u8>,
    cell_sizes: Vec<u64>,
}

impl DistancePartition {
    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Covering radius: the largest distance that occurs.
    pub fn rho(&self) -> usize {
        self.cell_sizes.len() - 1
    }

    #[inline]
    pub fn dist(&self, v: u64) -> usize {
        self.dist[v as usize] as usize
    }

    pub fn distances(&self) -> &[u8] {
        &self.dist
    }

    /// Number of vertices in each cell, indexed by distance.
    pub fn cell_sizes(&self) -> &[u64] {
        &self.cell_sizes
    }

    /// Vertices of one cell, ascending.
    pub fn cell(&self, i: usize) -> Vec<u64> {
        (0..self.dist.len() as u64).filter(|&v| self.dist(v) == i).collect()
    }
}

/// Bitset over the 2^m vertex indices.
pub(crate) struct SpaceSet {
    pub words: Vec<u64>,
    m: usize,
}

impl SpaceSet {
    pub fn new(m: usize) -> SpaceSet {
        let nbits = 1usize << m;
        SpaceSet { words: vec![0; nbits.div_ceil(64)], m }
    }

    #[inline]
    pub fn insert(&mut self, v: u64) {
        self.words[(v >> 6) as usize] |= 1u64 << (v & 63);
    }

    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// OR of all m unit-flip translates.
    pub fn dilate(&self) -> SpaceSet {
        let mut out = SpaceSet::new(self.m);
        let n = self.words.len();
        for (i, mask) in HALF_MASKS.iter().enumerate().take(self.m.min(6)) {
            let s = 1u32 << i;
            for j in 0..n {
                let x = self.words[j];
                out.words[j] |= ((x & mask) << s) | ((x >> s) & mask);
            }
        }
        for i in 6..self.m {
            let d = 1usize << (i - 6);
            for j in 0..n {
                out.words[j] |= self.words[j ^ d];
            }
        }
        if self.m < 6 {
            let valid = (1u64 << (1usize << self.m)) - 1;
            out.words[0] &= valid;
        }
        out
    }

    pub fn for_each<F: FnMut(u64)>(&self, mut f: F) {
        for (j, &w) in self.words.iter().enumerate() {
            let mut x = w;
            while x != 0 {
                f((j as u64) << 6 | x.trailing_zeros() as u64);
                x &= x - 1;
            }
        }
    }
}

fn check_space(m: usize) -> Result<()> {
    if m == 0 || m > MAX_SPACE_LOG2 {
        return Err(Error::SpaceTooLarge(m));
    }
    Ok(())
}

/// Distance partition of H(m,2) around `c`.
pub fn distance_partition(c: &Code) -> Result<DistancePartition> {
    let m = c.len();
    check_space(m)?;
    if c.size() == 0 {
        return Err(Error::Undefined("distance partition of the empty code".into()));
    }
    let total = 1u64 << m;
    let mut dist = vec![u8::MAX; total as usize];
    let mut reached = SpaceSet::new(m);
    c.for_each_word(|w| reached.insert(w.index()))?;
    reached.for_each(|v| dist[v as usize] = 0);
    let mut cell_sizes = vec![reached.count()];
    let mut frontier_src = None;
    let mut covered = cell_sizes[0];
    let mut layer = 0u8;
    while covered < total {
        layer += 1;
        let next = {
            let src: &SpaceSet = frontier_src.as_ref().unwrap_or(&reached);
            let mut d = src.dilate();
            for (dw, rw) in d.words.iter_mut().zip(&reached.words) {
                *dw &= !rw;
            }
            d
        };
        let n = next.count();
        assert!(n > 0, "hamming graph BFS stalled before covering the space");
        next.for_each(|v| dist[v as usize] = layer);
        for (rw, nw) in reached.words.iter_mut().zip(&next.words) {
            *rw |= nw;
        }
        covered += n;
        cell_sizes.push(n);
        frontier_src = Some(next);
    }
    Ok(DistancePartition { m, dist, cell_sizes })
}

/// Distance from `v` to the nearest codeword, by direct scan over C.
/// Independent of the BFS; used to spot-check partitions.
pub fn nearest_codeword_distance(c: &Code, v: &Word) -> Result<usize> {
    let mut best = usize::MAX;
    c.for_each_word(|w| best = best.min(w.distance(v)))?;
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn whole_space_has_radius_zero() {
        let all = Code::linear(4, &[w("1000"), w("0100"), w("0010"), w("0001")]);
        let dp = distance_partition(&all).unwrap();
        assert_eq!(dp.rho(), 0);
        assert_eq!(dp.cell_sizes(), &[16]);
    }

    #[test]
    fn repetition_code_radius_is_floor_half() {
        for m in [3usize, 5, 8, 11] {
            let rep = Code::linear(m, &[Word::all_ones(m)]);
            let dp = distance_partition(&rep).unwrap();
            assert_eq!(dp.rho(), m / 2, "repetition length {m}");
            let total: u64 = dp.cell_sizes().iter().sum();
            assert_eq!(total, 1u64 << m);
        }
    }

    #[test]
    fn cells_agree_with_direct_nearest_scan() {
        let c = Code::explicit(10, vec![w("0000000000"), w("1110000000"), w("0000011111")]);
        let dp = distance_partition(&c).unwrap();
        for v in (0u64..1 << 10).step_by(7) {
            let direct = nearest_codeword_distance(&c, &Word::from_index(10, v)).unwrap();
            assert_eq!(dp.dist(v), direct, "vertex {v}");
        }
    }

    #[test]
    fn cell_sizes_partition_the_space() {
        let c = Code::linear(9, &[w("111000000"), w("000111000"), w("000000111")]);
        let dp = distance_partition(&c).unwrap();
        assert_eq!(dp.cell_sizes().iter().sum::<u64>(), 512);
        assert_eq!(dp.cell_sizes()[0], 8);
    }

    #[test]
    fn tiny_lengths_work() {
        let c = Code::explicit(2, vec![w("00")]);
        let dp = distance_partition(&c).unwrap();
        assert_eq!(dp.rho(), 2);
        assert_eq!(dp.cell_sizes(), &[1, 2, 1]);
    }

    #[test]
    fn oversized_space_is_rejected() {
        let c = Code::linear(27, &[Word::all_ones(27)]);
        assert!(matches!(distance_partition(&c), Err(Error::SpaceTooLarge(27))));
    }
}
