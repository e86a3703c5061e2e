//! Fixed-width binary words.
//!
//! A `Word` is a vertex of the Hamming graph H(m,2): a 0/1 vector of length
//! `m` packed into four 64-bit blocks, so lengths up to 256 are supported
//! without allocation.  Coordinate 0 is the least significant bit of the
//! first block; all bits at positions >= m are kept zero as an invariant.
//!
//! Words of length m <= 64 double as indices into flat arrays over the full
//! vertex set (see `index`), which is how the distance-partition and orbit
//! machinery address the space.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

pub const MAX_LEN: usize = 256;
const BLOCKS: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    m: u16,
    bits: [u64; BLOCKS],
}

impl Word {
    pub fn zero(m: usize) -> Word {
        assert!(m <= MAX_LEN, "word length {m} exceeds {MAX_LEN}");
        Word { m: m as u16, bits: [0; BLOCKS] }
    }

    pub fn all_ones(m: usize) -> Word {
        let mut w = Word::zero(m);
        for b in 0..BLOCKS {
            let lo = 64 * b;
            if m > lo {
                let take = (m - lo).min(64);
                w.bits[b] = if take == 64 { !0 } else { (1u64 << take) - 1 };
            }
        }
        w
    }

    pub fn from_support(m: usize, support: &[usize]) -> Word {
        let mut w = Word::zero(m);
        for &i in support {
            w.set(i, true);
        }
        w
    }

    /// Word of length m <= 64 whose bits are those of `v`.
    pub fn from_index(m: usize, v: u64) -> Word {
        assert!(m <= 64);
        debug_assert!(m == 64 || v < (1u64 << m));
        let mut w = Word::zero(m);
        w.bits[0] = v;
        w
    }

    /// The integer whose binary digits are the coordinates (coordinate 0 least
    /// significant).  Only meaningful for m <= 64.
    #[inline]
    pub fn index(&self) -> u64 {
        debug_assert!(self.m <= 64);
        self.bits[0]
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.m as usize
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len());
        (self.bits[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len(), "coordinate {i} out of range for length {}", self.m);
        let mask = 1u64 << (i % 64);
        if value {
            self.bits[i / 64] |= mask;
        } else {
            self.bits[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len());
        self.bits[i / 64] ^= 1u64 << (i % 64);
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// Parity of the weight: true for odd.
    pub fn parity(&self) -> bool {
        self.bits.iter().fold(0u64, |a, b| a ^ b).count_ones() % 2 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.bits == [0; BLOCKS]
    }

    #[inline]
    pub fn xor(&self, other: &Word) -> Word {
        debug_assert_eq!(self.m, other.m);
        let mut out = *self;
        for b in 0..BLOCKS {
            out.bits[b] ^= other.bits[b];
        }
        out
    }

    #[inline]
    pub fn and(&self, other: &Word) -> Word {
        debug_assert_eq!(self.m, other.m);
        let mut out = *self;
        for b in 0..BLOCKS {
            out.bits[b] &= other.bits[b];
        }
        out
    }

    pub fn or(&self, other: &Word) -> Word {
        debug_assert_eq!(self.m, other.m);
        let mut out = *self;
        for b in 0..BLOCKS {
            out.bits[b] |= other.bits[b];
        }
        out
    }

    #[inline]
    pub fn distance(&self, other: &Word) -> usize {
        debug_assert_eq!(self.m, other.m);
        let mut d = 0;
        for b in 0..BLOCKS {
            d += (self.bits[b] ^ other.bits[b]).count_ones() as usize;
        }
        d
    }

    /// Number of coordinates where both words are 1.
    pub fn overlap(&self, other: &Word) -> usize {
        debug_assert_eq!(self.m, other.m);
        let mut d = 0;
        for b in 0..BLOCKS {
            d += (self.bits[b] & other.bits[b]).count_ones() as usize;
        }
        d
    }

    /// GF(2) inner product.
    pub fn dot(&self, other: &Word) -> bool {
        debug_assert_eq!(self.m, other.m);
        let mut acc = 0u64;
        for b in 0..BLOCKS {
            acc ^= self.bits[b] & other.bits[b];
        }
        acc.count_ones() % 2 == 1
    }

    pub fn first_set(&self) -> Option<usize> {
        for b in 0..BLOCKS {
            if self.bits[b] != 0 {
                return Some(64 * b + self.bits[b].trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for b in 0..BLOCKS {
            let mut x = self.bits[b];
            while x != 0 {
                out.push(64 * b + x.trailing_zeros() as usize);
                x &= x - 1;
            }
        }
        out
    }

    pub fn is_subset_of(&self, other: &Word) -> bool {
        (0..BLOCKS).all(|b| self.bits[b] & !other.bits[b] == 0)
    }

    /// Remove coordinate `i`; later coordinates shift down by one.
    pub fn puncture(&self, i: usize) -> Result<Word> {
        if i >= self.len() {
            return Err(Error::CoordRange { coord: i, m: self.len() });
        }
        let mut out = Word::zero(self.len() - 1);
        for j in 0..self.len() {
            if j == i {
                continue;
            }
            let k = if j < i { j } else { j - 1 };
            if self.get(j) {
                out.set(k, true);
            }
        }
        Ok(out)
    }

    /// Append one coordinate at the end.
    pub fn extend(&self, bit: bool) -> Word {
        let mut out = Word::zero(self.len() + 1);
        out.bits = self.bits;
        if bit {
            out.set(self.len(), true);
        }
        out
    }

    /// Restrict to the listed coordinates, in the listed order.
    pub fn restrict(&self, coords: &[usize]) -> Word {
        let mut out = Word::zero(coords.len());
        for (k, &j) in coords.iter().enumerate() {
            if self.get(j) {
                out.set(k, true);
            }
        }
        out
    }
}

/// Total order: words compare as 256-bit integers (coordinate 0 least
/// significant), with the length as a final tiebreak.
impl Ord for Word {
    fn cmp(&self, other: &Word) -> std::cmp::Ordering {
        for b in (0..BLOCKS).rev() {
            match self.bits[b].cmp(&other.bits[b]) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.m.cmp(&other.m)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders coordinate 0 as the leftmost character.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[{}]({})", self.m, self)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        if s.len() > MAX_LEN {
            return Err(Error::Parse(format!("word longer than {MAX_LEN}: {}", s.len())));
        }
        let mut w = Word::zero(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => w.set(i, true),
                _ => return Err(Error::Parse(format!("invalid character {c:?} in word"))),
            }
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_and_distance_agree_with_definitions() {
        let a = Word::from_support(10, &[0, 3, 7]);
        let b = Word::from_support(10, &[3, 7, 9]);
        assert_eq!(a.weight(), 3);
        assert_eq!(a.distance(&b), 2);
        assert_eq!(a.xor(&b).weight(), a.distance(&b));
        assert_eq!(a.overlap(&b), 2);
    }

    #[test]
    fn all_ones_weight_equals_length() {
        for m in [1, 63, 64, 65, 128, 200, 256] {
            assert_eq!(Word::all_ones(m).weight(), m);
        }
    }

    #[test]
    fn string_round_trip_keeps_coordinate_zero_leftmost() {
        let s = "1010011";
        let w: Word = s.parse().unwrap();
        assert!(w.get(0) && !w.get(1) && w.get(2));
        assert_eq!(w.to_string(), s);
    }

    #[test]
    fn puncture_shifts_higher_coordinates_down() {
        let w = Word::from_support(6, &[0, 2, 5]);
        let p = w.puncture(2).unwrap();
        assert_eq!(p.support(), vec![0, 4]);
        let q = w.puncture(5).unwrap();
        assert_eq!(q.support(), vec![0, 2]);
    }

    #[test]
    fn extend_appends_final_coordinate() {
        let w = Word::from_support(5, &[1, 4]);
        let e = w.extend(true);
        assert_eq!(e.len(), 6);
        assert_eq!(e.support(), vec![1, 4, 5]);
    }

    #[test]
    fn order_is_integer_order_for_short_words() {
        let a = Word::from_index(20, 100);
        let b = Word::from_index(20, 101);
        assert!(a < b);
        let hi = Word::from_support(200, &[190]);
        let lo = Word::from_support(200, &[0, 1, 2, 3]);
        assert!(lo < hi);
    }

    #[test]
    fn dot_product_is_overlap_parity() {
        let a = Word::from_support(70, &[0, 10, 65, 69]);
        let b = Word::from_support(70, &[10, 65, 3]);
        assert!(!a.dot(&b));
        let c = Word::from_support(70, &[10, 3]);
        assert!(a.dot(&c));
    }

    #[test]
    fn restrict_reorders_by_listed_coordinates() {
        let w = Word::from_support(8, &[1, 5, 6]);
        let r = w.restrict(&[5, 0, 6, 1]);
        assert_eq!(r.support(), vec![0, 2, 3]);
    }
}
