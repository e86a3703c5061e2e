//! Permutations of coordinate positions.
//!
//! A permutation stores the image of each point: `p.image(i)` is where point
//! i goes.  Acting on a word moves the bit at position i to position
//! `image(i)`, so supports transform covariantly with points.

use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n).collect() }
    }

    /// Build from the image list, validating bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Parse(format!("not a permutation of 0..{n}")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    /// Move every set bit of w from position i to position image(i).
    pub fn apply(&self, w: &Word) -> Word {
        assert_eq!(self.degree(), w.len());
        let mut out = Word::zero(w.len());
        for i in w.support() {
            out.set(self.images[i], true);
        }
        out
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// Cycle structure as sorted cycle lengths (fixed points included).
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lens = Vec::new();
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort();
        lens
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_order_is_left_to_right() {
        let a = Perm::new(vec![1, 0, 2]).unwrap();
        let b = Perm::new(vec![0, 2, 1]).unwrap();
        let ab = a.then(&b);
        // Point 0: a sends it to 1, then b sends 1 to 2.
        assert_eq!(ab.image(0), 2);
        assert_eq!(ab.image(2), 1);
    }

    #[test]
    fn inverse_undoes_application() {
        let p = Perm::new(vec![2, 0, 3, 1]).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        let w: Word = "1100".parse().unwrap();
        assert_eq!(p.inverse().apply(&p.apply(&w)), w);
    }

    #[test]
    fn word_action_is_covariant_with_points() {
        let p = Perm::new(vec![1, 2, 0]).unwrap();
        let w: Word = "100".parse().unwrap();
        assert_eq!(p.apply(&w).to_string(), "010");
        let composed = p.then(&p);
        assert_eq!(composed.apply(&w), p.apply(&p.apply(&w)));
    }

    #[test]
    fn order_and_cycles() {
        let p = Perm::new(vec![1, 2, 0, 4, 3, 5]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycle_lengths(), vec![1, 2, 3]);
        assert_eq!(Perm::identity(5).order(), 1);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert!(Perm::new(vec![0, 3]).is_err());
    }
}
