//! Automorphisms of the binary Hamming graph.
//!
//! Every automorphism of H(m,2) is a translation followed by a coordinate
//! permutation: w maps to p(w + t).  Composition is written left to right,
//! so `x.then(y)` acts as x first; its translation part is t_x + p_x^{-1}(t_y)
//! and its permutation part is p_x followed by p_y.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::groups::perm::Perm;
use crate::word::Word;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HammingAut {
    pub t: Word,
    pub p: Perm,
}

impl HammingAut {
    pub fn identity(m: usize) -> HammingAut {
        HammingAut { t: Word::zero(m), p: Perm::identity(m) }
    }

    pub fn translation(t: Word) -> HammingAut {
        let m = t.len();
        HammingAut { t, p: Perm::identity(m) }
    }

    pub fn permutation(p: Perm) -> HammingAut {
        let m = p.degree();
        HammingAut { t: Word::zero(m), p }
    }

    pub fn new(t: Word, p: Perm) -> Result<HammingAut> {
        if t.len() != p.degree() {
            return Err(Error::LengthMismatch(t.len(), p.degree()));
        }
        Ok(HammingAut { t, p })
    }

    pub fn degree(&self) -> usize {
        self.t.len()
    }

    pub fn apply(&self, w: &Word) -> Word {
        self.p.apply(&w.xor(&self.t))
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &HammingAut) -> HammingAut {
        assert_eq!(self.degree(), other.degree());
        HammingAut {
            t: self.t.xor(&self.p.inverse().apply(&other.t)),
            p: self.p.then(&other.p),
        }
    }

    pub fn inverse(&self) -> HammingAut {
        HammingAut { t: self.p.apply(&self.t), p: self.p.inverse() }
    }

    pub fn is_identity(&self) -> bool {
        self.t.is_zero() && self.p.is_identity()
    }

    /// Does this automorphism map the code onto itself?
    pub fn preserves(&self, code: &Code) -> bool {
        match code.basis() {
            Some(rows) => {
                // Affine image of a linear code: need p(t) in the code and
                // p(row) in the code for each basis row.
                code.contains(&self.p.apply(&self.t))
                    && rows.iter().all(|r| code.contains(&self.p.apply(r)))
            }
            None => {
                let words = code.word_list().expect("explicit");
                words.iter().all(|w| code.contains(&self.apply(w)))
            }
        }
    }
}

/// A generating set for a subgroup of the Hamming graph automorphisms.
#[derive(Clone, Debug)]
pub struct GroupGens {
    pub m: usize,
    pub label: String,
    pub gens: Vec<HammingAut>,
}

impl GroupGens {
    pub fn new(m: usize, label: impl Into<String>, gens: Vec<HammingAut>) -> Result<GroupGens> {
        for g in &gens {
            if g.degree() != m {
                return Err(Error::LengthMismatch(g.degree(), m));
            }
        }
        Ok(GroupGens { m, label: label.into(), gens })
    }

    /// Pure coordinate permutations acting on m points.
    pub fn from_perms(m: usize, label: impl Into<String>, perms: Vec<Perm>) -> Result<GroupGens> {
        GroupGens::new(m, label, perms.into_iter().map(HammingAut::permutation).collect())
    }

    /// Do all generators fix the code setwise?
    pub fn preserves_code(&self, code: &Code) -> bool {
        self.gens.iter().all(|g| g.preserves(code))
    }

    /// First generator that moves the code off itself, with a violated word.
    pub fn preservation_failure(&self, code: &Code) -> Option<(usize, Word)> {
        for (i, g) in self.gens.iter().enumerate() {
            if code.is_linear() {
                let image_of_zero = g.p.apply(&g.t);
                if !code.contains(&image_of_zero) {
                    return Some((i, Word::zero(self.m)));
                }
                for r in code.basis().unwrap() {
                    if !code.contains(&g.p.apply(r)) {
                        return Some((i, *r));
                    }
                }
            } else {
                for w in code.word_list().unwrap() {
                    if !code.contains(&g.apply(w)) {
                        return Some((i, *w));
                    }
                }
            }
        }
        None
    }

    /// Are all translation parts zero?
    pub fn is_permutation_group(&self) -> bool {
        self.gens.iter().all(|g| g.t.is_zero())
    }

    /// The permutation parts alone.
    pub fn perm_parts(&self) -> Vec<Perm> {
        self.gens.iter().map(|g| g.p.clone()).collect()
    }

    /// Extend with translations by a basis of the given linear code.
    pub fn with_code_translations(&self, code: &Code) -> Result<GroupGens> {
        let rows = code
            .basis()
            .ok_or_else(|| Error::Unsupported("translation group needs a linear code".into()))?;
        let mut gens = self.gens.clone();
        gens.extend(rows.iter().map(|r| HammingAut::translation(*r)));
        GroupGens::new(self.m, self.label.clone(), gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn composition_matches_sequential_application() {
        let x = HammingAut::new(w("1010"), Perm::new(vec![1, 2, 3, 0]).unwrap()).unwrap();
        let y = HammingAut::new(w("0110"), Perm::new(vec![2, 0, 1, 3]).unwrap()).unwrap();
        let xy = x.then(&y);
        for v in 0..16u64 {
            let word = Word::from_index(4, v);
            assert_eq!(xy.apply(&word), y.apply(&x.apply(&word)));
        }
    }

    #[test]
    fn inverse_composes_to_identity() {
        let x = HammingAut::new(w("1100"), Perm::new(vec![3, 1, 0, 2]).unwrap()).unwrap();
        assert!(x.then(&x.inverse()).is_identity());
        assert!(x.inverse().then(&x).is_identity());
    }

    #[test]
    fn pure_translation_moves_zero_to_its_vector() {
        let t = HammingAut::translation(w("10110"));
        assert_eq!(t.apply(&Word::zero(5)), w("10110"));
    }

    #[test]
    fn associativity_on_samples() {
        let a = HammingAut::new(w("100"), Perm::new(vec![1, 0, 2]).unwrap()).unwrap();
        let b = HammingAut::new(w("011"), Perm::new(vec![2, 1, 0]).unwrap()).unwrap();
        let c = HammingAut::new(w("111"), Perm::new(vec![0, 2, 1]).unwrap()).unwrap();
        assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
    }

    #[test]
    fn linear_preservation_matches_wordwise_check() {
        let code = Code::linear(4, &[w("1100"), w("0011")]);
        let explicit = Code::explicit(4, code.enumerate().unwrap());
        let good = HammingAut::new(w("1100"), Perm::new(vec![1, 0, 3, 2]).unwrap()).unwrap();
        let bad = HammingAut::new(w("1000"), Perm::identity(4)).unwrap();
        assert!(good.preserves(&code) && good.preserves(&explicit));
        assert!(!bad.preserves(&code) && !bad.preserves(&explicit));
    }

    #[test]
    fn translation_gens_preserve_their_code() {
        let code = Code::linear(6, &[w("111000"), w("000111")]);
        let g = GroupGens::new(6, "trivial", vec![]).unwrap();
        let with = g.with_code_translations(&code).unwrap();
        assert_eq!(with.gens.len(), 2);
        assert!(with.preserves_code(&code));
        assert!(!with.is_permutation_group());
    }

    #[test]
    fn preservation_failure_pinpoints_generator() {
        let code = Code::linear(4, &[w("1111")]);
        let ok = HammingAut::permutation(Perm::new(vec![1, 2, 0, 3]).unwrap());
        let bad = HammingAut::translation(w("1000"));
        let g = GroupGens::new(4, "mixed", vec![ok, bad]).unwrap();
        let (idx, _) = g.preservation_failure(&code).unwrap();
        assert_eq!(idx, 1);
    }
}
