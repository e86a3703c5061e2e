//! Exhaustive automorphism search for small codes.
//!
//! The automorphism group of a code inside the symmetry group of the
//! Hamming graph splits along translation parts: elements sharing a
//! translation part form one coset of the subgroup A0 of pure coordinate
//! permutations preserving the code.  For a code containing 0 the
//! translation part must itself be a codeword, so the search runs one
//! backtracking pass per codeword t, matching the translated code onto the
//! code column by column.  The group order is |A0| times the number of
//! translation parts that extend to an automorphism, and the returned
//! generators are a pruned generating set of A0 together with one
//! representative per translation part.
//!
//! Column assignments are pruned by multiset agreement of row patterns
//! over the assigned columns; at full depth that agreement is exactly the
//! statement that the permutation maps the translated code onto the code.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::groups::haut::{GroupGens, HammingAut};
use crate::groups::perm::Perm;
use crate::groups::schreier::StabilizerChain;
use crate::word::Word;

/// Largest coordinate count the exhaustive search accepts.
pub const MAX_SEARCH_M: usize = 12;
/// Largest code size the exhaustive search accepts.
pub const MAX_SEARCH_WORDS: u128 = 64;

#[derive(Clone, Debug)]
pub struct AutSearchResult {
    pub gens: GroupGens,
    /// Exact order of the full automorphism group of the code.
    pub order: u128,
    /// Order of the subgroup of pure coordinate permutations (after
    /// translating the code to contain 0).
    pub perm_part_order: u128,
    /// Number of translation parts realized by automorphisms.
    pub translation_parts: usize,
}

struct Search {
    m: usize,
    rows_b: Vec<Word>,
    rows_c: Vec<Word>,
    all_solutions: bool,
    solutions: Vec<Perm>,
}

impl Search {
    /// Backtracking over images of domain column `depth`; `pat_b[w]` and
    /// `pat_c[w]` hold row patterns over the columns assigned so far, in
    /// assignment order.
    fn descend(
        &mut self,
        depth: usize,
        images: &mut Vec<usize>,
        used: u32,
        pat_b: &[u64],
        pat_c: &[u64],
    ) -> bool {
        if depth == self.m {
            let perm = Perm::new(images.clone()).unwrap();
            debug_assert!({
                let mapped: std::collections::BTreeSet<Word> =
                    self.rows_b.iter().map(|b| perm.apply(b)).collect();
                mapped == self.rows_c.iter().copied().collect()
            });
            self.solutions.push(perm);
            return !self.all_solutions;
        }
        let n = self.rows_b.len();
        let mut next_b: Vec<u64> = Vec::with_capacity(n);
        for (w, b) in self.rows_b.iter().enumerate() {
            next_b.push(pat_b[w] | (u64::from(b.get(depth)) << depth));
        }
        let mut sorted_b = next_b.clone();
        sorted_b.sort_unstable();
        let mut next_c: Vec<u64> = vec![0; n];
        let mut sorted_c: Vec<u64> = vec![0; n];
        for j in 0..self.m {
            if used >> j & 1 == 1 {
                continue;
            }
            for (w, c) in self.rows_c.iter().enumerate() {
                next_c[w] = pat_c[w] | (u64::from(c.get(j)) << depth);
            }
            sorted_c.copy_from_slice(&next_c);
            sorted_c.sort_unstable();
            if sorted_b != sorted_c {
                continue;
            }
            images.push(j);
            let stop = self.descend(depth + 1, images, used | 1 << j, &next_b, &next_c);
            images.pop();
            if stop {
                return true;
            }
        }
        false
    }

    fn run(rows_b: Vec<Word>, rows_c: Vec<Word>, m: usize, all_solutions: bool) -> Vec<Perm> {
        let mut s = Search {
            m,
            rows_b,
            rows_c,
            all_solutions,
            solutions: Vec::new(),
        };
        let n = s.rows_b.len();
        let mut images = Vec::with_capacity(m);
        s.descend(0, &mut images, 0, &vec![0u64; n], &vec![0u64; n]);
        s.solutions
    }
}

/// Compute the full automorphism group of a small code by exhaustive
/// search.  Requires m <= 12 and at most 64 codewords.
pub fn automorphism_search(c: &Code) -> Result<AutSearchResult> {
    let m = c.len();
    if m > MAX_SEARCH_M || c.size() > MAX_SEARCH_WORDS {
        return Err(Error::Unsupported(format!(
            "automorphism search is limited to m <= {MAX_SEARCH_M} and {MAX_SEARCH_WORDS} words, got m = {m}, size = {}",
            c.size()
        )));
    }
    if c.size() == 0 {
        return Err(Error::Undefined("automorphisms of an empty code".into()));
    }
    let mut words = c.enumerate()?;
    words.sort();
    // Translate so that 0 is a codeword; conjugating by that translation
    // at the end carries automorphisms back to the original code.
    let c0 = words[0];
    let words: Vec<Word> = {
        let mut v: Vec<Word> = words.iter().map(|w| w.xor(&c0)).collect();
        v.sort();
        v
    };

    let perm_solutions = Search::run(words.clone(), words.clone(), m, true);
    let perm_part_order = perm_solutions.len() as u128;

    let mut a0_gens: Vec<Perm> = Vec::new();
    let mut chain = StabilizerChain::new(m, &[], &[])?;
    for p in &perm_solutions {
        if !chain.contains(p) {
            a0_gens.push(p.clone());
            chain = StabilizerChain::new(m, &a0_gens, &[])?;
        }
    }
    debug_assert_eq!(chain.order(), perm_part_order);

    let mut translation_parts = 1usize;
    let mut mixed_reps: Vec<HammingAut> = Vec::new();
    for t in words.iter().skip(1) {
        let shifted: Vec<Word> = {
            let mut v: Vec<Word> = words.iter().map(|w| w.xor(t)).collect();
            v.sort();
            v
        };
        let found = Search::run(shifted, words.clone(), m, false);
        if let Some(p) = found.into_iter().next() {
            translation_parts += 1;
            mixed_reps.push(HammingAut::new(*t, p)?);
        }
    }

    let order = perm_part_order * translation_parts as u128;
    let mut gens: Vec<HammingAut> = a0_gens.into_iter().map(HammingAut::permutation).collect();
    gens.extend(mixed_reps);
    if gens.is_empty() {
        gens.push(HammingAut::identity(m));
    }
    if !c0.is_zero() {
        let shift = HammingAut::translation(c0);
        gens = gens
            .iter()
            .map(|x| shift.then(x).then(&shift))
            .collect();
    }
    let group = GroupGens::new(m, "automorphism-search", gens)?;
    debug_assert!(group.preserves_code(c));
    Ok(AutSearchResult {
        gens: group,
        order,
        perm_part_order,
        translation_parts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_space_automorphisms() {
        let m = 2;
        let c = Code::linear(m, &["10".parse().unwrap(), "01".parse().unwrap()]);
        let r = automorphism_search(&c).unwrap();
        assert_eq!(r.order, 8);
        assert_eq!(r.perm_part_order, 2);
        assert_eq!(r.translation_parts, 4);
        assert!(r.gens.preserves_code(&c));
    }

    #[test]
    fn repetition_code_automorphisms() {
        let m = 4;
        let c = Code::linear(m, &["1111".parse().unwrap()]);
        let r = automorphism_search(&c).unwrap();
        assert_eq!(r.order, 48);
        assert_eq!(r.perm_part_order, 24);
        assert_eq!(r.translation_parts, 2);
    }

    #[test]
    fn even_weight_code_automorphisms() {
        let m = 3;
        let c = Code::linear(m, &["110".parse().unwrap(), "011".parse().unwrap()]);
        let r = automorphism_search(&c).unwrap();
        assert_eq!(r.order, 24);
        assert_eq!(r.perm_part_order, 6);
        assert_eq!(r.translation_parts, 4);
    }

    #[test]
    fn asymmetric_code_has_small_group() {
        let m = 5;
        let c = Code::explicit(
            m,
            vec![
                "00000".parse::<Word>().unwrap(),
                "11000".parse().unwrap(),
                "10100".parse().unwrap(),
            ],
        );
        let r = automorphism_search(&c).unwrap();
        // The three words sit at pairwise distance 2, so the word set can
        // be permuted like a triangle (three translation parts), the two
        // touched coordinates 1, 2 can swap, and so can the two untouched
        // coordinates 3, 4.
        assert_eq!(r.order, 12);
        assert_eq!(r.perm_part_order, 4);
        assert_eq!(r.translation_parts, 3);
        assert!(r
            .gens
            .gens
            .iter()
            .any(|g| g.t.is_zero() && g.p.image(1) == 2));
    }

    #[test]
    fn code_without_zero_is_translated_and_conjugated_back() {
        let m = 3;
        let c = Code::explicit(m, vec!["100".parse::<Word>().unwrap(), "010".parse().unwrap()]);
        let r = automorphism_search(&c).unwrap();
        assert!(r.gens.preserves_code(&c));
        assert_eq!(r.order, 4);
    }

    #[test]
    fn oversized_inputs_are_rejected() {
        let big = Code::linear(13, &[Word::from_support(13, &[0])]);
        assert!(automorphism_search(&big).is_err());
        let wide = Code::linear(
            8,
            &(0..7)
                .map(|i| Word::from_support(8, &[i, i + 1]))
                .collect::<Vec<_>>(),
        );
        assert!(automorphism_search(&wide).is_err());
    }
}
