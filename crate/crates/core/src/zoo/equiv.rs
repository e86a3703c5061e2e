//! Coordinate equivalence between binary codes.
//!
//! Two codes on m coordinates are equivalent when some permutation of the
//! coordinates maps one onto the other.  The search below assigns images
//! for the first code's columns one at a time and prunes with a multiset
//! invariant: after assigning columns 0..=d, the multiset of codeword
//! patterns over those columns must agree with the multiset of patterns of
//! the second code over the chosen image columns.  At full depth the
//! agreement says precisely that the permutation maps the first code onto
//! the second, so the first complete assignment is returned.
//!
//! Codes whose words form a design restrict uniformly to small column
//! sets, which blinds the invariant at shallow depths: a code with dual
//! distance d' looks the same on every choice of fewer than d' columns.
//! Two measures keep the search fast anyway.  The words of minimum
//! nonzero weight are tracked as a second, sharper multiset channel, and
//! the first code's columns are visited with the support of one minimum
//! word first, so the late-depth collapse of that channel (a Steiner
//! system holds at most one block through a 5-set) arrives as early as
//! possible.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::groups::perm::Perm;
use crate::word::Word;

/// Largest coordinate count the equivalence search accepts; patterns over
/// assigned columns are packed into one u64 per codeword.
pub const MAX_EQUIV_M: usize = 64;

struct Channel {
    rows_a: Vec<Word>,
    rows_b: Vec<Word>,
}

impl Channel {
    /// Extend the first code's patterns by its column `col`, returning the
    /// new pattern vector and its sorted copy.
    fn extend_a(&self, pat: &[u64], col: usize, depth: usize) -> (Vec<u64>, Vec<u64>) {
        let next: Vec<u64> = self
            .rows_a
            .iter()
            .zip(pat)
            .map(|(w, p)| p | (u64::from(w.get(col)) << depth))
            .collect();
        let mut sorted = next.clone();
        sorted.sort_unstable();
        (next, sorted)
    }

    /// Extend the second code's patterns by its column `col` and check the
    /// multisets still agree; on agreement return the new pattern vector.
    fn extend_b(&self, pat: &[u64], col: usize, depth: usize, sorted_a: &[u64]) -> Option<Vec<u64>> {
        let next: Vec<u64> = self
            .rows_b
            .iter()
            .zip(pat)
            .map(|(w, p)| p | (u64::from(w.get(col)) << depth))
            .collect();
        let mut sorted = next.clone();
        sorted.sort_unstable();
        if sorted == sorted_a {
            Some(next)
        } else {
            None
        }
    }
}

struct Matcher {
    m: usize,
    /// Order in which the first code's columns are assigned.
    order: Vec<usize>,
    /// All codewords, then the words of minimum nonzero weight.
    channels: Vec<Channel>,
}

impl Matcher {
    fn descend(
        &self,
        depth: usize,
        images: &mut Vec<usize>,
        used: u64,
        pats: &[(Vec<u64>, Vec<u64>)],
    ) -> bool {
        if depth == self.m {
            return true;
        }
        let col_a = self.order[depth];
        let grown: Vec<(Vec<u64>, Vec<u64>)> = self
            .channels
            .iter()
            .zip(pats)
            .map(|(ch, (pa, _))| ch.extend_a(pa, col_a, depth))
            .collect();
        for j in 0..self.m {
            if used & (1 << j) != 0 {
                continue;
            }
            let mut next: Vec<(Vec<u64>, Vec<u64>)> = Vec::with_capacity(self.channels.len());
            let mut ok = true;
            for (k, ch) in self.channels.iter().enumerate() {
                match ch.extend_b(&pats[k].1, j, depth, &grown[k].1) {
                    Some(nb) => next.push((grown[k].0.clone(), nb)),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            images.push(j);
            if self.descend(depth + 1, images, used | (1 << j), &next) {
                return true;
            }
            images.pop();
        }
        false
    }
}

/// A coordinate permutation mapping `a` onto `b`, or None when the codes
/// are inequivalent.  The permutation sends column i of `a` to column
/// image(i) of `b`, so applying it to every word of `a` yields `b`.
pub fn code_equivalence(a: &Code, b: &Code) -> Result<Option<Perm>> {
    if a.len() != b.len() || a.size() != b.size() {
        return Ok(None);
    }
    let m = a.len();
    if m > MAX_EQUIV_M {
        return Err(Error::Unsupported(format!(
            "equivalence search limited to {MAX_EQUIV_M} coordinates, got {m}"
        )));
    }
    let rows_a = a.enumerate()?;
    let rows_b = b.enumerate()?;
    let mut wd_a: Vec<usize> = rows_a.iter().map(Word::weight).collect();
    let mut wd_b: Vec<usize> = rows_b.iter().map(Word::weight).collect();
    wd_a.sort_unstable();
    wd_b.sort_unstable();
    if wd_a != wd_b {
        return Ok(None);
    }
    let min_weight = wd_a.iter().copied().find(|&w| w > 0);
    let mut order: Vec<usize> = Vec::with_capacity(m);
    let mut channels = vec![Channel { rows_a: rows_a.clone(), rows_b: rows_b.clone() }];
    if let Some(delta) = min_weight {
        let min_a: Vec<Word> = rows_a.iter().copied().filter(|w| w.weight() == delta).collect();
        let min_b: Vec<Word> = rows_b.iter().copied().filter(|w| w.weight() == delta).collect();
        order.extend(min_a[0].support());
        channels.push(Channel { rows_a: min_a, rows_b: min_b });
    }
    for i in 0..m {
        if !order.contains(&i) {
            order.push(i);
        }
    }
    let matcher = Matcher { m, order, channels };
    let empty: Vec<(Vec<u64>, Vec<u64>)> = matcher
        .channels
        .iter()
        .map(|ch| (vec![0; ch.rows_a.len()], vec![0; ch.rows_b.len()]))
        .collect();
    let mut images = Vec::with_capacity(m);
    if !matcher.descend(0, &mut images, 0, &empty) {
        return Ok(None);
    }
    let mut final_images = vec![0usize; m];
    for (d, &j) in images.iter().enumerate() {
        final_images[matcher.order[d]] = j;
    }
    Ok(Some(Perm::new(final_images)?))
}

/// The translate t + C as an explicit code.
pub fn translated(code: &Code, t: &Word) -> Result<Code> {
    let words: Vec<Word> = code.enumerate()?.iter().map(|w| w.xor(t)).collect();
    Ok(Code::explicit(code.len(), words))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::gqr::quadratic_residue_module;
    use crate::zoo::golay::{golay22_mixed, golay22_mixed_swapped, golay23, golay24};
    use crate::zoo::menu::{differences_plus_hyperoval, line_span};
    use crate::zoo::nr::nordstrom_robinson15;

    fn assert_maps_onto(perm: &Perm, a: &Code, b: &Code) {
        let mapped: std::collections::BTreeSet<Word> =
            a.enumerate().unwrap().iter().map(|w| perm.apply(w)).collect();
        let target: std::collections::BTreeSet<Word> =
            b.enumerate().unwrap().into_iter().collect();
        assert_eq!(mapped, target);
    }

    #[test]
    fn code_is_equivalent_to_itself() {
        let c = golay23().unwrap();
        let perm = code_equivalence(&c, &c).unwrap().expect("self-equivalence");
        assert_maps_onto(&perm, &c, &c);
    }

    #[test]
    fn quadratic_residue_module_at_23_is_the_extended_golay_code() {
        let qr = quadratic_residue_module(23).unwrap();
        let golay = golay24().unwrap();
        assert_ne!(qr.code, golay);
        let perm = code_equivalence(&qr.code, &golay).unwrap().expect("equivalent");
        assert_maps_onto(&perm, &qr.code, &golay);
    }

    #[test]
    fn shortened_golay_twins_are_equivalent_but_distinct() {
        let s = golay22_mixed().unwrap();
        let t = golay22_mixed_swapped().unwrap();
        assert_ne!(s, t);
        let perm = code_equivalence(&s, &t).unwrap().expect("equivalent");
        assert_maps_onto(&perm, &s, &t);
        assert!(!perm.is_identity());
    }

    #[test]
    fn different_weight_distributions_are_rejected() {
        let a = line_span().unwrap();
        let b = differences_plus_hyperoval().unwrap();
        assert_eq!(a.dim(), b.dim());
        assert!(code_equivalence(&a, &b).unwrap().is_none());
    }

    #[test]
    fn translate_of_a_nonlinear_code_matches_it_under_equivalence() {
        let code = nordstrom_robinson15().unwrap();
        let parts = crate::regular::maximal_linear_subcode(&code).unwrap();
        let v = parts.kernel.enumerate().unwrap()[1];
        assert_eq!(translated(&code, &v).unwrap(), code);
        let rep = *parts.coset_reps.iter().find(|r| r.weight() > 0).unwrap();
        let shifted = translated(&code, &rep).unwrap();
        assert_ne!(shifted, code);
        let perm = code_equivalence(&shifted, &code).unwrap().expect("equivalent");
        assert_maps_onto(&perm, &shifted, &code);
    }
}
