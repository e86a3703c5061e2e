//! Complete regularity of codes.
//!
//! A code C with covering radius rho partitions the ambient space into cells
//! C_0 = C, C_1, ..., C_rho by distance to the code.  The code is completely
//! regular when the number of codewords at each distance from a vertex v
//! depends only on the cell of v, and i-regular when that holds for every
//! vertex within distance i of the code.  These are the distance-partition
//! invariants that make the quotient of the Hamming graph behave like a
//! distance-regular graph.
//!
//! For a linear code the check reduces to coset weight enumerators: the
//! distance profile of v against C is exactly the weight distribution of the
//! coset v + C, so C is completely regular precisely when cosets with equal
//! minimum weight share their whole weight distribution.  That route costs one
//! enumeration per coset instead of |space| x |C| distance computations, and
//! it is used whenever the code is linear.

use crate::code::Code;
use crate::comb::for_each_combination_lex;
use crate::error::{Error, Result};
use crate::partition::{distance_partition, MAX_SPACE_LOG2};
use crate::word::Word;
use rayon::prelude::*;

/// Largest redundancy m - dim for which syndrome tables are built.
pub const MAX_SYNDROME_LOG2: usize = 26;

/// Syndrome decoding table for a linear code: one minimum-weight leader per
/// coset, ties broken toward the lexicographically least support.
pub struct CosetTable {
    m: usize,
    check_rows: Vec<Word>,
    leaders: Vec<Word>,
}

impl CosetTable {
    pub fn new(code: &Code) -> Result<CosetTable> {
        if !code.is_linear() {
            return Err(Error::Unsupported("coset tables need a linear code".into()));
        }
        let m = code.len();
        let dual = code.dual()?;
        let r = dual.dim().unwrap();
        if r > MAX_SYNDROME_LOG2 {
            return Err(Error::SpaceTooLarge(r));
        }
        let check_rows = dual.basis().unwrap().to_vec();
        let n = 1usize << r;
        let mut leaders: Vec<Option<Word>> = vec![None; n];
        let mut remaining = n;
        // Ascending weight, lexicographic support order within a weight: the
        // first word reaching a syndrome is its canonical leader.
        'outer: for wt in 0..=m {
            let mut full = false;
            for_each_combination_lex(m, wt, |supp| {
                if full {
                    return;
                }
                let w = Word::from_support(m, supp);
                let s = syndrome(&check_rows, &w);
                if leaders[s as usize].is_none() {
                    leaders[s as usize] = Some(w);
                    remaining -= 1;
                    if remaining == 0 {
                        full = true;
                    }
                }
            });
            if remaining == 0 {
                break 'outer;
            }
        }
        let leaders = leaders.into_iter().map(|l| l.expect("every syndrome reached")).collect();
        Ok(CosetTable { m, check_rows, leaders })
    }

    pub fn len(&self) -> usize {
        self.leaders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaders.is_empty()
    }

    pub fn syndrome(&self, w: &Word) -> u32 {
        syndrome(&self.check_rows, w)
    }

    pub fn leader(&self, s: u32) -> &Word {
        &self.leaders[s as usize]
    }

    pub fn leaders(&self) -> &[Word] {
        &self.leaders
    }

    /// Distance from w to the code.
    pub fn distance_to_code(&self, w: &Word) -> usize {
        self.leader(self.syndrome(w)).weight()
    }

    /// Covering radius: the largest leader weight.
    pub fn covering_radius(&self) -> usize {
        self.leaders.iter().map(|l| l.weight()).max().unwrap_or(0)
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

fn syndrome(check_rows: &[Word], w: &Word) -> u32 {
    let mut s = 0u32;
    for (i, row) in check_rows.iter().enumerate() {
        if row.dot(w) {
            s |= 1 << i;
        }
    }
    s
}

/// Outcome of a regularity check.
#[derive(Clone, Debug)]
pub struct RegularityReport {
    /// Covering radius of the code.
    pub rho: usize,
    /// Cells that were required to be homogeneous (0..=checked_up_to).
    pub checked_up_to: usize,
    /// Whether every checked cell is homogeneous.
    pub regular: bool,
    /// Reference distance profile of each checked cell; profiles[i][k] counts
    /// codewords at distance k from a vertex of cell i.
    pub profiles: Vec<Vec<u64>>,
    /// First pair of vertices witnessing a failure, if any.
    pub violation: Option<RegularityViolation>,
}

/// Two vertices in the same cell whose distance profiles differ.
#[derive(Clone, Debug)]
pub struct RegularityViolation {
    pub cell: usize,
    pub reference: Word,
    pub other: Word,
}

/// Check i-regularity for every i <= s.
pub fn is_s_regular(code: &Code, s: usize) -> Result<RegularityReport> {
    regularity(code, Some(s))
}

/// Check complete regularity (homogeneous profiles out to the covering radius).
pub fn is_completely_regular(code: &Code) -> Result<RegularityReport> {
    regularity(code, None)
}

fn regularity(code: &Code, up_to: Option<usize>) -> Result<RegularityReport> {
    match code.dim() {
        Some(k) if code.len() - k <= MAX_SYNDROME_LOG2 => regularity_linear(code, up_to),
        _ => regularity_explicit(code, up_to),
    }
}

/// Linear route: group coset weight distributions by leader weight.
fn regularity_linear(code: &Code, up_to: Option<usize>) -> Result<RegularityReport> {
    let m = code.len();
    let table = CosetTable::new(code)?;
    let rho = table.covering_radius();
    let checked_up_to = up_to.unwrap_or(rho).min(rho);
    let mut profiles: Vec<Vec<u64>> = vec![Vec::new(); checked_up_to + 1];
    let mut reference: Vec<Option<Word>> = vec![None; checked_up_to + 1];
    let mut violation = None;
    for leader in table.leaders() {
        let d = leader.weight();
        if d > checked_up_to || violation.is_some() {
            continue;
        }
        let mut dist = vec![0u64; m + 1];
        code.for_each_word(|c| dist[c.distance(leader)] += 1)?;
        match reference[d] {
            None => {
                profiles[d] = dist;
                reference[d] = Some(*leader);
            }
            Some(first) => {
                if profiles[d] != dist {
                    violation = Some(RegularityViolation {
                        cell: d,
                        reference: first,
                        other: *leader,
                    });
                }
            }
        }
    }
    Ok(RegularityReport {
        rho,
        checked_up_to,
        regular: violation.is_none(),
        profiles,
        violation,
    })
}

/// Generic route: distance partition plus a parallel profile scan.
fn regularity_explicit(code: &Code, up_to: Option<usize>) -> Result<RegularityReport> {
    let m = code.len();
    if m > MAX_SPACE_LOG2 {
        return Err(Error::SpaceTooLarge(m));
    }
    let partition = distance_partition(code)?;
    let rho = partition.rho();
    let checked_up_to = up_to.unwrap_or(rho).min(rho);
    let codewords: Vec<u64> = {
        let mut v = Vec::with_capacity(code.size() as usize);
        code.for_each_word(|w| v.push(w.index()))?;
        v
    };
    // Reference profile per cell comes from the smallest vertex of the cell.
    let mut reference: Vec<Option<u64>> = vec![None; checked_up_to + 1];
    for v in 0..(1u64 << m) {
        let d = partition.dist(v);
        if d <= checked_up_to && reference[d].is_none() {
            reference[d] = Some(v);
            if reference.iter().all(|r| r.is_some()) {
                break;
            }
        }
    }
    let profile = |v: u64| -> Vec<u64> {
        let mut p = vec![0u64; m + 1];
        for &c in &codewords {
            p[(v ^ c).count_ones() as usize] += 1;
        }
        p
    };
    let profiles: Vec<Vec<u64>> = reference
        .iter()
        .map(|r| profile(r.expect("cell below covering radius is nonempty")))
        .collect();
    const CHUNK: u64 = 1 << 16;
    let chunks = ((1u64 << m) + CHUNK - 1) / CHUNK;
    let first_bad = (0..chunks)
        .into_par_iter()
        .filter_map(|chunk| {
            let lo = chunk * CHUNK;
            let hi = ((chunk + 1) * CHUNK).min(1u64 << m);
            for v in lo..hi {
                let d = partition.dist(v);
                if d <= checked_up_to && profile(v) != profiles[d] {
                    return Some(v);
                }
            }
            None
        })
        .min();
    let violation = first_bad.map(|v| {
        let d = partition.dist(v);
        RegularityViolation {
            cell: d,
            reference: Word::from_index(m, reference[d].unwrap()),
            other: Word::from_index(m, v),
        }
    });
    Ok(RegularityReport {
        rho,
        checked_up_to,
        regular: violation.is_none(),
        profiles,
        violation,
    })
}

/// A code written as the disjoint union of cosets of its kernel of
/// translations.
pub struct LinearDecomposition {
    /// All words t with t + C = C; always a subspace when 0 is a codeword.
    pub kernel: Code,
    /// Minimum representative of each kernel coset inside the code, ascending.
    pub coset_reps: Vec<Word>,
}

/// Split a code into cosets of its translation kernel.
pub fn maximal_linear_subcode(code: &Code) -> Result<LinearDecomposition> {
    if code.is_linear() {
        return Ok(LinearDecomposition {
            kernel: code.clone(),
            coset_reps: vec![Word::zero(code.len())],
        });
    }
    let words = code.word_list().unwrap();
    if !code.contains(&Word::zero(code.len())) {
        return Err(Error::Unsupported(
            "kernel decomposition needs the zero word in the code".into(),
        ));
    }
    let mut kernel_words = Vec::new();
    for t in words {
        if words.iter().all(|u| code.contains(&u.xor(t))) {
            kernel_words.push(*t);
        }
    }
    let kernel = Code::linear(code.len(), &kernel_words);
    // The kernel is closed under addition, so the span adds nothing new.
    assert_eq!(kernel.size() as usize, kernel_words.len(), "kernel must be a subspace");
    let mut seen = std::collections::HashSet::new();
    let mut coset_reps = Vec::new();
    for w in words {
        if seen.contains(w) {
            continue;
        }
        coset_reps.push(*w);
        kernel.for_each_word(|k| {
            seen.insert(w.xor(k));
        })?;
    }
    assert_eq!(coset_reps.len() * kernel_words.len(), words.len());
    Ok(LinearDecomposition { kernel, coset_reps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn repetition_code_is_completely_regular() {
        let c = Code::linear(5, &[w("11111")]);
        let r = is_completely_regular(&c).unwrap();
        assert_eq!(r.rho, 2);
        assert!(r.regular);
        assert_eq!(r.profiles[0], vec![1, 0, 0, 0, 0, 1]);
        assert_eq!(r.profiles[1], vec![0, 1, 0, 0, 1, 0]);
    }

    #[test]
    fn hamming_code_is_perfect_and_completely_regular() {
        let c = Code::linear(7, &[w("1101000"), w("0110100"), w("1110010"), w("1010001")]);
        let r = is_completely_regular(&c).unwrap();
        assert_eq!(r.rho, 1);
        assert!(r.regular);
        assert_eq!(r.profiles[1].iter().sum::<u64>(), 16);
        assert_eq!(r.profiles[1][1], 1, "perfect code: unique nearest codeword");
    }

    #[test]
    fn lopsided_code_fails_zero_regularity() {
        // The middle word 1000 sees two codewords at distance 1, the outer
        // words only one, so even the codeword cell is inhomogeneous.
        let c = Code::explicit(4, [w("0000"), w("1000"), w("1100")]);
        let r = is_s_regular(&c, 1).unwrap();
        assert!(!r.regular);
        let v = r.violation.unwrap();
        assert_eq!(v.cell, 0);
        assert_ne!(v.reference, v.other);
    }

    #[test]
    fn distance_pair_fails_only_at_the_first_cell_out() {
        // Two words at distance 3: the codeword cell is homogeneous, but
        // neighbours of one codeword moving toward the other differ from
        // neighbours moving away.
        let c = Code::explicit(6, [w("000000"), w("111000")]);
        let r = is_s_regular(&c, 1).unwrap();
        assert!(!r.regular);
        let v = r.violation.unwrap();
        assert_eq!(v.cell, 1);
    }

    #[test]
    fn linear_and_explicit_routes_agree() {
        let gens = [w("110000"), w("011000"), w("001100"), w("000110"), w("000011")];
        let linear = Code::linear(6, &gens);
        let explicit = Code::explicit(6, linear.enumerate().unwrap());
        let a = is_completely_regular(&linear).unwrap();
        let b = is_completely_regular(&explicit).unwrap();
        assert_eq!(a.rho, b.rho);
        assert_eq!(a.regular, b.regular);
        assert!(a.regular);
        assert_eq!(a.profiles, b.profiles);
    }

    #[test]
    fn coset_table_leaders_are_minimal() {
        let c = Code::linear(7, &[w("1101000"), w("0110100"), w("1110010"), w("1010001")]);
        let t = CosetTable::new(&c).unwrap();
        assert_eq!(t.len(), 8);
        assert_eq!(t.covering_radius(), 1);
        assert!(t.leader(t.syndrome(&Word::zero(7))).is_zero());
        // Every leader weight matches a brute-force nearest-codeword distance.
        let all = c.enumerate().unwrap();
        for v in 0..(1u64 << 7) {
            let word = Word::from_index(7, v);
            let best = all.iter().map(|c| c.distance(&word)).min().unwrap();
            assert_eq!(t.distance_to_code(&word), best);
        }
    }

    #[test]
    fn leader_ties_prefer_early_support() {
        // The even-weight code on 4 coordinates: the nonzero syndrome coset
        // consists of all odd words, so the leader must be weight 1 with the
        // earliest possible support.
        let c = Code::linear(4, &[w("1100"), w("0110"), w("0011")]);
        let t = CosetTable::new(&c).unwrap();
        let odd = t.leader(t.syndrome(&w("0001")));
        assert_eq!(*odd, w("1000"));
    }

    #[test]
    fn kernel_of_linear_code_is_itself() {
        let c = Code::linear(4, &[w("1100"), w("0011")]);
        let d = maximal_linear_subcode(&c).unwrap();
        assert_eq!(d.kernel, c);
        assert_eq!(d.coset_reps, vec![Word::zero(4)]);
    }

    #[test]
    fn kernel_of_coset_union() {
        let base = [w("0000"), w("1111")];
        let mut words: Vec<Word> = Vec::new();
        for t in [w("0000"), w("1000"), w("0100")] {
            for b in &base {
                words.push(b.xor(&t));
            }
        }
        let c = Code::explicit(4, words);
        let d = maximal_linear_subcode(&c).unwrap();
        assert_eq!(d.kernel.dim(), Some(1));
        assert_eq!(d.coset_reps, vec![w("0000"), w("1000"), w("0100")]);
    }

    #[test]
    fn kernel_trivial_when_no_translation_fixes_code() {
        let c = Code::explicit(3, [w("000"), w("110"), w("011")]);
        let d = maximal_linear_subcode(&c).unwrap();
        assert_eq!(d.kernel.dim(), Some(0));
        assert_eq!(d.coset_reps.len(), 3);
    }
}
