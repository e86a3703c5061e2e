//! The binary code of a Paley Hadamard matrix of order 12.
//!
//! Index the coordinates by the projective line over F_11: the eleven field
//! elements in positions 0..11 and a point at infinity in position 11.  The
//! base row of the matrix has entry -1 exactly at the squares of F_11
//! (zero included), entry +1 elsewhere and at infinity.  Translating the
//! field coordinates by each element of F_11 gives eleven rows, and the
//! all-minus-one row completes a 12 x 12 Hadamard matrix: distinct rows
//! agree in exactly six positions because each nonzero difference of the
//! square set is hit a constant number of times.
//!
//! Reading -1 entries as 1-bits turns each row and each negated row into a
//! binary word, and the resulting 24 words form the Hadamard code: a
//! nonlinear (12, 24, 6) code containing the zero and all-ones words, with
//! covering radius 4.  Deleting the infinity coordinate gives the punctured
//! Hadamard code, a (11, 24, 5) code of covering radius 3, whose words of
//! even weight form a (11, 12, 6) subcode.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::word::Word;

/// The squares of F_11 with zero included; differences of this set cover
/// every nonzero residue equally often, which is what makes the matrix
/// Hadamard.
const SQUARES_MOD_11: [usize; 6] = [0, 1, 3, 4, 5, 9];

/// The (12, 24, 6) code of the order-12 Paley Hadamard matrix.
pub fn hadamard12() -> Result<Code> {
    let m = 12;
    let ones = Word::all_ones(m);
    let mut words = Vec::with_capacity(24);
    for b in 0..11 {
        let support: Vec<usize> = SQUARES_MOD_11.iter().map(|&s| (s + b) % 11).collect();
        let row = Word::from_support(m, &support);
        words.push(row);
        words.push(row.xor(&ones));
    }
    words.push(ones);
    words.push(Word::zero(m));
    let code = Code::explicit(m, words);
    if code.size() != 24 {
        return Err(Error::Construction(format!(
            "Hadamard rows are not distinct: {} words",
            code.size()
        )));
    }
    let all = code.enumerate()?;
    for (i, u) in all.iter().enumerate() {
        for v in all.iter().skip(i + 1) {
            let d = u.distance(v);
            if d != 6 && d != 12 {
                return Err(Error::Construction(format!(
                    "rows at distance {d}, matrix is not Hadamard"
                )));
            }
        }
    }
    Ok(code)
}

/// The (11, 24, 5) code obtained by deleting the infinity coordinate.
pub fn punctured_hadamard() -> Result<Code> {
    let code = hadamard12()?.puncture(11)?;
    if code.size() != 24 || code.min_distance()? != 5 {
        return Err(Error::Construction("puncturing collapsed the Hadamard code".into()));
    }
    Ok(code)
}

/// The even-weight subcode of the punctured Hadamard code, a (11, 12, 6)
/// code.
pub fn hadamard_even() -> Result<Code> {
    let code = punctured_hadamard()?.even_subcode();
    if code.size() != 12 || code.min_distance()? != 6 {
        return Err(Error::Construction("even subcode has unexpected shape".into()));
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::{dual_distribution, inner_distribution};
    use crate::regular::is_completely_regular;

    #[test]
    fn hadamard_code_parameters() {
        let h = hadamard12().unwrap();
        assert_eq!(h.len(), 12);
        assert_eq!(h.size(), 24);
        assert_eq!(h.min_distance().unwrap(), 6);
        assert!(!h.is_linear());
        assert!(h.contains(&Word::zero(12)));
        assert!(h.contains(&Word::all_ones(12)));
    }

    #[test]
    fn hadamard_code_is_completely_regular_with_covering_radius_four() {
        // Every codeword has even weight, so the 2^11 even vertices can
        // only be covered to radius 2 by 24 * 67 < 2^11 of them: the
        // covering radius is at least 4, and the dual distribution puts it
        // at exactly 4.
        let h = hadamard12().unwrap();
        let report = is_completely_regular(&h).unwrap();
        assert!(report.regular);
        assert_eq!(report.rho, 4);
        let dual = dual_distribution(&inner_distribution(&h).unwrap()).unwrap();
        assert_eq!(dual.external_distance(), 4);
    }

    #[test]
    fn punctured_code_is_completely_regular_with_covering_radius_three() {
        let ph = punctured_hadamard().unwrap();
        assert_eq!(ph.len(), 11);
        let report = is_completely_regular(&ph).unwrap();
        assert!(report.regular);
        assert_eq!(report.rho, 3);
        let dual = dual_distribution(&inner_distribution(&ph).unwrap()).unwrap();
        assert_eq!(dual.external_distance(), 3);
    }

    #[test]
    fn punctured_inner_distribution_is_frozen() {
        let ph = punctured_hadamard().unwrap();
        let inner = inner_distribution(&ph).unwrap();
        let expected = |k: usize| match k {
            0 | 11 => 24u128,
            5 | 6 => 264,
            _ => 0,
        };
        for k in 0..=11 {
            assert_eq!(inner.pair_counts[k], expected(k), "pair count at distance {k}");
        }
    }

    #[test]
    fn even_subcode_shape() {
        let e = hadamard_even().unwrap();
        assert_eq!(e.len(), 11);
        assert_eq!(e.size(), 12);
        assert_eq!(e.min_distance().unwrap(), 6);
        assert!(e.enumerate().unwrap().iter().all(|w| w.weight() % 2 == 0));
        assert!(e.is_subcode_of(&punctured_hadamard().unwrap()).unwrap());
    }

    #[test]
    fn weight_distribution_of_the_hadamard_code() {
        let h = hadamard12().unwrap();
        let wd = h.weight_distribution().unwrap();
        assert_eq!(wd[0], 1);
        assert_eq!(wd[6], 22);
        assert_eq!(wd[12], 1);
        assert_eq!(wd.iter().sum::<u128>(), 24);
    }
}
