//! The binary Golay code and the family of codes reached from it by
//! deleting one or two coordinates.
//!
//! The extended Golay code is the span of the 759 blocks of the Steiner
//! system S(5, 8, 24): a self-dual [24, 12, 8] code whose minimum-weight
//! words are exactly the blocks.  With the plane-based coordinates of the
//! Steiner system, the three points outside the plane sit at positions 21,
//! 22 and 23, and every code here is produced by removing those positions
//! from the back, so the surviving coordinates always form a prefix.
//!
//! Removing position 23 gives two classical codes of length 23: the
//! perfect [23, 12, 7] Golay code (delete the coordinate from every word)
//! and its dual, the [23, 11, 8] code spanned by the blocks avoiding the
//! removed point (keep only the words that were zero there).  Removing
//! position 22 as well yields the [22, 12, 6] twice-punctured code, its
//! [22, 10, 8] dual, the [22, 11, 6] even-weight subcode, and the
//! [22, 11, 7] code punctured at one deleted point and shortened at the
//! other.  The last of those depends on the order of the two deletions:
//! the two orders give distinct, equivalent codes swapped by any
//! automorphism of the length-23 code exchanging the deleted points.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::word::Word;
use crate::zoo::witt::WittSystem;

fn check_linear(code: Code, m: usize, dim: usize, delta: usize, what: &str) -> Result<Code> {
    let ok = code.len() == m && code.dim() == Some(dim) && code.min_distance()? == delta;
    if !ok {
        return Err(Error::Construction(format!(
            "{what}: expected [{m}, {dim}, {delta}], got [{}, {}, {}]",
            code.len(),
            code.dim().unwrap_or(0),
            code.min_distance()?
        )));
    }
    Ok(code)
}

/// The self-dual [24, 12, 8] extended Golay code, spanned by the blocks of
/// the Steiner system.
pub fn golay24() -> Result<Code> {
    let witt = WittSystem::new()?;
    let code = Code::linear(24, witt.blocks());
    let code = check_linear(code, 24, 12, 8, "extended Golay code")?;
    if code.dual()? != code {
        return Err(Error::Construction("extended Golay code is not self-dual".into()));
    }
    if code.weight_distribution()?[8] != 759 {
        return Err(Error::Construction("minimum-weight words do not match the blocks".into()));
    }
    Ok(code)
}

/// The perfect [23, 12, 7] Golay code, the length-24 code punctured at its
/// last position.
pub fn golay23() -> Result<Code> {
    check_linear(golay24()?.puncture(23)?, 23, 12, 7, "Golay code")
}

/// The [23, 11, 8] dual of the Golay code, the length-24 code shortened at
/// its last position.
pub fn golay23_dual() -> Result<Code> {
    let code = check_linear(golay24()?.shorten(23)?, 23, 11, 8, "dual Golay code")?;
    if code != golay23()?.dual()? {
        return Err(Error::Construction("shortening did not produce the dual".into()));
    }
    Ok(code)
}

/// The [22, 12, 6] Golay code punctured at both deleted positions.
pub fn golay22() -> Result<Code> {
    check_linear(golay23()?.puncture(22)?, 22, 12, 6, "twice-punctured Golay code")
}

/// The [22, 10, 8] dual of the twice-punctured code, spanned by the blocks
/// avoiding both deleted points.
pub fn golay22_dual() -> Result<Code> {
    let code = check_linear(golay22()?.dual()?, 22, 10, 8, "twice-shortened Golay code")?;
    let witt = WittSystem::new()?;
    let avoiding: Vec<Word> = witt
        .blocks_selected(&[], &[22, 23])
        .iter()
        .map(|b| Word::from_support(22, &b.support()))
        .collect();
    if code != Code::linear(22, &avoiding) {
        return Err(Error::Construction(
            "dual of the twice-punctured code is not spanned by the avoiding blocks".into(),
        ));
    }
    Ok(code)
}

/// The [22, 11, 6] even-weight subcode of the twice-punctured code, equal
/// to its dual extended by the all-ones word.
pub fn golay22_even() -> Result<Code> {
    let code = check_linear(golay22()?.even_subcode(), 22, 11, 6, "even subcode")?;
    if code != golay22_dual()?.adjoin(&[Word::all_ones(22)])? {
        return Err(Error::Construction(
            "even subcode differs from the dual plus the all-ones word".into(),
        ));
    }
    Ok(code)
}

/// The [22, 11, 7] code obtained by puncturing the length-24 code at its
/// last position and shortening the result at the next.
pub fn golay22_mixed() -> Result<Code> {
    check_linear(golay23()?.shorten(22)?, 22, 11, 7, "punctured-then-shortened code")
}

/// The companion of the punctured-then-shortened code with the roles of
/// the two deleted points exchanged: shorten the length-24 code first,
/// then puncture.  Equivalent but not equal to its companion.
pub fn golay22_mixed_swapped() -> Result<Code> {
    check_linear(golay24()?.shorten(23)?.puncture(22)?, 22, 11, 7, "shortened-then-punctured code")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extended_code_weight_distribution() {
        let g24 = golay24().unwrap();
        let wd = g24.weight_distribution().unwrap();
        let expected: [(usize, u128); 7] =
            [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1), (4, 0), (20, 0)];
        for (k, count) in expected {
            assert_eq!(wd[k], count, "weight {k}");
        }
    }

    #[test]
    fn perfect_code_weight_distribution_and_sphere_packing() {
        let g23 = golay23().unwrap();
        let wd = g23.weight_distribution().unwrap();
        assert_eq!(wd[7], 253);
        assert_eq!(wd[8], 506);
        assert_eq!(wd[23], 1);
        // Perfect: balls of radius 3 partition the space.
        let ball: u128 = 1 + 23 + 253 + 1771;
        assert_eq!(g23.size() * ball, 1 << 23);
    }

    #[test]
    fn extension_recovers_the_extended_code() {
        let g23 = golay23().unwrap();
        assert_eq!(g23.extend_parity(), golay24().unwrap());
    }

    #[test]
    fn length_22_family_fits_together() {
        let g22 = golay22().unwrap();
        let dual = golay22_dual().unwrap();
        let even = golay22_even().unwrap();
        assert!(dual.is_subcode_of(&even).unwrap());
        assert!(even.is_subcode_of(&g22).unwrap());
        assert_eq!(g22.dual().unwrap(), dual);
        assert_eq!(even.dual().unwrap(), even, "the even subcode is self-dual");
    }

    #[test]
    fn mixed_deletion_orders_give_twins() {
        let s = golay22_mixed().unwrap();
        let t = golay22_mixed_swapped().unwrap();
        assert_ne!(s, t, "the two deletion orders differ as labeled codes");
        assert_eq!(s.weight_distribution().unwrap(), t.weight_distribution().unwrap());
        let wd = s.weight_distribution().unwrap();
        assert_eq!(wd[7], 176);
        assert_eq!(wd[8], 330);
    }

    #[test]
    fn block_classes_span_the_length_22_codes() {
        // Sorting the 759 blocks by how they meet the two deleted points
        // recovers each length-22 code as the span of one class, restricted
        // to the surviving coordinates.  Blocks through both deleted points
        // restrict to weight-6 words, so their span stays inside the
        // even-weight subcode and equals it; the full block set spans the
        // twice-punctured code itself.
        let witt = WittSystem::new().unwrap();
        let front: Vec<usize> = (0..22).collect();
        let span = |include: &[usize], exclude: &[usize]| {
            let rows: Vec<Word> =
                witt.blocks_selected(include, exclude).iter().map(|b| b.restrict(&front)).collect();
            (rows.len(), Code::linear(22, &rows))
        };
        let (n_both, span_both) = span(&[22, 23], &[]);
        assert_eq!(n_both, 77);
        assert_eq!(span_both, golay22_even().unwrap());
        let (n_all, span_all) = span(&[], &[]);
        assert_eq!(n_all, 759);
        assert_eq!(span_all, golay22().unwrap());
        let (n_last, span_last) = span(&[23], &[22]);
        assert_eq!(n_last, 176);
        assert_eq!(span_last, golay22_mixed().unwrap());
        let (n_middle, span_middle) = span(&[22], &[23]);
        assert_eq!(n_middle, 176);
        assert_eq!(span_middle, golay22_mixed_swapped().unwrap());
    }

    #[test]
    fn shortened_code_words_are_the_zero_extensions() {
        let g24 = golay24().unwrap();
        let g23d = golay23_dual().unwrap();
        for w in g23d.basis().unwrap() {
            assert!(g24.contains(&w.extend(false)));
        }
    }
}
