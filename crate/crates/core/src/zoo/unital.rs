//! Hermitian unitals in the projective plane over F_{q^2}.
//!
//! Fix the Hermitian form x0 conj(y2) + x1 conj(y1) + x2 conj(y0), where
//! conj is the involutory field automorphism a -> a^q.  Its isotropic
//! points form the Hermitian unital: q^3 + 1 plane points, met by every
//! line in either 1 or q + 1 points.  The q^2 (q^2 - q + 1) secant lines
//! cut out a 2-(q^3 + 1, q + 1, 1) design, the tangent count equals the
//! point count, and no line misses the unital.
//!
//! Plane points are normalized so the first nonzero coordinate is 1 and
//! enumerated in a fixed order; the unital keeps the induced order, and a
//! block is the indicator word of a secant section on the unital's
//! coordinates.  The binary span of the blocks is computed exactly; for
//! q = 5 it is a 105-dimensional code in 126 coordinates whose weight
//! enumerator is obtained through the MacWilliams transform applied to
//! its 21-dimensional dual.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::word::Word;
use crate::zoo::ff::SmallField;

/// The unital of the plane over F_{q^2}, with its secant design.
pub struct HermitianUnital {
    /// Order of the subfield fixed by conjugation.
    pub q: u16,
    /// The field of order q^2.
    pub field: SmallField,
    /// Every point of the plane, normalized, in generation order.
    pub plane_points: Vec<[u16; 3]>,
    /// Indices into `plane_points` of the isotropic points, ascending.
    pub unital: Vec<usize>,
    /// Secant sections as words on the unital's coordinates.
    pub blocks: Vec<Word>,
    /// Number of lines meeting the unital in a single point.
    pub tangent_count: usize,
}

/// All points of the projective plane over the field, normalized so the
/// first nonzero coordinate is 1, in lexicographic generation order.
pub fn projective_plane_points(field: &SmallField) -> Vec<[u16; 3]> {
    let q2 = field.q();
    let mut points = Vec::new();
    for y in 0..q2 {
        for z in 0..q2 {
            points.push([1, y, z]);
        }
    }
    for z in 0..q2 {
        points.push([0, 1, z]);
    }
    points.push([0, 0, 1]);
    points
}

impl HermitianUnital {
    pub fn new(q: u16) -> Result<HermitianUnital> {
        let field = SmallField::new(q * q)?;
        let plane_points = projective_plane_points(&field);
        let hermitian = |p: &[u16; 3]| {
            let t = field.add(
                field.mul(p[0], field.conjugate(p[2])),
                field.mul(p[2], field.conjugate(p[0])),
            );
            field.add(t, field.mul(p[1], field.conjugate(p[1])))
        };
        let unital: Vec<usize> =
            (0..plane_points.len()).filter(|&i| hermitian(&plane_points[i]) == 0).collect();
        let expected_points = q as usize * q as usize * q as usize + 1;
        if unital.len() != expected_points {
            return Err(Error::Construction(format!(
                "unital over F_{} has {} points, expected {expected_points}",
                q * q,
                unital.len()
            )));
        }
        let n = unital.len();
        let dot = |a: &[u16; 3], b: &[u16; 3]| {
            let mut acc = 0;
            for i in 0..3 {
                acc = field.add(acc, field.mul(a[i], b[i]));
            }
            acc
        };
        let mut blocks = Vec::new();
        let mut tangent_count = 0;
        for line in &plane_points {
            let section: Vec<usize> = (0..n)
                .filter(|&k| dot(line, &plane_points[unital[k]]) == 0)
                .collect();
            match section.len() {
                s if s == q as usize + 1 => blocks.push(Word::from_support(n, &section)),
                1 => tangent_count += 1,
                s => {
                    return Err(Error::Construction(format!(
                        "a line meets the unital in {s} points"
                    )))
                }
            }
        }
        let expected_blocks =
            (q as usize * q as usize) * (q as usize * q as usize - q as usize + 1);
        if blocks.len() != expected_blocks || tangent_count != expected_points {
            return Err(Error::Construction(format!(
                "secant/tangent counts {} / {tangent_count} are off",
                blocks.len()
            )));
        }
        Ok(HermitianUnital { q, field, plane_points, unital, blocks, tangent_count })
    }

    /// True when every pair of unital points lies in exactly one block.
    pub fn is_linear_space(&self) -> bool {
        let n = self.unital.len();
        let mut count = vec![0u8; n * n];
        for b in &self.blocks {
            let support = b.support();
            for (i, &x) in support.iter().enumerate() {
                for &y in support.iter().skip(i + 1) {
                    count[x * n + y] += 1;
                }
            }
        }
        (0..n).all(|x| ((x + 1)..n).all(|y| count[x * n + y] == 1))
    }

    /// The binary span of the blocks.
    pub fn block_span(&self) -> Code {
        Code::linear(self.unital.len(), &self.blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::macwilliams_dual_weights;
    use num::BigInt;

    #[test]
    fn small_unital_is_a_linear_space() {
        let u = HermitianUnital::new(3).unwrap();
        assert_eq!(u.unital.len(), 28);
        assert_eq!(u.blocks.len(), 63);
        assert_eq!(u.tangent_count, 28);
        assert!(u.blocks.iter().all(|b| b.weight() == 4));
        assert!(u.is_linear_space());
    }

    #[test]
    fn large_unital_is_a_linear_space() {
        let u = HermitianUnital::new(5).unwrap();
        assert_eq!(u.unital.len(), 126);
        assert_eq!(u.blocks.len(), 525);
        assert_eq!(u.tangent_count, 126);
        assert!(u.blocks.iter().all(|b| b.weight() == 6));
        assert!(u.is_linear_space());
    }

    #[test]
    fn block_span_over_f25_has_dimension_105() {
        let u = HermitianUnital::new(5).unwrap();
        let span = u.block_span();
        assert_eq!(span.dim(), Some(105));
        assert_eq!(span.dual().unwrap().dim(), Some(21));
    }

    #[test]
    fn span_weight_six_count_is_21525() {
        let u = HermitianUnital::new(5).unwrap();
        let span = u.block_span();
        let small = span.dual().unwrap();
        let wd = small.weight_distribution().unwrap();
        let wd_big: Vec<BigInt> = wd.iter().map(|&c| BigInt::from(c)).collect();
        let span_wd =
            macwilliams_dual_weights(126, &BigInt::from(small.size()), &wd_big).unwrap();
        assert_eq!(span_wd[6], BigInt::from(21525u32));
        // 21525 = 3 * 5^2 * 7 * 41 is not divisible by 31.
        assert_eq!(21525 % 31, 11);
        assert_eq!(3 * 25 * 7 * 41, 21525);
    }
}
