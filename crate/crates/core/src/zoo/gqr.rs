//! Quadratic-residue modules on the projective line over F_r.
//!
//! Coordinates are the r + 1 points of the projective line: field elements
//! at their own indices, the point at infinity last.  The group of
//! interest is generated by the translations x -> x + 1 (and x -> x + g in
//! non-prime fields), the square multiplication x -> g^2 x, and the Weyl
//! flip x -> -1/x; together these give the projective special linear group
//! of degree two, of order r(r^2 - 1)/2 for odd r.
//!
//! When r is congruent to 1 or 7 modulo 8, the permutation module over F_2
//! contains a pair of invariant submodules of dimension (r + 1)/2, swapped
//! by any non-square multiplication x -> g x.  Each is spanned by the
//! orbit of the indicator of the nonzero squares, completed at infinity
//! and possibly complemented on the field part; the constructor tries the
//! four candidate seeds in a fixed order, keeps the first whose orbit span
//! has dimension (r + 1)/2, and fails for r in the other residue classes,
//! where no such module exists.  For r congruent to 3 modulo 4 the module
//! is self-dual; for r congruent to 1 modulo 4 its dual is its twin.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::groups::perm::Perm;
use crate::word::Word;
use crate::zoo::ff::SmallField;

/// A half-dimension invariant module of the projective line, with the
/// group data used to spin it.
pub struct QrModule {
    pub r: u16,
    /// The [r + 1, (r + 1)/2] module spanned by the seed orbit.
    pub code: Code,
    /// Its image under a non-square multiplication.
    pub twin: Code,
    /// Whether the seed's field part was complemented (indicator of zero
    /// and the non-squares instead of the nonzero squares).
    pub complemented_seed: bool,
    /// The seed's bit at infinity.
    pub infinity_bit: bool,
    /// Generators of the projective special linear group as coordinate
    /// permutations.
    pub group: Vec<Perm>,
    /// A non-square multiplication extending the group to the projective
    /// general linear group.
    pub nonsquare_scaling: Perm,
}

/// Permutation of the projective line from a map on indices.
fn line_perm(r: u16, f: impl Fn(u16) -> u16, infinity_to: u16, from_infinity: u16) -> Result<Perm> {
    let mut images = vec![0usize; r as usize + 1];
    for x in 0..r {
        images[x as usize] = if x == infinity_to { r as usize } else { f(x) as usize };
    }
    images[r as usize] = from_infinity as usize;
    Perm::new(images)
}

/// Generators of the projective special linear group on the line over F_r:
/// translations, the square scaling, and x -> -1/x.
pub fn psl2_generators(field: &SmallField) -> Result<Vec<Perm>> {
    let r = field.q();
    let infinity = r;
    let mut gens = Vec::new();
    gens.push(line_perm(r, |x| field.add(x, 1), r, infinity)?);
    if field.degree() > 1 {
        let g = field.generator();
        gens.push(line_perm(r, |x| field.add(x, g), r, infinity)?);
    }
    let g = field.generator();
    let g2 = field.mul(g, g);
    gens.push(line_perm(r, |x| field.mul(g2, x), r, infinity)?);
    // x -> -1/x swaps zero and infinity.
    gens.push(line_perm(r, |x| if x == 0 { 0 } else { field.neg(field.inv(x)) }, 0, 0)?);
    Ok(gens)
}

/// The non-square scaling x -> g x, which together with the special group
/// generates the projective general linear group.
pub fn pgl2_extra_generator(field: &SmallField) -> Result<Perm> {
    let r = field.q();
    let g = field.generator();
    line_perm(r, |x| field.mul(g, x), r, r)
}

/// Smallest invariant subspace containing the seed.
fn orbit_span(m: usize, seed: Word, gens: &[Perm]) -> Result<Code> {
    let mut code = Code::linear(m, &[seed]);
    loop {
        let mut grew = false;
        let basis = code.basis().unwrap().to_vec();
        for w in &basis {
            for g in gens {
                let img = g.apply(w);
                if !code.contains(&img) {
                    code = code.adjoin(&[img])?;
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(code);
        }
    }
}

pub fn quadratic_residue_module(r: u16) -> Result<QrModule> {
    let field = SmallField::new(r)?;
    if field.p() == 2 {
        return Err(Error::Unsupported("the line must have odd characteristic".into()));
    }
    let m = r as usize + 1;
    let group = psl2_generators(&field)?;
    let squares: Vec<usize> =
        field.elements().filter(|&x| x != 0 && field.is_square(x)).map(usize::from).collect();
    let half = m / 2;
    for complemented_seed in [false, true] {
        for infinity_bit in [false, true] {
            let mut seed = Word::from_support(m, &squares);
            if complemented_seed {
                for x in 0..r as usize {
                    seed.flip(x);
                }
            }
            seed.set(m - 1, infinity_bit);
            let code = orbit_span(m, seed, &group)?;
            if code.dim() != Some(half) {
                continue;
            }
            let nonsquare_scaling = pgl2_extra_generator(&field)?;
            let twin_basis: Vec<Word> =
                code.basis().unwrap().iter().map(|w| nonsquare_scaling.apply(w)).collect();
            let twin = Code::linear(m, &twin_basis);
            if twin.dim() != Some(half) {
                return Err(Error::Construction("twin module has the wrong dimension".into()));
            }
            let expected_dual = if r % 4 == 3 { &code } else { &twin };
            if &code.dual()? != expected_dual {
                return Err(Error::Construction(format!(
                    "module over F_{r} does not satisfy its duality law"
                )));
            }
            return Ok(QrModule {
                r,
                code,
                twin,
                complemented_seed,
                infinity_bit,
                group,
                nonsquare_scaling,
            });
        }
    }
    Err(Error::Construction(format!(
        "no half-dimension invariant module on the line over F_{r}"
    )))
}
