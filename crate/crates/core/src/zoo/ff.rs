//! Arithmetic tables for small finite fields.
//!
//! The constructions in this crate need concrete arithmetic in fields of
//! prime and prime-power order well beyond F_2 and F_4: prime fields for
//! Paley-style and quadratic-residue constructions, F_8 and F_9 for groups
//! acting on small projective lines and Hermitian curves, and F_25 for the
//! plane of order 25.  Elements of F_{p^k} are indexed 0..q by their
//! coefficient vectors in the polynomial basis, little-endian in p, so that
//! 0 and 1 are the field's zero and one and, for prime fields, the index is
//! the residue itself.  The reducing polynomial is the lexicographically
//! first monic irreducible of degree k, and the distinguished generator is
//! the smallest element of multiplicative order q - 1, which makes every
//! table here a pure function of q.

use crate::error::{Error, Result};

/// Largest supported field order; tables are quadratic in q.
pub const MAX_FIELD: u16 = 256;

/// A finite field of order q = p^k with precomputed tables.
pub struct SmallField {
    p: u16,
    k: u32,
    q: u16,
    add: Vec<u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    frob: Vec<u16>,
    generator: u16,
    square: Vec<bool>,
}

fn factor_prime_power(q: u16) -> Option<(u16, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u16;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut k = 0;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            return if rest == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// Polynomials over F_p as little-endian coefficient vectors, trailing
/// zeros trimmed.
fn poly_trim(mut a: Vec<u16>) -> Vec<u16> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u16], b: &[u16], p: u16) -> Vec<u16> {
    let mut r: Vec<u16> = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while poly_trim(r.clone()).len() > db {
        let r_trim = poly_trim(r.clone());
        let dr = r_trim.len() - 1;
        let factor = r_trim[dr] * lead_inv % p;
        r = r_trim;
        for (i, &bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = (r[idx] + p * p - factor * bc % p) % p;
        }
    }
    poly_trim(r)
}

fn mod_inv(a: u16, p: u16) -> u16 {
    let mut result = 1u32;
    let mut base = a as u32 % p as u32;
    let mut e = p as u32 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u32;
        }
        base = base * base % p as u32;
        e >>= 1;
    }
    result as u16
}

/// True if the monic polynomial is divisible by no monic polynomial of
/// degree between 1 and half its own; degree is small throughout.
fn poly_irreducible(f: &[u16], p: u16) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut g = vec![0u16; d + 1];
            let mut c = code;
            for gi in g.iter_mut().take(d) {
                *gi = (c % p as u64) as u16;
                c /= p as u64;
            }
            g[d] = 1;
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn find_irreducible(p: u16, k: u32) -> Vec<u16> {
    let count = (p as u64).pow(k);
    for code in 0..count {
        let mut f = vec![0u16; k as usize + 1];
        let mut c = code;
        for fi in f.iter_mut().take(k as usize) {
            *fi = (c % p as u64) as u16;
            c /= p as u64;
        }
        f[k as usize] = 1;
        if poly_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist");
}

fn digits(mut e: u16, p: u16, k: u32) -> Vec<u16> {
    let mut d = vec![0u16; k as usize];
    for di in d.iter_mut() {
        *di = e % p;
        e /= p;
    }
    d
}

fn undigits(d: &[u16], p: u16) -> u16 {
    let mut e = 0u32;
    for &di in d.iter().rev() {
        e = e * p as u32 + di as u32;
    }
    e as u16
}

impl SmallField {
    pub fn new(q: u16) -> Result<SmallField> {
        if q > MAX_FIELD {
            return Err(Error::Unsupported(format!("field order {q} above {MAX_FIELD}")));
        }
        let (p, k) = factor_prime_power(q)
            .ok_or_else(|| Error::Construction(format!("{q} is not a prime power")))?;
        let qs = q as usize;
        let mut add = vec![0u16; qs * qs];
        let mut mul = vec![0u16; qs * qs];
        if k == 1 {
            for a in 0..q as u32 {
                for b in 0..q as u32 {
                    add[(a * q as u32 + b) as usize] = ((a + b) % q as u32) as u16;
                    mul[(a * q as u32 + b) as usize] = (a * b % q as u32) as u16;
                }
            }
        } else {
            let modulus = find_irreducible(p, k);
            for a in 0..q {
                let da = digits(a, p, k);
                for b in 0..q {
                    let db = digits(b, p, k);
                    let sum: Vec<u16> =
                        da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                    add[a as usize * qs + b as usize] = undigits(&sum, p);
                    let mut prod = vec![0u16; 2 * k as usize - 1];
                    for (i, &x) in da.iter().enumerate() {
                        for (j, &y) in db.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + x * y) % p;
                        }
                    }
                    let mut rem = poly_rem(&prod, &modulus, p);
                    rem.resize(k as usize, 0);
                    mul[a as usize * qs + b as usize] = undigits(&rem, p);
                }
            }
        }
        let mut inv = vec![0u16; qs];
        for a in 1..q {
            for b in 1..q {
                if mul[a as usize * qs + b as usize] == 1 {
                    inv[a as usize] = b;
                    break;
                }
            }
        }
        let mut frob = vec![0u16; qs];
        for a in 0..q {
            let mut x = a;
            for _ in 1..p {
                x = mul[a as usize * qs + x as usize];
            }
            frob[a as usize] = x;
        }
        let mut square = vec![false; qs];
        for a in 0..q {
            square[mul[a as usize * qs + a as usize] as usize] = true;
        }
        let mut generator = 0;
        'outer: for g in 2..q {
            let mut x = g;
            for order in 1..q as u32 {
                if x == 1 {
                    if order == q as u32 - 1 {
                        generator = g;
                        break 'outer;
                    }
                    break;
                }
                x = mul[g as usize * qs + x as usize];
            }
        }
        if q <= 3 {
            generator = q - 1;
        }
        Ok(SmallField { p, k, q, add, mul, inv, frob, generator, square })
    }

    pub fn q(&self) -> u16 {
        self.q
    }

    pub fn p(&self) -> u16 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: u16) -> u16 {
        // (p - 1) a, which is -a since the characteristic kills p a.
        let mut x = a;
        for _ in 2..self.p {
            x = self.add(x, a);
        }
        x
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    /// Multiplicative inverse; zero has none and maps to zero.
    pub fn inv(&self, a: u16) -> u16 {
        debug_assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    pub fn div(&self, a: u16, b: u16) -> u16 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: u16, mut e: u64) -> u16 {
        let mut result = 1;
        let mut base = a;
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// The image of a under x -> x^p.
    pub fn frobenius(&self, a: u16) -> u16 {
        self.frob[a as usize]
    }

    /// For fields of even degree, the involutory automorphism x -> x^{p^{k/2}}.
    pub fn conjugate(&self, a: u16) -> u16 {
        debug_assert!(self.k % 2 == 0, "conjugation needs even degree");
        let mut x = a;
        for _ in 0..self.k / 2 {
            x = self.frobenius(x);
        }
        x
    }

    /// Smallest element of multiplicative order q - 1.
    pub fn generator(&self) -> u16 {
        self.generator
    }

    /// True when a is a square in the field; zero counts as a square.
    pub fn is_square(&self, a: u16) -> bool {
        self.square[a as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::gf4;

    #[test]
    fn matches_the_dedicated_gf4_tables() {
        let f = SmallField::new(4).unwrap();
        for a in 0..4u16 {
            for b in 0..4u16 {
                assert_eq!(f.add(a, b), gf4::add(a as u8, b as u8) as u16);
                assert_eq!(f.mul(a, b), gf4::mul(a as u8, b as u8) as u16);
            }
            if a != 0 {
                assert_eq!(f.inv(a), gf4::inv(a as u8) as u16);
            }
            assert_eq!(f.frobenius(a), gf4::frobenius(a as u8) as u16);
        }
    }

    #[test]
    fn field_axioms_hold_in_every_needed_order() {
        for q in [2u16, 3, 4, 5, 7, 8, 9, 11, 23, 25, 27, 31, 41] {
            let f = SmallField::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1, "q={q} a={a}");
                }
                // The multiplicative group has exponent q - 1.
                assert_eq!(f.pow(a, q as u64), a, "q={q} a={a}");
            }
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(
                        f.frobenius(f.add(a, b)),
                        f.add(f.frobenius(a), f.frobenius(b)),
                        "Frobenius is additive"
                    );
                    assert_eq!(
                        f.frobenius(f.mul(a, b)),
                        f.mul(f.frobenius(a), f.frobenius(b))
                    );
                }
            }
            for a in f.elements() {
                for b in f.elements() {
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn generator_has_full_order_and_squares_have_index_two() {
        for q in [9u16, 11, 23, 25, 31, 41] {
            let f = SmallField::new(q).unwrap();
            let g = f.generator();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1u16;
            for _ in 0..q - 1 {
                seen.insert(x);
                x = f.mul(x, g);
            }
            assert_eq!(seen.len(), q as usize - 1, "generator order in F_{q}");
            let squares = f.elements().filter(|&a| f.is_square(a)).count();
            assert_eq!(squares, (q as usize - 1) / 2 + 1, "squares incl. zero in F_{q}");
        }
    }

    #[test]
    fn conjugation_in_f25_is_the_fifth_power_map() {
        let f = SmallField::new(25).unwrap();
        for a in f.elements() {
            assert_eq!(f.conjugate(a), f.pow(a, 5));
            assert_eq!(f.conjugate(f.conjugate(a)), a);
            // Norm and trace to F_5 land in the prime subfield (indices 0..5).
            let norm = f.mul(a, f.conjugate(a));
            let trace = f.add(a, f.conjugate(a));
            assert!(norm < 5 && trace < 5);
        }
    }

    #[test]
    fn non_prime_powers_are_rejected() {
        assert!(SmallField::new(6).is_err());
        assert!(SmallField::new(12).is_err());
        assert!(SmallField::new(1).is_err());
    }
}
