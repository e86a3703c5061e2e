//! Arithmetic in the four-element field.
//!
//! Elements are 0, 1, w, w^2 encoded as 0..=3, where w is a root of
//! x^2 + x + 1.  With the encoding 2 = w and 3 = w + 1 = w^2, addition is
//! bitwise XOR and multiplication is a small table.  The numeric order
//! 0 < 1 < w < w^2 is used wherever field elements are compared.

/// A field element, one of 0..=3.
pub type F4 = u8;

pub const ZERO: F4 = 0;
pub const ONE: F4 = 1;
pub const OMEGA: F4 = 2;
pub const OMEGA2: F4 = 3;

pub const ELEMENTS: [F4; 4] = [0, 1, 2, 3];

/// Addition (characteristic 2, so also subtraction).
#[inline]
pub fn add(a: F4, b: F4) -> F4 {
    a ^ b
}

const MUL: [[F4; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];

#[inline]
pub fn mul(a: F4, b: F4) -> F4 {
    MUL[a as usize][b as usize]
}

/// Multiplicative inverse; panics on zero.
#[inline]
pub fn inv(a: F4) -> F4 {
    match a {
        1 => 1,
        2 => 3,
        3 => 2,
        _ => panic!("zero has no inverse"),
    }
}

/// The field automorphism x -> x^2; fixes 0 and 1, swaps w and w^2.
#[inline]
pub fn frobenius(a: F4) -> F4 {
    mul(a, a)
}
