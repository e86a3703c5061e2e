//! Distance distributions and the MacWilliams transform, in exact arithmetic.
//!
//! For a code C of size N in H(m,2) the inner distribution is
//! A_k = |{(x,y) in C^2 : d(x,y) = k}| / N, and the dual distribution is its
//! Krawtchouk transform B_k = (1/N) * sum_x A_x K_k(x).  Delsarte's theorem
//! makes every B_k nonnegative; the number of nonzero B_k with k >= 1 is the
//! external distance s, which bounds the covering radius of the code.
//!
//! For a linear code A is the weight distribution and B is the weight
//! distribution of the dual code, which is what the MacWilliams identity
//! checks here verify.  Everything is BigInt/BigRational; no floats appear.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub fn binomial(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut num = BigInt::one();
    for i in 0..r {
        num *= BigInt::from(n - i);
        num /= BigInt::from(i + 1);
    }
    num
}

/// Table of binary Krawtchouk values K_k(x) for fixed m, built by the
/// three-term recurrence (k+1) K_{k+1}(x) = (m-2x) K_k(x) - (m-k+1) K_{k-1}(x).
pub struct Krawtchouk {
    pub m: usize,
    table: Vec<Vec<BigInt>>,
}

impl Krawtchouk {
    pub fn new(m: usize) -> Krawtchouk {
        let mut table: Vec<Vec<BigInt>> = Vec::with_capacity(m + 1);
        table.push(vec![BigInt::one(); m + 1]);
        if m >= 1 {
            table.push((0..=m).map(|x| BigInt::from(m as i64 - 2 * x as i64)).collect());
        }
        for k in 1..m {
            let mut row = Vec::with_capacity(m + 1);
            for x in 0..=m {
                let t = BigInt::from(m as i64 - 2 * x as i64) * &table[k][x]
                    - BigInt::from((m - k + 1) as i64) * &table[k - 1][x];
                let (q, r) = num::Integer::div_rem(&t, &BigInt::from((k + 1) as i64));
                debug_assert!(r.is_zero(), "krawtchouk recurrence must divide exactly");
                row.push(q);
            }
            table.push(row);
        }
        Krawtchouk { m, table }
    }

    pub fn value(&self, k: usize, x: usize) -> &BigInt {
        &self.table[k][x]
    }
}

/// K_k(x) for H(m,2) from the defining alternating sum; the slow reference
/// used to validate the recurrence.
pub fn krawtchouk_sum(m: usize, k: usize, x: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..=k.min(x) {
        let term = binomial(x, j) * binomial(m - x, k - j);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Inner distribution, stored as ordered-pair counts so that nothing is lost
/// to division: pair_counts[k] * 1/N = A_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerDistribution {
    pub m: usize,
    pub code_size: u128,
    pub pair_counts: Vec<u128>,
}

impl InnerDistribution {
    pub fn a(&self, k: usize) -> BigRational {
        BigRational::new(BigInt::from(self.pair_counts[k]), BigInt::from(self.code_size))
    }

    /// A as exact rationals, index 0..=m.
    pub fn a_vec(&self) -> Vec<BigRational> {
        (0..=self.m).map(|k| self.a(k)).collect()
    }

    pub fn from_pair_counts(m: usize, code_size: u128, pair_counts: Vec<u128>) -> Self {
        assert_eq!(pair_counts.len(), m + 1);
        InnerDistribution { m, code_size, pair_counts }
    }
}

/// Inner distribution of a code.  Linear codes use weight enumeration
/// (translation invariance makes A the weight distribution); explicit codes
/// use a full pair scan, gated at 2^16 words.
pub fn inner_distribution(c: &crate::code::Code) -> Result<InnerDistribution> {
    let m = c.len();
    if c.is_linear() {
        let wd = c.weight_distribution()?;
        let n = c.size();
        let pair_counts = wd.into_iter().map(|a| a * n).collect();
        return Ok(InnerDistribution { m, code_size: n, pair_counts });
    }
    let words = c.word_list().unwrap();
    if words.len() > 1 << 16 {
        return Err(Error::Unsupported(format!(
            "pair scan over {} words exceeds 2^16",
            words.len()
        )));
    }
    let mut pair_counts = vec![0u128; m + 1];
    pair_counts[0] = words.len() as u128;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            pair_counts[words[i].distance(&words[j])] += 2;
        }
    }
    Ok(InnerDistribution { m, code_size: words.len() as u128, pair_counts })
}

#[derive(Clone, Debug)]
pub struct DualDistribution {
    pub m: usize,
    pub b: Vec<BigRational>,
}

impl DualDistribution {
    /// External distance: the number of nonzero B_k with k >= 1.
    pub fn external_distance(&self) -> usize {
        self.b.iter().skip(1).filter(|v| !v.is_zero()).count()
    }

    /// Indices k >= 1 with B_k nonzero.
    pub fn nonzero_indices(&self) -> Vec<usize> {
        (1..self.b.len()).filter(|&k| !self.b[k].is_zero()).collect()
    }
}

/// Krawtchouk transform of an inner distribution.  Fails if any transform
/// coefficient is negative, which certifies the input was not the inner
/// distribution of any code.
pub fn dual_distribution(a: &InnerDistribution) -> Result<DualDistribution> {
    let m = a.m;
    let kr = Krawtchouk::new(m);
    let n2 = BigInt::from(a.code_size) * BigInt::from(a.code_size);
    let mut b = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let mut acc = BigInt::zero();
        for x in 0..=m {
            if a.pair_counts[x] != 0 {
                acc += BigInt::from(a.pair_counts[x]) * kr.value(k, x);
            }
        }
        let v = BigRational::new(acc, n2.clone());
        if v.is_negative() {
            return Err(Error::BadDistribution(format!("transform coefficient B_{k} = {v} < 0")));
        }
        b.push(v);
    }
    debug_assert!(b[0].is_one(), "B_0 must normalize to 1");
    Ok(DualDistribution { m, b })
}

/// MacWilliams transform: weight distribution of the dual of a linear code
/// with the given weight distribution.  Exact integrality is enforced.
pub fn macwilliams_dual_weights(m: usize, size: &BigInt, wd: &[BigInt]) -> Result<Vec<BigInt>> {
    assert_eq!(wd.len(), m + 1);
    let kr = Krawtchouk::new(m);
    let mut out = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let mut acc = BigInt::zero();
        for x in 0..=m {
            if !wd[x].is_zero() {
                acc += &wd[x] * kr.value(k, x);
            }
        }
        let (q, r) = num::Integer::div_rem(&acc, size);
        if !r.is_zero() || q.is_negative() {
            return Err(Error::BadDistribution(format!(
                "MacWilliams transform is not a weight distribution at index {k}"
            )));
        }
        out.push(q);
    }
    Ok(out)
}

/// Sphere-packing comparison |C| <= 2^(m - d + 1) (Singleton bound).
pub fn singleton_check(m: usize, size: u128, d: usize) -> bool {
    assert!(d >= 1 && d <= m);
    let bound = BigInt::one() << (m - d + 1);
    BigInt::from(size) <= bound
}
