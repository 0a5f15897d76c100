//! Closed-form counting formulas: the central-binomial difference counting
//! one-dimensional constituents of even tensor powers, and the rank formula
//! it powers.
//!
//! Binomials run on an exact big-integer Pascal recurrence; nothing here
//! touches floating point.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Row `n` of Pascal's triangle as big integers.
fn pascal_row(n: u64) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigUint::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigUint::one());
        row = next;
    }
    row
}

/// Exact binomial coefficient C(n, k); zero outside 0 ≤ k ≤ n.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    pascal_row(n)[k as usize].clone()
}

/// C(2n, n) − C(2n, n−1): the number of one-dimensional subrepresentations
/// of the 2n-th tensor power of the standard representation of GL₂.
pub fn lemma_even_count(n: u64) -> BigUint {
    assert!(n >= 1, "n must be positive");
    binomial(2 * n, n as i64) - binomial(2 * n, n as i64 - 1)
}

/// Input to the rank formula: stabilizer order m, degree d, with m | d.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TateRankInput {
    pub m: u64,
    pub d: u64,
}

impl TateRankInput {
    pub fn new(m: u64, d: u64) -> Result<Self> {
        if m == 0 || d == 0 || d % m != 0 {
            return Err(Error::NotADivisor(m, d));
        }
        Ok(TateRankInput { m, d })
    }
}

/// The rank formula: 0 for odd m, otherwise
/// (C(m, m/2) − C(m, m/2−1))^{d/m}.
pub fn tate_rank(inp: TateRankInput) -> BigUint {
    if inp.m % 2 == 1 {
        return BigUint::zero();
    }
    let base = lemma_even_count(inp.m / 2);
    let mut acc = BigUint::one();
    for _ in 0..inp.d / inp.m {
        acc = acc * &base;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: the Catalan recurrence C₀ = 1,
    /// C_{k+1} = Σ Cᵢ C_{k−i}.
    fn catalan(n: usize) -> BigUint {
        let mut c = vec![BigUint::one()];
        for k in 0..n {
            let mut next = BigUint::zero();
            for i in 0..=k {
                next += &c[i] * &c[k - i];
            }
            c.push(next);
        }
        c[n].clone()
    }

    #[test]
    fn small_counts() {
        assert_eq!(lemma_even_count(1), BigUint::from(1u32));
        assert_eq!(lemma_even_count(2), BigUint::from(2u32));
        assert_eq!(lemma_even_count(5), catalan(5));
        assert_eq!(lemma_even_count(5), BigUint::from(42u32));
    }

    #[test]
    fn counts_are_catalan_numbers() {
        for n in 1..=10u64 {
            assert_eq!(lemma_even_count(n), catalan(n as usize));
        }
    }

    #[test]
    fn counts_strictly_increase() {
        for n in 1..=12u64 {
            assert!(lemma_even_count(n + 1) > lemma_even_count(n));
        }
    }

    #[test]
    fn rank_formula_values() {
        let r = |m, d| tate_rank(TateRankInput::new(m, d).unwrap());
        assert_eq!(r(2, 2), BigUint::from(1u32));
        assert_eq!(r(4, 4), BigUint::from(2u32));
        assert_eq!(r(3, 6), BigUint::zero());
        assert_eq!(r(2, 8), BigUint::from(1u32));
    }

    #[test]
    fn rank_is_multiplicative_in_the_exponent() {
        for m in [2u64, 4, 6, 8] {
            for q in 1..=3u64 {
                let d = m * q;
                let per = tate_rank(TateRankInput::new(m, m).unwrap());
                let mut acc = BigUint::one();
                for _ in 0..q {
                    acc = acc * &per;
                }
                assert_eq!(tate_rank(TateRankInput::new(m, d).unwrap()), acc);
            }
        }
    }

    #[test]
    fn non_divisor_is_an_error() {
        assert!(matches!(
            TateRankInput::new(4, 6),
            Err(Error::NotADivisor(4, 6))
        ));
    }
}
