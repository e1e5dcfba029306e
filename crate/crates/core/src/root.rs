//! Integer square roots and exact square roots of rationals.
//!
//! The square root of a nonnegative integer is either an integer or
//! irrational, and the same holds for a reduced fraction p/q: √(p/q) is
//! rational exactly when both p and q are perfect squares. [`ExactRoot`]
//! carries that dichotomy structurally.

use alloc::format;
use alloc::string::String;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive};

use crate::{Error, ExactRational, Result};

/// `⌊√n⌋` by integer Newton iteration, starting above the root.
pub fn isqrt_floor_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    // 2^⌈bits/2⌉ > √n
    let mut x: u128 = 1 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// `Some(r)` with `r * r == n` when `n` is a perfect square.
pub fn integer_sqrt_u128(n: u128) -> Option<u128> {
    let r = isqrt_floor_u128(n);
    // r ≤ 2^64 - 1 so the square fits
    (r * r == n).then_some(r)
}

pub fn isqrt_floor(n: &BigUint) -> BigUint {
    if let Some(small) = n.to_u128() {
        return BigUint::from(isqrt_floor_u128(small));
    }
    let bits = n.bits();
    let mut x = BigUint::one() << bits.div_ceil(2);
    loop {
        let y: BigUint = (&x + n / &x) >> 1u32;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Exact integer square root: present iff `n` is a perfect square.
pub fn integer_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = isqrt_floor(n);
    (&r * &r == *n).then_some(r)
}

fn sqrt_nonneg_int(n: &BigInt) -> Option<BigInt> {
    integer_sqrt(n.magnitude()).map(|r| BigInt::from_biguint(Sign::Plus, r))
}

/// √radicand for a nonnegative rational, resolved eagerly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactRoot {
    radicand: ExactRational,
    resolved: Option<ExactRational>,
}

impl ExactRoot {
    pub fn new(radicand: ExactRational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        // BigRational keeps num/den coprime, so both must be squares
        let resolved = sqrt_nonneg_int(radicand.numer())
            .zip(sqrt_nonneg_int(radicand.denom()))
            .map(|(p, q)| ExactRational::new(p, q));
        Ok(ExactRoot { radicand, resolved })
    }

    /// Root of a value known to be a square.
    pub fn from_value(value: ExactRational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        Ok(ExactRoot {
            radicand: &value * &value,
            resolved: Some(value),
        })
    }

    pub fn radicand(&self) -> &ExactRational {
        &self.radicand
    }

    pub fn resolved(&self) -> Option<&ExactRational> {
        self.resolved.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.resolved.is_some()
    }

    /// The root as a nonnegative integer, when it is one.
    pub fn as_integer(&self) -> Option<BigUint> {
        self.resolved
            .as_ref()
            .filter(|r| r.is_integer())
            .and_then(|r| r.numer().to_biguint())
    }

    pub fn is_integer(&self) -> bool {
        self.as_integer().is_some()
    }

    /// Like `Display`, but writes an irrational root whose radicand has a
    /// square denominator as `√p/q` instead of `√(p/q²)`.
    pub fn surd_string(&self) -> String {
        if self.resolved.is_none() && !self.radicand.is_integer() {
            if let Some(q) = sqrt_nonneg_int(self.radicand.denom()) {
                return format!("√{}/{}", self.radicand.numer(), q);
            }
        }
        format!("{self}")
    }
}

impl fmt::Display for ExactRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.resolved {
            Some(r) => write!(f, "{r}"),
            None if self.radicand.is_integer() => write!(f, "√{}", self.radicand.numer()),
            None => write!(f, "√({})", self.radicand),
        }
    }
}

/// √q for a nonnegative rational `q`.
pub fn rational_sqrt(q: &ExactRational) -> Result<ExactRoot> {
    ExactRoot::new(q.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    #[test]
    fn integer_sqrt_examples() {
        assert_eq!(integer_sqrt_u128(576), Some(24));
        assert_eq!(integer_sqrt_u128(3), None);
        assert_eq!(integer_sqrt_u128(2304), Some(48));
        assert_eq!(integer_sqrt_u128(0), Some(0));
        assert_eq!(integer_sqrt_u128(1), Some(1));
    }

    #[test]
    fn floor_root_exhaustive_small() {
        let mut r = 0u128;
        for n in 0..100_000u128 {
            while (r + 1) * (r + 1) <= n {
                r += 1;
            }
            assert_eq!(isqrt_floor_u128(n), r, "n = {n}");
        }
    }

    #[test]
    fn floor_root_extremes() {
        assert_eq!(isqrt_floor_u128(u128::MAX), u64::MAX as u128);
        let r = u64::MAX as u128;
        assert_eq!(integer_sqrt_u128(r * r), Some(r));
        assert_eq!(integer_sqrt_u128(r * r - 1), None);
        assert_eq!(isqrt_floor_u128(r * r - 1), r - 1);
    }

    #[test]
    fn big_path_beyond_u128() {
        let r = BigUint::from(u128::MAX) * 7u32 + 3u32;
        let sq = &r * &r;
        assert_eq!(integer_sqrt(&sq), Some(r.clone()));
        assert_eq!(integer_sqrt(&(&sq + 1u32)), None);
        assert_eq!(isqrt_floor(&(&sq - 1u32)), &r - 1u32);
        assert_eq!(isqrt_floor(&(&sq + 2u32 * &r)), r);
    }

    #[test]
    fn rational_sqrt_examples() {
        assert_eq!(rational_sqrt(&q(9, 4)).unwrap().resolved(), Some(&q(3, 2)));
        assert!(!rational_sqrt(&q(2, 1)).unwrap().is_rational());
        let root = rational_sqrt(&q(2304, 16)).unwrap();
        assert_eq!(root.radicand(), &q(144, 1));
        assert_eq!(root.as_integer(), Some(BigUint::from(12u32)));
        assert_eq!(rational_sqrt(&q(-1, 4)), Err(Error::NegativeRadicand));
    }

    #[test]
    fn display_forms() {
        assert_eq!(format!("{}", rational_sqrt(&q(9, 4)).unwrap()), "3/2");
        assert_eq!(format!("{}", rational_sqrt(&q(3, 1)).unwrap()), "√3");
        assert_eq!(format!("{}", rational_sqrt(&q(3, 16)).unwrap()), "√(3/16)");
        assert_eq!(rational_sqrt(&q(3, 16)).unwrap().surd_string(), "√3/4");
        assert_eq!(rational_sqrt(&q(3, 8)).unwrap().surd_string(), "√(3/8)");
    }
}
