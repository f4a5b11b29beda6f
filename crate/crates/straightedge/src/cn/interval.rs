//! Rational interval enclosures.
//!
//! Endpoints are exact rationals, so addition and multiplication are exact;
//! only square roots round, outward, to a requested precision.

use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A closed rational interval `[lo, hi]` guaranteed to contain the exact
/// value it encloses.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    pub(crate) fn point(q: BigRational) -> Interval {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    /// `Some(sign)` when the interval pins the sign down, `None` when it
    /// straddles zero.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn disjoint(&self, other: &Interval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    pub(crate) fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub(crate) fn mul(&self, other: &Interval) -> Interval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        Interval { lo, hi }
    }

    /// Outer bounds on the square root, `prec` bits. The lower endpoint is
    /// clamped at zero (enclosures of positive values may dip below it).
    pub(crate) fn sqrt_outer(&self, prec: u32) -> Interval {
        let lo = if self.lo.is_positive() {
            sqrt_lower(&self.lo, prec)
        } else {
            BigRational::zero()
        };
        debug_assert!(!self.hi.is_negative(), "enclosure of a nonnegative value");
        Interval {
            lo,
            hi: sqrt_upper(&self.hi, prec),
        }
    }
}

/// `1 / 2^bits` as a rational.
pub(crate) fn pow2_inv(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << (bits as usize))
}

/// A rational lower bound on `√q` within `2⁻ᵖʳᵉᶜ`, for `q > 0`.
fn sqrt_lower(q: &BigRational, prec: u32) -> BigRational {
    let scaled = q.numer() * q.denom() << (2 * prec as usize);
    let s = scaled.sqrt();
    BigRational::new(s, q.denom() << (prec as usize))
}

/// A rational upper bound on `√q` within `2⁻ᵖʳᵉᶜ`, for `q ≥ 0`.
fn sqrt_upper(q: &BigRational, prec: u32) -> BigRational {
    let scaled = q.numer() * q.denom() << (2 * prec as usize);
    let s = scaled.sqrt();
    BigRational::new(s + 1, q.denom() << (prec as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn sqrt_bounds_bracket() {
        let two = rat(2, 1);
        let lo = sqrt_lower(&two, 30);
        let hi = sqrt_upper(&two, 30);
        assert!(&lo * &lo <= two);
        assert!(&hi * &hi >= two);
        assert!(hi - lo <= pow2_inv(29));
    }

    #[test]
    fn mul_covers_sign_mixes() {
        let a = Interval { lo: rat(-2, 1), hi: rat(3, 1) };
        let b = Interval { lo: rat(-5, 1), hi: rat(1, 1) };
        let p = a.mul(&b);
        assert_eq!(p.lo, rat(-15, 1));
        assert_eq!(p.hi, rat(10, 1));
    }
}
