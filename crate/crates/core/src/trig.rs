//! Rigorous rational enclosures of `pi` and of `cos^2(s*pi/m)`.
//!
//! Everything is exact rational arithmetic: pi comes from Machin's formula
//! with an alternating-series bracket, cosine from a Taylor partial sum with
//! an explicit remainder bound. These enclosures let the certification code
//! reason about the irrational cluster points `q_s = cos^2(s*pi/(n+1))`
//! without ever leaving exact arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A closed rational interval known to contain a real value.
#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn point(v: BigRational) -> Self {
        RatInterval { lo: v.clone(), hi: v }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from(BigInt::from(2))
    }

    /// Intersect with `[lo, hi]`, clamping both endpoints.
    pub fn clamp(&self, lo: &BigRational, hi: &BigRational) -> RatInterval {
        RatInterval {
            lo: self.lo.clone().max(lo.clone()),
            hi: self.hi.clone().min(hi.clone()),
        }
    }
}

fn pow2(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// Round a rational to the dyadic grid `2^-bits`, directed down or up.
/// Keeps later arithmetic small without losing enclosure validity.
fn dyadic_floor(v: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = (v * BigRational::from(scale.clone())).floor();
    BigRational::new(scaled.to_integer(), scale)
}

fn dyadic_ceil(v: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = (v * BigRational::from(scale.clone())).ceil();
    BigRational::new(scaled.to_integer(), scale)
}

/// arctan(1/x) enclosure from the alternating Leibniz series; consecutive
/// partial sums bracket the value.
fn arctan_inv_enclosure(x: u64, bits: u32) -> RatInterval {
    let xr = BigRational::from(BigInt::from(x));
    let x2 = &xr * &xr;
    let mut term = BigRational::one() / &xr; // 1/x
    let mut sum = BigRational::zero();
    let mut k = 0u32;
    let eps = pow2(bits + 4);
    // Partial sums alternate around the limit: after adding a positive term
    // the sum is an upper bound, after a negative term a lower bound.
    let mut upper = BigRational::zero();
    let mut lower = BigRational::zero();
    loop {
        if k % 2 == 0 {
            sum += &term / BigRational::from(BigInt::from(2 * k as i64 + 1));
            upper = sum.clone();
        } else {
            sum -= &term / BigRational::from(BigInt::from(2 * k as i64 + 1));
            lower = sum.clone();
        }
        term = &term / &x2;
        k += 1;
        if k >= 2 && &term / BigRational::from(BigInt::from(2 * k as i64 + 1)) < eps {
            if k % 2 == 1 {
                lower = &sum - &term;
            } else {
                upper = &sum + &term;
            }
            break;
        }
    }
    RatInterval { lo: lower, hi: upper }
}

/// Enclosure of pi with width below `2^-bits`.
pub fn pi_enclosure(bits: u32) -> RatInterval {
    // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239)
    let a = arctan_inv_enclosure(5, bits + 6);
    let b = arctan_inv_enclosure(239, bits + 6);
    let sixteen = BigRational::from(BigInt::from(16));
    let four = BigRational::from(BigInt::from(4));
    let lo = &sixteen * &a.lo - &four * &b.hi;
    let hi = &sixteen * &a.hi - &four * &b.lo;
    let enc = RatInterval {
        lo: dyadic_floor(&lo, bits + 8),
        hi: dyadic_ceil(&hi, bits + 8),
    };
    debug_assert!(enc.width() < pow2(bits));
    enc
}

/// Lower and upper Taylor bounds for cos on [0, 2]: partial sum with the
/// first omitted term as remainder bound.
fn cos_enclosure_point(x: &BigRational, bits: u32) -> RatInterval {
    debug_assert!(!x.is_negative() && *x <= BigRational::from(BigInt::from(2)));
    let x2 = x * x;
    let mut term = BigRational::one(); // x^(2j) / (2j)!
    let mut sum = BigRational::zero();
    let mut j = 0u32;
    let eps = pow2(bits + 4);
    loop {
        if j % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        // next term: * x^2 / ((2j+1)(2j+2))
        j += 1;
        term = &term * &x2
            / BigRational::from(BigInt::from((2 * j as i64 - 1) * (2 * j as i64)));
        if term < eps && j >= 2 {
            break;
        }
    }
    // |remainder| <= first omitted term (alternating, decreasing for x <= 2 once j >= 2)
    RatInterval {
        lo: dyadic_floor(&(&sum - &term), bits + 8),
        hi: dyadic_ceil(&(&sum + &term), bits + 8),
    }
}

/// Enclosure of `cos^2(s*pi/m)` for `0 <= s <= m/2`, width at most `2^-bits`.
///
/// The angle lies in `[0, pi/2]` where cosine is non-negative and decreasing,
/// so interval endpoints map directly.
pub fn cos_sq_enclosure(s: u64, m: u64, bits: u32) -> RatInterval {
    assert!(m >= 1 && 2 * s <= m, "angle must lie in [0, pi/2]");
    if s == 0 {
        return RatInterval::point(BigRational::one());
    }
    let mut work = bits + 8;
    loop {
        let pi = pi_enclosure(work);
        let frac = BigRational::new(BigInt::from(s), BigInt::from(m));
        let angle_lo = &pi.lo * &frac;
        let angle_hi = &pi.hi * &frac;
        // cos decreasing on [0, pi/2]
        let c_lo = cos_enclosure_point(&angle_hi, work).lo.max(BigRational::zero());
        let c_hi = cos_enclosure_point(&angle_lo, work).hi.min(BigRational::one());
        let enc = RatInterval { lo: &c_lo * &c_lo, hi: &c_hi * &c_hi };
        let enc = enc.clamp(&BigRational::zero(), &BigRational::one());
        if enc.width() <= pow2(bits) {
            return enc;
        }
        work += 16;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn pi_enclosure_brackets_pi() {
        let enc = pi_enclosure(80);
        assert!(enc.width() < pow2(80));
        // 3.14159265358979 < pi < 3.14159265358980
        assert!(enc.lo > rat(314159265358979, 100000000000000));
        assert!(enc.hi < rat(314159265358980, 100000000000000));
    }

    #[test]
    fn cos_sq_pi_over_3_is_quarter() {
        // cos^2(pi/3) = 1/4 exactly
        let enc = cos_sq_enclosure(1, 3, 72);
        assert!(enc.lo <= rat(1, 4) && rat(1, 4) <= enc.hi);
        assert!(enc.width() <= pow2(64));
    }

    #[test]
    fn cos_sq_pi_over_4_is_half() {
        let enc = cos_sq_enclosure(1, 4, 72);
        assert!(enc.lo <= rat(1, 2) && rat(1, 2) <= enc.hi);
    }

    #[test]
    fn cos_sq_at_pi_over_2_is_zero() {
        let enc = cos_sq_enclosure(1, 2, 72);
        assert!(enc.lo >= BigRational::zero());
        assert!(enc.hi < rat(1, 1_000_000));
    }

    #[test]
    fn enclosures_are_monotone_in_s() {
        // q_s = cos^2(s pi / 8) decreases in s
        let e1 = cos_sq_enclosure(1, 8, 72);
        let e2 = cos_sq_enclosure(2, 8, 72);
        let e3 = cos_sq_enclosure(3, 8, 72);
        assert!(e1.lo > e2.hi);
        assert!(e2.lo > e3.hi);
    }
}
