//! Exact polynomial arithmetic.
//!
//! `IntPoly` is a dense univariate polynomial with `BigInt` coefficients in
//! ascending degree order. The representation is canonical: the coefficient
//! vector is empty for the zero polynomial, and the last entry is nonzero
//! otherwise. The same type doubles as a polynomial in the parameter `q`
//! (see [`qpoly`]), where only the interpretation of the variable changes.

pub mod qpoly;
pub mod sturm;
pub mod threshold;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial over the integers, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    /// The indeterminate.
    pub fn x() -> Self {
        IntPoly { coeffs: vec![BigInt::zero(), BigInt::one()] }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// Construct from coefficients in ascending degree order; trailing zeros
    /// are stripped.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    /// `(1+x)^n` by the binomial theorem.
    pub fn one_plus_x_pow(n: usize) -> Self {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut c = BigInt::one();
        for k in 0..=n {
            coeffs.push(c.clone());
            // next binomial coefficient: C(n, k+1) = C(n, k) * (n-k) / (k+1)
            c = c * BigInt::from(n - k) / BigInt::from(k + 1);
        }
        IntPoly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiply by `x^k`.
    pub fn mul_xpow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly { coeffs }
    }

    pub fn eval_big(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Sign of `p(a/b)` without building rationals: evaluates the
    /// homogenization `sum c_i a^i b^(n-i)` in integers.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let a = x.numer();
        let b = x.denom(); // > 0 by Ratio's invariant
        let n = self.coeffs.len() - 1;
        let mut apow = BigInt::one();
        let mut bpows = Vec::with_capacity(n + 1);
        let mut bp = BigInt::one();
        for _ in 0..=n {
            bpows.push(bp.clone());
            bp *= b;
        }
        let mut total = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                total += c * &apow * &bpows[n - i];
            }
            apow *= a;
        }
        sign_of(&total)
    }

    /// Sign of `p(x)` as `x -> +inf` (`dir > 0`) or `x -> -inf` (`dir < 0`).
    pub fn sign_at_infinity(&self, dir: i8) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = sign_of(self.leading().unwrap());
                if dir >= 0 || d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Content (gcd of coefficients), non-negative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content, preserving the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Coefficients reversed: `x^deg * p(1/x)`.
    pub fn reversed(&self) -> Self {
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn to_rational(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| BigRational::from(c.clone())).collect())
    }

    /// Coefficients as decimal strings, lowest degree first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings(strings: &[String]) -> Result<Self, String> {
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in strings {
            coeffs.push(s.parse::<BigInt>().map_err(|e| format!("bad coefficient {s:?}: {e}"))?);
        }
        Ok(Self::new(coeffs))
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(b) = rhs.coeffs.get(i) {
                c += b;
            }
            coeffs.push(c);
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(b) = rhs.coeffs.get(i) {
                c -= b;
            }
            coeffs.push(c);
        }
        IntPoly::new(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly { coeffs }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if i == 0 {
                    write!(f, "{c}")?;
                } else if c.is_one() {
                    write!(f, "x")?;
                } else if *c == BigInt::from(-1) {
                    write!(f, "-x")?;
                } else {
                    write!(f, "{c}*x")?;
                }
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            } else {
                if c.is_positive() {
                    write!(f, " + ")?;
                } else {
                    write!(f, " - ")?;
                }
                let a = c.abs();
                if i == 0 {
                    write!(f, "{a}")?;
                } else if a.is_one() {
                    write!(f, "x")?;
                } else {
                    write!(f, "{a}*x")?;
                }
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

// Wire format: JSON array of decimal-string coefficients, lowest degree first.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        IntPoly::from_decimal_strings(&strings).map_err(D::Error::custom)
    }
}

/// Dense univariate polynomial over the rationals; used by the Sturm
/// machinery and by parameter substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
            .collect();
        RatPoly { coeffs }
    }

    pub fn sub(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            if let Some(b) = rhs.coeffs.get(i) {
                c -= b;
            }
            coeffs.push(c);
        }
        RatPoly::new(coeffs)
    }

    pub fn mul(&self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        RatPoly { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let rd = rem.len() - 1;
            let c = rem.last().unwrap() / &lead;
            if !c.is_zero() {
                quot[rd - dd] = c.clone();
                for i in 0..=dd {
                    let t = &divisor.coeffs[i] * &c;
                    rem[rd - dd + i] -= t;
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Clear denominators and divide out integer content; the result has the
    /// same roots and the same sign of the leading coefficient.
    pub fn primitive_int(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| c.numer() * &lcm / c.denom()).collect();
        IntPoly::new(ints).primitive_part()
    }
}

/// Scale a rational-coefficient polynomial to integers by the lcm of its
/// denominators (a positive constant), preserving sign patterns.
pub fn clear_denominators(p: &RatPoly) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    IntPoly::new(p.coeffs().iter().map(|c| c.numer() * &lcm / c.denom()).collect())
}

/// Binomial coefficient with the polynomial (falling-factorial) convention:
/// `C(n, k) = n(n-1)...(n-k+1)/k!` for any integer `n`, so negative upper
/// indices give the values Mathematica's `Binomial` does.
pub fn binomial(n: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n) - BigInt::from(i);
    }
    let mut den = BigInt::one();
    for i in 1..=k {
        den *= BigInt::from(i);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    #[test]
    fn mul_square_of_one_plus_x() {
        let f = p(&[1, 1]);
        assert_eq!(&f * &f, p(&[1, 2, 1]));
    }

    #[test]
    fn mul_by_zero() {
        let f = p(&[3, 0, 7]);
        assert_eq!(&f * &IntPoly::zero(), IntPoly::zero());
    }

    #[test]
    fn eval_counts_independent_sets_of_p4() {
        // 1 + 4x + 3x^2 at x = 1 counts the 8 independent sets of P4.
        let f = p(&[1, 4, 3]);
        assert_eq!(f.eval_big(&BigInt::one()), BigInt::from(8));
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        let f = IntPoly::new(vec![BigInt::from(1), BigInt::zero(), BigInt::zero()]);
        assert_eq!(f.degree(), Some(0));
        assert!(IntPoly::new(vec![BigInt::zero()]).is_zero());
    }

    #[test]
    fn one_plus_x_pow_matches_pow() {
        for n in 0..8 {
            assert_eq!(IntPoly::one_plus_x_pow(n), p(&[1, 1]).pow(n as u32));
        }
    }

    #[test]
    fn sign_at_rational_points() {
        let f = p(&[-1, 0, 1]); // x^2 - 1
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.sign_at(&half), -1);
        assert_eq!(f.sign_at(&BigRational::from(BigInt::from(2))), 1);
        assert_eq!(f.sign_at(&BigRational::from(BigInt::one())), 0);
    }

    #[test]
    fn rat_div_rem_reconstructs() {
        let a = p(&[2, -3, 0, 5, 1]).to_rational();
        let b = p(&[1, 0, 2]).to_rational();
        let (q, r) = a.div_rem(&b);
        let back = q.mul(&b).sub(&a.scale(&BigRational::from(BigInt::from(-1)))).sub(&a).sub(&a);
        // direct check: q*b + r == a
        let recombined = q.mul(&b);
        let sum = RatPoly::new(
            (0..recombined.coeffs().len().max(r.coeffs().len()))
                .map(|i| recombined.coeff(i) + r.coeff(i))
                .collect(),
        );
        assert_eq!(sum, a);
        let _ = back;
    }

    #[test]
    fn binomial_negative_upper_index() {
        assert_eq!(binomial(-1, 2), BigInt::from(1));
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn decimal_string_round_trip() {
        let f = p(&[1, -40000000, 3]);
        let s = f.to_decimal_strings();
        assert_eq!(IntPoly::from_decimal_strings(&s).unwrap(), f);
    }
}
