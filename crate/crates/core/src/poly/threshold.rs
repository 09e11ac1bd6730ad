//! Exact positivity of parameter polynomials over rational intervals, and
//! algebraic thresholds where a constraint first fails.

use super::qpoly::QCoeff;
use super::sturm::{
    count_distinct_in, leftmost_root_in, refine_isolated, squarefree_part, RootLocation,
};
use super::IntPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;

/// Outcome of a sign check of one parameter polynomial over an interval.
#[derive(Clone, Debug)]
pub struct PositivityCheck {
    pub holds: bool,
    /// Rational point in the interval where the polynomial is `<= 0`
    /// (for non-strict checks, `< 0`). Absent when the only failures are
    /// irrational touching zeros.
    pub witness: Option<BigRational>,
    /// Points in the interval where the polynomial vanishes without going
    /// negative nearby.
    pub zero_points: Vec<RootLocation>,
}

impl PositivityCheck {
    fn pass() -> Self {
        PositivityCheck { holds: true, witness: None, zero_points: Vec::new() }
    }

    fn fail_at(q: BigRational) -> Self {
        PositivityCheck { holds: false, witness: Some(q), zero_points: Vec::new() }
    }
}

fn two() -> BigRational {
    BigRational::from(BigInt::from(2))
}

/// Isolate all distinct real roots of `c` in `[lo, hi]`, ordered left to right.
pub fn isolate_roots_in(c: &IntPoly, lo: &BigRational, hi: &BigRational) -> Result<Vec<RootLocation>> {
    let g = squarefree_part(c);
    if g.degree().map_or(true, |d| d == 0) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = count_distinct_in(&g, &a, &b)?;
        if n == 0 {
            continue;
        }
        if g.sign_at(&a) == 0 {
            out.push(RootLocation::Exact(a.clone()));
            if n == 1 {
                continue;
            }
        }
        if n == 1 && g.sign_at(&a) != 0 {
            if g.sign_at(&b) == 0 {
                out.push(RootLocation::Exact(b.clone()));
            } else {
                out.push(RootLocation::Isolated { lo: a, hi: b });
            }
            continue;
        }
        let mid = (&a + &b) / two();
        // Process the left half first so roots come out ordered; the stack is
        // LIFO, so push right first.
        let eps = nudge_off_root(&g, &mid, &a, &b);
        stack.push((eps.clone(), b));
        stack.push((a, eps));
    }
    // The stack discipline above emits left-half roots before right-half ones
    // except for exact endpoint hits; sort by interval lower bound to be safe.
    out.sort_by(|x, y| x.bounds().0.cmp(&y.bounds().0));
    out.dedup();
    Ok(out)
}

/// Pick a split point near `mid` that is not a root, staying inside `(a, b)`.
fn nudge_off_root(g: &IntPoly, mid: &BigRational, a: &BigRational, b: &BigRational) -> BigRational {
    if g.sign_at(mid) != 0 {
        return mid.clone();
    }
    let mut delta = (b - a) / BigRational::from(BigInt::from(64));
    loop {
        let cand = mid + &delta;
        if &cand < b && g.sign_at(&cand) != 0 {
            return cand;
        }
        delta /= two();
    }
}

/// Decide `c(q) >= 0` (or `> 0` when `strict`) for all `q` in `[lo, hi]`.
pub fn check_sign_on(
    c: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
    strict: bool,
) -> Result<PositivityCheck> {
    assert!(lo <= hi, "empty interval");
    match c.degree() {
        None => {
            // zero polynomial
            if strict {
                Ok(PositivityCheck::fail_at(lo.clone()))
            } else {
                Ok(PositivityCheck::pass())
            }
        }
        Some(0) => {
            let s = c.sign_at(lo);
            if s > 0 || (s == 0 && !strict) {
                Ok(PositivityCheck::pass())
            } else {
                Ok(PositivityCheck::fail_at(lo.clone()))
            }
        }
        Some(d) if d <= 2 => Ok(check_low_degree(c, lo, hi, strict)),
        _ => check_by_isolation(c, lo, hi, strict),
    }
}

/// Degree 1 and 2: endpoint and vertex evaluation.
fn check_low_degree(c: &IntPoly, lo: &BigRational, hi: &BigRational, strict: bool) -> PositivityCheck {
    let mut candidates = vec![lo.clone(), hi.clone()];
    if c.degree() == Some(2) {
        let a = BigRational::from(c.coeff(2));
        let b = BigRational::from(c.coeff(1));
        if a.is_positive() {
            let vertex = -&b / (&a * two());
            if &vertex > lo && &vertex < hi {
                candidates.push(vertex);
            }
        }
    }
    let mut min_pt = candidates[0].clone();
    let mut min_val = c.eval_rational(&min_pt);
    for pt in candidates.into_iter().skip(1) {
        let v = c.eval_rational(&pt);
        if v < min_val {
            min_val = v;
            min_pt = pt;
        }
    }
    if min_val.is_negative() {
        PositivityCheck::fail_at(min_pt)
    } else if min_val.is_zero() {
        PositivityCheck {
            holds: !strict,
            witness: if strict { Some(min_pt.clone()) } else { None },
            zero_points: vec![RootLocation::Exact(min_pt)],
        }
    } else {
        PositivityCheck::pass()
    }
}

/// Degree >= 3: Sturm root isolation plus sign samples between roots.
fn check_by_isolation(
    c: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
    strict: bool,
) -> Result<PositivityCheck> {
    if c.sign_at(lo) < 0 {
        return Ok(PositivityCheck::fail_at(lo.clone()));
    }
    if c.sign_at(hi) < 0 {
        return Ok(PositivityCheck::fail_at(hi.clone()));
    }
    let roots = isolate_roots_in(c, lo, hi)?;
    if roots.is_empty() {
        // no zero crossing and both endpoint signs are >= 0 with no roots:
        // the sign is constant and positive
        return Ok(PositivityCheck::pass());
    }
    // Sample between and around isolating intervals for genuine negativity.
    let mut samples: Vec<BigRational> = vec![lo.clone(), hi.clone()];
    for w in roots.windows(2) {
        let (_, prev_hi) = w[0].bounds();
        let (next_lo, _) = w[1].bounds();
        if prev_hi < next_lo {
            samples.push((&prev_hi + &next_lo) / two());
        }
    }
    for r in &roots {
        let (a, b) = r.bounds();
        if &a > lo {
            samples.push((lo + &a) / two());
        }
        if &b < hi {
            samples.push((&b + hi) / two());
        }
    }
    for s in &samples {
        if c.sign_at(s) < 0 {
            return Ok(PositivityCheck { holds: false, witness: Some(s.clone()), zero_points: roots });
        }
    }
    // All samples non-negative: polynomial only touches zero.
    if strict {
        let witness = roots.iter().find_map(|r| match r {
            RootLocation::Exact(q) => Some(q.clone()),
            _ => None,
        });
        Ok(PositivityCheck { holds: false, witness, zero_points: roots })
    } else {
        Ok(PositivityCheck { holds: true, witness: None, zero_points: roots })
    }
}

/// Closed-form quadratic surd `(add + coeff * sqrt(radicand)) / den`,
/// `den > 0`. Rational values use `radicand = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSurd {
    pub add: BigInt,
    pub coeff: BigInt,
    pub radicand: BigInt,
    pub den: BigInt,
}

impl Serialize for QuadSurd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QuadSurd", 5)?;
        st.serialize_field("add", &self.add.to_string())?;
        st.serialize_field("coeff", &self.coeff.to_string())?;
        st.serialize_field("radicand", &self.radicand.to_string())?;
        st.serialize_field("den", &self.den.to_string())?;
        st.serialize_field("display", &self.to_string())?;
        st.end()
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() || self.radicand.is_zero() {
            if self.den.is_one() {
                return write!(f, "{}", self.add);
            }
            return write!(f, "{}/{}", self.add, self.den);
        }
        let sign = if self.coeff.is_negative() { "-" } else { "+" };
        let mag = self.coeff.abs();
        let surd = if mag.is_one() {
            format!("sqrt({})", self.radicand)
        } else {
            format!("{}*sqrt({})", mag, self.radicand)
        };
        if self.den.is_one() {
            if self.add.is_zero() {
                write!(f, "{}{}", if self.coeff.is_negative() { "-" } else { "" }, surd)
            } else {
                write!(f, "{} {} {}", self.add, sign, surd)
            }
        } else {
            write!(f, "({} {} {})/{}", self.add, sign, surd, self.den)
        }
    }
}

/// Extract the largest square factor found by trial division:
/// returns `(m, r)` with `d = m^2 * r`.
fn extract_square(d: &BigInt) -> (BigInt, BigInt) {
    let mut m = BigInt::one();
    let mut r = d.clone();
    if r.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let mut p = BigInt::from(2);
    let limit = BigInt::from(100_000u32);
    while &p * &p <= r && p <= limit {
        let sq = &p * &p;
        while (&r % &sq).is_zero() {
            r /= &sq;
            m *= &p;
        }
        p += 1;
    }
    let s = r.sqrt();
    if &s * &s == r {
        m *= &s;
        r = BigInt::one();
    }
    if r.is_one() {
        // perfect square overall: value is rational
        (m, BigInt::one())
    } else {
        (m, r)
    }
}

/// An algebraic number in `[0, 1]`: the first zero of a constraint.
#[derive(Clone, Debug, Serialize)]
pub struct AlgebraicThreshold {
    /// Integer polynomial in `q` that vanishes at the threshold.
    pub defining: IntPoly,
    /// Interval containing exactly this one root of `defining` (degenerate
    /// when the root is rational).
    pub isolating_lo: BigRationalSer,
    pub isolating_hi: BigRationalSer,
    /// Decimal approximation accurate to 1e-12.
    pub approx_decimal: String,
    /// Closed form for degree <= 2 defining polynomials.
    pub closed_form: Option<QuadSurd>,
}

/// Serialization wrapper: rationals as `"num/den"` strings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BigRationalSer(pub BigRational);

impl Serialize for BigRationalSer {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", self.0.numer(), self.0.denom()))
    }
}

impl AlgebraicThreshold {
    pub fn approx(&self) -> BigRational {
        let (lo, hi) = (&self.isolating_lo.0, &self.isolating_hi.0);
        (lo + hi) / two()
    }

    /// Approximation as f64 (reporting only).
    pub fn approx_f64(&self) -> f64 {
        rational_to_f64(&self.approx())
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    // good to ~1e-15 for the magnitudes used in reports
    let scale = BigInt::from(10u64).pow(15);
    let scaled = (r * BigRational::from(scale.clone())).round();
    let v: f64 = scaled.numer().to_string().parse().unwrap_or(f64::NAN);
    v / 1e15
}

fn decimal_string(r: &BigRational, digits: u32) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let scale = BigInt::from(10u64).pow(digits);
    let scaled = (&a * BigRational::from(scale.clone())).floor().to_integer();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let frac = format!("{:0width$}", frac_part, width = digits as usize);
    format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac)
}

/// Smallest `q* in [0, 1]` with `c(q*) = 0`, given `c(0) > 0`; `None` when
/// `c` is positive on the whole interval.
pub fn smallest_violation_threshold(c: &QCoeff) -> Result<Option<AlgebraicThreshold>> {
    let zero = BigRational::zero();
    let one = BigRational::one();
    if c.sign_at(&zero) <= 0 {
        return Err(Error::BadInput("constraint must be positive at q = 0".into()));
    }
    let root = match leftmost_root_in(c, &zero, &one)? {
        None => return Ok(None),
        Some(r) => r,
    };
    Ok(Some(threshold_from_root(c, root)))
}

fn threshold_from_root(c: &QCoeff, root: RootLocation) -> AlgebraicThreshold {
    let defining = c.primitive_part();
    let eps = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(13));
    let (lo, hi) = match &root {
        RootLocation::Exact(r) => (r.clone(), r.clone()),
        RootLocation::Isolated { lo, hi } => refine_isolated(&defining, lo.clone(), hi.clone(), &eps),
    };
    debug_assert!(
        lo == hi || count_distinct_in(&defining, &lo, &hi).unwrap() == 1,
        "isolating interval must contain exactly one root"
    );
    let approx = (&lo + &hi) / two();
    let closed_form = closed_form_root(&defining, &approx);
    AlgebraicThreshold {
        defining,
        isolating_lo: BigRationalSer(lo),
        isolating_hi: BigRationalSer(hi),
        approx_decimal: decimal_string(&approx, 12),
        closed_form,
    }
}

/// Build an `AlgebraicThreshold` for a root of `c` already located.
pub fn threshold_at(c: &QCoeff, root: RootLocation) -> AlgebraicThreshold {
    threshold_from_root(c, root)
}

/// For degree <= 2: express the root nearest `approx` as `(p + m sqrt(r))/d`.
fn closed_form_root(defining: &IntPoly, approx: &BigRational) -> Option<QuadSurd> {
    match defining.degree() {
        Some(1) => {
            // root = -c0 / c1
            let c0 = defining.coeff(0);
            let c1 = defining.coeff(1);
            let (mut num, mut den) = (-c0, c1);
            if den.is_negative() {
                num = -num;
                den = -den;
            }
            let g = num_integer::gcd(num.clone(), den.clone());
            if !g.is_zero() {
                num /= &g;
                den /= &g;
            }
            Some(QuadSurd { add: num, coeff: BigInt::zero(), radicand: BigInt::zero(), den })
        }
        Some(2) => {
            let a = defining.coeff(2);
            let b = defining.coeff(1);
            let c0 = defining.coeff(0);
            let disc = &b * &b - BigInt::from(4) * &a * &c0;
            if disc.is_negative() {
                return None;
            }
            let (m, r) = extract_square(&disc);
            // roots: (-b +- m sqrt(r)) / (2a)
            let mut den = BigInt::from(2) * &a;
            let mut add = -b;
            let mut m_signed = m.clone();
            if den.is_negative() {
                den = -den;
                add = -add;
                m_signed = -m_signed;
            }
            // choose the sign matching approx
            let sqrt_r_approx = approx_sqrt(&r);
            let plus = (rational_from(&add) + rational_from(&m_signed) * &sqrt_r_approx)
                / rational_from(&den);
            let minus = (rational_from(&add) - rational_from(&m_signed) * &sqrt_r_approx)
                / rational_from(&den);
            let coeff = if (plus - approx).abs() <= (minus - approx).abs() {
                m_signed
            } else {
                -m_signed
            };
            // reduce by gcd(add, coeff, den)
            let mut g = num_integer::gcd(add.clone(), coeff.clone());
            g = num_integer::gcd(g, den.clone());
            let (add, coeff, den) = if g > BigInt::one() {
                (&add / &g, &coeff / &g, &den / &g)
            } else {
                (add, coeff, den)
            };
            if r.is_one() {
                // rational after all
                let num = &add + &coeff;
                let g2 = num_integer::gcd(num.clone(), den.clone());
                return Some(QuadSurd {
                    add: &num / &g2,
                    coeff: BigInt::zero(),
                    radicand: BigInt::zero(),
                    den: &den / &g2,
                });
            }
            Some(QuadSurd { add, coeff, radicand: r, den })
        }
        _ => None,
    }
}

fn rational_from(i: &BigInt) -> BigRational {
    BigRational::from(i.clone())
}

/// Rational approximation of sqrt(r) good to ~1e-40, for sign selection only.
fn approx_sqrt(r: &BigInt) -> BigRational {
    let s = (r * BigInt::from(10u64).pow(80)).sqrt();
    BigRational::new(s, BigInt::from(10u64).pow(40))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::sturm::rational;

    fn p(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    #[test]
    fn constant_minus_affine_positive_on_unit_interval() {
        // c(q) = 22 - 4q: min 18 at q=1
        let c = p(&[22, -4]);
        let chk = check_sign_on(&c, &rational(0, 1), &rational(1, 1), true).unwrap();
        assert!(chk.holds);
    }

    #[test]
    fn failing_affine_has_witness_at_zero() {
        let c = p(&[-2, 1]); // q - 2
        let chk = check_sign_on(&c, &rational(0, 1), &rational(1, 1), false).unwrap();
        assert!(!chk.holds);
        assert_eq!(chk.witness.unwrap(), rational(0, 1));
    }

    #[test]
    fn quadratic_negative_past_surd_threshold() {
        // (6-4q)^2 - (11-4q) = 16q^2 - 44q + 25, negative at q = 9/10
        let c = p(&[25, -44, 16]);
        assert_eq!(c.sign_at(&rational(9, 10)), -1);
        let chk = check_sign_on(&c, &rational(0, 1), &rational(1, 1), false).unwrap();
        assert!(!chk.holds);
        let w = chk.witness.unwrap();
        assert!(c.sign_at(&w) < 0);
    }

    #[test]
    fn threshold_eleven_minus_sqrt21_over_8() {
        let c = p(&[25, -44, 16]);
        let t = smallest_violation_threshold(&c).unwrap().unwrap();
        let s = t.closed_form.unwrap();
        assert_eq!(s.add, BigInt::from(11));
        assert_eq!(s.coeff, BigInt::from(-1));
        assert_eq!(s.radicand, BigInt::from(21));
        assert_eq!(s.den, BigInt::from(8));
        assert!(t.approx_decimal.starts_with("0.802"));
    }

    #[test]
    fn threshold_41_minus_sqrt113_over_32() {
        // (12-8q)^2 - (46-28q) = 64q^2 - 164q + 98
        let c = p(&[98, -164, 64]);
        let t = smallest_violation_threshold(&c).unwrap().unwrap();
        let s = t.closed_form.unwrap();
        assert_eq!(
            (s.add, s.coeff, s.radicand, s.den),
            (BigInt::from(41), BigInt::from(-1), BigInt::from(113), BigInt::from(32))
        );
        assert!(t.approx_decimal.starts_with("0.949"));
    }

    #[test]
    fn no_threshold_for_always_positive() {
        let c = p(&[1, 1]); // 1 + q
        assert!(smallest_violation_threshold(&c).unwrap().is_none());
    }

    #[test]
    fn rational_threshold_from_affine() {
        // 3 - 4q vanishes at 3/4
        let c = p(&[3, -4]);
        let t = smallest_violation_threshold(&c).unwrap().unwrap();
        let s = t.closed_form.unwrap();
        assert_eq!((s.add, s.den), (BigInt::from(3), BigInt::from(4)));
        assert!(s.radicand.is_zero());
    }

    #[test]
    fn touching_zero_passes_nonstrict_fails_strict() {
        // (2q-1)^2 touches zero at 1/2
        let c = p(&[1, -4, 4]);
        let nonstrict = check_sign_on(&c, &rational(0, 1), &rational(1, 1), false).unwrap();
        assert!(nonstrict.holds);
        assert_eq!(nonstrict.zero_points.len(), 1);
        let strict = check_sign_on(&c, &rational(0, 1), &rational(1, 1), true).unwrap();
        assert!(!strict.holds);
        assert_eq!(strict.witness.unwrap(), rational(1, 2));
    }

    #[test]
    fn high_degree_isolation_path() {
        // q^4 - 2q^3 + q^2 = q^2 (q-1)^2: touches zero at 0 and 1
        let c = p(&[0, 0, 1, -2, 1]);
        let chk = check_sign_on(&c, &rational(0, 1), &rational(1, 1), false).unwrap();
        assert!(chk.holds);
        assert_eq!(chk.zero_points.len(), 2);
        // strictly positive high-degree poly
        let d = p(&[1, 0, 0, 0, 1]);
        assert!(check_sign_on(&d, &rational(0, 1), &rational(1, 1), true).unwrap().holds);
    }
}
