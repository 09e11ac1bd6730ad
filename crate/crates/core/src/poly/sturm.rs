//! Sturm sequences: exact real-root counting and isolation.
//!
//! Chains are computed as sign-corrected integer pseudo-remainder sequences,
//! made primitive at every step to keep coefficients at subresultant size.
//! The real-roots property (all roots real, counted with multiplicity) is
//! decided through Yun's square-free decomposition.

use super::{sign_of, IntPoly};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// gcd of two integer polynomials, primitive with positive leading coefficient.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut a = a.primitive_part();
    let mut b = b.primitive_part();
    if a.is_zero() {
        return normalize_sign(b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b).primitive_part();
        a = b;
        b = r;
    }
    normalize_sign(a)
}

fn normalize_sign(p: IntPoly) -> IntPoly {
    match p.leading() {
        Some(l) if l.is_negative() => -&p,
        _ => p,
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`, sign-corrected so
/// the result is a positive multiple of the true rational remainder.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let da = match a.degree() {
        None => return IntPoly::zero(),
        Some(d) => d,
    };
    let db = b.degree().expect("pseudo_rem by zero polynomial");
    if da < db {
        return a.clone();
    }
    let lead = b.leading().unwrap().clone();
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    let mut steps = 0usize;
    while rem.len() > db {
        let rd = rem.len() - 1;
        let top = rem[rd].clone();
        for c in rem.iter_mut() {
            *c *= &lead;
        }
        if !top.is_zero() {
            for i in 0..=db {
                rem[rd - db + i] -= &top * b.coeff(i);
            }
        }
        rem.pop();
        while rem.last().map_or(false, |c| c.is_zero()) {
            rem.pop();
        }
        steps += 1;
    }
    let mut r = IntPoly::new(rem);
    // Each elimination round scaled by lc(b); correct parity so the result
    // has the sign of the rational remainder.
    if lead.is_negative() && steps % 2 == 1 {
        r = -&r;
    }
    r
}

/// Exact quotient `a / b` over the rationals, primitivized back to integers.
/// Panics if the division is not exact.
pub(crate) fn exact_div(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (q, r) = a.to_rational().div_rem(&b.to_rational());
    assert!(r.is_zero(), "exact_div: division was not exact");
    q.primitive_int()
}

/// Square-free part `p / gcd(p, p')`, primitive, sign of leading coefficient
/// preserved from `p`.
pub fn squarefree_part(p: &IntPoly) -> IntPoly {
    let d = match p.degree() {
        None => return IntPoly::zero(),
        Some(0) => return IntPoly::one(),
        Some(d) => d,
    };
    let _ = d;
    let g = poly_gcd(p, &p.derivative());
    if g.degree() == Some(0) {
        return p.primitive_part();
    }
    exact_div(&p.primitive_part(), &g)
}

/// Yun's square-free decomposition: returns pairs `(q_i, i)` with
/// `p = content * prod q_i^i`, each `q_i` square-free and non-constant.
pub fn squarefree_decomposition(p: &IntPoly) -> Vec<(IntPoly, usize)> {
    let mut out = Vec::new();
    if p.degree().map_or(true, |d| d == 0) {
        return out;
    }
    let f = p.primitive_part();
    let df = f.derivative();
    let g = poly_gcd(&f, &df);
    if g.degree() == Some(0) {
        out.push((f, 1));
        return out;
    }
    let mut w = exact_div(&f, &g);
    let mut y = exact_div(&df, &g);
    let mut i = 1usize;
    loop {
        let z = &y - &w.derivative();
        if z.is_zero() {
            if w.degree().map_or(false, |d| d > 0) {
                out.push((w, i));
            }
            break;
        }
        let gi = poly_gcd(&w, &z);
        if gi.degree().map_or(false, |d| d > 0) {
            out.push((gi.clone(), i));
        }
        w = exact_div(&w, &gi);
        y = exact_div(&z, &gi);
        i += 1;
        if w.degree().map_or(true, |d| d == 0) {
            break;
        }
    }
    out
}

/// Sturm chain of a square-free polynomial.
pub struct SturmChain {
    elems: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(squarefree: &IntPoly) -> Self {
        let mut elems = Vec::new();
        let p0 = squarefree.primitive_part();
        if p0.is_zero() {
            return SturmChain { elems };
        }
        elems.push(p0.clone());
        let p1 = p0.derivative().primitive_part();
        if p1.is_zero() {
            return SturmChain { elems };
        }
        elems.push(p1);
        loop {
            let n = elems.len();
            let r = pseudo_rem(&elems[n - 2], &elems[n - 1]);
            if r.is_zero() {
                break;
            }
            elems.push((-&r).primitive_part());
        }
        SturmChain { elems }
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.elems.iter().map(|p| p.sign_at(x)))
    }

    /// `dir > 0` for +infinity, `dir < 0` for -infinity.
    pub fn variations_at_infinity(&self, dir: i8) -> usize {
        Self::variations(self.elems.iter().map(|p| p.sign_at_infinity(dir)))
    }
}

/// Deflate a known rational root completely: divide by `(x - r)` while it is
/// a root, returning the deflated polynomial.
fn deflate_root(p: &IntPoly, r: &BigRational) -> IntPoly {
    let mut q = p.clone();
    // x - r, as an integer polynomial den*x - num
    let lin = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
    while q.sign_at(r) == 0 && q.degree().map_or(false, |d| d > 0) {
        q = exact_div(&q, &lin);
    }
    q
}

/// Number of distinct real roots of the square-free polynomial `g` strictly
/// between `a` and `b`; requires `g(a) != 0` and `g(b) != 0`.
fn count_open_sqfree(g: &IntPoly, a: &BigRational, b: &BigRational) -> usize {
    let chain = SturmChain::new(g);
    chain.variations_at(a) - chain.variations_at(b)
}

/// Distinct real roots of `p` in the closed interval `[a, b]`.
pub fn count_distinct_in(p: &IntPoly, a: &BigRational, b: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a > b {
        return Ok(0);
    }
    let g = squarefree_part(p);
    if g.degree() == Some(0) {
        return Ok(0);
    }
    let mut count = 0;
    let mut g = g;
    if g.sign_at(a) == 0 {
        count += 1;
        g = deflate_root(&g, a);
    }
    if a != b && g.sign_at(b) == 0 {
        count += 1;
        g = deflate_root(&g, b);
    }
    if g.degree().map_or(false, |d| d > 0) && a != b {
        count += count_open_sqfree(&g, a, b);
    }
    Ok(count)
}

/// Distinct real roots of `p` over the whole line.
pub fn count_distinct_all(p: &IntPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = squarefree_part(p);
    if g.degree().map_or(true, |d| d == 0) {
        return Ok(0);
    }
    let chain = SturmChain::new(&g);
    Ok(chain.variations_at_infinity(-1) - chain.variations_at_infinity(1))
}

/// Real roots counted with multiplicity, over the whole line or a closed
/// interval.
pub fn count_with_multiplicity(
    p: &IntPoly,
    interval: Option<(&BigRational, &BigRational)>,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut total = 0;
    for (q, mult) in squarefree_decomposition(p) {
        let c = match interval {
            None => count_distinct_all(&q)?,
            Some((a, b)) => count_distinct_in(&q, a, b)?,
        };
        total += mult * c;
    }
    Ok(total)
}

/// True iff `p` factors into `deg p` linear terms over the reals.
pub fn real_roots_property(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = p.degree().unwrap();
    if d == 0 {
        return Ok(true);
    }
    Ok(count_with_multiplicity(p, None)? == d)
}

/// Location of a single real root of a square-free polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum RootLocation {
    /// The root is the given rational number.
    Exact(BigRational),
    /// Exactly one root lies in the open interval; the polynomial is nonzero
    /// at both endpoints.
    Isolated { lo: BigRational, hi: BigRational },
}

impl RootLocation {
    /// Rational approximation within `eps` of the root (bisection on the
    /// isolating interval).
    pub fn approximate(&self, p: &IntPoly, eps: &BigRational) -> BigRational {
        match self {
            RootLocation::Exact(r) => r.clone(),
            RootLocation::Isolated { lo, hi } => {
                let (lo, hi) = refine_isolated(p, lo.clone(), hi.clone(), eps);
                (lo + hi) / BigRational::from(BigInt::from(2))
            }
        }
    }

    pub fn bounds(&self) -> (BigRational, BigRational) {
        match self {
            RootLocation::Exact(r) => (r.clone(), r.clone()),
            RootLocation::Isolated { lo, hi } => (lo.clone(), hi.clone()),
        }
    }
}

/// Shrink an isolating interval of a square-free polynomial below `eps` by
/// Sturm-count bisection.
pub fn refine_isolated(
    p: &IntPoly,
    mut lo: BigRational,
    mut hi: BigRational,
    eps: &BigRational,
) -> (BigRational, BigRational) {
    let g = squarefree_part(p);
    let two = BigRational::from(BigInt::from(2));
    while &hi - &lo > *eps {
        let mid = (&lo + &hi) / &two;
        if g.sign_at(&mid) == 0 {
            return (mid.clone(), mid);
        }
        if count_open_sqfree(&g, &lo, &mid) > 0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// Smallest real root of `p` in the closed interval `[lo, hi]`, if any.
pub fn leftmost_root_in(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Result<Option<RootLocation>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = squarefree_part(p);
    if g.degree().map_or(true, |d| d == 0) {
        return Ok(None);
    }
    if g.sign_at(lo) == 0 {
        return Ok(Some(RootLocation::Exact(lo.clone())));
    }
    let total = count_distinct_in(&g, lo, hi)?;
    if total == 0 {
        return Ok(None);
    }
    let two = BigRational::from(BigInt::from(2));
    let mut a = lo.clone();
    let mut b = hi.clone();
    // Keep the leftmost root inside [a, b]; stop once isolated.
    loop {
        if g.sign_at(&b) == 0 && count_distinct_in(&g, &a, &b)? == 1 {
            return Ok(Some(RootLocation::Exact(b)));
        }
        if count_distinct_in(&g, &a, &b)? == 1 && g.sign_at(&a) != 0 && g.sign_at(&b) != 0 {
            return Ok(Some(RootLocation::Isolated { lo: a, hi: b }));
        }
        let mid = (&a + &b) / &two;
        if g.sign_at(&mid) == 0 {
            // mid is a root; the leftmost root is either mid or left of it.
            if count_distinct_in(&g, &a, &mid)? == 1 {
                return Ok(Some(RootLocation::Exact(mid)));
            }
            b = mid;
            continue;
        }
        if count_distinct_in(&g, &a, &mid)? > 0 {
            b = mid;
        } else {
            a = mid;
        }
    }
}

pub(crate) fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;

    fn p(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    #[test]
    fn no_real_roots_for_positive_definite_quadratic() {
        // 1 + x + x^2
        assert_eq!(count_distinct_all(&p(&[1, 1, 1])).unwrap(), 0);
        assert!(!real_roots_property(&p(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn double_root_counted_with_multiplicity() {
        // (1+x)^2: one distinct root, two with multiplicity
        let f = p(&[1, 2, 1]);
        assert_eq!(count_distinct_all(&f).unwrap(), 1);
        assert_eq!(count_with_multiplicity(&f, None).unwrap(), 2);
        assert!(real_roots_property(&f).unwrap());
    }

    #[test]
    fn positive_discriminant_quadratic_has_two_roots() {
        assert_eq!(count_distinct_all(&p(&[1, 3, 1])).unwrap(), 2);
        assert!(real_roots_property(&p(&[1, 3, 1])).unwrap());
    }

    #[test]
    fn interval_counts_respect_endpoints() {
        // x^2 - 1 on various intervals
        let f = p(&[-1, 0, 1]);
        let r = |n, d| rational(n, d);
        assert_eq!(count_distinct_in(&f, &r(-2, 1), &r(2, 1)).unwrap(), 2);
        assert_eq!(count_distinct_in(&f, &r(-1, 1), &r(1, 1)).unwrap(), 2);
        assert_eq!(count_distinct_in(&f, &r(0, 1), &r(1, 1)).unwrap(), 1);
        assert_eq!(count_distinct_in(&f, &r(0, 1), &r(1, 2)).unwrap(), 0);
    }

    #[test]
    fn products_of_linear_factors_are_real_rooted() {
        // (x+1)(x+2)(2x+3)(x-5)
        let f = &(&p(&[1, 1]) * &p(&[2, 1])) * &(&p(&[3, 2]) * &p(&[-5, 1]));
        assert_eq!(count_distinct_all(&f).unwrap(), 4);
        assert!(real_roots_property(&f).unwrap());
        // multiply in a complex pair
        let g = &f * &p(&[1, 1, 1]);
        assert!(!real_roots_property(&g).unwrap());
        assert_eq!(count_with_multiplicity(&g, None).unwrap(), 4);
    }

    #[test]
    fn yun_decomposition_recovers_multiplicities() {
        // (x+1)^3 (x-2)^2 (x^2+1)
        let f = &(&p(&[1, 1]).pow(3) * &p(&[-2, 1]).pow(2)) * &p(&[1, 0, 1]);
        let dec = squarefree_decomposition(&f);
        let mut mults: Vec<usize> = dec.iter().map(|(_, m)| *m).collect();
        mults.sort();
        assert_eq!(mults, vec![1, 2, 3]);
        let total: usize = dec
            .iter()
            .map(|(q, m)| m * q.degree().unwrap())
            .sum();
        assert_eq!(total, f.degree().unwrap());
    }

    #[test]
    fn leftmost_root_identifies_smallest() {
        // roots at 1/4 and 3/4: (4x-1)(4x-3)
        let f = &p(&[-1, 4]) * &p(&[-3, 4]);
        let loc = leftmost_root_in(&f, &rational(0, 1), &rational(1, 1)).unwrap().unwrap();
        match loc {
            RootLocation::Exact(r) => assert_eq!(r, rational(1, 4)),
            RootLocation::Isolated { lo, hi } => {
                assert!(lo < rational(1, 4) && rational(1, 4) < hi);
                assert!(hi <= rational(3, 4));
            }
        }
        // irrational root: 2x^2 - 1 has leftmost root -1/sqrt(2); in [0,1] the root is 1/sqrt(2)
        let g = p(&[-1, 0, 2]);
        let loc = leftmost_root_in(&g, &rational(0, 1), &rational(1, 1)).unwrap().unwrap();
        let eps = rational(1, 1_000_000);
        let approx = loc.approximate(&g, &eps);
        let target = rational(707107, 1000000);
        assert!((approx - target).abs() < rational(1, 100000));
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert!(matches!(count_distinct_all(&IntPoly::zero()), Err(Error::ZeroPolynomial)));
    }
}
