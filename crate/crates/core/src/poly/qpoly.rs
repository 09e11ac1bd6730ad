//! Polynomials in `x` whose coefficients are polynomials in a parameter `q`,
//! and their two-parameter (`q1`, `q2`) counterparts used for pair products.

use super::{clear_denominators, IntPoly, RatPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A coefficient in the parameter `q`: an integer polynomial where the
/// variable is read as `q`.
pub type QCoeff = IntPoly;

/// Polynomial in `x` with `Z[q]` coefficients, lowest `x`-degree first.
/// Normalized: the leading coefficient is not identically zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoly {
    coeffs: Vec<QCoeff>,
}

impl ParamPoly {
    pub fn new(coeffs: Vec<QCoeff>) -> Self {
        let mut p = ParamPoly { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        ParamPoly { coeffs: Vec::new() }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Lift a plain integer polynomial (constant in `q`).
    pub fn from_int_poly(p: &IntPoly) -> Self {
        ParamPoly::new(p.coeffs().iter().map(|c| IntPoly::constant(c.clone())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `x`, or `None` for the zero polynomial.
    pub fn degree_x(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Largest degree in `q` over all coefficients (0 for the zero polynomial).
    pub fn degree_q(&self) -> usize {
        self.coeffs.iter().filter_map(|c| c.degree()).max().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[QCoeff] {
        &self.coeffs
    }

    /// Coefficient of `x^i` as a polynomial in `q` (zero beyond the degree).
    pub fn coeff_x(&self, i: usize) -> QCoeff {
        self.coeffs.get(i).cloned().unwrap_or_else(IntPoly::zero)
    }

    pub fn add(&self, rhs: &ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff_x(i) + &rhs.coeff_x(i));
        }
        ParamPoly::new(coeffs)
    }

    pub fn sub(&self, rhs: &ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff_x(i) - &rhs.coeff_x(i));
        }
        ParamPoly::new(coeffs)
    }

    /// Product in `x`, exact in `Z[q]`.
    pub fn mul(&self, rhs: &ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero();
        }
        let mut coeffs = vec![IntPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        ParamPoly { coeffs }
    }

    /// Substitute a rational value for `q`; the result is a polynomial in `x`
    /// with rational coefficients.
    pub fn substitute_q(&self, q: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c.eval_rational(q)).collect())
    }

    /// Substitute `q` and clear denominators by a positive constant, so the
    /// coefficient sequence keeps its sign pattern and ratios.
    pub fn substitute_q_int(&self, q: &BigRational) -> IntPoly {
        clear_denominators(&self.substitute_q(q))
    }
}

// Wire format: array of arrays of decimal strings (q-coefficients per x power).
impl Serialize for ParamPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self.coeffs.iter().map(|c| c.to_decimal_strings()).collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ParamPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(rows.len());
        for row in &rows {
            coeffs.push(IntPoly::from_decimal_strings(row).map_err(D::Error::custom)?);
        }
        Ok(ParamPoly::new(coeffs))
    }
}

/// Polynomial in two parameters `q1`, `q2` with integer coefficients:
/// `coeffs[i][j]` multiplies `q1^i q2^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<Vec<BigInt>>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn new(coeffs: Vec<Vec<BigInt>>) -> Self {
        let mut p = BiPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        for row in self.coeffs.iter_mut() {
            while row.last().map_or(false, |c| c.is_zero()) {
                row.pop();
            }
        }
        while self.coeffs.last().map_or(false, |r| r.is_empty()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `a(q1) * b(q2)` as a bivariate polynomial.
    pub fn separable(a: &QCoeff, b: &QCoeff) -> Self {
        if a.is_zero() || b.is_zero() {
            return Self::zero();
        }
        let coeffs = a
            .coeffs()
            .iter()
            .map(|ai| b.coeffs().iter().map(|bj| ai * bj).collect())
            .collect();
        BiPoly { coeffs }
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn degree_q1(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn degree_q2(&self) -> usize {
        self.coeffs.iter().map(|r| r.len()).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn add(&self, rhs: &BiPoly) -> BiPoly {
        let rows = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(rows);
        for i in 0..rows {
            let cols = self
                .coeffs
                .get(i)
                .map_or(0, |r| r.len())
                .max(rhs.coeffs.get(i).map_or(0, |r| r.len()));
            let mut row = Vec::with_capacity(cols);
            for j in 0..cols {
                row.push(self.coeff(i, j) + rhs.coeff(i, j));
            }
            out.push(row);
        }
        BiPoly::new(out)
    }

    pub fn sub(&self, rhs: &BiPoly) -> BiPoly {
        let rows = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(rows);
        for i in 0..rows {
            let cols = self
                .coeffs
                .get(i)
                .map_or(0, |r| r.len())
                .max(rhs.coeffs.get(i).map_or(0, |r| r.len()));
            let mut row = Vec::with_capacity(cols);
            for j in 0..cols {
                row.push(self.coeff(i, j) - rhs.coeff(i, j));
            }
            out.push(row);
        }
        BiPoly::new(out)
    }

    pub fn mul(&self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let r1 = self.degree_q1() + rhs.degree_q1() + 1;
        let c1 = self.degree_q2() + rhs.degree_q2() + 1;
        let mut out = vec![vec![BigInt::zero(); c1]; r1];
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, row2) in rhs.coeffs.iter().enumerate() {
                    for (l, b) in row2.iter().enumerate() {
                        if !b.is_zero() {
                            out[i + k][j + l] += a * b;
                        }
                    }
                }
            }
        }
        BiPoly::new(out)
    }

    /// Fix `q1 = value`; the result is a polynomial in `q2` with rational
    /// coefficients cleared to integers by a positive constant.
    pub fn substitute_q1(&self, value: &BigRational) -> QCoeff {
        let cols = self.degree_q2() + 1;
        let mut acc = vec![BigRational::zero(); cols];
        for (i, row) in self.coeffs.iter().enumerate() {
            let pw = value.pow(i as i32);
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    acc[j] += BigRational::from(c.clone()) * &pw;
                }
            }
        }
        clear_denominators(&RatPoly::new(acc))
    }

    /// Fix `q2 = value`, symmetric to [`BiPoly::substitute_q1`].
    pub fn substitute_q2(&self, value: &BigRational) -> QCoeff {
        let rows = self.degree_q1() + 1;
        let mut acc = vec![BigRational::zero(); rows];
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    acc[i] += BigRational::from(c.clone()) * value.pow(j as i32);
                }
            }
        }
        clear_denominators(&RatPoly::new(acc))
    }

    pub fn eval(&self, q1: &BigRational, q2: &BigRational) -> BigRational {
        let mut total = BigRational::zero();
        for (i, row) in self.coeffs.iter().enumerate() {
            let p1 = q1.pow(i as i32);
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    total += BigRational::from(c.clone()) * &p1 * q2.pow(j as i32);
                }
            }
        }
        total
    }

    /// View as a quadratic in `q1`: returns `(A, B, C)` with
    /// `self = A(q2) q1^2 + B(q2) q1 + C(q2)`. Panics if degree in `q1` > 2.
    pub fn as_quadratic_in_q1(&self) -> (QCoeff, QCoeff, QCoeff) {
        assert!(self.degree_q1() <= 2, "degree in q1 exceeds 2");
        let row = |i: usize| -> QCoeff {
            IntPoly::new(self.coeffs.get(i).cloned().unwrap_or_default())
        };
        (row(2), row(1), row(0))
    }

    /// Swap the roles of `q1` and `q2`.
    pub fn transpose(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let rows = self.degree_q2() + 1;
        let cols = self.degree_q1() + 1;
        let mut out = vec![vec![BigInt::zero(); cols]; rows];
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                out[j][i] = c.clone();
            }
        }
        BiPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::sturm::rational;

    fn qpoly(rows: &[&[i64]]) -> ParamPoly {
        ParamPoly::new(rows.iter().map(|r| IntPoly::from_i64(r)).collect())
    }

    #[test]
    fn substitute_q_at_zero_drops_q_terms() {
        // 1 + (11-4q)x^2: at q=0 -> 1 + 11x^2
        let f = qpoly(&[&[1], &[0], &[11, -4]]);
        let at0 = f.substitute_q_int(&rational(0, 1));
        assert_eq!(at0, IntPoly::from_i64(&[1, 0, 11]));
    }

    #[test]
    fn param_mul_degree_adds() {
        let f = qpoly(&[&[1], &[2, -1]]);
        let g = qpoly(&[&[3], &[0, 4], &[5]]);
        assert_eq!(
            f.mul(&g).degree_x().unwrap(),
            f.degree_x().unwrap() + g.degree_x().unwrap()
        );
    }

    #[test]
    fn substitution_commutes_with_product() {
        let f = qpoly(&[&[1, 1], &[2]]);
        let g = qpoly(&[&[0, 3], &[1, -2], &[4]]);
        let q = rational(3, 7);
        let lhs = f.mul(&g).substitute_q(&q);
        let rhs = f.substitute_q(&q).mul(&g.substitute_q(&q));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn normalization_in_x_trims_zero_leading() {
        let f = ParamPoly::new(vec![IntPoly::one(), IntPoly::zero(), IntPoly::zero()]);
        assert_eq!(f.degree_x(), Some(0));
    }

    #[test]
    fn bipoly_separable_product_and_eval() {
        // (1+2q1)(3-q2)
        let b = BiPoly::separable(&IntPoly::from_i64(&[1, 2]), &IntPoly::from_i64(&[3, -1]));
        let v = b.eval(&rational(1, 2), &rational(1, 1));
        assert_eq!(v, rational(4, 1)); // (1+1)(3-1) = 4
        let sub = b.substitute_q1(&rational(1, 2));
        // 2*(3 - q2) -> cleared to integer: (6 - 2q2) or (3 - q2); sign pattern matters only
        assert_eq!(sub.degree(), Some(1));
    }

    #[test]
    fn bipoly_transpose_swaps_variables() {
        let b = BiPoly::separable(&IntPoly::from_i64(&[0, 1]), &IntPoly::from_i64(&[2, 0, 5]));
        let t = b.transpose();
        assert_eq!(b.eval(&rational(2, 1), &rational(3, 1)), t.eval(&rational(3, 1), &rational(2, 1)));
    }
}
