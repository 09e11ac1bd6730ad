//! Numeric cross-checks of the two product identities behind the
//! certification routes. These are sanity checks of engine output against
//! independently evaluated closed forms; they never feed decisions.
//!
//! All evaluation is exact rational arithmetic; the only approximation is
//! the rational enclosure of `cos^2(s pi/(n+1))` (width `2^-bits`) and the
//! starting points of the complex root refinement.

use crate::engines::{concat_sequence, indpoly_auto};
use crate::error::{Error, Result};
use crate::graph::{rooted_product, Graph, MarkedGraph};
use crate::poly::sturm::squarefree_decomposition;
use crate::poly::{threshold::rational_to_f64, IntPoly};
use crate::trig::cos_sq_enclosure;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn sample_points() -> Vec<BigRational> {
    vec![
        BigRational::one(),
        BigRational::new(BigInt::one(), BigInt::from(2)),
        BigRational::from(BigInt::from(2)),
    ]
}

/// Evaluate both sides of the cosine-product factorization of `p_n` at a few
/// positive sample points and return the largest relative residual.
///
/// The hypothesis `p^2 - 4 x^2 p_v p_w > 0` is verified exactly at each
/// sample before use.
pub fn cosine_factorization_check(
    p: &IntPoly,
    pv: &IntPoly,
    pw: &IntPoly,
    n: usize,
    bits: u32,
) -> Result<f64> {
    let pn = concat_sequence(p, pv, pw, n).pop().unwrap();
    let m = n / 2; // multiplicand count; odd n adds the leading p factor
    let mut worst: f64 = 0.0;
    for x in sample_points() {
        let px = p.eval_rational(&x);
        let pvx = pv.eval_rational(&x);
        let pwx = pw.eval_rational(&x);
        let shift = BigRational::from(BigInt::from(4)) * &x * &x * &pvx * &pwx;
        if &px * &px - &shift <= BigRational::zero() {
            return Err(Error::BadInput(format!(
                "hypothesis p^2 - 4x^2 p_v p_w > 0 fails at sample x = {x}"
            )));
        }
        let lhs = pn.eval_rational(&x);
        let mut rhs = if n % 2 == 1 { px.clone() } else { BigRational::one() };
        for s in 1..=m {
            let q = cos_sq_enclosure(s as u64, (n + 1) as u64, bits).midpoint();
            rhs *= &px * &px - &shift * &q;
        }
        if lhs.is_zero() {
            continue;
        }
        let rel = ((&lhs - &rhs) / &lhs).abs();
        worst = worst.max(rational_to_f64(&rel).abs());
    }
    Ok(worst)
}

/// Complex number with exact rational parts; used for root refinement and
/// for evaluating the rooted-product factorization.
#[derive(Clone, Debug)]
struct CRat {
    re: BigRational,
    im: BigRational,
}

impl CRat {
    fn from_f64(re: f64, im: f64) -> Option<Self> {
        Some(CRat { re: BigRational::from_float(re)?, im: BigRational::from_float(im)? })
    }

    fn real(r: BigRational) -> Self {
        CRat { re: r, im: BigRational::zero() }
    }

    fn add(&self, o: &CRat) -> CRat {
        CRat { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub(&self, o: &CRat) -> CRat {
        CRat { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul(&self, o: &CRat) -> CRat {
        CRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn div(&self, o: &CRat) -> CRat {
        let d = &o.re * &o.re + &o.im * &o.im;
        CRat {
            re: (&self.re * &o.re + &self.im * &o.im) / &d,
            im: (&self.im * &o.re - &self.re * &o.im) / &d,
        }
    }

    fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Round both parts to the dyadic grid `2^-bits` to cap denominator growth.
    fn round_dyadic(&self, bits: u32) -> CRat {
        let scale = BigRational::from(BigInt::one() << bits);
        let r = |v: &BigRational| (v * &scale).round() / &scale;
        CRat { re: r(&self.re), im: r(&self.im) }
    }
}

fn eval_poly_crat(p: &IntPoly, z: &CRat) -> CRat {
    let mut acc = CRat::real(BigRational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z).add(&CRat::real(BigRational::from(c.clone())));
    }
    acc
}

/// Durand-Kerner in f64 on a square-free polynomial; returns approximate
/// complex roots.
fn durand_kerner(p: &IntPoly) -> Result<Vec<(f64, f64)>> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(Vec::new());
    }
    // monic coefficients in f64
    let lead = p.leading().unwrap();
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| {
            rational_to_f64(&BigRational::new(c.clone(), lead.clone()))
        })
        .collect();
    let evaluate = |z: (f64, f64)| -> (f64, f64) {
        let mut acc = (0.0f64, 0.0f64);
        for c in coeffs.iter().rev() {
            let re = acc.0 * z.0 - acc.1 * z.1 + c;
            let im = acc.0 * z.1 + acc.1 * z.0;
            acc = (re, im);
        }
        acc
    };
    // standard start: powers of a non-real point
    let mut roots: Vec<(f64, f64)> = (0..deg)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / (deg as f64) + 0.35;
            let r = 0.4 + 0.9 * ((k + 1) as f64) / (deg as f64);
            (r * ang.cos(), r * ang.sin())
        })
        .collect();
    for _ in 0..400 {
        let mut moved: f64 = 0.0;
        for i in 0..deg {
            let zi = roots[i];
            let mut den = (1.0f64, 0.0f64);
            for (j, zj) in roots.iter().enumerate() {
                if j != i {
                    let d = (zi.0 - zj.0, zi.1 - zj.1);
                    den = (den.0 * d.0 - den.1 * d.1, den.0 * d.1 + den.1 * d.0);
                }
            }
            let val = evaluate(zi);
            let nsq = den.0 * den.0 + den.1 * den.1;
            if nsq == 0.0 {
                return Err(Error::RootFindingFailed("coincident iterates".into()));
            }
            let delta = (
                (val.0 * den.0 + val.1 * den.1) / nsq,
                (val.1 * den.0 - val.0 * den.1) / nsq,
            );
            roots[i] = (zi.0 - delta.0, zi.1 - delta.1);
            moved = moved.max(delta.0.abs() + delta.1.abs());
        }
        if moved < 1e-13 {
            return Ok(roots);
        }
    }
    // accept slow convergence as long as residuals are small
    for &z in &roots {
        let v = evaluate(z);
        if (v.0 * v.0 + v.1 * v.1).sqrt() > 1e-6 {
            return Err(Error::RootFindingFailed("Durand-Kerner did not converge".into()));
        }
    }
    Ok(roots)
}

/// Refine a simple root of `p` by Newton steps in exact complex rationals,
/// rounding to the `2^-bits` dyadic grid between steps.
fn newton_refine(p: &IntPoly, dp: &IntPoly, start: (f64, f64), bits: u32) -> Result<CRat> {
    let mut z = CRat::from_f64(start.0, start.1)
        .ok_or_else(|| Error::RootFindingFailed("non-finite start".into()))?;
    for _ in 0..8 {
        let f = eval_poly_crat(p, &z);
        let d = eval_poly_crat(dp, &z);
        if d.norm_sq().is_zero() {
            return Err(Error::RootFindingFailed("derivative vanished".into()));
        }
        z = z.sub(&f.div(&d)).round_dyadic(bits);
    }
    Ok(z)
}

/// Evaluate both sides of the rooted-product factorization
/// `p(G_v[H], x) = prod_i (p(H-v, x) - lambda_i x p(H-N[v], x))` at sample
/// points, where the `lambda_i` run over all `|V(G)|` roots of
/// `x^{|V(G)|} p(G, 1/x)`. Returns the largest relative residual.
pub fn rooted_product_factor_check(g: &Graph, h: &MarkedGraph, bits: u32) -> Result<f64> {
    let n = g.vertex_count();
    if n > 30 {
        return Err(Error::TooLarge { vertices: n, cap: 30 });
    }
    let pg = indpoly_auto(g)?;
    let alpha = pg.alpha;
    let exact = indpoly_auto(&rooted_product(g, h))?.poly;
    let h_minus_v = h.graph.delete_vertex(h.v)?;
    let h_minus_nv = h.graph.delete_closed_neighborhood(h.v)?;
    let phv = indpoly_auto(&h_minus_v)?.poly;
    let phn = indpoly_auto(&h_minus_nv)?.poly;

    // nonzero roots of x^n p(G, 1/x) are the roots of the reversed polynomial
    let reversed = pg.poly.reversed();
    let mut lambdas: Vec<(CRat, usize)> = Vec::new();
    for (factor, mult) in squarefree_decomposition(&reversed) {
        let df = factor.derivative();
        for start in durand_kerner(&factor)? {
            let z = newton_refine(&factor, &df, start, 220)?;
            lambdas.push((z, mult));
        }
    }
    // the remaining n - alpha roots are zero: each contributes p(H-v, x)
    let zero_mult = n - alpha;

    let mut worst: f64 = 0.0;
    for x in [BigRational::one(), BigRational::new(BigInt::one(), BigInt::from(2))] {
        let a = phv.eval_rational(&x);
        let b = &x * phn.eval_rational(&x);
        let mut prod = CRat::real(BigRational::one());
        for _ in 0..zero_mult {
            prod = prod.mul(&CRat::real(a.clone()));
        }
        for (lam, mult) in &lambdas {
            let factor = CRat::real(a.clone()).sub(&lam.mul(&CRat::real(b.clone())));
            for _ in 0..*mult {
                prod = prod.mul(&factor);
            }
            prod = prod.round_dyadic(800);
        }
        let lhs = exact.eval_rational(&x);
        if lhs.is_zero() {
            continue;
        }
        let diff = prod.sub(&CRat::real(lhs.clone()));
        let rel_sq = diff.norm_sq() / (&lhs * &lhs);
        let rel = rational_to_f64(&rel_sq).abs().sqrt();
        worst = worst.max(rel);
    }
    let _ = bits;
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::indpoly_tree_dp;
    use crate::graph::{path, star, MarkedGraph};

    #[test]
    fn cosine_factorization_tiny() {
        // K2 family: p = 1+2x, pv = pw = 1
        let p = IntPoly::from_i64(&[1, 2]);
        let one = IntPoly::one();
        for n in [1usize, 2, 3, 4, 5, 6] {
            let res = cosine_factorization_check(&p, &one, &one, n, 100).unwrap();
            assert!(res < 1e-9, "n = {n}: residual {res}");
        }
    }

    #[test]
    fn cosine_factorization_p4_marks() {
        // P4 inner-marked: p = 1+4x+3x^2, pv = pw = 1+x
        let p = IntPoly::from_i64(&[1, 4, 3]);
        let pv = IntPoly::from_i64(&[1, 1]);
        let res = cosine_factorization_check(&p, &pv, &pv, 2, 100).unwrap();
        assert!(res < 1e-9, "residual {res}");
    }

    #[test]
    fn rooted_product_k1_is_exact() {
        let h = MarkedGraph::with_root(path(3), 1).unwrap();
        let res = rooted_product_factor_check(&Graph::edgeless(1), &h, 100).unwrap();
        assert!(res < 1e-10, "residual {res}");
    }

    #[test]
    fn rooted_product_k2_k2() {
        let h = MarkedGraph::with_root(path(2), 0).unwrap();
        let res = rooted_product_factor_check(&path(2), &h, 100).unwrap();
        assert!(res < 1e-9, "residual {res}");
        // and the rooted product itself is P4's polynomial
        let rp = rooted_product(&path(2), &h);
        assert_eq!(indpoly_tree_dp(&rp).unwrap().poly, IntPoly::from_i64(&[1, 4, 3]));
    }

    #[test]
    fn rooted_product_p3_star() {
        let h = MarkedGraph::with_root(star(2), 0).unwrap();
        let res = rooted_product_factor_check(&path(3), &h, 100).unwrap();
        assert!(res < 1e-9, "residual {res}");
    }
}
