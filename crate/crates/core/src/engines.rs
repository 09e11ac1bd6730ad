//! Independence polynomial engines.
//!
//! Three routes to the same polynomial, kept independent so they can
//! cross-validate: exhaustive subset enumeration (the oracle), a two-state
//! DP over rooted forests, and the edge-deletion recurrence
//! `p(H) = p(H - ab) - x^2 p(H - N[a] - N[b])` with memoization on
//! canonicalized subgraphs.

use crate::error::{Error, Result};
use crate::graph::canon::{graph_key, GraphKey};
use crate::graph::Graph;
use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Independence polynomial together with the quantities read off it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndPolyResult {
    pub poly: IntPoly,
    /// Independence number, `deg p`.
    pub alpha: usize,
    /// Total number of independent sets, `p(1)`.
    pub total_count: BigInt,
}

impl IndPolyResult {
    fn from_poly(poly: IntPoly, vertex_count: usize) -> Self {
        debug_assert_eq!(poly.coeff(0), BigInt::one(), "empty set must be counted once");
        debug_assert_eq!(
            poly.coeff(1),
            BigInt::from(vertex_count),
            "singletons must equal the vertex count"
        );
        let alpha = poly.degree().unwrap_or(0);
        let total_count = poly.eval_big(&BigInt::one());
        IndPolyResult { poly, alpha, total_count }
    }
}

/// Engine options: size caps and memo budget.
#[derive(Clone, Debug)]
pub struct EngineOptions {
    /// Brute-force enumeration cap on vertices.
    pub brute_cap: usize,
    /// Maximum number of memoized subgraphs in the deletion engine.
    pub memo_budget: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions { brute_cap: 26, memo_budget: 4_000_000 }
    }
}

/// Exhaustive enumeration over independent subsets, pruned by closed
/// neighborhoods. Serves as the oracle for the other engines.
pub fn indpoly_bruteforce(g: &Graph) -> Result<IndPolyResult> {
    indpoly_bruteforce_with(g, &EngineOptions::default())
}

pub fn indpoly_bruteforce_with(g: &Graph, opts: &EngineOptions) -> Result<IndPolyResult> {
    let n = g.vertex_count();
    if n > opts.brute_cap.min(63) {
        return Err(Error::TooLarge { vertices: n, cap: opts.brute_cap.min(63) });
    }
    let mut closed = vec![0u64; n];
    for v in 0..n {
        closed[v] = 1 << v;
        for w in g.neighbors(v) {
            closed[v] |= 1 << w;
        }
    }
    let mut counts = vec![BigInt::zero(); n + 1];
    // Each recursion leaf is one independent set: extend by the lowest
    // eligible vertex or stop.
    fn rec(counts: &mut [BigInt], closed: &[u64], candidates: u64, size: usize) {
        counts[size] += 1;
        let mut m = candidates;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            // keep only candidates above v and outside N[v]
            let rest = candidates & !((1u64 << (v + 1)) - 1) & !closed[v];
            rec(counts, closed, rest, size + 1);
        }
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    rec(&mut counts, &closed, all, 0);
    Ok(IndPolyResult::from_poly(IntPoly::new(counts), n))
}

/// Two-state DP over each component of a forest, rooted at the component's
/// smallest vertex. Iterative post-order, so deep paths are fine.
pub fn indpoly_tree_dp(g: &Graph) -> Result<IndPolyResult> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    let n = g.vertex_count();
    let mut total = IntPoly::one();
    for comp in g.components() {
        let root = comp[0];
        // explicit post-order
        let mut order = Vec::with_capacity(comp.len());
        let mut parent: HashMap<usize, usize> = HashMap::new();
        let mut stack = vec![root];
        let mut seen = std::collections::HashSet::new();
        seen.insert(root);
        while let Some(u) = stack.pop() {
            order.push(u);
            for v in g.neighbors(u) {
                if seen.insert(v) {
                    parent.insert(v, u);
                    stack.push(v);
                }
            }
        }
        // states: (polynomial excluding the vertex, polynomial including it)
        let mut without: HashMap<usize, IntPoly> = HashMap::new();
        let mut with: HashMap<usize, IntPoly> = HashMap::new();
        for &u in order.iter().rev() {
            let mut wout = IntPoly::one();
            let mut win = IntPoly::x();
            for v in g.neighbors(u) {
                if parent.get(&u) == Some(&v) {
                    continue;
                }
                let cw = without.remove(&v).unwrap();
                let ci = with.remove(&v).unwrap();
                wout = &wout * &(&cw + &ci);
                win = &win * &cw;
            }
            without.insert(u, wout);
            with.insert(u, win);
        }
        let comp_poly = &without[&root] + &with[&root];
        total = &total * &comp_poly;
    }
    Ok(IndPolyResult::from_poly(total, n))
}

/// Edge-deletion recurrence on general graphs with memoization on
/// canonicalized components.
pub fn indpoly_deletion(g: &Graph) -> Result<IndPolyResult> {
    indpoly_deletion_with(g, &EngineOptions::default())
}

pub fn indpoly_deletion_with(g: &Graph, opts: &EngineOptions) -> Result<IndPolyResult> {
    let mut memo: HashMap<GraphKey, IntPoly> = HashMap::new();
    let poly = deletion_rec(g, &mut memo, opts.memo_budget)?;
    Ok(IndPolyResult::from_poly(poly, g.vertex_count()))
}

fn deletion_rec(
    g: &Graph,
    memo: &mut HashMap<GraphKey, IntPoly>,
    budget: usize,
) -> Result<IntPoly> {
    if g.edge_count() == 0 {
        return Ok(IntPoly::one_plus_x_pow(g.vertex_count()));
    }
    // split into components and multiply
    let comps = g.components();
    if comps.len() > 1 {
        let mut acc = IntPoly::one();
        for comp in comps {
            let sub = g.induced(&comp);
            acc = &acc * &deletion_rec(&sub, memo, budget)?;
        }
        return Ok(acc);
    }
    let key = graph_key(g);
    if let Some(p) = memo.get(&key) {
        return Ok(p.clone());
    }
    if memo.len() >= budget {
        return Err(Error::BudgetExceeded(format!("deletion memo exceeded {budget} entries")));
    }
    // pick an edge at a maximum-degree vertex; among its neighbors prefer
    // the highest degree (fastest neighborhood shrinkage), ties by label
    let a = (0..g.vertex_count())
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap();
    let b = g
        .neighbors(a)
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap();
    let mut without_edge = g.clone();
    without_edge.remove_edge(a, b);
    let first = deletion_rec(&without_edge, memo, budget)?;
    // H - N[a] - N[b]
    let drop: std::collections::BTreeSet<usize> = g
        .neighbors(a)
        .chain(g.neighbors(b))
        .chain([a, b])
        .collect();
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|u| !drop.contains(u)).collect();
    let reduced = g.induced(&keep);
    let second = deletion_rec(&reduced, memo, budget)?;
    let result = &first - &second.mul_xpow(2);
    memo.insert(key, result.clone());
    Ok(result)
}

/// Engine selection for callers that do not care: tree DP on forests, the
/// deletion recurrence otherwise.
pub fn indpoly_auto(g: &Graph) -> Result<IndPolyResult> {
    if g.is_forest() {
        indpoly_tree_dp(g)
    } else {
        indpoly_deletion(g)
    }
}

/// Independence number by branch and bound, independent of the polynomial
/// engines; used to validate `deg p = alpha`.
pub fn independence_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 64, "branch and bound works on small graphs");
    let mut closed = vec![0u64; n];
    for v in 0..n {
        closed[v] = 1 << v;
        for w in g.neighbors(v) {
            closed[v] |= 1 << w;
        }
    }
    fn bb(closed: &[u64], candidates: u64, size: usize, best: &mut usize) {
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        // branch: take v
        bb(closed, candidates & !closed[v], size + 1, best);
        // branch: skip v
        bb(closed, candidates & !(1u64 << v), size, best);
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    bb(&closed, all, 0, &mut best);
    best
}

/// Closed form for paths: `p(P_k) = sum_j C(k+1-j, j) x^j`, extended to
/// `k = -1` and `k = 0` as the constant 1 so the marked-path data
/// `p(T_w) = p(P_{k-2})`, `p(T_v) = p(P_{k-3})` makes sense for small `k`.
pub fn path_indpoly_closed_form(k: i64) -> IntPoly {
    if k <= 0 {
        return IntPoly::one();
    }
    let top = ((k + 1) / 2) as usize;
    let mut coeffs = Vec::with_capacity(top + 1);
    for j in 0..=top {
        coeffs.push(crate::poly::binomial(k + 1 - j as i64, j as u64));
    }
    IntPoly::new(coeffs)
}

/// Data for the marked path family `P_k` with `w` a leaf and `v` its
/// neighbor: `(p(T), p(T_v), p(T_w))`.
pub fn marked_path_polynomials(k: i64) -> (IntPoly, IntPoly, IntPoly) {
    (
        path_indpoly_closed_form(k),
        path_indpoly_closed_form(k - 3),
        path_indpoly_closed_form(k - 2),
    )
}

/// The concatenation recurrence
/// `p_n = p(G) p_{n-1} - x^2 p(G_v) p(G_w) p_{n-2}`, `p_0 = 1`, `p_1 = p(G)`.
pub fn concat_recurrence(p: &IntPoly, pv: &IntPoly, pw: &IntPoly, n: usize) -> IntPoly {
    concat_sequence(p, pv, pw, n).pop().unwrap()
}

/// All of `p_0 ... p_n` from the concatenation recurrence.
pub fn concat_sequence(p: &IntPoly, pv: &IntPoly, pw: &IntPoly, n: usize) -> Vec<IntPoly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(IntPoly::one());
    if n == 0 {
        return out;
    }
    out.push(p.clone());
    let shift = (pv * pw).mul_xpow(2);
    for i in 2..=n {
        let next = &(p * &out[i - 1]) - &(&shift * &out[i - 2]);
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, centipede, double_star, path, star};

    fn ip(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    #[test]
    fn bruteforce_known_values() {
        assert_eq!(indpoly_bruteforce(&Graph::empty()).unwrap().poly, IntPoly::one());
        assert_eq!(indpoly_bruteforce(&path(4)).unwrap().poly, ip(&[1, 4, 3]));
        // star K_{1,k}: (1+x)^k + x
        for k in 0..8 {
            let expected = &IntPoly::one_plus_x_pow(k) + &IntPoly::x();
            assert_eq!(indpoly_bruteforce(&star(k)).unwrap().poly, expected);
        }
    }

    #[test]
    fn bruteforce_cap_is_enforced(){
        let g = path(30);
        assert!(matches!(indpoly_bruteforce(&g), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn tree_dp_known_values() {
        assert_eq!(indpoly_tree_dp(&path(5)).unwrap().poly, ip(&[1, 5, 6, 1]));
        let fig1 = centipede(8);
        assert_eq!(
            indpoly_tree_dp(&fig1).unwrap().poly,
            indpoly_bruteforce(&fig1).unwrap().poly
        );
    }

    #[test]
    fn tree_dp_multiplicative_on_disjoint_union() {
        let a = path(4);
        let b = star(2);
        let u = a.disjoint_union(&b);
        let pa = indpoly_tree_dp(&a).unwrap().poly;
        let pb = indpoly_tree_dp(&b).unwrap().poly;
        assert_eq!(indpoly_tree_dp(&u).unwrap().poly, &pa * &pb);
    }

    #[test]
    fn tree_dp_rejects_cycles() {
        let c3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(indpoly_tree_dp(&c3), Err(Error::NotAForest)));
    }

    #[test]
    fn deletion_known_values() {
        assert_eq!(indpoly_deletion(&path(2)).unwrap().poly, ip(&[1, 2]));
        assert_eq!(indpoly_deletion(&path(4)).unwrap().poly, ip(&[1, 4, 3]));
        assert_eq!(indpoly_deletion(&path(3)).unwrap().poly, ip(&[1, 3, 1]));
    }

    #[test]
    fn deletion_handles_cycles() {
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let brute = indpoly_bruteforce(&c5).unwrap();
        assert_eq!(indpoly_deletion(&c5).unwrap().poly, brute.poly);
    }

    #[test]
    fn path_closed_form_matches() {
        assert_eq!(path_indpoly_closed_form(4), ip(&[1, 4, 3]));
        assert_eq!(path_indpoly_closed_form(0), IntPoly::one());
        assert_eq!(path_indpoly_closed_form(5), ip(&[1, 5, 6, 1]));
        for k in 0..12 {
            let direct = indpoly_tree_dp(&path(k)).unwrap().poly;
            assert_eq!(path_indpoly_closed_form(k as i64), direct, "k = {k}");
        }
    }

    #[test]
    fn concat_recurrence_reproduces_p4() {
        let p = ip(&[1, 2]);
        let one = IntPoly::one();
        assert_eq!(concat_recurrence(&p, &one, &one, 2), ip(&[1, 4, 3]));
        assert_eq!(concat_recurrence(&p, &one, &one, 0), IntPoly::one());
        assert_eq!(concat_recurrence(&p, &one, &one, 1), p);
    }

    #[test]
    fn concat_recurrence_matches_tree_dp_on_fig3() {
        let s12 = double_star(1, 2);
        let p = indpoly_tree_dp(&s12.graph).unwrap().poly;
        let pv = indpoly_tree_dp(&s12.graph.delete_closed_neighborhood(s12.v).unwrap())
            .unwrap()
            .poly;
        let pw = indpoly_tree_dp(
            &s12.graph.delete_closed_neighborhood(s12.w.unwrap()).unwrap(),
        )
        .unwrap()
        .poly;
        let direct = indpoly_tree_dp(&graph::concat_two(&s12, 4).unwrap()).unwrap().poly;
        assert_eq!(concat_recurrence(&p, &pv, &pw, 4), direct);
    }

    #[test]
    fn alpha_matches_branch_and_bound() {
        for (g, _) in [(path(7), ()), (star(5), ()), (centipede(5), ())] {
            let r = indpoly_tree_dp(&g).unwrap();
            assert_eq!(r.alpha, independence_number(&g));
        }
    }
}
