//! Canonical forms and small-graph isomorphism.
//!
//! Forests canonicalize through AHU encodings rooted at centers. Small
//! general graphs go through a bounded individualization-refinement search;
//! when the budget runs out the caller falls back to the exact labeled
//! signature (fewer cache hits, never wrong).

use super::Graph;
use std::collections::BTreeMap;

/// Memoization key for a graph: canonical when cheaply available, otherwise
/// the exact labeled form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphKey {
    ForestCanon(String),
    SmallCanon(Vec<u64>),
    Labeled(Vec<u64>),
}

/// AHU encoding of the subtree of `root` in the tree induced by `comp`,
/// parent excluded. Children encodings are sorted, so the result is
/// isomorphism-invariant.
fn ahu_encode(g: &Graph, root: usize, parent: Option<usize>) -> String {
    let mut parts: Vec<String> = g
        .neighbors(root)
        .filter(|&c| Some(c) != parent)
        .map(|c| ahu_encode(g, c, Some(root)))
        .collect();
    parts.sort();
    let mut s = String::with_capacity(2 + parts.iter().map(|p| p.len()).sum::<usize>());
    s.push('(');
    for p in parts {
        s.push_str(&p);
    }
    s.push(')');
    s
}

/// Center vertices (one or two) of the tree spanned by `comp`.
fn tree_centers(g: &Graph, comp: &[usize]) -> Vec<usize> {
    if comp.len() <= 2 {
        return comp.to_vec();
    }
    let index: BTreeMap<usize, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut degree: Vec<usize> = comp.iter().map(|&v| g.degree(v)).collect();
    let mut layer: Vec<usize> =
        comp.iter().enumerate().filter(|(_, _)| false).map(|(i, _)| i).collect();
    for (i, &v) in comp.iter().enumerate() {
        if g.degree(v) <= 1 {
            layer.push(i);
            let _ = v;
        }
    }
    let mut remaining = comp.len();
    let mut current = layer;
    while remaining > 2 {
        remaining -= current.len();
        let mut next = Vec::new();
        for &i in &current {
            for w in g.neighbors(comp[i]) {
                if let Some(&j) = index.get(&w) {
                    if degree[j] > 0 {
                        degree[j] -= 1;
                        if degree[j] == 1 {
                            next.push(j);
                        }
                    }
                }
            }
            degree[i] = 0;
        }
        current = next;
        if current.is_empty() {
            break;
        }
    }
    current.into_iter().map(|i| comp[i]).collect()
}

/// Canonical string for a forest: per-component center-rooted AHU encodings
/// (minimum over the one or two centers), sorted and concatenated.
/// Returns `None` when the graph has a cycle.
pub fn forest_canonical(g: &Graph) -> Option<String> {
    if !g.is_forest() {
        return None;
    }
    let mut encodings: Vec<String> = g
        .components()
        .iter()
        .map(|comp| {
            tree_centers(g, comp)
                .into_iter()
                .map(|c| ahu_encode(g, c, None))
                .min()
                .unwrap_or_else(|| "()".to_string())
        })
        .collect();
    encodings.sort();
    Some(encodings.join(""))
}

/// Exact labeled adjacency signature: vertex count followed by the upper
/// triangle packed into 64-bit words.
pub fn labeled_signature(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    let mut out = vec![n as u64];
    let mut word = 0u64;
    let mut fill = 0u32;
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) {
                word |= 1 << fill;
            }
            fill += 1;
            if fill == 64 {
                out.push(word);
                word = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push(word);
    }
    out
}

fn signature_under(g: &Graph, perm: &[usize]) -> Vec<u64> {
    // perm[i] = original vertex placed at position i
    let n = g.vertex_count();
    let mut out = vec![n as u64];
    let mut word = 0u64;
    let mut fill = 0u32;
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(perm[u], perm[v]) {
                word |= 1 << fill;
            }
            fill += 1;
            if fill == 64 {
                out.push(word);
                word = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push(word);
    }
    out
}

/// One round of color refinement: colors become (old color, sorted multiset
/// of neighbor colors) until stable.
fn refine_colors(g: &Graph, colors: &mut Vec<usize>) {
    let n = g.vertex_count();
    loop {
        let mut keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = keys.iter().collect();
        sorted.sort();
        sorted.dedup();
        let index: BTreeMap<&(usize, Vec<usize>), usize> =
            sorted.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let next: Vec<usize> = keys.iter().map(|k| index[k]).collect();
        if next == *colors {
            return;
        }
        *colors = next;
        keys.clear();
    }
}

/// Individualization-refinement canonical signature with a node budget.
/// Returns `None` when the budget is exhausted (highly symmetric graph).
fn ir_canonical(g: &Graph, budget: &mut usize) -> Option<Vec<u64>> {
    fn go(g: &Graph, colors: Vec<usize>, best: &mut Option<Vec<u64>>, budget: &mut usize) -> bool {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let n = g.vertex_count();
        // discrete if all colors distinct
        let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            by_color.entry(c).or_default().push(v);
        }
        if by_color.len() == n {
            let mut perm = vec![0usize; n];
            for (pos, (_, vs)) in by_color.iter().enumerate() {
                perm[pos] = vs[0];
            }
            let sig = signature_under(g, &perm);
            match best {
                None => *best = Some(sig),
                Some(b) => {
                    if sig < *b {
                        *best = Some(sig);
                    }
                }
            }
            return true;
        }
        // split the smallest non-singleton class
        let class = by_color
            .values()
            .filter(|vs| vs.len() > 1)
            .min_by_key(|vs| vs.len())
            .unwrap()
            .clone();
        let fresh = n + 1;
        for &v in &class {
            let mut next = colors.clone();
            next[v] = fresh;
            refine_colors(g, &mut next);
            if !go(g, next, best, budget) {
                return false;
            }
        }
        true
    }

    let mut colors = vec![0usize; g.vertex_count()];
    refine_colors(g, &mut colors);
    let mut best = None;
    if go(g, colors, &mut best, budget) {
        best
    } else {
        None
    }
}

/// Cap below which general graphs get true canonical keys.
pub const CANON_VERTEX_CAP: usize = 12;

/// Memoization key: forest AHU for forests up to the cap, bounded IR search
/// for small general graphs, exact labeled signature otherwise.
pub fn graph_key(g: &Graph) -> GraphKey {
    if g.vertex_count() <= CANON_VERTEX_CAP {
        if let Some(s) = forest_canonical(g) {
            return GraphKey::ForestCanon(s);
        }
        let mut budget = 20_000usize;
        if let Some(sig) = ir_canonical(g, &mut budget) {
            return GraphKey::SmallCanon(sig);
        }
    }
    GraphKey::Labeled(labeled_signature(g))
}

/// Isomorphism test for small graphs (forests of any size, general graphs up
/// to [`CANON_VERTEX_CAP`]); test helper, not a general solver.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    match (forest_canonical(a), forest_canonical(b)) {
        (Some(x), Some(y)) => return x == y,
        (None, Some(_)) | (Some(_), None) => return false,
        (None, None) => {}
    }
    assert!(
        a.vertex_count() <= CANON_VERTEX_CAP,
        "isomorphism test supports general graphs only up to {CANON_VERTEX_CAP} vertices"
    );
    let mut budget_a = 1_000_000usize;
    let mut budget_b = 1_000_000usize;
    match (ir_canonical(a, &mut budget_a), ir_canonical(b, &mut budget_b)) {
        (Some(x), Some(y)) => x == y,
        _ => panic!("canonicalization budget exhausted in isomorphism test"),
    }
}

/// All non-isomorphic trees on exactly `n` vertices, by incremental leaf
/// attachment with AHU deduplication.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Graph> = vec![Graph::edgeless(1)];
    for _ in 1..n {
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            let sz = t.vertex_count();
            for v in 0..sz {
                let bigger = t.attach_pendants(v, 1).unwrap();
                let key = forest_canonical(&bigger).expect("tree stays a tree");
                if seen.insert(key) {
                    next.push(bigger);
                }
            }
        }
        level = next;
    }
    level
}

/// All non-isomorphic trees with between 1 and `n_max` vertices.
pub fn tree_corpus(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(nonisomorphic_trees).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{caterpillar, centipede, path, rooted_product, star, MarkedGraph};

    #[test]
    fn tree_counts_match_known_sequence() {
        // A000055: trees on n vertices
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(nonisomorphic_trees(i + 1).len(), e, "n = {}", i + 1);
        }
    }

    #[test]
    fn rooted_product_of_path_with_k2_is_centipede() {
        for n in 1..7 {
            let k2 = MarkedGraph::with_root(path(2), 0).unwrap();
            let rp = rooted_product(&path(n), &k2);
            assert!(is_isomorphic(&rp, &centipede(n)));
        }
    }

    #[test]
    fn caterpillar_equals_pendant_star_extension() {
        // G = (2,1)-caterpillar, then G^2_{3+1} at the last spine vertex
        // is the (2,1,3)-caterpillar.
        let g = caterpillar(&[2, 1]);
        let extended = g.attach_pendant_star_via_leaf(1, 4).unwrap();
        assert!(is_isomorphic(&extended, &caterpillar(&[2, 1, 3])));
    }

    #[test]
    fn paths_and_stars_differ() {
        assert!(!is_isomorphic(&path(4), &star(3)));
        assert!(is_isomorphic(&path(4), &path(4)));
    }

    #[test]
    fn ir_canonical_handles_cycles_and_cliques() {
        // C5 in two labelings
        let c5a = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let c5b = Graph::from_edge_list(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(is_isomorphic(&c5a, &c5b));
        // K4 vs C4
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_isomorphic(&k4, &c4));
    }

    #[test]
    fn graph_keys_collapse_isomorphic_forests() {
        let a = caterpillar(&[0, 2, 1]);
        let b = caterpillar(&[1, 2, 0]);
        assert!(is_isomorphic(&a, &b));
        assert_eq!(graph_key(&a), graph_key(&b));
    }
}
