//! Labeled simple undirected graphs and the tree constructions used by the
//! concatenation and pendant-attachment families.

pub mod canon;
pub mod random;

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Simple, finite, loopless graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Self {
        Graph { n, adj: vec![BTreeSet::new(); n] }
    }

    pub fn empty() -> Self {
        Self::edgeless(0)
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(n);
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, vertex_count: self.n });
            }
        }
        if self.adj[u].contains(&v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.n })
        }
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Acyclic check: every component has exactly `|V| - 1` edges.
    pub fn is_forest(&self) -> bool {
        let comps = self.components();
        let mut edges = 0;
        for c in &comps {
            edges += c.len() - 1;
        }
        self.edge_count() == edges
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.edge_count() == self.n - 1
    }

    /// Induced subgraph on `keep` (sorted, deduplicated internally), with
    /// order-preserving relabeling to `0..keep.len()`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::edgeless(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if w > v && index[w] != usize::MAX {
                    g.add_edge(i, index[w]);
                }
            }
        }
        g
    }

    /// Delete one vertex, relabeling stably.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced(&keep))
    }

    /// `G - N[a]`: delete `a` and all its neighbors, relabeling stably.
    pub fn delete_closed_neighborhood(&self, a: usize) -> Result<Graph> {
        self.check_vertex(a)?;
        let drop: BTreeSet<usize> =
            self.adj[a].iter().copied().chain(std::iter::once(a)).collect();
        let keep: Vec<usize> = (0..self.n).filter(|u| !drop.contains(u)).collect();
        Ok(self.induced(&keep))
    }

    /// Disjoint union; vertices of `other` are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::edgeless(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Attach `k` pendant edges at `v` (the graph `G^1_k` when applied once).
    /// New vertices get the next free labels.
    pub fn attach_pendants(&self, v: usize, k: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut g = Graph::edgeless(self.n + k);
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        for i in 0..k {
            g.add_edge(v, self.n + i);
        }
        Ok(g)
    }

    /// `G^2_n`: attach a pendant edge at `v` to a new vertex `w`, then `n-1`
    /// pendant edges at `w`. Requires `n >= 1`.
    pub fn attach_pendant_star_via_leaf(&self, v: usize, n: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if n < 1 {
            return Err(Error::BadInput("pendant star needs n >= 1".into()));
        }
        let w = self.n;
        let mut g = Graph::edgeless(self.n + n);
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        g.add_edge(v, w);
        for i in 1..n {
            g.add_edge(w, self.n + i);
        }
        Ok(g)
    }

    /// `G_k`: attach `k` pendant edges at every original vertex.
    pub fn attach_pendants_everywhere(&self, k: usize) -> Graph {
        let mut g = Graph::edgeless(self.n + self.n * k);
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        for v in 0..self.n {
            for i in 0..k {
                g.add_edge(v, self.n + v * k + i);
            }
        }
        g
    }

    /// Edge-list text format: first line `n m`, then `m` lines `u v`.
    pub fn to_edge_list_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n, self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    pub fn from_edge_list_text(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad vertex count".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad edge count".into()))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines.take(m) {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!("expected {m} edges, found {}", edges.len())));
        }
        Graph::from_edge_list(n, &edges)
    }
}

/// Graph with one or two distinguished vertices. For two-vertex
/// concatenation the pair must be adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedGraph {
    pub graph: Graph,
    pub v: usize,
    pub w: Option<usize>,
}

impl MarkedGraph {
    pub fn with_root(graph: Graph, v: usize) -> Result<Self> {
        graph.check_vertex(v)?;
        Ok(MarkedGraph { graph, v, w: None })
    }

    pub fn with_pair(graph: Graph, v: usize, w: usize) -> Result<Self> {
        graph.check_vertex(v)?;
        graph.check_vertex(w)?;
        if !graph.has_edge(v, w) {
            return Err(Error::MarksNotAdjacent { v, w });
        }
        Ok(MarkedGraph { graph, v, w: Some(w) })
    }

    pub fn pair(&self) -> Result<(usize, usize)> {
        let w = self.w.ok_or(Error::MissingSecondMark)?;
        Ok((self.v, w))
    }
}

/// Path on `k` vertices (`k = 0` gives the empty graph).
pub fn path(k: usize) -> Graph {
    let mut g = Graph::edgeless(k);
    for i in 1..k {
        g.add_edge(i - 1, i);
    }
    g
}

/// Star with `k` leaves; vertex 0 is the center.
pub fn star(k: usize) -> Graph {
    let mut g = Graph::edgeless(k + 1);
    for i in 1..=k {
        g.add_edge(0, i);
    }
    g
}

/// Double star `S_{l1,l2}`: adjacent centers `v = 0` (with `l1` pendants)
/// and `w = 1` (with `l2` pendants).
pub fn double_star(l1: usize, l2: usize) -> MarkedGraph {
    let mut g = Graph::edgeless(2 + l1 + l2);
    g.add_edge(0, 1);
    for i in 0..l1 {
        g.add_edge(0, 2 + i);
    }
    for i in 0..l2 {
        g.add_edge(1, 2 + l1 + i);
    }
    MarkedGraph { graph: g, v: 0, w: Some(1) }
}

/// `(k_1, ..., k_n)`-caterpillar: a path on `n` vertices with `k_i` pendant
/// edges at the `i`-th spine vertex. Pendants are labeled after the spine.
pub fn caterpillar(ks: &[usize]) -> Graph {
    let n = ks.len();
    let total: usize = n + ks.iter().sum::<usize>();
    let mut g = Graph::edgeless(total);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    let mut next = n;
    for (i, &k) in ks.iter().enumerate() {
        for _ in 0..k {
            g.add_edge(i, next);
            next += 1;
        }
    }
    g
}

/// `n`-centipede: path on `n` vertices with one pendant edge per vertex.
pub fn centipede(n: usize) -> Graph {
    caterpillar(&vec![1; n])
}

/// Spider: one center with legs that are paths of the given lengths.
pub fn spider(legs: &[usize]) -> Graph {
    let total = 1 + legs.iter().sum::<usize>();
    let mut g = Graph::edgeless(total);
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
    }
    g
}

/// `n`-concatenation through a single distinguished vertex: `n` disjoint
/// copies of the graph joined by a path through the copies' marks.
pub fn concat_one(g: &MarkedGraph, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyConcatenation);
    }
    let base = &g.graph;
    let size = base.vertex_count();
    let mut out = Graph::edgeless(size * n);
    for i in 0..n {
        let off = i * size;
        for (a, b) in base.edges() {
            out.add_edge(a + off, b + off);
        }
        if i > 0 {
            out.add_edge((i - 1) * size + g.v, off + g.v);
        }
    }
    Ok(out)
}

/// `G^n(v, w)`: `n` disjoint copies with the `n-1` edges `w_i v_{i+1}`.
/// `n = 0` gives the empty graph, so the polynomial recurrence's initial
/// condition `p_0 = 1` matches.
pub fn concat_two(g: &MarkedGraph, n: usize) -> Result<Graph> {
    let (v, w) = g.pair()?;
    let base = &g.graph;
    let size = base.vertex_count();
    let mut out = Graph::edgeless(size * n);
    for i in 0..n {
        let off = i * size;
        for (a, b) in base.edges() {
            out.add_edge(a + off, b + off);
        }
        if i > 0 {
            out.add_edge((i - 1) * size + w, off + v);
        }
    }
    Ok(out)
}

/// Rooted product `G_v[H]`: one copy of `H` per vertex of `G`, with the
/// copies' roots wired as `G`.
pub fn rooted_product(g: &Graph, h: &MarkedGraph) -> Graph {
    let size = h.graph.vertex_count();
    let mut out = Graph::edgeless(g.vertex_count() * size);
    for i in 0..g.vertex_count() {
        let off = i * size;
        for (a, b) in h.graph.edges() {
            out.add_edge(a + off, b + off);
        }
    }
    for (a, b) in g.edges() {
        out.add_edge(a * size + h.v, b * size + h.v);
    }
    out
}

/// Fibonacci tree `F_n`, root marked: `F_0` is a vertex, `F_1` an edge
/// rooted at a leaf, and `F_n` joins a fresh root to the roots of `F_{n-1}`
/// and `F_{n-2}`.
pub fn fibonacci_tree(n: usize) -> MarkedGraph {
    match n {
        0 => MarkedGraph { graph: Graph::edgeless(1), v: 0, w: None },
        1 => {
            let mut g = Graph::edgeless(2);
            g.add_edge(0, 1);
            MarkedGraph { graph: g, v: 0, w: None }
        }
        _ => {
            let a = fibonacci_tree(n - 1);
            let b = fibonacci_tree(n - 2);
            let na = a.graph.vertex_count();
            let nb = b.graph.vertex_count();
            let mut g = Graph::edgeless(1 + na + nb);
            for (u, v) in a.graph.edges() {
                g.add_edge(u + 1, v + 1);
            }
            for (u, v) in b.graph.edges() {
                g.add_edge(u + 1 + na, v + 1 + na);
            }
            g.add_edge(0, 1 + a.v);
            g.add_edge(0, 1 + na + b.v);
            MarkedGraph { graph: g, v: 0, w: None }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edge_list_basics() {
        let g = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count()), (2, 1));
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4, path(4));
    }

    #[test]
    fn from_edge_list_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(Graph::from_edge_list(2, &[(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(..))
        ));
    }

    #[test]
    fn named_families_have_documented_shapes() {
        assert_eq!(path(4).edge_count(), 3);
        let ds = double_star(1, 2);
        assert_eq!(ds.graph.vertex_count(), 5);
        assert_eq!(ds.graph.degree(ds.v), 2);
        assert_eq!(ds.graph.degree(ds.w.unwrap()), 3);
        assert_eq!(centipede(8).vertex_count(), 16);
        assert!(centipede(8).is_tree());
        let sp = spider(&[1, 2, 3]);
        assert!(sp.is_tree());
        assert_eq!(sp.vertex_count(), 7);
    }

    #[test]
    fn concat_one_counts_and_identity() {
        let k2 = MarkedGraph::with_root(path(2), 0).unwrap();
        let c = concat_one(&k2, 3).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (6, 5));
        assert!(c.is_tree());
        let same = concat_one(&k2, 1).unwrap();
        assert_eq!(same, path(2));
        let k1 = MarkedGraph::with_root(Graph::edgeless(1), 0).unwrap();
        assert_eq!(concat_one(&k1, 5).unwrap(), path(5));
        assert!(matches!(concat_one(&k1, 0), Err(Error::EmptyConcatenation)));
    }

    #[test]
    fn concat_two_shapes() {
        // K2 through its two ends, n=2 -> P4
        let k2 = MarkedGraph::with_pair(path(2), 0, 1).unwrap();
        assert_eq!(concat_two(&k2, 2).unwrap(), path(4));
        assert_eq!(concat_two(&k2, 0).unwrap(), Graph::empty());
        // P3 with w a leaf and v its neighbor, n=4 -> 12-vertex tree
        let p3 = MarkedGraph::with_pair(path(3), 1, 2).unwrap();
        let t = concat_two(&p3, 4).unwrap();
        assert_eq!(t.vertex_count(), 12);
        assert!(t.is_tree());
        // S_{1,2}, n=4 -> 20-vertex caterpillar
        let s12 = double_star(1, 2);
        let c = concat_two(&s12, 4).unwrap();
        assert_eq!(c.vertex_count(), 20);
        assert!(c.is_tree());
    }

    #[test]
    fn concat_two_requires_adjacent_marks() {
        assert!(matches!(
            MarkedGraph::with_pair(path(3), 0, 2),
            Err(Error::MarksNotAdjacent { .. })
        ));
    }

    #[test]
    fn concat_two_vertex_and_edge_counts() {
        let s12 = double_star(1, 2);
        for n in 0..6 {
            let g = concat_two(&s12, n).unwrap();
            assert_eq!(g.vertex_count(), n * 5);
            assert_eq!(g.edge_count(), n * 4 + n.saturating_sub(1));
        }
    }

    #[test]
    fn delete_closed_neighborhood_shapes() {
        let p4 = path(4);
        let r = p4.delete_closed_neighborhood(1).unwrap();
        assert_eq!((r.vertex_count(), r.edge_count()), (1, 0));
        let k2 = path(2);
        assert_eq!(k2.delete_closed_neighborhood(0).unwrap(), Graph::empty());
        let s3 = star(3);
        assert_eq!(s3.delete_closed_neighborhood(0).unwrap(), Graph::empty());
    }

    #[test]
    fn attachments() {
        let k1 = Graph::edgeless(1);
        let st = k1.attach_pendants(0, 4).unwrap();
        assert_eq!(st, star(4));
        let k2 = k1.attach_pendant_star_via_leaf(0, 1).unwrap();
        assert_eq!(k2, path(2));
        let gk = path(2).attach_pendants_everywhere(2);
        assert_eq!(gk.vertex_count(), 6);
        assert_eq!(gk.edge_count(), 5);
    }

    #[test]
    fn rooted_product_on_k1_is_h() {
        let h = MarkedGraph::with_root(path(3), 1).unwrap();
        let g = rooted_product(&Graph::edgeless(1), &h);
        assert_eq!(g, path(3));
    }

    #[test]
    fn fibonacci_small_cases() {
        assert_eq!(fibonacci_tree(0).graph.vertex_count(), 1);
        assert_eq!(fibonacci_tree(1).graph.edge_count(), 1);
        let f2 = fibonacci_tree(2);
        assert_eq!(f2.graph.vertex_count(), 4);
        assert_eq!(f2.graph.edge_count(), 3);
        assert_eq!(f2.graph.degree(f2.v), 2);
        assert!(f2.graph.is_tree());
        for n in 3..10 {
            assert!(fibonacci_tree(n).graph.is_tree());
        }
    }

    #[test]
    fn edge_list_text_round_trip() {
        let g = caterpillar(&[2, 0, 3]);
        let text = g.to_edge_list_text();
        assert_eq!(Graph::from_edge_list_text(&text).unwrap(), g);
    }
}
