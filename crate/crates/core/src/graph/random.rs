//! Uniform random labeled trees by Prüfer decoding, deterministic per seed.

use super::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// Decode a Prüfer sequence into the tree it encodes (on
/// `sequence.len() + 2` vertices).
pub fn prufer_decode(sequence: &[usize]) -> Graph {
    let n = sequence.len() + 2;
    let mut degree = vec![1u32; n];
    for &a in sequence {
        degree[a] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&i| degree[i] == 1)
        .map(Reverse)
        .collect();
    let mut g = Graph::edgeless(n);
    for &a in sequence {
        let Reverse(u) = leaves.pop().expect("valid Prüfer sequence");
        degree[u] -= 1;
        degree[a] -= 1;
        g.adj[u].insert(a);
        g.adj[a].insert(u);
        if degree[a] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let Reverse(u) = leaves.pop().unwrap();
    let Reverse(v) = leaves.pop().unwrap();
    g.adj[u].insert(v);
    g.adj[v].insert(u);
    g
}

/// Uniform random labeled tree on `n >= 1` vertices; the same seed always
/// produces the same tree.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "random tree needs at least one vertex");
    match n {
        1 => Graph::edgeless(1),
        2 => {
            let mut g = Graph::edgeless(2);
            g.adj[0].insert(1);
            g.adj[1].insert(0);
            g
        }
        _ => {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(&seq)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_cases() {
        assert_eq!(random_tree(1, 42).vertex_count(), 1);
        let k2 = random_tree(2, 42);
        assert_eq!((k2.vertex_count(), k2.edge_count()), (2, 1));
    }

    #[test]
    fn deterministic_per_seed() {
        let a = random_tree(8, 7);
        let b = random_tree(8, 7);
        assert_eq!(a, b);
        let c = random_tree(8, 8);
        // different seeds almost surely disagree on 8 vertices
        assert_ne!(a, c);
    }

    #[test]
    fn always_a_tree() {
        for seed in 0..50 {
            for n in 1..20 {
                let t = random_tree(n, seed);
                assert!(t.is_tree(), "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn prufer_decoding_is_classic() {
        // sequence (3, 3, 3, 4) on 6 vertices: star-ish tree
        let g = prufer_decode(&[3, 3, 3, 4]);
        assert!(g.is_tree());
        assert_eq!(g.degree(3), 4);
        assert_eq!(g.degree(4), 2);
    }
}
