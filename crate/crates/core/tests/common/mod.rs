#![allow(dead_code)]

use middom::solver::{is_dominating, is_total_dominating};
use middom::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All `k`-subsets of `0..n`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Smallest `k` such that some `k`-subset passes `ok`, by increasing size.
fn naive_min(g: &Graph, ok: impl Fn(&Graph, &VertexSet) -> bool) -> Option<usize> {
    let n = g.order();
    (0..=n).find(|&k| {
        subsets(n, k)
            .into_iter()
            .any(|s| ok(g, &VertexSet::new(n, s).unwrap()))
    })
}

pub fn naive_gamma(g: &Graph) -> usize {
    naive_min(g, is_dominating).expect("the full set dominates")
}

pub fn naive_gamma_t(g: &Graph) -> Option<usize> {
    naive_min(g, is_total_dominating)
}

/// A seeded `G(n, p)` draw, not necessarily connected.
pub fn random_graph(seed: u64, max_n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let p: f64 = rng.gen_range(0.2..0.9);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}
