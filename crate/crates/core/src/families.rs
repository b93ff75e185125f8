//! Named graph families and exhaustive enumerators for small orders.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_ENUM_ORDER: usize = 7;
const MAX_TREE_ORDER: usize = 10;
const CONNECT_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    DoubleStar,
    CompleteBipartite,
    Friendship,
    Wheel,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Star,
        Family::DoubleStar,
        Family::CompleteBipartite,
        Family::Friendship,
        Family::Wheel,
    ];

    pub fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::DoubleStar => "double-star",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Friendship => "friendship",
            Family::Wheel => "wheel",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::param("family", format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Result<Self> {
        if params.len() != family.arity() {
            return Err(Error::param(
                family.name(),
                format!("expects {} parameter(s), got {}", family.arity(), params.len()),
            ));
        }
        Ok(FamilySpec { family, params })
    }

    pub fn path(n: usize) -> Self {
        FamilySpec { family: Family::Path, params: vec![n] }
    }
    pub fn cycle(n: usize) -> Self {
        FamilySpec { family: Family::Cycle, params: vec![n] }
    }
    pub fn complete(n: usize) -> Self {
        FamilySpec { family: Family::Complete, params: vec![n] }
    }
    pub fn star(n: usize) -> Self {
        FamilySpec { family: Family::Star, params: vec![n] }
    }
    pub fn double_star(n: usize) -> Self {
        FamilySpec { family: Family::DoubleStar, params: vec![n] }
    }
    pub fn complete_bipartite(n1: usize, n2: usize) -> Self {
        FamilySpec { family: Family::CompleteBipartite, params: vec![n1, n2] }
    }
    pub fn friendship(n: usize) -> Self {
        FamilySpec { family: Family::Friendship, params: vec![n] }
    }
    pub fn wheel(n: usize) -> Self {
        FamilySpec { family: Family::Wheel, params: vec![n] }
    }
}

fn at_least(family: Family, name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::param(family.name(), format!("{name} >= {min} required, got {value}")))
    } else {
        Ok(())
    }
}

/// Builds a family member with the vertex numbering used throughout the
/// formulas module:
///
/// * path `P_n`: `0 - 1 - ... - n-1`
/// * cycle `C_n`: the path plus `{0, n-1}`
/// * star `K_{1,n}`: hub `0`, leaves `1..=n`
/// * double star `S_{1,n,n}`: hub `0`, edges `0-i` and `i-(n+i)` for `1 <= i <= n`
/// * `K_{n1,n2}`: one side `0..n1`, the other `n1..n1+n2`
/// * friendship `F_n`: hub `0`, spokes `0-i` for `1 <= i <= 2n`, rims `(2i-1)-(2i)`
/// * wheel `W_n` (order n): rim cycle on `0..n-1`, hub `n-1`
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let FamilySpec { family, params } = spec;
    let family = *family;
    if params.len() != family.arity() {
        return Err(Error::param(
            family.name(),
            format!("expects {} parameter(s), got {}", family.arity(), params.len()),
        ));
    }
    let n = params[0];
    match family {
        Family::Path => {
            at_least(family, "n", n, 1)?;
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle => {
            at_least(family, "n", n, 3)?;
            Graph::new(n, (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]))
        }
        Family::Complete => {
            at_least(family, "n", n, 1)?;
            Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        Family::Star => {
            at_least(family, "n", n, 1)?;
            Graph::new(n + 1, (1..=n).map(|i| (0, i)))
        }
        Family::DoubleStar => {
            at_least(family, "n", n, 1)?;
            Graph::new(2 * n + 1, (1..=n).flat_map(|i| [(0, i), (i, n + i)]))
        }
        Family::CompleteBipartite => {
            let n2 = params[1];
            at_least(family, "n1", n, 1)?;
            at_least(family, "n2", n2, 1)?;
            Graph::new(n + n2, (0..n).flat_map(|i| (n..n + n2).map(move |j| (i, j))))
        }
        Family::Friendship => {
            at_least(family, "n", n, 1)?;
            let spokes = (1..=2 * n).map(|i| (0, i));
            let rims = (1..=n).map(|i| (2 * i - 1, 2 * i));
            Graph::new(2 * n + 1, spokes.chain(rims))
        }
        Family::Wheel => {
            at_least(family, "n", n, 4)?;
            let rim = n - 1;
            let cycle = (1..rim).map(|i| (i - 1, i)).chain([(0, rim - 1)]);
            let spokes = (0..rim).map(move |i| (i, rim));
            Graph::new(n, cycle.chain(spokes))
        }
    }
}

/// Index of pair `(i, j)`, `i < j`, in the lexicographic pair order used
/// by [`all_graphs`] masks.
pub fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// The graph whose edge set is given by `mask` over lexicographic pairs.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).expect("mask edges are simple")
}

/// Every labeled graph on `n` vertices, one per edge mask.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::EnumerationTooLarge(format!(
            "all graphs on {n} vertices (limit {MAX_ENUM_ORDER})"
        )));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0..1u64 << pairs).map(move |mask| graph_from_mask(n, mask)))
}

/// Decodes a Prüfer sequence over `0..n` into its labeled tree.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Graph> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::param("prufer", format!("sequence of length {} for n = {n}", seq.len())));
    }
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::InvalidVertex { vertex: bad, order: n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges)
}

/// All labeled trees on `n` vertices (`n^(n-2)` of them for `n >= 2`).
pub fn all_trees(n: usize) -> Result<Box<dyn Iterator<Item = Graph>>> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(Error::EnumerationTooLarge(format!(
            "trees on {n} vertices (supported 1..={MAX_TREE_ORDER})"
        )));
    }
    if n == 1 {
        return Ok(Box::new(std::iter::once(Graph::empty(1))));
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    Ok(Box::new((0..total).map(move |mut code| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        prufer_decode(n, &seq).expect("valid sequence")
    })))
}

/// Seeded G(n, p) draws until one is connected; after too many rejections
/// a random spanning tree is merged into the last draw.
pub fn random_connected_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::param("random", format!("n >= 2 required, got {n}")));
    }
    if !(edge_prob > 0.0 && edge_prob <= 1.0) {
        return Err(Error::param("random", format!("edge probability in (0, 1], got {edge_prob}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = Vec::new();
    for _ in 0..CONNECT_ATTEMPTS {
        last.clear();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(edge_prob) {
                    last.push((i, j));
                }
            }
        }
        let g = Graph::new(n, last.iter().copied())?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    let tree = prufer_decode(n, &seq)?;
    let mut edges: Vec<(usize, usize)> = last.into_iter().chain(tree.edges()).collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_star_shape() {
        let g = generate(&FamilySpec::double_star(2)).unwrap();
        assert_eq!((g.order(), g.size()), (5, 4));
        let mut degrees: Vec<usize> = (0..5).map(|v| g.degree(v).unwrap()).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degrees, vec![2, 2, 2, 1, 1]);
    }

    #[test]
    fn friendship_shape() {
        let g = generate(&FamilySpec::friendship(2)).unwrap();
        assert_eq!((g.order(), g.size()), (5, 6));
        assert!(g.has_edge(1, 2) && g.has_edge(3, 4) && !g.has_edge(2, 3));
    }

    #[test]
    fn single_vertex_path() {
        let g = generate(&FamilySpec::path(1)).unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
    }

    #[test]
    fn edge_counts_and_connectivity() {
        for n in 4..=9 {
            let cases = [
                (FamilySpec::path(n), n - 1),
                (FamilySpec::cycle(n), n),
                (FamilySpec::complete(n), n * (n - 1) / 2),
                (FamilySpec::star(n), n),
                (FamilySpec::double_star(n), 2 * n),
                (FamilySpec::complete_bipartite(n, n + 1), n * (n + 1)),
                (FamilySpec::friendship(n), 3 * n),
                (FamilySpec::wheel(n), 2 * (n - 1)),
            ];
            for (spec, edges) in cases {
                let g = generate(&spec).unwrap();
                assert_eq!(g.size(), edges, "{spec:?}");
                assert!(g.is_connected(), "{spec:?}");
            }
        }
    }

    #[test]
    fn parameter_violations() {
        let err = generate(&FamilySpec::cycle(2)).unwrap_err();
        assert!(err.to_string().contains("n >= 3"));
        assert!(generate(&FamilySpec::wheel(3)).is_err());
        assert!(generate(&FamilySpec::star(0)).is_err());
        assert!(FamilySpec::new(Family::CompleteBipartite, vec![2]).is_err());
        assert!(generate(&FamilySpec { family: Family::Path, params: vec![] }).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("grid".parse::<Family>().is_err());
    }

    #[test]
    fn graph_counts() {
        assert_eq!(all_graphs(1).unwrap().count(), 1);
        assert_eq!(all_graphs(3).unwrap().count(), 8);
        assert_eq!(all_graphs(4).unwrap().count(), 64);
        assert!(all_graphs(8).is_err());
    }

    #[test]
    fn tree_counts() {
        assert_eq!(all_trees(2).unwrap().count(), 1);
        assert_eq!(all_trees(3).unwrap().count(), 3);
        assert_eq!(all_trees(4).unwrap().count(), 16);
        for n in 2..=7 {
            let mut count = 0;
            for t in all_trees(n).unwrap() {
                assert_eq!(t.size(), n - 1);
                assert_eq!(t.connected_components().len(), 1);
                count += 1;
            }
            assert_eq!(count, n.pow(n as u32 - 2));
        }
        assert!(all_trees(0).is_err() && all_trees(11).is_err());
    }

    #[test]
    fn trees_are_distinct() {
        let mut seen = std::collections::HashSet::new();
        for t in all_trees(5).unwrap() {
            let edges: Vec<_> = t.edges().collect();
            assert!(seen.insert(edges));
        }
    }

    #[test]
    fn mask_bits_match_pair_order() {
        let n = 5;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                assert_eq!(pair_bit(n, i, j), bit);
                bit += 1;
            }
        }
    }

    #[test]
    fn random_graphs() {
        let g = random_connected_graph(6, 1.0, 3).unwrap();
        assert_eq!(g, generate(&FamilySpec::complete(6)).unwrap());
        let a = random_connected_graph(6, 0.5, 7).unwrap();
        assert_eq!(a, random_connected_graph(6, 0.5, 7).unwrap());
        assert!(a.is_connected() && a.order() == 6);
        // tiny probability forces the spanning-tree fallback
        let sparse = random_connected_graph(8, 1e-9, 1).unwrap();
        assert!(sparse.is_connected());
        assert!(random_connected_graph(1, 0.5, 0).is_err());
        assert!(random_connected_graph(4, 0.0, 0).is_err());
    }
}
