//! Graph transforms: middle graph, line graph, corona, 2-corona and join.

use crate::graph::{Graph, VertexLabel};

/// `M(G)` together with the map from base edges to edge-node indices.
///
/// Vertices `0..base_order` are the original vertices of `G`; vertex
/// `base_order + k` is the edge-node of the `k`-th edge of `G` in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiddleGraph {
    graph: Graph,
    base_order: usize,
    pairs: Vec<(usize, usize)>,
}

impl MiddleGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn base_size(&self) -> usize {
        self.pairs.len()
    }

    /// Vertex index of the edge-node for base edge `{i, j}` (either order).
    pub fn edge_node(&self, i: usize, j: usize) -> Option<usize> {
        let key = (i.min(j), i.max(j));
        self.pairs
            .binary_search(&key)
            .ok()
            .map(|k| self.base_order + k)
    }

    pub fn is_edge_node(&self, v: usize) -> bool {
        v >= self.base_order && v < self.graph.order()
    }

    /// Base edge of an edge-node.
    pub fn pair(&self, v: usize) -> Option<(usize, usize)> {
        v.checked_sub(self.base_order)
            .and_then(|k| self.pairs.get(k).copied())
    }

    pub fn edge_nodes(&self) -> std::ops::Range<usize> {
        self.base_order..self.graph.order()
    }

    /// Edge-nodes incident to original vertex `v`.
    pub fn incident_edge_nodes(&self, v: usize) -> &[usize] {
        self.graph.adjacent(v)
    }
}

fn incidence(g: &Graph) -> (Vec<(usize, usize)>, Vec<Vec<usize>>) {
    let pairs: Vec<(usize, usize)> = g.edges().collect();
    let mut inc = vec![Vec::new(); g.order()];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        inc[i].push(k);
        inc[j].push(k);
    }
    (pairs, inc)
}

/// Edge-node neighborhoods among edge-nodes (indices into the edge list).
fn line_rows(pairs: &[(usize, usize)], inc: &[Vec<usize>]) -> Vec<Vec<usize>> {
    pairs
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| {
            let mut row: Vec<usize> = inc[i]
                .iter()
                .chain(&inc[j])
                .copied()
                .filter(|&e| e != k)
                .collect();
            row.sort_unstable();
            row.dedup();
            row
        })
        .collect()
}

pub fn middle_graph(g: &Graph) -> MiddleGraph {
    let n = g.order();
    let (pairs, inc) = incidence(g);
    let lines = line_rows(&pairs, &inc);
    let mut adj: Vec<Vec<usize>> = inc
        .iter()
        .map(|list| list.iter().map(|&k| n + k).collect())
        .collect();
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let mut row = Vec::with_capacity(2 + lines[k].len());
        row.push(i);
        row.push(j);
        row.extend(lines[k].iter().map(|&e| n + e));
        adj.push(row);
    }
    let labels = (0..n)
        .map(VertexLabel::Original)
        .chain(pairs.iter().map(|&(i, j)| VertexLabel::EdgeNode(i, j)))
        .collect();
    MiddleGraph {
        graph: Graph::from_sorted_adjacency(adj, labels),
        base_order: n,
        pairs,
    }
}

pub fn line_graph(g: &Graph) -> Graph {
    let (pairs, inc) = incidence(g);
    let adj = line_rows(&pairs, &inc);
    let labels = pairs.iter().map(|&(i, j)| VertexLabel::EdgeNode(i, j)).collect();
    Graph::from_sorted_adjacency(adj, labels)
}

/// `G ∘ K_1`: vertex `n + i` is the pendant mate of `i`.
pub fn corona_k1(g: &Graph) -> Graph {
    let n = g.order();
    let edges = g.edges().chain((0..n).map(|i| (i, n + i)));
    Graph::new(2 * n, edges).expect("corona edges are simple")
}

/// `G ∘ P_2`: vertex `i` gets the path `i - (n+i) - (2n+i)`.
pub fn two_corona(g: &Graph) -> Graph {
    let n = g.order();
    let edges = g
        .edges()
        .chain((0..n).flat_map(|i| [(i, n + i), (n + i, 2 * n + i)]));
    Graph::new(3 * n, edges).expect("2-corona edges are simple")
}

/// `G + H`; vertices of `h` are shifted by `order(g)`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.order();
    let m = h.order();
    let edges = g
        .edges()
        .chain(h.edges().map(|(a, b)| (n + a, n + b)))
        .chain((0..n).flat_map(|i| (n..n + m).map(move |j| (i, j))));
    Graph::new(n + m, edges).expect("join edges are simple")
}

/// `G + K̄_p`.
pub fn join_empty(g: &Graph, p: usize) -> Graph {
    join(g, &Graph::empty(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn middle_of_p3() {
        let mg = middle_graph(&fam(FamilySpec::path(3)));
        let g = mg.graph();
        assert_eq!((g.order(), g.size()), (5, 5));
        let m01 = mg.edge_node(0, 1).unwrap();
        let m12 = mg.edge_node(2, 1).unwrap();
        assert_eq!(g.adjacent(m01), &[0, 1, m12]);
        assert_eq!(g.degree(m01).unwrap(), 2 + 1);
        assert_eq!(g.label(m12), VertexLabel::EdgeNode(1, 2));
        assert_eq!(mg.pair(m12), Some((1, 2)));
        assert_eq!(mg.edge_node(0, 2), None);
    }

    #[test]
    fn middle_of_k2_is_p3() {
        let mg = middle_graph(&fam(FamilySpec::path(2)));
        assert!(mg.graph().is_isomorphic(&fam(FamilySpec::path(3))));
    }

    #[test]
    fn middle_of_k3() {
        let g = middle_graph(&fam(FamilySpec::complete(3))).into_graph();
        assert_eq!((g.order(), g.size()), (6, 9));
    }

    #[test]
    fn interior_edge_node_degree() {
        let mg = middle_graph(&fam(FamilySpec::path(6)));
        let m = mg.edge_node(2, 3).unwrap();
        assert_eq!(mg.graph().degree(m).unwrap(), 4);
    }

    #[test]
    fn edgeless_middle_is_copy() {
        let mg = middle_graph(&Graph::empty(3));
        assert_eq!(mg.graph(), &Graph::empty(3));
    }

    #[test]
    fn line_graphs() {
        assert!(line_graph(&fam(FamilySpec::path(4))).is_isomorphic(&fam(FamilySpec::path(3))));
        assert!(line_graph(&fam(FamilySpec::star(5))).is_isomorphic(&fam(FamilySpec::complete(5))));
        assert!(line_graph(&fam(FamilySpec::cycle(6))).is_isomorphic(&fam(FamilySpec::cycle(6))));
    }

    #[test]
    fn coronas() {
        let p3 = fam(FamilySpec::path(3));
        let c = corona_k1(&p3);
        assert_eq!((c.order(), c.size()), (6, 5));
        assert!(c.has_edge(1, 4));
        assert!(corona_k1(&Graph::empty(1)).is_isomorphic(&fam(FamilySpec::path(2))));
        let c3 = corona_k1(&fam(FamilySpec::cycle(3)));
        assert_eq!((c3.order(), c3.size()), (6, 6));

        let t = two_corona(&p3);
        assert_eq!((t.order(), t.size()), (9, 8));
        assert!(t.has_edge(2, 5) && t.has_edge(5, 8));
        assert!(two_corona(&Graph::empty(1)).is_isomorphic(&fam(FamilySpec::path(3))));
        let t3 = two_corona(&fam(FamilySpec::cycle(3)));
        assert_eq!((t3.order(), t3.size()), (9, 9));
    }

    #[test]
    fn joins() {
        let j = join(&fam(FamilySpec::complete(3)), &fam(FamilySpec::path(2)));
        assert_eq!((j.order(), j.size()), (5, 10));
        let kab = join(&Graph::empty(2), &Graph::empty(3));
        assert_eq!(kab, fam(FamilySpec::complete_bipartite(2, 3)));
        let w = join_empty(&fam(FamilySpec::cycle(5)), 1);
        assert_eq!(w, fam(FamilySpec::wheel(6)));
    }
}
