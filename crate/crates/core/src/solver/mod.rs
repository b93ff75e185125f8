//! Exact domination and total domination numbers.
//!
//! On a middle graph of a connected base graph of order at least three,
//! some minimum total dominating set consists of edge-nodes only, so
//! [`total_domination_number_middle`] searches that subspace alone.

mod bits;
mod search;

use subsets::combinations;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::operators::{middle_graph, MiddleGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
}

#[derive(Clone, Copy)]
enum Neighborhood {
    Open,
    Closed,
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    (0..g.order()).all(|v| s.contains(v) || g.adjacent(v).iter().any(|&u| s.contains(u)))
}

pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> bool {
    (0..g.order()).all(|v| g.adjacent(v).iter().any(|&u| s.contains(u)))
}

fn covers(g: &Graph, kind: Neighborhood) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|v| {
            let mut c = g.adjacent(v).to_vec();
            if let Neighborhood::Closed = kind {
                let pos = c.partition_point(|&u| u < v);
                c.insert(pos, v);
            }
            c
        })
        .collect()
}

fn solve_restricted(g: &Graph, kind: Neighborhood, allowed: &[usize]) -> Result<Option<SolveResult>> {
    let cover = covers(g, kind);
    let found = search::min_cover(g.order(), allowed, &cover)?;
    Ok(found.map(|f| SolveResult {
        value: f.chosen.len(),
        witness: VertexSet::new(g.order(), f.chosen).expect("solver picks valid vertices"),
        nodes_explored: f.nodes,
    }))
}

/// Solves each component separately and sums, mapping witnesses back.
fn solve_by_components(
    g: &Graph,
    solve: impl Fn(&Graph) -> Result<SolveResult>,
) -> Result<SolveResult> {
    let comps = g.connected_components();
    if comps.len() <= 1 {
        return solve(g);
    }
    let mut value = 0;
    let mut nodes = 0;
    let mut members = Vec::new();
    for comp in &comps {
        let sub = g.induced_subgraph(comp)?;
        let r = solve(&sub)?;
        value += r.value;
        nodes += r.nodes_explored;
        members.extend(r.witness.iter().map(|k| comp.as_slice()[k]));
    }
    Ok(SolveResult {
        value,
        witness: VertexSet::new(g.order(), members)?,
        nodes_explored: nodes,
    })
}

/// `γ_t(G)` with a witness; disconnected graphs are solved per component.
pub fn total_domination_number(g: &Graph) -> Result<SolveResult> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::TotalDominationUndefined(v));
    }
    solve_by_components(g, |h| {
        let all: Vec<usize> = (0..h.order()).collect();
        solve_restricted(h, Neighborhood::Open, &all)?
            .ok_or_else(|| Error::TotalDominationUndefined(h.isolated_vertex().unwrap_or(0)))
    })
}

/// `γ(G)` with a witness.
pub fn domination_number(g: &Graph) -> Result<SolveResult> {
    solve_by_components(g, |h| {
        let all: Vec<usize> = (0..h.order()).collect();
        Ok(solve_restricted(h, Neighborhood::Closed, &all)?
            .expect("closed neighborhoods always cover"))
    })
}

/// `γ_t(M(G))` searching edge-nodes only. The base graph must be connected
/// with at least three vertices.
pub fn total_domination_number_middle(mg: &MiddleGraph) -> Result<SolveResult> {
    if mg.base_order() < 3 || !mg.graph().is_connected() {
        return Err(Error::UseGeneralSolver);
    }
    let allowed: Vec<usize> = mg.edge_nodes().collect();
    solve_restricted(mg.graph(), Neighborhood::Open, &allowed)?.ok_or(Error::UseGeneralSolver)
}

/// `γ_t(M(G))` for any base graph without isolated vertices. Components of
/// order at least three take the edge-node fast path; `K_2` components
/// contribute 2. The witness lives in `M(G)` as built by [`middle_graph`].
pub fn middle_total_domination(g: &Graph) -> Result<SolveResult> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::TotalDominationUndefined(v));
    }
    let whole = middle_graph(g);
    let mut value = 0;
    let mut nodes = 0;
    let mut members = Vec::new();
    for comp in g.connected_components() {
        let sub = g.induced_subgraph(&comp)?;
        let local = middle_graph(&sub);
        let r = if sub.order() >= 3 {
            total_domination_number_middle(&local)?
        } else {
            total_domination_number(local.graph())?
        };
        value += r.value;
        nodes += r.nodes_explored;
        let back = |k: usize| comp.as_slice()[k];
        for v in r.witness.iter() {
            members.push(match local.pair(v) {
                Some((a, b)) => whole.edge_node(back(a), back(b)).expect("edge of component"),
                None => back(v),
            });
        }
    }
    Ok(SolveResult {
        value,
        witness: VertexSet::new(whole.graph().order(), members)?,
        nodes_explored: nodes,
    })
}

/// Rewrites a total dominating set of `M(G)` into one made of edge-nodes
/// only, no larger than the input.
///
/// Each original vertex `v` in the set is dropped when all its edge-nodes
/// are already present, otherwise swapped for the first absent incident
/// edge-node. A dropped leaf `v` can leave its single edge-node `vw`
/// undominated; then `v` is swapped for another edge-node at `w`.
pub fn edgeify(mg: &MiddleGraph, s: &VertexSet) -> Result<VertexSet> {
    let g = mg.graph();
    if s.order() != g.order() || !is_total_dominating(g, s) {
        return Err(Error::NotTotalDominating);
    }
    let mut out = s.clone();
    loop {
        let Some(v) = out.iter().find(|&v| !mg.is_edge_node(v)) else {
            break;
        };
        let incident = mg.incident_edge_nodes(v);
        if let Some(&e) = incident.iter().find(|&&e| !out.contains(e)) {
            out.remove(v);
            out.insert(e)?;
            continue;
        }
        out.remove(v);
        let stranded = incident
            .iter()
            .copied()
            .find(|&f| !g.adjacent(f).iter().any(|&u| out.contains(u)));
        if let Some(f) = stranded {
            let (a, b) = mg.pair(f).expect("edge-node");
            let w = if a == v { b } else { a };
            let repl = mg
                .incident_edge_nodes(w)
                .iter()
                .copied()
                .find(|&e| e != f && !out.contains(e))
                .ok_or_else(|| Error::hypothesis("edge restriction", "base graph must be connected of order >= 3"))?;
            out.insert(repl)?;
        }
    }
    debug_assert!(is_total_dominating(g, &out));
    Ok(out)
}

/// Minimum of `γ_t(M(G[A]))` over `k`-subsets `A` with `G[A]` free of
/// isolated vertices; `None` when no such subset exists.
pub fn min_total_dom_over_subsets(g: &Graph, k: usize) -> Result<Option<usize>> {
    if k > g.order() {
        return Err(Error::OrderTooSmall { min: k, got: g.order() });
    }
    if k < 2 {
        return Ok(None);
    }
    let mut best: Option<usize> = None;
    for subset in combinations(g.order(), k) {
        let a = VertexSet::new(g.order(), subset)?;
        let sub = g.induced_subgraph(&a)?;
        if sub.has_isolated_vertex() {
            continue;
        }
        let value = middle_total_domination(&sub)?.value;
        best = Some(best.map_or(value, |b| b.min(value)));
    }
    Ok(best)
}

mod subsets {
    /// All `k`-subsets of `0..n` in lexicographic order.
    pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
        let mut next = (k <= n).then(|| (0..k).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut idx = current.clone();
            let mut i = k;
            while i > 0 {
                i -= 1;
                if idx[i] < n - k + i {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    next = Some(idx);
                    break;
                }
            }
            Some(current)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    fn set(order: usize, v: &[usize]) -> VertexSet {
        VertexSet::new(order, v.iter().copied()).unwrap()
    }

    #[test]
    fn domination_checks() {
        let star = fam(FamilySpec::star(4));
        assert!(is_dominating(&star, &VertexSet::full(5)));
        assert!(is_dominating(&star, &set(5, &[0])));
        assert!(!is_total_dominating(&star, &set(5, &[0])));
        let p4 = fam(FamilySpec::path(4));
        assert!(!is_dominating(&p4, &set(4, &[0])));
        let p3 = fam(FamilySpec::path(3));
        assert!(is_total_dominating(&p3, &set(3, &[0, 1])));
        assert!(!is_total_dominating(&p3, &VertexSet::empty(3)));
    }

    #[test]
    fn total_domination_basics() {
        assert_eq!(total_domination_number(&fam(FamilySpec::path(3))).unwrap().value, 2);
        let c4 = fam(FamilySpec::cycle(4));
        assert_eq!(total_domination_number(middle_graph(&c4).graph()).unwrap().value, 3);
        let c4bar = c4.complement();
        let r = total_domination_number(middle_graph(&c4bar).graph()).unwrap();
        assert_eq!(r.value, 4);
        assert!(is_total_dominating(middle_graph(&c4bar).graph(), &r.witness));
    }

    #[test]
    fn isolated_vertex_is_an_error() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let err = total_domination_number(&g).unwrap_err();
        assert!(err.to_string().contains("total domination undefined"));
        assert!(middle_total_domination(&g).is_err());
    }

    #[test]
    fn domination_basics() {
        assert_eq!(domination_number(&fam(FamilySpec::complete(5))).unwrap().value, 1);
        for n in 2..=6 {
            let mg = middle_graph(&fam(FamilySpec::star(n)));
            assert_eq!(domination_number(mg.graph()).unwrap().value, n);
        }
        for (n1, n2) in [(2, 4), (2, 5), (3, 6)] {
            let mg = middle_graph(&fam(FamilySpec::complete_bipartite(n1, n2)));
            assert_eq!(domination_number(mg.graph()).unwrap().value, n2);
        }
        assert_eq!(domination_number(&Graph::empty(3)).unwrap().value, 3);
    }

    #[test]
    fn middle_fast_path() {
        let cases = [
            (FamilySpec::path(6), 4),
            (FamilySpec::star(4), 4),
            (FamilySpec::friendship(2), 4),
        ];
        for (spec, want) in cases {
            let mg = middle_graph(&fam(spec.clone()));
            let r = total_domination_number_middle(&mg).unwrap();
            assert_eq!(r.value, want, "{spec:?}");
            assert!(r.witness.iter().all(|v| mg.is_edge_node(v)));
            assert!(is_total_dominating(mg.graph(), &r.witness));
        }
        let k2 = middle_graph(&fam(FamilySpec::path(2)));
        assert_eq!(total_domination_number_middle(&k2), Err(Error::UseGeneralSolver));
        let split = middle_graph(&fam(FamilySpec::cycle(4)).complement());
        assert_eq!(total_domination_number_middle(&split), Err(Error::UseGeneralSolver));
    }

    #[test]
    fn middle_total_domination_handles_components() {
        let g = Graph::new(7, [(0, 1), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        let r = middle_total_domination(&g).unwrap();
        // K_2 contributes 2, P_5 contributes ceil(10/3) = 4
        assert_eq!(r.value, 6);
        assert!(is_total_dominating(middle_graph(&g).graph(), &r.witness));
    }

    #[test]
    fn edgeify_swaps_and_drops_original_vertices() {
        let mg = middle_graph(&fam(FamilySpec::path(3)));
        let m01 = mg.edge_node(0, 1).unwrap();
        let m12 = mg.edge_node(1, 2).unwrap();
        // {v1, m01} leaves v2 undominated, so it is rejected
        assert_eq!(edgeify(&mg, &set(5, &[1, m01])), Err(Error::NotTotalDominating));
        // every edge-node at the center is present: the center is dropped
        assert_eq!(edgeify(&mg, &set(5, &[1, m01, m12])).unwrap(), set(5, &[m01, m12]));
        let edges_only = set(5, &[m01, m12]);
        assert_eq!(edgeify(&mg, &edges_only).unwrap(), edges_only);

        // P_4 with S = {b, c, ab, cd}: b is swapped for bc, then c is dropped
        let mg = middle_graph(&fam(FamilySpec::path(4)));
        let ab = mg.edge_node(0, 1).unwrap();
        let bc = mg.edge_node(1, 2).unwrap();
        let cd = mg.edge_node(2, 3).unwrap();
        let out = edgeify(&mg, &set(7, &[1, 2, ab, cd])).unwrap();
        assert_eq!(out, set(7, &[ab, bc, cd]));
    }

    #[test]
    fn edgeify_repairs_stranded_leaf_edge() {
        // P_4 a-b-c-d with S = {a, ab, cd, d}: dropping a alone strands ab
        let mg = middle_graph(&fam(FamilySpec::path(4)));
        let ab = mg.edge_node(0, 1).unwrap();
        let bc = mg.edge_node(1, 2).unwrap();
        let cd = mg.edge_node(2, 3).unwrap();
        let s = set(7, &[0, ab, cd, 3]);
        let out = edgeify(&mg, &s).unwrap();
        assert!(out.len() <= s.len());
        assert!(out.iter().all(|v| mg.is_edge_node(v)));
        assert!(is_total_dominating(mg.graph(), &out));
        assert!(out.contains(bc));
    }

    #[test]
    fn subset_minimum() {
        let star8 = fam(FamilySpec::star(8));
        assert_eq!(min_total_dom_over_subsets(&star8, 7).unwrap(), Some(6));
        let p5 = fam(FamilySpec::path(5));
        assert_eq!(min_total_dom_over_subsets(&p5, 3).unwrap(), Some(2));
        let g = fam(FamilySpec::cycle(5));
        let whole = total_domination_number_middle(&middle_graph(&g)).unwrap().value;
        assert_eq!(min_total_dom_over_subsets(&g, 5).unwrap(), Some(whole));
        assert_eq!(min_total_dom_over_subsets(&Graph::empty(4), 3).unwrap(), None);
        assert!(min_total_dom_over_subsets(&p5, 6).is_err());
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(5, 2).count(), 10);
        assert_eq!(combinations(4, 4).count(), 1);
        assert_eq!(combinations(3, 0).count(), 1);
        assert_eq!(combinations(2, 3).count(), 0);
    }
}
