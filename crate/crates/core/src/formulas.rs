//! Closed forms for `γ_t(M(G))` and the explicit total dominating sets that
//! certify them.
//!
//! Witness builders follow the usual 1-based naming `v_1, …, v_n` and
//! `m_ij` for the edge-node of `v_i v_j`; vertex `v_i` is index `i - 1`
//! in the generated graphs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::{Graph, VertexSet};
use crate::operators::{corona_k1, join_empty, middle_graph, two_corona, MiddleGraph};
use crate::solver::{domination_number, middle_total_domination, min_total_dom_over_subsets};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    StarFormula,
    DoubleStarFormula,
    PathFormula,
    CompleteFormula,
    GeneralBounds,
    HamPathFormula,
    FamilyCorollary,
    FriendshipFormula,
    CompleteBipartiteFormula,
    LeafLowerBound,
    TreeDiam3,
    TreeDiam2,
    CoronaIdentity,
    TwoCoronaIdentity,
    JoinEmptyFormula,
    JoinSmallPBounds,
    PlusOneVertexSandwich,
    VertexDeletionSandwich,
    StarJoinK1,
    HamPathJoinFormula,
    NordhausGaddum,
}

impl TheoremId {
    pub const ALL: [TheoremId; 21] = [
        TheoremId::StarFormula,
        TheoremId::DoubleStarFormula,
        TheoremId::PathFormula,
        TheoremId::CompleteFormula,
        TheoremId::GeneralBounds,
        TheoremId::HamPathFormula,
        TheoremId::FamilyCorollary,
        TheoremId::FriendshipFormula,
        TheoremId::CompleteBipartiteFormula,
        TheoremId::LeafLowerBound,
        TheoremId::TreeDiam3,
        TheoremId::TreeDiam2,
        TheoremId::CoronaIdentity,
        TheoremId::TwoCoronaIdentity,
        TheoremId::JoinEmptyFormula,
        TheoremId::JoinSmallPBounds,
        TheoremId::PlusOneVertexSandwich,
        TheoremId::VertexDeletionSandwich,
        TheoremId::StarJoinK1,
        TheoremId::HamPathJoinFormula,
        TheoremId::NordhausGaddum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::StarFormula => "star",
            TheoremId::DoubleStarFormula => "double-star",
            TheoremId::PathFormula => "path",
            TheoremId::CompleteFormula => "complete",
            TheoremId::GeneralBounds => "general-bounds",
            TheoremId::HamPathFormula => "ham-path",
            TheoremId::FamilyCorollary => "family-corollary",
            TheoremId::FriendshipFormula => "friendship",
            TheoremId::CompleteBipartiteFormula => "complete-bipartite",
            TheoremId::LeafLowerBound => "leaf-lower-bound",
            TheoremId::TreeDiam3 => "tree-diam3",
            TheoremId::TreeDiam2 => "tree-diam2",
            TheoremId::CoronaIdentity => "corona",
            TheoremId::TwoCoronaIdentity => "two-corona",
            TheoremId::JoinEmptyFormula => "join-empty",
            TheoremId::JoinSmallPBounds => "join-small-p",
            TheoremId::PlusOneVertexSandwich => "plus-one-vertex",
            TheoremId::VertexDeletionSandwich => "vertex-deletion",
            TheoremId::StarJoinK1 => "star-join-k1",
            TheoremId::HamPathJoinFormula => "ham-path-join",
            TheoremId::NordhausGaddum => "nordhaus-gaddum",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::param("theorem", format!("unknown theorem id `{s}`")))
    }
}

/// Parameter record of a formula evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Params {
    Order(usize),
    Bipartite { n1: usize, n2: usize },
    /// Leaf counts of the two centers of a diameter-3 tree.
    Centers { p: usize, q: usize },
    Join { n: usize, p: usize },
    /// Base order and a precomputed `γ(M(G))`.
    Corona { n: usize, gamma: usize },
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Params::Order(n) => write!(f, "n={n}"),
            Params::Bipartite { n1, n2 } => write!(f, "n1={n1} n2={n2}"),
            Params::Centers { p, q } => write!(f, "p={p} q={q}"),
            Params::Join { n, p } => write!(f, "n={n} p={p}"),
            Params::Corona { n, gamma } => write!(f, "n={n} gamma={gamma}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaValue {
    Exact(usize),
    /// `hi = None` when no upper bound is available.
    Interval { lo: usize, hi: Option<usize> },
}

impl FormulaValue {
    pub fn contains(&self, x: usize) -> bool {
        match *self {
            FormulaValue::Exact(v) => v == x,
            FormulaValue::Interval { lo, hi } => lo <= x && hi.is_none_or(|h| x <= h),
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match *self {
            FormulaValue::Exact(v) => Some(v),
            FormulaValue::Interval { .. } => None,
        }
    }
}

impl fmt::Display for FormulaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FormulaValue::Exact(v) => write!(f, "{v}"),
            FormulaValue::Interval { lo, hi: Some(h) } => write!(f, "[{lo}, {h}]"),
            FormulaValue::Interval { lo, hi: None } => write!(f, "[{lo}, ?]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaResult {
    pub theorem: TheoremId,
    pub value: FormulaValue,
    pub params: Params,
}

/// A total dominating set together with the middle graph it lives in.
#[derive(Debug, Clone)]
pub struct Witness {
    pub middle: MiddleGraph,
    pub set: VertexSet,
}

fn two_thirds(n: usize) -> usize {
    (2 * n).div_ceil(3)
}

fn require(theorem: TheoremId, ok: bool, reason: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::hypothesis(theorem.name(), reason()))
    }
}

fn wrong_params(theorem: TheoremId, params: &Params) -> Error {
    Error::hypothesis(theorem.name(), format!("unexpected parameters {params}"))
}

fn exact(theorem: TheoremId, params: Params, v: usize) -> FormulaResult {
    FormulaResult {
        theorem,
        value: FormulaValue::Exact(v),
        params,
    }
}

/// Checks that `(n, p)` lies in one of the two ranges of the join formula.
fn join_range(n: usize, p: usize) -> Result<()> {
    let t = TheoremId::JoinEmptyFormula;
    require(t, n >= 2, || format!("order n >= 2 required, got {n}"))?;
    require(t, p >= 2 * n || (n <= 2 * p && p < 2 * n), || {
        format!("need p >= 2n or n/2 <= p <= 2n-1, got n={n} p={p}")
    })
}

/// The closed form of a theorem at the given parameters.
pub fn closed_form(theorem: TheoremId, params: &Params) -> Result<FormulaResult> {
    use TheoremId as T;
    let t = theorem;
    let p = *params;
    match (theorem, p) {
        (T::StarFormula, Params::Order(n)) => {
            require(t, n >= 2, || format!("star K_1,n needs n >= 2, got {n}"))?;
            Ok(exact(t, p, n))
        }
        (T::DoubleStarFormula, Params::Order(n)) => {
            require(t, n >= 1, || "double star needs n >= 1".into())?;
            Ok(exact(t, p, 2 * n))
        }
        (T::PathFormula, Params::Order(n)) => {
            require(t, n >= 3, || format!("path P_n needs n >= 3, got {n}"))?;
            Ok(exact(t, p, two_thirds(n)))
        }
        (T::CompleteFormula | T::HamPathFormula, Params::Order(n)) => {
            require(t, n >= 2, || format!("order n >= 2 required, got {n}"))?;
            Ok(exact(t, p, two_thirds(n)))
        }
        (T::FamilyCorollary, Params::Order(n)) => {
            require(t, n >= 3, || format!("n >= 3 required, got {n}"))?;
            Ok(exact(t, p, two_thirds(n)))
        }
        (T::GeneralBounds, Params::Order(n)) => general_bounds(n),
        (T::FriendshipFormula, Params::Order(n)) => {
            require(t, n >= 2, || format!("friendship F_n needs n >= 2, got {n}"))?;
            Ok(exact(t, p, 2 * n))
        }
        (T::CompleteBipartiteFormula, Params::Bipartite { n1, n2 }) => {
            require(t, 2 <= n1 && n1 <= n2, || format!("need n2 >= n1 >= 2, got n1={n1} n2={n2}"))?;
            let v = if n2 >= 2 * n1 {
                n2
            } else {
                n2 + (2 * n1 - n2).div_ceil(3)
            };
            Ok(exact(t, p, v))
        }
        (T::TreeDiam3, Params::Centers { p: a, q: b }) => {
            require(t, a >= 1 && b >= 1, || format!("both centers need a leaf, got p={a} q={b}"))?;
            let n = a + b + 2;
            Ok(exact(t, p, if a >= 2 && b >= 2 { n - 2 } else { n - 1 }))
        }
        (T::TreeDiam2, Params::Order(n)) => {
            require(t, n >= 3, || format!("diameter 2 needs order n >= 3, got {n}"))?;
            Ok(exact(t, p, n - 1))
        }
        (T::CoronaIdentity, Params::Corona { n, gamma }) => {
            require(t, n >= 1, || "order n >= 1 required".into())?;
            Ok(exact(t, p, n + gamma))
        }
        (T::TwoCoronaIdentity, Params::Order(n)) => {
            require(t, n >= 1, || "order n >= 1 required".into())?;
            Ok(exact(t, p, 2 * n))
        }
        (T::JoinEmptyFormula, Params::Join { n, p: q }) => {
            join_range(n, q)?;
            Ok(exact(t, p, if q >= 2 * n { q } else { two_thirds(n + q) }))
        }
        (T::StarJoinK1, Params::Order(n)) => {
            require(t, n >= 4, || format!("star K_1,n needs n >= 4, got {n}"))?;
            Ok(exact(t, p, n))
        }
        (T::HamPathJoinFormula, Params::Join { n, p: q }) => {
            require(t, n >= 2 && q >= 1 && 2 * q + 2 <= n, || {
                format!("need n >= 2 and 1 <= p <= n/2 - 1, got n={n} p={q}")
            })?;
            Ok(exact(t, p, two_thirds(n + q)))
        }
        _ => Err(wrong_params(theorem, params)),
    }
}

/// `[⌈2n/3⌉, n − 1]` for graphs of order `n`.
///
/// At `n = 2` the two ends cross (`2 > 1`), so orders below 3 are rejected.
pub fn general_bounds(n: usize) -> Result<FormulaResult> {
    let t = TheoremId::GeneralBounds;
    require(t, n >= 3, || format!("order n >= 3 required, got {n}"))?;
    Ok(FormulaResult {
        theorem: t,
        value: FormulaValue::Interval {
            lo: two_thirds(n),
            hi: Some(n - 1),
        },
        params: Params::Order(n),
    })
}

/// Bounds on `γ_t(M(G + K̄_p))` for `1 <= p <= n/2 - 1`: lower `⌈2(n+p)/3⌉`,
/// upper `2p` plus the best `γ_t(M(G[A]))` over `(n - 2p)`-subsets.
pub fn join_small_p_bounds(g: &Graph, p: usize) -> Result<FormulaResult> {
    let t = TheoremId::JoinSmallPBounds;
    let n = g.order();
    require(t, n >= 2 && g.is_connected(), || "G must be connected of order >= 2".into())?;
    require(t, p >= 1 && 2 * p + 2 <= n, || format!("need 1 <= p <= n/2 - 1, got n={n} p={p}"))?;
    let hi = min_total_dom_over_subsets(g, n - 2 * p)?.map(|m| 2 * p + m);
    Ok(FormulaResult {
        theorem: t,
        value: FormulaValue::Interval {
            lo: two_thirds(n + p),
            hi,
        },
        params: Params::Join { n, p },
    })
}

/// `|leaf(T)|`, a lower bound on `γ_t(M(T))` for trees of order at least 2.
pub fn leaf_lower_bound(t: &Graph) -> Result<usize> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.order() < 2 {
        return Err(Error::OrderTooSmall { min: 2, got: t.order() });
    }
    Ok(t.leaves().len())
}

/// `[γ_t(M(G)), γ_t(M(G)) + 1]`, which contains `γ_t(M(G + K̄_1))`.
pub fn plus_one_vertex_sandwich(g: &Graph) -> Result<FormulaResult> {
    let t = TheoremId::PlusOneVertexSandwich;
    require(t, g.order() >= 2, || "order n >= 2 required".into())?;
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::TotalDominationUndefined(v));
    }
    let base = middle_total_domination(g)?.value;
    Ok(FormulaResult {
        theorem: t,
        value: FormulaValue::Interval {
            lo: base,
            hi: Some(base + 1),
        },
        params: Params::Order(g.order()),
    })
}

/// `[γ_t(M(G − v)), γ_t(M(G − v)) + 1]`, which contains `γ_t(M(G))` when
/// `G` is connected and `v` has no leaf neighbor.
pub fn vertex_deletion_sandwich(g: &Graph, v: usize) -> Result<FormulaResult> {
    let t = TheoremId::VertexDeletionSandwich;
    require(t, g.order() >= 2 && g.is_connected(), || "G must be connected of order >= 2".into())?;
    g.degree(v)?;
    require(t, g.adjacent(v).iter().all(|&u| g.adjacent(u).len() != 1), || {
        format!("vertex {v} is adjacent to a leaf")
    })?;
    let base = middle_total_domination(&g.remove_vertex(v)?)?.value;
    Ok(FormulaResult {
        theorem: t,
        value: FormulaValue::Interval {
            lo: base,
            hi: Some(base + 1),
        },
        params: Params::Order(g.order()),
    })
}

/// The four bounds on `γ_t(M(G))` and `γ_t(M(Ḡ))` for graphs of order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NordhausGaddumBounds {
    pub sum_lo: usize,
    pub sum_hi: usize,
    pub product_lo: usize,
    pub product_hi: usize,
}

impl NordhausGaddumBounds {
    pub fn holds(&self, a: usize, b: usize) -> bool {
        (self.sum_lo..=self.sum_hi).contains(&(a + b)) && (self.product_lo..=self.product_hi).contains(&(a * b))
    }
}

pub fn nordhaus_gaddum_bounds(n: usize) -> Result<NordhausGaddumBounds> {
    require(TheoremId::NordhausGaddum, n >= 2, || format!("order n >= 2 required, got {n}"))?;
    let lo = two_thirds(n);
    Ok(NordhausGaddumBounds {
        sum_lo: 2 * lo,
        sum_hi: 2 * (n - 1),
        product_lo: lo * lo,
        product_hi: (n - 1) * (n - 1),
    })
}

/// The base graph a theorem talks about at the given parameters; the
/// quantity of interest is `γ_t` of its middle graph. Graph-dependent
/// theorems use `P_n` as their representative base.
pub fn instance(theorem: TheoremId, params: &Params) -> Result<Graph> {
    use TheoremId as T;
    closed_form(theorem, params)?;
    match (theorem, *params) {
        (T::StarFormula, Params::Order(n)) => generate(&FamilySpec::star(n)),
        (T::TreeDiam2, Params::Order(n)) => generate(&FamilySpec::star(n - 1)),
        (T::DoubleStarFormula, Params::Order(n)) => generate(&FamilySpec::double_star(n)),
        (T::PathFormula | T::HamPathFormula, Params::Order(n)) => generate(&FamilySpec::path(n)),
        (T::CompleteFormula, Params::Order(n)) => generate(&FamilySpec::complete(n)),
        (T::FamilyCorollary, Params::Order(n)) => generate(&FamilySpec::cycle(n)),
        (T::FriendshipFormula, Params::Order(n)) => generate(&FamilySpec::friendship(n)),
        (T::CompleteBipartiteFormula, Params::Bipartite { n1, n2 }) => {
            generate(&FamilySpec::complete_bipartite(n1, n2))
        }
        (T::TreeDiam3, Params::Centers { p, q }) => Ok(diam3_tree(p, q)),
        (T::CoronaIdentity, Params::Corona { n, .. }) => Ok(corona_k1(&generate(&FamilySpec::path(n))?)),
        (T::TwoCoronaIdentity, Params::Order(n)) => Ok(two_corona(&generate(&FamilySpec::path(n))?)),
        (T::JoinEmptyFormula | T::HamPathJoinFormula, Params::Join { n, p }) => {
            Ok(join_empty(&generate(&FamilySpec::path(n))?, p))
        }
        (T::StarJoinK1, Params::Order(n)) => Ok(join_empty(&generate(&FamilySpec::star(n))?, 1)),
        _ => Err(wrong_params(theorem, params)),
    }
}

/// Double broom with centers `n-2` (leaves `0..p`) and `n-1` (leaves
/// `p..p+q`), `n = p + q + 2`.
pub fn diam3_tree(p: usize, q: usize) -> Graph {
    let n = p + q + 2;
    let (v, w) = (n - 2, n - 1);
    let edges = (0..p)
        .map(|i| (i, v))
        .chain((p..p + q).map(|i| (i, w)))
        .chain([(v, w)]);
    Graph::new(n, edges).expect("double broom is simple")
}

/// Leaf counts `(p, q)` of the two centers of a diameter-3 tree, lower
/// indexed center first.
pub fn diam3_centers(t: &Graph) -> Result<(usize, usize)> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let theorem = TheoremId::TreeDiam3;
    let d = t.diameter()?;
    require(theorem, d == 3, || format!("diameter must be 3, got {d}"))?;
    let centers: Vec<usize> = (0..t.order()).filter(|&v| t.adjacent(v).len() > 1).collect();
    match centers.as_slice() {
        &[a, b] => Ok((t.adjacent(a).len() - 1, t.adjacent(b).len() - 1)),
        _ => Err(Error::hypothesis(theorem.name(), "expected exactly two internal vertices")),
    }
}

fn set_of(mg: &MiddleGraph, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<VertexSet> {
    let mut members = Vec::new();
    for (a, b) in pairs {
        let e = mg
            .edge_node(a, b)
            .ok_or_else(|| Error::hypothesis("witness", format!("{a}-{b} is not an edge of the base graph")))?;
        members.push(e);
    }
    VertexSet::new(mg.graph().order(), members)
}

/// Edges picked along a path `u_1 … u_L` (`L >= 3`): `e_k = u_k u_{k+1}`
/// for `k ≢ 0 (mod 3)` with the residue-dependent tail.
fn path_pairs(seq: &[usize]) -> Vec<(usize, usize)> {
    let l = seq.len();
    debug_assert!(l >= 3);
    let body = match l % 3 {
        0 => l - 1,
        1 => l - 2,
        _ => l - 3,
    };
    let mut ks: Vec<usize> = (1..=body).filter(|k| k % 3 != 0).collect();
    match l % 3 {
        1 => ks.push(l - 1),
        2 => ks.extend([l - 2, l - 1]),
        _ => {}
    }
    ks.into_iter().map(|k| (seq[k - 1], seq[k])).collect()
}

/// Witness of size `⌈2n/3⌉` from a spanning path of the base graph.
pub fn ham_path_witness(g: &Graph) -> Result<Witness> {
    let t = TheoremId::HamPathFormula;
    require(t, g.order() >= 2, || "order n >= 2 required".into())?;
    let path = g
        .hamiltonian_path()
        .ok_or_else(|| Error::hypothesis(t.name(), "no spanning path"))?;
    let middle = middle_graph(g);
    let set = if path.len() == 2 {
        // M(K_2) is P_3: the edge-node and one endpoint
        let mut s = set_of(&middle, [(path[0], path[1])])?;
        s.insert(path[0])?;
        s
    } else {
        set_of(&middle, path_pairs(&path))?
    };
    Ok(Witness { middle, set })
}

/// `S′ ∪ {m_{i(n+i)}}` in `M(G ∘ K_1)`, where `dom` is a dominating set of
/// `M(G)` (original vertices allowed).
pub fn corona_witness(g: &Graph, dom: &VertexSet) -> Result<Witness> {
    let n = g.order();
    let base = middle_graph(g);
    let c = corona_k1(g);
    let middle = middle_graph(&c);
    let mut members: Vec<usize> = (0..n)
        .map(|i| middle.edge_node(i, n + i).expect("pendant edge"))
        .collect();
    for v in dom.iter() {
        members.push(match base.pair(v) {
            Some((a, b)) => middle.edge_node(a, b).expect("base edge survives"),
            None => v,
        });
    }
    let set = VertexSet::new(middle.graph().order(), members)?;
    Ok(Witness { middle, set })
}

/// `{m_{i(n+i)}, m_{(n+i)(2n+i)}}` in `M(G ∘ P_2)`.
pub fn two_corona_witness(g: &Graph) -> Result<Witness> {
    let n = g.order();
    let middle = middle_graph(&two_corona(g));
    let set = set_of(&middle, (0..n).flat_map(|i| [(i, n + i), (n + i, 2 * n + i)]))?;
    Ok(Witness { middle, set })
}

/// Witness for `M(G + K̄_p)` using only edges between the two sides, so it
/// is valid for every `G` of order `n`.
pub fn join_witness(g: &Graph, p: usize) -> Result<Witness> {
    let n = g.order();
    join_range(n, p)?;
    let middle = middle_graph(&join_empty(g, p));
    // 1-based vertex names
    let v = |i: usize| i - 1;
    let m = |i: usize, j: usize| (v(i), v(j));
    let mut pairs = Vec::new();
    if p >= 2 * n {
        pairs.extend((1..=n).flat_map(|i| [m(i, n + i), m(i, 2 * n + i)]));
        pairs.extend((1..=p - 2 * n).map(|i| m(1, 3 * n + i)));
    } else if p == 2 * n - 1 {
        pairs.extend((1..n).flat_map(|i| [m(i, n + i), m(i, 2 * n + i)]));
        pairs.extend([m(n, 2 * n), m(n, 2 * n - 1)]);
    } else if n + 3 <= p && p + 2 <= 2 * n {
        let k = p - n;
        pairs.extend((1..=k).flat_map(|i| [m(i, n + i), m(i, 2 * n + i)]));
        let seq: Vec<usize> = (k + 1..=n).flat_map(|i| [v(i), v(n + i)]).collect();
        pairs.extend(path_pairs(&seq));
    } else if p == n + 2 {
        // along v_{n+1} v_1 v_{n+2} v_2 … v_n v_{2n+1}, plus the pendant v_{2n+2}
        let e = |j: usize| {
            let i = j.div_ceil(2);
            if j % 2 == 1 {
                m(i, n + i)
            } else {
                m(i, n + i + 1)
            }
        };
        pairs.extend((1..2 * n).filter(|j| j % 3 != 0).map(e));
        pairs.extend([e(2 * n), m(n, 2 * n + 2)]);
    } else if n <= p + 1 && p <= n + 1 {
        let mut seq = Vec::new();
        if p == n + 1 {
            seq.push(v(n + 1));
            seq.extend((1..=n).flat_map(|i| [v(i), v(n + i + 1)]));
        } else {
            seq.extend((1..=n).flat_map(|i| [v(i), v(n + i)]));
            // p = n - 1 has no v_{2n}
            seq.truncate(n + p);
        }
        pairs.extend(path_pairs(&seq));
    } else if 2 * p == n {
        let h = n / 2;
        pairs.extend((1..=h).flat_map(|i| [m(i, n + i), m(i + h, n + i)]));
    } else {
        let k = n - p;
        pairs.extend((1..=k).flat_map(|i| [m(i, n + i), m(k + i, n + i)]));
        if 2 * k + 1 == n {
            // odd n with p = ⌈n/2⌉: one original and one K̄ vertex left over
            pairs.extend([m(n, n + p), m(n, n + 1)]);
        } else {
            let seq: Vec<usize> = (0..n - 2 * k)
                .flat_map(|t| [v(2 * k + 1 + t), v(n + k + 1 + t)])
                .collect();
            pairs.extend(path_pairs(&seq));
        }
    }
    let set = set_of(&middle, pairs)?;
    Ok(Witness { middle, set })
}

/// Witness pairs for the square `K_{n,n}` as 1-based `(v, u)` indices,
/// both shifted by `shift`. Each three rows `a, a+1, a+2` take
/// `m_aa, m_a(a+1), m_(a+1)(a+2), m_(a+2)(a+2)`.
fn bipartite_square(n: usize, shift: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in (1..=n - n % 3).step_by(3) {
        out.extend([(a, a), (a, a + 1), (a + 1, a + 2), (a + 2, a + 2)]);
    }
    match n % 3 {
        1 if n == 1 => out.push((1, 1)),
        1 => out.extend([(n, n - 1), (n, n)]),
        2 => out.extend([(n - 1, n - 1), (n - 1, n), (n, n)]),
        _ => {}
    }
    out.into_iter().map(|(a, b)| (a + shift, b + shift)).collect()
}

fn bipartite_witness(n1: usize, n2: usize) -> Result<Witness> {
    let g = generate(&FamilySpec::complete_bipartite(n1, n2))?;
    let middle = middle_graph(&g);
    // v_i is vertex i - 1, u_j is vertex n1 + j - 1
    let vu = |(i, j): (usize, usize)| (i - 1, n1 + j - 1);
    let mut pairs = Vec::new();
    if n2 >= 2 * n1 {
        pairs.extend((1..=n1).flat_map(|i| [(i, i), (i, n1 + i)]));
        pairs.extend((2 * n1 + 1..=n2).map(|j| (n1, j)));
    } else {
        let d = n2 - n1;
        pairs.extend((1..=d).flat_map(|i| [(i, i), (i, n1 + i)]));
        pairs.extend(bipartite_square(n1 - d, d));
        if n1 - d == 1 {
            // a 1x1 square has a single edge-node; pair it with m_{n1,1}
            pairs.push((n1, 1));
        }
    }
    let set = set_of(&middle, pairs.into_iter().map(vu))?;
    Ok(Witness { middle, set })
}

/// The explicit total dominating set from the proof of `theorem`.
pub fn construct_witness(theorem: TheoremId, params: &Params) -> Result<Witness> {
    use TheoremId as T;
    let g = instance(theorem, params)?;
    let all_edges = |g: &Graph| -> Result<Witness> {
        let middle = middle_graph(g);
        let set = VertexSet::new(middle.graph().order(), middle.edge_nodes())?;
        Ok(Witness { middle, set })
    };
    match (theorem, *params) {
        (T::StarFormula | T::TreeDiam2 | T::DoubleStarFormula, _) => all_edges(&g),
        (T::PathFormula | T::HamPathFormula | T::CompleteFormula | T::FamilyCorollary | T::HamPathJoinFormula, _) => {
            ham_path_witness(&g)
        }
        (T::FriendshipFormula, Params::Order(n)) => {
            let middle = middle_graph(&g);
            let pairs = (1..2 * n).step_by(2).flat_map(|i| [(i, i + 1), (0, i)]);
            let set = set_of(&middle, pairs)?;
            Ok(Witness { middle, set })
        }
        (T::CompleteBipartiteFormula, Params::Bipartite { n1, n2 }) => bipartite_witness(n1, n2),
        (T::TreeDiam3, Params::Centers { p, q }) => {
            if p < 2 || q < 2 {
                return all_edges(&g);
            }
            let n = p + q + 2;
            let middle = middle_graph(&g);
            let pairs = (0..p).map(|i| (i, n - 2)).chain((p..n - 2).map(|i| (i, n - 1)));
            let set = set_of(&middle, pairs)?;
            Ok(Witness { middle, set })
        }
        (T::CoronaIdentity, Params::Corona { n, .. }) => {
            let base = generate(&FamilySpec::path(n))?;
            let dom = domination_number(middle_graph(&base).graph())?.witness;
            corona_witness(&base, &dom)
        }
        (T::TwoCoronaIdentity, Params::Order(n)) => two_corona_witness(&generate(&FamilySpec::path(n))?),
        (T::JoinEmptyFormula, Params::Join { n, p }) => join_witness(&generate(&FamilySpec::path(n))?, p),
        (T::StarJoinK1, Params::Order(n)) => {
            let middle = middle_graph(&g);
            let pairs = (1..=n - 2).map(|i| (0, i)).chain([(n - 1, n + 1), (n, n + 1)]);
            let set = set_of(&middle, pairs)?;
            Ok(Witness { middle, set })
        }
        _ => Err(Error::hypothesis(theorem.name(), "no explicit construction")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::is_total_dominating;

    fn check(theorem: TheoremId, params: Params) -> usize {
        let w = construct_witness(theorem, &params).unwrap();
        let expected = closed_form(theorem, &params).unwrap().value.exact().unwrap();
        assert!(
            is_total_dominating(w.middle.graph(), &w.set),
            "{theorem} {params}: {}",
            w.set
        );
        assert_eq!(w.set.len(), expected, "{theorem} {params}");
        expected
    }

    #[test]
    fn ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert!("nope".parse::<TheoremId>().is_err());
    }

    #[test]
    fn closed_form_examples() {
        let v = |t, p| closed_form(t, &p).unwrap().value;
        assert_eq!(v(TheoremId::PathFormula, Params::Order(4)), FormulaValue::Exact(3));
        assert_eq!(
            v(TheoremId::CompleteBipartiteFormula, Params::Bipartite { n1: 2, n2: 4 }),
            FormulaValue::Exact(4)
        );
        assert_eq!(v(TheoremId::TreeDiam3, Params::Centers { p: 2, q: 2 }), FormulaValue::Exact(4));
        assert_eq!(v(TheoremId::TreeDiam3, Params::Centers { p: 3, q: 1 }), FormulaValue::Exact(5));
        assert_eq!(v(TheoremId::JoinEmptyFormula, Params::Join { n: 4, p: 9 }), FormulaValue::Exact(9));
        assert_eq!(v(TheoremId::JoinEmptyFormula, Params::Join { n: 4, p: 3 }), FormulaValue::Exact(5));
        assert_eq!(v(TheoremId::CoronaIdentity, Params::Corona { n: 3, gamma: 2 }), FormulaValue::Exact(5));
    }

    #[test]
    fn hypotheses_are_enforced() {
        let bad = [
            (TheoremId::CompleteBipartiteFormula, Params::Bipartite { n1: 1, n2: 3 }),
            (TheoremId::CompleteBipartiteFormula, Params::Bipartite { n1: 4, n2: 3 }),
            (TheoremId::JoinEmptyFormula, Params::Join { n: 6, p: 2 }),
            (TheoremId::StarJoinK1, Params::Order(3)),
            (TheoremId::PathFormula, Params::Order(2)),
            (TheoremId::PathFormula, Params::Join { n: 4, p: 1 }),
            (TheoremId::HamPathJoinFormula, Params::Join { n: 6, p: 3 }),
        ];
        for (t, p) in bad {
            assert!(matches!(closed_form(t, &p), Err(Error::Hypothesis { .. })), "{t} {p}");
        }
        assert!(general_bounds(2).is_err());
    }

    #[test]
    fn general_bounds_examples() {
        let iv = |n| general_bounds(n).unwrap().value;
        assert_eq!(iv(4), FormulaValue::Interval { lo: 3, hi: Some(3) });
        assert_eq!(iv(9), FormulaValue::Interval { lo: 6, hi: Some(8) });
        assert_eq!(iv(3), FormulaValue::Interval { lo: 2, hi: Some(2) });
    }

    #[test]
    fn path_witness_n6() {
        let w = construct_witness(TheoremId::PathFormula, &Params::Order(6)).unwrap();
        let pairs: Vec<_> = w.set.iter().map(|e| w.middle.pair(e).unwrap()).collect();
        assert_eq!(pairs, vec![(0, 1), (1, 2), (3, 4), (4, 5)]);
    }

    #[test]
    fn family_witnesses() {
        for n in 2..=12 {
            check(TheoremId::StarFormula, Params::Order(n));
            check(TheoremId::CompleteFormula, Params::Order(n));
            check(TheoremId::HamPathFormula, Params::Order(n));
            check(TheoremId::FriendshipFormula, Params::Order(n));
        }
        for n in 3..=12 {
            check(TheoremId::PathFormula, Params::Order(n));
            check(TheoremId::FamilyCorollary, Params::Order(n));
            check(TheoremId::TreeDiam2, Params::Order(n));
        }
        for n in 1..=6 {
            check(TheoremId::DoubleStarFormula, Params::Order(n));
            check(TheoremId::TwoCoronaIdentity, Params::Order(n));
        }
        for n in 4..=9 {
            check(TheoremId::StarJoinK1, Params::Order(n));
        }
    }

    #[test]
    fn bipartite_witnesses() {
        for n1 in 2..=9 {
            for n2 in n1..=3 * n1 {
                check(TheoremId::CompleteBipartiteFormula, Params::Bipartite { n1, n2 });
            }
        }
    }

    #[test]
    fn diam3_witnesses_and_recognizer() {
        for p in 1..=5 {
            for q in 1..=5 {
                check(TheoremId::TreeDiam3, Params::Centers { p, q });
                assert_eq!(diam3_centers(&diam3_tree(p, q)).unwrap(), (p, q));
            }
        }
        let p4 = generate(&FamilySpec::path(4)).unwrap();
        assert_eq!(diam3_centers(&p4).unwrap(), (1, 1));
        assert!(diam3_centers(&generate(&FamilySpec::star(4)).unwrap()).is_err());
    }

    #[test]
    fn join_witnesses_cover_every_case() {
        for n in 2usize..=9 {
            for p in n.div_ceil(2)..=2 * n + 2 {
                check(TheoremId::JoinEmptyFormula, Params::Join { n, p });
                let k = generate(&FamilySpec::complete(n)).unwrap();
                let w = join_witness(&k, p).unwrap();
                assert!(is_total_dominating(w.middle.graph(), &w.set));
            }
        }
    }

    #[test]
    fn ham_path_join_witnesses() {
        for n in 4..=10 {
            for p in 1..n / 2 {
                check(TheoremId::HamPathJoinFormula, Params::Join { n, p });
            }
        }
    }

    #[test]
    fn corona_witness_size() {
        for n in 1..=6 {
            let base = generate(&FamilySpec::path(n)).unwrap();
            let gamma = domination_number(middle_graph(&base).graph()).unwrap().value;
            check(TheoremId::CoronaIdentity, Params::Corona { n, gamma });
        }
    }

    #[test]
    fn leaf_bound() {
        assert_eq!(leaf_lower_bound(&generate(&FamilySpec::star(5)).unwrap()).unwrap(), 5);
        assert_eq!(leaf_lower_bound(&generate(&FamilySpec::path(7)).unwrap()).unwrap(), 2);
        assert_eq!(leaf_lower_bound(&generate(&FamilySpec::cycle(4)).unwrap()), Err(Error::NotATree));
    }

    #[test]
    fn sandwiches() {
        let c5 = generate(&FamilySpec::cycle(5)).unwrap();
        let p3 = generate(&FamilySpec::path(3)).unwrap();
        let k2 = generate(&FamilySpec::path(2)).unwrap();
        let iv = |g: &Graph| plus_one_vertex_sandwich(g).unwrap().value;
        assert_eq!(iv(&c5), FormulaValue::Interval { lo: 4, hi: Some(5) });
        assert_eq!(iv(&p3), FormulaValue::Interval { lo: 2, hi: Some(3) });
        assert_eq!(iv(&k2), FormulaValue::Interval { lo: 2, hi: Some(3) });
        assert!(plus_one_vertex_sandwich(&Graph::empty(3)).is_err());
        // the center of P_3 touches both leaves
        assert!(vertex_deletion_sandwich(&p3, 1).is_err());
        let k4 = generate(&FamilySpec::complete(4)).unwrap();
        assert_eq!(
            vertex_deletion_sandwich(&k4, 0).unwrap().value,
            FormulaValue::Interval { lo: 2, hi: Some(3) }
        );
    }

    #[test]
    fn small_p_bounds() {
        let star = generate(&FamilySpec::star(8)).unwrap();
        assert_eq!(
            join_small_p_bounds(&star, 1).unwrap().value,
            FormulaValue::Interval { lo: 7, hi: Some(8) }
        );
        let p8 = generate(&FamilySpec::path(8)).unwrap();
        assert_eq!(
            join_small_p_bounds(&p8, 1).unwrap().value,
            FormulaValue::Interval { lo: 6, hi: Some(6) }
        );
        let c6 = generate(&FamilySpec::cycle(6)).unwrap();
        let FormulaValue::Interval { lo, .. } = join_small_p_bounds(&c6, 1).unwrap().value else {
            panic!("interval expected");
        };
        assert_eq!(lo, 5);
        assert!(join_small_p_bounds(&c6, 3).is_err());
    }

    #[test]
    fn ng_bounds() {
        let b = nordhaus_gaddum_bounds(4).unwrap();
        assert_eq!((b.sum_lo, b.sum_hi, b.product_lo, b.product_hi), (6, 6, 9, 9));
        assert!(b.holds(3, 3));
        assert!(!b.holds(3, 4));
    }
}
