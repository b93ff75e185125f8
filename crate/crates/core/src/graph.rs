//! Immutable undirected simple graphs with provenance-carrying labels.
//!
//! Vertices are dense indices `0..order`. Each vertex carries a
//! [`VertexLabel`] recording whether it is an original vertex of some base
//! graph or an edge-node produced by a line/middle graph transform.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Orders above this keep no bitmask rows.
pub const ROW_LIMIT: usize = 64;

const HAM_DP_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    Original(usize),
    /// Edge `{i, j}` of a base graph, always stored with `i < j`.
    EdgeNode(usize, usize),
}

impl VertexLabel {
    pub fn edge(a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b);
        VertexLabel::EdgeNode(a.min(b), a.max(b))
    }

    pub fn is_edge_node(&self) -> bool {
        matches!(self, VertexLabel::EdgeNode(..))
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Original(k) => write!(f, "v{k}"),
            VertexLabel::EdgeNode(i, j) => write!(f, "m({i},{j})"),
        }
    }
}

/// A set of vertex indices of a host graph of known order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    order: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(order: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&v| v >= order) {
            return Err(Error::InvalidVertex { vertex: bad, order });
        }
        members.sort_unstable();
        members.dedup();
        Ok(VertexSet { order, members })
    }

    pub fn empty(order: usize) -> Self {
        VertexSet {
            order,
            members: Vec::new(),
        }
    }

    pub fn full(order: usize) -> Self {
        VertexSet {
            order,
            members: (0..order).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn insert(&mut self, v: usize) -> Result<bool> {
        if v >= self.order {
            return Err(Error::InvalidVertex {
                vertex: v,
                order: self.order,
            });
        }
        match self.members.binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.members.insert(pos, v);
                Ok(true)
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.members.binary_search(&v) {
            Ok(pos) => {
                self.members.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Undirected simple graph. Immutable once built.
#[derive(Debug, Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Vec<VertexLabel>,
    // one bitmask row per vertex, only when order <= ROW_LIMIT
    rows: Vec<u64>,
    size: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj && self.labels == other.labels
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph on `order` vertices labeled `Original(0..order)`.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let labels = (0..order).map(VertexLabel::Original).collect();
        Self::with_labels(labels, edges)
    }

    pub fn with_labels(
        labels: Vec<VertexLabel>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let order = labels.len();
        let mut adj = vec![Vec::new(); order];
        for (a, b) in edges {
            for v in [a, b] {
                if v >= order {
                    return Err(Error::InvalidVertex { vertex: v, order });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
        }
        Ok(Self::from_sorted_adjacency(adj, labels))
    }

    pub fn empty(order: usize) -> Self {
        Self::new(order, std::iter::empty()).expect("edgeless graph is valid")
    }

    /// `adj` must be symmetric, loop-free, with sorted duplicate-free rows.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>, labels: Vec<VertexLabel>) -> Self {
        let order = adj.len();
        assert_eq!(order, labels.len(), "one label per vertex");
        let mut degree_sum = 0;
        for (v, list) in adj.iter().enumerate() {
            degree_sum += list.len();
            debug_assert!(list.windows(2).all(|w| w[0] < w[1]));
            debug_assert!(!list.contains(&v), "self-loop at {v}");
            debug_assert!(list.iter().all(|&u| adj[u].binary_search(&v).is_ok()));
        }
        let rows = if order <= ROW_LIMIT {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |r, &u| r | (1 << u)))
                .collect()
        } else {
            Vec::new()
        };
        Graph {
            adj,
            labels,
            rows,
            size: degree_sum / 2,
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(VertexSet {
            order: self.order(),
            members: self.adj[v].clone(),
        })
    }

    pub fn closed_neighbors(&self, v: usize) -> Result<VertexSet> {
        let mut set = self.neighbors(v)?;
        set.insert(v)?;
        Ok(set)
    }

    /// Sorted neighbor list. Panics on an invalid index.
    pub fn adjacent(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.adj[v].len())
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        if a >= self.order() || b >= self.order() {
            return false;
        }
        match self.row(a) {
            Some(r) => r >> b & 1 == 1,
            None => self.adj[a].binary_search(&b).is_ok(),
        }
    }

    /// Bitmask of neighbors, available when order <= 64.
    pub fn row(&self, v: usize) -> Option<u64> {
        self.rows.get(v).copied()
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, list)| {
            list.iter()
                .copied()
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    pub fn label(&self, v: usize) -> VertexLabel {
        self.labels[v]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.isolated_vertex().is_some()
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adj.iter().position(Vec::is_empty)
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check(source)?;
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap() + 1;
            for &u in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d);
                    queue.push_back(u);
                }
            }
        }
        Ok(dist)
    }

    /// Maximum eccentricity.
    pub fn diameter(&self) -> Result<usize> {
        if self.order() == 0 {
            return Err(Error::OrderTooSmall { min: 1, got: 0 });
        }
        let mut diam = 0;
        for v in 0..self.order() {
            for d in self.distances_from(v)? {
                diam = diam.max(d.ok_or(Error::DiameterUndefined)?);
            }
        }
        Ok(diam)
    }

    /// Components ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut members = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < members.len() {
                let v = members[head];
                head += 1;
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        members.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(VertexSet { order: n, members });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.connected_components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size + 1 == self.order()
    }

    /// `G[a]`; vertices renumbered in ascending order of original index.
    pub fn induced_subgraph(&self, a: &VertexSet) -> Result<Graph> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        if a.order() != self.order() {
            if let Some(bad) = a.iter().find(|&v| v >= self.order()) {
                return Err(Error::InvalidVertex {
                    vertex: bad,
                    order: self.order(),
                });
            }
        }
        let mut index = vec![usize::MAX; self.order()];
        for (k, v) in a.iter().enumerate() {
            index[v] = k;
        }
        let adj = a
            .iter()
            .map(|v| {
                self.adj[v]
                    .iter()
                    .filter(|&&u| index[u] != usize::MAX)
                    .map(|&u| index[u])
                    .collect()
            })
            .collect();
        let labels = a.iter().map(|v| self.labels[v]).collect();
        Ok(Graph::from_sorted_adjacency(adj, labels))
    }

    /// `G \ v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check(v)?;
        if self.order() < 2 {
            return Err(Error::OrderTooSmall {
                min: 2,
                got: self.order(),
            });
        }
        let keep = VertexSet {
            order: self.order(),
            members: (0..self.order()).filter(|&u| u != v).collect(),
        };
        self.induced_subgraph(&keep)
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj = (0..n)
            .map(|v| {
                let mut own = self.adj[v].iter().peekable();
                (0..n)
                    .filter(|&u| {
                        if own.peek() == Some(&&u) {
                            own.next();
                            false
                        } else {
                            u != v
                        }
                    })
                    .collect()
            })
            .collect();
        Graph::from_sorted_adjacency(adj, self.labels.clone())
    }

    pub fn leaves(&self) -> VertexSet {
        VertexSet {
            order: self.order(),
            members: (0..self.order()).filter(|&v| self.adj[v].len() == 1).collect(),
        }
    }

    /// BFS tree from vertex 0, neighbors visited in ascending order.
    pub fn spanning_tree(&self) -> Result<Graph> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.order();
        let mut seen = vec![false; n];
        let mut adj = vec![Vec::new(); n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    adj[v].push(u);
                    adj[u].push(v);
                    queue.push_back(u);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph::from_sorted_adjacency(adj, self.labels.clone()))
    }

    pub fn has_hamiltonian_path(&self) -> bool {
        self.hamiltonian_path().is_some()
    }

    /// A spanning path as a vertex sequence, if one exists.
    ///
    /// Bitmask DP over (visited set, endpoint) for small orders, plain
    /// backtracking above that.
    pub fn hamiltonian_path(&self) -> Option<Vec<usize>> {
        let n = self.order();
        match n {
            0 => None,
            1 => Some(vec![0]),
            _ if n <= HAM_DP_LIMIT => self.hamiltonian_path_dp(),
            _ => self.hamiltonian_path_backtrack(),
        }
    }

    fn hamiltonian_path_dp(&self) -> Option<Vec<usize>> {
        let n = self.order();
        let nbr: Vec<u32> = (0..n)
            .map(|v| self.adj[v].iter().fold(0u32, |r, &u| r | (1 << u)))
            .collect();
        let full = (1usize << n) - 1;
        // ends[mask]: endpoints v such that some path visits exactly `mask` and stops at v
        let mut ends = vec![0u32; full + 1];
        for v in 0..n {
            ends[1 << v] = 1 << v;
        }
        for mask in 1..=full {
            let e = ends[mask];
            if e == 0 {
                continue;
            }
            let mut bits = e;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let mut next = nbr[v] & !(mask as u32);
                while next != 0 {
                    let u = next.trailing_zeros() as usize;
                    next &= next - 1;
                    ends[mask | 1 << u] |= 1 << u;
                }
            }
        }
        if ends[full] == 0 {
            return None;
        }
        let mut path = Vec::with_capacity(n);
        let mut mask = full;
        let mut v = ends[full].trailing_zeros() as usize;
        loop {
            path.push(v);
            let rest = mask & !(1 << v);
            if rest == 0 {
                break;
            }
            let prev = ends[rest] & nbr[v];
            v = prev.trailing_zeros() as usize;
            mask = rest;
        }
        path.reverse();
        Some(path)
    }

    fn hamiltonian_path_backtrack(&self) -> Option<Vec<usize>> {
        fn extend(g: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
            if path.len() == g.order() {
                return true;
            }
            let last = *path.last().unwrap();
            for &u in &g.adj[last] {
                if !used[u] {
                    used[u] = true;
                    path.push(u);
                    if extend(g, path, used) {
                        return true;
                    }
                    path.pop();
                    used[u] = false;
                }
            }
            false
        }
        if !self.is_connected() {
            return None;
        }
        let n = self.order();
        for start in 0..n {
            let mut used = vec![false; n];
            used[start] = true;
            let mut path = vec![start];
            if extend(self, &mut path, &mut used) {
                return Some(path);
            }
        }
        None
    }

    /// Label-blind isomorphism test by backtracking; meant for small graphs.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        let n = self.order();
        if n != other.order() || self.size != other.size {
            return false;
        }
        let mut da: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut db: Vec<usize> = other.adj.iter().map(Vec::len).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_iso(other, 0, &mut map, &mut used)
    }

    fn extend_iso(&self, other: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == self.order() {
            return true;
        }
        for w in 0..other.order() {
            if used[w] || self.adj[v].len() != other.adj[w].len() {
                continue;
            }
            let consistent = (0..v).all(|u| self.has_edge(u, v) == other.has_edge(map[u], w));
            if consistent {
                map[v] = w;
                used[w] = true;
                if self.extend_iso(other, v + 1, map, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
}
