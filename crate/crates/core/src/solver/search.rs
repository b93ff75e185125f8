//! Exact minimum cover search shared by the domination solvers.
//!
//! The problem: every vertex `u` must be hit by some chosen candidate `c`
//! with `u ∈ cover(c)`. Total domination uses open neighborhoods as
//! covers, plain domination closed ones.
//!
//! Iterative deepening on the budget. Each node branches on the uncovered
//! vertex with the fewest non-excluded candidates, and candidates tried in
//! earlier sibling branches are excluded from later ones. Pruning uses a
//! greedy packing of uncovered vertices with pairwise disjoint candidate
//! sets, a coverage-count bound, and a table of failed
//! (uncovered, excluded, budget) states.

use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};

use super::bits::Bits;
use crate::error::{Error, Result};

const MEMO_MIN_BUDGET: u32 = 2;
const MEMO_CAPACITY: usize = 1 << 20;
const MEMO_SLOTS: usize = 4;

pub(crate) struct Found {
    pub chosen: Vec<usize>,
    pub nodes: u64,
}

/// Solves the cover problem on `n` vertices. `cover[c]` is only consulted
/// for `c` in `allowed`. Returns `None` if some vertex has no candidate.
pub(crate) fn min_cover(n: usize, allowed: &[usize], cover: &[Vec<usize>]) -> Result<Option<Found>> {
    match n.div_ceil(64) {
        0 | 1 => run::<1>(n, allowed, cover),
        2 => run::<2>(n, allowed, cover),
        3 | 4 => run::<4>(n, allowed, cover),
        5..=8 => run::<8>(n, allowed, cover),
        9..=16 => run::<16>(n, allowed, cover),
        _ => Err(Error::TooLarge(n)),
    }
}

#[derive(Default)]
struct FoldHasher(u64);

impl Hasher for FoldHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for chunk in bytes.chunks(8) {
            let mut buf = [0u8; 8];
            buf[..chunk.len()].copy_from_slice(chunk);
            self.write_u64(u64::from_le_bytes(buf));
        }
    }

    fn write_u64(&mut self, x: u64) {
        self.0 = (self.0.rotate_left(5) ^ x).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
    }
}

type Memo<const W: usize> = HashMap<Bits<W>, Vec<(u32, Bits<W>)>, BuildHasherDefault<FoldHasher>>;

struct Search<const W: usize> {
    cover: Vec<Bits<W>>,
    cands: Vec<Bits<W>>,
    // vertices by ascending candidate count; visiting order for the packing bound
    order: Vec<usize>,
    max_cover: u32,
    memo: Memo<W>,
    memo_entries: usize,
    chosen: Vec<usize>,
    nodes: u64,
}

enum Bound<const W: usize> {
    Infeasible,
    Branch {
        lower: u32,
        vertex: usize,
        packing: u32,
        // union of the packed vertices' available candidates
        packed: Bits<W>,
    },
}

fn run<const W: usize>(n: usize, allowed: &[usize], cover: &[Vec<usize>]) -> Result<Option<Found>> {
    let mut cover_bits = vec![Bits::<W>::EMPTY; n];
    let mut cands = vec![Bits::<W>::EMPTY; n];
    for &c in allowed {
        cover_bits[c] = Bits::from_iter(cover[c].iter().copied());
        for &u in &cover[c] {
            cands[u].set(c);
        }
    }
    if cands.iter().any(Bits::is_empty) {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (cands[u].count(), u));
    let max_cover = allowed
        .iter()
        .map(|&c| cover_bits[c].count())
        .max()
        .unwrap_or(1)
        .max(1);
    let mut search = Search {
        cover: cover_bits,
        cands,
        order,
        max_cover,
        memo: Memo::default(),
        memo_entries: 0,
        chosen: Vec::new(),
        nodes: 0,
    };
    let all = Bits::<W>::prefix(n);
    if n == 0 {
        return Ok(Some(Found { chosen: Vec::new(), nodes: 0 }));
    }
    let greedy = search.greedy(all);
    let lower = match search.bound(&all, &Bits::EMPTY) {
        Bound::Infeasible => return Ok(None),
        Bound::Branch { lower, .. } => lower,
    };
    for budget in lower..greedy.len() as u32 {
        search.chosen.clear();
        if search.search(all, Bits::EMPTY, budget) {
            return Ok(Some(Found {
                chosen: search.chosen,
                nodes: search.nodes,
            }));
        }
    }
    Ok(Some(Found {
        chosen: greedy,
        nodes: search.nodes,
    }))
}

impl<const W: usize> Search<W> {
    fn greedy(&self, mut uncovered: Bits<W>) -> Vec<usize> {
        let mut picked = Vec::new();
        while !uncovered.is_empty() {
            let u = uncovered.ones().next().unwrap();
            // among candidates of the first uncovered vertex, take the widest
            let best = self.cands[u]
                .ones()
                .max_by_key(|&c| (self.cover[c].and(&uncovered).count(), std::cmp::Reverse(c)))
                .expect("feasibility checked");
            picked.push(best);
            uncovered = uncovered.and_not(&self.cover[best]);
        }
        picked
    }

    fn bound(&self, uncovered: &Bits<W>, excluded: &Bits<W>) -> Bound<W> {
        let mut used = Bits::<W>::EMPTY;
        let mut lower = 0;
        let mut best = (u32::MAX, usize::MAX);
        for &u in &self.order {
            if !uncovered.get(u) {
                continue;
            }
            let avail = self.cands[u].and_not(excluded);
            let count = avail.count();
            if count == 0 {
                return Bound::Infeasible;
            }
            if (count, u) < best {
                best = (count, u);
            }
            if !avail.intersects(&used) {
                used.or_assign(&avail);
                lower += 1;
            }
        }
        let by_count = uncovered.count().div_ceil(self.max_cover);
        Bound::Branch {
            lower: lower.max(by_count),
            vertex: best.1,
            packing: lower,
            packed: used,
        }
    }

    fn bound_vertex(&self, uncovered: &Bits<W>, excluded: &Bits<W>) -> usize {
        match self.bound(uncovered, excluded) {
            Bound::Branch { vertex, .. } => vertex,
            Bound::Infeasible => unreachable!("checked by caller"),
        }
    }

    fn failed_before(&self, uncovered: &Bits<W>, excluded: &Bits<W>, budget: u32) -> bool {
        self.memo.get(uncovered).is_some_and(|slots| {
            slots
                .iter()
                .any(|(b, ex)| *b >= budget && ex.is_subset(excluded))
        })
    }

    fn record_failure(&mut self, uncovered: Bits<W>, excluded: Bits<W>, budget: u32) {
        if self.memo_entries >= MEMO_CAPACITY {
            self.memo.clear();
            self.memo_entries = 0;
        }
        let slots = self.memo.entry(uncovered).or_default();
        if slots.len() < MEMO_SLOTS {
            slots.push((budget, excluded));
            self.memo_entries += 1;
        } else {
            slots[0] = (budget, excluded);
        }
    }

    fn search(&mut self, uncovered: Bits<W>, excluded: Bits<W>, budget: u32) -> bool {
        self.nodes += 1;
        if uncovered.is_empty() {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let memoize = budget >= MEMO_MIN_BUDGET;
        let mut ex = excluded;
        let vertex = loop {
            match self.bound(&uncovered, &ex) {
                Bound::Infeasible => return false,
                Bound::Branch { lower, .. } if lower > budget => return false,
                // a tight packing forces every pick into its candidate union
                Bound::Branch { packing, packed, .. } if packing == budget => {
                    let outside = Bits::<W>::prefix(self.cands.len()).and_not(&packed);
                    if outside.is_subset(&ex) {
                        break self.bound_vertex(&uncovered, &ex);
                    }
                    ex.or_assign(&outside);
                }
                Bound::Branch { vertex, .. } => break vertex,
            }
        };
        if memoize && self.failed_before(&uncovered, &excluded, budget) {
            return false;
        }
        let options = self.cands[vertex].and_not(&ex);
        for c in options.ones() {
            self.chosen.push(c);
            let rest = uncovered.and_not(&self.cover[c]);
            if self.search(rest, ex, budget - 1) {
                return true;
            }
            self.chosen.pop();
            ex.set(c);
        }
        if memoize {
            self.record_failure(uncovered, excluded, budget);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cover() {
        // vertices 0..4; candidate sets chosen so that {1, 3} is optimal
        let cover = vec![vec![0], vec![0, 1, 2], vec![2], vec![2, 3, 4], vec![4]];
        let found = min_cover(5, &[0, 1, 2, 3, 4], &cover).unwrap().unwrap();
        assert_eq!(found.chosen, vec![1, 3]);
    }

    #[test]
    fn uncoverable_vertex() {
        let cover = vec![vec![1], vec![0]];
        assert!(min_cover(3, &[0, 1], &cover).unwrap().is_none());
    }

    #[test]
    fn wide_instances_use_larger_words() {
        // a perfect matching cover on 150 vertices: 75 pairs
        let n = 150;
        let cover: Vec<Vec<usize>> = (0..n).map(|v| vec![v ^ 1]).collect();
        let allowed: Vec<usize> = (0..n).collect();
        let found = min_cover(n, &allowed, &cover).unwrap().unwrap();
        assert_eq!(found.chosen.len(), n);
        assert!(min_cover(2000, &[], &vec![Vec::new(); 2000]).is_err());
    }
}
