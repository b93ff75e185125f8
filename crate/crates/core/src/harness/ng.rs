use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{graph_from_mask, pair_bit};
use crate::formulas::{nordhaus_gaddum_bounds, NordhausGaddumBounds};
use crate::graph::Graph;
use crate::solver::middle_total_domination;

const MAX_SCAN_ORDER: usize = 6;

/// One graph satisfying the hypothesis filter, with both values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NordhausGaddumRecord {
    pub n: usize,
    /// Edge indicator over lexicographic pairs `(0,1), (0,2), …`.
    pub encoding: String,
    pub gt_g: usize,
    pub gt_gbar: usize,
    pub sum: usize,
    pub product: usize,
    pub bounds: NordhausGaddumBounds,
}

impl NordhausGaddumRecord {
    pub fn holds(&self) -> bool {
        self.bounds.holds(self.gt_g, self.gt_gbar)
    }
}

/// A graph rejected by the filter. Values are present when defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NgExclusion {
    pub encoding: String,
    pub gt_g: Option<usize>,
    pub gt_gbar: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct NgScan {
    pub n: usize,
    pub records: Vec<NordhausGaddumRecord>,
    pub excluded: Vec<NgExclusion>,
}

impl NgScan {
    pub fn violations(&self) -> impl Iterator<Item = &NordhausGaddumRecord> {
        self.records.iter().filter(|r| !r.holds())
    }

    pub fn record_for(&self, g: &Graph) -> Option<&NordhausGaddumRecord> {
        let code = encode(g);
        self.records.iter().find(|r| r.encoding == code)
    }

    pub fn exclusion_for(&self, g: &Graph) -> Option<&NgExclusion> {
        let code = encode(g);
        self.excluded.iter().find(|r| r.encoding == code)
    }
}

pub fn has_k2_component(g: &Graph) -> bool {
    g.connected_components().iter().any(|c| c.len() == 2)
}

fn admissible(g: &Graph) -> bool {
    !g.has_isolated_vertex() && !has_k2_component(g)
}

fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut bits = vec!['0'; n * n.saturating_sub(1) / 2];
    for (i, j) in g.edges() {
        bits[pair_bit(n, i, j)] = '1';
    }
    bits.into_iter().collect()
}

/// Every labeled graph on `n` vertices, `2 <= n <= 6`. Graphs where `G`
/// or `Ḡ` has an isolated vertex or a `K_2` component go to `excluded`.
pub fn nordhaus_gaddum_scan(n: usize) -> Result<NgScan> {
    if !(2..=MAX_SCAN_ORDER).contains(&n) {
        return Err(Error::param("ng-scan", format!("n in 2..={MAX_SCAN_ORDER}, got {n}")));
    }
    let bounds = nordhaus_gaddum_bounds(n)?;
    let pairs = n * (n - 1) / 2;
    let full = (1u64 << pairs) - 1;
    // γ_t(M(G)) for every mask; the complement of mask m is full ^ m
    let values: Vec<Option<usize>> = (0..=full)
        .into_par_iter()
        .map(|mask| {
            let g = graph_from_mask(n, mask);
            if g.has_isolated_vertex() {
                return Ok(None);
            }
            middle_total_domination(&g).map(|r| Some(r.value))
        })
        .collect::<Result<_>>()?;
    let mut records = Vec::new();
    let mut excluded = Vec::new();
    for mask in 0..=full {
        let g = graph_from_mask(n, mask);
        let gbar = graph_from_mask(n, full ^ mask);
        let (a, b) = (values[mask as usize], values[(full ^ mask) as usize]);
        let encoding = encode(&g);
        match (a, b) {
            (Some(gt_g), Some(gt_gbar)) if admissible(&g) && admissible(&gbar) => {
                records.push(NordhausGaddumRecord {
                    n,
                    encoding,
                    gt_g,
                    gt_gbar,
                    sum: gt_g + gt_gbar,
                    product: gt_g * gt_gbar,
                    bounds,
                })
            }
            _ => excluded.push(NgExclusion {
                encoding,
                gt_g: a,
                gt_gbar: b,
            }),
        }
    }
    Ok(NgScan { n, records, excluded })
}
