//! The Mycielski construction, its iterates, and the independence number
//! of a Mycielskian computed directly from the base graph.
//!
//! For a base graph on vertices `0..n`, the Mycielskian keeps the base
//! vertices, adds a twin `v + n` for each base vertex `v` (adjacent to
//! the base neighbours of `v`), and one hub `2n` adjacent to every twin.

use crate::bitset::VertexSet;
use crate::graph::{distances, Graph};
use crate::invariants::{independence_number, BoundRecord, Relation};
use crate::packing::packing_chromatic_number;
use crate::solve::{Budget, BudgetExceeded};
use serde::Serialize;

/// A Mycielskian together with its index layout.
#[derive(Debug, Clone)]
pub struct MycielskiLayout {
    pub graph: Graph,
    base_order: usize,
}

impl MycielskiLayout {
    pub fn base_order(&self) -> usize {
        self.base_order
    }

    /// Index of base vertex `v` in the Mycielskian.
    pub fn base(&self, v: usize) -> usize {
        debug_assert!(v < self.base_order);
        v
    }

    /// Index of the twin of base vertex `v`.
    pub fn twin(&self, v: usize) -> usize {
        debug_assert!(v < self.base_order);
        v + self.base_order
    }

    pub fn hub(&self) -> usize {
        2 * self.base_order
    }
}

pub fn mycielskian(g: &Graph) -> MycielskiLayout {
    let n = g.n();
    let mut m = Graph::empty(2 * n + 1);
    for (u, v) in g.edges() {
        m.add_edge(u, v);
        m.add_edge(u, v + n);
        m.add_edge(v, u + n);
    }
    for v in 0..n {
        m.add_edge(2 * n, v + n);
    }
    MycielskiLayout {
        graph: m,
        base_order: n,
    }
}

/// k-fold iterate of the construction, `k >= 1`.
pub fn mycielski_power(g: &Graph, k: usize) -> Graph {
    assert!(k >= 1, "power must be at least 1");
    let mut cur = mycielskian(g).graph;
    for _ in 1..k {
        cur = mycielskian(&cur).graph;
    }
    cur
}

/// Asserted growth bound for the packing chromatic number of the k-fold
/// Mycielskian of a complete graph of order `n`.
pub fn mycielski_power_bound(n: usize, k: usize) -> u64 {
    assert!(n >= 2 && k >= 1, "defined for n >= 2, k >= 1");
    assert!(k <= 58, "bound overflows u64 beyond k = 58");
    (1u64 << (k - 1)) * (n as u64 + 1) + 1
}

/// Independence number of the Mycielskian, maximised over independent
/// sets `S` of the base graph as `2|S| + |V - N[S]|`, with the witness
/// realising it inside the Mycielskian.
#[derive(Debug, Clone, Serialize)]
pub struct AlphaMycielskian {
    pub value: usize,
    /// Maximising independent set of the base graph.
    pub base_set: Vec<usize>,
    /// Independent set of the Mycielskian of size `value`.
    pub witness: Vec<usize>,
    /// The equality with the Mycielskian's independence number is argued
    /// for connected bases; `false` flags out-of-hypothesis inputs.
    pub connected_input: bool,
}

pub fn alpha_mycielskian(g: &Graph) -> AlphaMycielskian {
    let n = g.n();
    let mut best_val = 0usize;
    let mut best_set: Option<VertexSet> = None;
    let mut s = VertexSet::new(n);
    let mut covered = VertexSet::new(n);
    branch_alpha(g, 0, &mut s, &mut covered, &mut best_val, &mut best_set);
    let best = best_set.expect("search always reaches a leaf");
    let mut covered = VertexSet::new(n);
    for v in best.iter() {
        covered.insert(v);
        covered.union_with(g.row(v));
    }
    let mut witness: Vec<usize> = best.iter().collect();
    witness.extend(best.iter().map(|v| v + n));
    witness.extend((0..n).filter(|&v| !covered.contains(v)).map(|v| v + n));
    witness.sort_unstable();
    AlphaMycielskian {
        value: best_val,
        base_set: best.to_vec(),
        witness,
        connected_input: g.is_connected(),
    }
}

fn branch_alpha(
    g: &Graph,
    pos: usize,
    s: &mut VertexSet,
    covered: &mut VertexSet,
    best_val: &mut usize,
    best_set: &mut Option<VertexSet>,
) {
    let n = g.n();
    if pos == n {
        let value = 2 * s.len() + (n - covered.len());
        if value > *best_val || best_set.is_none() {
            *best_val = value;
            *best_set = Some(s.clone());
        }
        return;
    }
    // Optimistic completion: undecided uncovered vertices are worth 2,
    // already-passed uncovered vertices at most 1.
    let mut undecided = 0usize;
    let mut passed_uncovered = 0usize;
    for v in 0..n {
        if !covered.contains(v) {
            if v >= pos {
                undecided += 1;
            } else {
                passed_uncovered += 1;
            }
        }
    }
    if 2 * s.len() + 2 * undecided + passed_uncovered <= *best_val && best_set.is_some() {
        return;
    }
    let v = pos;
    if !covered.contains(v) {
        let saved = covered.clone();
        s.insert(v);
        covered.insert(v);
        covered.union_with(g.row(v));
        branch_alpha(g, pos + 1, s, covered, best_val, best_set);
        s.remove(v);
        *covered = saved;
    }
    branch_alpha(g, pos + 1, s, covered, best_val, best_set);
}

/// Exact comparison of a Mycielskian's invariants against the bounds
/// relating them to the base graph.
#[derive(Debug, Clone, Serialize)]
pub struct MycielskiBoundReport {
    /// Bounds are asserted for connected bases of order at least 2.
    pub applicable: bool,
    pub n: usize,
    pub alpha: usize,
    pub alpha_myc: usize,
    pub chi_rho: usize,
    pub chi_rho_myc: usize,
    pub chi_rho_difference: i64,
    pub is_complete: bool,
    pub is_star: bool,
    pub diameter: Option<u32>,
    pub bounds: Vec<BoundRecord>,
}

pub fn mycielski_bound_report(g: &Graph, budget: Budget) -> Result<MycielskiBoundReport, BudgetExceeded> {
    let n = g.n() as i64;
    let applicable = g.is_connected() && g.n() >= 2;
    let alpha = independence_number(g);
    let m = mycielskian(g);
    let alpha_myc = independence_number(&m.graph);
    let chi_rho = packing_chromatic_number(g, budget)?.0;
    let chi_rho_myc = packing_chromatic_number(&m.graph, budget)?.0;
    let is_complete = g.is_complete();
    let is_star = g.is_star();
    let dm = distances(g);
    let diameter = if g.is_connected() {
        Some(dm.diameter())
    } else {
        None
    };
    let mut bounds = Vec::new();
    if applicable {
        bounds.push(BoundRecord::new(
            "myc-alpha-lower",
            2 * alpha as i64,
            Relation::Le,
            alpha_myc as i64,
        ));
        bounds.push(BoundRecord::new(
            "myc-alpha-upper",
            alpha_myc as i64,
            Relation::Le,
            n + alpha as i64 - 1,
        ));
        if !is_complete && !is_star {
            bounds.push(BoundRecord::new(
                "myc-alpha-sharp",
                alpha_myc as i64,
                Relation::Le,
                n + alpha as i64 - 2,
            ));
        } else {
            bounds.push(BoundRecord::not_applicable("myc-alpha-sharp", Relation::Le));
        }
        bounds.push(BoundRecord::new(
            "myc-rho-step",
            chi_rho_myc as i64,
            Relation::Ge,
            chi_rho as i64 + 2,
        ));
        if is_complete {
            bounds.push(BoundRecord::new(
                "myc-rho-step-complete-eq",
                chi_rho_myc as i64,
                Relation::Eq,
                chi_rho as i64 + 2,
            ));
        } else {
            bounds.push(BoundRecord::not_applicable(
                "myc-rho-step-complete-eq",
                Relation::Eq,
            ));
        }
        bounds.push(BoundRecord::new(
            "myc-rho-upper",
            chi_rho_myc as i64,
            Relation::Le,
            (n + 2).min(2 * (n - alpha as i64 + 1)),
        ));
        if diameter == Some(2) {
            bounds.push(BoundRecord::new(
                "myc-diam2-eq",
                chi_rho_myc as i64,
                Relation::Eq,
                2 * n - alpha_myc as i64 + 2,
            ));
        } else {
            bounds.push(BoundRecord::not_applicable("myc-diam2-eq", Relation::Eq));
        }
    }
    Ok(MycielskiBoundReport {
        applicable,
        n: g.n(),
        alpha,
        alpha_myc,
        chi_rho,
        chi_rho_myc,
        chi_rho_difference: chi_rho_myc as i64 - chi_rho as i64,
        is_complete,
        is_star,
        diameter,
        bounds,
    })
}
