//! S-packing colourings and the packing chromatic number.
//!
//! A colouring with radii (s_1, ..., s_k) assigns each vertex a colour
//! `c` so that vertices sharing colour `c` are pairwise at distance
//! greater than `s_c`.  The packing chromatic number is the least `k`
//! for which radii (1, 2, ..., k) admit such a colouring.

use crate::graph::{distances, DistanceMatrix, Graph};
use crate::invariants::{
    chromatic_number, independence_number, BoundRecord, InvariantReport, Relation,
};
use crate::solve::{Budget, BudgetExceeded, Meter};
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

/// Class-size capacities use exact distance-power independence numbers
/// up to this order; beyond it only component-diameter capacities apply.
const CAP_EXACT_MAX_N: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("packing radii must be positive")]
    NonPositive,
    #[error("packing radii must be nondecreasing")]
    Decreasing,
}

/// Nondecreasing sequence of positive packing radii, one per colour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SPackingSpec(Vec<usize>);

impl SPackingSpec {
    pub fn new(radii: Vec<usize>) -> Result<Self, SpecError> {
        if radii.iter().any(|&s| s == 0) {
            return Err(SpecError::NonPositive);
        }
        if radii.windows(2).any(|w| w[0] > w[1]) {
            return Err(SpecError::Decreasing);
        }
        Ok(Self(radii))
    }

    /// Radii (1, 2, ..., k).
    pub fn chi_rho(k: usize) -> Self {
        Self((1..=k).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn radii(&self) -> &[usize] {
        &self.0
    }
}

/// True when the vertices are pairwise at distance greater than `i`.
/// Unreachable pairs satisfy every radius.
pub fn is_i_packing(g: &Graph, vertices: &[usize], i: usize) -> bool {
    is_i_packing_in(&distances(g), vertices, i)
}

pub fn is_i_packing_in(dm: &DistanceMatrix, vertices: &[usize], i: usize) -> bool {
    for (a, &u) in vertices.iter().enumerate() {
        for &v in &vertices[a + 1..] {
            if u == v {
                return false;
            }
            if dm.get(u, v) as u64 <= i as u64 {
                return false;
            }
        }
    }
    true
}

/// A vertex-to-colour assignment valid for its radii.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingColoring {
    pub radii: Vec<usize>,
    /// 1-based colour per vertex.
    pub colors: Vec<usize>,
}

impl PackingColoring {
    pub fn colors_used(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn class(&self, colour: usize) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == colour)
            .collect()
    }

    /// Re-checks the assignment class by class.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.colors.len() != g.n() {
            return false;
        }
        if self.colors.iter().any(|&c| c == 0 || c > self.radii.len()) {
            return false;
        }
        let dm = distances(g);
        (1..=self.radii.len()).all(|c| is_i_packing_in(&dm, &self.class(c), self.radii[c - 1]))
    }
}

/// Distance-`s` power: edges between distinct vertices at distance at
/// most `s`.
fn power_graph(n: usize, dm: &DistanceMatrix, s: usize) -> Graph {
    let mut p = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let d = dm.get(u, v) as u64;
            if d >= 1 && d <= s as u64 {
                p.add_edge(u, v);
            }
        }
    }
    p
}

/// Exact or diameter-based upper bounds on the size of each colour
/// class.  Sound for every graph: a class with radius `s` is an
/// independent set of the distance-`s` power, and a component of
/// diameter at most `s` holds at most one class member.
fn color_caps(g: &Graph, dm: &DistanceMatrix, radii: &[usize]) -> Vec<usize> {
    let n = g.n();
    let comps = g.components();
    let comp_diams: Vec<u64> = comps
        .iter()
        .map(|c| {
            let vs = c.to_vec();
            let mut d = 0u64;
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    d = d.max(dm.get(u, v) as u64);
                }
            }
            d
        })
        .collect();
    let mut memo: HashMap<usize, usize> = HashMap::new();
    radii
        .iter()
        .map(|&s| {
            *memo.entry(s).or_insert_with(|| {
                if n <= CAP_EXACT_MAX_N {
                    independence_number(&power_graph(n, dm, s))
                } else {
                    comps
                        .iter()
                        .zip(&comp_diams)
                        .map(|(c, &d)| if s as u64 >= d { 1 } else { c.len() })
                        .sum()
                }
            })
        })
        .collect()
}

struct PackingSearch<'a> {
    dm: &'a DistanceMatrix,
    radii: &'a [usize],
    order: Vec<usize>,
    caps: Vec<usize>,
    counts: Vec<usize>,
    by_color: Vec<Vec<usize>>,
    colors: Vec<usize>,
    slack: usize,
    meter: Meter,
}

impl PackingSearch<'_> {
    fn run(&mut self, pos: usize) -> Result<bool, BudgetExceeded> {
        self.meter.tick()?;
        let n = self.order.len();
        if pos == n {
            return Ok(true);
        }
        if n - pos > self.slack {
            return Ok(false);
        }
        let v = self.order[pos];
        for c in 0..self.radii.len() {
            if self.counts[c] == self.caps[c] {
                continue;
            }
            let s = self.radii[c] as u64;
            if self.by_color[c]
                .iter()
                .all(|&u| self.dm.get(u, v) as u64 > s)
            {
                self.counts[c] += 1;
                self.by_color[c].push(v);
                self.colors[v] = c + 1;
                self.slack -= 1;
                if self.run(pos + 1)? {
                    return Ok(true);
                }
                self.slack += 1;
                self.colors[v] = 0;
                self.by_color[c].pop();
                self.counts[c] -= 1;
            }
        }
        Ok(false)
    }
}

/// Finds a colouring for the given radii, or proves none exists.
/// Backtracking over vertices in degree-descending order (ties toward
/// the lower index), colours tried in ascending order; class-size
/// capacities and a pigeonhole check prune the search.
pub fn s_packing_color(
    g: &Graph,
    spec: &SPackingSpec,
    budget: Budget,
) -> Result<Option<PackingColoring>, BudgetExceeded> {
    let n = g.n();
    let dm = distances(g);
    let caps = color_caps(g, &dm, spec.radii());
    let slack: usize = caps.iter().sum();
    if slack < n {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = PackingSearch {
        dm: &dm,
        radii: spec.radii(),
        order,
        caps,
        counts: vec![0; spec.len()],
        by_color: vec![Vec::new(); spec.len()],
        colors: vec![0; n],
        slack,
        meter: budget.meter(),
    };
    if search.run(0)? {
        let colouring = PackingColoring {
            radii: spec.radii().to_vec(),
            colors: search.colors,
        };
        debug_assert!(colouring.verify(g));
        Ok(Some(colouring))
    } else {
        Ok(None)
    }
}

/// Packing chromatic number with a witness colouring.  Searches k
/// upward from the chromatic number; every colouring with radii
/// (1, ..., k) is a proper colouring, so no smaller k can succeed.
pub fn packing_chromatic_number(
    g: &Graph,
    budget: Budget,
) -> Result<(usize, PackingColoring), BudgetExceeded> {
    let start = chromatic_number(g).max(1);
    for k in start..=g.n() {
        if let Some(colouring) = s_packing_color(g, &SPackingSpec::chi_rho(k), budget)? {
            return Ok((k, colouring));
        }
    }
    unreachable!("radii (1, ..., n) always admit the all-distinct colouring")
}

/// Decides whether a colouring for the given radii exists at all.
pub fn is_s_packing_colorable(
    g: &Graph,
    spec: &SPackingSpec,
    budget: Budget,
) -> Result<bool, BudgetExceeded> {
    Ok(s_packing_color(g, spec, budget)?.is_some())
}

/// Upper bound n - alpha + 1 for the packing chromatic number, with a
/// flag marking the case (diameter exactly 2) where it is met with
/// equality.
pub fn bound_indep_upper(g: &Graph) -> (usize, bool) {
    let value = g.n() - independence_number(g) + 1;
    let guaranteed = g.is_connected() && distances(g).diameter() == 2;
    (value, guaranteed)
}

/// Lower bound max_degree - alpha + 2, with a flag marking the case
/// (a dominating vertex) where it is met with equality.
pub fn bound_delta_alpha_lower(g: &Graph) -> (i64, bool) {
    let value = g.max_degree() as i64 - independence_number(g) as i64 + 2;
    let guaranteed = g.max_degree() == g.n() - 1;
    (value, guaranteed)
}

/// Full invariant report for one graph.
pub fn invariant_report(g: &Graph, budget: Budget) -> Result<InvariantReport, BudgetExceeded> {
    let n = g.n();
    let clique = crate::invariants::clique_number(g);
    let chromatic = chromatic_number(g);
    let independence = independence_number(g);
    let (chi_rho, _) = packing_chromatic_number(g, budget)?;
    let dm = distances(g);
    let diameter = if g.is_connected() {
        Some(dm.diameter())
    } else {
        None
    };
    let (upper, upper_eq) = bound_indep_upper(g);
    let (lower, lower_eq) = bound_delta_alpha_lower(g);
    let mut bounds = vec![
        BoundRecord::new("indep-upper", chi_rho as i64, Relation::Le, upper as i64),
        BoundRecord::new("degree-lower", chi_rho as i64, Relation::Ge, lower),
    ];
    if upper_eq {
        bounds.push(BoundRecord::new(
            "indep-upper-diam2-eq",
            chi_rho as i64,
            Relation::Eq,
            upper as i64,
        ));
    } else {
        bounds.push(BoundRecord::not_applicable("indep-upper-diam2-eq", Relation::Eq));
    }
    if lower_eq {
        bounds.push(BoundRecord::new(
            "degree-lower-full-eq",
            chi_rho as i64,
            Relation::Eq,
            lower,
        ));
    } else {
        bounds.push(BoundRecord::not_applicable("degree-lower-full-eq", Relation::Eq));
    }
    Ok(InvariantReport {
        graph6: crate::graph6::emit_graph6(g).expect("order already validated"),
        n,
        max_degree: g.max_degree(),
        diameter,
        clique,
        chromatic,
        independence,
        packing_chromatic: chi_rho,
        bounds,
    })
}

#[derive(Debug, Error)]
pub enum HClassError {
    #[error("two-clique family recognition limited to order {max}, got {n}")]
    OrderLimit { n: usize, max: usize },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// Outcome of testing the equality chi_rho = max_degree - alpha + 2 on a
/// graph with independence number 2 against its structural
/// characterisation: a dominating vertex, or membership in the glued
/// two-clique family of `families::h_class`.
#[derive(Debug, Clone, Serialize)]
pub enum HClassCheck {
    NotApplicable,
    Checked {
        n: usize,
        max_degree: usize,
        chi_rho: usize,
        equality_holds: bool,
        full_degree: bool,
        in_family: bool,
        agreement: bool,
    },
}

const H_CLASS_RECOGNITION_MAX_N: usize = 9;

pub fn h_class_equality_check(g: &Graph, budget: Budget) -> Result<HClassCheck, HClassError> {
    if independence_number(g) != 2 {
        return Ok(HClassCheck::NotApplicable);
    }
    let n = g.n();
    if n > H_CLASS_RECOGNITION_MAX_N {
        return Err(HClassError::OrderLimit {
            n,
            max: H_CLASS_RECOGNITION_MAX_N,
        });
    }
    let (chi_rho, _) = packing_chromatic_number(g, budget)?;
    let delta = g.max_degree();
    let equality_holds = chi_rho as i64 == delta as i64 - 2 + 2;
    let full_degree = delta == n - 1;
    let in_family = crate::families::h_class_members(n)
        .iter()
        .any(|h| crate::enumerate::is_isomorphic(g, h));
    Ok(HClassCheck::Checked {
        n,
        max_degree: delta,
        chi_rho,
        equality_holds,
        full_degree,
        in_family,
        agreement: equality_holds == (full_degree || in_family),
    })
}
