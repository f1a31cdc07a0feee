//! Exact clique number, chromatic number, independence number and
//! chromatic criticality for small graphs.
//!
//! All searches are deterministic: vertex orders are fixed up front and
//! ties break toward the lowest index.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use serde::Serialize;
use std::cmp::Reverse;

/// Largest clique, as an ascending vertex list.
///
/// Branch and bound over a static degree-descending order with a greedy
/// colouring bound on the candidate set.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    expand_clique(g, &mut best, &mut current, order);
    best.sort_unstable();
    best
}

fn expand_clique(g: &Graph, best: &mut Vec<usize>, current: &mut Vec<usize>, cand: Vec<usize>) {
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // Greedy colouring of the candidates; the class index bounds how many
    // candidates can extend the current clique.
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut coloured: Vec<(usize, usize)> = Vec::with_capacity(cand.len());
    for &v in &cand {
        let mut c = 0;
        loop {
            if c == classes.len() {
                classes.push(VertexSet::new(g.n()));
            }
            if classes[c].is_disjoint(g.row(v)) {
                classes[c].insert(v);
                coloured.push((v, c + 1));
                break;
            }
            c += 1;
        }
    }
    coloured.sort_by_key(|&(_, c)| c);
    for i in (0..coloured.len()).rev() {
        let (v, colour) = coloured[i];
        if current.len() + colour <= best.len() {
            return;
        }
        let next: Vec<usize> = coloured[..i]
            .iter()
            .map(|&(u, _)| u)
            .filter(|&u| g.has_edge(u, v))
            .collect();
        current.push(v);
        expand_clique(g, best, current, next);
        current.pop();
    }
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// Largest independent set, as an ascending vertex list.
pub fn max_independent_set(g: &Graph) -> Vec<usize> {
    max_clique(&g.complement())
}

pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).len()
}

/// Decides proper k-colourability by backtracking.  Branches on the
/// uncoloured vertex with the most distinctly coloured neighbours, ties
/// toward the lowest index; only the first unused colour may open a new
/// class.
pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if k >= n {
        return true;
    }
    if g.edge_count() == 0 {
        return k >= 1;
    }
    if k == 0 {
        return false;
    }
    if k > g.max_degree() {
        // Greedy colouring always succeeds with max_degree + 1 colours.
        return true;
    }
    assert!(k <= 128, "colour masks support at most 128 colours");
    let mut colors = vec![0usize; n];
    color_rec(g, &mut colors, n, k, 0)
}

fn color_rec(g: &Graph, colors: &mut [usize], uncolored: usize, k: usize, max_used: usize) -> bool {
    if uncolored == 0 {
        return true;
    }
    let n = g.n();
    let mut pick = usize::MAX;
    let mut pick_mask = 0u128;
    let mut pick_sat = usize::MAX;
    for v in 0..n {
        if colors[v] != 0 {
            continue;
        }
        let mut mask = 0u128;
        for u in g.neighbors(v) {
            if colors[u] != 0 {
                mask |= 1 << (colors[u] - 1);
            }
        }
        let sat = mask.count_ones() as usize;
        if pick == usize::MAX || sat > pick_sat {
            pick = v;
            pick_mask = mask;
            pick_sat = sat;
        }
    }
    let limit = k.min(max_used + 1);
    for c in 1..=limit {
        if pick_mask >> (c - 1) & 1 == 0 {
            colors[pick] = c;
            if color_rec(g, colors, uncolored - 1, k, max_used.max(c)) {
                return true;
            }
            colors[pick] = 0;
        }
    }
    false
}

/// Chromatic number: smallest k admitting a proper k-colouring, searched
/// upward from the clique number.
pub fn chromatic_number(g: &Graph) -> usize {
    let mut k = clique_number(g);
    while !is_k_colorable(g, k) {
        k += 1;
    }
    k
}

/// True when the chromatic number equals `k` and drops below `k` after
/// deleting any single edge or any single vertex.
pub fn is_k_critical(g: &Graph, k: usize) -> bool {
    if chromatic_number(g) != k {
        return false;
    }
    for (u, v) in g.edges() {
        if chromatic_number(&g.delete_edge(u, v)) >= k {
            return false;
        }
    }
    if g.n() > 1 {
        for v in 0..g.n() {
            if chromatic_number(&g.delete_vertex(v)) >= k {
                return false;
            }
        }
    }
    true
}

/// Iterator over every independent set of `g`, the empty set included.
/// Sets are produced depth-first over vertex indices; each set appears
/// exactly once.
pub fn independent_sets(g: &Graph) -> IndependentSets<'_> {
    let n = g.n();
    IndependentSets {
        g,
        stack: vec![Frame {
            pos: 0,
            chosen: VertexSet::new(n),
            blocked: VertexSet::new(n),
        }],
    }
}

struct Frame {
    pos: usize,
    chosen: VertexSet,
    blocked: VertexSet,
}

pub struct IndependentSets<'a> {
    g: &'a Graph,
    stack: Vec<Frame>,
}

impl Iterator for IndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let n = self.g.n();
        while let Some(frame) = self.stack.pop() {
            if frame.pos == n {
                return Some(frame.chosen);
            }
            let v = frame.pos;
            if !frame.blocked.contains(v) {
                let mut chosen = frame.chosen.clone();
                chosen.insert(v);
                let mut blocked = frame.blocked.clone();
                blocked.union_with(self.g.row(v));
                self.stack.push(Frame {
                    pos: v + 1,
                    chosen,
                    blocked,
                });
            }
            self.stack.push(Frame {
                pos: v + 1,
                chosen: frame.chosen,
                blocked: frame.blocked,
            });
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "==")]
    Eq,
}

/// One evaluated bound: `lhs relation rhs`, with whether it held and
/// whether it was met with equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub id: String,
    pub lhs: i64,
    pub relation: Relation,
    pub rhs: i64,
    pub holds: bool,
    pub tight: bool,
    pub applicable: bool,
}

impl BoundRecord {
    pub fn new(id: &str, lhs: i64, relation: Relation, rhs: i64) -> Self {
        let holds = match relation {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        };
        Self {
            id: id.to_string(),
            lhs,
            relation,
            rhs,
            holds,
            tight: lhs == rhs,
            applicable: true,
        }
    }

    pub fn not_applicable(id: &str, relation: Relation) -> Self {
        Self {
            id: id.to_string(),
            lhs: 0,
            relation,
            rhs: 0,
            holds: true,
            tight: false,
            applicable: false,
        }
    }
}

/// Invariants of a single graph.  `packing_chromatic` is produced by the
/// packing solver; see `packing::invariant_report`.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub graph6: String,
    pub n: usize,
    pub max_degree: usize,
    /// `None` when some vertex pair is unreachable.
    pub diameter: Option<u32>,
    pub clique: usize,
    pub chromatic: usize,
    pub independence: usize,
    pub packing_chromatic: usize,
    pub bounds: Vec<BoundRecord>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn clique_values() {
        assert_eq!(clique_number(&Graph::empty(1)), 1);
        assert_eq!(clique_number(&Graph::empty(5)), 1);
        assert_eq!(clique_number(&cycle(5)), 2);
        assert_eq!(clique_number(&complete(7)), 7);
        assert_eq!(clique_number(&petersen()), 2);
        assert_eq!(max_clique(&complete(4)), vec![0, 1, 2, 3]);
    }

    #[test]
    fn chromatic_values() {
        assert_eq!(chromatic_number(&Graph::empty(1)), 1);
        assert_eq!(chromatic_number(&Graph::empty(6)), 1);
        assert_eq!(chromatic_number(&cycle(4)), 2);
        assert_eq!(chromatic_number(&cycle(5)), 3);
        assert_eq!(chromatic_number(&complete(6)), 6);
        assert_eq!(chromatic_number(&petersen()), 3);
    }

    #[test]
    fn independence_values() {
        assert_eq!(independence_number(&cycle(5)), 2);
        assert_eq!(independence_number(&cycle(6)), 3);
        assert_eq!(independence_number(&petersen()), 4);
        assert_eq!(independence_number(&complete(8)), 1);
        let c4 = cycle(4);
        let witness = max_independent_set(&c4);
        assert_eq!(witness.len(), 2);
        assert!(!c4.has_edge(witness[0], witness[1]));
    }

    #[test]
    fn independent_set_enumeration_counts() {
        // P_3 has independent sets {}, {0}, {1}, {2}, {0,2}.
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let sets: Vec<_> = independent_sets(&p3).collect();
        assert_eq!(sets.len(), 5);
        for s in &sets {
            for u in s.iter() {
                for v in s.iter() {
                    assert!(u == v || !p3.has_edge(u, v));
                }
            }
        }
        // K_n has n + 1 independent sets.
        assert_eq!(independent_sets(&complete(5)).count(), 6);
    }

    #[test]
    fn criticality() {
        assert!(is_k_critical(&complete(4), 4));
        assert!(is_k_critical(&cycle(5), 3));
        assert!(is_k_critical(&cycle(7), 3));
        assert!(!is_k_critical(&cycle(6), 2));
        assert!(!is_k_critical(&cycle(6), 3));
        let k2 = complete(2);
        assert!(is_k_critical(&k2, 2));
        assert!(is_k_critical(&Graph::empty(1), 1));
        // K_4 plus an isolated vertex fails the vertex-deletion direction.
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(5, &edges).unwrap();
        assert!(!is_k_critical(&g, 4));
    }

    #[test]
    fn bound_record_evaluation() {
        let r = BoundRecord::new("x", 3, Relation::Le, 5);
        assert!(r.holds && !r.tight);
        let r = BoundRecord::new("x", 5, Relation::Ge, 5);
        assert!(r.holds && r.tight);
        let r = BoundRecord::new("x", 4, Relation::Eq, 5);
        assert!(!r.holds);
    }
}
