//! Parametric graph families.
//!
//! Vertex numbering is fixed per family so generated graphs are
//! reproducible; see each constructor for the layout.

use crate::graph::Graph;
use crate::graph6::MAX_ORDER;
use crate::mycielskian::mycielski_power;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family}: {requirement}")]
    Constraint {
        family: &'static str,
        requirement: &'static str,
    },
    #[error("two-clique family: extra edge ({0}, {1}) is not allowed")]
    BadExtraEdge(usize, usize),
    #[error("two-clique family: extra edge ({0}, {1}) listed twice")]
    DuplicateExtraEdge(usize, usize),
}

fn constraint(family: &'static str, requirement: &'static str) -> FamilyError {
    FamilyError::Constraint {
        family,
        requirement,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyParams {
    /// K_n, n >= 1.
    Complete { n: usize },
    /// P_n, n >= 1.
    Path { n: usize },
    /// C_n, n >= 3.
    Cycle { n: usize },
    /// K_{1,leaves}, leaves >= 1; the centre is vertex 0.
    Star { leaves: usize },
    /// K_{s,t}, s, t >= 1; first part 0..s, second part s..s+t.
    CompleteBipartite { s: usize, t: usize },
    /// K_k (vertices 0..k) with ell pendant vertices attached to
    /// vertex 0; k, ell >= 3.
    GKL { k: usize, ell: usize },
    /// Two cliques glued at one vertex plus an outside vertex; see
    /// [`h_class`].
    HClass {
        r: usize,
        s: usize,
        extras: Vec<(usize, usize)>,
    },
    /// K_n minus the edges of a star K_{1,r} (centre 0, leaves 1..=r);
    /// requires r >= 1 and r + 1 < n.
    KnMinusStar { n: usize, r: usize },
    /// k-fold iterated Mycielskian of K_n; n >= 1, k >= 1.
    MycielskiPower { n: usize, k: usize },
}

pub fn generate(params: &FamilyParams) -> Result<Graph, FamilyError> {
    match *params {
        FamilyParams::Complete { n } => complete(n),
        FamilyParams::Path { n } => path(n),
        FamilyParams::Cycle { n } => cycle(n),
        FamilyParams::Star { leaves } => star(leaves),
        FamilyParams::CompleteBipartite { s, t } => complete_bipartite(s, t),
        FamilyParams::GKL { k, ell } => g_k_ell(k, ell),
        FamilyParams::HClass { r, s, ref extras } => h_class(r, s, extras),
        FamilyParams::KnMinusStar { n, r } => kn_minus_star(n, r),
        FamilyParams::MycielskiPower { n, k } => mycielski_power_family(n, k),
    }
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(constraint("complete", "order must be at least 1"));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(constraint("path", "order must be at least 1"));
    }
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(constraint("cycle", "order must be at least 3"));
    }
    let mut g = path(n)?;
    g.add_edge(n - 1, 0);
    Ok(g)
}

pub fn star(leaves: usize) -> Result<Graph, FamilyError> {
    if leaves < 1 {
        return Err(constraint("star", "at least 1 leaf required"));
    }
    let mut g = Graph::empty(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    Ok(g)
}

pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph, FamilyError> {
    if s < 1 || t < 1 {
        return Err(constraint(
            "complete-bipartite",
            "both part sizes must be at least 1",
        ));
    }
    let mut g = Graph::empty(s + t);
    for u in 0..s {
        for v in s..s + t {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// K_k with ell pendant vertices attached to clique vertex 0.  The
/// clique occupies 0..k, the pendants k..k+ell.  Diameter 2.
pub fn g_k_ell(k: usize, ell: usize) -> Result<Graph, FamilyError> {
    if k < 3 {
        return Err(constraint("g-k-ell", "clique order must be at least 3"));
    }
    if ell < 3 {
        return Err(constraint("g-k-ell", "at least 3 pendants required"));
    }
    let mut g = Graph::empty(k + ell);
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v);
        }
    }
    for p in k..k + ell {
        g.add_edge(0, p);
    }
    Ok(g)
}

/// Glued two-clique graphs with an outside vertex.  Fixed layout on
/// r + s vertices:
///
/// * `w = 0`: the vertex shared by both cliques,
/// * `1..r`: the rest of the first clique, with `a1 = 1` and `a2 = 2`,
/// * `r..r+s-1`: the rest of the second clique, with `b1 = r`,
/// * `z = r+s-1`: adjacent to exactly `r..r+s-1`.
///
/// Extra edges may join the two clique remainders as long as they avoid
/// `a2`, avoid `z`, and are not the pair `(a1, b1)`.  Every member has
/// independence number 2, maximum degree n-2, and packing chromatic
/// number r+s-2.
pub fn h_class(r: usize, s: usize, extras: &[(usize, usize)]) -> Result<Graph, FamilyError> {
    if r < 3 {
        return Err(constraint(
            "two-clique family",
            "first clique must have order at least 3",
        ));
    }
    if s < 2 {
        return Err(constraint(
            "two-clique family",
            "second clique must have order at least 2",
        ));
    }
    let n = r + s;
    let z = n - 1;
    let mut g = Graph::empty(n);
    for u in 0..r {
        for v in u + 1..r {
            g.add_edge(u, v);
        }
    }
    for u in r..z {
        g.add_edge(0, u);
        for v in u + 1..z {
            g.add_edge(u, v);
        }
    }
    for v in r..z {
        g.add_edge(z, v);
    }
    let legal = h_class_legal_extras(r, s);
    for &(x, y) in extras {
        let e = (x.min(y), x.max(y));
        if !legal.contains(&e) {
            return Err(FamilyError::BadExtraEdge(x, y));
        }
        if g.has_edge(e.0, e.1) {
            return Err(FamilyError::DuplicateExtraEdge(x, y));
        }
        g.add_edge(e.0, e.1);
    }
    Ok(g)
}

/// The cross edges `h_class` accepts as extras, in lexicographic order:
/// pairs (u, v) with u in the first clique remainder other than `a2`,
/// v in the second clique remainder, excluding (a1, b1).
pub fn h_class_legal_extras(r: usize, s: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 1..r {
        if u == 2 {
            continue;
        }
        for v in r..r + s - 1 {
            if (u, v) == (1, r) {
                continue;
            }
            out.push((u, v));
        }
    }
    out
}

const H_MEMBERS_MAX_ORDER: usize = 10;

/// Every member of the glued two-clique family of the given order, up
/// to isomorphism.  Intended for small orders only.
pub fn h_class_members(order: usize) -> Vec<Graph> {
    assert!(
        order <= H_MEMBERS_MAX_ORDER,
        "two-clique family enumeration limited to order {H_MEMBERS_MAX_ORDER}"
    );
    let mut members: Vec<Graph> = Vec::new();
    if order < 5 {
        return members;
    }
    for r in 3..=order - 2 {
        let s = order - r;
        let legal = h_class_legal_extras(r, s);
        for mask in 0u32..1 << legal.len() {
            let extras: Vec<(usize, usize)> = legal
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = h_class(r, s, &extras).expect("legal extras");
            if !members.iter().any(|m| crate::enumerate::is_isomorphic(m, &g)) {
                members.push(g);
            }
        }
    }
    members
}

/// Cached variant of [`h_class_members`] for repeated membership
/// tests over a corpus.
pub fn h_class_members_cached(order: usize) -> Arc<Vec<Graph>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(&order) {
        return Arc::clone(found);
    }
    let built = Arc::new(h_class_members(order));
    Arc::clone(
        cache
            .lock()
            .unwrap()
            .entry(order)
            .or_insert(built),
    )
}

/// K_n with the edges of a star K_{1,r} removed: centre 0 loses its
/// edges to 1..=r.  Requires r >= 1 and r + 1 < n.
pub fn kn_minus_star(n: usize, r: usize) -> Result<Graph, FamilyError> {
    if r < 1 {
        return Err(constraint(
            "kn-minus-star",
            "at least 1 star edge must be removed",
        ));
    }
    if r + 1 >= n {
        return Err(constraint(
            "kn-minus-star",
            "star order must satisfy r + 1 < n",
        ));
    }
    let mut g = complete(n)?;
    for v in 1..=r {
        g = g.delete_edge(0, v);
    }
    Ok(g)
}

pub fn mycielski_power_family(n: usize, k: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(constraint("mycielski-power", "base order must be at least 1"));
    }
    if k < 1 {
        return Err(constraint(
            "mycielski-power",
            "at least 1 iteration required",
        ));
    }
    if k >= 20 || ((n as u128 + 1) << k) - 1 > MAX_ORDER as u128 {
        return Err(constraint(
            "mycielski-power",
            "resulting order exceeds the supported limit",
        ));
    }
    Ok(mycielski_power(&complete(n)?, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::distances;
    use crate::invariants::independence_number;
    use crate::packing::packing_chromatic_number;
    use crate::solve::Budget;

    #[test]
    fn basic_orders_and_sizes() {
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(path(6).unwrap().edge_count(), 5);
        assert_eq!(cycle(3).unwrap().edge_count(), 3);
        let st = star(4).unwrap();
        assert_eq!((st.n(), st.edge_count(), st.degree(0)), (5, 4, 4));
        let kb = complete_bipartite(2, 3).unwrap();
        assert_eq!((kb.n(), kb.edge_count()), (5, 6));
        assert!(!kb.has_edge(0, 1));
        assert!(kb.has_edge(0, 2));
    }

    #[test]
    fn constraint_errors() {
        assert!(complete(0).is_err());
        assert!(cycle(2).is_err());
        assert!(star(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
        assert!(g_k_ell(2, 3).is_err());
        assert!(g_k_ell(3, 2).is_err());
        assert!(h_class(2, 2, &[]).is_err());
        assert!(h_class(3, 1, &[]).is_err());
        assert!(kn_minus_star(5, 0).is_err());
        assert!(kn_minus_star(5, 4).is_err());
        assert!(mycielski_power_family(1, 0).is_err());
        assert!(mycielski_power_family(1000, 15).is_err());
    }

    #[test]
    fn pendant_clique_shape() {
        let g = g_k_ell(4, 3).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.degree(0), 6);
        assert_eq!(g.degree(4), 1);
        assert_eq!(distances(&g).diameter(), 2);
        assert_eq!(independence_number(&g), 4);
    }

    #[test]
    fn two_clique_family_shape() {
        let g = h_class(3, 2, &[]).unwrap();
        assert_eq!(g.n(), 5);
        let expected = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(
            (0..5).map(|v| g.row(v).to_vec()).collect::<Vec<_>>(),
            (0..5).map(|v| expected.row(v).to_vec()).collect::<Vec<_>>()
        );
        // The shared vertex misses only z.
        let h = h_class(4, 3, &[]).unwrap();
        assert_eq!(h.degree(0), h.n() - 2);
        assert!(!h.has_edge(0, h.n() - 1));
    }

    #[test]
    fn two_clique_extras_validated() {
        assert_eq!(h_class_legal_extras(3, 2), vec![]);
        assert_eq!(h_class_legal_extras(3, 3), vec![(1, 4)]);
        assert_eq!(h_class_legal_extras(4, 3), vec![(1, 5), (3, 4), (3, 5)]);
        assert!(h_class(4, 3, &[(3, 4)]).is_ok());
        // Order of endpoints does not matter.
        assert!(h_class(4, 3, &[(4, 3)]).is_ok());
        assert_eq!(
            h_class(4, 3, &[(1, 4)]),
            Err(FamilyError::BadExtraEdge(1, 4))
        );
        assert_eq!(
            h_class(4, 3, &[(2, 4)]),
            Err(FamilyError::BadExtraEdge(2, 4))
        );
        assert_eq!(
            h_class(4, 3, &[(3, 4), (4, 3)]),
            Err(FamilyError::DuplicateExtraEdge(4, 3))
        );
    }

    #[test]
    fn two_clique_family_invariants() {
        for order in 5..=7 {
            let members = h_class_members(order);
            assert!(!members.is_empty());
            for m in &members {
                assert_eq!(m.n(), order);
                assert_eq!(independence_number(m), 2);
                assert_eq!(m.max_degree(), order - 2);
                let (chi_rho, _) = packing_chromatic_number(m, Budget::default()).unwrap();
                assert_eq!(chi_rho, order - 2);
            }
        }
        assert_eq!(h_class_members(5).len(), 1);
        assert_eq!(h_class_members(6).len(), 4);
        assert!(h_class_members(4).is_empty());
    }

    #[test]
    fn complete_minus_star_shape() {
        let g = kn_minus_star(6, 2).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 4);
        assert_eq!(g.degree(5), 5);
        assert!(!g.has_edge(0, 1));
        assert!(!g.has_edge(0, 2));
        assert!(g.has_edge(0, 3));
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn mycielski_power_orders() {
        assert_eq!(mycielski_power_family(2, 1).unwrap().n(), 5);
        assert_eq!(mycielski_power_family(2, 2).unwrap().n(), 11);
        assert_eq!(mycielski_power_family(3, 2).unwrap().n(), 15);
    }

    #[test]
    fn generate_dispatch() {
        let g = generate(&FamilyParams::Cycle { n: 5 }).unwrap();
        assert_eq!(g.n(), 5);
        let err = generate(&FamilyParams::HClass {
            r: 3,
            s: 3,
            extras: vec![(1, 3)],
        })
        .unwrap_err();
        assert_eq!(err, FamilyError::BadExtraEdge(1, 3));
    }
}
