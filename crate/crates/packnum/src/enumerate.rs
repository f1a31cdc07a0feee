//! Exhaustive enumeration of small connected graphs, with isomorphism
//! testing used to keep one representative per class.
//!
//! Enumeration proceeds by one-vertex extensions: every connected graph
//! on n + 1 vertices arises from a connected graph on n vertices by
//! appending a vertex joined to a nonempty subset (delete any non-cut
//! vertex to see this), so extending every representative by every
//! nonempty neighbourhood mask and discarding isomorphic duplicates
//! yields exactly one representative per class.

use crate::graph::Graph;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

/// Largest order `enumerate_connected` accepts.
pub const ENUMERATE_MAX_N: usize = 7;
/// Largest order the cached corpus builder accepts.
pub const CORPUS_MAX_N: usize = 9;

/// Connected graph counts by order, used as a built-in cross-check on
/// the enumeration (and on the isomorphism test it relies on).
const CONNECTED_COUNTS: [usize; 10] = [0, 1, 1, 2, 6, 21, 112, 853, 11_117, 261_080];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("exhaustive enumeration supported up to order {max}, got {n}")]
    TooLarge { n: usize, max: usize },
}

fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Iterated neighbourhood colour refinement.  Vertices that end up
/// with different colours cannot correspond under any isomorphism.
fn wl_colors(g: &Graph, rounds: usize) -> Vec<u64> {
    let n = g.n();
    let mut col: Vec<u64> = (0..n).map(|v| mix(g.degree(v) as u64)).collect();
    let mut neigh: Vec<u64> = Vec::with_capacity(n);
    for _ in 0..rounds {
        let mut next = vec![0u64; n];
        for v in 0..n {
            neigh.clear();
            neigh.extend(g.row(v).iter().map(|u| col[u]));
            neigh.sort_unstable();
            let mut acc = mix(col[v]);
            for &h in &neigh {
                acc = mix(acc ^ mix(h));
            }
            next[v] = acc;
        }
        col = next;
    }
    col
}

/// Isomorphism-invariant hash; equal for isomorphic graphs, and
/// distinct for most small non-isomorphic pairs, so it serves as a
/// bucket key ahead of exact testing.
pub(crate) fn fingerprint(g: &Graph) -> u64 {
    let mut cols = wl_colors(g, 3);
    cols.sort_unstable();
    let mut acc = mix(g.n() as u64 ^ mix(g.edge_count() as u64));
    for c in cols {
        acc = mix(acc ^ c);
    }
    acc
}

/// Exact isomorphism test by backtracking constrained to refinement
/// colours.  Intended for small orders (roughly up to 12).
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut deg_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    let ca = wl_colors(a, 3);
    let cb = wl_colors(b, 3);
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }

    // Map rare colour classes first.
    let mut class_size: HashMap<u64, usize> = HashMap::new();
    for &c in &ca {
        *class_size.entry(c).or_insert(0) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&ca[v]], ca[v], v));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        pos: usize,
        order: &[usize],
        a: &Graph,
        b: &Graph,
        ca: &[u64],
        cb: &[u64],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        for u in 0..b.n() {
            if used[u] || cb[u] != ca[v] || b.degree(u) != a.degree(v) {
                continue;
            }
            if order[..pos]
                .iter()
                .all(|&w| a.has_edge(v, w) == b.has_edge(u, map[w]))
            {
                map[v] = u;
                used[u] = true;
                if assign(pos + 1, order, a, b, ca, cb, map, used) {
                    return true;
                }
                used[u] = false;
                map[v] = usize::MAX;
            }
        }
        false
    }
    assign(0, &order, a, b, &ca, &cb, &mut map, &mut used)
}

/// Appends a vertex adjacent to the mask's bits.
fn extend(base: &Graph, mask: u64) -> Graph {
    let n0 = base.n();
    let mut g = Graph::empty(n0 + 1);
    for (u, v) in base.edges() {
        g.add_edge(u, v);
    }
    for u in 0..n0 {
        if mask >> u & 1 == 1 {
            g.add_edge(u, n0);
        }
    }
    g
}

/// One representative per isomorphism class of one-vertex extensions
/// of the given representatives.
fn extend_all(prev: &[Graph]) -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::new();
    let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
    for base in prev {
        let n0 = base.n();
        for mask in 1u64..1 << n0 {
            let g = extend(base, mask);
            let fp = fingerprint(&g);
            let known = buckets
                .get(&fp)
                .map(|b| b.iter().any(|&i| is_isomorphic(&out[i], &g)))
                .unwrap_or(false);
            if !known {
                buckets.entry(fp).or_default().push(out.len());
                out.push(g);
            }
        }
    }
    out
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Graph>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All connected graphs of exactly order `n` up to isomorphism, built
/// once and cached for the process.  Supported up to order 9.
pub fn connected_graphs(n: usize) -> Result<Arc<Vec<Graph>>, EnumerateError> {
    if n == 0 || n > CORPUS_MAX_N {
        return Err(EnumerateError::TooLarge {
            n,
            max: CORPUS_MAX_N,
        });
    }
    for order in 1..=n {
        let mut cache = cache().lock().unwrap();
        if cache.contains_key(&order) {
            continue;
        }
        let graphs = if order == 1 {
            vec![Graph::empty(1)]
        } else {
            let prev = Arc::clone(&cache[&(order - 1)]);
            drop(cache);
            let built = extend_all(&prev);
            cache = self::cache().lock().unwrap();
            built
        };
        assert_eq!(
            graphs.len(),
            CONNECTED_COUNTS[order],
            "enumeration produced a wrong class count at order {order}"
        );
        cache.entry(order).or_insert_with(|| Arc::new(graphs));
    }
    Ok(Arc::clone(&cache().lock().unwrap()[&n]))
}

/// Connected graphs of every order from 1 through `max_n`, one shared
/// list per order.
pub fn connected_corpus(max_n: usize) -> Result<Vec<Arc<Vec<Graph>>>, EnumerateError> {
    (1..=max_n).map(connected_graphs).collect()
}

/// One representative per isomorphism class of connected graphs of
/// order `n`.  Exhaustive; capped at order 7.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n == 0 || n > ENUMERATE_MAX_N {
        return Err(EnumerateError::TooLarge {
            n,
            max: ENUMERATE_MAX_N,
        });
    }
    Ok(connected_graphs(n)?.as_ref().clone())
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

    #[test]
    fn isomorphism_basics() {
        let c5a = cycle(5);
        let c5b = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(is_isomorphic(&c5a, &c5b));
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!is_isomorphic(&c5a, &p5));
        // C_6 and two disjoint triangles: 2-regular with equal order and
        // size, so only the exact backtracking can separate them.
        let c6 = cycle(6);
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&c6, &two_triangles));
        // Two trees sharing the degree sequence [1, 1, 1, 2, 2, 3].
        let spider122 =
            Graph::from_edges(6, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        let spider113 =
            Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
        assert!(!is_isomorphic(&spider122, &spider113));
        assert!(is_isomorphic(&Graph::empty(1), &Graph::empty(1)));
    }

    #[test]
    fn fingerprints_agree_under_relabeling() {
        let c5a = cycle(5);
        let c5b = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(fingerprint(&c5a), fingerprint(&c5b));
    }

    #[test]
    fn small_counts() {
        for (n, want) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)] {
            assert_eq!(enumerate_connected(n).unwrap().len(), want);
        }
        assert_eq!(
            enumerate_connected(8),
            Err(EnumerateError::TooLarge { n: 8, max: 7 })
        );
        assert_eq!(
            connected_graphs(10),
            Err(EnumerateError::TooLarge { n: 10, max: 9 })
        );
    }

    #[test]
    fn order_seven_count() {
        assert_eq!(enumerate_connected(7).unwrap().len(), 853);
    }

    #[test]
    fn representatives_are_pairwise_distinct() {
        for n in 1..=5 {
            let gs = enumerate_connected(n).unwrap();
            for i in 0..gs.len() {
                for j in i + 1..gs.len() {
                    assert!(
                        !is_isomorphic(&gs[i], &gs[j]),
                        "duplicate class at order {n}: {i} vs {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn all_extensions_connected() {
        for g in enumerate_connected(5).unwrap() {
            assert!(g.is_connected());
        }
    }

    #[test]
    fn corpus_shares_cached_lists() {
        let c = connected_corpus(4).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c[3].len(), 6);
        let again = connected_graphs(4).unwrap();
        assert!(Arc::ptr_eq(&c[3], &again));
    }
}
