//! Isomorphism codes by brute force, the minor relation, and exhaustive
//! catalogs of small graphs.
//!
//! The canonical code of a graph is the lexicographically minimal row-major
//! adjacency bit string over all vertex permutations, prefixed by the vertex
//! count and a directedness flag. Two graphs of the same kind are isomorphic
//! exactly when their codes are equal. All functions here carry hard size
//! guards; they exist to make small universes checkable, not to scale.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::{Graph, GraphError};

/// Canonical isomorphism code. Guard: at most 8 vertices.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, GraphError> {
    let n = g.vertex_count();
    if n > 8 {
        return Err(GraphError::TooLarge {
            what: "canonical_form vertex count",
            limit: 8,
            actual: n,
        });
    }
    let ids: Vec<u32> = g.vertices().collect();
    let rank = |v: u32| ids.binary_search(&v).expect("endpoint is a vertex");

    // Row-major bit (i,j) sits at significance n*n-1 - (i*n + j), so the
    // numeric minimum over permutations is the lexicographic minimum of the
    // bit string.
    let cell = |i: usize, j: usize| 1u64 << (n * n - 1 - (i * n + j));
    let mut adj = 0u64;
    for (u, v) in g.arcs() {
        adj |= cell(rank(u), rank(v));
    }

    let mut best = u64::MAX;
    for_each_permutation(n, |perm| {
        let mut m = 0u64;
        for i in 0..n {
            for j in 0..n {
                if adj & cell(i, j) != 0 {
                    m |= cell(perm[i], perm[j]);
                }
            }
        }
        best = best.min(m);
    });

    let mut code = Vec::with_capacity(10);
    code.push(n as u8);
    code.push(g.directed() as u8);
    code.extend_from_slice(&best.to_be_bytes());
    Ok(code)
}

/// Calls `f` with every permutation of `0..n` (Heap's algorithm).
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    fn heap(k: usize, a: &mut [usize], f: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            f(a);
            return;
        }
        for i in 0..k {
            heap(k - 1, a, f);
            if i < k - 1 {
                if k % 2 == 0 {
                    a.swap(i, k - 1);
                } else {
                    a.swap(0, k - 1);
                }
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    if n == 0 {
        f(&perm);
    } else {
        heap(n, &mut perm, &mut f);
    }
}

/// Whether `g` is a minor of `h`, up to isomorphism: reachable from `h` by
/// minor operations. Guard: `h` has at most 7 vertices.
pub fn is_minor(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    if h.vertex_count() > 7 {
        return Err(GraphError::TooLarge {
            what: "is_minor host vertex count",
            limit: 7,
            actual: h.vertex_count(),
        });
    }
    if g.directed() != h.directed() {
        return Ok(false);
    }
    let target = canonical_form(g)?;

    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut queue: Vec<Graph> = Vec::new();
    seen.insert(canonical_form(h)?);
    queue.push(h.clone());
    while let Some(cur) = queue.pop() {
        if canonical_form(&cur)? == target {
            return Ok(true);
        }
        for (_, m) in cur.one_step_minors() {
            let code = canonical_form(&m)?;
            if seen.insert(code) {
                queue.push(m);
            }
        }
    }
    Ok(false)
}

/// All undirected graphs on exactly `n` vertices, one per isomorphism class.
/// Guard: `n <= 6`. Representatives have vertex set `0..n-1` and appear in
/// first-found order over edge subsets, which is deterministic.
pub fn undirected_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > 6 {
        return Err(GraphError::TooLarge {
            what: "undirected enumeration vertex count",
            limit: 6,
            actual: n,
        });
    }
    let pairs: Vec<(u32, u32)> = ordered_pairs(n, false);
    enumerate_by_edge_subsets(false, n, &pairs)
}

/// All digraphs on exactly `n` vertices, one per isomorphism class.
/// Guard: `n <= 4`.
pub fn digraphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > 4 {
        return Err(GraphError::TooLarge {
            what: "digraph enumeration vertex count",
            limit: 4,
            actual: n,
        });
    }
    let pairs: Vec<(u32, u32)> = ordered_pairs(n, true);
    enumerate_by_edge_subsets(true, n, &pairs)
}

/// Classes with 1 to `n` vertices, smaller sizes first.
pub fn undirected_graphs_up_to(n: usize) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.extend(undirected_graphs(i)?);
    }
    Ok(out)
}

/// Classes with 1 to `n` vertices, smaller sizes first.
pub fn digraphs_up_to(n: usize) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.extend(digraphs(i)?);
    }
    Ok(out)
}

fn ordered_pairs(n: usize, directed: bool) -> Vec<(u32, u32)> {
    let n = n as u32;
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && (directed || u < v) {
                out.push((u, v));
            }
        }
    }
    out
}

fn enumerate_by_edge_subsets(
    directed: bool,
    n: usize,
    pairs: &[(u32, u32)],
) -> Result<Vec<Graph>, GraphError> {
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = Graph::from_edges(directed, n as u32, &edges)?;
        if seen.insert(canonical_form(&g)?) {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_graph6;

    fn c3() -> Graph {
        Graph::from_edges(false, 3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn path(n: u32) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(false, n, &edges).unwrap()
    }

    #[test]
    fn code_identifies_relabelings() {
        let p3a = Graph::from_edges(false, 3, &[(0, 1), (1, 2)]).unwrap();
        let p3b = Graph::from_edges(false, 3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_form(&p3a).unwrap(), canonical_form(&p3b).unwrap());
    }

    #[test]
    fn code_separates_nonisomorphic() {
        let p3 = path(3);
        let k1_plus_k2 = Graph::from_edges(false, 3, &[(0, 1)]).unwrap();
        assert_ne!(
            canonical_form(&p3).unwrap(),
            canonical_form(&k1_plus_k2).unwrap()
        );
    }

    #[test]
    fn code_separates_orientations_by_flag() {
        let und = Graph::from_edges(false, 2, &[(0, 1)]).unwrap();
        let dir = Graph::from_edges(true, 2, &[(0, 1), (1, 0)]).unwrap();
        assert_ne!(canonical_form(&und).unwrap(), canonical_form(&dir).unwrap());
    }

    #[test]
    fn code_ignores_id_gaps() {
        // Deleting vertex 1 from the triangle leaves the edge (0,2), with a
        // gap in the vertex ids.
        let sub = c3().delete_vertex(1).unwrap();
        let k2 = Graph::from_edges(false, 2, &[(0, 1)]).unwrap();
        assert_eq!(canonical_form(&sub).unwrap(), canonical_form(&k2).unwrap());
    }

    #[test]
    fn code_guard() {
        let big = Graph::with_vertex_count(false, 9);
        assert!(matches!(
            canonical_form(&big),
            Err(GraphError::TooLarge { limit: 8, .. })
        ));
    }

    #[test]
    fn minor_examples() {
        let k2 = parse_graph6("A_").unwrap();
        assert!(is_minor(&k2, &c3()).unwrap());
        assert!(!is_minor(&c3(), &path(4)).unwrap());
        let k4 = Graph::from_edges(false, 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert!(is_minor(&c3(), &k4).unwrap());
        assert!(is_minor(&c3(), &c3()).unwrap());
    }

    #[test]
    fn minor_respects_directedness() {
        let d = Graph::from_edges(true, 2, &[(0, 1)]).unwrap();
        assert!(!is_minor(&d, &c3()).unwrap());
    }

    #[test]
    fn minor_guard() {
        let big = Graph::with_vertex_count(false, 8);
        let k2 = parse_graph6("A_").unwrap();
        assert!(matches!(
            is_minor(&k2, &big),
            Err(GraphError::TooLarge { limit: 7, .. })
        ));
    }

    #[test]
    fn catalog_counts() {
        // n = 6 undirected (156 classes) is covered by the integration tests.
        let counts: Vec<usize> = (1..=5).map(|n| undirected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34]);
        let counts: Vec<usize> = (1..=4).map(|n| digraphs(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 3, 16, 218]);
    }

    #[test]
    fn catalog_guards() {
        assert!(undirected_graphs(7).is_err());
        assert!(digraphs(5).is_err());
    }
}
