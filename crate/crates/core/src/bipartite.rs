//! Bipartite incidence graph of a hypergraph, connectivity, and the
//! coverage rank `mu`.
//!
//! The incidence graph has the vertices and the hyperedges as its two colour
//! classes, with an edge between vertex `v` and hyperedge `e` exactly when
//! `v` is a member of `e`. For a subset `S` of hyperedges, `mu(S)` is the
//! number of vertices covered by `S` minus the number of connected components
//! of the subgraph formed by `S`, its incidences, and their endpoints;
//! `mu` of the empty set is zero.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, HyperedgeId, VertexId};
use crate::unionfind::UnionFind;
use std::collections::HashMap;

/// Subset of hyperedges, as a bitmask over hyperedge indices in document
/// order. Subset-style operations are capped well below 64 hyperedges, so a
/// single word suffices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSet(u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub(crate) fn from_mask(mask: u64) -> Self {
        EdgeSet(mask)
    }

    pub fn mask(&self) -> u64 {
        self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(&self, edge: usize) -> bool {
        edge < 64 && self.0 >> edge & 1 == 1
    }

    pub fn union(&self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    pub fn is_subset(&self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Member edge indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(bit)
            }
        })
    }
}

/// Bipartite incidence graph with colour classes fixed by the source
/// hypergraph's document order.
#[derive(Debug, Clone)]
pub struct BipartiteGraph {
    vertex_ids: Vec<VertexId>,
    hyperedge_ids: Vec<HyperedgeId>,
    incident_vertices: Vec<Vec<usize>>,
    incident_hyperedges: Vec<Vec<usize>>,
    hyperedge_index: HashMap<String, usize>,
}

/// Builds the incidence graph of a hypergraph.
pub fn build_bipartite(h: &Hypergraph) -> BipartiteGraph {
    let nv = h.vertex_count();
    let mut incident_vertices = Vec::with_capacity(h.hyperedge_count());
    let mut incident_hyperedges = vec![Vec::new(); nv];
    for (e, edge) in h.hyperedges().iter().enumerate() {
        incident_vertices.push(edge.members().to_vec());
        for &v in edge.members() {
            incident_hyperedges[v].push(e);
        }
    }
    let hyperedge_index = h
        .hyperedges()
        .iter()
        .enumerate()
        .map(|(i, e)| (e.id().as_str().to_owned(), i))
        .collect();
    BipartiteGraph {
        vertex_ids: h.vertices().to_vec(),
        hyperedge_ids: h.hyperedges().iter().map(|e| e.id().clone()).collect(),
        incident_vertices,
        incident_hyperedges,
        hyperedge_index,
    }
}

impl BipartiteGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn hyperedge_count(&self) -> usize {
        self.hyperedge_ids.len()
    }

    pub fn vertex_id(&self, v: usize) -> &VertexId {
        &self.vertex_ids[v]
    }

    pub fn hyperedge_id(&self, e: usize) -> &HyperedgeId {
        &self.hyperedge_ids[e]
    }

    pub fn hyperedge_index(&self, label: &str) -> Option<usize> {
        self.hyperedge_index.get(label).copied()
    }

    /// Degree of a hyperedge node, i.e. the size of its vertex set.
    pub fn degree(&self, e: usize) -> usize {
        self.incident_vertices[e].len()
    }

    /// Incident vertices of a hyperedge, ascending.
    pub fn incident_vertices(&self, e: usize) -> &[usize] {
        &self.incident_vertices[e]
    }

    /// Incident hyperedges of a vertex, ascending.
    pub fn incident_hyperedges(&self, v: usize) -> &[usize] {
        &self.incident_hyperedges[v]
    }

    /// Whether the incidence graph is connected as an undirected graph over
    /// all vertex and hyperedge nodes. Empty graphs are not connected.
    pub fn is_connected(&self) -> bool {
        let nv = self.vertex_count();
        let ne = self.hyperedge_count();
        let total = nv + ne;
        if total == 0 {
            return false;
        }
        let mut seen = vec![false; total];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1usize;
        while let Some(node) = stack.pop() {
            let neighbours: &[usize] = if node < nv {
                &self.incident_hyperedges[node]
            } else {
                &self.incident_vertices[node - nv]
            };
            for &other in neighbours {
                let other_node = if node < nv { nv + other } else { other };
                if !seen[other_node] {
                    seen[other_node] = true;
                    reached += 1;
                    stack.push(other_node);
                }
            }
        }
        reached == total
    }

    pub fn edge_set_from_indices(&self, indices: &[usize]) -> Result<EdgeSet> {
        let ne = self.hyperedge_count();
        if ne > 64 {
            return Err(Error::TooManyHyperedges(ne));
        }
        let mut mask = 0u64;
        for &e in indices {
            if e >= ne {
                return Err(Error::EdgeIndexOutOfRange { index: e, edges: ne });
            }
            mask |= 1 << e;
        }
        Ok(EdgeSet(mask))
    }

    pub fn edge_set_from_ids<S: AsRef<str>>(&self, ids: &[S]) -> Result<EdgeSet> {
        let ne = self.hyperedge_count();
        if ne > 64 {
            return Err(Error::TooManyHyperedges(ne));
        }
        let mut mask = 0u64;
        for id in ids {
            match self.hyperedge_index(id.as_ref()) {
                Some(e) => mask |= 1 << e,
                None => return Err(Error::UnknownHyperedge(id.as_ref().to_owned())),
            }
        }
        Ok(EdgeSet(mask))
    }

    pub fn full_edge_set(&self) -> Result<EdgeSet> {
        let ne = self.hyperedge_count();
        if ne > 64 {
            return Err(Error::TooManyHyperedges(ne));
        }
        Ok(EdgeSet(if ne == 0 { 0 } else { u64::MAX >> (64 - ne) }))
    }

    /// Coverage rank of a hyperedge subset: covered vertices minus connected
    /// components of the restricted subgraph. Zero on the empty set.
    pub fn mu(&self, set: EdgeSet) -> u64 {
        if set.is_empty() {
            return 0;
        }
        let nv = self.vertex_count();
        let mut uf = UnionFind::new(nv + self.hyperedge_count());
        let mut seen_vertex = vec![false; nv];
        let mut covered = 0u64;
        for e in set.iter() {
            for &v in &self.incident_vertices[e] {
                if !seen_vertex[v] {
                    seen_vertex[v] = true;
                    covered += 1;
                }
                uf.union(v, nv + e);
            }
        }
        // Every component of the restricted subgraph contains a covered
        // vertex, because hyperedges are nonempty.
        let mut root_seen = vec![false; nv + self.hyperedge_count()];
        let mut components = 0u64;
        for v in 0..nv {
            if seen_vertex[v] {
                let root = uf.find(v);
                if !root_seen[root] {
                    root_seen[root] = true;
                    components += 1;
                }
            }
        }
        covered - components
    }

    /// Labels of all hyperedges in document order.
    pub fn hyperedge_labels(&self) -> Vec<String> {
        self.hyperedge_ids
            .iter()
            .map(|id| id.as_str().to_owned())
            .collect()
    }

    /// Exact number of spanning trees, as a Laplacian minor determinant
    /// computed with fraction-free elimination. Zero when disconnected.
    pub fn spanning_tree_count(&self) -> u128 {
        let nv = self.vertex_count();
        let ne = self.hyperedge_count();
        let n = nv + ne;
        if n == 0 {
            return 0;
        }
        if n == 1 {
            return 1;
        }
        let dim = n - 1;
        // reduced Laplacian, dropping the node with index 0
        let mut m = vec![vec![0i128; dim]; dim];
        let mut bump = |a: usize, b: usize| {
            // indices into the full Laplacian; node 0 is dropped
            if a > 0 {
                m[a - 1][a - 1] += 1;
            }
            if b > 0 {
                m[b - 1][b - 1] += 1;
            }
            if a > 0 && b > 0 {
                m[a - 1][b - 1] -= 1;
                m[b - 1][a - 1] -= 1;
            }
        };
        for e in 0..ne {
            for &v in &self.incident_vertices[e] {
                bump(v, nv + e);
            }
        }
        // Bareiss: exact integer elimination
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..dim {
            if m[k][k] == 0 {
                match (k + 1..dim).find(|&r| m[r][k] != 0) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..dim {
                for j in k + 1..dim {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        let det = sign * m[dim - 1][dim - 1];
        debug_assert!(det >= 0, "Laplacian minors are nonnegative");
        det.max(0) as u128
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::parse_hypergraph;

    fn triangle() -> Hypergraph {
        parse_hypergraph(
            r#"{"vertices":["v1","v2","v3"],"hyperedges":[
                {"id":"a","vertices":["v1","v2"]},
                {"id":"b","vertices":["v2","v3"]},
                {"id":"c","vertices":["v1","v3"]}]}"#,
        )
        .unwrap()
    }

    #[test]
    fn star_incidences() {
        let h = parse_hypergraph(
            r#"{"vertices":["v1","v2","v3"],"hyperedges":[{"id":"e","vertices":["v1","v2","v3"]}]}"#,
        )
        .unwrap();
        let b = build_bipartite(&h);
        assert_eq!(b.degree(0), 3);
        assert_eq!(b.incident_vertices(0), &[0, 1, 2]);
        for v in 0..3 {
            assert_eq!(b.incident_hyperedges(v), &[0]);
        }
    }

    #[test]
    fn triangle_is_a_six_cycle() {
        let b = build_bipartite(&triangle());
        assert!(b.is_connected());
        for e in 0..3 {
            assert_eq!(b.degree(e), 2);
        }
        for v in 0..3 {
            assert_eq!(b.incident_hyperedges(v).len(), 2);
        }
    }

    #[test]
    fn parallel_pair_is_a_four_cycle() {
        let h = parse_hypergraph(
            r#"{"vertices":["v1","v2"],"hyperedges":[
                {"id":"e1","vertices":["v1","v2"]},
                {"id":"e2","vertices":["v1","v2"]}]}"#,
        )
        .unwrap();
        let b = build_bipartite(&h);
        assert_eq!(b.degree(0), 2);
        assert_eq!(b.degree(1), 2);
        assert!(b.is_connected());
    }

    #[test]
    fn disjoint_hyperedges_are_disconnected() {
        let h = parse_hypergraph(
            r#"{"vertices":["v1","v2","v3","v4"],"hyperedges":[
                {"id":"a","vertices":["v1","v2"]},
                {"id":"b","vertices":["v3","v4"]}]}"#,
        )
        .unwrap();
        assert!(!build_bipartite(&h).is_connected());
    }

    #[test]
    fn single_vertex_single_edge_is_connected() {
        let h = parse_hypergraph(
            r#"{"vertices":["v1"],"hyperedges":[{"id":"e","vertices":["v1"]}]}"#,
        )
        .unwrap();
        assert!(build_bipartite(&h).is_connected());
    }

    #[test]
    fn mu_on_triangle() {
        let b = build_bipartite(&triangle());
        assert_eq!(b.mu(b.edge_set_from_ids(&["a"]).unwrap()), 1);
        assert_eq!(b.mu(b.edge_set_from_ids(&["a", "b", "c"]).unwrap()), 2);
        assert_eq!(b.mu(EdgeSet::EMPTY), 0);
        assert_eq!(b.mu(b.edge_set_from_ids(&["a", "b"]).unwrap()), 2);
    }

    #[test]
    fn mu_counts_components() {
        let h = parse_hypergraph(
            r#"{"vertices":["v1","v2","v3","v4","v5"],"hyperedges":[
                {"id":"a","vertices":["v1","v2"]},
                {"id":"b","vertices":["v3","v4"]},
                {"id":"c","vertices":["v2","v3","v5"]}]}"#,
        )
        .unwrap();
        let b = build_bipartite(&h);
        // a and b cover four vertices in two components
        assert_eq!(b.mu(b.edge_set_from_ids(&["a", "b"]).unwrap()), 2);
        assert_eq!(b.mu(b.full_edge_set().unwrap()), 4);
    }

    #[test]
    fn mu_full_set_is_vertices_minus_one_when_connected() {
        let b = build_bipartite(&triangle());
        assert_eq!(b.mu(b.full_edge_set().unwrap()), 2);
    }

    #[test]
    fn spanning_tree_counts() {
        assert_eq!(build_bipartite(&triangle()).spanning_tree_count(), 6);
        let star = parse_hypergraph(
            r#"{"vertices":["v1","v2","v3"],"hyperedges":[{"id":"e","vertices":["v1","v2","v3"]}]}"#,
        )
        .unwrap();
        assert_eq!(build_bipartite(&star).spanning_tree_count(), 1);
        let lonely = parse_hypergraph(r#"{"vertices":["v1"],"hyperedges":[]}"#).unwrap();
        assert_eq!(build_bipartite(&lonely).spanning_tree_count(), 1);
        let split = parse_hypergraph(
            r#"{"vertices":["v1","v2","v3","v4"],"hyperedges":[
                {"id":"a","vertices":["v1","v2"]},
                {"id":"b","vertices":["v3","v4"]}]}"#,
        )
        .unwrap();
        assert_eq!(build_bipartite(&split).spanning_tree_count(), 0);
        // complete incidences on 7 vertices and 6 hyperedges: 7^5 * 6^6
        let full = Hypergraph::new(
            (1..=7).map(|i| format!("v{i}")).collect::<Vec<_>>(),
            (1..=6)
                .map(|j| {
                    (
                        format!("e{j}"),
                        (1..=7).map(|i| format!("v{i}")).collect::<Vec<_>>(),
                    )
                })
                .collect(),
        )
        .unwrap();
        assert_eq!(
            build_bipartite(&full).spanning_tree_count(),
            784_147_392
        );
    }

    #[test]
    fn unknown_hyperedge_is_rejected() {
        let b = build_bipartite(&triangle());
        assert_eq!(
            b.edge_set_from_ids(&["z"]).unwrap_err(),
            Error::UnknownHyperedge("z".into())
        );
    }
}
