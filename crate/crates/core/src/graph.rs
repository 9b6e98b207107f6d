//! Ordinary multigraphs, their document format, and the translation into
//! hypergraphs where every graph edge becomes a two-vertex hyperedge.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::unionfind::UnionFind;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// One graph edge: an identity and an unordered endpoint pair (as vertex
/// indices). Loops are storable here; translation and Tutte computations
/// reject them at their own boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    id: String,
    ends: (usize, usize),
}

impl GraphEdge {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn ends(&self) -> (usize, usize) {
        self.ends
    }

    pub fn is_loop(&self) -> bool {
        self.ends.0 == self.ends.1
    }
}

/// Multigraph with labeled vertices and edges; parallel edges are distinct
/// identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<VertexId>,
    edges: Vec<GraphEdge>,
    vertex_index: HashMap<String, usize>,
}

impl Multigraph {
    pub fn new<S, T, U>(vertices: Vec<S>, edges: Vec<(T, U, U)>) -> Result<Self>
    where
        S: Into<String>,
        T: Into<String>,
        U: Into<String>,
    {
        let mut vertex_ids = Vec::with_capacity(vertices.len());
        let mut vertex_index = HashMap::new();
        for label in vertices {
            let label = label.into();
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if vertex_index.insert(label.clone(), vertex_ids.len()).is_some() {
                return Err(Error::DuplicateIdentifier {
                    kind: "vertex",
                    id: label,
                });
            }
            vertex_ids.push(VertexId::new(label));
        }
        let mut out = Vec::with_capacity(edges.len());
        let mut seen = HashMap::new();
        for (id, a, b) in edges {
            let id = id.into();
            if id.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if seen.insert(id.clone(), ()).is_some() {
                return Err(Error::DuplicateIdentifier { kind: "edge", id });
            }
            let resolve = |label: String| -> Result<usize> {
                vertex_index
                    .get(&label)
                    .copied()
                    .ok_or_else(|| Error::UndeclaredEndpoint {
                        edge: id.clone(),
                        vertex: label,
                    })
            };
            let a = resolve(a.into())?;
            let b = resolve(b.into())?;
            out.push(GraphEdge { id, ends: (a, b) });
        }
        Ok(Multigraph {
            vertices: vertex_ids,
            edges: out,
            vertex_index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertex_index.get(label).copied()
    }

    pub fn edge_index(&self, label: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == label)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(GraphEdge::is_loop)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut uf = UnionFind::new(n);
        let mut components = n;
        for e in &self.edges {
            if uf.union(e.ends.0, e.ends.1) {
                components -= 1;
            }
        }
        components == 1
    }

    pub fn from_document(doc: &GraphDocument) -> Result<Self> {
        Multigraph::new(
            doc.vertices.clone(),
            doc.edges
                .iter()
                .map(|e| (e.id.clone(), e.ends[0].clone(), e.ends[1].clone()))
                .collect(),
        )
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            vertices: self.vertices.iter().map(|v| v.as_str().to_owned()).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| GraphEdgeDocument {
                    id: e.id.clone(),
                    ends: [
                        self.vertices[e.ends.0].as_str().to_owned(),
                        self.vertices[e.ends.1].as_str().to_owned(),
                    ],
                })
                .collect(),
        }
    }
}

/// Serialized form of a multigraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<GraphEdgeDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphEdgeDocument {
    pub id: String,
    pub ends: [String; 2],
}

/// Parses the serialized graph document format.
pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    Multigraph::from_document(&doc)
}

/// Turns each graph edge into a two-vertex hyperedge with the same identity.
/// Parallel edges become parallel hyperedges; loops are rejected because a
/// one-vertex hyperedge would not behave like a graph loop.
pub fn graph_to_hypergraph(g: &Multigraph) -> Result<Hypergraph> {
    let mut hyperedges = Vec::with_capacity(g.edge_count());
    for edge in g.edges() {
        if edge.is_loop() {
            return Err(Error::LoopNotRepresentable(edge.id().to_owned()));
        }
        let (a, b) = edge.ends();
        hyperedges.push((
            edge.id().to_owned(),
            vec![
                g.vertices()[a].as_str().to_owned(),
                g.vertices()[b].as_str().to_owned(),
            ],
        ));
    }
    Hypergraph::new(
        g.vertices().iter().map(|v| v.as_str().to_owned()).collect(),
        hyperedges,
    )
}
