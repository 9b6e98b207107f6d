//! Hypergraph data model and its serialized document format.
//!
//! A hypergraph is a vertex set plus a multiset of nonempty hyperedges.
//! Parallel hyperedges are kept as distinct identities with equal vertex
//! sets; hyperedge equality is always identity equality. Document order of
//! vertices and hyperedges is preserved and fixes iteration order everywhere
//! downstream.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// Label of a vertex, unique within one hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Self {
        VertexId(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Label of a hyperedge, unique within one hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HyperedgeId(String);

impl HyperedgeId {
    pub fn new(label: impl Into<String>) -> Self {
        HyperedgeId(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for HyperedgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One hyperedge: an identity plus the set of member vertices, stored as
/// ascending vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperedge {
    id: HyperedgeId,
    members: Vec<usize>,
}

impl Hyperedge {
    pub fn id(&self) -> &HyperedgeId {
        &self.id
    }

    /// Member vertices as ascending indices into the vertex list.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<VertexId>,
    hyperedges: Vec<Hyperedge>,
    vertex_index: HashMap<String, usize>,
    hyperedge_index: HashMap<String, usize>,
}

impl Hypergraph {
    /// Builds a hypergraph from vertex labels and `(id, members)` pairs,
    /// both in document order. Member lists are treated as sets.
    pub fn new<S, T, U>(vertices: Vec<S>, hyperedges: Vec<(T, Vec<U>)>) -> Result<Self>
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
            vertex_ids.push(VertexId(label));
        }

        let mut edges = Vec::with_capacity(hyperedges.len());
        let mut hyperedge_index = HashMap::new();
        for (id, members) in hyperedges {
            let id = id.into();
            if id.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if hyperedge_index.insert(id.clone(), edges.len()).is_some() {
                return Err(Error::DuplicateIdentifier {
                    kind: "hyperedge",
                    id,
                });
            }
            let mut indices = Vec::with_capacity(members.len());
            for member in members {
                let member = member.into();
                match vertex_index.get(&member) {
                    Some(&v) => indices.push(v),
                    None => {
                        return Err(Error::UndeclaredVertex {
                            edge: id,
                            vertex: member,
                        })
                    }
                }
            }
            indices.sort_unstable();
            indices.dedup();
            if indices.is_empty() {
                return Err(Error::EmptyHyperedge(id));
            }
            edges.push(Hyperedge {
                id: HyperedgeId(id),
                members: indices,
            });
        }

        Ok(Hypergraph {
            vertices: vertex_ids,
            hyperedges: edges,
            vertex_index,
            hyperedge_index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn hyperedge_count(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn hyperedges(&self) -> &[Hyperedge] {
        &self.hyperedges
    }

    pub fn vertex(&self, index: usize) -> &VertexId {
        &self.vertices[index]
    }

    pub fn hyperedge(&self, index: usize) -> &Hyperedge {
        &self.hyperedges[index]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertex_index.get(label).copied()
    }

    pub fn hyperedge_index(&self, label: &str) -> Option<usize> {
        self.hyperedge_index.get(label).copied()
    }

    /// Hyperedges with a single member vertex. Their valence is forced to
    /// zero in every hypertree; callers may want to surface that.
    pub fn unit_hyperedges(&self) -> Vec<&HyperedgeId> {
        self.hyperedges
            .iter()
            .filter(|e| e.members.len() == 1)
            .map(|e| &e.id)
            .collect()
    }

    pub fn from_document(doc: &HypergraphDocument) -> Result<Self> {
        Hypergraph::new(
            doc.vertices.clone(),
            doc.hyperedges
                .iter()
                .map(|e| (e.id.clone(), e.vertices.clone()))
                .collect(),
        )
    }

    /// Document form: identities in document order, member sets sorted by
    /// vertex label.
    pub fn to_document(&self) -> HypergraphDocument {
        HypergraphDocument {
            vertices: self.vertices.iter().map(|v| v.0.clone()).collect(),
            hyperedges: self
                .hyperedges
                .iter()
                .map(|e| {
                    let mut members: Vec<String> = e
                        .members
                        .iter()
                        .map(|&v| self.vertices[v].0.clone())
                        .collect();
                    members.sort_unstable();
                    HyperedgeDocument {
                        id: e.id.0.clone(),
                        vertices: members,
                    }
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("document serializes")
    }
}

/// Serialized form of a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDocument {
    pub vertices: Vec<String>,
    pub hyperedges: Vec<HyperedgeDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperedgeDocument {
    pub id: String,
    pub vertices: Vec<String>,
}

/// Parses the serialized hypergraph document format.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let doc: HypergraphDocument =
        serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    Hypergraph::from_document(&doc)
}
