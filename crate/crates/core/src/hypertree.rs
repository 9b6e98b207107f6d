//! Hypertrees: valence vectors realizable by a spanning tree of the
//! incidence graph, their enumeration, and single-step valence transfers.
//!
//! A valence vector `f` is a hypertree when some spanning tree of the
//! incidence graph gives hyperedge `e` degree `f(e) + 1` for every `e`. Such
//! a spanning tree has `|V| + |E| - 1` incidences, so any hypertree sums to
//! `|V| - 1`.

use crate::bipartite::BipartiteGraph;
use crate::error::{Error, Result};
use crate::unionfind::{snapshot_find, RewindableUnionFind};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

/// Default cap on the number of spanning trees visited during enumeration.
pub const DEFAULT_TREE_BUDGET: u64 = 1_000_000;

/// Valence vector of a hypertree, indexed by hyperedge in document order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hypertree {
    values: Vec<u32>,
}

impl Hypertree {
    /// Validates the values against the graph; fails unless they are
    /// realizable by a spanning tree.
    pub fn try_new(bip: &BipartiteGraph, values: Vec<u32>) -> Result<Self> {
        match is_hypertree(bip, &values)? {
            Some(_) => Ok(Hypertree { values }),
            None => Err(Error::NotAHypertree),
        }
    }

    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        Hypertree { values }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, edge: usize) -> u32 {
        self.values[edge]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The candidate vector after moving one unit of valence, or `None` when
    /// the source is already at zero.
    pub fn transferred(&self, from: usize, to: usize) -> Option<Vec<u32>> {
        if self.values[from] == 0 {
            return None;
        }
        let mut shifted = self.values.clone();
        shifted[from] -= 1;
        shifted[to] += 1;
        Some(shifted)
    }

    /// Document form: hyperedge label to valence, sorted by label.
    pub fn to_document(&self, bip: &BipartiteGraph) -> BTreeMap<String, u64> {
        self.values
            .iter()
            .enumerate()
            .map(|(e, &v)| (bip.hyperedge_id(e).as_str().to_owned(), v as u64))
            .collect()
    }

    /// Parses a document, requiring the domain to be exactly the hyperedge
    /// set, and validates realizability.
    pub fn from_document(bip: &BipartiteGraph, doc: &BTreeMap<String, u64>) -> Result<Self> {
        let ne = bip.hyperedge_count();
        if doc.len() != ne {
            return Err(Error::DomainMismatch {
                expected: ne,
                got: doc.len(),
            });
        }
        let mut values = vec![0u32; ne];
        for (label, &v) in doc {
            let e = bip
                .hyperedge_index(label)
                .ok_or_else(|| Error::UnknownHyperedge(label.clone()))?;
            values[e] = u32::try_from(v)
                .map_err(|_| Error::MalformedDocument(format!("valence {v} out of range")))?;
        }
        Hypertree::try_new(bip, values)
    }
}

/// A spanning tree of the incidence graph, as sorted (vertex, hyperedge)
/// incidence pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTreeWitness {
    pairs: Vec<(usize, usize)>,
}

impl SpanningTreeWitness {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        SpanningTreeWitness { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Degree of each hyperedge node in the witness.
    pub fn degrees(&self, edge_count: usize) -> Vec<u32> {
        let mut deg = vec![0u32; edge_count];
        for &(_, e) in &self.pairs {
            deg[e] += 1;
        }
        deg
    }

    /// Independent re-validation: every pair is an incidence of the graph,
    /// the pairs are distinct and acyclic, and they span all nodes.
    pub fn is_spanning_tree_of(&self, bip: &BipartiteGraph) -> bool {
        let nv = bip.vertex_count();
        let ne = bip.hyperedge_count();
        if nv == 0 || self.pairs.len() + 1 != nv + ne {
            return false;
        }
        let mut uf = RewindableUnionFind::new(nv + ne);
        let mut prev: Option<(usize, usize)> = None;
        for &(v, e) in &self.pairs {
            if prev == Some((v, e)) {
                return false;
            }
            prev = Some((v, e));
            if v >= nv || e >= ne || !bip.incident_vertices(e).contains(&v) {
                return false;
            }
            if !uf.union(v, nv + e) {
                return false;
            }
        }
        // acyclic with |V|+|E|-1 edges over |V|+|E| nodes: a spanning tree
        true
    }

    /// Whether this witness realizes the candidate valence vector.
    pub fn realizes(&self, bip: &BipartiteGraph, candidate: &[u32]) -> bool {
        if candidate.len() != bip.hyperedge_count() || !self.is_spanning_tree_of(bip) {
            return false;
        }
        self.degrees(candidate.len())
            .iter()
            .zip(candidate)
            .all(|(&d, &f)| d == f + 1)
    }

    /// Document form: `[vertex, hyperedge]` label pairs, sorted.
    pub fn to_document(&self, bip: &BipartiteGraph) -> Vec<[String; 2]> {
        let mut doc: Vec<[String; 2]> = self
            .pairs
            .iter()
            .map(|&(v, e)| {
                [
                    bip.vertex_id(v).as_str().to_owned(),
                    bip.hyperedge_id(e).as_str().to_owned(),
                ]
            })
            .collect();
        doc.sort();
        doc
    }
}

/// Reads the valence vector off a spanning tree: `f(e) = d(e) - 1`.
pub fn hypertree_from_tree(
    bip: &BipartiteGraph,
    witness: &SpanningTreeWitness,
) -> Result<Hypertree> {
    if !witness.is_spanning_tree_of(bip) {
        return Err(Error::InvalidWitness);
    }
    let values = witness
        .degrees(bip.hyperedge_count())
        .into_iter()
        .map(|d| d - 1)
        .collect();
    Ok(Hypertree::from_values_unchecked(values))
}

/// Decides whether a candidate valence vector is a hypertree by constructing
/// a realizing spanning tree with backtracking. Hyperedge nodes are processed
/// in document order; incident vertices are tried in ascending order; a
/// branch is pruned unless the component count stays in exact balance with
/// the remaining degree budget.
///
/// Returns a witness on success, `None` when no spanning tree realizes the
/// candidate, and an error only when the candidate does not cover the
/// hyperedge set.
pub fn is_hypertree(
    bip: &BipartiteGraph,
    candidate: &[u32],
) -> Result<Option<SpanningTreeWitness>> {
    let nv = bip.vertex_count();
    let ne = bip.hyperedge_count();
    if candidate.len() != ne {
        return Err(Error::DomainMismatch {
            expected: ne,
            got: candidate.len(),
        });
    }
    if nv == 0 {
        return Ok(None);
    }
    let total: u64 = candidate.iter().map(|&x| x as u64).sum();
    if total != nv as u64 - 1 {
        return Ok(None);
    }
    for e in 0..ne {
        if candidate[e] as usize + 1 > bip.degree(e) {
            return Ok(None);
        }
    }
    if ne == 0 {
        // single vertex, no hyperedges: the one-node tree
        return Ok(if nv == 1 {
            Some(SpanningTreeWitness::new(Vec::new()))
        } else {
            None
        });
    }

    // remaining[i] = incidences still to be placed for hyperedges i..
    let mut remaining = vec![0u64; ne + 1];
    for e in (0..ne).rev() {
        remaining[e] = remaining[e + 1] + candidate[e] as u64 + 1;
    }

    let mut search = RealizationSearch {
        bip,
        candidate,
        remaining,
        uf: RewindableUnionFind::new(nv + ne),
        chosen: Vec::with_capacity(nv + ne - 1),
    };
    let found = search.place(0, (nv + ne) as u64);
    Ok(found.then(|| SpanningTreeWitness::new(search.chosen)))
}

struct RealizationSearch<'a> {
    bip: &'a BipartiteGraph,
    candidate: &'a [u32],
    remaining: Vec<u64>,
    uf: RewindableUnionFind,
    chosen: Vec<(usize, usize)>,
}

impl RealizationSearch<'_> {
    fn place(&mut self, e_idx: usize, components: u64) -> bool {
        if e_idx == self.bip.hyperedge_count() {
            return components == 1;
        }
        let need = self.candidate[e_idx] as usize + 1;
        self.pick(e_idx, 0, need, components)
    }

    fn pick(&mut self, e_idx: usize, adj_pos: usize, need: usize, components: u64) -> bool {
        // every future incidence merges two components; anything short of
        // exact balance at the end is unreachable
        if components < need as u64 + self.remaining[e_idx + 1] + 1 {
            return false;
        }
        if need == 0 {
            if components != self.remaining[e_idx + 1] + 1 {
                return false;
            }
            return self.place(e_idx + 1, components);
        }
        let adj = self.bip.incident_vertices(e_idx);
        if adj.len() - adj_pos < need {
            return false;
        }
        let nv = self.bip.vertex_count();
        let e_node = nv + e_idx;
        let v = adj[adj_pos];
        if self.uf.find(v) != self.uf.find(e_node) {
            let mark = self.uf.mark();
            self.uf.union(v, e_node);
            self.chosen.push((v, e_idx));
            if self.pick(e_idx, adj_pos + 1, need - 1, components - 1) {
                return true;
            }
            self.chosen.pop();
            self.uf.rewind(mark);
        }
        self.pick(e_idx, adj_pos + 1, need, components)
    }
}

/// Enumerates all hypertrees with the default spanning-tree budget.
pub fn enumerate_hypertrees(bip: &BipartiteGraph) -> Result<Vec<Hypertree>> {
    enumerate_hypertrees_with_budget(bip, DEFAULT_TREE_BUDGET)
}

/// Enumerates all hypertrees by walking every spanning tree of the incidence
/// graph with contraction/deletion branching (an edge may be excluded only
/// when the rest still connects, so there are no dead branches) and
/// deduplicating the induced valence vectors. The result is sorted
/// lexicographically with coordinates in document order.
pub fn enumerate_hypertrees_with_budget(
    bip: &BipartiteGraph,
    budget: u64,
) -> Result<Vec<Hypertree>> {
    if !bip.is_connected() {
        return Err(Error::NotConnected);
    }
    // exact count up front, so oversized instances fail fast
    if bip.spanning_tree_count() > budget as u128 {
        return Err(Error::TreeBudgetExceeded { budget });
    }
    let nv = bip.vertex_count();
    let ne = bip.hyperedge_count();
    let mut incidences = Vec::new();
    for e in 0..ne {
        for &v in bip.incident_vertices(e) {
            incidences.push((v, nv + e, e));
        }
    }

    let mut walk = TreeWalk {
        incidences,
        uf: RewindableUnionFind::new(nv + ne),
        degrees: vec![0u32; ne],
        found: BTreeSet::new(),
    };
    walk.explore(0, (nv + ne) as u64);
    Ok(walk
        .found
        .into_iter()
        .map(|mut degrees| {
            for d in &mut degrees {
                *d -= 1;
            }
            Hypertree::from_values_unchecked(degrees)
        })
        .collect())
}

struct TreeWalk {
    incidences: Vec<(usize, usize, usize)>,
    uf: RewindableUnionFind,
    degrees: Vec<u32>,
    found: BTreeSet<Vec<u32>>,
}

impl TreeWalk {
    fn explore(&mut self, pos: usize, components: u64) {
        if components == 1 {
            self.found.insert(self.degrees.clone());
            return;
        }
        let mut pos = pos;
        while pos < self.incidences.len() {
            let (u, w, _) = self.incidences[pos];
            if self.uf.find(u) != self.uf.find(w) {
                break;
            }
            pos += 1;
        }
        if pos == self.incidences.len() {
            return;
        }
        let (u, w, e) = self.incidences[pos];

        // include the incidence
        let mark = self.uf.mark();
        self.uf.union(u, w);
        self.degrees[e] += 1;
        self.explore(pos + 1, components - 1);
        self.degrees[e] -= 1;
        self.uf.rewind(mark);

        // exclude it, unless it is a bridge of the contracted graph
        if self.connects_without(pos, components) {
            self.explore(pos + 1, components);
        }
    }

    fn connects_without(&self, pos: usize, components: u64) -> bool {
        let mut parents = self.uf.parents();
        let mut remaining = components;
        for &(u, w, _) in &self.incidences[pos + 1..] {
            let ru = snapshot_find(&mut parents, u);
            let rw = snapshot_find(&mut parents, w);
            if ru != rw {
                parents[ru] = rw as u32;
                remaining -= 1;
                if remaining == 1 {
                    return true;
                }
            }
        }
        remaining == 1
    }
}

/// A single move of one unit of valence between two distinct hyperedges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransferMove {
    pub from: usize,
    pub to: usize,
}

impl TransferMove {
    pub fn new(from: usize, to: usize) -> Result<Self> {
        if from == to {
            return Err(Error::IdenticalEndpoints);
        }
        Ok(TransferMove { from, to })
    }

    pub fn from_ids(bip: &BipartiteGraph, from: &str, to: &str) -> Result<Self> {
        let from = bip
            .hyperedge_index(from)
            .ok_or_else(|| Error::UnknownHyperedge(from.to_owned()))?;
        let to = bip
            .hyperedge_index(to)
            .ok_or_else(|| Error::UnknownHyperedge(to.to_owned()))?;
        TransferMove::new(from, to)
    }
}

/// Whether one unit of valence can move along `mv` at `f`, i.e. whether the
/// shifted vector is again a hypertree.
pub fn transfer_valid(bip: &BipartiteGraph, f: &Hypertree, mv: TransferMove) -> Result<bool> {
    let ne = bip.hyperedge_count();
    if mv.from == mv.to {
        return Err(Error::IdenticalEndpoints);
    }
    for index in [mv.from, mv.to] {
        if index >= ne {
            return Err(Error::EdgeIndexOutOfRange { index, edges: ne });
        }
    }
    match f.transferred(mv.from, mv.to) {
        Some(shifted) => Ok(is_hypertree(bip, &shifted)?.is_some()),
        None => Ok(false),
    }
}

/// Breadth-first closure of a seed hypertree under single valence transfers,
/// each candidate validated by the realization checker. Sorted like
/// `enumerate_hypertrees`, so agreement of the two enumerations can be
/// checked with plain equality.
pub fn enumerate_hypertrees_by_transfer(
    bip: &BipartiteGraph,
    seed: &Hypertree,
) -> Result<Vec<Hypertree>> {
    let ne = bip.hyperedge_count();
    if seed.len() != ne {
        return Err(Error::DomainMismatch {
            expected: ne,
            got: seed.len(),
        });
    }
    if is_hypertree(bip, seed.values())?.is_none() {
        return Err(Error::InvalidSeed);
    }
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut validity: HashMap<Vec<u32>, bool> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.values().to_vec());
    queue.push_back(seed.values().to_vec());
    while let Some(current) = queue.pop_front() {
        for from in 0..ne {
            if current[from] == 0 {
                continue;
            }
            for to in 0..ne {
                if to == from {
                    continue;
                }
                let mut shifted = current.clone();
                shifted[from] -= 1;
                shifted[to] += 1;
                if seen.contains(&shifted) {
                    continue;
                }
                let valid = match validity.get(&shifted) {
                    Some(&v) => v,
                    None => {
                        let v = is_hypertree(bip, &shifted)?.is_some();
                        validity.insert(shifted.clone(), v);
                        v
                    }
                };
                if valid {
                    seen.insert(shifted.clone());
                    queue.push_back(shifted);
                }
            }
        }
    }
    Ok(seen
        .into_iter()
        .map(Hypertree::from_values_unchecked)
        .collect())
}
