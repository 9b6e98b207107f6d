//! Seeded generation of random connected hypergraphs for test corpora.

use crate::bipartite::build_bipartite;
use crate::hypergraph::Hypergraph;
use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

/// Shape of a generated corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusSpec {
    pub count: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
}

/// Deterministic corpus for a seed: `count` connected hypergraphs with at
/// most `max_vertices` vertices and `max_edges` hyperedges each.
pub fn generate_corpus(seed: u64, spec: &CorpusSpec) -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..spec.count)
        .map(|_| random_connected_hypergraph(&mut rng, spec.max_vertices, spec.max_edges))
        .collect()
}

/// Rejection-samples hypergraphs until the incidence graph is connected and
/// its spanning trees fit the default enumeration budget, so every corpus
/// member is processable end to end. Vertex labels are `v1..`, hyperedge
/// labels `e1..`.
pub fn random_connected_hypergraph(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_edges: usize,
) -> Hypergraph {
    assert!(max_vertices >= 1 && max_edges >= 1);
    loop {
        let nv = rng.random_range(1..=max_vertices);
        let ne = rng.random_range(1..=max_edges);
        let vertices: Vec<String> = (1..=nv).map(|i| format!("v{i}")).collect();
        let mut hyperedges = Vec::with_capacity(ne);
        for j in 1..=ne {
            let size = rng.random_range(1..=nv);
            let members: Vec<String> = sample(rng, nv, size)
                .into_iter()
                .map(|i| format!("v{}", i + 1))
                .collect();
            hyperedges.push((format!("e{j}"), members));
        }
        let h = Hypergraph::new(vertices, hyperedges).expect("generated labels are valid");
        let bip = build_bipartite(&h);
        if bip.is_connected()
            && bip.spanning_tree_count() <= crate::hypertree::DEFAULT_TREE_BUDGET as u128
        {
            return h;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_connected() {
        let spec = CorpusSpec {
            count: 20,
            max_vertices: 6,
            max_edges: 5,
        };
        let a = generate_corpus(11, &spec);
        let b = generate_corpus(11, &spec);
        assert_eq!(a, b);
        for h in &a {
            assert!(h.vertex_count() <= 6);
            assert!(h.hyperedge_count() <= 5);
            assert!(build_bipartite(h).is_connected());
        }
        let c = generate_corpus(12, &spec);
        assert_ne!(a, c);
    }
}
