//! Cross-checks of the production routes against the brute-force oracles,
//! with the hand-derivable expected values frozen in.

mod common;

use common::*;
use hyperpoly::{
    build_bipartite, enumerate_hypertrees, exterior_polynomial, interior_polynomial, is_hypertree,
    EdgeOrdering, Multigraph, TransferCache,
};
use std::collections::BTreeSet;

#[test]
fn frozen_triangle_basis() {
    let b = build_bipartite(&triangle());
    assert_eq!(
        brute_hypertrees(&b),
        vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]
    );
}

#[test]
fn frozen_parallel_triple_basis() {
    let b = build_bipartite(&parallel_triple());
    assert_eq!(
        brute_hypertrees(&b),
        vec![vec![0, 2], vec![1, 1], vec![2, 0]]
    );
}

#[test]
fn enumeration_matches_brute_on_fixtures() {
    for h in [
        triangle(),
        one_edge_star(),
        parallel_triple(),
        parallel_pair(),
        path_three(),
    ] {
        let b = build_bipartite(&h);
        let brute = brute_hypertrees(&b);
        let produced: Vec<Vec<u32>> = enumerate_hypertrees(&b)
            .unwrap()
            .into_iter()
            .map(|t| t.values().to_vec())
            .collect();
        assert_eq!(produced, brute);
    }
}

#[test]
fn realization_checker_matches_brute_membership() {
    // all vectors within the degree bounds, valid and invalid alike
    for h in [triangle(), parallel_triple(), parallel_pair()] {
        let b = build_bipartite(&h);
        let basis: BTreeSet<Vec<u32>> = brute_hypertrees(&b).into_iter().collect();
        let ne = b.hyperedge_count();
        let bound: Vec<u32> = (0..ne).map(|e| b.degree(e) as u32).collect();
        let mut candidate = vec![0u32; ne];
        loop {
            let witness = is_hypertree(&b, &candidate).unwrap();
            assert_eq!(
                witness.is_some(),
                basis.contains(&candidate),
                "candidate {candidate:?}"
            );
            if let Some(w) = witness {
                assert!(w.realizes(&b, &candidate));
            }
            // odometer over the grid
            let mut pos = 0;
            loop {
                if pos == ne {
                    break;
                }
                candidate[pos] += 1;
                if candidate[pos] < bound[pos] {
                    break;
                }
                candidate[pos] = 0;
                pos += 1;
            }
            if pos == ne {
                break;
            }
        }
    }
}

#[test]
fn frozen_triangle_polynomials_under_all_orderings() {
    let b = build_bipartite(&triangle());
    for o in EdgeOrdering::all(3) {
        assert_eq!(interior_polynomial(&b, &o).unwrap().coefficients(), &[1, 1, 1]);
        assert_eq!(exterior_polynomial(&b, &o).unwrap().coefficients(), &[1, 2]);
    }
}

#[test]
fn polynomials_match_brute_on_fixtures() {
    for h in [
        triangle(),
        one_edge_star(),
        parallel_triple(),
        parallel_pair(),
        path_three(),
    ] {
        let b = build_bipartite(&h);
        for o in EdgeOrdering::all(b.hyperedge_count()) {
            let (bi, be) = brute_polynomials(&b, &o);
            assert_eq!(interior_polynomial(&b, &o).unwrap().coefficients(), &bi[..]);
            assert_eq!(exterior_polynomial(&b, &o).unwrap().coefficients(), &be[..]);
        }
    }
}

#[test]
fn polynomials_match_brute_on_small_random_instances() {
    let corpus = hyperpoly::generate_corpus(
        97,
        &hyperpoly::CorpusSpec {
            count: 25,
            max_vertices: 4,
            max_edges: 3,
        },
    );
    for h in &corpus {
        let b = build_bipartite(h);
        for o in EdgeOrdering::all(b.hyperedge_count()) {
            let (bi, be) = brute_polynomials(&b, &o);
            assert_eq!(interior_polynomial(&b, &o).unwrap().coefficients(), &bi[..]);
            assert_eq!(exterior_polynomial(&b, &o).unwrap().coefficients(), &be[..]);
        }
    }
}

#[test]
fn activity_profile_matches_brute_counts() {
    let h = triangle();
    let b = build_bipartite(&h);
    let basis: BTreeSet<Vec<u32>> = brute_hypertrees(&b).into_iter().collect();
    let trees = enumerate_hypertrees(&b).unwrap();
    let mut cache = TransferCache::new();
    for o in EdgeOrdering::all(3) {
        for f in &trees {
            let profile = hyperpoly::activity_profile(&b, f, &o, &mut cache).unwrap();
            let (bi, be) = brute_inactivity(&basis, f.values(), &o);
            assert_eq!(profile.internal_inactivity(), bi);
            assert_eq!(profile.external_inactivity(), be);
        }
    }
}

#[test]
fn frozen_tutte_values() {
    let triangle_graph = Multigraph::new(
        vec!["v1", "v2", "v3"],
        vec![("a", "v1", "v2"), ("b", "v2", "v3"), ("c", "v1", "v3")],
    )
    .unwrap();
    let t = hyperpoly::tutte_deletion_contraction(&triangle_graph).unwrap();
    let terms: Vec<((u32, u32), u64)> = t.terms().collect();
    assert_eq!(terms, vec![((0, 1), 1), ((1, 0), 1), ((2, 0), 1)]);

    let pair = Multigraph::new(vec!["v1", "v2"], vec![("p", "v1", "v2"), ("q", "v1", "v2")])
        .unwrap();
    let t = hyperpoly::tutte_deletion_contraction(&pair).unwrap();
    let terms: Vec<((u32, u32), u64)> = t.terms().collect();
    assert_eq!(terms, vec![((0, 1), 1), ((1, 0), 1)]);
}

#[test]
fn triangle_crosscheck_reverses_tutte() {
    let g = Multigraph::new(
        vec!["v1", "v2", "v3"],
        vec![("a", "v1", "v2"), ("b", "v2", "v3"), ("c", "v1", "v3")],
    )
    .unwrap();
    let report = hyperpoly::crosscheck_specialization(&g).unwrap();
    assert!(report.passed(), "{}", report.render_text());
    // T(x,1) = x^2 + x + 1 reversed in degree 2 is 1 + x + x^2;
    // T(1,y) = y + 2 reversed in degree 1 is 1 + 2y
    let t = hyperpoly::tutte_deletion_contraction(&g).unwrap();
    assert_eq!(
        t.x_specialization().reversed_within(2).unwrap().coefficients(),
        &[1, 1, 1]
    );
    assert_eq!(
        t.y_specialization().reversed_within(1).unwrap().coefficients(),
        &[1, 2]
    );
}

#[test]
fn path_crosscheck_with_trivial_interior() {
    let g = Multigraph::new(
        vec!["v1", "v2", "v3"],
        vec![("g1", "v1", "v2"), ("g2", "v2", "v3")],
    )
    .unwrap();
    let report = hyperpoly::crosscheck_specialization(&g).unwrap();
    assert!(report.passed(), "{}", report.render_text());
    let b = build_bipartite(&path_three());
    let o = EdgeOrdering::document(2);
    assert_eq!(interior_polynomial(&b, &o).unwrap().coefficients(), &[1]);
}
