//! Checks that the interior and exterior polynomials come out identical
//! under every ordering (or a seeded random sample of orderings).

use super::InstanceContext;
use crate::activity::polynomial_pair;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::ordering::EdgeOrdering;
use crate::poly::IntPolynomial;
use crate::report::{report_from_tallies, Counterexample, Report, Tally};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Cap on the hyperedge count for all-orderings mode.
pub const MAX_ALL_ORDERING_EDGES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingMode {
    /// Every one of the `|E|!` orderings.
    All,
    /// A seeded random sample of orderings.
    Random { samples: usize, seed: u64 },
}

pub fn verify_order_independence(
    hypergraph: &Hypergraph,
    mode: OrderingMode,
    tree_budget: u64,
) -> Result<Report> {
    let ctx = InstanceContext::with_budget(hypergraph, tree_budget)?;
    verify_order_independence_in(&ctx, mode)
}

pub fn verify_order_independence_in(ctx: &InstanceContext, mode: OrderingMode) -> Result<Report> {
    let edge_count = ctx.bip().hyperedge_count();
    let (orderings, seed) = match mode {
        OrderingMode::All => {
            if edge_count > MAX_ALL_ORDERING_EDGES {
                return Err(Error::AllOrderingsBudget {
                    edges: edge_count,
                    max: MAX_ALL_ORDERING_EDGES,
                });
            }
            (EdgeOrdering::all(edge_count), None)
        }
        OrderingMode::Random { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (
                (0..samples)
                    .map(|_| EdgeOrdering::random(edge_count, &mut rng))
                    .collect(),
                Some(seed),
            )
        }
    };

    let table = ctx.table();
    let basis_len = ctx.basis().len();
    let pairs: Vec<(IntPolynomial, IntPolynomial)> = orderings
        .par_iter()
        .map(|o| polynomial_pair(table, basis_len, o))
        .collect();

    // distinct polynomial values, keyed to the first ordering producing them
    let mut interior_seen: BTreeMap<IntPolynomial, usize> = BTreeMap::new();
    let mut exterior_seen: BTreeMap<IntPolynomial, usize> = BTreeMap::new();
    for (i, (interior, exterior)) in pairs.iter().enumerate() {
        interior_seen.entry(interior.clone()).or_insert(i);
        exterior_seen.entry(exterior.clone()).or_insert(i);
    }

    let mut t_interior = Tally::new("interior-order-invariant");
    let mut t_exterior = Tally::new("exterior-order-invariant");
    for _ in 0..orderings.len() {
        t_interior.record(interior_seen.len() <= 1);
        t_exterior.record(exterior_seen.len() <= 1);
    }

    let mut counterexample = None;
    if interior_seen.len() > 1 {
        counterexample = Some(distinct_pair(
            ctx,
            &orderings,
            &interior_seen,
            &pairs,
            "interior",
        ));
    } else if exterior_seen.len() > 1 {
        counterexample = Some(distinct_pair(
            ctx,
            &orderings,
            &exterior_seen,
            &pairs,
            "exterior",
        ));
    }

    let details = serde_json::json!({
        "orderings": orderings.len(),
        "hypertrees": basis_len,
        "interior": interior_seen.keys().collect::<Vec<_>>(),
        "exterior": exterior_seen.keys().collect::<Vec<_>>(),
    });
    Ok(report_from_tallies(
        vec![t_interior, t_exterior],
        counterexample,
        seed,
        Some(details),
    ))
}

fn distinct_pair(
    ctx: &InstanceContext,
    orderings: &[EdgeOrdering],
    seen: &BTreeMap<IntPolynomial, usize>,
    pairs: &[(IntPolynomial, IntPolynomial)],
    which: &str,
) -> Counterexample {
    let mut firsts: Vec<usize> = seen.values().copied().collect();
    firsts.sort_unstable();
    let (a, b) = (firsts[0], firsts[1]);
    let pick = |i: usize| {
        if which == "interior" {
            pairs[i].0.clone()
        } else {
            pairs[i].1.clone()
        }
    };
    Counterexample::OrderIndependence {
        hypergraph: ctx.hypergraph().to_document(),
        polynomial: which.to_owned(),
        order_a: orderings[a].labels(ctx.bip()),
        order_b: orderings[b].labels(ctx.bip()),
        value_a: pick(a),
        value_b: pick(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::parse_hypergraph;
    use crate::hypertree::DEFAULT_TREE_BUDGET;

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
    fn triangle_all_orderings_single_value() {
        let report =
            verify_order_independence(&triangle(), OrderingMode::All, DEFAULT_TREE_BUDGET)
                .unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.check("interior-order-invariant").unwrap().checked, 6);
        assert!(report.seed.is_none());
    }

    #[test]
    fn random_mode_reports_seed() {
        let report = verify_order_independence(
            &triangle(),
            OrderingMode::Random {
                samples: 10,
                seed: 42,
            },
            DEFAULT_TREE_BUDGET,
        )
        .unwrap();
        assert!(report.passed());
        assert_eq!(report.seed, Some(42));
    }

    #[test]
    fn all_mode_budget() {
        let h = crate::gen::random_connected_hypergraph(
            &mut <ChaCha8Rng as SeedableRng>::seed_from_u64(1),
            4,
            9,
        );
        if h.hyperedge_count() > MAX_ALL_ORDERING_EDGES {
            let err =
                verify_order_independence(&h, OrderingMode::All, DEFAULT_TREE_BUDGET).unwrap_err();
            assert!(err.is_budget());
        }
    }

    #[test]
    fn single_hyperedge_trivially_passes() {
        let h = parse_hypergraph(
            r#"{"vertices":["v1","v2"],"hyperedges":[{"id":"e","vertices":["v1","v2"]}]}"#,
        )
        .unwrap();
        let report =
            verify_order_independence(&h, OrderingMode::All, DEFAULT_TREE_BUDGET).unwrap();
        assert!(report.passed());
        assert_eq!(report.check("interior-order-invariant").unwrap().checked, 1);
    }
}
