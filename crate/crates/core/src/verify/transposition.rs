//! Replays the adjacent-transposition argument: swapping two neighbouring
//! ranks of an ordering must leave the interior and exterior polynomials
//! unchanged, fiber by fiber.
//!
//! With `lo` the edge at the swapped rank and `hi` its successor, each
//! hypertree has two neighbour vectors: "up" moves one unit of valence from
//! `hi` to `lo`, "down" moves one from `lo` to `hi`. Hypertrees fall into
//! three cases by which neighbours are again hypertrees: neither (activity
//! counts must be unchanged by the swap), both (again unchanged), or exactly
//! one (the two ends of the fiber swap their counts as an unordered pair).
//! On top of the case analysis, the verifier re-checks the stability facts
//! and the endpoint activity matrices that carry the argument.

use super::InstanceContext;
use crate::activity::ActivityProfile;
use crate::error::{Error, Result};
use crate::fiber::partition_into_fibers;
use crate::hypergraph::Hypergraph;
use crate::hypertree::{is_hypertree, DEFAULT_TREE_BUDGET};
use crate::ordering::EdgeOrdering;
use crate::report::{report_from_tallies, Counterexample, Report, Tally};

pub fn verify_transposition_proof(
    hypergraph: &Hypergraph,
    ordering: &EdgeOrdering,
    rank: usize,
) -> Result<Report> {
    let ctx = InstanceContext::with_budget(hypergraph, DEFAULT_TREE_BUDGET)?;
    verify_transposition_in(&ctx, ordering, rank)
}

/// Runs all transposition checks for the 1-based `rank`, swapping the edges
/// at ranks `rank` and `rank + 1` of the ordering.
pub fn verify_transposition_in(
    ctx: &InstanceContext,
    ordering: &EdgeOrdering,
    rank: usize,
) -> Result<Report> {
    let edge_count = ctx.bip().hyperedge_count();
    if ordering.len() != edge_count {
        return Err(Error::InvalidOrdering);
    }
    if rank < 1 || rank >= edge_count {
        return Err(Error::RankOutOfRange {
            rank,
            edges: edge_count,
        });
    }

    let o1 = ordering.clone();
    let o2 = ordering.swap_adjacent(rank - 1);
    let lo = o1.edge_at_rank(rank - 1);
    let hi = o1.edge_at_rank(rank);
    let basis = ctx.basis();
    let table = ctx.table();

    let prof1: Vec<ActivityProfile> = (0..basis.len()).map(|fi| table.profile(fi, &o1)).collect();
    let prof2: Vec<ActivityProfile> = (0..basis.len()).map(|fi| table.profile(fi, &o2)).collect();

    // neighbour validity, straight from the realization checker
    let mut up_valid = vec![false; basis.len()];
    let mut down_valid = vec![false; basis.len()];
    for (fi, f) in basis.iter().enumerate() {
        up_valid[fi] = match f.transferred(hi, lo) {
            Some(shifted) => is_hypertree(ctx.bip(), &shifted)?.is_some(),
            None => false,
        };
        down_valid[fi] = match f.transferred(lo, hi) {
            Some(shifted) => is_hypertree(ctx.bip(), &shifted)?.is_some(),
            None => false,
        };
    }

    let fibers = partition_into_fibers(basis, lo, hi)?;

    let mut t_consecutive = Tally::new("fiber-consecutive");
    let mut t_case_pos = Tally::new("case-classification");
    let mut t_case1 = Tally::new("case1-counts-stable");
    let mut t_case2 = Tally::new("case2-counts-stable");
    let mut t_case3 = Tally::new("case3-endpoint-swap");
    let mut t_fiber_sum = Tally::new("fiber-sum-invariant");
    let mut t_fact1 = Tally::new("untouched-activity-stable");
    let mut t_claim1 = Tally::new("demoted-stays-inactive");
    let mut t_claim2 = Tally::new("promoted-stays-active");
    let mut t_claim3 = Tally::new("migrate-on-inflow");
    let mut t_claim4 = Tally::new("persist-no-inflow");
    let mut t_claim5 = Tally::new("migrate-on-outflow");
    let mut t_claim6 = Tally::new("persist-no-outflow");
    let mut t_table_int = Tally::new("endpoint-internal-table");
    let mut t_table_ext = Tally::new("endpoint-external-table");
    let mut t_claim8 = Tally::new("endpoint-agreement-internal");
    let mut t_claim8p = Tally::new("endpoint-agreement-external");

    let mut counterexample: Option<Counterexample> = None;
    let mut fail = |check: &str, witness: serde_json::Value, ce: &mut Option<Counterexample>| {
        if ce.is_none() {
            *ce = Some(Counterexample::Transposition {
                hypergraph: ctx.hypergraph().to_document(),
                order: o1.labels(ctx.bip()),
                swap_rank: rank,
                check: check.to_owned(),
                witness,
            });
        }
    };

    let member_doc = |fi: usize| basis[fi].to_document(ctx.bip());
    let counts = |prof: &ActivityProfile| (prof.internal_inactivity(), prof.external_inactivity());

    for fiber in &fibers {
        let len = fiber.len();
        if !t_consecutive.record(fiber.is_consecutive(basis, lo)) {
            fail(
                t_consecutive.name(),
                serde_json::json!({
                    "fiber": fiber.members().iter().map(|&fi| member_doc(fi)).collect::<Vec<_>>(),
                }),
                &mut counterexample,
            );
        }

        for (pos, &fi) in fiber.members().iter().enumerate() {
            // neighbour validity must match the position inside the fiber
            let expected_up = pos + 1 < len;
            let expected_down = pos > 0;
            let ok = up_valid[fi] == expected_up && down_valid[fi] == expected_down;
            if !t_case_pos.record(ok) {
                fail(
                    t_case_pos.name(),
                    serde_json::json!({
                        "hypertree": member_doc(fi),
                        "up_valid": up_valid[fi],
                        "down_valid": down_valid[fi],
                        "position": pos,
                        "fiber_len": len,
                    }),
                    &mut counterexample,
                );
            }

            let (i1, e1) = counts(&prof1[fi]);
            let (i2, e2) = counts(&prof2[fi]);
            match (up_valid[fi], down_valid[fi]) {
                (false, false) => {
                    if !t_case1.record(i1 == i2 && e1 == e2) {
                        fail(
                            t_case1.name(),
                            serde_json::json!({
                                "hypertree": member_doc(fi),
                                "counts": [i1, e1, i2, e2],
                            }),
                            &mut counterexample,
                        );
                    }
                }
                (true, true) => {
                    if !t_case2.record(i1 == i2 && e1 == e2) {
                        fail(
                            t_case2.name(),
                            serde_json::json!({
                                "hypertree": member_doc(fi),
                                "counts": [i1, e1, i2, e2],
                            }),
                            &mut counterexample,
                        );
                    }
                }
                _ => {}
            }
        }

        // ends of the fiber swap their counts as an unordered pair
        if len >= 2 {
            let f = fiber.low_end();
            let fs = fiber.high_end();
            let swap_ok = |a1: usize, b1: usize, a2: usize, b2: usize| {
                let mut lhs = [a1, b1];
                let mut rhs = [a2, b2];
                lhs.sort_unstable();
                rhs.sort_unstable();
                lhs == rhs
            };
            let ok_int = swap_ok(
                prof1[f].internal_inactivity(),
                prof1[fs].internal_inactivity(),
                prof2[f].internal_inactivity(),
                prof2[fs].internal_inactivity(),
            );
            let ok_ext = swap_ok(
                prof1[f].external_inactivity(),
                prof1[fs].external_inactivity(),
                prof2[f].external_inactivity(),
                prof2[fs].external_inactivity(),
            );
            if !t_case3.record(ok_int && ok_ext) {
                fail(
                    t_case3.name(),
                    serde_json::json!({
                        "low_end": member_doc(f),
                        "high_end": member_doc(fs),
                    }),
                    &mut counterexample,
                );
            }
        } else {
            t_case3.record_vacuous();
        }

        // the fiber's multiset of activity counts is swap-invariant
        let mut sums1: Vec<(usize, usize)> = Vec::with_capacity(len);
        let mut sums2: Vec<(usize, usize)> = Vec::with_capacity(len);
        for &fi in fiber.members() {
            sums1.push(counts(&prof1[fi]));
            sums2.push(counts(&prof2[fi]));
        }
        let mut ints1: Vec<usize> = sums1.iter().map(|&(i, _)| i).collect();
        let mut ints2: Vec<usize> = sums2.iter().map(|&(i, _)| i).collect();
        let mut exts1: Vec<usize> = sums1.iter().map(|&(_, e)| e).collect();
        let mut exts2: Vec<usize> = sums2.iter().map(|&(_, e)| e).collect();
        ints1.sort_unstable();
        ints2.sort_unstable();
        exts1.sort_unstable();
        exts2.sort_unstable();
        if !t_fiber_sum.record(ints1 == ints2 && exts1 == exts2) {
            fail(
                t_fiber_sum.name(),
                serde_json::json!({
                    "fiber": fiber.members().iter().map(|&fi| member_doc(fi)).collect::<Vec<_>>(),
                }),
                &mut counterexample,
            );
        }

        // endpoint activity matrices, under their respective hypotheses
        if len >= 2 {
            let f = fiber.low_end();
            let fs = fiber.high_end();
            // internal matrix applies when `hi` is internally active at the
            // low end under the swapped order
            if prof2[f].internally_active(hi) {
                let cells = [
                    (prof1[f].internally_active(lo), true),
                    (prof2[fs].internally_active(lo), false),
                    (prof2[f].internally_active(lo), true),
                    (prof1[fs].internally_active(lo), true),
                    (prof1[f].internally_active(hi), false),
                    (prof2[fs].internally_active(hi), true),
                    (prof2[f].internally_active(hi), true),
                    (prof1[fs].internally_active(hi), true),
                ];
                let ok = cells.iter().all(|&(got, want)| got == want);
                if !t_table_int.record(ok) {
                    fail(
                        t_table_int.name(),
                        serde_json::json!({
                            "low_end": member_doc(f),
                            "high_end": member_doc(fs),
                            "cells": cells.iter().map(|&(got, _)| got).collect::<Vec<_>>(),
                        }),
                        &mut counterexample,
                    );
                }
                // away from the swapped pair, internal activity agrees
                // between the two ends under the original order
                let mut agree = true;
                for e in 0..edge_count {
                    if e == lo || e == hi {
                        continue;
                    }
                    if prof1[f].internally_active(e) != prof1[fs].internally_active(e) {
                        agree = false;
                        break;
                    }
                }
                if !t_claim8.record(agree) {
                    fail(
                        t_claim8.name(),
                        serde_json::json!({
                            "low_end": member_doc(f),
                            "high_end": member_doc(fs),
                        }),
                        &mut counterexample,
                    );
                }
            } else {
                t_table_int.record_vacuous();
                t_claim8.record_vacuous();
            }
            // external matrix applies when `lo` is externally active at the
            // low end under the original order
            if prof1[f].externally_active(lo) {
                let cells = [
                    (prof1[f].externally_active(lo), true),
                    (prof2[fs].externally_active(lo), true),
                    (prof2[f].externally_active(lo), false),
                    (prof1[fs].externally_active(lo), true),
                    (prof1[f].externally_active(hi), true),
                    (prof2[fs].externally_active(hi), true),
                    (prof2[f].externally_active(hi), true),
                    (prof1[fs].externally_active(hi), false),
                ];
                let ok = cells.iter().all(|&(got, want)| got == want);
                if !t_table_ext.record(ok) {
                    fail(
                        t_table_ext.name(),
                        serde_json::json!({
                            "low_end": member_doc(f),
                            "high_end": member_doc(fs),
                            "cells": cells.iter().map(|&(got, _)| got).collect::<Vec<_>>(),
                        }),
                        &mut counterexample,
                    );
                }
                let mut agree = true;
                for e in 0..edge_count {
                    if e == lo || e == hi {
                        continue;
                    }
                    if prof1[f].externally_active(e) != prof1[fs].externally_active(e) {
                        agree = false;
                        break;
                    }
                }
                if !t_claim8p.record(agree) {
                    fail(
                        t_claim8p.name(),
                        serde_json::json!({
                            "low_end": member_doc(f),
                            "high_end": member_doc(fs),
                        }),
                        &mut counterexample,
                    );
                }
            } else {
                t_table_ext.record_vacuous();
                t_claim8p.record_vacuous();
            }
        } else {
            t_table_int.record_vacuous();
            t_table_ext.record_vacuous();
            t_claim8.record_vacuous();
            t_claim8p.record_vacuous();
        }
    }

    // per-hypertree stability facts and one-step implications
    for (fi, f) in basis.iter().enumerate() {
        let mut untouched_ok = true;
        for e in 0..edge_count {
            if e == lo || e == hi {
                continue;
            }
            if prof1[fi].internally_active(e) != prof2[fi].internally_active(e)
                || prof1[fi].externally_active(e) != prof2[fi].externally_active(e)
            {
                untouched_ok = false;
                break;
            }
        }
        if !t_fact1.record(untouched_ok) {
            fail(
                t_fact1.name(),
                serde_json::json!({ "hypertree": f.to_document(ctx.bip()) }),
                &mut counterexample,
            );
        }

        let witness = || serde_json::json!({ "hypertree": f.to_document(ctx.bip()) });

        // the demoted edge keeps inactivity, the promoted edge keeps activity
        check_implication(
            &mut t_claim1,
            !prof1[fi].internally_active(lo),
            !prof2[fi].internally_active(lo),
            &mut counterexample,
            &mut fail,
            &witness,
        );
        check_implication(
            &mut t_claim1,
            !prof1[fi].externally_active(lo),
            !prof2[fi].externally_active(lo),
            &mut counterexample,
            &mut fail,
            &witness,
        );
        check_implication(
            &mut t_claim2,
            prof1[fi].internally_active(hi),
            prof2[fi].internally_active(hi),
            &mut counterexample,
            &mut fail,
            &witness,
        );
        check_implication(
            &mut t_claim2,
            prof1[fi].externally_active(hi),
            prof2[fi].externally_active(hi),
            &mut counterexample,
            &mut fail,
            &witness,
        );

        // when valence can flow hi -> lo, lo's status migrates onto hi
        check_implication(
            &mut t_claim3,
            up_valid[fi] && !prof1[fi].internally_active(lo),
            !prof2[fi].internally_active(hi),
            &mut counterexample,
            &mut fail,
            &witness,
        );
        check_implication(
            &mut t_claim3,
            up_valid[fi] && prof1[fi].externally_active(lo),
            prof2[fi].externally_active(hi),
            &mut counterexample,
            &mut fail,
            &witness,
        );
        // and when it cannot, statuses persist across the swap
        check_implication(
            &mut t_claim4,
            !up_valid[fi] && !prof1[fi].internally_active(hi),
            !prof2[fi].internally_active(hi),
            &mut counterexample,
            &mut fail,
            &witness,
        );
        check_implication(
            &mut t_claim4,
            !up_valid[fi] && prof1[fi].externally_active(lo),
            prof2[fi].externally_active(lo),
            &mut counterexample,
            &mut fail,
            &witness,
        );
        // when valence can flow lo -> hi, lo's status migrates onto hi
        check_implication(
            &mut t_claim5,
            down_valid[fi] && prof1[fi].internally_active(lo),
            prof2[fi].internally_active(hi),
            &mut counterexample,
            &mut fail,
            &witness,
        );
        check_implication(
            &mut t_claim5,
            down_valid[fi] && !prof1[fi].externally_active(lo),
            !prof2[fi].externally_active(hi),
            &mut counterexample,
            &mut fail,
            &witness,
        );
        // and when it cannot, statuses persist across the swap
        check_implication(
            &mut t_claim6,
            !down_valid[fi] && prof1[fi].internally_active(lo),
            prof2[fi].internally_active(lo),
            &mut counterexample,
            &mut fail,
            &witness,
        );
        check_implication(
            &mut t_claim6,
            !down_valid[fi] && !prof1[fi].externally_active(hi),
            !prof2[fi].externally_active(hi),
            &mut counterexample,
            &mut fail,
            &witness,
        );
    }

    let details = serde_json::json!({
        "swap_rank": rank,
        "lower_edge": ctx.bip().hyperedge_id(lo).as_str(),
        "upper_edge": ctx.bip().hyperedge_id(hi).as_str(),
        "fibers": fibers.len(),
        "hypertrees": basis.len(),
    });
    Ok(report_from_tallies(
        vec![
            t_consecutive,
            t_case_pos,
            t_case1,
            t_case2,
            t_case3,
            t_fiber_sum,
            t_fact1,
            t_claim1,
            t_claim2,
            t_claim3,
            t_claim4,
            t_claim5,
            t_claim6,
            t_table_int,
            t_table_ext,
            t_claim8,
            t_claim8p,
        ],
        counterexample,
        None,
        Some(details),
    ))
}

fn check_implication(
    tally: &mut Tally,
    hypothesis: bool,
    conclusion: bool,
    counterexample: &mut Option<Counterexample>,
    fail: &mut impl FnMut(&str, serde_json::Value, &mut Option<Counterexample>),
    witness: &impl Fn() -> serde_json::Value,
) {
    if !hypothesis {
        tally.record_vacuous();
        return;
    }
    if !tally.record(conclusion) {
        fail(tally.name(), witness(), counterexample);
    }
}
