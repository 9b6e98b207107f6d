//! Exhaustive property suite for one instance: the subset-rank facts, the
//! two hypertree characterizations, transfer feasibility from both routes,
//! tight-set structure, the exchange implications between hypertree pairs,
//! and agreement of the two enumerators.

use super::InstanceContext;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::hypertree::{
    enumerate_hypertrees_by_transfer, is_hypertree, Hypertree, DEFAULT_TREE_BUDGET,
};
use crate::ordering::EdgeOrdering;
use crate::poly::IntPolynomial;
use crate::report::{report_from_tallies, Counterexample, Report, Tally};
use crate::tightness::{mu_table, polymatroid_feasible, subset_sums};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Cap on the hyperedge count for the quadratic subset loops of the suite.
pub const LEMMA_SUITE_EDGE_BOUND: usize = 8;

/// All orderings are used up to this many hyperedges; beyond that a fixed
/// seeded sample keeps the ordering-dependent lemma affordable.
const ALL_ORDERINGS_UP_TO: usize = 5;
const SAMPLED_ORDERINGS: usize = 20;
const ORDERING_SAMPLE_SEED: u64 = 0;

pub fn verify_lemmas(hypergraph: &Hypergraph) -> Result<Report> {
    verify_lemmas_with_budget(hypergraph, DEFAULT_TREE_BUDGET)
}

pub fn verify_lemmas_with_budget(hypergraph: &Hypergraph, tree_budget: u64) -> Result<Report> {
    let ctx = InstanceContext::with_budget(hypergraph, tree_budget)?;
    verify_lemmas_in(&ctx)
}

pub fn verify_lemmas_in(ctx: &InstanceContext) -> Result<Report> {
    let bip = ctx.bip();
    let ne = bip.hyperedge_count();
    let nv = bip.vertex_count();
    if ne > LEMMA_SUITE_EDGE_BOUND {
        return Err(Error::ExhaustiveBoundExceeded {
            edges: ne,
            bound: LEMMA_SUITE_EDGE_BOUND,
        });
    }
    let basis = ctx.basis();
    let table = ctx.table();
    let mu = mu_table(bip)?;
    let full: usize = (1usize << ne) - 1;

    let mut tallies: Vec<Tally> = Vec::new();
    let mut counterexample: Option<Counterexample> = None;
    let fail = |check: &str, witness: serde_json::Value, ce: &mut Option<Counterexample>| {
        if ce.is_none() {
            *ce = Some(Counterexample::Lemmas {
                hypergraph: ctx.hypergraph().to_document(),
                check: check.to_owned(),
                witness,
            });
        }
    };
    let set_doc = |mask: usize| -> Vec<&str> {
        (0..ne)
            .filter(|e| mask >> e & 1 == 1)
            .map(|e| bip.hyperedge_id(e).as_str())
            .collect()
    };

    // growing a subset never lowers its rank
    let mut t = Tally::new("mu-monotone");
    for sup in 0..=full {
        let mut sub = sup;
        loop {
            if !t.record(mu[sub] <= mu[sup]) {
                fail(
                    t.name(),
                    serde_json::json!({ "subset": set_doc(sub), "superset": set_doc(sup) }),
                    &mut counterexample,
                );
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & sup;
        }
    }
    tallies.push(t);

    let mut t = Tally::new("mu-submodular");
    for a in 0..=full {
        for b in 0..=full {
            if !t.record(mu[a] + mu[b] >= mu[a | b] + mu[a & b]) {
                fail(
                    t.name(),
                    serde_json::json!({ "a": set_doc(a), "b": set_doc(b) }),
                    &mut counterexample,
                );
            }
        }
    }
    tallies.push(t);

    let mut t = Tally::new("mu-full-rank");
    if !t.record(mu[full] == nv as u64 - 1) {
        fail(
            t.name(),
            serde_json::json!({ "mu_full": mu[full], "vertices": nv }),
            &mut counterexample,
        );
    }
    tallies.push(t);

    // every enumerated hypertree obeys the degree, sum, and subset bounds
    let mut t = Tally::new("hypertree-bounds");
    for f in basis {
        let degree_ok = (0..ne).all(|e| (f.value(e) as usize) < bip.degree(e));
        let sum_ok = f.values().iter().map(|&x| x as u64).sum::<u64>() == nv as u64 - 1;
        let sums = subset_sums(f.values());
        let subset_ok = sums.iter().zip(&mu).all(|(&s, &m)| s <= m);
        if !t.record(degree_ok && sum_ok && subset_ok) {
            fail(
                t.name(),
                serde_json::json!({ "hypertree": f.to_document(bip) }),
                &mut counterexample,
            );
        }
    }
    tallies.push(t);

    // candidate grid: all vectors within the degree bounds summing to |V|-1
    let grid = candidate_grid(bip);
    let mut realizable: Vec<Vec<u32>> = Vec::new();
    {
        let mut t_equiv = Tally::new("checker-equivalence");
        let mut t_witness = Tally::new("witness-soundness");
        for g in &grid {
            let witness = is_hypertree(bip, g)?;
            let by_subsets = polymatroid_feasible(g, &mu, nv);
            if !t_equiv.record(witness.is_some() == by_subsets) {
                fail(
                    t_equiv.name(),
                    serde_json::json!({
                        "candidate": g,
                        "realization": witness.is_some(),
                        "subset_route": by_subsets,
                    }),
                    &mut counterexample,
                );
            }
            if let Some(w) = witness {
                realizable.push(g.clone());
                if !t_witness.record(w.realizes(bip, g)) {
                    fail(
                        t_witness.name(),
                        serde_json::json!({ "candidate": g, "witness": w.to_document(bip) }),
                        &mut counterexample,
                    );
                }
            }
        }
        tallies.push(t_equiv);
        tallies.push(t_witness);
    }

    let mut t = Tally::new("grid-matches-enumeration");
    let basis_values: Vec<&[u32]> = basis.iter().map(Hypertree::values).collect();
    let realizable_refs: Vec<&[u32]> = realizable.iter().map(Vec::as_slice).collect();
    if !t.record(basis_values == realizable_refs) {
        fail(
            t.name(),
            serde_json::json!({
                "enumerated": basis.len(),
                "realizable": realizable.len(),
            }),
            &mut counterexample,
        );
    }
    tallies.push(t);

    // a candidate dominated subset-wise by hypertrees is itself a hypertree
    let mut t = Tally::new("dominated-sum-realizability");
    {
        let mut max_sums = vec![0u64; 1 << ne];
        for f in basis {
            for (mask, &s) in subset_sums(f.values()).iter().enumerate() {
                if s > max_sums[mask] {
                    max_sums[mask] = s;
                }
            }
        }
        for g in &grid {
            let sums = subset_sums(g);
            let dominated = (1..=full).all(|mask| sums[mask] <= max_sums[mask]);
            let realizable = is_hypertree(bip, g)?.is_some();
            if !t.record(dominated == realizable) {
                fail(
                    t.name(),
                    serde_json::json!({
                        "candidate": g,
                        "dominated": dominated,
                        "realizable": realizable,
                    }),
                    &mut counterexample,
                );
            }
        }
    }
    tallies.push(t);

    // feasible transfers compose transitively
    let mut t = Tally::new("transfer-transitivity");
    for fi in 0..basis.len() {
        for a in 0..ne {
            for b in 0..ne {
                if b == a || !table.can_transfer(fi, a, b) {
                    continue;
                }
                for c in 0..ne {
                    if c == a || c == b {
                        continue;
                    }
                    if !table.can_transfer(fi, b, c) {
                        t.record_vacuous();
                        continue;
                    }
                    if !t.record(table.can_transfer(fi, a, c)) {
                        fail(
                            t.name(),
                            serde_json::json!({
                                "hypertree": basis[fi].to_document(bip),
                                "chain": [
                                    bip.hyperedge_id(a).as_str(),
                                    bip.hyperedge_id(b).as_str(),
                                    bip.hyperedge_id(c).as_str(),
                                ],
                            }),
                            &mut counterexample,
                        );
                    }
                }
            }
        }
    }
    tallies.push(t);

    // per-hypertree tight masks, shared by the next three checks
    let tight_masks: Vec<Vec<usize>> = basis
        .iter()
        .map(|f| {
            let sums = subset_sums(f.values());
            (0..=full).filter(|&m| sums[m] == mu[m]).collect()
        })
        .collect();

    let mut t = Tally::new("tight-lattice-closure");
    for (fi, masks) in tight_masks.iter().enumerate() {
        let mut is_tight_mask = vec![false; 1 << ne];
        for &m in masks {
            is_tight_mask[m] = true;
        }
        for &a in masks {
            for &b in masks {
                if !t.record(is_tight_mask[a | b] && is_tight_mask[a & b]) {
                    fail(
                        t.name(),
                        serde_json::json!({
                            "hypertree": basis[fi].to_document(bip),
                            "a": set_doc(a),
                            "b": set_doc(b),
                        }),
                        &mut counterexample,
                    );
                }
            }
        }
    }
    tallies.push(t);

    // a nonempty proper subset that is not tight admits an inward transfer
    let mut t = Tally::new("slack-implies-inflow");
    for (fi, f) in basis.iter().enumerate() {
        let sums = subset_sums(f.values());
        for mask in 1..full {
            if sums[mask] == mu[mask] {
                t.record_vacuous();
                continue;
            }
            let outside = !(mask as u64) & full as u64;
            let found = (0..ne)
                .filter(|&b| mask >> b & 1 == 1)
                .any(|b| table.receive_mask(fi, b) & outside != 0);
            if !t.record(found) {
                fail(
                    t.name(),
                    serde_json::json!({
                        "hypertree": f.to_document(bip),
                        "subset": set_doc(mask),
                    }),
                    &mut counterexample,
                );
            }
        }
    }
    tallies.push(t);

    // transfer feasibility agrees between the realization route and the
    // tightness route
    let mut t = Tally::new("transfer-tightness-agreement");
    for (fi, f) in basis.iter().enumerate() {
        for from in 0..ne {
            for to in 0..ne {
                if to == from {
                    continue;
                }
                let by_tightness = f.value(from) != 0
                    && tight_masks[fi]
                        .iter()
                        .all(|&m| m >> to & 1 == 0 || m >> from & 1 == 1);
                if !t.record(table.can_transfer(fi, from, to) == by_tightness) {
                    fail(
                        t.name(),
                        serde_json::json!({
                            "hypertree": f.to_document(bip),
                            "from": bip.hyperedge_id(from).as_str(),
                            "to": bip.hyperedge_id(to).as_str(),
                        }),
                        &mut counterexample,
                    );
                }
            }
        }
    }
    tallies.push(t);

    // hypertree pairs differing on exactly two hyperedges
    let pairs = shift_pairs(basis);

    let mut t_transfer = Tally::new("pair-shift-transfer");
    let mut t_blocked = Tally::new("pair-shift-blocked");
    for &(f1, f2, e1, e2) in &pairs {
        let pair_witness = || {
            serde_json::json!({
                "first": basis[f1].to_document(bip),
                "second": basis[f2].to_document(bip),
                "raised": bip.hyperedge_id(e1).as_str(),
                "lowered": bip.hyperedge_id(e2).as_str(),
            })
        };
        for e in 0..ne {
            if e == e1 || e == e2 {
                continue;
            }
            // outgoing at the lowered edge shifts to the raised edge
            if table.can_transfer(f1, e2, e) {
                if !t_transfer.record(table.can_transfer(f2, e1, e)) {
                    fail(t_transfer.name(), pair_witness(), &mut counterexample);
                }
            } else {
                t_transfer.record_vacuous();
            }
            // incoming into the raised edge shifts to the lowered edge
            if table.can_transfer(f1, e, e1) {
                if !t_transfer.record(table.can_transfer(f2, e, e2)) {
                    fail(t_transfer.name(), pair_witness(), &mut counterexample);
                }
            } else {
                t_transfer.record_vacuous();
            }
            for e_prime in 0..ne {
                if e_prime == e || e_prime == e1 || e_prime == e2 {
                    continue;
                }
                if !table.can_transfer(f1, e, e_prime) && !table.can_transfer(f1, e2, e_prime) {
                    let ok = !table.can_transfer(f2, e, e_prime)
                        && !table.can_transfer(f2, e2, e_prime);
                    if !t_blocked.record(ok) {
                        fail(t_blocked.name(), pair_witness(), &mut counterexample);
                    }
                } else {
                    t_blocked.record_vacuous();
                }
                if !table.can_transfer(f1, e, e1) && !table.can_transfer(f1, e, e_prime) {
                    let ok =
                        !table.can_transfer(f2, e, e1) && !table.can_transfer(f2, e, e_prime);
                    if !t_blocked.record(ok) {
                        fail(t_blocked.name(), pair_witness(), &mut counterexample);
                    }
                } else {
                    t_blocked.record_vacuous();
                }
            }
        }
    }
    tallies.push(t_transfer);
    tallies.push(t_blocked);

    // hyperedges above both shifted coordinates keep their activity status
    let mut t = Tally::new("pair-activity-stability");
    {
        let orderings = if ne <= ALL_ORDERINGS_UP_TO {
            EdgeOrdering::all(ne)
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(ORDERING_SAMPLE_SEED);
            t.set_note(format!(
                "sampled {SAMPLED_ORDERINGS} orderings, seed {ORDERING_SAMPLE_SEED}"
            ));
            (0..SAMPLED_ORDERINGS)
                .map(|_| EdgeOrdering::random(ne, &mut rng))
                .collect()
        };
        for ordering in &orderings {
            let profiles: Vec<_> = (0..basis.len())
                .map(|fi| table.profile(fi, ordering))
                .collect();
            for &(f1, f2, e1, e2) in &pairs {
                let cutoff = ordering.rank(e1).max(ordering.rank(e2));
                for e in 0..ne {
                    if ordering.rank(e) <= cutoff {
                        continue;
                    }
                    let ok = profiles[f1].internally_active(e) == profiles[f2].internally_active(e)
                        && profiles[f1].externally_active(e)
                            == profiles[f2].externally_active(e);
                    if !t.record(ok) {
                        fail(
                            t.name(),
                            serde_json::json!({
                                "first": basis[f1].to_document(bip),
                                "second": basis[f2].to_document(bip),
                                "edge": bip.hyperedge_id(e).as_str(),
                                "order": ordering.labels(bip),
                            }),
                            &mut counterexample,
                        );
                    }
                }
            }
        }
    }
    tallies.push(t);

    // walking single transfers from any seed reaches the whole basis
    let mut t = Tally::new("enumerator-agreement");
    for seed in basis {
        let closure = enumerate_hypertrees_by_transfer(bip, seed)?;
        if !t.record(closure.as_slice() == basis) {
            fail(
                t.name(),
                serde_json::json!({ "seed": seed.to_document(bip) }),
                &mut counterexample,
            );
        }
    }
    tallies.push(t);

    // both polynomials evaluate to the hypertree count at 1 and stay within
    // degree |E| - 1
    let mut t = Tally::new("polynomial-evaluation");
    {
        let ordering = EdgeOrdering::document(ne);
        let (interior, exterior) = crate::activity::polynomial_pair(table, basis.len(), &ordering);
        let count = basis.len() as u64;
        let degree_cap = |p: &IntPolynomial| match p.degree() {
            Some(d) => ne == 0 || d <= ne - 1,
            None => true,
        };
        let ok = interior.eval_one() == count
            && exterior.eval_one() == count
            && degree_cap(&interior)
            && degree_cap(&exterior);
        if !t.record(ok) {
            fail(
                t.name(),
                serde_json::json!({
                    "interior": interior,
                    "exterior": exterior,
                    "hypertrees": count,
                }),
                &mut counterexample,
            );
        }
    }
    tallies.push(t);

    Ok(report_from_tallies(tallies, counterexample, None, None))
}

/// All candidate vectors within the per-edge degree bounds that sum to
/// `|V| - 1`, ascending lexicographically.
fn candidate_grid(bip: &crate::bipartite::BipartiteGraph) -> Vec<Vec<u32>> {
    let ne = bip.hyperedge_count();
    let nv = bip.vertex_count();
    let target = nv as u64 - 1;
    let mut suffix_max = vec![0u64; ne + 1];
    for e in (0..ne).rev() {
        suffix_max[e] = suffix_max[e + 1] + (bip.degree(e) as u64 - 1);
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; ne];
    fn recurse(
        e: usize,
        remaining: u64,
        bip: &crate::bipartite::BipartiteGraph,
        suffix_max: &[u64],
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if e == current.len() {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        if remaining > suffix_max[e] {
            return;
        }
        let cap = (bip.degree(e) as u64 - 1).min(remaining);
        for v in 0..=cap {
            current[e] = v as u32;
            recurse(e + 1, remaining - v, bip, suffix_max, current, out);
        }
        current[e] = 0;
    }
    if ne == 0 {
        if target == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    recurse(0, target, bip, &suffix_max, &mut current, &mut out);
    out
}

/// Ordered basis pairs `(f1, f2)` differing on exactly two coordinates, with
/// `e1` the coordinate where `f2` is larger and `e2` the one where it is
/// smaller.
fn shift_pairs(basis: &[Hypertree]) -> Vec<(usize, usize, usize, usize)> {
    let mut pairs = Vec::new();
    for (i, f1) in basis.iter().enumerate() {
        for (j, f2) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut raised = None;
            let mut lowered = None;
            let mut extra = false;
            for e in 0..f1.len() {
                match f1.value(e).cmp(&f2.value(e)) {
                    std::cmp::Ordering::Less => {
                        if raised.replace(e).is_some() {
                            extra = true;
                            break;
                        }
                    }
                    std::cmp::Ordering::Greater => {
                        if lowered.replace(e).is_some() {
                            extra = true;
                            break;
                        }
                    }
                    std::cmp::Ordering::Equal => {}
                }
            }
            if extra {
                continue;
            }
            if let (Some(e1), Some(e2)) = (raised, lowered) {
                pairs.push((i, j, e1, e2));
            }
        }
    }
    pairs
}
