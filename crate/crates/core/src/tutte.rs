//! Tutte polynomial of ordinary multigraphs, via two independent routes, and
//! the cross-check tying it to the interior and exterior polynomials of the
//! translated hypergraph.
//!
//! Route one is the classical deletion/contraction recurrence with bridge and
//! loop shortcuts, memoized on a relabeled edge-list key. Route two sums
//! `x^(internal activity) y^(external activity)` over all spanning trees
//! under an edge ordering. For the cross-check on a connected loopless graph
//! with `n` vertices and `m` edges, the interior polynomial equals `T(x, 1)`
//! reversed within degree `n - 1` and the exterior polynomial equals
//! `T(1, y)` reversed within degree `m - n + 1`.

use crate::bipartite::build_bipartite;
use crate::error::{Error, Result};
use crate::graph::{graph_to_hypergraph, Multigraph};
use crate::ordering::EdgeOrdering;
use crate::poly::{IntPolynomial, TuttePolynomial};
use crate::report::{report_from_tallies, Counterexample, Report, Tally};
use crate::unionfind::UnionFind;
use std::collections::HashMap;

fn ensure_plain_connected(g: &Multigraph) -> Result<()> {
    if let Some(edge) = g.edges().iter().find(|e| e.is_loop()) {
        return Err(Error::LoopEdge(edge.id().to_owned()));
    }
    if !g.is_connected() {
        return Err(Error::GraphNotConnected);
    }
    Ok(())
}

/// Classical deletion/contraction. Input must be connected and loopless;
/// loops arising from contraction contribute the usual `y` factor.
pub fn tutte_deletion_contraction(g: &Multigraph) -> Result<TuttePolynomial> {
    ensure_plain_connected(g)?;
    let edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = e.ends();
            (a.min(b) as u32, a.max(b) as u32)
        })
        .collect();
    let mut memo = HashMap::new();
    Ok(tutte_rec(g.vertex_count(), edges, &mut memo))
}

fn tutte_rec(
    nodes: usize,
    mut edges: Vec<(u32, u32)>,
    memo: &mut HashMap<(usize, Vec<(u32, u32)>), TuttePolynomial>,
) -> TuttePolynomial {
    // strip loops; each contributes a factor of y
    let before = edges.len();
    edges.retain(|&(a, b)| a != b);
    let loops = (before - edges.len()) as u32;

    if edges.is_empty() {
        // connected and edgeless: a single node
        return TuttePolynomial::monomial(0, loops);
    }

    let (nodes, edges) = canonical_form(nodes, edges);
    let key = (nodes, edges.clone());
    if let Some(hit) = memo.get(&key) {
        return hit.shifted(0, loops);
    }

    let (a, b) = edges[0];
    let contracted = contract(nodes, &edges, a, b);
    let result = if is_bridge(nodes, &edges, 0) {
        tutte_rec(contracted.0, contracted.1, memo).shifted(1, 0)
    } else {
        let mut deleted = edges.clone();
        deleted.remove(0);
        let mut sum = tutte_rec(nodes, deleted, memo);
        sum.add_assign(&tutte_rec(contracted.0, contracted.1, memo));
        sum
    };
    memo.insert(key, result.clone());
    result.shifted(0, loops)
}

/// Relabels nodes by iterated degree refinement (ties broken by current
/// label) and sorts the edge list. Equal keys imply isomorphic graphs, so
/// memo hits are always sound; the refinement only affects the hit rate.
fn canonical_form(nodes: usize, edges: Vec<(u32, u32)>) -> (usize, Vec<(u32, u32)>) {
    let mut colors: Vec<u64> = vec![0; nodes];
    for &(a, b) in &edges {
        colors[a as usize] += 1;
        colors[b as usize] += 1;
    }
    for _ in 0..nodes {
        let mut signatures: Vec<(u64, Vec<u64>, usize)> = (0..nodes)
            .map(|v| (colors[v], Vec::new(), v))
            .collect();
        for &(a, b) in &edges {
            signatures[a as usize].1.push(colors[b as usize]);
            signatures[b as usize].1.push(colors[a as usize]);
        }
        for sig in &mut signatures {
            sig.1.sort_unstable();
        }
        let mut order: Vec<usize> = (0..nodes).collect();
        order.sort_by(|&x, &y| signatures[x].cmp(&signatures[y]));
        let mut next = vec![0u64; nodes];
        let mut classes = 0u64;
        for (i, &v) in order.iter().enumerate() {
            if i > 0 {
                let prev = order[i - 1];
                if signatures[v].0 != signatures[prev].0 || signatures[v].1 != signatures[prev].1 {
                    classes += 1;
                }
            }
            next[v] = classes;
        }
        let stable = next == colors;
        colors = next;
        if stable {
            break;
        }
    }
    let mut order: Vec<usize> = (0..nodes).collect();
    order.sort_by_key(|&v| (colors[v], v));
    let mut relabel = vec![0u32; nodes];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new as u32;
    }
    let mut out: Vec<(u32, u32)> = edges
        .into_iter()
        .map(|(a, b)| {
            let (a, b) = (relabel[a as usize], relabel[b as usize]);
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort_unstable();
    (nodes, out)
}

fn is_bridge(nodes: usize, edges: &[(u32, u32)], skip: usize) -> bool {
    let mut uf = UnionFind::new(nodes);
    let mut components = nodes;
    for (i, &(a, b)) in edges.iter().enumerate() {
        if i != skip && uf.union(a as usize, b as usize) {
            components -= 1;
        }
    }
    components != 1
}

fn contract(nodes: usize, edges: &[(u32, u32)], a: u32, b: u32) -> (usize, Vec<(u32, u32)>) {
    // merge b into a, compact the labels
    let mut relabel: Vec<u32> = (0..nodes as u32).collect();
    relabel[b as usize] = a;
    let mut compact = vec![u32::MAX; nodes];
    let mut next = 0u32;
    for v in 0..nodes as u32 {
        let target = relabel[v as usize];
        if compact[target as usize] == u32::MAX {
            compact[target as usize] = next;
            next += 1;
        }
    }
    let mut out = Vec::with_capacity(edges.len() - 1);
    for (i, &(x, y)) in edges.iter().enumerate() {
        if i == 0 {
            continue;
        }
        let (x, y) = (
            compact[relabel[x as usize] as usize],
            compact[relabel[y as usize] as usize],
        );
        out.push((x.min(y), x.max(y)));
    }
    (next as usize, out)
}

/// Tutte polynomial as a sum over spanning trees of
/// `x^(internal activity) y^(external activity)` for the given edge
/// ordering; classically independent of the ordering.
pub fn tutte_by_activities(g: &Multigraph, ordering: &EdgeOrdering) -> Result<TuttePolynomial> {
    ensure_plain_connected(g)?;
    if ordering.len() != g.edge_count() {
        return Err(Error::InvalidOrdering);
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let ends: Vec<(usize, usize)> = g.edges().iter().map(|e| e.ends()).collect();

    let mut result = TuttePolynomial::zero();
    for tree in spanning_trees(n, &ends) {
        let in_tree: Vec<bool> = {
            let mut flags = vec![false; m];
            for &e in &tree {
                flags[e] = true;
            }
            flags
        };

        let mut internal = 0u32;
        for &e in &tree {
            // colour the two sides of the cut left by removing e
            let mut uf = UnionFind::new(n);
            for &other in &tree {
                if other != e {
                    uf.union(ends[other].0, ends[other].1);
                }
            }
            let side = uf.find(ends[e].0);
            let mut active = true;
            for g_idx in 0..m {
                if g_idx == e || in_tree[g_idx] || ordering.rank(g_idx) >= ordering.rank(e) {
                    continue;
                }
                let (a, b) = ends[g_idx];
                if (uf.find(a) == side) != (uf.find(b) == side) {
                    active = false;
                    break;
                }
            }
            if active {
                internal += 1;
            }
        }

        let mut external = 0u32;
        for g_idx in 0..m {
            if in_tree[g_idx] {
                continue;
            }
            // walk the tree path between the endpoints of g_idx
            let path = tree_path(n, &ends, &tree, ends[g_idx].0, ends[g_idx].1);
            let active = path
                .iter()
                .all(|&e| ordering.rank(g_idx) < ordering.rank(e));
            if active {
                external += 1;
            }
        }

        result.add_term(internal, external, 1);
    }
    Ok(result)
}

/// All spanning trees of a connected multigraph, as sorted edge-index lists.
fn spanning_trees(n: usize, ends: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n.saturating_sub(1));
    let mut uf = UnionFind::new(n);
    walk_trees(n, ends, 0, n, &mut uf, &mut chosen, &mut out);
    out
}

fn walk_trees(
    n: usize,
    ends: &[(usize, usize)],
    pos: usize,
    components: usize,
    uf: &mut UnionFind,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if components == 1 {
        out.push(chosen.clone());
        return;
    }
    if pos == ends.len() || ends.len() - pos < components - 1 {
        return;
    }
    let (a, b) = ends[pos];
    if uf.find(a) != uf.find(b) {
        // include; clone keeps rewinding simple at these sizes
        let mut with = uf.clone();
        with.union(a, b);
        chosen.push(pos);
        walk_trees(n, ends, pos + 1, components - 1, &mut with, chosen, out);
        chosen.pop();
    }
    walk_trees(n, ends, pos + 1, components, uf, chosen, out);
}

fn tree_path(
    n: usize,
    ends: &[(usize, usize)],
    tree: &[usize],
    from: usize,
    to: usize,
) -> Vec<usize> {
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &e in tree {
        let (a, b) = ends[e];
        adjacency[a].push((b, e));
        adjacency[b].push((a, e));
    }
    let mut parent_edge: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut stack = vec![from];
    let mut seen = vec![false; n];
    seen[from] = true;
    while let Some(v) = stack.pop() {
        if v == to {
            break;
        }
        for &(w, e) in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                parent_edge[w] = Some((v, e));
                stack.push(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = to;
    while v != from {
        let (p, e) = parent_edge[v].expect("tree spans both endpoints");
        path.push(e);
        v = p;
    }
    path
}

/// Cross-checks the two Tutte routes against each other and the reversal
/// identities against the interior and exterior polynomials of the
/// translated hypergraph.
pub fn crosscheck_specialization(g: &Multigraph) -> Result<Report> {
    ensure_plain_connected(g)?;
    let n = g.vertex_count();
    let m = g.edge_count();

    let by_recurrence = tutte_deletion_contraction(g)?;
    let by_activities = tutte_by_activities(g, &EdgeOrdering::document(m))?;

    let hypergraph = graph_to_hypergraph(g)?;
    let bip = build_bipartite(&hypergraph);
    let ordering = EdgeOrdering::document(m);
    let interior = crate::activity::interior_polynomial(&bip, &ordering)?;
    let exterior = crate::activity::exterior_polynomial(&bip, &ordering)?;

    let mut t_dual = Tally::new("tutte-dual-route");
    let mut t_interior = Tally::new("interior-reversal");
    let mut t_exterior = Tally::new("exterior-reversal");
    let mut counterexample = None;

    if !t_dual.record(by_recurrence == by_activities) {
        counterexample = Some(Counterexample::TutteSpecialization {
            graph: g.to_document(),
            check: "tutte-dual-route".to_owned(),
            witness: serde_json::json!({
                "deletion_contraction": by_recurrence.to_document(),
                "activities": by_activities.to_document(),
            }),
        });
    }

    let expected_interior = by_recurrence
        .x_specialization()
        .reversed_within(n - 1)
        .unwrap_or_else(IntPolynomial::zero);
    if !t_interior.record(interior == expected_interior) && counterexample.is_none() {
        counterexample = Some(Counterexample::TutteSpecialization {
            graph: g.to_document(),
            check: "interior-reversal".to_owned(),
            witness: serde_json::json!({
                "interior": interior,
                "reversed_tutte_x": expected_interior,
            }),
        });
    }

    let expected_exterior = by_recurrence
        .y_specialization()
        .reversed_within(m + 1 - n)
        .unwrap_or_else(IntPolynomial::zero);
    if !t_exterior.record(exterior == expected_exterior) && counterexample.is_none() {
        counterexample = Some(Counterexample::TutteSpecialization {
            graph: g.to_document(),
            check: "exterior-reversal".to_owned(),
            witness: serde_json::json!({
                "exterior": exterior,
                "reversed_tutte_y": expected_exterior,
            }),
        });
    }

    let details = serde_json::json!({
        "tutte": by_recurrence.to_document(),
        "interior": interior,
        "exterior": exterior,
    });
    Ok(report_from_tallies(
        vec![t_dual, t_interior, t_exterior],
        counterexample,
        None,
        Some(details),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Multigraph {
        Multigraph::new(
            vec!["v1", "v2", "v3"],
            vec![("a", "v1", "v2"), ("b", "v2", "v3"), ("c", "v1", "v3")],
        )
        .unwrap()
    }

    fn parallel_pair() -> Multigraph {
        Multigraph::new(vec!["v1", "v2"], vec![("p", "v1", "v2"), ("q", "v1", "v2")]).unwrap()
    }

    #[test]
    fn single_edge_is_x() {
        let g = Multigraph::new(vec!["v1", "v2"], vec![("e", "v1", "v2")]).unwrap();
        let t = tutte_deletion_contraction(&g).unwrap();
        assert_eq!(t, TuttePolynomial::monomial(1, 0));
    }

    #[test]
    fn triangle_is_x2_plus_x_plus_y() {
        let t = tutte_deletion_contraction(&triangle()).unwrap();
        assert_eq!(t.coefficient(2, 0), 1);
        assert_eq!(t.coefficient(1, 0), 1);
        assert_eq!(t.coefficient(0, 1), 1);
        assert_eq!(t.eval_ones(), 3);
        let by_act = tutte_by_activities(&triangle(), &EdgeOrdering::document(3)).unwrap();
        assert_eq!(t, by_act);
    }

    #[test]
    fn parallel_pair_is_x_plus_y() {
        let t = tutte_deletion_contraction(&parallel_pair()).unwrap();
        assert_eq!(t.coefficient(1, 0), 1);
        assert_eq!(t.coefficient(0, 1), 1);
        let by_act = tutte_by_activities(&parallel_pair(), &EdgeOrdering::document(2)).unwrap();
        assert_eq!(t, by_act);
    }

    #[test]
    fn path_tree_is_x_squared() {
        let g = Multigraph::new(
            vec!["v1", "v2", "v3"],
            vec![("a", "v1", "v2"), ("b", "v2", "v3")],
        )
        .unwrap();
        let t = tutte_by_activities(&g, &EdgeOrdering::document(2)).unwrap();
        assert_eq!(t, TuttePolynomial::monomial(2, 0));
    }

    #[test]
    fn activity_route_is_ordering_independent_on_k4() {
        let g = Multigraph::new(
            vec!["v1", "v2", "v3", "v4"],
            vec![
                ("e1", "v1", "v2"),
                ("e2", "v1", "v3"),
                ("e3", "v1", "v4"),
                ("e4", "v2", "v3"),
                ("e5", "v2", "v4"),
                ("e6", "v3", "v4"),
            ],
        )
        .unwrap();
        let reference = tutte_deletion_contraction(&g).unwrap();
        assert_eq!(reference.eval_ones(), 16); // Cayley: 4^2 spanning trees
        for by_rank in [
            vec![0, 1, 2, 3, 4, 5],
            vec![5, 4, 3, 2, 1, 0],
            vec![2, 0, 5, 1, 4, 3],
        ] {
            let o = EdgeOrdering::from_ranked_indices(by_rank).unwrap();
            assert_eq!(tutte_by_activities(&g, &o).unwrap(), reference);
        }
    }

    #[test]
    fn crosscheck_triangle_passes() {
        let report = crosscheck_specialization(&triangle()).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn crosscheck_rejects_loops_and_disconnection() {
        let g = Multigraph::new(vec!["v1"], vec![("l", "v1", "v1")]).unwrap();
        assert_eq!(
            crosscheck_specialization(&g).unwrap_err(),
            Error::LoopEdge("l".into())
        );
        let g = Multigraph::new(vec!["v1", "v2"], Vec::<(String, String, String)>::new()).unwrap();
        assert_eq!(
            crosscheck_specialization(&g).unwrap_err(),
            Error::GraphNotConnected
        );
    }
}
