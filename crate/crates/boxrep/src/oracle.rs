//! Exact brute force at desk scale: maximal cliques, interval-graph
//! recognition by clique-ordering search, and exact boxicity via minimum
//! cover of non-edges by interval supergraphs. Chosen for auditability over
//! speed; this module is the ground truth the constructions are tested
//! against.

use crate::error::{Error, Result};
use crate::graph::{full_subdivision, Graph};
use crate::interval::{intersect_graphs, interval_graph_of, IntervalRep};
use crate::suitable::ceil_log2_log2;

pub const MAX_CLIQUE_VERTICES: usize = 32;

/// Size caps for the exact searches. Exceeding a cap is an error, never a
/// silent degradation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    pub max_vertices: usize,
    pub max_non_edges: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_vertices: 12,
            max_non_edges: 20,
        }
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.n()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn bron_kerbosch(adj: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // pivot with the most candidates knocked out
    let pivot = {
        let mut best = 0u32;
        let mut best_count = u32::MAX;
        let mut pool = p | x;
        while pool != 0 {
            let v = pool.trailing_zeros();
            pool &= pool - 1;
            let count = (p & !adj[v as usize]).count_ones();
            if count < best_count {
                best_count = count;
                best = v;
            }
        }
        best
    };
    let mut todo = p & !adj[pivot as usize];
    while todo != 0 {
        let v = todo.trailing_zeros();
        todo &= todo - 1;
        let bit = 1u32 << v;
        bron_kerbosch(adj, r | bit, p & adj[v as usize], x & adj[v as usize], out);
        p &= !bit;
        x |= bit;
    }
}

/// All maximal cliques, each listed once, members ascending, cliques in
/// lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if g.n() > MAX_CLIQUE_VERTICES {
        return Err(Error::OracleCap {
            what: "vertices",
            value: g.n(),
            cap: MAX_CLIQUE_VERTICES,
        });
    }
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let adj = adjacency_masks(g);
    let mut masks = Vec::new();
    let all = if g.n() == 32 {
        u32::MAX
    } else {
        (1u32 << g.n()) - 1
    };
    bron_kerbosch(&adj, 0, all, 0, &mut masks);
    let mut cliques: Vec<Vec<usize>> = masks
        .into_iter()
        .map(|m| (0..g.n()).filter(|&v| m & (1 << v) != 0).collect())
        .collect();
    cliques.sort();
    Ok(cliques)
}

/// Searches for an ordering of the maximal cliques in which every vertex's
/// cliques are consecutive. Returns the clique masks in order, or None.
fn consecutive_clique_order(n: usize, cliques: &[u32]) -> Option<Vec<usize>> {
    let q = cliques.len();
    let mut total = vec![0u32; n];
    for &c in cliques {
        for v in 0..n {
            if c & (1 << v) != 0 {
                total[v] += 1;
            }
        }
    }
    fn rec(
        cliques: &[u32],
        total: &[u32],
        placed: &mut Vec<usize>,
        used: &mut Vec<bool>,
        count: &mut Vec<u32>,
        open: u32,
    ) -> bool {
        if placed.len() == cliques.len() {
            return true;
        }
        for i in 0..cliques.len() {
            if used[i] {
                continue;
            }
            let c = cliques[i];
            // every vertex whose block is begun but unfinished must continue
            if open & !c != 0 {
                continue;
            }
            // no vertex whose block is finished may reappear
            let mut closed_hit = false;
            let mut m = c;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if count[v] == total[v] {
                    closed_hit = true;
                    break;
                }
            }
            if closed_hit {
                continue;
            }
            used[i] = true;
            placed.push(i);
            let mut next_open = open;
            let mut m = c;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                count[v] += 1;
                if count[v] == 1 && count[v] < total[v] {
                    next_open |= 1 << v;
                }
                if count[v] == total[v] {
                    next_open &= !(1 << v);
                }
            }
            if rec(cliques, total, placed, used, count, next_open) {
                return true;
            }
            placed.pop();
            used[i] = false;
            let mut m = c;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                count[v] -= 1;
            }
        }
        false
    }
    let mut placed = Vec::with_capacity(q);
    let mut used = vec![false; q];
    let mut count = vec![0u32; n];
    if rec(cliques, &total, &mut placed, &mut used, &mut count, 0) {
        Some(placed)
    } else {
        None
    }
}

/// Witness that a graph is interval: an ordering of its maximal cliques with
/// every vertex's cliques consecutive, and the representation assigning each
/// vertex the span of its clique positions.
#[derive(Debug, Clone)]
pub struct IntervalWitness {
    pub clique_order: Vec<Vec<usize>>,
    pub rep: IntervalRep,
}

/// Interval recognition by exhaustive clique ordering. `Ok(None)` means the
/// graph is not interval.
pub fn is_interval_graph(g: &Graph) -> Result<Option<IntervalWitness>> {
    let caps = OracleCaps::default();
    if g.n() > caps.max_vertices {
        return Err(Error::OracleCap {
            what: "vertices",
            value: g.n(),
            cap: caps.max_vertices,
        });
    }
    if g.n() == 0 {
        return Ok(Some(IntervalWitness {
            clique_order: Vec::new(),
            rep: IntervalRep::new(Vec::new())?,
        }));
    }
    let cliques = maximal_cliques(g)?;
    // interval graphs are chordal and have at most n maximal cliques
    if cliques.len() > g.n() {
        return Ok(None);
    }
    let masks: Vec<u32> = cliques
        .iter()
        .map(|c| c.iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    let Some(order) = consecutive_clique_order(g.n(), &masks) else {
        return Ok(None);
    };
    let mut intervals = vec![(i64::MAX, i64::MIN); g.n()];
    for (pos, &ci) in order.iter().enumerate() {
        for &v in &cliques[ci] {
            let (l, r) = intervals[v];
            intervals[v] = (l.min(pos as i64), r.max(pos as i64));
        }
    }
    let rep = IntervalRep::new(intervals)?;
    debug_assert_eq!(&interval_graph_of(&rep), g);
    Ok(Some(IntervalWitness {
        clique_order: order.into_iter().map(|i| cliques[i].clone()).collect(),
        rep,
    }))
}

/// Exact boxicity with witnesses: `k` interval supergraphs whose
/// intersection is the input, with `k` certified minimum by exhausted search
/// below it.
#[derive(Debug, Clone)]
pub struct BoxicityCertificate {
    pub k: usize,
    pub witnesses: Vec<Graph>,
    pub reps: Vec<IntervalRep>,
}

/// Exact boxicity by enumerating interval supergraphs (subsets of non-edges
/// added back) and taking an exact minimum cover of the non-edges, each
/// supergraph covering the non-edges it keeps excluded.
///
/// Deterministic: among minimum covers the lexicographically smallest
/// witness sequence is returned, candidates ordered by their added-edge
/// bitmask. Complete and edgeless graphs report boxicity 1.
pub fn exact_boxicity(g: &Graph, caps: &OracleCaps) -> Result<BoxicityCertificate> {
    if g.n() > caps.max_vertices {
        return Err(Error::OracleCap {
            what: "vertices",
            value: g.n(),
            cap: caps.max_vertices,
        });
    }
    let non_edges = g.non_edges();
    if non_edges.len() > caps.max_non_edges {
        return Err(Error::OracleCap {
            what: "non-edges",
            value: non_edges.len(),
            cap: caps.max_non_edges,
        });
    }
    let base_adj = adjacency_masks(g);
    let n = g.n();
    let ne = non_edges.len();
    let full_cover: u32 = if ne == 32 { u32::MAX } else { (1u32 << ne) - 1 };

    let interval_spans = |added: u32| -> Option<()> {
        let mut adj = base_adj.clone();
        for (b, &(u, v)) in non_edges.iter().enumerate() {
            if added & (1 << b) != 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        if n == 0 {
            return Some(());
        }
        let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut masks = Vec::new();
        bron_kerbosch(&adj, 0, all, 0, &mut masks);
        if masks.len() > n {
            return None;
        }
        masks.sort_unstable();
        consecutive_clique_order(n, &masks).map(|_| ())
    };

    // candidates in ascending added-mask order; drop any whose coverage is
    // contained in an earlier candidate's
    let mut kept: Vec<(u32, u32)> = Vec::new();
    for added in 0..=full_cover {
        let covered = !added & full_cover;
        if ne > 0 && covered == 0 {
            continue;
        }
        if kept
            .iter()
            .any(|&(_, cov)| cov & covered == covered)
        {
            continue;
        }
        if interval_spans(added).is_some() {
            kept.push((added, covered));
        }
        if ne == 0 {
            break;
        }
    }

    // minimum cover, iterative deepening; ascending index order makes the
    // first solution the lexicographically smallest one
    let mut suffix_or = vec![0u32; kept.len() + 1];
    for i in (0..kept.len()).rev() {
        suffix_or[i] = suffix_or[i + 1] | kept[i].1;
    }
    fn dfs(
        kept: &[(u32, u32)],
        suffix_or: &[u32],
        start: usize,
        missing: u32,
        left: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if missing == 0 {
            return true;
        }
        if left == 0 {
            return false;
        }
        for i in start..kept.len() {
            if missing & !suffix_or[i] != 0 {
                return false;
            }
            if missing & kept[i].1 == 0 {
                continue;
            }
            chosen.push(i);
            if dfs(kept, suffix_or, i + 1, missing & !kept[i].1, left - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    let mut k = 0;
    loop {
        k += 1;
        chosen.clear();
        if dfs(&kept, &suffix_or, 0, full_cover, k, &mut chosen) {
            break;
        }
        assert!(
            k <= ne.max(1),
            "a cover of single-non-edge supergraphs always exists"
        );
    }

    let mut witnesses = Vec::with_capacity(chosen.len().max(1));
    let mut reps = Vec::with_capacity(chosen.len().max(1));
    let picks: Vec<u32> = if chosen.is_empty() {
        vec![0]
    } else {
        chosen.iter().map(|&i| kept[i].0).collect()
    };
    for added in picks {
        let mut pairs = g.edges().to_vec();
        for (b, &(u, v)) in non_edges.iter().enumerate() {
            if added & (1 << b) != 0 {
                pairs.push((u, v));
            }
        }
        let witness = Graph::from_edge_list(n, &pairs)?;
        let recognized = is_interval_graph(&witness)?.expect("witness was filtered as interval");
        witnesses.push(witness);
        reps.push(recognized.rep);
    }
    // certificate soundness: re-verify before returning
    assert_eq!(
        &intersect_graphs(&witnesses)?,
        g,
        "witness intersection reproduces the input graph"
    );
    for (w, rep) in witnesses.iter().zip(&reps) {
        assert_eq!(&interval_graph_of(rep), w, "witness representation matches");
    }
    Ok(BoxicityCertificate {
        k: witnesses.len(),
        witnesses,
        reps,
    })
}

/// Checks the executable lower bound: the exact boxicity of the fully
/// subdivided complete graph is at least `(ceil(log2 log2 n) + 1) / 2`.
pub fn check_subdivision_lower_bound(n: usize, caps: &OracleCaps) -> Result<bool> {
    if n < 2 {
        return Err(Error::CompleteTooSmall(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let kn = Graph::from_edge_list(n, &pairs)?;
    let (subdivided, _) = full_subdivision(&kn);
    let cert = exact_boxicity(&subdivided, caps)?;
    Ok(2 * cert.k >= ceil_log2_log2(n) as usize + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, pairs: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, pairs).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph(n, &pairs)
    }

    fn octahedron() -> Graph {
        let mut pairs = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if !matches!((u, v), (0, 1) | (2, 3) | (4, 5)) {
                    pairs.push((u, v));
                }
            }
        }
        graph(6, &pairs)
    }

    #[test]
    fn cliques_of_small_graphs() {
        let k3 = graph(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(maximal_cliques(&k3).unwrap(), vec![vec![0, 1, 2]]);
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            maximal_cliques(&p3).unwrap(),
            vec![vec![0, 1], vec![1, 2]]
        );
        let c4 = cycle(4);
        assert_eq!(maximal_cliques(&c4).unwrap().len(), 4);
    }

    #[test]
    fn clique_cap_enforced() {
        let g = graph(33, &[]);
        assert!(matches!(
            maximal_cliques(&g),
            Err(Error::OracleCap { .. })
        ));
    }

    #[test]
    fn interval_recognition() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let w = is_interval_graph(&p4).unwrap().unwrap();
        assert_eq!(&interval_graph_of(&w.rep), &p4);

        assert!(is_interval_graph(&cycle(4)).unwrap().is_none());

        let k5 = graph(
            5,
            &(0..5)
                .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
                .collect::<Vec<_>>(),
        );
        let w = is_interval_graph(&k5).unwrap().unwrap();
        assert_eq!(w.clique_order.len(), 1);
    }

    #[test]
    fn exact_boxicity_reference_values() {
        let caps = OracleCaps::default();
        let k4 = graph(
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        );
        assert_eq!(exact_boxicity(&k4, &caps).unwrap().k, 1);
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(exact_boxicity(&p4, &caps).unwrap().k, 1);
        assert_eq!(exact_boxicity(&cycle(4), &caps).unwrap().k, 2);
        assert_eq!(exact_boxicity(&cycle(6), &caps).unwrap().k, 2);
        assert_eq!(exact_boxicity(&octahedron(), &caps).unwrap().k, 3);
    }

    #[test]
    fn certificate_is_sound() {
        let caps = OracleCaps::default();
        let cert = exact_boxicity(&cycle(6), &caps).unwrap();
        assert_eq!(cert.witnesses.len(), cert.k);
        assert_eq!(
            intersect_graphs(&cert.witnesses).unwrap(),
            cycle(6)
        );
        for (w, rep) in cert.witnesses.iter().zip(&cert.reps) {
            assert_eq!(&interval_graph_of(rep), w);
        }
    }

    #[test]
    fn interval_iff_boxicity_one() {
        let caps = OracleCaps::default();
        for g in [cycle(4), cycle(5), graph(4, &[(0, 1), (1, 2), (2, 3)])] {
            let interval = is_interval_graph(&g).unwrap().is_some();
            let k = exact_boxicity(&g, &caps).unwrap().k;
            assert_eq!(interval, k <= 1);
        }
    }

    #[test]
    fn lower_bound_check() {
        let caps = OracleCaps::default();
        assert!(check_subdivision_lower_bound(2, &caps).unwrap());
        assert!(check_subdivision_lower_bound(3, &caps).unwrap());
        assert!(matches!(
            check_subdivision_lower_bound(10, &caps),
            Err(Error::OracleCap { .. })
        ));
    }

    #[test]
    fn caps_are_enforced() {
        let g = graph(13, &[]);
        assert!(matches!(
            exact_boxicity(&g, &OracleCaps::default()),
            Err(Error::OracleCap {
                what: "vertices",
                ..
            })
        ));
        let sparse = graph(8, &[(0, 1)]);
        assert!(matches!(
            exact_boxicity(&sparse, &OracleCaps::default()),
            Err(Error::OracleCap {
                what: "non-edges",
                ..
            })
        ));
    }

    #[test]
    fn edgeless_and_complete_report_one() {
        let caps = OracleCaps::default();
        let complete = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(exact_boxicity(&complete, &caps).unwrap().k, 1);
        let single = graph(1, &[]);
        assert_eq!(exact_boxicity(&single, &caps).unwrap().k, 1);
        let edgeless = graph(5, &[]);
        assert_eq!(exact_boxicity(&edgeless, &caps).unwrap().k, 1);
    }
}
