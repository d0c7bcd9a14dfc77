//! Interval and box representations with closed-interval intersection
//! semantics, the validity verifier, and greedy dimension reduction.
//!
//! All endpoints are exact integers; constructions pre-scale any fractional
//! offsets so that no floating-point comparison happens anywhere.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Closed integer interval `[l, r]` per vertex, defined on all vertices
/// `0..n` of its graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRep {
    intervals: Vec<(i64, i64)>,
}

impl IntervalRep {
    pub fn new(intervals: Vec<(i64, i64)>) -> Result<Self> {
        for &(l, r) in &intervals {
            if l > r {
                return Err(Error::BadInterval(l, r));
            }
        }
        Ok(IntervalRep { intervals })
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn interval(&self, v: usize) -> (i64, i64) {
        self.intervals[v]
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }
}

/// Ordered list of interval representations over one vertex set; dimension k
/// of the box of vertex `v` is `dims[k].interval(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxRep {
    dims: Vec<IntervalRep>,
}

impl BoxRep {
    pub fn new(dims: Vec<IntervalRep>) -> Result<Self> {
        let first = dims.first().ok_or(Error::NoDimensions)?.n();
        for d in &dims {
            if d.n() != first {
                return Err(Error::VertexCountMismatch {
                    left: first,
                    right: d.n(),
                });
            }
        }
        Ok(BoxRep { dims })
    }

    pub fn n(&self) -> usize {
        self.dims[0].n()
    }

    pub fn k(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[IntervalRep] {
        &self.dims
    }

    pub fn dim(&self, i: usize) -> &IntervalRep {
        &self.dims[i]
    }

    /// Boxes of `u` and `v` intersect iff their intervals intersect in every
    /// dimension (closed semantics: a shared endpoint counts).
    pub fn boxes_intersect(&self, u: usize, v: usize) -> bool {
        self.dims.iter().all(|d| {
            let (lu, ru) = d.interval(u);
            let (lv, rv) = d.interval(v);
            lu.max(lv) <= ru.min(rv)
        })
    }
}

/// Outcome of checking a box representation against a target graph.
///
/// `valid` iff all three witness lists are empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    /// Pairs adjacent in the graph whose boxes are disjoint.
    pub missing_edges: Vec<(usize, usize)>,
    /// Pairs non-adjacent in the graph whose boxes intersect.
    pub excess_pairs: Vec<(usize, usize)>,
    /// `(dimension, edge)` pairs where a single dimension fails to be a
    /// supergraph of the target graph.
    pub supergraph_violations: Vec<(usize, (usize, usize))>,
}

/// Intersection graph of one interval representation: `u ~ v` iff the closed
/// intervals intersect. Monotone: enlarging any interval only adds edges.
pub fn interval_graph_of(rep: &IntervalRep) -> Graph {
    let n = rep.n();
    let mut pairs = Vec::new();
    for u in 0..n {
        let (lu, ru) = rep.interval(u);
        for v in u + 1..n {
            let (lv, rv) = rep.interval(v);
            if lu.max(lv) <= ru.min(rv) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).expect("pairwise intersections form a simple graph")
}

/// Edge-intersection of graphs over a common vertex set.
pub fn intersect_graphs(gs: &[Graph]) -> Result<Graph> {
    let first = gs.first().ok_or(Error::EmptyGraphList)?;
    for g in gs {
        if g.n() != first.n() {
            return Err(Error::VertexCountMismatch {
                left: first.n(),
                right: g.n(),
            });
        }
    }
    let pairs: Vec<(usize, usize)> = first
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| gs[1..].iter().all(|g| g.has_edge(u, v)))
        .collect();
    Graph::from_edge_list(first.n(), &pairs)
}

/// Checks that the intersection of the per-dimension interval graphs equals
/// `g`, and additionally flags every dimension that fails to be a supergraph
/// of `g` (the stronger per-dimension obligation every construction carries).
pub fn verify_box_representation(g: &Graph, b: &BoxRep) -> Result<VerifyReport> {
    if b.n() != g.n() {
        return Err(Error::VertexCountMismatch {
            left: g.n(),
            right: b.n(),
        });
    }
    let mut missing = Vec::new();
    let mut excess = Vec::new();
    let mut violations = Vec::new();
    for &(u, v) in g.edges() {
        for (i, d) in b.dims().iter().enumerate() {
            let (lu, ru) = d.interval(u);
            let (lv, rv) = d.interval(v);
            if lu.max(lv) > ru.min(rv) {
                violations.push((i, (u, v)));
            }
        }
        if !b.boxes_intersect(u, v) {
            missing.push((u, v));
        }
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) && b.boxes_intersect(u, v) {
                excess.push((u, v));
            }
        }
    }
    violations.sort_unstable();
    Ok(VerifyReport {
        valid: missing.is_empty() && excess.is_empty() && violations.is_empty(),
        missing_edges: missing,
        excess_pairs: excess,
        supergraph_violations: violations,
    })
}

/// Greedily drops dimensions (ascending index) whose removal keeps the
/// representation valid for `g`. The input must be valid; the output is valid
/// and has at least one dimension.
pub fn reduce_dimensions(g: &Graph, b: &BoxRep) -> Result<BoxRep> {
    if !verify_box_representation(g, b)?.valid {
        return Err(Error::InvalidRepresentation);
    }
    let mut dims = b.dims().to_vec();
    let mut i = 0;
    while i < dims.len() {
        if dims.len() == 1 {
            break;
        }
        let mut candidate = dims.clone();
        candidate.remove(i);
        let trial = BoxRep::new(candidate)?;
        if verify_box_representation(g, &trial)?.valid {
            dims.remove(i);
        } else {
            i += 1;
        }
    }
    BoxRep::new(dims)
}

/// Extends `b` with isolated vertices. The new ids must extend the dense
/// domain exactly (`b.n()..b.n() + t` in any order). In dimension 0 each
/// isolated vertex gets a distinct point strictly beyond every existing
/// endpoint, and every other dimension reuses that same point, so no new
/// intersections arise.
pub fn place_isolated(b: &BoxRep, isolated: &[usize]) -> Result<BoxRep> {
    let n = b.n();
    let mut ids = isolated.to_vec();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != isolated.len() || !ids.iter().enumerate().all(|(i, &v)| v == n + i) {
        if isolated.is_empty() {
            return Ok(b.clone());
        }
        return Err(Error::BadIsolatedIds);
    }
    if isolated.is_empty() {
        return Ok(b.clone());
    }
    let far = b
        .dims()
        .iter()
        .flat_map(|d| d.intervals().iter())
        .map(|&(_, r)| r)
        .max()
        .unwrap_or(0);
    let mut dims = Vec::with_capacity(b.k());
    for d in b.dims() {
        let mut intervals = d.intervals().to_vec();
        for t in 0..ids.len() {
            let p = far + 1 + t as i64;
            intervals.push((p, p));
        }
        dims.push(IntervalRep::new(intervals)?);
    }
    BoxRep::new(dims)
}

/// Relabels a representation: `map[new_id] = old_id`.
pub fn relabel(b: &BoxRep, map: &[usize]) -> Result<BoxRep> {
    let mut dims = Vec::with_capacity(b.k());
    for d in b.dims() {
        let mut intervals = Vec::with_capacity(map.len());
        for &old in map {
            if old >= d.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: old,
                    n: d.n(),
                });
            }
            intervals.push(d.interval(old));
        }
        dims.push(IntervalRep::new(intervals)?);
    }
    BoxRep::new(dims)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(iv: &[(i64, i64)]) -> IntervalRep {
        IntervalRep::new(iv.to_vec()).unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn interval_graph_basic() {
        let g = interval_graph_of(&rep(&[(0, 2), (1, 3), (4, 5)]));
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn shared_endpoint_counts_as_intersection() {
        let g = interval_graph_of(&rep(&[(0, 1), (1, 2)]));
        assert_eq!(g.edges(), &[(0, 1)]);
        let g = interval_graph_of(&rep(&[(0, 0), (1, 1)]));
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn bad_interval_rejected() {
        assert_eq!(
            IntervalRep::new(vec![(2, 1)]).unwrap_err(),
            Error::BadInterval(2, 1)
        );
    }

    #[test]
    fn intersect_graphs_cases() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(intersect_graphs(&[k3.clone(), k3.clone()]).unwrap(), k3);
        assert_eq!(intersect_graphs(&[k3.clone(), p3()]).unwrap(), p3());
        assert_eq!(intersect_graphs(&[p3()]).unwrap(), p3());
        assert_eq!(intersect_graphs(&[]).unwrap_err(), Error::EmptyGraphList);
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            intersect_graphs(&[k3, k2]),
            Err(Error::VertexCountMismatch { .. })
        ));
    }

    #[test]
    fn verify_valid_one_dim_rep() {
        let b = BoxRep::new(vec![rep(&[(0, 1), (1, 2), (2, 3)])]).unwrap();
        let report = verify_box_representation(&p3(), &b).unwrap();
        assert!(report.valid);
    }

    #[test]
    fn verify_reports_excess_pair() {
        // end vertices overlap in every dimension
        let b = BoxRep::new(vec![rep(&[(0, 2), (1, 3), (2, 4)])]).unwrap();
        let report = verify_box_representation(&p3(), &b).unwrap();
        assert!(!report.valid);
        assert_eq!(report.excess_pairs, vec![(0, 2)]);
        assert!(report.missing_edges.is_empty());
    }

    #[test]
    fn verify_reports_missing_edge_and_violation() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let b = BoxRep::new(vec![rep(&[(0, 1), (3, 4)])]).unwrap();
        let report = verify_box_representation(&k2, &b).unwrap();
        assert!(!report.valid);
        assert_eq!(report.missing_edges, vec![(0, 1)]);
        assert_eq!(report.supergraph_violations, vec![(0, (0, 1))]);
    }

    #[test]
    fn verify_domain_mismatch() {
        let b = BoxRep::new(vec![rep(&[(0, 1), (1, 2)])]).unwrap();
        assert!(matches!(
            verify_box_representation(&p3(), &b),
            Err(Error::VertexCountMismatch { .. })
        ));
    }

    #[test]
    fn reduce_drops_universal_dimension() {
        let good = rep(&[(0, 1), (1, 2), (2, 3)]);
        let universal = rep(&[(0, 9), (0, 9), (0, 9)]);
        let b = BoxRep::new(vec![universal, good]).unwrap();
        let reduced = reduce_dimensions(&p3(), &b).unwrap();
        assert_eq!(reduced.k(), 1);
        assert!(verify_box_representation(&p3(), &reduced).unwrap().valid);
    }

    #[test]
    fn reduce_clique_rep_to_one_dim() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let d = rep(&[(0, 1), (0, 1), (0, 1)]);
        let b = BoxRep::new(vec![d.clone(), d.clone(), d]).unwrap();
        assert_eq!(reduce_dimensions(&k3, &b).unwrap().k(), 1);
    }

    #[test]
    fn reduce_keeps_minimal_rep() {
        let b = BoxRep::new(vec![rep(&[(0, 1), (1, 2), (2, 3)])]).unwrap();
        assert_eq!(reduce_dimensions(&p3(), &b).unwrap(), b);
    }

    #[test]
    fn reduce_rejects_invalid_input() {
        let b = BoxRep::new(vec![rep(&[(0, 0), (2, 2), (4, 4)])]).unwrap();
        assert_eq!(
            reduce_dimensions(&p3(), &b).unwrap_err(),
            Error::InvalidRepresentation
        );
    }

    #[test]
    fn place_isolated_extends_without_intersections() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let b = BoxRep::new(vec![rep(&[(0, 1), (1, 2)])]).unwrap();
        let ext = place_isolated(&b, &[2]).unwrap();
        assert_eq!(ext.n(), 3);
        let g3 = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(verify_box_representation(&g3, &ext).unwrap().valid);
        drop(k2);
    }

    #[test]
    fn place_isolated_empty_is_identity() {
        let b = BoxRep::new(vec![rep(&[(0, 1), (1, 2)])]).unwrap();
        assert_eq!(place_isolated(&b, &[]).unwrap(), b);
    }

    #[test]
    fn place_isolated_mutually_disjoint() {
        let d1 = rep(&[(0, 5), (2, 7)]);
        let d2 = rep(&[(1, 4), (0, 9)]);
        let b = BoxRep::new(vec![d1, d2]).unwrap();
        let ext = place_isolated(&b, &[2, 3]).unwrap();
        assert!(!ext.boxes_intersect(2, 3));
        assert!(!ext.boxes_intersect(0, 2));
        assert!(!ext.boxes_intersect(1, 3));
    }

    #[test]
    fn place_isolated_rejects_sparse_ids() {
        let b = BoxRep::new(vec![rep(&[(0, 1), (1, 2)])]).unwrap();
        assert_eq!(
            place_isolated(&b, &[4]).unwrap_err(),
            Error::BadIsolatedIds
        );
    }
}
