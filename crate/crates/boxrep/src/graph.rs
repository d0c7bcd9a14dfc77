//! Simple graphs, multigraphs and the structural transforms composed by the
//! box-representation constructions: line graph, full subdivision, square,
//! induced subgraph, critical-clique partition, hypercube, greedy coloring.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Undirected simple graph on dense vertex ids `0..n`.
///
/// Edges are stored sorted as `(u, v)` with `u < v`; no loops, no parallel
/// edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// Undirected multigraph on dense vertex ids `0..n`.
///
/// Parallel edges are allowed, loops are not. Each edge keeps a stable index
/// `0..m`; edge order is the construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn normalize_pair(u: usize, v: usize, n: usize) -> Result<(usize, usize)> {
    if u >= n {
        return Err(Error::VertexOutOfRange { vertex: u, n });
    }
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if u == v {
        return Err(Error::LoopEdge(u));
    }
    Ok((u.min(v), u.max(v)))
}

impl Graph {
    /// Builds a simple graph from an edge list. Duplicate pairs are an error,
    /// not silently deduplicated.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            edges.push(normalize_pair(u, v, n)?);
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Non-adjacent distinct pairs `(u, v)` with `u < v`, lexicographic.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.n < 2 || self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// True when the graph is a single cycle: connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3
            && self.edges.len() == self.n
            && (0..self.n).all(|v| self.degree(v) == 2)
            && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}

impl Multigraph {
    /// Builds a multigraph from an edge list, preserving order and
    /// multiplicity. Endpoint order within a pair is normalized to `(u, v)`
    /// with `u < v`.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            edges.push(normalize_pair(u, v, n)?);
        }
        Ok(Multigraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }
}

/// Proper vertex coloring with classes `0..num_colors`, every class nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub color_of: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    /// Checks properness against `g` and that classes `0..num_colors` are all
    /// used.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.color_of.len() != g.n() {
            return Err(Error::VertexCountMismatch {
                left: self.color_of.len(),
                right: g.n(),
            });
        }
        let mut used = vec![false; self.num_colors];
        for (v, &c) in self.color_of.iter().enumerate() {
            if c >= self.num_colors {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.num_colors,
                });
            }
            used[c] = true;
        }
        if !used.iter().all(|&u| u) {
            return Err(Error::InvalidPartition);
        }
        for &(u, v) in g.edges() {
            if self.color_of[u] == self.color_of[v] {
                return Err(Error::ImproperColoring(u, v));
            }
        }
        Ok(())
    }

    /// Color classes as vertex lists, class index ascending, members ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_colors];
        for (v, &c) in self.color_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// Partition of `0..n` into disjoint nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn validate(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for block in &self.blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition);
            }
            for &v in block {
                if v >= n || seen[v] {
                    return Err(Error::InvalidPartition);
                }
                seen[v] = true;
            }
        }
        if seen.iter().all(|&s| s) {
            Ok(())
        } else {
            Err(Error::InvalidPartition)
        }
    }

    /// Block index of every vertex.
    pub fn block_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                out[v] = i;
            }
        }
        out
    }
}

/// Line graph of a multigraph: one vertex per edge of `h`, adjacent when the
/// edges share an endpoint. Parallel edges of `h` share both endpoints and
/// hence become adjacent line vertices.
///
/// Returns the graph together with the edge-index -> line-vertex map (edge j
/// of `h` is line vertex j).
pub fn line_graph(h: &Multigraph) -> (Graph, Vec<usize>) {
    let m = h.edge_count();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (j, &(a, b)) in h.edges().iter().enumerate() {
        incident[a].push(j);
        incident[b].push(j);
    }
    let mut pairs = Vec::new();
    for list in &incident {
        for i in 0..list.len() {
            for k in i + 1..list.len() {
                pairs.push((list[i].min(list[k]), list[i].max(list[k])));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    let g = Graph::from_edge_list(m, &pairs).expect("line graph edges are valid by construction");
    (g, (0..m).collect())
}

/// Fully subdivides `h`: every edge j becomes a path of length two through the
/// fresh vertex `n + j`. Original vertices keep their ids.
///
/// Returns the subdivided graph and the edge-index -> subdivision-vertex map.
pub fn full_subdivision(h: &Graph) -> (Graph, Vec<usize>) {
    let n = h.n();
    let mut pairs = Vec::with_capacity(2 * h.edge_count());
    let mut map = Vec::with_capacity(h.edge_count());
    for (j, &(u, v)) in h.edges().iter().enumerate() {
        let s = n + j;
        pairs.push((u, s));
        pairs.push((v, s));
        map.push(s);
    }
    let g = Graph::from_edge_list(n + h.edge_count(), &pairs)
        .expect("subdivision edges are valid by construction");
    (g, map)
}

/// Subgraph of the square of `g` induced on `s`, relabeled order-preservingly:
/// vertices of the result are `sorted(s)`, and two of them are adjacent iff
/// they are adjacent in `g` or share a common neighbor in `g`.
pub fn square_on(g: &Graph, s: &[usize]) -> Result<Graph> {
    let mut sel = s.to_vec();
    sel.sort_unstable();
    sel.dedup();
    for &v in &sel {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in sel.iter().enumerate() {
        index[v] = i;
    }
    let mut pairs = Vec::new();
    for (i, &u) in sel.iter().enumerate() {
        for (k, &v) in sel.iter().enumerate().skip(i + 1) {
            let direct = g.has_edge(u, v);
            let via = g.neighbors(u).iter().any(|&w| g.has_edge(w, v));
            if direct || via {
                pairs.push((i, k));
            }
        }
    }
    Graph::from_edge_list(sel.len(), &pairs)
}

/// Induced subgraph on `s` with order-preserving relabeling.
///
/// Returns the subgraph and the new -> old vertex map (`sorted(s)`).
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
    let mut sel = s.to_vec();
    sel.sort_unstable();
    sel.dedup();
    for &v in &sel {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in sel.iter().enumerate() {
        index[v] = i;
    }
    let mut pairs = Vec::new();
    for &(u, v) in g.edges() {
        if index[u] != usize::MAX && index[v] != usize::MAX {
            pairs.push((index[u], index[v]));
        }
    }
    Ok((Graph::from_edge_list(sel.len(), &pairs)?, sel))
}

/// First-fit coloring along `order`, which must be a permutation of the
/// vertex set. Deterministic given the order; uses at most `max_degree + 1`
/// colors.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring> {
    let n = g.n();
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(Error::NotAPermutation);
        }
        seen[v] = true;
    }
    let mut color_of = vec![usize::MAX; n];
    let mut num_colors = 0;
    let mut taken = vec![false; n + 1];
    for &v in order {
        for &w in g.neighbors(v) {
            if color_of[w] != usize::MAX {
                taken[color_of[w]] = true;
            }
        }
        let c = (0..).find(|&c| !taken[c]).unwrap();
        color_of[v] = c;
        num_colors = num_colors.max(c + 1);
        for &w in g.neighbors(v) {
            if color_of[w] != usize::MAX {
                taken[color_of[w]] = false;
            }
        }
    }
    Ok(Coloring {
        color_of,
        num_colors,
    })
}

/// Ascending vertex ids; the default order for [`greedy_coloring`].
pub fn natural_order(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Partition into critical cliques: `u` and `v` share a block iff their
/// closed neighborhoods in `g` are equal. Blocks are listed by minimum
/// member, members ascending.
pub fn critical_clique_partition(g: &Graph) -> VertexPartition {
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        let mut closed = g.neighbors(v).to_vec();
        closed.push(v);
        closed.sort_unstable();
        groups.entry(closed).or_default().push(v);
    }
    let mut blocks: Vec<Vec<usize>> = groups.into_values().collect();
    blocks.sort_by_key(|b| b[0]);
    VertexPartition { blocks }
}

/// Quotient of `g` by a partition into critical cliques. Every block must
/// induce a clique with a uniform external neighborhood (equivalently: equal
/// closed neighborhoods). The quotient vertex for block i is representative
/// `min(block i)`; blocks are taken in the order given.
///
/// Returns the quotient graph and the representative of each block.
pub fn quotient_by_partition(g: &Graph, p: &VertexPartition) -> Result<(Graph, Vec<usize>)> {
    p.validate(g.n())?;
    for (i, block) in p.blocks.iter().enumerate() {
        let mut first = g.neighbors(block[0]).to_vec();
        first.push(block[0]);
        first.sort_unstable();
        for &v in &block[1..] {
            let mut closed = g.neighbors(v).to_vec();
            closed.push(v);
            closed.sort_unstable();
            if closed != first {
                return Err(Error::NotACriticalClique { block: i });
            }
        }
    }
    let reps: Vec<usize> = p.blocks.iter().map(|b| b[0]).collect();
    let mut pairs = Vec::new();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if g.has_edge(reps[i], reps[j]) {
                pairs.push((i, j));
            }
        }
    }
    Ok((Graph::from_edge_list(reps.len(), &pairs)?, reps))
}

pub const HYPERCUBE_DIM_CAP: usize = 20;

/// Hypercube graph on `2^d` bit-string vertices, adjacent when they differ in
/// exactly one bit. Has `d * 2^(d-1)` edges.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d > HYPERCUBE_DIM_CAP {
        return Err(Error::DimensionCap {
            dim: d,
            cap: HYPERCUBE_DIM_CAP,
        });
    }
    let n = 1usize << d;
    let mut pairs = Vec::with_capacity(d * (n >> 1).max(1));
    for v in 0..n {
        for b in 0..d {
            if v & (1 << b) == 0 {
                pairs.push((v, v | (1 << b)));
            }
        }
    }
    Graph::from_edge_list(n, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &pairs).unwrap()
    }

    #[test]
    fn from_edge_list_builds_path() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn duplicate_edge_rejected_in_simple_mode() {
        let err = Graph::from_edge_list(2, &[(0, 1), (0, 1)]).unwrap_err();
        assert_eq!(err, Error::DuplicateEdge(0, 1));
        // also when the duplicate is flipped
        let err = Graph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap_err();
        assert_eq!(err, Error::DuplicateEdge(0, 1));
    }

    #[test]
    fn multigraph_keeps_multiplicity() {
        let h = Multigraph::from_edge_list(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.degree(0), 2);
    }

    #[test]
    fn loops_rejected() {
        assert_eq!(
            Graph::from_edge_list(2, &[(1, 1)]).unwrap_err(),
            Error::LoopEdge(1)
        );
        assert_eq!(
            Multigraph::from_edge_list(2, &[(1, 1)]).unwrap_err(),
            Error::LoopEdge(1)
        );
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn line_graph_of_triangle_is_triangle() {
        let h = Multigraph::from_edge_list(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let (g, map) = line_graph(&h);
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(map, vec![0, 1, 2]);
    }

    #[test]
    fn line_graph_of_parallel_pair_is_edge() {
        let h = Multigraph::from_edge_list(2, &[(0, 1), (0, 1)]).unwrap();
        let (g, _) = line_graph(&h);
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn line_graph_of_k4_is_octahedron() {
        // brute-force expectation from the adjacency definition: 6 vertices,
        // 12 edges, 4-regular
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let h = Multigraph::from_edge_list(4, &pairs).unwrap();
        let (g, _) = line_graph(&h);
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 12);
        assert!((0..6).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn subdivision_of_triangle_is_c6() {
        let h = Graph::from_edge_list(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let (g, map) = full_subdivision(&h);
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_cycle());
        assert_eq!(map, vec![3, 4, 5]);
        // subdivision vertex of edge j is adjacent exactly to its endpoints
        assert_eq!(g.neighbors(3), &[0, 1]);
        assert_eq!(g.neighbors(4), &[0, 2]);
        assert_eq!(g.neighbors(5), &[1, 2]);
    }

    #[test]
    fn subdivision_of_edge_is_path() {
        let h = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let (g, _) = full_subdivision(&h);
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn subdivision_counts_for_k4() {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let h = Graph::from_edge_list(4, &pairs).unwrap();
        let (g, _) = full_subdivision(&h);
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn square_on_path_endpoints() {
        let g = path(3);
        let sq = square_on(&g, &[0, 2]).unwrap();
        assert_eq!(sq.edges(), &[(0, 1)]);
        let sq = square_on(&g, &[0, 1, 2]).unwrap();
        assert_eq!(sq.edge_count(), 3);
    }

    #[test]
    fn square_of_edgeless_is_edgeless() {
        let g = Graph::from_edge_list(4, &[]).unwrap();
        let sq = square_on(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(sq.edge_count(), 0);
    }

    #[test]
    fn induced_subgraph_basics() {
        let h = Graph::from_edge_list(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let (c6, _) = full_subdivision(&h);
        // three consecutive vertices of the 6-cycle 0-3-1-5-2-4-0
        let (p, map) = induced_subgraph(&c6, &[0, 3, 1]).unwrap();
        assert_eq!(p.edge_count(), 2);
        assert_eq!(map, vec![0, 1, 3]);
        let (all, _) = induced_subgraph(&c6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(all, c6);
        let (empty, _) = induced_subgraph(&c6, &[]).unwrap();
        assert_eq!(empty.n(), 0);
    }

    #[test]
    fn greedy_on_k4_uses_four_colors() {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = Graph::from_edge_list(4, &pairs).unwrap();
        let col = greedy_coloring(&g, &natural_order(4)).unwrap();
        assert_eq!(col.num_colors, 4);
        col.validate(&g).unwrap();
    }

    #[test]
    fn greedy_on_edgeless_uses_one_color() {
        let g = Graph::from_edge_list(5, &[]).unwrap();
        let col = greedy_coloring(&g, &natural_order(5)).unwrap();
        assert_eq!(col.num_colors, 1);
    }

    #[test]
    fn greedy_on_c5_natural_order() {
        // simulated first-fit: 0,1,0,1,2
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let col = greedy_coloring(&g, &natural_order(5)).unwrap();
        assert_eq!(col.color_of, vec![0, 1, 0, 1, 2]);
        assert_eq!(col.num_colors, 3);
    }

    #[test]
    fn greedy_rejects_non_permutation() {
        let g = path(3);
        assert_eq!(
            greedy_coloring(&g, &[0, 0, 1]).unwrap_err(),
            Error::NotAPermutation
        );
        assert_eq!(
            greedy_coloring(&g, &[0, 1]).unwrap_err(),
            Error::NotAPermutation
        );
    }

    #[test]
    fn critical_cliques_of_k3_p3_k2() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(critical_clique_partition(&k3).blocks, vec![vec![0, 1, 2]]);
        let p3 = path(3);
        assert_eq!(
            critical_clique_partition(&p3).blocks,
            vec![vec![0], vec![1], vec![2]]
        );
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(critical_clique_partition(&k2).blocks, vec![vec![0, 1]]);
    }

    #[test]
    fn quotient_collapses_twins() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let p = critical_clique_partition(&k3);
        let (q, reps) = quotient_by_partition(&k3, &p).unwrap();
        assert_eq!(q.n(), 1);
        assert_eq!(reps, vec![0]);

        let p3 = path(3);
        let p = critical_clique_partition(&p3);
        let (q, _) = quotient_by_partition(&p3, &p).unwrap();
        assert_eq!(q, p3);
    }

    #[test]
    fn quotient_rejects_bad_partition() {
        let p3 = path(3);
        let bad = VertexPartition {
            blocks: vec![vec![0, 1], vec![2]],
        };
        assert!(matches!(
            quotient_by_partition(&p3, &bad),
            Err(Error::NotACriticalClique { block: 0 })
        ));
    }

    #[test]
    fn quotient_no_equal_closed_neighborhoods() {
        // after quotienting, no two vertices are true twins
        let pairs = [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)];
        let g = Graph::from_edge_list(6, &pairs).unwrap();
        let p = critical_clique_partition(&g);
        let (q, _) = quotient_by_partition(&g, &p).unwrap();
        let qp = critical_clique_partition(&q);
        assert!(qp.blocks.iter().all(|b| b.len() == 1));
    }

    #[test]
    fn hypercube_small_cases() {
        assert_eq!(hypercube(0).unwrap().n(), 1);
        let h1 = hypercube(1).unwrap();
        assert_eq!((h1.n(), h1.edge_count()), (2, 1));
        let h3 = hypercube(3).unwrap();
        assert_eq!((h3.n(), h3.edge_count()), (8, 12));
        assert!((0..8).all(|v| h3.degree(v) == 3));
        assert!(matches!(hypercube(21), Err(Error::DimensionCap { .. })));
    }

    #[test]
    fn line_graph_degree_bound() {
        // Delta(L(H)) <= 2 (Delta(H) - 1)
        let h = Multigraph::from_edge_list(5, &[(0, 1), (0, 1), (0, 2), (1, 2), (3, 4)]).unwrap();
        let (g, _) = line_graph(&h);
        assert!(g.max_degree() <= 2 * (h.max_degree() - 1));
    }
}
