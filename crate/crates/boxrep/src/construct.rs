//! Constructive box representations: fully subdivided complete graphs,
//! fully subdivided graphs from a proper coloring, the maximum-degree
//! dispatch, clique-side doubling, the degree-2 bipartite pipeline, the
//! critical-clique lift, and the full line-graph pipeline.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{
    critical_clique_partition, full_subdivision, greedy_coloring, line_graph, natural_order,
    quotient_by_partition, square_on, Coloring, Graph, Multigraph, VertexPartition,
};
use crate::interval::{
    place_isolated, relabel, verify_box_representation, BoxRep, IntervalRep,
};
use crate::suitable::build_simply_3_suitable;

/// A box representation of a fully subdivided graph together with the
/// bookkeeping of how many dimensions came from where.
#[derive(Debug, Clone)]
pub struct SubdivisionRep {
    /// The fully subdivided graph the representation is for.
    pub graph: Graph,
    pub rep: BoxRep,
    /// Size of the simply 3-suitable family used, when one was used (the
    /// direct cycle representation does not need one).
    pub family_size: Option<usize>,
    /// Number of color classes consumed, for the coloring-based builder.
    pub colors_used: Option<usize>,
}

fn complete_graph(n: usize) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &pairs).expect("complete graph edges are valid")
}

/// Representation of `full_subdivision(K_n)` in `ceil(log2 log2 n) + 2`
/// dimensions (2 dimensions at n = 2).
///
/// Dimensions 1..k place every original vertex on its position in the i-th
/// family member and stretch each subdivision vertex between its two
/// endpoints' positions; the final dimension separates subdivision vertices
/// by edge index while original vertices span everything.
pub fn boxrep_subdivided_complete(n: usize) -> Result<SubdivisionRep> {
    if n < 2 {
        return Err(Error::CompleteTooSmall(n));
    }
    let kn = complete_graph(n);
    let (graph, _) = full_subdivision(&kn);
    let family = build_simply_3_suitable(n)?;
    let m = kn.edge_count();
    let mut dims = Vec::with_capacity(family.len() + 1);
    for sigma in family.perms() {
        let mut intervals = Vec::with_capacity(graph.n());
        for v in 0..n {
            let p = sigma.position(v + 1) as i64;
            intervals.push((p, p));
        }
        for &(a, b) in kn.edges() {
            let pa = sigma.position(a + 1) as i64;
            let pb = sigma.position(b + 1) as i64;
            intervals.push((pa.min(pb), pa.max(pb)));
        }
        dims.push(IntervalRep::new(intervals)?);
    }
    let mut last = vec![(1i64, m as i64); n];
    for j in 0..m {
        last.push((j as i64 + 1, j as i64 + 1));
    }
    dims.push(IntervalRep::new(last)?);
    Ok(SubdivisionRep {
        graph,
        rep: BoxRep::new(dims)?,
        family_size: Some(family.len()),
        colors_used: None,
    })
}

/// Per-vertex value `position(class) * c_max + rank`, the integer scaling of
/// "class position plus fractional within-class offset". Order-preserving,
/// so the intersection pattern matches the fractional original.
fn class_value(position: usize, rank: usize, c_max: usize) -> i64 {
    (position * c_max + rank) as i64
}

/// Representation of `full_subdivision(h)` in `k + 2` dimensions, where `k`
/// is the suitable-family size for the number of colors of `col`.
///
/// Dimensions 1..k order vertices by class position (ascending), dimension
/// k+1 separates subdivision vertices by edge index, and dimension k+2
/// repeats the last family member with the class order reversed, which
/// resolves the within-class comparisons the forward dimensions leave open.
pub fn boxrep_fully_subdivided(h: &Graph, col: &Coloring) -> Result<SubdivisionRep> {
    col.validate(h)?;
    if h.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let c = col.num_colors;
    let classes = col.classes();
    let c_max = classes.iter().map(Vec::len).max().unwrap_or(1);
    let mut rank = vec![0usize; h.n()];
    for class in &classes {
        for (q, &v) in class.iter().enumerate() {
            rank[v] = q;
        }
    }
    let family = build_simply_3_suitable(c)?;
    let k = family.len();
    let (graph, _) = full_subdivision(h);
    let m = h.edge_count();

    let dim_from_values = |value: &dyn Fn(usize) -> i64| -> Result<IntervalRep> {
        let mut intervals = Vec::with_capacity(graph.n());
        for v in 0..h.n() {
            intervals.push((value(v), value(v)));
        }
        for &(a, b) in h.edges() {
            let (va, vb) = (value(a), value(b));
            intervals.push((va.min(vb), va.max(vb)));
        }
        IntervalRep::new(intervals)
    };

    let mut dims = Vec::with_capacity(k + 2);
    for sigma in family.perms() {
        let value = |v: usize| class_value(sigma.position(col.color_of[v] + 1), rank[v], c_max);
        dims.push(dim_from_values(&value)?);
    }
    let mut edge_dim = vec![(1i64, m as i64); h.n()];
    for j in 0..m {
        edge_dim.push((j as i64 + 1, j as i64 + 1));
    }
    dims.push(IntervalRep::new(edge_dim)?);
    let last = &family.perms()[k - 1];
    let value = |v: usize| {
        class_value(
            (c + 1) - last.position(col.color_of[v] + 1),
            rank[v],
            c_max,
        )
    };
    dims.push(dim_from_values(&value)?);

    Ok(SubdivisionRep {
        graph,
        rep: BoxRep::new(dims)?,
        family_size: Some(k),
        colors_used: Some(c),
    })
}

/// Vertices of a single cycle in traversal order, starting at vertex 0 and
/// moving towards its smaller neighbor.
fn cycle_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut prev = usize::MAX;
    let mut at = 0usize;
    loop {
        order.push(at);
        let next = g
            .neighbors(at)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("cycle vertices have two neighbors");
        prev = at;
        at = next;
        if at == 0 {
            break;
        }
    }
    order
}

/// Two-dimensional staircase representation of a cycle given in traversal
/// order: each dimension cuts the cycle open as a path and makes one end
/// vertex universal.
fn cycle_boxrep(order: &[usize]) -> Result<BoxRep> {
    let n = order.len() as i64;
    let mut d1 = vec![(0i64, 0i64); order.len()];
    let mut d2 = vec![(0i64, 0i64); order.len()];
    for (j, &v) in order.iter().enumerate() {
        let j = j as i64;
        d1[v] = if j == n - 1 { (0, n - 1) } else { (j, j + 1) };
        d2[v] = if j == 0 { (0, n - 1) } else { (j - 1, j) };
    }
    BoxRep::new(vec![IntervalRep::new(d1)?, IntervalRep::new(d2)?])
}

/// Builds a representation of `full_subdivision(h)` choosing the branch by
/// the shape of `h`: complete graphs use the suitable-family construction
/// directly, odd cycles subdivide to an even cycle with a 2-dimensional
/// representation, and everything else greedily colors `h` first.
pub fn boxrep_subdivision_auto(h: &Graph) -> Result<SubdivisionRep> {
    if h.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    if h.is_complete() {
        return boxrep_subdivided_complete(h.n());
    }
    if h.is_cycle() && h.n() % 2 == 1 {
        let (graph, _) = full_subdivision(h);
        let order = cycle_order(&graph);
        let rep = cycle_boxrep(&order)?;
        return Ok(SubdivisionRep {
            graph,
            rep,
            family_size: None,
            colors_used: None,
        });
    }
    let col = greedy_coloring(h, &natural_order(h.n()))?;
    boxrep_fully_subdivided(h, &col)
}

/// Doubles every dimension of a representation of `g` so that the result
/// represents `g` plus all edges inside `a_side`: per input dimension, one
/// copy stretches every `a_side` interval left to the common minimum left
/// endpoint, the other stretches right to the common maximum right endpoint.
pub fn clique_side_doubling(g: &Graph, b_rep: &BoxRep, a_side: &[usize]) -> Result<BoxRep> {
    let mut a = a_side.to_vec();
    a.sort_unstable();
    a.dedup();
    for &v in &a {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    if !verify_box_representation(g, b_rep)?.valid {
        return Err(Error::InvalidRepresentation);
    }
    let mut in_a = vec![false; g.n()];
    for &v in &a {
        in_a[v] = true;
    }
    let mut dims = Vec::with_capacity(2 * b_rep.k());
    for d in b_rep.dims() {
        if a.is_empty() {
            dims.push(d.clone());
            dims.push(d.clone());
            continue;
        }
        let s = a.iter().map(|&v| d.interval(v).0).min().unwrap();
        let t = a.iter().map(|&v| d.interval(v).1).max().unwrap();
        let left: Vec<(i64, i64)> = (0..g.n())
            .map(|v| {
                let (l, r) = d.interval(v);
                if in_a[v] {
                    (s, r)
                } else {
                    (l, r)
                }
            })
            .collect();
        let right: Vec<(i64, i64)> = (0..g.n())
            .map(|v| {
                let (l, r) = d.interval(v);
                if in_a[v] {
                    (l, t)
                } else {
                    (l, r)
                }
            })
            .collect();
        dims.push(IntervalRep::new(left)?);
        dims.push(IntervalRep::new(right)?);
    }
    BoxRep::new(dims)
}

/// Gives every vertex the box of its block's representative. `p` must be the
/// critical-clique partition of `g` and `cc_rep` a valid representation of
/// the quotient; the output is valid for `g`.
pub fn lift_critical_clique_rep(
    g: &Graph,
    p: &VertexPartition,
    cc_rep: &BoxRep,
) -> Result<BoxRep> {
    let (quotient, _) = quotient_by_partition(g, p)?;
    if !verify_box_representation(&quotient, cc_rep)?.valid {
        return Err(Error::InvalidRepresentation);
    }
    let block_of = p.block_of(g.n());
    relabel(cc_rep, &block_of)
}

/// Interval representation of the split graph in which `clique_side` is a
/// clique adjacent to everything and the remaining vertices are pairwise
/// non-adjacent: clique vertices span `[0, n+1]`, the j-th remaining vertex
/// (1-based) sits at the point `j + 1`.
pub fn build_universal_split_interval(n: usize, clique_side: &[usize]) -> Result<IntervalRep> {
    let mut clique = vec![false; n];
    for &v in clique_side {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        clique[v] = true;
    }
    let mut intervals = vec![(0i64, 0i64); n];
    let mut j = 0i64;
    for v in 0..n {
        if clique[v] {
            intervals[v] = (0, n as i64 + 1);
        } else {
            j += 1;
            intervals[v] = (j + 1, j + 1);
        }
    }
    IntervalRep::new(intervals)
}

/// Representation of a bipartite graph whose `y_side` vertices all have
/// degree at most 2 and pairwise distinct neighborhoods.
///
/// Degree-1 `y` vertices get a pendant partner, degree-0 ones are set aside;
/// what remains is a full subdivision of the square over the `x` side, which
/// the subdivision machinery represents. The result is restricted back and
/// the set-aside vertices are re-placed as isolated points.
pub fn boxrep_degree2_bipartite(gb: &Graph, x_side: &[usize], y_side: &[usize]) -> Result<BoxRep> {
    let n = gb.n();
    let mut side = vec![u8::MAX; n];
    for &v in x_side {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        side[v] = 0;
    }
    for &v in y_side {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if side[v] == 0 {
            return Err(Error::NotAPartitionIntoSides);
        }
        side[v] = 1;
    }
    if side.iter().any(|&s| s == u8::MAX) {
        return Err(Error::NotAPartitionIntoSides);
    }
    for &(u, v) in gb.edges() {
        if side[u] == side[v] {
            return Err(Error::SideNotIndependent(u, v));
        }
    }
    let mut ys: Vec<usize> = y_side.to_vec();
    ys.sort_unstable();
    ys.dedup();
    for &y in &ys {
        if gb.degree(y) > 2 {
            return Err(Error::DegreeHypothesis {
                vertex: y,
                degree: gb.degree(y),
            });
        }
    }
    for i in 0..ys.len() {
        for j in i + 1..ys.len() {
            if gb.neighbors(ys[i]) == gb.neighbors(ys[j]) {
                return Err(Error::DuplicateNeighborhoods(ys[i], ys[j]));
            }
        }
    }

    if gb.max_degree() <= 1 {
        // disjoint edges and isolated vertices are an interval graph
        let mut intervals = vec![(0i64, 0i64); n];
        for (j, &(u, v)) in gb.edges().iter().enumerate() {
            intervals[u] = (j as i64, j as i64);
            intervals[v] = (j as i64, j as i64);
        }
        let mut far = gb.edge_count() as i64;
        for v in 0..n {
            if gb.degree(v) == 0 {
                intervals[v] = (far, far);
                far += 1;
            }
        }
        return BoxRep::new(vec![IntervalRep::new(intervals)?]);
    }

    let isolated: Vec<usize> = ys.iter().copied().filter(|&y| gb.degree(y) == 0).collect();
    let kept: Vec<usize> = (0..n).filter(|v| !isolated.contains(v)).collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        new_id[v] = i;
    }
    let pendant_targets: Vec<usize> = ys
        .iter()
        .copied()
        .filter(|&y| gb.degree(y) == 1)
        .collect();
    let total = kept.len() + pendant_targets.len();
    let mut pairs: Vec<(usize, usize)> = gb
        .edges()
        .iter()
        .map(|&(u, v)| (new_id[u], new_id[v]))
        .collect();
    let mut x_prime: Vec<usize> = x_side.iter().map(|&v| new_id[v]).collect();
    for (t, &y) in pendant_targets.iter().enumerate() {
        let pendant = kept.len() + t;
        pairs.push((new_id[y], pendant));
        x_prime.push(pendant);
    }
    let g_prime = Graph::from_edge_list(total, &pairs)?;
    x_prime.sort_unstable();

    let g_second = square_on(&g_prime, &x_prime)?;
    let (subdivided, sub_vertex_of_edge) = full_subdivision(&g_second);

    // explicit isomorphism subdivided -> g_prime: original i -> x_prime[i],
    // subdivision vertex of edge (a, b) -> the unique y with exactly that
    // neighborhood
    let mut y_of_pair: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for v in 0..total {
        if v < kept.len() && side[kept[v]] == 1 && g_prime.degree(v) > 0 {
            let nb = g_prime.neighbors(v);
            assert_eq!(nb.len(), 2, "pendant step leaves every kept y at degree 2");
            y_of_pair.insert((nb[0], nb[1]), v);
        }
    }
    assert_eq!(
        y_of_pair.len(),
        g_second.edge_count(),
        "square edges correspond to y vertices one-to-one"
    );
    let mut to_g_prime = vec![usize::MAX; subdivided.n()];
    for (i, &x) in x_prime.iter().enumerate() {
        to_g_prime[i] = x;
    }
    for (j, &(a, b)) in g_second.edges().iter().enumerate() {
        let pair = (x_prime[a], x_prime[b]);
        to_g_prime[sub_vertex_of_edge[j]] = *y_of_pair
            .get(&pair)
            .expect("every square edge is witnessed by a y vertex");
    }
    let relabeled: BTreeSet<(usize, usize)> = subdivided
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (to_g_prime[u], to_g_prime[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    let original: BTreeSet<(usize, usize)> = g_prime.edges().iter().copied().collect();
    assert_eq!(
        relabeled, original,
        "the subdivision of the square is isomorphic to the pendant-augmented graph"
    );

    let sub_rep = boxrep_subdivision_auto(&g_second)?;
    // g_prime id -> subdivided id
    let mut from_g_prime = vec![usize::MAX; total];
    for (sub_id, &gp_id) in to_g_prime.iter().enumerate() {
        from_g_prime[gp_id] = sub_id;
    }
    let rep_g_prime = relabel(&sub_rep.rep, &from_g_prime)?;
    // drop the pendants (they occupy the trailing ids of g_prime)
    let rep_kept = relabel(&rep_g_prime, &(0..kept.len()).collect::<Vec<_>>())?;
    let appended = place_isolated(
        &rep_kept,
        &(kept.len()..kept.len() + isolated.len()).collect::<Vec<_>>(),
    )?;
    // back to the original vertex order of gb
    let mut final_map = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        final_map[v] = i;
    }
    for (i, &v) in isolated.iter().enumerate() {
        final_map[v] = kept.len() + i;
    }
    let map: Vec<usize> = (0..n).map(|v| final_map[v]).collect();
    relabel(&appended, &map)
}

/// One color class worth of the line-graph pipeline, kept for diagnostics
/// and tests.
#[derive(Debug, Clone)]
pub struct ClassStage {
    pub class_index: usize,
    /// The split graph `G_i`: the line graph plus a clique on the complement
    /// of class i.
    pub split_graph: Graph,
    pub partition: VertexPartition,
    /// Critical-clique quotient of the split graph.
    pub quotient: Graph,
    /// Quotient vertices on the independent side.
    pub x_side: Vec<usize>,
    /// Quotient vertices on the (de-cliqued) clique side.
    pub y_side: Vec<usize>,
    /// The bipartite graph `H_i`: the quotient with the clique side made
    /// independent.
    pub bipartite: Graph,
    pub bipartite_dims: usize,
    pub doubled_dims: usize,
}

/// Stage-by-stage record of the line-graph construction.
#[derive(Debug, Clone)]
pub struct SplitDecomposition {
    pub coloring: Option<Coloring>,
    pub classes: Vec<ClassStage>,
    /// Clique side of the final universal split dimension.
    pub universal_clique_side: Option<Vec<usize>>,
    /// Set when the line graph was complete and got the one-dimension
    /// shortcut.
    pub complete_shortcut: bool,
}

impl SplitDecomposition {
    /// Plain-text diagnostic dump, one section per color class.
    pub fn dump(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        if self.complete_shortcut {
            out.push_str("complete line graph: single-dimension representation\n");
            return out;
        }
        if let Some(col) = &self.coloring {
            writeln!(out, "colors used: {}", col.num_colors).unwrap();
        }
        for stage in &self.classes {
            writeln!(out, "class {}", stage.class_index).unwrap();
            writeln!(
                out,
                "  split graph: {} vertices, {} edges",
                stage.split_graph.n(),
                stage.split_graph.edge_count()
            )
            .unwrap();
            writeln!(
                out,
                "  critical cliques: {} blocks; quotient {} vertices, {} edges",
                stage.partition.blocks.len(),
                stage.quotient.n(),
                stage.quotient.edge_count()
            )
            .unwrap();
            writeln!(
                out,
                "  sides: |X| = {}, |Y| = {}; bipartite edges: {}",
                stage.x_side.len(),
                stage.y_side.len(),
                stage.bipartite.edge_count()
            )
            .unwrap();
            writeln!(
                out,
                "  dims: {} from the degree-2 pipeline, {} after doubling",
                stage.bipartite_dims, stage.doubled_dims
            )
            .unwrap();
        }
        if let Some(clique) = &self.universal_clique_side {
            writeln!(out, "universal dimension clique side: {} vertices", clique.len()).unwrap();
        }
        out
    }
}

/// Output of the line-graph pipeline.
#[derive(Debug, Clone)]
pub struct LineGraphRep {
    pub graph: Graph,
    pub rep: BoxRep,
    pub decomposition: SplitDecomposition,
}

fn add_clique(g: &Graph, members: &[usize]) -> Result<Graph> {
    let mut pairs: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            pairs.insert((u.min(v), u.max(v)));
        }
    }
    Graph::from_edge_list(g.n(), &pairs.into_iter().collect::<Vec<_>>())
}

/// Box representation of the line graph of a multigraph.
///
/// Complete line graphs collapse to one dimension. Otherwise the line graph
/// is greedily colored with c classes; each of the first c-1 classes
/// contributes a split graph (clique on the class complement), reduced by
/// critical cliques, represented through the degree-2 bipartite pipeline and
/// doubled back, then lifted; one final dimension handles the last class via
/// the universal split graph.
pub fn boxrep_line_graph(h: &Multigraph) -> Result<LineGraphRep> {
    if h.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let (g, _) = line_graph(h);
    if g.is_complete() {
        let dim = IntervalRep::new(vec![(0, 0); g.n()])?;
        return Ok(LineGraphRep {
            graph: g,
            rep: BoxRep::new(vec![dim])?,
            decomposition: SplitDecomposition {
                coloring: None,
                classes: Vec::new(),
                universal_clique_side: None,
                complete_shortcut: true,
            },
        });
    }
    let col = greedy_coloring(&g, &natural_order(g.n()))?;
    let c = col.num_colors;
    let mut dims: Vec<IntervalRep> = Vec::new();
    let mut stages = Vec::new();
    for i in 0..c.saturating_sub(1) {
        let complement: Vec<usize> = (0..g.n()).filter(|&v| col.color_of[v] != i).collect();
        let split = add_clique(&g, &complement)?;
        let partition = critical_clique_partition(&split);
        let (quotient, _) = quotient_by_partition(&split, &partition)?;
        // blocks touching the clique side go to Y, including mixed blocks
        let mut x_side = Vec::new();
        let mut y_side = Vec::new();
        for (b, block) in partition.blocks.iter().enumerate() {
            if block.iter().any(|&v| col.color_of[v] != i) {
                y_side.push(b);
            } else {
                x_side.push(b);
            }
        }
        let h_pairs: Vec<(usize, usize)> = quotient
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| !(y_side.contains(&u) && y_side.contains(&v)))
            .collect();
        let bipartite = Graph::from_edge_list(quotient.n(), &h_pairs)?;
        for &y in &y_side {
            // a proper class of a line graph leaves every outside vertex at
            // most 2 same-colored neighbors; more falsifies the input
            if bipartite.degree(y) > 2 {
                return Err(Error::MonochromaticBound(y));
            }
        }
        let b_rep = boxrep_degree2_bipartite(&bipartite, &x_side, &y_side)?;
        let doubled = clique_side_doubling(&bipartite, &b_rep, &y_side)?;
        let lifted = lift_critical_clique_rep(&split, &partition, &doubled)?;
        stages.push(ClassStage {
            class_index: i,
            split_graph: split,
            partition,
            quotient,
            x_side,
            y_side,
            bipartite,
            bipartite_dims: b_rep.k(),
            doubled_dims: doubled.k(),
        });
        dims.extend(lifted.dims().iter().cloned());
    }
    let clique_side: Vec<usize> = (0..g.n())
        .filter(|&v| col.color_of[v] != c - 1)
        .collect();
    dims.push(build_universal_split_interval(g.n(), &clique_side)?);
    Ok(LineGraphRep {
        graph: g,
        rep: BoxRep::new(dims)?,
        decomposition: SplitDecomposition {
            coloring: Some(col),
            classes: stages,
            universal_clique_side: Some(clique_side),
            complete_shortcut: false,
        },
    })
}
