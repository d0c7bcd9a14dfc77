//! Text formats for graphs, multigraphs, box representations, permutation
//! families and boxicity certificates. Writers emit canonical bytes;
//! parsers accept `#` comment lines and blank lines anywhere.

use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph};
use crate::interval::{BoxRep, IntervalRep};
use crate::oracle::BoxicityCertificate;
use crate::suitable::{Permutation, PermutationFamily};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields<T: std::str::FromStr>(line: usize, s: &str, expect: usize) -> Result<Vec<T>> {
    let fields: Vec<&str> = s.split_whitespace().collect();
    if fields.len() != expect {
        return Err(Error::Parse {
            line,
            msg: format!("expected {expect} fields, found {}", fields.len()),
        });
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<T>().map_err(|_| Error::Parse {
                line,
                msg: format!("invalid number `{f}`"),
            })
        })
        .collect()
}

/// Either kind of graph, as determined by the file header word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Simple(Graph),
    Multi(Multigraph),
}

/// Parses the graph text format: a `graph <n> <m>` or `multigraph <n> <m>`
/// header followed by `m` lines `<u> <v>`.
pub fn parse_graph(text: &str) -> Result<AnyGraph> {
    let mut lines = content_lines(text);
    let (lno, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let mut fields = header.split_whitespace();
    let kind = fields.next().unwrap_or("");
    if kind != "graph" && kind != "multigraph" {
        return Err(Error::Parse {
            line: lno,
            msg: format!("unknown header `{kind}`"),
        });
    }
    let rest: Vec<&str> = fields.collect();
    let nums = parse_fields::<usize>(lno, &rest.join(" "), 2)?;
    let (n, m) = (nums[0], nums[1]);
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let (lno, line) = lines.next().ok_or(Error::Parse {
            line: lno,
            msg: format!("expected {m} edge lines"),
        })?;
        let uv = parse_fields::<usize>(lno, line, 2)?;
        pairs.push((uv[0], uv[1]));
    }
    if let Some((lno, _)) = lines.next() {
        return Err(Error::Parse {
            line: lno,
            msg: "trailing content after edge list".into(),
        });
    }
    match kind {
        "graph" => Ok(AnyGraph::Simple(Graph::from_edge_list(n, &pairs)?)),
        _ => Ok(AnyGraph::Multi(Multigraph::from_edge_list(n, &pairs)?)),
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_multigraph(h: &Multigraph) -> String {
    let mut out = format!("multigraph {} {}\n", h.n(), h.edge_count());
    for &(u, v) in h.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the box representation format: `boxrep <n> <k>` followed by `n`
/// lines `<vertex> <l_1> <r_1> ... <l_k> <r_k>`.
pub fn parse_boxrep(text: &str) -> Result<BoxRep> {
    let mut lines = content_lines(text);
    let (lno, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some("boxrep") {
        return Err(Error::Parse {
            line: lno,
            msg: "expected `boxrep <n> <k>` header".into(),
        });
    }
    let rest: Vec<&str> = fields.collect();
    let nums = parse_fields::<usize>(lno, &rest.join(" "), 2)?;
    let (n, k) = (nums[0], nums[1]);
    if k == 0 {
        return Err(Error::NoDimensions);
    }
    let mut per_dim = vec![vec![(0i64, 0i64); n]; k];
    let mut seen = vec![false; n];
    for _ in 0..n {
        let (lno, line) = lines.next().ok_or(Error::Parse {
            line: lno,
            msg: format!("expected {n} vertex lines"),
        })?;
        let nums = parse_fields::<i64>(lno, line, 1 + 2 * k)?;
        let v = nums[0];
        if v < 0 || v as usize >= n || seen[v as usize] {
            return Err(Error::Parse {
                line: lno,
                msg: format!("bad or repeated vertex id {v}"),
            });
        }
        seen[v as usize] = true;
        for d in 0..k {
            per_dim[d][v as usize] = (nums[1 + 2 * d], nums[2 + 2 * d]);
        }
    }
    if let Some((lno, _)) = lines.next() {
        return Err(Error::Parse {
            line: lno,
            msg: "trailing content after vertex lines".into(),
        });
    }
    let dims = per_dim
        .into_iter()
        .map(IntervalRep::new)
        .collect::<Result<Vec<_>>>()?;
    BoxRep::new(dims)
}

pub fn write_boxrep(b: &BoxRep) -> String {
    let mut out = format!("boxrep {} {}\n", b.n(), b.k());
    for v in 0..b.n() {
        out.push_str(&v.to_string());
        for d in b.dims() {
            let (l, r) = d.interval(v);
            out.push_str(&format!(" {l} {r}"));
        }
        out.push('\n');
    }
    out
}

/// Parses the permutation family format: `perms <n> <p>` followed by `p`
/// one-line image sequences.
pub fn parse_perms(text: &str) -> Result<PermutationFamily> {
    let mut lines = content_lines(text);
    let (lno, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some("perms") {
        return Err(Error::Parse {
            line: lno,
            msg: "expected `perms <n> <p>` header".into(),
        });
    }
    let rest: Vec<&str> = fields.collect();
    let nums = parse_fields::<usize>(lno, &rest.join(" "), 2)?;
    let (n, p) = (nums[0], nums[1]);
    let mut perms = Vec::with_capacity(p);
    for _ in 0..p {
        let (lno, line) = lines.next().ok_or(Error::Parse {
            line: lno,
            msg: format!("expected {p} permutation lines"),
        })?;
        let images = parse_fields::<usize>(lno, line, n)?;
        perms.push(Permutation::from_images(images)?);
    }
    if let Some((lno, _)) = lines.next() {
        return Err(Error::Parse {
            line: lno,
            msg: "trailing content after permutations".into(),
        });
    }
    PermutationFamily::new(n, perms)
}

pub fn write_perms(f: &PermutationFamily) -> String {
    let mut out = format!("perms {} {}\n", f.n(), f.len());
    for p in f.perms() {
        let images: Vec<String> = p.images().iter().map(usize::to_string).collect();
        out.push_str(&images.join(" "));
        out.push('\n');
    }
    out
}

/// Serializes a boxicity certificate: `boxicity <k>` followed by one
/// single-dimension boxrep block per witness.
pub fn write_certificate(cert: &BoxicityCertificate) -> String {
    let mut out = format!("boxicity {}\n", cert.k);
    for rep in &cert.reps {
        let b = BoxRep::new(vec![rep.clone()]).expect("single dimension is a valid boxrep");
        out.push_str(&write_boxrep(&b));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = Graph::from_edge_list(4, &[(2, 3), (0, 1)]).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "graph 4 2\n0 1\n2 3\n");
        match parse_graph(&text).unwrap() {
            AnyGraph::Simple(parsed) => assert_eq!(parsed, g),
            _ => panic!("expected simple graph"),
        }
    }

    #[test]
    fn multigraph_round_trip_preserves_order() {
        let h = Multigraph::from_edge_list(3, &[(1, 2), (0, 1), (1, 2)]).unwrap();
        let text = write_multigraph(&h);
        assert_eq!(text, "multigraph 3 3\n1 2\n0 1\n1 2\n");
        match parse_graph(&text).unwrap() {
            AnyGraph::Multi(parsed) => assert_eq!(parsed, h),
            _ => panic!("expected multigraph"),
        }
    }

    #[test]
    fn graph_parser_accepts_comments() {
        let text = "# a path\n\ngraph 3 2\n0 1\n# middle\n1 2\n";
        assert!(matches!(parse_graph(text), Ok(AnyGraph::Simple(_))));
    }

    #[test]
    fn graph_parser_rejects_junk() {
        assert!(parse_graph("tree 3 2\n0 1\n1 2\n").is_err());
        assert!(parse_graph("graph 3 2\n0 1\n").is_err());
        assert!(parse_graph("graph 3 1\n0 1\n1 2\n").is_err());
        assert!(parse_graph("graph 3 2\n0 x\n1 2\n").is_err());
    }

    #[test]
    fn boxrep_round_trip() {
        let b = BoxRep::new(vec![
            IntervalRep::new(vec![(0, 1), (-2, 3)]).unwrap(),
            IntervalRep::new(vec![(5, 5), (4, 9)]).unwrap(),
        ])
        .unwrap();
        let text = write_boxrep(&b);
        assert_eq!(text, "boxrep 2 2\n0 0 1 5 5\n1 -2 3 4 9\n");
        assert_eq!(parse_boxrep(&text).unwrap(), b);
    }

    #[test]
    fn perms_round_trip() {
        let f = PermutationFamily::new(
            3,
            vec![
                Permutation::from_images(vec![1, 2, 3]).unwrap(),
                Permutation::from_images(vec![3, 1, 2]).unwrap(),
            ],
        )
        .unwrap();
        let text = write_perms(&f);
        assert_eq!(text, "perms 3 2\n1 2 3\n3 1 2\n");
        assert_eq!(parse_perms(&text).unwrap(), f);
    }
}
