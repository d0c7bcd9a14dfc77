//! Browser bindings for the interactive demo page. Every export takes plain
//! parameters and returns a JSON string, so the same functions compile and
//! test natively.

use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

use boxrep::construct::{boxrep_subdivision_auto, SubdivisionRep};
use boxrep::gen::{self, Lcg};
use boxrep::graph::Graph;
use boxrep::interval::verify_box_representation;
use boxrep::oracle::{exact_boxicity, OracleCaps};
use boxrep::suitable::{
    build_simply_3_suitable, min_simply_3_suitable_size, simply_3_suitable_witness,
    suitable_family_size_formula,
};

#[derive(Serialize)]
struct GraphView {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphView {
    fn from(g: &Graph) -> Self {
        GraphView {
            n: g.n(),
            edges: g.edges().to_vec(),
        }
    }
}

#[derive(Serialize)]
struct SubdivisionView {
    base: GraphView,
    subdivided: GraphView,
    /// Vertices below this id are originals, the rest are subdivision
    /// vertices.
    original_count: usize,
    /// dims x vertices interval table.
    dims: Vec<Vec<(i64, i64)>>,
    family_size: Option<usize>,
    colors_used: Option<usize>,
    valid: bool,
    branch: &'static str,
}

#[derive(Serialize)]
struct ErrorView {
    error: String,
}

fn err_json(msg: impl ToString) -> String {
    serde_json::to_string(&ErrorView {
        error: msg.to_string(),
    })
    .unwrap()
}

fn subdivision_view(base: &Graph, built: &SubdivisionRep) -> SubdivisionView {
    let valid = verify_box_representation(&built.graph, &built.rep)
        .map(|r| r.valid)
        .unwrap_or(false);
    let branch = if built.family_size.is_none() {
        "odd cycle"
    } else if built.colors_used.is_none() {
        "complete"
    } else {
        "greedy coloring"
    };
    SubdivisionView {
        base: base.into(),
        subdivided: (&built.graph).into(),
        original_count: base.n(),
        dims: built
            .rep
            .dims()
            .iter()
            .map(|d| d.intervals().to_vec())
            .collect(),
        family_size: built.family_size,
        colors_used: built.colors_used,
        valid,
        branch,
    }
}

/// Box representation of the full subdivision of a base graph.
/// `kind` is one of `complete`, `cycle`, `random`; `param` is the vertex
/// count and `seed` feeds the random generator (edge probability 40%).
#[wasm_bindgen]
pub fn subdivision_demo(kind: &str, param: usize, seed: u64) -> String {
    let base = match kind {
        "complete" => {
            if !(2..=24).contains(&param) {
                return err_json("complete: n must be between 2 and 24");
            }
            gen::complete(param)
        }
        "cycle" => {
            if !(3..=40).contains(&param) {
                return err_json("cycle: n must be between 3 and 40");
            }
            match gen::cycle(param) {
                Ok(g) => g,
                Err(e) => return err_json(e),
            }
        }
        "random" => {
            if !(2..=24).contains(&param) {
                return err_json("random: n must be between 2 and 24");
            }
            let mut rng = Lcg::new(seed);
            let mut g = gen::random_graph(param, 400, &mut rng);
            if g.edge_count() == 0 {
                g = Graph::from_edge_list(param, &[(0, 1)]).expect("n >= 2");
            }
            g
        }
        other => return err_json(format!("unknown graph kind `{other}`")),
    };
    match boxrep_subdivision_auto(&base) {
        Ok(built) => serde_json::to_string(&subdivision_view(&base, &built)).unwrap(),
        Err(e) => err_json(e),
    }
}

#[derive(Serialize)]
struct SuitableView {
    n: usize,
    size: usize,
    formula_size: usize,
    perms: Vec<Vec<usize>>,
    suitable: bool,
    witness: Option<(usize, usize, usize)>,
    /// Exhaustively certified minimum, only attempted for tiny n.
    exact_min: Option<usize>,
}

/// The recursive simply 3-suitable family for `[n]`, its verification and,
/// for n <= 6, the exhaustively certified minimum size.
#[wasm_bindgen]
pub fn suitable_demo(n: usize) -> String {
    if !(1..=4096).contains(&n) {
        return err_json("n must be between 1 and 4096");
    }
    let family = match build_simply_3_suitable(n) {
        Ok(f) => f,
        Err(e) => return err_json(e),
    };
    let witness = simply_3_suitable_witness(&family);
    let exact_min = if (2..=6).contains(&n) {
        min_simply_3_suitable_size(n, 4).ok()
    } else {
        None
    };
    serde_json::to_string(&SuitableView {
        n,
        size: family.len(),
        formula_size: suitable_family_size_formula(n),
        perms: family.perms().iter().map(|p| p.images().to_vec()).collect(),
        suitable: witness.is_none(),
        witness,
        exact_min,
    })
    .unwrap()
}

#[derive(Serialize)]
struct WitnessView {
    rep: Vec<(i64, i64)>,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct ExactView {
    name: String,
    graph: GraphView,
    boxicity: usize,
    witnesses: Vec<WitnessView>,
}

fn named_graph(name: &str) -> Option<Graph> {
    let g = |n: usize, pairs: &[(usize, usize)]| Graph::from_edge_list(n, pairs).unwrap();
    Some(match name {
        "p4" => g(4, &[(0, 1), (1, 2), (2, 3)]),
        "c4" => gen::cycle(4).unwrap(),
        "c5" => gen::cycle(5).unwrap(),
        "c6" => gen::cycle(6).unwrap(),
        "k4" => gen::complete(4),
        "k23" => g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
        "prism" => g(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        ),
        "octahedron" => g(
            6,
            &[
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
            ],
        ),
        "subdivided-k3" => {
            let (sub, _) = boxrep::graph::full_subdivision(&gen::complete(3));
            sub
        }
        _ => return None,
    })
}

/// Exact boxicity of a named small graph, with the interval-graph witnesses.
/// Names: p4, c4, c5, c6, k4, k23, prism, octahedron, subdivided-k3.
#[wasm_bindgen]
pub fn exact_demo(name: &str) -> String {
    let Some(graph) = named_graph(name) else {
        return err_json(format!("unknown graph `{name}`"));
    };
    match exact_boxicity(&graph, &OracleCaps::default()) {
        Ok(cert) => {
            let witnesses = cert
                .witnesses
                .iter()
                .zip(&cert.reps)
                .map(|(w, rep)| WitnessView {
                    rep: rep.intervals().to_vec(),
                    edges: w.edges().to_vec(),
                })
                .collect();
            serde_json::to_string(&ExactView {
                name: name.to_string(),
                graph: (&graph).into(),
                boxicity: cert.k,
                witnesses,
            })
            .unwrap()
        }
        Err(e) => err_json(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdivision_demo_produces_valid_json() {
        let text = subdivision_demo("complete", 4, 0);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["valid"], true);
        assert_eq!(v["branch"], "complete");
        assert_eq!(v["dims"].as_array().unwrap().len(), 3);

        let text = subdivision_demo("cycle", 7, 0);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["branch"], "odd cycle");
        assert_eq!(v["valid"], true);

        let text = subdivision_demo("random", 9, 123);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["valid"], true);
    }

    #[test]
    fn subdivision_demo_rejects_bad_input() {
        let v: serde_json::Value =
            serde_json::from_str(&subdivision_demo("torus", 5, 0)).unwrap();
        assert!(v["error"].is_string());
        let v: serde_json::Value =
            serde_json::from_str(&subdivision_demo("complete", 1, 0)).unwrap();
        assert!(v["error"].is_string());
    }

    #[test]
    fn suitable_demo_reports_formula_match() {
        let v: serde_json::Value = serde_json::from_str(&suitable_demo(16)).unwrap();
        assert_eq!(v["size"], 3);
        assert_eq!(v["formula_size"], 3);
        assert_eq!(v["suitable"], true);
        let v: serde_json::Value = serde_json::from_str(&suitable_demo(5)).unwrap();
        assert_eq!(v["exact_min"], 3);
    }

    #[test]
    fn exact_demo_octahedron_is_three() {
        let v: serde_json::Value = serde_json::from_str(&exact_demo("octahedron")).unwrap();
        assert_eq!(v["boxicity"], 3);
        assert_eq!(v["witnesses"].as_array().unwrap().len(), 3);
        let v: serde_json::Value = serde_json::from_str(&exact_demo("c6")).unwrap();
        assert_eq!(v["boxicity"], 2);
        let v: serde_json::Value = serde_json::from_str(&exact_demo("nope")).unwrap();
        assert!(v["error"].is_string());
    }
}
