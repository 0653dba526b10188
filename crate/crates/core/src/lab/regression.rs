//! Regression against the published reference spectra of the eight
//! splitting joins of K2 with the classical 5-vertex A-cospectral pair,
//! plus the two flagship double-pair constructions built from the 10-vertex
//! search.

use crate::error::{Error, Result};
use crate::graph::{make_family, Family, Graph, MatrixKind};
use crate::join::{nns_join, ns_join, JoinKind};
use crate::lab::nics::{nics_pair, NicsReport, NicsTemplate};
use crate::lab::search::SearchCache;
use crate::spectra::numeric_spectrum;

/// Expected-value table, embedded from data/reference_spectra.json.
const REFERENCE_JSON: &str = include_str!("../../data/reference_spectra.json");

/// The quadrilateral-plus-isolated-vertex graph F.
pub fn graph_f() -> Graph {
    make_family(&Family::Cycle(4))
        .expect("C4")
        .disjoint_union(&make_family(&Family::Complete(1)).expect("K1"))
}

/// The 5-vertex star H = K1,4.
pub fn graph_h() -> Graph {
    make_family(&Family::CompleteBipartite(1, 4)).expect("K1,4")
}

/// One reference regression: a named construction, the expected adjacency
/// spectrum and what the implementation computed.
#[derive(Clone, Debug)]
pub struct RegressionOutcome {
    pub name: String,
    pub expected: Vec<f64>,
    pub computed: Vec<f64>,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl RegressionOutcome {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "example": self.name,
            "expected": self.expected,
            "computed": self.computed,
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
            "pass": self.pass,
        })
    }
}

pub fn reference_example_names() -> Vec<String> {
    let table: serde_json::Value =
        serde_json::from_str(REFERENCE_JSON).expect("embedded table parses");
    table["examples"]
        .as_array()
        .expect("examples array")
        .iter()
        .map(|e| e["name"].as_str().expect("name").to_string())
        .collect()
}

fn construction_graph(name: &str) -> Result<Graph> {
    let k2 = make_family(&Family::Complete(2))?;
    let (f, h) = (graph_f(), graph_h());
    let (kind, g1, g2) = match name {
        "k2-ns-f" => (JoinKind::Ns, k2, f),
        "k2-ns-h" => (JoinKind::Ns, k2, h),
        "k2-nns-f" => (JoinKind::Nns, k2, f),
        "k2-nns-h" => (JoinKind::Nns, k2, h),
        "f-ns-k2" => (JoinKind::Ns, f, k2),
        "h-ns-k2" => (JoinKind::Ns, h, k2),
        "f-nns-k2" => (JoinKind::Nns, f, k2),
        "h-nns-k2" => (JoinKind::Nns, h, k2),
        other => {
            return Err(Error::Precondition(format!("unknown reference example `{other}`")))
        }
    };
    Ok(match kind {
        JoinKind::Ns => ns_join(&g1, &g2),
        JoinKind::Nns => nns_join(&g1, &g2),
        JoinKind::Plain => unreachable!(),
    })
}

/// Computes the named construction's adjacency spectrum and diffs it
/// against the reference table entry-by-entry.
pub fn reproduce(name: &str) -> Result<RegressionOutcome> {
    let table: serde_json::Value = serde_json::from_str(REFERENCE_JSON)?;
    let tolerance = table["tolerance"].as_f64().unwrap_or(1e-3);
    let entry = table["examples"]
        .as_array()
        .into_iter()
        .flatten()
        .find(|e| e["name"] == name)
        .ok_or_else(|| Error::Precondition(format!("unknown reference example `{name}`")))?;
    let mut expected = Vec::new();
    for item in entry["expected"].as_array().into_iter().flatten() {
        let v = item["value"].as_f64().expect("value");
        let m = item["mult"].as_u64().expect("mult") as usize;
        expected.extend(std::iter::repeat(v).take(m));
    }
    expected.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    let g = construction_graph(name)?;
    let computed = numeric_spectrum(&g, MatrixKind::Adjacency).expand_f64();
    let max_deviation = if computed.len() == expected.len() {
        computed
            .iter()
            .zip(&expected)
            .map(|(c, e)| (c - e).abs())
            .fold(0.0f64, f64::max)
    } else {
        f64::INFINITY
    };
    Ok(RegressionOutcome {
        name: name.to_string(),
        pass: max_deviation <= tolerance,
        expected,
        computed,
        max_deviation,
        tolerance,
    })
}

pub fn reproduce_all() -> Result<Vec<RegressionOutcome>> {
    reference_example_names().iter().map(|n| reproduce(n)).collect()
}

/// First cospectral non-isomorphic regular pair found on 10 vertices,
/// scanning degrees 3, 4, 5 (cached).
pub fn first_ten_vertex_pair(cache: &SearchCache) -> Result<(Graph, Graph)> {
    for r in [3usize, 4, 5] {
        let outcome = cache.find_pairs(10, r)?;
        if let Some((i, j)) = outcome.pairs.first().copied() {
            return Ok((outcome.graphs[i].clone(), outcome.graphs[j].clone()));
        }
    }
    Err(Error::VerificationFailed(
        "no cospectral regular pair found on 10 vertices for degree 3, 4 or 5".into(),
    ))
}

/// The NS double-pair construction on C4 and the found 10-vertex pair,
/// certified for all four matrices.
pub fn double_pair_ns_report(cache: &SearchCache) -> Result<NicsReport> {
    let c4 = make_family(&Family::Cycle(4))?;
    let (g2, h2) = first_ten_vertex_pair(cache)?;
    nics_pair(NicsTemplate::DoublePairNs, &[c4.clone(), c4, g2, h2])
}

/// The NNS double-pair construction on C4 and the found 10-vertex pair.
pub fn double_pair_nns_report(cache: &SearchCache) -> Result<NicsReport> {
    let c4 = make_family(&Family::Cycle(4))?;
    let (g2, h2) = first_ten_vertex_pair(cache)?;
    nics_pair(NicsTemplate::DoublePairNns, &[c4.clone(), c4, g2, h2])
}
