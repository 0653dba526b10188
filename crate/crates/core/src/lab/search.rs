//! Exhaustive enumeration of r-regular graphs on up to 10 vertices and the
//! cospectral-pair search over them.

use std::collections::HashMap;
use std::path::PathBuf;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::canonical_form;

/// Desk-scale cap on the exhaustive search.
pub const SEARCH_MAX_N: usize = 10;

/// All r-regular graphs on n vertices up to isomorphism.
///
/// Generation assigns each vertex's forward neighbor set in vertex order.
/// Vertices that are indistinguishable so far (identical adjacency toward
/// the processed prefix) are interchangeable, so only prefix choices within
/// each such class are explored; the surviving candidates are deduplicated
/// by canonical form.
pub fn enumerate_regular(n: usize, r: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > SEARCH_MAX_N {
        return Err(Error::SearchRange { n, max: SEARCH_MAX_N });
    }
    if r >= n {
        return Err(Error::DegreeRange { r, n });
    }
    if n * r % 2 == 1 {
        return Ok(vec![]);
    }
    let mut candidates: Vec<Vec<u16>> = Vec::new();
    let mut rows = vec![0u16; n];
    let mut deficit = vec![r as u8; n];
    generate(0, n, &mut rows, &mut deficit, &mut candidates);
    let mut seen: HashMap<Vec<u64>, Graph> = HashMap::new();
    let canon: Vec<(Vec<u64>, Graph)> = candidates
        .par_iter()
        .map(|rows| {
            let g = graph_from_rows(n, rows);
            (canonical_form(&g), g)
        })
        .collect();
    for (cert, g) in canon {
        seen.entry(cert).or_insert(g);
    }
    let mut out: Vec<(Vec<u64>, Graph)> = seen.into_iter().collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

fn graph_from_rows(n: usize, rows: &[u16]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rows[i] >> j & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generator emits simple graphs")
}

/// Chooses the forward neighbors of vertex `v`. Classes of future vertices
/// with equal prefix adjacency are interchangeable; within each class only
/// the lowest-indexed members are used.
fn generate(v: usize, n: usize, rows: &mut Vec<u16>, deficit: &mut Vec<u8>, out: &mut Vec<Vec<u16>>) {
    if v == n {
        out.push(rows.clone());
        return;
    }
    let need = deficit[v] as usize;
    let future: Vec<usize> = (v + 1..n).collect();
    if need > future.len() {
        return;
    }
    if need == 0 {
        if feasible(v + 1, n, deficit) {
            generate(v + 1, n, rows, deficit, out);
        }
        return;
    }
    // group the future vertices by their adjacency signature toward 0..=v
    let mask = (1u32 << (v + 1)) - 1;
    let mut classes: Vec<(u32, u8, Vec<usize>)> = Vec::new();
    for &j in &future {
        let sig = rows[j] as u32 & mask;
        match classes.iter_mut().find(|(s, d, _)| *s == sig && *d == deficit[j]) {
            Some((_, _, members)) => members.push(j),
            None => classes.push((sig, deficit[j], vec![j])),
        }
    }
    let caps: Vec<usize> = classes
        .iter()
        .map(|(_, d, members)| if *d == 0 { 0 } else { members.len() })
        .collect();
    let mut take = vec![0usize; classes.len()];
    distribute(0, need, &caps, &mut take, &mut |take| {
        let mut chosen: Vec<usize> = Vec::with_capacity(need);
        for (k, &t) in take.iter().enumerate() {
            chosen.extend_from_slice(&classes[k].2[..t]);
        }
        for &j in &chosen {
            rows[v] |= 1 << j;
            rows[j] |= 1 << v;
            deficit[j] -= 1;
        }
        deficit[v] = 0;
        if feasible(v + 1, n, deficit) {
            generate(v + 1, n, rows, deficit, out);
        }
        deficit[v] = need as u8;
        for &j in &chosen {
            rows[v] &= !(1 << j);
            rows[j] &= !(1 << v);
            deficit[j] += 1;
        }
    });
}

/// Enumerates all ways to split `need` across classes bounded by `caps`.
fn distribute(
    k: usize,
    need: usize,
    caps: &[usize],
    take: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if k == caps.len() {
        if need == 0 {
            f(take);
        }
        return;
    }
    let rest: usize = caps[k + 1..].iter().sum();
    let lo = need.saturating_sub(rest);
    let hi = caps[k].min(need);
    for t in lo..=hi {
        take[k] = t;
        distribute(k + 1, need - t, caps, take, f);
    }
    take[k] = 0;
}

/// Remaining-degree feasibility for the unprocessed suffix.
fn feasible(from: usize, n: usize, deficit: &[u8]) -> bool {
    let m = n - from;
    let mut sum = 0usize;
    let mut positive = 0usize;
    for &d in &deficit[from..] {
        sum += d as usize;
        if d > 0 {
            positive += 1;
        }
    }
    if sum % 2 == 1 {
        return false;
    }
    for &d in &deficit[from..] {
        if d as usize > positive.saturating_sub(1).min(m - 1) {
            return false;
        }
    }
    true
}

/// Outcome of the cospectral search at one (n, r): the full enumeration and
/// the index pairs sharing an exact adjacency characteristic polynomial.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub n: usize,
    pub r: usize,
    pub graphs: Vec<Graph>,
    pub pairs: Vec<(usize, usize)>,
}

impl SearchOutcome {
    pub fn pair_graphs(&self) -> Vec<(Graph, Graph)> {
        self.pairs
            .iter()
            .map(|&(i, j)| (self.graphs[i].clone(), self.graphs[j].clone()))
            .collect()
    }
}

/// Buckets the enumeration by exact adjacency characteristic polynomial and
/// reports every within-bucket pair. Enumerated graphs are pairwise
/// non-isomorphic already, so each reported pair is cospectral and
/// non-isomorphic.
pub fn find_regular_cospectral_pairs(n: usize, r: usize) -> Result<SearchOutcome> {
    let graphs = enumerate_regular(n, r)?;
    let polys: Vec<Vec<String>> = graphs
        .par_iter()
        .map(|g| {
            let p = crate::graph::build_matrix(g, crate::graph::MatrixKind::Adjacency)
                .charpoly()
                .expect("square adjacency matrix");
            p.coeffs().iter().map(crate::algebra::rat_to_string).collect()
        })
        .collect();
    let mut buckets: HashMap<&[String], Vec<usize>> = HashMap::new();
    for (i, key) in polys.iter().enumerate() {
        buckets.entry(key).or_default().push(i);
    }
    let mut pairs = Vec::new();
    for members in buckets.values() {
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                pairs.push((members[a], members[b]));
            }
        }
    }
    pairs.sort_unstable();
    Ok(SearchOutcome { n, r, graphs, pairs })
}

/// Disk cache for search outcomes, keyed by (n, r).
///
/// Files are JSON: {"n":int, "r":int, "graphs":[graph6,...], "pairs":[[i,j],...]}.
pub struct SearchCache {
    dir: PathBuf,
}

pub const CACHE_DIR_ENV: &str = "SPECTRAJOIN_CACHE_DIR";

impl SearchCache {
    /// Cache under SPECTRAJOIN_CACHE_DIR, or a directory in the system
    /// temp dir when unset.
    pub fn from_env() -> SearchCache {
        let dir = std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| std::env::temp_dir().join("spectrajoin-cache"));
        SearchCache { dir }
    }

    pub fn at(dir: PathBuf) -> SearchCache {
        SearchCache { dir }
    }

    fn path(&self, n: usize, r: usize) -> PathBuf {
        self.dir.join(format!("reg_{n}_{r}.json"))
    }

    pub fn load(&self, n: usize, r: usize) -> Option<SearchOutcome> {
        let text = std::fs::read_to_string(self.path(n, r)).ok()?;
        let v: serde_json::Value = serde_json::from_str(&text).ok()?;
        let graphs: Option<Vec<Graph>> = v["graphs"]
            .as_array()?
            .iter()
            .map(|s| crate::graph6::decode(s.as_str()?).ok())
            .collect();
        let pairs: Option<Vec<(usize, usize)>> = v["pairs"]
            .as_array()?
            .iter()
            .map(|p| {
                let a = p.get(0)?.as_u64()? as usize;
                let b = p.get(1)?.as_u64()? as usize;
                Some((a, b))
            })
            .collect();
        Some(SearchOutcome { n, r, graphs: graphs?, pairs: pairs? })
    }

    pub fn store(&self, outcome: &SearchOutcome) -> Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let graphs: Result<Vec<String>> =
            outcome.graphs.iter().map(crate::graph6::encode).collect();
        let v = serde_json::json!({
            "n": outcome.n,
            "r": outcome.r,
            "graphs": graphs?,
            "pairs": outcome.pairs.iter().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>(),
        });
        std::fs::write(self.path(outcome.n, outcome.r), serde_json::to_string(&v)?)?;
        Ok(())
    }

    /// Cached search; computes and stores on a miss.
    pub fn find_pairs(&self, n: usize, r: usize) -> Result<SearchOutcome> {
        if let Some(hit) = self.load(n, r) {
            return Ok(hit);
        }
        let outcome = find_regular_cospectral_pairs(n, r)?;
        self.store(&outcome)?;
        Ok(outcome)
    }
}
