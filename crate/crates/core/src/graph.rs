//! Simple undirected graphs on vertices 0..n-1 and the four associated
//! matrices.

use std::fmt;

use num::traits::One;

use crate::algebra::{ExactMatrix, Rat};
use crate::error::{Error, Result};

/// Hard capacity of the bitset representation. Exact characteristic
/// polynomial cost dominates well before this.
pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph stored as one adjacency bitmask per vertex.
/// The relation is kept symmetric and loop-free by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph with n vertices and no edges.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph capacity is {MAX_VERTICES} vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            if i >= n || j >= n || i == j {
                return Err(Error::InvalidEdge(i, j));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, i: usize, j: usize) {
        debug_assert!(i != j && i < self.n && j < self.n);
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && (self.adj[i] >> j) & 1 == 1
    }

    /// Neighbor set of vertex i as a bitmask.
    pub fn neighbors(&self, i: usize) -> u64 {
        self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.degree(i)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges (i, j) with i < j in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            let mut m = self.adj[i] >> (i + 1) << (i + 1);
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                out.push((i, j));
                m &= m - 1;
            }
        }
        out
    }

    /// Degree r such that every vertex has degree r, if one exists.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let r = self.degree(0);
        (1..self.n).all(|i| self.degree(i) == r).then_some(r)
    }

    pub fn complement(&self) -> Graph {
        let full = if self.n == 64 { !0u64 } else { (1u64 << self.n) - 1 };
        let adj = (0..self.n).map(|i| (!self.adj[i] & full) & !(1 << i)).collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union with this graph's vertices first.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        assert!(n <= MAX_VERTICES, "graph capacity is {MAX_VERTICES} vertices");
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Graph { n, adj }
    }

    /// Relabels vertices: vertex i of the result is vertex perm[i] of self.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(perm[i], perm[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![-1i8; self.n];
        for s in 0..self.n {
            if color[s] >= 0 {
                continue;
            }
            color[s] = 0;
            let mut queue = vec![s];
            while let Some(v) = queue.pop() {
                let mut m = self.adj[v];
                while m != 0 {
                    let u = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if color[u] < 0 {
                        color[u] = 1 - color[v];
                        queue.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "edges": self.edges().iter().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Graph> {
        let n = v
            .get("n")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::GraphSpec { spec: v.to_string(), reason: "missing n".into() })?
            as usize;
        let mut edges = Vec::new();
        if let Some(arr) = v.get("edges").and_then(|e| e.as_array()) {
            for pair in arr {
                let p = pair.as_array().filter(|p| p.len() == 2).ok_or_else(|| Error::GraphSpec {
                    spec: v.to_string(),
                    reason: "edges must be [i, j] pairs".into(),
                })?;
                let i = p[0].as_u64().unwrap_or(u64::MAX) as usize;
                let j = p[1].as_u64().unwrap_or(u64::MAX) as usize;
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, &edges)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for i in 0..self.n {
            s.push_str(&format!("  {i};\n"));
        }
        for (i, j) in self.edges() {
            s.push_str(&format!("  {i} -- {j};\n"));
        }
        s.push('}');
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Which of the four standard matrices of a graph is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    NormalizedLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 4] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
        MatrixKind::NormalizedLaplacian,
    ];

    pub fn letter(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "A",
            MatrixKind::Laplacian => "L",
            MatrixKind::SignlessLaplacian => "Q",
            MatrixKind::NormalizedLaplacian => "NL",
        }
    }

    pub fn parse(s: &str) -> Option<MatrixKind> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Some(MatrixKind::Adjacency),
            "L" => Some(MatrixKind::Laplacian),
            "Q" => Some(MatrixKind::SignlessLaplacian),
            "NL" => Some(MatrixKind::NormalizedLaplacian),
            _ => None,
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

/// Exact matrix of the requested kind.
///
/// A, L = D - A and Q = D + A are integer matrices. The normalized Laplacian
/// is returned in its rational similar form I - D^{-1}A; rows and columns of
/// isolated vertices are identically zero, so each isolated vertex
/// contributes the eigenvalue 0. This form has the same characteristic
/// polynomial as the symmetric normalized Laplacian, which keeps the
/// polynomial exact.
pub fn build_matrix(g: &Graph, kind: MatrixKind) -> ExactMatrix {
    let n = g.n();
    let mut m = ExactMatrix::zero(n, n);
    match kind {
        MatrixKind::Adjacency => {
            for (i, j) in g.edges() {
                m[(i, j)] = Rat::one();
                m[(j, i)] = Rat::one();
            }
        }
        MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
            let s = if kind == MatrixKind::Laplacian { -1i64 } else { 1 };
            for i in 0..n {
                m[(i, i)] = crate::algebra::rat_int(g.degree(i) as i64);
            }
            for (i, j) in g.edges() {
                m[(i, j)] = crate::algebra::rat_int(s);
                m[(j, i)] = crate::algebra::rat_int(s);
            }
        }
        MatrixKind::NormalizedLaplacian => {
            for i in 0..n {
                let d = g.degree(i);
                if d == 0 {
                    continue;
                }
                m[(i, i)] = Rat::one();
                let mut mask = g.neighbors(i);
                while mask != 0 {
                    let j = mask.trailing_zeros() as usize;
                    mask &= mask - 1;
                    m[(i, j)] = -crate::algebra::rat(1, d as i64);
                }
            }
        }
    }
    m
}

/// Diagonal degree matrix D.
pub fn degree_matrix(g: &Graph) -> ExactMatrix {
    ExactMatrix::diagonal(
        &g.degrees().iter().map(|&d| crate::algebra::rat_int(d as i64)).collect::<Vec<_>>(),
    )
}

/// Named graph family constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Path P_n
    Path(usize),
    /// Cycle C_n (n >= 3)
    Cycle(usize),
    /// Complete graph K_n
    Complete(usize),
    /// Complete bipartite K_{a,b}, part of size a first
    CompleteBipartite(usize, usize),
    /// Empty graph on n vertices
    Empty(usize),
    /// The Petersen graph
    Petersen,
}

pub fn make_family(family: &Family) -> Result<Graph> {
    let positive = |name: &str, vals: &[usize]| -> Result<()> {
        if vals.iter().any(|&v| v == 0) {
            return Err(Error::NonPositiveSize {
                family: name.into(),
                given: format!("{vals:?}"),
            });
        }
        Ok(())
    };
    match *family {
        Family::Path(n) => {
            positive("P", &[n])?;
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::NonPositiveSize { family: "C".into(), given: format!("{n} (need >= 3)") });
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Complete(n) => {
            positive("K", &[n])?;
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j));
                }
            }
            Graph::from_edges(n, &edges)
        }
        Family::CompleteBipartite(a, b) => {
            positive("K_{a,b}", &[a, b])?;
            let mut edges = Vec::new();
            for i in 0..a {
                for j in 0..b {
                    edges.push((i, a + j));
                }
            }
            Graph::from_edges(a + b, &edges)
        }
        Family::Empty(n) => {
            positive("E", &[n])?;
            Ok(Graph::empty(n))
        }
        Family::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5)); // outer cycle
                edges.push((i, i + 5)); // spokes
                edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
            }
            Graph::from_edges(10, &edges)
        }
    }
}
