//! Plain, NS (neighbors-splitting) and NNS (non-neighbors-splitting) joins.
//!
//! For the splitting joins of G1 (n1 vertices) and G2 (n2 vertices) the
//! vertex order is normative and all downstream matrices, spectra and
//! encodings depend on it:
//!
//!   u_1..u_n1   original vertices of G1        (indices 0..n1)
//!   u'_1..u'_n1 split copies                   (indices n1..2*n1)
//!   v_1..v_n2   vertices of G2                 (indices 2*n1..2*n1+n2)
//!
//! Every u_i is adjacent to every v_j; u'_i is adjacent to the G1-neighbors
//! of u_i (NS) or to the G1-non-neighbors of u_i (NNS).

use std::fmt;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinKind {
    Plain,
    Ns,
    Nns,
}

impl JoinKind {
    pub fn parse(s: &str) -> Option<JoinKind> {
        match s.to_ascii_lowercase().as_str() {
            "plain" => Some(JoinKind::Plain),
            "ns" => Some(JoinKind::Ns),
            "nns" => Some(JoinKind::Nns),
            _ => None,
        }
    }
}

impl fmt::Display for JoinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JoinKind::Plain => "plain",
            JoinKind::Ns => "ns",
            JoinKind::Nns => "nns",
        })
    }
}

pub fn join(kind: JoinKind, g1: &Graph, g2: &Graph) -> Graph {
    match kind {
        JoinKind::Plain => plain_join(g1, g2),
        JoinKind::Ns => ns_join(g1, g2),
        JoinKind::Nns => nns_join(g1, g2),
    }
}

/// Disjoint union plus all edges between the two sides.
pub fn plain_join(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.n(), g2.n());
    let mut g = g1.disjoint_union(g2);
    for i in 0..n1 {
        for j in 0..n2 {
            g.add_edge(i, n1 + j);
        }
    }
    g
}

fn splitting_join(g1: &Graph, g2: &Graph, split_on_complement: bool) -> Graph {
    let (n1, n2) = (g1.n(), g2.n());
    if n1 == 0 {
        return g2.clone();
    }
    let split_src = if split_on_complement { g1.complement() } else { g1.clone() };
    let mut g = g1.disjoint_union(&Graph::empty(n1)).disjoint_union(g2);
    for i in 0..n1 {
        let mut m = split_src.neighbors(i);
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            g.add_edge(n1 + i, j);
        }
        for j in 0..n2 {
            g.add_edge(i, 2 * n1 + j);
        }
    }
    g
}

/// NS join: split vertex u'_i is adjacent to the G1-neighbors of u_i.
pub fn ns_join(g1: &Graph, g2: &Graph) -> Graph {
    splitting_join(g1, g2, false)
}

/// NNS join: split vertex u'_i is adjacent to the G1-non-neighbors of u_i
/// (distinct vertices only).
pub fn nns_join(g1: &Graph, g2: &Graph) -> Graph {
    splitting_join(g1, g2, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_matrix, make_family, Family, MatrixKind};
    use num::traits::Zero;
    use crate::iso::are_isomorphic;

    fn k(n: usize) -> Graph {
        make_family(&Family::Complete(n)).unwrap()
    }
    fn p(n: usize) -> Graph {
        make_family(&Family::Path(n)).unwrap()
    }
    fn c(n: usize) -> Graph {
        make_family(&Family::Cycle(n)).unwrap()
    }
    fn e(n: usize) -> Graph {
        Graph::empty(n)
    }

    #[test]
    fn plain_join_cases() {
        assert!(are_isomorphic(&plain_join(&k(1), &k(1)), &k(2)).is_some());
        let wheelish = plain_join(&k(1), &c(4));
        assert_eq!(wheelish.degree(0), 4);
        assert_eq!(wheelish.n(), 5);
        let kmn = plain_join(&e(2), &e(3));
        assert!(are_isomorphic(&kmn, &make_family(&Family::CompleteBipartite(2, 3)).unwrap())
            .is_some());
    }

    #[test]
    fn ns_join_cases() {
        let j = ns_join(&p(4), &p(2));
        assert_eq!(j.n(), 10);
        assert_eq!(j.edge_count(), 18); // 3|E1| + |E2| + n1*n2
        let tiny = ns_join(&k(1), &k(1));
        assert_eq!((tiny.n(), tiny.edge_count()), (3, 1));
        assert_eq!(tiny.edges(), vec![(0, 2)]);
        assert_eq!(tiny.degree(1), 0); // the split vertex is isolated
        let kk = ns_join(&k(2), &k(1));
        let mut edges = kk.edges();
        edges.sort();
        assert_eq!(edges, vec![(0, 1), (0, 3), (0, 4), (1, 2), (1, 4)]);
    }

    #[test]
    fn nns_join_cases() {
        let j = nns_join(&p(4), &p(2));
        assert_eq!(j.n(), 10);
        assert_eq!(j.edge_count(), 18); // n1(n1-1) - |E1| + |E2| + n1*n2
        // K2 nns K1: triangle {u1,u2,v} plus two isolated split vertices
        let t = nns_join(&k(2), &k(1));
        assert_eq!((t.n(), t.edge_count()), (5, 3));
        assert_eq!(t.degree(2), 0);
        assert_eq!(t.degree(3), 0);
        // empty_2 nns K1: split vertices attach to the opposite original
        let s = nns_join(&e(2), &k(1));
        let mut edges = s.edges();
        edges.sort();
        assert_eq!(edges, vec![(0, 3), (0, 4), (1, 2), (1, 4)]);
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(ns_join(&e(0), &c(4)), c(4));
        let only_split = ns_join(&k(2), &e(0));
        assert_eq!((only_split.n(), only_split.edge_count()), (4, 3));
        assert_eq!(plain_join(&e(0), &c(4)), c(4));
    }

    #[test]
    fn degree_formulas_arbitrary_g1() {
        // d(u_i) = d_i + n2 + d_i (NS) and n1 + n2 - 1 (NNS);
        // d(u'_i) = d_i (NS) and n1 - 1 - d_i (NNS); d(v_j) = d_{G2}(v_j) + n1.
        let g1 = p(4); // non-regular
        let g2 = c(4).disjoint_union(&k(1));
        let (n1, n2) = (g1.n(), g2.n());
        let ns = ns_join(&g1, &g2);
        let nns = nns_join(&g1, &g2);
        for i in 0..n1 {
            let d = g1.degree(i);
            assert_eq!(ns.degree(i), 2 * d + n2);
            assert_eq!(ns.degree(n1 + i), d);
            assert_eq!(nns.degree(i), n1 + n2 - 1);
            assert_eq!(nns.degree(n1 + i), n1 - 1 - d);
        }
        for j in 0..n2 {
            assert_eq!(ns.degree(2 * n1 + j), g2.degree(j) + n1);
            assert_eq!(nns.degree(2 * n1 + j), g2.degree(j) + n1);
        }
    }

    #[test]
    fn nns_split_blocks_match_ns_of_complement() {
        let g1 = p(4);
        let g2 = k(2);
        let nns = nns_join(&g1, &g2);
        let ns_c = ns_join(&g1.complement(), &g2);
        let n1 = g1.n();
        for i in 0..n1 {
            for j in 0..n1 {
                assert_eq!(nns.has_edge(n1 + i, j), ns_c.has_edge(n1 + i, j));
            }
        }
    }

    #[test]
    fn adjacency_block_structure() {
        // A(ns_join) must be the block matrix [A1 A1 J; A1 O O; J O A2].
        let g1 = c(4);
        let g2 = k(2);
        let (n1, n2) = (g1.n(), g2.n());
        let a = build_matrix(&ns_join(&g1, &g2), MatrixKind::Adjacency);
        let a1 = build_matrix(&g1, MatrixKind::Adjacency);
        let a2 = build_matrix(&g2, MatrixKind::Adjacency);
        for i in 0..n1 {
            for j in 0..n1 {
                assert_eq!(a[(i, j)], a1[(i, j)]);
                assert_eq!(a[(i, n1 + j)], a1[(i, j)]);
                assert_eq!(a[(n1 + i, j)], a1[(i, j)]);
                assert!(a[(n1 + i, n1 + j)].is_zero());
            }
            for j in 0..n2 {
                assert!(!a[(i, 2 * n1 + j)].is_zero());
                assert!(a[(n1 + i, 2 * n1 + j)].is_zero());
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                assert_eq!(a[(2 * n1 + i, 2 * n1 + j)], a2[(i, j)]);
            }
        }
    }
}
