//! Isomorphism testing and canonical labeling via iterative partition
//! refinement plus backtracking individualization.

use crate::graph::Graph;

type Cells = Vec<Vec<usize>>;

fn cell_masks(cells: &Cells) -> Vec<u64> {
    cells
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect()
}

/// Equitable refinement: repeatedly splits cells by the vector of neighbor
/// counts into every cell, ordering subcells by that signature. The result
/// depends only on the isomorphism type of (graph, ordered partition).
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks = cell_masks(&cells);
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut sigs: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    (
                        masks.iter().map(|&m| (g.neighbors(v) & m).count_ones()).collect(),
                        v,
                    )
                })
                .collect();
            sigs.sort();
            let mut start = 0;
            for i in 1..=sigs.len() {
                if i == sigs.len() || sigs[i].0 != sigs[start].0 {
                    next.push(sigs[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        // every split strictly increases the cell count
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn individualize(cells: &Cells, t: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for (k, cell) in cells.iter().enumerate() {
        if k == t {
            out.push(vec![v]);
            out.push(cell.iter().copied().filter(|&u| u != v).collect());
        } else {
            out.push(cell.clone());
        }
    }
    out
}

/// Adjacency rows of the graph relabeled so that new vertex i is
/// `label[i]`; used as an order-comparable certificate.
pub fn certificate(g: &Graph, label: &[usize]) -> Vec<u64> {
    let n = label.len();
    let mut pos = vec![0usize; n];
    for (newi, &old) in label.iter().enumerate() {
        pos[old] = newi;
    }
    let mut rows = vec![0u64; n];
    for (i, j) in g.edges() {
        rows[pos[i]] |= 1 << pos[j];
        rows[pos[j]] |= 1 << pos[i];
    }
    rows
}

/// A labeling whose certificate is maximal over the refinement search tree;
/// two graphs are isomorphic iff their canonical certificates agree.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return vec![];
    }
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    let init = refine(g, vec![(0..n).collect()]);
    canon_search(g, init, &mut best);
    best.expect("search visits at least one leaf").1
}

fn canon_search(g: &Graph, cells: Cells, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    match cells.iter().position(|c| c.len() > 1) {
        Some(t) => {
            for idx in 0..cells[t].len() {
                let v = cells[t][idx];
                let child = refine(g, individualize(&cells, t, v));
                canon_search(g, child, best);
            }
        }
        None => {
            let label: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let cert = certificate(g, &label);
            if best.as_ref().map_or(true, |(bc, _)| cert > *bc) {
                *best = Some((cert, label));
            }
        }
    }
}

pub fn canonical_form(g: &Graph) -> Vec<u64> {
    certificate(g, &canonical_labeling(g))
}

/// Isomorphism test with witness. A returned permutation p maps vertices of
/// `g` to vertices of `h`: g has edge (i, j) iff h has edge (p[i], p[j]).
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() {
        return None;
    }
    let n = g.n();
    if n == 0 {
        return Some(vec![]);
    }
    if g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let cg = refine(g, vec![(0..n).collect()]);
    let ch = refine(h, vec![(0..n).collect()]);
    iso_search(g, h, &cg, &ch)
}

fn iso_search(g: &Graph, h: &Graph, cg: &Cells, ch: &Cells) -> Option<Vec<usize>> {
    if cg.len() != ch.len() {
        return None;
    }
    if cg.iter().zip(ch).any(|(a, b)| a.len() != b.len()) {
        return None;
    }
    match cg.iter().position(|c| c.len() > 1) {
        None => {
            let mut p = vec![0usize; g.n()];
            for (a, b) in cg.iter().zip(ch) {
                p[a[0]] = b[0];
            }
            for i in 0..g.n() {
                for j in i + 1..g.n() {
                    if g.has_edge(i, j) != h.has_edge(p[i], p[j]) {
                        return None;
                    }
                }
            }
            Some(p)
        }
        Some(t) => {
            let v = cg[t][0];
            let next_g = refine(g, individualize(cg, t, v));
            for &u in &ch[t] {
                let next_h = refine(h, individualize(ch, t, u));
                if let Some(p) = iso_search(g, h, &next_g, &next_h) {
                    return Some(p);
                }
            }
            None
        }
    }
}

/// Applies a witness permutation, mapping `g` onto its image.
pub fn apply_witness(g: &Graph, p: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(i, j)| (p[i], p[j])).collect();
    Graph::from_edges(g.n(), &edges).expect("witness must be a permutation")
}
