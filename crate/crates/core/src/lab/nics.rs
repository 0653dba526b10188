//! Cospectral non-isomorphic pair reports, the join-based pair factories,
//! and the experimental normalized-Laplacian probe.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{build_matrix, Graph, MatrixKind};
use crate::iso::are_isomorphic;
use crate::join::{nns_join, ns_join};
use crate::lab::are_cospectral_exact;
use crate::Poly;

/// Exact per-kind cospectrality evidence.
#[derive(Clone, Debug)]
pub struct KindVerdict {
    pub kind: MatrixKind,
    pub charpoly_left: Poly,
    pub charpoly_right: Poly,
    pub cospectral: bool,
}

/// A constructed pair of graphs with per-matrix cospectrality verdicts and
/// a non-isomorphism check. Every claim is re-derivable from the attached
/// characteristic polynomials.
#[derive(Clone, Debug)]
pub struct NicsReport {
    pub pair: (Graph, Graph),
    pub verdicts: Vec<KindVerdict>,
    pub isomorphic: bool,
    pub witness: Option<Vec<usize>>,
    pub regular: (bool, bool),
    /// Kinds the construction claims cospectrality for.
    pub claimed: Vec<MatrixKind>,
}

impl NicsReport {
    /// Cospectral for every kind in the claim set and not isomorphic.
    pub fn snics(&self) -> bool {
        !self.isomorphic
            && self.claimed.iter().all(|k| {
                self.verdicts.iter().any(|v| v.kind == *k && v.cospectral)
            })
    }

    pub fn verdict_for(&self, kind: MatrixKind) -> Option<&KindVerdict> {
        self.verdicts.iter().find(|v| v.kind == kind)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "pair": [
                crate::graph6::encode(&self.pair.0).ok(),
                crate::graph6::encode(&self.pair.1).ok(),
            ],
            "n": self.pair.0.n(),
            "cospectral": self.verdicts.iter()
                .map(|v| (v.kind.letter().to_string(), v.cospectral))
                .collect::<std::collections::BTreeMap<_, _>>(),
            "charpolys": self.verdicts.iter()
                .map(|v| (v.kind.letter().to_string(), serde_json::json!({
                    "left": v.charpoly_left.to_json(),
                    "right": v.charpoly_right.to_json(),
                })))
                .collect::<std::collections::BTreeMap<_, _>>(),
            "isomorphic": self.isomorphic,
            "regular": [self.regular.0, self.regular.1],
            "claimed": self.claimed.iter().map(|k| k.letter()).collect::<Vec<_>>(),
            "snics": self.snics(),
        })
    }
}

/// Full report for a pair over a set of matrix kinds.
pub fn snics_verdict(g: &Graph, h: &Graph, kinds: &[MatrixKind]) -> Result<NicsReport> {
    let mut verdicts = Vec::with_capacity(kinds.len());
    for &kind in kinds {
        let pl = build_matrix(g, kind).charpoly()?;
        let pr = build_matrix(h, kind).charpoly()?;
        let cospectral = g.n() == h.n() && pl == pr;
        verdicts.push(KindVerdict { kind, charpoly_left: pl, charpoly_right: pr, cospectral });
    }
    let witness = are_isomorphic(g, h);
    Ok(NicsReport {
        regular: (g.regular_degree().is_some(), h.regular_degree().is_some()),
        isomorphic: witness.is_some(),
        witness,
        pair: (g.clone(), h.clone()),
        verdicts,
        claimed: kinds.to_vec(),
    })
}

/// For a regular pair of equal size and degree, the four cospectrality
/// verdicts must agree (all true or all false); returns whether they do.
pub fn regular_equivalence_check(g: &Graph, h: &Graph) -> Result<bool> {
    let rg = g.regular_degree().ok_or_else(|| Error::NotRegular("first graph".into()))?;
    let rh = h.regular_degree().ok_or_else(|| Error::NotRegular("second graph".into()))?;
    if g.n() != h.n() || rg != rh {
        return Err(Error::Precondition(format!(
            "equivalence check needs equal size and degree, got ({}, {rg}) vs ({}, {rh})",
            g.n(),
            h.n()
        )));
    }
    let verdicts: Vec<bool> = MatrixKind::ALL
        .iter()
        .map(|&k| are_cospectral_exact(g, h, k))
        .collect::<Result<_>>()?;
    Ok(verdicts.iter().all(|&v| v) || verdicts.iter().all(|&v| !v))
}

/// The six pair-construction templates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NicsTemplate {
    /// G ns F vs G ns H for a regular cospectral non-isomorphic (F, H)
    RightPairNs,
    /// G nns F vs G nns H
    RightPairNns,
    /// F ns G vs H ns G
    LeftPairNs,
    /// F nns G vs H nns G
    LeftPairNns,
    /// G1 ns G2 vs H1 ns H2 with both coordinates cospectral regular pairs
    DoublePairNs,
    /// G1 nns G2 vs H1 nns H2
    DoublePairNns,
}

impl NicsTemplate {
    pub const ALL: [NicsTemplate; 6] = [
        NicsTemplate::RightPairNs,
        NicsTemplate::RightPairNns,
        NicsTemplate::LeftPairNs,
        NicsTemplate::LeftPairNns,
        NicsTemplate::DoublePairNs,
        NicsTemplate::DoublePairNns,
    ];

    pub fn token(self) -> &'static str {
        match self {
            NicsTemplate::RightPairNs => "cor4.4a",
            NicsTemplate::RightPairNns => "cor4.4b",
            NicsTemplate::LeftPairNs => "cor4.5a",
            NicsTemplate::LeftPairNns => "cor4.5b",
            NicsTemplate::DoublePairNs => "cor5.2",
            NicsTemplate::DoublePairNns => "cor6.5",
        }
    }

    pub fn parse(s: &str) -> Option<NicsTemplate> {
        NicsTemplate::ALL.iter().copied().find(|t| t.token() == s)
    }

    /// Kinds the template certifies.
    pub fn claimed_kinds(self) -> Vec<MatrixKind> {
        match self {
            NicsTemplate::DoublePairNs | NicsTemplate::DoublePairNns => MatrixKind::ALL.to_vec(),
            _ => vec![
                MatrixKind::Adjacency,
                MatrixKind::Laplacian,
                MatrixKind::SignlessLaplacian,
            ],
        }
    }

    pub fn input_arity(self) -> usize {
        match self {
            NicsTemplate::DoublePairNs | NicsTemplate::DoublePairNns => 4,
            _ => 3,
        }
    }
}

impl fmt::Display for NicsTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

fn require_regular_cospectral(
    f: &Graph,
    h: &Graph,
    need_noniso: bool,
    label: &str,
) -> Result<()> {
    let rf = f
        .regular_degree()
        .ok_or_else(|| Error::Precondition(format!("{label}: first graph must be regular")))?;
    let rh = h
        .regular_degree()
        .ok_or_else(|| Error::Precondition(format!("{label}: second graph must be regular")))?;
    if rf != rh || f.n() != h.n() {
        return Err(Error::Precondition(format!(
            "{label}: pair must share size and degree"
        )));
    }
    if !are_cospectral_exact(f, h, MatrixKind::Adjacency)? {
        return Err(Error::Precondition(format!("{label}: pair must be A-cospectral")));
    }
    if need_noniso && are_isomorphic(f, h).is_some() {
        return Err(Error::Precondition(format!("{label}: pair must be non-isomorphic")));
    }
    Ok(())
}

/// Builds the template's joins, verifies the claimed cospectralities and
/// non-isomorphism exactly, and returns the full report. A verification
/// failure is an error, never a silent pass.
pub fn nics_pair(template: NicsTemplate, inputs: &[Graph]) -> Result<NicsReport> {
    if inputs.len() != template.input_arity() {
        return Err(Error::Precondition(format!(
            "{template} takes {} graphs, got {}",
            template.input_arity(),
            inputs.len()
        )));
    }
    let (left, right) = match template {
        NicsTemplate::RightPairNs | NicsTemplate::RightPairNns => {
            let (g, f, h) = (&inputs[0], &inputs[1], &inputs[2]);
            require_regular_cospectral(f, h, true, "(F, H)")?;
            if template == NicsTemplate::RightPairNs {
                (ns_join(g, f), ns_join(g, h))
            } else {
                (nns_join(g, f), nns_join(g, h))
            }
        }
        NicsTemplate::LeftPairNs | NicsTemplate::LeftPairNns => {
            let (g, f, h) = (&inputs[0], &inputs[1], &inputs[2]);
            require_regular_cospectral(f, h, true, "(F, H)")?;
            if template == NicsTemplate::LeftPairNs {
                (ns_join(f, g), ns_join(h, g))
            } else {
                (nns_join(f, g), nns_join(h, g))
            }
        }
        NicsTemplate::DoublePairNs | NicsTemplate::DoublePairNns => {
            let (g1, h1, g2, h2) = (&inputs[0], &inputs[1], &inputs[2], &inputs[3]);
            require_regular_cospectral(g1, h1, false, "(G1, H1)")?;
            require_regular_cospectral(g2, h2, true, "(G2, H2)")?;
            if template == NicsTemplate::DoublePairNs {
                (ns_join(g1, g2), ns_join(h1, h2))
            } else {
                (nns_join(g1, g2), nns_join(h1, h2))
            }
        }
    };
    let report = snics_verdict(&left, &right, &template.claimed_kinds())?;
    if !report.snics() {
        let failed: Vec<&str> = report
            .verdicts
            .iter()
            .filter(|v| !v.cospectral)
            .map(|v| v.kind.letter())
            .collect();
        return Err(Error::VerificationFailed(format!(
            "{template} pair is not certified (isomorphic = {}, failed kinds = {failed:?})",
            report.isomorphic
        )));
    }
    Ok(report)
}

/// Which side the verified cospectral pair enters the probe joins on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeSide {
    /// Fixed G on the left: G join H1 vs G join H2.
    RightPair,
    /// Fixed H on the right: G1 join H vs G2 join H.
    LeftPair,
}

impl ProbeSide {
    pub fn token(self) -> &'static str {
        match self {
            ProbeSide::RightPair => "right-fixed-G",
            ProbeSide::LeftPair => "left-fixed-H",
        }
    }

    pub fn parse(s: &str) -> Option<ProbeSide> {
        match s {
            "right-fixed-G" => Some(ProbeSide::RightPair),
            "left-fixed-H" => Some(ProbeSide::LeftPair),
            _ => None,
        }
    }
}

/// Experimental probe: exact normalized-Laplacian cospectrality of the NS
/// and NNS joins built from an arbitrary fixed graph and a verified regular
/// cospectral non-isomorphic pair. A false outcome is a reported
/// counterexample, not an error.
#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub side: ProbeSide,
    pub fixed: Graph,
    pub pair: (Graph, Graph),
    pub ns_nl_cospectral: bool,
    pub nns_nl_cospectral: bool,
}

impl ProbeReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "experimental": true,
            "side": self.side.token(),
            "fixed": crate::graph6::encode(&self.fixed).ok(),
            "pair": [
                crate::graph6::encode(&self.pair.0).ok(),
                crate::graph6::encode(&self.pair.1).ok(),
            ],
            "ns_nl_cospectral": self.ns_nl_cospectral,
            "nns_nl_cospectral": self.nns_nl_cospectral,
        })
    }
}

pub fn conjecture_probe(
    side: ProbeSide,
    fixed: &Graph,
    pair: (&Graph, &Graph),
) -> Result<ProbeReport> {
    require_regular_cospectral(pair.0, pair.1, true, "probe pair")?;
    let (ns_left, ns_right, nns_left, nns_right) = match side {
        ProbeSide::RightPair => (
            ns_join(fixed, pair.0),
            ns_join(fixed, pair.1),
            nns_join(fixed, pair.0),
            nns_join(fixed, pair.1),
        ),
        ProbeSide::LeftPair => (
            ns_join(pair.0, fixed),
            ns_join(pair.1, fixed),
            nns_join(pair.0, fixed),
            nns_join(pair.1, fixed),
        ),
    };
    Ok(ProbeReport {
        side,
        fixed: fixed.clone(),
        pair: (pair.0.clone(), pair.1.clone()),
        ns_nl_cospectral: are_cospectral_exact(
            &ns_left,
            &ns_right,
            MatrixKind::NormalizedLaplacian,
        )?,
        nns_nl_cospectral: are_cospectral_exact(
            &nns_left,
            &nns_right,
            MatrixKind::NormalizedLaplacian,
        )?,
    })
}
