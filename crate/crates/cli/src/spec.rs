//! Graph spec mini-language: family names (Kn, Cn, Pn, En, Ka,b,
//! petersen), "+" for disjoint union, and "g6:<text>" literals.

use anyhow::{anyhow, bail, Result};
use spectrajoin::graph::{make_family, Family, Graph};

pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let mut parts = spec.split('+').map(str::trim);
    let first = parts
        .next()
        .filter(|p| !p.is_empty())
        .ok_or_else(|| anyhow!("empty graph spec"))?;
    let mut g = parse_atom(first)?;
    for part in parts {
        if part.is_empty() {
            bail!("empty term in graph spec `{spec}`");
        }
        g = g.disjoint_union(&parse_atom(part)?);
    }
    Ok(g)
}

fn parse_atom(atom: &str) -> Result<Graph> {
    if let Some(text) = atom.strip_prefix("g6:") {
        return Ok(spectrajoin::graph6::decode(text)?);
    }
    if atom.eq_ignore_ascii_case("petersen") {
        return Ok(make_family(&Family::Petersen)?);
    }
    let (head, rest) = atom.split_at(1);
    let family = match head.to_ascii_uppercase().as_str() {
        "K" => {
            if let Some((a, b)) = rest.split_once(',') {
                Family::CompleteBipartite(parse_size(atom, a)?, parse_size(atom, b)?)
            } else {
                Family::Complete(parse_size(atom, rest)?)
            }
        }
        "P" => Family::Path(parse_size(atom, rest)?),
        "C" => Family::Cycle(parse_size(atom, rest)?),
        "E" => Family::Empty(parse_size(atom, rest)?),
        _ => bail!("unknown graph spec `{atom}` (expected Kn, Ka,b, Pn, Cn, En, petersen or g6:...)"),
    };
    Ok(make_family(&family)?)
}

fn parse_size(atom: &str, s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| anyhow!("bad size `{s}` in graph spec `{atom}`"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_and_unions() {
        assert_eq!(parse_graph_spec("K3").unwrap().edge_count(), 3);
        assert_eq!(parse_graph_spec("K1,4").unwrap().degrees(), vec![4, 1, 1, 1, 1]);
        let f = parse_graph_spec("C4+K1").unwrap();
        assert_eq!((f.n(), f.edge_count()), (5, 4));
        assert_eq!(parse_graph_spec("petersen").unwrap().n(), 10);
        assert_eq!(parse_graph_spec("E3").unwrap().edge_count(), 0);
        assert_eq!(parse_graph_spec("P2+P3+K2").unwrap().n(), 7);
    }

    #[test]
    fn graph6_literals() {
        let k2 = parse_graph_spec("g6:A_").unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        assert!(parse_graph_spec("g6:").is_err());
    }

    #[test]
    fn rejections() {
        assert!(parse_graph_spec("").is_err());
        assert!(parse_graph_spec("X4").is_err());
        assert!(parse_graph_spec("K0").is_err());
        assert!(parse_graph_spec("Kx").is_err());
        assert!(parse_graph_spec("C4+").is_err());
    }
}
