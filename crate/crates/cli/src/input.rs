//! Graph sources: edge-list or graph6 files, graph6 strings and family specs.

use edgedeg::formats::{parse_edge_list, parse_graph6};
use edgedeg::{Error, Graph, Result};

/// `path:7`, `cycle:6`, `kbipartite:3,2`, `star:4`, `complete:5`, `empty:3`, `trianglestar:2`.
pub fn parse_family(spec: &str) -> Result<Graph> {
    let bad = || Error::InvalidFamilyParameter(spec.to_string());
    let (name, args) = spec.split_once(':').ok_or_else(bad)?;
    let nums: Vec<usize> = args
        .split(',')
        .map(|a| a.trim().parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match (name.trim().to_ascii_lowercase().as_str(), nums.as_slice()) {
        ("path", [n]) => Graph::path(*n),
        ("cycle", [n]) => Graph::cycle(*n),
        ("kbipartite" | "complete-bipartite", [a, b]) => Graph::complete_bipartite(*a, *b),
        ("star", [k]) => Graph::star(*k),
        ("complete", [n]) => Graph::complete(*n),
        ("empty", [n]) => Graph::empty(*n),
        ("trianglestar" | "triangle-star", [t]) => Graph::triangle_star(*t),
        _ => Err(bad()),
    }
}

/// A file holds either one edge list (`n m` header) or graph6 strings, one per line.
pub fn parse_file_contents(text: &str) -> Result<Vec<Graph>> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    let Some(first) = first else {
        return Err(Error::Parse {
            offset: 0,
            message: "input contains no graph".into(),
        });
    };
    let looks_like_header = first.split_whitespace().count() == 2
        && first.split_whitespace().all(|f| f.bytes().all(|b| b.is_ascii_digit()));
    if looks_like_header {
        return Ok(vec![parse_edge_list(text)?]);
    }
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse_family("cycle:6").unwrap(), Graph::cycle(6).unwrap());
        assert_eq!(parse_family("kbipartite:3,2").unwrap(), Graph::complete_bipartite(3, 2).unwrap());
        assert_eq!(parse_family("trianglestar:2").unwrap(), Graph::triangle_star(2).unwrap());
        for bad in ["cycle", "cycle:x", "path:1,2", "wheel:5"] {
            assert!(matches!(parse_family(bad), Err(Error::InvalidFamilyParameter(_))), "{bad}");
        }
    }

    #[test]
    fn file_formats() {
        let el = parse_file_contents("# comment\n3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(el, vec![Graph::path(3).unwrap()]);
        let g6 = parse_file_contents("Bw\nDqK\n").unwrap();
        assert_eq!(g6.len(), 2);
        assert!(parse_file_contents("\n# nothing\n").is_err());
    }
}
