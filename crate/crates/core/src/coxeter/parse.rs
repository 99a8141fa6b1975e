use std::sync::Arc;

use super::catalog::family_vertices;
use super::{CoxeterGraph, Label};
use crate::error::{Error, Result};

/// Parses the line-oriented graph format:
///
/// ```text
/// # comment
/// vertices a b c
/// edge a b 4
/// edge b c inf
/// family tA 2
/// ```
///
/// `;` also separates statements. Family stanzas name their vertices
/// `s1, s2, …`, continuing the count of vertices declared so far.
pub fn parse_graph(text: &str) -> Result<Arc<CoxeterGraph>> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<(usize, usize, Label)> = Vec::new();
    let mut pending: Vec<(String, String, Label)> = Vec::new();

    for raw in text.split(['\n', ';']) {
        let line = raw.split('#').next().unwrap_or("").trim();
        let mut tokens = line.split_whitespace();
        let Some(head) = tokens.next() else { continue };
        let rest: Vec<&str> = tokens.collect();
        match head {
            "vertices" => {
                if rest.is_empty() {
                    return Err(Error::Parse("`vertices` needs at least one name".into()));
                }
                for name in rest {
                    if vertices.iter().any(|v| v == name) {
                        return Err(Error::DuplicateVertex(name.to_string()));
                    }
                    vertices.push(name.to_string());
                }
            }
            "edge" => {
                let [a, b, m] = rest[..] else {
                    return Err(Error::Parse(format!("expected `edge <a> <b> <m>`, got `{line}`")));
                };
                pending.push((a.to_string(), b.to_string(), Label::parse(m)?));
            }
            "family" => {
                let [code, n] = rest[..] else {
                    return Err(Error::Parse(format!("expected `family <code> <n>`, got `{line}`")));
                };
                let n: u32 = n
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad family parameter `{n}`")))?;
                let offset = vertices.len();
                let (names, fam) = family_vertices(code, n, offset + 1)?;
                for name in names {
                    if vertices.contains(&name) {
                        return Err(Error::DuplicateVertex(name));
                    }
                    vertices.push(name);
                }
                edges.extend(fam.into_iter().map(|(a, b, m)| (a + offset, b + offset, m)));
            }
            other => return Err(Error::Parse(format!("unknown statement `{other}`"))),
        }
    }

    let index = |name: &str| {
        vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    };
    for (a, b, m) in &pending {
        let (i, j) = (index(a)?, index(b)?);
        if i == j {
            return Err(Error::Parse(format!("loop edge on `{a}`")));
        }
        edges.push((i, j, *m));
    }
    CoxeterGraph::new(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_and_edges() {
        let g = parse_graph("family A 2").unwrap();
        assert_eq!(g.vertices(), ["s1", "s2"]);
        assert_eq!(g.label(0, 1), Label::Finite(3));

        let g = parse_graph("family tA 2").unwrap();
        assert_eq!(g.rank(), 3);
        assert!(g.edges().iter().all(|e| e.2 == Label::Finite(3)));
        assert_eq!(g.edges().len(), 3);

        let g = parse_graph("vertices a b; edge a b inf").unwrap();
        assert_eq!(g.label(0, 1), Label::Infinite);

        let g = parse_graph("family A 2\nfamily A 1  # disjoint union").unwrap();
        assert_eq!(g.vertices(), ["s1", "s2", "s3"]);
        assert_eq!(g.label(1, 2), Label::Finite(2));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_graph("vertices a b\nedge a c 3").unwrap_err(),
            Error::UnknownVertex("c".into())
        );
        assert!(matches!(parse_graph("vertices a b\nedge a b 1"), Err(Error::InvalidLabel(_))));
        assert!(matches!(
            parse_graph("vertices a b\nedge a b 3\nedge b a 4"),
            Err(Error::ConflictingEdge(..))
        ));
        assert!(parse_graph("vertices a b\nedge a b 3\nedge b a 3").is_ok());
        assert!(matches!(parse_graph("family Q 3"), Err(Error::UnknownFamily(_))));
        assert!(matches!(parse_graph("vertices a a"), Err(Error::DuplicateVertex(_))));
        assert!(matches!(parse_graph("frobnicate"), Err(Error::Parse(_))));
    }
}
