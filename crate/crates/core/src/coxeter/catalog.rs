//! Named connected graphs of spherical and affine type.

use std::sync::Arc;

use super::{CoxeterGraph, Label};
use crate::error::{Error, Result};

pub const FAMILY_CODES: [&str; 14] = [
    "A", "B", "D", "E", "F", "H", "I2", "tA", "tB", "tC", "tD", "tE", "tF", "tG",
];

type Edges = Vec<(usize, usize, Label)>;

fn path(len: usize) -> Edges {
    (1..len).map(|i| (i - 1, i, Label::Finite(3))).collect()
}

fn relabel(mut edges: Edges, a: usize, b: usize, m: u32) -> Edges {
    for e in &mut edges {
        if (e.0, e.1) == (a, b) {
            e.2 = Label::Finite(m);
        }
    }
    edges
}

/// Vertex count and edges (0-based) of a catalogued family, or `None` when
/// the parameter is out of range for the family.
fn family_edges(code: &str, n: u32) -> Option<(usize, Edges)> {
    let k = n as usize;
    let three = Label::Finite(3);
    let shape = match code {
        "A" if k >= 1 => (k, path(k)),
        "B" if k >= 2 => (k, relabel(path(k), 0, 1, 4)),
        "D" if k >= 4 => {
            let mut e = path(k - 1);
            e.push((k - 3, k - 1, three));
            (k, e)
        }
        "E" if (6..=8).contains(&k) => {
            let mut e = path(k - 1);
            e.push((2, k - 1, three));
            (k, e)
        }
        "F" if k == 4 => (4, relabel(path(4), 1, 2, 4)),
        "H" if k == 3 || k == 4 => (k, relabel(path(k), 0, 1, 5)),
        "I2" if k >= 2 => (2, vec![(0, 1, Label::Finite(n))]),
        "tA" if k == 1 => (2, vec![(0, 1, Label::Infinite)]),
        "tA" if k >= 2 => {
            let mut e = path(k + 1);
            e.push((0, k, three));
            (k + 1, e)
        }
        "tB" if k >= 3 => {
            // fork s1, s2 on s3, then a path ending in a 4
            let mut e = vec![(0, 2, three), (1, 2, three)];
            e.extend((3..=k).map(|i| (i - 1, i, three)));
            (k + 1, relabel(e, k - 1, k, 4))
        }
        "tC" if k >= 2 => {
            let e = relabel(path(k + 1), 0, 1, 4);
            (k + 1, relabel(e, k - 1, k, 4))
        }
        "tD" if k >= 4 => {
            let mut e = vec![(0, 2, three), (1, 2, three)];
            e.extend((3..=k - 2).map(|i| (i - 1, i, three)));
            e.push((k - 2, k - 1, three));
            e.push((k - 2, k, three));
            (k + 1, e)
        }
        "tE" if k == 6 => {
            let mut e = path(5);
            e.push((2, 5, three));
            e.push((5, 6, three));
            (7, e)
        }
        "tE" if k == 7 => {
            let mut e = path(7);
            e.push((3, 7, three));
            (8, e)
        }
        "tE" if k == 8 => {
            let mut e = path(8);
            e.push((2, 8, three));
            (9, e)
        }
        "tF" if k == 4 => (5, relabel(path(5), 2, 3, 4)),
        "tG" if k == 2 => (3, relabel(path(3), 1, 2, 6)),
        _ => return None,
    };
    Some(shape)
}

/// The catalogued graph with vertices named `s{first}`, `s{first+1}`, ….
pub(crate) fn family_vertices(code: &str, n: u32, first: usize) -> Result<(Vec<String>, Edges)> {
    if !FAMILY_CODES.contains(&code) {
        return Err(Error::UnknownFamily(code.to_string()));
    }
    let (count, edges) =
        family_edges(code, n).ok_or_else(|| Error::UnknownFamily(format!("{code} {n}")))?;
    let names = (0..count).map(|i| format!("s{}", first + i)).collect();
    Ok((names, edges))
}

pub fn family_graph(code: &str, n: u32) -> Result<Arc<CoxeterGraph>> {
    let (names, edges) = family_vertices(code, n, 1)?;
    CoxeterGraph::new(names, edges)
}

fn family_name(code: &str, n: u32) -> String {
    if code == "I2" {
        format!("I2({n})")
    } else {
        format!("{code}{n}")
    }
}

/// Candidates with `rank` vertices, most specific name first.
fn candidates(rank: usize, labels: &[Vec<Label>]) -> Vec<(String, Edges)> {
    let mut out = Vec::new();
    let mut push = |code: &str, n: u32| {
        if let Some((count, edges)) = family_edges(code, n) {
            if count == rank {
                out.push((family_name(code, n), edges));
            }
        }
    };
    let r = rank as u32;
    for code in ["A", "B", "D", "E", "F", "H"] {
        push(code, r);
    }
    if rank == 2 {
        if let Label::Finite(m) = labels[0][1] {
            if m >= 5 {
                push("I2", m);
            }
        }
    }
    if r >= 2 {
        for code in ["tA", "tB", "tC", "tD", "tE", "tF", "tG"] {
            push(code, r - 1);
        }
    }
    out
}

fn signature(labels: &[Vec<Label>], v: usize) -> Vec<Label> {
    let mut sig: Vec<Label> = (0..labels.len())
        .filter(|&w| w != v && labels[v][w] != Label::Finite(2))
        .map(|w| labels[v][w])
        .collect();
    sig.sort();
    sig
}

/// Labeled-graph isomorphism by backtracking with degree-signature pruning.
fn isomorphic(a: &[Vec<Label>], b: &[Vec<Label>]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let sa: Vec<_> = (0..n).map(|v| signature(a, v)).collect();
    let sb: Vec<_> = (0..n).map(|v| signature(b, v)).collect();
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort();
    kb.sort();
    if ka != kb {
        return false;
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        v: usize,
        a: &[Vec<Label>],
        b: &[Vec<Label>],
        sa: &[Vec<Label>],
        sb: &[Vec<Label>],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if v == a.len() {
            return true;
        }
        for w in 0..b.len() {
            if used[w] || sa[v] != sb[w] {
                continue;
            }
            if (0..v).any(|u| a[u][v] != b[image[u]][w]) {
                continue;
            }
            image[v] = w;
            used[w] = true;
            if extend(v + 1, a, b, sa, sb, image, used) {
                return true;
            }
            used[w] = false;
        }
        false
    }

    extend(0, a, b, &sa, &sb, &mut image, &mut used)
}

/// Family name of a connected graph with at most 10 vertices, if catalogued.
pub fn identify_family(labels: &[Vec<Label>]) -> Option<String> {
    let rank = labels.len();
    if rank == 0 || rank > 10 {
        return None;
    }
    for (name, edges) in candidates(rank, labels) {
        let mut target = vec![vec![Label::Finite(2); rank]; rank];
        for (i, row) in target.iter_mut().enumerate() {
            row[i] = Label::Finite(1);
        }
        for (x, y, m) in edges {
            target[x][y] = m;
            target[y][x] = m;
        }
        if isomorphic(labels, &target) {
            return Some(name);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{classify, Kind};

    #[test]
    fn vertex_counts() {
        for (code, n, count) in [
            ("A", 3, 3),
            ("D", 5, 5),
            ("E", 8, 8),
            ("I2", 7, 2),
            ("tA", 1, 2),
            ("tA", 3, 4),
            ("tB", 3, 4),
            ("tC", 2, 3),
            ("tD", 4, 5),
            ("tD", 6, 7),
            ("tE", 6, 7),
            ("tE", 8, 9),
            ("tF", 4, 5),
            ("tG", 2, 3),
        ] {
            assert_eq!(family_graph(code, n).unwrap().rank(), count, "{code}{n}");
        }
        assert!(family_graph("D", 3).is_err());
        assert!(family_graph("X", 3).is_err());
    }

    #[test]
    fn catalog_kinds() {
        for code in ["A", "B", "D", "E", "F", "H"] {
            for n in 1..=8 {
                if let Ok(g) = family_graph(code, n) {
                    let c = classify(&g);
                    assert_eq!(c.kind, Kind::Spherical, "{code}{n}");
                    assert_eq!(c.components[0].family.as_deref(), Some(family_name(code, n).as_str()));
                }
            }
        }
        for code in ["tA", "tB", "tC", "tD", "tE", "tF", "tG"] {
            for n in 1..=8 {
                if let Ok(g) = family_graph(code, n) {
                    let c = classify(&g);
                    assert_eq!(c.kind, Kind::Affine, "{code}{n}");
                    assert_eq!(c.components.len(), 1);
                }
            }
        }
    }

    #[test]
    fn isomorphism_under_relabeling() {
        let g = family_graph("D", 4).unwrap();
        let perm = [3, 1, 0, 2];
        let labels: Vec<Vec<Label>> = perm
            .iter()
            .map(|&i| perm.iter().map(|&j| g.label(i, j)).collect())
            .collect();
        assert_eq!(identify_family(&labels).as_deref(), Some("D4"));
        assert_eq!(
            identify_family(family_graph("I2", 5).unwrap().labels()).as_deref(),
            Some("I2(5)")
        );
        assert_eq!(identify_family(family_graph("I2", 3).unwrap().labels()).as_deref(), Some("A2"));
    }
}
