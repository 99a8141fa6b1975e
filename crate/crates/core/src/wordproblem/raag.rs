//! Word problem in Artin groups whose labels are all 2 or ∞.

use crate::coxeter::{CoxeterGraph, Label};
use crate::error::{Error, Result};

pub fn is_raag(g: &CoxeterGraph) -> bool {
    g.edges()
        .iter()
        .all(|&(_, _, l)| matches!(l, Label::Finite(2) | Label::Infinite))
}

fn commute(g: &CoxeterGraph, a: usize, b: usize) -> bool {
    a == b || g.label(a, b) == Label::Finite(2)
}

/// Reduced word: a letter cancels against the nearest inverse it can be
/// shuffled next to. The result is empty iff the element is trivial.
pub fn reduce(g: &CoxeterGraph, word: &[(usize, i8)]) -> Result<Vec<(usize, i8)>> {
    if !is_raag(g) {
        return Err(Error::UnsupportedType("labels other than 2 and inf".into()));
    }
    let mut out: Vec<(usize, i8)> = Vec::with_capacity(word.len());
    for &(s, e) in word {
        let mut hit = None;
        for (i, &(t, f)) in out.iter().enumerate().rev() {
            if t == s {
                if f == -e {
                    hit = Some(i);
                }
                break;
            }
            if !commute(g, s, t) {
                break;
            }
        }
        match hit {
            Some(i) => {
                out.remove(i);
            }
            None => out.push((s, e)),
        }
    }
    Ok(out)
}

/// Lexicographically least word among the shuffles of the reduced word.
pub fn normal_form(g: &CoxeterGraph, word: &[(usize, i8)]) -> Result<Vec<(usize, i8)>> {
    let mut rest = reduce(g, word)?;
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..rest.len() {
            let (s, _) = rest[i];
            if rest[..i].iter().all(|&(t, _)| t != s && commute(g, s, t))
                && best.is_none_or(|b| rest[i] < rest[b])
            {
                best = Some(i);
            }
        }
        out.push(rest.remove(best.expect("first letter is always movable")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::parse_graph;

    #[test]
    fn free_and_commuting() {
        let g = parse_graph("vertices a b c\nedge a b inf\nedge b c 2\nedge a c inf").unwrap();
        assert!(reduce(&g, &[(0, 1), (1, 1), (0, -1), (1, -1)]).unwrap().len() == 4);
        assert!(reduce(&g, &[(1, 1), (2, 1), (1, -1), (2, -1)]).unwrap().is_empty());
        assert!(reduce(&g, &[(0, 1), (1, 1), (2, 1), (1, -1), (2, -1), (0, -1)]).unwrap().is_empty());
        let a = normal_form(&g, &[(2, 1), (1, 1), (0, 1)]).unwrap();
        let b = normal_form(&g, &[(1, 1), (2, 1), (0, 1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, vec![(1, 1), (2, 1), (0, 1)]);
    }

    #[test]
    fn rejects_other_labels() {
        let g = parse_graph("family A 2").unwrap();
        assert!(reduce(&g, &[(0, 1)]).is_err());
    }
}
