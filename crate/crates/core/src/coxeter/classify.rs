use std::fmt;

use super::catalog::identify_family;
use super::CoxeterGraph;
use crate::numfield::FieldElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Spherical,
    Affine,
    Other,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Spherical => "spherical",
            Kind::Affine => "affine",
            Kind::Other => "other",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    /// Positive semidefinite with a nontrivial kernel.
    Degenerate,
    Indefinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentClass {
    pub vertices: Vec<usize>,
    pub kind: Kind,
    pub family: Option<String>,
    /// Rank of the Gram matrix restricted to the component.
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kind: Kind,
    pub components: Vec<ComponentClass>,
}

/// Symmetric elimination with positive diagonal pivots.
///
/// Returns the definiteness and, when the matrix is positive semidefinite,
/// its rank (the number of pivots); for indefinite input the rank is that of
/// the pivots taken before the sign failure and should not be relied on.
pub fn definiteness(matrix: &[Vec<FieldElement>]) -> (Definiteness, usize) {
    let mut a: Vec<Vec<FieldElement>> = matrix.to_vec();
    let mut live: Vec<usize> = (0..a.len()).collect();
    let mut pivots = 0;
    loop {
        if live.is_empty() {
            return (Definiteness::PositiveDefinite, pivots);
        }
        if live.iter().any(|&i| a[i][i].is_negative()) {
            return (Definiteness::Indefinite, pivots);
        }
        let Some(pos) = live.iter().position(|&i| a[i][i].is_positive()) else {
            // zero diagonal: semidefinite only if the whole block vanishes
            let zero = live.iter().all(|&i| live.iter().all(|&j| a[i][j].is_zero()));
            return if zero {
                (Definiteness::Degenerate, pivots)
            } else {
                (Definiteness::Indefinite, pivots)
            };
        };
        let p = live.remove(pos);
        let inv = a[p][p].inv().expect("positive pivot");
        for &i in &live {
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] * &inv;
            for &j in &live {
                if !a[p][j].is_zero() {
                    a[i][j] = &a[i][j] - &(&f * &a[p][j]);
                }
            }
        }
        pivots += 1;
    }
}

/// Rank over the field by Gaussian elimination.
pub fn gram_rank(matrix: &[Vec<FieldElement>]) -> usize {
    let mut a: Vec<Vec<FieldElement>> = matrix.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, r);
        let inv = a[rank][c].inv().expect("nonzero pivot");
        for r in rank + 1..rows {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] * &inv;
            for k in c..cols {
                if !a[rank][k].is_zero() {
                    a[r][k] = &a[r][k] - &(&f * &a[rank][k]);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn classify(g: &CoxeterGraph) -> Classification {
    let mut components = Vec::new();
    for vertices in g.components() {
        let block: Vec<Vec<FieldElement>> = vertices
            .iter()
            .map(|&i| vertices.iter().map(|&j| g.gram()[i][j].clone()).collect())
            .collect();
        let (def, pivots) = definiteness(&block);
        let kind = match def {
            Definiteness::PositiveDefinite => Kind::Spherical,
            Definiteness::Degenerate => Kind::Affine,
            Definiteness::Indefinite => Kind::Other,
        };
        let rank = if kind == Kind::Other { gram_rank(&block) } else { pivots };
        let family = if kind == Kind::Other {
            None
        } else {
            let labels: Vec<Vec<_>> = vertices
                .iter()
                .map(|&i| vertices.iter().map(|&j| g.label(i, j)).collect())
                .collect();
            identify_family(&labels)
        };
        components.push(ComponentClass {
            vertices,
            kind,
            family,
            rank,
        });
    }
    let kind = if components.iter().all(|c| c.kind == Kind::Spherical) {
        Kind::Spherical
    } else if components.iter().all(|c| c.kind != Kind::Other) {
        Kind::Affine
    } else {
        Kind::Other
    };
    Classification { kind, components }
}

impl Classification {
    /// Rank of the whole Gram matrix, valid for spherical and affine graphs.
    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::parse_graph;
    use crate::numfield::FieldContext;

    #[test]
    fn spec_examples() {
        assert_eq!(classify(&parse_graph("family A 3").unwrap()).kind, Kind::Spherical);

        let tri = parse_graph("vertices a b c\nedge a b 3\nedge b c 3\nedge a c 3").unwrap();
        let c = classify(&tri);
        assert_eq!(c.kind, Kind::Affine);
        assert_eq!(c.components[0].family.as_deref(), Some("tA2"));
        assert_eq!(c.rank(), 2);

        let tri = parse_graph("vertices a b c\nedge a b 3\nedge b c 3\nedge a c 4").unwrap();
        assert_eq!(classify(&tri).kind, Kind::Other);
    }

    #[test]
    fn mixed_components() {
        let g = parse_graph("family A 2\nfamily tA 1").unwrap();
        let c = classify(&g);
        assert_eq!(c.kind, Kind::Affine);
        assert_eq!(c.components.len(), 2);
        assert_eq!(c.components[1].family.as_deref(), Some("tA1"));

        let g = parse_graph("vertices a b c\nedge a b inf\nedge b c inf").unwrap();
        assert_eq!(classify(&g).kind, Kind::Other);

        let empty = parse_graph("").unwrap();
        assert_eq!(classify(&empty).kind, Kind::Spherical);
    }

    #[test]
    fn permutation_invariance() {
        let a = parse_graph("vertices a b c d\nedge a b 3\nedge b c 4\nedge c d 3").unwrap();
        let b = parse_graph("vertices d c a b\nedge a b 3\nedge b c 4\nedge c d 3").unwrap();
        let (ca, cb) = (classify(&a), classify(&b));
        assert_eq!(ca.kind, Kind::Spherical);
        assert_eq!(ca.components[0].family, cb.components[0].family);
        assert_eq!(ca.components[0].family.as_deref(), Some("F4"));
    }

    #[test]
    fn ranks() {
        let ctx = FieldContext::for_labels([]);
        let m = |rows: &[[i64; 3]]| -> Vec<Vec<FieldElement>> {
            rows.iter()
                .map(|r| r.iter().map(|&x| FieldElement::from_int(&ctx, x)).collect())
                .collect()
        };
        assert_eq!(gram_rank(&m(&[[1, 2, 3], [2, 4, 6], [0, 0, 1]])), 2);
        assert_eq!(definiteness(&m(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]])).0, Definiteness::Indefinite);
        assert_eq!(definiteness(&m(&[[1, 1, 0], [1, 1, 0], [0, 0, 0]])), (Definiteness::Degenerate, 1));
    }
}
