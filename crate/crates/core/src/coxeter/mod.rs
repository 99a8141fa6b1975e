//! Coxeter graphs and the canonical linear representation of `W[Γ]`.
//!
//! Elements of `W` are stored as exact matrices over the graph's number field
//! acting on `V = span(Π)`; column `j` holds the coordinates of `w(α_j)`.
//! Equality of elements is matrix equality, which is sound because the
//! canonical representation is faithful.

mod catalog;
mod classify;
mod parse;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numfield::{coxeter_value, FieldContext, FieldElement, Sign};

pub use catalog::{family_graph, identify_family, FAMILY_CODES};
pub use classify::{classify, definiteness, gram_rank, Classification, ComponentClass, Definiteness, Kind};
pub use parse::parse_graph;

/// A vector of `V` in the basis of simple roots.
pub type Vector = Vec<FieldElement>;

/// An off-diagonal Coxeter label; the diagonal is `Finite(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Label::Infinite
    }

    pub fn parse(text: &str) -> Result<Label> {
        match text {
            "inf" | "∞" | "infinity" => Ok(Label::Infinite),
            _ => match text.parse::<u32>() {
                Ok(m) if m >= 2 => Ok(Label::Finite(m)),
                _ => Err(Error::InvalidLabel(text.to_string())),
            },
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => f.write_str("inf"),
        }
    }
}

/// A finite Coxeter graph: vertex names plus the symmetric label matrix.
pub struct CoxeterGraph {
    vertices: Vec<String>,
    labels: Vec<Vec<Label>>,
    ctx: Arc<FieldContext>,
    gram: Vec<Vec<FieldElement>>,
}

impl fmt::Debug for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterGraph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges())
            .finish()
    }
}

impl PartialEq for CoxeterGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.labels == other.labels
    }
}

impl Eq for CoxeterGraph {}

impl CoxeterGraph {
    /// Builds a graph from vertex names and the non-default edges; pairs not
    /// listed get label 2.
    pub fn new<I>(vertices: Vec<String>, edges: I) -> Result<Arc<CoxeterGraph>>
    where
        I: IntoIterator<Item = (usize, usize, Label)>,
    {
        let n = vertices.len();
        let mut labels = vec![vec![Label::Finite(2); n]; n];
        for (i, row) in labels.iter_mut().enumerate() {
            row[i] = Label::Finite(1);
        }
        let mut explicit = vec![vec![false; n]; n];
        for (a, b, m) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::Parse(format!("bad edge {a}-{b}")));
            }
            if let Label::Finite(k) = m {
                if k < 2 {
                    return Err(Error::InvalidLabel(k.to_string()));
                }
            }
            if explicit[a][b] && labels[a][b] != m {
                return Err(Error::ConflictingEdge(vertices[a].clone(), vertices[b].clone()));
            }
            explicit[a][b] = true;
            explicit[b][a] = true;
            labels[a][b] = m;
            labels[b][a] = m;
        }
        Self::from_matrix(vertices, labels)
    }

    pub fn from_matrix(vertices: Vec<String>, labels: Vec<Vec<Label>>) -> Result<Arc<CoxeterGraph>> {
        let n = vertices.len();
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        if labels.len() != n || labels.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("label matrix has the wrong shape".into()));
        }
        for i in 0..n {
            if labels[i][i] != Label::Finite(1) {
                return Err(Error::InvalidLabel(labels[i][i].to_string()));
            }
            for j in 0..n {
                if labels[i][j] != labels[j][i] {
                    return Err(Error::ConflictingEdge(vertices[i].clone(), vertices[j].clone()));
                }
                if i != j && matches!(labels[i][j], Label::Finite(m) if m < 2) {
                    return Err(Error::InvalidLabel(labels[i][j].to_string()));
                }
            }
        }
        let finite: BTreeSet<u32> = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .filter_map(|(i, j)| labels[i][j].finite())
            .collect();
        let ctx = FieldContext::for_labels(finite);
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            FieldElement::from_int(&ctx, 2)
                        } else {
                            coxeter_value(labels[i][j].finite(), &ctx).expect("label divides L")
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Arc::new(CoxeterGraph {
            vertices,
            labels,
            ctx,
            gram,
        }))
    }

    pub fn rank(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn label(&self, s: usize, t: usize) -> Label {
        self.labels[s][t]
    }

    pub fn labels(&self) -> &[Vec<Label>] {
        &self.labels
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    /// The Gram matrix `(⟨α_s, α_t⟩)` of the canonical bilinear form.
    pub fn gram(&self) -> &[Vec<FieldElement>] {
        &self.gram
    }

    /// Off-diagonal edges with label other than 2, as `(s, t, m)` with `s < t`.
    pub fn edges(&self) -> Vec<(usize, usize, Label)> {
        let n = self.rank();
        let mut out = Vec::new();
        for s in 0..n {
            for t in s + 1..n {
                if self.labels[s][t] != Label::Finite(2) {
                    out.push((s, t, self.labels[s][t]));
                }
            }
        }
        out
    }

    /// Finite off-diagonal labels occurring anywhere in the matrix (including 2).
    pub fn finite_labels(&self) -> BTreeSet<u32> {
        let n = self.rank();
        let mut out = BTreeSet::new();
        for s in 0..n {
            for t in s + 1..n {
                if let Label::Finite(m) = self.labels[s][t] {
                    out.insert(m);
                }
            }
        }
        out
    }

    pub fn is_simply_laced(&self) -> bool {
        let n = self.rank();
        (0..n).all(|s| (0..n).all(|t| s == t || matches!(self.labels[s][t], Label::Finite(2 | 3))))
    }

    /// The full subgraph on the given vertices, in the given order.
    pub fn subgraph(&self, indices: &[usize]) -> Arc<CoxeterGraph> {
        let vertices = indices.iter().map(|&i| self.vertices[i].clone()).collect();
        let labels = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| self.labels[i][j]).collect())
            .collect();
        Self::from_matrix(vertices, labels).expect("subgraph of a valid graph")
    }

    /// Connected components of the graph whose edges are labels other than 2,
    /// each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                for w in 0..n {
                    if comp[w] == usize::MAX && self.labels[v][w] != Label::Finite(2) {
                        comp[w] = id;
                        members.push(w);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// `⟨u, v⟩` for the canonical bilinear form.
    pub fn pairing(&self, u: &[FieldElement], v: &[FieldElement]) -> FieldElement {
        let n = self.rank();
        let mut acc = FieldElement::zero(&self.ctx);
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            let mut row = FieldElement::zero(&self.ctx);
            for j in 0..n {
                if !v[j].is_zero() && !self.gram[i][j].is_zero() {
                    row = row + &self.gram[i][j] * &v[j];
                }
            }
            acc = acc + &u[i] * &row;
        }
        acc
    }

    /// `⟨v, α_s⟩`.
    pub fn pairing_with_simple(&self, v: &[FieldElement], s: usize) -> FieldElement {
        let mut acc = FieldElement::zero(&self.ctx);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() && !self.gram[i][s].is_zero() {
                acc = acc + c * &self.gram[i][s];
            }
        }
        acc
    }

    pub fn simple_root(&self, s: usize) -> Vector {
        let mut v = vec![FieldElement::zero(&self.ctx); self.rank()];
        v[s] = FieldElement::one(&self.ctx);
        v
    }

    pub fn zero_vector(&self) -> Vector {
        vec![FieldElement::zero(&self.ctx); self.rank()]
    }

    /// Resolves a sequence of vertex names.
    pub fn word(&self, names: &[&str]) -> Result<Vec<usize>> {
        names.iter().map(|n| self.vertex_index(n)).collect()
    }

    pub fn render_word(&self, word: &[usize]) -> String {
        word.iter()
            .map(|&s| self.vertices[s].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// `s(v) = v - ⟨v, α_s⟩ α_s`.
pub fn generator_action(g: &CoxeterGraph, s: usize, v: &[FieldElement]) -> Vector {
    let c = g.pairing_with_simple(v, s);
    let mut out = v.to_vec();
    if !c.is_zero() {
        out[s] = &out[s] - &c;
    }
    out
}

/// Sign of a vector known to be a root: the sign of its first nonzero coordinate.
pub fn root_sign(v: &[FieldElement]) -> Sign {
    v.iter()
        .find(|c| !c.is_zero())
        .map(FieldElement::sign)
        .unwrap_or(Sign::Zero)
}

/// An element of `W[Γ]` as an exact matrix, with a (not necessarily reduced)
/// word representing it.
#[derive(Clone)]
pub struct WElement {
    graph: Arc<CoxeterGraph>,
    /// Row-major; entry `(i, j)` is the `α_i`-coordinate of `w(α_j)`.
    matrix: Vec<FieldElement>,
    witness: Vec<usize>,
}

impl fmt::Debug for WElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WElement[{}]", self.graph.render_word(&self.witness))
    }
}

impl PartialEq for WElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WElement {}

impl std::hash::Hash for WElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl WElement {
    pub fn identity(graph: &Arc<CoxeterGraph>) -> WElement {
        let n = graph.rank();
        let ctx = graph.context();
        let matrix = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    FieldElement::one(ctx)
                } else {
                    FieldElement::zero(ctx)
                }
            })
            .collect();
        WElement {
            graph: graph.clone(),
            matrix,
            witness: Vec::new(),
        }
    }

    /// Product of generator matrices along `word` (indices into the vertex list).
    pub fn from_word(graph: &Arc<CoxeterGraph>, word: &[usize]) -> WElement {
        let mut w = Self::identity(graph);
        for &s in word {
            w.mul_generator_right(s);
        }
        w
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn witness(&self) -> &[usize] {
        &self.witness
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElement {
        &self.matrix[i * self.graph.rank() + j]
    }

    pub fn matrix_entries(&self) -> &[FieldElement] {
        &self.matrix
    }

    /// `w(α_s)`, column `s` of the matrix.
    pub fn image_of_simple(&self, s: usize) -> Vector {
        let n = self.graph.rank();
        (0..n).map(|i| self.matrix[i * n + s].clone()).collect()
    }

    pub fn apply(&self, v: &[FieldElement]) -> Vector {
        let n = self.graph.rank();
        let ctx = self.graph.context();
        (0..n)
            .map(|i| {
                let mut acc = FieldElement::zero(ctx);
                for (j, c) in v.iter().enumerate() {
                    let m = &self.matrix[i * n + j];
                    if !c.is_zero() && !m.is_zero() {
                        acc = acc + m * c;
                    }
                }
                acc
            })
            .collect()
    }

    /// `w := w·s`: column `j` becomes `col_j - ⟨α_j, α_s⟩ col_s`.
    pub fn mul_generator_right(&mut self, s: usize) {
        let n = self.graph.rank();
        let col_s: Vec<FieldElement> = (0..n).map(|i| self.matrix[i * n + s].clone()).collect();
        for j in 0..n {
            let a = &self.graph.gram[j][s];
            if a.is_zero() {
                continue;
            }
            for i in 0..n {
                if !col_s[i].is_zero() {
                    let k = i * n + j;
                    self.matrix[k] = &self.matrix[k] - &(a * &col_s[i]);
                }
            }
        }
        self.witness.push(s);
    }

    /// `w := s·w`: row `s` becomes `row_s - (⟨col_j, α_s⟩)_j`.
    pub fn mul_generator_left(&mut self, s: usize) {
        let n = self.graph.rank();
        for j in 0..n {
            let col: Vec<FieldElement> = (0..n).map(|i| self.matrix[i * n + j].clone()).collect();
            let c = self.graph.pairing_with_simple(&col, s);
            if !c.is_zero() {
                let k = s * n + j;
                self.matrix[k] = &self.matrix[k] - &c;
            }
        }
        self.witness.insert(0, s);
    }

    pub fn times_generator(&self, s: usize) -> WElement {
        let mut w = self.clone();
        w.mul_generator_right(s);
        w
    }

    pub fn generator_times(&self, s: usize) -> WElement {
        let mut w = self.clone();
        w.mul_generator_left(s);
        w
    }

    pub fn mul(&self, other: &WElement) -> WElement {
        let n = self.graph.rank();
        let ctx = self.graph.context();
        let mut matrix = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = FieldElement::zero(ctx);
                for k in 0..n {
                    let (a, b) = (&self.matrix[i * n + k], &other.matrix[k * n + j]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                matrix.push(acc);
            }
        }
        let mut witness = self.witness.clone();
        witness.extend_from_slice(&other.witness);
        WElement {
            graph: self.graph.clone(),
            matrix,
            witness,
        }
    }

    pub fn inverse(&self) -> WElement {
        let word: Vec<usize> = self.witness.iter().rev().copied().collect();
        Self::from_word(&self.graph, &word)
    }

    pub fn is_identity(&self) -> bool {
        let n = self.graph.rank();
        self.matrix.iter().enumerate().all(|(k, e)| {
            if k / n == k % n {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }

    /// Whether `w(α_s)` is a negative root, i.e. `lg(ws) < lg(w)`.
    pub fn has_right_descent(&self, s: usize) -> bool {
        let n = self.graph.rank();
        (0..n)
            .map(|i| &self.matrix[i * n + s])
            .find(|c| !c.is_zero())
            .is_some_and(FieldElement::is_negative)
    }

    /// Length with respect to `S` and a reduced word, by the descent walk.
    pub fn length(&self) -> (usize, Vec<usize>) {
        let n = self.graph.rank();
        let mut w = self.clone();
        let mut steps = Vec::new();
        while !w.is_identity() {
            let s = (0..n)
                .find(|&s| w.has_right_descent(s))
                .expect("a nonidentity element has a right descent");
            w.mul_generator_right(s);
            steps.push(s);
        }
        steps.reverse();
        (steps.len(), steps)
    }

    /// Checks `Bᵀ G B = G`.
    pub fn preserves_form(&self) -> bool {
        let n = self.graph.rank();
        for a in 0..n {
            let ca = self.image_of_simple(a);
            for b in 0..n {
                let cb = self.image_of_simple(b);
                if self.graph.pairing(&ca, &cb) != self.graph.gram[a][b] {
                    return false;
                }
            }
        }
        true
    }
}

/// Resolves vertex names and multiplies the generator matrices.
pub fn element_of_word(g: &Arc<CoxeterGraph>, word: &[&str]) -> Result<WElement> {
    Ok(WElement::from_word(g, &g.word(word)?))
}

pub fn w_equal(a: &WElement, b: &WElement) -> Result<bool> {
    if !Arc::ptr_eq(&a.graph, &b.graph) && *a.graph != *b.graph {
        return Err(Error::GraphMismatch);
    }
    Ok(a.matrix == b.matrix)
}

/// The longest element of a finite Coxeter group, by the ascent walk.
pub fn longest_element(g: &Arc<CoxeterGraph>) -> Result<WElement> {
    let class = classify(g);
    if class.kind != Kind::Spherical {
        return Err(Error::NotSpherical(format!("{:?}", class.kind)));
    }
    let n = g.rank();
    let mut w = WElement::identity(g);
    while let Some(s) = (0..n).find(|&s| !w.has_right_descent(s)) {
        w.mul_generator_right(s);
    }
    debug_assert!(w.mul(&w).is_identity());
    Ok(w)
}

/// All elements of `W` in ShortLex order of their witness words, if there are
/// at most `cap` of them.
pub fn enumerate_w(g: &Arc<CoxeterGraph>, cap: usize) -> Result<Vec<WElement>> {
    assert!(cap > 0);
    let n = g.rank();
    let mut seen: HashMap<Vec<FieldElement>, ()> = HashMap::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    let id = WElement::identity(g);
    seen.insert(id.matrix.clone(), ());
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        for s in 0..n {
            let next = w.times_generator(s);
            if seen.contains_key(&next.matrix) {
                continue;
            }
            if seen.len() >= cap {
                return Err(Error::CapExceeded(cap));
            }
            seen.insert(next.matrix.clone(), ());
            queue.push_back(next);
        }
        out.push(w);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `Prod_L(a, b, m) = aba⋯` or `Prod_R(a, b, m) = ⋯bab`, both of length `m`.
pub fn alternating_product<T: Clone>(a: T, b: T, m: usize, side: Side) -> Vec<T> {
    match side {
        Side::Left => (0..m).map(|i| if i % 2 == 0 { a.clone() } else { b.clone() }).collect(),
        Side::Right => {
            let mut w = alternating_product(b, a, m, Side::Left);
            w.reverse();
            w
        }
    }
}

pub fn prod_left<T: Clone>(a: T, b: T, m: usize) -> Vec<T> {
    alternating_product(a, b, m, Side::Left)
}

pub fn prod_right<T: Clone>(a: T, b: T, m: usize) -> Vec<T> {
    alternating_product(a, b, m, Side::Right)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Arc<CoxeterGraph> {
        parse_graph("family A 2").unwrap()
    }

    fn b2() -> Arc<CoxeterGraph> {
        parse_graph("family B 2").unwrap()
    }

    #[test]
    fn gram_matrices() {
        let g = a2();
        let ctx = g.context();
        assert_eq!(g.gram()[0][1], FieldElement::from_int(ctx, -1));
        assert_eq!(g.gram()[0][0], FieldElement::from_int(ctx, 2));

        let g = b2();
        let theta = FieldElement::theta(g.context());
        assert_eq!(g.gram()[0][1], -theta);

        let g = parse_graph("family tA 1").unwrap();
        assert_eq!(g.gram()[0][1], FieldElement::from_int(g.context(), -2));
    }

    #[test]
    fn generator_actions() {
        let g = a2();
        let (s, t) = (0, 1);
        let minus = generator_action(&g, s, &g.simple_root(s));
        assert_eq!(minus, g.simple_root(s).iter().map(|c| -c).collect::<Vec<_>>());
        let sum = generator_action(&g, s, &g.simple_root(t));
        assert_eq!(sum, vec![FieldElement::one(g.context()); 2]);

        let g = parse_graph("vertices a b c\nedge a b 3").unwrap();
        let v = g.simple_root(2);
        assert_eq!(generator_action(&g, 0, &v), v);
    }

    #[test]
    fn words_and_equality() {
        let g = a2();
        assert!(element_of_word(&g, &[]).unwrap().is_identity());
        assert!(element_of_word(&g, &["s1", "s1"]).unwrap().is_identity());
        let sts = element_of_word(&g, &["s1", "s2", "s1"]).unwrap();
        let tst = element_of_word(&g, &["s2", "s1", "s2"]).unwrap();
        assert!(w_equal(&sts, &tst).unwrap());
        let s = element_of_word(&g, &["s1"]).unwrap();
        let t = element_of_word(&g, &["s2"]).unwrap();
        assert!(!w_equal(&s, &t).unwrap());
        assert!(element_of_word(&g, &["s3"]).is_err());

        let g = b2();
        let st4 = element_of_word(&g, &["s1", "s2", "s1", "s2", "s1", "s2", "s1", "s2"]).unwrap();
        assert!(st4.is_identity());
        let sts = element_of_word(&g, &["s1", "s2", "s1"]).unwrap();
        let tst = element_of_word(&g, &["s2", "s1", "s2"]).unwrap();
        assert!(!w_equal(&sts, &tst).unwrap());

        let other = parse_graph("family A 2\nfamily A 1").unwrap();
        let id = WElement::identity(&other);
        assert_eq!(w_equal(&s, &id), Err(Error::GraphMismatch));
    }

    #[test]
    fn lengths() {
        let g = a2();
        assert_eq!(WElement::identity(&g).length().0, 0);
        let sts = element_of_word(&g, &["s1", "s2", "s1"]).unwrap();
        let (len, word) = sts.length();
        assert_eq!(len, 3);
        assert!(WElement::from_word(&g, &word) == sts);
        assert_eq!(element_of_word(&g, &["s1", "s1"]).unwrap().length().0, 0);
        let w = element_of_word(&g, &["s1", "s2", "s2", "s1", "s2"]).unwrap();
        assert_eq!(w.length().0, 1);
    }

    #[test]
    fn longest_elements() {
        let g = parse_graph("family A 1").unwrap();
        let w0 = longest_element(&g).unwrap();
        assert_eq!(w0.length().0, 1);

        let g = a2();
        assert_eq!(longest_element(&g).unwrap().length().0, 3);

        let g = b2();
        let w0 = longest_element(&g).unwrap();
        assert_eq!(w0.length().0, 4);
        for s in 0..2 {
            let gen = WElement::from_word(&g, &[s]);
            assert!(w0.mul(&gen) == gen.mul(&w0), "w0 central in B2");
        }

        let g = parse_graph("family tA 2").unwrap();
        assert!(matches!(longest_element(&g), Err(Error::NotSpherical(_))));
    }

    #[test]
    fn longest_element_normalizes_generators() {
        for text in ["family A 3", "family B 3", "family D 4", "family H 3", "family I2 5"] {
            let g = parse_graph(text).unwrap();
            let w0 = longest_element(&g).unwrap();
            assert!(w0.mul(&w0).is_identity(), "{text}");
            let gens: Vec<WElement> = (0..g.rank()).map(|s| WElement::from_word(&g, &[s])).collect();
            for s in &gens {
                let conj = w0.mul(s).mul(&w0);
                assert!(gens.contains(&conj), "{text}: w0 s w0 not simple");
            }
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_w(&a2(), 100).unwrap().len(), 6);
        assert_eq!(enumerate_w(&b2(), 100).unwrap().len(), 8);
        assert_eq!(enumerate_w(&parse_graph("family A 3").unwrap(), 100).unwrap().len(), 24);
        assert_eq!(enumerate_w(&parse_graph("family H 3").unwrap(), 1000).unwrap().len(), 120);
        let inf = parse_graph("family tA 1").unwrap();
        assert_eq!(enumerate_w(&inf, 100).unwrap_err(), Error::CapExceeded(100));
    }

    #[test]
    fn enumeration_is_shortlex() {
        let g = a2();
        let words: Vec<Vec<usize>> = enumerate_w(&g, 100)
            .unwrap()
            .iter()
            .map(|w| w.witness().to_vec())
            .collect();
        assert_eq!(
            words,
            vec![vec![], vec![0], vec![1], vec![0, 1], vec![1, 0], vec![0, 1, 0]]
        );
    }

    #[test]
    fn alternating_products() {
        assert_eq!(alternating_product('b', 'a', 1, Side::Right), vec!['a']);
        assert_eq!(alternating_product('b', 'a', 3, Side::Right), vec!['a', 'b', 'a']);
        assert_eq!(alternating_product('b', 'a', 4, Side::Right), vec!['b', 'a', 'b', 'a']);
        assert_eq!(alternating_product('a', 'b', 2, Side::Left), vec!['a', 'b']);
        assert!(alternating_product('a', 'b', 0, Side::Left).is_empty());
    }

    #[test]
    fn deodhar_fact_on_alternating_words() {
        // Prod_R(s, t, m-1)(α_s) = α_r, r = s for m even and t for m odd.
        for m in 3..=8u32 {
            let g = parse_graph(&format!("family I2 {m}")).unwrap();
            let w = WElement::from_word(&g, &prod_right(0, 1, m as usize - 1));
            let r = if m % 2 == 0 { 0 } else { 1 };
            assert_eq!(w.image_of_simple(0), g.simple_root(r), "m={m}");
        }
    }

    #[test]
    fn form_preservation() {
        let g = parse_graph("family B 3").unwrap();
        for w in enumerate_w(&g, 100).unwrap() {
            assert!(w.preserves_form());
        }
    }
}
