//! Words in `VA[Γ]`, the projections `π_K`, `π_P`, and kernel rewriting.
//!
//! `VA[Γ]` is generated by `σ_s` (Artin letters) and `τ_s` (Coxeter letters).
//! `π_K` kills every `σ_s` and sends `τ_s` to `s`; its kernel `KVA[Γ]` is
//! generated by the `δ_β = ι_W(w) σ_s ι_W(w)⁻¹` with `β = w(α_s)`.

use std::fmt;
use std::sync::Arc;

use crate::coxeter::{prod_right, CoxeterGraph, Label, WElement};
use crate::error::{Error, Result};
use crate::roots::{render_vector, MHat, MHatEntry, Root};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    Sigma,
    Tau,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub kind: Gen,
    pub vertex: usize,
    /// `±1`; always `+1` for `τ`.
    pub exp: i8,
}

impl Letter {
    pub fn sigma(vertex: usize, exp: i8) -> Letter {
        assert!(exp == 1 || exp == -1);
        Letter {
            kind: Gen::Sigma,
            vertex,
            exp,
        }
    }

    pub fn tau(vertex: usize) -> Letter {
        Letter {
            kind: Gen::Tau,
            vertex,
            exp: 1,
        }
    }

    pub fn inverse(self) -> Letter {
        match self.kind {
            Gen::Sigma => Letter::sigma(self.vertex, -self.exp),
            Gen::Tau => self,
        }
    }
}

/// A word over `{σ_s^{±1}, τ_s}`.
#[derive(Clone, PartialEq, Eq)]
pub struct VAWord {
    graph: Arc<CoxeterGraph>,
    letters: Vec<Letter>,
}

impl fmt::Debug for VAWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VAWord({self})")
    }
}

impl fmt::Display for VAWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let tokens: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                let name = &self.graph.vertices()[l.vertex];
                match (l.kind, l.exp) {
                    (Gen::Tau, _) => format!("t:{name}"),
                    (Gen::Sigma, 1) => format!("s:{name}"),
                    (Gen::Sigma, _) => format!("s:{name}^-1"),
                }
            })
            .collect();
        f.write_str(&tokens.join(" "))
    }
}

impl VAWord {
    pub fn new(graph: &Arc<CoxeterGraph>, letters: Vec<Letter>) -> VAWord {
        let letters = letters
            .into_iter()
            .map(|l| {
                assert!(l.vertex < graph.rank(), "vertex out of range");
                if l.kind == Gen::Tau {
                    Letter::tau(l.vertex)
                } else {
                    l
                }
            })
            .collect();
        VAWord {
            graph: graph.clone(),
            letters,
        }
    }

    pub fn empty(graph: &Arc<CoxeterGraph>) -> VAWord {
        VAWord::new(graph, Vec::new())
    }

    /// Parses whitespace-separated tokens `s:<v>`, `t:<v>`, each with an
    /// optional `^-1` (or `^1`); `1` denotes the empty word.
    pub fn parse(graph: &Arc<CoxeterGraph>, text: &str) -> Result<VAWord> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (body, exp) = match token.split_once('^') {
                Some((b, "-1")) => (b, -1),
                Some((b, "1" | "+1")) => (b, 1),
                Some(_) => return Err(Error::Parse(format!("bad exponent in `{token}`"))),
                None => (token, 1),
            };
            let (kind, name) = body
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected `s:<v>` or `t:<v>`, got `{token}`")))?;
            let v = graph.vertex_index(name)?;
            letters.push(match kind {
                "s" => Letter::sigma(v, exp),
                "t" => Letter::tau(v),
                _ => return Err(Error::Parse(format!("unknown generator kind `{kind}`"))),
            });
        }
        Ok(VAWord::new(graph, letters))
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> VAWord {
        VAWord {
            graph: self.graph.clone(),
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &VAWord) -> VAWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        VAWord {
            graph: self.graph.clone(),
            letters,
        }
    }

    /// `σ_s ↦ 1`, `τ_s ↦ s`.
    pub fn pi_k(&self) -> WElement {
        let word: Vec<usize> = self
            .letters
            .iter()
            .filter(|l| l.kind == Gen::Tau)
            .map(|l| l.vertex)
            .collect();
        WElement::from_word(&self.graph, &word)
    }

    /// `σ_s, τ_s ↦ s`.
    pub fn pi_p(&self) -> WElement {
        let word: Vec<usize> = self.letters.iter().map(|l| l.vertex).collect();
        WElement::from_word(&self.graph, &word)
    }
}

/// Relators `lhs · rhs⁻¹` of the defining presentation: the Artin relations
/// on the `σ`, the Coxeter relations on the `τ` (with `τ_s²`), and for each
/// ordered pair with finite `m` the mixed relation
/// `Prod_R(τ_s, τ_t, m−1) σ_s = σ_r Prod_R(τ_s, τ_t, m−1)`, `r = s` for even
/// `m` and `r = t` for odd `m`.
pub fn defining_relators(graph: &Arc<CoxeterGraph>) -> Vec<VAWord> {
    let n = graph.rank();
    let word = |ls: Vec<Letter>| VAWord::new(graph, ls);
    let mut out = Vec::new();
    for s in 0..n {
        out.push(word(vec![Letter::tau(s), Letter::tau(s)]));
    }
    for s in 0..n {
        for t in 0..n {
            let Label::Finite(m) = graph.label(s, t) else { continue };
            if s == t {
                continue;
            }
            let m = m as usize;
            if s < t {
                let mut sig: Vec<Letter> =
                    prod_right(t, s, m).into_iter().map(|v| Letter::sigma(v, 1)).collect();
                sig.extend(prod_right(s, t, m).into_iter().rev().map(|v| Letter::sigma(v, -1)));
                out.push(word(sig));
                let mut tau: Vec<Letter> = prod_right(t, s, m).into_iter().map(Letter::tau).collect();
                tau.extend(prod_right(s, t, m).into_iter().rev().map(Letter::tau));
                out.push(word(tau));
            }
            let p: Vec<Letter> = prod_right(s, t, m - 1).into_iter().map(Letter::tau).collect();
            let r = if m % 2 == 0 { s } else { t };
            let mut mixed = p.clone();
            mixed.push(Letter::sigma(s, 1));
            mixed.extend(p.iter().rev().copied());
            mixed.push(Letter::sigma(r, -1));
            out.push(word(mixed));
        }
    }
    out
}

/// The `τ`-word of a word over `S`.
pub fn iota_w(graph: &Arc<CoxeterGraph>, word: &[usize]) -> VAWord {
    VAWord::new(graph, word.iter().map(|&s| Letter::tau(s)).collect())
}

/// The `σ`-word of a signed word over `S`.
pub fn iota_a(graph: &Arc<CoxeterGraph>, word: &[(usize, i8)]) -> VAWord {
    VAWord::new(graph, word.iter().map(|&(s, e)| Letter::sigma(s, e)).collect())
}

/// A word over `{δ_β^{±1}}` with its support and the `m̂` labels on it.
#[derive(Clone)]
pub struct KernelWord {
    graph: Arc<CoxeterGraph>,
    letters: Vec<(Root, i8)>,
    support: Vec<Root>,
    labels: Vec<Vec<MHatEntry>>,
}

impl fmt::Debug for KernelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KernelWord({self})")
    }
}

impl fmt::Display for KernelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let tokens: Vec<String> = self
            .letters
            .iter()
            .map(|(r, e)| {
                if *e == 1 {
                    format!("d:{}", render_vector(r.coords()))
                } else {
                    format!("d:{}^-1", render_vector(r.coords()))
                }
            })
            .collect();
        f.write_str(&tokens.join(" "))
    }
}

impl KernelWord {
    /// Builds the word, its support in first-occurrence order, and the label
    /// table; undetermined labels are an error.
    pub fn new(letters: Vec<(Root, i8)>, mhat: &MHat) -> Result<KernelWord> {
        let mut support: Vec<Root> = Vec::new();
        for (r, e) in &letters {
            assert!(*e == 1 || *e == -1);
            if !support.contains(r) {
                support.push(r.clone());
            }
        }
        let labels = label_table(&support, mhat)?;
        Ok(KernelWord {
            graph: mhat.graph().clone(),
            letters,
            support,
            labels,
        })
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn letters(&self) -> &[(Root, i8)] {
        &self.letters
    }

    pub fn support(&self) -> &[Root] {
        &self.support
    }

    /// `labels[i][j] = m̂` for `support[i]`, `support[j]`.
    pub fn labels(&self) -> &[Vec<MHatEntry>] {
        &self.labels
    }

    /// Letters as `(index into support, exponent)`.
    pub fn indexed(&self) -> Vec<(usize, i8)> {
        self.letters
            .iter()
            .map(|(r, e)| (self.support.iter().position(|x| x == r).expect("in support"), *e))
            .collect()
    }

    pub fn same_letters(&self, other: &KernelWord) -> bool {
        self.letters == other.letters
    }
}

/// Symmetric `m̂` table over `roots`, failing on undetermined entries.
pub fn label_table(roots: &[Root], mhat: &MHat) -> Result<Vec<Vec<MHatEntry>>> {
    let n = roots.len();
    let mut table = vec![vec![MHatEntry::Finite(1); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let e = mhat.roots(&roots[i], &roots[j])?;
            if let MHatEntry::Undetermined(d) = e {
                return Err(Error::UndeterminedLabel(roots[i].to_string(), roots[j].to_string(), d));
            }
            table[i][j] = e;
            table[j][i] = e;
        }
    }
    Ok(table)
}

/// Rewrites a word of `KVA[Γ]` over the `δ_β`: splitting at the `σ` letters,
/// the `i`-th one becomes `δ_{β_i}^{ε_i}` with `β_i` the image of `α_{s_i}`
/// under the product of the `τ` letters before it.
pub fn kernel_rewrite(w: &VAWord, mhat: &MHat) -> Result<KernelWord> {
    let graph = w.graph();
    let image = w.pi_k();
    if !image.is_identity() {
        return Err(Error::NotInKernel(image.length().0));
    }
    let mut prefix = WElement::identity(graph);
    let mut letters = Vec::new();
    for l in w.letters() {
        match l.kind {
            Gen::Tau => prefix.mul_generator_right(l.vertex),
            Gen::Sigma => {
                let (_, reduced) = prefix.length();
                let root = Root::from_witness(graph, &reduced, l.vertex);
                debug_assert!(root.coords() == prefix.image_of_simple(l.vertex));
                letters.push((root, l.exp));
            }
        }
    }
    KernelWord::new(letters, mhat)
}

/// `w · δ_β = δ_{w(β)}`, letter by letter.
pub fn w_action(w: &WElement, k: &KernelWord, mhat: &MHat) -> Result<KernelWord> {
    if **w.graph() != *k.graph {
        return Err(Error::GraphMismatch);
    }
    let letters = k.letters.iter().map(|(r, e)| (r.apply(w), *e)).collect();
    KernelWord::new(letters, mhat)
}

/// Writes each `δ_β^ε` as `ι_W(u) σ_s^ε ι_W(u)⁻¹` for the witness `β = u(α_s)`.
pub fn expand_kernel(k: &KernelWord) -> VAWord {
    let mut letters = Vec::new();
    for (r, e) in &k.letters {
        let (word, s) = r.witness();
        letters.extend(word.iter().map(|&t| Letter::tau(t)));
        letters.push(Letter::sigma(s, *e));
        letters.extend(word.iter().rev().map(|&t| Letter::tau(t)));
    }
    VAWord::new(&k.graph, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{longest_element, parse_graph};
    use crate::roots::{negate, DEFAULT_CAP, DEFAULT_DEPTH};

    fn setup(text: &str) -> (Arc<CoxeterGraph>, MHat) {
        let g = parse_graph(text).unwrap();
        let mh = MHat::new(&g, DEFAULT_DEPTH, DEFAULT_CAP).unwrap();
        (g, mh)
    }

    #[test]
    fn parsing_and_display() {
        let (g, _) = setup("family A 2");
        let w = VAWord::parse(&g, "t:s1 s:s2 t:s1^-1 s:s1^-1").unwrap();
        assert_eq!(w.to_string(), "t:s1 s:s2 t:s1 s:s1^-1");
        assert_eq!(w.inverse().to_string(), "s:s1 t:s1 s:s2^-1 t:s1");
        assert_eq!(VAWord::parse(&g, "").unwrap().to_string(), "1");
        assert!(matches!(VAWord::parse(&g, "s:s9"), Err(Error::UnknownVertex(_))));
        assert!(matches!(VAWord::parse(&g, "x:s1"), Err(Error::Parse(_))));
        assert!(matches!(VAWord::parse(&g, "s:s1^2"), Err(Error::Parse(_))));
    }

    #[test]
    fn projections() {
        let (g, _) = setup("family A 2");
        let p = |t: &str| VAWord::parse(&g, t).unwrap();
        assert!(p("t:s1").pi_k() == WElement::from_word(&g, &[0]));
        assert!(p("s:s1").pi_k().is_identity());
        assert!(p("s:s1^-1").pi_k().is_identity());
        assert!(p("t:s1 t:s1").pi_k().is_identity());
        assert!(p("s:s1").pi_p() == WElement::from_word(&g, &[0]));
        assert!(p("t:s1 s:s1^-1").pi_p().is_identity());
        assert!(p("").pi_p().is_identity());
        assert_eq!(iota_w(&g, &[0, 1]).to_string(), "t:s1 t:s2");
        assert_eq!(iota_a(&g, &[(0, -1)]).to_string(), "s:s1^-1");
    }

    #[test]
    fn rewriting_examples() {
        let (g, mh) = setup("family A 2");
        let p = |t: &str| VAWord::parse(&g, t).unwrap();

        let k = kernel_rewrite(&p("t:s1 s:s2 t:s1"), &mh).unwrap();
        assert_eq!(k.to_string(), "d:[1,1]");
        assert_eq!(k.support().len(), 1);

        let k = kernel_rewrite(&p("s:s1"), &mh).unwrap();
        assert_eq!(k.to_string(), "d:[1,0]");

        let k = kernel_rewrite(&p("s:s1 t:s1 s:s1^-1 t:s1"), &mh).unwrap();
        assert_eq!(k.to_string(), "d:[1,0] d:[-1,0]^-1");
        assert_eq!(k.labels()[0][1], MHatEntry::Infinite);

        assert_eq!(kernel_rewrite(&p("t:s1"), &mh).unwrap_err(), Error::NotInKernel(1));
    }

    #[test]
    fn action_and_expansion() {
        let (g, mh) = setup("family A 2");
        let k = KernelWord::new(vec![(Root::simple(&g, 1), 1)], &mh).unwrap();
        let id = WElement::identity(&g);
        assert!(w_action(&id, &k, &mh).unwrap().same_letters(&k));
        let s = WElement::from_word(&g, &[0]);
        assert_eq!(w_action(&s, &k, &mh).unwrap().to_string(), "d:[1,1]");

        assert_eq!(expand_kernel(&k).to_string(), "s:s2");
        let k = KernelWord::new(vec![(Root::from_witness(&g, &[0], 1), 1)], &mh).unwrap();
        assert_eq!(expand_kernel(&k).to_string(), "t:s1 s:s2 t:s1");
        let empty = KernelWord::new(Vec::new(), &mh).unwrap();
        assert!(expand_kernel(&empty).is_empty());

        let (b2, mh) = setup("family B 2");
        let w0 = longest_element(&b2).unwrap();
        let k = KernelWord::new(vec![(Root::simple(&b2, 0), 1)], &mh).unwrap();
        let moved = w_action(&w0, &k, &mh).unwrap();
        assert_eq!(moved.letters()[0].0.coords(), negate(b2.simple_root(0).as_slice()));
    }

    #[test]
    fn well_definedness() {
        // A2: s1(α2) = s2(α1), so both conjugates give the same δ
        let (g, mh) = setup("family A 2");
        let a = VAWord::parse(&g, "t:s1 s:s2 t:s1").unwrap();
        let b = VAWord::parse(&g, "t:s2 s:s1 t:s2").unwrap();
        let ka = kernel_rewrite(&a, &mh).unwrap();
        let kb = kernel_rewrite(&b, &mh).unwrap();
        assert!(ka.same_letters(&kb));
    }
}
