//! Word problem in `A[Γ̂_X]` and, through the kernel rewriting, in `VA[Γ]`.
//!
//! The support is split into components along labels other than 2; each
//! component goes to the Garside tier (spherical) or the RAAG tier (labels in
//! {2, ∞}). Before splitting, a reduction pass deletes free cancellations and
//! contiguous subwords that a tier proves trivial in their own support. Both
//! steps preserve the element, and a "nontrivial" verdict is only reported
//! from a tier that solves a whole component.

pub mod garside;
pub mod raag;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::coxeter::{classify, identify_family, CoxeterGraph, Kind};
use crate::error::Result;
use crate::presentations::{gamma_hat, GammaHat};
use crate::roots::MHat;
use crate::virtual_artin::{kernel_rewrite, VAWord};

pub use garside::{GarsideEngine, GarsideForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Garside,
    Raag,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Trivial,
    Nontrivial,
    Unsupported(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Trivial => f.write_str("trivial"),
            Verdict::Nontrivial => f.write_str("nontrivial"),
            Verdict::Unsupported(why) => write!(f, "unsupported: {why}"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    pub roots: Vec<String>,
    pub kind: String,
    pub tier: Option<Tier>,
    pub word: String,
    pub normal_form: Option<String>,
    pub trivial: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveOutcome {
    pub verdict: Verdict,
    /// The `δ`-word, when the input was rewritten into the kernel.
    pub kernel_word: Option<String>,
    /// The word left after the reduction pass.
    pub reduced_word: String,
    pub removed_letters: usize,
    pub components: Vec<ComponentReport>,
    pub note: Option<String>,
}

impl SolveOutcome {
    pub fn is_trivial(&self) -> bool {
        self.verdict == Verdict::Trivial
    }

    pub fn is_nontrivial(&self) -> bool {
        self.verdict == Verdict::Nontrivial
    }
}

impl fmt::Display for SolveOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.verdict)?;
        if let Some(note) = &self.note {
            writeln!(f, "  {note}")?;
        }
        if let Some(k) = &self.kernel_word {
            writeln!(f, "  kernel word: {k}")?;
        }
        if self.kernel_word.is_some() || self.removed_letters > 0 {
            writeln!(f, "  reduced: {} ({} letters removed)", self.reduced_word, self.removed_letters)?;
        }
        for c in &self.components {
            let tier = match c.tier {
                Some(Tier::Garside) => "garside",
                Some(Tier::Raag) => "raag",
                None => "none",
            };
            write!(f, "  component {{{}}} {} tier={tier}", c.roots.join(", "), c.kind)?;
            if let Some(nf) = &c.normal_form {
                write!(f, " nf={nf}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn render_letters(g: &CoxeterGraph, word: &[(usize, i8)]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter()
        .map(|&(s, e)| {
            let name = &g.vertices()[s];
            if e > 0 {
                format!("d{name}")
            } else {
                format!("d{name}^-1")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Cancels adjacent `x x⁻¹`.
pub fn free_reduce(word: &[(usize, i8)]) -> Vec<(usize, i8)> {
    let mut out: Vec<(usize, i8)> = Vec::with_capacity(word.len());
    for &(s, e) in word {
        if out.last() == Some(&(s, -e)) {
            out.pop();
        } else {
            out.push((s, e));
        }
    }
    out
}

/// Components of `Γ̂_X` along labels `m̂ ≠ 2`, each with the projected word
/// re-indexed into the component.
pub fn component_split(h: &GammaHat, word: &[(usize, i8)]) -> Vec<(GammaHat, Vec<(usize, i8)>)> {
    h.graph()
        .components()
        .into_iter()
        .map(|comp| {
            let local: HashMap<usize, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let projected = word
                .iter()
                .filter_map(|&(s, e)| local.get(&s).map(|&i| (i, e)))
                .collect();
            (h.restrict(&comp), projected)
        })
        .collect()
}

/// Tier selection and engines, cached per vertex subset of one `Γ̂_X`.
pub struct ArtinSolver<'a> {
    h: &'a GammaHat,
    cap: usize,
    tiers: HashMap<Vec<usize>, Option<Tier>>,
    engines: HashMap<Vec<usize>, Arc<GarsideEngine>>,
}

impl<'a> ArtinSolver<'a> {
    pub fn new(h: &'a GammaHat, cap: usize) -> ArtinSolver<'a> {
        ArtinSolver {
            h,
            cap,
            tiers: HashMap::new(),
            engines: HashMap::new(),
        }
    }

    fn tier(&mut self, subset: &[usize]) -> Option<Tier> {
        if let Some(t) = self.tiers.get(subset) {
            return *t;
        }
        let g = self.h.graph().subgraph(subset);
        let t = if classify(&g).kind == Kind::Spherical {
            Some(Tier::Garside)
        } else if raag::is_raag(&g) {
            Some(Tier::Raag)
        } else {
            None
        };
        self.tiers.insert(subset.to_vec(), t);
        t
    }

    fn engine(&mut self, subset: &[usize]) -> Result<Arc<GarsideEngine>> {
        if let Some(e) = self.engines.get(subset) {
            return Ok(e.clone());
        }
        let e = Arc::new(GarsideEngine::new(&self.h.graph().subgraph(subset), self.cap)?);
        self.engines.insert(subset.to_vec(), e.clone());
        Ok(e)
    }

    /// Decides triviality of a word whose support `subset` has a tier;
    /// returns the verdict and a rendered normal form.
    fn decide(&mut self, subset: &[usize], word: &[(usize, i8)], tier: Tier) -> Result<(bool, String)> {
        let local: HashMap<usize, usize> = subset.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let projected: Vec<(usize, i8)> = word.iter().map(|&(s, e)| (local[&s], e)).collect();
        match tier {
            Tier::Garside => {
                let engine = self.engine(subset)?;
                let nf = engine.normal_form(&projected);
                Ok((nf.is_identity(), engine.render(&nf, "d")))
            }
            Tier::Raag => {
                let g = self.h.graph().subgraph(subset);
                let nf = raag::normal_form(&g, &projected)?;
                Ok((nf.is_empty(), render_letters(&g, &nf)))
            }
        }
    }

    /// Deletes free cancellations and contiguous subwords with zero exponent
    /// sum that are trivial in their own (tier-solvable) support.
    pub fn reduce(&mut self, word: &[(usize, i8)]) -> Result<Vec<(usize, i8)>> {
        let mut w = free_reduce(word);
        'restart: loop {
            for i in 0..w.len() {
                let mut support = BTreeSet::new();
                let mut sum = 0i64;
                for j in i..w.len() {
                    support.insert(w[j].0);
                    sum += w[j].1 as i64;
                    let subset: Vec<usize> = support.iter().copied().collect();
                    let Some(tier) = self.tier(&subset) else { break };
                    if sum == 0 && self.decide(&subset, &w[i..=j], tier)?.0 {
                        w.drain(i..=j);
                        w = free_reduce(&w);
                        continue 'restart;
                    }
                }
            }
            return Ok(w);
        }
    }

    pub fn solve(&mut self, word: &[(usize, i8)]) -> Result<SolveOutcome> {
        let all: Vec<usize> = word.iter().map(|&(s, _)| s).collect::<BTreeSet<_>>().into_iter().collect();
        let reduced = if self.tier(&all).is_some() {
            free_reduce(word)
        } else {
            self.reduce(word)?
        };
        let support: Vec<usize> = reduced.iter().map(|&(s, _)| s).collect::<BTreeSet<_>>().into_iter().collect();
        let graph = self.h.graph().clone();
        let mut components = Vec::new();
        let mut nontrivial = false;
        let mut unsupported = Vec::new();
        for comp in graph.subgraph(&support).components() {
            let subset: Vec<usize> = comp.iter().map(|&i| support[i]).collect();
            let members: BTreeSet<usize> = subset.iter().copied().collect();
            let projected: Vec<(usize, i8)> = reduced.iter().copied().filter(|(s, _)| members.contains(s)).collect();
            let sub = graph.subgraph(&subset);
            let class = classify(&sub);
            let kind = match (class.kind, identify_family(sub.labels())) {
                (k, Some(fam)) => format!("{k} {fam}"),
                (k, None) => k.to_string(),
            };
            let local: HashMap<usize, usize> = subset.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let local_word: Vec<(usize, i8)> = projected.iter().map(|&(s, e)| (local[&s], e)).collect();
            let mut report = ComponentReport {
                roots: sub.vertices().to_vec(),
                kind: kind.clone(),
                tier: None,
                word: render_letters(&sub, &local_word),
                normal_form: None,
                trivial: None,
            };
            match self.tier(&subset) {
                Some(tier) => {
                    let (trivial, nf) = self.decide(&subset, &projected, tier)?;
                    report.tier = Some(tier);
                    report.normal_form = Some(nf);
                    report.trivial = Some(trivial);
                    nontrivial |= !trivial;
                }
                None => unsupported.push(format!("{kind} component")),
            }
            components.push(report);
        }
        let verdict = if nontrivial {
            Verdict::Nontrivial
        } else if !unsupported.is_empty() {
            Verdict::Unsupported(unsupported.join(", "))
        } else {
            Verdict::Trivial
        };
        Ok(SolveOutcome {
            verdict,
            kernel_word: None,
            reduced_word: render_letters(&graph, &reduced),
            removed_letters: word.len() - reduced.len(),
            components,
            note: None,
        })
    }
}

/// Word problem in `A[Γ̂_X]` for a word over the vertices of `h`.
pub fn artin_solve(h: &GammaHat, word: &[(usize, i8)], cap: usize) -> Result<SolveOutcome> {
    ArtinSolver::new(h, cap).solve(word)
}

/// Word problem in `VA[Γ]`: words outside `KVA[Γ]` are nontrivial; the rest
/// are rewritten over the `δ_β` and solved in `A[Γ̂_X]`.
pub fn va_solve(w: &VAWord, mhat: &MHat, cap: usize) -> Result<SolveOutcome> {
    let image = w.pi_k();
    if !image.is_identity() {
        let (len, word) = image.length();
        return Ok(SolveOutcome {
            verdict: Verdict::Nontrivial,
            kernel_word: None,
            reduced_word: w.to_string(),
            removed_letters: 0,
            components: Vec::new(),
            note: Some(format!(
                "pi_K(w) = {} has length {len}",
                w.graph().render_word(&word)
            )),
        });
    }
    let k = kernel_rewrite(w, mhat)?;
    let h = gamma_hat(w.graph(), k.support(), mhat)?;
    let mut out = artin_solve(&h, &k.indexed(), cap)?;
    out.kernel_word = Some(k.to_string());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::parse_graph;
    use crate::roots::{parse_root, DEFAULT_CAP, DEFAULT_DEPTH};
    use crate::virtual_artin::defining_relators;

    fn setup(text: &str) -> (Arc<CoxeterGraph>, MHat) {
        let g = parse_graph(text).unwrap();
        let m = MHat::new(&g, DEFAULT_DEPTH, DEFAULT_CAP).unwrap();
        (g, m)
    }

    fn solve(g: &Arc<CoxeterGraph>, m: &MHat, text: &str) -> SolveOutcome {
        va_solve(&VAWord::parse(g, text).unwrap(), m, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn relators_are_trivial() {
        let (g, m) = setup("family A 2");
        for w in [
            "1",
            "s:s1 s:s2 s:s1 s:s2^-1 s:s1^-1 s:s2^-1",
            "t:s1 t:s1",
            "t:s1 t:s2 t:s1 t:s2 t:s1 t:s2",
            "t:s1 t:s2 s:s1 t:s2 t:s1 s:s2^-1",
        ] {
            let out = solve(&g, &m, w);
            assert!(out.is_trivial(), "{w}: {out}");
        }
    }

    #[test]
    fn all_defining_relators() {
        for text in ["family A 2", "family B 2", "family A 3", "family tA 2", "vertices a b\nedge a b 6"] {
            let (g, m) = setup(text);
            let rels = defining_relators(&g);
            assert!(!rels.is_empty());
            for r in rels {
                let out = va_solve(&r, &m, DEFAULT_CAP).unwrap();
                assert!(out.is_trivial(), "{text}: {r} -> {out}");
            }
        }
    }

    #[test]
    fn nontrivial_words() {
        let (g, m) = setup("family A 2");
        for w in ["t:s1", "s:s1", "s:s1 s:s2 s:s1^-1 s:s2^-1", "s:s1 t:s1 s:s1^-1 t:s1"] {
            let out = solve(&g, &m, w);
            assert!(out.is_nontrivial(), "{w}: {out}");
        }
        let (g, m) = setup("family B 2");
        let center = "t:s1 t:s2 t:s1 t:s2 s:s1 t:s2 t:s1 t:s2 t:s1 s:s1^-1";
        let out = solve(&g, &m, center);
        assert!(out.is_nontrivial(), "{out}");
        assert_eq!(out.components[0].tier, Some(Tier::Raag));
    }

    #[test]
    fn mixed_support_is_reduced_first() {
        let (g, m) = setup("family A 2");
        // braid relators on {-α1, α1+α2} and on {α1, α2}: the joint support
        // has labels 3 and inf
        let conj = "t:s1 s:s1 s:s2 s:s1 s:s2^-1 s:s1^-1 s:s2^-1 t:s1";
        let plain = "s:s1 s:s2 s:s1 s:s2^-1 s:s1^-1 s:s2^-1";
        let out = solve(&g, &m, &format!("{conj} {plain}"));
        assert!(out.is_trivial(), "{out}");
        assert_eq!(out.removed_letters, 12);
        let out = solve(&g, &m, &format!("{conj} s:s1 t:s1 s:s1^-1 t:s1"));
        assert!(out.is_nontrivial(), "{out}");
        assert_eq!(out.components[0].tier, Some(Tier::Raag));
    }

    #[test]
    fn affine_triangle_is_unsupported() {
        let (g, m) = setup("family A 2");
        let roots: Vec<_> = ["[1,0]", "[0,1]", "[-1,-1]"]
            .iter()
            .map(|r| parse_root(&g, r, 100).unwrap())
            .collect();
        let h = gamma_hat(&g, &roots, &m).unwrap();
        let out = artin_solve(&h, &[(0, 1), (1, 1), (2, 1)], DEFAULT_CAP).unwrap();
        assert!(matches!(&out.verdict, Verdict::Unsupported(r) if r.contains("affine")), "{out}");
    }

    #[test]
    fn split_projects_words() {
        let (g, m) = setup("family A 1\nfamily A 1");
        let roots: Vec<_> = ["[1,0]", "[0,1]"].iter().map(|r| parse_root(&g, r, 100).unwrap()).collect();
        let h = gamma_hat(&g, &roots, &m).unwrap();
        let parts = component_split(&h, &[(0, 1), (1, -1), (0, 1)]);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].1, vec![(0, 1), (0, 1)]);
        assert_eq!(parts[1].1, vec![(0, -1)]);
        let roots: Vec<_> = ["[1,0]", "[-1,0]", "[0,1]", "[0,-1]"]
            .iter()
            .map(|r| parse_root(&g, r, 100).unwrap())
            .collect();
        let h = gamma_hat(&g, &roots, &m).unwrap();
        let parts = component_split(&h, &[(0, 1), (2, 1), (1, -1), (3, 1)]);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].1, vec![(0, 1), (1, -1)]);
    }
}
