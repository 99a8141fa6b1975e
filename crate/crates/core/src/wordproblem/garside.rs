//! Left-greedy Garside normal forms in Artin groups of spherical type.
//!
//! Simple elements are the elements of the finite Coxeter group, indexed by
//! a ShortLex enumeration of their exact matrices; descent sets come from
//! root positivity and are cached as bitmasks.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::coxeter::{classify, enumerate_w, longest_element, CoxeterGraph, Kind};
use crate::error::{Error, Result};
use crate::numfield::FieldElement;

/// `Δ^inf · factors[0] ⋯ factors[r-1]`, factors being indices of simples.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GarsideForm {
    pub inf: i64,
    pub factors: Vec<usize>,
}

impl GarsideForm {
    pub fn identity() -> GarsideForm {
        GarsideForm {
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }
}

pub struct GarsideEngine {
    graph: Arc<CoxeterGraph>,
    words: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
    finishing: Vec<u64>,
    starting: Vec<u64>,
    delta: usize,
    tau: Vec<usize>,
}

impl GarsideEngine {
    pub fn new(graph: &Arc<CoxeterGraph>, cap: usize) -> Result<GarsideEngine> {
        if classify(graph).kind != Kind::Spherical {
            return Err(Error::NotSpherical(format!("{:?}", graph.vertices())));
        }
        let n = graph.rank();
        assert!(n <= 64, "descent masks hold at most 64 generators");
        let elements = enumerate_w(graph, cap)?;
        let index: HashMap<&[FieldElement], usize> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.matrix_entries(), i))
            .collect();
        let lookup = |w: &crate::coxeter::WElement| index[w.matrix_entries()];
        let right: Vec<Vec<usize>> = elements
            .iter()
            .map(|w| (0..n).map(|s| lookup(&w.times_generator(s))).collect())
            .collect();
        let left: Vec<Vec<usize>> = elements
            .iter()
            .map(|w| (0..n).map(|s| lookup(&w.generator_times(s))).collect())
            .collect();
        let lengths: Vec<usize> = elements.iter().map(|w| w.witness().len()).collect();
        let finishing = elements
            .iter()
            .map(|w| (0..n).filter(|&s| w.has_right_descent(s)).fold(0u64, |m, s| m | 1 << s))
            .collect();
        let starting = (0..elements.len())
            .map(|i| (0..n).filter(|&s| lengths[left[i][s]] < lengths[i]).fold(0u64, |m, s| m | 1 << s))
            .collect();
        let w0 = longest_element(graph)?;
        let delta = lookup(&w0);
        let tau = elements.iter().map(|w| lookup(&w0.mul(w).mul(&w0))).collect();
        Ok(GarsideEngine {
            graph: graph.clone(),
            words: elements.iter().map(|w| w.witness().to_vec()).collect(),
            right,
            left,
            finishing,
            starting,
            delta,
            tau,
        })
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Number of simple elements, `|W|`.
    pub fn simples(&self) -> usize {
        self.words.len()
    }

    pub fn generator(&self, s: usize) -> usize {
        self.right[0][s]
    }

    /// Reduced word of a simple element.
    pub fn word_of(&self, simple: usize) -> &[usize] {
        &self.words[simple]
    }

    /// Moves letters of `b` into `a` until `S(b) ⊆ F(a)`; returns whether
    /// anything moved.
    fn slide(&self, a: &mut usize, b: &mut usize) -> bool {
        let mut moved = false;
        loop {
            let free = self.starting[*b] & !self.finishing[*a];
            if free == 0 {
                return moved;
            }
            let t = free.trailing_zeros() as usize;
            *a = self.right[*a][t];
            *b = self.left[*b][t];
            moved = true;
        }
    }

    fn normalize(&self, form: &mut GarsideForm) {
        loop {
            let mut changed = false;
            for i in (0..form.factors.len().saturating_sub(1)).rev() {
                let (head, tail) = form.factors.split_at_mut(i + 1);
                changed |= self.slide(&mut head[i], &mut tail[0]);
            }
            let before = form.factors.len();
            form.factors.retain(|&f| f != 0);
            changed |= form.factors.len() != before;
            if !changed {
                break;
            }
        }
        let leading = form.factors.iter().take_while(|&&f| f == self.delta).count();
        form.factors.drain(..leading);
        form.inf += leading as i64;
    }

    fn tau_power(&self, x: usize, k: i64) -> usize {
        if k.rem_euclid(2) == 1 {
            self.tau[x]
        } else {
            x
        }
    }

    /// `form · x` for a simple `x`.
    pub fn push_simple(&self, form: &mut GarsideForm, x: usize) {
        form.factors.push(x);
        self.normalize(form);
    }

    /// `form · s^exp`; `s⁻¹ = Δ⁻¹ · (Δ s⁻¹)` with `Δ s⁻¹` the simple `w₀ s`.
    pub fn push_letter(&self, form: &mut GarsideForm, s: usize, exp: i8) {
        if exp > 0 {
            self.push_simple(form, self.generator(s));
        } else {
            form.inf -= 1;
            for f in &mut form.factors {
                *f = self.tau[*f];
            }
            self.push_simple(form, self.right[self.delta][s]);
        }
    }

    /// Left-to-right evaluation.
    pub fn normal_form(&self, word: &[(usize, i8)]) -> GarsideForm {
        let mut form = GarsideForm::identity();
        for &(s, e) in word {
            self.push_letter(&mut form, s, e);
        }
        form
    }

    /// `Δ^a A · Δ^b B = Δ^{a+b} τ^b(A) B`.
    pub fn mul(&self, x: &GarsideForm, y: &GarsideForm) -> GarsideForm {
        let mut form = GarsideForm {
            inf: x.inf + y.inf,
            factors: x.factors.iter().map(|&f| self.tau_power(f, y.inf)).collect(),
        };
        for &f in &y.factors {
            form.factors.push(f);
        }
        self.normalize(&mut form);
        form
    }

    /// Evaluation by balanced splitting; must agree with [`Self::normal_form`].
    pub fn normal_form_balanced(&self, word: &[(usize, i8)]) -> GarsideForm {
        match word.len() {
            0 => GarsideForm::identity(),
            1 => self.normal_form(word),
            n => {
                let (l, r) = word.split_at(n / 2);
                self.mul(&self.normal_form_balanced(l), &self.normal_form_balanced(r))
            }
        }
    }

    /// Checks that the form is left-greedy: no identity or `Δ` factors and
    /// every adjacent pair left-weighted.
    pub fn is_normal(&self, form: &GarsideForm) -> bool {
        form.factors.iter().all(|&f| f != 0 && f != self.delta)
            && form
                .factors
                .windows(2)
                .all(|p| self.starting[p[1]] & !self.finishing[p[0]] == 0)
    }

    /// `D^k (u1) (u2) …` with factor words over `prefix` + vertex name.
    pub fn render(&self, form: &GarsideForm, prefix: &str) -> String {
        let mut out = format!("D^{}", form.inf);
        for &f in &form.factors {
            let names: Vec<String> =
                self.words[f].iter().map(|&s| format!("{prefix}{}", self.graph.vertices()[s])).collect();
            let _ = write!(out, " ({})", names.join(" "));
        }
        out
    }
}
