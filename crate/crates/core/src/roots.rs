//! The root system `Φ[Γ]`, reflections, and the derived labels `m̂`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::coxeter::{
    classify, enumerate_w, generator_action, CoxeterGraph, Kind, Label, Vector, WElement,
};
use crate::error::{Error, Result};
use crate::numfield::{coxeter_value, FieldElement, Sign};

pub const DEFAULT_DEPTH: usize = 8;
pub const DEFAULT_CAP: usize = 1_000_000;

/// Renders a coordinate vector as `[c1,...,cn]`; rational entries are written
/// bare, others in the parenthesized polynomial form without spaces.
pub fn render_vector(v: &[FieldElement]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|c| match c.as_rational() {
            Some(q) => q.to_string(),
            None => c.to_string().replace(' ', ""),
        })
        .collect();
    format!("[{}]", parts.join(","))
}

pub fn negate(v: &[FieldElement]) -> Vector {
    v.iter().map(|c| -c).collect()
}

/// Sign of a nonzero vector whose coordinates share a sign.
pub fn vector_sign(v: &[FieldElement]) -> Result<Sign> {
    let mut seen = Sign::Zero;
    for c in v {
        match (c.sign(), seen) {
            (Sign::Zero, _) => {}
            (s, Sign::Zero) => seen = s,
            (s, t) if s != t => return Err(Error::MixedSigns(render_vector(v))),
            _ => {}
        }
    }
    if seen == Sign::Zero {
        return Err(Error::NotARoot(render_vector(v)));
    }
    Ok(seen)
}

/// A root `w(α_s)` with the witness `(w, s)` that produced it.
#[derive(Clone)]
pub struct Root {
    graph: Arc<CoxeterGraph>,
    coords: Vector,
    word: Vec<usize>,
    simple: usize,
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_vector(&self.coords))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_vector(&self.coords))
    }
}

impl PartialEq for Root {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for Root {}

impl std::hash::Hash for Root {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl Root {
    pub fn simple(graph: &Arc<CoxeterGraph>, s: usize) -> Root {
        Root {
            graph: graph.clone(),
            coords: graph.simple_root(s),
            word: Vec::new(),
            simple: s,
        }
    }

    /// The root `word(α_s)`.
    pub fn from_witness(graph: &Arc<CoxeterGraph>, word: &[usize], s: usize) -> Root {
        let mut coords = graph.simple_root(s);
        for &t in word.iter().rev() {
            coords = generator_action(graph, t, &coords);
        }
        Root {
            graph: graph.clone(),
            coords,
            word: word.to_vec(),
            simple: s,
        }
    }

    /// Validates a coordinate vector as a root and recovers a witness by
    /// walking it down to a simple root, failing after `limit` steps.
    pub fn from_coords(graph: &Arc<CoxeterGraph>, coords: Vector, limit: usize) -> Result<Root> {
        if coords.len() != graph.rank() {
            return Err(Error::NotARoot(format!("{} has the wrong dimension", render_vector(&coords))));
        }
        if graph.pairing(&coords, &coords) != FieldElement::from_int(graph.context(), 2) {
            return Err(Error::NotARoot(format!("{} has norm other than 2", render_vector(&coords))));
        }
        let negative = vector_sign(&coords)? == Sign::Negative;
        let mut v = if negative { negate(&coords) } else { coords.clone() };
        let mut path = Vec::new();
        loop {
            if let Some(s) = simple_index(&v) {
                let mut word = path.clone();
                if negative {
                    word.push(s);
                }
                let root = Root::from_witness(graph, &word, s);
                debug_assert!(root.coords == coords);
                return Ok(root);
            }
            if path.len() >= limit {
                return Err(Error::NotARoot(format!(
                    "{} not reduced to a simple root within {limit} steps",
                    render_vector(&coords)
                )));
            }
            let s = (0..graph.rank())
                .find(|&s| graph.pairing_with_simple(&v, s).is_positive())
                .ok_or_else(|| Error::NotARoot(render_vector(&coords)))?;
            v = generator_action(graph, s, &v);
            vector_sign(&v).map_err(|_| Error::NotARoot(render_vector(&coords)))?;
            path.push(s);
        }
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn witness(&self) -> (&[usize], usize) {
        (&self.word, self.simple)
    }

    pub fn is_positive(&self) -> Result<bool> {
        Ok(vector_sign(&self.coords)? == Sign::Positive)
    }

    pub fn negated(&self) -> Root {
        let mut word = self.word.clone();
        word.push(self.simple);
        Root {
            graph: self.graph.clone(),
            coords: negate(&self.coords),
            word,
            simple: self.simple,
        }
    }

    /// `w(β)`, with witness `w·u` for the witness `u` of `β`.
    pub fn apply(&self, w: &WElement) -> Root {
        let mut word = w.witness().to_vec();
        word.extend_from_slice(&self.word);
        Root {
            graph: self.graph.clone(),
            coords: w.apply(&self.coords),
            word,
            simple: self.simple,
        }
    }

    /// `s(β)`.
    pub fn reflect_by(&self, s: usize) -> Root {
        let mut word = vec![s];
        word.extend_from_slice(&self.word);
        Root {
            graph: self.graph.clone(),
            coords: generator_action(&self.graph, s, &self.coords),
            word,
            simple: self.simple,
        }
    }
}

fn simple_index(v: &[FieldElement]) -> Option<usize> {
    let mut found = None;
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !c.is_one() || found.is_some() {
            return None;
        }
        found = Some(i);
    }
    found
}

/// `r_β = w s w⁻¹` for the witness `β = w(α_s)`.
pub fn reflection_of_root(beta: &Root) -> WElement {
    let mut word = beta.word.clone();
    word.push(beta.simple);
    word.extend(beta.word.iter().rev());
    WElement::from_word(&beta.graph, &word)
}

/// Parses `[c1,...,cn]` coordinates or a witness `u1,u2,...:s` (vertex names,
/// possibly an empty word).
pub fn parse_root(graph: &Arc<CoxeterGraph>, text: &str, limit: usize) -> Result<Root> {
    let t = text.trim();
    if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let coords = inner
            .split(',')
            .map(|c| FieldElement::parse(graph.context(), c))
            .collect::<Result<Vector>>()?;
        return Root::from_coords(graph, coords, limit);
    }
    let (word, s) = t
        .rsplit_once(':')
        .ok_or_else(|| Error::Parse(format!("expected `[coords]` or `word:s`, got `{text}`")))?;
    let word = word
        .split([',', ' ', '.'])
        .filter(|w| !w.is_empty())
        .map(|w| graph.vertex_index(w))
        .collect::<Result<Vec<_>>>()?;
    Ok(Root::from_witness(graph, &word, graph.vertex_index(s.trim())?))
}

/// A finite set of roots: all of `Φ` when `complete`, otherwise the roots
/// reached within `depth` generator applications together with their negatives.
pub struct RootSystem {
    graph: Arc<CoxeterGraph>,
    roots: Vec<Root>,
    index: HashMap<Vector, usize>,
    depth: Option<usize>,
    complete: bool,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("roots", &self.roots)
            .field("complete", &self.complete)
            .finish()
    }
}

/// BFS over positive roots by witness length, then negatives in the same order.
///
/// `depth = None` asks for all of `Φ` and requires a spherical graph.
pub fn enumerate_roots(g: &Arc<CoxeterGraph>, depth: Option<usize>, cap: usize) -> Result<RootSystem> {
    if depth.is_none() && classify(g).kind != Kind::Spherical {
        return Err(Error::NotSpherical("complete root enumeration needs a finite W".into()));
    }
    let n = g.rank();
    let mut positives: Vec<Root> = (0..n).map(|s| Root::simple(g, s)).collect();
    let mut seen: HashSet<Vector> = positives.iter().map(|r| r.coords.clone()).collect();
    let mut queue: VecDeque<usize> = (0..n).collect();
    let mut truncated = false;
    while let Some(i) = queue.pop_front() {
        if depth.is_some_and(|d| positives[i].word.len() >= d) {
            truncated = true;
            continue;
        }
        for s in 0..n {
            if positives[i].word.is_empty() && positives[i].simple == s {
                continue;
            }
            let next = positives[i].reflect_by(s);
            if seen.contains(&next.coords) {
                continue;
            }
            if 2 * seen.len() >= cap {
                return Err(Error::CapExceeded(cap));
            }
            seen.insert(next.coords.clone());
            queue.push_back(positives.len());
            positives.push(next);
        }
    }
    let negatives: Vec<Root> = positives.iter().map(Root::negated).collect();
    let roots: Vec<Root> = positives.into_iter().chain(negatives).collect();
    let index = roots.iter().enumerate().map(|(i, r)| (r.coords.clone(), i)).collect();
    Ok(RootSystem {
        graph: g.clone(),
        roots,
        index,
        depth,
        complete: !truncated,
    })
}

impl RootSystem {
    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive(&self) -> &[Root] {
        &self.roots[..self.roots.len() / 2]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn depth(&self) -> Option<usize> {
        self.depth
    }

    /// Whether every root of `Φ` is listed.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn find(&self, coords: &[FieldElement]) -> Option<&Root> {
        self.index.get(coords).map(|&i| &self.roots[i])
    }

    pub fn position(&self, coords: &[FieldElement]) -> Option<usize> {
        self.index.get(coords).copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MHatEntry {
    Finite(u32),
    Infinite,
    Undetermined(usize),
}

impl MHatEntry {
    pub fn finite(self) -> Option<u32> {
        match self {
            MHatEntry::Finite(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_label(self) -> Option<Label> {
        match self {
            MHatEntry::Finite(m) => Some(Label::Finite(m)),
            MHatEntry::Infinite => Some(Label::Infinite),
            MHatEntry::Undetermined(_) => None,
        }
    }
}

impl fmt::Display for MHatEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MHatEntry::Finite(m) => write!(f, "{m}"),
            MHatEntry::Infinite => f.write_str("inf"),
            MHatEntry::Undetermined(d) => write!(f, "undetermined(depth {d})"),
        }
    }
}

/// Ordered pairs `(w(α_s), w(α_t))` over all `w ∈ W` and simple pairs with
/// finite label, mapped to `m_{s,t}`.
pub fn pair_orbit_table(g: &Arc<CoxeterGraph>, cap: usize) -> Result<HashMap<(Vector, Vector), u32>> {
    if classify(g).kind != Kind::Spherical {
        return Err(Error::NotSpherical("pair orbits need a finite W".into()));
    }
    let n = g.rank();
    let mut table = HashMap::new();
    for w in enumerate_w(g, cap)? {
        let images: Vec<Vector> = (0..n).map(|s| w.image_of_simple(s)).collect();
        for s in 0..n {
            for t in 0..n {
                if let (true, Label::Finite(m)) = (s != t, g.label(s, t)) {
                    let previous = table.insert((images[s].clone(), images[t].clone()), m);
                    assert!(previous.is_none_or(|p| p == m), "pair labeled twice");
                }
            }
        }
    }
    Ok(table)
}

/// Computes `m̂` entries for one graph, caching the pair-orbit table when `W`
/// is finite.
pub struct MHat {
    graph: Arc<CoxeterGraph>,
    depth: usize,
    table: Option<HashMap<(Vector, Vector), u32>>,
    simply_laced: bool,
    values: Vec<(u32, FieldElement)>,
}

impl MHat {
    pub fn new(g: &Arc<CoxeterGraph>, depth: usize, cap: usize) -> Result<MHat> {
        let table = if classify(g).kind == Kind::Spherical {
            Some(pair_orbit_table(g, cap)?)
        } else {
            None
        };
        let values = g
            .finite_labels()
            .into_iter()
            .map(|m| (m, coxeter_value(Some(m), g.context()).expect("label divides L")))
            .collect();
        Ok(MHat {
            graph: g.clone(),
            depth,
            table,
            simply_laced: g.is_simply_laced(),
            values,
        })
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn is_exhaustive(&self) -> bool {
        self.table.is_some()
    }

    pub fn entry(&self, beta: &[FieldElement], gamma: &[FieldElement]) -> MHatEntry {
        if beta == gamma {
            return MHatEntry::Finite(1);
        }
        let g = &self.graph;
        let ctx = g.context();
        let c = g.pairing(beta, gamma);
        if c.is_positive() || !(&c + &FieldElement::from_int(ctx, 2)).is_positive() {
            return MHatEntry::Infinite;
        }
        if self.simply_laced {
            return if c.is_zero() {
                MHatEntry::Finite(2)
            } else if c == FieldElement::from_int(ctx, -1) {
                MHatEntry::Finite(3)
            } else {
                MHatEntry::Infinite
            };
        }
        let Some(&(m, _)) = self.values.iter().find(|(_, v)| *v == c) else {
            return MHatEntry::Infinite;
        };
        match &self.table {
            Some(table) => {
                if table.get(&(beta.to_vec(), gamma.to_vec())) == Some(&m) {
                    MHatEntry::Finite(m)
                } else {
                    MHatEntry::Infinite
                }
            }
            None => {
                if self.search_simple_pair(beta, gamma, m) {
                    MHatEntry::Finite(m)
                } else {
                    MHatEntry::Undetermined(self.depth)
                }
            }
        }
    }

    /// BFS over `{w(β), w(γ)}` for `lg(w) ≤ depth`, looking for a simple pair
    /// with label `m`.
    fn search_simple_pair(&self, beta: &[FieldElement], gamma: &[FieldElement], m: u32) -> bool {
        let g = &self.graph;
        let is_hit = |b: &[FieldElement], c: &[FieldElement]| match (simple_index(b), simple_index(c)) {
            (Some(s), Some(t)) => s != t && g.label(s, t) == Label::Finite(m),
            _ => false,
        };
        let mut seen: HashSet<(Vector, Vector)> = HashSet::new();
        let mut frontier = vec![(beta.to_vec(), gamma.to_vec())];
        seen.insert(frontier[0].clone());
        for level in 0..=self.depth {
            if frontier.iter().any(|(b, c)| is_hit(b, c)) {
                return true;
            }
            if level == self.depth {
                break;
            }
            let mut next = Vec::new();
            for (b, c) in &frontier {
                for s in 0..g.rank() {
                    let pair = (generator_action(g, s, b), generator_action(g, s, c));
                    if seen.insert(pair.clone()) {
                        next.push(pair);
                    }
                }
            }
            frontier = next;
        }
        false
    }

    pub fn roots(&self, beta: &Root, gamma: &Root) -> Result<MHatEntry> {
        if *beta.graph != *self.graph || *gamma.graph != *self.graph {
            return Err(Error::GraphMismatch);
        }
        Ok(self.entry(&beta.coords, &gamma.coords))
    }
}

/// One-shot `m̂_{β,γ}`; prefer [`MHat`] for repeated queries.
pub fn mhat(beta: &Root, gamma: &Root, g: &Arc<CoxeterGraph>, search_depth: usize) -> Result<MHatEntry> {
    MHat::new(g, search_depth, DEFAULT_CAP)?.roots(beta, gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{longest_element, parse_graph};

    fn g(text: &str) -> Arc<CoxeterGraph> {
        parse_graph(text).unwrap()
    }

    #[test]
    fn root_counts() {
        let a2 = g("family A 2");
        let phi = enumerate_roots(&a2, None, DEFAULT_CAP).unwrap();
        assert_eq!(phi.len(), 6);
        let rendered: Vec<String> = phi.roots().iter().map(|r| r.to_string()).collect();
        assert_eq!(rendered, ["[1,0]", "[0,1]", "[1,1]", "[-1,0]", "[0,-1]", "[-1,-1]"]);
        assert_eq!(enumerate_roots(&g("family B 2"), None, DEFAULT_CAP).unwrap().len(), 8);
        for text in ["family A 3", "family B 3", "family H 3", "family D 4"] {
            let graph = g(text);
            let phi = enumerate_roots(&graph, None, DEFAULT_CAP).unwrap();
            assert_eq!(phi.len(), 2 * longest_element(&graph).unwrap().length().0, "{text}");
            assert!(phi.is_complete());
        }
    }

    #[test]
    fn truncated_systems() {
        let ta2 = g("family tA 2");
        assert!(enumerate_roots(&ta2, None, DEFAULT_CAP).is_err());
        let phi = enumerate_roots(&ta2, Some(3), DEFAULT_CAP).unwrap();
        assert!(!phi.is_complete());
        for s in 0..3 {
            assert!(phi.find(&ta2.simple_root(s)).is_some());
        }
        let st = generator_action(&ta2, 0, &ta2.simple_root(1));
        assert!(phi.find(&st).is_some());
        for r in phi.roots() {
            assert!(phi.find(&negate(r.coords())).is_some());
        }
        assert_eq!(enumerate_roots(&ta2, Some(40), 50).unwrap_err(), Error::CapExceeded(50));
    }

    #[test]
    fn witnesses_reproduce_coordinates() {
        let graph = g("family B 3");
        for r in enumerate_roots(&graph, None, DEFAULT_CAP).unwrap().roots() {
            let (word, s) = r.witness();
            assert_eq!(Root::from_witness(&graph, word, s), *r);
            let w = WElement::from_word(&graph, word);
            assert_eq!(w.image_of_simple(s), r.coords());
            let back = Root::from_coords(&graph, r.coords().to_vec(), 50).unwrap();
            assert_eq!(back, *r);
            assert_eq!(graph.pairing(r.coords(), r.coords()), FieldElement::from_int(graph.context(), 2));
        }
    }

    #[test]
    fn coordinate_validation() {
        let a2 = g("family A 2");
        let ctx = a2.context();
        let v = |a: i64, b: i64| vec![FieldElement::from_int(ctx, a), FieldElement::from_int(ctx, b)];
        assert!(Root::from_coords(&a2, v(1, 1), 10).is_ok());
        assert!(Root::from_coords(&a2, v(-1, -1), 10).is_ok());
        assert!(matches!(Root::from_coords(&a2, v(1, -1), 10), Err(Error::NotARoot(_))));
        assert!(matches!(Root::from_coords(&a2, v(2, 0), 10), Err(Error::NotARoot(_))));
        assert_eq!(parse_root(&a2, "[1,1]", 10).unwrap().coords(), v(1, 1));
        assert_eq!(parse_root(&a2, "s1:s2", 10).unwrap().coords(), v(1, 1));
        assert_eq!(parse_root(&a2, ":s2", 10).unwrap().coords(), v(0, 1));
        let b2 = g("family B 2");
        let r = parse_root(&b2, "s2:s1", 10).unwrap();
        let text = r.to_string();
        assert_eq!(parse_root(&b2, &text, 10).unwrap(), r);
    }

    #[test]
    fn reflections() {
        let a2 = g("family A 2");
        let phi = enumerate_roots(&a2, None, DEFAULT_CAP).unwrap();
        for r in phi.roots() {
            let refl = reflection_of_root(r);
            assert_eq!(refl.apply(r.coords()), negate(r.coords()));
            assert!(refl == reflection_of_root(&r.negated()));
            for s in 0..2 {
                let probe = a2.simple_root(s);
                let c = a2.pairing(&probe, r.coords());
                let expected: Vector = probe.iter().zip(r.coords()).map(|(p, b)| p - &(&c * b)).collect();
                assert_eq!(refl.apply(&probe), expected);
            }
        }
        let s = Root::simple(&a2, 0);
        assert!(reflection_of_root(&s) == WElement::from_word(&a2, &[0]));
        let sum = Root::from_witness(&a2, &[0], 1);
        assert!(reflection_of_root(&sum) == WElement::from_word(&a2, &[0, 1, 0]));
    }

    #[test]
    fn positivity() {
        let a2 = g("family A 2");
        let s = Root::simple(&a2, 0);
        assert!(s.is_positive().unwrap());
        assert!(!s.negated().is_positive().unwrap());
        assert!(!s.reflect_by(0).is_positive().unwrap());
        let ctx = a2.context();
        let mixed = vec![FieldElement::from_int(ctx, 1), FieldElement::from_int(ctx, -1)];
        assert!(matches!(vector_sign(&mixed), Err(Error::MixedSigns(_))));
    }

    #[test]
    fn mhat_examples() {
        let a2 = g("family A 2");
        let mh = MHat::new(&a2, DEFAULT_DEPTH, DEFAULT_CAP).unwrap();
        let a12 = Root::simple(&a2, 0);
        let a23 = Root::simple(&a2, 1);
        let a13 = Root::from_witness(&a2, &[0], 1);
        assert_eq!(mh.roots(&a12, &a23).unwrap(), MHatEntry::Finite(3));
        assert_eq!(mh.roots(&a12, &a12.negated()).unwrap(), MHatEntry::Infinite);
        assert_eq!(mh.roots(&a12, &a13).unwrap(), MHatEntry::Infinite);
        assert_eq!(mh.roots(&a12, &a12).unwrap(), MHatEntry::Finite(1));
        let other = g("family A 3");
        assert_eq!(mh.roots(&a12, &Root::simple(&other, 0)), Err(Error::GraphMismatch));
    }

    #[test]
    fn pair_orbits() {
        let a2 = g("family A 2");
        let table = pair_orbit_table(&a2, 100).unwrap();
        assert_eq!(table.len(), 12);
        assert!(table.values().all(|&m| m == 3));

        let a1a1 = g("family A 1\nfamily A 1");
        let table = pair_orbit_table(&a1a1, 100).unwrap();
        assert_eq!(table.len(), 8);
        assert!(table.values().all(|&m| m == 2));

        let b2 = g("family B 2");
        assert!(pair_orbit_table(&b2, 100).unwrap().values().any(|&m| m == 4));
        assert!(pair_orbit_table(&g("family tA 1"), 100).is_err());
    }

    #[test]
    fn mhat_symmetry_and_values() {
        for text in ["family B 2", "family B 3", "family H 3", "family I2 5", "family I2 6"] {
            let graph = g(text);
            let mh = MHat::new(&graph, DEFAULT_DEPTH, DEFAULT_CAP).unwrap();
            let phi = enumerate_roots(&graph, None, DEFAULT_CAP).unwrap();
            for b in phi.roots() {
                for c in phi.roots() {
                    let e = mh.roots(b, c).unwrap();
                    assert_eq!(e, mh.roots(c, b).unwrap());
                    if let MHatEntry::Finite(m) = e {
                        if m > 1 {
                            let expected = coxeter_value(Some(m), graph.context()).unwrap();
                            assert_eq!(graph.pairing(b.coords(), c.coords()), expected);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn affine_search() {
        let ta2 = g("family tA 2");
        let mh = MHat::new(&ta2, DEFAULT_DEPTH, DEFAULT_CAP).unwrap();
        assert!(!mh.is_exhaustive());
        let b = Root::from_witness(&ta2, &[2, 1], 0);
        let c = Root::from_witness(&ta2, &[2, 1], 1);
        assert_eq!(mh.roots(&b, &c).unwrap(), MHatEntry::Finite(3));

        let tc2 = g("family tC 2");
        let b = Root::from_witness(&tc2, &[2, 1], 0);
        let c = Root::from_witness(&tc2, &[2, 1], 1);
        let mh = MHat::new(&tc2, DEFAULT_DEPTH, DEFAULT_CAP).unwrap();
        assert_eq!(mh.roots(&b, &c).unwrap(), MHatEntry::Finite(4));
        let shallow = MHat::new(&tc2, 0, DEFAULT_CAP).unwrap();
        assert_eq!(shallow.roots(&b, &c).unwrap(), MHatEntry::Undetermined(0));
        assert_eq!(shallow.roots(&b, &b.negated()).unwrap(), MHatEntry::Infinite);
    }
}
