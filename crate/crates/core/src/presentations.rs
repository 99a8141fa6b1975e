//! `Γ̂` on finite root sets, the kernel presentations, and the
//! free-of-infinity and dimension reports.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::coxeter::{classify, prod_right, CoxeterGraph, Kind, Label};
use crate::error::{Error, Result};
use crate::numfield::{coxeter_value, FieldElement};
use crate::roots::{render_vector, MHat, MHatEntry, Root};
use crate::virtual_artin::label_table;

pub const FOI_LIMIT: usize = 20;

/// The full subgraph of `Γ̂` on a finite set of roots.
pub struct GammaHat {
    base: Arc<CoxeterGraph>,
    roots: Vec<Root>,
    graph: Arc<CoxeterGraph>,
}

impl fmt::Debug for GammaHat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GammaHat").field("graph", &self.graph).finish()
    }
}

/// Labels `m̂` on `roots` (duplicates dropped, order kept); undetermined
/// entries are an error.
pub fn gamma_hat(base: &Arc<CoxeterGraph>, roots: &[Root], mhat: &MHat) -> Result<GammaHat> {
    if **mhat.graph() != **base {
        return Err(Error::GraphMismatch);
    }
    let mut unique: Vec<Root> = Vec::new();
    for r in roots {
        if !unique.contains(r) {
            unique.push(r.clone());
        }
    }
    let table = label_table(&unique, mhat)?;
    let labels = table
        .iter()
        .map(|row| row.iter().map(|e| e.as_label().expect("determined")).collect())
        .collect();
    let names = unique.iter().map(|r| render_vector(r.coords())).collect();
    let graph = CoxeterGraph::from_matrix(names, labels)?;
    Ok(GammaHat {
        base: base.clone(),
        roots: unique,
        graph,
    })
}

impl GammaHat {
    pub fn base(&self) -> &Arc<CoxeterGraph> {
        &self.base
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// `Γ̂_X` as a Coxeter graph whose vertices are named by root coordinates.
    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn label(&self, i: usize, j: usize) -> MHatEntry {
        match self.graph.label(i, j) {
            Label::Finite(m) => MHatEntry::Finite(m),
            Label::Infinite => MHatEntry::Infinite,
        }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn restrict(&self, indices: &[usize]) -> GammaHat {
        GammaHat {
            base: self.base.clone(),
            roots: indices.iter().map(|&i| self.roots[i].clone()).collect(),
            graph: self.graph.subgraph(indices),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    /// Pairs of words over generator indices.
    pub relations: Vec<(Vec<usize>, Vec<usize>)>,
    /// Unordered generator pairs with their labels.
    pub labels: Vec<(usize, usize, MHatEntry)>,
}

#[derive(Debug, Serialize)]
pub struct RelationDoc {
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct LabelDoc {
    pub a: String,
    pub b: String,
    pub m: String,
}

#[derive(Debug, Serialize)]
pub struct PresentationDoc {
    pub generators: Vec<String>,
    pub relations: Vec<RelationDoc>,
    pub labels: Vec<LabelDoc>,
}

impl Presentation {
    fn word(&self, w: &[usize]) -> Vec<String> {
        w.iter().map(|&i| self.generators[i].clone()).collect()
    }

    pub fn to_doc(&self) -> PresentationDoc {
        PresentationDoc {
            generators: self.generators.clone(),
            relations: self
                .relations
                .iter()
                .map(|(l, r)| RelationDoc {
                    lhs: self.word(l),
                    rhs: self.word(r),
                })
                .collect(),
            labels: self
                .labels
                .iter()
                .map(|&(a, b, m)| LabelDoc {
                    a: self.generators[a].clone(),
                    b: self.generators[b].clone(),
                    m: m.to_string(),
                })
                .collect(),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gen {}", self.generators.join(" "))?;
        for (l, r) in &self.relations {
            writeln!(f, "rel {} = {}", self.word(l).join(" "), self.word(r).join(" "))?;
        }
        Ok(())
    }
}

fn pairs(h: &GammaHat) -> Vec<(usize, usize, MHatEntry)> {
    let n = h.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j, h.label(i, j)));
        }
    }
    out
}

/// Generators `δ_β`; for each pair with finite `m̂` the Artin relation
/// `Prod_R(δ_γ, δ_β, m̂) = Prod_R(δ_β, δ_γ, m̂)`.
pub fn kva_presentation(h: &GammaHat) -> Presentation {
    let generators = h.roots.iter().map(|r| format!("d{}", render_vector(r.coords()))).collect();
    let labels = pairs(h);
    let relations = labels
        .iter()
        .filter_map(|&(b, c, m)| {
            let m = m.finite()? as usize;
            Some((prod_right(c, b, m), prod_right(b, c, m)))
        })
        .collect();
    Presentation {
        generators,
        relations,
        labels,
    }
}

fn reflect(g: &CoxeterGraph, v: &[FieldElement], beta: &[FieldElement]) -> Vec<FieldElement> {
    let c = g.pairing(v, beta);
    v.iter().zip(beta).map(|(x, b)| x - &(&c * b)).collect()
}

/// `(β_1, …, β_m)` with `β_1 = β`, `β_k = Prod_R(r_γ, r_β, k−1)(γ)` for even
/// `k` and `Prod_R(r_β, r_γ, k−1)(β)` for odd `k`.
pub fn z_word(beta: &Root, gamma: &Root, m: u32) -> Result<Vec<Root>> {
    let g = beta.graph();
    let c = g.pairing(beta.coords(), gamma.coords());
    let expected = coxeter_value(Some(m), g.context()).ok();
    if m < 2 || expected.as_ref() != Some(&c) {
        return Err(Error::LabelMismatch {
            label: m.to_string(),
            pairing: c.to_string(),
        });
    }
    let mut out = vec![beta.clone()];
    for k in 2..=m as usize {
        let (word, start) = if k % 2 == 0 {
            (prod_right(1u8, 0u8, k - 1), gamma)
        } else {
            (prod_right(0u8, 1u8, k - 1), beta)
        };
        // rightmost reflection acts first; 0 ↦ r_β, 1 ↦ r_γ
        let mut v = start.coords().to_vec();
        for &r in word.iter().rev() {
            let axis = if r == 0 { beta.coords() } else { gamma.coords() };
            v = reflect(g, &v, axis);
        }
        out.push(Root::from_coords(g, v, usize::MAX)?);
    }
    Ok(out)
}

/// Generators `ζ_β`; for each pair with finite `m̂` the relation
/// `Z(γ, β, m̂) = Z(β, γ, m̂)` with `Z(γ, β, m̂) = ζ_{β_m} ⋯ ζ_{β_1}`.
pub fn pva_presentation(h: &GammaHat) -> Result<Presentation> {
    let generators: Vec<String> =
        h.roots.iter().map(|r| format!("z{}", render_vector(r.coords()))).collect();
    let mut index: HashMap<Vec<FieldElement>, usize> =
        h.roots.iter().enumerate().map(|(i, r)| (r.coords().to_vec(), i)).collect();
    let mut generators = generators;
    // Z-words may leave X; such roots get fresh generators after those of X
    let mut intern = |r: &Root, generators: &mut Vec<String>| -> usize {
        *index.entry(r.coords().to_vec()).or_insert_with(|| {
            generators.push(format!("z{}", render_vector(r.coords())));
            generators.len() - 1
        })
    };
    let labels = pairs(h);
    let mut relations = Vec::new();
    for &(b, c, m) in &labels {
        let Some(m) = m.finite() else { continue };
        let forward = z_word(&h.roots[b], &h.roots[c], m)?;
        let backward = z_word(&h.roots[c], &h.roots[b], m)?;
        let lhs: Vec<usize> = forward.iter().rev().map(|r| intern(r, &mut generators)).collect();
        let rhs: Vec<usize> = backward.iter().rev().map(|r| intern(r, &mut generators)).collect();
        relations.push((lhs, rhs));
    }
    Ok(Presentation {
        generators,
        relations,
        labels,
    })
}

/// Largest spherical vertex subset, by growing spherical sets (a subset of a
/// spherical set is spherical).
pub fn n_sph(g: &Arc<CoxeterGraph>) -> usize {
    fn grow(g: &CoxeterGraph, current: &mut Vec<usize>, next: usize, best: &mut usize) {
        *best = (*best).max(current.len());
        for v in next..g.rank() {
            if current.iter().any(|&u| g.label(u, v).is_infinite()) {
                continue;
            }
            current.push(v);
            if classify(&g.subgraph(current)).kind == Kind::Spherical {
                grow(g, current, v + 1, best);
            }
            current.pop();
        }
    }
    let mut best = 0;
    grow(g, &mut Vec::new(), 0, &mut best);
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoiRow {
    pub members: Vec<usize>,
    #[serde(serialize_with = "kind_str")]
    pub kind: Kind,
    pub n_sph: usize,
}

fn kind_str<S: serde::Serializer>(k: &Kind, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&k.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoiReport {
    pub roots: Vec<String>,
    pub rows: Vec<FoiRow>,
    /// `n_sph(Γ̂_X)`.
    pub n_sph_hat: usize,
    /// `n_sph(Γ)`.
    pub n_sph_base: usize,
    pub max_foi_size: usize,
    /// `n_sph(Γ̂_X) ≤ n_sph(Γ)`.
    pub nsph_bound_holds: bool,
    /// `|Y| ≤ 2·n_sph(Γ)` for every free-of-infinity `Y`.
    pub size_bound_holds: bool,
}

/// Classifies every nonempty free-of-infinity subset of `X`.
pub fn foi_analysis(h: &GammaHat) -> Result<FoiReport> {
    let base_class = classify(h.base());
    if base_class.kind == Kind::Other {
        return Err(Error::UnsupportedType("free-of-infinity analysis needs a spherical or affine base".into()));
    }
    let n = h.len();
    if n > FOI_LIMIT {
        return Err(Error::SupportTooLarge(n, FOI_LIMIT));
    }
    let g = h.graph();
    let finite: Vec<u32> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && !g.label(i, j).is_infinite()).fold(0u32, |m, j| m | 1 << j))
        .collect();

    // cliques of the finite-label graph, each extended only by larger vertices
    let mut masks = Vec::new();
    let mut stack: Vec<(u32, u32)> = (0..n).map(|v| (1u32 << v, finite[v] & !((2u32 << v) - 1))).collect();
    stack.reverse();
    while let Some((mask, candidates)) = stack.pop() {
        masks.push(mask);
        let mut rest = candidates;
        let mut children = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            children.push((mask | 1 << v, candidates & finite[v] & !((2u32 << v) - 1)));
        }
        stack.extend(children.into_iter().rev());
    }
    masks.sort_by_key(|m| (m.count_ones(), std::cmp::Reverse(m.reverse_bits())));

    let members = |mask: u32| -> Vec<usize> { (0..n).filter(|&i| mask >> i & 1 == 1).collect() };
    let mut nsph: HashMap<u32, usize> = HashMap::new();
    let mut rows = Vec::new();
    for &mask in &masks {
        let idx = members(mask);
        let kind = classify(&g.subgraph(&idx)).kind;
        if kind == Kind::Other {
            return Err(Error::NonPositiveSubset(
                idx.iter().map(|&i| g.vertices()[i].clone()).collect::<Vec<_>>().join(" "),
            ));
        }
        let value = if kind == Kind::Spherical {
            idx.len()
        } else {
            idx.iter().map(|&i| nsph[&(mask & !(1 << i))]).max().unwrap_or(0)
        };
        nsph.insert(mask, value);
        rows.push(FoiRow {
            members: idx,
            kind,
            n_sph: value,
        });
    }
    let n_sph_hat = rows.iter().map(|r| r.n_sph).max().unwrap_or(0);
    let n_sph_base = base_class.rank();
    let max_foi_size = rows.iter().map(|r| r.members.len()).max().unwrap_or(0);
    Ok(FoiReport {
        roots: g.vertices().to_vec(),
        rows,
        n_sph_hat,
        n_sph_base,
        max_foi_size,
        nsph_bound_holds: n_sph_hat <= n_sph_base,
        size_bound_holds: max_foi_size <= 2 * n_sph_base,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    #[serde(serialize_with = "kind_str")]
    pub kind: Kind,
    pub vertices: usize,
    pub n_sph: usize,
    pub cd_kva: usize,
    pub vcd_va: usize,
    /// Exact values for spherical graphs; upper bounds for affine ones.
    pub exact: bool,
}

impl fmt::Display for DimensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.exact { "=" } else { "<=" };
        write!(f, "cd(KVA){rel}{} vcd(VA){rel}{}", self.cd_kva, self.vcd_va)
    }
}

/// `cd(KVA) = vcd(VA) = n` for spherical graphs; `cd(KVA) ≤ n_sph + 1` and
/// `vcd(VA) ≤ 2·n_sph + 1` for affine ones.
pub fn dimension_report(g: &Arc<CoxeterGraph>) -> Result<DimensionReport> {
    let class = classify(g);
    let n = g.rank();
    let n_sph = class.rank();
    match class.kind {
        Kind::Spherical => Ok(DimensionReport {
            kind: class.kind,
            vertices: n,
            n_sph,
            cd_kva: n,
            vcd_va: n,
            exact: true,
        }),
        Kind::Affine => Ok(DimensionReport {
            kind: class.kind,
            vertices: n,
            n_sph,
            cd_kva: n_sph + 1,
            vcd_va: 2 * n_sph + 1,
            exact: false,
        }),
        Kind::Other => Err(Error::UnsupportedType("dimension report needs a spherical or affine graph".into())),
    }
}
