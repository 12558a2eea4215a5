//! Primitive and anti-cocommutative spaces, coradical filtration pieces,
//! CLA extraction, associated graded and lantern, all on degree truncations.

mod lantern;

pub use lantern::{associated_graded, lantern_of_hopf};

use std::cmp::Reverse;
use std::collections::HashMap;
use std::hash::Hash;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cla::Cla;
use crate::coalgebra::{HopfPresentation, Tensor};
use crate::error::{Error, Result};
use crate::exactlin::{dense_to_sparse, Echelon, Matrix, Scalar, SparseVec};
use crate::ore::{Element, Monomial};

/// Ascending canonical order: weighted degree, then exponent vectors in
/// descending lexicographic order, so `X < Y` and `XY² < W` in degree 3.
pub fn monomial_key(m: &Monomial, degrees: &[u32]) -> (u32, Reverse<Vec<u32>>) {
    (m.weighted_degree(degrees), Reverse(m.exponents().to_vec()))
}

/// Assigns dense indices to keys on first use.
pub(crate) struct Indexer<K> {
    map: HashMap<K, usize>,
}

impl<K: Hash + Eq + Clone> Indexer<K> {
    pub(crate) fn new() -> Self {
        Indexer {
            map: HashMap::new(),
        }
    }

    pub(crate) fn index(&mut self, k: &K) -> usize {
        let next = self.map.len();
        *self.map.entry(k.clone()).or_insert(next)
    }

    pub(crate) fn len(&self) -> usize {
        self.map.len()
    }
}

/// Monomials of degree `1..=d` as coordinates, highest monomial first so
/// that echelon pivots land on leading monomials.
pub(crate) struct Coords {
    pub(crate) monomials: Vec<Monomial>,
    pub(crate) index: HashMap<Monomial, usize>,
}

impl Coords {
    pub(crate) fn new(h: &HopfPresentation, d: u32) -> Self {
        let degrees = h.degrees();
        let mut monomials = h.algebra().monomials_between(1, d);
        monomials.sort_by_key(|m| Reverse(monomial_key(m, degrees)));
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Coords { monomials, index }
    }

    pub(crate) fn len(&self) -> usize {
        self.monomials.len()
    }

    pub(crate) fn vector(&self, a: &Element) -> Option<SparseVec> {
        let mut v = SparseVec::new();
        for (m, c) in a.terms() {
            v.insert(*self.index.get(m)?, c.clone());
        }
        Some(v)
    }

    pub(crate) fn element(&self, nvars: usize, v: &SparseVec) -> Element {
        Element::from_terms(
            nvars,
            v.iter()
                .map(|(&i, c)| (self.monomials[i].clone(), c.clone())),
        )
    }
}

/// A subspace of `H` inside the truncation to weighted degree `≤ degree_bound`,
/// held in reduced echelon form with respect to the canonical monomial order.
#[derive(Clone, Debug)]
pub struct FilteredSubspace {
    pub kind: String,
    pub degree_bound: u32,
    names: Vec<String>,
    degrees: Vec<u32>,
    basis: Vec<Element>,
}

impl FilteredSubspace {
    /// Canonicalizes an arbitrary spanning list.
    pub fn from_spanning(
        h: &HopfPresentation,
        kind: impl Into<String>,
        d: u32,
        span: &[Element],
    ) -> Self {
        let n = h.ngens();
        let degrees = h.degrees().to_vec();
        let mut all: Vec<Monomial> = span
            .iter()
            .flat_map(|e| e.terms().map(|(m, _)| m.clone()))
            .collect();
        all.sort_by_key(|m| Reverse(monomial_key(m, &degrees)));
        all.dedup();
        let index: HashMap<&Monomial, usize> =
            all.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut ech = Echelon::new(all.len());
        for e in span {
            ech.insert(e.terms().map(|(m, c)| (index[m], c.clone())).collect());
        }
        let mut basis: Vec<Element> = ech
            .into_reduced()
            .0
            .iter()
            .map(|r| Element::from_terms(n, r.iter().map(|(&i, c)| (all[i].clone(), c.clone()))))
            .collect();
        basis.sort_by_key(|e| leading(e, &degrees).map(|m| monomial_key(&m, &degrees)));
        FilteredSubspace {
            kind: kind.into(),
            degree_bound: d,
            names: h.names().to_vec(),
            degrees,
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Coefficients of `a` in the basis, or `None` when `a` lies outside.
    pub fn coordinates(&self, a: &Element) -> Option<Vec<Scalar>> {
        if a.is_zero() {
            return Some(vec![Scalar::zero(); self.dim()]);
        }
        if self.basis.is_empty() {
            return None;
        }
        let mut idx = Indexer::new();
        let cols: Vec<SparseVec> = self
            .basis
            .iter()
            .map(|b| b.terms().map(|(m, c)| (idx.index(m), c.clone())).collect())
            .collect();
        let target: SparseVec = a.terms().map(|(m, c)| (idx.index(m), c.clone())).collect();
        let rows = idx.len();
        let m = Matrix::from_sparse_rows(rows, cols).transpose();
        let mut rhs = vec![Scalar::zero(); rows];
        for (i, c) in target {
            rhs[i] = c;
        }
        m.solve(&rhs)
    }

    pub fn contains(&self, a: &Element) -> bool {
        self.coordinates(a).is_some()
    }

    pub fn is_subspace_of(&self, other: &FilteredSubspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn render_basis(&self) -> Vec<String> {
        self.basis.iter().map(|e| e.render(&self.names)).collect()
    }

    /// Display names: the generator itself, `g'` when the leading monomial
    /// is a generator, otherwise `e{i}`.
    pub fn basis_names(&self) -> Vec<String> {
        self.basis
            .iter()
            .enumerate()
            .map(|(i, e)| {
                if let Some(g) = single_generator(e) {
                    return self.names[g].clone();
                }
                match leading(e, &self.degrees).and_then(|m| m.as_generator()) {
                    Some(g) => format!("{}'", self.names[g]),
                    None => format!("e{}", i + 1),
                }
            })
            .collect()
    }
}

fn single_generator(e: &Element) -> Option<usize> {
    let mut it = e.terms();
    match (it.next(), it.next()) {
        (Some((m, c)), None) if c.is_one() => m.as_generator(),
        _ => None,
    }
}

/// Highest monomial of `e` in the canonical order.
pub fn leading(e: &Element, degrees: &[u32]) -> Option<Monomial> {
    e.terms()
        .map(|(m, _)| m.clone())
        .max_by_key(|m| monomial_key(m, degrees))
}

#[derive(Serialize)]
struct TermJson {
    coeff: Scalar,
    monomial: String,
}

impl Serialize for FilteredSubspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<Vec<TermJson>> = self
            .basis
            .iter()
            .map(|e| {
                e.terms()
                    .rev()
                    .map(|(m, c)| TermJson {
                        coeff: c.clone(),
                        monomial: m.render(&self.names),
                    })
                    .collect()
            })
            .collect();
        let mut st = s.serialize_struct("FilteredSubspace", 5)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("degree_bound", &self.degree_bound)?;
        st.serialize_field("dimension", &self.dim())?;
        st.serialize_field("basis", &self.render_basis())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Linear map `a ↦ ((π⊗id)δa, (id⊗π)δa, δa + τδa)` on non-unit monomials of
/// degree `≤ d`, where `π` kills `v`; its kernel is the set of `a` with
/// `δa ∈ v⊗v` (and skew when `skew` is set).
fn constrained_kernel(h: &HopfPresentation, d: u32, v: &[Element], skew: bool) -> Vec<Element> {
    let n = h.ngens();
    let coords = Coords::new(h, d);
    let mut ech = Echelon::new(coords.len());
    for e in v {
        ech.insert(coords.vector(e).expect("subspace inside the truncation"));
    }
    let project = |m: &Monomial| -> SparseVec {
        let mut r = SparseVec::new();
        r.insert(coords.index[m], Scalar::one());
        ech.reduce(r)
    };
    // tensor coordinates: (side, reduced column, other factor)
    let mut idx: Indexer<(u8, usize, Monomial)> = Indexer::new();
    let mut skew_idx: Indexer<(Monomial, Monomial)> = Indexer::new();
    let mut columns: Vec<(SparseVec, SparseVec)> = Vec::with_capacity(coords.len());
    for m in &coords.monomials {
        let delta = h.reduced_monomial(m);
        let mut col = SparseVec::new();
        let add = |col: &mut SparseVec, k: usize, c: Scalar| {
            let e = col.entry(k).or_insert_with(Scalar::zero);
            *e += &c;
        };
        for (t, c) in delta.terms() {
            for (side, (proj, other)) in [(0u8, (&t[0], &t[1])), (1u8, (&t[1], &t[0]))] {
                for (col_i, pc) in project(proj) {
                    let k = idx.index(&(side, col_i, other.clone()));
                    add(&mut col, k, c * &pc);
                }
            }
        }
        let mut sk = SparseVec::new();
        if skew {
            for (t, c) in delta.terms() {
                let k = skew_idx.index(&(t[0].clone(), t[1].clone()));
                add(&mut sk, k, c.clone());
                let k = skew_idx.index(&(t[1].clone(), t[0].clone()));
                add(&mut sk, k, c.clone());
            }
        }
        columns.push((col, sk));
    }
    let offset = idx.len();
    let rows: Vec<SparseVec> = columns
        .into_iter()
        .map(|(mut col, sk)| {
            col.extend(sk.into_iter().map(|(k, c)| (k + offset, c)));
            col.retain(|_, c| !c.is_zero());
            col
        })
        .collect();
    let total = offset + skew_idx.len();
    let matrix = Matrix::from_sparse_rows(total.max(1), rows).transpose();
    matrix
        .kernel_basis()
        .iter()
        .map(|k| coords.element(n, &dense_to_sparse(k)))
        .collect()
}

/// `P(H)` within degree `≤ d`.
pub fn primitive_space(h: &HopfPresentation, d: u32) -> FilteredSubspace {
    let span = constrained_kernel(h, d, &[], false);
    FilteredSubspace::from_spanning(h, "P", d, &span)
}

/// `P₂(H)`: `δa ∈ P⊗P` and `τδa = -δa`, within degree `≤ d`.
pub fn p2_space(h: &HopfPresentation, d: u32) -> FilteredSubspace {
    let p = primitive_space(h, d);
    let span = constrained_kernel(h, d, p.basis(), true);
    FilteredSubspace::from_spanning(h, "P2", d, &span)
}

/// `H_n` within degree `≤ d`: `H_0 = k1` and `H_n = k1 ⊕ {a ∈ H⁺ : δa ∈ H⁺_{n-1} ⊗ H⁺_{n-1}}`.
pub fn coradical_filtration(h: &HopfPresentation, n: u32, d: u32) -> FilteredSubspace {
    let mut plus: Vec<Element> = Vec::new();
    for _ in 0..n {
        plus = constrained_kernel(h, d, &plus, false);
    }
    let mut span = vec![h.algebra().one()];
    span.extend(plus);
    FilteredSubspace::from_spanning(h, format!("H_{n}"), d, &span)
}

/// The CLA `P₂(H)` with brackets and coproduct read off in the canonical
/// basis. Requires `dim P₂` to be the same at bounds `d - 1` and `d`.
pub fn extract_cla(h: &HopfPresentation, d: u32) -> Result<Cla> {
    if d < 2 {
        return Err(Error::Input(
            "extract_cla needs a degree bound of at least 2".into(),
        ));
    }
    let p2 = p2_space(h, d);
    let lower = p2_space(h, d - 1);
    if lower.dim() != p2.dim() {
        return Err(Error::Structural(format!(
            "P2 is not stable: dimension {} at bound {} but {} at bound {d}",
            lower.dim(),
            d - 1,
            p2.dim()
        )));
    }
    if p2.dim() == 0 {
        return Err(Error::Structural("P2 is zero".into()));
    }
    let names = p2.basis_names();
    let basis = p2.basis();
    let k = basis.len();
    let mut l = Cla::new(names.clone())?;
    for a in 0..k {
        for b in a + 1..k {
            let br = h.algebra().bracket(&basis[a], &basis[b])?;
            let c = p2.coordinates(&br).ok_or_else(|| {
                Error::Structural(format!("[{}, {}] leaves P2", names[a], names[b]))
            })?;
            l.set_bracket(a, b, c)?;
        }
    }
    // δ(e_a) = Σ d_jk e_j⊗e_k, solved over pairs of basis elements
    let pair_tensors: Vec<Tensor> = (0..k * k)
        .map(|jk| Tensor::from_elements(h.ngens(), &[&basis[jk / k], &basis[jk % k]]))
        .collect();
    let mut idx: Indexer<Vec<Monomial>> = Indexer::new();
    let cols: Vec<SparseVec> = pair_tensors
        .iter()
        .map(|t| t.terms().map(|(u, c)| (idx.index(u), c.clone())).collect())
        .collect();
    for a in 0..k {
        let delta = h.reduced_coproduct(&basis[a])?;
        let target: Vec<(usize, Scalar)> = delta
            .terms()
            .map(|(u, c)| (idx.index(u), c.clone()))
            .collect();
        let rows = idx.len();
        let m = Matrix::from_sparse_rows(rows.max(1), cols.clone()).transpose();
        let mut rhs = vec![Scalar::zero(); rows.max(1)];
        for (i, c) in target {
            rhs[i] = c;
        }
        let sol = if m.rows() < rhs.len() {
            None
        } else {
            m.solve(&rhs)
        }
        .ok_or_else(|| Error::Structural(format!("δ({}) leaves P2⊗P2", names[a])))?;
        let table = (0..k).map(|j| sol[j * k..(j + 1) * k].to_vec()).collect();
        l.set_delta(a, table)?;
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_a, make_cla_a, make_d, make_k};
    use crate::cla::enveloping;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn primitives_of_d() {
        let z = q(0);
        let d = make_d(&z, &q(1), [&q(1), &z, &z, &q(2)], &q(1), &z).unwrap();
        let p = primitive_space(&d, 5);
        assert_eq!(p.render_basis(), vec!["X", "Y"]);
        let p2 = p2_space(&d, 5);
        assert_eq!(p2.render_basis(), vec!["X", "Y", "Z"]);
    }

    #[test]
    fn coradical_levels_of_a() {
        let h = make_a(&q(0), &q(0), &q(0));
        assert_eq!(coradical_filtration(&h, 0, 3).dim(), 1);
        assert_eq!(coradical_filtration(&h, 1, 3).dim(), 3);
        let h2 = coradical_filtration(&h, 2, 3);
        assert!(h2.contains(&h.parse("Z").unwrap()));
        assert!(h2.contains(&h.parse("X*Y").unwrap()));
        assert!(!h2.contains(&h.parse("X*Y^2").unwrap()));
        assert!(!h2.contains(&h.parse("X*Z").unwrap()));
        assert!(coradical_filtration(&h, 3, 3).contains(&h.parse("X*Y^2").unwrap()));
    }

    #[test]
    fn extraction_round_trip() {
        let l = make_cla_a(&q(1), &q(2), &q(0));
        let u = enveloping(&l).unwrap();
        assert_eq!(extract_cla(&u, 4).unwrap(), l);
    }

    #[test]
    fn extraction_of_k_is_the_subalgebra_on_x_y_z() {
        let k = make_k();
        let l = extract_cla(&k, 4).unwrap();
        assert_eq!(l.names(), &["X", "Y", "Z"]);
        assert_eq!(l.bracket_of(2, 0), &[q(1), q(0), q(0)]);
    }

    #[test]
    fn canonical_basis_prefers_w_over_xy2() {
        let k = make_k();
        let w = k.parse("W - 1/2*X*Y^2").unwrap();
        let s = FilteredSubspace::from_spanning(&k, "test", 3, &[w]);
        assert_eq!(s.basis_names(), vec!["W'"]);
    }
}
