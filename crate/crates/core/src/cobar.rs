//! Truncated cobar complex `C⁺ → C⁺⊗C⁺ → C⁺⊗C⁺⊗C⁺` and its second cohomology.
//!
//! Truncating at total weighted degree `N` loses nothing in degrees `≤ N`:
//! `∂` never raises degree, and the degree-preserving part of `∂¹` only
//! kills degree-1 primitives, so a cocycle of degree `≤ N` that is a
//! coboundary is already cobounded inside the truncation.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::coalgebra::{HopfPresentation, Tensor};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, SparseVec};
use crate::ore::{Element, Monomial};
use crate::structure::monomial_key;

type Tuple = Vec<Monomial>;

#[derive(Clone, Debug)]
pub struct CobarComplex {
    pub bound: u32,
    names: Vec<String>,
    degrees: Vec<u32>,
    bidegrees: Option<Vec<(u32, u32)>>,
    rank1: Vec<Monomial>,
    rank2: Vec<Tuple>,
    rank3: Vec<Tuple>,
    /// `∂¹` column by column, over `rank2`.
    d1: Vec<SparseVec>,
    /// `∂²` column by column, over `rank3`.
    d2: Vec<SparseVec>,
}

fn tuple_key(t: &[Monomial], degrees: &[u32]) -> (u32, Vec<(u32, Reverse<Vec<u32>>)>) {
    let keys: Vec<_> = t.iter().map(|m| monomial_key(m, degrees)).collect();
    (keys.iter().map(|k| k.0).sum(), keys)
}

fn tuples(monomials: &[Monomial], degrees: &[u32], rank: usize, bound: u32) -> Vec<Tuple> {
    let mut out: Vec<Tuple> = vec![Vec::new()];
    for _ in 0..rank {
        let mut next = Vec::new();
        for t in &out {
            let used: u32 = t.iter().map(|m| m.weighted_degree(degrees)).sum();
            for m in monomials {
                if used + m.weighted_degree(degrees) <= bound {
                    let mut t2 = t.clone();
                    t2.push(m.clone());
                    next.push(t2);
                }
            }
        }
        out = next;
    }
    out.sort_by_cached_key(|t| tuple_key(t, degrees));
    out
}

/// `Σ (-1)^k  t_0 ⊗ … ⊗ δ(t_k) ⊗ … ⊗ t_{r-1}`.
fn differential(h: &HopfPresentation, t: &[Monomial], index: &HashMap<Tuple, usize>) -> SparseVec {
    let mut out = SparseVec::new();
    for k in 0..t.len() {
        let sign = if k % 2 == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        for (pair, c) in h.reduced_monomial(&t[k]).terms() {
            let mut image = t[..k].to_vec();
            image.extend(pair.iter().cloned());
            image.extend(t[k + 1..].iter().cloned());
            let i = index[&image];
            let e = out.entry(i).or_insert_with(Scalar::zero);
            *e += &(c * &sign);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn rank_of(cols: &[&SparseVec], nrows: usize) -> usize {
    if cols.is_empty() {
        return 0;
    }
    Matrix::from_sparse_rows(nrows.max(1), cols.iter().map(|c| (*c).clone()).collect()).rank()
}

/// Builds the complex in ranks 1 to 3 up to total weighted degree `bound`.
pub fn build_complex(h: &HopfPresentation, bound: u32) -> CobarComplex {
    let degrees = h.degrees().to_vec();
    let mut rank1 = h.algebra().monomials_between(1, bound);
    rank1.sort_by_key(|m| monomial_key(m, &degrees));
    let rank2 = tuples(&rank1, &degrees, 2, bound);
    let rank3 = tuples(&rank1, &degrees, 3, bound);
    let idx2: HashMap<Tuple, usize> = rank2
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let idx3: HashMap<Tuple, usize> = rank3
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let d1 = rank1
        .iter()
        .map(|m| differential(h, std::slice::from_ref(m), &idx2))
        .collect();
    let d2 = rank2.iter().map(|t| differential(h, t, &idx3)).collect();
    let bidegrees = h
        .algebra()
        .generators()
        .iter()
        .map(|g| g.bidegree)
        .collect::<Option<Vec<_>>>();
    CobarComplex {
        bound,
        names: h.names().to_vec(),
        degrees,
        bidegrees,
        rank1,
        rank2,
        rank3,
        d1,
        d2,
    }
}

impl CobarComplex {
    pub fn rank1(&self) -> &[Monomial] {
        &self.rank1
    }

    pub fn rank2(&self) -> &[Tuple] {
        &self.rank2
    }

    pub fn rank3(&self) -> &[Tuple] {
        &self.rank3
    }

    /// `∂¹` as a `rank2 × rank1` matrix.
    pub fn d1(&self) -> Matrix {
        Matrix::from_sparse_rows(self.rank2.len().max(1), self.d1.clone()).transpose()
    }

    /// `∂²` as a `rank3 × rank2` matrix.
    pub fn d2(&self) -> Matrix {
        Matrix::from_sparse_rows(self.rank3.len().max(1), self.d2.clone()).transpose()
    }

    /// `∂¹` of a single monomial as a tensor.
    pub fn d1_of(&self, m: &Monomial) -> Tensor {
        let i = self
            .rank1
            .iter()
            .position(|x| x == m)
            .expect("monomial in range");
        let mut t = Tensor::zero(self.names.len(), 2);
        for (&k, c) in &self.d1[i] {
            t.add_term(self.rank2[k].clone(), c.clone());
        }
        t
    }

    /// `∂²∘∂¹ = 0` column by column.
    pub fn squares_to_zero(&self) -> bool {
        self.d1.iter().all(|col| {
            let mut acc = SparseVec::new();
            for (&j, c) in col {
                crate::exactlin::axpy(&mut acc, c, &self.d2[j]);
            }
            acc.values().all(|c| c.is_zero())
        })
    }

    fn degree_of(&self, t: &[Monomial]) -> u32 {
        t.iter().map(|m| m.weighted_degree(&self.degrees)).sum()
    }

    fn bidegree_of(&self, t: &[Monomial]) -> Option<(u32, u32)> {
        let bi = self.bidegrees.as_ref()?;
        let mut acc = (0, 0);
        for m in t {
            for (g, &e) in m.exponents().iter().enumerate() {
                acc.0 += bi[g].0 * e;
                acc.1 += bi[g].1 * e;
            }
        }
        Some(acc)
    }

    /// Cohomology of the truncation to total degree `≤ k ≤ bound`.
    fn h2_upto(&self, k: u32) -> (usize, usize) {
        let c1: Vec<&SparseVec> = self
            .rank1
            .iter()
            .zip(&self.d1)
            .filter(|(m, _)| m.weighted_degree(&self.degrees) <= k)
            .map(|(_, c)| c)
            .collect();
        let c2: Vec<&SparseVec> = self
            .rank2
            .iter()
            .zip(&self.d2)
            .filter(|(t, _)| self.degree_of(t) <= k)
            .map(|(_, c)| c)
            .collect();
        let cocycles = c2.len() - rank_of(&c2, self.rank3.len());
        (cocycles, rank_of(&c1, self.rank2.len()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CobarEntry {
    /// `[a, b]` in bidegree mode, `[k]` for the truncation at total degree `k`.
    pub degree: Vec<u32>,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub h2: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CobarReport {
    pub label: String,
    pub bound: u32,
    pub by_bidegree: bool,
    pub entries: Vec<CobarEntry>,
    pub total_h2: usize,
    pub squares_to_zero: bool,
}

impl CobarReport {
    pub fn h2_at(&self, degree: &[u32]) -> Option<usize> {
        self.entries
            .iter()
            .find(|e| e.degree == degree)
            .map(|e| e.h2)
    }

    /// Nonzero entries as `(degree, dim H²)`.
    pub fn nonzero(&self) -> Vec<(Vec<u32>, usize)> {
        self.entries
            .iter()
            .filter(|e| e.h2 > 0)
            .map(|e| (e.degree.clone(), e.h2))
            .collect()
    }
}

/// `H²` of the complex truncated at `bound`. In bidegree mode one entry per
/// bidegree of total `≤ bound`; otherwise one entry per truncation level
/// `k ≤ bound` with cumulative dimensions, the last one giving the total.
pub fn h2_report(h: &HopfPresentation, bound: u32, by_bidegree: bool) -> Result<CobarReport> {
    if by_bidegree && !h.algebra().has_bidegrees() {
        return Err(Error::Input(format!("{} carries no bidegrees", h.label())));
    }
    let cx = build_complex(h, bound);
    let entries = if by_bidegree {
        bidegree_entries(&cx)?
    } else {
        (1..=bound)
            .map(|k| {
                let (cocycles, coboundaries) = cx.h2_upto(k);
                CobarEntry {
                    degree: vec![k],
                    cocycles,
                    coboundaries,
                    h2: cocycles - coboundaries,
                }
            })
            .collect()
    };
    let total_h2 = if by_bidegree {
        entries.iter().map(|e| e.h2).sum()
    } else {
        entries.last().map_or(0, |e| e.h2)
    };
    Ok(CobarReport {
        label: h.label().to_string(),
        bound,
        by_bidegree,
        entries,
        total_h2,
        squares_to_zero: cx.squares_to_zero(),
    })
}

fn bidegree_entries(cx: &CobarComplex) -> Result<Vec<CobarEntry>> {
    let inhomogeneous = || Error::Input("differential does not preserve bidegrees".into());
    let mut c1: BTreeMap<(u32, u32), Vec<&SparseVec>> = BTreeMap::new();
    let mut c2: BTreeMap<(u32, u32), Vec<&SparseVec>> = BTreeMap::new();
    for (m, col) in cx.rank1.iter().zip(&cx.d1) {
        let b = cx.bidegree_of(std::slice::from_ref(m)).expect("bidegrees");
        if col.keys().any(|&j| cx.bidegree_of(&cx.rank2[j]) != Some(b)) {
            return Err(inhomogeneous());
        }
        c1.entry(b).or_default().push(col);
    }
    for (t, col) in cx.rank2.iter().zip(&cx.d2) {
        let b = cx.bidegree_of(t).expect("bidegrees");
        if col.keys().any(|&j| cx.bidegree_of(&cx.rank3[j]) != Some(b)) {
            return Err(inhomogeneous());
        }
        c2.entry(b).or_default().push(col);
    }
    let mut out = Vec::new();
    for total in 1..=cx.bound {
        for a in (0..=total).rev() {
            let b = (a, total - a);
            let cols2 = c2.get(&b).map(Vec::as_slice).unwrap_or(&[]);
            let cols1 = c1.get(&b).map(Vec::as_slice).unwrap_or(&[]);
            let cocycles = cols2.len() - rank_of(cols2, cx.rank3.len());
            let coboundaries = rank_of(cols1, cx.rank2.len());
            out.push(CobarEntry {
                degree: vec![b.0, b.1],
                cocycles,
                coboundaries,
                h2: cocycles - coboundaries,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Coboundary {
    /// `∂¹(witness) = w`.
    Yes(Element),
    /// Appending `w` to the image of `∂¹` raises its rank.
    No {
        image_rank: usize,
        extended_rank: usize,
    },
}

impl Coboundary {
    pub fn is_coboundary(&self) -> bool {
        matches!(self, Coboundary::Yes(_))
    }
}

/// Solves `∂¹(c) = w` with `c` of degree `≤ max(deg w, 1)`.
pub fn is_coboundary(h: &HopfPresentation, w: &Tensor, bound: u32) -> Result<Coboundary> {
    if w.rank() != 2 {
        return Err(Error::Input("expected a rank-2 tensor".into()));
    }
    if w.terms().any(|(t, _)| t.iter().any(Monomial::is_unit)) {
        return Err(Error::Input(
            "cochains live in C⁺⊗C⁺; found a unit factor".into(),
        ));
    }
    let deg = w.weighted_degree(h.degrees()).unwrap_or(0).max(1);
    if deg > bound {
        return Err(Error::Input(format!(
            "tensor has degree {deg} above the bound {bound}"
        )));
    }
    let cx = build_complex(h, deg);
    let idx2: HashMap<&Tuple, usize> = cx.rank2.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut target = SparseVec::new();
    for (t, c) in w.terms() {
        let i = *idx2
            .get(t)
            .ok_or_else(|| Error::Input("tensor exceeds the degree bound".into()))?;
        target.insert(i, c.clone());
    }
    let idx3: HashMap<Tuple, usize> = cx
        .rank3
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let mut dw = SparseVec::new();
    for (&i, c) in &target {
        let col = differential(h, &cx.rank2[i], &idx3);
        crate::exactlin::axpy(&mut dw, c, &col);
    }
    if dw.values().any(|c| !c.is_zero()) {
        return Err(Error::Input("not a 2-cocycle".into()));
    }
    if target.is_empty() {
        return Ok(Coboundary::Yes(h.algebra().zero()));
    }
    let n2 = cx.rank2.len();
    let image_rank = rank_of(&cx.d1.iter().collect::<Vec<_>>(), n2);
    let d1 = cx.d1();
    let rhs: Vec<Scalar> = (0..n2)
        .map(|i| target.get(&i).cloned().unwrap_or_else(Scalar::zero))
        .collect();
    match d1.solve(&rhs) {
        Some(sol) => Ok(Coboundary::Yes(Element::from_terms(
            h.ngens(),
            sol.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (cx.rank1[i].clone(), c)),
        ))),
        None => {
            let mut cols: Vec<&SparseVec> = cx.d1.iter().collect();
            cols.push(&target);
            Ok(Coboundary::No {
                image_rank,
                extended_rank: rank_of(&cols, n2),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_a, make_b};

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn first_differentials() {
        let h = make_a(&q(0), &q(0), &q(0));
        let cx = build_complex(&h, 4);
        let m = |s: &str| h.parse(s).unwrap().terms().next().unwrap().0.clone();
        assert_eq!(cx.d1_of(&m("Z")), h.parse_tensor("X⊗Y - Y⊗X").unwrap());
        assert!(cx.d1_of(&m("X")).is_zero());
        assert_eq!(
            cx.d1_of(&m("X^2*Y")),
            h.parse_tensor("X^2⊗Y + 2*X*Y⊗X + 2*X⊗X*Y + Y⊗X^2").unwrap()
        );
        assert!(cx.squares_to_zero());
    }

    #[test]
    fn graded_model_has_two_classes() {
        let h = make_a(&q(0), &q(0), &q(0));
        let r = h2_report(&h, 6, true).unwrap();
        assert_eq!(r.nonzero(), vec![(vec![2, 1], 1), (vec![1, 2], 1)]);
    }

    #[test]
    fn filtered_models_have_two_classes() {
        for h in [make_a(&q(1), &q(0), &q(0)), make_b(&q(0))] {
            let r = h2_report(&h, 6, false).unwrap();
            assert_eq!(r.total_h2, 2, "{}", h.label());
        }
    }

    #[test]
    fn coboundary_witnesses() {
        let h = make_a(&q(0), &q(0), &q(0));
        let u = h.parse_tensor("Z⊗X - X⊗Z + X*Y⊗X + X⊗X*Y").unwrap();
        assert!(!is_coboundary(&h, &u, 6).unwrap().is_coboundary());
        let w = h.reduced_coproduct(&h.parse("X^2*Y").unwrap()).unwrap();
        let Coboundary::Yes(c) = is_coboundary(&h, &w, 6).unwrap() else {
            panic!("expected a coboundary");
        };
        assert_eq!(h.reduced_coproduct(&c).unwrap(), w);
        assert_eq!(
            is_coboundary(&h, &Tensor::zero(3, 2), 6).unwrap(),
            Coboundary::Yes(h.algebra().zero())
        );
        let bad = h.parse_tensor("Z⊗X").unwrap();
        assert!(is_coboundary(&h, &bad, 6).is_err());
    }
}
