use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use super::Tensor;
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::ore::{parse_tensor, Element, Monomial, OrePresentation};

/// An Ore presentation together with the reduced coproducts
/// `δ(g) = Δ(g) - g⊗1 - 1⊗g` of its generators.
pub struct HopfPresentation {
    algebra: OrePresentation,
    deltas: Vec<Tensor>,
    label: String,
    coproduct_cache: Mutex<HashMap<Monomial, Tensor>>,
    antipode_cache: Mutex<HashMap<Monomial, Element>>,
}

impl Clone for HopfPresentation {
    fn clone(&self) -> Self {
        HopfPresentation {
            algebra: self.algebra.clone(),
            deltas: self.deltas.clone(),
            label: self.label.clone(),
            coproduct_cache: Mutex::new(HashMap::new()),
            antipode_cache: Mutex::new(HashMap::new()),
        }
    }
}

impl PartialEq for HopfPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.deltas == other.deltas
    }
}

impl Eq for HopfPresentation {}

impl fmt::Debug for HopfPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?}", self.algebra)?;
        for (g, d) in self.deltas.iter().enumerate() {
            if !d.is_zero() {
                writeln!(
                    f,
                    "  δ({}) = {}",
                    self.algebra.names()[g],
                    d.render(self.algebra.names())
                )?;
            }
        }
        Ok(())
    }
}

impl HopfPresentation {
    /// `deltas` maps generator index to its reduced coproduct; missing
    /// generators are primitive.
    pub fn new(
        algebra: OrePresentation,
        deltas: impl IntoIterator<Item = (usize, Tensor)>,
    ) -> Result<Self> {
        let n = algebra.ngens();
        let degrees = algebra.degrees().to_vec();
        let mut table = vec![Tensor::zero(n, 2); n];
        let mut seen = vec![false; n];
        for (g, d) in deltas {
            if g >= n {
                return Err(Error::Input(format!(
                    "coproduct for unknown generator index {g}"
                )));
            }
            let name = &algebra.names()[g];
            if seen[g] {
                return Err(Error::Input(format!("duplicate coproduct for `{name}`")));
            }
            seen[g] = true;
            if d.rank() != 2 || (d.nvars() != n && !d.is_zero()) {
                return Err(Error::Input(format!(
                    "δ({name}) must be a rank-2 tensor over the algebra"
                )));
            }
            for (t, _) in d.terms() {
                if t.iter().any(|m| m.is_unit()) {
                    return Err(Error::Structural(format!(
                        "δ({name}) has a unit tensor factor"
                    )));
                }
                let total: u32 = t.iter().map(|m| m.weighted_degree(&degrees)).sum();
                if total > degrees[g] {
                    return Err(Error::Structural(format!(
                        "δ({name}) has a term of degree {total} above {}",
                        degrees[g]
                    )));
                }
            }
            table[g] = d;
        }
        Ok(HopfPresentation {
            algebra,
            deltas: table,
            label: String::new(),
            coproduct_cache: Mutex::new(HashMap::new()),
            antipode_cache: Mutex::new(HashMap::new()),
        })
    }

    /// Universal enveloping algebra style: every generator primitive.
    pub fn primitive(algebra: OrePresentation) -> Self {
        HopfPresentation::new(algebra, []).expect("zero coproducts are always valid")
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn algebra(&self) -> &OrePresentation {
        &self.algebra
    }

    pub fn ngens(&self) -> usize {
        self.algebra.ngens()
    }

    pub fn names(&self) -> &[String] {
        self.algebra.names()
    }

    pub fn degrees(&self) -> &[u32] {
        self.algebra.degrees()
    }

    /// Stored reduced coproduct of generator `g`.
    pub fn delta_of(&self, g: usize) -> &Tensor {
        &self.deltas[g]
    }

    pub fn deltas(&self) -> &[Tensor] {
        &self.deltas
    }

    /// Same algebra with a replaced coproduct table.
    pub fn with_deltas(&self, deltas: impl IntoIterator<Item = (usize, Tensor)>) -> Result<Self> {
        Ok(HopfPresentation::new(self.algebra.clone(), deltas)?.with_label(self.label.clone()))
    }

    /// Same coproducts over a replaced commutator table.
    pub fn with_algebra(&self, algebra: OrePresentation) -> Result<Self> {
        let deltas = self
            .deltas
            .iter()
            .cloned()
            .enumerate()
            .filter(|(_, d)| !d.is_zero());
        Ok(HopfPresentation::new(algebra, deltas)?.with_label(self.label.clone()))
    }

    /// Attaches the coalgebra bigrading with the two degree-1 primitives in
    /// bidegrees `(1,0)` and `(0,1)`, when every `δ(g)` is bihomogeneous.
    pub fn with_inferred_bidegrees(&self) -> Option<Self> {
        let n = self.ngens();
        let degrees = self.degrees();
        let prims: Vec<usize> = (0..n).filter(|&g| self.deltas[g].is_zero()).collect();
        if prims.len() != 2 || prims.iter().any(|&g| degrees[g] != 1) {
            return None;
        }
        let mut bi: Vec<Option<(u32, u32)>> = vec![None; n];
        bi[prims[0]] = Some((1, 0));
        bi[prims[1]] = Some((0, 1));
        let mut order: Vec<usize> = (0..n).filter(|g| !prims.contains(g)).collect();
        order.sort_by_key(|&g| degrees[g]);
        for g in order {
            let mut found: Option<(u32, u32)> = None;
            for (t, _) in self.deltas[g].terms() {
                let mut acc = (0, 0);
                for m in t {
                    for (v, &e) in m.exponents().iter().enumerate().filter(|(_, &e)| e > 0) {
                        let (a, b) = bi[v]?;
                        acc.0 += a * e;
                        acc.1 += b * e;
                    }
                }
                match found {
                    Some(f) if f != acc => return None,
                    _ => found = Some(acc),
                }
            }
            let f = found?;
            if f.0 + f.1 != degrees[g] {
                return None;
            }
            bi[g] = Some(f);
        }
        let gens = self
            .algebra
            .generators()
            .iter()
            .zip(&bi)
            .map(|(g, b)| {
                let (a, c) = b.expect("all assigned");
                crate::ore::GeneratorInfo::with_bidegree(g.name.clone(), a, c)
            })
            .collect();
        let algebra = OrePresentation::new(gens, self.algebra.commutators().clone()).ok()?;
        self.with_algebra(algebra).ok()
    }

    pub fn parse(&self, text: &str) -> Result<Element> {
        self.algebra.parse(text)
    }

    pub fn render(&self, a: &Element) -> String {
        self.algebra.render(a)
    }

    pub fn render_tensor(&self, t: &Tensor) -> String {
        t.render(self.algebra.names())
    }

    /// Parses `X⊗Y - Y⊗X` (also accepting `|` as the tensor sign)
    /// into a rank-2 tensor.
    pub fn parse_tensor(&self, text: &str) -> Result<Tensor> {
        parse_tensor(&self.algebra, text)
    }

    fn check(&self, a: &Element) -> Result<()> {
        self.algebra.check_same(a)
    }

    pub fn generator_coproduct(&self, g: usize) -> Tensor {
        let n = self.ngens();
        let mut t = self.deltas[g].clone();
        t.add_term(
            vec![Monomial::generator(n, g), Monomial::unit(n)],
            Scalar::one(),
        );
        t.add_term(
            vec![Monomial::unit(n), Monomial::generator(n, g)],
            Scalar::one(),
        );
        t
    }

    /// Δ of a PBW monomial, memoized: `Δ(x_f m') = Δ(x_f) Δ(m')` with `x_f`
    /// the first letter.
    pub fn monomial_coproduct(&self, m: &Monomial) -> Tensor {
        if let Some(hit) = self.coproduct_cache.lock().unwrap().get(m) {
            return hit.clone();
        }
        let n = self.ngens();
        let result = match m.first_var() {
            None => Tensor::unit(n, 2),
            Some(f) => {
                let rest = m.with_bumped(f, -1);
                self.tensor_product(
                    &self.generator_coproduct(f),
                    &self.monomial_coproduct(&rest),
                )
            }
        };
        self.coproduct_cache
            .lock()
            .unwrap()
            .insert(m.clone(), result.clone());
        result
    }

    pub fn coproduct(&self, a: &Element) -> Result<Tensor> {
        self.check(a)?;
        Ok(self.coproduct_unchecked(a))
    }

    pub(crate) fn coproduct_unchecked(&self, a: &Element) -> Tensor {
        let mut out = Tensor::zero(self.ngens(), 2);
        for (m, c) in a.terms() {
            out.add_scaled(&self.monomial_coproduct(m), c);
        }
        out
    }

    pub fn counit(&self, a: &Element) -> Scalar {
        a.constant_term()
    }

    /// `δ(a) = Δ(a) - a⊗1 - 1⊗a`, defined on the augmentation ideal.
    pub fn reduced_coproduct(&self, a: &Element) -> Result<Tensor> {
        self.check(a)?;
        if !self.counit(a).is_zero() {
            return Err(Error::Input(format!(
                "reduced coproduct needs counit 0, got {} for {}",
                self.counit(a),
                self.render(a)
            )));
        }
        Ok(self.reduced_unchecked(a))
    }

    pub(crate) fn reduced_unchecked(&self, a: &Element) -> Tensor {
        let n = self.ngens();
        let one = Element::one(n);
        let mut t = self.coproduct_unchecked(a);
        t.add_scaled(&Tensor::from_elements(n, &[a, &one]), &-Scalar::one());
        t.add_scaled(&Tensor::from_elements(n, &[&one, a]), &-Scalar::one());
        t
    }

    pub(crate) fn reduced_monomial(&self, m: &Monomial) -> Tensor {
        let n = self.ngens();
        let mut t = self.monomial_coproduct(m);
        t.add_term(vec![m.clone(), Monomial::unit(n)], -Scalar::one());
        t.add_term(vec![Monomial::unit(n), m.clone()], -Scalar::one());
        t
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac⊗bd`.
    pub fn tensor_mul(&self, s: &Tensor, t: &Tensor) -> Result<Tensor> {
        if s.rank() != t.rank() {
            return Err(Error::Input(format!(
                "tensor ranks differ: {} vs {}",
                s.rank(),
                t.rank()
            )));
        }
        Ok(self.tensor_product(s, t))
    }

    /// `st - ts`.
    pub fn tensor_bracket(&self, s: &Tensor, t: &Tensor) -> Result<Tensor> {
        Ok(self.tensor_mul(s, t)? - self.tensor_mul(t, s)?)
    }

    pub(crate) fn tensor_product(&self, s: &Tensor, t: &Tensor) -> Tensor {
        super::tensor::componentwise_product(&self.algebra, s, t)
    }

    /// `S(a)` from the recursion `S(a) = -a - Σ S(a'_1) a'_2` on the
    /// augmentation ideal.
    pub fn antipode(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        let mut out = self.algebra.zero();
        for (m, c) in a.terms() {
            out.add_scaled(&self.antipode_monomial(m)?, c);
        }
        Ok(out)
    }

    fn antipode_monomial(&self, m: &Monomial) -> Result<Element> {
        if let Some(hit) = self.antipode_cache.lock().unwrap().get(m) {
            return Ok(hit.clone());
        }
        let n = self.ngens();
        if m.is_unit() {
            return Ok(Element::one(n));
        }
        let deg = self.algebra.monomial_degree(m);
        let mut out = Element::monomial(m.clone(), -Scalar::one());
        for (t, c) in self.reduced_monomial(m).terms() {
            let (a1, a2) = (&t[0], &t[1]);
            if a1.is_unit() || a2.is_unit() || self.algebra.monomial_degree(a1) >= deg {
                return Err(Error::Structural(format!(
                    "antipode recursion does not descend at {}: δ contains {}⊗{}",
                    self.algebra.render_monomial(m),
                    self.algebra.render_monomial(a1),
                    self.algebra.render_monomial(a2)
                )));
            }
            let s1 = self.antipode_monomial(a1)?;
            let prod = self
                .algebra
                .product(&s1, &Element::monomial(a2.clone(), Scalar::one()));
            out.add_scaled(&prod, &-c);
        }
        self.antipode_cache
            .lock()
            .unwrap()
            .insert(m.clone(), out.clone());
        Ok(out)
    }
}
