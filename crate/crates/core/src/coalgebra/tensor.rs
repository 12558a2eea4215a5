use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::exactlin::Scalar;
use crate::ore::{Element, Monomial, OrePresentation};

/// A linear combination of rank-`r` tuples of PBW monomials. No sign rule
/// is attached to the tensor factors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor {
    nvars: usize,
    rank: usize,
    terms: BTreeMap<Vec<Monomial>, Scalar>,
}

impl Tensor {
    pub fn zero(nvars: usize, rank: usize) -> Self {
        Tensor {
            nvars,
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn unit(nvars: usize, rank: usize) -> Self {
        let mut t = Tensor::zero(nvars, rank);
        t.add_term(vec![Monomial::unit(nvars); rank], Scalar::one());
        t
    }

    pub fn pure(factors: Vec<Monomial>, c: Scalar) -> Self {
        let nvars = factors.first().map_or(0, |m| m.nvars());
        let mut t = Tensor::zero(nvars, factors.len());
        t.add_term(factors, c);
        t
    }

    /// `a_1 ⊗ a_2 ⊗ ... ⊗ a_r` expanded multilinearly.
    pub fn from_elements(nvars: usize, factors: &[&Element]) -> Self {
        let mut partial: Vec<(Vec<Monomial>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for e in factors {
            let mut next = Vec::new();
            for (tuple, c) in &partial {
                for (m, v) in e.terms() {
                    let mut t = tuple.clone();
                    t.push(m.clone());
                    next.push((t, c * v));
                }
            }
            partial = next;
        }
        let mut out = Tensor::zero(nvars, factors.len());
        for (t, c) in partial {
            out.add_term(t, c);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<Monomial>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, tuple: &[Monomial]) -> Scalar {
        self.terms.get(tuple).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, tuple: Vec<Monomial>, c: Scalar) {
        assert_eq!(tuple.len(), self.rank, "tensor rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&tuple) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&tuple);
                }
            }
            None => {
                self.terms.insert(tuple, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Tensor, c: &Scalar) {
        assert_eq!(other.rank, self.rank, "tensor rank mismatch");
        if c.is_zero() {
            return;
        }
        for (t, v) in &other.terms {
            self.add_term(t.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        let mut out = Tensor::zero(self.nvars, self.rank);
        out.add_scaled(self, c);
        out
    }

    /// Reverses the factor order (`τ` on rank 2).
    pub fn flip(&self) -> Tensor {
        let mut out = Tensor::zero(self.nvars, self.rank);
        for (t, c) in &self.terms {
            let mut r = t.clone();
            r.reverse();
            out.add_term(r, c.clone());
        }
        out
    }

    /// Replaces factor `k` of every term by the tensor `f(m)` of rank `s`,
    /// giving a tensor of rank `rank - 1 + s`.
    pub fn expand_factor(
        &self,
        k: usize,
        s: usize,
        mut f: impl FnMut(&Monomial) -> Tensor,
    ) -> Tensor {
        let mut out = Tensor::zero(self.nvars, self.rank - 1 + s);
        for (t, c) in &self.terms {
            let image = f(&t[k]);
            for (u, v) in image.terms() {
                let mut tuple = t[..k].to_vec();
                tuple.extend(u.iter().cloned());
                tuple.extend_from_slice(&t[k + 1..]);
                out.add_term(tuple, c * v);
            }
        }
        out
    }

    /// Applies a linear map to every factor.
    pub fn map_factors(&self, nvars: usize, mut f: impl FnMut(&Monomial) -> Element) -> Tensor {
        let mut out = Tensor::zero(nvars, self.rank);
        for (t, c) in &self.terms {
            let images: Vec<Element> = t.iter().map(&mut f).collect();
            let refs: Vec<&Element> = images.iter().collect();
            out.add_scaled(&Tensor::from_elements(nvars, &refs), c);
        }
        out
    }

    /// Maximum over terms of the summed factor degrees.
    pub fn weighted_degree(&self, degrees: &[u32]) -> Option<u32> {
        self.terms
            .keys()
            .map(|t| t.iter().map(|m| m.weighted_degree(degrees)).sum())
            .max()
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (t, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            let parts: Vec<String> = t.iter().map(|m| m.render(names)).collect();
            let body = parts.join("⊗");
            if abs.is_one() {
                out.push_str(&body);
            } else {
                out.push_str(&format!("({body})"));
            }
        }
        out
    }
}

/// `(a⊗b)(c⊗d) = ac⊗bd` over any presentation, factors normalized.
pub fn componentwise_product(alg: &OrePresentation, s: &Tensor, t: &Tensor) -> Tensor {
    let n = alg.ngens();
    let mut out = Tensor::zero(n, s.rank());
    for (a, c) in s.terms() {
        for (b, d) in t.terms() {
            let factors: Vec<Element> = a
                .iter()
                .zip(b)
                .map(|(x, y)| {
                    alg.product(
                        &Element::monomial(x.clone(), Scalar::one()),
                        &Element::monomial(y.clone(), Scalar::one()),
                    )
                })
                .collect();
            let refs: Vec<&Element> = factors.iter().collect();
            out.add_scaled(&Tensor::from_elements(n, &refs), &(c * d));
        }
    }
    out
}

impl Add for &Tensor {
    type Output = Tensor;
    fn add(self, rhs: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for &Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl Add for Tensor {
    type Output = Tensor;
    fn add(self, rhs: Tensor) -> Tensor {
        &self + &rhs
    }
}

impl Sub for Tensor {
    type Output = Tensor;
    fn sub(self, rhs: Tensor) -> Tensor {
        &self - &rhs
    }
}

impl Neg for &Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        self.scale(&-Scalar::one())
    }
}

impl Neg for Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        -&self
    }
}
