use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Mutex;

use super::{monomials_of_degree, Element, Monomial};
use crate::error::{Error, Result};
use crate::exactlin::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorInfo {
    pub name: String,
    /// Filtration weight; always positive.
    pub degree: u32,
    pub bidegree: Option<(u32, u32)>,
}

impl GeneratorInfo {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        GeneratorInfo {
            name: name.into(),
            degree,
            bidegree: None,
        }
    }

    pub fn with_bidegree(name: impl Into<String>, a: u32, b: u32) -> Self {
        GeneratorInfo {
            name: name.into(),
            degree: a + b,
            bidegree: Some((a, b)),
        }
    }
}

/// A filtered algebra given by ordered weighted generators and the
/// commutators `[x_j, x_i] = κ_{ji}` for `j > i`. Pairs that are absent commute.
pub struct OrePresentation {
    generators: Vec<GeneratorInfo>,
    names: Vec<String>,
    degrees: Vec<u32>,
    commutators: BTreeMap<(usize, usize), Element>,
    // (g, m) -> x_g * m in normal form
    left_cache: Mutex<HashMap<(usize, Monomial), Element>>,
}

impl Clone for OrePresentation {
    fn clone(&self) -> Self {
        OrePresentation {
            generators: self.generators.clone(),
            names: self.names.clone(),
            degrees: self.degrees.clone(),
            commutators: self.commutators.clone(),
            left_cache: Mutex::new(HashMap::new()),
        }
    }
}

impl PartialEq for OrePresentation {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.commutators == other.commutators
    }
}

impl Eq for OrePresentation {}

impl fmt::Debug for OrePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "OrePresentation {{")?;
        for g in &self.generators {
            writeln!(f, "  {} : degree {}", g.name, g.degree)?;
        }
        for (&(j, i), k) in &self.commutators {
            writeln!(
                f,
                "  [{}, {}] = {}",
                self.names[j],
                self.names[i],
                self.render(k)
            )?;
        }
        write!(f, "}}")
    }
}

impl OrePresentation {
    /// Builds and validates a presentation. Commutator keys are `(higher, lower)`
    /// generator indices.
    pub fn new(
        generators: Vec<GeneratorInfo>,
        commutators: impl IntoIterator<Item = ((usize, usize), Element)>,
    ) -> Result<Self> {
        let n = generators.len();
        if n == 0 {
            return Err(Error::Input(
                "presentation needs at least one generator".into(),
            ));
        }
        let mut seen = HashSet::new();
        for g in &generators {
            if g.name.is_empty()
                || !g
                    .name
                    .chars()
                    .all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
            {
                return Err(Error::Input(format!("invalid generator name `{}`", g.name)));
            }
            if !seen.insert(g.name.clone()) {
                return Err(Error::Input(format!("duplicate generator `{}`", g.name)));
            }
            if g.degree == 0 {
                return Err(Error::Input(format!("generator `{}` has degree 0", g.name)));
            }
            if let Some((a, b)) = g.bidegree {
                if a + b != g.degree {
                    return Err(Error::Input(format!(
                        "bidegree ({a},{b}) of `{}` does not sum to its degree {}",
                        g.name, g.degree
                    )));
                }
            }
        }
        let with_bi = generators.iter().filter(|g| g.bidegree.is_some()).count();
        if with_bi != 0 && with_bi != n {
            return Err(Error::Input(
                "either all generators carry a bidegree or none do".into(),
            ));
        }
        let degrees: Vec<u32> = generators.iter().map(|g| g.degree).collect();
        let names: Vec<String> = generators.iter().map(|g| g.name.clone()).collect();
        let mut table = BTreeMap::new();
        for ((j, i), k) in commutators {
            if j >= n || i >= n {
                return Err(Error::Input(format!(
                    "commutator index ({j},{i}) out of range"
                )));
            }
            if j <= i {
                return Err(Error::Input(format!(
                    "commutator keys must be (higher, lower); got ({}, {})",
                    names[j], names[i]
                )));
            }
            if k.nvars() != n {
                return Err(Error::Input(
                    "commutator from a different presentation".into(),
                ));
            }
            if let Some(d) = k.weighted_degree(&degrees) {
                if d >= degrees[i] + degrees[j] {
                    return Err(Error::Structural(format!(
                        "[{}, {}] has degree {d}, not below {}",
                        names[j],
                        names[i],
                        degrees[i] + degrees[j]
                    )));
                }
            }
            if !k.is_zero() && table.insert((j, i), k).is_some() {
                return Err(Error::Input(format!(
                    "duplicate commutator ({}, {})",
                    names[j], names[i]
                )));
            }
        }
        Ok(OrePresentation {
            generators,
            names,
            degrees,
            commutators: table,
            left_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[GeneratorInfo] {
        &self.generators
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Input(format!("unknown generator `{name}`")))
    }

    pub fn commutators(&self) -> &BTreeMap<(usize, usize), Element> {
        &self.commutators
    }

    /// `[x_j, x_i]` for any ordered pair, derived by antisymmetry when `j < i`.
    pub fn commutator(&self, j: usize, i: usize) -> Element {
        use std::cmp::Ordering::*;
        match j.cmp(&i) {
            Equal => self.zero(),
            Greater => self
                .commutators
                .get(&(j, i))
                .cloned()
                .unwrap_or_else(|| self.zero()),
            Less => -self.commutator(i, j),
        }
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.ngens())
    }

    pub fn one(&self) -> Element {
        Element::one(self.ngens())
    }

    pub fn gen(&self, i: usize) -> Element {
        Element::generator(self.ngens(), i)
    }

    pub fn gen_named(&self, name: &str) -> Result<Element> {
        Ok(self.gen(self.index_of(name)?))
    }

    pub fn constant(&self, c: Scalar) -> Element {
        Element::scalar(self.ngens(), c)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.weighted_degree(&self.degrees)
    }

    /// Weighted degree, `None` for the zero element.
    pub fn degree(&self, a: &Element) -> Option<u32> {
        a.weighted_degree(&self.degrees)
    }

    pub fn bidegree(&self, m: &Monomial) -> Option<(u32, u32)> {
        let mut acc = (0, 0);
        for (g, &e) in self.generators.iter().zip(m.exponents()) {
            let (a, b) = g.bidegree?;
            acc.0 += a * e;
            acc.1 += b * e;
        }
        Some(acc)
    }

    pub fn has_bidegrees(&self) -> bool {
        self.generators.iter().all(|g| g.bidegree.is_some())
    }

    /// Highest weighted-degree component.
    pub fn top(&self, a: &Element) -> Element {
        match self.degree(a) {
            Some(d) => a.homogeneous_part(&self.degrees, d),
            None => self.zero(),
        }
    }

    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(&self.degrees, d)
    }

    /// Monomials of weighted degree `lo..=hi`, ordered by degree then exponents.
    pub fn monomials_between(&self, lo: u32, hi: u32) -> Vec<Monomial> {
        (lo..=hi)
            .flat_map(|d| self.monomials_of_degree(d))
            .collect()
    }

    pub fn check_same(&self, a: &Element) -> Result<()> {
        if a.nvars() != self.ngens() {
            return Err(Error::Input(format!(
                "element over {} generators used with a presentation of {}",
                a.nvars(),
                self.ngens()
            )));
        }
        Ok(())
    }

    /// Normal form of `a * b`.
    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_same(a)?;
        self.check_same(b)?;
        Ok(self.product(a, b))
    }

    /// `a b - b a` in normal form.
    pub fn bracket(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_same(a)?;
        self.check_same(b)?;
        Ok(self.product(a, b) - self.product(b, a))
    }

    pub fn pow(&self, a: &Element, e: u32) -> Element {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.product(&acc, a);
        }
        acc
    }

    pub(crate) fn product(&self, a: &Element, b: &Element) -> Element {
        let mut out = self.zero();
        for (m, c) in a.terms() {
            let right = self.mul_monomial_element(m, b);
            out.add_scaled(&right, c);
        }
        out
    }

    fn mul_monomial_element(&self, m: &Monomial, right: &Element) -> Element {
        let mut acc = right.clone();
        for g in m.word().into_iter().rev() {
            acc = self.left_mul_element(g, &acc);
        }
        acc
    }

    fn left_mul_element(&self, g: usize, e: &Element) -> Element {
        let mut out = self.zero();
        for (m, c) in e.terms() {
            out.add_scaled(&self.left_mul(g, m), c);
        }
        out
    }

    /// `x_g * m` for a PBW monomial `m`, memoized.
    fn left_mul(&self, g: usize, m: &Monomial) -> Element {
        let key = (g, m.clone());
        if let Some(hit) = self.left_cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let result = match m.first_var() {
            Some(i) if i < g => {
                // x_g x_i m' = x_i (x_g m') + [x_g, x_i] m'
                let rest = m.with_bumped(i, -1);
                let inner = self.left_mul(g, &rest);
                let mut out = self.left_mul_element(i, &inner);
                if let Some(k) = self.commutators.get(&(g, i)) {
                    let rest_e = Element::monomial(rest, Scalar::one());
                    out = out + self.product(k, &rest_e);
                }
                out
            }
            _ => Element::monomial(m.with_bumped(g, 1), Scalar::one()),
        };
        self.left_cache.lock().unwrap().insert(key, result.clone());
        result
    }

    /// Product of the given generator word, normalized.
    pub fn word_product(&self, word: &[usize]) -> Element {
        let mut acc = self.one();
        for &g in word.iter().rev() {
            acc = self.left_mul_element(g, &acc);
        }
        acc
    }

    pub fn render(&self, a: &Element) -> String {
        a.render(&self.names)
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        m.render(&self.names)
    }

    /// Parses expressions such as `W - 1/2*X*Y^2` or `Z*X`. Factors multiply in
    /// the written order, so the result is the normal form of the input.
    pub fn parse(&self, text: &str) -> Result<Element> {
        super::parse::parse_element(self, text)
    }

    /// Same generators, same commutators, empty multiplication cache.
    pub fn with_commutators(
        &self,
        commutators: impl IntoIterator<Item = ((usize, usize), Element)>,
    ) -> Result<OrePresentation> {
        OrePresentation::new(self.generators.clone(), commutators)
    }
}
