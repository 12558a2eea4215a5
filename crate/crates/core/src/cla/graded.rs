use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exactlin::{Echelon, Matrix, Scalar};
use crate::report::VerificationReport;

/// A positively graded Lie algebra given by structure constants:
/// `[e_i, e_j] = Σ_k bracket[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedLie {
    names: Vec<String>,
    degrees: Vec<u32>,
    bracket: Vec<Vec<Vec<Scalar>>>,
}

/// Isomorphism types recognized by [`GradedLie::shape`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum LanternShape {
    /// Abelian, concentrated in degree 1.
    Abelian(usize),
    /// Heisenberg `h3` plus this many central degree-1 generators; dims `(2 + m, 1)`.
    HeisenbergPlusCentral(usize),
    /// Basis `a, b, [a,b], [[a,b],b]` with `[[a,b],a] = 0`; dims `(2, 1, 1)`.
    ThreeStep,
    Other,
}

impl GradedLie {
    pub fn new(names: Vec<String>, degrees: Vec<u32>) -> Self {
        let n = names.len();
        assert_eq!(degrees.len(), n);
        GradedLie {
            names,
            degrees,
            bracket: vec![vec![vec![Scalar::zero(); n]; n]; n],
        }
    }

    /// Sets `[e_i, e_j] = v` and `[e_j, e_i] = -v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vec<Scalar>) {
        self.bracket[j][i] = v.iter().map(|x| -x).collect();
        self.bracket[i][j] = v;
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn bracket_of(&self, i: usize, j: usize) -> &[Scalar] {
        &self.bracket[i][j]
    }

    pub fn dims_by_degree(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for &d in &self.degrees {
            *out.entry(d).or_insert(0) += 1;
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().flatten().flatten().all(Scalar::is_zero)
    }

    fn bracket_vec(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let c = &u[i] * &v[j];
                for k in 0..n {
                    if !self.bracket[i][j][k].is_zero() {
                        out[k] += &c * &self.bracket[i][j][k];
                    }
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    /// Antisymmetry, additivity of degrees and the Jacobi identity.
    pub fn verify(&self) -> VerificationReport {
        let n = self.dim();
        let mut report = VerificationReport::new("graded Lie algebra");
        let mut anti = None;
        let mut graded = None;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = &self.bracket[i][j][k];
                    if *c != -&self.bracket[j][i][k] && anti.is_none() {
                        anti = Some(format!("[{},{}]", self.names[i], self.names[j]));
                    }
                    if !c.is_zero()
                        && self.degrees[k] != self.degrees[i] + self.degrees[j]
                        && graded.is_none()
                    {
                        graded = Some(format!(
                            "[{},{}] has a {} component",
                            self.names[i], self.names[j], self.names[k]
                        ));
                    }
                }
            }
        }
        report.record("antisymmetry", anti.is_none(), anti);
        report.record("degrees add", graded.is_none(), graded);
        let mut jac = None;
        'outer: for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (self.unit(i), self.unit(j), self.unit(k));
                    let t1 = self.bracket_vec(&a, &self.bracket_vec(&b, &c));
                    let t2 = self.bracket_vec(&b, &self.bracket_vec(&c, &a));
                    let t3 = self.bracket_vec(&c, &self.bracket_vec(&a, &b));
                    if t1
                        .iter()
                        .zip(&t2)
                        .zip(&t3)
                        .any(|((x, y), z)| !(x + y + z).is_zero())
                    {
                        jac = Some(format!(
                            "({}, {}, {})",
                            self.names[i], self.names[j], self.names[k]
                        ));
                        break 'outer;
                    }
                }
            }
        }
        report.record("jacobi", jac.is_none(), jac);
        report
    }

    /// Whether iterated brackets of degree-1 elements span everything.
    pub fn generated_in_degree_one(&self) -> bool {
        let n = self.dim();
        let mut span = Echelon::new(n);
        let mut frontier: Vec<Vec<Scalar>> = (0..n)
            .filter(|&i| self.degrees[i] == 1)
            .map(|i| self.unit(i))
            .collect();
        let gens = frontier.clone();
        for v in &frontier {
            span.insert(crate::exactlin::dense_to_sparse(v));
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for g in &gens {
                    let w = self.bracket_vec(v, g);
                    if span.insert(crate::exactlin::dense_to_sparse(&w)) {
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        span.rank() == n
    }

    fn degree_indices(&self, d: u32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == d).collect()
    }

    /// Recognizes the graded Lie algebras that occur as lanterns in GK-dimension ≤ 4.
    pub fn shape(&self) -> LanternShape {
        let dims = self.dims_by_degree();
        if self.is_abelian() {
            return if dims.keys().all(|&d| d == 1) {
                LanternShape::Abelian(self.dim())
            } else {
                LanternShape::Other
            };
        }
        if !self.verify().passed() || !self.generated_in_degree_one() {
            return LanternShape::Other;
        }
        let one = self.degree_indices(1);
        let two = self.degree_indices(2);
        let three = self.degree_indices(3);
        let top = self.degrees.iter().copied().max().unwrap_or(0);
        if top == 2 && two.len() == 1 && one.len() >= 2 {
            // the commutator form on degree 1 must have rank 2
            let z = two[0];
            let rows: Vec<Vec<Scalar>> = one
                .iter()
                .map(|&i| one.iter().map(|&j| self.bracket[i][j][z].clone()).collect())
                .collect();
            if Matrix::from_dense(&rows).rank() == 2 {
                return LanternShape::HeisenbergPlusCentral(one.len() - 2);
            }
        }
        if top == 3 && one.len() == 2 && two.len() == 1 && three.len() == 1 {
            let (z, w) = (two[0], three[0]);
            let ad: Vec<Scalar> = one.iter().map(|&i| self.bracket[z][i][w].clone()).collect();
            if ad.iter().filter(|c| !c.is_zero()).count() >= 1
                && !self.bracket[one[0]][one[1]][z].is_zero()
            {
                // ad_z : L_1 -> L_3 has rank 1 since L_3 is one-dimensional
                return LanternShape::ThreeStep;
            }
        }
        LanternShape::Other
    }

    /// Every nonzero bracket `[e_i, e_j] = ...` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vec<Scalar>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.bracket[i][j].iter().any(|c| !c.is_zero()) {
                    out.push((i, j, self.bracket[i][j].clone()));
                }
            }
        }
        out
    }

    pub fn render_vec(&self, v: &[Scalar]) -> String {
        render_combination(&self.names, v)
    }
}

pub(crate) fn render_combination(names: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if a.is_one() {
            out.push_str(&names[k]);
        } else {
            out.push_str(&format!("{a}*{}", names[k]));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Serialize)]
struct BracketJson<'a> {
    left: &'a str,
    right: &'a str,
    value: String,
    coefficients: Vec<Scalar>,
}

impl Serialize for GradedLie {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let basis: Vec<(&str, u32)> = self
            .names
            .iter()
            .map(String::as_str)
            .zip(self.degrees.iter().copied())
            .collect();
        let brackets: Vec<BracketJson> = self
            .nonzero_brackets()
            .into_iter()
            .map(|(i, j, v)| BracketJson {
                left: &self.names[i],
                right: &self.names[j],
                value: self.render_vec(&v),
                coefficients: v,
            })
            .collect();
        let mut st = s.serialize_struct("GradedLie", 5)?;
        st.serialize_field("dimension", &self.dim())?;
        st.serialize_field("dims_by_degree", &self.dims_by_degree())?;
        st.serialize_field("basis", &basis)?;
        st.serialize_field("brackets", &brackets)?;
        st.serialize_field("shape", &self.shape())?;
        st.end()
    }
}

impl fmt::Display for GradedLie {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self
            .dims_by_degree()
            .iter()
            .map(|(d, n)| format!("{n} in degree {d}"))
            .collect();
        writeln!(
            f,
            "graded Lie algebra of dimension {} ({})",
            self.dim(),
            dims.join(", ")
        )?;
        for (i, j, v) in self.nonzero_brackets() {
            writeln!(
                f,
                "  [{}, {}] = {}",
                self.names[i],
                self.names[j],
                self.render_vec(&v)
            )?;
        }
        Ok(())
    }
}
