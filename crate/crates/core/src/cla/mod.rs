//! Coassociative Lie algebras by structure constants.

mod graded;

pub(crate) use graded::render_combination;
pub use graded::{GradedLie, LanternShape};

use std::collections::HashSet;
use std::fmt;

use crate::coalgebra::{componentwise_product, parse_tensor, HopfPresentation, Tensor};
use crate::error::{Error, Result};
use crate::exactlin::{dense_to_sparse, Echelon, Matrix, Scalar};
use crate::ore::{Element, GeneratorInfo, Monomial, OrePresentation};
use crate::report::VerificationReport;

/// A Lie algebra `L` with a coproduct `δ : L → L⊗L`.
/// `bracket[i][j][k]` is the coefficient of `x_k` in `[x_i, x_j]` and
/// `delta[i][j][k]` the coefficient of `x_j⊗x_k` in `δ(x_i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cla {
    names: Vec<String>,
    bracket: Vec<Vec<Vec<Scalar>>>,
    delta: Vec<Vec<Vec<Scalar>>>,
}

fn zeros3(n: usize) -> Vec<Vec<Vec<Scalar>>> {
    vec![vec![vec![Scalar::zero(); n]; n]; n]
}

impl Cla {
    /// The abelian CLA with zero coproduct on the given basis names.
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Input(
                "a CLA needs at least one basis element".into(),
            ));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if n.is_empty()
                || !n
                    .chars()
                    .all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
            {
                return Err(Error::Input(format!("invalid basis name `{n}`")));
            }
            if !seen.insert(n.clone()) {
                return Err(Error::Input(format!("duplicate basis name `{n}`")));
            }
        }
        let n = names.len();
        Ok(Cla {
            names,
            bracket: zeros3(n),
            delta: zeros3(n),
        })
    }

    /// Builds a CLA from relations written over the basis names, e.g.
    /// `("z", "x", "z + 2*x")` and `("z", "x⊗y - y⊗x")`.
    pub fn from_relations(
        names: &[&str],
        brackets: &[(&str, &str, &str)],
        deltas: &[(&str, &str)],
    ) -> Result<Self> {
        let mut l = Cla::new(names.iter().map(|s| s.to_string()).collect())?;
        let free = l.free_algebra();
        for (a, b, expr) in brackets {
            let i = l.index_of(a)?;
            let j = l.index_of(b)?;
            let v = l.linear_coords(&free, &free.parse(expr)?, expr)?;
            l.set_bracket(i, j, v)?;
        }
        for (a, expr) in deltas {
            let i = l.index_of(a)?;
            let t = parse_tensor(&free, expr)?;
            let mut table = vec![vec![Scalar::zero(); l.dim()]; l.dim()];
            for (u, c) in t.terms() {
                match (u[0].as_generator(), u[1].as_generator()) {
                    (Some(j), Some(k)) => table[j][k] += c,
                    _ => return Err(Error::Input(format!("δ({a}) = {expr} is not in L⊗L"))),
                }
            }
            l.delta[i] = table;
        }
        Ok(l)
    }

    fn linear_coords(
        &self,
        free: &OrePresentation,
        e: &Element,
        text: &str,
    ) -> Result<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (m, c) in e.terms() {
            match m.as_generator() {
                Some(k) => v[k] = c.clone(),
                None => {
                    return Err(Error::Input(format!(
                        "`{text}` is not a linear combination of basis elements ({} appears)",
                        free.render_monomial(m)
                    )))
                }
            }
        }
        Ok(v)
    }

    // weight-1 polynomial ring on the basis, used for parsing only
    fn free_algebra(&self) -> OrePresentation {
        let gens = self
            .names
            .iter()
            .map(|n| GeneratorInfo::new(n.clone(), 1))
            .collect();
        OrePresentation::new(gens, []).expect("names were validated")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Input(format!("unknown basis element `{name}`")))
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        let fresh = Cla::new(names)?;
        if fresh.dim() != self.dim() {
            return Err(Error::Input("renaming must keep the dimension".into()));
        }
        self.names = fresh.names;
        Ok(self)
    }

    /// Sets `[x_i, x_j] = v` and `[x_j, x_i] = -v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vec<Scalar>) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::Input("bracket vector has the wrong length".into()));
        }
        if i == j {
            if v.iter().any(|c| !c.is_zero()) {
                return Err(Error::Input(format!(
                    "[{0},{0}] must vanish",
                    self.names[i]
                )));
            }
            return Ok(());
        }
        self.bracket[j][i] = v.iter().map(|c| -c).collect();
        self.bracket[i][j] = v;
        Ok(())
    }

    /// Sets `δ(x_i) = Σ table[j][k] x_j⊗x_k`.
    pub fn set_delta(&mut self, i: usize, table: Vec<Vec<Scalar>>) -> Result<()> {
        if table.len() != self.dim() || table.iter().any(|r| r.len() != self.dim()) {
            return Err(Error::Input("coproduct table has the wrong shape".into()));
        }
        self.delta[i] = table;
        Ok(())
    }

    pub fn bracket_of(&self, i: usize, j: usize) -> &[Scalar] {
        &self.bracket[i][j]
    }

    pub fn delta_of(&self, i: usize) -> &[Vec<Scalar>] {
        &self.delta[i]
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            for j in 0..n {
                if u[i].is_zero() || v[j].is_zero() {
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

    /// `δ(u)` as an `n × n` coefficient table.
    pub fn coproduct(&self, u: &[Scalar]) -> Vec<Vec<Scalar>> {
        let n = self.dim();
        let mut out = vec![vec![Scalar::zero(); n]; n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    if !self.delta[i][j][k].is_zero() {
                        out[j][k] += ui * &self.delta[i][j][k];
                    }
                }
            }
        }
        out
    }

    pub fn has_zero_coproduct(&self) -> bool {
        self.delta.iter().flatten().flatten().all(Scalar::is_zero)
    }

    pub fn is_anti_cocommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.delta[i][j][k] == -&self.delta[i][k][j])))
    }

    fn unit(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    /// Matrix of `δ : L → L⊗L` with row index `j*n + k`.
    fn delta_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n * n, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !self.delta[i][j][k].is_zero() {
                        m.set(j * n + k, i, self.delta[i][j][k].clone());
                    }
                }
            }
        }
        m
    }

    fn render_delta(&self, i: usize) -> String {
        let n = self.dim();
        let mut parts = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let c = &self.delta[i][j][k];
                if c.is_zero() {
                    continue;
                }
                let body = format!("{}⊗{}", self.names[j], self.names[k]);
                parts.push(if c.is_one() {
                    format!("+ {body}")
                } else if (-c).is_one() {
                    format!("- {body}")
                } else if c.is_negative() {
                    format!("- {}*({body})", c.abs())
                } else {
                    format!("+ {c}*({body})")
                });
            }
        }
        if parts.is_empty() {
            return "0".into();
        }
        let joined = parts.join(" ");
        joined
            .strip_prefix("+ ")
            .map(str::to_string)
            .unwrap_or_else(|| format!("-{}", &joined[2..]))
    }
}

impl fmt::Display for Cla {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "CLA of dimension {} on {}",
            self.dim(),
            self.names.join(", ")
        )?;
        let n = self.dim();
        for i in 0..n {
            for j in 0..i {
                if self.bracket[i][j].iter().any(|c| !c.is_zero()) {
                    writeln!(
                        f,
                        "  [{}, {}] = {}",
                        self.names[i],
                        self.names[j],
                        render_combination(&self.names, &self.bracket[i][j])
                    )?;
                }
            }
        }
        for i in 0..n {
            if self.delta[i].iter().flatten().any(|c| !c.is_zero()) {
                writeln!(f, "  δ({}) = {}", self.names[i], self.render_delta(i))?;
            }
        }
        Ok(())
    }
}

/// Enveloping presentation with every basis element in degree 1 and no
/// coproduct attached, the ambient ring for the compatibility identity.
fn flat_enveloping(l: &Cla) -> Result<OrePresentation> {
    let n = l.dim();
    let gens = l
        .names
        .iter()
        .map(|s| GeneratorInfo::new(s.clone(), 1))
        .collect();
    let mut table = Vec::new();
    for j in 0..n {
        for i in 0..j {
            let e = Element::from_terms(
                n,
                (0..n).map(|k| (Monomial::generator(n, k), l.bracket[j][i][k].clone())),
            );
            if !e.is_zero() {
                table.push(((j, i), e));
            }
        }
    }
    OrePresentation::new(gens, table)
}

fn delta_tensor(l: &Cla, u: &[Scalar]) -> Tensor {
    let n = l.dim();
    let d = l.coproduct(u);
    let mut t = Tensor::zero(n, 2);
    for j in 0..n {
        for k in 0..n {
            t.add_term(
                vec![Monomial::generator(n, j), Monomial::generator(n, k)],
                d[j][k].clone(),
            );
        }
    }
    t
}

/// Jacobi, coassociativity of `δ`, the bracket/coproduct compatibility
/// `δ[a,b] = [Δa, Δb] - [a,b]⊗1 - 1⊗[a,b]` inside `U(L)⊗U(L)`, and an
/// informational anti-cocommutativity flag.
pub fn verify_cla(l: &Cla) -> VerificationReport {
    let n = l.dim();
    let names = &l.names;
    let mut report = VerificationReport::new("CLA axioms");

    let mut jac = None;
    'jac: for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (l.unit(i), l.unit(j), l.unit(k));
                let t1 = l.bracket(&a, &l.bracket(&b, &c));
                let t2 = l.bracket(&b, &l.bracket(&c, &a));
                let t3 = l.bracket(&c, &l.bracket(&a, &b));
                let sum: Vec<Scalar> = (0..n).map(|s| &t1[s] + &t2[s] + &t3[s]).collect();
                if sum.iter().any(|c| !c.is_zero()) {
                    jac = Some(format!(
                        "({}, {}, {}) sums to {}",
                        names[i],
                        names[j],
                        names[k],
                        render_combination(names, &sum)
                    ));
                    break 'jac;
                }
            }
        }
    }
    report.record("jacobi", jac.is_none(), jac);

    let mut coassoc = None;
    for i in 0..n {
        // (δ⊗id)δ(x_i) and (id⊗δ)δ(x_i) as n^3 coefficient arrays
        let mut left = vec![Scalar::zero(); n * n * n];
        let mut right = vec![Scalar::zero(); n * n * n];
        for j in 0..n {
            for k in 0..n {
                let c = &l.delta[i][j][k];
                if c.is_zero() {
                    continue;
                }
                for p in 0..n {
                    for q in 0..n {
                        let dj = &l.delta[j][p][q];
                        if !dj.is_zero() {
                            left[(p * n + q) * n + k] += c * dj;
                        }
                        let dk = &l.delta[k][p][q];
                        if !dk.is_zero() {
                            right[(j * n + p) * n + q] += c * dk;
                        }
                    }
                }
            }
        }
        if left != right {
            coassoc = Some(format!("fails on {}", names[i]));
            break;
        }
    }
    report.record("coassociativity", coassoc.is_none(), coassoc);

    let compat = match flat_enveloping(l) {
        Ok(u) => {
            let mut bad = None;
            'pairs: for a in (0..n).rev() {
                for b in 0..a {
                    let big = |i: usize| {
                        let mut t = delta_tensor(l, &l.unit(i));
                        t.add_term(
                            vec![Monomial::generator(n, i), Monomial::unit(n)],
                            Scalar::one(),
                        );
                        t.add_term(
                            vec![Monomial::unit(n), Monomial::generator(n, i)],
                            Scalar::one(),
                        );
                        t
                    };
                    let (da, db) = (big(a), big(b));
                    let mut rhs =
                        componentwise_product(&u, &da, &db) - componentwise_product(&u, &db, &da);
                    let ab = l.bracket(&l.unit(a), &l.unit(b));
                    let ab_el = Element::from_terms(
                        n,
                        (0..n).map(|k| (Monomial::generator(n, k), ab[k].clone())),
                    );
                    let one = Element::one(n);
                    rhs.add_scaled(&Tensor::from_elements(n, &[&ab_el, &one]), &-Scalar::one());
                    rhs.add_scaled(&Tensor::from_elements(n, &[&one, &ab_el]), &-Scalar::one());
                    let lhs = delta_tensor(l, &ab);
                    if lhs != rhs {
                        let diff = &lhs - &rhs;
                        bad = Some(format!(
                            "pair ({}, {}): δ[a,b] - rhs = {}",
                            names[a],
                            names[b],
                            diff.render(names)
                        ));
                        break 'pairs;
                    }
                }
            }
            bad
        }
        Err(e) => Some(e.to_string()),
    };
    report.record("compatibility", compat.is_none(), compat);
    report.info("anti-cocommutative", l.is_anti_cocommutative(), None);
    report
}

/// Basis of `ker δ`, in reduced echelon form.
pub fn kernel_delta(l: &Cla) -> Vec<Vec<Scalar>> {
    canonical_rows(l.delta_matrix().kernel_basis(), l.dim())
}

fn canonical_rows(vs: Vec<Vec<Scalar>>, n: usize) -> Vec<Vec<Scalar>> {
    let mut ech = Echelon::new(n);
    for v in vs {
        ech.insert(dense_to_sparse(&v));
    }
    ech.into_reduced()
        .0
        .iter()
        .map(|r| crate::exactlin::sparse_to_dense(r, n))
        .collect()
}

/// Smallest `n` with `ker δ^n = L` for the iterated coproduct
/// `δ^n : L → L^{⊗(n+1)}`; `None` when `L` is not conilpotent.
pub fn conilpotency_index(l: &Cla) -> Option<usize> {
    let n = l.dim();
    // images of the basis under δ^k, as sparse maps from index tuples
    let mut images: Vec<Vec<(Vec<usize>, Scalar)>> =
        (0..n).map(|i| vec![(vec![i], Scalar::one())]).collect();
    for k in 1..=n + 1 {
        for img in images.iter_mut() {
            let mut next: std::collections::BTreeMap<Vec<usize>, Scalar> = Default::default();
            for (tuple, c) in img.iter() {
                let head = tuple[0];
                for p in 0..n {
                    for q in 0..n {
                        let d = &l.delta[head][p][q];
                        if d.is_zero() {
                            continue;
                        }
                        let mut t = vec![p, q];
                        t.extend_from_slice(&tuple[1..]);
                        *next.entry(t).or_insert_with(Scalar::zero) += c * d;
                    }
                }
            }
            *img = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        if images.iter().all(|img| img.is_empty()) {
            return Some(k);
        }
    }
    None
}

/// Filtration levels: `F_1 = ker δ`, `F_m = {x : δx ∈ Σ_{p+q=m} F_p⊗F_q}`.
/// Returns an adapted basis with the level of each vector.
fn filtration(l: &Cla) -> Result<Vec<(Vec<Scalar>, u32)>> {
    let n = l.dim();
    let dm = l.delta_matrix();
    let mut basis: Vec<(Vec<Scalar>, u32)> = Vec::new();
    let mut ech = Echelon::new(n);
    for level in 1..=(n as u32 + 1) {
        if basis.len() == n {
            break;
        }
        // columns: [δ | -(b_a⊗b_b) for admissible pairs]
        let pairs: Vec<(usize, usize)> = (0..basis.len())
            .flat_map(|a| (0..basis.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| basis[a].1 + basis[b].1 <= level)
            .collect();
        let cols = n + pairs.len();
        let mut m = Matrix::zeros(n * n, cols);
        for r in 0..n * n {
            for (c, v) in dm.row(r) {
                m.set(r, *c, v.clone());
            }
        }
        for (idx, &(a, b)) in pairs.iter().enumerate() {
            for j in 0..n {
                for k in 0..n {
                    let v = &basis[a].0[j] * &basis[b].0[k];
                    if !v.is_zero() {
                        m.set(j * n + k, n + idx, -v);
                    }
                }
            }
        }
        let ker: Vec<Vec<Scalar>> = m
            .kernel_basis()
            .into_iter()
            .map(|v| v[..n].to_vec())
            .collect();
        for v in canonical_rows(ker, n) {
            if ech.insert(dense_to_sparse(&v)) {
                basis.push((v, level));
            }
        }
    }
    if basis.len() < n {
        return Err(Error::Structural(
            "CLA is not conilpotent: its enveloping bialgebra is not a connected Hopf algebra"
                .into(),
        ));
    }
    Ok(basis)
}

/// The Hopf algebra `U(L)` with `Δ(a) = a⊗1 + 1⊗a + δ(a)`. Basis vectors get
/// the weight of their filtration level (1 on `ker δ`); if the given basis is
/// not adapted to that filtration it is first changed to an adapted one.
/// No axioms are checked here.
pub fn enveloping(l: &Cla) -> Result<HopfPresentation> {
    let n = l.dim();
    let adapted = filtration(l)?;
    let level_of_unit = |i: usize| {
        adapted
            .iter()
            .find(|(v, _)| v == &l.unit(i))
            .map(|(_, w)| *w)
    };
    let coordinate_adapted = (0..n).all(|i| level_of_unit(i).is_some());
    let (work, weights) = if coordinate_adapted {
        (
            l.clone(),
            (0..n)
                .map(|i| level_of_unit(i).unwrap())
                .collect::<Vec<_>>(),
        )
    } else {
        let rows: Vec<Vec<Scalar>> = adapted.iter().map(|(v, _)| v.clone()).collect();
        let names = adapted
            .iter()
            .enumerate()
            .map(|(k, (v, _))| match v.iter().position(|c| !c.is_zero()) {
                Some(i) if v.iter().filter(|c| !c.is_zero()).count() == 1 && v[i].is_one() => {
                    l.names[i].clone()
                }
                _ => format!("u{}", k + 1),
            })
            .collect();
        let t = cla_transform(l, &Matrix::from_dense(&rows))?.with_names(names)?;
        (t, adapted.iter().map(|(_, w)| *w).collect())
    };
    let gens: Vec<GeneratorInfo> = work
        .names
        .iter()
        .zip(&weights)
        .map(|(s, &w)| GeneratorInfo::new(s.clone(), w))
        .collect();
    let mut table = Vec::new();
    for j in 0..n {
        for i in 0..j {
            let e = Element::from_terms(
                n,
                (0..n).map(|k| (Monomial::generator(n, k), work.bracket[j][i][k].clone())),
            );
            if !e.is_zero() {
                table.push(((j, i), e));
            }
        }
    }
    let algebra = OrePresentation::new(gens, table)?;
    let deltas = (0..n)
        .map(|i| (i, delta_tensor(&work, &work.unit(i))))
        .filter(|(_, t)| !t.is_zero());
    HopfPresentation::new(algebra, deltas.collect::<Vec<_>>())
}

/// Structure constants in the basis `x'_a = Σ_i M[a][i] x_i`; names are kept.
pub fn cla_transform(l: &Cla, m: &Matrix) -> Result<Cla> {
    let n = l.dim();
    if m.rows() != n || m.cols() != n {
        return Err(Error::Input(format!("base change must be {n}×{n}")));
    }
    let inv = m.inverse()?;
    let mut out = Cla::new(l.names.clone())?;
    let row = |a: usize| -> Vec<Scalar> { (0..n).map(|i| m.get(a, i)).collect() };
    // coordinates of an old-basis vector in the new basis: v ↦ v · M⁻¹
    let to_new = |v: &[Scalar]| -> Vec<Scalar> {
        (0..n)
            .map(|c| (0..n).map(|k| &v[k] * &inv.get(k, c)).sum())
            .collect()
    };
    for a in 0..n {
        for b in 0..n {
            let br = l.bracket(&row(a), &row(b));
            out.bracket[a][b] = to_new(&br);
        }
        let d = l.coproduct(&row(a));
        let mut table = vec![vec![Scalar::zero(); n]; n];
        for j in 0..n {
            for k in 0..n {
                if d[j][k].is_zero() {
                    continue;
                }
                for p in 0..n {
                    let ij = inv.get(j, p);
                    if ij.is_zero() {
                        continue;
                    }
                    for q in 0..n {
                        let iq = inv.get(k, q);
                        if !iq.is_zero() {
                            table[p][q] += &d[j][k] * &ij * &iq;
                        }
                    }
                }
            }
        }
        out.delta[a] = table;
    }
    Ok(out)
}

/// The lantern of `U(L)` read off directly: `(ker δ)^*` in degree 1, the dual
/// of a complement in degree 2, and `[k_i^*, k_j^*](y) = (k_i^*⊗k_j^* - k_j^*⊗k_i^*)(δy)`.
pub fn lantern_of_cla(l: &Cla) -> Result<GradedLie> {
    if !l.is_anti_cocommutative() {
        return Err(Error::Input(
            "lantern_of_cla needs an anti-cocommutative CLA".into(),
        ));
    }
    let env = enveloping(l)?;
    let n = l.dim();
    let names: Vec<String> = env.names().iter().map(|s| format!("{s}*")).collect();
    let degrees = env.degrees().to_vec();
    if degrees.iter().any(|&d| d > 2) {
        return Err(Error::Structural(
            "anti-cocommutative CLA with conilpotency above 2".into(),
        ));
    }
    let mut g = GradedLie::new(names, degrees.clone());
    let ones: Vec<usize> = (0..n).filter(|&i| degrees[i] == 1).collect();
    let twos: Vec<usize> = (0..n).filter(|&i| degrees[i] == 2).collect();
    for (a, &i) in ones.iter().enumerate() {
        for &j in &ones[a + 1..] {
            let mut v = vec![Scalar::zero(); n];
            for &s in &twos {
                let d = env.delta_of(s);
                let gi = Monomial::generator(n, i);
                let gj = Monomial::generator(n, j);
                v[s] = d.coeff(&[gi.clone(), gj.clone()]) - d.coeff(&[gj, gi]);
            }
            g.set_bracket(i, j, v);
        }
    }
    Ok(g)
}
