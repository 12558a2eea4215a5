//! Acceptance table. Each criterion is checked twice: by the library routine
//! and by a small oracle written here against the public API only.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use hopf_core::catalog::{list_catalog, make_a, make_b, make_k, make_lie, CatalogEntry, Family};
use hopf_core::cla::{cla_transform, enveloping, lantern_of_cla, Cla, GradedLie, LanternShape};
use hopf_core::cobar::h2_report;
use hopf_core::exactlin::SparseVec;
use hopf_core::ore::pbw_count;
use hopf_core::replicate::{self, finite_differences, CriterionResult, GROWTH_POINTS};
use hopf_core::structure::{extract_cla, lantern_of_hopf, p2_space, primitive_space};
use hopf_core::{Element, HopfPresentation, Matrix, Monomial, Result, Scalar, Tensor};

fn q(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn mono(m: &Monomial) -> Element {
    Element::monomial(m.clone(), q(1))
}

fn of_family(fams: &[Family]) -> Vec<CatalogEntry> {
    list_catalog()
        .into_iter()
        .filter(|s| fams.contains(&s.family))
        .collect()
}

/// Collected failures for one criterion.
#[derive(Default)]
struct Oracle {
    failures: Vec<String>,
    checks: usize,
}

impl Oracle {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn engine(&mut self, r: Result<CriterionResult>) {
        match r {
            Ok(r) => self.check(r.passed, || format!("library: {}", r.details.join("; "))),
            Err(e) => self.check(false, || format!("library error: {e}")),
        }
    }
}

/// Tuples of monomials indexed on first sight.
#[derive(Default)]
struct Index {
    map: HashMap<Vec<Monomial>, usize>,
}

impl Index {
    fn of(&mut self, t: &[Monomial]) -> usize {
        let n = self.map.len();
        *self.map.entry(t.to_vec()).or_insert(n)
    }

    fn vector(&mut self, t: &Tensor) -> SparseVec {
        let mut v = SparseVec::new();
        for (tuple, c) in t.terms() {
            if !c.is_zero() {
                v.insert(self.of(tuple), c.clone());
            }
        }
        v
    }
}

fn rank(rows: Vec<SparseVec>) -> usize {
    let cols = rows
        .iter()
        .flat_map(|r| r.keys().copied())
        .max()
        .map_or(0, |m| m + 1);
    Matrix::from_sparse_rows(cols, rows).rank()
}

/// Right kernel of the map sending column `i` to `images[i]`.
fn kernel(images: &[SparseVec]) -> Vec<Vec<Scalar>> {
    let rows = images
        .iter()
        .flat_map(|r| r.keys().copied())
        .max()
        .map_or(0, |m| m + 1);
    let mut t = vec![SparseVec::new(); rows];
    for (i, img) in images.iter().enumerate() {
        for (&r, c) in img {
            t[r].insert(i, c.clone());
        }
    }
    Matrix::from_sparse_rows(images.len(), t).kernel_basis()
}

/// `S(m) = -m - Σ S(m')m''` over the reduced coproduct, memoized.
struct Antipode<'a> {
    h: &'a HopfPresentation,
    memo: HashMap<Monomial, Element>,
}

impl<'a> Antipode<'a> {
    fn new(h: &'a HopfPresentation) -> Self {
        Antipode {
            h,
            memo: HashMap::new(),
        }
    }

    fn of_monomial(&mut self, m: &Monomial) -> Element {
        if m.is_unit() {
            return mono(m);
        }
        if let Some(s) = self.memo.get(m) {
            return s.clone();
        }
        let alg = self.h.algebra();
        let mut s = -mono(m);
        let delta = self.h.reduced_coproduct(&mono(m)).expect("element of h");
        for (t, c) in delta.terms() {
            let left = self.of_monomial(&t[0]);
            let prod = alg.mul(&left, &mono(&t[1])).expect("same algebra");
            s.add_scaled(&prod, &-c.clone());
        }
        self.memo.insert(m.clone(), s.clone());
        s
    }

    fn apply(&mut self, a: &Element) -> Element {
        let mut out = self.h.algebra().zero();
        for (m, c) in a.terms() {
            out.add_scaled(&self.of_monomial(m), c);
        }
        out
    }
}

fn coassociator(h: &HopfPresentation, g: &Element) -> bool {
    let n = h.ngens();
    let delta = h.coproduct(g).expect("element");
    let (mut left, mut right) = (Tensor::zero(n, 3), Tensor::zero(n, 3));
    for (t, c) in delta.terms() {
        for (u, d) in h.coproduct(&mono(&t[0])).expect("monomial").terms() {
            left.add_term(vec![u[0].clone(), u[1].clone(), t[1].clone()], c * d);
        }
        for (u, d) in h.coproduct(&mono(&t[1])).expect("monomial").terms() {
            right.add_term(vec![t[0].clone(), u[0].clone(), u[1].clone()], c * d);
        }
    }
    left == right
}

fn criterion_1(o: &mut Oracle) -> Result<()> {
    o.engine(replicate::catalog_validity());
    for entry in list_catalog() {
        let h = entry.hopf()?;
        let alg = h.algebra();
        for i in 0..h.ngens() {
            o.check(coassociator(&h, &alg.gen(i)), || {
                format!("{}: coassociativity at {}", h.label(), h.names()[i])
            });
        }
        let small = alg.monomials_between(1, 2);
        for a in &small {
            for b in &small {
                let (a, b) = (mono(a), mono(b));
                let lhs = h.coproduct(&alg.mul(&a, &b)?)?;
                let rhs = h.tensor_mul(&h.coproduct(&a)?, &h.coproduct(&b)?)?;
                o.check(lhs == rhs, || {
                    format!("{}: Δ({}·{})", h.label(), h.render(&a), h.render(&b))
                });
            }
        }
        let mut s = Antipode::new(&h);
        for m in alg.monomials_between(1, 4) {
            let mut total = alg.zero();
            for (t, c) in h.coproduct(&mono(&m))?.terms() {
                let left = s.of_monomial(&t[0]);
                total.add_scaled(&alg.mul(&left, &mono(&t[1]))?, c);
            }
            o.check(total.is_zero(), || {
                format!("{}: m(S⊗id)Δ on {}", h.label(), alg.render_monomial(&m))
            });
        }
    }
    Ok(())
}

/// Primitive basis of the degree-`≤ d` truncation by a direct kernel.
fn primitives(h: &HopfPresentation, d: u32) -> Result<Vec<Element>> {
    let monos = h.algebra().monomials_between(1, d);
    let mut idx = Index::default();
    let images = monos
        .iter()
        .map(|m| Ok(idx.vector(&h.reduced_coproduct(&mono(m))?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(kernel(&images)
        .into_iter()
        .map(|v| Element::from_terms(h.ngens(), monos.iter().cloned().zip(v)))
        .collect())
}

/// `dim {a : δa = Σ c_ij (p_i⊗p_j - p_j⊗p_i)}`; the `c` part is determined by `a`.
fn p2_dim(h: &HopfPresentation, d: u32) -> Result<usize> {
    let p = primitives(h, d)?;
    let monos = h.algebra().monomials_between(1, d);
    let mut idx = Index::default();
    let mut images = Vec::new();
    for m in &monos {
        images.push(idx.vector(&h.reduced_coproduct(&mono(m))?));
    }
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let n = h.ngens();
            let mut t = Tensor::from_elements(n, &[&p[j], &p[i]]);
            t.add_scaled(&Tensor::from_elements(n, &[&p[i], &p[j]]), &q(-1));
            images.push(idx.vector(&t));
        }
    }
    Ok(kernel(&images).len())
}

fn criterion_2(o: &mut Oracle) -> Result<()> {
    o.engine(replicate::primitive_dimensions());
    for entry in of_family(&[
        Family::A,
        Family::B,
        Family::D,
        Family::E,
        Family::F,
        Family::K,
    ]) {
        let h = entry.hopf()?;
        let (p4, p5) = (primitives(&h, 4)?.len(), primitives(&h, 5)?.len());
        o.check(p4 == 2 && p5 == 2, || {
            format!("{}: oracle dim P = {p4}, {p5}", h.label())
        });
        o.check(primitive_space(&h, 5).dim() == p5, || {
            format!("{}: library and oracle P differ", h.label())
        });
        if matches!(entry.family, Family::D | Family::E | Family::F | Family::K) {
            let (a, b) = (p2_dim(&h, 4)?, p2_dim(&h, 5)?);
            o.check(a == 3 && b == 3, || {
                format!("{}: oracle dim P2 = {a}, {b}", h.label())
            });
            o.check(p2_space(&h, 5).dim() == b, || {
                format!("{}: library and oracle P2 differ", h.label())
            });
        }
    }
    Ok(())
}

fn criterion_3(o: &mut Oracle) -> Result<()> {
    o.engine(replicate::cla_round_trip());
    for entry in list_catalog().into_iter().filter(|s| s.family.is_cla()) {
        let l = entry.cla()?.expect("CLA entry");
        let u = enveloping(&l)?;
        let alg = u.algebra();
        let n = l.dim();
        let vec_of = |v: &[Scalar]| {
            Element::from_terms(
                n,
                v.iter()
                    .enumerate()
                    .map(|(k, c)| (Monomial::generator(n, k), c.clone())),
            )
        };
        for i in 0..n {
            for j in 0..n {
                let got = alg.bracket(&alg.gen(i), &alg.gen(j))?;
                o.check(got == vec_of(l.bracket_of(i, j)), || {
                    format!("{}: [{i},{j}] in U(L)", entry.label())
                });
            }
            let mut want = Tensor::zero(n, 2);
            for (a, row) in l.delta_of(i).iter().enumerate() {
                for (b, c) in row.iter().enumerate() {
                    want.add_term(
                        vec![Monomial::generator(n, a), Monomial::generator(n, b)],
                        c.clone(),
                    );
                }
            }
            o.check(u.reduced_coproduct(&alg.gen(i))? == want, || {
                format!("{}: δ({i}) in U(L)", entry.label())
            });
        }
        let back = extract_cla(&u, 4)?;
        o.check(back.dim() == n && back == l, || {
            format!("{}: P2(U(L)) ≠ L", entry.label())
        });
    }
    Ok(())
}

/// Reduced cobar complex on monomials of degree `≤ bound`, ranks split by a key.
struct Cobar {
    c1: Vec<(Monomial, SparseVec)>,
    c2: Vec<(Vec<Monomial>, SparseVec)>,
}

fn cobar(h: &HopfPresentation, bound: u32) -> Result<Cobar> {
    let alg = h.algebra();
    let monos = alg.monomials_between(1, bound);
    let n = h.ngens();
    let (mut i2, mut i3) = (Index::default(), Index::default());
    let mut c1 = Vec::new();
    let mut c2 = Vec::new();
    for m in &monos {
        c1.push((m.clone(), i2.vector(&h.reduced_coproduct(&mono(m))?)));
    }
    for a in &monos {
        for b in &monos {
            if alg.monomial_degree(a) + alg.monomial_degree(b) > bound {
                continue;
            }
            let mut t = Tensor::zero(n, 3);
            for (u, c) in h.reduced_coproduct(&mono(a))?.terms() {
                t.add_term(vec![u[0].clone(), u[1].clone(), b.clone()], c.clone());
            }
            for (u, c) in h.reduced_coproduct(&mono(b))?.terms() {
                t.add_term(vec![a.clone(), u[0].clone(), u[1].clone()], -c.clone());
            }
            c2.push((vec![a.clone(), b.clone()], i3.vector(&t)));
        }
    }
    // align the rank-2 indices of both differentials
    let mut c1_aligned = Vec::new();
    let pos: HashMap<Vec<Monomial>, usize> = c2
        .iter()
        .enumerate()
        .map(|(k, (t, _))| (t.clone(), k))
        .collect();
    let back: HashMap<usize, Vec<Monomial>> = i2.map.iter().map(|(t, &k)| (k, t.clone())).collect();
    for (m, v) in c1 {
        let w = v.into_iter().map(|(k, c)| (pos[&back[&k]], c)).collect();
        c1_aligned.push((m, w));
    }
    Ok(Cobar { c1: c1_aligned, c2 })
}

impl Cobar {
    fn h2(&self, keep1: impl Fn(&Monomial) -> bool, keep2: impl Fn(&[Monomial]) -> bool) -> usize {
        let d1 = rank(
            self.c1
                .iter()
                .filter(|(m, _)| keep1(m))
                .map(|(_, v)| v.clone())
                .collect(),
        );
        let chosen: Vec<&(Vec<Monomial>, SparseVec)> =
            self.c2.iter().filter(|(t, _)| keep2(t)).collect();
        let d2 = rank(chosen.iter().map(|(_, v)| v.clone()).collect());
        chosen.len() - d2 - d1
    }
}

fn criterion_4(o: &mut Oracle) -> Result<()> {
    o.engine(replicate::cobar_cohomology());
    let graded = make_a(&q(0), &q(0), &q(0));
    let alg = graded.algebra();
    let bi = |m: &Monomial| alg.bidegree(m).expect("bigraded");
    let sum = |t: &[Monomial]| {
        t.iter()
            .map(bi)
            .fold((0, 0), |(a, b), (c, d)| (a + c, b + d))
    };
    let complex = cobar(&graded, 6)?;
    let mut nonzero = BTreeMap::new();
    for p in 0..=6u32 {
        for r in 0..=6 - p {
            let h2 = complex.h2(|m| bi(m) == (p, r), |t| sum(t) == (p, r));
            if h2 != 0 {
                nonzero.insert((p, r), h2);
            }
        }
    }
    let want = BTreeMap::from([((1, 2), 1), ((2, 1), 1)]);
    o.check(nonzero == want, || {
        format!("A(0,0,0): oracle H² by bidegree {nonzero:?}")
    });
    for h in [
        make_a(&q(1), &q(0), &q(0)),
        make_a(&q(0), &q(0), &q(1)),
        make_b(&q(0)),
        make_b(&q(1)),
    ] {
        let dims: Vec<usize> = [5, 6]
            .iter()
            .map(|&n| cobar(&h, n).map(|c| c.h2(|_| true, |_| true)))
            .collect::<Result<_>>()?;
        o.check(dims == [2, 2], || {
            format!("{}: oracle H² at N=5,6 = {dims:?}", h.label())
        });
        let lib = h2_report(&h, 6, false)?.total_h2;
        o.check(lib == dims[1], || {
            format!("{}: library H² {lib}", h.label())
        });
    }
    Ok(())
}

fn criterion_5(o: &mut Oracle) -> Result<()> {
    o.engine(replicate::identity_ledger());
    // δ(X^a Y^b) by the binomial theorem when X, Y are commuting primitives
    for entry in list_catalog().into_iter().filter(|s| !s.family.is_cla()) {
        let h = entry.hopf()?;
        let alg = h.algebra();
        let (Ok(x), Ok(y)) = (alg.index_of("X"), alg.index_of("Y")) else {
            continue;
        };
        let prim = |g| {
            h.reduced_coproduct(&alg.gen(g))
                .map(|t| t.is_zero())
                .unwrap_or(false)
        };
        if !alg.commutator(x.max(y), x.min(y)).is_zero() || !prim(x) || !prim(y) {
            continue;
        }
        let n = h.ngens();
        let xy = |i: u32, j: u32| {
            let mut e = vec![0; n];
            e[x] = i;
            e[y] = j;
            Monomial::from_exponents(e)
        };
        let binom =
            |n: u32, k: u32| (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64);
        for a in 0..=3u32 {
            for b in (0..=3 - a).filter(|b| a + b > 0) {
                let mut want = Tensor::zero(n, 2);
                for i in 0..=a {
                    for j in 0..=b {
                        if (i, j) != (0, 0) && (i, j) != (a, b) {
                            want.add_term(
                                vec![xy(i, j), xy(a - i, b - j)],
                                q(binom(a, i) * binom(b, j)),
                            );
                        }
                    }
                }
                let got = h.reduced_coproduct(&mono(&xy(a, b)))?;
                o.check(got == want, || format!("{}: δ(X^{a}Y^{b})", h.label()));
            }
        }
    }
    Ok(())
}

fn criterion_6(o: &mut Oracle) -> Result<()> {
    o.engine(replicate::antipode_behavior());
    for entry in of_family(&[Family::A, Family::Lie]) {
        let h = entry.hopf()?;
        let mut s = Antipode::new(&h);
        for m in h.algebra().monomials_between(1, 4) {
            let a = mono(&m);
            let s1 = s.apply(&a);
            let s2 = s.apply(&s1);
            o.check(s2 == a, || {
                format!("{}: oracle S² on {}", h.label(), h.render(&a))
            });
            o.check(h.antipode(&a)? == s1, || {
                format!("{}: library S on {}", h.label(), h.render(&a))
            });
        }
    }
    for lambda in [0, 1] {
        let h = make_b(&q(lambda));
        let z = h.parse("Z")?;
        let mut s = Antipode::new(&h);
        let s1 = s.apply(&z);
        let s2 = s.apply(&s1);
        o.check(s2 == h.parse("Z - 2*Y")?, || {
            format!("{}: oracle S²(Z) = {}", h.label(), h.render(&s2))
        });
    }
    Ok(())
}

/// Dimensions of the lower central series and of the center.
fn invariants(g: &GradedLie) -> (Vec<usize>, usize) {
    let n = g.dim();
    let sparse = |v: &[Scalar]| -> SparseVec {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect()
    };
    let bracket = |u: &[Scalar], v: &[Scalar]| {
        let mut out = vec![q(0); n];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                for (k, c) in g.bracket_of(i, j).iter().enumerate() {
                    out[k] += &(&(a * b) * c);
                }
            }
        }
        out
    };
    let unit = |i: usize| {
        (0..n)
            .map(|k| if k == i { q(1) } else { q(0) })
            .collect::<Vec<_>>()
    };
    let mut series = vec![n];
    let mut current: Vec<Vec<Scalar>> = (0..n).map(unit).collect();
    while !current.is_empty() {
        let next: Vec<Vec<Scalar>> = (0..n)
            .flat_map(|i| current.iter().map(move |w| (i, w)))
            .map(|(i, w)| bracket(&unit(i), w))
            .collect();
        let m = Matrix::from_sparse_rows(n, next.iter().map(|v| sparse(v)).collect());
        let r = m.rank();
        if r == 0 || Some(&r) == series.last() {
            series.push(r);
            break;
        }
        series.push(r);
        current = next;
    }
    let ad: Vec<SparseVec> = (0..n)
        .map(|i| {
            let mut v = SparseVec::new();
            for j in 0..n {
                for (k, c) in g.bracket_of(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        v.insert(j * n + k, c.clone());
                    }
                }
            }
            v
        })
        .collect();
    (series, kernel(&ad).len())
}

fn criterion_7(o: &mut Oracle) -> Result<()> {
    o.engine(replicate::lanterns());
    let abelian = make_lie(&["a", "b", "c", "d"].map(String::from), &[])?;
    let g = lantern_of_hopf(&abelian, 3)?;
    o.check(
        invariants(&g) == (vec![4, 0], 4) && g.dims_by_degree() == BTreeMap::from([(1, 4)]),
        || format!("abelian: {g}"),
    );
    for entry in list_catalog().into_iter().filter(|s| s.family.is_cla()) {
        let l = entry.cla()?.expect("CLA entry");
        let g = lantern_of_hopf(&enveloping(&l)?, 3)?;
        let k = l.dim() - 3;
        let dims = BTreeMap::from([(1, 2 + k), (2, 1)]);
        o.check(
            g.dims_by_degree() == dims && invariants(&g) == (vec![3 + k, 1, 0], 1 + k),
            || format!("{}: lantern {g}", entry.label()),
        );
        o.check(lantern_of_cla(&l)? == g, || {
            format!("{}: lantern of the CLA differs", entry.label())
        });
        o.check(g.shape() == LanternShape::HeisenbergPlusCentral(k), || {
            format!("{}: shape {:?}", entry.label(), g.shape())
        });
    }
    for entry in of_family(&[Family::D, Family::E, Family::F, Family::K]) {
        let g = lantern_of_hopf(&entry.hopf()?, 3)?;
        let dims = BTreeMap::from([(1, 2), (2, 1), (3, 1)]);
        o.check(
            g.dims_by_degree() == dims && invariants(&g) == (vec![4, 2, 1, 0], 1),
            || {
                format!(
                    "{}: lantern {g} invariants {:?}",
                    entry.label(),
                    invariants(&g)
                )
            },
        );
    }
    Ok(())
}

/// Rows of `m` as new basis vectors of `src` carry the structure of `dst`.
fn realizes(src: &Cla, dst: &Cla, m: &Matrix) -> bool {
    let n = src.dim();
    let f: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j)).collect())
        .collect();
    let combine = |coeffs: &[Scalar]| {
        let mut out = vec![q(0); n];
        for (k, c) in coeffs.iter().enumerate() {
            for (o, x) in out.iter_mut().zip(&f[k]) {
                *o += &(c * x);
            }
        }
        out
    };
    for i in 0..n {
        for j in 0..n {
            if src.bracket(&f[i], &f[j]) != combine(dst.bracket_of(i, j)) {
                return false;
            }
        }
        let mut want = vec![vec![q(0); n]; n];
        for (a, row) in dst.delta_of(i).iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                for (r, fa) in f[a].iter().enumerate() {
                    for (s, fb) in f[b].iter().enumerate() {
                        want[r][s] += &(&(c * fa) * fb);
                    }
                }
            }
        }
        if src.coproduct(&f[i]) != want {
            return false;
        }
    }
    true
}

fn criterion_8(o: &mut Oracle) -> Result<()> {
    o.engine(replicate::substitutions());
    let k = make_k();
    let alg = k.algebra();
    let e = |s: &str| k.parse(s).expect("element of K");
    let w = e("W - 1/2*X*Y^2");
    for (a, b, want) in [
        (&w, "X", "-Z"),
        (&w, "Y", "0"),
        (&w, "Z", "W - 1/2*X*Y^2"),
        (&e("Z"), "X", "X"),
        (&e("Z"), "Y", "0"),
    ] {
        o.check(alg.bracket(a, &e(b))? == e(want), || {
            format!("K: [{}, {b}]", k.render(a))
        });
    }
    for entry in of_family(&[Family::F]) {
        let h = entry.hopf()?;
        let alg = h.algebra();
        let e = |s: &str| h.parse(s).expect("element of F");
        let [beta, gamma, xi] = [0, 1, 2].map(|i| entry.params[i].1.to_string());
        let w = e("W - 2/3*X*Y^2");
        for (b, want) in [
            ("X", format!("({beta})*Y")),
            ("Y", format!("({gamma})*Y")),
            ("Z", format!("({gamma})*Z + ({xi})*X")),
        ] {
            o.check(alg.bracket(&w, &e(b))? == e(&want), || {
                format!("{}: [W', {b}]", h.label())
            });
        }
    }
    for lam in [2, 3] {
        let (l, inv) = (q(lam), Scalar::new(1, lam));
        let src = hopf_core::catalog::make_cla_a(&q(1), &l, &q(0));
        let dst = hopf_core::catalog::make_cla_a(&q(1), &inv, &q(0));
        let m = Matrix::from_dense(&[
            vec![q(0), q(1), q(0)],
            vec![-inv.clone(), q(0), q(0)],
            vec![q(0), q(0), inv.clone()],
        ]);
        o.check(
            realizes(&src, &dst, &m) && cla_transform(&src, &m)? == dst,
            || format!("a(1,{lam},0) base change"),
        );
        let src = hopf_core::catalog::make_cla_35('h', &[l.clone(), q(0)])?;
        let dst = hopf_core::catalog::make_cla_35('h', &[inv.clone(), q(0)])?;
        let m = Matrix::from_dense(&[
            vec![q(0), q(1), q(0), q(0)],
            vec![q(-1), q(0), q(0), q(0)],
            vec![q(0), q(0), inv.clone(), q(0)],
            vec![q(0), q(0), q(0), q(1)],
        ]);
        o.check(
            realizes(&src, &dst, &m) && cla_transform(&src, &m)? == dst,
            || format!("H({lam},0) base change"),
        );
    }
    Ok(())
}

fn criterion_9(o: &mut Oracle) -> Result<()> {
    o.engine(replicate::growth());
    for entry in of_family(&[Family::D]) {
        let h = entry.hopf()?;
        let degrees = h.degrees().to_vec();
        assert_eq!(degrees, [1, 1, 2, 3]);
        let brute = |n: u32| -> i128 {
            let mut count = 0;
            for d in 0..=n / 3 {
                for c in 0..=(n - 3 * d) / 2 {
                    count += (n - 3 * d - 2 * c + 1) as i128 * (n - 3 * d - 2 * c + 2) as i128 / 2;
                }
            }
            count
        };
        let counts: Vec<i128> = GROWTH_POINTS.iter().map(|&n| brute(n)).collect();
        for (&n, &c) in GROWTH_POINTS.iter().zip(&counts) {
            o.check(pbw_count(h.algebra(), n) as i128 == c, || {
                format!("{}: pbw_count({n})", h.label())
            });
        }
        let d4 = finite_differences(&counts, 4);
        let d5 = finite_differences(&counts, 5);
        o.check(
            d5.iter().all(|&x| x == 0) && d4.iter().all(|&x| x != 0),
            || format!("differences {d4:?} {d5:?}"),
        );
    }
    Ok(())
}

type Criterion = (u8, &'static str, Duration, fn(&mut Oracle) -> Result<()>);

fn main() {
    let table: [Criterion; 9] = [
        (1, "catalog validity", Duration::from_secs(30), criterion_1),
        (
            2,
            "primitive dimensions",
            Duration::from_secs(60),
            criterion_2,
        ),
        (3, "CLA round trip", Duration::from_secs(60), criterion_3),
        (4, "cobar cohomology", Duration::from_secs(120), criterion_4),
        (5, "identity ledger", Duration::from_secs(30), criterion_5),
        (6, "antipode behavior", Duration::from_secs(10), criterion_6),
        (7, "lanterns", Duration::from_secs(60), criterion_7),
        (
            8,
            "substitution isomorphisms",
            Duration::from_secs(10),
            criterion_8,
        ),
        (9, "growth", Duration::from_secs(5), criterion_9),
    ];
    let results: Vec<(u8, &str, Duration, Duration, Oracle)> = std::thread::scope(|s| {
        let handles: Vec<_> = table
            .iter()
            .map(|&(id, title, budget, f)| {
                s.spawn(move || {
                    let start = Instant::now();
                    let mut o = Oracle::default();
                    if let Err(e) = f(&mut o) {
                        o.check(false, || format!("error: {e}"));
                    }
                    (id, title, budget, start.elapsed(), o)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion panicked"))
            .collect()
    });
    let mut all = true;
    for (id, title, budget, took, o) in &results {
        let ok = o.failures.is_empty();
        all &= ok;
        println!(
            "criterion {id} {:<27} {} ({} checks, {:.2}s, budget {}s)",
            title,
            if ok { "PASS" } else { "FAIL" },
            o.checks,
            took.as_secs_f64(),
            budget.as_secs()
        );
        for f in &o.failures {
            println!("    {f}");
        }
    }
    if !all {
        std::process::exit(1);
    }
}
