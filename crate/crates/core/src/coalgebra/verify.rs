use super::{HopfPresentation, Tensor};
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::ore::{Element, Monomial, OrePresentation};
use crate::report::VerificationReport;

fn first_factor_counit(h: &HopfPresentation, t: &Tensor, k: usize) -> Element {
    let mut out = h.algebra().zero();
    for (u, c) in t.terms() {
        if u[k].is_unit() {
            out.add_term(u[1 - k].clone(), c.clone());
        }
    }
    out
}

fn coassociativity_at(h: &HopfPresentation, m: &Monomial) -> (Tensor, Tensor) {
    let d = h.monomial_coproduct(m);
    let left = d.expand_factor(0, 2, |x| h.monomial_coproduct(x));
    let right = d.expand_factor(1, 2, |x| h.monomial_coproduct(x));
    (left, right)
}

/// `(Δ⊗id)Δ = (id⊗Δ)Δ` and the counit laws on every generator. Both sides are
/// algebra maps, so agreement on generators gives agreement everywhere.
pub fn verify_coassociativity(h: &HopfPresentation) -> VerificationReport {
    verify_coassociativity_to(h, None)
}

/// As [`verify_coassociativity`], additionally re-checking every PBW monomial
/// up to `paranoid_degree` directly.
pub fn verify_coassociativity_to(
    h: &HopfPresentation,
    paranoid_degree: Option<u32>,
) -> VerificationReport {
    let mut report = VerificationReport::new("coassociativity");
    let n = h.ngens();
    let names = h.names();
    let mut targets: Vec<(String, Monomial)> = (0..n)
        .map(|g| (names[g].clone(), Monomial::generator(n, g)))
        .collect();
    if let Some(d) = paranoid_degree {
        for m in h.algebra().monomials_between(2, d) {
            if m.total_exponent() > 1 {
                targets.push((h.algebra().render_monomial(&m), m));
            }
        }
    }
    for (name, m) in &targets {
        let (l, r) = coassociativity_at(h, m);
        let diff = &l - &r;
        report.record(
            format!("coassociative on {name}"),
            diff.is_zero(),
            Some(format!(
                "(Δ⊗id)Δ = {} but (id⊗Δ)Δ = {}",
                l.render(names),
                r.render(names)
            )),
        );
        let d = h.monomial_coproduct(m);
        let me = Element::monomial(m.clone(), Scalar::one());
        let el = first_factor_counit(h, &d, 0);
        let er = first_factor_counit(h, &d, 1);
        report.record(
            format!("counit on {name}"),
            el == me && er == me,
            Some(format!(
                "(ε⊗id)Δ = {}, (id⊗ε)Δ = {}",
                h.render(&el),
                h.render(&er)
            )),
        );
    }
    report.note("Δ and (Δ⊗id)Δ, (id⊗Δ)Δ are algebra maps, so the generator checks cover all of H");
    report
}

/// `Δ(κ_ji) = [Δx_j, Δx_i]` and `ε(κ_ji) = 0` for every generator pair `j > i`.
pub fn verify_compatibility(h: &HopfPresentation) -> VerificationReport {
    let mut report = VerificationReport::new("compatibility");
    let n = h.ngens();
    let names = h.names();
    for j in 0..n {
        for i in 0..j {
            let kappa = h.algebra().commutator(j, i);
            let lhs = h.coproduct_unchecked(&kappa);
            let rhs = h.tensor_product(&h.generator_coproduct(j), &h.generator_coproduct(i))
                - h.tensor_product(&h.generator_coproduct(i), &h.generator_coproduct(j));
            let diff = &lhs - &rhs;
            report.record(
                format!("Δ[{},{}]", names[j], names[i]),
                diff.is_zero(),
                Some(format!("Δ(κ) - [Δ,Δ] = {}", diff.render(names))),
            );
            let eps = h.counit(&kappa);
            report.record(
                format!("ε[{},{}]", names[j], names[i]),
                eps.is_zero(),
                Some(format!("ε(κ) = {eps}")),
            );
        }
    }
    report
}

/// `m(S⊗id)Δ(b) = ε(b)1 = m(id⊗S)Δ(b)` for every PBW monomial of degree ≤ `d`.
pub fn verify_antipode(h: &HopfPresentation, d: u32) -> VerificationReport {
    let mut report = VerificationReport::new(format!("antipode (degree ≤ {d})"));
    let n = h.ngens();
    for m in h.algebra().monomials_between(0, d) {
        let name = h.algebra().render_monomial(&m);
        let delta = h.monomial_coproduct(&m);
        let expected = Element::scalar(
            n,
            if m.is_unit() {
                Scalar::one()
            } else {
                Scalar::zero()
            },
        );
        let sides: Result<(Element, Element)> = (|| {
            let mut left = h.algebra().zero();
            let mut right = h.algebra().zero();
            for (u, c) in delta.terms() {
                let a = Element::monomial(u[0].clone(), Scalar::one());
                let b = Element::monomial(u[1].clone(), Scalar::one());
                let sa = h.antipode(&a)?;
                let sb = h.antipode(&b)?;
                left.add_scaled(&h.algebra().mul(&sa, &b)?, c);
                right.add_scaled(&h.algebra().mul(&a, &sb)?, c);
            }
            Ok((left, right))
        })();
        match sides {
            Ok((l, r)) => report.record(
                format!("S on {name}"),
                l == expected && r == expected,
                Some(format!(
                    "m(S⊗id)Δ = {}, m(id⊗S)Δ = {}",
                    h.render(&l),
                    h.render(&r)
                )),
            ),
            Err(e) => report.record(format!("S on {name}"), false, Some(e.to_string())),
        }
    }
    report
}

/// Image of `a` under the algebra map sending source generator `g` to `images[g]`.
pub fn apply_algebra_map(dst: &OrePresentation, images: &[Element], a: &Element) -> Element {
    let mut out = dst.zero();
    for (m, c) in a.terms() {
        let mut acc = dst.one();
        for g in m.word() {
            acc = dst
                .mul(&acc, &images[g])
                .expect("images live in the target");
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// Checks that generator images respect the relations of `src` and, when
/// `check_coalgebra` is set, the coproduct and counit. Bijectivity is not decided.
pub fn verify_morphism(
    src: &HopfPresentation,
    dst: &HopfPresentation,
    images: &[Element],
    check_coalgebra: bool,
) -> Result<VerificationReport> {
    if images.len() != src.ngens() {
        return Err(Error::Input(format!(
            "morphism needs {} generator images, got {}",
            src.ngens(),
            images.len()
        )));
    }
    for im in images {
        dst.algebra().check_same(im)?;
    }
    let mut report = VerificationReport::new(if check_coalgebra {
        "Hopf morphism"
    } else {
        "algebra morphism"
    });
    let sn = src.names();
    let dp = dst.algebra();
    for j in 0..src.ngens() {
        for i in 0..j {
            let lhs = dp.bracket(&images[j], &images[i])?;
            let rhs = apply_algebra_map(dp, images, &src.algebra().commutator(j, i));
            let diff = &lhs - &rhs;
            report.record(
                format!("relation [{},{}]", sn[j], sn[i]),
                diff.is_zero(),
                Some(format!(
                    "[φ{},φ{}] - φ(κ) = {}",
                    sn[j],
                    sn[i],
                    dp.render(&diff)
                )),
            );
        }
    }
    if check_coalgebra {
        let n = dst.ngens();
        for g in 0..src.ngens() {
            let lhs = dst.coproduct(&images[g])?;
            let rhs = src.generator_coproduct(g).map_factors(n, |m| {
                apply_algebra_map(dp, images, &Element::monomial(m.clone(), Scalar::one()))
            });
            let diff = &lhs - &rhs;
            report.record(
                format!("coproduct of {}", sn[g]),
                diff.is_zero(),
                Some(format!(
                    "Δ(φ{}) - (φ⊗φ)Δ = {}",
                    sn[g],
                    diff.render(dst.names())
                )),
            );
            let eps = dst.counit(&images[g]);
            report.record(
                format!("counit of {}", sn[g]),
                eps.is_zero(),
                Some(format!("ε = {eps}")),
            );
        }
    }
    Ok(report)
}

/// Parses `name -> expression` pairs into a generator image list for [`verify_morphism`].
pub fn parse_images(
    src: &HopfPresentation,
    dst: &HopfPresentation,
    pairs: &[(String, String)],
) -> Result<Vec<Element>> {
    let mut images: Vec<Option<Element>> = vec![None; src.ngens()];
    for (name, expr) in pairs {
        let g = src.algebra().index_of(name)?;
        images[g] = Some(dst.parse(expr)?);
    }
    images
        .into_iter()
        .enumerate()
        .map(|(g, im)| {
            im.ok_or_else(|| Error::Input(format!("no image given for `{}`", src.names()[g])))
        })
        .collect()
}
