//! Named families of connected Hopf algebras and coassociative Lie algebras.

use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::cla::{enveloping, verify_cla, Cla};
use crate::coalgebra::{HopfPresentation, Tensor};
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::ore::{Element, GeneratorInfo, OrePresentation};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    K,
    Lie,
    ClaA,
    ClaB,
    /// A variant `'a'..='h'` of the dimension-4 list.
    Cla35(char),
}

impl Family {
    pub fn tag(&self) -> String {
        match self {
            Family::A => "A".into(),
            Family::B => "B".into(),
            Family::D => "D".into(),
            Family::E => "E".into(),
            Family::F => "F".into(),
            Family::K => "K".into(),
            Family::Lie => "Lie".into(),
            Family::ClaA => "CLA-a".into(),
            Family::ClaB => "CLA-b".into(),
            Family::Cla35(v) => format!("CLA-35{v}"),
        }
    }

    /// Accepts tags case-insensitively and ignores `-` and `_`, so `cla35h`,
    /// `CLA-35h` and `cla_35h` all name the same family.
    pub fn parse(tag: &str) -> Result<Family> {
        let t: String = tag
            .chars()
            .filter(|c| *c != '-' && *c != '_')
            .collect::<String>()
            .to_lowercase();
        Ok(match t.as_str() {
            "a" => Family::A,
            "b" => Family::B,
            "d" => Family::D,
            "e" => Family::E,
            "f" => Family::F,
            "k" => Family::K,
            "lie" => Family::Lie,
            "claa" => Family::ClaA,
            "clab" => Family::ClaB,
            _ => match t.strip_prefix("cla35") {
                Some(v) if v.len() == 1 && ('a'..='h').contains(&v.chars().next().unwrap()) => {
                    Family::Cla35(v.chars().next().unwrap())
                }
                _ => return Err(Error::Input(format!("unknown family `{tag}`"))),
            },
        })
    }

    pub fn is_cla(&self) -> bool {
        matches!(self, Family::ClaA | Family::ClaB | Family::Cla35(_))
    }

    /// Parameter names in positional order; `None` for the Lie family,
    /// whose arity depends on the dimension.
    pub fn param_names(&self) -> Option<Vec<&'static str>> {
        Some(match self {
            Family::A | Family::ClaA => vec!["lambda1", "lambda2", "alpha"],
            Family::B | Family::ClaB => vec!["lambda"],
            Family::D => vec!["theta1", "theta2", "a11", "a12", "a21", "a22", "xi1", "xi2"],
            Family::E => vec!["a", "b", "xi"],
            Family::F => vec!["beta", "gamma", "xi"],
            Family::K => vec![],
            Family::Lie => return None,
            Family::Cla35(v) => match v {
                'a' | 'c' | 'd' | 'e' | 'g' => vec!["a", "b", "c"],
                'b' => vec![
                    "a11", "a12", "a13", "a21", "a22", "a23", "a31", "a32", "a33",
                ],
                'f' => vec![],
                _ => vec!["lambda", "a"],
            },
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

/// A family together with parameter values, in the family's positional order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogEntry {
    pub family: Family,
    pub params: Vec<(String, Scalar)>,
}

/// What a [`CatalogEntry`] builds to.
#[derive(Clone, Debug)]
pub enum Built {
    Hopf(HopfPresentation),
    Cla(Cla),
}

fn lie_dimension(nparams: usize) -> Option<usize> {
    (1..=8).find(|&n| n * n * (n - 1) / 2 == nparams)
}

impl CatalogEntry {
    /// Positional parameters. The Lie family takes the coefficients of
    /// `[e_i, e_j]` for `i < j` in lexicographic order, `n` values each.
    pub fn new(family: Family, values: &[Scalar]) -> Result<Self> {
        let names: Vec<String> = match family.param_names() {
            Some(ns) => {
                if ns.len() != values.len() {
                    return Err(Error::Input(format!(
                        "family {family} takes {} parameters ({}), got {}",
                        ns.len(),
                        ns.join(", "),
                        values.len()
                    )));
                }
                ns.into_iter().map(String::from).collect()
            }
            None => {
                let n = lie_dimension(values.len()).ok_or_else(|| {
                    Error::Input(format!(
                        "Lie family needs n·C(n,2) structure constants, got {}",
                        values.len()
                    ))
                })?;
                let mut names = Vec::new();
                for i in 1..=n {
                    for j in i + 1..=n {
                        for k in 1..=n {
                            names.push(format!("c{i}{j}_{k}"));
                        }
                    }
                }
                names
            }
        };
        Ok(CatalogEntry {
            family,
            params: names.into_iter().zip(values.iter().cloned()).collect(),
        })
    }

    pub fn from_ints(family: Family, values: &[i64]) -> Result<Self> {
        CatalogEntry::new(
            family,
            &values
                .iter()
                .map(|&v| Scalar::from_int(v))
                .collect::<Vec<_>>(),
        )
    }

    pub fn param(&self, name: &str) -> Option<&Scalar> {
        self.params.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    fn values(&self) -> Vec<Scalar> {
        self.params.iter().map(|(_, v)| v.clone()).collect()
    }

    /// `A(1,0,0)`, `CLA-35h(2,0)`, `K`.
    pub fn label(&self) -> String {
        if self.family == Family::Lie {
            let n = lie_dimension(self.params.len()).unwrap_or(0);
            return format!(
                "U(g{n}:{})",
                self.values()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<String>()
            );
        }
        if self.params.is_empty() {
            return self.family.tag();
        }
        let vs: Vec<String> = self.params.iter().map(|(_, v)| v.to_string()).collect();
        format!("{}({})", self.family.tag(), vs.join(","))
    }

    /// Deviations from the normalized parameter lists; values outside them
    /// still define valid objects.
    pub fn warnings(&self) -> Vec<String> {
        let v = self.values();
        let zero_or_one = |s: &Scalar| s.is_zero() || s.is_one();
        let mut out = Vec::new();
        match self.family {
            Family::A => {
                let (l1, l2, al) = (&v[0], &v[1], &v[2]);
                if l1 != l2 && !al.is_zero() {
                    out.push("normalized form has alpha = 0 when lambda1 != lambda2".to_string());
                }
                if l1 == l2 && !zero_or_one(al) {
                    out.push(
                        "normalized form has alpha in {0, 1} when lambda1 = lambda2".to_string(),
                    );
                }
            }
            Family::D => {
                if !v[0].is_zero() && !v[1].is_zero() {
                    out.push("theta may be normalized to (0, 1)".to_string());
                }
            }
            Family::E => {
                let (a, b) = (&v[0], &v[1]);
                if !zero_or_one(a) || (a.is_zero() && !zero_or_one(b)) {
                    out.push("normalized classes are (0,0,xi), (0,1,xi) and (1,b,xi)".to_string());
                }
            }
            Family::F => {
                let (beta, gamma) = (&v[0], &v[1]);
                let ok = (beta.is_zero() && gamma.is_one()) || (beta.is_one() && gamma.is_zero());
                if !ok {
                    out.push("normalized form has {beta, gamma} = {0, 1} or {1, 0}".to_string());
                }
            }
            _ => {}
        }
        out
    }

    pub fn build(&self) -> Result<Built> {
        let v = self.values();
        Ok(match self.family {
            Family::A => Built::Hopf(make_a(&v[0], &v[1], &v[2])),
            Family::B => Built::Hopf(make_b(&v[0])),
            Family::D => Built::Hopf(make_d(
                &v[0],
                &v[1],
                [&v[2], &v[3], &v[4], &v[5]],
                &v[6],
                &v[7],
            )?),
            Family::E => Built::Hopf(make_e(&v[0], &v[1], &v[2])),
            Family::F => Built::Hopf(make_f(&v[0], &v[1], &v[2])),
            Family::K => Built::Hopf(make_k()),
            Family::Lie => {
                let n = lie_dimension(v.len()).expect("checked in new");
                let names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
                let mut table = Vec::new();
                let mut it = v.chunks(n);
                for i in 0..n {
                    for j in i + 1..n {
                        table.push((i, j, it.next().expect("arity checked").to_vec()));
                    }
                }
                Built::Hopf(make_lie(&names, &table)?.with_label(self.label()))
            }
            Family::ClaA => Built::Cla(make_cla_a(&v[0], &v[1], &v[2])),
            Family::ClaB => Built::Cla(make_cla_b(&v[0])),
            Family::Cla35(variant) => Built::Cla(make_cla_35(variant, &v)?),
        })
    }

    /// The Hopf algebra of the entry: the presentation itself, or `U(L)` for a CLA.
    pub fn hopf(&self) -> Result<HopfPresentation> {
        match self.build()? {
            Built::Hopf(h) => Ok(h),
            Built::Cla(l) => {
                let u = enveloping(&l)?;
                let u = u.with_inferred_bidegrees().unwrap_or(u);
                Ok(u.with_label(format!("U({})", self.label())))
            }
        }
    }

    pub fn cla(&self) -> Result<Option<Cla>> {
        Ok(match self.build()? {
            Built::Cla(l) => Some(l),
            Built::Hopf(_) => None,
        })
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

struct Params<'a>(&'a [(String, Scalar)]);

impl Serialize for Params<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl Serialize for CatalogEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CatalogEntry", 3)?;
        st.serialize_field("family", &self.family.tag())?;
        st.serialize_field("label", &self.label())?;
        st.serialize_field("params", &Params(&self.params))?;
        st.end()
    }
}

// X, Y, Z in degrees 1, 1, 2 with δ(Z) = X⊗Y - Y⊗X
fn three_generator(relations: &[(&str, &str, &str)]) -> HopfPresentation {
    build(
        &[("X", 1), ("Y", 1), ("Z", 2)],
        relations,
        &[("Z", "X⊗Y - Y⊗X")],
    )
}

const THETA1: &str = "Z⊗X - X⊗Z + X⊗X*Y + X*Y⊗X";
const THETA2: &str = "Y⊗Z - Z⊗Y + X*Y⊗Y + Y⊗X*Y";

fn four_generator(relations: &[(&str, &str, &str)], delta_w: &str) -> HopfPresentation {
    build(
        &[("X", 1), ("Y", 1), ("Z", 2), ("W", 3)],
        relations,
        &[("Z", "X⊗Y - Y⊗X"), ("W", delta_w)],
    )
}

fn build(
    gens: &[(&str, u32)],
    relations: &[(&str, &str, &str)],
    deltas: &[(&str, &str)],
) -> HopfPresentation {
    presentation(gens, relations, deltas).expect("catalog presentations are well formed")
}

/// Builds a Hopf presentation from relation strings `[a, b] = expr` and
/// coproducts `δ(g) = expr`. Relations may be given in either order.
pub fn presentation(
    gens: &[(&str, u32)],
    relations: &[(&str, &str, &str)],
    deltas: &[(&str, &str)],
) -> Result<HopfPresentation> {
    let infos: Vec<GeneratorInfo> = gens
        .iter()
        .map(|(n, d)| GeneratorInfo::new(*n, *d))
        .collect();
    let free = OrePresentation::new(infos.clone(), [])?;
    let mut table = Vec::new();
    for (a, b, expr) in relations {
        let (i, j) = (free.index_of(a)?, free.index_of(b)?);
        let e = free.parse(expr)?;
        match i.cmp(&j) {
            std::cmp::Ordering::Greater => table.push(((i, j), e)),
            std::cmp::Ordering::Less => table.push(((j, i), -e)),
            std::cmp::Ordering::Equal => {
                return Err(Error::Input(format!("[{a}, {a}] in relation list")))
            }
        }
    }
    let algebra = OrePresentation::new(infos, table)?;
    let mut ds = Vec::new();
    for (g, expr) in deltas {
        ds.push((
            algebra.index_of(g)?,
            crate::coalgebra::parse_tensor(&algebra, expr)?,
        ));
    }
    let h = HopfPresentation::new(algebra, ds)?;
    Ok(h.with_inferred_bidegrees().unwrap_or(h))
}

fn s(c: &Scalar) -> String {
    format!("({c})")
}

/// `A(λ₁, λ₂, α)`: `[Z,X] = λ₁X + αY`, `[Z,Y] = λ₂Y`, `X`, `Y` commuting.
pub fn make_a(l1: &Scalar, l2: &Scalar, alpha: &Scalar) -> HopfPresentation {
    let zx = format!("{}*X + {}*Y", s(l1), s(alpha));
    let zy = format!("{}*Y", s(l2));
    three_generator(&[("Z", "X", &zx), ("Z", "Y", &zy)]).with_label(format!("A({l1},{l2},{alpha})"))
}

/// `B(λ)`: `[X,Y] = Y`, `[Z,X] = -Z + λY`, `[Z,Y] = 0`.
pub fn make_b(lambda: &Scalar) -> HopfPresentation {
    let zx = format!("-Z + {}*Y", s(lambda));
    three_generator(&[("X", "Y", "Y"), ("Z", "X", &zx)]).with_label(format!("B({lambda})"))
}

/// `D({θ}, {a_ij}, {ξ})`; at least one `θ` must be nonzero.
pub fn make_d(
    theta1: &Scalar,
    theta2: &Scalar,
    a: [&Scalar; 4],
    xi1: &Scalar,
    xi2: &Scalar,
) -> Result<HopfPresentation> {
    if theta1.is_zero() && theta2.is_zero() {
        return Err(Error::Parameter("D needs theta1 or theta2 nonzero".into()));
    }
    let [a11, a12, a21, a22] = a;
    let wx = format!("{}*X + {}*Y", s(a11), s(a12));
    let wy = format!("{}*X + {}*Y", s(a21), s(a22));
    let trace = a11 + a22;
    let wz = format!("{}*Z + {}*X + {}*Y", s(&trace), s(xi1), s(xi2));
    let dw = format!("{}*({THETA1}) + {}*({THETA2})", s(theta1), s(theta2));
    let label = format!("D({theta1},{theta2},{a11},{a12},{a21},{a22},{xi1},{xi2})");
    Ok(four_generator(&[("W", "X", &wx), ("W", "Y", &wy), ("W", "Z", &wz)], &dw).with_label(label))
}

/// `E(a, b, ξ)`: `[Z,X] = X`, `[W,X] = aX`, `[W,Y] = bX`, `[W,Z] = aZ - W + ξX`.
pub fn make_e(a: &Scalar, b: &Scalar, xi: &Scalar) -> HopfPresentation {
    let wx = format!("{}*X", s(a));
    let wy = format!("{}*X", s(b));
    let wz = format!("{}*Z - W + {}*X", s(a), s(xi));
    four_generator(
        &[
            ("Z", "X", "X"),
            ("W", "X", &wx),
            ("W", "Y", &wy),
            ("W", "Z", &wz),
        ],
        THETA1,
    )
    .with_label(format!("E({a},{b},{xi})"))
}

/// `F(β, γ, ξ)`: `[Z,X] = Y`, `[W,X] = βY`, `[W,Y] = γY`, `[W,Z] = γZ - (2/3)Y³ + ξX`.
pub fn make_f(beta: &Scalar, gamma: &Scalar, xi: &Scalar) -> HopfPresentation {
    let wx = format!("{}*Y", s(beta));
    let wy = format!("{}*Y", s(gamma));
    let wz = format!("{}*Z - 2/3*Y^3 + {}*X", s(gamma), s(xi));
    four_generator(
        &[
            ("Z", "X", "Y"),
            ("W", "X", &wx),
            ("W", "Y", &wy),
            ("W", "Z", &wz),
        ],
        THETA2,
    )
    .with_label(format!("F({beta},{gamma},{xi})"))
}

/// `K`: `[Z,X] = X`, `[W,X] = -Z`, `[W,Y] = 0`, `[W,Z] = W - XY²`.
pub fn make_k() -> HopfPresentation {
    four_generator(
        &[("Z", "X", "X"), ("W", "X", "-Z"), ("W", "Z", "W - X*Y^2")],
        THETA2,
    )
    .with_label("K")
}

/// `U(g)` for structure constants `[e_i, e_j] = Σ_k c_k e_k` (`i < j`), all
/// generators primitive in degree 1.
pub fn make_lie(
    names: &[String],
    brackets: &[(usize, usize, Vec<Scalar>)],
) -> Result<HopfPresentation> {
    let mut l = Cla::new(names.to_vec())?;
    for (i, j, v) in brackets {
        if *i >= names.len() || *j >= names.len() {
            return Err(Error::Input(format!(
                "bracket index ({i},{j}) out of range"
            )));
        }
        l.set_bracket(*i, *j, v.clone())?;
    }
    let report = verify_cla(&l);
    if let Some(c) = report.check("jacobi").filter(|c| !c.passed) {
        return Err(Error::Parameter(format!(
            "structure constants fail the Jacobi identity: {}",
            c.witness.clone().unwrap_or_default()
        )));
    }
    Ok(enveloping(&l)?.with_label(format!("U(g) on {}", names.join(","))))
}

fn cla(names: &[&str], brackets: &[(&str, &str, String)], delta: &[(&str, &str)]) -> Cla {
    let br: Vec<(&str, &str, &str)> = brackets
        .iter()
        .map(|(a, b, e)| (*a, *b, e.as_str()))
        .collect();
    Cla::from_relations(names, &br, delta).expect("catalog CLAs are well formed")
}

/// `a(λ₁, λ₂, α)` on `x, y, z`: `[z,x] = λ₁x + αy`, `[z,y] = λ₂y`, `δ(z) = x⊗y - y⊗x`.
pub fn make_cla_a(l1: &Scalar, l2: &Scalar, alpha: &Scalar) -> Cla {
    cla(
        &["x", "y", "z"],
        &[
            ("z", "x", format!("{}*x + {}*y", s(l1), s(alpha))),
            ("z", "y", format!("{}*y", s(l2))),
        ],
        &[("z", "x⊗y - y⊗x")],
    )
}

/// `b(λ)`: `[x,y] = y`, `[z,x] = -z + λy`, `[z,y] = 0`.
pub fn make_cla_b(lambda: &Scalar) -> Cla {
    cla(
        &["x", "y", "z"],
        &[
            ("x", "y", "y".into()),
            ("z", "x", format!("-z + {}*y", s(lambda))),
        ],
        &[("z", "x⊗y - y⊗x")],
    )
}

fn in_ab_list(a: &Scalar, b: &Scalar) -> bool {
    let z1 = |x: &Scalar| x.is_zero() || x.is_one();
    z1(a) && z1(b)
}

/// The four-dimensional anti-cocommutative CLAs on `x1, x2, x3, z` with
/// `δ(z) = x1⊗x2 - x2⊗x1`. `params` follow [`Family::param_names`].
pub fn make_cla_35(variant: char, params: &[Scalar]) -> Result<Cla> {
    let fam = Family::Cla35(variant);
    let expected = fam
        .param_names()
        .filter(|_| ('a'..='h').contains(&variant))
        .ok_or_else(|| Error::Input(format!("unknown variant `{variant}`")))?;
    if params.len() != expected.len() {
        return Err(Error::Input(format!(
            "variant {variant} takes {} parameters, got {}",
            expected.len(),
            params.len()
        )));
    }
    let p = |i: usize| s(&params[i]);
    if matches!(variant, 'a' | 'e' | 'g') && !in_ab_list(&params[0], &params[1]) {
        return Err(Error::Parameter(format!(
            "variant {variant} needs (a, b) in {{(1,1), (1,0), (0,1), (0,0)}}"
        )));
    }
    let rel: Vec<(&str, &str, String)> = match variant {
        'a' => vec![
            ("x2", "x1", "x2".into()),
            ("z", "x1", format!("z + {}*x1 + {}*x2", p(0), p(2))),
            ("z", "x2", format!("{}*x2", p(0))),
            ("z", "x3", format!("{}*x2", p(1))),
        ],
        'b' => (0..3)
            .map(|i| {
                let x = ["x1", "x2", "x3"][i];
                (
                    "z",
                    x,
                    format!(
                        "{}*x1 + {}*x2 + {}*x3",
                        p(3 * i),
                        p(3 * i + 1),
                        p(3 * i + 2)
                    ),
                )
            })
            .collect(),
        'c' => vec![
            ("x3", "x1", "x2".into()),
            ("z", "x1", format!("{}*x1 + {}*x3", p(0), p(1))),
            ("z", "x2", "x2".into()),
            ("z", "x3", format!("{}*x1 + (1 - {})*x3", p(2), p(0))),
        ],
        'd' => vec![
            ("x3", "x1", "x2".into()),
            ("z", "x1", format!("{}*x1 + {}*x3", p(0), p(1))),
            ("z", "x3", format!("{}*x1 - {}*x3", p(2), p(0))),
        ],
        'e' => vec![
            ("x3", "x1", "x1".into()),
            ("z", "x1", format!("{}*x1", p(0))),
            ("z", "x2", format!("{}*x1", p(1))),
            ("z", "x3", format!("-z + {}*x1 + {}*x3", p(2), p(0))),
        ],
        'f' => vec![
            ("x3", "x1", "x1 + x2".into()),
            ("x3", "x2", "x2".into()),
            ("z", "x3", "-2*z".into()),
        ],
        'g' => vec![
            ("x3", "x1", "x1".into()),
            ("x3", "x2", "-x2".into()),
            ("z", "x1", format!("{}*x1 + {}*x2", p(0), p(2))),
            ("z", "x2", format!("{}*x1", p(1))),
        ],
        _ => {
            let (lambda, a) = (&params[0], &params[1]);
            if lambda.is_zero() || *lambda == Scalar::from_int(-1) {
                return Err(Error::Parameter(
                    "H(lambda, a) needs lambda outside {0, -1}".into(),
                ));
            }
            if !(a.is_zero() || a.is_one()) {
                return Err(Error::Parameter("H(lambda, a) needs a in {0, 1}".into()));
            }
            vec![
                ("x3", "x1", "x1".into()),
                ("x3", "x2", format!("{}*x2", p(0))),
                ("z", "x1", format!("{}*x2", p(1))),
                ("z", "x2", format!("{}*x1", p(1))),
                ("z", "x3", format!("(-1 - {})*z", p(0))),
            ]
        }
    };
    Ok(cla(
        &["x1", "x2", "x3", "z"],
        &rel,
        &[("z", "x1⊗x2 - x2⊗x1")],
    ))
}

/// One representative per family in normalized parameters. `CLA-35h` uses
/// `a = 0` and `CLA-35g` uses `b = c = 0`: outside those values the listed
/// brackets violate the Jacobi identity.
pub fn list_catalog() -> Vec<CatalogEntry> {
    use Family::*;
    let entries: &[(Family, &[i64])] = &[
        (A, &[0, 0, 0]),
        (A, &[1, 0, 0]),
        (A, &[0, 0, 1]),
        (A, &[1, 1, 1]),
        (A, &[1, 2, 0]),
        (B, &[0]),
        (B, &[1]),
        (D, &[0, 1, 0, 0, 0, 0, 0, 0]),
        (D, &[1, 0, 1, 0, 0, 0, 0, 0]),
        (E, &[0, 0, 0]),
        (E, &[0, 1, 2]),
        (E, &[1, 1, 0]),
        (F, &[1, 0, 0]),
        (F, &[0, 1, 0]),
        (K, &[]),
        (Lie, &[0; 24]),
        (Lie, &[0, 1]),
        (ClaA, &[0, 0, 0]),
        (ClaA, &[1, 2, 0]),
        (ClaA, &[0, 0, 1]),
        (ClaA, &[1, 1, 1]),
        (ClaB, &[0]),
        (ClaB, &[1]),
        (Cla35('a'), &[1, 1, 1]),
        (Cla35('b'), &[1, 0, 0, 0, 2, 0, 0, 0, 3]),
        (Cla35('c'), &[1, 1, 1]),
        (Cla35('d'), &[1, 1, 1]),
        (Cla35('e'), &[1, 1, 1]),
        (Cla35('f'), &[]),
        (Cla35('g'), &[1, 0, 0]),
        (Cla35('h'), &[2, 0]),
    ];
    entries
        .iter()
        .map(|(f, v)| CatalogEntry::from_ints(*f, v).expect("catalog arities are consistent"))
        .collect()
}

/// `W - c·XY²` written over the presentation, for the linearizing substitutions.
pub fn shifted_w(h: &HopfPresentation, c: &Scalar) -> Element {
    let n = h.ngens();
    let mut e = h.algebra().gen(3);
    let xy2 = h.parse("X*Y^2").expect("four-generator family");
    e.add_scaled(&xy2, &-c);
    debug_assert_eq!(e.nvars(), n);
    e
}

/// Reduced coproduct `δ(W)` template for the `θ₁` and `θ₂` forms.
pub fn theta_tensor(h: &HopfPresentation, which: u8) -> Tensor {
    h.parse_tensor(if which == 1 { THETA1 } else { THETA2 })
        .expect("four-generator family")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cla::verify_cla;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn k_relations() {
        let k = make_k();
        let (w, x) = (k.parse("W").unwrap(), k.parse("X").unwrap());
        assert_eq!(k.algebra().bracket(&w, &x).unwrap(), k.parse("-Z").unwrap());
        let wp = shifted_w(&k, &Scalar::new(1, 2));
        let z = k.parse("Z").unwrap();
        assert_eq!(k.algebra().bracket(&wp, &z).unwrap(), wp);
    }

    #[test]
    fn d_needs_a_theta() {
        let z = q(0);
        let err = make_d(&z, &z, [&z, &z, &z, &z], &z, &z).unwrap_err();
        assert!(matches!(err, Error::Parameter(_)));
    }

    #[test]
    fn tags_round_trip() {
        for entry in list_catalog() {
            assert_eq!(Family::parse(&entry.family.tag()).unwrap(), entry.family);
        }
        assert_eq!(Family::parse("cla35h").unwrap(), Family::Cla35('h'));
        assert!(Family::parse("cla35z").is_err());
    }

    #[test]
    fn bidegrees_attach_to_graded_coalgebras() {
        assert!(make_a(&q(0), &q(0), &q(0)).algebra().has_bidegrees());
        assert!(make_k().algebra().has_bidegrees());
        let d = make_d(&q(1), &q(1), [&q(0); 4], &q(0), &q(0)).unwrap();
        assert!(!d.algebra().has_bidegrees());
    }

    #[test]
    fn domains_are_enforced() {
        assert!(matches!(
            make_cla_35('h', &[q(-1), q(0)]),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            make_cla_35('h', &[q(2), q(2)]),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            make_cla_35('a', &[q(2), q(0), q(0)]),
            Err(Error::Parameter(_))
        ));
        let bad_lie = make_lie(
            &["a".into(), "b".into(), "c".into()],
            &[
                (0, 1, vec![q(0), q(1), q(0)]),
                (1, 2, vec![q(1), q(0), q(0)]),
            ],
        );
        assert!(matches!(bad_lie, Err(Error::Parameter(_))));
    }

    #[test]
    fn every_catalog_cla_is_valid_and_anticocommutative() {
        for entry in list_catalog().into_iter().filter(|s| s.family.is_cla()) {
            let l = entry.cla().unwrap().unwrap();
            let r = verify_cla(&l);
            assert!(r.passed(), "{entry}: {r}");
            assert!(l.is_anti_cocommutative(), "{entry}");
        }
    }

    #[test]
    fn listed_brackets_that_break_jacobi() {
        let jacobi = |v: char, p: &[i64]| {
            let l = make_cla_35(v, &p.iter().map(|&x| q(x)).collect::<Vec<_>>()).unwrap();
            verify_cla(&l).check("jacobi").unwrap().passed
        };
        assert!(!jacobi('h', &[2, 1]));
        assert!(jacobi('h', &[2, 0]));
        assert!(!jacobi('g', &[1, 1, 0]));
        assert!(!jacobi('g', &[1, 0, 1]));
        assert!(jacobi('g', &[1, 0, 0]));
        assert!(jacobi('g', &[0, 0, 0]));
    }

    #[test]
    fn warnings_flag_unnormalized_parameters() {
        assert!(
            CatalogEntry::from_ints(Family::A, &[1, 2, 1])
                .unwrap()
                .warnings()
                .len()
                == 1
        );
        assert!(CatalogEntry::from_ints(Family::A, &[1, 1, 1])
            .unwrap()
            .warnings()
            .is_empty());
        assert!(!CatalogEntry::from_ints(Family::F, &[1, 1, 0])
            .unwrap()
            .warnings()
            .is_empty());
    }
}
