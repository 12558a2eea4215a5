//! Wire formats for presentations, CLAs and morphism requests.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::{CatalogEntry, Family};
use crate::cla::Cla;
use crate::coalgebra::{parse_images, HopfPresentation, Tensor};
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::ore::{Element, GeneratorInfo, Monomial, OrePresentation};

/// Accepts `"3/2"`, `"-1"` or a bare JSON integer.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Text(String),
    Int(i64),
}

impl Coeff {
    pub fn value(&self) -> Result<Scalar> {
        match self {
            Coeff::Text(s) => s.parse(),
            Coeff::Int(n) => Ok(Scalar::from_int(*n)),
        }
    }
}

impl From<&Scalar> for Coeff {
    fn from(s: &Scalar) -> Self {
        Coeff::Text(s.to_string())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub name: String,
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bidegree: Option<[u32; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: Coeff,
    pub monomial: BTreeMap<String, u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TensorTermJson {
    pub coeff: Coeff,
    pub left: BTreeMap<String, u32>,
    pub right: BTreeMap<String, u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub generators: Vec<GeneratorJson>,
    #[serde(default)]
    pub commutators: BTreeMap<String, Vec<TermJson>>,
    #[serde(default)]
    pub coproducts: BTreeMap<String, Vec<TensorTermJson>>,
}

fn monomial_from(p: &OrePresentation, m: &BTreeMap<String, u32>) -> Result<Monomial> {
    let mut e = vec![0; p.ngens()];
    for (name, &k) in m {
        e[p.index_of(name)?] += k;
    }
    Ok(Monomial::from_exponents(e))
}

fn monomial_to(names: &[String], m: &Monomial) -> BTreeMap<String, u32> {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| (names[i].clone(), e))
        .collect()
}

impl PresentationJson {
    pub fn build(&self) -> Result<HopfPresentation> {
        let gens: Vec<GeneratorInfo> = self
            .generators
            .iter()
            .map(|g| match g.bidegree {
                Some([a, b]) if a + b != g.degree => Err(Error::Input(format!(
                    "generator `{}`: bidegree ({a},{b}) does not sum to degree {}",
                    g.name, g.degree
                ))),
                Some([a, b]) => Ok(GeneratorInfo::with_bidegree(g.name.clone(), a, b)),
                None => Ok(GeneratorInfo::new(g.name.clone(), g.degree)),
            })
            .collect::<Result<_>>()?;
        // a bare skeleton only used to resolve names
        let names = OrePresentation::new(gens.clone(), [])?;
        let n = names.ngens();
        let mut commutators = Vec::new();
        for (key, terms) in &self.commutators {
            let (a, b) = key.split_once(',').ok_or_else(|| {
                Error::Input(format!("commutator key `{key}` is not `HIGHER,LOWER`"))
            })?;
            let (j, i) = (names.index_of(a.trim())?, names.index_of(b.trim())?);
            if j <= i {
                return Err(Error::Input(format!(
                    "commutator key `{key}` must list the later generator first"
                )));
            }
            let mut e = Element::zero(n);
            for t in terms {
                e.add_term(monomial_from(&names, &t.monomial)?, t.coeff.value()?);
            }
            commutators.push(((j, i), e));
        }
        let algebra = OrePresentation::new(gens, commutators)?;
        let mut deltas = Vec::new();
        for (g, terms) in &self.coproducts {
            let gi = algebra.index_of(g)?;
            let mut t = Tensor::zero(n, 2);
            for term in terms {
                let l = monomial_from(&algebra, &term.left)?;
                let r = monomial_from(&algebra, &term.right)?;
                t.add_term(vec![l, r], term.coeff.value()?);
            }
            deltas.push((gi, t));
        }
        let h = HopfPresentation::new(algebra, deltas)?;
        Ok(match &self.label {
            Some(l) => h.with_label(l.clone()),
            None => h,
        })
    }

    pub fn from_presentation(h: &HopfPresentation) -> Self {
        let names = h.names();
        let generators = h
            .algebra()
            .generators()
            .iter()
            .map(|g| GeneratorJson {
                name: g.name.clone(),
                degree: g.degree,
                bidegree: g.bidegree.map(|(a, b)| [a, b]),
            })
            .collect();
        let commutators = h
            .algebra()
            .commutators()
            .iter()
            .filter(|(_, e)| !e.is_zero())
            .map(|(&(j, i), e)| {
                let terms = e
                    .terms()
                    .rev()
                    .map(|(m, c)| TermJson {
                        coeff: c.into(),
                        monomial: monomial_to(names, m),
                    })
                    .collect();
                (format!("{},{}", names[j], names[i]), terms)
            })
            .collect();
        let coproducts = h
            .deltas()
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.is_zero())
            .map(|(g, t)| {
                let terms = t
                    .terms()
                    .map(|(u, c)| TensorTermJson {
                        coeff: c.into(),
                        left: monomial_to(names, &u[0]),
                        right: monomial_to(names, &u[1]),
                    })
                    .collect();
                (names[g].clone(), terms)
            })
            .collect();
        PresentationJson {
            label: Some(h.label().to_string()).filter(|l| !l.is_empty()),
            generators,
            commutators,
            coproducts,
        }
    }
}

/// A basis vector by 0-based index or by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Slot {
    Index(usize),
    Name(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisTermJson {
    pub coeff: Coeff,
    pub basis: Slot,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairTermJson {
    pub coeff: Coeff,
    pub left: Slot,
    pub right: Slot,
}

/// Brackets keyed by `"i,j"` and coproducts by `"i"`, with 0-based indices
/// or basis names.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaJson {
    pub dim: usize,
    #[serde(default)]
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: BTreeMap<String, Vec<BasisTermJson>>,
    #[serde(default)]
    pub delta: BTreeMap<String, Vec<PairTermJson>>,
}

impl ClaJson {
    pub fn build(&self) -> Result<Cla> {
        let names = if self.basis.is_empty() {
            (1..=self.dim).map(|i| format!("e{i}")).collect()
        } else {
            self.basis.clone()
        };
        if names.len() != self.dim {
            return Err(Error::Input(format!(
                "dim is {} but {} basis names given",
                self.dim,
                names.len()
            )));
        }
        let mut l = Cla::new(names)?;
        let n = self.dim;
        let slot = |l: &Cla, s: &str| -> Result<usize> {
            let s = s.trim();
            match s.parse::<usize>() {
                Ok(i) if i < n => Ok(i),
                Ok(i) => Err(Error::Input(format!("basis index {i} out of range"))),
                Err(_) => l.index_of(s),
            }
        };
        let check = |l: &Cla, s: &Slot| match s {
            Slot::Index(i) if *i < n => Ok(*i),
            Slot::Index(i) => Err(Error::Input(format!("basis index {i} out of range"))),
            Slot::Name(name) => slot(l, name),
        };
        for (key, terms) in &self.brackets {
            let (a, b) = key
                .split_once(',')
                .ok_or_else(|| Error::Input(format!("bracket key `{key}` is not `i,j`")))?;
            let (i, j) = (slot(&l, a)?, slot(&l, b)?);
            let mut v = vec![Scalar::zero(); n];
            for t in terms {
                v[check(&l, &t.basis)?] += &t.coeff.value()?;
            }
            l.set_bracket(i, j, v)?;
        }
        for (key, terms) in &self.delta {
            let i = slot(&l, key)?;
            let mut table = vec![vec![Scalar::zero(); n]; n];
            for t in terms {
                table[check(&l, &t.left)?][check(&l, &t.right)?] += &t.coeff.value()?;
            }
            l.set_delta(i, table)?;
        }
        Ok(l)
    }

    pub fn from_cla(l: &Cla) -> Self {
        let n = l.dim();
        let mut brackets = BTreeMap::new();
        let mut delta = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms: Vec<BasisTermJson> = l
                    .bracket_of(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| BasisTermJson {
                        coeff: c.into(),
                        basis: Slot::Index(k),
                    })
                    .collect();
                if !terms.is_empty() {
                    brackets.insert(format!("{i},{j}"), terms);
                }
            }
            let terms: Vec<PairTermJson> = l
                .delta_of(i)
                .iter()
                .enumerate()
                .flat_map(|(a, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(move |(b, c)| PairTermJson {
                            coeff: c.into(),
                            left: Slot::Index(a),
                            right: Slot::Index(b),
                        })
                })
                .collect();
            if !terms.is_empty() {
                delta.insert(i.to_string(), terms);
            }
        }
        ClaJson {
            dim: n,
            basis: l.names().to_vec(),
            brackets,
            delta,
        }
    }
}

/// Contents of an input file.
#[derive(Clone, Debug)]
pub enum Loaded {
    Hopf(HopfPresentation),
    Cla(Cla),
}

/// Detects the format by its keys: `generators` for a presentation, `dim`
/// for a CLA, `family` for a catalog reference.
pub fn load_value(v: &Value) -> Result<Loaded> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Input("expected a JSON object".into()))?;
    if obj.contains_key("generators") {
        let p: PresentationJson = serde_json::from_value(v.clone())?;
        Ok(Loaded::Hopf(p.build()?))
    } else if obj.contains_key("dim") {
        let c: ClaJson = serde_json::from_value(v.clone())?;
        Ok(Loaded::Cla(c.build()?))
    } else if obj.contains_key("family") {
        let r: FamilyRef = serde_json::from_value(v.clone())?;
        Ok(match r.entry()?.build()? {
            crate::catalog::Built::Hopf(h) => Loaded::Hopf(h),
            crate::catalog::Built::Cla(l) => Loaded::Cla(l),
        })
    } else {
        Err(Error::Input(
            "unrecognized JSON: expected `generators`, `dim` or `family`".into(),
        ))
    }
}

pub fn load_str(text: &str) -> Result<Loaded> {
    load_value(&serde_json::from_str(text)?)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyRef {
    pub family: String,
    #[serde(default)]
    pub params: Vec<Coeff>,
}

impl FamilyRef {
    pub fn entry(&self) -> Result<CatalogEntry> {
        let values = self
            .params
            .iter()
            .map(Coeff::value)
            .collect::<Result<Vec<_>>>()?;
        CatalogEntry::new(Family::parse(&self.family)?, &values)
    }
}

/// `{"source": …, "target": …, "images": {"X": "expr", …}, "check_coalgebra": bool}`
/// where source and target are presentations or `{"family", "params"}` references.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismJson {
    pub source: Value,
    pub target: Value,
    pub images: BTreeMap<String, String>,
    #[serde(default)]
    pub check_coalgebra: bool,
}

pub struct MorphismRequest {
    pub source: HopfPresentation,
    pub target: HopfPresentation,
    pub images: Vec<Element>,
    pub check_coalgebra: bool,
}

fn as_hopf(v: &Value) -> Result<HopfPresentation> {
    match load_value(v)? {
        Loaded::Hopf(h) => Ok(h),
        Loaded::Cla(l) => crate::cla::enveloping(&l),
    }
}

impl MorphismJson {
    pub fn resolve(&self) -> Result<MorphismRequest> {
        let source = as_hopf(&self.source)?;
        let target = as_hopf(&self.target)?;
        let pairs: Vec<(String, String)> = self
            .images
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        let images = parse_images(&source, &target, &pairs)?;
        Ok(MorphismRequest {
            source,
            target,
            images,
            check_coalgebra: self.check_coalgebra,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{list_catalog, make_cla_a};

    #[test]
    fn catalog_presentations_round_trip() {
        for entry in list_catalog() {
            let h = entry.hopf().unwrap();
            let j = serde_json::to_string(&PresentationJson::from_presentation(&h)).unwrap();
            let Loaded::Hopf(back) = load_str(&j).unwrap() else {
                panic!("expected a presentation");
            };
            assert_eq!(
                back.algebra().commutators(),
                h.algebra().commutators(),
                "{}",
                h.label()
            );
            assert_eq!(back.deltas(), h.deltas());
            assert_eq!(back.algebra().generators(), h.algebra().generators());
        }
    }

    #[test]
    fn documented_shapes_parse() {
        let text = r#"{
          "generators": [{"name": "X", "degree": 1, "bidegree": [1,0]},
                         {"name": "Y", "degree": 1, "bidegree": [0,1]},
                         {"name": "Z", "degree": 2, "bidegree": [1,1]}],
          "commutators": {"Z,X": [{"coeff": "1", "monomial": {"X": 1}}]},
          "coproducts": {"Z": [{"coeff":"1","left":{"X":1},"right":{"Y":1}},
                               {"coeff":"-1","left":{"Y":1},"right":{"X":1}}]}
        }"#;
        let Loaded::Hopf(h) = load_str(text).unwrap() else {
            panic!()
        };
        assert_eq!(h.render(&h.algebra().commutator(2, 0)), "X");
        let cla = r#"{"dim": 3, "basis": ["x","y","z"],
            "brackets": {"2,0": [{"coeff": "1", "basis": 0}]},
            "delta": {"2": [{"coeff": "1", "left": 0, "right": 1}, {"coeff": -1, "left": 1, "right": 0}]}}"#;
        let Loaded::Cla(l) = load_str(cla).unwrap() else {
            panic!()
        };
        assert_eq!(
            l,
            make_cla_a(&Scalar::from_int(1), &Scalar::zero(), &Scalar::zero())
        );
    }

    #[test]
    fn cla_round_trip_and_errors() {
        let l = make_cla_a(&Scalar::from_int(1), &Scalar::from_int(2), &Scalar::zero());
        let j = serde_json::to_value(ClaJson::from_cla(&l)).unwrap();
        let Loaded::Cla(back) = load_value(&j).unwrap() else {
            panic!()
        };
        assert_eq!(back, l);
        assert!(load_str(r#"{"dim": 2, "brackets": {"0,5": []}}"#).is_err());
        assert!(load_str(
            r#"{"generators": [{"name": "X", "degree": 1}], "commutators": {"X": []}}"#
        )
        .is_err());
        assert!(load_str(r#"{"whatever": 1}"#).is_err());
        assert!(load_str("[1,").is_err());
    }
}
