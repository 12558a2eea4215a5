use std::collections::HashMap;

use crate::cla::GradedLie;
use crate::coalgebra::{HopfPresentation, Tensor};
use crate::error::Result;
use crate::exactlin::{sparse_to_dense, Echelon, Matrix, Scalar, SparseVec};
use crate::ore::Monomial;

use super::monomial_key;

/// Keeps only the components of each commutator and coproduct whose weighted
/// degree equals the expected one, giving a degree-homogeneous presentation.
pub fn associated_graded(h: &HopfPresentation) -> Result<HopfPresentation> {
    let degrees = h.degrees().to_vec();
    let alg = h.algebra();
    let commutators = alg.commutators().iter().map(|(&(j, i), c)| {
        (
            (j, i),
            c.homogeneous_part(&degrees, degrees[i] + degrees[j]),
        )
    });
    let graded = alg.with_commutators(commutators)?;
    let deltas = h.deltas().iter().enumerate().map(|(g, t)| {
        let mut top = Tensor::zero(h.ngens(), 2);
        for (u, c) in t.terms() {
            if u.iter().map(|m| m.weighted_degree(&degrees)).sum::<u32>() == degrees[g] {
                top.add_term(u.clone(), c.clone());
            }
        }
        (g, top)
    });
    let out = HopfPresentation::new(graded, deltas.collect::<Vec<_>>())?;
    Ok(out.with_label(format!("gr {}", h.label())))
}

/// One graded piece of `G = gr H` with a complement of the decomposables and
/// the dual functionals that kill them.
struct Piece {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// `phi[j][k]`: value of the `k`-th functional on the `j`-th monomial.
    phi: Vec<Vec<Scalar>>,
    complement: Vec<Monomial>,
    decomposables: Vec<SparseVec>,
}

fn piece(g: &HopfPresentation, m: u32) -> Result<Piece> {
    let degrees = g.degrees();
    let alg = g.algebra();
    let mut monomials = alg.monomials_of_degree(m);
    monomials.sort_by_key(|x| monomial_key(x, degrees));
    let index: HashMap<Monomial, usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), i))
        .collect();
    let n = monomials.len();
    let mut dec = Echelon::new(n);
    for i in 1..m {
        for a in alg.monomials_of_degree(i) {
            for b in alg.monomials_of_degree(m - i) {
                let p = alg.product(
                    &crate::ore::Element::monomial(a.clone(), Scalar::one()),
                    &crate::ore::Element::monomial(b, Scalar::one()),
                );
                dec.insert(p.terms().map(|(x, c)| (index[x], c.clone())).collect());
            }
        }
    }
    let decomposables = dec.reduced_rows();
    let mut span = dec.clone();
    let mut candidates: Vec<usize> = (0..n).collect();
    candidates.sort_by_key(|&j| (monomials[j].total_exponent(), j));
    let mut complement = Vec::new();
    for j in candidates {
        let mut e = SparseVec::new();
        e.insert(j, Scalar::one());
        if span.insert(e) {
            complement.push(j);
        }
    }
    // basis rows: decomposables then complement unit vectors
    let mut rows: Vec<Vec<Scalar>> = decomposables
        .iter()
        .map(|r| sparse_to_dense(r, n))
        .collect();
    for &j in &complement {
        let mut v = vec![Scalar::zero(); n];
        v[j] = Scalar::one();
        rows.push(v);
    }
    let offset = decomposables.len();
    let phi = if n == 0 {
        Vec::new()
    } else {
        let inv = Matrix::from_dense(&rows).inverse()?;
        (0..n)
            .map(|j| {
                (0..complement.len())
                    .map(|k| inv.get(j, offset + k))
                    .collect()
            })
            .collect()
    };
    Ok(Piece {
        complement: complement.iter().map(|&j| monomials[j].clone()).collect(),
        monomials,
        index,
        phi,
        decomposables,
    })
}

impl Piece {
    fn eval(&self, x: &Monomial, k: usize) -> Scalar {
        self.phi[self.index[x]][k].clone()
    }
}

/// Value of `[φ_a, φ_b]` on `c`: `(φ_a⊗φ_b − φ_b⊗φ_a)(Δc)`, restricted to the
/// `(p, q)` bidegree of the tensor.
fn pair(g: &HopfPresentation, delta: &Tensor, pa: (&Piece, usize), pb: (&Piece, usize)) -> Scalar {
    let degrees = g.degrees();
    let (p, q) = (pa.0.monomials.first(), pb.0.monomials.first());
    let (Some(p), Some(q)) = (p, q) else {
        return Scalar::zero();
    };
    let (dp, dq) = (p.weighted_degree(degrees), q.weighted_degree(degrees));
    let mut total = Scalar::zero();
    for (u, c) in delta.terms() {
        let (du, dv) = (u[0].weighted_degree(degrees), u[1].weighted_degree(degrees));
        if (du, dv) == (dp, dq) {
            total += &(c * &(pa.0.eval(&u[0], pa.1) * pb.0.eval(&u[1], pb.1)));
        }
        if (du, dv) == (dq, dp) {
            total -= &(c * &(pb.0.eval(&u[0], pb.1) * pa.0.eval(&u[1], pa.1)));
        }
    }
    total
}

/// Primitives of the graded dual of `gr H` in degrees `≤ d`: duals of a
/// greedy complement to the decomposables, bracketed through `Δ`.
pub fn lantern_of_hopf(h: &HopfPresentation, d: u32) -> Result<GradedLie> {
    let g = associated_graded(h)?;
    let pieces: Vec<Piece> = (1..=d).map(|m| piece(&g, m)).collect::<Result<_>>()?;
    let mut names = Vec::new();
    let mut degrees = Vec::new();
    let mut slots = Vec::new();
    for (mi, pc) in pieces.iter().enumerate() {
        let m = mi as u32 + 1;
        for (k, x) in pc.complement.iter().enumerate() {
            names.push(match x.as_generator() {
                Some(i) => format!("{}*", g.names()[i]),
                None => format!("q{m}_{}", k + 1),
            });
            degrees.push(m);
            slots.push((mi, k));
        }
    }
    let mut out = GradedLie::new(names, degrees.clone());
    let total = slots.len();
    for a in 0..total {
        for b in a + 1..total {
            let m = degrees[a] + degrees[b];
            if m > d {
                continue;
            }
            let target = &pieces[m as usize - 1];
            let (pa, pb) = (
                (&pieces[slots[a].0], slots[a].1),
                (&pieces[slots[b].0], slots[b].1),
            );
            let mut v = vec![Scalar::zero(); total];
            for (t, c) in target.complement.iter().enumerate() {
                let delta = g.monomial_coproduct(c);
                let pos = slots
                    .iter()
                    .position(|&s| s == (m as usize - 1, t))
                    .expect("slot");
                v[pos] = pair(&g, &delta, pa, pb);
            }
            debug_assert!(target.decomposables.iter().all(|row| {
                let mut acc = Scalar::zero();
                for (&j, c) in row {
                    acc += &(c * &pair(&g, &g.monomial_coproduct(&target.monomials[j]), pa, pb));
                }
                acc.is_zero()
            }));
            out.set_bracket(a, b, v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_a, make_d, make_k, make_lie};
    use crate::cla::LanternShape;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn gr_of_a_drops_low_commutators() {
        let h = make_a(&q(1), &q(0), &q(0));
        let g = associated_graded(&h).unwrap();
        assert_eq!(
            g.algebra().commutators(),
            make_a(&q(0), &q(0), &q(0)).algebra().commutators()
        );
    }

    #[test]
    fn gr_of_d_drops_a_and_xi() {
        let z = q(0);
        let d = make_d(&z, &q(1), [&q(1), &q(2), &z, &q(3)], &q(1), &q(1)).unwrap();
        let plain = make_d(&z, &q(1), [&z, &z, &z, &z], &z, &z).unwrap();
        let g = associated_graded(&d).unwrap();
        assert_eq!(g.algebra().commutators(), plain.algebra().commutators());
        assert_eq!(g.deltas(), plain.deltas());
    }

    #[test]
    fn lanterns_by_family() {
        let z = q(0);
        let d = make_d(&z, &q(1), [&z, &z, &z, &z], &z, &z).unwrap();
        assert_eq!(
            lantern_of_hopf(&d, 3).unwrap().shape(),
            LanternShape::ThreeStep
        );
        assert_eq!(
            lantern_of_hopf(&make_k(), 3).unwrap().shape(),
            LanternShape::ThreeStep
        );
        let a = make_a(&z, &z, &z);
        assert_eq!(
            lantern_of_hopf(&a, 3).unwrap().shape(),
            LanternShape::HeisenbergPlusCentral(0)
        );
        let ab = make_lie(&names(&["a", "b", "c", "d"]), &[]).unwrap();
        assert_eq!(
            lantern_of_hopf(&ab, 2).unwrap().shape(),
            LanternShape::Abelian(4)
        );
    }

    #[test]
    fn nonabelian_lie_still_gives_abelian_lantern() {
        let h = make_lie(
            &names(&["e1", "e2", "e3"]),
            &[(0, 1, vec![q(0), q(0), q(1)])],
        )
        .unwrap();
        let l = lantern_of_hopf(&h, 3).unwrap();
        assert_eq!(l.shape(), LanternShape::Abelian(3));
    }
}
