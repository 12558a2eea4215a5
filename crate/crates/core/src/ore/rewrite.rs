//! Word rewriting to PBW normal form and the overlap (diamond lemma) check.

use std::collections::BTreeMap;

use super::{count_up_to, Element, Monomial, OrePresentation};
use crate::exactlin::Scalar;
use crate::report::VerificationReport;

fn leftmost_descent(word: &[usize]) -> Option<usize> {
    word.windows(2).position(|w| w[0] > w[1])
}

/// Reduces `coeff * word` by repeatedly rewriting the leftmost out-of-order pair
/// `x_j x_i -> x_i x_j + κ_{ji}`. Terminates because every rule lowers the
/// (weighted degree, inversion count) measure.
pub fn normal_form(p: &OrePresentation, word: &[usize], coeff: &Scalar) -> Element {
    let mut pending: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    pending.insert(word.to_vec(), coeff.clone());
    reduce_all(p, pending)
}

/// Normal form of a linear combination of words.
pub fn normal_form_words(
    p: &OrePresentation,
    words: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
) -> Element {
    let mut pending: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    for (w, c) in words {
        accumulate(&mut pending, w, c);
    }
    reduce_all(p, pending)
}

fn accumulate(pending: &mut BTreeMap<Vec<usize>, Scalar>, w: Vec<usize>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = pending.entry(w).or_insert_with(Scalar::zero);
    *e += &c;
}

fn reduce_all(p: &OrePresentation, mut pending: BTreeMap<Vec<usize>, Scalar>) -> Element {
    let n = p.ngens();
    let mut out = Element::zero(n);
    // longest words first so that cancellations happen before further rewriting
    while let Some((word, c)) = pop_longest(&mut pending) {
        if c.is_zero() {
            continue;
        }
        match leftmost_descent(&word) {
            None => out.add_term(Monomial::from_word(n, &word), c),
            Some(k) => {
                let (j, i) = (word[k], word[k + 1]);
                let mut swapped = word.clone();
                swapped.swap(k, k + 1);
                accumulate(&mut pending, swapped, c.clone());
                if let Some(kappa) = p.commutators().get(&(j, i)) {
                    for (m, kc) in kappa.terms() {
                        let mut w = word[..k].to_vec();
                        w.extend(m.word());
                        w.extend_from_slice(&word[k + 2..]);
                        accumulate(&mut pending, w, &c * kc);
                    }
                }
            }
        }
    }
    out
}

fn pop_longest(pending: &mut BTreeMap<Vec<usize>, Scalar>) -> Option<(Vec<usize>, Scalar)> {
    let key = pending.keys().max_by_key(|w| w.len())?.clone();
    let c = pending.remove(&key)?;
    Some((key, c))
}

/// Diamond-lemma certificate: for every triple `k > j > i` the overlap
/// `x_k x_j x_i` resolves to the same normal form whichever pair is rewritten first.
pub fn verify_pbw_consistency(p: &OrePresentation) -> VerificationReport {
    let mut report = VerificationReport::new("PBW consistency");
    let n = p.ngens();
    let names = p.names();
    for k in 0..n {
        for j in 0..k {
            for i in 0..j {
                let one = Scalar::one();
                // route 1: (x_k x_j) x_i -> (x_j x_k + κ_kj) x_i
                let mut r1 = vec![(vec![j, k, i], one.clone())];
                for (m, c) in p.commutator(k, j).terms() {
                    let mut w = m.word();
                    w.push(i);
                    r1.push((w, c.clone()));
                }
                // route 2: x_k (x_j x_i) -> x_k (x_i x_j + κ_ji)
                let mut r2 = vec![(vec![k, i, j], one.clone())];
                for (m, c) in p.commutator(j, i).terms() {
                    let mut w = vec![k];
                    w.extend(m.word());
                    r2.push((w, c.clone()));
                }
                let a = normal_form_words(p, r1);
                let b = normal_form_words(p, r2);
                let diff = &a - &b;
                report.record(
                    format!("overlap {}{}{}", names[k], names[j], names[i]),
                    diff.is_zero(),
                    Some(format!("discrepancy {}", p.render(&diff))),
                );
            }
        }
    }
    report.note("all overlaps of the form x_k x_j x_i with k > j > i");
    report
}

/// Number of PBW monomials of weighted degree at most `n`.
pub fn pbw_count(p: &OrePresentation, n: u32) -> u128 {
    count_up_to(p.degrees(), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ore::GeneratorInfo;

    fn build(gens: &[(&str, u32)], rels: &[(&str, &str, &str)]) -> OrePresentation {
        let g: Vec<_> = gens
            .iter()
            .map(|(n, d)| GeneratorInfo::new(*n, *d))
            .collect();
        let free = OrePresentation::new(g.clone(), []).unwrap();
        let table: Vec<_> = rels
            .iter()
            .map(|(a, b, k)| {
                let key = (free.index_of(a).unwrap(), free.index_of(b).unwrap());
                (key, free.parse(k).unwrap())
            })
            .collect();
        OrePresentation::new(g, table).unwrap()
    }

    fn k_family() -> OrePresentation {
        build(
            &[("X", 1), ("Y", 1), ("Z", 2), ("W", 3)],
            &[("Z", "X", "X"), ("W", "X", "-Z"), ("W", "Z", "W - X*Y^2")],
        )
    }

    #[test]
    fn rewriting_examples() {
        let a = build(&[("X", 1), ("Y", 1), ("Z", 2)], &[("Z", "X", "X")]);
        let zx = normal_form(&a, &[2, 0], &Scalar::one());
        assert_eq!(a.render(&zx), "X*Z + X");
        let yx = normal_form(&a, &[1, 0], &Scalar::one());
        assert_eq!(a.render(&yx), "X*Y");
        let k = build(
            &[("X", 1), ("Y", 1), ("Z", 2), ("W", 3)],
            &[("W", "Z", "W - X*Y^2")],
        );
        let wz = normal_form(&k, &[3, 2], &Scalar::one());
        assert_eq!(wz, k.parse("Z*W + W - X*Y^2").unwrap());
    }

    #[test]
    fn rewriting_agrees_with_memoized_product() {
        let k = k_family();
        let words: [&[usize]; 4] = [
            &[3, 2, 1, 0],
            &[3, 3, 0, 2],
            &[2, 1, 0, 3, 0],
            &[3, 0, 3, 2, 1],
        ];
        for w in words {
            assert_eq!(normal_form(&k, w, &Scalar::one()), k.word_product(w));
        }
    }

    #[test]
    fn overlap_failure_is_reported() {
        // F(1,1,0) with [W,Y] = X in place of γY
        let bad = build(
            &[("X", 1), ("Y", 1), ("Z", 2), ("W", 3)],
            &[
                ("Z", "X", "Y"),
                ("W", "X", "Y"),
                ("W", "Y", "X"),
                ("W", "Z", "Z - 2/3*Y^3"),
            ],
        );
        let r = verify_pbw_consistency(&bad);
        assert!(!r.passed());
        assert!(r.check("overlap WZY").is_some_and(|c| !c.passed));
        assert!(verify_pbw_consistency(&k_family()).passed());
    }

    #[test]
    fn counts() {
        let a = build(&[("X", 1), ("Y", 1), ("Z", 2)], &[]);
        assert_eq!(pbw_count(&a, 2), 7);
        assert_eq!(pbw_count(&a, 0), 1);
    }
}
