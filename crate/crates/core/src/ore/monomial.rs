use std::fmt;

/// A PBW monomial `x_1^{e_1} ... x_n^{e_n}` in the fixed generator order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn unit(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    /// Sorted monomial of a word (the commutative image).
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut e = vec![0; n];
        for &g in word {
            e[g] += 1;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_exponent(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Index of the single generator when the monomial has total exponent 1.
    pub fn as_generator(&self) -> Option<usize> {
        if self.total_exponent() == 1 {
            self.0.iter().position(|&e| e == 1)
        } else {
            None
        }
    }

    pub fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    /// The monomial read as a sorted word of generator indices.
    pub fn word(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize))
            .collect()
    }

    pub fn weighted_degree(&self, degrees: &[u32]) -> u32 {
        self.0.iter().zip(degrees).map(|(e, d)| e * d).sum()
    }

    /// Exponent-wise sum (the product in the associated commutative ring).
    pub fn commutative_mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn with_bumped(&self, i: usize, delta: i32) -> Monomial {
        let mut e = self.0.clone();
        e[i] = (e[i] as i32 + delta) as u32;
        Monomial(e)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_unit() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{}", names[i], e)
                }
            })
            .collect();
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.0)
    }
}

/// All exponent vectors over `degrees` with weighted degree exactly `d`,
/// in lexicographic order.
pub fn monomials_of_degree(degrees: &[u32], d: u32) -> Vec<Monomial> {
    fn rec(degrees: &[u32], idx: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if idx == degrees.len() {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let w = degrees[idx];
        let max = left / w;
        for e in 0..=max {
            cur.push(e);
            rec(degrees, idx + 1, left - e * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(degrees, 0, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Number of exponent vectors of weighted degree at most `n`.
pub fn count_up_to(degrees: &[u32], n: u32) -> u128 {
    // ways[k] = number of monomials of weighted degree exactly k
    let mut ways = vec![0u128; n as usize + 1];
    ways[0] = 1;
    for &w in degrees {
        let w = w as usize;
        for k in w..=n as usize {
            ways[k] += ways[k - w];
        }
    }
    ways.iter().sum()
}
