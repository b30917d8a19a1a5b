use std::fmt;

use smallvec::SmallVec;

/// Exponent vector `(e_0, ..., e_r)` for the variables `X_0, ..., X_r`.
///
/// The derived `Ord` is lexicographic on the exponent vector, which is the
/// pure lex order with `X_0` the largest variable. Other orders live in
/// [`MonomialOrder`](super::MonomialOrder).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u16; 6]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// The monomial `X_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i` is set iff `X_i` occurs. Used as a cheap divisibility prefilter.
    pub fn support_mask(&self) -> u64 {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |acc, (i, _)| acc | (1 << (i % 64)))
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [u16] {
        &mut self.0
    }

    /// All monomials of total degree `degree` in `nvars` variables, in
    /// descending lex order.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; nvars];
        fill(&mut out, &mut cur, 0, degree);
        out
    }

    /// Inserts a new variable with exponent 0 at position `at`.
    pub(crate) fn insert_var(&self, at: usize) -> Monomial {
        let mut v = self.0.clone();
        v.insert(at, 0);
        Monomial(v)
    }

    pub(crate) fn remove_var(&self, at: usize) -> Monomial {
        let mut v = self.0.clone();
        v.remove(at);
        Monomial(v)
    }
}

fn fill(out: &mut Vec<Monomial>, cur: &mut [u16], i: usize, left: u32) {
    if cur.is_empty() {
        if left == 0 {
            out.push(Monomial(SmallVec::new()));
        }
        return;
    }
    if i + 1 == cur.len() {
        cur[i] = left as u16;
        out.push(Monomial(SmallVec::from_slice(cur)));
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e as u16;
        fill(out, cur, i + 1, left - e);
    }
    cur[i] = 0;
}

/// Number of monomials of degree `k` in `n` variables, `C(k+n-1, n-1)`.
pub fn count_of_degree(nvars: usize, degree: u32) -> u64 {
    if nvars == 0 {
        return u64::from(degree == 0);
    }
    binomial(degree as u64 + nvars as u64 - 1, nvars as u64 - 1)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        for n in 1..5 {
            for k in 0..8 {
                assert_eq!(Monomial::all_of_degree(n, k).len() as u64, count_of_degree(n, k));
            }
        }
        assert_eq!(count_of_degree(3, 3), 10);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[2, 0, 1]);
        let b = Monomial::from_exponents(&[1, 3, 0]);
        assert_eq!(a.lcm(&b).exponents(), &[2, 3, 1]);
        assert_eq!(a.gcd(&b).exponents(), &[1, 0, 0]);
        assert!(!a.divides(&b));
        assert_eq!(a.quotient_of(&a.lcm(&b)).unwrap().exponents(), &[0, 3, 0]);
        assert!(Monomial::from_exponents(&[1, 0, 0]).is_coprime(&Monomial::from_exponents(&[0, 2, 1])));
    }
}
