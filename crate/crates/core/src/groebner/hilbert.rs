//! Hilbert series of monomial ideals.
//!
//! The numerator is computed with the pivot recursion
//! `HS(P/I) = HS(P/(I + p)) + t^deg(p) HS(P/(I : p))` for a variable power
//! `p`, bottoming out at ideals generated by pairwise coprime monomials.

use serde::Serialize;

use crate::polyring::{binomial, Monomial};

/// `HS(t) = numerator(t) / (1 - t)^nvars` for a standard graded quotient `P/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    numerator: Vec<i64>,
    nvars: usize,
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

fn poly_mul_one_minus(a: &[i64], d: usize) -> Vec<i64> {
    // a * (1 - t^d)
    let mut out = vec![0; a.len() + d];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
        out[i + d] -= x;
    }
    trim(out)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(Monomial::degree);
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let mut used = 0u64;
    let mut coprime = true;
    for g in &gens {
        let m = g.support_mask();
        if used & m != 0 {
            coprime = false;
            break;
        }
        used |= m;
    }
    if coprime && gens[0].nvars() <= 64 {
        return gens.iter().fold(vec![1], |acc, g| poly_mul_one_minus(&acc, g.degree() as usize));
    }
    let nvars = gens[0].nvars();
    // pivot on the most frequent variable, at its exponent in a mixed generator
    let mut freq = vec![0usize; nvars];
    for g in &gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                freq[i] += 1;
            }
        }
    }
    let mixed: Vec<&Monomial> = gens.iter().filter(|g| g.exponents().iter().filter(|&&e| e > 0).count() > 1).collect();
    let (var, exp) = mixed
        .iter()
        .flat_map(|g| g.exponents().iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e)))
        .max_by_key(|&(i, e)| (freq[i], std::cmp::Reverse(e)))
        .expect("non-coprime generators include a mixed monomial");
    let mut pe = vec![0u16; nvars];
    pe[var] = exp;
    let pivot = Monomial::from_exponents(&pe);

    let mut sum = gens.clone();
    sum.push(pivot.clone());
    let colon: Vec<Monomial> = gens.iter().map(|g| pivot.gcd(g).quotient_of(g).unwrap()).collect();
    let a = numerator(sum);
    let mut b = vec![0; exp as usize];
    b.extend(numerator(colon));
    poly_add(&a, &b)
}

impl HilbertSeries {
    /// Series of `P/(gens)` for monomial generators in `nvars` variables.
    pub fn of_monomial_ideal(gens: &[Monomial], nvars: usize) -> Self {
        HilbertSeries { numerator: numerator(gens.to_vec()), nvars }
    }

    /// Coefficients of the numerator, lowest degree first.
    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// `(h, dim)` with `HS = h(t) / (1-t)^dim` and `h(1) != 0`; `dim` is the
    /// Krull dimension. The zero module gives `(vec![], 0)`.
    pub fn reduced(&self) -> (Vec<i64>, usize) {
        let mut h = self.numerator.clone();
        let mut dim = self.nvars;
        if h.is_empty() {
            return (h, 0);
        }
        while dim > 0 && h.iter().sum::<i64>() == 0 {
            // divide by (1 - t): partial sums
            let mut q = Vec::with_capacity(h.len());
            let mut acc = 0;
            for x in &h[..h.len() - 1] {
                acc += x;
                q.push(acc);
            }
            h = trim(q);
            dim -= 1;
        }
        (h, dim)
    }

    pub fn krull_dimension(&self) -> usize {
        self.reduced().1
    }

    /// Multiplicity `h(1)`.
    pub fn degree(&self) -> i64 {
        self.reduced().0.iter().sum()
    }

    /// Hilbert function `dim (P/I)_k`.
    pub fn value(&self, k: u32) -> i64 {
        series_coeff(&self.numerator, self.nvars, k as i64)
    }

    /// Hilbert polynomial evaluated at `k`.
    pub fn polynomial_value(&self, k: i64) -> i64 {
        let (h, dim) = self.reduced();
        if dim == 0 {
            return 0;
        }
        h.iter().enumerate().map(|(j, c)| c * binom_poly(k - j as i64 + dim as i64 - 1, dim as i64 - 1)).sum()
    }

    /// Smallest `k0 >= 0` with `HF(k) = HP(k)` for all `k >= k0`.
    pub fn regularity_index(&self) -> u32 {
        let (h, dim) = self.reduced();
        let bound = h.len() as i64 - dim as i64;
        let mut k0 = bound.max(0);
        while k0 > 0 && self.value((k0 - 1) as u32) == self.polynomial_value(k0 - 1) {
            k0 -= 1;
        }
        k0 as u32
    }
}

/// Coefficient of `t^k` in `num(t) / (1-t)^n`.
fn series_coeff(num: &[i64], n: usize, k: i64) -> i64 {
    if n == 0 {
        return if k >= 0 { num.get(k as usize).copied().unwrap_or(0) } else { 0 };
    }
    num.iter()
        .enumerate()
        .filter(|(j, _)| (*j as i64) <= k)
        .map(|(j, c)| c * binomial((k - j as i64) as u64 + n as u64 - 1, n as u64 - 1) as i64)
        .sum()
}

/// `C(x, m)` as a polynomial in `x` (valid for negative `x`).
fn binom_poly(x: i64, m: i64) -> i64 {
    if m < 0 {
        return 0;
    }
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..m {
        num *= (x - i) as i128;
        den *= (i + 1) as i128;
    }
    (num / den) as i64
}

/// Number of monomials of degree `k` not divisible by any of `leading`.
pub fn count_standard_monomials(leading: &[Monomial], nvars: usize, k: u32) -> u64 {
    Monomial::all_of_degree(nvars, k).iter().filter(|m| !leading.iter().any(|l| l.divides(m))).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn zero_ideal_is_polynomial_ring() {
        let hs = HilbertSeries::of_monomial_ideal(&[], 3);
        assert_eq!(hs.value(3), 10);
        assert_eq!(hs.krull_dimension(), 3);
    }

    #[test]
    fn complete_intersection_of_squares() {
        let hs = HilbertSeries::of_monomial_ideal(&[m(&[2, 0, 0]), m(&[0, 2, 0]), m(&[0, 0, 2])], 3);
        let vals: Vec<i64> = (0..5).map(|k| hs.value(k)).collect();
        assert_eq!(vals, vec![1, 3, 3, 1, 0]);
        assert_eq!(hs.krull_dimension(), 0);
        assert_eq!(hs.regularity_index(), 4);
    }

    #[test]
    fn series_agrees_with_counting() {
        let gens = vec![m(&[2, 1, 0, 0]), m(&[0, 3, 1, 0]), m(&[1, 0, 2, 1]), m(&[0, 0, 0, 4]), m(&[1, 1, 1, 0])];
        let hs = HilbertSeries::of_monomial_ideal(&gens, 4);
        for k in 0..12 {
            assert_eq!(hs.value(k), count_standard_monomials(&gens, 4, k) as i64, "k = {k}");
        }
    }

    #[test]
    fn points_and_lines() {
        // (x0 x1, x0 x2, x1 x2): three coordinate points in P^2, HF = 3 eventually
        let hs = HilbertSeries::of_monomial_ideal(&[m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])], 3);
        assert_eq!(hs.krull_dimension(), 1);
        assert_eq!(hs.degree(), 3);
        assert_eq!(hs.polynomial_value(10), 3);
        assert_eq!(hs.regularity_index(), 1);
        // (x0) in P^2: a line
        let line = HilbertSeries::of_monomial_ideal(&[m(&[1, 0, 0])], 3);
        assert_eq!(line.krull_dimension(), 2);
        assert_eq!(line.polynomial_value(5), 6);
    }
}
