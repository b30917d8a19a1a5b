//! Ideal engine: reduced Gröbner bases, normal forms, colon ideals,
//! saturation by the irrelevant ideal, Hilbert functions, and the dimension
//! of `Proj(P/I)`.
//!
//! Saturation by `m = (X_0, ..., X_r)` uses `I^sat = ∩_i (I : X_i^∞)`. Each
//! `I : X_i^∞` is the fixed point of iterated colons by `X_i`. For a
//! homogeneous ideal with a degrevlex basis in which `X_i` is the least
//! variable, one colon step divides by `X_i` every basis element it divides,
//! and the result is again a Gröbner basis, so the iteration never leaves
//! that basis. Intersections go through elimination of an auxiliary variable.

mod buchberger;
mod hilbert;

pub use hilbert::{count_standard_monomials, HilbertSeries};

use crate::exactlinalg::macaulay_matrix;
use crate::polyring::{count_of_degree, Monomial, MonomialOrder, OrderKind, Polynomial, Ring};
use buchberger::{sort_terms, Reducer, Terms};

/// An ideal given by generators. Zero generators are dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Self {
        for g in &gens {
            assert_eq!(g.ring(), &ring, "generator from a different ring");
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring, gens }
    }

    pub fn unit(ring: Ring) -> Self {
        let one = ring.one();
        Ideal { ring, gens: vec![one] }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Membership test via the reduced degrevlex basis.
    pub fn contains(&self, g: &Polynomial) -> bool {
        groebner(self, &MonomialOrder::degrevlex(self.ring.nvars())).contains(g)
    }
}

/// A Gröbner basis. When `reduced`, it is the unique reduced basis of the
/// ideal for its order: monic, and no term of any element is divisible by
/// another element's leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    terms: Vec<Terms>,
    reduced: bool,
}

fn to_terms(p: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    sort_terms(&mut t, order);
    t
}

impl GroebnerBasis {
    fn from_terms(ring: &Ring, order: &MonomialOrder, terms: Vec<Terms>, reduced: bool) -> Self {
        GroebnerBasis { ring: ring.clone(), order: order.clone(), terms, reduced }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn elements(&self) -> Vec<Polynomial> {
        self.terms.iter().map(|t| Polynomial::from_terms(&self.ring, t.iter().cloned())).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.terms.iter().map(|t| t[0].0.clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.terms.iter().any(|t| t[0].0.is_one())
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(self.ring.clone(), self.elements())
    }

    fn reducers(&self) -> Vec<Reducer<'_>> {
        self.terms.iter().map(|t| Reducer { lm: &t[0].0, mask: t[0].0.support_mask(), terms: t }).collect()
    }

    /// Fully reduced remainder of `g`; zero iff `g` lies in the ideal.
    pub fn normal_form(&self, g: &Polynomial) -> Polynomial {
        let r = buchberger::reduce(to_terms(g, &self.order), &self.reducers(), &self.order, true);
        Polynomial::from_terms(&self.ring, r)
    }

    pub fn contains(&self, g: &Polynomial) -> bool {
        self.normal_form(g).is_zero()
    }

    /// `dim (P/I)_k`, counting degree-`k` monomials outside the leading ideal.
    /// Only meaningful for homogeneous ideals and degree-compatible orders.
    pub fn hilbert_function(&self, k: u32) -> u64 {
        count_standard_monomials(&self.leading_monomials(), self.ring.nvars(), k)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::of_monomial_ideal(&self.leading_monomials(), self.ring.nvars())
    }

    /// Largest degree of a basis element.
    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t[0].0.degree()).max().unwrap_or(0)
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.terms == other.terms
    }
}

/// Reduced Gröbner basis of `ideal` for `order`.
pub fn groebner(ideal: &Ideal, order: &MonomialOrder) -> GroebnerBasis {
    assert_eq!(order.nvars(), ideal.ring.nvars());
    let gens = ideal.gens.iter().map(|g| to_terms(g, order)).collect();
    let mut terms = buchberger::groebner_basis(gens, order);
    terms.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    GroebnerBasis::from_terms(&ideal.ring, order, terms, true)
}

fn degrevlex_basis(ideal: &Ideal) -> GroebnerBasis {
    groebner(ideal, &MonomialOrder::degrevlex(ideal.ring.nvars()))
}

/// `dim (P/I)_k` for homogeneous `I`.
pub fn hilbert_function(ideal: &Ideal, k: u32) -> u64 {
    assert!(ideal.is_homogeneous(), "Hilbert function needs a homogeneous ideal");
    degrevlex_basis(ideal).hilbert_function(k)
}

/// Independent route to [`hilbert_function`]: `C(k+r, r)` minus the rank of
/// the multiplication matrix of the generators into degree `k`.
pub fn hilbert_function_macaulay(ideal: &Ideal, k: u32) -> u64 {
    assert!(ideal.is_homogeneous(), "Hilbert function needs a homogeneous ideal");
    let n = ideal.ring.nvars();
    let (m, _) = macaulay_matrix(&ideal.gens, k, &MonomialOrder::degrevlex(n));
    count_of_degree(n, k) - m.rank() as u64
}

pub fn hilbert_series(ideal: &Ideal) -> HilbertSeries {
    assert!(ideal.is_homogeneous(), "Hilbert series needs a homogeneous ideal");
    degrevlex_basis(ideal).hilbert_series()
}

/// Dimension of `Proj(P/I)`: `-1` when empty, otherwise the degree of the
/// Hilbert polynomial.
pub fn proj_dimension(ideal: &Ideal) -> i64 {
    hilbert_series(ideal).krull_dimension() as i64 - 1
}

/// True iff the reduced degrevlex bases coincide.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> bool {
    assert_eq!(a.ring, b.ring, "ideals from different rings");
    degrevlex_basis(a) == degrevlex_basis(b)
}

/// Divides every element of a degrevlex basis with `X_var` last by `X_var`
/// (once, or as often as possible when `saturate`). Returns `None` if nothing
/// was divisible, i.e. `I : X_var = I`.
fn divide_basis_by_variable(gb: &GroebnerBasis, var: usize, saturate: bool) -> Option<Vec<Terms>> {
    let mut changed = false;
    let out = gb
        .terms
        .iter()
        .map(|t| {
            let min_e = t.iter().map(|(m, _)| m.exponent(var)).min().unwrap_or(0);
            let k = if saturate { min_e } else { min_e.min(1) };
            if k == 0 {
                return t.clone();
            }
            changed = true;
            t.iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.exponents_mut()[var] -= k;
                    (m, c.clone())
                })
                .collect()
        })
        .collect();
    changed.then_some(out)
}

/// `(I : g) = { h : h g ∈ I }`.
///
/// For a homogeneous ideal and `g` a monomial this iterates the colon by
/// single variables; otherwise it goes through [`ideal_quotient_elimination`].
pub fn ideal_quotient(ideal: &Ideal, g: &Polynomial) -> Ideal {
    assert!(!g.is_zero(), "colon by the zero polynomial");
    if g.is_constant() {
        return ideal.clone();
    }
    if ideal.is_homogeneous() && g.num_terms() == 1 {
        let (m, _) = g.terms().next().unwrap();
        let mut cur = ideal.clone();
        for (var, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                cur = colon_by_variable(&cur, var);
            }
        }
        return cur;
    }
    ideal_quotient_elimination(ideal, g)
}

fn colon_by_variable(ideal: &Ideal, var: usize) -> Ideal {
    let n = ideal.ring.nvars();
    let order = MonomialOrder::degrevlex_with_last(n, var);
    let gb = groebner(ideal, &order);
    match divide_basis_by_variable(&gb, var, false) {
        None => ideal.clone(),
        Some(terms) => GroebnerBasis::from_terms(&ideal.ring, &order, terms, false).to_ideal(),
    }
}

/// `(I : g)` as `(I ∩ (g)) / g`, valid for any ideal and nonzero `g`.
pub fn ideal_quotient_elimination(ideal: &Ideal, g: &Polynomial) -> Ideal {
    let principal = Ideal::new(ideal.ring.clone(), vec![g.clone()]);
    let inter = intersect(ideal, &principal);
    let gens = inter.gens.iter().map(|h| h.exact_div(g).expect("generator of I ∩ (g) is divisible by g")).collect();
    Ideal::new(ideal.ring.clone(), gens)
}

/// `I : X_var^∞` for homogeneous `I`, by iterating the colon to a fixed point.
pub fn saturate_by_variable(ideal: &Ideal, var: usize) -> Ideal {
    assert!(ideal.is_homogeneous(), "saturation needs a homogeneous ideal");
    let n = ideal.ring.nvars();
    let order = MonomialOrder::degrevlex_with_last(n, var);
    let mut gb = groebner(ideal, &order);
    // each pass is one colon by X_var; the divided set stays a Gröbner basis
    while let Some(terms) = divide_basis_by_variable(&gb, var, false) {
        gb = GroebnerBasis::from_terms(&ideal.ring, &order, terms, false);
    }
    Ideal::new(ideal.ring.clone(), gb.elements())
}

/// `I^sat = I : m^∞` for the irrelevant ideal `m = (X_0, ..., X_r)`.
pub fn saturate_irrelevant(ideal: &Ideal) -> Ideal {
    assert!(ideal.is_homogeneous(), "saturation needs a homogeneous ideal");
    if ideal.is_zero() {
        return ideal.clone();
    }
    let n = ideal.ring.nvars();
    let mut parts: Vec<Ideal> = Vec::new();
    for var in 0..n {
        let s = saturate_by_variable(ideal, var);
        if !degrevlex_basis(&s).is_unit() {
            parts.push(s);
        }
    }
    let sat = match parts.len() {
        0 => Ideal::unit(ideal.ring.clone()),
        _ => {
            parts.sort_by_key(|p| p.gens.len());
            let mut acc = parts.remove(0);
            for p in parts {
                if !ideal_contains_ideal(&p, &acc) {
                    acc = intersect(&acc, &p);
                }
            }
            acc
        }
    };
    degrevlex_basis(&sat).to_ideal()
}

/// `b ⊆ a`.
fn ideal_contains_ideal(a: &Ideal, b: &Ideal) -> bool {
    let gb = degrevlex_basis(a);
    b.gens.iter().all(|g| gb.contains(g))
}

/// `I ∩ J`, eliminating `t` from `t I + (1 - t) J`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Ideal {
    assert_eq!(a.ring, b.ring, "ideals from different rings");
    if a.is_zero() || b.is_zero() {
        return Ideal::new(a.ring.clone(), Vec::new());
    }
    let n = a.ring.nvars();
    let mut names = vec!["__t".to_string()];
    names.extend(a.ring.var_names().iter().cloned());
    let ext = Ring::new(names, a.ring.field());
    let t = ext.var(0);
    let one_minus_t = &ext.one() - &t;
    let mut gens = Vec::new();
    for g in &a.gens {
        gens.push(&t * &g.insert_var(&ext, 0));
    }
    for g in &b.gens {
        gens.push(&one_minus_t * &g.insert_var(&ext, 0));
    }
    let order = MonomialOrder::new(OrderKind::Elimination(1), (0..=n).collect());
    let gb = groebner(&Ideal::new(ext.clone(), gens), &order);
    let kept = gb
        .elements()
        .into_iter()
        .filter(|p| p.terms().all(|(m, _)| m.exponent(0) == 0))
        .map(|p| p.remove_var(&a.ring, 0))
        .collect();
    Ideal::new(a.ring.clone(), kept)
}
