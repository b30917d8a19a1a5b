//! Buchberger's algorithm on order-sorted term vectors.
//!
//! Pairs are selected by smallest sugar degree, ties broken by the smaller
//! lcm. The Gebauer–Möller update implements the coprime (product) and
//! chain criteria.

use std::cmp::Ordering;

use crate::polyring::{Coefficient, Monomial, MonomialOrder};

/// Terms sorted strictly descending by the active order, no zero coefficients.
pub(crate) type Terms = Vec<(Monomial, Coefficient)>;

struct Element {
    terms: Terms,
    mask: u64,
    sugar: u32,
}

impl Element {
    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

pub(crate) fn sort_terms(terms: &mut Terms, order: &MonomialOrder) {
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
}

fn make_monic(terms: &mut Terms) {
    if let Some((_, lc)) = terms.first() {
        if !lc.is_one() {
            let inv = lc.inv();
            for (_, c) in terms.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
}

/// `a - factor * shift * b`, where both inputs are sorted descending.
fn sub_scaled(
    a: &[(Monomial, Coefficient)],
    factor: &Coefficient,
    shift: &Monomial,
    b: &[(Monomial, Coefficient)],
    order: &MonomialOrder,
) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<Monomial> = b.first().map(|t| t.0.mul(shift));
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), &bj) {
            (Some(x), Some(y)) => order.cmp(&x.0, y),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bj.take().unwrap(), -&(factor * &b[j].1)));
                j += 1;
                bj = b.get(j).map(|t| t.0.mul(shift));
            }
            Ordering::Equal => {
                let c = &a[i].1 - &(factor * &b[j].1);
                if !c.is_zero() {
                    out.push((bj.take().unwrap(), c));
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| t.0.mul(shift));
            }
        }
    }
    out
}

/// Reducer view: leading monomial, its support mask, and the monic polynomial.
pub(crate) struct Reducer<'a> {
    pub lm: &'a Monomial,
    pub mask: u64,
    pub terms: &'a [(Monomial, Coefficient)],
}

fn find_reducer<'a, 'b>(m: &Monomial, reducers: &'b [Reducer<'a>]) -> Option<&'b Reducer<'a>> {
    let mask = m.support_mask();
    reducers.iter().find(|r| r.mask & !mask == 0 && r.lm.divides(m))
}

/// Reduces `p` by monic `reducers`. With `full = false` only the leading term
/// is reduced away; otherwise every term is.
pub(crate) fn reduce(mut p: Terms, reducers: &[Reducer<'_>], order: &MonomialOrder, full: bool) -> Terms {
    let mut rem: Terms = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (m, c) = &p[start];
        match find_reducer(m, reducers) {
            Some(r) => {
                let shift = r.lm.quotient_of(m).unwrap();
                let c = c.clone();
                p = sub_scaled(&p[start + 1..], &c, &shift, &r.terms[1..], order);
                start = 0;
            }
            None if !full => {
                rem.extend(p.drain(start..));
                break;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

fn spoly(a: &Element, b: &Element, lcm: &Monomial, order: &MonomialOrder) -> Terms {
    // both monic: S = (lcm/lm_a) a - (lcm/lm_b) b; leading terms cancel
    let sa = a.lm().quotient_of(lcm).unwrap();
    let sb = b.lm().quotient_of(lcm).unwrap();
    let a_tail: Terms = a.terms[1..].iter().map(|(m, c)| (m.mul(&sa), c.clone())).collect();
    let one = a.terms[0].1.clone();
    sub_scaled(&a_tail, &one, &sb, &b.terms[1..], order)
}

struct State<'o> {
    order: &'o MonomialOrder,
    elems: Vec<Element>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn reducers(&self) -> Vec<Reducer<'_>> {
        self.active
            .iter()
            .map(|&k| {
                let e = &self.elems[k];
                Reducer { lm: e.lm(), mask: e.mask, terms: &e.terms }
            })
            .collect()
    }

    /// Gebauer–Möller update with new element `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.elems[h].lm().clone();
        let sugar_h = self.elems[h].sugar;
        let mut cands: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let lm_g = self.elems[g].lm();
                (g, lm_h.lcm(lm_g), lm_h.is_coprime(lm_g))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g, lcm, coprime)) = cands.pop() {
            let dominated = cands.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&lcm));
            if coprime || !dominated {
                kept.push((g, lcm, coprime));
            }
        }
        let elems = &self.elems;
        self.pairs.retain(|p| {
            let li = elems[p.i].lm().lcm(&lm_h);
            let lj = elems[p.j].lm().lcm(&lm_h);
            !(lm_h.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
        });
        for (g, lcm, coprime) in kept {
            if coprime {
                continue;
            }
            let eg = &self.elems[g];
            let sugar = (sugar_h + lcm.degree() - lm_h.degree()).max(eg.sugar + lcm.degree() - eg.lm().degree());
            self.pairs.push(Pair { i: g, j: h, lcm, sugar });
        }
        self.active.retain(|&g| !lm_h.divides(elems[g].lm()));
        self.active.push(h);
    }

    fn insert(&mut self, mut terms: Terms, sugar: u32) {
        make_monic(&mut terms);
        let mask = terms[0].0.support_mask();
        self.elems.push(Element { terms, mask, sugar });
        let h = self.elems.len() - 1;
        self.update(h);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.sugar.cmp(&b.sugar).then_with(|| order.cmp(&a.lcm, &b.lcm)))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` (each sorted by
/// `order`). Output elements are monic, sorted by leading monomial ascending.
pub(crate) fn groebner_basis(gens: Vec<Terms>, order: &MonomialOrder) -> Vec<Terms> {
    let mut state = State { order, elems: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut input: Vec<Terms> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    input.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    for g in input {
        let sugar = g.iter().map(|t| t.0.degree()).max().unwrap();
        let r = reduce(g, &state.reducers(), order, true);
        if !r.is_empty() {
            state.insert(r, sugar);
        }
    }
    while let Some(pair) = state.next_pair() {
        let s = spoly(&state.elems[pair.i], &state.elems[pair.j], &pair.lcm, order);
        let r = reduce(s, &state.reducers(), order, true);
        if !r.is_empty() {
            state.insert(r, pair.sugar);
        }
    }
    interreduce(state.active.iter().map(|&k| state.elems[k].terms.clone()).collect(), order)
}

/// Minimalizes and tail-reduces a Gröbner basis into the reduced one.
pub(crate) fn interreduce(mut basis: Vec<Terms>, order: &MonomialOrder) -> Vec<Terms> {
    basis.retain(|g| !g.is_empty());
    basis.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let mut minimal: Vec<Terms> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h[0].0.divides(&g[0].0)) {
            minimal.push(g);
        }
    }
    let mut out: Vec<Terms> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let reducers: Vec<Reducer<'_>> = minimal
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, h)| Reducer { lm: &h[0].0, mask: h[0].0.support_mask(), terms: h })
            .collect();
        let head = minimal[k][0].clone();
        let tail = reduce(minimal[k][1..].to_vec(), &reducers, order, true);
        let mut g = Vec::with_capacity(tail.len() + 1);
        g.push(head);
        g.extend(tail);
        make_monic(&mut g);
        out.push(g);
    }
    out
}
