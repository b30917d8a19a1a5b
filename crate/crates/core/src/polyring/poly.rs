use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Coefficient, Field, Monomial, MonomialOrder, PolyError};

#[derive(Debug, PartialEq, Eq)]
struct RingData {
    vars: Vec<String>,
    field: Field,
}

/// Polynomial ring context: variable names and coefficient field.
///
/// Cheap to clone; polynomials hold a handle to their ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring(Arc<RingData>);

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>, field: Field) -> Self {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        assert!(!vars.is_empty(), "a ring needs at least one variable");
        Ring(Arc::new(RingData { vars, field }))
    }

    /// `field[X0, ..., Xr]`.
    pub fn projective(r: usize, field: Field) -> Self {
        Self::new((0..=r).map(|i| format!("X{i}")), field)
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    /// Same variables over another field.
    pub fn with_field(&self, field: Field) -> Ring {
        Ring::new(self.0.vars.clone(), field)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: Coefficient) -> Polynomial {
        self.monomial(Monomial::one(self.nvars()), c)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.monomial(Monomial::var(self.nvars(), i), self.field().one())
    }

    pub fn monomial(&self, m: Monomial, c: Coefficient) -> Polynomial {
        assert_eq!(m.nvars(), self.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: self.clone(), terms }
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial, PolyError> {
        super::parse::parse(text, self)
    }
}

/// Sparse polynomial: a map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl Polynomial {
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Coefficient)>) -> Self {
        let mut p = ring.zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lex order of the exponent vector.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Coefficient> {
        self.terms.get(m)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coefficient)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted descending by `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Coefficient)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = &*old + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(n, a)| (n.mul(m), a.clone())).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to the `i`-th variable.
    pub fn partial(&self, i: usize) -> Polynomial {
        let field = self.ring.field();
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.exponents_mut()[i] -= 1;
            out.add_term(dm, &(c * &field.from_i64(e as i64)));
        }
        out
    }

    /// Divides by the leading coefficient with respect to `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Exact division by a nonzero `divisor`; `None` when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let order = MonomialOrder::degrevlex(self.ring.nvars());
        let (dlm, dlc) = divisor.leading_term(&order).map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rest = self.clone();
        let mut quot = self.ring.zero();
        while let Some((lm, lc)) = rest.leading_term(&order).map(|(m, c)| (m.clone(), c.clone())) {
            let q = dlm.quotient_of(&lm)?;
            let c = &lc / &dlc;
            rest = &rest - &divisor.mul_monomial(&q).scale(&c);
            quot.add_term(q, &c);
        }
        Some(quot)
    }

    /// Evaluates at a point of the coefficient field.
    pub fn evaluate(&self, point: &[Coefficient]) -> Coefficient {
        assert_eq!(point.len(), self.ring.nvars());
        let field = self.ring.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = &t * x;
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Same polynomial in a ring with the same variables over `ring`'s field,
    /// reducing rational coefficients. Fails if a denominator vanishes.
    pub fn change_field(&self, ring: &Ring) -> Result<Polynomial, PolyError> {
        assert_eq!(ring.nvars(), self.ring.nvars());
        let mut out = ring.zero();
        for (m, c) in &self.terms {
            let c = match c {
                Coefficient::Rational(q) => ring.field().from_rational(q)?,
                Coefficient::Mod { .. } if c.field() == ring.field() => c.clone(),
                Coefficient::Mod { .. } => return Err(PolyError::RingMismatch),
            };
            out.add_term(m.clone(), &c);
        }
        Ok(out)
    }

    /// Embeds into a ring with one extra variable inserted at index `at`.
    pub(crate) fn insert_var(&self, ring: &Ring, at: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.insert_var(at), c.clone())).collect(),
        }
    }

    /// Drops variable `at`, which must not occur.
    pub(crate) fn remove_var(&self, ring: &Ring, at: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    debug_assert_eq!(m.exponent(at), 0);
                    (m.remove_var(at), c.clone())
                })
                .collect(),
        }
    }

    /// Squarefreeness of a homogeneous polynomial.
    ///
    /// In characteristic zero `f` lies in its gradient ideal (Euler), so a
    /// repeated factor `g^2 | f` makes `V(g)` a component of `V(J(f))`.
    /// Hence `f` is squarefree iff `V(J(f))` has codimension at least 2 in
    /// projective space, i.e. `dim Proj(P/J(f)) <= r - 2`. Over GF(p) the
    /// Euler relation needs `p > deg f`, so smaller characteristics are refused.
    pub fn is_squarefree(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Ok(false);
        }
        if !self.is_homogeneous() {
            return Err(PolyError::NotHomogeneous);
        }
        let d = self.degree().unwrap_or(0);
        let p = self.ring.field().characteristic();
        if p != 0 && u64::from(d) >= p {
            return Err(PolyError::CharacteristicTooSmall { degree: d, p });
        }
        if d <= 1 {
            return Ok(true);
        }
        let r = self.ring.nvars() as i64 - 1;
        let grads: Vec<Polynomial> = (0..self.ring.nvars()).map(|i| self.partial(i)).collect();
        let ideal = crate::groebner::Ideal::new(self.ring.clone(), grads);
        Ok(crate::groebner::proj_dimension(&ideal) <= r - 2)
    }

    fn combine(&self, rhs: &Polynomial, negate: bool) -> Polynomial {
        assert_eq!(self.ring, rhs.ring, "polynomials from different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            if negate {
                out.add_term(m.clone(), &-c);
            } else {
                out.add_term(m.clone(), c);
            }
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.combine(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.combine(rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, rhs.ring, "polynomials from different rings");
        let mut out = self.ring.zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), &(a * b));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Prints in descending degrevlex order using `*` and `^`; the output is
    /// accepted by [`Ring::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let order = MonomialOrder::degrevlex(self.ring.nvars());
        for (k, (m, c)) in self.sorted_terms(&order).into_iter().enumerate() {
            let (neg, abs) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.var_names()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.var_names()[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3() -> Ring {
        Ring::projective(2, Field::Rational)
    }

    #[test]
    fn partial_examples() {
        let r = q3();
        let f = r.parse("X0*X1*X2").unwrap();
        assert_eq!(f.partial(0), r.parse("X1*X2").unwrap());
        let g = r.parse("X0^4+X1^4+X2^4").unwrap();
        assert_eq!(g.partial(1), r.parse("4*X1^3").unwrap());
        let h = r.parse("X1^5-X0^2*X2^3").unwrap();
        assert_eq!(h.partial(2), r.parse("-3*X0^2*X2^2").unwrap());
        assert!(r.one().partial(0).is_zero());
    }

    #[test]
    fn degree_drops_by_one() {
        let r = q3();
        let f = r.parse("X0^3*X1 - 7*X2^4 + X0*X1*X2^2").unwrap();
        for i in 0..3 {
            assert_eq!(f.partial(i).degree(), Some(3));
        }
    }

    #[test]
    fn squarefree_examples() {
        let r = q3();
        assert!(!r.parse("X0^2*X1").unwrap().is_squarefree().unwrap());
        assert!(r.parse("X0*X1*X2").unwrap().is_squarefree().unwrap());
        assert!(r.parse("X0*(X0^3+X1^3+X2^3)").unwrap().is_squarefree().unwrap());
    }

    #[test]
    fn squarefree_refuses_small_characteristic() {
        let r = Ring::projective(2, Field::prime(3).unwrap());
        let f = r.parse("X0^4+X1^4+X2^4").unwrap();
        assert!(matches!(f.is_squarefree(), Err(PolyError::CharacteristicTooSmall { .. })));
    }

    #[test]
    fn exact_division() {
        let r = q3();
        let g = r.parse("X0+X1").unwrap();
        let h = r.parse("X0^2-X1*X2").unwrap();
        assert_eq!((&g * &h).exact_div(&g).unwrap(), h);
        assert!(h.exact_div(&g).is_none());
    }

    #[test]
    fn display_is_degrevlex_descending() {
        let r = q3();
        let f = r.parse("X2^2 - 3/2*X0*X1 + X0^2 + 5").unwrap();
        assert_eq!(f.to_string(), "X0^2 - 3/2*X0*X1 + X2^2 + 5");
    }
}
