//! Exact Gaussian elimination over the coefficient field.
//!
//! Ranks over Q use fraction-free elimination on primitive integer rows (each
//! combination `a*row - b*pivot` is followed by removal of the row content),
//! ranks over GF(p) use plain Gauss with normalized pivots. Kernels go through
//! a reduced row echelon form over the field itself.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::{Coefficient, Field, Monomial, MonomialOrder, Polynomial};

type SparseRow = Vec<(usize, Coefficient)>;

/// Matrix with sparse rows; no stored zeros, column indices strictly increasing.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix {
    ncols: usize,
    field: Field,
    rows: Vec<SparseRow>,
}

impl ExactMatrix {
    pub fn zeros(nrows: usize, ncols: usize, field: Field) -> Self {
        ExactMatrix { ncols, field, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>], field: Field) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(0, ncols, field);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged matrix");
            m.push_row(r.iter().map(|&x| field.from_i64(x)).enumerate().collect());
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Appends a row given as `(column, value)` pairs in any order.
    pub fn push_row(&mut self, mut entries: SparseRow) {
        entries.retain(|(_, c)| !c.is_zero());
        entries.sort_by_key(|e| e.0);
        for w in entries.windows(2) {
            assert!(w[0].0 != w[1].0, "duplicate column {}", w[0].0);
        }
        if let Some(last) = entries.last() {
            assert!(last.0 < self.ncols, "column {} out of range", last.0);
        }
        self.rows.push(entries);
    }

    pub fn set(&mut self, i: usize, j: usize, value: Coefficient) {
        assert!(j < self.ncols);
        let row = &mut self.rows[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) if value.is_zero() => {
                row.remove(k);
            }
            Ok(k) => row[k].1 = value,
            Err(_) if value.is_zero() => {}
            Err(k) => row.insert(k, (j, value)),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Coefficient {
        let row = &self.rows[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) => row[k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn row(&self, i: usize) -> &[(usize, Coefficient)] {
        &self.rows[i]
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = Self::zeros(self.ncols, self.nrows(), self.field);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row {
                t.rows[*j].push((i, c.clone()));
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Coefficient]) -> Vec<Coefficient> {
        assert_eq!(v.len(), self.ncols);
        self.rows.iter().map(|row| row.iter().fold(self.field.zero(), |acc, (j, c)| &acc + &(c * &v[*j]))).collect()
    }

    /// Reduces a rational matrix modulo `p`. Fails if a denominator vanishes.
    pub fn reduce_mod(&self, p: Field) -> Option<ExactMatrix> {
        let mut m = Self::zeros(0, self.ncols, p);
        for row in &self.rows {
            let mut out = Vec::with_capacity(row.len());
            for (j, c) in row {
                let q = c.as_rational()?;
                out.push((*j, p.from_rational(q).ok()?));
            }
            m.push_row(out);
        }
        Some(m)
    }

    pub fn rank(&self) -> usize {
        match self.field {
            Field::Rational => rank_fraction_free(&self.rows),
            Field::Prime(p) => rank_mod_p(&self.rows, p),
        }
    }

    /// Basis of the right null space `{v : M v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Coefficient>> {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.ncols];
            v[free] = self.field.one();
            for (row, &pc) in rref.iter().zip(&pivots) {
                if let Ok(k) = row.binary_search_by_key(&free, |e| e.0) {
                    v[pc] = -&row[k].1;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form: returns the nonzero rows (pivot 1) and their
    /// pivot columns, in increasing pivot order.
    pub fn rref(&self) -> (Vec<SparseRow>, Vec<usize>) {
        let mut pivots: Vec<(usize, SparseRow)> = Vec::new();
        for row in &self.rows {
            let mut row = row.clone();
            for (pc, prow) in &pivots {
                if let Ok(k) = row.binary_search_by_key(pc, |e| e.0) {
                    let factor = row[k].1.clone();
                    row = axpy(&row, &factor, prow);
                }
            }
            if let Some((lead, lc)) = row.first().cloned() {
                let inv = lc.inv();
                let row: SparseRow = row.into_iter().map(|(j, c)| (j, &c * &inv)).collect();
                for (_, prow) in pivots.iter_mut() {
                    if let Ok(k) = prow.binary_search_by_key(&lead, |e| e.0) {
                        let factor = prow[k].1.clone();
                        *prow = axpy(prow, &factor, &row);
                    }
                }
                pivots.push((lead, row));
            }
        }
        pivots.sort_by_key(|p| p.0);
        let cols = pivots.iter().map(|p| p.0).collect();
        (pivots.into_iter().map(|p| p.1).collect(), cols)
    }
}

/// `row - factor * pivot`, sparse merge.
fn axpy(row: &[(usize, Coefficient)], factor: &Coefficient, pivot: &[(usize, Coefficient)]) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, -&(factor * &pivot[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - &(factor * &pivot[j].1);
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

type IntRow = Vec<(usize, BigInt)>;

fn primitive(mut row: IntRow) -> IntRow {
    let g = row.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for (_, c) in row.iter_mut() {
            *c /= &g;
        }
    }
    if row.first().is_some_and(|(_, c)| c.is_negative()) {
        for (_, c) in row.iter_mut() {
            *c = -&*c;
        }
    }
    row
}

fn to_integer_row(row: &[(usize, Coefficient)]) -> IntRow {
    let den = row.iter().fold(BigInt::one(), |l, (_, c)| l.lcm(c.as_rational().expect("rational entry").denom()));
    primitive(
        row.iter()
            .map(|(j, c)| {
                let q = c.as_rational().unwrap();
                (*j, q.numer() * (&den / q.denom()))
            })
            .collect(),
    )
}

fn rank_fraction_free(rows: &[SparseRow]) -> usize {
    let mut work: Vec<IntRow> = rows.iter().filter(|r| !r.is_empty()).map(|r| to_integer_row(r)).collect();
    work.sort_by_key(|r| (r[0].0, r.len()));
    let mut pivots: HashMap<usize, IntRow> = HashMap::new();
    for mut row in work {
        while let Some((lead, a)) = row.first().cloned() {
            let Some(piv) = pivots.get(&lead) else {
                pivots.insert(lead, row);
                break;
            };
            let b = &piv[0].1;
            let g = a.gcd(b);
            let (sa, sb) = (b / &g, &a / &g);
            row = primitive(int_combine(&row, &sa, piv, &sb));
        }
    }
    pivots.len()
}

/// `sa*row - sb*pivot` with the leading entry cancelling.
fn int_combine(row: &IntRow, sa: &BigInt, pivot: &IntRow, sb: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, sa * &row[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(sb * &pivot[j].1)));
            j += 1;
        } else {
            let v = sa * &row[i].1 - sb * &pivot[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn rank_mod_p(rows: &[SparseRow], p: u64) -> usize {
    let inv = |a: u64| Coefficient::Mod { value: a, p }.inv();
    let unwrap = |c: &Coefficient| match c {
        Coefficient::Mod { value, .. } => *value,
        Coefficient::Rational(_) => unreachable!("rational entry in GF(p) matrix"),
    };
    let mut work: Vec<Vec<(usize, u64)>> =
        rows.iter().filter(|r| !r.is_empty()).map(|r| r.iter().map(|(j, c)| (*j, unwrap(c))).collect()).collect();
    work.sort_by_key(|r| (r[0].0, r.len()));
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for mut row in work {
        while let Some(&(lead, a)) = row.first() {
            let Some(piv) = pivots.get(&lead) else {
                let s = unwrap(&inv(a));
                pivots.insert(lead, row.into_iter().map(|(j, c)| (j, c * s % p)).collect());
                break;
            };
            let mut out = Vec::with_capacity(row.len() + piv.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < piv.len() {
                let ci = row.get(i).map_or(usize::MAX, |e| e.0);
                let cj = piv.get(j).map_or(usize::MAX, |e| e.0);
                if ci < cj {
                    out.push(row[i]);
                    i += 1;
                } else if cj < ci {
                    out.push((cj, (p - a * piv[j].1 % p) % p));
                    j += 1;
                } else {
                    let v = (row[i].1 + p - a * piv[j].1 % p) % p;
                    if v != 0 {
                        out.push((ci, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            row = out;
        }
    }
    pivots.len()
}

/// Matrix of the multiplication map `(m_g)_g -> sum m_g * g` into degree
/// `degree`: one row per (generator, monomial multiplier) pair, one column
/// per monomial of degree `degree`. Columns are sorted descending by `order`.
/// Generators must be homogeneous; those of degree above `degree` contribute
/// no rows.
pub fn macaulay_matrix(gens: &[Polynomial], degree: u32, order: &MonomialOrder) -> (ExactMatrix, Vec<Monomial>) {
    let nvars = order.nvars();
    let field = gens.first().map_or(Field::Rational, |g| g.ring().field());
    let mut cols = Monomial::all_of_degree(nvars, degree);
    cols.sort_by(|a, b| order.cmp(b, a));
    let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut mat = ExactMatrix::zeros(0, cols.len(), field);
    for g in gens.iter().filter(|g| !g.is_zero()) {
        assert!(g.is_homogeneous(), "Macaulay matrix needs homogeneous generators");
        let e = g.degree().unwrap();
        if e > degree {
            continue;
        }
        let mut mults = Monomial::all_of_degree(nvars, degree - e);
        mults.sort_by(|a, b| order.cmp(b, a));
        for m in mults {
            mat.push_row(g.terms().map(|(t, c)| (index[&t.mul(&m)], c.clone())).collect());
        }
    }
    (mat, cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Ring;

    #[test]
    fn trivial_ranks() {
        assert_eq!(ExactMatrix::zeros(3, 3, Field::Rational).rank(), 0);
        assert_eq!(ExactMatrix::identity(4, Field::Rational).rank(), 4);
        assert_eq!(ExactMatrix::identity(4, Field::prime(31991).unwrap()).rank(), 4);
    }

    #[test]
    fn kernel_examples() {
        assert!(ExactMatrix::identity(3, Field::Rational).kernel_basis().is_empty());
        let m = ExactMatrix::from_i64(&[vec![1, 1]], Field::Rational);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![Field::Rational.from_i64(-1), Field::Rational.from_i64(1)]);
    }

    #[test]
    fn rank_drops_mod_p() {
        // det = 7
        let m = ExactMatrix::from_i64(&[vec![3, 1], vec![1, 5]], Field::Rational);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.reduce_mod(Field::prime(7).unwrap()).unwrap().rank(), 1);
    }

    #[test]
    fn fermat_quartic_macaulay_rank() {
        let ring = Ring::projective(2, Field::Rational);
        let f = ring.parse("X0^4+X1^4+X2^4").unwrap();
        let grads: Vec<_> = (0..3).map(|i| f.partial(i)).collect();
        let (m, cols) = macaulay_matrix(&grads, 4, &MonomialOrder::degrevlex(3));
        assert_eq!(cols.len(), 15);
        assert_eq!(m.rank(), 9);
    }

    #[test]
    fn rational_entries() {
        let q = Field::Rational;
        let half = q.from_rational(&num_rational::BigRational::new(1.into(), 2.into())).unwrap();
        let mut m = ExactMatrix::zeros(0, 2, q);
        m.push_row(vec![(0, half.clone()), (1, q.from_i64(1))]);
        m.push_row(vec![(0, q.from_i64(1)), (1, q.from_i64(2))]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(Coefficient::is_zero));
    }
}
