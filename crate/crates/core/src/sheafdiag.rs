//! Diagnostics of the sheaf of logarithmic vector fields `T<X>`: Chern data,
//! syzygies of the partials, stability and freeness.

use std::collections::HashMap;

use num_integer::Roots;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlinalg::ExactMatrix;
use crate::jacobian::{HypersurfaceInput, LocalCohomology, Tjurina};
use crate::polyring::{binomial, Monomial, MonomialOrder, Polynomial};

/// Chern classes and Euler characteristic of `T<X>(k)` for a plane curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChernData {
    pub k: i64,
    pub c1: i64,
    pub c2: i64,
    pub minus_chi: i64,
}

pub fn chern(d: u32, t1: u64, k: i64) -> ChernData {
    let d = i64::from(d);
    let t1 = t1 as i64;
    ChernData {
        k,
        c1: 3 - d + 2 * k,
        c2: d * d - (3 + k) * d + 3 + 3 * k + k * k - t1,
        minus_chi: d * (d + 3) / 2 - t1 - 8,
    }
}

/// Matrix whose kernel is the space of syzygies `(A_0, ..., A_r)` of the
/// partials with `deg A_i = k`. Column `i * C(k+r, r) + s` is the `s`-th
/// degree-`k` monomial (descending degrevlex) in slot `i`.
fn syzygy_matrix(f: &Polynomial, k: u32) -> (ExactMatrix, Vec<Monomial>) {
    let ring = f.ring();
    let n = ring.nvars();
    let order = MonomialOrder::degrevlex(n);
    let d = f.degree().unwrap_or(0);
    let target_deg = (k + d).saturating_sub(1);
    let mut target = Monomial::all_of_degree(n, target_deg);
    target.sort_by(|a, b| order.cmp(b, a));
    let index: HashMap<&Monomial, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut mults = Monomial::all_of_degree(n, k);
    mults.sort_by(|a, b| order.cmp(b, a));
    let mut image = ExactMatrix::zeros(0, target.len(), ring.field());
    for i in 0..n {
        let fi = f.partial(i);
        for m in &mults {
            image.push_row(fi.terms().map(|(t, c)| (index[&t.mul(m)], c.clone())).collect());
        }
    }
    (image.transpose(), mults)
}

/// `dim H^0(T<X>(k))`: syzygies of degree `k` among the partials.
pub fn syzygy_dim(f: &Polynomial, k: u32) -> usize {
    let (m, _) = syzygy_matrix(f, k);
    m.ncols() - m.rank()
}

/// A basis of the degree-`k` syzygies, each as `(A_0, ..., A_r)`.
pub fn syzygies(f: &Polynomial, k: u32) -> Vec<Vec<Polynomial>> {
    let ring = f.ring();
    let (m, mults) = syzygy_matrix(f, k);
    let block = mults.len();
    m.kernel_basis()
        .into_iter()
        .map(|v| {
            (0..ring.nvars())
                .map(|i| {
                    let terms =
                        mults.iter().zip(&v[i * block..(i + 1) * block]).map(|(mon, c)| (mon.clone(), c.clone()));
                    Polynomial::from_terms(ring, terms)
                })
                .collect()
        })
        .collect()
}

/// Smallest `k <= bound` with a nonzero syzygy of degree `k`.
pub fn minimal_syzygy_degree(f: &Polynomial, bound: u32) -> Option<u32> {
    (0..=bound).find(|&k| syzygy_dim(f, k) > 0)
}

fn plane_only(h: &HypersurfaceInput, what: &'static str) -> Result<()> {
    if h.r() != 2 {
        return Err(Error::UnsupportedDimension { r: h.r(), what });
    }
    Ok(())
}

/// `T<X>` is stable iff the partials have no syzygy of degree `[(d-1)/2]`.
pub fn stability_check(h: &HypersurfaceInput) -> Result<bool> {
    plane_only(h, "stability is decided for plane curves only")?;
    if h.degree() < 4 {
        return Err(Error::UnsupportedDegree { d: h.degree(), what: "stability criterion needs d >= 4" });
    }
    if !h.is_squarefree()? {
        return Err(Error::NotSquarefree);
    }
    Ok(syzygy_dim(h.polynomial(), (h.degree() - 1) / 2) == 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FreenessStatus {
    Free,
    NotFree,
    #[serde(rename = "necessary_condition_holds_inconclusive")]
    Inconclusive,
}

impl std::fmt::Display for FreenessStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FreenessStatus::Free => "free",
            FreenessStatus::NotFree => "not free",
            FreenessStatus::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessVerdict {
    pub status: FreenessStatus,
    pub exponents: Option<(u64, u64)>,
    pub certificate: String,
}

/// Integer solutions `a <= b` of `a + b = d - 1`, `ab = (d-1)^2 - t1`.
pub fn candidate_exponents(d: u32, t1: u64) -> Option<(u64, u64)> {
    let s = i128::from(d) - 1;
    let p = s * s - t1 as i128;
    let disc = s * s - 4 * p;
    if p < 0 || disc < 0 {
        return None;
    }
    let root = disc.sqrt();
    if root * root != disc || (s - root) % 2 != 0 {
        return None;
    }
    let a = (s - root) / 2;
    (a >= 0).then_some((a as u64, (s - a) as u64))
}

pub fn freeness_check(h: &HypersurfaceInput) -> Result<FreenessVerdict> {
    let lc = LocalCohomology::of_hypersurface(h)?;
    freeness_from(h, &lc)
}

/// Freeness verdict from an already computed `J`, `J^sat`.
pub fn freeness_from(h: &HypersurfaceInput, lc: &LocalCohomology) -> Result<FreenessVerdict> {
    if h.r() == 2 {
        plane_freeness(h, lc)
    } else {
        Ok(higher_freeness(h, lc))
    }
}

fn plane_freeness(h: &HypersurfaceInput, lc: &LocalCohomology) -> Result<FreenessVerdict> {
    let d = h.degree();
    let f = h.polynomial();
    let t1 = lc
        .tjurina()
        .finite()
        .ok_or_else(|| Error::Inconsistent("reduced plane curve with non-isolated singularities".into()))?;
    let candidate = candidate_exponents(d, t1);
    if lc.is_saturated() {
        let (a, b) = candidate
            .ok_or_else(|| Error::Inconsistent(format!("J = J^sat but no integer exponents for d = {d}, t1 = {t1}")))?;
        if a * a + a * b + b * b != t1 {
            return Err(Error::Inconsistent(format!("exponents ({a}, {b}) give a^2+ab+b^2 != t1 = {t1}")));
        }
        let min = minimal_syzygy_degree(f, a as u32);
        if min != Some(a as u32) {
            return Err(Error::Inconsistent(format!("exponents ({a}, {b}) but minimal syzygy degree {min:?}")));
        }
        return Ok(FreenessVerdict {
            status: FreenessStatus::Free,
            exponents: Some((a, b)),
            certificate: format!("J = J^sat; minimal syzygy in degree {a}"),
        });
    }
    let mut certificate = String::from("J != J^sat");
    if let Some((a, b)) = candidate {
        if let Some(k) = (a > 0).then(|| minimal_syzygy_degree(f, a as u32 - 1)).flatten() {
            let kind = if k == 1 { "linear syzygy".to_string() } else { format!("syzygy of degree {k}") };
            certificate.push_str(&format!("; {kind} contradicts candidate exponents ({a}, {b})"));
        }
    }
    Ok(FreenessVerdict { status: FreenessStatus::NotFree, exponents: None, certificate })
}

fn higher_freeness(h: &HypersurfaceInput, lc: &LocalCohomology) -> FreenessVerdict {
    let r = h.r() as i64;
    let sing = lc.singular_dimension();
    let (status, certificate) = if !lc.is_saturated() {
        (FreenessStatus::NotFree, "H^0_m(R) != 0".to_string())
    } else if sing >= 0 && sing <= r - 3 {
        (FreenessStatus::NotFree, format!("singular locus of codimension {} in X: not even locally free", r - 1 - sing))
    } else {
        (FreenessStatus::Inconclusive, format!("J = J^sat: H^0_m = 0 but freeness undecided for r = {r}"))
    };
    FreenessVerdict { status, exponents: None, certificate }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundVerdict {
    CannotBeFree,
    BoundPassed,
    ExceptionAdmitted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodalCuspAdvisory {
    pub verdict: BoundVerdict,
    pub t1: u64,
    pub reasons: Vec<String>,
}

/// Advisory non-freeness test for a plane curve of degree `d` whose only
/// singularities are `nodes` nodes and `cusps` ordinary cusps.
pub fn nodal_cusp_bound(d: u32, nodes: u64, cusps: u64, irreducible: bool) -> Result<NodalCuspAdvisory> {
    if d == 0 {
        return Err(Error::InconsistentCounts("degree must be positive".into()));
    }
    let max_sing = binomial(u64::from(d) - 1, 2);
    if irreducible && nodes + cusps > max_sing {
        return Err(Error::InconsistentCounts(format!(
            "{} singular points exceed C(d-1, 2) = {max_sing}",
            nodes + cusps
        )));
    }
    let t1 = nodes + 2 * cusps;
    let d64 = u64::from(d);
    let mut reasons = Vec::new();
    if cusps == 0 && d == 3 && nodes == 3 && !irreducible {
        reasons.push("three nodes on a reducible cubic: only the triangle X0*X1*X2 is free".into());
        return Ok(NodalCuspAdvisory { verdict: BoundVerdict::ExceptionAdmitted, t1, reasons });
    }
    if cusps == 0 && d >= 2 {
        reasons.push("nodal curves other than the triangle are not free".into());
    }
    if cusps > 0 && irreducible && 4 * cusps < d64 * d64 {
        reasons.push(format!("kappa = {cusps} < d^2/4 = {}", d64 * d64 / 4));
    }
    let s = d64 - 1;
    let i = if d % 2 == 1 { s * s / 4 } else { d64 * (d64 - 2) / 4 };
    if s * s - i > t1 {
        reasons.push(format!("(d-1)^2 - I = {} exceeds t1 = {t1}", s * s - i));
    }
    let verdict = if reasons.is_empty() { BoundVerdict::BoundPassed } else { BoundVerdict::CannotBeFree };
    Ok(NodalCuspAdvisory { verdict, t1, reasons })
}

/// `-chi` and `c2` only make sense for a finite `t1`.
pub fn chern_for(h: &HypersurfaceInput, t1: Tjurina, k: i64) -> Option<ChernData> {
    if h.r() != 2 {
        return None;
    }
    Some(chern(h.degree(), t1.finite()?, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Field, Ring};

    fn plane(text: &str) -> HypersurfaceInput {
        let ring = Ring::projective(2, Field::Rational);
        HypersurfaceInput::new(ring.parse(text).unwrap()).unwrap()
    }

    #[test]
    fn chern_examples() {
        // triangle: T<X> = O + O, so chi = 2
        assert_eq!(chern(3, 3, 0), ChernData { k: 0, c1: 0, c2: 0, minus_chi: -2 });
        assert_eq!(chern(4, 0, 0), ChernData { k: 0, c1: -1, c2: 7, minus_chi: 6 });
        assert_eq!(chern(6, 19, 0).c2, 2);
    }

    #[test]
    fn fermat_syzygies_are_koszul() {
        let f = plane("X0^4+X1^4+X2^4");
        assert_eq!(syzygy_dim(f.polynomial(), 1), 0);
        assert_eq!(syzygy_dim(f.polynomial(), 3), 3);
        assert!(stability_check(&f).unwrap());
    }

    #[test]
    fn linear_syzygy_of_example_family() {
        let h = plane("X1^2*X0^2-X2^4");
        let syz = syzygies(h.polynomial(), 1);
        assert_eq!(syz.len(), 1);
        let ring = h.ring();
        let want = [ring.parse("2*X0").unwrap(), ring.parse("-2*X1").unwrap(), ring.zero()];
        let v = &syz[0];
        let scale = want[0].terms().next().unwrap().1 / v[0].terms().next().unwrap().1;
        for (a, b) in v.iter().zip(&want) {
            assert_eq!(&a.scale(&scale), b);
        }
        assert!(!stability_check(&h).unwrap());
    }

    #[test]
    fn stability_needs_degree_four() {
        assert!(matches!(stability_check(&plane("X0*X1*X2")), Err(Error::UnsupportedDegree { .. })));
    }

    #[test]
    fn triangle_is_free() {
        let v = freeness_check(&plane("X0*X1*X2")).unwrap();
        assert_eq!(v.status, FreenessStatus::Free);
        assert_eq!(v.exponents, Some((1, 1)));
    }

    #[test]
    fn exponent_solver() {
        assert_eq!(candidate_exponents(6, 19), Some((2, 3)));
        assert_eq!(candidate_exponents(5, 12), Some((2, 2)));
        assert_eq!(candidate_exponents(4, 0), None);
    }

    #[test]
    fn node_cusp_advisories() {
        assert_eq!(nodal_cusp_bound(6, 0, 8, true).unwrap().verdict, BoundVerdict::CannotBeFree);
        assert_eq!(nodal_cusp_bound(4, 3, 0, true).unwrap().verdict, BoundVerdict::CannotBeFree);
        assert_eq!(nodal_cusp_bound(3, 3, 0, false).unwrap().verdict, BoundVerdict::ExceptionAdmitted);
        assert!(nodal_cusp_bound(4, 4, 0, true).is_err());
    }
}
