//! Normal-crossing Hodge consistency checks: graded pieces of `H^0_m(R(f))`
//! against Hodge numbers of the declared components.
//!
//! Smoothness and transversality of the components are trusted, never
//! verified; a mismatch means the identity or its hypotheses fail.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jacobian::{graded_table, GradedTable, HypersurfaceInput};
use crate::polyring::binomial;

pub fn genus_plane_curve(n: u32) -> u64 {
    let n = u64::from(n);
    if n < 3 {
        return 0;
    }
    (n - 1) * (n - 2) / 2
}

/// Genus of a smooth complete intersection of surfaces of degrees `di`, `dj` in `P^3`.
pub fn genus_complete_intersection_curve(di: u32, dj: u32) -> u64 {
    let (a, b) = (i64::from(di), i64::from(dj));
    (a * b * (a + b - 4) / 2 + 1).max(0) as u64
}

/// `h^{1,1}_0` of a smooth surface of degree `n` in `P^3`: the coefficient of
/// `t^{2n-4}` in `((1 - t^{n-1}) / (1 - t))^4`.
pub fn h11_primitive_surface(n: u32) -> u64 {
    if n < 2 {
        return 0;
    }
    let target = (2 * n - 4) as usize;
    let base = vec![1u64; (n - 1) as usize];
    let mut acc = vec![1u64];
    for _ in 0..4 {
        let mut next = vec![0u64; acc.len() + base.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in base.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc.get(target).copied().unwrap_or(0)
}

/// Geometric genus `C(n-1, 3)` of a smooth surface of degree `n` in `P^3`.
pub fn geometric_genus_surface(n: u32) -> u64 {
    if n < 4 {
        return 0;
    }
    binomial(u64::from(n) - 1, 3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeTerm {
    pub term: String,
    pub value: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeCheckResult {
    pub j: i64,
    pub lhs: u64,
    pub rhs: u64,
    pub matched: bool,
    pub breakdown: Vec<HodgeTerm>,
}

impl HodgeCheckResult {
    fn new(j: i64, lhs: u64, breakdown: Vec<HodgeTerm>) -> Self {
        let rhs = breakdown.iter().map(|t| t.value).sum();
        HodgeCheckResult { j, lhs, rhs, matched: lhs == rhs, breakdown }
    }

    pub fn breakdown_text(&self) -> String {
        if self.breakdown.is_empty() {
            return "0".into();
        }
        self.breakdown.iter().map(|t| format!("{} [{}]", t.value, t.term)).collect::<Vec<_>>().join(" + ")
    }
}

fn h0m_at(t: &GradedTable, j: i64) -> Result<u64> {
    if j < 0 {
        return Ok(0);
    }
    t.row(j as u32).map(|r| r.h0m).ok_or(Error::TableTooShort { have: t.j_max(), need: j as u32 })
}

fn components(h: &HypersurfaceInput) -> Result<Vec<u32>> {
    let degrees = h.component_degrees();
    if degrees.is_empty() {
        return Err(Error::MissingComponents);
    }
    Ok(degrees)
}

fn need_r(h: &HypersurfaceInput, r: usize, what: &'static str) -> Result<()> {
    if h.r() != r {
        return Err(Error::UnsupportedDimension { r: h.r(), what });
    }
    Ok(())
}

fn genus_terms(degrees: &[u32]) -> Vec<HodgeTerm> {
    degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| HodgeTerm { term: format!("g(C{}), degree {d}", i + 1), value: genus_plane_curve(d) })
        .collect()
}

/// Plane curves: `h0m_{d-3}` and its twin `h0m_{2d-3}` against the sum of genera.
pub fn check_ncd_curve_with(h: &HypersurfaceInput, t: &GradedTable) -> Result<[HodgeCheckResult; 2]> {
    need_r(h, 2, "the curve check needs r = 2")?;
    let degrees = components(h)?;
    let d = i64::from(h.degree());
    let mut out = Vec::with_capacity(2);
    for j in [d - 3, 2 * d - 3] {
        out.push(HodgeCheckResult::new(j, h0m_at(t, j)?, genus_terms(&degrees)));
    }
    Ok([out.remove(0), out.remove(0)])
}

pub fn check_ncd_curve(h: &HypersurfaceInput) -> Result<[HodgeCheckResult; 2]> {
    check_ncd_curve_with(h, &graded_table(h, None)?)
}

/// Surfaces: `h0m_{2d-4}` against primitive `h^{1,1}` of the components plus
/// the genera of their pairwise intersections.
pub fn check_ncd_surface_with(h: &HypersurfaceInput, t: &GradedTable) -> Result<HodgeCheckResult> {
    need_r(h, 3, "the surface check needs r = 3")?;
    let degrees = components(h)?;
    let mut breakdown: Vec<HodgeTerm> = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| HodgeTerm { term: format!("h11_0(C{}), degree {d}", i + 1), value: h11_primitive_surface(d) })
        .collect();
    for i in 0..degrees.len() {
        for k in i + 1..degrees.len() {
            breakdown.push(HodgeTerm {
                term: format!("g(C{} . C{})", i + 1, k + 1),
                value: genus_complete_intersection_curve(degrees[i], degrees[k]),
            });
        }
    }
    let j = 2 * i64::from(h.degree()) - 4;
    Ok(HodgeCheckResult::new(j, h0m_at(t, j)?, breakdown))
}

pub fn check_ncd_surface(h: &HypersurfaceInput) -> Result<HodgeCheckResult> {
    check_ncd_surface_with(h, &graded_table(h, None)?)
}

/// `h0m_{d-r-1}` against `Σ h^0(Ω^{r-1}_{X_i})`, for `r` in `{2, 3}`.
pub fn check_middle_theorem_with(h: &HypersurfaceInput, t: &GradedTable) -> Result<HodgeCheckResult> {
    let degrees = components(h)?;
    let d = i64::from(h.degree());
    let (j, breakdown) = match h.r() {
        2 => (d - 3, genus_terms(&degrees)),
        3 => (
            d - 4,
            degrees
                .iter()
                .enumerate()
                .map(|(i, &n)| HodgeTerm {
                    term: format!("p_g(C{}), degree {n}", i + 1),
                    value: geometric_genus_surface(n),
                })
                .collect(),
        ),
        r => return Err(Error::UnsupportedDimension { r, what: "Hodge checks are available for r = 2, 3" }),
    };
    Ok(HodgeCheckResult::new(j, h0m_at(t, j)?, breakdown))
}

pub fn check_middle_theorem(h: &HypersurfaceInput) -> Result<HodgeCheckResult> {
    check_middle_theorem_with(h, &graded_table(h, None)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Field, Ring};

    fn with_components(r: usize, comps: &[&str]) -> HypersurfaceInput {
        let ring = Ring::projective(r, Field::Rational);
        let polys: Vec<_> = comps.iter().map(|c| ring.parse(c).unwrap()).collect();
        let f = polys.iter().fold(ring.one(), |acc, p| &acc * p);
        HypersurfaceInput::new(f).unwrap().with_components(polys).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!([1, 3, 4].map(genus_plane_curve), [0, 1, 3]);
        assert_eq!(genus_complete_intersection_curve(2, 3), 4);
        assert_eq!(genus_complete_intersection_curve(1, 3), 1);
        assert_eq!(genus_complete_intersection_curve(2, 2), 1);
        assert_eq!(genus_complete_intersection_curve(1, 1), 0);
        assert_eq!([2, 3, 4].map(h11_primitive_surface), [1, 6, 19]);
        assert_eq!(geometric_genus_surface(5), 4);
    }

    #[test]
    fn line_and_cubic() {
        let h = with_components(2, &["X0", "X0^3+X1^3+X2^3"]);
        let [a, b] = check_ncd_curve(&h).unwrap();
        assert_eq!((a.j, a.lhs, a.rhs, a.matched), (1, 1, 1, true));
        assert_eq!((b.j, b.lhs, b.rhs, b.matched), (5, 1, 1, true));
    }

    #[test]
    fn inflectional_tangent_mismatch() {
        let h = with_components(2, &["X0", "X0^2*X1+X0*X1^2+X2^3"]);
        let [a, _] = check_ncd_curve(&h).unwrap();
        assert_eq!((a.lhs, a.rhs, a.matched), (0, 1, false));
    }

    #[test]
    fn missing_components() {
        let ring = Ring::projective(2, Field::Rational);
        let h = HypersurfaceInput::new(ring.parse("X0*X1*X2").unwrap()).unwrap();
        assert_eq!(check_ncd_curve(&h).err(), Some(Error::MissingComponents));
    }

    #[test]
    fn two_planes() {
        let h = with_components(3, &["X0", "X1"]);
        let s = check_ncd_surface(&h).unwrap();
        assert_eq!((s.j, s.rhs), (0, 0));
        assert!(s.matched);
    }
}
