//! Jacobian rings `R(f) = P/J(f)` and their 0-th local cohomology
//! `H^0_m(R(f)) = J(f)^sat / J(f)`, degree by degree.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::{groebner, hilbert_series, saturate_irrelevant, GroebnerBasis, HilbertSeries, Ideal};
use crate::polyring::{MonomialOrder, Polynomial, Ring};

/// A reduced projective hypersurface `V(f) ⊂ P^r`, optionally with its
/// irreducible components. Component irreducibility is trusted; their
/// product is checked against `f`.
#[derive(Clone, Debug)]
pub struct HypersurfaceInput {
    f: Polynomial,
    d: u32,
    components: Vec<Polynomial>,
}

impl HypersurfaceInput {
    pub fn new(f: Polynomial) -> Result<Self> {
        match f.degree() {
            Some(d) if d >= 1 && f.is_homogeneous() => Ok(HypersurfaceInput { f, d, components: Vec::new() }),
            _ => Err(Error::BadEquation),
        }
    }

    /// Attaches components; their product must equal `f` up to a nonzero scalar.
    pub fn with_components(mut self, components: Vec<Polynomial>) -> Result<Self> {
        let ring = self.f.ring().clone();
        let mut prod = ring.one();
        for c in &components {
            if c.ring() != &ring || !c.is_homogeneous() || c.degree().unwrap_or(0) == 0 {
                return Err(Error::ComponentMismatch);
            }
            prod = &prod * c;
        }
        let order = MonomialOrder::degrevlex(ring.nvars());
        if prod.monic(&order) != self.f.monic(&order) {
            return Err(Error::ComponentMismatch);
        }
        self.components = components;
        Ok(self)
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn ring(&self) -> &Ring {
        self.f.ring()
    }

    /// Ambient projective dimension.
    pub fn r(&self) -> usize {
        self.f.ring().nvars() - 1
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component_degrees(&self) -> Vec<u32> {
        self.components.iter().map(|c| c.degree().unwrap_or(0)).collect()
    }

    pub fn sigma(&self) -> i64 {
        sigma(self.r(), self.d)
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        Ok(self.f.is_squarefree()?)
    }
}

/// `J(f) = (∂f/∂X_0, ..., ∂f/∂X_r)`.
pub fn gradient_ideal(f: &Polynomial) -> Result<Ideal> {
    if !f.is_homogeneous() {
        return Err(Error::BadEquation);
    }
    let partials: Vec<Polynomial> = (0..f.ring().nvars()).map(|i| f.partial(i)).collect();
    if partials.iter().all(Polynomial::is_zero) {
        return Err(Error::GradientVanishes);
    }
    Ok(Ideal::new(f.ring().clone(), partials))
}

/// Socle degree `(r+1)(d-2)` of the jacobian ring of a smooth hypersurface.
pub fn sigma(r: usize, d: u32) -> i64 {
    (r as i64 + 1) * (i64::from(d) - 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GradedRow {
    pub j: u32,
    pub h0m: u64,
    #[serde(rename = "dimR")]
    pub dim_r: u64,
    #[serde(rename = "hfSat")]
    pub hf_sat: u64,
}

/// Rows `j = 0..=j_max` of `(h0m_j, dim R_j, dim (P/J^sat)_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GradedTable {
    rows: Vec<GradedRow>,
}

impl GradedTable {
    pub(crate) fn from_rows(rows: Vec<GradedRow>) -> Self {
        GradedTable { rows }
    }

    pub fn rows(&self) -> &[GradedRow] {
        &self.rows
    }

    pub fn j_max(&self) -> u32 {
        self.rows.last().map_or(0, |r| r.j)
    }

    pub fn row(&self, j: u32) -> Option<&GradedRow> {
        self.rows.get(j as usize)
    }

    pub fn h0m(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.h0m).collect()
    }

    pub fn dim_r(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.dim_r).collect()
    }

    pub fn hf_sat(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.hf_sat).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.h0m == 0)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("j,h0m,dimR,hfSat\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{},{}\n", r.j, r.h0m, r.dim_r, r.hf_sat));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{:>4} {:>8} {:>8} {:>8}\n", "j", "h0m", "dimR", "hfSat");
        for r in &self.rows {
            out.push_str(&format!("{:>4} {:>8} {:>8} {:>8}\n", r.j, r.h0m, r.dim_r, r.hf_sat));
        }
        out
    }
}

/// Degree of the singular scheme: finite when the singularities are isolated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tjurina {
    Finite(u64),
    Infinite,
}

impl Tjurina {
    pub fn finite(self) -> Option<u64> {
        match self {
            Tjurina::Finite(n) => Some(n),
            Tjurina::Infinite => None,
        }
    }
}

impl std::fmt::Display for Tjurina {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tjurina::Finite(n) => write!(f, "{n}"),
            Tjurina::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Tjurina {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Tjurina::Finite(n) => s.serialize_u64(*n),
            Tjurina::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// `J`, `J^sat` and their bases and Hilbert series, computed once.
#[derive(Clone, Debug)]
pub struct LocalCohomology {
    ideal: Ideal,
    gb: GroebnerBasis,
    saturated: Ideal,
    sat_gb: GroebnerBasis,
    series: HilbertSeries,
    sat_series: HilbertSeries,
}

impl LocalCohomology {
    /// Works for any homogeneous ideal.
    pub fn of_ideal(ideal: &Ideal) -> Self {
        assert!(ideal.is_homogeneous(), "local cohomology needs a homogeneous ideal");
        let order = MonomialOrder::degrevlex(ideal.ring().nvars());
        let gb = groebner(ideal, &order);
        let saturated = saturate_irrelevant(ideal);
        let sat_gb = groebner(&saturated, &order);
        let series = gb.hilbert_series();
        let sat_series = sat_gb.hilbert_series();
        LocalCohomology { ideal: ideal.clone(), gb, saturated, sat_gb, series, sat_series }
    }

    /// Requires `f` squarefree.
    pub fn of_hypersurface(h: &HypersurfaceInput) -> Result<Self> {
        if !h.is_squarefree()? {
            return Err(Error::NotSquarefree);
        }
        Ok(Self::of_ideal(&gradient_ideal(h.polynomial())?))
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn saturation(&self) -> &Ideal {
        &self.saturated
    }

    pub fn saturation_basis(&self) -> &GroebnerBasis {
        &self.sat_gb
    }

    /// `J = J^sat`, i.e. `H^0_m = 0`.
    pub fn is_saturated(&self) -> bool {
        self.gb == self.sat_gb
    }

    /// Dimension of `Proj(P/J)`, `-1` when empty.
    pub fn singular_dimension(&self) -> i64 {
        self.series.krull_dimension() as i64 - 1
    }

    pub fn tjurina(&self) -> Tjurina {
        match self.singular_dimension() {
            d if d <= 0 => Tjurina::Finite(self.sat_series.degree().max(0) as u64),
            _ => Tjurina::Infinite,
        }
    }

    /// Degree from which both Hilbert functions agree with their Hilbert
    /// polynomials, so every later row repeats the same pattern.
    pub fn stabilization_degree(&self) -> u32 {
        self.series.regularity_index().max(self.sat_series.regularity_index())
    }

    pub fn row(&self, j: u32) -> GradedRow {
        let dim_r = self.series.value(j) as u64;
        let hf_sat = self.sat_series.value(j) as u64;
        debug_assert!(dim_r >= hf_sat);
        GradedRow { j, h0m: dim_r - hf_sat, dim_r, hf_sat }
    }

    pub fn table(&self, j_max: u32) -> GradedTable {
        GradedTable { rows: (0..=j_max).map(|j| self.row(j)).collect() }
    }

    /// Default table range `0..=max(sigma + 2, stabilization degree)`.
    pub fn default_j_max(&self, sigma: i64) -> u32 {
        ((sigma + 2).max(0) as u32).max(self.stabilization_degree())
    }
}

/// The graded table of `H^0_m(R(f))`, by default up to `max(σ+2, stabilization)`.
pub fn graded_table(h: &HypersurfaceInput, j_max: Option<u32>) -> Result<GradedTable> {
    let lc = LocalCohomology::of_hypersurface(h)?;
    let j_max = j_max.unwrap_or_else(|| lc.default_j_max(h.sigma()));
    Ok(lc.table(j_max))
}

/// `t^1`: the stable value of `HF(P/J^sat)` for isolated singularities.
pub fn t1(h: &HypersurfaceInput) -> Result<Tjurina> {
    Ok(LocalCohomology::of_ideal(&gradient_ideal(h.polynomial())?).tjurina())
}

/// Outcome of comparing `h0m_k` with `h0m_{σ-k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityVerdict {
    pub sigma: i64,
    pub symmetric: bool,
    pub failing_degrees: Vec<u32>,
    /// Centre `c` minimizing `Σ_j |h0m_j - h0m_{c-j}|`, nearest to `sigma` on ties.
    pub estimated_center: i64,
    /// False when the singular locus has positive dimension.
    pub within_hypotheses: bool,
}

impl DualityVerdict {
    pub fn label(&self) -> &'static str {
        match (self.symmetric, self.within_hypotheses) {
            (true, true) => "symmetric",
            (false, true) => "not symmetric",
            (true, false) => "symmetric (outside theorem hypotheses)",
            (false, false) => "not symmetric (outside theorem hypotheses)",
        }
    }
}

/// Checks `h0m_k = h0m_{σ-k}` for `0 <= k <= σ`. The verdict assumes the
/// theorem's hypotheses hold; see [`DualityVerdict::within_hypotheses`].
pub fn duality_check(t: &GradedTable, sigma: i64) -> Result<DualityVerdict> {
    if sigma >= 0 && i64::from(t.j_max()) < sigma {
        return Err(Error::TableTooShort { have: t.j_max(), need: sigma as u32 });
    }
    let h = t.h0m();
    let at = |j: i64| -> u64 {
        if j < 0 {
            0
        } else {
            h.get(j as usize).copied().unwrap_or(0)
        }
    };
    let failing_degrees: Vec<u32> = (0..=sigma).filter(|&k| at(k) != at(sigma - k)).map(|k| k as u32).collect();
    let span = 2 * h.len() as i64;
    let mismatch = |c: i64| -> u64 { (0..span).map(|j| at(j).abs_diff(at(c - j))).sum() };
    let estimated_center = (0..=span.max(sigma)).min_by_key(|&c| (mismatch(c), (c - sigma).abs(), c)).unwrap_or(sigma);
    Ok(DualityVerdict {
        sigma,
        symmetric: failing_degrees.is_empty(),
        failing_degrees,
        estimated_center,
        within_hypotheses: true,
    })
}

/// Table and duality verdict for the jacobian ring of `h`.
pub fn hypersurface_duality(h: &HypersurfaceInput, lc: &LocalCohomology, t: &GradedTable) -> Result<DualityVerdict> {
    let mut v = duality_check(t, h.sigma())?;
    v.within_hypotheses = lc.singular_dimension() <= 0;
    Ok(v)
}

/// `R = P/I` for `I = (f_0, ..., f_r)` with `dim Proj(P/I) <= 0`, checked
/// for duality about `σ = Σ d_j - r - 1`.
pub fn general_table(ideal: &Ideal, generators: usize, j_max: Option<u32>) -> Result<(GradedTable, DualityVerdict)> {
    let n = ideal.ring().nvars();
    if generators != n {
        return Err(Error::GeneratorCount { expected: n, got: generators });
    }
    if ideal.generators().len() != n || !ideal.is_homogeneous() {
        return Err(Error::HypothesisViolated {
            theorem: "the general duality theorem",
            detail: "generators must be nonzero homogeneous polynomials".into(),
        });
    }
    let degrees: u32 = ideal.generators().iter().map(|g| g.degree().unwrap_or(0)).sum();
    let dim = hilbert_series(ideal).krull_dimension() as i64 - 1;
    if dim >= 1 {
        return Err(Error::HypothesisViolated {
            theorem: "the general duality theorem",
            detail: format!("dim Proj(P/I) = {dim}, at most 0 is required"),
        });
    }
    let sigma = i64::from(degrees) - n as i64;
    let lc = LocalCohomology::of_ideal(ideal);
    let t = lc.table(j_max.unwrap_or_else(|| lc.default_j_max(sigma)));
    let v = duality_check(&t, sigma)?;
    Ok((t, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Field;

    fn hyp(r: usize, text: &str) -> HypersurfaceInput {
        let ring = Ring::projective(r, Field::Rational);
        HypersurfaceInput::new(ring.parse(text).unwrap()).unwrap()
    }

    #[test]
    fn sigma_formula() {
        assert_eq!(sigma(2, 4), 6);
        assert_eq!(sigma(3, 3), 4);
        assert_eq!(sigma(3, 4), 8);
    }

    #[test]
    fn gradient_of_cuspidal_quartic() {
        let h = hyp(2, "X0^2*X1^2+X1^2*X2^2+X1^4+X2^4");
        let j = gradient_ideal(h.polynomial()).unwrap();
        let ring = h.ring();
        let want = ["2*X0*X1^2", "2*X0^2*X1+2*X1*X2^2+4*X1^3", "2*X1^2*X2+4*X2^3"];
        for (g, w) in j.generators().iter().zip(want) {
            assert_eq!(g, &ring.parse(w).unwrap());
        }
    }

    #[test]
    fn line_and_cubic_table() {
        let t = graded_table(&hyp(2, "X0*(X0^3+X1^3+X2^3)"), None).unwrap();
        assert_eq!(t.j_max(), 8);
        assert_eq!(t.h0m(), vec![0, 1, 3, 4, 3, 1, 0, 0, 0]);
        assert_eq!(t.dim_r(), vec![1, 3, 6, 7, 6, 4, 3, 3, 3]);
        assert_eq!(t.hf_sat(), vec![1, 2, 3, 3, 3, 3, 3, 3, 3]);
        assert!(duality_check(&t, 6).unwrap().symmetric);
    }

    #[test]
    fn smooth_curve_has_no_saturation() {
        let h = hyp(2, "X0^4+X1^4+X2^4");
        let lc = LocalCohomology::of_hypersurface(&h).unwrap();
        assert_eq!(lc.tjurina(), Tjurina::Finite(0));
        assert_eq!(lc.table(6).h0m(), vec![1, 3, 6, 7, 6, 3, 1]);
    }

    #[test]
    fn non_reduced_rejected() {
        let h = hyp(2, "X0^2*X1");
        assert_eq!(graded_table(&h, None), Err(Error::NotSquarefree));
    }

    #[test]
    fn component_product_checked() {
        let ring = Ring::projective(2, Field::Rational);
        let f = ring.parse("X0*(X0^3+X1^3+X2^3)").unwrap();
        let ok = HypersurfaceInput::new(f.clone())
            .unwrap()
            .with_components(vec![ring.parse("2*X0").unwrap(), ring.parse("X0^3+X1^3+X2^3").unwrap()]);
        assert!(ok.is_ok());
        let bad = HypersurfaceInput::new(f).unwrap().with_components(vec![ring.parse("X0").unwrap()]);
        assert_eq!(bad.err(), Some(Error::ComponentMismatch));
    }

    #[test]
    fn regular_sequence_general_case() {
        let ring = Ring::projective(2, Field::Rational);
        let gens: Vec<Polynomial> = ["X0^2", "X1^2", "X2^2"].iter().map(|s| ring.parse(s).unwrap()).collect();
        let (t, v) = general_table(&Ideal::new(ring, gens), 3, None).unwrap();
        assert_eq!(&t.h0m()[..5], &[1, 3, 3, 1, 0]);
        assert_eq!(v.sigma, 3);
        assert!(v.symmetric);
    }

    #[test]
    fn general_case_rejects_curves_of_singularities() {
        let h = hyp(3, "X0*X3^2-X1*X2^2");
        let j = gradient_ideal(h.polynomial()).unwrap();
        assert!(matches!(general_table(&j, 4, None), Err(Error::HypothesisViolated { .. })));
    }

    #[test]
    fn estimated_center_of_asymmetric_profile() {
        let rows = [0u64, 0, 1, 4, 5, 1, 0, 0, 0, 0, 0]
            .iter()
            .enumerate()
            .map(|(j, &h)| GradedRow { j: j as u32, h0m: h, dim_r: h, hf_sat: 0 })
            .collect();
        let v = duality_check(&GradedTable { rows }, 8).unwrap();
        assert!(!v.symmetric);
        assert_eq!(v.failing_degrees, vec![2, 3, 5, 6]);
        assert_eq!(v.estimated_center, 7);
    }
}
