//! The full diagnostic battery for one input, as a single report object from
//! which the text, CSV and JSON emissions are all derived.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hodge::{check_middle_theorem_with, check_ncd_curve_with, check_ncd_surface_with, HodgeCheckResult};
use crate::jacobian::{
    general_table, hypersurface_duality, DualityVerdict, GradedTable, HypersurfaceInput, LocalCohomology, Tjurina,
};
use crate::sheafdiag::{chern_for, freeness_from, syzygy_dim, ChernData, FreenessStatus, FreenessVerdict};

pub const SCHEMA: &str = "jacring.report/1";

pub const DEFORMATION_LABEL: &str = "first order locally trivial deformations";

#[derive(Clone, Debug, Default)]
pub struct AnalysisOptions {
    pub degree_max: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputEcho {
    pub vars: Vec<String>,
    pub field: String,
    pub f: Option<String>,
    pub generators: Vec<String>,
    pub r: usize,
    pub d: Option<u32>,
    pub components: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeReport {
    pub middle: Option<HodgeCheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve_pair: Option<[HodgeCheckResult; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface: Option<HodgeCheckResult>,
}

impl HodgeReport {
    pub fn checks(&self) -> Vec<&HodgeCheckResult> {
        self.middle.iter().chain(self.curve_pair.iter().flatten()).chain(self.surface.iter()).collect()
    }

    pub fn all_matched(&self) -> bool {
        self.checks().iter().all(|c| c.matched)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub duality: DualityVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chern: Option<ChernData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub freeness: Option<FreenessVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hodge: Option<HodgeReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deformations {
    pub degree: u32,
    pub count: u64,
    pub label: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub input: InputEcho,
    pub sigma: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t1: Option<Tjurina>,
    pub singular_dimension: i64,
    pub saturated: bool,
    pub rows: GradedTable,
    pub verdicts: Verdicts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deformations: Option<Deformations>,
}

fn echo_hypersurface(h: &HypersurfaceInput) -> InputEcho {
    InputEcho {
        vars: h.ring().var_names().to_vec(),
        field: h.ring().field().to_string(),
        f: Some(h.polynomial().to_string()),
        generators: Vec::new(),
        r: h.r(),
        d: Some(h.degree()),
        components: h.components().iter().map(|c| c.to_string()).collect(),
    }
}

/// Runs every check that applies to `h`.
pub fn analyze(h: &HypersurfaceInput, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    if h.r() < 2 {
        return Err(Error::UnsupportedDimension { r: h.r(), what: "analysis needs r >= 2" });
    }
    let lc = LocalCohomology::of_hypersurface(h)?;
    let sigma = h.sigma();
    let natural = lc.default_j_max(sigma);
    let j_max = opts.degree_max.unwrap_or(natural);
    let full = lc.table(j_max.max(natural));
    let rows = lc.table(j_max);
    let duality = hypersurface_duality(h, &lc, &full)?;
    let t1 = lc.tjurina();
    let d = h.degree();

    let plane = h.r() == 2;
    let stable = (plane && d >= 4).then(|| syzygy_dim(h.polynomial(), (d - 1) / 2) == 0);
    let freeness = Some(freeness_from(h, &lc)?);
    let hodge = if h.components().is_empty() || h.r() > 3 {
        None
    } else {
        Some(HodgeReport {
            middle: Some(check_middle_theorem_with(h, &full)?),
            curve_pair: if plane { Some(check_ncd_curve_with(h, &full)?) } else { None },
            surface: if h.r() == 3 { Some(check_ncd_surface_with(h, &full)?) } else { None },
        })
    };
    let report = AnalysisReport {
        schema: SCHEMA,
        input: echo_hypersurface(h),
        sigma,
        t1: Some(t1),
        singular_dimension: lc.singular_dimension(),
        saturated: lc.is_saturated(),
        rows,
        verdicts: Verdicts { duality, chern: chern_for(h, t1, 0), stable, freeness, hodge },
        deformations: Some(Deformations { degree: d, count: lc.row(d).h0m, label: DEFORMATION_LABEL }),
    };
    report.check_consistency()?;
    Ok(report)
}

/// The general case `R = P/(f_0, ..., f_r)`.
pub fn analyze_general(ideal: &Ideal, generators: usize, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let (full, duality) = general_table(ideal, generators, None)?;
    let rows = match opts.degree_max {
        Some(j) if j <= full.j_max() => GradedTable::from_rows(full.rows()[..=j as usize].to_vec()),
        Some(j) => LocalCohomology::of_ideal(ideal).table(j),
        None => full.clone(),
    };
    let ring = ideal.ring();
    let saturated = full.rows().iter().all(|r| r.h0m == 0);
    Ok(AnalysisReport {
        schema: SCHEMA,
        input: InputEcho {
            vars: ring.var_names().to_vec(),
            field: ring.field().to_string(),
            f: None,
            generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
            r: ring.nvars() - 1,
            d: None,
            components: Vec::new(),
        },
        sigma: duality.sigma,
        t1: None,
        singular_dimension: crate::groebner::proj_dimension(ideal),
        saturated,
        rows,
        verdicts: Verdicts { duality, chern: None, stable: None, freeness: None, hodge: None },
        deformations: None,
    })
}

/// The verdicts that must not depend on the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerdictSummary {
    pub table: GradedTable,
    pub symmetric: bool,
    pub t1: Option<Tjurina>,
    pub saturated: bool,
    pub stable: Option<bool>,
    pub freeness: Option<(FreenessStatus, Option<(u64, u64)>)>,
    pub hodge: Option<Vec<bool>>,
}

impl AnalysisReport {
    pub fn summary(&self) -> VerdictSummary {
        VerdictSummary {
            table: self.rows.clone(),
            symmetric: self.verdicts.duality.symmetric,
            t1: self.t1,
            saturated: self.saturated,
            stable: self.verdicts.stable,
            freeness: self.verdicts.freeness.as_ref().map(|f| (f.status, f.exponents)),
            hodge: self.verdicts.hodge.as_ref().map(|h| h.checks().iter().map(|c| c.matched).collect()),
        }
    }

    fn check_consistency(&self) -> Result<()> {
        if let Some(f) = &self.verdicts.freeness {
            if f.status == FreenessStatus::Free && !self.rows.is_zero() {
                return Err(Error::Inconsistent("free but H^0_m(R) != 0".into()));
            }
        }
        if self.singular_dimension <= 0 {
            if let Some(row) = self.rows.rows().iter().find(|r| i64::from(r.j) > self.sigma && r.h0m != 0) {
                return Err(Error::Inconsistent(format!("h0m_{} != 0 above sigma", row.j)));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        self.rows.to_csv()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let e = &self.input;
        match &e.f {
            Some(f) => out.push_str(&format!("f = {f}\n")),
            None => out.push_str(&format!("I = ({})\n", e.generators.join(", "))),
        }
        out.push_str(&format!("ring: {} over {}, variables {}\n", projective(e.r), e.field, e.vars.join(", ")));
        if let Some(d) = e.d {
            out.push_str(&format!("degree d = {d}, sigma = {}\n", self.sigma));
        } else {
            out.push_str(&format!("sigma = {}\n", self.sigma));
        }
        for (i, c) in e.components.iter().enumerate() {
            out.push_str(&format!("component C{} = {c}\n", i + 1));
        }
        if let Some(t1) = self.t1 {
            out.push_str(&format!("t1 = {t1}\n"));
        }
        out.push_str(&format!("dim Sing = {}\n", self.singular_dimension));
        out.push_str(&format!("J^sat = J: {}\n\n", if self.saturated { "yes" } else { "no" }));
        out.push_str(&self.rows.to_text());
        out.push('\n');
        let v = &self.verdicts;
        let dv = &v.duality;
        out.push_str(&format!("duality about sigma = {}: {}", dv.sigma, dv.label()));
        if !dv.symmetric {
            let degs: Vec<String> = dv.failing_degrees.iter().map(u32::to_string).collect();
            out.push_str(&format!(", failing degrees {}", degs.join(", ")));
        }
        out.push_str(&format!("; estimated centre {}\n", dv.estimated_center));
        if let Some(c) = &v.chern {
            out.push_str(&format!("chern (k = {}): c1 = {}, c2 = {}, -chi = {}\n", c.k, c.c1, c.c2, c.minus_chi));
        }
        if let Some(s) = v.stable {
            out.push_str(&format!("stability: {}\n", if s { "stable" } else { "not stable" }));
        }
        if let Some(f) = &v.freeness {
            out.push_str(&format!("freeness: {}", f.status));
            if let Some((a, b)) = f.exponents {
                out.push_str(&format!(", exponents ({a}, {b})"));
            }
            out.push_str(&format!(" [{}]\n", f.certificate));
        }
        if let Some(h) = &v.hodge {
            let mut line = |name: &str, c: &HodgeCheckResult| {
                out.push_str(&format!(
                    "hodge {name} (j = {}): h0m = {} vs {} = {}: {}\n",
                    c.j,
                    c.lhs,
                    c.breakdown_text(),
                    c.rhs,
                    if c.matched { "matched" } else { "mismatch (identity or hypotheses fail)" }
                ))
            };
            if let Some(c) = &h.middle {
                line("middle", c);
            }
            for c in h.curve_pair.iter().flatten() {
                line("curve", c);
            }
            if let Some(c) = &h.surface {
                line("surface", c);
            }
        }
        if let Some(dfm) = &self.deformations {
            out.push_str(&format!("{} (h0m_{}): {}\n", dfm.label, dfm.degree, dfm.count));
        }
        out
    }
}

fn projective(r: usize) -> String {
    format!("P^{r}")
}
