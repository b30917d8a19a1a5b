//! The `key: value` input format.
//!
//! ```text
//! # comment
//! name: redqua1
//! vars: X0, X1, X2          (required)
//! field: Q                  (or Fp=31991)
//! f: X0*(X0^3+X1^3+X2^3)    (hypersurface mode)
//! component: X0             (repeatable, optional)
//! generator: X0^2           (repeatable, general mode instead of f)
//! degree-max: 8             (optional)
//! #! expect h0m: 0,1,3,4,3,1,0,0,0
//! ```
//!
//! Expectation lines (`#! expect key: value`) are comments to the analysis
//! and golden data to the corpus runner. Keys: `h0m`, `dimR`, `hfSat` (comma
//! lists starting at `j = 0`), `symmetric`, `saturated`, `stable`
//! (`true`/`false`), `t1` (integer or `infinite`), `freeness` (`free`,
//! `not_free`, `inconclusive`), `exponents` (`a,b`), `hodge` (`matched`,
//! `mismatch`).

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::jacobian::{HypersurfaceInput, Tjurina};
use crate::polyring::{Field, Polynomial, Ring};
use crate::sheafdiag::FreenessStatus;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expectations {
    pub h0m: Option<Vec<u64>>,
    pub dim_r: Option<Vec<u64>>,
    pub hf_sat: Option<Vec<u64>>,
    pub symmetric: Option<bool>,
    pub saturated: Option<bool>,
    pub stable: Option<bool>,
    pub t1: Option<Tjurina>,
    pub freeness: Option<FreenessStatus>,
    pub exponents: Option<(u64, u64)>,
    pub hodge_matched: Option<bool>,
}

impl Expectations {
    pub fn is_empty(&self) -> bool {
        self == &Expectations::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputFile {
    pub name: Option<String>,
    pub vars: Vec<String>,
    pub field: Field,
    pub f: Option<String>,
    pub components: Vec<String>,
    pub generators: Vec<String>,
    pub degree_max: Option<u32>,
    pub expect: Expectations,
}

/// `Q` or `Fp=<prime>`.
pub fn parse_field(text: &str) -> Result<Field> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("qq") {
        return Ok(Field::Rational);
    }
    let p = t
        .strip_prefix("Fp=")
        .or_else(|| t.strip_prefix("fp="))
        .and_then(|p| p.trim().parse::<u64>().ok())
        .ok_or_else(|| Error::Input { line: 0, msg: format!("unknown field '{t}', expected Q or Fp=<prime>") })?;
    Ok(Field::prime(p)?)
}

fn list<T: std::str::FromStr>(v: &str, line: usize) -> Result<Vec<T>> {
    v.split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Input { line, msg: format!("bad list entry '{}'", x.trim()) }))
        .collect()
}

fn boolean(v: &str, line: usize) -> Result<bool> {
    match v {
        "true" | "yes" => Ok(true),
        "false" | "no" => Ok(false),
        _ => Err(Error::Input { line, msg: format!("expected true or false, got '{v}'") }),
    }
}

fn expectation(e: &mut Expectations, key: &str, v: &str, line: usize) -> Result<()> {
    let bad = |msg: String| Error::Input { line, msg };
    match key {
        "h0m" => e.h0m = Some(list(v, line)?),
        "dimR" => e.dim_r = Some(list(v, line)?),
        "hfSat" => e.hf_sat = Some(list(v, line)?),
        "symmetric" => e.symmetric = Some(boolean(v, line)?),
        "saturated" => e.saturated = Some(boolean(v, line)?),
        "stable" => e.stable = Some(boolean(v, line)?),
        "t1" => {
            e.t1 = Some(match v {
                "infinite" => Tjurina::Infinite,
                n => Tjurina::Finite(n.parse().map_err(|_| bad(format!("bad t1 '{n}'")))?),
            })
        }
        "freeness" => {
            e.freeness = Some(match v {
                "free" => FreenessStatus::Free,
                "not_free" => FreenessStatus::NotFree,
                "inconclusive" => FreenessStatus::Inconclusive,
                s => return Err(bad(format!("unknown freeness status '{s}'"))),
            })
        }
        "exponents" => match list::<u64>(v, line)?[..] {
            [a, b] => e.exponents = Some((a, b)),
            _ => return Err(bad("exponents need two entries".into())),
        },
        "hodge" => {
            e.hodge_matched = Some(match v {
                "matched" => true,
                "mismatch" => false,
                s => return Err(bad(format!("unknown hodge expectation '{s}'"))),
            })
        }
        k => return Err(bad(format!("unknown expectation '{k}'"))),
    }
    Ok(())
}

impl InputFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = InputFile {
            name: None,
            vars: Vec::new(),
            field: Field::Rational,
            f: None,
            components: Vec::new(),
            generators: Vec::new(),
            degree_max: None,
            expect: Expectations::default(),
        };
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if let Some(rest) = trimmed.strip_prefix("#!") {
                let rest = rest.trim();
                let body = rest
                    .strip_prefix("expect")
                    .ok_or_else(|| Error::Input { line, msg: "directive must be '#! expect key: value'".into() })?;
                let (k, v) = body
                    .split_once(':')
                    .ok_or_else(|| Error::Input { line, msg: "missing ':' in expectation".into() })?;
                expectation(&mut out.expect, k.trim(), v.trim(), line)?;
                continue;
            }
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (k, v) = trimmed
                .split_once(':')
                .ok_or_else(|| Error::Input { line, msg: format!("expected 'key: value', got '{trimmed}'") })?;
            let v = v.trim();
            match k.trim() {
                "name" => out.name = Some(v.to_string()),
                "vars" => out.vars = v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
                "field" => out.field = parse_field(v).map_err(|e| Error::Input { line, msg: e.to_string() })?,
                "f" => out.f = Some(v.to_string()),
                "component" => out.components.push(v.to_string()),
                "generator" => out.generators.push(v.to_string()),
                "degree-max" => {
                    out.degree_max =
                        Some(v.parse().map_err(|_| Error::Input { line, msg: format!("bad degree '{v}'") })?)
                }
                other => return Err(Error::Input { line, msg: format!("unknown key '{other}'") }),
            }
        }
        if out.vars.is_empty() {
            return Err(Error::Input { line: 0, msg: "missing 'vars'".into() });
        }
        if out.f.is_some() == !out.generators.is_empty() {
            return Err(Error::Input { line: 0, msg: "give either 'f' or 'generator' lines".into() });
        }
        Ok(out)
    }

    pub fn is_general(&self) -> bool {
        self.f.is_none()
    }

    pub fn ring(&self, field: Option<Field>) -> Ring {
        Ring::new(self.vars.iter().cloned(), field.unwrap_or(self.field))
    }

    fn parse_all(ring: &Ring, texts: &[String]) -> Result<Vec<Polynomial>> {
        texts.iter().map(|t| Ok(ring.parse(t)?)).collect()
    }

    pub fn hypersurface(&self, field: Option<Field>) -> Result<HypersurfaceInput> {
        let ring = self.ring(field);
        let text = self.f.as_ref().ok_or(Error::Input { line: 0, msg: "no 'f' given".into() })?;
        let h = HypersurfaceInput::new(ring.parse(text)?)?;
        if self.components.is_empty() {
            return Ok(h);
        }
        h.with_components(Self::parse_all(&ring, &self.components)?)
    }

    /// The ideal of a general-mode file and its generator count.
    pub fn general_ideal(&self, field: Option<Field>) -> Result<(Ideal, usize)> {
        let ring = self.ring(field);
        let gens = Self::parse_all(&ring, &self.generators)?;
        let n = gens.len();
        Ok((Ideal::new(ring, gens), n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "# line and cubic\nname: redqua1\nvars: X0, X1, X2\nfield: Q\nf: X0*(X0^3+X1^3+X2^3)\ncomponent: X0\ncomponent: X0^3+X1^3+X2^3\n#! expect h0m: 0,1,3\n#! expect t1: 3\n#! expect freeness: not_free\n";

    #[test]
    fn parses_sample() {
        let inp = InputFile::parse(SAMPLE).unwrap();
        assert_eq!(inp.name.as_deref(), Some("redqua1"));
        assert_eq!(inp.vars, vec!["X0", "X1", "X2"]);
        assert_eq!(inp.components.len(), 2);
        assert_eq!(inp.expect.h0m, Some(vec![0, 1, 3]));
        assert_eq!(inp.expect.t1, Some(Tjurina::Finite(3)));
        let h = inp.hypersurface(None).unwrap();
        assert_eq!(h.degree(), 4);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = InputFile::parse("vars: X\nf X^2\n").unwrap_err();
        assert!(matches!(err, Error::Input { line: 2, .. }));
        assert!(InputFile::parse("f: X^2\n").is_err());
    }

    #[test]
    fn fields() {
        assert_eq!(parse_field("Q").unwrap(), Field::Rational);
        assert_eq!(parse_field("Fp=31991").unwrap(), Field::prime(31991).unwrap());
        assert!(parse_field("Fp=12").is_err());
        assert!(parse_field("R").is_err());
    }
}
