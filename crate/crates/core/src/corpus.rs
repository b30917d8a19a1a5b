//! Golden corpus: input files with embedded expectations, run in parallel.

use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::Result;
use crate::input::{Expectations, InputFile};
use crate::jacobian::GradedTable;
use crate::polyring::Field;
use crate::report::{analyze, analyze_general, AnalysisOptions, AnalysisReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub text: String,
}

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        vec![$(CorpusEntry { name: $name.to_string(), text: include_str!(concat!("../corpus/", $name, ".txt")).to_string() }),*]
    };
}

/// The corpus shipped with the library.
pub fn bundled() -> Vec<CorpusEntry> {
    bundled![
        "redqua1", "cusqua", "redqua2", "redsurf", "ruledsur", "quarsur", "steiner", "simis", "quintic", "xyz",
        "fermat4", "regseq",
    ]
}

/// Every `*.txt` file of `dir`, sorted by name.
pub fn load_dir(dir: &Path) -> std::io::Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "txt") {
            let name = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            out.push(CorpusEntry { name, text: std::fs::read_to_string(&path)? });
        }
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct CorpusOutcome {
    pub name: String,
    pub mismatches: Vec<String>,
    pub error: Option<String>,
    pub elapsed_ms: u128,
    pub report: Option<AnalysisReport>,
}

impl CorpusOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.mismatches.is_empty()
    }
}

/// Parses and analyzes one input file, optionally over another field.
pub fn analyze_input(input: &InputFile, field: Option<Field>, degree_max: Option<u32>) -> Result<AnalysisReport> {
    let opts = AnalysisOptions { degree_max: degree_max.or(input.degree_max) };
    if input.is_general() {
        let (ideal, n) = input.general_ideal(field)?;
        analyze_general(&ideal, n, &opts)
    } else {
        analyze(&input.hypersurface(field)?, &opts)
    }
}

fn compare_column(
    out: &mut Vec<String>,
    name: &str,
    want: &Option<Vec<u64>>,
    table: &GradedTable,
    pick: fn(&GradedTable) -> Vec<u64>,
) {
    let Some(want) = want else { return };
    let got = pick(table);
    for (j, w) in want.iter().enumerate() {
        match got.get(j) {
            Some(g) if g == w => {}
            Some(g) => out.push(format!("degree {j}, column {name}: expected {w}, got {g}")),
            None => out.push(format!("degree {j}, column {name}: expected {w}, table ends at {}", table.j_max())),
        }
    }
}

fn check<T: PartialEq + std::fmt::Debug>(out: &mut Vec<String>, what: &str, want: &Option<T>, got: Option<T>) {
    if let Some(w) = want {
        if got.as_ref() != Some(w) {
            out.push(format!("{what}: expected {w:?}, got {got:?}"));
        }
    }
}

/// Differences between a report and the expectations, one line each.
pub fn mismatches(expect: &Expectations, rep: &AnalysisReport) -> Vec<String> {
    let mut out = Vec::new();
    compare_column(&mut out, "h0m", &expect.h0m, &rep.rows, GradedTable::h0m);
    compare_column(&mut out, "dimR", &expect.dim_r, &rep.rows, GradedTable::dim_r);
    compare_column(&mut out, "hfSat", &expect.hf_sat, &rep.rows, GradedTable::hf_sat);
    let v = &rep.verdicts;
    check(&mut out, "symmetric", &expect.symmetric, Some(v.duality.symmetric));
    check(&mut out, "saturated", &expect.saturated, Some(rep.saturated));
    check(&mut out, "stable", &expect.stable, v.stable);
    check(&mut out, "t1", &expect.t1, rep.t1);
    check(&mut out, "freeness", &expect.freeness, v.freeness.as_ref().map(|f| f.status));
    check(&mut out, "exponents", &expect.exponents, v.freeness.as_ref().and_then(|f| f.exponents));
    check(&mut out, "hodge", &expect.hodge_matched, v.hodge.as_ref().map(|h| h.all_matched()));
    out
}

pub fn run_entry(entry: &CorpusEntry, field: Option<Field>) -> CorpusOutcome {
    let start = Instant::now();
    let result = InputFile::parse(&entry.text).and_then(|inp| {
        // golden rows must all be computed
        let listed = [&inp.expect.h0m, &inp.expect.dim_r, &inp.expect.hf_sat]
            .iter()
            .filter_map(|c| c.as_ref().map(|v| v.len() as u32))
            .max();
        let rep = analyze_input(&inp, field, None)?;
        let rep = match listed {
            Some(n) if n > rep.rows.rows().len() as u32 => analyze_input(&inp, field, Some(n - 1))?,
            _ => rep,
        };
        Ok((inp, rep))
    });
    let elapsed_ms = start.elapsed().as_millis();
    match result {
        Ok((inp, rep)) => CorpusOutcome {
            name: entry.name.clone(),
            mismatches: mismatches(&inp.expect, &rep),
            error: None,
            elapsed_ms,
            report: Some(rep),
        },
        Err(e) => CorpusOutcome {
            name: entry.name.clone(),
            mismatches: Vec::new(),
            error: Some(e.to_string()),
            elapsed_ms,
            report: None,
        },
    }
}

/// Runs all entries, in parallel on at most `threads` workers when given.
pub fn run_all(entries: &[CorpusEntry], field: Option<Field>, threads: Option<usize>) -> Vec<CorpusOutcome> {
    let work = || entries.par_iter().map(|e| run_entry(e, field)).collect();
    match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map(|pool| pool.install(work))
            .unwrap_or_else(|_| entries.iter().map(|e| run_entry(e, field)).collect()),
        None => work(),
    }
}
