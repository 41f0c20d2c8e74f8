use std::fmt::Write;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;
use slice_sieve::exactalg::unit_equiv;
use slice_sieve::homology::{alexander_polynomial, branched_cover_h1_mod2, PretzelSpec, SpecError};
use slice_sieve::knotpres::{reduced_presentation, validate_params, wirtinger_presentation, Sign};
use slice_sieve::obstruct::{
    generate_table, norm_obstruction_verdict, parse_golden, verify_table, GoldenRow, Mode, ObstructError,
    ObstructionReport, TableCheck, GOLDEN_TABLES,
};
use slice_sieve::polymat::DetStrategy;
use slice_sieve::repcover::identity_suite;
use thiserror::Error;

use crate::args::{parse_batch_entry, AnalyzeArgs, Format, KnotArgs, SelftestArgs, SpecArgs, TablesArgs};
use crate::render;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
    /// A check ran to completion and failed; `body` is its full report.
    #[error("{reason}")]
    Failed { body: String, reason: String },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Internal(_) | CliError::Failed { .. } => 2,
        }
    }
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ObstructError> for CliError {
    fn from(e: ObstructError) -> Self {
        match e {
            ObstructError::Spec(s) => s.into(),
            other => CliError::Internal(other.to_string()),
        }
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

pub fn build_spec(n: i64, m: i64, p: Option<u64>, sign: Sign) -> Result<PretzelSpec, CliError> {
    Ok(match p {
        Some(p) => PretzelSpec::new(n, m, p, sign)?,
        None => PretzelSpec::with_default_p(n, m, sign)?,
    })
}

fn spec_from(args: &SpecArgs) -> Result<PretzelSpec, CliError> {
    build_spec(args.knot.n, args.knot.m, args.p, args.knot.sign)
}

pub fn analyze(args: &AnalyzeArgs, format: Format, strategy: &DetStrategy) -> Result<String, CliError> {
    let specs: Vec<PretzelSpec> = if args.spec.is_empty() {
        let (n, m) = (args.n.expect("required by clap"), args.m.expect("required by clap"));
        vec![build_spec(n, m, args.p, args.sign)?]
    } else {
        args.spec
            .iter()
            .map(|s| {
                let (n, m, p, sign) = parse_batch_entry(s).map_err(CliError::Usage)?;
                build_spec(n, m, p, sign)
            })
            .collect::<Result<_, _>>()?
    };
    // Ordered collect keeps output in input order.
    let reports: Vec<ObstructionReport> = specs
        .par_iter()
        .map(|s| norm_obstruction_verdict(s, args.mode, strategy))
        .collect::<Result<_, _>>()?;
    Ok(match (format, reports.as_slice()) {
        (Format::Json, [one]) if args.spec.is_empty() => to_json(one),
        (Format::Json, _) => to_json(&reports),
        (Format::Text, _) => reports.iter().map(render::report).collect::<Vec<_>>().join("\n"),
    })
}

fn load_golden(path: Option<&Path>) -> Result<(String, Vec<GoldenRow>), CliError> {
    let (name, text) = match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("golden fixture {}: {e}", p.display())))?;
            (p.display().to_string(), text)
        }
        None => ("built-in golden tables".to_owned(), GOLDEN_TABLES.to_owned()),
    };
    let rows = parse_golden(&text).map_err(|e| CliError::Usage(format!("golden fixture {name}: {e}")))?;
    Ok((name, rows))
}

fn check_summary(fixture: &str, p: u64, check: &TableCheck) -> String {
    let mut out = String::new();
    if check.passed() {
        let _ = writeln!(out, "p = {p}: {} rows match {fixture}", check.rows.len());
    } else {
        let _ = writeln!(out, "p = {p}: {} mismatches against {fixture}", check.mismatches.len());
        for m in &check.mismatches {
            let _ = writeln!(out, "  line {} (n = {}): {}", m.line, m.n, m.reason);
        }
    }
    out
}

pub fn tables(args: &TablesArgs, format: Format) -> Result<String, CliError> {
    let (fixture, golden) = load_golden(args.golden.as_deref())?;
    let primes = match args.p {
        Some(p) => vec![p],
        None => vec![11, 5],
    };
    let mut text = String::new();
    let mut json = Vec::new();
    let mut failed = Vec::new();
    for p in primes {
        if !slice_sieve::exactalg::is_prime(p) || p == 2 {
            return Err(CliError::Usage(format!("p must be an odd prime, got {p}")));
        }
        let (rows, check) = match verify_table(&golden, p) {
            Some(check) if args.from.is_none() && args.to.is_none() => (check.rows.clone(), Some(check)),
            recorded => {
                let lo = args.from.unwrap_or((p as i64 + 1) / 2);
                let hi = args.to.unwrap_or(2 * p as i64);
                (generate_table(p, lo, hi), recorded)
            }
        };
        let _ = writeln!(text, "p = {p}");
        if check.is_none() {
            let _ = writeln!(text, "  no golden data for p = {p}; rows are computed only");
        }
        let _ = writeln!(text, "  {:>3}  {:<14}  {:<32}  g_n", "n", "2n = bp+a", "f_b");
        for r in &rows {
            let _ = writeln!(text, "  {r}");
        }
        if args.verify {
            match &check {
                Some(c) => {
                    text.push_str(&check_summary(&fixture, p, c));
                    if !c.passed() {
                        failed.push(p);
                    }
                }
                None => return Err(CliError::Usage(format!("--verify: {fixture} has no rows for p = {p}"))),
            }
        }
        json.push(json!({
            "p": p,
            "rows": rows,
            "verified": args.verify.then(|| check.as_ref().map(TableCheck::passed)).flatten(),
        }));
    }
    let out = match format {
        Format::Text => text,
        Format::Json => to_json(&json),
    };
    if failed.is_empty() {
        Ok(out)
    } else {
        Err(CliError::Failed {
            body: out,
            reason: format!("table mismatch against {fixture} for p = {failed:?}"),
        })
    }
}

pub fn alexander(args: &KnotArgs, format: Format) -> Result<String, CliError> {
    validate_params(args.n, args.m).map_err(|e| CliError::Usage(e.to_string()))?;
    let internal = |e: &dyn std::fmt::Display| CliError::Internal(e.to_string());
    let seifert = alexander_polynomial(args.n, args.m, args.sign).map_err(|e| internal(&e))?;
    let fox = reduced_presentation(args.n, args.m, args.sign)
        .map_err(|e| internal(&e))?
        .alexander_via_fox()
        .map_err(|e| internal(&e))?;
    let agree = unit_equiv(&fox, seifert.poly());
    let out = match format {
        Format::Json => to_json(&json!({
            "n": args.n, "m": args.m, "sign": args.sign,
            "seifert": seifert, "fox_agrees": agree,
        })),
        Format::Text => format!(
            "Δ(t) = {seifert}\n  from the Seifert matrix; Fox calculus {}\n",
            if agree { "agrees" } else { "DISAGREES" }
        ),
    };
    if agree {
        Ok(out)
    } else {
        Err(CliError::Failed {
            body: out,
            reason: format!("Fox route gives {fox}, Seifert route gives {seifert}"),
        })
    }
}

pub fn homology(args: &SpecArgs, format: Format) -> Result<String, CliError> {
    let spec = spec_from(args)?;
    let h = branched_cover_h1_mod2(&spec).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(match format {
        Format::Json => to_json(&json!({ "spec": spec, "hypotheses": spec.hypotheses(), "homology": h })),
        Format::Text => render::cover(&spec, &h),
    })
}

struct Suite {
    name: &'static str,
    outcome: Result<String, String>,
    seconds: f64,
}

fn run_suite(name: &'static str, f: impl FnOnce() -> Result<String, String>) -> Suite {
    let start = Instant::now();
    let outcome = f();
    Suite {
        name,
        outcome,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn identities() -> Result<String, String> {
    let mut count = 0;
    for p in [3, 5, 7, 11] {
        let checks = identity_suite(p).map_err(|e| e.to_string())?;
        if let Some(bad) = checks.iter().find(|c| !c.holds) {
            return Err(format!("{} fails at p = {}, k = {}", bad.name, bad.p, bad.k));
        }
        count += checks.len();
    }
    Ok(format!("{count} identities at p = 3, 5, 7, 11"))
}

fn fox_identity() -> Result<String, String> {
    let mut count = 0;
    for sign in [Sign::Plus, Sign::Minus] {
        for (n, m) in [(2, 3), (3, 5), (4, 3), (6, 11)] {
            let reduced = reduced_presentation(n, m, sign).map_err(|e| e.to_string())?;
            let full = wirtinger_presentation(n, m, sign).map_err(|e| e.to_string())?;
            for (what, pres) in [("reduced", reduced), ("Wirtinger", full)] {
                if !pres.fundamental_identity_holds() {
                    return Err(format!("{what} presentation for ({n}, {m}, {sign})"));
                }
                count += pres.relators().len();
            }
        }
    }
    Ok(format!("{count} relators"))
}

fn end_to_end(specs: &[(i64, i64, u64)], strategy: &DetStrategy) -> Result<String, String> {
    let mut verdicts = Vec::new();
    for &(n, m, p) in specs {
        let spec = PretzelSpec::new(n, m, p, Sign::Plus).map_err(|e| e.to_string())?;
        let r = norm_obstruction_verdict(&spec, Mode::Both, strategy).map_err(|e| format!("{spec}: {e}"))?;
        verdicts.push(format!("({n},{m},{p}) {}", r.verdict));
    }
    Ok(verdicts.join(", "))
}

fn golden_check(golden: &[GoldenRow], fixture: &str) -> Result<String, String> {
    let mut total = 0;
    for p in [11, 5] {
        let check = verify_table(golden, p).ok_or_else(|| format!("{fixture} has no rows for p = {p}"))?;
        if !check.passed() {
            return Err(check_summary(fixture, p, &check).trim_end().to_owned());
        }
        total += check.rows.len();
    }
    Ok(format!("{total} rows match {fixture}"))
}

pub fn selftest(args: &SelftestArgs, format: Format, strategy: &DetStrategy) -> Result<String, CliError> {
    let golden = load_golden(args.golden.as_deref());
    let mut suites = vec![
        run_suite("matrix identities", identities),
        run_suite("fox fundamental identity", fox_identity),
        run_suite("end-to-end p = 3", || end_to_end(&[(2, 3, 3), (5, 3, 3)], strategy)),
    ];
    if !args.quick {
        suites.push(run_suite("end-to-end p = 11", || end_to_end(&[(6, 11, 11)], strategy)));
    }
    suites.push(run_suite("golden tables", || match &golden {
        Ok((fixture, rows)) => golden_check(rows, fixture),
        Err(e) => Err(e.to_string()),
    }));

    let failed: Vec<&str> = suites.iter().filter(|s| s.outcome.is_err()).map(|s| s.name).collect();
    let out = match format {
        Format::Json => to_json(
            &suites
                .iter()
                .map(|s| {
                    json!({
                        "suite": s.name,
                        "pass": s.outcome.is_ok(),
                        "detail": match &s.outcome { Ok(d) | Err(d) => d },
                        "seconds": s.seconds,
                    })
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut t = String::new();
            for s in &suites {
                let (status, detail) = match &s.outcome {
                    Ok(d) => ("PASS", d),
                    Err(d) => ("FAIL", d),
                };
                let _ = writeln!(t, "{status}  {:<26} {:>7.2}s  {detail}", s.name, s.seconds);
            }
            t
        }
    };
    if failed.is_empty() {
        Ok(out)
    } else {
        Err(CliError::Failed {
            body: out,
            reason: format!("selftest failed: {}", failed.join(", ")),
        })
    }
}
