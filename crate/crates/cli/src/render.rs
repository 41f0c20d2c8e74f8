//! Plain-text rendering of reports.

use std::fmt::Write;

use slice_sieve::exactalg::CanonicalPoly;
use slice_sieve::homology::{CoverHomology, HypothesisReport, PretzelSpec};
use slice_sieve::obstruct::ObstructionReport;

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn opt_poly(p: &Option<CanonicalPoly>) -> String {
    p.as_ref().map_or_else(|| "-".to_owned(), ToString::to_string)
}

fn opt_bool<'a>(b: Option<bool>, yes: &'a str, no: &'a str) -> &'a str {
    match b {
        Some(true) => yes,
        Some(false) => no,
        None => "not reached",
    }
}

pub fn hypotheses(out: &mut String, h: &HypothesisReport) {
    let flags = [
        ("m odd", h.m_odd),
        ("p | m", h.p_divides_m),
        ("2 primitive mod p", h.two_primitive_mod_p),
        ("p coprime to bands", h.p_coprime_to_bands),
        ("2n ≥ p + 1", h.n_large_enough),
        ("(n, p) ≠ (3, 5)", h.not_3_5),
    ];
    for (name, ok) in flags {
        let _ = writeln!(out, "  {name:<22}{}", mark(ok));
    }
}

pub fn report(r: &ObstructionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", r.spec);
    hypotheses(&mut out, &r.hypotheses);
    let _ = writeln!(
        out,
        "  2n = b·p + a          {} = {}·{} + {}",
        2 * r.spec.n,
        r.b,
        r.spec.p,
        r.a
    );
    let _ = writeln!(out, "  mode                  {}", r.mode);
    if let Some(c) = r.cover_irreducible {
        let _ = writeln!(out, "  cover H₁ irreducible  {}", if c { "yes" } else { "no" });
    }
    let _ = writeln!(out, "  f                     {}", opt_poly(&r.f));
    let _ = writeln!(out, "  g                     {}", opt_poly(&r.g));
    let _ = writeln!(out, "  h                     {}", opt_poly(&r.h));
    let _ = writeln!(out, "  det Φ(Z)              {}", opt_poly(&r.numerator));
    let _ = writeln!(
        out,
        "  lakatos               {}",
        opt_bool(r.chain.lakatos, "pass", "fail")
    );
    let _ = writeln!(
        out,
        "  eisenstein at 2       {}",
        opt_bool(r.chain.eisenstein, "pass", "fail")
    );
    let _ = writeln!(
        out,
        "  f divides g           {}",
        opt_bool(r.chain.f_divides_g, "yes", "no")
    );
    let _ = writeln!(out, "verdict: {}", r.verdict);
    if let (Some(stage), Some(detail)) = (&r.stage, &r.detail) {
        let _ = writeln!(out, "  decided at {stage}: {detail}");
    }
    out
}

pub fn cover(spec: &PretzelSpec, h: &CoverHomology) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{spec}");
    let s = &h.structure;
    let factors: Vec<String> = s.invariant_factors.iter().map(ToString::to_string).collect();
    let _ = writeln!(
        out,
        "  invariant factors     {}",
        if factors.is_empty() {
            "none".into()
        } else {
            factors.join(", ")
        }
    );
    let _ = writeln!(out, "  free rank             {}", s.free_rank);
    let _ = writeln!(out, "  cyclic                {}", s.cyclic);
    let dim = s.f2_dimension.map_or_else(|| "infinite".to_owned(), |d| d.to_string());
    let _ = writeln!(out, "  𝔽₂-dimension          {dim}");
    let _ = writeln!(out, "  ≅ V_p                 {}", h.iso_to_vp);
    let _ = writeln!(out, "  irreducible           {}", h.irreducible);
    hypotheses(&mut out, &spec.hypotheses());
    out
}
