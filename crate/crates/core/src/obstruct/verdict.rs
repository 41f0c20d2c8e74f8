use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exactalg::{canonicalize, CanonicalPoly, IntPoly};
use crate::homology::{branched_cover_h1_mod2, HypothesisReport, PretzelSpec};
use crate::knotpres::Sign;
use crate::polymat::DetStrategy;

use super::closed::{f_poly, g_poly};
use super::norm::{eisenstein_at_2, lakatos_check, symmetric_descent};
use super::pipeline::{divide, extract_g, extract_h, h_from_blocks, twisted_reduced_polynomial};
use super::ObstructError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    ObstructedNotSlice,
    NormNoObstruction,
    HypothesesFail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Where `g` and the numerator come from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// `g` from its closed form, numerator assembled as `f · g · h²`.
    ClosedForm,
    /// `g` split off the determinant of `Φ(Z)`.
    Pipeline,
    /// Both, and they must agree.
    #[default]
    Both,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::ClosedForm => "closed-form",
            Mode::Pipeline => "pipeline",
            Mode::Both => "both",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "closed-form" | "closed" => Ok(Mode::ClosedForm),
            "pipeline" => Ok(Mode::Pipeline),
            "both" => Ok(Mode::Both),
            other => Err(format!("mode must be closed-form, pipeline or both, got {other:?}")),
        }
    }
}

/// Outcome of each link of the certificate; `None` when it was not reached.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub lakatos: Option<bool>,
    pub eisenstein: Option<bool>,
    pub f_divides_g: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub spec: PretzelSpec,
    pub hypotheses: HypothesisReport,
    pub a: i64,
    pub b: i64,
    /// The mode actually used for `g`; the minus family always splits the
    /// determinant.
    pub mode: Mode,
    pub f: Option<CanonicalPoly>,
    pub g: Option<CanonicalPoly>,
    pub h: Option<CanonicalPoly>,
    pub numerator: Option<CanonicalPoly>,
    /// `l` with `f(t) = t^b l(t + 1/t)`.
    pub descent: Option<IntPoly>,
    pub verdict: Verdict,
    pub chain: ChainReport,
    /// The stage that decided a non-obstructed verdict.
    pub stage: Option<String>,
    pub detail: Option<String>,
    pub cover_irreducible: Option<bool>,
}

impl ObstructionReport {
    fn new(spec: &PretzelSpec, mode: Mode) -> Self {
        let hypotheses = spec.hypotheses();
        Self {
            spec: *spec,
            hypotheses,
            a: hypotheses.a,
            b: hypotheses.b,
            mode,
            f: None,
            g: None,
            h: None,
            numerator: None,
            descent: None,
            verdict: Verdict::Inconclusive,
            chain: ChainReport::default(),
            stage: None,
            detail: None,
            cover_irreducible: None,
        }
    }

    fn settle(mut self, verdict: Verdict, stage: &str, detail: impl Into<String>) -> Self {
        self.verdict = verdict;
        self.stage = Some(stage.to_owned());
        self.detail = Some(detail.into());
        self
    }
}

/// Whether `f` divides `g` in `ℚ[t^{±1}]`. For equal degrees the top three
/// coefficients must already be proportional, which settles most cases
/// before any division.
pub fn f_divides_g(f: &CanonicalPoly, g: &CanonicalPoly) -> bool {
    if g.degree() < f.degree() {
        return false;
    }
    if g.degree() == f.degree() {
        let (fc, gc) = (f.coeffs(), g.coeffs());
        let proportional = fc
            .iter()
            .rev()
            .zip(gc.iter().rev())
            .take(3)
            .all(|(fi, gi)| fi * gc.last().unwrap() == gi * fc.last().unwrap());
        if !proportional {
            return false;
        }
    }
    divide(g.poly(), f.poly(), "g by f").is_ok()
}

enum Split {
    Done { numerator: CanonicalPoly, g: CanonicalPoly },
    Stuck { stage: &'static str, detail: String },
}

fn plus_split(
    spec: &PretzelSpec,
    mode: Mode,
    f: &CanonicalPoly,
    h: &CanonicalPoly,
    strategy: &DetStrategy,
) -> Result<Split, ObstructError> {
    let closed = || g_poly(spec.n, spec.p);
    if mode == Mode::ClosedForm {
        let g = closed()?;
        let num = &(f.poly() * g.poly()) * &(h.poly() * h.poly());
        let numerator = canonicalize(&num).map_err(|_| ObstructError::ZeroPolynomial("numerator"))?;
        return Ok(Split::Done { numerator, g });
    }
    let numerator = match twisted_reduced_polynomial(spec, strategy) {
        Ok(tap) => tap.numerator,
        Err(ObstructError::DegenerateDeterminant) => {
            return Ok(Split::Stuck {
                stage: "determinant",
                detail: "det Φ(Z) vanishes".into(),
            })
        }
        Err(e) => return Err(e),
    };
    let g = extract_g(&numerator, f, h)?;
    if mode == Mode::Both {
        let g_closed = closed()?;
        if g != g_closed {
            return Err(ObstructError::CrossCheck(format!(
                "g from the determinant is {g}, closed form gives {g_closed}"
            )));
        }
        let h_split = extract_h(&numerator, f, &g_closed)?;
        if &h_split != h {
            return Err(ObstructError::CrossCheck(format!(
                "square root of the cofactor is {h_split}, det(C_k) is {h}"
            )));
        }
    }
    Ok(Split::Done { numerator, g })
}

/// The minus family has no closed form for `g`: divide the numerator by `f`
/// once, check `f` does not divide the quotient again, then strip `h²`.
fn minus_split(
    spec: &PretzelSpec,
    f: &CanonicalPoly,
    h: &CanonicalPoly,
    strategy: &DetStrategy,
) -> Result<Split, ObstructError> {
    let numerator = match twisted_reduced_polynomial(spec, strategy) {
        Ok(tap) => tap.numerator,
        Err(ObstructError::DegenerateDeterminant) => {
            return Ok(Split::Stuck {
                stage: "determinant",
                detail: "det Φ(Z) vanishes".into(),
            })
        }
        Err(e) => return Err(e),
    };
    let Ok(q) = divide(numerator.poly(), f.poly(), "numerator by f") else {
        return Ok(Split::Stuck {
            stage: "f-split",
            detail: format!("{f} does not divide {numerator}"),
        });
    };
    if divide(&q, f.poly(), "quotient by f").is_ok() {
        return Ok(Split::Stuck {
            stage: "f-multiplicity",
            detail: format!("{f} divides the numerator more than once"),
        });
    }
    let Ok(g) = divide(&q, &(h.poly() * h.poly()), "quotient by h²") else {
        return Ok(Split::Stuck {
            stage: "square-split",
            detail: format!("det(C_k)² = ({h})² does not divide the cofactor of f"),
        });
    };
    let g = canonicalize(&g).map_err(|_| ObstructError::ZeroPolynomial("g"))?;
    Ok(Split::Done { numerator, g })
}

/// Runs the hypotheses, the factorization and the certificate. Errors are
/// reserved for internal inconsistencies; every mathematical outcome is a
/// verdict.
pub fn norm_obstruction_verdict(
    spec: &PretzelSpec,
    mode: Mode,
    strategy: &DetStrategy,
) -> Result<ObstructionReport, ObstructError> {
    let effective = if spec.sign == Sign::Minus { Mode::Pipeline } else { mode };
    let mut report = ObstructionReport::new(spec, effective);
    let hyp = report.hypotheses;
    let b = hyp.b;

    let applicable =
        hyp.m_odd && hyp.p_divides_m && hyp.two_primitive_mod_p && hyp.p_coprime_to_bands && hyp.n_large_enough;
    if !applicable {
        report.f = f_poly(b, spec.sign).ok();
        if spec.sign == Sign::Plus {
            report.g = g_poly(spec.n, spec.p).ok();
        }
        let failures = hyp.failures().join(", ");
        return Ok(report.settle(Verdict::HypothesesFail, "hypotheses", failures));
    }

    let cover = branched_cover_h1_mod2(spec)?;
    report.cover_irreducible = Some(cover.irreducible);
    if !cover.iso_to_vp {
        return Err(ObstructError::CrossCheck(format!(
            "hypotheses hold but H₁ of the cover is {:?}",
            cover.structure.invariant_factors
        )));
    }

    let f = f_poly(b, spec.sign)?;
    let h = h_from_blocks(spec.p, hyp.k)?;
    report.f = Some(f.clone());
    report.h = Some(h.clone());
    let split = match spec.sign {
        Sign::Plus => plus_split(spec, mode, &f, &h, strategy)?,
        Sign::Minus => minus_split(spec, &f, &h, strategy)?,
    };
    let g = match split {
        Split::Done { numerator, g } => {
            report.numerator = Some(numerator);
            report.g = Some(g.clone());
            g
        }
        Split::Stuck { stage, detail } => return Ok(report.settle(Verdict::Inconclusive, stage, detail)),
    };

    let lakatos = lakatos_check(&f)?;
    let descent = symmetric_descent(&f)?;
    let eisenstein = eisenstein_at_2(&descent);
    let divides = f_divides_g(&f, &g);
    report.descent = Some(descent);
    report.chain = ChainReport {
        lakatos: Some(lakatos),
        eisenstein: Some(eisenstein),
        f_divides_g: Some(divides),
    };

    Ok(if f == g {
        report.settle(Verdict::NormNoObstruction, "f_divides_g", "f ≐ g, so f·g is a norm")
    } else if !lakatos {
        report.settle(
            Verdict::Inconclusive,
            "lakatos",
            format!("{f} fails the coefficient bound"),
        )
    } else if !eisenstein {
        report.settle(
            Verdict::Inconclusive,
            "eisenstein",
            format!("descent of {f} is not Eisenstein at 2"),
        )
    } else if divides {
        report.settle(Verdict::Inconclusive, "f_divides_g", format!("{f} divides {g}"))
    } else if !hyp.all_pass() {
        report.settle(Verdict::Inconclusive, "hypotheses", hyp.failures().join(", "))
    } else {
        report.verdict = Verdict::ObstructedNotSlice;
        report
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(c: &[i64]) -> CanonicalPoly {
        CanonicalPoly::from_i64s(c).unwrap()
    }

    #[test]
    fn divisibility_precheck() {
        assert!(!f_divides_g(&canon(&[2, 3, 2]), &canon(&[2, 27, 2])));
        assert!(f_divides_g(&canon(&[2, 3, 2]), &canon(&[2, 3, 2])));
        assert!(f_divides_g(&canon(&[1, 1]), &canon(&[1, 2, 1])));
        assert!(!f_divides_g(&canon(&[1, 2, 1]), &canon(&[1, 1])));
    }

    #[test]
    fn mode_names_round_trip() {
        for m in [Mode::ClosedForm, Mode::Pipeline, Mode::Both] {
            assert_eq!(m.name().parse::<Mode>().unwrap(), m);
            assert_eq!(serde_json::to_string(&m).unwrap(), format!("\"{}\"", m.name()));
        }
    }

    #[test]
    fn closed_form_verdicts() {
        let run = |n, m, p| {
            let spec = PretzelSpec::new(n, m, p, Sign::Plus).unwrap();
            norm_obstruction_verdict(&spec, Mode::ClosedForm, &DetStrategy::default())
                .unwrap()
                .verdict
        };
        assert_eq!(run(6, 11, 11), Verdict::ObstructedNotSlice);
        assert_eq!(run(3, 5, 5), Verdict::NormNoObstruction);
        assert_eq!(run(3, 7, 7), Verdict::HypothesesFail);
    }
}
