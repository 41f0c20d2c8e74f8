use slice_sieve::exactalg::{canonicalize, is_prime, is_symmetric, CanonicalPoly, F2Poly, IntPoly};
use slice_sieve::homology::{alexander_polynomial, PretzelSpec};
use slice_sieve::knotpres::Sign;
use slice_sieve::obstruct::*;
use slice_sieve::polymat::{DetStrategy, IntMatrix};
use slice_sieve::repcover::{Blocks, CharacterData, CompanionPair};

fn canon(c: &[i64]) -> CanonicalPoly {
    CanonicalPoly::from_i64s(c).unwrap()
}

fn spec(n: i64, m: i64, p: u64, sign: Sign) -> PretzelSpec {
    PretzelSpec::new(n, m, p, sign).unwrap()
}

#[test]
fn golden_tables_reproduce() {
    let golden = parse_golden(GOLDEN_TABLES).unwrap();
    for (p, rows) in [(11, 8), (5, 5)] {
        let check = verify_table(&golden, p).unwrap();
        assert!(check.passed(), "p = {p}: {:?}", check.mismatches);
        assert_eq!(check.rows.len(), rows);
    }
    assert!(verify_table(&golden, 13).is_none());
    let row = table_row(9, 5).unwrap();
    assert_eq!(row.g, canon(&[6, -10, 14, -19, 14, -10, 6]));
}

#[test]
fn matrix_route_matches_closed_form() {
    let mut checked = 0;
    for p in [3u64, 5, 11, 13] {
        for n in 1..=20 {
            let Ok(g) = g_poly(n, p) else { continue };
            assert_eq!(g_matrix_route(n, p).unwrap(), g, "n = {n}, p = {p}");
            checked += 1;
        }
    }
    assert!(checked > 40);
}

/// Numerator, `f`, `g` from the closed forms and `h` from the determinant.
fn factor(n: i64, m: i64, p: u64) -> (CanonicalPoly, CanonicalPoly) {
    let s = spec(n, m, p, Sign::Plus);
    let tap = twisted_reduced_polynomial(&s, &DetStrategy::default()).unwrap();
    let f = f_poly(s.decomposition().1, Sign::Plus).unwrap();
    let g = g_poly(n, p).unwrap();
    let h = extract_h(&tap.numerator, &f, &g).unwrap();
    assert!(is_symmetric(h.poly()).unwrap());
    assert_eq!(h, h_from_blocks(p, s.k()).unwrap(), "{s}");
    (tap.numerator, h)
}

#[test]
fn determinant_splits_as_f_g_h_squared() {
    for (n, m, p) in [(2, 3, 3), (5, 3, 3), (4, 5, 5), (6, 11, 11)] {
        let (num, h) = factor(n, m, p);
        assert_eq!(
            num.degree(),
            2 * h.degree() + 4 * spec(n, m, p, Sign::Plus).decomposition().1 as usize
        );
    }
    assert_eq!(g_poly(2, 3).unwrap(), canon(&[2, -5, 2]));
}

#[test]
fn f_certificate_holds_for_both_signs() {
    for sign in [Sign::Plus, Sign::Minus] {
        for b in 1..=12 {
            let f = f_poly(b, sign).unwrap();
            assert!(lakatos_check(&f).unwrap(), "b = {b} {sign}");
            let l = symmetric_descent(&f).unwrap();
            assert_eq!(l.max_exp(), Some(b));
            assert!(eisenstein_at_2(&l), "b = {b} {sign}: {l}");
        }
    }
}

#[test]
fn f_divides_g_only_at_three_five() {
    let mut seen = 0;
    for p in (3u64..=23).filter(|&p| is_prime(p)) {
        for n in 1..=30 {
            let s = spec(n, p as i64, p, Sign::Plus);
            let hyp = s.hypotheses();
            if !(hyp.irreducibility_conditions() && hyp.n_large_enough) {
                continue;
            }
            seen += 1;
            let f = f_poly(hyp.b, Sign::Plus).unwrap();
            let g = g_poly(n, p).unwrap();
            let exceptional = (n, p) == (3, 5);
            assert_eq!(f_divides_g(&f, &g), exceptional, "n = {n}, p = {p}");
            assert_eq!(f == g, exceptional);
        }
    }
    assert!(seen > 50);
}

fn verdict(n: i64, m: i64, p: u64, sign: Sign, mode: Mode) -> ObstructionReport {
    norm_obstruction_verdict(&spec(n, m, p, sign), mode, &DetStrategy::default()).unwrap()
}

#[test]
fn headline_verdicts() {
    let r = verdict(6, 11, 11, Sign::Plus, Mode::Both);
    assert_eq!(r.verdict, Verdict::ObstructedNotSlice);
    assert_eq!(r.f, Some(canon(&[2, 3, 2])));
    assert_eq!(r.g, Some(canon(&[2, 27, 2])));
    assert_eq!(r.cover_irreducible, Some(true));
    assert_eq!(
        r.chain,
        ChainReport {
            lakatos: Some(true),
            eisenstein: Some(true),
            f_divides_g: Some(false)
        }
    );

    let r = verdict(2, 3, 3, Sign::Plus, Mode::Both);
    assert_eq!(r.verdict, Verdict::ObstructedNotSlice);
    assert_eq!(r.g, Some(canon(&[2, -5, 2])));

    let r = verdict(3, 5, 5, Sign::Plus, Mode::Both);
    assert_eq!(r.verdict, Verdict::NormNoObstruction);
    assert_eq!(r.chain.f_divides_g, Some(true));

    let r = verdict(3, 7, 7, Sign::Plus, Mode::Both);
    assert_eq!(r.verdict, Verdict::HypothesesFail);
    assert!(r.detail.unwrap().contains("two_primitive_mod_p"));
    assert!(r.numerator.is_none());
}

#[test]
fn modes_agree() {
    for (n, m, p) in [(2, 3, 3), (4, 5, 5), (5, 3, 3)] {
        let reports: Vec<_> = [Mode::ClosedForm, Mode::Pipeline, Mode::Both]
            .into_iter()
            .map(|mode| verdict(n, m, p, Sign::Plus, mode))
            .collect();
        for r in &reports[1..] {
            assert_eq!(
                (r.verdict, &r.g, &r.numerator, &r.h),
                (reports[0].verdict, &reports[0].g, &reports[0].numerator, &reports[0].h)
            );
        }
    }
}

#[test]
fn small_b_is_a_hypothesis_failure() {
    // 2n = 4 < p + 1 = 6, so b = 0.
    let r = verdict(2, 5, 5, Sign::Plus, Mode::Both);
    assert_eq!(r.verdict, Verdict::HypothesesFail);
    assert!(r.f.is_none());
}

#[test]
fn minus_family_split() {
    let r = verdict(4, 3, 3, Sign::Minus, Mode::Both);
    assert_eq!(r.mode, Mode::Pipeline);
    assert_eq!(r.f, Some(canon(&[2, 2, 1, 2, 2])));
    assert_eq!(r.g, Some(canon(&[2, -6, 9, -6, 2])));
    assert_eq!(r.verdict, Verdict::ObstructedNotSlice);

    let r = verdict(4, 5, 5, Sign::Minus, Mode::ClosedForm);
    assert_eq!(r.f, Some(canon(&[2, 1, 2])));
    assert_eq!(r.g, Some(canon(&[2, -7, 2])));
    assert_eq!(r.verdict, Verdict::ObstructedNotSlice);
}

/// `det Δ(x)` for the companion block `x`, the resultant of `Δ(s)` and `s^p − t`.
fn alexander_at_x(delta: &CanonicalPoly, p: u64) -> IntPoly {
    let x = Blocks::new(&CompanionPair::new(p).unwrap()).x().clone();
    let (_, c) = delta.poly().to_dense();
    let acc = c
        .iter()
        .enumerate()
        .fold(IntMatrix::zeros(p as usize, p as usize), |acc, (i, ci)| {
            &acc + &x.pow(i as u32).scale(&IntPoly::constant(ci.clone()))
        });
    acc.det_bareiss().unwrap()
}

#[test]
fn trivial_character_gives_untwisted_data() {
    for (n, m, p, sign) in [(2, 3, 3, Sign::Plus), (4, 5, 5, Sign::Plus), (4, 3, 3, Sign::Minus)] {
        let s = spec(n, m, p, sign);
        let chars = CharacterData::standard(p as usize).with_seed(F2Poly::zero());
        let tap = twisted_reduced_polynomial_with(&s, &chars, &DetStrategy::default()).unwrap();
        let delta = alexander_polynomial(n, m, sign).unwrap();
        assert_eq!(tap.numerator, canonicalize(&alexander_at_x(&delta, p)).unwrap(), "{s}");
    }
}

#[test]
fn report_round_trips_through_json() {
    for r in [
        verdict(6, 11, 11, Sign::Plus, Mode::ClosedForm),
        verdict(3, 7, 7, Sign::Plus, Mode::Both),
    ] {
        let text = serde_json::to_string(&r).unwrap();
        let back: ObstructionReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["verdict"], r.verdict.to_string());
        for key in ["spec", "hypotheses", "a", "b", "f", "g", "h", "numerator", "chain"] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }
}

#[test]
fn verdicts_are_deterministic() {
    let once = || serde_json::to_string(&verdict(4, 5, 5, Sign::Plus, Mode::Both)).unwrap();
    assert_eq!(once(), once());
}
