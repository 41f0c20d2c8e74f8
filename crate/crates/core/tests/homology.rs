use slice_sieve::exactalg::{canonicalize, is_prime, unit_equiv, F2Poly, IntPoly};
use slice_sieve::homology::*;
use slice_sieve::knotpres::{reduced_presentation, Sign};

fn expected_alexander(m: i64) -> IntPoly {
    let coeffs: Vec<i64> = (0..m).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
    let s = IntPoly::from_i64s(0, &coeffs);
    &s * &s
}

#[test]
fn seifert_alexander_both_families() {
    for sign in [Sign::Plus, Sign::Minus] {
        for (n, m) in [(2, 3), (3, 5), (5, 3), (6, 11), (4, 7), (2, 9)] {
            let d = alexander_polynomial(n, m, sign).unwrap();
            assert_eq!(d, canonicalize(&expected_alexander(m)).unwrap(), "({n},{m},{sign})");
            assert_eq!(d.poly().eval(&1.into()).map(|v| &v * &v), Some(1.into()));
            let form = seifert_matrix(n, m, sign).intersection_form();
            let det = form.det_bareiss().unwrap();
            assert!(det.is_one() || (-&det).is_one(), "({n},{m},{sign}): {det}");
        }
    }
}

#[test]
fn seifert_and_fox_agree() {
    for sign in [Sign::Plus, Sign::Minus] {
        for (n, m) in [(2, 3), (3, 5), (4, 3)] {
            let fox = reduced_presentation(n, m, sign).unwrap().alexander_via_fox().unwrap();
            let seifert = alexander_polynomial(n, m, sign).unwrap();
            assert!(unit_equiv(&fox, seifert.poly()), "({n},{m},{sign})");
        }
    }
}

#[test]
fn seifert_block_shapes() {
    assert_eq!(block_sizes(2, 3, Sign::Plus), [3, 2, 4, 2, 1]);
    assert_eq!(seifert_matrix(2, 3, Sign::Plus).size(), 12);
    assert_eq!(block_sizes(2, 3, Sign::Minus), [3, 2, 2, 2, 1]);
}

/// Every `(n, m, p, sign)` with small parameters and `p | m`.
fn grid() -> Vec<PretzelSpec> {
    let mut out = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for n in 1..=8 {
            for m in [3, 5, 7, 9, 11, 13, 15] {
                for p in (3..=m as u64).filter(|&p| is_prime(p) && (m as u64).is_multiple_of(p)) {
                    out.push(PretzelSpec::new(n, m, p, sign).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn routes_agree_and_hypotheses_give_vp() {
    let mut hits = 0;
    for spec in grid() {
        let h = branched_cover_h1_mod2(&spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
        if spec.hypotheses().irreducibility_conditions() {
            hits += 1;
            assert!(h.iso_to_vp && h.irreducible, "{spec}: {:?}", h.structure);
            assert_eq!(h.structure.f2_dimension, Some(spec.p as usize - 1));
        }
        if h.iso_to_vp {
            assert_eq!(h.structure.f2_dimension, Some(spec.p as usize - 1));
        }
    }
    assert!(hits > 20);
}

#[test]
fn p_dividing_a_band_breaks_cyclicity() {
    // p | 2n + 1 for the plus family.
    let h = branched_cover_h1_mod2(&PretzelSpec::new(1, 3, 3, Sign::Plus).unwrap()).unwrap();
    assert!(!h.iso_to_vp, "{:?}", h.structure);
}

#[test]
fn seven_fails_primitivity() {
    let spec = PretzelSpec::new(3, 7, 7, Sign::Plus).unwrap();
    assert!(!spec.hypotheses().two_primitive_mod_p);
    let h = branched_cover_h1_mod2(&spec).unwrap();
    assert!(!h.irreducible);
    assert!(!h.structure.is_simple());
    // Σ_{i<7} t^i splits into two cubics over 𝔽₂.
    assert_eq!(F2Poly::all_ones(7).factor().len(), 2);
}

#[test]
fn table_spec_has_ten_dimensional_cover() {
    let h = branched_cover_h1_mod2(&PretzelSpec::new(6, 11, 11, Sign::Plus).unwrap()).unwrap();
    assert!(h.iso_to_vp);
    assert_eq!(h.structure.f2_dimension, Some(10));
}
