use slice_sieve::exactalg::{unit_equiv, F2Poly, IntPoly};
use slice_sieve::knotpres::{reduced_presentation, wirtinger_presentation, Gen, GroupRingElem, GroupWord, Sign};
use slice_sieve::polymat::IntMatrix;
use slice_sieve::repcover::*;

const PRIMES: [u64; 4] = [3, 5, 7, 11];

fn blocks(p: u64) -> Blocks {
    Blocks::new(&CompanionPair::new(p).unwrap())
}

fn block(m: &IntMatrix, p: usize, r: usize, c: usize) -> IntMatrix {
    let rows: Vec<usize> = (r * p..(r + 1) * p).collect();
    let cols: Vec<usize> = (c * p..(c + 1) * p).collect();
    m.submatrix(&rows, &cols)
}

/// `Σ_{i=lo}^{hi} (sign·m)^i` with plain repeated multiplication.
fn signed_sum(m: &IntMatrix, sign: i64, lo: u32, hi: u32) -> IntMatrix {
    let base = if sign < 0 { -m } else { m.clone() };
    let mut acc = IntMatrix::zeros(m.rows(), m.cols());
    for i in lo..=hi {
        acc = &acc + &base.pow(i);
    }
    acc
}

#[test]
fn xa_to_the_p_is_t() {
    for p in PRIMES {
        let c = CompanionPair::new(p).unwrap();
        let xa = &c.x_matrix() * &c.a_matrix();
        let xap = xa.pow(p as u32);
        assert_eq!(xap, IntMatrix::scalar(p as usize, IntPoly::t()), "p={p}");
        assert_eq!(&c.a_matrix() * &xap, &xap * &c.a_matrix());
        assert_eq!(c.y_matrix(), &(&c.a_matrix() * &c.x_matrix()) * &c.a_matrix());
    }
}

#[test]
fn xy_power_is_scalar() {
    for p in PRIMES {
        let b = blocks(p);
        for j in 1..=2u32 {
            let lhs = b.xy().pow(j * p as u32);
            let t2j = IntPoly::t().pow(2 * j);
            assert_eq!(lhs, IntMatrix::scalar(p as usize, t2j), "p={p} j={j}");
        }
    }
}

#[test]
fn lemma_identities() {
    for p in PRIMES {
        let b = blocks(p);
        let one = IntMatrix::identity(p as usize);
        let k0 = (p as u32 - 1) / 2;
        for k in [k0, k0 + p as u32] {
            let xyk = b.xy().pow(k);
            assert_eq!(&xyk * b.x(), &b.y().clone() * &xyk, "p={p} k={k}: (xy)^k x");
            let one_plus = &one + &b.y_xy_k(k);
            assert_eq!(
                &b.e_k(k) * &(&one - &b.xy()),
                &one_plus * &(&one - b.y()),
                "p={p} k={k}: E_k"
            );
            assert_eq!(
                &b.c_k(k) * &(&one - &b.yx()),
                &one_plus * &(&one - b.x()),
                "p={p} k={k}: C_k"
            );
            assert_eq!(
                b.c_k(k).det_bareiss().unwrap(),
                b.e_k(k).det_bareiss().unwrap(),
                "p={p} k={k}"
            );
        }
        for n in [1, 3] {
            assert!(b.f_independent_of_k(n, k0, k0 + p as u32).unwrap(), "p={p} n={n}");
        }
    }
}

#[test]
fn one_minus_determinants() {
    for p in PRIMES {
        let b = blocks(p);
        let one = IntMatrix::identity(p as usize);
        assert!(!(&one - &b.xy()).det_bareiss().unwrap().is_zero());
        let dx = (&one - b.x()).det_bareiss().unwrap();
        assert_eq!(dx, (&one - b.y()).det_bareiss().unwrap());
        assert!(unit_equiv(&dx, &IntPoly::from_i64s(0, &[1, -1])), "p={p}: {dx}");
    }
}

#[test]
fn rho_pattern_on_boundary_arcs() {
    for (n, m, p) in [(3, 5, 5), (6, 11, 11), (2, 3, 3), (4, 5, 5)] {
        let chars = CharacterData::standard(p);
        let check = verify_rho_constraints(n, m, Sign::Plus, &chars).unwrap();
        assert!(check.passed(), "({n},{m},{p}): {check:?}");
    }
    let check = verify_rho_constraints(4, 3, Sign::Minus, &CharacterData::standard(3)).unwrap();
    assert!(check.passed(), "{check:?}");
}

#[test]
fn zero_seed_gives_trivial_solution() {
    let chars = CharacterData::standard(5).with_seed(F2Poly::zero());
    let check = verify_rho_constraints(3, 5, Sign::Plus, &chars).unwrap();
    assert!(check.solution.values.iter().all(F2Poly::is_zero));
}

#[test]
fn rho_needs_p_dividing_m() {
    let err = verify_rho_constraints(2, 5, Sign::Plus, &CharacterData::standard(3)).unwrap_err();
    assert_eq!(err, RepError::PDoesNotDivideM { p: 3, m: 5 });
}

#[test]
fn phi_kills_relators() {
    for (n, m, p, sign) in [(2, 3, 3, Sign::Plus), (4, 5, 5, Sign::Plus), (3, 3, 3, Sign::Minus)] {
        let chars = CharacterData::standard(p);
        let pres = reduced_presentation(n, m, sign).unwrap();
        RepImage::for_reduced(&chars).check_relators(&pres).unwrap();
        let w = wirtinger_presentation(n, m, sign).unwrap();
        let sol = solve_rho(&w, Gen(0), &chars);
        // Any solution of the arc system gives a homomorphism.
        if let Ok(sol) = sol {
            RepImage::from_values(&chars, &sol.values).check_relators(&w).unwrap();
        }
    }
}

#[test]
fn apply_is_linear_and_multiplicative() {
    let c = CompanionPair::new(5).unwrap();
    let rep = RepImage::new(5, vec![c.x().clone(), c.y().clone()]);
    let w = GroupWord::from_pairs(&[(0, 1), (1, 1), (0, -1)]);
    let e = &GroupRingElem::one() - &GroupRingElem::word(w);
    let got = rep.apply(&e).unwrap();
    let xinv = c.x().inverse().to_matrix();
    let want = &IntMatrix::identity(5) - &(&(&c.x_matrix() * &c.y_matrix()) * &xinv);
    assert_eq!(got, want);
    assert_eq!(&c.x_matrix() * &xinv, IntMatrix::identity(5));
}

#[test]
fn phi_of_meridian_minus_one() {
    let c = CompanionPair::new(3).unwrap();
    let rep = RepImage::new(3, vec![c.x().clone()]);
    let e = &GroupRingElem::word(GroupWord::gen(Gen(0))) - &GroupRingElem::one();
    let d = rep.apply(&e).unwrap().det_cofactor().unwrap();
    assert!(unit_equiv(&d, &IntPoly::from_i64s(0, &[1, -1])));
}

#[test]
fn unassigned_generator_is_an_error() {
    let rep = RepImage::new(3, vec![CompanionPair::new(3).unwrap().x().clone()]);
    let e = GroupRingElem::word(GroupWord::gen(Gen(4)));
    assert_eq!(rep.apply(&e).unwrap_err(), RepError::Unassigned(4));
}

#[test]
fn reduced_phi_block_pattern() {
    let (n, m, p) = (2i64, 3i64, 3usize);
    let z = build_phi_fox_matrix(n, m, Sign::Plus, &CharacterData::standard(p)).unwrap();
    assert_eq!(z.shape(), (21, 21));
    let b = blocks(p as u64);
    let (x, y) = (b.x().clone(), b.y().clone());
    let pu = p;
    // Row `a`, column `α`.
    let want = -&signed_sum(&x, -1, 1, 2 * n as u32 - 1);
    assert_eq!(block(&z, pu, 0, 3), want);
    // Row `γ`, column `c`: the conjugating sum, up to the sign of the relator.
    let k = ((m - 1) / 2) as u32;
    let s = b.xy().power_sum(0, k - 1);
    let want = &(&(&y - &IntMatrix::identity(pu)) * &s) * &x;
    let got = block(&z, pu, 4, 2);
    assert!(got == want || got == -&want, "{got:?}");
}

/// The reduced twisted Fox matrix written out directly from the closed-form
/// block entries in `x` and `y`, rows `a, e, b, c, γ, η, β`, columns
/// `a, b, c, α, η, β, γ`.
fn closed_form_phi(b: &Blocks, n: u32, k: u32) -> IntMatrix {
    let p = b.p();
    let (x, y) = (b.x().clone(), b.y().clone());
    let one = IntMatrix::identity(p);
    let z = IntMatrix::zeros(p, p);
    let xy = b.xy();
    let yx = b.yx();
    let sum_xy = |hi: i64| if hi < 0 { z.clone() } else { xy.power_sum(0, hi as u32) };
    let k = k as i64;
    let n2 = 2 * n;
    vec![
        vec![
            x.pow(n2),
            z.clone(),
            z.clone(),
            -&signed_sum(&x, -1, 0, n2),
            signed_sum(&x, -1, 0, n2 - 1),
            z.clone(),
            z.clone(),
        ],
        vec![
            z.clone(),
            z.clone(),
            z.clone(),
            signed_sum(&x, -1, 0, n2 - 1),
            -&signed_sum(&x, -1, 0, n2 - 2),
            z.clone(),
            z.clone(),
        ],
        vec![
            z.clone(),
            one.clone(),
            z.clone(),
            z.clone(),
            z.clone(),
            -&signed_sum(&y, -1, 0, n2 + 1),
            signed_sum(&y, -1, 1, n2 + 1),
        ],
        vec![
            z.clone(),
            z.clone(),
            one.clone(),
            z.clone(),
            z.clone(),
            -&signed_sum(&y, -1, 0, n2),
            signed_sum(&y, -1, 1, n2),
        ],
        vec![
            z.clone(),
            z.clone(),
            &(&(&y - &one) * &sum_xy(k - 1)) * &x,
            z.clone(),
            z.clone(),
            z.clone(),
            one.clone(),
        ],
        vec![
            z.clone(),
            z.clone(),
            &(&(&(&x - &one) * &sum_xy(k - 1)) * &x) - &(&xy.pow(k as u32) * &x),
            z.clone(),
            one.clone(),
            z.clone(),
            z.clone(),
        ],
        vec![
            &(&y * &sum_xy(k - 1)) - &sum_xy(k),
            &(&one - &x)
                * &(if k == 0 {
                    z.clone()
                } else {
                    yx.power_sum(0, k as u32 - 1)
                }),
            z.clone(),
            z.clone(),
            z.clone(),
            yx.pow(k as u32),
            z.clone(),
        ],
    ]
    .pipe(|grid| IntMatrix::block(&grid).unwrap())
}

trait Pipe: Sized {
    fn pipe<R>(self, f: impl FnOnce(Self) -> R) -> R {
        f(self)
    }
}
impl<T> Pipe for T {}

#[test]
fn phi_determinant_agrees_across_routes() {
    for (n, m, p) in [(2i64, 3i64, 3u64), (5, 3, 3), (4, 5, 5)] {
        let chars = CharacterData::standard(p as usize);
        let k = ((m - 1) / 2) as u32;
        let ours = build_phi_fox_matrix(n, m, Sign::Plus, &chars).unwrap();
        let d = ours.det(&Default::default()).unwrap();
        assert!(!d.is_zero());
        let b = blocks(p);
        let closed = closed_form_phi(&b, n as u32, k).det(&Default::default()).unwrap();
        assert!(unit_equiv(&d, &closed), "({n},{m},{p}) closed form: {d} vs {closed}");
        let hat = b.hat_matrix(n as u32, k).det(&Default::default()).unwrap();
        assert!(unit_equiv(&d, &hat), "({n},{m},{p}) hat: {d} vs {hat}");
        let (w, _) = build_wirtinger_phi_matrix(n, m, Sign::Plus, &chars).unwrap();
        let dw = w.det(&Default::default()).unwrap();
        assert!(unit_equiv(&d, &dw), "({n},{m},{p}) wirtinger: {d} vs {dw}");
    }
}

#[test]
fn hat_determinant_factors_through_schur_complement() {
    for (n, m, p) in [(2u32, 3u32, 3u64), (4, 5, 5)] {
        let b = blocks(p);
        let k = (m - 1) / 2;
        let hat = b.hat_matrix(n, k).det(&Default::default()).unwrap();
        let h = b.c_k(k).det_bareiss().unwrap();
        let rhs = &(&h * &h) * &b.det_a_plus_bf(n, k).unwrap();
        assert!(unit_equiv(&hat, &rhs), "({n},{m},{p})");
    }
}

#[test]
fn phi_21_oracle_agreement() {
    let z = build_phi_fox_matrix(2, 3, Sign::Plus, &CharacterData::standard(3)).unwrap();
    assert!(z.det_equiv_check().unwrap());
}

#[test]
fn minus_family_phi_is_nondegenerate() {
    let chars = CharacterData::standard(3);
    let ours = build_phi_fox_matrix(4, 3, Sign::Minus, &chars).unwrap();
    let (w, _) = build_wirtinger_phi_matrix(4, 3, Sign::Minus, &chars).unwrap();
    let d = ours.det(&Default::default()).unwrap();
    assert!(!d.is_zero());
    assert!(unit_equiv(&d, &w.det(&Default::default()).unwrap()));
}

#[test]
fn rho_space_grows_when_p_divides_the_band() {
    // p = 3 divides 2n(2n−1) = 12, so the arc system has extra freedom.
    let check = verify_rho_constraints(2, 3, Sign::Minus, &CharacterData::standard(3)).unwrap();
    assert!(check.solution.free_dimension > 2);
    assert!(!check.passed());
}

#[test]
fn identity_suite_passes() {
    for p in PRIMES {
        let checks = identity_suite(p).unwrap();
        assert_eq!(checks.len(), 1 + 2 * 4 + 3);
        assert!(checks.iter().all(|c| c.holds), "p={p}: {checks:?}");
    }
    assert!(identity_suite(9).is_err());
}
