use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use slice_sieve::exactalg::*;
use slice_sieve::polymat::{DetStrategy, IntMatrix};

fn poly(max_len: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    (-4i64..4, prop::collection::vec(-bound..=bound, 0..max_len)).prop_map(|(shift, c)| IntPoly::from_i64s(shift, &c))
}

fn nonzero_poly(max_len: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    poly(max_len, bound).prop_filter("nonzero", |p| !p.is_zero())
}

fn poly_matrix(n: usize, max_len: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(poly(max_len, 5), n * n).prop_map(move |cells| {
        let mut it = cells.into_iter();
        IntMatrix::from_fn(n, n, |_, _| it.next().unwrap())
    })
}

/// Value of a Laurent polynomial at a rational point, from the terms alone.
fn eval_at(f: &IntPoly, x: &BigRational) -> BigRational {
    f.terms().fold(BigRational::from_integer(0.into()), |acc, (e, c)| {
        let xe = if e >= 0 {
            num_traits::pow(x.clone(), e as usize)
        } else {
            num_traits::pow(x.recip(), (-e) as usize)
        };
        acc + xe * BigRational::from_integer(c.clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_ignores_units(f in nonzero_poly(8, 30), num in -9i64..=9, den in 1i64..9, k in -5i64..5) {
        prop_assume!(num != 0);
        let lambda = BigRational::new(num.into(), den.into());
        let scaled = f.to_rational().shift(k).scale(&lambda);
        prop_assert_eq!(canonicalize_rational(&scaled).unwrap(), canonicalize(&f).unwrap());
    }

    #[test]
    fn bar_is_a_ring_involution(f in poly(8, 30), g in poly(8, 30)) {
        prop_assert_eq!(f.bar().bar(), f.clone());
        prop_assert_eq!((&f * &g).bar(), &f.bar() * &g.bar());
        prop_assert_eq!((&f + &g).bar(), &f.bar() + &g.bar());
    }

    #[test]
    fn norms_are_symmetric(f in nonzero_poly(8, 30)) {
        prop_assert!(is_symmetric(&(&f * &f.bar())).unwrap());
    }

    #[test]
    fn additive_identity(f in poly(8, 30)) {
        prop_assert_eq!(&f + &IntPoly::zero(), f);
    }

    #[test]
    fn exact_division_round_trip(f in nonzero_poly(6, 20), g in nonzero_poly(6, 20)) {
        prop_assert_eq!((&f * &g).div_exact(&f).unwrap(), g);
    }

    #[test]
    fn sqrt_round_trip(s in nonzero_poly(11, 40)) {
        let root = sqrt_exact(&(&s * &s)).unwrap();
        prop_assert!(unit_equiv(&root, &s));
    }

    #[test]
    fn odd_factor_is_not_a_square(q in nonzero_poly(6, 20)) {
        let f = &IntPoly::from_i64s(0, &[1, 1]) * &(&q * &q);
        prop_assert!(sqrt_exact(&f).is_err());
    }

    #[test]
    fn multiplication_agrees_with_evaluation(f in poly(8, 30), g in poly(8, 30), x in 2i64..7) {
        let x = BigRational::from_integer(x.into());
        prop_assert_eq!(eval_at(&(&f * &g), &x), eval_at(&f, &x) * eval_at(&g, &x));
    }

    #[test]
    fn eval_interp_matches_cofactor(
        m in (1usize..=6).prop_flat_map(|n| poly_matrix(n, 5))
    ) {
        let fast = m.det(&DetStrategy::EvalInterp).unwrap();
        let slow = m.det_cofactor().unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn det_is_multiplicative(
        (a, b) in (1usize..=4).prop_flat_map(|n| (poly_matrix(n, 3), poly_matrix(n, 3)))
    ) {
        let dab = (&a * &b).det(&DetStrategy::EvalInterp).unwrap();
        let prod = &a.det_cofactor().unwrap() * &b.det_cofactor().unwrap();
        prop_assert_eq!(dab, prod);
    }

    #[test]
    fn identity_is_neutral(m in (1usize..=4).prop_flat_map(|n| poly_matrix(n, 3))) {
        let i = IntMatrix::identity(m.rows());
        prop_assert_eq!(&i * &m, m.clone());
        prop_assert_eq!(&m * &i, m);
    }
}

#[test]
fn zero_row_gives_zero() {
    let m = IntMatrix::from_i64_rows(&[&[1, 2, 3], &[0, 0, 0], &[4, 5, 7]]).unwrap();
    for s in [DetStrategy::Cofactor, DetStrategy::Bareiss, DetStrategy::EvalInterp] {
        assert!(m.det(&s).unwrap().is_zero(), "{}", s.name());
    }
}

/// Berlekamp: a squarefree `f` over 𝔽₂ is irreducible iff the fixed space
/// of Frobenius on `𝔽₂[t]/f` is one-dimensional.
fn berlekamp_irreducible(f: &F2Poly) -> bool {
    let d = f.degree().unwrap();
    // Column j of Q − I is t^{2j} mod f minus t^j.
    let mut rows: Vec<Vec<bool>> = vec![vec![false; d]; d];
    for j in 0..d {
        let col = F2Poly::monomial(2 * j).rem(f);
        for (i, row) in rows.iter_mut().enumerate() {
            row[j] = col.bit(i) ^ (i == j);
        }
    }
    let mut rank = 0;
    for c in 0..d {
        let Some(r) = (rank..d).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, r);
        for r2 in 0..d {
            if r2 != rank && rows[r2][c] {
                let pivot = rows[rank].clone();
                rows[r2].iter_mut().zip(pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    d - rank == 1
}

#[test]
fn cyclotomic_irreducibility_matches_oracles() {
    for p in (3u64..50).filter(|&p| is_prime(p)) {
        let fast = gf2_is_irreducible_cyclotomic(p).unwrap();
        let sigma = F2Poly::all_ones(p as usize);
        assert_eq!(fast, berlekamp_irreducible(&sigma), "p={p}");
        if p < 30 {
            assert_eq!(fast, cyclotomic_irreducible_by_trial(p), "p={p}");
        }
    }
    assert!(gf2_is_irreducible_cyclotomic(11).unwrap());
    assert!(!gf2_is_irreducible_cyclotomic(7).unwrap());
    assert!(gf2_is_irreducible_cyclotomic(3).unwrap());
    assert!(gf2_is_irreducible_cyclotomic(9).is_err());
}

#[test]
fn worked_examples() {
    let f = IntPoly::from_i64s(0, &[1, -1, 1]);
    assert_eq!(&f * &f, IntPoly::from_i64s(0, &[1, -2, 3, -2, 1]));
    assert_eq!(
        sqrt_exact(&(&f * &f)).map(|s| canonicalize(&s).unwrap()),
        Ok(canonicalize(&f).unwrap())
    );
    assert_eq!(
        canonicalize(&IntPoly::from_i64s(-1, &[-2, -3, -2])).unwrap(),
        CanonicalPoly::from_i64s(&[2, 3, 2]).unwrap()
    );
    assert_eq!(
        canonicalize(&IntPoly::from_i64s(0, &[-2, -27, -2])).unwrap(),
        CanonicalPoly::from_i64s(&[2, 27, 2]).unwrap()
    );
    let unit = IntPoly::monomial(BigInt::from(4), 1);
    assert!(canonicalize(&unit).unwrap().poly().is_one());
    assert!(is_symmetric(&IntPoly::from_i64s(0, &[2, 3, 2])).unwrap());
    assert!(!is_symmetric(&IntPoly::from_i64s(0, &[2, 1, 1])).unwrap());
    let g = IntPoly::from_i64s(0, &[2, 27, 2]);
    assert_eq!(
        g.div_exact(&IntPoly::from_i64s(0, &[2, 3, 2])),
        Err(DivError::NotDivisible)
    );
    assert_eq!(
        IntPoly::from_i64s(0, &[-1, 0, 1]).div_exact(&IntPoly::from_i64s(0, &[-1, 1])),
        Ok(IntPoly::from_i64s(0, &[1, 1]))
    );
    assert_eq!(gf2_gcd(&F2Poly::all_ones(5), &F2Poly::all_ones(4)), F2Poly::one());
    assert_eq!(
        gf2_gcd(&F2Poly::all_ones(3), &F2Poly::from_exponents([0, 3])),
        F2Poly::all_ones(3)
    );
}
