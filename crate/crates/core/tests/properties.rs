use adjoint_core::exactnum::{
    elementary_of, elementary_symmetric, Field, MultiPoly, Polynomial, Rational, RationalFunction, Ring, RingOps,
};
use adjoint_core::freealg::{ad_q_power, conjugate_series, free_mul, nested_bracket, FreeElement, Word, Y};
use adjoint_core::pfk::{
    dk_fraction_free, pfk_convolution, pfk_determinant, pfk_recursion, root_symmetrics, verify_ftxfx, verify_pfk_mult,
};
use adjoint_core::series::{quotient_dk, series_invert, series_mul, series_scale_var, wronski_dk, TruncatedSeries};
use adjoint_core::special::hall_littlewood_qk;
use proptest::collection::vec;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries<Rational>> {
    vec(rational(), order).prop_map(|tail| {
        let mut cs = vec![Rational::one()];
        cs.extend(tail);
        TruncatedSeries::new(cs)
    })
}

fn poly(max_len: usize) -> impl Strategy<Value = Polynomial<Rational>> {
    vec(rational(), 0..=max_len).prop_map(Polynomial::new)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Polynomial<Rational>> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_ring_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn rational_text_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn ratfunc_form_is_unique(p in poly(4), r in nonzero_poly(4), s in nonzero_poly(3)) {
        let plain = RationalFunction::new(p.clone(), r.clone()).unwrap();
        let scaled = RationalFunction::new(p.mul(&s), r.mul(&s)).unwrap();
        prop_assert_eq!(plain, scaled);
    }

    #[test]
    fn ratfunc_inverse(p in nonzero_poly(4), r in nonzero_poly(4)) {
        let x = RationalFunction::new(p, r).unwrap();
        prop_assert_eq!(x.mul(&x.inv().unwrap()), x.one_like());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(5), b in nonzero_poly(5), c in nonzero_poly(3)) {
        let (a, b) = (a.mul(&c), b.mul(&c));
        let g = a.gcd(&b).unwrap();
        prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(g.div_rem(&c).unwrap().1.is_zero());
    }

    #[test]
    fn inverse_is_two_sided(f in series(8)) {
        let inv = series_invert(&f).unwrap();
        prop_assert_eq!(series_mul(&f, &inv).unwrap(), TruncatedSeries::one(&Rational::one(), 8));
    }

    #[test]
    fn wronski_determinants_are_inverse_coefficients(f in series(7)) {
        let inv = series_invert(&f).unwrap();
        for k in 0..=7 {
            prop_assert_eq!(&wronski_dk(&f, k).unwrap(), &inv.coeffs()[k]);
            prop_assert_eq!(&dk_fraction_free(&f, k).unwrap(), &inv.coeffs()[k]);
        }
    }

    #[test]
    fn quotient_determinants(g in series(6), f in series(6)) {
        let q = series_mul(&g, &series_invert(&f).unwrap()).unwrap();
        for k in 0..=6 {
            prop_assert_eq!(&quotient_dk(&g, &f, k).unwrap(), &q.coeffs()[k]);
        }
    }

    #[test]
    fn scaling_composes(f in series(6), s in rational(), t in rational()) {
        let twice = series_scale_var(&series_scale_var(&f, &s).unwrap(), &t).unwrap();
        prop_assert_eq!(twice, series_scale_var(&f, &s.mul(&t)).unwrap());
    }

    #[test]
    fn pfk_paths_agree(f in series(10)) {
        for k in 0..=10 {
            let d = pfk_determinant(&f, k).unwrap().poly;
            prop_assert_eq!(&d, &pfk_recursion(&f, k).unwrap().poly);
            prop_assert_eq!(&d, &pfk_convolution(&f, k).unwrap().poly);
        }
    }

    #[test]
    fn pfk_root_and_leading_coefficient(f in series(8)) {
        for k in 1..=8 {
            let p = pfk_recursion(&f, k).unwrap().poly;
            prop_assert!(p.eval(&Rational::one()).is_zero());
            prop_assert_eq!(p.coeff_or_zero(k, &Rational::one()), f.coeffs()[k].clone());
        }
    }

    #[test]
    fn root_symmetrics_rebuild_pfk(f in vec(nonzero_rational(), 6)) {
        let mut cs = vec![Rational::one()];
        cs.extend(f);
        let f = TruncatedSeries::new(cs);
        for k in 0..=6 {
            let sym = root_symmetrics(&f, k).unwrap();
            prop_assert_eq!(sym.polynomial(&f.coeffs()[k]), pfk_recursion(&f, k).unwrap().poly);
        }
    }

    #[test]
    fn scaling_identities(f in series(8), s in rational(), t in rational(), k in 0usize..=8) {
        prop_assert!(verify_ftxfx(&f, &t, 8).unwrap().passed());
        prop_assert!(verify_pfk_mult(&f, &s, &t, k).unwrap().passed());
    }

    #[test]
    fn elementary_generating_identity(vals in vec(rational(), 0..=4)) {
        // prod (1 + r_i u) evaluated two ways
        let one = Rational::one();
        let e = elementary_of(&vals, &one);
        let direct = vals.iter().fold(Polynomial::constant(one.clone()), |acc, r| {
            acc.mul(&Polynomial::new(vec![one.clone(), r.clone()]))
        });
        prop_assert_eq!(Polynomial::new(e), direct);
    }
}

#[test]
fn elementary_symmetric_generating_identity() {
    for m in 1..=4 {
        let one = MultiPoly::constant(m, Rational::one());
        let xs: Vec<MultiPoly> = (1..=m).map(|i| MultiPoly::x(m, i)).collect();
        let expanded = elementary_of(&xs, &one);
        for (k, e) in expanded.iter().enumerate() {
            assert_eq!(e, &elementary_symmetric(m, k), "m={m} k={k}");
        }
        assert!(elementary_symmetric(m, m + 1).is_zero());
    }
}

fn free_element() -> impl Strategy<Value = FreeElement<Rational>> {
    vec((vec(0u8..2, 0..=4), rational()), 0..6).prop_map(|terms| {
        let like = Rational::one();
        let mut out = FreeElement::zero(&like, 5);
        for (w, c) in terms {
            out = out.add(&FreeElement::monomial(Word::new(w), c, 5)).unwrap();
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn free_mul_is_associative(a in free_element(), b in free_element(), c in free_element()) {
        let left = free_mul(&free_mul(&a, &b).unwrap(), &c).unwrap();
        let right = free_mul(&a, &free_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn nested_brackets_expand(qs in vec(rational(), 0..=6)) {
        let one = Rational::one();
        let e = elementary_of(&qs, &one);
        let k = qs.len();
        prop_assert_eq!(nested_bracket(&qs, &one, 7).unwrap(), ad_q_power(&e, k, 7).unwrap());
    }

    #[test]
    fn conjugation_slices_are_homogeneous(f in series(5)) {
        let conj = conjugate_series(&f, 5).unwrap();
        for (w, _) in conj.terms() {
            prop_assert_eq!(w.count(Y), 1);
            prop_assert!(w.len() <= 6);
        }
    }
}

#[test]
fn hall_littlewood_is_stable_in_m() {
    for m in 1..=3 {
        for k in 0..=4 {
            let big = hall_littlewood_qk(m + 1, k).unwrap().value;
            assert_eq!(
                big.drop_x(m + 1),
                hall_littlewood_qk(m, k).unwrap().value,
                "m={m} k={k}"
            );
        }
    }
}
