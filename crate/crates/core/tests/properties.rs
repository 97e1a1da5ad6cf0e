use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use qracah::dist::{cdf_q, pmf_limit, pmf_q, pmf_q_direct, Params};
use qracah::oracles::pmf_cg_oracle;
use qracah::qseries::{q_binomial, q_integer};
use qracah::sampler::{build_sampler, empirical_summary};
use qracah::{ExactRational, IntPoly, RationalFunction, Scalar};

fn poly(max_degree: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 0..=max_degree + 1)
        .prop_map(|c| IntPoly::from_coeffs(c.into_iter().map(BigInt::from).collect()))
}

fn nonzero_poly(max_degree: usize) -> impl Strategy<Value = IntPoly> {
    poly(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(10), nonzero_poly(10)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn positive_rational() -> impl Strategy<Value = ExactRational> {
    (1i64..=12, 1i64..=7).prop_map(|(n, d)| ExactRational::new(n.into(), d.into()))
}

// q = 1 is a removable singularity of the deformed formulas
fn generic_q() -> impl Strategy<Value = ExactRational> {
    positive_rational().prop_filter("q != 1", |q| !q.is_one())
}

fn params(nmax: u32) -> impl Strategy<Value = Params> {
    let all = Params::restricted_set(nmax);
    prop::sample::select(all)
}

fn relaxed(nmax: u32) -> impl Strategy<Value = Params> {
    prop::sample::select(Params::relaxed_set(nmax))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn add_then_subtract(f in ratfunc(), g in ratfunc()) {
        prop_assert_eq!((f.clone() + g.clone()) - g, f);
    }

    #[test]
    fn multiply_then_divide(f in ratfunc(), g in ratfunc()) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((f.clone() * g.clone()).checked_div(&g).unwrap(), f);
    }

    #[test]
    fn reduced_form_is_canonical(n in poly(6), d in nonzero_poly(6), k in nonzero_poly(3)) {
        let a = RationalFunction::new(n.clone(), d.clone()).unwrap();
        let b = RationalFunction::new(n * k.clone(), d * k).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.numerator().gcd(a.denominator()).is_one());
        prop_assert!(a.denominator().leading().unwrap().is_positive());
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in ratfunc(), g in ratfunc(), at in positive_rational()) {
        if let (Ok(fv), Ok(gv)) = (f.eval(&at), g.eval(&at)) {
            prop_assert_eq!((f.clone() * g.clone()).eval(&at).unwrap(), &fv * &gv);
            prop_assert_eq!((f + g).eval(&at).unwrap(), fv + gv);
        }
    }

    #[test]
    fn q_binomial_symmetry_and_pascal(n in 0i64..14, m in 0i64..14, q in positive_rational()) {
        prop_assert_eq!(q_binomial(n, m, &q), q_binomial(n, n - m, &q));
        if n > 0 && m > 0 {
            // [n m] = [n-1 m-1] + q^m [n-1 m]
            let rhs = q_binomial(n - 1, m - 1, &q) + q.powi(m).unwrap() * q_binomial(n - 1, m, &q);
            prop_assert_eq!(q_binomial(n, m, &q), rhs);
        }
        prop_assert_eq!(q_integer(n as u32, &ExactRational::one()), ExactRational::from_integer(n.into()));
    }

    #[test]
    fn pmf_sums_to_one_at_rational_q(p in params(9), q in generic_q()) {
        let total = (0..=p.m).fold(ExactRational::zero(), |a, x| a + pmf_q(&p, x, &q).unwrap());
        prop_assert!(total.is_one());
        prop_assert!(cdf_q(&p, p.m, &q).unwrap().is_one());
    }

    #[test]
    fn canonical_and_direct_forms_agree(p in params(9), q in generic_q()) {
        for x in 0..=p.m {
            prop_assert_eq!(pmf_q(&p, x, &q).unwrap(), pmf_q_direct(&p, x, &q).unwrap());
        }
    }

    #[test]
    fn mirror_symmetry(p in relaxed(9), q in generic_q()) {
        let mirror = p.mirrored();
        for x in 0..=p.x_max() {
            prop_assert_eq!(pmf_q(&p, x, &q).unwrap(), pmf_q(&mirror, x, &q).unwrap());
        }
    }

    #[test]
    fn vanishes_beyond_k(p in params(10), q in generic_q()) {
        for x in p.k + 1..=p.m {
            prop_assert!(pmf_q(&p, x, &q).unwrap().is_zero());
        }
    }

    #[test]
    fn cg_oracle_matches_beyond_acceptance_range(p in params(11)) {
        for x in 0..=p.m {
            prop_assert_eq!(pmf_cg_oracle(&p, x).unwrap(), pmf_limit(&p, x).unwrap());
        }
    }

    #[test]
    fn sampler_is_deterministic_and_in_support(p in params(8), seed in any::<u64>()) {
        let one = ExactRational::one();
        let a = build_sampler(&p, &one, seed).unwrap().draw(300);
        let b = build_sampler(&p, &one, seed).unwrap().draw(300);
        prop_assert_eq!(&a, &b);
        let s = build_sampler(&p, &one, seed).unwrap();
        let summary = empirical_summary(&a, &s.pmf).unwrap();
        prop_assert_eq!(summary.off_support, 0);
        prop_assert!(a.iter().all(|&x| x <= p.k.min(p.m)));
    }
}
