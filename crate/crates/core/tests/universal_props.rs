use felcheck_core::exact::{binomial, int};
use felcheck_core::semigroup::{power_sums, shifted_power_sums};
use felcheck_core::universal::{
    self, f_umbral, sign_flipped, t_symbolic_table, umbral_expansion, BernoulliConvention,
    SignFlipReading,
};
use felcheck_core::{Rational, RationalSeries, SigmaPolynomial};
use num_traits::Zero;
use proptest::prelude::*;

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn vars(m_max: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(nonzero_rational(), 1..=m_max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn t_is_symmetric(x in vars(5), n in 0usize..=8, seed in any::<u64>()) {
        let mut y = x.clone();
        // deterministic shuffle from the seed
        let len = y.len();
        for i in (1..len).rev() {
            y.swap(i, (seed as usize).wrapping_mul(i + 7) % (i + 1));
        }
        prop_assert_eq!(universal::t_numeric(&x, n).unwrap(), universal::t_numeric(&y, n).unwrap());
    }

    #[test]
    fn t_is_homogeneous(x in vars(4), c in nonzero_rational(), n in 0usize..=8) {
        let scaled: Vec<Rational> = x.iter().map(|v| v * &c).collect();
        let lhs = universal::t_numeric(&scaled, n).unwrap();
        let rhs = num_traits::pow(c, n) * universal::t_numeric(&x, n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn egf_matches_inclusion_exclusion(x in vars(4), excess in 0u32..=6) {
        let n = x.len() as u32 + excess;
        prop_assert_eq!(
            universal::t_numeric(&x, excess as usize).unwrap(),
            universal::t_from_inclusion_exclusion(&x, n).unwrap()
        );
    }

    #[test]
    fn appending_one_multiplies_by_shifted_exponential(x in vars(4), order in 0usize..=8) {
        let mut with_one = x.clone();
        with_one.push(int(1));
        let lhs = universal::series_a(&with_one, order).unwrap();
        let rhs = &RationalSeries::exp_minus_one_over_t(order) * &universal::series_a(&x, order).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_route_agrees_with_symbolic(x in vars(4)) {
        let table = t_symbolic_table(7);
        let sigma = power_sums(&x, 7);
        let delta = shifted_power_sums(&sigma);
        let minus_one: Vec<Rational> = sigma.iter().map(|s| s - int(1)).collect();
        for (n, t) in table.iter().enumerate() {
            let via_b = universal::t_delta(&x, n).unwrap();
            prop_assert_eq!(&via_b, &t.evaluate(&delta[..n.max(1)]));
            let two_n = Rational::from_integer(num_bigint::BigInt::from(1u64 << n));
            prop_assert_eq!(&via_b, &(t.evaluate(&minus_one[..n.max(1)]) / two_n));
        }
    }

    #[test]
    fn zigzag_recursion_numeric(x in vars(4)) {
        let t: Vec<Rational> = (0..=7).map(|n| universal::t_numeric(&x, n).unwrap()).collect();
        prop_assume!(!t[1].is_zero());
        let a = universal::zigzag_table(7);
        for n in 1..=3usize {
            let lhs = &t[2 * n + 1] / num_traits::pow(t[1].clone(), 2 * n + 1);
            let mut rhs = Rational::zero();
            for j in 0..=n {
                let term = &a[2 * j + 1]
                    * Rational::from_integer(binomial(2 * n as u32 + 1, 2 * j as u32 + 1))
                    * &t[2 * n - 2 * j]
                    / num_traits::pow(t[1].clone(), 2 * n - 2 * j);
                if j % 2 == 0 { rhs += term } else { rhs -= term }
            }
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn sign_flip_alternating_reading(d in prop::collection::vec(1u64..=15, 1..=5)) {
        let table = t_symbolic_table(7);
        let dx: Vec<Rational> = d.iter().map(|&v| int(v as i64)).collect();
        let sigma = power_sums(&dx, 7);
        for n in 2..=7 {
            let flipped = sign_flipped(&sigma[..n], n, SignFlipReading::Alternating);
            prop_assert_eq!(f_umbral(&d, n), table[n].evaluate(&flipped));
        }
    }

    #[test]
    fn umbral_egf_matches_expansion(d in prop::collection::vec(1u64..=9, 1..=3), r in 0usize..=6) {
        prop_assert_eq!(f_umbral(&d, r), umbral_expansion(&d, r, BernoulliConvention::Minus));
    }
}

#[test]
fn symbolic_matches_numeric() {
    let table = t_symbolic_table(8);
    let samples: [&[i64]; 4] = [&[3, 5], &[4, 5, 6], &[1, -2, 7, 3], &[11]];
    for x in samples {
        let x: Vec<Rational> = x.iter().map(|&v| int(v)).collect();
        let sigma = power_sums(&x, 8);
        for (n, t) in table.iter().enumerate() {
            assert_eq!(t.evaluate(&sigma[..n.max(1)]), universal::t_numeric(&x, n).unwrap());
        }
    }
}

#[test]
fn symbolic_t_is_weight_homogeneous() {
    for (n, t) in t_symbolic_table(10).iter().enumerate() {
        assert_eq!(t.homogeneous_weight(), Some(n as u32), "T_{n}");
    }
}

#[test]
fn zigzag_recursion_symbolic() {
    // T_{2n+1} = Σ_j (−1)^j A_{2j+1} C(2n+1, 2j+1) T_{2n−2j} T_1^{2j+1}
    let t = t_symbolic_table(11);
    let a = universal::zigzag_table(11);
    for n in 1..=5usize {
        let mut rhs = SigmaPolynomial::zero();
        for j in 0..=n {
            let mut term = t[2 * n - 2 * j].clone();
            for _ in 0..2 * j + 1 {
                term = term * t[1].clone();
            }
            let c = &a[2 * j + 1] * Rational::from_integer(binomial(2 * n as u32 + 1, 2 * j as u32 + 1));
            let term = term * SigmaPolynomial::constant(c);
            rhs = if j % 2 == 0 { rhs + term } else { rhs - term };
        }
        assert_eq!(t[2 * n + 1], rhs, "n = {n}");
    }
}

#[test]
fn literal_sign_flip_reading_fails_from_n_5() {
    // umbral EGF in σ: log = σ_1 t/2 − Σ_{k even} λ_k σ_k t^k, i.e. T_n with every even σ_k negated
    let t = t_symbolic_table(9);
    let mut failing = Vec::new();
    for n in 2..=9 {
        let alt = t[n].flip_signs(|k| SignFlipReading::Alternating.flips(k, n));
        let lit = t[n].flip_signs(|k| SignFlipReading::Literal.flips(k, n));
        if alt != lit {
            failing.push(n);
        }
    }
    assert_eq!(failing, [5, 6, 7, 8, 9]);
}

#[test]
fn plus_convention_umbra_does_not_match() {
    let d = [3u64, 5];
    assert_ne!(umbral_expansion(&d, 1, BernoulliConvention::Plus), f_umbral(&d, 1));
    assert_eq!(umbral_expansion(&d, 1, BernoulliConvention::Minus), f_umbral(&d, 1));
}
