use felcheck_core::SemigroupSpec;
use num_integer::Integer;
use proptest::prelude::*;

/// Boolean representability table up to `limit`, the plain coin-problem DP.
fn representable(gens: &[u64], limit: u64) -> Vec<bool> {
    let mut ok = vec![false; limit as usize + 1];
    ok[0] = true;
    for n in 1..=limit as usize {
        ok[n] = gens.iter().any(|&d| d as usize <= n && ok[n - d as usize]);
    }
    ok
}

fn dp_gaps(gens: &[u64]) -> Vec<u64> {
    let lo = *gens.iter().min().unwrap();
    let hi = *gens.iter().max().unwrap();
    let limit = (lo - 1) * (hi.max(2) - 1) + hi;
    representable(gens, limit)
        .iter()
        .enumerate()
        .filter(|(_, &r)| !r)
        .map(|(n, _)| n as u64)
        .collect()
}

fn semigroup(m_max: usize, d_max: u64) -> impl Strategy<Value = SemigroupSpec> {
    prop::collection::vec(1u64..=d_max, 1..=m_max)
        .prop_filter("gcd 1", |v| v.iter().fold(0u64, |g, d| g.gcd(d)) == 1)
        .prop_map(|v| SemigroupSpec::new(&v.iter().map(|&d| d as i64).collect::<Vec<_>>()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn apery_gaps_match_dp(s in semigroup(5, 60)) {
        prop_assert_eq!(s.gaps().gaps().to_vec(), dp_gaps(s.generators()));
    }

    #[test]
    fn membership_is_consistent(s in semigroup(4, 30)) {
        let g = s.gaps();
        let hi = *s.generators().iter().max().unwrap() as i64;
        let limit = (g.frobenius() + hi).max(0) as u64;
        let table = representable(s.generators(), limit);
        for n in 0..=limit {
            prop_assert_eq!(g.contains(n), !table[n as usize], "n = {}", n);
        }
        prop_assert_eq!(g.genus(), g.gaps().len());
        prop_assert!(g.gaps().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn genus_is_zeroth_power_sum(s in semigroup(5, 40)) {
        let g = s.gaps();
        prop_assert_eq!(g.power_sum(0), g.genus().into());
    }

    #[test]
    fn delta_shift_relation(s in semigroup(4, 20)) {
        let st = s.stats(6);
        for k in 1..=6 {
            let two_k = felcheck_core::Rational::from_integer((1u64 << k).into());
            prop_assert_eq!(st.delta(k) * two_k + felcheck_core::exact::int(1), st.sigma(k).clone());
            prop_assert!(*st.sigma(k) >= felcheck_core::Rational::from_integer(s.m().into()));
        }
    }

    #[test]
    fn two_generator_frobenius_and_genus(a in 2u64..60, b in 2u64..60) {
        prop_assume!(a.gcd(&b) == 1);
        let g = SemigroupSpec::new(&[a as i64, b as i64]).unwrap().gaps();
        prop_assert_eq!(g.frobenius(), (a * b - a - b) as i64);
        prop_assert_eq!(g.genus() as u64, (a - 1) * (b - 1) / 2);
    }
}
