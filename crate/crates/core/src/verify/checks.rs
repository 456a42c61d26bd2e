use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{CheckRecord, CheckValue, IdentityId, VerificationReport};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, int};
use crate::hilbert::{self, HilbertData};
use crate::random::{self, nonzero_rational};
use crate::semigroup::{power_sums, SemigroupSpec};
use crate::universal::{self, SignFlipReading};
use crate::{IntPolynomial, Rational, RationalSeries};

fn scalar(r: Rational) -> CheckValue {
    CheckValue::Scalar(r)
}

fn egf_vector(s: &RationalSeries) -> Vec<Rational> {
    (0..=s.order()).map(|n| s.egf_coeff(n)).collect()
}

fn signed_pi(spec: &SemigroupSpec, odd_flips: bool) -> Rational {
    let pi = Rational::from_integer(spec.pi());
    if (spec.m() % 2 == 1) != odd_flips {
        -pi
    } else {
        pi
    }
}

/// `K_p` via `ℭ_{m+p}` against `Σ_r C(p,r) T_{p−r}(σ) G_r + 2^{p+1}/(p+1)·T_{p+1}(δ)`,
/// plus the coefficient-extraction form of the same statement.
pub fn verify_fel_main(spec: &SemigroupSpec, p_max: u32) -> Result<VerificationReport> {
    let gaps = spec.gaps();
    let h = HilbertData::new(spec, &gaps)?;
    let x = spec.as_variables();
    let m = spec.m();
    let pm = p_max as usize;
    let a = universal::series_a(&x, pm + 1)?;
    let b = universal::series_b(&x, pm + 1)?;
    let t_sigma: Vec<Rational> = (0..=pm + 1).map(|n| a.egf_coeff(n)).collect();
    let two_pow = |n: usize| Rational::from_integer(BigInt::one() << n);
    let t_delta: Vec<Rational> = (0..=pm + 1).map(|n| b.egf_coeff(n) / two_pow(n)).collect();
    let g: Vec<Rational> = (0..=p_max).map(|r| Rational::from_integer(gaps.power_sum(r))).collect();

    let order = m + pm;
    let one_minus_q = h.one_minus_numerator().subst_exp(order);
    let phi_exp = h.phi.subst_exp(order);
    let a_phi = &a.truncate(order) * &phi_exp;

    let mut report = VerificationReport::new(Some(spec.clone()));
    for p in 0..=pm {
        let gap_part = (0..=p).fold(Rational::zero(), |acc, r| {
            acc + Rational::from_integer(binomial(p as u32, r as u32)) * &t_sigma[p - r] * &g[r]
        });
        let delta_part = two_pow(p + 1) / int(p as i64 + 1) * &t_delta[p + 1];
        let rhs = &gap_part + &delta_part;
        let lhs = hilbert::k_invariant(spec, &h, p as u32);
        report.push(CheckRecord::compare(IdentityId::FelMain, p as i64, scalar(lhs), scalar(rhs)));

        // [t^{m+p}](1 − Q_S(e^t)) = (−1)^m π_m/p! · (p![t^{p+1}]B + p![t^p](A·Φ_S(e^t)))
        let p_fact = Rational::from_integer(factorial(p as u32));
        let bracket = &p_fact * b.coeff(p + 1) + &p_fact * a_phi.coeff(p);
        let rhs = signed_pi(spec, false) / &p_fact * bracket;
        let lhs = one_minus_q.coeff(m + p);
        report.push(CheckRecord::compare(IdentityId::EqFinal, p as i64, scalar(lhs), scalar(rhs)));
    }
    Ok(report)
}

/// `ℭ_0 = 1`, `ℭ_r = 0` for `1 ≤ r ≤ m−2`, `ℭ_{m−1} = (−1)^m (m−1)! π_m`;
/// a single skipped record for `m = 1`.
pub fn verify_thm_kp(spec: &SemigroupSpec) -> Result<VerificationReport> {
    let h = HilbertData::new(spec, &spec.gaps())?;
    let mut report = VerificationReport::new(Some(spec.clone()));
    match hilbert::low_syzygy_expectations(spec, &h) {
        None => report.push(CheckRecord::skipped(IdentityId::ThmKp, -1, "requires m >= 2")),
        Some(rows) => {
            for (r, got, want) in rows {
                report.push(CheckRecord::compare(IdentityId::ThmKp, r.into(), scalar(got), scalar(want)));
            }
        }
    }
    Ok(report)
}

/// For two generators: `Q_S = 1 − z^{d_1 d_2}` (parameter `-1`) and
/// `K_p = (d_1 d_2)^{p+1}/((p+1)(p+2))`. Empty for `m ≠ 2`.
pub fn verify_m2_closed_form(spec: &SemigroupSpec, p_max: u32) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Some(spec.clone()));
    if spec.m() != 2 {
        return Ok(report);
    }
    let h = HilbertData::new(spec, &spec.gaps())?;
    let prod = spec.generators()[0] * spec.generators()[1];
    let expected = hilbert::one_minus_z_pow(prod as usize);
    report.push(CheckRecord::compare(
        IdentityId::M2ClosedForm,
        -1,
        CheckValue::Polynomial(h.numerator.clone()),
        CheckValue::Polynomial(expected),
    ));
    for p in 0..=p_max {
        let num = num_traits::pow(BigInt::from(prod), p as usize + 1);
        let want = Rational::new(num, BigInt::from((p + 1) * (p + 2)));
        let got = hilbert::k_invariant(spec, &h, p);
        report.push(CheckRecord::compare(IdentityId::M2ClosedForm, p.into(), scalar(got), scalar(want)));
    }
    Ok(report)
}

/// The five truncated-series identities behind the proof, coefficient by
/// coefficient up to `order` (which must be at least `m`).
pub fn verify_series_lemmas(spec: &SemigroupSpec, order: usize) -> Result<VerificationReport> {
    let m = spec.m();
    if order < m {
        return Err(Error::InvalidParameter(format!("series order {order} is below m = {m}")));
    }
    let gaps = spec.gaps();
    let h = HilbertData::new(spec, &gaps)?;
    let x = spec.as_variables();
    let a = universal::series_a(&x, order)?;
    let b = universal::series_b(&x, order)?;
    let one_minus_q = h.one_minus_numerator();
    let param = order as i64;
    let mut report = VerificationReport::new(Some(spec.clone()));

    // ℭ_n = n!·[t^n](1 − Q_S(e^t))
    let c: Vec<Rational> = (0..=order as u32).map(|n| h.syzygy_sum(n)).collect();
    let rhs = egf_vector(&one_minus_q.subst_exp(order));
    report.push(CheckRecord::compare(IdentityId::LemmaSeriesC, param, CheckValue::Series(c), CheckValue::Series(rhs)));

    // Φ_S(e^t) = Σ G_n t^n/n!
    let phi_exp = h.phi.subst_exp(order);
    let g: Vec<Rational> = (0..=order as u32).map(|n| Rational::from_integer(gaps.power_sum(n))).collect();
    report.push(CheckRecord::compare(
        IdentityId::LemmaSeriesPhi,
        param,
        CheckValue::Series(g),
        CheckValue::Series(egf_vector(&phi_exp)),
    ));

    // P_S(e^t) = (−1)^m π_m t^m A(t)
    let lhs = h.prod.subst_exp(order);
    let rhs = a.shift(m).scale(&signed_pi(spec, false));
    report.push(CheckRecord::compare(
        IdentityId::LemmaSeriesP,
        param,
        CheckValue::Series(lhs.coeffs().to_vec()),
        CheckValue::Series(rhs.coeffs().to_vec()),
    ));

    // P_S(e^t)/(1 − e^t) = (−1)^{m+1} π_m t^{m−1} B(t)
    let quotient: IntPolynomial = h.prod.div_exact(&hilbert::one_minus_z_pow(1))?;
    let lhs = quotient.subst_exp(order);
    let rhs = b.shift(m - 1).scale(&signed_pi(spec, true));
    report.push(CheckRecord::compare(
        IdentityId::LemmaSeriesPdiv,
        param,
        CheckValue::Series(lhs.coeffs().to_vec()),
        CheckValue::Series(rhs.coeffs().to_vec()),
    ));

    // 1 − Q_S(e^t) = 1 + (−1)^m π_m (t^{m−1} B(t) + t^m A(t) Φ_S(e^t))
    let lhs = one_minus_q.subst_exp(order);
    let inner = &b.shift(m - 1) + &(&a * &phi_exp).shift(m);
    let rhs = &RationalSeries::one(order) + &inner.scale(&signed_pi(spec, false));
    report.push(CheckRecord::compare(
        IdentityId::LemmaOneMinusQ,
        param,
        CheckValue::Series(lhs.coeffs().to_vec()),
        CheckValue::Series(rhs.coeffs().to_vec()),
    ));
    Ok(report)
}

/// Every per-semigroup check: main identity, `ℭ` clauses, low-order `K`
/// forms, series lemmas and (for `m = 2`) the closed forms.
pub fn verify_semigroup(spec: &SemigroupSpec, p_max: u32, order: usize) -> Result<VerificationReport> {
    let mut report = verify_fel_main(spec, p_max)?;
    report.absorb(verify_thm_kp(spec)?);
    report.absorb(super::verify_low_order(spec)?);
    report.absorb(verify_series_lemmas(spec, order.max(spec.m()))?);
    report.absorb(verify_m2_closed_form(spec, p_max)?);
    report.sort();
    Ok(report)
}

/// Shape of the random sample points used by [`verify_companions`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompanionSampler {
    pub m_max: usize,
    pub num_max: i64,
    pub den_max: i64,
    pub d_max: u64,
}

impl Default for CompanionSampler {
    fn default() -> Self {
        CompanionSampler { m_max: 4, num_max: 9, den_max: 5, d_max: 12 }
    }
}

/// Randomized checks of the zig-zag recursion for `1 ≤ n ≤ n_max` and of
/// the sign-flip identity for `2 ≤ n ≤ 2·n_max + 1`, at `samples` points.
///
/// The sign-flip identity is gated on the alternating reading of its
/// argument list; the literal "σ_2 and σ_n only" reading is reported
/// alongside as non-gating records.
pub fn verify_companions(n_max: u32, samples: usize, seed: u64) -> Result<VerificationReport> {
    verify_companions_with(n_max, samples, seed, CompanionSampler::default())
}

pub fn verify_companions_with(
    n_max: u32,
    samples: usize,
    seed: u64,
    sampler: CompanionSampler,
) -> Result<VerificationReport> {
    if n_max < 1 {
        return Err(Error::InvalidParameter("the zig-zag recursion starts at n = 1".into()));
    }
    if samples < 1 {
        return Err(Error::InvalidParameter("need at least one sample".into()));
    }
    let mut rng = random::rng(seed);
    let top = 2 * n_max as usize + 1;
    let zig = universal::zigzag_table(top);
    let t_sym = universal::t_symbolic_table(top);
    let mut report = VerificationReport::new(None);
    report.seed = Some(seed);

    for s in 0..samples {
        // zig-zag recursion at a rational point with σ_1 ≠ 0
        let x = loop {
            let m = rand::Rng::gen_range(&mut rng, 1..=sampler.m_max);
            let x: Vec<Rational> =
                (0..m).map(|_| nonzero_rational(&mut rng, sampler.num_max, sampler.den_max)).collect();
            if !x.iter().fold(Rational::zero(), |a, v| a + v).is_zero() {
                break x;
            }
        };
        let a = universal::series_a(&x, top)?;
        let t: Vec<Rational> = (0..=top).map(|k| a.egf_coeff(k)).collect();
        let t1_pow = |e: usize| num_traits::pow(t[1].clone(), e);
        for n in 1..=n_max as usize {
            let lhs = &t[2 * n + 1] / t1_pow(2 * n + 1);
            let rhs = (0..=n).fold(Rational::zero(), |acc, j| {
                let term = &zig[2 * j + 1]
                    * Rational::from_integer(binomial(2 * n as u32 + 1, 2 * j as u32 + 1))
                    * &t[2 * n - 2 * j]
                    / t1_pow(2 * n - 2 * j);
                if j % 2 == 0 { acc + term } else { acc - term }
            });
            report.push(CheckRecord::compare(IdentityId::Fel2Zigzag, n as i64, scalar(lhs), scalar(rhs)).with_sample(s));
        }

        // sign-flip identity at a positive integer generator vector
        let m = rand::Rng::gen_range(&mut rng, 1..=sampler.m_max);
        let d: Vec<u64> = (0..m).map(|_| rand::Rng::gen_range(&mut rng, 1..=sampler.d_max)).collect();
        let dx: Vec<Rational> = d.iter().map(|&v| Rational::from_integer(v.into())).collect();
        let sigma = power_sums(&dx, top);
        for n in 2..=top {
            let f = universal::f_umbral(&d, n);
            let alt = t_sym[n].evaluate(&universal::sign_flipped(&sigma[..n], n, SignFlipReading::Alternating));
            report.push(
                CheckRecord::compare(IdentityId::Fel1SignFlip, n as i64, scalar(f.clone()), scalar(alt))
                    .with_sample(s)
                    .with_note("alternating"),
            );
            let lit = t_sym[n].evaluate(&universal::sign_flipped(&sigma[..n], n, SignFlipReading::Literal));
            report.push(
                CheckRecord::reported(IdentityId::Fel1SignFlip, n as i64, scalar(f), scalar(lit), "literal")
                    .with_sample(s),
            );
        }
    }
    report.sort();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use crate::verify::Status;

    fn spec(g: &[i64]) -> SemigroupSpec {
        SemigroupSpec::new(g).unwrap()
    }

    #[test]
    fn fel_main_on_3_5() {
        let r = verify_fel_main(&spec(&[3, 5]), 5).unwrap();
        assert!(r.checks.iter().all(CheckRecord::passed));
        let p0 = r.records(IdentityId::FelMain).next().unwrap();
        assert_eq!(p0.lhs, CheckValue::Scalar(rational(15, 2)));
        assert_eq!(p0.rhs, CheckValue::Scalar(rational(15, 2)));
    }

    #[test]
    fn fel_main_trivial() {
        let r = verify_fel_main(&spec(&[1]), 3).unwrap();
        for c in r.records(IdentityId::FelMain) {
            assert!(c.passed());
            assert_eq!(c.lhs, CheckValue::Scalar(int(0)));
        }
    }

    #[test]
    fn fel_main_on_5_6_8_9() {
        let s = spec(&[5, 6, 8, 9]);
        let r = verify_fel_main(&s, 4).unwrap();
        assert!(r.checks.iter().all(CheckRecord::passed));
        let h = HilbertData::new(&s, &s.gaps()).unwrap();
        for c in r.records(IdentityId::FelMain) {
            let p = c.parameter as u32;
            let den = 2160 * (p + 1) * (p + 2) * (p + 3) * (p + 4);
            let want = h.syzygy_sum(p + 4) / int(den as i64);
            assert_eq!(c.lhs, CheckValue::Scalar(want));
        }
    }

    #[test]
    fn thm_kp_records() {
        let r = verify_thm_kp(&spec(&[4, 5, 6])).unwrap();
        let rhs: Vec<_> = r.checks.iter().map(|c| c.rhs.clone()).collect();
        assert_eq!(rhs, [CheckValue::Scalar(int(1)), CheckValue::Scalar(int(0)), CheckValue::Scalar(int(-240))]);
        assert!(r.all_passed());
        let r = verify_thm_kp(&spec(&[3, 5])).unwrap();
        assert_eq!(r.checks[1].lhs, CheckValue::Scalar(int(15)));
        let r = verify_thm_kp(&spec(&[1])).unwrap();
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.checks[0].status, Status::Skipped);
    }

    #[test]
    fn series_lemmas_pass() {
        for (g, order) in [(&[3i64, 5][..], 8), (&[1], 4), (&[4, 5, 6], 9)] {
            let r = verify_series_lemmas(&spec(g), order).unwrap();
            assert_eq!(r.checks.len(), 5);
            assert!(r.checks.iter().all(CheckRecord::passed), "{g:?}");
        }
        assert!(verify_series_lemmas(&spec(&[4, 5, 6]), 2).is_err());
    }

    #[test]
    fn m2_closed_forms() {
        let r = verify_m2_closed_form(&spec(&[7, 10]), 6).unwrap();
        assert_eq!(r.checks.len(), 8);
        assert!(r.checks.iter().all(CheckRecord::passed));
        assert!(verify_m2_closed_form(&spec(&[4, 5, 6]), 3).unwrap().checks.is_empty());
    }

    #[test]
    fn companions() {
        let r = verify_companions(3, 4, 11).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.records(IdentityId::Fel2Zigzag).count(), 12);
        assert_eq!(r.seed, Some(11));
        assert!(matches!(verify_companions(0, 4, 11), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn whole_semigroup_report_is_green() {
        for g in [&[3i64, 5][..], &[4, 5, 6], &[5, 6, 8, 9], &[1], &[2, 3, 4]] {
            let r = verify_semigroup(&spec(g), 6, g.len() + 8).unwrap();
            assert!(r.all_passed(), "{g:?}");
        }
    }
}
