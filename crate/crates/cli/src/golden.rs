//! Golden values for the three worked examples, transcribed by hand.

use felcheck_core::exact::factorial;
use felcheck_core::hilbert::{self, HilbertData};
use felcheck_core::verify::{self, IdentityId};
use felcheck_core::{Error, IntPolynomial, Integer, Rational, SemigroupSpec};
use num_traits::Pow;

pub struct Golden {
    pub spec: SemigroupSpec,
    pub gaps: Vec<u64>,
    pub frobenius: i64,
    /// `(degree, coefficient)` terms of the Hilbert numerator.
    pub numerator: Vec<(usize, i64)>,
    /// `ℭ_n = Σ coeff·base^n` as `(base, coeff)` pairs.
    pub syzygy_terms: Vec<(u64, i64)>,
    pub k_closed_form: fn(u32) -> Rational,
}

pub struct Computed {
    pub gaps: Vec<u64>,
    pub frobenius: i64,
    pub numerator: IntPolynomial,
    pub c: Vec<Rational>,
    pub k: Vec<Rational>,
    pub fel_main_passed: bool,
}

fn power_combination(terms: &[(u64, i64)], n: u32) -> Integer {
    terms.iter().map(|&(b, c)| Integer::from(c) * Integer::from(b).pow(n)).sum()
}

const C_5689: [(u64, i64); 14] = [
    (14, 1), (15, 1), (16, 1), (17, 1), (18, 2),
    (22, -1), (23, -2), (24, -1), (25, -1), (26, -2), (27, -1),
    (31, 1), (32, 1), (35, 1),
];

fn k_35(p: u32) -> Rational {
    Rational::new(Integer::from(15u32).pow(p + 1), Integer::from((p as i64 + 1) * (p as i64 + 2)))
}

fn k_456(p: u32) -> Rational {
    let q = p + 3;
    let num = Integer::from(22u32).pow(q) - Integer::from(10u32).pow(q) - Integer::from(12u32).pow(q);
    let p = p as i64;
    Rational::new(num, Integer::from(120 * (p + 1) * (p + 2) * (p + 3)))
}

fn k_5689(p: u32) -> Rational {
    let num = power_combination(&C_5689, p + 4);
    let den = Integer::from(2160) * factorial(p + 4) / factorial(p);
    Rational::new(num, den)
}

pub fn worked_examples() -> Vec<Golden> {
    vec![
        Golden {
            spec: SemigroupSpec::new(&[3, 5]).expect("valid generators"),
            gaps: vec![1, 2, 4, 7],
            frobenius: 7,
            numerator: vec![(0, 1), (15, -1)],
            syzygy_terms: vec![(15, 1)],
            k_closed_form: k_35,
        },
        Golden {
            spec: SemigroupSpec::new(&[4, 5, 6]).expect("valid generators"),
            gaps: vec![1, 2, 3, 7],
            frobenius: 7,
            numerator: vec![(0, 1), (10, -1), (12, -1), (22, 1)],
            syzygy_terms: vec![(10, 1), (12, 1), (22, -1)],
            k_closed_form: k_456,
        },
        Golden {
            spec: SemigroupSpec::new(&[5, 6, 8, 9]).expect("valid generators"),
            gaps: vec![1, 2, 3, 4, 7],
            frobenius: 7,
            numerator: vec![
                (0, 1), (14, -1), (15, -1), (16, -1), (17, -1), (18, -2),
                (22, 1), (23, 2), (24, 1), (25, 1), (26, 2), (27, 1),
                (31, -1), (32, -1), (35, -1),
            ],
            syzygy_terms: C_5689.to_vec(),
            k_closed_form: k_5689,
        },
    ]
}

pub fn compute(g: &Golden, p_max: u32) -> Result<Computed, Error> {
    let spec = &g.spec;
    let gaps = spec.gaps();
    let h = HilbertData::new(spec, &gaps)?;
    let m = spec.m() as u32;
    let fel = verify::verify_fel_main(spec, p_max)?;
    let fel_main_passed = fel.records(IdentityId::FelMain).all(|r| r.passed());
    Ok(Computed {
        gaps: gaps.gaps().to_vec(),
        frobenius: gaps.frobenius(),
        c: (0..=m + p_max).map(|r| h.syzygy_sum(r)).collect(),
        k: (0..=p_max).map(|p| hilbert::k_invariant(spec, &h, p)).collect(),
        numerator: h.numerator,
        fel_main_passed,
    })
}

/// `Err` names the first field that differs from the golden values.
pub fn compare(g: &Golden, c: &Computed) -> Result<(), String> {
    if c.gaps != g.gaps {
        return Err("gaps".into());
    }
    if c.frobenius != g.frobenius {
        return Err("frobenius".into());
    }
    let terms: Vec<(usize, i64)> = g.numerator.clone();
    if c.numerator != IntPolynomial::from_terms(terms.into_iter().map(|(d, v)| (d, Integer::from(v)))) {
        return Err("numerator".into());
    }
    for (n, v) in c.c.iter().enumerate() {
        if *v != Rational::from_integer(power_combination(&g.syzygy_terms, n as u32)) {
            return Err(format!("C_{n}"));
        }
    }
    for (p, v) in c.k.iter().enumerate() {
        if *v != (g.k_closed_form)(p as u32) {
            return Err(format!("K_{p}"));
        }
    }
    if !c.fel_main_passed {
        return Err("FEL_MAIN".into());
    }
    Ok(())
}
