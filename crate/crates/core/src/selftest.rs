//! The acceptance checks. Each criterion runs a fixed, seeded workload and
//! reports how many cases it checked, every failure it saw, and how long it
//! took against its time budget.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bbw::{
    bbw_verdict, even_reflection_step, gl11_h0_structure, is_simple_h0, kempf_bounds,
    kempf_closed_form, kempf_count, Characteristic, EvenStep, Side, VerdictTag,
};
use crate::charring::LaurentPoly;
use crate::error::Result;
use crate::eulerchar::{check_odd_invariance, chi_character, verify_clearing};
use crate::gl21::{classify_23, crosscheck_engine, Cohomology, Gl21System};
use crate::superroots::{dot_action, parity_function, Perm, SuperRootData, Superdim, Weight};

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.elapsed <= self.limit
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} {}: {} ({} checks, {} failures, {:.3}s of {}s)",
            self.id,
            self.title,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.failures.len(),
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        )?;
        if self.elapsed > self.limit {
            write!(f, " over time budget")?;
        }
        for failure in self.failures.iter().take(5) {
            write!(f, "\n    {failure}")?;
        }
        Ok(())
    }
}

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub limit: Duration,
    run: fn(&mut Tally),
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn ok<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }
}

impl Criterion {
    pub fn run(&self) -> CriterionResult {
        let mut tally = Tally::default();
        let start = Instant::now();
        (self.run)(&mut tally);
        CriterionResult {
            id: self.id,
            title: self.title,
            checked: tally.checked,
            failures: tally.failures,
            elapsed: start.elapsed(),
            limit: self.limit,
        }
    }
}

pub fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            title: "golden root data",
            limit: secs(1),
            run: golden_roots,
        },
        Criterion {
            id: 2,
            title: "Kempf bound count equals closed form",
            limit: secs(30),
            run: kempf_equivalence,
        },
        Criterion {
            id: 3,
            title: "χ clearing identity",
            limit: secs(60),
            run: chi_clearing,
        },
        Criterion {
            id: 4,
            title: "odd-reflection invariance of χ",
            limit: secs(60),
            run: odd_invariance,
        },
        Criterion {
            id: 5,
            title: "GL(1|1) H^0 structure",
            limit: secs(5),
            run: gl11_structure,
        },
        Criterion {
            id: 6,
            title: "GL(2|1) golden vs generic",
            limit: secs(60),
            run: gl21_crosscheck,
        },
        Criterion {
            id: 7,
            title: "atypical one-dimensional family",
            limit: secs(5),
            run: one_dim_family,
        },
        Criterion {
            id: 8,
            title: "dot-action group law and degree shifts",
            limit: secs(30),
            run: group_law_and_shifts,
        },
    ]
}

pub fn run_all() -> Vec<CriterionResult> {
    criteria().iter().map(Criterion::run).collect()
}

fn p(x: u64) -> Characteristic {
    Characteristic::new(x).expect("prime")
}

fn sys(m: usize, n: usize, word: &[usize]) -> SuperRootData {
    SuperRootData::from_word(m, n, word).expect("valid word")
}

fn all_systems(m: usize, n: usize) -> Vec<SuperRootData> {
    let dim = Superdim::new(m, n).expect("valid superdimension");
    Perm::all(m + n)
        .into_iter()
        .map(|w| SuperRootData::new(dim, w).expect("valid system"))
        .collect()
}

fn random_weight(rng: &mut ChaCha8Rng, len: usize, lo: i64, hi: i64) -> Weight {
    let coords: Vec<i64> = (0..len).map(|_| rng.gen_range(lo..=hi)).collect();
    Weight::from_ints(&coords)
}

fn golden_roots(t: &mut Tally) {
    let w23 = sys(2, 1, &[1, 3, 2]);
    t.check(w23.rho() == &Weight::zero(3), || {
        format!("GL(2|1) (23): ρ = {}", w23.rho())
    });
    let k1 = kempf_bounds(&w23).ok().and_then(|b| b.get(1));
    t.check(k1 == Some(2), || format!("GL(2|1) (23): k_1 = {k1:?}"));

    let gl22 = sys(2, 2, &[1, 3, 2, 4]);
    let expect = Weight::from_ints(&[2, 0, 0, -2]);
    t.check(gl22.rho1() == &expect, || {
        format!("GL(2|2) (23): ρ_1 = {}", gl22.rho1())
    });

    let all_odd = sys(2, 2, &[3, 1, 4, 2]);
    let odd = all_odd.odd_simple_positions().len();
    t.check(odd == 3 && all_odd.simple().len() == 3, || {
        format!("GL(2|2) (1342): {odd} odd simple roots")
    });
}

fn kempf_equivalence(t: &mut Tally) {
    for total in 2..=6 {
        for m in 1..total {
            for s in all_systems(m, total - m) {
                if !s.has_standard_even_part() {
                    continue;
                }
                for i in (0..total - 1).filter(|&i| i + 1 != m) {
                    let beta = crate::superroots::Root::new(i, i + 1);
                    let count = t.ok(kempf_count(&s, beta), || format!("{s} β_{}", i + 1));
                    let closed = kempf_closed_form(&s, beta);
                    if let Some(count) = count {
                        t.check(count == closed, || {
                            format!("{s} k_{}: count {count}, closed {closed}", i + 1)
                        });
                    }
                }
            }
        }
    }
}

fn chi_clearing(t: &mut Tally) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        for s in all_systems(m, n) {
            for _ in 0..50 {
                let lambda = random_weight(&mut rng, m + n, -5, 5);
                if let Some(ec) = t.ok(chi_character(&lambda, &s), || format!("{s} λ = {lambda}"))
                {
                    t.check(verify_clearing(&ec), || {
                        format!("{s} λ = {lambda}: clearing fails")
                    });
                }
            }
        }
    }
}

fn odd_invariance(t: &mut Tally) {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (m, n) in [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3)] {
        for s in all_systems(m, n) {
            for position in s.odd_simple_positions() {
                for _ in 0..25 {
                    let lambda = random_weight(&mut rng, m + n, -5, 5);
                    let r = check_odd_invariance(&lambda, &s, position);
                    if let Some(same) = t.ok(r, || format!("{s} λ = {lambda} at {position}")) {
                        t.check(same, || {
                            format!("{s} λ = {lambda}: χ changes across position {position}")
                        });
                    }
                }
            }
        }
    }
}

fn gl11_structure(t: &mut Tally) {
    let minus = sys(1, 1, &[1, 2]);
    let plus = sys(1, 1, &[2, 1]);
    let alpha = Weight::from_ints(&[1, -1]);
    for q in [0, 2, 3, 5] {
        let q = p(q);
        for a in -5..=5 {
            for b in -5..=5 {
                for parity in [0u8, 1] {
                    let lambda = Weight::from_ints(&[a, b]);
                    for (side, s, other) in [
                        (Side::Minus, &minus, &lambda - &alpha),
                        (Side::Plus, &plus, &lambda + &alpha),
                    ] {
                        gl11_case(t, &lambda, parity, side, s, &other, q);
                    }
                }
            }
        }
    }
}

fn gl11_case(
    t: &mut Tally,
    lambda: &Weight,
    parity: u8,
    side: Side,
    s: &SuperRootData,
    other: &Weight,
    q: Characteristic,
) {
    let here = || format!("{side:?} λ = {lambda}^{parity} p = {q}");
    let Some(st) = t.ok(gl11_h0_structure(lambda, parity, side, q), here) else {
        return;
    };
    let Some(chi) = t.ok(chi_character(lambda, s), here) else {
        return;
    };
    let expect = &LaurentPoly::exp(lambda) + &LaurentPoly::exp(other);
    t.check(
        chi.poly == expect && chi.poly.evaluate_dimension() == BigInt::from(2),
        || format!("{}: χ = {}", here(), chi.poly),
    );
    t.check(st.weights == [lambda.clone(), other.clone()], || {
        format!("{}: weights {:?}", here(), st.weights)
    });
    let shift = parity_function(other, s.dim()).ok() != parity_function(lambda, s.dim()).ok();
    t.check(st.parities == [parity, 1 - parity] && shift, || {
        format!("{}: parities {:?}", here(), st.parities)
    });
    let degree = lambda.to_ints().map(|c| c[0] + c[1]).unwrap_or_default();
    let simple = !q.divides_int(degree);
    t.check(st.simple == simple, || {
        format!("{}: simple = {}", here(), st.simple)
    });
    let claimed = is_simple_h0(lambda, s, q).unwrap_or(false);
    t.check(claimed == simple, || {
        format!("{}: engine simplicity claim {claimed}", here())
    });
    match (side, simple) {
        (Side::Plus, true) => {
            let iso = st.isomorphic_to.as_ref();
            let target_ok = iso.is_some_and(|l| &l.weight == other && l.parity == 1 - parity);
            let minus = sys(1, 1, &[1, 2]);
            let same_char = chi_character(other, &minus)
                .map(|c| c.poly == chi.poly)
                .unwrap_or(false);
            t.check(target_ok && same_char, || {
                format!("{}: isomorphism {iso:?}", here())
            });
        }
        (_, false) => {
            let ok = st.series.len() == 1
                && &st.series[0].top.weight == other
                && st.series[0].top.parity == 1 - parity
                && &st.series[0].bottom.weight == lambda
                && st.series[0].bottom.parity == parity;
            t.check(ok, || format!("{}: series {:?}", here(), st.series));
        }
        _ => t.check(st.series.is_empty() && st.isomorphic_to.is_none(), here),
    }
}

fn gl21_crosscheck(t: &mut Tally) {
    for system in Gl21System::ALL {
        for q in [0, 2, 3, 5] {
            for a in -4..=4 {
                for b in -4..=4 {
                    for c in -4..=4 {
                        let lambda = Weight::from_ints(&[a, b, c]);
                        let here = || format!("{system} λ = {lambda} p = {q}");
                        if let Some(r) = t.ok(crosscheck_engine(&lambda, 0, p(q), system), here) {
                            t.check(r.is_clean(), || {
                                format!("{}: {}", here(), r.contradictions.join("; "))
                            });
                        }
                    }
                }
            }
        }
    }
}

fn one_dim_family(t: &mut Tally) {
    let w23 = sys(2, 1, &[1, 3, 2]);
    for q in [0u64, 3] {
        for a in -3..=3i64 {
            for s in -3..=3i64 {
                let lambda = Weight::from_ints(&[a, a, -a + q as i64 * s]);
                let here = || format!("λ = {lambda} p = {q}");
                if let Some(ans) = t.ok(classify_23(&lambda, 0, p(q)), here) {
                    let one = Cohomology::OneDim {
                        weight: lambda.clone(),
                    };
                    t.check(ans.h0 == one && ans.h1 == one, || {
                        format!("{}: {}", here(), ans.summary())
                    });
                }
                if let Some(chi) = t.ok(chi_character(&lambda, &w23), here) {
                    t.check(chi.poly.is_zero(), || {
                        format!("{}: χ = {}", here(), chi.poly)
                    });
                }
            }
        }
        for a in -6..=6i64 {
            for c in -6..=6i64 {
                let in_family = if q == 0 {
                    c == -a
                } else {
                    (c + a).rem_euclid(q as i64) == 0
                };
                if in_family {
                    continue;
                }
                let lambda = Weight::from_ints(&[a, a, c]);
                let here = || format!("λ = {lambda} p = {q}");
                if let Some(ans) = t.ok(classify_23(&lambda, 0, p(q)), here) {
                    t.check(ans.h0.is_zero() && ans.h1.is_zero(), || {
                        format!("{}: {}", here(), ans.summary())
                    });
                }
            }
        }
    }
}

fn group_law_and_shifts(t: &mut Tally) {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut shifts_seen = 0usize;
    for (m, n) in [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3)] {
        for s in all_systems(m, n) {
            let group = s.weyl_group();
            for _ in 0..20 {
                let lambda = random_weight(&mut rng, m + n, -5, 5);
                for u in &group {
                    for v in &group {
                        let left = dot_action(&u.compose(v), &lambda, &s);
                        let right = dot_action(v, &lambda, &s).and_then(|x| dot_action(u, &x, &s));
                        t.check(matches!((&left, &right), (Ok(x), Ok(y)) if x == y), || {
                            format!("{s} λ = {lambda}: (uv).λ ≠ u.(v.λ) for u = {u}, v = {v}")
                        });
                    }
                }
                for q in [0, 2, 3, 5] {
                    shifts_seen += degree_shifts(t, &lambda, &s, p(q));
                }
            }
        }
    }
    t.check(shifts_seen > 0, || {
        "no licensed degree shift between decided verdicts".to_string()
    });
}

fn degree_shifts(t: &mut Tally, lambda: &Weight, s: &SuperRootData, q: Characteristic) -> usize {
    let here = || format!("{s} λ = {lambda} p = {q}");
    let Some(before) = t.ok(bbw_verdict(lambda, 0, s, q), here) else {
        return 0;
    };
    let mut seen = 0;
    for position in s.even_simple_positions() {
        let Some(step) = t.ok(even_reflection_step(lambda, 0, position, s, q), here) else {
            continue;
        };
        match step {
            EvenStep::DegreeShift { target, .. } => {
                let Some(after) = t.ok(bbw_verdict(&target, 0, s, q), here) else {
                    continue;
                };
                match (before.tag, after.tag) {
                    (VerdictTag::ConcentratedAt, VerdictTag::ConcentratedAt) => {
                        seen += 1;
                        let ok = after
                            .degree
                            .zip(before.degree)
                            .is_some_and(|(a, b)| a == b + 1);
                        t.check(ok, || {
                            format!(
                                "{}: degree {:?} then {:?} at {target}",
                                here(),
                                before.degree,
                                after.degree
                            )
                        });
                    }
                    (VerdictTag::AllVanish, VerdictTag::AllVanish)
                    | (VerdictTag::Undetermined, _)
                    | (_, VerdictTag::Undetermined) => {}
                    (x, y) => t.check(false, || format!("{}: {x} becomes {y} at {target}", here())),
                }
            }
            EvenStep::Vanishing => {
                t.check(before.tag != VerdictTag::ConcentratedAt, || {
                    format!("{}: pairing -1 but {before}", here())
                });
            }
            EvenStep::NoRule { .. } => {}
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_criteria_pass() {
        for c in criteria().iter().filter(|c| [1, 5, 7].contains(&c.id)) {
            let r = c.run();
            assert!(r.failures.is_empty(), "{r}");
        }
    }
}
