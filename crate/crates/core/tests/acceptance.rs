//! The sixteen acceptance criteria, one line each. Run with
//! `cargo test -p dasasm-core --test acceptance -- --nocapture` to see the
//! lines; the test fails if any criterion fails.

use std::time::{Duration, Instant};

use dasasm::arith::{rational, Rational};
use dasasm::asm::htsasm_central_split;
use dasasm::bijection::count_triangles;
use dasasm::formulas::{verify_corollary_u1, verify_okada, verify_theorem_full};
use dasasm::report::{Report, Status};
use dasasm::schur::{
    central_ratio, conjecture_q3_check, dasasm_count_formula, dasasm_pm_count_formula, schur_corollary_u1,
    verify_schur, verify_schur_kit,
};
use dasasm::vertex::properties::{verify_global_properties, verify_ipi4, verify_specialization, Specialization};
use dasasm::vertex::relations::{verify_local_relation, verify_weight_symmetries, LocalRelation};
use dasasm::vertex::{count_configurations, partition_function_symbolic, Sector, COUNT_MAX_ORDER};

const SEED: u64 = 20240601;
const TRIALS: usize = 20;

const TOTAL: [u64; 8] = [1, 3, 15, 126, 1782, 42471, 1706562, 115640460];
const PLUS: [u64; 8] = [1, 2, 9, 72, 990, 23166, 918918, 61674912];
const MINUS: [u64; 8] = [0, 1, 6, 54, 792, 19305, 787644, 53965548];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn from_report(r: &Report, min_records: usize) -> Outcome {
    let fails = r.failures().count();
    let ok = fails == 0 && r.len() >= min_records;
    let mut detail = format!("{} checks, {} failed", r.len(), fails);
    if let Some(f) = r.failures().next() {
        detail += &format!("; first: {} {} {:?}", f.relation, f.case, f.witness);
    }
    outcome(ok, detail)
}

fn points(r: &Report, relation: &str) -> usize {
    r.records.iter().filter(|c| c.relation == relation && c.case.contains("point")).count()
}

fn c1() -> Outcome {
    let mut bad = Vec::new();
    for n in 0..=7 {
        let (p, m) = count_configurations(n, COUNT_MAX_ORDER).unwrap();
        if (p + m, p, m) != (TOTAL[n] as i128, PLUS[n] as i128, MINUS[n] as i128) {
            bad.push(n);
        }
    }
    outcome(bad.is_empty(), format!("n = 0..7, mismatches at {bad:?}"))
}

fn c2() -> Outcome {
    let mut bad = Vec::new();
    for n in 0..=10 {
        let (p, m) = count_configurations(n, COUNT_MAX_ORDER).unwrap();
        if dasasm_count_formula(n).to_string() != (p + m).to_string() {
            bad.push(n);
        }
    }
    outcome(bad.is_empty(), format!("n = 0..10, mismatches at {bad:?}"))
}

fn c3() -> Outcome {
    let mut bad = Vec::new();
    let mut last = 0;
    for n in 0..=5 {
        let (tp, tm) = count_triangles(n, 5).unwrap();
        let (p, m) = count_configurations(n, COUNT_MAX_ORDER).unwrap();
        last = tp + tm;
        if (tp as i128, tm as i128) != (p, m) {
            bad.push(n);
        }
    }
    outcome(bad.is_empty() && last == 42471, format!("n = 0..5, {last} triangles at n = 5, mismatches at {bad:?}"))
}

fn c4() -> Outcome {
    let mut all = Report::new();
    let mut enough = true;
    for n in 1..=3 {
        let r = verify_theorem_full(n, TRIALS, SEED + n as u64).unwrap();
        enough &= points(&r, "theorem-full") >= TRIALS;
        all.extend(r);
    }
    let symbolic = all.records.iter().any(|c| c.case == "n=1 symbolic" && c.status == Status::Pass);
    let o = from_report(&all, 3 * TRIALS + 1);
    outcome(o.ok && enough && symbolic, o.detail)
}

fn c5() -> Outcome {
    let mut all = Report::new();
    let mut enough = true;
    for n in 1..=3 {
        let r = verify_corollary_u1(n, TRIALS, SEED + 10 + n as u64).unwrap();
        enough &= points(&r, "corollary-u1") >= TRIALS;
        all.extend(r);
    }
    let vanishing = all.records.iter().any(|c| c.relation == "corollary-u1-vanishing" && c.case.starts_with("n=2"));
    let o = from_report(&all, 3 * TRIALS);
    outcome(o.ok && enough && vanishing, o.detail)
}

fn c6() -> Outcome {
    let mut all = Report::new();
    for rel in LocalRelation::ALL {
        all.extend(verify_local_relation(rel).unwrap());
    }
    from_report(&all, 1)
}

fn c7() -> Outcome {
    from_report(&verify_weight_symmetries().unwrap(), 1)
}

fn c8() -> Outcome {
    let mut all = Report::new();
    for prop in Specialization::ALL {
        let r = verify_specialization(prop, 3, 2, TRIALS, SEED + 20).unwrap();
        let sym = r.records.iter().filter(|c| c.case.ends_with("symbolic")).count();
        let pts = r.records.iter().filter(|c| c.case.starts_with("n=3 point")).count();
        if sym != 3 - prop.min_order() || pts != TRIALS {
            return outcome(false, format!("{prop}: {sym} symbolic cases, {pts} points"));
        }
        all.extend(r);
    }
    from_report(&all, 1)
}

fn c9() -> Outcome {
    let mut all = Report::new();
    for n in 0..=3 {
        let z = partition_function_symbolic(n, Sector::All, 3).unwrap();
        all.extend(verify_global_properties(&z));
    }
    from_report(&all, 1)
}

fn c10() -> Outcome {
    let mut all = Report::new();
    for n in 1..=3 {
        let r = verify_schur(n, TRIALS, SEED + 30 + n as u64).unwrap();
        if points(&r, "schur-theorem") < TRIALS {
            return outcome(false, format!("too few points at n = {n}"));
        }
        all.extend(r);
    }
    let counts: Vec<Rational> = (0..=3).map(|n| schur_corollary_u1(n, &vec![rational(1, 1); n]).unwrap()).collect();
    let want: Vec<Rational> = [1, 3, 15, 126].iter().map(|&c| rational(c, 1)).collect();
    let o = from_report(&all, 3 * TRIALS);
    outcome(
        o.ok && counts == want,
        format!("{}; u = 1 values {}", o.detail, counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")),
    )
}

fn c11() -> Outcome {
    let mut ok = true;
    for n in 0..=4 {
        let (p, m) = count_triangles(n, 5).unwrap();
        ok &= m * (n as u64 + 1) == p * n as u64;
        if n >= 1 {
            ok &= central_ratio(n).unwrap() == rational(n as i64, n as i64 + 1);
        }
    }
    for n in 0..=7 {
        let (fp, fm) = dasasm_pm_count_formula(n);
        ok &= fp == PLUS[n].into() && fm == MINUS[n].into();
    }
    outcome(ok, "enumerated ratios n = 0..4, formula sectors n = 0..7")
}

fn c12() -> Outcome {
    from_report(&verify_schur_kit(4, 4, 4, SEED).unwrap(), 1)
}

fn c13() -> Outcome {
    let mut all = Report::new();
    for k in 1..=4 {
        all.extend(verify_okada(k, 15, SEED + 40 + k as u64).unwrap());
    }
    from_report(&all, 50)
}

fn c14() -> Outcome {
    let mut all = Report::new();
    for n in 1..=3 {
        all.extend(verify_ipi4(n, TRIALS, SEED + 50 + n as u64).unwrap());
    }
    let minus = all.records.iter().filter(|c| c.relation == "ipi4-minus").count();
    let o = from_report(&all, 6 * TRIALS);
    outcome(o.ok && minus == 3 * TRIALS, o.detail)
}

fn c15() -> Outcome {
    let mut ratios = Vec::new();
    let mut ok = true;
    for order in [3usize, 5, 7] {
        let (p, m) = htsasm_central_split(order).unwrap();
        let n = (order / 2) as u64;
        ok &= m * (n + 1) == p * n;
        ratios.push(format!("{m}/{p}"));
    }
    outcome(ok, format!("minus/plus at orders 3, 5, 7: {}", ratios.join(", ")))
}

fn c16() -> Outcome {
    let mut all = Report::new();
    for n in 1..=4 {
        all.extend(conjecture_q3_check(n).unwrap());
    }
    let conj: Vec<_> = all.records.iter().filter(|c| c.relation == "q3-conjecture").collect();
    let confirmed = conj.iter().all(|c| c.status == Status::ConjectureConfirmed);
    let o = from_report(&all, 24);
    outcome(
        o.ok && confirmed && conj.len() == 12,
        format!(
            "{} of {} conjecture cases CONJECTURE-CONFIRMED; {}",
            conj.iter().filter(|c| c.status == Status::ConjectureConfirmed).count(),
            conj.len(),
            o.detail
        ),
    )
}

/// Id, name, check and time limit in seconds.
type Criterion = (u32, &'static str, fn() -> Outcome, Option<u64>);

#[test]
fn acceptance() {
    let criteria: [Criterion; 16] = [
        (1, "Table 2 reproduction", c1, Some(60)),
        (2, "product formula n <= 10", c2, Some(300)),
        (3, "brute force against transfer", c3, Some(60)),
        (4, "two-determinant formula", c4, None),
        (5, "single-determinant formula at u_{n+1} = 1", c5, None),
        (6, "local relations", c6, Some(60)),
        (7, "weight symmetries", c7, None),
        (8, "specializations", c8, None),
        (9, "global properties", c9, None),
        (10, "Schur form at q = e^{i pi/6}", c10, None),
        (11, "central entry ratio", c11, None),
        (12, "Schur function kit", c12, None),
        (13, "Okada identity", c13, None),
        (14, "q = e^{i pi/4}", c14, None),
        (15, "HTSASM central split", c15, None),
        (16, "signed enumeration at q = e^{i pi/3}", c16, None),
    ];
    let mut failed = Vec::new();
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let mut o = run();
        let took = start.elapsed();
        if let Some(secs) = limit {
            if took > Duration::from_secs(secs) {
                o.ok = false;
                o.detail += &format!("; over the {secs} s limit");
            }
        }
        println!(
            "criterion {id:>2} {}: {name} ({}; {:.2} s)",
            if o.ok { "PASS" } else { "FAIL" },
            o.detail,
            took.as_secs_f64()
        );
        if !o.ok {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
