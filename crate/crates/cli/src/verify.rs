use clap::ValueEnum;
use dasasm::asm::{self, htsasm_central_split};
use dasasm::formulas::{verify_corollary_u1, verify_okada, verify_theorem_full};
use dasasm::report::{Report, Status};
use dasasm::schur::{
    conjecture_q3_check, dasasm_count_formula, dasasm_pm_count_formula, verify_schur, verify_schur_kit,
};
use dasasm::vertex::properties::{verify_global_properties, verify_ipi4, verify_specialization, Specialization};
use dasasm::vertex::relations::{verify_local_relation, verify_weight_symmetries, LocalRelation};
use dasasm::vertex::{count_configurations, partition_function_symbolic, Sector, COUNT_MAX_ORDER, SYMBOLIC_MAX_ORDER};
use serde::Serialize;

use crate::table::{Cell, Table};
use crate::{bound_check, Cli, CliError, Format, NRange, Outcome, EXIT_FAILURE, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Weights,
    Relations,
    Specializations,
    Global,
    TheoremFull,
    CorollaryU1,
    Schur,
    SchurKit,
    Okada,
    Ipi4,
    Q3Conjecture,
    HtsasmRatio,
    Counts,
}

impl Suite {
    /// Default n range and the largest n allowed without `--max-n`. For
    /// `okada` n is the matrix size k; for `schur-kit` the box side.
    fn range_and_bound(self) -> Option<(NRange, usize)> {
        let r = NRange::new;
        match self {
            Suite::Weights | Suite::Relations => None,
            Suite::Specializations => Some((r(1, 3), 4)),
            Suite::Global => Some((r(0, 3), SYMBOLIC_MAX_ORDER)),
            Suite::TheoremFull | Suite::CorollaryU1 => Some((r(1, 3), 5)),
            Suite::Schur => Some((r(1, 3), 4)),
            Suite::SchurKit => Some((r(4, 4), 5)),
            Suite::Okada => Some((r(1, 4), 6)),
            Suite::Ipi4 => Some((r(1, 3), 5)),
            Suite::Q3Conjecture => Some((r(1, 4), 5)),
            Suite::HtsasmRatio => Some((r(1, 3), asm::DEFAULT_MAX_ORDER / 2)),
            Suite::Counts => Some((r(0, 7), COUNT_MAX_ORDER)),
        }
    }

    fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

/// Sub-seed for order `n`, so that adding orders leaves earlier points fixed.
fn seed_for(seed: u64, n: usize) -> u64 {
    seed.wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(n as u64 + 1))
}

pub fn build_report(
    suite: Suite,
    range: Option<NRange>,
    trials: usize,
    seed: u64,
    max_n: Option<usize>,
) -> Result<Report, CliError> {
    let n = match suite.range_and_bound() {
        None => None,
        Some((default, bound)) => {
            let n = range.unwrap_or(default);
            bound_check(&suite.name(), n.hi, max_n.unwrap_or(bound))?;
            Some(n)
        }
    };
    let mut report = Report::new();
    match suite {
        Suite::Weights => report = verify_weight_symmetries()?,
        Suite::Relations => {
            for rel in LocalRelation::ALL {
                report.extend(verify_local_relation(rel)?);
            }
        }
        Suite::Specializations => {
            let n = n.unwrap();
            for prop in Specialization::ALL {
                if n.hi >= prop.min_order() {
                    let r = verify_specialization(prop, n.hi, n.hi.min(2), trials, seed_for(seed, n.hi))?;
                    report.extend(r);
                }
            }
        }
        Suite::Global => {
            for k in n.unwrap().iter() {
                let z = partition_function_symbolic(k, Sector::All, max_n.unwrap_or(SYMBOLIC_MAX_ORDER))?;
                report.extend(verify_global_properties(&z));
            }
        }
        Suite::TheoremFull => per_order(&mut report, n, 1, |k| verify_theorem_full(k, trials, seed_for(seed, k)))?,
        Suite::CorollaryU1 => per_order(&mut report, n, 1, |k| verify_corollary_u1(k, trials, seed_for(seed, k)))?,
        Suite::Schur => per_order(&mut report, n, 0, |k| verify_schur(k, trials, seed_for(seed, k)))?,
        Suite::SchurKit => {
            let side = n.unwrap().hi;
            report = verify_schur_kit(side, side, side, seed)?;
        }
        Suite::Okada => per_order(&mut report, n, 1, |k| verify_okada(k, trials, seed_for(seed, k)))?,
        Suite::Ipi4 => per_order(&mut report, n, 0, |k| verify_ipi4(k, trials, seed_for(seed, k)))?,
        Suite::Q3Conjecture => per_order(&mut report, n, 1, conjecture_q3_check)?,
        Suite::HtsasmRatio => {
            for k in n.unwrap().iter() {
                let (p, m) = htsasm_central_split(2 * k + 1)?;
                let ok = m * (k as u64 + 1) == p * k as u64;
                let witness = (!ok).then(|| format!("plus {p}, minus {m}"));
                report.push("htsasm-ratio", format!("order {}", 2 * k + 1), Status::from_bool(ok), witness);
            }
        }
        Suite::Counts => {
            for k in n.unwrap().iter() {
                let (p, m) = count_configurations(k, max_n.unwrap_or(COUNT_MAX_ORDER))?;
                let (fp, fm) = dasasm_pm_count_formula(k);
                report.check(
                    "count-total",
                    format!("n={k}"),
                    dasasm_count_formula(k).to_string() == (p + m).to_string(),
                );
                report.check("count-plus", format!("n={k}"), fp.to_string() == p.to_string());
                report.check("count-minus", format!("n={k}"), fm.to_string() == m.to_string());
            }
        }
    }
    Ok(report.sorted())
}

fn per_order(
    report: &mut Report,
    n: Option<NRange>,
    min: usize,
    mut f: impl FnMut(usize) -> dasasm::Result<Report>,
) -> Result<(), CliError> {
    let n = n.unwrap();
    if n.lo < min {
        return Err(CliError(format!("this suite starts at n = {min}")));
    }
    for k in n.iter() {
        report.extend(f(k)?);
    }
    Ok(())
}

#[derive(Serialize)]
struct Summary {
    pass: usize,
    fail: usize,
    conjecture_confirmed: usize,
    conjecture_violated: usize,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    suite: Suite,
    n: Option<String>,
    seed: u64,
    trials: usize,
    passed: bool,
    summary: Summary,
    records: &'a [dasasm::report::CheckRecord],
}

pub fn run(cli: &Cli, suite: Suite, range: Option<NRange>) -> Result<Outcome, CliError> {
    let report = build_report(suite, range, cli.trials, cli.seed, cli.max_n)?;
    let count = |s: Status| report.records.iter().filter(|r| r.status == s).count();
    let summary = Summary {
        pass: count(Status::Pass),
        fail: count(Status::Fail),
        conjecture_confirmed: count(Status::ConjectureConfirmed),
        conjecture_violated: count(Status::ConjectureViolated),
    };
    let passed = report.passed();
    let stdout = match cli.format {
        Format::Json => {
            let n = suite.range_and_bound().map(|(d, _)| range.unwrap_or(d).to_string());
            let body =
                VerifyJson { suite, n, seed: cli.seed, trials: cli.trials, passed, summary, records: &report.records };
            serde_json::to_string_pretty(&body)? + "\n"
        }
        Format::Csv | Format::Text => {
            let mut t = Table::new(&["relation", "case", "status", "witness"]);
            for r in &report.records {
                let w = r.witness.clone().map_or(Cell::Empty, Cell::Text);
                t.push(vec![
                    Cell::Text(r.relation.clone()),
                    Cell::Text(r.case.clone()),
                    Cell::Text(r.status.to_string()),
                    w,
                ]);
            }
            let mut s = t.render(cli.format, "records", Default::default())?;
            if cli.format == Format::Text {
                s += &format!(
                    "{}: {} passed, {} failed, {} conjecture confirmed, {} conjecture violated\n",
                    suite.name(),
                    summary.pass,
                    summary.fail,
                    summary.conjecture_confirmed,
                    summary.conjecture_violated
                );
            }
            s
        }
    };
    Ok(Outcome { stdout, code: if passed { EXIT_OK } else { EXIT_FAILURE } })
}
