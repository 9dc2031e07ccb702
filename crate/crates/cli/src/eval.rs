use clap::ValueEnum;
use dasasm::arith::{Cyclotomic, Rational, Ring};
use dasasm::formulas::{rhs_corollary_u1, rhs_corollary_u1_at_one, rhs_theorem_full};
use dasasm::schur::schur_theorem_rhs;
use dasasm::vertex::{partition_function_eval, partition_function_symbolic, Sector, WeightContext, SYMBOLIC_MAX_ORDER};
use serde::Serialize;

use crate::table::{Cell, Table};
use crate::{bound_check, Cli, CliError, Format, Outcome, EXIT_OK};

/// Largest n for numeric evaluation without `--max-n`.
const EVAL_MAX_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expr {
    /// The partition function.
    Z,
    /// Configurations with central entry 1.
    ZPlus,
    /// Configurations with central entry -1.
    ZMinus,
    /// The two-determinant formula.
    RhsFull,
    /// The single-determinant formula at u_{n+1} = 1.
    RhsU1,
    /// The Schur-function form at q = e^{iπ/6}.
    SchurRhs,
}

impl Expr {
    fn sector(self) -> Option<Sector> {
        match self {
            Expr::Z => Some(Sector::All),
            Expr::ZPlus => Some(Sector::Up),
            Expr::ZMinus => Some(Sector::Down),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum QSpec {
    Symbolic,
    Rational(Rational),
    Zeta(u32, i64),
}

fn parse_q(words: &[String]) -> Result<Option<QSpec>, CliError> {
    match words {
        [] => Ok(None),
        [w] if w == "symbolic" => Ok(Some(QSpec::Symbolic)),
        [w] => w.parse().map(|r| Some(QSpec::Rational(r))).map_err(|_| CliError(format!("bad value for --q: {w:?}"))),
        [z, n, k] if z == "zeta" => {
            let n: u32 = n.parse().map_err(|_| CliError(format!("bad conductor {n:?}")))?;
            let k: i64 = k.parse().map_err(|_| CliError(format!("bad exponent {k:?}")))?;
            if n == 0 {
                return Err(CliError("the conductor must be positive".into()));
            }
            Ok(Some(QSpec::Zeta(n, k)))
        }
        _ => Err(CliError(format!("--q takes `symbolic`, `p/q` or `zeta N k`, got {words:?}"))),
    }
}

#[derive(Serialize)]
struct EvalJson {
    expression: Expr,
    n: usize,
    q: String,
    u: Vec<String>,
    /// Whether the value is multiplied by σ(q)^{2n} σ(q⁴)^{n²}.
    cleared: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    variables: Option<Vec<String>>,
    value: String,
}

pub fn run(cli: &Cli, expr: Expr, n: usize, u: &[String], q: &[String], symbolic: bool) -> Result<Outcome, CliError> {
    let q = parse_q(q)?;
    let symbolic = symbolic || q == Some(QSpec::Symbolic) || (u.is_empty() && q.is_none());
    let out = if symbolic {
        if !u.is_empty() {
            return Err(CliError("symbolic evaluation takes no --u".into()));
        }
        let sector =
            expr.sector().ok_or_else(|| CliError(format!("{expr:?} has no symbolic form; give --u and --q")))?;
        let max = cli.max_n.unwrap_or(SYMBOLIC_MAX_ORDER);
        bound_check("symbolic eval", n, max)?;
        let z = partition_function_symbolic(n, sector, max)?;
        EvalJson {
            expression: expr,
            n,
            q: "q".into(),
            u: (1..=n + 1).map(|k| format!("u{k}")).collect(),
            cleared: true,
            variables: Some(z.variable_names()),
            value: z.render(),
        }
    } else {
        bound_check("eval", n, cli.max_n.unwrap_or(EVAL_MAX_ORDER))?;
        let u = parse_u(u, n, expr)?;
        let q = q.unwrap_or(QSpec::Zeta(12, 1));
        let value = match &q {
            QSpec::Rational(qr) => numeric(expr, n, qr.clone(), u.clone())?.to_string(),
            QSpec::Zeta(c, k) => {
                let qc = Cyclotomic::zeta(*c, *k);
                let uc: Vec<Cyclotomic> = u.iter().cloned().map(Cyclotomic::from_rational).collect();
                if expr == Expr::RhsU1 && u.iter().all(|x| *x == Rational::from_integer(1.into())) {
                    rhs_corollary_u1_at_one(&qc, n)?.to_string()
                } else if expr == Expr::SchurRhs {
                    if (*c, k.rem_euclid(12)) != (12, 1) {
                        return Err(CliError("schur-rhs is only defined at q = zeta 12 1".into()));
                    }
                    schur_theorem_rhs(n, &u)?.to_string()
                } else {
                    numeric(expr, n, qc, uc)?.to_string()
                }
            }
            QSpec::Symbolic => unreachable!(),
        };
        let q_text = match &q {
            QSpec::Rational(r) => r.to_string(),
            QSpec::Zeta(c, k) => format!("zeta {c} {k}"),
            QSpec::Symbolic => unreachable!(),
        };
        EvalJson {
            expression: expr,
            n,
            q: q_text,
            u: u.iter().map(|x| x.to_string()).collect(),
            cleared: false,
            variables: None,
            value,
        }
    };
    let stdout = match cli.format {
        Format::Text => out.value.clone() + "\n",
        Format::Json => serde_json::to_string_pretty(&out)? + "\n",
        Format::Csv => {
            let mut t = Table::new(&["expression", "n", "q", "u", "cleared", "value"]);
            let name = expr.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
            t.push(vec![
                Cell::Text(name),
                Cell::int(n),
                Cell::Text(out.q.clone()),
                Cell::Text(out.u.join(";")),
                Cell::Bool(out.cleared),
                Cell::Text(out.value.clone()),
            ]);
            t.render(Format::Csv, "rows", Default::default())?
        }
    };
    Ok(Outcome { stdout, code: EXIT_OK })
}

/// The parameters as rationals; a single value is repeated. `rhs-u1` takes
/// `u_1..u_n`, or `n+1` values ending in 1.
fn parse_u(words: &[String], n: usize, expr: Expr) -> Result<Vec<Rational>, CliError> {
    let mut u = words
        .iter()
        .map(|w| w.trim().parse::<Rational>().map_err(|_| CliError(format!("bad spectral parameter {w:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if u.is_empty() {
        return Err(CliError("numeric evaluation needs --u".into()));
    }
    let want = if expr == Expr::RhsU1 { n } else { n + 1 };
    if u.len() == 1 {
        u = vec![u[0].clone(); want];
    }
    if expr == Expr::RhsU1 && u.len() == n + 1 {
        if u[n] != Rational::from_integer(1.into()) {
            return Err(CliError(format!("rhs-u1 fixes u{} = 1", n + 1)));
        }
        u.pop();
    }
    if u.len() != want {
        return Err(CliError(format!("expected {want} spectral parameters, got {}", u.len())));
    }
    Ok(u)
}

fn numeric<R: Ring>(expr: Expr, n: usize, q: R, u: Vec<R>) -> Result<R, CliError> {
    Ok(match expr {
        Expr::Z | Expr::ZPlus | Expr::ZMinus => {
            let ctx = WeightContext::new(q).map_err(dasasm::Error::from)?;
            partition_function_eval(n, &u, &ctx, expr.sector().unwrap())?
        }
        Expr::RhsFull => rhs_theorem_full(&q, &u)?,
        Expr::RhsU1 => rhs_corollary_u1(&q, &u)?,
        Expr::SchurRhs => return Err(CliError("schur-rhs needs q = zeta 12 1".into())),
    })
}
