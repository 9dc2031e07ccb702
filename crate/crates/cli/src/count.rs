use dasasm::arith::rational;
use dasasm::asm::{
    self, asm_count_formula, enumerate_class_bounded, for_each_asm, htsasm_central_split, SymmetryClass,
};
use dasasm::schur::{dasasm_count_formula, dasasm_pm_count_formula};
use dasasm::vertex::{count_configurations, COUNT_MAX_ORDER};
use serde_json::{json, Map, Value};

use crate::table::{Cell, Table};
use crate::{bound_check, Cli, CliError, NRange, Outcome, EXIT_OK};

pub fn run(cli: &Cli, class: SymmetryClass, n: NRange, split: bool) -> Result<Outcome, CliError> {
    let default = if class == SymmetryClass::Dasasm { COUNT_MAX_ORDER } else { asm::DEFAULT_MAX_ORDER };
    bound_check("count", n.hi, cli.max_n.unwrap_or(default))?;
    if split && !matches!(class, SymmetryClass::Dasasm | SymmetryClass::Htsasm) {
        return Err(CliError(format!("--split-center is not available for class {class}")));
    }
    let table = match class {
        SymmetryClass::Dasasm => dasasm_table(n, split, cli.max_n.unwrap_or(default))?,
        SymmetryClass::Asm => asm_table(n)?,
        SymmetryClass::Htsasm if split => htsasm_table(n)?,
        c => class_table(c, n, cli.max_n.unwrap_or(default))?,
    };
    let mut meta = Map::new();
    meta.insert("class".into(), json!(class.name()));
    meta.insert("n".into(), Value::String(n.to_string()));
    let all_agree = table.rows.iter().all(|r| r.last() != Some(&Cell::Bool(false)));
    meta.insert("agree".into(), Value::Bool(all_agree));
    let stdout = table.render(cli.format, "rows", meta)?;
    Ok(Outcome { stdout, code: EXIT_OK })
}

fn dasasm_table(n: NRange, split: bool, max: usize) -> Result<Table, CliError> {
    let mut t = if split {
        Table::new(&["n", "order", "total", "plus", "minus", "formula_total", "formula_plus", "formula_minus", "agree"])
    } else {
        Table::new(&["n", "order", "total", "formula_total", "agree"])
    };
    for k in n.iter() {
        let (p, m) = count_configurations(k, max)?;
        let f = dasasm_count_formula(k);
        let (fp, fm) = dasasm_pm_count_formula(k);
        let agree =
            f.to_string() == (p + m).to_string() && fp.to_string() == p.to_string() && fm.to_string() == m.to_string();
        let mut row = vec![Cell::int(k), Cell::int(2 * k + 1), Cell::int(p + m)];
        if split {
            row.extend([Cell::int(p), Cell::int(m), Cell::int(f), Cell::int(fp), Cell::int(fm)]);
        } else {
            row.push(Cell::int(f));
        }
        row.push(Cell::Bool(agree));
        t.push(row);
    }
    Ok(t)
}

fn asm_table(n: NRange) -> Result<Table, CliError> {
    if n.lo == 0 {
        return Err(CliError("ASM orders start at 1".into()));
    }
    let mut t = Table::new(&["order", "count", "formula", "agree"]);
    for k in n.iter() {
        let mut c: u64 = 0;
        for_each_asm(k, |_| c += 1);
        let f = asm_count_formula(k);
        t.push(vec![Cell::int(k), Cell::int(c), Cell::int(&f), Cell::Bool(f.to_string() == c.to_string())]);
    }
    Ok(t)
}

fn htsasm_table(n: NRange) -> Result<Table, CliError> {
    let mut t = Table::new(&["order", "plus", "minus", "ratio", "expected", "agree"]);
    for k in n.iter().filter(|k| k % 2 == 1) {
        let (p, m) = htsasm_central_split(k)?;
        let h = (k / 2) as u64;
        let agree = m * (h + 1) == p * h;
        t.push(vec![
            Cell::int(k),
            Cell::int(p),
            Cell::int(m),
            Cell::Text(reduced(m, p)),
            Cell::Text(reduced(h, h + 1)),
            Cell::Bool(agree),
        ]);
    }
    if t.rows.is_empty() {
        return Err(CliError("the central split needs at least one odd order".into()));
    }
    Ok(t)
}

fn class_table(c: SymmetryClass, n: NRange, max: usize) -> Result<Table, CliError> {
    if n.lo == 0 {
        return Err(CliError("orders start at 1".into()));
    }
    let mut t = Table::new(&["order", "count"]);
    for k in n.iter() {
        t.push(vec![Cell::int(k), Cell::int(enumerate_class_bounded(k, c, max)?.len())]);
    }
    Ok(t)
}

fn reduced(a: u64, b: u64) -> String {
    rational(a as i64, b as i64).to_string()
}
