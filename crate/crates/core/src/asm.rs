//! Alternating sign matrices, the dihedral action and symmetry classes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order accepted by the exhaustive generators.
pub const DEFAULT_MAX_ORDER: usize = 7;

/// A square matrix over {-1, 0, 1} satisfying the alternating sign
/// conditions. Construct with [`AsmMatrix::new`], which validates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i8>>", into = "Vec<Vec<i8>>")]
pub struct AsmMatrix {
    n: usize,
    entries: Vec<i8>,
}

fn alternates(seq: impl Iterator<Item = i8>) -> bool {
    let mut sum = 0i32;
    for x in seq {
        sum += x as i32;
        if !(0..=1).contains(&sum) {
            return false;
        }
    }
    sum == 1
}

/// Checks the alternating sign conditions on a square {-1,0,1} array.
pub fn is_asm(rows: &[Vec<i8>]) -> Result<bool> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Input("matrix is not square".into()));
    }
    if rows.iter().flatten().any(|x| !(-1..=1).contains(x)) {
        return Err(Error::Input("entries must lie in {-1, 0, 1}".into()));
    }
    let rows_ok = rows.iter().all(|r| alternates(r.iter().copied()));
    let cols_ok = (0..n).all(|j| alternates(rows.iter().map(|r| r[j])));
    Ok(rows_ok && cols_ok)
}

impl AsmMatrix {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        if !is_asm(&rows)? {
            return Err(Error::Input("not an alternating sign matrix".into()));
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<i8>>) -> Self {
        let n = rows.len();
        AsmMatrix { n, entries: rows.into_iter().flatten().collect() }
    }

    pub(crate) fn from_flat_unchecked(n: usize, entries: Vec<i8>) -> Self {
        AsmMatrix { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        let mut e = vec![0; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        AsmMatrix { n, entries: e }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry in 1-based row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    /// Entry at the centre of an odd-order matrix.
    pub fn central_entry(&self) -> Option<i8> {
        if self.n % 2 == 1 {
            let c = self.n / 2 + 1;
            Some(self.get(c, c))
        } else {
            None
        }
    }
}

impl fmt::Debug for AsmMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AsmMatrix{:?}", self.rows())
    }
}

/// One row per line, entries separated by single spaces.
impl fmt::Display for AsmMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows().iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let s: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for AsmMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<i8>().map_err(|e| Error::Input(format!("bad entry {t:?}: {e}"))))
                    .collect::<Result<Vec<i8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        AsmMatrix::new(rows)
    }
}

impl TryFrom<Vec<Vec<i8>>> for AsmMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<i8>>) -> Result<Self> {
        AsmMatrix::new(rows)
    }
}

impl From<AsmMatrix> for Vec<Vec<i8>> {
    fn from(m: AsmMatrix) -> Self {
        m.rows()
    }
}

/// Elements of the dihedral group of the square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum D4Element {
    I,
    V,
    H,
    D,
    A,
    /// Counterclockwise quarter turn.
    R90,
    R180,
    /// Clockwise quarter turn.
    R270,
}

impl D4Element {
    pub const ALL: [D4Element; 8] = [
        D4Element::I,
        D4Element::V,
        D4Element::H,
        D4Element::D,
        D4Element::A,
        D4Element::R90,
        D4Element::R180,
        D4Element::R270,
    ];

    /// The source position read by entry `(i, j)` (0-based) of the image.
    fn source(self, n: usize, i: usize, j: usize) -> (usize, usize) {
        let r = |k: usize| n - 1 - k;
        match self {
            D4Element::I => (i, j),
            D4Element::V => (i, r(j)),
            D4Element::H => (r(i), j),
            D4Element::D => (j, i),
            D4Element::A => (r(j), r(i)),
            D4Element::R90 => (j, r(i)),
            D4Element::R180 => (r(i), r(j)),
            D4Element::R270 => (r(j), i),
        }
    }

    /// The product `g·h`, i.e. apply `h` first.
    pub fn compose(self, h: D4Element) -> D4Element {
        // (g(hA))_{ij} = A_{src_h(src_g(i,j))}; identify by the action on a 3×3 grid.
        let n = 3;
        let target: Vec<(usize, usize)> = (0..n * n)
            .map(|k| {
                let (a, b) = self.source(n, k / n, k % n);
                h.source(n, a, b)
            })
            .collect();
        *D4Element::ALL
            .iter()
            .find(|g| (0..n * n).all(|k| g.source(n, k / n, k % n) == target[k]))
            .expect("D4 is closed under composition")
    }

    pub fn inverse(self) -> D4Element {
        *D4Element::ALL.iter().find(|g| self.compose(**g) == D4Element::I).unwrap()
    }
}

impl FromStr for D4Element {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "I" => D4Element::I,
            "V" => D4Element::V,
            "H" => D4Element::H,
            "D" => D4Element::D,
            "A" => D4Element::A,
            "R90" => D4Element::R90,
            "R180" => D4Element::R180,
            "R270" | "R-90" => D4Element::R270,
            _ => return Err(Error::Input(format!("unknown group element {s:?}"))),
        })
    }
}

pub fn d4_apply(g: D4Element, m: &AsmMatrix) -> AsmMatrix {
    let n = m.n;
    let mut e = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (a, b) = g.source(n, i, j);
            e.push(m.entries[a * n + b]);
        }
    }
    AsmMatrix { n, entries: e }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryClass {
    Asm,
    Vsasm,
    Vhsasm,
    Htsasm,
    Qtsasm,
    Dsasm,
    Dasasm,
    Tsasm,
}

impl SymmetryClass {
    pub const ALL: [SymmetryClass; 8] = [
        SymmetryClass::Asm,
        SymmetryClass::Vsasm,
        SymmetryClass::Vhsasm,
        SymmetryClass::Htsasm,
        SymmetryClass::Qtsasm,
        SymmetryClass::Dsasm,
        SymmetryClass::Dasasm,
        SymmetryClass::Tsasm,
    ];

    /// Generators of the invariance subgroup.
    pub fn generators(self) -> &'static [D4Element] {
        use D4Element::*;
        match self {
            SymmetryClass::Asm => &[],
            SymmetryClass::Vsasm => &[V],
            SymmetryClass::Vhsasm => &[V, H],
            SymmetryClass::Htsasm => &[R180],
            SymmetryClass::Qtsasm => &[R90],
            SymmetryClass::Dsasm => &[D],
            SymmetryClass::Dasasm => &[D, A],
            SymmetryClass::Tsasm => &[V, D],
        }
    }

    /// All elements of the invariance subgroup.
    pub fn subgroup(self) -> Vec<D4Element> {
        let mut elems = vec![D4Element::I];
        loop {
            let mut grew = false;
            for g in elems.clone() {
                for &h in self.generators() {
                    let p = g.compose(h);
                    if !elems.contains(&p) {
                        elems.push(p);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        elems.sort();
        elems
    }

    pub fn name(self) -> &'static str {
        match self {
            SymmetryClass::Asm => "asm",
            SymmetryClass::Vsasm => "vsasm",
            SymmetryClass::Vhsasm => "vhsasm",
            SymmetryClass::Htsasm => "htsasm",
            SymmetryClass::Qtsasm => "qtsasm",
            SymmetryClass::Dsasm => "dsasm",
            SymmetryClass::Dasasm => "dasasm",
            SymmetryClass::Tsasm => "tsasm",
        }
    }
}

impl FromStr for SymmetryClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SymmetryClass::ALL
            .iter()
            .copied()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown symmetry class {s:?}")))
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn in_class(m: &AsmMatrix, c: SymmetryClass) -> bool {
    c.generators().iter().all(|&g| d4_apply(g, m) == *m)
}

fn check_bound(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::Resource(format!("order {n} exceeds the enumeration bound {max}")))
    } else {
        Ok(())
    }
}

/// Calls `visit` on every `n×n` ASM in lexicographic order of the row-major
/// entry sequence.
pub fn for_each_asm(n: usize, mut visit: impl FnMut(&[i8])) {
    let mut entries = vec![0i8; n * n];
    let mut col = vec![0i8; n];
    fn rec(n: usize, pos: usize, row_sum: i8, entries: &mut Vec<i8>, col: &mut Vec<i8>, visit: &mut dyn FnMut(&[i8])) {
        if pos == n * n {
            if col.iter().all(|&c| c == 1) {
                visit(entries);
            }
            return;
        }
        let (i, j) = (pos / n, pos % n);
        for x in [-1i8, 0, 1] {
            let r = row_sum + x;
            let c = col[j] + x;
            if !(0..=1).contains(&r) || !(0..=1).contains(&c) {
                continue;
            }
            if j == n - 1 && r != 1 {
                continue;
            }
            // A column still at 0 needs a 1 among the remaining rows.
            if c == 0 && i == n - 1 {
                continue;
            }
            entries[pos] = x;
            col[j] = c;
            let next_row = if j == n - 1 { 0 } else { r };
            rec(n, pos + 1, next_row, entries, col, visit);
            col[j] -= x;
        }
        entries[pos] = 0;
    }
    if n == 0 {
        visit(&[]);
        return;
    }
    rec(n, 0, 0, &mut entries, &mut col, &mut visit);
}

pub fn enumerate_asm(n: usize) -> Result<Vec<AsmMatrix>> {
    enumerate_asm_bounded(n, DEFAULT_MAX_ORDER)
}

pub fn enumerate_asm_bounded(n: usize, max: usize) -> Result<Vec<AsmMatrix>> {
    if n == 0 {
        return Err(Error::Input("order must be positive".into()));
    }
    check_bound(n, max)?;
    let mut out = Vec::new();
    for_each_asm(n, |e| out.push(AsmMatrix::from_flat_unchecked(n, e.to_vec())));
    Ok(out)
}

/// Members of a symmetry class, in lexicographic order. Odd-order DASASMs
/// come from the triangle generator; every other class is filtered from the
/// full enumeration.
pub fn enumerate_class(n: usize, c: SymmetryClass) -> Result<Vec<AsmMatrix>> {
    enumerate_class_bounded(n, c, DEFAULT_MAX_ORDER)
}

pub fn enumerate_class_bounded(n: usize, c: SymmetryClass, max: usize) -> Result<Vec<AsmMatrix>> {
    if n == 0 {
        return Err(Error::Input("order must be positive".into()));
    }
    if c == SymmetryClass::Dasasm && n % 2 == 1 {
        let k = (n - 1) / 2;
        let tris = crate::bijection::enumerate_triangles(k)?;
        let mut out: Vec<AsmMatrix> = tris.iter().map(crate::bijection::dasasm_from_triangle).collect();
        out.sort_by(|a, b| a.entries.cmp(&b.entries));
        return Ok(out);
    }
    check_bound(n, max)?;
    let mut out = Vec::new();
    for_each_asm(n, |e| {
        let m = AsmMatrix::from_flat_unchecked(n, e.to_vec());
        if in_class(&m, c) {
            out.push(m);
        }
    });
    Ok(out)
}

/// Counts of odd-order HTSASMs with central entry `+1` and `-1`.
pub fn htsasm_central_split(n: usize) -> Result<(u64, u64)> {
    if n.is_multiple_of(2) {
        return Err(Error::Input("central entry split needs odd order".into()));
    }
    check_bound(n, DEFAULT_MAX_ORDER)?;
    let (mut plus, mut minus) = (0u64, 0u64);
    let c = n / 2;
    for_each_asm(n, |e| {
        let half_turn = (0..n * n).all(|k| e[k] == e[n * n - 1 - k]);
        if half_turn {
            if e[c * n + c] == 1 {
                plus += 1;
            } else {
                minus += 1;
            }
        }
    });
    Ok((plus, minus))
}

/// `∏_{i=0}^{n-1} (3i+1)!/(n+i)!`.
pub fn asm_count_formula(n: usize) -> num_bigint::BigInt {
    use crate::arith::factorial;
    let mut num = num_bigint::BigInt::from(1);
    let mut den = num_bigint::BigInt::from(1);
    for i in 0..n as u64 {
        num *= factorial(3 * i + 1);
        den *= factorial(n as u64 + i);
    }
    assert!((&num % &den) == num_bigint::BigInt::from(0), "ASM product formula is not integral");
    num / den
}
