//! Odd DASASM triangles, six-vertex configurations on the triangular grid
//! `T_n`, and the bijections between them and odd-order DASASMs.
//!
//! Coordinates are 1-based as in the matrix: row `i = 1..=n+1`, column
//! `j = i..=2n+2-i`. The vertex `(i, i)` is a left boundary vertex, `(i,
//! 2n+2-i)` a right boundary vertex, `(n+1, n+1)` the bottom vertex and all
//! others are bulk vertices. Column `j` runs from the top vertex `(0, j)` down
//! to row `min(j, 2n+2-j)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::asm::{in_class, AsmMatrix, SymmetryClass};
use crate::error::{Error, Result};

/// Largest triangle order accepted by [`enumerate_triangles`].
pub const DEFAULT_MAX_TRIANGLE_ORDER: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OddDasasmTriangle {
    n: usize,
    /// `rows[i-1][j-i]` is `A_{ij}`.
    rows: Vec<Vec<i8>>,
}

impl OddDasasmTriangle {
    /// Validates the path conditions.
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len().checked_sub(1).ok_or_else(|| Error::Input("triangle has no rows".into()))?;
        for (k, r) in rows.iter().enumerate() {
            if r.len() != 2 * (n - k) + 1 {
                return Err(Error::Input(format!(
                    "row {} has length {}, expected {}",
                    k + 1,
                    r.len(),
                    2 * (n - k) + 1
                )));
            }
            if r.iter().any(|x| !(-1..=1).contains(x)) {
                return Err(Error::Input("entries must lie in {-1, 0, 1}".into()));
            }
        }
        let t = OddDasasmTriangle { n, rows };
        for i in 1..=n + 1 {
            let mut sum = 0i32;
            for x in t.path(i) {
                sum += x as i32;
                if !(0..=1).contains(&sum) {
                    return Err(Error::Input(format!("path {i} does not alternate")));
                }
            }
            if sum != 1 {
                return Err(Error::Input(format!("path {i} does not sum to 1")));
            }
        }
        Ok(t)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.rows[i - 1][j - i]
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    /// The entries of path `i`: down column `i`, along row `i`, up column
    /// `2n+2-i`.
    pub fn path(&self, i: usize) -> Vec<i8> {
        let r = 2 * self.n + 2 - i;
        let mut seq: Vec<i8> = (1..i).map(|k| self.get(k, i)).collect();
        seq.extend((i..=r).map(|j| self.get(i, j)));
        seq.extend((1..i).rev().map(|k| self.get(k, r)));
        seq
    }

    pub fn central_entry(&self) -> i8 {
        self.get(self.n + 1, self.n + 1)
    }
}

impl fmt::Debug for OddDasasmTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OddDasasmTriangle{:?}", self.rows)
    }
}

/// `n+1` lines, line `i` holding `A_{i,i} .. A_{i,2n+2-i}`.
impl fmt::Display for OddDasasmTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let s: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for OddDasasmTriangle {
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
        OddDasasmTriangle::new(rows)
    }
}

pub fn triangle_from_dasasm(a: &AsmMatrix) -> Result<OddDasasmTriangle> {
    let size = a.order();
    if size.is_multiple_of(2) || !in_class(a, SymmetryClass::Dasasm) {
        return Err(Error::Input("not an odd-order DASASM".into()));
    }
    let n = (size - 1) / 2;
    let rows = (1..=n + 1).map(|i| (i..=2 * n + 2 - i).map(|j| a.get(i, j)).collect()).collect();
    Ok(OddDasasmTriangle { n, rows })
}

pub fn dasasm_from_triangle(t: &OddDasasmTriangle) -> AsmMatrix {
    let n = t.n;
    let size = 2 * n + 1;
    let inside = |i: usize, j: usize| i <= n + 1 && i <= j && j <= 2 * n + 2 - i;
    let mut rows = vec![vec![0i8; size]; size];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let (i, j) = (i + 1, j + 1);
            let orbit = [(i, j), (j, i), (size + 1 - j, size + 1 - i), (size + 1 - i, size + 1 - j)];
            let &(a, b) = orbit.iter().find(|&&(a, b)| inside(a, b)).expect("orbit meets the triangle");
            *x = t.get(a, b);
        }
    }
    AsmMatrix::from_rows_unchecked(rows)
}

/// Number of 0s among the first `n` entries of the central column.
pub fn statistic_n(t: &OddDasasmTriangle) -> usize {
    (1..=t.n).filter(|&k| t.get(k, t.n + 1) == 0).count()
}

/// Number of 0s at bulk positions `i = 1..n`, `j = i+1..2n+1-i`.
pub fn statistic_m(t: &OddDasasmTriangle) -> usize {
    let n = t.n;
    (1..=n).map(|i| (i + 1..=2 * n + 1 - i).filter(|&j| t.get(i, j) == 0).count()).sum()
}

/// Visits every order-`n` triangle, in lexicographic order of the row
/// sequence. Row `i` completes path `i`; per-column partial sums keep every
/// later path admissible.
pub fn for_each_triangle(n: usize, mut visit: impl FnMut(&OddDasasmTriangle)) {
    let width = 2 * n + 1;
    let mut col = vec![0i8; width + 1];
    let mut t = OddDasasmTriangle { n, rows: (0..=n).map(|k| vec![0; 2 * (n - k) + 1]).collect() };

    fn row(i: usize, t: &mut OddDasasmTriangle, col: &mut Vec<i8>, visit: &mut dyn FnMut(&OddDasasmTriangle)) {
        let n = t.n;
        if i == n + 1 {
            // Central entry: the doubled column forces 1 - 2s.
            let x = 1 - 2 * col[n + 1];
            t.rows[n][0] = x;
            visit(t);
            return;
        }
        let start = col[i];
        cell(i, i, start, t, col, visit);
    }

    fn cell(
        i: usize,
        j: usize,
        run: i8,
        t: &mut OddDasasmTriangle,
        col: &mut Vec<i8>,
        visit: &mut dyn FnMut(&OddDasasmTriangle),
    ) {
        let n = t.n;
        let right = 2 * n + 2 - i;
        for x in [-1i8, 0, 1] {
            let r = run + x;
            if !(0..=1).contains(&r) {
                continue;
            }
            if j == right {
                if r != 1 - col[right] {
                    continue;
                }
                t.rows[i - 1][j - i] = x;
                row(i + 1, t, col, visit);
                continue;
            }
            if j > i {
                let c = col[j] + x;
                if !(0..=1).contains(&c) {
                    continue;
                }
            }
            t.rows[i - 1][j - i] = x;
            if j > i {
                col[j] += x;
            }
            cell(i, j + 1, r, t, col, visit);
            if j > i {
                col[j] -= x;
            }
        }
        t.rows[i - 1][j - i] = 0;
    }

    row(1, &mut t, &mut col, &mut visit);
}

pub fn enumerate_triangles(n: usize) -> Result<Vec<OddDasasmTriangle>> {
    enumerate_triangles_bounded(n, DEFAULT_MAX_TRIANGLE_ORDER)
}

pub fn enumerate_triangles_bounded(n: usize, max: usize) -> Result<Vec<OddDasasmTriangle>> {
    if n > max {
        return Err(Error::Resource(format!("triangle order {n} exceeds the bound {max}")));
    }
    let mut out = Vec::new();
    for_each_triangle(n, |t| out.push(t.clone()));
    Ok(out)
}

/// Counts triangles by central entry: `(plus, minus)`.
pub fn count_triangles(n: usize, max: usize) -> Result<(u64, u64)> {
    if n > max {
        return Err(Error::Resource(format!("triangle order {n} exceeds the bound {max}")));
    }
    let (mut p, mut m) = (0u64, 0u64);
    for_each_triangle(n, |t| {
        if t.central_entry() == 1 {
            p += 1;
        } else {
            m += 1;
        }
    });
    Ok((p, m))
}

/// Orientation of an edge relative to one of its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Arrow {
    In,
    Out,
}

impl Arrow {
    pub fn reversed(self) -> Arrow {
        match self {
            Arrow::In => Arrow::Out,
            Arrow::Out => Arrow::In,
        }
    }

    pub const BOTH: [Arrow; 2] = [Arrow::In, Arrow::Out];
}

/// Local configurations at bulk vertices, by the orientations
/// `(left, below, right, above)` relative to the vertex:
/// `B1 = (in,in,out,out)`, `B2 = (out,out,in,in)`, `B3 = (out,in,in,out)`,
/// `B4 = (in,out,out,in)`, `B5 = (in,out,in,out)`, `B6 = (out,in,out,in)`.
/// `B1`/`B2` carry `σ(q²u)`, `B3`/`B4` carry `σ(q²ū)`, `B5` is the entry 1
/// and `B6` the entry -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Bulk {
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
}

impl Bulk {
    pub const ALL: [Bulk; 6] = [Bulk::B1, Bulk::B2, Bulk::B3, Bulk::B4, Bulk::B5, Bulk::B6];

    pub fn classify(left: Arrow, below: Arrow, right: Arrow, above: Arrow) -> Option<Bulk> {
        use Arrow::*;
        Some(match (left, below, right, above) {
            (In, In, Out, Out) => Bulk::B1,
            (Out, Out, In, In) => Bulk::B2,
            (Out, In, In, Out) => Bulk::B3,
            (In, Out, Out, In) => Bulk::B4,
            (In, Out, In, Out) => Bulk::B5,
            (Out, In, Out, In) => Bulk::B6,
            _ => return None,
        })
    }

    /// `(left, below, right, above)`.
    pub fn arrows(self) -> [Arrow; 4] {
        use Arrow::*;
        match self {
            Bulk::B1 => [In, In, Out, Out],
            Bulk::B2 => [Out, Out, In, In],
            Bulk::B3 => [Out, In, In, Out],
            Bulk::B4 => [In, Out, Out, In],
            Bulk::B5 => [In, Out, In, Out],
            Bulk::B6 => [Out, In, Out, In],
        }
    }

    pub fn entry(self) -> i8 {
        match self {
            Bulk::B5 => 1,
            Bulk::B6 => -1,
            _ => 0,
        }
    }
}

/// Boundary configurations by `(up edge, side edge)` orientation:
/// `1 = (out,out)`, `2 = (in,in)`, `3 = (out,in)` (entry 1),
/// `4 = (in,out)` (entry -1). The side edge is the right edge at a left
/// boundary vertex and the left edge at a right boundary vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Boundary {
    K1,
    K2,
    K3,
    K4,
}

impl Boundary {
    pub const ALL: [Boundary; 4] = [Boundary::K1, Boundary::K2, Boundary::K3, Boundary::K4];

    pub fn classify(up: Arrow, side: Arrow) -> Boundary {
        use Arrow::*;
        match (up, side) {
            (Out, Out) => Boundary::K1,
            (In, In) => Boundary::K2,
            (Out, In) => Boundary::K3,
            (In, Out) => Boundary::K4,
        }
    }

    pub fn arrows(self) -> [Arrow; 2] {
        use Arrow::*;
        match self {
            Boundary::K1 => [Out, Out],
            Boundary::K2 => [In, In],
            Boundary::K3 => [Out, In],
            Boundary::K4 => [In, Out],
        }
    }

    pub fn entry(self) -> i8 {
        match self {
            Boundary::K3 => 1,
            Boundary::K4 => -1,
            _ => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LocalConfig {
    Top,
    Left(Boundary),
    Bulk(Bulk),
    Right(Boundary),
    /// The edge above the bottom vertex points up (entry 1) or down (-1).
    Bottom {
        up: bool,
    },
}

impl LocalConfig {
    pub fn entry(self) -> Option<i8> {
        match self {
            LocalConfig::Top => None,
            LocalConfig::Left(b) | LocalConfig::Right(b) => Some(b.entry()),
            LocalConfig::Bulk(b) => Some(b.entry()),
            LocalConfig::Bottom { up } => Some(if up { 1 } else { -1 }),
        }
    }

    /// Short label: `B1..B6`, `L1..L4`, `R1..R4`, `bottom-up`, `bottom-down`, `top`.
    pub fn label(self) -> String {
        let k = |b: Boundary| Boundary::ALL.iter().position(|&x| x == b).unwrap() + 1;
        match self {
            LocalConfig::Top => "top".into(),
            LocalConfig::Left(b) => format!("L{}", k(b)),
            LocalConfig::Right(b) => format!("R{}", k(b)),
            LocalConfig::Bulk(b) => format!("{b:?}"),
            LocalConfig::Bottom { up: true } => "bottom-up".into(),
            LocalConfig::Bottom { up: false } => "bottom-down".into(),
        }
    }
}

/// An edge of `T_n`, named by its upper or left endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeKey {
    /// From `(i-1, j)` down to `(i, j)`; `i = 1` starts at a top vertex.
    Vertical { i: usize, j: usize },
    /// From `(i, j)` right to `(i, j+1)`.
    Horizontal { i: usize, j: usize },
}

/// An orientation of the edges of `T_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SixVertexConfig {
    n: usize,
    /// `up[j-1][i-1]`: the edge entering `(i, j)` from above points up.
    up: Vec<Vec<bool>>,
    /// `right[i-1][j-i]`: the edge leaving `(i, j)` to the right points right.
    right: Vec<Vec<bool>>,
}

impl SixVertexConfig {
    pub fn order(&self) -> usize {
        self.n
    }

    fn column_depth(n: usize, j: usize) -> usize {
        j.min(2 * n + 2 - j)
    }

    /// Builds a configuration from edge orientations and validates it.
    pub fn from_edges(n: usize, edges: &[(EdgeKey, bool)]) -> Result<Self> {
        let mut c = SixVertexConfig::blank(n);
        let mut seen = std::collections::HashSet::new();
        for &(key, toward_second) in edges {
            if !seen.insert(key) {
                return Err(Error::Input(format!("edge {key:?} listed twice")));
            }
            match key {
                EdgeKey::Vertical { i, j }
                    if (1..=2 * n + 1).contains(&j) && (1..=Self::column_depth(n, j)).contains(&i) =>
                {
                    c.up[j - 1][i - 1] = !toward_second;
                }
                EdgeKey::Horizontal { i, j } if (1..=n).contains(&i) && (i..2 * n + 2 - i).contains(&j) => {
                    c.right[i - 1][j - i] = toward_second;
                }
                _ => return Err(Error::Input(format!("{key:?} is not an edge of the grid"))),
            }
        }
        if seen.len() != c.edges().len() {
            return Err(Error::Input("configuration does not orient every edge".into()));
        }
        c.validate()?;
        Ok(c)
    }

    fn blank(n: usize) -> Self {
        SixVertexConfig {
            n,
            up: (1..=2 * n + 1).map(|j| vec![true; Self::column_depth(n, j)]).collect(),
            right: (1..=n).map(|i| vec![true; 2 * n + 2 - 2 * i]).collect(),
        }
    }

    /// Every edge with its orientation bit (`true` = toward the lower or
    /// right endpoint), in a fixed order.
    pub fn edges(&self) -> Vec<(EdgeKey, bool)> {
        let mut out = Vec::new();
        for (j0, col) in self.up.iter().enumerate() {
            for (i0, &u) in col.iter().enumerate() {
                out.push((EdgeKey::Vertical { i: i0 + 1, j: j0 + 1 }, !u));
            }
        }
        for (i0, row) in self.right.iter().enumerate() {
            for (k, &r) in row.iter().enumerate() {
                out.push((EdgeKey::Horizontal { i: i0 + 1, j: i0 + 1 + k }, r));
            }
        }
        out
    }

    /// Whether the edge entering `(i, j)` from above points up.
    pub fn up(&self, i: usize, j: usize) -> bool {
        self.up[j - 1][i - 1]
    }

    /// Whether the edge leaving `(i, j)` to the right points right.
    pub fn right(&self, i: usize, j: usize) -> bool {
        self.right[i - 1][j - i]
    }

    fn arrows_at(&self, i: usize, j: usize) -> (Arrow, Arrow, Arrow, Arrow) {
        let io = |b: bool| if b { Arrow::In } else { Arrow::Out };
        let left = io(self.right(i, j - 1));
        let below = io(self.up(i + 1, j));
        let right = io(!self.right(i, j));
        let above = io(!self.up(i, j));
        (left, below, right, above)
    }

    /// The local configuration at `(i, j)`; `i = 0` gives a top vertex.
    pub fn local(&self, i: usize, j: usize) -> Result<LocalConfig> {
        let n = self.n;
        let io = |b: bool| if b { Arrow::In } else { Arrow::Out };
        if i == 0 {
            return Ok(LocalConfig::Top);
        }
        if i == n + 1 && j == n + 1 {
            return Ok(LocalConfig::Bottom { up: self.up(i, j) });
        }
        if i > n || j < i || j > 2 * n + 2 - i {
            return Err(Error::Input(format!("({i}, {j}) is not a vertex")));
        }
        let up_arrow = io(!self.up(i, j));
        if j == i {
            return Ok(LocalConfig::Left(Boundary::classify(up_arrow, io(!self.right(i, j)))));
        }
        if j == 2 * n + 2 - i {
            return Ok(LocalConfig::Right(Boundary::classify(up_arrow, io(self.right(i, j - 1)))));
        }
        let (l, b, r, a) = self.arrows_at(i, j);
        Bulk::classify(l, b, r, a)
            .map(LocalConfig::Bulk)
            .ok_or_else(|| Error::Input(format!("six-vertex rule fails at ({i}, {j})")))
    }

    fn validate(&self) -> Result<()> {
        if !self.up.iter().all(|c| c[0]) {
            return Err(Error::Input("every top edge must point up".into()));
        }
        for i in 1..=self.n {
            for j in i + 1..2 * self.n + 2 - i {
                self.local(i, j)?;
            }
        }
        Ok(())
    }
}

pub fn config_from_triangle(t: &OddDasasmTriangle) -> SixVertexConfig {
    let n = t.n;
    let mut c = SixVertexConfig::blank(n);
    for j in 1..=2 * n + 1 {
        let mut s = 0i8;
        for i in 1..=SixVertexConfig::column_depth(n, j) {
            c.up[j - 1][i - 1] = s == 0;
            s += t.get(i, j);
        }
    }
    for i in 1..=n {
        // Entries left of column i in row i equal column i above row i.
        let mut s: i8 = (1..i).map(|k| t.get(k, i)).sum();
        for j in i..2 * n + 2 - i {
            s += t.get(i, j);
            c.right[i - 1][j - i] = s == 0;
        }
    }
    c
}

pub fn triangle_from_config(c: &SixVertexConfig) -> Result<OddDasasmTriangle> {
    let n = c.n;
    let mut rows = Vec::with_capacity(n + 1);
    for i in 1..=n + 1 {
        let mut row = Vec::new();
        for j in i..=2 * n + 2 - i {
            row.push(c.local(i, j)?.entry().expect("grid vertex carries an entry"));
        }
        rows.push(row);
    }
    OddDasasmTriangle::new(rows)
}
