//! Symbolic checks of the weight symmetries and of the Yang–Baxter,
//! reflection and boundary unitarity relations.
//!
//! Everything is a Laurent polynomial in `q = x_0`, `u = x_1`, `v = x_2`,
//! `w = x_3`, using cleared weights. Both sides of each relation carry the
//! same number of bulk and boundary vertices, so clearing does not change
//! the identity.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::WeightContext;
use crate::arith::{sigma, LaurentPoly, Rational, Ring};
use crate::bijection::{Arrow, Boundary, Bulk, LocalConfig};
use crate::error::{Error, Result};
use crate::report::Report;

type P = LaurentPoly<Rational>;

fn name(a: Arrow) -> &'static str {
    match a {
        Arrow::In => "in",
        Arrow::Out => "out",
    }
}

/// Cleared bulk weight for `(left, below, right, above)`; zero off the six
/// legal tuples.
pub fn bulk_cleared_at<R: Ring>(ctx: &WeightContext<R>, arrows: [Arrow; 4], u: &R) -> Result<R> {
    match Bulk::classify(arrows[0], arrows[1], arrows[2], arrows[3]) {
        Some(b) => Ok(ctx.weight_cleared(LocalConfig::Bulk(b), u)?),
        None => Ok(R::zero()),
    }
}

/// Cleared left boundary weight for `(up, right)`.
pub fn left_cleared_at<R: Ring>(ctx: &WeightContext<R>, up: Arrow, side: Arrow, u: &R) -> Result<R> {
    Ok(ctx.weight_cleared(LocalConfig::Left(Boundary::classify(up, side)), u)?)
}

/// Cleared right boundary weight for `(left, up)`.
pub fn right_cleared_at<R: Ring>(ctx: &WeightContext<R>, side: Arrow, up: Arrow, u: &R) -> Result<R> {
    Ok(ctx.weight_cleared(LocalConfig::Right(Boundary::classify(up, side)), u)?)
}

struct Symbols {
    ctx: WeightContext<P>,
    q: P,
    u: P,
    v: P,
    w: P,
}

impl Symbols {
    fn new() -> Self {
        Symbols {
            ctx: WeightContext::new(P::var(0)).expect("q is a unit"),
            q: P::var(0),
            u: P::var(1),
            v: P::var(2),
            w: P::var(3),
        }
    }

    fn bar(x: &P) -> P {
        x.inv().expect("monomial")
    }
}

fn tuples(k: usize) -> impl Iterator<Item = Vec<Arrow>> {
    (0..1usize << k)
        .map(move |m| (0..k).map(|i| if m >> (k - 1 - i) & 1 == 0 { Arrow::In } else { Arrow::Out }).collect())
}

fn render_tuple(t: &[Arrow]) -> String {
    format!("({})", t.iter().map(|&a| name(a)).collect::<Vec<_>>().join(","))
}

fn rev(a: Arrow) -> Arrow {
    a.reversed()
}

fn delta(a: Arrow, b: Arrow) -> bool {
    a == b
}

/// Invariance under diagonal reflection and arrow reversal, vertical
/// reflection with `u → ū`, and reduction at `q^{±2}` (bulk) and `q^{±1}`
/// (boundary), for every orientation tuple.
pub fn verify_weight_symmetries() -> Result<Report> {
    let s = Symbols::new();
    let ctx = &s.ctx;
    let u = &s.u;
    let ubar = Symbols::bar(u);
    let q2 = s.q.clone() * &s.q;
    let q2bar = Symbols::bar(&q2);
    let qbar = Symbols::bar(&s.q);
    let mut report = Report::new();

    for t in tuples(4) {
        let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
        let w = |x: [Arrow; 4], p: &P| bulk_cleared_at(ctx, x, p);
        let base = w([a, b, c, d], u)?;
        let case = format!("bulk {}", render_tuple(&t));
        let refl = base == w([d, c, b, a], u)?
            && base == w([b, a, d, c], u)?
            && base == w([rev(a), rev(b), rev(c), rev(d)], u)?;
        report.check("weight-reflection-reversal", case.clone(), refl);
        report.check("weight-vertical-reflection", case.clone(), base == w([c, b, a, d], &ubar)?);
        let expected = if delta(a, rev(d)) && delta(b, rev(c)) { ctx.sigma_q4().clone() } else { P::zero() };
        let red = w([a, b, c, d], &q2)? == expected && w([c, b, a, d], &q2bar)? == expected;
        report.check("weight-reduction", case, red);
    }

    for t in tuples(2) {
        let (a, b) = (t[0], t[1]);
        let case = format!("boundary {}", render_tuple(&t));
        let l = |x: Arrow, y: Arrow, p: &P| left_cleared_at(ctx, x, y, p);
        let r = |x: Arrow, y: Arrow, p: &P| right_cleared_at(ctx, x, y, p);
        let refl = l(a, b, u)? == l(b, a, u)?
            && l(a, b, u)? == l(rev(a), rev(b), u)?
            && r(a, b, u)? == r(b, a, u)?
            && r(a, b, u)? == r(rev(a), rev(b), u)?;
        report.check("weight-reflection-reversal", case.clone(), refl);
        report.check("weight-vertical-reflection", case.clone(), l(a, b, u)? == r(b, a, &ubar)?);
        let expected = if delta(a, rev(b)) { ctx.sigma_q().clone() } else { P::zero() };
        let red = l(a, b, &qbar)? == expected && r(b, a, &s.q)? == expected;
        report.check("weight-reduction", case, red);
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LocalRelation {
    YbeVertical,
    YbeHorizontal,
    ReLeft,
    ReRight,
    BueLeft,
    BueRight,
}

impl LocalRelation {
    pub const ALL: [LocalRelation; 6] = [
        LocalRelation::YbeVertical,
        LocalRelation::YbeHorizontal,
        LocalRelation::ReLeft,
        LocalRelation::ReRight,
        LocalRelation::BueLeft,
        LocalRelation::BueRight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LocalRelation::YbeVertical => "YBE-vertical",
            LocalRelation::YbeHorizontal => "YBE-horizontal",
            LocalRelation::ReLeft => "RE-left",
            LocalRelation::ReRight => "RE-right",
            LocalRelation::BueLeft => "BUE-left",
            LocalRelation::BueRight => "BUE-right",
        }
    }
}

impl fmt::Display for LocalRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LocalRelation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LocalRelation::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown relation {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Bulk,
    Left,
    Right,
}

/// A vertex of a relation graph. Slots are `(left, below, right, above)` for
/// bulk vertices, `(up, right)` for left boundary vertices and `(left, up)`
/// for right boundary vertices; each names an external label or an internal
/// edge shared with exactly one other slot.
struct Node {
    kind: Kind,
    param: P,
    slots: Vec<&'static str>,
}

fn node(kind: Kind, param: P, slots: &[&'static str]) -> Node {
    Node { kind, param, slots: slots.to_vec() }
}

struct Graph {
    external: Vec<&'static str>,
    nodes: Vec<Node>,
}

/// One nonzero term of a graph sum: local configurations in node order and
/// the product of their cleared weights.
pub type Term = (Vec<LocalConfig>, LaurentPoly<Rational>);

impl Graph {
    fn terms(&self, ctx: &WeightContext<P>, ext: &[Arrow]) -> Result<Vec<Term>> {
        // Internal edges get an index; the first slot naming one is its "first" end.
        let mut internal: HashMap<&str, usize> = HashMap::new();
        let mut seen: HashMap<&str, usize> = HashMap::new();
        for nd in &self.nodes {
            for &s in &nd.slots {
                if !self.external.contains(&s) {
                    let k = internal.len();
                    internal.entry(s).or_insert(k);
                    *seen.entry(s).or_default() += 1;
                }
            }
        }
        if let Some((e, c)) = seen.iter().find(|(_, &c)| c != 2) {
            return Err(Error::Input(format!("internal edge {e} has {c} endpoints")));
        }
        let m = internal.len();
        let mut out = Vec::new();
        for state in 0..1usize << m {
            let mut first_seen: HashMap<&str, bool> = HashMap::new();
            let mut configs = Vec::with_capacity(self.nodes.len());
            let mut weight = P::one();
            for nd in &self.nodes {
                let arrows: Vec<Arrow> = nd
                    .slots
                    .iter()
                    .map(|&s| {
                        if let Some(k) = self.external.iter().position(|&e| e == s) {
                            ext[k]
                        } else {
                            let bit = state >> internal[s] & 1 == 1;
                            let is_first = !first_seen.contains_key(s);
                            first_seen.insert(s, true);
                            if bit == is_first {
                                Arrow::In
                            } else {
                                Arrow::Out
                            }
                        }
                    })
                    .collect();
                let c = match nd.kind {
                    Kind::Bulk => match Bulk::classify(arrows[0], arrows[1], arrows[2], arrows[3]) {
                        Some(b) => LocalConfig::Bulk(b),
                        None => {
                            weight = P::zero();
                            break;
                        }
                    },
                    Kind::Left => LocalConfig::Left(Boundary::classify(arrows[0], arrows[1])),
                    Kind::Right => LocalConfig::Right(Boundary::classify(arrows[1], arrows[0])),
                };
                weight *= &ctx.weight_cleared(c, &nd.param)?;
                configs.push(c);
            }
            if !weight.is_zero() {
                out.push((configs, weight));
            }
        }
        Ok(out)
    }

    fn sum(&self, ctx: &WeightContext<P>, ext: &[Arrow]) -> Result<P> {
        Ok(self.terms(ctx, ext)?.into_iter().fold(P::zero(), |acc, (_, w)| acc + &w))
    }
}

enum Rhs {
    Graph(Graph),
    /// `σ(qu)σ(qū)·δ_{a,b̃}` times `σ(q)²`.
    Unitarity,
}

fn relation_graphs(rel: LocalRelation, s: &Symbols) -> (Graph, Rhs) {
    use Kind::*;
    let (q, u, v, w) = (&s.q, &s.u, &s.v, &s.w);
    let q2 = q.clone() * q;
    let cross = q2 * u * &Symbols::bar(v);
    let uv = u.clone() * v;
    let uw = u.clone() * w;
    let vw = v.clone() * w;
    let ybe_ext = vec!["a1", "a2", "a3", "b1", "b2", "b3"];
    let re_ext = vec!["a1", "a2", "b1", "b2"];
    match rel {
        LocalRelation::YbeVertical => (
            Graph {
                external: ybe_ext.clone(),
                nodes: vec![
                    node(Bulk, cross.clone(), &["r", "b", "a2", "a1"]),
                    node(Bulk, vw.clone(), &["a3", "b2", "g", "r"]),
                    node(Bulk, uw.clone(), &["g", "b1", "b3", "b"]),
                ],
            },
            Rhs::Graph(Graph {
                external: ybe_ext,
                nodes: vec![
                    node(Bulk, uw, &["a3", "b", "g", "a1"]),
                    node(Bulk, vw, &["g", "r", "b3", "a2"]),
                    node(Bulk, cross, &["b2", "b1", "r", "b"]),
                ],
            }),
        ),
        LocalRelation::YbeHorizontal => (
            Graph {
                external: ybe_ext.clone(),
                nodes: vec![
                    node(Bulk, cross.clone(), &["a1", "a2", "b", "r"]),
                    node(Bulk, uw.clone(), &["b", "a3", "b1", "g"]),
                    node(Bulk, vw.clone(), &["r", "g", "b2", "b3"]),
                ],
            },
            Rhs::Graph(Graph {
                external: ybe_ext,
                nodes: vec![
                    node(Bulk, vw, &["a2", "a3", "r", "g"]),
                    node(Bulk, uw, &["a1", "g", "b", "b3"]),
                    node(Bulk, cross, &["b", "r", "b1", "b2"]),
                ],
            }),
        ),
        LocalRelation::ReLeft => (
            Graph {
                external: re_ext.clone(),
                nodes: vec![
                    node(Bulk, cross.clone(), &["rx", "bx", "a2", "a1"]),
                    node(Bulk, uv.clone(), &["rh", "bv", "b2", "bx"]),
                    node(Left, v.clone(), &["rx", "rh"]),
                    node(Left, u.clone(), &["bv", "b1"]),
                ],
            },
            Rhs::Graph(Graph {
                external: re_ext,
                nodes: vec![
                    node(Left, u.clone(), &["a1", "bh"]),
                    node(Bulk, uv, &["bh", "rv", "bx", "a2"]),
                    node(Left, v.clone(), &["rv", "rx"]),
                    node(Bulk, cross, &["bx", "rx", "b1", "b2"]),
                ],
            }),
        ),
        LocalRelation::ReRight => (
            Graph {
                external: re_ext.clone(),
                nodes: vec![
                    node(Bulk, cross.clone(), &["a1", "a2", "bx", "rx"]),
                    node(Right, u.clone(), &["bx", "bv"]),
                    node(Bulk, uv.clone(), &["rx", "bv", "rh", "b1"]),
                    node(Right, v.clone(), &["rh", "b2"]),
                ],
            },
            Rhs::Graph(Graph {
                external: re_ext,
                nodes: vec![
                    node(Right, v.clone(), &["a2", "rv"]),
                    node(Bulk, uv, &["a1", "rv", "bh", "rx"]),
                    node(Right, u.clone(), &["bh", "bx"]),
                    node(Bulk, cross, &["rx", "bx", "b2", "b1"]),
                ],
            }),
        ),
        LocalRelation::BueLeft => {
            let qbar = Symbols::bar(q);
            (
                Graph {
                    external: vec!["a", "b"],
                    nodes: vec![
                        node(Left, qbar.clone() * u, &["a", "e"]),
                        node(Left, qbar * &Symbols::bar(u), &["e", "b"]),
                    ],
                },
                Rhs::Unitarity,
            )
        }
        LocalRelation::BueRight => (
            Graph {
                external: vec!["a", "b"],
                nodes: vec![
                    node(Right, q.clone() * u, &["a", "e"]),
                    node(Right, q.clone() * &Symbols::bar(u), &["e", "b"]),
                ],
            },
            Rhs::Unitarity,
        ),
    }
}

/// Every external orientation of `rel`, each as one report record.
pub fn verify_local_relation(rel: LocalRelation) -> Result<Report> {
    let s = Symbols::new();
    let (lhs, rhs) = relation_graphs(rel, &s);
    let mut report = Report::new();
    let k = lhs.external.len();
    for ext in tuples(k) {
        let l = lhs.sum(&s.ctx, &ext)?;
        let r = match &rhs {
            Rhs::Graph(g) => g.sum(&s.ctx, &ext)?,
            Rhs::Unitarity => {
                if ext[0] == ext[1].reversed() {
                    let qu = s.q.clone() * &s.u;
                    let qubar = s.q.clone() * &Symbols::bar(&s.u);
                    sigma(&qu)? * &sigma(&qubar)?
                } else {
                    P::zero()
                }
            }
        };
        let labels: Vec<String> = lhs.external.iter().zip(&ext).map(|(n, &a)| format!("{n}={}", name(a))).collect();
        let ok = l == r;
        let witness = (!ok).then(|| format!("lhs - rhs = {}", (l - &r).render(&["q", "u", "v", "w"])));
        report.push(rel.name(), labels.join(","), crate::report::Status::from_bool(ok), witness);
    }
    Ok(report)
}

/// Nonzero terms on each side of a relation for one external orientation.
pub fn relation_terms(rel: LocalRelation, ext: &[Arrow]) -> Result<(Vec<Term>, Option<Vec<Term>>)> {
    let s = Symbols::new();
    let (lhs, rhs) = relation_graphs(rel, &s);
    if ext.len() != lhs.external.len() {
        return Err(Error::Input(format!("{rel} has {} external edges", lhs.external.len())));
    }
    let r = match rhs {
        Rhs::Graph(g) => Some(g.terms(&s.ctx, ext)?),
        Rhs::Unitarity => None,
    };
    Ok((lhs.terms(&s.ctx, ext)?, r))
}
