//! Closed-form `depth`, `sdepth` and `pdim` of `S/I(G)` for the supported
//! graph families, in integer arithmetic.
//!
//! Every report carries a `source` tag naming the family and the branch
//! (residue class, parity) that produced it.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{GraphSpec, LadderFamily};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("{family} is not defined for parameter {param}: {reason}")]
    OutOfRange { family: &'static str, param: usize, reason: &'static str },
    #[error("no closed form for {0}")]
    NoFormula(String),
}

fn out_of_range(family: &'static str, param: usize, reason: &'static str) -> FormulaError {
    FormulaError::OutOfRange { family, param, reason }
}

/// `⌈a / b⌉` for `b > 0`.
#[inline]
pub const fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaValue {
    Exact(usize),
    Bounds(usize, usize),
    LowerBound(usize),
}

impl FormulaValue {
    fn bounds(lo: usize, hi: usize) -> Self {
        debug_assert!(lo <= hi);
        if lo == hi {
            FormulaValue::Exact(lo)
        } else {
            FormulaValue::Bounds(lo, hi)
        }
    }

    pub fn lo(self) -> usize {
        match self {
            FormulaValue::Exact(v) | FormulaValue::Bounds(v, _) | FormulaValue::LowerBound(v) => v,
        }
    }

    pub fn hi(self) -> Option<usize> {
        match self {
            FormulaValue::Exact(v) | FormulaValue::Bounds(_, v) => Some(v),
            FormulaValue::LowerBound(_) => None,
        }
    }

    pub fn exact(self) -> Option<usize> {
        match self {
            FormulaValue::Exact(v) => Some(v),
            _ => None,
        }
    }

    /// Whether `v` is consistent with this value.
    pub fn admits(self, v: usize) -> bool {
        v >= self.lo() && self.hi().is_none_or(|h| v <= h)
    }
}

impl fmt::Display for FormulaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaValue::Exact(v) => write!(f, "{v}"),
            FormulaValue::Bounds(lo, hi) => write!(f, "[{lo}, {hi}]"),
            FormulaValue::LowerBound(lo) => write!(f, ">= {lo}"),
        }
    }
}

/// `{"exact": v}`, `{"lo": a, "hi": b}` or `{"lo": a}`.
impl Serialize for FormulaValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        match *self {
            FormulaValue::Exact(v) => m.serialize_entry("exact", &v)?,
            FormulaValue::Bounds(lo, hi) => {
                m.serialize_entry("lo", &lo)?;
                m.serialize_entry("hi", &hi)?;
            }
            FormulaValue::LowerBound(lo) => m.serialize_entry("lo", &lo)?,
        }
        m.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaReport {
    pub depth: FormulaValue,
    pub sdepth: FormulaValue,
    pub pdim: FormulaValue,
    pub vertices: usize,
    pub source: String,
}

impl FormulaReport {
    /// Build from an exact depth, with `pdim = vertices - depth`.
    fn exact_depth(vertices: usize, depth: usize, sdepth: FormulaValue, source: String) -> Self {
        FormulaReport {
            depth: FormulaValue::Exact(depth),
            sdepth,
            pdim: FormulaValue::Exact(vertices - depth),
            vertices,
            source,
        }
    }

    pub fn depth_value(&self) -> usize {
        self.depth.lo()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseFamily {
    Path,
    Cycle,
    /// `q` vertices: one centre and `q - 1` leaves.
    Star,
    Complete,
}

pub fn base_family_invariants(family: BaseFamily, q: usize) -> Result<FormulaReport, FormulaError> {
    let r = match family {
        BaseFamily::Path => {
            if q == 0 {
                return Err(out_of_range("path", q, "needs at least one vertex"));
            }
            let d = ceil_div(q, 3);
            FormulaReport::exact_depth(q, d, FormulaValue::Exact(d), "path".into())
        }
        BaseFamily::Cycle => {
            if q < 3 {
                return Err(out_of_range("cycle", q, "needs at least three vertices"));
            }
            let d = ceil_div(q - 1, 3);
            let (sd, tag) = match q % 3 {
                1 => (FormulaValue::bounds(d, ceil_div(q, 3)), "cycle q≡1 mod 3"),
                _ => (FormulaValue::Exact(d), "cycle q≢1 mod 3"),
            };
            FormulaReport::exact_depth(q, d, sd, tag.into())
        }
        BaseFamily::Star => {
            if q < 2 {
                return Err(out_of_range("star", q, "needs a centre and a leaf"));
            }
            FormulaReport::exact_depth(q, 1, FormulaValue::Exact(1), "star".into())
        }
        BaseFamily::Complete => {
            if q == 0 {
                return Err(out_of_range("complete", q, "needs at least one vertex"));
            }
            FormulaReport::exact_depth(q, 1, FormulaValue::Exact(1), "complete".into())
        }
    };
    Ok(r)
}

pub fn ladder_invariants(family: LadderFamily, n: usize) -> Result<FormulaReport, FormulaError> {
    if n < family.min_n() {
        return Err(out_of_range("ladder", n, "below the smallest member of the family"));
    }
    let v = family.vertex_count(n);
    let r = match family {
        LadderFamily::A => {
            let d = ceil_div(n, 2);
            let (sd, tag) = if n % 2 == 1 {
                (FormulaValue::Exact(d), "ladder-A n odd")
            } else {
                (FormulaValue::bounds(d, ceil_div(n + 1, 2)), "ladder-A n even")
            };
            debug_assert_eq!(v - d, 3 * n / 2);
            FormulaReport::exact_depth(v, d, sd, tag.into())
        }
        LadderFamily::B => {
            let d = ceil_div(n + 1, 2);
            FormulaReport::exact_depth(v, d, FormulaValue::Exact(d), "ladder-B".into())
        }
        LadderFamily::C => {
            let (d, tag) = match n % 4 {
                0 | 3 => (ceil_div(n, 2) + 1, "ladder-C n≡0,3 mod 4"),
                1 => (ceil_div(n + 1, 2), "ladder-C n≡1 mod 4"),
                _ => (ceil_div(n + 1, 2) + 1, "ladder-C n≡2 mod 4"),
            };
            FormulaReport::exact_depth(v, d, FormulaValue::Exact(d), tag.into())
        }
        LadderFamily::D => {
            let (d, tag) = match n % 4 {
                0 | 1 => (ceil_div(n + 1, 2) + 1, "ladder-D n≡0,1 mod 4"),
                _ => (ceil_div(n + 1, 2), "ladder-D n≡2,3 mod 4"),
            };
            FormulaReport::exact_depth(v, d, FormulaValue::Exact(d), tag.into())
        }
    };
    Ok(r)
}

/// The two connected cubic circulants every `C_{2n}(a, n)` splits into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CubicKind {
    /// `C_{2n}(1, n)`, the Möbius ladder.
    OneN,
    /// `C_{2n}(2, n)` with `n` odd, the prism.
    TwoN,
}

pub fn cubic_connected_invariants(kind: CubicKind, n: usize) -> Result<FormulaReport, FormulaError> {
    let v = 2 * n;
    let r = match kind {
        CubicKind::OneN => {
            if n < 2 {
                return Err(out_of_range("C_2n(1,n)", n, "needs n ≥ 2"));
            }
            let (d, sd, tag) = match n % 4 {
                1 => (ceil_div(n, 2), FormulaValue::Exact(ceil_div(n, 2)), "C_2n(1,n) n≡1 mod 4"),
                2 => (ceil_div(n - 1, 2), FormulaValue::Exact(ceil_div(n - 1, 2)), "C_2n(1,n) n≡2 mod 4"),
                _ => {
                    let d = ceil_div(n - 1, 2);
                    (d, FormulaValue::bounds(d, ceil_div(n, 2) + 1), "C_2n(1,n) n≡0,3 mod 4")
                }
            };
            FormulaReport::exact_depth(v, d, sd, tag.into())
        }
        CubicKind::TwoN => {
            if n < 3 || n.is_multiple_of(2) {
                return Err(out_of_range("C_2n(2,n)", n, "connected only for odd n ≥ 3"));
            }
            let (d, sd, tag) = match n % 4 {
                1 => {
                    let d = ceil_div(n - 1, 2);
                    (d, FormulaValue::bounds(d, ceil_div(n, 2) + 1), "C_2n(2,n) n≡1 mod 4")
                }
                _ => (ceil_div(n, 2), FormulaValue::Exact(ceil_div(n, 2)), "C_2n(2,n) n≡3 mod 4"),
            };
            FormulaReport::exact_depth(v, d, sd, tag.into())
        }
    };
    Ok(r)
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `C_{2n}(a, n)` for any `1 ≤ a < n`.
///
/// When the graph is connected the sdepth of the connected formula is used.
/// Otherwise sdepth is only bounded below by the depth: Stanley depth is
/// superadditive over disjoint unions, not known to be additive.
pub fn cubic_general_invariants(n: usize, a: usize) -> Result<FormulaReport, FormulaError> {
    if n < 2 {
        return Err(out_of_range("C_2n(a,n)", n, "needs n ≥ 2"));
    }
    if a == 0 || a >= n {
        return Err(out_of_range("C_2n(a,n)", a, "needs 1 ≤ a < n"));
    }
    let t = gcd(2 * n, a);
    let m = 2 * n / t;
    let (depth, copies, component, tag) = if m.is_multiple_of(2) {
        let d = if (n / t) % 4 == 1 { ceil_div(n, 2 * t) * t } else { ceil_div(n - t, 2 * t) * t };
        (d, t, cubic_connected_invariants(CubicKind::OneN, n / t)?, format!("C_2n(a,n) t={t} 2n/t even"))
    } else {
        let d = if m % 4 == 1 { ceil_div(2 * n - t, 2 * t) * (t / 2) } else { ceil_div(n, t) * (t / 2) };
        (d, t / 2, cubic_connected_invariants(CubicKind::TwoN, m)?, format!("C_2n(a,n) t={t} 2n/t odd"))
    };
    let sdepth = if copies == 1 { component.sdepth } else { FormulaValue::LowerBound(depth) };
    Ok(FormulaReport::exact_depth(
        2 * n,
        depth,
        sdepth,
        format!("{tag}, {copies} × [{}]", component.source),
    ))
}

/// Formula for any spec that names a supported family; unions add depths.
pub fn formula_for_spec(spec: &GraphSpec) -> Result<FormulaReport, FormulaError> {
    match spec {
        GraphSpec::Path(q) => base_family_invariants(BaseFamily::Path, *q),
        GraphSpec::Cycle(q) => base_family_invariants(BaseFamily::Cycle, *q),
        GraphSpec::Star(q) => base_family_invariants(BaseFamily::Star, *q),
        GraphSpec::Complete(q) => base_family_invariants(BaseFamily::Complete, *q),
        GraphSpec::Ladder(f, n) => ladder_invariants(*f, *n),
        GraphSpec::CubicCirculant { n, a } => cubic_general_invariants(*n, *a),
        GraphSpec::Circulant { order, jumps } => {
            let js: Vec<usize> = jumps.iter().copied().collect();
            match js.as_slice() {
                [1] if *order >= 3 => base_family_invariants(BaseFamily::Cycle, *order),
                &[a, n] if order % 2 == 0 && n == order / 2 && a < n => cubic_general_invariants(n, a),
                _ => Err(FormulaError::NoFormula(spec.to_string())),
            }
        }
        GraphSpec::DisjointUnion(parts) => {
            let reports = parts.iter().map(formula_for_spec).collect::<Result<Vec<_>, _>>()?;
            if let [only] = reports.as_slice() {
                return Ok(only.clone());
            }
            let vertices = reports.iter().map(|r| r.vertices).sum();
            let depth = reports.iter().map(|r| r.depth.lo()).sum();
            let sdepth = reports.iter().map(|r| r.sdepth.lo()).sum();
            let source = reports.iter().map(|r| r.source.as_str()).collect::<Vec<_>>().join(" + ");
            Ok(FormulaReport::exact_depth(vertices, depth, FormulaValue::LowerBound(sdepth), format!("union: {source}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{decompose_cubic_circulant, Parity};
    use FormulaValue::*;

    #[test]
    fn base_examples() {
        assert_eq!(base_family_invariants(BaseFamily::Path, 4).unwrap().depth, Exact(2));
        let c7 = base_family_invariants(BaseFamily::Cycle, 7).unwrap();
        assert_eq!((c7.depth, c7.sdepth), (Exact(2), Bounds(2, 3)));
        assert_eq!(base_family_invariants(BaseFamily::Star, 9).unwrap().depth, Exact(1));
        assert_eq!(base_family_invariants(BaseFamily::Complete, 4).unwrap().pdim, Exact(3));
        assert!(base_family_invariants(BaseFamily::Cycle, 2).is_err());
        assert!(base_family_invariants(BaseFamily::Star, 1).is_err());
    }

    #[test]
    fn ladder_examples() {
        let b5 = ladder_invariants(LadderFamily::B, 5).unwrap();
        assert_eq!((b5.depth, b5.pdim), (Exact(3), Exact(8)));
        let c6 = ladder_invariants(LadderFamily::C, 6).unwrap();
        assert_eq!((c6.depth, c6.pdim), (Exact(5), Exact(9)));
        let d4 = ladder_invariants(LadderFamily::D, 4).unwrap();
        assert_eq!((d4.depth, d4.pdim), (Exact(4), Exact(6)));
        let a4 = ladder_invariants(LadderFamily::A, 4).unwrap();
        assert_eq!((a4.depth, a4.pdim, a4.sdepth), (Exact(2), Exact(6), Bounds(2, 3)));
        assert!(ladder_invariants(LadderFamily::A, 0).is_err());
    }

    #[test]
    fn pdim_closed_forms() {
        // pdim stated directly: ⌊3n/2⌋ for A, 2n - ⌈(n+1)/2⌉ + 1 for B, piecewise for C and D
        for n in 1..40 {
            let p = |f| ladder_invariants(f, n).unwrap().pdim.exact().unwrap();
            assert_eq!(p(LadderFamily::A), 3 * n / 2);
            assert_eq!(p(LadderFamily::B), 2 * n - ceil_div(n + 1, 2) + 1);
            let c = match n % 4 {
                0 | 3 => 2 * n - ceil_div(n, 2) + 1,
                1 => 2 * n - ceil_div(n + 1, 2) + 2,
                _ => 2 * n - ceil_div(n + 1, 2) + 1,
            };
            assert_eq!(p(LadderFamily::C), c, "C_{n}");
            let d = if n % 4 <= 1 { 2 * n - ceil_div(n + 1, 2) + 1 } else { 2 * n - ceil_div(n + 1, 2) + 2 };
            assert_eq!(p(LadderFamily::D), d, "D_{n}");
        }
        for n in 2..40 {
            let p = cubic_connected_invariants(CubicKind::OneN, n).unwrap().pdim.exact().unwrap();
            assert_eq!(p, if n % 4 == 1 { 2 * n - ceil_div(n, 2) } else { 2 * n - ceil_div(n - 1, 2) });
        }
    }

    #[test]
    fn small_ladders_match_their_base_graphs() {
        let pairs = [
            (ladder_invariants(LadderFamily::A, 1), base_family_invariants(BaseFamily::Path, 2)),
            (ladder_invariants(LadderFamily::B, 0), base_family_invariants(BaseFamily::Path, 1)),
            (ladder_invariants(LadderFamily::B, 1), base_family_invariants(BaseFamily::Path, 3)),
            (ladder_invariants(LadderFamily::C, 1), base_family_invariants(BaseFamily::Star, 4)),
            (ladder_invariants(LadderFamily::D, 1), base_family_invariants(BaseFamily::Path, 4)),
        ];
        for (l, b) in pairs {
            let (l, b) = (l.unwrap(), b.unwrap());
            assert_eq!((l.depth, l.pdim, l.vertices), (b.depth, b.pdim, b.vertices), "{}", l.source);
        }
    }

    #[test]
    fn cubic_examples() {
        let m5 = cubic_connected_invariants(CubicKind::OneN, 5).unwrap();
        assert_eq!((m5.depth, m5.sdepth), (Exact(3), Exact(3)));
        let m4 = cubic_connected_invariants(CubicKind::OneN, 4).unwrap();
        assert_eq!((m4.depth, m4.sdepth), (Exact(2), Bounds(2, 3)));
        assert_eq!(cubic_connected_invariants(CubicKind::TwoN, 3).unwrap().depth, Exact(2));
        assert_eq!(cubic_connected_invariants(CubicKind::TwoN, 5).unwrap().depth, Exact(2));
        assert!(cubic_connected_invariants(CubicKind::TwoN, 4).is_err());

        let g62 = cubic_general_invariants(6, 2).unwrap();
        assert_eq!((g62.depth, g62.pdim), (Exact(2), Exact(10)));
        assert_eq!(cubic_general_invariants(2, 1).unwrap().depth, Exact(1));
        assert_eq!(cubic_general_invariants(5, 2).unwrap().depth, Exact(2));
        assert_eq!(cubic_general_invariants(6, 3).unwrap().depth, Exact(3));
        assert!(cubic_general_invariants(4, 4).is_err());
        assert!(cubic_general_invariants(4, 0).is_err());
    }

    #[test]
    fn general_formula_is_copies_times_component() {
        for n in 2..=10 {
            for a in 1..n {
                let r = decompose_cubic_circulant(n, a).unwrap();
                let comp = match r.parity {
                    Parity::Even => cubic_connected_invariants(CubicKind::OneN, n / r.t),
                    Parity::Odd => cubic_connected_invariants(CubicKind::TwoN, 2 * n / r.t),
                }
                .unwrap();
                let general = cubic_general_invariants(n, a).unwrap();
                assert_eq!(general.depth_value(), r.copy_count * comp.depth_value(), "n={n} a={a}");
                assert_eq!(general.vertices, r.copy_count * comp.vertices);
            }
        }
    }

    #[test]
    fn report_invariants_hold_everywhere() {
        let mut reports = Vec::new();
        for q in 1..30 {
            for f in [BaseFamily::Path, BaseFamily::Cycle, BaseFamily::Star, BaseFamily::Complete] {
                reports.extend(base_family_invariants(f, q).ok());
            }
            for f in LadderFamily::ALL {
                reports.extend(ladder_invariants(f, q).ok());
            }
            for k in [CubicKind::OneN, CubicKind::TwoN] {
                reports.extend(cubic_connected_invariants(k, q).ok());
            }
            for a in 1..q {
                reports.push(cubic_general_invariants(q, a).unwrap());
            }
        }
        for r in &reports {
            let d = r.depth.exact().unwrap();
            assert_eq!(r.pdim.exact().unwrap() + d, r.vertices, "{}", r.source);
            assert!(d >= 1, "{}", r.source);
            // every lower bound is the depth value
            assert_eq!(r.sdepth.lo(), d, "{}", r.source);
            if let Bounds(lo, hi) = r.sdepth {
                assert!(lo < hi);
            }
        }
    }

    #[test]
    fn spec_routing() {
        let f = |s: &str| formula_for_spec(&s.parse().unwrap());
        assert_eq!(f("circulant:8:1").unwrap(), f("cycle:8").unwrap());
        assert_eq!(f("circulant:10:2,5").unwrap().depth, f("cubic:5:2").unwrap().depth);
        assert!(matches!(f("circulant:7:1,3"), Err(FormulaError::NoFormula(_))));
        let u = f("union:(path:4;cycle:5;path:1)").unwrap();
        assert_eq!((u.depth, u.pdim, u.sdepth, u.vertices), (Exact(5), Exact(5), LowerBound(5), 10));
    }

    #[test]
    fn value_helpers() {
        assert!(Bounds(2, 3).admits(3) && !Bounds(2, 3).admits(4));
        assert!(LowerBound(2).admits(100) && !LowerBound(2).admits(1));
        assert_eq!(serde_json::to_string(&Bounds(2, 3)).unwrap(), r#"{"lo":2,"hi":3}"#);
        assert_eq!(Exact(4).to_string(), "4");
    }
}
