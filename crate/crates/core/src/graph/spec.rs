//! The closed set of graph families and their textual grammar.
//!
//! ```text
//! path:Q  cycle:Q  star:Q  complete:Q  circulant:Q:a1,a2,..  cubic:N:A
//! ladderA:N  ladderB:N  ladderC:N  ladderD:N  union:(spec;spec;..)
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::GraphError;
use crate::bitset::MAX_VERTICES;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LadderFamily {
    A,
    B,
    C,
    D,
}

impl LadderFamily {
    pub const ALL: [LadderFamily; 4] = [LadderFamily::A, LadderFamily::B, LadderFamily::C, LadderFamily::D];

    /// Smallest admissible `n`.
    pub fn min_n(self) -> usize {
        match self {
            LadderFamily::B => 0,
            _ => 1,
        }
    }

    /// Vertex count of the `n`-th member.
    pub fn vertex_count(self, n: usize) -> usize {
        match self {
            LadderFamily::A => 2 * n,
            LadderFamily::B => 2 * n + 1,
            LadderFamily::C | LadderFamily::D => 2 * n + 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            LadderFamily::A => 'A',
            LadderFamily::B => 'B',
            LadderFamily::C => 'C',
            LadderFamily::D => 'D',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    /// `C_q(S)`.
    Circulant { order: usize, jumps: BTreeSet<usize> },
    /// `C_{2n}(a, n)`.
    CubicCirculant { n: usize, a: usize },
    Ladder(LadderFamily, usize),
    DisjointUnion(Vec<GraphSpec>),
}

impl GraphSpec {
    pub fn circulant(order: usize, jumps: impl IntoIterator<Item = usize>) -> Self {
        GraphSpec::Circulant { order, jumps: jumps.into_iter().collect() }
    }

    /// Number of vertices the built graph will have (no validation).
    pub fn vertex_count(&self) -> usize {
        match self {
            GraphSpec::Path(q) | GraphSpec::Cycle(q) | GraphSpec::Star(q) | GraphSpec::Complete(q) => *q,
            GraphSpec::Circulant { order, .. } => *order,
            GraphSpec::CubicCirculant { n, .. } => 2 * n,
            GraphSpec::Ladder(f, n) => f.vertex_count(*n),
            GraphSpec::DisjointUnion(parts) => parts.iter().map(GraphSpec::vertex_count).sum(),
        }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidSpec(msg));
        match self {
            GraphSpec::Path(q) if *q < 1 => bad(format!("path needs at least 1 vertex, got {q}")),
            GraphSpec::Cycle(q) if *q < 3 => bad(format!("cycle needs at least 3 vertices, got {q}")),
            GraphSpec::Star(q) if *q < 2 => bad(format!("star needs at least 2 vertices, got {q}")),
            GraphSpec::Complete(q) if *q < 1 => bad(format!("complete graph needs at least 1 vertex, got {q}")),
            GraphSpec::Circulant { order, jumps } => {
                if *order < 2 {
                    return bad(format!("circulant order must be at least 2, got {order}"));
                }
                if jumps.is_empty() {
                    return bad("circulant jump set must be nonempty".into());
                }
                if let Some(&j) = jumps.iter().find(|&&j| j < 1 || j > order / 2) {
                    return bad(format!("circulant jump {j} outside 1..={}", order / 2));
                }
                self.check_size()
            }
            GraphSpec::CubicCirculant { n, a } => {
                if *n < 2 {
                    return bad(format!("cubic circulant needs n >= 2, got {n}"));
                }
                if *a < 1 || *a >= *n {
                    return bad(format!("cubic circulant needs 1 <= a < n, got a = {a}, n = {n}"));
                }
                self.check_size()
            }
            GraphSpec::Ladder(f, n) if *n < f.min_n() => {
                bad(format!("ladder{} needs n >= {}, got {n}", f.letter(), f.min_n()))
            }
            GraphSpec::DisjointUnion(parts) => {
                if parts.is_empty() {
                    return bad("union needs at least one part".into());
                }
                parts.iter().try_for_each(GraphSpec::validate)?;
                self.check_size()
            }
            _ => self.check_size(),
        }
    }

    fn check_size(&self) -> Result<(), GraphError> {
        let n = self.vertex_count();
        if n > MAX_VERTICES {
            Err(GraphError::TooManyVertices(n))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(q) => write!(f, "path:{q}"),
            GraphSpec::Cycle(q) => write!(f, "cycle:{q}"),
            GraphSpec::Star(q) => write!(f, "star:{q}"),
            GraphSpec::Complete(q) => write!(f, "complete:{q}"),
            GraphSpec::Circulant { order, jumps } => {
                let js: Vec<String> = jumps.iter().map(usize::to_string).collect();
                write!(f, "circulant:{order}:{}", js.join(","))
            }
            GraphSpec::CubicCirculant { n, a } => write!(f, "cubic:{n}:{a}"),
            GraphSpec::Ladder(fam, n) => write!(f, "ladder{}:{n}", fam.letter()),
            GraphSpec::DisjointUnion(parts) => {
                let ps: Vec<String> = parts.iter().map(GraphSpec::to_string).collect();
                write!(f, "union:({})", ps.join(";"))
            }
        }
    }
}

impl FromStr for GraphSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        let fail = |reason: &str| GraphError::Parse { input: s.to_string(), reason: reason.to_string() };
        let s_trim = s.trim();
        let (head, rest) = s_trim.split_once(':').ok_or_else(|| fail("expected `family:parameters`"))?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| fail(&format!("`{t}` is not a nonnegative integer")));
        let single = |t: &str| {
            if t.contains(':') {
                Err(fail("too many `:`-separated fields"))
            } else {
                num(t)
            }
        };
        let spec = match head {
            "path" => GraphSpec::Path(single(rest)?),
            "cycle" => GraphSpec::Cycle(single(rest)?),
            "star" => GraphSpec::Star(single(rest)?),
            "complete" => GraphSpec::Complete(single(rest)?),
            "ladderA" => GraphSpec::Ladder(LadderFamily::A, single(rest)?),
            "ladderB" => GraphSpec::Ladder(LadderFamily::B, single(rest)?),
            "ladderC" => GraphSpec::Ladder(LadderFamily::C, single(rest)?),
            "ladderD" => GraphSpec::Ladder(LadderFamily::D, single(rest)?),
            "circulant" => {
                let (q, js) = rest.split_once(':').ok_or_else(|| fail("expected `circulant:Q:a1,a2,...`"))?;
                if js.contains(':') {
                    return Err(fail("too many `:`-separated fields"));
                }
                let jumps = js.split(',').map(num).collect::<Result<BTreeSet<_>, _>>()?;
                GraphSpec::Circulant { order: num(q)?, jumps }
            }
            "cubic" => {
                let (n, a) = rest.split_once(':').ok_or_else(|| fail("expected `cubic:N:A`"))?;
                if a.contains(':') {
                    return Err(fail("too many `:`-separated fields"));
                }
                GraphSpec::CubicCirculant { n: num(n)?, a: num(a)? }
            }
            "union" => {
                let inner = rest
                    .trim()
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| fail("expected `union:(spec;spec;...)`"))?;
                let parts = split_top_level(inner).ok_or_else(|| fail("unbalanced parentheses"))?;
                GraphSpec::DisjointUnion(parts.into_iter().map(str::parse).collect::<Result<_, _>>()?)
            }
            other => return Err(fail(&format!("unknown family `{other}`"))),
        };
        Ok(spec)
    }
}

/// Split on `;` at parenthesis depth zero.
fn split_top_level(s: &str) -> Option<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            ';' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    parts.push(&s[start..]);
    Some(parts)
}
