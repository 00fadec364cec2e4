//! Depth, Stanley depth and projective dimension of edge ideals of cubic
//! circulant graphs and of the ladder supergraphs they reduce to.
//!
//! The crate has three independent routes to the same numbers:
//!
//! * [`formulas`]: closed-form integer formulas per graph family;
//! * [`homology`]: graded Betti numbers by Hochster's formula over the
//!   independence complex, giving `pdim`, `reg` and `depth`;
//! * [`sdepth`]: exact Stanley depth via interval partitions of the poset of
//!   standard squarefree monomials.
//!
//! [`graph`] builds every family into one [`graph::Graph`] type and checks the
//! component structure of `C_{2n}(a, n)`; [`ideal`] holds squarefree monomial
//! ideals, colon/sum arithmetic and the colon-ideal direct-sum verifier;
//! [`cli`] drives the verification suite and formats reports.

pub mod bitset;
pub mod cli;
pub mod graph;
pub mod homology;
pub mod ideal;
#[cfg(test)]
mod testutil;
pub mod formulas;
pub mod sdepth;

pub use bitset::VertexSet;
pub use graph::{build_graph, Graph, GraphSpec, LadderFamily};
pub use ideal::{MonomialIdeal, SquarefreeMonomial};
