//! Squarefree monomial ideals and edge ideals.
//!
//! A squarefree monomial is stored by its support. Membership of an arbitrary
//! (not necessarily squarefree) monomial in a squarefree ideal depends only on
//! its support, which is what the counting routines rely on.

mod colon;
mod count;

pub use colon::{
    colon_decomposition, colon_decomposition_with_order, verify_colon_decomposition,
    verify_colon_decomposition_with_order, ColonSummand, DegreeCheck,
};
pub(crate) use count::binomial;
pub use count::{count_by_enumeration, count_by_inclusion_exclusion, standard_monomial_count, DEFAULT_DEGREE_CAP};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("ideal generators must have nonempty support")]
    EmptyGenerator,
    #[error("variable {var} outside the ambient ring of {ambient} variables")]
    VariableOutOfRange { var: usize, ambient: usize },
    #[error("ambient ring of {0} variables exceeds the supported {MAX_VERTICES}")]
    TooManyVariables(usize),
    #[error("colon by {0} is undefined here: the monomial lies in the ideal")]
    ColonByMember(String),
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("colon decomposition needs a connected graph")]
    Disconnected,
    #[error("pivot {0} has no neighbours")]
    IsolatedPivot(usize),
    #[error("neighbour order {order:?} is not a permutation of the pivot's neighbourhood {neighbourhood:?}")]
    BadNeighbourOrder { order: Vec<usize>, neighbourhood: Vec<usize> },
}

/// A squarefree monomial `x^A`, identified with its support `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SquarefreeMonomial(VertexSet);

impl SquarefreeMonomial {
    pub fn new(support: VertexSet) -> Self {
        SquarefreeMonomial(support)
    }

    pub fn variable(v: usize) -> Self {
        SquarefreeMonomial(VertexSet::singleton(v))
    }

    pub fn support(self) -> VertexSet {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.len()
    }

    pub fn divides(self, other: SquarefreeMonomial) -> bool {
        self.0.is_subset(other.0)
    }
}

impl FromIterator<usize> for SquarefreeMonomial {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        SquarefreeMonomial(iter.into_iter().collect())
    }
}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for v in self.0 {
            write!(f, "x{}", v + 1)?;
        }
        Ok(())
    }
}

/// A squarefree monomial ideal in `K[x_1, .., x_{ambient_vars}]`, stored by
/// its minimal generators (sorted by degree, then support).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    ambient_vars: usize,
    generators: Vec<SquarefreeMonomial>,
}

impl MonomialIdeal {
    pub fn new(
        ambient_vars: usize,
        generators: impl IntoIterator<Item = SquarefreeMonomial>,
    ) -> Result<Self, IdealError> {
        if ambient_vars > MAX_VERTICES {
            return Err(IdealError::TooManyVariables(ambient_vars));
        }
        let ring = VertexSet::full(ambient_vars);
        let mut gens = Vec::new();
        for m in generators {
            if m.0.is_empty() {
                return Err(IdealError::EmptyGenerator);
            }
            if let Some(var) = m.0.difference(ring).first() {
                return Err(IdealError::VariableOutOfRange { var, ambient: ambient_vars });
            }
            gens.push(m);
        }
        Ok(MonomialIdeal { ambient_vars, generators: minimalize(gens) })
    }

    /// The zero ideal of a ring with `ambient_vars` variables.
    pub fn zero(ambient_vars: usize) -> Self {
        assert!(ambient_vars <= MAX_VERTICES);
        MonomialIdeal { ambient_vars, generators: Vec::new() }
    }

    /// `I(G)`: one generator `x_u x_v` per edge; the ring has one variable per vertex.
    pub fn edge_ideal(g: &Graph) -> Self {
        let gens = g.edges().map(|(u, v)| SquarefreeMonomial([u, v].into_iter().collect()));
        MonomialIdeal { ambient_vars: g.num_vertices(), generators: minimalize(gens.collect()) }
    }

    pub fn ambient_vars(&self) -> usize {
        self.ambient_vars
    }

    pub fn generators(&self) -> &[SquarefreeMonomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Variables dividing some minimal generator.
    pub fn support(&self) -> VertexSet {
        self.generators.iter().fold(VertexSet::EMPTY, |acc, g| acc.union(g.0))
    }

    /// Whether every monomial with this support lies in the ideal.
    #[inline]
    pub fn contains_support(&self, support: VertexSet) -> bool {
        self.generators.iter().any(|g| g.0.is_subset(support))
    }

    pub fn contains(&self, m: SquarefreeMonomial) -> bool {
        self.contains_support(m.0)
    }

    /// `(I : u)`, defined here only for `u` outside the ideal.
    pub fn colon(&self, u: SquarefreeMonomial) -> Result<Self, IdealError> {
        self.check_in_ring(u)?;
        if self.contains(u) {
            return Err(IdealError::ColonByMember(u.to_string()));
        }
        let gens = self.generators.iter().map(|g| SquarefreeMonomial(g.0.difference(u.0))).collect();
        Ok(MonomialIdeal { ambient_vars: self.ambient_vars, generators: minimalize(gens) })
    }

    /// `(I, u_1, .., u_k)`.
    pub fn add_monomials(&self, ms: impl IntoIterator<Item = SquarefreeMonomial>) -> Result<Self, IdealError> {
        let mut gens = self.generators.clone();
        for m in ms {
            self.check_in_ring(m)?;
            if m.0.is_empty() {
                return Err(IdealError::EmptyGenerator);
            }
            gens.push(m);
        }
        Ok(MonomialIdeal { ambient_vars: self.ambient_vars, generators: minimalize(gens) })
    }

    /// `I ∩ K[vars]` re-indexed onto `K[y_1, .., y_|vars|]`, variables kept in increasing order.
    pub fn restrict(&self, vars: VertexSet) -> MonomialIdeal {
        let vars = vars.intersection(VertexSet::full(self.ambient_vars));
        let order: Vec<usize> = vars.iter().collect();
        let reindex = |s: VertexSet| -> VertexSet { s.iter().map(|v| order.binary_search(&v).unwrap()).collect() };
        let gens = self.generators.iter().filter(|g| g.0.is_subset(vars)).map(|g| SquarefreeMonomial(reindex(g.0)));
        MonomialIdeal { ambient_vars: order.len(), generators: gens.collect() }
    }

    /// The extension of `I` to a ring with `k` additional free variables.
    pub fn with_free_variables(&self, k: usize) -> MonomialIdeal {
        assert!(self.ambient_vars + k <= MAX_VERTICES);
        MonomialIdeal { ambient_vars: self.ambient_vars + k, generators: self.generators.clone() }
    }

    /// No generator divides another.
    pub fn is_minimal(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (0..g.len()).all(|j| i == j || !g[i].divides(g[j])))
    }

    fn check_in_ring(&self, m: SquarefreeMonomial) -> Result<(), IdealError> {
        match m.0.difference(VertexSet::full(self.ambient_vars)).first() {
            Some(var) => Err(IdealError::VariableOutOfRange { var, ambient: self.ambient_vars }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        if gens.is_empty() {
            write!(f, "(0)")
        } else {
            write!(f, "({})", gens.join(", "))
        }
    }
}

fn minimalize(mut gens: Vec<SquarefreeMonomial>) -> Vec<SquarefreeMonomial> {
    gens.sort_by_key(|g| (g.0.len(), g.0.bits()));
    gens.dedup();
    let mut kept: Vec<SquarefreeMonomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(g)) {
            kept.push(g);
        }
    }
    kept
}
