//! Direct-sum decomposition of `(I(G) : x_i) / I(G)` for a connected graph.
//!
//! With the neighbours of the pivot taken in a fixed order
//! `x_{i_1}, .., x_{i_l}`, put
//! `S_t = K[V \ (N(x_{i_t}) ∪ {x_{i_1}, .., x_{i_t}})]` and `J_t = S_t ∩ I(G)`.
//! Then `(I(G) : x_i) / I(G) ≅ ⊕_t (S_t / J_t)[x_{i_t}]` with the `t`-th
//! summand shifted by one degree. The summand list depends on the order,
//! the isomorphism class of the sum does not.

use serde::Serialize;

use super::count::check_degree;
use super::{standard_monomial_count, IdealError, MonomialIdeal, SquarefreeMonomial};
use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColonSummand {
    /// Variables of `S_t`.
    pub ring_vars: VertexSet,
    /// `J_t`, in the original variable indexing; generators lie inside `ring_vars`.
    pub ideal: MonomialIdeal,
    /// `x_{i_t}`, the free variable adjoined to `S_t / J_t`.
    pub adjoined_var: usize,
}

impl ColonSummand {
    /// The graph whose edge ideal is `J_t` (induced on `ring_vars`).
    pub fn graph(&self, g: &Graph) -> Graph {
        g.induced_subgraph(self.ring_vars)
    }

    /// `J_t` as an ideal of `S_t[x_{i_t}]`, compactly indexed.
    pub fn extended_ideal(&self) -> MonomialIdeal {
        self.ideal.restrict(self.ring_vars).with_free_variables(1)
    }
}

/// Decomposition with the pivot's neighbours in ascending vertex order.
pub fn colon_decomposition(g: &Graph, pivot: usize) -> Result<Vec<ColonSummand>, IdealError> {
    let order: Vec<usize> = check_pivot(g, pivot)?.iter().collect();
    colon_decomposition_with_order(g, pivot, &order)
}

/// Decomposition with an explicit neighbour order (a permutation of `N(pivot)`).
pub fn colon_decomposition_with_order(g: &Graph, pivot: usize, order: &[usize]) -> Result<Vec<ColonSummand>, IdealError> {
    let nbhd = check_pivot(g, pivot)?;
    let listed: VertexSet = order.iter().copied().collect();
    if listed != nbhd || order.len() != nbhd.len() {
        return Err(IdealError::BadNeighbourOrder { order: order.to_vec(), neighbourhood: nbhd.iter().collect() });
    }
    let ideal = MonomialIdeal::edge_ideal(g);
    let mut earlier = VertexSet::EMPTY;
    let mut out = Vec::with_capacity(order.len());
    for &v in order {
        earlier.insert(v);
        let ring_vars = g.vertices().difference(g.neighbors(v)).difference(earlier);
        let gens = ideal.generators().iter().copied().filter(|m| m.support().is_subset(ring_vars));
        let j = MonomialIdeal::new(g.num_vertices(), gens).expect("subset of valid generators");
        out.push(ColonSummand { ring_vars, ideal: j, adjoined_var: v });
    }
    Ok(out)
}

fn check_pivot(g: &Graph, pivot: usize) -> Result<VertexSet, IdealError> {
    if pivot >= g.num_vertices() {
        return Err(IdealError::VariableOutOfRange { var: pivot, ambient: g.num_vertices() });
    }
    if !g.is_connected() {
        return Err(IdealError::Disconnected);
    }
    let nbhd = g.neighbors(pivot);
    if nbhd.is_empty() {
        return Err(IdealError::IsolatedPivot(pivot));
    }
    Ok(nbhd)
}

/// One degree of the dimension comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: usize,
    /// Monomials of this degree in `(I : x_i)` but not in `I`, enumerated directly.
    pub quotient: u64,
    /// `Σ_t dim_K (S_t/J_t)[x_{i_t}]` in degree `degree - 1`.
    pub summands: u64,
}

impl DegreeCheck {
    pub fn matches(&self) -> bool {
        self.quotient == self.summands
    }
}

/// Compare both sides of the decomposition degree by degree, `1..=dmax`,
/// using ascending neighbour order. `Ok(true)` iff every degree matches.
pub fn verify_colon_decomposition(g: &Graph, pivot: usize, dmax: usize) -> Result<bool, IdealError> {
    let order: Vec<usize> = check_pivot(g, pivot)?.iter().collect();
    let checks = verify_colon_decomposition_with_order(g, pivot, &order, dmax)?;
    Ok(checks.iter().all(DegreeCheck::matches))
}

pub fn verify_colon_decomposition_with_order(
    g: &Graph,
    pivot: usize,
    order: &[usize],
    dmax: usize,
) -> Result<Vec<DegreeCheck>, IdealError> {
    check_degree(dmax)?;
    let summands = colon_decomposition_with_order(g, pivot, order)?;
    let ideal = MonomialIdeal::edge_ideal(g);
    let colon = ideal.colon(SquarefreeMonomial::variable(pivot))?;
    let extended: Vec<MonomialIdeal> = summands.iter().map(ColonSummand::extended_ideal).collect();
    (1..=dmax)
        .map(|d| {
            let quotient = count_colon_quotient(&ideal, &colon, d);
            let summands = extended.iter().map(|j| standard_monomial_count(j, d - 1)).sum::<Result<u64, _>>()?;
            Ok(DegreeCheck { degree: d, quotient, summands })
        })
        .collect()
}

/// `#{monomials m of degree d : m ∈ colon, m ∉ ideal}` by walking all exponent vectors.
fn count_colon_quotient(ideal: &MonomialIdeal, colon: &MonomialIdeal, d: usize) -> u64 {
    fn walk(r: usize, var: usize, left: usize, support: VertexSet, f: &mut impl FnMut(VertexSet)) {
        if left == 0 {
            f(support);
            return;
        }
        if var == r {
            return;
        }
        walk(r, var + 1, left, support, f);
        for e in 1..=left {
            walk(r, var + 1, left - e, support.with(var), f);
        }
    }
    let mut count = 0;
    walk(ideal.ambient_vars(), 0, d, VertexSet::EMPTY, &mut |s| {
        if colon.contains_support(s) && !ideal.contains_support(s) {
            count += 1;
        }
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, is_isomorphic, ladder_position, GraphSpec, Rail};

    fn build(s: &str) -> Graph {
        build_graph(&s.parse().unwrap()).unwrap()
    }

    fn v(g: &Graph, label: &str) -> usize {
        g.vertex_by_label(label).unwrap()
    }

    #[test]
    fn ladder_a3_pivot_y3_in_drawn_order() {
        let g = build("ladderA:3");
        let order = [v(&g, "y2"), v(&g, "x3")];
        let s = colon_decomposition_with_order(&g, v(&g, "y3"), &order).unwrap();
        assert_eq!(s.len(), 2);
        let labels = |set: VertexSet| set.iter().map(|i| g.label(i).to_string()).collect::<Vec<_>>();
        assert_eq!(labels(s[0].ring_vars), ["x1", "x3"]);
        assert!(s[0].ideal.is_zero());
        assert_eq!(s[0].adjoined_var, v(&g, "y2"));
        assert_eq!(labels(s[1].ring_vars), ["x1", "y1"]);
        assert_eq!(s[1].ideal.generators(), [SquarefreeMonomial::new([v(&g, "x1"), v(&g, "y1")].into_iter().collect())]);
        assert_eq!(s[1].adjoined_var, v(&g, "x3"));
        let checks = verify_colon_decomposition_with_order(&g, v(&g, "y3"), &order, 5).unwrap();
        assert!(checks.iter().all(DegreeCheck::matches), "{checks:?}");
    }

    #[test]
    fn verifier_examples() {
        let a3 = build("ladderA:3");
        assert!(verify_colon_decomposition(&a3, v(&a3, "y3"), 5).unwrap());
        let p3 = build("path:3");
        assert!(verify_colon_decomposition(&p3, 1, 4).unwrap());
        assert!(verify_colon_decomposition(&p3, 0, 4).unwrap());
        let c10 = build("cubic:5:1");
        let y1 = ladder_position(5, 1, Rail::Y, 1).unwrap();
        assert!(verify_colon_decomposition(&c10, y1, 4).unwrap());
    }

    #[test]
    fn mobius_pivot_y1_summands_are_ladder_supergraphs() {
        for n in 5..=8 {
            let g = build_graph(&GraphSpec::CubicCirculant { n, a: 1 }).unwrap();
            let p = |r, k| ladder_position(n, 1, r, k).unwrap();
            let order = [p(Rail::X, n), p(Rail::X, 1), p(Rail::Y, 2)];
            let s = colon_decomposition_with_order(&g, p(Rail::Y, 1), &order).unwrap();
            let expect = [format!("ladderD:{}", n - 3), format!("ladderB:{}", n - 3), format!("ladderD:{}", n - 4)];
            for (summand, spec) in s.iter().zip(&expect) {
                let h = build(spec);
                assert!(is_isomorphic(&summand.graph(&g), &h).unwrap().is_some(), "n={n} {spec}");
            }
        }
    }

    #[test]
    fn prism_pivot_yn_summands_are_ladder_supergraphs() {
        for n in [5, 7, 9] {
            let g = build_graph(&GraphSpec::CubicCirculant { n, a: 2 }).unwrap();
            let p = |r, k| ladder_position(n, 2, r, k).unwrap();
            let order = [p(Rail::Y, n - 1), p(Rail::X, n), p(Rail::Y, 1)];
            let s = colon_decomposition_with_order(&g, p(Rail::Y, n), &order).unwrap();
            let expect = [format!("ladderC:{}", n - 3), format!("ladderB:{}", n - 3), format!("ladderC:{}", n - 4)];
            for (summand, spec) in s.iter().zip(&expect) {
                let h = build(spec);
                assert!(is_isomorphic(&summand.graph(&g), &h).unwrap().is_some(), "n={n} {spec}");
            }
        }
    }

    #[test]
    fn error_paths() {
        let g = build("union:(path:2;path:2)");
        assert_eq!(colon_decomposition(&g, 0), Err(IdealError::Disconnected));
        let single = build("path:1");
        assert_eq!(colon_decomposition(&single, 0), Err(IdealError::IsolatedPivot(0)));
        let p3 = build("path:3");
        assert!(matches!(colon_decomposition_with_order(&p3, 1, &[0]), Err(IdealError::BadNeighbourOrder { .. })));
        assert!(matches!(verify_colon_decomposition(&p3, 1, 9), Err(IdealError::DegreeCapExceeded { .. })));
    }

    #[test]
    fn wrong_summand_is_detected() {
        // dropping the "earlier neighbours" exclusion double counts
        let g = build("cycle:5");
        let ideal = MonomialIdeal::edge_ideal(&g);
        let colon = ideal.colon(SquarefreeMonomial::variable(0)).unwrap();
        let naive: u64 = g
            .neighbors(0)
            .iter()
            .map(|w| {
                let ring = g.vertices().difference(g.neighbors(w)).without(w);
                standard_monomial_count(&ideal.restrict(ring).with_free_variables(1), 2).unwrap()
            })
            .sum();
        assert_ne!(naive, count_colon_quotient(&ideal, &colon, 3));
    }
}
