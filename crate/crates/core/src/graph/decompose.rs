//! Splitting `C_{2n}(a, n)` into isomorphic connected circulants, checked
//! against the actual components of the built graph.

use serde::Serialize;

use super::iso::is_witness;
use super::{build_graph, is_isomorphic, Graph, GraphError, GraphSpec};
use crate::bitset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub a: usize,
    /// `gcd(2n, a)`.
    pub t: usize,
    /// Parity of `2n / t`.
    pub parity: Parity,
    pub copy_count: usize,
    pub component_spec: GraphSpec,
    /// Vertex set (in the cubic circulant) of each component, ordered by smallest vertex.
    pub components: Vec<VertexSet>,
    /// For each component, `witness[i]` is the cubic-circulant vertex that
    /// vertex `i` of `build_graph(component_spec)` maps to.
    pub witness_isos: Vec<Vec<usize>>,
}

impl DecompositionReport {
    /// `"2 × C_4(1,2)"`.
    pub fn summary(&self) -> String {
        match &self.component_spec {
            GraphSpec::Circulant { order, jumps } => {
                let js: Vec<String> = jumps.iter().map(usize::to_string).collect();
                format!("{} × C_{order}({})", self.copy_count, js.join(","))
            }
            other => format!("{} × {other}", self.copy_count),
        }
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Predict the component structure of `C_{2n}(a, n)` and verify it.
///
/// With `t = gcd(2n, a)`: when `2n/t` is even the graph is claimed to be `t`
/// copies of `C_{2n/t}(1, n/t)`; when odd, `t/2` copies of
/// `C_{4n/t}(2, 2n/t)`. The claim is checked by computing connected
/// components and an explicit isomorphism for each one; any disagreement is
/// returned as [`GraphError::DecompositionMismatch`].
pub fn decompose_cubic_circulant(n: usize, a: usize) -> Result<DecompositionReport, GraphError> {
    let cubic = GraphSpec::CubicCirculant { n, a };
    cubic.validate()?;
    let t = gcd(2 * n, a);
    let m = 2 * n / t;
    let (parity, copy_count, component_spec) = if m.is_multiple_of(2) {
        (Parity::Even, t, GraphSpec::circulant(m, [1, m / 2]))
    } else {
        (Parity::Odd, t / 2, GraphSpec::circulant(2 * m, [2, m]))
    };

    let graph = build_graph(&cubic)?;
    let model = build_graph(&component_spec)?;
    let mismatch = |detail: String| GraphError::DecompositionMismatch { order: 2 * n, a, n, detail };

    let comps = graph.connected_components();
    if comps.len() != copy_count {
        return Err(mismatch(format!("expected {copy_count} components, found {}", comps.len())));
    }
    if copy_count * model.num_vertices() != 2 * n {
        return Err(mismatch(format!("{copy_count} copies of {} vertices do not cover {}", model.num_vertices(), 2 * n)));
    }

    let mut components = Vec::with_capacity(comps.len());
    let mut witness_isos = Vec::with_capacity(comps.len());
    for (set, comp) in comps {
        let w = is_isomorphic(&model, &comp)?
            .ok_or_else(|| mismatch(format!("component {:?} is not isomorphic to {component_spec}", set)))?;
        debug_assert!(is_witness(&model, &comp, &w));
        let original: Vec<usize> = set.iter().collect();
        witness_isos.push(w.iter().map(|&i| original[i]).collect());
        components.push(set);
    }

    Ok(DecompositionReport { n, a, t, parity, copy_count, component_spec, components, witness_isos })
}

/// Re-check a report's witnesses against freshly built graphs.
pub fn validate_report(report: &DecompositionReport) -> bool {
    let (Ok(graph), Ok(model)) =
        (build_graph(&GraphSpec::CubicCirculant { n: report.n, a: report.a }), build_graph(&report.component_spec))
    else {
        return false;
    };
    report.components.len() == report.copy_count
        && report.copy_count * model.num_vertices() == graph.num_vertices()
        && report.components.iter().zip(&report.witness_isos).all(|(&set, w)| {
            let comp: Graph = graph.induced_subgraph(set);
            let original: Vec<usize> = set.iter().collect();
            let local: Option<Vec<usize>> = w.iter().map(|v| original.iter().position(|o| o == v)).collect();
            local.is_some_and(|l| is_witness(&model, &comp, &l)) && graph.component_of(set.first().unwrap()) == set
        })
}
