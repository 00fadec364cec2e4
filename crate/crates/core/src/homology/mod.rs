//! Graded Betti numbers of `S/I` from Hochster's formula
//! `β_{i,j} = Σ_{|W|=j} dim H̃_{j-i-1}(Δ_W)`, where `Δ` is the
//! Stanley–Reisner complex of `I` (the independence complex for an edge ideal).
//!
//! `pdim`, `reg` and `depth = #vars - pdim` are read off the table.

mod field;

pub use field::FieldSpec;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::ideal::{MonomialIdeal, SquarefreeMonomial};
use field::{rank, Column, Field, Fp, Rationals};

/// Largest ring the oracle accepts; the work is `2^vars` homology computations.
pub const HOCHSTER_VERTEX_CAP: usize = 20;
/// Rings above this size form the slow tier.
pub const SLOW_TIER_VERTICES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("{vars} variables exceed the Hochster oracle cap of {cap}; use the closed-form formulas for larger graphs")]
    TooManyVertices { vars: usize, cap: usize },
    #[error("{0} is not a supported prime (need p prime, p < 2^32)")]
    InvalidField(u64),
    #[error("unknown field {0:?}; expected a prime or \"exact\"")]
    UnknownField(String),
    #[error("depth {depth} + pdim {pdim} != {ambient_vars} variables")]
    Inconsistent { depth: usize, pdim: usize, ambient_vars: usize },
}

/// Rank of dimension-indexed boundary maps for a complex given by its faces.
/// `faces_by_dim[0]` holds the faces of dimension -1 (the empty face).
fn homology_dims<F: Field>(field: &F, faces_by_dim: &[Vec<VertexSet>]) -> Vec<u64> {
    let mut faces: Vec<Vec<VertexSet>> = faces_by_dim.to_vec();
    for level in &mut faces {
        level.sort_unstable();
        level.dedup();
    }
    let plus = field.embed(1);
    let minus = field.embed(-1);
    // ranks[k] = rank of the map out of faces[k]; the map out of dimension -1 is zero
    let mut ranks = vec![0usize; faces.len() + 1];
    for k in 1..faces.len() {
        let below = &faces[k - 1];
        let cols: Vec<Column<F::E>> = faces[k]
            .iter()
            .map(|&s| {
                let mut col: Column<F::E> = s
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let row = below.binary_search(&s.without(v)).expect("complex closed under subsets");
                        (row, if pos % 2 == 0 { plus.clone() } else { minus.clone() })
                    })
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        ranks[k] = rank(field, cols);
    }
    (0..faces.len()).map(|k| (faces[k].len() - ranks[k] - ranks[k + 1]) as u64).collect()
}

fn homology_dims_in(field: FieldSpec, faces_by_dim: &[Vec<VertexSet>]) -> Vec<u64> {
    match field {
        FieldSpec::PrimeField(p) => homology_dims(&Fp(p), faces_by_dim),
        FieldSpec::Rationals => homology_dims(&Rationals, faces_by_dim),
    }
}

/// `dim H̃_k` for `k = -1, 0, 1, ..` (entry `k + 1`), given faces grouped by
/// dimension starting at dimension -1. The complex must be closed under subsets.
pub fn reduced_homology_dims(faces_by_dim: &[Vec<VertexSet>], field: FieldSpec) -> Result<Vec<u64>, HomologyError> {
    Ok(homology_dims_in(field.validate()?, faces_by_dim))
}

/// Faces of the Stanley–Reisner complex restricted to `w`, by dimension.
fn restricted_faces(gens_by_var: &[Vec<VertexSet>], w: VertexSet) -> Vec<Vec<VertexSet>> {
    fn extend(gens_by_var: &[Vec<VertexSet>], cands: VertexSet, face: VertexSet, out: &mut Vec<Vec<VertexSet>>) {
        if out.len() <= face.len() {
            out.push(Vec::new());
        }
        out[face.len()].push(face);
        let mut rest = cands;
        for v in cands {
            rest.remove(v);
            let next = face.with(v);
            if gens_by_var[v].iter().all(|g| !g.is_subset(next)) {
                extend(gens_by_var, rest, next, out);
            }
        }
    }
    let mut out = Vec::new();
    extend(gens_by_var, w, VertexSet::EMPTY, &mut out);
    out
}

/// Whether `Δ_W` is a cone: some vertex of `W` lies in no generator inside `W`.
fn is_cone(gens_by_var: &[Vec<VertexSet>], w: VertexSet) -> bool {
    w.iter().any(|v| gens_by_var[v].iter().all(|g| !g.is_subset(w)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
    ambient_vars: usize,
}

impl BettiTable {
    pub fn ambient_vars(&self) -> usize {
        self.ambient_vars
    }

    /// Nonzero `β_{i,j}` keyed by `(i, j)`.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..(i + 1, 0)).map(|(_, b)| b).sum()
    }

    pub fn pdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn depth(&self) -> usize {
        self.ambient_vars - self.pdim()
    }

    /// The structural constraints every table of `S/I` satisfies.
    pub fn check_invariants(&self) -> bool {
        self.get(0, 0) == 1
            && self.entries.iter().all(|(&(i, j), &b)| b > 0 && j >= i && i <= self.ambient_vars && (i > 0 || j == 0))
    }

    /// Betti diagram with rows `j - i` and columns `i`, as printed by most CAS.
    pub fn render(&self) -> String {
        let cols = self.pdim() + 1;
        let width = self.entries.values().map(|b| b.to_string().len()).max().unwrap_or(1).max(self.pdim().to_string().len());
        let mut out = String::from("      ");
        for i in 0..cols {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        let _ = write!(out, "total:");
        for i in 0..cols {
            let _ = write!(out, " {:>width$}", self.total(i));
        }
        for r in 0..=self.reg() {
            let _ = write!(out, "\n{r:>5}:");
            for i in 0..cols {
                match self.get(i, i + r) {
                    0 => {
                        let _ = write!(out, " {:>width$}", ".");
                    }
                    b => {
                        let _ = write!(out, " {b:>width$}");
                    }
                }
            }
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            beta: u64,
        }
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (&(i, j), &beta) in &self.entries {
            seq.serialize_element(&Entry { i, j, beta })?;
        }
        seq.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HochsterOptions {
    /// Skip subsets `W` on which `Δ_W` is a cone. Turning this off only costs time.
    pub skip_cones: bool,
}

impl Default for HochsterOptions {
    fn default() -> Self {
        HochsterOptions { skip_cones: true }
    }
}

/// Run `f` on a pool sized by `CIRC_THREADS` when set, else on the global pool.
pub(crate) fn with_thread_pool<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    let threads = std::env::var("CIRC_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()).filter(|&n| n > 0);
    match threads.map(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build()) {
        Some(Ok(pool)) => pool.install(f),
        _ => f(),
    }
}

pub fn hochster_betti_table(g: &Graph, field: FieldSpec) -> Result<BettiTable, HomologyError> {
    hochster_betti_table_of_ideal(&MonomialIdeal::edge_ideal(g), field, HochsterOptions::default())
}

/// Betti table of `S/I` for any squarefree monomial ideal.
pub fn hochster_betti_table_of_ideal(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    options: HochsterOptions,
) -> Result<BettiTable, HomologyError> {
    let q = ideal.ambient_vars();
    if q > HOCHSTER_VERTEX_CAP {
        return Err(HomologyError::TooManyVertices { vars: q, cap: HOCHSTER_VERTEX_CAP });
    }
    let field = field.validate()?;
    let mut gens_by_var = vec![Vec::new(); q];
    for g in ideal.generators() {
        for v in g.support() {
            gens_by_var[v].push(g.support());
        }
    }

    let total: u64 = 1 << q;
    let chunk = (total / 256).max(1);
    let accumulate = |masks: std::ops::Range<u64>| {
        let mut acc: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for mask in masks {
            let w = VertexSet::from_bits(mask);
            if options.skip_cones && is_cone(&gens_by_var, w) {
                continue;
            }
            let dims = homology_dims_in(field, &restricted_faces(&gens_by_var, w));
            let j = w.len();
            // dims[idx] is H̃_{idx-1}, contributing to i = j - idx
            for (idx, &h) in dims.iter().enumerate() {
                if h > 0 {
                    *acc.entry((j - idx, j)).or_default() += h;
                }
            }
        }
        acc
    };
    let entries = with_thread_pool(|| {
        (0..total.div_ceil(chunk))
            .into_par_iter()
            .map(|c| accumulate(c * chunk..((c + 1) * chunk).min(total)))
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
                a
            })
    });
    Ok(BettiTable { entries, ambient_vars: q })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    depth: usize,
    pdim: usize,
    reg: usize,
    ambient_vars: usize,
    field: FieldSpec,
    method: String,
}

impl InvariantReport {
    pub fn new(
        depth: usize,
        pdim: usize,
        reg: usize,
        ambient_vars: usize,
        field: FieldSpec,
        method: impl Into<String>,
    ) -> Result<Self, HomologyError> {
        if depth + pdim != ambient_vars {
            return Err(HomologyError::Inconsistent { depth, pdim, ambient_vars });
        }
        Ok(InvariantReport { depth, pdim, reg, ambient_vars, field, method: method.into() })
    }

    pub fn from_table(table: &BettiTable, field: FieldSpec) -> Self {
        Self::new(table.depth(), table.pdim(), table.reg(), table.ambient_vars(), field, "hochster")
            .expect("depth is defined from pdim")
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn pdim(&self) -> usize {
        self.pdim
    }

    pub fn reg(&self) -> usize {
        self.reg
    }

    pub fn ambient_vars(&self) -> usize {
        self.ambient_vars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn method(&self) -> &str {
        &self.method
    }
}

pub fn oracle_invariants(g: &Graph, field: FieldSpec) -> Result<InvariantReport, HomologyError> {
    Ok(InvariantReport::from_table(&hochster_betti_table(g, field)?, field))
}

pub fn oracle_invariants_of_ideal(ideal: &MonomialIdeal, field: FieldSpec) -> Result<InvariantReport, HomologyError> {
    let table = hochster_betti_table_of_ideal(ideal, field, HochsterOptions::default())?;
    Ok(InvariantReport::from_table(&table, field))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiDifference {
    pub i: usize,
    pub j: usize,
    pub gf2: u64,
    pub gf32003: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossFieldReport {
    pub gf2: BettiTable,
    pub gf32003: BettiTable,
    pub differing: Vec<BettiDifference>,
    /// Rerun over `Q`, present only when the primes disagree.
    pub rationals: Option<BettiTable>,
}

impl CrossFieldReport {
    pub fn agree(&self) -> bool {
        self.differing.is_empty()
    }
}

/// Compare the tables over `GF(2)` and `GF(32003)`.
pub fn cross_field_check(g: &Graph) -> Result<CrossFieldReport, HomologyError> {
    let gf2 = hochster_betti_table(g, FieldSpec::GF2)?;
    let gf32003 = hochster_betti_table(g, FieldSpec::GF32003)?;
    let keys: std::collections::BTreeSet<(usize, usize)> =
        gf2.entries.keys().chain(gf32003.entries.keys()).copied().collect();
    let differing: Vec<BettiDifference> = keys
        .into_iter()
        .filter(|&(i, j)| gf2.get(i, j) != gf32003.get(i, j))
        .map(|(i, j)| BettiDifference { i, j, gf2: gf2.get(i, j), gf32003: gf32003.get(i, j) })
        .collect();
    let rationals = if differing.is_empty() { None } else { Some(hochster_betti_table(g, FieldSpec::Rationals)?) };
    Ok(CrossFieldReport { gf2, gf32003, differing, rationals })
}

/// `depth(S/(I : u))` for the edge ideal of `g`, in the same ring.
pub fn colon_depth(g: &Graph, u: SquarefreeMonomial, field: FieldSpec) -> Result<Option<usize>, HomologyError> {
    match MonomialIdeal::edge_ideal(g).colon(u) {
        Ok(c) => Ok(Some(oracle_invariants_of_ideal(&c, field)?.depth())),
        Err(_) => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::testutil::graph_from_mask;
    use proptest::prelude::*;

    fn build(s: &str) -> Graph {
        build_graph(&s.parse().unwrap()).unwrap()
    }

    fn depth(s: &str) -> usize {
        oracle_invariants(&build(s), FieldSpec::GF2).unwrap().depth()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    /// All subsets of each facet, grouped by dimension.
    fn closure(facets: &[&[usize]]) -> Vec<Vec<VertexSet>> {
        let mut out: Vec<Vec<VertexSet>> = Vec::new();
        for f in facets {
            for s in set(f).subsets() {
                while out.len() <= s.len() {
                    out.push(Vec::new());
                }
                out[s.len()].push(s);
            }
        }
        out
    }

    #[test]
    fn spheres_and_points() {
        for field in [FieldSpec::GF2, FieldSpec::GF32003, FieldSpec::Rationals] {
            assert_eq!(reduced_homology_dims(&closure(&[&[0], &[1]]), field).unwrap(), [0, 1]);
            assert_eq!(reduced_homology_dims(&closure(&[&[0, 1], &[1, 2], &[0, 2]]), field).unwrap(), [0, 0, 1]);
            let tetra: Vec<Vec<usize>> = (0..4).map(|o| (0..4).filter(|&v| v != o).collect()).collect();
            let refs: Vec<&[usize]> = tetra.iter().map(Vec::as_slice).collect();
            assert_eq!(reduced_homology_dims(&closure(&refs), field).unwrap(), [0, 0, 0, 1]);
            // the empty complex {∅}
            assert_eq!(reduced_homology_dims(&closure(&[&[]]), field).unwrap(), [1]);
            assert_eq!(reduced_homology_dims(&closure(&[&[0, 1, 2]]), field).unwrap(), [0, 0, 0, 0]);
        }
    }

    #[test]
    fn projective_plane_is_characteristic_dependent() {
        // 6-vertex triangulation of RP^2
        let facets: [&[usize]; 10] = [
            &[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 4, 5], &[0, 1, 5],
            &[1, 2, 4], &[2, 3, 5], &[1, 3, 4], &[2, 4, 5], &[1, 3, 5],
        ];
        let faces = closure(&facets);
        assert_eq!(reduced_homology_dims(&faces, FieldSpec::GF2).unwrap(), [0, 0, 1, 1]);
        assert_eq!(reduced_homology_dims(&faces, FieldSpec::GF32003).unwrap(), [0, 0, 0, 0]);
        assert_eq!(reduced_homology_dims(&faces, FieldSpec::Rationals).unwrap(), [0, 0, 0, 0]);
    }

    #[test]
    fn path2_table() {
        let t = hochster_betti_table(&build("path:2"), FieldSpec::GF2).unwrap();
        assert_eq!(t.entries().iter().map(|(&k, &v)| (k, v)).collect::<Vec<_>>(), [((0, 0), 1), ((1, 2), 1)]);
        assert!(t.check_invariants());
    }

    #[test]
    fn four_cycle_and_k4() {
        let c4 = hochster_betti_table(&build("cycle:4"), FieldSpec::GF2).unwrap();
        assert_eq!(c4.pdim(), 3);
        assert!(c4.total(3) > 0);
        // I(C_4) = (x1,x3)(x2,x4): resolution 1, 4, 4, 1
        assert_eq!((0..4).map(|i| c4.total(i)).collect::<Vec<_>>(), [1, 4, 4, 1]);
        let k4 = oracle_invariants(&build("complete:4"), FieldSpec::GF32003).unwrap();
        assert_eq!((k4.depth(), k4.pdim()), (1, 3));
    }

    #[test]
    fn family_examples() {
        assert_eq!(depth("path:4"), 2);
        assert_eq!(depth("cycle:5"), 2);
        assert_eq!(depth("ladderB:2"), 2);
        assert_eq!(depth("circulant:6:2,3"), 2);
    }

    #[test]
    fn zero_ideal_and_empty_ring() {
        let t = hochster_betti_table_of_ideal(&MonomialIdeal::zero(3), FieldSpec::GF2, HochsterOptions::default()).unwrap();
        assert_eq!(t.entries().len(), 1);
        assert_eq!(t.depth(), 3);
        let e = hochster_betti_table_of_ideal(&MonomialIdeal::zero(0), FieldSpec::GF2, HochsterOptions::default()).unwrap();
        assert_eq!((e.pdim(), e.depth()), (0, 0));
    }

    #[test]
    fn cross_field_examples_agree() {
        for s in ["cycle:6", "cubic:3:1", "complete:5"] {
            let r = cross_field_check(&build(s)).unwrap();
            assert!(r.agree(), "{s}: {:?}", r.differing);
            assert!(r.rationals.is_none());
        }
    }

    #[test]
    fn size_cap_and_bad_field() {
        let g = build("path:21");
        assert_eq!(
            hochster_betti_table(&g, FieldSpec::GF2),
            Err(HomologyError::TooManyVertices { vars: 21, cap: HOCHSTER_VERTEX_CAP })
        );
        assert_eq!(hochster_betti_table(&build("path:2"), FieldSpec::PrimeField(9)), Err(HomologyError::InvalidField(9)));
    }

    #[test]
    fn report_construction_enforces_auslander_buchsbaum() {
        assert!(InvariantReport::new(2, 2, 1, 4, FieldSpec::GF2, "x").is_ok());
        assert!(matches!(InvariantReport::new(2, 1, 1, 4, FieldSpec::GF2, "x"), Err(HomologyError::Inconsistent { .. })));
    }

    #[test]
    fn render_and_json() {
        let t = hochster_betti_table(&build("path:3"), FieldSpec::GF2).unwrap();
        let r = t.render();
        assert!(r.contains("total:"), "{r}");
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"[{"i":0,"j":0,"beta":1},{"i":1,"j":2,"beta":2},{"i":2,"j":3,"beta":1}]"#);
    }

    #[test]
    fn thread_count_does_not_change_the_table() {
        let g = build("cubic:5:2");
        let base = hochster_betti_table(&g, FieldSpec::GF2).unwrap();
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        assert_eq!(one.install(|| hochster_betti_table(&g, FieldSpec::GF2).unwrap()), base);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn linear_strand_counts_edges(n in 1usize..9, mask in any::<u64>()) {
            let g = graph_from_mask(n, mask);
            let t = hochster_betti_table(&g, FieldSpec::GF2).unwrap();
            prop_assert_eq!(t.get(1, 2), g.num_edges() as u64);
            prop_assert!(t.check_invariants());
        }

        #[test]
        fn cone_skip_is_sound(n in 1usize..9, mask in any::<u64>()) {
            let i = MonomialIdeal::edge_ideal(&graph_from_mask(n, mask));
            let fast = hochster_betti_table_of_ideal(&i, FieldSpec::GF2, HochsterOptions { skip_cones: true }).unwrap();
            let slow = hochster_betti_table_of_ideal(&i, FieldSpec::GF2, HochsterOptions { skip_cones: false }).unwrap();
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn isolated_vertex_adds_one(n in 1usize..8, mask in any::<u64>()) {
            let g = graph_from_mask(n, mask);
            let d = oracle_invariants(&g, FieldSpec::GF2).unwrap().depth();
            let d1 = oracle_invariants(&g.with_isolated_vertex("z").unwrap(), FieldSpec::GF2).unwrap().depth();
            prop_assert_eq!(d1, d + 1);
        }

        #[test]
        fn colon_by_variable_does_not_lower_depth(n in 2usize..8, mask in any::<u64>(), v in 0usize..8) {
            let g = graph_from_mask(n, mask);
            let d = oracle_invariants(&g, FieldSpec::GF2).unwrap().depth();
            if let Some(dc) = colon_depth(&g, SquarefreeMonomial::variable(v % n), FieldSpec::GF2).unwrap() {
                prop_assert!(dc >= d);
            }
        }
    }
}
