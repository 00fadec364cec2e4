//! Exact isomorphism test for small graphs: colour refinement followed by
//! backtracking over colour classes.

use std::collections::BTreeMap;

use super::{Graph, GraphError};
use crate::bitset::VertexSet;

pub const ISOMORPHISM_VERTEX_LIMIT: usize = 24;

/// Returns `Some(witness)` with `witness[v]` the image in `h` of vertex `v`
/// of `g` when the graphs are isomorphic, `None` otherwise.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>, GraphError> {
    let n = g.num_vertices();
    for size in [n, h.num_vertices()] {
        if size > ISOMORPHISM_VERTEX_LIMIT {
            return Err(GraphError::TooLargeForIsomorphism(size));
        }
    }
    if n != h.num_vertices() || g.num_edges() != h.num_edges() || g.degree_sequence() != h.degree_sequence() {
        return Ok(None);
    }
    let Some((cg, ch)) = refine_jointly(g, h) else {
        return Ok(None);
    };

    // Map vertices of g in an order that keeps each new vertex adjacent to
    // already-mapped ones where possible, starting from the rarest colour.
    let order = search_order(g, &cg);
    let mut map = vec![usize::MAX; n];
    let mut used = VertexSet::EMPTY;
    let found = extend(g, h, &cg, &ch, &order, 0, &mut map, &mut used);
    Ok(found.then_some(map))
}

/// 1-dimensional Weisfeiler-Leman refinement run on both graphs with a
/// shared colour namespace. `None` when the colour histograms diverge.
fn refine_jointly(g: &Graph, h: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.num_vertices();
    let mut cg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    loop {
        let sig = |graph: &Graph, col: &[usize], v: usize| {
            let mut nb: Vec<usize> = graph.neighbors(v).iter().map(|w| col[w]).collect();
            nb.sort_unstable();
            (col[v], nb)
        };
        let sg: Vec<_> = (0..n).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..n).map(|v| sig(h, &ch, v)).collect();
        let mut names = BTreeMap::new();
        for s in sg.iter().chain(sh.iter()) {
            let next = names.len();
            names.entry(s.clone()).or_insert(next);
        }
        let ng: Vec<usize> = sg.iter().map(|s| names[s]).collect();
        let nh: Vec<usize> = sh.iter().map(|s| names[s]).collect();
        let hist = |c: &[usize]| {
            let mut m = BTreeMap::new();
            for &x in c {
                *m.entry(x).or_insert(0usize) += 1;
            }
            m
        };
        if hist(&ng) != hist(&nh) {
            return None;
        }
        let classes_before = hist(&cg).len();
        cg = ng;
        ch = nh;
        if hist(&cg).len() == classes_before {
            return Some((cg, ch));
        }
    }
}

fn search_order(g: &Graph, colour: &[usize]) -> Vec<usize> {
    let n = g.num_vertices();
    let mut class_size = BTreeMap::new();
    for &c in colour {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut placed = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        // prefer vertices with the most already-placed neighbours, then rarest colour
        let v = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    g.neighbors(v).intersection(placed).len(),
                    std::cmp::Reverse(class_size[&colour[v]]),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        placed.insert(v);
        order.push(v);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let mapped = &order[..depth];
    for w in 0..h.num_vertices() {
        if used.contains(w) || ch[w] != cg[v] {
            continue;
        }
        let consistent = mapped.iter().all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if extend(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        used.remove(w);
        map[v] = usize::MAX;
    }
    false
}

/// Whether `map` is an edge-preserving bijection from `g` onto `h`.
pub(crate) fn is_witness(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.num_vertices();
    if n != h.num_vertices() || map.len() != n || g.num_edges() != h.num_edges() {
        return false;
    }
    let image: VertexSet = map.iter().copied().filter(|&w| w < n).collect();
    image.len() == n && g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use proptest::prelude::*;

    fn build(s: &str) -> Graph {
        build_graph(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn c4_1_2_is_k4() {
        let (g, h) = (build("circulant:4:1,2"), build("complete:4"));
        let w = is_isomorphic(&g, &h).unwrap().unwrap();
        assert!(is_witness(&g, &h, &w));
    }

    #[test]
    fn p3_is_s3() {
        let (g, h) = (build("path:3"), build("star:3"));
        let w = is_isomorphic(&g, &h).unwrap().unwrap();
        assert!(is_witness(&g, &h, &w));
    }

    #[test]
    fn c6_is_not_two_triangles() {
        assert_eq!(is_isomorphic(&build("cycle:6"), &build("union:(cycle:3;cycle:3)")).unwrap(), None);
    }

    #[test]
    fn mobius_and_prism_differ() {
        // same degree sequence, same edge count, not isomorphic
        assert_eq!(is_isomorphic(&build("cubic:5:1"), &build("cubic:5:2")).unwrap(), None);
        assert!(is_isomorphic(&build("cubic:3:1"), &build("cubic:3:2")).unwrap().is_none());
    }

    #[test]
    fn size_limit_is_explicit() {
        let big = build("cycle:25");
        assert_eq!(is_isomorphic(&big, &big), Err(GraphError::TooLargeForIsomorphism(25)));
    }

    fn random_graph() -> impl Strategy<Value = Graph> {
        (1usize..=12).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let m = pairs.len();
            proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
                let edges = pairs.iter().zip(&bits).filter(|(_, &b)| b).map(|(&e, _)| e);
                Graph::from_edge_list(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn reflexive_under_relabeling(g in random_graph(), seed in any::<u64>()) {
            let n = g.num_vertices();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = g.permuted(&perm);
            let w = is_isomorphic(&g, &h).unwrap();
            prop_assert!(w.is_some());
            prop_assert!(is_witness(&g, &h, &w.unwrap()));
        }

        #[test]
        fn symmetric_and_agrees_with_degree_refutation(g in random_graph(), h in random_graph()) {
            let gh = is_isomorphic(&g, &h).unwrap();
            let hg = is_isomorphic(&h, &g).unwrap();
            prop_assert_eq!(gh.is_some(), hg.is_some());
            if g.degree_sequence() != h.degree_sequence() {
                prop_assert!(gh.is_none());
            }
            if let Some(w) = gh {
                prop_assert!(is_witness(&g, &h, &w));
            }
        }
    }
}
