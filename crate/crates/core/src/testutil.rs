use crate::graph::Graph;

/// Graph on `n ≤ 11` vertices whose edges are the pairs `u < v`, in
/// lexicographic order, selected by the bits of `mask`.
pub(crate) fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges = pairs.enumerate().filter(|&(k, _)| k < 64 && mask >> k & 1 == 1).map(|(_, e)| e);
    Graph::from_edge_list(n, edges).unwrap()
}
