use super::{Graph, GraphError, GraphSpec, LadderFamily};

/// Build the graph a spec describes, using the conventional labels.
///
/// * paths, cycles, complete graphs and circulants: `x1..xq` in order;
/// * stars: centre `x1`, leaves `x2..xq`;
/// * ladders: `x1..xn` then `y1..yn`, followed by the extra vertices in the
///   order `y(n+1)`, `y(n+2)` (family C) or `x(n+1)`, `y(n+1)` (family D).
///
/// Ladder members with `n <= 1` come out as the small graphs they degenerate
/// to: `A_1 = P_2`, `B_0` a single vertex, `B_1 = P_3`, `C_1` the 4-star
/// centred at `y1`, and `D_1 = P_4`.
pub fn build_graph(spec: &GraphSpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    match spec {
        GraphSpec::Path(q) => Graph::from_edge_list(*q, (1..*q).map(|i| (i - 1, i))),
        GraphSpec::Cycle(q) => Graph::from_edge_list(*q, (0..*q).map(|i| (i, (i + 1) % q))),
        GraphSpec::Star(q) => Graph::from_edge_list(*q, (1..*q).map(|i| (0, i))),
        GraphSpec::Complete(q) => Graph::from_edge_list(*q, (0..*q).flat_map(|u| (u + 1..*q).map(move |v| (u, v)))),
        GraphSpec::Circulant { order, jumps } => circulant(*order, jumps.iter().copied()),
        GraphSpec::CubicCirculant { n, a } => circulant(2 * n, [*a, *n]),
        GraphSpec::Ladder(family, n) => Ok(ladder(*family, *n)),
        GraphSpec::DisjointUnion(parts) => {
            let graphs = parts.iter().map(build_graph).collect::<Result<Vec<_>, _>>()?;
            Graph::disjoint_union(&graphs)
        }
    }
}

/// `{x_i, x_j}` is an edge iff `|i-j|` or `q-|i-j|` lies in the jump set.
fn circulant(q: usize, jumps: impl IntoIterator<Item = usize> + Clone) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for i in 0..q {
        for j in i + 1..q {
            let d = j - i;
            if jumps.clone().into_iter().any(|s| s == d || s == q - d) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(q, edges)
}

fn ladder(family: LadderFamily, n: usize) -> Graph {
    let mut labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).chain((1..=n).map(|i| format!("y{i}"))).collect();
    let x = |i: usize| i - 1;
    let y = |i: usize| n + i - 1;
    let mut edges = Vec::new();
    for i in 1..n {
        edges.extend([(x(i), y(i)), (x(i), x(i + 1)), (y(i), y(i + 1))]);
    }
    if n >= 1 {
        edges.push((x(n), y(n)));
    }
    let next = 2 * n;
    match family {
        LadderFamily::A => {}
        LadderFamily::B => {
            labels.push(format!("y{}", n + 1));
            if n >= 1 {
                edges.push((y(n), next));
            }
        }
        LadderFamily::C => {
            labels.push(format!("y{}", n + 1));
            labels.push(format!("y{}", n + 2));
            edges.push((y(n), next));
            edges.push((y(1), next + 1));
        }
        LadderFamily::D => {
            labels.push(format!("x{}", n + 1));
            labels.push(format!("y{}", n + 1));
            edges.push((x(1), next));
            edges.push((y(n), next + 1));
        }
    }
    Graph::from_edges(labels, edges).expect("ladder construction is well-formed")
}

/// The two rails of a ladder-like drawing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rail {
    X,
    Y,
}

/// Index, in `build_graph(CubicCirculant { n, a })`, of the vertex drawn as
/// `x_k` or `y_k` (1-based `k`) when the connected cubic circulants are drawn
/// as ladders.
///
/// * `a = 1`: `C_{2n}(1, n)` is the Möbius ladder; `x_k` is circulant vertex
///   `k-1` and `y_k` is `n+k-1`, so `x_n y_1` and `y_n x_1` close the twist.
/// * `a = 2`, `n` odd: `C_{2n}(2, n)` is the prism; `x_k` is `2(k-1)` and `y_k`
///   is `x_k + n (mod 2n)`, so `x_n x_1` and `y_n y_1` close both rails.
pub fn ladder_position(n: usize, a: usize, rail: Rail, k: usize) -> Result<usize, GraphError> {
    if k < 1 || k > n {
        return Err(GraphError::InvalidSpec(format!("rail position {k} outside 1..={n}")));
    }
    let x = match (a, n % 2) {
        (1, _) if n >= 2 => k - 1,
        (2, 1) if n >= 3 => 2 * (k - 1),
        _ => {
            return Err(GraphError::InvalidSpec(format!(
                "C_{}({a},{n}) has no ladder drawing (need a = 1, or a = 2 with n odd)",
                2 * n
            )))
        }
    };
    Ok(match rail {
        Rail::X => x,
        Rail::Y => (x + n) % (2 * n),
    })
}
