//! Fixed small graphs: the eight induced obstructions to linear presentation
//! and a few other graphs with known Betti tables.

use std::sync::OnceLock;

use crate::graph::BipartiteGraph;

/// Builds a graph from 1-based `(i, j)` pairs meaning the edge `{x_i, y_j}`.
fn from_pairs(m: usize, n: usize, pairs: &[(usize, usize)]) -> BipartiteGraph {
    BipartiteGraph::with_default_labels(m, n, pairs.iter().map(|&(i, j)| (i - 1, j - 1)))
        .expect("catalog graphs are well formed")
}

const TWO_SQUARES: [(usize, usize); 8] =
    [(1, 1), (1, 2), (2, 1), (2, 2), (3, 3), (3, 4), (4, 3), (4, 4)];

fn two_squares_plus(extra: &[(usize, usize)]) -> BipartiteGraph {
    let mut pairs = TWO_SQUARES.to_vec();
    pairs.extend_from_slice(extra);
    from_pairs(4, 4, &pairs)
}

/// `H^(1)`..`H^(8)`, in index order (slot 0 is `H^(1)`).
///
/// 1. two 4-cycles sharing an edge
/// 2. two disjoint 4-cycles
/// 3. two 4-cycles joined by one edge
/// 4. joined by two adjacent edges
/// 5. joined by two non-adjacent edges
/// 6. joined by three connected edges
/// 7. joined by four edges
/// 8. two 4-cycles sharing exactly one vertex
pub fn obstructions() -> &'static [BipartiteGraph; 8] {
    static CATALOG: OnceLock<[BipartiteGraph; 8]> = OnceLock::new();
    CATALOG.get_or_init(|| {
        [
            from_pairs(3, 3, &[(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)]),
            two_squares_plus(&[]),
            two_squares_plus(&[(2, 3)]),
            two_squares_plus(&[(1, 3), (2, 3)]),
            two_squares_plus(&[(1, 3), (2, 4)]),
            two_squares_plus(&[(1, 3), (1, 4), (2, 3)]),
            two_squares_plus(&[(1, 3), (1, 4), (2, 3), (2, 4)]),
            from_pairs(4, 3, &[(1, 1), (1, 2), (2, 1), (2, 2), (3, 3), (3, 2), (4, 3), (4, 2)]),
        ]
    })
}

/// `H^(i)` for `i` in `1..=8`.
pub fn obstruction(index: usize) -> &'static BipartiteGraph {
    assert!((1..=8).contains(&index), "obstruction index must be in 1..=8");
    &obstructions()[index - 1]
}

/// `K_{3,3}` minus the edge `{x3, y3}`: a Gorenstein ideal with Betti table
/// rows `2: 5 5 -` and `3: - - 1`.
pub fn k33_minus_edge() -> BipartiteGraph {
    from_pairs(3, 3, &[(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 1), (1, 3), (3, 2)])
}

/// `K_{4,3}` minus one edge; linearly presented.
pub fn k43_minus_edge() -> BipartiteGraph {
    let pairs: Vec<(usize, usize)> =
        (1..=4).flat_map(|i| (1..=3).map(move |j| (i, j))).filter(|&p| p != (4, 3)).collect();
    from_pairs(4, 3, &pairs)
}

fn k44_minus(missing: &[(usize, usize)]) -> BipartiteGraph {
    let pairs: Vec<(usize, usize)> = (1..=4)
        .flat_map(|i| (1..=4).map(move |j| (i, j)))
        .filter(|p| !missing.contains(p))
        .collect();
    from_pairs(4, 4, &pairs)
}

/// `K_{4,4}` whose complement is the path `y1 x2 y2 x3 y3` (diameter 4).
pub fn k44_minus_path() -> BipartiteGraph {
    k44_minus(&[(2, 1), (2, 2), (3, 2), (3, 3)])
}

/// `K_{4,4}` whose complement is the disconnected `y1 x2 y2` plus `x3 y3`.
pub fn k44_minus_path_and_edge() -> BipartiteGraph {
    k44_minus(&[(2, 1), (2, 2), (3, 3)])
}

/// `K_{4,4}` whose complement is the 4-cycle on `x2, x3, y2, y3`.
pub fn k44_minus_square() -> BipartiteGraph {
    k44_minus(&[(2, 2), (2, 3), (3, 2), (3, 3)])
}

/// Seven vertices `x1, x2, z1..z5` on the path `x1 z1 z2 z3 x2` with extra
/// neighbours `z4` of `x1` and `z5` of `x2`, both adjacent to `z2`. Its
/// bipartition is `{x1, z2, x2}` against `{z1, z3, z4, z5}`; it is `H^(8)`.
pub fn shared_vertex_squares() -> BipartiteGraph {
    BipartiteGraph::new(
        vec!["x1", "z2", "x2"],
        vec!["z1", "z3", "z4", "z5"],
        &[
            ("x1", "z1"),
            ("x1", "z4"),
            ("z2", "z1"),
            ("z2", "z3"),
            ("z2", "z4"),
            ("z2", "z5"),
            ("x2", "z3"),
            ("x2", "z5"),
        ],
    )
    .expect("well formed")
}
