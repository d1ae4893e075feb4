//! Exhaustive small-object enumeration: bipartite graphs up to isomorphism
//! and convex polyominoes up to the symmetries of the square.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;

use crate::graph::BipartiteGraph;
use crate::polyomino::{parse_polyomino, Cell, Polyomino};

/// Biadjacency matrix as row bitmasks over `cols` columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Biadjacency {
    rows: Vec<u32>,
    cols: usize,
}

impl Biadjacency {
    fn transpose(&self) -> Self {
        let rows = (0..self.cols)
            .map(|c| self.rows.iter().enumerate().filter(|(_, &r)| r >> c & 1 == 1).fold(0u32, |acc, (i, _)| acc | 1 << i))
            .collect();
        Biadjacency { rows, cols: self.rows.len() }
    }

    /// Least sorted row list over all column permutations (rows are an
    /// unordered multiset once sorted).
    fn canonical(&self) -> Vec<u32> {
        (0..self.cols)
            .permutations(self.cols)
            .map(|perm| {
                let mut rows: Vec<u32> = self
                    .rows
                    .iter()
                    .map(|&r| perm.iter().enumerate().fold(0u32, |acc, (new, &old)| acc | ((r >> old & 1) << new)))
                    .collect();
                rows.sort_unstable();
                rows
            })
            .min()
            .unwrap_or_default()
    }

    fn to_graph(&self) -> BipartiteGraph {
        let edges: Vec<(usize, usize)> = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(x, &r)| (0..self.cols).filter(move |&y| r >> y & 1 == 1).map(move |y| (x, y)))
            .collect();
        BipartiteGraph::with_default_labels(self.rows.len(), self.cols, edges).expect("simple graph")
    }
}

/// Connected bipartite graphs with at most `max_vertices` vertices and
/// minimum degree at least `min_degree` (≥ 1), one per isomorphism class
/// (side swaps count as isomorphisms). Sides are reported with
/// `|X| ≤ |Y|`; order is by `(|X|, |Y|)` then canonical form.
pub fn connected_bipartite_graphs(max_vertices: usize, min_degree: usize) -> Vec<BipartiteGraph> {
    let min_degree = min_degree.max(1);
    let mut out = Vec::new();
    for a in 1..=max_vertices / 2 {
        for b in a..=max_vertices - a {
            if a < min_degree || b < min_degree {
                continue;
            }
            let rows: Vec<u32> = (0u32..1 << b).filter(|r| r.count_ones() as usize >= min_degree).collect();
            let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
            // rows in non-decreasing order: every class has such a representative
            for combo in rows.iter().copied().combinations_with_replacement(a) {
                let m = Biadjacency { rows: combo, cols: b };
                let col_ok = (0..b).all(|c| m.rows.iter().filter(|&&r| r >> c & 1 == 1).count() >= min_degree);
                if !col_ok {
                    continue;
                }
                let mut key = m.canonical();
                if a == b {
                    key = key.min(m.transpose().canonical());
                }
                if seen.contains(&key) {
                    continue;
                }
                let g = Biadjacency { rows: key.clone(), cols: b }.to_graph();
                seen.insert(key);
                if g.is_connected() {
                    out.push(g);
                }
            }
        }
    }
    out
}

/// Polyominoes with at most `max_cells` cells, one per congruence class
/// under the eight symmetries of the square, ordered by size then
/// canonical cell list.
pub fn polyominoes(max_cells: usize) -> Vec<Polyomino> {
    let mut out = Vec::new();
    if max_cells == 0 {
        return out;
    }
    let mut layer: BTreeSet<Vec<Cell>> = BTreeSet::from([vec![(1, 1)]]);
    for size in 1..=max_cells {
        out.extend(layer.iter().map(|cells| parse_polyomino(cells).expect("grown polyominoes are connected")));
        if size == max_cells {
            break;
        }
        let mut next: HashSet<Vec<Cell>> = HashSet::new();
        for cells in &layer {
            let set: BTreeSet<Cell> = cells.iter().copied().collect();
            for &(x, y) in cells {
                for n in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                    if set.contains(&n) {
                        continue;
                    }
                    let mut grown = cells.clone();
                    grown.push(n);
                    let p = parse_polyomino(&grown).expect("connected");
                    next.insert(p.canonical_form());
                }
            }
        }
        layer = next.into_iter().collect();
    }
    out
}

/// Convex members of [`polyominoes`].
pub fn convex_polyominoes(max_cells: usize) -> Vec<Polyomino> {
    polyominoes(max_cells).into_iter().filter(Polyomino::is_convex).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polyomino_counts_match_known_sequence() {
        // free polyominoes: 1, 1, 2, 5, 12, 35
        let counts: Vec<usize> = (1..=6).map(|n| polyominoes(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 9, 21, 56]);
    }

    #[test]
    fn convex_counts() {
        let by_size = |n: usize| convex_polyominoes(n).into_iter().filter(|p| p.len() == n).count();
        assert_eq!((1..=4).map(by_size).collect::<Vec<_>>(), vec![1, 1, 2, 5]);
        // the U-pentomino is the only non-convex pentomino
        assert_eq!(by_size(5), 11);
    }

    #[test]
    fn small_graph_census() {
        let graphs = connected_bipartite_graphs(4, 2);
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].is_complete_bipartite(), Some((2, 2)));
        let six = connected_bipartite_graphs(6, 2);
        for g in &six {
            assert!(g.min_degree().unwrap() >= 2 && g.is_connected());
        }
        assert_eq!(six.len(), brute_force_class_count(6));
    }

    /// Isomorphism classes by an exhaustive vertex-permutation check.
    fn brute_force_class_count(max_vertices: usize) -> usize {
        let mut reps: Vec<BipartiteGraph> = Vec::new();
        for a in 2..=max_vertices / 2 {
            for b in a..=max_vertices - a {
                let cells: Vec<(usize, usize)> = (0..a).flat_map(|x| (0..b).map(move |y| (x, y))).collect();
                for mask in 0u64..1 << cells.len() {
                    let edges: Vec<(usize, usize)> =
                        cells.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
                    let g = BipartiteGraph::with_default_labels(a, b, edges).unwrap();
                    if g.min_degree().unwrap_or(0) < 2 || !g.is_connected() {
                        continue;
                    }
                    if !reps.iter().any(|r| isomorphic(r, &g)) {
                        reps.push(g);
                    }
                }
            }
        }
        reps.len()
    }

    fn isomorphic(a: &BipartiteGraph, b: &BipartiteGraph) -> bool {
        if a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() {
            return false;
        }
        let try_sides = |b: &BipartiteGraph| {
            a.num_x() == b.num_x()
                && (0..a.num_x()).permutations(a.num_x()).any(|px| {
                    (0..a.num_y()).permutations(a.num_y()).any(|py| {
                        a.edges().iter().all(|&(x, y)| b.has_edge(px[x], py[y]))
                    })
                })
        };
        try_sides(b) || try_sides(&b.swap_sides())
    }
}
