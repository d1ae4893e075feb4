//! Convex polyominoes, their lattice-point graphs, and geometric `N_p`
//! classification of polyomino ideals.
//!
//! A cell is named by its lower-left corner. After normalization the
//! bounding box of a polyomino with `w` columns and `h` rows of cells is
//! `[1, w] × [1, h]`, and its lattice points live in `[1, w+1] × [1, h+1]`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classifier::{classify_np, ClassifyError, Level, NpVerdict};
use crate::field::FieldSpec;
use crate::graph::BipartiteGraph;

pub type Cell = (i64, i64);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyominoError {
    #[error("polyomino has no cells")]
    Empty,
    #[error("cells are not edge-connected: {0} components")]
    Disconnected(usize),
    #[error("not convex: {0}")]
    NotConvex(ConvexityViolation),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Line {
    Row,
    Column,
}

/// Two cells on a common row (or column) with a gap between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexityViolation {
    pub line: Line,
    /// The row's `y` or the column's `x`.
    pub index: i64,
    pub first: Cell,
    pub second: Cell,
    pub gap: Cell,
}

impl fmt::Display for ConvexityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = match self.line {
            Line::Row => "row",
            Line::Column => "column",
        };
        write!(
            f,
            "{line} {} has cells {:?} and {:?} but not {:?}",
            self.index, self.first, self.second, self.gap
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Polyomino {
    cells: BTreeSet<Cell>,
}

/// Deduplicates, checks edge-connectivity and translates the cells so the
/// bounding box starts at `(1, 1)`.
pub fn parse_polyomino(cells: &[Cell]) -> Result<Polyomino, PolyominoError> {
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    if set.is_empty() {
        return Err(PolyominoError::Empty);
    }
    let components = count_components(&set);
    if components > 1 {
        return Err(PolyominoError::Disconnected(components));
    }
    Ok(Polyomino { cells: normalize(&set) })
}

fn normalize(cells: &BTreeSet<Cell>) -> BTreeSet<Cell> {
    let min_x = cells.iter().map(|c| c.0).min().unwrap_or(1);
    let min_y = cells.iter().map(|c| c.1).min().unwrap_or(1);
    cells.iter().map(|&(x, y)| (x - min_x + 1, y - min_y + 1)).collect()
}

fn count_components(cells: &BTreeSet<Cell>) -> usize {
    let mut seen = BTreeSet::new();
    let mut components = 0;
    for &start in cells {
        if !seen.insert(start) {
            continue;
        }
        components += 1;
        let mut queue = VecDeque::from([start]);
        while let Some((x, y)) = queue.pop_front() {
            for n in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                if cells.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
    }
    components
}

impl Polyomino {
    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of cell columns of the bounding box.
    pub fn width(&self) -> i64 {
        self.cells.iter().map(|c| c.0).max().unwrap_or(0)
    }

    /// Number of cell rows of the bounding box.
    pub fn height(&self) -> i64 {
        self.cells.iter().map(|c| c.1).max().unwrap_or(0)
    }

    /// `V(P)`: all corners of all cells.
    pub fn lattice_points(&self) -> BTreeSet<Cell> {
        self.cells
            .iter()
            .flat_map(|&(x, y)| [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)])
            .collect()
    }

    /// Cells of the bounding box that are not in the polyomino.
    pub fn missing_cells(&self) -> Vec<Cell> {
        let (w, h) = (self.width(), self.height());
        (1..=h)
            .flat_map(|y| (1..=w).map(move |x| (x, y)))
            .filter(|c| !self.cells.contains(c))
            .collect()
    }

    pub fn is_rectangle(&self) -> bool {
        self.cells.len() as i64 == self.width() * self.height()
    }

    pub fn is_convex(&self) -> bool {
        self.convexity_violation().is_none()
    }

    /// First gap found in a row, then in a column, scanning in order.
    pub fn convexity_violation(&self) -> Option<ConvexityViolation> {
        let gap_in = |line: Line, index: i64, coords: Vec<i64>| -> Option<ConvexityViolation> {
            let at = |k: i64| match line {
                Line::Row => (k, index),
                Line::Column => (index, k),
            };
            coords.windows(2).find(|w| w[1] > w[0] + 1).map(|w| ConvexityViolation {
                line,
                index,
                first: at(w[0]),
                second: at(w[1]),
                gap: at(w[0] + 1),
            })
        };
        for y in 1..=self.height() {
            let xs = self.cells.iter().filter(|c| c.1 == y).map(|c| c.0).collect();
            if let Some(v) = gap_in(Line::Row, y, xs) {
                return Some(v);
            }
        }
        for x in 1..=self.width() {
            let ys = self.cells.iter().filter(|c| c.0 == x).map(|c| c.1).collect();
            if let Some(v) = gap_in(Line::Column, x, ys) {
                return Some(v);
            }
        }
        None
    }

    /// The image under one of the eight symmetries of the square,
    /// renormalized.
    pub fn transformed(&self, s: Symmetry) -> Polyomino {
        // act on cell centres, doubled to stay integral
        let moved: BTreeSet<Cell> = self
            .cells
            .iter()
            .map(|&(x, y)| {
                let (cx, cy) = s.apply((2 * x + 1, 2 * y + 1));
                ((cx - 1).div_euclid(2), (cy - 1).div_euclid(2))
            })
            .collect();
        Polyomino { cells: normalize(&moved) }
    }

    /// Least cell list over all eight symmetries; equal for congruent
    /// polyominoes.
    pub fn canonical_form(&self) -> Vec<Cell> {
        Symmetry::ALL
            .iter()
            .map(|&s| self.transformed(s).cells.into_iter().collect::<Vec<_>>())
            .min()
            .expect("eight symmetries")
    }

    /// Rows top to bottom, `#` for a cell and `.` for a gap.
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        for y in (1..=self.height()).rev() {
            for x in 1..=self.width() {
                out.push(if self.cells.contains(&(x, y)) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

/// The eight symmetries of the square acting on the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Identity,
    Rotate90,
    Rotate180,
    Rotate270,
    /// `(x, y) ↦ (−x, y)`
    FlipHorizontal,
    /// `(x, y) ↦ (x, −y)`
    FlipVertical,
    /// `(x, y) ↦ (y, x)`
    Transpose,
    /// `(x, y) ↦ (−y, −x)`
    AntiTranspose,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Rotate90,
        Symmetry::Rotate180,
        Symmetry::Rotate270,
        Symmetry::FlipHorizontal,
        Symmetry::FlipVertical,
        Symmetry::Transpose,
        Symmetry::AntiTranspose,
    ];

    pub fn apply(self, (x, y): (i64, i64)) -> (i64, i64) {
        match self {
            Symmetry::Identity => (x, y),
            Symmetry::Rotate90 => (-y, x),
            Symmetry::Rotate180 => (-x, -y),
            Symmetry::Rotate270 => (y, -x),
            Symmetry::FlipHorizontal => (-x, y),
            Symmetry::FlipVertical => (x, -y),
            Symmetry::Transpose => (y, x),
            Symmetry::AntiTranspose => (-y, -x),
        }
    }
}

/// Bipartite graph on the coordinate lines: `x1..x{w+1}` are the vertical
/// lines, `y1..y{h+1}` the horizontal ones, and `x_i ~ y_j` iff `(i, j)` is a
/// lattice point of `p`.
pub fn poly_to_graph(p: &Polyomino) -> Result<BipartiteGraph, PolyominoError> {
    if let Some(v) = p.convexity_violation() {
        return Err(PolyominoError::NotConvex(v));
    }
    let (m, n) = ((p.width() + 1) as usize, (p.height() + 1) as usize);
    let edges: Vec<(usize, usize)> =
        p.lattice_points().into_iter().map(|(i, j)| ((i - 1) as usize, (j - 1) as usize)).collect();
    Ok(BipartiteGraph::with_default_labels(m, n, edges).expect("lattice points are distinct"))
}

/// Shape-based reason for a polyomino verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeometricCertificate {
    /// A single row or column of `length` cells.
    Strip { length: i64 },
    /// A full `width × height` rectangle of cells, both at least 2.
    Rectangle { width: i64, height: i64 },
    /// A full rectangle with both sides at least 4 over characteristic 3.
    CharThreeRectangle { width: i64, height: i64 },
    /// After `symmetry`, every missing cell of the bounding box lies in the
    /// first row or first column (coordinates in the transformed frame).
    FirstRowOrColumn { symmetry: Symmetry, missing: Vec<Cell> },
    /// No symmetry moves the missing cells into the first row or column.
    Unplaceable { missing: Vec<Cell> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyVerdict {
    pub level: Level,
    pub geometry: GeometricCertificate,
    /// Classification of the associated graph, with its own certificate.
    pub graph: NpVerdict,
}

/// Whether the missing cells `missing` (relative to a box with corner cell
/// `(1, 1)`) all lie in row 1 or column 1 such that the complement of the
/// lattice-point graph stays connected: if both the row and the column
/// carry missing cells away from the corner, the corner cell must be
/// missing too.
fn placed_in_first_row_or_column(missing: &[Cell]) -> bool {
    if !missing.iter().all(|&(x, y)| x == 1 || y == 1) {
        return false;
    }
    let in_row = missing.iter().any(|&(x, y)| y == 1 && x > 1);
    let in_column = missing.iter().any(|&(x, y)| x == 1 && y > 1);
    !(in_row && in_column) || missing.contains(&(1, 1))
}

/// Classifies the polyomino ideal of a convex polyomino from its shape and
/// attaches the graph-side verdict of [`poly_to_graph`].
pub fn classify_polyomino(p: &Polyomino, field: FieldSpec) -> Result<PolyVerdict, PolyominoError> {
    let g = poly_to_graph(p)?;
    let graph = classify_np(&g, field)?;
    let (w, h) = (p.width(), p.height());
    let (level, geometry) = if w == 1 || h == 1 {
        (Level::NInf, GeometricCertificate::Strip { length: w.max(h) })
    } else if p.is_rectangle() {
        if field.characteristic() == 3 && w >= 4 && h >= 4 {
            (Level::N2, GeometricCertificate::CharThreeRectangle { width: w, height: h })
        } else {
            (Level::N3, GeometricCertificate::Rectangle { width: w, height: h })
        }
    } else {
        let placed = Symmetry::ALL.iter().find_map(|&s| {
            let missing = p.transformed(s).missing_cells();
            placed_in_first_row_or_column(&missing).then_some((s, missing))
        });
        match placed {
            Some((symmetry, missing)) => (Level::N2, GeometricCertificate::FirstRowOrColumn { symmetry, missing }),
            None => (Level::N1, GeometricCertificate::Unplaceable { missing: p.missing_cells() }),
        }
    };
    Ok(PolyVerdict { level, geometry, graph })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cells: &[Cell]) -> Polyomino {
        parse_polyomino(cells).unwrap()
    }

    fn l_tromino() -> Polyomino {
        poly(&[(1, 1), (2, 1), (1, 2)])
    }

    #[test]
    fn single_cell_normalizes() {
        let p = poly(&[(5, 7)]);
        assert_eq!(p.cells().iter().copied().collect::<Vec<_>>(), vec![(1, 1)]);
        assert_eq!(p.lattice_points().into_iter().collect::<Vec<_>>(), vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
    }

    #[test]
    fn l_tromino_lattice_points() {
        let pts = l_tromino().lattice_points();
        let expected: BTreeSet<Cell> =
            (1..=3).flat_map(|x| (1..=3).map(move |y| (x, y))).filter(|&c| c != (3, 3)).collect();
        assert_eq!(pts, expected);
    }

    #[test]
    fn disconnected_and_empty() {
        assert_eq!(parse_polyomino(&[(1, 1), (3, 1)]), Err(PolyominoError::Disconnected(2)));
        assert_eq!(parse_polyomino(&[]), Err(PolyominoError::Empty));
        // diagonal neighbours do not connect
        assert_eq!(parse_polyomino(&[(1, 1), (2, 2)]), Err(PolyominoError::Disconnected(2)));
    }

    #[test]
    fn convexity() {
        assert!(poly(&[(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (3, 2)]).is_convex());
        assert!(l_tromino().is_convex());
        let u = poly(&[(1, 1), (1, 2), (2, 1), (3, 1), (3, 2)]);
        let v = u.convexity_violation().unwrap();
        assert_eq!((v.line, v.index, v.first, v.second, v.gap), (Line::Row, 2, (1, 2), (3, 2), (2, 2)));
        assert!(matches!(poly_to_graph(&u), Err(PolyominoError::NotConvex(_))));
    }

    #[test]
    fn graphs_of_basic_shapes() {
        assert_eq!(poly_to_graph(&poly(&[(1, 1)])).unwrap().is_complete_bipartite(), Some((2, 2)));
        let rect: Vec<Cell> = (1..=3).flat_map(|x| (1..=2).map(move |y| (x, y))).collect();
        assert_eq!(poly_to_graph(&poly(&rect)).unwrap().is_complete_bipartite(), Some((4, 3)));
        let g = poly_to_graph(&l_tromino()).unwrap();
        assert_eq!(g.num_edges(), 8);
        assert_eq!(g.bipartite_complement().edge_labels(), vec![("x3".to_string(), "y3".to_string())]);
    }

    #[test]
    fn levels_of_small_shapes() {
        let q = FieldSpec::RATIONALS;
        assert_eq!(classify_polyomino(&poly(&[(1, 1)]), q).unwrap().level, Level::NInf);
        let square = poly(&[(1, 1), (1, 2), (2, 1), (2, 2)]);
        assert_eq!(classify_polyomino(&square, q).unwrap().level, Level::N3);
        let v = classify_polyomino(&l_tromino(), q).unwrap();
        assert_eq!(v.level, Level::N2);
        assert_eq!(v.graph.level, Level::N2);
        let strip = poly(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        let v = classify_polyomino(&strip, q).unwrap();
        assert_eq!(v.level, Level::NInf);
        assert_eq!(v.geometry, GeometricCertificate::Strip { length: 4 });
        assert_eq!(poly_to_graph(&strip).unwrap().is_complete_bipartite(), Some((5, 2)));
    }

    #[test]
    fn large_square_over_characteristic_three() {
        let cells: Vec<Cell> = (1..=4).flat_map(|x| (1..=4).map(move |y| (x, y))).collect();
        let p = poly(&cells);
        assert_eq!(classify_polyomino(&p, FieldSpec::prime(3)).unwrap().level, Level::N2);
        assert_eq!(classify_polyomino(&p, FieldSpec::RATIONALS).unwrap().level, Level::N3);
    }

    #[test]
    fn s_tetromino_bites_are_not_enough() {
        // the two missing cells sit at opposite corners of the 3×2 box
        let s = poly(&[(1, 1), (2, 1), (2, 2), (3, 2)]);
        let v = classify_polyomino(&s, FieldSpec::RATIONALS).unwrap();
        assert_eq!(v.level, Level::N1);
        assert_eq!(v.graph.level, Level::N1);
    }

    #[test]
    fn symmetries_preserve_shape() {
        let p = poly(&[(1, 1), (2, 1), (3, 1), (1, 2)]);
        for s in Symmetry::ALL {
            let t = p.transformed(s);
            assert_eq!(t.len(), 4);
            assert_eq!(t.canonical_form(), p.canonical_form());
            assert_eq!(
                classify_polyomino(&t, FieldSpec::RATIONALS).unwrap().level,
                classify_polyomino(&p, FieldSpec::RATIONALS).unwrap().level
            );
        }
        assert_eq!(p.transformed(Symmetry::Rotate180).to_ascii(), "###\n..#\n");
    }
}
