//! Small named polyominoes used by tests, benches and the CLI.

use crate::lattice::Cell;
use crate::polyomino::Polyomino;

fn build(cells: impl IntoIterator<Item = (i32, i32)>) -> Polyomino {
    Polyomino::build(cells.into_iter().map(Cell::from)).expect("named shapes are valid polyominoes")
}

pub fn single() -> Polyomino {
    build([(0, 0)])
}

/// Horizontal domino `{(0,0), (1,0)}`.
pub fn domino() -> Polyomino {
    build([(0, 0), (1, 0)])
}

/// Horizontal `1 x n` bar.
pub fn bar(n: i32) -> Polyomino {
    build((0..n).map(|x| (x, 0)))
}

/// Full `w x h` rectangle of cells.
pub fn square(w: i32, h: i32) -> Polyomino {
    build((0..w).flat_map(|x| (0..h).map(move |y| (x, y))))
}

/// Border of the `w x h` rectangle of cells; a closed path when both sides
/// are at least 3.
pub fn ring(w: i32, h: i32) -> Polyomino {
    build((0..w).flat_map(|x| (0..h).map(move |y| (x, y))).filter(|&(x, y)| x == 0 || y == 0 || x == w - 1 || y == h - 1))
}

/// Staircase `{(0,0),(1,0),(1,1),(2,1),...}` with `steps` horizontal dominoes.
pub fn staircase(steps: i32) -> Polyomino {
    build((0..steps).flat_map(|i| [(i, i), (i + 1, i)]))
}

/// A horizontal block of four cells and a vertical block of four cells
/// hooked at one vertex, with the middle cell filling the corner.
pub fn gamma_path() -> Polyomino {
    // vertical block going down from (-1,-1), middle cell (0,-1), horizontal block right from (0,0)
    build([(-1, -4), (-1, -3), (-1, -2), (-1, -1), (0, -1), (0, 0), (1, 0), (2, 0), (3, 0)])
}
