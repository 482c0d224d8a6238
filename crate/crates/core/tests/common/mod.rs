#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use polyideal::algebra::Monomial;
use polyideal::{parse_polyomino, Cell, Interval, Point, Polyomino};

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn golden(name: &str) -> Polyomino {
    let text = std::fs::read_to_string(data(name)).unwrap();
    parse_polyomino(&text).unwrap()
}

pub const GOLDEN: [&str; 7] =
    ["ring3.txt", "square.txt", "domino.txt", "staircase.txt", "gamma.txt", "zigzag16.txt", "closed30.txt"];

/// Inner intervals by checking every pair of points in the bounding box.
pub fn inner_intervals_oracle(p: &Polyomino) -> BTreeSet<Interval> {
    let cells: BTreeSet<Cell> = p.cells().iter().copied().collect();
    let xs = || cells.iter().map(|c| c.ll.x);
    let ys = || cells.iter().map(|c| c.ll.y);
    let (x0, x1) = (xs().min().unwrap(), xs().max().unwrap() + 1);
    let (y0, y1) = (ys().min().unwrap(), ys().max().unwrap() + 1);
    let mut out = BTreeSet::new();
    for ax in x0..=x1 {
        for ay in y0..=y1 {
            for bx in ax + 1..=x1 {
                for by in ay + 1..=y1 {
                    let inside = (ax..bx).all(|x| (ay..by).all(|y| cells.contains(&Cell::new(x, y))));
                    if inside {
                        out.insert(Interval::new(Point::new(ax, ay), Point::new(bx, by)).unwrap());
                    }
                }
            }
        }
    }
    out
}

/// Krull dimension of `K[x]/J` as the largest variable set containing the
/// support of no generator, by trying every subset.
pub fn subset_dim_oracle(nvars: usize, gens: &[Monomial]) -> usize {
    let masks: Vec<u32> = gens.iter().map(|g| g.support().iter().fold(0u32, |m, &v| m | 1 << v)).collect();
    (0u32..1 << nvars)
        .filter(|s| masks.iter().all(|&g| g & s != g))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Connected cell sets of size `n` in an `(2n-1)`-square window, up to
/// translation.
pub fn fixed_polyomino_oracle(n: usize) -> BTreeSet<Vec<Cell>> {
    let side = 2 * n as i32 - 1;
    let all: Vec<Cell> = (0..side).flat_map(|x| (0..side).map(move |y| Cell::new(x, y))).collect();
    let mut out = BTreeSet::new();
    let mut chosen = Vec::new();
    fn rec(all: &[Cell], start: usize, n: usize, chosen: &mut Vec<Cell>, out: &mut BTreeSet<Vec<Cell>>) {
        if chosen.len() == n {
            if connected(chosen) {
                out.insert(normalize(chosen));
            }
            return;
        }
        for i in start..all.len() {
            chosen.push(all[i]);
            rec(all, i + 1, n, chosen, out);
            chosen.pop();
        }
    }
    rec(&all, 0, n, &mut chosen, &mut out);
    out
}

fn connected(cells: &[Cell]) -> bool {
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    let mut seen = BTreeSet::from([cells[0]]);
    let mut stack = vec![cells[0]];
    while let Some(c) = stack.pop() {
        for d in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let nb = Cell::new(c.ll.x + d.0, c.ll.y + d.1);
            if set.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    seen.len() == set.len()
}

pub fn normalize(cells: &[Cell]) -> Vec<Cell> {
    let mx = cells.iter().map(|c| c.ll.x).min().unwrap();
    let my = cells.iter().map(|c| c.ll.y).min().unwrap();
    let mut v: Vec<Cell> = cells.iter().map(|c| Cell::new(c.ll.x - mx, c.ll.y - my)).collect();
    v.sort();
    v
}
