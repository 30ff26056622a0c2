#![allow(dead_code)]

use franklin_core::{Cell, Square};

const TABLE1: &str = include_str!("../data/table1.csv");
const F3_LEFT: &str = include_str!("../data/f3_left.txt");
const F3_RIGHT: &str = include_str!("../data/f3_right.txt");

/// The published 32×32 square, row by row.
pub fn table1_rows() -> Vec<Vec<Cell>> {
    TABLE1
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split(',').map(|t| t.trim().parse().unwrap()).collect())
        .collect()
}

pub fn table1() -> Square {
    Square::from_rows(&table1_rows()).unwrap()
}

/// Half of the published 16×16 square, with symbolic `N-x` entries resolved.
fn f3_half(text: &str, big_n: Cell) -> Vec<Vec<Cell>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|t| match t.strip_prefix("N-") {
                    Some(x) => big_n - x.parse::<Cell>().unwrap(),
                    None => t.parse().unwrap(),
                })
                .collect()
        })
        .collect()
}

/// The published 16×16 square: left half beside right half, N = 257.
pub fn f3() -> Square {
    let left = f3_half(F3_LEFT, 257);
    let right = f3_half(F3_RIGHT, 257);
    let rows: Vec<Vec<Cell>> = left
        .into_iter()
        .zip(right)
        .map(|(mut l, r)| {
            l.extend(r);
            l
        })
        .collect();
    Square::from_rows(&rows).unwrap()
}

/// A toroidal grid whose every 2×2 window sums to `2N`, built as
/// `u(c) + v(r) + (-1)^c f(r) + (-1)^r g(c)` where `u` alternates between
/// `u0` and `U - u0`, `v` between `v0` and `V - v0`, and `U + V = N`.
///
/// `shifts` holds the offsets of `u0` and `v0` from their midpoints and
/// `f`, `g` hold one value per row/column. All magnitudes must stay within
/// `n²/16` for the cells to remain in `1..=n²`.
pub fn two_by_two_grid(n: usize, shifts: (i64, i64), f: &[i64], g: &[i64]) -> Square {
    let big_n = (n * n + 1) as i64;
    let u_total = big_n / 2;
    let v_total = big_n - u_total;
    let u0 = u_total / 2 + shifts.0;
    let v0 = v_total / 2 + shifts.1;
    let sign = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
    let mut cells = Vec::with_capacity(n * n);
    for r in 1..=n {
        for c in 1..=n {
            let u = if c % 2 == 1 { u0 } else { u_total - u0 };
            let v = if r % 2 == 1 { v0 } else { v_total - v0 };
            let value = u + v + sign(c) * f[r - 1] + sign(r) * g[c - 1];
            assert!(value >= 1 && value < big_n, "cell ({r}, {c}) = {value} out of range");
            cells.push(value as Cell);
        }
    }
    Square::from_vec(n, cells).unwrap()
}

/// Random instance of [`two_by_two_grid`].
pub fn random_two_by_two_grid<R: rand::Rng>(n: usize, rng: &mut R) -> Square {
    let spread = (n * n / 16) as i64;
    let mut draw = || rng.gen_range(-spread..=spread);
    let shifts = (draw(), draw());
    let f: Vec<i64> = (0..n).map(|_| draw()).collect();
    let g: Vec<i64> = (0..n).map(|_| draw()).collect();
    two_by_two_grid(n, shifts, &f, &g)
}

/// Recomputes the sum (or count) a violation location refers to, without
/// going through the verifier.
pub fn recompute(square: &Square, location: &franklin_core::verifier::Location) -> u64 {
    use franklin_core::verifier::{Half, Location};
    let n = square.order();
    let h = n / 2;
    let at = |r: usize, c: usize| u64::from(square.get(r, c));
    let span = |half: Half| match half {
        Half::First => 1..=h,
        Half::Second => h + 1..=n,
    };
    match *location {
        Location::Value(v) => square.as_slice().iter().filter(|&&x| u64::from(x) == v).count() as u64,
        Location::Row(r) => (1..=n).map(|c| at(r, c)).sum(),
        Location::Column(c) => (1..=n).map(|r| at(r, c)).sum(),
        Location::HalfRow { row, half } => span(half).map(|c| at(row, c)).sum(),
        Location::HalfColumn { col, half } => span(half).map(|r| at(r, col)).sum(),
        Location::Bend { orientation, anchor } => {
            franklin_core::BendPath::new(&square.constants(), orientation, anchor)
                .unwrap()
                .cells()
                .iter()
                .map(|&(r, c)| at(r, c))
                .sum()
        }
        Location::Window { size, row, col } => {
            let mut total = 0;
            for dr in 0..size {
                for dc in 0..size {
                    total += u64::from(square.get_wrapped((row + dr) as isize, (col + dc) as isize));
                }
            }
            total
        }
        Location::CornersMiddles => [(1, 1), (1, n), (n, 1), (n, n), (h, h), (h, h + 1), (h + 1, h), (h + 1, h + 1)]
            .iter()
            .map(|&(r, c)| at(r, c))
            .sum(),
        Location::Cell { col, .. } => {
            if col <= h {
                1
            } else {
                2
            }
        }
        Location::ColumnPair { col, first_row, second_row } => at(first_row, col) + at(second_row, col),
        Location::ColumnBlock { col, first_row, last_row } => (first_row..=last_row).map(|r| at(r, col)).sum(),
        Location::Quadruple { row, pair, rising } => {
            let next = row % n + 1;
            let (a, b) = if rising { (next, row) } else { (row, next) };
            at(a, 1 + 2 * pair) + at(b, 2 + 2 * pair) + at(a, n - 2 * pair) + at(b, n - 1 - 2 * pair)
        }
    }
}
