//! Structural identities of squares produced by the builder.
//!
//! Throughout, `σ(c)` is `+1` for odd columns and `-1` for even columns, and
//! `N = n² + 1`.
//!
//! * Adjacent pairs: for rows `r` not in `{n/4, 3n/4, n}`,
//!   `A[r][c] + A[r+1][c] = N ± 1`. Inside the top and bottom bands the sign
//!   is `+` when `r` and `c` have equal parity; inside the middle band it is
//!   reversed.
//! * Boundary rows: `A[n/4][c] + A[n/4+1][c] = N + σ·n/4`,
//!   `A[3n/4][c] + A[3n/4+1][c] = N - σ·3n/4`, `A[n][c] + A[1][c] = N + σ·(n/2-1)`.
//! * Quarter columns: the four `n/4`-row blocks of a column sum to
//!   `(n/8)N + σ·n/8`, `(n/8)N - σ·n/8`, `(n/8)N - σ·n/8`, `(n/8)N + σ·n/8`.
//! * Equidistant pairs, `i` in `0..n/4`:
//!   `A[1+i][c] + A[n-i][c] = N + σ·(-1)^i·(n/2-1-2i)` and
//!   `A[n/2-i][c] + A[n/2+1+i][c] = N + σ·(-1)^i·(1+2i)`.
//! * Bend quadruples: for every row `r` (wrapping) and `i` in `0..n/4`,
//!   `A[r][1+2i] + A[r'][2+2i] + A[r][n-2i] + A[r'][n-1-2i] = 2N` with `r'`
//!   the row below, and likewise with the two rows exchanged.
//!
//! The sign tables were pinned by direct summation over generated squares.

use alloc::vec::Vec;

use super::{Collector, Location, PropertyId, Violation};
use crate::consts::FranklinConstants;
use crate::square::Square;

/// Runs the five lemma families. Only meaningful for `n = 2^r`, `r >= 3`;
/// returns an empty list for other orders.
pub fn check_proof_lemmas(square: &Square) -> Vec<Violation> {
    let consts = square.constants();
    let mut sink = Collector::new(usize::MAX);
    if consts.is_constructible() {
        scan_lemmas(square, &consts, &mut sink);
    }
    sink.into_violations()
}

pub(super) fn scan_lemmas(square: &Square, consts: &FranklinConstants, sink: &mut Collector) {
    adjacent_pairs(square, consts, sink);
    boundary_rows(square, consts, sink);
    quarter_columns(square, consts, sink);
    equidistant_pairs(square, consts, sink);
    bend_quadruples(square, consts, sink);
}

#[inline]
fn sigma(col: usize) -> i64 {
    if col % 2 == 1 {
        1
    } else {
        -1
    }
}

#[inline]
fn offset(base: u64, delta: i64) -> u64 {
    base.checked_add_signed(delta).expect("lemma target is positive")
}

fn pair_sum(square: &Square, col: usize, a: usize, b: usize) -> u64 {
    u64::from(square.get(a, col)) + u64::from(square.get(b, col))
}

fn adjacent_pairs(square: &Square, consts: &FranklinConstants, sink: &mut Collector) {
    let n = square.order();
    let (q, big_n) = (n / 4, consts.complement());
    for c in 1..=n {
        for r in (1..n).filter(|&r| r != q && r != 3 * q) {
            let same_parity = r % 2 == c % 2;
            let in_middle = r > q && r < 3 * q;
            let delta = if same_parity != in_middle { 1 } else { -1 };
            let location = Location::ColumnPair { col: c, first_row: r, second_row: r + 1 };
            sink.record(PropertyId::AdjacentPairLemma, location, offset(big_n, delta), pair_sum(square, c, r, r + 1));
        }
    }
}

fn boundary_rows(square: &Square, consts: &FranklinConstants, sink: &mut Collector) {
    let n = square.order();
    let (q, big_n) = (n / 4, consts.complement());
    for c in 1..=n {
        let s = sigma(c);
        let n_i = n as i64;
        for (a, b, delta) in [(q, q + 1, s * n_i / 4), (3 * q, 3 * q + 1, -s * 3 * n_i / 4), (n, 1, s * (n_i / 2 - 1))]
        {
            let location = Location::ColumnPair { col: c, first_row: a, second_row: b };
            sink.record(PropertyId::BoundaryRowLemma, location, offset(big_n, delta), pair_sum(square, c, a, b));
        }
    }
}

fn quarter_columns(square: &Square, consts: &FranklinConstants, sink: &mut Collector) {
    let n = square.order();
    let q = n / 4;
    let base = (n as u64 / 8) * consts.complement();
    let eighth = n as i64 / 8;
    for c in 1..=n {
        let s = sigma(c);
        for (block, sign) in [1i64, -1, -1, 1].into_iter().enumerate() {
            let (first, last) = (block * q + 1, (block + 1) * q);
            let total: u64 = (first..=last).map(|r| u64::from(square.get(r, c))).sum();
            let location = Location::ColumnBlock { col: c, first_row: first, last_row: last };
            sink.record(PropertyId::QuarterColumnLemma, location, offset(base, sign * s * eighth), total);
        }
    }
}

fn equidistant_pairs(square: &Square, consts: &FranklinConstants, sink: &mut Collector) {
    let n = square.order();
    let (h, big_n) = (n / 2, consts.complement());
    for c in 1..=n {
        let s = sigma(c);
        for i in 0..n / 4 {
            let alt = if i % 2 == 0 { 1 } else { -1 };
            let outer = (h as i64) - 1 - 2 * i as i64;
            let inner = 1 + 2 * i as i64;
            for (a, b, delta) in [(1 + i, n - i, s * alt * outer), (h - i, h + 1 + i, s * alt * inner)] {
                let location = Location::ColumnPair { col: c, first_row: a, second_row: b };
                sink.record(
                    PropertyId::EquidistantPairLemma,
                    location,
                    offset(big_n, delta),
                    pair_sum(square, c, a, b),
                );
            }
        }
    }
}

fn bend_quadruples(square: &Square, consts: &FranklinConstants, sink: &mut Collector) {
    let n = square.order();
    let target = 2 * consts.complement();
    for r in 1..=n {
        let next = r % n + 1;
        for i in 0..n / 4 {
            let cols = [1 + 2 * i, 2 + 2 * i, n - 2 * i, n - 1 - 2 * i];
            for (rising, (first, second)) in [(false, (r, next)), (true, (next, r))] {
                let total: u64 = [(first, cols[0]), (second, cols[1]), (first, cols[2]), (second, cols[3])]
                    .iter()
                    .map(|&(row, col)| u64::from(square.get(row, col)))
                    .sum();
                sink.record(
                    PropertyId::BendQuadrupleLemma,
                    Location::Quadruple { row: r, pair: i, rising },
                    target,
                    total,
                );
            }
        }
    }
}
