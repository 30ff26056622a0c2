use alloc::vec;
use alloc::vec::Vec;

use super::{Collector, Half, Location, PropertyId, Violation};
use crate::bend::{self, BendOrientation};
use crate::consts::FranklinConstants;
use crate::square::Square;

pub(super) fn scan_definition(square: &Square, consts: &FranklinConstants, sink: &mut Collector) {
    scan_permutation(square, sink);
    scan_line_sums(square, consts, sink);
    scan_bends(square, consts, sink);
    scan_windows(square, consts, sink);
}

/// Each value of `1..=n²` must occur exactly once. One violation per value
/// whose count differs from 1 (`expected` = 1, `actual` = count).
pub fn check_permutation(square: &Square) -> Vec<Violation> {
    let mut sink = Collector::new(usize::MAX);
    scan_permutation(square, &mut sink);
    sink.into_violations()
}

/// Rows and columns sum to `M`, half rows and half columns to `M/2`.
pub fn check_line_sums(square: &Square) -> Vec<Violation> {
    let mut sink = Collector::new(usize::MAX);
    scan_line_sums(square, &square.constants(), &mut sink);
    sink.into_violations()
}

/// All `4n` toroidal bend diagonals sum to `M`.
pub fn check_bend_diagonals(square: &Square) -> Vec<Violation> {
    let mut sink = Collector::new(usize::MAX);
    scan_bends(square, &square.constants(), &mut sink);
    sink.into_violations()
}

/// Toroidal 2×2 windows sum to `2N`, 4×4 windows to `8N`, and the four
/// corners with the four central cells to `4N`.
pub fn check_windows(square: &Square) -> Vec<Violation> {
    let mut sink = Collector::new(usize::MAX);
    scan_windows(square, &square.constants(), &mut sink);
    sink.into_violations()
}

/// The left half holds exactly `1..=n²/4` and their complements.
///
/// One violation per misplaced cell, located at the cell; `expected` is the
/// half (1 = left, 2 = right) the value belongs to and `actual` the half it
/// sits in.
pub fn check_side_partition(square: &Square) -> Vec<Violation> {
    let mut sink = Collector::new(usize::MAX);
    scan_side_partition(square, &square.constants(), &mut sink);
    sink.into_violations()
}

fn scan_permutation(square: &Square, sink: &mut Collector) {
    let n = square.order();
    let mut counts = vec![0u64; n * n + 1];
    for &v in square.as_slice() {
        counts[v as usize] += 1;
    }
    for (value, &count) in counts.iter().enumerate().skip(1) {
        sink.record(PropertyId::Permutation, Location::Value(value as u64), 1, count);
    }
}

fn scan_line_sums(square: &Square, consts: &FranklinConstants, sink: &mut Collector) {
    let n = square.order();
    let h = n / 2;
    let (full, half) = (consts.magic_sum(), consts.half_magic_sum());
    let sum = |it: &mut dyn Iterator<Item = u32>| it.map(u64::from).sum::<u64>();

    for r in 1..=n {
        let row = square.row(r);
        let (a, b) = (sum(&mut row[..h].iter().copied()), sum(&mut row[h..].iter().copied()));
        sink.record(PropertyId::RowSum, Location::Row(r), full, a + b);
        sink.record(PropertyId::HalfRowSum, Location::HalfRow { row: r, half: Half::First }, half, a);
        sink.record(PropertyId::HalfRowSum, Location::HalfRow { row: r, half: Half::Second }, half, b);
    }
    for c in 1..=n {
        let a = sum(&mut (1..=h).map(|r| square.get(r, c)));
        let b = sum(&mut (h + 1..=n).map(|r| square.get(r, c)));
        sink.record(PropertyId::ColSum, Location::Column(c), full, a + b);
        sink.record(PropertyId::HalfColSum, Location::HalfColumn { col: c, half: Half::First }, half, a);
        sink.record(PropertyId::HalfColSum, Location::HalfColumn { col: c, half: Half::Second }, half, b);
    }
}

fn scan_bends(square: &Square, consts: &FranklinConstants, sink: &mut Collector) {
    let n = square.order();
    for orientation in BendOrientation::ALL {
        for anchor in 1..=n {
            let total: u64 = bend::cells(n, orientation, anchor).map(|(r, c)| u64::from(square.get(r, c))).sum();
            sink.record(PropertyId::BendDiagonal, Location::Bend { orientation, anchor }, consts.magic_sum(), total);
        }
    }
}

/// Sums of every toroidal `size × size` window, indexed by 0-based top-left
/// corner in row-major order.
fn window_sums(square: &Square, size: usize) -> Vec<u64> {
    let n = square.order();
    let cells = square.as_slice();
    // vertical strips of `size` cells starting at each (r, c)
    let mut strips = vec![0u64; n * n];
    for r in 0..n {
        for c in 0..n {
            strips[r * n + c] = (0..size).map(|k| u64::from(cells[((r + k) % n) * n + c])).sum();
        }
    }
    let mut out = vec![0u64; n * n];
    for r in 0..n {
        for c in 0..n {
            out[r * n + c] = (0..size).map(|k| strips[r * n + (c + k) % n]).sum();
        }
    }
    out
}

fn scan_windows(square: &Square, consts: &FranklinConstants, sink: &mut Collector) {
    let n = square.order();
    let big_n = consts.complement();
    for (size, property, expected) in [(2, PropertyId::TwoByTwo, 2 * big_n), (4, PropertyId::FourByFour, 8 * big_n)] {
        for (idx, total) in window_sums(square, size).into_iter().enumerate() {
            let location = Location::Window { size, row: idx / n + 1, col: idx % n + 1 };
            sink.record(property, location, expected, total);
        }
    }
    let h = n / 2;
    let total: u64 = [(1, 1), (1, n), (n, 1), (n, n), (h, h), (h, h + 1), (h + 1, h), (h + 1, h + 1)]
        .iter()
        .map(|&(r, c)| u64::from(square.get(r, c)))
        .sum();
    sink.record(PropertyId::CornersMiddles, Location::CornersMiddles, 4 * big_n, total);
}

pub(super) fn scan_side_partition(square: &Square, consts: &FranklinConstants, sink: &mut Collector) {
    let n = square.order();
    let quarter_square = (n * n / 4) as u64;
    let big_n = consts.complement();
    for r in 1..=n {
        for (c, &v) in square.row(r).iter().enumerate() {
            let v = u64::from(v);
            let belongs_left = v <= quarter_square || v >= big_n - quarter_square;
            let expected = if belongs_left { Half::First } else { Half::Second };
            let actual = Half::of(c + 1, n);
            sink.record(
                PropertyId::SidePartition,
                Location::Cell { row: r, col: c + 1 },
                expected.number(),
                actual.number(),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::generate;

    #[test]
    fn constant_grid_breaks_permutation() {
        let s = Square::from_vec(8, vec![1; 64]).unwrap();
        let v = check_permutation(&s);
        assert_eq!(v.len(), 64);
        assert_eq!(
            v[0],
            Violation { property: PropertyId::Permutation, location: Location::Value(1), expected: 1, actual: 64 }
        );
        assert!(v[1..].iter().all(|x| x.actual == 0));
    }

    #[test]
    fn duplicate_value_is_caught() {
        let s = generate(16).unwrap();
        let dup = s.with_cell(1, 1, s.get(1, 2)).unwrap();
        let v = check_permutation(&dup);
        assert_eq!(v.len(), 2);
        assert!(v.contains(&Violation {
            property: PropertyId::Permutation,
            location: Location::Value(u64::from(s.get(1, 2))),
            expected: 1,
            actual: 2
        }));
    }

    #[test]
    fn degenerate_rows() {
        let rows = [[1, 2, 3, 4]; 4];
        let s = Square::from_rows(&rows).unwrap();
        let v = check_line_sums(&s);
        let row_failures = v.iter().filter(|x| x.property == PropertyId::RowSum).count();
        assert_eq!(row_failures, 4);
        assert!(v.iter().any(|x| x.location == Location::Row(1) && x.expected == 34 && x.actual == 10));
    }

    #[test]
    fn generated_eight_has_magic_lines() {
        let s = generate(8).unwrap();
        assert!(check_line_sums(&s).is_empty());
        assert!(check_bend_diagonals(&s).is_empty());
        assert!(check_windows(&s).is_empty());
        assert!(check_side_partition(&s).is_empty());
    }

    #[test]
    fn window_sums_match_direct_summation() {
        let s = generate(8).unwrap().swapped((1, 1), (5, 6)).unwrap();
        let n = 8isize;
        for size in [2usize, 4] {
            let sums = window_sums(&s, size);
            for r in 1..=n {
                for c in 1..=n {
                    let mut direct = 0u64;
                    for dr in 0..size as isize {
                        for dc in 0..size as isize {
                            direct += u64::from(s.get_wrapped(r + dr, c + dc));
                        }
                    }
                    assert_eq!(sums[((r - 1) * n + c - 1) as usize], direct);
                }
            }
        }
    }

    #[test]
    fn mirrored_square_breaks_side_partition() {
        let s = generate(8).unwrap().mirrored();
        let v = check_side_partition(&s);
        assert_eq!(v.len(), 64);
        assert!(v.iter().all(|x| x.expected != x.actual));
    }
}
