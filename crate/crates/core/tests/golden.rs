mod common;

use std::collections::BTreeSet;

use franklin_core::builder::{generate, left_schedule, right_schedule, PartialSquare, Schedule};
use franklin_core::constants_for;

#[test]
fn order_32_matches_published_table() {
    let expected = common::table1_rows();
    assert_eq!(expected.len(), 32);
    let built = generate(32).unwrap();
    let mut mismatches = 0;
    for (r, row) in expected.iter().enumerate() {
        assert_eq!(row.len(), 32);
        for (c, &v) in row.iter().enumerate() {
            if built.get(r + 1, c + 1) != v {
                mismatches += 1;
            }
        }
    }
    assert_eq!(mismatches, 0);
    assert_eq!(&built.row(1)[..4], &[784, 817, 848, 881]);
    assert_eq!(&built.row(32)[29..], &[321, 320, 257]);
}

#[test]
fn table1_first_row_is_magic() {
    let row: u64 = common::table1_rows()[0].iter().map(|&v| u64::from(v)).sum();
    assert_eq!(row, 16400);
    assert_eq!(constants_for(32).unwrap().magic_sum(), row);
}

#[test]
fn order_16_matches_published_halves() {
    let published = common::f3();
    let built = generate(16).unwrap();
    assert_eq!(built, published);
    assert_eq!(built.get(1, 1), 200);
    assert_eq!(built.get(16, 8), 257 - 64);
    assert_eq!(built.get(1, 16), 257 - 72);
}

#[test]
fn generation_is_deterministic() {
    for n in [8, 16, 64, 256] {
        assert_eq!(generate(n).unwrap(), generate(n).unwrap());
    }
}

#[test]
fn schedule_tiles_the_square_exactly_once() {
    for r in 3..=8 {
        let n = 1usize << r;
        let consts = constants_for(n).unwrap();
        let mut hits = vec![0u8; n * n];
        for op in Schedule::new(consts).ops() {
            for p in op.placements(consts.complement()) {
                hits[(p.row - 1) * n + p.col - 1] += 1;
            }
        }
        assert!(hits.iter().all(|&h| h == 1), "order {n}");
        assert_eq!(Schedule::new(consts).entries().len(), 12 * n / 8);
    }
}

#[test]
fn halves_use_their_own_columns_and_number_ranges() {
    for r in 3..=7 {
        let n = 1usize << r;
        let consts = constants_for(n).unwrap();
        let q2 = (n * n / 4) as u64;
        let check = |ops: Vec<franklin_core::builder::PlacementOp>,
                     cols: std::ops::RangeInclusive<usize>,
                     nums: std::ops::RangeInclusive<u64>| {
            let mut smalls = BTreeSet::new();
            for op in &ops {
                assert!(cols.contains(&op.complement_col) && cols.contains(&op.small_col));
                for t in op.small_numbers() {
                    assert!(smalls.insert(t), "small number {t} reused");
                }
            }
            assert_eq!(smalls.into_iter().collect::<Vec<_>>(), nums.collect::<Vec<_>>());
        };
        check(left_schedule(&consts), 1..=n / 2, 1..=q2);
        check(right_schedule(&consts), n / 2 + 1..=n, q2 + 1..=2 * q2);
    }
}

#[test]
fn every_scheduled_pair_sums_to_complement() {
    for n in [8, 16, 32, 128] {
        let consts = constants_for(n).unwrap();
        let square = generate(n).unwrap();
        for op in Schedule::new(consts).ops() {
            for row in op.part.first_row()..=op.part.last_row() {
                let sum = u64::from(square.get(row, op.complement_col)) + u64::from(square.get(row, op.small_col));
                assert_eq!(sum, consts.complement());
            }
        }
    }
}

#[test]
fn left_half_holds_small_numbers_and_complements() {
    for n in [8, 16, 32, 64] {
        let square = generate(n).unwrap();
        let big_n = (n * n + 1) as u32;
        let q2 = (n * n / 4) as u32;
        let left: BTreeSet<u32> = square.rows().flat_map(|row| row[..n / 2].iter().copied()).collect();
        let expected: BTreeSet<u32> = (1..=q2).chain(big_n - q2..big_n).collect();
        assert_eq!(left, expected);
    }
}

#[test]
fn first_round_fills_center_pair_with_one_to_n() {
    for n in [8, 16, 32] {
        let consts = constants_for(n).unwrap();
        let mut grid = PartialSquare::new(consts);
        for op in &left_schedule(&consts)[..3] {
            grid.apply(op).unwrap();
        }
        let big_n = (n * n + 1) as u32;
        let mut seen = BTreeSet::new();
        for row in 1..=n {
            for col in [n / 4, n / 4 + 1] {
                seen.insert(grid.get(row, col).expect("center pair filled"));
            }
        }
        let expected: BTreeSet<u32> = (1..=n as u32).chain(big_n - n as u32..big_n).collect();
        assert_eq!(seen, expected);
    }
}
