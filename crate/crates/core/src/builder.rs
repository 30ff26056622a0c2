//! Construction of Franklin squares from a fixed schedule of column-pair fills.
//!
//! The square is split into a left half (columns `1..=n/2`) and a right half,
//! and each half into three row bands: top (`n/4` rows), middle (`n/2` rows)
//! and bottom (`n/4` rows). A [`PlacementOp`] fills one band of two columns,
//! `ca` and `cs`, walking through the band two rows at a time and placing a
//! small number `t` in one column and its complement `N - t` in the other, so
//! every filled row of the pair sums to `N = n² + 1`.
//!
//! Each half is built in `n/8` rounds of six ops. Round `j` of the left half
//! works outwards from the centre of that half; the right half works inwards
//! from the outer edge and uses start numbers shifted by `(n/2)²`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::consts::{constants_for, FranklinConstants};
use crate::error::BuildError;
use crate::square::{Cell, Square};

/// Row band of the square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartKind {
    Top,
    Middle,
    Bottom,
}

/// A row band with its 1-based first and last rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Part {
    kind: PartKind,
    first_row: usize,
    last_row: usize,
}

impl Part {
    pub fn new(kind: PartKind, consts: &FranklinConstants) -> Self {
        let n = consts.order();
        let (first_row, last_row) = match kind {
            PartKind::Top => (1, n / 4),
            PartKind::Middle => (n / 4 + 1, 3 * n / 4),
            PartKind::Bottom => (3 * n / 4 + 1, n),
        };
        Self { kind, first_row, last_row }
    }

    pub fn kind(&self) -> PartKind {
        self.kind
    }

    pub fn first_row(&self) -> usize {
        self.first_row
    }

    pub fn last_row(&self) -> usize {
        self.last_row
    }

    pub fn rows(&self) -> usize {
        self.last_row + 1 - self.first_row
    }

    pub fn contains(&self, row: usize) -> bool {
        (self.first_row..=self.last_row).contains(&row)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Starts at the last row of the part and climbs.
    Up,
    /// Starts at the first row of the part and descends.
    Down,
}

/// One fully resolved fill instruction.
///
/// `small_col` is the column that receives `t` on the row where the walk
/// starts; `complement_col` receives `N - t` there. The roles swap on the
/// next row of each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlacementOp {
    pub direction: Direction,
    pub part: Part,
    pub start: u64,
    pub complement_col: usize,
    pub small_col: usize,
    /// Number of steps; each step fills two rows of both columns.
    pub steps: usize,
}

/// A single cell write produced by an op.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placement {
    pub row: usize,
    pub col: usize,
    pub value: u64,
}

impl PlacementOp {
    /// Checks the op against its own invariants for a square of the given order.
    pub fn validate(&self, consts: &FranklinConstants) -> Result<(), BuildError> {
        let n = consts.order();
        if self.complement_col == self.small_col {
            return Err(BuildError::InvalidOp("complement and small columns coincide"));
        }
        for col in [self.complement_col, self.small_col] {
            if !(1..=n).contains(&col) {
                return Err(BuildError::OutOfBounds { row: self.part.first_row, col });
            }
        }
        if self.part != Part::new(self.part.kind, consts) {
            return Err(BuildError::InvalidOp("part rows do not match the square's bands"));
        }
        if 2 * self.steps != self.part.rows() {
            return Err(BuildError::InvalidOp("step count does not cover the part"));
        }
        if self.start == 0 || self.start + 2 * self.steps as u64 > consts.complement() {
            return Err(BuildError::InvalidOp("start number out of range"));
        }
        Ok(())
    }

    /// The `4 * steps` cell writes of this op, in fill order.
    pub fn placements(&self, complement: u64) -> impl Iterator<Item = Placement> + '_ {
        let op = *self;
        (0..op.steps).flat_map(move |i| {
            let t = op.start + 2 * i as u64;
            let (ca, cs) = (op.complement_col, op.small_col);
            match op.direction {
                Direction::Up => {
                    let lower = op.part.last_row - 2 * i;
                    let upper = lower - 1;
                    [
                        Placement { row: lower, col: cs, value: t },
                        Placement { row: lower, col: ca, value: complement - t },
                        Placement { row: upper, col: cs, value: complement - (t + 1) },
                        Placement { row: upper, col: ca, value: t + 1 },
                    ]
                }
                Direction::Down => {
                    let upper = op.part.first_row + 2 * i;
                    let lower = upper + 1;
                    [
                        Placement { row: upper, col: cs, value: complement - t },
                        Placement { row: upper, col: ca, value: t },
                        Placement { row: lower, col: cs, value: t + 1 },
                        Placement { row: lower, col: ca, value: complement - (t + 1) },
                    ]
                }
            }
        })
    }

    /// The small numbers `t, t + 1` written by this op.
    pub fn small_numbers(&self) -> core::ops::Range<u64> {
        self.start..self.start + 2 * self.steps as u64
    }
}

impl fmt::Display for PlacementOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = match self.direction {
            Direction::Up => "up",
            Direction::Down => "down",
        };
        let part = match self.part.kind {
            PartKind::Top => "top",
            PartKind::Middle => "middle",
            PartKind::Bottom => "bottom",
        };
        write!(
            f,
            "{dir:<4} {part:<6} rows {:>4}..={:<4} s={:<7} ca={:<4} cs={:<4} e={}",
            self.part.first_row, self.part.last_row, self.start, self.complement_col, self.small_col, self.steps
        )
    }
}

/// A grid under construction. Unwritten cells hold 0.
#[derive(Debug, Clone)]
pub struct PartialSquare {
    consts: FranklinConstants,
    cells: Vec<Cell>,
}

impl PartialSquare {
    pub fn new(consts: FranklinConstants) -> Self {
        let n = consts.order();
        Self { consts, cells: vec![0; n * n] }
    }

    pub fn constants(&self) -> &FranklinConstants {
        &self.consts
    }

    /// Value at 1-based `(row, col)`, or `None` if not yet written.
    pub fn get(&self, row: usize, col: usize) -> Option<Cell> {
        let n = self.consts.order();
        if !(1..=n).contains(&row) || !(1..=n).contains(&col) {
            return None;
        }
        match self.cells[(row - 1) * n + col - 1] {
            0 => None,
            v => Some(v),
        }
    }

    /// Applies an op. On error nothing is written.
    pub fn apply(&mut self, op: &PlacementOp) -> Result<(), BuildError> {
        op.validate(&self.consts)?;
        let n = self.consts.order();
        for p in op.placements(self.consts.complement()) {
            if !op.part.contains(p.row) {
                return Err(BuildError::OutOfBounds { row: p.row, col: p.col });
            }
            if self.cells[(p.row - 1) * n + p.col - 1] != 0 {
                return Err(BuildError::Overlap { row: p.row, col: p.col });
            }
        }
        for p in op.placements(self.consts.complement()) {
            self.cells[(p.row - 1) * n + p.col - 1] = p.value as Cell;
        }
        Ok(())
    }

    /// Converts to a [`Square`], failing on the first unwritten cell.
    pub fn finish(self) -> Result<Square, BuildError> {
        let n = self.consts.order();
        if let Some(idx) = self.cells.iter().position(|&v| v == 0) {
            return Err(BuildError::Unwritten { row: idx / n + 1, col: idx % n + 1 });
        }
        Ok(Square::from_vec(n, self.cells).expect("construction writes values in 1..=n²"))
    }
}

/// Applies an [`Direction::Up`] op.
pub fn up_fill(grid: &mut PartialSquare, op: &PlacementOp) -> Result<(), BuildError> {
    if op.direction != Direction::Up {
        return Err(BuildError::InvalidOp("up_fill given a Down op"));
    }
    grid.apply(op)
}

/// Applies a [`Direction::Down`] op.
pub fn down_fill(grid: &mut PartialSquare, op: &PlacementOp) -> Result<(), BuildError> {
    if op.direction != Direction::Down {
        return Err(BuildError::InvalidOp("down_fill given an Up op"));
    }
    grid.apply(op)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// An op with its position in the schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScheduleEntry {
    pub side: Side,
    /// Round index `j` in `0..n/8`.
    pub round: usize,
    /// Position inside the round, `1..=6`.
    pub step: usize,
    pub op: PlacementOp,
}

/// The complete ordered list of ops for one order: left half, then right half.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    consts: FranklinConstants,
    entries: Vec<ScheduleEntry>,
}

impl Schedule {
    pub fn new(consts: FranklinConstants) -> Self {
        let mut entries = side_entries(&consts, Side::Left);
        entries.extend(side_entries(&consts, Side::Right));
        Self { consts, entries }
    }

    pub fn constants(&self) -> &FranklinConstants {
        &self.consts
    }

    pub fn entries(&self) -> &[ScheduleEntry] {
        &self.entries
    }

    pub fn ops(&self) -> impl Iterator<Item = &PlacementOp> {
        self.entries.iter().map(|e| &e.op)
    }

    /// Runs every op on a fresh grid.
    pub fn run(&self) -> Result<Square, BuildError> {
        let mut grid = PartialSquare::new(self.consts);
        for op in self.ops() {
            grid.apply(op)?;
        }
        grid.finish()
    }
}

/// Ops for the left half, in execution order.
pub fn left_schedule(consts: &FranklinConstants) -> Vec<PlacementOp> {
    side_entries(consts, Side::Left).into_iter().map(|e| e.op).collect()
}

/// Ops for the right half, in execution order.
pub fn right_schedule(consts: &FranklinConstants) -> Vec<PlacementOp> {
    side_entries(consts, Side::Right).into_iter().map(|e| e.op).collect()
}

fn side_entries(consts: &FranklinConstants, side: Side) -> Vec<ScheduleEntry> {
    use Direction::{Down, Up};
    use PartKind::{Bottom, Middle, Top};

    let n = consts.order();
    let n64 = n as u64;
    let (eighth, quarter, half) = (n / 8, n / 4, n / 2);
    let shift = match side {
        Side::Left => 0,
        Side::Right => (half * half) as u64,
    };
    let mut out = Vec::with_capacity(6 * eighth);
    for j in 0..eighth {
        // (complement col, small col) for the inner and outer pair of this round
        let (inner, outer) = match side {
            Side::Left => ((quarter + 1 + 2 * j, quarter - 2 * j), (quarter + 2 + 2 * j, quarter - 1 - 2 * j)),
            Side::Right => ((half + 1 + 2 * j, n - 2 * j), (half + 2 + 2 * j, n - 1 - 2 * j)),
        };
        let base = shift + 2 * j as u64 * n64;
        let steps = [
            (Up, Bottom, 1, inner, eighth),
            (Up, Top, n64 / 4 + 1, inner, eighth),
            (Down, Middle, n64 / 2 + 1, inner, quarter),
            (Up, Middle, n64 + 1, outer, quarter),
            (Down, Top, 3 * n64 / 2 + 1, outer, eighth),
            (Down, Bottom, 7 * n64 / 4 + 1, outer, eighth),
        ];
        for (k, (direction, kind, start, (ca, cs), e)) in steps.into_iter().enumerate() {
            out.push(ScheduleEntry {
                side,
                round: j,
                step: k + 1,
                op: PlacementOp {
                    direction,
                    part: Part::new(kind, consts),
                    start: start + base,
                    complement_col: ca,
                    small_col: cs,
                    steps: e,
                },
            });
        }
    }
    out
}

/// Builds the Franklin square of order `n` (`n = 2^r`, `r >= 3`, `n <= DEFAULT_MAX_ORDER`).
pub fn generate(order: usize) -> Result<Square, BuildError> {
    generate_with(constants_for(order)?)
}

/// Builds the Franklin square for already validated constants.
pub fn generate_with(consts: FranklinConstants) -> Result<Square, BuildError> {
    if !consts.is_constructible() {
        return Err(crate::error::OrderError::NotPowerOfTwo(consts.order()).into());
    }
    Schedule::new(consts).run()
}
