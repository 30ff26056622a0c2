//! Property checks for Franklin squares.
//!
//! The Definition suite covers what makes a grid a Franklin square: the
//! permutation property, row/column and half-line sums, bend diagonals and
//! 2×2 windows on the torus, and the consequences for 4×4 windows and the
//! corners plus middles. The Proof suite checks finer structure that squares
//! built by [`crate::builder`] carry (column-pair sums, quarter-column sums,
//! equidistant-pair sums and bend quadruples). A foreign Franklin square has
//! no reason to satisfy it.

mod definition;
mod lemmas;

use alloc::vec::Vec;
use core::fmt;

use crate::bend::BendOrientation;
use crate::builder;
use crate::consts::FranklinConstants;
use crate::square::Square;

pub use definition::{check_bend_diagonals, check_line_sums, check_permutation, check_side_partition, check_windows};
pub use lemmas::check_proof_lemmas;

/// Default number of violations kept per property.
pub const DEFAULT_VIOLATION_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropertyId {
    Permutation,
    RowSum,
    ColSum,
    HalfRowSum,
    HalfColSum,
    BendDiagonal,
    TwoByTwo,
    FourByFour,
    CornersMiddles,
    SidePartition,
    AdjacentPairLemma,
    BoundaryRowLemma,
    QuarterColumnLemma,
    EquidistantPairLemma,
    BendQuadrupleLemma,
}

impl PropertyId {
    pub const COUNT: usize = 15;

    pub const ALL: [PropertyId; Self::COUNT] = [
        PropertyId::Permutation,
        PropertyId::RowSum,
        PropertyId::ColSum,
        PropertyId::HalfRowSum,
        PropertyId::HalfColSum,
        PropertyId::BendDiagonal,
        PropertyId::TwoByTwo,
        PropertyId::FourByFour,
        PropertyId::CornersMiddles,
        PropertyId::SidePartition,
        PropertyId::AdjacentPairLemma,
        PropertyId::BoundaryRowLemma,
        PropertyId::QuarterColumnLemma,
        PropertyId::EquidistantPairLemma,
        PropertyId::BendQuadrupleLemma,
    ];

    pub const DEFINITION: &'static [PropertyId] = Self::ALL.split_at(9).0;
    pub const PROOF: &'static [PropertyId] = Self::ALL.split_at(9).1;

    pub fn is_definition(self) -> bool {
        (self as usize) < 9
    }

    pub fn name(self) -> &'static str {
        match self {
            PropertyId::Permutation => "Permutation",
            PropertyId::RowSum => "RowSum",
            PropertyId::ColSum => "ColSum",
            PropertyId::HalfRowSum => "HalfRowSum",
            PropertyId::HalfColSum => "HalfColSum",
            PropertyId::BendDiagonal => "BendDiagonal",
            PropertyId::TwoByTwo => "TwoByTwo",
            PropertyId::FourByFour => "FourByFour",
            PropertyId::CornersMiddles => "CornersMiddles",
            PropertyId::SidePartition => "SidePartition",
            PropertyId::AdjacentPairLemma => "AdjacentPairLemma",
            PropertyId::BoundaryRowLemma => "BoundaryRowLemma",
            PropertyId::QuarterColumnLemma => "QuarterColumnLemma",
            PropertyId::EquidistantPairLemma => "EquidistantPairLemma",
            PropertyId::BendQuadrupleLemma => "BendQuadrupleLemma",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which half of a line or of the square. `First` is rows/columns `1..=n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Half {
    First,
    Second,
}

impl Half {
    pub fn of(index: usize, order: usize) -> Self {
        if index <= order / 2 {
            Half::First
        } else {
            Half::Second
        }
    }

    /// 1 for the first half, 2 for the second.
    pub fn number(self) -> u64 {
        match self {
            Half::First => 1,
            Half::Second => 2,
        }
    }
}

/// The cell set a violation refers to. All indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    /// Occurrence count of a value.
    Value(u64),
    Row(usize),
    Column(usize),
    HalfRow {
        row: usize,
        half: Half,
    },
    HalfColumn {
        col: usize,
        half: Half,
    },
    Bend {
        orientation: BendOrientation,
        anchor: usize,
    },
    /// Toroidal `size × size` window with top-left corner `(row, col)`.
    Window {
        size: usize,
        row: usize,
        col: usize,
    },
    CornersMiddles,
    /// A single cell; used for side membership (1 = left half, 2 = right half).
    Cell {
        row: usize,
        col: usize,
    },
    /// Two cells of one column.
    ColumnPair {
        col: usize,
        first_row: usize,
        second_row: usize,
    },
    /// Rows `first_row..=last_row` of one column.
    ColumnBlock {
        col: usize,
        first_row: usize,
        last_row: usize,
    },
    /// `(row, 1+2i) + (next, 2+2i) + (row, n-2i) + (next, n-1-2i)`, with
    /// `next` the row below (wrapping) when `rising` is false and the cells'
    /// rows exchanged when it is true.
    Quadruple {
        row: usize,
        pair: usize,
        rising: bool,
    },
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = |h: &Half| match h {
            Half::First => "first",
            Half::Second => "second",
        };
        match self {
            Location::Value(v) => write!(f, "value {v}"),
            Location::Row(r) => write!(f, "row {r}"),
            Location::Column(c) => write!(f, "column {c}"),
            Location::HalfRow { row, half: h } => write!(f, "{} half of row {row}", half(h)),
            Location::HalfColumn { col, half: h } => write!(f, "{} half of column {col}", half(h)),
            Location::Bend { orientation, anchor } => write!(f, "{orientation} bend anchored at {anchor}"),
            Location::Window { size, row, col } => write!(f, "{size}x{size} window at ({row}, {col})"),
            Location::CornersMiddles => f.write_str("corners and middles"),
            Location::Cell { row, col } => write!(f, "cell ({row}, {col})"),
            Location::ColumnPair { col, first_row, second_row } => {
                write!(f, "column {col}, rows {first_row} and {second_row}")
            }
            Location::ColumnBlock { col, first_row, last_row } => {
                write!(f, "column {col}, rows {first_row}..={last_row}")
            }
            Location::Quadruple { row, pair, rising } => {
                let dir = if *rising { "rising" } else { "falling" };
                write!(f, "{dir} quadruple at row {row}, column pair {pair}")
            }
        }
    }
}

/// A failed instance of a property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub property: PropertyId,
    pub location: Location,
    pub expected: u64,
    pub actual: u64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: expected {}, got {}", self.property, self.location, self.expected, self.actual)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Not evaluated for this input.
    NotApplicable,
}

/// Outcome of one property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropertyResult {
    pub id: PropertyId,
    pub status: Status,
    /// Number of instances examined.
    pub checked: usize,
    /// Number of failing instances (never capped).
    pub failures: usize,
}

/// When to evaluate the Proof suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProofSuite {
    /// For constructible orders, unless the square passes the Definition
    /// suite without being the one the builder produces for its order.
    #[default]
    Auto,
    /// For every constructible order.
    Always,
    Never,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Violations kept per property.
    pub violation_cap: usize,
    pub proof_suite: ProofSuite,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { violation_cap: DEFAULT_VIOLATION_CAP, proof_suite: ProofSuite::Auto }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    consts: FranklinConstants,
    results: Vec<PropertyResult>,
    violations: Vec<Violation>,
    is_franklin: bool,
}

impl VerificationReport {
    pub fn order(&self) -> usize {
        self.consts.order()
    }

    pub fn constants(&self) -> &FranklinConstants {
        &self.consts
    }

    /// True iff every Definition-suite property passes.
    pub fn is_franklin(&self) -> bool {
        self.is_franklin
    }

    /// One entry per [`PropertyId`], in [`PropertyId::ALL`] order.
    pub fn results(&self) -> &[PropertyResult] {
        &self.results
    }

    pub fn result(&self, id: PropertyId) -> &PropertyResult {
        &self.results[id as usize]
    }

    /// Kept violations, capped per property.
    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn violations_for(&self, id: PropertyId) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.property == id)
    }

    /// Total failing instances across all evaluated properties.
    pub fn total_failures(&self) -> usize {
        self.results.iter().map(|r| r.failures).sum()
    }

    pub fn proof_suite_ran(&self) -> bool {
        self.result(PropertyId::SidePartition).status != Status::NotApplicable
    }
}

/// Per-property accumulation shared by every check.
#[derive(Debug)]
pub(crate) struct Collector {
    cap: usize,
    checked: [usize; PropertyId::COUNT],
    failures: [usize; PropertyId::COUNT],
    violations: Vec<Violation>,
    kept: [usize; PropertyId::COUNT],
}

impl Collector {
    pub(crate) fn new(cap: usize) -> Self {
        Self {
            cap,
            checked: [0; PropertyId::COUNT],
            failures: [0; PropertyId::COUNT],
            violations: Vec::new(),
            kept: [0; PropertyId::COUNT],
        }
    }

    #[inline]
    pub(crate) fn record(&mut self, property: PropertyId, location: Location, expected: u64, actual: u64) {
        let slot = property as usize;
        self.checked[slot] += 1;
        if expected != actual {
            self.failures[slot] += 1;
            if self.kept[slot] < self.cap {
                self.kept[slot] += 1;
                self.violations.push(Violation { property, location, expected, actual });
            }
        }
    }

    pub(crate) fn into_violations(self) -> Vec<Violation> {
        self.violations
    }
}

/// Runs every applicable check with default options.
pub fn verify_all(square: &Square) -> VerificationReport {
    verify_with(square, &VerifyOptions::default())
}

pub fn verify_with(square: &Square, options: &VerifyOptions) -> VerificationReport {
    let consts = square.constants();
    let mut sink = Collector::new(options.violation_cap);
    definition::scan_definition(square, &consts, &mut sink);
    let definition_ok = PropertyId::DEFINITION.iter().all(|&id| sink.failures[id as usize] == 0);

    let run_proof = consts.is_constructible()
        && match options.proof_suite {
            ProofSuite::Never => false,
            ProofSuite::Always => true,
            ProofSuite::Auto => !definition_ok || builder::generate_with(consts).is_ok_and(|built| &built == square),
        };
    if run_proof {
        definition::scan_side_partition(square, &consts, &mut sink);
        lemmas::scan_lemmas(square, &consts, &mut sink);
    }

    let results = PropertyId::ALL
        .iter()
        .map(|&id| {
            let slot = id as usize;
            let status = if !id.is_definition() && !run_proof {
                Status::NotApplicable
            } else if sink.failures[slot] == 0 {
                Status::Pass
            } else {
                Status::Fail
            };
            PropertyResult { id, status, checked: sink.checked[slot], failures: sink.failures[slot] }
        })
        .collect();

    let mut violations = sink.into_violations();
    violations.sort_by_key(|v| v.property);
    VerificationReport { consts, results, violations, is_franklin: definition_ok }
}
