//! Bend diagonals on the torus.
//!
//! A bend diagonal is a V-shaped path of `n` cells. Row-spanning bends
//! ([`BendOrientation::VDown`], [`BendOrientation::VUp`]) take one cell from
//! every column and turn at the vertical midline; column-spanning bends
//! ([`BendOrientation::VRight`], [`BendOrientation::VLeft`]) take one cell
//! from every row and turn at the horizontal midline. The anchor is the row
//! (or column) of the path's first cell, and every translate wraps around the
//! square's edges.

use alloc::vec::Vec;
use core::fmt;

use crate::consts::FranklinConstants;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BendOrientation {
    /// Apex pointing down; spans the columns.
    VDown,
    /// Apex pointing up; spans the columns.
    VUp,
    /// Apex pointing right; spans the rows.
    VRight,
    /// Apex pointing left; spans the rows.
    VLeft,
}

impl BendOrientation {
    pub const ALL: [BendOrientation; 4] =
        [BendOrientation::VDown, BendOrientation::VUp, BendOrientation::VRight, BendOrientation::VLeft];

    /// True for the orientations that visit one cell per column.
    pub fn spans_columns(self) -> bool {
        matches!(self, BendOrientation::VDown | BendOrientation::VUp)
    }

    pub fn name(self) -> &'static str {
        match self {
            BendOrientation::VDown => "v-down",
            BendOrientation::VUp => "v-up",
            BendOrientation::VRight => "v-right",
            BendOrientation::VLeft => "v-left",
        }
    }

    /// Offset of the `step`-th cell (1-based) from the anchor, before wrapping.
    #[inline]
    fn offset(self, order: usize, step: usize) -> isize {
        let (n, k) = (order as isize, step as isize);
        let down = if step <= order / 2 { k - 1 } else { n - k };
        match self {
            BendOrientation::VDown | BendOrientation::VRight => down,
            BendOrientation::VUp | BendOrientation::VLeft => -down,
        }
    }
}

impl fmt::Display for BendOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The `n` cells of one bend diagonal, as 1-based `(row, col)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BendPath {
    orientation: BendOrientation,
    anchor: usize,
    cells: Vec<(usize, usize)>,
}

/// Error for an anchor outside `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnchorOutOfRange {
    pub anchor: usize,
    pub order: usize,
}

impl fmt::Display for AnchorOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bend anchor {} outside 1..={}", self.anchor, self.order)
    }
}

impl core::error::Error for AnchorOutOfRange {}

impl BendPath {
    pub fn new(
        consts: &FranklinConstants,
        orientation: BendOrientation,
        anchor: usize,
    ) -> Result<Self, AnchorOutOfRange> {
        let order = consts.order();
        if !(1..=order).contains(&anchor) {
            return Err(AnchorOutOfRange { anchor, order });
        }
        let cells = cells(order, orientation, anchor).collect();
        Ok(Self { orientation, anchor, cells })
    }

    pub fn orientation(&self) -> BendOrientation {
        self.orientation
    }

    pub fn anchor(&self) -> usize {
        self.anchor
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }
}

/// Shorthand for [`BendPath::new`].
pub fn bend_path(
    consts: &FranklinConstants,
    orientation: BendOrientation,
    anchor: usize,
) -> Result<BendPath, AnchorOutOfRange> {
    BendPath::new(consts, orientation, anchor)
}

/// Iterates the cells of a bend without allocating. `anchor` must be in `1..=order`.
pub(crate) fn cells(order: usize, orientation: BendOrientation, anchor: usize) -> impl Iterator<Item = (usize, usize)> {
    let n = order as isize;
    (1..=order).map(move |step| {
        let moved = (anchor as isize - 1 + orientation.offset(order, step)).rem_euclid(n) as usize + 1;
        if orientation.spans_columns() {
            (moved, step)
        } else {
            (step, moved)
        }
    })
}
