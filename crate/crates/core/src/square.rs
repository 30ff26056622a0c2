use alloc::vec::Vec;
use core::fmt;

use crate::consts::FranklinConstants;
use crate::error::SquareError;

/// Cell value. Wide enough for `n² + 1` at [`HARD_MAX_ORDER`](crate::HARD_MAX_ORDER).
pub type Cell = u32;

/// An `n × n` grid of values in `1..=n²`, for any even `n >= 4`.
///
/// Storage is row-major; every accessor takes 1-based `(row, col)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Square {
    order: usize,
    cells: Vec<Cell>,
}

impl Square {
    /// Builds a square from row-major cells.
    pub fn from_vec(order: usize, cells: Vec<Cell>) -> Result<Self, SquareError> {
        let consts = FranklinConstants::for_grid(order)?;
        if cells.len() != order * order {
            return Err(SquareError::CellCount { order, found: cells.len() });
        }
        let max = consts.max_value();
        if let Some(idx) = cells.iter().position(|&v| v == 0 || u64::from(v) > max) {
            return Err(SquareError::ValueOutOfRange {
                row: idx / order + 1,
                col: idx % order + 1,
                value: u64::from(cells[idx]),
                max,
            });
        }
        Ok(Self { order, cells })
    }

    /// Builds a square from a list of rows. The order is the row count.
    pub fn from_rows<R: AsRef<[Cell]>>(rows: &[R]) -> Result<Self, SquareError> {
        let order = rows.len();
        FranklinConstants::for_grid(order)?;
        let mut cells = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(SquareError::RaggedRow { row: i + 1, found: row.len(), expected: order });
            }
            cells.extend_from_slice(row);
        }
        Self::from_vec(order, cells)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Constants for this grid's order (defined for every valid `Square`).
    pub fn constants(&self) -> FranklinConstants {
        FranklinConstants::for_grid(self.order).expect("order validated at construction")
    }

    /// Value at 1-based `(row, col)`.
    ///
    /// Panics if either index is outside `1..=n`.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Cell {
        assert!(
            (1..=self.order).contains(&row) && (1..=self.order).contains(&col),
            "cell ({row}, {col}) outside a {0}x{0} grid",
            self.order
        );
        self.cells[(row - 1) * self.order + col - 1]
    }

    /// Value at a toroidal position: any integer row/col, reduced into `1..=n`.
    #[inline]
    pub fn get_wrapped(&self, row: isize, col: isize) -> Cell {
        let n = self.order as isize;
        let r = (row - 1).rem_euclid(n) as usize;
        let c = (col - 1).rem_euclid(n) as usize;
        self.cells[r * self.order + c]
    }

    /// Row `row` (1-based) as a slice.
    pub fn row(&self, row: usize) -> &[Cell] {
        assert!((1..=self.order).contains(&row), "row {row} outside 1..={}", self.order);
        let start = (row - 1) * self.order;
        &self.cells[start..start + self.order]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[Cell]> + '_ {
        self.cells.chunks_exact(self.order)
    }

    /// Row-major view of every cell.
    pub fn as_slice(&self) -> &[Cell] {
        &self.cells
    }

    pub fn into_vec(self) -> Vec<Cell> {
        self.cells
    }

    /// Copy of this square with one cell replaced.
    pub fn with_cell(&self, row: usize, col: usize, value: Cell) -> Result<Self, SquareError> {
        self.check_index(row, col)?;
        let max = self.constants().max_value();
        if value == 0 || u64::from(value) > max {
            return Err(SquareError::ValueOutOfRange { row, col, value: value.into(), max });
        }
        let mut out = self.clone();
        out.cells[(row - 1) * self.order + col - 1] = value;
        Ok(out)
    }

    /// Copy of this square with two cells exchanged.
    pub fn swapped(&self, a: (usize, usize), b: (usize, usize)) -> Result<Self, SquareError> {
        self.check_index(a.0, a.1)?;
        self.check_index(b.0, b.1)?;
        let mut out = self.clone();
        out.cells.swap((a.0 - 1) * self.order + a.1 - 1, (b.0 - 1) * self.order + b.1 - 1);
        Ok(out)
    }

    /// Copy mirrored left-to-right (column `c` becomes column `n + 1 - c`).
    pub fn mirrored(&self) -> Self {
        let mut cells = self.cells.clone();
        for row in cells.chunks_exact_mut(self.order) {
            row.reverse();
        }
        Self { order: self.order, cells }
    }

    /// Copy with rows and columns exchanged.
    pub fn transposed(&self) -> Self {
        let n = self.order;
        let cells = (0..n * n).map(|i| self.cells[(i % n) * n + i / n]).collect();
        Self { order: n, cells }
    }

    fn check_index(&self, row: usize, col: usize) -> Result<(), SquareError> {
        if (1..=self.order).contains(&row) && (1..=self.order).contains(&col) {
            Ok(())
        } else {
            Err(SquareError::IndexOutOfRange { row, col, order: self.order })
        }
    }
}

impl fmt::Debug for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Square").field("order", &self.order).finish_non_exhaustive()
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = digits(self.constants().max_value());
        for row in self.rows() {
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v:>width$}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

fn digits(mut v: u64) -> usize {
    let mut d = 1;
    while v >= 10 {
        v /= 10;
        d += 1;
    }
    d
}
