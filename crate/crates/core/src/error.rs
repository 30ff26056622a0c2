use core::fmt;

/// Rejection of a requested square order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderError {
    /// The order is not a power of two.
    NotPowerOfTwo(usize),
    /// The order is below the smallest constructible order (8).
    TooSmall(usize),
    /// The order exceeds the configured ceiling.
    TooLarge { order: usize, max: usize },
    /// A grid order that is odd or smaller than 4 cannot be verified.
    UnsupportedGrid(usize),
}

impl fmt::Display for OrderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OrderError::NotPowerOfTwo(n) => {
                write!(f, "order {n} is not a power of two (expected n = 2^r with r >= 3)")
            }
            OrderError::TooSmall(n) => {
                write!(f, "order {n} is too small (expected n = 2^r with r >= 3, so n >= 8)")
            }
            OrderError::TooLarge { order, max } => {
                write!(f, "order {order} exceeds the maximum supported order {max}")
            }
            OrderError::UnsupportedGrid(n) => {
                write!(f, "grid order {n} is unsupported (expected an even order >= 4)")
            }
        }
    }
}

impl core::error::Error for OrderError {}

/// A grid that does not satisfy the [`Square`](crate::Square) invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquareError {
    Order(OrderError),
    /// Cell count does not match `order * order`.
    CellCount {
        order: usize,
        found: usize,
    },
    /// A row has the wrong number of cells. `row` is 1-based.
    RaggedRow {
        row: usize,
        found: usize,
        expected: usize,
    },
    /// A value lies outside `1..=order²`. Indices are 1-based.
    ValueOutOfRange {
        row: usize,
        col: usize,
        value: u64,
        max: u64,
    },
    /// A 1-based index lies outside the grid.
    IndexOutOfRange {
        row: usize,
        col: usize,
        order: usize,
    },
}

impl fmt::Display for SquareError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SquareError::Order(e) => e.fmt(f),
            SquareError::CellCount { order, found } => {
                write!(f, "expected {} cells for order {order}, found {found}", order * order)
            }
            SquareError::RaggedRow { row, found, expected } => {
                write!(f, "row {row} has {found} cells, expected {expected}")
            }
            SquareError::ValueOutOfRange { row, col, value, max } => {
                write!(f, "value {value} at row {row}, column {col} is outside 1..={max}")
            }
            SquareError::IndexOutOfRange { row, col, order } => {
                write!(f, "cell ({row}, {col}) is outside a {order}x{order} grid")
            }
        }
    }
}

impl core::error::Error for SquareError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            SquareError::Order(e) => Some(e),
            _ => None,
        }
    }
}

impl From<OrderError> for SquareError {
    fn from(e: OrderError) -> Self {
        SquareError::Order(e)
    }
}

/// Failure while running the construction schedule.
///
/// Anything other than [`BuildError::Order`] indicates a defect in the
/// schedule itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    Order(OrderError),
    /// A placement op violates its own invariants.
    InvalidOp(&'static str),
    /// An op addressed a cell outside the grid or outside its part.
    OutOfBounds {
        row: usize,
        col: usize,
    },
    /// An op tried to write a cell that was already written.
    Overlap {
        row: usize,
        col: usize,
    },
    /// A cell was never written once the schedule finished.
    Unwritten {
        row: usize,
        col: usize,
    },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::Order(e) => e.fmt(f),
            BuildError::InvalidOp(why) => write!(f, "invalid placement op: {why}"),
            BuildError::OutOfBounds { row, col } => {
                write!(f, "placement addresses cell ({row}, {col}) outside its bounds")
            }
            BuildError::Overlap { row, col } => {
                write!(f, "schedule defect: cell ({row}, {col}) written twice")
            }
            BuildError::Unwritten { row, col } => {
                write!(f, "schedule defect: cell ({row}, {col}) never written")
            }
        }
    }
}

impl core::error::Error for BuildError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            BuildError::Order(e) => Some(e),
            _ => None,
        }
    }
}

impl From<OrderError> for BuildError {
    fn from(e: OrderError) -> Self {
        BuildError::Order(e)
    }
}
