use crate::error::OrderError;

/// Default ceiling on the order accepted by [`constants_for`].
pub const DEFAULT_MAX_ORDER: usize = 1 << 10;

/// Absolute ceiling. At this order `n² + 1` still fits in a `u32` cell and
/// every line sum (at most `n³`) fits in a `u64`.
pub const HARD_MAX_ORDER: usize = 1 << 15;

/// Arithmetic constants of an order-`n` square.
///
/// `complement` is `N = n² + 1`, the value every `t` is paired with as `N - t`.
/// `magic_sum` is `M = (n/2)·N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FranklinConstants {
    order: usize,
    complement: u64,
    magic_sum: u64,
}

/// Constants for a constructible order (`n = 2^r`, `r >= 3`, `n <= DEFAULT_MAX_ORDER`).
pub fn constants_for(order: usize) -> Result<FranklinConstants, OrderError> {
    FranklinConstants::with_max_order(order, DEFAULT_MAX_ORDER)
}

impl FranklinConstants {
    /// Same as [`constants_for`] with an explicit ceiling. The ceiling itself
    /// is clamped to [`HARD_MAX_ORDER`].
    pub fn with_max_order(order: usize, max_order: usize) -> Result<Self, OrderError> {
        let max = max_order.min(HARD_MAX_ORDER);
        if !order.is_power_of_two() {
            return Err(OrderError::NotPowerOfTwo(order));
        }
        if order < 8 {
            return Err(OrderError::TooSmall(order));
        }
        if order > max {
            return Err(OrderError::TooLarge { order, max });
        }
        Ok(Self::raw(order))
    }

    /// Constants for verifying an arbitrary grid: any even order from 4 up to
    /// [`HARD_MAX_ORDER`].
    pub fn for_grid(order: usize) -> Result<Self, OrderError> {
        if order < 4 || !order.is_multiple_of(2) {
            return Err(OrderError::UnsupportedGrid(order));
        }
        if order > HARD_MAX_ORDER {
            return Err(OrderError::TooLarge { order, max: HARD_MAX_ORDER });
        }
        Ok(Self::raw(order))
    }

    fn raw(order: usize) -> Self {
        let n = order as u64;
        let complement = n * n + 1;
        Self { order, complement, magic_sum: n / 2 * complement }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// `r` with `n = 2^r`, or `None` for a verification-only grid order.
    pub fn exponent(&self) -> Option<u32> {
        self.order.is_power_of_two().then(|| self.order.trailing_zeros())
    }

    /// True when the order admits the construction (`n = 2^r`, `r >= 3`).
    pub fn is_constructible(&self) -> bool {
        matches!(self.exponent(), Some(r) if r >= 3)
    }

    #[inline]
    pub fn complement(&self) -> u64 {
        self.complement
    }

    #[inline]
    pub fn magic_sum(&self) -> u64 {
        self.magic_sum
    }

    #[inline]
    pub fn half_magic_sum(&self) -> u64 {
        self.magic_sum / 2
    }

    /// `n²`, the largest cell value.
    #[inline]
    pub fn max_value(&self) -> u64 {
        self.complement - 1
    }
}
