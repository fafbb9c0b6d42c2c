use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("long division step at degree {degree} is not integral")]
    NonIntegralQuotient { degree: usize },
    #[error("reversal window {window} is smaller than degree {degree}")]
    WindowTooSmall { window: usize, degree: usize },
    #[error("negative triangle row {0}")]
    NegativeRow(i64),
    #[error("order {0} is below the minimum of 2")]
    OrderTooSmall(usize),
    #[error("recurrence needs at least one coefficient")]
    EmptyCoefficients,
    #[error("recurrence has {coefficients} coefficients but {initial} initial values")]
    LengthMismatch { coefficients: usize, initial: usize },
    #[error("backward step to index {index} is not integral")]
    NonIntegralBackwardStep { index: i64 },
    #[error("window [{lo}, {hi}] does not cover indices [{need_lo}, {need_hi}]")]
    WindowTooNarrow {
        lo: i64,
        hi: i64,
        need_lo: i64,
        need_hi: i64,
    },
    #[error("empty index range [{lo}, {hi}]")]
    EmptyRange { lo: i64, hi: i64 },
    #[error("column {column} outside 0..={max}")]
    ColumnOutOfRange { column: usize, max: usize },
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("stride must be at least 1")]
    ZeroStride,
}
