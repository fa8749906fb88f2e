use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("denominator vanishes through order {order}")]
    ZeroValuation { order: usize },
    #[error("numerator coefficient of x^{degree} is nonzero below the denominator valuation {valuation}")]
    NonDivisible { degree: usize, valuation: usize },
    #[error("constant term has no square root in the coefficient field")]
    NonSquareConstant,
    #[error("coefficient of x^{degree} is nonzero, cannot divide by x^{shift}")]
    Valuation { degree: usize, shift: usize },
}
