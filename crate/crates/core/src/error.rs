use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("no exact quotient with integer coefficients: ({dividend}) / ({divisor})")]
    NonDivisible { dividend: String, divisor: String },

    #[error("evaluation hits a pole: negative power of `{var}` at {var} = 0")]
    PoleAtZero { var: char },

    #[error("exponent `{expr}` evaluates to the non-integer {value}")]
    NonIntegralExponent { expr: String, value: String },

    #[error("cannot parse polynomial text `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
