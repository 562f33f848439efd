use thiserror::Error;

/// Errors raised by the exact-arithmetic and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative input {0} has no real integer cube root in this context")]
    NegativeInput(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(String),
    #[error("{0} is not a prime congruent to 1 mod 3")]
    NotSplitPrime(u64),
    #[error("prime {0} is below 5 (only p >= 5 has good reduction)")]
    PrimeTooSmall(u64),
    #[error("relation set is not triangular: {0}")]
    NonTriangular(String),
    #[error("the zero function has no valuation")]
    ZeroFunction,
    #[error("division by zero")]
    DivisionByZero,
    #[error("not a solution of {equation}: {value}")]
    NotASolution { equation: &'static str, value: String },
    #[error("({x}, {y}, {z}) has no integral preimage: need x >= 1, x and y of different parity, z even")]
    NoIntegralPreimage { x: String, y: String, z: String },
    #[error("u = {0} is divisible by 3: non-integral family member")]
    NonIntegralFamilyMember(String),
    #[error("search bound {0} out of supported range 1..={1}")]
    BoundOutOfRange(String, u64),
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("singular Weierstrass model (discriminant vanishes identically)")]
    SingularCurve,
    #[error("curve has A != 0, so (x, y) -> (wx, y) is not an automorphism")]
    NotJInvariantZero,
    #[error("section has y = 0 (2-torsion): no affine (x, z) image")]
    NoAffineImage,
    #[error("minimality violation at place {0}")]
    NonMinimal(String),
    #[error("fiber type {0} is not supported here")]
    UnsupportedFiber(String),
    #[error("place {0} is not a point of the coefficient field")]
    UnsupportedPlace(String),
    #[error("height pairing needs non-torsion sections")]
    TorsionSection,
    #[error("zero determinant")]
    ZeroDeterminant,
    #[error("determinant {0} is not an integer")]
    NonIntegralDeterminant(String),
    #[error("eta quotient leading exponent sum(d*e) = {0} is not divisible by 24")]
    NonIntegralPrefix(i64),
    #[error("eta quotient has negative leading order {0}")]
    NegativeOrder(i64),
    #[error("invalid eta quotient: {0}")]
    InvalidEtaSpec(String),
    #[error("series constant term {0} is not a unit")]
    NonInvertibleSeries(String),
    #[error("{0} has even norm and is not a unit mod 2")]
    EvenNorm(String),
    #[error("lattice sum coefficient of q^{n} is {value}, not divisible by 6")]
    NonIntegralLatticeSum { n: usize, value: String },
    #[error("field size {q} exceeds the brute-force budget {budget}")]
    BudgetExceeded { q: u64, budget: u64 },
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("invalid finite field: {0}")]
    InvalidField(String),
}

pub type Result<T> = std::result::Result<T, Error>;
