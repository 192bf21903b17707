use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid grid: start={start}, step={step}, count={count} (need finite start, step > 0, count >= 2)")]
    InvalidGrid { start: f64, step: f64, count: usize },

    #[error("invalid parameter `{name}` = {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },

    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: usize, found: usize },

    #[error("operands are sampled on different grids")]
    GridMismatch,

    #[error("reference vector has zero norm")]
    DegenerateReference,

    #[error("degenerate angle: phi={phi} (sin(phi) vanishes, cot(phi) undefined)")]
    DegenerateAngle { phi: f64 },

    #[error("unsupported transform length {count} (fast path needs a power of two)")]
    UnsupportedLength { count: usize },

    #[error("inconsistent angle: spectrum was computed at phi={expected}, got phi={found}")]
    InconsistentAngle { expected: f64, found: f64 },

    #[error("grid incompatibility: du*N*dt = {product}, expected 2*pi")]
    GridIncompatible { product: f64 },

    #[error("delay d={d} is not an integer multiple of the sample step {step} within the grid")]
    Alignment { d: f64, step: f64 },

    #[error("grid origin {start} is not an integer multiple of its step {step}; t-tau is off the sample lattice")]
    OffLatticeOrigin { start: f64, step: f64 },
}
