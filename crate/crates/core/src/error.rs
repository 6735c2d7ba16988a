use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vectors expressed in different charts")]
    ChartMismatch,
    #[error("zero vector has no causal character")]
    ZeroVector,
    #[error("pole at {abscissa}")]
    Pole { abscissa: f64 },
    #[error("complete elliptic integral diverges for k^2 = {0}")]
    Divergent(f64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degenerate surface of revolution: profile meets the axis")]
    DegenerateSurface,
    #[error("degenerate tangent plane at grid point ({0}, {1})")]
    DegenerateTangentPlane(usize, usize),
    #[error("null boundary piece")]
    NullBoundary,
    #[error("null vector where a non-null one is required")]
    NullVector,
    #[error("profile not time-like: (f')^2 = {0} >= 1 at s = {1}")]
    ProfileNotTimeLike(f64, f64),
    #[error("point ({0}, {1}) outside the gluing band")]
    OutsideBand(f64, f64),
    #[error("expression error: {0}")]
    Expr(String),
}

pub type Result<T> = std::result::Result<T, Error>;
