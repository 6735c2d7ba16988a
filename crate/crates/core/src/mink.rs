//! Lorentz-Minkowski 3-space kernel.
//!
//! Vectors carry the chart they are expressed in, so the metric matrix
//! always travels with the data. Three charts are used:
//!
//! * A1: orthonormal, axis `x` time-like, metric `diag(-1, 1, 1)`.
//! * A2: orthonormal, axis `x` space-like, `z` time-like, metric `diag(1, 1, -1)`.
//! * Null basis: `x`, `y` light-like with `<x, y> = -1`, `z` unit space-like,
//!   metric `-2 dx dy + dz^2`.

use serde::Serialize;

use crate::error::{Error, Result};

pub type Mat3 = [[f64; 3]; 3];

/// Default relative tolerance for causal classification.
pub const TAU_CAUSAL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ChartKind {
    Orthonormal,
    NullBasis,
}

/// Coordinate chart of L^3 together with its metric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Chart {
    pub kind: ChartKind,
    pub metric: Mat3,
}

impl Chart {
    /// Orthonormal chart adapted to a time-like axis `x`.
    pub const fn a1() -> Self {
        Self {
            kind: ChartKind::Orthonormal,
            metric: [[-1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    /// Orthonormal chart adapted to a space-like axis `x`, `z` time-like.
    pub const fn a2() -> Self {
        Self {
            kind: ChartKind::Orthonormal,
            metric: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]],
        }
    }

    /// Null basis adapted to a light-like axis `x`.
    pub const fn null_basis() -> Self {
        Self {
            kind: ChartKind::NullBasis,
            metric: [[0.0, -1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    pub const fn for_axis(kind: AxisKind) -> Self {
        match kind {
            AxisKind::A1 => Self::a1(),
            AxisKind::A2 => Self::a2(),
            AxisKind::A3 => Self::null_basis(),
        }
    }

    #[inline]
    pub fn dot(&self, u: &[f64; 3], v: &[f64; 3]) -> f64 {
        let g = &self.metric;
        let mut acc = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                acc += u[i] * g[i][j] * v[j];
            }
        }
        acc
    }

    /// `w` with `<w, a> = det(u, v, a)` for all `a`.
    #[inline]
    pub fn cross(&self, u: &[f64; 3], v: &[f64; 3]) -> [f64; 3] {
        let c = euclid_cross(u, v);
        mat_vec(&self.inverse_metric(), &c)
    }

    pub fn inverse_metric(&self) -> Mat3 {
        // every chart metric is its own inverse
        self.metric
    }
}

#[inline]
pub fn euclid_cross(u: &[f64; 3], v: &[f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

#[inline]
pub fn mat_vec(m: &Mat3, v: &[f64; 3]) -> [f64; 3] {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn transpose(a: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[j][i];
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MVec3 {
    pub coords: [f64; 3],
    pub chart: Chart,
}

impl MVec3 {
    pub const fn new(coords: [f64; 3], chart: Chart) -> Self {
        Self { coords, chart }
    }

    pub fn euclid_norm_sq(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum()
    }

    fn same_chart(&self, other: &MVec3) -> Result<()> {
        if self.chart == other.chart {
            Ok(())
        } else {
            Err(Error::ChartMismatch)
        }
    }
}

/// Lorentzian inner product `u^T G v`.
pub fn lorentz_dot(u: &MVec3, v: &MVec3) -> Result<f64> {
    u.same_chart(v)?;
    Ok(u.chart.dot(&u.coords, &v.coords))
}

/// Lorentzian cross product, fixed by `<u ∧ v, a> = det(u, v, a)`.
pub fn lorentz_cross(u: &MVec3, v: &MVec3) -> Result<MVec3> {
    u.same_chart(v)?;
    Ok(MVec3::new(u.chart.cross(&u.coords, &v.coords), u.chart))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CausalCharacter {
    SpaceLike,
    TimeLike,
    LightLike,
}

impl CausalCharacter {
    /// Classify a squared norm `q` against the Euclidean scale `scale`.
    pub fn classify(q: f64, scale: f64, tau: f64) -> Self {
        if q.abs() <= tau * scale {
            Self::LightLike
        } else if q > 0.0 {
            Self::SpaceLike
        } else {
            Self::TimeLike
        }
    }

    pub fn sign(self) -> f64 {
        match self {
            Self::SpaceLike => 1.0,
            Self::TimeLike => -1.0,
            Self::LightLike => 0.0,
        }
    }
}

pub fn causal_character(v: &MVec3, tau: f64) -> Result<CausalCharacter> {
    let scale = v.euclid_norm_sq();
    if scale == 0.0 {
        return Err(Error::ZeroVector);
    }
    let q = v.chart.dot(&v.coords, &v.coords);
    Ok(CausalCharacter::classify(q, scale, tau))
}

/// Causal character of the rotation axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AxisKind {
    /// time-like axis, elliptic rotations
    A1,
    /// space-like axis, hyperbolic rotations
    A2,
    /// light-like axis, parabolic rotations
    A3,
}

impl AxisKind {
    pub const ALL: [AxisKind; 3] = [AxisKind::A1, AxisKind::A2, AxisKind::A3];

    /// Infinitesimal generator `J` with `rotation(t) = exp(t J)`.
    pub fn generator(self) -> Mat3 {
        match self {
            AxisKind::A1 => [[0.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]],
            AxisKind::A2 => [[0.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 1.0, 0.0]],
            AxisKind::A3 => [[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Isometry3 {
    pub matrix: Mat3,
    pub chart: Chart,
}

impl Isometry3 {
    pub fn apply(&self, v: &MVec3) -> Result<MVec3> {
        if v.chart != self.chart {
            return Err(Error::ChartMismatch);
        }
        Ok(MVec3::new(mat_vec(&self.matrix, &v.coords), self.chart))
    }

    pub fn compose(&self, other: &Isometry3) -> Result<Isometry3> {
        if other.chart != self.chart {
            return Err(Error::ChartMismatch);
        }
        Ok(Isometry3 {
            matrix: mat_mul(&self.matrix, &other.matrix),
            chart: self.chart,
        })
    }

    /// Largest entry of `M^T G M - G`.
    pub fn isometry_defect(&self) -> f64 {
        let g = self.chart.metric;
        let mtgm = mat_mul(&transpose(&self.matrix), &mat_mul(&g, &self.matrix));
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((mtgm[i][j] - g[i][j]).abs());
            }
        }
        worst
    }
}

/// Raw rotation matrix of the one-parameter group.
pub fn rotation_matrix(kind: AxisKind, t: f64) -> Mat3 {
    match kind {
        AxisKind::A1 => {
            let (s, c) = t.sin_cos();
            [[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]]
        }
        AxisKind::A2 => {
            let (s, c) = (t.sinh(), t.cosh());
            [[1.0, 0.0, 0.0], [0.0, c, s], [0.0, s, c]]
        }
        AxisKind::A3 => [[1.0, 0.5 * t * t, t], [0.0, 1.0, 0.0], [0.0, t, 1.0]],
    }
}

pub fn rotation(kind: AxisKind, t: f64) -> Isometry3 {
    Isometry3 {
        matrix: rotation_matrix(kind, t),
        chart: Chart::for_axis(kind),
    }
}

/// Fundamental region containing a point, for the given axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RegionLabel {
    // A2
    RPlus,
    RMinus,
    QPlus,
    QMinus,
    DegeneratePlane,
    // A3
    SPlus,
    SMinus,
    TPlane,
    // A1
    Exterior,
    Axis,
}

impl RegionLabel {
    pub fn tag(self) -> &'static str {
        match self {
            RegionLabel::RPlus => "R+",
            RegionLabel::RMinus => "R-",
            RegionLabel::QPlus => "Q+",
            RegionLabel::QMinus => "Q-",
            RegionLabel::DegeneratePlane => "P",
            RegionLabel::SPlus => "S+",
            RegionLabel::SMinus => "S-",
            RegionLabel::TPlane => "T",
            RegionLabel::Exterior => "E",
            RegionLabel::Axis => "axis",
        }
    }
}

/// Default absolute tolerance for region boundaries.
pub const TAU_REGION: f64 = 1e-12;

pub fn fundamental_region(p: &MVec3, kind: AxisKind) -> Result<RegionLabel> {
    fundamental_region_tol(p, kind, TAU_REGION)
}

pub fn fundamental_region_tol(p: &MVec3, kind: AxisKind, tau: f64) -> Result<RegionLabel> {
    if p.chart != Chart::for_axis(kind) {
        return Err(Error::ChartMismatch);
    }
    let [_, y, z] = p.coords;
    let label = match kind {
        AxisKind::A1 => {
            if y * y + z * z > tau {
                RegionLabel::Exterior
            } else {
                RegionLabel::Axis
            }
        }
        AxisKind::A2 => {
            let d = z * z - y * y;
            if y.abs() <= tau && z.abs() <= tau {
                RegionLabel::Axis
            } else if d.abs() <= tau {
                RegionLabel::DegeneratePlane
            } else if d > 0.0 {
                if z > 0.0 {
                    RegionLabel::RPlus
                } else {
                    RegionLabel::RMinus
                }
            } else if y > 0.0 {
                RegionLabel::QPlus
            } else {
                RegionLabel::QMinus
            }
        }
        AxisKind::A3 => {
            if y.abs() <= tau {
                if z.abs() <= tau {
                    RegionLabel::Axis
                } else {
                    RegionLabel::TPlane
                }
            } else if y > 0.0 {
                RegionLabel::SPlus
            } else {
                RegionLabel::SMinus
            }
        }
    };
    Ok(label)
}

/// Shape of an orbit `{rotation(kind, t) p : t in R}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum OrbitDescriptor {
    Point([f64; 3]),
    /// circle in the plane `x = center.x`
    Circle { center: [f64; 3], radius: f64 },
    /// connected component of `y^2 - z^2 = invariant` in the plane `x = center.x`
    HyperbolaBranch {
        center: [f64; 3],
        invariant: f64,
        /// sign of the coordinate that never vanishes on the branch (`z` if
        /// `invariant < 0`, else `y`)
        branch_sign: f64,
    },
    /// open half line `{origin + λ (p - origin) : λ > 0}`
    HalfLine { origin: [f64; 3], through: [f64; 3] },
    /// `x = (z - a3)^2 / (2 a2) + (a3 / a2)(z - a3) + a1` in the plane `y = a2`
    Parabola { a: [f64; 3] },
    /// `{(t, 0, a3)}`
    Line { z: f64 },
}

pub fn orbit_descriptor(p: &MVec3, kind: AxisKind) -> Result<OrbitDescriptor> {
    if p.chart != Chart::for_axis(kind) {
        return Err(Error::ChartMismatch);
    }
    let [a1, a2, a3] = p.coords;
    let on_axis = a2 == 0.0 && a3 == 0.0;
    let orbit = match kind {
        AxisKind::A1 => {
            if on_axis {
                OrbitDescriptor::Point(p.coords)
            } else {
                OrbitDescriptor::Circle {
                    center: [a1, 0.0, 0.0],
                    radius: a2.hypot(a3),
                }
            }
        }
        AxisKind::A2 => {
            if on_axis {
                OrbitDescriptor::Point(p.coords)
            } else if a2 * a2 == a3 * a3 {
                OrbitDescriptor::HalfLine {
                    origin: [a1, 0.0, 0.0],
                    through: p.coords,
                }
            } else {
                let invariant = a2 * a2 - a3 * a3;
                let branch_sign = if invariant < 0.0 { a3.signum() } else { a2.signum() };
                OrbitDescriptor::HyperbolaBranch {
                    center: [a1, 0.0, 0.0],
                    invariant,
                    branch_sign,
                }
            }
        }
        AxisKind::A3 => {
            if on_axis {
                OrbitDescriptor::Point(p.coords)
            } else if a2 == 0.0 {
                OrbitDescriptor::Line { z: a3 }
            } else {
                OrbitDescriptor::Parabola { a: p.coords }
            }
        }
    };
    Ok(orbit)
}

impl OrbitDescriptor {
    /// Whether `q` lies on the orbit, up to `tol`.
    pub fn contains(&self, q: &[f64; 3], tol: f64) -> bool {
        match *self {
            OrbitDescriptor::Point(p) => (0..3).all(|i| (p[i] - q[i]).abs() <= tol),
            OrbitDescriptor::Circle { center, radius } => {
                (q[0] - center[0]).abs() <= tol && (q[1].hypot(q[2]) - radius).abs() <= tol
            }
            OrbitDescriptor::HyperbolaBranch {
                center,
                invariant,
                branch_sign,
            } => {
                let key = if invariant < 0.0 { q[2] } else { q[1] };
                (q[0] - center[0]).abs() <= tol
                    && (q[1] * q[1] - q[2] * q[2] - invariant).abs() <= tol
                    && key * branch_sign > 0.0
            }
            OrbitDescriptor::HalfLine { origin, through } => {
                let d = [through[1], through[2]];
                let lam = (q[1] * d[0] + q[2] * d[1]) / (d[0] * d[0] + d[1] * d[1]);
                lam > 0.0
                    && (q[0] - origin[0]).abs() <= tol
                    && (q[1] - lam * d[0]).abs() <= tol
                    && (q[2] - lam * d[1]).abs() <= tol
            }
            OrbitDescriptor::Parabola { a } => {
                let [a1, a2, a3] = a;
                let x = (q[2] - a3).powi(2) / (2.0 * a2) + a3 / a2 * (q[2] - a3) + a1;
                (q[1] - a2).abs() <= tol && (q[0] - x).abs() <= tol
            }
            OrbitDescriptor::Line { z } => q[1].abs() <= tol && (q[2] - z).abs() <= tol,
        }
    }
}
