//! Hyperbolic angles, geodesic curvature, parallel transport and the
//! Gauss–Bonnet formula for non-null polygons on surfaces of Minkowski space.
//!
//! Conventions. A tangent vector is given by its components in the coordinate
//! frame `(∂_u, ∂_v)`, which also fixes the orientation. On Lorentzian
//! patches the time orientation comes from [`ParametricSurface::time_field`].
//! The rapidity of a future unit time-like vector `w` is `ψ(w) = asinh ĝ(w, e_s)`
//! with `(e_s, e_t)` a positive orthonormal frame and `e_t` future; the
//! hyperbolic angle is `∠[u, v] = ψ(ũ) − ψ(ṽ)` after replacing space-like
//! arguments by their perps and past-pointing ones by their negatives. This is
//! the boost `A_θ ũ = ṽ` written in the basis `{ũ, ũ⊥}`, and with it the Euler
//! relation `φ' = −κ` holds for `φ = ∠[T, Z]`.

use std::num::NonZeroUsize;
use std::sync::Arc;

use gauss_quad::GaussLegendre;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::Jet;
use crate::mink::{CausalCharacter, Chart};
use crate::shape::{christoffel, first_form, shape_from_jet, ParametricSurface, SurfaceJet};

pub const TAU_NULL: f64 = 1e-10;

pub type P2 = [f64; 2];

fn gdot(g: &[[f64; 2]; 2], a: P2, b: P2) -> f64 {
    a[0] * (g[0][0] * b[0] + g[0][1] * b[1]) + a[1] * (g[1][0] * b[0] + g[1][1] * b[1])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TimeOrientation {
    Future,
    Past,
    NotTimeLike,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrientedTangent {
    pub at: P2,
    pub components: P2,
    pub causal: CausalCharacter,
    pub time_orientation: TimeOrientation,
}

/// Unit tangent along `components` at `at`.
pub fn tangent<S: ParametricSurface + ?Sized>(surface: &S, at: P2, components: P2) -> Result<OrientedTangent> {
    let g = surface.metric(at[0], at[1]);
    let q = gdot(&g, components, components);
    let scale = components[0].hypot(components[1]);
    if scale == 0.0 {
        return Err(Error::ZeroVector);
    }
    let rel = q / (scale * scale * g[0][0].abs().max(g[1][1].abs()).max(g[0][1].abs()));
    if rel.abs() < TAU_NULL {
        return Err(Error::NullVector);
    }
    let n = q.abs().sqrt();
    let c = [components[0] / n, components[1] / n];
    let causal = if q > 0.0 { CausalCharacter::SpaceLike } else { CausalCharacter::TimeLike };
    let time_orientation = if q > 0.0 {
        TimeOrientation::NotTimeLike
    } else {
        let tf = surface.time_field(at[0], at[1]).ok_or_else(|| {
            Error::InvalidInput("time-like vector on a surface without time orientation".into())
        })?;
        if gdot(&g, c, tf) < 0.0 {
            TimeOrientation::Future
        } else {
            TimeOrientation::Past
        }
    };
    Ok(OrientedTangent { at, components: c, causal, time_orientation })
}

/// The unit vector `w⊥` with `ĝ(w, w⊥) = 0` and `{w, w⊥}` positively oriented.
pub fn perp<S: ParametricSurface + ?Sized>(surface: &S, w: &OrientedTangent) -> Result<OrientedTangent> {
    let g = surface.metric(w.at[0], w.at[1]);
    let gw = [g[0][0] * w.components[0] + g[0][1] * w.components[1], g[1][0] * w.components[0] + g[1][1] * w.components[1]];
    let d = [-gw[1], gw[0]];
    // det(w, d) = ĝ(w, w), so flip by the causal sign of w
    let sign = gdot(&g, w.components, w.components).signum();
    tangent(surface, w.at, [sign * d[0], sign * d[1]])
}

fn negate(w: &OrientedTangent) -> OrientedTangent {
    let time_orientation = match w.time_orientation {
        TimeOrientation::Future => TimeOrientation::Past,
        TimeOrientation::Past => TimeOrientation::Future,
        TimeOrientation::NotTimeLike => TimeOrientation::NotTimeLike,
    };
    OrientedTangent { components: [-w.components[0], -w.components[1]], time_orientation, ..*w }
}

/// Future unit time-like representative used by the angle cases.
fn future_representative<S: ParametricSurface + ?Sized>(surface: &S, w: &OrientedTangent) -> Result<OrientedTangent> {
    let t = if w.causal == CausalCharacter::SpaceLike { perp(surface, w)? } else { *w };
    Ok(match t.time_orientation {
        TimeOrientation::Past => negate(&t),
        _ => t,
    })
}

/// Positive orthonormal frame `(e_s, e_t)` with `e_t` future at `at`.
fn lorentz_frame<S: ParametricSurface + ?Sized>(surface: &S, at: P2) -> Result<(OrientedTangent, OrientedTangent)> {
    let tf = surface
        .time_field(at[0], at[1])
        .ok_or_else(|| Error::InvalidInput("hyperbolic angles need a Lorentzian surface".into()))?;
    let et = tangent(surface, at, tf)?;
    // perp(e_t) = −e_s
    let es = negate(&perp(surface, &et)?);
    Ok((es, et))
}

/// Rapidity of `w` after the case reductions.
pub fn rapidity<S: ParametricSurface + ?Sized>(surface: &S, w: &OrientedTangent) -> Result<f64> {
    let (es, _) = lorentz_frame(surface, w.at)?;
    let f = future_representative(surface, w)?;
    let g = surface.metric(w.at[0], w.at[1]);
    Ok(gdot(&g, f.components, es.components).asinh())
}

/// Hyperbolic angle `∠[u, v]` at a common point of a Lorentzian surface.
pub fn hyperbolic_angle<S: ParametricSurface + ?Sized>(surface: &S, u: &OrientedTangent, v: &OrientedTangent) -> Result<f64> {
    if (u.at[0] - v.at[0]).abs() + (u.at[1] - v.at[1]).abs() > 1e-12 {
        return Err(Error::InvalidInput("vectors in different tangent planes".into()));
    }
    Ok(rapidity(surface, u)? - rapidity(surface, v)?)
}

/// `∠[u, v] + ∠[v, u]` for a mixed pair, where the two orders put the perp on
/// different arguments.
pub fn angle_asymmetry<S: ParametricSurface + ?Sized>(surface: &S, u: &OrientedTangent, v: &OrientedTangent) -> Result<f64> {
    Ok(hyperbolic_angle(surface, u, v)? + hyperbolic_angle(surface, v, u)?)
}

/// Oriented Euclidean angle from `u` to `v` on a Riemannian surface, in `(−π, π]`.
pub fn riemannian_angle<S: ParametricSurface + ?Sized>(surface: &S, u: &OrientedTangent, v: &OrientedTangent) -> Result<f64> {
    let g = surface.metric(u.at[0], u.at[1]);
    let up = perp(surface, u)?;
    let a = gdot(&g, v.components, up.components).atan2(gdot(&g, v.components, u.components));
    Ok(a)
}

/// Exterior angle at a vertex, following the surface's causal type.
pub fn exterior_angle<S: ParametricSurface + ?Sized>(surface: &S, u: &OrientedTangent, t: &OrientedTangent) -> Result<f64> {
    if is_lorentzian(surface, u.at) {
        hyperbolic_angle(surface, u, t)
    } else {
        riemannian_angle(surface, u, t)
    }
}

pub fn is_lorentzian<S: ParametricSurface + ?Sized>(surface: &S, at: P2) -> bool {
    let g = surface.metric(at[0], at[1]);
    g[0][0] * g[1][1] - g[0][1] * g[0][1] < 0.0
}

/// A curve in parameter space over `τ ∈ [0, 1]`.
#[derive(Clone)]
pub enum SideCurve {
    Segment { from: P2, to: P2 },
    Param(Arc<dyn Fn(Jet) -> [Jet; 2] + Send + Sync>),
}

impl std::fmt::Debug for SideCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SideCurve::Segment { from, to } => write!(f, "Segment({from:?} -> {to:?})"),
            SideCurve::Param(_) => write!(f, "Param(..)"),
        }
    }
}

impl SideCurve {
    pub fn segment(from: P2, to: P2) -> Self {
        SideCurve::Segment { from, to }
    }

    pub fn param<F>(f: F) -> Self
    where
        F: Fn(Jet) -> [Jet; 2] + Send + Sync + 'static,
    {
        SideCurve::Param(Arc::new(f))
    }

    /// Position, velocity and acceleration at `τ`.
    pub fn eval(&self, tau: f64) -> (P2, P2, P2) {
        match self {
            SideCurve::Segment { from, to } => {
                let d = [to[0] - from[0], to[1] - from[1]];
                ([from[0] + tau * d[0], from[1] + tau * d[1]], d, [0.0, 0.0])
            }
            SideCurve::Param(f) => {
                let [a, b] = f(Jet::variable(tau));
                (
                    [a.value(), b.value()],
                    [a.derivative(1), b.derivative(1)],
                    [a.derivative(2), b.derivative(2)],
                )
            }
        }
    }

    pub fn start(&self) -> P2 {
        self.eval(0.0).0
    }

    pub fn end(&self) -> P2 {
        self.eval(1.0).0
    }
}

/// Side of a polygon with a fixed causal character.
#[derive(Debug, Clone)]
pub struct Side {
    pub curve: SideCurve,
    pub causal: CausalCharacter,
}

#[derive(Debug, Clone)]
pub struct NonNullPolygon {
    pub sides: Vec<Side>,
}

const CAUSAL_SAMPLES: usize = 64;

fn side_causal<S: ParametricSurface + ?Sized>(surface: &S, curve: &SideCurve) -> Result<CausalCharacter> {
    let mut sign = 0.0;
    for i in 0..=CAUSAL_SAMPLES {
        let (p, v, _) = curve.eval(i as f64 / CAUSAL_SAMPLES as f64);
        let t = tangent(surface, p, v).map_err(|_| Error::NullBoundary)?;
        let s = if t.causal == CausalCharacter::SpaceLike { 1.0 } else { -1.0 };
        if sign != 0.0 && s != sign {
            return Err(Error::NullBoundary);
        }
        sign = s;
    }
    Ok(if sign > 0.0 { CausalCharacter::SpaceLike } else { CausalCharacter::TimeLike })
}

impl NonNullPolygon {
    pub fn new<S: ParametricSurface + ?Sized>(surface: &S, curves: Vec<SideCurve>) -> Result<Self> {
        if curves.is_empty() {
            return Err(Error::InvalidInput("polygon without sides".into()));
        }
        let n = curves.len();
        for i in 0..n {
            let (a, b) = (curves[i].end(), curves[(i + 1) % n].start());
            if (a[0] - b[0]).abs() + (a[1] - b[1]).abs() > 1e-9 {
                return Err(Error::InvalidInput(format!("polygon not closed at vertex {}", i + 1)));
            }
        }
        let sides = curves
            .into_iter()
            .map(|curve| Ok(Side { causal: side_causal(surface, &curve)?, curve }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { sides })
    }

    /// Coordinate rectangle traversed counter-clockwise in `(u, v)`.
    pub fn rectangle<S: ParametricSurface + ?Sized>(surface: &S, u: (f64, f64), v: (f64, f64)) -> Result<Self> {
        let c = [[u.0, v.0], [u.1, v.0], [u.1, v.1], [u.0, v.1]];
        Self::new(surface, (0..4).map(|i| SideCurve::segment(c[i], c[(i + 1) % 4])).collect())
    }

    /// `(u_j, t_{j+1})` at every vertex, `u_j` incoming and `t_{j+1}` outgoing.
    pub fn vertex_tangents<S: ParametricSurface + ?Sized>(&self, surface: &S) -> Result<Vec<(OrientedTangent, OrientedTangent)>> {
        let n = self.sides.len();
        (0..n)
            .map(|j| {
                let (p, v, _) = self.sides[j].curve.eval(1.0);
                let (_, w, _) = self.sides[(j + 1) % n].curve.eval(0.0);
                Ok((tangent(surface, p, v)?, tangent(surface, p, w)?))
            })
            .collect()
    }

    /// Signed area in parameter space, positive for counter-clockwise traversal.
    pub fn parameter_area(&self) -> f64 {
        let q = quadrature();
        self.sides
            .iter()
            .map(|s| {
                composite(&q, 0.0, 1.0, SIDE_PANELS, |tau| {
                    let (p, v, _) = s.curve.eval(tau);
                    0.5 * (p[0] * v[1] - p[1] * v[0])
                })
            })
            .sum()
    }
}

const GL_ORDER: usize = 12;
const SIDE_PANELS: usize = 64;
const INNER_PANELS: usize = 4;

fn quadrature() -> GaussLegendre {
    GaussLegendre::new(NonZeroUsize::new(GL_ORDER).unwrap())
}

fn composite<F: FnMut(f64) -> f64>(q: &GaussLegendre, a: f64, b: f64, panels: usize, mut f: F) -> f64 {
    let h = (b - a) / panels as f64;
    (0..panels).map(|i| q.integrate(a + i as f64 * h, a + (i + 1) as f64 * h, &mut f)).sum()
}

/// `∫_side κ ds` with `∇_T T = ε₂κ T⊥`, i.e. `κ = ĝ(∇_T T, T⊥)`.
pub fn geodesic_curvature_integral<S: ParametricSurface + ?Sized>(surface: &S, side: &SideCurve) -> Result<f64> {
    geodesic_curvature_integral_panels(surface, side, SIDE_PANELS)
}

pub fn geodesic_curvature_integral_panels<S: ParametricSurface + ?Sized>(
    surface: &S,
    side: &SideCurve,
    panels: usize,
) -> Result<f64> {
    let q = quadrature();
    let mut err = None;
    let val = composite(&q, 0.0, 1.0, panels, |tau| match curvature_density(surface, side, tau) {
        Ok(v) => v,
        Err(e) => {
            err.get_or_insert(e);
            0.0
        }
    });
    match err {
        Some(Error::NullVector) => Err(Error::NullBoundary),
        Some(e) => Err(e),
        None => Ok(val),
    }
}

/// Covariant acceleration `∇_{c'} c'` in coordinate components.
fn covariant_accel(chart: Chart, jet: &SurfaceJet, v: P2, a: P2) -> P2 {
    let gam = christoffel(chart, jet);
    let mut out = a;
    for k in 0..2 {
        for i in 0..2 {
            for j in 0..2 {
                out[k] += gam[k][i][j] * v[i] * v[j];
            }
        }
    }
    out
}

/// `κ |c'|` at `τ`.
fn curvature_density<S: ParametricSurface + ?Sized>(surface: &S, side: &SideCurve, tau: f64) -> Result<f64> {
    let (p, v, a) = side.eval(tau);
    let jet = surface.jet(p[0], p[1]);
    let g = first_form(surface.chart(), &jet);
    let t = tangent(surface, p, v)?;
    let tp = perp(surface, &t)?;
    let cov = covariant_accel(surface.chart(), &jet, v, a);
    let speed = gdot(&g, v, v).abs().sqrt();
    Ok(gdot(&g, cov, tp.components) / speed)
}

/// Geodesic curvature at `τ`.
pub fn geodesic_curvature_at<S: ParametricSurface + ?Sized>(surface: &S, side: &SideCurve, tau: f64) -> Result<f64> {
    let (p, v, _) = side.eval(tau);
    let g = surface.metric(p[0], p[1]);
    Ok(curvature_density(surface, side, tau)? / gdot(&g, v, v).abs().sqrt())
}

/// `∬_K f dA` over the region bounded by the polygon, via Green's theorem
/// with `F(u, v) = ∫_{u₀}^{u} f(s, v) √|det g| ds`.
pub fn integrate_over<S, F>(surface: &S, polygon: &NonNullPolygon, f: F) -> Result<f64>
where
    S: ParametricSurface + ?Sized,
    F: Fn(&crate::shape::ShapeData) -> f64,
{
    integrate_over_panels(surface, polygon, f, SIDE_PANELS)
}

pub fn integrate_over_panels<S, F>(surface: &S, polygon: &NonNullPolygon, f: F, panels: usize) -> Result<f64>
where
    S: ParametricSurface + ?Sized,
    F: Fn(&crate::shape::ShapeData) -> f64,
{
    let q = quadrature();
    let u0 = {
        let starts: Vec<f64> = polygon.sides.iter().map(|s| s.curve.start()[0]).collect();
        starts.iter().sum::<f64>() / starts.len() as f64
    };
    let mut err = None;
    let mut density = |u: f64, v: f64| match shape_from_jet(surface.chart(), &surface.jet(u, v)) {
        Ok(d) => f(&d) * d.area_density,
        Err(e) => {
            err.get_or_insert(e);
            0.0
        }
    };
    let mut total = 0.0;
    for side in &polygon.sides {
        total += composite(&q, 0.0, 1.0, panels, |tau| {
            let (p, vel, _) = side.curve.eval(tau);
            if vel[1] == 0.0 {
                return 0.0;
            }
            let inner = composite(&q, u0, p[0], INNER_PANELS, |u| density(u, p[1]));
            inner * vel[1]
        });
    }
    match err {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussBonnetReport {
    pub lorentzian: bool,
    #[serde(rename = "intK")]
    pub int_k: f64,
    #[serde(rename = "intKappa")]
    pub int_kappa: f64,
    #[serde(rename = "sumTheta")]
    pub sum_theta: f64,
    pub residual: f64,
}

/// Lorentzian: `−∫K dA + ∮κ ds + Σθ_j`. Riemannian: `∫K dA + ∮κ ds + Σθ_j − 2π`.
///
/// The polygon must be traversed counter-clockwise in parameter space.
pub fn gauss_bonnet_residual<S: ParametricSurface + ?Sized>(surface: &S, polygon: &NonNullPolygon) -> Result<GaussBonnetReport> {
    gauss_bonnet_residual_panels(surface, polygon, SIDE_PANELS)
}

pub fn gauss_bonnet_residual_panels<S: ParametricSurface + ?Sized>(
    surface: &S,
    polygon: &NonNullPolygon,
    panels: usize,
) -> Result<GaussBonnetReport> {
    if polygon.parameter_area() <= 0.0 {
        return Err(Error::InvalidInput("polygon must be counter-clockwise".into()));
    }
    let start = polygon.sides[0].curve.start();
    let lorentzian = is_lorentzian(surface, start);
    let int_k = integrate_over_panels(surface, polygon, |d| d.k, panels)?;
    let int_kappa = polygon
        .sides
        .iter()
        .map(|s| geodesic_curvature_integral_panels(surface, &s.curve, panels))
        .sum::<Result<f64>>()?;
    let sum_theta = polygon
        .vertex_tangents(surface)?
        .iter()
        .map(|(u, t)| exterior_angle(surface, u, t))
        .sum::<Result<f64>>()?;
    let residual = if lorentzian {
        -int_k + int_kappa + sum_theta
    } else {
        int_k + int_kappa + sum_theta - 2.0 * std::f64::consts::PI
    };
    Ok(GaussBonnetReport { lorentzian, int_k, int_kappa, sum_theta, residual })
}

/// Parallel field along a side, sampled at `steps + 1` equally spaced `τ`.
pub fn parallel_transport<S: ParametricSurface + ?Sized>(
    surface: &S,
    side: &SideCurve,
    z0: P2,
    steps: usize,
) -> Result<Vec<(f64, P2)>> {
    let rhs = |tau: f64, z: P2| -> P2 {
        let (p, v, _) = side.eval(tau);
        let gam = christoffel(surface.chart(), &surface.jet(p[0], p[1]));
        let mut out = [0.0; 2];
        for k in 0..2 {
            for i in 0..2 {
                for j in 0..2 {
                    out[k] -= gam[k][i][j] * v[i] * z[j];
                }
            }
        }
        out
    };
    let steps = steps.max(1);
    let h = 1.0 / steps as f64;
    let mut z = z0;
    let mut out = Vec::with_capacity(steps + 1);
    out.push((0.0, z));
    for i in 0..steps {
        let tau = i as f64 * h;
        let k1 = rhs(tau, z);
        let k2 = rhs(tau + h / 2.0, [z[0] + h / 2.0 * k1[0], z[1] + h / 2.0 * k1[1]]);
        let k3 = rhs(tau + h / 2.0, [z[0] + h / 2.0 * k2[0], z[1] + h / 2.0 * k2[1]]);
        let k4 = rhs(tau + h, [z[0] + h * k3[0], z[1] + h * k3[1]]);
        for k in 0..2 {
            z[k] += h / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
        }
        if !z.iter().all(|c| c.is_finite()) {
            return Err(Error::InvalidInput("parallel transport diverged".into()));
        }
        out.push(((i + 1) as f64 * h, z));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EulerCheck {
    pub max_defect: f64,
    pub skipped: usize,
}

/// `max |φ'(s) + κ(s)|` with `φ = ∠[T, Z]`, `Z` parallel and unit time-like.
pub fn euler_angle_check<S: ParametricSurface + ?Sized>(surface: &S, side: &SideCurve, z0: P2, steps: usize) -> Result<EulerCheck> {
    let field = parallel_transport(surface, side, z0, steps)?;
    let mut phi = Vec::with_capacity(field.len());
    for (tau, z) in &field {
        let (p, v, _) = side.eval(*tau);
        let angle = (|| {
            let t = tangent(surface, p, v)?;
            let zt = tangent(surface, p, *z)?;
            hyperbolic_angle(surface, &t, &zt)
        })();
        phi.push(angle.ok());
    }
    let h = 1.0 / (field.len() - 1) as f64;
    let mut max_defect: f64 = 0.0;
    let mut skipped = 0;
    for i in 1..field.len() - 1 {
        let (Some(a), Some(b)) = (phi[i - 1], phi[i + 1]) else {
            skipped += 1;
            continue;
        };
        let tau = field[i].0;
        let (p, v, _) = side.eval(tau);
        let speed = gdot(&surface.metric(p[0], p[1]), v, v).abs().sqrt();
        let dphi_ds = (b - a) / (2.0 * h) / speed;
        match geodesic_curvature_at(surface, side, tau) {
            Ok(k) => max_defect = max_defect.max((dphi_ds + k).abs()),
            Err(_) => skipped += 1,
        }
    }
    Ok(EulerCheck { max_defect, skipped })
}

/// `X(u, v) = (A, u, v)` in the chart with `z` time-like: metric `du² − dv²`.
#[derive(Debug, Clone, Copy)]
pub struct FlatPlane {
    pub offset: f64,
}

impl ParametricSurface for FlatPlane {
    fn chart(&self) -> Chart {
        Chart::a2()
    }

    fn jet(&self, u: f64, v: f64) -> SurfaceJet {
        SurfaceJet { x: [self.offset, u, v], xu: [0.0, 1.0, 0.0], xv: [0.0, 0.0, 1.0], xuu: [0.0; 3], xuv: [0.0; 3], xvv: [0.0; 3] }
    }
}

/// `X(u, v) = (√(1 − u² + v²), u, v)` on the one-sheet hyperboloid `x² + y² − z² = 1`.
#[derive(Debug, Clone, Copy)]
pub struct HyperboloidPatch;

impl ParametricSurface for HyperboloidPatch {
    fn chart(&self) -> Chart {
        Chart::a2()
    }

    fn jet(&self, u: f64, v: f64) -> SurfaceJet {
        let r = (1.0 - u * u + v * v).sqrt();
        let r3 = r * r * r;
        SurfaceJet {
            x: [r, u, v],
            xu: [-u / r, 1.0, 0.0],
            xv: [v / r, 0.0, 1.0],
            xuu: [-(1.0 + v * v) / r3, 0.0, 0.0],
            xuv: [u * v / r3, 0.0, 0.0],
            xvv: [(1.0 - u * u) / r3, 0.0, 0.0],
        }
    }
}

impl HyperboloidPatch {
    /// Geodesic from `a` to `b` (parameter points): the normalized chord of the
    /// ambient positions, which lies in a plane through the origin.
    pub fn geodesic(&self, a: P2, b: P2) -> SideCurve {
        let pa = self.jet(a[0], a[1]).x;
        let pb = self.jet(b[0], b[1]).x;
        SideCurve::param(move |t: Jet| {
            let one = Jet::constant(1.0);
            let w: [Jet; 3] = std::array::from_fn(|k| (one - t) * pa[k] + t * pb[k]);
            let n = (w[0] * w[0] + w[1] * w[1] - w[2] * w[2]).sqrt();
            [w[1] / n, w[2] / n]
        })
    }
}

/// `X(u, v) = (u² − v², u, v)`.
#[derive(Debug, Clone, Copy)]
pub struct SaddlePatch;

impl ParametricSurface for SaddlePatch {
    fn chart(&self) -> Chart {
        Chart::a2()
    }

    fn jet(&self, u: f64, v: f64) -> SurfaceJet {
        SurfaceJet {
            x: [u * u - v * v, u, v],
            xu: [2.0 * u, 1.0, 0.0],
            xv: [-2.0 * v, 0.0, 1.0],
            xuu: [2.0, 0.0, 0.0],
            xuv: [0.0; 3],
            xvv: [-2.0, 0.0, 0.0],
        }
    }
}

/// `X(u, v) = (u, v, √(1 + u² + v²))` on the hyperbolic plane `⟨X, X⟩ = −1`.
#[derive(Debug, Clone, Copy)]
pub struct HyperbolicPlaneGraph;

impl ParametricSurface for HyperbolicPlaneGraph {
    fn chart(&self) -> Chart {
        Chart::a2()
    }

    fn jet(&self, u: f64, v: f64) -> SurfaceJet {
        let r = (1.0 + u * u + v * v).sqrt();
        let r3 = r * r * r;
        SurfaceJet {
            x: [u, v, r],
            xu: [1.0, 0.0, u / r],
            xv: [0.0, 1.0, v / r],
            xuu: [0.0, 0.0, (1.0 + v * v) / r3],
            xuv: [0.0, 0.0, -u * v / r3],
            xvv: [0.0, 0.0, (1.0 + u * u) / r3],
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct PolygonReport {
    pub surface: &'static str,
    pub vertices: usize,
    #[serde(flatten)]
    pub gauss_bonnet: GaussBonnetReport,
}
