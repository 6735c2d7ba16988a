//! Free elasticae in the conformal half-plane models and their reconstruction
//! by Frenet integration.
//!
//! Every model is a conformal metric `ĝ = G / q²` on a half-plane `{±q > 0}`,
//! where `q` is the second coordinate. A unit-speed Frenet curve with
//! `ĝ(T,T) = ε₁`, `ĝ(N,N) = ε₂` is a free elastica iff
//!
//! ```text
//! 2κ'' + ε₁ε₂ κ³ + 2 ε₁ 𝒦 κ = 0
//! ```
//!
//! with `𝒦` the Gaussian curvature of the model. Its solutions with `κ(a₀) = C`,
//! `κ'(a₀) = 0` are `C·cn(λ(s − a₀) | m)` with `λ² = ε₁𝒦 + ε₁ε₂C²/2` and
//! `m = ε₁ε₂C²/(4λ²)`; when `λ² < 0` the argument is imaginary and the curvature
//! becomes `C / cn(ν(s − a₀) | 1 − m)` with `ν² = −λ²`.

use serde::{Deserialize, Serialize};

use crate::elliptic::{complete_k, jacobi_sncndn};
use crate::error::{Error, Result};
use crate::mink::{AxisKind, Chart};

pub const TAU_POLE: f64 = 1e-8;
pub const TAU_BDRY: f64 = 1e-6;
pub const DEFAULT_STEP: f64 = 1e-3;
pub const ESCAPE_RADIUS: f64 = 1e6;

/// `λ²` below this magnitude is treated as the excluded constant case.
const TAU_DEGENERATE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelKind {
    AdsA1,
    DeSitterR,
    HyperbolicQ,
    AdsA3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HalfSign {
    Plus,
    Minus,
}

impl HalfSign {
    pub fn sign(self) -> f64 {
        match self {
            HalfSign::Plus => 1.0,
            HalfSign::Minus => -1.0,
        }
    }
}

pub type Vec2 = [f64; 2];
type Mat2 = [[f64; 2]; 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfPlaneModel {
    pub kind: ModelKind,
    pub sign_half: HalfSign,
}

impl HalfPlaneModel {
    pub fn new(kind: ModelKind, sign_half: HalfSign) -> Self {
        Self { kind, sign_half }
    }

    pub fn plus(kind: ModelKind) -> Self {
        Self::new(kind, HalfSign::Plus)
    }

    /// Constant matrix `G` with `ĝ = G / q²`.
    pub fn base_metric(&self) -> Mat2 {
        match self.kind {
            ModelKind::AdsA1 => [[-1.0, 0.0], [0.0, 1.0]],
            ModelKind::DeSitterR => [[1.0, 0.0], [0.0, -1.0]],
            ModelKind::HyperbolicQ => [[1.0, 0.0], [0.0, 1.0]],
            ModelKind::AdsA3 => [[0.0, -1.0], [-1.0, 0.0]],
        }
    }

    pub fn is_lorentzian(&self) -> bool {
        !matches!(self.kind, ModelKind::HyperbolicQ)
    }

    /// Gaussian curvature of `ĝ`.
    ///
    /// For the light-like axis the half-plane metric `−2 dx dy / y²` becomes
    /// `−2 dx dw` under `w = −1/y`, so that model is flat.
    pub fn gaussian_curvature(&self) -> f64 {
        match self.kind {
            ModelKind::AdsA1 | ModelKind::HyperbolicQ => -1.0,
            ModelKind::DeSitterR => 1.0,
            ModelKind::AdsA3 => 0.0,
        }
    }

    pub fn axis(&self) -> AxisKind {
        match self.kind {
            ModelKind::AdsA1 => AxisKind::A1,
            ModelKind::DeSitterR | ModelKind::HyperbolicQ => AxisKind::A2,
            ModelKind::AdsA3 => AxisKind::A3,
        }
    }

    pub fn ambient_chart(&self) -> Chart {
        Chart::for_axis(self.axis())
    }

    /// Position of a half-plane point in the ambient chart.
    pub fn embed(&self, p: Vec2) -> [f64; 3] {
        match self.kind {
            ModelKind::DeSitterR => [p[0], 0.0, p[1]],
            _ => [p[0], p[1], 0.0],
        }
    }

    /// Inverse of [`embed`](Self::embed) on the model plane.
    pub fn project(&self, x: &[f64; 3]) -> Vec2 {
        match self.kind {
            ModelKind::DeSitterR => [x[0], x[2]],
            _ => [x[0], x[1]],
        }
    }

    pub fn contains(&self, p: Vec2) -> bool {
        self.sign_half.sign() * p[1] > 0.0
    }

    pub fn metric_at(&self, p: Vec2) -> Mat2 {
        let g = self.base_metric();
        let w = 1.0 / (p[1] * p[1]);
        [[g[0][0] * w, g[0][1] * w], [g[1][0] * w, g[1][1] * w]]
    }

    pub fn dot(&self, p: Vec2, u: Vec2, v: Vec2) -> f64 {
        let g = self.metric_at(p);
        u[0] * (g[0][0] * v[0] + g[0][1] * v[1]) + u[1] * (g[1][0] * v[0] + g[1][1] * v[1])
    }

    /// `Γ(u, v)^k = Γ^k_ij u^i v^j` for `ĝ = e^{2ω} G`, `ω = −ln|q|`.
    pub fn christoffel_contract(&self, p: Vec2, u: Vec2, v: Vec2) -> Vec2 {
        let g = self.base_metric();
        let ginv = inv2(&g);
        let dw = [0.0, -1.0 / p[1]];
        let u_dw = u[0] * dw[0] + u[1] * dw[1];
        let v_dw = v[0] * dw[0] + v[1] * dw[1];
        let guv = u[0] * (g[0][0] * v[0] + g[0][1] * v[1]) + u[1] * (g[1][0] * v[0] + g[1][1] * v[1]);
        let grad = [
            ginv[0][0] * dw[0] + ginv[0][1] * dw[1],
            ginv[1][0] * dw[0] + ginv[1][1] * dw[1],
        ];
        [
            u[0] * v_dw + v[0] * u_dw - guv * grad[0],
            u[1] * v_dw + v[1] * u_dw - guv * grad[1],
        ]
    }

    /// Unit normal completing `T` to a positive frame, `ĝ(N,N) = ε₂`.
    pub fn frenet_normal(&self, p: Vec2, t: Vec2) -> Vec2 {
        let g = self.metric_at(p);
        let gt = [g[0][0] * t[0] + g[0][1] * t[1], g[1][0] * t[0] + g[1][1] * t[1]];
        let w = [-gt[1], gt[0]];
        let eps1 = self.dot(p, t, t).signum();
        let n = self.dot(p, w, w).abs().sqrt();
        [eps1 * w[0] / n, eps1 * w[1] / n]
    }

    /// Sign `ε₂` of the normal to a curve whose tangent has sign `ε₁`.
    pub fn normal_sign(&self, eps1: f64) -> f64 {
        if self.is_lorentzian() {
            -eps1
        } else {
            eps1
        }
    }
}

fn inv2(g: &Mat2) -> Mat2 {
    let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    [[g[1][1] / det, -g[0][1] / det], [-g[1][0] / det, g[0][0] / det]]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProfileFamily {
    Geodesic,
    CnFamily,
    ConstantCritical,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ElasticaProfile {
    pub family: ProfileFamily,
    pub c: f64,
    pub a0: f64,
    pub eps1: f64,
    pub eps2: f64,
    pub model: HalfPlaneModel,
}

/// How the cn-family curvature is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
enum CnBranch {
    /// `C·cn(λ(s−a₀) | m)`
    Real { lambda: f64, m: f64 },
    /// `C / cn(ν(s−a₀) | p)`
    Imaginary { nu: f64, p: f64 },
}

impl ElasticaProfile {
    fn check_signs(model: HalfPlaneModel, eps1: f64) -> Result<(f64, f64)> {
        if eps1 != 1.0 && eps1 != -1.0 {
            return Err(Error::InvalidInput(format!("eps1 must be ±1, got {eps1}")));
        }
        if !model.is_lorentzian() && eps1 < 0.0 {
            return Err(Error::InvalidInput("the hyperbolic plane has no time-like curves".into()));
        }
        Ok((eps1, model.normal_sign(eps1)))
    }

    pub fn geodesic(model: HalfPlaneModel, eps1: f64) -> Result<Self> {
        let (eps1, eps2) = Self::check_signs(model, eps1)?;
        Ok(Self { family: ProfileFamily::Geodesic, c: 0.0, a0: 0.0, eps1, eps2, model })
    }

    /// The cn-family member with `κ(a₀) = C`, `κ'(a₀) = 0`.
    pub fn cn(model: HalfPlaneModel, eps1: f64, c: f64, a0: f64) -> Result<Self> {
        let (eps1, eps2) = Self::check_signs(model, eps1)?;
        if !c.is_finite() || !a0.is_finite() {
            return Err(Error::InvalidInput("C and a0 must be finite".into()));
        }
        let p = Self { family: ProfileFamily::CnFamily, c, a0, eps1, eps2, model };
        if p.lambda_sq().abs() < TAU_DEGENERATE {
            return Err(Error::InvalidInput(format!(
                "C = {c} gives a constant solution, excluded from the cn family"
            )));
        }
        Ok(p)
    }

    /// Constant curvature solutions `κ² = −2ε₂𝒦`, when that is positive.
    pub fn constant_critical(model: HalfPlaneModel, eps1: f64, positive: bool) -> Result<Self> {
        let (eps1, eps2) = Self::check_signs(model, eps1)?;
        let k2 = -2.0 * eps2 * model.gaussian_curvature();
        if k2 <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "no non-zero constant elastica for this model with eps1 = {eps1}"
            )));
        }
        let c = if positive { k2.sqrt() } else { -k2.sqrt() };
        Ok(Self { family: ProfileFamily::ConstantCritical, c, a0: 0.0, eps1, eps2, model })
    }

    /// Cubic coefficient `ε₁ε₂` of the Euler–Lagrange equation.
    pub fn cubic_coeff(&self) -> f64 {
        self.eps1 * self.eps2
    }

    /// Linear coefficient `ε₁𝒦` of the Euler–Lagrange equation.
    pub fn linear_coeff(&self) -> f64 {
        self.eps1 * self.model.gaussian_curvature()
    }

    /// `λ² = ε₁𝒦 + ε₁ε₂C²/2`.
    pub fn lambda_sq(&self) -> f64 {
        self.linear_coeff() + self.cubic_coeff() * self.c * self.c / 2.0
    }

    /// Elliptic parameter `C̃² = ε₁ε₂C²/(4λ²)`.
    pub fn parameter(&self) -> f64 {
        self.cubic_coeff() * self.c * self.c / (4.0 * self.lambda_sq())
    }

    fn branch(&self) -> CnBranch {
        let l2 = self.lambda_sq();
        let m = self.parameter();
        if l2 > 0.0 {
            CnBranch::Real { lambda: l2.sqrt(), m }
        } else {
            CnBranch::Imaginary { nu: (-l2).sqrt(), p: 1.0 - m }
        }
    }

    /// Half-spacing `E′/ν` of consecutive poles, if the curvature has poles.
    fn pole_half_spacing(&self) -> Option<f64> {
        if self.family != ProfileFamily::CnFamily || self.c == 0.0 {
            return None;
        }
        match self.branch() {
            CnBranch::Imaginary { nu, p } if p < 1.0 => complete_k(p).ok().map(|k| k / nu),
            _ => None,
        }
    }

    fn nearest_pole(&self, s: f64) -> Option<f64> {
        let h = self.pole_half_spacing()?;
        let n = ((s - self.a0) / h - 1.0) / 2.0;
        Some(self.a0 + (2.0 * n.round() + 1.0) * h)
    }

    fn check_pole(&self, s: f64) -> Result<()> {
        if let Some(pole) = self.nearest_pole(s) {
            if (s - pole).abs() < TAU_POLE {
                return Err(Error::Pole { abscissa: pole });
            }
        }
        Ok(())
    }

    /// `(κ, κ', κ'')` at arclength `s`, with derivatives from the Jacobi
    /// derivative rules `cn' = −sn·dn`, `sn' = cn·dn`, `dn' = −m·sn·cn`.
    pub fn curvature_jet(&self, s: f64) -> Result<(f64, f64, f64)> {
        match self.family {
            ProfileFamily::Geodesic => Ok((0.0, 0.0, 0.0)),
            ProfileFamily::ConstantCritical => Ok((self.c, 0.0, 0.0)),
            ProfileFamily::CnFamily => {
                self.check_pole(s)?;
                let c = self.c;
                match self.branch() {
                    CnBranch::Real { lambda, m } => {
                        let (sn, cn, dn) = jacobi_sncndn(lambda * (s - self.a0), m);
                        let d1 = -sn * dn;
                        let d2 = -cn * dn * dn + m * sn * sn * cn;
                        Ok((c * cn, c * lambda * d1, c * lambda * lambda * d2))
                    }
                    CnBranch::Imaginary { nu, p } => {
                        let (sn, cn, dn) = jacobi_sncndn(nu * (s - self.a0), p);
                        let d1 = -sn * dn;
                        let d2 = -cn * dn * dn + p * sn * sn * cn;
                        let k = c / cn;
                        let k1 = -c * nu * d1 / (cn * cn);
                        let k2 = c * nu * nu * (2.0 * d1 * d1 / (cn * cn * cn) - d2 / (cn * cn));
                        Ok((k, k1, k2))
                    }
                }
            }
        }
    }

    pub fn curvature_at(&self, s: f64) -> Result<f64> {
        self.curvature_jet(s).map(|j| j.0)
    }

    /// `2κ'' + ε₁ε₂κ³ + 2ε₁𝒦κ`.
    pub fn el_residual(&self, s: f64) -> Result<f64> {
        let (k, _, k2) = self.curvature_jet(s)?;
        Ok(self.residual_of(k, k2))
    }

    pub fn residual_of(&self, k: f64, k2: f64) -> f64 {
        2.0 * k2 + self.cubic_coeff() * k * k * k + 2.0 * self.linear_coeff() * k
    }

    pub fn excluded_domain(&self, window: (f64, f64)) -> ExcludedSet {
        let mut poles = Vec::new();
        if let Some(h) = self.pole_half_spacing() {
            let (lo, hi) = (window.0.min(window.1), window.0.max(window.1));
            let n0 = (((lo - self.a0) / h - 1.0) / 2.0).floor() as i64;
            let mut n = n0;
            loop {
                let s = self.a0 + (2 * n + 1) as f64 * h;
                if s > hi {
                    break;
                }
                if s >= lo {
                    poles.push(s);
                }
                n += 1;
            }
        }
        ExcludedSet { poles, window }
    }

    /// Largest pole-free interval around `a₀`, or `None` if there are no poles.
    pub fn pole_free_half_width(&self) -> Option<f64> {
        self.pole_half_spacing()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExcludedSet {
    pub poles: Vec<f64>,
    pub window: (f64, f64),
}

impl ExcludedSet {
    pub fn is_empty(&self) -> bool {
        self.poles.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    pub s: f64,
    pub position: Vec2,
    pub tangent: Vec2,
    pub kappa: f64,
    /// Coordinate acceleration `dT/ds`.
    pub accel: Vec2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Termination {
    Completed,
    NearBoundary,
    /// Coordinates exceeded `ESCAPE_RADIUS` (the patch is incomplete).
    Escaped,
    CurvatureUndefined,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileCurve {
    pub model: HalfPlaneModel,
    pub eps1: f64,
    pub samples: Vec<CurveSample>,
    pub termination: Termination,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetStart {
    pub position: Vec2,
    pub tangent: Vec2,
}

/// Integrates `∇_T T = ε₂κN` from `start` over `span` with fixed-step RK4.
///
/// The span may extend on both sides of its start abscissa `span.0`; the
/// returned samples are in increasing `s`. Integration stops early when the
/// curve comes within `TAU_BDRY` of the boundary or `kappa` fails.
pub fn integrate_frenet<F>(
    model: HalfPlaneModel,
    kappa: F,
    start: FrenetStart,
    span: (f64, f64),
    step: f64,
) -> Result<ProfileCurve>
where
    F: Fn(f64) -> Result<f64>,
{
    integrate_frenet_from(model, kappa, start, span.0, span, step)
}

/// Like [`integrate_frenet`] but with the initial data given at `s0` inside `span`.
pub fn integrate_frenet_from<F>(
    model: HalfPlaneModel,
    kappa: F,
    start: FrenetStart,
    s0: f64,
    span: (f64, f64),
    step: f64,
) -> Result<ProfileCurve>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(step > 0.0) {
        return Err(Error::InvalidInput("step must be positive".into()));
    }
    if !(span.0 <= s0 && s0 <= span.1) {
        return Err(Error::InvalidInput("start abscissa outside span".into()));
    }
    let p = start.position;
    if !model.contains(p) || (p[1].abs() < TAU_BDRY) {
        return Err(Error::InvalidInput(format!("start ({}, {}) not inside the half-plane", p[0], p[1])));
    }
    let q = model.dot(p, start.tangent, start.tangent);
    if (q.abs() - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidInput(format!("start tangent not unit: ĝ(T,T) = {q}")));
    }
    let eps1 = q.signum();
    let eps2 = model.normal_sign(eps1);

    let (fwd, t_fwd) = march(&model, &kappa, start, s0, span.1, step, eps1, eps2);
    let (bwd, t_bwd) = march(&model, &kappa, start, s0, span.0, step, eps1, eps2);
    let mut samples: Vec<CurveSample> = bwd.into_iter().rev().collect();
    samples.pop();
    samples.extend(fwd);
    let termination = if t_fwd != Termination::Completed { t_fwd } else { t_bwd };
    Ok(ProfileCurve { model, eps1, samples, termination })
}

type State = [f64; 4];

fn rhs<F>(model: &HalfPlaneModel, kappa: &F, s: f64, y: &State, eps2: f64) -> Result<(State, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let p = [y[0], y[1]];
    let t = [y[2], y[3]];
    let k = kappa(s)?;
    let gam = model.christoffel_contract(p, t, t);
    let n = model.frenet_normal(p, t);
    Ok(([t[0], t[1], -gam[0] + eps2 * k * n[0], -gam[1] + eps2 * k * n[1]], k))
}

#[allow(clippy::too_many_arguments)]
fn march<F>(
    model: &HalfPlaneModel,
    kappa: &F,
    start: FrenetStart,
    s0: f64,
    s_end: f64,
    step: f64,
    eps1: f64,
    eps2: f64,
) -> (Vec<CurveSample>, Termination)
where
    F: Fn(f64) -> Result<f64>,
{
    let dir = if s_end >= s0 { 1.0 } else { -1.0 };
    let length = (s_end - s0).abs();
    let n_steps = (length / step).ceil().max(0.0) as usize;
    let h = if n_steps > 0 { dir * length / n_steps as f64 } else { 0.0 };
    let mut y: State = [start.position[0], start.position[1], start.tangent[0], start.tangent[1]];
    let mut out = Vec::with_capacity(n_steps + 1);

    let sample = |s: f64, y: &State| -> Option<CurveSample> {
        let (d, k) = rhs(model, kappa, s, y, eps2).ok()?;
        Some(CurveSample { s, position: [y[0], y[1]], tangent: [y[2], y[3]], kappa: k, accel: [d[2], d[3]] })
    };

    match sample(s0, &y) {
        Some(smp) => out.push(smp),
        None => return (out, Termination::CurvatureUndefined),
    }
    for i in 0..n_steps {
        let s = s0 + i as f64 * h;
        let stage = |s: f64, y: &State| rhs(model, kappa, s, y, eps2).map(|r| r.0);
        let add = |y: &State, k: &State, f: f64| -> State { std::array::from_fn(|j| y[j] + f * k[j]) };
        let next = (|| -> Result<State> {
            let k1 = stage(s, &y)?;
            let k2 = stage(s + h / 2.0, &add(&y, &k1, h / 2.0))?;
            let k3 = stage(s + h / 2.0, &add(&y, &k2, h / 2.0))?;
            let k4 = stage(s + h, &add(&y, &k3, h))?;
            Ok(std::array::from_fn(|j| y[j] + h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j])))
        })();
        let Ok(mut ny) = next else {
            return (out, Termination::CurvatureUndefined);
        };
        let p = [ny[0], ny[1]];
        if !model.contains(p) || p[1].abs() < TAU_BDRY || !ny.iter().all(|v| v.is_finite()) {
            return (out, Termination::NearBoundary);
        }
        if p[0].abs().max(p[1].abs()) > ESCAPE_RADIUS {
            return (out, Termination::Escaped);
        }
        let norm = (eps1 * model.dot(p, [ny[2], ny[3]], [ny[2], ny[3]])).sqrt();
        ny[2] /= norm;
        ny[3] /= norm;
        y = ny;
        let s_next = if i + 1 == n_steps { s_end } else { s0 + (i + 1) as f64 * h };
        match sample(s_next, &y) {
            Some(smp) => out.push(smp),
            None => return (out, Termination::CurvatureUndefined),
        }
    }
    (out, Termination::Completed)
}

impl ProfileCurve {
    /// `max |ĝ(T,T) − ε₁|` over the samples.
    pub fn unit_speed_defect(&self) -> f64 {
        self.samples
            .iter()
            .map(|c| (self.model.dot(c.position, c.tangent, c.tangent) - self.eps1).abs())
            .fold(0.0, f64::max)
    }

    /// Curvature recovered from the stored acceleration: `ĝ(∇_T T, N)`.
    pub fn recovered_curvature(&self) -> Vec<f64> {
        self.samples
            .iter()
            .map(|c| {
                let gam = self.model.christoffel_contract(c.position, c.tangent, c.tangent);
                let cov = [c.accel[0] + gam[0], c.accel[1] + gam[1]];
                let n = self.model.frenet_normal(c.position, c.tangent);
                self.model.dot(c.position, cov, n)
            })
            .collect()
    }

    pub fn arclength_span(&self) -> (f64, f64) {
        match (self.samples.first(), self.samples.last()) {
            (Some(a), Some(b)) => (a.s, b.s),
            _ => (0.0, 0.0),
        }
    }

    /// Position, velocity and acceleration at `s` by quintic Hermite
    /// interpolation of the stored samples.
    pub fn eval(&self, s: f64) -> (Vec2, Vec2, Vec2) {
        let smp = &self.samples;
        let n = smp.len();
        let mut i = match smp.binary_search_by(|c| c.s.partial_cmp(&s).unwrap()) {
            Ok(i) => i,
            Err(i) => i.saturating_sub(1),
        };
        i = i.min(n.saturating_sub(2));
        let a = &smp[i];
        let b = &smp[(i + 1).min(n - 1)];
        let h = b.s - a.s;
        if h == 0.0 {
            return (a.position, a.tangent, a.accel);
        }
        let t = (s - a.s) / h;
        let mut pos = [0.0; 2];
        let mut vel = [0.0; 2];
        let mut acc = [0.0; 2];
        for k in 0..2 {
            let (p, v, ac) = quintic_hermite(
                [a.position[k], a.tangent[k] * h, a.accel[k] * h * h],
                [b.position[k], b.tangent[k] * h, b.accel[k] * h * h],
                t,
            );
            pos[k] = p;
            vel[k] = v / h;
            acc[k] = ac / (h * h);
        }
        (pos, vel, acc)
    }
}

/// Quintic Hermite interpolant on `[0,1]` from value, first and second
/// derivative at both ends; returns value and the first two derivatives at `t`.
pub fn quintic_hermite(a: [f64; 3], b: [f64; 3], t: f64) -> (f64, f64, f64) {
    // Coefficients of p(t) = Σ c_k t^k.
    let c0 = a[0];
    let c1 = a[1];
    let c2 = a[2] / 2.0;
    let r0 = b[0] - (c0 + c1 + c2);
    let r1 = b[1] - (c1 + 2.0 * c2);
    let r2 = b[2] - 2.0 * c2;
    let c3 = 10.0 * r0 - 4.0 * r1 + 0.5 * r2;
    let c4 = -15.0 * r0 + 7.0 * r1 - r2;
    let c5 = 6.0 * r0 - 3.0 * r1 + 0.5 * r2;
    let p = c0 + t * (c1 + t * (c2 + t * (c3 + t * (c4 + t * c5))));
    let dp = c1 + t * (2.0 * c2 + t * (3.0 * c3 + t * (4.0 * c4 + t * 5.0 * c5)));
    let ddp = 2.0 * c2 + t * (6.0 * c3 + t * (12.0 * c4 + t * 20.0 * c5));
    (p, dp, ddp)
}

/// Trapezoidal `∫κ² ds` over the samples.
pub fn total_squared_curvature(curve: &ProfileCurve) -> Result<f64> {
    if curve.samples.len() < 2 {
        return Err(Error::InvalidInput("need at least two samples".into()));
    }
    Ok(curve
        .samples
        .windows(2)
        .map(|w| 0.5 * (w[1].s - w[0].s) * (w[0].kappa * w[0].kappa + w[1].kappa * w[1].kappa))
        .sum())
}

/// Causal character of a surface in a catalog row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurfaceCharacter {
    Riemannian,
    Lorentzian,
}

/// One row of the classification of rotational solutions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CatalogRow {
    pub axis: AxisKind,
    pub axis_character: &'static str,
    pub orbits: &'static str,
    pub surface: SurfaceCharacter,
    pub model: HalfPlaneModel,
    pub eps1: f64,
    pub curve: &'static str,
}

pub fn catalog() -> [CatalogRow; 7] {
    use SurfaceCharacter::*;
    let row = |axis, axis_character, orbits, surface, kind, eps1, curve| CatalogRow {
        axis,
        axis_character,
        orbits,
        surface,
        model: HalfPlaneModel::plus(kind),
        eps1,
        curve,
    };
    [
        row(AxisKind::A1, "time-like", "circles", Riemannian, ModelKind::AdsA1, 1.0, "space-like free elastica in the anti de Sitter plane"),
        row(AxisKind::A1, "time-like", "circles", Lorentzian, ModelKind::AdsA1, -1.0, "time-like free elastica in the anti de Sitter plane"),
        row(AxisKind::A2, "space-like", "hyperbolas", Riemannian, ModelKind::DeSitterR, 1.0, "space-like free elastica in the de Sitter plane"),
        row(AxisKind::A2, "space-like", "hyperbolas", Lorentzian, ModelKind::DeSitterR, -1.0, "time-like free elastica in the de Sitter plane"),
        row(AxisKind::A2, "space-like", "hyperbolas", Lorentzian, ModelKind::HyperbolicQ, 1.0, "free elastica in the hyperbolic plane"),
        row(AxisKind::A3, "light-like", "parabolas", Riemannian, ModelKind::AdsA3, 1.0, "space-like free elastica in the null-axis half-plane"),
        row(AxisKind::A3, "light-like", "parabolas", Lorentzian, ModelKind::AdsA3, -1.0, "time-like free elastica in the null-axis half-plane"),
    ]
}

/// A unit tangent of causal sign `eps1` making angle parameter `theta` with
/// the coordinate axes at `p`: `(cos θ, sin θ)` (Riemannian), or a boosted
/// frame vector (Lorentzian).
pub fn unit_tangent(model: &HalfPlaneModel, p: Vec2, eps1: f64, theta: f64) -> Result<Vec2> {
    let q = p[1].abs();
    let v = match model.kind {
        ModelKind::HyperbolicQ => {
            if eps1 < 0.0 {
                return Err(Error::InvalidInput("the hyperbolic plane has no time-like vectors".into()));
            }
            [theta.cos(), theta.sin()]
        }
        ModelKind::AdsA1 => {
            // time-like direction is the first coordinate
            let (c, s) = (theta.cosh(), theta.sinh());
            if eps1 < 0.0 {
                [c, s]
            } else {
                [s, c]
            }
        }
        ModelKind::DeSitterR => {
            let (c, s) = (theta.cosh(), theta.sinh());
            if eps1 < 0.0 {
                [s, c]
            } else {
                [c, s]
            }
        }
        ModelKind::AdsA3 => {
            // −2dxdy: e± = (1, ∓1)/√2 are unit space-/time-like
            let (c, s) = (theta.cosh(), theta.sinh());
            let ts = [1.0 / 2f64.sqrt(), -1.0 / 2f64.sqrt()];
            let tt = [1.0 / 2f64.sqrt(), 1.0 / 2f64.sqrt()];
            if eps1 < 0.0 {
                [c * tt[0] + s * ts[0], c * tt[1] + s * ts[1]]
            } else {
                [c * ts[0] + s * tt[0], c * ts[1] + s * tt[1]]
            }
        }
    };
    Ok([v[0] * q, v[1] * q])
}
