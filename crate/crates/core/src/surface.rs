//! Rotational surfaces in Minkowski space: generation from a profile curve,
//! sigma-model and Willmore energies, and the flat-ambient Willmore residual.

use std::io::{self, Write};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::elastica::{total_squared_curvature, ModelKind, ProfileCurve};
use crate::error::{Error, Result};
use crate::expr::Jet;
use crate::gaussbonnet::{
    gauss_bonnet_residual, integrate_over, is_lorentzian, GaussBonnetReport, NonNullPolygon,
};
use crate::mink::{mat_vec, rotation_matrix, AxisKind, Chart, Mat3};
use crate::shape::{first_form, shape_from_jet, ParametricSurface, ShapeData, SurfaceJet, V3};

/// Minimal distance of the profile from the rotation axis.
pub const TAU_AXIS: f64 = 1e-9;

/// Residual threshold separating solutions from non-solutions.
pub const SOLUTION_THRESHOLD: f64 = 1e-4;

/// A curve in the plane that generates the surface, in ambient coordinates.
#[derive(Clone)]
pub enum Profile {
    Analytic(Arc<dyn Fn(Jet) -> [Jet; 3] + Send + Sync>),
    Sampled(ProfileCurve),
}

impl std::fmt::Debug for Profile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Profile::Analytic(_) => write!(f, "Analytic(..)"),
            Profile::Sampled(c) => write!(f, "Sampled({:?}, {} samples)", c.model, c.samples.len()),
        }
    }
}

impl Profile {
    pub fn analytic<F>(f: F) -> Self
    where
        F: Fn(Jet) -> [Jet; 3] + Send + Sync + 'static,
    {
        Profile::Analytic(Arc::new(f))
    }

    /// Position, first and second derivative at `s`.
    pub fn eval(&self, s: f64) -> [V3; 3] {
        match self {
            Profile::Analytic(f) => {
                let p = f(Jet::variable(s));
                [
                    std::array::from_fn(|k| p[k].value()),
                    std::array::from_fn(|k| p[k].derivative(1)),
                    std::array::from_fn(|k| p[k].derivative(2)),
                ]
            }
            Profile::Sampled(c) => {
                let (p, v, a) = c.eval(s);
                // the embedding is linear
                [c.model.embed(p), c.model.embed(v), c.model.embed(a)]
            }
        }
    }

    /// The line `(A, 0, s)`; rotated about the space-like axis it gives the plane `x = A`.
    pub fn plane(a: f64) -> Self {
        Self::analytic(move |s| [Jet::constant(a), Jet::constant(0.0), s])
    }

    /// `(√(1+s²), 0, s)`, generating `x² + y² − z² = 1` about the space-like axis.
    pub fn hyperboloid() -> Self {
        Self::analytic(|s| [(s * s + Jet::constant(1.0)).sqrt(), Jet::constant(0.0), s])
    }

    /// `(s, r, 0)`, generating the cylinder `y² + z² = r²` about the time-like axis.
    pub fn cylinder(r: f64) -> Self {
        Self::analytic(move |s| [s, Jet::constant(r), Jet::constant(0.0)])
    }

    /// `(−s², 0, s)`, generating the saddle `x = y² − z²` about the space-like axis.
    pub fn saddle() -> Self {
        Self::analytic(|s| [-(s * s), Jet::constant(0.0), s])
    }

    /// `(s, 0, √(1+s²))`, generating the hyperbolic plane `x² + y² − z² = −1`.
    pub fn hyperbolic_plane() -> Self {
        Self::analytic(|s| [s, Jet::constant(0.0), (s * s + Jet::constant(1.0)).sqrt()])
    }
}

/// Surface `X(s, t) = R(t)·α(s)` sampled on an `(s, t)` grid.
#[derive(Debug, Clone)]
pub struct RotationalSurface {
    pub kind: AxisKind,
    pub profile: Profile,
    pub s_grid: Vec<f64>,
    pub t_grid: Vec<f64>,
    /// Row-major, `s` slow.
    pub vertices: Vec<V3>,
    /// `None` on light-like tangent planes.
    pub shape: Vec<Option<ShapeData>>,
}

fn rotated_jet(kind: AxisKind, p: &[V3; 3], t: f64) -> SurfaceJet {
    let r = rotation_matrix(kind, t);
    let j: Mat3 = kind.generator();
    let jp = mat_vec(&j, &p[0]);
    let jjp = mat_vec(&j, &jp);
    let jp1 = mat_vec(&j, &p[1]);
    SurfaceJet {
        x: mat_vec(&r, &p[0]),
        xu: mat_vec(&r, &p[1]),
        xv: mat_vec(&r, &jp),
        xuu: mat_vec(&r, &p[2]),
        xuv: mat_vec(&r, &jp1),
        xvv: mat_vec(&r, &jjp),
    }
}

/// `n` equally spaced values covering `[a, b]`.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    let n = n.max(2);
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}

/// Grid over `[a, b]` with step as close as possible to `h`.
pub fn grid_with_step(a: f64, b: f64, h: f64) -> Vec<f64> {
    let n = ((b - a) / h).round().max(1.0) as usize + 1;
    linspace(a, b, n)
}

pub fn generate_surface(kind: AxisKind, profile: Profile, s_grid: Vec<f64>, t_grid: Vec<f64>) -> Result<RotationalSurface> {
    if s_grid.len() < 2 || t_grid.len() < 2 {
        return Err(Error::InvalidInput("grids need at least two points".into()));
    }
    if !s_grid.windows(2).all(|w| w[1] > w[0]) || !t_grid.windows(2).all(|w| w[1] > w[0]) {
        return Err(Error::InvalidInput("grids must be increasing".into()));
    }
    if let Profile::Sampled(c) = &profile {
        if c.model.axis() != kind {
            return Err(Error::ChartMismatch);
        }
        let (a, b) = c.arclength_span();
        if s_grid[0] < a - 1e-12 || s_grid[s_grid.len() - 1] > b + 1e-12 {
            return Err(Error::InvalidInput(format!("s grid exceeds the profile span [{a}, {b}]")));
        }
    }
    let gen = kind.generator();
    let jets: Vec<[V3; 3]> = s_grid.iter().map(|&s| profile.eval(s)).collect();
    for p in &jets {
        let jp = mat_vec(&gen, &p[0]);
        if jp.iter().map(|c| c * c).sum::<f64>().sqrt() <= TAU_AXIS {
            return Err(Error::DegenerateSurface);
        }
    }
    let chart = Chart::for_axis(kind);
    let nt = t_grid.len();
    let cells: Vec<(V3, Option<ShapeData>)> = (0..s_grid.len() * nt)
        .into_par_iter()
        .map(|idx| {
            let jet = rotated_jet(kind, &jets[idx / nt], t_grid[idx % nt]);
            (jet.x, shape_from_jet(chart, &jet).ok())
        })
        .collect();
    let (vertices, shape) = cells.into_iter().unzip();
    Ok(RotationalSurface { kind, profile, s_grid, t_grid, vertices, shape })
}

impl ParametricSurface for RotationalSurface {
    fn chart(&self) -> Chart {
        Chart::for_axis(self.kind)
    }

    fn jet(&self, s: f64, t: f64) -> SurfaceJet {
        rotated_jet(self.kind, &self.profile.eval(s), t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridInfo {
    pub ns: usize,
    pub nt: usize,
    pub hs: f64,
    pub ht: f64,
}

/// Index window `[i0, i1] × [j0, j1]` on the grid, inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub s: (usize, usize),
    pub t: (usize, usize),
}

impl RotationalSurface {
    pub fn ns(&self) -> usize {
        self.s_grid.len()
    }

    pub fn nt(&self) -> usize {
        self.t_grid.len()
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.nt() + j
    }

    pub fn full_window(&self) -> Window {
        Window { s: (0, self.ns() - 1), t: (0, self.nt() - 1) }
    }

    pub fn grid_info(&self) -> GridInfo {
        GridInfo {
            ns: self.ns(),
            nt: self.nt(),
            hs: (self.s_grid[self.ns() - 1] - self.s_grid[0]) / (self.ns() - 1) as f64,
            ht: (self.t_grid[self.nt() - 1] - self.t_grid[0]) / (self.nt() - 1) as f64,
        }
    }

    fn check_window(&self, w: Window) -> Result<()> {
        if w.s.0 >= w.s.1 || w.t.0 >= w.t.1 || w.s.1 >= self.ns() || w.t.1 >= self.nt() {
            return Err(Error::InvalidInput(format!("window {w:?} is degenerate or outside the grid")));
        }
        Ok(())
    }

    /// Trapezoidal `∫ f dA` over the window; cells touching a light-like
    /// vertex are skipped and their parameter area returned alongside.
    pub fn integrate<F: Fn(&ShapeData) -> f64 + Sync>(&self, w: Window, f: F) -> Result<(f64, f64)> {
        self.check_window(w)?;
        let rows: Vec<(f64, f64)> = (w.s.0..w.s.1)
            .into_par_iter()
            .map(|i| {
                let mut acc = 0.0;
                let mut excluded = 0.0;
                for j in w.t.0..w.t.1 {
                    let area = (self.s_grid[i + 1] - self.s_grid[i]) * (self.t_grid[j + 1] - self.t_grid[j]);
                    let corners = [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)];
                    let vals: Option<Vec<f64>> = corners
                        .iter()
                        .map(|&(a, b)| self.shape[self.index(a, b)].as_ref().map(|d| f(d) * d.area_density))
                        .collect();
                    match vals {
                        Some(v) => acc += 0.25 * area * v.iter().sum::<f64>(),
                        None => excluded += area,
                    }
                }
                (acc, excluded)
            })
            .collect();
        Ok(rows.iter().fold((0.0, 0.0), |a, r| (a.0 + r.0, a.1 + r.1)))
    }

    pub fn parameter_rectangle(&self, w: Window) -> ((f64, f64), (f64, f64)) {
        ((self.s_grid[w.s.0], self.s_grid[w.s.1]), (self.t_grid[w.t.0], self.t_grid[w.t.1]))
    }

    pub fn write_obj<W: Write>(&self, out: &mut W) -> io::Result<()> {
        write_obj_groups(out, &[ObjGroup { name: "surface", ns: self.ns(), nt: self.nt(), vertices: &self.vertices }])
    }
}

pub fn shape_data_at(surface: &RotationalSurface, i: usize, j: usize) -> Result<ShapeData> {
    if i == 0 || j == 0 || i + 1 >= surface.ns() || j + 1 >= surface.nt() {
        return Err(Error::InvalidInput(format!("({i}, {j}) is not an interior grid point")));
    }
    surface.shape[surface.index(i, j)].ok_or(Error::DegenerateTangentPlane(i, j))
}

/// `𝔖 = ∫ ‖dN‖² dA` by the trapezoidal rule.
pub fn sigma_energy(surface: &RotationalSurface, w: Window) -> Result<f64> {
    let (v, excluded) = surface.integrate(w, |d| d.dn2)?;
    if excluded > 0.0 {
        return Err(Error::DegenerateSurface);
    }
    Ok(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyReport {
    pub sigma: f64,
    pub willmore_area_term: f64,
    pub willmore_boundary_term: f64,
    pub willmore: f64,
    pub residual_field_max: f64,
    pub excluded_measure: f64,
    pub grid: GridInfo,
}

/// Energies over a coordinate rectangle; the boundary term is `∮κ ds` over
/// its four sides traversed counter-clockwise in `(s, t)`.
pub fn willmore_energy(surface: &RotationalSurface, w: Window) -> Result<EnergyReport> {
    let (sigma, excluded) = surface.integrate(w, |d| d.dn2)?;
    let (area, _) = surface.integrate(w, |d| d.h2)?;
    let (su, tv) = surface.parameter_rectangle(w);
    let polygon = NonNullPolygon::rectangle(surface, su, tv)?;
    let boundary = polygon
        .sides
        .iter()
        .map(|side| crate::gaussbonnet::geodesic_curvature_integral(surface, &side.curve))
        .sum::<Result<f64>>()?;
    let residual = willmore_residual(surface)?;
    Ok(EnergyReport {
        sigma,
        willmore_area_term: area,
        willmore_boundary_term: boundary,
        willmore: area + boundary,
        residual_field_max: residual.max_abs_in(w),
        excluded_measure: excluded,
        grid: surface.grid_info(),
    })
}

/// `ε△H + H(‖dN‖² − 2H²)` on the grid; `None` within two cells of the edge
/// or next to light-like vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualField {
    pub ns: usize,
    pub nt: usize,
    pub values: Vec<Option<f64>>,
}

impl ResidualField {
    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        self.values[i * self.nt + j]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().flatten().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn max_abs_in(&self, w: Window) -> f64 {
        let mut m: f64 = 0.0;
        for i in w.s.0..=w.s.1 {
            for j in w.t.0..=w.t.1 {
                if let Some(v) = self.get(i, j) {
                    m = m.max(v.abs());
                }
            }
        }
        m
    }
}

pub fn willmore_residual(surface: &RotationalSurface) -> Result<ResidualField> {
    let (ns, nt) = (surface.ns(), surface.nt());
    if ns < 5 || nt < 5 {
        return Err(Error::InvalidInput("the residual needs at least 5×5 grid points".into()));
    }
    let (s, t) = (&surface.s_grid, &surface.t_grid);
    let at = |i: usize, j: usize| surface.shape[i * nt + j];
    // flux W^i = √|g| g^{ij} ∂_j H at nodes with a one-cell margin
    let flux: Vec<Option<[f64; 2]>> = (0..ns * nt)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / nt, idx % nt);
            if i == 0 || j == 0 || i + 1 == ns || j + 1 == nt {
                return None;
            }
            let c = at(i, j)?;
            let hs = (at(i + 1, j)?.h - at(i - 1, j)?.h) / (s[i + 1] - s[i - 1]);
            let ht = (at(i, j + 1)?.h - at(i, j - 1)?.h) / (t[j + 1] - t[j - 1]);
            let gi = crate::shape::inverse2(&c.metric);
            let w = c.area_density;
            Some([w * (gi[0][0] * hs + gi[0][1] * ht), w * (gi[1][0] * hs + gi[1][1] * ht)])
        })
        .collect();
    let values = (0..ns * nt)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / nt, idx % nt);
            if i < 2 || j < 2 || i + 2 >= ns || j + 2 >= nt {
                return None;
            }
            let c = at(i, j)?;
            let f = |a: usize, b: usize| flux[a * nt + b];
            let div = (f(i + 1, j)?[0] - f(i - 1, j)?[0]) / (s[i + 1] - s[i - 1])
                + (f(i, j + 1)?[1] - f(i, j - 1)?[1]) / (t[j + 1] - t[j - 1]);
            let lap = div / c.area_density;
            Some(c.eps * lap + c.h * (c.dn2 - 2.0 * c.h2))
        })
        .collect();
    Ok(ResidualField { ns, nt, values })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EquivalenceReport {
    pub sigma: f64,
    pub willmore: f64,
    pub int_kappa: f64,
    pub sum_theta: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
    pub gauss_bonnet: GaussBonnetReport,
}

/// `𝔖 = 4𝔚 − 6∮κ − 2Σθ` on Lorentzian polygons, with an extra `+4π` on
/// Riemannian ones.
pub fn energy_equivalence_check<S: ParametricSurface + ?Sized>(surface: &S, polygon: &NonNullPolygon) -> Result<EquivalenceReport> {
    let gb = gauss_bonnet_residual(surface, polygon)?;
    let sigma = integrate_over(surface, polygon, |d| d.dn2)?;
    let area = integrate_over(surface, polygon, |d| d.h2)?;
    let willmore = area + gb.int_kappa;
    let mut rhs = 4.0 * willmore - 6.0 * gb.int_kappa - 2.0 * gb.sum_theta;
    if !is_lorentzian(surface, polygon.sides[0].curve.start()) {
        rhs += 4.0 * std::f64::consts::PI;
    }
    Ok(EquivalenceReport {
        sigma,
        willmore,
        int_kappa: gb.int_kappa,
        sum_theta: gb.sum_theta,
        lhs: sigma,
        rhs,
        gap: sigma - rhs,
        gauss_bonnet: gb,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReductionReport {
    pub willmore_area_term: f64,
    /// `∮κ ds` over the two orbit circles, Gauss–Bonnet orientation.
    pub willmore_boundary_term: f64,
    /// Area term plus boundary term.
    pub willmore: f64,
    /// Area term minus boundary term: the conformally invariant combination.
    pub conformal_willmore: f64,
    pub profile_term: f64,
    /// `conformal_willmore − profile_term`
    pub gap: f64,
    pub relative_gap: f64,
}

/// Compares the Willmore functional of the surface of revolution about the
/// time-like axis with `(T/4)·∫κ̄² ds` over the profile, `T` the orbit window.
///
/// With the boundary curvature oriented as in the Gauss–Bonnet formula,
/// `∫H² dA − ∮κ ds` is the conformally invariant combination; it is the one
/// that reduces to the profile term.
pub fn a1_reduction_check(profile: &ProfileCurve, nt: usize, t_window: f64) -> Result<ReductionReport> {
    if profile.model.kind != ModelKind::AdsA1 {
        return Err(Error::InvalidInput("the reduction applies to anti de Sitter profiles".into()));
    }
    let s_grid: Vec<f64> = profile.samples.iter().map(|c| c.s).collect();
    let surface = generate_surface(AxisKind::A1, Profile::Sampled(profile.clone()), s_grid, linspace(0.0, t_window, nt))?;
    let w = surface.full_window();
    let (area, excluded) = surface.integrate(w, |d| d.h2)?;
    if excluded > 0.0 {
        return Err(Error::DegenerateSurface);
    }
    let (su, _) = surface.parameter_rectangle(w);
    // meridian sides cancel over a full orbit; only the two orbit circles remain
    let orbit = |s: f64, forward: bool| -> Result<f64> {
        let (a, b) = if forward { ([s, 0.0], [s, t_window]) } else { ([s, t_window], [s, 0.0]) };
        crate::gaussbonnet::geodesic_curvature_integral(&surface, &crate::gaussbonnet::SideCurve::segment(a, b))
    };
    let boundary = orbit(su.1, true)? + orbit(su.0, false)?;
    let profile_term = t_window / 4.0 * total_squared_curvature(profile)?;
    let conformal = area - boundary;
    let gap = conformal - profile_term;
    Ok(ReductionReport {
        willmore_area_term: area,
        willmore_boundary_term: boundary,
        willmore: area + boundary,
        conformal_willmore: conformal,
        profile_term,
        gap,
        relative_gap: gap.abs() / conformal.abs().max(1.0),
    })
}

/// A parameter grid to be written as one OBJ object group.
pub struct ObjGroup<'a> {
    pub name: &'a str,
    pub ns: usize,
    pub nt: usize,
    pub vertices: &'a [V3],
}

/// Writes vertices and quad faces of each grid as a named group.
pub fn write_obj_groups<W: Write>(out: &mut W, groups: &[ObjGroup<'_>]) -> io::Result<()> {
    let mut offset = 1;
    for g in groups {
        writeln!(out, "g {}", g.name)?;
        for v in g.vertices {
            writeln!(out, "v {:.12e} {:.12e} {:.12e}", v[0], v[1], v[2])?;
        }
        if g.nt == 1 {
            for i in 0..g.ns.saturating_sub(1) {
                writeln!(out, "l {} {}", offset + i, offset + i + 1)?;
            }
        }
        for i in 0..g.ns.saturating_sub(1) {
            for j in 0..g.nt.saturating_sub(1) {
                let a = offset + i * g.nt + j;
                writeln!(out, "f {} {} {} {}", a, a + g.nt, a + g.nt + 1, a + 1)?;
            }
        }
        offset += g.vertices.len();
    }
    Ok(())
}

/// Convenience: the induced metric of a rotational surface at `(s, t)`.
pub fn induced_metric(surface: &RotationalSurface, s: f64, t: f64) -> [[f64; 2]; 2] {
    first_form(surface.chart(), &surface.jet(s, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elastica::{integrate_frenet, unit_tangent, ElasticaProfile, FrenetStart, HalfPlaneModel};
    use crate::gaussbonnet::{geodesic_curvature_integral, SideCurve};
    use proptest::prelude::*;

    fn surf(kind: AxisKind, p: Profile, s: (f64, f64), ns: usize, t: (f64, f64), nt: usize) -> RotationalSurface {
        generate_surface(kind, p, linspace(s.0, s.1, ns), linspace(t.0, t.1, nt)).unwrap()
    }

    fn interior_max<F: Fn(&ShapeData) -> f64>(s: &RotationalSurface, f: F) -> f64 {
        let mut m: f64 = 0.0;
        for i in 1..s.ns() - 1 {
            for j in 1..s.nt() - 1 {
                m = m.max(f(&shape_data_at(s, i, j).unwrap()).abs());
            }
        }
        m
    }

    #[test]
    fn plane_vertices_and_energies() {
        let s = surf(AxisKind::A2, Profile::plane(1.5), (0.5, 2.0), 31, (-0.5, 0.5), 21);
        assert!(s.vertices.iter().all(|v| v[0] == 1.5));
        let r = willmore_energy(&s, s.full_window()).unwrap();
        assert!(r.sigma.abs() < 1e-24);
        assert!(r.willmore_area_term.abs() < 1e-24);
        assert!(r.willmore_boundary_term.abs() < 1e-12);
        assert!(r.residual_field_max < 1e-12);
    }

    #[test]
    fn hyperboloid_shape_and_energies() {
        let s = surf(AxisKind::A2, Profile::hyperboloid(), (0.5, 2.0), 151, (-0.5, 0.5), 51);
        for v in &s.vertices {
            assert!((v[0] * v[0] + v[1] * v[1] - v[2] * v[2] - 1.0).abs() < 1e-10);
        }
        let d = shape_data_at(&s, 10, 10).unwrap();
        assert_eq!(d.eps, 1.0);
        assert!((d.h2 - 1.0).abs() < 1e-12 && (d.k - 1.0).abs() < 1e-12 && (d.dn2 - 2.0).abs() < 1e-12);
        let w = s.full_window();
        let (area, _) = s.integrate(w, |_| 1.0).unwrap();
        assert!((sigma_energy(&s, w).unwrap() / area - 2.0).abs() < 1e-4);
        let r = willmore_energy(&s, w).unwrap();
        assert!((r.willmore_area_term - area).abs() < 1e-4 * area);
        assert!(r.residual_field_max < 1e-4, "{r:?}");
    }

    #[test]
    fn cylinder_shape_and_residual() {
        let r = 0.8;
        let s = surf(AxisKind::A1, Profile::cylinder(r), (-1.0, 1.0), 41, (0.0, 1.0), 41);
        for v in &s.vertices {
            assert!((v[1] * v[1] + v[2] * v[2] - r * r).abs() < 1e-12);
        }
        let d = shape_data_at(&s, 5, 5).unwrap();
        assert!((d.h2 - 1.0 / (4.0 * r * r)).abs() < 1e-12);
        assert!(d.k.abs() < 1e-12);
        assert!((d.dn2 - 1.0 / (r * r)).abs() < 1e-12);
        let (area, _) = s.integrate(s.full_window(), |_| 1.0).unwrap();
        assert!((sigma_energy(&s, s.full_window()).unwrap() / area - 1.0 / (r * r)).abs() < 1e-4);
        let res = willmore_residual(&s).unwrap();
        let expect = d.h.abs() / (2.0 * r * r);
        for v in res.values.iter().flatten() {
            assert!(v.abs() > 0.9 * expect);
        }
    }

    #[test]
    fn axis_contact_is_rejected() {
        let r = generate_surface(AxisKind::A2, Profile::hyperboloid(), linspace(-0.5, 0.5, 11), linspace(0.0, 1.0, 5));
        assert!(matches!(r, Err(Error::DegenerateSurface)));
    }

    #[test]
    fn orbit_circles_carry_warping_curvature() {
        // g = g_ss ds² + g_tt dt² with g_st = 0: κ = ∂_s g_tt / (2|g_tt|√|g_ss|)
        for (kind, profile, s0) in [
            (AxisKind::A1, Profile::cylinder(0.7), 0.3),
            (AxisKind::A2, Profile::hyperboloid(), 0.8),
            (AxisKind::A2, Profile::saddle(), 0.6),
        ] {
            let s = surf(kind, profile, (s0 - 0.1, s0 + 0.1), 5, (0.0, 1.0), 5);
            let h = 1e-5;
            let g = |x: f64| induced_metric(&s, x, 0.0);
            let dgtt = (g(s0 + h)[1][1] - g(s0 - h)[1][1]) / (2.0 * h);
            let g0 = g(s0);
            let expect = 2.0 * std::f64::consts::PI * 0.5 * dgtt / (g0[1][1].abs().sqrt() * g0[0][0].abs().sqrt());
            let got = geodesic_curvature_integral(&s, &SideCurve::segment([s0, 0.0], [s0, 2.0 * std::f64::consts::PI])).unwrap();
            assert!((got - expect).abs() < 1e-8, "{kind:?}: {got} vs {expect}");
        }
    }

    #[test]
    fn equivalence_on_hyperboloid_and_hyperbolic_plane() {
        let s = surf(AxisKind::A2, Profile::hyperboloid(), (0.5, 1.0), 5, (-0.3, 0.3), 5);
        let poly = NonNullPolygon::rectangle(&s, (0.6, 0.9), (-0.2, 0.25)).unwrap();
        let r = energy_equivalence_check(&s, &poly).unwrap();
        assert!(r.gap.abs() < 1e-3 * r.sigma.abs().max(1.0), "{r:?}");
        let s = surf(AxisKind::A2, Profile::hyperbolic_plane(), (0.2, 1.0), 5, (-0.3, 0.3), 5);
        let poly = NonNullPolygon::rectangle(&s, (0.3, 0.9), (-0.2, 0.25)).unwrap();
        let r = energy_equivalence_check(&s, &poly).unwrap();
        assert!(!r.gauss_bonnet.lorentzian);
        assert!(r.gap.abs() < 1e-3 * r.sigma.abs().max(1.0), "{r:?}");
    }

    #[test]
    fn sigma_converges_at_second_order() {
        let e = |n: usize| {
            let s = surf(AxisKind::A2, Profile::saddle(), (0.6, 1.0), n, (-0.4, 0.4), n);
            sigma_energy(&s, s.full_window()).unwrap()
        };
        let (a, b, c) = (e(11), e(21), e(41));
        assert!((c - b).abs() < 0.3 * (b - a).abs(), "{a} {b} {c}");
    }

    fn elastica_surface(model: HalfPlaneModel, eps1: f64, c: f64, start: [f64; 2], span: (f64, f64)) -> RotationalSurface {
        let prof = ElasticaProfile::cn(model, eps1, c, 0.0).unwrap();
        let tangent = unit_tangent(&model, start, eps1, 0.3).unwrap();
        let curve = integrate_frenet(model, |s| prof.curvature_at(s), FrenetStart { position: start, tangent }, span, 1e-3).unwrap();
        let s_grid: Vec<f64> = curve.samples.iter().map(|c| c.s).collect();
        generate_surface(model.axis(), Profile::Sampled(curve), s_grid, grid_with_step(0.0, 0.01, 1e-3)).unwrap()
    }

    #[test]
    fn elastica_surfaces_are_willmore() {
        for row in crate::elastica::catalog() {
            let start = [0.2, 1.0];
            let s = elastica_surface(row.model, row.eps1, 1.0, start, (-0.3, 0.3));
            assert!(interior_max(&s, |d| d.gauss_defect()) < 1e-5);
            let res = willmore_residual(&s).unwrap().max_abs();
            assert!(res < 5e-4, "{:?} eps1={}: {res}", row.model.kind, row.eps1);
        }
    }

    #[test]
    fn a1_reduction_for_cn_profile() {
        let model = HalfPlaneModel::plus(ModelKind::AdsA1);
        for eps1 in [1.0, -1.0] {
            let prof = ElasticaProfile::cn(model, eps1, 1.0, 0.0).unwrap();
            let tangent = unit_tangent(&model, [0.0, 1.0], eps1, 0.0).unwrap();
            let curve = integrate_frenet(model, |s| prof.curvature_at(s), FrenetStart { position: [0.0, 1.0], tangent }, (-0.4, 0.4), 1e-3).unwrap();
            let r = a1_reduction_check(&curve, 65, 2.0 * std::f64::consts::PI).unwrap();
            assert!(r.relative_gap < 1e-4, "eps1={eps1} {r:?}");
            // the boundary term does not vanish on these windows
            assert!(r.willmore_boundary_term.abs() > 0.1);
        }
    }

    #[test]
    fn a1_reduction_for_constant_profile() {
        let model = HalfPlaneModel::plus(ModelKind::AdsA1);
        let prof = ElasticaProfile::constant_critical(model, -1.0, true).unwrap();
        let tangent = unit_tangent(&model, [0.0, 1.0], -1.0, 0.0).unwrap();
        let curve = integrate_frenet(model, |s| prof.curvature_at(s), FrenetStart { position: [0.0, 1.0], tangent }, (0.0, 0.5), 1e-3).unwrap();
        let r = a1_reduction_check(&curve, 65, 2.0 * std::f64::consts::PI).unwrap();
        assert!((r.profile_term - std::f64::consts::PI * 0.5).abs() < 1e-9);
        assert!(r.relative_gap < 1e-4, "{r:?}");
    }

    #[test]
    fn obj_has_quads() {
        let s = surf(AxisKind::A2, Profile::plane(1.0), (0.5, 1.0), 3, (0.0, 1.0), 4);
        let mut buf = Vec::new();
        s.write_obj(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 12);
        assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 6);
        assert!(text.contains("f 1 5 6 2"));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn orbit_invariance_and_gauss_identity(a in 0.5f64..1.5, b in -0.5f64..0.5, which in 0usize..3) {
            let (kind, profile) = match which {
                0 => (AxisKind::A1, Profile::analytic(move |s: Jet| [s, s * s * b + Jet::constant(a), Jet::constant(0.0)])),
                1 => (AxisKind::A2, Profile::analytic(move |s: Jet| [s * s * b + Jet::constant(a), Jet::constant(0.0), s])),
                _ => (AxisKind::A3, Profile::analytic(move |s: Jet| [s, s * b + Jet::constant(a), Jet::constant(0.0)])),
            };
            let s = surf(kind, profile, (0.2, 0.6), 9, (-0.5, 0.5), 9);
            for i in 1..s.ns() - 1 {
                let base = shape_data_at(&s, i, 1).unwrap();
                for j in 1..s.nt() - 1 {
                    let d = shape_data_at(&s, i, j).unwrap();
                    prop_assert!((d.h2 - base.h2).abs() < 1e-8);
                    prop_assert!((d.k - base.k).abs() < 1e-8);
                    prop_assert!((d.dn2 - base.dn2).abs() < 1e-8);
                    prop_assert!(d.gauss_defect().abs() < 1e-5);
                    let jet = s.jet(s.s_grid[i], s.t_grid[j]);
                    prop_assert!(s.chart().dot(&d.normal, &jet.xu).abs() < 1e-6);
                    prop_assert!(s.chart().dot(&d.normal, &jet.xv).abs() < 1e-6);
                }
            }
        }
    }
}
