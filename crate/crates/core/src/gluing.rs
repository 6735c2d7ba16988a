//! Surfaces invariant under hyperbolic rotations that cross the degenerate
//! planes through the space-like axis: the φ-seed construction, the local
//! gluing conditions and classification of the glued solutions.

use std::io::{self, Write};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::{Expr, Jet, JET_ORDER};
use crate::mink::{AxisKind, RegionLabel};
use crate::surface::{generate_surface, linspace, willmore_residual, write_obj_groups, ObjGroup, Profile, RotationalSurface};

/// A smooth `φ` on `(−δ², δ²)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GluingSeed {
    pub phi: Expr,
    pub delta: f64,
}

impl GluingSeed {
    pub fn new(phi: Expr, delta: f64) -> Result<Self> {
        if !(delta > 0.0) {
            return Err(Error::InvalidInput("delta must be positive".into()));
        }
        Ok(Self { phi, delta })
    }

    pub fn parse(phi: &str, delta: f64) -> Result<Self> {
        Self::new(Expr::parse(phi)?, delta)
    }

    /// `f_α(s) = φ(s²)` as a jet in `s`.
    pub fn f_alpha(&self, s: Jet) -> Jet {
        self.phi.eval_jet(s * s)
    }

    /// `f_β(s) = φ(−s²)` as a jet in `s`.
    pub fn f_beta(&self, s: Jet) -> Jet {
        self.phi.eval_jet(-(s * s))
    }

    /// Checks `(f_α')² < 1` on `samples` points of `(0, s_max]`.
    pub fn check_time_like(&self, s_max: f64, samples: usize) -> Result<()> {
        for s in linspace(0.0, s_max, samples.max(2)) {
            let d = self.f_alpha(Jet::variable(s)).derivative(1);
            if !(d * d < 1.0) {
                return Err(Error::ProfileNotTimeLike(d * d, s));
            }
        }
        Ok(())
    }
}

/// `F(y, z) = φ(z² − y²)` on the band `|z² − y²| < δ²`.
pub fn gluing_function(seed: &GluingSeed, y: f64, z: f64) -> Result<f64> {
    let w = z * z - y * y;
    if w.abs() >= seed.delta * seed.delta {
        return Err(Error::OutsideBand(y, z));
    }
    Ok(seed.phi.eval(w))
}

/// The gluing function assembled from two graph functions.
pub fn gluing_function_branches<A, B>(f_alpha: A, f_beta: B, y: f64, z: f64) -> f64
where
    A: Fn(f64) -> f64,
    B: Fn(f64) -> f64,
{
    let w = z * z - y * y;
    if w >= 0.0 {
        f_alpha(z.signum() * w.sqrt())
    } else {
        f_beta(y.signum() * (-w).sqrt())
    }
}

/// One of the four open light-like rays `{(x₀, σ_y a, σ_z a) : a > 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LightRay {
    pub sign_y: i8,
    pub sign_z: i8,
}

impl LightRay {
    pub const ALL: [LightRay; 4] = [
        LightRay { sign_y: 1, sign_z: 1 },
        LightRay { sign_y: 1, sign_z: -1 },
        LightRay { sign_y: -1, sign_z: 1 },
        LightRay { sign_y: -1, sign_z: -1 },
    ];

    pub fn point(&self, x0: f64, a: f64) -> [f64; 3] {
        [x0, self.sign_y as f64 * a, self.sign_z as f64 * a]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LightLikePatch {
    pub point: [f64; 3],
    pub include_point: bool,
    pub rays: Vec<LightRay>,
}

/// One generated piece with its fundamental region.
#[derive(Debug, Clone)]
pub struct GluedPiece {
    pub region: RegionLabel,
    pub surface: RotationalSurface,
}

#[derive(Debug, Clone)]
pub struct GluedSurface {
    pub seed: GluingSeed,
    pub pieces: Vec<GluedPiece>,
    pub patch: LightLikePatch,
}

/// Builds `Σ_α ∪ Σ_β ∪ B₀` from `α(s) = (φ(s²), 0, s)` and `β(s) = (φ(−s²), s, 0)`
/// with `s` in `±[s0, s1]`; the light-like patch consists of the axis point
/// and all four rays, which makes the union a topological surface.
pub fn build_glued_surface(seed: &GluingSeed, s_range: (f64, f64), ns: usize, t_grid: &[f64]) -> Result<GluedSurface> {
    let (s0, s1) = s_range;
    if !(0.0 < s0 && s0 < s1 && s1 < seed.delta) {
        return Err(Error::InvalidInput(format!("s range must satisfy 0 < s0 < s1 < delta, got ({s0}, {s1})")));
    }
    seed.check_time_like(s1, 4 * ns)?;
    let alpha = {
        let seed = seed.clone();
        Profile::analytic(move |s| [seed.f_alpha(s), Jet::constant(0.0), s])
    };
    let beta = {
        let seed = seed.clone();
        Profile::analytic(move |s| [seed.f_beta(s), s, Jet::constant(0.0)])
    };
    let plus = linspace(s0, s1, ns);
    let minus = linspace(-s1, -s0, ns);
    let t = t_grid.to_vec();
    let pieces = vec![
        GluedPiece { region: RegionLabel::RPlus, surface: generate_surface(AxisKind::A2, alpha.clone(), plus.clone(), t.clone())? },
        GluedPiece { region: RegionLabel::RMinus, surface: generate_surface(AxisKind::A2, alpha, minus.clone(), t.clone())? },
        GluedPiece { region: RegionLabel::QPlus, surface: generate_surface(AxisKind::A2, beta.clone(), plus, t.clone())? },
        GluedPiece { region: RegionLabel::QMinus, surface: generate_surface(AxisKind::A2, beta, minus, t)? },
    ];
    let patch = LightLikePatch {
        point: [seed.phi.eval(0.0), 0.0, 0.0],
        include_point: true,
        rays: LightRay::ALL.to_vec(),
    };
    Ok(GluedSurface { seed: seed.clone(), pieces, patch })
}

impl GluedSurface {
    pub fn vertices(&self) -> impl Iterator<Item = &[f64; 3]> {
        self.pieces.iter().flat_map(|p| p.surface.vertices.iter())
    }

    /// Largest Willmore residual over all pieces.
    pub fn max_willmore_residual(&self) -> Result<f64> {
        let mut m: f64 = 0.0;
        for p in &self.pieces {
            m = m.max(willmore_residual(&p.surface)?.max_abs());
        }
        Ok(m)
    }

    /// Region-tagged OBJ groups plus the light-like rays as polylines.
    pub fn write_obj<W: Write>(&self, out: &mut W, ray_length: f64) -> io::Result<()> {
        let ray_vertices: Vec<Vec<[f64; 3]>> = self
            .patch
            .rays
            .iter()
            .map(|r| linspace(0.0, ray_length, 11).into_iter().map(|a| r.point(self.patch.point[0], a)).collect())
            .collect();
        let names: Vec<String> = self.pieces.iter().map(|p| p.region.tag().to_string()).collect();
        let mut groups: Vec<ObjGroup<'_>> = self
            .pieces
            .iter()
            .zip(&names)
            .map(|(p, n)| ObjGroup { name: n, ns: p.surface.ns(), nt: p.surface.nt(), vertices: &p.surface.vertices })
            .collect();
        for v in &ray_vertices {
            groups.push(ObjGroup { name: "patch", ns: v.len(), nt: 1, vertices: v });
        }
        write_obj_groups(out, &groups)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GluingReport {
    pub phi0_match: bool,
    /// `f_α'(0) = 0`: α meets the axis perpendicularly.
    pub lg1: bool,
    /// `f_β'(0) = 0`
    pub lg2: bool,
    pub lg3_max_jump: f64,
    pub lg3_order: usize,
    pub lorentzian_along_patch: bool,
    pub passed: bool,
    pub diagnostics: Vec<String>,
}

const PATCH_SAMPLES: usize = 16;

/// Checks the local gluing conditions for the graphs `α = (f_α(s), 0, s)`
/// and `β = (f_β(s), s, 0)` at the axis.
///
/// Near a ray the gluing function is `g(z² − y²)` with
/// `g(w) = f_α(±√w)` for `w ≥ 0` and `f_β(±√−w)` for `w ≤ 0`, so `F` is `C^k`
/// across the cone iff odd Taylor coefficients of `f_α, f_β` up to `2k − 1`
/// vanish and `j!·(a_{2j} − (−1)^j b_{2j}) = 0` for `j ≤ k`. Coefficients come
/// from exact jets at `s = 0`.
pub fn check_local_gluing(f_alpha: &Expr, f_beta: &Expr, order: usize, tol: f64) -> Result<GluingReport> {
    if 2 * order > JET_ORDER {
        return Err(Error::InvalidInput(format!("gluing order at most {}", JET_ORDER / 2)));
    }
    let a = f_alpha.eval_jet(Jet::variable(0.0)).0;
    let b = f_beta.eval_jet(Jet::variable(0.0)).0;
    if !a.iter().chain(b.iter()).all(|c| c.is_finite()) {
        return Err(Error::InvalidInput("graph functions must be smooth at 0".into()));
    }
    let mut diagnostics = Vec::new();
    let phi0_match = (a[0] - b[0]).abs() <= tol;
    if !phi0_match {
        diagnostics.push(format!("f_alpha(0) = {} differs from f_beta(0) = {}", a[0], b[0]));
        return Ok(GluingReport {
            phi0_match,
            lg1: false,
            lg2: false,
            lg3_max_jump: (a[0] - b[0]).abs(),
            lg3_order: 0,
            lorentzian_along_patch: false,
            passed: false,
            diagnostics,
        });
    }
    let lg1 = a[1].abs() <= tol;
    let lg2 = b[1].abs() <= tol;
    if !lg1 {
        diagnostics.push(format!("alpha is not perpendicular to the axis: f_alpha'(0) = {}", a[1]));
    }
    if !lg2 {
        diagnostics.push(format!("beta is not perpendicular to the axis: f_beta'(0) = {}", b[1]));
    }
    let mut jump: f64 = 0.0;
    let mut fact = 1.0;
    for j in 0..=order {
        if j > 0 {
            fact *= j as f64;
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let d = fact * (a[2 * j] - sign * b[2 * j]).abs();
        if d > tol {
            diagnostics.push(format!("derivative of order {j} jumps by {d:e} across the light cone"));
        }
        jump = jump.max(d);
        if j < order {
            let odd = a[2 * j + 1].abs().max(b[2 * j + 1].abs());
            if odd > tol {
                diagnostics.push(format!("s^{} term makes the order-{} derivative singular on the cone", 2 * j + 1, j + 1));
            }
            jump = jump.max(odd);
        }
    }
    // tangent plane of x = F(y, z) at ray points: spanned by (F_y, 1, 0), (F_z, 0, 1)
    let g1 = a[2];
    let mut lorentzian = true;
    for ray in LightRay::ALL {
        for k in 1..=PATCH_SAMPLES {
            let p = ray.point(0.0, k as f64 / PATCH_SAMPLES as f64);
            let (fy, fz) = (-2.0 * g1 * p[1], 2.0 * g1 * p[2]);
            let det = (fy * fy + 1.0) * (fz * fz - 1.0) - fy * fy * fz * fz;
            // the ray direction (0, σ_y, σ_z) = σ_y e_y + σ_z e_z lies in the plane
            let x_comp = ray.sign_y as f64 * fy + ray.sign_z as f64 * fz;
            if !(det < 0.0) || x_comp.abs() > tol {
                lorentzian = false;
            }
        }
    }
    if !lorentzian {
        diagnostics.push("tangent plane along the light-like patch is not Lorentzian".into());
    }
    let lg3 = jump <= tol;
    Ok(GluingReport {
        phi0_match,
        lg1,
        lg2,
        lg3_max_jump: jump,
        lg3_order: order,
        lorentzian_along_patch: lorentzian,
        passed: lg1 && lg2 && lg3 && lorentzian,
        diagnostics,
    })
}

/// `f_α` and `f_β` of a seed as expressions in `u`.
pub fn seed_graphs(seed: &GluingSeed) -> (Expr, Expr) {
    let u = Expr::Var;
    let sq = Expr::Mul(Box::new(u.clone()), Box::new(u));
    (seed.phi.substitute(&sq), seed.phi.substitute(&Expr::Neg(Box::new(sq))))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum GluedClass {
    PlanePerpToAxis { x: f64 },
    OneSheetHyperboloid { center: f64, radius: f64 },
    NotASolution,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Classification {
    pub class: GluedClass,
    pub plane_fit_residual: f64,
    pub hyperboloid_fit_residual: f64,
    pub max_willmore_residual: f64,
}

/// Least-squares fits of `x ≡ A` and `(x − A)² + y² − z² = ρ²` over all
/// vertices; residuals are RMS values relative to the size of the surface.
pub fn classify_glued_solution(surface: &GluedSurface, tol: f64) -> Result<Classification> {
    let pts: Vec<[f64; 3]> = surface.vertices().copied().collect();
    let n = pts.len() as f64;
    let scale = pts.iter().map(|p| p.iter().map(|c| c * c).sum::<f64>().sqrt()).fold(0.0, f64::max).max(1e-300);
    let mean_x = pts.iter().map(|p| p[0]).sum::<f64>() / n;
    let plane_res = (pts.iter().map(|p| (p[0] - mean_x).powi(2)).sum::<f64>() / n).sqrt() / scale;

    // q = x² + y² − z² = a·x + c with a = 2A, c = ρ² − A²
    let q = |p: &[f64; 3]| p[0] * p[0] + p[1] * p[1] - p[2] * p[2];
    let (sx, sxx) = pts.iter().fold((0.0, 0.0), |(s, ss), p| (s + p[0], ss + p[0] * p[0]));
    let (sq, sxq) = pts.iter().fold((0.0, 0.0), |(s, sx), p| (s + q(p), sx + p[0] * q(p)));
    let det = n * sxx - sx * sx;
    let (a, c) = if det.abs() > 1e-12 * n * sxx.max(1.0) {
        ((n * sxq - sx * sq) / det, (sxx * sq - sx * sxq) / det)
    } else {
        (0.0, sq / n)
    };
    let center = a / 2.0;
    let rho2 = c + center * center;
    let hyp_res = (pts.iter().map(|p| (q(p) - a * p[0] - c).powi(2)).sum::<f64>() / n).sqrt() / (scale * scale);
    let max_res = surface.max_willmore_residual()?;
    let class = if plane_res < tol {
        GluedClass::PlanePerpToAxis { x: mean_x }
    } else if hyp_res < tol && rho2 > 0.0 {
        GluedClass::OneSheetHyperboloid { center, radius: rho2.sqrt() }
    } else {
        GluedClass::NotASolution
    };
    Ok(Classification { class, plane_fit_residual: plane_res, hyperboloid_fit_residual: hyp_res, max_willmore_residual: max_res })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t_grid() -> Vec<f64> {
        linspace(-0.5, 0.5, 11)
    }

    #[test]
    fn saddle_seed() {
        let seed = GluingSeed::parse("-u", 1.0).unwrap();
        let g = build_glued_surface(&seed, (0.05, 0.45), 21, &t_grid()).unwrap();
        for p in g.vertices() {
            assert!((p[0] - (p[1] * p[1] - p[2] * p[2])).abs() < 1e-14);
        }
        let wide = GluingSeed::parse("-u", 2.0).unwrap();
        assert_eq!(gluing_function(&wide, 1.0, 2.0).unwrap(), -3.0);
        assert_eq!(gluing_function(&wide, 0.7, -0.7).unwrap(), 0.0);
        let (fa, fb) = seed_graphs(&seed);
        let r = check_local_gluing(&fa, &fb, 3, 1e-8).unwrap();
        assert!(r.passed && r.lg3_max_jump < 1e-10, "{r:?}");
        let c = classify_glued_solution(&g, 1e-6).unwrap();
        assert_eq!(c.class, GluedClass::NotASolution);
    }

    #[test]
    fn saddle_on_unit_patch_is_not_willmore() {
        let seed = GluingSeed::parse("-u", 1.0).unwrap();
        let g = build_glued_surface(&seed, (0.05, 0.45), 41, &t_grid()).unwrap();
        assert!(g.max_willmore_residual().unwrap() > 0.01);
    }

    #[test]
    fn hyperboloid_seed() {
        let seed = GluingSeed::parse("sqrt(1+u)", 0.9).unwrap();
        let g = build_glued_surface(&seed, (0.05, 0.85), 41, &t_grid()).unwrap();
        for p in g.vertices() {
            assert!((p[0] * p[0] + p[1] * p[1] - p[2] * p[2] - 1.0).abs() < 1e-12);
        }
        assert!((gluing_function(&seed, 0.3, 0.4).unwrap() - 1.07f64.sqrt()).abs() < 1e-15);
        let (fa, fb) = seed_graphs(&seed);
        assert!(check_local_gluing(&fa, &fb, 3, 1e-8).unwrap().passed);
        let c = classify_glued_solution(&g, 1e-6).unwrap();
        match c.class {
            GluedClass::OneSheetHyperboloid { center, radius } => {
                assert!(center.abs() < 1e-8 && (radius - 1.0).abs() < 1e-8);
            }
            other => panic!("{other:?}"),
        }
        assert!(c.max_willmore_residual < 5e-4);
    }

    #[test]
    fn scaled_hyperboloid_and_plane() {
        let seed = GluingSeed::parse("sqrt(4+u)", 1.5).unwrap();
        let g = build_glued_surface(&seed, (0.05, 1.4), 41, &t_grid()).unwrap();
        match classify_glued_solution(&g, 1e-6).unwrap().class {
            GluedClass::OneSheetHyperboloid { radius, .. } => assert!((radius - 2.0).abs() < 1e-8),
            other => panic!("{other:?}"),
        }
        let seed = GluingSeed::parse("1.5", 1.0).unwrap();
        let g = build_glued_surface(&seed, (0.1, 0.9), 21, &t_grid()).unwrap();
        assert!(g.vertices().all(|p| p[0] == 1.5));
        let c = classify_glued_solution(&g, 1e-6).unwrap();
        assert_eq!(c.class, GluedClass::PlanePerpToAxis { x: 1.5 });
        assert!(c.max_willmore_residual < 1e-10);
    }

    #[test]
    fn counterexample_is_not_a_solution() {
        let seed = GluingSeed::parse("u+u^2", 0.6).unwrap();
        let g = build_glued_surface(&seed, (0.05, 0.35), 41, &t_grid()).unwrap();
        let c = classify_glued_solution(&g, 1e-6).unwrap();
        assert_eq!(c.class, GluedClass::NotASolution);
        assert!(c.max_willmore_residual > 5e-4);
    }

    #[test]
    fn local_gluing_failures() {
        let e = |s: &str| Expr::parse(s).unwrap();
        let r = check_local_gluing(&e("u"), &e("u^2"), 3, 1e-8).unwrap();
        assert!(!r.lg1 && !r.passed);
        assert!(r.diagnostics.iter().any(|d| d.contains("perpendicular")));
        let r = check_local_gluing(&e("u^2"), &e("2*u^2"), 1, 1e-8).unwrap();
        assert!(r.lg1 && r.lg2 && !r.passed);
        assert!((r.lg3_max_jump - 3.0).abs() < 1e-12);
        let r = check_local_gluing(&e("1+u^2"), &e("u^2"), 3, 1e-8).unwrap();
        assert!(!r.phi0_match && !r.passed);
    }

    #[test]
    fn steep_seed_is_rejected() {
        let seed = GluingSeed::parse("2*u", 1.0).unwrap();
        assert!(matches!(build_glued_surface(&seed, (0.1, 0.9), 11, &t_grid()), Err(Error::ProfileNotTimeLike(..))));
        let seed = GluingSeed::parse("-u", 1.0).unwrap();
        assert!(matches!(gluing_function(&seed, 0.0, 1.5), Err(Error::OutsideBand(..))));
    }

    #[test]
    fn obj_groups_are_tagged() {
        let seed = GluingSeed::parse("-u", 1.0).unwrap();
        let g = build_glued_surface(&seed, (0.1, 0.4), 5, &linspace(0.0, 1.0, 5)).unwrap();
        let mut buf = Vec::new();
        g.write_obj(&mut buf, 0.5).unwrap();
        let text = String::from_utf8(buf).unwrap();
        for tag in ["g R+", "g R-", "g Q+", "g Q-", "g patch"] {
            assert!(text.contains(tag), "{tag}");
        }
        assert!(text.lines().any(|l| l.starts_with("l ")));
    }

    proptest! {
        #[test]
        fn branches_agree_with_seed(c1 in -0.4f64..0.4, c2 in -0.4f64..0.4, y in -0.6f64..0.6, z in -0.6f64..0.6) {
            let seed = GluingSeed::parse(&format!("1 + ({c1})*u + ({c2})*u^2 + sin(u)^3"), 1.0).unwrap();
            let (fa, fb) = seed_graphs(&seed);
            let direct = gluing_function(&seed, y, z).unwrap();
            let branch = gluing_function_branches(|s| fa.eval(s), |s| fb.eval(s), y, z);
            prop_assert!((direct - branch).abs() < 1e-12);
            let r = check_local_gluing(&fa, &fb, 3, 1e-8).unwrap();
            prop_assert!(r.passed, "{:?}", r);
        }
    }
}
