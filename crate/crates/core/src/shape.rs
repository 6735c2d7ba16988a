//! Local extrinsic geometry of parametrized surfaces in a Minkowski chart.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mink::Chart;

pub type V3 = [f64; 3];

/// Relative threshold on `|det g|` below which a tangent plane counts as null.
pub const TAU_DEGENERATE: f64 = 1e-12;

/// Position and partial derivatives up to order two at a parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceJet {
    pub x: V3,
    pub xu: V3,
    pub xv: V3,
    pub xuu: V3,
    pub xuv: V3,
    pub xvv: V3,
}

/// A surface `X(u, v)` in a fixed chart of Minkowski space.
pub trait ParametricSurface: Sync {
    fn chart(&self) -> Chart;

    fn jet(&self, u: f64, v: f64) -> SurfaceJet;

    /// A time-like coordinate direction declared future-pointing. `None` for
    /// Riemannian surfaces.
    fn time_field(&self, u: f64, v: f64) -> Option<[f64; 2]> {
        let g = first_form(self.chart(), &self.jet(u, v));
        if g[0][0] * g[1][1] - g[0][1] * g[0][1] >= 0.0 {
            None
        } else if g[1][1] < 0.0 {
            Some([0.0, 1.0])
        } else if g[0][0] < 0.0 {
            Some([1.0, 0.0])
        } else {
            // both coordinate directions space-like: use the null-free combination
            Some([1.0, -g[0][1].signum()])
        }
    }

    fn metric(&self, u: f64, v: f64) -> [[f64; 2]; 2] {
        first_form(self.chart(), &self.jet(u, v))
    }
}

pub fn first_form(chart: Chart, j: &SurfaceJet) -> [[f64; 2]; 2] {
    let guu = chart.dot(&j.xu, &j.xu);
    let guv = chart.dot(&j.xu, &j.xv);
    let gvv = chart.dot(&j.xv, &j.xv);
    [[guu, guv], [guv, gvv]]
}

pub fn inverse2(g: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    [[g[1][1] / det, -g[0][1] / det], [-g[1][0] / det, g[0][0] / det]]
}

/// Christoffel symbols `Γ^k_ij` of the induced metric, indexed `[k][i][j]`.
pub fn christoffel(chart: Chart, j: &SurfaceJet) -> [[[f64; 2]; 2]; 2] {
    let d = [j.xu, j.xv];
    let dd = [[j.xuu, j.xuv], [j.xuv, j.xvv]];
    let ginv = inverse2(&first_form(chart, j));
    let mut out = [[[0.0; 2]; 2]; 2];
    for a in 0..2 {
        for b in 0..2 {
            let first_kind = [chart.dot(&dd[a][b], &d[0]), chart.dot(&dd[a][b], &d[1])];
            for k in 0..2 {
                out[k][a][b] = ginv[k][0] * first_kind[0] + ginv[k][1] * first_kind[1];
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShapeData {
    pub normal: V3,
    /// `⟨N, N⟩`: +1 on Lorentzian surfaces, −1 on Riemannian ones.
    pub eps: f64,
    /// Mean curvature for the normal `X_u ∧ X_v / |·|`.
    pub h: f64,
    pub h2: f64,
    pub k: f64,
    /// `g^{ij}⟨∂_i N, ∂_j N⟩`
    pub dn2: f64,
    pub metric: [[f64; 2]; 2],
    pub area_density: f64,
}

impl ShapeData {
    /// `‖dN‖² − (4H² − 2εK)`
    pub fn gauss_defect(&self) -> f64 {
        self.dn2 - (4.0 * self.h2 - 2.0 * self.eps * self.k)
    }
}

fn add(a: V3, b: V3) -> V3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn scale(a: V3, s: f64) -> V3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

/// Normal, curvatures and `‖dN‖²` from a second-order jet.
///
/// `‖dN‖²` is obtained from the ambient derivative of `N = n/|n|`,
/// `n = X_u ∧ X_v`, independently of the shape operator.
pub fn shape_from_jet(chart: Chart, j: &SurfaceJet) -> Result<ShapeData> {
    let g = first_form(chart, j);
    let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    let scale_ref = g[0][0].abs().max(g[1][1].abs()).max(g[0][1].abs());
    if !(det.abs() > TAU_DEGENERATE * scale_ref * scale_ref) {
        return Err(Error::DegenerateTangentPlane(0, 0));
    }
    let ginv = inverse2(&g);
    let n = chart.cross(&j.xu, &j.xv);
    let nn = chart.dot(&n, &n);
    let eps = nn.signum();
    let rho = nn.abs().sqrt();
    let normal = scale(n, 1.0 / rho);

    let b = [
        [chart.dot(&j.xuu, &normal), chart.dot(&j.xuv, &normal)],
        [chart.dot(&j.xuv, &normal), chart.dot(&j.xvv, &normal)],
    ];
    // S = g⁻¹ b
    let s = [
        [
            ginv[0][0] * b[0][0] + ginv[0][1] * b[1][0],
            ginv[0][0] * b[0][1] + ginv[0][1] * b[1][1],
        ],
        [
            ginv[1][0] * b[0][0] + ginv[1][1] * b[1][0],
            ginv[1][0] * b[0][1] + ginv[1][1] * b[1][1],
        ],
    ];
    let h = 0.5 * (s[0][0] + s[1][1]);
    let det_s = s[0][0] * s[1][1] - s[0][1] * s[1][0];
    let k = eps * det_s;

    let nu = add(chart.cross(&j.xuu, &j.xv), chart.cross(&j.xu, &j.xuv));
    let nv = add(chart.cross(&j.xuv, &j.xv), chart.cross(&j.xu, &j.xvv));
    let dn = |ni: V3| {
        let rho_i = eps * chart.dot(&ni, &n) / rho;
        add(scale(ni, 1.0 / rho), scale(n, -rho_i / (rho * rho)))
    };
    let (du, dv) = (dn(nu), dn(nv));
    let dn2 = ginv[0][0] * chart.dot(&du, &du)
        + 2.0 * ginv[0][1] * chart.dot(&du, &dv)
        + ginv[1][1] * chart.dot(&dv, &dv);

    Ok(ShapeData { normal, eps, h, h2: h * h, k, dn2, metric: g, area_density: det.abs().sqrt() })
}
