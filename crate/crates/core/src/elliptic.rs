//! Real Jacobi elliptic functions and the complete elliptic integral of the
//! first kind.
//!
//! Everything is parametrized by `m = k^2`. For `0 <= m <= 1` the functions
//! are evaluated by the descending Landen / AGM scheme. Negative parameters
//! go through the imaginary-modulus transformation and `m > 1` through the
//! reciprocal-modulus transformation, so every result is real.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

const AGM_TOL: f64 = 1e-16;
const MAX_AGM_STEPS: usize = 40;

/// `(sn, cn, dn)` for a parameter in `[0, 1]`.
fn sncndn_unit(u: f64, m: f64) -> (f64, f64, f64) {
    if m == 0.0 {
        let (s, c) = u.sin_cos();
        return (s, c, 1.0);
    }
    if m == 1.0 {
        let sech = 1.0 / u.cosh();
        return (u.tanh(), sech, sech);
    }
    let mut a = [0.0; MAX_AGM_STEPS + 1];
    let mut c = [0.0; MAX_AGM_STEPS + 1];
    a[0] = 1.0;
    let mut b = (1.0 - m).sqrt();
    c[0] = m.sqrt();
    let mut n = 0;
    while n < MAX_AGM_STEPS && c[n].abs() > AGM_TOL {
        let an = a[n];
        a[n + 1] = 0.5 * (an + b);
        c[n + 1] = 0.5 * (an - b);
        b = (an * b).sqrt();
        n += 1;
    }
    let mut phi = (1u64 << n) as f64 * a[n] * u;
    for j in (1..=n).rev() {
        phi = 0.5 * (phi + (c[j] / a[j] * phi.sin()).asin());
    }
    let (s, cn) = phi.sin_cos();
    // both terms are non-negative, so no cancellation near the quarter period
    let dn = ((1.0 - m) + m * cn * cn).sqrt();
    (s, cn, dn)
}

/// `(sn, cn, dn)` for any finite real parameter.
pub fn jacobi_sncndn(u: f64, m: f64) -> (f64, f64, f64) {
    if m < 0.0 {
        // sn(u|-μ) = sd(v|μ1)/√(1+μ), cn(u|-μ) = cd(v|μ1), dn(u|-μ) = nd(v|μ1)
        let mu = -m;
        let r = (1.0 + mu).sqrt();
        let (s, c, d) = sncndn_unit(u * r, mu / (1.0 + mu));
        (s / (d * r), c / d, 1.0 / d)
    } else if m > 1.0 {
        // sn(u|m) = sn(u√m|1/m)/√m, cn(u|m) = dn(u√m|1/m), dn(u|m) = cn(u√m|1/m)
        let r = m.sqrt();
        let (s, c, d) = sncndn_unit(u * r, 1.0 / m);
        (s / r, d, c)
    } else {
        sncndn_unit(u, m)
    }
}

pub fn jacobi_sn(u: f64, m: f64) -> f64 {
    jacobi_sncndn(u, m).0
}

pub fn jacobi_cn(u: f64, m: f64) -> f64 {
    jacobi_sncndn(u, m).1
}

pub fn jacobi_dn(u: f64, m: f64) -> f64 {
    jacobi_sncndn(u, m).2
}

/// Arithmetic-geometric mean.
pub fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..MAX_AGM_STEPS {
        if (a - b).abs() <= AGM_TOL * a.abs() {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    0.5 * (a + b)
}

/// Complete elliptic integral of the first kind `K(m)`, defined for `m < 1`.
pub fn complete_k(m: f64) -> Result<f64> {
    if !(m < 1.0) {
        return Err(Error::Divergent(m));
    }
    Ok(FRAC_PI_2 / agm(1.0, (1.0 - m).sqrt()))
}

/// Quarter period of `cn(·|m)` along the real axis, when `cn` has real zeros.
///
/// `cn(·|m)` vanishes on the real line only for `m <= 1`; the zeros sit at
/// odd multiples of `K(m)`. For `m = 1` there are none.
pub fn cn_quarter_period(m: f64) -> Option<f64> {
    if m < 1.0 {
        complete_k(m).ok()
    } else {
        None
    }
}

/// Nearest zero of `cn(·|m)` to `u`, if `cn` has real zeros.
pub fn nearest_cn_zero(u: f64, m: f64) -> Option<f64> {
    let k = cn_quarter_period(m)?;
    let n = ((u / k - 1.0) / 2.0).round();
    Some((2.0 * n + 1.0) * k)
}

/// Real value of `cn(i u | m)` through `cn(i u | m) = 1 / cn(u | 1 - m)`.
///
/// Fails at zeros of `cn(·|1-m)`, reporting the nearest pole.
pub fn cn_imag_arg(u: f64, m: f64) -> Result<f64> {
    let mc = 1.0 - m;
    let c = jacobi_cn(u, mc);
    if c.abs() < 1e-14 {
        let abscissa = nearest_cn_zero(u, mc).unwrap_or(u);
        return Err(Error::Pole { abscissa });
    }
    Ok(1.0 / c)
}


#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use std::f64::consts::PI;

    /// Jacobi system sn' = cn dn, cn' = -sn dn, dn' = -m sn cn by RK4.
    fn ode_oracle(u: f64, m: f64) -> (f64, f64, f64) {
        let steps = ((u.abs() / 1e-3).ceil() as usize).max(1);
        let h = u / steps as f64;
        let f = |y: [f64; 3]| [y[1] * y[2], -y[0] * y[2], -m * y[0] * y[1]];
        let mut y = [0.0, 1.0, 1.0];
        for _ in 0..steps {
            let k1 = f(y);
            let k2 = f([0, 1, 2].map(|i| y[i] + 0.5 * h * k1[i]));
            let k3 = f([0, 1, 2].map(|i| y[i] + 0.5 * h * k2[i]));
            let k4 = f([0, 1, 2].map(|i| y[i] + h * k3[i]));
            y = [0, 1, 2].map(|i| y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]));
        }
        (y[0], y[1], y[2])
    }

    /// Adaptive Simpson on the defining integral of K.
    fn k_quadrature(m: f64) -> f64 {
        fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
            let c = 0.5 * (a + b);
            let (l, r) = (0.5 * (a + c), 0.5 * (c + b));
            let (fl, fr) = (f(l), f(r));
            let left = (c - a) / 6.0 * (fa + 4.0 * fl + fm);
            let right = (b - c) / 6.0 * (fm + 4.0 * fr + fb);
            if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
                left + right + (left + right - whole) / 15.0
            } else {
                simpson(f, a, c, fa, fl, fm, left, tol / 2.0, depth - 1)
                    + simpson(f, c, b, fm, fr, fb, right, tol / 2.0, depth - 1)
            }
        }
        let f = move |t: f64| 1.0 / (1.0 - m * t.sin().powi(2)).sqrt();
        let (a, b) = (0.0, FRAC_PI_2);
        let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        simpson(&f, a, b, fa, fm, fb, whole, 1e-14, 50)
    }

    #[test]
    fn cn_examples() {
        assert_eq!(jacobi_cn(0.0, 0.3), 1.0);
        assert!((jacobi_cn(PI / 3.0, 0.0) - 0.5).abs() < 1e-15);
        // cn(u|1) = sech u
        let sech1 = 1.0 / 1f64.cosh();
        assert!((jacobi_cn(1.0, 1.0) - sech1).abs() < 1e-15);
        assert!((sech1 - 0.648_054_273_7).abs() < 1e-10);
    }

    #[test]
    fn k_examples_against_quadrature() {
        assert_eq!(complete_k(0.0).unwrap(), FRAC_PI_2);
        for (m, frozen) in [(0.5, 1.854_074_677_3), (-1.0, 1.311_028_777_1)] {
            let q = k_quadrature(m);
            let k = complete_k(m).unwrap();
            assert!((k - q).abs() < 1e-12, "m={m}: {k} vs {q}");
            assert!((k - frozen).abs() < 1e-10);
        }
        assert!(matches!(complete_k(1.0), Err(Error::Divergent(_))));
        assert!(matches!(complete_k(1.5), Err(Error::Divergent(_))));
    }

    #[test]
    fn k_is_increasing() {
        let mut prev = complete_k(-5.0).unwrap();
        for i in 1..200 {
            let m = -5.0 + i as f64 * 0.0299;
            let k = complete_k(m).unwrap();
            assert!(k > prev);
            prev = k;
        }
    }

    #[test]
    fn imaginary_argument() {
        assert_eq!(cn_imag_arg(0.0, 0.25).unwrap(), 1.0);
        // cn(i|1) = sech(i) = 1/cos(1)
        let v = cn_imag_arg(1.0, 1.0).unwrap();
        assert!((v - 1.0 / 1f64.cos()).abs() < 1e-14);
        assert!((v - 1.850_815_717_7).abs() < 1e-10);
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..500 {
            let u: f64 = rng.gen_range(-3.0..3.0);
            let m: f64 = rng.gen_range(0.0..1.0);
            if let Ok(v) = cn_imag_arg(u, m) {
                if v.abs() < 1e6 {
                    assert!((v * jacobi_cn(u, 1.0 - m) - 1.0).abs() < 1e-12);
                }
            }
        }
        let k = complete_k(0.75).unwrap();
        match cn_imag_arg(k, 0.25) {
            Err(Error::Pole { abscissa }) => assert!((abscissa - k).abs() < 1e-12),
            other => panic!("expected pole, got {other:?}"),
        }
    }

    /// Series for cn(iu|m) = 1 + u²/2 + (4m - 1)... checked through the ODE of cn
    /// along the imaginary axis: w(u) = cn(iu|m) solves w'' = (1-2m) w + 2 m w^3.
    #[test]
    fn imaginary_argument_matches_its_ode() {
        for m in [0.0, 0.3, 0.8, 1.0] {
            let h = 1e-4;
            let mut w = [1.0, 0.0];
            let rhs = |w: [f64; 2]| [w[1], (1.0 - 2.0 * m) * w[0] + 2.0 * m * w[0].powi(3)];
            let mut u = 0.0;
            while u < 0.6 - 1e-12 {
                let k1 = rhs(w);
                let k2 = rhs([w[0] + 0.5 * h * k1[0], w[1] + 0.5 * h * k1[1]]);
                let k3 = rhs([w[0] + 0.5 * h * k2[0], w[1] + 0.5 * h * k2[1]]);
                let k4 = rhs([w[0] + h * k3[0], w[1] + h * k3[1]]);
                w = [0, 1].map(|i| w[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]));
                u += h;
            }
            let v = cn_imag_arg(0.6, m).unwrap();
            assert!((v - w[0]).abs() < 1e-10, "m={m}: {v} vs {}", w[0]);
        }
    }

    #[test]
    fn pythagorean_identities() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..10_000 {
            let u: f64 = rng.gen_range(-10.0..10.0);
            let m: f64 = rng.gen_range(0.0..=1.0);
            let (s, c, d) = jacobi_sncndn(u, m);
            assert!((s * s + c * c - 1.0).abs() < 1e-10);
            assert!((d * d + m * s * s - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn identities_hold_off_the_unit_interval() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(12);
        for _ in 0..2_000 {
            let u: f64 = rng.gen_range(-4.0..4.0);
            let m: f64 = rng.gen_range(-6.0..6.0);
            let (s, c, d) = jacobi_sncndn(u, m);
            assert!((s * s + c * c - 1.0).abs() < 1e-9, "m={m}");
            assert!((d * d + m * s * s - 1.0).abs() < 1e-9, "m={m}");
        }
    }

    #[test]
    fn periodicity() {
        for m in [0.0, 0.1, 0.5, 0.9, 0.99] {
            let k = complete_k(m).unwrap();
            for i in 0..50 {
                let u = -5.0 + 0.2 * i as f64;
                assert!((jacobi_cn(u + 4.0 * k, m) - jacobi_cn(u, m)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn derivative_identity() {
        let h = 1e-5;
        for m in [-2.0, 0.0, 0.4, 0.95, 1.0, 3.0] {
            for i in 0..40 {
                let u = -4.0 + 0.2 * i as f64;
                let fd = (jacobi_cn(u + h, m) - jacobi_cn(u - h, m)) / (2.0 * h);
                let (s, _, d) = jacobi_sncndn(u, m);
                assert!((fd + s * d).abs() < 1e-6, "m={m} u={u}");
            }
        }
    }

    #[test]
    fn degenerations() {
        for i in 0..=1000 {
            let u = -5.0 + 0.01 * i as f64;
            assert!((jacobi_cn(u, 0.0) - u.cos()).abs() < 1e-10);
            assert!((jacobi_cn(u, 1.0) - 1.0 / u.cosh()).abs() < 1e-10);
            // continuity at the ends of the AGM range
            assert!((jacobi_cn(u, 1e-12) - u.cos()).abs() < 1e-10);
            assert!((jacobi_cn(u, 1.0 - 1e-14) - 1.0 / u.cosh()).abs() < 1e-8);
        }
    }

    #[test]
    fn ode_oracle_agreement() {
        for m in [-3.0, -0.5, 0.0, 0.2, 0.5, 0.8, 0.999, 1.0, 1.7] {
            for i in 0..100 {
                let u = -5.0 + 0.1 * i as f64;
                let (s, c, d) = jacobi_sncndn(u, m);
                let (so, co, d_o) = ode_oracle(u, m);
                assert!((s - so).abs() < 1e-9, "sn m={m} u={u}");
                assert!((c - co).abs() < 1e-9, "cn m={m} u={u}");
                assert!((d - d_o).abs() < 1e-9, "dn m={m} u={u}");
            }
        }
    }
}
