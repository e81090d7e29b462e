//! Bracketing scans and Newton iterations used by solver-backed divisions.

use crate::linalg::solve_dense;
use crate::sampling::linspace;

pub const SCAN_LO: f64 = -10.0;
pub const SCAN_HI: f64 = 10.0;
pub const SCAN_POINTS: usize = 401;

/// All roots of `f` found by a sign-change scan on `[lo, hi]`, each refined
/// to about 1e-13. Grid points where `f` is exactly zero count as roots.
pub fn scan_roots<E>(
    f: impl Fn(f64) -> Result<f64, E>,
    lo: f64,
    hi: f64,
    n: usize,
) -> Result<Vec<f64>, E> {
    let ts = linspace(lo, hi, n);
    let vs: Vec<f64> = ts.iter().map(|&t| f(t)).collect::<Result<_, _>>()?;
    let mut roots = Vec::new();
    for i in 0..n {
        if vs[i] == 0.0 {
            roots.push(ts[i]);
        } else if i + 1 < n && vs[i] * vs[i + 1] < 0.0 {
            roots.push(refine(&f, ts[i], ts[i + 1], vs[i])?);
        }
    }
    Ok(roots)
}

/// Safeguarded Newton inside a sign-changing bracket: a Newton step is taken
/// when it stays inside, otherwise the bracket is bisected.
fn refine<E>(f: &impl Fn(f64) -> Result<f64, E>, mut a: f64, mut b: f64, fa: f64) -> Result<f64, E> {
    let mut sa = fa.signum();
    let mut x = 0.5 * (a + b);
    for _ in 0..200 {
        let fx = f(x)?;
        if fx == 0.0 || (b - a).abs() < 1e-13 * (1.0 + x.abs()) {
            return Ok(x);
        }
        if fx.signum() == sa {
            a = x;
            sa = fx.signum();
        } else {
            b = x;
        }
        let h = 1e-7 * (1.0 + x.abs());
        let d = (f(x + h)? - f(x - h)?) / (2.0 * h);
        let newton = x - fx / d;
        x = if d.is_finite() && d != 0.0 && newton > a && newton < b { newton } else { 0.5 * (a + b) };
    }
    Ok(x)
}

/// Damped Newton for `F(x) = 0` in R^n with a central-difference Jacobian.
/// Returns the iterate once `‖F‖_∞ < tol`.
pub fn newton_nd(f: impl Fn(&[f64]) -> Vec<f64>, x0: &[f64], tol: f64, max_iter: usize) -> Option<Vec<f64>> {
    let n = x0.len();
    let norm = |v: &[f64]| v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut x = x0.to_vec();
    let mut fx = f(&x);
    for _ in 0..max_iter {
        let r = norm(&fx);
        if !r.is_finite() {
            return None;
        }
        if r < tol {
            return Some(x);
        }
        let mut jac = vec![vec![0.0; n]; n];
        for j in 0..n {
            let h = 1e-6 * (1.0 + x[j].abs());
            let (mut xp, mut xm) = (x.clone(), x.clone());
            xp[j] += h;
            xm[j] -= h;
            let (fp, fm) = (f(&xp), f(&xm));
            for i in 0..n {
                jac[i][j] = (fp[i] - fm[i]) / (2.0 * h);
            }
        }
        let rhs: Vec<f64> = fx.iter().map(|v| -v).collect();
        let step = solve_dense(&jac, &rhs)?;
        let mut lambda = 1.0;
        loop {
            let trial: Vec<f64> = x.iter().zip(&step).map(|(a, s)| a + lambda * s).collect();
            let ft = f(&trial);
            if norm(&ft) < r || lambda < 1e-4 {
                x = trial;
                fx = ft;
                break;
            }
            lambda *= 0.5;
        }
    }
    (norm(&fx) < tol).then_some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(v: f64) -> Result<f64, ()> {
        Ok(v)
    }

    #[test]
    fn scan_finds_all_simple_roots() {
        let r = scan_roots(|t| ok(t * t + t), SCAN_LO, SCAN_HI, SCAN_POINTS).unwrap();
        assert_eq!(r, vec![-1.0, 0.0]);
        let r = scan_roots(|t| ok(t.cos()), 0.0, 5.0, 33).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0] - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        assert!(scan_roots(|t| ok(t * t + 1.0), -10.0, 10.0, 401).unwrap().is_empty());
    }

    #[test]
    fn newton_in_three_dimensions() {
        let f = |x: &[f64]| vec![x[0].exp() - 2.0, x[1] + x[0] * x[2], x[2] * x[2] * x[2] - 8.0];
        let x = newton_nd(f, &[0.0, 0.0, 1.0], 1e-12, 100).unwrap();
        assert!((x[0] - 2f64.ln()).abs() < 1e-10);
        assert!((x[2] - 2.0).abs() < 1e-10);
        assert!((x[1] + 2.0 * 2f64.ln()).abs() < 1e-10);
    }
}
