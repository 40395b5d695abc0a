//! Quadrature kernels: composite Gauss-Legendre, tanh-sinh for endpoint
//! singularities, and tensor-product Gaussian expectations.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 2);
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-based initial guess.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            // Evaluate P_n and its derivative by upward recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        // Recompute for the weight.
        let mut p0 = 1.0;
        let mut p1 = x;
        for k in 2..=n {
            let kf = k as f64;
            let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Composite Gauss-Legendre integral of `f` over `[a, b]` with `panels`
/// uniform panels of the given order.
pub fn integrate_gl<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    panels: usize,
    order: usize,
) -> f64 {
    let (nodes, weights) = gauss_legendre(order);
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        let half = 0.5 * h;
        let mut acc = 0.0;
        for (x, w) in nodes.iter().zip(&weights) {
            acc += w * f(mid + half * x);
        }
        total += acc * half;
    }
    total
}

/// Tanh-sinh (double-exponential) integration of `f` over `(a, b)`.
///
/// The integrand is called as `f(s, b - s)` with both `s - a` folded into `s`
/// and the distance to the upper endpoint passed explicitly, each computed
/// without cancellation, so integrable endpoint singularities like
/// `(b-s)^(-beta)` or `(s-a)^(beta-1)` are evaluated accurately.
///
/// Levels are doubled until two successive estimates agree within `tol`.
pub fn tanh_sinh<F: Fn(f64, f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if tol <= 0.0 {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    if b <= a {
        return Ok(0.0);
    }
    let half = 0.5 * (b - a);
    let center = a + half;

    // Contribution of the node at parameter u (symmetric pair).
    // x(u) = tanh((pi/2) sinh u); dist to +-1 computed via exp to avoid
    // cancellation: 1 - tanh(y) = 2 e^{-2y} / (1 + e^{-2y}).
    let eval_pair = |u: f64| -> f64 {
        let y = 0.5 * PI * u.sinh();
        let e = (-2.0 * y).exp();
        let one_minus_x = 2.0 * e / (1.0 + e); // 1 - tanh(y), exact for y >= 0
        let x = 1.0 - one_minus_x;
        let dxdu = 0.5 * PI * u.cosh() * (one_minus_x * (1.0 + x)); // sech^2(y) = (1-x)(1+x)
        if dxdu == 0.0 || !dxdu.is_finite() {
            return 0.0;
        }
        // Right node: s = center + half*x, b - s = half*(1-x).
        let s_r = center + half * x;
        let w_r = half * one_minus_x;
        // Left node: s = center - half*x = a + half*(1-x), b - s = half*(1+x).
        let s_l = a + half * one_minus_x;
        let w_l = half * (1.0 + x);
        let mut acc = 0.0;
        if w_r > 0.0 && s_r < b {
            acc += f(s_r, w_r) * dxdu;
        }
        if s_l > a {
            acc += f(s_l, w_l) * dxdu;
        }
        acc * half
    };

    let u_max = 4.0; // tanh((pi/2) sinh 4) is within 1e-37 of 1
    let mut h = 1.0;
    // u = 0 node plus the level-0 grid.
    let mut sum = f(center, half) * (0.5 * PI) * half;
    let mut k = 1;
    while (k as f64) * h <= u_max {
        sum += eval_pair(k as f64 * h);
        k += 1;
    }
    let mut prev = sum * h;

    for _level in 0..12 {
        h *= 0.5;
        // Add the new odd-multiples-of-h nodes.
        let mut k = 1;
        while (k as f64) * h <= u_max {
            sum += eval_pair(k as f64 * h);
            k += 2;
        }
        let cur = sum * h;
        if (cur - prev).abs() <= tol * (1.0 + cur.abs()) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::QuadratureFailure {
        tol,
        best: f64::NAN,
    })
}

/// Cached nodes for d-dimensional Gaussian expectations
/// `E[f(x + scale * Z)]`, `Z` standard normal.
pub struct GaussianExpectation {
    nodes: Vec<f64>,
    /// Weights with the normal density folded in; sums to 1 up to ~1e-16.
    weights: Vec<f64>,
}

impl GaussianExpectation {
    /// Rule integrating smooth bounded integrands to ~1e-12: composite GL on
    /// `[-8.5, 8.5]` standard deviations.
    pub fn new() -> Self {
        Self::with_resolution(17, 12)
    }

    pub fn with_resolution(panels: usize, order: usize) -> Self {
        let (gl_nodes, gl_weights) = gauss_legendre(order);
        let (a, b) = (-8.5f64, 8.5);
        let h = (b - a) / panels as f64;
        let mut nodes = Vec::with_capacity(panels * order);
        let mut weights = Vec::with_capacity(panels * order);
        let norm = 1.0 / (2.0 * PI).sqrt();
        for p in 0..panels {
            let lo = a + p as f64 * h;
            let mid = lo + 0.5 * h;
            let half = 0.5 * h;
            for (x, w) in gl_nodes.iter().zip(&gl_weights) {
                let z = mid + half * x;
                nodes.push(z);
                weights.push(w * half * norm * (-0.5 * z * z).exp());
            }
        }
        GaussianExpectation { nodes, weights }
    }

    /// `E[f(x + scale * Z)]` with `Z` standard normal in `d = x.len()`
    /// dimensions, by tensor product. Intended for `d <= 3`.
    pub fn expect<F: FnMut(&[f64]) -> f64>(&self, x: &[f64], scale: f64, mut f: F) -> f64 {
        let d = x.len();
        match d {
            1 => {
                let mut acc = 0.0;
                let mut pt = [0.0f64; 1];
                for (z, w) in self.nodes.iter().zip(&self.weights) {
                    pt[0] = x[0] + scale * z;
                    acc += w * f(&pt);
                }
                acc
            }
            2 => {
                let mut acc = 0.0;
                let mut pt = [0.0f64; 2];
                for (z0, w0) in self.nodes.iter().zip(&self.weights) {
                    pt[0] = x[0] + scale * z0;
                    let mut inner = 0.0;
                    for (z1, w1) in self.nodes.iter().zip(&self.weights) {
                        pt[1] = x[1] + scale * z1;
                        inner += w1 * f(&pt);
                    }
                    acc += w0 * inner;
                }
                acc
            }
            _ => {
                let mut acc = 0.0;
                let mut pt = vec![0.0f64; d];
                self.tensor_recurse(x, scale, &mut f, &mut pt, 0, 1.0, &mut acc);
                acc
            }
        }
    }

    fn tensor_recurse<F: FnMut(&[f64]) -> f64>(
        &self,
        x: &[f64],
        scale: f64,
        f: &mut F,
        pt: &mut [f64],
        axis: usize,
        w_acc: f64,
        acc: &mut f64,
    ) {
        if axis == x.len() {
            *acc += w_acc * f(pt);
            return;
        }
        for (z, w) in self.nodes.iter().zip(&self.weights) {
            pt[axis] = x[axis] + scale * z;
            self.tensor_recurse(x, scale, f, pt, axis + 1, w_acc * w, acc);
        }
    }
}

impl Default for GaussianExpectation {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn gl_integrates_polynomials_exactly() {
        // order-n GL is exact for degree 2n-1
        let v = integrate_gl(|x| x * x * x * x * x * x, -1.0, 1.0, 1, 8);
        assert_abs_diff_eq!(v, 2.0 / 7.0, epsilon = 1e-14);
    }

    #[test]
    fn gl_composite_smooth() {
        let v = integrate_gl(|x| x.sin(), 0.0, PI, 8, 10);
        assert_abs_diff_eq!(v, 2.0, epsilon = 1e-13);
    }

    #[test]
    fn tanh_sinh_handles_endpoint_singularities() {
        // int_0^1 s^{-1/2} ds = 2, singular at the lower endpoint
        let v = tanh_sinh(|s, _| s.powf(-0.5), 0.0, 1.0, 1e-12).unwrap();
        assert_abs_diff_eq!(v, 2.0, epsilon = 1e-10);
        // int_0^1 (1-s)^{-1/3} ds = 3/2, singular at the upper endpoint
        let v = tanh_sinh(|_, w| w.powf(-1.0 / 3.0), 0.0, 1.0, 1e-12).unwrap();
        assert_abs_diff_eq!(v, 1.5, epsilon = 1e-10);
        // doubly singular Beta integral: B(1/2, 1/2) = pi
        let v = tanh_sinh(|s, w| s.powf(-0.5) * w.powf(-0.5), 0.0, 1.0, 1e-12).unwrap();
        assert_abs_diff_eq!(v, PI, epsilon = 1e-9);
    }

    #[test]
    fn gaussian_expectation_moments() {
        let rule = GaussianExpectation::new();
        let m0 = rule.expect(&[0.0], 1.0, |_| 1.0);
        assert_abs_diff_eq!(m0, 1.0, epsilon = 1e-13);
        let m2 = rule.expect(&[0.0], 1.0, |x| x[0] * x[0]);
        assert_abs_diff_eq!(m2, 1.0, epsilon = 1e-12);
        let m4 = rule.expect(&[0.5], 2.0, |x| x[0]);
        assert_abs_diff_eq!(m4, 0.5, epsilon = 1e-12);
        // 2d: E[(x0 + Z0)(x1 + Z1)] = x0 x1
        let c = rule.expect(&[0.3, -0.7], 1.3, |x| x[0] * x[1]);
        assert_abs_diff_eq!(c, -0.21, epsilon = 1e-11);
    }

    #[test]
    fn gaussian_expectation_of_gaussian_closed_form() {
        // E[phi_a(x + s Z)] = phi_{sqrt(a^2+s^2)}(x) for the 1d density phi
        let rule = GaussianExpectation::new();
        let a: f64 = 0.8;
        let s: f64 = 1.1;
        let x = 0.6;
        let got = rule.expect(&[x], s, |p| {
            (-0.5 * p[0] * p[0] / (a * a)).exp() / (a * (2.0 * PI).sqrt())
        });
        let var = a * a + s * s;
        let want = (-0.5 * x * x / var).exp() / (var.sqrt() * (2.0 * PI).sqrt());
        assert_abs_diff_eq!(got, want, epsilon = 1e-12);
    }
}
