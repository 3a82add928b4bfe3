//! Fifth-order WENO-JS building blocks on a five-cell window
//! `(ū_{j-2}, ū_{j-1}, ū_j, ū_{j+1}, ū_{j+2})`.
//!
//! Everything here is a pure function of its arguments and allocation-free,
//! so it can be called once per interface in the hot loop.

use crate::mapping::{apply_mapping, WeightMap};

/// Linear weights for the left-biased value at `x_{j+1/2}`.
pub const IDEAL_WEIGHTS: [f64; 3] = [0.1, 0.6, 0.3];

/// Small enough that β never saturates on smooth data with high-order
/// critical points.
pub const DEFAULT_EPSILON: f64 = 1e-40;

/// Five consecutive cell averages centered on cell `j`.
pub type Window = [f64; 5];

pub type Triple = [f64; 3];

/// Operand order is chosen so that reversing the window permutes
/// `(β0, β1, β2)` into `(β2, β1, β0)` bit for bit.
#[inline]
pub fn smoothness_indicators(w: &Window) -> Triple {
    let [a, b, c, d, e] = *w;
    let s0 = (a + c) - 2.0 * b;
    let t0 = (a + 3.0 * c) - 4.0 * b;
    let s1 = (b + d) - 2.0 * c;
    let t1 = b - d;
    let s2 = (c + e) - 2.0 * d;
    let t2 = (e + 3.0 * c) - 4.0 * d;
    const Q: f64 = 13.0 / 12.0;
    [
        Q * s0 * s0 + 0.25 * t0 * t0,
        Q * s1 * s1 + 0.25 * t1 * t1,
        Q * s2 * s2 + 0.25 * t2 * t2,
    ]
}

/// Third-order candidate values at `x_{j+1/2}` from the three substencils.
#[inline]
pub fn substencil_values(w: &Window) -> Triple {
    let [a, b, c, d, e] = *w;
    const SIXTH: f64 = 1.0 / 6.0;
    [
        (2.0 * a - 7.0 * b + 11.0 * c) * SIXTH,
        (-b + 5.0 * c + 2.0 * d) * SIXTH,
        (2.0 * c + 5.0 * d - e) * SIXTH,
    ]
}

/// Unnormalized JS weights `α_s = d_s / (ε + β_s)²`.
#[inline]
pub fn js_alphas(beta: &Triple, eps: f64, ideal: &Triple) -> Triple {
    let inv = inverse_squares(beta, eps);
    [ideal[0] * inv[0], ideal[1] * inv[1], ideal[2] * inv[2]]
}

/// `1/(ε + β_s)²`.
#[inline]
pub fn inverse_squares(beta: &Triple, eps: f64) -> Triple {
    let q = [eps + beta[0], eps + beta[1], eps + beta[2]];
    [1.0 / (q[0] * q[0]), 1.0 / (q[1] * q[1]), 1.0 / (q[2] * q[2])]
}

#[inline]
pub fn normalize(alpha: &Triple) -> Triple {
    let r = 1.0 / (alpha[0] + alpha[1] + alpha[2]);
    [alpha[0] * r, alpha[1] * r, alpha[2] * r]
}

#[inline]
pub fn js_weights(beta: &Triple, eps: f64, ideal: &Triple) -> Triple {
    normalize(&js_alphas(beta, eps, ideal))
}

#[inline]
pub fn convex_combine(omega: &Triple, u: &Triple) -> f64 {
    omega[0] * u[0] + omega[1] * u[1] + omega[2] * u[2]
}

/// Everything computed while reconstructing one biased interface value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reconstruction {
    pub value: f64,
    pub beta: Triple,
    /// WENO-JS weights, the input of the mapping.
    pub omega_js: Triple,
    /// Raw mapped values `g_s(ω_s)` before renormalization.
    pub mapped: Triple,
    /// Weights used in the convex combination.
    pub omega: Triple,
    /// Set when every mapped value vanished and the JS weights were used.
    pub fallback: bool,
}

#[inline(always)]
fn detailed_from<W: WeightMap>(beta: Triple, inv: &Triple, u: &Triple, spec: &W) -> Reconstruction {
    let d = IDEAL_WEIGHTS;
    let omega_js = normalize(&[d[0] * inv[0], d[1] * inv[1], d[2] * inv[2]]);
    let mapped = apply_mapping(&omega_js, spec);
    Reconstruction {
        value: convex_combine(&mapped.omega, u),
        beta,
        omega_js,
        mapped: mapped.alpha,
        omega: mapped.omega,
        fallback: mapped.fallback,
    }
}

#[inline]
pub fn reconstruct_left_detailed<W: WeightMap>(w: &Window, spec: &W, eps: f64) -> Reconstruction {
    let beta = smoothness_indicators(w);
    let inv = inverse_squares(&beta, eps);
    detailed_from(beta, &inv, &substencil_values(w), spec)
}

/// Both biased values from one window: `(u⁻_{j+1/2}, u⁺_{j-1/2})`, sharing
/// the smoothness indicators. Bitwise equal to
/// `(reconstruct_left(w), reconstruct_right(w))`.
#[inline]
pub fn reconstruct_pair_detailed<W: WeightMap>(
    w: &Window,
    spec: &W,
    eps: f64,
) -> (Reconstruction, Reconstruction) {
    let beta = smoothness_indicators(w);
    let inv = inverse_squares(&beta, eps);
    let rw = reverse(w);
    let left = detailed_from(beta, &inv, &substencil_values(w), spec);
    let right = detailed_from(
        [beta[2], beta[1], beta[0]],
        &[inv[2], inv[1], inv[0]],
        &substencil_values(&rw),
        spec,
    );
    (left, right)
}

/// Value at `x_{j+1/2}⁻`.
#[inline]
pub fn reconstruct_left<W: WeightMap>(w: &Window, spec: &W, eps: f64) -> f64 {
    reconstruct_left_detailed(w, spec, eps).value
}

#[inline]
pub fn reverse(w: &Window) -> Window {
    [w[4], w[3], w[2], w[1], w[0]]
}

/// Value at `x_{j-1/2}⁺`, the mirror image of [`reconstruct_left`].
#[inline]
pub fn reconstruct_right<W: WeightMap>(w: &Window, spec: &W, eps: f64) -> f64 {
    reconstruct_left(&reverse(w), spec, eps)
}

#[inline]
pub fn reconstruct_right_detailed<W: WeightMap>(w: &Window, spec: &W, eps: f64) -> Reconstruction {
    reconstruct_left_detailed(&reverse(w), spec, eps)
}
