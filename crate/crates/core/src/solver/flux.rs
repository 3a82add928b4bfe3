//! Global Lax–Friedrichs flux, Euler state conversions and wave speeds.

use crate::error::{Error, Result};
use crate::mesh::CellField2D;

/// `½[f(a) + f(b) − α(b − a)]`.
#[inline]
pub fn lax_friedrichs<F: Fn(f64) -> f64>(a: f64, b: f64, f: F, alpha: f64) -> f64 {
    0.5 * (f(a) + f(b) - alpha * (b - a))
}

/// `max |f'(u)|` for `f(u) = u`.
pub fn advection_wave_speed() -> f64 {
    1.0
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasConstants {
    pub gamma: f64,
}

impl Default for GasConstants {
    fn default() -> Self {
        GasConstants { gamma: 1.4 }
    }
}

impl GasConstants {
    /// `(ρ, u, v, p)` from `(ρ, ρu, ρv, E)`.
    #[inline]
    pub fn primitive(&self, q: &[f64; 4]) -> [f64; 4] {
        let rho = q[0];
        let u = q[1] / rho;
        let v = q[2] / rho;
        let p = (self.gamma - 1.0) * (q[3] - 0.5 * rho * (u * u + v * v));
        [rho, u, v, p]
    }

    #[inline]
    pub fn conserved(&self, w: &[f64; 4]) -> [f64; 4] {
        let [rho, u, v, p] = *w;
        [
            rho,
            rho * u,
            rho * v,
            p / (self.gamma - 1.0) + 0.5 * rho * (u * u + v * v),
        ]
    }

    #[inline]
    pub fn sound_speed(&self, rho: f64, p: f64) -> f64 {
        (self.gamma * p / rho).sqrt()
    }

    /// x-direction physical flux.
    #[inline]
    pub fn flux_x(&self, q: &[f64; 4]) -> [f64; 4] {
        let [rho, u, v, p] = self.primitive(q);
        [rho * u, rho * u * u + p, rho * u * v, u * (q[3] + p)]
    }
}

/// `(α_x, α_y)` = max over interior cells of `|u| + c` and `|v| + c`.
pub fn euler_wave_speeds(field: &CellField2D, gas: &GasConstants) -> Result<(f64, f64)> {
    let (nx, ny) = (field.grid.nx(), field.grid.ny());
    let mut ax: f64 = 0.0;
    let mut ay: f64 = 0.0;
    for j in 0..ny {
        for i in 0..nx {
            let q = [
                field.get(0, i, j),
                field.get(1, i, j),
                field.get(2, i, j),
                field.get(3, i, j),
            ];
            let [rho, u, v, p] = gas.primitive(&q);
            if !(rho > 0.0 && p > 0.0) {
                return Err(Error::state(
                    0,
                    format!("nonphysical state rho={rho}, p={p} in cell ({i}, {j})"),
                ));
            }
            let c = gas.sound_speed(rho, p);
            ax = ax.max(u.abs() + c);
            ay = ay.max(v.abs() + c);
        }
    }
    Ok((ax, ay))
}
