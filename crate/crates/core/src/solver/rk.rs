//! Three-stage strong-stability-preserving Runge–Kutta in Shu–Osher form.

use crate::error::Result;
use crate::mesh::{CellField1D, CellField2D};

/// Anything whose storage is one flat vector the integrator can combine.
pub trait Conserved: Clone {
    fn values(&self) -> &[f64];
    fn values_mut(&mut self) -> &mut [f64];
}

impl Conserved for CellField1D {
    fn values(&self) -> &[f64] {
        &self.data
    }
    fn values_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }
}

impl Conserved for CellField2D {
    fn values(&self) -> &[f64] {
        &self.data
    }
    fn values_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }
}

impl Conserved for Vec<f64> {
    fn values(&self) -> &[f64] {
        self
    }
    fn values_mut(&mut self) -> &mut [f64] {
        self
    }
}

/// Scratch storage reused across steps.
#[derive(Debug, Clone)]
pub struct RkWorkspace<F> {
    stage: F,
    rhs: Vec<f64>,
}

impl<F: Conserved> RkWorkspace<F> {
    pub fn new(template: &F) -> Self {
        RkWorkspace {
            stage: template.clone(),
            rhs: vec![0.0; template.values().len()],
        }
    }
}

/// Advances `u` by `dt`:
/// `u¹ = uⁿ + Δt L(uⁿ)`,
/// `u² = ¾uⁿ + ¼u¹ + ¼Δt L(u¹)`,
/// `uⁿ⁺¹ = ⅓uⁿ + ⅔u² + ⅔Δt L(u²)`.
///
/// `rhs(state, stage, out)` may update ghost cells of `state` before
/// writing `L(state)` into `out`.
pub fn ssp_rk3_step<F, R>(u: &mut F, dt: f64, ws: &mut RkWorkspace<F>, mut rhs: R) -> Result<()>
where
    F: Conserved,
    R: FnMut(&mut F, usize, &mut [f64]) -> Result<()>,
{
    let RkWorkspace { stage: w, rhs: l } = ws;

    rhs(u, 0, l)?;
    for ((wi, &ui), &li) in w.values_mut().iter_mut().zip(u.values()).zip(l.iter()) {
        *wi = ui + dt * li;
    }

    rhs(w, 1, l)?;
    for ((wi, &ui), &li) in w.values_mut().iter_mut().zip(u.values()).zip(l.iter()) {
        *wi = 0.75 * ui + 0.25 * *wi + 0.25 * dt * li;
    }

    rhs(w, 2, l)?;
    for ((ui, &wi), &li) in u.values_mut().iter_mut().zip(w.values()).zip(l.iter()) {
        *ui = (1.0 / 3.0) * *ui + (2.0 / 3.0) * wi + (2.0 / 3.0) * dt * li;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decay(u: &mut Vec<f64>, _: usize, out: &mut [f64]) -> Result<()> {
        out[0] = -u[0];
        Ok(())
    }

    #[test]
    fn zero_rhs_is_identity() {
        let mut u = vec![1.5, -2.0];
        let mut ws = RkWorkspace::new(&u);
        ssp_rk3_step(&mut u, 0.3, &mut ws, |_, _, out: &mut [f64]| {
            out.fill(0.0);
            Ok(())
        })
        .unwrap();
        assert_eq!(u, vec![1.5, -2.0]);
    }

    #[test]
    fn matches_stability_polynomial() {
        let mut u = vec![1.0];
        let mut ws = RkWorkspace::new(&u);
        ssp_rk3_step(&mut u, 0.1, &mut ws, decay).unwrap();
        let z: f64 = 0.1;
        let poly = 1.0 - z + z * z / 2.0 - z * z * z / 6.0;
        assert!((u[0] - poly).abs() < 1e-15);
        assert!((u[0] - 0.904_833_3).abs() < 1e-7);
    }
}
