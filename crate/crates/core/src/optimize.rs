//! Derivative-free minimization used to refine grid searches over Bloch angles.

use serde::{Deserialize, Serialize};

/// Grid and refinement settings for measurement optimizations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    /// Polar-angle intervals on `[0, π]`; the grid has `theta_steps + 1` polar points.
    pub theta_steps: usize,
    /// Azimuthal points on `[0, 2π)`.
    pub phi_steps: usize,
    /// Simplex iterations after the grid scan.
    pub refine_iters: usize,
    /// Simplex convergence: spread of objective values across vertices.
    pub tol: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            theta_steps: 60,
            phi_steps: 120,
            refine_iters: 200,
            tol: 1e-10,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> crate::Result<()> {
        if self.theta_steps == 0 || self.phi_steps == 0 {
            return Err(crate::Error::arg("grid dimensions must be positive"));
        }
        if !(self.tol > 0.0) {
            return Err(crate::Error::arg("optimizer tolerance must be positive"));
        }
        Ok(())
    }

    pub fn theta_grid(&self) -> impl Iterator<Item = f64> + Clone {
        let g = self.theta_steps;
        (0..=g).map(move |i| std::f64::consts::PI * (i as f64 / g as f64))
    }

    pub fn phi_grid(&self) -> impl Iterator<Item = f64> + Clone {
        let h = self.phi_steps;
        (0..h).map(move |j| std::f64::consts::TAU * j as f64 / h as f64)
    }
}

/// Result of a simplex minimization.
#[derive(Debug, Clone, PartialEq)]
pub struct Minimum {
    pub point: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
}

/// Nelder–Mead simplex minimization with standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
///
/// The initial simplex is `x0` plus `x0 + step_k e_k` for each coordinate.
pub fn nelder_mead<F>(mut f: F, x0: &[f64], step: &[f64], max_iters: usize, tol: f64) -> Minimum
where
    F: FnMut(&[f64]) -> f64,
{
    let n = x0.len();
    assert_eq!(step.len(), n, "one step per coordinate");
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    simplex.push((x0.to_vec(), f(x0)));
    for k in 0..n {
        let mut x = x0.to_vec();
        x[k] += step[k];
        let fx = f(&x);
        simplex.push((x, fx));
    }

    let blend = |a: &[f64], b: &[f64], t: f64| -> Vec<f64> {
        a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect()
    };

    let mut iterations = 0;
    while iterations < max_iters {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        if simplex[n].1 - simplex[0].1 <= tol {
            break;
        }
        iterations += 1;

        let mut centroid = vec![0.0; n];
        for (x, _) in &simplex[..n] {
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c += xi / n as f64;
            }
        }
        let worst = simplex[n].clone();
        let reflected = blend(&centroid, &worst.0, -1.0);
        let fr = f(&reflected);

        if fr < simplex[0].1 {
            let expanded = blend(&centroid, &worst.0, -2.0);
            let fe = f(&expanded);
            simplex[n] = if fe < fr {
                (expanded, fe)
            } else {
                (reflected, fr)
            };
        } else if fr < simplex[n - 1].1 {
            simplex[n] = (reflected, fr);
        } else {
            let (target, ft) = if fr < worst.1 {
                (reflected.clone(), fr)
            } else {
                (worst.0.clone(), worst.1)
            };
            let contracted = blend(&centroid, &target, 0.5);
            let fc = f(&contracted);
            if fc < ft {
                simplex[n] = (contracted, fc);
            } else {
                let best = simplex[0].0.clone();
                for v in simplex.iter_mut().skip(1) {
                    let x = blend(&best, &v.0, 0.5);
                    let fx = f(&x);
                    *v = (x, fx);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (point, value) = simplex.swap_remove(0);
    Minimum {
        point,
        value,
        iterations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimizes_quadratic_bowl() {
        let m = nelder_mead(
            |x| (x[0] - 1.0).powi(2) + 3.0 * (x[1] + 0.5).powi(2),
            &[0.0, 0.0],
            &[0.3, 0.3],
            500,
            1e-14,
        );
        assert!((m.point[0] - 1.0).abs() < 1e-5);
        assert!((m.point[1] + 0.5).abs() < 1e-5);
        assert!(m.value < 1e-12);
    }

    #[test]
    fn rosenbrock_in_four_dimensions() {
        let rosen = |x: &[f64]| {
            x.windows(2)
                .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (1.0 - w[0]).powi(2))
                .sum::<f64>()
        };
        let m = nelder_mead(rosen, &[0.8, 0.8, 0.8, 0.8], &[0.1; 4], 5000, 1e-16);
        assert!(m.value < 1e-8, "value {}", m.value);
    }

    #[test]
    fn respects_iteration_cap() {
        let m = nelder_mead(|x| x[0].abs(), &[5.0], &[0.001], 3, 0.0);
        assert_eq!(m.iterations, 3);
    }

    #[test]
    fn grids_have_expected_points() {
        let cfg = OptimizerConfig::default();
        assert_eq!(cfg.theta_grid().count(), 61);
        assert_eq!(cfg.phi_grid().count(), 120);
        assert_eq!(cfg.theta_grid().last().unwrap(), std::f64::consts::PI);
    }
}
