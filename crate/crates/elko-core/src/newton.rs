//! Damped Gauss-Newton least squares with a Levenberg-Marquardt trust
//! parameter and finite-difference Jacobians. Internal: the residual
//! systems here are 5-6 real unknowns, smooth and polynomial, so
//! robustness is preferred over speed.

use alloc::vec;
use alloc::vec::Vec;

use crate::flt;
use crate::linalg::Lu;

pub(crate) const MAX_ITERS: usize = 100;
pub(crate) const FD_STEP: f64 = 1e-7;

fn cost(r: &[f64]) -> f64 {
    0.5 * r.iter().map(|x| x * x).sum::<f64>()
}

pub(crate) fn max_abs(r: &[f64]) -> f64 {
    r.iter().fold(0.0f64, |a, x| a.max(flt::abs(*x)))
}

/// Minimize ||f(x)||^2 from `x0`; returns the final iterate and the
/// max-abs residual there. Never errors: the caller decides whether the
/// residual is good enough and restarts otherwise.
pub(crate) fn least_squares<const N: usize>(
    f: &mut dyn FnMut(&[f64; N]) -> Vec<f64>,
    x0: [f64; N],
    tol: f64,
) -> ([f64; N], f64) {
    let mut x = x0;
    let mut r = f(&x);
    let m = r.len();
    let mut mu = 1e-8;
    for _ in 0..MAX_ITERS {
        if max_abs(&r) <= tol {
            break;
        }
        // forward-difference Jacobian, column-scaled step
        let mut jac = vec![[0.0f64; N]; m];
        for col in 0..N {
            let h = FD_STEP * flt::abs(x[col]).max(1.0);
            let mut xp = x;
            xp[col] += h;
            let rp = f(&xp);
            for row in 0..m {
                jac[row][col] = (rp[row] - r[row]) / h;
            }
        }
        // normal equations JtJ delta = -Jt r with Levenberg damping
        let mut jtj = [[0.0f64; N]; N];
        let mut jtr = [0.0f64; N];
        for row in 0..m {
            for i in 0..N {
                jtr[i] += jac[row][i] * r[row];
                for j in 0..N {
                    jtj[i][j] += jac[row][i] * jac[row][j];
                }
            }
        }
        let base = cost(&r);
        let mut improved = false;
        for _ in 0..25 {
            let mut damped = jtj;
            for i in 0..N {
                damped[i][i] += mu * (1.0 + jtj[i][i]);
            }
            let rhs = core::array::from_fn(|i| -jtr[i]);
            let step = match Lu::new(damped).solve(rhs) {
                Some(s) => s,
                None => {
                    mu *= 10.0;
                    continue;
                }
            };
            let mut xn = x;
            for i in 0..N {
                xn[i] += step[i];
            }
            let rn = f(&xn);
            if cost(&rn) < base {
                x = xn;
                r = rn;
                mu = (mu * 0.3).max(1e-14);
                improved = true;
                break;
            }
            mu *= 10.0;
        }
        if !improved {
            break;
        }
    }
    let res = max_abs(&r);
    (x, res)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_quadratic_system() {
        // x^2 + y^2 = 5, x y = 2 -> (2, 1) among others
        let mut f = |x: &[f64; 2]| vec![x[0] * x[0] + x[1] * x[1] - 5.0, x[0] * x[1] - 2.0];
        let (x, res) = least_squares(&mut f, [1.5, 0.5], 1e-12);
        assert!(res <= 1e-12, "residual {res}");
        assert!((x[0] * x[1] - 2.0).abs() < 1e-10);
    }

    #[test]
    fn overdetermined_consistent() {
        // three conditions, two unknowns, consistent at (1, 2)
        let mut f = |x: &[f64; 2]| {
            vec![
                x[0] - 1.0,
                x[1] - 2.0,
                (x[0] - 1.0) * (x[1] - 2.0),
            ]
        };
        let (_, res) = least_squares(&mut f, [5.0, -3.0], 1e-12);
        assert!(res <= 1e-12);
    }

    #[test]
    fn stalls_gracefully_when_infeasible() {
        // no root: x^2 + 1 = 0 over the reals; must return, not spin
        let mut f = |x: &[f64; 1]| vec![x[0] * x[0] + 1.0];
        let (x, res) = least_squares(&mut f, [3.0], 1e-12);
        assert!(res >= 1.0);
        assert!(x[0].abs() < 1e-2);
    }
}
