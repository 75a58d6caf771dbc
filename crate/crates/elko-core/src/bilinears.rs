//! The five bilinear covariants of a spinor, Fierz-identity residuals,
//! the P/Q aggregates, the Fierz aggregate and flagpole extraction.
//!
//! Components are stored contravariant: `J[mu] = psi^dag gamma0 gamma^mu psi`
//! (and likewise for K and S with raised-index matrices), so they sit
//! directly on the blades `e_mu`, `e_mu e_nu` of the Cl(1,3) kernel with
//! metric diag(1,-1,-1,-1). The scalar pair is
//! `sigma = psi^dag gamma0 psi`, `omega = -psi^dag gamma0 gamma0123 psi`.

use num_complex::Complex64;

use crate::classifier::{self, LounestoClass, ToleranceConfig};
use crate::elko::charge_conjugate;
use crate::flt;
use crate::gamma::{gamma_basis, Spinor};
use crate::linalg::{CMat4, I};
use crate::multivector::Multivector;
use crate::{Error, Result};

/// Relative tolerance on imaginary residues of the raw matrix elements.
pub const IMAG_TOL: f64 = 1e-12;

/// The five bilinear covariants. `s` is ordered (01,02,03,12,13,23).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BilinearSet {
    pub sigma: f64,
    pub omega: f64,
    pub j: [f64; 4],
    pub k: [f64; 4],
    pub s: [f64; 6],
}

impl BilinearSet {
    /// J as a grade-1 multivector.
    pub fn j_mv(&self) -> Multivector {
        Multivector::from_vector(self.j)
    }

    /// K as a grade-1 multivector.
    pub fn k_mv(&self) -> Multivector {
        Multivector::from_vector(self.k)
    }

    /// S as a grade-2 multivector.
    pub fn s_mv(&self) -> Multivector {
        Multivector::from_bivector(self.s)
    }

    /// Minkowski square g(J, J).
    pub fn j_squared(&self) -> f64 {
        self.j_mv().metric_ext(&self.j_mv())
    }

    /// Quadratic scale psi^dag psi = J0 (Weyl-representation identity).
    pub fn scale(&self) -> f64 {
        self.j[0]
    }

    pub fn j_norm(&self) -> f64 {
        flt::sqrt(self.j.iter().map(|x| x * x).sum())
    }

    pub fn k_norm(&self) -> f64 {
        flt::sqrt(self.k.iter().map(|x| x * x).sum())
    }

    pub fn s_norm(&self) -> f64 {
        flt::sqrt(self.s.iter().map(|x| x * x).sum())
    }
}

/// P = sigma + J + gamma0123 omega and Q = S + K gamma0123, plus the
/// complex Fierz aggregate Z stored as (real part, imaginary part).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aggregates {
    pub p: Multivector,
    pub q: Multivector,
    pub z_re: Multivector,
    pub z_im: Multivector,
}

fn quad_form(psi: &Spinor, m: &CMat4) -> Complex64 {
    let v = m.mul_vec(psi.0);
    psi.0.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

fn real_part(
    z: Complex64,
    scale: f64,
    component: &'static str,
) -> Result<f64> {
    if flt::abs(z.im) > IMAG_TOL * scale.max(1e-300) {
        return Err(Error::NonRealBilinear {
            component,
            residue: z.im,
        });
    }
    Ok(z.re)
}

/// All five covariants of `psi`, with the imaginary residue of every raw
/// matrix element checked against `IMAG_TOL * psi^dag psi` and dropped.
pub fn compute_bilinears(psi: &Spinor) -> Result<BilinearSet> {
    let g = gamma_basis();
    let scale = psi.norm_sqr();
    let g0 = g.up(0);
    let sigma = real_part(quad_form(psi, &g0), scale, "sigma")?;
    let omega = real_part(-quad_form(psi, &(g0 * g.gamma0123())), scale, "omega")?;
    let mut j = [0.0; 4];
    let mut k = [0.0; 4];
    let ig0123 = g.gamma0123().scale(I);
    for mu in 0..4 {
        j[mu] = real_part(quad_form(psi, &(g0 * g.up(mu))), scale, "J")?;
        k[mu] = real_part(quad_form(psi, &(g0 * ig0123 * g.up(mu))), scale, "K")?;
    }
    let mut s = [0.0; 6];
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    for (idx, (mu, nu)) in pairs.into_iter().enumerate() {
        let m = (g0 * g.up(mu) * g.up(nu)).scale(I);
        s[idx] = real_part(quad_form(psi, &m), scale, "S")?;
    }
    Ok(BilinearSet {
        sigma,
        omega,
        j,
        k,
        s,
    })
}

/// The four Fierz residuals:
/// r1 = J^2 - omega^2 - sigma^2, r2 = K^2 + J^2, r3 = ||J lcont K||,
/// r4 = ||J ^ K + (omega + sigma gamma0123) S||.
pub fn fierz_residuals(b: &BilinearSet) -> [f64; 4] {
    let j = b.j_mv();
    let k = b.k_mv();
    let s = b.s_mv();
    let j2 = j.metric_ext(&j);
    let k2 = k.metric_ext(&k);
    let r1 = flt::abs(j2 - b.omega * b.omega - b.sigma * b.sigma);
    let r2 = flt::abs(k2 + j2);
    let r3 = j.left_contract(&k).coeff_norm();
    let factor = Multivector::scalar(b.omega) + b.sigma * Multivector::volume();
    let r4 = (j.wedge(&k) + factor.clifford_product(&s)).coeff_norm();
    [r1, r2, r3, r4]
}

/// Residuals of the class relations between P and Q.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PqResidual {
    /// Norm of the difference between the two sides of the class relation.
    pub relation: f64,
    /// ||P^2|| (class 3 only).
    pub p_squared: Option<f64>,
}

fn p_of(b: &BilinearSet) -> Multivector {
    Multivector::scalar(b.sigma) + b.j_mv() + b.omega * Multivector::volume()
}

fn q_of(b: &BilinearSet) -> Multivector {
    b.s_mv() + b.k_mv().clifford_product(&Multivector::volume())
}

/// Check the P/Q relation of the given regular class (1, 2 or 3).
///
/// Class 1: P = -(omega + sigma gamma0123)^{-1} K Q.
/// Class 2: P = gamma0123 K Q / sigma.
/// Class 3: P^2 = 0 and P = Q K / omega (the paper's K Q needs the
/// opposite order or sign under this blade convention).
pub fn pq_residuals(b: &BilinearSet, class: u8) -> Result<PqResidual> {
    let tol = ToleranceConfig::default();
    let scale = b.scale().max(1e-300);
    let p = p_of(b);
    let q = q_of(b);
    let k = b.k_mv();
    match class {
        1 => {
            let denom = b.omega * b.omega + b.sigma * b.sigma;
            if denom <= tol.rel_tol * scale * scale {
                return Err(Error::DivisionDegenerate { class });
            }
            // (omega + sigma e0123)^{-1} = (omega - sigma e0123)/denom
            let inv = (Multivector::scalar(b.omega) - b.sigma * Multivector::volume())
                .scale(1.0 / denom);
            let rhs = -(inv.clifford_product(&k.clifford_product(&q)));
            Ok(PqResidual {
                relation: (p - rhs).coeff_norm(),
                p_squared: None,
            })
        }
        2 => {
            if flt::abs(b.sigma) <= tol.rel_tol * scale {
                return Err(Error::DivisionDegenerate { class });
            }
            let rhs = Multivector::volume()
                .clifford_product(&k.clifford_product(&q))
                .scale(1.0 / b.sigma);
            Ok(PqResidual {
                relation: (p - rhs).coeff_norm(),
                p_squared: None,
            })
        }
        3 => {
            if flt::abs(b.omega) <= tol.rel_tol * scale {
                return Err(Error::DivisionDegenerate { class });
            }
            let rhs = q.clifford_product(&k).scale(1.0 / b.omega);
            Ok(PqResidual {
                relation: (p - rhs).coeff_norm(),
                p_squared: Some(p.clifford_product(&p).coeff_norm()),
            })
        }
        _ => Err(Error::DivisionDegenerate { class }),
    }
}

/// Assemble P, Q and the complex aggregate
/// Z = sigma + J + iS - i gamma0123 K + gamma0123 omega.
pub fn fierz_aggregate(b: &BilinearSet) -> Aggregates {
    let z_re = Multivector::scalar(b.sigma) + b.j_mv() + b.omega * Multivector::volume();
    let z_im = b.s_mv() - Multivector::volume().clifford_product(&b.k_mv());
    Aggregates {
        p: p_of(b),
        q: q_of(b),
        z_re,
        z_im,
    }
}

/// Flagpole data of a class-5 spinor: pole = J/2 (null), flag = S/2.
pub fn flagpole(lambda: &Spinor) -> Result<(Multivector, Multivector)> {
    let b = compute_bilinears(lambda)?;
    let class = classifier::classify(&b, &ToleranceConfig::default());
    if class != LounestoClass::Class5 {
        return Err(Error::NotFlagpole { actual: class });
    }
    Ok((b.j_mv().scale(0.5), b.s_mv().scale(0.5)))
}

/// Split a class-6 (Weyl) spinor into its two Majorana parts
/// psi_+ = (xi + C(xi))/2, psi_- = (xi - C(xi))/2.
pub fn majorana_from_weyl(xi: &Spinor) -> Result<(Spinor, Spinor)> {
    let b = compute_bilinears(xi)?;
    let class = classifier::classify(&b, &ToleranceConfig::default());
    if class != LounestoClass::Class6 {
        return Err(Error::NotWeyl { actual: class });
    }
    let c = charge_conjugate(xi);
    let half = Complex64::new(0.5, 0.0);
    Ok((xi.add(&c).scale(half), xi.sub(&c).scale(half)))
}
