//! Weyl-representation Dirac matrices and real-linear operators on
//! 4-component complex spinors.
//!
//! Antilinear entries (terms multiplied by the conjugation symbol) cannot
//! live in a single complex matrix, so operators are split into a pair
//! (A, B) acting as `psi -> A psi + B conj(psi)`.

use num_complex::Complex64;

use crate::flt;
use crate::linalg::{self, CMat2, CMat4, Lu, I, ONE, ZERO};
use crate::{Error, Result};

/// A 4-component complex spinor (psi1..psi4).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Spinor(pub [Complex64; 4]);

impl Spinor {
    pub const ZERO: Self = Self([ZERO; 4]);

    pub fn new(c: [Complex64; 4]) -> Self {
        Self(c)
    }

    /// Right-handed (upper) Weyl half (psi1, psi2).
    pub fn right(&self) -> [Complex64; 2] {
        [self.0[0], self.0[1]]
    }

    /// Left-handed (lower) Weyl half (psi3, psi4).
    pub fn left(&self) -> [Complex64; 2] {
        [self.0[2], self.0[3]]
    }

    pub fn from_halves(right: [Complex64; 2], left: [Complex64; 2]) -> Self {
        Self([right[0], right[1], left[0], left[1]])
    }

    /// psi^dag psi.
    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn conj(&self) -> Self {
        Self(self.0.map(|c| c.conj()))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self(self.0.map(|c| c * s))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = *self;
        for (o, r) in out.0.iter_mut().zip(rhs.0) {
            *o += r;
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = *self;
        for (o, r) in out.0.iter_mut().zip(rhs.0) {
            *o -= r;
        }
        out
    }

    /// Largest componentwise deviation from `rhs`.
    pub fn max_dev(&self, rhs: &Self) -> f64 {
        self.0
            .iter()
            .zip(rhs.0)
            .fold(0.0, |m, (a, b)| m.max(flt::hypot(a.re - b.re, a.im - b.im)))
    }

    /// psi^dag phi.
    pub fn inner(&self, rhs: &Self) -> Complex64 {
        self.0
            .iter()
            .zip(rhs.0)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

/// Pauli matrix sigma_k, k in 1..=3.
pub fn pauli(k: usize) -> CMat2 {
    match k {
        1 => CMat2::from_rows([ZERO, ONE], [ONE, ZERO]),
        2 => CMat2::from_rows([ZERO, -I], [I, ZERO]),
        3 => CMat2::from_rows([ONE, ZERO], [ZERO, -ONE]),
        _ => panic!("pauli index must be 1..=3"),
    }
}

/// v1 sigma1 + v2 sigma2 + v3 sigma3; Hermitian.
pub fn sigma_dot(v: [f64; 3]) -> CMat2 {
    let mut out = CMat2::ZERO;
    for (k, &vk) in v.iter().enumerate() {
        out = out + pauli(k + 1).scale(Complex64::new(vk, 0.0));
    }
    out
}

/// The Weyl (chiral) representation of the gamma matrices and friends.
#[derive(Debug, Clone)]
pub struct GammaBasis {
    gamma_up: [CMat4; 4],
    gamma5: CMat4,
    gamma0123: CMat4,
}

/// The Weyl-representation basis.
///
/// gamma0 = offdiag(I, I), gamma^k = [[0, -sigma_k], [sigma_k, 0]],
/// lowered indices by gamma_0 = gamma^0, gamma_k = -gamma^k.
pub fn gamma_basis() -> GammaBasis {
    GammaBasis::new()
}

impl GammaBasis {
    pub fn new() -> Self {
        let id = CMat2::identity();
        let g0 = CMat4::from_blocks(CMat2::ZERO, id, id, CMat2::ZERO);
        let mut gamma_up = [g0; 4];
        for k in 1..4 {
            gamma_up[k] = CMat4::from_blocks(CMat2::ZERO, -pauli(k), pauli(k), CMat2::ZERO);
        }
        let gamma5 = CMat4::from_blocks(id, CMat2::ZERO, CMat2::ZERO, -id);
        let gamma0123 = gamma5.scale(I);
        Self {
            gamma_up,
            gamma5,
            gamma0123,
        }
    }

    /// gamma^mu (raised index).
    pub fn up(&self, mu: usize) -> CMat4 {
        self.gamma_up[mu]
    }

    /// gamma_mu (lowered index): gamma_0 = gamma^0, gamma_k = -gamma^k.
    pub fn lo(&self, mu: usize) -> CMat4 {
        if mu == 0 {
            self.gamma_up[0]
        } else {
            -self.gamma_up[mu]
        }
    }

    /// gamma^5 = diag(I, -I).
    pub fn gamma5(&self) -> CMat4 {
        self.gamma5
    }

    /// gamma_0123 = gamma_0 gamma_1 gamma_2 gamma_3 = i gamma^5.
    pub fn gamma0123(&self) -> CMat4 {
        self.gamma0123
    }
}

impl Default for GammaBasis {
    fn default() -> Self {
        Self::new()
    }
}

/// A real-linear operator on spinors: `psi -> A psi + B conj(psi)`.
///
/// Linear terms live in `A`; terms multiplied by the conjugation symbol
/// live in `B`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntilinearOperator {
    pub a: CMat4,
    pub b: CMat4,
}

impl AntilinearOperator {
    pub fn linear(a: CMat4) -> Self {
        Self { a, b: CMat4::ZERO }
    }

    pub fn antilinear(b: CMat4) -> Self {
        Self { a: CMat4::ZERO, b }
    }

    pub fn identity() -> Self {
        Self::linear(CMat4::identity())
    }

    /// Plain complex conjugation, psi -> conj(psi).
    pub fn conjugation() -> Self {
        Self::antilinear(CMat4::identity())
    }

    /// A psi + B conj(psi).
    pub fn apply(&self, psi: &Spinor) -> Spinor {
        let lin = self.a.mul_vec(psi.0);
        let anti = self.b.mul_vec(psi.conj().0);
        let mut out = [ZERO; 4];
        for i in 0..4 {
            out[i] = lin[i] + anti[i];
        }
        Spinor(out)
    }

    /// Composition self after rhs: (self o rhs)(psi) = self(rhs(psi)).
    pub fn compose(&self, rhs: &Self) -> Self {
        Self {
            a: self.a * rhs.a + self.b * rhs.b.conj(),
            b: self.a * rhs.b + self.b * rhs.a.conj(),
        }
    }

    /// The 8x8 real matrix acting on stacked (Re psi, Im psi) coordinates.
    pub fn realify(&self) -> [[f64; 8]; 8] {
        let mut m = [[0.0; 8]; 8];
        for i in 0..4 {
            for j in 0..4 {
                let a = self.a.0[i][j];
                let b = self.b.0[i][j];
                m[i][j] = a.re + b.re;
                m[i][j + 4] = -a.im + b.im;
                m[i + 4][j] = a.im + b.im;
                m[i + 4][j + 4] = a.re - b.re;
            }
        }
        m
    }

    /// Determinant of the realified matrix.
    pub fn real_det(&self) -> f64 {
        Lu::new(self.realify()).det()
    }

    /// Inverse as an antilinear operator, via the realified 8x8 matrix.
    ///
    /// Errors with [`Error::SingularOperator`] when |det| <= 1e-12 * scale^8,
    /// where scale is the largest entry magnitude of (A, B).
    pub fn invert(&self) -> Result<Self> {
        let lu = Lu::new(self.realify());
        let det = lu.det();
        let scale = self.a.max_abs().max(self.b.max_abs()).max(1e-300);
        let mut threshold = 1e-12;
        for _ in 0..8 {
            threshold *= scale;
        }
        if flt::abs(det) <= threshold {
            return Err(Error::SingularOperator {
                det,
                threshold,
            });
        }
        let inv = lu.inverse().ok_or(Error::SingularOperator {
            det,
            threshold,
        })?;
        // Recover (A, B) from the real blocks [[P, Q], [R, S]]:
        // A = ((P + S) + i(R - Q))/2, B = ((P - S) + i(R + Q))/2.
        let mut a = CMat4::ZERO;
        let mut b = CMat4::ZERO;
        for i in 0..4 {
            for j in 0..4 {
                let p = inv[i][j];
                let q = inv[i][j + 4];
                let r = inv[i + 4][j];
                let s = inv[i + 4][j + 4];
                a.0[i][j] = Complex64::new((p + s) / 2.0, (r - q) / 2.0);
                b.0[i][j] = Complex64::new((p - s) / 2.0, (r + q) / 2.0);
            }
        }
        Ok(Self { a, b })
    }
}

pub(crate) fn mat8_mul(a: &[[f64; 8]; 8], b: &[[f64; 8]; 8]) -> [[f64; 8]; 8] {
    linalg::mat_mul(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampler::{rand_spinor, test_rng};

    #[test]
    fn gamma_anticommutators_exact() {
        let g = gamma_basis();
        let eta = [1.0, -1.0, -1.0, -1.0];
        for mu in 0..4 {
            for nu in 0..4 {
                let anti = g.up(mu) * g.up(nu) + g.up(nu) * g.up(mu);
                let expect = if mu == nu {
                    CMat4::identity().scale(Complex64::new(2.0 * eta[mu], 0.0))
                } else {
                    CMat4::ZERO
                };
                assert_eq!(anti, expect, "mu={mu} nu={nu}");
            }
        }
    }

    #[test]
    fn gamma5_block_form() {
        let g = gamma_basis();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i != j {
                    ZERO
                } else if i < 2 {
                    ONE
                } else {
                    -ONE
                };
                assert_eq!(g.gamma5().0[i][j], expect);
            }
        }
    }

    #[test]
    fn gamma0123_is_product_of_lowered_gammas() {
        let g = gamma_basis();
        let prod = g.lo(0) * g.lo(1) * g.lo(2) * g.lo(3);
        assert_eq!(prod, g.gamma0123());
        assert_eq!(g.gamma0123(), g.gamma5().scale(I));
    }

    #[test]
    fn sigma_dot_examples() {
        assert_eq!(sigma_dot([0.0, 0.0, 1.0]), pauli(3));
        assert_eq!(sigma_dot([1.0, 0.0, 0.0]), pauli(1));
        let n = 1.0 / 3.0f64.sqrt();
        let s = sigma_dot([n, n, n]);
        let sq = s * s;
        assert!((sq - CMat2::identity()).max_abs() < 1e-15);
        // Hermitian
        assert!((s - s.adjoint()).max_abs() == 0.0);
    }

    #[test]
    fn apply_examples() {
        let psi = Spinor::new([I, ZERO, ZERO, ZERO]);
        assert_eq!(AntilinearOperator::identity().apply(&psi), psi);
        let conj = AntilinearOperator::conjugation();
        assert_eq!(conj.apply(&psi), Spinor::new([-I, ZERO, ZERO, ZERO]));
        assert_eq!(conj.apply(&conj.apply(&psi)), psi);
    }

    #[test]
    fn realify_examples() {
        let id = AntilinearOperator::identity().realify();
        let conj = AntilinearOperator::conjugation().realify();
        for i in 0..8 {
            for j in 0..8 {
                let expect_id = if i == j { 1.0 } else { 0.0 };
                assert_eq!(id[i][j], expect_id);
                let expect_conj = if i != j {
                    0.0
                } else if i < 4 {
                    1.0
                } else {
                    -1.0
                };
                assert_eq!(conj[i][j], expect_conj);
            }
        }
    }

    #[test]
    fn realify_det_of_linear_op_is_complex_det_squared() {
        // det(realify(A)) = |det A|^2 for a complex-linear operator.
        let mut rng = test_rng(21);
        for _ in 0..20 {
            let mut a = CMat4::ZERO;
            for i in 0..4 {
                for j in 0..4 {
                    a.0[i][j] = crate::sampler::rand_complex(&mut rng);
                }
            }
            // complex determinant by expansion via LU on the realified
            // matrix is what we are testing, so compute det A directly.
            let det_c = cdet4(&a);
            let op = AntilinearOperator::linear(a);
            let det_r = op.real_det();
            assert!(
                (det_r - det_c.norm_sqr()).abs() <= 1e-10 * det_c.norm_sqr().max(1.0),
                "det_r={det_r} |det_c|^2={}",
                det_c.norm_sqr()
            );
        }
    }

    fn cdet4(m: &CMat4) -> Complex64 {
        // cofactor expansion, fine for a test
        fn det3(m: [[Complex64; 3]; 3]) -> Complex64 {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        let mut det = ZERO;
        let mut sign = ONE;
        for col in 0..4 {
            let mut minor = [[ZERO; 3]; 3];
            for i in 1..4 {
                let mut jj = 0;
                for j in 0..4 {
                    if j == col {
                        continue;
                    }
                    minor[i - 1][jj] = m.0[i][j];
                    jj += 1;
                }
            }
            det += sign * m.0[0][col] * det3(minor);
            sign = -sign;
        }
        det
    }

    #[test]
    fn realify_is_homomorphism() {
        let mut rng = test_rng(22);
        for _ in 0..50 {
            let m = crate::sampler::rand_antilinear(&mut rng);
            let n = crate::sampler::rand_antilinear(&mut rng);
            let lhs = m.compose(&n).realify();
            let rhs = mat8_mul(&m.realify(), &n.realify());
            let mut worst = 0.0f64;
            for i in 0..8 {
                for j in 0..8 {
                    worst = worst.max((lhs[i][j] - rhs[i][j]).abs());
                }
            }
            let scale = m.a.max_abs().max(m.b.max_abs()) * n.a.max_abs().max(n.b.max_abs());
            assert!(worst <= 1e-13 * scale.max(1.0));
            // and on a spinor
            let psi = rand_spinor(&mut rng);
            let d = m.apply(&n.apply(&psi)).max_dev(&m.compose(&n).apply(&psi));
            assert!(d <= 1e-13 * scale.max(1.0) * psi.norm_sqr().sqrt());
        }
    }

    #[test]
    fn invert_identity_and_conjugation() {
        let id = AntilinearOperator::identity();
        assert_eq!(id.invert().unwrap(), id);
        let conj = AntilinearOperator::conjugation();
        assert_eq!(conj.invert().unwrap(), conj);
    }

    #[test]
    fn invert_round_trip_random() {
        let mut rng = test_rng(23);
        let mut done = 0;
        while done < 30 {
            let m = crate::sampler::rand_antilinear(&mut rng);
            let inv = match m.invert() {
                Ok(inv) => inv,
                Err(_) => continue,
            };
            for _ in 0..5 {
                let psi = rand_spinor(&mut rng);
                let back = inv.apply(&m.apply(&psi));
                assert!(back.max_dev(&psi) <= 1e-10 * psi.norm_sqr().sqrt().max(1.0));
            }
            done += 1;
        }
    }

    #[test]
    fn invert_rejects_singular() {
        let op = AntilinearOperator::linear(CMat4::ZERO);
        assert!(matches!(op.invert(), Err(Error::SingularOperator { .. })));
    }
}
