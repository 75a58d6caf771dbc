//! ELKO (dual-helicity, charge-conjugation eigen-) spinors: rest-frame
//! construction, boost, dual, charge conjugation, helicity spinors, the
//! chi operator and the Dirac boost.

use num_complex::Complex64;

use crate::flt;
use crate::gamma::{gamma_basis, pauli, sigma_dot, Spinor};
use crate::linalg::{CMat2, CMat4, I, ONE, ZERO};
use crate::{Error, Result};

/// On-shell momentum: mass m > 0, spatial momentum p, energy derived.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Momentum {
    pub m: f64,
    pub p: [f64; 3],
}

impl Momentum {
    pub fn new(m: f64, p: [f64; 3]) -> Self {
        assert!(m > 0.0 && m.is_finite(), "mass must be positive");
        Self { m, p }
    }

    pub fn rest(m: f64) -> Self {
        Self::new(m, [0.0; 3])
    }

    pub fn p_norm(&self) -> f64 {
        flt::sqrt(self.p.iter().map(|x| x * x).sum())
    }

    pub fn energy(&self) -> f64 {
        flt::sqrt(self.m * self.m + self.p.iter().map(|x| x * x).sum::<f64>())
    }

    /// Unit direction; defaults to +z at rest so the rest-frame helicity
    /// basis is well defined.
    pub fn direction(&self) -> [f64; 3] {
        let n = self.p_norm();
        if n == 0.0 {
            [0.0, 0.0, 1.0]
        } else {
            [self.p[0] / n, self.p[1] / n, self.p[2] / n]
        }
    }
}

/// Conjugacy type under C: self-conjugate (S) or anti self-conjugate (A).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conjugacy {
    S,
    A,
}

impl Conjugacy {
    /// Eigenvalue of C on the constructed spinor: +1 for S, -1 for A.
    pub fn sign(self) -> f64 {
        match self {
            Conjugacy::S => 1.0,
            Conjugacy::A => -1.0,
        }
    }
}

/// Helicity pair (upper half, lower half). The two halves always carry
/// opposite helicity; the label records the lower half's sign second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HelicityPair {
    /// Upper half helicity -, lower half +.
    MinusPlus,
    /// Upper half helicity +, lower half -.
    PlusMinus,
}

impl HelicityPair {
    /// Helicity sign of the lower (right-handed) half.
    pub fn lower_sign(self) -> f64 {
        match self {
            HelicityPair::MinusPlus => 1.0,
            HelicityPair::PlusMinus => -1.0,
        }
    }

    /// Sign of the upper half, which also drives the boost factor.
    pub fn upper_sign(self) -> f64 {
        -self.lower_sign()
    }

    pub fn opposite(self) -> Self {
        match self {
            HelicityPair::MinusPlus => HelicityPair::PlusMinus,
            HelicityPair::PlusMinus => HelicityPair::MinusPlus,
        }
    }
}

/// One of the four ELKO labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElkoLabel {
    pub conjugacy: Conjugacy,
    pub pair: HelicityPair,
}

impl ElkoLabel {
    pub const ALL: [ElkoLabel; 4] = [
        ElkoLabel {
            conjugacy: Conjugacy::S,
            pair: HelicityPair::MinusPlus,
        },
        ElkoLabel {
            conjugacy: Conjugacy::S,
            pair: HelicityPair::PlusMinus,
        },
        ElkoLabel {
            conjugacy: Conjugacy::A,
            pair: HelicityPair::MinusPlus,
        },
        ElkoLabel {
            conjugacy: Conjugacy::A,
            pair: HelicityPair::PlusMinus,
        },
    ];

    /// The label whose spinor enters this label's dual.
    pub fn dual_partner(self) -> Self {
        Self {
            conjugacy: self.conjugacy,
            pair: self.pair.opposite(),
        }
    }
}

/// Wigner's spin-1/2 time-reversal operator Theta, fixed by i Theta = sigma2.
#[derive(Debug, Clone, Copy)]
pub struct WignerOperator;

impl WignerOperator {
    /// Theta = -i sigma2 = [[0, -1], [1, 0]].
    pub fn theta(&self) -> CMat2 {
        CMat2::from_rows([ZERO, -ONE], [ONE, ZERO])
    }

    /// i Theta = sigma2.
    pub fn i_theta(&self) -> CMat2 {
        pauli(2)
    }

    /// Max residual of Theta sigma_k Theta^{-1} + sigma_k* over k = 1,2,3.
    pub fn conjugation_residual(&self) -> f64 {
        let th = self.theta();
        // Theta^{-1} = -Theta
        let th_inv = -th;
        let mut worst = 0.0f64;
        for k in 1..=3 {
            let s = pauli(k);
            worst = worst.max((th * s * th_inv + s.conj()).max_abs());
        }
        worst
    }
}

/// Helicity eigenspinor (sigma . n) phi = sign phi, spherical-angle phase:
/// phi+ = (cos t/2, e^{i f} sin t/2), phi- = (-e^{-i f} sin t/2, cos t/2).
pub fn helicity_spinor(n: [f64; 3], positive: bool) -> Result<[Complex64; 2]> {
    let r = flt::sqrt(n.iter().map(|x| x * x).sum());
    if r < 1e-14 {
        return Err(Error::ZeroDirection);
    }
    let theta = flt::acos((n[2] / r).clamp(-1.0, 1.0));
    let phi = flt::atan2(n[1], n[0]);
    let (ct, st) = (flt::cos(theta / 2.0), flt::sin(theta / 2.0));
    let phase = Complex64::new(flt::cos(phi), flt::sin(phi));
    if positive {
        Ok([Complex64::new(ct, 0.0), phase * st])
    } else {
        Ok([-phase.conj() * st, Complex64::new(ct, 0.0)])
    }
}

/// Rest-frame ELKO: lambda = (s sigma2 [phi^h]*, phi^h) with s = +1 for S,
/// -1 for A and h the lower-half helicity of the pair label.
pub fn elko_rest(label: ElkoLabel, n: [f64; 3]) -> Result<Spinor> {
    let phi = helicity_spinor(n, label.pair.lower_sign() > 0.0)?;
    let s = Complex64::new(label.conjugacy.sign(), 0.0);
    let top = pauli(2).mul_vec([phi[0].conj(), phi[1].conj()]);
    Ok(Spinor::new([s * top[0], s * top[1], phi[0], phi[1]]))
}

/// Scalar boost factor sqrt((E+m)/2m) (1 ∓ ||p||/(E+m)), sign tied to the
/// upper-half helicity of the label.
pub fn elko_boost_factor(mom: &Momentum, label: ElkoLabel) -> f64 {
    let e = mom.energy();
    let m = mom.m;
    flt::sqrt((e + m) / (2.0 * m)) * (1.0 + label.pair.upper_sign() * mom.p_norm() / (e + m))
}

/// Apply the scalar boost to a rest-frame ELKO.
pub fn elko_boost(lambda0: &Spinor, mom: &Momentum, label: ElkoLabel) -> Spinor {
    lambda0.scale(Complex64::new(elko_boost_factor(mom, label), 0.0))
}

/// Rest-frame construction followed by the boost, along mom's direction.
pub fn elko(label: ElkoLabel, mom: &Momentum) -> Result<Spinor> {
    let rest = elko_rest(label, mom.direction())?;
    Ok(elko_boost(&rest, mom, label))
}

/// Charge conjugation via -gamma2 psi*.
pub fn charge_conjugate(psi: &Spinor) -> Spinor {
    let g2 = gamma_basis().up(2);
    let v = g2.mul_vec(psi.conj().0);
    Spinor::new([-v[0], -v[1], -v[2], -v[3]])
}

/// Charge conjugation via the block form [[0, i Theta], [-i Theta, 0]] K.
pub fn charge_conjugate_block(psi: &Spinor) -> Spinor {
    let s2 = WignerOperator.i_theta();
    let c = psi.conj();
    let top = s2.mul_vec([c.0[2], c.0[3]]);
    let bot = (-s2).mul_vec([c.0[0], c.0[1]]);
    Spinor::new([top[0], top[1], bot[0], bot[1]])
}

/// Dual row covector of the label's spinor, built from the opposite-pair
/// partner: dual(lambda_{-,+}) = +i partner^dag gamma0 and
/// dual(lambda_{+,-}) = -i partner^dag gamma0.
///
/// The partner must be a C-eigenspinor of the label's conjugacy type;
/// anything else is a `LabelMismatch`.
pub fn elko_dual(partner: &Spinor, label: ElkoLabel) -> Result<[Complex64; 4]> {
    let scale = flt::sqrt(partner.norm_sqr());
    let expected = partner.scale(Complex64::new(label.conjugacy.sign(), 0.0));
    if charge_conjugate(partner).max_dev(&expected) > 1e-10 * scale.max(1e-300) {
        return Err(Error::LabelMismatch);
    }
    let sign = match label.pair {
        HelicityPair::MinusPlus => I,
        HelicityPair::PlusMinus => -I,
    };
    let g0 = gamma_basis().up(0);
    // row = sign * partner^dag gamma0; component j = sign * sum_i conj(partner_i) g0[i][j]
    let mut row = [ZERO; 4];
    for (j, out) in row.iter_mut().enumerate() {
        for i in 0..4 {
            *out += partner.0[i].conj() * g0.0[i][j];
        }
        *out *= sign;
    }
    Ok(row)
}

/// Pairing of a dual row with a spinor.
pub fn dual_pairing(dual: &[Complex64; 4], lambda: &Spinor) -> Complex64 {
    dual.iter().zip(lambda.0).map(|(d, l)| d * l).sum()
}

/// chi = (E + sigma . p)/m, the operator relating the Weyl halves of an
/// on-shell Dirac spinor: phi_R(p) = chi phi_L(p).
pub fn chi_operator(mom: &Momentum) -> CMat2 {
    let e = mom.energy();
    let sp = sigma_dot(mom.p);
    let mut out = sp;
    out.0[0][0] += Complex64::new(e, 0.0);
    out.0[1][1] += Complex64::new(e, 0.0);
    out.scale(Complex64::new(1.0 / mom.m, 0.0))
}

/// Standard Dirac boost diag(B+, B-) with
/// B± = (E + m ± sigma . p)/sqrt(2m(E+m)).
pub fn dirac_boost_matrix(mom: &Momentum) -> CMat4 {
    let e = mom.energy();
    let m = mom.m;
    let norm = Complex64::new(1.0 / flt::sqrt(2.0 * m * (e + m)), 0.0);
    let sp = sigma_dot(mom.p);
    let em = CMat2::identity().scale(Complex64::new(e + m, 0.0));
    let bp = (em + sp).scale(norm);
    let bm = (em - sp).scale(norm);
    CMat4::from_blocks(bp, CMat2::ZERO, CMat2::ZERO, bm)
}

/// Boost a rest-frame Dirac spinor (equal Weyl halves) to momentum `mom`.
pub fn dirac_boost(psi0: &Spinor, mom: &Momentum) -> Result<Spinor> {
    let (r, l) = (psi0.right(), psi0.left());
    let dev = (0..2).fold(0.0f64, |acc, i| {
        acc.max(flt::hypot((r[i] - l[i]).re, (r[i] - l[i]).im))
    });
    let scale = flt::sqrt(psi0.norm_sqr());
    if dev > 1e-10 * scale.max(1e-300) {
        return Err(Error::OffShell { deviation: dev });
    }
    Ok(Spinor::new(dirac_boost_matrix(mom).mul_vec(psi0.0)))
}
