//! Real Clifford algebra Cl(1,3) kernel.
//!
//! A [`Multivector`] stores 16 real coefficients indexed by basis blades.
//! Blade `e_A` is encoded as the bitmask `A` over the four generators
//! `e0..e3` (bit `i` set means `e_i` present), so `e01` is mask `0b0011`
//! and the volume element `e0123` is mask `0b1111`. Blades are oriented by
//! ascending index order: `e01 := e0 e1`.
//!
//! All product signs are derived from one generated table
//! (transposition counting plus metric contraction), never hand-coded.

use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::{Error, Result};

/// Number of basis blades of Cl(1,3).
pub const BLADES: usize = 16;

/// Metric signature diag(+1, -1, -1, -1), fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature;

impl Signature {
    /// Diagonal metric entry for generator `i` (0..4).
    pub const fn metric(i: usize) -> i32 {
        if i == 0 {
            1
        } else {
            -1
        }
    }
}

/// Grade (number of generators) of a blade mask.
pub const fn blade_grade(mask: usize) -> usize {
    (mask as u32).count_ones() as usize
}

/// Sign from reordering the concatenation of blades `a`, `b` into canonical
/// ascending order, counting adjacent transpositions.
const fn reorder_sign(a: usize, b: usize) -> i32 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += ((a & b) as u32).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the Clifford product `e_A e_B = sign * e_{A xor B}`:
/// reordering sign times the metric contraction of repeated generators.
const fn product_sign(a: usize, b: usize) -> i32 {
    let mut s = reorder_sign(a, b);
    let mut i = 0;
    while i < 4 {
        if (a & b) >> i & 1 == 1 {
            s *= Signature::metric(i);
        }
        i += 1;
    }
    s
}

/// Metric extension to a basis blade: g(e_A, e_A) = prod of metric entries.
/// For an orthogonal basis g(e_A, e_B) = 0 when A != B.
const fn blade_metric(mask: usize) -> i32 {
    let mut s = 1;
    let mut i = 0;
    while i < 4 {
        if mask >> i & 1 == 1 {
            s *= Signature::metric(i);
        }
        i += 1;
    }
    s
}

/// Reversion sign (-1)^floor(k/2) for grade k.
const fn reversion_sign(grade: usize) -> i32 {
    if (grade / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Grade involution sign (-1)^k.
const fn involution_sign(grade: usize) -> i32 {
    if grade % 2 == 0 {
        1
    } else {
        -1
    }
}

const fn build_sign_table() -> [[i8; BLADES]; BLADES] {
    let mut t = [[0i8; BLADES]; BLADES];
    let mut a = 0;
    while a < BLADES {
        let mut b = 0;
        while b < BLADES {
            t[a][b] = product_sign(a, b) as i8;
            b += 1;
        }
        a += 1;
    }
    t
}

/// Clifford product sign table, generated at compile time.
const SIGN_TABLE: [[i8; BLADES]; BLADES] = build_sign_table();

/// A real multivector of Cl(1,3), graded 0..=4.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Multivector {
    coeffs: [f64; BLADES],
}

/// Blade masks, in the (01,02,03,12,13,23) order used for bivector storage.
pub const BIVECTOR_MASKS: [usize; 6] = [0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100];

impl Multivector {
    pub const ZERO: Self = Self {
        coeffs: [0.0; BLADES],
    };

    pub fn new(coeffs: [f64; BLADES]) -> Self {
        Self { coeffs }
    }

    pub fn scalar(x: f64) -> Self {
        let mut m = Self::ZERO;
        m.coeffs[0] = x;
        m
    }

    /// Basis blade `e_A` for mask `A`.
    pub fn basis(mask: usize) -> Self {
        let mut m = Self::ZERO;
        m.coeffs[mask] = 1.0;
        m
    }

    /// The unit vector `e_i`, `i` in 0..4.
    pub fn e(i: usize) -> Self {
        Self::basis(1 << i)
    }

    /// The volume element `e0123`.
    pub fn volume() -> Self {
        Self::basis(0b1111)
    }

    /// Grade-1 multivector from components on `e0..e3`.
    pub fn from_vector(v: [f64; 4]) -> Self {
        let mut m = Self::ZERO;
        for (i, x) in v.into_iter().enumerate() {
            m.coeffs[1 << i] = x;
        }
        m
    }

    /// Grade-2 multivector from components in (01,02,03,12,13,23) order.
    pub fn from_bivector(s: [f64; 6]) -> Self {
        let mut m = Self::ZERO;
        for (i, x) in s.into_iter().enumerate() {
            m.coeffs[BIVECTOR_MASKS[i]] = x;
        }
        m
    }

    pub fn coefficients(&self) -> &[f64; BLADES] {
        &self.coeffs
    }

    /// Projection onto the grade-k part. Errors if `k > 4`.
    pub fn grade(&self, k: usize) -> Result<Self> {
        if k > 4 {
            return Err(Error::GradeOutOfRange { grade: k });
        }
        let mut m = Self::ZERO;
        for mask in 0..BLADES {
            if blade_grade(mask) == k {
                m.coeffs[mask] = self.coeffs[mask];
            }
        }
        Ok(m)
    }

    /// Reversion: grade-k part multiplied by (-1)^floor(k/2).
    pub fn reversion(&self) -> Self {
        let mut m = *self;
        for mask in 0..BLADES {
            m.coeffs[mask] *= reversion_sign(blade_grade(mask)) as f64;
        }
        m
    }

    /// Grade involution: grade-k part multiplied by (-1)^k.
    pub fn involution(&self) -> Self {
        let mut m = *self;
        for mask in 0..BLADES {
            m.coeffs[mask] *= involution_sign(blade_grade(mask)) as f64;
        }
        m
    }

    /// Exterior (wedge) product.
    pub fn wedge(&self, rhs: &Self) -> Self {
        let mut out = Self::ZERO;
        for a in 0..BLADES {
            let xa = self.coeffs[a];
            if xa == 0.0 {
                continue;
            }
            for b in 0..BLADES {
                let xb = rhs.coeffs[b];
                if xb == 0.0 || a & b != 0 {
                    continue;
                }
                out.coeffs[a ^ b] += reorder_sign(a, b) as f64 * xa * xb;
            }
        }
        out
    }

    /// Metric extension g(a, b): det of the Gram matrix per matching grade,
    /// zero across grades. On the orthogonal basis this is diagonal per blade.
    pub fn metric_ext(&self, rhs: &Self) -> f64 {
        let mut tot = 0.0;
        for mask in 0..BLADES {
            tot += blade_metric(mask) as f64 * self.coeffs[mask] * rhs.coeffs[mask];
        }
        tot
    }

    /// Left contraction, satisfying g(a lcont b, c) = g(b, rev(a) ^ c).
    ///
    /// On basis blades: nonzero only for A subset of B, landing on `e_{B\A}`.
    pub fn left_contract(&self, rhs: &Self) -> Self {
        let mut out = Self::ZERO;
        for a in 0..BLADES {
            let xa = self.coeffs[a];
            if xa == 0.0 {
                continue;
            }
            for b in 0..BLADES {
                let xb = rhs.coeffs[b];
                if xb == 0.0 || a & b != a {
                    continue;
                }
                let c = b & !a;
                let s = reversion_sign(blade_grade(a)) * reorder_sign(a, c) * blade_metric(b)
                    / blade_metric(c);
                out.coeffs[c] += s as f64 * xa * xb;
            }
        }
        out
    }

    /// Right contraction, satisfying g(a rcont b, c) = g(a, c ^ rev(b)).
    ///
    /// Related to the left contraction by `v lcont a = -invol(a) rcont v`.
    pub fn right_contract(&self, rhs: &Self) -> Self {
        let mut out = Self::ZERO;
        for a in 0..BLADES {
            let xa = self.coeffs[a];
            if xa == 0.0 {
                continue;
            }
            for b in 0..BLADES {
                let xb = rhs.coeffs[b];
                if xb == 0.0 || a & b != b {
                    continue;
                }
                let c = a & !b;
                let s = reversion_sign(blade_grade(b)) * reorder_sign(c, b) * blade_metric(a)
                    / blade_metric(c);
                out.coeffs[c] += s as f64 * xa * xb;
            }
        }
        out
    }

    /// Clifford (geometric) product.
    pub fn clifford_product(&self, rhs: &Self) -> Self {
        let mut out = Self::ZERO;
        for a in 0..BLADES {
            let xa = self.coeffs[a];
            if xa == 0.0 {
                continue;
            }
            for b in 0..BLADES {
                let xb = rhs.coeffs[b];
                if xb == 0.0 {
                    continue;
                }
                out.coeffs[a ^ b] += SIGN_TABLE[a][b] as f64 * xa * xb;
            }
        }
        out
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(crate::flt::abs(*c)))
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coeff_norm(&self) -> f64 {
        crate::flt::sqrt(self.coeffs.iter().map(|c| c * c).sum())
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut m = *self;
        for c in &mut m.coeffs {
            *c *= s;
        }
        m
    }
}

impl Index<usize> for Multivector {
    type Output = f64;
    fn index(&self, mask: usize) -> &f64 {
        &self.coeffs[mask]
    }
}

impl IndexMut<usize> for Multivector {
    fn index_mut(&mut self, mask: usize) -> &mut f64 {
        &mut self.coeffs[mask]
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for (o, r) in out.coeffs.iter_mut().zip(rhs.coeffs) {
            *o += r;
        }
        out
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Self) -> Self {
        let mut out = self;
        for (o, r) in out.coeffs.iter_mut().zip(rhs.coeffs) {
            *o -= r;
        }
        out
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Self) -> Self {
        self.clifford_product(&rhs)
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs.scale(self)
    }
}
