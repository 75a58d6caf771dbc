//! Small fixed-size complex matrices and a dense real LU, sized for this
//! crate's needs (2x2 and 4x4 complex, up to 8x8 real).

use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::flt;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// 2x2 complex matrix, row major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMat2(pub [[Complex64; 2]; 2]);

/// 4x4 complex matrix, row major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMat4(pub [[Complex64; 4]; 4]);

impl CMat2 {
    pub const ZERO: Self = Self([[ZERO; 2]; 2]);

    pub fn identity() -> Self {
        let mut m = Self::ZERO;
        m.0[0][0] = ONE;
        m.0[1][1] = ONE;
        m
    }

    pub fn from_rows(r0: [Complex64; 2], r1: [Complex64; 2]) -> Self {
        Self([r0, r1])
    }

    pub fn mul_vec(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.0[0][0] * v[0] + self.0[0][1] * v[1],
            self.0[1][0] * v[0] + self.0[1][1] * v[1],
        ]
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[j][i].conj();
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        let mut out = *self;
        for row in &mut out.0 {
            for x in row {
                *x = x.conj();
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = *self;
        for row in &mut out.0 {
            for x in row {
                *x *= s;
            }
        }
        out
    }

    pub fn det(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn max_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for row in &self.0 {
            for x in row {
                m = m.max(flt::hypot(x.re, x.im));
            }
        }
        m
    }
}

impl Mul for CMat2 {
    type Output = CMat2;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    out.0[i][j] += self.0[i][k] * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl Add for CMat2 {
    type Output = CMat2;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] += rhs.0[i][j];
            }
        }
        out
    }
}

impl Sub for CMat2 {
    type Output = CMat2;
    fn sub(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] -= rhs.0[i][j];
            }
        }
        out
    }
}

impl Neg for CMat2 {
    type Output = CMat2;
    fn neg(self) -> Self {
        self.scale(-ONE)
    }
}

impl CMat4 {
    pub const ZERO: Self = Self([[ZERO; 4]; 4]);

    pub fn identity() -> Self {
        let mut m = Self::ZERO;
        for i in 0..4 {
            m.0[i][i] = ONE;
        }
        m
    }

    /// Assemble from 2x2 blocks [[a, b], [c, d]].
    pub fn from_blocks(a: CMat2, b: CMat2, c: CMat2, d: CMat2) -> Self {
        let mut m = Self::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                m.0[i][j] = a.0[i][j];
                m.0[i][j + 2] = b.0[i][j];
                m.0[i + 2][j] = c.0[i][j];
                m.0[i + 2][j + 2] = d.0[i][j];
            }
        }
        m
    }

    pub fn mul_vec(&self, v: [Complex64; 4]) -> [Complex64; 4] {
        let mut out = [ZERO; 4];
        for i in 0..4 {
            for k in 0..4 {
                out[i] += self.0[i][k] * v[k];
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::ZERO;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = self.0[j][i].conj();
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        let mut out = *self;
        for row in &mut out.0 {
            for x in row {
                *x = x.conj();
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = *self;
        for row in &mut out.0 {
            for x in row {
                *x *= s;
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for row in &self.0 {
            for x in row {
                m = m.max(flt::hypot(x.re, x.im));
            }
        }
        m
    }
}

impl Mul for CMat4 {
    type Output = CMat4;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::ZERO;
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    out.0[i][j] += self.0[i][k] * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl Add for CMat4 {
    type Output = CMat4;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] += rhs.0[i][j];
            }
        }
        out
    }
}

impl Sub for CMat4 {
    type Output = CMat4;
    fn sub(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] -= rhs.0[i][j];
            }
        }
        out
    }
}

impl Neg for CMat4 {
    type Output = CMat4;
    fn neg(self) -> Self {
        self.scale(-ONE)
    }
}

/// LU decomposition with partial pivoting of an n x n real matrix, n <= 8.
/// Stores the factors in place; `det` carries the pivot sign.
pub struct Lu<const N: usize> {
    lu: [[f64; N]; N],
    perm: [usize; N],
    det: f64,
}

impl<const N: usize> Lu<N> {
    pub fn new(a: [[f64; N]; N]) -> Self {
        let mut lu = a;
        let mut perm = [0usize; N];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = i;
        }
        let mut det = 1.0;
        for col in 0..N {
            let mut pivot = col;
            let mut best = flt::abs(lu[col][col]);
            for row in col + 1..N {
                let v = flt::abs(lu[row][col]);
                if v > best {
                    best = v;
                    pivot = row;
                }
            }
            if pivot != col {
                lu.swap(pivot, col);
                perm.swap(pivot, col);
                det = -det;
            }
            let d = lu[col][col];
            det *= d;
            if d == 0.0 {
                continue;
            }
            for row in col + 1..N {
                let f = lu[row][col] / d;
                lu[row][col] = f;
                for k in col + 1..N {
                    lu[row][k] -= f * lu[col][k];
                }
            }
        }
        Self { lu, perm, det }
    }

    pub fn det(&self) -> f64 {
        self.det
    }

    pub fn solve(&self, b: [f64; N]) -> Option<[f64; N]> {
        if self.det == 0.0 || !self.det.is_finite() {
            return None;
        }
        let mut x = [0.0; N];
        for i in 0..N {
            x[i] = b[self.perm[i]];
            for k in 0..i {
                x[i] -= self.lu[i][k] * x[k];
            }
        }
        for i in (0..N).rev() {
            for k in i + 1..N {
                x[i] -= self.lu[i][k] * x[k];
            }
            let d = self.lu[i][i];
            if d == 0.0 {
                return None;
            }
            x[i] /= d;
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<[[f64; N]; N]> {
        let mut inv = [[0.0; N]; N];
        for j in 0..N {
            let mut e = [0.0; N];
            e[j] = 1.0;
            let col = self.solve(e)?;
            for i in 0..N {
                inv[i][j] = col[i];
            }
        }
        Some(inv)
    }
}

#[cfg_attr(not(test), allow(dead_code))]
pub fn mat_mul_vec<const N: usize>(a: &[[f64; N]; N], v: &[f64; N]) -> [f64; N] {
    let mut out = [0.0; N];
    for i in 0..N {
        for k in 0..N {
            out[i] += a[i][k] * v[k];
        }
    }
    out
}

pub fn mat_mul<const N: usize>(a: &[[f64; N]; N], b: &[[f64; N]; N]) -> [[f64; N]; N] {
    let mut out = [[0.0; N]; N];
    for i in 0..N {
        for k in 0..N {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..N {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}
