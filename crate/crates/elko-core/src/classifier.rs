//! Lounesto classification of a spinor from its bilinear covariants.

use core::fmt;

use crate::bilinears::BilinearSet;

/// The six Lounesto classes plus the degenerate bucket (J below tolerance,
/// or all covariants below tolerance). Classes 1-3 are regular
/// (sigma != 0 or omega != 0); classes 4-6 are singular (sigma = omega = 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LounestoClass {
    Class1,
    Class2,
    Class3,
    Class4,
    Class5,
    Class6,
    Degenerate,
}

impl LounestoClass {
    pub fn number(self) -> Option<u8> {
        match self {
            LounestoClass::Class1 => Some(1),
            LounestoClass::Class2 => Some(2),
            LounestoClass::Class3 => Some(3),
            LounestoClass::Class4 => Some(4),
            LounestoClass::Class5 => Some(5),
            LounestoClass::Class6 => Some(6),
            LounestoClass::Degenerate => None,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(LounestoClass::Class1),
            2 => Some(LounestoClass::Class2),
            3 => Some(LounestoClass::Class3),
            4 => Some(LounestoClass::Class4),
            5 => Some(LounestoClass::Class5),
            6 => Some(LounestoClass::Class6),
            _ => None,
        }
    }
}

impl fmt::Display for LounestoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.number() {
            Some(n) => write!(f, "class {n}"),
            None => write!(f, "degenerate"),
        }
    }
}

/// Tolerance semantics: every bilinear is quadratic in psi, so "x ~ 0"
/// means |x| <= rel_tol * (psi^dag psi), with psi^dag psi read off as J0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    pub rel_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-10 }
    }
}

impl ToleranceConfig {
    pub fn new(rel_tol: f64) -> Self {
        assert!(rel_tol > 0.0, "rel_tol must be positive");
        Self { rel_tol }
    }

    /// Absolute threshold for quadratic quantities of the given scale.
    pub fn quad(&self, scale: f64) -> f64 {
        self.rel_tol * scale
    }
}

/// Decide the Lounesto class. Total: degenerate inputs get `Degenerate`,
/// never an error.
pub fn classify(b: &BilinearSet, tol: &ToleranceConfig) -> LounestoClass {
    let eps = tol.quad(b.scale());
    if b.j_norm() <= eps {
        return LounestoClass::Degenerate;
    }
    let sigma_nz = b.sigma.abs() > eps;
    let omega_nz = b.omega.abs() > eps;
    match (sigma_nz, omega_nz) {
        (true, true) => LounestoClass::Class1,
        (true, false) => LounestoClass::Class2,
        (false, true) => LounestoClass::Class3,
        (false, false) => {
            let k_nz = b.k_norm() > eps;
            let s_nz = b.s_norm() > eps;
            match (k_nz, s_nz) {
                (true, true) => LounestoClass::Class4,
                (false, true) => LounestoClass::Class5,
                (true, false) => LounestoClass::Class6,
                (false, false) => LounestoClass::Degenerate,
            }
        }
    }
}

/// sigma != 0 or omega != 0 at the default scale rule.
pub fn is_regular(b: &BilinearSet) -> bool {
    let eps = ToleranceConfig::default().quad(b.scale());
    b.sigma.abs() > eps || b.omega.abs() > eps
}

/// sigma = omega = 0 at the default scale rule.
pub fn is_singular(b: &BilinearSet) -> bool {
    !is_regular(b)
}
