//! Seeded random generation of spinors in each Lounesto class and of
//! mappable Dirac spinors, plus the crate's internal random helpers.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::bilinears::compute_bilinears;
use crate::classifier::{classify, LounestoClass, ToleranceConfig};
use crate::elko::Momentum;
use crate::flt;
use crate::gamma::{pauli, Spinor};
use crate::mapping::{solve_equivalence_class, FreeParams, Mode};
use crate::{Error, Result};

/// What to generate: `count` spinors of Lounesto class `class`, drawn
/// deterministically from `seed`, with components of typical size `scale`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleSpec {
    pub class: u8,
    pub count: usize,
    pub seed: u64,
    pub scale: f64,
}

impl SampleSpec {
    pub fn new(class: u8, count: usize, seed: u64) -> Self {
        assert!((1..=6).contains(&class), "Lounesto classes are 1..=6");
        Self {
            class,
            count,
            seed,
            scale: 1.0,
        }
    }
}

const MAX_ATTEMPTS_PER_SAMPLE: u32 = 100;

pub(crate) fn rand_normal(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

pub(crate) fn rand_unit(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen::<f64>()
}

pub(crate) fn rand_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rand_normal(rng), rand_normal(rng))
}

pub(crate) fn rand_spinor(rng: &mut ChaCha8Rng) -> Spinor {
    Spinor::new([
        rand_complex(rng),
        rand_complex(rng),
        rand_complex(rng),
        rand_complex(rng),
    ])
}

#[cfg(test)]
pub(crate) fn test_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
pub(crate) fn rand_vec4(rng: &mut ChaCha8Rng) -> [f64; 4] {
    core::array::from_fn(|_| rand_normal(rng))
}

#[cfg(test)]
pub(crate) fn rand_multivector(rng: &mut ChaCha8Rng) -> crate::multivector::Multivector {
    let mut m = crate::multivector::Multivector::ZERO;
    for i in 0..16 {
        m[i] = rand_normal(rng);
    }
    m
}

#[cfg(test)]
pub(crate) fn rand_antilinear(rng: &mut ChaCha8Rng) -> crate::gamma::AntilinearOperator {
    use crate::gamma::AntilinearOperator;
    use crate::linalg::CMat4;
    let mut a = CMat4::ZERO;
    let mut b = CMat4::ZERO;
    for i in 0..4 {
        for j in 0..4 {
            a.0[i][j] = rand_complex(rng);
            b.0[i][j] = rand_complex(rng);
        }
    }
    AntilinearOperator { a, b }
}

#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn rand_unit_vec3(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v = [rand_normal(rng), rand_normal(rng), rand_normal(rng)];
        let n = flt::sqrt(v.iter().map(|x| x * x).sum());
        if n > 1e-3 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}

#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn rand_momentum(rng: &mut ChaCha8Rng) -> Momentum {
    let m = 0.5 + 2.0 * rand_unit(rng);
    let dir = rand_unit_vec3(rng);
    let p = 2.0 * rand_unit(rng);
    Momentum::new(m, [dir[0] * p, dir[1] * p, dir[2] * p])
}

fn unit_phase(rng: &mut ChaCha8Rng) -> Complex64 {
    let theta = 2.0 * core::f64::consts::PI * rand_unit(rng);
    Complex64::new(flt::cos(theta), flt::sin(theta))
}

/// One candidate in the requested class. Regular classes adjust the
/// relative phase of the Weyl halves so that z = phi_R^dag phi_L has the
/// needed real/imaginary part; singular classes use the one-parameter
/// family lambda_c = (c sigma2 phi_L*, phi_L).
fn candidate(class: u8, rng: &mut ChaCha8Rng) -> Spinor {
    match class {
        1 => rand_spinor(rng),
        2 | 3 => {
            let psi = rand_spinor(rng);
            let (r, l) = (psi.right(), psi.left());
            let z = r[0].conj() * l[0] + r[1].conj() * l[1];
            // rotate phi_R by alpha: z -> e^{-i alpha} z
            let alpha = if class == 2 {
                flt::atan2(z.im, z.re) // make z real: omega = -2 Im z = 0
            } else {
                flt::atan2(z.im, z.re) - core::f64::consts::FRAC_PI_2 // make z imaginary
            };
            let phase = Complex64::new(flt::cos(alpha), flt::sin(alpha));
            Spinor::from_halves([r[0] * phase, r[1] * phase], l)
        }
        _ => {
            let l = [rand_complex(rng), rand_complex(rng)];
            let c = match class {
                4 => {
                    // |c| away from both 0 and 1
                    let mag = if rand_unit(rng) < 0.5 {
                        0.3 + 0.4 * rand_unit(rng)
                    } else {
                        1.3 + 0.7 * rand_unit(rng)
                    };
                    unit_phase(rng) * mag
                }
                5 => unit_phase(rng),
                _ => Complex64::new(0.0, 0.0),
            };
            let top = pauli(2).mul_vec([l[0].conj(), l[1].conj()]);
            Spinor::new([c * top[0], c * top[1], l[0], l[1]])
        }
    }
}

/// Generate `spec.count` spinors, each verified by the classifier.
pub fn sample_class(spec: &SampleSpec) -> Result<Vec<Spinor>> {
    assert!((1..=6).contains(&spec.class), "Lounesto classes are 1..=6");
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let tol = ToleranceConfig::default();
    let want = LounestoClass::from_number(spec.class).unwrap();
    let mut out = Vec::with_capacity(spec.count);
    while out.len() < spec.count {
        let mut accepted = false;
        for _ in 0..MAX_ATTEMPTS_PER_SAMPLE {
            let psi = candidate(spec.class, &mut rng)
                .scale(Complex64::new(spec.scale, 0.0));
            let b = compute_bilinears(&psi)?;
            if classify(&b, &tol) == want {
                out.push(psi);
                accepted = true;
                break;
            }
        }
        if !accepted {
            return Err(Error::ExhaustedRetries {
                attempts: MAX_ATTEMPTS_PER_SAMPLE,
            });
        }
    }
    Ok(out)
}

/// One verified sample (internal shorthand for the other modules' tests).
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn sample_one_in_class(class: u8, rng: &mut ChaCha8Rng) -> Result<Spinor> {
    let tol = ToleranceConfig::default();
    let want = LounestoClass::from_number(class).unwrap();
    for _ in 0..MAX_ATTEMPTS_PER_SAMPLE {
        let psi = candidate(class, rng);
        if classify(&compute_bilinears(&psi)?, &tol) == want {
            return Ok(psi);
        }
    }
    Err(Error::ExhaustedRetries {
        attempts: MAX_ATTEMPTS_PER_SAMPLE,
    })
}

/// `count` spinors of the given class that pass the chosen mode's
/// mappability conditions, found by the equivalence-class solver with
/// seeded free parameters.
pub fn sample_mappable(class: u8, mode: Mode, count: usize, seed: u64) -> Result<Vec<Spinor>> {
    assert!((1..=3).contains(&class), "mappable classes are 1..=3");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let free = if class == 1 {
            // keep the anchor away from zero: it sets the solution scale
            let z = rand_complex(&mut rng);
            let z = if z.norm() < 0.3 {
                z + Complex64::new(0.5, 0.5)
            } else {
                z
            };
            FreeParams::Psi1(z)
        } else {
            FreeParams::Components {
                psi1a: 0.5 + rand_unit(&mut rng),
                psi1b: rand_normal(&mut rng),
                psi2a: rand_normal(&mut rng),
            }
        };
        let sub_seed = seed
            .wrapping_mul(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(i as u64);
        out.push(solve_equivalence_class(class, mode, free, sub_seed)?);
    }
    Ok(out)
}
