//! Property-based tests over randomly generated spinors and multivectors.

use elko_core::bilinears::{compute_bilinears, fierz_residuals};
use elko_core::classifier::{classify, LounestoClass, ToleranceConfig};
use elko_core::gamma::Spinor;
use elko_core::multivector::Multivector;
use elko_core::sampler::{sample_class, SampleSpec};
use elko_core::Complex64;
use proptest::prelude::*;

fn component() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), -10.0..10.0f64]
}

prop_compose! {
    fn spinor()(c in prop::array::uniform8(component())) -> Spinor {
        Spinor::new([
            Complex64::new(c[0], c[1]),
            Complex64::new(c[2], c[3]),
            Complex64::new(c[4], c[5]),
            Complex64::new(c[6], c[7]),
        ])
    }
}

prop_compose! {
    fn multivector()(c in prop::array::uniform16(component())) -> Multivector {
        Multivector::new(c)
    }
}

proptest! {
    #[test]
    fn fierz_identities_hold_for_every_spinor(psi in spinor()) {
        let b = compute_bilinears(&psi).unwrap();
        let bound = 1e-10 * (b.scale() * b.scale()).max(1e-30);
        for r in fierz_residuals(&b) {
            prop_assert!(r <= bound, "residual {r} > {bound}");
        }
    }

    #[test]
    fn classifier_is_total_and_consistent(psi in spinor()) {
        let b = compute_bilinears(&psi).unwrap();
        let tol = ToleranceConfig::default();
        let class = classify(&b, &tol);
        // the vanishing patterns defining the class actually hold
        let t = tol.quad(b.scale());
        match class {
            LounestoClass::Class1 => {
                prop_assert!(b.sigma.abs() > t && b.omega.abs() > t);
            }
            LounestoClass::Class2 => {
                prop_assert!(b.sigma.abs() > t && b.omega.abs() <= t);
            }
            LounestoClass::Class3 => {
                prop_assert!(b.sigma.abs() <= t && b.omega.abs() > t);
            }
            LounestoClass::Class4 | LounestoClass::Class5 | LounestoClass::Class6 => {
                prop_assert!(b.sigma.abs() <= t && b.omega.abs() <= t);
                prop_assert!(b.s_norm() > t || class == LounestoClass::Class6);
                prop_assert!(b.k_norm() > t || class != LounestoClass::Class4);
            }
            LounestoClass::Degenerate => {}
        }
    }

    #[test]
    fn classification_is_phase_invariant(psi in spinor(), theta in 0.0..core::f64::consts::TAU) {
        let tol = ToleranceConfig::default();
        let a = classify(&compute_bilinears(&psi).unwrap(), &tol);
        let rotated = psi.scale(Complex64::new(theta.cos(), theta.sin()));
        let b = classify(&compute_bilinears(&rotated).unwrap(), &tol);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn contraction_adjunction_on_random_multivectors(
        a in multivector(), b in multivector(), c in multivector()
    ) {
        let scale = a.coeff_norm() * b.coeff_norm() * c.coeff_norm();
        let bound = 1e-10 * scale.max(1.0);
        let lhs = a.left_contract(&b).metric_ext(&c);
        let rhs = b.metric_ext(&a.reversion().wedge(&c));
        prop_assert!((lhs - rhs).abs() <= bound, "{lhs} vs {rhs}");
    }

    #[test]
    fn clifford_product_is_associative(
        a in multivector(), b in multivector(), c in multivector()
    ) {
        let lhs = a.clifford_product(&b).clifford_product(&c);
        let rhs = a.clifford_product(&b.clifford_product(&c));
        let scale = a.coeff_norm() * b.coeff_norm() * c.coeff_norm();
        let bound = 1e-10 * scale.max(1.0);
        for i in 0..16 {
            prop_assert!((lhs.coefficients()[i] - rhs.coefficients()[i]).abs() <= bound);
        }
    }

    #[test]
    fn sampling_is_deterministic(class in 1u8..=6, seed in any::<u64>()) {
        let a = sample_class(&SampleSpec::new(class, 3, seed)).unwrap();
        let b = sample_class(&SampleSpec::new(class, 3, seed)).unwrap();
        for (x, y) in a.iter().zip(&b) {
            prop_assert_eq!(x.max_dev(y), 0.0);
        }
    }
}
