//! The element-wise non-linear transform that carves local optima into a basin.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Transform parameters shared by every coordinate of one component.
///
/// `mu = (μ₁, μ₂)` sets the depth of local optima on the positive and negative
/// half-axes, `omega = (ω₁, ω₂, ω₃, ω₄)` their frequencies.
#[inline]
pub(crate) fn transform_raw(a: f64, mu: [f64; 2], omega: [f64; 4]) -> f64 {
    if a > 0.0 {
        if mu[0] == 0.0 {
            return a;
        }
        let l = libm::log(a);
        libm::exp(l + mu[0] * (libm::sin(omega[0] * l) + libm::sin(omega[1] * l)))
    } else if a < 0.0 {
        if mu[1] == 0.0 {
            return a;
        }
        let l = libm::log(-a);
        -libm::exp(l + mu[1] * (libm::sin(omega[2] * l) + libm::sin(omega[3] * l)))
    } else {
        0.0
    }
}

/// Applies the three-branch transform to one value.
///
/// Positive inputs use `(μ₁, ω₁, ω₂)`, negative inputs use `(μ₂, ω₃, ω₄)` on
/// `log|a|` with the sign restored, and zero maps to zero. When the relevant
/// `μ` is zero the branch reduces to the identity and `a` is returned as is.
pub fn transform_scalar(a: f64, mu: [f64; 2], omega: [f64; 4]) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::Domain { index: 0, value: a });
    }
    if let Some(&bad) = mu.iter().chain(omega.iter()).find(|v| !v.is_finite()) {
        return Err(Error::Argument(alloc::format!(
            "transform parameters must be finite, got {bad}"
        )));
    }
    Ok(transform_raw(a, mu, omega))
}

/// Element-wise [`transform_scalar`]; a domain error carries the offending index.
pub fn transform_vector(a: &[f64], mu: [f64; 2], omega: [f64; 4]) -> Result<Vec<f64>> {
    a.iter()
        .enumerate()
        .map(|(index, &v)| {
            transform_scalar(v, mu, omega).map_err(|e| match e {
                Error::Domain { value, .. } => Error::Domain { index, value },
                other => other,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{E, FRAC_PI_2};
    use proptest::prelude::*;

    const ZERO_MU: [f64; 2] = [0.0, 0.0];
    const ZERO_OMEGA: [f64; 4] = [0.0; 4];

    #[test]
    fn zero_perturbation_is_identity() {
        assert_eq!(transform_scalar(3.5, ZERO_MU, ZERO_OMEGA).unwrap(), 3.5);
    }

    #[test]
    fn zero_maps_to_zero() {
        assert_eq!(transform_scalar(0.0, [1.0, 1.0], [50.0; 4]).unwrap(), 0.0);
        assert_eq!(transform_scalar(-0.0, [0.3, 0.9], [1.0, 2.0, 3.0, 4.0]).unwrap(), 0.0);
    }

    #[test]
    fn positive_branch_at_e() {
        // exp(1 + 0.5 * (sin(π/2) + sin(π/2))) = e²
        let v = transform_scalar(E, [0.5, 0.0], [FRAC_PI_2, FRAC_PI_2, 0.0, 0.0]).unwrap();
        assert!((v - 7.389_056_098_930_65).abs() < 1e-12, "{v}");
    }

    #[test]
    fn minus_one_is_fixed_point() {
        for (mu, omega) in [([0.0, 0.0], [0.0; 4]), ([1.0, 0.7], [50.0, 3.0, 20.0, 11.0])] {
            assert_eq!(transform_scalar(-1.0, mu, omega).unwrap(), -1.0);
        }
    }

    #[test]
    fn vector_examples() {
        let v = transform_vector(&[1.0, 0.0, -1.0], [1.0, 1.0], [50.0; 4]).unwrap();
        assert_eq!(v, [1.0, 0.0, -1.0]);
        let v = transform_vector(&[2.0, -2.0], ZERO_MU, [7.0; 4]).unwrap();
        assert_eq!(v, [2.0, -2.0]);
        let v = transform_vector(&[E, E], [0.5, 0.5], [FRAC_PI_2; 4]).unwrap();
        for x in v {
            assert!((x - E * E).abs() < 1e-12);
        }
    }

    #[test]
    fn non_finite_input_is_rejected_with_index() {
        assert!(matches!(
            transform_scalar(f64::NAN, ZERO_MU, ZERO_OMEGA),
            Err(Error::Domain { index: 0, .. })
        ));
        let err = transform_vector(&[1.0, 2.0, f64::INFINITY], ZERO_MU, ZERO_OMEGA).unwrap_err();
        assert!(matches!(err, Error::Domain { index: 2, .. }));
        assert!(transform_scalar(1.0, [f64::NAN, 0.0], ZERO_OMEGA).is_err());
    }

    proptest! {
        #[test]
        fn sign_is_preserved(
            a in -1e6f64..1e6,
            mu in prop::array::uniform2(0.0f64..2.0),
            omega in prop::array::uniform4(0.0f64..100.0),
        ) {
            let t = transform_scalar(a, mu, omega).unwrap();
            prop_assert_eq!(t.partial_cmp(&0.0), a.partial_cmp(&0.0));
        }

        #[test]
        fn odd_symmetry_when_branches_match(
            a in -1e6f64..1e6,
            mu in 0.0f64..2.0,
            w1 in 0.0f64..100.0,
            w2 in 0.0f64..100.0,
        ) {
            let omega = [w1, w2, w1, w2];
            let pos = transform_scalar(a, [mu, mu], omega).unwrap();
            let neg = transform_scalar(-a, [mu, mu], omega).unwrap();
            prop_assert_eq!(pos, -neg);
        }
    }
}
