//! The pairwise difference `a-_i a+_j - a+_i a-_j` and its factorization.

use super::tables::factor_for_type;
use super::AnalysisError;
use crate::field::FieldElement;
use crate::parray::{build_parameter_array, TypeSpec};
use crate::realization::intersection_a_closed;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi2Witness {
    pub i: usize,
    pub j: usize,
    pub delta: FieldElement,
    pub q_value: FieldElement,
    pub factor: FieldElement,
}

fn check_range(d: usize, i: usize, j: usize) -> Result<(), AnalysisError> {
    let ok = |k: usize| (1..d).contains(&k);
    if ok(i) && ok(j) {
        Ok(())
    } else {
        Err(AnalysisError::IndexOutOfRange { i, j, d })
    }
}

/// `(a_i - a_0)(ts_i - ts_d)(a_j - a_d)(ts_j - ts_0)
///  - (a_i - a_d)(ts_i - ts_0)(a_j - a_0)(ts_j - ts_d)` for `1 <= i, j <= d-1`.
pub fn pi2_delta(
    a: &[FieldElement],
    theta_star: &[FieldElement],
    i: usize,
    j: usize,
) -> Result<FieldElement, AnalysisError> {
    let d = a.len() - 1;
    check_range(d, i, j)?;
    let ts = theta_star;
    let lhs = (&a[i] - &a[0]) * (&ts[i] - &ts[d]) * (&a[j] - &a[d]) * (&ts[j] - &ts[0]);
    let rhs = (&a[i] - &a[d]) * (&ts[i] - &ts[0]) * (&a[j] - &a[0]) * (&ts[j] - &ts[d]);
    Ok(lhs - rhs)
}

/// The ratio of dual-eigenvalue differences that the table factor multiplies.
pub fn q_expression(theta_star: &[FieldElement], i: usize, j: usize) -> Result<FieldElement, AnalysisError> {
    let d = theta_star.len() - 1;
    check_range(d, i, j)?;
    let t = |k: usize, l: usize| &theta_star[k] - &theta_star[l];
    let num = t(0, i) * t(0, j) * t(0, d) * t(i, j) * t(i, d) * t(j, d);
    let den = t(0, 1) * t(i - 1, i) * t(i, i + 1) * t(j - 1, j) * t(j, j + 1) * t(d - 1, d);
    if den.is_zero() {
        return Err(AnalysisError::ZeroDenominator { i, j });
    }
    Ok(num / den)
}

/// Check the factorization for every pair from already computed data.
pub fn verify_pi2_with(
    a: &[FieldElement],
    theta_star: &[FieldElement],
    factor: &FieldElement,
) -> Result<Vec<Pi2Witness>, AnalysisError> {
    let d = a.len() - 1;
    let mut out = Vec::with_capacity((d - 1) * (d - 1));
    for i in 1..d {
        for j in 1..d {
            let delta = pi2_delta(a, theta_star, i, j)?;
            let q_value = q_expression(theta_star, i, j)?;
            let rhs = &q_value * factor;
            if delta != rhs {
                return Err(AnalysisError::IdentityFailure {
                    i,
                    j,
                    lhs: delta.to_string(),
                    rhs: rhs.to_string(),
                });
            }
            out.push(Pi2Witness {
                i,
                j,
                delta,
                q_value,
                factor: factor.clone(),
            });
        }
    }
    Ok(out)
}

/// Build the array of a valid spec and check the factorization.
pub fn verify_pi2(spec: &TypeSpec) -> Result<Vec<Pi2Witness>, AnalysisError> {
    let p = build_parameter_array(spec)?;
    let a = intersection_a_closed(&p);
    verify_pi2_with(&a, p.theta_star(), &factor_for_type(spec)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    fn ints(v: &[i64]) -> Vec<FieldElement> {
        let ctx = FieldContext::rationals();
        v.iter().map(|&x| ctx.from_i64(x)).collect()
    }

    #[test]
    fn q_expression_on_consecutive_integers() {
        let ts = ints(&[0, 1, 2, 3]);
        // Six negative numerator factors with product 12 over a denominator of 1.
        assert_eq!(q_expression(&ts, 1, 2).unwrap(), ints(&[12])[0]);
        assert!(q_expression(&ts, 1, 1).unwrap().is_zero());
        // Swapping i, j flips the sign of three numerator factors.
        assert_eq!(q_expression(&ts, 2, 1).unwrap(), ints(&[-12])[0]);
    }

    #[test]
    fn delta_diagonal_and_range() {
        let a = ints(&[3, 2, 1, 0]);
        let ts = ints(&[0, 1, 2, 3]);
        assert!(pi2_delta(&a, &ts, 2, 2).unwrap().is_zero());
        // Constant differences make a- and a+ proportional.
        assert!(pi2_delta(&a, &ts, 1, 2).unwrap().is_zero());
        assert!(matches!(
            pi2_delta(&a, &ts, 0, 1),
            Err(AnalysisError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            q_expression(&ts, 1, 3),
            Err(AnalysisError::IndexOutOfRange { .. })
        ));
    }
}
