//! Concrete matrices for a parameter array.
//!
//! The split basis gives `A` lower bidiagonal (diagonal `theta`, unit
//! subdiagonal) and `A*` upper bidiagonal (diagonal `theta*`, superdiagonal
//! `phi`). Everything else (idempotents, intersection numbers, the standard
//! basis) is derived from that pair.

use std::sync::OnceLock;

use crate::field::{FieldContext, FieldElement};
use crate::matrix::Matrix;
use crate::parray::ParameterArray;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealizationError {
    #[error("eigenvalues {0} and {1} coincide")]
    RepeatedEigenvalue(usize, usize),
    #[error("expected {expected} eigenvalues for a {size}x{size} matrix")]
    EigenvalueCount { expected: usize, size: usize },
    #[error("idempotent {index} fails check: {check}")]
    IdempotentCheckFailed { index: usize, check: &'static str },
    #[error("vectors E*_i u do not form a basis")]
    SingularBasis,
    #[error("standard-basis matrix has wrong shape at ({row},{col})")]
    NotTridiagonal { row: usize, col: usize },
    #[error("intersection number {name}_{index} vanishes")]
    ZeroIntersectionNumber { name: &'static str, index: usize },
    #[error("axiom violated for {product} at (i,j) = ({i},{j})")]
    AxiomViolation { product: &'static str, i: usize, j: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Split,
    Standard,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdempotentKind {
    /// Idempotents of `A`.
    E,
    /// Idempotents of `A*`.
    EStar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentSet {
    which: IdempotentKind,
    matrices: Vec<Matrix>,
}

impl IdempotentSet {
    pub fn which(&self) -> IdempotentKind {
        self.which
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn get(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }
}

/// `a_i` on the diagonal, `b_i` above, `c_i` below. `b` is indexed `0..d`,
/// `c` is stored so that `c[i - 1] = c_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionNumbers {
    pub a: Vec<FieldElement>,
    pub b: Vec<FieldElement>,
    pub c: Vec<FieldElement>,
}

#[derive(Debug, Clone)]
pub struct LeonardRealization {
    array: ParameterArray,
    a: Matrix,
    a_star: Matrix,
    basis: Basis,
    e: OnceLock<Result<IdempotentSet, RealizationError>>,
    e_star: OnceLock<Result<IdempotentSet, RealizationError>>,
}

impl LeonardRealization {
    pub fn array(&self) -> &ParameterArray {
        &self.array
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn a_star(&self) -> &Matrix {
        &self.a_star
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn d(&self) -> usize {
        self.array.d()
    }

    pub fn context(&self) -> &FieldContext {
        self.array.context()
    }

    /// Idempotents of `A`, computed on first use.
    pub fn e(&self) -> Result<&IdempotentSet, RealizationError> {
        self.e
            .get_or_init(|| primitive_idempotents(&self.a, self.array.theta(), IdempotentKind::E))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Idempotents of `A*`, computed on first use.
    pub fn e_star(&self) -> Result<&IdempotentSet, RealizationError> {
        self.e_star
            .get_or_init(|| {
                primitive_idempotents(&self.a_star, self.array.theta_star(), IdempotentKind::EStar)
            })
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// Split-basis pair from raw sequences. No invariants are checked, so this
/// also serves to build deliberately broken pairs.
pub fn split_matrices(
    ctx: &FieldContext,
    theta: &[FieldElement],
    theta_star: &[FieldElement],
    phi: &[FieldElement],
) -> (Matrix, Matrix) {
    let n = theta.len();
    assert_eq!(theta_star.len(), n, "theta* length");
    assert_eq!(phi.len() + 1, n, "phi length");
    let mut a = Matrix::zeros(ctx, n, n);
    let mut a_star = Matrix::zeros(ctx, n, n);
    for i in 0..n {
        a.set(i, i, theta[i].clone());
        a_star.set(i, i, theta_star[i].clone());
        if i + 1 < n {
            a.set(i + 1, i, ctx.one());
            a_star.set(i, i + 1, phi[i].clone());
        }
    }
    (a, a_star)
}

pub fn realize_split(p: &ParameterArray) -> LeonardRealization {
    let (a, a_star) = split_matrices(p.context(), p.theta(), p.theta_star(), p.phi());
    LeonardRealization {
        array: p.clone(),
        a,
        a_star,
        basis: Basis::Split,
        e: OnceLock::new(),
        e_star: OnceLock::new(),
    }
}

/// `E_i = prod_{j != i} (M - eig_j I) / (eig_i - eig_j)`, verified afterwards:
/// `E_i^2 = E_i`, `M E_i = eig_i E_i`, `sum E_i = I`.
pub fn primitive_idempotents(
    m: &Matrix,
    eigs: &[FieldElement],
    which: IdempotentKind,
) -> Result<IdempotentSet, RealizationError> {
    let n = m.rows();
    if eigs.len() != n || !m.is_square() {
        return Err(RealizationError::EigenvalueCount {
            expected: m.rows(),
            size: n,
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            if eigs[i] == eigs[j] {
                return Err(RealizationError::RepeatedEigenvalue(i, j));
            }
        }
    }
    let ctx = m.context();
    let shifted: Vec<Matrix> = eigs.iter().map(|t| m.shift(t)).collect();
    let mut matrices = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = Matrix::identity(ctx, n);
        let mut denom = ctx.one();
        for j in (0..n).filter(|&j| j != i) {
            e = &e * &shifted[j];
            denom = denom * (&eigs[i] - &eigs[j]);
        }
        matrices.push(e.scale(&denom.inv().expect("eigenvalues are distinct")));
    }
    let mut total = Matrix::zeros(ctx, n, n);
    for (i, e) in matrices.iter().enumerate() {
        if &(e * e) != e {
            return Err(RealizationError::IdempotentCheckFailed { index: i, check: "E^2 = E" });
        }
        if m * e != e.scale(&eigs[i]) {
            return Err(RealizationError::IdempotentCheckFailed {
                index: i,
                check: "M E = eig E",
            });
        }
        total = &total + e;
    }
    if total != Matrix::identity(ctx, n) {
        return Err(RealizationError::IdempotentCheckFailed {
            index: n - 1,
            check: "sum E = I",
        });
    }
    Ok(IdempotentSet { which, matrices })
}

/// `a_i = tr(E*_i A)`.
pub fn intersection_a_trace(real: &LeonardRealization, e_star: &IdempotentSet) -> Vec<FieldElement> {
    e_star.matrices().iter().map(|es| (es * real.a()).trace()).collect()
}

/// Closed-form `a_i` from the array.
pub fn intersection_a_closed(p: &ParameterArray) -> Vec<FieldElement> {
    closed_intersection_a(p.theta(), p.theta_star(), p.phi())
}

/// `a_i = theta_i + phi_i/(ts_i - ts_{i-1}) + phi_{i+1}/(ts_i - ts_{i+1})`, the
/// missing term dropped at either end. Only `theta`, `theta*` and `phi` enter.
pub fn closed_intersection_a(
    theta: &[FieldElement],
    theta_star: &[FieldElement],
    phi: &[FieldElement],
) -> Vec<FieldElement> {
    let d = theta.len() - 1;
    (0..=d)
        .map(|i| {
            let mut a = theta[i].clone();
            if i > 0 {
                a = a + &phi[i - 1] / &(&theta_star[i] - &theta_star[i - 1]);
            }
            if i < d {
                a = a + &phi[i] / &(&theta_star[i] - &theta_star[i + 1]);
            }
            a
        })
        .collect()
}

/// Change to the basis `E*_i u`, `u` the first nonzero column of `E_0`.
pub fn standard_basis_rep(
    real: &LeonardRealization,
    e: &IdempotentSet,
    e_star: &IdempotentSet,
) -> Result<(LeonardRealization, IntersectionNumbers), RealizationError> {
    let n = real.d() + 1;
    let e0 = e.get(0);
    let u = (0..n)
        .map(|c| e0.column(c))
        .find(|col| col.iter().any(|x| !x.is_zero()))
        .ok_or(RealizationError::SingularBasis)?;
    let ctx = real.context();
    let columns: Vec<Vec<FieldElement>> = e_star.matrices().iter().map(|es| es.apply(&u)).collect();
    let p = Matrix::from_fn(ctx, n, n, |r, c| columns[c][r].clone());
    let p_inv = p.inverse().ok_or(RealizationError::SingularBasis)?;
    let a = &(&p_inv * real.a()) * &p;
    let a_star = &(&p_inv * real.a_star()) * &p;
    for r in 0..n {
        for c in 0..n {
            if r.abs_diff(c) > 1 && !a.get(r, c).is_zero() {
                return Err(RealizationError::NotTridiagonal { row: r, col: c });
            }
            if r != c && !a_star.get(r, c).is_zero() {
                return Err(RealizationError::NotTridiagonal { row: r, col: c });
            }
        }
    }
    let numbers = IntersectionNumbers {
        a: (0..n).map(|i| a.get(i, i).clone()).collect(),
        b: (0..n - 1).map(|i| a.get(i, i + 1).clone()).collect(),
        c: (1..n).map(|i| a.get(i, i - 1).clone()).collect(),
    };
    if let Some(i) = numbers.b.iter().position(FieldElement::is_zero) {
        return Err(RealizationError::ZeroIntersectionNumber { name: "b", index: i });
    }
    if let Some(i) = numbers.c.iter().position(FieldElement::is_zero) {
        return Err(RealizationError::ZeroIntersectionNumber { name: "c", index: i + 1 });
    }
    let standard = LeonardRealization {
        array: real.array.clone(),
        a,
        a_star,
        basis: Basis::Standard,
        e: OnceLock::new(),
        e_star: OnceLock::new(),
    };
    Ok((standard, numbers))
}

/// What [`verify_axioms`] established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub pairs_checked: usize,
    /// Scalars with `E*_i A E*_i = a_i E*_i`.
    pub a: Vec<FieldElement>,
}

/// Tridiagonality of each matrix on the other's idempotents, for any pair of
/// matrices and idempotent families.
pub fn verify_axioms_matrices(
    a: &Matrix,
    a_star: &Matrix,
    e: &IdempotentSet,
    e_star: &IdempotentSet,
) -> Result<AxiomReport, RealizationError> {
    let n = e.len();
    let mut pairs = 0;
    for (product, m, family) in [("E_i A* E_j", a_star, e), ("E*_i A E*_j", a, e_star)] {
        let left: Vec<Matrix> = family.matrices().iter().map(|ei| ei * m).collect();
        for (i, li) in left.iter().enumerate() {
            for j in (0..n).filter(|&j| j != i) {
                let zero = (li * family.get(j)).is_zero();
                if zero != (i.abs_diff(j) > 1) {
                    return Err(RealizationError::AxiomViolation { product, i, j });
                }
                pairs += 1;
            }
        }
    }
    let mut scalars = Vec::with_capacity(n);
    for i in 0..n {
        let es = e_star.get(i);
        let ai = (es * a).trace();
        if (&(es * a) * es) != es.scale(&ai) {
            return Err(RealizationError::AxiomViolation {
                product: "E*_i A E*_i = a_i E*_i",
                i,
                j: i,
            });
        }
        scalars.push(ai);
    }
    Ok(AxiomReport {
        pairs_checked: pairs,
        a: scalars,
    })
}

pub fn verify_axioms(
    real: &LeonardRealization,
    e: &IdempotentSet,
    e_star: &IdempotentSet,
) -> Result<AxiomReport, RealizationError> {
    verify_axioms_matrices(real.a(), real.a_star(), e, e_star)
}
