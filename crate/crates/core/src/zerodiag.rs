//! The zero diagonal space: elements `f0 I + f1 A* + f2 A + f3 A A*` with
//! `E*_i X E*_i = 0` for every `i`.
//!
//! Such `X` correspond to row vectors `f` with `f M = 0`, where `M` has rows
//! `1`, `theta*_i`, `a_i`, `a_i theta*_i`. The kernel of `M` is the primary
//! computation here; the closed forms are kept as an independent check.

use std::fmt;

use crate::field::{FieldContext, FieldElement};
use crate::matrix::Matrix;
use crate::realization::{IdempotentSet, LeonardRealization, RealizationError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZeroDiagError {
    #[error(transparent)]
    Realization(#[from] RealizationError),
    #[error("kernel element {0} does not have zero diagonal")]
    ZeroDiagCheckFailed(usize),
    #[error("no closed-form basis for a {dim}-dimensional zero diagonal space")]
    NoClosedForm { dim: usize },
    #[error("rank of M is {0}, outside 2..=4")]
    RankOutOfRange(usize),
    #[error("I, A*, A, AA*, A*A are linearly dependent (rank {rank})")]
    DependenceDetected { rank: usize },
}

/// Coefficients of `f0 I + f1 A* + f2 A + f3 A A*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZCoefficients {
    pub f0: FieldElement,
    pub f1: FieldElement,
    pub f2: FieldElement,
    pub f3: FieldElement,
}

impl ZCoefficients {
    pub fn from_vec(v: &[FieldElement]) -> Self {
        assert_eq!(v.len(), 4, "four coefficients");
        Self {
            f0: v[0].clone(),
            f1: v[1].clone(),
            f2: v[2].clone(),
            f3: v[3].clone(),
        }
    }

    pub fn to_vec(&self) -> Vec<FieldElement> {
        vec![self.f0.clone(), self.f1.clone(), self.f2.clone(), self.f3.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.to_vec().iter().all(FieldElement::is_zero)
    }
}

impl fmt::Display for ZCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.f0, self.f1, self.f2, self.f3)
    }
}

/// `a-_i = (a_i - a_0)(ts_i - ts_d)` and `a+_i = (a_i - a_d)(ts_i - ts_0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct APMData {
    pub a_minus: Vec<FieldElement>,
    pub a_plus: Vec<FieldElement>,
}

pub fn compute_apm(a: &[FieldElement], theta_star: &[FieldElement]) -> APMData {
    assert_eq!(a.len(), theta_star.len(), "a and theta* lengths");
    let d = a.len() - 1;
    let a_minus = (0..=d)
        .map(|i| (&a[i] - &a[0]) * (&theta_star[i] - &theta_star[d]))
        .collect();
    let a_plus = (0..=d)
        .map(|i| (&a[i] - &a[d]) * (&theta_star[i] - &theta_star[0]))
        .collect();
    APMData { a_minus, a_plus }
}

fn ctx_of(v: &[FieldElement]) -> FieldContext {
    v[0].context().clone()
}

/// Rows `1`, `theta*_i`, `a_i`, `a_i theta*_i`.
pub fn matrix_m(a: &[FieldElement], theta_star: &[FieldElement]) -> Matrix {
    assert_eq!(a.len(), theta_star.len(), "a and theta* lengths");
    let ctx = ctx_of(a);
    Matrix::from_fn(&ctx, 4, a.len(), |r, c| match r {
        0 => ctx.one(),
        1 => theta_star[c].clone(),
        2 => a[c].clone(),
        _ => &a[c] * &theta_star[c],
    })
}

/// Rows `1`, `theta*_i`, `a-_i`, `a+_i`.
pub fn matrix_l(apm: &APMData, theta_star: &[FieldElement]) -> Matrix {
    let ctx = ctx_of(theta_star);
    Matrix::from_fn(&ctx, 4, theta_star.len(), |r, c| match r {
        0 => ctx.one(),
        1 => theta_star[c].clone(),
        2 => apm.a_minus[c].clone(),
        _ => apm.a_plus[c].clone(),
    })
}

/// The 4x4 matrix with `L = T M`.
pub fn matrix_t(a0: &FieldElement, ad: &FieldElement, ts0: &FieldElement, tsd: &FieldElement) -> Matrix {
    let ctx = a0.context().clone();
    let (zero, one) = (ctx.zero(), ctx.one());
    let rows = vec![
        vec![one.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), one.clone(), zero.clone(), zero],
        vec![a0 * tsd, -a0, -tsd, one.clone()],
        vec![ad * ts0, -ad, -ts0, one],
    ];
    Matrix::from_rows(&ctx, rows).expect("4x4 literal")
}

pub fn rank_exact(m: &Matrix) -> usize {
    m.rank()
}

/// `4 - rank M`.
pub fn z_dimension(rank_m: usize) -> Result<usize, ZeroDiagError> {
    if !(2..=4).contains(&rank_m) {
        return Err(ZeroDiagError::RankOutOfRange(rank_m));
    }
    Ok(4 - rank_m)
}

/// `f0 I + f1 A* + f2 A + f3 A A*`.
pub fn z_element(real: &LeonardRealization, f: &ZCoefficients) -> Matrix {
    let n = real.d() + 1;
    let ctx = real.context();
    let aas = real.a() * real.a_star();
    let mut x = Matrix::identity(ctx, n).scale(&f.f0);
    x = &x + &real.a_star().scale(&f.f1);
    x = &x + &real.a().scale(&f.f2);
    &x + &aas.scale(&f.f3)
}

pub fn has_zero_diagonal(x: &Matrix, e_star: &IdempotentSet) -> bool {
    e_star.matrices().iter().all(|es| (&(es * x) * es).is_zero())
}

/// Left kernel of `M` mapped to matrices, each checked for zero diagonal.
pub fn z_basis_kernel(
    m: &Matrix,
    real: &LeonardRealization,
) -> Result<Vec<(ZCoefficients, Matrix)>, ZeroDiagError> {
    let e_star = real.e_star()?;
    m.left_kernel()
        .into_iter()
        .enumerate()
        .map(|(k, f)| {
            let coeffs = ZCoefficients::from_vec(&f);
            let x = z_element(real, &coeffs);
            if !has_zero_diagonal(&x, e_star) {
                return Err(ZeroDiagError::ZeroDiagCheckFailed(k));
            }
            Ok((coeffs, x))
        })
        .collect()
}

/// A linear relation `a-_i * minus_coeff = a+_i * plus_coeff`, labelled by the
/// condition that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationRow {
    pub label: String,
    pub minus_coeff: FieldElement,
    pub plus_coeff: FieldElement,
}

/// `c- (A - a0 I)(A* - ts_d I) - c+ (A - a_d I)(A* - ts_0 I)`.
pub fn relation_element(real: &LeonardRealization, a: &[FieldElement], row: &RelationRow) -> Matrix {
    let d = real.d();
    let ts = real.array().theta_star();
    let left = &real.a().shift(&a[0]) * &real.a_star().shift(&ts[d]);
    let right = &real.a().shift(&a[d]) * &real.a_star().shift(&ts[0]);
    &left.scale(&row.minus_coeff) - &right.scale(&row.plus_coeff)
}

/// Closed-form spanning set: the pair `A - a0 I`, `A A* - a0 A*` in dimension
/// two, the relation element in dimension one, nothing in dimension zero.
pub fn z_basis_closed(
    real: &LeonardRealization,
    a: &[FieldElement],
    dim: usize,
    row: Option<&RelationRow>,
) -> Result<Vec<Matrix>, ZeroDiagError> {
    match (dim, row) {
        (0, _) => Ok(Vec::new()),
        (1, Some(row)) => Ok(vec![relation_element(real, a, row)]),
        (2, _) => {
            let aas = real.a() * real.a_star();
            Ok(vec![
                real.a().shift(&a[0]),
                &aas - &real.a_star().scale(&a[0]),
            ])
        }
        _ => Err(ZeroDiagError::NoClosedForm { dim }),
    }
}

/// `I, A*, A, A A*, A* A`, checked to be independent.
pub fn x_space_basis(real: &LeonardRealization) -> Result<Vec<Matrix>, ZeroDiagError> {
    let n = real.d() + 1;
    let ctx = real.context();
    let gens = vec![
        Matrix::identity(ctx, n),
        real.a_star().clone(),
        real.a().clone(),
        real.a() * real.a_star(),
        real.a_star() * real.a(),
    ];
    let rank = Matrix::span_rank(ctx, &gens.iter().collect::<Vec<_>>());
    if rank != 5 {
        return Err(ZeroDiagError::DependenceDetected { rank });
    }
    Ok(gens)
}

/// Equal spans, by comparing ranks of each family with the rank of both.
pub fn same_span(ctx: &FieldContext, first: &[Matrix], second: &[Matrix]) -> bool {
    let r1 = Matrix::span_rank(ctx, &first.iter().collect::<Vec<_>>());
    let r2 = Matrix::span_rank(ctx, &second.iter().collect::<Vec<_>>());
    let both: Vec<&Matrix> = first.iter().chain(second).collect();
    r1 == r2 && Matrix::span_rank(ctx, &both) == r1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZSpaceReport {
    pub m: Matrix,
    pub l: Matrix,
    pub t: Matrix,
    pub rank_m: usize,
    pub dim_z: usize,
    pub coeff_basis: Vec<ZCoefficients>,
    pub matrix_basis: Vec<Matrix>,
}

/// `M`, `L`, `T`, the rank and the kernel basis for one realization.
pub fn z_space(real: &LeonardRealization, a: &[FieldElement]) -> Result<ZSpaceReport, ZeroDiagError> {
    let ts = real.array().theta_star();
    let d = real.d();
    let m = matrix_m(a, ts);
    let l = matrix_l(&compute_apm(a, ts), ts);
    let t = matrix_t(&a[0], &a[d], &ts[0], &ts[d]);
    let rank_m = rank_exact(&m);
    let dim_z = z_dimension(rank_m)?;
    let (coeff_basis, matrix_basis) = z_basis_kernel(&m, real)?.into_iter().unzip();
    Ok(ZSpaceReport {
        m,
        l,
        t,
        rank_m,
        dim_z,
        coeff_basis,
        matrix_basis,
    })
}
