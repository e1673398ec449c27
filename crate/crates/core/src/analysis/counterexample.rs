//! A diameter-two Leonard pair that is self-dual, has a nonzero zero
//! diagonal space, and still has no spin.
//!
//! If `W = sum g_i E_i` and `W* = sum g*_i E*_i` gave a spin pair, then
//! `W* W A* = A W* W`. Each entry of the difference is a bilinear form in
//! `(g, g*)`; five of them already force `g_0 g*_0 = 0`.

use super::AnalysisError;
use crate::field::{parse_element, FieldContext, FieldElement};
use crate::matrix::Matrix;
use crate::realization::{primitive_idempotents, verify_axioms_matrices, IdempotentKind};

const A_ROWS: [[i64; 3]; 3] = [[1, 0, 0], [1, 2, 0], [0, 1, 5]];
const A_STAR_ROWS: [[i64; 3]; 3] = [[1, -1, 0], [0, 2, -9], [0, 0, 5]];
const EIGENVALUES: [i64; 3] = [1, 2, 5];

const E_EXPECTED: [[[&str; 3]; 3]; 3] = [
    [["1", "0", "0"], ["-1", "0", "0"], ["1/4", "0", "0"]],
    [["0", "0", "0"], ["1", "1", "0"], ["-1/3", "-1/3", "0"]],
    [["0", "0", "0"], ["0", "0", "0"], ["1/12", "1/3", "1"]],
];
const E_STAR_EXPECTED: [[[&str; 3]; 3]; 3] = [
    [["1", "1", "9/4"], ["0", "0", "0"], ["0", "0", "0"]],
    [["0", "-1", "-3"], ["0", "1", "3"], ["0", "0", "0"]],
    [["0", "0", "3/4"], ["0", "0", "-3"], ["0", "0", "1"]],
];

/// Coefficient matrix `C[k][l]` of `g_k g*_l`.
type Coefficients = [[i64; 3]; 3];

/// The five equations, keyed by matrix entry.
const FORMS_EXPECTED: [((usize, usize), Coefficients); 5] = [
    ((2, 2), [[0, 0, 0], [0, 0, 1], [0, -1, 0]]),
    ((2, 1), [[0, 0, -3], [0, 0, 4], [0, -12, -1]]),
    ((2, 0), [[0, 3, -3], [0, 0, 4], [0, -3, -1]]),
    ((0, 1), [[-9, -4, -3], [0, 0, 0], [9, -12, 3]]),
    ((1, 0), [[-9, 0, 9], [-4, 0, -12], [-3, 0, 3]]),
];

/// One entry of `W* W A* - A W* W`, matched against its equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormMatch {
    pub entry: (usize, usize),
    pub computed: Matrix,
    pub expected: Matrix,
    /// `computed = scale * expected`.
    pub scale: FieldElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub a: Matrix,
    pub a_star: Matrix,
    pub e: Vec<Matrix>,
    pub e_star: Vec<Matrix>,
    /// Off-diagonal `(i, j)` pairs whose vanishing pattern was checked.
    pub pattern_pairs: usize,
    pub forms: Vec<FormMatch>,
    /// Whether `g0 g*0` is already a combination of the five forms. It is
    /// not: the contradiction needs the `g*_l` to be nonzero.
    pub linear_span: bool,
    /// The `l` with `g*_l g0 g*0` in the span of `{g*_m F : m, F}`. As
    /// `g*_l != 0`, this forces `g0 g*0 = 0`.
    pub multiplier: usize,
}

/// Index of `g_k g*_l g*_m` (`l <= m`) in the flattened cubic space.
fn cubic_index(k: usize, l: usize, m: usize) -> usize {
    let pair = match (l.min(m), l.max(m)) {
        (0, 0) => 0,
        (0, 1) => 1,
        (0, 2) => 2,
        (1, 1) => 3,
        (1, 2) => 4,
        _ => 5,
    };
    k * 6 + pair
}

/// Span test for `g0 g*0`, or for `g*_l g0 g*0` against every `g*_m F`.
fn target_in_span(ctx: &FieldContext, forms: &[&Matrix], multiplier: Option<usize>) -> bool {
    let (family, target) = match multiplier {
        None => {
            let family: Vec<Vec<FieldElement>> = forms.iter().map(|f| f.entries().to_vec()).collect();
            let mut target = vec![ctx.zero(); 9];
            target[0] = ctx.one();
            (family, target)
        }
        Some(l) => {
            let mut family = Vec::with_capacity(3 * forms.len());
            for m in 0..3 {
                for f in forms {
                    let mut v = vec![ctx.zero(); 18];
                    for k in 0..3 {
                        for n in 0..3 {
                            let idx = cubic_index(k, m, n);
                            v[idx] = &v[idx] + f.get(k, n);
                        }
                    }
                    family.push(v);
                }
            }
            let mut target = vec![ctx.zero(); 18];
            target[cubic_index(0, 0, l)] = ctx.one();
            (family, target)
        }
    };
    let rank = Matrix::from_rows(ctx, family.clone()).expect("uniform rows").rank();
    let mut with_target = family;
    with_target.push(target);
    Matrix::from_rows(ctx, with_target).expect("uniform rows").rank() == rank
}

fn mismatch(step: &str, detail: String) -> AnalysisError {
    AnalysisError::MismatchAtEntry {
        step: step.to_string(),
        detail,
    }
}

fn literal(ctx: &FieldContext, rows: &[[&str; 3]; 3]) -> Matrix {
    Matrix::from_fn(ctx, 3, 3, |r, c| parse_element(rows[r][c], ctx).expect("literal entries parse"))
}

fn int_matrix(ctx: &FieldContext, rows: &[[i64; 3]; 3]) -> Matrix {
    Matrix::from_fn(ctx, 3, 3, |r, c| ctx.from_i64(rows[r][c]))
}

fn match_idempotents(
    step: &str,
    computed: &[Matrix],
    expected: &[[[&str; 3]; 3]; 3],
    ctx: &FieldContext,
) -> Result<(), AnalysisError> {
    for (i, (got, want)) in computed.iter().zip(expected).enumerate() {
        let want = literal(ctx, want);
        for r in 0..3 {
            for c in 0..3 {
                if got.get(r, c) != want.get(r, c) {
                    return Err(mismatch(
                        step,
                        format!("{step}_{i} entry ({r},{c}): got {}, expected {}", got.get(r, c), want.get(r, c)),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Coefficient matrix of `g_k g*_l` in entry `(r, c)` of `W* W A* - A W* W`.
pub fn bilinear_form(a: &Matrix, a_star: &Matrix, e: &[Matrix], e_star: &[Matrix], entry: (usize, usize)) -> Matrix {
    let ctx = a.context();
    Matrix::from_fn(ctx, 3, 3, |k, l| {
        let ww = &e_star[l] * &e[k];
        let diff = &(&ww * a_star) - &(a * &ww);
        diff.get(entry.0, entry.1).clone()
    })
}

/// `computed = scale * expected` with a nonzero scale, or `None`.
fn proportional(computed: &Matrix, expected: &Matrix) -> Option<FieldElement> {
    let pivot = expected.entries().iter().position(|x| !x.is_zero())?;
    let scale = &computed.entries()[pivot] / &expected.entries()[pivot];
    (!scale.is_zero() && computed == &expected.scale(&scale)).then_some(scale)
}

pub fn counterexample_d2() -> Result<CounterexampleReport, AnalysisError> {
    let ctx = FieldContext::rationals();
    let a = int_matrix(&ctx, &A_ROWS);
    let a_star = int_matrix(&ctx, &A_STAR_ROWS);
    let eig: Vec<FieldElement> = EIGENVALUES.iter().map(|&x| ctx.from_i64(x)).collect();
    let e = primitive_idempotents(&a, &eig, IdempotentKind::E)?;
    let e_star = primitive_idempotents(&a_star, &eig, IdempotentKind::EStar)?;
    match_idempotents("E", e.matrices(), &E_EXPECTED, &ctx)?;
    match_idempotents("E*", e_star.matrices(), &E_STAR_EXPECTED, &ctx)?;

    let axioms = verify_axioms_matrices(&a, &a_star, &e, &e_star)
        .map_err(|err| mismatch("vanishing pattern", err.to_string()))?;

    let mut forms = Vec::with_capacity(FORMS_EXPECTED.len());
    for (entry, rows) in FORMS_EXPECTED {
        let computed = bilinear_form(&a, &a_star, e.matrices(), e_star.matrices(), entry);
        let expected = int_matrix(&ctx, &rows);
        let scale = proportional(&computed, &expected).ok_or_else(|| {
            mismatch(
                "bilinear form",
                format!("entry {entry:?}: computed {computed}, expected a multiple of {expected}"),
            )
        })?;
        forms.push(FormMatch {
            entry,
            computed,
            expected,
            scale,
        });
    }

    let computed: Vec<&Matrix> = forms.iter().map(|f| &f.computed).collect();
    let linear_span = target_in_span(&ctx, &computed, None);
    let multiplier = (0..3).find(|&l| target_in_span(&ctx, &computed, Some(l)));
    let Some(multiplier) = multiplier else {
        return Err(mismatch(
            "span",
            "no g*_l g0 g*0 lies in the span of the forms times g*_0, g*_1, g*_2".into(),
        ));
    };

    Ok(CounterexampleReport {
        a,
        a_star,
        e: e.matrices().to_vec(),
        e_star: e_star.matrices().to_vec(),
        pattern_pairs: axioms.pairs_checked,
        forms,
        linear_span,
        multiplier,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_all_displays() {
        let report = counterexample_d2().unwrap();
        assert!(!report.linear_span);
        assert_eq!(report.multiplier, 1);
        let q = FieldContext::rationals();
        assert_eq!(report.e[0].column(0), vec![q.one(), -q.one(), q.from_ratio(1, 4).unwrap()]);
        assert_eq!(report.forms.len(), 5);
    }

    #[test]
    fn detects_a_wrong_form() {
        let q = FieldContext::rationals();
        let wrong = int_matrix(&q, &[[0, 0, 0], [0, 0, 1], [0, 1, 0]]);
        let right = int_matrix(&q, &FORMS_EXPECTED[0].1);
        assert!(proportional(&right, &wrong).is_none());
        assert!(proportional(&right.scale(&q.from_i64(-2)), &right).is_some());
    }
}
