//! The full pipeline for one spec: array, matrices, zero diagonal space,
//! table predicates, and every cross-check between them.

use super::pi2::{pi2_delta, verify_pi2_with, Pi2Witness};
use super::tables::{
    apm_product_identity, factor_for_type, predicate_report, relation_check,
    self_dual_array_check, self_dual_predicate, spin_table_predicate, PredicateReport,
};
use super::AnalysisError;
use crate::field::FieldElement;
use crate::matrix::Matrix;
use crate::parray::{build_parameter_array, ParameterArray, TypeSpec};
use crate::realization::{
    closed_intersection_a, intersection_a_closed, intersection_a_trace, realize_split,
    standard_basis_rep, IntersectionNumbers, LeonardRealization,
};
use crate::zerodiag::{
    compute_apm, has_zero_diagonal, matrix_m, same_span, x_space_basis, z_basis_closed, z_space,
    APMData, RelationRow, ZSpaceReport,
};

/// Outcome of one named cross-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone)]
pub struct InstanceAnalysis {
    pub spec: TypeSpec,
    pub array: ParameterArray,
    pub realization: LeonardRealization,
    pub a_closed: Vec<FieldElement>,
    pub a_trace: Vec<FieldElement>,
    pub numbers: IntersectionNumbers,
    pub apm: APMData,
    pub z: ZSpaceReport,
    pub predicates: PredicateReport,
    pub relation: Option<RelationRow>,
    pub closed_basis: Vec<Matrix>,
    pub pi2: Vec<Pi2Witness>,
    pub checks: Vec<Check>,
}

impl InstanceAnalysis {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: &'static str, passed: bool) {
        self.0.push(Check { name, passed, detail: None });
    }

    fn push_with(&mut self, name: &'static str, passed: bool, detail: impl FnOnce() -> String) {
        let detail = (!passed).then(detail);
        self.0.push(Check { name, passed, detail });
    }

    fn push_err(&mut self, name: &'static str, err: &AnalysisError) {
        self.0.push(Check {
            name,
            passed: false,
            detail: Some(err.to_string()),
        });
    }
}

/// Rank of `M` computed from an array's own closed-form `a`.
fn rank_m_of(p: &ParameterArray) -> usize {
    matrix_m(&intersection_a_closed(p), p.theta_star()).rank()
}

/// Run the whole pipeline. Errors are reserved for invalid specs and for
/// realizations that cannot be built at all; disagreements between routes
/// are recorded as failed checks.
pub fn analyze_instance(spec: &TypeSpec) -> Result<InstanceAnalysis, AnalysisError> {
    let array = build_parameter_array(spec)?;
    let ctx = array.context().clone();
    let d = array.d();
    let ts = array.theta_star().to_vec();
    let real = realize_split(&array);
    let e = real.e()?;
    let e_star = real.e_star()?;
    let mut checks = Checks::default();

    let a_closed = intersection_a_closed(&array);
    let a_trace = intersection_a_trace(&real, e_star);
    checks.push("trace_vs_closed_a", a_trace == a_closed);
    let (_, numbers) = standard_basis_rep(&real, e, e_star)?;
    checks.push("standard_basis_a", numbers.a == a_closed);

    let apm = compute_apm(&a_closed, &ts);
    let z = z_space(&real, &a_closed)?;
    checks.push("l_equals_tm", z.l == &z.t * &z.m);
    checks.push("rank_l_equals_rank_m", z.l.rank() == z.rank_m);
    checks.push("det_t", z.t.determinant() == &ts[0] - &ts[d]);
    let commutator = &(real.a() * real.a_star()) - &(real.a_star() * real.a());
    checks.push("commutator_zero_diagonal", has_zero_diagonal(&commutator, e_star));
    match x_space_basis(&real) {
        Ok(_) => checks.push("x_space_independent", true),
        Err(err) => checks.push_err("x_space_independent", &err.into()),
    }

    let predicates = predicate_report(spec)?;
    let dim = z.dim_z;
    checks.push_with("z_nonzero_vs_rank", predicates.z_nonzero == (dim > 0), || {
        format!("table says {}, dim Z = {dim}", predicates.z_nonzero)
    });
    checks.push_with("dim2_vs_rank", predicates.dim2 == (dim == 2), || {
        format!("table says {}, dim Z = {dim}", predicates.dim2)
    });
    let constant_a = a_closed.iter().all(|x| x == &a_closed[0]);
    checks.push("dim2_vs_constant_a", constant_a == (dim == 2));

    let mut relation = None;
    if predicates.z_nonzero {
        match relation_check(spec, &apm) {
            Ok(row) => {
                checks.push("relation", true);
                relation = Some(row);
            }
            Err(err) => checks.push_err("relation", &err),
        }
    }
    let closed_basis = if dim == 1 && relation.is_none() {
        checks.push_with("closed_basis", false, || "no relation row for a one-dimensional Z".into());
        Vec::new()
    } else {
        match z_basis_closed(&real, &a_closed, dim, relation.as_ref()) {
            Ok(basis) => basis,
            Err(err) => {
                checks.push_err("closed_basis", &err.into());
                Vec::new()
            }
        }
    };
    if dim > 0 {
        let nonzero = closed_basis.iter().all(|x| !x.is_zero());
        let zero_diag = closed_basis.iter().all(|x| has_zero_diagonal(x, e_star));
        checks.push("closed_basis_nonzero", nonzero && closed_basis.len() == dim);
        checks.push("closed_basis_zero_diagonal", zero_diag);
        checks.push("kernel_vs_closed_basis", same_span(&ctx, &z.matrix_basis, &closed_basis));
    }

    let pi2 = match factor_for_type(spec).and_then(|f| verify_pi2_with(&a_closed, &ts, &f)) {
        Ok(w) => {
            checks.push("pi2", true);
            w
        }
        Err(err) => {
            checks.push_err("pi2", &err);
            Vec::new()
        }
    };

    // Three routes to Z != 0: the kernel, the product identity, the pi2 deltas.
    let product = apm_product_identity(&apm);
    let deltas_vanish = (1..d).all(|i| {
        (1..d).all(|j| pi2_delta(&a_closed, &ts, i, j).is_ok_and(|x| x.is_zero()))
    });
    checks.push_with(
        "apm_routes",
        product == (dim > 0) && deltas_vanish == (dim > 0),
        || format!("dim Z = {dim}, product identity {product}, deltas vanish {deltas_vanish}"),
    );

    match self_dual_array_check(&array) {
        Ok(by_array) => {
            let by_table = self_dual_predicate(spec)?;
            checks.push_with("self_dual_routes", by_array == by_table, || {
                format!("array says {by_array}, table says {by_table}")
            });
            let by_z = by_array && dim > 0;
            let by_spin_table = spin_table_predicate(spec)?;
            let by_product = by_array && product;
            checks.push_with(
                "spin_routes",
                by_z == by_spin_table && by_z == by_product && by_z == predicates.spin,
                || format!("self-dual and Z: {by_z}, table: {by_spin_table}, product: {by_product}"),
            );
        }
        Err(err) => checks.push_err("self_dual_routes", &err),
    }

    checks.push("transform_invariance", transform_invariance(&array, &a_closed, z.rank_m));

    Ok(InstanceAnalysis {
        spec: spec.clone(),
        array,
        realization: real.clone(),
        a_closed,
        a_trace,
        numbers,
        apm,
        z,
        predicates,
        relation,
        closed_basis,
        pi2,
        checks: checks.0,
    })
}

/// `rank M` is unchanged by the down and double-down transforms and by affine
/// changes, and the recomputed `a` moves as expected under each.
fn transform_invariance(p: &ParameterArray, a: &[FieldElement], rank: usize) -> bool {
    let ctx = p.context();
    let down = p.down();
    let a_down = intersection_a_closed(&down);
    let reversed: Vec<FieldElement> = a.iter().rev().cloned().collect();
    if a_down != reversed || rank_m_of(&down) != rank {
        return false;
    }
    let dd = p.double_down();
    if intersection_a_closed(&dd) != a || rank_m_of(&dd) != rank {
        return false;
    }
    let pick = |n: i64| {
        let x = ctx.from_i64(n);
        if x.is_zero() {
            ctx.one()
        } else {
            x
        }
    };
    let (xi, zeta, xi_star, zeta_star) = (pick(2), ctx.one(), pick(3), -ctx.one());
    let Ok(aff) = p.affine(&xi, &zeta, &xi_star, &zeta_star) else {
        return false;
    };
    let a_aff = closed_intersection_a(aff.theta(), aff.theta_star(), aff.phi());
    let expected: Vec<FieldElement> = a.iter().map(|x| &xi * x + &zeta).collect();
    a_aff == expected && rank_m_of(&aff) == rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;
    use crate::parray::{LeonardType, Param};

    #[test]
    fn krawtchouk_r2_pipeline() {
        let ctx = FieldContext::rationals();
        let spec = TypeSpec::new(LeonardType::Krawtchouk, 3, &ctx)
            .with_int(Param::S, 1)
            .with_int(Param::SStar, 1)
            .with_int(Param::R, 2);
        let out = analyze_instance(&spec).unwrap();
        assert!(out.all_passed(), "{:?}", out.failures().collect::<Vec<_>>());
        assert_eq!(out.z.dim_z, 1);
        assert!(out.predicates.spin);
        let expect: Vec<_> = [6, 3, 0, -3].iter().map(|&x| ctx.from_i64(x)).collect();
        assert_eq!(out.a_closed, expect);
    }

    #[test]
    fn krawtchouk_dim2_has_constant_a() {
        let ctx = FieldContext::rationals();
        let spec = TypeSpec::new(LeonardType::Krawtchouk, 3, &ctx)
            .with_int(Param::S, 1)
            .with_int(Param::SStar, 1)
            .with(Param::R, ctx.from_ratio(1, 2).unwrap());
        let out = analyze_instance(&spec).unwrap();
        assert!(out.all_passed(), "{:?}", out.failures().collect::<Vec<_>>());
        assert_eq!(out.z.dim_z, 2);
        assert!(out.a_closed.iter().all(|x| x == &ctx.from_ratio(3, 2).unwrap()));
    }
}
