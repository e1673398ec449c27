//! Type-level tables as predicates on a [`TypeSpec`].

use std::fmt;

use super::AnalysisError;
use crate::field::FieldElement;
use crate::parray::{LeonardType, Param, ParameterArray, TypeSpec};
use crate::zerodiag::{APMData, RelationRow};

/// A row of the nonvanishing table: the condition under which `Z != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZCondition {
    /// The type always has `Z != 0`.
    Always,
    SStarEqR1Sq,
    SStarEqR2Sq,
    SStarEqRSq,
    SStarEqTwoR1,
    SStarEqTwoR2,
    SStarEqMinusTwoR1,
    SStarEqMinusTwoR2,
}

impl ZCondition {
    pub fn label(self) -> &'static str {
        match self {
            ZCondition::Always => "always",
            ZCondition::SStarEqR1Sq => "s* = r1^2",
            ZCondition::SStarEqR2Sq => "s* = r2^2",
            ZCondition::SStarEqRSq => "s* = r^2",
            ZCondition::SStarEqTwoR1 => "s* = 2r1",
            ZCondition::SStarEqTwoR2 => "s* = 2r2",
            ZCondition::SStarEqMinusTwoR1 => "s* = -2r1",
            ZCondition::SStarEqMinusTwoR2 => "s* = -2r2",
        }
    }

    /// Short token used in campaign cell keys.
    pub fn token(self) -> &'static str {
        match self {
            ZCondition::Always => "always",
            ZCondition::SStarEqR1Sq => "s*=r1^2",
            ZCondition::SStarEqR2Sq => "s*=r2^2",
            ZCondition::SStarEqRSq => "s*=r^2",
            ZCondition::SStarEqTwoR1 => "s*=2r1",
            ZCondition::SStarEqTwoR2 => "s*=2r2",
            ZCondition::SStarEqMinusTwoR1 => "s*=-2r1",
            ZCondition::SStarEqMinusTwoR2 => "s*=-2r2",
        }
    }

    /// The parameter `r` the condition is stated in, if any.
    pub fn r_param(self) -> Option<Param> {
        match self {
            ZCondition::Always => None,
            ZCondition::SStarEqRSq => Some(Param::R),
            ZCondition::SStarEqR1Sq | ZCondition::SStarEqTwoR1 | ZCondition::SStarEqMinusTwoR1 => Some(Param::R1),
            ZCondition::SStarEqR2Sq | ZCondition::SStarEqTwoR2 | ZCondition::SStarEqMinusTwoR2 => Some(Param::R2),
        }
    }

    /// The value `s*` must take for the condition, given `r`.
    pub fn target(self, r: &FieldElement) -> FieldElement {
        match self {
            ZCondition::Always => unreachable!("no target for an unconditional row"),
            ZCondition::SStarEqR1Sq | ZCondition::SStarEqR2Sq | ZCondition::SStarEqRSq => r.square(),
            ZCondition::SStarEqTwoR1 | ZCondition::SStarEqTwoR2 => r.scale(2),
            ZCondition::SStarEqMinusTwoR1 | ZCondition::SStarEqMinusTwoR2 => r.scale(-2),
        }
    }

    pub fn holds(self, spec: &TypeSpec) -> Result<bool, AnalysisError> {
        let Some(rp) = self.r_param() else {
            return Ok(true);
        };
        Ok(spec.require(Param::SStar)? == &self.target(spec.require(rp)?))
    }
}

impl fmt::Display for ZCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Rows of the nonvanishing table for one type; empty when `Z = 0` always.
pub fn z_conditions(kind: LeonardType) -> &'static [ZCondition] {
    use ZCondition::*;
    match kind {
        LeonardType::QRacah => &[SStarEqR1Sq, SStarEqR2Sq],
        LeonardType::QHahn => &[SStarEqRSq],
        LeonardType::Racah => &[SStarEqTwoR1, SStarEqTwoR2],
        LeonardType::BannaiIto => &[SStarEqMinusTwoR1, SStarEqMinusTwoR2],
        LeonardType::DualQKrawtchouk | LeonardType::Hahn | LeonardType::Krawtchouk => &[Always],
        _ => &[],
    }
}

/// `"<type>: <condition>"`.
pub fn condition_id(kind: LeonardType, cond: ZCondition) -> String {
    format!("{kind}: {cond}")
}

fn get(spec: &TypeSpec, p: Param) -> Result<FieldElement, AnalysisError> {
    Ok(spec.require(p)?.clone())
}

fn pow(x: &FieldElement, e: i64) -> Result<FieldElement, AnalysisError> {
    Ok(x.pow(e)?)
}

/// The factor multiplying the Q expression in the pi2 difference.
pub fn factor_for_type(spec: &TypeSpec) -> Result<FieldElement, AnalysisError> {
    let ctx = &spec.field;
    let d = spec.d as i64;
    let one = ctx.one();
    let sq = |p: Param| get(spec, p).map(|x| x.square());
    // h^2 h*^2 q^(-3-d) (q-1)^4 (q^2-1)^2 without the h parts
    let q_common = || -> Result<FieldElement, AnalysisError> {
        let q = get(spec, Param::Q)?;
        Ok(pow(&q, -3 - d)? * pow(&(&q - &one), 4)? * (&q.square() - &one).square())
    };
    let hh = || -> Result<FieldElement, AnalysisError> { Ok(sq(Param::H)? * sq(Param::HStar)?) };
    let zero = ctx.zero();
    Ok(match spec.kind {
        LeonardType::QRacah => {
            let ss = get(spec, Param::SStar)?;
            hh()? * q_common()? * (&ss - &sq(Param::R1)?) * (&ss - &sq(Param::R2)?) / &ss
        }
        LeonardType::QHahn => hh()? * q_common()? * (get(spec, Param::SStar)? - sq(Param::R)?),
        LeonardType::DualQHahn => -(hh()? * q_common()? * sq(Param::R)?),
        LeonardType::QuantumQKrawtchouk => -(sq(Param::HStar)? * q_common()? * sq(Param::R)?),
        LeonardType::QKrawtchouk => hh()? * q_common()? * get(spec, Param::SStar)?,
        LeonardType::AffineQKrawtchouk => -(hh()? * q_common()? * sq(Param::R)?),
        LeonardType::DualQKrawtchouk | LeonardType::Hahn | LeonardType::Krawtchouk => zero,
        LeonardType::Racah => {
            let ss = get(spec, Param::SStar)?;
            (hh()? * (&ss - &get(spec, Param::R1)?.scale(2)) * (&ss - &get(spec, Param::R2)?.scale(2))).scale(4)
        }
        LeonardType::DualHahn => -(sq(Param::H)? * sq(Param::SStar)?).scale(4),
        LeonardType::BannaiIto => {
            let ss = get(spec, Param::SStar)?;
            let sign = if d % 2 == 0 { -64 } else { 64 };
            (hh()? * (&ss + &get(spec, Param::R1)?.scale(2)) * (&ss + &get(spec, Param::R2)?.scale(2))).scale(sign)
        }
        LeonardType::Orphan => hh()? * (sq(Param::SStar)? + one),
    })
}

/// Whether `Z != 0`, with the first table row that applies.
pub fn z_nonzero_predicate(spec: &TypeSpec) -> Result<(bool, Option<ZCondition>), AnalysisError> {
    for &cond in z_conditions(spec.kind) {
        if cond.holds(spec)? {
            return Ok((true, Some(cond)));
        }
    }
    Ok((false, None))
}

/// `s = -q^(-d-1)`.
fn s_is_minus_q_power(spec: &TypeSpec) -> Result<bool, AnalysisError> {
    let q = get(spec, Param::Q)?;
    Ok(get(spec, Param::S)? == -pow(&q, -(spec.d as i64) - 1)?)
}

/// Whether the type and parameters match a row of the two-dimensional table.
pub fn dim2_predicate(spec: &TypeSpec) -> Result<bool, AnalysisError> {
    Ok(match spec.kind {
        LeonardType::QRacah => ZCondition::SStarEqR1Sq.holds(spec)? && s_is_minus_q_power(spec)?,
        LeonardType::DualQKrawtchouk => s_is_minus_q_power(spec)?,
        LeonardType::Hahn => get(spec, Param::SStar)? == get(spec, Param::R)?.scale(2),
        LeonardType::Krawtchouk => {
            get(spec, Param::S)? * get(spec, Param::SStar)? == get(spec, Param::R)?.scale(2)
        }
        LeonardType::BannaiIto => {
            spec.d.is_multiple_of(2)
                && ZCondition::SStarEqMinusTwoR1.holds(spec)?
                && get(spec, Param::S)? == spec.field.from_i64(spec.d as i64 + 1)
        }
        _ => false,
    })
}

/// Coefficients `(c-, c+)` with `a-_i c- = a+_i c+` for the row `cond`.
pub fn relation_row(spec: &TypeSpec, cond: ZCondition) -> Result<RelationRow, AnalysisError> {
    let ctx = &spec.field;
    let d = spec.d as i64;
    let one = ctx.one();
    let int = |n: i64| ctx.from_i64(n);
    let (minus, plus) = match (spec.kind, cond) {
        (LeonardType::QRacah, ZCondition::SStarEqR1Sq | ZCondition::SStarEqR2Sq)
        | (LeonardType::QHahn, ZCondition::SStarEqRSq) => {
            let q = get(spec, Param::Q)?;
            let r = get(spec, cond.r_param().expect("conditional row"))?;
            let qd = pow(&q, d)?;
            (
                &qd * (&r + &one) * (&r * &q + &one),
                (&r * &qd + &one) * (&r * &qd * &q + &one),
            )
        }
        (LeonardType::DualQKrawtchouk, ZCondition::Always) => (pow(&get(spec, Param::Q)?, d)?, one),
        (LeonardType::Racah, ZCondition::SStarEqTwoR1 | ZCondition::SStarEqTwoR2)
        | (LeonardType::Krawtchouk, ZCondition::Always) => (one.clone(), one),
        (LeonardType::Hahn, ZCondition::Always) => {
            let ss = get(spec, Param::SStar)?;
            (
                &ss * (&ss + int(2)),
                (&ss + int(2 * d)) * (&ss + int(2 * d + 2)),
            )
        }
        (LeonardType::BannaiIto, ZCondition::SStarEqMinusTwoR1 | ZCondition::SStarEqMinusTwoR2) => {
            let r = get(spec, cond.r_param().expect("conditional row"))?;
            match (d % 2 == 0, cond) {
                (true, ZCondition::SStarEqMinusTwoR1) => (&r + &one, &r + int(d + 1)),
                (true, _) => (r.clone(), &r + int(d)),
                (false, _) => (r.clone(), -(&r + int(d + 1))),
            }
        }
        _ => {
            return Err(AnalysisError::TableInconsistency {
                kind: spec.kind,
                detail: format!("no relation row for condition `{cond}`"),
            })
        }
    };
    Ok(RelationRow {
        label: condition_id(spec.kind, cond),
        minus_coeff: minus,
        plus_coeff: plus,
    })
}

/// Check the relation row for the spec against computed `a-`, `a+`.
pub fn relation_check(spec: &TypeSpec, apm: &APMData) -> Result<RelationRow, AnalysisError> {
    let (nonzero, cond) = z_nonzero_predicate(spec)?;
    let cond = match (nonzero, cond) {
        (true, Some(c)) => c,
        _ => return Err(AnalysisError::NoRelation(spec.kind)),
    };
    let row = relation_row(spec, cond)?;
    for (i, (m, p)) in apm.a_minus.iter().zip(&apm.a_plus).enumerate() {
        if m * &row.minus_coeff != p * &row.plus_coeff {
            return Err(AnalysisError::RelationFailure { label: row.label, index: i });
        }
    }
    Ok(row)
}

/// Self-duality from the type table.
pub fn self_dual_predicate(spec: &TypeSpec) -> Result<bool, AnalysisError> {
    if spec.theta0 != spec.theta_star0 {
        return Ok(false);
    }
    let eq = |a: Param, b: Param| -> Result<bool, AnalysisError> { Ok(get(spec, a)? == get(spec, b)?) };
    Ok(match spec.kind {
        LeonardType::QRacah | LeonardType::Racah | LeonardType::BannaiIto | LeonardType::Orphan => {
            eq(Param::H, Param::HStar)? && eq(Param::S, Param::SStar)?
        }
        LeonardType::AffineQKrawtchouk => eq(Param::H, Param::HStar)?,
        LeonardType::Krawtchouk => eq(Param::S, Param::SStar)?,
        _ => false,
    })
}

/// Self-duality from the array: `theta = theta*`. When that holds the second
/// split sequence must read the same reversed; a failure there is reported.
pub fn self_dual_array_check(p: &ParameterArray) -> Result<bool, AnalysisError> {
    if p.theta() != p.theta_star() {
        return Ok(false);
    }
    let phi2 = p.phi2();
    if phi2.iter().ne(phi2.iter().rev()) {
        return Err(AnalysisError::SelfDualPhi2);
    }
    Ok(true)
}

/// Spin from the self-dual table: conditions on `s` rather than `s*`.
pub fn spin_table_predicate(spec: &TypeSpec) -> Result<bool, AnalysisError> {
    if !self_dual_predicate(spec)? {
        return Ok(false);
    }
    let r_is = |p: Param, f: &dyn Fn(&FieldElement) -> FieldElement| -> Result<bool, AnalysisError> {
        Ok(get(spec, Param::S)? == f(&get(spec, p)?))
    };
    let sq = |r: &FieldElement| r.square();
    let two = |r: &FieldElement| r.scale(2);
    let minus_two = |r: &FieldElement| r.scale(-2);
    Ok(match spec.kind {
        LeonardType::Krawtchouk => true,
        LeonardType::QRacah => r_is(Param::R1, &sq)? || r_is(Param::R2, &sq)?,
        LeonardType::Racah => r_is(Param::R1, &two)? || r_is(Param::R2, &two)?,
        LeonardType::BannaiIto => r_is(Param::R1, &minus_two)? || r_is(Param::R2, &minus_two)?,
        _ => false,
    })
}

/// Spin as self-dual and `Z != 0`, cross-checked against the self-dual table.
pub fn spin_predicate(spec: &TypeSpec) -> Result<bool, AnalysisError> {
    let via_z = self_dual_predicate(spec)? && z_nonzero_predicate(spec)?.0;
    let via_table = spin_table_predicate(spec)?;
    if via_z != via_table {
        return Err(AnalysisError::TableInconsistency {
            kind: spec.kind,
            detail: format!("spin via Z says {via_z}, self-dual table says {via_table}"),
        });
    }
    Ok(via_z)
}

/// `a-_i a+_j = a+_i a-_j` for all `0 <= i, j <= d`.
pub fn apm_product_identity(apm: &APMData) -> bool {
    let n = apm.a_minus.len();
    (0..n).all(|i| {
        (0..n).all(|j| &apm.a_minus[i] * &apm.a_plus[j] == &apm.a_plus[i] * &apm.a_minus[j])
    })
}

/// Predicate outcomes for one spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateReport {
    pub z_nonzero: bool,
    pub dim2: bool,
    pub self_dual: bool,
    pub spin: bool,
    /// `"<type>: <condition>"` for the table row that made `Z != 0`.
    pub condition: Option<String>,
}

pub fn predicate_report(spec: &TypeSpec) -> Result<PredicateReport, AnalysisError> {
    let (z_nonzero, cond) = z_nonzero_predicate(spec)?;
    Ok(PredicateReport {
        z_nonzero,
        dim2: dim2_predicate(spec)?,
        self_dual: self_dual_predicate(spec)?,
        spin: spin_predicate(spec)?,
        condition: cond.map(|c| condition_id(spec.kind, c)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;
    use crate::parray::build_parameter_array;

    fn q() -> FieldContext {
        FieldContext::rationals()
    }

    fn kraw(s: i64, ss: i64, r: (i64, i64)) -> TypeSpec {
        let ctx = q();
        TypeSpec::new(LeonardType::Krawtchouk, 3, &ctx)
            .with_int(Param::S, s)
            .with_int(Param::SStar, ss)
            .with(Param::R, ctx.from_ratio(r.0, r.1).unwrap())
    }

    #[test]
    fn factor_rows() {
        let ctx = q();
        let dqk = TypeSpec::new(LeonardType::DualQKrawtchouk, 3, &ctx)
            .with_int(Param::Q, 3)
            .with_int(Param::H, 1)
            .with_int(Param::HStar, 1)
            .with_int(Param::S, 2);
        assert!(factor_for_type(&dqk).unwrap().is_zero());
        let dh = TypeSpec::new(LeonardType::DualHahn, 3, &ctx)
            .with_int(Param::H, 3)
            .with_int(Param::S, 5)
            .with_int(Param::SStar, 2)
            .with_int(Param::R, 7);
        assert_eq!(factor_for_type(&dh).unwrap(), ctx.from_i64(-4 * 9 * 4));
        let bi = TypeSpec::new(LeonardType::BannaiIto, 4, &ctx)
            .with_int(Param::H, 1)
            .with_int(Param::HStar, 2)
            .with_int(Param::S, 3)
            .with_int(Param::SStar, 5)
            .with_int(Param::R1, 1)
            .with_int(Param::R2, 2);
        // 64 (-1)^5 * 1 * 4 * (5 + 2)(5 + 4)
        assert_eq!(factor_for_type(&bi).unwrap(), ctx.from_i64(-64 * 4 * 7 * 9));
    }

    #[test]
    fn nonzero_rows() {
        let ctx = q();
        assert_eq!(
            z_nonzero_predicate(&kraw(1, 1, (2, 1))).unwrap(),
            (true, Some(ZCondition::Always))
        );
        let qr = TypeSpec::new(LeonardType::QRacah, 3, &ctx)
            .with_int(Param::Q, 2)
            .with_int(Param::H, 1)
            .with_int(Param::HStar, 1)
            .with_int(Param::S, 3)
            .with_int(Param::SStar, 9)
            .with_int(Param::R1, 5)
            .with_int(Param::R2, 3);
        let (nz, cond) = z_nonzero_predicate(&qr).unwrap();
        assert!(nz);
        assert_eq!(condition_id(qr.kind, cond.unwrap()), "q-racah: s* = r2^2");
        let orphan_ctx = FieldContext::extension(2, 2).unwrap();
        let t = orphan_ctx.generator().unwrap();
        let orphan = TypeSpec::new(LeonardType::Orphan, 3, &orphan_ctx)
            .with(Param::H, orphan_ctx.one())
            .with(Param::HStar, orphan_ctx.one())
            .with(Param::S, t.clone())
            .with(Param::SStar, t.clone())
            .with(Param::R, t);
        assert_eq!(z_nonzero_predicate(&orphan).unwrap(), (false, None));
    }

    #[test]
    fn dim2_rows() {
        assert!(dim2_predicate(&kraw(1, 1, (1, 2))).unwrap());
        assert!(!dim2_predicate(&kraw(1, 1, (1, 1))).unwrap());
        let ctx = q();
        let racah = TypeSpec::new(LeonardType::Racah, 3, &ctx)
            .with_int(Param::H, 1)
            .with_int(Param::HStar, 1)
            .with_int(Param::S, 1)
            .with_int(Param::SStar, 2)
            .with_int(Param::R1, 1)
            .with_int(Param::R2, 6);
        assert!(!dim2_predicate(&racah).unwrap());
    }

    #[test]
    fn self_dual_and_spin() {
        let sd = kraw(1, 1, (2, 1));
        assert!(self_dual_predicate(&sd).unwrap());
        assert!(spin_predicate(&sd).unwrap());
        let p = build_parameter_array(&sd).unwrap();
        assert!(self_dual_array_check(&p).unwrap());
        let mut shifted = sd.clone();
        shifted.theta0 = q().one();
        assert!(!self_dual_predicate(&shifted).unwrap());
        let qh = TypeSpec::new(LeonardType::QHahn, 3, &q())
            .with_int(Param::Q, 2)
            .with_int(Param::H, 1)
            .with_int(Param::HStar, 1)
            .with_int(Param::SStar, 4)
            .with_int(Param::R, 2);
        assert!(!self_dual_predicate(&qh).unwrap());
    }

    #[test]
    fn krawtchouk_relation_is_equality() {
        let spec = kraw(1, 1, (2, 1));
        let row = relation_row(&spec, ZCondition::Always).unwrap();
        assert!(row.minus_coeff.is_one() && row.plus_coeff.is_one());
    }
}
