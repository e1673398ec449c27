//! Random valid specs, optionally forced onto a measure-zero table row.

use std::fmt;

use rand::Rng;

use super::tables::{z_conditions, ZCondition};
use super::AnalysisError;
use crate::field::{sample_element, FieldContext, FieldElement};
use crate::parray::{build_parameter_array, LeonardType, Param, TypeSpec};

/// Resampling budget per instance. Valid orphan points over GF(4) are rare
/// (about one draw in thirty), so the budget is generous.
pub const MAX_ATTEMPTS: usize = 1000;

/// Which constraint is substituted before the remaining parameters are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Forcing {
    None,
    Condition(ZCondition),
    Dim2,
    SelfDual,
    /// Self-dual and on a nonvanishing row.
    Spin,
}

impl Forcing {
    pub fn token(self) -> String {
        match self {
            Forcing::None => "none".into(),
            Forcing::Condition(c) => c.token().into(),
            Forcing::Dim2 => "dim2".into(),
            Forcing::SelfDual => "self-dual".into(),
            Forcing::Spin => "spin".into(),
        }
    }

    /// Whether this forcing has a sampler for the type at diameter `d`.
    pub fn applies(self, kind: LeonardType, d: usize) -> bool {
        use LeonardType::*;
        match self {
            Forcing::None => true,
            Forcing::Condition(ZCondition::Always) => false,
            Forcing::Condition(c) => z_conditions(kind).contains(&c),
            Forcing::Dim2 => match kind {
                QRacah | DualQKrawtchouk | Hahn | Krawtchouk => true,
                BannaiIto => d.is_multiple_of(2),
                _ => false,
            },
            Forcing::SelfDual => matches!(kind, QRacah | AffineQKrawtchouk | Racah | Krawtchouk | BannaiIto | Orphan),
            Forcing::Spin => matches!(kind, QRacah | Racah | Krawtchouk | BannaiIto),
        }
    }
}

impl fmt::Display for Forcing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// Every forcing that applies to `kind` at `d`, unconditioned first.
pub fn forcings_for(kind: LeonardType, d: usize) -> Vec<Forcing> {
    let mut out = vec![Forcing::None];
    out.extend(
        z_conditions(kind)
            .iter()
            .map(|&c| Forcing::Condition(c))
            .filter(|f| f.applies(kind, d)),
    );
    out.extend(
        [Forcing::Dim2, Forcing::SelfDual, Forcing::Spin]
            .into_iter()
            .filter(|f| f.applies(kind, d)),
    );
    out
}

/// Fields the campaign samples a type over.
pub fn sampling_fields(kind: LeonardType) -> Vec<FieldContext> {
    match kind {
        LeonardType::Orphan => vec![
            FieldContext::extension(2, 2).expect("GF(4) exists"),
            FieldContext::extension(2, 3).expect("GF(8) exists"),
        ],
        _ => vec![FieldContext::rationals()],
    }
}

/// Draw a valid spec, resampling up to [`MAX_ATTEMPTS`] times.
pub fn sample_spec<R: Rng + ?Sized>(
    kind: LeonardType,
    d: usize,
    field: &FieldContext,
    forcing: Forcing,
    rng: &mut R,
    height: u32,
) -> Result<TypeSpec, AnalysisError> {
    if !forcing.applies(kind, d) {
        return Err(AnalysisError::ForcingNotApplicable { kind, forcing: forcing.token() });
    }
    for _ in 0..MAX_ATTEMPTS {
        let Some(spec) = draw(kind, d, field, forcing, rng, height) else {
            continue;
        };
        if build_parameter_array(&spec).is_ok() {
            return Ok(spec);
        }
    }
    Err(AnalysisError::SamplingExhausted {
        kind,
        d,
        attempts: MAX_ATTEMPTS,
    })
}

/// One candidate; `None` when a substitution would divide by zero.
fn draw<R: Rng + ?Sized>(
    kind: LeonardType,
    d: usize,
    ctx: &FieldContext,
    forcing: Forcing,
    rng: &mut R,
    height: u32,
) -> Option<TypeSpec> {
    let mut spec = TypeSpec::new(kind, d, ctx);
    for &p in kind.params() {
        spec.set(p, sample_element(ctx, rng, height));
    }
    spec.theta0 = sample_element(ctx, rng, height);
    spec.theta_star0 = sample_element(ctx, rng, height);

    let get = |spec: &TypeSpec, p: Param| spec.param(p).expect("sampled").clone();
    let int = |n: i64| ctx.from_i64(n);
    let dd = d as i64;

    if matches!(forcing, Forcing::SelfDual | Forcing::Spin) {
        spec.theta_star0 = spec.theta0.clone();
        for (p, star) in [(Param::H, Param::HStar), (Param::S, Param::SStar)] {
            if kind.params().contains(&p) && kind.params().contains(&star) {
                let v = get(&spec, p);
                spec.set(star, v);
            }
        }
    }

    match (kind, forcing) {
        (LeonardType::QRacah, _) => {
            let q = get(&spec, Param::Q);
            let qd1 = q.pow(dd + 1).ok()?;
            match forcing {
                Forcing::Condition(ZCondition::SStarEqR2Sq) => {
                    let r2 = get(&spec, Param::R2);
                    spec.set(Param::SStar, r2.square());
                }
                Forcing::Condition(_) => {
                    let r1 = get(&spec, Param::R1);
                    spec.set(Param::SStar, r1.square());
                }
                Forcing::Dim2 => {
                    let r1 = get(&spec, Param::R1);
                    spec.set(Param::SStar, r1.square());
                    spec.set(Param::S, -q.pow(-dd - 1).ok()?);
                }
                Forcing::Spin => {
                    let r1sq = get(&spec, Param::R1).square();
                    spec.set(Param::S, r1sq.clone());
                    spec.set(Param::SStar, r1sq);
                }
                _ => {}
            }
            let prod = get(&spec, Param::S) * get(&spec, Param::SStar) * qd1;
            if forcing == Forcing::Condition(ZCondition::SStarEqR2Sq) {
                let r1 = &prod / &nonzero(get(&spec, Param::R2))?;
                spec.set(Param::R1, r1);
            } else {
                let r2 = &prod / &nonzero(get(&spec, Param::R1))?;
                spec.set(Param::R2, r2);
            }
        }
        (LeonardType::QHahn, Forcing::Condition(ZCondition::SStarEqRSq)) => {
            let r = get(&spec, Param::R);
            spec.set(Param::SStar, r.square());
        }
        (LeonardType::DualQKrawtchouk, Forcing::Dim2) => {
            let q = nonzero(get(&spec, Param::Q))?;
            spec.set(Param::S, -q.pow(-dd - 1).ok()?);
        }
        (LeonardType::Racah | LeonardType::BannaiIto, _) => {
            // Racah: r1 + r2 = s + s* + d + 1; Bannai/Ito: r1 + r2 = -s - s* + d + 1.
            let sign = if kind == LeonardType::Racah { 1 } else { -1 };
            let target = |r: &FieldElement| match kind {
                LeonardType::Racah => r.scale(2),
                _ => r.scale(-2),
            };
            let forced_r2 = forcing == Forcing::Condition(ZCondition::SStarEqTwoR2)
                || forcing == Forcing::Condition(ZCondition::SStarEqMinusTwoR2);
            match forcing {
                Forcing::Condition(_) if forced_r2 => {
                    let r2 = get(&spec, Param::R2);
                    spec.set(Param::SStar, target(&r2));
                }
                Forcing::Condition(_) => {
                    let r1 = get(&spec, Param::R1);
                    spec.set(Param::SStar, target(&r1));
                }
                Forcing::Dim2 => {
                    let r1 = get(&spec, Param::R1);
                    spec.set(Param::SStar, target(&r1));
                    spec.set(Param::S, int(dd + 1));
                }
                Forcing::Spin => {
                    let s = target(&get(&spec, Param::R1));
                    spec.set(Param::S, s.clone());
                    spec.set(Param::SStar, s);
                }
                _ => {}
            }
            let sum = (get(&spec, Param::S) + get(&spec, Param::SStar)).scale(sign) + int(dd + 1);
            if forced_r2 {
                let r1 = &sum - &get(&spec, Param::R2);
                spec.set(Param::R1, r1);
            } else {
                let r2 = &sum - &get(&spec, Param::R1);
                spec.set(Param::R2, r2);
            }
        }
        (LeonardType::Hahn, Forcing::Dim2) => {
            let r = get(&spec, Param::R);
            spec.set(Param::SStar, r.scale(2));
        }
        (LeonardType::Krawtchouk, Forcing::Dim2) => {
            let ss = get(&spec, Param::S) * get(&spec, Param::SStar);
            spec.set(Param::R, &ss / &int(2));
        }
        _ => {}
    }
    Some(spec)
}

fn nonzero(x: FieldElement) -> Option<FieldElement> {
    (!x.is_zero()).then_some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::tables::{dim2_predicate, self_dual_predicate, spin_predicate, z_nonzero_predicate};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn forced_samples_land_on_their_rows() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for kind in LeonardType::ALL {
            for d in 3..=4 {
                for field in sampling_fields(kind) {
                    if kind == LeonardType::Orphan && d != 3 {
                        continue;
                    }
                    for forcing in forcings_for(kind, d) {
                        let spec = sample_spec(kind, d, &field, forcing, &mut rng, 12)
                            .unwrap_or_else(|e| panic!("{kind} d={d} {forcing}: {e}"));
                        match forcing {
                            Forcing::Condition(c) => assert!(c.holds(&spec).unwrap()),
                            Forcing::Dim2 => assert!(dim2_predicate(&spec).unwrap(), "{kind} dim2"),
                            Forcing::SelfDual => assert!(self_dual_predicate(&spec).unwrap()),
                            Forcing::Spin => {
                                assert!(spin_predicate(&spec).unwrap(), "{kind} spin");
                                assert!(z_nonzero_predicate(&spec).unwrap().0);
                            }
                            Forcing::None => {}
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inapplicable_forcing_is_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let err = sample_spec(
            LeonardType::DualHahn,
            3,
            &FieldContext::rationals(),
            Forcing::Dim2,
            &mut rng,
            12,
        );
        assert!(matches!(err, Err(AnalysisError::ForcingNotApplicable { .. })));
        assert!(!Forcing::Dim2.applies(LeonardType::BannaiIto, 5));
    }
}
