//! Per-family clause checks and closed-form sequences.
//!
//! Clause identifiers are `"<type> (<roman numeral>)"`, numbered in the order
//! the constraints of each family are usually listed.

use std::fmt;

use super::{LeonardType, Param, ParameterArray, SpecError, TypeSpec};
use crate::field::{FieldContext, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub clause: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.clause, self.detail)
    }
}

struct Clauses<'a> {
    kind: LeonardType,
    ctx: &'a FieldContext,
    out: Vec<Violation>,
}

impl<'a> Clauses<'a> {
    fn fail(&mut self, clause: &str, detail: String) {
        self.out.push(Violation {
            clause: format!("{} ({clause})", self.kind),
            detail,
        });
    }

    fn nonzero(&mut self, clause: &str, spec: &TypeSpec, params: &[Param]) {
        for &p in params {
            if spec.param(p).is_some_and(FieldElement::is_zero) {
                self.fail(clause, format!("{p} must be nonzero"));
            }
        }
    }

    /// Record a violation when `lhs == rhs`.
    fn distinct(&mut self, clause: &str, lhs: &FieldElement, rhs: &FieldElement, what: impl FnOnce() -> String) {
        if lhs == rhs {
            self.fail(clause, what());
        }
    }

    fn int(&self, n: i64) -> FieldElement {
        self.ctx.from_i64(n)
    }
}

fn pow(x: &FieldElement, e: i64) -> FieldElement {
    x.pow(e).expect("q is nonzero after validation")
}

/// Check every clause of the spec's family. Errors are reserved for specs that
/// cannot be judged at all (missing or foreign parameters, wrong
/// characteristic, unsupported diameter).
pub fn validate_spec(spec: &TypeSpec) -> Result<Vec<Violation>, SpecError> {
    let kind = spec.kind;
    if spec.d < 3 {
        return Err(SpecError::DiameterTooSmall(spec.d));
    }
    for &p in kind.params() {
        spec.require(p)?;
    }
    if let Some(&param) = spec.params().keys().find(|p| !kind.params().contains(p)) {
        return Err(SpecError::UnexpectedParam { kind, param });
    }
    let ctx = &spec.field;
    let foreign = spec
        .params()
        .values()
        .chain([&spec.theta0, &spec.theta_star0])
        .find(|x| x.context() != ctx);
    if let Some(x) = foreign {
        return Err(crate::field::FieldError::ContextMismatch {
            left: ctx.to_string(),
            right: x.context().to_string(),
        }
        .into());
    }
    check_characteristic(spec)?;

    let mut c = Clauses {
        kind,
        ctx,
        out: Vec::new(),
    };
    let d = spec.d as i64;
    let v = |p: Param| spec.param(p).expect("presence checked").clone();
    let one = ctx.one();
    match kind {
        LeonardType::QRacah => {
            c.nonzero("i", spec, kind.params());
            if !c.out.is_empty() {
                return Ok(c.out);
            }
            let (q, s, ss, r1, r2) = (v(Param::Q), v(Param::S), v(Param::SStar), v(Param::R1), v(Param::R2));
            if &r1 * &r2 != &s * &ss * pow(&q, d + 1) {
                c.fail("ii", "r1 r2 must equal s s* q^(d+1)".into());
            }
            for i in 1..=d {
                let qi = pow(&q, i);
                c.distinct("iii", &qi, &one, || format!("q^{i} = 1"));
                c.distinct("iii", &(&r1 * &qi), &one, || format!("r1 q^{i} = 1"));
                c.distinct("iii", &(&r2 * &qi), &one, || format!("r2 q^{i} = 1"));
                c.distinct("iii", &(&ss * &qi / &r1), &one, || format!("s* q^{i}/r1 = 1"));
                c.distinct("iii", &(&ss * &qi / &r2), &one, || format!("s* q^{i}/r2 = 1"));
            }
            for i in 2..=2 * d {
                let qi = pow(&q, i);
                c.distinct("iv", &(&s * &qi), &one, || format!("s q^{i} = 1"));
                c.distinct("iv", &(&ss * &qi), &one, || format!("s* q^{i} = 1"));
            }
        }
        LeonardType::QHahn | LeonardType::DualQHahn => {
            c.nonzero("i", spec, kind.params());
            if !c.out.is_empty() {
                return Ok(c.out);
            }
            let (sp, name) = if kind == LeonardType::QHahn {
                (Param::SStar, "s*")
            } else {
                (Param::S, "s")
            };
            let (q, s, r) = (v(Param::Q), v(sp), v(Param::R));
            for i in 1..=d {
                let qi = pow(&q, i);
                c.distinct("ii", &qi, &one, || format!("q^{i} = 1"));
                c.distinct("ii", &(&r * &qi), &one, || format!("r q^{i} = 1"));
                c.distinct("ii", &(&s * &qi / &r), &one, || format!("{name} q^{i}/r = 1"));
            }
            for i in 2..=2 * d {
                c.distinct("iii", &(&s * pow(&q, i)), &one, || format!("{name} q^{i} = 1"));
            }
        }
        LeonardType::QuantumQKrawtchouk => {
            c.nonzero("i", spec, kind.params());
            if !c.out.is_empty() {
                return Ok(c.out);
            }
            let (q, s, r) = (v(Param::Q), v(Param::S), v(Param::R));
            for i in 1..=d {
                let qi = pow(&q, i);
                c.distinct("ii", &qi, &one, || format!("q^{i} = 1"));
                c.distinct("ii", &(&s * &qi / &r), &one, || format!("s q^{i}/r = 1"));
            }
        }
        LeonardType::QKrawtchouk | LeonardType::DualQKrawtchouk => {
            c.nonzero("i", spec, kind.params());
            if !c.out.is_empty() {
                return Ok(c.out);
            }
            let (sp, name) = if kind == LeonardType::QKrawtchouk {
                (Param::SStar, "s*")
            } else {
                (Param::S, "s")
            };
            let (q, s) = (v(Param::Q), v(sp));
            for i in 1..=d {
                c.distinct("ii", &pow(&q, i), &one, || format!("q^{i} = 1"));
            }
            for i in 2..=2 * d {
                c.distinct("iii", &(&s * pow(&q, i)), &one, || format!("{name} q^{i} = 1"));
            }
        }
        LeonardType::AffineQKrawtchouk => {
            c.nonzero("i", spec, kind.params());
            if !c.out.is_empty() {
                return Ok(c.out);
            }
            let (q, r) = (v(Param::Q), v(Param::R));
            for i in 1..=d {
                let qi = pow(&q, i);
                c.distinct("ii", &qi, &one, || format!("q^{i} = 1"));
                c.distinct("ii", &(&r * &qi), &one, || format!("r q^{i} = 1"));
            }
        }
        LeonardType::Racah => {
            c.nonzero("i", spec, &[Param::H, Param::HStar]);
            let (s, ss, r1, r2) = (v(Param::S), v(Param::SStar), v(Param::R1), v(Param::R2));
            if &r1 + &r2 != &s + &ss + c.int(d + 1) {
                c.fail("ii", "r1 + r2 must equal s + s* + d + 1".into());
            }
            for i in 1..=d {
                let mi = c.int(-i);
                c.distinct("iv", &r1, &mi, || format!("r1 = -{i}"));
                c.distinct("iv", &r2, &mi, || format!("r2 = -{i}"));
                c.distinct("iv", &(&ss - &r1), &mi, || format!("s* - r1 = -{i}"));
                c.distinct("iv", &(&ss - &r2), &mi, || format!("s* - r2 = -{i}"));
            }
            for i in 2..=2 * d {
                let mi = c.int(-i);
                c.distinct("v", &s, &mi, || format!("s = -{i}"));
                c.distinct("v", &ss, &mi, || format!("s* = -{i}"));
            }
        }
        LeonardType::Hahn | LeonardType::DualHahn => {
            let hahn = kind == LeonardType::Hahn;
            if hahn {
                c.nonzero("i", spec, &[Param::HStar, Param::S]);
            } else {
                c.nonzero("i", spec, &[Param::H, Param::SStar]);
            }
            // Hahn constrains s*, dual Hahn constrains s; same shape otherwise.
            let (sp, name) = if hahn { (Param::SStar, "s*") } else { (Param::S, "s") };
            let (s, r) = (v(sp), v(Param::R));
            for i in 1..=d {
                let mi = c.int(-i);
                c.distinct("iii", &r, &mi, || format!("r = -{i}"));
                c.distinct("iii", &(&s - &r), &mi, || format!("{name} - r = -{i}"));
            }
            for i in 2..=2 * d {
                c.distinct("iv", &s, &c.int(-i), || format!("{name} = -{i}"));
            }
        }
        LeonardType::Krawtchouk => {
            c.nonzero("i", spec, kind.params());
            let ss = v(Param::S) * v(Param::SStar);
            c.distinct("iii", &v(Param::R), &ss, || "r = s s*".into());
        }
        LeonardType::BannaiIto => {
            c.nonzero("i", spec, &[Param::H, Param::HStar]);
            let (s, ss, r1, r2) = (v(Param::S), v(Param::SStar), v(Param::R1), v(Param::R2));
            if &r1 + &r2 != c.int(d + 1) - &s - &ss {
                c.fail("iii", "r1 + r2 must equal -s - s* + d + 1".into());
            }
            for i in 1..=d {
                let mi = c.int(-i);
                if (d - i) % 2 == 0 {
                    c.distinct("iv", &r1, &mi, || format!("r1 = -{i}"));
                    c.distinct("iv", &(-&ss - &r1), &mi, || format!("-s* - r1 = -{i}"));
                }
                if i % 2 == 1 {
                    c.distinct("v", &r2, &mi, || format!("r2 = -{i}"));
                    c.distinct("v", &(-&ss - &r2), &mi, || format!("-s* - r2 = -{i}"));
                }
                let two_i = c.int(2 * i);
                c.distinct("vi", &s, &two_i, || format!("s = {}", 2 * i));
                c.distinct("vi", &ss, &two_i, || format!("s* = {}", 2 * i));
            }
        }
        LeonardType::Orphan => {
            c.nonzero("i", spec, kind.params());
            let (s, ss, r) = (v(Param::S), v(Param::SStar), v(Param::R));
            c.distinct("ii", &s, &one, || "s = 1".into());
            c.distinct("ii", &ss, &one, || "s* = 1".into());
            c.distinct("iii", &r, &(&s + &ss), || "r = s + s*".into());
            c.distinct("iii", &r, &(&s * (&one + &ss)), || "r = s(1 + s*)".into());
            c.distinct("iii", &r, &(&ss * (&one + &s)), || "r = s*(1 + s)".into());
        }
    }
    Ok(c.out)
}

fn check_characteristic(spec: &TypeSpec) -> Result<(), SpecError> {
    let p = spec.field.characteristic();
    let d = spec.d as u64;
    let unsupported = |requirement| SpecError::UnsupportedCharacteristic {
        kind: spec.kind,
        field: spec.field.to_string(),
        requirement,
    };
    match spec.kind {
        LeonardType::Racah | LeonardType::Hahn | LeonardType::DualHahn | LeonardType::Krawtchouk => {
            if p != 0 && p <= d {
                return Err(unsupported("characteristic 0 or a prime greater than d"));
            }
        }
        LeonardType::BannaiIto => {
            if p != 0 && (p == 2 || 2 * p <= d) {
                return Err(unsupported("characteristic 0 or an odd prime greater than d/2"));
            }
        }
        LeonardType::Orphan => {
            if p != 2 {
                return Err(unsupported("characteristic 2"));
            }
            if spec.d != 3 {
                return Err(SpecError::UnsupportedDiameter {
                    kind: spec.kind,
                    d: spec.d,
                    expected: 3,
                });
            }
        }
        _ => {}
    }
    Ok(())
}

/// Validate and evaluate the family formulas.
pub fn build_parameter_array(spec: &TypeSpec) -> Result<ParameterArray, SpecError> {
    let violations = validate_spec(spec)?;
    if !violations.is_empty() {
        return Err(SpecError::InvalidSpec(violations));
    }
    let (theta, theta_star, phi, phi2) = sequences(spec);
    Ok(ParameterArray::new(theta, theta_star, phi, phi2)?)
}

type Sequences = (Vec<FieldElement>, Vec<FieldElement>, Vec<FieldElement>, Vec<FieldElement>);

/// The four sequences of a validated spec.
fn sequences(spec: &TypeSpec) -> Sequences {
    let ctx = &spec.field;
    let d = spec.d as i64;
    let v = |p: Param| spec.param(p).expect("validated").clone();
    let int = |n: i64| ctx.from_i64(n);
    let one = ctx.one();

    // Shared pieces of the q-families.
    let q = spec.param(Param::Q).cloned();
    let qp = |e: i64| pow(q.as_ref().expect("q-family"), e);
    // (1 - q^i)(1 - s q^(i+1)) q^(-i)
    let q_racah_eig = |s: &FieldElement, i: i64| (&one - qp(i)) * (&one - s * qp(i + 1)) * qp(-i);
    // (1 - q^i) q^(-i)
    let q_plain_eig = |i: i64| (&one - qp(i)) * qp(-i);
    // (1 - q^i)(1 - q^(i-d-1))
    let q_core = |i: i64| (&one - qp(i)) * (&one - qp(i - d - 1));
    // i (i - d - 1)
    let core = |i: i64| int(i * (i - d - 1));

    let eig = |f: &dyn Fn(i64) -> FieldElement, base: &FieldElement| -> Vec<FieldElement> {
        (0..=d).map(|i| if i == 0 { base.clone() } else { base + f(i) }).collect()
    };
    let split = |f: &dyn Fn(i64) -> FieldElement| -> Vec<FieldElement> { (1..=d).map(f).collect() };
    let (t0, ts0) = (&spec.theta0, &spec.theta_star0);

    match spec.kind {
        LeonardType::QRacah => {
            let (h, hs, s, ss, r1, r2) = (v(Param::H), v(Param::HStar), v(Param::S), v(Param::SStar), v(Param::R1), v(Param::R2));
            let hh = &h * &hs;
            (
                eig(&|i| &h * q_racah_eig(&s, i), t0),
                eig(&|i| &hs * q_racah_eig(&ss, i), ts0),
                split(&|i| &hh * qp(1 - 2 * i) * q_core(i) * (&one - &r1 * qp(i)) * (&one - &r2 * qp(i))),
                split(&|i| {
                    &hh * qp(1 - 2 * i) * q_core(i) * (&r1 - &ss * qp(i)) * (&r2 - &ss * qp(i)) / &ss
                }),
            )
        }
        LeonardType::QHahn => {
            let (h, hs, ss, r) = (v(Param::H), v(Param::HStar), v(Param::SStar), v(Param::R));
            let hh = &h * &hs;
            (
                eig(&|i| &h * q_plain_eig(i), t0),
                eig(&|i| &hs * q_racah_eig(&ss, i), ts0),
                split(&|i| &hh * qp(1 - 2 * i) * q_core(i) * (&one - &r * qp(i))),
                split(&|i| -(&hh * qp(1 - i) * q_core(i) * (&r - &ss * qp(i)))),
            )
        }
        LeonardType::DualQHahn => {
            let (h, hs, s, r) = (v(Param::H), v(Param::HStar), v(Param::S), v(Param::R));
            let hh = &h * &hs;
            (
                eig(&|i| &h * q_racah_eig(&s, i), t0),
                eig(&|i| &hs * q_plain_eig(i), ts0),
                split(&|i| &hh * qp(1 - 2 * i) * q_core(i) * (&one - &r * qp(i))),
                split(&|i| &hh * qp(d + 2 - 2 * i) * q_core(i) * (&s - &r * qp(i - d - 1))),
            )
        }
        LeonardType::QuantumQKrawtchouk => {
            let (hs, s, r) = (v(Param::HStar), v(Param::S), v(Param::R));
            let q1 = q.clone().expect("q-family");
            (
                eig(&|i| -(&s * &q1 * (&one - qp(i))), t0),
                eig(&|i| &hs * q_plain_eig(i), ts0),
                split(&|i| -(&r * &hs * qp(1 - i) * q_core(i))),
                split(&|i| &hs * qp(d + 2 - 2 * i) * q_core(i) * (&s - &r * qp(i - d - 1))),
            )
        }
        LeonardType::QKrawtchouk => {
            let (h, hs, ss) = (v(Param::H), v(Param::HStar), v(Param::SStar));
            let hh = &h * &hs;
            let q1 = q.clone().expect("q-family");
            (
                eig(&|i| &h * q_plain_eig(i), t0),
                eig(&|i| &hs * q_racah_eig(&ss, i), ts0),
                split(&|i| &hh * qp(1 - 2 * i) * q_core(i)),
                split(&|i| &hh * &ss * &q1 * q_core(i)),
            )
        }
        LeonardType::AffineQKrawtchouk => {
            let (h, hs, r) = (v(Param::H), v(Param::HStar), v(Param::R));
            let hh = &h * &hs;
            (
                eig(&|i| &h * q_plain_eig(i), t0),
                eig(&|i| &hs * q_plain_eig(i), ts0),
                split(&|i| &hh * qp(1 - 2 * i) * q_core(i) * (&one - &r * qp(i))),
                split(&|i| -(&hh * &r * qp(1 - i) * q_core(i))),
            )
        }
        LeonardType::DualQKrawtchouk => {
            let (h, hs, s) = (v(Param::H), v(Param::HStar), v(Param::S));
            let hh = &h * &hs;
            (
                eig(&|i| &h * q_racah_eig(&s, i), t0),
                eig(&|i| &hs * q_plain_eig(i), ts0),
                split(&|i| &hh * qp(1 - 2 * i) * q_core(i)),
                split(&|i| &hh * &s * qp(d + 2 - 2 * i) * q_core(i)),
            )
        }
        LeonardType::Racah => {
            let (h, hs, s, ss, r1, r2) = (v(Param::H), v(Param::HStar), v(Param::S), v(Param::SStar), v(Param::R1), v(Param::R2));
            let hh = &h * &hs;
            (
                eig(&|i| &h * int(i) * (int(i + 1) + &s), t0),
                eig(&|i| &hs * int(i) * (int(i + 1) + &ss), ts0),
                split(&|i| &hh * core(i) * (int(i) + &r1) * (int(i) + &r2)),
                split(&|i| &hh * core(i) * (int(i) + &ss - &r1) * (int(i) + &ss - &r2)),
            )
        }
        LeonardType::Hahn => {
            let (hs, s, ss, r) = (v(Param::HStar), v(Param::S), v(Param::SStar), v(Param::R));
            let hss = &hs * &s;
            (
                eig(&|i| &s * int(i), t0),
                eig(&|i| &hs * int(i) * (int(i + 1) + &ss), ts0),
                split(&|i| &hss * core(i) * (int(i) + &r)),
                split(&|i| -(&hss * core(i) * (int(i) + &ss - &r))),
            )
        }
        LeonardType::DualHahn => {
            let (h, s, ss, r) = (v(Param::H), v(Param::S), v(Param::SStar), v(Param::R));
            let hss = &h * &ss;
            (
                eig(&|i| &h * int(i) * (int(i + 1) + &s), t0),
                eig(&|i| &ss * int(i), ts0),
                split(&|i| &hss * core(i) * (int(i) + &r)),
                split(&|i| &hss * core(i) * (int(i - d - 1) + &r - &s)),
            )
        }
        LeonardType::Krawtchouk => {
            let (s, ss, r) = (v(Param::S), v(Param::SStar), v(Param::R));
            let gap = &r - &s * &ss;
            (
                eig(&|i| &s * int(i), t0),
                eig(&|i| &ss * int(i), ts0),
                split(&|i| &r * core(i)),
                split(&|i| &gap * core(i)),
            )
        }
        LeonardType::BannaiIto => {
            let (h, hs, s, ss, r1, r2) = (v(Param::H), v(Param::HStar), v(Param::S), v(Param::SStar), v(Param::R1), v(Param::R2));
            let hh4 = (&h * &hs).scale(4);
            let sign = |i: i64| if i % 2 == 0 { 1 } else { -1 };
            let bi_eig = |g: &FieldElement, i: i64| g - &one + (&one - g + int(2 * i)).scale(sign(i));
            let even_d = d % 2 == 0;
            (
                eig(&|i| &h * bi_eig(&s, i), t0),
                eig(&|i| &hs * bi_eig(&ss, i), ts0),
                split(&|i| {
                    let ii = int(i);
                    let m = -&hh4;
                    match (i % 2 == 0, even_d) {
                        (true, true) => m * &ii * (&ii + &r1),
                        (false, true) => m * int(i - d - 1) * (&ii + &r2),
                        (true, false) => m * core(i),
                        (false, false) => m * (&ii + &r1) * (&ii + &r2),
                    }
                }),
                split(&|i| {
                    let ii = int(i);
                    match (i % 2 == 0, even_d) {
                        (true, true) => &hh4 * &ii * (&ii - &ss - &r1),
                        (false, true) => &hh4 * int(i - d - 1) * (&ii - &ss - &r2),
                        (true, false) => -&hh4 * core(i),
                        (false, false) => -&hh4 * (&ii - &ss - &r1) * (&ii - &ss - &r2),
                    }
                }),
            )
        }
        LeonardType::Orphan => {
            let (h, hs, s, ss, r) = (v(Param::H), v(Param::HStar), v(Param::S), v(Param::SStar), v(Param::R));
            let hh = &h * &hs;
            let orphan_eig = |base: &FieldElement, g: &FieldElement, s: &FieldElement| {
                vec![base.clone(), base + g * (s + &one), base + g, base + g * s]
            };
            (
                orphan_eig(t0, &h, &s),
                orphan_eig(ts0, &hs, &ss),
                vec![&hh * &r, hh.clone(), &hh * (&r + &s + &ss)],
                vec![&hh * (&r + &s + &s * &ss), hh.clone(), &hh * (&r + &ss + &s * &ss)],
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_element;

    fn q() -> FieldContext {
        FieldContext::rationals()
    }

    fn strs(v: &[FieldElement]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    fn krawtchouk(r: &str) -> TypeSpec {
        TypeSpec::new(LeonardType::Krawtchouk, 3, &q())
            .with_int(Param::S, 1)
            .with_int(Param::SStar, 1)
            .with(Param::R, parse_element(r, &q()).unwrap())
    }

    #[test]
    fn krawtchouk_r2_sequences() {
        let p = build_parameter_array(&krawtchouk("2")).unwrap();
        assert_eq!(strs(p.theta()), ["0", "1", "2", "3"]);
        assert_eq!(strs(p.phi()), ["-6", "-8", "-6"]);
        // (r - s s*) i (i - d - 1) with r - s s* = 1.
        assert_eq!(strs(p.phi2()), ["-3", "-4", "-3"]);
    }

    #[test]
    fn krawtchouk_r_equal_ss_star_is_invalid() {
        match build_parameter_array(&krawtchouk("1")) {
            Err(SpecError::InvalidSpec(v)) => {
                assert_eq!(v.len(), 1);
                assert_eq!(v[0].clause, "krawtchouk (iii)");
            }
            other => panic!("expected InvalidSpec, got {other:?}"),
        }
        assert!(validate_spec(&krawtchouk("1/2")).unwrap().is_empty());
    }

    #[test]
    fn dual_q_krawtchouk_values() {
        let spec = TypeSpec::new(LeonardType::DualQKrawtchouk, 3, &q())
            .with_int(Param::Q, 3)
            .with_int(Param::H, 1)
            .with_int(Param::HStar, 1)
            .with_int(Param::S, 2);
        let p = build_parameter_array(&spec).unwrap();
        assert_eq!(p.theta_star()[1].to_string(), "-2/3");
        assert_eq!(p.theta()[1].to_string(), "34/3");
        assert_eq!(p.phi()[0].to_string(), "-52/81");
    }

    #[test]
    fn orphan_needs_characteristic_two() {
        let spec = TypeSpec::new(LeonardType::Orphan, 3, &q())
            .with_int(Param::H, 1)
            .with_int(Param::HStar, 1)
            .with_int(Param::S, 2)
            .with_int(Param::SStar, 3)
            .with_int(Param::R, 7);
        assert!(matches!(
            validate_spec(&spec),
            Err(SpecError::UnsupportedCharacteristic { .. })
        ));
    }

    #[test]
    fn orphan_over_gf4() {
        let gf4 = FieldContext::parse("GF(2^2)").unwrap();
        let t = gf4.generator().unwrap();
        let t1 = &t + &gf4.one();
        // s = t, s* = t+1, so s + s* = 1, s(1+s*) = t*t = t+1, s*(1+s) = (t+1)^2 = t.
        let base = TypeSpec::new(LeonardType::Orphan, 3, &gf4)
            .with_int(Param::H, 1)
            .with_int(Param::HStar, 1)
            .with(Param::S, t.clone())
            .with(Param::SStar, t1.clone());
        let bad = base.clone().with(Param::R, t.clone());
        let violations = validate_spec(&bad).unwrap();
        assert!(violations.iter().all(|v| v.clause == "orphan (iii)"));
        assert!(!violations.is_empty());
        // Every nonzero r in GF(4) hits one of the three excluded values here.
        let r_one = base.with(Param::R, gf4.one());
        assert!(!validate_spec(&r_one).unwrap().is_empty());
    }

    #[test]
    fn q_racah_product_clause() {
        let spec = TypeSpec::new(LeonardType::QRacah, 3, &q())
            .with_int(Param::Q, 2)
            .with_int(Param::H, 1)
            .with_int(Param::HStar, 1)
            .with_int(Param::S, 3)
            .with_int(Param::SStar, 5)
            .with_int(Param::R1, 7)
            .with_int(Param::R2, 11);
        let v = validate_spec(&spec).unwrap();
        assert!(v.iter().any(|x| x.clause == "q-racah (ii)"));
    }

    #[test]
    fn missing_and_extra_parameters() {
        let spec = TypeSpec::new(LeonardType::Krawtchouk, 3, &q()).with_int(Param::S, 1);
        assert!(matches!(validate_spec(&spec), Err(SpecError::MissingParam { .. })));
        let spec = krawtchouk("2").with_int(Param::Q, 2);
        assert!(matches!(validate_spec(&spec), Err(SpecError::UnexpectedParam { .. })));
        let mut small = krawtchouk("2");
        small.d = 2;
        assert_eq!(validate_spec(&small), Err(SpecError::DiameterTooSmall(2)));
    }

    #[test]
    fn racah_characteristic_clause() {
        let gf3 = FieldContext::prime(3).unwrap();
        let spec = TypeSpec::new(LeonardType::Krawtchouk, 3, &gf3)
            .with_int(Param::S, 1)
            .with_int(Param::SStar, 1)
            .with_int(Param::R, 2);
        assert!(matches!(
            validate_spec(&spec),
            Err(SpecError::UnsupportedCharacteristic { .. })
        ));
        let gf5 = FieldContext::prime(5).unwrap();
        let spec = TypeSpec::new(LeonardType::Krawtchouk, 3, &gf5)
            .with_int(Param::S, 1)
            .with_int(Param::SStar, 1)
            .with_int(Param::R, 2);
        assert!(build_parameter_array(&spec).is_ok());
    }
}
