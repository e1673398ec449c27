//! `TypeSpec`: a type name plus its raw scalars, and its `key = value` text form.

use std::collections::BTreeMap;
use std::fmt;

use super::{ArrayError, LeonardType, Param, UnknownType, Violation};
use crate::field::{parse_element, FieldContext, FieldElement, FieldError, FieldKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    UnknownType(#[from] UnknownType),
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("missing key `{0}`")]
    MissingKey(&'static str),
    #[error("line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("bad value for `{key}`: {reason}")]
    BadValue { key: String, reason: String },
    #[error("diameter must be at least 3, got {0}")]
    DiameterTooSmall(usize),
    #[error("{kind} requires parameter `{param}`")]
    MissingParam { kind: LeonardType, param: Param },
    #[error("{kind} takes no parameter `{param}`")]
    UnexpectedParam { kind: LeonardType, param: Param },
    #[error("{kind} is unsupported over {field}: needs {requirement}")]
    UnsupportedCharacteristic {
        kind: LeonardType,
        field: String,
        requirement: &'static str,
    },
    #[error("{kind} requires d = {expected}, got {d}")]
    UnsupportedDiameter {
        kind: LeonardType,
        d: usize,
        expected: usize,
    },
    #[error("invalid spec: {}", join(.0))]
    InvalidSpec(Vec<Violation>),
    #[error("degenerate parameter array: {0}")]
    DegenerateArray(#[from] ArrayError),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeSpec {
    pub kind: LeonardType,
    pub d: usize,
    pub field: FieldContext,
    pub theta0: FieldElement,
    pub theta_star0: FieldElement,
    params: BTreeMap<Param, FieldElement>,
}

impl TypeSpec {
    /// A spec with no parameters set and `theta0 = theta_star0 = 0`.
    pub fn new(kind: LeonardType, d: usize, field: &FieldContext) -> Self {
        Self {
            kind,
            d,
            field: field.clone(),
            theta0: field.zero(),
            theta_star0: field.zero(),
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, param: Param, value: FieldElement) -> Self {
        self.set(param, value);
        self
    }

    pub fn with_int(self, param: Param, value: i64) -> Self {
        let v = self.field.from_i64(value);
        self.with(param, v)
    }

    pub fn set(&mut self, param: Param, value: FieldElement) {
        self.params.insert(param, value);
    }

    pub fn param(&self, param: Param) -> Option<&FieldElement> {
        self.params.get(&param)
    }

    pub fn params(&self) -> &BTreeMap<Param, FieldElement> {
        &self.params
    }

    pub fn require(&self, param: Param) -> Result<&FieldElement, SpecError> {
        self.params.get(&param).ok_or(SpecError::MissingParam {
            kind: self.kind,
            param,
        })
    }

    /// Build from `key = value` pairs. Recognized keys: `type`, `d`, `field`,
    /// `modulus`, `theta0`, `theta_star0` and the parameter names.
    pub fn from_pairs<K, V>(pairs: impl IntoIterator<Item = (K, V)>) -> Result<Self, SpecError>
    where
        K: AsRef<str>,
        V: AsRef<str>,
    {
        let mut kind = None;
        let mut d = None;
        let mut field_text = None;
        let mut modulus = None;
        let mut raw: Vec<(String, String)> = Vec::new();
        for (k, v) in pairs {
            let (k, v) = (k.as_ref().trim(), v.as_ref().trim());
            match k {
                "type" => kind = Some(v.parse::<LeonardType>()?),
                "d" => {
                    d = Some(v.parse::<usize>().map_err(|e| SpecError::BadValue {
                        key: "d".into(),
                        reason: e.to_string(),
                    })?)
                }
                "field" => field_text = Some(v.to_string()),
                "modulus" => modulus = Some(v.to_string()),
                _ => raw.push((k.to_string(), v.to_string())),
            }
        }
        let kind = kind.ok_or(SpecError::MissingKey("type"))?;
        let d = d.ok_or(SpecError::MissingKey("d"))?;
        let field = resolve_field(field_text.as_deref().unwrap_or("Q"), modulus.as_deref())?;
        let mut spec = TypeSpec::new(kind, d, &field);
        for (k, v) in raw {
            let value = parse_element(&v, &field)?;
            match k.as_str() {
                "theta0" => spec.theta0 = value,
                "theta_star0" => spec.theta_star0 = value,
                other => spec.set(other.parse::<Param>()?, value),
            }
        }
        Ok(spec)
    }

    /// Parse the line-oriented text form; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        Self::from_pairs(parse_pairs(text)?)
    }

    /// Canonical text form, accepted by [`TypeSpec::parse`].
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

/// Split `key = value` lines, skipping blanks and `#` comments.
pub fn parse_pairs(text: &str) -> Result<Vec<(String, String)>, SpecError> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or(SpecError::Syntax { line: n + 1 })?;
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

fn resolve_field(text: &str, modulus: Option<&str>) -> Result<FieldContext, SpecError> {
    let field = FieldContext::parse(text)?;
    let Some(modulus) = modulus else {
        return Ok(field);
    };
    match field.kind() {
        FieldKind::Extension { p, k, .. } => {
            let custom = FieldContext::extension_from_text(*p, modulus)?;
            match custom.kind() {
                FieldKind::Extension { k: k2, .. } if k2 == k => Ok(custom),
                _ => Err(FieldError::BadModulus { expected: *k }.into()),
            }
        }
        _ => Err(SpecError::BadValue {
            key: "modulus".into(),
            reason: format!("{field} is not an extension field"),
        }),
    }
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "type = {}", self.kind)?;
        writeln!(f, "d = {}", self.d)?;
        writeln!(f, "field = {}", self.field)?;
        if let Some(m) = self.field.modulus() {
            writeln!(f, "modulus = {}", format_modulus(m))?;
        }
        writeln!(f, "theta0 = {}", self.theta0)?;
        writeln!(f, "theta_star0 = {}", self.theta_star0)?;
        for (p, v) in &self.params {
            writeln!(f, "{p} = {v}")?;
        }
        Ok(())
    }
}

/// `t^k+...` for a coefficient list, low degree first.
pub fn format_modulus(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (e, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match e {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{e}"),
        };
        terms.push(match (c, e) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    terms.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let text = "type = q-racah\nd = 4\nfield = Q\n# comment\nq = 2\nh = 1\nh_star = -1/3\ns = 5\ns_star = 7\nr1 = 1\nr2 = 2\n";
        let spec = TypeSpec::parse(text).unwrap();
        assert_eq!(spec.kind, LeonardType::QRacah);
        assert_eq!(spec.d, 4);
        assert_eq!(spec.param(Param::HStar).unwrap().to_string(), "-1/3");
        assert_eq!(TypeSpec::parse(&spec.to_text()).unwrap(), spec);
    }

    #[test]
    fn extension_field_with_modulus() {
        let text = "type = orphan\nd = 3\nfield = GF(2^3)\nmodulus = t^3+t^2+1\nh = t\nh_star = 1\ns = t^2\ns_star = t+1\nr = t^2+t";
        let spec = TypeSpec::parse(text).unwrap();
        assert_eq!(spec.field.modulus().unwrap(), &[1, 0, 1, 1]);
        assert!(spec.to_text().contains("modulus = t^3+t^2+1"));
        assert_eq!(TypeSpec::parse(&spec.to_text()).unwrap(), spec);
    }

    #[test]
    fn text_errors() {
        assert_eq!(TypeSpec::parse("d = 3"), Err(SpecError::MissingKey("type")));
        assert!(matches!(
            TypeSpec::parse("type = hahn\nd = 3\nfoo = 1"),
            Err(SpecError::UnknownKey(_))
        ));
        assert!(matches!(
            TypeSpec::parse("type = hahn\nd = x"),
            Err(SpecError::BadValue { .. })
        ));
        assert_eq!(TypeSpec::parse("type = hahn\nd"), Err(SpecError::Syntax { line: 2 }));
        assert!(matches!(
            TypeSpec::parse("type = hahn\nd = 3\nfield = GF(5)\nmodulus = t^2+2"),
            Err(SpecError::BadValue { .. })
        ));
    }
}
