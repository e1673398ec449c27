//! The thirteen parameter-array families and array-level transforms.

mod families;
mod spec;

use std::fmt;
use std::str::FromStr;

use crate::field::{FieldContext, FieldElement};

pub use families::{build_parameter_array, validate_spec, Violation};
pub use spec::{format_modulus, parse_pairs, SpecError, TypeSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LeonardType {
    QRacah,
    QHahn,
    DualQHahn,
    QuantumQKrawtchouk,
    QKrawtchouk,
    AffineQKrawtchouk,
    DualQKrawtchouk,
    Racah,
    Hahn,
    DualHahn,
    Krawtchouk,
    BannaiIto,
    Orphan,
}

impl LeonardType {
    pub const ALL: [LeonardType; 13] = [
        LeonardType::QRacah,
        LeonardType::QHahn,
        LeonardType::DualQHahn,
        LeonardType::QuantumQKrawtchouk,
        LeonardType::QKrawtchouk,
        LeonardType::AffineQKrawtchouk,
        LeonardType::DualQKrawtchouk,
        LeonardType::Racah,
        LeonardType::Hahn,
        LeonardType::DualHahn,
        LeonardType::Krawtchouk,
        LeonardType::BannaiIto,
        LeonardType::Orphan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LeonardType::QRacah => "q-racah",
            LeonardType::QHahn => "q-hahn",
            LeonardType::DualQHahn => "dual-q-hahn",
            LeonardType::QuantumQKrawtchouk => "quantum-q-krawtchouk",
            LeonardType::QKrawtchouk => "q-krawtchouk",
            LeonardType::AffineQKrawtchouk => "affine-q-krawtchouk",
            LeonardType::DualQKrawtchouk => "dual-q-krawtchouk",
            LeonardType::Racah => "racah",
            LeonardType::Hahn => "hahn",
            LeonardType::DualHahn => "dual-hahn",
            LeonardType::Krawtchouk => "krawtchouk",
            LeonardType::BannaiIto => "bannai-ito",
            LeonardType::Orphan => "orphan",
        }
    }

    /// The free scalars of the family, in a fixed order.
    pub fn params(self) -> &'static [Param] {
        use Param::*;
        match self {
            LeonardType::QRacah => &[Q, H, HStar, S, SStar, R1, R2],
            LeonardType::QHahn => &[Q, H, HStar, SStar, R],
            LeonardType::DualQHahn => &[Q, H, HStar, S, R],
            LeonardType::QuantumQKrawtchouk => &[Q, HStar, S, R],
            LeonardType::QKrawtchouk => &[Q, H, HStar, SStar],
            LeonardType::AffineQKrawtchouk => &[Q, H, HStar, R],
            LeonardType::DualQKrawtchouk => &[Q, H, HStar, S],
            LeonardType::Racah => &[H, HStar, S, SStar, R1, R2],
            LeonardType::Hahn => &[HStar, S, SStar, R],
            LeonardType::DualHahn => &[H, S, SStar, R],
            LeonardType::Krawtchouk => &[S, SStar, R],
            LeonardType::BannaiIto => &[H, HStar, S, SStar, R1, R2],
            LeonardType::Orphan => &[H, HStar, S, SStar, R],
        }
    }
}

impl fmt::Display for LeonardType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown Leonard type `{0}`")]
pub struct UnknownType(pub String);

impl FromStr for LeonardType {
    type Err = UnknownType;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace(['_', '/', ' '], "-");
        LeonardType::ALL
            .into_iter()
            .find(|t| t.name() == norm)
            .ok_or_else(|| UnknownType(s.to_string()))
    }
}

/// Named scalar parameter of a type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Q,
    H,
    HStar,
    S,
    SStar,
    R,
    R1,
    R2,
}

impl Param {
    pub const ALL: [Param; 8] = [
        Param::Q,
        Param::H,
        Param::HStar,
        Param::S,
        Param::SStar,
        Param::R,
        Param::R1,
        Param::R2,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Param::Q => "q",
            Param::H => "h",
            Param::HStar => "h_star",
            Param::S => "s",
            Param::SStar => "s_star",
            Param::R => "r",
            Param::R1 => "r1",
            Param::R2 => "r2",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Param {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = match s.trim() {
            "h*" | "hstar" => "h_star",
            "s*" | "sstar" => "s_star",
            "r_1" => "r1",
            "r_2" => "r2",
            other => other,
        };
        Param::ALL
            .into_iter()
            .find(|p| p.key() == key)
            .ok_or_else(|| SpecError::UnknownKey(s.to_string()))
    }
}

/// Why a candidate array fails the parameter-array invariants.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArrayError {
    #[error("sequence lengths do not match diameter {d}")]
    LengthMismatch { d: usize },
    #[error("theta_{0} = theta_{1}")]
    RepeatedTheta(usize, usize),
    #[error("theta*_{0} = theta*_{1}")]
    RepeatedThetaStar(usize, usize),
    #[error("phi_{0} is zero")]
    ZeroPhi(usize),
    #[error("second split sequence entry {0} is zero")]
    ZeroPhi2(usize),
    #[error("entries come from different fields")]
    ContextMismatch,
    #[error("affine scale factor is zero")]
    ZeroScale,
}

/// `({theta_i}; {theta*_i}; {phi_i}; {phi2_i})`. `phi` and `phi2` are stored
/// zero-based, so `phi[i - 1]` is the i-th entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterArray {
    ctx: FieldContext,
    theta: Vec<FieldElement>,
    theta_star: Vec<FieldElement>,
    phi: Vec<FieldElement>,
    phi2: Vec<FieldElement>,
}

impl ParameterArray {
    pub fn new(
        theta: Vec<FieldElement>,
        theta_star: Vec<FieldElement>,
        phi: Vec<FieldElement>,
        phi2: Vec<FieldElement>,
    ) -> Result<Self, ArrayError> {
        let d = theta.len().checked_sub(1).ok_or(ArrayError::LengthMismatch { d: 0 })?;
        if theta_star.len() != d + 1 || phi.len() != d || phi2.len() != d {
            return Err(ArrayError::LengthMismatch { d });
        }
        let ctx = theta[0].context().clone();
        let all = theta.iter().chain(&theta_star).chain(&phi).chain(&phi2);
        if all.into_iter().any(|x| x.context() != &ctx) {
            return Err(ArrayError::ContextMismatch);
        }
        for i in 0..=d {
            for j in i + 1..=d {
                if theta[i] == theta[j] {
                    return Err(ArrayError::RepeatedTheta(i, j));
                }
                if theta_star[i] == theta_star[j] {
                    return Err(ArrayError::RepeatedThetaStar(i, j));
                }
            }
        }
        if let Some(i) = phi.iter().position(FieldElement::is_zero) {
            return Err(ArrayError::ZeroPhi(i + 1));
        }
        if let Some(i) = phi2.iter().position(FieldElement::is_zero) {
            return Err(ArrayError::ZeroPhi2(i + 1));
        }
        Ok(Self {
            ctx,
            theta,
            theta_star,
            phi,
            phi2,
        })
    }

    pub fn d(&self) -> usize {
        self.theta.len() - 1
    }

    pub fn context(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn theta(&self) -> &[FieldElement] {
        &self.theta
    }

    pub fn theta_star(&self) -> &[FieldElement] {
        &self.theta_star
    }

    /// First split sequence, `phi()[i - 1] = phi_i`.
    pub fn phi(&self) -> &[FieldElement] {
        &self.phi
    }

    /// Second split sequence, `phi2()[i - 1]`.
    pub fn phi2(&self) -> &[FieldElement] {
        &self.phi2
    }

    /// `Φ↓`: reverse the dual eigenvalues and swap the split sequences
    /// (each reversed).
    pub fn down(&self) -> Self {
        Self {
            ctx: self.ctx.clone(),
            theta: self.theta.clone(),
            theta_star: reversed(&self.theta_star),
            phi: reversed(&self.phi2),
            phi2: reversed(&self.phi),
        }
    }

    /// `Φ⇓`: reverse the eigenvalues and swap the split sequences.
    pub fn double_down(&self) -> Self {
        Self {
            ctx: self.ctx.clone(),
            theta: reversed(&self.theta),
            theta_star: self.theta_star.clone(),
            phi: self.phi2.clone(),
            phi2: self.phi.clone(),
        }
    }

    /// `Φ*`: exchange the roles of `A` and `A*`.
    pub fn dual(&self) -> Self {
        Self {
            ctx: self.ctx.clone(),
            theta: self.theta_star.clone(),
            theta_star: self.theta.clone(),
            phi: self.phi.clone(),
            phi2: reversed(&self.phi2),
        }
    }

    /// Array of `(xi A + zeta I, xi_star A* + zeta_star I)`.
    pub fn affine(
        &self,
        xi: &FieldElement,
        zeta: &FieldElement,
        xi_star: &FieldElement,
        zeta_star: &FieldElement,
    ) -> Result<Self, ArrayError> {
        if xi.is_zero() || xi_star.is_zero() {
            return Err(ArrayError::ZeroScale);
        }
        let prod = xi * xi_star;
        Ok(Self {
            ctx: self.ctx.clone(),
            theta: self.theta.iter().map(|t| xi * t + zeta).collect(),
            theta_star: self.theta_star.iter().map(|t| xi_star * t + zeta_star).collect(),
            phi: self.phi.iter().map(|x| &prod * x).collect(),
            phi2: self.phi2.iter().map(|x| &prod * x).collect(),
        })
    }
}

fn reversed(v: &[FieldElement]) -> Vec<FieldElement> {
    v.iter().rev().cloned().collect()
}
