//! Exact field arithmetic over the rationals, prime fields GF(p), and small
//! extension fields GF(p^k).
//!
//! A [`FieldContext`] is a cheap, shareable handle describing the field; every
//! [`FieldElement`] carries its context so that elements of different fields
//! cannot be mixed by accident. The checked operations ([`FieldElement::try_add`]
//! and friends, [`field_arith`]) report a [`FieldError`]; the `std::ops`
//! operators panic on a context mismatch or division by zero and are meant for
//! code whose inputs are already validated.

mod parse;
pub(crate) mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

pub use parse::parse_element;

/// Largest supported extension degree.
pub const MAX_EXTENSION_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("field context mismatch: {left} vs {right}")]
    ContextMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse `{text}`: {reason}")]
    Parse { text: String, reason: String },
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} is too large (must be below 2^32)")]
    PrimeTooLarge(u64),
    #[error("extension degree {0} is unsupported (need 2 <= k <= {MAX_EXTENSION_DEGREE})")]
    UnsupportedDegree(usize),
    #[error("modulus must be monic of degree {expected}")]
    BadModulus { expected: usize },
    #[error("modulus {0} is reducible")]
    ReducibleModulus(String),
}

pub(crate) fn parse_error(text: &str, reason: impl Into<String>) -> FieldError {
    FieldError::Parse {
        text: text.to_string(),
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Prime { p: u64 },
    /// GF(p^k) as GF(p)[t] modulo a monic irreducible `modulus`
    /// (coefficients low degree first, length k+1).
    Extension { p: u64, k: usize, modulus: Vec<u64> },
}

/// Shared description of a field. Cloning is cheap.
#[derive(Clone)]
pub struct FieldContext {
    kind: Arc<FieldKind>,
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.kind, &other.kind) || self.kind == other.kind
    }
}

impl Eq for FieldContext {}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime { p } => write!(f, "GF({p})"),
            FieldKind::Extension { p, k, .. } => write!(f, "GF({p}^{k})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<(), FieldError> {
    if p >= 1 << 32 {
        return Err(FieldError::PrimeTooLarge(p));
    }
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    Ok(())
}

impl FieldContext {
    pub fn rationals() -> Self {
        Self {
            kind: Arc::new(FieldKind::Rationals),
        }
    }

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        check_prime(p)?;
        Ok(Self {
            kind: Arc::new(FieldKind::Prime { p }),
        })
    }

    /// GF(p^k) with the first irreducible modulus found by
    /// lexicographic search (t^2+t+1 for GF(4), t^3+t+1 for GF(8)).
    pub fn extension(p: u64, k: usize) -> Result<Self, FieldError> {
        check_prime(p)?;
        if !(2..=MAX_EXTENSION_DEGREE).contains(&k) {
            return Err(FieldError::UnsupportedDegree(k));
        }
        let modulus = poly::first_irreducible(p, k).expect("irreducible polynomials exist");
        Ok(Self {
            kind: Arc::new(FieldKind::Extension { p, k, modulus }),
        })
    }

    /// GF(p^k) with a caller-chosen modulus, given low degree first. The modulus
    /// must be monic and irreducible; both are checked.
    pub fn extension_with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self, FieldError> {
        check_prime(p)?;
        let mut modulus: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        poly::trim(&mut modulus);
        let k = modulus.len().saturating_sub(1);
        if !(2..=MAX_EXTENSION_DEGREE).contains(&k) {
            return Err(FieldError::UnsupportedDegree(k));
        }
        if modulus[k] != 1 {
            return Err(FieldError::BadModulus { expected: k });
        }
        if !poly::is_irreducible(&modulus, p) {
            return Err(FieldError::ReducibleModulus(format_poly(&modulus)));
        }
        Ok(Self {
            kind: Arc::new(FieldKind::Extension { p, k, modulus }),
        })
    }

    /// Parse `Q`, `GF(p)` or `GF(p^k)`.
    pub fn parse(text: &str) -> Result<Self, FieldError> {
        parse::parse_context(text)
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    /// 0 for the rationals, p otherwise.
    pub fn characteristic(&self) -> u64 {
        match &*self.kind {
            FieldKind::Rationals => 0,
            FieldKind::Prime { p } | FieldKind::Extension { p, .. } => *p,
        }
    }

    /// Number of elements, if finite and representable.
    pub fn order(&self) -> Option<u128> {
        match &*self.kind {
            FieldKind::Rationals => None,
            FieldKind::Prime { p } => Some(*p as u128),
            FieldKind::Extension { p, k, .. } => (*p as u128).checked_pow(*k as u32),
        }
    }

    /// The modulus polynomial of an extension field, low degree first.
    pub fn modulus(&self) -> Option<&[u64]> {
        match &*self.kind {
            FieldKind::Extension { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    /// The image of an integer in the prime subfield.
    pub fn from_i64(&self, n: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        let value = match &*self.kind {
            FieldKind::Rationals => Value::Rational(BigRational::from_integer(n.clone())),
            FieldKind::Prime { p } => Value::Residue(reduce_bigint(n, *p)),
            FieldKind::Extension { p, .. } => {
                let mut v = vec![reduce_bigint(n, *p)];
                poly::trim(&mut v);
                Value::Poly(v)
            }
        };
        FieldElement {
            ctx: self.clone(),
            value,
        }
    }

    /// A rational number `num/den`, mapped into the field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElement, FieldError> {
        self.from_i64(num).try_div(&self.from_i64(den))
    }

    /// The generator `t` of an extension field.
    pub fn generator(&self) -> Option<FieldElement> {
        match &*self.kind {
            FieldKind::Extension { p, modulus, .. } => Some(FieldElement {
                ctx: self.clone(),
                value: Value::Poly(poly::rem(&[0, 1], modulus, *p)),
            }),
            _ => None,
        }
    }

    /// Extension-field element from coefficients, low degree first.
    pub fn from_coefficients(&self, coeffs: &[i64]) -> Option<FieldElement> {
        let FieldKind::Extension { p, modulus, .. } = &*self.kind else {
            return None;
        };
        let v: Vec<u64> = coeffs
            .iter()
            .map(|&c| reduce_bigint(&BigInt::from(c), *p))
            .collect();
        Some(FieldElement {
            ctx: self.clone(),
            value: Value::Poly(poly::rem(&v, modulus, *p)),
        })
    }

    /// All elements of a finite field, in a fixed order. Intended for small
    /// fields only.
    pub fn elements(&self) -> Option<Vec<FieldElement>> {
        let order = self.order()?;
        if order > 1 << 20 {
            return None;
        }
        let (p, k) = match &*self.kind {
            FieldKind::Prime { p } => (*p, 1),
            FieldKind::Extension { p, k, .. } => (*p, *k),
            FieldKind::Rationals => unreachable!(),
        };
        let out = (0..order)
            .map(|n| {
                let mut coeffs = Vec::with_capacity(k);
                let mut m = n;
                for _ in 0..k {
                    coeffs.push((m % p as u128) as u64);
                    m /= p as u128;
                }
                poly::trim(&mut coeffs);
                let value = match &*self.kind {
                    FieldKind::Prime { .. } => Value::Residue(coeffs.first().copied().unwrap_or(0)),
                    _ => Value::Poly(coeffs),
                };
                FieldElement {
                    ctx: self.clone(),
                    value,
                }
            })
            .collect();
        Some(out)
    }
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let r = n % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u64().expect("residue fits in u64")
}

fn format_poly(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (e, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (e, c) {
            (0, _) => c.to_string(),
            (1, 1) => "t".to_string(),
            (1, _) => format!("{c}*t"),
            (_, 1) => format!("t^{e}"),
            _ => format!("{c}*t^{e}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Value {
    /// Always in lowest terms with positive denominator (maintained by `num-rational`).
    Rational(BigRational),
    Residue(u64),
    /// Reduced modulo the field modulus; no trailing zeros; empty means zero.
    Poly(Vec<u64>),
}

#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    ctx: FieldContext,
    value: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic.
pub fn field_arith(
    a: &FieldElement,
    b: &FieldElement,
    op: ArithOp,
) -> Result<FieldElement, FieldError> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

impl FieldElement {
    pub fn context(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_zero(),
            Value::Residue(x) => *x == 0,
            Value::Poly(v) => v.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_one(),
            Value::Residue(x) => *x == 1,
            Value::Poly(v) => v.as_slice() == [1],
        }
    }

    /// The rational value, for elements of Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Coefficients of the representative polynomial (low degree first) for
    /// finite-field elements; a prime-field residue is a constant polynomial.
    pub fn coefficients(&self) -> Option<Vec<u64>> {
        match &self.value {
            Value::Rational(_) => None,
            Value::Residue(x) => Some(if *x == 0 { vec![] } else { vec![*x] }),
            Value::Poly(v) => Some(v.clone()),
        }
    }

    fn same_context(&self, other: &Self) -> Result<(), FieldError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(FieldError::ContextMismatch {
                left: self.ctx.to_string(),
                right: other.ctx.to_string(),
            })
        }
    }

    fn with_value(&self, value: Value) -> Self {
        FieldElement {
            ctx: self.ctx.clone(),
            value,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_context(other)?;
        let value = match (&self.value, &other.value, &*self.ctx.kind) {
            (Value::Rational(a), Value::Rational(b), _) => Value::Rational(a + b),
            (Value::Residue(a), Value::Residue(b), FieldKind::Prime { p }) => {
                Value::Residue((a + b) % p)
            }
            (Value::Poly(a), Value::Poly(b), FieldKind::Extension { p, .. }) => {
                let n = a.len().max(b.len());
                let mut v: Vec<u64> = (0..n)
                    .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
                    .collect();
                poly::trim(&mut v);
                Value::Poly(v)
            }
            _ => unreachable!("value representation matches context"),
        };
        Ok(self.with_value(value))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_context(other)?;
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_context(other)?;
        let value = match (&self.value, &other.value, &*self.ctx.kind) {
            (Value::Rational(a), Value::Rational(b), _) => Value::Rational(a * b),
            (Value::Residue(a), Value::Residue(b), FieldKind::Prime { p }) => {
                Value::Residue(poly::mul_mod_p(*a, *b, *p))
            }
            (Value::Poly(a), Value::Poly(b), FieldKind::Extension { p, modulus, .. }) => {
                Value::Poly(poly::rem(&poly::mul(a, b, *p), modulus, *p))
            }
            _ => unreachable!("value representation matches context"),
        };
        Ok(self.with_value(value))
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let value = match (&self.value, &*self.ctx.kind) {
            (Value::Rational(a), _) => Value::Rational(a.recip()),
            (Value::Residue(a), FieldKind::Prime { p }) => {
                Value::Residue(poly::inv_mod_p(*a, *p).expect("nonzero residue"))
            }
            (Value::Poly(a), FieldKind::Extension { p, modulus, .. }) => {
                Value::Poly(poly::inverse_mod(a, modulus, *p).expect("modulus is irreducible"))
            }
            _ => unreachable!("value representation matches context"),
        };
        Ok(self.with_value(value))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_context(other)?;
        self.try_mul(&other.inv()?)
    }

    fn neg_ref(&self) -> Self {
        let value = match (&self.value, &*self.ctx.kind) {
            (Value::Rational(a), _) => Value::Rational(-a),
            (Value::Residue(a), FieldKind::Prime { p }) => Value::Residue((p - a) % p),
            (Value::Poly(a), FieldKind::Extension { p, .. }) => {
                Value::Poly(a.iter().map(|&c| (p - c) % p).collect())
            }
            _ => unreachable!("value representation matches context"),
        };
        self.with_value(value)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<Self, FieldError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = self.ctx.one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Multiply by a small integer.
    pub fn scale(&self, n: i64) -> Self {
        self * &self.ctx.from_i64(n)
    }
}

/// Draw a field element for random identity testing.
///
/// Over Q the numerator and denominator are each uniform in
/// `[-height, height]`, the denominator redrawn while zero. Over a finite
/// field the element is uniform.
pub fn sample_element<R: Rng + ?Sized>(ctx: &FieldContext, rng: &mut R, height: u32) -> FieldElement {
    let height = height.max(1) as i64;
    let value = match &*ctx.kind {
        FieldKind::Rationals => {
            let num = rng.random_range(-height..=height);
            let den = loop {
                let d = rng.random_range(-height..=height);
                if d != 0 {
                    break d;
                }
            };
            Value::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
        }
        FieldKind::Prime { p } => Value::Residue(rng.random_range(0..*p)),
        FieldKind::Extension { p, k, .. } => {
            let mut v: Vec<u64> = (0..*k).map(|_| rng.random_range(0..*p)).collect();
            poly::trim(&mut v);
            Value::Poly(v)
        }
    };
    FieldElement {
        ctx: ctx.clone(),
        value,
    }
}

/// Like [`sample_element`], redrawing until nonzero.
pub fn sample_nonzero<R: Rng + ?Sized>(ctx: &FieldContext, rng: &mut R, height: u32) -> FieldElement {
    loop {
        let x = sample_element(ctx, rng, height);
        if !x.is_zero() {
            return x;
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Value::Residue(x) => write!(f, "{x}"),
            Value::Poly(v) => f.write_str(&format_poly(v)),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.ctx)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                match self.$checked(rhs) {
                    Ok(x) => x,
                    Err(e) => panic!("{}: {e}", stringify!($method)),
                }
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(text: &str) -> FieldElement {
        parse_element(text, &FieldContext::rationals()).unwrap()
    }

    #[test]
    fn rational_addition() {
        assert_eq!(q("1/3") + q("1/6"), q("1/2"));
    }

    #[test]
    fn prime_field_inverse() {
        let ctx = FieldContext::prime(7).unwrap();
        let x = ctx.from_i64(3);
        assert!(((ctx.one() / &x) * x).is_one());
    }

    #[test]
    fn gf4_generator_times_successor_is_one() {
        // t(t+1) = t^2 + t = (t + 1) + t = 1 mod t^2+t+1 over GF(2).
        let ctx = FieldContext::extension(2, 2).unwrap();
        assert_eq!(ctx.modulus().unwrap(), &[1, 1, 1]);
        let t = ctx.generator().unwrap();
        let prod = &t * &(&t + &ctx.one());
        assert!(prod.is_one());
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = FieldContext::prime(5).unwrap().one();
        let b = FieldContext::prime(7).unwrap().one();
        assert!(matches!(
            field_arith(&a, &b, ArithOp::Add),
            Err(FieldError::ContextMismatch { .. })
        ));
        assert!(matches!(a.try_mul(&q("1")), Err(FieldError::ContextMismatch { .. })));
    }

    #[test]
    fn division_by_zero() {
        let ctx = FieldContext::extension(3, 2).unwrap();
        assert_eq!(
            field_arith(&ctx.one(), &ctx.zero(), ArithOp::Div),
            Err(FieldError::DivisionByZero)
        );
        assert_eq!(q("0").inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn bad_contexts() {
        assert_eq!(FieldContext::prime(9), Err(FieldError::NotPrime(9)));
        assert_eq!(FieldContext::extension(2, 9), Err(FieldError::UnsupportedDegree(9)));
        assert!(matches!(
            FieldContext::extension_with_modulus(2, vec![1, 0, 1]),
            Err(FieldError::ReducibleModulus(_))
        ));
        assert!(FieldContext::extension_with_modulus(2, vec![1, 1, 0, 1]).is_ok());
    }

    #[test]
    fn characteristic_by_kind() {
        assert_eq!(FieldContext::rationals().characteristic(), 0);
        assert_eq!(FieldContext::prime(101).unwrap().characteristic(), 101);
        assert_eq!(FieldContext::extension(2, 3).unwrap().characteristic(), 2);
    }

    #[test]
    fn negative_powers() {
        let three = q("3");
        assert_eq!(three.pow(-2).unwrap(), q("1/9"));
        assert_eq!(three.pow(0).unwrap(), q("1"));
        assert_eq!(q("0").pow(-1), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn rational_samples_respect_height_one() {
        let ctx = FieldContext::rationals();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let x = sample_element(&ctx, &mut rng, 1);
            assert!(x == q("-1") || x == q("0") || x == q("1"), "{x}");
        }
    }

    #[test]
    fn sampling_is_seed_sensitive() {
        let ctx = FieldContext::rationals();
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..2).map(|_| sample_element(&ctx, &mut rng, 12)).collect::<Vec<_>>()
        };
        assert_eq!(draw(42), draw(42));
        assert_ne!(draw(42), draw(43));
    }

    #[test]
    fn gf101_sampling_covers_residues() {
        // Expected number of residues missed by 10^4 uniform draws is
        // 101 (1 - 1/101)^(10^4) < 1e-40, so 95 is a loose floor.
        let ctx = FieldContext::prime(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..10_000 {
            seen.insert(sample_element(&ctx, &mut rng, 1).to_string());
        }
        assert!(seen.len() >= 95);
    }

    #[test]
    fn extension_products_stay_reduced() {
        let ctx = FieldContext::extension(3, 3).unwrap();
        for a in ctx.elements().unwrap().iter().step_by(5) {
            for b in ctx.elements().unwrap().iter().step_by(3) {
                assert!((a * b).coefficients().unwrap().len() <= 3);
            }
        }
    }

    #[test]
    fn every_nonzero_element_of_small_fields_is_invertible() {
        for ctx in [
            FieldContext::extension(2, 2).unwrap(),
            FieldContext::extension(2, 3).unwrap(),
            FieldContext::extension(5, 2).unwrap(),
            FieldContext::prime(13).unwrap(),
        ] {
            for x in ctx.elements().unwrap() {
                if !x.is_zero() {
                    assert!((&x * &x.inv().unwrap()).is_one(), "{x:?}");
                }
            }
        }
    }
}
