//! Text grammar for fields and elements.
//!
//! Fields: `Q`, `GF(p)`, `GF(p^k)`. Elements: an integer, `n/d`, or (in an
//! extension field) a polynomial in `t` such as `t^2+3*t-1`.

use num_bigint::BigInt;

use super::{parse_error, FieldContext, FieldElement, FieldError, FieldKind};

pub(super) fn parse_context(text: &str) -> Result<FieldContext, FieldError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "Q" {
        return Ok(FieldContext::rationals());
    }
    let inner = compact
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| parse_error(text, "expected Q, GF(p) or GF(p^k)"))?;
    let number = |s: &str| {
        s.parse::<u64>()
            .map_err(|_| parse_error(text, format!("bad integer `{s}`")))
    };
    match inner.split_once('^') {
        None => FieldContext::prime(number(inner)?),
        Some((p, k)) => {
            let p = number(p)?;
            let k = number(k)? as usize;
            if k == 1 {
                FieldContext::prime(p)
            } else {
                FieldContext::extension(p, k)
            }
        }
    }
}

/// Parse an element of `ctx`.
pub fn parse_element(text: &str, ctx: &FieldContext) -> Result<FieldElement, FieldError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(parse_error(text, "empty element"));
    }
    let bytes = compact.as_bytes();
    let mut acc = ctx.zero();
    let mut start = 0;
    while start < bytes.len() {
        let negative = match bytes[start] {
            b'-' => true,
            b'+' if start > 0 => false,
            b'+' => return Err(parse_error(text, "leading `+`")),
            _ if start == 0 => false,
            _ => unreachable!("terms are split at signs"),
        };
        if bytes[start] == b'-' || bytes[start] == b'+' {
            start += 1;
        }
        let end = compact[start..]
            .find(['+', '-'])
            .map(|off| start + off)
            .unwrap_or(bytes.len());
        let term = parse_term(&compact[start..end], text, ctx)?;
        acc = if negative { &acc - &term } else { &acc + &term };
        start = end;
    }
    Ok(acc)
}

fn parse_term(term: &str, whole: &str, ctx: &FieldContext) -> Result<FieldElement, FieldError> {
    if term.is_empty() {
        return Err(parse_error(whole, "empty term"));
    }
    let (coef_text, power_text) = match term.find('t') {
        None => (term, None),
        Some(pos) => {
            let coef = term[..pos].strip_suffix('*').unwrap_or(&term[..pos]);
            (coef, Some(&term[pos + 1..]))
        }
    };
    let coef = if coef_text.is_empty() {
        if power_text.is_none() {
            return Err(parse_error(whole, "empty term"));
        }
        ctx.one()
    } else {
        parse_rational(coef_text, whole, ctx)?
    };
    let Some(power_text) = power_text else {
        return Ok(coef);
    };
    let Some(t) = ctx.generator() else {
        return Err(parse_error(whole, format!("`t` is not defined over {ctx}")));
    };
    let exponent = if power_text.is_empty() {
        1
    } else {
        power_text
            .strip_prefix('^')
            .and_then(|e| e.parse::<i64>().ok())
            .filter(|e| *e >= 0)
            .ok_or_else(|| parse_error(whole, format!("bad exponent `{power_text}`")))?
    };
    Ok(&coef * &t.pow(exponent)?)
}

fn parse_rational(s: &str, whole: &str, ctx: &FieldContext) -> Result<FieldElement, FieldError> {
    let int = |x: &str| {
        if x.is_empty() || !x.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_error(whole, format!("bad number `{x}`")));
        }
        Ok(x.parse::<BigInt>().expect("digits"))
    };
    match s.split_once('/') {
        None => Ok(ctx.from_bigint(&int(s)?)),
        Some((n, d)) => {
            let num = ctx.from_bigint(&int(n)?);
            let den = ctx.from_bigint(&int(d)?);
            if den.is_zero() {
                return Err(FieldError::ZeroDenominator(whole.to_string()));
            }
            Ok(&num / &den)
        }
    }
}

impl std::str::FromStr for FieldContext {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_context(s)
    }
}

impl FieldContext {
    /// Parse a modulus written as a polynomial in `t` with integer coefficients,
    /// e.g. `t^3+t+1`, returning coefficients low degree first.
    pub fn parse_modulus(text: &str, p: u64) -> Result<Vec<u64>, FieldError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut coeffs: Vec<i128> = Vec::new();
        let bytes = compact.as_bytes();
        let mut start = 0;
        while start < bytes.len() {
            let sign: i128 = if bytes[start] == b'-' { -1 } else { 1 };
            if bytes[start] == b'-' || bytes[start] == b'+' {
                start += 1;
            }
            let end = compact[start..]
                .find(['+', '-'])
                .map(|off| start + off)
                .unwrap_or(bytes.len());
            let term = &compact[start..end];
            let (c, e) = match term.find('t') {
                None => (term, 0usize),
                Some(pos) => {
                    let c = term[..pos].strip_suffix('*').unwrap_or(&term[..pos]);
                    let rest = &term[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| parse_error(text, "bad exponent"))?
                    };
                    (if c.is_empty() { "1" } else { c }, e)
                }
            };
            let c: i128 = c
                .parse()
                .map_err(|_| parse_error(text, format!("bad coefficient `{c}`")))?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] += sign * c;
            start = end;
        }
        Ok(coeffs
            .into_iter()
            .map(|c| c.rem_euclid(p as i128) as u64)
            .collect())
    }

    /// `GF(p^k)` with the modulus given in text form.
    pub fn extension_from_text(p: u64, modulus: &str) -> Result<Self, FieldError> {
        Self::extension_with_modulus(p, Self::parse_modulus(modulus, p)?)
    }
}

impl FieldKind {
    pub fn is_extension(&self) -> bool {
        matches!(self, FieldKind::Extension { .. })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_literal() {
        let q = FieldContext::rationals();
        let x = parse_element("-52/81", &q).unwrap();
        assert_eq!(x.to_string(), "-52/81");
        assert_eq!(parse_element("4/6", &q).unwrap().to_string(), "2/3");
        assert!(parse_element("3/-1", &q).is_err());
    }

    #[test]
    fn prime_reduction() {
        let gf3 = FieldContext::parse("GF(3)").unwrap();
        assert_eq!(parse_element("5", &gf3).unwrap().to_string(), "2");
        assert_eq!(parse_element("-1", &gf3).unwrap().to_string(), "2");
        assert_eq!(parse_element("1/2", &gf3).unwrap().to_string(), "2");
    }

    #[test]
    fn extension_polynomials() {
        let gf4 = FieldContext::parse("GF(2^2)").unwrap();
        let x = parse_element("t+1", &gf4).unwrap();
        assert_eq!(x, &gf4.generator().unwrap() + &gf4.one());
        assert_eq!(x.to_string(), "t+1");
        // t^2 = t + 1 in GF(4).
        assert_eq!(parse_element("t^2", &gf4).unwrap().to_string(), "t+1");
        let gf9 = FieldContext::parse("GF(3^2)").unwrap();
        assert_eq!(parse_element("2*t+2", &gf9).unwrap().to_string(), "2*t+2");
        assert_eq!(parse_element("-t", &gf9).unwrap().to_string(), "2*t");
    }

    #[test]
    fn parse_errors() {
        let q = FieldContext::rationals();
        assert!(matches!(parse_element("", &q), Err(FieldError::Parse { .. })));
        assert!(matches!(parse_element("t", &q), Err(FieldError::Parse { .. })));
        assert!(matches!(parse_element("1//2", &q), Err(FieldError::Parse { .. })));
        assert!(matches!(parse_element("x", &q), Err(FieldError::Parse { .. })));
        assert_eq!(
            parse_element("3/0", &q),
            Err(FieldError::ZeroDenominator("3/0".into()))
        );
        let gf5 = FieldContext::prime(5).unwrap();
        assert!(matches!(parse_element("1/5", &gf5), Err(FieldError::ZeroDenominator(_))));
    }

    #[test]
    fn contexts() {
        assert_eq!(FieldContext::parse("Q").unwrap(), FieldContext::rationals());
        assert_eq!(FieldContext::parse("GF(7)").unwrap().to_string(), "GF(7)");
        assert_eq!(FieldContext::parse("GF(2^3)").unwrap().modulus().unwrap(), &[1, 1, 0, 1]);
        assert!(FieldContext::parse("GF(4)").is_err());
        assert!(FieldContext::parse("R").is_err());
        let custom = FieldContext::extension_from_text(2, "t^3+t^2+1").unwrap();
        assert_eq!(custom.modulus().unwrap(), &[1, 0, 1, 1]);
    }
}
