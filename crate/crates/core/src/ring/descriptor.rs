//! Text descriptors for ring atoms `(Z/m)[x]/(f)` and polynomials in `x`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One factor `(Z/m)[x]/(f)` of a product ring. `Z/m` is the case `f = x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomSpec {
    pub modulus: u64,
    /// Coefficients of `f`, constant term first.
    pub poly: Vec<i64>,
}

impl AtomSpec {
    pub fn integers_mod(m: u64) -> Self {
        AtomSpec { modulus: m, poly: vec![0, 1] }
    }

    pub fn new(modulus: u64, poly: Vec<i64>) -> Self {
        AtomSpec { modulus, poly }
    }

    /// Parses `Z/12`, `F3`, `F_5`, `GF(7)` or `(Z/4)[x]/(x^2+x+1)`.
    pub fn parse(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::Parse { line: 1, column: 1, message: format!("{msg}: {text:?}") };
        if let Some(rest) = t.strip_prefix("(Z/") {
            let close = rest.find(')').ok_or_else(|| bad("unclosed modulus"))?;
            let m: u64 = rest[..close].parse().map_err(|_| bad("bad modulus"))?;
            let tail = &rest[close + 1..];
            let poly_text = tail
                .strip_prefix("[x]/(")
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(|| bad("expected [x]/(f)"))?;
            return Ok(AtomSpec { modulus: m, poly: parse_poly(poly_text)? });
        }
        let digits = t
            .strip_prefix("Z/")
            .or_else(|| t.strip_prefix("F_"))
            .or_else(|| t.strip_prefix("GF(").and_then(|s| s.strip_suffix(')')))
            .or_else(|| t.strip_prefix('F'))
            .ok_or_else(|| bad("unrecognised ring atom"))?;
        let m: u64 = digits.parse().map_err(|_| bad("bad modulus"))?;
        Ok(AtomSpec::integers_mod(m))
    }
}

impl std::fmt::Display for AtomSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.poly == [0, 1] {
            write!(f, "Z/{}", self.modulus)
        } else {
            write!(f, "(Z/{})[x]/({})", self.modulus, format_poly_signed(&self.poly))
        }
    }
}

/// Parses an integer polynomial in `x`, e.g. `x^2 + 2x - 1`; constant term first.
pub fn parse_poly(text: &str) -> Result<Vec<i64>> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |msg: String| Error::Parse { line: 1, column: 1, message: msg };
    if t.is_empty() {
        return Err(err("empty polynomial".into()));
    }
    let mut coeffs: Vec<i64> = Vec::new();
    let mut terms: Vec<(i64, &str)> = Vec::new();
    let bytes = t.as_bytes();
    let mut start = 0;
    let mut sign = 1;
    if bytes[0] == b'-' || bytes[0] == b'+' {
        sign = if bytes[0] == b'-' { -1 } else { 1 };
        start = 1;
    }
    let mut i = start;
    while i <= bytes.len() {
        if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
            if i == start {
                return Err(err(format!("empty term in {t:?}")));
            }
            terms.push((sign, &t[start..i]));
            if i < bytes.len() {
                sign = if bytes[i] == b'-' { -1 } else { 1 };
            }
            start = i + 1;
        }
        i += 1;
    }
    for (sign, term) in terms {
        let (coef, power) = match term.find('x') {
            None => (term.parse::<i64>().map_err(|_| err(format!("bad term {term:?}")))?, 0usize),
            Some(pos) => {
                let c = term[..pos].trim_end_matches('*');
                let c = if c.is_empty() {
                    1
                } else {
                    c.parse::<i64>().map_err(|_| err(format!("bad coefficient {c:?}")))?
                };
                let rest = &term[pos + 1..];
                let p = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| err(format!("bad exponent in {term:?}")))?
                };
                (c, p)
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] += sign * coef;
    }
    Ok(coeffs)
}

/// Formats coefficients (constant first) as `a + bx + cx^2`, skipping zeros.
pub fn format_poly(coeffs: &[u32]) -> String {
    let mut parts = Vec::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        parts.push(match (c, k) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

fn format_poly_signed(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        let abs = c.unsigned_abs();
        let body = if k > 0 && abs == 1 { mono } else { format!("{abs}{mono}") };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push(if c < 0 { '-' } else { '+' });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials() {
        assert_eq!(parse_poly("x^2+x+1").unwrap(), vec![1, 1, 1]);
        assert_eq!(parse_poly("x^2").unwrap(), vec![0, 0, 1]);
        assert_eq!(parse_poly("-x").unwrap(), vec![0, -1]);
        assert_eq!(parse_poly("2 + 3x - x^3").unwrap(), vec![2, 3, 0, -1]);
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("").is_err());
    }

    #[test]
    fn atoms() {
        assert_eq!(AtomSpec::parse("Z/12").unwrap(), AtomSpec::integers_mod(12));
        assert_eq!(AtomSpec::parse("F3").unwrap(), AtomSpec::integers_mod(3));
        assert_eq!(AtomSpec::parse("GF(7)").unwrap(), AtomSpec::integers_mod(7));
        let a = AtomSpec::parse("(Z/4)[x]/(x^2+x+1)").unwrap();
        assert_eq!(a, AtomSpec::new(4, vec![1, 1, 1]));
        assert_eq!(a.to_string(), "(Z/4)[x]/(x^2+x+1)");
        assert!(AtomSpec::parse("Q").is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(format_poly(&[0, 0]), "0");
        assert_eq!(format_poly(&[2, 1]), "2+x");
        assert_eq!(format_poly(&[0, 2, 1]), "2x+x^2");
    }
}
