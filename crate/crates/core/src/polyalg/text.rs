//! Text forms: the coefficient list `[c0, c1, ...]` and the human form
//! `1 - 8*t + 8*t^5 - t^6`. Both are accepted by [`IntPoly::from_str`];
//! `Display` emits the human form.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, PolyError, RatFunc};

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl IntPoly {
    /// Renders the ascending coefficient list, e.g. `[1, -8, 1]`.
    pub fn to_list_string(&self) -> String {
        let parts: Vec<String> = self.coeffs().iter().map(|c| format!("{c}")).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den().is_one() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "({}) / ({})", self.num(), self.den())
        }
    }
}

impl FromStr for IntPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PolyError::Parse(String::from("empty input")));
        }
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| PolyError::Parse(String::from("unterminated coefficient list")))?;
            if inner.trim().is_empty() {
                return Ok(IntPoly::zero());
            }
            let coeffs = inner
                .split(',')
                .map(|c| parse_int(c.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(IntPoly::from_coeffs(coeffs));
        }
        parse_human(s)
    }
}

fn parse_int(s: &str) -> Result<BigInt, PolyError> {
    s.parse::<BigInt>()
        .map_err(|_| PolyError::Parse(format!("bad integer `{s}`")))
}

fn parse_human(s: &str) -> Result<IntPoly, PolyError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms: Vec<(bool, &str)> = Vec::new();
    let mut start = 0;
    let mut negative = false;
    let bytes = compact.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && (i == 0 || bytes[i - 1] != b'^') {
            if i > start {
                terms.push((negative, &compact[start..i]));
            } else if i != 0 {
                return Err(PolyError::Parse(format!("dangling sign in `{s}`")));
            }
            negative = b == b'-';
            start = i + 1;
        }
    }
    if start >= compact.len() {
        return Err(PolyError::Parse(format!("trailing sign in `{s}`")));
    }
    terms.push((negative, &compact[start..]));

    let mut acc = IntPoly::zero();
    for (neg, term) in terms {
        let (coef, power) = parse_term(term)?;
        let coef = if neg { -coef } else { coef };
        acc = acc + IntPoly::monomial(coef, power);
    }
    Ok(acc)
}

fn parse_term(term: &str) -> Result<(BigInt, usize), PolyError> {
    let bad = || PolyError::Parse(format!("bad term `{term}`"));
    let var_pos = term.find(['t', 'x']);
    let Some(pos) = var_pos else {
        return Ok((parse_int(term)?, 0));
    };
    let coef_part = term[..pos].strip_suffix('*').unwrap_or(&term[..pos]);
    let coef = if coef_part.is_empty() {
        BigInt::one()
    } else {
        parse_int(coef_part)?
    };
    let rest = &term[pos + 1..];
    let power = if rest.is_empty() {
        1
    } else {
        let e = rest.strip_prefix('^').ok_or_else(bad)?;
        e.parse::<usize>().map_err(|_| bad())?
    };
    Ok((coef, power))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_human_form() {
        let p = IntPoly::from_i64s(&[1, -8, 0, 0, 0, 8, -1]);
        assert_eq!(p.to_string(), "1 - 8*t + 8*t^5 - t^6");
        assert_eq!(IntPoly::from_i64s(&[0, -1, 3]).to_string(), "-t + 3*t^2");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p.to_list_string(), "[1, -8, 0, 0, 0, 8, -1]");
    }

    #[test]
    fn parse_both_forms() {
        let expected = IntPoly::from_i64s(&[1, -8, 0, 0, 0, 8, -1]);
        assert_eq!("1 - 8*t + 8*t^5 - t^6".parse::<IntPoly>().unwrap(), expected);
        assert_eq!("[1, -8, 0, 0, 0, 8, -1]".parse::<IntPoly>().unwrap(), expected);
        assert_eq!("-t^6+8t^5 -8*t+1".parse::<IntPoly>().unwrap(), expected);
        assert_eq!("t - 8".parse::<IntPoly>().unwrap(), IntPoly::from_i64s(&[-8, 1]));
        assert_eq!("[]".parse::<IntPoly>().unwrap(), IntPoly::zero());
        assert!("1 +".parse::<IntPoly>().is_err());
        assert!("t^a".parse::<IntPoly>().is_err());
        assert!("[1, x]".parse::<IntPoly>().is_err());
    }

    #[test]
    fn ratfunc_display() {
        let f = RatFunc::new(IntPoly::from_i64s(&[1, 1]), IntPoly::from_i64s(&[1, -8])).unwrap();
        assert_eq!(f.to_string(), "(-1 - t) / (-1 + 8*t)");
    }
}
