//! Textual grammar shared by every module: `term (± term)*` with
//! `term = [int][*var^int]*`. Whitespace-insensitive; the printer and parser
//! round-trip bit-exactly.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Exponents, LaurentPolynomial};
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

pub(super) fn parse(alphabet: &Alphabet, input: &str) -> Result<LaurentPolynomial> {
    let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut pos = 0usize;
    let mut terms: BTreeMap<Exponents, BigInt> = BTreeMap::new();
    let mut first = true;
    while pos < chars.len() {
        let mut sign = BigInt::one();
        match chars[pos] {
            '+' => pos += 1,
            '-' => {
                sign = -sign;
                pos += 1;
            }
            _ if first => {}
            c => {
                return Err(Error::Parse(alloc::format!(
                    "expected `+` or `-` before term, found `{c}` at offset {pos}"
                )))
            }
        }
        first = false;
        let (coeff, exps) = parse_term(alphabet, &chars, &mut pos)?;
        LaurentPolynomial::insert_term(&mut terms, exps, sign * coeff);
    }
    for (e, _) in &terms {
        for (i, &x) in e.iter().enumerate() {
            if x < 0 && !alphabet.is_invertible(i) {
                return Err(Error::NegativeExponent(alphabet.name(i).to_string()));
            }
        }
    }
    Ok(LaurentPolynomial { alphabet: alphabet.clone(), terms })
}

fn parse_term(alphabet: &Alphabet, chars: &[char], pos: &mut usize) -> Result<(BigInt, Exponents)> {
    let mut coeff = BigInt::one();
    let mut exps = Exponents::from_elem(0, alphabet.len());
    let mut saw_factor = false;
    loop {
        if *pos >= chars.len() {
            break;
        }
        let c = chars[*pos];
        if c.is_ascii_digit() {
            coeff *= parse_int(chars, pos)?;
            saw_factor = true;
        } else if c.is_alphabetic() || c == '_' {
            let name = parse_ident(chars, pos);
            let idx = alphabet.index_of(&name)?;
            let exp = if *pos < chars.len() && chars[*pos] == '^' {
                *pos += 1;
                parse_signed_small_int(chars, pos)?
            } else {
                1
            };
            exps[idx] += exp;
            saw_factor = true;
        } else {
            return Err(Error::Parse(alloc::format!(
                "unexpected `{c}` at offset {pos}",
                pos = *pos
            )));
        }
        if *pos < chars.len() && chars[*pos] == '*' {
            *pos += 1;
            continue;
        }
        break;
    }
    if !saw_factor {
        return Err(Error::Parse("empty term".into()));
    }
    Ok((coeff, exps))
}

fn parse_int(chars: &[char], pos: &mut usize) -> Result<BigInt> {
    let start = *pos;
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    let digits: String = chars[start..*pos].iter().collect();
    digits
        .parse::<BigInt>()
        .map_err(|_| Error::Parse(alloc::format!("bad integer `{digits}`")))
}

fn parse_signed_small_int(chars: &[char], pos: &mut usize) -> Result<i32> {
    let mut negative = false;
    if *pos < chars.len() && (chars[*pos] == '-' || chars[*pos] == '+') {
        negative = chars[*pos] == '-';
        *pos += 1;
    }
    if *pos >= chars.len() || !chars[*pos].is_ascii_digit() {
        return Err(Error::Parse("expected exponent".into()));
    }
    let start = *pos;
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    let digits: String = chars[start..*pos].iter().collect();
    let value: i32 = digits
        .parse()
        .map_err(|_| Error::Parse(alloc::format!("exponent `{digits}` too large")))?;
    Ok(if negative { -value } else { value })
}

fn parse_ident(chars: &[char], pos: &mut usize) -> String {
    let start = *pos;
    *pos += 1;
    while *pos < chars.len() && (chars[*pos].is_alphanumeric() || chars[*pos] == '_') {
        *pos += 1;
    }
    chars[start..*pos].iter().collect()
}

pub(crate) fn format_monomial(alphabet: &Alphabet, exps: &[i32]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(alphabet.name(i).to_string()),
            _ => parts.push(alloc::format!("{}^{}", alphabet.name(i), e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub(super) fn format_polynomial(
    f: &mut fmt::Formatter<'_>,
    alphabet: &Alphabet,
    terms: &BTreeMap<Exponents, BigInt>,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (e, c) in terms {
        let negative = c.is_negative();
        let abs = c.abs();
        if first {
            if negative {
                write!(f, "-")?;
            }
            first = false;
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let trivial_monomial = e.iter().all(|&x| x == 0);
        if trivial_monomial {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{}", format_monomial(alphabet, e))?;
        } else {
            write!(f, "{}*{}", abs, format_monomial(alphabet, e))?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn roundtrip_is_bit_exact() {
        let alpha = Alphabet::characters_t();
        for s in [
            "1 - a^2*b^2*t^-2",
            "0",
            "-a + b",
            "a^5*b*t^-1 + 2*a^4*b^2*t^-1 - 17",
            "3",
            "-4*t^-3",
        ] {
            let p = LaurentPolynomial::parse(&alpha, s).unwrap();
            let printed = p.to_string();
            let reparsed = LaurentPolynomial::parse(&alpha, &printed).unwrap();
            assert_eq!(p, reparsed);
            assert_eq!(printed, reparsed.to_string());
        }
    }

    #[test]
    fn canonical_print_of_veronese_class() {
        let alpha = Alphabet::characters_t();
        let p = LaurentPolynomial::parse(&alpha, "  1-a^2 * b^2*t^-2 ").unwrap();
        assert_eq!(p.to_string(), "1 - a^2*b^2*t^-2");
    }

    #[test]
    fn whitespace_insensitive_and_repeated_vars() {
        let alpha = Alphabet::characters();
        let p = LaurentPolynomial::parse(&alpha, "a*a*b - 2 * a ^ 2\t*b").unwrap();
        assert_eq!(p.to_string(), "-a^2*b");
    }

    #[test]
    fn rejects_garbage() {
        let alpha = Alphabet::characters();
        assert!(LaurentPolynomial::parse(&alpha, "").is_err());
        assert!(LaurentPolynomial::parse(&alpha, "a + + b").is_err());
        assert!(LaurentPolynomial::parse(&alpha, "c").is_err());
        assert!(LaurentPolynomial::parse(&alpha, "a^").is_err());
        assert!(LaurentPolynomial::parse(&alpha, "(a)").is_err());
    }

    #[test]
    fn rejects_negative_power_of_non_invertible() {
        let alpha = Alphabet::symmetric();
        assert!(matches!(
            LaurentPolynomial::parse(&alpha, "e1^-1"),
            Err(Error::NegativeExponent(_))
        ));
        assert!(LaurentPolynomial::parse(&alpha, "e2^-4").is_ok());
    }
}
