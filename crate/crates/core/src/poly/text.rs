//! Canonical text form.
//!
//! Terms appear in descending monomial order joined by ` + ` / ` - `. Inside
//! a term the factors are `c*q^a*s^b*x^d`: unit coefficients are dropped on
//! non-constant terms, exponent 1 is dropped, and zero exponents drop the
//! factor. The zero polynomial is `0`.

use std::fmt::{self, Display, Write};
use std::str::FromStr;

use super::monomial::Monomial;
use super::mpoly::MPoly;
use crate::error::Error;
use crate::scalar::Coefficient;

fn write_factor(out: &mut String, var: char, e: i64, first: &mut bool) {
    if e == 0 {
        return;
    }
    if !*first {
        out.push('*');
    }
    *first = false;
    out.push(var);
    if e != 1 {
        write!(out, "^{e}").unwrap();
    }
}

fn write_term<C: Coefficient>(out: &mut String, m: &Monomial, c: &C) {
    let mut first = true;
    if m.is_one() || !c.is_one() {
        write!(out, "{c}").unwrap();
        first = false;
    }
    write_factor(out, 'q', m.eq as i64, &mut first);
    write_factor(out, 's', m.es as i64, &mut first);
    write_factor(out, 'x', m.ex as i64, &mut first);
}

impl<C: Coefficient> Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().iter().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            write_term(&mut out, m, &magnitude);
        }
        f.write_str(&out)
    }
}

impl<C: Coefficient> MPoly<C> {
    pub fn to_canonical_text(&self) -> String {
        self.to_string()
    }
}

/// Parses the canonical form, and anything reasonably close to it: factors
/// may appear in any order, repeat, and whitespace is free.
impl<C: Coefficient> FromStr for MPoly<C> {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self, Error> {
        let fail = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(fail("empty input"));
        }

        // Split into signed terms; a '-' right after '^' belongs to an exponent.
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut negative = false;
        let mut current = String::new();
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            let is_sep = (ch == '+' || ch == '-') && prev != Some('^');
            if is_sep {
                if !current.is_empty() {
                    pieces.push((negative, std::mem::take(&mut current)));
                    negative = false;
                } else if prev.is_some() && prev != Some('+') && prev != Some('-') {
                    return Err(fail("misplaced sign"));
                }
                if ch == '-' {
                    negative = !negative;
                }
            } else {
                current.push(ch);
            }
            prev = Some(ch);
        }
        if current.is_empty() {
            return Err(fail("dangling sign"));
        }
        pieces.push((negative, current));

        let mut terms = Vec::with_capacity(pieces.len());
        for (negative, body) in pieces {
            let mut coeff = C::one();
            let mut mono = Monomial::ONE;
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(fail("empty factor"));
                }
                let first = factor.chars().next().unwrap();
                if first.is_ascii_digit() {
                    let c: C = factor.parse().map_err(|_| fail("bad coefficient"))?;
                    coeff *= &c;
                    continue;
                }
                let (var, exp) = match factor.split_once('^') {
                    Some((v, e)) => (v, e.parse::<i32>().map_err(|_| fail("bad exponent"))?),
                    None => (factor, 1),
                };
                let step = match var {
                    "x" => {
                        if exp < 0 {
                            return Err(fail("negative power of x"));
                        }
                        Monomial::new(exp as u32, 0, 0)
                    }
                    "s" => Monomial::sq(exp, 0),
                    "q" => Monomial::sq(0, exp),
                    _ => return Err(fail("unknown variable")),
                };
                mono = mono * step;
            }
            if negative {
                coeff = -coeff;
            }
            terms.push((mono, coeff));
        }
        let poly = MPoly::from_terms(terms);
        debug_assert!(!poly.terms().iter().any(|(_, c)| c.is_zero()));
        Ok(poly)
    }
}

#[cfg(test)]
mod tests {
    use crate::Poly;

    fn p(text: &str) -> Poly {
        text.parse().unwrap()
    }

    #[test]
    fn rendering_examples() {
        assert_eq!(p("q*s + x^2").to_canonical_text(), "x^2 + q*s");
        assert_eq!(Poly::zero().to_canonical_text(), "0");
        assert_eq!(p("-s*q").to_canonical_text(), "-q*s");
    }

    #[test]
    fn rendering_details() {
        assert_eq!(p("x^4 + 3*s*x^2 + s^2").to_string(), "x^4 + 3*s*x^2 + s^2");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("q^2 + 2*q + 1").to_string(), "1 + 2*q + q^2");
        assert_eq!(p("q*s^-1").to_string(), "q*s^-1");
        assert_eq!(p("x - 2*q^-3*x^0").to_string(), "x - 2*q^-3");
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "x +", "x^", "y", "x^-1", "2*", "x++*s"] {
            assert!(bad.parse::<Poly>().is_err(), "{bad:?} parsed");
        }
    }

    #[test]
    fn parse_accepts_sign_runs_and_repeats() {
        assert_eq!(p("x*x - -s"), p("x^2 + s"));
        assert_eq!(p("3*2*q"), p("6*q"));
    }
}
