//! Text form of multivectors.
//!
//! Two input layouts are accepted:
//!
//! * eight comma-separated reals in blade order `1, e1, e2, e3, e12, e13, e23, e123`,
//! * a signed sum of terms such as `4 + 1*e1 - 5*e3 + 10*e12 - 4*e123`, where a
//!   bare blade means coefficient 1, `I` is accepted for `e123`, repeated blades
//!   are summed and missing blades are zero.
//!
//! Either form may end in `/ N` to divide every coefficient by `N`.

use std::fmt;

use crate::error::{GaError, Result};
use crate::multivector::Multivector;
use crate::signature::{Signature, BASIS};

#[derive(Debug, Clone, Copy, PartialEq)]
enum Tok {
    Num(f64),
    Blade(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Comma,
    End,
}

#[derive(Debug, Clone, Copy)]
struct Token {
    tok: Tok,
    /// 1-based column of the first character.
    column: usize,
}

fn err(column: usize, message: impl Into<String>) -> GaError {
    GaError::Parse { column, message: message.into() }
}

fn blade_index(name: &str) -> Option<usize> {
    if name == "I" {
        return Some(7);
    }
    BASIS.iter().skip(1).position(|b| *b == name).map(|k| k + 1)
}

fn describe_unknown(name: &str) -> String {
    let digits = name.strip_prefix('e').filter(|d| !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()));
    if let Some(d) = digits {
        let mut sorted: Vec<char> = d.chars().collect();
        sorted.sort_unstable();
        sorted.dedup();
        let in_range = sorted.iter().all(|c| ('1'..='3').contains(c));
        if in_range && sorted.len() == d.len() {
            let canonical: String = std::iter::once('e').chain(sorted).collect();
            return format!(
                "unknown blade `{name}`: blades are written with ascending indices (e13, not e31); use `{canonical}` with the sign adjusted for the swap"
            );
        }
    }
    format!("unknown blade `{name}`: expected one of e1, e2, e3, e12, e13, e23, e123 or I")
}

fn lex(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, column });
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            // Exponent only when followed by a (signed) digit, so `2*e1` stays intact.
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let text: String = chars[start..i].iter().collect();
            let v: f64 = text.parse().map_err(|_| err(column, format!("malformed number `{text}`")))?;
            out.push(Token { tok: Tok::Num(v), column });
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let k = blade_index(&name).ok_or_else(|| err(column, describe_unknown(&name)))?;
            out.push(Token { tok: Tok::Blade(k), column });
        } else {
            return Err(err(column, format!("unexpected character `{c}`")));
        }
    }
    out.push(Token { tok: Tok::End, column: chars.len() + 1 });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Token {
        self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos];
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn signed_number(&mut self) -> Result<f64> {
        let mut sign = 1.0;
        let mut t = self.next();
        match t.tok {
            Tok::Minus => {
                sign = -1.0;
                t = self.next();
            }
            Tok::Plus => t = self.next(),
            _ => {}
        }
        match t.tok {
            Tok::Num(v) => Ok(sign * v),
            _ => Err(err(t.column, "expected a number")),
        }
    }

    fn comma_list(&mut self) -> Result<[f64; 8]> {
        let mut c = [0.0; 8];
        for (k, slot) in c.iter_mut().enumerate() {
            if k > 0 {
                let t = self.next();
                if t.tok != Tok::Comma {
                    return Err(err(t.column, format!("expected `,` after coefficient {k} of 8")));
                }
            }
            *slot = self.signed_number()?;
        }
        Ok(c)
    }

    fn terms(&mut self) -> Result<[f64; 8]> {
        let mut c = [0.0; 8];
        let mut first = true;
        loop {
            let t = self.peek();
            let sign = match t.tok {
                Tok::Plus => {
                    self.next();
                    1.0
                }
                Tok::Minus => {
                    self.next();
                    -1.0
                }
                _ if first => 1.0,
                _ => break,
            };
            first = false;
            let t = self.next();
            let (coef, blade) = match t.tok {
                Tok::Num(v) => {
                    if self.peek().tok == Tok::Star {
                        self.next();
                        let b = self.next();
                        match b.tok {
                            Tok::Blade(k) => (v, k),
                            _ => return Err(err(b.column, "expected a blade after `*`")),
                        }
                    } else {
                        (v, 0)
                    }
                }
                Tok::Blade(k) => (1.0, k),
                _ => return Err(err(t.column, "expected a number or a blade")),
            };
            c[blade] += sign * coef;
        }
        Ok(c)
    }

    fn parse(&mut self) -> Result<[f64; 8]> {
        let is_list = self.toks.iter().any(|t| t.tok == Tok::Comma);
        let mut c = if is_list { self.comma_list()? } else { self.terms()? };
        let t = self.next();
        match t.tok {
            Tok::End => {}
            Tok::Slash => {
                let d = self.next();
                let n = match d.tok {
                    Tok::Num(v) => v,
                    _ => return Err(err(d.column, "expected a number after `/`")),
                };
                if n == 0.0 {
                    return Err(err(d.column, "division by zero"));
                }
                let end = self.next();
                if end.tok != Tok::End {
                    return Err(err(end.column, "unexpected input after the divisor"));
                }
                c.iter_mut().for_each(|v| *v /= n);
            }
            _ => return Err(err(t.column, "unexpected token")),
        }
        Ok(c)
    }
}

/// Parses either input layout into a multivector of signature `sig`.
pub fn parse_mv(s: &str, sig: Signature) -> Result<Multivector> {
    let toks = lex(s)?;
    if toks.len() == 1 {
        return Err(err(1, "empty multivector"));
    }
    let c = Parser { toks, pos: 0 }.parse()?;
    Ok(Multivector::new(sig, c))
}

/// Fixed-point text of `v` with `digits - 1` decimals, cut (not rounded)
/// after the last kept digit; `None` gives the shortest round-trip text.
pub fn format_value(v: f64, digits: Option<usize>) -> String {
    let Some(d) = digits else {
        return format!("{v}");
    };
    let places = d.saturating_sub(1);
    if !v.is_finite() {
        return format!("{v}");
    }
    // Extra exact digits make the cut independent of rounding at the last place.
    let long = format!("{:.*}", places + 30, v);
    let cut = long.len() - 30 - usize::from(places == 0);
    long[..cut].to_string()
}

/// Signed terms in blade order with exact zeros left out.
///
/// `digits = Some(n)` prints `n - 1` decimal places, truncated, so values
/// below one read like `0.0806082`. `None` prints the shortest text that reads back to the
/// same `f64`.
pub fn render(x: &Multivector, digits: Option<usize>) -> String {
    let mut out = String::new();
    for (k, &v) in x.c.iter().enumerate() {
        if v == 0.0 {
            continue;
        }
        let negative = v.is_sign_negative();
        let mag = format_value(v.abs(), digits);
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&mag);
        if k > 0 {
            out.push('*');
            out.push_str(BASIS[k]);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, f.precision().map(|p| p + 1)))
    }
}
