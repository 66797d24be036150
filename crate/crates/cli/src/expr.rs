//! Monomial expressions: `1`, or factors `name` / `name^e` joined by `*`.
//! Whitespace is ignored and repeated variables add their exponents.

use epslab_core::Monomial;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError {
    /// Byte offset into the expression.
    pub position: usize,
    pub message: String,
}

impl std::fmt::Display for ExprError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at position {}", self.message, self.position)
    }
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !pred(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn error(&self, message: impl Into<String>) -> ExprError {
        ExprError {
            position: self.pos,
            message: message.into(),
        }
    }
}

pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_monomial(text: &str, names: &[String]) -> Result<Monomial, ExprError> {
    let mut lex = Lexer { text, pos: 0 };
    let mut exps = vec![0u32; names.len()];
    match lex.peek() {
        None => return Err(lex.error("empty monomial")),
        Some('1') => {
            lex.pos += 1;
            return match lex.peek() {
                None => Ok(Monomial::one(names.len())),
                Some(c) => Err(lex.error(format!("unexpected '{c}' after 1"))),
            };
        }
        _ => {}
    }
    loop {
        let start = {
            lex.skip_ws();
            lex.pos
        };
        let name = lex.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        if name.is_empty() || !is_identifier(name) {
            lex.pos = start;
            return Err(match lex.peek() {
                Some(c) => lex.error(format!("expected a variable, found '{c}'")),
                None => lex.error("expected a variable"),
            });
        }
        let index = names.iter().position(|n| n == name).ok_or_else(|| ExprError {
            position: start,
            message: format!("unknown variable '{name}'"),
        })?;
        let mut exponent = 1u32;
        if lex.peek() == Some('^') {
            lex.pos += 1;
            lex.skip_ws();
            let digits_at = lex.pos;
            let digits = lex.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                return Err(lex.error("expected an exponent after '^'"));
            }
            exponent = digits.parse().map_err(|_| ExprError {
                position: digits_at,
                message: "exponent too large".into(),
            })?;
        }
        exps[index] = exps[index].checked_add(exponent).ok_or_else(|| lex.error("exponent too large"))?;
        match lex.peek() {
            None => break,
            Some('*') => lex.pos += 1,
            Some(c) => return Err(lex.error(format!("expected '*', found '{c}'"))),
        }
    }
    Monomial::new(exps).map_err(|e| ExprError {
        position: 0,
        message: e.to_string(),
    })
}

/// Parses each entry of `list`, tagging errors with `field[index]`.
pub fn parse_list(field: &str, list: &[String], names: &[String]) -> Result<Vec<Monomial>, CliError> {
    list.iter()
        .enumerate()
        .map(|(i, text)| {
            parse_monomial(text, names).map_err(|e| CliError::Parse(format!("{field}[{i}] \"{text}\": {e}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into(), "z2".into()]
    }

    fn show(text: &str) -> String {
        let n = names();
        let m = parse_monomial(text, &n).unwrap();
        let shown = m.display_with(&n).to_string();
        shown
    }

    #[test]
    fn canonical_round_trip() {
        assert_eq!(show("x^2*y"), "x^2*y");
        assert_eq!(show(" y * x ^ 2 "), "x^2*y");
        assert_eq!(show("x*x*y^0"), "x^2");
        assert_eq!(show("1"), "1");
        assert_eq!(show("z2^3*x"), "x*z2^3");
        for s in ["x^2*y", "x*z2^3", "1", "y^4"] {
            assert_eq!(show(&show(s)), show(s));
        }
    }

    #[test]
    fn errors_carry_positions() {
        let n = names();
        let err = parse_monomial("x*w", &n).unwrap_err();
        assert_eq!(err.position, 2);
        assert!(err.message.contains("unknown variable 'w'"));
        assert_eq!(parse_monomial("x^", &n).unwrap_err().position, 2);
        assert_eq!(parse_monomial("x y", &n).unwrap_err().position, 2);
        assert_eq!(parse_monomial("x**y", &n).unwrap_err().position, 2);
        assert_eq!(parse_monomial("", &n).unwrap_err().position, 0);
        assert!(parse_monomial("1*x", &n).is_err());
        assert!(parse_monomial("2x", &n).is_err());
        assert!(parse_monomial("x^99999999999", &n).is_err());
    }

    #[test]
    fn identifiers() {
        assert!(is_identifier("x_1"));
        assert!(!is_identifier("1x"));
        assert!(!is_identifier(""));
    }
}
