//! Surface syntax for terms: parsing and printing.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | postfix
//! postfix := atom ('^' '-' '1' | '^' <natural>)*
//! atom    := <natural> | <ident> | 'inv' '(' sum ')' | '(' sum ')'
//! ```
//!
//! Natural literals are read as the inductive numerals, `t^n` as the power
//! `t^n = t^(n-1) · t`, and `inv(t)` as `t^-1`. Binary `-` becomes
//! `p + (-q)` except under the reduced divisive signature, where it is the
//! primitive [`Term::Sub`].

mod lexer;
mod render;

use thiserror::Error;

use crate::term::{check_signature, numeral, power, SignatureError, SignatureId, Term};
pub(crate) use lexer::{tokenize, Spanned, Tok};
pub use render::{render, render_with, Notation, RenderOptions};

/// Numeral literals above this bound are rejected: a numeral is a
/// left-nested chain of additions and every traversal recurses along it.
pub const MAX_NUMERAL: u64 = 10_000;

/// Exponents in `t^n` are bounded for the same reason.
pub const MAX_EXPONENT: u64 = 1_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error(transparent)]
    Signature(#[from] SignatureError),
}

impl ParseError {
    pub(crate) fn syntax(pos: usize, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            pos,
            message: message.into(),
        }
    }
}

/// How binary `-` is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubMode {
    /// `p - q` is `p + (-q)`.
    Desugar,
    /// `p - q` is the primitive [`Term::Sub`].
    Primitive,
}

/// Parses `text` and checks the result against `sig`.
pub fn parse_term(text: &str, sig: SignatureId) -> Result<Term, ParseError> {
    let mode = if sig.primitive_sub() {
        SubMode::Primitive
    } else {
        SubMode::Desugar
    };
    let t = parse_term_unchecked(text, mode)?;
    check_signature(&t, sig)?;
    Ok(t)
}

/// Parses `text` over the union of all symbols, without a signature check.
pub fn parse_term_unchecked(text: &str, mode: SubMode) -> Result<Term, ParseError> {
    let toks = tokenize(text)?;
    let mut p = TermParser::new(&toks, text.len(), mode);
    let t = p.sum()?;
    p.expect_end()?;
    Ok(t)
}

/// Parses `lhs = rhs`, checking both sides against `sig`.
pub fn parse_equation(text: &str, sig: SignatureId) -> Result<(Term, Term), ParseError> {
    let mode = if sig.primitive_sub() {
        SubMode::Primitive
    } else {
        SubMode::Desugar
    };
    let (l, r) = parse_equation_unchecked(text, mode)?;
    check_signature(&l, sig)?;
    check_signature(&r, sig)?;
    Ok((l, r))
}

pub fn parse_equation_unchecked(text: &str, mode: SubMode) -> Result<(Term, Term), ParseError> {
    let toks = tokenize(text)?;
    let mut p = TermParser::new(&toks, text.len(), mode);
    let l = p.sum()?;
    p.expect(&Tok::Eq)?;
    let r = p.sum()?;
    p.expect_end()?;
    Ok((l, r))
}

/// Recursive-descent parser over a token slice. The formula parser drives it
/// directly so that atoms can be read in place.
pub(crate) struct TermParser<'a> {
    toks: &'a [Spanned],
    pub(crate) pos: usize,
    end: usize,
    mode: SubMode,
}

impl<'a> TermParser<'a> {
    pub(crate) fn new(toks: &'a [Spanned], end: usize, mode: SubMode) -> Self {
        TermParser {
            toks,
            pos: 0,
            end,
            mode,
        }
    }

    pub(crate) fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    pub(crate) fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |s| s.pos)
    }

    pub(crate) fn bump(&mut self) -> Option<&'a Tok> {
        let t = self.toks.get(self.pos).map(|s| &s.tok);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, tok: &Tok) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected {}", tok.describe())))
        }
    }

    pub(crate) fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("expected end of input")),
        }
    }

    pub(crate) fn unexpected(&self, what: &str) -> ParseError {
        let found = self
            .peek()
            .map_or_else(|| "end of input".to_string(), Tok::describe);
        ParseError::syntax(self.here(), format!("{what}, found {found}"))
    }

    pub(crate) fn sum(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.product()?;
        loop {
            if self.eat(&Tok::Plus) {
                let rhs = self.product()?;
                acc = Term::add(acc, rhs);
            } else if self.peek() == Some(&Tok::Minus) {
                self.pos += 1;
                let rhs = self.product()?;
                acc = match self.mode {
                    SubMode::Desugar => Term::add(acc, Term::neg(rhs)),
                    SubMode::Primitive => Term::sub(acc, rhs),
                };
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                let rhs = self.unary()?;
                acc = Term::mul(acc, rhs);
            } else if self.eat(&Tok::Slash) {
                let rhs = self.unary()?;
                acc = Term::div(acc, rhs);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        if self.eat(&Tok::Minus) {
            Ok(Term::neg(self.unary()?))
        } else {
            self.postfix()
        }
    }

    fn postfix(&mut self) -> Result<Term, ParseError> {
        let mut t = self.atom()?;
        while self.eat(&Tok::Caret) {
            let at = self.here();
            match self.bump() {
                Some(Tok::Minus) => match self.bump() {
                    Some(Tok::Num(1)) => t = Term::inv(t),
                    _ => return Err(ParseError::syntax(at, "only `^-1` is a negative exponent")),
                },
                Some(Tok::Num(n)) => {
                    if *n > MAX_EXPONENT {
                        return Err(ParseError::syntax(
                            at,
                            format!("exponent {n} exceeds the limit {MAX_EXPONENT}"),
                        ));
                    }
                    t = power(&t, *n as u32);
                }
                _ => return Err(ParseError::syntax(at, "expected `-1` or a natural after `^`")),
            }
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        let at = self.here();
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = *n;
                if n > MAX_NUMERAL {
                    return Err(ParseError::syntax(
                        at,
                        format!("numeral {n} exceeds the limit {MAX_NUMERAL}"),
                    ));
                }
                self.pos += 1;
                Ok(numeral(n))
            }
            Some(Tok::Ident(name)) if name == "inv" => {
                self.pos += 1;
                self.expect(&Tok::LParen)?;
                let t = self.sum()?;
                self.expect(&Tok::RParen)?;
                Ok(Term::inv(t))
            }
            Some(Tok::Ident(name)) => {
                if crate::term::RESERVED.contains(&name.as_str()) {
                    return Err(ParseError::syntax(
                        at,
                        format!("`{name}` is reserved and cannot name a variable"),
                    ));
                }
                self.pos += 1;
                Ok(Term::Var(name.clone()))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.sum()?;
                self.expect(&Tok::RParen)?;
                Ok(t)
            }
            _ => Err(self.unexpected("expected a term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Symbol;

    fn v(n: &str) -> Term {
        Term::var(n)
    }

    #[test]
    fn precedence() {
        assert_eq!(
            parse_term("x + y * z^-1", SignatureId::Imd).unwrap(),
            Term::add(v("x"), Term::mul(v("y"), Term::inv(v("z"))))
        );
        assert_eq!(
            parse_term("1 / 0", SignatureId::Dmd).unwrap(),
            Term::div(Term::One, Term::Zero)
        );
        assert_eq!(
            parse_term("-x^-1", SignatureId::Imd).unwrap(),
            Term::neg(Term::inv(v("x")))
        );
        assert_eq!(
            parse_term("x - y - z", SignatureId::Cr).unwrap(),
            Term::add(
                Term::add(v("x"), Term::neg(v("y"))),
                Term::neg(v("z"))
            )
        );
        assert_eq!(
            parse_term("inv(x + 1)", SignatureId::Iamd).unwrap(),
            Term::inv(Term::add(v("x"), Term::One))
        );
        assert_eq!(
            parse_term("x^-1^-1", SignatureId::Imd).unwrap(),
            Term::inv(Term::inv(v("x")))
        );
    }

    #[test]
    fn numerals_and_powers_are_sugar() {
        assert_eq!(parse_term("3", SignatureId::Iamd).unwrap(), numeral(3));
        assert_eq!(
            parse_term("x^2", SignatureId::Iamd).unwrap(),
            power(&v("x"), 2)
        );
    }

    #[test]
    fn subtraction_is_primitive_only_in_rd() {
        assert_eq!(
            parse_term("x - (1 - 1)", SignatureId::Rd).unwrap(),
            Term::sub(v("x"), Term::sub(Term::One, Term::One))
        );
        assert_eq!(
            parse_term("x - 1", SignatureId::Imd).unwrap(),
            Term::add(v("x"), Term::neg(Term::One))
        );
    }

    #[test]
    fn signature_errors_name_the_symbol() {
        let err = parse_term("x / y", SignatureId::Imd).unwrap_err();
        assert_eq!(err.to_string(), "÷ not in Σ_imd");
        assert!(matches!(
            parse_term("0", SignatureId::Iamd),
            Err(ParseError::Signature(SignatureError {
                symbol: Symbol::Zero,
                ..
            }))
        ));
        assert!(parse_term("-x", SignatureId::Rd).is_err());
        assert!(parse_term("x - y", SignatureId::Iamdz).is_err());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_term("x + * y", SignatureId::Imd) {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_term("(x + y", SignatureId::Imd).is_err());
        assert!(parse_term("x y", SignatureId::Imd).is_err());
        assert!(parse_term("x^-2", SignatureId::Imd).is_err());
        assert!(parse_term("", SignatureId::Imd).is_err());
        assert!(parse_term("inv", SignatureId::Imd).is_err());
        assert!(parse_term("99999", SignatureId::Imd).is_err());
    }
}
