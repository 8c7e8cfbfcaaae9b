//! Formula grammar, loosest binding first:
//!
//! ```text
//! formula := quant | implies
//! quant   := ('forall' | 'exists') <ident> '.' formula
//! implies := or ('->' formula)?
//! or      := and ('|' and)*
//! and     := unary ('&' unary)*
//! unary   := '~' unary | quant | '(' formula ')' | atom
//! atom    := term ('=' | '!=') term
//! ```
//!
//! A parenthesis may open either a term or a formula; the atom reading is
//! tried first.

use super::Formula;
use crate::syntax::{tokenize, ParseError, SubMode, TermParser, Tok};
use crate::term::{check_signature, is_identifier, SignatureId, Term};

/// Parses a formula whose terms must conform to `sig`.
pub fn parse_formula(text: &str, sig: SignatureId) -> Result<Formula, ParseError> {
    let toks = tokenize(text)?;
    let mode = if sig.primitive_sub() {
        SubMode::Primitive
    } else {
        SubMode::Desugar
    };
    let mut p = FormulaParser {
        terms: TermParser::new(&toks, text.len(), mode),
    };
    let f = p.formula()?;
    p.terms.expect_end()?;
    for t in f.terms() {
        check_signature(t, sig)?;
    }
    Ok(f)
}

struct FormulaParser<'a> {
    terms: TermParser<'a>,
}

fn syntax_pos(e: &ParseError) -> usize {
    match e {
        ParseError::Syntax { pos, .. } => *pos,
        ParseError::Signature(_) => 0,
    }
}

impl FormulaParser<'_> {
    fn keyword(&self) -> Option<&str> {
        match self.terms.peek() {
            Some(Tok::Ident(k)) if k == "forall" || k == "exists" => Some(k.as_str()),
            _ => None,
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        if self.keyword().is_some() {
            return self.quant();
        }
        let lhs = self.or()?;
        if self.terms.eat(&Tok::Arrow) {
            let rhs = self.formula()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn quant(&mut self) -> Result<Formula, ParseError> {
        let universal = self.keyword() == Some("forall");
        self.terms.bump();
        let at = self.terms.here();
        let var = match self.terms.bump() {
            Some(Tok::Ident(v)) if is_identifier(v) => v.clone(),
            _ => {
                return Err(ParseError::syntax(at, "expected a variable after the quantifier"))
            }
        };
        self.terms.expect(&Tok::Dot)?;
        let body = self.formula()?;
        Ok(if universal {
            Formula::forall(var, body)
        } else {
            Formula::exists(var, body)
        })
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.and()?;
        while self.terms.eat(&Tok::Pipe) {
            let rhs = self.and()?;
            acc = Formula::or(acc, rhs);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while self.terms.eat(&Tok::Amp) {
            let rhs = self.unary()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.terms.eat(&Tok::Tilde) {
            return Ok(Formula::negate(self.unary()?));
        }
        if self.keyword().is_some() {
            return self.quant();
        }
        if self.terms.peek() == Some(&Tok::LParen) {
            let start = self.terms.pos;
            let atom_err = match self.atom() {
                Ok(f) => return Ok(f),
                Err(e) => e,
            };
            self.terms.pos = start + 1;
            let inner = self.formula().and_then(|f| {
                self.terms.expect(&Tok::RParen)?;
                Ok(f)
            });
            return inner.map_err(|e| {
                if syntax_pos(&atom_err) > syntax_pos(&e) {
                    atom_err
                } else {
                    e
                }
            });
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let l: Term = self.terms.sum()?;
        let negated = match self.terms.peek() {
            Some(Tok::Eq) => false,
            Some(Tok::Neq) => true,
            _ => return Err(self.terms.unexpected("expected `=` or `!=`")),
        };
        self.terms.bump();
        let r = self.terms.sum()?;
        Ok(if negated {
            Formula::neq(l, r)
        } else {
            Formula::eq(l, r)
        })
    }
}
