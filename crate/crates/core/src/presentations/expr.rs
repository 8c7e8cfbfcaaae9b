//! Module expressions:
//!
//! ```text
//! expr := name                       builtin, or Md_d / Md_rd
//!       | '<' equation '>'           single-sentence module
//!       | 'combine' '(' expr ',' expr ')'
//!       | 'hide' '(' sym ',' expr ')'
//!       | 'export' '(' '{' sym (',' sym)* '}' ',' expr ')'
//!       | 'rename' '(' sym ':=' sym ',' expr ')'
//! ```
//!
//! Symbols are written by name (`0 1 + * neg inv / -`); `·`, `÷` and `⁻¹`
//! are accepted for `*`, `/` and `inv`.

use super::{builtin, combine, export, hide, md_d, md_rd, rename, Presentation, PresentationError};

/// Evaluates a module expression to a flat presentation.
pub fn flatten(text: &str) -> Result<Presentation, PresentationError> {
    let mut p = ExprParser { text, pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("trailing input"));
    }
    Ok(out)
}

struct ExprParser<'a> {
    text: &'a str,
    pos: usize,
}

const DELIMS: &[char] = &['(', ')', '{', '}', ',', '<', '>', ':'];

impl ExprParser<'_> {
    fn error(&self, message: &str) -> PresentationError {
        PresentationError::Expression {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), PresentationError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{s}`")))
        }
    }

    fn word(&mut self) -> Result<&str, PresentationError> {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| c.is_whitespace() || DELIMS.contains(&c))
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a name"));
        }
        self.pos += len;
        Ok(&self.text[start..start + len])
    }

    fn symbol(&mut self) -> Result<String, PresentationError> {
        Ok(match self.word()? {
            "·" => "*".into(),
            "÷" => "/".into(),
            "⁻¹" => "inv".into(),
            w => w.to_string(),
        })
    }

    fn expr(&mut self) -> Result<Presentation, PresentationError> {
        if self.eat("<") {
            let start = self.pos;
            let end = self.rest().find('>').ok_or_else(|| self.error("unclosed `<`"))?;
            self.pos += end + 1;
            return Presentation::sentence(&self.text[start..start + end]).map_err(|e| {
                PresentationError::Expression {
                    pos: start,
                    message: e.to_string(),
                }
            });
        }
        let at = self.pos;
        let head = self.word()?.to_string();
        match head.as_str() {
            "combine" => {
                self.expect("(")?;
                let a = self.expr()?;
                self.expect(",")?;
                let b = self.expr()?;
                self.expect(")")?;
                combine(&a, &b)
            }
            "hide" => {
                self.expect("(")?;
                let sym = self.symbol()?;
                self.expect(",")?;
                let a = self.expr()?;
                self.expect(")")?;
                hide(&sym, &a)
            }
            "export" => {
                self.expect("(")?;
                self.expect("{")?;
                let mut syms = vec![self.symbol()?];
                while self.eat(",") {
                    syms.push(self.symbol()?);
                }
                self.expect("}")?;
                self.expect(",")?;
                let a = self.expr()?;
                self.expect(")")?;
                let names: Vec<&str> = syms.iter().map(String::as_str).collect();
                export(&names, &a)
            }
            "rename" => {
                self.expect("(")?;
                let from = self.symbol()?;
                self.expect(":=")?;
                let to = self.symbol()?;
                self.expect(",")?;
                let a = self.expr()?;
                self.expect(")")?;
                rename(&from, &to, &a)
            }
            name => match name.to_ascii_lowercase().as_str() {
                "md_d" => Ok(md_d()),
                "md_rd" => Ok(md_rd()),
                lower => builtin(lower).map_err(|e| match e {
                    PresentationError::UnknownBuiltin(_) => PresentationError::Expression {
                        pos: at,
                        message: format!("unknown module `{name}`"),
                    },
                    e => e,
                }),
            },
        }
    }
}
