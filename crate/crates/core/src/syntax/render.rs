use crate::term::Term;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Notation {
    /// The ASCII infix grammar accepted by the parser.
    #[default]
    Infix,
    /// Prefix s-expressions, e.g. `(+ x (* y (inv z)))`.
    SExpr,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RenderOptions {
    pub notation: Notation,
    /// Print subterms that are literally numerals (`(1 + 1) + 1`) as
    /// decimal literals (`3`). Off by default so that output shows the
    /// exact tree.
    pub numerals: bool,
}

pub fn render(t: &Term) -> String {
    render_with(t, RenderOptions::default())
}

pub fn render_with(t: &Term, opts: RenderOptions) -> String {
    let mut out = String::new();
    match opts.notation {
        Notation::Infix => infix(t, Level::Sum, opts.numerals, &mut out),
        Notation::SExpr => sexpr(t, opts.numerals, &mut out),
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Sum,
    Product,
    Unary,
    Postfix,
    Atom,
}

fn level(t: &Term, numerals: bool) -> Level {
    if numerals && t.as_numeral().is_some() {
        return Level::Atom;
    }
    match t {
        Term::Zero | Term::One | Term::Var(_) => Level::Atom,
        Term::Add(..) | Term::Sub(..) => Level::Sum,
        Term::Mul(..) | Term::Div(..) => Level::Product,
        Term::Neg(_) => Level::Unary,
        Term::Inv(_) => Level::Postfix,
    }
}

fn infix(t: &Term, min: Level, numerals: bool, out: &mut String) {
    if level(t, numerals) < min {
        out.push('(');
        infix(t, Level::Sum, numerals, out);
        out.push(')');
        return;
    }
    if numerals {
        if let Some(n) = t.as_numeral() {
            out.push_str(&n.to_string());
            return;
        }
    }
    let binary = |l: &Term, op: &str, r: &Term, lvl: Level, rlvl: Level, out: &mut String| {
        infix(l, lvl, numerals, out);
        out.push_str(op);
        infix(r, rlvl, numerals, out);
    };
    match t {
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::Var(v) => out.push_str(v),
        Term::Add(l, r) => binary(l, " + ", r, Level::Sum, Level::Product, out),
        Term::Sub(l, r) => binary(l, " - ", r, Level::Sum, Level::Product, out),
        Term::Mul(l, r) => binary(l, " * ", r, Level::Product, Level::Unary, out),
        Term::Div(l, r) => binary(l, " / ", r, Level::Product, Level::Unary, out),
        Term::Neg(a) => {
            out.push('-');
            infix(a, Level::Unary, numerals, out);
        }
        Term::Inv(a) => {
            infix(a, Level::Postfix, numerals, out);
            out.push_str("^-1");
        }
    }
}

fn sexpr(t: &Term, numerals: bool, out: &mut String) {
    if numerals {
        if let Some(n) = t.as_numeral() {
            out.push_str(&n.to_string());
            return;
        }
    }
    let (op, args): (&str, Vec<&Term>) = match t {
        Term::Zero => return out.push('0'),
        Term::One => return out.push('1'),
        Term::Var(v) => return out.push_str(v),
        Term::Add(..) => ("+", t.children()),
        Term::Mul(..) => ("*", t.children()),
        Term::Neg(_) => ("neg", t.children()),
        Term::Inv(_) => ("inv", t.children()),
        Term::Div(..) => ("/", t.children()),
        Term::Sub(..) => ("-", t.children()),
    };
    out.push('(');
    out.push_str(op);
    for a in args {
        out.push(' ');
        sexpr(a, numerals, out);
    }
    out.push(')');
}
