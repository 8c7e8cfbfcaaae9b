//! Axiom sets as data, with the module operators of basic module algebra at
//! the level of presentations: combination, hiding, export and renaming.
//!
//! A presentation carries a visible and a hidden signature. Nothing here
//! computes equational theories; satisfaction is checked on finite
//! structures by [`visible_models_check`].

mod expr;
mod models;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::axioms::{Equation, PresentationId};
use crate::syntax::{parse_equation_unchecked, SubMode};
use crate::term::{Symbol, Term};

pub use expr::flatten;
pub use models::{visible_models_check, FiniteStructure, ModelReport, Tables};

/// An operation symbol: a name and an arity.
///
/// The meadow symbols are named `0 1 + * neg inv / -`, with `-` the binary
/// subtraction and `neg` the unary additive inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpSymbol {
    pub name: String,
    pub arity: usize,
}

impl OpSymbol {
    pub fn new(name: impl Into<String>, arity: usize) -> OpSymbol {
        OpSymbol {
            name: name.into(),
            arity,
        }
    }

    pub fn standard(s: Symbol) -> OpSymbol {
        let name = match s {
            Symbol::Zero => "0",
            Symbol::One => "1",
            Symbol::Add => "+",
            Symbol::Mul => "*",
            Symbol::Neg => "neg",
            Symbol::Inv => "inv",
            Symbol::Div => "/",
            Symbol::Sub => "-",
        };
        OpSymbol::new(name, s.arity())
    }

    /// The meadow symbol this names, if any.
    pub fn as_standard(&self) -> Option<Symbol> {
        Symbol::ALL
            .into_iter()
            .find(|&s| OpSymbol::standard(s) == *self)
    }
}

impl fmt::Display for OpSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.name, self.arity)
    }
}

/// A term over arbitrary operation symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PTerm {
    Var(String),
    App(OpSymbol, Vec<PTerm>),
}

impl PTerm {
    pub fn symbols(&self, out: &mut BTreeSet<OpSymbol>) {
        if let PTerm::App(op, args) = self {
            out.insert(op.clone());
            for a in args {
                a.symbols(out);
            }
        }
    }

    fn rename(&self, map: &BTreeMap<OpSymbol, OpSymbol>) -> PTerm {
        match self {
            PTerm::Var(v) => PTerm::Var(v.clone()),
            PTerm::App(op, args) => PTerm::App(
                map.get(op).cloned().unwrap_or_else(|| op.clone()),
                args.iter().map(|a| a.rename(map)).collect(),
            ),
        }
    }

    /// Back to a [`Term`] when only meadow symbols occur.
    pub fn to_term(&self) -> Option<Term> {
        Some(match self {
            PTerm::Var(v) => Term::var(v.clone()),
            PTerm::App(op, args) => {
                let a: Vec<Term> = args.iter().map(PTerm::to_term).collect::<Option<_>>()?;
                let mut a = a.into_iter();
                let mut next = || a.next().expect("arity");
                match op.as_standard()? {
                    Symbol::Zero => Term::Zero,
                    Symbol::One => Term::One,
                    Symbol::Add => Term::add(next(), next()),
                    Symbol::Mul => Term::mul(next(), next()),
                    Symbol::Neg => Term::neg(next()),
                    Symbol::Inv => Term::inv(next()),
                    Symbol::Div => Term::div(next(), next()),
                    Symbol::Sub => Term::sub(next(), next()),
                }
            }
        })
    }
}

impl From<&Term> for PTerm {
    fn from(t: &Term) -> PTerm {
        match t {
            Term::Var(v) => PTerm::Var(v.clone()),
            _ => PTerm::App(
                OpSymbol::standard(t.head().expect("not a variable")),
                t.children().into_iter().map(PTerm::from).collect(),
            ),
        }
    }
}

impl fmt::Display for PTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(t) = self.to_term() {
            return f.write_str(&crate::syntax::render(&t));
        }
        match self {
            PTerm::Var(v) => f.write_str(v),
            PTerm::App(op, args) if args.is_empty() => f.write_str(&op.name),
            PTerm::App(op, args) => {
                write!(f, "{}(", op.name)?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PEquation {
    pub name: String,
    pub lhs: PTerm,
    pub rhs: PTerm,
}

impl PEquation {
    fn same_as(&self, other: &PEquation) -> bool {
        self.lhs == other.lhs && self.rhs == other.rhs
    }
}

impl From<&Equation> for PEquation {
    fn from(e: &Equation) -> PEquation {
        PEquation {
            name: e.name.clone(),
            lhs: PTerm::from(&e.lhs),
            rhs: PTerm::from(&e.rhs),
        }
    }
}

impl fmt::Display for PEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("unknown presentation `{0}`")]
    UnknownBuiltin(String),
    #[error("symbol `{name}` has arity {left} on one side and {right} on the other")]
    ArityClash {
        name: String,
        left: usize,
        right: usize,
    },
    #[error("symbol `{0}` is not visible")]
    NotVisible(String),
    #[error("renaming to `{0}` collides with an existing symbol")]
    RenameCollision(String),
    #[error("symbol `{0}` does not interpret anything in the structure")]
    Uninterpreted(String),
    #[error("malformed module expression at byte {pos}: {message}")]
    Expression { pos: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub visible: BTreeSet<OpSymbol>,
    pub hidden: BTreeSet<OpSymbol>,
    pub axioms: Vec<PEquation>,
}

impl Presentation {
    /// A presentation whose visible signature is exactly the symbols
    /// occurring in `axioms`.
    pub fn from_axioms(name: impl Into<String>, axioms: Vec<PEquation>) -> Presentation {
        let mut visible = BTreeSet::new();
        for e in &axioms {
            e.lhs.symbols(&mut visible);
            e.rhs.symbols(&mut visible);
        }
        Presentation {
            name: name.into(),
            visible,
            hidden: BTreeSet::new(),
            axioms,
        }
    }

    /// A single-equation module, written in the term grammar with binary
    /// `-` read as primitive subtraction.
    pub fn sentence(text: &str) -> Result<Presentation, crate::syntax::ParseError> {
        let (lhs, rhs) = parse_equation_unchecked(text, SubMode::Primitive)?;
        let eq = PEquation {
            name: "sentence".into(),
            lhs: PTerm::from(&lhs),
            rhs: PTerm::from(&rhs),
        };
        Ok(Presentation::from_axioms(format!("<{eq}>"), vec![eq]))
    }

    pub fn visible_symbol(&self, name: &str) -> Option<&OpSymbol> {
        self.visible.iter().find(|s| s.name == name)
    }

    fn all_symbols(&self) -> impl Iterator<Item = &OpSymbol> {
        self.visible.iter().chain(&self.hidden)
    }

    /// Every symbol occurring in an axiom is visible or hidden.
    pub fn is_well_formed(&self) -> bool {
        let mut used = BTreeSet::new();
        for e in &self.axioms {
            e.lhs.symbols(&mut used);
            e.rhs.symbols(&mut used);
        }
        used.iter()
            .all(|s| self.visible.contains(s) || self.hidden.contains(s))
            && self.visible.is_disjoint(&self.hidden)
    }

    /// Same signatures and the same axioms as a set, ignoring names.
    pub fn equivalent(&self, other: &Presentation) -> bool {
        let covers = |a: &Presentation, b: &Presentation| {
            a.axioms.iter().all(|e| b.axioms.iter().any(|f| e.same_as(f)))
        };
        self.visible == other.visible
            && self.hidden == other.hidden
            && covers(self, other)
            && covers(other, self)
    }

    fn rename_symbols(&self, map: &BTreeMap<OpSymbol, OpSymbol>) -> Presentation {
        let apply = |s: &OpSymbol| map.get(s).cloned().unwrap_or_else(|| s.clone());
        Presentation {
            name: self.name.clone(),
            visible: self.visible.iter().map(apply).collect(),
            hidden: self.hidden.iter().map(apply).collect(),
            axioms: self
                .axioms
                .iter()
                .map(|e| PEquation {
                    name: e.name.clone(),
                    lhs: e.lhs.rename(map),
                    rhs: e.rhs.rename(map),
                })
                .collect(),
        }
    }

    /// Renames hidden symbols so that none of their names occur in `taken`.
    fn hidden_apart(&self, taken: &BTreeSet<String>) -> Presentation {
        let mut used: BTreeSet<String> = taken.clone();
        used.extend(self.all_symbols().map(|s| s.name.clone()));
        let mut map = BTreeMap::new();
        for h in &self.hidden {
            if taken.contains(&h.name) {
                let mut fresh = format!("{}'", h.name);
                while used.contains(&fresh) {
                    fresh.push('\'');
                }
                used.insert(fresh.clone());
                map.insert(h.clone(), OpSymbol::new(fresh, h.arity));
            }
        }
        self.rename_symbols(&map)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |s: &BTreeSet<OpSymbol>| {
            s.iter()
                .map(|o| o.name.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "{}", self.name)?;
        writeln!(f, "visible: {}", names(&self.visible))?;
        writeln!(f, "hidden: {}", names(&self.hidden))?;
        writeln!(f, "axioms: {}", self.axioms.len())?;
        for e in &self.axioms {
            writeln!(f, "  {}: {}", e.name, e)?;
        }
        Ok(())
    }
}

/// A named axiom set, including the fragments `inv` and `div`.
pub fn builtin(name: &str) -> Result<Presentation, PresentationError> {
    let id = PresentationId::from_name(name)
        .ok_or_else(|| PresentationError::UnknownBuiltin(name.to_string()))?;
    let axioms = id.equations().iter().map(PEquation::from).collect();
    Ok(Presentation::from_axioms(id.to_string(), axioms))
}

/// Union of signatures and axioms. Hidden symbols of either side are first
/// renamed apart from every symbol of the other; duplicate axioms are
/// dropped.
pub fn combine(p: &Presentation, q: &Presentation) -> Result<Presentation, PresentationError> {
    for a in &p.visible {
        if let Some(b) = q.visible.iter().find(|b| b.name == a.name && b.arity != a.arity) {
            return Err(PresentationError::ArityClash {
                name: a.name.clone(),
                left: a.arity,
                right: b.arity,
            });
        }
    }
    let names = |x: &Presentation| -> BTreeSet<String> {
        x.all_symbols().map(|s| s.name.clone()).collect()
    };
    let p = p.hidden_apart(&names(q));
    let q = q.hidden_apart(&names(&p));
    let mut axioms: Vec<PEquation> = Vec::new();
    for e in p.axioms.iter().chain(&q.axioms) {
        if !axioms.iter().any(|f| f.same_as(e)) {
            axioms.push(e.clone());
        }
    }
    Ok(Presentation {
        name: format!("combine({}, {})", p.name, q.name),
        visible: p.visible.union(&q.visible).cloned().collect(),
        hidden: p.hidden.union(&q.hidden).cloned().collect(),
        axioms,
    })
}

/// Moves the visible symbol called `name` to the hidden signature.
pub fn hide(name: &str, p: &Presentation) -> Result<Presentation, PresentationError> {
    let sym = p
        .visible_symbol(name)
        .ok_or_else(|| PresentationError::NotVisible(name.to_string()))?
        .clone();
    let mut out = p.clone();
    out.visible.remove(&sym);
    out.hidden.insert(sym);
    out.name = format!("hide({name}, {})", p.name);
    Ok(out)
}

/// Keeps exactly the named symbols visible and hides the rest.
pub fn export(names: &[&str], p: &Presentation) -> Result<Presentation, PresentationError> {
    let keep: BTreeSet<OpSymbol> = names
        .iter()
        .map(|n| {
            p.visible_symbol(n)
                .cloned()
                .ok_or_else(|| PresentationError::NotVisible(n.to_string()))
        })
        .collect::<Result<_, _>>()?;
    let mut out = p.clone();
    out.hidden
        .extend(p.visible.iter().filter(|s| !keep.contains(s)).cloned());
    out.visible = keep;
    out.name = format!("export({{{}}}, {})", names.join(", "), p.name);
    Ok(out)
}

/// Renames the visible symbol `from` to `to` in the signature and axioms.
pub fn rename(from: &str, to: &str, p: &Presentation) -> Result<Presentation, PresentationError> {
    let sym = p
        .visible_symbol(from)
        .ok_or_else(|| PresentationError::NotVisible(from.to_string()))?
        .clone();
    if p.all_symbols().any(|s| s.name == to) {
        return Err(PresentationError::RenameCollision(to.to_string()));
    }
    let map = BTreeMap::from([(sym.clone(), OpSymbol::new(to, sym.arity))]);
    let mut out = p.rename_symbols(&map);
    out.name = format!("rename({from} := {to}, {})", p.name);
    Ok(out)
}

/// Inversive meadows with division defined from inverse and the inverse
/// then hidden.
pub fn md_d() -> Presentation {
    let step = || -> Result<Presentation, PresentationError> {
        let def = Presentation::sentence("x / y = x * y^-1").expect("static sentence");
        hide("inv", &combine(&builtin("imd")?, &def)?)
    };
    let mut p = step().expect("static module expression");
    p.name = "Md_d".into();
    p
}

/// The chain from [`md_d`] to the reduced divisive signature: hide `*`, add
/// binary `-` and hide `neg`, hide `+`, hide `0`.
pub fn md_rd_chain() -> [Presentation; 4] {
    let steps = || -> Result<[Presentation; 4], PresentationError> {
        let mut rd1 = hide("*", &md_d())?;
        rd1.name = "Md_rd1".into();
        let def = Presentation::sentence("x - y = x + (-y)").expect("static sentence");
        let mut rd2 = hide("neg", &combine(&rd1, &def)?)?;
        rd2.name = "Md_rd2".into();
        let mut rd3 = hide("+", &rd2)?;
        rd3.name = "Md_rd3".into();
        let mut rd = hide("0", &rd3)?;
        rd.name = "Md_rd".into();
        Ok([rd1, rd2, rd3, rd])
    };
    steps().expect("static module expression")
}

pub fn md_rd() -> Presentation {
    let [_, _, _, rd] = md_rd_chain();
    rd
}

/// The standard symbols of a term signature.
pub fn standard_symbols(sig: crate::term::SignatureId) -> BTreeSet<OpSymbol> {
    sig.symbols().iter().map(|&s| OpSymbol::standard(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::SignatureId;

    #[test]
    fn builtin_counts() {
        let count = |n: &str| builtin(n).unwrap().axioms.len();
        assert_eq!(
            ["cr", "inv", "div", "rd", "imd", "dmd"].map(count),
            [8, 2, 3, 9, 10, 11]
        );
        for n in ["acr", "acrz", "iamd", "damd", "iamdz", "damdz"] {
            assert!(builtin(n).unwrap().is_well_formed());
        }
        assert!(matches!(
            builtin("field"),
            Err(PresentationError::UnknownBuiltin(_))
        ));
    }

    #[test]
    fn builtin_signatures() {
        assert_eq!(builtin("imd").unwrap().visible, standard_symbols(SignatureId::Imd));
        assert_eq!(builtin("rd").unwrap().visible, standard_symbols(SignatureId::Rd));
        assert_eq!(builtin("iamd").unwrap().visible, standard_symbols(SignatureId::Iamd));
        let acrz = builtin("acrz").unwrap();
        assert!(!acrz.visible.contains(&OpSymbol::new("neg", 1)));
        assert_eq!(acrz.visible.len(), 4);
    }

    #[test]
    fn quoted_axioms_present() {
        let text = |n: &str| -> Vec<String> {
            builtin(n).unwrap().axioms.iter().map(|e| e.to_string()).collect()
        };
        assert!(text("imd").contains(&"x * (x * x^-1) = x".to_string()));
        assert!(text("dmd").contains(&"x / y = x * (1 / y)".to_string()));
        assert!(text("iamd").contains(&"x * x^-1 = 1".to_string()));
    }

    #[test]
    fn combine_rebuilds_unions() {
        let imd = combine(&builtin("cr").unwrap(), &builtin("inv").unwrap()).unwrap();
        assert!(imd.equivalent(&builtin("imd").unwrap()));
        let damdz = combine(&builtin("acrz").unwrap(), &builtin("div").unwrap()).unwrap();
        assert!(damdz.equivalent(&builtin("damdz").unwrap()));
        let cr = builtin("cr").unwrap();
        let twice = combine(&cr, &cr).unwrap();
        assert!(twice.equivalent(&cr));
        assert_eq!(twice.axioms.len(), 8);
    }

    #[test]
    fn combine_rejects_arity_clash() {
        let a = Presentation::sentence("x - y = y - x").unwrap();
        let b = Presentation::sentence("-x = x").unwrap();
        let b = rename("neg", "-", &b).unwrap();
        assert!(matches!(
            combine(&a, &b),
            Err(PresentationError::ArityClash { .. })
        ));
    }

    #[test]
    fn hidden_symbols_stay_apart() {
        let d = md_d();
        let both = combine(&d, &builtin("imd").unwrap()).unwrap();
        assert!(both.visible.contains(&OpSymbol::new("inv", 1)));
        assert!(both.hidden.contains(&OpSymbol::new("inv'", 1)));
        assert!(both.is_well_formed());
    }

    #[test]
    fn hiding_chains() {
        let d = md_d();
        assert_eq!(d.visible, standard_symbols(SignatureId::Dmd));
        assert_eq!(d.hidden, BTreeSet::from([OpSymbol::new("inv", 1)]));
        assert_eq!(d.axioms.len(), 11);
        let rd = md_rd();
        assert_eq!(rd.visible, standard_symbols(SignatureId::Rd));
        assert_eq!(rd.hidden.len(), 5);
        assert!(rd.is_well_formed());
        assert!(matches!(
            hide("/", &builtin("imd").unwrap()),
            Err(PresentationError::NotVisible(_))
        ));
    }

    #[test]
    fn rename_and_export() {
        let imd = builtin("imd").unwrap();
        let r = rename("inv", "inv'", &imd).unwrap();
        assert!(r.visible.contains(&OpSymbol::new("inv'", 1)));
        assert!(r.axioms.iter().any(|e| e.to_string() == "inv'(inv'(x)) = x"));
        assert!(matches!(
            rename("inv", "+", &imd),
            Err(PresentationError::RenameCollision(_))
        ));
        let e = export(&["0", "1", "+", "*", "neg"], &imd).unwrap();
        assert_eq!(e.visible, standard_symbols(SignatureId::Cr));
        assert_eq!(e.hidden, BTreeSet::from([OpSymbol::new("inv", 1)]));
        assert_eq!(e.axioms.len(), 10);
        assert!(export(&["/"], &builtin("cr").unwrap()).is_err());
    }
}
