use std::collections::BTreeMap;

use super::{OpSymbol, PTerm, Presentation, PresentationError};
use crate::semantics::{FiniteMeadow, Meadow};
use crate::term::Symbol;

/// Operation tables keyed by symbol. A table for an `n`-ary symbol over a
/// carrier of size `k` has `k^n` entries, arguments in row-major order.
pub type Tables = BTreeMap<OpSymbol, Vec<usize>>;

/// A finite algebra over `{0, …, size-1}` with arbitrary named operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteStructure {
    size: usize,
    ops: Tables,
}

fn table_len(size: usize, arity: usize) -> usize {
    size.pow(arity as u32)
}

impl FiniteStructure {
    pub fn new(size: usize) -> FiniteStructure {
        FiniteStructure {
            size,
            ops: Tables::new(),
        }
    }

    /// Adds or replaces the interpretation of `sym`.
    ///
    /// # Panics
    ///
    /// If the table has the wrong length or leaves the carrier.
    pub fn with_op(mut self, sym: OpSymbol, table: Vec<usize>) -> FiniteStructure {
        assert_eq!(table.len(), table_len(self.size, sym.arity), "table size for {sym}");
        assert!(table.iter().all(|&v| v < self.size), "table for {sym} leaves the carrier");
        self.ops.insert(sym, table);
        self
    }

    /// All eight meadow symbols, with `/` and binary `-` derived.
    pub fn from_meadow(m: &FiniteMeadow) -> FiniteStructure {
        let n = m.size();
        let mut s = FiniteStructure::new(n);
        for sym in Symbol::ALL {
            let table: Vec<usize> = match sym.arity() {
                0 => vec![if sym == Symbol::Zero { m.zero() } else { m.one() }],
                1 => (0..n)
                    .map(|a| if sym == Symbol::Neg { m.neg(&a) } else { m.inv(&a) })
                    .collect(),
                _ => (0..n * n)
                    .map(|i| {
                        let (a, b) = (i / n, i % n);
                        match sym {
                            Symbol::Add => m.add(&a, &b),
                            Symbol::Mul => m.mul(&a, &b),
                            Symbol::Div => m.div(&a, &b),
                            _ => m.sub(&a, &b),
                        }
                    })
                    .collect(),
            };
            s = s.with_op(OpSymbol::standard(sym), table);
        }
        s
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self, sym: &OpSymbol) -> Option<&[usize]> {
        self.ops.get(sym).map(Vec::as_slice)
    }

    pub fn tables(&self) -> &Tables {
        &self.ops
    }
}

/// Outcome of searching for interpretations of the hidden symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelReport {
    /// Up to two expansions, enough to tell whether one is unique.
    pub expansions: Vec<Tables>,
}

impl ModelReport {
    pub fn satisfiable(&self) -> bool {
        !self.expansions.is_empty()
    }

    pub fn unique(&self) -> bool {
        self.expansions.len() == 1
    }

    pub fn expansion(&self) -> Option<&Tables> {
        self.expansions.first()
    }
}

enum Compiled {
    Var(usize),
    App(usize, Vec<Compiled>),
}

struct Search<'a> {
    size: usize,
    tables: Vec<Vec<Option<usize>>>,
    arities: Vec<usize>,
    instances: Vec<(&'a Compiled, &'a Compiled, Vec<usize>)>,
    cells: Vec<(usize, usize)>,
    found: Vec<Vec<Vec<Option<usize>>>>,
}

impl Search<'_> {
    fn eval(&self, t: &Compiled, env: &[usize]) -> Option<usize> {
        match t {
            Compiled::Var(i) => Some(env[*i]),
            Compiled::App(op, args) => {
                let mut idx = 0;
                for a in args {
                    idx = idx * self.size + self.eval(a, env)?;
                }
                debug_assert_eq!(args.len(), self.arities[*op]);
                self.tables[*op][idx]
            }
        }
    }

    fn consistent(&self) -> bool {
        self.instances.iter().all(|(l, r, env)| {
            match (self.eval(l, env), self.eval(r, env)) {
                (Some(a), Some(b)) => a == b,
                _ => true,
            }
        })
    }

    fn run(&mut self, k: usize, limit: usize) {
        if self.found.len() >= limit || !self.consistent() {
            return;
        }
        let Some(&(op, cell)) = self.cells.get(k) else {
            self.found.push(self.tables.clone());
            return;
        };
        for v in 0..self.size {
            self.tables[op][cell] = Some(v);
            self.run(k + 1, limit);
            if self.found.len() >= limit {
                break;
            }
        }
        self.tables[op][cell] = None;
    }
}

fn compile(t: &PTerm, ops: &[OpSymbol], vars: &mut Vec<String>) -> Compiled {
    match t {
        PTerm::Var(v) => match vars.iter().position(|w| w == v) {
            Some(i) => Compiled::Var(i),
            None => {
                vars.push(v.clone());
                Compiled::Var(vars.len() - 1)
            }
        },
        PTerm::App(op, args) => Compiled::App(
            ops.iter().position(|o| o == op).expect("well-formed presentation"),
            args.iter().map(|a| compile(a, ops, vars)).collect(),
        ),
    }
}

/// Whether `s`, read as an algebra over the visible signature of `p`, has
/// an expansion to the hidden symbols in which every axiom holds. The search
/// is exhaustive with pruning on fully determined axiom instances.
pub fn visible_models_check(
    p: &Presentation,
    s: &FiniteStructure,
) -> Result<ModelReport, PresentationError> {
    let mut hidden: Vec<OpSymbol> = p.hidden.iter().cloned().collect();
    hidden.sort_by_key(|h| h.arity);
    let ops: Vec<OpSymbol> = p.visible.iter().cloned().chain(hidden.iter().cloned()).collect();
    let mut tables = Vec::with_capacity(ops.len());
    for o in &p.visible {
        let t = s
            .table(o)
            .ok_or_else(|| PresentationError::Uninterpreted(o.name.clone()))?;
        tables.push(t.iter().copied().map(Some).collect::<Vec<_>>());
    }
    let mut cells = Vec::new();
    for (i, h) in hidden.iter().enumerate() {
        let len = table_len(s.size(), h.arity);
        tables.push(vec![None; len]);
        cells.extend((0..len).map(|c| (p.visible.len() + i, c)));
    }

    let compiled: Vec<(Compiled, Compiled, usize)> = p
        .axioms
        .iter()
        .map(|e| {
            let mut vars = Vec::new();
            let l = compile(&e.lhs, &ops, &mut vars);
            let r = compile(&e.rhs, &ops, &mut vars);
            (l, r, vars.len())
        })
        .collect();
    let mut instances = Vec::new();
    for (l, r, nvars) in &compiled {
        for idx in 0..table_len(s.size(), *nvars) {
            let mut env = vec![0; *nvars];
            let mut rest = idx;
            for slot in env.iter_mut().rev() {
                *slot = rest % s.size();
                rest /= s.size();
            }
            instances.push((l, r, env));
        }
    }

    let mut search = Search {
        size: s.size(),
        arities: ops.iter().map(|o| o.arity).collect(),
        tables,
        instances,
        cells,
        found: Vec::new(),
    };
    if s.size() > 0 {
        search.run(0, 2);
    }
    let expansions = search
        .found
        .into_iter()
        .map(|t| {
            hidden
                .iter()
                .enumerate()
                .map(|(i, h)| {
                    let table = t[p.visible.len() + i].iter().map(|v| v.expect("filled")).collect();
                    (h.clone(), table)
                })
                .collect()
        })
        .collect();
    Ok(ModelReport { expansions })
}
