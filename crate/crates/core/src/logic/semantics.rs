use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::formula::{BinOp, Formula};
use crate::error::{Error, Result};

/// Truth assignment over a declared atom universe.
pub type Valuation = BTreeMap<String, bool>;

pub fn evaluate(f: &Formula, v: &Valuation) -> Result<bool> {
    Ok(match f {
        Formula::Atom(a) => *v.get(a).ok_or_else(|| Error::UnboundAtom(a.clone()))?,
        Formula::Const(c) => *c,
        Formula::Not(c) => !evaluate(c, v)?,
        Formula::Binary(op, l, r) => op.apply(evaluate(l, v)?, evaluate(r, v)?),
    })
}

/// A formula with atoms replaced by bit positions of a packed valuation.
#[derive(Debug, Clone)]
pub(crate) enum Compiled {
    Var(u32),
    Const(bool),
    Not(Box<Compiled>),
    Bin(BinOp, Box<Compiled>, Box<Compiled>),
}

impl Compiled {
    pub fn new(f: &Formula, universe: &[String]) -> Result<Self> {
        Ok(match f {
            Formula::Atom(a) => match universe.binary_search(a) {
                Ok(i) => Compiled::Var(i as u32),
                Err(_) => return Err(Error::UnboundAtom(a.clone())),
            },
            Formula::Const(c) => Compiled::Const(*c),
            Formula::Not(c) => Compiled::Not(Box::new(Self::new(c, universe)?)),
            Formula::Binary(op, l, r) => {
                Compiled::Bin(*op, Box::new(Self::new(l, universe)?), Box::new(Self::new(r, universe)?))
            }
        })
    }

    pub fn eval(&self, bits: u64) -> bool {
        match self {
            Compiled::Var(i) => bits >> i & 1 == 1,
            Compiled::Const(c) => *c,
            Compiled::Not(c) => !c.eval(bits),
            Compiled::Bin(op, l, r) => op.apply(l.eval(bits), r.eval(bits)),
        }
    }
}

pub(crate) fn check_universe(universe: usize, cap: usize) -> Result<()> {
    if universe > cap {
        return Err(Error::cap("atoms", universe, cap));
    }
    Ok(())
}

/// Every packed valuation over `k` atoms, visited in parallel chunks.
pub(crate) fn valuations(k: usize) -> impl ParallelIterator<Item = u64> {
    (0..1usize << k).into_par_iter().with_min_len(1 << 10).map(|v| v as u64)
}

fn compile_all(formulas: &[Formula], universe: &BTreeSet<String>) -> Result<(Vec<Compiled>, usize)> {
    let names: Vec<String> = universe.iter().cloned().collect();
    let compiled = formulas.iter().map(|f| Compiled::new(f, &names)).collect::<Result<Vec<_>>>()?;
    Ok((compiled, names.len()))
}

/// Satisfiability of a formula set by exhaustive valuation enumeration over
/// `universe`, refusing universes larger than `cap` atoms.
pub fn is_consistent_set_capped(formulas: &[Formula], universe: &BTreeSet<String>, cap: usize) -> Result<bool> {
    check_universe(universe.len(), cap)?;
    let (compiled, k) = compile_all(formulas, universe)?;
    Ok(valuations(k).any(|v| compiled.iter().all(|c| c.eval(v))))
}

pub fn is_consistent_set(formulas: &[Formula], universe: &BTreeSet<String>) -> Result<bool> {
    is_consistent_set_capped(formulas, universe, crate::Caps::default().max_atoms)
}

pub fn entails(premises: &[Formula], conclusion: &Formula, universe: &BTreeSet<String>) -> Result<bool> {
    let mut all = premises.to_vec();
    all.push(conclusion.negate());
    Ok(!is_consistent_set(&all, universe)?)
}
