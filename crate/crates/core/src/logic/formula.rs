use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinOp {
    And,
    Or,
    Implies,
    Iff,
    Xor,
}

impl BinOp {
    fn precedence(self) -> u8 {
        match self {
            BinOp::And => 5,
            BinOp::Xor => 4,
            BinOp::Or => 3,
            BinOp::Implies => 2,
            BinOp::Iff => 1,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            BinOp::And => "&",
            BinOp::Or => "|",
            BinOp::Implies => "->",
            BinOp::Iff => "<->",
            BinOp::Xor => "xor",
        }
    }

    pub fn apply(self, a: bool, b: bool) -> bool {
        match self {
            BinOp::And => a && b,
            BinOp::Or => a || b,
            BinOp::Implies => !a || b,
            BinOp::Iff => a == b,
            BinOp::Xor => a != b,
        }
    }
}

/// Propositional formula. Structural equality is formula identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Const(bool),
    Not(Box<Formula>),
    Binary(BinOp, Box<Formula>, Box<Formula>),
}

const ATOMIC: u8 = 7;
const UNARY: u8 = 6;

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    pub fn top() -> Self {
        Formula::Const(true)
    }

    pub fn bottom() -> Self {
        Formula::Const(false)
    }

    pub fn negate(&self) -> Self {
        Formula::Not(Box::new(self.clone()))
    }

    pub fn binary(op: BinOp, l: Formula, r: Formula) -> Self {
        Formula::Binary(op, Box::new(l), Box::new(r))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Self::binary(BinOp::And, l, r)
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Self::binary(BinOp::Or, l, r)
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Self::binary(BinOp::Implies, l, r)
    }

    pub fn iff(l: Formula, r: Formula) -> Self {
        Self::binary(BinOp::Iff, l, r)
    }

    pub fn xor(l: Formula, r: Formula) -> Self {
        Self::binary(BinOp::Xor, l, r)
    }

    /// Left-nested conjunction; the empty conjunction is `true`.
    pub fn conjunction(parts: impl IntoIterator<Item = Formula>) -> Self {
        parts.into_iter().reduce(Formula::and).unwrap_or_else(Formula::top)
    }

    /// Left-nested disjunction; the empty disjunction is `false`.
    pub fn disjunction(parts: impl IntoIterator<Item = Formula>) -> Self {
        parts.into_iter().reduce(Formula::or).unwrap_or_else(Formula::bottom)
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Formula::Const(_))
    }

    pub fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.as_str());
            }
            Formula::Const(_) => {}
            Formula::Not(c) => c.collect_atoms(out),
            Formula::Binary(_, l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Atom(_) | Formula::Const(_) => ATOMIC,
            Formula::Not(_) => UNARY,
            Formula::Binary(op, ..) => op.precedence(),
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let wrap = self.precedence() < min;
        if wrap {
            f.write_str("(")?;
        }
        match self {
            Formula::Atom(a) => f.write_str(a)?,
            Formula::Const(true) => f.write_str("true")?,
            Formula::Const(false) => f.write_str("false")?,
            Formula::Not(c) => {
                f.write_str("!")?;
                c.write(f, UNARY)?;
            }
            Formula::Binary(op, l, r) => {
                let p = op.precedence();
                // `->` groups to the right, everything else to the left.
                let (lmin, rmin) = if *op == BinOp::Implies { (p + 1, p) } else { (p, p + 1) };
                l.write(f, lmin)?;
                write!(f, " {} ", op.symbol())?;
                r.write(f, rmin)?;
            }
        }
        if wrap {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

/// Atom names occurring in any of the formulas.
pub fn atoms<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> BTreeSet<String> {
    let mut set = BTreeSet::new();
    for f in formulas {
        f.collect_atoms(&mut set);
    }
    set.into_iter().map(str::to_owned).collect()
}

pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !matches!(name, "true" | "false" | "xor")
}
