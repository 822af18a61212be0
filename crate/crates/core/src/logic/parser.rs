use super::formula::{BinOp, Formula};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Const(bool),
    Not,
    Op(BinOp),
    Open,
    Close,
}

fn lex(src: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'!' | b'~' => {
                i += 1;
                Token::Not
            }
            b'&' => {
                i += 1;
                Token::Op(BinOp::And)
            }
            b'|' => {
                i += 1;
                Token::Op(BinOp::Or)
            }
            b'(' => {
                i += 1;
                Token::Open
            }
            b')' => {
                i += 1;
                Token::Close
            }
            _ if src[i..].starts_with("->") => {
                i += 2;
                Token::Op(BinOp::Implies)
            }
            _ if src[i..].starts_with("<->") => {
                i += 3;
                Token::Op(BinOp::Iff)
            }
            _ if c.is_ascii_alphanumeric() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &src[start..i];
                match word {
                    "true" => Token::Const(true),
                    "false" => Token::Const(false),
                    "xor" => Token::Op(BinOp::Xor),
                    _ if word.as_bytes()[0].is_ascii_lowercase() => Token::Ident(word.to_owned()),
                    _ => return Err(Error::Parse { position: start, message: format!("invalid atom name `{word}`") }),
                }
            }
            _ => {
                let ch = src[i..].chars().next().unwrap_or('?');
                return Err(Error::Parse { position: start, message: format!("unknown operator token `{ch}`") });
            }
        };
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.offset(), message: message.into() })
    }

    fn eat_op(&mut self, op: BinOp) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn left_assoc(&mut self, op: BinOp, next: fn(&mut Self) -> Result<Formula>) -> Result<Formula> {
        let mut lhs = next(self)?;
        while self.eat_op(op) {
            let rhs = next(self)?;
            lhs = Formula::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn iff(&mut self) -> Result<Formula> {
        self.left_assoc(BinOp::Iff, Self::implication)
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if self.eat_op(BinOp::Implies) {
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        self.left_assoc(BinOp::Or, Self::xor)
    }

    fn xor(&mut self) -> Result<Formula> {
        self.left_assoc(BinOp::Xor, Self::and)
    }

    fn and(&mut self) -> Result<Formula> {
        self.left_assoc(BinOp::And, Self::unary)
    }

    fn unary(&mut self) -> Result<Formula> {
        let Some(tok) = self.peek().cloned() else {
            return self.fail("unexpected end of input");
        };
        self.pos += 1;
        match tok {
            Token::Not => Ok(self.unary()?.negate_owned()),
            Token::Ident(name) => Ok(Formula::Atom(name)),
            Token::Const(v) => Ok(Formula::Const(v)),
            Token::Open => {
                let inner = self.iff()?;
                if self.peek() != Some(&Token::Close) {
                    return self.fail("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Token::Close | Token::Op(_) => {
                self.pos -= 1;
                self.fail("expected a formula")
            }
        }
    }
}

impl Formula {
    fn negate_owned(self) -> Formula {
        Formula::Not(Box::new(self))
    }
}

/// Parses the textual formula syntax.
pub fn parse_formula(src: &str) -> Result<Formula> {
    let tokens = lex(src)?;
    let mut p = Parser { tokens, pos: 0, end: src.len() };
    let f = p.iff()?;
    if p.pos != p.tokens.len() {
        return p.fail("unexpected trailing input");
    }
    Ok(f)
}

impl std::str::FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_formula(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn doctrinal_constraint() {
        let expected = Formula::iff(Formula::and(Formula::atom("p"), Formula::atom("q")), Formula::atom("d"));
        assert_eq!(p("(p & q) <-> d"), expected);
    }

    #[test]
    fn single_atom_and_xor() {
        assert_eq!(p("p"), Formula::atom("p"));
        assert_eq!(p("b xor c"), Formula::xor(Formula::atom("b"), Formula::atom("c")));
    }

    #[test]
    fn precedence_ladder() {
        // ! > & > xor > | > -> > <->
        assert_eq!(p("!a & b xor c | d -> e <-> f"), p("((((!a & b) xor c) | d) -> e) <-> f"));
        assert_eq!(p("a -> b -> c"), p("a -> (b -> c)"));
        assert_eq!(p("a & b & c"), p("(a & b) & c"));
        assert_eq!(p("~~a"), p("!(!a)"));
        assert_eq!(p("true | false"), Formula::or(Formula::top(), Formula::bottom()));
    }

    #[test]
    fn errors_carry_positions() {
        let err = |s: &str| match parse_formula(s) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(err("p & "), 4);
        assert_eq!(err("p # q"), 2);
        assert_eq!(err("(p | q"), 6);
        assert_eq!(err("Pq"), 0);
        assert_eq!(err("p q"), 2);
        assert_eq!(err(""), 0);
        assert_eq!(err("p -"), 2);
    }

    #[test]
    fn printer_minimises_parentheses() {
        assert_eq!(p("(p & q) <-> d").to_string(), "p & q <-> d");
        assert_eq!(p("!(p & r)").to_string(), "!(p & r)");
        assert_eq!(p("(a -> b) -> c").to_string(), "(a -> b) -> c");
        assert_eq!(p("a -> (b -> c)").to_string(), "a -> b -> c");
        assert_eq!(p("a & (b & c)").to_string(), "a & (b & c)");
        assert_eq!(p("p -> (q | r)").to_string(), "p -> q | r");
    }
}
