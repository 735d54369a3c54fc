use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sets::{convex_components, LinearOrder, SetFamily, SubsetMask};

/// Boolean combination of family members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(bool),
    Member(usize),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Distinct members referenced.
    pub fn members(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut BTreeSet<usize>) {
        match self {
            Expr::Const(_) => {}
            Expr::Member(j) => {
                out.insert(*j);
            }
            Expr::Not(e) => e.collect(out),
            Expr::And(a, b) | Expr::Or(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    pub fn eval(&self, family: &SetFamily) -> SubsetMask {
        match self {
            Expr::Const(true) => family.universe().full(),
            Expr::Const(false) => family.universe().empty_set(),
            Expr::Member(j) => family.mask(*j).clone(),
            Expr::Not(e) => e.eval(family).complement(),
            Expr::And(a, b) => a.eval(family).intersection(&b.eval(family)),
            Expr::Or(a, b) => a.eval(family).union(&b.eval(family)),
        }
    }

    /// Truth value at a single element.
    pub fn holds_at(&self, family: &SetFamily, x: usize) -> bool {
        match self {
            Expr::Const(c) => *c,
            Expr::Member(j) => family.mask(*j).contains(x),
            Expr::Not(e) => !e.holds_at(family, x),
            Expr::And(a, b) => a.holds_at(family, x) && b.holds_at(family, x),
            Expr::Or(a, b) => a.holds_at(family, x) || b.holds_at(family, x),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    And,
    Or,
    Not,
    Open,
    Close,
    Name(String),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::And => f.write_str("&"),
            Token::Or => f.write_str("|"),
            Token::Not => f.write_str("!"),
            Token::Open => f.write_str("("),
            Token::Close => f.write_str(")"),
            Token::Name(n) => write!(f, "{n:?}"),
        }
    }
}

fn is_name_char(c: char) -> bool {
    !c.is_whitespace() && !matches!(c, '&' | '|' | '!' | '(' | ')' | '"' | '∧' | '∨' | '¬')
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '&' | '∧' => {
                chars.next();
                tokens.push(Token::And);
            }
            '|' | '∨' => {
                chars.next();
                tokens.push(Token::Or);
            }
            '!' | '¬' => {
                chars.next();
                tokens.push(Token::Not);
            }
            '(' => {
                chars.next();
                tokens.push(Token::Open);
            }
            ')' => {
                chars.next();
                tokens.push(Token::Close);
            }
            '"' => {
                chars.next();
                let mut name = String::new();
                loop {
                    match chars.next() {
                        Some('"') => break,
                        Some('\\') => match chars.next() {
                            Some(e) => name.push(e),
                            None => return Err(Error::Expr("unterminated escape".into())),
                        },
                        Some(ch) => name.push(ch),
                        None => return Err(Error::Expr("unterminated quoted name".into())),
                    }
                }
                tokens.push(Token::Name(name));
            }
            _ => {
                let mut name = String::new();
                while let Some(&ch) = chars.peek() {
                    if !is_name_char(ch) {
                        break;
                    }
                    name.push(ch);
                    chars.next();
                }
                tokens.push(Token::Name(name));
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    family: &'a SetFamily,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn or(&mut self) -> Result<Expr> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            lhs = Expr::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            lhs = Expr::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Token::Not) => Ok(Expr::Not(Box::new(self.unary()?))),
            Some(Token::Open) => {
                let e = self.or()?;
                match self.next() {
                    Some(Token::Close) => Ok(e),
                    Some(t) => Err(Error::Expr(format!("expected `)`, found {t}"))),
                    None => Err(Error::Expr("expected `)`, found end of input".into())),
                }
            }
            Some(Token::Name(name)) => match self.family.index_of(&name) {
                Some(j) => Ok(Expr::Member(j)),
                None if name == "true" => Ok(Expr::Const(true)),
                None if name == "false" => Ok(Expr::Const(false)),
                None => Err(Error::UnknownMember(name)),
            },
            Some(t) => Err(Error::Expr(format!("unexpected {t}"))),
            None => Err(Error::Expr("unexpected end of input".into())),
        }
    }
}

/// Parses `&`, `|`, `!` and parentheses over member names (`∧`, `∨`, `¬`
/// are accepted too). Names containing operator characters may be written in
/// double quotes. `true` and `false` are constants unless a member has that
/// name. `!` binds tightest, then `&`, then `|`.
pub fn parse_expr(src: &str, family: &SetFamily) -> Result<Expr> {
    let tokens = tokenize(src)?;
    let mut p = Parser { tokens, pos: 0, family };
    let e = p.or()?;
    if let Some(t) = p.peek() {
        return Err(Error::Expr(format!("trailing input at {t}")));
    }
    Ok(e)
}

pub fn boolean_combo(family: &SetFamily, expression: &str) -> Result<SubsetMask> {
    Ok(parse_expr(expression, family)?.eval(family))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComboBound {
    /// Distinct members referenced by the expression.
    pub k: usize,
    pub components: usize,
    pub bound: usize,
}

impl ComboBound {
    pub fn holds(&self) -> bool {
        self.components <= self.bound
    }
}

/// Components of a combination of `k` distinct members under an order in
/// which every member is convex or co-convex. Each such member changes
/// membership at most twice along the order, so the combination has at most
/// `2k + 1` constant runs and at most `k + 1` components.
pub fn combo_component_bound(family: &SetFamily, order: &LinearOrder, expression: &str) -> Result<ComboBound> {
    let e = parse_expr(expression, family)?;
    let k = e.members().len();
    let components = convex_components(order, &e.eval(family))?;
    Ok(ComboBound {
        k,
        components,
        bound: k + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> SetFamily {
        SetFamily::from_index_sets(4, &[&[0, 1], &[1, 2]])
    }

    #[test]
    fn and_not() {
        let m = boolean_combo(&ab(), "M0 & !M1").unwrap();
        assert_eq!(m.ones().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn not_or() {
        let m = boolean_combo(&ab(), "!(M0 | M1)").unwrap();
        assert_eq!(m, ab().mask(0).union(ab().mask(1)).complement());
    }

    #[test]
    fn unicode_operators_and_precedence() {
        let f = ab();
        assert_eq!(
            boolean_combo(&f, "M0 ∧ ¬M1").unwrap(),
            boolean_combo(&f, "M0 & !M1").unwrap()
        );
        // & binds tighter than |
        assert_eq!(
            boolean_combo(&f, "M0 | M1 & false").unwrap(),
            boolean_combo(&f, "M0 | (M1 & false)").unwrap()
        );
    }

    #[test]
    fn quoted_names() {
        let mut f = SetFamily::new(crate::sets::Universe::numbered(3));
        f.push("<(1,2)", SubsetMask::from_indices(3, [0])).unwrap();
        let m = boolean_combo(&f, "!\"<(1,2)\"").unwrap();
        assert_eq!(m.to_bitstring(), "011");
    }

    #[test]
    fn errors() {
        assert!(matches!(boolean_combo(&ab(), "M0 & Q"), Err(Error::UnknownMember(n)) if n == "Q"));
        assert!(matches!(boolean_combo(&ab(), "(M0"), Err(Error::Expr(_))));
        assert!(matches!(boolean_combo(&ab(), "M0 M1"), Err(Error::Expr(_))));
        assert!(matches!(boolean_combo(&ab(), ""), Err(Error::Expr(_))));
        assert!(matches!(boolean_combo(&ab(), "\"M0"), Err(Error::Expr(_))));
    }

    #[test]
    fn constant_true_has_one_component() {
        let f = ab();
        let b = combo_component_bound(&f, &LinearOrder::identity(4), "true").unwrap();
        assert_eq!((b.k, b.components, b.bound), (0, 1, 1));
    }

    #[test]
    fn complement_of_convex_member() {
        let f = ab();
        let b = combo_component_bound(&f, &LinearOrder::identity(4), "!M1").unwrap();
        assert_eq!(b.k, 1);
        assert!(b.components <= 2 && b.holds());
    }

    #[test]
    fn members_are_deduplicated() {
        let e = parse_expr("M0 & (M0 | !M1)", &ab()).unwrap();
        assert_eq!(e.members().into_iter().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn pointwise_matches_mask_evaluation() {
        let f = ab();
        let e = parse_expr("!(M0 & M1) | (M1 & !M0)", &f).unwrap();
        let m = e.eval(&f);
        for x in 0..4 {
            assert_eq!(m.contains(x), e.holds_at(&f, x));
        }
    }
}
