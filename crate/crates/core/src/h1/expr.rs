use std::fmt;

use num_traits::{One, Zero};

use crate::braid::PureBraidWord;
use crate::error::{Error, Result};
use crate::linalg::{format_q, parse_q, Q};
use crate::pairs::Pair;

use super::basis::BasisSymbol;

/// One prefix factor acting on a target class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `T_ab`
    Twist(Pair),
    /// `(1 - T_ab)`
    OneMinus(Pair),
    /// `(1 + T_ab)`
    OnePlus(Pair),
}

impl Factor {
    pub fn pair(&self) -> Pair {
        match *self {
            Factor::Twist(p) | Factor::OneMinus(p) | Factor::OnePlus(p) => p,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Twist(p) => write!(f, "T({},{})", p.i, p.j),
            Factor::OneMinus(p) => write!(f, "(1-T({},{}))", p.i, p.j),
            Factor::OnePlus(p) => write!(f, "(1+T({},{}))", p.i, p.j),
        }
    }
}

/// `coeff * f_1 f_2 ... f_m t_target`, with `f_m` acting first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Q,
    pub prefix: Vec<Factor>,
    pub target: Pair,
}

/// Formal rational combination of prefixed targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleExpression {
    pub n: usize,
    pub terms: Vec<Term>,
}

impl ModuleExpression {
    pub fn zero(n: usize) -> ModuleExpression {
        ModuleExpression { n, terms: Vec::new() }
    }

    pub fn term(n: usize, coeff: Q, prefix: Vec<Factor>, target: Pair) -> Result<ModuleExpression> {
        let mut e = ModuleExpression::zero(n);
        e.push(coeff, prefix, target)?;
        Ok(e)
    }

    pub fn push(&mut self, coeff: Q, prefix: Vec<Factor>, target: Pair) -> Result<()> {
        let bad = prefix.iter().map(|f| f.pair()).chain([target]).find(|p| p.j > self.n || p.i == 0);
        if let Some(p) = bad {
            return Err(Error::Invalid(format!("pair {p} outside {} strands", self.n)));
        }
        self.terms.push(Term { coeff, prefix, target });
        Ok(())
    }

    pub fn plus(mut self, other: ModuleExpression) -> ModuleExpression {
        assert_eq!(self.n, other.n);
        self.terms.extend(other.terms);
        self
    }

    pub fn scaled(mut self, c: &Q) -> ModuleExpression {
        for t in self.terms.iter_mut() {
            t.coeff *= c;
        }
        self
    }

    /// The expression spelling out one basis symbol.
    pub fn of_symbol(n: usize, s: &BasisSymbol) -> ModuleExpression {
        ModuleExpression {
            n,
            terms: vec![Term { coeff: Q::one(), prefix: s.twists().into_iter().map(Factor::Twist).collect(), target: s.target() }],
        }
    }

    /// Formal combination of pure braid words `P A_t^2 P^{-1}` whose classes sum to this expression.
    pub fn words(&self) -> Result<Vec<(Q, PureBraidWord)>> {
        let mut out = Vec::new();
        for t in &self.terms {
            let mut prefixes: Vec<(Q, PureBraidWord)> = vec![(t.coeff.clone(), PureBraidWord::identity(self.n))];
            for f in &t.prefix {
                let p = f.pair();
                let g = PureBraidWord::generator(self.n, p.i, p.j, 1)?;
                let mut next = Vec::with_capacity(prefixes.len() * 2);
                for (c, w) in prefixes {
                    match f {
                        Factor::Twist(_) => next.push((c, w.mul(&g))),
                        Factor::OneMinus(_) => {
                            next.push((-c.clone(), w.mul(&g)));
                            next.push((c, w));
                        }
                        Factor::OnePlus(_) => {
                            next.push((c.clone(), w.mul(&g)));
                            next.push((c, w));
                        }
                    }
                }
                prefixes = next;
            }
            let square = PureBraidWord::generator(self.n, t.target.i, t.target.j, 2)?;
            for (c, w) in prefixes {
                out.push((c, w.conjugate(&square)));
            }
        }
        Ok(out)
    }

    /// Parses e.g. `1/2 (1-T(1,4))(1-T(2,3))*t(1,2) - T(1,3)*t(1,2) + t(3,4)`.
    pub fn parse(n: usize, s: &str) -> Result<ModuleExpression> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { chars, pos: 0 };
        let mut e = ModuleExpression::zero(n);
        if p.peek().is_none() {
            return Err(Error::Parse("empty expression".into()));
        }
        if p.eat_str("0") && p.peek().is_none() {
            return Ok(e);
        }
        p.pos = 0;
        let mut first = true;
        while p.peek().is_some() {
            let mut sign = Q::one();
            if p.eat('-') {
                sign = -sign;
            } else if !p.eat('+') && !first {
                return Err(Error::Parse(format!("expected `+` or `-` at position {}", p.pos)));
            }
            first = false;
            let coeff = p.coefficient()?.unwrap_or_else(Q::one) * sign;
            p.eat('*');
            let mut prefix = Vec::new();
            loop {
                if p.eat_str("(1-T(") {
                    prefix.push(Factor::OneMinus(p.pair_tail()?));
                    p.expect(')')?;
                } else if p.eat_str("(1+T(") {
                    prefix.push(Factor::OnePlus(p.pair_tail()?));
                    p.expect(')')?;
                } else if p.eat_str("T(") {
                    prefix.push(Factor::Twist(p.pair_tail()?));
                } else {
                    break;
                }
            }
            p.eat('*');
            if !p.eat_str("t(") {
                return Err(Error::Parse(format!("expected target `t(i,j)` at position {}", p.pos)));
            }
            let target = p.pair_tail()?;
            if !coeff.is_zero() {
                e.push(coeff, prefix, target)?;
            }
        }
        Ok(e)
    }
}

impl fmt::Display for ModuleExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} ", format_q(&t.coeff))?;
            for x in &t.prefix {
                write!(f, "{x}")?;
            }
            if !t.prefix.is_empty() {
                write!(f, "*")?;
            }
            write!(f, "t({},{})", t.target.i, t.target.j)?;
        }
        Ok(())
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let want: Vec<char> = s.chars().collect();
        if self.chars[self.pos..].starts_with(&want) {
            self.pos += want.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected `{c}` at position {}", self.pos)))
        }
    }

    fn number(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn coefficient(&mut self) -> Result<Option<Q>> {
        let Some(a) = self.number() else { return Ok(None) };
        if self.eat('/') {
            let b = self.number().ok_or_else(|| Error::Parse("missing denominator".into()))?;
            return parse_q(&format!("{a}/{b}")).map(Some);
        }
        parse_q(&a).map(Some)
    }

    /// Reads `a,b)` after an opening `X(`.
    fn pair_tail(&mut self) -> Result<Pair> {
        let a = self.number().ok_or_else(|| Error::Parse("expected label".into()))?;
        self.expect(',')?;
        let b = self.number().ok_or_else(|| Error::Parse("expected label".into()))?;
        self.expect(')')?;
        let (a, b): (usize, usize) = (a.parse().unwrap(), b.parse().unwrap());
        if a == b || a == 0 || b == 0 {
            return Err(Error::Parse(format!("bad pair ({a},{b})")));
        }
        Ok(Pair::new(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q_frac;

    #[test]
    fn parse_expression() {
        let e = ModuleExpression::parse(4, "1/2 (1-T(1,4))(1-T(2,3))*t(1,2) - T(1,3)*t(1,2) + t(3,4)").unwrap();
        assert_eq!(e.terms.len(), 3);
        assert_eq!(e.terms[0].coeff, q_frac(1, 2));
        assert_eq!(e.terms[0].prefix, vec![Factor::OneMinus(Pair::new(1, 4)), Factor::OneMinus(Pair::new(2, 3))]);
        assert_eq!(e.terms[1].coeff, q_frac(-1, 1));
        assert_eq!(e.terms[2].target, Pair::new(3, 4));
        assert!(ModuleExpression::parse(3, "t(1,4)").is_err());
        assert!(ModuleExpression::parse(3, "T(1,2)").is_err());
        assert_eq!(ModuleExpression::parse(3, "0").unwrap().terms.len(), 0);
    }

    #[test]
    fn words_expand_differences() {
        let e = ModuleExpression::parse(3, "(1-T(1,3))*t(1,2)").unwrap();
        let w = e.words().unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w[0].0, q_frac(-1, 1));
        assert_eq!(w[0].1.to_string(), "A(1,3) A(1,2)^2 A(1,3)^-1");
        assert_eq!(w[1].1.to_string(), "A(1,2)^2");
    }
}
