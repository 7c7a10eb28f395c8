//! Text encodings: arithmetic expressions, ring values, polynomials and ring strings.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{BaseRing, Elem, MPoly, MPolyRing, Ring, SqZero, UNIT_SYMBOLS};
use crate::abelian::FinAbGroup;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Sym(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, BigInt),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u64),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let d: String = cs[st..i].iter().collect();
            out.push(Tok::Num(d.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Expr(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.product()?))
        } else {
            self.eat('+');
            self.product()?
        };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.power()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else if self.eat('/') {
                match self.toks.get(self.pos).cloned() {
                    Some(Tok::Num(n)) if !n.is_zero() => {
                        self.pos += 1;
                        lhs = Expr::Div(Box::new(lhs), n);
                    }
                    _ => return Err(Error::Expr("division is only by a nonzero integer literal".into())),
                }
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Op('('))) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e = n.to_u64().ok_or_else(|| Error::Expr("exponent too large".into()))?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => Err(Error::Expr("exponent must be a nonnegative integer".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Sym(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(')') {
                    return Err(Error::Expr("missing ')'".into()));
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.power()?)))
            }
            Some(t) => Err(Error::Expr(format!("unexpected token {t:?}"))),
            None => Err(Error::Expr("unexpected end of expression".into())),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(s)?, pos: 0 };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(Error::Expr(format!("trailing input in '{s}'")));
    }
    Ok(e)
}

impl Expr {
    /// Evaluates in `ring`, resolving symbols through `sym`.
    pub fn eval<R: Ring>(&self, ring: &R, sym: &dyn Fn(&str) -> Result<R::Elem>) -> Result<R::Elem> {
        Ok(match self {
            Expr::Num(n) => ring.from_int(n),
            Expr::Sym(s) => sym(s)?,
            Expr::Add(a, b) => ring.add(&a.eval(ring, sym)?, &b.eval(ring, sym)?),
            Expr::Sub(a, b) => ring.sub(&a.eval(ring, sym)?, &b.eval(ring, sym)?),
            Expr::Mul(a, b) => ring.mul(&a.eval(ring, sym)?, &b.eval(ring, sym)?),
            Expr::Neg(a) => ring.neg(&a.eval(ring, sym)?),
            Expr::Pow(a, e) => ring.pow(&a.eval(ring, sym)?, *e),
            Expr::Div(a, n) => {
                let inv = ring
                    .inverse(&ring.from_int(n))
                    .ok_or_else(|| Error::Expr(format!("{n} is not invertible in the ring")))?;
                ring.mul(&a.eval(ring, sym)?, &inv)
            }
        })
    }
}

/// Resolves a named constant of a menu ring: unit symbols, adjoined variables, `e` and `u<i>`.
pub fn ring_symbol(ring: &BaseRing, name: &str) -> Result<Elem> {
    if ring.is_square_zero() {
        if name == "e" {
            return Ok(Elem::Sq(SqZero::e()));
        }
        if let Some(i) = name.strip_prefix('u').and_then(|d| d.parse::<u32>().ok()) {
            return Ok(Elem::Sq(SqZero::u(i)));
        }
    }
    if let Some(g) = ring.group() {
        if let Some(i) = UNIT_SYMBOLS.iter().position(|s| *s == name) {
            if i < g.rank() {
                let mut c = vec![0i64; g.rank()];
                c[i] = 1;
                let idx = g.index(&g.elem(&c)?) as usize;
                return Ok(ring.group_element(idx).expect("group ring"));
            }
        }
    }
    if ring.variable() == Some(name) {
        return Ok(ring.generator().expect("quotient"));
    }
    if let Some(b) = ring.base() {
        let inner = ring_symbol(b, name)?;
        return Ok(ring.lift_from(b, &inner).expect("extension"));
    }
    Err(Error::Expr(format!("unknown symbol '{name}' in {}", ring.descriptor())))
}

pub fn parse_value(ring: &BaseRing, s: &str) -> Result<Elem> {
    parse_expr(s)?.eval(ring, &|n| ring_symbol(ring, n))
}

/// Parses a polynomial in the given variables with coefficients in `ring`.
pub fn parse_mpoly(ring: &BaseRing, vars: &[&str], s: &str) -> Result<MPoly> {
    let names = vars.iter().map(|v| v.to_string()).collect();
    let mr = MPolyRing::new(ring, names, u32::MAX);
    parse_expr(s)?.eval(&mr, &|n| match vars.iter().position(|v| *v == n) {
        Some(i) => Ok(mr.var(i)),
        None => Ok(mr.monomial(vec![0; vars.len()], ring_symbol(ring, n)?)),
    })
}

/// Parses a univariate polynomial into ascending dense coefficients.
pub fn parse_poly(ring: &BaseRing, var: &str, s: &str) -> Result<Vec<Elem>> {
    let m = parse_mpoly(ring, &[var], s)?;
    let deg = m.keys().map(|k| k[0] as usize).max();
    let mut out = vec![ring.zero(); deg.map_or(0, |d| d + 1)];
    for (k, c) in m {
        out[k[0] as usize] = c;
    }
    Ok(out)
}

/// Parses ring strings such as `Z`, `Q`, `Z/6`, `F5`, `Z[2,2]`, `Q[t]/(t^2)`, `F2[e]+M`.
pub fn parse_ring(s: &str) -> Result<BaseRing> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "F2[e]+M" || s == "SqZero" {
        return Ok(BaseRing::square_zero_f2());
    }
    let bad = || Error::Parse(format!("unrecognized ring '{s}'"));
    let head_end = s.find('[').unwrap_or(s.len());
    let head = &s[..head_end];
    let mut ring = if head == "Z" {
        BaseRing::integers()
    } else if head == "Q" {
        BaseRing::rationals()
    } else if let Some(m) = head.strip_prefix("Z/") {
        BaseRing::integers_mod(m.parse().map_err(|_| bad())?)?
    } else if let Some(p) = head.strip_prefix('F') {
        BaseRing::prime_field(p.parse().map_err(|_| bad())?)?
    } else {
        return Err(bad());
    };
    let mut rest = &s[head_end..];
    while !rest.is_empty() {
        let close = rest.find(']').ok_or_else(bad)?;
        let inside = &rest[1..close];
        rest = &rest[close + 1..];
        if inside.chars().all(|c| c.is_ascii_digit() || c == ',') {
            let fs = inside.split(',').map(|d| d.parse::<u64>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
            ring = BaseRing::group_ring(&ring, &FinAbGroup::new(fs)?)?;
        } else {
            let body = rest.strip_prefix("/(").ok_or_else(bad)?;
            let mut depth = 1;
            let mut end = None;
            for (i, c) in body.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            end = Some(i);
                            break;
                        }
                    }
                    _ => {}
                }
            }
            let end = end.ok_or_else(bad)?;
            let modulus = parse_poly(&ring, inside, &body[..end])?;
            ring = BaseRing::poly_quotient(&ring, modulus, inside)?;
            rest = &body[end + 1..];
        }
    }
    Ok(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_round_trip_through_render() {
        let k = parse_ring("Z[2]").unwrap();
        let a = parse_value(&k, "2 - 2*v").unwrap();
        assert_eq!(k.render(&a), "2-2*v");
        assert_eq!(parse_value(&k, &k.render(&a)).unwrap(), a);
        let b = parse_value(&k, "(1-v)^2").unwrap();
        assert_eq!(a, b);
        let q = parse_ring("Q").unwrap();
        assert_eq!(parse_value(&q, "1/2 + 1/2").unwrap(), q.one());
        let sq = parse_ring("F2[e]+M").unwrap();
        let u = parse_value(&sq, "e*u3").unwrap();
        assert_eq!(u, Elem::Sq(SqZero::u(2)));
    }

    #[test]
    fn polys_and_quotients() {
        let q = BaseRing::rationals();
        let p = parse_poly(&q, "x", "x^3 - 2x + 1/3").unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p[1], q.int(-2));
        let r = parse_ring("Q[t]/(t^2)").unwrap();
        let t = parse_value(&r, "t").unwrap();
        assert!(r.is_zero(&r.mul(&t, &t)));
        assert!(parse_expr("x +").is_err());
        assert!(parse_ring("W").is_err());
    }
}
