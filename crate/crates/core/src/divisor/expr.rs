use crate::abelian::GroupElement;
use crate::error::{Error, Result};
use crate::multicurve::Efg;
use crate::ringkit::text::parse_value;

use super::core::{convolution, divisor_sum, full_divisor, point_divisor, subtract, translate_divisor, Divisor};

/// Parses a character written as coordinates, `1,0` or `(1,0)`.
pub fn parse_character(e: &Efg, s: &str) -> Result<GroupElement> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let coords: Vec<i64> = t
        .split(',')
        .map(|c| c.trim().parse::<i64>().map_err(|_| Error::Expr(format!("'{s}' is not a character"))))
        .collect::<Result<_>>()?;
    let g = e.group();
    if coords.len() != g.rank().max(1) || (g.rank() == 0 && coords != [0]) {
        return Err(Error::Expr(format!("'{s}' does not have {} coordinates", g.rank())));
    }
    if g.rank() == 0 {
        return Ok(g.zero());
    }
    g.elem(&coords)
}

struct P<'a> {
    s: &'a str,
    pos: usize,
    e: &'a Efg,
}

impl<'a> P<'a> {
    fn ws(&mut self) {
        while self.s[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, t: &str) -> bool {
        self.ws();
        if self.s[self.pos..].starts_with(t) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    /// Raw text up to the matching close paren.
    fn group_text(&mut self) -> Result<&'a str> {
        let st = self.pos;
        let mut depth = 1;
        for (i, c) in self.s[st..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        self.pos = st + i + 1;
                        return Ok(&self.s[st..st + i]);
                    }
                }
                _ => {}
            }
        }
        Err(Error::Expr("unbalanced parentheses".into()))
    }

    fn sum(&mut self) -> Result<Divisor> {
        let mut d = self.product()?;
        loop {
            if self.eat("+") {
                d = divisor_sum(&d, &self.product()?)?;
            } else if self.eat("-") {
                d = subtract(&d, &self.product()?)?;
            } else {
                return Ok(d);
            }
        }
    }

    fn product(&mut self) -> Result<Divisor> {
        let mut d = self.atom()?;
        while self.eat("*") {
            d = convolution(&d, &self.atom()?, self.e)?;
        }
        Ok(d)
    }

    fn atom(&mut self) -> Result<Divisor> {
        if self.eat("zero") {
            return point_divisor(self.e, &crate::ringkit::Ring::zero(self.e.base()));
        }
        if self.eat("full") {
            return full_divisor(self.e);
        }
        if self.eat("point(") {
            let arg = self.group_text()?;
            return match parse_character(self.e, arg) {
                Ok(a) => point_divisor(self.e, self.e.phi(&a)),
                Err(_) => point_divisor(self.e, &parse_value(self.e.base(), arg)?),
            };
        }
        if self.eat("tr(") {
            let inner = self.group_text()?;
            let mut depth = 0;
            let mut split = None;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    ',' if depth == 0 => split = Some(i),
                    _ => {}
                }
            }
            let i = split.ok_or_else(|| Error::Expr("tr needs a character and a divisor".into()))?;
            let alpha = parse_character(self.e, &inner[..i])?;
            let d = parse_divisor(self.e, &inner[i + 1..])?;
            return translate_divisor(&d, &alpha, self.e);
        }
        if self.eat("(") {
            let d = self.sum()?;
            if !self.eat(")") {
                return Err(Error::Expr("missing ')'".into()));
            }
            return Ok(d);
        }
        Err(Error::Expr(format!("unexpected input at '{}'", &self.s[self.pos..])))
    }
}

/// Evaluates a divisor expression such as `point(1)+point(0)` or `tr(1, full)`.
pub fn parse_divisor(e: &Efg, s: &str) -> Result<Divisor> {
    let mut p = P { s, pos: 0, e };
    let d = p.sum()?;
    p.ws();
    if p.pos != s.len() {
        return Err(Error::Expr(format!("trailing input '{}'", &s[p.pos..])));
    }
    Ok(d)
}
