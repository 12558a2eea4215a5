//! Tiny recursive-descent parser for algebra elements and rank-2 tensors
//! written over generator names.
//!
//! Grammar: `expr := ['-'|'+'] tens (('+'|'-') tens)*`,
//! `tens := term [('⊗'|'|') term]`, `term := factor (['*'] factor)*`,
//! `factor := INT ['/' INT] | NAME [pow] | '(' expr ')' [pow]`, with
//! `pow := '^' INT | '²' | '³'`. Juxtaposition only follows a number, so
//! `2(X⊗Y)` and `2X` work while `XY` stays a single name.

use super::{Element, OrePresentation};
use crate::coalgebra::Tensor;
use crate::error::{Error, Result};
use crate::exactlin::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Name(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(chars[s..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let s = i;
            while i < chars.len()
                && (chars[i].is_alphabetic()
                    || chars[i].is_ascii_digit()
                    || chars[i] == '_'
                    || chars[i] == '\'')
            {
                i += 1;
            }
            out.push(Tok::Name(chars[s..i].iter().collect()));
        } else if "+-*/^()⊗|²³−".contains(c) {
            out.push(Tok::Sym(if c == '−' {
                '-'
            } else if c == '|' {
                '⊗'
            } else {
                c
            }));
            i += 1;
        } else {
            return Err(Error::Input(format!(
                "unexpected character `{c}` in `{text}`"
            )));
        }
    }
    Ok(out)
}

enum Val {
    El(Element),
    T(Tensor),
}

struct Parser<'a> {
    p: &'a OrePresentation,
    toks: Vec<Tok>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Input(format!("{msg} in `{}`", self.text))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<u32> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                n.parse().map_err(|_| self.err("exponent too large"))
            }
            _ => Err(self.err("expected integer")),
        }
    }

    fn add(&self, acc: Option<Val>, v: Val, sign: &Scalar) -> Result<Val> {
        Ok(match (acc, v) {
            (None, Val::El(e)) => Val::El(e.scale(sign)),
            (None, Val::T(t)) => Val::T(t.scale(sign)),
            (Some(Val::El(mut a)), Val::El(e)) => {
                a.add_scaled(&e, sign);
                Val::El(a)
            }
            (Some(Val::T(mut a)), Val::T(t)) => {
                a.add_scaled(&t, sign);
                Val::T(a)
            }
            _ => return Err(self.err("cannot add an element and a tensor")),
        })
    }

    fn expr(&mut self) -> Result<Val> {
        let mut sign = if self.eat('-') {
            -Scalar::one()
        } else {
            self.eat('+');
            Scalar::one()
        };
        let mut acc = None;
        loop {
            let t = self.tens()?;
            acc = Some(self.add(acc, t, &sign)?);
            if self.eat('+') {
                sign = Scalar::one();
            } else if self.eat('-') {
                sign = -Scalar::one();
            } else {
                return Ok(acc.expect("at least one term"));
            }
        }
    }

    fn tens(&mut self) -> Result<Val> {
        let left = self.term()?;
        if !self.eat('⊗') {
            return Ok(left);
        }
        let right = self.term()?;
        match (left, right) {
            (Val::El(a), Val::El(b)) => {
                Ok(Val::T(Tensor::from_elements(self.p.ngens(), &[&a, &b])))
            }
            _ => Err(self.err("only rank-2 tensors are supported")),
        }
    }

    fn mul(&self, a: Val, b: Val) -> Result<Val> {
        Ok(match (a, b) {
            (Val::El(x), Val::El(y)) => Val::El(self.p.product(&x, &y)),
            (Val::El(c), Val::T(t)) | (Val::T(t), Val::El(c)) => {
                if c.terms().any(|(m, _)| !m.is_unit()) {
                    return Err(self.err("a tensor can only be scaled by a constant"));
                }
                Val::T(t.scale(&c.constant_term()))
            }
            (Val::T(_), Val::T(_)) => return Err(self.err("tensors cannot be multiplied here")),
        })
    }

    fn term(&mut self) -> Result<Val> {
        let mut after_number = matches!(self.peek(), Some(Tok::Num(_)));
        let mut acc = self.factor()?;
        loop {
            let implicit =
                after_number && matches!(self.peek(), Some(Tok::Sym('(')) | Some(Tok::Name(_)));
            if !implicit && !self.eat('*') {
                return Ok(acc);
            }
            after_number = matches!(self.peek(), Some(Tok::Num(_)));
            let f = self.factor()?;
            acc = self.mul(acc, f)?;
        }
    }

    fn factor(&mut self) -> Result<Val> {
        let base = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut text = n;
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) => {
                            self.pos += 1;
                            text = format!("{text}/{d}");
                        }
                        _ => return Err(self.err("expected denominator")),
                    }
                }
                Val::El(self.p.constant(text.parse()?))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                Val::El(self.p.gen_named(&name)?)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing `)`"));
                }
                e
            }
            _ => return Err(self.err("expected a factor")),
        };
        let exp = if self.eat('^') {
            Some(self.int()?)
        } else if self.eat('²') {
            Some(2)
        } else if self.eat('³') {
            Some(3)
        } else {
            None
        };
        match (exp, base) {
            (None, b) => Ok(b),
            (Some(e), Val::El(b)) => Ok(Val::El(self.p.pow(&b, e))),
            (Some(_), Val::T(_)) => Err(self.err("cannot raise a tensor to a power")),
        }
    }
}

fn parse_value(p: &OrePresentation, text: &str) -> Result<Val> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Input("empty expression".into()));
    }
    let mut parser = Parser {
        p,
        toks,
        pos: 0,
        text,
    };
    let v = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return Err(parser.err("trailing input"));
    }
    Ok(v)
}

pub(crate) fn parse_element(p: &OrePresentation, text: &str) -> Result<Element> {
    match parse_value(p, text)? {
        Val::El(e) => Ok(e),
        Val::T(_) => Err(Error::Input(format!(
            "expected an element, got a tensor: `{text}`"
        ))),
    }
}

/// Parses `X⊗Y - Y⊗X`, `2(XY⊗Y + Y⊗XY)` or `X|Y`; a bare `0` is the zero tensor.
pub(crate) fn parse_tensor(p: &OrePresentation, text: &str) -> Result<Tensor> {
    match parse_value(p, text)? {
        Val::T(t) => Ok(t),
        Val::El(e) if e.is_zero() => Ok(Tensor::zero(p.ngens(), 2)),
        Val::El(_) => Err(Error::Input(format!(
            "expected a rank-2 tensor, got `{text}`"
        ))),
    }
}

/// Parses a word like `W*Z*X` or `W Z X` into generator indices.
pub fn parse_word(p: &OrePresentation, text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c == '*' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| p.index_of(s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ore::GeneratorInfo;

    fn xy() -> OrePresentation {
        OrePresentation::new(
            vec![GeneratorInfo::new("X", 1), GeneratorInfo::new("Y", 1)],
            [],
        )
        .unwrap()
    }

    #[test]
    fn tensors_with_scaled_groups() {
        let p = xy();
        let a = parse_tensor(&p, "Y²⊗X + X⊗Y² + 2(X*Y⊗Y + Y⊗X*Y)").unwrap();
        let b = parse_tensor(&p, "Y^2|X + X|Y^2 + 2*X*Y⊗Y + 2*Y⊗X*Y").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 4);
        assert_eq!(
            parse_tensor(&p, "3/2*(X⊗Y) - 3/2*(Y⊗X)").unwrap().coeff(&[
                crate::ore::Monomial::generator(2, 1),
                crate::ore::Monomial::generator(2, 0)
            ]),
            Scalar::new(-3, 2)
        );
        assert!(parse_tensor(&p, "0").unwrap().is_zero());
    }

    #[test]
    fn rendered_tensors_parse_back() {
        let p = xy();
        let t = parse_tensor(&p, "X⊗Y - 2(Y⊗X) + 1/3*(X*Y⊗Y)").unwrap();
        assert_eq!(parse_tensor(&p, &t.render(p.names())).unwrap(), t);
    }

    #[test]
    fn rejects_mixed_ranks() {
        let p = xy();
        assert!(parse_tensor(&p, "X⊗Y + X").is_err());
        assert!(parse_element(&p, "X⊗Y").is_err());
        assert!(parse_tensor(&p, "X⊗Y⊗X").is_err());
        assert!(parse_tensor(&p, "X*(X⊗Y)").is_err());
    }
}
