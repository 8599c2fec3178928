//! Complex literals such as `0.3`, `i*pi/2`, `0.1-0.2i`, `-(pi/8)i`.

use num_complex::Complex64;

use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, chars: src.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("bad complex literal `{}`: {what}", self.src))
    }

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

    fn expr(&mut self) -> Result<Complex64> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc += self.term()?;
            } else if self.eat('-') {
                acc -= self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Complex64> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc *= self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                if d.norm() == 0.0 {
                    return Err(self.err("division by zero"));
                }
                acc /= d;
            } else if matches!(self.peek(), Some('i' | 'j' | 'p' | '(')) {
                // implicit product: `2pi`, `0.5i`, `(pi/8)i`
                acc *= self.unary()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Complex64> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Complex64> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing `)`"));
                }
                Ok(v)
            }
            Some('i' | 'j') => {
                self.pos += 1;
                Ok(Complex64::i())
            }
            Some('p') => {
                if self.chars.get(self.pos + 1) == Some(&'i') {
                    self.pos += 2;
                    Ok(Complex64::new(std::f64::consts::PI, 0.0))
                } else {
                    Err(self.err("unknown symbol"))
                }
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            _ => Err(self.err("expected a number, `i`, `pi` or `(`")),
        }
    }

    fn number(&mut self) -> Result<Complex64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '.') {
            self.pos += 1;
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.peek(), Some('+' | '-')) {
                self.pos += 1;
            }
            if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
            } else {
                self.pos = save;
            }
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let v: f64 = text.parse().map_err(|_| self.err("malformed number"))?;
        Ok(Complex64::new(v, 0.0))
    }
}

pub fn parse_complex(src: &str) -> Result<Complex64> {
    let mut p = Parser::new(src);
    if p.chars.is_empty() {
        return Err(p.err("empty"));
    }
    let numeric = |c: char| c.is_ascii_digit() || c == '.';
    let raw: Vec<char> = src.trim().chars().collect();
    for (k, w) in raw.windows(2).enumerate() {
        if numeric(w[0]) && w[1].is_whitespace() {
            if let Some(&next) = raw[k + 1..].iter().find(|c| !c.is_whitespace()) {
                if numeric(next) {
                    return Err(p.err("numbers separated by whitespace"));
                }
            }
        }
    }
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err("trailing characters"));
    }
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(p.err("not finite"));
    }
    Ok(v)
}
