//! Expression language for algebra elements.
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := coeff | "p(" vertex ")" | "s(" pathlit ")" | "st(" pathlit ")" | "(" expr ")"
//! ```
//!
//! Coefficient literals follow the ring: `3`, `-2`, `2/5`, `x^-1`, `y^2`.
//! A bare coefficient means that multiple of the identity `sum_v p_v`.

use crate::algebra::{Algebra, AlgebraElement, AlgebraError};
use crate::graph::GraphError;
use crate::ring::RingError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExprError {
    #[error("parse error at column {col}: {message}")]
    Syntax { col: usize, message: String },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub fn parse_expr(alg: &Algebra, text: &str) -> Result<AlgebraElement, ExprError> {
    let mut p = Parser {
        alg,
        chars: text.chars().collect(),
        pos: 0,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    alg: &'a Algebra,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> ExprError {
        ExprError::Syntax {
            col: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<AlgebraElement, ExprError> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<AlgebraElement, ExprError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    /// Read the literal between `(` and the next `)`.
    fn delimited(&mut self) -> Result<String, ExprError> {
        if !self.eat('(') {
            return Err(self.err("expected `(`"));
        }
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c == ')' {
                let lit: String = self.chars[start..self.pos].iter().collect();
                self.pos += 1;
                return Ok(lit);
            }
            self.pos += 1;
        }
        Err(self.err("unclosed `(`"))
    }

    fn factor(&mut self) -> Result<AlgebraElement, ExprError> {
        self.skip_ws();
        let g = self.alg.graph();
        // generator forms, checked longest-first
        if self.lookahead_keyword("st") {
            self.pos += 2;
            let lit = self.delimited()?;
            return Ok(self.alg.ghost(&g.parse_path(&lit)?));
        }
        if self.lookahead_keyword("s") {
            self.pos += 1;
            let lit = self.delimited()?;
            return Ok(self.alg.generator(&g.parse_path(&lit)?));
        }
        if self.lookahead_keyword("p") {
            self.pos += 1;
            let lit = self.delimited()?;
            return Ok(self.alg.vertex(g.vertex_id(lit.trim())?));
        }
        if self.eat('(') {
            let inner = self.expr()?;
            if !self.eat(')') {
                return Err(self.err("expected `)`"));
            }
            return Ok(inner);
        }
        self.coefficient()
    }

    /// `p(`, `s(`, `st(` with optional whitespace before the paren.
    fn lookahead_keyword(&self, kw: &str) -> bool {
        let mut i = self.pos;
        for c in kw.chars() {
            if self.chars.get(i) != Some(&c) {
                return false;
            }
            i += 1;
        }
        while self.chars.get(i).is_some_and(|c| c.is_whitespace()) {
            i += 1;
        }
        self.chars.get(i) == Some(&'(')
    }

    fn coefficient(&mut self) -> Result<AlgebraElement, ExprError> {
        let start = self.pos;
        let mut prev = '\0';
        while let Some(c) = self.peek() {
            let take = c.is_ascii_alphanumeric() || c == '^' || c == '/' || (c == '-' && prev == '^');
            if !take {
                break;
            }
            prev = c;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a factor"));
        }
        let lit: String = self.chars[start..self.pos].iter().collect();
        let coeff = self.alg.ring().parse_literal(&lit)?;
        Ok(self.alg.one().scale(&coeff))
    }
}
