//! Operation words such as `+u\u*{v,w}[{v,w}]`, applied left to right.
//!
//! Tokens: `*X` pivot, `+X` loop complement, `~*X` dual pivot, `\X` delete,
//! `[X]` restrict. An operand `X` is a single label or a braced list `{a,b}`.

use deltaflip::{Flip, Graph, GroundSet, SetSystem};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Op {
    Flip(Flip, Vec<String>),
    Delete(Vec<String>),
    Restrict(Vec<String>),
}

const SPECIAL: &str = "*+~\\[]{},";

struct Lexer<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            chars: src.chars().collect(),
            pos: 0,
            src,
        }
    }

    fn fail<T>(&self, msg: &str) -> CliResult<T> {
        Err(CliError::Input(format!(
            "operation word `{}`, column {}: {msg}",
            self.src,
            self.pos + 1
        )))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> CliResult<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&format!("expected `{c}`"))
        }
    }

    fn label(&mut self) -> CliResult<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|&c| !c.is_whitespace() && !SPECIAL.contains(c))
        {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected an element label");
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    /// Comma-separated labels up to (not including) `close`.
    fn list(&mut self, close: char) -> CliResult<Vec<String>> {
        let mut out = Vec::new();
        if self.peek() == Some(close) {
            return Ok(out);
        }
        loop {
            out.push(self.label()?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(c) if c == close => return Ok(out),
                _ => return self.fail(&format!("expected `,` or `{close}`")),
            }
        }
    }

    fn operand(&mut self) -> CliResult<Vec<String>> {
        if self.peek() == Some('{') {
            self.pos += 1;
            let out = self.list('}')?;
            self.expect('}')?;
            Ok(out)
        } else {
            Ok(vec![self.label()?])
        }
    }
}

pub fn parse_word(src: &str) -> CliResult<Vec<Op>> {
    let mut lx = Lexer::new(src);
    let mut ops = Vec::new();
    while let Some(c) = lx.peek() {
        lx.pos += 1;
        let op = match c {
            '*' => Op::Flip(Flip::Pivot, lx.operand()?),
            '+' => Op::Flip(Flip::LoopComplement, lx.operand()?),
            '~' => {
                lx.expect('*')?;
                Op::Flip(Flip::DualPivot, lx.operand()?)
            }
            '\\' => Op::Delete(lx.operand()?),
            '[' => {
                let inner = if lx.peek() == Some('{') {
                    lx.operand()?
                } else {
                    lx.list(']')?
                };
                lx.expect(']')?;
                Op::Restrict(inner)
            }
            _ => {
                lx.pos -= 1;
                return lx.fail(&format!("unexpected `{c}`"));
            }
        };
        ops.push(op);
    }
    Ok(ops)
}

/// A set given as `{a,b}`, `a,b` or a single label.
pub fn parse_set(src: &str) -> CliResult<Vec<String>> {
    let mut lx = Lexer::new(src);
    let out = match lx.peek() {
        None => Vec::new(),
        Some('{') => lx.operand()?,
        Some(_) => {
            let mut out = vec![lx.label()?];
            while lx.peek() == Some(',') {
                lx.pos += 1;
                out.push(lx.label()?);
            }
            out
        }
    };
    if lx.peek().is_some() {
        return lx.fail("trailing characters");
    }
    Ok(out)
}

pub fn mask(ground: &GroundSet, labels: &[String]) -> CliResult<u64> {
    ground.mask_of(labels).map_err(CliError::Document)
}

pub fn apply_to_system(m: &SetSystem, ops: &[Op]) -> CliResult<SetSystem> {
    let mut cur = m.clone();
    for op in ops {
        cur = match op {
            Op::Flip(kind, xs) => cur.apply(*kind, mask(cur.ground(), xs)?)?,
            Op::Delete(xs) => cur.delete(mask(cur.ground(), xs)?)?,
            Op::Restrict(xs) => cur.restrict(mask(cur.ground(), xs)?)?,
        };
    }
    Ok(cur)
}

pub fn apply_to_graph(g: &Graph, ops: &[Op]) -> CliResult<Graph> {
    let mut cur = g.clone();
    for op in ops {
        cur = match op {
            Op::Flip(kind, xs) => cur.flip(*kind, mask(cur.ground(), xs)?)?,
            Op::Delete(xs) => cur.delete(mask(cur.ground(), xs)?)?,
            Op::Restrict(xs) => {
                let keep = mask(cur.ground(), xs)?;
                cur.delete(cur.ground().full() & !keep)?
            }
        };
    }
    Ok(cur)
}
