//! Input grammar for tri-partitions and r-tuples.
//!
//! ```text
//! tripartition := "m[" triple* "]"        triple := "(" int "," int "," int ")"
//! rtuple       := "[" parts ("|" parts)* "]"   parts := ( int ("," int)* )?
//! ```
//!
//! Whitespace is allowed between tokens. Positions in errors are 1-based
//! character columns.

use hikita_core::{RTuple, TriPartition, Triple};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            chars: src.chars().collect(),
            pos: 0,
            src,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            column: self.pos + 1,
            message: message.into(),
        }
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

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    fn number(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.chars.get(self.pos) {
                Some(c) => self.error(format!("expected a non-negative integer, found '{c}'")),
                None => self.error("expected a non-negative integer, found end of input"),
            });
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| ParseError {
            column: start + 1,
            message: format!("integer {text} is too large"),
        })
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!(
                "unexpected '{c}' after the end of {:?}",
                self.src.trim()
            ))),
        }
    }
}

/// Parses `m[(a,b,c)(a,b,c)...]`, validating every triple against `r`.
pub fn parse_tripartition(src: &str, r: u32) -> Result<TriPartition, ParseError> {
    let mut cur = Cursor::new(src);
    cur.expect('m')?;
    cur.expect('[')?;
    let mut triples = Vec::new();
    while cur.peek() == Some('(') {
        let column = cur.pos + 1;
        cur.pos += 1;
        let a = cur.number()?;
        cur.expect(',')?;
        let b = cur.number()?;
        cur.expect(',')?;
        let c = cur.number()?;
        cur.expect(')')?;
        let t = Triple::new(a, b, c, r).map_err(|e| ParseError {
            column,
            message: e.to_string(),
        })?;
        triples.push(t);
    }
    cur.expect(']')?;
    cur.finish()?;
    Ok(TriPartition::from_triples(triples))
}

/// Parses `[p0|p1|...]`; missing trailing components are empty.
pub fn parse_rtuple(src: &str, r: u32) -> Result<RTuple, ParseError> {
    let mut cur = Cursor::new(src);
    cur.expect('[')?;
    let mut components: Vec<Vec<u32>> = vec![Vec::new()];
    loop {
        match cur.peek() {
            Some(']') => {
                cur.pos += 1;
                break;
            }
            Some('|') => {
                if components.len() as u32 == r {
                    return Err(cur.error(format!("more than r = {r} components")));
                }
                cur.pos += 1;
                components.push(Vec::new());
            }
            Some(',') if !components.last().expect("nonempty").is_empty() => {
                cur.pos += 1;
                let column = cur.pos + 1;
                let part = cur.number()?;
                push_part(&mut components, part, column)?;
            }
            Some(c) if c.is_ascii_digit() && components.last().expect("nonempty").is_empty() => {
                let column = cur.pos + 1;
                let part = cur.number()?;
                push_part(&mut components, part, column)?;
            }
            Some(c) => return Err(cur.error(format!("unexpected '{c}' in r-tuple"))),
            None => return Err(cur.error("expected ']', found end of input")),
        }
    }
    cur.finish()?;
    RTuple::from_parts(r, &components).map_err(|e| ParseError {
        column: 1,
        message: e.to_string(),
    })
}

fn push_part(components: &mut [Vec<u32>], part: u32, column: usize) -> Result<(), ParseError> {
    if components.len() == 1 && part == 0 {
        return Err(ParseError {
            column,
            message: "component 0 cannot contain a zero part".into(),
        });
    }
    components.last_mut().expect("nonempty").push(part);
    Ok(())
}
