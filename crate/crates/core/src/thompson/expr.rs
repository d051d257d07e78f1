//! Text names for elements of `F`.
//!
//! ```text
//! expr  := star ('.' star)*        composition, a.b = a ∘ b
//! star  := power ('*' power)*      *-product, left associative
//! power := atom ('^' integer)?
//! atom  := 'f' | 'g' | '1' | 'id' | '(' expr ')' | '@' path
//! ```
//!
//! `@path` reads a JSON breakpoint list from a file.

use super::plmap::PLMap;
use super::{f, g};
use crate::error::{Error, Result};

pub fn parse_element(src: &str) -> Result<PLMap> {
    let mut p = Parser {
        chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        src,
    };
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
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

    fn expr(&mut self) -> Result<PLMap> {
        let mut acc = self.star()?;
        while self.eat('.') {
            acc = acc.compose(&self.star()?);
        }
        Ok(acc)
    }

    fn star(&mut self) -> Result<PLMap> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = acc.star(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<PLMap> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let k: i64 = self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| self.error("expected an integer exponent"))?;
        let step = if k < 0 { base.inverse() } else { base };
        Ok((0..k.unsigned_abs()).fold(PLMap::identity(), |acc, _| acc.compose(&step)))
    }

    fn atom(&mut self) -> Result<PLMap> {
        match self.peek() {
            Some('f') => {
                self.pos += 1;
                Ok(f())
            }
            Some('g') => {
                self.pos += 1;
                Ok(g())
            }
            Some('1') => {
                self.pos += 1;
                Ok(PLMap::identity())
            }
            Some('i') if self.chars[self.pos..].starts_with(&['i', 'd']) => {
                self.pos += 2;
                Ok(PLMap::identity())
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some('@') => {
                let path: String = self.chars[self.pos + 1..].iter().collect();
                self.pos = self.chars.len();
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
            }
            _ => Err(self.error("expected an element")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        let id = PLMap::identity();
        assert_eq!(parse_element("f").unwrap(), f());
        assert_eq!(parse_element("1").unwrap(), id);
        assert_eq!(parse_element("id").unwrap(), id);
        assert_eq!(parse_element("f*1").unwrap(), f().star(&id));
        assert_eq!(parse_element("1 * g").unwrap(), id.star(&g()));
        assert_eq!(parse_element("f*1*1").unwrap(), f().star(&id).star(&id));
        assert_eq!(parse_element("1*(f*1)").unwrap(), id.star(&f().star(&id)));
        assert_eq!(parse_element("f.g").unwrap(), f().compose(&g()));
        assert_eq!(
            parse_element("f^-2").unwrap(),
            f().inverse().compose(&f().inverse())
        );
        assert_eq!(parse_element("g^0").unwrap(), id);
    }

    #[test]
    fn errors() {
        for bad in ["", "h", "f*", "(f", "f)", "f^x"] {
            assert!(parse_element(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn from_file() {
        let dir = std::env::temp_dir().join(format!("pbounded-expr-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("g.json");
        std::fs::write(&path, serde_json::to_string(&g()).unwrap()).unwrap();
        let parsed = parse_element(&format!("@{}", path.display())).unwrap();
        assert_eq!(parsed, g());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
