use smallvec::SmallVec;

use super::{Node, Tree};
use crate::alphabet::{is_ident_byte, Palette};
use crate::error::ParseError;

/// Parses `tree := '(' forest ')'`, `forest := vertex (',' vertex)*`,
/// `vertex := COLOR [ '(' forest ')' ]`. Whitespace between tokens is ignored.
pub fn parse_tree(palette: &Palette, text: &str) -> Result<Tree, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        text,
        pos: 0,
        palette,
        nodes: SmallVec::new(),
    };
    p.expect(b'(')?;
    p.forest()?;
    p.expect(b')')?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(ParseError::new(p.pos, "trailing input after tree"));
    }
    if p.nodes.len() > u16::MAX as usize {
        return Err(ParseError::new(0, "tree too large"));
    }
    Ok(Tree::from_raw(p.nodes))
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
    palette: &'a Palette,
    nodes: SmallVec<[Node; 8]>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => Err(ParseError::new(
                self.pos,
                format!("expected `{}`, found `{}`", c as char, got as char),
            )),
            None => Err(ParseError::new(
                self.pos,
                format!("expected `{}`, found end of input", c as char),
            )),
        }
    }

    fn forest(&mut self) -> Result<(), ParseError> {
        if self.peek() == Some(b')') {
            return Err(ParseError::new(self.pos, "empty forest"));
        }
        self.vertex()?;
        while self.peek() == Some(b',') {
            self.pos += 1;
            self.vertex()?;
        }
        Ok(())
    }

    fn vertex(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && is_ident_byte(self.src[self.pos]) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::new(start, "expected a color"));
        }
        let name = &self.text[start..self.pos];
        let color = self
            .palette
            .lookup(name)
            .ok_or_else(|| ParseError::new(start, format!("color `{name}` is not in the palette")))?;
        let slot = self.nodes.len();
        self.nodes.push(Node { color, size: 1 });
        if self.peek() == Some(b'(') {
            self.pos += 1;
            self.forest()?;
            self.expect(b')')?;
        }
        self.nodes[slot].size = (self.nodes.len() - slot) as u16;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pal() -> Palette {
        Palette::letters(4).unwrap()
    }

    #[test]
    fn grammar_examples() {
        let p = pal();
        let a = parse_tree(&p, "(a)").unwrap();
        assert_eq!(a.degree(), 1);
        assert_eq!(a.render(&p), "(a)");
        let ab = parse_tree(&p, "(a,b)").unwrap();
        assert_eq!(ab.factorize().len(), 2);
        let chain = parse_tree(&p, "(b(a))").unwrap();
        assert!(chain.is_irreducible());
        assert_eq!(chain.render(&p), "(b(a))");
    }

    #[test]
    fn whitespace_is_insignificant() {
        let p = pal();
        let t = parse_tree(&p, " ( d ( a , b ,c ) , a\n) ").unwrap();
        assert_eq!(t.render(&p), "(d(a,b,c),a)");
    }

    #[test]
    fn errors_carry_offsets() {
        let p = pal();
        assert_eq!(parse_tree(&p, "()").unwrap_err().offset, 1);
        assert_eq!(parse_tree(&p, "(a())").unwrap_err().offset, 3);
        assert_eq!(parse_tree(&p, "(a,)").unwrap_err().offset, 3);
        assert_eq!(parse_tree(&p, "(z)").unwrap_err().offset, 1);
        assert_eq!(parse_tree(&p, "(a)x").unwrap_err().offset, 3);
        assert_eq!(parse_tree(&p, "a").unwrap_err().offset, 0);
        assert_eq!(parse_tree(&p, "(a").unwrap_err().offset, 2);
    }

    #[test]
    fn multi_character_colors() {
        let p = Palette::new(["x1", "long_name"]).unwrap();
        let t = parse_tree(&p, "(long_name(x1,x1))").unwrap();
        assert_eq!(t.render(&p), "(long_name(x1,x1))");
    }
}
