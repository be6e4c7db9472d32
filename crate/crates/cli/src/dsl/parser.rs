use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::lexer::{lex, Tok};
use super::{Decl, Expr, FactorRef, GroupDef, ParseError, Pos, SpecFile};

pub fn parse(text: &str) -> Result<SpecFile, ParseError> {
    let toks = lex(text)?;
    let end = end_pos(text);
    let mut p = Parser { toks, at: 0, end };
    let mut spec = SpecFile::default();
    while !p.done() {
        let pos = p.pos();
        spec.decls.push(p.decl()?);
        spec.positions.push(pos);
    }
    Ok(spec)
}

fn end_pos(text: &str) -> Pos {
    let line = text.matches('\n').count() + 1;
    let col = text.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Pos { line, col }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn done(&self) -> bool {
        self.at >= self.toks.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.at + k).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn fail<T>(&self, expected: &str) -> Result<T, ParseError> {
        let pos = self.pos();
        let found = match self.peek() {
            Some(t) => t.describe(),
            None => "end of input".to_string(),
        };
        Err(ParseError {
            line: pos.line,
            col: pos.col,
            expected: format!("{expected}, found {found}"),
        })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> Result<(), ParseError> {
        if self.eat(t) {
            Ok(())
        } else {
            self.fail(&t.describe())
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.at += 1;
                Ok(())
            }
            _ => self.fail(&format!("`{kw}`")),
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.at += 1;
                Ok(s)
            }
            _ => self.fail(what),
        }
    }

    fn int(&mut self, what: &str) -> Result<BigInt, ParseError> {
        let neg = self.eat(&Tok::Minus);
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = if neg { -n.clone() } else { n.clone() };
                self.at += 1;
                Ok(n)
            }
            _ => self.fail(what),
        }
    }

    fn small(&mut self, what: &str) -> Result<usize, ParseError> {
        match self.peek() {
            Some(Tok::Int(n)) => match n.to_usize() {
                Some(v) => {
                    self.at += 1;
                    Ok(v)
                }
                None => self.fail(what),
            },
            _ => self.fail(what),
        }
    }

    fn decl(&mut self) -> Result<Decl, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == "group" => self.group(),
            Some(Tok::Ident(s)) if s == "embed" => self.embed(),
            Some(Tok::Ident(s)) if s == "amalgam" => self.amalgam(),
            Some(Tok::Ident(s)) if s == "word" => self.word(),
            _ => self.fail("a declaration (`group`, `embed`, `amalgam` or `word`)"),
        }
    }

    fn group(&mut self) -> Result<Decl, ParseError> {
        self.keyword("group")?;
        let name = self.ident("a group name")?;
        self.expect(&Tok::Eq)?;
        let def = match self.peek() {
            Some(Tok::Ident(s)) if s == "perm" => {
                self.at += 1;
                let degree = self.small("a degree")?;
                self.expect(&Tok::LBrace)?;
                let mut generators = Vec::new();
                while !self.eat(&Tok::RBrace) {
                    let mut cycles = Vec::new();
                    while self.peek() == Some(&Tok::LParen) {
                        cycles.push(self.cycle()?);
                    }
                    if cycles.is_empty() {
                        return self.fail("a cycle or `}`");
                    }
                    generators.push(cycles);
                    if !self.eat(&Tok::Semi) && self.peek() != Some(&Tok::RBrace) {
                        return self.fail("`;` or `}`");
                    }
                }
                GroupDef::Perm { degree, generators }
            }
            Some(Tok::Ident(s)) if s == "cyclic" => {
                self.at += 1;
                GroupDef::Cyclic(self.small("a positive order")?)
            }
            Some(Tok::Ident(s)) if s == "free-abelian" => {
                self.at += 1;
                GroupDef::FreeAbelian(self.small("a rank")?)
            }
            Some(Tok::Ident(s)) if s == "abelian" => {
                self.at += 1;
                GroupDef::Abelian(self.int_list()?)
            }
            _ => return self.fail("`perm`, `cyclic`, `free-abelian` or `abelian`"),
        };
        Ok(Decl::Group { name, def })
    }

    fn int_list(&mut self) -> Result<Vec<BigInt>, ParseError> {
        self.expect(&Tok::LBracket)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBracket) {
            return Ok(out);
        }
        loop {
            out.push(self.int("an integer")?);
            if self.eat(&Tok::RBracket) {
                return Ok(out);
            }
            if !self.eat(&Tok::Comma) {
                return self.fail("`,` or `]`");
            }
        }
    }

    fn cycle(&mut self) -> Result<Vec<usize>, ParseError> {
        self.expect(&Tok::LParen)?;
        let mut pts = Vec::new();
        while !self.eat(&Tok::RParen) {
            pts.push(self.small("a point or `)`")?);
            self.eat(&Tok::Comma);
        }
        Ok(pts)
    }

    fn embed(&mut self) -> Result<Decl, ParseError> {
        self.keyword("embed")?;
        let name = self.ident("an embedding name")?;
        self.expect(&Tok::Colon)?;
        let source = self.ident("a source group")?;
        self.expect(&Tok::Arrow)?;
        let target = self.ident("a target group")?;
        self.expect(&Tok::LBrace)?;
        let mut images = Vec::new();
        while !self.eat(&Tok::RBrace) {
            let g = match self.peek() {
                Some(Tok::Ident(s)) => gen_number(s),
                _ => None,
            };
            let Some(g) = g else {
                return self.fail("a generator `g<i>`");
            };
            self.at += 1;
            self.expect(&Tok::Arrow)?;
            images.push((g, self.expr()?));
            if !self.eat(&Tok::Semi) && self.peek() != Some(&Tok::RBrace) {
                return self.fail("`;` or `}`");
            }
        }
        Ok(Decl::Embed {
            name,
            source,
            target,
            images,
        })
    }

    fn amalgam(&mut self) -> Result<Decl, ParseError> {
        self.keyword("amalgam")?;
        let name = self.ident("an amalgam name")?;
        self.expect(&Tok::Eq)?;
        let mut factors = vec![self.ident("a factor group")?];
        while self.eat(&Tok::Comma) {
            factors.push(self.ident("a factor group")?);
        }
        self.keyword("over")?;
        let over = self.ident("the amalgamated group")?;
        self.keyword("via")?;
        let mut via = vec![self.ident("an embedding name")?];
        while self.eat(&Tok::Comma) {
            via.push(self.ident("an embedding name")?);
        }
        Ok(Decl::Amalgam {
            name,
            factors,
            over,
            via,
        })
    }

    fn word(&mut self) -> Result<Decl, ParseError> {
        self.keyword("word")?;
        let name = self.ident("a word name")?;
        self.keyword("in")?;
        let amalgam = self.ident("an amalgam name")?;
        self.expect(&Tok::Eq)?;
        let mut syllables = Vec::new();
        if self.eat(&Tok::LBracket) {
            self.expect(&Tok::RBracket)?;
            return Ok(Decl::Word {
                name,
                amalgam,
                syllables,
            });
        }
        loop {
            let factor = match self.peek() {
                Some(Tok::Ident(s)) => FactorRef::Name(s.clone()),
                Some(Tok::Int(n)) => match n.to_usize() {
                    Some(v) => FactorRef::Index(v),
                    None => return self.fail("a factor index"),
                },
                _ => return self.fail("a factor name or index"),
            };
            self.at += 1;
            self.expect(&Tok::Colon)?;
            syllables.push((factor, self.expr()?));
            if !self.eat(&Tok::Star) {
                break;
            }
        }
        Ok(Decl::Word {
            name,
            amalgam,
            syllables,
        })
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Some(Tok::LParen) | Some(Tok::LBracket) => true,
            Some(Tok::Int(n)) => n.is_one() && self.peek_at(1) != Some(&Tok::Colon),
            Some(Tok::Ident(s)) => {
                // a name followed by `:` opens the next declaration or syllable
                (s == "e" || gen_number(s).is_some()) && self.peek_at(1) != Some(&Tok::Colon)
            }
            _ => false,
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        if !self.starts_atom() {
            return self.fail("an element expression");
        }
        let mut factors = Vec::new();
        while self.starts_atom() {
            factors.push(self.power()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Product(factors)
        })
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while self.eat(&Tok::Caret) {
            let k = self.int("an exponent")?;
            base = Expr::Power(Box::new(base), k);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                self.at += 1;
                Ok(Expr::Identity)
            }
            Some(Tok::Ident(s)) => {
                let e = if s == "e" {
                    Expr::Identity
                } else {
                    Expr::Gen(gen_number(s).unwrap())
                };
                self.at += 1;
                Ok(e)
            }
            Some(Tok::LBracket) => Ok(Expr::Vector(self.int_list()?)),
            Some(Tok::LParen) => {
                // `(` followed by a point or `)` is a cycle, otherwise a group
                match self.peek_at(1) {
                    Some(Tok::Int(_)) | Some(Tok::RParen) => Ok(Expr::Cycle(self.cycle()?)),
                    _ => {
                        self.at += 1;
                        let e = self.expr()?;
                        self.expect(&Tok::RParen)?;
                        Ok(e)
                    }
                }
            }
            _ => self.fail("an element expression"),
        }
    }
}

fn gen_number(s: &str) -> Option<usize> {
    let digits = s.strip_prefix('g')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok().filter(|&k| k >= 1)
}
