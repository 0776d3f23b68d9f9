//! Concrete syntax: lexer, parser and pretty-printer.
//!
//! ```text
//! types   A ::= X | A -> A | A & A | forall X. A | (A)
//! terms   r ::= x | x:A | \x:A. r | r r | r + r | pi[A](r) | /\X. r | r {A} | (r)
//! program   ::= (def name = r ;)* [r]
//! ```
//!
//! `&` binds tighter than `->`; `->` is right-associative, `&` and `+` are
//! left-nested, application is left-associative and binds tightest. Binders
//! extend as far right as possible. Type variables are capitalized, term
//! variables are not. Unicode `∧ ⇒ → λ Λ π ∀` are accepted on input and `#`
//! starts a line comment.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use crate::term::{Term, TypedVar};
use crate::types::{free_type_vars, Type};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
    /// A bare variable with no enclosing binder or definition of that name.
    Unbound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Lambda,
    BigLambda,
    Pi,
    Forall,
    Def,
    Colon,
    Dot,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Plus,
    Amp,
    Arrow,
    Eq,
    Semi,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => alloc::format!("`{}`", s),
            Tok::Eof => "end of input".to_string(),
            other => {
                let s = match other {
                    Tok::Lambda => "\\",
                    Tok::BigLambda => "/\\",
                    Tok::Pi => "pi",
                    Tok::Forall => "forall",
                    Tok::Def => "def",
                    Tok::Colon => ":",
                    Tok::Dot => ".",
                    Tok::LParen => "(",
                    Tok::RParen => ")",
                    Tok::LBracket => "[",
                    Tok::RBracket => "]",
                    Tok::LBrace => "{",
                    Tok::RBrace => "}",
                    Tok::Plus => "+",
                    Tok::Amp => "&",
                    Tok::Arrow => "->",
                    Tok::Eq => "=",
                    Tok::Semi => ";",
                    Tok::Ident(_) | Tok::Eof => unreachable!(),
                };
                alloc::format!("`{}`", s)
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() && !matches!(c, 'λ' | 'Λ' | 'π') || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() && !matches!(c, 'λ' | 'Λ' | 'π') || c == '_' || c == '\''
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut core::iter::Peekable<core::str::Chars<'_>>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                bump(&mut chars);
            }
            continue;
        }
        let tok = if is_ident_start(c) {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if !is_ident_continue(c) {
                    break;
                }
                s.push(c);
                bump(&mut chars);
            }
            match s.as_str() {
                "pi" => Tok::Pi,
                "forall" => Tok::Forall,
                "def" => Tok::Def,
                _ => Tok::Ident(s),
            }
        } else {
            bump(&mut chars);
            match c {
                '\\' | 'λ' => Tok::Lambda,
                'Λ' => Tok::BigLambda,
                'π' => Tok::Pi,
                '∀' => Tok::Forall,
                '∧' | '&' => Tok::Amp,
                '⇒' | '→' => Tok::Arrow,
                ':' => Tok::Colon,
                '.' => Tok::Dot,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '+' => Tok::Plus,
                '=' => Tok::Eq,
                ';' => Tok::Semi,
                '/' if chars.peek() == Some(&'\\') => {
                    bump(&mut chars);
                    Tok::BigLambda
                }
                '-' if chars.peek() == Some(&'>') => {
                    bump(&mut chars);
                    Tok::Arrow
                }
                _ => {
                    return Err(ParseError {
                        kind: ParseErrorKind::Lexical,
                        line: l,
                        column: col,
                        message: alloc::format!("unexpected character `{}`", c),
                    })
                }
            }
        };
        out.push(Spanned { tok, line: l, column: col });
    }
    out.push(Spanned { tok: Tok::Eof, line, column });
    Ok(out)
}

/// A parsed source file: definitions in order and the optional main term.
/// Definitions are already inlined into later definitions and the main term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program {
    pub defs: Vec<(String, Term)>,
    pub main: Option<Term>,
}

enum Scope {
    Term(TypedVar),
    Type(String),
}

struct Parser<'d> {
    toks: Vec<Spanned>,
    pos: usize,
    scope: Vec<Scope>,
    defs: &'d BTreeMap<String, Term>,
}

impl<'d> Parser<'d> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, kind: ParseErrorKind, message: String) -> ParseError {
        let s = &self.toks[self.pos];
        ParseError { kind, line: s.line, column: s.column, message }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        let found = self.peek().describe();
        self.error_here(ParseErrorKind::Syntax, alloc::format!("expected {}, found {}", wanted, found))
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn type_ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Tok::Ident(s) if s.starts_with(|c: char| c.is_uppercase()) => {
                let s = s.clone();
                self.next();
                Ok(s)
            }
            _ => Err(self.unexpected("a type variable")),
        }
    }

    fn term_ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Tok::Ident(s) if !s.starts_with(|c: char| c.is_uppercase()) => {
                let s = s.clone();
                self.next();
                Ok(s)
            }
            _ => Err(self.unexpected("a term variable")),
        }
    }

    // Types.

    fn ty(&mut self) -> Result<Type, ParseError> {
        if *self.peek() == Tok::Forall {
            return self.forall();
        }
        let dom = self.conj()?;
        if *self.peek() == Tok::Arrow {
            self.next();
            let cod = self.ty()?;
            Ok(Type::arrow(dom, cod))
        } else {
            Ok(dom)
        }
    }

    fn forall(&mut self) -> Result<Type, ParseError> {
        self.expect(Tok::Forall, "`forall`")?;
        let x = self.type_ident()?;
        self.expect(Tok::Dot, "`.`")?;
        let body = self.ty()?;
        Ok(Type::forall(x, body))
    }

    fn conj(&mut self) -> Result<Type, ParseError> {
        let mut acc = self.type_atom()?;
        while *self.peek() == Tok::Amp {
            self.next();
            let rhs = self.type_atom()?;
            acc = Type::conj(acc, rhs);
        }
        Ok(acc)
    }

    fn type_atom(&mut self) -> Result<Type, ParseError> {
        match self.peek() {
            Tok::LParen => {
                self.next();
                let t = self.ty()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Tok::Forall => self.forall(),
            _ => Ok(Type::Var(self.type_ident()?)),
        }
    }

    // Terms.

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.app()?;
        while *self.peek() == Tok::Plus {
            self.next();
            let rhs = self.app()?;
            acc = Term::sum(acc, rhs);
        }
        Ok(acc)
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Ident(s) if !s.starts_with(|c: char| c.is_uppercase()))
            || matches!(self.peek(), Tok::LParen | Tok::Pi)
    }

    fn starts_binder(&self) -> bool {
        matches!(self.peek(), Tok::Lambda | Tok::BigLambda)
    }

    fn app(&mut self) -> Result<Term, ParseError> {
        if self.starts_binder() {
            return self.binder();
        }
        if !self.starts_atom() {
            return Err(self.unexpected("a term"));
        }
        let mut acc = self.atom()?;
        loop {
            if self.starts_atom() {
                let arg = self.atom()?;
                acc = Term::app(acc, arg);
            } else if *self.peek() == Tok::LBrace {
                self.next();
                let t = self.ty()?;
                self.expect(Tok::RBrace, "`}`")?;
                acc = Term::tapp(acc, t);
            } else if self.starts_binder() {
                let arg = self.binder()?;
                return Ok(Term::app(acc, arg));
            } else {
                return Ok(acc);
            }
        }
    }

    fn binder(&mut self) -> Result<Term, ParseError> {
        match self.next() {
            Tok::Lambda => {
                let x = self.term_ident()?;
                self.expect(Tok::Colon, "`:`")?;
                let ty = self.ty()?;
                self.expect(Tok::Dot, "`.`")?;
                let v = TypedVar::new(x, ty);
                self.scope.push(Scope::Term(v.clone()));
                let body = self.term();
                self.scope.pop();
                Ok(Term::Lam(v, Box::new(body?)))
            }
            Tok::BigLambda => {
                let x = self.type_ident()?;
                self.expect(Tok::Dot, "`.`")?;
                self.scope.push(Scope::Type(x.clone()));
                let body = self.term();
                self.scope.pop();
                Ok(Term::TLam(x, Box::new(body?)))
            }
            _ => unreachable!("caller checked for a binder"),
        }
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.next();
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Tok::Pi => {
                self.next();
                self.expect(Tok::LBracket, "`[`")?;
                let target = self.ty()?;
                self.expect(Tok::RBracket, "`]`")?;
                self.expect(Tok::LParen, "`(`")?;
                let body = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Term::proj(target, body))
            }
            Tok::Ident(_) => {
                let at = self.pos;
                let name = self.term_ident()?;
                if *self.peek() == Tok::Colon {
                    self.next();
                    let ty = self.ty()?;
                    return Ok(Term::var(name, ty));
                }
                self.resolve_bare(&name, at)
            }
            _ => Err(self.unexpected("a term")),
        }
    }

    fn resolve_bare(&self, name: &str, at: usize) -> Result<Term, ParseError> {
        let mut crossed: Vec<&str> = Vec::new();
        for s in self.scope.iter().rev() {
            match s {
                Scope::Type(x) => crossed.push(x),
                Scope::Term(v) if v.name == name => {
                    let ftv = free_type_vars(&v.ty);
                    if let Some(x) = crossed.iter().find(|x| ftv.contains(**x)) {
                        let s = &self.toks[at];
                        return Err(ParseError {
                            kind: ParseErrorKind::Syntax,
                            line: s.line,
                            column: s.column,
                            message: alloc::format!(
                                "`{}` would refer to its binder through `/\\{}`; annotate the occurrence",
                                name, x
                            ),
                        });
                    }
                    return Ok(Term::Var(v.clone()));
                }
                Scope::Term(_) => {}
            }
        }
        if let Some(def) = self.defs.get(name) {
            return Ok(def.clone());
        }
        let s = &self.toks[at];
        Err(ParseError {
            kind: ParseErrorKind::Unbound,
            line: s.line,
            column: s.column,
            message: alloc::format!("unbound variable `{}` (annotate free variables as `{}:A`)", name, name),
        })
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }
}

pub fn parse_type(src: &str) -> Result<Type, ParseError> {
    let defs = BTreeMap::new();
    let mut p = Parser { toks: lex(src)?, pos: 0, scope: Vec::new(), defs: &defs };
    let t = p.ty()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let defs = BTreeMap::new();
    let mut p = Parser { toks: lex(src)?, pos: 0, scope: Vec::new(), defs: &defs };
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_program(src: &str) -> Result<Program, ParseError> {
    let toks = lex(src)?;
    let mut table: BTreeMap<String, Term> = BTreeMap::new();
    let mut defs = Vec::new();
    let mut pos = 0;
    loop {
        let mut p = Parser { toks: toks.clone(), pos, scope: Vec::new(), defs: &table };
        match p.peek() {
            Tok::Eof => return Ok(Program { defs, main: None }),
            Tok::Def => {
                p.next();
                let name = p.term_ident()?;
                p.expect(Tok::Eq, "`=`")?;
                let body = p.term()?;
                p.expect(Tok::Semi, "`;`")?;
                pos = p.pos;
                table.insert(name.clone(), body.clone());
                defs.push((name, body));
            }
            _ => {
                let main = p.term()?;
                p.finish()?;
                return Ok(Program { defs, main: Some(main) });
            }
        }
    }
}

// Printing.

const TY_ARROW: u8 = 0;
const TY_CONJ: u8 = 1;
const TY_ATOM: u8 = 2;

fn write_type(out: &mut String, t: &Type, level: u8) {
    match t {
        Type::Var(x) => out.push_str(x),
        Type::Arrow(a, b) => {
            let paren = level > TY_ARROW;
            if paren {
                out.push('(');
            }
            write_type(out, a, TY_CONJ);
            out.push_str(" -> ");
            write_type(out, b, TY_ARROW);
            if paren {
                out.push(')');
            }
        }
        Type::Conj(a, b) => {
            let paren = level > TY_CONJ;
            if paren {
                out.push('(');
            }
            write_type(out, a, TY_CONJ);
            out.push_str(" & ");
            write_type(out, b, TY_ATOM);
            if paren {
                out.push(')');
            }
        }
        Type::Forall(x, b) => {
            let paren = level > TY_ARROW;
            if paren {
                out.push('(');
            }
            let _ = write!(out, "forall {}. ", x);
            write_type(out, b, TY_ARROW);
            if paren {
                out.push(')');
            }
        }
    }
}

pub fn print_type(t: &Type) -> String {
    let mut out = String::new();
    write_type(&mut out, t, TY_ARROW);
    out
}

const TM_TOP: u8 = 0;
const TM_SUM: u8 = 1;
const TM_APP: u8 = 2;
const TM_ATOM: u8 = 3;

struct TermPrinter<'a> {
    out: String,
    scope: Vec<Scope2<'a>>,
}

enum Scope2<'a> {
    Term(&'a TypedVar),
    Type(&'a str),
}

impl<'a> TermPrinter<'a> {
    fn bare_ok(&self, v: &TypedVar) -> bool {
        let mut crossed: Vec<&str> = Vec::new();
        for s in self.scope.iter().rev() {
            match s {
                Scope2::Type(x) => crossed.push(x),
                Scope2::Term(b) if b.name == v.name => {
                    if b.ty != v.ty {
                        return false;
                    }
                    let ftv = free_type_vars(&b.ty);
                    return !crossed.iter().any(|x| ftv.contains(*x));
                }
                Scope2::Term(_) => {}
            }
        }
        false
    }

    fn go(&mut self, t: &'a Term, level: u8) {
        match t {
            Term::Var(v) => {
                if self.bare_ok(v) {
                    self.out.push_str(&v.name);
                } else {
                    let _ = write!(self.out, "{}:", v.name);
                    write_type(&mut self.out, &v.ty, TY_ARROW);
                }
            }
            Term::Lam(v, b) => {
                let paren = level > TM_TOP;
                if paren {
                    self.out.push('(');
                }
                let _ = write!(self.out, "\\{}:", v.name);
                write_type(&mut self.out, &v.ty, TY_ARROW);
                self.out.push_str(". ");
                self.scope.push(Scope2::Term(v));
                self.go(b, TM_TOP);
                self.scope.pop();
                if paren {
                    self.out.push(')');
                }
            }
            Term::TLam(x, b) => {
                let paren = level > TM_TOP;
                if paren {
                    self.out.push('(');
                }
                let _ = write!(self.out, "/\\{}. ", x);
                self.scope.push(Scope2::Type(x));
                self.go(b, TM_TOP);
                self.scope.pop();
                if paren {
                    self.out.push(')');
                }
            }
            Term::Sum(l, r) => {
                let paren = level > TM_SUM;
                if paren {
                    self.out.push('(');
                }
                self.go(l, TM_SUM);
                self.out.push_str(" + ");
                self.go(r, TM_APP);
                if paren {
                    self.out.push(')');
                }
            }
            Term::App(f, a) => {
                let paren = level > TM_APP;
                if paren {
                    self.out.push('(');
                }
                self.go(f, TM_APP);
                self.out.push(' ');
                self.go(a, TM_ATOM);
                if paren {
                    self.out.push(')');
                }
            }
            Term::TApp(f, ty) => {
                let paren = level > TM_APP;
                if paren {
                    self.out.push('(');
                }
                self.go(f, TM_APP);
                self.out.push_str(" {");
                write_type(&mut self.out, ty, TY_ARROW);
                self.out.push('}');
                if paren {
                    self.out.push(')');
                }
            }
            Term::Proj(ty, b) => {
                self.out.push_str("pi[");
                write_type(&mut self.out, ty, TY_ARROW);
                self.out.push_str("](");
                self.go(b, TM_TOP);
                self.out.push(')');
            }
        }
    }
}

pub fn print_term(t: &Term) -> String {
    let mut p = TermPrinter { out: String::new(), scope: Vec::new() };
    p.go(t, TM_TOP);
    p.out
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_type(self))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_term(self))
    }
}
