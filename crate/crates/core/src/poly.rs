//! Polynomials over an applicative system: terms built from context
//! variables and binary application, read as sequents `x1, ..., xn |- t`.
//!
//! Besides substitution (multicategory composition) and the action `[t]a`
//! of a finite function on a sequent, the module decomposes every term as
//! a linear skeleton acted on by its usage function. The minimal club of
//! the usage function decides which variable discipline the term needs.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::finord::{self, Club, FinFun};
use crate::lex::{self, Cursor, TokenKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable '{name}' at byte {pos} is not declared in the context")]
    UndeclaredVariable { name: String, pos: usize },
    #[error("variable '{0}' is declared twice in the context")]
    DuplicateContextVariable(String),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("variable x{index} is outside a context of size {context}")]
    VariableOutOfRange { index: usize, context: usize },
}

/// A term over the single binary operation, with positional variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PolyTerm {
    Var(usize),
    App(Box<PolyTerm>, Box<PolyTerm>),
}

impl PolyTerm {
    pub fn app(f: PolyTerm, x: PolyTerm) -> PolyTerm {
        PolyTerm::App(Box::new(f), Box::new(x))
    }

    /// Variable indices in left-to-right order of occurrence.
    pub fn occurrences(&self) -> Vec<usize> {
        fn walk(t: &PolyTerm, out: &mut Vec<usize>) {
            match t {
                PolyTerm::Var(i) => out.push(*i),
                PolyTerm::App(f, x) => {
                    walk(f, out);
                    walk(x, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    pub fn depth(&self) -> usize {
        match self {
            PolyTerm::Var(_) => 0,
            PolyTerm::App(f, x) => 1 + f.depth().max(x.depth()),
        }
    }

    pub fn shape(&self) -> Bracketing {
        match self {
            PolyTerm::Var(_) => Bracketing::Leaf,
            PolyTerm::App(f, x) => Bracketing::node(f.shape(), x.shape()),
        }
    }

    fn rename(&self, f: &impl Fn(usize) -> PolyTerm) -> PolyTerm {
        match self {
            PolyTerm::Var(i) => f(*i),
            PolyTerm::App(g, x) => PolyTerm::app(g.rename(f), x.rename(f)),
        }
    }
}

impl fmt::Display for PolyTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyTerm::Var(i) => write!(f, "x{i}"),
            PolyTerm::App(g, x) => {
                write!(f, "{g} ")?;
                if matches!(**x, PolyTerm::App(..)) {
                    write!(f, "({x})")
                } else {
                    write!(f, "{x}")
                }
            }
        }
    }
}

/// `x1, ..., xn |- term`. Every variable of the term is declared; not every
/// declared variable needs to occur.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequent {
    context_size: usize,
    term: PolyTerm,
}

impl Sequent {
    pub fn new(context_size: usize, term: PolyTerm) -> Result<Self, PolyError> {
        if let Some(&index) = term
            .occurrences()
            .iter()
            .find(|&&i| i == 0 || i > context_size)
        {
            return Err(PolyError::VariableOutOfRange {
                index,
                context: context_size,
            });
        }
        Ok(Sequent { context_size, term })
    }

    pub fn context_size(&self) -> usize {
        self.context_size
    }

    pub fn term(&self) -> &PolyTerm {
        &self.term
    }

    pub fn into_term(self) -> PolyTerm {
        self.term
    }

    /// `x |- x`, the identity of the multicategory.
    pub fn identity() -> Sequent {
        Sequent {
            context_size: 1,
            term: PolyTerm::Var(1),
        }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.context_size {
            if i > 1 {
                f.write_str(", ")?;
            }
            write!(f, "x{i}")?;
        }
        if self.context_size > 0 {
            f.write_str(" ")?;
        }
        write!(f, "|- {}", self.term)
    }
}

impl FromStr for Sequent {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// A term whose atoms are still names, as written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceTerm {
    Atom { name: String, pos: usize },
    App(Box<SurfaceTerm>, Box<SurfaceTerm>),
}

impl SurfaceTerm {
    /// Atoms in left-to-right order.
    pub fn atoms(&self) -> Vec<(&str, usize)> {
        match self {
            SurfaceTerm::Atom { name, pos } => vec![(name.as_str(), *pos)],
            SurfaceTerm::App(f, x) => {
                let mut out = f.atoms();
                out.extend(x.atoms());
                out
            }
        }
    }

    /// Replaces each atom, visiting atoms left to right.
    pub fn map_atoms<T, E>(
        &self,
        leaf: &mut impl FnMut(&str, usize) -> Result<T, E>,
        node: &impl Fn(T, T) -> T,
    ) -> Result<T, E> {
        match self {
            SurfaceTerm::Atom { name, pos } => leaf(name, *pos),
            SurfaceTerm::App(f, x) => {
                let f = f.map_atoms(leaf, node)?;
                let x = x.map_atoms(leaf, node)?;
                Ok(node(f, x))
            }
        }
    }
}

/// A syntactically valid sequent whose term atoms are not yet resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceSequent {
    pub context: Vec<String>,
    pub term: SurfaceTerm,
}

impl SurfaceSequent {
    /// Resolves names to context positions.
    pub fn resolve(&self) -> Result<Sequent, PolyError> {
        let index: HashMap<&str, usize> = self
            .context
            .iter()
            .enumerate()
            .map(|(k, name)| (name.as_str(), k + 1))
            .collect();
        let term = self.term.map_atoms(
            &mut |name, pos| {
                index
                    .get(name)
                    .map(|&i| PolyTerm::Var(i))
                    .ok_or_else(|| PolyError::UndeclaredVariable {
                        name: name.to_string(),
                        pos,
                    })
            },
            &PolyTerm::app,
        )?;
        Sequent::new(self.context.len(), term)
    }
}

/// Parses `context |- term` without resolving term atoms.
pub fn parse_surface(text: &str) -> Result<SurfaceSequent, PolyError> {
    let syntax = |(pos, msg): (usize, String)| PolyError::Syntax { pos, msg };
    let tokens = lex::tokenize(text).map_err(syntax)?;
    let mut p = Cursor::new(&tokens, text.len());

    let mut context = Vec::new();
    if !p.eat(&TokenKind::Turnstile) {
        loop {
            let (pos, tok) = p.next_or_end();
            match tok {
                Some(TokenKind::Ident(name)) => {
                    if context.contains(name) {
                        return Err(PolyError::DuplicateContextVariable(name.clone()));
                    }
                    context.push(name.clone());
                }
                _ => return Err(syntax((pos, "expected a context variable".into()))),
            }
            if p.eat(&TokenKind::Turnstile) {
                break;
            }
            let pos = p.pos();
            if !p.eat(&TokenKind::Comma) {
                return Err(syntax((pos, "expected ',' or '|-'".into())));
            }
        }
    }

    let term = parse_term(&mut p)?;
    if let Some(tok) = p.peek() {
        return Err(syntax((tok.pos, format!("unexpected {}", tok.kind))));
    }
    Ok(SurfaceSequent { context, term })
}

fn parse_term(p: &mut Cursor<'_>) -> Result<SurfaceTerm, PolyError> {
    let mut acc = parse_atom(p)?;
    while p.at_atom_start() {
        let arg = parse_atom(p)?;
        acc = SurfaceTerm::App(Box::new(acc), Box::new(arg));
    }
    Ok(acc)
}

fn parse_atom(p: &mut Cursor<'_>) -> Result<SurfaceTerm, PolyError> {
    let (pos, tok) = p.next_or_end();
    match tok {
        Some(TokenKind::Ident(name)) => Ok(SurfaceTerm::Atom {
            name: name.clone(),
            pos,
        }),
        Some(TokenKind::LParen) => {
            let t = parse_term(p)?;
            p.expect_rparen()
                .map_err(|(pos, msg)| PolyError::Syntax { pos, msg })?;
            Ok(t)
        }
        Some(other) => Err(PolyError::Syntax {
            pos,
            msg: format!("expected a term, found {other}"),
        }),
        None => Err(PolyError::Syntax {
            pos,
            msg: "expected a term, found end of input".into(),
        }),
    }
}

/// Parses a sequent; the context order fixes the variable indices.
pub fn parse(text: &str) -> Result<Sequent, PolyError> {
    parse_surface(text)?.resolve()
}

/// Multicategory composition `outer[inners / x1..xn]`; the result's context
/// is the concatenation of the inner contexts.
pub fn substitute(outer: &Sequent, inners: &[Sequent]) -> Result<Sequent, PolyError> {
    if inners.len() != outer.context_size {
        return Err(PolyError::ArityMismatch {
            expected: outer.context_size,
            found: inners.len(),
        });
    }
    let mut offsets = Vec::with_capacity(inners.len());
    let mut total = 0;
    for s in inners {
        offsets.push(total);
        total += s.context_size;
    }
    let term = outer.term.rename(&|i| {
        let off = offsets[i - 1];
        inners[i - 1].term.rename(&|j| PolyTerm::Var(j + off))
    });
    Ok(Sequent {
        context_size: total,
        term,
    })
}

/// `[s]a`: variable `i` becomes variable `a(i)`.
pub fn act(s: &Sequent, a: &FinFun) -> Result<Sequent, PolyError> {
    if a.dom() != s.context_size {
        return Err(PolyError::ArityMismatch {
            expected: s.context_size,
            found: a.dom(),
        });
    }
    Ok(Sequent {
        context_size: a.cod(),
        term: s.term.rename(&|i| PolyTerm::Var(a.apply(i))),
    })
}

/// A binary tree shape with unlabelled leaves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Bracketing {
    Leaf,
    Node(Box<Bracketing>, Box<Bracketing>),
}

impl Bracketing {
    pub fn node(l: Bracketing, r: Bracketing) -> Bracketing {
        Bracketing::Node(Box::new(l), Box::new(r))
    }

    /// Number of leaves.
    pub fn len(&self) -> usize {
        match self {
            Bracketing::Leaf => 1,
            Bracketing::Node(l, r) => l.len() + r.len(),
        }
    }

    /// Always false; a bracketing has at least one leaf.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// `x1, ..., xm |- B(x1, ..., xm)`.
    pub fn linear_sequent(&self) -> Sequent {
        fn fill(b: &Bracketing, next: &mut usize) -> PolyTerm {
            match b {
                Bracketing::Leaf => {
                    *next += 1;
                    PolyTerm::Var(*next)
                }
                Bracketing::Node(l, r) => {
                    let l = fill(l, next);
                    PolyTerm::app(l, fill(r, next))
                }
            }
        }
        let mut next = 0;
        let term = fill(self, &mut next);
        Sequent {
            context_size: next,
            term,
        }
    }

    /// All bracketings with `len` leaves (a Catalan number of them).
    pub fn enumerate(len: usize) -> Vec<Bracketing> {
        let mut table: Vec<Vec<Bracketing>> = vec![Vec::new(), vec![Bracketing::Leaf]];
        for n in 2..=len {
            let mut here = Vec::new();
            for left in 1..n {
                for l in &table[left] {
                    for r in &table[n - left] {
                        here.push(Bracketing::node(l.clone(), r.clone()));
                    }
                }
            }
            table.push(here);
        }
        table.get(len).cloned().unwrap_or_default()
    }
}

impl fmt::Display for Bracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracketing::Leaf => f.write_str("□"),
            Bracketing::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

/// A term written as `[linear_sequent(skeleton)] usage`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageDecomposition {
    pub skeleton: Bracketing,
    pub usage: FinFun,
}

/// Splits a sequent into its shape and the map sending each variable
/// occurrence (left to right) to its context position.
pub fn usage(s: &Sequent) -> UsageDecomposition {
    let table = s.term.occurrences();
    UsageDecomposition {
        skeleton: s.term.shape(),
        usage: FinFun::new(s.context_size, &table).expect("sequent variables are in range"),
    }
}

/// The least club whose discipline admits the sequent.
pub fn minimal_club_of(s: &Sequent) -> Club {
    finord::minimal_club(&usage(s).usage)
}
