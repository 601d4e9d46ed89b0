//! Combinator terms over `B`, `C`, `K`, `W`, `I` and free symbols, with a
//! fuel-bounded leftmost-outermost reduction engine.
//!
//! The rewrite rules are the defining equations of the primitives:
//!
//! ```text
//! B x y z -> x (y z)     C x y z -> x z y     K x y -> x
//! W x y   -> x y y       I x     -> x
//! ```

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::poly::{PolyTerm, Sequent};

pub const DEFAULT_FUEL: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("fuel exhausted after {steps} reduction steps")]
    FuelExhausted { steps: usize },
    #[error("a polynomial of arity 0 has no computability witness")]
    ArityZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Prim {
    B,
    C,
    K,
    W,
    I,
}

impl Prim {
    pub const ALL: [Prim; 5] = [Prim::B, Prim::C, Prim::K, Prim::W, Prim::I];

    /// Number of arguments a redex needs.
    pub fn arity(self) -> usize {
        match self {
            Prim::B | Prim::C => 3,
            Prim::K | Prim::W => 2,
            Prim::I => 1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Prim::B => 'B',
            Prim::C => 'C',
            Prim::K => 'K',
            Prim::W => 'W',
            Prim::I => 'I',
        }
    }

    fn from_name(name: &str) -> Option<Prim> {
        Prim::ALL.into_iter().find(|p| {
            let mut buf = [0; 4];
            p.letter().encode_utf8(&mut buf) == name
        })
    }

    /// Contracts `self args[0] .. args[arity-1]`.
    fn contract(self, args: &[CombTerm]) -> CombTerm {
        let a = |k: usize| args[k].clone();
        match self {
            Prim::B => CombTerm::app(a(0), CombTerm::app(a(1), a(2))),
            Prim::C => CombTerm::app(CombTerm::app(a(0), a(2)), a(1)),
            Prim::K => a(0),
            Prim::W => CombTerm::app(CombTerm::app(a(0), a(1)), a(1)),
            Prim::I => a(0),
        }
    }
}

impl fmt::Display for Prim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CombTerm {
    Prim(Prim),
    Sym(String),
    App(Box<CombTerm>, Box<CombTerm>),
}

impl CombTerm {
    pub fn app(f: CombTerm, x: CombTerm) -> CombTerm {
        CombTerm::App(Box::new(f), Box::new(x))
    }

    pub fn sym(name: impl Into<String>) -> CombTerm {
        let name = name.into();
        assert!(!name.is_empty(), "free symbols need a name");
        CombTerm::Sym(name)
    }

    /// Head and arguments of the application spine.
    pub fn spine(&self) -> (&CombTerm, Vec<&CombTerm>) {
        let mut head = self;
        let mut args = Vec::new();
        while let CombTerm::App(f, x) = head {
            args.push(&**x);
            head = f;
        }
        args.reverse();
        (head, args)
    }

    pub fn size(&self) -> usize {
        match self {
            CombTerm::App(f, x) => f.size() + x.size(),
            _ => 1,
        }
    }

    /// Primitives occurring in the term, sorted and deduplicated.
    pub fn prims(&self) -> Vec<Prim> {
        fn walk(t: &CombTerm, out: &mut Vec<Prim>) {
            match t {
                CombTerm::Prim(p) => out.push(*p),
                CombTerm::Sym(_) => {}
                CombTerm::App(f, x) => {
                    walk(f, out);
                    walk(x, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out.sort();
        out.dedup();
        out
    }

    pub fn is_closed(&self) -> bool {
        match self {
            CombTerm::Prim(_) => true,
            CombTerm::Sym(_) => false,
            CombTerm::App(f, x) => f.is_closed() && x.is_closed(),
        }
    }

    pub fn is_normal(&self) -> bool {
        step(self).is_none()
    }
}

impl From<Prim> for CombTerm {
    fn from(p: Prim) -> Self {
        CombTerm::Prim(p)
    }
}

impl fmt::Display for CombTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CombTerm::Prim(p) => write!(f, "{p}"),
            CombTerm::Sym(s) => f.write_str(s),
            CombTerm::App(g, x) => {
                write!(f, "{g} ")?;
                if matches!(**x, CombTerm::App(..)) {
                    write!(f, "({x})")
                } else {
                    write!(f, "{x}")
                }
            }
        }
    }
}

impl FromStr for CombTerm {
    type Err = CombError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Parses juxtaposition with parentheses. Single uppercase `B C K W I` are
/// primitives; any other identifier is a free symbol.
pub fn parse(text: &str) -> Result<CombTerm, CombError> {
    let tokens = crate::lex::tokenize(text).map_err(|(pos, msg)| CombError::Syntax { pos, msg })?;
    let mut p = crate::lex::Cursor::new(&tokens, text.len());
    let t = parse_term(&mut p)?;
    if let Some(tok) = p.peek() {
        return Err(CombError::Syntax {
            pos: tok.pos,
            msg: format!("unexpected {}", tok.kind),
        });
    }
    Ok(t)
}

fn parse_term(p: &mut crate::lex::Cursor<'_>) -> Result<CombTerm, CombError> {
    let mut acc = parse_atom(p)?;
    while p.at_atom_start() {
        let arg = parse_atom(p)?;
        acc = CombTerm::app(acc, arg);
    }
    Ok(acc)
}

fn parse_atom(p: &mut crate::lex::Cursor<'_>) -> Result<CombTerm, CombError> {
    use crate::lex::TokenKind;
    let (pos, kind) = p.next_or_end();
    match kind {
        Some(TokenKind::Ident(name)) => Ok(match Prim::from_name(name) {
            Some(prim) => CombTerm::Prim(prim),
            None => CombTerm::Sym(name.clone()),
        }),
        Some(TokenKind::LParen) => {
            let t = parse_term(p)?;
            p.expect_rparen().map_err(|(pos, msg)| CombError::Syntax { pos, msg })?;
            Ok(t)
        }
        Some(other) => Err(CombError::Syntax {
            pos,
            msg: format!("expected a term, found {other}"),
        }),
        None => Err(CombError::Syntax {
            pos,
            msg: "expected a term, found end of input".into(),
        }),
    }
}

/// Left-nested application: `apply(t, [x, y]) = (t x) y`.
pub fn apply(t: CombTerm, args: impl IntoIterator<Item = CombTerm>) -> CombTerm {
    args.into_iter().fold(t, CombTerm::app)
}

/// `B^0 = I`, `B^1 = B`, `B^(n+1) = B B (B^n)`.
pub fn b_power(n: usize) -> CombTerm {
    match n {
        0 => Prim::I.into(),
        1 => Prim::B.into(),
        _ => CombTerm::app(
            CombTerm::app(Prim::B.into(), Prim::B.into()),
            b_power(n - 1),
        ),
    }
}

/// One leftmost-outermost contraction, or `None` for a normal form.
pub fn step(t: &CombTerm) -> Option<CombTerm> {
    let (head, args) = t.spine();
    if let CombTerm::Prim(p) = head {
        let k = p.arity();
        if args.len() >= k {
            let first: Vec<CombTerm> = args[..k].iter().map(|a| (*a).clone()).collect();
            let reduct = p.contract(&first);
            return Some(apply(reduct, args[k..].iter().map(|a| (*a).clone())));
        }
    }
    for (idx, arg) in args.iter().enumerate() {
        if let Some(reduced) = step(arg) {
            let rebuilt = args
                .iter()
                .enumerate()
                .map(|(j, a)| if j == idx { reduced.clone() } else { (*a).clone() });
            return Some(apply(head.clone(), rebuilt));
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReductionStatus {
    Normal,
    FuelExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub term: CombTerm,
    pub steps: usize,
    pub status: ReductionStatus,
}

/// Steps until a normal form is reached or `fuel` steps have been taken.
pub fn normalize(t: &CombTerm, fuel: usize) -> ReductionResult {
    let mut term = t.clone();
    let mut steps = 0;
    while steps < fuel {
        match step(&term) {
            Some(next) => {
                term = next;
                steps += 1;
            }
            None => {
                return ReductionResult {
                    term,
                    steps,
                    status: ReductionStatus::Normal,
                }
            }
        }
    }
    let status = if term.is_normal() {
        ReductionStatus::Normal
    } else {
        ReductionStatus::FuelExhausted
    };
    ReductionResult { term, steps, status }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub holds: bool,
    pub steps: usize,
    pub normal_form: CombTerm,
}

/// Fresh symbol standing for the `i`-th argument during verification. The
/// `$` keeps it disjoint from every parseable identifier.
pub fn fresh_arg(i: usize) -> CombTerm {
    CombTerm::Sym(format!("${i}"))
}

/// The polynomial's term with `Var i` read as [`fresh_arg`]`(i)`.
pub fn expected_image(t: &PolyTerm) -> CombTerm {
    match t {
        PolyTerm::Var(i) => fresh_arg(*i),
        PolyTerm::App(f, x) => CombTerm::app(expected_image(f), expected_image(x)),
    }
}

/// Checks `candidate v1 .. vn` reduces to `expected`.
pub fn verify_against(
    candidate: &CombTerm,
    arity: usize,
    expected: &CombTerm,
    fuel: usize,
) -> Result<Verification, CombError> {
    if arity == 0 {
        return Err(CombError::ArityZero);
    }
    let applied = apply(candidate.clone(), (1..=arity).map(fresh_arg));
    let r = normalize(&applied, fuel);
    if r.status == ReductionStatus::FuelExhausted {
        return Err(CombError::FuelExhausted { steps: r.steps });
    }
    Ok(Verification {
        holds: &r.term == expected,
        steps: r.steps,
        normal_form: r.term,
    })
}

/// Checks that `candidate x1 .. xn` equals the sequent's term by reduction.
pub fn verify(candidate: &CombTerm, s: &Sequent, fuel: usize) -> Result<Verification, CombError> {
    verify_against(candidate, s.context_size(), &expected_image(s.term()), fuel)
}
