//! Compiles polynomials to closed combinator terms.
//!
//! A sequent is split as `[linear skeleton] usage`. The skeleton compiles
//! over `{B, I}` by repeatedly contracting a leaf pair of the bracketing;
//! the usage function is factored into transpositions, degeneracies and
//! faces, and each generator wraps the witness in `B^(i-1) C`, `B^(i-1) W`
//! or `B^(i-1) K` respectively. Lifts are folded in application order, so
//! the witness for `[[t]g1]g2` is built from the one for `[t]g1`.

use serde::Serialize;
use thiserror::Error;

use crate::comb::{self, apply, b_power, CombError, CombTerm, Prim, DEFAULT_FUEL};
use crate::finord::{self, Club, FinFun, Generator, GeneratorKind};
use crate::poly::{self, Bracketing, PolyError, PolyTerm, Sequent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompileError {
    #[error("usage {usage} is not in {requested}; the minimal club is {minimal}")]
    ClubViolation {
        requested: Club,
        minimal: Club,
        usage: FinFun,
    },
    #[error("arity-0 polynomials are not computable; declare at least one variable")]
    ArityZero,
    #[error("verification ran out of fuel after {steps} steps")]
    FuelExhausted { steps: usize },
    #[error("generator index {i} is out of range for arity {n}")]
    IndexOutOfRange { n: usize, i: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompileOptions {
    pub verify: bool,
    pub fuel: usize,
}

impl Default for CompileOptions {
    fn default() -> Self {
        CompileOptions {
            verify: true,
            fuel: DEFAULT_FUEL,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompileReport {
    #[serde(serialize_with = "as_display")]
    pub input: Sequent,
    /// Names applied to the compiled term, one per constant occurrence.
    pub constants: Vec<String>,
    pub club_used: Club,
    pub usage: FinFun,
    #[serde(serialize_with = "as_display")]
    pub skeleton: Bracketing,
    pub generator_chain: Vec<Generator>,
    #[serde(serialize_with = "as_display")]
    pub output: CombTerm,
    pub verified: bool,
    pub steps: usize,
}

fn as_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn leftmost_leaf_pair(b: &Bracketing) -> Option<(usize, Bracketing)> {
    // (1-based index of the pair's first leaf, bracketing with the pair contracted)
    fn go(b: &Bracketing, offset: usize) -> Option<(usize, Bracketing)> {
        match b {
            Bracketing::Leaf => None,
            Bracketing::Node(l, r) => {
                if **l == Bracketing::Leaf && **r == Bracketing::Leaf {
                    return Some((offset + 1, Bracketing::Leaf));
                }
                if let Some((i, l2)) = go(l, offset) {
                    return Some((i, Bracketing::node(l2, (**r).clone())));
                }
                go(r, offset + l.len()).map(|(i, r2)| (i, Bracketing::node((**l).clone(), r2)))
            }
        }
    }
    go(b, 0)
}

/// A `{B, I}` witness for `x1, ..., xm |- b(x1, ..., xm)`.
pub fn compile_bracketing(b: &Bracketing) -> CombTerm {
    match leftmost_leaf_pair(b) {
        None => Prim::I.into(),
        Some((i, contracted)) => apply(
            b_power(i - 1),
            [Prim::B.into(), compile_bracketing(&contracted)],
        ),
    }
}

/// Witness for `[f]τ_i^n` given a witness `a` for `f` of arity `n`.
pub fn lift_transposition(a: CombTerm, n: usize, i: usize) -> Result<CombTerm, CompileError> {
    if !(1 <= i && i < n) {
        return Err(CompileError::IndexOutOfRange { n, i });
    }
    Ok(apply(b_power(i - 1), [Prim::C.into(), a]))
}

/// Witness for `[f]δ_i^n` given a witness `a` for `f` of arity `n - 1`.
pub fn lift_face(a: CombTerm, n: usize, i: usize) -> Result<CombTerm, CompileError> {
    if n <= 1 {
        return Err(CompileError::ArityZero);
    }
    if !(1 <= i && i <= n) {
        return Err(CompileError::IndexOutOfRange { n, i });
    }
    Ok(apply(b_power(i - 1), [Prim::K.into(), a]))
}

/// Witness for `[f]σ_i^n` given a witness `a` for `f` of arity `n + 1`.
pub fn lift_degeneracy(a: CombTerm, n: usize, i: usize) -> Result<CombTerm, CompileError> {
    if !(1 <= i && i <= n) {
        return Err(CompileError::IndexOutOfRange { n, i });
    }
    Ok(apply(b_power(i - 1), [Prim::W.into(), a]))
}

/// Applies the lift matching the generator's kind.
pub fn lift(a: CombTerm, g: &Generator) -> Result<CombTerm, CompileError> {
    match g.kind() {
        GeneratorKind::Transposition => lift_transposition(a, g.n(), g.i()),
        GeneratorKind::Face => lift_face(a, g.n(), g.i()),
        GeneratorKind::Degeneracy => lift_degeneracy(a, g.n(), g.i()),
    }
}

/// Compiles a sequent under `club`, or under its minimal club when `None`.
pub fn compile(
    s: &Sequent,
    club: Option<Club>,
    opts: CompileOptions,
) -> Result<CompileReport, CompileError> {
    let (skeleton, usage, club_used, chain, output) = synthesize(s, club)?;
    let (verified, steps) = if opts.verify {
        let v = comb::verify(&output, s, opts.fuel).map_err(fuel_error)?;
        (v.holds, v.steps)
    } else {
        (false, 0)
    };
    Ok(CompileReport {
        input: s.clone(),
        constants: Vec::new(),
        club_used,
        usage,
        skeleton,
        generator_chain: chain,
        output,
        verified,
        steps,
    })
}

type Synthesis = (Bracketing, FinFun, Club, Vec<Generator>, CombTerm);

fn synthesize(s: &Sequent, club: Option<Club>) -> Result<Synthesis, CompileError> {
    if s.context_size() == 0 {
        return Err(CompileError::ArityZero);
    }
    let poly::UsageDecomposition { skeleton, usage } = poly::usage(s);
    let minimal = finord::minimal_club(&usage);
    let club_used = club.unwrap_or(minimal);
    let chain = finord::factor(&usage, club_used).map_err(|_| CompileError::ClubViolation {
        requested: club_used,
        minimal,
        usage: usage.clone(),
    })?;

    let mut witness = compile_bracketing(&skeleton);
    let mut arity = skeleton.len();
    for g in &chain {
        assert_eq!(g.dom(), arity, "generator {g} does not fit arity {arity}");
        witness = lift(witness, g)?;
        arity = g.cod();
    }
    assert_eq!(arity, s.context_size(), "generator fold ended at the wrong arity");
    Ok((skeleton, usage, club_used, chain, witness))
}

fn fuel_error(e: CombError) -> CompileError {
    match e {
        CombError::FuelExhausted { steps } => CompileError::FuelExhausted { steps },
        CombError::ArityZero => CompileError::ArityZero,
        CombError::Syntax { .. } => unreachable!("verification does not parse"),
    }
}

/// Parses and compiles sequent text.
///
/// With `constants` set, term identifiers missing from the context are
/// constants: each occurrence gets a fresh leading context variable, the
/// extended sequent is compiled, and the witness is applied to the
/// constants in order of occurrence. The extended usage must lie in the
/// requested club.
pub fn compile_source(
    text: &str,
    club: Option<Club>,
    opts: CompileOptions,
    constants: bool,
) -> Result<CompileReport, CompileError> {
    let surface = poly::parse_surface(text)?;
    if surface.context.is_empty() {
        return Err(CompileError::ArityZero);
    }
    if !constants {
        return compile(&surface.resolve()?, club, opts);
    }

    let arity = surface.context.len();
    let position = |name: &str| surface.context.iter().position(|c| c == name);
    let names: Vec<String> = surface
        .term
        .atoms()
        .into_iter()
        .filter(|(name, _)| position(name).is_none())
        .map(|(name, _)| name.to_string())
        .collect();
    let count = names.len();

    let mut seen = 0;
    let extended_term = surface.term.map_atoms::<_, PolyError>(
        &mut |name, _| {
            Ok(match position(name) {
                Some(k) => PolyTerm::Var(count + k + 1),
                None => {
                    seen += 1;
                    PolyTerm::Var(seen)
                }
            })
        },
        &PolyTerm::app,
    )?;
    let extended = Sequent::new(count + arity, extended_term)?;

    let (skeleton, usage, club_used, chain, witness) = synthesize(&extended, club)?;
    let output = apply(witness, names.iter().map(|n| CombTerm::sym(n.as_str())));

    let (verified, steps) = if opts.verify {
        let expected = surface.term.map_atoms::<_, PolyError>(
            &mut |name, _| {
                Ok(match position(name) {
                    Some(k) => comb::fresh_arg(k + 1),
                    None => CombTerm::sym(name),
                })
            },
            &CombTerm::app,
        )?;
        let v = comb::verify_against(&output, arity, &expected, opts.fuel).map_err(fuel_error)?;
        (v.holds, v.steps)
    } else {
        (false, 0)
    };

    Ok(CompileReport {
        input: extended,
        constants: names,
        club_used,
        usage,
        skeleton,
        generator_chain: chain,
        output,
        verified,
        steps,
    })
}
