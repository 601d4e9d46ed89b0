//! Finite ordinals and the functions between them.
//!
//! A [`FinFun`] `m -> n` is a function `{1..m} -> {1..n}`. All public
//! interfaces are 1-based; the table is stored 0-based.
//!
//! The module also carries the eight clubs of interest (sub-categories of
//! finite functions closed under `+` and the wreath product), the three
//! families of generating maps (transpositions, degeneracies and faces) and
//! a canonical factorization of any function into those generators.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::comb::Prim;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinordError {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("codomain mismatch in copairing: expected {expected}, found {found}")]
    CodomainMismatch { expected: usize, found: usize },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("invalid generator {kind}({n},{i})")]
    InvalidGenerator { kind: GeneratorKind, n: usize, i: usize },
    #[error("table entry {entry} at position {position} is outside 1..={cod}")]
    EntryOutOfRange {
        position: usize,
        entry: usize,
        cod: usize,
    },
    #[error("{function} is not in {club}; its minimal club is {minimal}")]
    NotInClub {
        function: FinFun,
        club: Club,
        minimal: Club,
    },
    #[error("cannot parse finite function: {0}")]
    Parse(String),
}

/// A function between finite ordinals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinFun {
    cod: usize,
    // 0-based images
    table: Vec<usize>,
}

impl FinFun {
    /// Builds `table.len() -> cod` from 1-based images.
    pub fn new(cod: usize, table: &[usize]) -> Result<Self, FinordError> {
        let mut zero = Vec::with_capacity(table.len());
        for (position, &entry) in table.iter().enumerate() {
            if entry == 0 || entry > cod {
                return Err(FinordError::EntryOutOfRange {
                    position: position + 1,
                    entry,
                    cod,
                });
            }
            zero.push(entry - 1);
        }
        Ok(FinFun { cod, table: zero })
    }

    fn from_zero_based(cod: usize, table: Vec<usize>) -> Self {
        debug_assert!(table.iter().all(|&e| e < cod));
        FinFun { cod, table }
    }

    pub fn identity(n: usize) -> Self {
        FinFun::from_zero_based(n, (0..n).collect())
    }

    pub fn dom(&self) -> usize {
        self.table.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    /// Image of `x` (1-based). Panics if `x` is outside `1..=dom`.
    pub fn apply(&self, x: usize) -> usize {
        assert!(
            (1..=self.dom()).contains(&x),
            "{x} outside the domain of {self}"
        );
        self.table[x - 1] + 1
    }

    /// The 1-based table.
    pub fn table(&self) -> Vec<usize> {
        self.table.iter().map(|e| e + 1).collect()
    }

    /// `self ∘ f`: apply `f` first.
    pub fn after(&self, f: &FinFun) -> Result<FinFun, FinordError> {
        compose(self, f)
    }

    pub fn classify(&self) -> Classification {
        classify(self)
    }

    /// Every function `m -> n`, in lexicographic order of tables.
    pub fn all(m: usize, n: usize) -> Vec<FinFun> {
        if n == 0 {
            return if m == 0 { vec![FinFun::identity(0)] } else { vec![] };
        }
        let mut out = Vec::new();
        let mut table = vec![0; m];
        loop {
            out.push(FinFun::from_zero_based(n, table.clone()));
            // odometer increment, last position fastest
            let mut pos = m;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                table[pos] += 1;
                if table[pos] < n {
                    break;
                }
                table[pos] = 0;
            }
        }
    }
}

impl fmt::Display for FinFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}:[", self.dom(), self.cod)?;
        for (k, e) in self.table.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e + 1)?;
        }
        f.write_str("]")
    }
}

impl FromStr for FinFun {
    type Err = FinordError;

    /// Parses `m->n:[e1,...,em]`. Whitespace around tokens is tolerated.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: &str| FinordError::Parse(format!("{why} in {s:?}"));
        let (dom, rest) = s.split_once("->").ok_or_else(|| bad("missing '->'"))?;
        let (cod, rest) = rest.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let dom: usize = dom.trim().parse().map_err(|_| bad("bad domain"))?;
        let cod: usize = cod.trim().parse().map_err(|_| bad("bad codomain"))?;
        let body = rest
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("table must be bracketed"))?;
        let table = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|e| e.trim().parse::<usize>().map_err(|_| bad("bad entry")))
                .collect::<Result<Vec<_>, _>>()?
        };
        if table.len() != dom {
            return Err(FinordError::ArityMismatch {
                expected: dom,
                found: table.len(),
            });
        }
        FinFun::new(cod, &table)
    }
}

impl Serialize for FinFun {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("FinFun", 3)?;
        st.serialize_field("dom", &self.dom())?;
        st.serialize_field("cod", &self.cod)?;
        st.serialize_field("table", &self.table())?;
        st.end()
    }
}

pub fn identity(n: usize) -> FinFun {
    FinFun::identity(n)
}

/// `g ∘ f`, i.e. `f` first.
pub fn compose(g: &FinFun, f: &FinFun) -> Result<FinFun, FinordError> {
    if f.cod != g.dom() {
        return Err(FinordError::ArityMismatch {
            expected: g.dom(),
            found: f.cod,
        });
    }
    let table = f.table.iter().map(|&x| g.table[x]).collect();
    Ok(FinFun::from_zero_based(g.cod, table))
}

/// Ordinal sum `a + b`: `b` is stacked below `a`.
pub fn sum(a: &FinFun, b: &FinFun) -> FinFun {
    let mut table = a.table.clone();
    table.extend(b.table.iter().map(|&x| x + a.cod));
    FinFun::from_zero_based(a.cod + b.cod, table)
}

/// `a_1 + ... + a_n`; the empty sum is `identity(0)`.
pub fn sum_all<'a>(fs: impl IntoIterator<Item = &'a FinFun>) -> FinFun {
    fs.into_iter()
        .fold(FinFun::identity(0), |acc, f| sum(&acc, f))
}

/// The `j`-th coproduct injection `k_j -> k_1 + ... + k_n`.
pub fn injection(j: usize, ks: &[usize]) -> Result<FinFun, FinordError> {
    if j == 0 || j > ks.len() {
        return Err(FinordError::IndexOutOfRange {
            index: j,
            bound: ks.len(),
        });
    }
    let offset: usize = ks[..j - 1].iter().sum();
    let total: usize = ks.iter().sum();
    Ok(FinFun::from_zero_based(
        total,
        (offset..offset + ks[j - 1]).collect(),
    ))
}

/// Copairing `<f_1 | ... | f_n> : k_1 + ... + k_n -> cod`.
pub fn copair(fs: &[FinFun], cod: usize) -> Result<FinFun, FinordError> {
    let mut table = Vec::new();
    for f in fs {
        if f.cod != cod {
            return Err(FinordError::CodomainMismatch {
                expected: cod,
                found: f.cod,
            });
        }
        table.extend_from_slice(&f.table);
    }
    Ok(FinFun::from_zero_based(cod, table))
}

/// Wreath product `a ≀ (k_1, ..., k_n)`: the copairing of the injections
/// of summand `a(j)` over `j = 1..m`.
pub fn wreath(a: &FinFun, ks: &[usize]) -> Result<FinFun, FinordError> {
    if ks.len() != a.cod {
        return Err(FinordError::ArityMismatch {
            expected: a.cod,
            found: ks.len(),
        });
    }
    let total: usize = ks.iter().sum();
    let blocks = (1..=a.dom())
        .map(|j| injection(a.apply(j), ks))
        .collect::<Result<Vec<_>, _>>()?;
    copair(&blocks, total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorKind {
    Transposition,
    Degeneracy,
    Face,
}

impl GeneratorKind {
    fn letter(self) -> char {
        match self {
            GeneratorKind::Transposition => 't',
            GeneratorKind::Degeneracy => 's',
            GeneratorKind::Face => 'd',
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// One of `τ_i^n : n -> n`, `σ_i^n : n+1 -> n`, `δ_i^n : n-1 -> n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Generator {
    kind: GeneratorKind,
    n: usize,
    i: usize,
}

impl Generator {
    pub fn new(kind: GeneratorKind, n: usize, i: usize) -> Result<Self, FinordError> {
        let ok = match kind {
            GeneratorKind::Transposition => n > 1 && 1 <= i && i < n,
            GeneratorKind::Degeneracy | GeneratorKind::Face => n >= 1 && 1 <= i && i <= n,
        };
        if ok {
            Ok(Generator { kind, n, i })
        } else {
            Err(FinordError::InvalidGenerator { kind, n, i })
        }
    }

    pub fn transposition(n: usize, i: usize) -> Result<Self, FinordError> {
        Generator::new(GeneratorKind::Transposition, n, i)
    }

    pub fn degeneracy(n: usize, i: usize) -> Result<Self, FinordError> {
        Generator::new(GeneratorKind::Degeneracy, n, i)
    }

    pub fn face(n: usize, i: usize) -> Result<Self, FinordError> {
        Generator::new(GeneratorKind::Face, n, i)
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn dom(&self) -> usize {
        match self.kind {
            GeneratorKind::Transposition => self.n,
            GeneratorKind::Degeneracy => self.n + 1,
            GeneratorKind::Face => self.n - 1,
        }
    }

    pub fn cod(&self) -> usize {
        self.n
    }

    /// Every valid generator of `kind` whose domain and codomain are at most `max`.
    pub fn all_of_kind(kind: GeneratorKind, max: usize) -> Vec<Generator> {
        let mut out = Vec::new();
        for n in 1..=max {
            for i in 1..=n {
                if let Ok(g) = Generator::new(kind, n, i) {
                    if g.dom() <= max {
                        out.push(g);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.kind.letter(), self.n, self.i)
    }
}

impl FromStr for Generator {
    type Err = FinordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FinordError::Parse(format!("bad generator {s:?}"));
        let s = s.trim();
        let kind = match s.chars().next() {
            Some('t') => GeneratorKind::Transposition,
            Some('s') => GeneratorKind::Degeneracy,
            Some('d') => GeneratorKind::Face,
            _ => return Err(bad()),
        };
        let args = s[1..]
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (n, i) = args.split_once(',').ok_or_else(bad)?;
        let n = n.trim().parse().map_err(|_| bad())?;
        let i = i.trim().parse().map_err(|_| bad())?;
        Generator::new(kind, n, i)
    }
}

/// The function a generator denotes.
pub fn make_generator(g: Generator) -> FinFun {
    let (n, i) = (g.n, g.i);
    let table: Vec<usize> = match g.kind {
        GeneratorKind::Transposition => (1..=n)
            .map(|x| {
                if x == i {
                    x + 1
                } else if x == i + 1 {
                    x - 1
                } else {
                    x
                }
            })
            .collect(),
        GeneratorKind::Degeneracy => (1..=n + 1).map(|x| if x <= i { x } else { x - 1 }).collect(),
        GeneratorKind::Face => (1..n).map(|x| if x < i { x } else { x + 1 }).collect(),
    };
    FinFun::new(n, &table).expect("generator tables are in range")
}

/// Composite of generators listed in application order (first applied first).
pub fn compose_chain(dom: usize, chain: &[Generator]) -> Result<FinFun, FinordError> {
    chain
        .iter()
        .try_fold(FinFun::identity(dom), |acc, g| compose(&make_generator(*g), &acc))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub injective: bool,
    pub surjective: bool,
    pub monotone: bool,
    pub bijective: bool,
    pub identity: bool,
}

pub fn classify(f: &FinFun) -> Classification {
    let mut hit = vec![false; f.cod];
    let mut injective = true;
    for &e in &f.table {
        if hit[e] {
            injective = false;
        }
        hit[e] = true;
    }
    let surjective = hit.iter().all(|&h| h);
    let monotone = f.table.windows(2).all(|w| w[0] <= w[1]);
    let identity = f.dom() == f.cod && f.table.iter().enumerate().all(|(k, &e)| k == e);
    Classification {
        injective,
        surjective,
        monotone,
        bijective: injective && surjective,
        identity,
    }
}

/// The eight clubs, ordered by inclusion of their function classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Club {
    Id,
    Bij,
    Minj,
    Msrj,
    Inj,
    Srj,
    Mfun,
    Fun,
}

impl Club {
    pub const ALL: [Club; 8] = [
        Club::Id,
        Club::Bij,
        Club::Minj,
        Club::Msrj,
        Club::Inj,
        Club::Srj,
        Club::Mfun,
        Club::Fun,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Club::Id => "Id",
            Club::Bij => "Bij",
            Club::Minj => "Minj",
            Club::Msrj => "Msrj",
            Club::Inj => "Inj",
            Club::Srj => "Srj",
            Club::Mfun => "Mfun",
            Club::Fun => "Fun",
        }
    }

    // (monotone, injective, surjective) every member must satisfy
    fn requirements(self) -> (bool, bool, bool) {
        match self {
            Club::Id => (true, true, true),
            Club::Bij => (false, true, true),
            Club::Minj => (true, true, false),
            Club::Msrj => (true, false, true),
            Club::Inj => (false, true, false),
            Club::Srj => (false, false, true),
            Club::Mfun => (true, false, false),
            Club::Fun => (false, false, false),
        }
    }

    /// Inclusion of clubs.
    pub fn leq(self, other: Club) -> bool {
        let (m1, i1, s1) = self.requirements();
        let (m2, i2, s2) = other.requirements();
        (m1 || !m2) && (i1 || !i2) && (s1 || !s2)
    }

    pub fn contains(self, f: &FinFun) -> bool {
        contains(self, f)
    }

    /// The combinators whose existence characterizes completeness for this club.
    pub fn basis(self) -> &'static [Prim] {
        use Prim::*;
        match self {
            Club::Id => &[B, I],
            Club::Bij => &[B, C, I],
            Club::Minj => &[B, K, I],
            Club::Msrj => &[B, W, I],
            Club::Inj => &[B, C, K, I],
            Club::Srj => &[B, C, W, I],
            Club::Mfun => &[B, K, W, I],
            Club::Fun => &[B, C, K, W, I],
        }
    }

    /// Generator kinds the club is generated by (together with identities).
    pub fn generator_kinds(self) -> &'static [GeneratorKind] {
        use GeneratorKind::*;
        match self {
            Club::Id => &[],
            Club::Bij => &[Transposition],
            Club::Minj => &[Face],
            Club::Msrj => &[Degeneracy],
            Club::Inj => &[Transposition, Face],
            Club::Srj => &[Transposition, Degeneracy],
            Club::Mfun => &[Degeneracy, Face],
            Club::Fun => &[Transposition, Degeneracy, Face],
        }
    }

    pub fn allows(self, g: &Generator) -> bool {
        self.generator_kinds().contains(&g.kind)
    }
}

impl fmt::Display for Club {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Club {
    type Err = FinordError;

    /// Case-insensitive club name.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Club::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| FinordError::Parse(format!("unknown club {s:?}")))
    }
}

pub fn contains(c: Club, f: &FinFun) -> bool {
    let k = classify(f);
    match c {
        Club::Id => k.identity,
        Club::Bij => k.bijective,
        Club::Minj => k.monotone && k.injective,
        Club::Msrj => k.monotone && k.surjective,
        Club::Inj => k.injective,
        Club::Srj => k.surjective,
        Club::Mfun => k.monotone,
        Club::Fun => true,
    }
}

/// The least club containing `f`.
pub fn minimal_club(f: &FinFun) -> Club {
    let k = classify(f);
    let found = (k.monotone, k.injective, k.surjective);
    Club::ALL
        .into_iter()
        .find(|c| c.requirements() == found)
        .expect("every property triple names a club")
}

pub fn basis(c: Club) -> &'static [Prim] {
    c.basis()
}

/// Splits `f` as `mono ∘ perm`, where `perm` stably sorts the domain by image.
fn sort_split(f: &FinFun) -> (FinFun, FinFun) {
    let m = f.dom();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&x| f.table[x]);
    let mut rank = vec![0; m];
    for (r, &x) in order.iter().enumerate() {
        rank[x] = r;
    }
    let perm = FinFun::from_zero_based(m, rank);
    let mono = FinFun::from_zero_based(f.cod, order.iter().map(|&x| f.table[x]).collect());
    (perm, mono)
}

/// Adjacent transpositions, in application order, composing to `perm`.
fn bubble_transpositions(perm: &FinFun) -> Vec<Generator> {
    let m = perm.dom();
    let mut arr = perm.table.clone();
    let mut out = Vec::new();
    // Each swap at positions (k, k+1) precomposes with τ_k; the swaps undo
    // perm, so their sequence is perm's factorization in application order.
    for pass in 0..m {
        let mut swapped = false;
        for k in 0..m.saturating_sub(pass + 1) {
            if arr[k] > arr[k + 1] {
                arr.swap(k, k + 1);
                out.push(Generator::transposition(m, k + 1).expect("k + 1 < m"));
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    out
}

/// Degeneracies then faces composing to a monotone `mono`.
fn monotone_generators(mono: &FinFun) -> Vec<Generator> {
    let mut out = Vec::new();
    // epi part: merge the leftmost equal adjacent pair until injective
    let mut current = mono.table.clone();
    while let Some(k) = current.windows(2).position(|w| w[0] == w[1]) {
        let len = current.len();
        out.push(Generator::degeneracy(len - 1, k + 1).expect("1 <= k + 1 <= len - 1"));
        current.remove(k + 1);
    }
    // mono part: skip the missing codomain points in increasing order
    let mut size = current.len();
    let missing = (0..mono.cod).filter(|v| !current.contains(v));
    for v in missing {
        size += 1;
        out.push(Generator::face(size, v + 1).expect("missing point is in range"));
    }
    out
}

/// Factors `f` into generators allowed by `club`, in application order.
///
/// The scheme is `f = mono ∘ perm` with `perm` a stable sort by image
/// (bubble-sorted into adjacent transpositions) and `mono` split into
/// degeneracies followed by faces.
pub fn factor(f: &FinFun, club: Club) -> Result<Vec<Generator>, FinordError> {
    if !contains(club, f) {
        return Err(FinordError::NotInClub {
            function: f.clone(),
            club,
            minimal: minimal_club(f),
        });
    }
    let (perm, mono) = sort_split(f);
    let mut chain = bubble_transpositions(&perm);
    chain.extend(monotone_generators(&mono));
    debug_assert!(chain.iter().all(|g| club.allows(g)));
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ff(cod: usize, t: &[usize]) -> FinFun {
        FinFun::new(cod, t).unwrap()
    }

    #[test]
    fn identities() {
        assert_eq!(identity(0).table(), Vec::<usize>::new());
        assert_eq!(identity(3).table(), vec![1, 2, 3]);
        assert_eq!(identity(1).table(), vec![1]);
    }

    #[test]
    fn rejects_out_of_range_entries() {
        assert!(matches!(
            FinFun::new(2, &[1, 3]),
            Err(FinordError::EntryOutOfRange { position: 2, .. })
        ));
        assert!(FinFun::new(2, &[0]).is_err());
    }

    #[test]
    fn composition() {
        let swap = ff(2, &[2, 1]);
        assert_eq!(compose(&identity(2), &swap).unwrap(), swap);
        assert_eq!(compose(&ff(1, &[1, 1]), &swap).unwrap(), ff(1, &[1, 1]));
        assert_eq!(
            compose(&ff(2, &[1, 1, 2]), &ff(3, &[3, 1, 2])).unwrap(),
            ff(2, &[2, 1, 1])
        );
        assert_eq!(
            compose(&swap, &identity(3)),
            Err(FinordError::ArityMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn sums() {
        let f = ff(3, &[3, 1]);
        assert_eq!(sum(&f, &identity(0)), f);
        assert_eq!(sum(&ff(2, &[2, 1]), &identity(1)), ff(3, &[2, 1, 3]));
        let face = ff(1, &[]);
        assert_eq!(sum(&face, &ff(1, &[1, 1])), ff(2, &[2, 2]));
    }

    #[test]
    fn injections() {
        assert_eq!(injection(1, &[3]).unwrap(), identity(3));
        assert_eq!(injection(2, &[2, 3]).unwrap(), ff(5, &[3, 4, 5]));
        assert_eq!(injection(1, &[0, 2]).unwrap(), ff(2, &[]));
        assert!(matches!(
            injection(3, &[1, 1]),
            Err(FinordError::IndexOutOfRange { index: 3, bound: 2 })
        ));
        assert!(injection(0, &[1]).is_err());
    }

    #[test]
    fn copairings() {
        let f = ff(2, &[2, 1]);
        assert_eq!(copair(std::slice::from_ref(&f), 2).unwrap(), f);
        assert_eq!(
            copair(&[ff(2, &[2, 1]), ff(2, &[1])], 2).unwrap(),
            ff(2, &[2, 1, 1])
        );
        assert_eq!(copair(&[], 4).unwrap(), ff(4, &[]));
        assert!(matches!(
            copair(&[ff(2, &[1]), ff(3, &[1])], 2),
            Err(FinordError::CodomainMismatch { .. })
        ));
    }

    #[test]
    fn copair_after_injection_recovers_component() {
        let fs = [ff(3, &[2, 1]), ff(3, &[]), ff(3, &[3, 3, 1])];
        let ks: Vec<usize> = fs.iter().map(FinFun::dom).collect();
        let c = copair(&fs, 3).unwrap();
        for (j, f) in fs.iter().enumerate() {
            assert_eq!(&compose(&c, &injection(j + 1, &ks).unwrap()).unwrap(), f);
        }
    }

    #[test]
    fn wreaths() {
        assert_eq!(wreath(&identity(3), &[2, 0, 1]).unwrap(), identity(3));
        assert_eq!(
            wreath(&ff(2, &[2, 1]), &[2, 3]).unwrap(),
            ff(5, &[3, 4, 5, 1, 2])
        );
        assert_eq!(wreath(&ff(1, &[1, 1]), &[2]).unwrap(), ff(2, &[1, 2, 1, 2]));
        assert!(matches!(
            wreath(&ff(2, &[2, 1]), &[1]),
            Err(FinordError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn wreath_of_the_four_point_example() {
        // a : 4 -> 4 thickened by (3,2,3,2) is 9 -> 10 for a = [1,3,4,4]
        let a = ff(4, &[1, 3, 4, 4]);
        let w = wreath(&a, &[3, 2, 3, 2]).unwrap();
        assert_eq!((w.dom(), w.cod()), (3 + 3 + 2 + 2, 10));
    }

    #[test]
    fn generators() {
        assert_eq!(
            make_generator(Generator::transposition(3, 1).unwrap()),
            ff(3, &[2, 1, 3])
        );
        assert_eq!(
            make_generator(Generator::degeneracy(2, 1).unwrap()),
            ff(2, &[1, 1, 2])
        );
        assert_eq!(make_generator(Generator::face(3, 2).unwrap()), ff(3, &[1, 3]));
        assert_eq!(make_generator(Generator::face(1, 1).unwrap()), ff(1, &[]));
        assert!(Generator::transposition(2, 2).is_err());
        assert!(Generator::transposition(1, 1).is_err());
        assert!(Generator::degeneracy(2, 3).is_err());
        assert!(Generator::face(0, 1).is_err());
        assert!(Generator::face(3, 0).is_err());
    }

    #[test]
    fn generator_text() {
        let g = Generator::degeneracy(2, 1).unwrap();
        assert_eq!(g.to_string(), "s(2,1)");
        assert_eq!("s(2,1)".parse::<Generator>().unwrap(), g);
        assert!("x(1,1)".parse::<Generator>().is_err());
    }

    #[test]
    fn classification() {
        let all = Classification {
            injective: true,
            surjective: true,
            monotone: true,
            bijective: true,
            identity: true,
        };
        assert_eq!(classify(&identity(3)), all);
        assert_eq!(
            classify(&ff(2, &[2, 1])),
            Classification {
                monotone: false,
                identity: false,
                ..all
            }
        );
        assert_eq!(
            classify(&ff(1, &[1, 1])),
            Classification {
                injective: false,
                bijective: false,
                identity: false,
                ..all
            }
        );
    }

    #[test]
    fn minimal_clubs() {
        assert_eq!(minimal_club(&identity(4)), Club::Id);
        assert_eq!(minimal_club(&identity(0)), Club::Id);
        assert_eq!(minimal_club(&ff(2, &[2, 1])), Club::Bij);
        assert_eq!(minimal_club(&ff(1, &[1, 1])), Club::Msrj);
        assert_eq!(minimal_club(&ff(3, &[1, 3])), Club::Minj);
        assert_eq!(minimal_club(&ff(2, &[2, 1, 1])), Club::Srj);
        assert_eq!(minimal_club(&ff(3, &[3, 1])), Club::Inj);
        assert_eq!(minimal_club(&ff(2, &[1, 1])), Club::Mfun);
        assert_eq!(minimal_club(&ff(3, &[2, 1, 1])), Club::Fun);
    }

    #[test]
    fn membership() {
        assert!(contains(Club::Fun, &ff(3, &[2, 1, 1])));
        assert!(!contains(Club::Minj, &ff(1, &[1, 1])));
        assert!(contains(Club::Srj, &ff(2, &[2, 1, 1])));
    }

    #[test]
    fn lattice_is_inclusion() {
        use Club::*;
        let above = |c: Club| -> Vec<Club> { Club::ALL.into_iter().filter(|d| c.leq(*d)).collect() };
        assert_eq!(above(Id), Club::ALL.to_vec());
        assert_eq!(above(Bij), vec![Bij, Inj, Srj, Fun]);
        assert_eq!(above(Minj), vec![Minj, Inj, Mfun, Fun]);
        assert_eq!(above(Msrj), vec![Msrj, Srj, Mfun, Fun]);
        assert_eq!(above(Inj), vec![Inj, Fun]);
        assert_eq!(above(Srj), vec![Srj, Fun]);
        assert_eq!(above(Mfun), vec![Mfun, Fun]);
        assert_eq!(above(Fun), vec![Fun]);
    }

    #[test]
    fn bases() {
        use Prim::*;
        assert_eq!(basis(Club::Bij), &[B, C, I]);
        assert_eq!(basis(Club::Id), &[B, I]);
        assert_eq!(basis(Club::Mfun), &[B, K, W, I]);
        assert_eq!(basis(Club::Fun), &[B, C, K, W, I]);
    }

    #[test]
    fn factorizations() {
        assert_eq!(factor(&identity(3), Club::Id).unwrap(), vec![]);
        assert_eq!(
            factor(&ff(2, &[2, 1, 1]), Club::Srj).unwrap(),
            vec![
                Generator::transposition(3, 1).unwrap(),
                Generator::transposition(3, 2).unwrap(),
                Generator::degeneracy(2, 1).unwrap(),
            ]
        );
        match factor(&ff(1, &[1, 1]), Club::Bij) {
            Err(FinordError::NotInClub { minimal, .. }) => assert_eq!(minimal, Club::Msrj),
            other => panic!("expected NotInClub, got {other:?}"),
        }
    }

    #[test]
    fn factor_of_sparse_monotone_map() {
        let f = ff(4, &[2, 2, 4]);
        let chain = factor(&f, Club::Mfun).unwrap();
        assert_eq!(compose_chain(3, &chain).unwrap(), f);
        assert!(chain.iter().all(|g| g.kind() != GeneratorKind::Transposition));
    }

    #[test]
    fn text_format() {
        let f: FinFun = "3->2:[2,1,1]".parse().unwrap();
        assert_eq!(f, ff(2, &[2, 1, 1]));
        assert_eq!(f.to_string(), "3->2:[2,1,1]");
        assert_eq!("0->2:[]".parse::<FinFun>().unwrap().to_string(), "0->2:[]");
        assert!("2->2:[1]".parse::<FinFun>().is_err());
        assert!("2->1:[1,2]".parse::<FinFun>().is_err());
        assert!("2-2:[1,1]".parse::<FinFun>().is_err());
    }

    #[test]
    fn enumerates_all_functions() {
        assert_eq!(FinFun::all(2, 3).len(), 9);
        assert_eq!(FinFun::all(0, 3).len(), 1);
        assert_eq!(FinFun::all(3, 0).len(), 0);
        assert_eq!(FinFun::all(0, 0), vec![identity(0)]);
    }
}
