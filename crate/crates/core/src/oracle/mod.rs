//! Ground truth: the brute-force orientability verifier, position decoding,
//! a tiny exhaustive search and seeded mutation testing.

mod search;

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::ConstructionRecipe;
use crate::error::{Error, Result};
use crate::tuples::{self, code_space, cyclic_window_codes, Symbol, ZkTuple};

pub use search::{exhaustive_max_period, SearchLimits, SearchOutcome, EXHAUSTIVE_SPACE_CAP};

/// Why a candidate is not an orientable sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// The period is shorter than the window length.
    TooShort { period: usize, n: usize },
    /// Windows at `first` and `second` are equal.
    Duplicate { first: usize, second: usize },
    /// The window at `second` is the reverse of the window at `first`.
    /// `first == second` means the window is a palindrome.
    Reversal { first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::TooShort { period, n } => {
                write!(f, "period {period} is shorter than the window length {n}")
            }
            Violation::Duplicate { first, second } => {
                write!(f, "duplicate window: positions {first} and {second} read the same")
            }
            Violation::Reversal { first, second } if first == second => {
                write!(f, "self-reversal: the window at position {first} is a palindrome")
            }
            Violation::Reversal { first, second } => write!(
                f,
                "reversal collision: the window at position {second} is the reverse of the window at position {first}"
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    Rejected(Violation),
}

impl Verdict {
    pub fn is_accepted(self) -> bool {
        matches!(self, Verdict::Accepted)
    }
}

fn check_window_space(k: u32, n: usize) -> Result<u64> {
    tuples::check_alphabet(k)?;
    if n < 2 {
        return Err(Error::Domain(format!("window length must be at least 2, got {n}")));
    }
    code_space(k, n)
        .ok_or_else(|| Error::Domain(format!("{k}-ary {n}-windows do not fit a 64-bit code")))
}

/// Lookup from window code to first position, dense when the code space is
/// small relative to the period.
enum WindowIndex {
    Dense(Vec<u32>),
    Sparse(HashMap<u64, usize>),
}

impl WindowIndex {
    const EMPTY: u32 = u32::MAX;

    fn new(space: u64, m: usize) -> Self {
        let dense_limit = (8 * m as u64).clamp(1 << 22, 1 << 26);
        if space <= dense_limit && m < u32::MAX as usize {
            WindowIndex::Dense(vec![Self::EMPTY; space as usize])
        } else {
            WindowIndex::Sparse(HashMap::with_capacity(m))
        }
    }

    fn get(&self, code: u64) -> Option<usize> {
        match self {
            WindowIndex::Dense(v) => match v[code as usize] {
                Self::EMPTY => None,
                i => Some(i as usize),
            },
            WindowIndex::Sparse(h) => h.get(&code).copied(),
        }
    }

    fn insert(&mut self, code: u64, pos: usize) {
        match self {
            WindowIndex::Dense(v) => v[code as usize] = pos as u32,
            WindowIndex::Sparse(h) => {
                h.insert(code, pos);
            }
        }
    }
}

/// Checks every cyclic `n`-window of one period. Windows are scanned in
/// position order and the first violation found is reported.
pub fn verify(symbols: &[Symbol], n: usize, k: u32) -> Result<Verdict> {
    let space = check_window_space(k, n)?;
    if let Some(&bad) = symbols.iter().find(|&&s| s as u32 >= k) {
        return Err(Error::SymbolOutOfRange {
            symbol: bad as u32,
            k,
        });
    }
    let m = symbols.len();
    if m < n {
        return Ok(Verdict::Rejected(Violation::TooShort { period: m, n }));
    }
    let mut index = WindowIndex::new(space, m);
    for (i, (fwd, rev)) in cyclic_window_codes(symbols, k, n).into_iter().enumerate() {
        if let Some(j) = index.get(fwd) {
            return Ok(Verdict::Rejected(Violation::Duplicate { first: j, second: i }));
        }
        index.insert(fwd, i);
        if let Some(j) = index.get(rev) {
            return Ok(Verdict::Rejected(Violation::Reversal { first: j, second: i }));
        }
    }
    Ok(Verdict::Accepted)
}

/// One period of a verified orientable sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientableSequence {
    k: u32,
    n: usize,
    symbols: Vec<Symbol>,
    recipe: Option<ConstructionRecipe>,
}

impl OrientableSequence {
    /// Verifies `symbols` and wraps them; a rejected candidate is an
    /// [`Error::NotOrientable`].
    pub fn new(symbols: Vec<Symbol>, n: usize, k: u32) -> Result<Self> {
        match verify(&symbols, n, k)? {
            Verdict::Accepted => Ok(Self {
                k,
                n,
                symbols,
                recipe: None,
            }),
            Verdict::Rejected(v) => Err(Error::NotOrientable(v)),
        }
    }

    pub fn with_recipe(mut self, recipe: ConstructionRecipe) -> Self {
        self.recipe = Some(recipe);
        self
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn period(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn recipe(&self) -> Option<&ConstructionRecipe> {
        self.recipe.as_ref()
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Reverse,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Reverse => "reverse",
        })
    }
}

/// Where a window sits in the sequence. `position` is the index of the
/// window's first symbol in forward order; a reverse reading covers the
/// same positions read from `position + n - 1` down to `position`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocateResult {
    Found { position: usize, direction: Direction },
    NotFound,
}

pub fn locate(seq: &OrientableSequence, window: &ZkTuple) -> Result<LocateResult> {
    window.ensure_alphabet(seq.k)?;
    if window.len() != seq.n {
        return Err(Error::LengthMismatch {
            expected: seq.n,
            found: window.len(),
        });
    }
    let target = tuples::encode(window.symbols(), seq.k);
    for (i, (fwd, rev)) in cyclic_window_codes(&seq.symbols, seq.k, seq.n)
        .into_iter()
        .enumerate()
    {
        if fwd == target {
            return Ok(LocateResult::Found {
                position: i,
                direction: Direction::Forward,
            });
        }
        if rev == target {
            return Ok(LocateResult::Found {
                position: i,
                direction: Direction::Reverse,
            });
        }
    }
    Ok(LocateResult::NotFound)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationOutcome {
    pub index: usize,
    pub from: Symbol,
    pub to: Symbol,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MutationReport {
    pub outcomes: Vec<MutationOutcome>,
}

impl MutationReport {
    pub fn rejected(&self) -> usize {
        self.outcomes
            .iter()
            .filter(|o| !o.verdict.is_accepted())
            .count()
    }

    /// Fraction of mutants rejected; `0.0` for an empty report.
    pub fn rejected_fraction(&self) -> f64 {
        if self.outcomes.is_empty() {
            0.0
        } else {
            self.rejected() as f64 / self.outcomes.len() as f64
        }
    }
}

/// Applies `trials` independent single-symbol substitutions, each to a
/// fresh copy of the sequence, and verifies every mutant.
pub fn mutation_test(seq: &OrientableSequence, trials: usize, seed: u64) -> Result<MutationReport> {
    let m = seq.period();
    if m < 2 {
        return Err(Error::Precondition(format!(
            "mutation testing needs period >= 2, got {m}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut work = seq.symbols.clone();
    let mut outcomes = Vec::with_capacity(trials);
    for _ in 0..trials {
        let index = rng.gen_range(0..m);
        let from = work[index];
        let delta = rng.gen_range(1..seq.k);
        let to = ((from as u32 + delta) % seq.k) as Symbol;
        work[index] = to;
        let verdict = verify(&work, seq.n, seq.k)?;
        work[index] = from;
        outcomes.push(MutationOutcome {
            index,
            from,
            to,
            verdict,
        });
    }
    Ok(MutationReport { outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn digits(s: &str) -> Vec<Symbol> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| c.to_digit(10).unwrap() as Symbol)
            .collect()
    }

    const OS_5_3: &str = "00123 40112 23344 00213 24304 21431 03142 03204 10224 41133";
    const OS_4_3: &str = "00112012230130231233";

    #[test]
    fn accepts_known_sequences() {
        assert_eq!(verify(&digits(OS_5_3), 3, 5).unwrap(), Verdict::Accepted);
        assert_eq!(verify(&digits(OS_4_3), 3, 4).unwrap(), Verdict::Accepted);
        assert_eq!(
            verify(&digits("012012120201012220112001112200"), 4, 3).unwrap(),
            Verdict::Accepted
        );
    }

    #[test]
    fn reports_violations() {
        // windows 01, 10, 00: window 1 is the reverse of window 0
        assert_eq!(
            verify(&digits("010"), 2, 3).unwrap(),
            Verdict::Rejected(Violation::Reversal { first: 0, second: 1 })
        );
        assert_eq!(
            verify(&digits("0102"), 2, 3).unwrap(),
            Verdict::Rejected(Violation::Reversal { first: 0, second: 1 })
        );
        assert_eq!(
            verify(&digits("012012"), 3, 3).unwrap(),
            Verdict::Rejected(Violation::Duplicate { first: 0, second: 3 })
        );
        assert_eq!(
            verify(&digits("0012"), 2, 3).unwrap(),
            Verdict::Rejected(Violation::Reversal { first: 0, second: 0 })
        );
        assert_eq!(
            verify(&digits("01"), 3, 3).unwrap(),
            Verdict::Rejected(Violation::TooShort { period: 2, n: 3 })
        );
        assert!(matches!(
            verify(&digits("013"), 2, 3),
            Err(Error::SymbolOutOfRange { symbol: 3, k: 3 })
        ));
        assert!(matches!(verify(&digits("012"), 1, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn sparse_index_matches_dense() {
        // a 5^20 code space forces the hash-map index
        let mut s = digits(OS_5_3);
        assert_eq!(verify(&s, 20, 5).unwrap(), Verdict::Accepted);
        s.extend_from_slice(&digits(OS_5_3));
        assert_eq!(
            verify(&s, 20, 5).unwrap(),
            Verdict::Rejected(Violation::Duplicate { first: 0, second: 50 })
        );
    }

    #[test]
    fn locate_examples() {
        let seq = OrientableSequence::new(digits(OS_5_3), 3, 5).unwrap();
        let w = |s: &str| ZkTuple::from_digits(5, s).unwrap();
        assert_eq!(
            locate(&seq, &w("001")).unwrap(),
            LocateResult::Found { position: 0, direction: Direction::Forward }
        );
        assert_eq!(
            locate(&seq, &w("100")).unwrap(),
            LocateResult::Found { position: 0, direction: Direction::Reverse }
        );
        assert_eq!(locate(&seq, &w("000")).unwrap(), LocateResult::NotFound);
        assert!(matches!(
            locate(&seq, &w("0011")),
            Err(Error::LengthMismatch { expected: 3, found: 4 })
        ));
    }

    #[test]
    fn locate_every_window_both_ways() {
        let seq = OrientableSequence::new(digits(OS_4_3), 3, 4).unwrap();
        let s = seq.symbols();
        for i in 0..seq.period() {
            let w: Vec<Symbol> = (0..3).map(|j| s[(i + j) % s.len()]).collect();
            let w = ZkTuple::new(4, w).unwrap();
            assert_eq!(
                locate(&seq, &w).unwrap(),
                LocateResult::Found { position: i, direction: Direction::Forward }
            );
            assert_eq!(
                locate(&seq, &w.reverse()).unwrap(),
                LocateResult::Found { position: i, direction: Direction::Reverse }
            );
        }
    }

    #[test]
    fn rejecting_constructor() {
        let err = OrientableSequence::new(digits("010"), 2, 3).unwrap_err();
        assert!(matches!(err, Error::NotOrientable(Violation::Reversal { .. })));
    }

    #[test]
    fn mutation_reports() {
        let seq = OrientableSequence::new(digits(OS_5_3), 3, 5).unwrap();
        let report = mutation_test(&seq, 100, 7).unwrap();
        assert_eq!(report.outcomes.len(), 100);
        assert!(report.outcomes.iter().all(|o| o.from != o.to));
        assert_eq!(mutation_test(&seq, 100, 7).unwrap(), report);
        for o in &report.outcomes {
            let mut s = seq.symbols().to_vec();
            s[o.index] = o.to;
            assert_eq!(verify(&s, 3, 5).unwrap(), o.verdict);
        }
        assert!(mutation_test(&seq, 0, 7).unwrap().outcomes.is_empty());

        let tiny = OrientableSequence { k: 3, n: 2, symbols: vec![0], recipe: None };
        assert!(matches!(mutation_test(&tiny, 5, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn optimal_period_has_no_slack() {
        // a period-20 sequence at the 20-edge bound rejects any single flip
        let seq = OrientableSequence::new(digits(OS_4_3), 3, 4).unwrap();
        let mut s = seq.symbols().to_vec();
        s[5] = (s[5] + 1) % 4;
        assert!(!verify(&s, 3, 4).unwrap().is_accepted());
    }
}
