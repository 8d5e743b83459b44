//! Words over `Z_k`: predicates, transforms, pseudoweight and tuple counting.
//!
//! Every predicate exists in two forms: a free function over a raw symbol
//! slice (used by the enumerators, which never allocate per tuple) and a
//! method on [`ZkTuple`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A residue modulo `k`. Alphabets are capped at 65536 symbols.
pub type Symbol = u16;

/// Largest alphabet representable with [`Symbol`].
pub const MAX_ALPHABET: u32 = 1 << 16;

/// Default cap on the number of tuples a brute-force enumeration may visit.
pub const DEFAULT_ENUMERATION_CAP: u128 = 10_000_000;

pub(crate) fn check_alphabet(k: u32) -> Result<()> {
    if (2..=MAX_ALPHABET).contains(&k) {
        Ok(())
    } else {
        Err(Error::InvalidAlphabet(k))
    }
}

/// `k^e` in 128-bit arithmetic, failing instead of wrapping.
pub fn checked_pow(k: u32, e: usize) -> Result<u128> {
    let e = u32::try_from(e).map_err(|_| Error::Domain(format!("exponent {e} too large")))?;
    (k as u128)
        .checked_pow(e)
        .ok_or_else(|| Error::Domain(format!("{k}^{e} overflows 128-bit arithmetic")))
}

/// Size of the code space for `len`-tuples over `Z_k`, if it fits in a `u64`.
pub fn code_space(k: u32, len: usize) -> Option<u64> {
    let e = u32::try_from(len).ok()?;
    (k as u64).checked_pow(e)
}

/// Big-endian base-`k` encoding. Lexicographic order on tuples coincides
/// with numeric order on codes. The caller guarantees the code fits.
#[inline]
pub fn encode(symbols: &[Symbol], k: u32) -> u64 {
    symbols
        .iter()
        .fold(0u64, |acc, &s| acc * k as u64 + s as u64)
}

/// Inverse of [`encode`]; fills `out` (whose length fixes the tuple length).
#[inline]
pub fn decode_into(mut code: u64, k: u32, out: &mut [Symbol]) {
    let k = k as u64;
    for slot in out.iter_mut().rev() {
        *slot = (code % k) as Symbol;
        code /= k;
    }
}

/// Code of the reversed tuple, computed digit by digit.
#[inline]
pub fn reverse_code(mut code: u64, k: u32, len: usize) -> u64 {
    let k = k as u64;
    let mut out = 0;
    for _ in 0..len {
        out = out * k + code % k;
        code /= k;
    }
    out
}

/// Code of `-u^R` for the tuple `u` with the given code.
#[inline]
pub fn negated_reverse_code(mut code: u64, k: u32, len: usize) -> u64 {
    let k = k as u64;
    let mut out = 0;
    for _ in 0..len {
        let d = code % k;
        out = out * k + if d == 0 { 0 } else { k - d };
        code /= k;
    }
    out
}

/// Codes of the `m` cyclic length-`n` windows of a period of length `m`,
/// paired with the codes of their reversals. The caller checks `k^n` fits.
pub fn cyclic_window_codes(symbols: &[Symbol], k: u32, n: usize) -> Vec<(u64, u64)> {
    let m = symbols.len();
    if m == 0 || n == 0 {
        return Vec::new();
    }
    let kk = k as u64;
    let top = kk.pow(n as u32 - 1);
    let mut fwd = 0u64;
    let mut rev = 0u64;
    for j in 0..n {
        let s = symbols[j % m] as u64;
        fwd = fwd * kk + s;
        rev += s * kk.pow(j as u32);
    }
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        out.push((fwd, rev));
        let incoming = symbols[(i + n) % m] as u64;
        fwd = (fwd % top) * kk + incoming;
        rev = rev / kk + incoming * top;
    }
    out
}

pub fn is_uniform(symbols: &[Symbol]) -> bool {
    symbols.windows(2).all(|w| w[0] == w[1])
}

pub fn is_alternating(symbols: &[Symbol]) -> bool {
    if symbols.len() < 2 || is_uniform(symbols) {
        return false;
    }
    symbols.iter().skip(2).enumerate().all(|(i, &s)| s == symbols[i])
}

pub fn is_symmetric(symbols: &[Symbol]) -> bool {
    symbols.iter().eq(symbols.iter().rev())
}

/// Prefix of length `len - 1` is a palindrome. Lengths 1 and 2 are always
/// left-semi-symmetric (empty and single-symbol prefixes).
pub fn is_left_semi_symmetric(symbols: &[Symbol]) -> bool {
    match symbols.len() {
        0 => true,
        len => is_symmetric(&symbols[..len - 1]),
    }
}

pub fn is_right_semi_symmetric(symbols: &[Symbol]) -> bool {
    match symbols.len() {
        0 => true,
        _ => is_symmetric(&symbols[1..]),
    }
}

/// `2·f(u)`: `2u` for a nonzero residue, `k` for zero.
#[inline]
pub fn doubled_symbol_weight(s: Symbol, k: u32) -> u64 {
    if s == 0 {
        k as u64
    } else {
        2 * s as u64
    }
}

pub fn doubled_pseudoweight_of(symbols: &[Symbol], k: u32) -> u64 {
    symbols.iter().map(|&s| doubled_symbol_weight(s, k)).sum()
}

/// Twice the pseudoweight of a tuple. Doubling keeps the half-integer
/// weight of the zero symbol (for odd `k`) exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubledPseudoweight(pub u64);

impl DoubledPseudoweight {
    pub fn value(self) -> u64 {
        self.0
    }

    /// The pseudoweight itself, for display.
    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for DoubledPseudoweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}.5", self.0 / 2)
        }
    }
}

/// A nonempty word over `Z_k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZkTuple {
    k: u32,
    symbols: Vec<Symbol>,
}

impl ZkTuple {
    pub fn new(k: u32, symbols: Vec<Symbol>) -> Result<Self> {
        check_alphabet(k)?;
        if symbols.is_empty() {
            return Err(Error::LengthMismatch {
                expected: 1,
                found: 0,
            });
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s as u32 >= k) {
            return Err(Error::SymbolOutOfRange {
                symbol: bad as u32,
                k,
            });
        }
        Ok(Self { k, symbols })
    }

    /// Convenience constructor from any integer slice.
    pub fn from_slice<T: Copy + Into<u64>>(k: u32, symbols: &[T]) -> Result<Self> {
        let mut out = Vec::with_capacity(symbols.len());
        for &s in symbols {
            let s: u64 = s.into();
            if s >= k as u64 {
                return Err(Error::SymbolOutOfRange {
                    symbol: u32::try_from(s).unwrap_or(u32::MAX),
                    k,
                });
            }
            out.push(s as Symbol);
        }
        Self::new(k, out)
    }

    /// Parses a digit string such as `"0120"` (only meaningful for `k <= 10`).
    pub fn from_digits(k: u32, digits: &str) -> Result<Self> {
        let mut out = Vec::with_capacity(digits.len());
        for c in digits.chars() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| Error::Domain(format!("`{c}` is not a decimal digit")))?;
            out.push(d as Symbol);
        }
        Self::from_slice(k, &out)
    }

    pub(crate) fn from_code(k: u32, len: usize, code: u64) -> Self {
        let mut symbols = vec![0; len];
        decode_into(code, k, &mut symbols);
        Self { k, symbols }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn code(&self) -> Option<u64> {
        code_space(self.k, self.len()).map(|_| encode(&self.symbols, self.k))
    }

    pub fn reverse(&self) -> Self {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Self { k: self.k, symbols }
    }

    pub fn negate(&self) -> Self {
        let k = self.k;
        let symbols = self
            .symbols
            .iter()
            .map(|&s| if s == 0 { 0 } else { (k - s as u32) as Symbol })
            .collect();
        Self { k, symbols }
    }

    pub fn is_uniform(&self) -> bool {
        is_uniform(&self.symbols)
    }

    pub fn is_alternating(&self) -> bool {
        is_alternating(&self.symbols)
    }

    pub fn is_symmetric(&self) -> bool {
        is_symmetric(&self.symbols)
    }

    pub fn is_left_semi_symmetric(&self) -> bool {
        is_left_semi_symmetric(&self.symbols)
    }

    pub fn is_right_semi_symmetric(&self) -> bool {
        is_right_semi_symmetric(&self.symbols)
    }

    pub fn doubled_pseudoweight(&self) -> DoubledPseudoweight {
        DoubledPseudoweight(doubled_pseudoweight_of(&self.symbols, self.k))
    }

    pub(crate) fn ensure_alphabet(&self, k: u32) -> Result<()> {
        if self.k == k {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                expected: k,
                found: self.k,
            })
        }
    }
}

impl fmt::Display for ZkTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k <= 10 {
            for s in &self.symbols {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// The tuple classes counted in closed form, plus the raw predicates they
/// are built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TupleKind {
    Symmetric,
    Asymmetric,
    Uniform,
    Alternating,
    LeftSemiSymmetric,
    RightSemiSymmetric,
    SymmetricNonUniform,
    NonUniformNonAlternatingSymmetric,
    NonUniformLeftSemiSymmetric,
    NonUniformNonAlternatingLeftSemiSymmetric,
}

impl TupleKind {
    pub const ALL: [TupleKind; 10] = [
        TupleKind::Symmetric,
        TupleKind::Asymmetric,
        TupleKind::Uniform,
        TupleKind::Alternating,
        TupleKind::LeftSemiSymmetric,
        TupleKind::RightSemiSymmetric,
        TupleKind::SymmetricNonUniform,
        TupleKind::NonUniformNonAlternatingSymmetric,
        TupleKind::NonUniformLeftSemiSymmetric,
        TupleKind::NonUniformNonAlternatingLeftSemiSymmetric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TupleKind::Symmetric => "symmetric",
            TupleKind::Asymmetric => "asymmetric",
            TupleKind::Uniform => "uniform",
            TupleKind::Alternating => "alternating",
            TupleKind::LeftSemiSymmetric => "left-semi-symmetric",
            TupleKind::RightSemiSymmetric => "right-semi-symmetric",
            TupleKind::SymmetricNonUniform => "symmetric-non-uniform",
            TupleKind::NonUniformNonAlternatingSymmetric => "non-uniform-non-alternating-symmetric",
            TupleKind::NonUniformLeftSemiSymmetric => "non-uniform-left-semi-symmetric",
            TupleKind::NonUniformNonAlternatingLeftSemiSymmetric => {
                "non-uniform-non-alternating-left-semi-symmetric"
            }
        }
    }

    pub fn matches(self, t: &[Symbol]) -> bool {
        match self {
            TupleKind::Symmetric => is_symmetric(t),
            TupleKind::Asymmetric => !is_symmetric(t),
            TupleKind::Uniform => is_uniform(t),
            TupleKind::Alternating => is_alternating(t),
            TupleKind::LeftSemiSymmetric => is_left_semi_symmetric(t),
            TupleKind::RightSemiSymmetric => is_right_semi_symmetric(t),
            TupleKind::SymmetricNonUniform => is_symmetric(t) && !is_uniform(t),
            TupleKind::NonUniformNonAlternatingSymmetric => {
                is_symmetric(t) && !is_uniform(t) && !is_alternating(t)
            }
            TupleKind::NonUniformLeftSemiSymmetric => {
                is_left_semi_symmetric(t) && !is_uniform(t)
            }
            TupleKind::NonUniformNonAlternatingLeftSemiSymmetric => {
                is_left_semi_symmetric(t) && !is_uniform(t) && !is_alternating(t)
            }
        }
    }
}

impl fmt::Display for TupleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TupleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        TupleKind::ALL
            .into_iter()
            .find(|kind| kind.name() == norm)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

/// Number of `k`-ary `n`-tuples of the given kind.
///
/// Closed forms hold for `n >= 3`; shorter lengths are counted by
/// enumeration, which is trivially cheap there.
pub fn count_tuples(kind: TupleKind, k: u32, n: usize) -> Result<u128> {
    check_alphabet(k)?;
    if n == 0 {
        return Err(Error::Domain("tuple length must be at least 1".into()));
    }
    if n < 3 {
        return enumerate_count(kind, k, n);
    }
    let kk = k as u128;
    let odd = n % 2 == 1;
    let count = match kind {
        TupleKind::Symmetric => checked_pow(k, n.div_ceil(2))?,
        TupleKind::Asymmetric => checked_pow(k, n)? - checked_pow(k, n.div_ceil(2))?,
        TupleKind::Uniform => kk,
        TupleKind::Alternating => kk * (kk - 1),
        TupleKind::LeftSemiSymmetric | TupleKind::RightSemiSymmetric => {
            checked_pow(k, (n + 1).div_ceil(2))?
        }
        TupleKind::SymmetricNonUniform => checked_pow(k, n.div_ceil(2))? - kk,
        TupleKind::NonUniformNonAlternatingSymmetric => {
            if odd {
                checked_pow(k, n.div_ceil(2))? - kk * kk
            } else {
                checked_pow(k, n / 2)? - kk
            }
        }
        TupleKind::NonUniformLeftSemiSymmetric => checked_pow(k, (n + 1).div_ceil(2))? - kk,
        TupleKind::NonUniformNonAlternatingLeftSemiSymmetric => {
            if odd {
                checked_pow(k, n.div_ceil(2))? - kk
            } else {
                checked_pow(k, (n + 2) / 2)? - kk * kk
            }
        }
    };
    Ok(count)
}

/// Brute-force count over all `k^n` tuples, under the default cap.
pub fn enumerate_count(kind: TupleKind, k: u32, n: usize) -> Result<u128> {
    enumerate_count_capped(kind, k, n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_count_capped(kind: TupleKind, k: u32, n: usize, cap: u128) -> Result<u128> {
    let mut count = 0u128;
    for_each_tuple(k, n, cap, |t| {
        if kind.matches(t) {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Visits every `k`-ary `n`-tuple in lexicographic order.
pub fn for_each_tuple<F: FnMut(&[Symbol])>(k: u32, n: usize, cap: u128, mut visit: F) -> Result<()> {
    check_alphabet(k)?;
    if n == 0 {
        return Err(Error::Domain("tuple length must be at least 1".into()));
    }
    let total = checked_pow(k, n)?;
    if total > cap {
        return Err(Error::CapExceeded {
            what: "tuple enumeration",
            needed: total,
            cap,
        });
    }
    let top = (k - 1) as Symbol;
    let mut buf = vec![0 as Symbol; n];
    loop {
        visit(&buf);
        // odometer increment from the right
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if buf[i] < top {
                buf[i] += 1;
                break;
            }
            buf[i] = 0;
        }
    }
}

/// Distribution of doubled pseudoweights over all `k`-ary `n`-tuples,
/// indexed by the doubled weight. Built by convolving the single-symbol
/// distribution `n` times.
pub fn doubled_pseudoweight_distribution(k: u32, n: usize) -> Result<Vec<u128>> {
    check_alphabet(k)?;
    let max_symbol = (2 * (k as usize - 1)).max(k as usize);
    let mut dist = vec![0u128; 1];
    dist[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; dist.len() + max_symbol];
        for (w, &c) in dist.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for s in 0..k {
                next[w + doubled_symbol_weight(s as Symbol, k) as usize] += c;
            }
        }
        dist = next;
    }
    Ok(dist)
}

/// Number of `k`-ary `n`-tuples whose doubled pseudoweight equals `s2`.
pub fn count_by_doubled_pseudoweight(k: u32, n: usize, s2: u64) -> Result<u128> {
    if n == 0 {
        return Err(Error::Domain("tuple length must be at least 1".into()));
    }
    let dist = doubled_pseudoweight_distribution(k, n)?;
    Ok(usize::try_from(s2)
        .ok()
        .and_then(|i| dist.get(i).copied())
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(k: u32, s: &[u16]) -> ZkTuple {
        ZkTuple::from_slice(k, s).unwrap()
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(t(3, &[0, 1, 2]).reverse(), t(3, &[2, 1, 0]));
        assert_eq!(t(5, &[1, 1]).reverse(), t(5, &[1, 1]));
        assert_eq!(t(5, &[0, 0, 1, 2, 3]).reverse(), t(5, &[3, 2, 1, 0, 0]));
    }

    #[test]
    fn negate_examples() {
        assert_eq!(t(4, &[0, 1, 2]).negate(), t(4, &[0, 3, 2]));
        assert_eq!(t(7, &[0, 0]).negate(), t(7, &[0, 0]));
        assert_eq!(t(3, &[1, 2]).negate(), t(3, &[2, 1]));
    }

    #[test]
    fn predicates() {
        assert!(t(3, &[2, 2, 2]).is_uniform());
        assert!(!t(3, &[0, 1]).is_uniform());
        assert!(t(7, &[5]).is_uniform());

        assert!(t(3, &[0, 1, 0, 1]).is_alternating());
        assert!(!t(4, &[3, 3, 3]).is_alternating());
        assert!(!t(3, &[0, 1, 0, 2]).is_alternating());
        assert!(!t(3, &[1]).is_alternating());

        assert!(t(3, &[0, 1, 0]).is_symmetric());
        assert!(!t(3, &[0, 1, 1]).is_symmetric());
        assert!(t(3, &[2]).is_symmetric());

        assert!(t(3, &[0, 1, 0, 2]).is_left_semi_symmetric());
        assert!(!t(3, &[0, 1, 2, 2]).is_left_semi_symmetric());
        assert!(t(3, &[1, 1, 1]).is_left_semi_symmetric());
        assert!(t(3, &[0, 1]).is_left_semi_symmetric());

        assert!(t(3, &[2, 0, 1, 0]).is_right_semi_symmetric());
        assert!(!t(3, &[2, 0, 1, 2]).is_right_semi_symmetric());
        assert!(t(3, &[1, 1, 1]).is_right_semi_symmetric());
        assert!(t(3, &[2, 1]).is_right_semi_symmetric());
    }

    #[test]
    fn pseudoweight_examples() {
        assert_eq!(t(3, &[0, 1, 1, 2]).doubled_pseudoweight().value(), 11);
        assert_eq!(t(3, &[0, 1, 1, 2]).doubled_pseudoweight().to_string(), "5.5");
        assert_eq!(t(3, &[0, 0, 0]).doubled_pseudoweight().value(), 9);
        assert_eq!(t(4, &[1, 1]).doubled_pseudoweight().value(), 4);
    }

    #[test]
    fn rejects_bad_tuples() {
        assert_eq!(
            ZkTuple::from_slice(3, &[0u16, 3]),
            Err(Error::SymbolOutOfRange { symbol: 3, k: 3 })
        );
        assert!(ZkTuple::new(1, vec![0]).is_err());
        assert!(ZkTuple::new(3, vec![]).is_err());
        assert!(t(3, &[0]).ensure_alphabet(4).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_tuples(TupleKind::Symmetric, 3, 3).unwrap(), 9);
        assert_eq!(
            count_tuples(TupleKind::NonUniformNonAlternatingLeftSemiSymmetric, 3, 4).unwrap(),
            18
        );
        assert_eq!(count_tuples(TupleKind::Alternating, 5, 4).unwrap(), 20);
        assert_eq!(enumerate_count(TupleKind::Symmetric, 2, 4).unwrap(), 4);
        assert_eq!(enumerate_count(TupleKind::Uniform, 5, 3).unwrap(), 5);
        assert_eq!(enumerate_count(TupleKind::LeftSemiSymmetric, 3, 3).unwrap(), 9);
    }

    #[test]
    fn short_lengths_fall_back_to_enumeration() {
        // 2-tuples: symmetric ones are exactly the uniform ones
        assert_eq!(count_tuples(TupleKind::SymmetricNonUniform, 5, 2).unwrap(), 0);
        assert_eq!(count_tuples(TupleKind::Uniform, 4, 1).unwrap(), 4);
        assert_eq!(count_tuples(TupleKind::Alternating, 4, 1).unwrap(), 0);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let err = enumerate_count_capped(TupleKind::Uniform, 10, 8, 1000).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("left_semi_symmetric".parse::<TupleKind>().unwrap(), TupleKind::LeftSemiSymmetric);
        for kind in TupleKind::ALL {
            assert_eq!(kind.name().parse::<TupleKind>().unwrap(), kind);
        }
        assert!(matches!("palindromic".parse::<TupleKind>(), Err(Error::UnknownKind(_))));
    }

    #[test]
    fn pseudoweight_count_examples() {
        assert_eq!(count_by_doubled_pseudoweight(3, 3, 9).unwrap(), 7);
        assert_eq!(count_by_doubled_pseudoweight(3, 2, 6).unwrap(), 3);
        assert_eq!(count_by_doubled_pseudoweight(4, 1, 20).unwrap(), 0);
    }

    #[test]
    fn pseudoweight_counts_match_enumeration() {
        for k in 2..=5u32 {
            for n in 1..=6usize {
                let mut brute = std::collections::HashMap::<u64, u128>::new();
                for_each_tuple(k, n, u128::MAX, |t| {
                    *brute.entry(doubled_pseudoweight_of(t, k)).or_default() += 1;
                })
                .unwrap();
                let dist = doubled_pseudoweight_distribution(k, n).unwrap();
                assert_eq!(dist.iter().sum::<u128>(), (k as u128).pow(n as u32));
                for (s2, &c) in dist.iter().enumerate() {
                    assert_eq!(brute.get(&(s2 as u64)).copied().unwrap_or(0), c, "k={k} n={n} s2={s2}");
                }
            }
        }
    }

    #[test]
    fn semi_symmetric_and_symmetric_implies_uniform() {
        for k in 2..=5 {
            for n in 2..=6 {
                for_each_tuple(k, n, u128::MAX, |t| {
                    if is_symmetric(t) && (is_left_semi_symmetric(t) || is_right_semi_symmetric(t)) {
                        assert!(is_uniform(t), "{t:?}");
                    }
                })
                .unwrap();
            }
        }
    }

    #[test]
    fn closed_forms_match_enumeration() {
        for k in 2..=5 {
            for n in 3..=6 {
                for kind in TupleKind::ALL {
                    assert_eq!(
                        count_tuples(kind, k, n).unwrap(),
                        enumerate_count(kind, k, n).unwrap(),
                        "{kind} k={k} n={n}"
                    );
                }
            }
        }
    }

    fn arb_tuple() -> impl Strategy<Value = ZkTuple> {
        (2u32..=9).prop_flat_map(|k| {
            proptest::collection::vec(0..k as u16, 1..10)
                .prop_map(move |s| ZkTuple::new(k, s).unwrap())
        })
    }

    proptest! {
        #[test]
        fn transforms_are_commuting_involutions(t in arb_tuple()) {
            prop_assert_eq!(t.reverse().reverse(), t.clone());
            prop_assert_eq!(t.negate().negate(), t.clone());
            prop_assert_eq!(t.negate().reverse(), t.reverse().negate());
        }

        #[test]
        fn predicate_identities(t in arb_tuple()) {
            prop_assert_eq!(t.is_symmetric(), t == t.reverse());
            prop_assert_eq!(t.is_right_semi_symmetric(), t.reverse().is_left_semi_symmetric());
        }

        #[test]
        fn pseudoweight_complement(t in arb_tuple()) {
            let n = t.len() as u64;
            let k = t.k() as u64;
            let w = t.doubled_pseudoweight().value();
            prop_assert_eq!(t.reverse().negate().doubled_pseudoweight().value(), 2 * n * k - w);
            let zeros = t.symbols().iter().filter(|&&s| s == 0).count() as u64;
            prop_assert_eq!(w % 2, (zeros * k) % 2);
            if k >= 3 {
                prop_assert!(2 * n <= w && w <= 2 * n * (k - 1));
            }
        }

        #[test]
        fn encoding_round_trips(t in arb_tuple()) {
            let code = t.code().unwrap();
            prop_assert_eq!(ZkTuple::from_code(t.k(), t.len(), code), t);
        }
    }
}
