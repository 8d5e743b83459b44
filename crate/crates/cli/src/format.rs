//! Plain-text sequence files.
//!
//! ```text
//! k=5 n=3 period=50 method=a
//! 00123401122334400213243042143103142032041022441133
//! ```
//!
//! Bodies are contiguous digits for `k <= 10` and comma-separated integers
//! otherwise. Parsing also accepts whitespace and square brackets inside a
//! digit body, so sequences copied from printed tables load as-is.

use std::fmt::Write as _;

use oseq::tuples::Symbol;
use thiserror::Error;

/// Method label for sequences that did not come from a construction.
pub const EXTERNAL_METHOD: &str = "none";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("malformed header: {0}")]
    Header(String),
    #[error("no header line; supply both --k and --n")]
    MissingHeader,
    #[error("bad symbol `{token}` for alphabet size {k}")]
    Symbol { token: String, k: u32 },
    #[error("header says period={header} but the body holds {body} symbols")]
    PeriodMismatch { header: usize, body: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFile {
    pub k: u32,
    pub n: usize,
    pub method: String,
    pub symbols: Vec<Symbol>,
}

impl SequenceFile {
    pub fn period(&self) -> usize {
        self.symbols.len()
    }

    pub fn serialize(&self) -> String {
        let mut out = format!(
            "k={} n={} period={} method={}\n",
            self.k,
            self.n,
            self.period(),
            self.method
        );
        out.push_str(&format_symbols(&self.symbols, self.k));
        out.push('\n');
        out
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Self::parse_with(text, None, None)
    }

    /// Parses with optional `k` / `n` overrides. A file without a header
    /// line is accepted only when both overrides are given.
    pub fn parse_with(text: &str, k: Option<u32>, n: Option<usize>) -> Result<Self, FormatError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let first = lines.next().ok_or(FormatError::Empty)?;
        let (header, body): (Option<Header>, String) = if first.contains('=') {
            (Some(parse_header(first)?), lines.collect::<Vec<_>>().join("\n"))
        } else {
            (None, std::iter::once(first).chain(lines).collect::<Vec<_>>().join("\n"))
        };

        let (k, n, method) = match (&header, k, n) {
            (Some(h), k, n) => (k.unwrap_or(h.k), n.unwrap_or(h.n), h.method.clone()),
            (None, Some(k), Some(n)) => (k, n, EXTERNAL_METHOD.to_string()),
            (None, _, _) => return Err(FormatError::MissingHeader),
        };
        let symbols = parse_symbols(&body, k)?;
        if symbols.is_empty() {
            return Err(FormatError::Empty);
        }
        if let Some(h) = &header {
            if h.period != symbols.len() {
                return Err(FormatError::PeriodMismatch {
                    header: h.period,
                    body: symbols.len(),
                });
            }
        }
        Ok(SequenceFile { k, n, method, symbols })
    }
}

struct Header {
    k: u32,
    n: usize,
    period: usize,
    method: String,
}

fn parse_header(line: &str) -> Result<Header, FormatError> {
    let mut k = None;
    let mut n = None;
    let mut period = None;
    let mut method = None;
    for field in line.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| FormatError::Header(format!("field `{field}` is not key=value")))?;
        let int = || {
            value
                .parse::<u64>()
                .map_err(|_| FormatError::Header(format!("`{key}` must be an integer, got `{value}`")))
        };
        match key {
            "k" => k = Some(int()? as u32),
            "n" => n = Some(int()? as usize),
            "period" => period = Some(int()? as usize),
            "method" => method = Some(value.to_string()),
            _ => return Err(FormatError::Header(format!("unknown field `{key}`"))),
        }
    }
    let missing = |name: &str| FormatError::Header(format!("missing `{name}`"));
    Ok(Header {
        k: k.ok_or_else(|| missing("k"))?,
        n: n.ok_or_else(|| missing("n"))?,
        period: period.ok_or_else(|| missing("period"))?,
        method: method.unwrap_or_else(|| EXTERNAL_METHOD.to_string()),
    })
}

pub fn format_symbols(symbols: &[Symbol], k: u32) -> String {
    let mut out = String::with_capacity(symbols.len() * if k <= 10 { 1 } else { 4 });
    if k <= 10 {
        for &s in symbols {
            out.push(char::from_digit(s as u32, 10).expect("symbol below 10"));
        }
    } else {
        for (i, &s) in symbols.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "{s}").expect("writing to a String");
        }
    }
    out
}

/// Parses a symbol list. For `k <= 10` a string without commas is read
/// digit by digit; larger alphabets always use the comma form.
pub fn parse_symbols(text: &str, k: u32) -> Result<Vec<Symbol>, FormatError> {
    let bad = |token: &str| FormatError::Symbol {
        token: token.to_string(),
        k,
    };
    if k > 10 || text.contains(',') {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<u32>()
                    .ok()
                    .filter(|&v| v < k)
                    .map(|v| v as Symbol)
                    .ok_or_else(|| bad(tok))
            })
            .collect()
    } else {
        text.chars()
            .filter(|c| !c.is_whitespace() && *c != '[' && *c != ']')
            .map(|c| {
                c.to_digit(10)
                    .filter(|&v| v < k)
                    .map(|v| v as Symbol)
                    .ok_or_else(|| bad(&c.to_string()))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_small_alphabet() {
        let f = SequenceFile {
            k: 5,
            n: 3,
            method: "a".into(),
            symbols: vec![0, 0, 1, 2, 3, 4],
        };
        let text = f.serialize();
        assert_eq!(text, "k=5 n=3 period=6 method=a\n001234\n");
        assert_eq!(SequenceFile::parse(&text).unwrap(), f);
    }

    #[test]
    fn round_trip_large_alphabet() {
        let f = SequenceFile {
            k: 12,
            n: 2,
            method: "a_t:1".into(),
            symbols: vec![0, 11, 10, 3],
        };
        let text = f.serialize();
        assert_eq!(text, "k=12 n=2 period=4 method=a_t:1\n0,11,10,3\n");
        assert_eq!(SequenceFile::parse(&text).unwrap(), f);
        let wrapped = SequenceFile::parse("k=12 n=2 period=4\n0,11,\n10,3\n").unwrap();
        assert_eq!(wrapped.symbols, f.symbols);
        assert_eq!(SequenceFile::parse("k=12 n=2 period=0\n"), Err(FormatError::Empty));
    }

    #[test]
    fn tolerant_bodies() {
        let f = SequenceFile::parse("k=4 n=3 period=20\n[00112 01223\n 01302 31233]\n").unwrap();
        assert_eq!(f.period(), 20);
        assert_eq!(f.method, EXTERNAL_METHOD);
        let f = SequenceFile::parse_with("00112012230130231233\n", Some(4), Some(3)).unwrap();
        assert_eq!(f.symbols.len(), 20);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(SequenceFile::parse(""), Err(FormatError::Empty));
        assert_eq!(SequenceFile::parse("  \n\n"), Err(FormatError::Empty));
        assert_eq!(SequenceFile::parse("0123\n"), Err(FormatError::MissingHeader));
        assert!(SequenceFile::parse("k=3 n=2 period=3\n012\n").is_ok());
        assert_eq!(
            SequenceFile::parse("k=3 n=2 period=4\n012\n"),
            Err(FormatError::PeriodMismatch { header: 4, body: 3 })
        );
        assert!(matches!(
            SequenceFile::parse("k=3 n=2 period=3\n013\n"),
            Err(FormatError::Symbol { .. })
        ));
        assert!(matches!(SequenceFile::parse("k=3 n=x period=3\n012\n"), Err(FormatError::Header(_))));
        assert!(matches!(SequenceFile::parse("k=3 period=3\n012\n"), Err(FormatError::Header(_))));
        assert!(matches!(SequenceFile::parse("k=3 n=2 period=0\n"), Err(FormatError::Empty)));
        assert!(matches!(parse_symbols("0123", 12), Err(FormatError::Symbol { .. })));
        assert_eq!(parse_symbols("7", 12).unwrap(), vec![7]);
    }

    proptest::proptest! {
        #[test]
        fn serialize_then_parse_is_identity(k in 2u32..40, n in 2usize..9, raw in proptest::collection::vec(0u32..1000, 1..200)) {
            let f = SequenceFile {
                k,
                n,
                method: "lempel".into(),
                symbols: raw.iter().map(|v| (v % k) as Symbol).collect(),
            };
            proptest::prop_assert_eq!(SequenceFile::parse(&f.serialize()).unwrap(), f);
        }
    }
}
