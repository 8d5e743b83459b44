//! Antisymmetric Eulerian subgraphs of de Bruijn digraphs and the sequences
//! they trace.
//!
//! * `A`: edges whose last-minus-first symbol lies in `1..=(k-1)/2`.
//! * `C`: odd `k`, edges whose last-minus-first symbol is odd.
//! * `A_t`: the same test applied to the sum of the last `t` symbols minus
//!   the sum of the first `t`.
//! * pseudoweight-Lempel: tuples of pseudoweight below half the maximum,
//!   lifted through the inverse of the consecutive-difference map.

use std::fmt;
use std::str::FromStr;

use crate::bounds::period_upper_bound;
use crate::error::{Error, Result};
use crate::graph::{circuit_to_sequence, eulerian_circuit, DbSubgraph, EdgeCap};
use crate::oracle::OrientableSequence;
use crate::tuples::{
    self, check_alphabet, code_space, count_by_doubled_pseudoweight, doubled_symbol_weight, Symbol,
    ZkTuple,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    A,
    C,
    At,
    PseudoweightLempel,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::A, Method::C, Method::At, Method::PseudoweightLempel];

    pub fn name(self) -> &'static str {
        match self {
            Method::A => "a",
            Method::C => "c",
            Method::At => "a_t",
            Method::PseudoweightLempel => "lempel",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "a" => Ok(Method::A),
            "c" => Ok(Method::C),
            "a_t" | "at" => Ok(Method::At),
            "lempel" | "pseudoweight_lempel" => Ok(Method::PseudoweightLempel),
            _ => Err(Error::Domain(format!("unknown construction method `{s}`"))),
        }
    }
}

/// Which construction to run and with what parameters. `n` is the order of
/// the target sequence (its window length).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConstructionRecipe {
    pub method: Method,
    pub k: u32,
    pub n: usize,
    /// Window half-width for `A_t`; `1` otherwise.
    pub t: usize,
    /// Lempel scaling unit; generation supports only `1`.
    pub beta: u32,
}

impl ConstructionRecipe {
    fn plain(method: Method, k: u32, n: usize) -> Self {
        Self {
            method,
            k,
            n,
            t: 1,
            beta: 1,
        }
    }

    pub fn a(k: u32, n: usize) -> Self {
        Self::plain(Method::A, k, n)
    }

    pub fn c(k: u32, n: usize) -> Self {
        Self::plain(Method::C, k, n)
    }

    pub fn a_t(k: u32, n: usize, t: usize) -> Self {
        Self {
            t,
            ..Self::plain(Method::At, k, n)
        }
    }

    pub fn lempel(k: u32, n: usize) -> Self {
        Self::plain(Method::PseudoweightLempel, k, n)
    }

    /// Checks the parameter domain of the method.
    pub fn validate(&self) -> Result<()> {
        let Self { method, k, n, t, beta } = *self;
        check_alphabet(k)?;
        let fail = |msg: String| Err(Error::Domain(msg));
        match method {
            Method::A => {
                if k < 3 || n < 2 {
                    return fail(format!("A needs k >= 3 and n >= 2, got k={k} n={n}"));
                }
            }
            Method::C => {
                if k < 5 || k % 2 == 0 || n < 2 {
                    return fail(format!("C needs odd k >= 5 and n >= 2, got k={k} n={n}"));
                }
            }
            Method::At => {
                if k < 5 || n < 2 {
                    return fail(format!("A_t needs k >= 5 and n >= 2, got k={k} n={n}"));
                }
                if t < 1 || 2 * t > n {
                    return fail(format!("A_t needs 1 <= t <= n/2, got t={t} n={n}"));
                }
            }
            Method::PseudoweightLempel => {
                if k < 3 || n < 3 {
                    return fail(format!("lempel needs k >= 3 and n >= 3, got k={k} n={n}"));
                }
                if gcd(beta, k) != 1 {
                    return fail(format!("beta={beta} is not a unit modulo {k}"));
                }
                if beta % k != 1 {
                    return fail(format!("lifting is defined for beta = 1, got beta={beta}"));
                }
            }
        }
        Ok(())
    }

    /// Short method tag used in sequence file headers: `a`, `c`, `a_t:<t>`
    /// or `lempel`.
    pub fn tag(&self) -> String {
        match self.method {
            Method::At => format!("a_t:{}", self.t),
            m => m.name().to_string(),
        }
    }

    /// Inverse of [`ConstructionRecipe::tag`].
    pub fn from_tag(tag: &str, k: u32, n: usize) -> Result<Self> {
        let (name, t) = match tag.split_once(':') {
            Some((name, t)) => {
                let t = t
                    .parse::<usize>()
                    .map_err(|_| Error::Domain(format!("bad t in method tag `{tag}`")))?;
                (name, Some(t))
            }
            None => (tag, None),
        };
        let method: Method = name.parse()?;
        match (method, t) {
            (Method::At, Some(t)) => Ok(Self::a_t(k, n, t)),
            (Method::At, None) => Err(Error::Domain(format!("method tag `{tag}` is missing t"))),
            (_, Some(_)) => Err(Error::Domain(format!("method tag `{tag}` takes no parameter"))),
            (m, None) => Ok(Self::plain(m, k, n)),
        }
    }
}

impl fmt::Display for ConstructionRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (k={}, n={}", self.method, self.k, self.n)?;
        if self.method == Method::At {
            write!(f, ", t={}", self.t)?;
        }
        f.write_str(")")
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn half(k: u32) -> u64 {
    ((k - 1) / 2) as u64
}

fn tuple_space(k: u32, len: usize, cap: EdgeCap) -> Result<u64> {
    check_alphabet(k)?;
    let total = tuples::checked_pow(k, len)?;
    cap.check("tuple space", total)?;
    code_space(k, len).ok_or_else(|| Error::Domain(format!("{k}^{len} does not fit a 64-bit code")))
}

/// Codes of all `len`-tuples accepted by `keep`, visited in lexicographic
/// order.
fn collect_codes<F>(k: u32, len: usize, cap: EdgeCap, mut keep: F) -> Result<Vec<u64>>
where
    F: FnMut(&[Symbol]) -> bool,
{
    tuple_space(k, len, cap)?;
    let mut codes = Vec::new();
    let mut code = 0u64;
    tuples::for_each_tuple(k, len, u128::MAX, |t| {
        if keep(t) {
            codes.push(code);
        }
        code += 1;
    })?;
    Ok(codes)
}

fn difference_codes(k: u32, n: usize, cap: EdgeCap, accept: impl Fn(u64) -> bool) -> Result<DbSubgraph> {
    if n < 2 {
        return Err(Error::Domain(format!("window length must be at least 2, got {n}")));
    }
    let space = tuple_space(k, n, cap)?;
    let kk = k as u64;
    let lead = space / kk;
    let codes = (0..space)
        .filter(|&c| accept((c % kk + kk - c / lead) % kk))
        .collect();
    Ok(DbSubgraph::from_codes(k, n - 1, codes))
}

/// `A_k(n)` as a subgraph of `B_k(n-1)`.
pub fn build_a(k: u32, n: usize, cap: EdgeCap) -> Result<DbSubgraph> {
    if k < 3 {
        return Err(Error::Domain(format!("A needs k >= 3, got {k}")));
    }
    let h = half(k);
    difference_codes(k, n, cap, |d| (1..=h).contains(&d))
}

/// `C_k(n)` for odd `k`.
pub fn build_c(k: u32, n: usize, cap: EdgeCap) -> Result<DbSubgraph> {
    if k < 5 || k.is_multiple_of(2) {
        return Err(Error::Domain(format!("C needs odd k >= 5, got {k}")));
    }
    difference_codes(k, n, cap, |d| d % 2 == 1)
}

/// `A_t`: the last `t` symbols minus the first `t`, summed mod `k`, must lie
/// in `1..=(k-1)/2`.
pub fn build_a_t(k: u32, n: usize, t: usize, cap: EdgeCap) -> Result<DbSubgraph> {
    ConstructionRecipe::a_t(k, n, t).validate()?;
    let h = half(k);
    let kk = k as u64;
    let codes = collect_codes(k, n, cap, |s| {
        let head: u64 = s[..t].iter().map(|&x| x as u64).sum();
        let tail: u64 = s[n - t..].iter().map(|&x| x as u64).sum();
        let d = (tail % kk + kk - head % kk) % kk;
        (1..=h).contains(&d)
    })?;
    Ok(DbSubgraph::from_codes(k, n - 1, codes))
}

/// The consecutive-difference map scaled by `beta`.
pub fn lempel_map(t: &ZkTuple, beta: u32) -> Result<ZkTuple> {
    let k = t.k();
    if t.len() < 2 {
        return Err(Error::Domain("lempel map needs a tuple of length at least 2".into()));
    }
    if gcd(beta, k) != 1 {
        return Err(Error::Domain(format!("beta={beta} is not a unit modulo {k}")));
    }
    let (kk, b) = (k as u64, beta as u64 % k as u64);
    let out = t
        .symbols()
        .windows(2)
        .map(|w| ((w[1] as u64 + kk - w[0] as u64) % kk * b % kk) as Symbol)
        .collect();
    ZkTuple::new(k, out)
}

/// The `k` preimages of `c` under the unscaled difference map, ordered by
/// first symbol.
pub fn lempel_preimages(c: &ZkTuple) -> Vec<ZkTuple> {
    let k = c.k();
    (0..k)
        .map(|a| {
            let mut acc = a;
            let mut out = Vec::with_capacity(c.len() + 1);
            out.push(a as Symbol);
            for &d in c.symbols() {
                acc = (acc + d as u32) % k;
                out.push(acc as Symbol);
            }
            ZkTuple::new(k, out).expect("residues are in range")
        })
        .collect()
}

fn pseudoweight_codes(k: u32, n: usize, cap: EdgeCap) -> Result<Vec<u64>> {
    if k < 3 || n < 2 {
        return Err(Error::Domain(format!(
            "pseudoweight set needs k >= 3 and n >= 2, got k={k} n={n}"
        )));
    }
    let limit = n as u64 * k as u64;
    collect_codes(k, n, cap, |s| {
        s.iter().map(|&x| doubled_symbol_weight(x, k)).sum::<u64>() < limit
    })
}

/// `n`-tuples of pseudoweight below `nk/2`, as a subgraph of `B_k(n-1)`.
pub fn build_pseudoweight_e(k: u32, n: usize, cap: EdgeCap) -> Result<DbSubgraph> {
    Ok(DbSubgraph::from_codes(k, n - 1, pseudoweight_codes(k, n, cap)?))
}

/// Preimages of [`build_pseudoweight_e`]`(k, n)` under the difference map:
/// a subgraph of `B_k(n)`.
pub fn build_lifted(k: u32, n: usize, cap: EdgeCap) -> Result<DbSubgraph> {
    let base = pseudoweight_codes(k, n, cap)?;
    let lifted_len = n + 1;
    let lifted_total = (base.len() as u128) * k as u128;
    cap.check("lifted subgraph", lifted_total)?;
    if code_space(k, lifted_len).is_none() {
        return Err(Error::Domain(format!("{k}^{lifted_len} does not fit a 64-bit code")));
    }
    lift_codes(k, n, &base).map(|codes| DbSubgraph::from_codes(k, n, codes))
}

fn lift_codes(k: u32, n: usize, base: &[u64]) -> Result<Vec<u64>> {
    let kk = k as u64;
    let mut diffs = vec![0 as Symbol; n];
    let mut out = Vec::with_capacity(base.len() * k as usize);
    for &c in base {
        tuples::decode_into(c, k, &mut diffs);
        for a in 0..kk {
            let mut sym = a;
            let mut code = a;
            for &d in &diffs {
                sym = (sym + d as u64) % kk;
                code = code * kk + sym;
            }
            out.push(code);
        }
    }
    Ok(out)
}

/// The certified subgraph whose Eulerian circuits realize `recipe`.
pub fn recipe_subgraph(recipe: &ConstructionRecipe, cap: EdgeCap) -> Result<DbSubgraph> {
    recipe.validate()?;
    let (k, n) = (recipe.k, recipe.n);
    let g = match recipe.method {
        Method::A => build_a(k, n, cap)?,
        Method::C => build_c(k, n, cap)?,
        Method::At => build_a_t(k, n, recipe.t, cap)?,
        Method::PseudoweightLempel => {
            let base = build_pseudoweight_e(k, n - 1, cap)?;
            if let Some((e, f)) = base.antinegasymmetry_violation() {
                return Err(Error::Internal(format!(
                    "pseudoweight set holds {e} and its negated reverse {f}"
                )));
            }
            if !base.is_balanced() {
                return Err(Error::Internal("pseudoweight set is not balanced".into()));
            }
            build_lifted(k, n - 1, cap)?
        }
    };
    if let Some((e, f)) = g.antisymmetry_violation() {
        return Err(Error::Internal(format!(
            "{recipe}: subgraph holds {e} and its reverse {f}"
        )));
    }
    if !g.is_balanced() {
        return Err(Error::Internal(format!("{recipe}: subgraph is not balanced")));
    }
    Ok(g)
}

/// Period the recipe is expected to produce. For `A_t` with `t >= 2` this
/// is the enumerated edge count.
pub fn expected_period(recipe: &ConstructionRecipe) -> Result<u128> {
    recipe.validate()?;
    let (k, n) = (recipe.k, recipe.n);
    match recipe.method {
        Method::A | Method::C => Ok(tuples::checked_pow(k, n - 1)? * half(k) as u128),
        Method::At if recipe.t == 1 => Ok(tuples::checked_pow(k, n - 1)? * half(k) as u128),
        Method::At => Ok(build_a_t(k, n, recipe.t, EdgeCap::default())?.edge_count() as u128),
        Method::PseudoweightLempel => {
            let m = n - 1;
            let r = count_by_doubled_pseudoweight(k, m, m as u64 * k as u64)?;
            Ok(k as u128 * (tuples::checked_pow(k, m)? - r) / 2)
        }
    }
}

/// A verified sequence with the figures it was checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub sequence: OrientableSequence,
    pub expected_period: u128,
    pub bound: u128,
    pub edge_count: usize,
}

/// Builds, certifies and traces the recipe's subgraph, then verifies the
/// resulting sequence from scratch.
pub fn generate(recipe: &ConstructionRecipe, cap: EdgeCap) -> Result<Generated> {
    let g = recipe_subgraph(recipe, cap)?;
    // a disconnected subgraph surfaces here with its component report
    let circuit = eulerian_circuit(&g)?;
    let symbols = circuit_to_sequence(&circuit);
    let sequence = match OrientableSequence::new(symbols, recipe.n, recipe.k) {
        Ok(s) => s.with_recipe(*recipe),
        Err(Error::NotOrientable(v)) => {
            return Err(Error::Internal(format!("{recipe}: traced sequence rejected: {v}")))
        }
        Err(e) => return Err(e),
    };
    let expected = expected_period(recipe)?;
    let bound = period_upper_bound(recipe.k, recipe.n)?;
    let period = sequence.period() as u128;
    if period != expected {
        return Err(Error::Internal(format!(
            "{recipe}: period {period} differs from expected {expected}"
        )));
    }
    if period > bound {
        return Err(Error::Internal(format!(
            "{recipe}: period {period} exceeds the upper bound {bound}"
        )));
    }
    Ok(Generated {
        sequence,
        expected_period: expected,
        bound,
        edge_count: g.edge_count(),
    })
}
