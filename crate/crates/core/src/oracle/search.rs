//! Exhaustive maximum-period search for tiny parameters.
//!
//! A cyclic sequence whose `n`-windows are distinct is a closed trail in
//! `B_k(n-1)`. Each trail is enumerated once, rooted at its smallest edge,
//! and extended only by edges larger than the root whose reverse is unused.

use crate::bounds::period_upper_bound;
use crate::error::{Error, Result};
use crate::tuples::{self, code_space, reverse_code, Symbol};

use super::{verify, Verdict};

/// Largest `k^n` the exhaustive search accepts.
pub const EXHAUSTIVE_SPACE_CAP: u64 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Maximum number of search nodes before giving up on exactness.
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            node_budget: 50_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub k: u32,
    pub n: usize,
    /// Longest period found; `0` when no orientable sequence exists.
    pub period: usize,
    /// One period of a sequence achieving `period`.
    pub witness: Vec<Symbol>,
    /// True when the search completed or met the upper bound.
    pub exact: bool,
    pub nodes: u64,
}

struct Search {
    k: u64,
    n: usize,
    vmod: u64,
    reverse: Vec<u64>,
    usable: Vec<bool>,
    used: Vec<bool>,
    root: u64,
    path: Vec<u64>,
    best: usize,
    best_path: Vec<u64>,
    bound: usize,
    nodes: u64,
    budget: u64,
    out_of_budget: bool,
}

impl Search {
    fn available(&self) -> usize {
        let mut count = 0;
        for e in self.root + 1..self.usable.len() as u64 {
            let (ei, ri) = (e as usize, self.reverse[e as usize]);
            if !self.usable[ei] || self.used[ei] || self.used[ri as usize] {
                continue;
            }
            if ri <= self.root || e < ri {
                count += 1;
            }
        }
        count
    }

    fn finished(&self) -> bool {
        self.out_of_budget || self.best >= self.bound
    }

    fn extend(&mut self) {
        if self.nodes >= self.budget {
            self.out_of_budget = true;
            return;
        }
        self.nodes += 1;
        let v = self.path.last().expect("path is rooted") % self.vmod;
        if v == self.root / self.k && self.path.len() >= self.n && self.path.len() > self.best {
            self.best = self.path.len();
            self.best_path = self.path.clone();
            if self.finished() {
                return;
            }
        }
        if self.path.len() + self.available() <= self.best {
            return;
        }
        for x in 0..self.k {
            let e = v * self.k + x;
            let ei = e as usize;
            if e <= self.root
                || !self.usable[ei]
                || self.used[ei]
                || self.used[self.reverse[ei] as usize]
            {
                continue;
            }
            self.used[ei] = true;
            self.path.push(e);
            self.extend();
            self.path.pop();
            self.used[ei] = false;
            if self.finished() {
                return;
            }
        }
    }
}

/// Longest orientable sequence for `k^n <= 256`, by depth-first search over
/// closed trails with reverse exclusion and an available-edge prune.
pub fn exhaustive_max_period(k: u32, n: usize, limits: SearchLimits) -> Result<SearchOutcome> {
    tuples::check_alphabet(k)?;
    if n < 2 {
        return Err(Error::Domain(format!("window length must be at least 2, got {n}")));
    }
    let space = code_space(k, n)
        .filter(|&s| s <= EXHAUSTIVE_SPACE_CAP)
        .ok_or(Error::CapExceeded {
            what: "exhaustive search space k^n",
            needed: tuples::checked_pow(k, n).unwrap_or(u128::MAX),
            cap: EXHAUSTIVE_SPACE_CAP as u128,
        })?;
    let bound = period_upper_bound(k, n)? as usize;

    let reverse: Vec<u64> = (0..space).map(|e| reverse_code(e, k, n)).collect();
    let usable: Vec<bool> = (0..space).map(|e| reverse[e as usize] != e).collect();
    let mut s = Search {
        k: k as u64,
        n,
        vmod: space / k as u64,
        reverse,
        usable,
        used: vec![false; space as usize],
        root: 0,
        path: Vec::with_capacity(space as usize),
        best: 0,
        best_path: Vec::new(),
        bound,
        nodes: 0,
        budget: limits.node_budget,
        out_of_budget: false,
    };

    for root in 0..space {
        if s.finished() {
            break;
        }
        if !s.usable[root as usize] {
            continue;
        }
        s.root = root;
        if s.available() < s.best {
            continue;
        }
        s.used[root as usize] = true;
        s.path.push(root);
        s.extend();
        s.path.pop();
        s.used[root as usize] = false;
    }

    let lead = space / k as u64;
    let witness: Vec<Symbol> = s.best_path.iter().map(|&e| (e / lead) as Symbol).collect();
    if !witness.is_empty() && verify(&witness, n, k)? != Verdict::Accepted {
        return Err(Error::Internal("exhaustive witness failed verification".into()));
    }
    Ok(SearchOutcome {
        k,
        n,
        period: s.best,
        witness,
        exact: !s.out_of_budget,
        nodes: s.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(k: u32, n: usize) -> SearchOutcome {
        exhaustive_max_period(k, n, SearchLimits::default()).unwrap()
    }

    #[test]
    fn tiny_optima() {
        assert_eq!(run(3, 2).period, 3);
        assert_eq!(run(4, 2).period, 4);
        let none = run(2, 2);
        assert_eq!(none.period, 0);
        assert!(none.witness.is_empty());
        assert!(none.exact);
        assert_eq!(run(2, 5).period, 6);
        assert_eq!(run(3, 3).period, 9);
        assert_eq!(run(3, 4).period, 30);
        assert_eq!(run(4, 3).period, 20);
    }

    #[test]
    fn witness_is_orientable() {
        for (k, n) in [(3u32, 2usize), (2, 6), (3, 3), (4, 3), (5, 2)] {
            let o = run(k, n);
            assert_eq!(o.witness.len(), o.period);
            assert!(o.exact);
            assert_eq!(verify(&o.witness, n, k).unwrap(), Verdict::Accepted);
        }
    }

    #[test]
    fn budget_and_caps() {
        let o = exhaustive_max_period(2, 8, SearchLimits { node_budget: 5 }).unwrap();
        assert!(!o.exact);
        assert!(o.nodes <= 5);
        assert!(matches!(
            exhaustive_max_period(3, 6, SearchLimits::default()),
            Err(Error::CapExceeded { .. })
        ));
    }
}
