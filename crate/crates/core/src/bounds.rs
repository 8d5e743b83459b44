//! Upper bounds on the period of an orientable sequence.
//!
//! Two independent routes produce the same number:
//!
//! * [`period_upper_bound`] evaluates the case-split closed forms directly.
//! * [`ledger_bound`] starts from the edge count of `B*_k(n-1)` and removes
//!   the edges that degree and parity constraints exclude from the
//!   sequence-subgraph (which carries `2m` edges for a period-`m` sequence),
//!   adding back the overlaps between exclusion sets.
//!
//! [`empirical_exclusion_audit`] re-derives the vertex-class counts the
//! ledger relies on by enumerating `B*_k(n-1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{b_star, EdgeCap};
use crate::tuples::{self, checked_pow, count_tuples, Symbol, TupleKind, ZkTuple};

fn check_domain(k: u32, n: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Domain(format!("alphabet size must be at least 2, got {k}")));
    }
    if n < 2 {
        return Err(Error::Domain(format!("window order must be at least 2, got {n}")));
    }
    tuples::check_alphabet(k)
}

/// Largest possible period of an orientable sequence of order `n` over `Z_k`.
pub fn period_upper_bound(k: u32, n: usize) -> Result<u128> {
    check_domain(k, n)?;
    let kk = k as u128;
    let p = |e: usize| checked_pow(k, e);
    let k_odd = k % 2 == 1;
    let numerator = match n {
        2 if k_odd => kk * kk - kk,
        2 => kk * kk - 2 * kk,
        3 if k_odd => p(3)? - p(2)?,
        3 => p(3)? - p(2)? - 2 * kk,
        4 if k_odd => p(4)? + 2 * kk - 3 * p(2)?,
        4 => p(4)? - 2 * p(2)?,
        _ if n % 2 == 1 && k_odd => {
            p(n)? + p(3)? + 3 * p(2)? - 3 * p(n.div_ceil(2))? - 2 * p((n - 1) / 2)?
        }
        _ if n % 2 == 1 => p(n)? + p(3)? + p(2)? - 3 * p(n.div_ceil(2))? - 2 * kk,
        _ if k_odd => p(n)? + 4 * p(2)? - 5 * p(n / 2)?,
        _ => p(n)? + p(2)? - 3 * p(n / 2)? - kk,
    };
    Ok(numerator / 2)
}

/// Cardinalities of the exclusion sets. `None` marks a term that does not
/// enter the bound for this `n`.
///
/// `u_*` are edges excluded because a non-uniform semi-symmetric vertex has
/// unequal in/out-degree in `B*_k(n-1)`; `p_*` are edges excluded because a
/// symmetric vertex must have even degree in the sequence-subgraph while
/// its degree in `B*_k(n-1)` is odd. Intersection terms are the largest
/// possible overlaps between those sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LedgerTerms {
    pub u_in: Option<u128>,
    pub u_out: Option<u128>,
    pub p_in: Option<u128>,
    pub p_out: Option<u128>,
    pub u_out_p_in: Option<u128>,
    pub p_out_u_in: Option<u128>,
    pub u_out_u_in: Option<u128>,
    pub p_out_p_in: Option<u128>,
}

impl LedgerTerms {
    /// `(name, value)` pairs in a fixed display order.
    pub fn named(&self) -> [(&'static str, Option<u128>); 8] {
        [
            ("|U_in|", self.u_in),
            ("|U_out|", self.u_out),
            ("|P_in|", self.p_in),
            ("|P_out|", self.p_out),
            ("|U_out ∩ P_in|", self.u_out_p_in),
            ("|P_out ∩ U_in|", self.p_out_u_in),
            ("|U_out ∩ U_in|", self.u_out_u_in),
            ("|P_out ∩ P_in|", self.p_out_p_in),
        ]
    }

    fn removed(&self) -> u128 {
        [self.u_in, self.u_out, self.p_in, self.p_out]
            .iter()
            .flatten()
            .sum()
    }

    fn restored(&self) -> u128 {
        [self.u_out_p_in, self.p_out_u_in, self.u_out_u_in, self.p_out_p_in]
            .iter()
            .flatten()
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub k: u32,
    pub n: usize,
    pub closed_form_bound: u128,
    /// Edges of `B*_k(n-1)`, the starting point of the ledger.
    pub base_edges: u128,
    /// Largest possible number of edges in the sequence-subgraph.
    pub ledger_edge_bound: u128,
    pub terms: LedgerTerms,
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k={} n={}", self.k, self.n)?;
        writeln!(f, "  period bound         {}", self.closed_form_bound)?;
        writeln!(f, "  |B*_k(n-1)| edges    {}", self.base_edges)?;
        for (name, value) in self.terms.named() {
            match value {
                Some(v) => writeln!(f, "  {name:<20} {v}")?,
                None => writeln!(f, "  {name:<20} n/a")?,
            }
        }
        write!(f, "  sequence-subgraph    <= {}", self.ledger_edge_bound)
    }
}

/// Evaluates the exclusion ledger and pairs it with the closed form.
pub fn ledger_bound(k: u32, n: usize) -> Result<BoundReport> {
    check_domain(k, n)?;
    let kk = k as u128;
    let k_odd = k % 2 == 1;
    let v = n - 1;
    // degree-parity exclusions live on symmetric (n-1)-tuples: uniform ones
    // when k is even, non-uniform ones when k is odd
    let parity = if k_odd {
        count_tuples(TupleKind::SymmetricNonUniform, k, v)?
    } else {
        count_tuples(TupleKind::Uniform, k, v)?
    };

    let terms = match n {
        2 => LedgerTerms {
            p_out: Some(parity),
            ..Default::default()
        },
        3 => LedgerTerms {
            p_in: Some(parity),
            p_out: Some(parity),
            p_out_p_in: Some(0),
            ..Default::default()
        },
        4 => LedgerTerms {
            u_out: Some(count_tuples(TupleKind::NonUniformLeftSemiSymmetric, k, v)?),
            p_out: Some(parity),
            ..Default::default()
        },
        _ => {
            let n_odd = n % 2 == 1;
            let u = if n_odd {
                count_tuples(TupleKind::NonUniformNonAlternatingLeftSemiSymmetric, k, v)?
            } else {
                count_tuples(TupleKind::NonUniformLeftSemiSymmetric, k, v)?
            };
            let uu = if n_odd { kk * kk * kk - kk * kk } else { kk * (kk - 1) };
            let (up, pp) = match (n_odd, k_odd) {
                (true, true) => (kk * (kk - 1), 0),
                (false, true) => (kk * (kk - 1), kk * (kk - 1)),
                (_, false) => (0, 0),
            };
            LedgerTerms {
                u_in: Some(u),
                u_out: Some(u),
                p_in: Some(parity),
                p_out: Some(parity),
                u_out_p_in: Some(up),
                p_out_u_in: Some(up),
                u_out_u_in: Some(uu),
                p_out_p_in: Some(pp),
            }
        }
    };

    let base_edges = count_tuples(TupleKind::Asymmetric, k, n)?;
    let ledger_edge_bound = (base_edges + terms.restored())
        .checked_sub(terms.removed())
        .ok_or_else(|| Error::Internal(format!("negative ledger for k={k} n={n}")))?;
    Ok(BoundReport {
        k,
        n,
        closed_form_bound: period_upper_bound(k, n)?,
        base_edges,
        ledger_edge_bound,
        terms,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCount {
    pub label: &'static str,
    pub measured: u128,
    pub closed_form: u128,
}

/// Result of enumerating `B*_k(n-1)` and classifying its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExclusionAudit {
    pub k: u32,
    pub n: usize,
    pub vertices: usize,
    pub classes: Vec<ClassCount>,
    /// Vertices whose in-degree (out-degree) is not `k-1` exactly when the
    /// label is left- (right-) semi-symmetric.
    pub degree_violations: Vec<ZkTuple>,
    /// Symmetric vertices expected to have odd degree that do not.
    pub parity_violations: Vec<ZkTuple>,
}

impl ExclusionAudit {
    pub fn is_consistent(&self) -> bool {
        self.degree_violations.is_empty()
            && self.parity_violations.is_empty()
            && self.classes.iter().all(|c| c.measured == c.closed_form)
    }

    pub fn class(&self, label: &str) -> Option<&ClassCount> {
        self.classes.iter().find(|c| c.label == label)
    }
}

type Classifier = fn(&[Symbol]) -> bool;

fn audit_classes() -> [(&'static str, Classifier, TupleKind); 7] {
    use tuples::{is_alternating as alt, is_uniform as uni};
    [
        ("uniform", |t| uni(t), TupleKind::Uniform),
        (
            "symmetric-non-uniform",
            |t| tuples::is_symmetric(t) && !uni(t),
            TupleKind::SymmetricNonUniform,
        ),
        ("alternating", |t| alt(t), TupleKind::Alternating),
        (
            "non-uniform-left-semi-symmetric",
            |t| tuples::is_left_semi_symmetric(t) && !uni(t),
            TupleKind::NonUniformLeftSemiSymmetric,
        ),
        (
            "non-uniform-right-semi-symmetric",
            |t| tuples::is_right_semi_symmetric(t) && !uni(t),
            TupleKind::NonUniformLeftSemiSymmetric,
        ),
        (
            "non-uniform-non-alternating-left-semi-symmetric",
            |t| tuples::is_left_semi_symmetric(t) && !uni(t) && !alt(t),
            TupleKind::NonUniformNonAlternatingLeftSemiSymmetric,
        ),
        (
            "non-uniform-non-alternating-right-semi-symmetric",
            |t| tuples::is_right_semi_symmetric(t) && !uni(t) && !alt(t),
            TupleKind::NonUniformNonAlternatingLeftSemiSymmetric,
        ),
    ]
}

/// Enumerates `B*_k(n-1)`, classifies every vertex and checks the degree
/// facts the ledger depends on.
pub fn empirical_exclusion_audit(k: u32, n: usize, cap: EdgeCap) -> Result<ExclusionAudit> {
    check_domain(k, n)?;
    let g = b_star(k, n - 1, cap)?;
    let v = n - 1;
    let classes = audit_classes();
    let mut measured = [0u128; 7];
    let mut degree_violations = Vec::new();
    let mut parity_violations = Vec::new();
    let mut buf = vec![0 as Symbol; v];

    for (code, din, dout) in g.degree_map().iter() {
        tuples::decode_into(code, k, &mut buf);
        for (slot, (_, pred, _)) in measured.iter_mut().zip(classes.iter()) {
            if pred(&buf) {
                *slot += 1;
            }
        }
        let want_in = if tuples::is_left_semi_symmetric(&buf) { k - 1 } else { k };
        let want_out = if tuples::is_right_semi_symmetric(&buf) { k - 1 } else { k };
        let vertex = || ZkTuple::from_code(k, v, code);
        if din != want_in || dout != want_out {
            degree_violations.push(vertex());
        }
        let must_be_odd = if k.is_multiple_of(2) {
            tuples::is_uniform(&buf)
        } else {
            tuples::is_symmetric(&buf) && !tuples::is_uniform(&buf)
        };
        if must_be_odd && (din % 2 == 0 || dout % 2 == 0) {
            parity_violations.push(vertex());
        }
    }

    let classes = classes
        .iter()
        .zip(measured)
        .map(|(&(label, _, kind), measured)| {
            Ok(ClassCount {
                label,
                measured,
                closed_form: count_tuples(kind, k, v)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ExclusionAudit {
        k,
        n,
        vertices: g.vertex_count(),
        classes,
        degree_violations,
        parity_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        assert_eq!(period_upper_bound(5, 4).unwrap(), 280);
        assert_eq!(period_upper_bound(3, 5).unwrap(), 99);
        assert_eq!(period_upper_bound(2, 2).unwrap(), 0);
        assert_eq!(period_upper_bound(7, 5).unwrap(), 8085);
        assert_eq!(period_upper_bound(8, 8).unwrap(), 8_382_492);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(period_upper_bound(1, 3), Err(Error::Domain(_))));
        assert!(matches!(period_upper_bound(3, 1), Err(Error::Domain(_))));
        assert!(matches!(ledger_bound(0, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn ledger_examples() {
        let r = ledger_bound(5, 4).unwrap();
        assert_eq!(r.ledger_edge_bound, 560);
        assert_eq!(r.closed_form_bound, 280);
        assert_eq!(r.terms.u_out, Some(20));
        assert_eq!(r.terms.p_out, Some(20));
        assert_eq!(r.terms.u_in, None);

        assert_eq!(ledger_bound(2, 6).unwrap().closed_form_bound, 21);
        assert_eq!(ledger_bound(3, 2).unwrap().closed_form_bound, 3);
    }

    #[test]
    fn ledger_agrees_with_closed_form() {
        for n in 2..=12 {
            for k in 2..=12 {
                let r = ledger_bound(k, n).unwrap();
                assert_eq!(r.ledger_edge_bound / 2, r.closed_form_bound, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn bound_increases_with_k() {
        for n in 2..=12 {
            for k in 3..12 {
                assert!(
                    period_upper_bound(k + 1, n).unwrap() > period_upper_bound(k, n).unwrap(),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn audit_examples() {
        let cap = EdgeCap::default();
        let a = empirical_exclusion_audit(3, 4, cap).unwrap();
        assert!(a.is_consistent(), "{a:?}");
        assert_eq!(a.class("non-uniform-left-semi-symmetric").unwrap().measured, 6);

        let a = empirical_exclusion_audit(2, 3, cap).unwrap();
        assert!(a.is_consistent(), "{a:?}");
        assert_eq!(a.class("uniform").unwrap().measured, 2);
        let g = b_star(2, 2, cap).unwrap();
        for v in [[0u16, 0], [1, 1]] {
            assert_eq!(g.degree(&ZkTuple::from_slice(2, &v).unwrap()).0, 1);
        }

        let a = empirical_exclusion_audit(3, 5, cap).unwrap();
        assert_eq!(a.class("alternating").unwrap().measured, 6);
    }

    #[test]
    fn audit_is_consistent_on_small_instances() {
        for k in 2..=5 {
            for n in 2..=6 {
                if (k as u64).pow(n as u32) > 20_000 {
                    continue;
                }
                let a = empirical_exclusion_audit(k, n, EdgeCap::default()).unwrap();
                assert!(a.is_consistent(), "k={k} n={n}: {a:?}");
            }
        }
    }
}
