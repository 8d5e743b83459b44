//! Reproduction of the reference tables, cell by cell.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use oseq::bounds::period_upper_bound;
use oseq::constructions::{generate, ConstructionRecipe};
use oseq::golden::{Cell, Table};
use oseq::graph::EdgeCap;
use oseq::Error;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Bounds,
    APeriods,
    LempelPeriods,
    Known,
}

impl Which {
    pub fn name(self) -> &'static str {
        match self {
            Which::Bounds => "bounds",
            Which::APeriods => "a-periods",
            Which::LempelPeriods => "lempel-periods",
            Which::Known => "known",
        }
    }

    fn min_k(self) -> u32 {
        match self {
            Which::Bounds => 2,
            Which::APeriods => 5,
            Which::LempelPeriods | Which::Known => 3,
        }
    }

    fn min_n(self) -> usize {
        match self {
            Which::LempelPeriods => 3,
            _ => 2,
        }
    }

    fn golden(self) -> Table {
        match self {
            Which::Bounds => Table::BoundsNew,
            Which::APeriods => Table::APeriods,
            Which::LempelPeriods => Table::LempelPeriods,
            Which::Known => Table::Known,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Computed,
    External,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    /// Computed and equal to the bundled reference.
    #[serde(rename = "match")]
    Match,
    /// Computed and different from the bundled reference.
    #[serde(rename = "mismatch")]
    Mismatch,
    /// Computed; no reference value for this cell.
    #[serde(rename = "unreferenced")]
    Unreferenced,
    /// Computed and larger than the largest previously known value.
    #[serde(rename = "improved")]
    Improved,
    /// Static reference data, shown as published.
    #[serde(rename = "reference")]
    Reference,
    #[serde(rename = "skipped (cap)")]
    Skipped,
    #[serde(rename = "failed")]
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRecord {
    pub which: &'static str,
    pub n: usize,
    pub k: u32,
    pub value: Option<u128>,
    pub bound: Option<u128>,
    pub source: Source,
    pub status: Status,
    /// Value in the bundled reference table, when there is one.
    pub reference: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableOutput {
    pub which: Which,
    pub records: Vec<TableRecord>,
}

impl TableOutput {
    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn cell(&self, which: &str, n: usize, k: u32) -> Option<&TableRecord> {
        self.records
            .iter()
            .find(|r| r.which == which && r.n == n && r.k == k)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.records).expect("records serialize")
    }

    pub fn to_text(&self) -> String {
        let primary = self.which.name();
        let old: BTreeMap<(usize, u32), u128> = self
            .records
            .iter()
            .filter(|r| r.which == OLD_BOUNDS)
            .filter_map(|r| r.value.map(|v| ((r.n, r.k), v)))
            .collect();
        let rows: Vec<&TableRecord> = self.records.iter().filter(|r| r.which == primary).collect();
        let ks: Vec<u32> = {
            let mut ks: Vec<u32> = rows.iter().map(|r| r.k).collect();
            ks.sort_unstable();
            ks.dedup();
            ks
        };
        let ns: Vec<usize> = {
            let mut ns: Vec<usize> = rows.iter().map(|r| r.n).collect();
            ns.sort_unstable();
            ns.dedup();
            ns
        };
        let text_of = |r: &TableRecord| -> String {
            let mut s = match r.value {
                Some(v) => v.to_string(),
                None if r.status == Status::Skipped => "skip".into(),
                None => "fail".into(),
            };
            match self.which {
                Which::Bounds => {
                    if let Some(o) = old.get(&(r.n, r.k)) {
                        write!(s, " ({o})").unwrap();
                    }
                }
                _ => {
                    if let Some(b) = r.bound {
                        write!(s, " ({b})").unwrap();
                    }
                }
            }
            match r.status {
                Status::Mismatch => s.push('!'),
                Status::Improved => s.push('+'),
                _ if r.source == Source::External => s.push('*'),
                _ => {}
            }
            s
        };

        let mut grid: BTreeMap<(usize, u32), String> = BTreeMap::new();
        for r in &rows {
            grid.insert((r.n, r.k), text_of(r));
        }
        let head: Vec<String> = ks.iter().map(|k| format!("k={k}")).collect();
        let widths: Vec<usize> = ks
            .iter()
            .zip(&head)
            .map(|(k, h)| {
                ns.iter()
                    .filter_map(|n| grid.get(&(*n, *k)).map(String::len))
                    .chain(std::iter::once(h.len()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();

        let mut out = String::new();
        write!(out, "{primary}\n{:>3}", "n").unwrap();
        for (h, w) in head.iter().zip(&widths) {
            write!(out, "  {h:>w$}").unwrap();
        }
        out.push('\n');
        for n in &ns {
            write!(out, "{n:>3}").unwrap();
            for (k, w) in ks.iter().zip(&widths) {
                let cell = grid.get(&(*n, *k)).map(String::as_str).unwrap_or("");
                write!(out, "  {cell:>w$}").unwrap();
            }
            out.push('\n');
        }
        let legend = match self.which {
            Which::Bounds => "value (prior bound)",
            Which::Known => "value (bound); * = external",
            _ => "period (bound)",
        };
        writeln!(
            out,
            "{legend}; {} match, {} mismatch (!), {} skipped, {} failed",
            self.count(Status::Match),
            self.count(Status::Mismatch),
            self.count(Status::Skipped),
            self.count(Status::Failed)
        )
        .unwrap();
        out
    }
}

const OLD_BOUNDS: &str = "bounds-old";

fn classify(value: u128, bound: Option<u128>, golden: Option<Cell>) -> Status {
    match golden {
        None => Status::Unreferenced,
        Some(g) if g.value == value && (g.bound.is_none() || g.bound == bound) => Status::Match,
        Some(_) => Status::Mismatch,
    }
}

fn computed(which: Which, n: usize, k: u32, result: Result<(u128, Option<u128>), Error>) -> TableRecord {
    let golden = which.golden().get(n, k);
    let mut rec = TableRecord {
        which: which.name(),
        n,
        k,
        value: None,
        bound: None,
        source: Source::Computed,
        status: Status::Failed,
        reference: golden.map(|g| g.value),
        note: None,
    };
    match result {
        Ok((v, b)) => {
            rec.value = Some(v);
            rec.bound = b;
            rec.status = classify(v, b, golden);
        }
        Err(Error::CapExceeded { .. }) => rec.status = Status::Skipped,
        Err(e) => rec.note = Some(e.to_string()),
    }
    rec
}

fn generated_period(recipe: ConstructionRecipe, cap: EdgeCap) -> Result<(u128, Option<u128>), Error> {
    let g = generate(&recipe, cap)?;
    Ok((g.sequence.period() as u128, Some(g.bound)))
}

/// Best period any implemented construction reaches at `(k, n)`, with the
/// recipe that reached it.
fn best_construction(k: u32, n: usize, cap: EdgeCap) -> Result<Option<(u128, String)>, Error> {
    let mut candidates = vec![ConstructionRecipe::a(k, n)];
    if n >= 3 {
        candidates.push(ConstructionRecipe::lempel(k, n));
    }
    let mut best: Option<(u128, String)> = None;
    for r in candidates {
        match generate(&r, cap) {
            Ok(g) => {
                let p = g.sequence.period() as u128;
                if best.as_ref().is_none_or(|(b, _)| p > *b) {
                    best = Some((p, r.tag()));
                }
            }
            Err(Error::Disconnected(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(best)
}

fn known_cell(n: usize, k: u32, cap: EdgeCap) -> TableRecord {
    let golden = Table::Known.get(n, k);
    let bound = period_upper_bound(k, n).ok();
    let mut rec = TableRecord {
        which: Which::Known.name(),
        n,
        k,
        value: None,
        bound,
        source: Source::Computed,
        status: Status::Failed,
        reference: golden.map(|g| g.value),
        note: None,
    };
    let best = best_construction(k, n, cap);
    match (best, golden) {
        (Ok(Some((p, tag))), Some(g)) if p >= g.value => {
            rec.value = Some(p);
            rec.status = if p == g.value { Status::Match } else { Status::Improved };
            rec.note = Some(format!("method={tag}"));
        }
        (Ok(best), Some(g)) => {
            rec.value = Some(g.value);
            rec.source = Source::External;
            rec.status = Status::Reference;
            rec.note = best.map(|(p, tag)| format!("best construction: {p} (method={tag})"));
        }
        (Ok(Some((p, tag))), None) => {
            rec.value = Some(p);
            rec.status = Status::Unreferenced;
            rec.note = Some(format!("method={tag}"));
        }
        (Ok(None), None) => rec.note = Some("no construction applies".into()),
        (Err(Error::CapExceeded { .. }), Some(g)) => {
            rec.value = Some(g.value);
            rec.source = Source::External;
            rec.status = Status::Reference;
            rec.note = Some("construction skipped (cap)".into());
        }
        (Err(Error::CapExceeded { .. }), None) => rec.status = Status::Skipped,
        (Err(e), _) => rec.note = Some(e.to_string()),
    }
    rec
}

/// Computes every cell with `k <= max_k` and `n <= max_n`. Cells run in
/// parallel; records come back in `(n, k)` order.
pub fn build_table(which: Which, max_k: u32, max_n: usize, cap: EdgeCap) -> TableOutput {
    let cells: Vec<(usize, u32)> = (which.min_n()..=max_n)
        .flat_map(|n| (which.min_k()..=max_k).map(move |k| (n, k)))
        .collect();
    let mut records: Vec<TableRecord> = cells
        .par_iter()
        .map(|&(n, k)| match which {
            Which::Bounds => computed(which, n, k, period_upper_bound(k, n).map(|b| (b, None))),
            Which::APeriods => computed(which, n, k, generated_period(ConstructionRecipe::a(k, n), cap)),
            Which::LempelPeriods => {
                computed(which, n, k, generated_period(ConstructionRecipe::lempel(k, n), cap))
            }
            Which::Known => known_cell(n, k, cap),
        })
        .collect();
    if which == Which::Bounds {
        records.extend(
            Table::BoundsOld
                .cells()
                .into_iter()
                .filter(|c| c.n <= max_n && c.k <= max_k)
                .map(|c| TableRecord {
                    which: OLD_BOUNDS,
                    n: c.n,
                    k: c.k,
                    value: Some(c.value),
                    bound: None,
                    source: Source::External,
                    status: Status::Reference,
                    reference: Some(c.value),
                    note: None,
                }),
        );
    }
    TableOutput { which, records }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_table_matches() {
        let t = build_table(Which::Bounds, 8, 9, EdgeCap::default());
        assert_eq!(t.count(Status::Match), 56);
        assert_eq!(t.count(Status::Mismatch), 0);
        assert_eq!(t.cell("bounds-old", 3, 2).unwrap().value, Some(1));
        let text = t.to_text();
        assert!(text.contains("67059992 (67092476)"), "{text}");
    }

    #[test]
    fn unreferenced_cells_and_caps() {
        let t = build_table(Which::APeriods, 10, 2, EdgeCap::default());
        let c = t.cell("a-periods", 2, 10).unwrap();
        assert_eq!((c.value, c.status), (Some(40), Status::Unreferenced));

        let t = build_table(Which::APeriods, 5, 4, EdgeCap(200));
        assert_eq!(t.cell("a-periods", 3, 5).unwrap().status, Status::Match);
        let c = t.cell("a-periods", 4, 5).unwrap();
        assert_eq!((c.value, c.status), (None, Status::Skipped));
        assert!(t.to_text().contains("skip"));
    }

    #[test]
    fn known_cells() {
        let t = build_table(Which::Known, 6, 5, EdgeCap::default());
        let c = t.cell("known", 4, 4).unwrap();
        assert_eq!((c.value, c.source, c.status), (Some(88), Source::Computed, Status::Match));
        let c = t.cell("known", 5, 6).unwrap();
        assert_eq!((c.value, c.source, c.status), (Some(3360), Source::External, Status::Reference));
        assert!(c.note.as_deref().unwrap().contains("3300"));
        let c = t.cell("known", 2, 3).unwrap();
        assert_eq!((c.value, c.status), (Some(3), Status::Match));
        assert!(t.to_text().contains("3360 (3684)*"));
    }

    #[test]
    fn deterministic_json() {
        let a = build_table(Which::LempelPeriods, 5, 4, EdgeCap::default()).to_json();
        let b = build_table(Which::LempelPeriods, 5, 4, EdgeCap::default()).to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"status\": \"match\""));
    }

    #[test]
    fn text_and_json_agree() {
        let t = build_table(Which::APeriods, 7, 3, EdgeCap::default());
        let text = t.to_text();
        for r in &t.records {
            let v = r.value.unwrap().to_string();
            assert!(text.contains(&v), "{v} missing from\n{text}");
        }
    }
}
