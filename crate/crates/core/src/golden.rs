//! Published reference tables, embedded at compile time.
//!
//! `BoundsOld` and `Known` are prior-work data and are never recomputed;
//! the other tables are reproduced by [`crate::bounds`] and
//! [`crate::constructions`].

const BOUNDS_NEW: &str = include_str!("../data/bounds_new.csv");
const BOUNDS_OLD: &str = include_str!("../data/bounds_old.csv");
const A_PERIODS: &str = include_str!("../data/a_periods.csv");
const LEMPEL_PERIODS: &str = include_str!("../data/lempel_periods.csv");
const KNOWN_PERIODS: &str = include_str!("../data/known_periods.csv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Table {
    BoundsNew,
    BoundsOld,
    APeriods,
    LempelPeriods,
    /// Largest known periods, with proven optima flagged.
    Known,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub n: usize,
    pub k: u32,
    pub value: u128,
    pub bound: Option<u128>,
    /// Flagged as meeting the upper bound (known table only).
    pub optimal: bool,
}

impl Table {
    fn source(self) -> &'static str {
        match self {
            Table::BoundsNew => BOUNDS_NEW,
            Table::BoundsOld => BOUNDS_OLD,
            Table::APeriods => A_PERIODS,
            Table::LempelPeriods => LEMPEL_PERIODS,
            Table::Known => KNOWN_PERIODS,
        }
    }

    /// All cells in file order (by `n`, then `k`).
    pub fn cells(self) -> Vec<Cell> {
        let mut lines = self.source().lines();
        let header: Vec<&str> = lines.next().unwrap_or_default().split(',').collect();
        // in the bound tables the bound is the cell value itself
        let has_period = header.contains(&"period");
        lines
            .filter(|l| !l.trim().is_empty())
            .map(|line| {
                let mut cell = Cell {
                    n: 0,
                    k: 0,
                    value: 0,
                    bound: None,
                    optimal: false,
                };
                for (name, raw) in header.iter().zip(line.split(',')) {
                    let v: u128 = raw.trim().parse().expect("embedded table is numeric");
                    match *name {
                        "n" => cell.n = v as usize,
                        "k" => cell.k = v as u32,
                        "period" => cell.value = v,
                        "bound" if has_period => cell.bound = Some(v),
                        "bound" => cell.value = v,
                        "optimal" => cell.optimal = v != 0,
                        other => panic!("unexpected column `{other}`"),
                    }
                }
                cell
            })
            .collect()
    }

    pub fn get(self, n: usize, k: u32) -> Option<Cell> {
        self.cells().into_iter().find(|c| c.n == n && c.k == k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shapes() {
        assert_eq!(Table::BoundsNew.cells().len(), 56);
        assert_eq!(Table::BoundsOld.cells().len(), 56);
        assert_eq!(Table::APeriods.cells().len(), 35);
        assert_eq!(Table::LempelPeriods.cells().len(), 36);
        assert_eq!(Table::Known.cells().len(), 42);
    }

    #[test]
    fn spot_values() {
        assert_eq!(Table::BoundsNew.get(9, 8).unwrap().value, 67059992);
        assert_eq!(Table::BoundsOld.get(3, 2).unwrap().value, 1);
        let a = Table::APeriods.get(5, 9).unwrap();
        assert_eq!((a.value, a.bound), (26244, Some(28836)));
        assert_eq!(Table::LempelPeriods.get(5, 3).unwrap().bound, Some(99));
        let known = Table::Known.get(4, 5).unwrap();
        assert!(known.optimal && known.value == 280);
        assert!(!Table::Known.get(4, 4).unwrap().optimal);
        assert!(Table::Known.get(9, 3).is_none());
    }

    #[test]
    fn periods_respect_published_bounds() {
        for t in [Table::APeriods, Table::LempelPeriods] {
            for c in t.cells() {
                let b = c.bound.unwrap();
                assert!(c.value <= b, "{t:?} {c:?}");
                if let Some(nb) = Table::BoundsNew.get(c.n, c.k) {
                    assert_eq!(nb.value, b, "{t:?} {c:?}");
                }
            }
        }
    }
}
