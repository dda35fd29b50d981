//! Exhaustive lozenge tiling enumeration.

use serde::{Deserialize, Serialize};

use super::Region;
use crate::error::{Error, Result};
use crate::exactalg::{MPoly, RatFunc};
use crate::paths::{label_weight, WeightMode};

/// Default cap on the number of lozenges in an enumerated region.
pub const TILING_LIMIT: usize = 80;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Down triangle `(r, t)` with up triangle `(r, t + 1)`.
    LeftTilted,
    /// Up triangle `(r, t)` with down triangle `(r, t + 1)`.
    RightTilted,
    /// Up triangle `(r, t)` with down triangle `(r + 1, t + 1)`.
    Vertical,
}

/// A lozenge, addressed by its first triangle in row-major order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Lozenge {
    pub row: i64,
    pub col: i64,
    pub orientation: Orientation,
}

impl Lozenge {
    /// The two triangles covered.
    pub fn cells(&self) -> [(i64, i64); 2] {
        let (r, t) = (self.row, self.col);
        match self.orientation {
            Orientation::Vertical => [(r, t), (r + 1, t + 1)],
            _ => [(r, t), (r, t + 1)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tiling {
    pub lozenges: Vec<Lozenge>,
    /// Labels of the vertical lozenges, sorted.
    pub vertical_labels: Vec<i64>,
}

struct Board<'a> {
    region: &'a Region,
    spans: Vec<(i64, i64)>,
    covered: Vec<Vec<bool>>,
    placed: Vec<Lozenge>,
    out: Vec<Tiling>,
}

impl Board<'_> {
    fn free(&self, r: i64, t: i64) -> bool {
        if !self.region.contains(r, t) {
            return false;
        }
        let lo = self.spans[(r - 1) as usize].0;
        !self.covered[(r - 1) as usize][(t - lo) as usize]
    }

    fn mark(&mut self, r: i64, t: i64, v: bool) {
        let lo = self.spans[(r - 1) as usize].0;
        self.covered[(r - 1) as usize][(t - lo) as usize] = v;
    }

    fn first_free(&self, mut r: i64, mut t: i64) -> Option<(i64, i64)> {
        while r <= self.region.height {
            let hi = self.spans[(r - 1) as usize].1;
            while t <= hi {
                if self.free(r, t) {
                    return Some((r, t));
                }
                t += 1;
            }
            r += 1;
            if r <= self.region.height {
                t = self.spans[(r - 1) as usize].0;
            }
        }
        None
    }

    fn search(&mut self, r: i64, t: i64) {
        let Some((r, t)) = self.first_free(r, t) else {
            let mut vertical_labels: Vec<i64> = self
                .placed
                .iter()
                .filter(|l| l.orientation == Orientation::Vertical)
                .map(|l| self.region.position(l.row, l.col))
                .collect();
            vertical_labels.sort_unstable();
            self.out.push(Tiling { lozenges: self.placed.clone(), vertical_labels });
            return;
        };
        let options: &[Orientation] = if t % 2 == 0 {
            &[Orientation::RightTilted, Orientation::Vertical]
        } else {
            &[Orientation::LeftTilted]
        };
        for &orientation in options {
            let loz = Lozenge { row: r, col: t, orientation };
            let [_, (r2, t2)] = loz.cells();
            if !self.free(r2, t2) {
                continue;
            }
            self.mark(r, t, true);
            self.mark(r2, t2, true);
            self.placed.push(loz);
            self.search(r, t + 1);
            self.placed.pop();
            self.mark(r, t, false);
            self.mark(r2, t2, false);
        }
    }
}

/// All lozenge tilings of `r`, with the default size cap.
pub fn enumerate_tilings(r: &Region) -> Result<Vec<Tiling>> {
    enumerate_tilings_with_limit(r, TILING_LIMIT)
}

/// All lozenge tilings of `r`, refusing regions with more than `limit` lozenges.
pub fn enumerate_tilings_with_limit(r: &Region, limit: usize) -> Result<Vec<Tiling>> {
    r.validate()?;
    let spans: Vec<(i64, i64)> = (1..=r.height).map(|row| r.row_span(row)).collect();
    let (mut up, mut down) = (0usize, 0usize);
    for (row, &(lo, hi)) in (1..).zip(&spans) {
        for t in lo..=hi {
            if r.contains(row, t) {
                if t % 2 == 0 {
                    up += 1;
                } else {
                    down += 1;
                }
            }
        }
    }
    if up + down > 2 * limit {
        return Err(Error::LimitExceeded(format!(
            "region has {} triangles (limit {} lozenges)",
            up + down,
            limit
        )));
    }
    if up != down {
        return Ok(Vec::new());
    }
    let covered = spans.iter().map(|&(lo, hi)| vec![false; (hi - lo + 1) as usize]).collect();
    let mut board = Board { region: r, spans, covered, placed: Vec::new(), out: Vec::new() };
    let t0 = board.spans[0].0;
    board.search(1, t0);
    Ok(board.out)
}

/// Weight of a tiling as a polynomial: the product of its vertical lozenge weights.
pub fn tiling_weight_poly(t: &Tiling, mode: WeightMode) -> MPoly {
    t.vertical_labels
        .iter()
        .fold(MPoly::one(), |acc, &l| &acc * &label_weight(l, mode))
}

pub fn tiling_weight(t: &Tiling, mode: WeightMode) -> RatFunc {
    RatFunc::from_poly(tiling_weight_poly(t, mode))
}

/// Sum of the weights of all tilings of `r` under the region's weight mode.
pub fn tiling_gf(r: &Region) -> Result<RatFunc> {
    let total = enumerate_tilings(r)?
        .iter()
        .fold(MPoly::zero(), |acc, t| &acc + &tiling_weight_poly(t, r.weight_mode));
    Ok(RatFunc::from_poly(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::BigRat;

    #[test]
    fn trivial_strip() {
        // Width 1, height 1, one dent on each side leaves a single down triangle
        // flanked by nothing: untileable.
        let r = Region::half(1, 1, vec![1], vec![1]).unwrap();
        assert!(enumerate_tilings(&r).unwrap().is_empty());
        // One right dent: up, down remain, a single right-tilted lozenge.
        let r = Region::half(1, 1, vec![], vec![1]).unwrap();
        let ts = enumerate_tilings(&r).unwrap();
        assert_eq!(ts.len(), 1);
        assert!(ts[0].vertical_labels.is_empty());
        assert!(tiling_gf(&r).unwrap().is_one());
    }

    #[test]
    fn untileable_is_empty() {
        let r = Region::half(2, 2, vec![], vec![]).unwrap();
        assert!(enumerate_tilings(&r).unwrap().is_empty());
    }

    #[test]
    fn size_cap() {
        let r = Region::half(6, 6, vec![], vec![1, 2, 3, 4, 5, 6]).unwrap();
        assert!(matches!(enumerate_tilings_with_limit(&r, 10), Err(Error::LimitExceeded(_))));
    }

    #[test]
    fn weights_follow_labels() {
        let t = Tiling { lozenges: vec![], vertical_labels: vec![-7, -7, -6, -1, 0, 3, 6] };
        let expect = [-7, -7, -6, -1, 0, 3, 6]
            .iter()
            .fold(MPoly::one(), |acc, &l| &acc * &label_weight(l, WeightMode::GeneralXY));
        assert_eq!(tiling_weight_poly(&t, WeightMode::GeneralXY), expect);
        let zero = Tiling { lozenges: vec![], vertical_labels: vec![0] };
        assert_eq!(
            tiling_weight(&zero, WeightMode::UnitXYHalfZero).as_constant(),
            Some(BigRat::new(1, 2))
        );
        let empty = Tiling { lozenges: vec![], vertical_labels: vec![] };
        assert!(tiling_weight(&empty, WeightMode::GeneralXY).is_one());
    }

    #[test]
    fn tilings_cover_exactly() {
        let r = Region::half(2, 3, vec![2], vec![1, 3]).unwrap();
        for t in enumerate_tilings(&r).unwrap() {
            let mut cells: Vec<(i64, i64)> = t.lozenges.iter().flat_map(|l| l.cells()).collect();
            cells.sort_unstable();
            let before = cells.len();
            cells.dedup();
            assert_eq!(before, cells.len());
            assert!(cells.iter().all(|&(row, col)| r.contains(row, col)));
            let total: usize = (1..=3)
                .map(|row| {
                    let (lo, hi) = r.row_span(row);
                    (lo..=hi).filter(|&c| r.contains(row, c)).count()
                })
                .sum();
            assert_eq!(cells.len(), total);
        }
    }
}
