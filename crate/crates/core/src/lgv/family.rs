//! Brute-force enumeration of nonintersecting path families.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::exactalg::{MPoly, RatFunc};
use crate::paths::{label_weight, LatticePoint, WeightMode};
use crate::regions::PathEndpoints;

/// Largest total number of steps accepted by the family enumerator.
pub const FAMILY_STEP_LIMIT: i64 = 60;

struct Walker<'a> {
    starts: &'a [LatticePoint],
    ends: &'a [LatticePoint],
    mode: WeightMode,
    weights: HashMap<i64, MPoly>,
    occupied: HashSet<LatticePoint>,
    out: Vec<MPoly>,
}

impl Walker<'_> {
    fn weight(&mut self, label: i64) -> MPoly {
        let mode = self.mode;
        self.weights.entry(label).or_insert_with(|| label_weight(label, mode)).clone()
    }

    fn begin(&mut self, i: usize, acc: MPoly) {
        if i == self.starts.len() {
            self.out.push(acc);
            return;
        }
        let s = self.starts[i];
        if !self.occupied.insert(s) {
            return;
        }
        self.walk(i, s, acc);
        self.occupied.remove(&s);
    }

    fn walk(&mut self, i: usize, p: LatticePoint, acc: MPoly) {
        let end = self.ends[i];
        if p == end {
            self.begin(i + 1, acc);
            return;
        }
        if p.x < end.x {
            let next = LatticePoint::new(p.x + 1, p.y);
            if self.occupied.insert(next) {
                let w = self.weight(p.x - 2 * p.y);
                self.walk(i, next, &acc * &w);
                self.occupied.remove(&next);
            }
        }
        if p.y > end.y {
            let next = LatticePoint::new(p.x, p.y - 1);
            if self.occupied.insert(next) {
                self.walk(i, next, acc);
                self.occupied.remove(&next);
            }
        }
    }
}

/// Weights of all families of vertex-disjoint paths joining `starts[i]` to `ends[i]`,
/// one entry per family.
pub fn family_weights(e: &PathEndpoints, mode: WeightMode) -> Result<Vec<MPoly>> {
    let (starts, ends) = (e.starts(), e.ends());
    if starts.len() != ends.len() {
        return Err(Error::LengthMismatch { expected: starts.len(), got: ends.len() });
    }
    let mut steps = 0;
    for (s, t) in starts.iter().zip(ends) {
        if s.x > t.x || s.y < t.y {
            return Ok(Vec::new());
        }
        steps += (t.x - s.x) + (s.y - t.y);
    }
    if steps > FAMILY_STEP_LIMIT {
        return Err(Error::LimitExceeded(format!(
            "{steps} path steps (limit {FAMILY_STEP_LIMIT})"
        )));
    }
    let mut w = Walker {
        starts,
        ends,
        mode,
        weights: HashMap::new(),
        occupied: HashSet::new(),
        out: Vec::new(),
    };
    w.begin(0, MPoly::one());
    Ok(w.out)
}

/// Generating function of all nonintersecting families with the given endpoints.
pub fn family_gf_brute(e: &PathEndpoints, mode: WeightMode) -> Result<RatFunc> {
    let total = family_weights(e, mode)?
        .iter()
        .fold(MPoly::zero(), |acc, w| &acc + w);
    Ok(RatFunc::from_poly(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::gf_brute;

    fn pts(v: &[(i64, i64)]) -> Vec<LatticePoint> {
        v.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect()
    }

    #[test]
    fn single_path_is_gf_brute() {
        let e = PathEndpoints::new(pts(&[(1, 1)]), pts(&[(4, 0)])).unwrap();
        let mode = WeightMode::GeneralXY;
        assert_eq!(family_gf_brute(&e, mode).unwrap(), gf_brute(1, 1, 4, 0, mode));
    }

    #[test]
    fn forced_crossing_is_empty() {
        // The lower start must reach the far end, the upper start the near one.
        let e = PathEndpoints::new_unchecked(pts(&[(0, 1), (1, 2)]), pts(&[(3, 0), (1, 0)]));
        assert!(family_weights(&e, WeightMode::GeneralXY).unwrap().is_empty());
    }

    #[test]
    fn step_limit() {
        let e = PathEndpoints::new(pts(&[(0, 40)]), pts(&[(40, 0)])).unwrap();
        assert!(matches!(
            family_gf_brute(&e, WeightMode::GeneralXY),
            Err(Error::LimitExceeded(_))
        ));
    }
}
