//! Dented half and quarter hexagons on the triangular lattice, their lozenge
//! tilings, and the endpoints of the corresponding path families.
//!
//! # Coordinates
//!
//! A half hexagon of width `w` and height `h` has `h` rows of unit triangles,
//! numbered `1..=h` from the top. Row `r` holds `2(w + r) - 1` triangles with
//! column index `t = 0, 1, ...`; even columns are up-pointing. The doubled
//! horizontal position of a triangle's centre, measured from the symmetry
//! axis, is `t + 1 - w - r`.
//!
//! A vertical lozenge joins the up triangle `(r, t)` with the down triangle
//! `(r + 1, t + 1)` below it; its label is the doubled position of the up
//! triangle. A right-tilted lozenge joins `(r, t)` up with `(r, t + 1)` down;
//! a left-tilted one joins `(r, t)` down with `(r, t + 1)` up.
//!
//! A left dent removes the up triangle `(r, 0)`, a right dent the up triangle
//! at the end of row `r`. Paths enter at the left end of every undented row
//! `r`, at the lattice point `(w + r - 1, w + r - 1)`, and leave at every right
//! dent `r'`, at `(w + r' - 1, 0)`. Vertical lozenges are right steps and
//! right-tilted lozenges are down steps.
//!
//! A quarter hexagon keeps the triangles of a half hexagon whose doubled
//! position is at least `label_offset`. Its dents sit on the slanted lateral
//! side and are listed in `left_dents`. A path starts at every row whose
//! first triangle is an up triangle, at `(2b + label_offset, b)`, and ends at
//! every dent as above.

mod svg;
mod tiling;

pub use svg::render_svg;
pub use tiling::{
    enumerate_tilings, enumerate_tilings_with_limit, tiling_gf, tiling_weight, tiling_weight_poly,
    Lozenge, Orientation, Tiling, TILING_LIMIT,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paths::{LatticePoint, WeightMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionKind {
    HalfHexagon,
    QuarterHexagon,
}

/// A dented half or quarter hexagon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawRegion")]
pub struct Region {
    pub kind: RegionKind,
    /// Length of the upper side of the half hexagon (for a quarter hexagon, of the half
    /// hexagon it is cut from).
    pub width: i64,
    /// Length of the lateral sides.
    pub height: i64,
    pub left_dents: Vec<i64>,
    pub right_dents: Vec<i64>,
    pub label_offset: i64,
    pub weight_mode: WeightMode,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRegion {
    kind: RegionKind,
    width: i64,
    height: i64,
    #[serde(default)]
    left_dents: Vec<i64>,
    #[serde(default)]
    right_dents: Vec<i64>,
    label_offset: Option<i64>,
    weight_mode: Option<WeightMode>,
}

impl TryFrom<RawRegion> for Region {
    type Error = Error;
    fn try_from(raw: RawRegion) -> Result<Region> {
        let quarter = raw.kind == RegionKind::QuarterHexagon;
        let r = Region {
            kind: raw.kind,
            width: raw.width,
            height: raw.height,
            left_dents: raw.left_dents,
            right_dents: raw.right_dents,
            label_offset: raw.label_offset.unwrap_or(if quarter { 1 } else { 0 }),
            weight_mode: raw.weight_mode.unwrap_or(if quarter {
                WeightMode::UnitXYHalfZero
            } else {
                WeightMode::GeneralXY
            }),
        };
        r.validate()?;
        Ok(r)
    }
}

/// Start and end points of a family of paths, both strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathEndpoints {
    starts: Vec<LatticePoint>,
    ends: Vec<LatticePoint>,
}

impl PathEndpoints {
    pub fn new(starts: Vec<LatticePoint>, ends: Vec<LatticePoint>) -> Result<Self> {
        if starts.len() != ends.len() {
            return Err(Error::LengthMismatch { expected: starts.len(), got: ends.len() });
        }
        for (name, v) in [("starts", &starts), ("ends", &ends)] {
            if !v.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidSequence(format!("{name} must be strictly increasing")));
            }
        }
        Ok(PathEndpoints { starts, ends })
    }

    /// Endpoints in the given pairing, without the ordering check.
    pub fn new_unchecked(starts: Vec<LatticePoint>, ends: Vec<LatticePoint>) -> Self {
        PathEndpoints { starts, ends }
    }

    pub fn starts(&self) -> &[LatticePoint] {
        &self.starts
    }

    pub fn ends(&self) -> &[LatticePoint] {
        &self.ends
    }

    pub fn m(&self) -> usize {
        self.starts.len()
    }
}

fn check_dents(d: &[i64], height: i64, side: &str) -> Result<()> {
    if d.iter().any(|&p| p < 1 || p > height) {
        return Err(Error::InvalidRegion(format!("{side} dents must lie in 1..={height}: {d:?}")));
    }
    if !d.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidRegion(format!("{side} dents must be strictly increasing: {d:?}")));
    }
    Ok(())
}

impl Region {
    /// A half hexagon with general weights.
    pub fn half(width: i64, height: i64, left_dents: Vec<i64>, right_dents: Vec<i64>) -> Result<Self> {
        let r = Region {
            kind: RegionKind::HalfHexagon,
            width,
            height,
            left_dents,
            right_dents,
            label_offset: 0,
            weight_mode: WeightMode::GeneralXY,
        };
        r.validate()?;
        Ok(r)
    }

    /// A quarter hexagon with dents on its lateral side.
    pub fn quarter(width: i64, height: i64, dents: Vec<i64>, label_offset: i64) -> Result<Self> {
        let r = Region {
            kind: RegionKind::QuarterHexagon,
            width,
            height,
            left_dents: dents,
            right_dents: Vec::new(),
            label_offset,
            weight_mode: WeightMode::UnitXYHalfZero,
        };
        r.validate()?;
        Ok(r)
    }

    /// Checks the structural invariants (not tileability).
    pub fn validate(&self) -> Result<()> {
        if self.width < 1 || self.height < 1 {
            return Err(Error::InvalidRegion("width and height must be positive".into()));
        }
        check_dents(&self.left_dents, self.height, "left")?;
        check_dents(&self.right_dents, self.height, "right")?;
        match self.kind {
            RegionKind::HalfHexagon if self.label_offset != 0 => {
                Err(Error::InvalidRegion("half hexagons have label offset 0".into()))
            }
            RegionKind::QuarterHexagon if !self.right_dents.is_empty() => {
                Err(Error::InvalidRegion("quarter hexagon dents go in left_dents".into()))
            }
            RegionKind::QuarterHexagon if !(0..=1).contains(&self.label_offset) => {
                Err(Error::InvalidRegion("quarter hexagon label offset must be 0 or 1".into()))
            }
            RegionKind::QuarterHexagon if self.weight_mode != WeightMode::UnitXYHalfZero => {
                Err(Error::InvalidRegion("quarter hexagons use the unit_xy_half_zero weights".into()))
            }
            _ => Ok(()),
        }
    }

    /// The dents on the side where paths end.
    pub fn end_dents(&self) -> &[i64] {
        match self.kind {
            RegionKind::HalfHexagon => &self.right_dents,
            RegionKind::QuarterHexagon => &self.left_dents,
        }
    }

    /// Rows in which a path starts.
    pub fn start_rows(&self) -> Vec<i64> {
        let w = self.width;
        (1..=self.height)
            .filter(|r| match self.kind {
                RegionKind::HalfHexagon => !self.left_dents.contains(r),
                RegionKind::QuarterHexagon => (w + r - 1 - self.label_offset) % 2 == 0,
            })
            .collect()
    }

    /// The same region with the width increased by `d`.
    pub fn widened(&self, d: i64) -> Region {
        Region { width: self.width + d, ..self.clone() }
    }

    /// The left-right mirror image of a half hexagon.
    pub fn mirrored(&self) -> Region {
        Region {
            left_dents: self.right_dents.clone(),
            right_dents: self.left_dents.clone(),
            ..self.clone()
        }
    }

    /// First and last column of row `r` before dents are removed.
    pub(crate) fn row_span(&self, r: i64) -> (i64, i64) {
        let hi = 2 * (self.width + r) - 2;
        match self.kind {
            RegionKind::HalfHexagon => (0, hi),
            RegionKind::QuarterHexagon => (self.label_offset + self.width + r - 1, hi),
        }
    }

    /// Whether the triangle `(r, t)` belongs to the region.
    pub fn contains(&self, r: i64, t: i64) -> bool {
        if r < 1 || r > self.height {
            return false;
        }
        let (lo, hi) = self.row_span(r);
        if t < lo || t > hi {
            return false;
        }
        let left = self.kind == RegionKind::HalfHexagon && t == 0 && self.left_dents.contains(&r);
        let right = t == hi && self.end_dents().contains(&r);
        !(left || right)
    }

    /// Doubled horizontal position of the triangle `(r, t)`.
    pub fn position(&self, r: i64, t: i64) -> i64 {
        t + 1 - self.width - r
    }
}

/// Path endpoints corresponding to the region's tilings.
pub fn region_to_endpoints(r: &Region) -> Result<PathEndpoints> {
    r.validate()?;
    let w = r.width;
    let starts: Vec<LatticePoint> = r
        .start_rows()
        .into_iter()
        .map(|row| {
            let a = w + row - 1;
            match r.kind {
                RegionKind::HalfHexagon => LatticePoint::new(a, a),
                RegionKind::QuarterHexagon => LatticePoint::new(a, (a - r.label_offset) / 2),
            }
        })
        .collect();
    let ends: Vec<LatticePoint> = r.end_dents().iter().map(|&row| LatticePoint::new(w + row - 1, 0)).collect();
    if starts.len() != ends.len() {
        return Err(Error::InvalidRegion(format!(
            "{} path starts but {} dents on the exit side",
            starts.len(),
            ends.len()
        )));
    }
    PathEndpoints::new(starts, ends)
}

fn dent_subsets(h: i64) -> impl Iterator<Item = Vec<i64>> {
    (0u32..1 << h).map(move |mask| (1..=h).filter(|r| mask & (1 << (r - 1)) != 0).collect())
}

/// Half hexagons with `width <= max_w`, `height <= max_h`, as many dents as rows and at
/// most `max_paths` dents on the right side, in a fixed order.
pub fn enumerate_half_regions(max_w: i64, max_h: i64, max_paths: usize) -> Vec<Region> {
    let mut out = Vec::new();
    for w in 1..=max_w {
        for h in 1..=max_h {
            for left in dent_subsets(h) {
                for right in dent_subsets(h) {
                    if left.len() + right.len() == h as usize && right.len() <= max_paths {
                        out.push(Region::half(w, h, left.clone(), right).expect("valid dents"));
                    }
                }
            }
        }
    }
    out
}

/// Quarter hexagons with `width <= max_w`, `height <= max_h`, label offset 0 or 1 and as
/// many dents as path starts, in a fixed order.
pub fn enumerate_quarter_regions(max_w: i64, max_h: i64) -> Vec<Region> {
    let mut out = Vec::new();
    for w in 1..=max_w {
        for h in 1..=max_h {
            for offset in 0..=1 {
                for dents in dent_subsets(h) {
                    let r = Region::quarter(w, h, dents, offset).expect("valid dents");
                    if r.start_rows().len() == r.left_dents.len() {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}
