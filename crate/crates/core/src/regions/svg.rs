//! SVG pictures of regions, tilings and their path families.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::tiling::{Orientation, Tiling};
use super::Region;

const SIDE: f64 = 40.0;
const MARGIN: f64 = 20.0;
const ROW: f64 = SIDE * 0.866_025_403_784_438_6;

fn fill(o: Orientation) -> &'static str {
    match o {
        Orientation::LeftTilted => "#a0d468",
        Orientation::RightTilted => "#5d9cec",
        Orientation::Vertical => "#f6bb42",
    }
}

struct Canvas {
    x0: i64,
}

impl Canvas {
    /// Pixel position of the doubled horizontal coordinate `p2 / 2` and line `y2 / 2`,
    /// both given in half units.
    fn at(&self, p2: i64, y2: i64) -> (f64, f64) {
        (
            MARGIN + (p2 + 2 * self.x0) as f64 * SIDE / 4.0,
            MARGIN + y2 as f64 * ROW / 2.0,
        )
    }

    fn polygon(&self, pts: &[(i64, i64)]) -> String {
        pts.iter()
            .map(|&(p, y)| {
                let (a, b) = self.at(2 * p, 2 * y);
                format!("{a:.2},{b:.2}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn triangle(r: i64, p: i64, up: bool) -> [(i64, i64); 3] {
    if up {
        [(p - 1, r), (p + 1, r), (p, r - 1)]
    } else {
        [(p - 1, r - 1), (p + 1, r - 1), (p, r)]
    }
}

/// Renders the region outline, and if given, a tiling with its labels and paths.
pub fn render_svg(region: &Region, tiling: Option<&Tiling>) -> String {
    let reach = region.width + region.height;
    let canvas = Canvas { x0: reach };
    let w = 2.0 * MARGIN + (2 * reach) as f64 * SIDE / 2.0;
    let h = 2.0 * MARGIN + region.height as f64 * ROW;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#
    );
    let _ = writeln!(s, r##"<g class="region" fill="none" stroke="#cccccc" stroke-width="0.5">"##);
    for r in 1..=region.height {
        let (lo, hi) = region.row_span(r);
        for t in lo..=hi {
            if region.contains(r, t) {
                let pts = triangle(r, region.position(r, t), t % 2 == 0);
                let _ = writeln!(s, r#"<polygon points="{}"/>"#, canvas.polygon(&pts));
            }
        }
    }
    let _ = writeln!(s, "</g>");
    if let Some(t) = tiling {
        render_tiling(&mut s, &canvas, region, t);
    }
    let _ = writeln!(s, "</svg>");
    s
}

fn render_tiling(s: &mut String, canvas: &Canvas, region: &Region, t: &Tiling) {
    let _ = writeln!(s, r##"<g class="tiling" stroke="#333333" stroke-width="1">"##);
    for l in &t.lozenges {
        let (r, p) = (l.row, region.position(l.row, l.col));
        let pts = match l.orientation {
            Orientation::RightTilted => [(p - 1, r), (p + 1, r), (p + 2, r - 1), (p, r - 1)],
            Orientation::LeftTilted => [(p - 1, r - 1), (p + 1, r - 1), (p + 2, r), (p, r)],
            Orientation::Vertical => [(p, r - 1), (p + 1, r), (p, r + 1), (p - 1, r)],
        };
        let _ = writeln!(
            s,
            r#"<polygon points="{}" fill="{}"/>"#,
            canvas.polygon(&pts),
            fill(l.orientation)
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g class="labels" font-family="sans-serif" font-size="12" text-anchor="middle">"#);
    for l in t.lozenges.iter().filter(|l| l.orientation == Orientation::Vertical) {
        let p = region.position(l.row, l.col);
        let (x, y) = canvas.at(2 * p, 2 * l.row);
        let _ = writeln!(s, r#"<text class="label" x="{x:.2}" y="{:.2}">{p}</text>"#, y + 4.0);
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r##"<g class="paths" fill="none" stroke="#da4453" stroke-width="2">"##);
    for line in path_polylines(region, t) {
        let pts: Vec<String> = line
            .iter()
            .map(|&(p2, y2)| {
                let (x, y) = canvas.at(p2, y2);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(s, r#"<polyline points="{}"/>"#, pts.join(" "));
    }
    let _ = writeln!(s, "</g>");
}

/// Paths through the vertical and right-tilted lozenges, as chains of edge midpoints in
/// half units.
pub(crate) fn path_polylines(region: &Region, t: &Tiling) -> Vec<Vec<(i64, i64)>> {
    let mut next: BTreeMap<(i64, i64), (i64, i64)> = BTreeMap::new();
    for l in &t.lozenges {
        let (r, p) = (l.row, region.position(l.row, l.col));
        let from = (2 * p - 1, 2 * r - 1);
        match l.orientation {
            Orientation::Vertical => next.insert(from, (2 * p + 1, 2 * r + 1)),
            Orientation::RightTilted => next.insert(from, (2 * p + 3, 2 * r - 1)),
            Orientation::LeftTilted => None,
        };
    }
    let targets: std::collections::BTreeSet<_> = next.values().copied().collect();
    let mut lines = Vec::new();
    for &start in next.keys().filter(|k| !targets.contains(k)) {
        let mut line = vec![start];
        let mut cur = start;
        while let Some(&n) = next.get(&cur) {
            line.push(n);
            cur = n;
        }
        lines.push(line);
    }
    lines
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::enumerate_tilings;

    #[test]
    fn outline_only() {
        let r = Region::half(1, 1, vec![], vec![1]).unwrap();
        let svg = render_svg(&r, None);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polygon").count(), 2);
    }

    #[test]
    fn labels_and_paths() {
        let r = Region::half(2, 3, vec![2], vec![1, 3]).unwrap();
        for t in enumerate_tilings(&r).unwrap() {
            let svg = render_svg(&r, Some(&t));
            assert_eq!(svg.matches(r#"class="label""#).count(), t.vertical_labels.len());
            assert_eq!(path_polylines(&r, &t).len(), 2);
            assert_eq!(svg, render_svg(&r, Some(&t)));
        }
    }
}
