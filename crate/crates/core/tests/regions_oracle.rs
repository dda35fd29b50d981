//! Tilings against nonintersecting path families on small regions.

use lozenge::exactalg::{MPoly, RatFunc, Substitution, Var};
use lozenge::lgv::{determinant, family_weights, lgv_matrix_half, quarter_family_gf};
use lozenge::paths::{shift_quotient, WeightMode};
use lozenge::regions::{
    enumerate_tilings, region_to_endpoints, tiling_gf, tiling_weight_poly, Region,
};

fn subsets(h: i64) -> Vec<Vec<i64>> {
    (0u32..1 << h)
        .map(|mask| (1..=h).filter(|r| mask & (1 << (r - 1)) != 0).collect())
        .collect()
}

fn half_regions(max_w: i64, max_h: i64, max_paths: usize) -> Vec<Region> {
    let mut out = Vec::new();
    for w in 1..=max_w {
        for h in 1..=max_h {
            for left in subsets(h) {
                for right in subsets(h) {
                    if left.len() + right.len() == h as usize && right.len() <= max_paths {
                        out.push(Region::half(w, h, left.clone(), right).unwrap());
                    }
                }
            }
        }
    }
    out
}

fn quarter_regions(max_w: i64, max_h: i64) -> Vec<Region> {
    let mut out = Vec::new();
    for w in 1..=max_w {
        for h in 1..=max_h {
            for offset in 0..=1 {
                for dents in subsets(h) {
                    let r = Region::quarter(w, h, dents, offset).unwrap();
                    if r.start_rows().len() == r.left_dents.len() {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}

fn sorted_tiling_weights(r: &Region) -> Vec<MPoly> {
    let mut v: Vec<MPoly> = enumerate_tilings(r)
        .unwrap()
        .iter()
        .map(|t| tiling_weight_poly(t, r.weight_mode))
        .collect();
    v.sort();
    v
}

fn sorted_family_weights(r: &Region) -> Vec<MPoly> {
    let e = region_to_endpoints(r).unwrap();
    let mut v = family_weights(&e, r.weight_mode).unwrap();
    v.sort();
    v
}

#[test]
fn half_hexagon_weights_match_path_families() {
    let mut nonempty = 0;
    for r in half_regions(4, 4, 4) {
        let tw = sorted_tiling_weights(&r);
        assert_eq!(tw, sorted_family_weights(&r), "{r:?}");
        nonempty += usize::from(!tw.is_empty());
        let e = region_to_endpoints(&r).unwrap();
        let a: Vec<i64> = e.starts().iter().map(|p| p.x).collect();
        let c: Vec<i64> = e.ends().iter().map(|p| p.x).collect();
        let det = determinant(&lgv_matrix_half(&a, &c).unwrap()).unwrap();
        assert_eq!(tiling_gf(&r).unwrap(), det, "{r:?}");
    }
    assert!(nonempty > 50);
}

#[test]
fn quarter_hexagon_weights_match_path_families() {
    for r in quarter_regions(4, 5) {
        assert_eq!(sorted_tiling_weights(&r), sorted_family_weights(&r), "{r:?}");
    }
}

#[test]
fn odd_quarter_hexagons_match_product_formula() {
    for r in quarter_regions(4, 6).into_iter().filter(|r| r.label_offset == 1) {
        let e = region_to_endpoints(&r).unwrap();
        let Some(first) = e.starts().first() else {
            continue;
        };
        let x = first.y;
        let a: Vec<i64> = e.ends().iter().map(|p| p.x - 2 * x).collect();
        let gf = quarter_family_gf(e.m(), x, &a).unwrap();
        assert_eq!(tiling_gf(&r).unwrap(), gf, "{r:?}");
    }
}

#[test]
fn three_by_two_count_matches_families() {
    let r = Region::half(3, 2, vec![1], vec![2]).unwrap();
    let tilings = enumerate_tilings(&r).unwrap();
    assert_eq!(tilings.len(), sorted_family_weights(&r).len());
    assert!(!tilings.is_empty());
}

#[test]
fn labels_are_constant_in_columns() {
    for r in half_regions(3, 3, 3) {
        for t in enumerate_tilings(&r).unwrap() {
            for l in t.lozenges.iter().filter(|l| l.orientation == lozenge::regions::Orientation::Vertical) {
                // The label only depends on the horizontal position.
                assert_eq!(r.position(l.row, l.col), r.position(l.row + 1, l.col + 1));
            }
        }
    }
}

#[test]
fn widening_multiplies_by_shift_quotients() {
    for r in half_regions(2, 3, 3) {
        let base = tiling_gf(&r).unwrap();
        if base.is_zero() {
            continue;
        }
        let e = region_to_endpoints(&r).unwrap();
        for d in 1..=2 {
            let wide = tiling_gf(&r.widened(d)).unwrap();
            let factor: RatFunc = e
                .starts()
                .iter()
                .zip(e.ends())
                .map(|(s, t)| shift_quotient(s.x, t.x, d))
                .product();
            assert_eq!(&wide / &base, factor, "{r:?} d={d}");
        }
    }
}

#[test]
fn mirror_swaps_x_and_y() {
    let swap = Substitution::new()
        .with(Var::X, RatFunc::var(Var::Y))
        .with(Var::Y, RatFunc::var(Var::X));
    for r in half_regions(3, 3, 3) {
        let gf = tiling_gf(&r).unwrap();
        let mirrored = tiling_gf(&r.mirrored()).unwrap();
        assert_eq!(mirrored, gf.substitute(&swap).unwrap(), "{r:?}");
    }
}

#[test]
fn quarter_modes_are_fixed() {
    let r = Region::quarter(2, 4, vec![2, 4], 1).unwrap();
    assert_eq!(r.weight_mode, WeightMode::UnitXYHalfZero);
}
