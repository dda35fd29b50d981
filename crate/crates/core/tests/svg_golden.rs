use std::path::PathBuf;

use lozenge::regions::{enumerate_tilings, render_svg, Region};

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares with the stored file; `LOZENGE_BLESS=1` rewrites it.
fn check(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("LOZENGE_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap();
    assert_eq!(actual, expected, "{name} differs from the golden file");
}

#[test]
fn half_hexagon_with_tiling() {
    let r = Region::half(2, 3, vec![1, 3], vec![2]).unwrap();
    let t = enumerate_tilings(&r).unwrap();
    assert!(!t.is_empty());
    let svg = render_svg(&r, Some(&t[0]));
    assert_eq!(svg.matches("<polygon").count(), 3 * t[0].lozenges.len());
    check("half_2x3.svg", &svg);
}

#[test]
fn quarter_hexagon_outline() {
    let r = Region::quarter(2, 4, vec![2, 4], 1).unwrap();
    check("quarter_2x4.svg", &render_svg(&r, None));
}
