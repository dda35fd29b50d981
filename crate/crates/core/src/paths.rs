//! Single lattice paths with right and down steps.
//!
//! A right step `(a, b) -> (a + 1, b)` carries the label `a - 2b` and, in the
//! general weighting, the weight `w_l = (X q^l + Y q^{-l}) / 2`; down steps
//! have weight 1. [`gf_brute`] sums path weights directly from the step
//! recursion and serves as the oracle for every closed form in this module.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::exactalg::{qpoch, BigRat, MPoly, Monomial, RatFunc, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }
}

/// How labelled steps are weighted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum WeightMode {
    /// `w_l = (X q^l + Y q^{-l}) / 2`.
    #[default]
    GeneralXY,
    /// `X = Y = 1`, except that label 0 has weight `1/2`.
    UnitXYHalfZero,
}

/// Weight of a right step with the given label, as a Laurent polynomial.
pub fn label_weight(label: i64, mode: WeightMode) -> MPoly {
    let half = BigRat::new(1, 2);
    let l = label as i32;
    match mode {
        WeightMode::GeneralXY => MPoly::from_terms([
            (Monomial([l, 1, 0, 0]), half.clone()),
            (Monomial([-l, 0, 1, 0]), half),
        ]),
        WeightMode::UnitXYHalfZero if label == 0 => MPoly::constant(half),
        WeightMode::UnitXYHalfZero => MPoly::from_terms([
            (Monomial::q(l), half.clone()),
            (Monomial::q(-l), half),
        ]),
    }
}

/// Weight of the right step leaving `(a, b)`.
pub fn step_weight(a: i64, b: i64, mode: WeightMode) -> RatFunc {
    RatFunc::from_poly(label_weight(a - 2 * b, mode))
}

/// Generating function of all paths from `(a, b)` to `(c, d)`, summed from the recursion
/// `gf(a,b,c,d) = w(a,b) gf(a+1,b,c,d) + gf(a,b-1,c,d)`.
pub fn gf_brute(a: i64, b: i64, c: i64, d: i64, mode: WeightMode) -> RatFunc {
    RatFunc::from_poly(gf_brute_poly(a, b, c, d, mode))
}

pub(crate) fn gf_brute_poly(a: i64, b: i64, c: i64, d: i64, mode: WeightMode) -> MPoly {
    if a > c || b < d {
        return MPoly::zero();
    }
    // The value only depends on (right steps left, down steps left, current label).
    let mut memo: HashMap<(i64, i64, i64), MPoly> = HashMap::new();
    let mut weights: HashMap<i64, MPoly> = HashMap::new();
    fn go(
        n: i64,
        h: i64,
        label: i64,
        mode: WeightMode,
        memo: &mut HashMap<(i64, i64, i64), MPoly>,
        weights: &mut HashMap<i64, MPoly>,
    ) -> MPoly {
        if n < 0 || h < 0 {
            return MPoly::zero();
        }
        if n == 0 {
            return MPoly::one();
        }
        if let Some(v) = memo.get(&(n, h, label)) {
            return v.clone();
        }
        let w = weights
            .entry(label)
            .or_insert_with(|| label_weight(label, mode))
            .clone();
        let right = go(n - 1, h, label + 1, mode, memo, weights);
        let down = go(n, h - 1, label + 2, mode, memo, weights);
        let v = &(&w * &right) + &down;
        memo.insert((n, h, label), v.clone());
        v
    }
    go(c - a, b - d, a - 2 * b, mode, &mut memo, &mut weights)
}

fn one_minus_q(e: i64) -> RatFunc {
    RatFunc::from_poly(&MPoly::one() - &MPoly::q_pow(e as i32))
}

/// Product formula for the general-weight generating function from `(a, b)` to `(c, d)`.
pub fn gf_closed(a: i64, b: i64, c: i64, d: i64) -> RatFunc {
    if a > c || b < d {
        return RatFunc::zero();
    }
    let half = BigRat::new(1, 2);
    let mut acc = RatFunc::one();
    for j in 1..=(c - a) {
        let lin = MPoly::from_terms([
            (Monomial([(j - 1 - 2 * b + a) as i32, 1, 0, 0]), half.clone()),
            (Monomial([(-j + 1 + 2 * d - a) as i32, 0, 1, 0]), half.clone()),
        ]);
        let ratio = &one_minus_q(2 * (b - d) + 2 * j) / &one_minus_q(2 * j);
        acc = &(&acc * &RatFunc::from_poly(lin)) * &ratio;
    }
    acc
}

/// Generating function of paths from `(a, a)` to `(c, 0)`.
pub fn gfone(a: i64, c: i64) -> RatFunc {
    if c < a {
        return RatFunc::zero();
    }
    let mut acc = RatFunc::monomial(
        BigRat::from_int(2).pow((a - c) as i32),
        Monomial::q((a * (a - c)) as i32),
    );
    for j in 1..=(c - a) {
        let lin = MPoly::from_terms([
            (Monomial([(j - 1) as i32, 1, 0, 0]), BigRat::one()),
            (Monomial([(1 - j) as i32, 0, 1, 0]), BigRat::one()),
        ]);
        let ratio = &one_minus_q(2 * a + 2 * j) / &one_minus_q(2 * j);
        acc = &(&acc * &RatFunc::from_poly(lin)) * &ratio;
    }
    acc
}

fn qq(e: i64, base: i32, n: i64) -> RatFunc {
    qpoch(&RatFunc::q_pow(e as i32), base, n).expect("positive q-Pochhammer index")
}

/// The factor by which `gfone(a, c)` changes when both endpoints move right by `d`.
pub fn shift_quotient(a: i64, c: i64, d: i64) -> RatFunc {
    let top = &qq(2 * d + 2, 2, c) / &(&RatFunc::q_pow((d * c) as i32) * &qq(2, 2, c));
    let bottom = &(&RatFunc::q_pow((d * a) as i32) * &qq(2, 2, a)) / &qq(2 * d + 2, 2, a);
    &top * &bottom
}

/// Closed form of `gf_closed(a, b, c, d)` at `X = Y = 1`.
pub fn gf_xy1(a: i64, b: i64, c: i64, d: i64) -> RatFunc {
    if a > c || b < d {
        return RatFunc::zero();
    }
    let n = c - a;
    let e = (a - c) * (a + c - 1 - 4 * d) / 2;
    let pre = RatFunc::monomial(BigRat::from_int(2).pow((a - c) as i32), Monomial::q(e as i32));
    let neg = qpoch(
        &RatFunc::monomial(BigRat::from_int(-1), Monomial::q((2 * a - 2 * b - 2 * d) as i32)),
        2,
        n,
    )
    .unwrap();
    &(&(&pre * &neg) * &qq(2 * b - 2 * d + 2, 2, n)) / &qq(2, 2, n)
}

/// Generating function of paths from `(2b+1, b)` to `(c, 0)` with `X = Y = 1`.
pub fn gftwo(b: i64, c: i64) -> RatFunc {
    if c < 2 * b + 1 {
        return RatFunc::zero();
    }
    let n = c - 2 * b - 1;
    let pre = RatFunc::monomial(
        BigRat::from_int(2).pow((2 * b + 1 - c) as i32),
        Monomial::q((b * (2 * b + 1) - c * (c - 1) / 2) as i32),
    );
    &(&pre * &qq(4 * b + 4, 4, n)) / &qq(2, 2, n)
}

/// Generating function of paths from `(2b, b)` to `(c, 0)` where a first right step of
/// label 0 weighs `1/2`: `gf_xy1(2b+1, b, c, 0) / 2 + gf_xy1(2b, b-1, c, 0)`.
///
/// For `c >= 2b + 1` this is
/// `2^{2b-c} q^{b(2b-1) - c(c-1)/2} (1 - q^{2c}) (q^{4b+4}; q^4)_{c-2b-1} / (q^2; q^2)_{c-2b}`.
pub fn gfthree(b: i64, c: i64) -> RatFunc {
    if b >= 0 && c > 2 * b {
        let pre = RatFunc::monomial(
            BigRat::from_int(2).pow((2 * b - c) as i32),
            Monomial::q((b * (2 * b - 1) - (c - 1) * c / 2) as i32),
        );
        let top = &(&pre * &one_minus_q(2 * c)) * &qq(4 * b + 4, 4, c - 2 * b - 1);
        return &top / &qq(2, 2, c - 2 * b);
    }
    gfthree_definition(b, c)
}

pub(crate) fn gfthree_definition(b: i64, c: i64) -> RatFunc {
    &gf_xy1(2 * b + 1, b, c, 0).scale(&BigRat::new(1, 2)) + &gf_xy1(2 * b, b - 1, c, 0)
}

/// True when `f` does not involve `X` or `Y`.
pub fn is_xy_free(f: &RatFunc) -> bool {
    f.is_free_of(Var::X) && f.is_free_of(Var::Y)
}
