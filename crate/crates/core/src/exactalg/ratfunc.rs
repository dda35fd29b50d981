//! Rational functions over the exact rationals with factored denominators.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::mpoly::{MPoly, Monomial, Var};
use super::rat::BigRat;
use crate::error::{Error, Result};

/// A quotient `num / (f_1^e_1 * ... * f_k^e_k)`.
///
/// Every denominator factor is in unit normal form (coprime integer
/// coefficients, positive leading coefficient, lowest `q`-exponent zero), so
/// all scalars and powers of `q` live in the numerator. Binomials `q^k ± 1` are
/// split into cyclotomic polynomials on entry. Common factors between the
/// numerator and the denominator are cancelled by trial division; that keeps
/// the representation small but does not make it canonical, so equality is
/// always decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFunc {
    num: MPoly,
    den: Vec<(MPoly, u32)>,
}

thread_local! {
    static CYCLOTOMIC: RefCell<HashMap<u32, MPoly>> = RefCell::new(HashMap::new());
}

/// The `n`-th cyclotomic polynomial in `q`.
pub fn cyclotomic(n: u32) -> MPoly {
    assert!(n > 0);
    if let Some(p) = CYCLOTOMIC.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    let mut p = &MPoly::q_pow(n as i32) - &MPoly::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p.div_exact(&cyclotomic(d)).expect("cyclotomic division is exact");
        }
    }
    CYCLOTOMIC.with(|c| c.borrow_mut().insert(n, p.clone()));
    p
}

/// Factors of a unit-normal polynomial: monomial parts are split into single
/// variables and `q^k ± 1` into cyclotomic factors; anything else is kept whole.
fn split_normalized(p: MPoly) -> Vec<MPoly> {
    let mut out = Vec::new();
    let mut p = p;
    for v in [Var::X, Var::Y, Var::T] {
        let e = p.min_degree(v);
        if e > 0 {
            for _ in 0..e {
                out.push(MPoly::var(v));
            }
            p = p.mul_monomial(&BigRat::one(), &Monomial::var(v, -e));
        }
    }
    if p.is_one() {
        return out;
    }
    if p.max_degree(Var::T) >= 2 && !p.contains_var(Var::X) && !p.contains_var(Var::Y) {
        if let Some((lin, rest)) = t_linear_factor(&p) {
            out.push(lin);
            out.extend(split_normalized(rest.unit_normal().2));
            return out;
        }
    }
    if is_pure_q(&p) && p.len() > 2 {
        return split_cyclotomic(p);
    }
    if let [(m0, c0), (m1, c1)] = p.terms() {
        let k = m1.exp(Var::Q);
        let pure_q = m0.is_one() && m1.0[1..] == [0, 0, 0] && k > 0;
        if pure_q && c1.is_one() && c0.abs().is_one() {
            let k = k as u32;
            if c0.signum() < 0 {
                out.extend((1..=k).filter(|d| k.is_multiple_of(*d)).map(cyclotomic));
            } else {
                out.extend(
                    (1..=2 * k)
                        .filter(|d| (2 * k).is_multiple_of(*d) && !k.is_multiple_of(*d))
                        .map(cyclotomic),
                );
            }
            return out;
        }
    }
    out.push(p);
    out
}

fn is_pure_q(p: &MPoly) -> bool {
    [Var::X, Var::Y, Var::T].iter().all(|&v| !p.contains_var(v))
}

/// Trial division by cyclotomic polynomials; the cofactor is kept whole.
fn split_cyclotomic(mut p: MPoly) -> Vec<MPoly> {
    let mut out = Vec::new();
    let deg = p.max_degree(Var::Q) as u32;
    for d in 1..=2 * deg {
        let phi = cyclotomic(d);
        while p.max_degree(Var::Q) >= phi.max_degree(Var::Q) {
            match p.div_exact(&phi) {
                Some(rest) => {
                    p = rest;
                    out.push(phi.clone());
                }
                None => break,
            }
        }
        if p.max_degree(Var::Q) == 0 {
            break;
        }
    }
    if !p.is_one() {
        out.push(p.unit_normal().2);
    }
    out
}

/// A factor `1 - q^k T` of a polynomial in `q` and `T`, in unit-normal form, with the cofactor.
fn t_linear_factor(p: &MPoly) -> Option<(MPoly, MPoly)> {
    let span = p.max_degree(Var::Q) - p.min_degree(Var::Q);
    let two = BigRat::from_int(2);
    for k in -span..=span {
        let point = [two.clone(), BigRat::one(), BigRat::one(), two.pow(-k)];
        if !p.eval(&point).is_some_and(|v| v.is_zero()) {
            continue;
        }
        let lin = (&MPoly::one() - &MPoly::term(BigRat::one(), Monomial([k, 0, 0, 1]))).unit_normal().2;
        if let Some(rest) = p.div_exact(&lin) {
            return Some((lin, rest));
        }
    }
    None
}

/// `p = unit * q^shift * prod(factors)`.
fn factor_poly(p: &MPoly) -> (BigRat, i32, Vec<MPoly>) {
    let (unit, shift, prim) = p.unit_normal();
    (unit, shift, split_normalized(prim))
}

fn expand(factors: &[(MPoly, u32)]) -> MPoly {
    factors
        .iter()
        .fold(MPoly::one(), |acc, (f, e)| &acc * &f.pow(*e))
}

fn add_factor(den: &mut Vec<(MPoly, u32)>, f: MPoly, e: u32) {
    match den.binary_search_by(|(g, _)| g.cmp(&f)) {
        Ok(i) => den[i].1 += e,
        Err(i) => den.insert(i, (f, e)),
    }
}

/// Divides out denominator factors that divide the numerator.
fn cancel(num: &mut MPoly, den: &mut Vec<(MPoly, u32)>) {
    if num.is_zero() {
        den.clear();
        return;
    }
    for (f, e) in den.iter_mut() {
        while *e > 0 {
            match num.div_exact(f) {
                Some(q) => {
                    *num = q;
                    *e -= 1;
                }
                None => break,
            }
        }
    }
    den.retain(|(_, e)| *e > 0);
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: MPoly::zero(), den: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_poly(MPoly::one())
    }

    pub fn from_poly(num: MPoly) -> Self {
        RatFunc { num, den: Vec::new() }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_poly(MPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(MPoly::from_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::constant(BigRat::new(n, d))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MPoly::var(v))
    }

    pub fn q_pow(e: i32) -> Self {
        Self::from_poly(MPoly::q_pow(e))
    }

    /// `c * q^a * X^b * Y^c * T^d`.
    pub fn monomial(c: BigRat, m: Monomial) -> Self {
        assert!(m.0[1..].iter().all(|e| *e >= 0), "only q may carry negative exponents");
        Self::from_poly(MPoly::term(c, m))
    }

    /// `num / den` for polynomials; fails when `den` is zero.
    pub fn from_fraction(num: MPoly, den: &MPoly) -> Result<Self> {
        RatFunc::from_poly(num).checked_div(&RatFunc::from_poly(den.clone()))
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator_factors(&self) -> &[(MPoly, u32)] {
        &self.den
    }

    pub fn denominator(&self) -> MPoly {
        expand(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// The value if this is a rational constant.
    pub fn as_constant(&self) -> Option<BigRat> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Returns `c * mono` when the function is a single monomial.
    pub fn as_monomial(&self) -> Option<(BigRat, Monomial)> {
        if !self.den.is_empty() {
            return None;
        }
        self.num.as_monomial().map(|(c, m)| (c.clone(), *m))
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<RatFunc> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (unit, shift, factors) = factor_poly(&self.num);
        let mut num = expand(&self.den)
            .mul_monomial(&unit.recip().unwrap(), &Monomial::q(-shift));
        let mut den = Vec::new();
        for f in factors {
            add_factor(&mut den, f, 1);
        }
        cancel(&mut num, &mut den);
        Ok(RatFunc { num, den })
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let e = e as u32;
        Ok(RatFunc {
            num: self.num.pow(e),
            den: self.den.iter().map(|(f, k)| (f.clone(), k * e)).collect(),
        })
    }

    pub fn scale(&self, c: &BigRat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_monomial(&self, c: &BigRat, m: &Monomial) -> RatFunc {
        self * &RatFunc::monomial(c.clone(), *m)
    }

    /// Whether the function is independent of `v`.
    ///
    /// A syntactic check is tried first; otherwise `f` is compared with its
    /// specialization at `v = 0` (or `v = 1`), which is `v`-free and equals `f`
    /// exactly when `f` does not depend on `v`.
    pub fn is_free_of(&self, v: Var) -> bool {
        if !self.num.contains_var(v) && self.den.iter().all(|(f, _)| !f.contains_var(v)) {
            return true;
        }
        for value in [0, 1, 2] {
            if v == Var::Q && value == 0 {
                continue;
            }
            let mut s = Substitution::new();
            s.set(v, RatFunc::from_int(value));
            if let Ok(spec) = self.substitute(&s) {
                return &spec == self;
            }
        }
        false
    }

    /// Exact substitution of the given variables, followed by normalization.
    pub fn substitute(&self, s: &Substitution) -> Result<RatFunc> {
        if let Some(map) = s.monomial_map() {
            let num = self.num.subst_monomial(&map).ok_or(Error::DivisionByZero)?;
            let mut out = RatFunc::from_poly(num);
            for (f, e) in &self.den {
                let g = f.subst_monomial(&map).ok_or(Error::DivisionByZero)?;
                if g.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                out = out.checked_div(&RatFunc::from_poly(g).pow(*e as i32)?)?;
            }
            return Ok(out);
        }
        let num = subst_general(&self.num, s)?;
        let mut out = num;
        for (f, e) in &self.den {
            let g = subst_general(f, s)?;
            if g.is_zero() {
                return Err(Error::DivisionByZero);
            }
            out = out.checked_div(&g.pow(*e as i32)?)?;
        }
        Ok(out)
    }

    /// Evaluates at a rational point `(q, X, Y, T)`.
    pub fn eval(&self, point: &[BigRat; 4]) -> Result<BigRat> {
        let n = self.num.eval(point).ok_or(Error::DivisionByZero)?;
        let mut d = BigRat::one();
        for (f, e) in &self.den {
            let v = f.eval(point).ok_or(Error::DivisionByZero)?;
            d = &d * &v.pow(*e as i32);
        }
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&n / &d)
    }

    /// Canonical text form used in reports and golden files.
    pub fn canonical(&self) -> String {
        self.to_string()
    }

    /// Numerators of `self` and `rhs` over their common denominator.
    fn over_common(&self, rhs: &RatFunc) -> (MPoly, MPoly, Vec<(MPoly, u32)>) {
        if self.den == rhs.den {
            return (self.num.clone(), rhs.num.clone(), self.den.clone());
        }
        let mut lcm = self.den.clone();
        for (f, e) in &rhs.den {
            match lcm.binary_search_by(|(g, _)| g.cmp(f)) {
                Ok(i) => lcm[i].1 = lcm[i].1.max(*e),
                Err(i) => lcm.insert(i, (f.clone(), *e)),
            }
        }
        let missing = |den: &[(MPoly, u32)]| -> Vec<(MPoly, u32)> {
            lcm.iter()
                .filter_map(|(f, e)| {
                    let have = den
                        .binary_search_by(|(g, _)| g.cmp(f))
                        .map(|i| den[i].1)
                        .unwrap_or(0);
                    (*e > have).then(|| (f.clone(), e - have))
                })
                .collect()
        };
        let a = &self.num * &expand(&missing(&self.den));
        let b = &rhs.num * &expand(&missing(&rhs.den));
        (a, b, lcm)
    }
}

/// Clears the denominators of a row: returns polynomials `p_j` and the least common
/// factored denominator `L` with `row[j] = p_j / L`.
pub(crate) fn clear_denominators(row: &[RatFunc]) -> (Vec<MPoly>, Vec<(MPoly, u32)>) {
    let mut lcm: Vec<(MPoly, u32)> = Vec::new();
    for f in row {
        for (g, e) in &f.den {
            match lcm.binary_search_by(|(h, _)| h.cmp(g)) {
                Ok(i) => lcm[i].1 = lcm[i].1.max(*e),
                Err(i) => lcm.insert(i, (g.clone(), *e)),
            }
        }
    }
    let polys = row
        .iter()
        .map(|f| {
            let missing: Vec<(MPoly, u32)> = lcm
                .iter()
                .filter_map(|(g, e)| {
                    let have = f
                        .den
                        .binary_search_by(|(h, _)| h.cmp(g))
                        .map(|i| f.den[i].1)
                        .unwrap_or(0);
                    (*e > have).then(|| (g.clone(), e - have))
                })
                .collect();
            &f.num * &expand(&missing)
        })
        .collect();
    (polys, lcm)
}

/// `num / prod(den)` for unit-normal denominator factors, with cancellation.
pub(crate) fn from_parts(num: MPoly, den: Vec<(MPoly, u32)>) -> RatFunc {
    let mut merged = Vec::new();
    for (f, e) in den {
        add_factor(&mut merged, f, e);
    }
    let mut num = num;
    cancel(&mut num, &mut merged);
    RatFunc { num, den: merged }
}

/// A partial assignment of the four variables.
#[derive(Clone, Default)]
pub struct Substitution {
    values: [Option<RatFunc>; 4],
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, value: RatFunc) -> Self {
        self.set(v, value);
        self
    }

    pub fn set(&mut self, v: Var, value: RatFunc) {
        self.values[v.index()] = Some(value);
    }

    pub fn get(&self, v: Var) -> Option<&RatFunc> {
        self.values[v.index()].as_ref()
    }

    /// `Some` when every assigned value is zero or a single monomial.
    fn monomial_map(&self) -> Option<[Option<Option<(BigRat, Monomial)>>; 4]> {
        let mut out: [Option<Option<(BigRat, Monomial)>>; 4] = Default::default();
        for v in Var::ALL {
            if let Some(val) = &self.values[v.index()] {
                if val.is_zero() {
                    out[v.index()] = Some(None);
                } else {
                    out[v.index()] = Some(Some(val.as_monomial()?));
                }
            }
        }
        Some(out)
    }
}

fn subst_general(p: &MPoly, s: &Substitution) -> Result<RatFunc> {
    let mut acc = RatFunc::zero();
    for (m, c) in p.terms() {
        let mut term = RatFunc::constant(c.clone());
        for v in Var::ALL {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let factor = match s.get(v) {
                Some(val) => val.pow(e)?,
                None => RatFunc::monomial(BigRat::one(), Monomial::var(v, e)),
            };
            term = &term * &factor;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        let (a, b, _) = self.over_common(other);
        a == b
    }
}

impl Eq for RatFunc {}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (a, b, mut den) = self.over_common(rhs);
        let mut num = &a + &b;
        cancel(&mut num, &mut den);
        RatFunc { num, den }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let mut na = self.num.clone();
        let mut db = rhs.den.clone();
        cancel(&mut na, &mut db);
        let mut nb = rhs.num.clone();
        let mut da = self.den.clone();
        cancel(&mut nb, &mut da);
        for (f, e) in db {
            add_factor(&mut da, f, e);
        }
        let mut num = &na * &nb;
        cancel(&mut num, &mut da);
        RatFunc { num, den: da }
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::checked_div`] otherwise.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for RatFunc {
    fn product<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::one(), |a, b| &a * &b)
    }
}

fn wrap(p: &MPoly) -> String {
    if p.len() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "{}/(", wrap(&self.num))?;
        for (k, (g, e)) in self.den.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{}", wrap(g))?;
            } else {
                write!(f, "{}^{e}", wrap(g))?;
            }
        }
        f.write_str(")")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
