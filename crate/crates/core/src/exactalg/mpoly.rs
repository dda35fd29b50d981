//! Sparse Laurent polynomials in `q` and ordinary polynomials in `X`, `Y`, `T`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::rat::BigRat;

/// The four indeterminates. `q` may carry negative exponents, the others may not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    X,
    Y,
    T,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Q, Var::X, Var::Y, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::X => "X",
            Var::Y => "Y",
            Var::T => "T",
        }
    }
}

/// Exponent vector `(e_q, e_X, e_Y, e_T)`.
///
/// Ordered graded-lexicographically: total degree first, then `e_q`, `e_X`,
/// `e_Y`, `e_T`. The order is invariant under multiplication by a monomial,
/// which is what exact division relies on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [i32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn q(e: i32) -> Self {
        Monomial([e, 0, 0, 0])
    }

    pub fn var(v: Var, e: i32) -> Self {
        let mut m = [0; 4];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + o.0[0],
            self.0[1] + o.0[1],
            self.0[2] + o.0[2],
            self.0[3] + o.0[3],
        ])
    }

    pub fn div(&self, o: &Monomial) -> Monomial {
        Monomial([
            self.0[0] - o.0[0],
            self.0[1] - o.0[1],
            self.0[2] - o.0[2],
            self.0[3] - o.0[3],
        ])
    }

    /// True if `o` divides `self` in the ordinary polynomial ring (all four exponents).
    fn divisible_by(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a >= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", MonoFmt(self))
    }
}

struct MonoFmt<'a>(&'a Monomial);

impl fmt::Display for MonoFmt<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.0.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial stored as a sorted list of nonzero terms (ascending monomial order).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MPoly {
    terms: Vec<(Monomial, BigRat)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRat::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(BigRat::one(), Monomial::var(v, 1))
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::term(BigRat::one(), Monomial::q(e))
    }

    pub fn term(c: BigRat, m: Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly { terms: vec![(m, c)] }
    }

    /// Collects arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRat)>>(it: I) -> Self {
        let mut acc: FxHashMap<Monomial, BigRat> = FxHashMap::default();
        for (m, c) in it {
            acc.entry(m)
                .and_modify(|e| *e += &c)
                .or_insert(c);
        }
        Self::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Monomial, BigRat>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        MPoly { terms }
    }

    fn from_sorted(terms: Vec<(Monomial, BigRat)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        MPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigRat)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant value, if the polynomial has no variable part.
    pub fn as_constant(&self) -> Option<BigRat> {
        match self.terms.as_slice() {
            [] => Some(BigRat::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// The single term, if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(&BigRat, &Monomial)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((c, m)),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, BigRat)> {
        self.terms.last()
    }

    pub fn max_degree(&self, v: Var) -> i32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self, v: Var) -> i32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).min().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) != 0)
    }

    pub fn scale(&self, c: &BigRat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, c: &BigRat, mono: &Monomial) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        // Multiplying by a monomial preserves the order.
        MPoly {
            terms: self.terms.iter().map(|(m, k)| (m.mul(mono), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    ///
    /// `q` is a unit, so both operands are first shifted to have lowest
    /// `q`-exponent zero; divisibility is then decided in the ordinary
    /// polynomial ring, where a single divisor is a Gröbner basis of the ideal
    /// it generates and a nonzero remainder term is final.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if let Some((c, m)) = d.as_monomial() {
            let inv = c.recip().unwrap();
            if m.0[1..].iter().zip(Var::ALL[1..].iter()).any(|(e, v)| self.min_degree(*v) < *e) {
                return None;
            }
            return Some(self.mul_monomial(&inv, &Monomial([-m.0[0], -m.0[1], -m.0[2], -m.0[3]])));
        }
        for v in [Var::X, Var::Y, Var::T] {
            if self.max_degree(v) < d.max_degree(v) || self.min_degree(v) < d.min_degree(v) {
                return None;
            }
        }
        let span = |p: &MPoly| p.max_degree(Var::Q) - p.min_degree(Var::Q);
        if span(self) < span(d) {
            return None;
        }
        let sq = self.min_degree(Var::Q);
        let dq = d.min_degree(Var::Q);
        let dshift = Monomial::q(-dq);
        let d0: Vec<(Monomial, BigRat)> =
            d.terms.iter().map(|(m, c)| (m.mul(&dshift), c.clone())).collect();
        let (lt, lc) = d0.last().cloned().unwrap();
        let lc_inv = lc.recip().unwrap();
        let mut rem: BTreeMap<Monomial, BigRat> = self
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&Monomial::q(-sq)), c.clone()))
            .collect();
        let mut quot: Vec<(Monomial, BigRat)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !m.divisible_by(&lt) {
                return None;
            }
            let qm = m.div(&lt);
            let qc = &c * &lc_inv;
            for (dm, dc) in &d0[..d0.len() - 1] {
                let key = dm.mul(&qm);
                let delta = -&(&qc * dc);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let v = e.get() + &delta;
                        if v.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = v;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        let back = Monomial::q(sq - dq);
        Some(MPoly::from_sorted(
            quot.into_iter().map(|(m, c)| (m.mul(&back), c)).collect(),
        ))
    }

    /// Rational content: `gcd(numerators) / lcm(denominators)`, signed so that the
    /// leading coefficient of the primitive part is positive.
    pub fn content(&self) -> BigRat {
        if self.is_zero() {
            return BigRat::one();
        }
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            g = g.gcd(&c.numer());
            l = l.lcm(&c.denom());
        }
        let c = BigRat::from_bigints(g, l);
        if self.leading().unwrap().1.signum() < 0 {
            -c
        } else {
            c
        }
    }

    /// Splits `self = unit * q^shift * primitive`, where the primitive part has
    /// coprime integer coefficients, positive leading coefficient and lowest
    /// `q`-exponent zero.
    pub fn unit_normal(&self) -> (BigRat, i32, MPoly) {
        let c = self.content();
        let shift = self.min_degree(Var::Q);
        let inv = c.recip().unwrap();
        let p = self.mul_monomial(&inv, &Monomial::q(-shift));
        (c, shift, p)
    }

    /// Evaluates at a rational point given in `Var::ALL` order. `None` if `q = 0`
    /// is needed with a negative exponent.
    pub fn eval(&self, point: &[BigRat; 4]) -> Option<BigRat> {
        let mut acc = BigRat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let x = &point[v.index()];
                if e < 0 && x.is_zero() {
                    return None;
                }
                t = &t * &x.pow(e);
            }
            acc += &t;
        }
        Some(acc)
    }

    /// Applies monomial substitutions `v -> c * mono` (or `v -> 0` when `None` is
    /// given as the coefficient) to every term.
    pub(crate) fn subst_monomial(&self, map: &[Option<Option<(BigRat, Monomial)>>; 4]) -> Option<MPoly> {
        let mut out = Vec::with_capacity(self.terms.len());
        'terms: for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = Monomial::ONE;
            for v in Var::ALL {
                let e = m.exp(v);
                match &map[v.index()] {
                    None => mono.0[v.index()] += e,
                    Some(None) => {
                        if e > 0 {
                            continue 'terms;
                        }
                        if e < 0 {
                            return None;
                        }
                    }
                    Some(Some((k, mm))) => {
                        if e == 0 {
                            continue;
                        }
                        coeff = &coeff * &k.pow(e);
                        let scaled = Monomial([mm.0[0] * e, mm.0[1] * e, mm.0[2] * e, mm.0[3] * e]);
                        mono = mono.mul(&scaled);
                    }
                }
            }
            out.push((mono, coeff));
        }
        Some(MPoly::from_terms(out))
    }

    /// Coefficient extraction with respect to one variable: returns `(exponent, coefficient)` pairs.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<i32, MPoly> {
        let mut groups: BTreeMap<i32, Vec<(Monomial, BigRat)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = *m;
            rest.0[v.index()] = 0;
            groups.entry(m.exp(v)).or_default().push((rest, c.clone()));
        }
        groups
            .into_iter()
            .map(|(e, ts)| (e, MPoly::from_terms(ts)))
            .collect()
    }
}

fn merge(a: &[(Monomial, BigRat)], b: &[(Monomial, BigRat)], negate_b: bool) -> MPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (*m, if negate_b { -c } else { c.clone() })));
    MPoly::from_sorted(out)
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        if let Some((c, m)) = rhs.as_monomial() {
            return self.mul_monomial(c, m);
        }
        if let Some((c, m)) = self.as_monomial() {
            return rhs.mul_monomial(c, m);
        }
        let mut acc: FxHashMap<Monomial, BigRat> =
            FxHashMap::with_capacity_and_hasher(self.len() * rhs.len() / 2 + 1, Default::default());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let p = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|e| *e += &p)
                    .or_insert(p);
            }
        }
        MPoly::from_map(acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for MPoly {
    /// Canonical text form: terms in descending monomial order, e.g. `q^2*X - 1/2*q^-1 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.signum() < 0;
            let a = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", MonoFmt(m))?;
            } else {
                write!(f, "{a}*{}", MonoFmt(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `true` when every coefficient is a nonnegative integer.
pub fn has_nonnegative_integer_coefficients(p: &MPoly) -> bool {
    p.terms().iter().all(|(_, c)| c.is_integer() && c.signum() >= 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MPoly {
        MPoly::var(Var::Q)
    }

    #[test]
    fn display_is_descending_and_signed() {
        let p = &(&q() * &MPoly::var(Var::X)) - &MPoly::constant(BigRat::new(1, 2));
        let p = &p + &MPoly::q_pow(-1);
        assert_eq!(p.to_string(), "q*X - 1/2 + q^-1");
    }

    #[test]
    fn exact_division_by_cyclotomic_binomial() {
        let one = MPoly::one();
        let a = &one - &MPoly::q_pow(6);
        let b = &one - &MPoly::q_pow(2);
        let quot = a.div_exact(&b).unwrap();
        assert_eq!(quot.to_string(), "q^4 + q^2 + 1");
        assert!(b.div_exact(&(&one - &MPoly::q_pow(4))).is_none());
    }

    #[test]
    fn laurent_division_handles_negative_exponents() {
        let x = MPoly::var(Var::X);
        let f = &(&x * &MPoly::q_pow(3)) + &(&MPoly::var(Var::Y) * &MPoly::q_pow(-3));
        let g = &MPoly::q_pow(-7) - &(&MPoly::var(Var::T) * &MPoly::q_pow(2));
        let prod = &f * &g;
        assert_eq!(prod.div_exact(&f).unwrap(), g);
        assert_eq!(prod.div_exact(&g).unwrap(), f);
        assert!(f.div_exact(&g).is_none());
    }

    #[test]
    fn unit_normal_form() {
        let p = MPoly::from_terms([
            (Monomial::q(-2), BigRat::new(-3, 2)),
            (Monomial::q(0), BigRat::new(3, 4)),
        ]);
        let (c, s, prim) = p.unit_normal();
        assert_eq!(s, -2);
        assert_eq!(c, BigRat::new(3, 4));
        assert_eq!(prim.to_string(), "q^2 - 2");
    }
}
