//! Admissible sequences, Dyck paths and block decomposition.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest length accepted by [`enumerate_admissible`].
pub const ADMISSIBLE_MAX: usize = 12;

/// A strictly increasing sequence `a_1 < ... < a_m` with `2i - 1 <= a_i <= 2m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct AdmissibleSeq {
    values: Vec<i64>,
}

impl AdmissibleSeq {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if !Self::is_admissible(&values) {
            return Err(Error::InvalidSequence(format!("{} is not admissible", Fmt(&values))));
        }
        Ok(AdmissibleSeq { values })
    }

    /// Whether `values` is strictly increasing with `2i - 1 <= a_i <= 2m`.
    pub fn is_admissible(values: &[i64]) -> bool {
        let m = values.len() as i64;
        values.windows(2).all(|w| w[0] < w[1])
            && (1..).zip(values).all(|(i, &a)| 2 * i - 1 <= a && a <= 2 * m)
    }

    /// `2i + 1 <= a_i` for `i < m` and `a_m = 2m`.
    pub fn is_irreducible(&self) -> bool {
        let m = self.m() as i64;
        m > 0
            && self.values[self.m() - 1] == 2 * m
            && (1..m).all(|i| self.values[(i - 1) as usize] > 2 * i)
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn m(&self) -> usize {
        self.values.len()
    }
}

impl TryFrom<Vec<i64>> for AdmissibleSeq {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        AdmissibleSeq::new(v)
    }
}

impl From<AdmissibleSeq> for Vec<i64> {
    fn from(a: AdmissibleSeq) -> Vec<i64> {
        a.values
    }
}

struct Fmt<'a>(&'a [i64]);

impl fmt::Display for Fmt<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Display for AdmissibleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Fmt(&self.values).fmt(f)
    }
}

/// Parses a comma separated list, optionally in parentheses, e.g. `(3,6,7,8)`.
pub fn parse_sequence(s: &str) -> Result<Vec<i64>> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|e| Error::InvalidSequence(format!("{p:?}: {e}")))
        })
        .collect()
}

impl FromStr for AdmissibleSeq {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AdmissibleSeq::new(parse_sequence(s)?)
    }
}

/// All admissible sequences of length `m`, in lexicographic order.
pub fn enumerate_admissible(m: usize) -> Result<Vec<AdmissibleSeq>> {
    if m > ADMISSIBLE_MAX {
        return Err(Error::LimitExceeded(format!("length {m} (limit {ADMISSIBLE_MAX})")));
    }
    fn go(m: i64, cur: &mut Vec<i64>, out: &mut Vec<AdmissibleSeq>) {
        let i = cur.len() as i64 + 1;
        if i > m {
            out.push(AdmissibleSeq { values: cur.clone() });
            return;
        }
        let lo = (2 * i - 1).max(cur.last().map_or(i64::MIN, |&v| v + 1));
        for a in lo..=2 * m {
            cur.push(a);
            go(m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m as i64, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> u64 {
    (0..n).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    Up,
    Down,
}

/// A path of up and down steps that starts and ends at height 0 and never goes below it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h = 0i64;
        for s in &steps {
            h += if *s == Step::Up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidSequence("Dyck path goes below zero".into()));
            }
        }
        if h != 0 {
            return Err(Error::InvalidSequence("Dyck path does not return to zero".into()));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Half the length.
    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::Up { "U" } else { "D" })?;
        }
        Ok(())
    }
}

/// The Dyck path of length `2(m+1)` whose down steps sit at the positions `a_1, ..., a_m`
/// and `2m + 1` (counting from 0).
pub fn dyck_from_admissible(a: &AdmissibleSeq) -> DyckPath {
    let n = 2 * (a.m() + 1);
    let mut steps = vec![Step::Up; n];
    for &v in a.values() {
        steps[v as usize] = Step::Down;
    }
    steps[n - 1] = Step::Down;
    DyckPath { steps }
}

/// Inverse of [`dyck_from_admissible`].
pub fn admissible_from_dyck(d: &DyckPath) -> Result<AdmissibleSeq> {
    let downs: Vec<i64> = (0..)
        .zip(d.steps())
        .filter(|(_, s)| **s == Step::Down)
        .map(|(i, _)| i)
        .collect();
    match downs.split_last() {
        Some((_, rest)) => AdmissibleSeq::new(rest.to_vec()),
        None => Err(Error::InvalidSequence("empty Dyck path".into())),
    }
}

/// All Dyck paths of semilength `m`, generated step by step.
pub fn enumerate_dyck(m: usize) -> Vec<DyckPath> {
    fn go(m: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if downs == m {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if ups < m {
            cur.push(Step::Up);
            go(m, ups + 1, downs, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(Step::Down);
            go(m, ups, downs + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// A block of the decomposition together with its width offset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub seq: AdmissibleSeq,
    /// The block's matrix is evaluated at `x + offset`.
    pub offset: i64,
}

/// Splits `a` at every `k < m` with `a_k <= 2k`; the tail `(a_{k+1} - 2k, ...)` is taken at
/// width offset `k`.
pub fn reduce_blocks(a: &AdmissibleSeq) -> Vec<Block> {
    let mut out = Vec::new();
    let mut rest = a.values().to_vec();
    let mut offset = 0;
    while !rest.is_empty() {
        let m = rest.len() as i64;
        let split = (1..m).find(|&k| rest[(k - 1) as usize] <= 2 * k);
        match split {
            Some(k) => {
                let head = rest[..k as usize].to_vec();
                out.push(Block { seq: AdmissibleSeq { values: head }, offset });
                rest = rest[k as usize..].iter().map(|v| v - 2 * k).collect();
                offset += k;
            }
            None => {
                out.push(Block { seq: AdmissibleSeq { values: rest }, offset });
                break;
            }
        }
    }
    out
}
