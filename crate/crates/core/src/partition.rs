//! Integer partitions, hook membership, and hook lengths.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A partition: weakly decreasing sequence of positive integers.
///
/// The empty sequence is the unique partition of 0. Trailing zeros are
/// stripped at construction so each partition has one canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the remaining
    /// sequence is not weakly decreasing or contains an interior zero.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(Error::NotWeaklyDecreasing(parts))
        }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The i-th part (0-based), or 0 when the partition has fewer rows.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of (positive) parts.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The transpose partition. An involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j as u64).count() as u64)
            .collect();
        Partition { parts }
    }

    /// True iff the partition lies in the `(k,l)` hook, i.e. its `(k+1)`-th
    /// part (0 if absent) is at most `l`.
    pub fn in_hook(&self, h: HookBound) -> bool {
        self.part(h.k as usize) <= h.l
    }

    /// Hook length of every cell, row-major. Entry `(i,j)` is
    /// `parts[i] - j + conj[j] - i - 1` in 0-based indices.
    pub fn hook_lengths(&self) -> Vec<Vec<u64>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (0..len as usize)
                    .map(|j| len - j as u64 + conj.part(j) - i as u64 - 1)
                    .collect()
            })
            .collect()
    }
}

/// The `(k,l)` hook bound: at most `k` unconstrained rows, the rest of
/// length at most `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HookBound {
    pub k: u64,
    pub l: u64,
}

impl HookBound {
    pub fn new(k: u64, l: u64) -> Self {
        HookBound { k, l }
    }

    /// Swaps the row and column bound; matches conjugation of shapes.
    pub fn transpose(self) -> Self {
        HookBound { k: self.l, l: self.k }
    }
}

/// All partitions of `n` inside the `(k,l)` hook, lexicographically
/// decreasing. `(0,0)` with `n > 0` yields the empty list.
pub fn enumerate_hook(h: HookBound, n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill_hook(h, n, u64::MAX, &mut stack, &mut out);
    out
}

fn fill_hook(h: HookBound, remaining: u64, max_part: u64, stack: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    let mut cap = max_part.min(remaining);
    if stack.len() as u64 >= h.k {
        cap = cap.min(h.l);
    }
    for part in (1..=cap).rev() {
        stack.push(part);
        fill_hook(h, remaining - part, part, stack, out);
        stack.pop();
    }
}

/// The rectangular sub-hook family of the `(2,2)` hook:
/// `(k+2, k+2, 2^(m-2-k))` for `n = 2m` and `(k+3, k+2, 2^(m-2-k))` for
/// `n = 2m+1`, with `k = 0..=m-2`. Requires `n >= 4`.
pub fn enumerate_star(n: u64) -> Result<Vec<Partition>> {
    if n < 4 {
        return Err(Error::OutOfDomain(format!("star family needs n >= 4, got {n}")));
    }
    let m = n / 2;
    let odd = n % 2 == 1;
    let shapes = (0..=m - 2)
        .map(|k| {
            let mut parts = vec![if odd { k + 3 } else { k + 2 }, k + 2];
            parts.extend(std::iter::repeat(2).take((m - 2 - k) as usize));
            let p = Partition { parts };
            debug_assert_eq!(p.size(), n);
            p
        })
        .collect();
    Ok(shapes)
}

impl fmt::Display for Partition {
    /// Run-compressed form: `(4,2,2,2,1)` prints as `4,2^3,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&p| p == part).count();
            if !first {
                write!(f, ",")?;
            }
            if run >= 2 {
                write!(f, "{part}^{run}")?;
            } else {
                write!(f, "{part}")?;
            }
            first = false;
            i += run;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `4,2^3,1` as `(4,2,2,2,1)`. The empty string is the empty
    /// partition. Rejects sequences that are not weakly decreasing.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (base, reps) = match token.split_once('^') {
                Some((b, e)) => {
                    let reps: u64 = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
                    (b.trim(), reps)
                }
                None => (token, 1),
            };
            let base: u64 = base
                .parse()
                .map_err(|_| Error::Parse(format!("bad part in {token:?}")))?;
            parts.extend(std::iter::repeat(base).take(reps as usize));
        }
        Partition::new(parts)
    }
}
