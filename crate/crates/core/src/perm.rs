//! Permutations in one-line notation, their statistics, and the
//! enumeration-based constructions of `A_n(x,y|α,β)` and `d_n(x,y,q)`.
//!
//! Words are 1-based: a permutation of `[n]` holds the values `1..=n`.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::poly::{Monomial, RationalPoly, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("{0:?} is not a permutation of [n]")]
    NotAPermutation(Vec<u32>),
    #[error("cannot parse permutation: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn new(word: Vec<u32>) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let i = v as usize;
            if i == 0 || i > n || seen[i] {
                return Err(PermError::NotAPermutation(word));
            }
            seen[i] = true;
        }
        Ok(Perm(word))
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u32).collect())
    }

    pub fn word(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn statistics(&self) -> StatBundle {
        StatBundle::of(&self.0)
    }

    /// Cuts the word after each right-to-left minimum; each segment is a
    /// cycle with its minimum last.
    pub fn to_cycles(&self) -> CyclePerm {
        let w = &self.0;
        let mut cycles = Vec::new();
        let mut min = u32::MAX;
        let mut cuts = Vec::new();
        for i in (0..w.len()).rev() {
            if w[i] < min {
                min = w[i];
                cuts.push(i);
            }
        }
        let mut start = 0;
        for &cut in cuts.iter().rev() {
            cycles.push(w[start..=cut].to_vec());
            start = cut + 1;
        }
        debug_assert_eq!(start, w.len());
        CyclePerm { cycles }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Perm {
    type Err = PermError;

    /// Accepts `"8 4 9 6 1 2 5 3 7"`, `"8,4,9"` or, for n ≤ 9, the compact
    /// form `"849612537"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || PermError::Parse(s.to_string());
        let word: Vec<u32> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Perm::new(word)
    }
}

/// Every statistic the identities use, computed by direct scans.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct StatBundle {
    pub n: usize,
    pub asc: usize,
    pub des: usize,
    pub lrmax: usize,
    pub rlmax: usize,
    pub lrmin: usize,
    pub rlmin: usize,
    /// Interior peaks `σ_{i-1} < σ_i > σ_{i+1}`, `2 ≤ i ≤ n-1`.
    pub peaks: usize,
    pub exc: usize,
    pub drop: usize,
    pub fix: usize,
    pub cyc: usize,
}

impl StatBundle {
    pub fn of(w: &[u32]) -> StatBundle {
        let n = w.len();
        let mut s = StatBundle {
            n,
            ..Default::default()
        };
        for i in 1..n {
            if w[i - 1] < w[i] {
                s.asc += 1;
            } else {
                s.des += 1;
            }
        }
        for i in 1..n.saturating_sub(1) {
            if w[i - 1] < w[i] && w[i] > w[i + 1] {
                s.peaks += 1;
            }
        }
        let (mut hi, mut lo) = (0, u32::MAX);
        for &v in w {
            if v > hi {
                hi = v;
                s.lrmax += 1;
            }
            if v < lo {
                lo = v;
                s.lrmin += 1;
            }
        }
        let (mut hi, mut lo) = (0, u32::MAX);
        for &v in w.iter().rev() {
            if v > hi {
                hi = v;
                s.rlmax += 1;
            }
            if v < lo {
                lo = v;
                s.rlmin += 1;
            }
        }
        for (i, &v) in w.iter().enumerate() {
            let pos = i as u32 + 1;
            match v.cmp(&pos) {
                std::cmp::Ordering::Greater => s.exc += 1,
                std::cmp::Ordering::Less => s.drop += 1,
                std::cmp::Ordering::Equal => s.fix += 1,
            }
        }
        s.cyc = cycle_count(w);
        s
    }
}

impl fmt::Display for StatBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "des={} asc={} lrmin={} rlmin={} peaks={} lrmax={} rlmax={} exc={} drop={} fix={} cyc={}",
            self.des, self.asc, self.lrmin, self.rlmin, self.peaks, self.lrmax, self.rlmax, self.exc,
            self.drop, self.fix, self.cyc
        )
    }
}

/// Number of cycles of `i ↦ w[i]`.
pub fn cycle_count(w: &[u32]) -> usize {
    let mut seen = vec![false; w.len()];
    let mut count = 0;
    for start in 0..w.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = w[i] as usize - 1;
        }
    }
    count
}

/// Cycle notation with the minimum of each cycle last and cycles sorted by
/// their minima.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclePerm {
    cycles: Vec<Vec<u32>>,
}

impl CyclePerm {
    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// One-line notation of the function the cycles describe: each element
    /// maps to its successor, the last element of a cycle to the first.
    pub fn to_function(&self) -> Perm {
        let n: usize = self.cycles.iter().map(Vec::len).sum();
        let mut w = vec![0; n];
        for c in &self.cycles {
            for (k, &e) in c.iter().enumerate() {
                w[e as usize - 1] = c[(k + 1) % c.len()];
            }
        }
        Perm(w)
    }
}

impl fmt::Display for CyclePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            let parts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    All,
    Derangements,
}

impl Family {
    #[inline]
    fn admits(self, w: &[u32]) -> bool {
        match self {
            Family::All => true,
            Family::Derangements => w.iter().enumerate().all(|(i, &v)| v as usize != i + 1),
        }
    }
}

/// Steps `w` to its lexicographic successor; `false` at the last word.
pub fn next_permutation(w: &mut [u32]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Lexicographic stream of the permutations of `[n]` in a family.
#[derive(Debug, Clone)]
pub struct PermIter {
    word: Vec<u32>,
    family: Family,
    done: bool,
}

impl Iterator for PermIter {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        while !self.done {
            let out = self
                .family
                .admits(&self.word)
                .then(|| Perm(self.word.clone()));
            self.done = !next_permutation(&mut self.word);
            if out.is_some() {
                return out;
            }
        }
        None
    }
}

pub fn enumerate(n: usize, family: Family) -> PermIter {
    PermIter {
        word: (1..=n as u32).collect(),
        family,
        done: false,
    }
}

/// Tallies `key(w)` over every word of `[n]` in `family`. Words are split
/// by their first letter into independent chunks summed on the rayon pool;
/// the resulting map does not depend on the split.
pub fn par_tally<K, F>(n: usize, family: Family, key: F) -> HashMap<K, u64>
where
    K: Eq + Hash + Send,
    F: Fn(&[u32]) -> K + Sync,
{
    if n == 0 {
        let mut m = HashMap::new();
        m.insert(key(&[]), 1);
        return m;
    }
    (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut local = HashMap::new();
            let mut w: Vec<u32> = std::iter::once(first)
                .chain((1..=n as u32).filter(|&v| v != first))
                .collect();
            loop {
                if family.admits(&w) {
                    *local.entry(key(&w)).or_insert(0u64) += 1;
                }
                if !next_permutation(&mut w) || w[0] != first {
                    break;
                }
            }
            local
        })
        .reduce(HashMap::new, merge_tallies)
}

pub(crate) fn merge_tallies<K: Eq + Hash>(
    mut a: HashMap<K, u64>,
    b: HashMap<K, u64>,
) -> HashMap<K, u64> {
    if a.len() < b.len() {
        return merge_tallies(b, a);
    }
    for (k, c) in b {
        *a.entry(k).or_insert(0) += c;
    }
    a
}

/// Which pair of statistics defines `A_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EulerianForm {
    /// `x^des y^asc α^(lrmax-1) β^(rlmax-1)`.
    MaxForm,
    /// `x^asc y^des α^(lrmin-1) β^(rlmin-1)`.
    MinForm,
}

/// Monomial weight of a word under `form`.
pub fn eulerian_weight(w: &[u32], form: EulerianForm) -> Monomial {
    use VarId::*;
    let s = StatBundle::of(w);
    let (x, y, al, be) = match form {
        EulerianForm::MaxForm => (s.des, s.asc, s.lrmax - 1, s.rlmax - 1),
        EulerianForm::MinForm => (s.asc, s.des, s.lrmin - 1, s.rlmin - 1),
    };
    Monomial::from_pairs(&[
        (X, x as u32),
        (Y, y as u32),
        (Alpha, al as u32),
        (Beta, be as u32),
    ])
}

/// `A_n(x,y|α,β)` summed over `S_{n+1}`.
pub fn eulerian_by_enumeration(n: usize, form: EulerianForm) -> RationalPoly {
    RationalPoly::from_counts(par_tally(n + 1, Family::All, |w| eulerian_weight(w, form)))
}

/// `d_n(x,y,q) = Σ_{σ ∈ D_n} x^exc y^drop q^cyc`.
pub fn derangement_poly(n: usize) -> RationalPoly {
    use VarId::*;
    RationalPoly::from_counts(par_tally(n, Family::Derangements, |w| {
        let s = StatBundle::of(w);
        Monomial::from_pairs(&[(X, s.exc as u32), (Y, s.drop as u32), (Q, s.cyc as u32)])
    }))
}
