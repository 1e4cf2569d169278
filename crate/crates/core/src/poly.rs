//! Sparse multivariate polynomials with big-rational coefficients over a
//! closed eight-letter alphabet.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so equality of two
//! polynomials is equality of their term maps and iteration order is
//! deterministic. The canonical (printing) order is lexicographic descending
//! in the alphabet order `x, y, a, b, alpha, beta, q, z`.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Number of letters in the alphabet.
pub const NVARS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("term {term} is not divisible by {divisor}")]
    NotDivisible { term: Monomial, divisor: Monomial },
    #[error("block {rest} is not symmetric under x <-> y")]
    NotSymmetric { rest: Monomial },
    #[error("block {rest} mixes (x,y)-degrees {first} and {second}")]
    NotHomogeneous {
        rest: Monomial,
        first: u32,
        second: u32,
    },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// A letter of the fixed alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    X = 0,
    Y = 1,
    A = 2,
    B = 3,
    Alpha = 4,
    Beta = 5,
    Q = 6,
    Z = 7,
}

impl VarId {
    pub const ALL: [VarId; NVARS] = [
        VarId::X,
        VarId::Y,
        VarId::A,
        VarId::B,
        VarId::Alpha,
        VarId::Beta,
        VarId::Q,
        VarId::Z,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            VarId::X => "x",
            VarId::Y => "y",
            VarId::A => "a",
            VarId::B => "b",
            VarId::Alpha => "alpha",
            VarId::Beta => "beta",
            VarId::Q => "q",
            VarId::Z => "z",
        }
    }

    pub fn from_name(name: &str) -> Option<VarId> {
        VarId::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector, one entry per [`VarId`] in alphabet order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial([u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn new(exponents: [u32; NVARS]) -> Self {
        Monomial(exponents)
    }

    pub fn var(v: VarId) -> Self {
        Self::ONE.with_exponent(v, 1)
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated
    /// variables accumulate.
    pub fn from_pairs(pairs: &[(VarId, u32)]) -> Self {
        let mut e = [0; NVARS];
        for &(v, k) in pairs {
            e[v.index()] += k;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32; NVARS] {
        &self.0
    }

    #[inline]
    pub fn exponent(&self, v: VarId) -> u32 {
        self.0[v.index()]
    }

    pub fn with_exponent(mut self, v: VarId, e: u32) -> Self {
        self.0[v.index()] = e;
        self
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    /// `self / other` when every exponent of `other` is available.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_sub(b)?;
        }
        Some(Monomial(e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in VarId::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exact polynomial in canonical sparse form: no stored coefficient is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl RationalPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::var(v), BigRational::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        RationalPoly { terms }
    }

    /// Collects `(monomial, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = RationalPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    /// Integer tallies, as produced by the enumeration routes.
    pub fn from_counts<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, u64)>,
    {
        Self::from_terms(
            iter.into_iter()
                .map(|(m, c)| (m, BigRational::from_integer(c.into()))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (lexicographic descending).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> RationalPoly {
        if c.is_zero() {
            return RationalPoly::zero();
        }
        RationalPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> RationalPoly {
        let mut result = RationalPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn partial_derivative(&self, v: VarId) -> RationalPoly {
        let mut out = RationalPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let dm = m.with_exponent(v, e - 1);
            out.add_term(dm, c * BigRational::from_integer(e.into()));
        }
        out
    }

    /// Simultaneous substitution; unbound variables are left unchanged.
    pub fn substitute(&self, bindings: &BTreeMap<VarId, RationalPoly>) -> RationalPoly {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut powers: BTreeMap<(VarId, u32), RationalPoly> = BTreeMap::new();
        let mut out = RationalPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::ONE;
            let mut factor = RationalPoly::one();
            for v in VarId::ALL {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                match bindings.get(&v) {
                    Some(p) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| p.pow(e));
                        factor = &factor * &*pw;
                    }
                    None => kept = kept.with_exponent(v, e),
                }
            }
            for (fm, fc) in factor.terms {
                out.add_term(fm.mul(&kept), fc * c);
            }
        }
        out
    }

    /// Convenience over [`RationalPoly::substitute`] for a list of bindings.
    pub fn substitute_pairs(&self, pairs: &[(VarId, RationalPoly)]) -> RationalPoly {
        let map: BTreeMap<_, _> = pairs.iter().cloned().collect();
        self.substitute(&map)
    }

    /// Exchanges two letters.
    pub fn swap_vars(&self, u: VarId, v: VarId) -> RationalPoly {
        let mut out = RationalPoly::zero();
        for (m, c) in &self.terms {
            let mut e = *m.exponents();
            e.swap(u.index(), v.index());
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Value with every letter set to 1.
    pub fn evaluate_at_ones(&self) -> BigRational {
        self.terms.values().sum()
    }

    pub fn divide_exact_by_monomial(&self, m: &Monomial) -> Result<RationalPoly, PolyError> {
        let mut terms = BTreeMap::new();
        for (t, c) in &self.terms {
            let q = t.checked_div(m).ok_or(PolyError::NotDivisible {
                term: *t,
                divisor: *m,
            })?;
            terms.insert(q, c.clone());
        }
        Ok(RationalPoly { terms })
    }

    /// Maximum exponent of `v` over all terms.
    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// First monomial (canonical order) whose coefficients differ.
    pub fn first_difference(&self, other: &RationalPoly) -> Option<Monomial> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort_unstable_by(|a, b| b.cmp(a));
        keys.dedup();
        keys.into_iter()
            .find(|m| self.terms.get(m) != other.terms.get(m))
            .copied()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(JsonPoly::from(self)).expect("polynomial json")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<RationalPoly, PolyError> {
        let raw: JsonPoly =
            serde_json::from_value(value.clone()).map_err(|e| PolyError::Parse(e.to_string()))?;
        raw.try_into()
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl FromStr for RationalPoly {
    type Err = PolyError;

    /// Parses the canonical text form, e.g. `x^2*beta^2 - 1/2*x*y + 3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        let mut out = RationalPoly::zero();
        let mut chunks = Vec::new();
        let mut sign = 1i64;
        let mut cur = String::new();
        for ch in compact.chars() {
            match ch {
                '+' | '-' if !cur.is_empty() && !cur.ends_with('^') => {
                    chunks.push((sign, std::mem::take(&mut cur)));
                    sign = if ch == '-' { -1 } else { 1 };
                }
                '+' if cur.is_empty() => {}
                '-' if cur.is_empty() => sign = -sign,
                _ => cur.push(ch),
            }
        }
        if cur.is_empty() {
            return Err(PolyError::Parse(format!("dangling sign in {s:?}")));
        }
        chunks.push((sign, cur));

        for (sign, chunk) in chunks {
            let mut coeff = BigRational::from_integer(sign.into());
            let mut mono = Monomial::ONE;
            for factor in chunk.split('*') {
                if factor.is_empty() {
                    return Err(PolyError::Parse(format!("empty factor in {chunk:?}")));
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    coeff *= parse_rational(factor)?;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<u32>()
                            .map_err(|_| PolyError::Parse(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                let v = VarId::from_name(name)
                    .ok_or_else(|| PolyError::Parse(format!("unknown variable {name:?}")))?;
                mono = mono.mul(&Monomial::ONE.with_exponent(v, exp));
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

fn parse_rational(s: &str) -> Result<BigRational, PolyError> {
    let bad = || PolyError::Parse(format!("bad coefficient {s:?}"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl Add<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;

    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RationalPoly {
    type Output = RationalPoly;

    fn add(mut self, rhs: RationalPoly) -> RationalPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&RationalPoly> for RationalPoly {
    fn add_assign(&mut self, rhs: &RationalPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Sub<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;

    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Sub for RationalPoly {
    type Output = RationalPoly;

    fn sub(self, rhs: RationalPoly) -> RationalPoly {
        &self - &rhs
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;

    fn neg(self) -> RationalPoly {
        RationalPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        let mut out = RationalPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: RationalPoly) -> RationalPoly {
        &self * &rhs
    }
}

impl Sum for RationalPoly {
    fn sum<I: Iterator<Item = RationalPoly>>(iter: I) -> Self {
        iter.fold(RationalPoly::zero(), |acc, p| acc + p)
    }
}

impl From<VarId> for RationalPoly {
    fn from(v: VarId) -> Self {
        RationalPoly::var(v)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonRational {
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    coeff: JsonRational,
    exp: [u32; NVARS],
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<JsonTerm>,
}

impl From<&RationalPoly> for JsonPoly {
    fn from(p: &RationalPoly) -> Self {
        JsonPoly {
            terms: p
                .terms()
                .map(|(m, c)| JsonTerm {
                    coeff: JsonRational {
                        num: c.numer().to_string(),
                        den: c.denom().to_string(),
                    },
                    exp: *m.exponents(),
                })
                .collect(),
        }
    }
}

impl TryFrom<JsonPoly> for RationalPoly {
    type Error = PolyError;

    fn try_from(raw: JsonPoly) -> Result<Self, Self::Error> {
        let mut out = RationalPoly::zero();
        for t in raw.terms {
            let c = parse_rational(&format!("{}/{}", t.coeff.num, t.coeff.den))?;
            out.add_term(Monomial(t.exp), c);
        }
        Ok(out)
    }
}

/// Coefficients of a polynomial in the basis `(xy)^j (x+y)^(d-2j)`, one
/// block per monomial in the remaining letters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GammaExpansion {
    /// `(rest monomial, (x,y)-degree d)` to `γ_0..γ_⌊d/2⌋`.
    pub blocks: BTreeMap<(Monomial, u32), Vec<BigRational>>,
}

impl GammaExpansion {
    /// The basis element `rest * (xy)^j * (x+y)^(d-2j)`.
    pub fn basis(rest: &Monomial, d: u32, j: u32) -> RationalPoly {
        let x_plus_y = RationalPoly::var(VarId::X) + RationalPoly::var(VarId::Y);
        let xy = Monomial::from_pairs(&[(VarId::X, j), (VarId::Y, j)]);
        &RationalPoly::monomial(xy.mul(rest)) * &x_plus_y.pow(d - 2 * j)
    }

    /// Sums `rest * γ_j * basis` over every block; must equal the expanded
    /// polynomial exactly.
    pub fn reconstruct(&self) -> RationalPoly {
        let mut out = RationalPoly::zero();
        for ((rest, d), gammas) in &self.blocks {
            for (j, g) in gammas.iter().enumerate() {
                if !g.is_zero() {
                    out += &Self::basis(rest, *d, j as u32).scale(g);
                }
            }
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.blocks.values().flatten().all(|g| !g.is_negative())
    }

    pub fn coefficient(&self, rest: &Monomial, d: u32, j: usize) -> BigRational {
        self.blocks
            .get(&(*rest, d))
            .and_then(|g| g.get(j).cloned())
            .unwrap_or_else(BigRational::zero)
    }

    /// Injective polynomial encoding: the basis element of `(rest, d, j)`
    /// becomes the monomial `rest * x^(d-j) * y^j`.
    pub fn to_leading_poly(&self) -> RationalPoly {
        let mut out = RationalPoly::zero();
        for ((rest, d), gammas) in &self.blocks {
            for (j, g) in gammas.iter().enumerate() {
                let j = j as u32;
                let m = rest.mul(&Monomial::from_pairs(&[(VarId::X, d - j), (VarId::Y, j)]));
                out.add_term(m, g.clone());
            }
        }
        out
    }

    /// Adds `count` to `γ_j` of block `(rest, d)`.
    pub fn accumulate(&mut self, rest: Monomial, d: u32, j: u32, count: BigRational) {
        let gammas = self
            .blocks
            .entry((rest, d))
            .or_insert_with(|| vec![BigRational::zero(); d as usize / 2 + 1]);
        gammas[j as usize] += count;
    }
}

/// Expands `p` in the basis `(xy)^j (x+y)^(d-2j)`, block by block.
pub fn gamma_expand(p: &RationalPoly) -> Result<GammaExpansion, PolyError> {
    // rest monomial -> (x exponent, y exponent) -> coefficient
    let mut blocks: BTreeMap<Monomial, BTreeMap<(u32, u32), BigRational>> = BTreeMap::new();
    for (m, c) in &p.terms {
        let rest = m.with_exponent(VarId::X, 0).with_exponent(VarId::Y, 0);
        blocks
            .entry(rest)
            .or_default()
            .insert((m.exponent(VarId::X), m.exponent(VarId::Y)), c.clone());
    }

    let mut out = GammaExpansion::default();
    for (rest, mut remainder) in blocks {
        let mut degrees = remainder.keys().map(|(i, j)| i + j);
        let d = degrees.next().expect("non-empty block");
        if let Some(other) = degrees.find(|&e| e != d) {
            return Err(PolyError::NotHomogeneous {
                rest,
                first: d,
                second: other,
            });
        }
        if remainder
            .iter()
            .any(|(&(i, j), c)| remainder.get(&(j, i)) != Some(c))
        {
            return Err(PolyError::NotSymmetric { rest });
        }

        let mut gammas = Vec::with_capacity(d as usize / 2 + 1);
        for j in 0..=d / 2 {
            let g = remainder
                .get(&(d - j, j))
                .cloned()
                .unwrap_or_else(BigRational::zero);
            if !g.is_zero() {
                let basis = GammaExpansion::basis(&Monomial::ONE, d, j);
                for (m, c) in basis.terms() {
                    let key = (m.exponent(VarId::X), m.exponent(VarId::Y));
                    let entry = remainder.entry(key).or_insert_with(BigRational::zero);
                    *entry -= &g * c;
                    if entry.is_zero() {
                        remainder.remove(&key);
                    }
                }
            }
            gammas.push(g);
        }
        if !remainder.is_empty() {
            // symmetric homogeneous input always expands; a leftover means
            // the symmetry check above was bypassed
            return Err(PolyError::NotSymmetric { rest });
        }
        out.blocks.insert((rest, d), gammas);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use VarId::*;

    fn p(s: &str) -> RationalPoly {
        s.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        rational(n, d)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x + y") * &p("x + y"), p("x^2 + 2*x*y + y^2"));
        let q = p("x*beta + y*alpha");
        assert_eq!(&q + &RationalPoly::zero(), q);
        assert_eq!(q.scale(&r(1, 2)), p("1/2*x*beta + 1/2*y*alpha"));
        assert_eq!(q.pow(0), RationalPoly::one());
        assert_eq!(q.pow(2), &q * &q);
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn partial_derivative_examples() {
        assert_eq!(p("a*b").partial_derivative(A), p("b"));
        assert_eq!(p("x^2*y").partial_derivative(X), p("2*x*y"));
        assert!(p("alpha*beta").partial_derivative(X).is_zero());
    }

    #[test]
    fn substitute_examples() {
        let one = RationalPoly::one();
        let q = p("x*beta + y*alpha");
        assert_eq!(
            q.substitute_pairs(&[(Alpha, one.clone()), (Beta, one.clone())]),
            p("x + y")
        );
        let a2 = p("x*y*alpha + x*y*beta + 2*x*y*alpha*beta + x^2*beta^2 + y^2*alpha^2");
        let all_ones: Vec<_> = [X, Y, Alpha, Beta]
            .iter()
            .map(|&v| (v, one.clone()))
            .collect();
        assert_eq!(a2.substitute_pairs(&all_ones), RationalPoly::integer(6));
        let abq = &p("a*b") * &q;
        assert_eq!(abq.substitute_pairs(&[(A, one.clone()), (B, one)]), q);
        // simultaneous, not sequential
        assert_eq!(
            p("x^2*y").substitute_pairs(&[(X, p("y")), (Y, p("x"))]),
            p("x*y^2")
        );
    }

    #[test]
    fn coefficient_examples() {
        let a2 = p("x*y*alpha + x*y*beta + 2*x*y*alpha*beta + x^2*beta^2 + y^2*alpha^2");
        let m = Monomial::from_pairs(&[(X, 1), (Y, 1), (Alpha, 1), (Beta, 1)]);
        assert_eq!(a2.coefficient_of(&m), r(2, 1));
        let m = Monomial::from_pairs(&[(X, 2), (Beta, 2)]);
        assert_eq!(a2.coefficient_of(&m), r(1, 1));
        assert_eq!(RationalPoly::zero().coefficient_of(&m), r(0, 1));
    }

    #[test]
    fn divide_examples() {
        let ab = Monomial::from_pairs(&[(A, 1), (B, 1)]);
        let q = p("x*beta + y*alpha");
        let abq = &RationalPoly::monomial(ab) * &q;
        assert_eq!(abq.divide_exact_by_monomial(&ab).unwrap(), q);
        assert_eq!(
            RationalPoly::monomial(ab)
                .divide_exact_by_monomial(&ab)
                .unwrap(),
            RationalPoly::one()
        );
        assert!(matches!(
            p("x + a*b").divide_exact_by_monomial(&ab),
            Err(PolyError::NotDivisible { .. })
        ));
    }

    #[test]
    fn gamma_examples() {
        let g = gamma_expand(&p("x^2 + 4*x*y + y^2")).unwrap();
        assert_eq!(g.blocks[&(Monomial::ONE, 2)], vec![r(1, 1), r(2, 1)]);
        let g = gamma_expand(&p("x*y")).unwrap();
        assert_eq!(g.blocks[&(Monomial::ONE, 2)], vec![r(0, 1), r(1, 1)]);
        let g = gamma_expand(&p("x^2 + y^2")).unwrap();
        assert_eq!(g.blocks[&(Monomial::ONE, 2)], vec![r(1, 1), r(-2, 1)]);
        assert!(!g.is_nonnegative());
        assert_eq!(g.reconstruct(), p("x^2 + y^2"));
    }

    #[test]
    fn gamma_errors() {
        assert!(matches!(
            gamma_expand(&p("x^2 + x*y")),
            Err(PolyError::NotSymmetric { .. })
        ));
        assert!(matches!(
            gamma_expand(&p("x + x*y")),
            Err(PolyError::NotHomogeneous { .. })
        ));
        // separate blocks may have separate degrees
        let g = gamma_expand(&p("q*x + q*y + q^2*x*y")).unwrap();
        assert_eq!(g.blocks.len(), 2);
        assert!(gamma_expand(&RationalPoly::zero())
            .unwrap()
            .blocks
            .is_empty());
    }

    #[test]
    fn canonical_text() {
        let a2 = p("y^2*alpha^2 + x*y*beta + x*y*alpha + 2*x*y*alpha*beta + x^2*beta^2");
        assert_eq!(
            a2.to_string(),
            "x^2*beta^2 + 2*x*y*alpha*beta + x*y*alpha + x*y*beta + y^2*alpha^2"
        );
        assert_eq!(p("-1/2*x + 3").to_string(), "-1/2*x + 3");
        assert_eq!(p("-x").to_string(), "-x");
        assert_eq!(RationalPoly::zero().to_string(), "0");
        assert!("x + ".parse::<RationalPoly>().is_err());
        assert!("w".parse::<RationalPoly>().is_err());
    }

    #[test]
    fn json_shape() {
        let q = p("2*x*y*alpha*beta + x^2*beta^2");
        let j = q.to_json();
        assert_eq!(
            j.to_string(),
            r#"{"terms":[{"coeff":{"den":"1","num":"1"},"exp":[2,0,0,0,0,2,0,0]},{"coeff":{"den":"1","num":"2"},"exp":[1,1,0,0,1,1,0,0]}]}"#
        );
        assert_eq!(RationalPoly::from_json(&j).unwrap(), q);
    }
}
