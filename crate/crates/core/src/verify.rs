//! Identity checks: each one computes two sides by different routes and
//! compares them exactly.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::forest::{
    alpha_gamma_from_forests, total_plane_weight, total_support_weight, ForestError, WeightRuleSet,
};
use crate::grammar::eulerian_via_grammar;
use crate::ibtree::{sum_weights, LabelScheme, TreeError};
use crate::perm::{derangement_poly, eulerian_by_enumeration, EulerianForm};
use crate::poly::{gamma_expand, rational, Monomial, PolyError, RationalPoly, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{id} at n={n} exceeds the configured budget n <= {budget}")]
    BudgetExceeded {
        id: CheckId,
        n: usize,
        budget: usize,
    },
    #[error("{id} is stated for n >= {min}, got n={n}")]
    OutOfDomain { id: CheckId, n: usize, min: usize },
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Forest(#[from] ForestError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    /// `D^n(ab)/ab` against the permutation sum.
    Grammar,
    /// Labeled tree sum over `[n+1]` against `ab·A_n`.
    TreeSum,
    /// Supporting forests on `[n]` against `A_n`.
    SupportForest,
    /// Plane forests under `AlphaBeta` against `A_n`.
    PlaneForest,
    /// Collected `Alpha` forest weights against the γ-expansion of `A_n(x,y|α)`.
    GammaAlpha,
    /// Fully planted forests against `d_n(x,y,q)`.
    GammaDerangement,
    /// First against second modified labeling sums.
    ModifiedPair,
    /// First modified labeling sum against `Modified` forests.
    LeftForest,
    /// Second modified labeling sum against `Modified` forests.
    RightForest,
    /// Signed half-weighted sum over `S_{n+1}` against `Σ_{D_n} (-1)^exc`.
    SignedHalf,
    /// The same, split by `lrmin + rlmin - 2 = k` and cycle count `k`.
    SignedRefined,
    /// Max-statistic against min-statistic definition.
    DefEquivalence,
    /// `A_n(x,y|α,β) = A_n(y,x|β,α)`.
    SymReversal,
}

impl CheckId {
    pub const ALL: [CheckId; 13] = [
        CheckId::Grammar,
        CheckId::TreeSum,
        CheckId::SupportForest,
        CheckId::PlaneForest,
        CheckId::GammaAlpha,
        CheckId::GammaDerangement,
        CheckId::ModifiedPair,
        CheckId::LeftForest,
        CheckId::RightForest,
        CheckId::SignedHalf,
        CheckId::SignedRefined,
        CheckId::DefEquivalence,
        CheckId::SymReversal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Grammar => "T11_grammar",
            CheckId::TreeSum => "T22_treeSum",
            CheckId::SupportForest => "T23_supportForest",
            CheckId::PlaneForest => "T24_planeForest",
            CheckId::GammaAlpha => "T25_gammaAlpha",
            CheckId::GammaDerangement => "T26_gammaDerangement",
            CheckId::ModifiedPair => "T31_stembridgeAB",
            CheckId::LeftForest => "T32_leftForest",
            CheckId::RightForest => "T33_rightForest",
            CheckId::SignedHalf => "T34_signedHalf",
            CheckId::SignedRefined => "T34_refined",
            CheckId::DefEquivalence => "DEF_equivalence",
            CheckId::SymReversal => "SYM_reversal",
        }
    }

    /// Largest `n` allowed by `budgets`.
    pub fn budget(self, budgets: &Budgets) -> usize {
        match self {
            CheckId::SymReversal => budgets.grammar,
            CheckId::Grammar
            | CheckId::TreeSum
            | CheckId::SignedHalf
            | CheckId::SignedRefined
            | CheckId::DefEquivalence => budgets.permutations,
            CheckId::SupportForest
            | CheckId::PlaneForest
            | CheckId::GammaAlpha
            | CheckId::ModifiedPair
            | CheckId::LeftForest
            | CheckId::RightForest => budgets.forests,
            CheckId::GammaDerangement => budgets.derangements,
        }
    }

    /// Smallest `n` the identity is stated for.
    pub fn min_n(self) -> usize {
        match self {
            CheckId::ModifiedPair | CheckId::LeftForest | CheckId::RightForest => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| VerifyError::UnknownCheck(s.to_string()))
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Per-route caps on `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub grammar: usize,
    /// Checks enumerating `S_{n+1}`.
    pub permutations: usize,
    pub forests: usize,
    pub derangements: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            grammar: 20,
            permutations: 8,
            forests: 7,
            derangements: 9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub id: CheckId,
    pub n: usize,
    pub status: Status,
    pub lhs: RationalPoly,
    pub rhs: RationalPoly,
    pub elapsed: Duration,
    /// First monomial where the sides differ.
    pub witness: Option<Monomial>,
}

#[derive(Serialize)]
struct ReportRow {
    id: CheckId,
    n: usize,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// JSON row; timing is omitted unless asked for so that reports are
    /// reproducible byte for byte.
    pub fn to_json(&self, timings: bool) -> serde_json::Value {
        serde_json::to_value(ReportRow {
            id: self.id,
            n: self.n,
            status: self.status,
            elapsed_ms: timings.then_some(self.elapsed.as_millis()),
            witness: self.witness.map(|m| m.to_string()),
        })
        .expect("report json")
    }
}

pub fn reports_to_json(reports: &[CheckReport], timings: bool) -> String {
    let rows: Vec<_> = reports.iter().map(|r| r.to_json(timings)).collect();
    serde_json::to_string(&rows).expect("report json")
}

fn ab() -> RationalPoly {
    RationalPoly::monomial(Monomial::from_pairs(&[(VarId::A, 1), (VarId::B, 1)]))
}

fn strip_ab(p: &RationalPoly) -> Result<RationalPoly, PolyError> {
    p.divide_exact_by_monomial(&Monomial::from_pairs(&[(VarId::A, 1), (VarId::B, 1)]))
}

/// Tree-route sum `Σ_{S_{n+1}} (-1)^des (q/2)^(lrmin+rlmin-2)`.
fn signed_tree_side(n: usize) -> Result<RationalPoly, VerifyError> {
    use VarId::*;
    let trees = strip_ab(&sum_weights(n + 1, LabelScheme::AbAlphaBeta)?)?;
    let half_q = RationalPoly::var(Q).scale(&rational(1, 2));
    Ok(trees.substitute_pairs(&[
        (X, RationalPoly::one()),
        (Y, RationalPoly::integer(-1)),
        (Alpha, half_q.clone()),
        (Beta, half_q),
    ]))
}

/// `Σ_{D_n} (-1)^exc q^cyc`.
fn signed_derangement_side(n: usize) -> RationalPoly {
    use VarId::*;
    derangement_poly(n)
        .substitute_pairs(&[(X, RationalPoly::integer(-1)), (Y, RationalPoly::one())])
}

fn at_q_one(p: &RationalPoly) -> RationalPoly {
    p.substitute_pairs(&[(VarId::Q, RationalPoly::one())])
}

fn sides(id: CheckId, n: usize) -> Result<(RationalPoly, RationalPoly), VerifyError> {
    use VarId::*;
    Ok(match id {
        CheckId::Grammar => (
            eulerian_via_grammar(n)?,
            eulerian_by_enumeration(n, EulerianForm::MinForm),
        ),
        CheckId::TreeSum => (
            sum_weights(n + 1, LabelScheme::AbAlphaBeta)?,
            &ab() * &eulerian_via_grammar(n)?,
        ),
        CheckId::SupportForest => (total_support_weight(n), eulerian_via_grammar(n)?),
        CheckId::PlaneForest => (
            total_plane_weight(n, WeightRuleSet::AlphaBeta)?,
            eulerian_via_grammar(n)?,
        ),
        CheckId::GammaAlpha => {
            let a = eulerian_via_grammar(n)?.substitute_pairs(&[(Beta, RationalPoly::var(Alpha))]);
            (
                alpha_gamma_from_forests(n).to_leading_poly(),
                gamma_expand(&a)?.to_leading_poly(),
            )
        }
        CheckId::GammaDerangement => (
            total_plane_weight(n, WeightRuleSet::Derangement)?,
            derangement_poly(n),
        ),
        CheckId::ModifiedPair => (
            strip_ab(&sum_weights(n, LabelScheme::Modified1)?)?,
            strip_ab(&sum_weights(n, LabelScheme::Modified2)?)?,
        ),
        CheckId::LeftForest => (
            strip_ab(&sum_weights(n, LabelScheme::Modified1)?)?,
            total_plane_weight(n - 1, WeightRuleSet::Modified)?,
        ),
        CheckId::RightForest => (
            strip_ab(&sum_weights(n, LabelScheme::Modified2)?)?,
            total_plane_weight(n - 1, WeightRuleSet::Modified)?,
        ),
        CheckId::SignedHalf => (
            at_q_one(&signed_tree_side(n)?),
            at_q_one(&signed_derangement_side(n)),
        ),
        CheckId::SignedRefined => (signed_tree_side(n)?, signed_derangement_side(n)),
        CheckId::DefEquivalence => (
            eulerian_by_enumeration(n, EulerianForm::MaxForm),
            eulerian_by_enumeration(n, EulerianForm::MinForm),
        ),
        CheckId::SymReversal => {
            let a = eulerian_via_grammar(n)?;
            let swapped = a.swap_vars(X, Y).swap_vars(Alpha, Beta);
            (a, swapped)
        }
    })
}

pub fn run_check(id: CheckId, n: usize, budgets: &Budgets) -> Result<CheckReport, VerifyError> {
    let budget = id.budget(budgets);
    if n > budget {
        return Err(VerifyError::BudgetExceeded { id, n, budget });
    }
    if n < id.min_n() {
        return Err(VerifyError::OutOfDomain {
            id,
            n,
            min: id.min_n(),
        });
    }
    let start = Instant::now();
    let (lhs, rhs) = sides(id, n)?;
    let elapsed = start.elapsed();
    let witness = lhs.first_difference(&rhs);
    Ok(CheckReport {
        id,
        n,
        status: if witness.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        lhs,
        rhs,
        elapsed,
        witness,
    })
}

/// Every `(id, n)` pair with `min_n ≤ n ≤ min(max_n, budget)`.
pub fn plan(ids: &[CheckId], max_n: usize, budgets: &Budgets) -> Vec<(CheckId, usize)> {
    let mut jobs = Vec::new();
    for &id in ids {
        for n in id.min_n()..=max_n.min(id.budget(budgets)) {
            jobs.push((id, n));
        }
    }
    jobs.sort();
    jobs
}

/// Runs the planned checks concurrently; reports come back ordered by
/// check id, then `n`.
pub fn run_checks(
    ids: &[CheckId],
    max_n: usize,
    budgets: &Budgets,
) -> Result<Vec<CheckReport>, VerifyError> {
    plan(ids, max_n, budgets)
        .into_par_iter()
        .map(|(id, n)| run_check(id, n, budgets))
        .collect()
}

pub fn run_all(max_n: usize, budgets: &Budgets) -> Vec<CheckReport> {
    run_checks(&CheckId::ALL, max_n, budgets).expect("planned checks stay within budget")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signed_half_small() {
        let b = Budgets::default();
        let r = run_check(CheckId::SignedHalf, 1, &b).unwrap();
        assert!(r.passed());
        assert!(r.lhs.is_zero());
        let r = run_check(CheckId::SignedHalf, 2, &b).unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs, RationalPoly::integer(-1));
    }

    #[test]
    fn grammar_check_n2() {
        let r = run_check(CheckId::Grammar, 2, &Budgets::default()).unwrap();
        assert!(r.passed());
        let a2: RationalPoly = "x*y*alpha + x*y*beta + 2*x*y*alpha*beta + x^2*beta^2 + y^2*alpha^2"
            .parse()
            .unwrap();
        assert_eq!(r.lhs, a2);
        assert_eq!(r.rhs, a2);
    }

    #[test]
    fn budgets_and_domain() {
        let b = Budgets::default();
        assert!(matches!(
            run_check(CheckId::PlaneForest, 8, &b),
            Err(VerifyError::BudgetExceeded { budget: 7, .. })
        ));
        assert!(matches!(
            run_check(CheckId::ModifiedPair, 0, &b),
            Err(VerifyError::OutOfDomain { .. })
        ));
        assert_eq!(
            "T34_refined".parse::<CheckId>().unwrap(),
            CheckId::SignedRefined
        );
        assert!("T99".parse::<CheckId>().is_err());
        for id in CheckId::ALL {
            assert_eq!(id.as_str().parse::<CheckId>().unwrap(), id);
        }
    }

    #[test]
    fn run_all_small() {
        for max_n in 0..=2 {
            let reports = run_all(max_n, &Budgets::default());
            assert!(reports.iter().all(CheckReport::passed), "max_n={max_n}");
        }
        let r0 = run_all(0, &Budgets::default());
        assert_eq!(r0.len(), 10);
    }

    #[test]
    fn failing_report_has_witness() {
        let lhs: RationalPoly = "x + y".parse().unwrap();
        let rhs: RationalPoly = "x".parse().unwrap();
        assert_eq!(lhs.first_difference(&rhs), Some(Monomial::var(VarId::Y)));
    }

    #[test]
    fn json_row_shape() {
        let r = run_check(CheckId::PlaneForest, 2, &Budgets::default()).unwrap();
        assert_eq!(
            reports_to_json(&[r], false),
            r#"[{"id":"T24_planeForest","n":2,"status":"pass"}]"#
        );
    }
}
