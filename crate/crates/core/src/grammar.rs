//! Formal derivatives of context-free grammars.
//!
//! A grammar maps letters to polynomials; its formal derivative acts on a
//! polynomial by `D(p) = Σ_v rule(v) · ∂p/∂v`. Letters without a rule are
//! constants.

use std::collections::BTreeMap;

use crate::poly::{Monomial, PolyError, RationalPoly, VarId};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GrammarRules {
    rules: BTreeMap<VarId, RationalPoly>,
}

impl GrammarRules {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_rule(mut self, v: VarId, image: RationalPoly) -> Self {
        if image.is_zero() {
            self.rules.remove(&v);
        } else {
            self.rules.insert(v, image);
        }
        self
    }

    /// `a → αay, b → βbx, x → xy, y → xy`.
    pub fn alpha_beta_eulerian() -> Self {
        use VarId::*;
        let m = |pairs: &[(VarId, u32)]| RationalPoly::monomial(Monomial::from_pairs(pairs));
        GrammarRules::new()
            .with_rule(A, m(&[(Alpha, 1), (A, 1), (Y, 1)]))
            .with_rule(B, m(&[(Beta, 1), (B, 1), (X, 1)]))
            .with_rule(X, m(&[(X, 1), (Y, 1)]))
            .with_rule(Y, m(&[(X, 1), (Y, 1)]))
    }

    pub fn rule(&self, v: VarId) -> Option<&RationalPoly> {
        self.rules.get(&v)
    }

    pub fn formal_derivative(&self, p: &RationalPoly) -> RationalPoly {
        let mut out = RationalPoly::zero();
        for (v, image) in &self.rules {
            let d = p.partial_derivative(*v);
            if !d.is_zero() {
                out += &(image * &d);
            }
        }
        out
    }

    /// `D^n(seed)`.
    pub fn iterate(&self, seed: &RationalPoly, n: usize) -> RationalPoly {
        let mut p = seed.clone();
        for _ in 0..n {
            p = self.formal_derivative(&p);
        }
        p
    }
}

fn ab() -> Monomial {
    Monomial::from_pairs(&[(VarId::A, 1), (VarId::B, 1)])
}

/// `A_n(x,y|α,β) = D^n(ab) / ab` under `alpha_beta_eulerian`.
pub fn eulerian_via_grammar(n: usize) -> Result<RationalPoly, PolyError> {
    let g = GrammarRules::alpha_beta_eulerian();
    g.iterate(&RationalPoly::monomial(ab()), n)
        .divide_exact_by_monomial(&ab())
}

/// `A_0 ..= A_max_n`, sharing the derivative chain.
pub fn eulerian_table_via_grammar(max_n: usize) -> Result<Vec<RationalPoly>, PolyError> {
    let g = GrammarRules::alpha_beta_eulerian();
    let mut p = RationalPoly::monomial(ab());
    let mut out = Vec::with_capacity(max_n + 1);
    for _ in 0..=max_n {
        out.push(p.divide_exact_by_monomial(&ab())?);
        p = g.formal_derivative(&p);
    }
    Ok(out)
}
