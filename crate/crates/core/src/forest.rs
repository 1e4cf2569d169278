//! Supporting forests, their orbit representatives, and forests of planted
//! increasing 0-1-2 plane trees.
//!
//! Detaching every α- and β-vertex of an increasing binary tree together
//! with the subtree on its off-path side gives the *supporting forest*: one
//! planted component per spine vertex. Swapping a leaf with its non-leaf
//! sibling inside a component does not change the component's plane shape,
//! so each orbit is represented by a forest of planted 0-1-2 plane trees.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::ibtree::{expand_tally, IncTree};
use crate::poly::{rational, GammaExpansion, Monomial, RationalPoly, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("a single-vertex tree has no supporting forest")]
    TooSmall,
    #[error("rule set {rules:?} assigns no weight to {class:?}")]
    RuleMismatch {
        rules: WeightRuleSet,
        class: VertexClass,
    },
    #[error("rule set {0:?} does not apply to this kind of forest")]
    WrongForestKind(WeightRuleSet),
}

/// Which spine a component root came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Alpha,
    Beta,
}

/// A root with either no child or one increasing binary subtree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlantedTree {
    pub root: u32,
    pub child: Option<IncTree>,
    /// Spine of origin, when the component was cut from a tree.
    pub origin: Option<Side>,
}

impl PlantedTree {
    pub fn labels(&self) -> Vec<u32> {
        let mut out = vec![self.root];
        if let Some(c) = &self.child {
            out.extend(c.to_word());
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.child.as_ref().map_or(0, IncTree::node_count)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportForest {
    components: Vec<PlantedTree>,
}

impl SupportForest {
    /// Components are kept sorted by root label.
    pub fn new(mut components: Vec<PlantedTree>) -> Self {
        components.sort_by_key(|c| c.root);
        SupportForest { components }
    }

    pub fn components(&self) -> &[PlantedTree] {
        &self.components
    }

    pub fn roots(&self) -> Vec<u32> {
        self.components.iter().map(|c| c.root).collect()
    }

    /// Label sets of the components, in root order.
    pub fn label_sets(&self) -> Vec<Vec<u32>> {
        self.components.iter().map(PlantedTree::labels).collect()
    }

    /// Forgets the spine of origin.
    pub fn unsided(&self) -> SupportForest {
        SupportForest {
            components: self
                .components
                .iter()
                .map(|c| PlantedTree {
                    origin: None,
                    ..c.clone()
                })
                .collect(),
        }
    }

    pub fn shifted(&self, delta: i64) -> SupportForest {
        SupportForest {
            components: self
                .components
                .iter()
                .map(|c| PlantedTree {
                    root: (i64::from(c.root) + delta) as u32,
                    child: c.child.as_ref().map(|t| t.shifted(delta)),
                    origin: c.origin,
                })
                .collect(),
        }
    }
}

fn fmt_inherited(t: &IncTree, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}(", t.label())?;
    match t.left() {
        Some(l) => fmt_inherited(l, f)?,
        None => f.write_str("x")?,
    }
    f.write_str(",")?;
    match t.right() {
        Some(r) => fmt_inherited(r, f)?,
        None => f.write_str("y")?,
    }
    f.write_str(")")
}

impl fmt::Display for SupportForest {
    /// Components in root order with inherited leaf labels, e.g.
    /// `2[x] 3[5(x,y)] 8[y]`; a bare root of unknown origin prints as `2[.]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}[", c.root)?;
            match (&c.child, c.origin) {
                (Some(t), _) => fmt_inherited(t, f)?,
                (None, Some(Side::Beta)) => f.write_str("x")?,
                (None, Some(Side::Alpha)) => f.write_str("y")?,
                (None, None) => f.write_str(".")?,
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// Cuts `tree` at its α- and β-vertices.
pub fn supporting_forest(tree: &IncTree) -> Result<SupportForest, ForestError> {
    if tree.left().is_none() && tree.right().is_none() {
        return Err(ForestError::TooSmall);
    }
    let mut components = Vec::new();
    let mut cur = tree.left();
    while let Some(v) = cur {
        components.push(PlantedTree {
            root: v.label(),
            child: v.right().cloned(),
            origin: Some(Side::Alpha),
        });
        cur = v.left();
    }
    let mut cur = tree.right();
    while let Some(v) = cur {
        components.push(PlantedTree {
            root: v.label(),
            child: v.left().cloned(),
            origin: Some(Side::Beta),
        });
        cur = v.right();
    }
    Ok(SupportForest::new(components))
}

/// Every forest of planted increasing binary trees on `[n]`, each once,
/// built by inserting labels in increasing order: a new label either starts
/// a component or fills a free slot (the child slot of a bare root, or a
/// leaf of an existing subtree).
pub fn enumerate_support_forests(n: usize) -> Vec<SupportForest> {
    let mut level = vec![SupportForest::default()];
    for k in 1..=n as u32 {
        let mut next = Vec::new();
        for f in &level {
            let mut fresh = f.components.clone();
            fresh.push(PlantedTree {
                root: k,
                child: None,
                origin: None,
            });
            next.push(SupportForest { components: fresh });
            for (ci, c) in f.components.iter().enumerate() {
                let grown: Vec<IncTree> = match &c.child {
                    None => vec![IncTree::leaf_parent(k)],
                    Some(t) => (0..=t.node_count())
                        .map(|leaf| t.insert_at_leaf(leaf, k))
                        .collect(),
                };
                for t in grown {
                    let mut comps = f.components.clone();
                    comps[ci].child = Some(t);
                    next.push(SupportForest { components: comps });
                }
            }
        }
        level = next;
    }
    level
}

/// Vertex classes of a planted 0-1-2 plane tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexClass {
    SingleRoot,
    RootWithChild,
    UnaryNonRoot,
    Leaf,
    BinaryNonRoot,
}

impl VertexClass {
    pub const ALL: [VertexClass; 5] = [
        VertexClass::SingleRoot,
        VertexClass::RootWithChild,
        VertexClass::UnaryNonRoot,
        VertexClass::Leaf,
        VertexClass::BinaryNonRoot,
    ];

    fn of(is_root: bool, children: usize) -> VertexClass {
        match (is_root, children) {
            (true, 0) => VertexClass::SingleRoot,
            (true, _) => VertexClass::RootWithChild,
            (false, 0) => VertexClass::Leaf,
            (false, 1) => VertexClass::UnaryNonRoot,
            (false, _) => VertexClass::BinaryNonRoot,
        }
    }

    fn marker(self) -> char {
        match self {
            VertexClass::SingleRoot => 's',
            VertexClass::RootWithChild => 'r',
            VertexClass::UnaryNonRoot => 'u',
            VertexClass::Leaf => 'l',
            VertexClass::BinaryNonRoot => 'b',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneNode {
    pub label: u32,
    /// Ordered; at most one for a root, at most two otherwise.
    pub children: Vec<PlaneNode>,
}

impl PlaneNode {
    fn fmt_rec(&self, is_root: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let class = VertexClass::of(is_root, self.children.len());
        write!(f, "{}{}", self.label, class.marker())?;
        if !self.children.is_empty() {
            f.write_str("[")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                c.fmt_rec(false, f)?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }

    fn visit(&self, is_root: bool, out: &mut impl FnMut(u32, VertexClass)) {
        out(self.label, VertexClass::of(is_root, self.children.len()));
        for c in &self.children {
            c.visit(false, out);
        }
    }

    fn shifted(&self, delta: i64) -> PlaneNode {
        PlaneNode {
            label: (i64::from(self.label) + delta) as u32,
            children: self.children.iter().map(|c| c.shifted(delta)).collect(),
        }
    }
}

/// Forest of planted increasing 0-1-2 plane trees, components in root order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneForest {
    pub components: Vec<PlaneNode>,
}

/// How many vertices of each [`VertexClass`] a forest has.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassCounts([u32; 5]);

impl ClassCounts {
    pub fn count(&self, class: VertexClass) -> u32 {
        self.0[class as usize]
    }

    fn bump(&mut self, class: VertexClass) {
        self.0[class as usize] += 1;
    }

    pub fn weight(&self, rules: WeightRuleSet) -> Result<RationalPoly, ForestError> {
        let mut w = RationalPoly::one();
        for class in VertexClass::ALL {
            let k = self.count(class);
            if k == 0 {
                continue;
            }
            let cw = rules
                .class_weight(class)
                .ok_or(ForestError::RuleMismatch { rules, class })?;
            w = &w * &cw.pow(k);
        }
        Ok(w)
    }
}

impl PlaneForest {
    /// Every vertex with its class, depth-first in component order.
    pub fn classes(&self) -> Vec<(u32, VertexClass)> {
        let mut out = Vec::new();
        for c in &self.components {
            c.visit(true, &mut |l, k| out.push((l, k)));
        }
        out
    }

    pub fn class_counts(&self) -> ClassCounts {
        let mut counts = ClassCounts::default();
        for (_, k) in self.classes() {
            counts.bump(k);
        }
        counts
    }

    pub fn vertex_count(&self) -> usize {
        self.classes().len()
    }

    pub fn shifted(&self, delta: i64) -> PlaneForest {
        PlaneForest {
            components: self.components.iter().map(|c| c.shifted(delta)).collect(),
        }
    }

    /// Every component has at least two vertices.
    pub fn is_fully_planted(&self) -> bool {
        self.components.iter().all(|c| !c.children.is_empty())
    }
}

impl fmt::Display for PlaneForest {
    /// `2s 3r[5l] 4r[6u[9l]]`: label plus class marker (`s` single root,
    /// `r` root with child, `u` unary, `l` leaf, `b` binary), children in
    /// brackets. The empty forest prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("()");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            c.fmt_rec(true, f)?;
        }
        Ok(())
    }
}

fn canonical_child(t: &IncTree) -> PlaneNode {
    PlaneNode {
        label: t.label(),
        children: t
            .left()
            .into_iter()
            .chain(t.right())
            .map(canonical_child)
            .collect(),
    }
}

/// Orbit representative under leaf/non-leaf sibling swaps: leaf slots are
/// erased and internal children keep their left-to-right order.
pub fn canonicalize(forest: &SupportForest) -> PlaneForest {
    PlaneForest {
        components: forest
            .components
            .iter()
            .map(|c| PlaneNode {
                label: c.root,
                children: c.child.iter().map(canonical_child).collect(),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlaneFamily {
    All,
    /// No singleton components.
    FullyPlanted,
}

/// Working forest: vertices in insertion (= label) order.
struct Arena {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    bare_roots: usize,
}

impl Arena {
    fn to_forest(&self) -> PlaneForest {
        fn build(a: &Arena, v: usize) -> PlaneNode {
            PlaneNode {
                label: v as u32 + 1,
                children: a.children[v].iter().map(|&c| build(a, c)).collect(),
            }
        }
        PlaneForest {
            components: (0..self.parent.len())
                .filter(|&v| self.parent[v].is_none())
                .map(|v| build(self, v))
                .collect(),
        }
    }

    fn class_counts(&self) -> ClassCounts {
        let mut counts = ClassCounts::default();
        for v in 0..self.parent.len() {
            counts.bump(VertexClass::of(
                self.parent[v].is_none(),
                self.children[v].len(),
            ));
        }
        counts
    }

    fn attach(&mut self, parent: Option<usize>, front: bool) {
        let v = self.parent.len();
        self.parent.push(parent);
        self.children.push(Vec::new());
        match parent {
            None => self.bare_roots += 1,
            Some(p) => {
                if self.parent[p].is_none() && self.children[p].is_empty() {
                    self.bare_roots -= 1;
                }
                if front {
                    self.children[p].insert(0, v);
                } else {
                    self.children[p].push(v);
                }
            }
        }
    }

    fn detach_last(&mut self) {
        let v = self.parent.len() - 1;
        let parent = self.parent.pop().expect("non-empty arena");
        self.children.pop();
        match parent {
            None => self.bare_roots -= 1,
            Some(p) => {
                self.children[p].retain(|&c| c != v);
                if self.parent[p].is_none() && self.children[p].is_empty() {
                    self.bare_roots += 1;
                }
            }
        }
    }
}

fn grow<F: FnMut(&Arena)>(a: &mut Arena, n: usize, family: PlaneFamily, emit: &mut F) {
    let placed = a.parent.len();
    if family == PlaneFamily::FullyPlanted && a.bare_roots > n - placed {
        return;
    }
    if placed == n {
        emit(a);
        return;
    }
    a.attach(None, false);
    grow(a, n, family, emit);
    a.detach_last();
    for v in 0..placed {
        let is_root = a.parent[v].is_none();
        match (is_root, a.children[v].len()) {
            (_, 0) => {
                a.attach(Some(v), false);
                grow(a, n, family, emit);
                a.detach_last();
            }
            (false, 1) => {
                for front in [true, false] {
                    a.attach(Some(v), front);
                    grow(a, n, family, emit);
                    a.detach_last();
                }
            }
            _ => {}
        }
    }
}

fn for_each_arena<F: FnMut(&Arena)>(n: usize, family: PlaneFamily, mut emit: F) {
    let mut a = Arena {
        parent: Vec::with_capacity(n),
        children: Vec::with_capacity(n),
        bare_roots: 0,
    };
    grow(&mut a, n, family, &mut emit);
}

/// Visits every forest of planted increasing 0-1-2 plane trees on `[n]`
/// exactly once. Label `k` is inserted after `1..k-1`: as a new root, as
/// the child of a bare root or a childless vertex, or as the left or right
/// sibling of the only child of a non-root vertex.
pub fn for_each_plane_forest<F: FnMut(&PlaneForest)>(n: usize, family: PlaneFamily, mut visit: F) {
    for_each_arena(n, family, |a| visit(&a.to_forest()));
}

pub fn enumerate_plane_forests(n: usize, family: PlaneFamily) -> Vec<PlaneForest> {
    let mut out = Vec::new();
    for_each_plane_forest(n, family, |f| out.push(f.clone()));
    out
}

/// Multiplicity of each class-count vector over the plane forests on `[n]`.
pub fn plane_class_tally(n: usize, family: PlaneFamily) -> HashMap<ClassCounts, u64> {
    let mut tally = HashMap::new();
    for_each_arena(n, family, |a| {
        *tally.entry(a.class_counts()).or_insert(0) += 1
    });
    tally
}

/// Weight rule tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightRuleSet {
    /// Supporting forests with inherited leaf labels: a bare root weighs
    /// `xβ+yα`, a root with a child `α+β`.
    Supporting,
    /// Single root `xβ+yα`, root with child `α+β`, unary `x+y`, leaf `xy`.
    AlphaBeta,
    /// Single root `α(x+y)`, other roots `2α`, unary `x+y`, leaf `xy`.
    Alpha,
    /// Roots `q`, unary `x+y`, leaf `xy`; singletons carry no weight.
    Derangement,
    /// Single root `(x+y)(α+β)/2`, root with child `α+β`, unary `x+y`,
    /// leaf `xy`.
    Modified,
}

impl WeightRuleSet {
    pub fn class_weight(self, class: VertexClass) -> Option<RationalPoly> {
        use VarId::*;
        let v = RationalPoly::var;
        let x_plus_y = v(X) + v(Y);
        let xy = &v(X) * &v(Y);
        let alpha_plus_beta = v(Alpha) + v(Beta);
        match (self, class) {
            (WeightRuleSet::Supporting, _) => None,
            (_, VertexClass::BinaryNonRoot) => Some(RationalPoly::one()),
            (_, VertexClass::UnaryNonRoot) => Some(x_plus_y),
            (_, VertexClass::Leaf) => Some(xy),
            (WeightRuleSet::AlphaBeta, VertexClass::SingleRoot) => {
                Some(&v(X) * &v(Beta) + &v(Y) * &v(Alpha))
            }
            (WeightRuleSet::AlphaBeta | WeightRuleSet::Modified, VertexClass::RootWithChild) => {
                Some(alpha_plus_beta)
            }
            (WeightRuleSet::Alpha, VertexClass::SingleRoot) => Some(&v(Alpha) * &x_plus_y),
            (WeightRuleSet::Alpha, VertexClass::RootWithChild) => {
                Some(v(Alpha).scale(&rational(2, 1)))
            }
            (WeightRuleSet::Derangement, VertexClass::SingleRoot) => None,
            (WeightRuleSet::Derangement, VertexClass::RootWithChild) => Some(v(Q)),
            (WeightRuleSet::Modified, VertexClass::SingleRoot) => {
                Some((&x_plus_y * &alpha_plus_beta).scale(&rational(1, 2)))
            }
        }
    }

    fn family(self) -> PlaneFamily {
        match self {
            WeightRuleSet::Derangement => PlaneFamily::FullyPlanted,
            _ => PlaneFamily::All,
        }
    }
}

/// Forests that carry a weight under some rule sets.
pub trait WeightedForest {
    fn weight(&self, rules: WeightRuleSet) -> Result<RationalPoly, ForestError>;
}

impl WeightedForest for PlaneForest {
    fn weight(&self, rules: WeightRuleSet) -> Result<RationalPoly, ForestError> {
        if rules == WeightRuleSet::Supporting {
            return Err(ForestError::WrongForestKind(rules));
        }
        self.class_counts().weight(rules)
    }
}

fn inherited_leaf_monomial(t: &IncTree) -> (u32, u32) {
    let (mut x, mut y) = (0, 0);
    let mut stack = vec![t];
    while let Some(v) = stack.pop() {
        match v.left() {
            Some(l) => stack.push(l),
            None => x += 1,
        }
        match v.right() {
            Some(r) => stack.push(r),
            None => y += 1,
        }
    }
    (x, y)
}

impl WeightedForest for SupportForest {
    /// The bare-root leaf is suppressed; other leaves keep their `x`/`y`
    /// labels from the source tree.
    fn weight(&self, rules: WeightRuleSet) -> Result<RationalPoly, ForestError> {
        if rules != WeightRuleSet::Supporting {
            return Err(ForestError::WrongForestKind(rules));
        }
        use VarId::*;
        let v = RationalPoly::var;
        let mut w = RationalPoly::one();
        for c in &self.components {
            let cw = match &c.child {
                None => &v(X) * &v(Beta) + &v(Y) * &v(Alpha),
                Some(t) => {
                    let (x, y) = inherited_leaf_monomial(t);
                    &(v(Alpha) + v(Beta))
                        * &RationalPoly::monomial(Monomial::from_pairs(&[(X, x), (Y, y)]))
                }
            };
            w = &w * &cw;
        }
        Ok(w)
    }
}

pub fn forest_weight<F: WeightedForest + ?Sized>(
    forest: &F,
    rules: WeightRuleSet,
) -> Result<RationalPoly, ForestError> {
    forest.weight(rules)
}

/// `Σ_F w(F)` over plane forests on `[n]`; `Derangement` ranges over fully
/// planted forests, the others over all of them.
pub fn total_plane_weight(n: usize, rules: WeightRuleSet) -> Result<RationalPoly, ForestError> {
    if rules == WeightRuleSet::Supporting {
        return Err(ForestError::WrongForestKind(rules));
    }
    let tally = plane_class_tally(n, rules.family());
    let mut cache: BTreeMap<ClassCounts, RationalPoly> = BTreeMap::new();
    for k in tally.keys() {
        cache.insert(*k, k.weight(rules)?);
    }
    Ok(expand_tally(tally, |k| cache[k].clone()))
}

/// `Σ_F w(F)` over supporting forests on `[n]` under `Supporting`.
pub fn total_support_weight(n: usize) -> RationalPoly {
    enumerate_support_forests(n)
        .iter()
        .map(|f| {
            f.weight(WeightRuleSet::Supporting)
                .expect("Supporting applies")
        })
        .sum()
}

/// γ-coefficients of `A_n(x,y|α)` read off the `Alpha` forests without
/// expanding: a forest with `s` single roots, `r` other roots and `l`
/// leaves contributes `2^r` to the coefficient of `α^(s+r) (xy)^l`.
pub fn alpha_gamma_from_forests(n: usize) -> GammaExpansion {
    let mut g = GammaExpansion::default();
    let tally = plane_class_tally(n, PlaneFamily::All);
    let mut entries: Vec<_> = tally.into_iter().collect();
    entries.sort();
    for (k, count) in entries {
        let s = k.count(VertexClass::SingleRoot);
        let r = k.count(VertexClass::RootWithChild);
        let l = k.count(VertexClass::Leaf);
        let rest = Monomial::from_pairs(&[(VarId::Alpha, s + r)]);
        let c = rational(count as i64, 1) * rational(1i64 << r, 1);
        g.accumulate(rest, n as u32, l, c);
    }
    g
}
