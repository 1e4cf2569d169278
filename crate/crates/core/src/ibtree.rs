//! Increasing binary trees, the bijection with permutations, and the
//! grammatical labelings of their leaves and spine vertices.
//!
//! The tree of a word has the minimum of the word at its root; the prefix
//! before the minimum builds the left subtree and the suffix the right one.
//! An empty side is a leaf. The leftmost leaf is the *a-leaf*, the rightmost
//! the *b-leaf*; non-root vertices on the root→a path are *α-vertices* and
//! those on the root→b path are *β-vertices*.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::{par_tally, Family, Perm, PermError};
use crate::poly::{rational, RationalPoly, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("an increasing binary tree needs at least one vertex")]
    Empty,
    #[error("child {child} is not larger than its parent {parent}")]
    NotIncreasing { parent: u32, child: u32 },
    #[error("cannot parse tree: {0}")]
    Parse(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A complete increasing binary tree; `None` children are leaves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncTree {
    label: u32,
    left: Option<Box<IncTree>>,
    right: Option<Box<IncTree>>,
}

impl IncTree {
    pub fn leaf_parent(label: u32) -> IncTree {
        IncTree {
            label,
            left: None,
            right: None,
        }
    }

    pub fn new(
        label: u32,
        left: Option<IncTree>,
        right: Option<IncTree>,
    ) -> Result<IncTree, TreeError> {
        for child in left.iter().chain(right.iter()) {
            if child.label <= label {
                return Err(TreeError::NotIncreasing {
                    parent: label,
                    child: child.label,
                });
            }
        }
        Ok(IncTree {
            label,
            left: left.map(Box::new),
            right: right.map(Box::new),
        })
    }

    /// Tree of a word of distinct labels; `None` for the empty word.
    pub fn from_word(w: &[u32]) -> Option<IncTree> {
        let (i, &label) = w.iter().enumerate().min_by_key(|&(_, v)| *v)?;
        Some(IncTree {
            label,
            left: IncTree::from_word(&w[..i]).map(Box::new),
            right: IncTree::from_word(&w[i + 1..]).map(Box::new),
        })
    }

    pub fn from_perm(p: &Perm) -> Result<IncTree, TreeError> {
        IncTree::from_word(p.word()).ok_or(TreeError::Empty)
    }

    pub fn label(&self) -> u32 {
        self.label
    }

    pub fn left(&self) -> Option<&IncTree> {
        self.left.as_deref()
    }

    pub fn right(&self) -> Option<&IncTree> {
        self.right.as_deref()
    }

    pub fn node_count(&self) -> usize {
        1 + self.left().map_or(0, IncTree::node_count) + self.right().map_or(0, IncTree::node_count)
    }

    /// In-order reading of the vertex labels.
    pub fn to_word(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.node_count());
        self.push_in_order(&mut out);
        out
    }

    fn push_in_order(&self, out: &mut Vec<u32>) {
        if let Some(l) = self.left() {
            l.push_in_order(out);
        }
        out.push(self.label);
        if let Some(r) = self.right() {
            r.push_in_order(out);
        }
    }

    pub fn to_perm(&self) -> Result<Perm, TreeError> {
        Ok(Perm::new(self.to_word())?)
    }

    /// Replaces the `index`-th leaf (in-order, 0-based) with a new vertex
    /// carrying two leaves. `label` must exceed every label on the path.
    pub fn insert_at_leaf(&self, index: usize, label: u32) -> IncTree {
        let mut t = self.clone();
        let mut remaining = index;
        assert!(
            t.insert_rec(&mut remaining, label),
            "leaf index out of range"
        );
        t
    }

    fn insert_rec(&mut self, remaining: &mut usize, label: u32) -> bool {
        match &mut self.left {
            Some(l) => {
                if l.insert_rec(remaining, label) {
                    return true;
                }
            }
            None => {
                if *remaining == 0 {
                    self.left = Some(Box::new(IncTree::leaf_parent(label)));
                    return true;
                }
                *remaining -= 1;
            }
        }
        match &mut self.right {
            Some(r) => r.insert_rec(remaining, label),
            None => {
                if *remaining == 0 {
                    self.right = Some(Box::new(IncTree::leaf_parent(label)));
                    return true;
                }
                *remaining -= 1;
                false
            }
        }
    }

    /// Adds `delta` to every label.
    pub fn shifted(&self, delta: i64) -> IncTree {
        IncTree {
            label: (i64::from(self.label) + delta) as u32,
            left: self.left().map(|l| Box::new(l.shifted(delta))),
            right: self.right().map(|r| Box::new(r.shifted(delta))),
        }
    }
}

impl fmt::Display for IncTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.label)?;
        match self.left() {
            Some(l) => write!(f, "{l}")?,
            None => f.write_str(".")?,
        }
        f.write_str(",")?;
        match self.right() {
            Some(r) => write!(f, "{r}")?,
            None => f.write_str(".")?,
        }
        f.write_str(")")
    }
}

impl FromStr for IncTree {
    type Err = TreeError;

    /// Parses the nested form `1(.,2(.,.))`; `.` is a leaf.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_subtree(&compact, &mut pos)?.ok_or(TreeError::Empty)?;
        if pos != compact.len() {
            return Err(TreeError::Parse(format!("trailing input at {pos}")));
        }
        Ok(t)
    }
}

fn parse_subtree(s: &[char], pos: &mut usize) -> Result<Option<IncTree>, TreeError> {
    let err = |msg: &str, at: usize| TreeError::Parse(format!("{msg} at {at}"));
    if s.get(*pos) == Some(&'.') {
        *pos += 1;
        return Ok(None);
    }
    let start = *pos;
    while s.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
        *pos += 1;
    }
    let label: u32 = s[start..*pos]
        .iter()
        .collect::<String>()
        .parse()
        .map_err(|_| err("expected label", start))?;
    let expect = |c: char, pos: &mut usize| {
        if s.get(*pos) == Some(&c) {
            *pos += 1;
            Ok(())
        } else {
            Err(err(&format!("expected '{c}'"), *pos))
        }
    };
    expect('(', pos)?;
    let left = parse_subtree(s, pos)?;
    expect(',', pos)?;
    let right = parse_subtree(s, pos)?;
    expect(')', pos)?;
    IncTree::new(label, left, right).map(Some)
}

/// Position of a vertex relative to the two poles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Root,
    /// Non-root vertex on the root→a-leaf path.
    Alpha,
    /// Non-root vertex on the root→b-leaf path.
    Beta,
    Plain,
}

impl VertexKind {
    fn on_left_spine(self) -> bool {
        matches!(self, VertexKind::Root | VertexKind::Alpha)
    }

    fn on_right_spine(self) -> bool {
        matches!(self, VertexKind::Root | VertexKind::Beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeafSide {
    Left,
    Right,
}

/// Structural facts about one leaf, enough for every scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeafSlot {
    pub parent: u32,
    pub parent_kind: VertexKind,
    pub side: LeafSide,
    pub is_a_leaf: bool,
    pub is_b_leaf: bool,
    /// The sibling is a leaf that is neither the a-leaf nor the b-leaf.
    pub sibling_is_proper_leaf: bool,
}

impl LeafSlot {
    pub fn is_proper(&self) -> bool {
        !self.is_a_leaf && !self.is_b_leaf
    }
}

/// In-order walk reporting each vertex with its kind and each leaf slot.
pub fn walk<V, L>(tree: &IncTree, mut on_vertex: V, mut on_leaf: L)
where
    V: FnMut(u32, VertexKind),
    L: FnMut(LeafSlot),
{
    walk_rec(tree, VertexKind::Root, &mut on_vertex, &mut on_leaf);
}

fn walk_rec<V, L>(t: &IncTree, kind: VertexKind, on_vertex: &mut V, on_leaf: &mut L)
where
    V: FnMut(u32, VertexKind),
    L: FnMut(LeafSlot),
{
    let right_is_proper_leaf = t.right.is_none() && !kind.on_right_spine();
    let left_is_proper_leaf = t.left.is_none() && !kind.on_left_spine();
    match t.left() {
        Some(l) => {
            let k = if kind.on_left_spine() {
                VertexKind::Alpha
            } else {
                VertexKind::Plain
            };
            walk_rec(l, k, on_vertex, on_leaf);
        }
        None => on_leaf(LeafSlot {
            parent: t.label,
            parent_kind: kind,
            side: LeafSide::Left,
            is_a_leaf: kind.on_left_spine(),
            is_b_leaf: false,
            sibling_is_proper_leaf: right_is_proper_leaf,
        }),
    }
    on_vertex(t.label, kind);
    match t.right() {
        Some(r) => {
            let k = if kind.on_right_spine() {
                VertexKind::Beta
            } else {
                VertexKind::Plain
            };
            walk_rec(r, k, on_vertex, on_leaf);
        }
        None => on_leaf(LeafSlot {
            parent: t.label,
            parent_kind: kind,
            side: LeafSide::Right,
            is_a_leaf: false,
            is_b_leaf: kind.on_right_spine(),
            sibling_is_proper_leaf: left_is_proper_leaf,
        }),
    }
}

/// A grammatical label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    X,
    Y,
    A,
    B,
    Z,
    Alpha,
    Beta,
    /// `(x+y)/2`
    HalfXPlusY,
    /// `(α+β)/2`
    HalfAlphaPlusBeta,
}

impl Label {
    pub const ALL: [Label; 9] = [
        Label::X,
        Label::Y,
        Label::A,
        Label::B,
        Label::Z,
        Label::Alpha,
        Label::Beta,
        Label::HalfXPlusY,
        Label::HalfAlphaPlusBeta,
    ];

    fn index(self) -> usize {
        self as usize
    }

    pub fn to_poly(self) -> RationalPoly {
        let v = RationalPoly::var;
        let half = rational(1, 2);
        match self {
            Label::X => v(VarId::X),
            Label::Y => v(VarId::Y),
            Label::A => v(VarId::A),
            Label::B => v(VarId::B),
            Label::Z => v(VarId::Z),
            Label::Alpha => v(VarId::Alpha),
            Label::Beta => v(VarId::Beta),
            Label::HalfXPlusY => (v(VarId::X) + v(VarId::Y)).scale(&half),
            Label::HalfAlphaPlusBeta => (v(VarId::Alpha) + v(VarId::Beta)).scale(&half),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::X => "x",
            Label::Y => "y",
            Label::A => "a",
            Label::B => "b",
            Label::Z => "z",
            Label::Alpha => "alpha",
            Label::Beta => "beta",
            Label::HalfXPlusY => "(x+y)/2",
            Label::HalfAlphaPlusBeta => "(alpha+beta)/2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LabelScheme {
    /// Left leaves `x`, right leaves `y`.
    Xy,
    AbAlphaBeta,
    /// `AbAlphaBeta` with β-vertices labeled `α`.
    AbAlpha,
    /// Proper sibling leaf pairs get `x`,`y`; other proper leaves `(x+y)/2`.
    Modified1,
    /// α- and β-vertices both labeled `(α+β)/2`.
    Modified2,
    /// Leaves mark excedances (`x`), drops (`y`) and fixed points (`z`) of
    /// the cycle form; the root counts as a β-vertex for the `z` rule.
    Axyz,
}

impl LabelScheme {
    pub fn leaf_label(self, slot: &LeafSlot) -> Label {
        let xy = match slot.side {
            LeafSide::Left => Label::X,
            LeafSide::Right => Label::Y,
        };
        match self {
            LabelScheme::Xy => xy,
            LabelScheme::AbAlphaBeta | LabelScheme::AbAlpha | LabelScheme::Modified2 => {
                if slot.is_a_leaf {
                    Label::A
                } else if slot.is_b_leaf {
                    Label::B
                } else {
                    xy
                }
            }
            LabelScheme::Modified1 => {
                if slot.is_a_leaf {
                    Label::A
                } else if slot.is_b_leaf {
                    Label::B
                } else if slot.sibling_is_proper_leaf {
                    xy
                } else {
                    Label::HalfXPlusY
                }
            }
            LabelScheme::Axyz => {
                let beta_like = matches!(slot.parent_kind, VertexKind::Beta | VertexKind::Root);
                if slot.side == LeafSide::Left && beta_like {
                    Label::Z
                } else if slot.is_a_leaf {
                    Label::X
                } else if slot.is_b_leaf {
                    Label::A
                } else {
                    xy
                }
            }
        }
    }

    pub fn vertex_label(self, kind: VertexKind) -> Option<Label> {
        match (self, kind) {
            (_, VertexKind::Root | VertexKind::Plain) => None,
            (LabelScheme::Xy | LabelScheme::Axyz, _) => None,
            (LabelScheme::AbAlphaBeta | LabelScheme::Modified1, VertexKind::Alpha) => {
                Some(Label::Alpha)
            }
            (LabelScheme::AbAlphaBeta | LabelScheme::Modified1, VertexKind::Beta) => {
                Some(Label::Beta)
            }
            (LabelScheme::AbAlpha, _) => Some(Label::Alpha),
            (LabelScheme::Modified2, _) => Some(Label::HalfAlphaPlusBeta),
        }
    }
}

/// Multiset of labels; its weight is the product of the labels.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelCounts([u32; 9]);

impl LabelCounts {
    pub fn count(&self, label: Label) -> u32 {
        self.0[label.index()]
    }

    pub fn add(&mut self, label: Label) {
        self.0[label.index()] += 1;
    }

    pub fn weight(&self) -> RationalPoly {
        Label::ALL
            .iter()
            .filter(|l| self.count(**l) > 0)
            .fold(RationalPoly::one(), |acc, l| {
                &acc * &l.to_poly().pow(self.count(*l))
            })
    }
}

/// A tree together with the labels a scheme induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree<'a> {
    pub tree: &'a IncTree,
    pub scheme: LabelScheme,
    /// Leaf labels in in-order position.
    pub leaves: Vec<Label>,
    /// `(vertex label, kind, grammatical label)` in in-order position.
    pub vertices: Vec<(u32, VertexKind, Option<Label>)>,
}

impl LabeledTree<'_> {
    pub fn label_counts(&self) -> LabelCounts {
        let mut c = LabelCounts::default();
        for &l in self
            .leaves
            .iter()
            .chain(self.vertices.iter().filter_map(|v| v.2.as_ref()))
        {
            c.add(l);
        }
        c
    }

    pub fn weight(&self) -> RationalPoly {
        self.label_counts().weight()
    }
}

pub fn apply_labeling(tree: &IncTree, scheme: LabelScheme) -> LabeledTree<'_> {
    let mut leaves = Vec::with_capacity(tree.node_count() + 1);
    let mut vertices = Vec::with_capacity(tree.node_count());
    walk(
        tree,
        |label, kind| vertices.push((label, kind, scheme.vertex_label(kind))),
        |slot| leaves.push(scheme.leaf_label(&slot)),
    );
    LabeledTree {
        tree,
        scheme,
        leaves,
        vertices,
    }
}

/// Label multiset without materializing the labeled view.
pub fn label_counts(tree: &IncTree, scheme: LabelScheme) -> LabelCounts {
    let mut c = LabelCounts::default();
    let mut leaf_counts = LabelCounts::default();
    walk(
        tree,
        |_, kind| {
            if let Some(l) = scheme.vertex_label(kind) {
                c.add(l);
            }
        },
        |slot| leaf_counts.add(scheme.leaf_label(&slot)),
    );
    for l in Label::ALL {
        c.0[l.index()] += leaf_counts.count(l);
    }
    c
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct TreeStats {
    /// Vertices whose two children are proper leaves.
    pub peaks: usize,
    pub xleaf: usize,
    pub yleaf: usize,
    pub n_alpha: usize,
    pub n_beta: usize,
}

pub fn tree_stats(tree: &IncTree) -> TreeStats {
    let mut s = TreeStats::default();
    let mut vertex = |_, kind| match kind {
        VertexKind::Alpha => s.n_alpha += 1,
        VertexKind::Beta => s.n_beta += 1,
        _ => {}
    };
    let mut xleaf = 0;
    let mut yleaf = 0;
    let mut paired = 0;
    walk(tree, &mut vertex, |slot| {
        if !slot.is_proper() {
            return;
        }
        match slot.side {
            LeafSide::Left => xleaf += 1,
            LeafSide::Right => yleaf += 1,
        }
        if slot.sibling_is_proper_leaf {
            paired += 1;
        }
    });
    s.xleaf = xleaf;
    s.yleaf = yleaf;
    s.peaks = paired / 2;
    s
}

/// Sums `expand(key)` weighted by multiplicity.
pub(crate) fn expand_tally<K, F>(tally: HashMap<K, u64>, expand: F) -> RationalPoly
where
    K: Ord,
    F: Fn(&K) -> RationalPoly,
{
    let mut entries: Vec<(K, u64)> = tally.into_iter().collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out = RationalPoly::zero();
    for (k, count) in entries {
        out += &expand(&k).scale(&rational(count as i64, 1));
    }
    out
}

/// `Σ_T weight(T)` over all increasing binary trees on `[n]`.
pub fn sum_weights(n: usize, scheme: LabelScheme) -> Result<RationalPoly, TreeError> {
    if n == 0 {
        return Err(TreeError::Empty);
    }
    let tally = par_tally(n, Family::All, |w| {
        let t = IncTree::from_word(w).expect("non-empty word");
        label_counts(&t, scheme)
    });
    Ok(expand_tally(tally, LabelCounts::weight))
}
