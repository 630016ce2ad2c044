//! Plane rooted trees: ordered child lists, left-to-right leaf enumeration,
//! the right-edge count `r(T, v)`, leaf removal and embedding-independent
//! canonical keys.

mod notation;
mod random;

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use notation::{
    format_delays, parse_delayed_tree, parse_hedgehog_shorthand, parse_tree,
    serialize_delayed_tree, serialize_tree,
};
pub use random::random_tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("delay value 0 at byte {offset}; delays must be at least 1")]
    ZeroDelay { offset: usize },
    #[error("leaf index {index} out of range for a tree with {leaves} leaves")]
    InvalidLeaf { index: usize, leaves: usize },
    #[error("expected {expected} delay values (one per leaf), found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("delay values must be at least 1")]
    NonPositiveDelay,
}

impl TreeError {
    fn syntax(offset: usize, message: impl Into<String>) -> Self {
        TreeError::Syntax {
            offset,
            message: message.into(),
        }
    }
}

/// A rooted tree whose children are ordered left to right. Vertices carry no
/// labels; the order of `children` is the plane embedding.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PlaneRootedTree {
    children: Vec<PlaneRootedTree>,
}

/// Position of a leaf in the left-to-right leaf enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LeafRef(pub usize);

impl PlaneRootedTree {
    /// The one-vertex tree.
    pub fn vertex() -> Self {
        Self::default()
    }

    pub fn from_children(children: Vec<PlaneRootedTree>) -> Self {
        Self { children }
    }

    /// Root with `n` leaf children.
    pub fn hedgehog(n: usize) -> Self {
        Self::from_children(vec![Self::vertex(); n])
    }

    /// A path of `n` edges hanging from the root.
    pub fn chain(n: usize) -> Self {
        (0..n).fold(Self::vertex(), |t, _| Self::from_children(vec![t]))
    }

    /// `T_{b,a}`: two chains from the root, of lengths `b` (left) and `a` (right).
    /// A zero-length branch is omitted.
    pub fn two_branch(b: usize, a: usize) -> Self {
        let branches = [b, a]
            .into_iter()
            .filter(|&len| len > 0)
            .map(|len| Self::chain(len - 1))
            .collect();
        Self::from_children(branches)
    }

    pub fn children(&self) -> &[PlaneRootedTree] {
        &self.children
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|c| c.edge_count() + 1).sum()
    }

    pub fn node_count(&self) -> usize {
        self.edge_count() + 1
    }

    fn is_childless(&self) -> bool {
        self.children.is_empty()
    }

    /// Number of degree-1 non-root vertices. The root never counts, even with
    /// a single child.
    pub fn leaf_count(&self) -> usize {
        self.children
            .iter()
            .map(|c| if c.is_childless() { 1 } else { c.leaf_count() })
            .sum()
    }

    pub fn leaves(&self) -> Vec<LeafRef> {
        (0..self.leaf_count()).map(LeafRef).collect()
    }

    fn check_leaf(&self, v: LeafRef) -> Result<(), TreeError> {
        let leaves = self.leaf_count();
        if v.0 >= leaves {
            return Err(TreeError::InvalidLeaf { index: v.0, leaves });
        }
        Ok(())
    }

    /// `r(T, v)` for every leaf, in leaf order.
    ///
    /// Walking down the path to a leaf, each sibling strictly to the right of
    /// the path contributes its subtree's edges plus the edge attaching it.
    pub fn r_values(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.collect_r_values(0, &mut out);
        out
    }

    fn collect_r_values(&self, acc: usize, out: &mut Vec<usize>) {
        let weights: Vec<usize> = self.children.iter().map(|c| c.edge_count() + 1).collect();
        let mut right: usize = weights.iter().sum();
        for (child, w) in self.children.iter().zip(weights) {
            right -= w;
            if child.is_childless() {
                out.push(acc + right);
            } else {
                child.collect_r_values(acc + right, out);
            }
        }
    }

    pub fn r_value(&self, v: LeafRef) -> Result<usize, TreeError> {
        self.check_leaf(v)?;
        Ok(self.r_values()[v.0])
    }

    /// Path length from the root to each leaf, in leaf order.
    pub fn leaf_depths(&self) -> Vec<usize> {
        fn walk(t: &PlaneRootedTree, depth: usize, out: &mut Vec<usize>) {
            for c in &t.children {
                if c.is_childless() {
                    out.push(depth + 1);
                } else {
                    walk(c, depth + 1, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, 0, &mut out);
        out
    }

    /// `T - v`.
    pub fn remove_leaf(&self, v: LeafRef) -> Result<PlaneRootedTree, TreeError> {
        self.remove_leaf_reporting(v).map(|(t, _)| t)
    }

    /// `T - v`, plus whether the parent of `v` became a new leaf. A new leaf
    /// takes the removed leaf's position in the enumeration.
    pub fn remove_leaf_reporting(&self, v: LeafRef) -> Result<(PlaneRootedTree, bool), TreeError> {
        self.check_leaf(v)?;
        let mut out = self.clone();
        let mut remaining = v.0;
        let created = out.remove_nth_leaf(&mut remaining, true);
        Ok((out, created.expect("leaf index was validated")))
    }

    /// Returns `Some(parent_became_leaf)` once the leaf is removed.
    fn remove_nth_leaf(&mut self, remaining: &mut usize, is_root: bool) -> Option<bool> {
        for i in 0..self.children.len() {
            if self.children[i].is_childless() {
                if *remaining == 0 {
                    self.children.remove(i);
                    return Some(!is_root && self.children.is_empty());
                }
                *remaining -= 1;
            } else if let Some(created) = self.children[i].remove_nth_leaf(remaining, false) {
                return Some(created);
            }
        }
        None
    }

    /// AHU encoding: child keys sorted and concatenated inside parentheses.
    /// Equal keys exactly when the trees are isomorphic as unordered rooted
    /// trees.
    pub fn canonical_key(&self) -> String {
        let mut keys: Vec<String> = self.children.iter().map(Self::canonical_key).collect();
        keys.sort_unstable();
        let mut out = String::with_capacity(2 * self.node_count());
        out.push('(');
        for k in keys {
            out.push_str(&k);
        }
        out.push(')');
        out
    }

    /// Same tree with every child list independently shuffled by a
    /// deterministic generator seeded with `seed`.
    pub fn random_embedding(&self, seed: u64) -> PlaneRootedTree {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = self.clone();
        out.shuffle_children(&mut rng);
        out
    }

    fn shuffle_children(&mut self, rng: &mut ChaCha8Rng) {
        self.children.shuffle(rng);
        for c in &mut self.children {
            c.shuffle_children(rng);
        }
    }
}

impl fmt::Display for PlaneRootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_tree(self))
    }
}

impl fmt::Debug for PlaneRootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneRootedTree({})", serialize_tree(self))
    }
}

/// Delay values, one per leaf in left-to-right order, each at least 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DelayAssignment(Vec<u32>);

impl DelayAssignment {
    pub fn new(values: Vec<u32>) -> Result<Self, TreeError> {
        if values.contains(&0) {
            return Err(TreeError::NonPositiveDelay);
        }
        Ok(Self(values))
    }

    /// Every leaf gets delay 1.
    pub fn trivial(leaves: usize) -> Self {
        Self(vec![1; leaves])
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The delays after plucking leaf `v`: survivors get `max(1, f - 1)`,
    /// and a freshly created leaf (in `v`'s slot) gets 1.
    pub fn after_pluck(&self, v: LeafRef, created_leaf: bool) -> DelayAssignment {
        let mut next: Vec<u32> = self
            .0
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != v.0)
            .map(|(_, &f)| f.saturating_sub(1).max(1))
            .collect();
        if created_leaf {
            next.insert(v.0, 1);
        }
        DelayAssignment(next)
    }
}

/// A plane rooted tree together with a delay value for each leaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DelayedTree {
    pub tree: PlaneRootedTree,
    pub delays: DelayAssignment,
}

impl DelayedTree {
    pub fn new(tree: PlaneRootedTree, delays: DelayAssignment) -> Result<Self, TreeError> {
        let expected = tree.leaf_count();
        if delays.len() != expected {
            return Err(TreeError::LengthMismatch {
                expected,
                found: delays.len(),
            });
        }
        Ok(Self { tree, delays })
    }

    /// Hedgehog whose leaves carry `delays` left to right.
    pub fn hedgehog(delays: &[u32]) -> Result<Self, TreeError> {
        Self::new(
            PlaneRootedTree::hedgehog(delays.len()),
            DelayAssignment::new(delays.to_vec())?,
        )
    }
}

impl fmt::Display for DelayedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_delayed_tree(&self.tree, &self.delays))
    }
}

/// Hedgehog tree with the given left-to-right delays.
pub fn hedgehog(delays: &[u32]) -> Result<(PlaneRootedTree, DelayAssignment), TreeError> {
    DelayedTree::hedgehog(delays).map(|d| (d.tree, d.delays))
}
