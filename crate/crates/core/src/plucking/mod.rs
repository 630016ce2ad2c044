//! The plucking polynomial `Q(T)` and its delay-function variant `Q(T, f)`,
//! computed by the leaf-removal recursion with memoization, plus closed forms
//! for hedgehog families.

mod closed_form;

use std::collections::HashMap;

use thiserror::Error;

use crate::qpoly::QPolynomial;
use crate::tree::{
    serialize_delayed_tree, serialize_tree, DelayAssignment, LeafRef, PlaneRootedTree,
};

pub use closed_form::{
    family_1_4k_1, family_1a3k1b, hedgehog_anti_unimodal, hedgehog_delay12, hedgehog_plain,
    DelayedHedgehog,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PluckingError {
    #[error("expected {expected} delay values (one per leaf), found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("delay sequence {0} is not anti-unimodal")]
    NotAntiUnimodal(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Memo tables for both recursions, reusable across many top-level calls.
///
/// Plain `Q(T)` is keyed on the canonical (unordered) tree key, since the
/// value does not depend on the embedding. `Q(T, f)` depends on where each
/// delay sits, so it is keyed on the exact delayed-tree serialization.
#[derive(Default)]
pub struct Plucker {
    plain: HashMap<String, QPolynomial>,
    delayed: HashMap<String, QPolynomial>,
    exact_plain_keys: bool,
}

impl Plucker {
    pub fn new() -> Self {
        Self::default()
    }

    /// A plucker whose plain memo is keyed on the exact embedding instead of
    /// the canonical key, so no two embeddings ever share a cached value.
    /// Used when checking embedding independence itself.
    pub fn embedding_sensitive() -> Self {
        Self {
            exact_plain_keys: true,
            ..Self::default()
        }
    }

    pub fn plain(&mut self, tree: &PlaneRootedTree) -> QPolynomial {
        if tree.edge_count() == 0 {
            return QPolynomial::one();
        }
        let key = if self.exact_plain_keys {
            serialize_tree(tree)
        } else {
            tree.canonical_key()
        };
        if let Some(hit) = self.plain.get(&key) {
            return hit.clone();
        }
        let mut total = QPolynomial::zero();
        for (i, r) in tree.r_values().into_iter().enumerate() {
            let rest = tree.remove_leaf(LeafRef(i)).expect("enumerated leaf");
            total += &self.plain(&rest).shift(r);
        }
        self.plain.insert(key, total.clone());
        total
    }

    pub fn delayed(
        &mut self,
        tree: &PlaneRootedTree,
        delays: &DelayAssignment,
    ) -> Result<QPolynomial, PluckingError> {
        let expected = tree.leaf_count();
        if delays.len() != expected {
            return Err(PluckingError::LengthMismatch {
                expected,
                found: delays.len(),
            });
        }
        Ok(self.delayed_unchecked(tree, delays))
    }

    fn delayed_unchecked(
        &mut self,
        tree: &PlaneRootedTree,
        delays: &DelayAssignment,
    ) -> QPolynomial {
        if tree.edge_count() == 0 {
            return QPolynomial::one();
        }
        let key = serialize_delayed_tree(tree, delays);
        if let Some(hit) = self.delayed.get(&key) {
            return hit.clone();
        }
        // Only delay-1 leaves are pluckable; with none the sum is empty and Q = 0.
        let mut total = QPolynomial::zero();
        let r_values = tree.r_values();
        for (i, &f) in delays.values().iter().enumerate() {
            if f != 1 {
                continue;
            }
            let v = LeafRef(i);
            let (rest, created) = tree.remove_leaf_reporting(v).expect("enumerated leaf");
            let next = delays.after_pluck(v, created);
            total += &self.delayed_unchecked(&rest, &next).shift(r_values[i]);
        }
        self.delayed.insert(key, total.clone());
        total
    }

    pub fn clear(&mut self) {
        self.plain.clear();
        self.delayed.clear();
    }
}

/// `Q(T)` with a fresh memo table.
pub fn plucking(tree: &PlaneRootedTree) -> QPolynomial {
    Plucker::new().plain(tree)
}

/// `Q(T, f)` with a fresh memo table.
pub fn plucking_delay(
    tree: &PlaneRootedTree,
    delays: &DelayAssignment,
) -> Result<QPolynomial, PluckingError> {
    Plucker::new().delayed(tree, delays)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::q_factorial;
    use crate::tree::{parse_delayed_tree, parse_tree};

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    #[test]
    fn worked_four_edge_example() {
        let t = parse_tree("(()(()()))").unwrap();
        assert_eq!(plucking(&t), p(&[1, 2, 2, 2, 1]));
        assert_eq!(plucking(&t.remove_leaf(LeafRef(2)).unwrap()), p(&[1, 1, 1]));
        assert_eq!(plucking(&t.remove_leaf(LeafRef(0)).unwrap()), p(&[1, 1]));
    }

    #[test]
    fn base_cases() {
        assert_eq!(plucking(&PlaneRootedTree::vertex()), QPolynomial::one());
        for n in 0..6 {
            assert_eq!(plucking(&PlaneRootedTree::chain(n)), QPolynomial::one());
        }
        for n in 0..=8 {
            assert_eq!(plucking(&PlaneRootedTree::hedgehog(n)), q_factorial(n));
        }
    }

    #[test]
    fn delayed_examples() {
        let (t, f) = parse_delayed_tree("(2((3))1)").unwrap();
        assert_eq!(plucking_delay(&t, &f).unwrap(), p(&[0, 0, 0, 1]));

        let (t, f) = parse_delayed_tree("(32123)").unwrap();
        assert_eq!(
            plucking_delay(&t, &f).unwrap(),
            p(&[0, 0, 0, 1, 3, 4, 3, 1])
        );

        let (t, f) = parse_delayed_tree("(22)").unwrap();
        assert!(plucking_delay(&t, &f).unwrap().is_zero());

        let t = parse_tree("((()())(()(()()))())").unwrap();
        let f = DelayAssignment::trivial(t.leaf_count());
        assert_eq!(plucking_delay(&t, &f).unwrap(), plucking(&t));
    }

    #[test]
    fn delayed_length_mismatch() {
        let t = PlaneRootedTree::hedgehog(3);
        let f = DelayAssignment::new(vec![1, 1]).unwrap();
        assert_eq!(
            plucking_delay(&t, &f),
            Err(PluckingError::LengthMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn memo_reuse_gives_same_answers() {
        let mut pl = Plucker::new();
        let t = parse_tree("(()(()()))").unwrap();
        let first = pl.plain(&t);
        let mirrored = parse_tree("((()())())").unwrap();
        assert_eq!(pl.plain(&mirrored), first);
        pl.clear();
        assert_eq!(pl.plain(&t), first);
        let mut exact = Plucker::embedding_sensitive();
        assert_eq!(exact.plain(&t), first);
        assert!(exact.plain.contains_key("(()(()()))"));
        assert!(!pl.plain.contains_key("(()(()()))"));
    }
}
