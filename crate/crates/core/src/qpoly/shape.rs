//! Coefficient-shape predicates. All of them look at the support window
//! `[low_degree, degree]`, counting internal zeros as coefficients.

use std::cmp::Ordering;

use super::QPolynomial;

/// Weakly rising, then weakly falling. The zero polynomial is unimodal.
pub fn is_unimodal(p: &QPolynomial) -> bool {
    let w = p.support_window();
    let mut i = 0;
    while i + 1 < w.len() && w[i] <= w[i + 1] {
        i += 1;
    }
    while i + 1 < w.len() && w[i] >= w[i + 1] {
        i += 1;
    }
    i + 1 >= w.len()
}

/// Strictly rising, a peak plateau of one or two equal coefficients, then
/// strictly falling. The zero polynomial qualifies.
pub fn is_strictly_unimodal(p: &QPolynomial) -> bool {
    let w = p.support_window();
    if w.is_empty() {
        return true;
    }
    let mut i = 0;
    while i + 1 < w.len() && w[i] < w[i + 1] {
        i += 1;
    }
    let peak = i;
    while i + 1 < w.len() && w[i] == w[i + 1] {
        i += 1;
    }
    if i - peak + 1 > 2 {
        return false;
    }
    while i + 1 < w.len() {
        if w[i].cmp(&w[i + 1]) != Ordering::Greater {
            return false;
        }
        i += 1;
    }
    true
}

/// Palindromic support window. The zero polynomial is symmetric.
pub fn is_symmetric(p: &QPolynomial) -> bool {
    let w = p.support_window();
    w.iter().eq(w.iter().rev())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    #[test]
    fn unimodal_examples() {
        assert!(!is_unimodal(&p(&[0, 0, 1, 4, 5, 4, 5, 4, 1])));
        assert!(is_unimodal(&p(&[0, 0, 0, 1, 3, 4, 3, 1])));
        assert!(is_unimodal(&QPolynomial::zero()));
        assert!(is_unimodal(&p(&[0, 0, 7])));
        // internal zero breaks the window
        assert!(!is_unimodal(&p(&[1, 0, 1])));
        assert!(is_unimodal(&p(&[3, 2, 2, 1])));
        assert!(is_unimodal(&p(&[1, 1, 1])));
    }

    #[test]
    fn strictly_unimodal_examples() {
        assert!(is_strictly_unimodal(&p(&[1, 2, 1])));
        assert!(!is_strictly_unimodal(&p(&[1, 1, 1])));
        assert!(is_strictly_unimodal(&p(&[1, 2, 2, 1])));
        assert!(!is_strictly_unimodal(&p(&[1, 2, 2, 2, 1])));
        assert!(!is_strictly_unimodal(&p(&[1, 1, 2, 1])));
        assert!(is_strictly_unimodal(&p(&[0, 0, 5])));
        assert!(is_strictly_unimodal(&QPolynomial::zero()));
        assert!(is_strictly_unimodal(&p(&[3, 1])));
        assert!(!is_strictly_unimodal(&p(&[0, 0, 1, 4, 5, 4, 5, 4, 1])));
    }

    #[test]
    fn symmetric_examples() {
        assert!(is_symmetric(&p(&[0, 0, 1, 4, 5, 4, 5, 4, 1])));
        assert!(is_symmetric(&p(&[0, 0, 0, 1])));
        assert!(!is_symmetric(&p(&[1, 2])));
        assert!(is_symmetric(&QPolynomial::zero()));
    }
}
