//! Published reference values and the aggregate check suite built on them.

use serde::Serialize;

use super::{
    check_garstka_report, check_prop33, check_prop35_and_corollary, embedding_invariance_test,
    scan_anti_unimodal, scan_family_1_4k_1, two_branch_check, verify_conjecture_12, ScanOptions,
    GARSTKA_DESCRIPTORS,
};
use crate::plucking::{
    family_1_4k_1, family_1a3k1b, hedgehog_anti_unimodal, plucking, plucking_delay,
    DelayedHedgehog, Plucker,
};
use crate::qpoly::{factor_quantum, gaussian_binomial, q_factorial, QPolynomial};
use crate::tree::{parse_delayed_tree, parse_tree, DelayedTree, LeafRef, PlaneRootedTree};

/// Printed coefficient tables of the `1^2 4^k 1^2` hedgehog: `(k, low, coeffs)`
/// with `coeffs[i]` the coefficient of `q^(low + i)`.
pub const FAMILY_14K1_TABLES: [(usize, usize, &[i64]); 6] = [
    (2, 2, &[1, 5, 12, 18, 19, 17, 17, 19, 18, 12, 5, 1]),
    (
        3,
        3,
        &[1, 6, 18, 36, 53, 61, 59, 54, 54, 59, 61, 53, 36, 18, 6, 1],
    ),
    (
        4,
        4,
        &[
            1, 7, 25, 61, 114, 173, 221, 245, 245, 234, 228, 234, 245, 245, 221, 173, 114, 61, 25,
            7, 1,
        ],
    ),
    (
        5,
        5,
        &[
            1, 8, 33, 94, 208, 381, 600, 832, 1034, 1171, 1232, 1234, 1212, 1200, 1212, 1234, 1232,
            1171, 1034, 832, 600, 381, 208, 94, 33, 8, 1,
        ],
    ),
    (
        6,
        6,
        &[
            1, 9, 42, 136, 344, 725, 1325, 2155, 3174, 4287, 5364, 6276, 6934, 7315, 7465, 7477,
            7451, 7451, 7477, 7465, 7315, 6934, 6276, 5364, 4287, 3174, 2155, 1325, 725, 344, 136,
            42, 9, 1,
        ],
    ),
    (
        7,
        7,
        &[
            1, 10, 52, 188, 532, 1257, 2582, 4737, 7909, 12179, 17468, 23514, 29896, 36105, 41645,
            46137, 49397, 51464, 52566, 53031, 53170, 53170, 53031, 52566, 51464, 49397, 46137,
            41645, 36105, 29896, 23514, 17468, 12179, 7909, 4737, 2582, 1257, 532, 188, 52, 10, 1,
        ],
    ),
];

/// Unimodality of `1^2 4^k 1^2` for `k = 1..=10`.
pub const FAMILY_14K1_VERDICTS: [bool; 10] = [
    true, false, false, false, false, false, true, true, true, true,
];

/// Unimodality verdicts matching [`GARSTKA_DESCRIPTORS`].
pub const GARSTKA_VERDICTS: [bool; 6] = [false, false, true, true, true, true];

/// Coefficients of `Q` for the hedgehog `21412`, from `q^0`.
pub const HEDGEHOG_21412: [i64; 9] = [0, 0, 1, 4, 5, 4, 5, 4, 1];

pub fn table_poly(low: usize, coeffs: &[i64]) -> QPolynomial {
    QPolynomial::from_i64s(coeffs).shift(low)
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenCheck {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn verdict(id: usize, name: &'static str, outcome: Result<(), String>) -> GoldenCheck {
    let (passed, detail) = match outcome {
        Ok(()) => (true, String::new()),
        Err(d) => (false, d),
    };
    GoldenCheck {
        id,
        name,
        passed,
        detail,
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn hedgehog_q(delays: &[u32]) -> Result<QPolynomial, String> {
    let t = DelayedTree::hedgehog(delays).map_err(|e| e.to_string())?;
    plucking_delay(&t.tree, &t.delays).map_err(|e| e.to_string())
}

fn worked_example() -> Result<(), String> {
    let t = parse_tree("(()(()()))").map_err(|e| e.to_string())?;
    expect_eq(
        "Q(T)",
        plucking(&t),
        QPolynomial::from_i64s(&[1, 2, 2, 2, 1]),
    )?;
    expect_eq("r", t.r_values(), vec![3, 1, 0])?;
    // v1 is the rightmost leaf, v3 the leftmost.
    let drop = |i| t.remove_leaf(LeafRef(i)).map_err(|e| e.to_string());
    expect_eq(
        "Q(T - v1)",
        plucking(&drop(2)?),
        QPolynomial::from_i64s(&[1, 1, 1]),
    )?;
    expect_eq(
        "Q(T - v3)",
        plucking(&drop(0)?),
        QPolynomial::from_i64s(&[1, 1]),
    )
}

fn delayed_example() -> Result<(), String> {
    let (t, f) = parse_delayed_tree("(2((3))1)").map_err(|e| e.to_string())?;
    let q = plucking_delay(&t, &f).map_err(|e| e.to_string())?;
    expect_eq("Q(T, f)", q, QPolynomial::from_i64s(&[0, 0, 0, 1]))
}

fn hedgehog_identity() -> Result<(), String> {
    for n in 0..=8 {
        expect_eq(
            &format!("n={n}"),
            plucking(&PlaneRootedTree::hedgehog(n)),
            q_factorial(n),
        )?;
    }
    Ok(())
}

fn anti_unimodal_example() -> Result<(), String> {
    let want = QPolynomial::from_i64s(&[0, 0, 0, 1, 3, 4, 3, 1]);
    expect_eq("recursion", hedgehog_q(&[3, 2, 1, 2, 3])?, want.clone())?;
    let h = DelayedHedgehog::new(vec![3, 2, 1, 2, 3]).map_err(|e| e.to_string())?;
    let closed = hedgehog_anti_unimodal(&h).map_err(|e| e.to_string())?;
    expect_eq("closed form", closed.clone(), want)?;
    let f = factor_quantum(&closed).map_err(|e| e.to_string())?;
    expect_eq("shift", f.shift, 3)?;
    expect_eq("factors", f.multiplicities(), vec![(3, 1), (2, 2)])?;
    expect_eq("residual", f.residual.is_one(), true)
}

fn family_tables() -> Result<(), String> {
    for &(k, low, coeffs) in &FAMILY_14K1_TABLES {
        let closed = family_1_4k_1(k).map_err(|e| e.to_string())?;
        expect_eq(
            &format!("k={k} table"),
            closed.clone(),
            table_poly(low, coeffs),
        )?;
        if k <= 3 {
            let mut d = vec![1, 1];
            d.extend(std::iter::repeat_n(4, k));
            d.extend([1, 1]);
            expect_eq(&format!("k={k} recursion"), hedgehog_q(&d)?, closed)?;
        }
    }
    Ok(())
}

fn family_verdicts() -> Result<(), String> {
    let got: Vec<bool> = scan_family_1_4k_1(10)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|(_, u)| u)
        .collect();
    expect_eq("verdicts k=1..10", got, FAMILY_14K1_VERDICTS.to_vec())
}

fn garstka() -> Result<(), String> {
    let report = check_garstka_report();
    expect_eq(
        "21412",
        report.records[0].polynomial.clone(),
        QPolynomial::from_i64s(&HEDGEHOG_21412),
    )?;
    for ((rec, want), name) in report
        .records
        .iter()
        .zip(GARSTKA_VERDICTS)
        .zip(GARSTKA_DESCRIPTORS)
    {
        expect_eq(name, rec.unimodal, want)?;
    }
    Ok(())
}

fn conjecture(opts: &ScanOptions) -> Result<(), String> {
    let r = verify_conjecture_12(8, opts).map_err(|e| e.to_string())?;
    expect_eq("records", r.summary.total, 510)?;
    expect_eq("non-unimodal", r.summary.non_unimodal, Vec::<String>::new())
}

fn anti_unimodal_scan(opts: &ScanOptions) -> Result<(), String> {
    let r = scan_anti_unimodal(6, 4, opts).map_err(|e| e.to_string())?;
    expect_eq("non-unimodal", r.summary.non_unimodal, Vec::<String>::new())
}

fn family_1a3k1b_cross_check() -> Result<(), String> {
    let mut plucker = Plucker::new();
    for a in 1..=3 {
        for k in 1..=3 {
            for b in 1..=3 {
                let mut d = vec![1; a];
                d.extend(std::iter::repeat_n(3, k));
                d.extend(std::iter::repeat_n(1, b));
                let t = DelayedTree::hedgehog(&d).map_err(|e| e.to_string())?;
                let rec = plucker
                    .delayed(&t.tree, &t.delays)
                    .map_err(|e| e.to_string())?;
                let closed = family_1a3k1b(a, k, b).map_err(|e| e.to_string())?;
                expect_eq(&format!("(a,k,b)=({a},{k},{b})"), closed, rec)?;
            }
        }
    }
    Ok(())
}

fn propositions(opts: &ScanOptions) -> Result<(), String> {
    check_prop33(10, opts).map_err(|e| e.to_string())?;
    check_prop35_and_corollary(8, opts).map_err(|e| e.to_string())?;
    Ok(())
}

fn embedding(opts: &ScanOptions) -> Result<(), String> {
    embedding_invariance_test(10, 100, 5, 0, opts)
        .map(|_| ())
        .map_err(|e| e.to_string())
}

fn q_identities() -> Result<(), String> {
    for n in 0..=12usize {
        for k in 0..=n {
            let g = gaussian_binomial(n, k as i64);
            let ratio = &(&g * &q_factorial(k)) * &q_factorial(n - k);
            expect_eq(&format!("ratio n={n} k={k}"), ratio, q_factorial(n))?;
            expect_eq(
                &format!("symmetry n={n} k={k}"),
                g,
                gaussian_binomial(n, (n - k) as i64),
            )?;
        }
    }
    let r = two_branch_check(6, 6).map_err(|e| e.to_string())?;
    let anchor = plucking(&PlaneRootedTree::two_branch(1, 2));
    expect_eq("Q(T_{1,2})", anchor, crate::qpoly::quantum_integer(3))?;
    expect_eq("two-branch records", r.records.len(), 36)
}

/// Runs every library-level reference check, in order.
pub fn run_all(opts: &ScanOptions) -> Vec<GoldenCheck> {
    vec![
        verdict(1, "worked four-edge tree", worked_example()),
        verdict(2, "delayed tree (2((3))1)", delayed_example()),
        verdict(3, "hedgehog equals q-factorial", hedgehog_identity()),
        verdict(4, "anti-unimodal hedgehog 32123", anti_unimodal_example()),
        verdict(5, "1^2 4^k 1^2 tables", family_tables()),
        verdict(6, "1^2 4^k 1^2 unimodality", family_verdicts()),
        verdict(7, "21412 and neighbours", garstka()),
        verdict(8, "{1,2}-delay hedgehogs up to 8 leaves", conjecture(opts)),
        verdict(9, "anti-unimodal closed form", anti_unimodal_scan(opts)),
        verdict(10, "1^a 3^k 1^b closed form", family_1a3k1b_cross_check()),
        verdict(11, "eps-vector propositions", propositions(opts)),
        verdict(12, "embedding independence", embedding(opts)),
        verdict(13, "q-binomial identities", q_identities()),
    ]
}
