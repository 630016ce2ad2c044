//! Acceptance suite: one PASS/FAIL line per criterion, all exact.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::process::Command;
use std::time::{Duration, Instant};

use plucking::plucking::{
    family_1_4k_1, family_1a3k1b, hedgehog_anti_unimodal, plucking, plucking_delay,
    DelayedHedgehog, Plucker,
};
use plucking::qpoly::{
    factor_quantum, gaussian_binomial, is_unimodal, q_factorial, quantum_integer,
};
use plucking::search::golden::{table_poly, FAMILY_14K1_TABLES};
use plucking::search::{
    all_sequences, anti_unimodal_sequences, check_garstka_list, check_prop33,
    check_prop35_and_corollary, embedding_invariance_test, two_branch_check, verify_conjecture_12,
    ScanOptions,
};
use plucking::tree::{parse_delayed_tree, parse_tree, random_tree};
use plucking::{DelayedTree, LeafRef, PlaneRootedTree, QPolynomial};

type Check = Result<(), String>;
type Criterion = (usize, &'static str, Duration, Box<dyn Fn() -> Check>);

fn p(c: &[i64]) -> QPolynomial {
    QPolynomial::from_i64s(c)
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    ensure(got == want, || {
        format!("{what}: got {got:?}, want {want:?}")
    })
}

fn hedgehog_q(delays: &[u32]) -> QPolynomial {
    let t = DelayedTree::hedgehog(delays).unwrap();
    plucking_delay(&t.tree, &t.delays).unwrap()
}

fn c1_worked_example() -> Check {
    let t = parse_tree("(()(()()))").map_err(|e| e.to_string())?;
    eq("Q(T)", plucking(&t), p(&[1, 2, 2, 2, 1]))?;
    eq("r left to right", t.r_values(), vec![3, 1, 0])?;
    // v1 is the rightmost leaf (r = 0), v3 the leftmost (r = 3).
    eq(
        "Q(T - v1)",
        plucking(&t.remove_leaf(LeafRef(2)).unwrap()),
        p(&[1, 1, 1]),
    )?;
    eq(
        "Q(T - v3)",
        plucking(&t.remove_leaf(LeafRef(0)).unwrap()),
        p(&[1, 1]),
    )?;
    eq(
        "(1+q)(1+q+q^2+q^3)",
        plucking(&t),
        &quantum_integer(2) * &quantum_integer(4),
    )
}

fn c2_delayed_example() -> Check {
    let (t, f) = parse_delayed_tree("(2((3))1)").map_err(|e| e.to_string())?;
    eq("Q(T, f)", plucking_delay(&t, &f).unwrap(), p(&[0, 0, 0, 1]))
}

fn c3_hedgehog_identity() -> Check {
    for n in 0..=8 {
        let want: QPolynomial =
            (1..=n).fold(QPolynomial::one(), |acc, k| &acc * &quantum_integer(k));
        eq(
            &format!("n={n}"),
            plucking(&PlaneRootedTree::hedgehog(n)),
            want,
        )?;
    }
    Ok(())
}

fn c4_anti_unimodal_example() -> Check {
    let want = p(&[0, 0, 0, 1, 3, 4, 3, 1]);
    eq("recursion", hedgehog_q(&[3, 2, 1, 2, 3]), want.clone())?;
    let h = DelayedHedgehog::new(vec![3, 2, 1, 2, 3]).unwrap();
    eq(
        "closed form",
        hedgehog_anti_unimodal(&h).unwrap(),
        want.clone(),
    )?;
    let f = factor_quantum(&want).map_err(|e| e.to_string())?;
    eq("shift", f.shift, 3)?;
    eq("factors", f.multiplicities(), vec![(3, 1), (2, 2)])?;
    eq("residual", f.residual, QPolynomial::one())
}

fn c5_family_tables() -> Check {
    for &(k, low, coeffs) in &FAMILY_14K1_TABLES {
        let q = family_1_4k_1(k).unwrap();
        eq(&format!("k={k}"), q.clone(), table_poly(low, coeffs))?;
        if k <= 3 {
            let mut d = vec![1, 1];
            d.extend(std::iter::repeat_n(4, k));
            d.extend([1, 1]);
            eq(&format!("k={k} recursion"), hedgehog_q(&d), q)?;
        }
    }
    let k6 = family_1_4k_1(6).unwrap();
    eq("k=6 q^24", k6.coeff(24), 7477.into())?;
    eq("k=6 q^23", k6.coeff(23), 7451.into())
}

fn c6_family_verdicts() -> Check {
    for k in 1..=10 {
        let want = !(2..=6).contains(&k);
        eq(
            &format!("k={k}"),
            is_unimodal(&family_1_4k_1(k).unwrap()),
            want,
        )?;
    }
    Ok(())
}

fn c7_garstka() -> Check {
    eq(
        "21412",
        hedgehog_q(&[2, 1, 4, 1, 2]),
        p(&[0, 0, 1, 4, 5, 4, 5, 4, 1]),
    )?;
    let got = check_garstka_list();
    let want = [
        ("21412", false),
        ("214412", false),
        ("1214121", true),
        ("112141211", true),
        ("2114112", true),
        ("211141112", true),
    ];
    eq("count", got.len(), want.len())?;
    for ((d, u), (wd, wu)) in got.iter().zip(want) {
        eq(d, (d.as_str(), *u), (wd, wu))?;
    }
    Ok(())
}

fn c8_conjecture(opts: &ScanOptions) -> Check {
    let r = verify_conjecture_12(8, opts).map_err(|e| e.to_string())?;
    eq(
        "records",
        r.summary.total,
        (1..=8).map(|n| 1usize << n).sum(),
    )?;
    eq("non-unimodal", r.summary.non_unimodal.len(), 0)
}

fn c9_anti_unimodal_scan() -> Check {
    let mut plucker = Plucker::new();
    let mut seen = 0;
    for len in 1..=6 {
        // Independent enumeration: filter the full product space.
        let values: Vec<u32> = (1..=4).collect();
        for d in all_sequences(len, &values) {
            let h = DelayedHedgehog::new(d.clone()).unwrap();
            if !h.is_anti_unimodal() || !d.contains(&1) {
                continue;
            }
            seen += 1;
            let t = DelayedTree::hedgehog(&d).unwrap();
            let rec = plucker.delayed(&t.tree, &t.delays).unwrap();
            let closed = hedgehog_anti_unimodal(&h).unwrap();
            eq(&format!("{d:?}"), &closed, &rec)?;
            ensure(rec.is_zero() || is_unimodal(&rec), || {
                format!("{d:?} not unimodal")
            })?;
        }
    }
    let generated: usize = (1..=6)
        .map(|n| anti_unimodal_sequences(n, 4, true).len())
        .sum();
    eq("enumeration size", generated, seen)
}

fn c10_family_1a3k1b() -> Check {
    for a in 1..=3 {
        for k in 1..=3 {
            for b in 1..=3 {
                let mut d = vec![1; a];
                d.extend(std::iter::repeat_n(3, k));
                d.extend(std::iter::repeat_n(1, b));
                eq(
                    &format!("({a},{k},{b})"),
                    family_1a3k1b(a, k, b).unwrap(),
                    hedgehog_q(&d),
                )?;
            }
        }
    }
    Ok(())
}

fn c11_propositions(opts: &ScanOptions) -> Check {
    let r33 = check_prop33(10, opts).map_err(|e| e.to_string())?;
    eq(
        "prop33 records",
        r33.summary.total,
        (2..=11).map(|n| 1usize << n).sum(),
    )?;
    let r35 = check_prop35_and_corollary(8, opts).map_err(|e| e.to_string())?;
    let prop35 = r35
        .records
        .iter()
        .filter(|r| r.input_descriptor.starts_with("prop35"))
        .count();
    eq(
        "prop35 records",
        prop35,
        (2..=10).map(|n| 1usize << n).sum(),
    )
}

fn c12_embedding(opts: &ScanOptions) -> Check {
    let r = embedding_invariance_test(10, 100, 5, 0, opts).map_err(|e| e.to_string())?;
    eq("trees", r.records.len(), 100)?;
    // Canonical keys on a corpus drawn the same way.
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
    for _ in 0..100 {
        let edges = rng.random_range(1..=10);
        let t = random_tree(edges, &mut rng);
        for s in 0..5 {
            eq(
                "canonical key",
                t.random_embedding(s).canonical_key(),
                t.canonical_key(),
            )?;
        }
    }
    Ok(())
}

fn c13_q_identities() -> Check {
    for n in 0..=12usize {
        for k in 0..=n {
            let g = gaussian_binomial(n, k as i64);
            let ratio = q_factorial(n)
                .exact_divide(&(&q_factorial(k) * &q_factorial(n - k)))
                .map_err(|e| e.to_string())?;
            eq(&format!("ratio {n},{k}"), &g, &ratio)?;
            eq(
                &format!("symmetry {n},{k}"),
                &g,
                &gaussian_binomial(n, (n - k) as i64),
            )?;
        }
    }
    two_branch_check(6, 6).map_err(|e| e.to_string())?;
    eq(
        "Q(T_{1,2})",
        plucking(&PlaneRootedTree::two_branch(1, 2)),
        quantum_integer(3),
    )
}

fn c14_cli() -> Check {
    let bin = env!("CARGO_BIN_EXE_plucking");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let golden: [(&[&str], i32, Option<&str>); 12] = [
        (
            &["compute", "--tree", "(()(()()))"],
            0,
            Some("1 + 2*q + 2*q^2 + 2*q^3 + q^4"),
        ),
        (&["compute", "--tree", "()"], 0, Some("1")),
        (&["compute", "--tree", "(()("], 2, None),
        (
            &["delay", "--hedgehog", "32123"],
            0,
            Some("q^3 + 3*q^4 + 4*q^5 + 3*q^6 + q^7"),
        ),
        (&["delay", "--tree", "(2((3))1)"], 0, Some("q^3")),
        (
            &[
                "closed-form",
                "--family",
                "anti-unimodal",
                "--delays",
                "3,2,1,2,3",
            ],
            0,
            Some("q^3 + 3*q^4 + 4*q^5 + 3*q^6 + q^7"),
        ),
        (
            &[
                "closed-form",
                "--family",
                "14k1",
                "--k",
                "2",
                "--cross-check",
            ],
            0,
            None,
        ),
        (
            &[
                "closed-form",
                "--family",
                "anti-unimodal",
                "--delays",
                "1,2,1",
            ],
            2,
            None,
        ),
        (
            &["check", "--poly", "1,2,2,1"],
            0,
            Some("unimodal=true strictly_unimodal=true symmetric=true"),
        ),
        (&["check", "--poly", ""], 2, None),
        (
            &["verify", "--suite", "conjecture12", "--max-leaves", "8"],
            0,
            None,
        ),
        (&["scan", "--max-leaves", "5", "--values", "1,2,4"], 1, None),
    ];
    for (args, code, out) in golden {
        let o = run(args);
        eq(&format!("{args:?} exit"), o.status.code(), Some(code))?;
        if let Some(out) = out {
            eq(
                &format!("{args:?} stdout"),
                String::from_utf8_lossy(&o.stdout).trim_end(),
                out,
            )?;
        }
    }
    let delay = run(&["delay", "--hedgehog", "1^2 4^2 1^2", "--output", "json"]);
    let q: QPolynomial = serde_json::from_slice(&delay.stdout).map_err(|e| e.to_string())?;
    eq("1^2 4^2 1^2", q, family_1_4k_1(2).unwrap())?;
    let check = run(&["check", "--poly", "0,0,1,4,5,4,5,4,1"]);
    ensure(
        String::from_utf8_lossy(&check.stdout).starts_with("unimodal=false"),
        || "check 21412 coefficients".into(),
    )?;
    let all = run(&["verify", "--suite", "paper-all"]);
    eq("paper-all exit", all.status.code(), Some(0))?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut reports = Vec::new();
    for (i, jobs) in ["1", "1", "4"].iter().enumerate() {
        let path = dir.path().join(format!("{i}.jsonl"));
        let o = run(&[
            "verify",
            "--suite",
            "conjecture12",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        eq("report run exit", o.status.code(), Some(0))?;
        reports.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(reports.windows(2).all(|w| w[0] == w[1]), || {
        "reports differ".into()
    })?;
    let records =
        plucking::search::report::read_jsonl(reports[0].as_slice()).map_err(|e| e.to_string())?;
    eq("report records", records.len(), 510)?;
    ensure(records.iter().all(|r| r.is_consistent()), || {
        "inconsistent record".into()
    })?;
    let mut rewritten = Vec::new();
    plucking::search::report::write_jsonl(&mut rewritten, &records).map_err(|e| e.to_string())?;
    eq("JSONL round trip", rewritten, reports[0].clone())
}

#[test]
fn acceptance() {
    let opts = ScanOptions::default();
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "worked four-edge tree",
            Duration::from_millis(1),
            Box::new(c1_worked_example),
        ),
        (
            2,
            "delayed tree (2((3))1) = q^3",
            Duration::from_secs(1),
            Box::new(c2_delayed_example),
        ),
        (
            3,
            "Q(hedgehog n) = [n]_q!, n <= 8",
            Duration::from_secs(1),
            Box::new(c3_hedgehog_identity),
        ),
        (
            4,
            "hedgehog 32123 and its factorization",
            Duration::from_secs(1),
            Box::new(c4_anti_unimodal_example),
        ),
        (
            5,
            "1^2 4^k 1^2 tables, k = 2..7",
            Duration::from_secs(5),
            Box::new(c5_family_tables),
        ),
        (
            6,
            "1^2 4^k 1^2 unimodality, k = 1..10",
            Duration::from_secs(5),
            Box::new(c6_family_verdicts),
        ),
        (
            7,
            "21412 and related hedgehogs",
            Duration::from_secs(1),
            Box::new(c7_garstka),
        ),
        (
            8,
            "{1,2}-delay hedgehogs up to 8 leaves",
            Duration::from_secs(10),
            Box::new(move || c8_conjecture(&opts)),
        ),
        (
            9,
            "anti-unimodal closed form, length <= 6, values <= 4",
            Duration::from_secs(30),
            Box::new(c9_anti_unimodal_scan),
        ),
        (
            10,
            "1^a 3^k 1^b closed form",
            Duration::from_secs(10),
            Box::new(c10_family_1a3k1b),
        ),
        (
            11,
            "eps-vector propositions",
            Duration::from_secs(10),
            Box::new(move || c11_propositions(&opts)),
        ),
        (
            12,
            "embedding independence",
            Duration::from_secs(30),
            Box::new(move || c12_embedding(&opts)),
        ),
        (
            13,
            "q-binomial identities and two-branch trees",
            Duration::from_secs(5),
            Box::new(c13_q_identities),
        ),
        (
            14,
            "CLI contract",
            Duration::from_secs(60),
            Box::new(c14_cli),
        ),
    ];
    let mut failures = Vec::new();
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= budget, || {
                format!("took {elapsed:?}, budget {budget:?}")
            })
        });
        match &outcome {
            Ok(()) => println!("PASS {id:>2} {name} ({elapsed:.2?})"),
            Err(why) => {
                println!("FAIL {id:>2} {name} ({elapsed:.2?}): {why}");
                failures.push(id);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
