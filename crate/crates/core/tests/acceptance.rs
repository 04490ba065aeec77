//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any failed.

use std::time::{Duration, Instant};

use num_integer::Integer;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use qforms::characters::{twisted_sigma3, DirichletChar};
use qforms::formspace::{build_family, cusp_quotients, independence_rank};
use qforms::oracle::{count_by_enumeration, count_coefficients_by_convolution, CountQuery};
use qforms::series::{euler_product, rat, QSeries};
use qforms::solver::{compare_with_golden, Solver, TABLE4};
use qforms::theta::{catalog, phi_series, theta_product, Family};
use qforms::verify::{self, VerifyConfig};

const CASES: u32 = 256;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn golden_table(solver: &Solver) -> Outcome {
    let solved = solver.solve_family(Family::Chi5).map_err(|e| e.to_string())?;
    let mismatches = compare_with_golden(&solved, &TABLE4);
    if mismatches.is_empty() {
        Ok(format!("{}/36 chi5 rows match x1..x6, y1..y8 exactly", solved.len()))
    } else {
        Err(mismatches.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))
    }
}

fn cusp_ranks() -> Outcome {
    let mut parts = Vec::new();
    for (family, expected) in [(Family::Chi4, 10), (Family::Chi5, 8), (Family::Chi6, 10)] {
        let basis = build_family(family, 120).map_err(|e| e.to_string())?;
        let cusps: Vec<_> = basis.cusp_elements().cloned().collect();
        let r = independence_rank(&cusps, 120);
        parts.push(format!("{family} rank {r}"));
        if r != expected {
            return Err(format!("{family}: rank {r}, expected {expected}"));
        }
    }
    Ok(format!("{} at order 120", parts.join(", ")))
}

fn ligozat() -> Outcome {
    let mut total = 0;
    for (family, disc) in [(Family::Chi4, 8), (Family::Chi5, 12), (Family::Chi6, 24)] {
        for (i, q) in cusp_quotients(family).iter().enumerate() {
            let r = q.ligozat_check().map_err(|e| e.to_string())?;
            if !(r.violated_conditions.is_empty() && r.is_cusp_form && r.weight == 4 && r.character_discriminant == disc) {
                return Err(format!("{family} quotient {} ({q}) fails:\n{r}", i + 1));
            }
            total += 1;
        }
    }
    Ok(format!("{total}/28 quotients satisfy L1-L4, weight 4, discriminants 8/12/24"))
}

fn jacobi_identity() -> Outcome {
    let order = 1000;
    let lhs = &(&phi_series(order) * &euler_product(1, 2, order)) * &euler_product(4, 2, order);
    let rhs = euler_product(2, 5, order);
    match (&lhs - &rhs).valuation() {
        None => Ok(format!("phi(q) F(q)^2 F(q^4)^2 = F(q^2)^5 through q^{order}")),
        Some(n) => Err(format!("first difference at q^{n}")),
    }
}

fn full_verification(solver: &Solver) -> Outcome {
    let start = Instant::now();
    let report = verify::run(solver, &VerifyConfig::default(), &TABLE4).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if !report.passed() {
        return Err(report.to_string());
    }
    if elapsed > Duration::from_secs(120) {
        return Err(format!("sweep took {elapsed:.1?}"));
    }
    Ok(format!("{}; 20 sampled forms match enumeration to n=60 ({elapsed:.1?})", report.summary()))
}

fn derived_tables(solver: &Solver) -> Outcome {
    let order = solver.verify_order();
    let mut counts = Vec::new();
    for (family, expected) in [(Family::Chi4, 36), (Family::Chi6, 40)] {
        let solved = solver.solve_family(family).map_err(|e| e.to_string())?;
        if solved.len() != expected {
            return Err(format!("{family}: {} forms, expected {expected}", solved.len()));
        }
        for s in &solved {
            let residual = &s.combination(solver.basis(family)) - &theta_product(&s.form, order);
            if let Some(n) = residual.valuation() {
                return Err(format!("{} residual at q^{n}", s.form));
            }
        }
        counts.push(format!("{expected} {family}"));
    }
    Ok(format!("{} forms reproduce their theta products through q^{order}", counts.join(" + ")))
}

fn pinned_zeros(solver: &Solver) -> Outcome {
    let solved = solver.solve_family(Family::Chi5).map_err(|e| e.to_string())?;
    let expected = ["E4[chi2,chi3](q^2)", "E4[chi5,chi0](q^2)"];
    for s in &solved {
        if s.pinned_zeros != expected {
            return Err(format!("{}: pinned {:?}", s.form, s.pinned_zeros));
        }
    }
    Ok(format!("{} chi5 forms give exactly 0 for {}", solved.len(), expected.join(" and ")))
}

fn small_series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 13).prop_map(|v| QSeries::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

fn any_char() -> impl Strategy<Value = DirichletChar> {
    prop::sample::select(DirichletChar::ALL.to_vec())
}

fn run_property<S, F>(name: &str, strategy: S, test: F) -> Result<(), String>
where
    S: Strategy,
    F: Fn(S::Value) -> Result<(), TestCaseError>,
{
    let mut runner = TestRunner::new(Config { cases: CASES, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn properties() -> Outcome {
    run_property("series ring laws", (small_series(), small_series(), small_series()), |(a, b, c)| {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &QSeries::one(a.order()), a);
        Ok(())
    })?;
    run_property("euler product inverse", (1usize..=24, -8i64..=8), |(d, r)| {
        let p = &euler_product(d, r, 60) * &euler_product(d, -r, 60);
        prop_assert_eq!(p, QSeries::one(60));
        Ok(())
    })?;
    run_property("character multiplicativity and period", (any_char(), 1u64..5000, 1u64..5000), |(chi, m, n)| {
        prop_assert_eq!(chi.value(m * n), chi.value(m) * chi.value(n));
        let period = chi.discriminant().unsigned_abs();
        prop_assert_eq!(chi.value(m + period), chi.value(m));
        Ok(())
    })?;
    run_property("twisted sigma multiplicativity", (any_char(), any_char(), 1i64..300, 1i64..300), |(p1, p2, m, n)| {
        prop_assume!(m.gcd(&n) == 1);
        prop_assert_eq!(twisted_sigma3(p1, p2, m * n), twisted_sigma3(p1, p2, m) * twisted_sigma3(p1, p2, n));
        Ok(())
    })?;
    let perm = Just([0usize, 1, 2, 3, 4, 5, 6, 7]).prop_shuffle();
    run_property("count evenness and permutation invariance", (0usize..112, 1u64..50, perm), |(idx, n, perm)| {
        let base = catalog()[idx].form.coefficients();
        let shuffled = perm.map(|p| base[p]);
        let a = count_by_enumeration(&CountQuery::new(base, n)).unwrap();
        let b = count_by_enumeration(&CountQuery::new(shuffled, n)).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!(a.is_multiple_of(2));
        prop_assert_eq!(count_coefficients_by_convolution(&shuffled, n as usize)[n as usize], a);
        Ok(())
    })?;
    Ok(format!("5 suites x {CASES} cases: series ring laws, euler inverses, characters, twisted sigma, counts"))
}

fn main() {
    let solver = Solver::standard().expect("family bases build");
    let criteria: Vec<Criterion> = vec![
        ("1 published chi5 table", Box::new(|| golden_table(&solver))),
        ("2 cusp space dimensions", Box::new(cusp_ranks)),
        ("3 ligozat conditions", Box::new(ligozat)),
        ("4 jacobi identity", Box::new(jacobi_identity)),
        ("5 formulas against oracles", Box::new(|| full_verification(&solver))),
        ("6 derived chi4 and chi6 tables", Box::new(|| derived_tables(&solver))),
        ("7 chi5 pinned zeros", Box::new(|| pinned_zeros(&solver))),
        ("8 randomized properties", Box::new(properties)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("[PASS] criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {name}: {detail}");
            }
        }
    }
    println!("{}/{} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
