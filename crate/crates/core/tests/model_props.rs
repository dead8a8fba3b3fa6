mod common;

use common::{arb_table, arb_table_and_permutation};
use concept_interference::complexlin::{inner_product, project_probability, superpose_normalized};
use concept_interference::dataset::Column;
use concept_interference::solver::{assign_signs, InterferenceClass};
use concept_interference::{solve, Error, StateVector};
use proptest::prelude::*;

fn solve_or_skip(
    t: &concept_interference::TypicalityTable,
) -> Result<concept_interference::InterferenceSolution, TestCaseError> {
    match solve(t) {
        Ok(s) => Ok(s),
        // c_m = 0 happens only on measure-zero inputs.
        Err(Error::Degenerate(_)) => Err(TestCaseError::reject("degenerate c_m")),
        Err(e) => Err(TestCaseError::fail(format!(
            "feasible table failed to solve: {e}"
        ))),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn pythagorean_identity(t in arb_table(30)) {
        let s = solve_or_skip(&t)?;
        for (row, r) in s.rows.iter().zip(t.records()) {
            let lhs = row.lambda * row.lambda + row.deviation * row.deviation;
            prop_assert!((lhs - r.mu_a * r.mu_b).abs() <= 1e-12, "exemplar {}", row.index);
        }
        // At m the reported lambda is the raw magnitude; the plane coefficient
        // absorbs what the other exemplars leave over.
        let off_m: f64 = s.rows.iter().filter(|r| r.index != s.m).map(|r| r.lambda).sum();
        let rm = t.record(s.m).unwrap();
        let dm = s.rows[s.m - 1].deviation;
        let lhs = s.c_m * s.c_m * rm.mu_a * rm.mu_b;
        prop_assert!((lhs - (off_m * off_m + dm * dm)).abs() <= 1e-12);
    }

    #[test]
    fn vectors_are_orthonormal_and_reconstruct(t in arb_table(30)) {
        let s = solve_or_skip(&t)?;
        let r = s.residuals;
        prop_assert!(r.orthogonality_modulus < 1e-9);
        prop_assert!(r.norm_a_error <= 1e-9 && r.norm_b_error <= 1e-9);
        prop_assert!(r.max_reconstruction_error <= 1e-9);

        // Recompute independently of the stored residuals.
        prop_assert!(inner_product(&s.vector_a, &s.vector_b).unwrap().norm() < 1e-9);
        let psi = superpose_normalized(&s.vector_a, &s.vector_b).unwrap();
        let layout = s.layout();
        let mut total = 0.0;
        for rec in t.records() {
            let p = project_probability(&layout, rec.index, &psi).unwrap();
            prop_assert!((p - rec.mu_ab).abs() <= 1e-9);
            total += p;
        }
        prop_assert!((total - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn lambdas_sum_to_zero_and_cm_in_unit_interval(t in arb_table(30)) {
        let s = solve_or_skip(&t)?;
        prop_assert!(s.c_m > 0.0 && s.c_m <= 1.0);
        // With c_m folded in, the signed imaginary parts cancel.
        let im: f64 = s.vector_b.amplitudes().iter().zip(s.vector_a.amplitudes()).map(|(b, a)| a.re * b.im).sum();
        prop_assert!(im.abs() < 1e-9);
        for row in &s.rows {
            if row.index != s.m {
                prop_assert_eq!(row.c, 1.0);
                prop_assert_eq!(row.beta_deg, row.phi_deg);
            } else {
                prop_assert_eq!(row.beta_deg, row.phi_deg.abs());
            }
        }
    }

    #[test]
    fn permutation_equivariance((t, order) in arb_table_and_permutation(20)) {
        let s = solve_or_skip(&t)?;
        let p = t.permuted(&order).unwrap();
        let sp = solve(&p).unwrap();
        prop_assert_eq!(sp.c_m.to_bits(), s.c_m.to_bits());
        prop_assert_eq!(order[sp.m - 1] + 1, s.m);
        for (i, &src) in order.iter().enumerate() {
            let (a, b) = (&sp.rows[i], &s.rows[src]);
            prop_assert_eq!(&a.name, &b.name);
            prop_assert_eq!(a.lambda, b.lambda);
            prop_assert_eq!(a.phi_deg, b.phi_deg);
            prop_assert_eq!(a.deviation, b.deviation);
        }
        prop_assert!(sp.residuals.within(1e-9, 1e-9, 1e-9));
    }

    #[test]
    fn determinism(t in arb_table(30)) {
        let first = solve(&t);
        let second = solve(&t);
        match (first, second) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(&a, &b);
                let bits = |s: &StateVector| -> Vec<(u64, u64)> {
                    s.amplitudes().iter().map(|z| (z.re.to_bits(), z.im.to_bits())).collect()
                };
                prop_assert_eq!(bits(&a.vector_b), bits(&b.vector_b));
            }
            (Err(a), Err(b)) => prop_assert_eq!(a.to_string(), b.to_string()),
            _ => prop_assert!(false, "runs disagree"),
        }
    }

    #[test]
    fn greedy_running_sum_stays_in_range(mags in prop::collection::vec(0.0f64..1.0, 2..40)) {
        let s = assign_signs(&mags).unwrap();
        let top = mags.iter().cloned().fold(0.0, f64::max);
        prop_assert_eq!(mags[s.m - 1], top);
        prop_assert_eq!(s.trace.len(), mags.len());
        for step in &s.trace {
            prop_assert!(step.running_sum >= 0.0 && step.running_sum <= top);
        }
        let mut visit = s.visit_order();
        visit.sort_unstable();
        prop_assert_eq!(visit, (1..=mags.len()).collect::<Vec<_>>());
    }

    #[test]
    fn classification_agrees_with_phase(t in arb_table(30)) {
        let s = solve_or_skip(&t)?;
        for row in &s.rows {
            let by_dev = InterferenceClass::from_deviation(row.deviation);
            if row.deviation.abs() > 1e-9 {
                prop_assert_eq!(by_dev, InterferenceClass::from_phase_deg(row.phi_deg));
            }
            let rec = t.record(row.index).unwrap();
            let above = rec.mu_ab > rec.average();
            if by_dev == InterferenceClass::Strengthening {
                prop_assert!(above);
            }
        }
    }

    #[test]
    fn vector_a_is_real_square_roots(t in arb_table(30)) {
        let s = solve_or_skip(&t)?;
        let a = s.vector_a.amplitudes();
        for (z, mu) in a.iter().zip(t.column(Column::A)) {
            prop_assert_eq!(z.im, 0.0);
            prop_assert_eq!(z.re, mu.sqrt());
        }
        prop_assert_eq!(a[t.len()].re, 0.0);
    }
}

#[test]
fn single_precision_solves_bundled_table() {
    use concept_interference::dataset::{published, validate_and_normalize};
    let t: concept_interference::f32::TypicalityTable = validate_and_normalize(
        concept_interference::parse_table(published::FRUITS_VEGETABLES_CSV).unwrap(),
        0.02,
    )
    .unwrap();
    let s = solve(&t).unwrap();
    assert_eq!(s.m, published::M);
    assert!(s.residuals.within(1e-5, 1e-5, 1e-5));
}
