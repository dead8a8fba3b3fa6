#![allow(dead_code)]

use concept_interference::dataset::{published, validate_and_normalize, DEFAULT_SUM_TOLERANCE};
use concept_interference::TypicalityTable;
use proptest::prelude::*;

pub fn bundled_normalized() -> TypicalityTable {
    validate_and_normalize(published::fruits_vegetables(), DEFAULT_SUM_TOLERANCE).unwrap()
}

/// Builds a normalized table with every radicand positive.
///
/// Deviations are drawn as a fraction of sqrt(mu_a mu_b) and then shifted so
/// they sum to zero; with `strength <= 0.45` each |d_k| stays below
/// 0.9 sqrt(mu_a mu_b), which also keeps mu_ab positive.
pub fn feasible_table(
    weights_a: &[f64],
    weights_b: &[f64],
    raw: &[f64],
    strength: f64,
) -> TypicalityTable {
    let total_a: f64 = weights_a.iter().sum();
    let total_b: f64 = weights_b.iter().sum();
    let mu_a: Vec<f64> = weights_a.iter().map(|w| w / total_a).collect();
    let mu_b: Vec<f64> = weights_b.iter().map(|w| w / total_b).collect();
    let geo: Vec<f64> = mu_a
        .iter()
        .zip(&mu_b)
        .map(|(a, b)| (a * b).sqrt())
        .collect();
    let mut d: Vec<f64> = raw
        .iter()
        .zip(&geo)
        .map(|(r, g)| strength * r * g)
        .collect();
    let shift = d.iter().sum::<f64>() / geo.iter().sum::<f64>();
    for (dk, g) in d.iter_mut().zip(&geo) {
        *dk -= shift * g;
    }
    let rows = (0..mu_a.len()).map(|k| {
        (
            format!("x{}", k + 1),
            mu_a[k],
            mu_b[k],
            0.5 * (mu_a[k] + mu_b[k]) + d[k],
        )
    });
    let table = TypicalityTable::from_rows(rows, "A", "B", "A or B").unwrap();
    validate_and_normalize(table, DEFAULT_SUM_TOLERANCE).unwrap()
}

prop_compose! {
    pub fn arb_table(max_n: usize)(n in 2..=max_n)(
        a in prop::collection::vec(0.05f64..1.0, n),
        b in prop::collection::vec(0.05f64..1.0, n),
        r in prop::collection::vec(-1.0f64..1.0, n),
        s in 0.0f64..0.45,
    ) -> TypicalityTable {
        feasible_table(&a, &b, &r, s)
    }
}

prop_compose! {
    /// A feasible table together with a permutation of its rows.
    pub fn arb_table_and_permutation(max_n: usize)(t in arb_table(max_n))(
        order in Just((0..t.len()).collect::<Vec<usize>>()).prop_shuffle(),
        t in Just(t),
    ) -> (TypicalityTable, Vec<usize>) {
        (t, order)
    }
}
