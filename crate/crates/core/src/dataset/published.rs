//! Reference values for the bundled Fruits / Vegetables dataset, as published
//! alongside the raw typicality frequencies (four-decimal rounding).

use super::{parse_table, TypicalityTable};
use crate::scalar::Scalar;

/// Raw bundled CSV (Hampton's Fruits / Vegetables typicality frequencies).
pub const FRUITS_VEGETABLES_CSV: &str = include_str!("../../data/fruits_vegetables.csv");

/// Parses the bundled table. Columns are as published and sum to 1 only
/// within rounding; run it through
/// [`validate_and_normalize`](super::validate_and_normalize) before solving.
pub fn fruits_vegetables() -> TypicalityTable<f64> {
    parse_table(FRUITS_VEGETABLES_CSV).expect("bundled dataset parses")
}

/// Published signed λ per exemplar.
pub const LAMBDA: [f64; 24] = [
    0.0218, -0.0214, -0.0285, 0.0397, 0.0261, 0.0415, -0.0404, 0.0428, -0.0186, 0.0183, 0.0173,
    -0.0272, -0.0147, 0.0088, -0.0254, 0.0252, -0.0503, 0.0615, 0.0768, -0.0733, -0.0422, -0.0238,
    -0.0178, 0.0193,
];

/// Published phase angles in degrees.
pub const PHI_DEG: [f64; 24] = [
    83.8854, -94.5520, -95.3620, 91.8715, 57.9533, 95.8648, -113.2431, 87.6039, -105.9806, 99.3810,
    50.0889, -86.4374, -57.6399, 18.6744, -69.0705, 104.7126, -95.6518, 98.0833, 100.7557,
    -103.4804, -99.6048, -96.6635, -61.1698, 86.6308,
];

/// Index of the exemplar carrying the plane projector (Tomato).
pub const M: usize = 19;

pub const C_M: f64 = 0.7997;

/// Published coordinates of the real concept-A vector in C^25.
pub const VECTOR_A: [f64; 25] = [
    0.1895, 0.2061, 0.1929, 0.2421, 0.2748, 0.3204, 0.3373, 0.3441, 0.1222, 0.1165, 0.1252, 0.1291,
    0.1002, 0.1182, 0.1059, 0.0974, 0.1800, 0.2308, 0.2967, 0.2823, 0.1194, 0.1181, 0.1245, 0.1128,
    0.0,
];

/// Published moduli of the concept-B vector coordinates.
///
/// Coordinate 19 is printed without the c_m factor its own construction
/// requires (0.2606 = sqrt(0.0679)); the consistent value is
/// `c_m * sqrt(mu_b[19])`, about 0.209.
pub const VECTOR_B_MODULI: [f64; 25] = [
    0.1154, 0.1040, 0.1484, 0.1640, 0.1120, 0.1302, 0.1302, 0.1246, 0.1580, 0.1596, 0.1798, 0.2112,
    0.1734, 0.2334, 0.2565, 0.2670, 0.2806, 0.2690, 0.2606, 0.2670, 0.3584, 0.2031, 0.1630, 0.1716,
    0.1565,
];

/// Published greedy visit order (exemplar indices) with the chosen signs.
pub const SIGN_TRACE: [(usize, i8); 24] = [
    (19, 1),
    (20, -1),
    (18, 1),
    (17, -1),
    (8, 1),
    (21, -1),
    (6, 1),
    (7, -1),
    (4, 1),
    (3, -1),
    (12, -1),
    (5, 1),
    (15, -1),
    (16, 1),
    (22, -1),
    (1, 1),
    (2, -1),
    (24, 1),
    (9, -1),
    (10, 1),
    (23, -1),
    (11, 1),
    (13, -1),
    (14, 1),
];

/// Exemplars published as weakened by interference, in published order.
pub const WEAKENING: [&str; 14] = [
    "Elderberry",
    "Mustard",
    "Lentils",
    "Pumpkin",
    "Tomato",
    "Broccoli",
    "Wheat",
    "Yam",
    "Rice",
    "Raisin",
    "Green Pepper",
    "Peanut",
    "Acorn",
    "Olive",
];

/// Exemplars published as strengthened by interference. Watercress appears in
/// neither published list.
pub const STRENGTHENING: [&str; 9] = [
    "Mushroom",
    "Root Ginger",
    "Garlic",
    "Coconut",
    "Parsley",
    "Almond",
    "Chili Pepper",
    "Black Pepper",
    "Apple",
];

/// True when `table` lists exactly the bundled exemplars in bundled order.
pub fn is_fruits_vegetables<T: Scalar>(table: &TypicalityTable<T>) -> bool {
    let reference = fruits_vegetables();
    table.len() == reference.len()
        && table
            .records()
            .iter()
            .zip(reference.records())
            .all(|(a, b)| a.name == b.name)
}
