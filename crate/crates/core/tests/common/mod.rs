//! Published reference values for the two three-variable cases.
#![allow(dead_code)]

/// `(γ, [x1, x2, x3], [δ1..δ4], E[f0])` rows as printed, three decimals.
pub type TableRow = (f64, [f64; 3], [f64; 4], f64);

const D: [f64; 4] = [0.333, 0.333, 0.333, 0.667];

pub const TABLE_TRI: [TableRow; 9] = [
    (0.1, [2.930, 1.712, 1.344], D, 274.632),
    (0.2, [2.974, 1.737, 1.364], D, 282.857),
    (0.3, [3.006, 1.756, 1.379], D, 289.113),
    (0.4, [3.035, 1.773, 1.392], D, 294.700),
    (0.5, [3.063, 1.789, 1.405], D, 300.156),
    (0.6, [3.088, 1.804, 1.416], D, 304.971),
    (0.7, [3.109, 1.816, 1.425], D, 309.107),
    (0.8, [3.128, 1.828, 1.435], D, 313.064),
    (0.9, [3.156, 1.844, 1.447], D, 318.663),
];

pub const TABLE_TRA: [TableRow; 9] = [
    (0.1, [3.248, 1.579, 1.287], D, 273.098),
    (0.2, [3.293, 1.601, 1.305], D, 280.738),
    (0.3, [3.326, 1.617, 1.318], D, 286.393),
    (0.4, [3.354, 1.631, 1.329], D, 291.273),
    (0.5, [3.382, 1.645, 1.340], D, 296.112),
    (0.6, [3.414, 1.660, 1.353], D, 301.699),
    (0.7, [3.447, 1.676, 1.366], D, 307.496),
    (0.8, [3.476, 1.690, 1.378], D, 312.825),
    (0.9, [3.510, 1.707, 1.391], D, 318.927),
];

/// Printed objective constants.
pub const BETA_TRI: [f64; 3] = [18.252, 39.804, 23.252];
pub const BETA_TRA: [f64; 3] = [17.745, 44.779, 21.775];

/// High-precision means of the reduced objective coefficients.
pub const BETA_TRI_EXACT: [f64; 3] = [18.251974105885152, 39.80473785412436, 23.251974105885152];
pub const BETA_TRA_EXACT: [f64; 3] = [17.444342231765546, 44.777368927062184, 22.444342231765546];

/// One branch `[lo, hi] → f(γ)` of a printed piecewise inverse.
pub type Branch = (f64, f64, fn(f64) -> f64);

pub fn eval_branches(branches: &[Branch], g: f64) -> f64 {
    let (_, _, f) = branches
        .iter()
        .find(|(lo, hi, _)| *lo <= g && g <= *hi)
        .expect("γ inside [0, 1]");
    f(g)
}

fn s(v: f64) -> f64 {
    v.sqrt()
}

pub const INV_TRI_B10: [Branch; 4] = [
    (0.0, 7.0 / 20.0, |g| 10.0 + s(1000.0 / 7.0 * g)),
    (7.0 / 20.0, 2.0 / 3.0, |g| {
        10.0 + s(3000.0 / 19.0 * g - 100.0 / 19.0)
    }),
    (2.0 / 3.0, 101.0 / 120.0, |g| {
        25.0 - s(1525.0 / 21.0 - 500.0 / 7.0 * g)
    }),
    (101.0 / 120.0, 1.0, |g| {
        25.0 - s(1500.0 / 19.0 - 1500.0 / 19.0 * g)
    }),
];
pub const INV_TRI_B20: [Branch; 4] = [
    (0.0, 11.0 / 40.0, |g| 30.0 + s(2000.0 / 11.0 * g)),
    (11.0 / 40.0, 0.5, |g| {
        30.0 + s(2000.0 / 9.0 * g - 100.0 / 9.0)
    }),
    (0.5, 31.0 / 40.0, |g| {
        50.0 - s(2100.0 / 11.0 - 2000.0 / 11.0 * g)
    }),
    (31.0 / 40.0, 1.0, |g| {
        50.0 - s(2000.0 / 9.0 - 2000.0 / 9.0 * g)
    }),
];
pub const INV_TRI_B30: [Branch; 4] = [
    (0.0, 7.0 / 20.0, |g| 15.0 + s(1000.0 / 7.0 * g)),
    (7.0 / 20.0, 2.0 / 3.0, |g| {
        15.0 + s(3000.0 / 19.0 * g - 100.0 / 19.0)
    }),
    (2.0 / 3.0, 101.0 / 120.0, |g| {
        30.0 - s(1525.0 / 21.0 - 500.0 / 7.0 * g)
    }),
    (101.0 / 120.0, 1.0, |g| {
        30.0 - s(1500.0 / 19.0 - 1500.0 / 19.0 * g)
    }),
];
pub const INV_TRI_B11: [Branch; 4] = [
    (0.0, 11.0 / 30.0, |g| 6.0 + s(60.0 / 11.0 * g)),
    (11.0 / 30.0, 2.0 / 3.0, |g| {
        6.0 + s(20.0 / 3.0 * g - 4.0 / 9.0)
    }),
    (2.0 / 3.0, 51.0 / 60.0, |g| {
        9.0 - s(31.0 / 11.0 - 30.0 / 11.0 * g)
    }),
    (51.0 / 60.0, 1.0, |g| 9.0 - s(10.0 / 3.0 - 10.0 / 3.0 * g)),
];

pub const INV_TRA_B10: [Branch; 6] = [
    (0.0, 21.0 / 160.0, |g| 10.0 + s(2000.0 / 21.0 * g)),
    (21.0 / 160.0, 0.25, |g| {
        10.0 + s(2000.0 / 19.0 * g - 25.0 / 19.0)
    }),
    (0.25, 41.0 / 80.0, |g| 200.0 / 21.0 * g + 265.0 / 21.0),
    (41.0 / 80.0, 0.75, |g| 200.0 / 19.0 * g + 230.0 / 19.0),
    (0.75, 141.0 / 160.0, |g| {
        25.0 - s(675.0 / 7.0 - 200.0 / 21.0 * g)
    }),
    (141.0 / 160.0, 1.0, |g| {
        25.0 - s(2000.0 / 19.0 - 2000.0 / 19.0 * g)
    }),
];
pub const INV_TRA_B20: [Branch; 6] = [
    (0.0, 11.0 / 80.0, |g| 30.0 + s(4000.0 / 11.0 * g)),
    (11.0 / 80.0, 0.25, |g| {
        30.0 + s(4000.0 / 9.0 * g - 100.0 / 9.0)
    }),
    (0.25, 21.0 / 40.0, |g| 200.0 / 11.0 * g + 390.0 / 11.0),
    (21.0 / 40.0, 0.75, |g| 200.0 / 9.0 * g + 100.0 / 3.0),
    (0.75, 71.0 / 80.0, |g| {
        60.0 - s(4100.0 / 11.0 - 4000.0 / 11.0 * g)
    }),
    (71.0 / 80.0, 1.0, |g| {
        60.0 - s(4000.0 / 9.0 - 4000.0 / 9.0 * g)
    }),
];
pub const INV_TRA_B30: [Branch; 6] = [
    (0.0, 21.0 / 160.0, |g| 15.0 + s(2000.0 / 21.0 * g)),
    (21.0 / 160.0, 0.25, |g| {
        15.0 + s(2000.0 / 19.0 * g - 25.0 / 19.0)
    }),
    (0.25, 41.0 / 80.0, |g| 200.0 / 21.0 * g + 370.0 / 21.0),
    (41.0 / 80.0, 0.75, |g| 200.0 / 19.0 * g + 325.0 / 19.0),
    (0.75, 141.0 / 160.0, |g| {
        30.0 - s(675.0 / 7.0 - 200.0 / 21.0 * g)
    }),
    (141.0 / 160.0, 1.0, |g| {
        30.0 - s(2000.0 / 19.0 - 2000.0 / 19.0 * g)
    }),
];
pub const INV_TRA_B11: [Branch; 6] = [
    (0.0, 11.0 / 80.0, |g| 6.0 + s(40.0 / 11.0 * g)),
    (11.0 / 80.0, 0.25, |g| 6.0 + s(40.0 / 9.0 * g - 1.0 / 9.0)),
    (0.25, 21.0 / 40.0, |g| 20.0 / 11.0 * g + 72.0 / 11.0),
    (21.0 / 40.0, 0.75, |g| 20.0 / 9.0 * g + 19.0 / 3.0),
    (0.75, 71.0 / 80.0, |g| {
        9.0 - s(41.0 / 11.0 - 40.0 / 11.0 * g)
    }),
    (71.0 / 80.0, 1.0, |g| 9.0 - s(40.0 / 9.0 - 40.0 / 9.0 * g)),
];

/// 50 interior midpoints `(i + ½)/50`.
pub fn gamma_points() -> Vec<f64> {
    (0..50).map(|i| (i as f64 + 0.5) / 50.0).collect()
}

pub mod oracle;
