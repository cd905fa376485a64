//! Random zero-difficulty programs with a planted optimum, and a brute-force
//! log-space grid search to solve them independently of the dual method.

use rand::Rng;
use ugp::gp::{DeterministicGp, Posynomial, Term};

pub struct Planted {
    pub gp: DeterministicGp,
    pub x_star: Vec<f64>,
    pub value: f64,
}

fn det(rows: &[Vec<f64>]) -> f64 {
    match rows.len() {
        2 => rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0],
        3 => {
            let m = rows;
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        _ => unreachable!("two or three variables"),
    }
}

/// Draws an `n`-variable program with `n + 1` terms. With `constrained`,
/// the last one or two terms form a single constraint that is active at the
/// planted optimum.
pub fn planted_problem<R: Rng>(rng: &mut R, n: usize, constrained: bool) -> Planted {
    let big_n = n + 1;
    let in_constraint = if constrained { rng.gen_range(1..=2) } else { 0 };
    let in_objective = big_n - in_constraint;
    loop {
        let mut delta: Vec<f64> = (0..big_n).map(|_| rng.gen_range(0.5..1.5)).collect();
        let obj_sum: f64 = delta[..in_objective].iter().sum();
        for d in &mut delta[..in_objective] {
            *d /= obj_sum;
        }
        let mut rows: Vec<Vec<f64>> = (0..big_n - 1)
            .map(|_| (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect())
            .collect();
        let last: Vec<f64> = (0..n)
            .map(|j| {
                -rows.iter().zip(&delta).map(|(r, d)| r[j] * d).sum::<f64>() / delta[big_n - 1]
            })
            .collect();
        rows.push(last);
        if det(&rows[..n]).abs() < 0.1 || rows[big_n - 1].iter().any(|v| v.abs() > 6.0) {
            continue;
        }
        let x_star: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0f64..1.0).exp()).collect();
        let value = rng.gen_range(1.0..10.0);
        let lambda: f64 = delta[in_objective..].iter().sum();
        let monomial = |a: &[f64]| {
            a.iter()
                .zip(&x_star)
                .map(|(e, x)| x.powf(*e))
                .product::<f64>()
        };
        let terms: Vec<Term> = rows
            .iter()
            .zip(&delta)
            .enumerate()
            .map(|(i, (a, d))| {
                let target = if i < in_objective {
                    d * value
                } else {
                    d / lambda
                };
                Term::new(target / monomial(a), a.clone())
            })
            .collect();
        let objective = Posynomial::new(terms[..in_objective].to_vec()).unwrap();
        let constraints = if in_constraint > 0 {
            vec![Posynomial::new(terms[in_objective..].to_vec()).unwrap()]
        } else {
            Vec::new()
        };
        let gp = DeterministicGp::new(objective, constraints, n).unwrap();
        return Planted { gp, x_star, value };
    }
}

fn feasible(gp: &DeterministicGp, x: &[f64]) -> bool {
    gp.constraints().iter().all(|c| c.eval(x) <= 1.0)
}

/// Best feasible objective over a log-space grid. Each level re-centres its
/// window on the incumbent until the incumbent stops moving, then the step
/// shrinks; the last level has step `1e-3`.
pub fn grid_search(gp: &DeterministicGp) -> (Vec<f64>, f64) {
    let n = gp.variables();
    let mut center = vec![0.0; n];
    let mut best = (vec![1.0; n], f64::INFINITY);
    for (step, half_width) in [(0.1, 30i64), (0.02, 10), (0.004, 10), (0.001, 10)] {
        let width = (2 * half_width + 1) as usize;
        let total = width.pow(n as u32);
        loop {
            let before = best.1;
            for idx in 0..total {
                let mut rem = idx;
                let x: Vec<f64> = (0..n)
                    .map(|j| {
                        let k = (rem % width) as i64 - half_width;
                        rem /= width;
                        (center[j] + step * k as f64).exp()
                    })
                    .collect();
                if !feasible(gp, &x) {
                    continue;
                }
                let v = gp.objective().eval(&x);
                if v < best.1 {
                    best = (x, v);
                }
            }
            center = best.0.iter().map(|x| x.ln()).collect();
            if best.1 >= before {
                break;
            }
        }
    }
    best
}
