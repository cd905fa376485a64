//! Builds an uncertain program in code and sweeps the confidence level.

use ugp::chance::{sweep, CriterionPlan, UncertainGpProblem, UncertainTerm};
use ugp::twofold::{ReductionCriterion, TwoFoldUv};

fn main() -> ugp::Result<()> {
    // minimise b1 x + b2 y  subject to  b3 / (x y) <= 1
    let problem = UncertainGpProblem::new(
        vec![
            UncertainTerm::new(
                TwoFoldUv::triangular(2.0, 3.0, 5.0, 0.3, 0.4)?,
                vec![1.0, 0.0],
            ),
            UncertainTerm::new(
                TwoFoldUv::trapezoidal(1.0, 2.0, 3.0, 4.0, 0.2, 0.2)?,
                vec![0.0, 1.0],
            ),
        ],
        vec![vec![UncertainTerm::new(
            TwoFoldUv::triangular(4.0, 6.0, 7.0, 0.5, 0.1)?,
            vec![-1.0, -1.0],
        )]],
        2,
    )?;
    let gammas: Vec<f64> = (1..10).map(|i| i as f64 / 10.0).collect();

    for criterion in [
        ReductionCriterion::Expected,
        ReductionCriterion::pessimistic(0.2)?,
    ] {
        println!("criterion: {}", criterion.name());
        for row in sweep(&problem, &gammas, &CriterionPlan::uniform(criterion), None) {
            let row = row?;
            println!(
                "  γ={:.1}  x*=({:.4}, {:.4})  b3(γ)={:.4}  E[f0]={:.4}",
                row.gamma,
                row.x_star[0],
                row.x_star[1],
                row.constraint_coefficients[0][0],
                row.expected_objective
            );
        }
    }
    Ok(())
}
