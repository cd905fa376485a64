//! Solves a small posynomial program by the dual method.
//!
//! minimise 40/(x y z) + 20 x z + 10 x y  subject to  y z / 4 <= 1
//!
//! Four terms in three variables give zero degree of difficulty, so the
//! direct solve applies; the forced Newton path is shown for comparison.

use ugp::gp::{
    build_dual, degree_of_difficulty, solve_dual, DeterministicGp, Posynomial, SolverOptions, Term,
};

fn main() -> ugp::Result<()> {
    let objective = Posynomial::new(vec![
        Term::new(40.0, vec![-1.0, -1.0, -1.0]),
        Term::new(20.0, vec![1.0, 0.0, 1.0]),
        Term::new(10.0, vec![1.0, 1.0, 0.0]),
    ])?;
    let constraint = Posynomial::new(vec![Term::new(0.25, vec![0.0, 1.0, 1.0])])?;
    let gp = DeterministicGp::new(objective, vec![constraint], 3)?;
    println!("degree of difficulty {}", degree_of_difficulty(&gp));

    let dual = build_dual(&gp);
    for force_newton in [false, true] {
        let opts = SolverOptions {
            force_newton,
            ..SolverOptions::default()
        };
        let sol = solve_dual(&dual, &opts)?;
        println!("{:?}", sol.method);
        println!("  δ* = {:?}", sol.delta);
        println!("  x* = {:?}", sol.primal_x);
        println!(
            "  v* = {:.10}, f0(x*) = {:.10}, gap {:.1e}",
            sol.dual_value, sol.diagnostics.primal_objective, sol.diagnostics.duality_gap_rel
        );
    }
    Ok(())
}
