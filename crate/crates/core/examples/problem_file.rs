//! Loads a problem file (or a bundled case), solves it at one level and
//! prints the deterministic program that was solved.
//!
//! cargo run --example problem_file -- [path.json] [gamma]

use std::path::Path;

use ugp::chance::{solve_chance, ChanceConfig};
use ugp::problem_file::{BundledCase, ProblemFile};
use ugp::twofold::ReductionCriterion;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let file = match args.next() {
        Some(path) => ProblemFile::load(Path::new(&path))?,
        None => ProblemFile::from_json(BundledCase::Trapezoidal.json())?,
    };
    let gamma: f64 = args.next().map_or(Ok(0.5), |g| g.parse())?;

    let problem = file.to_problem()?;
    let row = solve_chance(
        &problem,
        &ChanceConfig::new(gamma, ReductionCriterion::Expected)?,
    )?;
    let coefficients = row
        .objective_coefficients
        .iter()
        .chain(row.constraint_coefficients.iter().flatten());
    for (label, c) in file.coefficient_labels().iter().zip(coefficients) {
        println!("{label} = {c:.6}");
    }
    for (name, x) in file.variables.iter().zip(&row.x_star) {
        println!("{name}* = {x:.6}");
    }
    println!("E[f0(x*)] = {:.6}", row.expected_objective);
    Ok(())
}
