//! Sweeps both bundled cases over γ = 0.1, …, 0.9 with three-decimal
//! coefficients, as `ugp tables` does, and prints the table views.

use ugp::chance::sweep;
use ugp::cli::{table_gammas, table_view};
use ugp::problem_file::BundledCase;
use ugp::twofold::ReductionCriterion;

fn main() {
    for case in [BundledCase::Triangular, BundledCase::Trapezoidal] {
        let problem = case.problem();
        let gammas = table_gammas();
        let rows = sweep(
            &problem,
            &gammas,
            &ReductionCriterion::Expected.into(),
            Some(3),
        );
        let rows: Vec<_> = gammas.into_iter().zip(rows).collect();
        println!("{case:?}");
        println!(
            "{}",
            table_view(&rows, problem.variables(), problem.term_count())
        );
    }
}
