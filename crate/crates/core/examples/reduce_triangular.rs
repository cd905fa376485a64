//! Reduces a triangular two-fold variable under each criterion and prints
//! the reduced distribution next to the band it was taken from.

use ugp::twofold::{Envelope, ReductionCriterion, TwoFoldUv};
use ugp::uncertain::UncertaintyDistribution;

fn main() -> ugp::Result<()> {
    let uv = TwoFoldUv::triangular(2.0, 4.0, 5.0, 0.5, 0.6)?;
    let criteria = [
        ReductionCriterion::optimistic(0.3)?,
        ReductionCriterion::pessimistic(0.3)?,
        ReductionCriterion::Expected,
    ];
    let reduced: Vec<_> = criteria
        .iter()
        .map(|c| uv.reduce(*c))
        .collect::<Result<_, _>>()?;

    println!(
        "{:>6} {:>9} {:>9} {:>9} {:>9} {:>9}",
        "x", "band lo", "band hi", "opt 0.3", "pes 0.3", "expected"
    );
    for i in 0..=12 {
        let x = 2.0 + 0.25 * i as f64;
        let (lo, hi) = match uv.surface_at(x).envelope {
            Envelope::Band { lo, hi } => (lo, hi),
            Envelope::Constant(v) => (v, v),
        };
        print!("{x:>6.2} {lo:>9.5} {hi:>9.5}");
        for ud in &reduced {
            print!(" {:>9.5}", ud.cdf(x));
        }
        println!();
    }
    println!("expected-criterion mean: {:.6}", reduced[2].expected()?);
    Ok(())
}
