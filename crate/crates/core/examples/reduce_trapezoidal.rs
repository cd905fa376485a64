//! Trapezoidal reduction: breakpoints, plateaus and a CSV curve on stdout.

use ugp::twofold::{ReductionCriterion, TwoFoldUv};
use ugp::uncertain::UncertaintyDistribution;

fn main() -> ugp::Result<()> {
    let uv = TwoFoldUv::trapezoidal(10.0, 15.0, 20.0, 25.0, 0.5, 0.6)?;
    let ud = uv.reduce(ReductionCriterion::Expected)?;
    eprintln!("breakpoints {:?}", ud.breakpoints());
    eprintln!("plateaus    {:?}", uv.plateaus());
    eprintln!("mean        {:.12}", ud.expected()?);
    eprintln!("median      {:.12}", ud.inverse(0.5)?);

    println!("x,phi");
    for (x, phi) in uv.sample_curve(ReductionCriterion::Expected, 61)? {
        println!("{x},{phi}");
    }
    Ok(())
}
