//! Optimistic, pessimistic and expected values of single-fold distributions.

use ugp::uncertain::{
    critical_value, CriticalValueQuery, LinearUd, TrapezoidalUd, TriangularUd,
    UncertaintyDistribution,
};

fn show(name: &str, ud: &dyn UncertaintyDistribution) -> ugp::Result<()> {
    println!(
        "{name}: support {:?}, E = {:.6}",
        ud.support(),
        ud.expected()?
    );
    for alpha in [0.1, 0.5, 0.9] {
        let sup = critical_value(ud, CriticalValueQuery::optimistic(alpha)?)?;
        let inf = critical_value(ud, CriticalValueQuery::pessimistic(alpha)?)?;
        println!("  α={alpha}: ξ_sup={sup:.6} ξ_inf={inf:.6}");
    }
    Ok(())
}

fn main() -> ugp::Result<()> {
    show("L(1, 3)", &LinearUd::new(1.0, 3.0)?)?;
    show("TRI(2, 4, 5)", &TriangularUd::new(2.0, 4.0, 5.0)?)?;
    show("TRA(2, 4, 6, 8)", &TrapezoidalUd::new(2.0, 4.0, 6.0, 8.0)?)?;
    Ok(())
}
