mod common;

use common::oracle::{grid_search, planted_problem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ugp::gp::{
    build_dual, degree_of_difficulty, solve, solve_dual, DeterministicGp, Posynomial, SolveMethod,
    SolverOptions, Term,
};
use ugp::Error;

fn with_extra_terms(gp: &DeterministicGp, rng: &mut ChaCha8Rng, extra: usize) -> DeterministicGp {
    let n = gp.variables();
    let mut terms = gp.objective().terms().to_vec();
    for _ in 0..extra {
        let exps = (0..n).map(|_| rng.gen_range(-1.5..1.5)).collect();
        terms.push(Term::new(rng.gen_range(0.1..2.0), exps));
    }
    DeterministicGp::new(
        Posynomial::new(terms).unwrap(),
        gp.constraints().to_vec(),
        n,
    )
    .unwrap()
}

#[test]
fn planted_optimum_is_recovered() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for i in 0..40 {
        let p = planted_problem(&mut rng, 2 + i % 2, i % 2 == 0);
        assert_eq!(degree_of_difficulty(&p.gp), 0);
        let sol = solve(&p.gp).unwrap();
        assert_eq!(sol.method, SolveMethod::Direct);
        assert!((sol.dual_value - p.value).abs() <= 1e-9 * p.value);
        for (a, b) in sol.primal_x.iter().zip(&p.x_star) {
            assert!(
                (a - b).abs() <= 1e-7 * b,
                "{:?} vs {:?}",
                sol.primal_x,
                p.x_star
            );
        }
        assert!(sol.diagnostics.is_clean());
        assert!(sol.diagnostics.linear_residual < 1e-10);
    }
}

#[test]
fn newton_path_matches_direct_solve() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let forced = SolverOptions {
        force_newton: true,
        ..SolverOptions::default()
    };
    for i in 0..20 {
        let p = planted_problem(&mut rng, 2 + i % 2, i % 3 == 0);
        let dual = build_dual(&p.gp);
        let direct = solve_dual(&dual, &SolverOptions::default()).unwrap();
        let newton = solve_dual(&dual, &forced).unwrap();
        assert!(matches!(newton.method, SolveMethod::Newton { .. }));
        assert!((direct.dual_value - newton.dual_value).abs() <= 1e-8 * direct.dual_value);
        for (a, b) in direct.delta.iter().zip(&newton.delta) {
            assert!((a - b).abs() < 1e-6);
        }
    }
}

#[test]
fn positive_difficulty_matches_grid_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for i in 0..12 {
        let p = planted_problem(&mut rng, 2 + i % 2, i % 2 == 1);
        let gp = with_extra_terms(&p.gp, &mut rng, 1 + i % 2);
        assert!(degree_of_difficulty(&gp) > 0);
        let sol = solve(&gp).unwrap();
        let (_, best) = grid_search(&gp);
        assert!(
            (sol.dual_value - best).abs() <= 5e-3 * best,
            "{} vs {best}",
            sol.dual_value
        );
        assert!(
            sol.dual_value <= best * (1.0 + 1e-9),
            "grid beat the optimum"
        );
        assert!(sol.diagnostics.duality_gap_rel <= 1e-6);
    }
}

/// Any feasible primal point bounds the dual value from above.
#[test]
fn weak_duality() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for i in 0..10 {
        let p = planted_problem(&mut rng, 3, i % 2 == 0);
        let gp = with_extra_terms(&p.gp, &mut rng, 2);
        let v = solve(&gp).unwrap().dual_value;
        let mut checked = 0;
        while checked < 200 {
            let x: Vec<f64> = (0..3).map(|_| rng.gen_range(-2.0f64..2.0).exp()).collect();
            if gp.constraints().iter().any(|c| c.eval(&x) > 1.0) {
                continue;
            }
            assert!(gp.objective().eval(&x) >= v * (1.0 - 1e-12));
            checked += 1;
        }
    }
}

#[test]
fn objective_scaling_scales_value_only() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for i in 0..10 {
        let p = planted_problem(&mut rng, 2 + i % 2, true);
        let s = rng.gen_range(0.1..50.0);
        let scaled = DeterministicGp::new(
            p.gp.objective().scaled(s).unwrap(),
            p.gp.constraints().to_vec(),
            p.gp.variables(),
        )
        .unwrap();
        let (a, b) = (solve(&p.gp).unwrap(), solve(&scaled).unwrap());
        assert!((b.dual_value - s * a.dual_value).abs() <= 1e-9 * b.dual_value);
        for (u, w) in a.primal_x.iter().zip(&b.primal_x) {
            assert!((u - w).abs() <= 1e-8 * u);
        }
    }
}

#[test]
fn am_gm_minimum() {
    let f = Posynomial::new(vec![Term::new(1.0, vec![1.0]), Term::new(1.0, vec![-1.0])]).unwrap();
    let sol = solve(&DeterministicGp::unconstrained(f, 1).unwrap()).unwrap();
    assert!((sol.dual_value - 2.0).abs() <= 1e-10);
    assert!((sol.primal_x[0] - 1.0).abs() <= 1e-10);
    assert_eq!(sol.delta, vec![0.5, 0.5]);
}

#[test]
fn too_few_terms_is_rejected() {
    let f = Posynomial::new(vec![Term::new(1.0, vec![1.0, 1.0])]).unwrap();
    let gp = DeterministicGp::unconstrained(f, 2).unwrap();
    assert_eq!(degree_of_difficulty(&gp), -2);
    assert!(matches!(
        solve(&gp),
        Err(Error::DegreeOfDifficultyNegative {
            terms: 1,
            variables: 2
        })
    ));
}

#[test]
fn unbounded_objective_is_reported() {
    // x + y/x with nothing holding y away from zero
    let f = Posynomial::new(vec![
        Term::new(1.0, vec![1.0, 0.0]),
        Term::new(1.0, vec![-1.0, 1.0]),
        Term::new(1.0, vec![0.0, 1.0]),
    ])
    .unwrap();
    let err = solve(&DeterministicGp::unconstrained(f, 2).unwrap()).unwrap_err();
    assert!(
        matches!(err, Error::InfeasibleDual(_) | Error::UnboundedDual),
        "{err}"
    );
}
