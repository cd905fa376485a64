//! Geometric programs with two-fold uncertain coefficients.
//!
//! Each coefficient is first reduced to a single-fold distribution. The
//! objective is then replaced by its expected value and every constraint
//! `M{f_k(x) ≤ 1} ≥ γ` by the deterministic posynomial whose coefficients
//! are the reduced inverses at `γ`. The resulting program is solved through
//! its dual.

use rayon::prelude::*;

use crate::error::{check_open_unit, Error, Result};
use crate::gp::{
    build_dual, solve_dual, DeterministicGp, Diagnostics, Posynomial, SolverOptions, Term,
};
use crate::twofold::{ReductionCriterion, TwoFoldUv};
use crate::uncertain::{PiecewiseUd, UncertaintyDistribution};

#[derive(Debug, Clone, PartialEq)]
pub struct UncertainTerm {
    pub coefficient: TwoFoldUv,
    pub exponents: Vec<f64>,
}

impl UncertainTerm {
    pub fn new(coefficient: TwoFoldUv, exponents: Vec<f64>) -> Self {
        Self {
            coefficient,
            exponents,
        }
    }
}

/// Position of a term: block 0 is the objective, block `k ≥ 1` the k-th
/// constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TermRef {
    pub block: usize,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UncertainGpProblem {
    objective: Vec<UncertainTerm>,
    constraints: Vec<Vec<UncertainTerm>>,
    variables: usize,
}

impl UncertainGpProblem {
    pub fn new(
        objective: Vec<UncertainTerm>,
        constraints: Vec<Vec<UncertainTerm>>,
        variables: usize,
    ) -> Result<Self> {
        if objective.is_empty() {
            return Err(Error::invalid("the objective needs at least one term"));
        }
        if let Some(k) = constraints.iter().position(Vec::is_empty) {
            return Err(Error::invalid(format!("constraint {} has no terms", k + 1)));
        }
        let blocks = std::iter::once(&objective).chain(&constraints);
        for (block, terms) in blocks.enumerate() {
            for (index, term) in terms.iter().enumerate() {
                let here = TermRef { block, index };
                if term.exponents.len() != variables {
                    return Err(Error::invalid(format!(
                        "{here}: {} exponents for {variables} variables",
                        term.exponents.len()
                    )));
                }
                if term.exponents.iter().any(|a| !a.is_finite()) {
                    return Err(Error::invalid(format!("{here}: exponents must be finite")));
                }
                let (lo, _) = term.coefficient.support();
                if lo <= 0.0 {
                    return Err(Error::invalid(format!(
                        "{here}: coefficient support starts at {lo}, posynomial coefficients must be positive"
                    )));
                }
            }
        }
        Ok(Self {
            objective,
            constraints,
            variables,
        })
    }

    pub fn objective(&self) -> &[UncertainTerm] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Vec<UncertainTerm>] {
        &self.constraints
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn term_count(&self) -> usize {
        self.objective.len() + self.constraints.iter().map(Vec::len).sum::<usize>()
    }

    fn blocks(&self) -> impl Iterator<Item = &Vec<UncertainTerm>> {
        std::iter::once(&self.objective).chain(&self.constraints)
    }
}

impl std::fmt::Display for TermRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.block == 0 {
            write!(f, "objective term {}", self.index + 1)
        } else {
            write!(f, "constraint {} term {}", self.block, self.index + 1)
        }
    }
}

/// Reduction criterion per coefficient.
///
/// Overrides for individual terms are experimental; the uniform plan is the
/// one the deterministic transformation is normally applied with.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionPlan {
    pub default: ReductionCriterion,
    pub overrides: Vec<(TermRef, ReductionCriterion)>,
}

impl CriterionPlan {
    pub fn uniform(criterion: ReductionCriterion) -> Self {
        Self {
            default: criterion,
            overrides: Vec::new(),
        }
    }

    pub fn with_override(mut self, term: TermRef, criterion: ReductionCriterion) -> Self {
        self.overrides.retain(|(t, _)| *t != term);
        self.overrides.push((term, criterion));
        self
    }

    pub fn is_uniform(&self) -> bool {
        self.overrides.is_empty()
    }

    pub fn criterion_for(&self, term: TermRef) -> ReductionCriterion {
        self.overrides
            .iter()
            .find(|(t, _)| *t == term)
            .map_or(self.default, |(_, c)| *c)
    }
}

impl From<ReductionCriterion> for CriterionPlan {
    fn from(criterion: ReductionCriterion) -> Self {
        Self::uniform(criterion)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChanceConfig {
    pub gamma: f64,
    pub plan: CriterionPlan,
    /// Round every deterministic coefficient to this many decimals before
    /// solving. `None` keeps full precision.
    pub coefficient_decimals: Option<u32>,
}

impl ChanceConfig {
    pub fn new(gamma: f64, criterion: ReductionCriterion) -> Result<Self> {
        Ok(Self {
            gamma: check_open_unit(gamma)?,
            plan: CriterionPlan::uniform(criterion),
            coefficient_decimals: None,
        })
    }

    pub fn with_decimals(mut self, decimals: u32) -> Self {
        self.coefficient_decimals = Some(decimals);
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReducedTerm {
    pub distribution: PiecewiseUd,
    pub exponents: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReducedProblem {
    pub objective: Vec<ReducedTerm>,
    pub constraints: Vec<Vec<ReducedTerm>>,
    pub variables: usize,
}

/// Replaces every two-fold coefficient by its reduced single-fold
/// distribution.
pub fn reduce_problem(up: &UncertainGpProblem, plan: &CriterionPlan) -> Result<ReducedProblem> {
    let mut blocks = up
        .blocks()
        .enumerate()
        .map(|(block, terms)| {
            terms
                .iter()
                .enumerate()
                .map(|(index, term)| {
                    let criterion = plan.criterion_for(TermRef { block, index });
                    Ok(ReducedTerm {
                        distribution: term.coefficient.reduce(criterion)?,
                        exponents: term.exponents.clone(),
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let objective = blocks.remove(0);
    Ok(ReducedProblem {
        objective,
        constraints: blocks,
        variables: up.variables(),
    })
}

impl ReducedProblem {
    /// Expected values of the objective coefficients.
    pub fn objective_coefficients(&self) -> Result<Vec<f64>> {
        self.objective
            .iter()
            .map(|t| t.distribution.expected())
            .collect()
    }

    /// Inverse distributions at `gamma` for every constraint coefficient.
    pub fn constraint_coefficients(&self, gamma: f64) -> Result<Vec<Vec<f64>>> {
        let gamma = check_open_unit(gamma)?;
        self.constraints
            .iter()
            .map(|block| {
                block
                    .iter()
                    .map(|t| t.distribution.inverse(gamma))
                    .collect()
            })
            .collect()
    }

    fn assemble(&self, objective: &[f64], constraints: &[Vec<f64>]) -> Result<DeterministicGp> {
        let posy = |terms: &[ReducedTerm], coeffs: &[f64]| {
            Posynomial::new(
                terms
                    .iter()
                    .zip(coeffs)
                    .map(|(t, c)| Term::new(*c, t.exponents.clone()))
                    .collect(),
            )
        };
        DeterministicGp::new(
            posy(&self.objective, objective)?,
            self.constraints
                .iter()
                .zip(constraints)
                .map(|(terms, coeffs)| posy(terms, coeffs))
                .collect::<Result<Vec<_>>>()?,
            self.variables,
        )
    }
}

/// Deterministic program at confidence level `gamma`, at full precision.
pub fn deterministic_form(reduced: &ReducedProblem, gamma: f64) -> Result<DeterministicGp> {
    let objective = reduced.objective_coefficients()?;
    let constraints = reduced.constraint_coefficients(gamma)?;
    reduced.assemble(&objective, &constraints)
}

/// One solved confidence level.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub gamma: f64,
    pub x_star: Vec<f64>,
    pub delta_star: Vec<f64>,
    pub expected_objective: f64,
    pub dual_value: f64,
    pub objective_coefficients: Vec<f64>,
    pub constraint_coefficients: Vec<Vec<f64>>,
    pub diagnostics: Diagnostics,
}

pub fn round_to(value: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    (value * scale).round() / scale
}

fn solve_row(
    reduced: &ReducedProblem,
    objective: &[f64],
    gamma: f64,
    decimals: Option<u32>,
) -> Result<SweepRow> {
    let round = |v: f64| decimals.map_or(v, |d| round_to(v, d));
    let mut constraints = reduced.constraint_coefficients(gamma)?;
    for block in &mut constraints {
        for c in block.iter_mut() {
            *c = round(*c);
        }
    }
    let objective: Vec<f64> = objective.iter().map(|v| round(*v)).collect();
    let gp = reduced.assemble(&objective, &constraints)?;
    let sol = solve_dual(&build_dual(&gp), &SolverOptions::default())?;
    Ok(SweepRow {
        gamma,
        expected_objective: sol.diagnostics.primal_objective,
        dual_value: sol.dual_value,
        x_star: sol.primal_x,
        delta_star: sol.delta,
        objective_coefficients: objective,
        constraint_coefficients: constraints,
        diagnostics: sol.diagnostics,
    })
}

/// Reduces, transforms and solves the problem at one confidence level.
pub fn solve_chance(up: &UncertainGpProblem, cfg: &ChanceConfig) -> Result<SweepRow> {
    let gamma = check_open_unit(cfg.gamma)?;
    let reduced = reduce_problem(up, &cfg.plan)?;
    let objective = reduced.objective_coefficients()?;
    solve_row(&reduced, &objective, gamma, cfg.coefficient_decimals)
}

/// Solves every confidence level in `gammas`. Rows come back in input
/// order; a failing level yields an `Err` in its slot without stopping the
/// others. Objective coefficients do not depend on `γ` and are computed
/// once.
pub fn sweep(
    up: &UncertainGpProblem,
    gammas: &[f64],
    plan: &CriterionPlan,
    coefficient_decimals: Option<u32>,
) -> Vec<Result<SweepRow>> {
    let prepared = reduce_problem(up, plan)
        .and_then(|reduced| reduced.objective_coefficients().map(|obj| (reduced, obj)));
    match prepared {
        Ok((reduced, objective)) => gammas
            .par_iter()
            .map(|&gamma| {
                check_open_unit(gamma)
                    .and_then(|g| solve_row(&reduced, &objective, g, coefficient_decimals))
            })
            .collect(),
        Err(e) => gammas.iter().map(|_| Err(e.clone())).collect(),
    }
}
