//! Deterministic posynomial geometric programs solved through their dual.
//!
//! The primal problem is
//!
//! ```text
//! minimise   f0(x) = Σ_i β_i0 Π_j x_j^a_i0j
//! subject to fk(x) = Σ_i β_ik Π_j x_j^a_ikj ≤ 1,   k = 1..K,   x > 0.
//! ```
//!
//! Its dual maximises `V(δ) = Π (β/δ)^δ · Π_{k≥1} λ_k^λ_k` over `δ ≥ 0`
//! subject to normality (objective weights sum to one) and orthogonality
//! (exponent-weighted sums vanish per variable).

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Weight below which a constraint block is treated as inactive.
pub const INACTIVE_THRESHOLD: f64 = 1e-10;
pub const GAP_TOLERANCE: f64 = 1e-6;
pub const CONSTRAINT_TOLERANCE: f64 = 1e-8;

const RANK_TOLERANCE: f64 = 1e-12;
const STALL_STEP: f64 = 1e-14;
const UNBOUNDED_WEIGHT: f64 = 1e15;
const FEASIBILITY_TOLERANCE: f64 = 1e-12;
const RAY_RATIO: f64 = 1e8;

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coefficient: f64,
    pub exponents: Vec<f64>,
}

impl Term {
    pub fn new(coefficient: f64, exponents: Vec<f64>) -> Self {
        Self {
            coefficient,
            exponents,
        }
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.coefficient
            * self
                .exponents
                .iter()
                .zip(x)
                .map(|(a, xi)| xi.powf(*a))
                .product::<f64>()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Posynomial {
    terms: Vec<Term>,
}

impl Posynomial {
    pub fn new(terms: Vec<Term>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::invalid("a posynomial needs at least one term"));
        }
        if let Some(t) = terms
            .iter()
            .find(|t| !(t.coefficient > 0.0 && t.coefficient.is_finite()))
        {
            return Err(Error::invalid(format!(
                "posynomial coefficients must be positive and finite, got {}",
                t.coefficient
            )));
        }
        if let Some(t) = terms
            .iter()
            .find(|t| t.exponents.iter().any(|a| !a.is_finite()))
        {
            return Err(Error::invalid(format!(
                "exponents must be finite, got {:?}",
                t.exponents
            )));
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms.iter().map(|t| t.eval(x)).sum()
    }

    /// Same exponents with every coefficient multiplied by `s`.
    pub fn scaled(&self, s: f64) -> Result<Self> {
        Self::new(
            self.terms
                .iter()
                .map(|t| Term::new(t.coefficient * s, t.exponents.clone()))
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeterministicGp {
    objective: Posynomial,
    constraints: Vec<Posynomial>,
    variables: usize,
}

impl DeterministicGp {
    pub fn new(
        objective: Posynomial,
        constraints: Vec<Posynomial>,
        variables: usize,
    ) -> Result<Self> {
        let all = std::iter::once(&objective).chain(&constraints);
        for (k, p) in all.enumerate() {
            if let Some(t) = p.terms().iter().find(|t| t.exponents.len() != variables) {
                return Err(Error::invalid(format!(
                    "block {k}: exponent vector of length {} for {variables} variables",
                    t.exponents.len()
                )));
            }
        }
        Ok(Self {
            objective,
            constraints,
            variables,
        })
    }

    pub fn unconstrained(objective: Posynomial, variables: usize) -> Result<Self> {
        Self::new(objective, Vec::new(), variables)
    }

    pub fn objective(&self) -> &Posynomial {
        &self.objective
    }

    pub fn constraints(&self) -> &[Posynomial] {
        &self.constraints
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn term_count(&self) -> usize {
        self.objective.len() + self.constraints.iter().map(Posynomial::len).sum::<usize>()
    }

    fn blocks(&self) -> impl Iterator<Item = &Posynomial> {
        std::iter::once(&self.objective).chain(&self.constraints)
    }
}

/// `N − (n + 1)`.
pub fn degree_of_difficulty(gp: &DeterministicGp) -> i64 {
    gp.term_count() as i64 - (gp.variables() as i64 + 1)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DualProblem {
    gp: DeterministicGp,
    coefficients: Vec<f64>,
    exponents: DMatrix<f64>,
    blocks: Vec<usize>,
}

pub fn build_dual(gp: &DeterministicGp) -> DualProblem {
    let n = gp.variables();
    let terms: Vec<(usize, &Term)> = gp
        .blocks()
        .enumerate()
        .flat_map(|(k, p)| p.terms().iter().map(move |t| (k, t)))
        .collect();
    let exponents = DMatrix::from_fn(terms.len(), n, |i, j| terms[i].1.exponents[j]);
    DualProblem {
        gp: gp.clone(),
        coefficients: terms.iter().map(|(_, t)| t.coefficient).collect(),
        exponents,
        blocks: terms.iter().map(|(k, _)| *k).collect(),
    }
}

impl DualProblem {
    pub fn gp(&self) -> &DeterministicGp {
        &self.gp
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// `N × n` exponent matrix, one row per term.
    pub fn exponents(&self) -> &DMatrix<f64> {
        &self.exponents
    }

    /// Block index of each term; 0 is the objective.
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.gp.constraints().len() + 1
    }

    pub fn term_count(&self) -> usize {
        self.coefficients.len()
    }

    /// Normality row followed by one orthogonality row per variable, with
    /// right-hand side `(1, 0, …, 0)`.
    pub fn conditions(&self) -> (DMatrix<f64>, DVector<f64>) {
        let (big_n, n) = self.exponents.shape();
        let a = DMatrix::from_fn(n + 1, big_n, |r, i| {
            if r == 0 {
                if self.blocks[i] == 0 {
                    1.0
                } else {
                    0.0
                }
            } else {
                self.exponents[(i, r - 1)]
            }
        });
        let mut e = DVector::zeros(n + 1);
        e[0] = 1.0;
        (a, e)
    }

    /// `λ_k = Σ_{i ∈ k} δ_i`, with `λ_0` reported as the objective sum.
    pub fn block_sums(&self, delta: &[f64]) -> Vec<f64> {
        let mut lambda = vec![0.0; self.block_count()];
        for (d, &k) in delta.iter().zip(&self.blocks) {
            lambda[k] += d;
        }
        lambda
    }

    /// `ln V(δ)` with the convention `0·ln 0 = 0`.
    pub fn log_dual_value(&self, delta: &[f64]) -> f64 {
        let lambda = self.block_sums(delta);
        let weights: f64 = delta
            .iter()
            .zip(&self.coefficients)
            .filter(|(d, _)| **d > 0.0)
            .map(|(d, b)| d * (b / d).ln())
            .sum();
        let multipliers: f64 = lambda[1..]
            .iter()
            .filter(|l| **l > 0.0)
            .map(|l| l * l.ln())
            .sum();
        weights + multipliers
    }

    /// Max-norm residual of the normality and orthogonality conditions.
    pub fn linear_residual(&self, delta: &[f64]) -> f64 {
        let (a, e) = self.conditions();
        (a * DVector::from_column_slice(delta) - e).amax()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Stop when the projected gradient norm falls below this.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Skip the direct solve for zero degree of difficulty.
    pub force_newton: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tolerance: 1e-9,
            max_iterations: 500,
            force_newton: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SolveMethod {
    Direct,
    Newton { iterations: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostics {
    pub primal_objective: f64,
    pub duality_gap_rel: f64,
    /// `f_k(x*)` for every constraint block.
    pub constraint_values: Vec<f64>,
    pub linear_residual: f64,
    /// Euclidean residual of the log-linear recovery system.
    pub recovery_residual: f64,
    pub gap_flagged: bool,
    pub constraint_flagged: bool,
}

impl Diagnostics {
    pub fn constraint_residuals(&self) -> Vec<f64> {
        self.constraint_values.iter().map(|v| v - 1.0).collect()
    }

    pub fn is_clean(&self) -> bool {
        !self.gap_flagged && !self.constraint_flagged
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DualSolution {
    pub delta: Vec<f64>,
    /// `λ_0 = 1` followed by the constraint block sums.
    pub lambda: Vec<f64>,
    pub dual_value: f64,
    pub primal_x: Vec<f64>,
    pub method: SolveMethod,
    pub diagnostics: Diagnostics,
}

/// Solves the dual, recovers the primal point and verifies the pair.
pub fn solve_dual(dual: &DualProblem, opts: &SolverOptions) -> Result<DualSolution> {
    let gp = dual.gp();
    let n = gp.variables();
    let big_n = dual.term_count();
    if big_n < n + 1 {
        return Err(Error::DegreeOfDifficultyNegative {
            terms: big_n,
            variables: n,
        });
    }
    let direct = if big_n == n + 1 && !opts.force_newton {
        direct_weights(dual)?
    } else {
        None
    };
    let (delta, method) = match direct {
        Some(delta) => (delta, SolveMethod::Direct),
        None => {
            let (delta, iterations) = newton_weights(dual, opts)?;
            (delta, SolveMethod::Newton { iterations })
        }
    };
    let mut lambda = dual.block_sums(&delta);
    lambda[0] = 1.0;
    let dual_value = dual.log_dual_value(&delta).exp();
    let mut sol = DualSolution {
        delta,
        lambda,
        dual_value,
        primal_x: Vec::new(),
        method,
        diagnostics: Diagnostics {
            primal_objective: f64::NAN,
            duality_gap_rel: f64::NAN,
            constraint_values: Vec::new(),
            linear_residual: f64::NAN,
            recovery_residual: f64::NAN,
            gap_flagged: true,
            constraint_flagged: true,
        },
    };
    let (x, recovery_residual) = recover_primal_with_residual(&sol, gp)?;
    sol.primal_x = x;
    sol.diagnostics = verify_solution(gp, &sol);
    sol.diagnostics.recovery_residual = recovery_residual;
    Ok(sol)
}

/// Builds the dual of `gp` and solves it with default options.
pub fn solve(gp: &DeterministicGp) -> Result<DualSolution> {
    solve_dual(&build_dual(gp), &SolverOptions::default())
}

/// Unique solution of the square condition system, if it is nonsingular.
fn direct_weights(dual: &DualProblem) -> Result<Option<Vec<f64>>> {
    let (a, e) = dual.conditions();
    let svd = a.clone().svd(false, false);
    let max_sv = svd.singular_values.max();
    if svd.singular_values.min() <= RANK_TOLERANCE * max_sv.max(1.0) {
        return Ok(None);
    }
    let Some(delta) = a.lu().solve(&e) else {
        return Ok(None);
    };
    if let Some((i, d)) = delta
        .iter()
        .enumerate()
        .find(|(_, d)| **d < -RANK_TOLERANCE)
    {
        return Err(Error::InfeasibleDual(format!(
            "the condition system forces weight {} = {d} < 0",
            i + 1
        )));
    }
    Ok(Some(delta.iter().map(|d| d.max(0.0)).collect()))
}

/// Full-row-rank equivalent `(A_r, e_r)` of the conditions restricted to the
/// active columns, or an error when they have no solution at all.
fn reduced_conditions(a: &DMatrix<f64>, e: &DVector<f64>) -> Result<(DMatrix<f64>, DVector<f64>)> {
    let svd = a.clone().svd(true, true);
    let u = svd.u.as_ref().expect("requested U");
    let v_t = svd.v_t.as_ref().expect("requested Vᵀ");
    let max_sv = svd.singular_values.max().max(1.0);
    let keep: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| svd.singular_values[i] > RANK_TOLERANCE * max_sv)
        .collect();
    let rows = DMatrix::from_fn(keep.len(), a.ncols(), |r, c| v_t[(keep[r], c)]);
    let rhs = DVector::from_fn(keep.len(), |r, _| {
        u.column(keep[r]).dot(e) / svd.singular_values[keep[r]]
    });
    let projected = DVector::from_fn(e.len(), |i, _| {
        keep.iter()
            .map(|&r| u[(i, r)] * u.column(r).dot(e))
            .sum::<f64>()
    });
    if (projected - e).amax() > 1e-9 {
        return Err(Error::InfeasibleDual(
            "normality and orthogonality conditions are inconsistent".into(),
        ));
    }
    Ok((rows, rhs))
}

struct ActiveSystem {
    index: Vec<usize>,
    /// Orthonormal rows spanning the condition rows on the active terms.
    a: DMatrix<f64>,
    e: DVector<f64>,
}

impl ActiveSystem {
    fn new(dual: &DualProblem, active: &[bool]) -> Result<Self> {
        let (a_full, e) = dual.conditions();
        let index: Vec<usize> = (0..active.len()).filter(|&i| active[i]).collect();
        let a = DMatrix::from_fn(a_full.nrows(), index.len(), |r, c| a_full[(r, index[c])]);
        let (a, e) = reduced_conditions(&a, &e)?;
        Ok(Self { index, a, e })
    }

    fn lambda(&self, dual: &DualProblem, delta: &DVector<f64>) -> Vec<f64> {
        let mut lambda = vec![0.0; dual.block_count()];
        for (c, &i) in self.index.iter().enumerate() {
            lambda[dual.blocks[i]] += delta[c];
        }
        lambda
    }

    fn residual(&self, delta: &DVector<f64>) -> DVector<f64> {
        &self.a * delta - &self.e
    }

    /// Component of `g` orthogonal to the row space of the conditions.
    fn project(&self, g: &DVector<f64>) -> DVector<f64> {
        g - self.a.transpose() * (&self.a * g)
    }

    /// Newton step `Δ` with `H Δ + Aᵀw = −g`, `A Δ = −r`.
    fn step(&self, h: &DMatrix<f64>, g: &DVector<f64>, r: &DVector<f64>) -> Result<DVector<f64>> {
        let m = self.index.len();
        let rows = self.a.nrows();
        let mut kkt = DMatrix::zeros(m + rows, m + rows);
        kkt.view_mut((0, 0), (m, m)).copy_from(h);
        kkt.view_mut((0, m), (m, rows))
            .copy_from(&self.a.transpose());
        kkt.view_mut((m, 0), (rows, m)).copy_from(&self.a);
        let mut rhs = DVector::zeros(m + rows);
        rhs.rows_mut(0, m).copy_from(&(-g));
        rhs.rows_mut(m, rows).copy_from(&(-r));
        let sol = match kkt.clone().lu().solve(&rhs) {
            Some(s) if s.iter().all(|v| v.is_finite()) => s,
            _ => kkt
                .svd(true, true)
                .solve(&rhs, RANK_TOLERANCE)
                .map_err(|e| Error::invalid(format!("Newton system: {e}")))?,
        };
        Ok(sol.rows(0, m).into_owned())
    }

    /// Removes the terms of `blocks` and returns the surviving weights.
    fn drop_blocks(
        &mut self,
        dual: &DualProblem,
        active: &mut [bool],
        delta: &DVector<f64>,
        blocks: &[usize],
    ) -> Result<DVector<f64>> {
        let kept: Vec<f64> = self
            .index
            .iter()
            .zip(delta.iter())
            .filter(|(i, _)| !blocks.contains(&dual.blocks[**i]))
            .map(|(_, d)| *d)
            .collect();
        for &i in &self.index {
            if blocks.contains(&dual.blocks[i]) {
                active[i] = false;
            }
        }
        *self = ActiveSystem::new(dual, active)?;
        Ok(DVector::from_vec(kept))
    }

    fn scatter(&self, delta: &DVector<f64>, big_n: usize) -> Vec<f64> {
        let mut full = vec![0.0; big_n];
        for (c, &i) in self.index.iter().enumerate() {
            full[i] = delta[c];
        }
        full
    }
}

/// `φ(δ) = Σ δ ln(δ/β) − Σ_{k≥1} λ_k ln λ_k = −ln V(δ)`.
fn phi(dual: &DualProblem, sys: &ActiveSystem, delta: &DVector<f64>) -> f64 {
    -dual.log_dual_value(&sys.scatter(delta, dual.term_count()))
}

fn phi_gradient(
    dual: &DualProblem,
    sys: &ActiveSystem,
    delta: &DVector<f64>,
    lambda: &[f64],
) -> DVector<f64> {
    DVector::from_fn(sys.index.len(), |c, _| {
        let i = sys.index[c];
        let k = dual.blocks[i];
        let base = (delta[c] / dual.coefficients[i]).ln();
        if k == 0 {
            base + 1.0
        } else {
            base - lambda[k].ln()
        }
    })
}

/// `diag(1/δ) − Σ_k (1/λ_k) 1_k 1_kᵀ`, regularised along the block-scaling
/// directions where it is singular.
fn phi_hessian(
    dual: &DualProblem,
    sys: &ActiveSystem,
    delta: &DVector<f64>,
    lambda: &[f64],
) -> DMatrix<f64> {
    let m = sys.index.len();
    let mut h = DMatrix::from_fn(m, m, |r, c| {
        let k = dual.blocks[sys.index[r]];
        if k != 0 && k == dual.blocks[sys.index[c]] {
            -1.0 / lambda[k]
        } else {
            0.0
        }
    });
    let max_diag = delta.iter().map(|d| 1.0 / d).fold(0.0, f64::max);
    for c in 0..m {
        h[(c, c)] += 1.0 / delta[c] + 1e-12 * (1.0 + max_diag);
    }
    h
}

/// Largest step in `(0, 1]` keeping every weight strictly positive.
fn max_positive_step(delta: &DVector<f64>, dir: &DVector<f64>) -> f64 {
    delta
        .iter()
        .zip(dir.iter())
        .filter(|(_, dd)| **dd < 0.0)
        .map(|(d, dd)| 0.99 * -d / dd)
        .fold(1.0, f64::min)
}

fn collapsed_blocks(lambda: &[f64]) -> Vec<usize> {
    (1..lambda.len())
        .filter(|&k| lambda[k] < INACTIVE_THRESHOLD)
        .collect()
}

/// Phase one: a strictly positive point of the conditions, found by
/// minimising `Σ δ ln δ − δ` with infeasible-start Newton.
fn feasible_start(
    dual: &DualProblem,
    sys: &mut ActiveSystem,
    active: &mut [bool],
    opts: &SolverOptions,
) -> Result<(DVector<f64>, usize)> {
    let mut delta = DVector::from_element(sys.index.len(), 1.0);
    for iter in 0..opts.max_iterations {
        let r = sys.residual(&delta);
        if r.amax() <= FEASIBILITY_TOLERANCE {
            return Ok((delta, iter));
        }
        let g = delta.map(f64::ln);
        let h = DMatrix::from_diagonal(&delta.map(|d| 1.0 / d));
        let dir = sys.step(&h, &g, &r)?;
        let merit = |d: &DVector<f64>| {
            let dual_part = sys.project(&d.map(f64::ln));
            (dual_part.norm_squared() + sys.residual(d).norm_squared()).sqrt()
        };
        let current = merit(&delta);
        let mut t = max_positive_step(&delta, &dir);
        loop {
            let trial = (&delta + &dir * t).map(|v| v.max(1e-300));
            if merit(&trial) <= (1.0 - 0.01 * t) * current
                || sys.residual(&trial).norm() < r.norm() * (1.0 - 0.01 * t)
            {
                delta = trial;
                break;
            }
            t *= 0.5;
            if t < STALL_STEP {
                return Err(Error::InfeasibleDual(
                    "no nonnegative weights satisfy the conditions".into(),
                ));
            }
        }
        let dropped = collapsed_blocks(&sys.lambda(dual, &delta));
        if !dropped.is_empty() {
            delta = sys.drop_blocks(dual, active, &delta, &dropped)?;
        }
    }
    Err(Error::InfeasibleDual(format!(
        "no feasible weights found within {} iterations",
        opts.max_iterations
    )))
}

/// Newton's method on the convex function `φ = −ln V` over the affine set
/// of the conditions. Constraint blocks whose weight collapses are dropped
/// as inactive; weights growing without bound mean the dual is unbounded.
fn newton_weights(dual: &DualProblem, opts: &SolverOptions) -> Result<(Vec<f64>, usize)> {
    let big_n = dual.term_count();
    let mut active = vec![true; big_n];
    let mut sys = ActiveSystem::new(dual, &active)?;
    let (mut delta, mut iterations) = feasible_start(dual, &mut sys, &mut active, opts)?;
    let mut grad_norm = f64::INFINITY;

    while iterations < opts.max_iterations {
        iterations += 1;
        let lambda = sys.lambda(dual, &delta);
        let g = phi_gradient(dual, &sys, &delta, &lambda);
        grad_norm = sys.project(&g).norm();
        if grad_norm <= opts.tolerance {
            return Ok((sys.scatter(&delta, big_n), iterations));
        }
        let h = phi_hessian(dual, &sys, &delta, &lambda);
        let dir = sys.step(&h, &g, &sys.residual(&delta))?;
        let slope = g.dot(&dir);
        // a nonnegative descent ray that only the regularisation bounds
        if slope < 0.0
            && dir.min() >= -1e-9 * dir.norm()
            && dir.norm() > RAY_RATIO * (1.0 + delta.norm())
        {
            return Err(Error::UnboundedDual);
        }
        let current = phi(dual, &sys, &delta);
        let mut t = max_positive_step(&delta, &dir);
        loop {
            let trial = (&delta + &dir * t).map(|v| v.max(1e-300));
            let value = phi(dual, &sys, &trial);
            if value <= current + 0.25 * t * slope.min(0.0) {
                delta = trial;
                break;
            }
            t *= 0.5;
            if t < STALL_STEP {
                return Err(Error::NonConvergence {
                    iterations,
                    gradient_norm: grad_norm,
                });
            }
        }

        let lambda = sys.lambda(dual, &delta);
        if lambda.iter().any(|l| *l > UNBOUNDED_WEIGHT) {
            return Err(Error::UnboundedDual);
        }
        let dropped = collapsed_blocks(&lambda);
        if !dropped.is_empty() {
            delta = sys.drop_blocks(dual, &mut active, &delta, &dropped)?;
        }
    }
    Err(Error::NonConvergence {
        iterations,
        gradient_norm: grad_norm,
    })
}

/// Primal point from the dual weights by least squares in `ln x`.
///
/// Objective terms give `Σ_j a_ij ln x_j = ln(δ_i V / β_i)`; terms of
/// active constraints give `ln(δ_i / (λ_k β_i))`. Terms with zero weight
/// are skipped.
pub fn recover_primal(sol: &DualSolution, gp: &DeterministicGp) -> Result<Vec<f64>> {
    recover_primal_with_residual(sol, gp).map(|(x, _)| x)
}

fn recover_primal_with_residual(
    sol: &DualSolution,
    gp: &DeterministicGp,
) -> Result<(Vec<f64>, f64)> {
    let n = gp.variables();
    if n == 0 {
        return Ok((Vec::new(), 0.0));
    }
    let mut rows: Vec<&[f64]> = Vec::new();
    let mut rhs = Vec::new();
    let mut i = 0;
    for (k, block) in gp.blocks().enumerate() {
        for term in block.terms() {
            let d = sol.delta[i];
            i += 1;
            if d <= 0.0 {
                continue;
            }
            let value = if k == 0 {
                (d * sol.dual_value / term.coefficient).ln()
            } else {
                let lam = sol.lambda[k];
                if lam <= INACTIVE_THRESHOLD {
                    continue;
                }
                (d / (lam * term.coefficient)).ln()
            };
            rows.push(&term.exponents);
            rhs.push(value);
        }
    }
    let m = DMatrix::from_fn(rows.len(), n, |r, c| rows[r][c]);
    let b = DVector::from_vec(rhs);
    let svd = m.clone().svd(true, true);
    let max_sv = svd.singular_values.max().max(1.0);
    let rank = svd.rank(RANK_TOLERANCE * max_sv * rows.len().max(n) as f64);
    if rank < n {
        return Err(Error::RankDeficient { rank, variables: n });
    }
    let y = svd
        .solve(&b, RANK_TOLERANCE * max_sv)
        .map_err(|e| Error::invalid(format!("recovery system: {e}")))?;
    let residual = (&m * &y - &b).norm();
    Ok((y.iter().map(|v| v.exp()).collect(), residual))
}

/// Evaluates the primal at `sol.primal_x` and compares it with the dual.
pub fn verify_solution(gp: &DeterministicGp, sol: &DualSolution) -> Diagnostics {
    let x = &sol.primal_x;
    let primal_objective = gp.objective().eval(x);
    let duality_gap_rel = (primal_objective - sol.dual_value).abs() / sol.dual_value;
    let constraint_values: Vec<f64> = gp.constraints().iter().map(|c| c.eval(x)).collect();
    let linear_residual = build_dual(gp).linear_residual(&sol.delta);
    Diagnostics {
        primal_objective,
        duality_gap_rel,
        gap_flagged: duality_gap_rel.is_nan() || duality_gap_rel > GAP_TOLERANCE,
        constraint_flagged: constraint_values
            .iter()
            .any(|v| v.is_nan() || *v > 1.0 + CONSTRAINT_TOLERANCE),
        constraint_values,
        linear_residual,
        recovery_residual: sol.diagnostics.recovery_residual,
    }
}
