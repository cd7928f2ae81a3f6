//! Iterative best rank-one approximation by alternating power updates.
//!
//! The free solver cycles over modes, replacing one unit factor at a time by
//! the normalized contraction against all others; each such update is an
//! exact maximization over that mode, so the objective magnitude never
//! decreases. When factors are tied inside symmetry blocks the plain power
//! step can oscillate for blocks of even size, so tied updates carry a
//! damping safeguard: the convex combination (1-gamma) x + gamma x_new is
//! renormalized with gamma halved until the objective magnitude does not
//! decrease.
//!
//! Multi-start search draws deterministic restart seeds from a single
//! configuration seed; restart 0 starts from the dominant-slice heuristic.
//! Results merge by (|value| descending, restart index ascending), so the
//! outcome does not depend on scheduling.

use crate::error::{Error, Result};
use crate::matrix::best_rank1_matrix;
use crate::rng::SplitMix64;
use crate::tensor::{ModePartition, Rank1Approx, Tensor, UnitVector};
use itertools::Itertools;

/// Multi-start solver configuration.
#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub max_iters: usize,
    /// Stationarity residual threshold declaring convergence.
    pub tol: f64,
    pub restarts: usize,
    pub seed: u64,
    /// Route symmetric inputs through the tied (all factors equal) solver.
    pub symmetric_mode: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            max_iters: 500,
            tol: 1e-10,
            restarts: 32,
            seed: 0,
            symmetric_mode: false,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !self.tol.is_finite() || self.tol <= 0.0 {
            return Err(Error::Unsupported("tol must be positive".into()));
        }
        if self.restarts == 0 {
            return Err(Error::Unsupported("restarts must be at least 1".into()));
        }
        Ok(())
    }
}

/// Outcome of one multi-start solve.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub approx: Rank1Approx,
    /// Signed objective at the solution, the inner product with the factor
    /// outer product; callers compare magnitudes.
    pub value: f64,
    /// Max over modes of the stationarity defect norm.
    pub residual: f64,
    pub iterations: usize,
    pub restart_index: usize,
    pub converged: bool,
    /// |objective| after each sweep of the winning restart, nondecreasing.
    pub objective_trace: Vec<f64>,
}

/// One power-method update: the normalized contraction of all factors except
/// `mode`. A vanishing contraction is degenerate and the caller re-seeds.
pub fn hopm_step(t: &Tensor, factors: &[UnitVector], mode: usize) -> Result<UnitVector> {
    let slices: Vec<&[f64]> = factors.iter().map(|f| f.coords()).collect();
    let g = t.contract_all_but(&slices, mode)?;
    UnitVector::normalized(&g)
}

/// Best rank-one approximation with independent factors.
pub fn solve_general(t: &Tensor, cfg: &SolverConfig) -> Result<SolveResult> {
    solve_partitioned(t, &ModePartition::singletons(t.order()), cfg)
}

/// Best symmetric rank-one approximation of a symmetric tensor: all factors
/// equal, damped power updates.
pub fn solve_symmetric(t: &Tensor, cfg: &SolverConfig) -> Result<SolveResult> {
    let alpha: Vec<usize> = (0..t.order()).collect();
    if !t.is_symmetric_wrt_eps(&alpha, 1e-12 * t.max_abs().max(1.0)) {
        return Err(Error::NotSymmetric(
            "solve_symmetric requires a symmetric tensor".into(),
        ));
    }
    solve_partitioned(t, &ModePartition::whole(t.order()), cfg)
}

/// Best rank-one approximation with factors tied inside each block of the
/// partition. Singleton blocks get exact alternating updates, larger blocks
/// the damped tied update.
pub fn solve_partitioned(
    t: &Tensor,
    partition: &ModePartition,
    cfg: &SolverConfig,
) -> Result<SolveResult> {
    cfg.validate()?;
    let d = t.order();
    if partition.order() != d {
        return Err(Error::Unsupported(format!(
            "partition covers {} modes, tensor has {d}",
            partition.order()
        )));
    }
    for block in partition.blocks() {
        let n0 = t.shape()[block[0]];
        if block.iter().any(|&m| t.shape()[m] != n0) {
            return Err(Error::Unsupported("tied modes must share an extent".into()));
        }
    }
    if t.hs_norm() == 0.0 {
        return Err(Error::DegenerateInput("zero tensor".into()));
    }

    let mut best: Option<SolveResult> = None;
    for restart in 0..cfg.restarts {
        let mut rng = SplitMix64::derive(cfg.seed, restart as u64);
        // a zero contraction mid-iteration re-seeds this restart
        let mut outcome = None;
        for attempt in 0..8 {
            let start = if restart == 0 && attempt == 0 {
                dominant_slice_start(t, partition)
            } else {
                random_start(t, partition, &mut rng)
            };
            match run_restart(t, partition, cfg, start, restart) {
                Ok(res) => {
                    outcome = Some(res);
                    break;
                }
                Err(Error::DegenerateInput(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        let Some(res) = outcome else { continue };
        let better = match &best {
            None => true,
            Some(b) => res.value.abs() > b.value.abs(),
        };
        if better {
            best = Some(res);
        }
    }
    best.ok_or_else(|| Error::DegenerateInput("all restarts degenerate".into()))
}

/// Initial block vectors e_k maximizing the norm of the mode slice.
fn dominant_slice_start(t: &Tensor, partition: &ModePartition) -> Vec<UnitVector> {
    let mut out = Vec::with_capacity(partition.blocks().len());
    for block in partition.blocks() {
        let mode = block[0];
        let n = t.shape()[mode];
        let mut best_k = 0;
        let mut best_norm = -1.0;
        for k in 0..n {
            let mut e = vec![0.0; n];
            e[k] = 1.0;
            let slice = t
                .contract(&[(mode, e.as_slice())])
                .expect("mode within range");
            let norm = slice.hs_norm();
            if norm > best_norm {
                best_norm = norm;
                best_k = k;
            }
        }
        out.push(UnitVector::standard(n, best_k));
    }
    out
}

fn random_start(t: &Tensor, partition: &ModePartition, rng: &mut SplitMix64) -> Vec<UnitVector> {
    partition
        .blocks()
        .iter()
        .map(|block| {
            let n = t.shape()[block[0]];
            loop {
                if let Ok(u) = UnitVector::normalized(&rng.gaussian_vec(n)) {
                    return u;
                }
            }
        })
        .collect()
}

/// Expands per-block vectors into the full factor list.
fn expand_factors(partition: &ModePartition, xs: &[UnitVector], d: usize) -> Vec<UnitVector> {
    let mut factors: Vec<Option<UnitVector>> = vec![None; d];
    for (block, x) in partition.blocks().iter().zip(xs.iter()) {
        for &m in block {
            factors[m] = Some(x.clone());
        }
    }
    factors.into_iter().map(|f| f.unwrap()).collect()
}

fn objective(t: &Tensor, factors: &[UnitVector]) -> f64 {
    let assigns: Vec<(usize, &[f64])> = factors
        .iter()
        .enumerate()
        .map(|(m, f)| (m, f.coords()))
        .collect();
    t.contract(&assigns)
        .expect("shapes validated")
        .as_scalar()
        .expect("full contraction")
}

fn stationarity_residual(t: &Tensor, factors: &[UnitVector], value: f64) -> f64 {
    let slices: Vec<&[f64]> = factors.iter().map(|f| f.coords()).collect();
    let mut worst: f64 = 0.0;
    for (mode, factor) in factors.iter().enumerate() {
        let g = t.contract_all_but(&slices, mode).expect("shapes validated");
        let defect: f64 = g
            .iter()
            .zip(factor.coords())
            .map(|(gi, ui)| (gi - value * ui) * (gi - value * ui))
            .sum::<f64>()
            .sqrt();
        worst = worst.max(defect);
    }
    worst
}

fn run_restart(
    t: &Tensor,
    partition: &ModePartition,
    cfg: &SolverConfig,
    mut xs: Vec<UnitVector>,
    restart_index: usize,
) -> Result<SolveResult> {
    let d = t.order();
    let blocks = partition.blocks();
    let mut factors = expand_factors(partition, &xs, d);
    let mut value = objective(t, &factors);
    let mut trace = vec![value.abs()];
    let mut iterations = 0;
    let mut converged = false;

    for _ in 0..cfg.max_iters {
        iterations += 1;
        for (b, block) in blocks.iter().enumerate() {
            let g_mode = block[0];
            let slices: Vec<&[f64]> = factors.iter().map(|f| f.coords()).collect();
            let g = t.contract_all_but(&slices, g_mode)?;
            let candidate = UnitVector::normalized(&g)?;
            if block.len() == 1 {
                // exact maximization over this mode
                xs[b] = candidate;
                factors[block[0]] = xs[b].clone();
                value = objective(t, &factors);
            } else {
                // tied update: accept only a non-decreasing |objective|
                let cur = objective(t, &factors);
                let target = if cur < 0.0 {
                    candidate.negated()
                } else {
                    candidate
                };
                let mut gamma = 1.0;
                loop {
                    let blend: Vec<f64> = xs[b]
                        .coords()
                        .iter()
                        .zip(target.coords())
                        .map(|(old, new)| (1.0 - gamma) * old + gamma * new)
                        .collect();
                    if let Ok(x_try) = UnitVector::normalized(&blend) {
                        let mut trial = factors.clone();
                        for &m in block {
                            trial[m] = x_try.clone();
                        }
                        let f_try = objective(t, &trial);
                        if f_try.abs() >= cur.abs() {
                            xs[b] = x_try;
                            factors = trial;
                            value = f_try;
                            break;
                        }
                    }
                    gamma *= 0.5;
                    if gamma < 1e-9 {
                        // no admissible step: block sits at a stationary point
                        value = cur;
                        break;
                    }
                }
            }
        }
        trace.push(value.abs());
        if stationarity_residual(t, &factors, value) <= cfg.tol {
            converged = true;
            break;
        }
    }

    let residual = stationarity_residual(t, &factors, value);
    Ok(SolveResult {
        approx: Rank1Approx::new(value, factors),
        value,
        residual,
        iterations,
        restart_index,
        converged,
        objective_trace: trace,
    })
}

/// Certificate data for a candidate rank-one approximation.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub is_stationary: bool,
    /// Max over modes of the stationarity defect norm.
    pub residual: f64,
    /// |value^2 + ||T - value * (x_1 o ... o x_d)||^2 - ||T||^2| / ||T||^2.
    pub pythagoras_gap: f64,
    /// Max over mode pairs of | sigma_1(doubly contracted matrix) - |value| |.
    pub cert_gap: f64,
}

/// Checks the stationarity system, the Pythagoras identity, and agreement of
/// |value| with the top singular value of every doubly-contracted matrix.
pub fn certify(t: &Tensor, approx: &Rank1Approx, tol: f64) -> Result<Certificate> {
    let d = t.order();
    if approx.factors.len() != d {
        return Err(Error::Unsupported(format!(
            "approximation has {} factors, tensor has {d} modes",
            approx.factors.len()
        )));
    }
    let value = objective(t, &approx.factors);
    let residual = stationarity_residual(t, &approx.factors, value);

    let rank1 = Rank1Approx::new(value, approx.factors.clone()).to_tensor()?;
    let diff = t.sub(&rank1)?.hs_norm();
    let norm2 = t.inner(t)?;
    let pythagoras_gap = if norm2 > 0.0 {
        (value * value + diff * diff - norm2).abs() / norm2
    } else {
        0.0
    };

    let mut cert_gap: f64 = 0.0;
    for p in 0..d {
        for q in (p + 1)..d {
            let assigns: Vec<(usize, &[f64])> = (0..d)
                .filter(|&m| m != p && m != q)
                .map(|m| (m, approx.factors[m].coords()))
                .collect();
            let matrix = t.contract(&assigns)?;
            let sigma = if matrix.hs_norm() == 0.0 {
                0.0
            } else {
                best_rank1_matrix(&matrix)?.sigma
            };
            cert_gap = cert_gap.max((sigma - value.abs()).abs());
        }
    }

    Ok(Certificate {
        is_stationary: residual <= tol,
        residual,
        pythagoras_gap,
        cert_gap,
    })
}

/// All rank-one candidates obtained by permuting the factors of `approx`
/// within each partition block, deduplicated. For a tensor symmetric with
/// respect to each block, every returned candidate attains the same
/// objective value.
pub fn permuted_solutions(
    t: &Tensor,
    approx: &Rank1Approx,
    partition: &ModePartition,
) -> Result<Vec<Rank1Approx>> {
    let d = t.order();
    if approx.factors.len() != d || partition.order() != d {
        return Err(Error::Unsupported(
            "approximation, partition, and tensor orders disagree".into(),
        ));
    }
    let block_perms: Vec<Vec<Vec<usize>>> = partition
        .blocks()
        .iter()
        .map(|block| block.iter().copied().permutations(block.len()).collect())
        .collect();

    let mut out: Vec<Rank1Approx> = Vec::new();
    let mut choice = vec![0usize; block_perms.len()];
    loop {
        let mut factors = approx.factors.clone();
        for (b, block) in partition.blocks().iter().enumerate() {
            let perm = &block_perms[b][choice[b]];
            for (slot, &src) in block.iter().zip(perm.iter()) {
                factors[*slot] = approx.factors[src].clone();
            }
        }
        let cand = Rank1Approx::new(approx.scale, factors);
        if !out.iter().any(|a| a.factors == cand.factors) {
            out.push(cand);
        }
        // advance the mixed-radix counter over block permutations
        let mut carry = true;
        for (b, c) in choice.iter_mut().enumerate() {
            if carry {
                *c += 1;
                if *c < block_perms[b].len() {
                    carry = false;
                } else {
                    *c = 0;
                }
            }
        }
        if carry {
            break;
        }
    }
    Ok(out)
}
