//! Finite-difference eigensolver for the radial equation, independent of
//! both analytic routes.
//!
//! The equation `−(ħ²/2μ)χ'' + V_eff χ = Eχ` is discretized on a
//! logarithmic mesh `r = e^x` between `r_min` and `r_max`. Writing
//! `χ = r^{1/2}u` gives
//!
//! ```text
//! −(ħ²/2μ)u'' + [ħ²/(8μ) + r²V_eff] u = E r² u,
//! ```
//!
//! a symmetric tridiagonal pencil `(H, diag r²)`. The outer end is a
//! Dirichlet wall; at the inner end `u` continues as the regular solution
//! `r^{l+1/2}`, which removes the `O(r_min)` wall error of s-waves. Eigenvalues are isolated by
//! Sturm-sequence bisection on the inertia of `H − E·M`, eigenvectors by
//! inverse iteration, and each level is Richardson-extrapolated from runs
//! at `n` and `2n` points.

use serde::{Deserialize, Serialize};

use crate::error::{HulthenError, Result};
use crate::model::{potential_effective, PotentialMode, PotentialSpec, QuantumNumbers};
use crate::nu_solver::RadialWavefunction;
use crate::scalar::Real;

pub const DEFAULT_POINTS: usize = 8000;
pub const MIN_POINTS: usize = 500;
pub const DEFAULT_R_MIN_FACTOR: f64 = 1e-6;
pub const DEFAULT_R_MAX_FACTOR: f64 = 50.0;
/// Richardson error target for every reported eigenvalue.
pub const CONVERGENCE_TOL: f64 = 1e-7;
/// States with `|E|` below this are flagged as sensitive to the box size.
pub const TRUNCATION_SENSITIVE_ENERGY: f64 = 1e-5;
/// Ceiling on the interior point count reached by grid doubling.
pub const MAX_POINTS: usize = 1 << 19;

/// Radial extent and resolution of the oracle mesh.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec<T> {
    pub r_min: T,
    pub r_max: T,
    pub n_points: usize,
}

impl<T: Real> GridSpec<T> {
    pub fn new(r_min: T, r_max: T, n_points: usize) -> Result<Self> {
        let grid = Self { r_min, r_max, n_points };
        grid.validate()?;
        Ok(grid)
    }

    /// `r_min = 10⁻⁶/δ`, `r_max = 50/δ`, 8000 points.
    pub fn default_for(spec: &PotentialSpec<T>) -> Self {
        Self::scaled(spec, T::lit(DEFAULT_R_MAX_FACTOR), DEFAULT_POINTS)
    }

    /// Default mesh with `r_max = rmax_factor/δ` and a custom point count.
    pub fn scaled(spec: &PotentialSpec<T>, rmax_factor: T, n_points: usize) -> Self {
        Self { r_min: T::lit(DEFAULT_R_MIN_FACTOR) / spec.delta, r_max: rmax_factor / spec.delta, n_points }
    }

    /// Sampling window used for residual checks, `[0.1/δ, 20/δ]`.
    pub fn residual_window(spec: &PotentialSpec<T>) -> Self {
        Self { r_min: T::lit(0.1) / spec.delta, r_max: T::lit(20.0) / spec.delta, n_points: 2000 }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r_min > T::zero() && self.r_min < self.r_max && self.r_max.is_finite()) {
            return Err(HulthenError::InvalidParameter {
                name: "grid",
                reason: format!("need 0 < r_min < r_max, got [{}, {}]", self.r_min, self.r_max),
            });
        }
        if self.n_points < MIN_POINTS {
            return Err(HulthenError::InvalidParameter {
                name: "n_points",
                reason: format!("need at least {MIN_POINTS} points, got {}", self.n_points),
            });
        }
        Ok(())
    }
}

/// Bound spectrum of one `(l, mode)` channel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumResult<T> {
    pub l: u32,
    pub potential_mode: PotentialMode,
    /// Negative eigenvalues in increasing order, Richardson-extrapolated.
    pub eigenvalues: Vec<T>,
    /// Sign changes of each eigenvector.
    pub node_counts: Vec<usize>,
    /// `|E(2n) − E(n)|/3` for each level at the final resolution.
    pub error_estimates: Vec<T>,
    /// `max|χ|` over the outer 2% of the box relative to `max|χ|`.
    pub tail_ratios: Vec<T>,
    pub truncation_sensitive: Vec<bool>,
    pub grid: GridSpec<T>,
    /// Interior points of the finest mesh used.
    pub final_points: usize,
    pub achieved_tolerance: T,
    pub converged: bool,
}

impl<T: Real> SpectrumResult<T> {
    pub fn level(&self, n_r: u32) -> Option<T> {
        self.eigenvalues.get(n_r as usize).copied()
    }
}

/// Convergence controls for [`solve_radial_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions<T> {
    pub tolerance: T,
    pub max_points: usize,
    /// Only levels below this index are refined; `None` refines all.
    pub max_levels: Option<usize>,
}

impl<T: Real> Default for SolveOptions<T> {
    fn default() -> Self {
        Self { tolerance: T::lit(CONVERGENCE_TOL), max_points: MAX_POINTS, max_levels: None }
    }
}

struct Pencil<T> {
    r: Vec<T>,
    diag: Vec<T>,
    off: T,
    mass: Vec<T>,
}

impl<T: Real> Pencil<T> {
    fn build(spec: &PotentialSpec<T>, l: u32, mode: PotentialMode, grid: &GridSpec<T>, n: usize) -> Result<Self> {
        let t = spec.kinetic();
        let h = (grid.r_max / grid.r_min).ln() / T::from_usize_lossy(n + 1);
        let inv_h2 = (h * h).recip();
        let q = QuantumNumbers::new(0, l);
        let mut r = Vec::with_capacity(n);
        let mut diag = Vec::with_capacity(n);
        let mut mass = Vec::with_capacity(n);
        for i in 1..=n {
            let ri = grid.r_min * (h * T::from_usize_lossy(i)).exp();
            let v = potential_effective(spec, q, ri, mode)?;
            r.push(ri);
            diag.push(T::lit(2.0) * t * inv_h2 + t / T::lit(4.0) + ri * ri * v);
            mass.push(ri * ri);
        }
        // regular solution u ∝ r^{l+1/2} below the first node instead of a wall
        let ghost = (-(T::from_u32(l).expect("l fits scalar") + T::lit(0.5)) * h).exp();
        diag[0] = diag[0] - t * inv_h2 * ghost;
        Ok(Self { r, diag, off: -t * inv_h2, mass })
    }

    /// Number of generalized eigenvalues below `e` (inertia of `H − eM`).
    fn count_below(&self, e: T) -> usize {
        let off2 = self.off * self.off;
        let tiny = T::min_positive_value().sqrt();
        let mut count = 0;
        let mut d = T::one();
        for (i, (&a, &m)) in self.diag.iter().zip(&self.mass).enumerate() {
            d = a - e * m - if i == 0 { T::zero() } else { off2 / d };
            if d == T::zero() {
                d = -tiny;
            }
            if d < T::zero() {
                count += 1;
            }
        }
        count
    }

    fn lower_bound(&self) -> T {
        self.diag
            .iter()
            .zip(&self.mass)
            .map(|(&a, &m)| (a - T::lit(2.0) * self.off.abs()) / m)
            .fold(T::infinity(), T::min)
    }

    /// The `k`-th eigenvalue below `upper` by bisection.
    fn bisect(&self, k: usize, mut lo: T, mut hi: T) -> T {
        for _ in 0..200 {
            let mid = (lo + hi) / T::lit(2.0);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        (lo + hi) / T::lit(2.0)
    }

    /// Inverse iteration for the eigenvector at `e`; returns `χ = r^{1/2}u`.
    fn eigenvector(&self, e: T) -> Vec<T> {
        let n = self.diag.len();
        let shift = e - e.abs().max(T::one()) * T::epsilon() * T::lit(64.0);
        let mut v: Vec<T> = (0..n).map(|i| T::one() + T::lit(1e-3) * T::from_usize_lossy(i % 7)).collect();
        let mut c = vec![T::zero(); n];
        let mut rhs = vec![T::zero(); n];
        for _ in 0..4 {
            for i in 0..n {
                rhs[i] = self.mass[i] * v[i];
            }
            // Thomas algorithm for (H − shift·M) x = rhs
            let mut denom = self.diag[0] - shift * self.mass[0];
            c[0] = self.off / denom;
            rhs[0] = rhs[0] / denom;
            for i in 1..n {
                denom = self.diag[i] - shift * self.mass[i] - self.off * c[i - 1];
                if denom == T::zero() {
                    denom = T::epsilon();
                }
                c[i] = self.off / denom;
                rhs[i] = (rhs[i] - self.off * rhs[i - 1]) / denom;
            }
            for i in (0..n - 1).rev() {
                rhs[i] = rhs[i] - c[i] * rhs[i + 1];
            }
            let norm = rhs.iter().fold(T::zero(), |m, &x| m.max(x.abs()));
            for i in 0..n {
                v[i] = rhs[i] / norm;
            }
        }
        v.iter().zip(&self.r).map(|(&u, &r)| u * r.sqrt()).collect()
    }
}

/// Sign changes, ignoring entries below `1e-10·max|χ|`.
pub fn count_nodes<T: Real>(chi: &[T]) -> usize {
    let peak = chi.iter().fold(T::zero(), |m, &x| m.max(x.abs()));
    let floor = peak * T::lit(1e-10);
    let mut last = T::zero();
    let mut nodes = 0;
    for &x in chi {
        if x.abs() <= floor {
            continue;
        }
        if last != T::zero() && x.signum() != last.signum() {
            nodes += 1;
        }
        last = x;
    }
    nodes
}

struct Level<T> {
    energy: T,
    nodes: usize,
    tail_ratio: T,
}

fn bound_levels<T: Real>(pencil: &Pencil<T>, max_levels: Option<usize>, with_vectors: bool) -> Vec<Level<T>> {
    let mut count = pencil.count_below(T::zero());
    if let Some(m) = max_levels {
        count = count.min(m);
    }
    let lo = pencil.lower_bound().min(T::zero()) - T::one();
    (0..count)
        .map(|k| {
            let energy = pencil.bisect(k, lo, T::zero());
            let (nodes, tail_ratio) = if with_vectors {
                let chi = pencil.eigenvector(energy);
                let peak = chi.iter().fold(T::zero(), |m, &x| m.max(x.abs()));
                let tail_start = chi.len() - chi.len() / 50;
                let tail = chi[tail_start..].iter().fold(T::zero(), |m, &x| m.max(x.abs()));
                (count_nodes(&chi), tail / peak)
            } else {
                (k, T::nan())
            };
            Level { energy, nodes, tail_ratio }
        })
        .collect()
}

/// Bound spectrum with the default convergence controls.
pub fn solve_radial<T: Real>(
    spec: &PotentialSpec<T>,
    l: u32,
    mode: PotentialMode,
    grid: &GridSpec<T>,
) -> Result<SpectrumResult<T>> {
    solve_radial_with(spec, l, mode, grid, &SolveOptions::default())
}

pub fn solve_radial_with<T: Real>(
    spec: &PotentialSpec<T>,
    l: u32,
    mode: PotentialMode,
    grid: &GridSpec<T>,
    opts: &SolveOptions<T>,
) -> Result<SpectrumResult<T>> {
    grid.validate()?;
    let mut n = grid.n_points;
    let mut coarse = bound_levels(&Pencil::build(spec, l, mode, grid, n)?, opts.max_levels, false);
    loop {
        let fine_pencil = Pencil::build(spec, l, mode, grid, 2 * n)?;
        let fine = bound_levels(&fine_pencil, opts.max_levels, false);
        let m = coarse.len().min(fine.len());
        let three = T::lit(3.0);
        let errors: Vec<T> = (0..m).map(|k| (fine[k].energy - coarse[k].energy).abs() / three).collect();
        let worst = errors.iter().fold(T::zero(), |a, &b| a.max(b));
        let converged = worst <= opts.tolerance;
        if converged || 4 * n > opts.max_points {
            let vectors = bound_levels(&fine_pencil, Some(m), true);
            let eigenvalues: Vec<T> =
                (0..m).map(|k| (T::lit(4.0) * fine[k].energy - coarse[k].energy) / three).collect();
            let truncation_sensitive =
                eigenvalues.iter().map(|e| e.abs() < T::lit(TRUNCATION_SENSITIVE_ENERGY)).collect();
            return Ok(SpectrumResult {
                l,
                potential_mode: mode,
                node_counts: vectors.iter().map(|v| v.nodes).collect(),
                tail_ratios: vectors.iter().map(|v| v.tail_ratio).collect(),
                eigenvalues,
                error_estimates: errors,
                truncation_sensitive,
                grid: *grid,
                final_points: 2 * n,
                achieved_tolerance: worst,
                converged,
            });
        }
        n *= 2;
        coarse = fine;
    }
}

/// Relative L² residual of the approximated-mode radial equation for an
/// analytic eigenfunction, sampled on the uniform points of `grid`.
///
/// `χ''` comes from a nine-point (eighth-order) central difference.
pub fn ode_residual<T: Real>(chi: &RadialWavefunction<T>, energy: T, grid: &GridSpec<T>) -> Result<T> {
    grid.validate()?;
    let spec = &chi.spec;
    let scale = (T::lit(0.1)).min((chi.sqrt_c + chi.k_exponent + T::from_u32(chi.degree).unwrap()).recip());
    let h = T::lit(0.02) * scale / spec.delta;
    let weights = [
        -1.0 / 560.0,
        8.0 / 315.0,
        -1.0 / 5.0,
        8.0 / 5.0,
        -205.0 / 72.0,
        8.0 / 5.0,
        -1.0 / 5.0,
        8.0 / 315.0,
        -1.0 / 560.0,
    ];
    let two_mu_over_hbar2 = spec.kinetic().recip();
    let step = (grid.r_max - grid.r_min) / T::from_usize_lossy(grid.n_points - 1);
    let mut res_sq = T::zero();
    let mut ref_sq = T::zero();
    for j in 0..grid.n_points {
        let r = grid.r_min + step * T::from_usize_lossy(j);
        let mut d2 = T::zero();
        for (k, &w) in weights.iter().enumerate() {
            let offset = T::from_usize_lossy(k) - T::lit(4.0);
            d2 = d2 + T::lit(w) * chi.chi(r + offset * h)?;
        }
        d2 = d2 / (h * h);
        let v = potential_effective(spec, chi.q, r, PotentialMode::Approximated)?;
        let res = d2 - two_mu_over_hbar2 * (v - energy) * chi.chi(r)?;
        res_sq = res_sq + res * res;
        ref_sq = ref_sq + d2 * d2;
    }
    Ok((res_sq / ref_sq).sqrt())
}

/// `E_exact − E_approx` for the level with `n_r` nodes.
pub fn approximation_gap<T: Real>(spec: &PotentialSpec<T>, q: QuantumNumbers, grid: &GridSpec<T>) -> Result<T> {
    let opts = SolveOptions { max_levels: Some(q.n_r as usize + 1), ..SolveOptions::default() };
    let level = |mode: PotentialMode| -> Result<T> {
        let spectrum = solve_radial_with(spec, q.l, mode, grid, &opts)?;
        spectrum.level(q.n_r).ok_or(HulthenError::MissingState {
            n_r: q.n_r,
            mode: mode.name(),
            available: spectrum.eigenvalues.len(),
        })
    };
    Ok(level(PotentialMode::Exact)? - level(PotentialMode::Approximated)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nu_solver::{energy_nu, wavefunction};

    fn au(delta: f64, c0: f64) -> PotentialSpec<f64> {
        PotentialSpec::new(1.0, delta, 1.0, 1.0, c0).unwrap()
    }

    #[test]
    fn grid_validation() {
        let spec = au(0.025, 0.0);
        let g = GridSpec::default_for(&spec);
        assert_eq!(g.n_points, 8000);
        assert!((g.r_max - 2000.0).abs() < 1e-9);
        assert!(GridSpec::new(1.0, 0.5, 1000).is_err());
        assert!(GridSpec::new(0.0, 5.0, 1000).is_err());
        assert!(GridSpec::new(0.1, 5.0, 100).is_err());
    }

    #[test]
    fn node_counting() {
        assert_eq!(count_nodes(&[0.0, 1.0, 2.0, 1.0, 0.0]), 0);
        assert_eq!(count_nodes(&[0.0, 1.0, -1.0, 1e-14, 2.0]), 2);
        assert_eq!(count_nodes::<f64>(&[]), 0);
    }

    #[test]
    fn approximated_2p_matches_closed_form() {
        let spec = au(0.025, 0.0);
        let s = solve_radial(&spec, 1, PotentialMode::Approximated, &GridSpec::default_for(&spec)).unwrap();
        assert!(s.converged, "{:?}", s.achieved_tolerance);
        assert!((s.eigenvalues[0] + 0.112_812_5).abs() < 1e-6, "{}", s.eigenvalues[0]);
        for (k, &n) in s.node_counts.iter().enumerate() {
            assert_eq!(n, k);
        }
        assert!(s.eigenvalues.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn exact_2p_matches_published_numerics() {
        let spec = au(0.025, 0.0);
        let s = solve_radial(&spec, 1, PotentialMode::Exact, &GridSpec::default_for(&spec)).unwrap();
        assert!((s.eigenvalues[0] + 0.112_760_5).abs() < 1e-5, "{}", s.eigenvalues[0]);
    }

    #[test]
    fn s_wave_exact_mode_is_solvable() {
        let spec = au(0.05, 1.0 / 12.0);
        let s = solve_radial(&spec, 0, PotentialMode::Exact, &GridSpec::default_for(&spec)).unwrap();
        for n_r in 0..3 {
            let want = energy_nu(&spec, QuantumNumbers::new(n_r, 0)).energy;
            assert!(
                (s.eigenvalues[n_r as usize] - want).abs() < 1e-6,
                "n_r={n_r}: {} vs {want} conv={} tol={:?} pts={}",
                s.eigenvalues[n_r as usize],
                s.converged,
                s.achieved_tolerance,
                s.final_points
            );
        }
    }

    #[test]
    fn ode_residual_checks() {
        let spec = au(0.025, 1.0 / 12.0);
        let q = QuantumNumbers::new(0, 1);
        let wf = wavefunction(&spec, q).unwrap();
        let grid = GridSpec::residual_window(&spec);
        let good = ode_residual(&wf, wf.energy, &grid).unwrap();
        assert!(good < 1e-6, "{good}");
        let bad = ode_residual(&wf, wf.energy * 1.01, &grid).unwrap();
        assert!(bad > 10.0 * good, "{bad} vs {good}");
        let s = wavefunction(&spec, QuantumNumbers::new(0, 0)).unwrap();
        assert!(ode_residual(&s, s.energy, &grid).unwrap() < 1e-6);
    }

    #[test]
    fn gap_is_small_at_weak_screening() {
        let spec = au(0.025, 1.0 / 12.0);
        let gap = approximation_gap(&spec, QuantumNumbers::new(0, 1), &GridSpec::default_for(&spec)).unwrap();
        assert!(gap.abs() < 2e-6, "{gap}");
    }

    #[test]
    fn missing_state_names_the_mode() {
        // 2p with exact centrifugal term has no bound state at δ = 0.6
        let spec = au(0.6, 1.0 / 12.0);
        let err = approximation_gap(&spec, QuantumNumbers::new(0, 1), &GridSpec::default_for(&spec)).unwrap_err();
        assert!(matches!(err, HulthenError::MissingState { mode: "exact", .. }), "{err}");
    }

    #[test]
    fn empty_spectrum_is_not_an_error() {
        let spec = au(2.5, 0.0);
        let s = solve_radial(&spec, 3, PotentialMode::Exact, &GridSpec::default_for(&spec)).unwrap();
        assert!(s.eigenvalues.is_empty());
        assert!(s.converged);
    }
}
