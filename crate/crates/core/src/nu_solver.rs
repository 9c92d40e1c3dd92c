//! Nikiforov–Uvarov route.
//!
//! Under `s = e^{−δr}` the radial equation with the approximated centrifugal
//! term becomes
//!
//! ```text
//! χ'' + (1−s)/σ χ' + σ̃/σ² χ = 0,   σ = s(1−s),
//! σ̃ = −ε²(1−s)² − λ(C₀(1−s)² + s) + α² s(1−s),
//! ```
//!
//! and the square root in `π(s) = −s/2 ± √((a−k)s² − (b−k)s + c)` is a
//! perfect square for the two roots `k = (b−2c) ± 2√(c(c+a−b))`. The energy
//! itself comes from the closed form; the branch machinery below is kept so
//! the derivation can be checked numerically.

use serde::{Deserialize, Serialize};

use crate::error::{HulthenError, Result};
use crate::model::{lambda, DimensionlessParams, PotentialSpec, QuantumNumbers};
use crate::scalar::Real;
use crate::specfun::{composite_quadrature, hyp2f1_terminating, jacobi_poly, ln_gamma, JacobiParams, Quadrature};
use crate::susy_solver::panel_breaks;

/// Which route produced an energy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "nu")]
    Nu,
    #[serde(rename = "susy")]
    Susy,
    #[serde(rename = "numeric-exact")]
    NumericExact,
    #[serde(rename = "numeric-approx")]
    NumericApprox,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Nu, Method::Susy, Method::NumericExact, Method::NumericApprox];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Nu => "nu",
            Method::Susy => "susy",
            Method::NumericExact => "numeric-exact",
            Method::NumericApprox => "numeric-approx",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name().eq_ignore_ascii_case(s.trim()))
    }
}

/// Quantities computed on the way to an energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Intermediates<T> {
    pub alpha_sq: T,
    pub epsilon_sq: T,
    /// Exponent of `s` in the eigenfunction, `α²/(2N) − N/2`. Non-positive
    /// values mean the quantization has no normalizable solution.
    pub sqrt_c: T,
    /// Exponent of `1 − s`, equal to `l + 1`.
    pub k_exponent: T,
    /// Superpotential constant `A` (SUSY route only).
    pub superpotential_a: Option<T>,
    /// Superpotential coefficient `B` (SUSY route only).
    pub superpotential_b: Option<T>,
    /// Left minus right side of the NU quantization condition at this `ε²`.
    pub quantization_residual: Option<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyResult<T> {
    pub state: QuantumNumbers,
    pub energy: T,
    pub method: Method,
    /// `E < 0` and a positive `√c`, i.e. a normalizable eigenfunction.
    pub bound: bool,
    pub intermediates: Intermediates<T>,
}

impl<T: Real> EnergyResult<T> {
    pub fn dimensionless(&self) -> DimensionlessParams<T> {
        DimensionlessParams { alpha_sq: self.intermediates.alpha_sq, epsilon_sq: self.intermediates.epsilon_sq }
    }
}

/// The `a, b, c` coefficients of the radicand in `π(s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NuCoefficients<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Real> NuCoefficients<T> {
    pub fn new(spec: &PotentialSpec<T>, q: QuantumNumbers, epsilon_sq: T) -> Self {
        let lam = lambda::<T>(q.l);
        let alpha_sq = spec.alpha_sq();
        let lc0 = lam * spec.c0;
        Self {
            a: T::lit(0.25) + epsilon_sq + lc0 + alpha_sq,
            b: T::lit(2.0) * epsilon_sq + T::lit(2.0) * lc0 + alpha_sq - lam,
            c: epsilon_sq + lc0,
        }
    }

    pub fn sqrt_c(&self) -> Result<T> {
        checked_sqrt(self.c, "sqrt(c)")
    }

    /// `√(c + a − b)`, identically `l + 1/2`.
    pub fn sqrt_cab(&self) -> Result<T> {
        checked_sqrt(self.c + self.a - self.b, "sqrt(c + a - b)")
    }

    /// `K = 1/2 + √(c + a − b)`.
    pub fn k_exponent(&self) -> Result<T> {
        Ok(T::lit(0.5) + self.sqrt_cab()?)
    }

    /// The two roots `k± = (b − 2c) ± 2√(c(c + a − b))`.
    pub fn k_roots(&self) -> Result<(T, T)> {
        let root = T::lit(2.0) * (self.sqrt_c()? * self.sqrt_cab()?);
        let base = self.b - T::lit(2.0) * self.c;
        Ok((base + root, base - root))
    }
}

fn checked_sqrt<T: Real>(x: T, context: &'static str) -> Result<T> {
    if x >= T::zero() {
        Ok(x.sqrt())
    } else {
        Err(HulthenError::NegativeRadicand { context, radicand: x.to_f64_lossy() })
    }
}

/// Sign choices for `π(s)`: the outer `±` in front of the square root and
/// the root `k±` that makes the radicand a perfect square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PiBranch {
    PlusOuterPlusK,
    MinusOuterPlusK,
    PlusOuterMinusK,
    MinusOuterMinusK,
}

impl PiBranch {
    /// Tie-break order when several branches give a decreasing `τ`.
    const PREFERENCE: [PiBranch; 4] =
        [PiBranch::PlusOuterMinusK, PiBranch::PlusOuterPlusK, PiBranch::MinusOuterMinusK, PiBranch::MinusOuterPlusK];
}

/// `π(s) = constant + slope·s` with its associated `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PiCandidate<T> {
    pub branch: PiBranch,
    pub k: T,
    pub constant: T,
    pub slope: T,
}

impl<T: Real> PiCandidate<T> {
    pub fn pi(&self, s: T) -> T {
        self.constant + self.slope * s
    }

    /// `τ(s) = τ̃(s) + 2π(s)` with `τ̃ = 1 − s`.
    pub fn tau(&self, s: T) -> T {
        T::one() - s + T::lit(2.0) * self.pi(s)
    }

    pub fn tau_slope(&self) -> T {
        T::lit(2.0) * self.slope - T::one()
    }
}

/// The selected NU branch together with the coefficients it came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NuParameters<T> {
    pub coefficients: NuCoefficients<T>,
    pub k: T,
    pub branch: PiBranch,
    pub pi: PiCandidate<T>,
}

impl<T: Real> NuParameters<T> {
    /// `λ̄ = k + π'`.
    pub fn lambda_bar(&self) -> T {
        self.k + self.pi.slope
    }
}

/// All four `π(s)` polynomials.
pub fn pi_candidates<T: Real>(coeffs: &NuCoefficients<T>) -> Result<[PiCandidate<T>; 4]> {
    let sc = coeffs.sqrt_c()?;
    let sab = coeffs.sqrt_cab()?;
    let (k_plus, k_minus) = coeffs.k_roots()?;
    let half = T::lit(0.5);
    // the root is ±(√c − (√c ∓ √(c+a−b))s) for k±
    let make =
        |branch, k, inner: T, outer: T| PiCandidate { branch, k, constant: outer * sc, slope: -half - outer * inner };
    Ok([
        make(PiBranch::PlusOuterPlusK, k_plus, sc - sab, T::one()),
        make(PiBranch::MinusOuterPlusK, k_plus, sc - sab, -T::one()),
        make(PiBranch::PlusOuterMinusK, k_minus, sc + sab, T::one()),
        make(PiBranch::MinusOuterMinusK, k_minus, sc + sab, -T::one()),
    ])
}

/// Keeps the candidates with `τ' < 0` and returns the preferred one.
pub fn select_branch<T: Real>(coeffs: &NuCoefficients<T>, candidates: &[PiCandidate<T>]) -> Result<NuParameters<T>> {
    PiBranch::PREFERENCE
        .iter()
        .find_map(|&branch| candidates.iter().find(|c| c.branch == branch && c.tau_slope() < T::zero()))
        .map(|pi| NuParameters { coefficients: *coeffs, k: pi.k, branch: pi.branch, pi: *pi })
        .ok_or(HulthenError::NoDecreasingTau)
}

/// Coefficients and selected branch for a trial `ε²`.
pub fn nu_parameters<T: Real>(spec: &PotentialSpec<T>, q: QuantumNumbers, epsilon_sq: T) -> Result<NuParameters<T>> {
    if !(epsilon_sq >= T::zero()) {
        return Err(HulthenError::InvalidParameter {
            name: "epsilon_sq",
            reason: format!("must be >= 0, got {epsilon_sq}"),
        });
    }
    let coeffs = NuCoefficients::new(spec, q, epsilon_sq);
    select_branch(&coeffs, &pi_candidates(&coeffs)?)
}

/// `ε² = [N/2 − α²/(2N)]² − l(l+1)C₀` with `N = n_r + l + 1`.
pub fn epsilon_sq_closed_form<T: Real>(q: QuantumNumbers, alpha_sq: T, c0: T) -> T {
    let n = T::from_u32(q.principal()).expect("principal number fits scalar");
    let inner = n / T::lit(2.0) - alpha_sq / (T::lit(2.0) * n);
    inner * inner - lambda::<T>(q.l) * c0
}

/// Signed exponent `α²/(2N) − N/2` that the quantization fixes for `√c`.
pub fn sqrt_c_closed_form<T: Real>(q: QuantumNumbers, alpha_sq: T) -> T {
    let n = T::from_u32(q.principal()).expect("principal number fits scalar");
    alpha_sq / (T::lit(2.0) * n) - n / T::lit(2.0)
}

/// LHS − RHS of the polynomial-degree quantization condition
/// `λ̄ = 2n_r(1 + √c + √(c+a−b)) + n_r(n_r − 1)`.
pub fn quantization_residual<T: Real>(spec: &PotentialSpec<T>, q: QuantumNumbers, epsilon_sq: T) -> Result<T> {
    let coeffs = NuCoefficients::new(spec, q, epsilon_sq);
    let sc = coeffs.sqrt_c()?;
    let sab = coeffs.sqrt_cab()?;
    let (_, k_minus) = coeffs.k_roots()?;
    let lhs = k_minus - (T::lit(0.5) + sc + sab);
    let n = T::from_u32(q.n_r).expect("radial number fits scalar");
    let rhs = T::lit(2.0) * n * (T::one() + sc + sab) + n * (n - T::one());
    Ok(lhs - rhs)
}

/// Closed-form energy; unbound states are flagged rather than rejected.
pub fn energy_nu<T: Real>(spec: &PotentialSpec<T>, q: QuantumNumbers) -> EnergyResult<T> {
    let alpha_sq = spec.alpha_sq();
    let epsilon_sq = epsilon_sq_closed_form(q, alpha_sq, spec.c0);
    let params = DimensionlessParams { alpha_sq, epsilon_sq };
    let energy = params.energy(spec);
    let sqrt_c = sqrt_c_closed_form(q, alpha_sq);
    let bound = energy < T::zero() && sqrt_c > T::zero();
    let quantization_residual = if bound { quantization_residual(spec, q, epsilon_sq).ok() } else { None };
    EnergyResult {
        state: q,
        energy,
        method: Method::Nu,
        bound,
        intermediates: Intermediates {
            alpha_sq,
            epsilon_sq,
            sqrt_c,
            k_exponent: T::from_u32(q.l + 1).expect("l fits scalar"),
            superpotential_a: None,
            superpotential_b: None,
            quantization_residual,
        },
    }
}

/// `C_{n_r}` making `∫₀^∞ |χ(r)|² dr = 1`, with `dr = −ds/(δs)`.
pub fn normalization_constant<T: Real>(spec: &PotentialSpec<T>, q: QuantumNumbers) -> Result<T> {
    let e = energy_nu(spec, q);
    if !e.bound {
        return Err(not_normalizable(q, &e));
    }
    Ok(normalization_from_exponents(spec.delta, q.n_r, e.intermediates.sqrt_c, e.intermediates.k_exponent))
}

fn normalization_from_exponents<T: Real>(delta: T, n_r: u32, sqrt_c: T, k: T) -> T {
    let n = T::from_u32(n_r).expect("radial number fits scalar");
    let lg = |x: T| ln_gamma(x).expect("gamma arguments are positive for bound states");
    let two = T::lit(2.0);
    let ln_sq =
        delta.ln() + lg(n + T::one()) + (two * sqrt_c).ln() + (n + k + sqrt_c).ln() + lg(two * (k + sqrt_c) + n)
            - (n + k).ln()
            - lg(n + two * sqrt_c + T::one())
            - lg(n + two * k);
    (ln_sq / two).exp()
}

fn not_normalizable<T: Real>(q: QuantumNumbers, e: &EnergyResult<T>) -> HulthenError {
    HulthenError::NotNormalizable {
        n_r: q.n_r,
        l: q.l,
        reason: format!("E = {}, sqrt(c) = {}; no normalizable eigenfunction", e.energy, e.intermediates.sqrt_c),
    }
}

/// Normalized eigenfunction `χ(s) = C s^{√c}(1−s)^K P_{n_r}^{(2√c, 2K−1)}(1−2s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialWavefunction<T> {
    pub spec: PotentialSpec<T>,
    pub q: QuantumNumbers,
    pub energy: T,
    pub sqrt_c: T,
    pub k_exponent: T,
    pub degree: u32,
    pub norm_const: T,
}

impl<T: Real> RadialWavefunction<T> {
    fn jacobi(&self) -> JacobiParams<T> {
        JacobiParams { n: self.degree, a: T::lit(2.0) * self.sqrt_c, b: T::lit(2.0) * self.k_exponent - T::one() }
    }

    fn eval(&self, s: T, one_minus_s: T) -> T {
        if s <= T::zero() || one_minus_s <= T::zero() {
            return T::zero();
        }
        let x = T::lit(2.0) * one_minus_s - T::one();
        self.norm_const * s.powf(self.sqrt_c) * one_minus_s.powf(self.k_exponent) * jacobi_poly(&self.jacobi(), x)
    }

    /// `χ` as a function of `s ∈ [0, 1]`.
    pub fn chi_s(&self, s: T) -> T {
        self.eval(s, T::one() - s)
    }

    /// The same function written through `₂F₁(−n_r, 2√c + 2K + n_r; 1 + 2√c; s)`.
    pub fn chi_s_hypergeometric(&self, s: T) -> Result<T> {
        if s <= T::zero() || s >= T::one() {
            return Ok(T::zero());
        }
        let n = T::from_u32(self.degree).expect("degree fits scalar");
        let two_sc = T::lit(2.0) * self.sqrt_c;
        let pref = (ln_gamma(n + two_sc + T::one())? - ln_gamma(n + T::one())? - ln_gamma(two_sc + T::one())?).exp();
        let f = hyp2f1_terminating(self.degree, two_sc + T::lit(2.0) * self.k_exponent + n, T::one() + two_sc, s)?;
        Ok(self.norm_const * s.powf(self.sqrt_c) * (T::one() - s).powf(self.k_exponent) * pref * f)
    }

    /// `χ(r)`; zero at `r = 0`.
    pub fn chi(&self, r: T) -> Result<T> {
        if r < T::zero() || !r.is_finite() {
            return Err(HulthenError::NonPositiveRadius(r.to_f64_lossy()));
        }
        let x = self.spec.delta * r;
        // s = e^{-δr}; 1 - s via expm1 keeps precision near the origin
        Ok(self.eval((-x).exp(), -(-x).exp_m1()))
    }

    /// `∫₀^∞ |χ(r)|² dr` by Gauss–Legendre panels out to `40/(δ min(√c, 1))`.
    pub fn norm_integral(&self) -> Result<Quadrature<T>> {
        let decay = self.sqrt_c.min(T::one());
        let r_max = T::lit(40.0) / (self.spec.delta * decay);
        let breaks = panel_breaks(r_max, 128);
        composite_quadrature(
            |r| {
                let v = self.chi(r).unwrap_or(T::zero());
                v * v
            },
            &breaks,
            20,
        )
    }

    /// `R(r) = χ(r)/r`.
    pub fn radial(&self, r: T) -> Result<T> {
        if !(r > T::zero()) {
            return Err(HulthenError::NonPositiveRadius(r.to_f64_lossy()));
        }
        Ok(self.chi(r)? / r)
    }
}

/// Builds the normalized eigenfunction of a bound state.
pub fn wavefunction<T: Real>(spec: &PotentialSpec<T>, q: QuantumNumbers) -> Result<RadialWavefunction<T>> {
    let e = energy_nu(spec, q);
    if !e.bound {
        return Err(not_normalizable(q, &e));
    }
    let sqrt_c = e.intermediates.sqrt_c;
    let k_exponent = e.intermediates.k_exponent;
    Ok(RadialWavefunction {
        spec: *spec,
        q,
        energy: e.energy,
        sqrt_c,
        k_exponent,
        degree: q.n_r,
        norm_const: normalization_from_exponents(spec.delta, q.n_r, sqrt_c, k_exponent),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn au(delta: f64, c0: f64) -> PotentialSpec<f64> {
        PotentialSpec::new(1.0, delta, 1.0, 1.0, c0).unwrap()
    }

    const P2: QuantumNumbers = QuantumNumbers::new(0, 1);

    #[test]
    fn coefficients_for_2p() {
        let spec = au(0.025, 0.0);
        let p = nu_parameters(&spec, P2, 361.0).unwrap();
        let c = p.coefficients;
        assert_relative_eq!(c.c, 361.0, max_relative = 1e-15);
        assert_relative_eq!(c.a, 441.25, max_relative = 1e-15);
        assert_relative_eq!(c.b, 800.0, max_relative = 1e-15);
        assert_relative_eq!(c.c + c.a - c.b, 2.25, max_relative = 1e-13);
        assert_relative_eq!(c.sqrt_cab().unwrap(), 1.5, max_relative = 1e-13);
        assert_relative_eq!(c.k_exponent().unwrap(), 2.0, max_relative = 1e-13);
        assert_eq!(p.branch, PiBranch::PlusOuterMinusK);
    }

    #[test]
    fn zero_parameter_case() {
        let spec = PotentialSpec { z: 1.0, delta: 1.0, mu: 1.0, hbar: 1.0, c0: 0.0 };
        let mut c = NuCoefficients::new(&spec, QuantumNumbers::new(0, 0), 0.0);
        c.a -= spec.alpha_sq();
        c.b -= spec.alpha_sq();
        assert_eq!((c.a, c.b, c.c), (0.25, 0.0, 0.0));
        assert_eq!(c.k_exponent().unwrap(), 1.0);
        let (kp, km) = c.k_roots().unwrap();
        assert_eq!(kp, km);
        assert_eq!(kp, c.b);
    }

    #[test]
    fn k_exponent_identity() {
        for l in 0..6 {
            for &eps in &[0.0, 0.3, 12.0, 361.0] {
                for &c0 in &[0.0, 1.0 / 12.0] {
                    let c = NuCoefficients::new(&au(0.07, c0), QuantumNumbers::new(2, l), eps);
                    assert!((c.k_exponent().unwrap() - (l as f64 + 1.0)).abs() < 1e-10);
                }
            }
        }
    }

    /// `σ̃` written directly from the transformed equation, independent of a, b, c.
    fn sigma_tilde(spec: &PotentialSpec<f64>, l: u32, eps: f64, s: f64) -> f64 {
        let lam = (l * (l + 1)) as f64;
        -eps * (1.0 - s).powi(2) - lam * (spec.c0 * (1.0 - s).powi(2) + s) + spec.alpha_sq() * s * (1.0 - s)
    }

    #[test]
    fn candidates_solve_the_defining_identity() {
        for (delta, c0, l, eps) in [(0.025, 0.0, 1, 361.0), (0.1, 1.0 / 12.0, 2, 3.7), (0.3, 0.0, 0, 0.4)] {
            let spec = au(delta, c0);
            let coeffs = NuCoefficients::new(&spec, QuantumNumbers::new(0, l), eps);
            for cand in pi_candidates(&coeffs).unwrap() {
                for i in 1..=9 {
                    let s = i as f64 / 10.0;
                    let sigma = s * (1.0 - s);
                    let rhs = (s / 2.0).powi(2) - sigma_tilde(&spec, l, eps, s) + cand.k * sigma;
                    let lhs = (cand.pi(s) + s / 2.0).powi(2);
                    assert!((lhs - rhs).abs() < 1e-9 * rhs.abs().max(1.0), "{:?} s={s}: {lhs} vs {rhs}", cand.branch);
                }
            }
        }
    }

    #[test]
    fn lower_branch_candidate_present_for_2p() {
        let coeffs = NuCoefficients::new(&au(0.025, 0.0), P2, 361.0);
        let cands = pi_candidates(&coeffs).unwrap();
        let (sc, sab) = (19.0, 1.5);
        let expected_k =
            (coeffs.b - 2.0 * coeffs.c) - 2.0 * (coeffs.c * coeffs.c + coeffs.c * (coeffs.a - coeffs.b)).sqrt();
        let found = cands.iter().find(|c| c.branch == PiBranch::PlusOuterMinusK).unwrap();
        assert_relative_eq!(found.k, expected_k, max_relative = 1e-13);
        assert_relative_eq!(found.constant, sc, max_relative = 1e-13);
        assert_relative_eq!(found.slope, -(0.5 + sc + sab), max_relative = 1e-13);
    }

    #[test]
    fn coincident_roots_when_c_vanishes() {
        let spec = PotentialSpec { z: 1.0, delta: 0.4, mu: 1.0, hbar: 1.0, c0: 0.0 };
        let coeffs = NuCoefficients::new(&spec, QuantumNumbers::new(0, 2), 0.0);
        let (kp, km) = coeffs.k_roots().unwrap();
        assert_eq!(kp, coeffs.b);
        assert_eq!(km, coeffs.b);
    }

    #[test]
    fn branch_selection_for_2p() {
        let coeffs = NuCoefficients::new(&au(0.025, 0.0), P2, 361.0);
        let cands = pi_candidates(&coeffs).unwrap();
        let sel = select_branch(&coeffs, &cands).unwrap();
        assert_relative_eq!(sel.pi.tau_slope(), -43.0, max_relative = 1e-13);
        assert_relative_eq!(sel.pi.slope, -0.5 - (19.0 + 1.5), max_relative = 1e-13);
        for c in cands.iter().filter(|c| matches!(c.branch, PiBranch::MinusOuterPlusK | PiBranch::MinusOuterMinusK)) {
            assert!(c.tau_slope() > 0.0, "{:?}", c.branch);
        }
        // τ(s) = 1 + 2√c − 2s(1 + √c + √(c+a−b))
        assert_relative_eq!(sel.pi.tau(0.3), 1.0 + 38.0 - 0.6 * 21.5, max_relative = 1e-13);
    }

    #[test]
    fn selection_fails_without_decreasing_tau() {
        let coeffs = NuCoefficients::new(&au(0.025, 0.0), P2, 361.0);
        let cands: Vec<_> = pi_candidates(&coeffs).unwrap().into_iter().filter(|c| c.tau_slope() > 0.0).collect();
        assert_eq!(select_branch(&coeffs, &cands), Err(HulthenError::NoDecreasingTau));
    }

    #[test]
    fn closed_form_epsilon() {
        assert_relative_eq!(epsilon_sq_closed_form(P2, 80.0, 0.0), 361.0, max_relative = 1e-15);
        assert_relative_eq!(epsilon_sq_closed_form(P2, 80.0, 1.0 / 12.0), 361.0 - 2.0 / 12.0, max_relative = 1e-15);
        let q = QuantumNumbers::new(1, 2);
        assert_eq!(epsilon_sq_closed_form(q, 16.0, 0.0), 0.0);
    }

    #[test]
    fn table_energies() {
        assert_relative_eq!(energy_nu(&au(0.025, 0.0), P2).energy, -0.112_812_5, max_relative = 1e-13);
        assert!((energy_nu(&au(0.025, 1.0 / 12.0), P2).energy + 0.112_760_4).abs() < 5e-8);
        let p3 = QuantumNumbers::new(1, 1);
        assert!((energy_nu(&au(0.05, 1.0 / 12.0), p3).energy + 0.033_159_72).abs() < 5e-9);
        // printed as -0.45000 in the published table
        assert_relative_eq!(energy_nu(&au(0.2, 0.0), P2).energy, -0.045, max_relative = 1e-13);
    }

    #[test]
    fn quantization_residual_vanishes_at_closed_form() {
        let spec = au(0.025, 0.0);
        let r = quantization_residual(&spec, P2, 361.0).unwrap();
        assert!(r.abs() < 1e-9, "{r}");
        let lo = quantization_residual(&spec, P2, 360.0).unwrap();
        let hi = quantization_residual(&spec, P2, 362.0).unwrap();
        assert!(lo.abs() > 1e-3 && hi.abs() > 1e-3);
        assert!(lo.signum() != hi.signum());
    }

    #[test]
    fn ground_state_residual_has_no_rhs() {
        let spec = au(0.05, 1.0 / 12.0);
        let eps = 17.3;
        let c = NuCoefficients::new(&spec, P2, eps);
        let lhs = c.b
            - 2.0 * c.c
            - 2.0 * (c.c * c.c + c.c * (c.a - c.b)).sqrt()
            - (0.5 + c.c.sqrt() + (c.c + c.a - c.b).sqrt());
        assert_relative_eq!(quantization_residual(&spec, P2, eps).unwrap(), lhs, max_relative = 1e-12);
    }

    #[test]
    fn quantization_sweep() {
        for delta in [0.025, 0.05, 0.075, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35] {
            for c0 in [0.0, 1.0 / 12.0] {
                let spec = au(delta, c0);
                for n_r in 0..=6 {
                    for l in 0..=5 {
                        let e = energy_nu(&spec, QuantumNumbers::new(n_r, l));
                        if let Some(res) = e.intermediates.quantization_residual {
                            assert!(res.abs() < 1e-9, "δ={delta} n_r={n_r} l={l}: {res}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn s_wave_ignores_c0() {
        let q = QuantumNumbers::new(1, 0);
        assert_eq!(energy_nu(&au(0.025, 0.0), q).energy, energy_nu(&au(0.025, 1.0 / 12.0), q).energy);
    }

    #[test]
    fn unbound_states_are_flagged() {
        // α² = 2/0.35 < N² = 9
        let e = energy_nu(&au(0.35, 1.0 / 12.0), QuantumNumbers::new(0, 2));
        assert!(!e.bound);
        assert!(e.intermediates.sqrt_c < 0.0);
        assert!(matches!(
            wavefunction(&au(0.35, 1.0 / 12.0), QuantumNumbers::new(0, 2)),
            Err(HulthenError::NotNormalizable { .. })
        ));
        // 4p at δ=0.1 without the shift sits just below threshold
        let e = energy_nu(&au(0.1, 0.0), QuantumNumbers::new(2, 1));
        assert!(e.bound);
        assert_relative_eq!(e.energy, -0.00125, max_relative = 1e-12);
    }

    #[test]
    fn normalization_reduces_at_zero_degree() {
        let spec = au(0.05, 1.0 / 12.0);
        let wf = wavefunction(&spec, P2).unwrap();
        let (sc, k, b) = (wf.sqrt_c, wf.k_exponent, 1.0 / spec.delta);
        let closed = (2.0 * sc * (k + sc) * crate::specfun::gamma_fn(2.0 * (k + sc)).unwrap()
            / (b * k * crate::specfun::gamma_fn(2.0 * sc + 1.0).unwrap() * crate::specfun::gamma_fn(2.0 * k).unwrap()))
        .sqrt();
        assert_relative_eq!(wf.norm_const, closed, max_relative = 1e-11);
    }

    #[test]
    fn normalization_scales_with_sqrt_delta() {
        // keep α² fixed so √c and K are unchanged
        let a = PotentialSpec::new(1.0, 0.05, 1.0, 1.0, 0.0).unwrap();
        let b = PotentialSpec::new(4.0, 0.2, 1.0, 1.0, 0.0).unwrap();
        let q = QuantumNumbers::new(2, 1);
        let ratio = normalization_constant(&b, q).unwrap() / normalization_constant(&a, q).unwrap();
        assert_relative_eq!(ratio, 2.0, max_relative = 1e-12);
    }

    #[test]
    fn wavefunction_shape() {
        let spec = au(0.025, 0.0);
        let wf = wavefunction(&spec, P2).unwrap();
        assert_eq!(wf.degree, 0);
        let s: f64 = 0.6;
        assert_relative_eq!(wf.chi_s(s), wf.norm_const * s.powf(19.0) * (1.0 - s).powi(2), max_relative = 1e-13);
        assert_eq!(wf.chi_s(0.0), 0.0);
        assert_eq!(wf.chi_s(1.0), 0.0);
        assert_eq!(wf.chi(0.0).unwrap(), 0.0);
        assert!(wf.chi(1e4).unwrap().abs() < 1e-300);
        assert!(wf.radial(0.0).is_err());
        let r = 3.0;
        assert_relative_eq!(wf.radial(r).unwrap(), wf.chi(r).unwrap() / r);
    }

    #[test]
    fn hypergeometric_form_matches_jacobi_form() {
        let spec = au(0.05, 1.0 / 12.0);
        for q in [QuantumNumbers::new(0, 1), QuantumNumbers::new(2, 1), QuantumNumbers::new(1, 2)] {
            let wf = wavefunction(&spec, q).unwrap();
            for i in 1..20 {
                let s = i as f64 / 20.0;
                let a = wf.chi_s(s);
                let b = wf.chi_s_hypergeometric(s).unwrap();
                assert!((a - b).abs() <= 1e-10 * a.abs().max(wf.norm_const * 1e-6), "{q} s={s}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn quadrature_confirms_normalization() {
        for (delta, q) in [(0.025, P2), (0.1, QuantumNumbers::new(2, 1)), (0.35, P2), (0.05, QuantumNumbers::new(0, 4))]
        {
            let wf = wavefunction(&au(delta, 1.0 / 12.0), q).unwrap();
            let norm = wf.norm_integral().unwrap();
            assert!((norm.value - 1.0).abs() < 1e-10, "{q} δ={delta}: {}", norm.value);
        }
    }
}
