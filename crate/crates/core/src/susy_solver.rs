//! Supersymmetric route.
//!
//! The superpotential `W(r) = −(ħ/√(2μ))·(A + B y)`, `y = e^{−δr}/(1−e^{−δr})`,
//! builds the partner pair `V± = W² ± (ħ/√(2μ))W'`. Matching `V₋` against the
//! approximated effective potential fixes `B = δ(l+1)` and
//! `A = B/2 − δ²α²/(2B)`. Shifting `B → B + δ` maps `V₊` onto `V₋` up to an
//! `r`-independent remainder, and summing the remainders climbs the tower.

use serde::{Deserialize, Serialize};

use crate::error::{HulthenError, Result};
use crate::model::{potential_effective, screened, PotentialMode, PotentialSpec, QuantumNumbers};
use crate::nu_solver::{EnergyResult, Intermediates, Method};
use crate::scalar::Real;
use crate::specfun::{composite_quadrature, Quadrature};

/// Coefficients of the superpotential for one orbital tower.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuperpotentialCoeffs<T> {
    pub a: T,
    pub b: T,
    pub l: u32,
    pub spec: PotentialSpec<T>,
}

impl<T: Real> SuperpotentialCoeffs<T> {
    /// Coefficients with `B` replaced by `b`; `A` follows from `2AB − B² = −δ²α²`.
    pub fn with_b(&self, b: T) -> Self {
        Self { a: a_from_b(&self.spec, b), b, ..*self }
    }

    /// Member `i` of the shape-invariant family, `B_i = B + iδ`.
    pub fn shifted(&self, i: u32) -> Self {
        let i = T::from_u32(i).expect("shift index fits scalar");
        self.with_b(self.b + i * self.spec.delta)
    }

    /// Residuals of the three coefficient-matching conditions:
    /// `A² − (δ²ε² + δ²C₀λ)` is left to the energy, so this returns
    /// `(2AB − δB − δ²λ + δ²α², B² − δB − δ²λ)`.
    pub fn matching_residuals(&self) -> (T, T) {
        let d = self.spec.delta;
        let lam = crate::model::lambda::<T>(self.l);
        let alpha_sq = self.spec.alpha_sq();
        let linear = T::lit(2.0) * self.a * self.b - d * self.b - d * d * lam + d * d * alpha_sq;
        let quadratic = self.b * self.b - d * self.b - d * d * lam;
        (linear, quadratic)
    }
}

fn a_from_b<T: Real>(spec: &PotentialSpec<T>, b: T) -> T {
    let d = spec.delta;
    b / T::lit(2.0) - d * d * spec.alpha_sq() / (T::lit(2.0) * b)
}

/// `B = δ(l+1)`, the positive root of `B² − δB = δ²l(l+1)`, and the matching `A`.
pub fn superpotential_coeffs<T: Real>(spec: &PotentialSpec<T>, l: u32) -> SuperpotentialCoeffs<T> {
    let b = spec.delta * T::from_u32(l + 1).expect("l fits scalar");
    SuperpotentialCoeffs { a: a_from_b(spec, b), b, l, spec: *spec }
}

fn check_radius<T: Real>(r: T) -> Result<()> {
    if r > T::zero() && r.is_finite() {
        Ok(())
    } else {
        Err(HulthenError::NonPositiveRadius(r.to_f64_lossy()))
    }
}

/// `W(r)`.
pub fn superpotential<T: Real>(coeffs: &SuperpotentialCoeffs<T>, r: T) -> Result<T> {
    check_radius(r)?;
    let y = screened(coeffs.spec.delta, r);
    Ok(-coeffs.spec.superpotential_scale() * (coeffs.a + coeffs.b * y))
}

/// `W'(r) = (ħ/√(2μ))·Bδ·e^{−δr}/(1−e^{−δr})²`.
pub fn superpotential_derivative<T: Real>(coeffs: &SuperpotentialCoeffs<T>, r: T) -> Result<T> {
    check_radius(r)?;
    let y = screened(coeffs.spec.delta, r);
    Ok(coeffs.spec.superpotential_scale() * coeffs.b * coeffs.spec.delta * y * (T::one() + y))
}

/// `W² − (ħ/√(2μ))W' − (Ṽ_eff − E₀)` at `r`, in energy units.
pub fn riccati_residual<T: Real>(
    coeffs: &SuperpotentialCoeffs<T>,
    spec: &PotentialSpec<T>,
    q: QuantumNumbers,
    e0: T,
    r: T,
) -> Result<T> {
    let w = superpotential(coeffs, r)?;
    let dw = superpotential_derivative(coeffs, r)?;
    let lhs = w * w - coeffs.spec.superpotential_scale() * dw;
    let v = potential_effective(spec, q, r, PotentialMode::Approximated)?;
    Ok(lhs - (v - e0))
}

fn energy_from_a<T: Real>(spec: &PotentialSpec<T>, l: u32, a: T) -> T {
    spec.centrifugal_shift(l) - spec.kinetic() * a * a
}

fn susy_result<T: Real>(
    spec: &PotentialSpec<T>,
    q: QuantumNumbers,
    energy: T,
    top: &SuperpotentialCoeffs<T>,
) -> EnergyResult<T> {
    let alpha_sq = spec.alpha_sq();
    // √c = −A_n/δ for the coefficients at the top of the chain
    let sqrt_c = -top.a / spec.delta;
    let epsilon_sq = -energy / (spec.kinetic() * spec.delta * spec.delta);
    EnergyResult {
        state: q,
        energy,
        method: Method::Susy,
        bound: energy < T::zero() && sqrt_c > T::zero(),
        intermediates: Intermediates {
            alpha_sq,
            epsilon_sq,
            sqrt_c,
            k_exponent: T::from_u32(q.l + 1).expect("l fits scalar"),
            superpotential_a: Some(top.a),
            superpotential_b: Some(top.b),
            quantization_residual: None,
        },
    }
}

/// Ground energy of the `l` tower, `E₀ = ħ²λC₀δ²/(2μ) − (ħ²/2μ)A²`.
pub fn ground_energy<T: Real>(spec: &PotentialSpec<T>, l: u32) -> EnergyResult<T> {
    let coeffs = superpotential_coeffs(spec, l);
    let e0 = energy_from_a(spec, l, coeffs.a);
    susy_result(spec, QuantumNumbers::new(0, l), e0, &coeffs)
}

/// Normalized `χ₀(r) = N₀ e^{Ar}(1 − e^{−δr})^{B/δ}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroundStateWavefunction<T> {
    pub coeffs: SuperpotentialCoeffs<T>,
    pub norm: T,
    pub quadrature: Quadrature<T>,
}

impl<T: Real> GroundStateWavefunction<T> {
    fn unnormalized(coeffs: &SuperpotentialCoeffs<T>, r: T) -> T {
        if r <= T::zero() {
            return T::zero();
        }
        let d = coeffs.spec.delta;
        (coeffs.a * r).exp() * (-(-d * r).exp_m1()).powf(coeffs.b / d)
    }

    pub fn value(&self, r: T) -> T {
        self.norm * Self::unnormalized(&self.coeffs, r)
    }
}

/// Panel breakpoints on `(0, r_max)` spaced for a state decaying like `e^{−κr}`.
pub(crate) fn panel_breaks<T: Real>(r_max: T, panels: usize) -> Vec<T> {
    // quadratic spacing puts more panels near the origin
    (0..=panels)
        .map(|i| {
            let t = T::from_usize_lossy(i) / T::from_usize_lossy(panels);
            r_max * t * t
        })
        .collect()
}

/// Ground state with `N₀` fixed by quadrature over `(0, 40/δ)`.
pub fn ground_wavefunction<T: Real>(coeffs: &SuperpotentialCoeffs<T>) -> Result<GroundStateWavefunction<T>> {
    if !(coeffs.a < T::zero()) || !(coeffs.b > T::zero()) {
        return Err(HulthenError::NotNormalizable {
            n_r: 0,
            l: coeffs.l,
            reason: format!("superpotential needs A < 0 and B > 0, got A = {}, B = {}", coeffs.a, coeffs.b),
        });
    }
    let r_max = T::lit(40.0) / coeffs.spec.delta;
    let c = *coeffs;
    let q = composite_quadrature(
        move |r| {
            let v = GroundStateWavefunction::unnormalized(&c, r);
            v * v
        },
        &panel_breaks(r_max, 64),
        16,
    )?;
    Ok(GroundStateWavefunction { coeffs: *coeffs, norm: q.value.sqrt().recip(), quadrature: q })
}

/// `V₊` and `V₋` built from one set of superpotential coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PartnerPotentialPair<T> {
    pub coeffs: SuperpotentialCoeffs<T>,
}

impl<T: Real> PartnerPotentialPair<T> {
    fn eval(&self, r: T, sign: T) -> Result<T> {
        check_radius(r)?;
        let c = &self.coeffs;
        let d = c.spec.delta;
        let y = screened(d, r);
        let two = T::lit(2.0);
        Ok(c.spec.kinetic()
            * (c.a * c.a + (two * c.a * c.b + sign * d * c.b) * y + (c.b * c.b + sign * d * c.b) * y * y))
    }

    /// `V₊ = W² + (ħ/√(2μ))W'`.
    pub fn v_plus(&self, r: T) -> Result<T> {
        self.eval(r, T::one())
    }

    /// `V₋ = W² − (ħ/√(2μ))W'`.
    pub fn v_minus(&self, r: T) -> Result<T> {
        self.eval(r, -T::one())
    }
}

pub fn partner_potentials<T: Real>(coeffs: &SuperpotentialCoeffs<T>) -> PartnerPotentialPair<T> {
    PartnerPotentialPair { coeffs: *coeffs }
}

/// `R(B_i) = V₊[B_{i−1}] − V₋[B_i] = (ħ²/2μ)(A_{i−1}² − A_i²)`.
pub fn shape_invariance_remainder<T: Real>(spec: &PotentialSpec<T>, l: u32, i: u32) -> Result<T> {
    if i == 0 {
        return Err(HulthenError::InvalidParameter { name: "i", reason: "remainder index starts at 1".into() });
    }
    let base = superpotential_coeffs(spec, l);
    let prev = base.shifted(i - 1);
    let cur = base.shifted(i);
    if cur.b == T::zero() || prev.b == T::zero() {
        return Err(HulthenError::InvalidParameter { name: "B", reason: "shifted coefficient vanished".into() });
    }
    Ok(spec.kinetic() * (prev.a * prev.a - cur.a * cur.a))
}

/// `E = E₀ + Σ_{i=1}^{n_r} R(B_i)`.
pub fn energy_susy<T: Real>(spec: &PotentialSpec<T>, q: QuantumNumbers) -> EnergyResult<T> {
    let base = superpotential_coeffs(spec, q.l);
    // E₀ and the remainders nearly cancel close to threshold, so the sum is
    // carried in units of ħ²/2μ with error-free squares and additions.
    let mut acc = CompensatedSum::new(spec.centrifugal_shift(q.l) / spec.kinetic());
    acc.add_square(base.a, -T::one());
    for i in 1..=q.n_r {
        let prev = base.shifted(i - 1).a;
        let cur = base.shifted(i).a;
        acc.add_square(prev, T::one());
        acc.add_square(cur, -T::one());
    }
    susy_result(spec, q, spec.kinetic() * acc.value(), &base.shifted(q.n_r))
}

struct CompensatedSum<T> {
    hi: T,
    lo: T,
}

impl<T: Real> CompensatedSum<T> {
    fn new(x: T) -> Self {
        Self { hi: x, lo: T::zero() }
    }

    fn add(&mut self, x: T) {
        let s = self.hi + x;
        let bb = s - self.hi;
        let err = (self.hi - (s - bb)) + (x - bb);
        self.hi = s;
        self.lo = self.lo + err;
    }

    /// Adds `sign·x²` without rounding the product.
    fn add_square(&mut self, x: T, sign: T) {
        let p = x * x;
        let e = x.mul_add(x, -p);
        self.add(sign * p);
        self.add(sign * e);
    }

    fn value(&self) -> T {
        self.hi + self.lo
    }
}

/// Size of the terms that cancel in `E = ħ²λC₀δ²/(2μ) − (ħ²/2μ)A_n²`.
///
/// Differences between energy routes below a few ulps of this are rounding,
/// which matters for states whose energy is close to zero.
pub fn cancellation_scale<T: Real>(spec: &PotentialSpec<T>, q: QuantumNumbers) -> T {
    let top = superpotential_coeffs(spec, q.l).shifted(q.n_r);
    spec.centrifugal_shift(q.l).abs() + spec.kinetic() * top.a * top.a
}

/// Closed form of the telescoped chain,
/// `ħ²λδ²C₀/(2μ) − (ħ²/2μ)[Nδ/2 − μZe²/(ħ²N)]²`.
pub fn energy_closed_form<T: Real>(spec: &PotentialSpec<T>, q: QuantumNumbers) -> T {
    let n = T::from_u32(q.principal()).expect("principal number fits scalar");
    let inner = n * spec.delta / T::lit(2.0) - spec.mu * spec.z / (spec.hbar * spec.hbar * n);
    spec.centrifugal_shift(q.l) - spec.kinetic() * inner * inner
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nu_solver::energy_nu;
    use approx::assert_relative_eq;

    fn au(delta: f64, c0: f64) -> PotentialSpec<f64> {
        PotentialSpec::new(1.0, delta, 1.0, 1.0, c0).unwrap()
    }

    #[test]
    fn coefficients_for_2p() {
        let c = superpotential_coeffs(&au(0.025, 0.0), 1);
        assert_relative_eq!(c.b, 0.05, max_relative = 1e-15);
        assert_relative_eq!(c.a, -0.475, max_relative = 1e-14);
        let (lin, quad) = c.matching_residuals();
        assert!(lin.abs() < 1e-12 && quad.abs() < 1e-12);
    }

    #[test]
    fn s_wave_coefficients() {
        let c = superpotential_coeffs(&au(0.05, 0.0), 0);
        assert_relative_eq!(c.b, 0.05);
        assert_eq!(c.b * c.b - 0.05 * c.b, 0.0);
    }

    #[test]
    fn quadratic_identity_for_all_l() {
        for l in 0..10 {
            for delta in [0.01, 0.1, 0.7] {
                let c = superpotential_coeffs(&au(delta, 0.0), l);
                let (lin, quad) = c.matching_residuals();
                assert!(quad.abs() < 1e-12, "l={l} δ={delta}");
                assert!(lin.abs() < 1e-12, "l={l} δ={delta}");
            }
        }
    }

    #[test]
    fn superpotential_values() {
        let c = superpotential_coeffs(&au(0.025, 0.0), 1);
        // mpmath
        assert_relative_eq!(superpotential(&c, 40.0).unwrap(), 0.315_299_737_267_614_26, max_relative = 1e-13);
        let far = superpotential(&c, 5000.0).unwrap();
        assert_relative_eq!(far, 0.475 / 2f64.sqrt(), max_relative = 1e-14);
        let near = superpotential(&c, 1e-6).unwrap();
        assert!(near < -1e4);
        assert!(superpotential(&c, 0.0).is_err());
    }

    #[test]
    fn riccati_holds_at_ground_energy() {
        for (delta, c0, l) in [(0.025, 0.0, 1), (0.025, 1.0 / 12.0, 1), (0.1, 1.0 / 12.0, 3), (0.05, 1.0 / 12.0, 0)] {
            let spec = au(delta, c0);
            let c = superpotential_coeffs(&spec, l);
            let e0 = ground_energy(&spec, l).energy;
            for k in [0.5, 1.0, 5.0] {
                let r = k / delta;
                let res = riccati_residual(&c, &spec, QuantumNumbers::new(0, l), e0, r).unwrap();
                assert!(res.abs() < 1e-10, "δ={delta} l={l} r={r}: {res}");
            }
        }
    }

    #[test]
    fn riccati_detects_perturbed_a() {
        let spec = au(0.025, 0.0);
        let mut c = superpotential_coeffs(&spec, 1);
        let e0 = ground_energy(&spec, 1).energy;
        c.a += 1e-3;
        let res = riccati_residual(&c, &spec, QuantumNumbers::new(0, 1), e0, 40.0).unwrap();
        assert!(res.abs() > 1e-4 && res.abs() < 1e-2, "{res}");
    }

    #[test]
    fn ground_energies() {
        assert_relative_eq!(ground_energy(&au(0.025, 0.0), 1).energy, -0.112_812_5, max_relative = 1e-13);
        assert!((ground_energy(&au(0.025, 1.0 / 12.0), 1).energy + 0.112_760_4).abs() < 5e-8);
        for l in 0..6 {
            let spec = au(0.075, 1.0 / 12.0);
            let susy = ground_energy(&spec, l).energy;
            let nu = energy_nu(&spec, QuantumNumbers::new(0, l)).energy;
            assert_relative_eq!(susy, nu, max_relative = 1e-12);
        }
    }

    #[test]
    fn ground_wavefunction_is_normalized_and_nodeless() {
        let spec = au(0.025, 0.0);
        let c = superpotential_coeffs(&spec, 1);
        let gs = ground_wavefunction(&c).unwrap();
        assert!(gs.quadrature.converged);
        assert_eq!(gs.value(0.0), 0.0);
        assert!(gs.value(5000.0).abs() < 1e-300);
        let nodes = (1..4000).map(|i| gs.value(i as f64 * 0.1)).collect::<Vec<_>>();
        assert!(nodes.iter().all(|&v| v >= 0.0));
    }

    #[test]
    fn ground_wavefunction_needs_negative_a() {
        let spec = au(0.6, 0.0);
        let c = superpotential_coeffs(&spec, 1);
        assert!(c.a >= 0.0);
        assert!(ground_wavefunction(&c).is_err());
    }

    #[test]
    fn partner_potentials_definition() {
        let spec = au(0.05, 0.0);
        let c = superpotential_coeffs(&spec, 1);
        let pair = partner_potentials(&c);
        let r = 1.0 / spec.delta;
        let diff = pair.v_plus(r).unwrap() - pair.v_minus(r).unwrap();
        let dw = superpotential_derivative(&c, r).unwrap();
        assert_relative_eq!(diff, 2.0 * spec.superpotential_scale() * dw, max_relative = 1e-13);
        let w = superpotential(&c, r).unwrap();
        assert_relative_eq!(pair.v_minus(r).unwrap(), w * w - spec.superpotential_scale() * dw, max_relative = 1e-13);
        // mpmath at r = 10
        assert_relative_eq!(pair.v_plus(10.0).unwrap(), 0.053_558_031_540_905_814, max_relative = 1e-13);
        assert_relative_eq!(pair.v_minus(10.0).unwrap(), 0.033_969_541_095_741_995, max_relative = 1e-13);
        assert!(pair.v_plus(0.0).is_err());
    }

    #[test]
    fn first_remainder() {
        let spec = au(0.025, 0.0);
        let r1 = shape_invariance_remainder(&spec, 1, 1).unwrap();
        let a1: f64 = 0.0375 - 0.05 / 0.15;
        assert_relative_eq!(r1, 0.5 * (0.475f64.powi(2) - a1 * a1), max_relative = 1e-13);
        assert_relative_eq!(r1, 0.069_053_819_444_444_44, max_relative = 1e-13);
        assert!(shape_invariance_remainder(&spec, 1, 0).is_err());
    }

    #[test]
    fn symmetric_squares_give_zero_remainder() {
        // A₁ = −A₀ when α² = B B₁/δ²
        let (delta, l) = (0.1, 1);
        let b = delta * 2.0;
        let b1 = b + delta;
        let alpha_sq = b * b1 / (delta * delta);
        let spec = PotentialSpec::new(alpha_sq * delta / 2.0, delta, 1.0, 1.0, 0.0).unwrap();
        let r: f64 = shape_invariance_remainder(&spec, l, 1).unwrap();
        assert!(r.abs() < 1e-14, "{r}");
    }

    #[test]
    fn remainder_is_constant_in_r() {
        let spec = au(0.05, 1.0 / 12.0);
        let base = superpotential_coeffs(&spec, 2);
        for i in 1..=5 {
            let plus = partner_potentials(&base.shifted(i - 1));
            let minus = partner_potentials(&base.shifted(i));
            let rem = shape_invariance_remainder(&spec, 2, i).unwrap();
            for k in 1..=50 {
                let r = 0.2 * k as f64 / spec.delta;
                let d = plus.v_plus(r).unwrap() - minus.v_minus(r).unwrap();
                assert!((d - rem).abs() < 1e-10, "i={i} r={r}: {d} vs {rem}");
            }
        }
    }

    #[test]
    fn excited_energies() {
        let p3 = QuantumNumbers::new(1, 1);
        assert!((energy_susy(&au(0.025, 0.0), p3).energy + 0.043_758_68).abs() < 5e-9);
        // closed form value; the published table prints -0.03315972 here,
        // which is the 3p value (l = 1 shift)
        let d3 = QuantumNumbers::new(0, 2);
        let e = energy_susy(&au(0.05, 1.0 / 12.0), d3).energy;
        let want = 0.05f64.powi(2) * 6.0 / 24.0 - 0.5 * (0.075f64 - 1.0 / 3.0).powi(2);
        assert_relative_eq!(e, want, max_relative = 1e-12);
    }

    #[test]
    fn chain_equals_closed_form_and_nu() {
        for delta in [0.025, 0.05, 0.075, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35] {
            for c0 in [0.0, 1.0 / 12.0] {
                let spec = au(delta, c0);
                for n_r in 0..=10 {
                    for l in 0..=5 {
                        let q = QuantumNumbers::new(n_r, l);
                        let susy = energy_susy(&spec, q).energy;
                        let closed = energy_closed_form(&spec, q);
                        let nu = energy_nu(&spec, q).energy;
                        let tol = 1e-12 * closed.abs() + 8.0 * f64::EPSILON * cancellation_scale(&spec, q);
                        assert!((susy - closed).abs() <= tol, "{q} δ={delta} c0={c0}: {susy} {closed}");
                        assert!((nu - closed).abs() <= tol, "{q} δ={delta} c0={c0}: {nu} {closed}");
                    }
                }
            }
        }
    }

    #[test]
    fn annihilation_of_ground_state() {
        let spec = au(0.05, 1.0 / 12.0);
        let c = superpotential_coeffs(&spec, 2);
        let gs = ground_wavefunction(&c).unwrap();
        let h = 1e-3;
        for k in 1..40 {
            let r = 0.5 * k as f64;
            let d = (gs.value(r + h) - gs.value(r - h)) / (2.0 * h);
            let a_minus = spec.superpotential_scale() * d + superpotential(&c, r).unwrap() * gs.value(r);
            assert!(a_minus.abs() < 1e-6, "r={r}: {a_minus}");
        }
    }
}
