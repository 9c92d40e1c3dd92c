//! Physical parameters, quantum numbers and the three radial potentials.
//!
//! Energies are in the unit system fixed by `hbar`, `mu` and the charge
//! product `Z e²` (folded into `z`). The default is atomic units,
//! `hbar = mu = e = 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{HulthenError, Result};
use crate::scalar::Real;

/// Centrifugal constant of the improved approximation scheme.
pub const IMPROVED_C0: f64 = 1.0 / 12.0;

/// Physical parameters of the Hulthén problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec<T> {
    /// Charge strength `Z e²`.
    pub z: T,
    /// Screening parameter (inverse length).
    pub delta: T,
    /// Reduced mass.
    pub mu: T,
    pub hbar: T,
    /// Constant of the centrifugal approximation; `0` is Greene–Aldrich.
    pub c0: T,
}

impl<T: Real> PotentialSpec<T> {
    pub fn new(z: T, delta: T, mu: T, hbar: T, c0: T) -> Result<Self> {
        let spec = Self { z, delta, mu, hbar, c0 };
        spec.validate()?;
        Ok(spec)
    }

    /// Atomic units with the improved centrifugal constant `C₀ = 1/12`.
    pub fn atomic(z: T, delta: T) -> Result<Self> {
        Self::new(z, delta, T::one(), T::one(), T::lit(IMPROVED_C0))
    }

    pub fn with_c0(self, c0: T) -> Result<Self> {
        Self::new(self.z, self.delta, self.mu, self.hbar, c0)
    }

    pub fn with_delta(self, delta: T) -> Result<Self> {
        Self::new(self.z, delta, self.mu, self.hbar, self.c0)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &'static str, v: T| {
            if v.is_finite() && v > T::zero() {
                Ok(())
            } else {
                Err(HulthenError::InvalidParameter { name, reason: format!("must be finite and > 0, got {v}") })
            }
        };
        positive("z", self.z)?;
        positive("delta", self.delta)?;
        positive("mu", self.mu)?;
        positive("hbar", self.hbar)?;
        if !(self.c0.is_finite() && self.c0 >= T::zero()) {
            return Err(HulthenError::InvalidParameter {
                name: "c0",
                reason: format!("must be finite and >= 0, got {}", self.c0),
            });
        }
        Ok(())
    }

    /// `ħ² / 2μ`, the kinetic prefactor.
    pub fn kinetic(&self) -> T {
        self.hbar * self.hbar / (T::lit(2.0) * self.mu)
    }

    /// `ħ / √(2μ)`, the superpotential prefactor.
    pub fn superpotential_scale(&self) -> T {
        self.hbar / (T::lit(2.0) * self.mu).sqrt()
    }

    /// `α² = 2μZe² / (ħ²δ)`.
    pub fn alpha_sq(&self) -> T {
        T::lit(2.0) * self.mu * self.z / (self.hbar * self.hbar * self.delta)
    }

    /// Constant energy shift `ħ²δ²l(l+1)C₀ / 2μ` of the approximated centrifugal term.
    pub fn centrifugal_shift(&self, l: u32) -> T {
        self.kinetic() * self.delta * self.delta * lambda::<T>(l) * self.c0
    }
}

/// Radial and orbital quantum numbers of a bound state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub n_r: u32,
    pub l: u32,
}

const ORBITAL_LETTERS: &[char] = &['s', 'p', 'd', 'f', 'g', 'h', 'i', 'k', 'l', 'm', 'n', 'o', 'q', 'r', 't', 'u'];

impl QuantumNumbers {
    pub const fn new(n_r: u32, l: u32) -> Self {
        Self { n_r, l }
    }

    /// Principal label `N = n_r + l + 1`.
    pub const fn principal(&self) -> u32 {
        self.n_r + self.l + 1
    }

    /// Builds the state from a principal number and orbital quantum number,
    /// rejecting `N < l + 1`.
    pub fn from_principal(principal: u32, l: u32) -> Result<Self> {
        if principal < l + 1 {
            return Err(HulthenError::InvalidLabel {
                label: format!("N={principal}, l={l}"),
                reason: format!("n_r = N - l - 1 = {} must be >= 0", principal as i64 - l as i64 - 1),
            });
        }
        Ok(Self::new(principal - l - 1, l))
    }

    /// Spectroscopic label such as `2p`, or `None` when `l` has no letter.
    pub fn label(&self) -> Option<String> {
        ORBITAL_LETTERS.get(self.l as usize).map(|c| format!("{}{c}", self.principal()))
    }
}

impl fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label() {
            Some(label) => f.write_str(&label),
            None => write!(f, "{},{}", self.n_r, self.l),
        }
    }
}

/// Parses either a spectroscopic label (`3d`) or an explicit `n_r,l` pair.
impl FromStr for QuantumNumbers {
    type Err = HulthenError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let invalid = |reason: String| HulthenError::InvalidLabel { label: s.to_string(), reason };
        if let Some((n_r, l)) = s.split_once(',') {
            let n_r = n_r.trim().parse::<u32>().map_err(|e| invalid(format!("n_r: {e}")))?;
            let l = l.trim().parse::<u32>().map_err(|e| invalid(format!("l: {e}")))?;
            return Ok(Self::new(n_r, l));
        }
        let split = s.find(|c: char| !c.is_ascii_digit()).ok_or_else(|| invalid("missing orbital letter".into()))?;
        let (digits, letter) = s.split_at(split);
        let principal = digits.parse::<u32>().map_err(|_| invalid("missing principal number".into()))?;
        let mut chars = letter.chars();
        let letter = chars.next().map(|c| c.to_ascii_lowercase());
        if chars.next().is_some() {
            return Err(invalid("expected a single orbital letter".into()));
        }
        let l = letter
            .and_then(|c| ORBITAL_LETTERS.iter().position(|&x| x == c))
            .ok_or_else(|| invalid("unknown orbital letter".into()))? as u32;
        if principal < l + 1 {
            return Err(invalid(format!("n_r = N - l - 1 = {} must be >= 0", principal as i64 - l as i64 - 1)));
        }
        Ok(Self::new(principal - l - 1, l))
    }
}

/// `λ = l(l+1)`.
pub fn lambda<T: Real>(l: u32) -> T {
    let l = T::from_u32(l).expect("orbital quantum number fits scalar");
    l * (l + T::one())
}

/// Which centrifugal term enters the effective potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PotentialMode {
    /// `ħ²l(l+1)/(2μr²)`.
    Exact,
    /// `ħ²l(l+1)δ²/(2μ)·[C₀ + e^{−δr}/(1−e^{−δr})²]`.
    Approximated,
}

impl PotentialMode {
    pub fn name(&self) -> &'static str {
        match self {
            PotentialMode::Exact => "exact",
            PotentialMode::Approximated => "approximated",
        }
    }
}

/// Dimensionless combinations used by both analytic routes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionlessParams<T> {
    /// `α² = 2μZe²/(ħ²δ)`.
    pub alpha_sq: T,
    /// `ε² = −2μE/(ħ²δ²)`; negative for `E > 0`.
    pub epsilon_sq: T,
}

impl<T: Real> DimensionlessParams<T> {
    /// Inverse of [`dimensionless`]: `E = −ħ²δ²ε²/(2μ)`.
    pub fn energy(&self, spec: &PotentialSpec<T>) -> T {
        -spec.kinetic() * spec.delta * spec.delta * self.epsilon_sq
    }
}

pub fn dimensionless<T: Real>(spec: &PotentialSpec<T>, energy: T) -> DimensionlessParams<T> {
    DimensionlessParams { alpha_sq: spec.alpha_sq(), epsilon_sq: -energy / (spec.kinetic() * spec.delta * spec.delta) }
}

/// `e^{−δr}/(1−e^{−δr}) = 1/(e^{δr} − 1)`, evaluated without cancellation.
pub(crate) fn screened<T: Real>(delta: T, r: T) -> T {
    (delta * r).exp_m1().recip()
}

fn check_radius<T: Real>(r: T) -> Result<()> {
    if r > T::zero() && r.is_finite() {
        Ok(())
    } else {
        Err(HulthenError::NonPositiveRadius(r.to_f64_lossy()))
    }
}

/// Bare Hulthén potential `−Ze²δ e^{−δr}/(1−e^{−δr})`.
pub fn potential_hulthen<T: Real>(spec: &PotentialSpec<T>, r: T) -> Result<T> {
    check_radius(r)?;
    Ok(-spec.z * spec.delta * screened(spec.delta, r))
}

/// Hulthén potential plus the exact or approximated centrifugal term.
pub fn potential_effective<T: Real>(
    spec: &PotentialSpec<T>,
    q: QuantumNumbers,
    r: T,
    mode: PotentialMode,
) -> Result<T> {
    let bare = potential_hulthen(spec, r)?;
    let lam = lambda::<T>(q.l);
    let centrifugal = match mode {
        PotentialMode::Exact => spec.kinetic() * lam / (r * r),
        PotentialMode::Approximated => {
            // s/(1-s)² = y(1+y) with y = s/(1-s)
            let y = screened(spec.delta, r);
            spec.kinetic() * lam * spec.delta * spec.delta * (spec.c0 + y * (T::one() + y))
        }
    };
    Ok(bare + centrifugal)
}
