//! Special functions for the analytic eigenfunctions: gamma, Jacobi
//! polynomials, the terminating Gauss series `₂F₁(−n, b; c; x)` and
//! Gauss–Legendre quadrature.

use serde::{Deserialize, Serialize};

use crate::error::{HulthenError, Result};
use crate::scalar::Real;

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_nonpositive_integer<T: Real>(x: T) -> bool {
    x <= T::zero() && x == x.floor()
}

fn lanczos_sum<T: Real>(x: T) -> T {
    LANCZOS_COEFFS[1..]
        .iter()
        .enumerate()
        .fold(T::lit(LANCZOS_COEFFS[0]), |acc, (i, &c)| acc + T::lit(c) / (x + T::from_usize_lossy(i + 1)))
}

/// Γ(x) for real `x` away from the poles.
///
/// Integer arguments up to 171 use the exact factorial product.
pub fn gamma_fn<T: Real>(x: T) -> Result<T> {
    if x.is_nan() || is_nonpositive_integer(x) {
        return Err(HulthenError::GammaPole(x.to_f64_lossy()));
    }
    if x == x.floor() && x <= T::lit(171.0) {
        let n = x.to_usize().expect("small positive integer");
        return Ok((1..n).fold(T::one(), |acc, k| acc * T::from_usize_lossy(k)));
    }
    if x < T::lit(0.5) {
        let pi = T::PI();
        return Ok(pi / ((pi * x).sin() * gamma_fn(T::one() - x)?));
    }
    let xm = x - T::one();
    let w = xm + T::lit(LANCZOS_G + 0.5);
    // w^(x-1/2) split in two halves so it does not overflow before e^{-w}
    let half = w.powf((xm + T::lit(0.5)) / T::lit(2.0));
    Ok((T::lit(2.0) * T::PI()).sqrt() * half * (-w).exp() * half * lanczos_sum(xm))
}

/// ln Γ(x) for `x > 0`.
pub fn ln_gamma<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) {
        return Err(HulthenError::GammaPole(x.to_f64_lossy()));
    }
    if x < T::lit(0.5) {
        // Γ(x) = Γ(x+1)/x keeps the argument inside the Lanczos range.
        return Ok(ln_gamma(x + T::one())? - x.ln());
    }
    let xm = x - T::one();
    let w = xm + T::lit(LANCZOS_G + 0.5);
    Ok(T::lit(0.5) * (T::lit(2.0) * T::PI()).ln() + (xm + T::lit(0.5)) * w.ln() - w + lanczos_sum(xm).ln())
}

/// Degree and exponents of a Jacobi polynomial `P_n^{(a,b)}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiParams<T> {
    pub n: u32,
    pub a: T,
    pub b: T,
}

impl<T: Real> JacobiParams<T> {
    pub fn new(n: u32, a: T, b: T) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b)] {
            if !(v > -T::one()) || !v.is_finite() {
                return Err(HulthenError::InvalidParameter {
                    name,
                    reason: format!("Jacobi exponent must exceed -1, got {v}"),
                });
            }
        }
        Ok(Self { n, a, b })
    }
}

/// `P_n^{(a,b)}(x)` by the three-term recurrence in `n`.
pub fn jacobi_poly<T: Real>(p: &JacobiParams<T>, x: T) -> T {
    let (a, b) = (p.a, p.b);
    let one = T::one();
    let two = T::lit(2.0);
    if p.n == 0 {
        return one;
    }
    let mut prev = one;
    let mut cur = (a + one) + (a + b + two) * (x - one) / two;
    for k in 2..=p.n {
        let k = T::from_u32(k).expect("degree fits scalar");
        let s = two * k + a + b;
        let c1 = two * k * (k + a + b) * (s - two);
        let c2 = (s - one) * (s * (s - two) * x + a * a - b * b);
        let c3 = two * (k + a - one) * (k + b - one) * s;
        let next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    cur
}

/// `₂F₁(−n, b; c; x)` as a finite sum of `n + 1` terms.
///
/// For `x > 1/2` the sum is taken in `1 − x` through
/// `₂F₁(−n, b; c; x) = (c−b)_n/(c)_n ₂F₁(−n, b; b−c−n+1; 1−x)`,
/// which avoids the cancellation of the alternating series near `x = 1`.
pub fn hyp2f1_terminating<T: Real>(n: u32, b: T, c: T, x: T) -> Result<T> {
    if is_nonpositive_integer(c) {
        return Err(HulthenError::HypergeometricPole(c.to_f64_lossy()));
    }
    let nf = T::from_u32(n).expect("degree fits scalar");
    let reflected = b - c - nf + T::one();
    if x > T::lit(0.5) && !is_nonpositive_integer(reflected) {
        let mut factor = T::one();
        for k in 0..n {
            let k = T::from_u32(k).expect("index fits scalar");
            factor = factor * (c - b + k) / (c + k);
        }
        return Ok(factor * hyp2f1_series(n, b, reflected, T::one() - x));
    }
    Ok(hyp2f1_series(n, b, c, x))
}

fn hyp2f1_series<T: Real>(n: u32, b: T, c: T, x: T) -> T {
    let neg_n = -T::from_u32(n).expect("degree fits scalar");
    let mut term = T::one();
    let mut sum = T::one();
    for k in 0..n {
        let k = T::from_u32(k).expect("index fits scalar");
        term = term * (neg_n + k) * (b + k) / ((c + k) * (k + T::one())) * x;
        sum = sum + term;
    }
    sum
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre<T: Real>(n: usize) -> (Vec<T>, Vec<T>) {
    assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let nf = T::from_usize_lossy(n);
    let one = T::one();
    let tol = T::epsilon() * T::lit(4.0);
    for i in 0..n.div_ceil(2) {
        let mut x = (T::PI() * (T::from_usize_lossy(i) + T::lit(0.75)) / (nf + T::lit(0.5))).cos();
        let mut dp = T::one();
        for _ in 0..100 {
            // Legendre recurrence for P_n(x) and P_{n-1}(x)
            let (mut p0, mut p1) = (one, x);
            for k in 2..=n {
                let kf = T::from_usize_lossy(k);
                let p2 = ((T::lit(2.0) * kf - one) * x * p1 - (kf - one) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { x } else { p1 };
            let pn1 = if n == 1 { one } else { p0 };
            dp = nf * (x * pn - pn1) / (x * x - one);
            let dx = pn / dp;
            x = x - dx;
            if dx.abs() <= tol {
                break;
            }
        }
        let w = T::lit(2.0) / ((one - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = T::zero();
    }
    (nodes, weights)
}

fn gauss_legendre_fixed<T: Real, F: Fn(T) -> T>(f: &F, lo: T, hi: T, n: usize) -> T {
    let (nodes, weights) = gauss_legendre::<T>(n);
    let half = (hi - lo) / T::lit(2.0);
    let mid = (hi + lo) / T::lit(2.0);
    nodes.iter().zip(&weights).fold(T::zero(), |acc, (&x, &w)| acc + w * f(mid + half * x)) * half
}

/// Outcome of an adaptive quadrature: the estimate and how well it converged.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quadrature<T> {
    pub value: T,
    /// Relative change between the last two node counts.
    pub achieved_tolerance: T,
    pub nodes: usize,
    pub converged: bool,
}

pub const QUADRATURE_REL_TOL: f64 = 1e-10;
pub const QUADRATURE_MAX_NODES: usize = 1 << 14;

/// Gauss–Legendre estimate of `∫_lo^hi f`, doubling the node count from
/// `nodes` until successive estimates agree to 10⁻¹⁰ relative or the
/// count reaches 2¹⁴.
pub fn quadrature<T: Real, F: Fn(T) -> T>(f: F, lo: T, hi: T, nodes: usize) -> Result<Quadrature<T>> {
    quadrature_with(f, lo, hi, nodes, T::lit(QUADRATURE_REL_TOL), QUADRATURE_MAX_NODES)
}

pub fn quadrature_with<T: Real, F: Fn(T) -> T>(
    f: F,
    lo: T,
    hi: T,
    nodes: usize,
    rel_tol: T,
    max_nodes: usize,
) -> Result<Quadrature<T>> {
    if !(lo < hi) {
        return Err(HulthenError::InvalidParameter {
            name: "quadrature interval",
            reason: format!("need lo < hi, got [{lo}, {hi}]"),
        });
    }
    if nodes < 2 {
        return Err(HulthenError::InvalidParameter {
            name: "nodes",
            reason: format!("need at least 2 nodes, got {nodes}"),
        });
    }
    let mut n = nodes.min(max_nodes);
    let mut prev = gauss_legendre_fixed(&f, lo, hi, n);
    loop {
        if n >= max_nodes {
            return Ok(Quadrature { value: prev, achieved_tolerance: T::infinity(), nodes: n, converged: false });
        }
        n = (2 * n).min(max_nodes);
        let cur = gauss_legendre_fixed(&f, lo, hi, n);
        let scale = cur.abs().max(T::min_positive_value());
        let rel = (cur - prev).abs() / scale;
        if rel < rel_tol || (cur - prev).abs() <= T::epsilon() * T::lit(16.0) * scale {
            return Ok(Quadrature { value: cur, achieved_tolerance: rel, nodes: n, converged: true });
        }
        if n >= max_nodes {
            return Ok(Quadrature { value: cur, achieved_tolerance: rel, nodes: n, converged: false });
        }
        prev = cur;
    }
}

/// Sums [`quadrature`] over consecutive panels `[breaks[i], breaks[i+1]]`.
pub fn composite_quadrature<T: Real, F: Fn(T) -> T>(f: F, breaks: &[T], nodes: usize) -> Result<Quadrature<T>> {
    let mut total = Quadrature { value: T::zero(), achieved_tolerance: T::zero(), nodes: 0, converged: true };
    for w in breaks.windows(2) {
        let q = quadrature(&f, w[0], w[1], nodes)?;
        total.value = total.value + q.value;
        total.achieved_tolerance = total.achieved_tolerance.max(q.achieved_tolerance);
        total.nodes += q.nodes;
        total.converged &= q.converged;
    }
    Ok(total)
}
