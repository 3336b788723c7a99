//! Bernstein and Bernstein-S basis polynomials.
//!
//! For degree `j` the `j + 1` polynomials
//!
//! ```text
//! b(j, α, x)    = C(j, α) x^α (1 - x)^(j - α),              x ∈ [0, 1]
//! b_s(j, α, x)  = s^-j C(j, α) x^α (s - x)^(j - α),         x ∈ [0, s]
//! ```
//!
//! sum to one at every abscissa, which is what makes them usable as a
//! credit split over `j + 1` coauthors. Below degree [`LOG_SPACE_DEGREE`] the
//! binomial coefficient is built by the multiplicative recurrence; at and
//! above it every term is formed in log space so that hyperauthored articles
//! (thousands of authors) neither overflow nor underflow prematurely.

use std::f64::consts::PI;

use statrs::function::factorial::ln_binomial;

use crate::error::{Error, Result};

/// Degree at which evaluation switches to log space.
pub const LOG_SPACE_DEGREE: usize = 500;

/// One evaluated basis ordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisPoint {
    pub degree: usize,
    pub index: usize,
    pub x: f64,
    pub s: f64,
    pub value: f64,
}

impl BasisPoint {
    pub fn evaluate(degree: usize, index: usize, x: f64, s: f64) -> Result<Self> {
        let value = bernstein_s(degree, index, x, s)?;
        Ok(BasisPoint {
            degree,
            index,
            x,
            s,
            value,
        })
    }
}

/// A single abscissa of a [`BasisCurve`] with all `j + 1` ordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSample {
    pub x: f64,
    pub values: Vec<f64>,
}

/// Sampled basis polynomials over `[0, s]`, used for plotting.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisCurve {
    pub degree: usize,
    pub s: f64,
    pub samples: Vec<CurveSample>,
    /// Envelope ordinates aligned with `samples`; `None` where the envelope
    /// is singular (the two boundary abscissas, or degree zero).
    pub envelope: Option<Vec<Option<f64>>>,
}

impl BasisCurve {
    pub fn author_count(&self) -> usize {
        self.degree + 1
    }
}

fn check_index(j: usize, alpha: usize) -> Result<()> {
    if alpha > j {
        return Err(Error::Domain(format!(
            "basis index {alpha} outside [0, {j}]"
        )));
    }
    Ok(())
}

fn check_stretch(s: f64) -> Result<()> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::Domain(format!(
            "stretching parameter s = {s} must be positive and finite"
        )));
    }
    Ok(())
}

fn check_abscissa(x: f64, s: f64) -> Result<()> {
    if !(0.0..=s).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [0, {s}]")));
    }
    Ok(())
}

/// Unit-interval coordinates `(χ, 1 - χ)` of `x` on `[0, s]`.
///
/// The complement is formed as `(s - x) / s` rather than `1 - x / s`, so
/// `s = 1` reproduces the plain Bernstein inputs bit for bit.
fn unit_coordinates(x: f64, s: f64) -> (f64, f64) {
    if s == 1.0 {
        (x, 1.0 - x)
    } else {
        (x / s, (s - x) / s)
    }
}

/// `C(j, α)` by the multiplicative recurrence `C(j, k) = C(j, k-1) (j-k+1) / k`.
fn binomial_direct(j: usize, alpha: usize) -> f64 {
    let mut c = 1.0_f64;
    for k in 1..=alpha {
        c = c * (j - k + 1) as f64 / k as f64;
    }
    c
}

fn ln_complement(p: f64, q: f64) -> f64 {
    // ln(1 - p) is more accurate through ln_1p while p is the small side
    if p < 0.5 {
        (-p).ln_1p()
    } else {
        q.ln()
    }
}

/// Core kernel on unit coordinates. `p + q = 1` up to rounding.
fn kernel(j: usize, alpha: usize, p: f64, q: f64, binom: impl Fn() -> f64) -> f64 {
    // 0^0 = 1: the boundaries give the degenerate partitions exactly.
    if p == 0.0 {
        return if alpha == 0 { 1.0 } else { 0.0 };
    }
    if q == 0.0 {
        return if alpha == j { 1.0 } else { 0.0 };
    }
    if j < LOG_SPACE_DEGREE {
        let v = binom() * p.powi(alpha as i32) * q.powi((j - alpha) as i32);
        v.clamp(0.0, 1.0)
    } else {
        let ln = ln_binomial(j as u64, alpha as u64)
            + alpha as f64 * p.ln()
            + (j - alpha) as f64 * ln_complement(p, q);
        ln.exp().min(1.0)
    }
}

/// Bernstein basis polynomial `C(j, α) x^α (1 - x)^(j - α)` on `[0, 1]`.
pub fn bernstein(j: usize, alpha: usize, x: f64) -> Result<f64> {
    check_index(j, alpha)?;
    check_abscissa(x, 1.0)?;
    Ok(kernel(j, alpha, x, 1.0 - x, || binomial_direct(j, alpha)))
}

/// Bernstein-S basis polynomial `s^-j C(j, α) x^α (s - x)^(j - α)` on `[0, s]`.
///
/// Equals `bernstein(j, α, x / s)`; with `s = 1` it is the plain Bernstein
/// polynomial exactly.
pub fn bernstein_s(j: usize, alpha: usize, x: f64, s: f64) -> Result<f64> {
    check_index(j, alpha)?;
    check_stretch(s)?;
    check_abscissa(x, s)?;
    let (p, q) = unit_coordinates(x, s);
    Ok(kernel(j, alpha, p, q, || binomial_direct(j, alpha)))
}

/// All `j + 1` Bernstein-S ordinates at `x`, indexed by `α`.
///
/// Element `α` is bitwise identical to `bernstein_s(j, α, x, s)`.
pub fn basis_values(j: usize, x: f64, s: f64) -> Result<Vec<f64>> {
    check_stretch(s)?;
    check_abscissa(x, s)?;
    let (p, q) = unit_coordinates(x, s);
    let mut out = Vec::with_capacity(j + 1);
    let mut c = 1.0_f64;
    for alpha in 0..=j {
        if alpha > 0 && j < LOG_SPACE_DEGREE {
            c = c * (j - alpha + 1) as f64 / alpha as f64;
        }
        out.push(kernel(j, alpha, p, q, || c));
    }
    Ok(out)
}

/// Envelope `1 / sqrt(2π j χ (1 - χ))` through the local maxima of the
/// degree-`j` basis, evaluated at `χ = x / s`.
///
/// An asymptotic curve: it bounds the largest ordinate in the interior of the
/// domain and at the centre, but is exceeded close to the boundaries where the
/// basis approaches the degenerate partition. Used for diagnostics only.
pub fn envelope(j: usize, x: f64, s: f64) -> Result<f64> {
    if j == 0 {
        return Err(Error::Domain("envelope needs degree j >= 1".into()));
    }
    check_stretch(s)?;
    let chi = x / s;
    if !(chi > 0.0 && chi < 1.0) {
        return Err(Error::Domain(format!(
            "envelope is singular at x / s = {chi}; needs 0 < x / s < 1"
        )));
    }
    Ok(1.0 / (2.0 * PI * j as f64 * chi * (1.0 - chi)).sqrt())
}

/// Samples all `j + 1` basis polynomials on a uniform grid of `n_samples`
/// points spanning `[0, s]` inclusive.
pub fn sample_curves(j: usize, s: f64, n_samples: usize, include_envelope: bool) -> Result<BasisCurve> {
    check_stretch(s)?;
    if n_samples < 2 {
        return Err(Error::Domain(format!(
            "need at least 2 samples, got {n_samples}"
        )));
    }
    let last = n_samples - 1;
    let mut samples = Vec::with_capacity(n_samples);
    let mut env = include_envelope.then(|| Vec::with_capacity(n_samples));
    for i in 0..n_samples {
        let x = if i == last { s } else { s * i as f64 / last as f64 };
        samples.push(CurveSample {
            x,
            values: basis_values(j, x, s)?,
        });
        if let Some(env) = env.as_mut() {
            let interior = i != 0 && i != last && j > 0;
            env.push(if interior { Some(envelope(j, x, s)?) } else { None });
        }
    }
    Ok(BasisCurve {
        degree: j,
        s,
        samples,
        envelope: env,
    })
}
