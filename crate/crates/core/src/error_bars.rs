//! Confidence intervals for sampled motif counts.
//!
//! A motif tally `count_i` over `k` trials is binomial. Given the observed
//! frequency `alpha = count_i / k`, the Chernoff bound `exp(-D(alpha, p)·k)`
//! is unimodal in `p` with its maximum 1 at `p = alpha`. Its two level-`δ`
//! crossings `p_l ≤ alpha ≤ p_u` form the interval; scaling by the sampler's
//! `K_i` turns it into an interval on the motif count.

use serde::{Deserialize, Serialize};

use crate::error::{MotifError, Result};
use crate::estimate::{Estimate, SamplerKind};
use crate::motif::{Motif, CONVERSION};

const MAX_BISECTION_STEPS: usize = 200;
const P_TOLERANCE: f64 = 1e-14;

/// Bernoulli KL divergence `D(a, b)` with the `0·ln 0 = 0` convention.
/// Infinite when `b` is 0 or 1 and differs from `a`.
pub fn kl_divergence(a: f64, b: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    if b <= 0.0 || b >= 1.0 {
        return f64::INFINITY;
    }
    let left = if a == 0.0 { 0.0 } else { a * ((a - b) / b).ln_1p() };
    let right = if a == 1.0 { 0.0 } else { (1.0 - a) * ((b - a) / (1.0 - b)).ln_1p() };
    (left + right).max(0.0)
}

/// `r` successes in `k` trials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinomialObservation {
    pub trials: u64,
    pub successes: u64,
}

impl BinomialObservation {
    pub fn new(trials: u64, successes: u64) -> Result<Self> {
        if trials == 0 {
            return Err(MotifError::Usage("binomial observation needs k >= 1".into()));
        }
        if successes > trials {
            return Err(MotifError::Usage(format!("{successes} successes out of {trials} trials")));
        }
        Ok(BinomialObservation { trials, successes })
    }

    pub fn alpha(&self) -> f64 {
        self.successes as f64 / self.trials as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConfidenceInterval {
    pub lower: f64,
    pub upper: f64,
    pub delta: f64,
}

fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta < 1.0 {
        Ok(())
    } else {
        Err(MotifError::Usage(format!("delta must lie in (0, 1), got {delta}")))
    }
}

/// Solves `D(alpha, p)·k = ln(1/δ)` on each side of `alpha`.
pub fn invert_bounds(obs: BinomialObservation, delta: f64) -> Result<ConfidenceInterval> {
    check_delta(delta)?;
    let k = obs.trials as f64;
    let alpha = obs.alpha();
    let log_delta = delta.ln();
    let target = -log_delta / k;

    let lower = if obs.successes == 0 {
        0.0
    } else if obs.successes == obs.trials {
        // D(1, p) = -ln p
        (log_delta / k).exp()
    } else {
        // D(alpha, ·) decreases on [0, alpha]; keep lo on the D > target side
        let (mut lo, mut hi) = (0.0, alpha);
        for _ in 0..MAX_BISECTION_STEPS {
            if hi - lo <= P_TOLERANCE {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if kl_divergence(alpha, mid) > target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };

    let upper = if obs.successes == obs.trials {
        1.0
    } else if obs.successes == 0 {
        // D(0, p) = -ln(1 - p)
        -(log_delta / k).exp_m1()
    } else {
        let (mut lo, mut hi) = (alpha, 1.0);
        for _ in 0..MAX_BISECTION_STEPS {
            if hi - lo <= P_TOLERANCE {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if kl_divergence(alpha, mid) > target {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    };

    Ok(ConfidenceInterval { lower, upper, delta })
}

/// Interval on one motif's count estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MotifInterval {
    pub motif: Motif,
    pub sampler: SamplerKind,
    pub samples: u64,
    pub normalizer: u128,
    pub estimate: f64,
    pub lower: f64,
    pub upper: f64,
    pub delta: f64,
}

impl MotifInterval {
    /// Larger of the two distances from the estimate to an endpoint.
    pub fn max_deviation(&self) -> f64 {
        (self.upper - self.estimate).max(self.estimate - self.lower)
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// Half-width relative to the estimate; `None` when the estimate is 0.
    pub fn relative_half_width(&self) -> Option<f64> {
        (self.estimate != 0.0).then(|| 0.5 * self.width() / self.estimate.abs())
    }
}

/// Scales the binomial interval for `count_i / k` by the sampler's `K_i`.
pub fn interval_for_motif(est: &Estimate, motif: Motif, delta: f64) -> Result<MotifInterval> {
    let scale = est.scale(motif).ok_or_else(|| {
        MotifError::Usage(format!("{:?} sampler has no direct estimate for {}", est.sampler, motif.name()))
    })?;
    let obs = BinomialObservation::new(est.samples, est.count(motif))?;
    let ci = if est.normalizer <= 1 {
        // at most one possible outcome per trial: the frequency is exact
        check_delta(delta)?;
        ConfidenceInterval { lower: obs.alpha(), upper: obs.alpha(), delta }
    } else {
        invert_bounds(obs, delta)?
    };
    Ok(MotifInterval {
        motif,
        sampler: est.sampler,
        samples: est.samples,
        normalizer: est.normalizer,
        estimate: est.value(motif).unwrap_or(0.0),
        lower: ci.lower * scale,
        upper: ci.upper * scale,
        delta,
    })
}

/// Interval on the derived 3-star estimate: the deviations of the
/// tailed-triangle, chordal 4-cycle and 4-clique intervals are added with
/// the weights from the first row of the conversion matrix.
pub fn interval_for_c1(est: &Estimate, parts: [&MotifInterval; 3]) -> Result<MotifInterval> {
    if est.sampler != SamplerKind::Basic {
        return Err(MotifError::Usage("3-star intervals need a basic-sampler estimate".into()));
    }
    let expected = [Motif::TailedTriangle, Motif::ChordalFourCycle, Motif::FourClique];
    let mut spread = 0.0;
    for (part, motif) in parts.iter().zip(expected) {
        if part.motif != motif
            || part.sampler != est.sampler
            || part.samples != est.samples
            || part.normalizer != est.normalizer
        {
            return Err(MotifError::Usage(format!(
                "interval for {} does not come from this basic-sampler run",
                motif.name()
            )));
        }
        spread += CONVERSION[0][motif.slot()] as f64 * part.max_deviation();
    }
    let delta = parts[0].delta;
    let estimate = est
        .value(Motif::ThreeStar)
        .ok_or_else(|| MotifError::Usage("estimate has no 3-star value".into()))?;
    Ok(MotifInterval {
        motif: Motif::ThreeStar,
        sampler: est.sampler,
        samples: est.samples,
        normalizer: est.normalizer,
        estimate,
        // clamp at zero, but never above a (negative) point estimate
        lower: (estimate - spread).max(estimate.min(0.0)),
        upper: estimate + spread,
        delta,
    })
}

/// Intervals for every motif the estimate covers, in motif order.
pub fn intervals(est: &Estimate, delta: f64) -> Result<Vec<MotifInterval>> {
    let mut out = Vec::new();
    for m in est.motifs() {
        if m == Motif::ThreeStar {
            continue;
        }
        out.push(interval_for_motif(est, m, delta)?);
    }
    if est.value(Motif::ThreeStar).is_some() {
        let find = |m: Motif| out.iter().find(|i| i.motif == m).copied().expect("component interval");
        let parts = [find(Motif::TailedTriangle), find(Motif::ChordalFourCycle), find(Motif::FourClique)];
        let c1 = interval_for_c1(est, [&parts[0], &parts[1], &parts[2]])?;
        out.insert(0, c1);
    }
    Ok(out)
}
