//! Analytic test signals: finite sums of sinusoids.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `amplitude · sin(2π · frequency · t + phase)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SinusoidTerm {
    pub amplitude: f64,
    pub frequency: f64,
    #[serde(default)]
    pub phase: f64,
}

impl SinusoidTerm {
    pub fn new(amplitude: f64, frequency: f64, phase: f64) -> Result<Self> {
        if !(amplitude.is_finite() && frequency.is_finite() && phase.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "sinusoid term needs finite values, got {amplitude}:{frequency}:{phase}"
            )));
        }
        Ok(Self {
            amplitude,
            frequency,
            phase,
        })
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.amplitude * (2.0 * PI * self.frequency * t + self.phase).sin()
    }
}

/// Parses `amp:freq[:phase]`.
impl FromStr for SinusoidTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if !(2..=3).contains(&parts.len()) {
            return Err(Error::InvalidArgument(format!(
                "expected AMP:FREQ[:PHASE], got {s:?}"
            )));
        }
        let num = |p: &str| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidArgument(format!("bad number {p:?} in {s:?}")))
        };
        let phase = parts.get(2).map(|p| num(p)).transpose()?.unwrap_or(0.0);
        SinusoidTerm::new(num(parts[0])?, num(parts[1])?, phase)
    }
}

impl fmt::Display for SinusoidTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.amplitude, self.frequency, self.phase)
    }
}

/// A finite sum of sinusoids; the empty sum is the zero signal.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SinusoidSum {
    terms: Vec<SinusoidTerm>,
}

impl SinusoidSum {
    pub fn new(terms: Vec<SinusoidTerm>) -> Self {
        Self { terms }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `3·sin(2π·5·t) + 4·sin(2π·7·t)`, the two-tone reference signal.
    pub fn two_tone() -> Self {
        Self::new(vec![
            SinusoidTerm {
                amplitude: 3.0,
                frequency: 5.0,
                phase: 0.0,
            },
            SinusoidTerm {
                amplitude: 4.0,
                frequency: 7.0,
                phase: 0.0,
            },
        ])
    }

    pub fn terms(&self) -> &[SinusoidTerm] {
        &self.terms
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.terms.iter().map(|term| term.eval(t)).sum()
    }
}

impl FromIterator<SinusoidTerm> for SinusoidSum {
    fn from_iter<I: IntoIterator<Item = SinusoidTerm>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}
