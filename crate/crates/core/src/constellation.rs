//! Discrete transmit alphabets: M-PSK and square M-QAM constellations with
//! unit average power, plus nearest-point decisions and decision-cell tests.

use num_complex::Complex64;
use rand::Rng;

use crate::{Error, Result};

/// Family of a constellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstellationKind {
    Psk,
    Qam,
}

/// A finite set of complex transmit symbols, normalized to zero mean and
/// unit average power.
///
/// Points are stored in a fixed canonical order: PSK points are
/// `exp(j*2*pi*i/M)` for increasing `i`; QAM points enumerate the scaled
/// integer grid row-major with the real level increasing first.
#[derive(Debug, Clone, PartialEq)]
pub struct Constellation {
    kind: ConstellationKind,
    m: usize,
    points: Vec<Complex64>,
    e_avg: f64,
}

impl Constellation {
    /// M-PSK with points uniformly spaced on the unit circle. Requires
    /// `m >= 4` and `m` a power of two (BPSK is out of scope here).
    pub fn psk(m: usize) -> Result<Self> {
        if m < 4 || !m.is_power_of_two() {
            return Err(Error::Config(format!(
                "PSK symbol count must be a power of two >= 4, got {m}"
            )));
        }
        let points = (0..m)
            .map(|i| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * i as f64 / m as f64))
            .collect();
        Ok(Self {
            kind: ConstellationKind::Psk,
            m,
            points,
            e_avg: 1.0,
        })
    }

    /// Square M-QAM on the integer grid scaled by `1/sqrt(E_avg)` with
    /// `E_avg = 2(M-1)/3`, which gives unit average power. Requires
    /// `m = 4^k` for some `k >= 1`.
    pub fn qam(m: usize) -> Result<Self> {
        let is_square_qam = m >= 4 && m.is_power_of_two() && m.trailing_zeros() % 2 == 0;
        if !is_square_qam {
            return Err(Error::Config(format!(
                "QAM symbol count must be 4^k (square constellation), got {m}"
            )));
        }
        let side = (m as f64).sqrt().round() as usize;
        let e_avg = 2.0 * (m as f64 - 1.0) / 3.0;
        let scale = 1.0 / e_avg.sqrt();
        let level = |i: usize| (2.0 * i as f64 - (side as f64 - 1.0)) * scale;
        let mut points = Vec::with_capacity(m);
        for ia in 0..side {
            for ib in 0..side {
                points.push(Complex64::new(level(ia), level(ib)));
            }
        }
        Ok(Self {
            kind: ConstellationKind::Qam,
            m,
            points,
            e_avg,
        })
    }

    /// Parse a constellation name of the form `psk<M>` or `qam<M>`
    /// (e.g. `"psk16"`, `"qam64"`).
    pub fn from_name(name: &str) -> Result<Self> {
        let parse = |digits: &str| -> Result<usize> {
            digits.parse().map_err(|_| {
                Error::Config(format!(
                    "bad constellation '{name}'; expected psk4, psk8, psk16, qam16 or qam64"
                ))
            })
        };
        if let Some(d) = name.strip_prefix("psk") {
            Self::psk(parse(d)?)
        } else if let Some(d) = name.strip_prefix("qam") {
            Self::qam(parse(d)?)
        } else {
            Err(Error::Config(format!(
                "bad constellation '{name}'; expected psk4, psk8, psk16, qam16 or qam64"
            )))
        }
    }

    pub fn kind(&self) -> ConstellationKind {
        self.kind
    }

    /// Number of symbols M.
    pub fn symbol_count(&self) -> usize {
        self.m
    }

    /// Average power of the unnormalized QAM grid (1 for PSK).
    pub fn e_avg(&self) -> f64 {
        self.e_avg
    }

    /// The constellation points in canonical order.
    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    /// For QAM, the distinct per-axis amplitude levels in increasing order;
    /// for PSK a single entry `[1.0]` (the common modulus).
    pub(crate) fn pam_levels(&self) -> Vec<f64> {
        match self.kind {
            ConstellationKind::Psk => vec![1.0],
            ConstellationKind::Qam => {
                let side = (self.m as f64).sqrt().round() as usize;
                let scale = 1.0 / self.e_avg.sqrt();
                (0..side)
                    .map(|i| (2.0 * i as f64 - (side as f64 - 1.0)) * scale)
                    .collect()
            }
        }
    }

    /// Draw `n` i.i.d. uniform symbols. `n` must be at least 1.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Vec<Complex64> {
        assert!(n >= 1, "sample size must be at least 1");
        (0..n)
            .map(|_| self.points[rng.random_range(0..self.m)])
            .collect()
    }

    /// Index of the nearest constellation point to `z`. Ties are broken by
    /// the lowest canonical index.
    pub fn hard_decide_index(&self, z: Complex64) -> Result<usize> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::Input(format!("non-finite decision input {z}")));
        }
        let mut best = 0usize;
        let mut best_d = f64::INFINITY;
        for (i, p) in self.points.iter().enumerate() {
            let d = (z - p).norm_sqr();
            if d < best_d {
                best_d = d;
                best = i;
            }
        }
        Ok(best)
    }

    /// The nearest constellation point to `z` (lowest index wins ties).
    pub fn hard_decide(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.points[self.hard_decide_index(z)?])
    }

    /// Whether `z` lies strictly inside the decision cell of the symbol `x`:
    /// `|z - x| < |z - a|` for every other point `a`. Cell boundaries belong
    /// to no cell, so a boundary `z` returns `false` for every `x`.
    pub fn in_decision_cell(&self, z: Complex64, x: Complex64) -> Result<bool> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::Input(format!("non-finite decision input {z}")));
        }
        let Some(ix) = self.points.iter().position(|p| *p == x) else {
            return Err(Error::Input(format!("{x} is not a constellation point")));
        };
        let dx = (z - self.points[ix]).norm_sqr();
        Ok(self
            .points
            .iter()
            .enumerate()
            .all(|(i, a)| i == ix || dx < (z - a).norm_sqr()))
    }
}
