use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI};
use core::fmt;

use crate::grid::{SignalSpec, UniformGrid};
use crate::kernel::Angle;
use crate::ops::OperatorParams;
use crate::Error;

use super::{check, CheckConfig, IdentityId, IdentityReport, Tolerances};

/// Frequency grid used by the default suite: step `2π/32`, 257 points centred on zero.
///
/// It does not depend on the time grid, so residuals at different sample
/// counts are measured at the same frequencies.
pub fn default_ugrid() -> UniformGrid {
    let step = 2.0 * PI / 32.0;
    UniformGrid::new(-128.0 * step, step, 257).expect("static grid")
}

/// One `(f, g)` operand pair.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SignalPair {
    pub f: SignalSpec,
    pub g: SignalSpec,
}

/// Everything the identity suite iterates over.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct SuiteConfig {
    pub grid: UniformGrid,
    pub ugrid: UniformGrid,
    pub corpus: Vec<SignalPair>,
    pub angles: Vec<f64>,
    pub shifts: Vec<f64>,
    pub modulations: Vec<f64>,
    pub identities: Vec<IdentityId>,
    pub tolerances: Tolerances,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            grid: UniformGrid::centered(32.0, 2048).expect("static grid"),
            ugrid: default_ugrid(),
            corpus: default_corpus(),
            angles: vec![FRAC_PI_6, FRAC_PI_4, FRAC_PI_3, FRAC_PI_2 - 0.1, FRAC_PI_2],
            shifts: vec![0.0, 0.5],
            modulations: vec![0.0, 1.0],
            identities: IdentityId::ALL.to_vec(),
            tolerances: Tolerances::default(),
        }
    }
}

pub fn default_corpus() -> Vec<SignalPair> {
    use SignalSpec::*;
    vec![
        SignalPair {
            f: Gaussian {
                center: 0.0,
                width: 1.0,
                carrier: 0.0,
            },
            g: Gaussian {
                center: 0.5,
                width: 0.8,
                carrier: 1.0,
            },
        },
        SignalPair {
            f: Chirp {
                rate: 0.5,
                width: 1.0,
            },
            g: Gaussian {
                center: -0.5,
                width: 1.2,
                carrier: -1.0,
            },
        },
        SignalPair {
            f: Gaussian {
                center: 0.25,
                width: 0.9,
                carrier: 2.0,
            },
            g: Chirp {
                rate: -1.0,
                width: 1.0,
            },
        },
    ]
}

/// Twelve single signals for transform-level checks: Gaussians of varying
/// position, width and carrier, and chirps of both sweep directions.
pub fn signal_corpus() -> Vec<SignalSpec> {
    use SignalSpec::*;
    vec![
        Gaussian {
            center: 0.0,
            width: 1.0,
            carrier: 0.0,
        },
        Gaussian {
            center: 0.5,
            width: 0.8,
            carrier: 1.0,
        },
        Gaussian {
            center: -1.0,
            width: 1.5,
            carrier: -2.0,
        },
        Gaussian {
            center: 2.0,
            width: 0.5,
            carrier: 4.0,
        },
        Gaussian {
            center: -0.25,
            width: 2.0,
            carrier: 0.5,
        },
        Gaussian {
            center: 1.5,
            width: 1.2,
            carrier: -3.0,
        },
        Chirp {
            rate: 0.5,
            width: 1.0,
        },
        Chirp {
            rate: -1.0,
            width: 1.0,
        },
        Chirp {
            rate: 1.0,
            width: 2.0,
        },
        Chirp {
            rate: 2.0,
            width: 1.5,
        },
        Chirp {
            rate: -0.25,
            width: 0.7,
        },
        Chirp {
            rate: 3.0,
            width: 0.5,
        },
    ]
}

/// A check that could not be evaluated at all (as opposed to one that failed).
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteError {
    pub identity: Option<IdentityId>,
    pub phi: f64,
    pub d: f64,
    pub q: f64,
    pub source: Error,
}

impl fmt::Display for SuiteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.identity {
            Some(id) => write!(
                f,
                "{id} at phi={}, d={}, q={}: {}",
                self.phi, self.d, self.q, self.source
            ),
            None => write!(f, "phi={}: {}", self.phi, self.source),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SuiteError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.source)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub reports: Vec<IdentityReport>,
    /// True when every report passed (vacuously true for an empty run).
    pub pass: bool,
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome, SuiteError> {
    run_suite_with(cfg, |_| {})
}

/// Runs the suite in the order pair, angle, identity, delay, modulation,
/// calling `on_report` after each check.
///
/// Delay values are only swept for identities that involve a delay, and
/// likewise for modulation; the others run once with `d = q = 0`.
pub fn run_suite_with(
    cfg: &SuiteConfig,
    mut on_report: impl FnMut(&IdentityReport),
) -> Result<SuiteOutcome, SuiteError> {
    let check_cfg = CheckConfig {
        ugrid: cfg.ugrid,
        tolerances: cfg.tolerances,
    };
    let zero = [0.0];
    let mut reports = Vec::new();
    for pair in &cfg.corpus {
        let wrap = |e: Error| SuiteError {
            identity: None,
            phi: f64::NAN,
            d: 0.0,
            q: 0.0,
            source: e,
        };
        let f = pair.f.sample(&cfg.grid).map_err(wrap)?;
        let g = pair.g.sample(&cfg.grid).map_err(wrap)?;
        for &phi in &cfg.angles {
            let angle = Angle::new(phi).map_err(|e| SuiteError { phi, ..wrap(e) })?;
            for &id in &cfg.identities {
                let ds: &[f64] = if id.uses_delay() { &cfg.shifts } else { &zero };
                let qs: &[f64] = if id.uses_modulation() {
                    &cfg.modulations
                } else {
                    &zero
                };
                for &d in ds {
                    for &q in qs {
                        let report = check(id, &f, &g, &angle, OperatorParams { d, q }, &check_cfg)
                            .map_err(|source| SuiteError {
                                identity: Some(id),
                                phi,
                                d,
                                q,
                                source,
                            })?;
                        on_report(&report);
                        reports.push(report);
                    }
                }
            }
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    Ok(SuiteOutcome { reports, pass })
}

/// Largest best-form residual per identity.
pub fn worst_residual_by_identity(reports: &[IdentityReport]) -> BTreeMap<IdentityId, f64> {
    let mut out = BTreeMap::new();
    for r in reports {
        let e = out.entry(r.identity).or_insert(0.0_f64);
        *e = e.max(r.best_residual());
    }
    out
}
