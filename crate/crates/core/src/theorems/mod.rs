//! Spectral identities of the weighted operators, checked numerically.
//!
//! For each identity the left-hand side is the direct-quadrature transform of
//! the time-domain operator output ([`lhs`]) and the right-hand side is the
//! closed-form spectral expression ([`rhs`]). The two paths share only the
//! quadrature routine; the residual between them is the relative L2 error on
//! a frequency grid.
//!
//! Two correlation identities were originally stated in a form that does not
//! follow from the operator definitions: the combined delay/modulation rule on
//! the left operand (argument and phase signs), and the Fourier special case
//! of the delayed-left-operand rule (phase sign). For those, both the stated
//! form and the derivation-consistent form are evaluated; a report passes if
//! either meets tolerance and names which one did.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::grid::{absolute_l2_error, relative_l2_error, SampledSignal, Spectrum, UniformGrid};
use crate::kernel::Angle;
use crate::ops::OperatorParams;
use crate::transform::{smfrft_at, smfrft_direct};
use crate::{Error, Result, C64};

pub mod lhs;
pub mod rhs;
mod suite;

pub use suite::{
    default_corpus, default_ugrid, run_suite, run_suite_with, signal_corpus,
    worst_residual_by_identity, SignalPair, SuiteConfig, SuiteError, SuiteOutcome,
};

/// Which operand carries the delay/modulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Which right-hand side formula to evaluate where two candidates exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    /// As originally stated.
    Paper,
    /// Obtained by carrying the substitutions through consistently.
    Derived,
}

/// Every checked identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    Conv,
    ConvShiftL,
    ConvShiftR,
    ConvModL,
    ConvModR,
    ConvTfShiftL,
    ConvTfShiftR,
    Prod,
    Corr,
    CorrShiftL,
    CorrShiftR,
    CorrModL,
    CorrModR,
    CorrTfShiftL,
    CorrTfShiftR,
}

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::Conv,
        IdentityId::ConvShiftL,
        IdentityId::ConvShiftR,
        IdentityId::ConvModL,
        IdentityId::ConvModR,
        IdentityId::ConvTfShiftL,
        IdentityId::ConvTfShiftR,
        IdentityId::Prod,
        IdentityId::Corr,
        IdentityId::CorrShiftL,
        IdentityId::CorrShiftR,
        IdentityId::CorrModL,
        IdentityId::CorrModR,
        IdentityId::CorrTfShiftL,
        IdentityId::CorrTfShiftR,
    ];

    pub fn name(self) -> &'static str {
        use IdentityId::*;
        match self {
            Conv => "CONV",
            ConvShiftL => "CONV_SHIFT_L",
            ConvShiftR => "CONV_SHIFT_R",
            ConvModL => "CONV_MOD_L",
            ConvModR => "CONV_MOD_R",
            ConvTfShiftL => "CONV_TFSHIFT_L",
            ConvTfShiftR => "CONV_TFSHIFT_R",
            Prod => "PROD",
            Corr => "CORR",
            CorrShiftL => "CORR_SHIFT_L",
            CorrShiftR => "CORR_SHIFT_R",
            CorrModL => "CORR_MOD_L",
            CorrModR => "CORR_MOD_R",
            CorrTfShiftL => "CORR_TFSHIFT_L",
            CorrTfShiftR => "CORR_TFSHIFT_R",
        }
    }

    /// Human-readable statement of the identity (right-hand side as derived).
    pub fn formula(self) -> &'static str {
        use IdentityId::*;
        match self {
            Conv => "T{f ⊛ g}(u) = √(j2π) F(u) G(u)",
            ConvShiftL => "T{S_d f ⊛ g}(u) = √(j2π) e^{-jud + (j/2)d²cot} F(u - d cot) G(u)",
            ConvShiftR => "T{f ⊛ S_d g}(u) = √(j2π) e^{-jud + (j/2)d²cot} F(u) G(u - d cot)",
            ConvModL => "T{M_q f ⊛ g}(u) = √(j2π) F(u - q) G(u)",
            ConvModR => "T{f ⊛ M_q g}(u) = √(j2π) F(u) G(u - q)",
            ConvTfShiftL => {
                "T{M_q S_d f ⊛ g}(u) = √(j2π) e^{-j(u-q)d + (j/2)d²cot} F(u - q - d cot) G(u)"
            }
            ConvTfShiftR => {
                "T{f ⊛ M_q S_d g}(u) = √(j2π) e^{-j(u-q)d + (j/2)d²cot} F(u) G(u - q - d cot)"
            }
            Prod => "T{f g W_p}(u) = √(j/2π) (F * G)(u)",
            Corr => "T{f ⊙ g}(u) = √(j2π) F̄(-u) G(u)",
            CorrShiftL => "T{S_d f ⊙ g}(u) = √(j2π) e^{jud + (j/2)d²cot} F̄(-u - d cot) G(u)",
            CorrShiftR => "T{f ⊙ S_d g}(u) = √(j2π) e^{-jud + (j/2)d²cot} F̄(-u) G(u - d cot)",
            CorrModL => "T{M_q f ⊙ g}(u) = √(j2π) F̄(-u - q) G(u)",
            CorrModR => "T{f ⊙ M_q g}(u) = √(j2π) F̄(-u) G(u - q)",
            CorrTfShiftL => {
                "T{M_q S_d f ⊙ g}(u) = √(j2π) e^{j(u+q)d + (j/2)d²cot} F̄(-u - q - d cot) G(u)"
            }
            CorrTfShiftR => {
                "T{f ⊙ M_q S_d g}(u) = √(j2π) e^{-j(u-q)d + (j/2)d²cot} F̄(-u) G(u - q - d cot)"
            }
        }
    }

    pub fn uses_delay(self) -> bool {
        use IdentityId::*;
        matches!(
            self,
            ConvShiftL
                | ConvShiftR
                | ConvTfShiftL
                | ConvTfShiftR
                | CorrShiftL
                | CorrShiftR
                | CorrTfShiftL
                | CorrTfShiftR
        )
    }

    pub fn uses_modulation(self) -> bool {
        use IdentityId::*;
        matches!(
            self,
            ConvModL
                | ConvModR
                | ConvTfShiftL
                | ConvTfShiftR
                | CorrModL
                | CorrModR
                | CorrTfShiftL
                | CorrTfShiftR
        )
    }

    pub fn side(self) -> Side {
        use IdentityId::*;
        match self {
            ConvShiftR | ConvModR | ConvTfShiftR | CorrShiftR | CorrModR | CorrTfShiftR => {
                Side::Right
            }
            _ => Side::Left,
        }
    }

    /// Whether the stated and derived right-hand sides differ at this angle.
    pub fn has_competing_forms(self, angle: &Angle) -> bool {
        match self {
            IdentityId::CorrTfShiftL => true,
            IdentityId::CorrShiftL => angle.is_fourier(),
            _ => false,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownIdentity;

impl fmt::Display for UnknownIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown identity name")
    }
}

impl FromStr for IdentityId {
    type Err = UnknownIdentity;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or(UnknownIdentity)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for IdentityId {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> core::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for IdentityId {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> core::result::Result<Self, D::Error> {
        let s = <alloc::string::String as serde::Deserialize>::deserialize(deserializer)?;
        s.parse()
            .map_err(|_| serde::de::Error::custom(alloc::format!("unknown identity `{s}`")))
    }
}

/// Which right-hand side met tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum ChosenForm {
    Paper,
    Derived,
    Agree,
}

/// Acceptance bounds for identity residuals.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default))]
pub struct Tolerances {
    /// Relative L2 bound for angles with a nonzero chirp rate.
    pub fractional: f64,
    /// Relative L2 bound at the Fourier angle.
    pub fourier: f64,
    /// Relative L2 bound for the product identity (inner half of the grid).
    pub product: f64,
    /// Absolute bound when the reference side is identically zero.
    pub zero_absolute: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            fractional: 1e-4,
            fourier: 1e-6,
            product: 1e-3,
            zero_absolute: 1e-14,
        }
    }
}

impl Tolerances {
    /// Every bound set to `tol`.
    pub fn uniform(tol: f64) -> Self {
        Self {
            fractional: tol,
            fourier: tol,
            product: tol,
            zero_absolute: tol,
        }
    }

    fn relative_for(&self, id: IdentityId, angle: &Angle) -> f64 {
        if id == IdentityId::Prod {
            self.product
        } else if angle.is_fourier() {
            self.fourier
        } else {
            self.fractional
        }
    }
}

/// Frequency grid and bounds shared by the individual checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckConfig {
    pub ugrid: UniformGrid,
    pub tolerances: Tolerances,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            ugrid: default_ugrid(),
            tolerances: Tolerances::default(),
        }
    }
}

/// Residual record for one identity at one parameter combination.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub phi: f64,
    pub d: f64,
    pub q: f64,
    pub n: usize,
    pub residual_paper_form: f64,
    pub residual_derived_form: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub chosen_form: ChosenForm,
}

impl IdentityReport {
    /// The smaller of the two residuals.
    pub fn best_residual(&self) -> f64 {
        self.residual_paper_form.min(self.residual_derived_form)
    }
}

/// Both sides of one identity, kept for inspection.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentitySides {
    pub us: Vec<f64>,
    pub lhs: Vec<C64>,
    pub rhs_stated: Vec<C64>,
    pub rhs_derived: Vec<C64>,
}

/// Transform of `conj(f)` on `ugrid`: the `F̄` operand of the correlation rules.
///
/// For `f = f1 + j f2` this is `F1 - j F2`, which is *not* `conj(F(-u))`
/// unless the chirp rate vanishes.
pub fn conj_transform(f: &SampledSignal, angle: &Angle, ugrid: &UniformGrid) -> Spectrum {
    smfrft_direct(&f.conj(), ugrid, angle)
}

fn rows_for(id: IdentityId, ugrid: &UniformGrid) -> core::ops::Range<usize> {
    let m = ugrid.count();
    if id == IdentityId::Prod {
        // the spectral convolution is truncated to the grid; only its inner half is trusted
        m / 4..m - m / 4
    } else {
        0..m
    }
}

/// Evaluates both sides of `id` without judging them.
pub fn evaluate_sides(
    id: IdentityId,
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    params: OperatorParams,
    ugrid: &UniformGrid,
) -> Result<IdentitySides> {
    use IdentityId::*;
    f.same_grid(g)?;
    let rows = rows_for(id, ugrid);
    let us: Vec<f64> = rows.clone().map(|k| ugrid.point(k)).collect();

    let out = lhs::operator_output(id, f, g, angle, params)?;
    let lhs = smfrft_at(&out, &us, angle);

    let OperatorParams { d, q } = params;
    let side = id.side();
    let (rhs_stated, rhs_derived) = match id {
        Conv => (rhs::convolution(f, g, angle, &us), None),
        ConvShiftL | ConvShiftR => (rhs::conv_shift(f, g, angle, d, side, &us), None),
        ConvModL | ConvModR => (rhs::conv_modulation(f, g, angle, q, side, &us), None),
        ConvTfShiftL | ConvTfShiftR => (rhs::conv_tfshift(f, g, angle, d, q, side, &us), None),
        Prod => (rhs::product(f, g, angle, ugrid, rows), None),
        Corr => (rhs::correlation(f, g, angle, &us), None),
        CorrShiftL | CorrShiftR => {
            let stated = rhs::corr_shift(f, g, angle, d, side, Form::Paper, &us);
            let derived = id
                .has_competing_forms(angle)
                .then(|| rhs::corr_shift(f, g, angle, d, side, Form::Derived, &us));
            (stated, derived)
        }
        CorrModL | CorrModR => (rhs::corr_modulation(f, g, angle, q, side, &us), None),
        CorrTfShiftL | CorrTfShiftR => {
            let stated = rhs::corr_tfshift(f, g, angle, d, q, side, Form::Paper, &us);
            let derived = id
                .has_competing_forms(angle)
                .then(|| rhs::corr_tfshift(f, g, angle, d, q, side, Form::Derived, &us));
            (stated, derived)
        }
    };
    let rhs_derived = rhs_derived.unwrap_or_else(|| rhs_stated.clone());
    Ok(IdentitySides {
        us,
        lhs,
        rhs_stated,
        rhs_derived,
    })
}

/// Relative residual, or the absolute one when the reference is identically zero.
fn residual(lhs: &[C64], reference: &[C64]) -> Result<(f64, bool)> {
    match relative_l2_error(lhs, reference) {
        Ok(r) => Ok((r, false)),
        Err(Error::DegenerateReference) => Ok((absolute_l2_error(lhs, reference)?, true)),
        Err(e) => Err(e),
    }
}

/// Checks one identity at one parameter combination.
pub fn check(
    id: IdentityId,
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    params: OperatorParams,
    cfg: &CheckConfig,
) -> Result<IdentityReport> {
    let sides = evaluate_sides(id, f, g, angle, params, &cfg.ugrid)?;
    let (stated, stated_abs) = residual(&sides.lhs, &sides.rhs_stated)?;
    let (derived, derived_abs) = residual(&sides.lhs, &sides.rhs_derived)?;
    let tolerance = if stated_abs && derived_abs {
        cfg.tolerances.zero_absolute
    } else {
        cfg.tolerances.relative_for(id, angle)
    };
    let competing = id.has_competing_forms(angle);
    let (stated_ok, derived_ok) = (stated <= tolerance, derived <= tolerance);
    let chosen_form = if !competing || (stated_ok && derived_ok) {
        ChosenForm::Agree
    } else if stated_ok {
        ChosenForm::Paper
    } else if derived_ok || derived < stated {
        ChosenForm::Derived
    } else {
        ChosenForm::Paper
    };
    Ok(IdentityReport {
        identity: id,
        phi: angle.phi(),
        d: params.d,
        q: params.q,
        n: f.len(),
        residual_paper_form: stated,
        residual_derived_form: derived,
        tolerance,
        pass: stated_ok || derived_ok,
        chosen_form,
    })
}

pub fn check_convolution(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    cfg: &CheckConfig,
) -> Result<IdentityReport> {
    check(
        IdentityId::Conv,
        f,
        g,
        angle,
        OperatorParams::default(),
        cfg,
    )
}

pub fn check_conv_shift(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    d: f64,
    side: Side,
    cfg: &CheckConfig,
) -> Result<IdentityReport> {
    let id = match side {
        Side::Left => IdentityId::ConvShiftL,
        Side::Right => IdentityId::ConvShiftR,
    };
    check(id, f, g, angle, OperatorParams { d, q: 0.0 }, cfg)
}

pub fn check_conv_modulation(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    q: f64,
    side: Side,
    cfg: &CheckConfig,
) -> Result<IdentityReport> {
    let id = match side {
        Side::Left => IdentityId::ConvModL,
        Side::Right => IdentityId::ConvModR,
    };
    check(id, f, g, angle, OperatorParams { d: 0.0, q }, cfg)
}

pub fn check_conv_tfshift(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    d: f64,
    q: f64,
    side: Side,
    cfg: &CheckConfig,
) -> Result<IdentityReport> {
    let id = match side {
        Side::Left => IdentityId::ConvTfShiftL,
        Side::Right => IdentityId::ConvTfShiftR,
    };
    check(id, f, g, angle, OperatorParams { d, q }, cfg)
}

pub fn check_product(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    cfg: &CheckConfig,
) -> Result<IdentityReport> {
    check(
        IdentityId::Prod,
        f,
        g,
        angle,
        OperatorParams::default(),
        cfg,
    )
}

pub fn check_correlation(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    cfg: &CheckConfig,
) -> Result<IdentityReport> {
    check(
        IdentityId::Corr,
        f,
        g,
        angle,
        OperatorParams::default(),
        cfg,
    )
}

pub fn check_corr_shift(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    d: f64,
    side: Side,
    cfg: &CheckConfig,
) -> Result<IdentityReport> {
    let id = match side {
        Side::Left => IdentityId::CorrShiftL,
        Side::Right => IdentityId::CorrShiftR,
    };
    check(id, f, g, angle, OperatorParams { d, q: 0.0 }, cfg)
}

pub fn check_corr_modulation(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    q: f64,
    side: Side,
    cfg: &CheckConfig,
) -> Result<IdentityReport> {
    let id = match side {
        Side::Left => IdentityId::CorrModL,
        Side::Right => IdentityId::CorrModR,
    };
    check(id, f, g, angle, OperatorParams { d: 0.0, q }, cfg)
}

pub fn check_corr_tfshift(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    d: f64,
    q: f64,
    side: Side,
    cfg: &CheckConfig,
) -> Result<IdentityReport> {
    let id = match side {
        Side::Left => IdentityId::CorrTfShiftL,
        Side::Right => IdentityId::CorrTfShiftR,
    };
    check(id, f, g, angle, OperatorParams { d, q }, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{chirp, gaussian, SignalSpec};
    use crate::kernel::sqrt_j2pi;
    use crate::sum::CompensatedSum;
    use core::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    fn small_grid() -> UniformGrid {
        UniformGrid::centered(16.0, 256).unwrap()
    }

    fn small_ugrid() -> UniformGrid {
        let step = 2.0 * core::f64::consts::PI / 16.0;
        UniformGrid::new(-32.0 * step, step, 65).unwrap()
    }

    fn pair() -> (SampledSignal, SampledSignal) {
        let grid = small_grid();
        (
            gaussian(&grid, 0.25, 0.9, 2.0).unwrap(),
            gaussian(&grid, -0.5, 1.1, -1.0).unwrap(),
        )
    }

    fn cfg() -> CheckConfig {
        CheckConfig {
            ugrid: small_ugrid(),
            tolerances: Tolerances::default(),
        }
    }

    fn close(a: &[C64], b: &[C64], tol: f64) {
        let r = relative_l2_error(a, b).unwrap();
        assert!(r <= tol, "relative error {r:e} > {tol:e}");
    }

    #[test]
    fn names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>(), Ok(id));
        }
        assert_eq!(
            "conv_tfshift_r".parse::<IdentityId>(),
            Ok(IdentityId::ConvTfShiftR)
        );
        assert!("CONV_TF_SHIFT_L".parse::<IdentityId>().is_err());
    }

    #[test]
    fn every_identity_passes_on_full_span() {
        let grid = UniformGrid::centered(32.0, 512).unwrap();
        let f = gaussian(&grid, 0.25, 0.9, 2.0).unwrap();
        let g = gaussian(&grid, -0.5, 1.1, -1.0).unwrap();
        for phi in [FRAC_PI_3, FRAC_PI_2] {
            let angle = Angle::new(phi).unwrap();
            for id in IdentityId::ALL {
                let r = check(
                    id,
                    &f,
                    &g,
                    &angle,
                    OperatorParams { d: 0.5, q: 1.0 },
                    &cfg(),
                )
                .unwrap();
                assert!(r.pass, "{r:?}");
                assert!(r.best_residual() < 1e-12, "{r:?}");
            }
        }
    }

    #[test]
    fn tfshift_formulas_specialize() {
        let (f, g) = pair();
        let us = small_ugrid().to_vec();
        let a = Angle::new(FRAC_PI_4).unwrap();
        for side in [Side::Left, Side::Right] {
            close(
                &rhs::conv_tfshift(&f, &g, &a, 0.0, 1.0, side, &us),
                &rhs::conv_modulation(&f, &g, &a, 1.0, side, &us),
                1e-12,
            );
            close(
                &rhs::conv_tfshift(&f, &g, &a, 0.5, 0.0, side, &us),
                &rhs::conv_shift(&f, &g, &a, 0.5, side, &us),
                1e-12,
            );
            close(
                &rhs::conv_tfshift(&f, &g, &a, 0.0, 0.0, side, &us),
                &rhs::convolution(&f, &g, &a, &us),
                1e-12,
            );
            close(
                &rhs::corr_tfshift(&f, &g, &a, 0.0, 1.0, side, Form::Derived, &us),
                &rhs::corr_modulation(&f, &g, &a, 1.0, side, &us),
                1e-12,
            );
            close(
                &rhs::corr_tfshift(&f, &g, &a, 0.5, 0.0, side, Form::Derived, &us),
                &rhs::corr_shift(&f, &g, &a, 0.5, side, Form::Derived, &us),
                1e-12,
            );
            close(
                &rhs::corr_tfshift(&f, &g, &a, 0.0, 0.0, side, Form::Derived, &us),
                &rhs::correlation(&f, &g, &a, &us),
                1e-12,
            );
        }
        // spelled out: sqrt(j2pi) F(u) G(u)
        let fv = smfrft_at(&f, &us, &a);
        let gv = smfrft_at(&g, &us, &a);
        let manual: Vec<C64> = fv
            .iter()
            .zip(&gv)
            .map(|(x, y)| sqrt_j2pi() * x * y)
            .collect();
        close(&rhs::convolution(&f, &g, &a, &us), &manual, 1e-14);
    }

    #[test]
    fn zero_parameters_reduce_reports() {
        let (f, g) = pair();
        let a = Angle::new(FRAC_PI_3).unwrap();
        let c = cfg();
        let tf = check_conv_tfshift(&f, &g, &a, 0.0, 1.0, Side::Left, &c).unwrap();
        let m = check_conv_modulation(&f, &g, &a, 1.0, Side::Left, &c).unwrap();
        assert_eq!(tf.residual_derived_form, m.residual_derived_form);
        let tf = check_corr_tfshift(&f, &g, &a, 0.5, 0.0, Side::Right, &c).unwrap();
        let s = check_corr_shift(&f, &g, &a, 0.5, Side::Right, &c).unwrap();
        assert!((tf.residual_derived_form - s.residual_derived_form).abs() < 1e-15);
        let base = check_correlation(&f, &g, &a, &c).unwrap();
        assert!(base.pass && base.chosen_form == ChosenForm::Agree);
    }

    #[test]
    fn adjudication_names_the_passing_form() {
        let (f, g) = pair();
        let c = cfg();
        let a = Angle::new(FRAC_PI_3).unwrap();
        let r = check_corr_tfshift(&f, &g, &a, 0.5, 1.0, Side::Left, &c).unwrap();
        assert!(r.pass);
        assert_eq!(r.chosen_form, ChosenForm::Derived);
        assert!(r.residual_paper_form > 0.1);

        // both forms coincide on the right operand
        let r = check_corr_tfshift(&f, &g, &a, 0.5, 1.0, Side::Right, &c).unwrap();
        assert_eq!(r.chosen_form, ChosenForm::Agree);
        assert_eq!(r.residual_paper_form, r.residual_derived_form);

        let fourier = Angle::new(FRAC_PI_2).unwrap();
        let r = check_corr_shift(&f, &g, &fourier, 0.5, Side::Left, &c).unwrap();
        assert_eq!(r.chosen_form, ChosenForm::Derived);
        assert_eq!(r.tolerance, 1e-6);
        // with no delay the two phases are equal
        let r = check_corr_shift(&f, &g, &fourier, 0.0, Side::Left, &c).unwrap();
        assert_eq!(r.chosen_form, ChosenForm::Agree);
        // away from the Fourier angle there is only one formula
        let r = check_corr_shift(&f, &g, &a, 0.5, Side::Left, &c).unwrap();
        assert_eq!(r.chosen_form, ChosenForm::Agree);
    }

    #[test]
    fn naive_conjugate_spectrum_fails_for_complex_input() {
        // conj(F(-u)) is not the transform of conj(f) once the chirp rate is nonzero
        let (f, g) = pair();
        let a = Angle::new(FRAC_PI_4).unwrap();
        let us = small_ugrid().to_vec();
        let neg: Vec<f64> = us.iter().map(|u| -u).collect();
        let fneg = smfrft_at(&f, &neg, &a);
        let gv = smfrft_at(&g, &us, &a);
        let naive: Vec<C64> = fneg
            .iter()
            .zip(&gv)
            .map(|(x, y)| sqrt_j2pi() * x.conj() * y)
            .collect();
        let lhs = smfrft_at(&crate::ops::frac_correlate(&f, &g, &a).unwrap(), &us, &a);
        assert!(relative_l2_error(&lhs, &naive).unwrap() > 0.1);
        assert!(relative_l2_error(&lhs, &rhs::correlation(&f, &g, &a, &us)).unwrap() < 1e-6);
    }

    #[test]
    fn flipped_weight_breaks_convolution_theorem() {
        let (f, g) = pair();
        let a = Angle::new(FRAC_PI_4).unwrap();
        let grid = *f.grid();
        let (n, dt, c) = (grid.count() as i64, grid.step(), a.cot());
        let origin = (grid.start() / dt).round() as i64;
        let out = SampledSignal::from_fn(grid, |t| {
            let i = (t / dt).round() as i64 - origin;
            let acc: CompensatedSum = (0..n)
                .filter_map(|m| {
                    let k = i - m - origin;
                    (0..n).contains(&k).then(|| {
                        let tau = grid.point(m as usize);
                        f.samples()[m as usize]
                            * g.samples()[k as usize]
                            * crate::math::cis(-tau * (tau - t) * c)
                    })
                })
                .sum();
            acc.value() * dt
        });
        let us = small_ugrid().to_vec();
        let lhs = smfrft_at(&out, &us, &a);
        assert!(relative_l2_error(&lhs, &rhs::convolution(&f, &g, &a, &us)).unwrap() > 0.1);
    }

    #[test]
    fn zero_tolerance_fails_everything() {
        let (f, g) = pair();
        let a = Angle::new(FRAC_PI_3).unwrap();
        let c = CheckConfig {
            ugrid: small_ugrid(),
            tolerances: Tolerances::uniform(0.0),
        };
        for id in IdentityId::ALL {
            let r = check(id, &f, &g, &a, OperatorParams { d: 0.5, q: 1.0 }, &c).unwrap();
            assert!(!r.pass, "{id} passed with zero tolerance");
        }
    }

    #[test]
    fn zero_operand_uses_absolute_bound() {
        let (f, _) = pair();
        let z = SampledSignal::zeros(*f.grid());
        let r = check_convolution(&f, &z, &Angle::new(FRAC_PI_3).unwrap(), &cfg()).unwrap();
        assert!(r.pass);
        assert_eq!(r.tolerance, 1e-14);
        assert_eq!(r.residual_paper_form, 0.0);
    }

    #[test]
    fn product_uses_inner_half() {
        let (f, g) = pair();
        let a = Angle::new(FRAC_PI_3).unwrap();
        let sides = evaluate_sides(
            IdentityId::Prod,
            &f,
            &g,
            &a,
            OperatorParams::default(),
            &small_ugrid(),
        )
        .unwrap();
        assert_eq!(sides.us.len(), 65 - 2 * 16);
        assert_eq!(sides.us[0], small_ugrid().point(16));
        let r = check_product(&f, &g, &a, &cfg()).unwrap();
        assert_eq!(r.tolerance, 1e-3);
    }

    #[test]
    fn chirp_operand_passes() {
        let grid = small_grid();
        let f = chirp(&grid, -1.0, 1.0).unwrap();
        let g = gaussian(&grid, 0.0, 1.0, 0.0).unwrap();
        let a = Angle::new(FRAC_PI_4).unwrap();
        for id in IdentityId::ALL {
            let r = check(id, &f, &g, &a, OperatorParams { d: 0.25, q: 0.5 }, &cfg()).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    fn small_suite() -> SuiteConfig {
        SuiteConfig {
            grid: small_grid(),
            ugrid: small_ugrid(),
            corpus: alloc::vec![SignalPair {
                f: SignalSpec::Gaussian {
                    center: 0.0,
                    width: 1.0,
                    carrier: 1.0
                },
                g: SignalSpec::Chirp {
                    rate: 0.5,
                    width: 1.0
                },
            }],
            angles: alloc::vec![FRAC_PI_4, FRAC_PI_2],
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn suite_enumerates_each_combination_once() {
        let cfg = small_suite();
        let mut seen = Vec::new();
        let out = run_suite_with(&cfg, |r| seen.push((r.identity, r.phi, r.d, r.q))).unwrap();
        assert!(out.pass);
        assert_eq!(out.reports.len(), 2 * 35);
        assert_eq!(seen.len(), out.reports.len());
        for (i, a) in seen.iter().enumerate() {
            assert!(!seen[i + 1..].contains(a), "duplicate {a:?}");
        }
        for id in IdentityId::ALL {
            let per_angle = seen
                .iter()
                .filter(|s| s.0 == id && s.1 == FRAC_PI_4)
                .count();
            let expected = match (id.uses_delay(), id.uses_modulation()) {
                (true, true) => 4,
                (false, false) => 1,
                _ => 2,
            };
            assert_eq!(per_angle, expected, "{id}");
        }
        // order: angle, then identity, then d, then q
        assert_eq!(seen[0], (IdentityId::Conv, FRAC_PI_4, 0.0, 0.0));
        assert_eq!(seen[1], (IdentityId::ConvShiftL, FRAC_PI_4, 0.0, 0.0));
        assert_eq!(seen[2], (IdentityId::ConvShiftL, FRAC_PI_4, 0.5, 0.0));
        assert_eq!(seen[35].1, FRAC_PI_2);
        assert_eq!(worst_residual_by_identity(&out.reports).len(), 15);
    }

    #[test]
    fn empty_corpus_is_vacuous_pass() {
        let cfg = SuiteConfig {
            corpus: Vec::new(),
            ..small_suite()
        };
        let out = run_suite(&cfg).unwrap();
        assert!(out.reports.is_empty());
        assert!(out.pass);
    }

    #[test]
    fn suite_reports_bad_inputs() {
        let cfg = SuiteConfig {
            angles: alloc::vec![0.0],
            ..small_suite()
        };
        let err = run_suite(&cfg).unwrap_err();
        assert!(matches!(err.source, Error::DegenerateAngle { .. }));
        let cfg = SuiteConfig {
            shifts: alloc::vec![0.01],
            ..small_suite()
        };
        let err = run_suite(&cfg).unwrap_err();
        assert_eq!(err.identity, Some(IdentityId::ConvShiftL));
    }
}
