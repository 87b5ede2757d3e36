//! Refractive indices, wave vectors, phase mismatches and the non-collinear
//! emission geometry.
//!
//! The crystal is uniaxial; the pump propagates as the extraordinary wave at
//! the cut angle, signal and idler as ordinary waves (type I, e -> oo). The
//! non-collinear geometry is handled by paraxial expansion about the central
//! emission cone: the longitudinal wave-vector components pick up cos(theta)
//! factors and the radial declinations cos(theta)^2 factors.

use crate::constants::{omega_to_wavelength, SPEED_OF_LIGHT};
use crate::error::{Error, Result};

/// One-pole Sellmeier form n^2 = a + b / (lambda^2 - c) - d lambda^2,
/// lambda in micrometers.
#[derive(Debug, Clone, Copy)]
pub struct SellmeierCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl SellmeierCoefficients {
    fn n_squared(&self, lambda_um: f64) -> f64 {
        let l2 = lambda_um * lambda_um;
        self.a + self.b / (l2 - self.c) - self.d * l2
    }
}

/// Field polarization inside the uniaxial crystal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Polarization {
    Ordinary,
    /// Extraordinary wave propagating at the given angle [rad] to the optic axis.
    ExtraordinaryAtAngle(f64),
}

/// Ordinary/extraordinary Sellmeier sets with their validity window.
#[derive(Debug, Clone)]
pub struct DispersionModel {
    pub id: &'static str,
    pub ordinary: SellmeierCoefficients,
    pub extraordinary: SellmeierCoefficients,
    /// Wavelength validity interval [m].
    pub valid_range: (f64, f64),
}

/// beta-BaB2O4, Eimerl et al., J. Appl. Phys. 62, 1968 (1987).
pub const BBO_EIMERL: DispersionModel = DispersionModel {
    id: "bbo-eimerl",
    ordinary: SellmeierCoefficients { a: 2.7405, b: 0.0184, c: 0.0179, d: 0.0155 },
    extraordinary: SellmeierCoefficients { a: 2.3730, b: 0.0128, c: 0.0156, d: 0.0044 },
    valid_range: (0.21e-6, 1.1e-6),
};

/// beta-BaB2O4, Kato, IEEE J. Quantum Electron. 22, 1013 (1986).
pub const BBO_KATO: DispersionModel = DispersionModel {
    id: "bbo-kato",
    ordinary: SellmeierCoefficients { a: 2.7359, b: 0.01878, c: 0.01822, d: 0.01354 },
    extraordinary: SellmeierCoefficients { a: 2.3753, b: 0.01224, c: 0.01667, d: 0.01516 },
    valid_range: (0.21e-6, 1.1e-6),
};

/// Looks up a dispersion model by its identifier.
pub fn dispersion_by_id(id: &str) -> Result<DispersionModel> {
    match id {
        "bbo-eimerl" => Ok(BBO_EIMERL),
        "bbo-kato" => Ok(BBO_KATO),
        other => Err(Error::UnknownDispersionId(other.to_string())),
    }
}

impl DispersionModel {
    /// Refractive index at vacuum wavelength `lambda` [m].
    ///
    /// The extraordinary-at-angle branch is the uniaxial index ellipse
    /// 1/n^2 = cos^2/n_o^2 + sin^2/n_e^2; at theta = 0 it reduces to n_o.
    pub fn refractive_index(&self, lambda: f64, polarization: Polarization) -> Result<f64> {
        let (lo, hi) = self.valid_range;
        if !(lambda >= lo && lambda <= hi) {
            return Err(Error::OutOfDispersionRange { lambda, lo, hi });
        }
        let lambda_um = lambda * 1e6;
        let n_o2 = self.ordinary.n_squared(lambda_um);
        let n = match polarization {
            Polarization::Ordinary => n_o2.sqrt(),
            Polarization::ExtraordinaryAtAngle(theta) => {
                let n_e2 = self.extraordinary.n_squared(lambda_um);
                let (s, c) = theta.sin_cos();
                1.0 / (c * c / n_o2 + s * s / n_e2).sqrt()
            }
        };
        Ok(n)
    }
}

/// Interacting field label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Pump,
    Signal,
    Idler,
}

/// Dispersion model bound to a crystal cut: maps (omega, field) -> k.
#[derive(Debug, Clone)]
pub struct CrystalOptics {
    pub dispersion: DispersionModel,
    /// Angle of the optic axis to the pump propagation direction [rad].
    pub cut_angle: f64,
}

impl CrystalOptics {
    pub fn new(dispersion: DispersionModel, cut_angle: f64) -> Self {
        Self { dispersion, cut_angle }
    }

    fn polarization_of(&self, field: FieldKind) -> Polarization {
        match field {
            FieldKind::Pump => Polarization::ExtraordinaryAtAngle(self.cut_angle),
            FieldKind::Signal | FieldKind::Idler => Polarization::Ordinary,
        }
    }

    /// Wave-vector magnitude k = n(omega) omega / c [1/m].
    pub fn wavevector_magnitude(&self, omega: f64, field: FieldKind) -> Result<f64> {
        let lambda = omega_to_wavelength(omega);
        let n = self.dispersion.refractive_index(lambda, self.polarization_of(field))?;
        Ok(n * omega / SPEED_OF_LIGHT)
    }
}

/// Central emission geometry solved from energy and transverse wave-vector
/// conservation together with longitudinal phase matching.
#[derive(Debug, Clone)]
pub struct CentralGeometry {
    pub omega_signal: f64,
    pub omega_idler: f64,
    pub omega_pump: f64,
    /// Internal radial emission angles [rad].
    pub internal_signal: f64,
    pub internal_idler: f64,
    /// External (Snell-refracted at a z-normal output face) angles [rad].
    pub external_signal: f64,
    pub external_idler: f64,
    /// Wave-vector magnitudes at the central frequencies [1/m].
    pub k_signal: f64,
    pub k_idler: f64,
    pub k_pump: f64,
    /// Shared central transverse wave-vector magnitude [1/m].
    pub k_perp0: f64,
}

/// Solves the central geometry for given central wavelengths.
///
/// Finds the common transverse magnitude kappa with
/// sqrt(k_s^2 - kappa^2) + sqrt(k_i^2 - kappa^2) = k_p by bisection; the
/// left side is strictly decreasing in kappa.
pub fn central_geometry(
    optics: &CrystalOptics,
    lambda_signal: f64,
    lambda_idler: f64,
) -> Result<CentralGeometry> {
    let omega_s = crate::constants::wavelength_to_omega(lambda_signal);
    let omega_i = crate::constants::wavelength_to_omega(lambda_idler);
    let omega_p = omega_s + omega_i;

    let k_s = optics.wavevector_magnitude(omega_s, FieldKind::Signal)?;
    let k_i = optics.wavevector_magnitude(omega_i, FieldKind::Idler)?;
    let k_p = optics.wavevector_magnitude(omega_p, FieldKind::Pump)?;

    if k_s + k_i < k_p {
        return Err(Error::NoPhaseMatch(format!(
            "k_s + k_i = {:.6e} < k_p = {:.6e}",
            k_s + k_i,
            k_p
        )));
    }
    let kappa_max = k_s.min(k_i);
    let f = |kappa: f64| (k_s * k_s - kappa * kappa).sqrt() + (k_i * k_i - kappa * kappa).sqrt() - k_p;
    if f(kappa_max) > 0.0 {
        return Err(Error::NoPhaseMatch(
            "no transverse solution: mismatch positive up to kappa_max".into(),
        ));
    }
    let (mut lo, mut hi) = (0.0_f64, kappa_max);
    if f(lo) < 0.0 {
        return Err(Error::NoPhaseMatch(format!(
            "collinear mismatch already negative: k_p = {:.6e} > k_s + k_i = {:.6e}",
            k_p,
            k_s + k_i
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let kappa = 0.5 * (lo + hi);

    let internal_s = (kappa / k_s).asin();
    let internal_i = (kappa / k_i).asin();
    let n_s = k_s * SPEED_OF_LIGHT / omega_s;
    let n_i = k_i * SPEED_OF_LIGHT / omega_i;
    let sin_ext_s = n_s * internal_s.sin();
    let sin_ext_i = n_i * internal_i.sin();
    if sin_ext_s.abs() > 1.0 || sin_ext_i.abs() > 1.0 {
        return Err(Error::NoPhaseMatch("total internal reflection at output face".into()));
    }

    Ok(CentralGeometry {
        omega_signal: omega_s,
        omega_idler: omega_i,
        omega_pump: omega_p,
        internal_signal: internal_s,
        internal_idler: internal_i,
        external_signal: sin_ext_s.asin(),
        external_idler: sin_ext_i.asin(),
        k_signal: k_s,
        k_idler: k_i,
        k_pump: k_p,
        k_perp0: kappa,
    })
}

/// Scans the crystal cut angle until the degenerate external emission angle
/// matches `external_target` [rad]. Used to build phase-matched configs.
pub fn find_cut_angle(
    dispersion: &DispersionModel,
    lambda_signal: f64,
    lambda_idler: f64,
    external_target: f64,
) -> Result<f64> {
    let ext_at = |cut: f64| -> Result<f64> {
        let optics = CrystalOptics::new(dispersion.clone(), cut);
        Ok(central_geometry(&optics, lambda_signal, lambda_idler)?.external_signal)
    };
    // The external angle grows with cut angle (n_p(theta) falls). Bracket on
    // a coarse scan, then bisect.
    let lo_deg = 20.0_f64;
    let hi_deg = 60.0_f64;
    let mut prev: Option<(f64, f64)> = None;
    let mut bracket = None;
    for step in 0..=400 {
        let cut = (lo_deg + (hi_deg - lo_deg) * step as f64 / 400.0).to_radians();
        let value = match ext_at(cut) {
            Ok(v) => v - external_target,
            Err(_) => continue,
        };
        if let Some((pcut, pval)) = prev {
            if pval * value <= 0.0 {
                bracket = Some((pcut, pval, cut, value));
                break;
            }
        }
        prev = Some((cut, value));
    }
    let (mut a, fa, mut b, _) = bracket.ok_or_else(|| {
        Error::NoPhaseMatch(format!(
            "no cut angle in [{lo_deg}, {hi_deg}] deg gives external angle {:.4} deg",
            external_target.to_degrees()
        ))
    })?;
    let mut fa = fa;
    for _ in 0..100 {
        let mid = 0.5 * (a + b);
        let fm = ext_at(mid)? - external_target;
        if fa * fm <= 0.0 {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    Ok(0.5 * (a + b))
}

/// Paraxial frame about the central non-collinear emission cone.
///
/// Carries everything the kernels need: central wave vectors, the
/// cos(theta) substitutions, and the two phase mismatches.
#[derive(Debug, Clone)]
pub struct NonCollinearFrame {
    pub optics: CrystalOptics,
    pub geometry: CentralGeometry,
    cos_s: f64,
    cos_i: f64,
    /// Effective longitudinal k at center, k cos(theta).
    k_eff_s: f64,
    k_eff_i: f64,
}

impl NonCollinearFrame {
    pub fn new(optics: CrystalOptics, geometry: CentralGeometry) -> Self {
        let cos_s = geometry.internal_signal.cos();
        let cos_i = geometry.internal_idler.cos();
        Self {
            k_eff_s: geometry.k_signal * cos_s,
            k_eff_i: geometry.k_idler * cos_i,
            cos_s,
            cos_i,
            optics,
            geometry,
        }
    }

    /// Longitudinal mismatch Delta(omega_s, omega_i) =
    /// k_p(omega_s + omega_i) - k_s(omega_s) cos(theta_s) - k_i(omega_i) cos(theta_i).
    pub fn longitudinal_mismatch(&self, omega_s: f64, omega_i: f64) -> Result<f64> {
        let k_p = self.optics.wavevector_magnitude(omega_s + omega_i, FieldKind::Pump)?;
        let k_s = self.optics.wavevector_magnitude(omega_s, FieldKind::Signal)?;
        let k_i = self.optics.wavevector_magnitude(omega_i, FieldKind::Idler)?;
        Ok(k_p - k_s * self.cos_s - k_i * self.cos_i)
    }

    /// Transverse mismatch entering the z-average of the transverse kernel,
    /// evaluated at the central frequencies.
    ///
    /// `k_s_perp`, `k_i_perp` are the full radial transverse magnitudes; the
    /// pump term uses the full vector sum while the signal/idler quadratic
    /// terms act on the declinations from the central cone with the
    /// substitutions k -> k cos(theta), dk -> dk cos(theta)^2. Vanishes at
    /// the phase-matched center (k_perp0, k_perp0, delta_phi = pi) and
    /// reduces to the plain paraxial bracket in the collinear limit.
    pub fn transverse_mismatch(&self, k_s_perp: f64, k_i_perp: f64, delta_phi: f64) -> f64 {
        let g = &self.geometry;
        let kp_perp2 = k_s_perp * k_s_perp + k_i_perp * k_i_perp
            + 2.0 * k_s_perp * k_i_perp * delta_phi.cos();
        let dk_s = (k_s_perp - g.k_perp0) * self.cos_s * self.cos_s;
        let dk_i = (k_i_perp - g.k_perp0) * self.cos_i * self.cos_i;
        kp_perp2 / (2.0 * g.k_pump)
            - dk_s * dk_s / (2.0 * self.k_eff_s)
            - dk_i * dk_i / (2.0 * self.k_eff_i)
    }

    pub fn cos_internal_signal(&self) -> f64 {
        self.cos_s
    }

    pub fn cos_internal_idler(&self) -> f64 {
        self.cos_i
    }
}
