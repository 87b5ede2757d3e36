//! Run configuration: parsing, validation and derived quantities.
//!
//! The configuration file is TOML with sections [crystal], [pump],
//! [geometry], [grids] and [sweep]. Lengths are given in meters, angles in
//! degrees (converted to radians on load), powers in watts. The raw parsed
//! values are retained so a round trip reproduces them bit-identically.

use serde::{Deserialize, Serialize};

use crate::constants::SPEED_OF_LIGHT;
use crate::dispersion::{central_geometry, dispersion_by_id, CrystalOptics};
use crate::error::{Error, Result};

/// FWHM of a Gaussian intensity profile exp(-tau^2 w^2 / 2) in w is
/// 2 sqrt(2 ln 2) / tau.
const GAUSSIAN_FWHM_FACTOR: f64 = 2.354_820_045_030_949_3;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawCrystal {
    pub length_L: f64,
    /// Cut angle of the optic axis [degrees in the file].
    pub cut_angle: f64,
    pub d_eff: f64,
    pub dispersion_id: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawPump {
    pub center_wavelength: f64,
    pub spectral_width_fwhm: f64,
    pub beam_radius_wp: f64,
    pub power_Pp: f64,
    pub repetition_rate_f: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawGeometry {
    pub signal_center_wavelength: f64,
    pub idler_center_wavelength: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct RawGrids {
    /// Points of the composite Gauss-Legendre frequency grids.
    pub spectral_points: usize,
    /// Half-extent of the frequency window in units of the first
    /// phase-matching sinc zero.
    pub spectral_window_lobes: f64,
    /// Points of the radial wave-vector grids.
    pub radial_points: usize,
    /// Half-extent of the radial window in units of the first transverse
    /// sinc zero.
    pub radial_window_lobes: f64,
    /// Quadrature points of the azimuthal difference window.
    pub azimuth_points: usize,
    /// Largest azimuthal harmonic index retained.
    pub m_max: usize,
    /// Points of the uniform time grid.
    pub time_points: usize,
    /// Half-extent of the time window in pump durations.
    pub time_window_pump_widths: f64,
    /// Points of the near-field radius grid.
    pub radius_points: usize,
    /// Extent of the radius grid in pump beam radii.
    pub radius_extent_pump_radii: f64,
    /// Relative transverse eigenvalue cutoff.
    pub lambda_cutoff: f64,
}

impl Default for RawGrids {
    fn default() -> Self {
        Self {
            spectral_points: 1792,
            spectral_window_lobes: 2.5,
            radial_points: 128,
            radial_window_lobes: 1.6,
            azimuth_points: 96,
            m_max: 512,
            time_points: 1024,
            time_window_pump_widths: 8.0,
            radius_points: 1024,
            radius_extent_pump_radii: 3.0,
            lambda_cutoff: 1e-4,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct RawSweep {
    pub min_power: f64,
    pub max_power: f64,
    pub points: usize,
}

impl Default for RawSweep {
    fn default() -> Self {
        Self { min_power: 1e-7, max_power: 5e-2, points: 20 }
    }
}

/// Configuration exactly as parsed from the file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawConfig {
    pub crystal: RawCrystal,
    pub pump: RawPump,
    pub geometry: RawGeometry,
    #[serde(default)]
    pub grids: RawGrids,
    #[serde(default)]
    pub sweep: RawSweep,
}

/// Crystal parameters in SI units.
#[derive(Debug, Clone)]
pub struct CrystalConfig {
    pub length: f64,
    /// Phase-matching angle of the optic axis [rad].
    pub cut_angle: f64,
    pub d_eff: f64,
    pub dispersion_id: String,
}

/// Pump parameters in SI units, with the derived transform-limited duration.
#[derive(Debug, Clone)]
pub struct PumpConfig {
    pub center_wavelength: f64,
    /// FWHM of the pump intensity spectrum [m].
    pub spectral_width_fwhm: f64,
    pub beam_radius_wp: f64,
    pub power_pp: f64,
    pub repetition_rate_f: f64,
    /// Transform-limited duration tau_p of the field envelope [s].
    pub duration_tau_p: f64,
    /// Pump central angular frequency [rad/s].
    pub omega_0: f64,
}

impl PumpConfig {
    /// FWHM of the intensity spectrum in angular frequency [rad/s].
    pub fn spectral_width_omega(&self) -> f64 {
        2.0 * std::f64::consts::PI * SPEED_OF_LIGHT * self.spectral_width_fwhm
            / (self.center_wavelength * self.center_wavelength)
    }

    /// Back-converts the stored duration to a wavelength FWHM; inverse of the
    /// transform-limit relation used at load time.
    pub fn spectral_width_from_duration(&self) -> f64 {
        let dw = GAUSSIAN_FWHM_FACTOR / self.duration_tau_p;
        dw * self.center_wavelength * self.center_wavelength
            / (2.0 * std::f64::consts::PI * SPEED_OF_LIGHT)
    }
}

/// Central emission geometry in the form reported to users: external angles.
#[derive(Debug, Clone)]
pub struct GeometryConfig {
    pub signal_center_wavelength: f64,
    pub idler_center_wavelength: f64,
    /// External radial emission angles [rad].
    pub emission_angle_signal: f64,
    pub emission_angle_idler: f64,
}

#[derive(Debug, Clone)]
pub struct GridConfig {
    pub spectral_points: usize,
    pub spectral_window_lobes: f64,
    pub radial_points: usize,
    pub radial_window_lobes: f64,
    pub azimuth_points: usize,
    pub m_max: usize,
    pub time_points: usize,
    pub time_window_pump_widths: f64,
    pub radius_points: usize,
    pub radius_extent_pump_radii: f64,
    pub lambda_cutoff: f64,
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub min_power: f64,
    pub max_power: f64,
    pub points: usize,
}

impl SweepConfig {
    /// Log-spaced pump powers over [min, max].
    pub fn powers(&self) -> Vec<f64> {
        let n = self.points;
        if n == 1 {
            return vec![self.min_power];
        }
        let (l0, l1) = (self.min_power.ln(), self.max_power.ln());
        (0..n)
            .map(|i| (l0 + (l1 - l0) * i as f64 / (n - 1) as f64).exp())
            .collect()
    }
}

/// Validated simulation input with derived quantities populated.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub crystal: CrystalConfig,
    pub pump: PumpConfig,
    pub geometry: GeometryConfig,
    pub grids: GridConfig,
    pub sweep: SweepConfig,
    raw: RawConfig,
}

fn require_positive(value: f64, key: &str) -> Result<()> {
    if !(value > 0.0) || !value.is_finite() {
        return Err(Error::InvalidValue {
            key: key.to_string(),
            reason: format!("must be strictly positive, got {value}"),
        });
    }
    Ok(())
}

/// Parses and validates a configuration document.
pub fn load_config(source: &str) -> Result<RunConfig> {
    let raw: RawConfig = toml::from_str(source).map_err(|e| {
        let msg = e.to_string();
        if msg.contains("missing field") {
            Error::MissingKey { key: msg }
        } else {
            Error::ConfigParse(msg)
        }
    })?;
    RunConfig::from_raw(raw)
}

impl RunConfig {
    pub fn from_raw(raw: RawConfig) -> Result<Self> {
        require_positive(raw.crystal.length_L, "crystal.length_L")?;
        require_positive(raw.crystal.d_eff, "crystal.d_eff")?;
        if !(raw.crystal.cut_angle > 0.0 && raw.crystal.cut_angle < 90.0) {
            return Err(Error::InvalidValue {
                key: "crystal.cut_angle".into(),
                reason: format!("must lie in (0, 90) degrees, got {}", raw.crystal.cut_angle),
            });
        }
        require_positive(raw.pump.center_wavelength, "pump.center_wavelength")?;
        require_positive(raw.pump.spectral_width_fwhm, "pump.spectral_width_fwhm")?;
        require_positive(raw.pump.beam_radius_wp, "pump.beam_radius_wp")?;
        require_positive(raw.pump.power_Pp, "pump.power_Pp")?;
        require_positive(raw.pump.repetition_rate_f, "pump.repetition_rate_f")?;
        require_positive(raw.geometry.signal_center_wavelength, "geometry.signal_center_wavelength")?;
        require_positive(raw.geometry.idler_center_wavelength, "geometry.idler_center_wavelength")?;
        require_positive(raw.sweep.min_power, "sweep.min_power")?;
        if raw.sweep.max_power < raw.sweep.min_power {
            return Err(Error::InvalidValue {
                key: "sweep.max_power".into(),
                reason: "must be >= sweep.min_power".into(),
            });
        }

        // energy conservation 1/ls + 1/li = 1/lp
        let inv_sum = 1.0 / raw.geometry.signal_center_wavelength + 1.0 / raw.geometry.idler_center_wavelength;
        let inv_pump = 1.0 / raw.pump.center_wavelength;
        if ((inv_sum - inv_pump) / inv_pump).abs() > 1e-12 {
            return Err(Error::InvalidValue {
                key: "geometry".into(),
                reason: format!(
                    "energy conservation violated: 1/{:e} + 1/{:e} != 1/{:e}",
                    raw.geometry.signal_center_wavelength,
                    raw.geometry.idler_center_wavelength,
                    raw.pump.center_wavelength
                ),
            });
        }

        let crystal = CrystalConfig {
            length: raw.crystal.length_L,
            cut_angle: raw.crystal.cut_angle.to_radians(),
            d_eff: raw.crystal.d_eff,
            dispersion_id: raw.crystal.dispersion_id.clone(),
        };

        let omega_0 = crate::constants::wavelength_to_omega(raw.pump.center_wavelength);
        let dw = 2.0 * std::f64::consts::PI * SPEED_OF_LIGHT * raw.pump.spectral_width_fwhm
            / (raw.pump.center_wavelength * raw.pump.center_wavelength);
        let pump = PumpConfig {
            center_wavelength: raw.pump.center_wavelength,
            spectral_width_fwhm: raw.pump.spectral_width_fwhm,
            beam_radius_wp: raw.pump.beam_radius_wp,
            power_pp: raw.pump.power_Pp,
            repetition_rate_f: raw.pump.repetition_rate_f,
            duration_tau_p: GAUSSIAN_FWHM_FACTOR / dw,
            omega_0,
        };

        // solve the central geometry; failure here is a phase-matching
        // inconsistency of the configuration
        let model = dispersion_by_id(&crystal.dispersion_id)?;
        let optics = CrystalOptics::new(model, crystal.cut_angle);
        let geo = central_geometry(
            &optics,
            raw.geometry.signal_center_wavelength,
            raw.geometry.idler_center_wavelength,
        )?;
        let geometry = GeometryConfig {
            signal_center_wavelength: raw.geometry.signal_center_wavelength,
            idler_center_wavelength: raw.geometry.idler_center_wavelength,
            emission_angle_signal: geo.external_signal,
            emission_angle_idler: geo.external_idler,
        };

        let grids = GridConfig {
            spectral_points: raw.grids.spectral_points,
            spectral_window_lobes: raw.grids.spectral_window_lobes,
            radial_points: raw.grids.radial_points,
            radial_window_lobes: raw.grids.radial_window_lobes,
            azimuth_points: raw.grids.azimuth_points,
            m_max: raw.grids.m_max,
            time_points: raw.grids.time_points,
            time_window_pump_widths: raw.grids.time_window_pump_widths,
            radius_points: raw.grids.radius_points,
            radius_extent_pump_radii: raw.grids.radius_extent_pump_radii,
            lambda_cutoff: raw.grids.lambda_cutoff,
        };
        let sweep = SweepConfig {
            min_power: raw.sweep.min_power,
            max_power: raw.sweep.max_power,
            points: raw.sweep.points,
        };

        Ok(RunConfig { crystal, pump, geometry, grids, sweep, raw })
    }

    /// Serializes back to TOML, reproducing the parsed values bit-identically.
    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(&self.raw).expect("raw config serializes")
    }

    pub fn raw(&self) -> &RawConfig {
        &self.raw
    }

    /// Crystal optics bound to this configuration.
    pub fn optics(&self) -> Result<CrystalOptics> {
        let model = dispersion_by_id(&self.crystal.dispersion_id)?;
        Ok(CrystalOptics::new(model, self.crystal.cut_angle))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    pub(crate) const REFERENCE_TOML: &str = r#"
[crystal]
length_L = 8e-3
cut_angle = 36.51
d_eff = 2.0e-12
dispersion_id = "bbo-eimerl"

[pump]
center_wavelength = 349e-9
spectral_width_fwhm = 0.1e-9
beam_radius_wp = 1e-3
power_Pp = 5e-4
repetition_rate_f = 400.0

[geometry]
signal_center_wavelength = 698e-9
idler_center_wavelength = 698e-9
"#;

    #[test]
    fn reference_config_loads() {
        let cfg = load_config(REFERENCE_TOML).unwrap();
        assert_relative_eq!(cfg.crystal.length, 8e-3);
        assert_relative_eq!(cfg.crystal.cut_angle.to_degrees(), 36.51, max_relative = 1e-12);
        // tau_p of a 0.1 nm FWHM pulse at 349 nm is about 1.52 ps
        assert_relative_eq!(cfg.pump.duration_tau_p, 1.5227e-12, max_relative = 1e-3);
        // degenerate emission comes out near the paper's 8.45 deg
        assert!((cfg.geometry.emission_angle_signal.to_degrees() - 8.45).abs() < 0.3);
    }

    #[test]
    fn energy_conservation_violation_is_reported() {
        let bad = REFERENCE_TOML.replace("signal_center_wavelength = 698e-9", "signal_center_wavelength = 600e-9");
        match load_config(&bad) {
            Err(Error::InvalidValue { key, .. }) => assert_eq!(key, "geometry"),
            other => panic!("expected energy conservation error, got {other:?}"),
        }
    }

    #[test]
    fn non_positive_value_is_reported_with_key() {
        let bad = REFERENCE_TOML.replace("beam_radius_wp = 1e-3", "beam_radius_wp = -1e-3");
        match load_config(&bad) {
            Err(Error::InvalidValue { key, .. }) => assert_eq!(key, "pump.beam_radius_wp"),
            other => panic!("expected invalid value error, got {other:?}"),
        }
    }

    #[test]
    fn missing_key_is_reported() {
        let bad = REFERENCE_TOML.replace("length_L = 8e-3", "");
        assert!(matches!(load_config(&bad), Err(Error::MissingKey { .. })));
    }

    #[test]
    fn round_trip_is_bit_identical() {
        let cfg = load_config(REFERENCE_TOML).unwrap();
        let cfg2 = load_config(&cfg.to_toml()).unwrap();
        assert_eq!(cfg.raw().crystal.length_L.to_bits(), cfg2.raw().crystal.length_L.to_bits());
        assert_eq!(cfg.raw().crystal.cut_angle.to_bits(), cfg2.raw().crystal.cut_angle.to_bits());
        assert_eq!(cfg.raw().pump.center_wavelength.to_bits(), cfg2.raw().pump.center_wavelength.to_bits());
        assert_eq!(
            cfg.raw().pump.spectral_width_fwhm.to_bits(),
            cfg2.raw().pump.spectral_width_fwhm.to_bits()
        );
        assert_eq!(cfg.raw().pump.power_Pp.to_bits(), cfg2.raw().pump.power_Pp.to_bits());
        assert_eq!(cfg.raw().sweep.min_power.to_bits(), cfg2.raw().sweep.min_power.to_bits());
    }

    #[test]
    fn transform_limit_round_trip() {
        let cfg = load_config(REFERENCE_TOML).unwrap();
        let back = cfg.pump.spectral_width_from_duration();
        assert_relative_eq!(back, cfg.pump.spectral_width_fwhm, max_relative = 1e-12);
    }

    #[test]
    fn sweep_powers_are_log_spaced() {
        let cfg = load_config(REFERENCE_TOML).unwrap();
        let p = cfg.sweep.powers();
        assert_eq!(p.len(), 20);
        assert_relative_eq!(p[0], 1e-7, max_relative = 1e-12);
        assert_relative_eq!(p[19], 5e-2, max_relative = 1e-12);
        let r0 = p[1] / p[0];
        let r1 = p[11] / p[10];
        assert_relative_eq!(r0, r1, max_relative = 1e-10);
    }
}
