//! Classical pump field: Gaussian pulse spectrum and Gaussian transverse
//! spectrum with the power-calibrated amplitude.

use num_complex::Complex64;

use crate::config::PumpConfig;
use crate::constants::{SPEED_OF_LIGHT, VACUUM_PERMITTIVITY};

/// Pump field with the amplitude xi_p fixed by average power, central
/// frequency, central wave vector and repetition rate.
#[derive(Debug, Clone)]
pub struct PumpField {
    pub config: PumpConfig,
    /// Peak spectral amplitude xi_p = sqrt(P omega / (eps0 c^2 k f)).
    pub xi_p: f64,
}

impl PumpField {
    /// `k_pump_center` is the pump wave-vector magnitude at the carrier.
    pub fn new(config: PumpConfig, k_pump_center: f64) -> Self {
        let xi_p = (config.power_pp * config.omega_0
            / (VACUUM_PERMITTIVITY * SPEED_OF_LIGHT * SPEED_OF_LIGHT * k_pump_center * config.repetition_rate_f))
            .sqrt();
        Self { config, xi_p }
    }

    /// Pulse spectrum xi_p sqrt(tau/sqrt(2 pi)) exp(-tau^2 (w - w0)^2 / 4).
    pub fn spectral_amplitude(&self, omega_p: f64) -> Complex64 {
        debug_assert!(omega_p > 0.0);
        let tau = self.config.duration_tau_p;
        let d = omega_p - self.config.omega_0;
        let envelope = (-(tau * tau * d * d) / 4.0).exp();
        Complex64::new(self.xi_p * (tau / (2.0 * std::f64::consts::PI).sqrt()).sqrt() * envelope, 0.0)
    }

    /// Transverse spectrum (w_p / sqrt(2 pi)) exp(-w_p^2 |k_perp|^2 / 4).
    pub fn transverse_spectrum(&self, kx: f64, ky: f64) -> f64 {
        self.transverse_spectrum_mag2(kx * kx + ky * ky)
    }

    /// Same, from the squared transverse magnitude.
    pub fn transverse_spectrum_mag2(&self, k_perp_sq: f64) -> f64 {
        let w = self.config.beam_radius_wp;
        w / (2.0 * std::f64::consts::PI).sqrt() * (-(w * w * k_perp_sq) / 4.0).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::load_config;
    use crate::dispersion::FieldKind;
    use approx::assert_relative_eq;

    const TOML: &str = r#"
[crystal]
length_L = 8e-3
cut_angle = 36.51
d_eff = 2.0e-12
dispersion_id = "bbo-eimerl"

[pump]
center_wavelength = 349e-9
spectral_width_fwhm = 0.1e-9
beam_radius_wp = 1e-3
power_Pp = 0.05
repetition_rate_f = 400.0

[geometry]
signal_center_wavelength = 698e-9
idler_center_wavelength = 698e-9
"#;

    fn pump_field() -> PumpField {
        let cfg = load_config(TOML).unwrap();
        let optics = cfg.optics().unwrap();
        let k_p = optics.wavevector_magnitude(cfg.pump.omega_0, FieldKind::Pump).unwrap();
        PumpField::new(cfg.pump.clone(), k_p)
    }

    #[test]
    fn peak_and_width_of_spectral_amplitude() {
        let f = pump_field();
        let w0 = f.config.omega_0;
        let tau = f.config.duration_tau_p;
        let peak = f.spectral_amplitude(w0).re;
        assert_relative_eq!(peak, f.xi_p * (tau / (2.0 * std::f64::consts::PI).sqrt()).sqrt(), max_relative = 1e-14);
        // 1/e point of the amplitude at w0 +/- 2/tau
        let v = f.spectral_amplitude(w0 + 2.0 / tau).re;
        assert_relative_eq!(v, peak * (-1.0f64).exp(), max_relative = 1e-12);
        let v = f.spectral_amplitude(w0 - 2.0 / tau).re;
        assert_relative_eq!(v, peak * (-1.0f64).exp(), max_relative = 1e-12);
    }

    #[test]
    fn amplitude_formula_at_50_mw() {
        // xi_p = sqrt(P w / (eps0 c^2 k f)) evaluated independently
        let f = pump_field();
        let cfg = load_config(TOML).unwrap();
        let optics = cfg.optics().unwrap();
        let k_p = optics.wavevector_magnitude(cfg.pump.omega_0, FieldKind::Pump).unwrap();
        let expected = (0.05 * cfg.pump.omega_0
            / (VACUUM_PERMITTIVITY * SPEED_OF_LIGHT.powi(2) * k_p * 400.0))
            .sqrt();
        assert_relative_eq!(f.xi_p, expected, max_relative = 1e-14);
        // quadrupling the power doubles the amplitude
        let mut pump4 = cfg.pump.clone();
        pump4.power_pp *= 4.0;
        let f4 = PumpField::new(pump4, k_p);
        assert_relative_eq!(f4.xi_p, 2.0 * f.xi_p, max_relative = 1e-14);
    }

    #[test]
    fn transverse_spectrum_peak_and_decay() {
        let f = pump_field();
        let w = f.config.beam_radius_wp;
        let peak = f.transverse_spectrum(0.0, 0.0);
        assert_relative_eq!(peak, w / (2.0 * std::f64::consts::PI).sqrt(), max_relative = 1e-14);
        let v = f.transverse_spectrum(2.0 / w, 0.0);
        assert_relative_eq!(v, peak * (-1.0f64).exp(), max_relative = 1e-12);
    }

    #[test]
    fn squared_transverse_spectrum_integrates_to_unity() {
        // independent 2D quadrature oracle over the transverse plane
        let f = pump_field();
        let w = f.config.beam_radius_wp;
        let half = 8.0 / w;
        let n = 400;
        let h = 2.0 * half / n as f64;
        let mut total = 0.0;
        for i in 0..n {
            let kx = -half + (i as f64 + 0.5) * h;
            for j in 0..n {
                let ky = -half + (j as f64 + 0.5) * h;
                let a = f.transverse_spectrum(kx, ky);
                total += a * a * h * h;
            }
        }
        // closed form: (w^2/2pi) * Int exp(-w^2 k^2/2) d^2k = 1
        assert_relative_eq!(total, 1.0, max_relative = 1e-6);
    }
}
