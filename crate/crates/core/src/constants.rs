//! Physical constants (SI, CODATA 2018).

/// Speed of light in vacuum [m/s].
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;

/// Vacuum permittivity [F/m].
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;

/// Reduced Planck constant [J s].
pub const REDUCED_PLANCK: f64 = 1.054_571_817e-34;

/// Converts a vacuum wavelength [m] to angular frequency [rad/s].
pub fn wavelength_to_omega(lambda: f64) -> f64 {
    2.0 * std::f64::consts::PI * SPEED_OF_LIGHT / lambda
}

/// Converts an angular frequency [rad/s] to vacuum wavelength [m].
pub fn omega_to_wavelength(omega: f64) -> f64 {
    2.0 * std::f64::consts::PI * SPEED_OF_LIGHT / omega
}
