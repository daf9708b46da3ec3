//! Numerical constants used by the bound formulas.

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;

/// Catalan's constant.
pub const CATALAN: f64 = 0.915_965_594_177_219_015_054_603_514_932;

pub const PI: f64 = std::f64::consts::PI;
pub const TWO_PI: f64 = 2.0 * std::f64::consts::PI;
pub const LN_2: f64 = std::f64::consts::LN_2;

/// Safety pad added to quadrature-derived constants that enter certified bounds.
pub const QUADRATURE_PAD: f64 = 1e-8;

/// Coefficient replacing the trigamma sum under the strong lambda hypothesis.
pub const TRIGAMMA_COEFF: f64 = 4.3;
