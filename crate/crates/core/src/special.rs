//! Special functions: Bernoulli numbers, complex log-gamma and digamma,
//! real trigamma and the logarithmic integral.

use crate::consts::EULER_GAMMA;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Even-index Bernoulli numbers `B_2, B_4, ..., B_30`.
pub const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// `B_{2k}` for `1 <= k <= 15`.
pub fn bernoulli_2k(k: usize) -> f64 {
    BERNOULLI_EVEN[k - 1]
}

/// `B_{2k} / (2k)!` for `1 <= k <= 15`, computed once.
pub fn bernoulli_over_factorial() -> &'static [f64; 15] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<[f64; 15]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = [0.0; 15];
        let mut fact = 1.0f64;
        for k in 1..=15 {
            fact *= (2 * k - 1) as f64 * (2 * k) as f64;
            out[k - 1] = BERNOULLI_EVEN[k - 1] / fact;
        }
        out
    })
}

const SHIFT_TARGET: f64 = 15.0;

/// Principal branch of `log Γ(z)`, continuous off the negative real axis.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // reflection: Γ(z)Γ(1-z) = π / sin(πz)
        let s = (Complex64::new(PI, 0.0) * z).sin();
        return Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma(Complex64::new(1.0, 0.0) - z);
    }
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() < SHIFT_TARGET {
        shift += w.ln();
        w += 1.0;
    }
    // Stirling series
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for k in 1..=10 {
        let b = bernoulli_2k(k);
        series += pow * (b / ((2 * k) as f64 * (2 * k - 1) as f64));
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series - shift
}

/// Digamma `Γ'/Γ(z)` for `Re z > 0`.
pub fn digamma(z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() < SHIFT_TARGET {
        acc -= w.inv();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv2;
    for k in 1..=10 {
        series += pow * (bernoulli_2k(k) / (2 * k) as f64);
        pow *= inv2;
    }
    acc + w.ln() - 0.5 * inv - series
}

/// Real digamma.
pub fn digamma_real(x: f64) -> f64 {
    digamma(Complex64::new(x, 0.0)).re
}

/// Trigamma `ψ'(x)` for real `x > 0`.
pub fn trigamma(x: f64) -> f64 {
    assert!(x > 0.0, "trigamma needs x > 0");
    let mut acc = 0.0;
    let mut w = x;
    while w < SHIFT_TARGET {
        acc += 1.0 / (w * w);
        w += 1.0;
    }
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut series = inv + 0.5 * inv2;
    let mut pow = inv2 * inv;
    for k in 1..=10 {
        series += bernoulli_2k(k) * pow;
        pow *= inv2;
    }
    acc + series
}

/// Logarithmic integral `li(x)` for `x > 1` (Ramanujan's series).
pub fn li(x: f64) -> f64 {
    assert!(x > 1.0, "li needs x > 1");
    let l = x.ln();
    let mut sum = 0.0;
    let mut term = 1.0; // (ln x)^n / (n! 2^{n-1}) with sign
    let mut inner = 0.0;
    for n in 1..400 {
        term *= l / n as f64;
        if n > 1 {
            term /= 2.0;
        }
        if (n - 1) % 2 == 0 {
            inner += 1.0 / (n as f64);
        }
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let add = sign * term * inner;
        sum += add;
        if add.abs() < 1e-17 * sum.abs() && n > 2 * l as usize {
            break;
        }
    }
    EULER_GAMMA + l.ln() + x.sqrt() * sum
}

/// `(e^z - 1)/z` with the removable singularity at 0 handled.
pub fn exprel(z: Complex64) -> Complex64 {
    if z.norm() < 1e-3 {
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for k in 2..10 {
            term *= z / k as f64;
            sum += term;
        }
        sum
    } else {
        (z.exp() - 1.0) / z
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts::CATALAN;
    use approx::assert_relative_eq;

    #[test]
    fn gamma_at_integers_and_half() {
        assert_relative_eq!(ln_gamma(Complex64::new(5.0, 0.0)).re, 24f64.ln(), epsilon = 1e-13);
        assert_relative_eq!(ln_gamma(Complex64::new(0.5, 0.0)).re, 0.5 * PI.ln(), epsilon = 1e-13);
    }

    #[test]
    fn gamma_recurrence_complex() {
        let z = Complex64::new(0.25, 37.5);
        let lhs = ln_gamma(z + 1.0);
        let rhs = ln_gamma(z) + z.ln();
        assert!((lhs - rhs).norm() < 1e-11);
    }

    #[test]
    fn digamma_one_is_minus_gamma() {
        assert_relative_eq!(digamma_real(1.0), -EULER_GAMMA, epsilon = 1e-14);
        // ψ(1/2) = -γ - 2 log 2
        assert_relative_eq!(digamma_real(0.5), -EULER_GAMMA - 2.0 * 2f64.ln(), epsilon = 1e-13);
    }

    #[test]
    fn digamma_matches_lngamma_difference() {
        let z = Complex64::new(0.7, 12.0);
        let h = 1e-5;
        let fd = (ln_gamma(z + h) - ln_gamma(z - h)) / (2.0 * h);
        assert!((fd - digamma(z)).norm() < 1e-8);
    }

    #[test]
    fn trigamma_quarter_closed_form() {
        assert_relative_eq!(trigamma(0.25), PI * PI + 8.0 * CATALAN, epsilon = 1e-12);
        assert_relative_eq!(trigamma(1.0), PI * PI / 6.0, epsilon = 1e-13);
    }

    #[test]
    fn li_reference_values() {
        // li(10^6) = 78627.549159..., li(2) = 1.045163780117...
        assert_relative_eq!(li(1e6), 78627.549159462, max_relative = 1e-11);
        assert_relative_eq!(li(2.0), 1.045163780117493, max_relative = 1e-12);
    }
}
