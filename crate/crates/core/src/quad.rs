//! One-dimensional quadrature: Gauss–Legendre panels, tanh-sinh and adaptive
//! Gauss–Kronrod (7/15).

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let legendre = |z: f64| {
            let mut p0 = 1.0;
            let mut p1 = 0.0;
            for j in 0..n {
                let p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) as f64 * z * p1 - j as f64 * p2) / (j + 1) as f64;
            }
            (p0, n as f64 * (z * p0 - p1) / (z * z - 1.0))
        };
        for _ in 0..100 {
            let (p, dp) = legendre(z);
            let dz = p / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let dp = legendre(z).1;
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// Fixed Gauss–Legendre rule, reusable across integrals.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        let (nodes, weights) = gauss_legendre(n);
        Self { nodes, weights }
    }

    /// Integral of `f` over `[a, b]` with a single panel.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F, a: f64, b: f64) -> f64 {
        let h = 0.5 * (b - a);
        let c = 0.5 * (b + a);
        let mut s = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            s += w * f(c + h * x);
        }
        s * h
    }

    /// Composite rule with `panels` equal subintervals.
    pub fn integrate_panels<F: FnMut(f64) -> f64>(&self, mut f: F, a: f64, b: f64, panels: usize) -> f64 {
        let step = (b - a) / panels as f64;
        (0..panels)
            .map(|k| {
                let lo = a + k as f64 * step;
                self.integrate(&mut f, lo, lo + step)
            })
            .sum()
    }
}

/// Tanh-sinh (double exponential) quadrature on a finite interval; tolerates
/// integrable endpoint singularities.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    let half = 0.5 * (b - a);
    let tmax = 3.5;
    let mut h = 0.5;
    let eval = |t: f64| -> f64 {
        let u = 0.5 * PI * t.sinh();
        let ch = u.cosh();
        let w = 0.5 * PI * t.cosh() / (ch * ch);
        // distance to the nearest endpoint, computed without cancellation
        let d = half / (u.abs().exp() * ch);
        let pt = if u >= 0.0 { b - d } else { a + d };
        if d <= 0.0 || !(pt > a && pt < b) {
            return 0.0;
        }
        w * f(pt)
    };
    let mut sum = eval(0.0);
    let mut k = 1;
    while (k as f64) * h <= tmax {
        let t = k as f64 * h;
        sum += eval(t) + eval(-t);
        k += 1;
    }
    let mut prev = sum * h * half;
    for _level in 0..10 {
        h *= 0.5;
        let mut add = 0.0;
        let mut k = 1;
        while (k as f64) * h <= tmax {
            let t = k as f64 * h;
            add += eval(t) + eval(-t);
            k += 2;
        }
        sum += add;
        let cur = sum * h * half;
        if (cur - prev).abs() <= tol * cur.abs().max(1.0) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::QuadratureFailure(format!("tanh-sinh did not converge on [{a}, {b}]")))
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut rk = fc * WGK[7];
    let mut rg = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let s = f(c - x) + f(c + x);
        rk += WGK[j] * s;
        if j % 2 == 1 {
            rg += WG[j / 2] * s;
        }
    }
    (rk * h, ((rk - rg) * h).abs())
}

/// Adaptive Gauss–Kronrod 7/15 with global bisection of the worst interval.
pub fn adaptive_gk<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64, max_intervals: usize) -> Result<f64> {
    let mut intervals = vec![{
        let (v, e) = gk15(&f, a, b);
        (a, b, v, e)
    }];
    loop {
        let total: f64 = intervals.iter().map(|iv| iv.2).sum();
        let err: f64 = intervals.iter().map(|iv| iv.3).sum();
        if err <= abs_tol {
            return Ok(total);
        }
        if intervals.len() >= max_intervals {
            return Err(Error::QuadratureFailure(format!(
                "adaptive quadrature on [{a}, {b}] stalled at error {err:e}"
            )));
        }
        let (idx, _) = intervals
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .expect("nonempty");
        let (lo, hi, _, _) = intervals.swap_remove(idx);
        let mid = 0.5 * (lo + hi);
        let (v1, e1) = gk15(&f, lo, mid);
        let (v2, e2) = gk15(&f, mid, hi);
        intervals.push((lo, mid, v1, e1));
        intervals.push((mid, hi, v2, e2));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gauss_legendre_exact_for_polynomials() {
        let gl = GaussLegendre::new(10);
        // degree 19 is integrated exactly
        let v = gl.integrate(|x| x.powi(18) + 3.0 * x.powi(4), -1.0, 1.0);
        assert_relative_eq!(v, 2.0 / 19.0 + 6.0 / 5.0, epsilon = 1e-14);
        let s: f64 = gauss_legendre(31).1.iter().sum();
        assert_relative_eq!(s, 2.0, epsilon = 1e-13);
    }

    #[test]
    fn tanh_sinh_handles_endpoint_singularity() {
        // ∫_0^1 log(x) dx = -1, ∫_0^1 x^{-1/2} dx = 2
        assert_relative_eq!(tanh_sinh(|x| x.ln(), 0.0, 1.0, 1e-12).unwrap(), -1.0, epsilon = 1e-10);
        assert_relative_eq!(tanh_sinh(|x| 1.0 / x.sqrt(), 0.0, 1.0, 1e-12).unwrap(), 2.0, epsilon = 1e-8);
    }

    #[test]
    fn adaptive_gk_on_peaked_integrand() {
        // ∫_{-10}^{10} 0.01/(0.0001+x^2) dx = 2 atan(1000)
        let v = adaptive_gk(|x| 0.01 / (1e-4 + x * x), -10.0, 10.0, 1e-12, 2000).unwrap();
        assert_relative_eq!(v, 2.0 * 1000f64.atan(), epsilon = 1e-10);
    }
}
