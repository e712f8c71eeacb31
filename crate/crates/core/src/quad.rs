//! Adaptive Gauss–Kronrod (G7K15) quadrature.
//!
//! One-dimensional complex-valued integrals drive residue estimation
//! (circle contours) and path integration of the forms; a nested 1D×1D
//! scheme in polar coordinates handles area integrals such as total
//! curvature. Error control: local Kronrod-minus-Gauss estimate,
//! worst-interval-first bisection, hard interval budget.

use crate::algebra::scalar::C64;
use crate::error::{Error, Result};

/// Kronrod abscissae (positive half) for G7K15, x[7] = 0.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
/// Gauss-7 weights (odd Kronrod indices).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];
/// Kronrod-15 weights.
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

/// Single G7K15 panel on [a,b]: (Kronrod value, |K − G| error estimate).
pub fn gk15<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> (C64, f64) {
    let half = 0.5 * (b - a);
    let center = 0.5 * (a + b);
    let fc = f(center);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let x = half * XGK[j];
        let fsum = f(center - x) + f(center + x);
        kron += fsum * WGK[j];
        if j % 2 == 1 {
            gauss += fsum * WG[j / 2];
        }
    }
    kron *= half;
    gauss *= half;
    ((kron), (kron - gauss).norm())
}

/// Adaptive integral of a complex-valued function over [a,b]. Bisects
/// the worst panel until the summed error estimate is below `eps_abs`
/// or the panel budget runs out (then `QuadratureBudget` carries the
/// partial real part for diagnostics).
pub fn adaptive<F: Fn(f64) -> C64>(
    f: &F,
    a: f64,
    b: f64,
    eps_abs: f64,
    max_panels: usize,
) -> Result<C64> {
    struct Panel {
        a: f64,
        b: f64,
        val: C64,
        err: f64,
    }
    let (val, err) = gk15(f, a, b);
    let mut panels = vec![Panel { a, b, val, err }];
    loop {
        let total_err: f64 = panels.iter().map(|p| p.err).sum();
        if total_err <= eps_abs {
            return Ok(panels.iter().map(|p| p.val).sum());
        }
        if panels.len() >= max_panels {
            let partial: C64 = panels.iter().map(|p| p.val).sum();
            return Err(Error::QuadratureBudget(partial.re));
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .map(|(i, _)| i)
            .unwrap();
        let Panel { a, b, .. } = panels.swap_remove(worst);
        let m = 0.5 * (a + b);
        let (v1, e1) = gk15(f, a, m);
        let (v2, e2) = gk15(f, m, b);
        panels.push(Panel { a, b: m, val: v1, err: e1 });
        panels.push(Panel { a: m, b, val: v2, err: e2 });
    }
}

/// ∮ f(z) dz counterclockwise over |z − c| = r.
pub fn circle_integral<F: Fn(C64) -> C64>(
    f: &F,
    center: C64,
    radius: f64,
    eps_abs: f64,
) -> Result<C64> {
    let two_pi = 2.0 * std::f64::consts::PI;
    adaptive(
        &|t: f64| {
            let z = center + C64::from_polar(radius, t);
            let dz = C64::new(0.0, 1.0) * C64::from_polar(radius, t);
            f(z) * dz
        },
        0.0,
        two_pi,
        eps_abs,
        4096,
    )
}

/// ∫ f(γ(t)) γ'(t) dt along the straight segment from `a` to `b`.
pub fn segment_integral<F: Fn(C64) -> C64>(f: &F, a: C64, b: C64, eps_abs: f64) -> Result<C64> {
    let d = b - a;
    adaptive(&|t: f64| f(a + d * t) * d, 0.0, 1.0, eps_abs, 4096)
}

/// ∫∫ f(r, θ) r dr dθ over [r0,r1]×[0,2π), nested adaptive 1D passes.
/// The inner θ-integral runs at a tighter tolerance than the outer
/// r-integral so its error does not dominate.
pub fn polar_area_integral<F: Fn(f64, f64) -> f64 + Sync>(
    f: &F,
    r0: f64,
    r1: f64,
    eps_abs: f64,
) -> Result<f64> {
    let two_pi = 2.0 * std::f64::consts::PI;
    let inner_eps = eps_abs / (10.0 * (r1 - r0).max(1.0));
    let outer = adaptive(
        &|r: f64| {
            let ring = adaptive(
                &|theta: f64| C64::new(f(r, theta), 0.0),
                0.0,
                two_pi,
                inner_eps,
                2048,
            )
            .map(|v| v.re)
            .unwrap_or(f64::NAN);
            C64::new(r * ring, 0.0)
        },
        r0,
        r1,
        eps_abs,
        2048,
    )?;
    if outer.re.is_nan() {
        return Err(Error::QuadratureBudget(outer.re));
    }
    Ok(outer.re)
}
