//! Built-in parameterized Weierstrass data with expected-invariant
//! tables: the classical model surfaces, the sharp ramification and
//! unicity configurations, and the hyperplane-omission generator.

use crate::algebra::divisor::SpherePoint;
use crate::algebra::poly::Polynomial;
use crate::algebra::ratfunc::RationalFunction;
use crate::algebra::scalar::{rat_i64, ComplexScalar, Rat};
use crate::curves::{sharp_omission_construction, verify_rn, SharpOmissionData};
use crate::error::{Error, Result};
use crate::periods::{classify, SurfaceClass};
use crate::theorems::{shared_values, verify_r3, verify_r4, RValue, RatioR, UnicityKind};
use crate::tol::Tolerances;
use crate::weierstrass::{form_from_polys, PuncturedSphere, WData, WData3, WData4};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryFlag {
    /// data outside the rational machinery; listed for completeness
    Transcendental,
    /// positive-genus entry kept as a documentation table only
    Bookkeeping,
}

#[derive(Clone, Debug)]
pub enum EntryData {
    Single(WData),
    Pair { a: WData, b: WData, kind: UnicityKind },
    Arrangement(Box<SharpOmissionData>),
    /// flagged entries carry no analyzable data
    Documentation,
}

/// Expected invariants, checked by `validate_entry` / the acceptance
/// suite. `None` means "not applicable to this entry".
#[derive(Clone, Debug, Default)]
pub struct Expected {
    pub d_g: Option<usize>,
    pub nu_g: Option<Rat>,
    pub degree: Option<usize>,
    pub genus: i64,
    pub k: usize,
    pub r: Option<RValue>,
    /// total curvature divided by π
    pub tau_over_pi: Option<i64>,
    pub periods_pass: Option<bool>,
    pub class: Option<SurfaceClass>,
    /// unicity entries: shared-value count per compared component
    pub shared_value_count: Option<usize>,
    /// arrangement entries: number of hyperplanes
    pub hyperplane_count: Option<usize>,
    pub mode: Option<Mode>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub data: EntryData,
    /// exact scalar-normalized Gauss data for value-distribution
    /// checks when the primary data needs float scalars
    pub normalized: Option<WData>,
    pub expected: Expected,
    pub flags: Vec<EntryFlag>,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct EntrySummary {
    pub name: &'static str,
    pub flags: Vec<EntryFlag>,
    pub summary: &'static str,
}

pub fn list() -> Vec<EntrySummary> {
    vec![
        EntrySummary { name: "catenoid", flags: vec![], summary: "(dz/z^2, z) on the twice-punctured sphere" },
        EntrySummary { name: "costa", flags: vec![EntryFlag::Bookkeeping], summary: "genus-1 torus data (p(z)dz, p/p'); documentation table only" },
        EntrySummary { name: "enneper", flags: vec![], summary: "(dz, z) on the plane" },
        EntrySummary { name: "fujimoto", flags: vec![], summary: "odd-dimension data whose Gauss map omits n(n+1)/2 hyperplanes in general position" },
        EntrySummary { name: "helicoid", flags: vec![EntryFlag::Transcendental], summary: "(e^{-z}dz, i e^z); transcendental, outside the rational machinery" },
        EntrySummary { name: "jorge-meeks", flags: vec![], summary: "(dz/(z^r-1)^2, z^{r-1}) punctured at the r-th roots of unity" },
        EntrySummary { name: "kawakami", flags: vec![], summary: "R4 data (dz/z^3, z, c) with one constant component" },
        EntrySummary { name: "miyaoka-sato", flags: vec![], summary: "two-value-omitting algebraic data with sigma^2 < 0" },
        EntrySummary { name: "mo-osserman-45", flags: vec![], summary: "R4 data (dz/prod(z-a_i), z, z), both components omit four values" },
        EntrySummary { name: "mo-osserman-46", flags: vec![], summary: "R4 data (dz/prod(z-a_i), z, 0), one constant component" },
        EntrySummary { name: "unicity-r3", flags: vec![], summary: "pair (z vs 1/z) sharing six values on a four-punctured sphere" },
        EntrySummary { name: "unicity-r4", flags: vec![], summary: "R4 pair (z,z) vs (1/z,1/z) sharing six values per component" },
        EntrySummary { name: "unicity-r4-onedeg", flags: vec![], summary: "R4 pair (z,0) vs (w^2 z,0) sharing five values, w a cube root of unity" },
        EntrySummary { name: "voss", flags: vec![], summary: "(dz/prod(z-a_j), z): complete, periods fail, Gauss map omits k values" },
    ]
}

pub fn names() -> Vec<&'static str> {
    list().into_iter().map(|e| e.name).collect()
}

fn param<'a>(params: &'a [(String, String)], key: &str) -> Option<&'a str> {
    params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
}

fn param_i64(params: &[(String, String)], key: &str, default: i64) -> Result<i64> {
    match param(params, key) {
        None => Ok(default),
        Some(v) => v
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("{}={} is not an integer", key, v))),
    }
}

fn param_list(params: &[(String, String)], key: &str, default: &[i64]) -> Result<Vec<i64>> {
    match param(params, key) {
        None => Ok(default.to_vec()),
        Some(v) => v
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("{}={} is not an integer list", key, v)))
            })
            .collect(),
    }
}

fn sphere_points_i64(finite: &[i64], with_infinity: bool) -> Result<PuncturedSphere> {
    let mut pts: Vec<SpherePoint> = finite.iter().map(|&v| SpherePoint::from_int(v)).collect();
    if with_infinity {
        pts.push(SpherePoint::infinity());
    }
    PuncturedSphere::new(pts, 0)
}

fn rational(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
    RationalFunction::new(num, den)
}

fn primitive_root(r: usize, j: usize) -> ComplexScalar {
    match (r, j % r) {
        (_, 0) => ComplexScalar::one(),
        (3, 1) | (3, 2) => {
            // (−1 ± i√3)/2, exact in the √-3 extension
            let s = ComplexScalar::from_int(-3).sqrt();
            let sign = if j % 3 == 1 { s } else { -&s };
            &(&ComplexScalar::from_int(-1) + &sign) * &ComplexScalar::from_frac(1, 2)
        }
        (4, 1) => ComplexScalar::i(),
        (4, 2) => ComplexScalar::from_int(-1),
        (4, 3) => -&ComplexScalar::i(),
        _ => {
            let th = 2.0 * std::f64::consts::PI * (j % r) as f64 / r as f64;
            ComplexScalar::from_c64(num_complex::Complex::from_polar(1.0, th))
        }
    }
}

fn entry(
    name: &str,
    params: Vec<(String, String)>,
    data: EntryData,
    expected: Expected,
    flags: Vec<EntryFlag>,
    note: &str,
) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        params,
        data,
        normalized: None,
        expected,
        flags,
        note: note.into(),
    }
}

/// Build a catalog entry by name. Parameters are string key/value
/// pairs (integers or comma-separated integer lists).
pub fn get(name: &str, params: &[(String, String)], tol: &Tolerances) -> Result<CatalogEntry> {
    match name {
        "enneper" => {
            let d = WData3 {
                domain: PuncturedSphere::new(vec![SpherePoint::infinity()], 0)?,
                h_form: form_from_polys(Polynomial::one(), Polynomial::one())?,
                g: RationalFunction::var(),
            };
            Ok(entry(
                name,
                vec![],
                EntryData::Single(WData::R3(d)),
                Expected {
                    d_g: Some(1),
                    nu_g: Some(rat_i64(1)),
                    degree: Some(1),
                    genus: 0,
                    k: 1,
                    r: Some(RValue::NonHyperbolic),
                    tau_over_pi: Some(-4),
                    periods_pass: Some(true),
                    class: Some(SurfaceClass::Algebraic),
                    mode: Some(Mode::Exact),
                    ..Expected::default()
                },
                vec![],
                "simplest nonplanar data (dz, z); one non-hyperbolic end",
            ))
        }
        "catenoid" => {
            let d = WData3 {
                domain: sphere_points_i64(&[0], true)?,
                h_form: form_from_polys(Polynomial::one(), Polynomial::from_i64(&[0, 0, 1]))?,
                g: RationalFunction::var(),
            };
            Ok(entry(
                name,
                vec![],
                EntryData::Single(WData::R3(d)),
                Expected {
                    d_g: Some(2),
                    nu_g: Some(rat_i64(2)),
                    degree: Some(1),
                    genus: 0,
                    k: 2,
                    r: Some(RValue::Infinite),
                    tau_over_pi: Some(-4),
                    periods_pass: Some(true),
                    class: Some(SurfaceClass::Algebraic),
                    mode: Some(Mode::Exact),
                    ..Expected::default()
                },
                vec![],
                "(dz/z^2, z) on the twice-punctured sphere; Gauss map omits 0 and infinity",
            ))
        }
        "helicoid" => Ok(entry(
            name,
            vec![],
            EntryData::Documentation,
            Expected {
                d_g: Some(2),
                genus: 0,
                k: 1,
                mode: Some(Mode::Float),
                ..Expected::default()
            },
            vec![EntryFlag::Transcendental],
            "(e^{-z}dz, i e^z) on the plane: infinite total curvature, two omitted values; \
             transcendental coefficients are outside the rational analyzers",
        )),
        "jorge-meeks" => {
            let r = param_i64(params, "r", 3)?;
            if r < 2 {
                return Err(Error::InvalidParameter("jorge-meeks requires r >= 2".into()));
            }
            let r = r as usize;
            let punctures: Vec<SpherePoint> = (0..r)
                .map(|j| SpherePoint::Finite(primitive_root(r, j)))
                .collect();
            let mut zr = vec![ComplexScalar::from_int(-1)];
            zr.extend((1..r).map(|_| ComplexScalar::zero()));
            zr.push(ComplexScalar::one());
            let zr1 = Polynomial::new(zr);
            let d = WData3 {
                domain: PuncturedSphere::new(punctures, 0)?,
                h_form: form_from_polys(Polynomial::one(), &zr1 * &zr1)?,
                g: RationalFunction::new(
                    Polynomial::monomial(ComplexScalar::one(), r - 1),
                    Polynomial::one(),
                )?,
            };
            let deg = r - 1;
            // values 0 and ∞ are each taken only at the full-order
            // branch points 0 and ∞ of z^{r−1}, both inside M
            let nu = rat_i64(2) * (rat_i64(1) - rat_i64(1) / rat_i64(deg as i64));
            Ok(entry(
                name,
                vec![("r".into(), r.to_string())],
                EntryData::Single(WData::R3(d)),
                Expected {
                    d_g: Some(if r >= 3 { 0 } else { 2 }),
                    nu_g: Some(nu),
                    degree: Some(deg),
                    genus: 0,
                    k: r,
                    r: Some(RatioR::r3(deg, 0, r).value()),
                    tau_over_pi: Some(-4 * deg as i64),
                    periods_pass: Some(true),
                    class: Some(SurfaceClass::Algebraic),
                    mode: Some(if r <= 4 { Mode::Exact } else { Mode::Float }),
                    ..Expected::default()
                },
                vec![],
                "(dz/(z^r-1)^2, z^{r-1}) punctured at the r-th roots of unity; \
                 no omitted values for r >= 3",
            ))
        }
        "voss" => {
            let k = param_i64(params, "k", 3)?;
            if !(k == 3 || k == 4) {
                return Err(Error::InvalidParameter("voss requires k in {3, 4}".into()));
            }
            let defaults: Vec<i64> = (1..k).collect();
            let a = param_list(params, "a", &defaults)?;
            if a.len() != (k - 1) as usize {
                return Err(Error::InvalidParameter(format!(
                    "voss with k={} needs {} finite punctures",
                    k,
                    k - 1
                )));
            }
            let roots: Vec<ComplexScalar> = a.iter().map(|&v| ComplexScalar::from_int(v)).collect();
            let d = WData3 {
                domain: sphere_points_i64(&a, true)?,
                h_form: form_from_polys(Polynomial::one(), Polynomial::from_roots(&roots))?,
                g: RationalFunction::var(),
            };
            let ku = k as usize;
            Ok(entry(
                name,
                vec![
                    ("k".into(), k.to_string()),
                    ("a".into(), a.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")),
                ],
                EntryData::Single(WData::R3(d)),
                Expected {
                    d_g: Some(ku),
                    nu_g: Some(rat_i64(k)),
                    degree: Some(1),
                    genus: 0,
                    k: ku,
                    r: Some(RatioR::r3(1, 0, ku).value()),
                    tau_over_pi: None,
                    periods_pass: Some(false),
                    class: Some(SurfaceClass::PseudoAlgebraic),
                    mode: Some(Mode::Exact),
                    ..Expected::default()
                },
                vec![],
                "(dz/prod(z-a_j), z): complete with failing periods; the Gauss map \
                 omits the punctures and infinity",
            ))
        }
        "miyaoka-sato" => {
            let a = param_i64(params, "a", -1)?;
            let t = param_i64(params, "t", 2)?;
            if (a - 1) * (t - 1) == 0 {
                return Err(Error::InvalidParameter(
                    "miyaoka-sato requires (a-1)(t-1) != 0".into(),
                ));
            }
            let denom = a * ((t - 1) * a + 4);
            if denom == 0 {
                return Err(Error::InvalidParameter("sigma^2 denominator vanishes".into()));
            }
            let sigma2 = Rat::new((t + 3).into(), denom.into());
            if sigma2 >= rat_i64(0) {
                return Err(Error::InvalidParameter(format!(
                    "miyaoka-sato requires sigma^2 < 0, got {}",
                    sigma2
                )));
            }
            let sigma = ComplexScalar::from_gauss(sigma2, rat_i64(0)).sqrt();
            // punctures ±i and ∞; g-poles ±sqrt(−t) lie inside M and are
            // matched by the double zeros of h there
            let domain = PuncturedSphere::new(
                vec![
                    SpherePoint::Finite(ComplexScalar::i()),
                    SpherePoint::Finite(-&ComplexScalar::i()),
                    SpherePoint::infinity(),
                ],
                0,
            )?;
            let g_num = Polynomial::new(vec![
                ComplexScalar::from_int(1 + a * (t - 1)),
                ComplexScalar::zero(),
                ComplexScalar::one(),
            ]);
            let g_den = Polynomial::new(vec![
                ComplexScalar::from_int(t),
                ComplexScalar::zero(),
                ComplexScalar::one(),
            ]);
            let z2p1 = Polynomial::from_i64(&[1, 0, 1]);
            let h = form_from_polys(&g_den * &g_den, &z2p1 * &z2p1)?;
            let data = WData3 {
                domain: domain.clone(),
                h_form: h.clone(),
                g: rational(g_num.scale(&sigma), g_den.clone())?,
            };
            let normalized = WData3 { domain, h_form: h, g: rational(g_num, g_den)? };
            let mut e = entry(
                name,
                vec![("a".into(), a.to_string()), ("t".into(), t.to_string())],
                EntryData::Single(WData::R3(data)),
                Expected {
                    d_g: Some(2),
                    nu_g: Some(Rat::new(5.into(), 2.into())),
                    degree: Some(2),
                    genus: 0,
                    k: 3,
                    r: Some(RValue::Finite(rat_i64(4))),
                    tau_over_pi: Some(-8),
                    periods_pass: Some(true),
                    class: Some(SurfaceClass::Algebraic),
                    mode: Some(Mode::Float),
                    ..Expected::default()
                },
                vec![],
                "algebraic data omitting the two values sigma and a*sigma; stored with \
                 the sigma scale on g and in scalar-normalized exact form",
            );
            e.normalized = Some(WData::R3(normalized));
            Ok(e)
        }
        "costa" => Ok(entry(
            name,
            vec![],
            EntryData::Documentation,
            Expected {
                d_g: Some(1),
                genus: 1,
                k: 3,
                tau_over_pi: Some(-12),
                mode: Some(Mode::Float),
                ..Expected::default()
            },
            vec![EntryFlag::Bookkeeping],
            "square-torus data (p(z)dz, p/p') with three punctures; genus-1 entries \
             are documented but not analyzed by the genus-0 machinery",
        )),
        "mo-osserman-45" => {
            let a = param_list(params, "a", &[1, 2, 3])?;
            if a.len() != 3 {
                return Err(Error::InvalidParameter("mo-osserman-45 needs 3 punctures".into()));
            }
            let roots: Vec<ComplexScalar> = a.iter().map(|&v| ComplexScalar::from_int(v)).collect();
            let d = WData4 {
                domain: sphere_points_i64(&a, true)?,
                h_form: form_from_polys(Polynomial::one(), Polynomial::from_roots(&roots))?,
                g1: RationalFunction::var(),
                g2: RationalFunction::var(),
            };
            Ok(entry(
                name,
                vec![("a".into(), a.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))],
                EntryData::Single(WData::R4(d)),
                Expected {
                    d_g: Some(4),
                    nu_g: Some(rat_i64(4)),
                    degree: Some(1),
                    genus: 0,
                    k: 4,
                    periods_pass: Some(false),
                    class: Some(SurfaceClass::PseudoAlgebraic),
                    mode: Some(Mode::Exact),
                    ..Expected::default()
                },
                vec![],
                "(dz/prod(z-a_i), z, z): both components omit the three punctures and \
                 infinity; the reciprocal-sum bound is met with equality",
            ))
        }
        "mo-osserman-46" => {
            let a = param_list(params, "a", &[1, 2])?;
            if a.len() != 2 {
                return Err(Error::InvalidParameter("mo-osserman-46 needs 2 punctures".into()));
            }
            let roots: Vec<ComplexScalar> = a.iter().map(|&v| ComplexScalar::from_int(v)).collect();
            let d = WData4 {
                domain: sphere_points_i64(&a, true)?,
                h_form: form_from_polys(Polynomial::one(), Polynomial::from_roots(&roots))?,
                g1: RationalFunction::var(),
                g2: RationalFunction::from_poly(Polynomial::zero()),
            };
            Ok(entry(
                name,
                vec![("a".into(), a.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))],
                EntryData::Single(WData::R4(d)),
                Expected {
                    d_g: Some(3),
                    nu_g: Some(rat_i64(3)),
                    degree: Some(1),
                    genus: 0,
                    k: 3,
                    periods_pass: Some(false),
                    class: Some(SurfaceClass::PseudoAlgebraic),
                    mode: Some(Mode::Exact),
                    ..Expected::default()
                },
                vec![],
                "(dz/prod(z-a_i), z, 0): one constant component; the nonconstant one \
                 omits the two punctures and infinity",
            ))
        }
        "kawakami" => {
            let c = param_i64(params, "c", 2)?;
            let d = WData4 {
                domain: sphere_points_i64(&[0], true)?,
                h_form: form_from_polys(Polynomial::one(), Polynomial::from_i64(&[0, 0, 0, 1]))?,
                g1: RationalFunction::var(),
                g2: RationalFunction::from_poly(Polynomial::from_i64(&[c])),
            };
            Ok(entry(
                name,
                vec![("c".into(), c.to_string())],
                EntryData::Single(WData::R4(d)),
                Expected {
                    d_g: Some(2),
                    nu_g: Some(rat_i64(2)),
                    degree: Some(1),
                    genus: 0,
                    k: 2,
                    class: Some(SurfaceClass::NotComplete),
                    mode: Some(Mode::Exact),
                    ..Expected::default()
                },
                vec![],
                "(dz/z^3, z, c): one constant component, the other omits 0 and \
                 infinity and meets the raw ramification bound with equality; the \
                 metric has finite length toward infinity (the immersion extends \
                 regularly across it), so that end is removable rather than complete",
            ))
        }
        "unicity-r3" => {
            let alpha = param_i64(params, "alpha", 2)?;
            if alpha == 0 || alpha == 1 || alpha == -1 {
                return Err(Error::InvalidParameter("unicity-r3 requires alpha != 0, +-1".into()));
            }
            // punctures {0, α, 1/α, ∞}
            let inv_a = ComplexScalar::from_frac(1, alpha);
            let domain = PuncturedSphere::new(
                vec![
                    SpherePoint::from_int(0),
                    SpherePoint::from_int(alpha),
                    SpherePoint::Finite(inv_a.clone()),
                    SpherePoint::infinity(),
                ],
                0,
            )?;
            let la = Polynomial::from_i64(&[-alpha, 1]);
            let lb = Polynomial::from_i64(&[-1, alpha]);
            let z2 = Polynomial::from_i64(&[0, 0, 1]);
            let a = WData3 {
                domain: domain.clone(),
                h_form: form_from_polys(Polynomial::one(), &(&z2 * &la) * &lb)?,
                g: RationalFunction::var(),
            };
            let b = WData3 {
                domain,
                h_form: form_from_polys(z2, &la * &lb)?,
                g: rational(Polynomial::one(), Polynomial::var())?,
            };
            Ok(entry(
                name,
                vec![("alpha".into(), alpha.to_string())],
                EntryData::Pair { a: WData::R3(a), b: WData::R3(b), kind: UnicityKind::R3 },
                Expected {
                    degree: Some(1),
                    genus: 0,
                    k: 4,
                    r: Some(RValue::Finite(rat_i64(1))),
                    shared_value_count: Some(6),
                    mode: Some(Mode::Exact),
                    ..Expected::default()
                },
                vec![],
                "Gauss maps z and 1/z on the sphere punctured at {0, alpha, 1/alpha, \
                 infinity} share six values, meeting the bound 4 + 2/R with equality",
            ))
        }
        "unicity-r4" => {
            let alpha = param_i64(params, "alpha", 2)?;
            if alpha == 0 || alpha == 1 || alpha == -1 {
                return Err(Error::InvalidParameter("unicity-r4 requires alpha != 0, +-1".into()));
            }
            let inv_a = ComplexScalar::from_frac(1, alpha);
            let domain = PuncturedSphere::new(
                vec![
                    SpherePoint::from_int(0),
                    SpherePoint::from_int(alpha),
                    SpherePoint::Finite(inv_a.clone()),
                    SpherePoint::infinity(),
                ],
                0,
            )?;
            let la = Polynomial::from_i64(&[-alpha, 1]);
            let lb = Polynomial::from_i64(&[-1, alpha]);
            let z = Polynomial::var();
            let a = WData4 {
                domain: domain.clone(),
                h_form: form_from_polys(Polynomial::one(), &(&z * &la) * &lb)?,
                g1: RationalFunction::var(),
                g2: RationalFunction::var(),
            };
            let inv = rational(Polynomial::one(), Polynomial::var())?;
            let b = WData4 {
                domain,
                h_form: form_from_polys(z, &la * &lb)?,
                g1: inv.clone(),
                g2: inv,
            };
            Ok(entry(
                name,
                vec![("alpha".into(), alpha.to_string())],
                EntryData::Pair { a: WData::R4(a), b: WData::R4(b), kind: UnicityKind::R4 },
                Expected {
                    degree: Some(1),
                    genus: 0,
                    k: 4,
                    shared_value_count: Some(6),
                    mode: Some(Mode::Exact),
                    ..Expected::default()
                },
                vec![],
                "component maps z and 1/z share six values each on the sphere punctured \
                 at {0, alpha, 1/alpha, infinity}; the reciprocal bound is met with equality",
            ))
        }
        "unicity-r4-onedeg" => {
            // punctures at the cube roots of unity; compare z with w²z
            let punctures: Vec<SpherePoint> =
                (0..3).map(|j| SpherePoint::Finite(primitive_root(3, j))).collect();
            let domain = PuncturedSphere::new(punctures, 0)?;
            let h = form_from_polys(Polynomial::one(), Polynomial::from_i64(&[-1, 0, 0, 1]))?;
            let a = WData4 {
                domain: domain.clone(),
                h_form: h.clone(),
                g1: RationalFunction::var(),
                g2: RationalFunction::from_poly(Polynomial::zero()),
            };
            let w2 = primitive_root(3, 2);
            let b = WData4 {
                domain,
                h_form: h,
                g1: RationalFunction::from_poly(Polynomial::new(vec![ComplexScalar::zero(), w2])),
                g2: RationalFunction::from_poly(Polynomial::zero()),
            };
            Ok(entry(
                name,
                vec![],
                EntryData::Pair { a: WData::R4(a), b: WData::R4(b), kind: UnicityKind::R4 },
                Expected {
                    degree: Some(1),
                    genus: 0,
                    k: 3,
                    r: Some(RValue::Finite(rat_i64(1))),
                    shared_value_count: Some(5),
                    mode: Some(Mode::Exact),
                    ..Expected::default()
                },
                vec![],
                "one-degenerate pair: z and w^2·z (w a primitive cube root of unity) on \
                 the sphere punctured at the cube roots of unity share five values, \
                 meeting 4 + 1/R with equality",
            ))
        }
        "fujimoto" => {
            let n = param_i64(params, "n", 3)?;
            if n < 3 || n % 2 == 0 {
                return Err(Error::InvalidParameter("fujimoto requires odd n >= 3".into()));
            }
            let n = n as usize;
            let arrangement = sharp_omission_construction(n, tol)?;
            let k = arrangement.data.domain.k();
            Ok(entry(
                name,
                vec![("n".into(), n.to_string())],
                EntryData::Arrangement(Box::new(arrangement)),
                Expected {
                    genus: 0,
                    k,
                    hyperplane_count: Some(n * (n + 1) / 2),
                    mode: Some(Mode::Exact),
                    ..Expected::default()
                },
                vec![],
                "data in odd ambient dimension whose Gauss map omits a maximal family \
                 of hyperplanes in general position",
            ))
        }
        other => Err(Error::UnknownEntry(other.into())),
    }
}

/// Run the analyzers against the entry's expected table; returns the
/// list of mismatches (empty = pass). Total-curvature quadrature is
/// checked separately (it is the only slow column). Flagged entries
/// validate trivially.
pub fn validate_entry(e: &CatalogEntry, tol: &Tolerances) -> Result<Vec<String>> {
    let mut bad = vec![];
    let mut check = |name: &str, ok: bool| {
        if !ok {
            bad.push(name.to_string());
        }
    };
    match &e.data {
        EntryData::Documentation => {}
        EntryData::Single(d) => {
            check("k", d.domain().k() == e.expected.k);
            check("genus", d.domain().genus() == e.expected.genus);
            let profile_data = e.normalized.as_ref().unwrap_or(d);
            match profile_data {
                WData::R3(d3) => {
                    let v = verify_r3(d3, tol)?;
                    if let Some(dg) = e.expected.d_g {
                        check("d_g", v.profile.d_g == dg);
                    }
                    if let Some(nu) = &e.expected.nu_g {
                        check("nu_g", &v.profile.nu_g == nu);
                    }
                    if let Some(deg) = e.expected.degree {
                        check("degree", v.profile.degree == deg);
                    }
                    if let Some(r) = &e.expected.r {
                        check("R", &v.ratio.value() == r);
                    }
                    check("inequalities", v.report.all_pass());
                }
                WData::R4(d4) => {
                    let v = verify_r4(d4, tol)?;
                    let p = v.profiles.iter().flatten().next();
                    if let (Some(p), Some(dg)) = (p, e.expected.d_g) {
                        check("d_g", p.d_g == dg);
                    }
                    if let (Some(p), Some(nu)) = (p, &e.expected.nu_g) {
                        check("nu_g", &p.nu_g == nu);
                    }
                    check("inequalities", v.report.all_pass());
                }
                WData::RN(_) => {}
            }
            let cls = classify(d, tol)?;
            if let Some(expect) = &e.expected.class {
                check("classification", &cls.class == expect);
            }
            if let Some(pp) = e.expected.periods_pass {
                check(
                    "periods",
                    cls.periods.as_ref().map(|p| p.pass).unwrap_or(true) == pp,
                );
            }
        }
        EntryData::Pair { a, b, kind } => {
            let ga = |d: &WData| -> Vec<RationalFunction> {
                match d {
                    WData::R3(d3) => vec![d3.g.clone()],
                    WData::R4(d4) => vec![d4.g1.clone(), d4.g2.clone()],
                    WData::RN(_) => vec![],
                }
            };
            let (gas, gbs) = (ga(a), ga(b));
            let mut compared = 0;
            for (x, y) in gas.iter().zip(&gbs) {
                if x == y || x.is_constant() || y.is_constant() {
                    continue;
                }
                compared += 1;
                let rep = shared_values(x, y, a.domain(), *kind, tol)?;
                if let Some(q) = e.expected.shared_value_count {
                    check("shared_value_count", rep.q == q);
                }
                check("unicity_inequalities", rep.report.all_pass());
            }
            check("compared_components", compared > 0);
        }
        EntryData::Arrangement(arr) => {
            if let Some(count) = e.expected.hyperplane_count {
                check("hyperplane_count", arr.hyperplanes.len() == count);
            }
            let v = verify_rn(&arr.data, &arr.hyperplanes, tol)?;
            check("general_position", v.general_position);
            check("inequalities", v.report.all_pass());
        }
    }
    Ok(bad)
}
