//! Polynomial root isolation.
//!
//! EXACT path: Yun square-free decomposition pins every multiplicity
//! exactly; each square-free factor is solved exactly for degree ≤ 2
//! (staying in ℚ(i)(√m) when the discriminant allows) and numerically
//! (simple roots only) otherwise. FLOAT path: Aberth–Ehrlich
//! simultaneous iteration with randomized restarts, then tolerance
//! clustering — an m-fold root of a perturbed polynomial splits by
//! O(eps^(1/m)), hence the dedicated `eps_cluster` radius.

use super::poly::Polynomial;
use super::scalar::{C64, ComplexScalar};
use crate::error::{Error, Result};
use crate::tol::Tolerances;

/// All roots of `p` in ℂ with multiplicities (∞ is the caller's
/// business). Multiplicities are exact for exact input.
pub fn poly_roots(p: &Polynomial, tol: &Tolerances) -> Result<Vec<(ComplexScalar, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(vec![]);
    }
    if p.is_exact() {
        let mut out = vec![];
        for (factor, mult) in p.squarefree_decomposition()? {
            for root in squarefree_factor_roots(&factor, tol)? {
                out.push((root, mult));
            }
        }
        Ok(out)
    } else {
        float_roots(p, tol)
    }
}

/// Roots of an exact square-free polynomial, each simple.
fn squarefree_factor_roots(f: &Polynomial, tol: &Tolerances) -> Result<Vec<ComplexScalar>> {
    match f.degree() {
        None | Some(0) => Ok(vec![]),
        Some(1) => {
            // c1 z + c0 = 0
            let r = &(-&f.coeff(0)) / &f.coeff(1);
            Ok(vec![r])
        }
        Some(2) => {
            let (a, b, c) = (f.coeff(2), f.coeff(1), f.coeff(0));
            let four_ac = &(&ComplexScalar::from_int(4) * &a) * &c;
            let disc = &(&b * &b) - &four_ac;
            let s = disc.sqrt();
            let two_a = &ComplexScalar::from_int(2) * &a;
            let r1 = &(&(-&b) + &s) / &two_a;
            let r2 = &(&(-&b) - &s) / &two_a;
            Ok(vec![r1, r2])
        }
        Some(_) => {
            let roots = aberth(&to_c64_coeffs(f), tol)?;
            Ok(roots.into_iter().map(ComplexScalar::from_c64).collect())
        }
    }
}

fn to_c64_coeffs(p: &Polynomial) -> Vec<C64> {
    p.coeffs().iter().map(|c| c.to_c64()).collect()
}

/// FLOAT path: all roots numerically, multiplicities by clustering.
fn float_roots(p: &Polynomial, tol: &Tolerances) -> Result<Vec<(ComplexScalar, usize)>> {
    let roots = aberth(&to_c64_coeffs(p), tol)?;
    let scale = roots.iter().map(|r| r.norm()).fold(1.0, f64::max);
    let radius = tol.eps_cluster * scale;

    // Greedy clustering.
    let mut clusters: Vec<Vec<C64>> = vec![];
    for r in roots {
        match clusters
            .iter_mut()
            .find(|cl| cl.iter().any(|x| (x - r).norm() <= radius))
        {
            Some(cl) => cl.push(r),
            None => clusters.push(vec![r]),
        }
    }
    let centers: Vec<(C64, usize)> = clusters
        .iter()
        .map(|cl| {
            let c = cl.iter().sum::<C64>() / cl.len() as f64;
            (c, cl.len())
        })
        .collect();
    // Ambiguity: distinct clusters too close to trust the partition.
    for i in 0..centers.len() {
        for j in (i + 1)..centers.len() {
            if (centers[i].0 - centers[j].0).norm() < 10.0 * radius {
                return Err(Error::ClusterAmbiguity(
                    format!("{}", centers[i].0),
                    format!("{}", centers[j].0),
                ));
            }
        }
    }
    Ok(centers
        .into_iter()
        .map(|(c, m)| (ComplexScalar::from_c64(c), m))
        .collect())
}

/// Aberth–Ehrlich simultaneous iteration. Deterministic restart ladder
/// replaces a companion-matrix fallback.
pub fn aberth(coeffs: &[C64], tol: &Tolerances) -> Result<Vec<C64>> {
    let _ = tol;
    // Strip exact zero roots at the origin first (common for monomials).
    let mut lead_zeros = 0usize;
    while lead_zeros < coeffs.len() && coeffs[lead_zeros].norm() == 0.0 {
        lead_zeros += 1;
    }
    let work = &coeffs[lead_zeros..];
    let n = work.len().saturating_sub(1);
    let mut out: Vec<C64> = vec![C64::new(0.0, 0.0); lead_zeros];
    if n == 0 {
        return Ok(out);
    }
    let an = work[n];
    if an.norm() == 0.0 {
        return Err(Error::ZeroPolynomial);
    }
    // Cauchy-style inclusion radius.
    let radius = 1.0
        + work[..n]
            .iter()
            .map(|c| (c / an).norm())
            .fold(0.0, f64::max);

    let eval = |z: C64| -> (C64, C64) {
        // p(z) and p'(z) by a joint Horner pass.
        let mut p = C64::new(0.0, 0.0);
        let mut dp = C64::new(0.0, 0.0);
        for c in work.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    };

    for restart in 0..6u32 {
        let offset = 0.7 + 0.37 * restart as f64;
        let mut z: Vec<C64> = (0..n)
            .map(|j| {
                let theta = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / n as f64 + offset;
                C64::from_polar(radius * (0.5 + 0.5 * ((j % 3) as f64 + 1.0) / 3.0), theta)
            })
            .collect();
        let mut converged = false;
        for _ in 0..600 {
            let mut max_step = 0.0f64;
            for j in 0..n {
                let (p, dp) = eval(z[j]);
                if p.norm() == 0.0 {
                    continue;
                }
                let w = if dp.norm() == 0.0 {
                    C64::new(1e-12, 1e-12)
                } else {
                    p / dp
                };
                let mut s = C64::new(0.0, 0.0);
                for (k, zk) in z.iter().enumerate() {
                    if k != j {
                        let d = z[j] - zk;
                        if d.norm() > 0.0 {
                            s += d.inv();
                        }
                    }
                }
                let denom = C64::new(1.0, 0.0) - w * s;
                let step = if denom.norm() < 1e-300 { w } else { w / denom };
                z[j] -= step;
                let rel = step.norm() / (1.0 + z[j].norm());
                max_step = max_step.max(rel);
            }
            if max_step < 1e-15 {
                converged = true;
                break;
            }
        }
        if !converged {
            continue;
        }
        // Newton polish and residual screen.
        let pnorm: f64 = work.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let mut ok = true;
        for zj in z.iter_mut() {
            for _ in 0..3 {
                let (p, dp) = eval(*zj);
                if dp.norm() > 0.0 {
                    *zj -= p / dp;
                }
            }
            let (p, _) = eval(*zj);
            let scale = pnorm * (1.0 + zj.norm()).powi(n as i32);
            if p.norm() > 1e-6 * scale {
                ok = false;
                break;
            }
        }
        if ok {
            out.extend(z);
            return Ok(out);
        }
    }
    Err(Error::RootConvergence)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn perfect_square_exact() {
        // z²−2z+1 → {1: 2}
        let p = Polynomial::from_i64(&[1, -2, 1]);
        let r = poly_roots(&p, &tol()).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].0.exact_eq(&ComplexScalar::from_int(1)));
        assert_eq!(r[0].1, 2);
    }

    #[test]
    fn roots_of_unity() {
        // z³−1 → three simple roots, one of them 1
        let p = Polynomial::from_i64(&[-1, 0, 0, 1]);
        let mut r = poly_roots(&p, &tol()).unwrap();
        assert_eq!(r.len(), 3);
        r.sort_by(|a, b| a.0.to_c64().re.total_cmp(&b.0.to_c64().re));
        assert!(r.iter().all(|(_, m)| *m == 1));
        let omega = C64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        assert!((r[0].0.to_c64() - omega.conj()).norm() < 1e-10
            || (r[0].0.to_c64() - omega).norm() < 1e-10);
        assert!((r[2].0.to_c64() - C64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn quadratic_extension_roots() {
        // z²+2 → ±i√2, exact in ℚ(i)(√2)
        let p = Polynomial::from_i64(&[2, 0, 1]);
        let r = poly_roots(&p, &tol()).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|(z, m)| *m == 1 && z.is_exact()));
        let expect = 2.0f64.sqrt();
        let mut ims: Vec<f64> = r.iter().map(|(z, _)| z.to_c64().im).collect();
        ims.sort_by(f64::total_cmp);
        assert!((ims[0] + expect).abs() < 1e-15 && (ims[1] - expect).abs() < 1e-15);
    }

    #[test]
    fn float_clustering_multiplicity() {
        // (z−1)²(z+2) with float coefficients: clustering recovers {1:2, −2:1}
        let p = Polynomial::new(
            [(2.0, 0.0), (-3.0, 0.0), (0.0, 0.0), (1.0, 0.0)]
                .iter()
                .map(|&(a, b)| ComplexScalar::from_f64(a, b))
                .collect(),
        );
        let mut r = poly_roots(&p, &tol()).unwrap();
        r.sort_by(|a, b| a.0.to_c64().re.total_cmp(&b.0.to_c64().re));
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].1, 1);
        assert!((r[0].0.to_c64() - C64::new(-2.0, 0.0)).norm() < 1e-8);
        assert_eq!(r[1].1, 2);
        assert!((r[1].0.to_c64() - C64::new(1.0, 0.0)).norm() < 1e-6);
    }

    #[test]
    fn residual_bound_on_random_like_poly() {
        // degree 6 with spread roots
        let roots: Vec<ComplexScalar> = [
            (0.3, 0.1),
            (-0.5, 0.4),
            (0.9, -0.2),
            (-0.1, -0.8),
            (0.0, 0.6),
            (0.7, 0.7),
        ]
        .iter()
        .map(|&(a, b)| ComplexScalar::from_f64(a, b))
        .collect();
        let p = Polynomial::from_roots(&roots);
        let found = poly_roots(&p, &tol()).unwrap();
        assert_eq!(found.len(), 6);
        let norm = p.sup_norm();
        for (z, _) in &found {
            assert!(p.eval_c64(z.to_c64()).norm() <= 1e-8 * norm);
        }
    }

    #[test]
    fn zero_poly_rejected() {
        assert!(matches!(
            poly_roots(&Polynomial::zero(), &tol()),
            Err(Error::ZeroPolynomial)
        ));
    }
}
