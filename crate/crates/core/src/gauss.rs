//! Value distribution of rational Gauss maps.
//!
//! For g: P¹ → P¹ of degree d restricted to M = P¹∖{p₁,…,p_k}:
//! branch divisor (e_p − 1 via the numerator Wronskian
//! W = n′d − nd′, whose vanishing order equals e_p − 1 at every finite
//! point, poles included; ∞ through the ζ chart), exceptional values
//! (no preimage inside M), totally ramified value number
//! ν_g = r₀ + Σ(1 − 1/ν_j) as an exact rational, and the count l of
//! values with a branch point inside M.

use crate::algebra::divisor::{Divisor, SpherePoint};
use crate::algebra::ratfunc::RationalFunction;
use crate::algebra::roots::poly_roots;
use crate::algebra::scalar::{rat_i64, Rat};
use crate::error::{Error, Result};
use crate::tol::Tolerances;
use crate::weierstrass::PuncturedSphere;

/// Branch divisor of g over all of P¹: entries (p, e_p − 1) for every
/// point with multiplicity e_p ≥ 2. Total = 2(d − 1) (Riemann–Hurwitz).
pub fn branch_divisor(g: &RationalFunction, tol: &Tolerances) -> Result<Divisor> {
    if g.is_constant() {
        return Err(Error::Flat);
    }
    let mut div = Divisor::new();
    // finite points
    let w = &(&g.num().derivative() * g.den()) - &(g.num() * &g.den().derivative());
    if !w.is_constant() {
        for (r, m) in poly_roots(&w, tol)? {
            div.add(SpherePoint::Finite(r), m as i64);
        }
    }
    // ∞ through the chart
    let gc = g.infinity_chart();
    let wc = &(&gc.num().derivative() * gc.den()) - &(gc.num() * &gc.den().derivative());
    let zero = crate::algebra::scalar::ComplexScalar::zero();
    if !wc.is_zero() {
        let m = wc.order_at(&zero);
        if m > 0 {
            div.add(SpherePoint::Infinity, m as i64);
        }
    }
    Ok(div)
}

/// All preimages of `a` under g, over all of P¹, with multiplicities.
pub fn preimages(
    g: &RationalFunction,
    a: &SpherePoint,
    tol: &Tolerances,
) -> Result<Vec<(SpherePoint, usize)>> {
    if g.is_constant() {
        return Err(Error::Flat);
    }
    let d = g.degree_as_map();
    let mut out = vec![];
    match a {
        SpherePoint::Infinity => {
            if !g.den().is_constant() {
                for (r, m) in poly_roots(g.den(), tol)? {
                    out.push((SpherePoint::Finite(r), m));
                }
            }
            let at_inf = g.num().deg_or_zero() as i64 - g.den().deg_or_zero() as i64;
            if at_inf > 0 {
                out.push((SpherePoint::Infinity, at_inf as usize));
            }
        }
        SpherePoint::Finite(v) => {
            // solutions of n(z) − a·d(z) = 0, plus ∞ on degree drop
            let p = &g.num().clone() - &g.den().scale(v);
            if p.is_zero() {
                return Err(Error::Flat);
            }
            if !p.is_constant() {
                for (r, m) in poly_roots(&p, tol)? {
                    out.push((SpherePoint::Finite(r), m));
                }
            }
            let drop = d as i64 - p.deg_or_zero() as i64;
            if drop > 0 {
                out.push((SpherePoint::Infinity, drop as usize));
            }
        }
    }
    debug_assert_eq!(out.iter().map(|(_, m)| m).sum::<usize>(), d);
    Ok(out)
}

/// One value of the candidate set with its preimage structure in M.
#[derive(Clone, Debug)]
pub struct ValueClass {
    pub value: SpherePoint,
    /// preimages inside M (punctures excluded), with multiplicities
    pub preimages_in_m: Vec<(SpherePoint, usize)>,
    /// min multiplicity over M-preimages; None when the value is omitted
    pub nu: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct GaussProfile {
    /// degree d of g as a map P¹ → P¹
    pub degree: usize,
    /// Σ_{P¹}(e_p − 1) = 2(d − 1) at genus 0
    pub total_branching: i64,
    /// branch divisor over all of P¹
    pub branch: Divisor,
    /// branch divisor restricted to M
    pub branch_in_m: Divisor,
    /// classified candidate values (critical values ∪ g(punctures))
    pub values: Vec<ValueClass>,
    /// omitted values (no preimage in M)
    pub exceptional: Vec<SpherePoint>,
    /// D_g = #exceptional
    pub d_g: usize,
    /// ν_g = D_g + Σ_{ν_j ≥ 2} (1 − 1/ν_j), exact
    pub nu_g: Rat,
    /// number of values with at least one branch point inside M
    pub l: usize,
}

/// Classify the value distribution of g on M. Only critical values and
/// puncture images can be omitted or totally ramified, so the finite
/// candidate set is exhaustive.
pub fn gauss_profile(
    g: &RationalFunction,
    domain: &PuncturedSphere,
    tol: &Tolerances,
) -> Result<GaussProfile> {
    domain.require_genus_zero()?;
    if g.is_constant() {
        return Err(Error::Flat);
    }
    let d = g.degree_as_map();
    let branch = branch_divisor(g, tol)?;
    let total_branching = branch.entries().iter().map(|(_, m)| m).sum::<i64>();
    let mut branch_in_m = Divisor::new();
    for (p, m) in branch.entries() {
        if domain.contains(p, tol.eps_match) {
            branch_in_m.add(p.clone(), *m);
        }
    }

    // candidate values: critical values anywhere, plus puncture images
    let mut candidates: Vec<SpherePoint> = vec![];
    let push = |v: SpherePoint, candidates: &mut Vec<SpherePoint>| {
        if !candidates.iter().any(|w| w.matches(&v, tol.eps_match)) {
            candidates.push(v);
        }
    };
    for (p, _) in branch.entries() {
        push(g.eval(p), &mut candidates);
    }
    for p in domain.punctures() {
        push(g.eval(p), &mut candidates);
    }
    candidates.sort_by(|a, b| a.cmp_key(b));

    let mut values = vec![];
    let mut exceptional = vec![];
    let mut nu_g = rat_i64(0);
    let mut l = 0usize;
    for a in candidates {
        let pre = preimages(g, &a, tol)?;
        let in_m: Vec<(SpherePoint, usize)> = pre
            .into_iter()
            .filter(|(z, _)| domain.contains(z, tol.eps_match))
            .collect();
        if in_m.iter().any(|(_, m)| *m >= 2) {
            l += 1;
        }
        let nu = in_m.iter().map(|(_, m)| *m).min();
        match nu {
            None => {
                nu_g += rat_i64(1);
                exceptional.push(a.clone());
            }
            Some(v) if v >= 2 => {
                nu_g += rat_i64(1) - Rat::new(1.into(), (v as i64).into());
            }
            _ => {}
        }
        values.push(ValueClass { value: a, preimages_in_m: in_m, nu });
    }
    let d_g = exceptional.len();
    Ok(GaussProfile {
        degree: d,
        total_branching,
        branch,
        branch_in_m,
        values,
        exceptional,
        d_g,
        nu_g,
        l,
    })
}
