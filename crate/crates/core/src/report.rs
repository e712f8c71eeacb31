//! Assembled analysis reports: one pass over a datum collecting
//! regularity, end orders, periods, classification, Gauss-map value
//! distribution and the inequality tables, rendered as deterministic
//! JSON or Markdown.

use serde_json::{json, Map, Value};

use crate::algebra::divisor::SpherePoint;
use crate::algebra::scalar::Rat;
use crate::error::{Error, Result};
use crate::gauss::GaussProfile;
use crate::json::{data_to_json, divisor_to_json, point_to_json, to_text};
use crate::periods::{classify, PeriodReport, SurfaceClass};
use crate::theorems::{verify_r3, verify_r4, BoundForm, RValue, TheoremReport};
use crate::tol::Tolerances;
use crate::weierstrass::{regularity_check, EndReport, RegularityReport, WData};

/// One row of the order table: orders of g, h dz and g·h dz at a point
/// where at least one of them has a zero or pole, or at a puncture.
#[derive(Clone, Debug)]
pub struct OrderRow {
    pub point: SpherePoint,
    pub ord_g: i64,
    pub ord_h: i64,
    pub ord_gh: i64,
    pub puncture: bool,
}

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub input: Value,
    pub mode: &'static str,
    pub warnings: Vec<String>,
    pub regularity: RegularityReport,
    pub ends: EndReport,
    pub periods: Option<PeriodReport>,
    pub class: SurfaceClass,
    /// labelled Gauss-map profiles with their ratio R
    pub gauss: Vec<(String, GaussProfile, Option<RValue>)>,
    pub theorems: Option<TheoremReport>,
    pub order_table: Vec<OrderRow>,
}

fn class_str(c: SurfaceClass) -> &'static str {
    match c {
        SurfaceClass::Flat => "flat",
        SurfaceClass::NotComplete => "not_complete",
        SurfaceClass::Algebraic => "algebraic",
        SurfaceClass::PseudoAlgebraic => "pseudo_algebraic",
    }
}

fn rat_str(r: &Rat) -> String {
    r.to_string()
}

/// Compact point display for Markdown: real exact values print as plain
/// rationals, everything else falls back to the scalar display.
fn point_str(p: &SpherePoint) -> String {
    if let Some(z) = p.as_finite() {
        if let Some(g) = z.as_gauss() {
            if g.im == Rat::from_integer(0.into()) {
                return g.re.to_string();
            }
        }
    }
    p.to_string()
}

/// Full analysis of a datum. Structural problems (regularity failures,
/// flat data) are report content, not errors; only malformed domains
/// (nonzero genus, puncture collisions) propagate as errors.
pub fn analyze(d: &WData, tol: &Tolerances) -> Result<AnalysisReport> {
    d.domain().require_genus_zero()?;
    let mut warnings = vec![];
    let mode = if d.forms().iter().all(|f| f.is_exact()) { "exact" } else { "float" };
    if mode == "float" {
        warnings.push("coefficients are not Gaussian-rational: float arithmetic in use".into());
    }

    let regularity = regularity_check(d, tol)?;
    let classification = classify(d, tol)?;
    let mut gauss = vec![];
    let mut theorems = None;
    let mut order_table = vec![];

    match d {
        WData::R3(d3) => {
            order_table = build_order_table(d3, tol)?;
            match verify_r3(d3, tol) {
                Ok(v) => {
                    gauss.push(("g".to_string(), v.profile, Some(v.ratio.value())));
                    theorems = Some(v.report);
                }
                Err(Error::Flat) => warnings.push("flat datum: constant Gauss map".into()),
                Err(e) => return Err(e),
            }
        }
        WData::R4(d4) => match verify_r4(d4, tol) {
            Ok(v) => {
                let labels = ["g1", "g2"];
                for (i, p) in v.profiles.into_iter().enumerate() {
                    if let Some(p) = p {
                        let r = v.ratios[i].as_ref().map(|r| r.value());
                        gauss.push((labels[i].to_string(), p, r));
                    }
                }
                theorems = Some(v.report);
            }
            Err(Error::Flat) => warnings.push("flat datum: both components constant".into()),
            Err(e) => return Err(e),
        },
        WData::RN(_) => {
            warnings.push(
                "general-dimension datum: value distribution is analyzed through the \
                 curve and hyperplane tooling"
                    .into(),
            );
        }
    }

    if let Some(t) = &theorems {
        if t.non_hyperbolic {
            warnings.push(
                "non-hyperbolic basic domain (2G-2+k <= 0): ratio-based bounds \
                 inapplicable, raw forms evaluated"
                    .into(),
            );
        }
    }
    if !regularity.pass {
        warnings.push("regularity violations found: the datum is not an immersion".into());
    }

    Ok(AnalysisReport {
        input: data_to_json(d),
        mode,
        warnings,
        regularity,
        ends: classification.ends,
        periods: classification.periods,
        class: classification.class,
        gauss,
        theorems,
        order_table,
    })
}

fn build_order_table(d3: &crate::weierstrass::WData3, tol: &Tolerances) -> Result<Vec<OrderRow>> {
    let mut points: Vec<SpherePoint> = vec![];
    let push = |p: &SpherePoint, points: &mut Vec<SpherePoint>| {
        if !points.iter().any(|q| q.matches(p, tol.eps_match)) {
            points.push(p.clone());
        }
    };
    if !d3.g.is_constant() {
        for (p, _) in d3.g.divisor(tol)?.entries() {
            push(p, &mut points);
        }
    }
    for (p, _) in d3.h_form.divisor(tol)?.entries() {
        push(p, &mut points);
    }
    for p in d3.domain.punctures() {
        push(p, &mut points);
    }
    points.sort_by(|a, b| a.cmp_key(b));
    Ok(points
        .into_iter()
        .map(|p| {
            let ord_g = if d3.g.is_constant() { 0 } else { d3.g.ord_at(&p) };
            let ord_h = d3.h_form.ord_at(&p);
            OrderRow {
                ord_g,
                ord_h,
                ord_gh: ord_g + ord_h,
                puncture: !d3.domain.contains(&p, tol.eps_match),
                point: p,
            }
        })
        .collect())
}

impl AnalysisReport {
    /// True when the datum is regular and every applicable inequality
    /// holds; drives the verification exit code.
    pub fn pass(&self) -> bool {
        self.regularity.pass && self.theorems.as_ref().map_or(true, |t| t.all_pass())
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("schema_version".into(), json!("1"));
        obj.insert("input".into(), self.input.clone());
        obj.insert("mode".into(), json!(self.mode));
        obj.insert(
            "regularity".into(),
            json!({
                "pass": self.regularity.pass,
                "violations": self.regularity.violations.iter().map(|v| json!({
                    "point": point_to_json(&v.point),
                    "detail": v.detail,
                })).collect::<Vec<_>>(),
            }),
        );
        obj.insert(
            "ends".into(),
            json!({
                "orders": self.ends.ends.iter().map(|(p, mu)| json!([point_to_json(p), mu])).collect::<Vec<_>>(),
                "complete": self.ends.complete,
                "algebraic_ends": self.ends.algebraic_ends,
            }),
        );
        obj.insert(
            "periods".into(),
            match &self.periods {
                None => Value::Null,
                Some(p) => json!({
                    "pass": p.pass,
                    "failures": p.failures,
                    "residues": p.residues.iter().map(|(pt, rs)| json!([
                        point_to_json(pt),
                        rs.iter().map(crate::json::scalar_to_json).collect::<Vec<_>>(),
                    ])).collect::<Vec<_>>(),
                }),
            },
        );
        obj.insert("classification".into(), json!(class_str(self.class)));
        obj.insert(
            "gauss_map".into(),
            Value::Array(
                self.gauss
                    .iter()
                    .map(|(label, p, r)| {
                        json!({
                            "label": label,
                            "degree": p.degree,
                            "total_branching": p.total_branching,
                            "d_g": p.d_g,
                            "exceptional": p.exceptional.iter().map(point_to_json).collect::<Vec<_>>(),
                            "nu_g": rat_str(&p.nu_g),
                            "l": p.l,
                            "branch_in_m": divisor_to_json(&p.branch_in_m),
                            "ratio_r": r.as_ref().map(|r| r.to_string()),
                        })
                    })
                    .collect(),
            ),
        );
        obj.insert(
            "theorems".into(),
            match &self.theorems {
                None => Value::Null,
                Some(t) => json!({
                    "non_hyperbolic": t.non_hyperbolic,
                    "inequalities": t.inequalities.iter().map(|q| json!({
                        "name": q.name,
                        "form": match q.form { BoundForm::Raw => "raw", BoundForm::RBased => "R" },
                        "lhs": rat_str(&q.lhs),
                        "rhs": q.rhs.as_ref().map(rat_str),
                        "applicable": q.applicable,
                        "strict": q.strict,
                        "pass": q.pass,
                        "equality": q.equality,
                        "note": q.note,
                    })).collect::<Vec<_>>(),
                }),
            },
        );
        obj.insert(
            "order_table".into(),
            Value::Array(
                self.order_table
                    .iter()
                    .map(|r| {
                        json!({
                            "point": point_to_json(&r.point),
                            "ord_g": r.ord_g,
                            "ord_h_dz": r.ord_h,
                            "ord_gh_dz": r.ord_gh,
                            "puncture": r.puncture,
                        })
                    })
                    .collect(),
            ),
        );
        obj.insert("warnings".into(), json!(self.warnings));
        obj.insert("pass".into(), json!(self.pass()));
        Value::Object(obj)
    }

    pub fn to_json_text(&self) -> String {
        to_text(&self.to_json())
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let dim = self.input.get("kind").and_then(Value::as_str).unwrap_or("?");
        s.push_str("# Weierstrass data analysis\n\n");
        s.push_str(&format!("- data kind: {}\n", dim));
        s.push_str(&format!("- arithmetic mode: {}\n", self.mode));
        s.push_str(&format!(
            "- regularity: {}\n",
            if self.regularity.pass { "pass" } else { "FAIL" }
        ));
        for v in &self.regularity.violations {
            s.push_str(&format!("  - violation at {}: {}\n", point_str(&v.point), v.detail));
        }
        s.push_str(&format!("- classification: {}\n", class_str(self.class)));
        s.push('\n');

        s.push_str("## Ends\n\n| puncture | end order |\n|---|---|\n");
        for (p, mu) in &self.ends.ends {
            s.push_str(&format!("| {} | {} |\n", point_str(p), mu));
        }
        s.push_str(&format!(
            "\ncomplete: {}; algebraic ends: {}\n\n",
            self.ends.complete, self.ends.algebraic_ends
        ));

        if let Some(p) = &self.periods {
            s.push_str(&format!(
                "## Periods\n\n{} ({} failing residue component(s))\n\n",
                if p.pass { "pass" } else { "FAIL" },
                p.failures.len()
            ));
        }

        if !self.order_table.is_empty() {
            s.push_str("## Zeros and poles of g, h dz and g·h dz\n\n");
            s.push_str("| point | ord g | ord h dz | ord g·h dz | puncture |\n|---|---|---|---|---|\n");
            for r in &self.order_table {
                s.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    point_str(&r.point),
                    r.ord_g,
                    r.ord_h,
                    r.ord_gh,
                    if r.puncture { "yes" } else { "" }
                ));
            }
            s.push('\n');
        }

        for (label, p, r) in &self.gauss {
            s.push_str(&format!("## Gauss map {}\n\n", label));
            s.push_str(&format!("- degree d = {}\n", p.degree));
            let exc: Vec<String> = p.exceptional.iter().map(point_str).collect();
            s.push_str(&format!(
                "- exceptional values (D_g = {}): {}\n",
                p.d_g,
                if exc.is_empty() { "none".to_string() } else { exc.join(", ") }
            ));
            s.push_str(&format!("- totally ramified value number nu_g = {}\n", p.nu_g));
            s.push_str(&format!("- omitted-and-attained count l = {}\n", p.l));
            if let Some(r) = r {
                s.push_str(&format!("- ratio R = {}\n", r));
            }
            s.push('\n');
        }

        if let Some(t) = &self.theorems {
            s.push_str("## Inequalities\n\n");
            s.push_str("| name | form | lhs | rhs | pass | equality |\n|---|---|---|---|---|---|\n");
            for q in &t.inequalities {
                s.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} |\n",
                    q.name,
                    match q.form { BoundForm::Raw => "raw", BoundForm::RBased => "R" },
                    q.lhs,
                    q.rhs.as_ref().map(|r| r.to_string()).unwrap_or_else(|| "inf".into()),
                    if !q.applicable { "n/a" } else if q.pass { "pass" } else { "FAIL" },
                    if q.equality { "=" } else { "" }
                ));
            }
            s.push('\n');
            for q in &t.inequalities {
                if let Some(n) = &q.note {
                    s.push_str(&format!("- {}: {}\n", q.name, n));
                }
            }
            s.push('\n');
        }

        if !self.warnings.is_empty() {
            s.push_str("## Warnings\n\n");
            for w in &self.warnings {
                s.push_str(&format!("- {}\n", w));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Polynomial;
    use crate::algebra::ratfunc::RationalFunction;
    use crate::weierstrass::{form_from_polys, PuncturedSphere, WData3};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn catenoid() -> WData {
        WData::R3(WData3 {
            domain: PuncturedSphere::new(
                vec![SpherePoint::from_int(0), SpherePoint::infinity()],
                0,
            )
            .unwrap(),
            h_form: form_from_polys(Polynomial::one(), Polynomial::from_i64(&[0, 0, 1])).unwrap(),
            g: RationalFunction::var(),
        })
    }

    #[test]
    fn catenoid_report_content_and_stability() {
        let r = analyze(&catenoid(), &tol()).unwrap();
        assert!(r.pass());
        assert_eq!(r.class, SurfaceClass::Algebraic);
        assert_eq!(r.mode, "exact");
        let v = r.to_json();
        assert_eq!(v["classification"], "algebraic");
        assert_eq!(v["gauss_map"][0]["d_g"], 2);
        assert_eq!(v["gauss_map"][0]["nu_g"], "2");
        assert_eq!(v["pass"], true);
        // byte-identical emission for identical input
        let r2 = analyze(&catenoid(), &tol()).unwrap();
        assert_eq!(r.to_json_text(), r2.to_json_text());
    }

    #[test]
    fn markdown_includes_order_table_and_invariants() {
        let r = analyze(&catenoid(), &tol()).unwrap();
        let md = r.to_markdown();
        assert!(md.contains("## Zeros and poles of g, h dz and g·h dz"));
        assert!(md.contains("| 0 | 1 | -2 | -1 | yes |"));
        assert!(md.contains("exceptional values (D_g = 2): 0, inf"));
        assert!(md.contains("classification: algebraic"));
    }

    #[test]
    fn regularity_violation_is_reported_not_raised() {
        // (dz, 1/(z-1)) on the sphere minus {0}: the pole of g at 1 is
        // unmatched by zeros of h dz
        let d = WData::R3(WData3 {
            domain: PuncturedSphere::new(vec![SpherePoint::from_int(0)], 0).unwrap(),
            h_form: form_from_polys(Polynomial::one(), Polynomial::one()).unwrap(),
            g: RationalFunction::new(Polynomial::one(), Polynomial::from_i64(&[-1, 1])).unwrap(),
        });
        let r = analyze(&d, &tol()).unwrap();
        assert!(!r.regularity.pass);
        assert!(!r.pass());
        assert!(r.warnings.iter().any(|w| w.contains("regularity")));
    }

    #[test]
    fn non_hyperbolic_warning_on_single_puncture() {
        let d = WData::R3(WData3 {
            domain: PuncturedSphere::new(vec![SpherePoint::infinity()], 0).unwrap(),
            h_form: form_from_polys(Polynomial::one(), Polynomial::one()).unwrap(),
            g: RationalFunction::var(),
        });
        let r = analyze(&d, &tol()).unwrap();
        assert!(r.pass());
        assert!(r.warnings.iter().any(|w| w.contains("non-hyperbolic")));
    }
}
