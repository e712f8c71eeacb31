//! `minsurf`: analyze Weierstrass data, verify the value-distribution
//! inequalities, mesh surfaces, audit projective curves and hyperplane
//! arrangements, and browse the built-in catalog.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use minsurf_core::catalog::{self, CatalogEntry, EntryData};
use minsurf_core::curves::{general_position, stationary_totals, verify_rn};
use minsurf_core::error::Error;
use minsurf_core::json as mjson;
use minsurf_core::report::{analyze, AnalysisReport};
use minsurf_core::surface::{default_base_point, export_mesh, immerse, sidecar_json, GridSpec, MeshFormat};
use minsurf_core::theorems::{shared_values, UnicityKind};
use minsurf_core::tol::Tolerances;
use minsurf_core::weierstrass::WData;

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(
    name = "minsurf",
    version = concat!(env!("CARGO_PKG_VERSION"), " (report schema 1)"),
    about = "Minimal surfaces from meromorphic Weierstrass data: analysis, verification, meshing"
)]
struct Cli {
    /// Arithmetic mode; float coerces all coefficients to complex f64
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    /// Tolerance override KEY=VALUE; keys: root, res, per, match, cluster, quad
    #[arg(long = "tol", global = true, value_name = "KEY=VALUE")]
    tol: Vec<String>,
    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = ReportFmt::Md)]
    report: ReportFmt,
    /// Seed for sampled parameters (generation is currently deterministic;
    /// accepted for reproducibility plumbing)
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFmt {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full analysis of a data file or catalog entry
    Analyze {
        /// JSON data file or catalog entry name
        input: String,
        /// Catalog entry parameter KEY=VALUE (repeatable)
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
    /// Inequality suite only; exit 0 iff every applicable bound holds
    Verify {
        input: String,
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
    /// Integrate the immersion over an annular grid and export a mesh
    Mesh {
        input: String,
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        /// Grid resolution RADIALxANGULAR
        #[arg(long, default_value = "32x32")]
        grid: String,
        /// Output path; extension .obj or .ply selects the format unless --format is given
        #[arg(long)]
        out: PathBuf,
        /// Mesh format: obj or ply
        #[arg(long)]
        format: Option<String>,
    },
    /// Projective-curve tooling
    Curve {
        #[command(subcommand)]
        cmd: CurveCmd,
    },
    /// Hyperplane-arrangement tooling
    Hyperplanes {
        #[command(subcommand)]
        cmd: HypCmd,
    },
    /// Built-in examples with expected invariants
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Shared-value audit of two Gauss maps on a common domain
    Unicity {
        /// JSON data file or catalog pair entry name
        input_a: String,
        /// Second JSON data file (omit when input_a is a catalog pair)
        input_b: Option<String>,
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
}

#[derive(Subcommand)]
enum CurveCmd {
    /// Order sequences, stationary totals and the degree/genus audit
    Plucker { file: PathBuf },
}

#[derive(Subcommand)]
enum HypCmd {
    /// General-position test of an arrangement in dimension N
    Check {
        file: PathBuf,
        /// Ambient coordinate count (hyperplane coefficient length)
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// All entry names with summaries
    List,
    /// One entry: parameters, expected invariants, note
    Show {
        name: String,
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        /// Write the entry's data JSON to this path
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

/// Error carrying the process exit code: 2 = usage/input, 1 = analysis.
struct Failure {
    code: u8,
    message: String,
}

fn usage_err(msg: impl Into<String>) -> Failure {
    Failure { code: 2, message: msg.into() }
}

fn analysis_err(e: Error) -> Failure {
    Failure { code: 1, message: format!("analysis error: {}", e) }
}

/// Input/schema problems exit 2; everything else is an analysis error.
fn core_err(e: Error) -> Failure {
    match e {
        Error::Malformed(_) | Error::UnknownEntry(_) | Error::InvalidParameter(_) => Failure {
            code: 2,
            message: format!("input error: {}", e),
        },
        other => analysis_err(other),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn parse_kv(items: &[String]) -> CliResult<Vec<(String, String)>> {
    items
        .iter()
        .map(|s| {
            s.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| usage_err(format!("expected KEY=VALUE, got \"{}\"", s)))
        })
        .collect()
}

fn tolerances(cli: &Cli) -> CliResult<Tolerances> {
    let mut t = Tolerances::from_env();
    for (k, v) in parse_kv(&cli.tol)? {
        let val: f64 = v
            .parse()
            .map_err(|_| usage_err(format!("tolerance value \"{}\" is not a number", v)))?;
        if !t.set(&k, val) {
            return Err(usage_err(format!(
                "unknown tolerance \"{}\" (expected root, res, per, match, cluster, quad)",
                k
            )));
        }
    }
    Ok(t)
}

enum LoadedInput {
    Data(WData),
    Entry(Box<CatalogEntry>),
}

/// A path that exists is parsed as a data JSON file; otherwise the
/// argument is looked up in the catalog.
fn load_input(input: &str, params: &[String], tol: &Tolerances) -> CliResult<LoadedInput> {
    if Path::new(input).exists() {
        let text = std::fs::read_to_string(input)
            .map_err(|e| usage_err(format!("cannot read {}: {}", input, e)))?;
        return Ok(LoadedInput::Data(mjson::data_from_str(&text).map_err(core_err)?));
    }
    let entry = catalog::get(input, &parse_kv(params)?, tol).map_err(core_err)?;
    Ok(LoadedInput::Entry(Box::new(entry)))
}

fn apply_mode(d: WData, mode: ModeArg) -> WData {
    match mode {
        ModeArg::Exact => d,
        ModeArg::Float => d.to_float(),
    }
}

/// Analyzable datum from an input: catalog pair/arrangement entries are
/// routed to their dedicated subcommands instead.
fn load_data(input: &str, params: &[String], cli: &Cli, tol: &Tolerances) -> CliResult<(WData, Option<CatalogEntry>)> {
    match load_input(input, params, tol)? {
        LoadedInput::Data(d) => Ok((apply_mode(d, cli.mode), None)),
        LoadedInput::Entry(e) => match &e.data {
            EntryData::Single(d) => {
                let d = apply_mode(d.clone(), cli.mode);
                Ok((d, Some(*e)))
            }
            EntryData::Arrangement(arr) => {
                let d = apply_mode(WData::RN(arr.data.clone()), cli.mode);
                Ok((d, Some(*e)))
            }
            EntryData::Pair { .. } => Err(usage_err(format!(
                "catalog entry \"{}\" is a map pair; use `minsurf unicity {}`",
                e.name, e.name
            ))),
            EntryData::Documentation => Err(analysis_err(match e.name.as_str() {
                "helicoid" => Error::Transcendental,
                _ => Error::BookkeepingOnly(e.name.clone()),
            })),
        },
    }
}

fn emit(cli: &Cli, md: String, json_value: Value) {
    match cli.report {
        ReportFmt::Md => print!("{}", md),
        ReportFmt::Json => print!("{}", mjson::to_text(&json_value)),
    }
}

fn report_for(d: &WData, entry: Option<&CatalogEntry>, tol: &Tolerances) -> CliResult<(AnalysisReport, Option<Value>)> {
    // arrangement entries additionally get the hyperplane-omission audit
    let mut arrangement = None;
    if let Some(e) = entry {
        if let EntryData::Arrangement(arr) = &e.data {
            let v = verify_rn(&arr.data, &arr.hyperplanes, tol).map_err(analysis_err)?;
            arrangement = Some(json!({
                "span": v.span,
                "degree": v.degree,
                "general_position": v.general_position,
                "omitted_count": v.omitted_count,
                "hyperplane_count": arr.hyperplanes.len(),
                "pass": v.report.all_pass(),
                "inequalities": v.report.inequalities.iter().map(|q| json!({
                    "name": q.name,
                    "lhs": q.lhs.to_string(),
                    "rhs": q.rhs.as_ref().map(|r| r.to_string()),
                    "pass": q.pass,
                })).collect::<Vec<_>>(),
            }));
        }
    }
    let rep = analyze(d, tol).map_err(analysis_err)?;
    Ok((rep, arrangement))
}

fn cmd_analyze(cli: &Cli, input: &str, params: &[String]) -> CliResult<u8> {
    let tol = tolerances(cli)?;
    let (d, entry) = load_data(input, params, cli, &tol)?;
    let (rep, arrangement) = report_for(&d, entry.as_ref(), &tol)?;
    let mut v = rep.to_json();
    let mut md = rep.to_markdown();
    let mut pass = rep.pass();
    if let Some(arr) = arrangement {
        pass = pass && arr["pass"].as_bool().unwrap_or(false) && arr["general_position"].as_bool().unwrap_or(false);
        md.push_str(&format!(
            "\n## Hyperplane omission\n\n- hyperplanes: {}\n- general position: {}\n- omitted: {}\n- bounds pass: {}\n",
            arr["hyperplane_count"], arr["general_position"], arr["omitted_count"], arr["pass"]
        ));
        v["arrangement"] = arr;
        v["pass"] = json!(pass);
    }
    emit(cli, md, v);
    Ok(if pass { 0 } else { 1 })
}

fn cmd_verify(cli: &Cli, input: &str, params: &[String]) -> CliResult<u8> {
    let tol = tolerances(cli)?;
    let (d, entry) = load_data(input, params, cli, &tol)?;
    let (rep, arrangement) = report_for(&d, entry.as_ref(), &tol)?;
    let full = rep.to_json();
    let mut pass = rep.theorems.as_ref().map_or(true, |t| t.all_pass());
    let mut v = json!({
        "schema_version": SCHEMA_VERSION,
        "theorems": full["theorems"],
    });
    let mut md = String::from("# Inequality verification\n\n");
    if let Some(t) = &rep.theorems {
        md.push_str("| name | form | lhs | rhs | pass | equality |\n|---|---|---|---|---|---|\n");
        for q in &t.inequalities {
            md.push_str(&format!(
                "| {} | {:?} | {} | {} | {} | {} |\n",
                q.name,
                q.form,
                q.lhs,
                q.rhs.as_ref().map(|r| r.to_string()).unwrap_or_else(|| "inf".into()),
                if !q.applicable { "n/a" } else if q.pass { "pass" } else { "FAIL" },
                if q.equality { "=" } else { "" },
            ));
        }
    } else {
        md.push_str("no inequality suite applies to this datum\n");
    }
    if let Some(arr) = arrangement {
        pass = pass && arr["pass"].as_bool().unwrap_or(false);
        md.push_str(&format!(
            "\nhyperplane omission bounds pass: {}\n",
            arr["pass"]
        ));
        v["arrangement"] = arr;
    }
    v["pass"] = json!(pass);
    md.push_str(&format!("\noverall: {}\n", if pass { "pass" } else { "FAIL" }));
    emit(cli, md, v);
    Ok(if pass { 0 } else { 1 })
}

fn parse_grid(s: &str) -> CliResult<(usize, usize)> {
    let norm = s.replace('×', "x");
    let (r, a) = norm
        .split_once('x')
        .ok_or_else(|| usage_err(format!("grid must be RADIALxANGULAR, got \"{}\"", s)))?;
    let parse = |t: &str| -> CliResult<usize> {
        t.parse().map_err(|_| usage_err(format!("bad grid component \"{}\"", t)))
    };
    Ok((parse(r)?, parse(a)?))
}

fn cmd_mesh(
    cli: &Cli,
    input: &str,
    params: &[String],
    grid: &str,
    out: &Path,
    format: Option<&str>,
) -> CliResult<u8> {
    let tol = tolerances(cli)?;
    let (d, _) = load_data(input, params, cli, &tol)?;
    let (radial, angular) = parse_grid(grid)?;
    let spec = GridSpec { radial, angular, ..GridSpec::default() };
    let fmt_name = match format {
        Some(f) => f.to_string(),
        None => out
            .extension()
            .and_then(|e| e.to_str())
            .unwrap_or("obj")
            .to_string(),
    };
    let fmt: MeshFormat = fmt_name
        .parse()
        .map_err(|_| usage_err(format!("unknown mesh format \"{}\" (obj or ply)", fmt_name)))?;
    let z0 = default_base_point(&d, &spec);
    let mesh = immerse(&d, z0, &spec, &tol).map_err(analysis_err)?;
    let bytes = export_mesh(&mesh, fmt);
    std::fs::write(out, &bytes).map_err(|e| usage_err(format!("cannot write {}: {}", out.display(), e)))?;
    let mut sidecar = None;
    if mesh.ambient_dim > 3 {
        let path = out.with_extension("scalars.json");
        std::fs::write(&path, sidecar_json(&mesh))
            .map_err(|e| usage_err(format!("cannot write {}: {}", path.display(), e)))?;
        sidecar = Some(path);
    }
    let md = format!(
        "mesh written to {} ({} vertices, {} faces{})\n",
        out.display(),
        mesh.vertices.len(),
        mesh.faces.len(),
        sidecar
            .as_ref()
            .map(|p| format!("; scalars in {}", p.display()))
            .unwrap_or_default()
    );
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "out": out.display().to_string(),
        "vertices": mesh.vertices.len(),
        "faces": mesh.faces.len(),
        "ambient_dim": mesh.ambient_dim,
        "sidecar": sidecar.map(|p| p.display().to_string()),
    });
    emit(cli, md, v);
    Ok(0)
}

fn read_json_file(path: &Path) -> CliResult<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage_err(format!("cannot read {}: {}", path.display(), e)))?;
    serde_json::from_str(&text).map_err(|e| usage_err(format!("invalid JSON in {}: {}", path.display(), e)))
}

fn cmd_curve_plucker(cli: &Cli, file: &Path) -> CliResult<u8> {
    let tol = tolerances(cli)?;
    let curve = mjson::curve_from_json(&read_json_file(file)?).map_err(core_err)?;
    let rep = stationary_totals(&curve, &tol).map_err(analysis_err)?;
    let mut md = String::from("# Order sequences and stationary totals\n\n");
    md.push_str(&format!("- span dimension r = {}\n- degree = {}\n\n", rep.span, rep.degree));
    md.push_str("| point | order sequence | stationary indices |\n|---|---|---|\n");
    for s in &rep.sequences {
        md.push_str(&format!(
            "| {} | {:?} | {:?} |\n",
            s.point, s.deltas, s.stationary
        ));
    }
    md.push_str(&format!(
        "\n- sigma totals: {:?}\n- weighted total Σ(r−i)σ_i = {}\n- expected (r+1)·deg − r(r+1) = {}\n- audit: {}\n",
        rep.sigma,
        rep.weighted_total,
        rep.expected_total,
        if rep.audit_pass { "pass" } else { "FAIL" }
    ));
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "span": rep.span,
        "degree": rep.degree,
        "sequences": rep.sequences.iter().map(|s| json!({
            "point": mjson::point_to_json(&s.point),
            "deltas": s.deltas,
            "stationary": s.stationary,
        })).collect::<Vec<_>>(),
        "sigma": rep.sigma,
        "weighted_total": rep.weighted_total,
        "expected_total": rep.expected_total,
        "pass": rep.audit_pass,
    });
    emit(cli, md, v);
    Ok(if rep.audit_pass { 0 } else { 1 })
}

fn cmd_hyperplanes_check(cli: &Cli, file: &Path, n: usize) -> CliResult<u8> {
    let tol = tolerances(cli)?;
    let hyps = mjson::arrangement_from_json(&read_json_file(file)?).map_err(core_err)?;
    if n < 2 {
        return Err(usage_err("n must be at least 2"));
    }
    for (i, h) in hyps.iter().enumerate() {
        if h.coeffs.len() != n {
            return Err(usage_err(format!(
                "hyperplane {} has {} coefficients, expected n = {}",
                i,
                h.coeffs.len(),
                n
            )));
        }
    }
    // the core routine takes the projective dimension n−1: independence
    // is tested on subsets of n coefficient rows
    let gp = general_position(&hyps, n - 1, &tol);
    let md = format!(
        "{} hyperplanes in dimension {}: {}\n",
        hyps.len(),
        n,
        if gp { "in general position" } else { "NOT in general position" }
    );
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "count": hyps.len(),
        "n": n,
        "general_position": gp,
    });
    emit(cli, md, v);
    Ok(if gp { 0 } else { 1 })
}

fn flags_str(flags: &[catalog::EntryFlag]) -> &'static str {
    if flags.contains(&catalog::EntryFlag::Transcendental) {
        " [transcendental]"
    } else if flags.contains(&catalog::EntryFlag::Bookkeeping) {
        " [bookkeeping]"
    } else {
        ""
    }
}

fn cmd_catalog_list(cli: &Cli) -> CliResult<u8> {
    let entries = catalog::list();
    let mut md = String::new();
    for e in &entries {
        md.push_str(&format!("{:<20}{}{}\n", e.name, e.summary, flags_str(&e.flags)));
    }
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "entries": entries.iter().map(|e| json!({
            "name": e.name,
            "summary": e.summary,
            "flags": e.flags.iter().map(|f| format!("{:?}", f).to_lowercase()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    emit(cli, md, v);
    Ok(0)
}

fn cmd_catalog_show(cli: &Cli, name: &str, params: &[String], emit_path: Option<&Path>) -> CliResult<u8> {
    let tol = tolerances(cli)?;
    let entry = catalog::get(name, &parse_kv(params)?, &tol).map_err(core_err)?;
    let data_json = match &entry.data {
        EntryData::Single(d) => Some(mjson::data_to_json(d)),
        EntryData::Arrangement(arr) => Some(mjson::data_to_json(&WData::RN(arr.data.clone()))),
        EntryData::Pair { a, .. } => Some(mjson::data_to_json(a)),
        EntryData::Documentation => None,
    };
    if let Some(path) = emit_path {
        match &data_json {
            Some(v) => std::fs::write(path, mjson::to_text(v))
                .map_err(|e| usage_err(format!("cannot write {}: {}", path.display(), e)))?,
            None => {
                return Err(usage_err(format!(
                    "entry \"{}\" is documentation-only; there is no data to emit",
                    name
                )))
            }
        }
    }
    let exp = &entry.expected;
    let mut md = format!("# {}\n\n{}\n\n", entry.name, entry.note);
    if !entry.params.is_empty() {
        md.push_str("parameters: ");
        md.push_str(
            &entry
                .params
                .iter()
                .map(|(k, v)| format!("{}={}", k, v))
                .collect::<Vec<_>>()
                .join(", "),
        );
        md.push('\n');
    }
    md.push_str(&format!("genus {}, {} puncture(s)\n", exp.genus, exp.k));
    if let Some(d) = exp.d_g {
        md.push_str(&format!("expected omitted-value count D_g = {}\n", d));
    }
    if let Some(nu) = &exp.nu_g {
        md.push_str(&format!("expected totally ramified value number nu_g = {}\n", nu));
    }
    if let Some(r) = &exp.r {
        md.push_str(&format!("expected ratio R = {}\n", r));
    }
    if let Some(t) = exp.tau_over_pi {
        md.push_str(&format!("expected total curvature = {}*pi\n", t));
    }
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "name": entry.name,
        "params": entry.params.iter().map(|(k, v)| json!([k, v])).collect::<Vec<_>>(),
        "note": entry.note,
        "flags": entry.flags.iter().map(|f| format!("{:?}", f).to_lowercase()).collect::<Vec<_>>(),
        "expected": {
                "d_g": exp.d_g,
                "nu_g": exp.nu_g.as_ref().map(|r| r.to_string()),
                "degree": exp.degree,
                "genus": exp.genus,
                "k": exp.k,
                "r": exp.r.as_ref().map(|r| r.to_string()),
                "tau_over_pi": exp.tau_over_pi,
                "periods_pass": exp.periods_pass,
                "shared_value_count": exp.shared_value_count,
                "hyperplane_count": exp.hyperplane_count,
        },
        "data": data_json,
    });
    emit(cli, md, v);
    Ok(0)
}

fn unicity_pair(
    input_a: &str,
    input_b: Option<&str>,
    params: &[String],
    cli: &Cli,
    tol: &Tolerances,
) -> CliResult<(WData, WData, UnicityKind)> {
    if let Some(b) = input_b {
        let LoadedInput::Data(da) = load_input(input_a, params, tol)? else {
            return Err(usage_err(
                "with two inputs, both must be data files (catalog pairs are a single entry)",
            ));
        };
        let LoadedInput::Data(db) = load_input(b, params, tol)? else {
            return Err(usage_err(
                "with two inputs, both must be data files (catalog pairs are a single entry)",
            ));
        };
        let kind = match (&da, &db) {
            (WData::R3(_), WData::R3(_)) => UnicityKind::R3,
            (WData::R4(_), WData::R4(_)) => UnicityKind::R4,
            _ => return Err(usage_err("unicity needs two data of the same kind (r3 or r4)")),
        };
        Ok((apply_mode(da, cli.mode), apply_mode(db, cli.mode), kind))
    } else {
        match load_input(input_a, params, tol)? {
            LoadedInput::Entry(e) => match e.data {
                EntryData::Pair { a, b, kind } => Ok((a, b, kind)),
                _ => Err(usage_err(format!(
                    "catalog entry \"{}\" is not a map pair",
                    e.name
                ))),
            },
            LoadedInput::Data(_) => Err(usage_err("unicity on files needs two inputs")),
        }
    }
}

fn cmd_unicity(cli: &Cli, input_a: &str, input_b: Option<&str>, params: &[String]) -> CliResult<u8> {
    let tol = tolerances(cli)?;
    let (a, b, kind) = unicity_pair(input_a, input_b, params, cli, &tol)?;
    let maps = |d: &WData| match d {
        WData::R3(d3) => vec![("g".to_string(), d3.g.clone())],
        WData::R4(d4) => vec![("g1".to_string(), d4.g1.clone()), ("g2".to_string(), d4.g2.clone())],
        WData::RN(_) => vec![],
    };
    let (mas, mbs) = (maps(&a), maps(&b));
    let mut md = String::from("# Shared-value audit\n\n");
    let mut comps = vec![];
    let mut pass = true;
    let mut any = false;
    for ((label, ga), (_, gb)) in mas.iter().zip(&mbs) {
        if ga == gb {
            md.push_str(&format!("component {}: identical maps, skipped\n", label));
            continue;
        }
        if ga.is_constant() || gb.is_constant() {
            md.push_str(&format!("component {}: constant map, skipped\n", label));
            continue;
        }
        any = true;
        let rep = shared_values(ga, gb, a.domain(), kind, &tol).map_err(analysis_err)?;
        pass = pass && rep.report.all_pass();
        md.push_str(&format!("\n## component {}\n\n", label));
        md.push_str(&format!(
            "- shared values ({}): {}\n",
            rep.q,
            rep.values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ));
        for q in &rep.report.inequalities {
            md.push_str(&format!(
                "- {}: {} <= {} — {}{}\n",
                q.name,
                q.lhs,
                q.rhs.as_ref().map(|r| r.to_string()).unwrap_or_else(|| "inf".into()),
                if !q.applicable { "n/a" } else if q.pass { "pass" } else { "FAIL" },
                if q.equality { " (equality)" } else { "" },
            ));
        }
        if let Some(w) = &rep.degree_warning {
            md.push_str(&format!("- warning: {}\n", w));
        }
        comps.push(json!({
            "component": label,
            "q": rep.q,
            "values": rep.values.iter().map(|p| mjson::point_to_json(p)).collect::<Vec<_>>(),
            "degree_warning": rep.degree_warning,
            "inequalities": rep.report.inequalities.iter().map(|q| json!({
                "name": q.name,
                "lhs": q.lhs.to_string(),
                "rhs": q.rhs.as_ref().map(|r| r.to_string()),
                "applicable": q.applicable,
                "pass": q.pass,
                "equality": q.equality,
            })).collect::<Vec<_>>(),
        }));
    }
    if !any {
        return Err(usage_err("no comparable nonconstant component pair"));
    }
    md.push_str(&format!("\noverall: {}\n", if pass { "pass" } else { "FAIL" }));
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "components": comps,
        "pass": pass,
    });
    emit(cli, md, v);
    Ok(if pass { 0 } else { 1 })
}

fn run(cli: &Cli) -> CliResult<u8> {
    match &cli.cmd {
        Cmd::Analyze { input, params } => cmd_analyze(cli, input, params),
        Cmd::Verify { input, params } => cmd_verify(cli, input, params),
        Cmd::Mesh { input, params, grid, out, format } => {
            cmd_mesh(cli, input, params, grid, out, format.as_deref())
        }
        Cmd::Curve { cmd: CurveCmd::Plucker { file } } => cmd_curve_plucker(cli, file),
        Cmd::Hyperplanes { cmd: HypCmd::Check { file, n } } => cmd_hyperplanes_check(cli, file, *n),
        Cmd::Catalog { cmd: CatalogCmd::List } => cmd_catalog_list(cli),
        Cmd::Catalog { cmd: CatalogCmd::Show { name, params, emit } } => {
            cmd_catalog_show(cli, name, params, emit.as_deref())
        }
        Cmd::Unicity { input_a, input_b, params } => {
            cmd_unicity(cli, input_a, input_b.as_deref(), params)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
