use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use kerov_core::clt::{rate_fit, run_clt, CltRow};
use kerov_core::exact::{format_scalar, to_f64};
use kerov_core::group::{
    burnside_brauer_check, chain_from_character, diameter_check, parse_eta, power_step_check,
    verify_dictionary, weighted_graph_diameter, ClassFunction,
};
use kerov_core::growth::sample_path;
use kerov_core::jack::theta_table;
use kerov_core::moments::jack_expect_s;
use kerov_core::verify::run_suite;
use kerov_core::{Cell, Error, IdentityReport};
use serde::Serialize;

use crate::{CltArgs, Failure, MomentsArgs, SampleArgs, ThetaArgs, VerifyArgs, WalkArgs};

type Outcome = std::result::Result<(), Failure>;

fn sink(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn write_json<T: Serialize>(path: Option<&PathBuf>, value: &T) -> Outcome {
    let mut out = sink(path.map(PathBuf::as_path))?;
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct VerifyReport {
    command: &'static str,
    max_n: usize,
    alphas: Vec<String>,
    status: &'static str,
    passed: usize,
    failed: usize,
    resource_error: Option<String>,
    reports: Vec<IdentityReport>,
}

pub fn verify(args: VerifyArgs) -> Outcome {
    let outcome = run_suite(args.max_n, &args.alpha);
    let failed = outcome.failures().count();
    let status = match (&outcome.resource_error, failed) {
        (Some(_), _) => "resource_error",
        (None, 0) => "pass",
        (None, _) => "fail",
    };
    let report = VerifyReport {
        command: "verify",
        max_n: args.max_n,
        alphas: args.alpha.iter().map(|a| a.to_string()).collect(),
        status,
        passed: outcome.reports.len() - failed,
        failed,
        resource_error: outcome.resource_error.as_ref().map(|e| e.to_string()),
        reports: outcome.reports,
    };
    write_json(args.report.as_ref(), &report)?;
    eprintln!(
        "verify: {} passed, {} failed{}",
        report.passed,
        report.failed,
        report
            .resource_error
            .as_deref()
            .map(|e| format!(", stopped: {e}"))
            .unwrap_or_default()
    );
    match outcome.resource_error {
        Some(e) => Err(Failure::Core(e)),
        None if failed > 0 => Err(Failure::Violation),
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct CsvCltRow<'a> {
    n: usize,
    alpha: &'a str,
    samples: usize,
    ks: f64,
    mean: f64,
    var: f64,
    l_delta: f64,
}

#[derive(Serialize)]
struct CltSummary<'a> {
    command: &'static str,
    alpha: &'a str,
    samples: usize,
    seed: u64,
    delta: f64,
    normalization: kerov_core::clt::Normalization,
    n_grid: &'a [usize],
    s_hat: Option<f64>,
    intercept: Option<f64>,
    rows: &'a [CltRow],
}

pub fn clt(args: CltArgs) -> Outcome {
    let exp = run_clt(
        &args.n,
        &args.alpha,
        args.samples,
        args.seed,
        args.delta,
        args.normalization,
    )?;
    let mut w = csv::Writer::from_writer(sink(args.out.as_deref())?);
    for row in &exp.results {
        w.serialize(CsvCltRow {
            n: row.n,
            alpha: &exp.alpha,
            samples: exp.samples,
            ks: row.ks,
            mean: row.mean,
            var: row.var,
            l_delta: row.l_delta,
        })?;
    }
    w.flush()?;
    drop(w);
    let fit = rate_fit(&exp).ok();
    let summary = CltSummary {
        command: "clt",
        alpha: &exp.alpha,
        samples: exp.samples,
        seed: exp.seed,
        delta: exp.delta,
        normalization: exp.normalization,
        n_grid: &exp.n_grid,
        s_hat: fit.map(|f| f.0),
        intercept: fit.map(|f| f.1),
        rows: &exp.results,
    };
    match (&args.summary, &args.out) {
        (Some(path), _) => write_json(Some(path), &summary),
        (None, Some(_)) => write_json(None, &summary),
        (None, None) => Ok(()),
    }
}

#[derive(Serialize)]
struct MomentRow {
    n: usize,
    r: usize,
    alpha: String,
    expectation_num: String,
    expectation_den: String,
    ratio_float: f64,
}

pub fn moments(args: MomentsArgs) -> Outcome {
    let mut rows = Vec::new();
    for alpha in &args.alpha {
        for &n in &args.n {
            for &r in &args.r {
                let e = jack_expect_s(n, r, alpha)?;
                let scale = (n as f64).powf(r as f64 / 2.0);
                rows.push(MomentRow {
                    n,
                    r,
                    alpha: alpha.to_string(),
                    expectation_num: e.numer().to_string(),
                    expectation_den: e.denom().to_string(),
                    ratio_float: if n == 0 { f64::NAN } else { to_f64(&e) / scale },
                });
            }
        }
    }
    let mut w = csv::Writer::from_writer(sink(args.out.as_deref())?);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct ClassValue {
    class: String,
    value: String,
}

#[derive(Serialize)]
struct FirstPower {
    rho: String,
    j: Option<usize>,
}

#[derive(Serialize)]
struct WalkReport {
    command: &'static str,
    n: usize,
    eta: String,
    eta_values: Vec<ClassValue>,
    degree: String,
    m: usize,
    faithful: bool,
    kernel: Vec<String>,
    first_power: Vec<FirstPower>,
    diameter: Option<usize>,
    distinct_eigenvalues: usize,
    eigenvalues: Vec<ClassValue>,
    status: &'static str,
    reports: Vec<IdentityReport>,
}

fn resolve_eta(n: usize, spec: &str) -> kerov_core::Result<ClassFunction> {
    match spec {
        "perm" | "permutation" => ClassFunction::permutation(n),
        "std" | "standard" => ClassFunction::standard(n),
        "regular" => ClassFunction::regular(n),
        path => match std::fs::read_to_string(path) {
            Ok(text) => parse_eta(n, &text),
            Err(e) => Err(Error::Parse(format!(
                "eta {path:?} is not perm, std or regular and cannot be read as a file: {e}"
            ))),
        },
    }
}

pub fn walk(args: WalkArgs) -> Outcome {
    let eta = resolve_eta(args.n, &args.eta)?;
    let chain = chain_from_character(args.n, eta)?;
    let classes: Vec<String> = kerov_core::partitions_of(args.n).map(|p| p.to_string()).collect();
    let bb = burnside_brauer_check(&chain)?;
    let mut reports = verify_dictionary(&chain)?;
    reports.push(bb.to_report(args.n));
    reports.push(diameter_check(&chain)?);
    reports.push(power_step_check(&chain, 2 * bb.m)?);
    let diameter = match weighted_graph_diameter(&chain) {
        Ok(d) => Some(d),
        Err(Error::Hypothesis(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let all_pass = kerov_core::report::all_pass(&reports);
    let pair = |values: &[kerov_core::Scalar]| -> Vec<ClassValue> {
        classes
            .iter()
            .zip(values)
            .map(|(c, v)| ClassValue {
                class: c.clone(),
                value: format_scalar(v),
            })
            .collect()
    };
    let report = WalkReport {
        command: "walk",
        n: args.n,
        eta: args.eta.clone(),
        eta_values: pair(&chain.eta.values),
        degree: format_scalar(chain.eta.degree()),
        m: bb.m,
        faithful: bb.faithful,
        kernel: bb.kernel.iter().map(|p| p.to_string()).collect(),
        first_power: bb
            .first_power
            .iter()
            .map(|(rho, j)| FirstPower {
                rho: rho.to_string(),
                j: *j,
            })
            .collect(),
        diameter,
        distinct_eigenvalues: chain.distinct_eigenvalue_count(),
        eigenvalues: pair(&chain.eigenvalues()),
        status: if all_pass { "pass" } else { "fail" },
        reports,
    };
    write_json(args.report.as_ref(), &report)?;
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

#[derive(Serialize)]
struct SampleReport {
    command: &'static str,
    n: usize,
    alpha: String,
    seed: u64,
    endpoint: String,
    cells: Vec<Cell>,
}

pub fn sample(args: SampleArgs) -> Outcome {
    let path = sample_path(args.n, &args.alpha, args.seed)?;
    let report = SampleReport {
        command: "sample",
        n: args.n,
        alpha: args.alpha.to_string(),
        seed: args.seed,
        endpoint: path.endpoint().to_string(),
        cells: path.added_cells(),
    };
    write_json(args.out.as_ref(), &report)
}

pub fn theta(args: ThetaArgs) -> Outcome {
    let table = theta_table(args.n, &args.alpha)?;
    let mut w = csv::Writer::from_writer(sink(args.out.as_deref())?);
    let mut header = vec!["lambda".to_string()];
    header.extend(table.partitions().iter().map(|p| p.to_string()));
    w.write_record(&header)?;
    for la in table.partitions() {
        let mut record = vec![la.to_string()];
        for mu in table.partitions() {
            record.push(format_scalar(table.get(la, mu)?));
        }
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}
