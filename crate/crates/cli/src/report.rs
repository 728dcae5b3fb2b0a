//! `report`: CSV verification reports for bounds, sup scans, divergence
//! terms, truncation-error laws, zeta values, and time averages.

use clap::{Args, Subcommand};
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use bohrstrip::construction::{
    block_absolute_sum, block_line_sup, divergence_lower_bound, divergence_lower_bound_log,
    theoretical_block_sup_bound, BlockSpec, LINE_SUP_T_SAMPLES,
};
use bohrstrip::dirichlet::{
    partial_sum, time_average_square, AverageMode, DirichletCoefficients,
};
use bohrstrip::perron::perron_error_scan;
use bohrstrip::zeta_eta::{
    eta_accelerated, eta_coefficients, eta_partial, zeta_via_eta, SINGULAR_FACTOR_TOL,
};

use crate::output::{fmt_f64, parse_complex, write_csv, Sink};
use crate::CliError;

#[derive(Subcommand)]
pub enum ReportCommand {
    /// Closed-form block sup bounds and their k-th roots.
    Bounds(BoundsArgs),
    /// Sampled line sups next to exact absolute sums, block by block.
    Supscan(SupscanArgs),
    /// Divergence witness terms per block.
    Divergence(DivergenceArgs),
    /// Truncation error against the M^-delta*logM envelope.
    Perron(PerronArgs),
    /// Zeta through the alternating series.
    Zeta(ZetaArgs),
    /// Mean-square time average: closed form vs quadrature.
    Average(AverageArgs),
}

#[derive(Args)]
pub struct BoundsArgs {
    /// Block indices, comma separated.
    #[arg(long = "k", value_delimiter = ',', required = true)]
    pub k_list: Vec<u32>,
    #[arg(long, default_value_t = 0.5)]
    pub sigma: f64,
    #[arg(long, default_value_t = 3.0)]
    pub c1: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c2: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct SupscanArgs {
    #[arg(long, default_value_t = 5)]
    pub kmax: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.5)]
    pub sigma: f64,
    #[arg(long = "t-samples", default_value_t = LINE_SUP_T_SAMPLES)]
    pub t_samples: u64,
    #[arg(long, default_value_t = 0)]
    pub sample_seed: u64,
    #[arg(long, default_value_t = 3.0)]
    pub c1: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c2: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct DivergenceArgs {
    #[arg(long = "k", value_delimiter = ',', required = true)]
    pub k_list: Vec<u32>,
    #[arg(long, default_value_t = 0.5)]
    pub sigma: f64,
    #[arg(long, default_value_t = 3.0)]
    pub c1: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct PerronArgs {
    /// `eta` or a coefficient JSONL path.
    #[arg(long, default_value = "eta")]
    pub series: String,
    /// Evaluation point, "re" or "re,im".
    #[arg(long)]
    pub s: String,
    #[arg(long, default_value_t = 0.3)]
    pub delta: f64,
    /// Truncation points, ascending.
    #[arg(long = "M", value_delimiter = ',', required = true)]
    pub m_list: Vec<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct ZetaArgs {
    /// Evaluation point, "re" or "re,im"; requires Re s > 0.
    #[arg(long)]
    pub s: String,
    /// Truncation budget for plain summation right of Re s = 1.
    #[arg(long, default_value_t = 100_000)]
    pub n: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct AverageArgs {
    /// `eta` or a coefficient JSONL path.
    #[arg(long, default_value = "eta")]
    pub series: String,
    /// Truncation length N.
    #[arg(long, default_value_t = 50)]
    pub n: u64,
    /// Line abscissa b.
    #[arg(long, default_value_t = 0.5)]
    pub b: f64,
    /// Averaging half-window T.
    #[arg(long, default_value_t = 100.0)]
    pub t: f64,
    /// closed, quadrature, or both.
    #[arg(long, default_value = "both")]
    pub mode: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn load_series(spec: &str, n_for_eta: u64) -> Result<DirichletCoefficients, CliError> {
    if spec == "eta" {
        Ok(eta_coefficients(n_for_eta))
    } else {
        let file = File::open(spec)?;
        Ok(DirichletCoefficients::read_jsonl(BufReader::new(file))?)
    }
}

pub fn run(cmd: ReportCommand) -> Result<(), CliError> {
    match cmd {
        ReportCommand::Bounds(args) => bounds(args),
        ReportCommand::Supscan(args) => supscan(args),
        ReportCommand::Divergence(args) => divergence(args),
        ReportCommand::Perron(args) => perron(args),
        ReportCommand::Zeta(args) => zeta(args),
        ReportCommand::Average(args) => average(args),
    }
}

fn bounds(args: BoundsArgs) -> Result<(), CliError> {
    let mut rows = Vec::new();
    for &k in &args.k_list {
        let bound = theoretical_block_sup_bound(k, args.sigma, args.c1, args.c2)?;
        rows.push(vec![
            k.to_string(),
            fmt_f64(args.sigma),
            fmt_f64(args.c1),
            fmt_f64(args.c2),
            fmt_f64(bound),
            fmt_f64(bound.powf(1.0 / k as f64)),
        ]);
    }
    let mut sink = Sink::create(args.out.as_deref())?;
    write_csv(
        &mut sink,
        &["k", "sigma", "c1", "c2", "block_sup_bound", "bound_kth_root"],
        rows,
    )?;
    sink.finish()
}

fn supscan(args: SupscanArgs) -> Result<(), CliError> {
    let mut rows = Vec::new();
    for k in 2..=args.kmax {
        let spec = BlockSpec::new(k)?;
        let sup = block_line_sup(k, args.seed, args.sigma, args.t_samples, args.sample_seed)?;
        let abs = block_absolute_sum(k, args.sigma)?;
        let bound = theoretical_block_sup_bound(k, args.sigma, args.c1, args.c2)?;
        rows.push(vec![
            k.to_string(),
            (spec.support_size() as u64).to_string(),
            fmt_f64(args.sigma),
            fmt_f64(sup.estimate),
            fmt_f64(sup.t_best),
            fmt_f64(abs),
            fmt_f64(bound),
        ]);
    }
    let mut sink = Sink::create(args.out.as_deref())?;
    write_csv(
        &mut sink,
        &["k", "count", "sigma", "line_sup_sample", "t_best", "absolute_sum", "sup_bound"],
        rows,
    )?;
    sink.finish()
}

fn divergence(args: DivergenceArgs) -> Result<(), CliError> {
    let mut rows = Vec::new();
    for &k in &args.k_list {
        let term = divergence_lower_bound(k, args.sigma, args.c1)?;
        let log_term = divergence_lower_bound_log(k, args.sigma, args.c1)?;
        rows.push(vec![k.to_string(), fmt_f64(args.sigma), fmt_f64(term), fmt_f64(log_term)]);
    }
    let mut sink = Sink::create(args.out.as_deref())?;
    write_csv(&mut sink, &["k", "sigma", "divergence_term", "log_divergence_term"], rows)?;
    sink.finish()
}

fn perron(args: PerronArgs) -> Result<(), CliError> {
    let s = parse_complex(&args.s)?;
    let max_m = *args.m_list.iter().max().unwrap_or(&2);
    let (coeffs, reference) = if args.series == "eta" {
        let coeffs = eta_coefficients(max_m.max(2) * 2);
        let reference = eta_accelerated(s).map_err(CliError::Numeric)?;
        (coeffs, reference)
    } else {
        let coeffs = load_series(&args.series, 0)?;
        let max_n = coeffs.max_index().unwrap_or(1);
        let reference = partial_sum(&coeffs, s, max_n);
        (coeffs, reference)
    };
    let rows = perron_error_scan(reference, &coeffs, s, args.delta, &args.m_list)?;
    let mut sink = Sink::create(args.out.as_deref())?;
    write_csv(
        &mut sink,
        &["M", "error", "M^-delta*logM", "ratio"],
        rows.iter().map(|r| {
            vec![r.m.to_string(), fmt_f64(r.error), fmt_f64(r.bound), fmt_f64(r.ratio)]
        }),
    )?;
    sink.finish()
}

fn zeta(args: ZetaArgs) -> Result<(), CliError> {
    let s = parse_complex(&args.s)?;
    let value = zeta_via_eta(s, args.n, SINGULAR_FACTOR_TOL).map_err(|e| match e {
        bohrstrip::Error::InvalidArgument(msg) => CliError::Usage(msg),
        other => CliError::Numeric(other),
    })?;
    let eta = eta_partial(s, args.n);
    let mut sink = Sink::create(args.out.as_deref())?;
    write_csv(
        &mut sink,
        &["re_s", "im_s", "zeta_re", "zeta_im", "eta_partial_re", "eta_partial_im"],
        [vec![
            fmt_f64(s.re),
            fmt_f64(s.im),
            fmt_f64(value.re),
            fmt_f64(value.im),
            fmt_f64(eta.re),
            fmt_f64(eta.im),
        ]],
    )?;
    sink.finish()
}

fn average(args: AverageArgs) -> Result<(), CliError> {
    let coeffs = load_series(&args.series, args.n)?;
    let n_max = args.n as u128;
    let diagonal: f64 = coeffs
        .iter()
        .take_while(|&(n, _)| n <= n_max)
        .map(|(n, a)| a * a * (n as f64).powf(-2.0 * args.b))
        .sum();

    let (closed, quadrature) = match args.mode.as_str() {
        "closed" => (
            Some(time_average_square(&coeffs, args.b, args.t, n_max, AverageMode::ClosedForm)?),
            None,
        ),
        "quadrature" => (
            None,
            Some(time_average_square(&coeffs, args.b, args.t, n_max, AverageMode::Quadrature)?),
        ),
        "both" => (
            Some(time_average_square(&coeffs, args.b, args.t, n_max, AverageMode::ClosedForm)?),
            Some(time_average_square(&coeffs, args.b, args.t, n_max, AverageMode::Quadrature)?),
        ),
        other => {
            return Err(CliError::Usage(format!(
                "--mode must be closed, quadrature, or both; got {other:?}"
            )))
        }
    };
    let cell = |v: Option<f64>| v.map(fmt_f64).unwrap_or_default();
    let difference = match (closed, quadrature) {
        (Some(c), Some(q)) => fmt_f64((c - q).abs()),
        _ => String::new(),
    };
    let mut sink = Sink::create(args.out.as_deref())?;
    write_csv(
        &mut sink,
        &["b", "T", "N", "closed_form", "quadrature", "diagonal", "abs_difference"],
        [vec![
            fmt_f64(args.b),
            fmt_f64(args.t),
            args.n.to_string(),
            cell(closed),
            cell(quadrature),
            fmt_f64(diagonal),
            difference,
        ]],
    )?;
    sink.finish()
}
