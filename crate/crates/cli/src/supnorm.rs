//! `supnorm`: sampled polytorus sup norm of a ±1 polynomial, as JSON.

use clap::Args;
use serde::Serialize;

use bohrstrip::monomials::count_monomials;
use bohrstrip::randpoly::{
    estimate_sup_polytorus_with, kahane_bound, make_polynomial, SignSource, SupSearchConfig,
};

use crate::output::fmt_f64;
use crate::CliError;

#[derive(Args)]
pub struct SupnormArgs {
    /// Number of variables.
    #[arg(long)]
    pub nvars: u32,
    /// Homogeneous degree.
    #[arg(long)]
    pub degree: u32,
    /// Seed for the ±1 signs (omit with --all-plus).
    #[arg(long, conflicts_with = "all_plus")]
    pub seed: Option<u64>,
    /// Use +1 for every coefficient.
    #[arg(long)]
    pub all_plus: bool,
    /// Random torus samples before refinement.
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    /// Seed for the sample phases.
    #[arg(long, default_value_t = 0)]
    pub sample_seed: u64,
    /// Coordinate-refinement sweeps.
    #[arg(long, default_value_t = 2)]
    pub sweeps: u32,
    /// Common coordinate modulus (or use --radii).
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    /// Comma-separated per-coordinate moduli.
    #[arg(long, value_delimiter = ',')]
    pub radii: Option<Vec<f64>>,
}

#[derive(Serialize)]
struct SupnormOutput {
    nvars: u32,
    degree: u32,
    sign_source: String,
    samples_used: u64,
    estimate: String,
    term_count: u64,
    trivial_bound: String,
    kahane_scale_c2_1: Option<String>,
    witness: Vec<[String; 2]>,
}

pub fn run(args: SupnormArgs) -> Result<(), CliError> {
    let source = match (args.all_plus, args.seed) {
        (true, None) => SignSource::AllPlus,
        (false, Some(seed)) => SignSource::Seeded(seed),
        (false, None) => {
            return Err(CliError::Usage("pass either --seed <N> or --all-plus".into()))
        }
        (true, Some(_)) => unreachable!("clap conflicts_with"),
    };
    let radii = match &args.radii {
        Some(r) => r.clone(),
        None => vec![args.radius; args.nvars as usize],
    };
    let poly = make_polynomial(args.nvars, args.degree, source)?;
    let cfg = SupSearchConfig { refine_sweeps: args.sweeps, ..Default::default() };
    let est = estimate_sup_polytorus_with(&poly, &radii, args.samples, args.sample_seed, &cfg)?;

    let max_radius = radii.iter().cloned().fold(0.0, f64::max);
    let term_count = count_monomials(args.nvars, args.degree)?;
    let output = SupnormOutput {
        nvars: args.nvars,
        degree: args.degree,
        sign_source: match source {
            SignSource::AllPlus => "all-plus".to_string(),
            SignSource::Seeded(s) => format!("seeded:{s}"),
        },
        samples_used: est.samples_used,
        estimate: fmt_f64(est.estimate),
        term_count: term_count as u64,
        trivial_bound: fmt_f64(term_count as f64 * max_radius.powi(args.degree as i32)),
        kahane_scale_c2_1: if args.degree >= 2 {
            Some(fmt_f64(kahane_bound(args.nvars, args.degree, 1.0)?))
        } else {
            None
        },
        witness: est
            .witness_point
            .iter()
            .map(|z| [fmt_f64(z.re), fmt_f64(z.im)])
            .collect(),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&output)
            .map_err(|e| CliError::Numeric(bohrstrip::Error::Serde(e)))?
    );
    Ok(())
}
