//! `construct`: build the prime-block series and write its artifacts.
//!
//! Outputs in the target directory:
//! - `coefficients.jsonl` — materialized coefficients (blocks with k <= 5),
//!   one `{"n": "<index>", "a": <sign>}` line per entry, ascending.
//! - `blocks.json` — per-block manifest rows `{k, seed, count, min_n, max_n}`;
//!   counts and index ranges are exact for every block, including the
//!   streaming ones (k >= 6), whose coefficients are not materialized.
//! - `manifest.json` — run manifest with output digests.

use clap::Args;
use serde::Serialize;
use std::fs;
use std::io::BufWriter;
use std::path::PathBuf;

use bohrstrip::construction::{build_series, BlockSpec, MATERIALIZE_MAX_K, MAX_K};

use crate::manifest::RunManifest;
use crate::CliError;

#[derive(Args)]
pub struct ConstructArgs {
    /// Largest block index to include (2..=9).
    #[arg(long)]
    pub kmax: u32,
    /// Seed governing every block's signs.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output directory (created if missing).
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
}

#[derive(Serialize)]
struct BlockManifestRow {
    k: u32,
    seed: u64,
    count: u64,
    min_n: String,
    max_n: String,
    materialized: bool,
}

pub fn run(args: ConstructArgs) -> Result<(), CliError> {
    if !(2..=MAX_K).contains(&args.kmax) {
        return Err(CliError::Usage(format!(
            "--kmax must lie in [2, {MAX_K}], got {}",
            args.kmax
        )));
    }

    let series = build_series(args.kmax, args.seed)?;

    fs::create_dir_all(&args.out)?;

    let coeff_path = args.out.join("coefficients.jsonl");
    let file = BufWriter::new(fs::File::create(&coeff_path)?);
    series.materialized().write_jsonl(file)?;

    let mut rows = Vec::new();
    for k in 2..=args.kmax {
        let spec = BlockSpec::new(k)?;
        // The support minimum and maximum are the k-th powers of the window's
        // first and last prime; the count is the monomial count.
        let min_n = (spec.primes()[0] as u128).pow(k);
        let max_n = (*spec.primes().last().unwrap() as u128).pow(k);
        rows.push(BlockManifestRow {
            k,
            seed: args.seed,
            count: spec.support_size() as u64,
            min_n: min_n.to_string(),
            max_n: max_n.to_string(),
            materialized: k <= MATERIALIZE_MAX_K,
        });
    }
    let blocks_text = serde_json::to_string_pretty(&rows)
        .map_err(|e| CliError::Numeric(bohrstrip::Error::Serde(e)))?;
    fs::write(args.out.join("blocks.json"), blocks_text + "\n")?;

    let mut manifest = RunManifest::new(
        "construct",
        serde_json::json!({ "kmax": args.kmax, "seed": args.seed }),
    );
    manifest.record(&args.out, "coefficients.jsonl")?;
    manifest.record(&args.out, "blocks.json")?;
    manifest.write(&args.out)?;

    eprintln!(
        "wrote {} coefficients ({} blocks) to {}",
        series.materialized().len(),
        args.kmax - 1,
        args.out.display()
    );
    Ok(())
}
