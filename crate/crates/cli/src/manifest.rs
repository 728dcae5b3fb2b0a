//! Run manifests: the full logical parameter set of a command plus digests
//! of the files it wrote. Replaying the recorded command reproduces the
//! outputs byte for byte, so the digests double as determinism receipts.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::fs;
use std::path::Path;

use crate::CliError;

#[derive(Serialize)]
pub struct OutputDigest {
    pub file: String,
    pub sha256: String,
}

#[derive(Serialize)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    pub params: serde_json::Value,
    pub outputs: Vec<OutputDigest>,
}

impl RunManifest {
    pub fn new(command: &str, params: serde_json::Value) -> Self {
        RunManifest {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            params,
            outputs: Vec::new(),
        }
    }

    /// Digest a file that was just written into the output directory.
    pub fn record(&mut self, dir: &Path, name: &str) -> Result<(), CliError> {
        let bytes = fs::read(dir.join(name))?;
        let digest = Sha256::digest(&bytes);
        self.outputs.push(OutputDigest { file: name.to_string(), sha256: hex::encode(digest) });
        Ok(())
    }

    pub fn write(&self, dir: &Path) -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(self)
            .map_err(|e| CliError::Numeric(bohrstrip::Error::Serde(e)))?;
        fs::write(dir.join("manifest.json"), text + "\n")?;
        Ok(())
    }
}
