//! Command implementations. Each command resolves its flags against the
//! config file into a serializable parameter struct, runs, writes its output
//! table plus a manifest, and prints a short human summary.

pub mod eval;
pub mod fig2;
pub mod fig3;
pub mod fig5;
pub mod fig6;
pub mod replay;
pub mod validate;

use crate::manifest::{now_utc, sha256_hex, OutputDigest, RunManifest};
use crate::output::Table;
use crate::{output::OutputFormat, CliResult};
use std::path::Path;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Writes `table` to `path` in `format`, then the manifest next to it.
pub fn write_output_with_manifest(
    command: &str,
    parameters: serde_json::Value,
    seed: Option<u64>,
    started_utc: String,
    table: &Table,
    path: &Path,
    format: OutputFormat,
) -> CliResult<RunManifest> {
    table.write_to(path, format)?;
    let manifest = RunManifest {
        command: command.to_string(),
        version: TOOL_VERSION.to_string(),
        seed,
        parameters,
        started_utc,
        finished_utc: now_utc(),
        outputs: vec![OutputDigest {
            path: path.to_string_lossy().into_owned(),
            sha256: sha256_hex(path)?,
        }],
    };
    manifest.write_for(path)?;
    Ok(manifest)
}

fn to_json<T: serde::Serialize>(params: &T) -> CliResult<serde_json::Value> {
    serde_json::to_value(params)
        .map_err(|e| crate::CliError::Usage(format!("parameter serialization: {e}")))
}
