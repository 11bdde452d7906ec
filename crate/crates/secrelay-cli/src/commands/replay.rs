//! `replay`: re-run a recorded manifest and compare output digests. The
//! determinism contract says the bytes must match even if the worker count
//! or machine differs.

use crate::args::ReplayArgs;
use crate::manifest::{sha256_hex, RunManifest};
use crate::{CliError, CliResult};
use std::io::Write;
use std::path::PathBuf;

pub fn run(args: &ReplayArgs, out: &mut dyn Write) -> CliResult<()> {
    let manifest = RunManifest::load(&args.manifest)?;
    let original = manifest.outputs.first().ok_or_else(|| {
        CliError::Usage("manifest records no outputs; nothing to replay".into())
    })?;

    let keep_output = args.output.is_some();
    let target: PathBuf = match &args.output {
        Some(p) => p.clone(),
        None => {
            let ext = PathBuf::from(&original.path)
                .extension()
                .map(|e| e.to_string_lossy().into_owned())
                .unwrap_or_else(|| "out".into());
            std::env::temp_dir().join(format!(
                "secrelay-replay-{}-{}.{ext}",
                std::process::id(),
                std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_nanos())
                    .unwrap_or(0)
            ))
        }
    };

    let mut sink = Vec::new();
    match manifest.command.as_str() {
        "fig2" => {
            let mut p: super::fig2::Params = params_from(&manifest)?;
            p.output = target.clone();
            super::fig2::run(&p, &mut sink)?;
        }
        "fig3" => {
            let mut p: super::fig3::Params = params_from(&manifest)?;
            p.output = target.clone();
            super::fig3::run(&p, &mut sink)?;
        }
        "fig5" => {
            let mut p: super::fig5::Params = params_from(&manifest)?;
            p.output = target.clone();
            super::fig5::run(&p, &mut sink)?;
        }
        "fig6" => {
            let mut p: super::fig6::Params = params_from(&manifest)?;
            p.output = target.clone();
            super::fig6::run(&p, &mut sink)?;
        }
        other => {
            return Err(CliError::Usage(format!(
                "command `{other}` is not replayable (no recorded file output)"
            )))
        }
    }

    let replayed = sha256_hex(&target)?;
    let matches = replayed == original.sha256;
    writeln!(
        out,
        "replay {}: recorded {} replayed {} -> {}",
        manifest.command,
        &original.sha256[..16.min(original.sha256.len())],
        &replayed[..16],
        if matches { "match" } else { "MISMATCH" }
    )?;

    if !keep_output {
        let _ = std::fs::remove_file(&target);
        let _ = std::fs::remove_file(crate::manifest::manifest_path_for(&target));
    }

    if matches {
        Ok(())
    } else {
        Err(CliError::Validation(format!(
            "replay of `{}` produced different bytes",
            manifest.command
        )))
    }
}

fn params_from<T: serde::de::DeserializeOwned>(manifest: &RunManifest) -> CliResult<T> {
    serde_json::from_value(manifest.parameters.clone()).map_err(|e| {
        CliError::Usage(format!(
            "manifest parameters do not match command `{}`: {e}",
            manifest.command
        ))
    })
}
