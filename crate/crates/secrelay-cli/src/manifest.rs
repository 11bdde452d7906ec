//! Run manifests: every output file gets a sibling
//! `<output>.manifest.json` recording the command, its fully resolved
//! parameters, the seed, tool version, timestamps, and output digests.
//! Re-running the same parameters must reproduce byte-identical outputs
//! (`replay` automates the comparison).

use crate::CliResult;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct OutputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    pub seed: Option<u64>,
    /// The command's fully resolved parameter struct.
    pub parameters: serde_json::Value,
    pub started_utc: String,
    pub finished_utc: String,
    pub outputs: Vec<OutputDigest>,
}

pub fn sha256_hex(path: &Path) -> CliResult<String> {
    let bytes = std::fs::read(path)?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    Ok(format!("{:x}", hasher.finalize()))
}

pub fn manifest_path_for(output: &Path) -> PathBuf {
    let mut name = output
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "output".to_string());
    name.push_str(".manifest.json");
    output.with_file_name(name)
}

pub fn now_utc() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
}

impl RunManifest {
    pub fn write_for(&self, output: &Path) -> CliResult<PathBuf> {
        let path = manifest_path_for(output);
        let json = serde_json::to_string_pretty(self)
            .map_err(|e| crate::CliError::Usage(format!("manifest serialization: {e}")))?;
        std::fs::write(&path, json + "\n")?;
        Ok(path)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
            .map_err(|e| crate::CliError::Usage(format!("manifest {}: {e}", path.display())))
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_path_appends_suffix() {
        assert_eq!(
            manifest_path_for(Path::new("/tmp/fig5.csv")),
            PathBuf::from("/tmp/fig5.csv.manifest.json")
        );
    }

    #[test]
    fn roundtrip() {
        let m = RunManifest {
            command: "fig5".into(),
            version: "0.1.0".into(),
            seed: Some(42),
            parameters: serde_json::json!({"trials": 1000}),
            started_utc: now_utc(),
            finished_utc: now_utc(),
            outputs: vec![OutputDigest {
                path: "fig5.csv".into(),
                sha256: "00".into(),
            }],
        };
        let text = serde_json::to_string(&m).unwrap();
        let back = RunManifest::from_json(&text).unwrap();
        assert_eq!(back.command, "fig5");
        assert_eq!(back.outputs, m.outputs);
    }
}
