use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::Failure;

pub const FILE_NAME: &str = "manifest.json";

/// Written next to every set of data files.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub version: String,
    pub master_seed: Option<u64>,
    pub threads: usize,
    /// The subcommand's flags with the seed already resolved.
    pub parameters: Value,
    /// File names relative to the manifest's directory.
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new<P: Serialize>(
        subcommand: &str,
        master_seed: Option<u64>,
        threads: usize,
        parameters: &P,
        outputs: &[&str],
    ) -> Self {
        RunManifest {
            subcommand: subcommand.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            master_seed,
            threads,
            parameters: serde_json::to_value(parameters).expect("parameters serialize"),
            outputs: outputs.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn write(&self, dir: &Path) -> Result<(), Failure> {
        let text = serde_json::to_string_pretty(self).expect("manifest serializes");
        fs::write(dir.join(FILE_NAME), text + "\n")?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| Failure::Io(format!("{}: not a run manifest: {e}", path.display())))
    }

    pub fn parameters<P: for<'de> Deserialize<'de>>(&self) -> Result<P, Failure> {
        serde_json::from_value(self.parameters.clone()).map_err(|e| {
            Failure::Io(format!(
                "manifest parameters for {:?}: {e}",
                self.subcommand
            ))
        })
    }
}
