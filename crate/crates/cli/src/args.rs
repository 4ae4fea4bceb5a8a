use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use riemann_xi::EvalConfig;

use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "xi", version, about = "Riemann's xi function inside the critical strip")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate ξ at one point with one method.
    Eval(PointArgs),
    /// Evaluate ξ at one point with every applicable method.
    Compare(PointArgs),
    /// Tabulate ξ(1/2 + it) by three methods over a range of t.
    Scan(RangeArgs),
    /// Locate sign changes of ξ(1/2 + it) and refine them by bisection.
    Zeros(RangeArgs),
    /// Upper incomplete gamma Γ(β + 1 + ik, α).
    Gammainc(GammaArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Plain,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        <Format as ValueEnum>::from_str(s, false)
    }
}

#[derive(Args, Debug, Default)]
pub struct Common {
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long = "n-max")]
    pub n_max: Option<u32>,
    #[arg(long = "m-cap")]
    pub m_cap: Option<usize>,
    #[arg(long = "quad-step")]
    pub quad_step: Option<f64>,
    #[arg(long = "quad-T")]
    pub quad_t: Option<f64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// key=value file mirroring the long flags; flags given on the command line win.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PointArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<f64>,
    /// Shifted coordinate x0 = σ − 1/2.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "sigma")]
    pub x0: Option<f64>,
    /// Same as --t.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "t")]
    pub t0: Option<f64>,
    /// incgamma, realform, strip, theta, classical or contour.
    #[arg(long)]
    pub method: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct RangeArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub from: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub to: Option<f64>,
    #[arg(long)]
    pub step: Option<f64>,
    /// Method whose sign pattern is searched (zeros only): incgamma or classical.
    #[arg(long)]
    pub method: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct GammaArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[command(flatten)]
    pub common: Common,
}

const KNOWN_KEYS: [&str; 17] = [
    "sigma",
    "t",
    "x0",
    "t0",
    "method",
    "from",
    "to",
    "step",
    "epsilon",
    "n-max",
    "m-cap",
    "quad-step",
    "quad-T",
    "format",
    "beta",
    "k",
    "alpha",
];

/// Values read from a `--config` file.
#[derive(Debug, Default)]
pub struct FileConfig {
    values: HashMap<String, String>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value", i + 1)))?;
            let key = key.trim().trim_start_matches("--");
            if !KNOWN_KEYS.contains(&key) {
                return Err(CliError::Usage(format!("config line {}: unknown key '{key}'", i + 1)));
            }
            values.insert(key.to_string(), value.trim().to_string());
        }
        Ok(FileConfig { values })
    }

    /// The flag value if present, otherwise the file value.
    pub fn pick<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.values.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| CliError::Usage(format!("config: invalid value '{v}' for {key}"))),
        }
    }
}

pub struct Resolved {
    pub cfg: EvalConfig,
    pub format: Option<Format>,
    pub file: FileConfig,
}

impl Common {
    pub fn resolve(&self) -> Result<Resolved, CliError> {
        let file = FileConfig::load(self.config.as_deref())?;
        let mut cfg = EvalConfig::default();
        if let Some(v) = file.pick(self.epsilon, "epsilon")? {
            cfg.epsilon = v;
        }
        if let Some(v) = file.pick(self.n_max, "n-max")? {
            cfg.n_max = v;
        }
        if let Some(v) = file.pick(self.m_cap, "m-cap")? {
            cfg.m_cap = v;
        }
        if let Some(v) = file.pick(self.quad_step, "quad-step")? {
            cfg.quad_step = v;
        }
        if let Some(v) = file.pick(self.quad_t, "quad-T")? {
            cfg.quad_t = Some(v);
        }
        cfg.validate()?;
        let format = file.pick(self.format, "format")?;
        Ok(Resolved { cfg, format, file })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_win_over_file() {
        let f = FileConfig::parse("epsilon = 1e-6\n# note\nn-max=4\n").unwrap();
        assert_eq!(f.pick(Some(1e-10), "epsilon").unwrap(), Some(1e-10));
        assert_eq!(f.pick::<f64>(None, "epsilon").unwrap(), Some(1e-6));
        assert_eq!(f.pick::<u32>(None, "n-max").unwrap(), Some(4));
        assert_eq!(f.pick::<f64>(None, "sigma").unwrap(), None);
    }

    #[test]
    fn rejects_unknown_keys_and_garbage() {
        assert!(FileConfig::parse("colour=red").is_err());
        assert!(FileConfig::parse("epsilon").is_err());
        let f = FileConfig::parse("epsilon=abc").unwrap();
        assert!(f.pick::<f64>(None, "epsilon").is_err());
    }
}
