//! Run configuration: defaults, TOML file loading and desk-scale bounds.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::RunError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Table1,
    CheckRelations,
    CheckDualPair,
    CheckBilocal,
    Decompose,
    Harmonics,
    Massless,
    Closure,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Table1 => "table1",
            CommandKind::CheckRelations => "check-relations",
            CommandKind::CheckDualPair => "check-dual-pair",
            CommandKind::CheckBilocal => "check-bilocal",
            CommandKind::Decompose => "decompose",
            CommandKind::Harmonics => "harmonics",
            CommandKind::Massless => "massless",
            CommandKind::Closure => "closure",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraName {
    Su22,
    Unn,
    SoStar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum FamilyName {
    R,
    C,
    H,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Text => "txt",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

/// Inclusive rank range, written `lo..hi` or `lo:hi` on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRange(pub usize, pub usize);

impl FromStr for RankRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s.split_once("..").or_else(|| s.split_once(':')).ok_or_else(|| format!("expected lo..hi, got {:?}", s))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{:?}: {}", t, e));
        Ok(RankRange(parse(lo)?, parse(hi)?))
    }
}

impl fmt::Display for RankRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.0, self.1)
    }
}

/// Every parameter of every command. A TOML file may set any subset of the
/// keys; command-line flags override it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub command: Option<CommandKind>,
    pub a_range: RankRange,
    pub b_range: RankRange,
    pub c_range: RankRange,
    pub d_range: RankRange,
    pub algebra: AlgebraName,
    pub n: u16,
    pub casimir: bool,
    #[serde(rename = "L")]
    pub l: usize,
    pub trials: u32,
    pub seed: u64,
    pub level: u32,
    pub cutoff: u32,
    pub family: FamilyName,
    /// Truncated modes per flavor component in the closure check.
    pub modes: u16,
    pub flavors: u16,
    pub closure_level: u32,
    pub nmax: u32,
    pub points: u32,
    pub degree: u32,
    pub helicity_max: u32,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub stable: bool,
    pub cap: u64,
}

pub const DEFAULT_CAP: u64 = 200_000;

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: None,
            a_range: RankRange(3, 8),
            b_range: RankRange(2, 6),
            c_range: RankRange(2, 6),
            d_range: RankRange(3, 6),
            algebra: AlgebraName::SoStar,
            n: 2,
            casimir: false,
            l: 3,
            trials: 50,
            seed: 0,
            level: 3,
            cutoff: 4,
            family: FamilyName::All,
            modes: 2,
            flavors: 2,
            closure_level: 2,
            nmax: 6,
            points: 20,
            degree: 6,
            helicity_max: 2,
            format: Format::Text,
            output: None,
            stable: false,
            cap: DEFAULT_CAP,
        }
    }
}

fn bound<T: PartialOrd + fmt::Display>(name: &str, v: T, lo: T, hi: T) -> Result<(), RunError> {
    if v < lo || v > hi {
        return Err(RunError::Usage(format!("{} = {} is outside {}..={}", name, v, lo, hi)));
    }
    Ok(())
}

impl RunConfig {
    pub fn from_toml_str(s: &str) -> Result<Self, RunError> {
        toml::from_str(s).map_err(|e| RunError::Usage(format!("config: {}", e)))
    }

    pub fn from_file(path: &Path) -> Result<Self, RunError> {
        let text = std::fs::read_to_string(path).map_err(|e| RunError::Usage(format!("{}: {}", path.display(), e)))?;
        Self::from_toml_str(&text)
    }

    /// Checks the parameters read by the selected command.
    pub fn validate(&self) -> Result<CommandKind, RunError> {
        let cmd = self.command.ok_or_else(|| RunError::Usage("no command given".into()))?;
        match cmd {
            CommandKind::Table1 => {
                for (name, r, lo) in
                    [("a_range", self.a_range, 3), ("b_range", self.b_range, 2), ("c_range", self.c_range, 2), ("d_range", self.d_range, 3)]
                {
                    bound(name, r.0, lo, 12)?;
                    bound(name, r.1, r.0, 12)?;
                }
            }
            CommandKind::CheckRelations => {
                if self.algebra != AlgebraName::Su22 {
                    bound("n", self.n, 1, 3)?;
                }
                if self.casimir {
                    bound("n (casimir)", self.n, 1, 2)?;
                }
                bound("cutoff", self.cutoff, 4, 8)?;
            }
            CommandKind::CheckDualPair => bound("n", self.n, 1, 3)?,
            CommandKind::CheckBilocal => {
                bound("L", self.l, 1, 6)?;
                bound("trials", self.trials, 0, 1000)?;
            }
            CommandKind::Decompose => {
                if self.algebra != AlgebraName::SoStar {
                    return Err(RunError::Usage("decompose supports --algebra so-star only".into()));
                }
                bound("n", self.n, 1, 2)?;
                bound("level", self.level, 0, 8)?;
            }
            CommandKind::Harmonics => {
                bound("nmax", self.nmax, 1, 8)?;
                bound("points", self.points, 0, 500)?;
            }
            CommandKind::Massless => {
                bound("degree", self.degree, 2, 10)?;
                bound("helicity_max", self.helicity_max, 0, 6)?;
            }
            CommandKind::Closure => {
                bound("modes", self.modes, 1, 2)?;
                bound("flavors", self.flavors, 1, 3)?;
                bound("closure_level", self.closure_level, 0, 3)?;
            }
        }
        Ok(cmd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toml_overrides_defaults() {
        let c = RunConfig::from_toml_str("command = \"check-bilocal\"\nL = 2\nseed = 7\na_range = [3, 4]\n").unwrap();
        assert_eq!(c.command, Some(CommandKind::CheckBilocal));
        assert_eq!((c.l, c.seed, c.trials), (2, 7, 50));
        assert_eq!(c.a_range, RankRange(3, 4));
        assert!(RunConfig::from_toml_str("bogus = 1").is_err());
    }

    #[test]
    fn bounds() {
        let mut c = RunConfig { command: Some(CommandKind::CheckBilocal), ..Default::default() };
        assert!(c.validate().is_ok());
        c.l = 9;
        assert!(matches!(c.validate(), Err(RunError::Usage(_))));
        assert!(RunConfig::default().validate().is_err());
    }

    #[test]
    fn range_parsing() {
        assert_eq!("2..5".parse::<RankRange>().unwrap(), RankRange(2, 5));
        assert_eq!("2:5".parse::<RankRange>().unwrap(), RankRange(2, 5));
        assert!("5".parse::<RankRange>().is_err());
    }
}
