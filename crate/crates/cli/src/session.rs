//! Session configuration: generator counts, weights, algebra selector,
//! and verification knobs, merged from an optional config file and flags.

use std::fmt;
use std::path::Path;

use qsuperspace::{AlgebraError, ParamConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algebra {
    /// The quantum superspace with generators `a_1 .. a_{m+n}`.
    A,
    /// The logarithmic extension with generators `g, x_1 .. x_{m+n}`.
    M,
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebra::A => write!(f, "A"),
            Algebra::M => write!(f, "M"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone)]
pub struct SessionConfig {
    pub param: ParamConfig,
    pub algebra: Algebra,
    pub order: usize,
    pub samples: usize,
    pub seed: u64,
    pub format: Format,
}

/// Raw option set before validation; every field optional so that config
/// files and flags can layer.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub z: Option<Vec<i64>>,
    pub algebra: Option<Algebra>,
    pub order: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
}

impl Options {
    /// Later layers win: `self` are the flags, `fallback` the config file.
    pub fn or(self, fallback: Options) -> Options {
        Options {
            m: self.m.or(fallback.m),
            n: self.n.or(fallback.n),
            z: self.z.or(fallback.z),
            algebra: self.algebra.or(fallback.algebra),
            order: self.order.or(fallback.order),
            samples: self.samples.or(fallback.samples),
            seed: self.seed.or(fallback.seed),
            format: self.format.or(fallback.format),
        }
    }

    pub fn into_session(self) -> Result<SessionConfig, AlgebraError> {
        let m = self.m.unwrap_or(1);
        let n = self.n.unwrap_or(1);
        let z = self.z.unwrap_or_else(|| {
            let mut z = vec![1i64];
            z.extend(2..=(m + n) as i64);
            z
        });
        let param = ParamConfig::new(m, n, z)?;
        Ok(SessionConfig {
            param,
            algebra: self.algebra.unwrap_or(Algebra::A),
            order: self.order.unwrap_or(6),
            samples: self.samples.unwrap_or(100),
            seed: self.seed.unwrap_or(0),
            format: self.format.unwrap_or(Format::Text),
        })
    }
}

pub fn parse_z(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| format!("invalid weight '{part}' in --z"))
        })
        .collect()
}

pub fn parse_algebra(s: &str) -> Result<Algebra, String> {
    match s {
        "A" | "a" => Ok(Algebra::A),
        "M" | "m" => Ok(Algebra::M),
        other => Err(format!("invalid algebra '{other}', expected A or M")),
    }
}

pub fn parse_format(s: &str) -> Result<Format, String> {
    match s {
        "text" => Ok(Format::Text),
        "json" | "structured" => Ok(Format::Json),
        other => Err(format!("invalid format '{other}', expected text or json")),
    }
}

/// `key=value` per line; `#` starts a comment. Keys: m, n, z, algebra,
/// order, samples, seed, format.
pub fn load_config_file(path: &Path) -> Result<Options, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
    let mut opts = Options::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{}: expected key=value", path.display(), lineno + 1))?;
        let (key, value) = (key.trim(), value.trim());
        let bad = |e: String| format!("{}:{}: {e}", path.display(), lineno + 1);
        match key {
            "m" => opts.m = Some(value.parse().map_err(|_| bad("invalid m".into()))?),
            "n" => opts.n = Some(value.parse().map_err(|_| bad("invalid n".into()))?),
            "z" => opts.z = Some(parse_z(value).map_err(bad)?),
            "algebra" => opts.algebra = Some(parse_algebra(value).map_err(bad)?),
            "order" => opts.order = Some(value.parse().map_err(|_| bad("invalid order".into()))?),
            "samples" => {
                opts.samples = Some(value.parse().map_err(|_| bad("invalid samples".into()))?)
            }
            "seed" => opts.seed = Some(value.parse().map_err(|_| bad("invalid seed".into()))?),
            "format" => opts.format = Some(parse_format(value).map_err(bad)?),
            other => return Err(bad(format!("unknown key '{other}'"))),
        }
    }
    Ok(opts)
}
