//! `key=value` parameter lists.

use std::collections::BTreeMap;

use crate::error::CliError;

/// Parameters not yet consumed. Each lookup removes its key, and
/// [`Params::finish`] rejects whatever is left.
#[derive(Debug, Clone, Default)]
pub struct Params {
    raw: BTreeMap<String, String>,
}

impl Params {
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self, CliError> {
        let mut raw = BTreeMap::new();
        for item in items {
            let item = item.as_ref();
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("expected key=value, got '{item}'")))?;
            if raw.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
                return Err(CliError::usage(format!("parameter '{k}' given twice")));
            }
        }
        Ok(Params { raw })
    }

    pub fn take_str(&mut self, key: &str) -> Option<String> {
        self.raw.remove(key)
    }

    pub fn real(&mut self, key: &str) -> Result<Option<f64>, CliError> {
        match self.raw.remove(key) {
            None => Ok(None),
            Some(v) => parse_real(&v)
                .map(Some)
                .map_err(|_| CliError::usage(format!("parameter {key}={v} is not a number"))),
        }
    }

    pub fn real_or(&mut self, key: &str, default: f64) -> Result<f64, CliError> {
        Ok(self.real(key)?.unwrap_or(default))
    }

    pub fn required_real(&mut self, key: &str) -> Result<f64, CliError> {
        self.real(key)?
            .ok_or_else(|| CliError::usage(format!("missing parameter {key}=<number>")))
    }

    pub fn count(&mut self, key: &str) -> Result<Option<u32>, CliError> {
        match self.raw.remove(key) {
            None => Ok(None),
            Some(v) => v
                .parse::<u32>()
                .map(Some)
                .map_err(|_| CliError::usage(format!("parameter {key}={v} is not a non-negative integer"))),
        }
    }

    pub fn count_or(&mut self, key: &str, default: u32) -> Result<u32, CliError> {
        Ok(self.count(key)?.unwrap_or(default))
    }

    pub fn required_count(&mut self, key: &str) -> Result<u32, CliError> {
        self.count(key)?
            .ok_or_else(|| CliError::usage(format!("missing parameter {key}=<integer>")))
    }

    pub fn finish(self) -> Result<(), CliError> {
        if let Some(k) = self.raw.keys().next() {
            return Err(CliError::usage(format!("unknown parameter '{k}'")));
        }
        Ok(())
    }
}

/// Accepts plain numbers, `pi` and `e`.
pub fn parse_real(s: &str) -> Result<f64, std::num::ParseFloatError> {
    match s {
        "pi" => Ok(std::f64::consts::PI),
        "-pi" => Ok(-std::f64::consts::PI),
        "e" => Ok(std::f64::consts::E),
        _ => s.parse(),
    }
}
