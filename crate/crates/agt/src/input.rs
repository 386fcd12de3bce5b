//! Ideal files: `{"vars": n, "gens": [[e_1, ..., e_n], ...]}` or
//! `{"vars": n, "components": [[a_1, ..., a_n], ...]}`.

use std::path::Path;

use agt_core::{IrreducibleComponent, Monomial, MonomialIdeal};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: line {line}, column {column}: {message}")]
    Syntax { path: String, line: usize, column: usize, message: String },
    #[error("{path}: field `{field}`: {message}")]
    Field { path: String, field: String, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub vars: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gens: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Vec<u32>>>,
}

impl IdealFile {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        IdealFile {
            vars: ideal.nvars(),
            gens: Some(ideal.gens().iter().map(|g| g.exponents().to_vec()).collect()),
            components: None,
        }
    }

    /// Validate and build the ideal; `field` prefixes error locations.
    pub fn to_ideal(&self, path: &str, field: &str) -> Result<MonomialIdeal, InputError> {
        let err = |f: String, message: String| InputError::Field { path: path.into(), field: f, message };
        if self.vars == 0 {
            return Err(err(format!("{field}vars"), "must be at least 1".into()));
        }
        let check_rows = |name: &str, rows: &[Vec<u32>]| {
            for (i, row) in rows.iter().enumerate() {
                if row.len() != self.vars {
                    return Err(err(
                        format!("{field}{name}[{i}]"),
                        format!("expected {} exponents, found {}", self.vars, row.len()),
                    ));
                }
            }
            Ok(())
        };
        let ideal = match (&self.gens, &self.components) {
            (Some(gens), None) => {
                check_rows("gens", gens)?;
                MonomialIdeal::new(self.vars, gens.iter().cloned().map(Monomial::new).collect())
                    .map_err(|e| err(format!("{field}gens"), e.to_string()))?
            }
            (None, Some(comps)) => {
                check_rows("components", comps)?;
                if comps.is_empty() {
                    return Err(err(format!("{field}components"), "must not be empty".into()));
                }
                let mut parsed = Vec::with_capacity(comps.len());
                for (i, row) in comps.iter().enumerate() {
                    let c = IrreducibleComponent::new(row.clone())
                        .map_err(|e| err(format!("{field}components[{i}]"), e.to_string()))?;
                    parsed.push(c);
                }
                MonomialIdeal::from_components(&parsed).map_err(|e| err(format!("{field}components"), e.to_string()))?
            }
            (Some(_), Some(_)) => {
                return Err(err(format!("{field}gens"), "give either `gens` or `components`, not both".into()))
            }
            (None, None) => return Err(err(format!("{field}gens"), "missing `gens` or `components`".into())),
        };
        if !ideal.is_m_primary() {
            return Err(err(format!("{field}gens"), "ideal must contain a pure power of every variable".into()));
        }
        Ok(ideal)
    }
}

fn syntax(path: &str, e: serde_json::Error) -> InputError {
    InputError::Syntax { path: path.into(), line: e.line(), column: e.column(), message: e.to_string() }
}

fn read(path: &Path) -> Result<(String, String), InputError> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io { path: name.clone(), source })?;
    Ok((name, text))
}

pub fn parse_ideal(text: &str, path: &str) -> Result<MonomialIdeal, InputError> {
    let file: IdealFile = serde_json::from_str(text).map_err(|e| syntax(path, e))?;
    file.to_ideal(path, "")
}

/// A JSON array of ideal objects.
pub fn parse_ideals(text: &str, path: &str) -> Result<Vec<MonomialIdeal>, InputError> {
    let files: Vec<IdealFile> = serde_json::from_str(text).map_err(|e| syntax(path, e))?;
    files.iter().enumerate().map(|(i, f)| f.to_ideal(path, &format!("[{i}]."))).collect()
}

pub fn read_ideal(path: &Path) -> Result<MonomialIdeal, InputError> {
    let (name, text) = read(path)?;
    parse_ideal(&text, &name)
}

pub fn read_ideals(path: &Path) -> Result<Vec<MonomialIdeal>, InputError> {
    let (name, text) = read(path)?;
    parse_ideals(&text, &name)
}
