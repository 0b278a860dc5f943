// SPDX-License-Identifier: Apache-2.0
//! Argument values: command-line literals with a JSON file as fallback.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::Value;

use boxplus_core::maxplus::MSym;
use boxplus_core::{Matrix, Scalar, Vector};

use crate::CliError;

/// Named inputs read from `--file`. Arrays are flattened to the literal
/// syntax: `[1, 2]` becomes `"1,2"` and `[[1, 2], [3, 4]]` becomes `"1,2;3,4"`.
#[derive(Debug, Default)]
pub struct FileInputs(BTreeMap<String, String>);

impl FileInputs {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(FileInputs::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let v: Value = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let Value::Object(map) = v else {
            return Err(CliError::Usage("--file must hold a JSON object".into()));
        };
        Ok(FileInputs(
            map.into_iter().map(|(k, v)| (k, literal(&v))).collect(),
        ))
    }

    /// The command-line value if given, otherwise the file entry.
    pub fn get(&self, name: &str, arg: &Option<String>) -> Result<String, CliError> {
        self.opt(name, arg)
            .ok_or_else(|| CliError::Usage(format!("missing --{name}")))
    }

    pub fn opt(&self, name: &str, arg: &Option<String>) -> Option<String> {
        arg.clone().or_else(|| self.0.get(name).cloned())
    }

    pub fn scalar(&self, name: &str, arg: &Option<String>) -> Result<Scalar, CliError> {
        Ok(self.get(name, arg)?.parse()?)
    }

    pub fn vector(&self, name: &str, arg: &Option<String>) -> Result<Vector, CliError> {
        Ok(self.get(name, arg)?.parse()?)
    }

    pub fn scalars(&self, name: &str, arg: &Option<String>) -> Result<Vec<Scalar>, CliError> {
        Ok(self.vector(name, arg)?.into_coords())
    }

    pub fn matrix(&self, name: &str, arg: &Option<String>) -> Result<Matrix, CliError> {
        parse_matrix(&self.get(name, arg)?)
    }

    pub fn msyms(&self, name: &str, arg: &Option<String>) -> Result<Vec<MSym>, CliError> {
        self.get(name, arg)?
            .split(',')
            .map(|s| s.parse().map_err(CliError::from))
            .collect()
    }
}

fn literal(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().any(Value::is_array) => {
            items.iter().map(literal).collect::<Vec<_>>().join(";")
        }
        Value::Array(items) => items.iter().map(literal).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

/// Rows separated by `;`, entries by `,`.
pub fn parse_matrix(s: &str) -> Result<Matrix, CliError> {
    let rows = s
        .split(';')
        .map(|r| r.parse::<Vector>().map(Vector::into_coords))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows)?)
}

/// Points separated by `;`.
pub fn parse_points(s: &str) -> Result<Vec<Vector>, CliError> {
    s.split(';')
        .map(|p| p.parse::<Vector>().map_err(CliError::from))
        .collect()
}

/// Comma-separated exponents, e.g. `1,2,4,8`.
pub fn parse_p_grid(s: &str) -> Result<Vec<u32>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Usage(format!("bad p value {t:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        let v: Value = serde_json::from_str(r#"[[3, 1], [1, -2]]"#).unwrap();
        assert_eq!(literal(&v), "3,1;1,-2");
        let v: Value = serde_json::from_str(r#"["1/2", 3]"#).unwrap();
        assert_eq!(literal(&v), "1/2,3");
        assert_eq!(parse_matrix("3,1;1,-2").unwrap().order(), 2);
        assert!(parse_matrix("3,1;1").is_err());
        assert_eq!(parse_p_grid("1, 2,4").unwrap(), vec![1, 2, 4]);
        assert_eq!(parse_points("1,0;0,1").unwrap().len(), 2);
    }
}
