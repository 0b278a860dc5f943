// SPDX-License-Identifier: Apache-2.0
//! Rendering of command results.

use clap::ValueEnum;
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Out {
    Data(Value),
    Svg(String),
}

pub fn render(out: &Out, format: Format) -> Result<String, CliError> {
    match (out, format) {
        (Out::Svg(doc), _) => Ok(doc.clone()),
        (Out::Data(_), Format::Svg) => Err(CliError::Usage(
            "svg output is only available from plot commands".into(),
        )),
        (Out::Data(v), Format::Json) => Ok(format!(
            "{}\n",
            serde_json::to_string_pretty(v).expect("json values serialize")
        )),
        (Out::Data(v), Format::Text) => Ok(text(v)),
        (Out::Data(v), Format::Csv) => Ok(csv(v)),
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            format!("({})", items.iter().map(plain).collect::<Vec<_>>().join(", "))
        }
        other => other.to_string(),
    }
}

fn text(v: &Value) -> String {
    let mut s = String::new();
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                s.push_str(&format!("{k}: {}\n", plain(v)));
            }
        }
        Value::Array(items) => {
            for i in items {
                s.push_str(&plain(i));
                s.push('\n');
            }
        }
        other => {
            s.push_str(&plain(other));
            s.push('\n');
        }
    }
    s
}

fn field(v: &Value) -> String {
    let p = plain(v);
    if p.contains([',', '"', '\n']) {
        format!("\"{}\"", p.replace('"', "\"\""))
    } else {
        p
    }
}

fn row<'a>(cells: impl Iterator<Item = String>) -> String {
    let mut r = cells.collect::<Vec<_>>().join(",");
    r.push('\n');
    r
}

fn csv(v: &Value) -> String {
    match v {
        Value::Object(map) => {
            row(map.keys().map(|k| field(&Value::String(k.clone())))) + &row(map.values().map(field))
        }
        Value::Array(items) => match items.first() {
            Some(Value::Object(first)) => {
                let keys: Vec<&String> = first.keys().collect();
                let mut s = row(keys.iter().map(|k| field(&Value::String((*k).clone()))));
                for i in items {
                    s += &row(keys.iter().map(|k| field(i.get(k.as_str()).unwrap_or(&Value::Null))));
                }
                s
            }
            _ => items.iter().map(|i| row(std::iter::once(field(i)))).collect(),
        },
        other => row(std::iter::once(field(other))),
    }
}
