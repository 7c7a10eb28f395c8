use serde_json::{json, Value};

pub const SCHEMA: &str = "efgc/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutFormat {
    Json,
    Csv,
    Pretty,
}

/// The canonical output of one command: sorted keys, values rendered as strings or integers.
#[derive(Clone, Debug)]
pub struct Document {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
}

impl Document {
    pub fn to_value(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
        })
    }

    pub fn render(&self, fmt: OutFormat) -> String {
        let v = self.to_value();
        match fmt {
            OutFormat::Json => {
                let mut s = serde_json::to_string_pretty(&v).expect("serializable");
                s.push('\n');
                s
            }
            OutFormat::Csv => {
                let mut rows = Vec::new();
                flatten("", &v, &mut rows);
                let mut s = String::from("path,value\n");
                for (p, x) in rows {
                    s.push_str(&csv_field(&p));
                    s.push(',');
                    s.push_str(&csv_field(&x));
                    s.push('\n');
                }
                s
            }
            OutFormat::Pretty => {
                let mut s = String::new();
                pretty(&v, 0, &mut s);
                s
            }
        }
    }
}

fn leaf(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(&join(k), x, out)),
        Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| flatten(&join(&i.to_string()), x, out)),
        other => out.push((prefix.to_string(), leaf(other))),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn pretty(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    let mut item = |label: String, x: &Value| match x {
        Value::Object(_) | Value::Array(_) => {
            out.push_str(&format!("{pad}{label}:\n"));
            pretty(x, depth + 1, out);
        }
        other => out.push_str(&format!("{pad}{label}: {}\n", leaf(other))),
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| item(k.clone(), x)),
        Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| item(format!("[{i}]"), x)),
        other => out.push_str(&format!("{pad}{}\n", leaf(other))),
    }
}
