use std::io::{self, Write};

use clap::ValueEnum;
use linprod::kernel::{approx, format_rational, Rational};
use linprod::{CoeffVector, JacobiParams};
use serde_json::{json, Map, Value};

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn exact(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

/// Display approximation rounded to 15 significant digits.
pub fn approx15(x: &Rational) -> Value {
    let rounded: f64 = format!("{:.14e}", approx(x)).parse().unwrap_or(f64::NAN);
    serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

pub fn approx_text(x: &Rational) -> String {
    format!("{:.15}", approx(x))
}

/// The single JSON object printed per run.
pub fn record(command: &str, p: &JacobiParams, payload: Value, verdict: Option<&str>) -> Value {
    let mut obj = Map::new();
    obj.insert("command".into(), json!(command));
    obj.insert("params".into(), json!({ "alpha": exact(p.alpha()), "beta": exact(p.beta()) }));
    obj.insert("payload".into(), payload);
    if let Some(v) = verdict {
        obj.insert("verdict".into(), json!(v));
    }
    Value::Object(obj)
}

pub fn emit_json(out: &mut dyn Write, value: &Value) -> io::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    writeln!(out, "{text}")
}

pub fn coeff_rows(cv: &CoeffVector) -> Vec<Value> {
    cv.iter()
        .map(|(k, v)| json!({ "k": k, "value": exact(v), "approx": approx15(v) }))
        .collect()
}

pub const CSV_HEADER: &str = "m,n,k,value_num,value_den,approx";

pub fn write_csv(out: &mut dyn Write, cv: &CoeffVector) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for (k, v) in cv.iter() {
        writeln!(out, "{},{},{},{},{},{}", cv.m(), cv.n(), k, v.numer(), v.denom(), approx15(v))?;
    }
    Ok(())
}
