//! Plain-text tables for the JSON objects the workbench writes.

use std::fmt::Write;

use serde_json::Value;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.strip_suffix("/1").unwrap_or(s).to_string(),
        Value::Null => "-".into(),
        Value::Array(items) => format!("({})", items.iter().map(scalar).collect::<Vec<_>>().join(",")),
        other => other.to_string(),
    }
}

fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn report(v: &Value) -> String {
    let failures = v["failures"].as_array().map(Vec::as_slice).unwrap_or_default();
    let status = if failures.is_empty() { "pass" } else { "FAIL" };
    let mut out = format!("{status}  {}  instances={}  failures={}\n", scalar(&v["check"]), v["instances"], failures.len());
    if !failures.is_empty() {
        let mut rows = vec![vec!["seed".into(), "location".into(), "lhs".into(), "rhs".into()]];
        rows.extend(failures.iter().map(|f| ["seed", "location", "lhs", "rhs"].iter().map(|k| scalar(&f[*k])).collect()));
        out.push_str(&grid(&rows));
    }
    out
}

fn monomial(v: &Value) -> String {
    let factors = v["factors"].as_array().map(Vec::as_slice).unwrap_or_default();
    if factors.is_empty() {
        return "1\n".into();
    }
    let parts: Vec<String> = factors
        .iter()
        .map(|f| {
            let e = f["e"].as_i64().unwrap_or(0);
            let base = format!("y[{},{}]", f["i"], scalar(&f["k"]));
            if e == 1 {
                base
            } else {
                format!("{base}^{e}")
            }
        })
        .collect();
    format!("{}\n", parts.join(" "))
}

fn tableau(v: &Value) -> String {
    let rows = v["rows"].as_array().map(Vec::as_slice).unwrap_or_default();
    let mut out = String::new();
    for (k, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.as_array().map(|r| r.iter().map(scalar).collect()).unwrap_or_default();
        let _ = writeln!(out, "{}: {}", k + 1, cells.join(" "));
    }
    out
}

fn matrix(v: &Value) -> String {
    let rows: Vec<Vec<String>> = v["entries"]
        .as_array()
        .map(|rows| rows.iter().map(|r| r.as_array().map(|r| r.iter().map(scalar).collect()).unwrap_or_default()).collect())
        .unwrap_or_default();
    format!("pi = {}\n{}", scalar(&v["pi"]), grid(&rows))
}

fn slice_point(v: &Value) -> String {
    let mut rows = vec![vec!["i".into(), "j".into(), "r".into(), "a".into()]];
    if let Some(a) = v["a"].as_array() {
        for (i, row) in a.iter().enumerate() {
            for (j, entry) in row.as_array().into_iter().flatten().enumerate() {
                for c in entry.as_array().into_iter().flatten() {
                    rows.push(vec![(i + 1).to_string(), (j + 1).to_string(), c["r"].to_string(), scalar(&c["v"])]);
                }
            }
        }
    }
    format!("n = {}  lambda = {}  mu = {}\n{}", v["n"], scalar(&v["lambda"]), scalar(&v["mu"]), grid(&rows))
}

fn key_values(v: &serde_json::Map<String, Value>) -> String {
    let rows: Vec<Vec<String>> = v.iter().map(|(k, x)| vec![k.clone(), scalar(x)]).collect();
    grid(&rows)
}

/// Renders one JSON value; arrays render element by element.
pub fn render(v: &Value) -> String {
    match v {
        Value::Object(map) if map.contains_key("check") => report(v),
        Value::Object(map) if map.contains_key("factors") => monomial(v),
        Value::Object(map) if map.contains_key("rows") => tableau(v),
        Value::Object(map) if map.contains_key("entries") => matrix(v),
        Value::Object(map) if map.contains_key("a") => slice_point(v),
        Value::Object(map) => key_values(map),
        Value::Array(items) if items.iter().all(|x| x.is_u64()) => format!("{}\n", scalar(v)),
        Value::Array(items) => items.iter().map(render).collect::<Vec<_>>().join(""),
        other => format!("{}\n", scalar(other)),
    }
}

/// Renders a JSON document or a JSON-lines stream.
pub fn render_text(text: &str) -> Result<String, serde_json::Error> {
    let stream = serde_json::Deserializer::from_str(text).into_iter::<Value>();
    let mut out = String::new();
    for value in stream {
        out.push_str(&render(&value?));
    }
    Ok(out)
}
