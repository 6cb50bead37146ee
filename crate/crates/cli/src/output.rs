//! CSV and JSON rendering of sweep outputs with atomic file replacement.
//!
//! Every numeric value is printed with 12 significant digits in scientific
//! notation, making repeated runs byte-identical.

use crate::runner::SweepOutput;
use std::io;
use std::path::Path;

/// 12 significant digits, locale-independent.
pub fn fmt_value(x: f64) -> String {
    if x == 0.0 {
        // normalize -0.0 so parallel/serial runs cannot differ in sign bits
        return "0.00000000000e0".into();
    }
    format!("{:.11e}", x)
}

/// CSV with header `t,W_1_1,...,W_d_d,<measures...>,regime`.
pub fn render_csv(out: &SweepOutput) -> String {
    let d = out.config.system.dim();
    let mut header = vec!["t".to_string()];
    for i in 1..=d {
        for j in 1..=d {
            header.push(format!("W_{i}_{j}"));
        }
    }
    header.extend(out.measure_columns.iter().cloned());
    header.push("regime".into());

    let mut text = header.join(",");
    text.push('\n');
    for row in &out.rows {
        let mut fields = Vec::with_capacity(header.len());
        fields.push(fmt_value(row.t));
        fields.extend(row.w.iter().map(|w| fmt_value(*w)));
        fields.extend(row.measures.iter().map(|m| fmt_value(*m)));
        fields.push(row.regime.clone());
        text.push_str(&fields.join(","));
        text.push('\n');
    }
    text
}

/// JSON object {"config": …, "columns": …, "rows": …} mirroring the CSV.
pub fn render_json(out: &SweepOutput) -> String {
    let d = out.config.system.dim();
    let mut w_columns = Vec::new();
    for i in 1..=d {
        for j in 1..=d {
            w_columns.push(format!("W_{i}_{j}"));
        }
    }
    let doc = serde_json::json!({
        "config": out.config,
        "w_columns": w_columns,
        "measure_columns": out.measure_columns,
        "rows": out.rows.iter().map(|r| {
            serde_json::json!({
                "t": r.t,
                "w": r.w,
                "measures": r.measures,
                "regime": r.regime,
            })
        }).collect::<Vec<_>>(),
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    text
}

/// Write via a sibling temp file and rename, so a crash never leaves a
/// half-written output and existing files are replaced atomically.
pub fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    if let Some(dir) = dir {
        std::fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension(format!(
        "{}.tmp{}",
        path.extension().and_then(|e| e.to_str()).unwrap_or(""),
        std::process::id()
    ));
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;
    use crate::runner::run_sweep;

    #[test]
    fn csv_layout_and_formatting() {
        let cfg = parse_config(
            r#"{"system":"qubit","state":"mixed","channel":"rtn","gamma":1,"b":0.07,"t_stop":5,"steps":3,"measures":["negativity"]}"#,
        )
        .unwrap();
        let out = run_sweep(&cfg).unwrap();
        let csv = render_csv(&out);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "t,W_1_1,W_1_2,W_2_1,W_2_2,negativity,regime");
        let row = lines.next().unwrap();
        assert!(row.starts_with("0.00000000000e0,2.50000000000e-1"));
        assert!(row.ends_with("markovian"));
        assert_eq!(csv.lines().count(), 4);
    }

    #[test]
    fn two_qubit_csv_has_sixteen_w_columns_plus_measures() {
        let cfg = parse_config(
            r#"{"system":"twoqubit","state":"bell:phi+","channel":"rtn","gamma":0.001,"b":0.05,"t_stop":5,"steps":2,"measures":["negativity","mana","coherence","concurrence","fidelity"]}"#,
        )
        .unwrap();
        let out = run_sweep(&cfg).unwrap();
        let csv = render_csv(&out);
        let header: Vec<&str> = csv.lines().next().unwrap().split(',').collect();
        assert_eq!(header.len(), 1 + 16 + 5 + 1);
    }

    #[test]
    fn atomic_write_replaces_existing_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        write_atomic(&path, "first\n").unwrap();
        write_atomic(&path, "second\n").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "second\n");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn json_mirror_contains_rows_and_echo() {
        let cfg = parse_config(
            r#"{"system":"qubit","state":"mixed","channel":"ad","gamma":0.01,"g":1,"t_stop":2,"steps":2,"format":"json"}"#,
        )
        .unwrap();
        let out = run_sweep(&cfg).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&render_json(&out)).unwrap();
        assert_eq!(doc["rows"].as_array().unwrap().len(), 2);
        assert_eq!(doc["config"]["system"], "qubit");
    }
}
