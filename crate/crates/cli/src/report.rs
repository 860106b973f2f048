//! Rendering of duality reports.

use std::fmt::Write as _;

use hyperdual::DualityReport;
use serde_json::{json, Map, Value};

fn number(n: u128) -> Value {
    u64::try_from(n)
        .map(Value::from)
        .unwrap_or_else(|_| Value::String(n.to_string()))
}

fn signed(n: i128) -> Value {
    i64::try_from(n)
        .map(Value::from)
        .unwrap_or_else(|_| Value::String(n.to_string()))
}

/// The JSON report. `serde_json::Map` keeps keys sorted.
pub fn to_json(report: &DualityReport) -> Value {
    let t = report.hypermap_type;
    let mut operations = Map::new();
    for (kind, s) in &report.operations {
        operations.insert(
            kind.name().to_string(),
            json!({
                "index": number(s.index),
                "coindex": number(s.coindex),
                "kernel": {
                    "order": number(s.kernel.order),
                    "structure": s.kernel.label(),
                },
                "self_dual": s.self_dual,
                "extreme": s.extreme,
            }),
        );
    }
    json!({
        "order": number(report.group_order),
        "type": [t.l, t.m, t.n],
        "is_map": t.is_map,
        "euler_characteristic": signed(report.euler.characteristic),
        "genus": signed(report.euler.genus),
        "operations": operations,
    })
}

pub fn to_text(report: &DualityReport) -> String {
    let t = report.hypermap_type;
    let mut out = String::new();
    writeln!(out, "order: {}", report.group_order).unwrap();
    writeln!(out, "type: {t}{}", if t.is_map { " (map)" } else { "" }).unwrap();
    writeln!(
        out,
        "euler characteristic: {} (genus {})",
        report.euler.characteristic, report.euler.genus
    )
    .unwrap();
    for (kind, s) in &report.operations {
        let mut flags = Vec::new();
        if s.self_dual {
            flags.push("self-dual");
        }
        if s.extreme {
            flags.push("extreme");
        }
        writeln!(
            out,
            "{:<7} index {}  coindex {}  kernel {}{}",
            kind.name(),
            s.index,
            s.coindex,
            s.kernel.label(),
            if flags.is_empty() {
                String::new()
            } else {
                format!("  [{}]", flags.join(", "))
            }
        )
        .unwrap();
    }
    out
}
