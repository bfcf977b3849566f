//! Rendering of tables and reports in text, JSON and Markdown.

use crate::{DimsRow, Format};
use zigzag_core::report::VerifyReport;
use zigzag_core::QSpec;

pub fn print_dims(rows: &[DimsRow], format: Format, spec: &QSpec) {
    // each cell shows the computed value with the closed form beside it
    let cell = |(got, want): (usize, usize)| {
        if got == want {
            format!("{got} ({want})")
        } else {
            format!("{got} (!= {want})")
        }
    };
    match format {
        Format::Json => {
            let objs: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "m": r.m,
                        "hh_dim": r.hh_dim.0,
                        "hh_dim_closed": r.hh_dim.1,
                        "hh_codim": r.hh_codim.0,
                        "hh_codim_closed": r.hh_codim.1,
                        "hc_dim": r.hc_dim.0,
                        "hc_dim_closed": r.hc_dim.1,
                        "rank_tau": r.rank_tau.0,
                        "rank_tau_closed": r.rank_tau.1,
                        "status": if r.ok { "ok" } else { "mismatch" },
                    })
                })
                .collect();
            let doc = serde_json::json!({ "qspec": spec.to_string(), "rows": objs });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Format::Markdown => {
            println!("| m | HH_m | HH^m | HC_m | rank tau_m | status |");
            println!("|---|------|------|------|------------|--------|");
            for r in rows {
                println!(
                    "| {} | {} | {} | {} | {} | {} |",
                    r.m,
                    r.hh_dim.0,
                    r.hh_codim.0,
                    r.hc_dim.0,
                    r.rank_tau.0,
                    if r.ok { "ok" } else { "MISMATCH" }
                );
            }
        }
        Format::Text => {
            println!("q = {spec}   (computed value, closed form in parentheses)");
            println!(
                "{:>4} {:>10} {:>10} {:>10} {:>12}  status",
                "m", "HH_m", "HH^m", "HC_m", "rank tau_m"
            );
            for r in rows {
                println!(
                    "{:>4} {:>10} {:>10} {:>10} {:>12}  {}",
                    r.m,
                    cell(r.hh_dim),
                    cell(r.hh_codim),
                    cell(r.hc_dim),
                    cell(r.rank_tau),
                    if r.ok { "ok" } else { "MISMATCH" }
                );
            }
        }
    }
}

pub fn print_pairs(lines: &[(String, String)], format: Format, header: &str) {
    match format {
        Format::Json => {
            let objs: Vec<serde_json::Value> = lines
                .iter()
                .map(|(k, v)| serde_json::json!({ "name": k, "value": v }))
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::Value::Array(objs))
                    .expect("serializable")
            );
        }
        Format::Markdown => {
            if !header.is_empty() {
                println!("**{header}**");
                println!();
            }
            for (k, v) in lines {
                println!("- `{k}` = `{v}`");
            }
        }
        Format::Text => {
            if !header.is_empty() {
                println!("{header}");
            }
            for (k, v) in lines {
                println!("{k} = {v}");
            }
        }
    }
}

pub fn print_report(report: &VerifyReport, format: Format) {
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(report).expect("serializable")
            );
        }
        Format::Markdown => {
            println!("# verify {}", report.qspec);
            for s in &report.suites {
                println!(
                    "\n## {} - {}",
                    s.suite,
                    if s.pass { "PASS" } else { "FAIL" }
                );
                for c in &s.checks {
                    let mark = if c.pass { "x" } else { " " };
                    if c.detail.is_empty() {
                        println!("- [{mark}] {}", c.label);
                    } else {
                        println!("- [{mark}] {} ({})", c.label, c.detail);
                    }
                }
            }
        }
        Format::Text => {
            for s in &report.suites {
                let passed = s.checks.iter().filter(|c| c.pass).count();
                println!(
                    "suite {:<18} {} ({passed}/{} checks)",
                    s.suite,
                    if s.pass { "PASS" } else { "FAIL" },
                    s.checks.len()
                );
                for c in s.checks.iter().filter(|c| !c.pass) {
                    println!("    FAIL {}: {}", c.label, c.detail);
                }
            }
            println!("overall: {}", if report.pass { "PASS" } else { "FAIL" });
        }
    }
}
