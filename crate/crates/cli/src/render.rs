//! Plain-text rendering of a report.

use serde_json::Value;

use crate::{Report, Subcommand};

pub fn render_text(report: &Report) -> String {
    let mut out = format!("{}\n", report.subcommand);
    let items: Vec<&Value> = match &report.results {
        Value::Array(xs) if report.subcommand != Subcommand::Cosets => xs.iter().collect(),
        v => vec![v],
    };
    for (i, item) in items.iter().enumerate() {
        let line = match report.subcommand {
            Subcommand::Classify => format!(
                "{}: condition (i) {}, condition (ii) {}{}",
                verdict(item["distinguished"].as_bool(), "distinguished", "not distinguished"),
                yes_no(&item["condition_i"]),
                yes_no(&item["condition_ii"]),
                match item.get("agreement").and_then(Value::as_bool) {
                    Some(true) => "; block form agrees",
                    Some(false) => "; block form DISAGREES",
                    None => "",
                }
            ),
            Subcommand::Ktype => format!(
                "lowest {} -> distinguished minimal {}{}",
                weight(&item["lowest_ktype"]),
                weight(&item["distinguished_minimal_ktype"]),
                match item.get("oracle") {
                    Some(o) => format!(" (oracle radius {}: {})", o["radius"], if o["agrees"] == true { "agrees" } else { "differs" }),
                    None => String::new(),
                }
            ),
            Subcommand::Derive => format!(
                "condition (i) {}, derivative test {}{}",
                yes_no(&item["condition_i"]),
                verdict(item["outcome"]["passes"].as_bool(), "passes", "fails"),
                if item["certifies_non_distinction"] == true { " => not distinguished" } else { "" }
            ),
            Subcommand::Eps => format!(
                "eps = {}{}",
                eps(&item["eps"]),
                match item.get("pair") {
                    Some(p) => format!("; pair eps = {}", eps(&p["eps"])),
                    None => String::new(),
                }
            ),
            Subcommand::Cosets => {
                let mut s = format!(
                    "n = {}, composition {}: {} involutions, {} classes, representatives {}",
                    item["n"],
                    item["composition"],
                    item["involutions"],
                    item["classes"].as_array().map_or(0, Vec::len),
                    if item["representatives_verified"] == true { "verified" } else { "FAILED" }
                );
                for c in item["classes"].as_array().into_iter().flatten() {
                    s.push_str(&format!(
                        "\n  {} x{} dim {}{}",
                        c["representative"],
                        c["members"],
                        c["orbit_dimension"],
                        if c["open"] == true { " (open)" } else { "" }
                    ));
                }
                s
            }
            Subcommand::VerifyKernel => format!(
                "s = {}: case 1 {}, case 2 {}",
                gaussian(&item["s"]),
                kernel_case(&item["case1"]),
                kernel_case(&item["case2"])
            ),
            Subcommand::Selftest => format!(
                "{} {}: {}",
                if item["passed"] == true { "PASS" } else { "FAIL" },
                item["name"].as_str().unwrap_or("?"),
                item["detail"].as_str().unwrap_or("")
            ),
        };
        if items.len() > 1 {
            out.push_str(&format!("  [{i}] {line}\n"));
        } else {
            out.push_str(&format!("  {line}\n"));
        }
    }
    out
}

fn verdict(v: Option<bool>, yes: &'static str, no: &'static str) -> &'static str {
    if v == Some(true) {
        yes
    } else {
        no
    }
}

fn yes_no(v: &Value) -> &'static str {
    verdict(v.as_bool(), "holds", "fails")
}

fn weight(v: &Value) -> String {
    let parts: Vec<String> = v.as_array().into_iter().flatten().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn gaussian(v: &Value) -> String {
    let re = v["re"].as_str().unwrap_or("0");
    let im = v["im"].as_str().unwrap_or("0");
    match (re, im) {
        (_, "0") => re.to_string(),
        ("0", _) => format!("{im}i"),
        _ if im.starts_with('-') => format!("{re}{im}i"),
        _ => format!("{re}+{im}i"),
    }
}

fn eps(v: &Value) -> String {
    let unit = gaussian(&v["unit"]);
    let h = gaussian(&v["half_exponent"]);
    if h == "0" {
        unit
    } else {
        format!("({unit}) * ({})^({h})", v["abs_b_sq"].as_str().unwrap_or("?"))
    }
}

fn kernel_case(v: &Value) -> String {
    if let Some(reason) = v.get("skipped").and_then(Value::as_str) {
        return format!("skipped ({reason})");
    }
    format!(
        "rel err {:.1e}, ratio err {:.1e}",
        v["rel_err"].as_f64().unwrap_or(f64::NAN),
        v["ratio_err"].as_f64().unwrap_or(f64::NAN)
    )
}
