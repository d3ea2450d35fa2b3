//! Plain-text summary of a JSON report.

use std::fmt::Write;

use serde_json::Value;

fn flag(v: &Value) -> &'static str {
    match v.as_bool() {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).unwrap_or_default()
}

fn skipped(out: &mut String, name: &str, v: &Value) -> bool {
    if v["status"] == "skipped" {
        let _ = writeln!(out, "{name}: skipped ({})", v["reason"].as_str().unwrap_or(""));
        return true;
    }
    false
}

fn dims_table(out: &mut String, rows: &Value, key: &str) {
    for r in rows.as_array().into_iter().flatten() {
        let _ = writeln!(out, "    {key}={:<4} {}", r[key], compact(&r["dims"]));
    }
}

pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    let p = &report["presentation"];
    let _ = writeln!(out, "field: {}", report["field"].as_str().unwrap_or(""));
    let _ = writeln!(out, "generators: {}  N = {}  dim R = {}", compact(&p["generators"]), p["degree"], p["relation_dim"]);
    for r in p["relations"].as_array().into_iter().flatten() {
        let _ = writeln!(out, "  {}", r.as_str().unwrap_or(""));
    }
    let _ = writeln!(out, "hilbert A:  {}", compact(&p["hilbert"]));
    let _ = writeln!(out, "hilbert A!: {}", compact(&p["dual_hilbert"]));

    if let Some(k) = report.get("koszul") {
        if !skipped(&mut out, "koszul", k) {
            let _ = write!(out, "koszul: {} via {}", k["status"].as_str().unwrap_or(""), k["method"].as_str().unwrap_or(""));
            if let Some(b) = k.get("bound") {
                let _ = write!(out, " (bound {b})");
            }
            if let Some(wit) = k.get("witness") {
                let _ = write!(out, " witness i={} j={} dim={}", wit["i"], wit["j"], wit["dim"]);
            }
            let _ = writeln!(out);
            let _ = writeln!(out, "  confluent: {}  extra condition: {}", flag(&k["confluence"]["confluent"]), flag(&k["extra_condition"]["holds"]));
        }
    }
    if let Some(b) = report.get("bar") {
        if !skipped(&mut out, "bar", b) {
            let _ = writeln!(out, "bar oracle: concentrated {}  agrees with verdict {}", flag(&b["concentrated"]), flag(&b["agrees_with_koszul_verdict"]));
        }
    }
    if let Some(g) = report.get("gldim") {
        if !skipped(&mut out, "gldim", g) {
            let _ = writeln!(out, "global dimension: {} {}", g["status"].as_str().unwrap_or(""), g["value"]);
        }
    }
    if let Some(g) = report.get("gorenstein") {
        if !skipped(&mut out, "gorenstein", g) {
            let _ = writeln!(out, "AS-Gorenstein: {}  D = {}  n(D) = {}  dim A!_n(D) = {}", g["status"].as_str().unwrap_or(""), g["global_dimension"], g["top_degree"], g["top_dim"]);
            if !g["failure"].is_null() {
                let _ = writeln!(out, "  failure: {}", compact(&g["failure"]));
            }
            if let Some(u) = g["u"].as_str() {
                let _ = writeln!(out, "  u = {u}");
                let _ = writeln!(out, "  w = {}", g["w"].as_str().unwrap_or(""));
            }
            if let Some(e) = g.get("ext_k_a") {
                let _ = writeln!(out, "  Ext_A(k,A) by internal degree s:");
                dims_table(&mut out, &e["table"], "s");
            }
        }
    }
    if let Some(f) = report.get("frobenius") {
        if !skipped(&mut out, "frobenius", f) {
            let scalars: Vec<String> = f["nu"].as_array().into_iter().flatten().map(|n| n["scalar"].as_str().unwrap_or("matrix").to_string()).collect();
            let _ = writeln!(out, "frobenius: ν per component [{}]  E(A) {}", scalars.join(", "), f["symmetry"].as_str().unwrap_or(""));
            let _ = writeln!(out, "  ν multiplicative {}  module map {}  ν₁ preserves R^⊥ {}", flag(&f["nu_multiplicative"]), flag(&f["frobenius_module_map"]), flag(&f["nu_one_preserves_dual_relations"]));
            let c = &f["cubic_q"];
            if c.get("q").is_some() {
                let _ = writeln!(
                    out,
                    "  Q = {}  identities {} {} {}  type A proxy {}",
                    compact(&c["q"]),
                    flag(&c["nu_one_is_q_inverse_form"]),
                    flag(&c["nu_two_is_q_transpose_form"]),
                    flag(&c["phi_one_is_q_inverse_transpose"]),
                    flag(&c["type_a_proxy"])
                );
            }
        }
    }
    if let Some(t) = report.get("twist") {
        if !skipped(&mut out, "twist", t) {
            let _ = writeln!(out, "twist: {}  composite ε^(D+1)φ = {}", if t["trivial"] == true { "trivial" } else { "nontrivial" }, t["composite"].as_str().unwrap_or(""));
        }
    }
    if let Some(h) = report.get("hochschild") {
        if !skipped(&mut out, "hochschild", h) {
            let _ = writeln!(
                out,
                "hochschild: bimodule complex exact {}  dimension {} (= gl.dim {})",
                flag(&h["bimodule_exact"]),
                h["hochschild_dimension"]["value"],
                flag(&h["hochschild_dimension"]["equals_global_dimension"])
            );
            let _ = writeln!(out, "  HH^*(A,A) by s:");
            dims_table(&mut out, &h["cohomology"]["table"], "s");
            let _ = writeln!(out, "  HH_*(A,A) by j:");
            dims_table(&mut out, &h["homology"]["table"], "j");
            let l = &h["twisted_multiplication"];
            if l.get("composite_vanishes").is_some() {
                let _ = writeln!(out, "  μ∘∂ = 0 {}  cokernel ≅ A {}", flag(&l["composite_vanishes"]), flag(&l["cokernel_matches_a"]));
            }
        }
    }
    if let Some(d) = report.get("duality") {
        if !skipped(&mut out, "duality", d) {
            let _ = writeln!(out, "duality: all match {}  shift {}  s in {}", flag(&d["all_match"]), d["shift"], compact(&d["s_range"]));
        }
    }
    let _ = writeln!(out, "outcome: {}", report["outcome"].as_str().unwrap_or(""));
    out
}
