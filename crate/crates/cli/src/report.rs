//! Report assembly and rendering for the subcommands.

use std::fmt::Write as _;

use multispin::fields::{maxwell_limit_check, FieldReport};
use multispin::identities::CheckResult;
use multispin::momentum::{dyad_decompose, PROJECTOR_NAMES};
use multispin::oracle;
use multispin::suite::{maxwell_checks, representative_state};
use multispin::{LightlikeMomentum, ProjectorSet, RepMatrix, RepresentationSet, StateLabel, Zero};
use serde_json::{json, Value};

/// A rendered command result: JSON payload plus a text rendering.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

fn meta(command: &str, momenta: &[LightlikeMomentum], kappas: &[String]) -> Value {
    json!({
        "tool": "multispin",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "momenta": momenta,
        "kappa": kappas,
    })
}

fn summary(checks: &[CheckResult], text: &mut String) -> bool {
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let _ = writeln!(
        text,
        "{} checks, {} passed, {} failed",
        checks.len(),
        checks.len() - failed,
        failed
    );
    failed == 0
}

pub fn verify(
    structural: Vec<CheckResult>,
    per_momentum: Vec<Vec<CheckResult>>,
    momenta: &[LightlikeMomentum],
    kappas: &[String],
) -> Report {
    let mut checks = structural;
    checks.extend(per_momentum.into_iter().flatten());
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(text, "{c}");
    }
    let ok = summary(&checks, &mut text);
    let json =
        json!({ "meta": meta("verify", momenta, kappas), "checks": checks, "solutions": [] });
    Report { json, text, ok }
}

fn matrix_entry(set: &ProjectorSet, name: &str) -> Value {
    let m = set.by_name(name).expect("known projector name");
    json!({ "name": name, "trace": m.trace(), "rank": oracle::rank(&m), "matrix": m })
}

pub fn solve(rep: &RepresentationSet, set: &ProjectorSet, checks: Vec<CheckResult>) -> Report {
    let mut text = String::new();
    let _ = writeln!(text, "k = {}  kappa = {}", set.k, set.kappa);
    let _ = writeln!(text, "{:<12} {:>8} {:>5}", "matrix", "trace", "rank");
    for name in PROJECTOR_NAMES {
        let m = set.by_name(name).expect("known projector name");
        let _ = writeln!(
            text,
            "{:<12} {:>8} {:>5}",
            name,
            m.trace().to_string(),
            oracle::rank(&m)
        );
    }

    let mut solutions = Vec::new();
    for label in StateLabel::ALL {
        match dyad_decompose(set.state_projector(label), &rep.eta, label) {
            Ok(d) => {
                let norm = d.norm();
                let _ = writeln!(text, "\n{label}: psi_bar.psi = {norm}");
                let _ = writeln!(text, "  psi     = {}", d.psi);
                let _ = writeln!(text, "  psi_bar = {:?}", d.psi_bar);
                if let Some(c) = &d.eta_ratio {
                    let _ = writeln!(text, "  psi_bar = ({c}) psi^+ eta");
                }
                solutions.push(json!({
                    "label": label,
                    "psi": d.psi,
                    "psi_bar": d.psi_bar,
                    "psi_bar_psi": norm,
                    "eta_ratio": d.eta_ratio,
                }));
            }
            Err(e) => {
                let _ = writeln!(text, "\n{label}: no dyad ({e})");
                solutions.push(json!({ "label": label, "error": e.to_string() }));
            }
        }
    }

    let sum = set.pi_sum();
    let diff = &sum - &set.gamma;
    let shat0_gamma = &set.shat_0 * &set.gamma;
    let diagnostics = json!({
        "rank_pi_sum": oracle::rank(&sum),
        "rank_pi_sum_minus_gamma": oracle::rank(&diff),
        "shat0_gamma_idempotent": &shat0_gamma * &shat0_gamma == shat0_gamma,
        "rank_shat0_gamma": oracle::rank(&shat0_gamma),
    });
    let _ = writeln!(text, "\ndiagnostics: {diagnostics}");
    let _ = writeln!(text);
    for c in &checks {
        let _ = writeln!(text, "{c}");
    }
    let ok = summary(&checks, &mut text);

    let matrices: Vec<Value> = PROJECTOR_NAMES
        .iter()
        .map(|n| matrix_entry(set, n))
        .collect();
    let json = json!({
        "meta": meta("solve", std::slice::from_ref(&set.k), &[set.kappa.to_string()]),
        "checks": checks,
        "solutions": solutions,
        "matrices": matrices,
        "diagnostics": diagnostics,
    });
    Report { json, text, ok }
}

pub fn states(set: &ProjectorSet) -> Report {
    let mut text = String::new();
    let _ = writeln!(text, "k = {}  kappa = {}", set.k, set.kappa);
    let mut solutions = Vec::new();
    for label in StateLabel::ALL {
        let Some(psi) = representative_state(set, label) else {
            let _ = writeln!(text, "\n{label}: projector has no usable column");
            solutions.push(json!({ "label": label, "error": "projector has no usable column" }));
            continue;
        };
        let fields = FieldReport::new(&psi);
        let limit = maxwell_limit_check(&psi, &set.k, &set.kappa);
        let verdict = if limit.passed() {
            "pass".to_string()
        } else if !psi.psi0().is_zero() {
            "fail (scalar present)".to_string()
        } else {
            format!("fail ({})", limit.witness.clone().unwrap_or_default())
        };
        let _ = writeln!(text, "\n{label}");
        let _ = writeln!(text, "  psi0 = {}", fields.psi0);
        let psi_row: Vec<String> = fields.psi.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(text, "  psi  = ({})", psi_row.join(", "));
        let f_row: Vec<String> = fields.f.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        let _ = writeln!(text, "  F    = {{{}}}", f_row.join(", "));
        let e: Vec<String> = fields.e.iter().map(|c| c.to_string()).collect();
        let h: Vec<String> = fields.h.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(text, "  E    = ({})", e.join(", "));
        let _ = writeln!(text, "  H    = ({})", h.join(", "));
        let _ = writeln!(text, "  maxwell-limit: {verdict}");
        let mut entry = serde_json::to_value(&fields).expect("field report serializes");
        entry["label"] = json!(label);
        entry["maxwell_limit"] = json!(limit);
        solutions.push(entry);
    }
    let checks = maxwell_checks(set);
    let _ = writeln!(text);
    for c in &checks {
        let _ = writeln!(text, "{c}");
    }
    let ok = summary(&checks, &mut text);
    let json = json!({
        "meta": meta("states", std::slice::from_ref(&set.k), &[set.kappa.to_string()]),
        "checks": checks,
        "solutions": solutions,
    });
    Report { json, text, ok }
}

pub fn dump(name: &str, m: &RepMatrix, context: Option<&ProjectorSet>) -> Report {
    let text = format!("{name}\n{m}");
    let (momenta, kappas) = match context {
        Some(s) => (vec![s.k.clone()], vec![s.kappa.to_string()]),
        None => (Vec::new(), Vec::new()),
    };
    let json = json!({
        "meta": meta("dump", &momenta, &kappas),
        "checks": [],
        "solutions": [],
        "matrix": { "name": name, "value": m },
    });
    Report {
        json,
        text,
        ok: true,
    }
}
