//! Rendering helpers: human-readable lines first, machine-readable JSON
//! Lines after. Everything routed through here is deterministic, so
//! identical inputs yield byte-identical reports.

use serde_json::{json, Value};
use spinform::{InequalityTrace, ObstructionVerdict, SignatureData, Verdict};

/// One human line for a signature tuple, matching the documented shape
/// `rank 22, b+ 3, b- 19, b0 0, sigma -16, even, unimodular`.
pub fn form_summary(rank: usize, s: &SignatureData, even: bool, unimodular: bool) -> String {
    format!(
        "rank {rank}, b+ {}, b- {}, b0 {}, sigma {}, {}, {}",
        s.b_plus,
        s.b_minus,
        s.b_zero,
        s.sigma,
        if even { "even" } else { "odd" },
        if unimodular { "unimodular" } else { "non-unimodular" },
    )
}

/// The verdict word as printed and serialized.
pub fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Obstructed => "Obstructed",
        Verdict::NotObstructed => "NotObstructed",
        Verdict::HypothesisNotMet => "HypothesisNotMet",
    }
}

fn fraction(num: i64, den: i64) -> String {
    if den == 1 {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

/// Human rendering of an inequality trace: the relation, the exact
/// numbers, and the ambient/fixed signature context.
pub fn trace_lines(t: &InequalityTrace) -> Vec<String> {
    let mut lines = vec![format!(
        "trace: {} with lhs {} and rhs {}: {}",
        t.relation,
        fraction(t.lhs_num, t.lhs_den),
        t.rhs,
        if t.holds { "holds" } else { "fails" },
    )];
    let mut context = format!(
        "  ambient: sigma {}, b+ {}, b- {}",
        t.sigma, t.b_plus, t.b_minus
    );
    if let (Some(sf), Some(bpf), Some(bmf)) = (t.sigma_fixed, t.b_plus_fixed, t.b_minus_fixed) {
        context.push_str(&format!("; fixed: sigma^phi {sf}, b+^phi {bpf}, b-^phi {bmf}"));
    }
    lines.push(context);
    lines
}

/// Prints one check's verdict block: verdict, rule, trace, assumptions.
pub fn print_verdict_block(check: &str, v: &ObstructionVerdict) {
    println!("check: {check}");
    println!("verdict: {}", verdict_word(v.verdict));
    println!("rule: {}", v.fired_rule);
    if let Some(t) = &v.trace {
        for line in trace_lines(t) {
            println!("{line}");
        }
    }
    for a in &v.assumptions {
        println!("  assuming: {a}");
    }
}

/// JSON Lines row for one check's verdict.
pub fn verdict_json(check: &str, v: &ObstructionVerdict) -> Value {
    json!({
        "kind": "verdict",
        "check": check,
        "verdict": verdict_word(v.verdict),
        "fired_rule": v.fired_rule,
        "trace": v.trace,
        "assumptions": v.assumptions,
    })
}

/// Emits one JSON Lines row on stdout.
pub fn emit(value: &Value) {
    println!("{value}");
}
