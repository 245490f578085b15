//! Command implementations. Each returns the process exit code for a
//! completed run (0 = verdict computed, 2 = a theorem's hypothesis gate)
//! or an input-error message that main prints before exiting 1.

use std::path::Path;

use serde::Deserialize;
use serde_json::json;

use spinform::manifold::{
    connected_sum_involution, k3_swap_involution, sphere_factor_swap, ManifoldManifest,
};
use spinform::obstruction::{
    check_dehn_twist, check_finite_order_realization, check_homologically_trivial,
    classify_involution_type, kato_inequality, refined_kato_inequality,
};
use spinform::{
    borsuk_ulam_feasible, trace, BUParameters, BUVerdict, GroupElement, Int, InvolutionType,
    Isometry, Lattice, Matrix, ObstructionVerdict, SpinManifoldData, Verdict, DEFAULT_ORDER_CAP,
};

use crate::poly;
use crate::report;

type CliResult = Result<i32, String>;

const CITATIONS_TWIST: &[&str] = &[
    "reflection bookkeeping for (+-2)-sphere classes",
    "finite-order 10/8-type exclusion",
];
const CITATIONS_INVOLUTION: &[&str] = &[
    "G-signature theorem",
    "10/8-type bound for odd involutions",
    "refined 10/8-type bound",
    "finite-order 10/8-type exclusion",
    "signature vanishing for homologically trivial actions",
];
const CITATIONS_BU: &[&str] = &[
    "equivariant Borsuk-Ulam constraint",
    "character theory of Z/4",
];
const CITATIONS_FINITE: &[&str] = &["finite-order 10/8-type exclusion"];

/// Prints the rank, inertia, evenness, and unimodularity of a manifest.
pub fn info(path: &Path) -> CliResult {
    let manifest = load_manifest(path)?;
    let lattice = assemble(&manifest, path)?;
    let s = lattice.signature();
    let even = lattice.is_even();
    let unimodular = lattice.is_unimodular();
    let label = display_label(&manifest);
    println!("label: {label}");
    println!(
        "{}",
        report::form_summary(lattice.rank(), &s, even, unimodular)
    );
    println!("even: {even}");
    println!("unimodular: {unimodular}");
    if manifest.spin && !even {
        println!(
            "warning: manifest claims spin but the form is odd; \
             the intersection form of a spin 4-manifold is even"
        );
    }
    report::emit(&json!({
        "kind": "info",
        "label": label,
        "rank": lattice.rank(),
        "b_plus": s.b_plus,
        "b_minus": s.b_minus,
        "b_zero": s.b_zero,
        "sigma": s.sigma,
        "even": even,
        "unimodular": unimodular,
        "spin_claim": manifest.spin,
    }));
    Ok(0)
}

/// Checks the twist along a (+-2)-sphere class against the finite-order
/// realizability bound.
pub fn dehn_twist(path: &Path, vector: &str, square: Option<&str>, pad: bool) -> CliResult {
    let manifest = load_manifest(path)?;
    let lattice = assemble(&manifest, path)?;
    let mut v = parse_vector(vector)?;
    if pad {
        if v.len() > lattice.rank() {
            return Err(format!(
                "vector has {} coordinates but the lattice has rank {}",
                v.len(),
                lattice.rank()
            ));
        }
        v.resize(lattice.rank(), Int::from(0));
    }
    if v.len() != lattice.rank() {
        return Err(format!(
            "vector has {} coordinates but the lattice has rank {} (use --pad to zero-extend)",
            v.len(),
            lattice.rank()
        ));
    }
    let actual = lattice
        .inner_product(&v, &v)
        .map_err(|e| e.to_string())?;
    if let Some(declared) = square {
        let declared: i64 = declared
            .trim()
            .parse()
            .map_err(|_| format!("--square must be an integer, got {declared:?}"))?;
        if actual != Int::from(declared) {
            return Err(format!(
                "declared square {declared} but the vector has square {actual}"
            ));
        }
    }
    let label = display_label(&manifest);
    let data = SpinManifoldData::new(lattice, label.clone())
        .map_err(|e| format!("{e}; spin obstruction checks need an even form"))?;
    let verdict = check_dehn_twist(&data, &v).map_err(|e| e.to_string())?;
    println!("label: {label}");
    println!("class: ({}) with square {actual}", join_vector(&v));
    report::print_verdict_block("dehn-twist", &verdict);
    print_citations(CITATIONS_TWIST);
    report::emit(&report::verdict_json("dehn-twist", &verdict));
    emit_citations(CITATIONS_TWIST);
    Ok(exit_for(verdict.verdict))
}

/// Runs the full involution battery and aggregates the verdict.
pub fn involution(
    path: &Path,
    named: Option<&str>,
    m: Option<u32>,
    n: Option<u32>,
    matrix_path: Option<&Path>,
    allow_reversal: bool,
) -> CliResult {
    let manifest = load_manifest(path)?;
    let lattice = assemble(&manifest, path)?;
    let iso = resolve_isometry(&lattice, named, m, n, matrix_path)?;
    let cap = order_cap()?;
    let order = iso.order(cap).map_err(|e| e.to_string())?;
    if order > 2 {
        return Err(format!(
            "the isometry has order {order}; the involution battery needs order 1 or 2"
        ));
    }
    let label = display_label(&manifest);
    let data = SpinManifoldData::new(lattice, label.clone())
        .map_err(|e| format!("{e}; spin obstruction checks need an even form"))?;
    let s = data.lattice().signature();
    println!("label: {label}");
    println!(
        "{}",
        report::form_summary(
            data.lattice().rank(),
            &s,
            true,
            data.lattice().is_unimodular()
        )
    );
    println!("order: {order}");
    let inv = iso.invariant_signature();
    println!(
        "fixed part: rank {}, b+^phi {}, b-^phi {}, b0^phi {}, sigma^phi {}, codimension {}",
        inv.fixed_rank,
        inv.b_plus_inv,
        inv.b_minus_inv,
        inv.b_zero_inv,
        inv.sigma_inv,
        inv.codimension_b_plus
    );
    let class = classify_involution_type(&data, &iso).map_err(|e| e.to_string())?;
    let class_word = match class {
        InvolutionType::MustBeOdd => "MustBeOdd",
        InvolutionType::EvenPossible => "EvenPossible",
    };
    println!("classification: {class_word}");
    let checks: Vec<(&str, ObstructionVerdict)> = vec![
        (
            "involution bound",
            kato_inequality(&data, &iso).map_err(|e| e.to_string())?,
        ),
        (
            "refined involution bound",
            refined_kato_inequality(&data, &iso).map_err(|e| e.to_string())?,
        ),
        (
            "finite-order realization",
            check_finite_order_realization(&data, &iso, allow_reversal)
                .map_err(|e| e.to_string())?,
        ),
        (
            "homologically trivial",
            check_homologically_trivial(&data, &iso).map_err(|e| e.to_string())?,
        ),
    ];
    for (name, v) in &checks {
        report::print_verdict_block(name, v);
    }
    let finite_order = &checks[2].1;
    let aggregate = if checks.iter().any(|(_, v)| v.verdict == Verdict::Obstructed) {
        Verdict::Obstructed
    } else if finite_order.verdict == Verdict::HypothesisNotMet {
        Verdict::HypothesisNotMet
    } else {
        Verdict::NotObstructed
    };
    println!("aggregate: {}", report::verdict_word(aggregate));
    print_citations(CITATIONS_INVOLUTION);
    report::emit(&json!({
        "kind": "classification",
        "classification": class_word,
        "fixed": inv,
    }));
    for (name, v) in &checks {
        report::emit(&report::verdict_json(name, v));
    }
    report::emit(&json!({
        "kind": "aggregate",
        "verdict": report::verdict_word(aggregate),
    }));
    emit_citations(CITATIONS_INVOLUTION);
    Ok(exit_for(aggregate))
}

/// Decides the Borsuk-Ulam constraint system for (m0, m1, n0, n1).
pub fn borsuk_ulam(m0: u32, m1: u32, n0: u32, n1: u32) -> CliResult {
    let p = BUParameters::new(m0, m1, n0, n1);
    println!("parameters: m0 {m0}, m1 {m1}, n0 {n0}, n1 {n1}");
    let e = i64::from(m1) - i64::from(m0) + i64::from(n1) - i64::from(n0);
    println!("required trace: tr_j(alpha) = 2^({e})");
    match borsuk_ulam_feasible::<Int>(&p) {
        Err(err) => {
            println!("hypothesis not met: {err}");
            report::emit(&json!({
                "kind": "borsuk-ulam",
                "m0": m0, "m1": m1, "n0": n0, "n1": n1,
                "verdict": "HypothesisNotMet",
                "reason": err.to_string(),
            }));
            Ok(2)
        }
        Ok(BUVerdict::Feasible { trace_j, witness }) => {
            println!("verdict: Feasible");
            println!("witness: alpha = {witness} with tr_j(alpha) = {trace_j}");
            print_citations(CITATIONS_BU);
            report::emit(&json!({
                "kind": "borsuk-ulam",
                "m0": m0, "m1": m1, "n0": n0, "n1": n1,
                "verdict": "Feasible",
                "trace_j": trace_j.to_string(),
                "witness": witness.to_string(),
            }));
            emit_citations(CITATIONS_BU);
            Ok(0)
        }
        Ok(BUVerdict::Infeasible { witness }) => {
            println!("verdict: Infeasible");
            println!("witness: {witness}");
            print_citations(CITATIONS_BU);
            report::emit(&json!({
                "kind": "borsuk-ulam",
                "m0": m0, "m1": m1, "n0": n0, "n1": n1,
                "verdict": "Infeasible",
                "witness": witness.to_string(),
            }));
            emit_citations(CITATIONS_BU);
            Ok(0)
        }
    }
}

/// Sweep configuration: a grid over f(m, n) or over Borsuk-Ulam
/// parameter differences.
#[derive(Debug, Deserialize)]
#[serde(tag = "sweep", deny_unknown_fields)]
enum SweepConfig {
    /// Rows of the standard involution family on m K3 # n (S2 x S2).
    #[serde(rename = "f_mn")]
    Fmn {
        /// Inclusive range [lo, hi] for the K3 count.
        m: [u32; 2],
        /// Inclusive range [lo, hi] for the S2 x S2 count.
        n: [u32; 2],
    },
    /// Feasibility table over (m1 - m0, n0 - n1) differences.
    #[serde(rename = "borsuk-ulam")]
    BorsukUlam {
        /// Inclusive range [lo, hi] for m1 - m0 (nonnegative).
        m1_minus_m0: [i64; 2],
        /// Inclusive range [lo, hi] for n0 - n1 (may be negative).
        n0_minus_n1: [i64; 2],
    },
}

/// Emits a deterministic table over an (m, n) or Borsuk-Ulam grid.
pub fn sweep(config_path: &Path) -> CliResult {
    let text = read_text(config_path)?;
    let config: SweepConfig = serde_json::from_str(&text)
        .map_err(|e| format!("sweep config {} does not parse: {e}", config_path.display()))?;
    match config {
        SweepConfig::Fmn { m, n } => sweep_fmn(m, n),
        SweepConfig::BorsukUlam {
            m1_minus_m0,
            n0_minus_n1,
        } => sweep_borsuk_ulam(m1_minus_m0, n0_minus_n1),
    }
}

fn sweep_fmn(m: [u32; 2], n: [u32; 2]) -> CliResult {
    check_range("m", i64::from(m[0]), i64::from(m[1]))?;
    check_range("n", i64::from(n[0]), i64::from(n[1]))?;
    if m[0] == 0 {
        return Err("bad range: the family f(m, n) needs m >= 1".to_string());
    }
    println!(
        "sweep: f(m, n) for m in [{}, {}], n in [{}, {}]",
        m[0], m[1], n[0], n[1]
    );
    let mut rows = Vec::new();
    for mm in m[0]..=m[1] {
        for nn in n[0]..=n[1] {
            let iso = connected_sum_involution::<Int>(mm, nn).map_err(|e| e.to_string())?;
            let lattice = iso.lattice().clone();
            let rank = lattice.rank();
            let data = SpinManifoldData::new(lattice, format!("{mm} K3 # {nn} (S2 x S2)"))
                .map_err(|e| e.to_string())?;
            let verdict =
                check_finite_order_realization(&data, &iso, false).map_err(|e| e.to_string())?;
            let inv = iso.invariant_signature();
            let word = report::verdict_word(verdict.verdict);
            println!(
                "m={mm} n={nn} rank={rank} b+^f={} b-^f={} sigma^f={} verdict={word}",
                inv.b_plus_inv, inv.b_minus_inv, inv.sigma_inv
            );
            rows.push(json!({
                "kind": "sweep-row",
                "sweep": "f_mn",
                "m": mm,
                "n": nn,
                "rank": rank,
                "b_plus_fixed": inv.b_plus_inv,
                "b_minus_fixed": inv.b_minus_inv,
                "sigma_fixed": inv.sigma_inv,
                "verdict": word,
            }));
        }
    }
    print_citations(CITATIONS_FINITE);
    for row in &rows {
        report::emit(row);
    }
    emit_citations(CITATIONS_FINITE);
    Ok(0)
}

fn sweep_borsuk_ulam(dm_range: [i64; 2], dn_range: [i64; 2]) -> CliResult {
    check_range("m1_minus_m0", dm_range[0], dm_range[1])?;
    check_range("n0_minus_n1", dn_range[0], dn_range[1])?;
    if dm_range[0] < 0 {
        return Err("bad range: m1_minus_m0 must be nonnegative".to_string());
    }
    println!(
        "sweep: Borsuk-Ulam for m1-m0 in [{}, {}], n0-n1 in [{}, {}]",
        dm_range[0], dm_range[1], dn_range[0], dn_range[1]
    );
    let mut rows = Vec::new();
    for dm in dm_range[0]..=dm_range[1] {
        for dn in dn_range[0]..=dn_range[1] {
            let p = BUParameters::from_differences(dm as u32, dn);
            // Written exactly as the documented closed form
            // n0 - n1 + 1 <= m1 - m0.
            #[allow(clippy::int_plus_one)]
            let inequality_holds = dn + 1 <= dm;
            let (word, agree) = match borsuk_ulam_feasible::<Int>(&p) {
                Err(_) => ("HypothesisNotMet", None),
                Ok(BUVerdict::Feasible { .. }) => ("Feasible", Some(inequality_holds)),
                Ok(BUVerdict::Infeasible { .. }) => ("Infeasible", Some(!inequality_holds)),
            };
            let agree_word = match agree {
                None => "n/a",
                Some(true) => "yes",
                Some(false) => "no",
            };
            println!(
                "m1-m0={dm} n0-n1={dn} verdict={word} inequality={} agree={agree_word}",
                if inequality_holds { "holds" } else { "fails" }
            );
            rows.push(json!({
                "kind": "sweep-row",
                "sweep": "borsuk-ulam",
                "m1_minus_m0": dm,
                "n0_minus_n1": dn,
                "verdict": word,
                "inequality_holds": inequality_holds,
                "agree": agree,
            }));
        }
    }
    print_citations(CITATIONS_BU);
    for row in &rows {
        report::emit(row);
    }
    emit_citations(CITATIONS_BU);
    Ok(0)
}

/// Evaluates the characters of an integer polynomial in t.
pub fn rep_ring_eval(polynomial: &str, at: Option<&str>) -> CliResult {
    let elem = poly::parse(polynomial)?;
    let elements: Vec<GroupElement> = match at {
        Some(s) => vec![s.parse::<GroupElement>().map_err(|e| e.to_string())?],
        None => GroupElement::all().to_vec(),
    };
    println!("element: {elem}");
    let mut traces = Vec::new();
    for g in &elements {
        let value = trace(*g, &elem);
        println!("tr at {}: {}", g.label(), value);
        traces.push(json!({"at": g.label(), "value": value.to_string()}));
    }
    report::emit(&json!({
        "kind": "rep-ring",
        "element": elem.to_string(),
        "traces": traces,
    }));
    Ok(0)
}

fn read_text(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load_manifest(path: &Path) -> Result<ManifoldManifest, String> {
    let text = read_text(path)?;
    serde_json::from_str(&text)
        .map_err(|e| format!("manifest {} does not parse: {e}", path.display()))
}

fn assemble(manifest: &ManifoldManifest, path: &Path) -> Result<Lattice, String> {
    manifest
        .assemble::<Int>()
        .map_err(|e| format!("manifest {}: {e}", path.display()))
}

fn display_label(manifest: &ManifoldManifest) -> String {
    if manifest.label.is_empty() {
        "(unlabeled)".to_string()
    } else {
        manifest.label.clone()
    }
}

fn parse_vector(s: &str) -> Result<Vec<Int>, String> {
    let mut out = Vec::new();
    for (i, token) in s.split(',').enumerate() {
        let token = token.trim();
        let value: i64 = token
            .parse()
            .map_err(|_| format!("vector entry {i} is not an integer: {token:?}"))?;
        out.push(Int::from(value));
    }
    Ok(out)
}

fn join_vector(v: &[Int]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn resolve_isometry(
    lattice: &Lattice,
    named: Option<&str>,
    m: Option<u32>,
    n: Option<u32>,
    matrix_path: Option<&Path>,
) -> Result<Isometry, String> {
    match (named, matrix_path) {
        (Some(name), None) => {
            let iso = match name {
                "f_S" => sphere_factor_swap::<Int>(),
                "f_K" => k3_swap_involution::<Int>(),
                "f_mn" => {
                    let m = m.ok_or_else(|| "--named f_mn needs --m".to_string())?;
                    let n = n.ok_or_else(|| "--named f_mn needs --n".to_string())?;
                    connected_sum_involution::<Int>(m, n).map_err(|e| e.to_string())?
                }
                other => {
                    return Err(format!(
                        "unknown named involution {other:?}; expected f_S, f_K, or f_mn"
                    ))
                }
            };
            if iso.lattice() != lattice {
                return Err(if iso.lattice().rank() != lattice.rank() {
                    format!(
                        "named involution {name} acts on a rank-{} form but the manifest \
                         assembles rank {}",
                        iso.lattice().rank(),
                        lattice.rank()
                    )
                } else {
                    format!(
                        "named involution {name}: the manifest's Gram matrix does not match \
                         the standard form it acts on"
                    )
                });
            }
            Ok(iso)
        }
        (None, Some(mp)) => {
            let text = read_text(mp)?;
            let rows: Vec<Vec<i64>> = serde_json::from_str(&text)
                .map_err(|e| format!("matrix {} does not parse: {e}", mp.display()))?;
            let rows: Vec<Vec<Int>> = rows
                .into_iter()
                .map(|r| r.into_iter().map(Int::from).collect())
                .collect();
            let matrix = Matrix::from_rows(rows).map_err(|e| e.to_string())?;
            Isometry::new(lattice, matrix).map_err(|e| e.to_string())
        }
        (None, None) => Err("provide either --named or --matrix".to_string()),
        (Some(_), Some(_)) => unreachable!("--named conflicts with --matrix"),
    }
}

fn order_cap() -> Result<usize, String> {
    match std::env::var("SPINFORM_ORDER_CAP") {
        Ok(text) => {
            let cap: usize = text.trim().parse().map_err(|_| {
                format!("SPINFORM_ORDER_CAP must be a positive integer, got {text:?}")
            })?;
            if cap == 0 {
                return Err("SPINFORM_ORDER_CAP must be a positive integer, got \"0\"".to_string());
            }
            Ok(cap)
        }
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ORDER_CAP),
        Err(e) => Err(format!("SPINFORM_ORDER_CAP: {e}")),
    }
}

fn check_range(name: &str, lo: i64, hi: i64) -> Result<(), String> {
    if lo > hi {
        return Err(format!("bad range: {name} = [{lo}, {hi}] is empty"));
    }
    Ok(())
}

fn print_citations(names: &[&str]) {
    println!("citations: {}", names.join("; "));
}

fn emit_citations(names: &[&str]) {
    report::emit(&json!({"kind": "citations", "names": names}));
}

fn exit_for(v: Verdict) -> i32 {
    match v {
        Verdict::Obstructed | Verdict::NotObstructed => 0,
        Verdict::HypothesisNotMet => 2,
    }
}
