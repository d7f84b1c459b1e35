use std::io::Write;

use linprod::analysis::Entry;
use linprod::identities::all_identities;
use linprod::kernel::{format_rational, int, rat};
use linprod::{
    classify_region, dougall_coefficient, find_negativity_witness, in_special_range, iota_zero_count,
    linearize_bruteforce, linearize_gencheb, linearize_jacobi, linearize_jacobi_plus, phi_recurrence_check,
    phi_sequence, pq_inequality_check, rahman_linearize, recursion_consistency, scan_sign_pattern,
    AnalysisError, CoeffVector, Family, GenChebLinearizer, JacobiParams, MonomialBasis, ScanMode,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::output::{approx15, approx_text, coeff_rows, emit_json, exact, record, write_csv, Format};
use crate::{CheckArg, FamilyArg, MethodArg, PropertyArg, UsageError, EXIT_OK, EXIT_VIOLATION};

type CmdResult = Result<i32, UsageError>;

fn no_csv(format: Format, command: &str) -> Result<(), UsageError> {
    if format == Format::Csv {
        return Err(UsageError(format!("--format csv is only available for linearize, not {command}")));
    }
    Ok(())
}

fn verdict_code(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn entry_json(e: &Entry) -> Value {
    json!({ "m": e.m, "n": e.n, "k": e.k, "value": exact(&e.value), "approx": approx15(&e.value) })
}

fn entry_text(e: &Entry) -> String {
    format!("({}, {}, {}) = {} (approx {})", e.m, e.n, e.k, format_rational(&e.value), approx_text(&e.value))
}

pub fn classify(p: &JacobiParams, format: Format, out: &mut dyn Write) -> CmdResult {
    no_csv(format, "classify")?;
    let r = classify_region(p);
    if format == Format::Json {
        let payload = json!({
            "a": exact(p.a()),
            "b": exact(p.b()),
            "label": r.label.as_str(),
            "in_delta": r.in_delta,
            "in_delta_interior": r.in_delta_interior,
            "in_v": r.in_v,
            "in_v_interior": r.in_v_interior,
            "in_vprime": r.in_vprime,
            "above_iota_threshold": r.above_iota_threshold,
        });
        emit_json(out, &record("classify", p, payload, None))?;
    } else {
        writeln!(out, "alpha = {}, beta = {}", format_rational(p.alpha()), format_rational(p.beta()))?;
        writeln!(out, "a = {}, b = {}", format_rational(p.a()), format_rational(p.b()))?;
        writeln!(out, "label: {}", r.label)?;
        for (name, v) in [
            ("in_delta", r.in_delta),
            ("in_delta_interior", r.in_delta_interior),
            ("in_v", r.in_v),
            ("in_v_interior", r.in_v_interior),
            ("in_vprime", r.in_vprime),
            ("above_iota_threshold", r.above_iota_threshold),
        ] {
            writeln!(out, "{name}: {v}")?;
        }
    }
    Ok(EXIT_OK)
}

fn family_of(f: FamilyArg) -> Family {
    match f {
        FamilyArg::Jacobi => Family::Jacobi,
        FamilyArg::JacobiPlus => Family::JacobiPlus,
        FamilyArg::Gencheb => Family::GenCheb,
    }
}

fn method_name(m: MethodArg) -> &'static str {
    match m {
        MethodArg::Gasper => "gasper",
        MethodArg::Brute => "brute",
        MethodArg::Rahman => "rahman",
        MethodArg::Dougall => "dougall",
    }
}

fn compute(p: &JacobiParams, family: Family, m: u32, n: u32, method: MethodArg) -> Result<CoeffVector, UsageError> {
    let jacobi_only = || {
        if family != Family::Jacobi {
            return Err(UsageError(format!("--method {} needs --family jacobi", method_name(method))));
        }
        Ok(())
    };
    match method {
        MethodArg::Gasper => Ok(match family {
            Family::Jacobi => linearize_jacobi(p, m, n),
            Family::JacobiPlus => linearize_jacobi_plus(p, m, n),
            Family::GenCheb => linearize_gencheb(p, m, n),
        }),
        MethodArg::Brute => Ok(linearize_bruteforce(p, m, n, family)),
        MethodArg::Rahman => {
            jacobi_only()?;
            Ok(rahman_linearize(p, m, n)?)
        }
        MethodArg::Dougall => {
            jacobi_only()?;
            if p.alpha() != p.beta() {
                return Err(UsageError("--method dougall needs alpha = beta".into()));
            }
            Ok(dougall_coefficient(p.alpha(), m, n)?)
        }
    }
}

pub fn linearize(
    p: &JacobiParams,
    family: FamilyArg,
    m: u32,
    n: u32,
    method: MethodArg,
    format: Format,
    out: &mut dyn Write,
) -> CmdResult {
    let family = family_of(family);
    let cv = compute(p, family, m, n, method)?;
    match format {
        Format::Json => {
            let payload = json!({
                "family": family.as_str(),
                "method": method_name(method),
                "m": m,
                "n": n,
                "coefficients": coeff_rows(&cv),
            });
            emit_json(out, &record("linearize", p, payload, None))?;
        }
        Format::Csv => write_csv(out, &cv)?,
        Format::Text => {
            writeln!(
                out,
                "g({m}, {n}; k), family {family}, method {}, alpha = {}, beta = {}",
                method_name(method),
                format_rational(p.alpha()),
                format_rational(p.beta())
            )?;
            for (k, v) in cv.iter().filter(|(k, _)| !cv.is_structural_zero(*k)) {
                writeln!(out, "k={k}: {} (approx {})", format_rational(v), approx_text(v))?;
            }
        }
    }
    Ok(EXIT_OK)
}

struct CompareRow {
    family: Family,
    m: u32,
    n: u32,
    methods: Vec<&'static str>,
    entries: usize,
    mismatch: Option<(&'static str, u32)>,
}

fn compare_family(p: &JacobiParams, family: Family, max_degree: u32) -> Vec<CompareRow> {
    let basis = MonomialBasis::new(p, family, 2 * max_degree);
    let gencheb = (family == Family::GenCheb).then(|| GenChebLinearizer::new(p, 2 * max_degree));
    let inside = p.a() > &int(0) && p.b() > &int(0);
    let rahman = family == Family::Jacobi && (inside || in_special_range(p));
    let dougall = family == Family::Jacobi && p.alpha() == p.beta() && p.alpha() > &rat(-1, 2);
    let pairs: Vec<(u32, u32)> = (0..=max_degree).flat_map(|n| (0..=n).map(move |m| (m, n))).collect();
    pairs
        .par_iter()
        .map(|&(m, n)| {
            let gasper = match family {
                Family::Jacobi => linearize_jacobi(p, m, n),
                Family::JacobiPlus => linearize_jacobi_plus(p, m, n),
                Family::GenCheb => gencheb.as_ref().expect("built for gencheb").linearize(m, n),
            };
            let mut others: Vec<(&'static str, CoeffVector)> = vec![("brute", basis.linearize(m, n))];
            if rahman {
                others.push(("rahman", rahman_linearize(p, m, n).expect("parameters checked above")));
            }
            if dougall {
                others.push(("dougall", dougall_coefficient(p.alpha(), m, n).expect("alpha checked above")));
            }
            let mismatch = others.iter().find(|(_, cv)| cv != &gasper).map(|(name, cv)| {
                let k = gasper.iter().find(|(k, v)| &cv.get(*k) != *v).map_or(gasper.k_min(), |(k, _)| k);
                (*name, k)
            });
            let mut methods = vec!["gasper"];
            methods.extend(others.iter().map(|(name, _)| *name));
            CompareRow { family, m, n, methods, entries: gasper.values().len(), mismatch }
        })
        .collect()
}

pub fn compare(p: &JacobiParams, max_degree: u32, format: Format, out: &mut dyn Write) -> CmdResult {
    no_csv(format, "compare")?;
    let rows: Vec<CompareRow> = [Family::Jacobi, Family::JacobiPlus, Family::GenCheb]
        .iter()
        .flat_map(|&f| compare_family(p, f, max_degree))
        .collect();
    let entries: usize = rows.iter().map(|r| r.entries).sum();
    let mismatches = rows.iter().filter(|r| r.mismatch.is_some()).count();
    let ok = mismatches == 0;
    if format == Format::Json {
        let rows_json: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "family": r.family.as_str(),
                    "m": r.m,
                    "n": r.n,
                    "methods": r.methods,
                    "entries": r.entries,
                    "agree": r.mismatch.is_none(),
                    "mismatch": r.mismatch.map(|(method, k)| json!({ "method": method, "k": k })),
                })
            })
            .collect();
        let payload = json!({
            "max_degree": max_degree,
            "rows": rows_json,
            "summary": { "vectors": rows.len(), "entries": entries, "mismatches": mismatches },
        });
        emit_json(out, &record("compare", p, payload, Some(if ok { "agree" } else { "mismatch" })))?;
    } else {
        for r in &rows {
            match r.mismatch {
                None => writeln!(
                    out,
                    "{} ({}, {}): {} agree on {} entries",
                    r.family,
                    r.m,
                    r.n,
                    r.methods.join(" = "),
                    r.entries
                )?,
                Some((method, k)) => {
                    writeln!(out, "{} ({}, {}): MISMATCH gasper vs {method} at k={k}", r.family, r.m, r.n)?
                }
            }
        }
        writeln!(out, "summary: {} vectors, {entries} entries, {mismatches} mismatches", rows.len())?;
    }
    Ok(verdict_code(ok))
}

fn scan_mode(check: CheckArg) -> ScanMode {
    match check {
        CheckArg::Nonneg => ScanMode::JacobiNonneg,
        CheckArg::Strict => ScanMode::JacobiStrict,
        CheckArg::Odd => ScanMode::GenChebOdd,
        CheckArg::Oscillation => ScanMode::Oscillation,
        CheckArg::All => ScanMode::GenChebAll,
    }
}

pub fn scan(p: &JacobiParams, check: CheckArg, max_degree: u32, format: Format, out: &mut dyn Write) -> CmdResult {
    no_csv(format, "scan")?;
    let r = scan_sign_pattern(p, max_degree, scan_mode(check));
    if format == Format::Json {
        let payload = json!({
            "mode": r.mode.as_str(),
            "degrees_scanned": r.degrees_scanned,
            "entries_checked": r.entries_checked,
            "min_value": exact(&r.min_value),
            "min_value_approx": approx15(&r.min_value),
            "witness": r.witness.as_ref().map(entry_json),
            "first_zero": r.first_zero.as_ref().map(entry_json),
        });
        emit_json(out, &record("scan", p, payload, Some(r.verdict.as_str())))?;
    } else {
        writeln!(out, "mode: {}", r.mode)?;
        writeln!(out, "verdict: {}", r.verdict)?;
        writeln!(out, "degrees scanned: {}", r.degrees_scanned)?;
        writeln!(out, "entries checked: {}", r.entries_checked)?;
        writeln!(out, "min value: {} (approx {})", format_rational(&r.min_value), approx_text(&r.min_value))?;
        match &r.witness {
            Some(w) => writeln!(out, "witness: {}", entry_text(w))?,
            None => writeln!(out, "witness: none")?,
        }
        match &r.first_zero {
            Some(z) => writeln!(out, "first zero: {}", entry_text(z))?,
            None => writeln!(out, "first zero: none")?,
        }
    }
    Ok(verdict_code(r.passes()))
}

fn property_name(p: PropertyArg) -> &'static str {
    match p {
        PropertyArg::PqInequality => "pq-inequality",
        PropertyArg::PhiAlternation => "phi-alternation",
        PropertyArg::IotaZeros => "iota-zeros",
        PropertyArg::RecursionConsistency => "recursion-consistency",
        PropertyArg::NecIdentities => "nec-identities",
    }
}

/// Outcome of one property: pass flag, human lines, JSON details.
struct Check {
    pass: bool,
    lines: Vec<String>,
    details: Value,
}

fn analysis_failure(e: AnalysisError) -> Result<Check, UsageError> {
    match e {
        AnalysisError::IdentityFailed(msg) => Ok(Check {
            pass: false,
            lines: vec![format!("identity failed: {msg}")],
            details: json!({ "identity_failed": msg }),
        }),
        other => Err(UsageError(other.to_string())),
    }
}

fn run_property(p: &JacobiParams, property: PropertyArg, m: u32, s: u32, max_degree: u32) -> Result<Check, UsageError> {
    let result = match property {
        PropertyArg::PqInequality => pq_inequality_check(p, m, s).map(|rows| {
            let mut lines = Vec::new();
            let mut items = Vec::new();
            for r in &rows {
                lines.push(format!(
                    "j={}: lhs {} < rhs {}: {}, omega {}",
                    r.j,
                    format_rational(&r.lhs),
                    format_rational(&r.rhs),
                    r.lhs < r.rhs,
                    format_rational(&r.omega)
                ));
                items.push(json!({
                    "j": r.j, "lhs": exact(&r.lhs), "rhs": exact(&r.rhs),
                    "omega": exact(&r.omega), "holds": r.holds(),
                }));
            }
            let pass = rows.iter().all(|r| r.holds());
            Check { pass, lines, details: json!({ "instances": items }) }
        }),
        PropertyArg::PhiAlternation => phi_sequence(p, m, s).and_then(|phi| {
            phi_recurrence_check(p, &phi)?;
            let lines = (1..=2 * m)
                .map(|j| format!("phi({j}) = {} (approx {})", format_rational(phi.get(j)), approx_text(phi.get(j))))
                .collect();
            let failure = phi.alternation_failure();
            let pass = phi.all_negative() && failure.is_none();
            Ok(Check {
                pass,
                lines,
                details: json!({
                    "values": phi.values.iter().map(exact).collect::<Vec<_>>(),
                    "all_negative": phi.all_negative(),
                    "first_failure": failure,
                    "recurrence_holds": true,
                }),
            })
        }),
        PropertyArg::IotaZeros => iota_zero_count(p, m, s).map(|count| Check {
            pass: count <= 1,
            lines: vec![
                format!("zeros of iota({m}, {}; j) on [1, {}]: {count}", m + s, 2 * m - 1),
                format!("above threshold 4a^2+11a+3 > 0: {}", classify_region(p).above_iota_threshold),
            ],
            details: json!({ "zero_count": count, "above_iota_threshold": classify_region(p).above_iota_threshold }),
        }),
        PropertyArg::RecursionConsistency => recursion_consistency(p, max_degree).map(|n| Check {
            pass: true,
            lines: vec![format!("{n} vectors agree with the monomial oracle up to degree {max_degree}")],
            details: json!({ "vectors": n, "max_degree": max_degree }),
        }),
        PropertyArg::NecIdentities => all_identities(p, m, s).map(|checks| Check {
            pass: checks.iter().all(|c| c.holds()),
            lines: checks
                .iter()
                .map(|c| format!("{}: {} = {}: {}", c.name, format_rational(&c.lhs), format_rational(&c.rhs), c.holds()))
                .collect(),
            details: json!({
                "identities": checks
                    .iter()
                    .map(|c| json!({ "name": c.name, "lhs": exact(&c.lhs), "rhs": exact(&c.rhs), "holds": c.holds() }))
                    .collect::<Vec<_>>(),
            }),
        }),
    };
    result.or_else(analysis_failure)
}

pub fn verify(
    p: &JacobiParams,
    property: PropertyArg,
    m: u32,
    s: u32,
    max_degree: u32,
    format: Format,
    out: &mut dyn Write,
) -> CmdResult {
    no_csv(format, "verify")?;
    let check = run_property(p, property, m, s, max_degree)?;
    let verdict = if check.pass { "pass" } else { "fail" };
    if format == Format::Json {
        let payload = json!({ "property": property_name(property), "m": m, "s": s, "details": check.details });
        emit_json(out, &record("verify", p, payload, Some(verdict)))?;
    } else {
        writeln!(out, "property {} at m = {m}, s = {s}", property_name(property))?;
        for line in &check.lines {
            writeln!(out, "  {line}")?;
        }
        writeln!(out, "{verdict}")?;
    }
    Ok(verdict_code(check.pass))
}

pub fn witness(p: &JacobiParams, max_degree: u32, format: Format, out: &mut dyn Write) -> CmdResult {
    no_csv(format, "witness")?;
    let w = find_negativity_witness(p, max_degree);
    if format == Format::Json {
        let payload = json!({ "max_degree": max_degree, "witness": w.as_ref().map(entry_json) });
        emit_json(out, &record("witness", p, payload, Some(if w.is_some() { "found" } else { "none found" })))?;
    } else {
        match &w {
            Some(e) => writeln!(out, "negative coefficient g_T{}", entry_text(e))?,
            None => writeln!(out, "none found")?,
        }
    }
    Ok(verdict_code(w.is_none()))
}
