use std::fmt;
use std::fmt::Write as _;

use oscillo_core::kgroup::{compute_s1, compute_s2, h_diagonal_class, reconstruct_h_diagonal};
use oscillo_core::kostant::{coweights_up_to, enumerate_kostant, kostant_count};
use oscillo_core::lefschetz::{decompose_sl2, oscillator_stalk_char, plo_stalk_char, standard_char};
use oscillo_core::root_datum::{build_root_datum, langlands_dual};
use oscillo_core::uea::{
    build_chevalley, check_associativity, check_coassociativity, check_hopf_axiom, default_bound, parse_expr,
    CheckReport,
};
use oscillo_core::{CollisionPattern, Coweight, Error, Family, GroupType, HalfLaurent, RootDatum};
use serde_json::{json, Value};

use crate::TypeArgs;

const SCHEMA: u64 = 1;

/// Rendered result of a command.
pub struct Output {
    pub json: Value,
    pub markdown: String,
    pub passed: bool,
}

impl Output {
    fn ok(json: Value, markdown: String) -> Self {
        Output { json, markdown, passed: true }
    }
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Check(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Check(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Check(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotACharacter(_) | Error::InconsistentClass(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<Output, Failure>;

fn datum(ty: &TypeArgs) -> Result<RootDatum, Failure> {
    let family: Family = ty.family.parse()?;
    Ok(build_root_datum(GroupType::new(family, ty.rank)?))
}

fn coweight(d: &RootDatum, s: &str) -> Result<Coweight, Failure> {
    let theta = Coweight::parse(s)?;
    d.check_positive(&theta)?;
    Ok(theta)
}

fn header(command: &str, d: &RootDatum) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m.insert("type".into(), json!(d.group_type().to_string()));
    m
}

pub fn roots(ty: &TypeArgs) -> CmdResult {
    let d = datum(ty)?;
    let dual = langlands_dual(&d);
    let rows: Vec<Value> = d
        .positive_roots()
        .iter()
        .zip(d.positive_coroots())
        .enumerate()
        .map(|(i, (r, c))| json!({"index": i + 1, "root": r.0, "coroot": c.0, "coroot_height": c.height()}))
        .collect();
    let mut m = header("roots", &d);
    m.insert("datum".into(), d.to_json());
    m.insert("dual_type".into(), json!(dual.group_type().to_string()));
    m.insert("rows".into(), json!(rows));

    let mut md = format!("# {} (dual {})\n\n| # | root | coroot | height |\n|---|---|---|---|\n", d.group_type(), dual.group_type());
    for (i, (r, c)) in d.positive_roots().iter().zip(d.positive_coroots()).enumerate() {
        let _ = writeln!(md, "| {} | {r} | {c} | {} |", i + 1, c.height());
    }
    Ok(Output::ok(Value::Object(m), md))
}

pub fn kostant(ty: &TypeArgs, theta: &str) -> CmdResult {
    let d = datum(ty)?;
    let theta = coweight(&d, theta)?;
    let parts = enumerate_kostant(&d, &theta)?;
    let count = kostant_count(&d, &theta)?;
    let mut m = header("kostant", &d);
    m.insert("theta".into(), json!(theta.0));
    m.insert("count".into(), json!(count));
    m.insert("partitions".into(), json!(parts.iter().map(|k| k.to_json(&d)).collect::<Vec<_>>()));

    let mut md = format!("# Kostant partitions of {theta} in {}\n\ncount: {count}\n\n| # | partition | length |\n|---|---|---|\n", d.group_type());
    for (i, k) in parts.iter().enumerate() {
        let text: Vec<String> = k
            .parts()
            .iter()
            .map(|(&b, &n)| format!("{}{}", d.positive_coroots()[b], if n > 1 { format!("^{n}") } else { String::new() }))
            .collect();
        let _ = writeln!(md, "| {} | {} | {} |", i + 1, text.join(" "), k.length());
    }
    Ok(Output::ok(Value::Object(m), md))
}

fn parse_config(d: &RootDatum, s: &str) -> Result<Vec<(Coweight, String)>, Failure> {
    s.split(';')
        .map(|point| {
            let (theta, label) = point
                .split_once('@')
                .ok_or_else(|| Failure::Usage(format!("point '{point}' is not of the form theta@label")))?;
            let label = label.trim();
            if label.is_empty() {
                return Err(Failure::Usage(format!("point '{point}' has an empty label")));
            }
            Ok((coweight(d, theta)?, label.to_string()))
        })
        .collect()
}

pub fn plo_stalk(ty: &TypeArgs, config: Option<&str>, pattern: Option<&str>) -> CmdResult {
    let d = datum(ty)?;
    let mut m = header("plo-stalk", &d);
    let mut md = String::new();
    if let Some(p) = pattern {
        let blocks = p
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Failure::Usage(format!("bad block '{x}' in pattern"))))
            .collect::<Result<Vec<_>, _>>()?;
        let pattern = CollisionPattern::new(blocks)?;
        let stalk = plo_stalk_char(&pattern);
        let dec = decompose_sl2(&stalk.character)?;
        m.insert("pattern".into(), json!(pattern.blocks()));
        m.insert("character".into(), stalk.character.to_json());
        m.insert("shift".into(), json!(stalk.shift));
        m.insert("twist".into(), json!(oscillo_core::poly::format_half(stalk.twist_halves)));
        m.insert("decomposition".into(), dec.to_json());
        m.insert("signed_class".into(), stalk.signed_class().to_json());
        let _ = writeln!(md, "# P_{} at pattern {:?}\n", pattern.degree(), pattern.blocks());
        let _ = writeln!(md, "| character | sl2 | shift | twist |\n|---|---|---|---|");
        let _ = writeln!(md, "| {} | {dec} | {} | {} |", stalk.character, stalk.shift, oscillo_core::poly::format_half(stalk.twist_halves));
    } else {
        let config = parse_config(&d, config.unwrap_or_default())?;
        let stalk = oscillator_stalk_char(&d, &config)?;
        let by_length: Vec<Value> = stalk
            .by_length()
            .iter()
            .map(|(l, c)| -> Result<Value, Failure> {
                Ok(json!({"length": l, "character": c.to_json(), "decomposition": decompose_sl2(c)?.to_json()}))
            })
            .collect::<Result<_, _>>()?;
        let total = stalk.character();
        m.insert(
            "config".into(),
            json!(config.iter().map(|(t, l)| json!({"theta": t.0, "label": l})).collect::<Vec<_>>()),
        );
        m.insert("character".into(), total.to_json());
        m.insert("decomposition".into(), decompose_sl2(&total)?.to_json());
        m.insert("by_length".into(), json!(by_length));
        m.insert("signed_class".into(), stalk.signed_class().to_json());
        let _ = writeln!(md, "# Oscillator stalk in {}\n\n| length | character | sl2 |\n|---|---|---|", d.group_type());
        for (l, c) in stalk.by_length() {
            let _ = writeln!(md, "| {l} | {c} | {} |", decompose_sl2(c)?);
        }
    }
    Ok(Output::ok(Value::Object(m), md))
}

struct DiagRow {
    theta: Coweight,
    coroot: bool,
    s1: HalfLaurent,
    s2: HalfLaurent,
    h: HalfLaurent,
    decomposition: String,
    decomposition_json: Value,
}

fn diag_row(d: &RootDatum, theta: &Coweight) -> Result<DiagRow, Failure> {
    let s1 = compute_s1(d, theta)?;
    let s2 = compute_s2(d, theta)?;
    let h = h_diagonal_class(d, theta)?;
    let dec = reconstruct_h_diagonal(d, theta)?;
    Ok(DiagRow {
        theta: theta.clone(),
        coroot: d.is_coroot(theta),
        s1: s1.poly,
        s2: s2.poly,
        h: h.poly,
        decomposition: dec.to_string(),
        decomposition_json: dec.to_json(),
    })
}

fn diag_coeff(p: &HalfLaurent, m: i32) -> i64 {
    p.coeff(2 * m)
}

fn diag_table(rows: &[DiagRow]) -> String {
    let mut md = String::from(
        "| θ | coroot | S1 Qℓ(0) | S1 Qℓ(1) | S2 Qℓ(0) | S2 Qℓ(1) | H Qℓ(0) | H Qℓ(1) | sl2 |\n|---|---|---|---|---|---|---|---|---|\n",
    );
    for r in rows {
        let _ = writeln!(
            md,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.theta,
            r.coroot,
            diag_coeff(&r.s1, 0),
            diag_coeff(&r.s1, 1),
            diag_coeff(&r.s2, 0),
            diag_coeff(&r.s2, 1),
            diag_coeff(&r.h, 0),
            diag_coeff(&r.h, 1),
            r.decomposition
        );
    }
    md
}

fn diag_json(r: &DiagRow) -> Value {
    json!({
        "theta": r.theta.0,
        "is_coroot": r.coroot,
        "s1": r.s1.to_json(),
        "s2": r.s2.to_json(),
        "h_diagonal": r.h.to_json(),
        "decomposition": r.decomposition_json,
    })
}

pub fn diag(ty: &TypeArgs, theta: Option<&str>, all_coroots: bool) -> CmdResult {
    let d = datum(ty)?;
    let thetas = if all_coroots {
        d.positive_coroots().to_vec()
    } else {
        vec![coweight(&d, theta.unwrap_or_default())?]
    };
    let rows = thetas.iter().map(|t| diag_row(&d, t)).collect::<Result<Vec<_>, _>>()?;
    let mut m = header("diag", &d);
    m.insert("rows".into(), json!(rows.iter().map(diag_json).collect::<Vec<_>>()));
    let md = format!("# Diagonal classes in {}\n\n{}", d.group_type(), diag_table(&rows));
    Ok(Output::ok(Value::Object(m), md))
}

pub fn uea_dims(ty: &TypeArgs, max_length: u64) -> CmdResult {
    let d = datum(ty)?;
    let cb = build_chevalley(&d);
    let mut rows = Vec::new();
    let mut md = format!("# dim U(n)_θ for the dual of {}\n\n| θ | dim | Kostant |\n|---|---|---|\n", d.group_type());
    let mut passed = true;
    for theta in coweights_up_to(d.rank(), 0, max_length) {
        let dim = cb.weight_space_dim(&theta);
        let count = kostant_count(&d, &theta)?;
        passed &= dim == count;
        rows.push(json!({"theta": theta.0, "dim": dim, "kostant_count": count}));
        let _ = writeln!(md, "| {theta} | {dim} | {count} |");
    }
    let mut m = header("uea-dims", &d);
    m.insert("dual_type".into(), json!(cb.dual_datum().group_type().to_string()));
    m.insert("rows".into(), json!(rows));
    m.insert("passed".into(), json!(passed));
    Ok(Output { json: Value::Object(m), markdown: md, passed })
}

fn report_table(reports: &[CheckReport]) -> String {
    let mut md = String::from("| check | bound | cases | passed | counterexample |\n|---|---|---|---|---|\n");
    for r in reports {
        let _ = writeln!(
            md,
            "| {} | {} | {} | {} | {} |",
            r.name,
            r.bound,
            r.cases,
            r.passed,
            r.counterexample.as_deref().unwrap_or("")
        );
    }
    md
}

pub fn uea_check(ty: &TypeArgs, hopf: bool, assoc: bool, bound: Option<u64>) -> CmdResult {
    let d = datum(ty)?;
    let cb = build_chevalley(&d);
    let bound = bound.unwrap_or_else(|| default_bound(d.rank()));
    let (hopf, assoc) = if !hopf && !assoc { (true, true) } else { (hopf, assoc) };
    let mut reports = Vec::new();
    if assoc {
        reports.push(check_associativity(&cb, bound));
    }
    if hopf {
        reports.push(check_hopf_axiom(&cb, bound));
        reports.push(check_coassociativity(&cb, bound.min(3)));
    }
    let passed = reports.iter().all(|r| r.passed);
    let mut m = header("uea-check", &d);
    m.insert("checks".into(), json!(reports.iter().map(CheckReport::to_json).collect::<Vec<_>>()));
    m.insert("passed".into(), json!(passed));
    let md = format!("# U(n) checks for the dual of {}\n\n{}", d.group_type(), report_table(&reports));
    Ok(Output { json: Value::Object(m), markdown: md, passed })
}

pub fn uea_mul(ty: &TypeArgs, lhs: &str, rhs: &str) -> CmdResult {
    let d = datum(ty)?;
    let cb = build_chevalley(&d);
    let a = parse_expr(&cb, lhs)?;
    let b = parse_expr(&cb, rhs)?;
    let product = cb.multiply(&a, &b)?;
    let mut m = header("uea-mul", &d);
    m.insert("lhs".into(), a.to_json());
    m.insert("rhs".into(), b.to_json());
    m.insert("product".into(), product.to_json());
    m.insert(
        "roots".into(),
        json!(cb.roots().iter().enumerate().map(|(j, r)| json!({"name": format!("E{}", j + 1), "root": r.0})).collect::<Vec<_>>()),
    );
    let md = format!("# Product in U(n) for the dual of {}\n\n`({a}) * ({b}) = {product}`\n", d.group_type());
    Ok(Output::ok(Value::Object(m), md))
}

struct Check {
    check: String,
    theta: Option<Coweight>,
    expected: String,
    computed: String,
    passed: bool,
}

impl Check {
    fn json(&self) -> Value {
        json!({
            "check": self.check,
            "theta": self.theta.as_ref().map(|t| t.0.clone()),
            "expected": self.expected,
            "computed": self.computed,
            "passed": self.passed,
        })
    }
}

pub fn verify(ty: &TypeArgs, max_length: u64, theta: Option<&str>) -> CmdResult {
    let d = datum(ty)?;
    let thetas: Vec<Coweight> = match theta {
        Some(s) => {
            let t = coweight(&d, s)?;
            if t.is_zero() {
                return Err(Failure::Usage("theta must be nonzero".into()));
            }
            vec![t]
        }
        None => {
            let mut v = d.positive_coroots().to_vec();
            v.extend(coweights_up_to(d.rank(), 1, max_length).into_iter().filter(|t| !d.is_coroot(t)));
            v
        }
    };
    let one_minus_q = HalfLaurent::from_terms([(0, 1), (2, -1)]);
    let two = HalfLaurent::monomial(0, 2);
    let p1 = decompose_sl2(&standard_char())?;
    let mut checks = Vec::new();
    for t in &thetas {
        let coroot = d.is_coroot(t);
        let row = diag_row(&d, t)?;
        let (e1, e2, eh) = if coroot {
            (one_minus_q.clone(), two.clone(), p1.to_string())
        } else {
            (HalfLaurent::zero(), HalfLaurent::zero(), "0".to_string())
        };
        checks.push(Check { check: "S1".into(), theta: Some(t.clone()), expected: e1.to_string(), computed: row.s1.to_string(), passed: row.s1 == e1 });
        checks.push(Check { check: "S2".into(), theta: Some(t.clone()), expected: e2.to_string(), computed: row.s2.to_string(), passed: row.s2 == e2 });
        checks.push(Check {
            check: "H_diagonal".into(),
            theta: Some(t.clone()),
            passed: row.decomposition == eh,
            expected: eh,
            computed: row.decomposition,
        });
    }
    let cb = build_chevalley(&d);
    for t in coweights_up_to(d.rank(), 0, max_length) {
        let count = kostant_count(&d, &t)?;
        let listed = enumerate_kostant(&d, &t)?.len() as u64;
        let dim = cb.weight_space_dim(&t);
        checks.push(Check {
            check: "kostant_pbw".into(),
            theta: Some(t),
            expected: count.to_string(),
            computed: format!("dim {dim}, listed {listed}"),
            passed: dim == count && listed == count,
        });
    }
    let bound = default_bound(d.rank()).min(max_length.max(1));
    for r in [check_associativity(&cb, bound), check_hopf_axiom(&cb, bound), check_coassociativity(&cb, bound.min(3))] {
        checks.push(Check {
            check: r.name.clone(),
            theta: None,
            expected: format!("pass on {} cases up to length {}", r.cases, r.bound),
            computed: r.counterexample.clone().unwrap_or_else(|| "pass".into()),
            passed: r.passed,
        });
    }
    let passed = checks.iter().all(|c| c.passed);
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut m = header("verify", &d);
    m.insert("max_length".into(), json!(max_length));
    m.insert("checks".into(), json!(checks.iter().map(Check::json).collect::<Vec<_>>()));
    m.insert("passed".into(), json!(passed));
    m.insert("failed".into(), json!(failed));

    let mut md = format!("# Verification for {}\n\n| check | θ | expected | computed | passed |\n|---|---|---|---|---|\n", d.group_type());
    for c in &checks {
        let theta = c.theta.as_ref().map(|t| t.to_string()).unwrap_or_default();
        let _ = writeln!(md, "| {} | {theta} | {} | {} | {} |", c.check, c.expected, c.computed, c.passed);
    }
    let _ = writeln!(md, "\n{} checks, {failed} failed", checks.len());
    Ok(Output { json: Value::Object(m), markdown: md, passed })
}

pub fn fixture(ty: &TypeArgs, theta: &str) -> CmdResult {
    let d = datum(ty)?;
    let theta = coweight(&d, theta)?;
    let parts = enumerate_kostant(&d, &theta)?;
    let cb = build_chevalley(&d);
    let mut m = header("fixture", &d);
    m.insert("datum".into(), d.to_json());
    m.insert(
        "kostant".into(),
        json!({
            "theta": theta.0,
            "count": kostant_count(&d, &theta)?,
            "partitions": parts.iter().map(|k| k.to_json(&d)).collect::<Vec<_>>(),
        }),
    );
    m.insert(
        "pbw_basis".into(),
        json!(cb.basis(&theta).iter().map(|mono| mono.word()).collect::<Vec<_>>()),
    );
    if !theta.is_zero() {
        m.insert("diag".into(), diag_json(&diag_row(&d, &theta)?));
    }
    let md = format!("# Fixture for {} at {}\n\nKostant count: {}\n", d.group_type(), theta, parts.len());
    Ok(Output::ok(Value::Object(m), md))
}
