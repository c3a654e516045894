//! The `schubert-aut` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cap exceeded.

use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value as Json};

use crate::classify::{
    check_minimal_negative_rep, classify, is_minuscule, minuscule_indices, reference_minuscule,
};
use crate::constructions::{
    construction, construction_targets, verify_all_suites, verify_lemma_suite, E6_V2, E7_V4, E8_V6,
    SUITES,
};
use crate::demazure::{b2_adjoint_example, demazure_apply, h0_module_character, Character};
use crate::error::{Error, Result};
use crate::extremal::{dual_coxeter, minimal_negator, minimal_transporter};
use crate::rootsys::{CartanType, Family, ParabolicSet, Root, RootSystem, Weight};
use crate::schubert::{minuscule_obstruction, search_witnesses, verify_witness};
use crate::weyl::{from_word, DEFAULT_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Comma-separated values, optionally bracketed; empty means the empty list.
#[derive(Debug, Clone)]
pub struct List<T>(pub Vec<T>);

impl<T> Default for List<T> {
    fn default() -> Self {
        List(Vec::new())
    }
}

impl<T: FromStr> FromStr for List<T>
where
    T::Err: std::fmt::Display,
{
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let t = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .trim();
        if t.is_empty() {
            return Ok(List(Vec::new()));
        }
        t.split(',')
            .map(|x| {
                x.trim()
                    .parse::<T>()
                    .map_err(|e| format!("{:?}: {}", x.trim(), e))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(List)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "schubert-aut",
    version,
    about = "Exact root systems, Weyl groups and Schubert-variety stabilizer witnesses"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// JSON output (default)
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Plain-text rendering of the same report
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Debug, Args)]
struct TypeArg {
    /// Root system, e.g. E6, D5, B2
    #[arg(value_name = "TYPE")]
    ctype: String,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Minuscule and cominuscule fundamental weights
    Classify(TypeArg),
    /// Minimal u with u^{-1}(alpha_0) = alpha
    Transporter {
        #[command(flatten)]
        t: TypeArg,
        /// simple root index
        #[arg(long, conflicts_with = "root")]
        target: Option<usize>,
        /// arbitrary root in simple-root coordinates
        #[arg(long, allow_hyphen_values = true)]
        root: Option<List<i64>>,
    },
    /// Minimal v with v^{-1}(alpha_0) = -alpha_k
    Negator {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        target: usize,
    },
    /// Check a candidate (J, w) for target {i}
    WitnessVerify {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        target: usize,
        #[arg(long)]
        ambient: List<usize>,
        #[arg(long)]
        word: List<usize>,
    },
    /// Exhaustive search over nonempty J and W^J
    WitnessSearch {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        target: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Root-image identity suites
    Lemmas {
        /// suite id, or "all"
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long)]
        list: bool,
        /// D_n rank for the D suites
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Demazure characters of g/p_J or of a single weight
    Demazure {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        word: List<usize>,
        #[arg(long, visible_alias = "ambient", conflicts_with = "weight")]
        module: Option<List<usize>>,
        /// weight in fundamental-weight coordinates
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<List<i64>>,
    },
    /// Run every check
    VerifyAll {
        /// include D5 and E6 in the exhaustive oracle
        #[arg(long)]
        deep: bool,
        /// largest D_n rank covered
        #[arg(long, default_value_t = 10)]
        rank: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

/// Runs the CLI on `argv` (without the program name), writing to stdout/stderr.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let out = std::io::stdout();
    let err = std::io::stderr();
    run_with(argv, &mut out.lock(), &mut err.lock())
}

pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = std::iter::once("schubert-aut".to_string())
        .chain(argv.into_iter().map(Into::into))
        .collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", text);
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", text);
                    EXIT_USAGE
                }
            };
        }
    };
    let text = cli.text;
    match execute(cli.cmd) {
        Ok((report, code)) => {
            let rendered = if text {
                let mut s = String::new();
                render_text(&report, 0, &mut s);
                s
            } else {
                let mut s = serde_json::to_string_pretty(&report).expect("serializable report");
                s.push('\n');
                s
            };
            let _ = out.write_all(rendered.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::EnumerationTooLarge { .. } => EXIT_CAP,
        Error::Internal(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn system(name: &str) -> Result<RootSystem> {
    RootSystem::from_name(name)
}

fn to_json<T: Serialize>(v: &T) -> Json {
    serde_json::to_value(v).expect("serializable")
}

fn execute(cmd: Cmd) -> Result<(Json, i32)> {
    match cmd {
        Cmd::Classify(t) => {
            let rs = system(&t.ctype)?;
            let reports = classify(&rs)?;
            let minuscule: Vec<usize> = reports
                .iter()
                .filter(|r| r.minuscule)
                .map(|r| r.index)
                .collect();
            let cominuscule: Vec<usize> = reports
                .iter()
                .filter(|r| r.cominuscule)
                .map(|r| r.index)
                .collect();
            Ok((
                json!({
                    "ctype": rs.ctype(),
                    "highest_root": rs.highest(),
                    "dual_coxeter": dual_coxeter(&rs),
                    "minuscule": minuscule,
                    "cominuscule": cominuscule,
                    "weights": reports,
                }),
                EXIT_OK,
            ))
        }
        Cmd::Transporter { t, target, root } => {
            let rs = system(&t.ctype)?;
            let alpha = match (target, root) {
                (Some(i), _) => {
                    rs.check_index(i)?;
                    rs.simple(i)
                }
                (None, Some(r)) => Root::from_slice(&r.0),
                (None, None) => rs.highest().clone(),
            };
            if alpha.rank() != rs.rank() {
                return Err(Error::BadArgument(format!(
                    "root needs {} coordinates",
                    rs.rank()
                )));
            }
            let res = minimal_transporter(&rs, &alpha)?;
            Ok((
                json!({
                    "ctype": rs.ctype(),
                    "dual_coxeter": dual_coxeter(&rs),
                    "transporter": res.view(&rs),
                }),
                EXIT_OK,
            ))
        }
        Cmd::Negator { t, target } => {
            let rs = system(&t.ctype)?;
            let res = minimal_negator(&rs, target)?;
            Ok((
                json!({
                    "ctype": rs.ctype(),
                    "highest_root_height": rs.highest().height(),
                    "negator": res.view(&rs),
                }),
                EXIT_OK,
            ))
        }
        Cmd::WitnessVerify {
            t,
            target,
            ambient,
            word,
        } => {
            let rs = system(&t.ctype)?;
            let j = ParabolicSet::checked(rs.rank(), ambient.0)?;
            let w = from_word(&rs, &word.0)?;
            let rep = verify_witness(&rs, target, j, &w)?;
            let code = if rep.verdict { EXIT_OK } else { EXIT_FAIL };
            Ok((to_json(&rep), code))
        }
        Cmd::WitnessSearch { t, target, cap } => {
            let rs = system(&t.ctype)?;
            let found = search_witnesses(&rs, target, cap)?;
            let witnesses: Vec<Json> = found
                .iter()
                .map(|(j, w)| json!({"ambient": j, "element": w.view(&rs)}))
                .collect();
            Ok((
                json!({
                    "ctype": rs.ctype(),
                    "target": target,
                    "minuscule": is_minuscule(&rs, target)?,
                    "count": witnesses.len(),
                    "witnesses": witnesses,
                }),
                EXIT_OK,
            ))
        }
        Cmd::Lemmas { suite, list, rank } => {
            if list {
                let v: Vec<Json> = SUITES
                    .iter()
                    .map(|(id, about)| json!({"id": id, "summary": about}))
                    .collect();
                return Ok((Json::Array(v), EXIT_OK));
            }
            let results = if suite == "all" {
                let ranks: Vec<usize> = match rank {
                    Some(n) => vec![n],
                    None => crate::constructions::D_RANKS.collect(),
                };
                verify_all_suites(&ranks)?
            } else {
                vec![verify_lemma_suite(&suite, rank)?]
            };
            let code = if results.iter().all(|r| r.all_pass) {
                EXIT_OK
            } else {
                EXIT_FAIL
            };
            Ok((to_json(&results), code))
        }
        Cmd::Demazure {
            t,
            word,
            module,
            weight,
        } => {
            let rs = system(&t.ctype)?;
            let word = word.0;
            let chi = match weight {
                Some(l) => {
                    if l.0.len() != rs.rank() {
                        return Err(Error::BadArgument(format!(
                            "weight needs {} coordinates",
                            rs.rank()
                        )));
                    }
                    demazure_apply(&rs, &word, &Character::monomial(Weight::from_slice(&l.0)))?
                }
                None => {
                    let j = ParabolicSet::checked(rs.rank(), module.unwrap_or_default().0)?;
                    let w = from_word(&rs, &word)?;
                    let length = w.length(&rs);
                    if length != word.len() {
                        return Err(Error::NonReducedWord { word, length });
                    }
                    h0_module_character(&rs, &w, j)?
                }
            };
            Ok((to_json(&chi), EXIT_OK))
        }
        Cmd::VerifyAll { deep, rank, cap } => {
            let report = verify_all(&VerifyOptions {
                deep,
                max_d_rank: rank,
                cap,
            })?;
            let code = if report.all_pass { EXIT_OK } else { EXIT_FAIL };
            Ok((to_json(&report), code))
        }
    }
}

/// Indented `key: value` rendering of a JSON report.
fn render_text(v: &Json, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Json::Object(map) => {
            for (k, x) in map {
                if is_inline(x) {
                    out.push_str(&format!("{}{}: {}\n", pad, k, inline(x)));
                } else {
                    out.push_str(&format!("{}{}:\n", pad, k));
                    render_text(x, indent + 1, out);
                }
            }
        }
        Json::Array(items) if !is_inline(v) => {
            for x in items {
                if is_inline(x) {
                    out.push_str(&format!("{}- {}\n", pad, inline(x)));
                } else {
                    out.push_str(&format!("{}-\n", pad));
                    render_text(x, indent + 1, out);
                }
            }
        }
        _ => out.push_str(&format!("{}{}\n", pad, inline(v))),
    }
}

fn is_inline(v: &Json) -> bool {
    match v {
        Json::Array(items) => items.iter().all(|x| match x {
            Json::Array(inner) => inner.iter().all(|y| !y.is_array() && !y.is_object()),
            Json::Object(_) => false,
            _ => true,
        }),
        Json::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Json) -> String {
    match v {
        Json::String(s) => s.clone(),
        Json::Null => "-".into(),
        _ => v.to_string(),
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub deep: bool,
    pub max_d_rank: usize,
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            deep: false,
            max_d_rank: 10,
            cap: DEFAULT_CAP,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Item {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Section {
    pub name: String,
    pub pass: bool,
    pub items: Vec<Item>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub all_pass: bool,
    pub sections: Vec<Section>,
}

fn item(name: impl Into<String>, pass: bool, detail: Option<String>) -> Item {
    Item {
        name: name.into(),
        pass,
        detail,
    }
}

fn outcome(name: String, r: Result<(bool, Option<String>)>) -> Item {
    match r {
        Ok((pass, detail)) => item(name, pass, detail),
        Err(e) => item(name, false, Some(e.to_string())),
    }
}

/// Turns a check outcome into an item; cap overflows abort the whole run.
fn settle(name: String, r: Result<(bool, Option<String>)>) -> Result<Item> {
    match r {
        Ok((pass, detail)) => Ok(item(name, pass, detail)),
        Err(e @ Error::EnumerationTooLarge { .. }) => Err(e),
        Err(e) => Ok(item(name, false, Some(e.to_string()))),
    }
}

fn section(name: &str, items: Vec<Item>) -> Section {
    Section {
        name: name.to_string(),
        pass: items.iter().all(|i| i.pass),
        items,
    }
}

/// Types used throughout `verify-all`.
pub fn admitted_types(max_d_rank: usize) -> Vec<CartanType> {
    let mut v: Vec<CartanType> = (1..=8).map(CartanType::a).collect();
    v.extend((4..=max_d_rank).map(CartanType::d));
    v.extend((6..=8).map(CartanType::e));
    v.push(CartanType::b2());
    v
}

/// Highest roots as drawn on the Dynkin diagrams.
pub fn reference_highest_root(ct: CartanType) -> Option<Root> {
    let n = ct.rank();
    match (ct.family(), n) {
        (Family::A, _) => Some(Root(std::iter::repeat_n(1, n).collect())),
        (Family::D, _) => {
            let mut c = vec![2i64; n];
            c[0] = 1;
            c[n - 2] = 1;
            c[n - 1] = 1;
            Some(Root::from_slice(&c))
        }
        (Family::E, 6) => Some(Root::from_slice(&[1, 2, 2, 3, 2, 1])),
        (Family::E, 7) => Some(Root::from_slice(&[2, 2, 3, 4, 3, 2, 1])),
        (Family::E, 8) => Some(Root::from_slice(&[2, 3, 4, 6, 5, 4, 3, 2])),
        _ => None,
    }
}

pub fn verify_all(opts: &VerifyOptions) -> Result<VerifyReport> {
    let types = admitted_types(opts.max_d_rank);
    let laced: Vec<CartanType> = types.iter().copied().filter(|t| t.simply_laced()).collect();
    let mut sections = Vec::new();

    // minuscule classification
    let items: Vec<Item> = types
        .iter()
        .map(|&ct| {
            let rs = RootSystem::build(ct);
            let got = minuscule_indices(&rs);
            let want = reference_minuscule(ct);
            item(
                ct.to_string(),
                got == want,
                Some(format!("minuscule {:?}, reference {:?}", got, want)),
            )
        })
        .collect();
    sections.push(section("classification", items));

    let items: Vec<Item> = laced
        .iter()
        .map(|&ct| {
            let rs = RootSystem::build(ct);
            let want = reference_highest_root(ct).expect("simply-laced reference");
            item(
                ct.to_string(),
                *rs.highest() == want,
                Some(rs.highest().to_string()),
            )
        })
        .collect();
    sections.push(section("highest roots", items));

    // transporters and negators for every simple root
    let items: Vec<Item> = laced
        .par_iter()
        .flat_map_iter(|&ct| {
            let rs = RootSystem::build(ct);
            let g = dual_coxeter(&rs);
            let ht = rs.highest().height();
            (1..=rs.rank())
                .map(|i| {
                    let r = (|| -> Result<(bool, Option<String>)> {
                        let u = minimal_transporter(&rs, &rs.simple(i))?;
                        let v = minimal_negator(&rs, i)?;
                        let pass = u.length as i64 == g - 2
                            && u.unique
                            && v.length as i64 == ht
                            && v.unique;
                        Ok((
                            pass,
                            Some(format!(
                                "l(u) = {} (g-2 = {}), l(v) = {} (ht = {})",
                                u.length,
                                g - 2,
                                v.length,
                                ht
                            )),
                        ))
                    })();
                    outcome(format!("{} a{}", ct, i), r)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    sections.push(section("transporters and negators", items));

    // printed negator words
    let mut items = Vec::new();
    for (rank, k, word) in [(6, 2, E6_V2), (7, 4, E7_V4), (8, 6, E8_V6)] {
        let rs = RootSystem::build(CartanType::e(rank));
        let r = (|| {
            let v = from_word(&rs, word)?;
            let neg = minimal_negator(&rs, k)?;
            let reduced = v.length(&rs) == word.len();
            let negates = Root(v.apply_inv_coords(&rs.highest().0)) == -rs.simple(k);
            Ok((
                reduced && negates && neg.element == v,
                Some(format!(
                    "{} letters, reduced {}, negates a{} {}",
                    word.len(),
                    reduced,
                    k,
                    negates
                )),
            ))
        })();
        items.push(settle(format!("E{} v_{}", rank, k), r)?);
    }
    sections.push(section("negator words", items));

    // identity suites
    let d_ranks: Vec<usize> = (4..=opts.max_d_rank).collect();
    let suites = verify_all_suites(&d_ranks)?;
    let items: Vec<Item> = suites
        .iter()
        .map(|s| {
            let failed: Vec<&str> = s.failures().map(|c| c.description.as_str()).collect();
            let mut detail = format!(
                "{} checks, {} errata, {} proof-line mismatches",
                s.checks.len(),
                s.errata.len(),
                s.proof_lines.iter().filter(|p| !p.pass).count()
            );
            if !failed.is_empty() {
                detail.push_str(&format!("; failing: {}", failed.join("; ")));
            }
            item(s.suite_id.clone(), s.all_pass, Some(detail))
        })
        .collect();
    sections.push(section("identity suites", items));

    // explicit witnesses
    let cases: Vec<(CartanType, usize)> = laced
        .iter()
        .filter(|t| matches!(t.family(), Family::D | Family::E))
        .flat_map(|&t| construction_targets(t).into_iter().map(move |i| (t, i)))
        .collect();
    let items: Vec<Item> = cases
        .par_iter()
        .map(|&(ct, i)| {
            let rs = RootSystem::build(ct);
            let r = (|| {
                let (j, w) = construction(&rs, i)?;
                let rep = verify_witness(&rs, i, j, &w)?;
                Ok((rep.verdict, (!rep.verdict).then(|| rep.failures.join("; "))))
            })();
            settle(
                format!(
                    "{} w_{} on {}",
                    ct,
                    i,
                    construction(&rs, i)
                        .map(|x| x.0.to_string())
                        .unwrap_or_default()
                ),
                r,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    sections.push(section("witnesses", items));

    // exhaustive oracle
    let mut oracle_types = vec![CartanType::a(2), CartanType::a(3), CartanType::d(4)];
    if opts.deep {
        oracle_types.push(CartanType::d(5));
        oracle_types.push(CartanType::e(6));
    }
    let mut items = Vec::new();
    for ct in oracle_types {
        let rs = RootSystem::build(ct);
        for i in 1..=rs.rank() {
            let r = (|| {
                let found = search_witnesses(&rs, i, opts.cap)?;
                let minuscule = is_minuscule(&rs, i)?;
                if minuscule {
                    return Ok((found.is_empty(), Some(format!("{} witnesses", found.len()))));
                }
                let mut pass = !found.is_empty();
                let mut detail = format!("{} witnesses", found.len());
                if construction_targets(ct).contains(&i) {
                    let c = construction(&rs, i)?;
                    let hit = found.contains(&c);
                    pass &= hit;
                    detail.push_str(&format!(", construction found {}", hit));
                }
                Ok((pass, Some(detail)))
            })();
            items.push(settle(format!("{} target {}", ct, i), r)?);
        }
    }
    sections.push(section("exhaustive oracle", items));

    // obstruction for minuscule weights
    let cases: Vec<(CartanType, usize)> = laced
        .iter()
        .flat_map(|&t| {
            let rs = RootSystem::build(t);
            minuscule_indices(&rs).into_iter().map(move |i| (t, i))
        })
        .collect();
    let items: Vec<Item> = cases
        .par_iter()
        .map(|&(ct, r)| {
            let rs = RootSystem::build(ct);
            let res = (|| {
                let a = minuscule_obstruction(&rs, r)?;
                let b = check_minimal_negative_rep(&rs, r, opts.cap)?;
                Ok((
                    a && b,
                    (!(a && b)).then(|| format!("obstruction {}, unique negative rep {}", a, b)),
                ))
            })();
            settle(format!("{} omega_{}", ct, r), res)
        })
        .collect::<Result<Vec<_>>>()?;
    sections.push(section("minuscule obstruction", items));

    // B2 character check
    let r = b2_adjoint_example().map(|(h0, adj)| {
        (
            h0 == adj && h0.dimension() == 10,
            Some(format!("dimension {}", h0.dimension())),
        )
    });
    sections.push(section(
        "B2 demazure",
        vec![settle("H^0(s2 s1, g/p_2) = g".into(), r)?],
    ));

    Ok(VerifyReport {
        all_pass: sections.iter().all(|s| s.pass),
        sections,
    })
}
