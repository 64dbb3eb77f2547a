use std::path::Path;

use anyhow::{bail, Context};
use serde::Serialize;

use rainbow_roman::catalog::{self, Sample, ScanRow, Source};
use rainbow_roman::constructions::{add_c4, gap_instance, star_link, ConstructionError, GapCheck, Shift};
use rainbow_roman::hereditary::{find_forbidden, hereditary_equality_direct, in_gk_direct, Family};
use rainbow_roman::reduction::{build_reduction, verify_reduction};
use rainbow_roman::structure::{audit_function, StructureAudit};
use rainbow_roman::transfer::{rainbow_to_roman, roman_to_rainbow};
use rainbow_roman::{
    all_min_2rdf, gamma_r2, gamma_roman, is_2rainbow_dominating, is_roman_dominating, Graph, RainbowAssignment,
    RomanAssignment,
};

use crate::input::{load_cnf, load_graph};
use crate::{ConstructOp, Direction, Format, Outcome, Param};

#[derive(Serialize)]
struct SolveOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_r2: Option<usize>,
    #[serde(rename = "gamma_R", skip_serializing_if = "Option::is_none")]
    gamma_roman: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r2_witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    roman_witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_2rdf: Option<Vec<String>>,
}

pub fn solve(source: &str, param: Param, witness: bool, all_min: bool) -> anyhow::Result<Outcome> {
    let graph = load_graph(source)?;
    let mut out =
        SolveOutput { gamma_r2: None, gamma_roman: None, r2_witness: None, roman_witness: None, min_2rdf: None };
    let mut violated = false;
    let mut values = (None, None);
    if matches!(param, Param::R2 | Param::Both) {
        let r = gamma_r2(&graph)?;
        violated |= r.witness.weight() != r.value || !is_2rainbow_dominating(&graph, &r.witness)?;
        out.gamma_r2 = Some(r.value);
        out.r2_witness = witness.then(|| r.witness.to_string());
        values.0 = Some(r.value);
    }
    if matches!(param, Param::Roman | Param::Both) {
        let r = gamma_roman(&graph)?;
        violated |= r.witness.weight() != r.value || !is_roman_dominating(&graph, &r.witness)?;
        out.gamma_roman = Some(r.value);
        out.roman_witness = witness.then(|| r.witness.to_string());
        values.1 = Some(r.value);
    }
    if let (Some(a), Some(b)) = values {
        violated |= !(a <= b && b <= 3 * a / 2);
    }
    if all_min {
        let all = all_min_2rdf(&graph)?;
        out.min_2rdf = Some(all.iter().map(ToString::to_string).collect());
    }
    Outcome::json(&out, violated)
}

#[derive(Serialize)]
struct ConvertOutput {
    input: String,
    output: String,
    input_weight: usize,
    output_weight: usize,
}

pub fn convert(source: &str, assignment: &str, direction: Direction) -> anyhow::Result<Outcome> {
    let graph = load_graph(source)?;
    let (out, violated) = match direction {
        Direction::RomanToR2 => {
            let g: RomanAssignment = assignment.parse().context("parsing Roman assignment")?;
            let f = roman_to_rainbow(&graph, &g)?;
            let ok = is_2rainbow_dominating(&graph, &f)? && f.weight() == g.weight();
            (
                ConvertOutput {
                    input: g.to_string(),
                    output: f.to_string(),
                    input_weight: g.weight(),
                    output_weight: f.weight(),
                },
                !ok,
            )
        }
        Direction::R2ToRoman => {
            let f: RainbowAssignment = assignment.parse().context("parsing 2-rainbow assignment")?;
            let g = rainbow_to_roman(&graph, &f)?;
            let ok = is_roman_dominating(&graph, &g)? && g.weight() <= 3 * f.weight() / 2;
            (
                ConvertOutput {
                    input: f.to_string(),
                    output: g.to_string(),
                    input_weight: f.weight(),
                    output_weight: g.weight(),
                },
                !ok,
            )
        }
    };
    Outcome::json(&out, violated)
}

#[derive(Serialize)]
struct ReduceOutput {
    n: usize,
    m: usize,
    order: usize,
    target_weight: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<Graph>,
}

#[derive(Serialize)]
struct CheckOutput {
    gamma_r2: usize,
    #[serde(rename = "gamma_R")]
    gamma_roman: usize,
    satisfiable: bool,
    consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    assignment: Option<Vec<bool>>,
}

pub fn reduce(cnf: &Path, out: Option<&Path>, check: bool) -> anyhow::Result<Outcome> {
    let formula = load_cnf(cnf)?;
    let reduction = build_reduction(&formula)?;
    if let Some(path) = out {
        std::fs::write(path, reduction.graph.to_edge_list()).with_context(|| format!("writing {}", path.display()))?;
    }
    if check {
        let report = verify_reduction(&formula)?;
        let out = CheckOutput {
            gamma_r2: report.gamma_r2,
            gamma_roman: report.gamma_roman,
            satisfiable: report.satisfiable,
            consistent: report.consistent,
            assignment: report.assignment,
        };
        return Outcome::json(&out, !report.consistent);
    }
    let summary = ReduceOutput {
        n: reduction.num_vars(),
        m: reduction.num_clauses(),
        order: reduction.graph.order(),
        target_weight: reduction.target_weight(),
        graph: out.is_none().then(|| reduction.graph.clone()),
    };
    Outcome::json(&summary, false)
}

fn load_family(entries: &[String]) -> anyhow::Result<Family> {
    let mut members = Vec::new();
    for entry in entries {
        if let Some(preset) = Family::preset(entry) {
            members.extend(preset.members);
            continue;
        }
        let name = Path::new(entry).file_stem().map_or_else(|| entry.clone(), |s| s.to_string_lossy().into_owned());
        members.push((name, load_graph(entry)?));
    }
    Ok(Family::new(members))
}

#[derive(Serialize)]
struct RecognizeOutput {
    free: bool,
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hereditary_equal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    in_gk: Option<bool>,
}

pub fn recognize(
    source: &str,
    family: &[String],
    hereditary_direct: bool,
    gk: Option<usize>,
) -> anyhow::Result<Outcome> {
    let graph = load_graph(source)?;
    let members = load_family(family)?;
    let found = find_forbidden(&graph, &members)?;
    let free = found.is_none();
    let hereditary_equal = if hereditary_direct { Some(hereditary_equality_direct(&graph)?) } else { None };
    let in_gk = gk.map(|k| in_gk_direct(&graph, k)).transpose()?;

    // the presets characterise the direct properties exactly
    let preset = |name: &str| family.len() == 1 && family[0] == name;
    let violated = (preset("theorem2") && hereditary_equal.is_some_and(|eq| eq != free))
        || (preset("theorem3") && gk == Some(3) && in_gk.is_some_and(|member| member != free));

    let out = RecognizeOutput { free, witness: found.map(|(name, _)| name.to_owned()), hereditary_equal, in_gk };
    Outcome::json(&out, violated)
}

#[derive(Serialize)]
struct StructureOutput {
    extremal: bool,
    gamma_r2: usize,
    #[serde(rename = "gamma_R")]
    gamma_roman: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    failures: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    functions: Option<Vec<StructureAudit>>,
}

pub fn structure(source: &str) -> anyhow::Result<Outcome> {
    let graph = load_graph(source)?;
    let r2 = gamma_r2(&graph)?.value;
    let roman = gamma_roman(&graph)?.value;
    let extremal = 2 * roman == 3 * r2;
    let mut out = StructureOutput { extremal, gamma_r2: r2, gamma_roman: roman, failures: None, functions: None };
    if extremal {
        let audits: Vec<_> = all_min_2rdf(&graph)?.iter().map(|f| audit_function(&graph, f)).collect();
        out.failures = Some(audits.iter().filter(|a| !a.properties.all()).count());
        out.functions = Some(audits);
    }
    let violated = out.failures.is_some_and(|n| n > 0);
    Outcome::json(&out, violated)
}

#[derive(Serialize)]
#[serde(untagged)]
enum Verification {
    Shift { increments: (isize, isize), expected: (isize, isize), parameters: Shift },
    Gap(GapCheck),
}

#[derive(Serialize)]
struct ConstructOutput {
    edge_list: String,
    verification: Verification,
    holds: bool,
}

pub fn construct(
    op: ConstructOp,
    k: Option<usize>,
    source: Option<&str>,
    out: Option<&Path>,
) -> anyhow::Result<Outcome> {
    let (graph, verification, holds) = match op {
        ConstructOp::GapK => {
            let Some(k) = k else { bail!("--op gap-k needs --k") };
            match gap_instance(k) {
                Ok((graph, check)) => (graph, Verification::Gap(check), true),
                Err(ConstructionError::Verification(detail)) => {
                    return Outcome::json(
                        &serde_json::json!({ "error": "verification failed", "detail": detail }),
                        true,
                    );
                }
                Err(err) => return Err(err.into()),
            }
        }
        ConstructOp::AddC4 | ConstructOp::StarLink => {
            let Some(source) = source else { bail!("this operation needs a GRAPH argument") };
            let base = load_graph(source)?;
            let (built, expected) = match op {
                ConstructOp::AddC4 => (add_c4(&base)?, (2, 3)),
                _ => (star_link(&base)?, (2, 2)),
            };
            let shift = Shift::measure(&base, &built)?;
            let increments = shift.increments();
            let holds = increments == expected && (op == ConstructOp::AddC4 || built.is_connected());
            (built, Verification::Shift { increments, expected, parameters: shift }, holds)
        }
    };
    if let Some(path) = out {
        std::fs::write(path, graph.to_edge_list()).with_context(|| format!("writing {}", path.display()))?;
    }
    let out = ConstructOutput { edge_list: graph.to_edge_list(), verification, holds };
    Outcome::json(&out, !holds)
}

#[derive(Serialize)]
struct CsvRow<'a> {
    canonical: &'a str,
    source: String,
    order: usize,
    edges: usize,
    connected: bool,
    gamma_r2: usize,
    #[serde(rename = "gamma_R")]
    gamma_roman: usize,
    gap: usize,
    sandwich_ok: bool,
    conversions_ok: bool,
    free_of_p5_c5_c4: bool,
    free_of_3k1_k2k1: bool,
    extremal: bool,
    audit_functions: usize,
    audit_passing: usize,
    hereditary_equal: Option<bool>,
    in_g3: Option<bool>,
}

impl<'a> From<&'a ScanRow> for CsvRow<'a> {
    fn from(row: &'a ScanRow) -> Self {
        CsvRow {
            canonical: &row.canonical,
            source: match row.source {
                Source::Catalog => "catalog".to_owned(),
                Source::Sample(i) => format!("sample:{i}"),
            },
            order: row.order,
            edges: row.edges,
            connected: row.connected,
            gamma_r2: row.gamma_r2,
            gamma_roman: row.gamma_roman,
            gap: row.gap,
            sandwich_ok: row.sandwich_ok,
            conversions_ok: row.conversions_ok,
            free_of_p5_c5_c4: row.free_of_p5_c5_c4,
            free_of_3k1_k2k1: row.free_of_3k1_k2k1,
            extremal: row.extremal,
            audit_functions: row.audit.functions,
            audit_passing: row.audit.passing,
            hereditary_equal: row.hereditary_equal,
            in_g3: row.in_g3,
        }
    }
}

pub fn scan(max_order: usize, samples: &[Sample], format: Format) -> anyhow::Result<Outcome> {
    let report = catalog::scan(max_order, samples)?;
    let violated = !report.aggregate.is_clean();
    let text = match format {
        Format::Jsonl => report.to_jsonl(),
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            for row in &report.rows {
                writer.serialize(CsvRow::from(row))?;
            }
            String::from_utf8(writer.into_inner()?)?
        }
    };
    Ok(Outcome { text, violated })
}
