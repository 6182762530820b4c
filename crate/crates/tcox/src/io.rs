//! Input dialects, job dispatch, and report serialization for the command
//! line front end. Rationals travel as strings in all schemas; no floating
//! point value ever enters or leaves.

use crate::cox_pipeline::{
    canonical_class, class_group_from_fan, cox_ring, from_fan, moving_cone, ComplexityOneData,
    CoxGrading,
};
use crate::intlinalg::{FGAbelianGroup, GroupElement};
use crate::klyachko::{cotangent_cox, projectivization_cox, BundleRay, Rank2BundleData, ToricFanRays};
use crate::orlik_wagreich::{contract, graph_data, resolution_cox, Arm, ContractionSpec, OWGraph};
use crate::pdiv::{DivisorialFanP1, PolyhedralDivisorP1, ValidityReport};
use crate::polyhedra::{Cone, SigmaPolyhedron};
use crate::presentation::{GradedPresentation, GradingStatus};
use crate::projline::P1Point;
use crate::util::{fmt_rat, parse_rat};
use crate::{Error, Int, Rat, Result};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

// ---------------------------------------------------------------------------
// input dialects

/// A parsed job: the input kind plus its typed payload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum JobSpec {
    Fan(FanFile),
    Owgraph(OwFile),
    Bundle(BundleFile),
    Cotangent(CotangentFile),
}

impl JobSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            JobSpec::Fan(_) => "fan",
            JobSpec::Owgraph(_) => "owgraph",
            JobSpec::Bundle(_) => "bundle",
            JobSpec::Cotangent(_) => "cotangent",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanFile {
    pub lattice_rank: usize,
    pub divisors: Vec<FanDivisor>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDivisor {
    /// Generators of the pointed tail cone, as rational vectors.
    pub tail: Vec<Vec<String>>,
    pub coefficients: Vec<FanCoefficient>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanCoefficient {
    /// A point `[b : c]` of the line.
    pub point: [String; 2],
    pub polyhedron: PolyJson,
}

/// A sigma-polyhedron coefficient: its vertices (the divisor tail is
/// implied), or the empty set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub empty: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OwFile {
    pub arms: Vec<OwArm>,
    /// Generator labels to contract away, when the singular model is wanted.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub contract: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OwArm {
    pub point: [String; 2],
    pub self_intersections: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleFile {
    pub lattice_rank: usize,
    pub rays: Vec<BundleRayJson>,
    /// Caller's assertion that the base fan is smooth; controls whether the
    /// grading is marked full.
    #[serde(default = "default_true")]
    pub smooth: bool,
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleRayJson {
    pub ray: Vec<String>,
    pub i0: i64,
    pub i1: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CotangentFile {
    pub lattice_rank: usize,
    pub rays: Vec<Vec<String>>,
}

/// Parses an input file into a typed job. Schema violations carry the field
/// path and position reported by the JSON parser.
pub fn parse_input(bytes: &[u8]) -> Result<JobSpec> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| Error::schema("input", "file is not valid UTF-8"))?;
    serde_json::from_str(text).map_err(|e| Error::schema("input", e.to_string()))
}

pub fn serialize_job(job: &JobSpec) -> String {
    serde_json::to_string_pretty(job).expect("job serialization")
}

fn point_from(field: &str, raw: &[String; 2]) -> Result<P1Point> {
    let b = parse_rat(&raw[0]).map_err(|e| rewrap(field, e))?;
    let c = parse_rat(&raw[1]).map_err(|e| rewrap(field, e))?;
    P1Point::new(b, c).map_err(|e| rewrap(field, e))
}

fn rewrap(field: &str, e: Error) -> Error {
    Error::schema(field, e.to_string())
}

fn qvec_from(field: &str, raw: &[String]) -> Result<Vec<Rat>> {
    raw.iter().map(|s| parse_rat(s).map_err(|e| rewrap(field, e))).collect()
}

impl FanFile {
    pub fn to_fan(&self) -> Result<DivisorialFanP1> {
        let dim = self.lattice_rank;
        if dim == 0 {
            return Err(Error::schema("lattice_rank", "must be positive"));
        }
        let mut divisors = Vec::new();
        for (i, d) in self.divisors.iter().enumerate() {
            let field = format!("divisors[{i}]");
            let gens: Vec<Vec<Rat>> = d
                .tail
                .iter()
                .map(|g| {
                    if g.len() != dim {
                        return Err(Error::schema(
                            format!("{field}.tail"),
                            format!("generator has {} coordinates, expected {dim}", g.len()),
                        ));
                    }
                    qvec_from(&format!("{field}.tail"), g)
                })
                .collect::<Result<_>>()?;
            let tail = Cone::from_generators(dim, &gens);
            let mut coeffs = Vec::new();
            for (j, c) in d.coefficients.iter().enumerate() {
                let cfield = format!("{field}.coefficients[{j}]");
                let point = point_from(&format!("{cfield}.point"), &c.point)?;
                let poly = if c.polyhedron.empty {
                    SigmaPolyhedron::empty(dim)
                } else {
                    if c.polyhedron.vertices.is_empty() {
                        return Err(Error::schema(
                            format!("{cfield}.polyhedron"),
                            "a coefficient needs vertices, or `empty: true`",
                        ));
                    }
                    let vertices: Vec<Vec<Rat>> = c
                        .polyhedron
                        .vertices
                        .iter()
                        .map(|v| {
                            if v.len() != dim {
                                return Err(Error::schema(
                                    format!("{cfield}.polyhedron.vertices"),
                                    format!("vertex has {} coordinates, expected {dim}", v.len()),
                                ));
                            }
                            qvec_from(&format!("{cfield}.polyhedron.vertices"), v)
                        })
                        .collect::<Result<_>>()?;
                    SigmaPolyhedron::from_points_and_tail(dim, &vertices, &tail)?
                };
                coeffs.push((point, poly));
            }
            divisors.push(PolyhedralDivisorP1::new(dim, tail, coeffs)?);
        }
        DivisorialFanP1::new(divisors)
    }
}

impl OwFile {
    pub fn to_graph(&self) -> Result<OWGraph> {
        let arms = self
            .arms
            .iter()
            .enumerate()
            .map(|(i, a)| {
                Ok(Arm {
                    point: point_from(&format!("arms[{i}].point"), &a.point)?,
                    self_intersections: a.self_intersections.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        OWGraph::new(arms)
    }
}

impl BundleFile {
    pub fn to_data(&self) -> Result<Rank2BundleData> {
        let rays = self
            .rays
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let field = format!("rays[{i}]");
                let rayq = qvec_from(&format!("{field}.ray"), &r.ray)?;
                let ray = crate::util::primitive_dir(&rayq).map_err(|e| rewrap(&field, e))?;
                let line = match &r.line {
                    Some(l) => Some(point_from(&format!("{field}.line"), l)?),
                    None => None,
                };
                Ok(BundleRay { ray, i0: r.i0, i1: r.i1, line })
            })
            .collect::<Result<Vec<_>>>()?;
        Rank2BundleData::new(self.lattice_rank, rays)
    }
}

impl CotangentFile {
    pub fn to_rays(&self) -> Result<ToricFanRays> {
        let rays = self
            .rays
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let field = format!("rays[{i}]");
                let rayq = qvec_from(&field, r)?;
                crate::util::primitive_dir(&rayq).map_err(|e| rewrap(&field, e))
            })
            .collect::<Result<Vec<_>>>()?;
        ToricFanRays::new(self.lattice_rank, rays)
    }
}

// ---------------------------------------------------------------------------
// reports

#[derive(Debug, Clone, Serialize)]
pub struct GroupJson {
    pub free_rank: usize,
    pub torsion_orders: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementJson {
    pub free: Vec<String>,
    pub torsion: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorJson {
    pub label: String,
    pub tag: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<ElementJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationJson {
    pub rendered: String,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TermJson {
    pub coefficient: String,
    pub monomial: BTreeMap<String, u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConeJson {
    pub ambient_rank: usize,
    pub rays: Vec<Vec<String>>,
    pub lineality: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FanReportJson {
    pub valid: bool,
    pub complete: bool,
    pub pair_failures: Vec<String>,
    pub incomplete_points: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SlicePointJson {
    pub point: String,
    pub vertices: Vec<SliceVertexJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SliceVertexJson {
    pub vertex: Vec<String>,
    pub index: u64,
    pub extremal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SliceRayJson {
    pub ray: Vec<String>,
    pub extremal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PresentationJson {
    pub grading_status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grading_group: Option<GroupJson>,
    pub generators: Vec<GeneratorJson>,
    pub relations: Vec<RelationJson>,
    pub ci_dimension: i64,
}

/// Everything a job produces, serializable as JSON or rendered as text.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fan: Option<FanReportJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub slice_points: Vec<SlicePointJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub slice_rays: Vec<SliceRayJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_group: Option<GroupJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contracted: Option<PresentationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical_class: Option<ElementJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub moving_cone: Option<ConeJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// False when validation failed and the report only carries diagnoses.
    pub ok: bool,
}

pub fn group_json(g: &FGAbelianGroup) -> GroupJson {
    GroupJson {
        free_rank: g.free_rank,
        torsion_orders: g.torsion_orders.iter().map(|d| d.to_u64().unwrap_or(0)).collect(),
    }
}

pub fn element_json(e: &GroupElement) -> ElementJson {
    ElementJson {
        free: e.free_part().iter().map(|x| x.to_string()).collect(),
        torsion: e.torsion_part().iter().map(|x| x.to_u64().unwrap_or(0)).collect(),
    }
}

pub fn cone_json(c: &Cone) -> ConeJson {
    ConeJson {
        ambient_rank: c.ambient_rank(),
        rays: c.rays().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        lineality: c.lineality().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
    }
}

pub fn presentation_json(p: &GradedPresentation) -> PresentationJson {
    PresentationJson {
        grading_status: match p.status {
            GradingStatus::Full => "full".into(),
            GradingStatus::FreePartOnly => "free-part-only".into(),
            GradingStatus::Ungraded => "ungraded".into(),
        },
        grading_group: p.grading.as_ref().map(group_json),
        generators: p
            .generators
            .iter()
            .map(|g| GeneratorJson {
                label: g.label.clone(),
                tag: g.tag.as_str().into(),
                degree: g.degree.as_ref().map(element_json),
            })
            .collect(),
        relations: p
            .relations
            .iter()
            .map(|r| RelationJson {
                rendered: r.to_string(),
                terms: r
                    .terms()
                    .map(|(m, c)| TermJson {
                        coefficient: fmt_rat(c),
                        monomial: m.exponents().map(|(l, e)| (l.clone(), *e)).collect(),
                    })
                    .collect(),
            })
            .collect(),
        ci_dimension: p.ci_dimension(),
    }
}

fn fan_report_json(r: &ValidityReport) -> FanReportJson {
    FanReportJson {
        valid: r.valid,
        complete: r.complete,
        pair_failures: r
            .pair_failures
            .iter()
            .map(|(i, j, msg)| format!("divisors {i} and {j}: {msg}"))
            .collect(),
        incomplete_points: r
            .point_completeness
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(p, _)| p.to_string())
            .chain((!r.tail_fan_complete).then(|| "generic slice".to_string()))
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// dispatch

/// Runs a job and assembles the report; structural invariants are
/// re-checked on the outputs when `check` is set.
pub fn run(job: &JobSpec, check: bool) -> Result<Report> {
    match job {
        JobSpec::Fan(file) => run_fan(file, check),
        JobSpec::Owgraph(file) => run_owgraph(file, check),
        JobSpec::Bundle(file) => run_bundle(file, check),
        JobSpec::Cotangent(file) => run_cotangent(file, check),
    }
}

fn empty_report(kind: &str) -> Report {
    Report {
        kind: kind.into(),
        fan: None,
        slice_points: Vec::new(),
        slice_rays: Vec::new(),
        class_group: None,
        presentation: None,
        contracted: None,
        canonical_class: None,
        moving_cone: None,
        notes: Vec::new(),
        ok: true,
    }
}

fn run_fan(file: &FanFile, check: bool) -> Result<Report> {
    let fan = file.to_fan()?;
    let validity = fan.check_fan();
    let mut report = empty_report("fan");
    report.fan = Some(fan_report_json(&validity));
    if !validity.valid {
        report.ok = false;
        report.notes.push("fan is not valid; no presentation computed".into());
        return Ok(report);
    }
    for (i, d) in fan.divisors().iter().enumerate() {
        if !d.is_proper_p1() {
            return Err(Error::NotProper(i));
        }
    }
    if !validity.complete {
        report.notes.push(
            "fan is not complete; the presentation describes the non-complete model".into(),
        );
    }

    let (data, slices) = from_fan(&fan)?;
    let class = class_group_from_fan(&fan)?;
    let presentation = cox_ring(&data, &class.grading)?;
    let kclass = (!data.arms.is_empty()).then(|| canonical_class(&data, &class.grading, 0)).transpose()?;
    let mc = moving_cone(&class.grading, &data.all_labels())?;

    report.slice_points = slices
        .points
        .iter()
        .map(|ps| SlicePointJson {
            point: ps.point.to_string(),
            vertices: ps
                .vertices
                .iter()
                .map(|(v, mu, ex)| SliceVertexJson {
                    vertex: v.iter().map(fmt_rat).collect(),
                    index: mu.to_u64().unwrap_or(0),
                    extremal: *ex,
                })
                .collect(),
        })
        .collect();
    report.slice_rays = slices
        .rays
        .iter()
        .map(|r| SliceRayJson {
            ray: r.ray.iter().map(|x| x.to_string()).collect(),
            extremal: r.extremal,
        })
        .collect();
    report.class_group = Some(group_json(&class.grading.group));
    report.presentation = Some(presentation_json(&presentation));
    report.canonical_class = kclass.as_ref().map(element_json);
    report.moving_cone = Some(cone_json(&mc));
    if check {
        run_checks(&presentation, Some(&data), Some(&class.grading), &mut report)?;
    }
    Ok(report)
}

fn run_owgraph(file: &OwFile, check: bool) -> Result<Report> {
    let graph = file.to_graph()?;
    let presentation = resolution_cox(&graph)?;
    let data = graph_data(&graph)?;
    let grading = grading_from_presentation(&presentation, &data)?;
    let kclass = canonical_class(&data, &grading, 0)?;
    let mc = moving_cone(&grading, &data.all_labels())?;
    let mut report = empty_report("owgraph");
    report.class_group = Some(group_json(&grading.group));
    report.presentation = Some(presentation_json(&presentation));
    report.canonical_class = Some(element_json(&kclass));
    report.moving_cone = Some(cone_json(&mc));
    if !file.contract.is_empty() {
        let spec = ContractionSpec { exceptional_labels: file.contract.clone() };
        let contracted = contract(&presentation, &spec)?;
        report.contracted = Some(presentation_json(&contracted));
        report
            .notes
            .push("contracted model is ungraded; use the fan route for torsion-aware degrees".into());
    }
    if check {
        run_checks(&presentation, Some(&data), Some(&grading), &mut report)?;
    }
    Ok(report)
}

fn run_bundle(file: &BundleFile, check: bool) -> Result<Report> {
    let data = file.to_data()?;
    let out = projectivization_cox(&data, file.smooth)?;
    bundle_report("bundle", out, check)
}

fn run_cotangent(file: &CotangentFile, check: bool) -> Result<Report> {
    let rays = file.to_rays()?;
    let out = cotangent_cox(&rays)?;
    bundle_report("cotangent", out, check)
}

fn bundle_report(kind: &str, out: crate::klyachko::BundleCox, check: bool) -> Result<Report> {
    let grading = grading_from_presentation(&out.presentation, &out.data)?;
    let mc = moving_cone(&grading, &out.data.all_labels())?;
    let mut report = empty_report(kind);
    report.class_group = Some(group_json(&grading.group));
    report.presentation = Some(presentation_json(&out.presentation));
    report.moving_cone = Some(cone_json(&mc));
    if out.complexity_one {
        let kclass = canonical_class(&out.data, &grading, 0)?;
        report.canonical_class = Some(element_json(&kclass));
    } else {
        report.notes.push(
            "torus action has complexity above one; no canonical class is derived".into(),
        );
    }
    if check {
        let data = out.complexity_one.then_some(&out.data);
        run_checks(&out.presentation, data, Some(&grading), &mut report)?;
    }
    Ok(report)
}

/// Rebuilds a degree lookup from a graded presentation; the base class is
/// the common degree of the fiber monomials.
pub fn grading_from_presentation(
    p: &GradedPresentation,
    data: &ComplexityOneData,
) -> Result<CoxGrading> {
    let group = p
        .grading
        .clone()
        .ok_or_else(|| Error::MissingDegree("presentation is ungraded".into()))?;
    let mut degrees = BTreeMap::new();
    for g in &p.generators {
        let d = g.degree.clone().ok_or_else(|| Error::MissingDegree(g.label.clone()))?;
        degrees.insert(g.label.clone(), d);
    }
    let base_class = match data.arms.first() {
        Some(_) => p.degree_of(&data.slot_monomial(0))?,
        None => group.zero_element(),
    };
    Ok(CoxGrading { group, base_class, degrees, status: p.status })
}

/// The structural invariants behind `--check`: homogeneity, syzygy
/// validity of every relation, the complete-intersection dimension, and
/// arm-independence of the canonical class.
fn run_checks(
    p: &GradedPresentation,
    data: Option<&ComplexityOneData>,
    grading: Option<&CoxGrading>,
    report: &mut Report,
) -> Result<()> {
    let mut failures = Vec::new();
    if p.status != GradingStatus::Ungraded && !p.is_homogeneous()? {
        failures.push("a relation is not homogeneous".to_string());
    }
    if let Some(data) = data {
        let m = data.e_labels.len() as i64;
        let total: i64 = data.arms.iter().map(|a| a.len() as i64).sum();
        let r_plus_1 = data.points.len() as i64;
        // count only the labels that actually appear in the presentation
        let labels = p.labels();
        let counted = data.all_labels().iter().filter(|l| labels.contains(l)).count() as i64;
        if counted == m + total && r_plus_1 >= 2 {
            let expected = m + total - (r_plus_1 - 1) + 1;
            let aug = labels.len() as i64 - counted; // augmented fiber generators
            if p.ci_dimension() != expected + aug {
                failures.push(format!(
                    "complete-intersection dimension {} differs from {}",
                    p.ci_dimension(),
                    expected + aug
                ));
            }
        }
        // every relation, read over the slot monomials, annihilates the
        // marked-point representatives
        let slots = data.slot_monomials();
        if let Some(matrix) = p.coefficient_matrix(&slots) {
            for row in &matrix {
                if !crate::cox_pipeline::relation_annihilates_points(row, &data.points) {
                    failures.push("a relation does not annihilate the representatives".into());
                }
            }
        }
        if let Some(grading) = grading {
            let k0 = canonical_class(data, grading, 0)?;
            for i in 1..data.arms.len() {
                if canonical_class(data, grading, i)? != k0 {
                    failures.push("canonical class depends on the arm choice".into());
                }
            }
        }
    }
    if failures.is_empty() {
        report.notes.push("checks passed".into());
        Ok(())
    } else {
        report.ok = false;
        for f in failures {
            report.notes.push(format!("check failed: {f}"));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// text rendering

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("job kind: {}\n", report.kind));
    if let Some(fan) = &report.fan {
        out.push_str(&format!("fan valid: {}\ncomplete: {}\n", fan.valid, fan.complete));
        for f in &fan.pair_failures {
            out.push_str(&format!("  face failure: {f}\n"));
        }
        for p in &fan.incomplete_points {
            out.push_str(&format!("  incomplete slice at {p}\n"));
        }
    }
    if !report.slice_points.is_empty() {
        out.push_str("slices:\n");
        for sp in &report.slice_points {
            let vs: Vec<String> = sp
                .vertices
                .iter()
                .map(|v| format!("({}) index {}", v.vertex.join(", "), v.index))
                .collect();
            out.push_str(&format!("  {}: {}\n", sp.point, vs.join("; ")));
        }
        for r in &report.slice_rays {
            out.push_str(&format!(
                "  ray ({}){}\n",
                r.ray.join(", "),
                if r.extremal { " extremal" } else { "" }
            ));
        }
    }
    if let Some(g) = &report.class_group {
        out.push_str(&format!("class group: {}\n", render_group(g)));
    }
    if let Some(p) = &report.presentation {
        out.push_str(&render_presentation("presentation", p));
    }
    if let Some(p) = &report.contracted {
        out.push_str(&render_presentation("contracted presentation", p));
    }
    if let Some(k) = &report.canonical_class {
        out.push_str(&format!("canonical class: {}\n", render_element(k)));
    }
    if let Some(c) = &report.moving_cone {
        let rays: Vec<String> = c.rays.iter().map(|r| format!("({})", r.join(", "))).collect();
        out.push_str(&format!("moving cone rays: {}\n", rays.join(", ")));
        if !c.lineality.is_empty() {
            let lin: Vec<String> =
                c.lineality.iter().map(|r| format!("({})", r.join(", "))).collect();
            out.push_str(&format!("moving cone lineality: {}\n", lin.join(", ")));
        }
    }
    for n in &report.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    out
}

fn render_group(g: &GroupJson) -> String {
    let mut parts = Vec::new();
    if g.free_rank == 1 {
        parts.push("Z".to_string());
    } else if g.free_rank > 1 {
        parts.push(format!("Z^{}", g.free_rank));
    }
    for d in &g.torsion_orders {
        parts.push(format!("Z/{d}"));
    }
    if parts.is_empty() {
        parts.push("0".to_string());
    }
    parts.join(" + ")
}

fn render_element(e: &ElementJson) -> String {
    let mut parts = e.free.clone();
    parts.extend(e.torsion.iter().map(|t| format!("{t}~")));
    format!("({})", parts.join(", "))
}

fn render_presentation(title: &str, p: &PresentationJson) -> String {
    let mut out = format!("{title} ({} grading):\n", p.grading_status);
    if let Some(g) = &p.grading_group {
        out.push_str(&format!("  grading group: {}\n", render_group(g)));
    }
    let labels: Vec<String> = p.generators.iter().map(|g| g.label.clone()).collect();
    out.push_str(&format!("  generators: {}\n", labels.join(", ")));
    for g in &p.generators {
        if let Some(d) = &g.degree {
            out.push_str(&format!("    deg {} = {} [{}]\n", g.label, render_element(d), g.tag));
        }
    }
    if p.relations.is_empty() {
        out.push_str("  relations: none (polynomial ring)\n");
    } else {
        out.push_str("  relations:\n");
        for r in &p.relations {
            out.push_str(&format!("    {}\n", r.rendered));
        }
    }
    out.push_str(&format!("  generators - relations: {}\n", p.ci_dimension));
    out
}

/// Plain-text ideal listing for `--ideal-out`.
pub fn ideal_listing(report: &Report) -> String {
    let mut out = String::new();
    if let Some(p) = &report.presentation {
        out.push_str(&ideal_of(p));
    }
    if let Some(p) = &report.contracted {
        out.push_str("\n-- contracted model --\n");
        out.push_str(&ideal_of(p));
    }
    out
}

fn ideal_of(p: &PresentationJson) -> String {
    let labels: Vec<String> = p.generators.iter().map(|g| g.label.clone()).collect();
    let mut out = format!("variables: {}\n", labels.join(", "));
    for g in &p.generators {
        if let Some(d) = &g.degree {
            out.push_str(&format!("deg {} = {}\n", g.label, render_element(d)));
        }
    }
    if p.relations.is_empty() {
        out.push_str("ideal: (0)\n");
    } else {
        out.push_str("ideal:\n");
        for r in &p.relations {
            out.push_str(&format!("  {}\n", r.rendered));
        }
    }
    out
}

/// Render an integer as u64 for report purposes.
pub fn int_to_u64(x: &Int) -> u64 {
    x.to_u64().unwrap_or(0)
}
