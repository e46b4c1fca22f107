//! Command implementations. Each returns a report, plus text destined for
//! stdout when the command emits a file or CSV.

use std::fmt::Write as _;
use std::io::Read;

use hyperfuse::fusion::catalog::{catalog, CatalogParams, FAMILIES};
use hyperfuse::fusion::{fp_dimension, fusion_ring_test, index_formulas, to_hypergroup};
use hyperfuse::grading::{check_universality, derived_chain, maximal_subgroup, universal_grading};
use hyperfuse::harmonic::{
    character_table, dual_hypergroup, simulate_walks, stationary_distribution, transition_matrix,
};
use hyperfuse::quotient::{
    double_cosets, find_subhypergroups_with_bound, lattice, morphism_check, parse_subset,
    quotient_hypergroup, Subhypergroup,
};
use hyperfuse::scalar::parse_scalar;
use hyperfuse::{
    load, save, CatalogObject, DualOutcome, FormatError, FusionError, FusionRing, GradingError,
    HarmonicError, Hypergroup, HypergroupError, HypergroupFile, PrecisionFloor,
    QuotientError, Scalar, ScalarError,
};

use crate::cli::{CatalogAction, Command, OutputArgs};
use crate::probe::parse_probe;
use crate::report::{AnalysisReport, ExitStatus, Value};

#[derive(Clone, Debug, PartialEq)]
pub struct CliError {
    pub status: ExitStatus,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError {
            status: ExitStatus::InvalidInput,
            message: message.into(),
        }
    }

    fn undecidable(message: impl Into<String>) -> Self {
        CliError {
            status: ExitStatus::Undecidable,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        CliError {
            status: ExitStatus::InternalError,
            message: message.into(),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::invalid(e.to_string())
    }
}

impl From<ScalarError> for CliError {
    fn from(e: ScalarError) -> Self {
        match e {
            ScalarError::PrecisionFloor { .. } => CliError::undecidable(e.to_string()),
            e => CliError::invalid(e.to_string()),
        }
    }
}

impl From<FusionError> for CliError {
    fn from(e: FusionError) -> Self {
        match e {
            FusionError::UnsupportedField { .. } => CliError::undecidable(e.to_string()),
            FusionError::Scalar(s) => s.into(),
            FusionError::Internal(_) => CliError::internal(e.to_string()),
            e => CliError::invalid(e.to_string()),
        }
    }
}

impl From<HypergroupError> for CliError {
    fn from(e: HypergroupError) -> Self {
        CliError::invalid(e.to_string())
    }
}

impl From<QuotientError> for CliError {
    fn from(e: QuotientError) -> Self {
        match e {
            QuotientError::Extraction(_) => CliError::internal(e.to_string()),
            e => CliError::invalid(e.to_string()),
        }
    }
}

impl From<GradingError> for CliError {
    fn from(e: GradingError) -> Self {
        match e {
            GradingError::Quotient(q) => q.into(),
            e => CliError::internal(e.to_string()),
        }
    }
}

impl From<HarmonicError> for CliError {
    fn from(e: HarmonicError) -> Self {
        match e {
            HarmonicError::Unsupported(_) => CliError::undecidable(e.to_string()),
            HarmonicError::Internal(_) => CliError::internal(e.to_string()),
            HarmonicError::Hypergroup(h) => h.into(),
            e => CliError::invalid(e.to_string()),
        }
    }
}

/// A finished command: the report and optional text for stdout, in which
/// case the report goes to stderr.
#[derive(Debug)]
pub struct Outcome {
    pub report: AnalysisReport,
    pub stdout: Option<String>,
}

impl From<AnalysisReport> for Outcome {
    fn from(report: AnalysisReport) -> Self {
        Outcome { report, stdout: None }
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| CliError::invalid(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::invalid(format!("reading {path}: {e}")))
    }
}

fn load_file(path: &str, stdin: &mut dyn Read) -> Result<HypergroupFile, CliError> {
    let text = read_input(path, stdin)?;
    load(&text).map_err(|e| match e {
        FormatError::Syntax { .. } => CliError::invalid(format!("{path}:{e}")),
        e => CliError::invalid(format!("{path}: {e}")),
    })
}

fn subject(file: &HypergroupFile, path: &str) -> String {
    if file.name.is_empty() {
        path.to_string()
    } else {
        file.name.clone()
    }
}

fn members(k: &Hypergroup, m: &[usize]) -> Value {
    Value::labels(m.iter().map(|&i| k.label(i)))
}

fn subset(k: &Hypergroup, text: &str) -> Result<Subhypergroup, CliError> {
    let idx = parse_subset(k, text).map_err(CliError::invalid)?;
    Ok(Subhypergroup::new(k, &idx)?)
}

/// Writes the canonical file to `-o`, or returns it for stdout with `--emit`.
fn emit(out: &OutputArgs, name: &str, object: &CatalogObject, report: &mut AnalysisReport) -> Result<Option<String>, CliError> {
    let text = save(name, object);
    if let Some(path) = &out.output {
        std::fs::write(path, &text).map_err(|e| CliError::invalid(format!("writing {path}: {e}")))?;
        report.kv("output", vec![("written", Value::text(path.as_str()))]);
    }
    Ok(out.emit.then_some(text))
}

fn hypergroup_sections(report: &mut AnalysisReport, k: &Hypergroup) {
    let field = if k.radicand() > 1 {
        format!("Q(sqrt({}))", k.radicand())
    } else {
        "Q".to_string()
    };
    report.kv(
        "summary",
        vec![
            ("elements", k.size().into()),
            ("field", field.into()),
            ("D(K)", Value::quad(&k.total_weight())),
            ("commutative", k.is_commutative().into()),
            ("group", k.is_group().into()),
        ],
    );
    let rows = (0..k.size())
        .map(|i| vec![k.label(i).into(), k.label(k.dual(i)).into(), Value::quad(k.weight(i))])
        .collect();
    report.table("weights", &["element", "dual", "w"], rows);
    report.kv("haar element", vec![("e_K", k.format_element(&k.haar_element()).into())]);
}

fn products_table(report: &mut AnalysisReport, title: &str, k: &Hypergroup) {
    let mut rows = Vec::new();
    for i in 1..k.size() {
        for j in 1..k.size() {
            let p = k.multiply(&k.basis(i), &k.basis(j)).expect("same hypergroup");
            rows.push(vec![format!("{}*{}", k.label(i), k.label(j)).into(), k.format_element(&p).into()]);
        }
    }
    report.table(title, &["product", "expansion"], rows);
}

fn dimension_sections(report: &mut AnalysisReport, f: &FusionRing) -> Result<(), CliError> {
    let dv = fp_dimension(f)?;
    let rows = (0..f.size())
        .map(|i| vec![f.label(i).into(), f.label(f.dual(i)).into(), Value::scalar(&dv.dims[i])])
        .collect();
    report.table("fusion ring", &["element", "dual", "d"], rows);
    report.kv(
        "dimensions",
        vec![
            ("D(F)", Value::scalar(&dv.global)),
            ("exact", dv.is_exact().into()),
            ("commutative", f.is_commutative().into()),
        ],
    );
    Ok(())
}

pub fn run(command: &Command, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    match command {
        Command::Verify { input } => {
            let file = load_file(input, stdin)?;
            let mut r = AnalysisReport::new("verify", subject(&file, input));
            match &file.object {
                CatalogObject::Ring(f) => {
                    r.verdict("validation", true, format!("valid fusion ring with {} elements", f.size()));
                }
                CatalogObject::Hypergroup(k) => {
                    r.verdict("validation", true, format!("valid hypergroup with {} elements", k.size()));
                    let fc = k.frobenius_check();
                    match fc.violation {
                        None => r.verdict("frobenius identities", true, "hold"),
                        Some(v) => {
                            return Err(CliError::internal(format!(
                                "Frobenius identity fails at ({}, {}, {})",
                                v.i, v.j, v.k
                            )))
                        }
                    };
                }
            }
            Ok(r.into())
        }
        Command::Info { input } => {
            let file = load_file(input, stdin)?;
            let mut r = AnalysisReport::new("info", subject(&file, input));
            if let CatalogObject::Ring(f) = &file.object {
                dimension_sections(&mut r, f)?;
            }
            hypergroup_sections(&mut r, &file.object.hypergroup()?);
            Ok(r.into())
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let mut r = AnalysisReport::new("catalog", "families");
                let params = |f: &str| match f {
                    "group" | "tambara_yamagami" | "haagerup_izumi" => "--group",
                    "near_group" => "--group --m",
                    "su2_level" => "--k",
                    "two_element" => "--d",
                    _ => "",
                };
                let rows = FAMILIES.iter().map(|f| vec![(*f).into(), params(f).into()]).collect();
                r.table("families", &["family", "parameters"], rows);
                Ok(r.into())
            }
            CatalogAction::Build {
                family,
                group,
                m,
                k,
                d,
                as_hypergroup,
                output,
            } => {
                let params = CatalogParams {
                    group: group.clone(),
                    m: *m,
                    k: *k,
                    d: d.clone(),
                };
                let mut obj = catalog(family, &params)?;
                if *as_hypergroup {
                    obj = CatalogObject::Hypergroup(obj.hypergroup()?);
                }
                let mut name = family.clone();
                for (flag, v) in [("group", group.clone()), ("m", m.map(|x| x.to_string())), ("k", k.map(|x| x.to_string())), ("d", d.clone())] {
                    if let Some(v) = v {
                        write!(name, " {flag}={v}").unwrap();
                    }
                }
                let mut r = AnalysisReport::new("catalog", name.clone());
                let out = OutputArgs {
                    output: output.clone(),
                    emit: output.is_none(),
                };
                let text = emit(&out, &name, &obj, &mut r)?;
                Ok(Outcome { report: r, stdout: text })
            }
        },
        Command::Subs { input, bound } => {
            let file = load_file(input, stdin)?;
            let k = file.object.hypergroup()?;
            let mut r = AnalysisReport::new("subs", subject(&file, input));
            find_subhypergroups_with_bound(&k, *bound)?;
            let lat = lattice(&k)?;
            let rows = lat
                .members
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    vec![
                        i.into(),
                        members(&k, l.members()),
                        Value::quad(&l.total_weight()),
                        Value::quad(&lat.quotient_weights[i]),
                    ]
                })
                .collect();
            r.table("subhypergroups", &["index", "members", "D(L)", "D(K//L)"], rows);
            let rows = lat.covers.iter().map(|&(a, b)| vec![a.into(), b.into()]).collect();
            r.table("covers", &["below", "above"], rows);
            Ok(r.into())
        }
        Command::Quotient { input, by, out } => {
            let file = load_file(input, stdin)?;
            let k = file.object.hypergroup()?;
            let l = subset(&k, by)?;
            let q = quotient_hypergroup(&k, &l)?;
            let kq = &q.hypergroup;
            let mut r = AnalysisReport::new("quotient", format!("{} // {{{}}}", subject(&file, input), l.labels().join(",")));
            r.kv(
                "weights",
                vec![
                    ("D(K)", Value::quad(&k.total_weight())),
                    ("D(L)", Value::quad(&l.total_weight())),
                    ("D(K//L)", Value::quad(&kq.total_weight())),
                ],
            );
            let rows = (0..kq.size())
                .map(|c| vec![kq.label(c).into(), members(&k, &q.cosets.classes[c]), Value::quad(kq.weight(c))])
                .collect();
            r.table("classes", &["class", "members", "w"], rows);
            products_table(&mut r, "structure constants", kq);
            let factor = k.total_weight() == &l.total_weight() * &kq.total_weight();
            r.verdict("factorization", factor, "D(K) = D(L)·D(K//L)");
            let m = morphism_check(&k, kq, &q.map())?;
            let text = match (m.valid(), m.product_failure) {
                (true, _) => format!("quotient map is a morphism with kernel {{{}}}", m.kernel.iter().map(|&i| k.label(i)).collect::<Vec<_>>().join(",")),
                (false, Some((i, j))) => format!("quotient map is not multiplicative at {}*{}", k.label(i), k.label(j)),
                (false, None) => "quotient map is not a ∗-morphism".to_string(),
            };
            r.verdict("morphism", m.valid(), text);
            let name = format!("{}//{{{}}}", subject(&file, input), l.labels().join(","));
            let stdout = emit(out, &name, &CatalogObject::Hypergroup(kq.clone()), &mut r)?;
            Ok(Outcome { report: r, stdout })
        }
        Command::Cosets { input, left, right } => {
            let file = load_file(input, stdin)?;
            let k = file.object.hypergroup()?;
            let (l, m) = (subset(&k, left)?, subset(&k, right)?);
            let dc = double_cosets(&k, &l, &m)?;
            let mut r = AnalysisReport::new("cosets", subject(&file, input));
            let rows = (0..dc.classes.len())
                .map(|c| {
                    vec![
                        k.label(dc.representatives[c]).into(),
                        members(&k, &dc.classes[c]),
                        k.format_element(&dc.coset_elements[c]).into(),
                    ]
                })
                .collect();
            r.table("double cosets", &["representative", "members", "e_L c e_M"], rows);
            Ok(r.into())
        }
        Command::Grading { input } => {
            let file = load_file(input, stdin)?;
            let k = file.object.hypergroup()?;
            let g = universal_grading(&k)?;
            let mut r = AnalysisReport::new("grading", subject(&file, input));
            r.kv(
                "universal grading",
                vec![
                    ("K_ad", members(&k, g.adjoint.members())),
                    ("|G_K|", g.universal_group.size().into()),
                    ("G_K abelian", g.universal_group.is_commutative().into()),
                ],
            );
            let rows = g
                .components()
                .iter()
                .enumerate()
                .map(|(i, c)| vec![g.universal_group.label(i).into(), members(&k, c)])
                .collect();
            r.table("components", &["degree", "members"], rows);
            let n = check_universality(&k)?;
            r.verdict("universality", true, format!("refines all {n} group gradings K//L with K_ad ⊆ L"));
            Ok(r.into())
        }
        Command::Chain { input } => {
            let file = load_file(input, stdin)?;
            let k = file.object.hypergroup()?;
            let c = derived_chain(&k)?;
            let mut r = AnalysisReport::new("chain", subject(&file, input));
            let rows = c
                .chain
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    let g = if i == 0 { Value::text("-") } else { c.groups[i - 1].size().into() };
                    vec![i.into(), members(&k, m), g]
                })
                .collect();
            r.table("derived chain", &["step", "members", "|G_i|"], rows);
            r.kv(
                "terminal",
                vec![("D(K_N)", Value::quad(&c.terminal_weight)), ("D(K)", Value::quad(&k.total_weight()))],
            );
            r.verdict("weight identity", true, "D(K) = |G_1|···|G_N|·D(K_N)");
            let text = if c.nilpotent { "nilpotent: chain ends at {c0}" } else { "not nilpotent" };
            r.verdict("nilpotency", c.nilpotent, text);
            Ok(r.into())
        }
        Command::Unitring { input } => {
            let file = load_file(input, stdin)?;
            let k = file.object.hypergroup()?;
            let m = maximal_subgroup(&k)?;
            let mut r = AnalysisReport::new("unitring", subject(&file, input));
            r.kv(
                "maximal subgroup",
                vec![
                    ("K^x", members(&k, m.subgroup.members())),
                    ("|K^x|", m.subgroup.size().into()),
                    ("D(K//K^x)", Value::quad(&m.quotient.total_weight())),
                ],
            );
            let rows = (0..m.quotient.size())
                .map(|c| vec![m.quotient.label(c).into(), Value::quad(m.quotient.weight(c))])
                .collect();
            r.table("quotient weights", &["class", "w"], rows);
            Ok(r.into())
        }
        Command::Chars { input } => {
            let file = load_file(input, stdin)?;
            let k = file.object.hypergroup()?;
            let t = character_table(&k)?;
            let mut r = AnalysisReport::new("chars", subject(&file, input));
            let mut columns = vec!["character"];
            columns.extend(k.labels().iter().map(String::as_str));
            let rows = (0..t.len())
                .map(|m| {
                    let mut row = vec![Value::text(format!("chi{m}"))];
                    row.extend(t.table()[m].iter().map(Value::quad));
                    row
                })
                .collect();
            r.table("character table", &columns, rows);
            r.verdict("orthogonality", true, "multiplicative and weighted-orthogonal, checked exactly");
            Ok(r.into())
        }
        Command::Dual { input, out } => {
            let file = load_file(input, stdin)?;
            let k = file.object.hypergroup()?;
            let t = character_table(&k)?;
            let mut r = AnalysisReport::new("dual", subject(&file, input));
            match dual_hypergroup(&t) {
                DualOutcome::Hypergroup(d) => {
                    r.verdict("dual", true, "character products expand with nonnegative coefficients");
                    hypergroup_sections(&mut r, &d);
                    products_table(&mut r, "structure constants", &d);
                    let iso = d.is_isomorphic(&k);
                    r.verdict("self-duality", iso, if iso { "dual is isomorphic to K" } else { "dual is not isomorphic to K" });
                    let stdout = emit(out, &format!("dual of {}", subject(&file, input)), &CatalogObject::Hypergroup(d), &mut r)?;
                    return Ok(Outcome { report: r, stdout });
                }
                DualOutcome::NegativeConstant { a, b, m, value } => {
                    r.verdict(
                        "dual",
                        false,
                        format!("not a hypergroup: chi{a}*chi{b} has coefficient {value} on chi{m}"),
                    );
                }
                DualOutcome::Invalid(v) => {
                    let text = v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ");
                    r.verdict("dual", false, format!("not a hypergroup: {text}"));
                }
            }
            Ok(r.into())
        }
        Command::Walk {
            input,
            probe,
            steps,
            seed,
            start,
            runs,
            csv,
        } => {
            let file = load_file(input, stdin)?;
            let k = file.object.hypergroup()?;
            let x = parse_probe(&k, probe).map_err(CliError::invalid)?;
            let chain = transition_matrix(&k, &x)?;
            let s = match start {
                Some(l) => k.index_of(l).ok_or_else(|| CliError::invalid(format!("unknown start `{l}`")))?,
                None => 0,
            };
            if *runs == 0 {
                return Err(CliError::invalid("--runs must be at least 1"));
            }
            let seeds: Vec<u64> = (0..*runs as u64).map(|i| seed.wrapping_add(i)).collect();
            let walks = simulate_walks(&chain, s, *steps, &seeds)?;
            let mut r = AnalysisReport::new("walk", subject(&file, input));
            r.kv(
                "walk",
                vec![
                    ("probe", k.format_element(&x).into()),
                    ("start", k.label(s).into()),
                    ("steps", (*steps).into()),
                    ("runs", (*runs).into()),
                ],
            );
            let rows = (0..k.size())
                .map(|m| {
                    let mut row: Vec<Value> = vec![k.label(m).into()];
                    row.extend(chain.transition[m].iter().map(Value::quad));
                    row
                })
                .collect();
            let mut columns = vec!["from"];
            columns.extend(k.labels().iter().map(String::as_str));
            r.table("transition matrix", &columns, rows);
            match stationary_distribution(&chain) {
                Ok(pi) => {
                    r.verdict("stationary distribution", true, "unique and equal to the Haar weights w_k/D(K)");
                    let rows = (0..k.size())
                        .map(|m| {
                            let mut row: Vec<Value> = vec![k.label(m).into(), Value::quad(&pi[m])];
                            row.extend(walks.iter().map(|w| Value::text(format!("{:.6}", w.empirical[m]))));
                            row
                        })
                        .collect();
                    let headers: Vec<String> = walks.iter().map(|w| format!("seed {}", w.seed)).collect();
                    let mut columns = vec!["state", "haar"];
                    columns.extend(headers.iter().map(String::as_str));
                    r.table("occupation", &columns, rows);
                }
                Err(HarmonicError::Reducible { classes }) => {
                    let text = classes
                        .iter()
                        .map(|c| format!("{{{}}}", c.iter().map(|&i| k.label(i)).collect::<Vec<_>>().join(",")))
                        .collect::<Vec<_>>()
                        .join(" ");
                    r.verdict("stationary distribution", false, format!("reducible; closed classes {text}"));
                }
                Err(e) => return Err(e.into()),
            }
            let rows = walks
                .iter()
                .map(|w| vec![Value::Int(w.seed as i64), Value::text(format!("{:.6}", w.tv_distance))])
                .collect();
            r.table("total variation to haar", &["seed", "tv"], rows);
            let mut stdout = None;
            if let Some(path) = csv {
                let mut text = String::new();
                if walks.len() == 1 {
                    text.push_str("step,state\n");
                    for (i, st) in walks[0].trajectory.iter().enumerate() {
                        writeln!(text, "{i},{}", k.label(*st)).unwrap();
                    }
                } else {
                    text.push_str("seed,step,state\n");
                    for w in &walks {
                        for (i, st) in w.trajectory.iter().enumerate() {
                            writeln!(text, "{},{i},{}", w.seed, k.label(*st)).unwrap();
                        }
                    }
                }
                if path == "-" {
                    stdout = Some(text);
                } else {
                    std::fs::write(path, text).map_err(|e| CliError::invalid(format!("writing {path}: {e}")))?;
                    r.kv("output", vec![("csv", Value::text(path.as_str()))]);
                }
            }
            Ok(Outcome { report: r, stdout })
        }
        Command::Convert { input, out } => {
            let file = load_file(input, stdin)?;
            let CatalogObject::Ring(f) = &file.object else {
                return Err(CliError::invalid("convert expects a [fusion] file"));
            };
            let k = to_hypergroup(f)?;
            let mut r = AnalysisReport::new("convert", subject(&file, input));
            dimension_sections(&mut r, f)?;
            hypergroup_sections(&mut r, &k);
            products_table(&mut r, "structure constants", &k);
            let stdout = emit(out, &format!("K_F of {}", subject(&file, input)), &CatalogObject::Hypergroup(k), &mut r)?;
            Ok(Outcome { report: r, stdout })
        }
        Command::Ringtest { input, out } => {
            let file = load_file(input, stdin)?;
            let k = file.object.hypergroup()?;
            let t = fusion_ring_test(&k);
            let mut r = AnalysisReport::new("ringtest", subject(&file, input));
            match (&t.rescaled, &t.witness) {
                (Some(f), _) => {
                    r.verdict("integrality", true, "passes: rescaled constants are nonnegative integers");
                    let rows = (1..f.size())
                        .flat_map(|i| (1..f.size()).map(move |j| (i, j)))
                        .map(|(i, j)| vec![format!("{}*{}", f.label(i), f.label(j)).into(), f.format_product(i, j).into()])
                        .collect();
                    r.table("fusion rules", &["product", "expansion"], rows);
                    let stdout = emit(out, &format!("fusion ring of {}", subject(&file, input)), &CatalogObject::Ring(f.clone()), &mut r)?;
                    return Ok(Outcome { report: r, stdout });
                }
                (None, Some(w)) => {
                    r.verdict("integrality", false, format!("fails: coefficient {} not integral", w.value()));
                    r.kv(
                        "witness",
                        vec![
                            ("product", format!("{}*{}", k.label(w.i), k.label(w.j)).into()),
                            ("coefficient of", k.label(w.k).into()),
                            ("rescaled", w.value().into()),
                            ("rescaled squared", Value::quad(&w.square)),
                        ],
                    );
                }
                (None, None) => return Err(CliError::internal("ring test produced neither ring nor witness")),
            }
            Ok(r.into())
        }
        Command::Index { input, by, dk, dh, mu } => {
            let floor = PrecisionFloor::from_env()?;
            let lit = |t: &str| -> Result<Scalar, CliError> { Ok(Scalar::Exact(parse_scalar(t, None)?)) };
            let mu = lit(mu)?;
            let (subject_name, dk, dh) = match (input, by, dk, dh) {
                (Some(path), Some(by), None, None) => {
                    let file = load_file(path, stdin)?;
                    let k = file.object.hypergroup()?;
                    let l = subset(&k, by)?;
                    let name = format!("{} ⊇ {{{}}}", subject(&file, path), l.labels().join(","));
                    (name, Scalar::Exact(k.total_weight()), Scalar::Exact(l.total_weight()))
                }
                (None, None, Some(a), Some(b)) => ("values".to_string(), lit(a)?, lit(b)?),
                _ => return Err(CliError::invalid("index needs either FILE --by SUBSET or --dk and --dh")),
            };
            let f = index_formulas(&dk, &dh, &mu, &floor)?;
            let mut r = AnalysisReport::new("index", subject_name);
            r.kv(
                "inputs",
                vec![("D(K)", Value::scalar(&dk)), ("D(H)", Value::scalar(&dh)), ("mu(B)", Value::scalar(&mu))],
            );
            r.kv(
                "indices",
                vec![
                    ("[B : B^(K//H)] = D(K)/D(H)", Value::scalar(&f.subnet_index)),
                    ("mu(B^K) = mu(B)·D(K)^2", Value::scalar(&f.mu_index)),
                ],
            );
            Ok(r.into())
        }
    }
}

/// The report for a failed command.
pub fn error_report(command: &str, err: &CliError) -> AnalysisReport {
    let mut r = AnalysisReport::new(command, "error");
    r.verdict("error", false, err.message.clone());
    r.exit_status = err.status;
    r
}
