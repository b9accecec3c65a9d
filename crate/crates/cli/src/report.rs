use std::sync::Arc;

use qstrat::exactlin::Field;
use qstrat::presentation::{Algebra, Presentation, PresentationJson};
use qstrat::repcat::{is_isomorphic_seeded, Module, ModuleJson};
use qstrat::strat::{
    classify, classify_family, strat_family, CertificateJson as ChainJson, ClassificationJson, FiltrationCertificate,
    StratFamily,
};
use qstrat::tilt::{ringel_dual, tilting_data};
use qstrat::twostep::{two_step, FindimReport, GImageRow, TwoStep};
use qstrat::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Ringel,
    TwoStep,
    Findim,
    Report,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Ringel => "ringel",
            Command::TwoStep => "twostep",
            Command::Findim => "findim",
            Command::Report => "report",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub field: Option<Field>,
    pub cap: usize,
    pub seed: u64,
    pub certificates: bool,
    /// Attach action matrices to every tabulated module.
    pub dump: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: PresentationJson,
    pub algebra: AlgebraSummary,
    pub classification: ClassificationJson,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<VertexTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ringel: Option<DualSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two_step: Option<TwoStepSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub findim: Option<FindimReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificates: Option<Vec<CertificateJson>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub dim: usize,
    pub vertices: Vec<String>,
    pub order: Vec<String>,
    pub cartan: Vec<Vec<usize>>,
}

/// The modules attached to one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexTable {
    pub vertex: String,
    pub modules: Vec<ModuleSummary>,
}

/// Dimension vector and radical layers, top first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSummary {
    pub name: String,
    pub dim: usize,
    pub dims: Vec<usize>,
    pub layers: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualSummary {
    pub dim: usize,
    pub order: Vec<String>,
    pub presentation: PresentationJson,
    pub classification: ClassificationJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoStepSummary {
    pub ringel_dual_properly_stratified: bool,
    /// `T(λ) ≅ C(λ)` for all `λ`; absent when `C` is undefined.
    pub tilting_is_cotilting: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two_step_dual: Option<DualSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two_step_dual_opposite: Option<ClassificationJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g_images: Option<Vec<GImageRow>>,
}

/// A filtration of `module` with subquotients in `family`, bottom first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub module: String,
    pub family: String,
    pub filtration: ChainJson,
}

/// `q` or `gf:p`.
pub fn parse_field(s: &str) -> Result<Field> {
    let s = s.trim().to_ascii_lowercase();
    if s == "q" {
        return Ok(Field::Rationals);
    }
    let p = s
        .strip_prefix("gf:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| Error::Input(format!("field must be q or gf:p, got {s:?}")))?;
    Field::prime(p)
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Undecided(_) | Error::InsufficientCap { .. } => 3,
        Error::TheoremViolation(_) | Error::Internal(_) => 4,
        _ => 2,
    }
}

fn summary(name: &str, m: &Module, dump: bool) -> ModuleSummary {
    ModuleSummary {
        name: name.to_string(),
        dim: m.dim(),
        dims: m.dims().to_vec(),
        layers: m.profile(),
        module: dump.then(|| m.to_json()),
    }
}

fn names(a: &Algebra, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| a.vertices()[v].clone()).collect()
}

fn dual_summary(a: &Arc<Algebra>, p: &Presentation) -> Result<DualSummary> {
    Ok(DualSummary {
        dim: a.dim(),
        order: names(a, a.order()),
        presentation: p.to_json(),
        classification: classify(a)?.summary(),
    })
}

fn certificate(a: &Algebra, module: String, family: &str, c: &FiltrationCertificate) -> CertificateJson {
    CertificateJson { module, family: family.to_string(), filtration: c.to_json(a.vertices()) }
}

fn family_rows(fam: &StratFamily, l: usize, dump: bool) -> Vec<ModuleSummary> {
    vec![
        summary("P", &fam.objects.projectives[l], dump),
        summary("I", &fam.objects.injectives[l], dump),
        summary("Δ", &fam.standard[l], dump),
        summary("Δ̄", &fam.proper_standard[l], dump),
        summary("∇", &fam.costandard[l], dump),
        summary("∇̄", &fam.proper_costandard[l], dump),
    ]
}

fn two_step_rows(ts: &TwoStep, l: usize, dump: bool) -> Vec<ModuleSummary> {
    let mut rows = vec![summary("T", &ts.tilting.tilting[l].module, dump)];
    if let Some(cs) = &ts.tilting.cotilting {
        rows.push(summary("C", &cs[l], dump));
    }
    rows.push(summary("S", &ts.sn.s[l], dump));
    rows.push(summary("N", &ts.sn.n[l], dump));
    if let Some(d) = &ts.dual {
        rows.push(summary("H", &d.h[l], dump));
    }
    rows
}

fn two_step_certificates(ts: &TwoStep) -> Vec<CertificateJson> {
    let a = ts.algebra();
    let mut out = Vec::new();
    for (l, t) in ts.tilting.tilting.iter().enumerate() {
        let v = &a.vertices()[l];
        out.push(certificate(a, format!("T({v})"), "Δ", &t.standard_certificate));
        out.push(certificate(a, format!("T({v})"), "∇̄", &t.proper_costandard_certificate));
        out.push(certificate(a, format!("T({v})/Δ({v})"), "Δ", &t.cokernel_certificate));
        if let Some(c) = ts.ps_test.tilting_filtrations[l].found() {
            out.push(certificate(a, format!("T({v})"), "N", c));
        }
        if let Some(c) = ts.ps_test.s_filtrations[l].found() {
            out.push(certificate(a, format!("S({v})"), "N", c));
        }
    }
    if let Some(d) = &ts.dual {
        for l in 0..d.h.len() {
            let v = &a.vertices()[l];
            out.push(certificate(a, format!("H({v})"), "∇̄", &d.h_proper_costandard[l]));
            out.push(certificate(a, format!("H({v})"), "N", &d.h_n[l]));
        }
    }
    out
}

fn tilting_is_cotilting(ts: &TwoStep, seed: u64) -> Result<Option<bool>> {
    let Some(cs) = &ts.tilting.cotilting else { return Ok(None) };
    for (t, c) in ts.tilting.tilting.iter().zip(cs) {
        if !is_isomorphic_seeded(&t.module, c, seed)? {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

impl Report {
    /// Computed identities that came out false. Nonempty means an engine bug.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(f) = &self.findim {
            out.extend(f.identities.iter().filter(|c| !c.holds).map(|c| format!("{}: {} != {}", c.name, c.lhs, c.rhs)));
        }
        if let Some(rows) = self.two_step.as_ref().and_then(|s| s.g_images.as_ref()) {
            out.extend(rows.iter().filter(|r| r.holds.iter().any(|&h| !h)).map(|r| r.row.clone()));
        }
        out
    }
}

/// Runs `cmd` on the presentation in `text`.
pub fn build(cmd: Command, text: &str, opts: &Options) -> Result<Report> {
    let pres = match opts.field {
        Some(f) => Presentation::from_json_str_over(text, f)?,
        None => Presentation::from_json_str(text)?,
    };
    let a = Arc::new(Algebra::from_presentation(&pres)?);
    let fam = strat_family(&a)?;
    let class = classify_family(&fam)?;
    let mut report = Report {
        command: cmd.name().to_string(),
        input: pres.to_json(),
        algebra: AlgebraSummary {
            dim: a.dim(),
            vertices: a.vertices().to_vec(),
            order: names(&a, a.order()),
            cartan: a.cartan_matrix(),
        },
        classification: class.summary(),
        tables: Vec::new(),
        ringel: None,
        two_step: None,
        findim: None,
        certificates: None,
        notes: Vec::new(),
    };
    let nv = a.num_vertices();
    let vertex = |l: usize| a.vertices()[l].clone();
    if matches!(cmd, Command::Analyze | Command::Report) {
        report.tables = (0..nv).map(|l| VertexTable { vertex: vertex(l), modules: family_rows(&fam, l, opts.dump) }).collect();
    }
    if cmd == Command::Analyze {
        return Ok(report);
    }
    if !class.is_sss {
        if cmd == Command::Report {
            report.notes.push("not standardly stratified: tilting theory skipped".into());
            return Ok(report);
        }
        return Err(Error::Precondition("the algebra is not standardly stratified".into()));
    }
    if cmd == Command::Ringel {
        let td = tilting_data(&fam)?;
        let rd = ringel_dual(&fam, &td)?;
        report.ringel = Some(dual_summary(rd.algebra(), rd.presentation())?);
        return Ok(report);
    }
    let ts = two_step(&a, &pres)?;
    report.ringel = Some(dual_summary(ts.ringel.algebra(), ts.ringel.presentation())?);
    let rows: Vec<Vec<ModuleSummary>> = (0..nv).map(|l| two_step_rows(&ts, l, opts.dump)).collect();
    if cmd == Command::Report {
        for (t, r) in report.tables.iter_mut().zip(rows) {
            t.modules.extend(r);
        }
    } else if cmd == Command::TwoStep {
        report.tables = rows.into_iter().enumerate().map(|(l, modules)| VertexTable { vertex: vertex(l), modules }).collect();
    }
    let mut summary = TwoStepSummary {
        ringel_dual_properly_stratified: ts.ps_test.verdict,
        tilting_is_cotilting: tilting_is_cotilting(&ts, opts.seed)?,
        two_step_dual: None,
        two_step_dual_opposite: None,
        g_images: None,
    };
    if let Some(d) = &ts.dual {
        summary.two_step_dual = Some(dual_summary(&d.b.algebra, &d.b.presentation)?);
        summary.two_step_dual_opposite = Some(d.b_opp_classification.clone());
        if cmd == Command::Report {
            match ts.g_images() {
                Ok(rows) => summary.g_images = Some(rows),
                Err(Error::Precondition(why)) => report.notes.push(format!("G-image table skipped: {why}")),
                Err(e) => return Err(e),
            }
        }
    } else {
        report.notes.push("Ringel dual not properly stratified: H and B undefined".into());
    }
    report.two_step = Some(summary);
    if matches!(cmd, Command::Findim | Command::Report) {
        match ts.findim(opts.cap) {
            Ok(f) => report.findim = Some(f),
            Err(Error::Precondition(why)) if cmd == Command::Report => report.notes.push(format!("fin.dim skipped: {why}")),
            Err(e) => return Err(e),
        }
    }
    if opts.certificates {
        report.certificates = Some(two_step_certificates(&ts));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields() {
        assert_eq!(parse_field("q").unwrap(), Field::Rationals);
        assert_eq!(parse_field("GF:7").unwrap(), Field::prime(7).unwrap());
        assert!(parse_field("gf:9").is_err());
        assert!(parse_field("gf").is_err());
        assert!(parse_field("r").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Input("x".into())), 2);
        assert_eq!(exit_code(&Error::Precondition("x".into())), 2);
        assert_eq!(exit_code(&Error::Undecided("x".into())), 3);
        assert_eq!(exit_code(&Error::TheoremViolation("x".into())), 4);
        assert_eq!(exit_code(&Error::Internal("x".into())), 4);
    }

    #[test]
    fn analyze_stops_early() {
        let text = r#"{"field":{"kind":"Q"},"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}],"relations":[],"order":["1","2"]}"#;
        let opts = Options { field: None, cap: 8, seed: 0, certificates: true, dump: false };
        let r = build(Command::Analyze, text, &opts).unwrap();
        assert_eq!(r.algebra.dim, 3);
        assert!(r.classification.quasi_hereditary);
        assert!(r.ringel.is_none() && r.certificates.is_none());
        assert_eq!(r.tables.len(), 2);
    }
}
