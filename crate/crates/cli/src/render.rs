use std::fmt::Write;

use qstrat::strat::ClassificationJson;

use crate::report::{DualSummary, Report};

fn class_line(c: &ClassificationJson) -> String {
    let kind = if c.quasi_hereditary {
        "quasi-hereditary"
    } else if c.properly_stratified {
        "properly stratified"
    } else if c.sss {
        "standardly stratified, not properly stratified"
    } else {
        "not standardly stratified"
    };
    kind.to_string()
}

fn layers(ls: &[Vec<String>]) -> String {
    if ls.is_empty() {
        return "0".into();
    }
    ls.iter().map(|l| format!("[{}]", l.join(","))).collect::<Vec<_>>().join(" ")
}

fn relations(d: &DualSummary) -> String {
    let rels: Vec<String> = d
        .presentation
        .relations
        .iter()
        .map(|r| {
            let mut eq = String::new();
            for (i, t) in r.iter().enumerate() {
                let path = t.path.join("·");
                let (neg, c) = match t.coeff.strip_prefix('-') {
                    Some(c) => (true, c),
                    None => (false, t.coeff.as_str()),
                };
                let sign = match (i, neg) {
                    (0, true) => "-",
                    (0, false) => "",
                    (_, true) => " - ",
                    (_, false) => " + ",
                };
                let c = if c == "1" { "" } else { c };
                let _ = write!(eq, "{sign}{c}{path}");
            }
            format!("{eq} = 0")
        })
        .collect();
    let arrows: Vec<String> =
        d.presentation.arrows.iter().map(|a| format!("{}: {}→{}", a.name, a.from, a.to)).collect();
    format!("arrows {}; relations {}", arrows.join(", "), if rels.is_empty() { "none".into() } else { rels.join(", ") })
}

pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let a = &r.algebra;
    let _ = writeln!(out, "algebra: dim {}, vertices {}, order {}", a.dim, a.vertices.join(","), a.order.join(" < "));
    let _ = writeln!(out, "classification: {}", class_line(&r.classification));
    for t in &r.tables {
        let _ = writeln!(out, "vertex {}:", t.vertex);
        for m in &t.modules {
            let _ = writeln!(out, "  {:<3} dim {:>3}  {}", m.name, m.dim, layers(&m.layers));
        }
    }
    if let Some(d) = &r.ringel {
        let _ = writeln!(out, "Ringel dual: dim {}, order {}, {}", d.dim, d.order.join(" < "), class_line(&d.classification));
        let _ = writeln!(out, "  {}", relations(d));
    }
    if let Some(s) = &r.two_step {
        let _ = writeln!(out, "Ringel dual properly stratified (via F(N)): {}", s.ringel_dual_properly_stratified);
        if let Some(tc) = s.tilting_is_cotilting {
            let _ = writeln!(out, "tilting = cotilting: {tc}");
        }
        if let Some(b) = &s.two_step_dual {
            let _ = writeln!(out, "two-step dual B: dim {}, {}", b.dim, class_line(&b.classification));
            let _ = writeln!(out, "  {}", relations(b));
        }
        if let Some(c) = &s.two_step_dual_opposite {
            let _ = writeln!(out, "B^opp: {}", class_line(c));
        }
        for g in s.g_images.iter().flatten() {
            let ok = g.holds.iter().all(|&x| x);
            let _ = writeln!(out, "  {}: {}", g.row, if ok { "holds" } else { "FAILS" });
        }
    }
    if let Some(f) = &r.findim {
        let _ = writeln!(out, "fin.dim = p.d.(H) = {}; p.d.(T^R) = {}", f.findim, f.pd_ringel_tilting);
        let _ = writeln!(out, "  duality on A: {:?}; on R: {:?}", f.algebra_duality, f.ringel_duality);
        for c in &f.identities {
            let _ = writeln!(out, "  {}: {} vs {} {}", c.name, c.lhs, c.rhs, if c.holds { "ok" } else { "FAILS" });
        }
        for u in &f.unchecked {
            let _ = writeln!(out, "  not checked: {u}");
        }
    }
    for c in r.certificates.iter().flatten() {
        let _ = writeln!(out, "certificate {} ∈ F({}): {}", c.module, c.family, c.filtration.layers.join(", "));
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}
