use serde_json::{json, Value};

use tvartop_core::chow::{is_shellable_divfan, presentation, ChowRing};
use tvartop_core::divfan::toric_downgrade;
use tvartop_core::document::{parse, to_canonical_json, ComplexDocument, FanDocument, PolyhedronDoc, RationalDoc, ToricFanDocument};
use tvartop_core::invariants::{bouquet_betti, consistency_check_against, grothendieck_class, grothendieck_class_resolution, Smoothness};
use tvartop_core::pi1::{fundamental_group, is_simply_connected_fixed_point, LocPart, NdReading};
use tvartop_core::{DivisorialFan, Error, Result};

use crate::{Options, Outcome};

fn load_fan(text: &str) -> Result<(DivisorialFan, FanDocument)> {
    let doc: FanDocument = parse(text)?;
    Ok((doc.to_fan()?, doc))
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn error_value(e: &Error) -> Value {
    json!({ "kind": e.kind(), "message": e.to_string() })
}

pub fn validate(text: &str) -> Result<Outcome> {
    let (fan, _) = load_fan(text)?;
    let report = fan.validate();
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| json!({ "members": v.members, "message": v.message }))
        .collect();
    let mut lines = vec![format!("valid: {}", report.passed())];
    lines.extend(report.violations.iter().map(|v| format!("violation [{}]: {}", join(&v.members), v.message)));
    Ok(Outcome {
        results: json!({ "passed": report.passed(), "members": fan.members().len(), "violations": violations }),
        text: lines,
        warnings: report.warnings.clone(),
        exit: if report.passed() { 0 } else { 1 },
    })
}

pub fn invariants(text: &str) -> Result<Outcome> {
    let (fan, _) = load_fan(text)?;
    let class = grothendieck_class(&fan)?;
    let resolution = grothendieck_class_resolution(&fan)?;
    let mut results = json!({
        "class": class.to_string(),
        "class_terms": class.to_triples(),
        "resolution_class": resolution.to_string(),
        "resolution_class_terms": resolution.to_triples(),
    });
    let mut lines = vec![format!("class: {class}"), format!("resolution class: {resolution}")];
    let mut exit = 0;
    match consistency_check_against(&fan, class) {
        Ok(r) => {
            let smooth = match &r.smoothness {
                Smoothness::Smooth => "smooth".to_string(),
                Smoothness::NotSmooth(m) => format!("not smooth ({m})"),
                Smoothness::Unverified(m) => format!("unverified ({m})"),
            };
            results["betti"] = json!(r.betti);
            results["smoothness"] = json!(smooth);
            results["consistency"] = json!(r.verdict.to_string());
            lines.push(format!("betti: {}", join(&r.betti)));
            lines.push(format!("smoothness: {smooth}"));
            lines.push(format!("consistency: {}", r.verdict));
        }
        Err(e) => {
            results["betti"] = json!({ "error": error_value(&e) });
            lines.push(format!("betti: error [{}]: {e}", e.kind()));
            exit = 1;
        }
    }
    Ok(Outcome { results, text: lines, warnings: fan.validate().warnings, exit })
}

pub fn chow(text: &str, opts: &Options) -> Result<Outcome> {
    let (fan, _) = load_fan(text)?;
    let pres = presentation(&fan)?;
    let max_degree = opts.max_degree.unwrap_or(fan.rank() + 2);
    let generators: Vec<String> = pres.generators.iter().map(|g| g.name.clone()).collect();
    let linear: Vec<Vec<RationalDoc>> = pres
        .linear_relations
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(RationalDoc::from_rational).collect())
        .collect();
    let nonfaces = pres.nonface_sets.clone();
    let ring = ChowRing::new(pres, max_degree)?;
    let hilbert = ring.hilbert_function();
    let shell = is_shellable_divfan(&fan);
    let maps: Vec<Value> = shell.maps.iter().map(|m| json!({ "point": m.point, "matrix": m.to_i64() })).collect();

    let mut lines = vec![
        format!("generators: {}", generators.join(" ")),
        format!("linear relations: {}", linear.len()),
        format!("nonfaces: {}", nonfaces.len()),
        format!("hilbert: {}", join(&hilbert)),
        format!("shellable: {}", shell.shellable),
    ];
    lines.extend(shell.reasons.iter().map(|r| format!("  {r}")));
    for m in &shell.maps {
        let rows: Vec<String> = m.to_i64().iter().map(|r| format!("[{}]", join(r))).collect();
        lines.push(format!("specialization {}: {}", m.point, rows.join(" ")));
    }
    Ok(Outcome {
        results: json!({
            "generators": generators,
            "linear": linear,
            "nonfaces": nonfaces,
            "hilbert": hilbert,
            "shellable": shell.shellable,
            "shellability_reasons": shell.reasons,
            "specialization": maps,
        }),
        text: lines,
        warnings: vec![],
        exit: 0,
    })
}

pub fn pi1(text: &str, opts: &Options) -> Result<Outcome> {
    let (fan, doc) = load_fan(text)?;
    let reading = if opts.strict_nd { NdReading::Strict } else { NdReading::AllPoints };
    let g = fundamental_group(&fan, reading, doc.flags.log_terminal);
    let torsion: Vec<String> = g.abelian_part.torsion.iter().map(ToString::to_string).collect();
    let loc = match g.loc_part {
        LocPart::Trivial => json!({ "kind": "trivial" }),
        LocPart::Free(k) => json!({ "kind": "free", "rank": k }),
        LocPart::Surface(genus) => json!({ "kind": "surface", "genus": genus }),
    };
    let fixed = match is_simply_connected_fixed_point(&fan, reading) {
        Ok(v) => json!({ "applicable": true, "predicted_trivial": v.predicted, "agrees": v.agrees() }),
        Err(e) => json!({ "applicable": false, "reason": e.to_string() }),
    };
    let mut warnings = vec![];
    if !g.log_terminal_attested {
        warnings.push("log-terminality not attested; the product description assumes it".to_string());
    }
    Ok(Outcome {
        results: json!({
            "group": g.to_string(),
            "abelian": { "rank": g.abelian_part.free_rank, "torsion": torsion },
            "loc": loc,
            "log_terminal_attested": g.log_terminal_attested,
            "strict_nd": opts.strict_nd,
            "fixed_point_criterion": fixed,
        }),
        text: vec![format!("pi1: {g}")],
        warnings,
        exit: 0,
    })
}

pub fn bouquet(text: &str) -> Result<Outcome> {
    let doc: ComplexDocument = parse(text)?;
    let t = doc.to_complex()?;
    let f = t.f_vector();
    let h = t.h_vector();
    let mut lines = vec![format!("f-vector: {}", join(&f)), format!("h-numbers: {}", join(&h))];
    let mut exit = 0;
    let betti = match bouquet_betti(&t) {
        Ok(b) => {
            lines.push(format!("betti: {}", join(&b)));
            json!(b)
        }
        Err(e) => {
            lines.push(format!("betti: error [{}]: {e}", e.kind()));
            exit = 1;
            json!({ "error": error_value(&e) })
        }
    };
    let cells = t.maximal_cells();
    let shelling = match t.find_shelling() {
        Ok(s) => {
            let order: Vec<String> = s.order.iter().map(|&i| cells[i].to_string()).collect();
            let new_faces: Vec<String> = s.minimal_new_faces.iter().map(|&i| t.face(i).to_string()).collect();
            lines.push("shelling:".to_string());
            for (c, g) in order.iter().zip(&new_faces) {
                lines.push(format!("  {c}  new face {g}"));
            }
            json!({ "order": order, "minimal_new_faces": new_faces })
        }
        Err(e) => {
            lines.push(format!("shelling: error [{}]: {e}", e.kind()));
            json!({ "error": error_value(&e) })
        }
    };
    let components = t.bouquet_components();
    let comps: Vec<Value> = components
        .iter()
        .map(|(v, fan)| {
            let cones: Vec<PolyhedronDoc> = fan.maximal_cells().into_iter().map(PolyhedronDoc::from_polyhedron).collect::<Result<_>>()?;
            Ok(json!({
                "vertex": v.iter().map(RationalDoc::from_rational).collect::<Vec<_>>(),
                "cones": cones.iter().map(|c| c.rays.clone()).collect::<Vec<_>>(),
            }))
        })
        .collect::<Result<_>>()?;
    lines.push(format!("components: {}", components.len()));
    Ok(Outcome {
        results: json!({ "f_vector": f, "h_numbers": h, "betti": betti, "shelling": shelling, "components": comps }),
        text: lines,
        warnings: vec![],
        exit,
    })
}

pub fn downgrade(text: &str) -> Result<String> {
    let doc: ToricFanDocument = parse(text)?;
    let fan = toric_downgrade(&doc.to_fan()?)?;
    Ok(to_canonical_json(&FanDocument::from_fan(&fan, false)?))
}
