use std::fmt::Write;

use hopfdouble::double::{double as build_double, verify_quasitriangular, QuasiTriangular};
use hopfdouble::hopf::{characters, dual as dual_of, grouplikes as grouplikes_of, validate_axioms, GrouplikeSet, HopfAlgebra};
use hopfdouble::json::{algebra_to_json, quasitriangular_to_json, Loaded};
use hopfdouble::linalg::{Matrix, Scalar};
use hopfdouble::radford::{compute_integrals, dual_unimodular, radford_data, semisimple, unimodular};
use hopfdouble::ribbon::{classify_with, pivotal_grouplikes, ribbon_elements_direct, spherical_dsps, ClassifyOptions};
use hopfdouble::{catalog, Error};
use serde_json::{json, Value};

use crate::render::{algebra, element, functional, tensor2, yes_no};
use crate::{Failure, Outcome};

fn strings(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
}

fn check_ceiling(h: &HopfAlgebra, ceiling: usize) -> Result<(), Failure> {
    if h.dim() > ceiling {
        return Err(Error::Ceiling { dim: h.dim(), ceiling }.into());
    }
    Ok(())
}

/// Rejects inputs that fail the axioms, listing the witnesses.
pub fn validated(loaded: Loaded) -> Result<HopfAlgebra, Failure> {
    let h = match loaded {
        Loaded::Algebra(h) => h,
        Loaded::QuasiTriangular(qt) => qt.algebra,
    };
    let report = validate_axioms(&h);
    if !report.passed() {
        return Err(Error::Axioms(report).into());
    }
    Ok(h)
}

pub fn examples_list() -> Outcome {
    let entries = catalog::catalog();
    let text: String = entries.iter().map(|e| format!("{}\n", e.id)).collect();
    Outcome::new(serde_json::to_value(&entries).expect("serializable"), text)
}

pub fn examples_emit(id: &str) -> Result<Outcome, Failure> {
    let entry = catalog::lookup(id).ok_or_else(|| Failure::Input(format!("{id}: unknown catalog id")))?;
    let h = entry.build()?;
    Ok(Outcome::new(algebra_to_json(&h), algebra(&h)))
}

pub fn validate(loaded: &Loaded) -> Result<Outcome, Failure> {
    let h = loaded.algebra();
    let report = validate_axioms(h);
    let mut json = json!({
        "algebra": h.name(),
        "field": h.field(),
        "dim": h.dim(),
        "passed": report.passed(),
        "failures": report.failures,
    });
    let mut text = format!("{} over {}, dim {}\n", h.name(), h.field(), h.dim());
    if report.passed() {
        text.push_str("Hopf axioms: all pass\n");
    } else {
        let _ = writeln!(text, "Hopf axioms: FAILED\n{report}");
    }
    let mut passed = report.passed();
    if let Loaded::QuasiTriangular(qt) = loaded {
        if report.passed() {
            let qtr = verify_quasitriangular(qt);
            passed &= qtr.passed();
            json["quasitriangular"] = json!({"passed": qtr.passed(), "failures": qtr.failures});
            if qtr.passed() {
                text.push_str("R-matrix identities: all pass\n");
            } else {
                text.push_str("R-matrix identities: FAILED\n");
                for (what, at) in &qtr.failures {
                    let _ = writeln!(text, "  {what}{}", at.map(|i| format!(" at basis {i}")).unwrap_or_default());
                }
            }
        }
    }
    Ok(Outcome::new(json, text).verdict(passed))
}

fn antipode_order(s: &Matrix, bound: usize) -> Option<usize> {
    let mut p = s.clone();
    for k in 1..=bound {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul(s);
    }
    None
}

pub fn info(h: &HopfAlgebra) -> Result<Outcome, Failure> {
    let gh = grouplikes_of(h)?;
    let chars = characters(h)?;
    let rad = radford_data(h)?;
    let order = antipode_order(h.antipode(), 4 * h.dim() * h.dim());
    let json = json!({
        "name": h.name(),
        "field": h.field(),
        "dim": h.dim(),
        "basis": h.basis_names(),
        "commutative": h.is_commutative(),
        "cocommutative": h.is_cocommutative(),
        "antipode_order": order,
        "semisimple": semisimple(h, &rad),
        "grouplike_count": gh.len(),
        "character_count": chars.len(),
        "warnings": gh.warnings.iter().chain(&chars.warnings).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    let _ = writeln!(text, "{} over {}, dim {}", h.name(), h.field(), h.dim());
    let _ = writeln!(text, "basis: {}", h.basis_names().join(", "));
    let _ = writeln!(text, "commutative: {}", yes_no(h.is_commutative()));
    let _ = writeln!(text, "cocommutative: {}", yes_no(h.is_cocommutative()));
    let _ = writeln!(text, "antipode order: {}", order.map_or("unknown".into(), |o| o.to_string()));
    let _ = writeln!(text, "semisimple: {}", yes_no(semisimple(h, &rad)));
    let _ = writeln!(text, "|G(H)| = {}, |G(H*)| = {}", gh.len(), chars.len());
    Ok(Outcome::new(json, text).notes(gh.warnings.iter().chain(&chars.warnings).cloned().collect()))
}

pub fn dual(h: &HopfAlgebra) -> Result<Outcome, Failure> {
    let d = dual_of(h);
    Ok(Outcome::new(algebra_to_json(&d), algebra(&d)))
}

fn built_double(h: &HopfAlgebra, ceiling: usize) -> Result<QuasiTriangular, Failure> {
    check_ceiling(h, ceiling)?;
    Ok(build_double(h)?)
}

pub fn double(h: &HopfAlgebra, ceiling: usize) -> Result<Outcome, Failure> {
    let qt = built_double(h, ceiling)?;
    let names = qt.algebra.basis_names();
    let mut text = algebra(&qt.algebra);
    let _ = writeln!(text, "R = {}", tensor2(names, &qt.r_matrix));
    let _ = writeln!(text, "u = {}", element(names, &qt.u));
    let _ = writeln!(text, "Q = {}", tensor2(names, &qt.monodromy));
    Ok(Outcome::new(quasitriangular_to_json(&qt), text))
}

pub fn integrals(h: &HopfAlgebra) -> Result<Outcome, Failure> {
    let (big, small) = compute_integrals(h)?;
    let names = h.basis_names();
    let json = json!({"left_integral": strings(&big), "right_integral_dual": strings(&small)});
    let text = format!("left integral Λ = {}\nright integral λ = {}\n", element(names, &big), functional(names, &small));
    Ok(Outcome::new(json, text))
}

fn group_json(g: &GrouplikeSet) -> Value {
    json!({
        "elements": g.elements.iter().map(|e| strings(e)).collect::<Vec<_>>(),
        "table": g.table,
        "inverses": g.inverses,
        "warnings": g.warnings,
    })
}

pub fn grouplikes(h: &HopfAlgebra) -> Result<Outcome, Failure> {
    let gh = grouplikes_of(h)?;
    let chars = characters(h)?;
    let names = h.basis_names();
    let json = json!({"grouplikes": group_json(&gh), "characters": group_json(&chars)});
    let mut text = format!("G(H): {} element(s)\n", gh.len());
    for (i, g) in gh.elements.iter().enumerate() {
        let _ = writeln!(text, "  [{i}] {} (order {})", element(names, g), gh.order(i));
    }
    let _ = writeln!(text, "G(H*): {} character(s)", chars.len());
    for (i, c) in chars.elements.iter().enumerate() {
        let _ = writeln!(text, "  [{i}] {} (order {})", functional(names, c), chars.order(i));
    }
    let notes: Vec<String> = gh.warnings.iter().chain(&chars.warnings).cloned().collect();
    for w in &notes {
        let _ = writeln!(text, "warning: {w}");
    }
    Ok(Outcome::new(json, text).notes(notes))
}

pub fn radford(h: &HopfAlgebra) -> Result<Outcome, Failure> {
    let rad = radford_data(h)?;
    let names = h.basis_names();
    let alpha: serde_json::Map<String, Value> =
        names.iter().zip(&rad.alpha).map(|(n, c)| (n.clone(), Value::String(c.to_string()))).collect();
    let s4 = if rad.s4_verified() {
        json!("verified")
    } else {
        json!({"witnesses": rad.s4_witnesses})
    };
    let json = json!({
        "left_integral": strings(&rad.left_integral),
        "right_integral_dual": strings(&rad.right_integral_dual),
        "alpha": alpha,
        "a": strings(&rad.a),
        "unimodular": unimodular(h, &rad),
        "dual_unimodular": dual_unimodular(h, &rad),
        "s4_formula": s4,
    });
    let mut text = String::new();
    let _ = writeln!(text, "left integral Λ = {}", element(names, &rad.left_integral));
    let _ = writeln!(text, "right integral λ = {}", functional(names, &rad.right_integral_dual));
    let _ = writeln!(text, "α = {}", functional(names, &rad.alpha));
    let _ = writeln!(text, "a = {}", element(names, &rad.a));
    let _ = writeln!(text, "unimodular: {}", yes_no(unimodular(h, &rad)));
    let _ = writeln!(text, "dual unimodular: {}", yes_no(dual_unimodular(h, &rad)));
    if rad.s4_verified() {
        text.push_str("S⁴(h) = a(α⇀h↼α⁻¹)a⁻¹: verified on every basis element\n");
    } else {
        let _ = writeln!(text, "S⁴ formula FAILS on {} basis element(s)", rad.s4_witnesses.len());
    }
    Ok(Outcome::new(json, text).verdict(rad.s4_verified()))
}

pub fn ribbon(h: &HopfAlgebra, ceiling: usize) -> Result<Outcome, Failure> {
    let qt = built_double(h, ceiling)?;
    let d = &qt.algebra;
    let group = grouplikes_of(d)?;
    let pivotals = pivotal_grouplikes(d, &group);
    let certs = ribbon_elements_direct(&qt, &pivotals);
    let names = d.basis_names();
    let json = json!({
        "algebra": h.name(),
        "dim_double": d.dim(),
        "grouplike_count": group.len(),
        "pivotal_grouplikes": pivotals,
        "ribbon_elements": certs,
    });
    let mut text = format!("D({}): dim {}, |G(D)| = {}, {} pivotal\n", h.name(), d.dim(), group.len(), pivotals.len());
    let _ = writeln!(text, "{} ribbon element(s)", certs.len());
    for c in &certs {
        let _ = writeln!(text, "  v = u·p⁻¹ with p = [{}]: {}", c.pivotal.index, element(names, &c.v));
    }
    Ok(Outcome::new(json, text).notes(group.warnings.clone()))
}

pub fn spherical(h: &HopfAlgebra) -> Result<Outcome, Failure> {
    let rad = radford_data(h)?;
    let gh = grouplikes_of(h)?;
    let verdict = spherical_dsps(h, &rad, &gh);
    let json = json!({"algebra": h.name(), "unimodular": unimodular(h, &rad), "spherical_dsps": verdict});
    let text = format!("{}: spherical {}\n", h.name(), yes_no(verdict));
    Ok(Outcome::new(json, text).verdict(verdict).notes(gh.warnings.clone()))
}

fn classification(h: &HopfAlgebra, ceiling: usize) -> Result<hopfdouble::ribbon::Classification, Failure> {
    check_ceiling(h, ceiling)?;
    Ok(classify_with(h, ClassifyOptions::default())?)
}

pub fn modular(h: &HopfAlgebra, ceiling: usize) -> Result<Outcome, Failure> {
    let c = classification(h, ceiling)?;
    let r = &c.report;
    let json = json!({
        "algebra": r.algebra,
        "factorizable": r.factorizable,
        "ribbon_count": r.ribbon_count,
        "modular": r.modular,
    });
    let text = format!(
        "{}: factorizable {}, {} ribbon element(s), modular {}\n",
        r.algebra,
        yes_no(r.factorizable),
        r.ribbon_count,
        yes_no(r.modular)
    );
    Ok(Outcome::new(json, text).verdict(r.modular).notes(r.notes.iter().chain(&r.warnings).cloned().collect()))
}

pub fn classify(h: &HopfAlgebra, ceiling: usize) -> Result<Outcome, Failure> {
    let c = classification(h, ceiling)?;
    let r = &c.report;
    let names = c.qt.algebra.basis_names();
    let mut text = String::new();
    let _ = writeln!(text, "algebra: {} (dim {}, double dim {})", r.algebra, r.dim, r.dim_double);
    let _ = writeln!(text, "pivotal grouplikes: {}", r.pivotal_count);
    let _ = writeln!(text, "ribbon elements: {}", r.ribbon_count);
    for v in &r.ribbon_elements {
        let _ = writeln!(text, "  {}", element(names, v));
    }
    let _ = writeln!(text, "square-root pairs: {}", r.kr_pair_count);
    for (p, img) in r.kr_pairs.iter().zip(&r.pair_image) {
        let _ = writeln!(text, "  (ℓ = [{}], β = [{}]) -> ribbon element {img}", p.ell, p.beta);
    }
    let _ = writeln!(text, "bijection: {}", yes_no(r.bijection));
    let _ = writeln!(text, "factorizable: {}", yes_no(r.factorizable));
    let _ = writeln!(text, "spherical: {}", yes_no(r.spherical_dsps));
    let _ = writeln!(text, "modular: {}", yes_no(r.modular));
    for w in &r.warnings {
        let _ = writeln!(text, "warning: {w}");
    }
    let json = serde_json::to_value(r).expect("serializable");
    Ok(Outcome::new(json, text).verdict(r.modular).notes(r.notes.clone()))
}
