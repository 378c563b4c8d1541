//! Acceptance run: one PASS/FAIL line per criterion, every check exact.
//!
//! Golden classification reports live in `tests/golden/`. Set
//! `UPDATE_GOLDEN=1` to rewrite them; a report is only written after its
//! ribbon count has been confirmed by direct certification and by the
//! catalog's expected value.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use common::*;
use hopfdouble::catalog::{catalog, group_algebra, named_group, CatalogEntry, FiniteGroup};
use hopfdouble::double::{double, factorizable, verify_quasitriangular, QuasiTriangular};
use hopfdouble::hopf::{validate_axioms, HopfAlgebra, Tensor};
use hopfdouble::json::{algebra_from_value, algebra_to_json};
use hopfdouble::linalg::{FieldSpec, Scalar};
use hopfdouble::ribbon::{classify, double_modular_data, ribbon_elements_direct, Classification, DoubleModularData};
use hopfdouble::Error;
use serde_json::Value;

type Check = std::result::Result<String, String>;
type Criterion = fn(&[Entry]) -> Check;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Entry {
    entry: CatalogEntry,
    h: HopfAlgebra,
    class: std::result::Result<Classification, Error>,
    double_data: Option<DoubleModularData>,
}

fn prepare() -> Vec<Entry> {
    catalog()
        .into_iter()
        .map(|entry| {
            let h = entry.build().expect("catalog entry builds");
            let class = classify(&h);
            let double_data = class.as_ref().ok().and_then(|c| double_modular_data(&h, &c.radford, &c.qt).ok());
            Entry { entry, h, class, double_data }
        })
        .collect()
}

fn classification(e: &Entry) -> std::result::Result<&Classification, String> {
    e.class.as_ref().map_err(|err| format!("{}: classify failed: {err}", e.entry.id))
}

/// Adds one to the scalar stored as a JSON string.
fn bump(v: &mut Value) {
    let text = v.as_str().expect("scalar string");
    let field = FieldSpec::Rational;
    let x = &field.parse(text).unwrap() + &field.one();
    *v = Value::String(x.to_string());
}

/// JSON pointers to every structure constant of a dense algebra document.
fn structure_constant_paths(doc: &Value) -> Vec<String> {
    fn walk(v: &Value, path: String, out: &mut Vec<String>) {
        match v {
            Value::Array(items) => {
                for (i, item) in items.iter().enumerate() {
                    walk(item, format!("{path}/{i}"), out);
                }
            }
            Value::String(_) => out.push(path),
            _ => {}
        }
    }
    let mut out = Vec::new();
    for key in ["mult", "unit", "comult", "counit", "antipode"] {
        walk(&doc[key], format!("/{key}"), &mut out);
    }
    out
}

fn criterion_1(entries: &[Entry]) -> Check {
    let mut slowest = Duration::ZERO;
    for e in entries {
        let t = Instant::now();
        let report = validate_axioms(&e.h);
        slowest = slowest.max(t.elapsed());
        ensure(report.passed(), || format!("{}: {:?}", e.entry.id, report.failed_axioms()))?;
    }
    ensure(slowest < Duration::from_secs(1), || format!("slowest validation took {slowest:?}"))?;
    let c2 = group_algebra(&FiniteGroup::cyclic(2), FieldSpec::Rational);
    let doc = algebra_to_json(&c2);
    let paths = structure_constant_paths(&doc);
    for path in &paths {
        let mut mutated = doc.clone();
        bump(mutated.pointer_mut(path).unwrap());
        let h = algebra_from_value(&mutated).map_err(|err| format!("{path}: mutated data not loadable: {err}"))?;
        let report = validate_axioms(&h);
        ensure(report.failures.iter().any(|f| !f.witness.is_empty()), || {
            format!("{path}: no witnessed failure ({:?})", report.failed_axioms())
        })?;
    }
    Ok(format!("{} entries valid, {} mutations of QC2 all caught, slowest {slowest:.2?}", entries.len(), paths.len()))
}

fn criterion_2(entries: &[Entry]) -> Check {
    let mut checked = 0;
    let mut slowest_16 = Duration::ZERO;
    let mut slowest_81 = Duration::ZERO;
    for e in entries.iter().filter(|e| e.h.dim() <= 9) {
        let t = Instant::now();
        let qt = double(&e.h).map_err(|err| format!("{}: {err}", e.entry.id))?;
        let axioms = validate_axioms(&qt.algebra);
        ensure(axioms.passed(), || format!("{}: D(H) fails {:?}", e.entry.id, axioms.failed_axioms()))?;
        let report = verify_quasitriangular(&qt);
        ensure(report.passed(), || format!("{}: {:?}", e.entry.id, report.failures))?;
        // S²(x) = u x u⁻¹ once more, basis element by basis element
        let d = &qt.algebra;
        for x in 0..d.dim() {
            let ex = d.basis_vector(x);
            let s2 = d.antipode_of(&d.antipode_of(&ex));
            ensure(d.mul(&d.mul(&qt.u, &ex), &qt.u_inv) == s2, || format!("{}: S² ≠ conj(u) at {x}", e.entry.id))?;
        }
        let elapsed = t.elapsed();
        if d.dim() <= 16 {
            slowest_16 = slowest_16.max(elapsed);
        }
        slowest_81 = slowest_81.max(elapsed);
        checked += 1;
    }
    ensure(slowest_16 < Duration::from_secs(30), || format!("dim 16 took {slowest_16:?}"))?;
    ensure(slowest_81 < Duration::from_secs(300), || format!("dim ≤ 81 took {slowest_81:?}"))?;
    Ok(format!("{checked} doubles, slowest dim ≤ 16 {slowest_16:.2?}, slowest dim ≤ 81 {slowest_81:.2?}"))
}

fn criterion_3(entries: &[Entry]) -> Check {
    for e in entries {
        let c = classification(e)?;
        ensure(factorizable(&c.qt) && c.report.factorizable, || format!("{} not factorizable", e.entry.id))?;
    }
    Ok(format!("{} doubles factorizable", entries.len()))
}

fn criterion_4(entries: &[Entry]) -> Check {
    for e in entries {
        let data = e.double_data.as_ref().ok_or_else(|| format!("{}: no double data", e.entry.id))?;
        ensure(data.unimodular, || format!("{}: α_D ≠ ε", e.entry.id))?;
    }
    Ok(format!("{} doubles unimodular", entries.len()))
}

fn criterion_5(entries: &[Entry]) -> Check {
    for e in entries {
        let c = classification(e)?;
        ensure(c.radford.s4_verified(), || format!("{}: S⁴ formula fails on H", e.entry.id))?;
        let data = e.double_data.as_ref().ok_or_else(|| format!("{}: no double data", e.entry.id))?;
        ensure(data.s4_verified, || format!("{}: S⁴ formula fails on D(H)", e.entry.id))?;
    }
    Ok(format!("{} algebras and their doubles", entries.len()))
}

fn criterion_6(entries: &[Entry]) -> Check {
    let mut total = 0;
    for e in entries {
        let c = classification(e)?;
        let direct = ribbon_elements_direct(&c.qt, &c.pivotals);
        ensure(c.pairs.len() == direct.len(), || {
            format!("{}: {} pairs vs {} ribbon elements", e.entry.id, c.pairs.len(), direct.len())
        })?;
        ensure(c.report.bijection, || format!("{}: pair map not a bijection", e.entry.id))?;
        let mut image = c.report.pair_image.clone();
        image.sort_unstable();
        ensure(image == (0..direct.len()).collect::<Vec<_>>(), || format!("{}: image {image:?}", e.entry.id))?;
        total += direct.len();
    }
    Ok(format!("{total} ribbon elements matched to pairs"))
}

/// Re-checks every ribbon axiom for `v` without the library's certifier.
fn is_ribbon(qt: &QuasiTriangular, v: &[Scalar]) -> bool {
    let d = &qt.algebra;
    let u = &qt.u;
    (0..d.dim()).all(|i| d.mul(&d.basis_vector(i), v) == d.mul(v, &d.basis_vector(i)))
        && d.antipode_of(v) == v
        && d.counit_of(v).is_one()
        && d.mul(v, v) == d.mul(u, &d.antipode_of(u))
        && qt.monodromy.mul(d, &d.comult_of(v)) == Tensor::pure(d.field(), [v, v])
}

fn criterion_7(entries: &[Entry]) -> Check {
    let get = |id: &str| entries.iter().find(|e| e.entry.id == id).ok_or_else(|| format!("{id} missing"));
    let count = |id: &str| -> std::result::Result<usize, String> {
        let c = classification(get(id)?)?;
        for v in &c.report.ribbon_elements {
            ensure(is_ribbon(&c.qt, v), || format!("{id}: listed element fails recheck"))?;
        }
        let direct = ribbon_elements_direct(&c.qt, &c.pivotals).len();
        ensure(direct == c.report.ribbon_count, || format!("{id}: report {} vs direct {direct}", c.report.ribbon_count))?;
        Ok(direct)
    };
    ensure(count("group-C2-Q")? == 4, || "QC2 count".into())?;
    ensure(count("sweedler-Q")? == 0, || "Sweedler over Q count".into())?;
    ensure(count("sweedler-F5")? == 0, || "Sweedler over F5 count".into())?;
    ensure(count("taft-3-F7")? >= 1, || "Taft(3,7,2) count".into())?;
    // exhaustive search over F_5 where the space is small
    let f5 = FieldSpec::prime(5).unwrap();
    for (h, want) in [(group_algebra(&FiniteGroup::cyclic(2), f5), 4), (get("sweedler-F5")?.h.clone(), 0)] {
        let qt = double(&h).map_err(|err| err.to_string())?;
        let brute = brute_force_ribbon_count(&qt, 1_000_000).ok_or("search space too large")?;
        ensure(brute == want, || format!("{}: exhaustive count {brute}", h.name()))?;
    }
    for g in ["C1", "C2", "C3", "C4", "C5", "C6", "S3", "D4", "Q8"] {
        let id = format!("group-{g}-Q");
        let formula = group_ribbon_formula(&named_group(g).unwrap());
        let got = count(&id)?;
        ensure(got == formula, || format!("{id}: {got} vs formula {formula}"))?;
    }
    Ok("QC2 = 4, Sweedler = 0 (Q, F5), Taft(3,7,2) ≥ 1, group formula on 9 groups".into())
}

fn criterion_8(entries: &[Entry]) -> Check {
    for e in entries {
        let r = &classification(e)?.report;
        ensure(!r.spherical_dsps || r.modular, || format!("{}: spherical but not modular", e.entry.id))?;
        if e.entry.id.starts_with("group-") {
            ensure(r.spherical_dsps, || format!("{}: group algebra not spherical", e.entry.id))?;
        }
        if e.entry.id.starts_with("sweedler-") {
            ensure(!r.spherical_dsps, || format!("{}: Sweedler spherical", e.entry.id))?;
        }
    }
    Ok("spherical ⇒ modular on every entry".into())
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn render(c: &Classification) -> String {
    serde_json::to_string_pretty(&c.report).expect("report serializes") + "\n"
}

fn criterion_9(entries: &[Entry]) -> Check {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for e in entries {
        let c = classification(e)?;
        let first = render(c);
        let again = render(&classify(&e.h).map_err(|err| err.to_string())?);
        ensure(first == again, || format!("{}: output differs between runs", e.entry.id))?;
        let path = golden_dir().join(format!("{}.json", e.entry.id));
        if update {
            let direct = ribbon_elements_direct(&c.qt, &c.pivotals).len();
            let expected = e.entry.expected.as_ref().map(|x| x.ribbon_count);
            ensure(direct == c.report.ribbon_count && expected.is_none_or(|x| x == direct), || {
                format!("{}: refusing to freeze an unconfirmed count", e.entry.id)
            })?;
            std::fs::create_dir_all(golden_dir()).map_err(|err| err.to_string())?;
            std::fs::write(&path, &first).map_err(|err| err.to_string())?;
        }
        let stored = std::fs::read_to_string(&path).map_err(|err| format!("{}: {err}", path.display()))?;
        ensure(stored == first, || format!("{}: differs from golden file", e.entry.id))?;
    }
    Ok(format!("{} reports byte-identical to golden files", entries.len()))
}

fn main() {
    let start = Instant::now();
    let entries = prepare();
    println!("prepared {} catalog entries in {:.2?}", entries.len(), start.elapsed());
    let criteria: [(&str, Criterion); 9] = [
        ("axiom suite", criterion_1),
        ("double correctness", criterion_2),
        ("non-degeneracy of doubles", criterion_3),
        ("unimodularity of doubles", criterion_4),
        ("Radford S⁴ formula", criterion_5),
        ("pairs and ribbon elements in bijection", criterion_6),
        ("known verdicts", criterion_7),
        ("sphericity implies modularity", criterion_8),
        ("deterministic golden output", criterion_9),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = check(&entries);
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {title}: {detail} [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {title}: {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
