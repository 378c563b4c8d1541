//! Ribbon elements of Drinfeld doubles: direct certification against the
//! twist axioms, Kauffman–Radford square-root pairs, the bijection between
//! them, and the sphericity and modularity verdicts.

use serde::Serialize;

use crate::double::{central_defect, double, embed_pair, factorizable, QuasiTriangular};
use crate::error::{Error, Result};
use crate::hopf::{characters, grouplikes, hit_left, hit_right, GrouplikeSet, HopfAlgebra, Tensor};
use crate::linalg::Scalar;
use crate::radford::{character_inverse, radford_data, RadfordData};

/// A grouplike `p` of the ambient algebra with `S²(x) = p·x·p⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PivotalElement {
    /// Index into the grouplike group of the ambient algebra.
    pub index: usize,
    pub p: Vec<Scalar>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RibbonChecks {
    pub central: bool,
    pub antipode_fixed: bool,
    pub counit_one: bool,
    pub square: bool,
    pub comult: bool,
}

impl RibbonChecks {
    pub fn all(&self) -> bool {
        self.central && self.antipode_fixed && self.counit_one && self.square && self.comult
    }
}

/// Candidate `v = u·p⁻¹` with the outcome of every ribbon axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RibbonCertificate {
    pub v: Vec<Scalar>,
    pub pivotal: PivotalElement,
    pub checks: RibbonChecks,
}

/// `(ℓ, β) ∈ G(H) × G(H*)`, by index into the respective groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KrPair {
    pub ell: usize,
    pub beta: usize,
    pub square_ell: bool,
    pub square_beta: bool,
    pub s2_conjugation: bool,
}

impl KrPair {
    pub fn holds(&self) -> bool {
        self.square_ell && self.square_beta && self.s2_conjugation
    }
}

/// `S²(x)·p = p·x` on every basis element.
pub fn implements_s2(a: &HopfAlgebra, p: &[Scalar]) -> bool {
    let s = a.antipode();
    let s2 = s.mul(s);
    (0..a.dim()).all(|x| a.mul(&s2.column(x), p) == a.mul(p, &a.basis_vector(x)))
}

pub fn pivotal_grouplikes(a: &HopfAlgebra, group: &GrouplikeSet) -> Vec<PivotalElement> {
    group
        .elements
        .iter()
        .enumerate()
        .filter(|(_, p)| implements_s2(a, p))
        .map(|(index, p)| PivotalElement { index, p: p.clone() })
        .collect()
}

/// Evaluates all five ribbon axioms for `v = u·p⁻¹`.
pub fn certify(qt: &QuasiTriangular, pivotal: &PivotalElement) -> RibbonCertificate {
    let a = &qt.algebra;
    let p_inv = a.antipode_of(&pivotal.p);
    let v = a.mul(&qt.u, &p_inv);
    let checks = RibbonChecks {
        central: central_defect(a, &v).is_none(),
        antipode_fixed: a.antipode_of(&v) == v,
        counit_one: a.counit_of(&v).is_one(),
        square: a.mul(&v, &v) == a.mul(&qt.u, &a.antipode_of(&qt.u)),
        comult: qt.monodromy.mul(a, &a.comult_of(&v)) == Tensor::pure(a.field(), [&v, &v]),
    };
    RibbonCertificate { v, pivotal: pivotal.clone(), checks }
}

/// Fully certified ribbon elements, in pivotal-index order.
pub fn ribbon_elements_direct(qt: &QuasiTriangular, pivotals: &[PivotalElement]) -> Vec<RibbonCertificate> {
    let mut out: Vec<RibbonCertificate> =
        pivotals.iter().map(|p| certify(qt, p)).filter(|c| c.checks.all()).collect();
    let mut seen = Vec::new();
    out.retain(|c| {
        let fresh = !seen.contains(&c.v);
        seen.push(c.v.clone());
        fresh
    });
    out
}

/// `S²(h) = ℓ·(β⇀h↼β⁻¹)·ℓ⁻¹` on every basis element.
pub fn s2_by_pair(h: &HopfAlgebra, ell: &[Scalar], beta: &[Scalar]) -> bool {
    let s = h.antipode();
    let s2 = s.mul(s);
    let beta_inv = character_inverse(h, beta);
    let ell_inv = h.antipode_of(ell);
    (0..h.dim()).all(|i| {
        let x = h.basis_vector(i);
        let twisted = hit_left(h, beta, &hit_right(h, &x, &beta_inv));
        h.mul(&h.mul(ell, &twisted), &ell_inv) == s2.column(i)
    })
}

/// Every pair in `G(H) × G(H*)` with its three conditions evaluated.
pub fn kr_candidates(h: &HopfAlgebra, rad: &RadfordData, gh: &GrouplikeSet, chars: &GrouplikeSet) -> Vec<KrPair> {
    let a_idx = gh.index_of(&rad.a);
    let alpha_idx = chars.index_of(&rad.alpha);
    let mut out = Vec::with_capacity(gh.len() * chars.len());
    for ell in 0..gh.len() {
        for beta in 0..chars.len() {
            let square_ell = Some(gh.square(ell)) == a_idx;
            let square_beta = Some(chars.square(beta)) == alpha_idx;
            let s2_conjugation = s2_by_pair(h, &gh.elements[ell], &chars.elements[beta]);
            out.push(KrPair { ell, beta, square_ell, square_beta, s2_conjugation });
        }
    }
    out
}

pub fn kr_pairs(h: &HopfAlgebra, rad: &RadfordData, gh: &GrouplikeSet, chars: &GrouplikeSet) -> Vec<KrPair> {
    kr_candidates(h, rad, gh, chars).into_iter().filter(KrPair::holds).collect()
}

/// Embeds `p = β⊗ℓ` into the double and certifies `v = u·p⁻¹`; a failed
/// certification is a convention fault.
pub fn pair_to_ribbon(
    qt: &QuasiTriangular,
    d_group: &GrouplikeSet,
    pair: &KrPair,
    gh: &GrouplikeSet,
    chars: &GrouplikeSet,
) -> Result<RibbonCertificate> {
    let n = gh.elements[0].len();
    let p = embed_pair(n, &chars.elements[pair.beta], &gh.elements[pair.ell]);
    let index = d_group
        .index_of(&p)
        .ok_or_else(|| Error::Convention(format!("pair ({}, {}) does not embed as a grouplike", pair.ell, pair.beta)))?;
    let cert = certify(qt, &PivotalElement { index, p });
    if !cert.checks.all() {
        return Err(Error::Convention(format!(
            "pair ({}, {}) gives an uncertified candidate: {:?}",
            pair.ell, pair.beta, cert.checks
        )));
    }
    Ok(cert)
}

/// `α = ε` and some `p ∈ G(H)` implements `S²` with `p² = a`.
pub fn spherical_dsps(h: &HopfAlgebra, rad: &RadfordData, gh: &GrouplikeSet) -> bool {
    rad.alpha == h.counit()
        && gh.elements.iter().enumerate().any(|(i, p)| {
            gh.elements[gh.square(i)] == rad.a && implements_s2(h, p)
        })
}

pub fn modular_verdict(factorizable: bool, ribbon_count: usize) -> bool {
    factorizable && ribbon_count > 0
}

/// Which of `α^{±1} ⊗ a^{±1}` equals the distinguished grouplike of `D(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleModularData {
    pub unimodular: bool,
    pub s4_verified: bool,
    /// Matching orientations, as `(alpha exponent, a exponent)`.
    pub a_double_matches: Vec<(i8, i8)>,
}

pub fn double_modular_data(h: &HopfAlgebra, rad: &RadfordData, qt: &QuasiTriangular) -> Result<DoubleModularData> {
    let d = &qt.algebra;
    let rad_d = radford_data(d)?;
    let n = h.dim();
    let alphas = [(1i8, rad.alpha.clone()), (-1, character_inverse(h, &rad.alpha))];
    let as_ = [(1i8, rad.a.clone()), (-1, h.antipode_of(&rad.a))];
    let mut matches = Vec::new();
    for (ea, alpha) in &alphas {
        for (eg, a) in &as_ {
            if embed_pair(n, alpha, a) == rad_d.a {
                matches.push((*ea, *eg));
            }
        }
    }
    Ok(DoubleModularData {
        unimodular: rad_d.alpha == d.counit(),
        s4_verified: rad_d.s4_verified(),
        a_double_matches: matches,
    })
}

/// Limits for [`classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Largest `dim D(H)` for which `G(D(H))` is also computed by the generic
    /// character solver and compared with `G(H*) × G(H)`.
    pub generic_grouplike_limit: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { generic_grouplike_limit: 256 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KrPairRef {
    pub ell: usize,
    pub beta: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub algebra: String,
    pub dim: usize,
    pub dim_double: usize,
    pub pivotal_count: usize,
    pub ribbon_count: usize,
    pub kr_pair_count: usize,
    pub bijection: bool,
    pub ribbon_elements: Vec<Vec<Scalar>>,
    pub kr_pairs: Vec<KrPairRef>,
    /// `kr_pairs[i]` maps to `ribbon_elements[pair_image[i]]`.
    pub pair_image: Vec<usize>,
    pub spherical_dsps: bool,
    pub factorizable: bool,
    pub modular: bool,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
}

/// Everything computed on the way to a [`ClassificationReport`].
#[derive(Clone, Debug)]
pub struct Classification {
    pub report: ClassificationReport,
    pub radford: RadfordData,
    pub qt: QuasiTriangular,
    pub grouplikes: GrouplikeSet,
    pub characters: GrouplikeSet,
    pub double_grouplikes: GrouplikeSet,
    pub pivotals: Vec<PivotalElement>,
    pub certificates: Vec<RibbonCertificate>,
    pub pairs: Vec<KrPair>,
}

/// `G(H*) × G(H)` embedded in `D(H)`, with the product structure.
pub fn product_grouplikes(qt: &QuasiTriangular, gh: &GrouplikeSet, chars: &GrouplikeSet) -> Result<GrouplikeSet> {
    let n = gh.elements[0].len();
    let mut elements = Vec::with_capacity(gh.len() * chars.len());
    for beta in &chars.elements {
        for ell in &gh.elements {
            elements.push(embed_pair(n, beta, ell));
        }
    }
    GrouplikeSet::from_elements(&qt.algebra, elements, gh.warnings.iter().chain(&chars.warnings).cloned().collect())
}

pub fn classify(h: &HopfAlgebra) -> Result<Classification> {
    classify_with(h, ClassifyOptions::default())
}

pub fn classify_with(h: &HopfAlgebra, opts: ClassifyOptions) -> Result<Classification> {
    let rad = radford_data(h)?;
    if !rad.s4_verified() {
        return Err(Error::Convention(format!("S⁴ formula fails on {} basis elements", rad.s4_witnesses.len())));
    }
    let gh = grouplikes(h)?;
    let chars = characters(h)?;
    let qt = double(h)?;
    let d = &qt.algebra;
    let mut notes = Vec::new();
    let mut warnings: Vec<String> = gh.warnings.iter().chain(&chars.warnings).cloned().collect();

    let shortcut = product_grouplikes(&qt, &gh, &chars)?;
    let d_group = if d.dim() <= opts.generic_grouplike_limit {
        let generic = grouplikes(d)?;
        warnings.extend(generic.warnings.iter().cloned());
        if generic.elements != shortcut.elements {
            return Err(Error::Construction(format!(
                "G(D(H)) has {} elements, G(H*)×G(H) gives {}",
                generic.len(),
                shortcut.len()
            )));
        }
        notes.push(format!("G(D(H)) computed generically: {} elements, equal to G(H*)×G(H)", generic.len()));
        generic
    } else {
        notes.push(format!(
            "G(D(H)) taken as G(H*)×G(H) ({} elements, each verified grouplike); generic solver skipped above dim {}",
            shortcut.len(),
            opts.generic_grouplike_limit
        ));
        shortcut
    };

    let pivotals = pivotal_grouplikes(d, &d_group);
    let certificates = ribbon_elements_direct(&qt, &pivotals);
    let pairs = kr_pairs(h, &rad, &gh, &chars);

    let mut pair_image = Vec::with_capacity(pairs.len());
    for pair in &pairs {
        let cert = pair_to_ribbon(&qt, &d_group, pair, &gh, &chars)?;
        let Some(i) = certificates.iter().position(|c| c.v == cert.v) else {
            return Err(Error::Bijection(format!(
                "pair ({}, {}) maps outside the directly certified ribbon elements",
                pair.ell, pair.beta
            )));
        };
        pair_image.push(i);
    }
    let mut hit = vec![false; certificates.len()];
    for &i in &pair_image {
        if hit[i] {
            return Err(Error::Bijection(format!("two pairs map to ribbon element {i}")));
        }
        hit[i] = true;
    }
    if hit.iter().any(|h| !h) {
        return Err(Error::Bijection(format!(
            "{} ribbon elements, {} square-root pairs",
            certificates.len(),
            pairs.len()
        )));
    }

    let fact = factorizable(&qt);
    let spherical = spherical_dsps(h, &rad, &gh);
    let modular = modular_verdict(fact, certificates.len());
    let report = ClassificationReport {
        algebra: h.name().to_string(),
        dim: h.dim(),
        dim_double: d.dim(),
        pivotal_count: pivotals.len(),
        ribbon_count: certificates.len(),
        kr_pair_count: pairs.len(),
        bijection: true,
        ribbon_elements: certificates.iter().map(|c| c.v.clone()).collect(),
        kr_pairs: pairs.iter().map(|p| KrPairRef { ell: p.ell, beta: p.beta }).collect(),
        pair_image,
        spherical_dsps: spherical,
        factorizable: fact,
        modular,
        warnings,
        notes,
    };
    Ok(Classification {
        report,
        radford: rad,
        qt,
        grouplikes: gh,
        characters: chars,
        double_grouplikes: d_group,
        pivotals,
        certificates,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{group_algebra, sweedler, taft, FiniteGroup};
    use crate::linalg::FieldSpec;

    #[test]
    fn trivial_algebra_has_one_ribbon_element() {
        let k = group_algebra(&FiniteGroup::cyclic(1), FieldSpec::Rational);
        let c = classify(&k).unwrap();
        assert_eq!(c.report.ribbon_count, 1);
        assert_eq!(c.report.kr_pair_count, 1);
        assert!(c.certificates[0].v[0].is_one());
        assert!(c.report.spherical_dsps && c.report.modular);
    }

    #[test]
    fn c2_has_four() {
        let h = group_algebra(&FiniteGroup::cyclic(2), FieldSpec::Rational);
        let c = classify(&h).unwrap();
        assert_eq!(c.report.pivotal_count, 4);
        assert_eq!(c.report.ribbon_count, 4);
        assert!(c.report.modular && c.report.spherical_dsps);
        // (g, sign) gives a ribbon element other than u
        let g = c.grouplikes.index_of(&[FieldSpec::Rational.zero(), FieldSpec::Rational.one()]).unwrap();
        let sign = c.characters.elements.iter().position(|b| b[1] == FieldSpec::Rational.from_i64(-1)).unwrap();
        let pair = c.pairs.iter().find(|p| p.ell == g && p.beta == sign).unwrap();
        let cert = pair_to_ribbon(&c.qt, &c.double_grouplikes, pair, &c.grouplikes, &c.characters).unwrap();
        assert_ne!(cert.v, c.qt.u);
    }

    #[test]
    fn sweedler_has_none() {
        let h = sweedler(FieldSpec::Rational).unwrap();
        let c = classify(&h).unwrap();
        assert_eq!(c.report.ribbon_count, 0);
        assert_eq!(c.report.kr_pair_count, 0);
        assert!(c.report.factorizable);
        assert!(!c.report.modular && !c.report.spherical_dsps);
    }

    #[test]
    fn taft_nine_is_modular_but_not_spherical() {
        let h = taft(3, 7, 2).unwrap();
        let c = classify(&h).unwrap();
        assert!(c.report.ribbon_count >= 1);
        assert_eq!(c.report.ribbon_count, c.report.kr_pair_count);
        assert!(c.report.modular);
        assert!(!c.report.spherical_dsps);
    }
}
