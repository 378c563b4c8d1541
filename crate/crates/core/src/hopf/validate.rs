use std::fmt;

use serde::Serialize;

use super::{HopfAlgebra, Tensor};
use crate::linalg::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Associativity,
    LeftUnit,
    RightUnit,
    Coassociativity,
    LeftCounit,
    RightCounit,
    ComultMultiplicative,
    CounitMultiplicative,
    ComultUnit,
    CounitUnit,
    LeftAntipode,
    RightAntipode,
    AntipodeInvertible,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Associativity => "(e_i e_j) e_k = e_i (e_j e_k)",
            Axiom::LeftUnit => "1·e_i = e_i",
            Axiom::RightUnit => "e_i·1 = e_i",
            Axiom::Coassociativity => "(Δ⊗id)Δ = (id⊗Δ)Δ",
            Axiom::LeftCounit => "(ε⊗id)Δ = id",
            Axiom::RightCounit => "(id⊗ε)Δ = id",
            Axiom::ComultMultiplicative => "Δ(e_i e_j) = Δ(e_i)Δ(e_j)",
            Axiom::CounitMultiplicative => "ε(e_i e_j) = ε(e_i)ε(e_j)",
            Axiom::ComultUnit => "Δ(1) = 1⊗1",
            Axiom::CounitUnit => "ε(1) = 1",
            Axiom::LeftAntipode => "m(S⊗id)Δ = 1·ε",
            Axiom::RightAntipode => "m(id⊗S)Δ = 1·ε",
            Axiom::AntipodeInvertible => "S is invertible",
        };
        f.write_str(s)
    }
}

/// A failed identity together with the basis indices where it failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed_axioms(&self) -> Vec<Axiom> {
        let mut out: Vec<Axiom> = Vec::new();
        for f in &self.failures {
            if !out.contains(&f.axiom) {
                out.push(f.axiom);
            }
        }
        out
    }

    fn fail(&mut self, axiom: Axiom, witness: Vec<usize>) {
        self.failures.push(AxiomFailure { axiom, witness });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "all Hopf axioms hold");
        }
        for fail in &self.failures {
            writeln!(f, "{} fails at {:?}", fail.axiom, fail.witness)?;
        }
        Ok(())
    }
}

/// Checks every Hopf algebra axiom on all basis elements, pairs and triples.
pub fn validate_axioms(h: &HopfAlgebra) -> ValidationReport {
    let n = h.dim();
    let field = h.field();
    let mut report = ValidationReport::default();

    for i in 0..n {
        for j in 0..n {
            let ij = h.mul_basis(i, j);
            for k in 0..n {
                let mut left = h.zero();
                for (l, c) in ij {
                    for (m, d) in h.mul_basis(*l, k) {
                        left[*m] += &(c * d);
                    }
                }
                let mut right = h.zero();
                for (l, c) in h.mul_basis(j, k) {
                    for (m, d) in h.mul_basis(i, *l) {
                        right[*m] += &(c * d);
                    }
                }
                if left != right {
                    report.fail(Axiom::Associativity, vec![i, j, k]);
                }
            }
        }
    }

    let unit = h.unit().to_vec();
    for i in 0..n {
        let e = h.basis_vector(i);
        if h.mul(&unit, &e) != e {
            report.fail(Axiom::LeftUnit, vec![i]);
        }
        if h.mul(&e, &unit) != e {
            report.fail(Axiom::RightUnit, vec![i]);
        }
    }

    let coproducts: Vec<Tensor<2>> = (0..n).map(|i| h.comult_of(&h.basis_vector(i))).collect();
    for (i, d) in coproducts.iter().enumerate() {
        if h.comult_left(d) != h.comult_right(d) {
            report.fail(Axiom::Coassociativity, vec![i]);
        }
        let e = h.basis_vector(i);
        if h.contract_left(h.counit(), d) != e {
            report.fail(Axiom::LeftCounit, vec![i]);
        }
        if h.contract_right(d, h.counit()) != e {
            report.fail(Axiom::RightCounit, vec![i]);
        }
    }

    for i in 0..n {
        for j in 0..n {
            let prod = crate::linalg::to_dense(field, n, h.mul_basis(i, j));
            if h.comult_of(&prod) != coproducts[i].mul(h, &coproducts[j]) {
                report.fail(Axiom::ComultMultiplicative, vec![i, j]);
            }
            if h.counit_of(&prod) != &h.counit()[i] * &h.counit()[j] {
                report.fail(Axiom::CounitMultiplicative, vec![i, j]);
            }
        }
    }
    if h.comult_of(&unit) != h.unit_tensor::<2>() {
        report.fail(Axiom::ComultUnit, vec![]);
    }
    if !h.counit_of(&unit).is_one() {
        report.fail(Axiom::CounitUnit, vec![]);
    }

    let s = h.antipode();
    for (i, d) in coproducts.iter().enumerate() {
        let expected: Vec<Scalar> = unit.iter().map(|u| u * &h.counit()[i]).collect();
        let mut left = h.zero();
        let mut right = h.zero();
        for ([a, b], c) in d.terms() {
            let sa = s.column(*a);
            let sb = s.column(*b);
            let ea = h.basis_vector(*a);
            let eb = h.basis_vector(*b);
            let l = h.mul(&sa, &eb);
            let r = h.mul(&ea, &sb);
            for k in 0..n {
                left[k] += &(c * &l[k]);
                right[k] += &(c * &r[k]);
            }
        }
        if left != expected {
            report.fail(Axiom::LeftAntipode, vec![i]);
        }
        if right != expected {
            report.fail(Axiom::RightAntipode, vec![i]);
        }
    }
    if h.antipode_inverse().is_none() {
        report.fail(Axiom::AntipodeInvertible, vec![]);
    }
    report
}
