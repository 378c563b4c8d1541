mod common;

use common::*;
use hopfdouble::catalog::{catalog, group_algebra, sweedler, FiniteGroup};
use hopfdouble::hopf::{
    characters, convolve, cop, dual, grouplikes, hit_left, hit_right, op, validate_axioms, Axiom, HopfAlgebra,
};
use hopfdouble::linalg::{FieldSpec, Matrix, Scalar};
use proptest::prelude::*;

fn q(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| FieldSpec::Rational.from_i64(x)).collect()
}

fn c2() -> HopfAlgebra {
    group_algebra(&FiniteGroup::cyclic(2), FieldSpec::Rational)
}

fn h4() -> HopfAlgebra {
    sweedler(FieldSpec::Rational).unwrap()
}

fn sorted(mut v: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    v.sort();
    v
}

#[test]
fn zero_antipode_fails_with_witness() {
    let mut parts = c2().into_parts();
    parts.antipode = Matrix::zeros(FieldSpec::Rational, 2, 2);
    let h = HopfAlgebra::from_parts(parts).unwrap();
    let report = validate_axioms(&h);
    assert!(report.failed_axioms().contains(&Axiom::LeftAntipode));
    let antipode = report.failures.iter().filter(|f| matches!(f.axiom, Axiom::LeftAntipode | Axiom::RightAntipode));
    assert!(antipode.clone().count() > 0 && antipode.into_iter().all(|f| !f.witness.is_empty()));
    assert!(report.failed_axioms().contains(&Axiom::AntipodeInvertible));
}

#[test]
fn validated_constructor_rejects_bad_data() {
    let mut parts = c2().into_parts();
    parts.counit = q(&[1, 0]);
    assert!(HopfAlgebra::validated(parts).is_err());
}

#[test]
fn dual_is_valid_and_involutive() {
    for e in catalog().iter().filter(|e| e.id != "taft-4-F5") {
        let h = e.build().unwrap();
        let d = dual(&h);
        assert!(validate_axioms(&d).passed(), "{}", e.id);
        assert_eq!(dual(&d), h, "{}", e.id);
    }
}

#[test]
fn trivial_algebra_is_self_dual() {
    let k = group_algebra(&FiniteGroup::cyclic(1), FieldSpec::Rational);
    assert_eq!(dual(&k), k);
    assert_eq!(op(&k).unwrap(), k);
}

#[test]
fn c2_is_self_dual() {
    let h = c2();
    let d = dual(&h);
    let pool = small_vectors(FieldSpec::Rational, 2, -1..=1);
    let phi = find_hopf_isomorphism(&h, &d, &[vec![], vec![0]], &[pool]).expect("QC2 ≅ QC2*");
    assert!(is_hopf_isomorphism(&h, &d, &phi));
}

#[test]
fn sweedler_is_self_dual() {
    let h = h4();
    let d = dual(&h);
    // generators g (index 1) and x (index 2); gx = g·x
    let pool = small_vectors(FieldSpec::Rational, 4, -1..=1);
    let g_pool: Vec<_> = pool.iter().filter(|v| d.mul(v, v) == d.unit() && v.as_slice() != d.unit()).cloned().collect();
    let x_pool: Vec<_> = pool.iter().filter(|v| d.counit_of(v).is_zero() && v.iter().any(|c| !c.is_zero())).cloned().collect();
    let words = [vec![], vec![0], vec![1], vec![0, 1]];
    let phi = find_hopf_isomorphism(&h, &d, &words, &[g_pool, x_pool]).expect("H4 ≅ H4*");
    assert!(is_hopf_isomorphism(&h, &d, &phi));
}

#[test]
fn op_and_cop_validate() {
    for e in catalog().iter().filter(|e| e.id != "taft-4-F5") {
        let h = e.build().unwrap();
        assert!(validate_axioms(&op(&h).unwrap()).passed(), "op {}", e.id);
        assert!(validate_axioms(&cop(&h).unwrap()).passed(), "cop {}", e.id);
    }
}

#[test]
fn op_of_abelian_group_algebra_is_itself() {
    let h = group_algebra(&FiniteGroup::cyclic(4), FieldSpec::Rational);
    assert_eq!(op(&h).unwrap(), h);
}

#[test]
fn cop_of_sweedler_uses_s_cubed() {
    let h = h4();
    let s = h.antipode();
    assert!(!s.mul(s).is_identity());
    assert!(s.pow(4).is_identity());
    assert_eq!(cop(&h).unwrap().antipode(), &s.pow(3));
}

#[test]
fn grouplikes_of_small_examples() {
    let k = group_algebra(&FiniteGroup::cyclic(1), FieldSpec::Rational);
    assert_eq!(grouplikes(&k).unwrap().elements, vec![q(&[1])]);
    // x = a + bg with Δx = x⊗x forces ab = 0, a² = a, b² = b, a + b = 1
    assert_eq!(grouplikes(&c2()).unwrap().elements, vec![q(&[1, 0]), q(&[0, 1])]);
    assert_eq!(grouplikes(&h4()).unwrap().elements, vec![q(&[1, 0, 0, 0]), q(&[0, 1, 0, 0])]);
}

#[test]
fn characters_of_small_examples() {
    assert_eq!(characters(&c2()).unwrap().elements, vec![q(&[1, 1]), q(&[1, -1])]);
    assert_eq!(characters(&h4()).unwrap().elements, vec![q(&[1, 1, 0, 0]), q(&[1, -1, 0, 0])]);
    let s3 = group_algebra(&FiniteGroup::symmetric3(), FieldSpec::Rational);
    assert_eq!(grouplikes(&s3).unwrap().len(), 6);
    assert_eq!(characters(&s3).unwrap().len(), 2);
}

#[test]
fn grouplikes_match_exhaustive_search_over_finite_fields() {
    let f3 = FieldSpec::prime(3).unwrap();
    let f5 = FieldSpec::prime(5).unwrap();
    let f7 = FieldSpec::prime(7).unwrap();
    let cases = [
        sweedler(f5).unwrap(),
        sweedler(f3).unwrap(),
        group_algebra(&FiniteGroup::cyclic(3), f7),
        group_algebra(&FiniteGroup::cyclic(4), f5),
        group_algebra(&FiniteGroup::cyclic(3), f5),
    ];
    for h in &cases {
        let g = grouplikes(h).unwrap();
        assert_eq!(sorted(g.elements.clone()), brute_force_grouplikes(h), "{}", h.name());
        let chars = characters(h).unwrap();
        assert_eq!(sorted(chars.elements.clone()), brute_force_characters(h), "{}", h.name());
    }
}

#[test]
fn missing_roots_are_reported() {
    // C3 over Q: the nontrivial characters need a primitive cube root of unity
    let h = group_algebra(&FiniteGroup::cyclic(3), FieldSpec::Rational);
    let chars = characters(&h).unwrap();
    assert_eq!(chars.len(), 1);
    assert!(chars.warnings.iter().any(|w| w.contains("degree-2")), "{:?}", chars.warnings);
}

#[test]
fn grouplike_invariants_across_catalog() {
    for e in catalog().iter().filter(|e| e.id != "taft-4-F5") {
        let h = e.build().unwrap();
        let g = grouplikes(&h).unwrap();
        let m = Matrix::from_columns(h.field(), h.dim(), &g.elements);
        assert_eq!(naive_rank(&m), g.len(), "{}", e.id);
        for (i, x) in g.elements.iter().enumerate() {
            assert!(h.counit_of(x).is_one());
            assert_eq!(h.antipode_of(x), g.elements[g.inverses[i]]);
        }
        // characters of H are the grouplikes of H*
        assert_eq!(characters(&h).unwrap().elements, grouplikes(&dual(&h)).unwrap().elements, "{}", e.id);
    }
}

#[test]
fn hit_actions_on_sweedler() {
    let h = h4();
    let eps = h.counit().to_vec();
    let alpha = q(&[1, -1, 0, 0]);
    for i in 0..4 {
        let x = h.basis_vector(i);
        assert_eq!(hit_left(&h, &eps, &x), x);
        assert_eq!(hit_right(&h, &x, &eps), x);
    }
    assert_eq!(hit_left(&h, &alpha, &h.basis_vector(1)), q(&[0, -1, 0, 0]));
    assert_eq!(hit_left(&h, &alpha, &h.basis_vector(2)), q(&[0, 0, 1, 0]));
}

#[test]
fn hit_actions_are_module_actions_for_characters() {
    for e in catalog().iter().filter(|e| e.id != "taft-4-F5") {
        let h = e.build().unwrap();
        let chars = characters(&h).unwrap().elements;
        for f in &chars {
            for g in &chars {
                let fg = convolve(&h, f, g);
                for i in 0..h.dim() {
                    let x = h.basis_vector(i);
                    assert_eq!(hit_left(&h, &fg, &x), hit_left(&h, f, &hit_left(&h, g, &x)), "{}", e.id);
                    assert_eq!(hit_right(&h, &x, &fg), hit_right(&h, &hit_right(&h, &x, f), g), "{}", e.id);
                }
            }
        }
    }
}

fn taft9() -> HopfAlgebra {
    hopfdouble::catalog::taft(3, 7, 2).unwrap()
}

fn residues(len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..7, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hit_actions_are_module_actions(f in residues(9), g in residues(9), x in residues(9)) {
        let h = taft9();
        let field = h.field();
        let lift = |v: &[u32]| v.iter().map(|&c| field.from_i64(c as i64)).collect::<Vec<_>>();
        let (f, g, x) = (lift(&f), lift(&g), lift(&x));
        let fg = convolve(&h, &f, &g);
        prop_assert_eq!(hit_left(&h, &fg, &x), hit_left(&h, &f, &hit_left(&h, &g, &x)));
        prop_assert_eq!(hit_right(&h, &x, &fg), hit_right(&h, &hit_right(&h, &x, &f), &g));
    }

    #[test]
    fn antipode_is_an_anti_homomorphism(x in residues(9), y in residues(9)) {
        let h = taft9();
        let field = h.field();
        let lift = |v: &[u32]| v.iter().map(|&c| field.from_i64(c as i64)).collect::<Vec<_>>();
        let (x, y) = (lift(&x), lift(&y));
        prop_assert_eq!(h.antipode_of(&h.mul(&x, &y)), h.mul(&h.antipode_of(&y), &h.antipode_of(&x)));
    }
}
