use std::fmt::Write;

use hopfdouble::hopf::{HopfAlgebra, Tensor};
use hopfdouble::linalg::Scalar;

fn term(c: &Scalar, name: &str, first: bool) -> String {
    let text = c.to_string();
    let (neg, mag) = match text.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, text),
    };
    let body = if mag == "1" && name != "1" {
        name.to_string()
    } else if name == "1" {
        mag
    } else {
        format!("{mag}·{name}")
    };
    match (first, neg) {
        (true, false) => body,
        (true, true) => format!("-{body}"),
        (false, false) => format!(" + {body}"),
        (false, true) => format!(" - {body}"),
    }
}

/// Linear combination of basis names, `0` when empty.
pub fn element(names: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            out.push_str(&term(c, &names[i], out.is_empty()));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// A functional, written in the dual basis `f[name]`.
pub fn functional(names: &[String], v: &[Scalar]) -> String {
    let dual: Vec<String> = names.iter().map(|n| format!("f[{n}]")).collect();
    element(&dual, v)
}

pub fn tensor2(names: &[String], t: &Tensor<2>) -> String {
    let mut out = String::new();
    for ([i, j], c) in t.terms() {
        let name = format!("{}⊗{}", names[*i], names[*j]);
        out.push_str(&term(c, &name, out.is_empty()));
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Nonzero products, coproducts, counit and antipode, one identity per line.
pub fn algebra(h: &HopfAlgebra) -> String {
    let names = h.basis_names();
    let n = h.dim();
    let mut s = String::new();
    let _ = writeln!(s, "{} over {}, dim {}", h.name(), h.field(), n);
    let _ = writeln!(s, "basis: {}", names.join(", "));
    let _ = writeln!(s, "1 = {}", element(names, h.unit()));
    for i in 0..n {
        for j in 0..n {
            let prod = hopfdouble::linalg::to_dense(h.field(), n, h.mul_basis(i, j));
            let _ = writeln!(s, "{}·{} = {}", names[i], names[j], element(names, &prod));
        }
    }
    for i in 0..n {
        let _ = writeln!(s, "Δ({}) = {}", names[i], tensor2(names, &h.comult_of(&h.basis_vector(i))));
    }
    for i in 0..n {
        let _ = writeln!(s, "ε({}) = {}", names[i], h.counit()[i]);
    }
    for i in 0..n {
        let _ = writeln!(s, "S({}) = {}", names[i], element(names, &h.antipode().column(i)));
    }
    s
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfdouble::linalg::FieldSpec;

    #[test]
    fn signs_and_units() {
        let q = FieldSpec::Rational;
        let names: Vec<String> = ["1", "g", "x"].iter().map(|s| s.to_string()).collect();
        let v = vec![q.from_i64(2), q.from_i64(-1), q.parse("1/3").unwrap()];
        assert_eq!(element(&names, &v), "2 - g + 1/3·x");
        assert_eq!(element(&names, &[q.zero(), q.zero(), q.zero()]), "0");
        assert_eq!(element(&names, &[q.from_i64(-1), q.zero(), q.zero()]), "-1");
    }
}
