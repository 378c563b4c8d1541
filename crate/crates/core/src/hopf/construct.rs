use super::{HopfAlgebra, HopfParts};
use crate::error::{Error, Result};
use crate::linalg::Sparse;

/// The dual Hopf algebra on the coordinate dual basis: multiplication and
/// comultiplication are the transposes of comultiplication and
/// multiplication, the counit is evaluation at `1` and the antipode is `Sᵀ`.
pub fn dual(h: &HopfAlgebra) -> HopfAlgebra {
    let n = h.dim();
    let mut mult: Vec<Sparse> = vec![Vec::new(); n * n];
    for i in 0..n {
        for (j, k, c) in h.comult_basis(i) {
            mult[j * n + k].push((i, c.clone()));
        }
    }
    for prod in mult.iter_mut() {
        prod.sort_by_key(|(i, _)| *i);
    }
    let mut comult = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mul_basis(i, j) {
                comult[*k].push((i, j, c.clone()));
            }
        }
    }
    let parts = HopfParts {
        name: format!("dual({})", h.name()),
        field: h.field(),
        basis: h.basis_names().iter().map(|b| format!("f[{b}]")).collect(),
        mult,
        unit: h.counit().to_vec(),
        comult,
        counit: h.unit().to_vec(),
        antipode: h.antipode().transpose(),
    };
    HopfAlgebra::from_parts(parts).expect("dual of a well-shaped algebra is well-shaped")
}

fn antipode_inverse_or_err(h: &HopfAlgebra) -> Result<crate::linalg::Matrix> {
    h.antipode_inverse()
        .cloned()
        .ok_or_else(|| Error::NotInvertible("antipode".into()))
}

/// Opposite multiplication, with antipode `S⁻¹`.
pub fn op(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let n = h.dim();
    let antipode = antipode_inverse_or_err(h)?;
    let mut parts = h.clone().into_parts();
    parts.name = format!("op({})", h.name());
    parts.mult = (0..n * n).map(|ij| h.mul_basis(ij % n, ij / n).clone()).collect();
    parts.antipode = antipode;
    HopfAlgebra::from_parts(parts)
}

/// Co-opposite comultiplication, with antipode `S⁻¹`.
pub fn cop(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let antipode = antipode_inverse_or_err(h)?;
    let mut parts = h.clone().into_parts();
    parts.name = format!("cop({})", h.name());
    parts.comult = parts
        .comult
        .into_iter()
        .map(|terms| terms.into_iter().map(|(j, k, c)| (k, j, c)).collect())
        .collect();
    parts.antipode = antipode;
    HopfAlgebra::from_parts(parts)
}
