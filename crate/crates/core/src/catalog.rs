//! Deterministic constructors for the built-in examples: group algebras and
//! their duals, the Sweedler algebra and Taft algebras.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{dual, HopfAlgebra, HopfParts};
use crate::linalg::{pow_mod, FieldSpec, Matrix, Scalar, Sparse};

/// A finite group given by its multiplication table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Checks the group axioms: closure, associativity, identity at index 0,
    /// inverses.
    pub fn from_table(name: impl Into<String>, elements: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = elements.len();
        let bad = |m: &str| Err(Error::Catalog(format!("not a group table: {m}")));
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("shape");
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return bad("element 0 is not the identity");
            }
            if !(0..n).any(|b| table[a][b] == 0 && table[b][a] == 0) {
                return bad("missing inverse");
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad("not associative");
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.into(), elements, table })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == 0).expect("group element has an inverse")
    }

    pub fn cyclic(n: usize) -> Self {
        let elements = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(format!("C{n}"), elements, table).expect("cyclic group")
    }

    /// Closure of permutation generators; elements named by shortest words,
    /// in breadth-first order.
    pub fn from_permutations(name: &str, generators: &[(&str, Vec<usize>)]) -> Self {
        let degree = generators[0].1.len();
        let id: Vec<usize> = (0..degree).collect();
        let mut perms = vec![id.clone()];
        let mut names = vec!["1".to_string()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (gname, g) in generators {
                // word·g acts as "first word, then g"
                let next: Vec<usize> = (0..degree).map(|x| g[perms[i][x]]).collect();
                if !index.contains_key(&next) {
                    index.insert(next.clone(), perms.len());
                    names.push(if names[i] == "1" { gname.to_string() } else { format!("{}{}", names[i], gname) });
                    perms.push(next);
                    queue.push_back(perms.len() - 1);
                }
            }
        }
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let ab: Vec<usize> = (0..degree).map(|x| b[a[x]]).collect();
                        index[&ab]
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(name, names, table).expect("permutation group")
    }

    pub fn symmetric3() -> Self {
        Self::from_permutations("S3", &[("s", vec![1, 0, 2]), ("t", vec![1, 2, 0])])
    }

    pub fn dihedral4() -> Self {
        Self::from_permutations("D4", &[("r", vec![1, 2, 3, 0]), ("s", vec![0, 3, 2, 1])])
    }

    pub fn quaternion8() -> Self {
        // units 1, i, j, k as 0..4; sign bit separate
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let elems: Vec<(bool, usize)> = [(false, 0), (true, 0), (false, 1), (true, 1), (false, 2), (true, 2), (false, 3), (true, 3)].to_vec();
        let names = elems
            .iter()
            .map(|(neg, u)| format!("{}{}", if *neg { "-" } else { "" }, ["1", "i", "j", "k"][*u]))
            .collect();
        let table = elems
            .iter()
            .map(|(sa, ua)| {
                elems
                    .iter()
                    .map(|(sb, ub)| {
                        let (s, u) = UNIT[*ua][*ub];
                        elems.iter().position(|e| *e == (s ^ sa ^ sb, u)).unwrap()
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table("Q8", names, table).expect("quaternion group")
    }
}

/// `kG` with `Δg = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(group: &FiniteGroup, field: FieldSpec) -> HopfAlgebra {
    let n = group.order();
    let one = field.one();
    let mult = (0..n * n).map(|ij| vec![(group.table[ij / n][ij % n], one.clone())]).collect();
    let mut unit = vec![field.zero(); n];
    unit[0] = one.clone();
    let comult = (0..n).map(|g| vec![(g, g, one.clone())]).collect();
    let mut antipode = Matrix::zeros(field, n, n);
    for g in 0..n {
        antipode[(group.inverse(g), g)] = one.clone();
    }
    let label = match field {
        FieldSpec::Rational => "Q".to_string(),
        FieldSpec::Prime { p } => format!("F{p}"),
    };
    HopfAlgebra::from_parts(HopfParts {
        name: format!("group-{}-{label}", group.name),
        field,
        basis: group.elements.clone(),
        mult,
        unit,
        comult,
        counit: vec![one; n],
        antipode,
    })
    .expect("group algebra shape")
}

/// The Sweedler algebra on `{1, g, x, gx}`; requires characteristic ≠ 2.
pub fn sweedler(field: FieldSpec) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::Catalog("the Sweedler algebra needs characteristic ≠ 2".into()));
    }
    let label = match field {
        FieldSpec::Rational => "Q".to_string(),
        FieldSpec::Prime { p } => format!("F{p}"),
    };
    Ok(taft_over(2, field.from_i64(-1), field).with_name(format!("sweedler-{label}")))
}

/// The Taft algebra of dimension `n²` over `F_p`, with `q` a primitive
/// `n`-th root of unity.
pub fn taft(n: usize, p: u32, q: u32) -> Result<HopfAlgebra> {
    if n < 2 {
        return Err(Error::Catalog(format!("n = {n}: need n ≥ 2")));
    }
    let field = FieldSpec::prime(p).map_err(|e| Error::Catalog(e.to_string()))?;
    if !(p as usize - 1).is_multiple_of(n) {
        return Err(Error::Catalog(format!("n = {n} does not divide p - 1 = {}", p - 1)));
    }
    let qm = q as u64 % p as u64;
    let order = (1..=n as u64).find(|&k| pow_mod(qm, k, p as u64) == 1);
    if order != Some(n as u64) {
        return Err(Error::Catalog(format!("q = {q} does not have multiplicative order {n} mod {p}")));
    }
    Ok(taft_over(n, field.from_i64(q as i64), field).with_name(format!("taft-{n}-F{p}")))
}

/// Basis `g^i x^j` at index `j·n + i`; `g^n = 1`, `x^n = 0`, `xg = q·gx`,
/// `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `S(x) = -g⁻¹x`.
fn taft_over(n: usize, q: Scalar, field: FieldSpec) -> HopfAlgebra {
    let dim = n * n;
    let idx = |i: usize, j: usize| j * n + i;
    let one = field.one();
    // (g^i x^j)(g^k x^l) = q^{jk} g^{i+k} x^{j+l}
    let mono = |a: usize, b: usize| -> Option<(usize, Scalar)> {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        if j + l >= n {
            return None;
        }
        Some((idx((i + k) % n, j + l), q.pow((j * k) as u64)))
    };
    let mult: Vec<Sparse> = (0..dim * dim).map(|ab| mono(ab / dim, ab % dim).into_iter().collect()).collect();
    let mul_el = |x: &BTreeMap<usize, Scalar>, y: &BTreeMap<usize, Scalar>| {
        let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (a, ca) in x {
            for (b, cb) in y {
                if let Some((k, c)) = mono(*a, *b) {
                    let v = out.entry(k).or_insert_with(|| field.zero());
                    *v += &(&(ca * cb) * &c);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    };
    let mul_t = |x: &BTreeMap<(usize, usize), Scalar>, y: &BTreeMap<(usize, usize), Scalar>| {
        let mut out: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for ((a1, a2), ca) in x {
            for ((b1, b2), cb) in y {
                if let (Some((k1, c1)), Some((k2, c2))) = (mono(*a1, *b1), mono(*a2, *b2)) {
                    let v = out.entry((k1, k2)).or_insert_with(|| field.zero());
                    *v += &(&(&(ca * cb) * &c1) * &c2);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    };
    let g = idx(1 % n, 0);
    let x = idx(0, 1);
    let g_inv = idx(n - 1, 0);
    let delta_g = BTreeMap::from([((g, g), one.clone())]);
    let delta_x = BTreeMap::from([((x, 0), one.clone()), ((g, x), one.clone())]);
    let s_g = BTreeMap::from([(g_inv, one.clone())]);
    let s_x = BTreeMap::from([(idx(n - 1, 1), -&one)]);
    let mut comult = vec![Vec::new(); dim];
    let mut antipode = Matrix::zeros(field, dim, dim);
    for j in 0..n {
        for i in 0..n {
            let mut d = BTreeMap::from([((0usize, 0usize), one.clone())]);
            let mut s = BTreeMap::from([(0usize, one.clone())]);
            for _ in 0..i {
                d = mul_t(&d, &delta_g);
            }
            for _ in 0..j {
                d = mul_t(&d, &delta_x);
                s = mul_el(&s, &s_x);
            }
            for _ in 0..i {
                s = mul_el(&s, &s_g);
            }
            let col = idx(i, j);
            comult[col] = d.into_iter().map(|((a, b), c)| (a, b, c)).collect();
            for (r, c) in s {
                antipode[(r, col)] = c;
            }
        }
    }
    let mut unit = vec![field.zero(); dim];
    unit[0] = one.clone();
    let counit = (0..dim).map(|k| if k < n { one.clone() } else { field.zero() }).collect();
    let basis = (0..dim)
        .map(|k| {
            let (i, j) = (k % n, k / n);
            let gp = match i {
                0 => String::new(),
                1 => "g".into(),
                _ => format!("g^{i}"),
            };
            let xp = match j {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{j}"),
            };
            if i == 0 && j == 0 {
                "1".to_string()
            } else {
                format!("{gp}{xp}")
            }
        })
        .collect();
    HopfAlgebra::from_parts(HopfParts {
        name: format!("taft-{n}"),
        field,
        basis,
        mult,
        unit,
        comult,
        counit,
        antipode,
    })
    .expect("taft shape")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum CatalogParams {
    Group { group: String },
    DualGroup { group: String },
    Sweedler { field: FieldSpec },
    Taft { n: usize, p: u32, q: u32 },
}

/// Verdicts known ahead of time for an entry, and where they come from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub ribbon_count: usize,
    pub spherical: bool,
    pub modular: bool,
    pub provenance: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    pub description: String,
    pub params: CatalogParams,
    pub expected: Option<Expected>,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<HopfAlgebra> {
        let h = match &self.params {
            CatalogParams::Group { group } => group_algebra(&named_group(group)?, FieldSpec::Rational),
            CatalogParams::DualGroup { group } => dual(&group_algebra(&named_group(group)?, FieldSpec::Rational)),
            CatalogParams::Sweedler { field } => sweedler(*field)?,
            CatalogParams::Taft { n, p, q } => taft(*n, *p, *q)?,
        };
        Ok(h.with_name(self.id.clone()))
    }
}

pub fn named_group(name: &str) -> Result<FiniteGroup> {
    match name {
        "S3" => Ok(FiniteGroup::symmetric3()),
        "D4" => Ok(FiniteGroup::dihedral4()),
        "Q8" => Ok(FiniteGroup::quaternion8()),
        _ => name
            .strip_prefix('C')
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| n >= 1)
            .map(FiniteGroup::cyclic)
            .ok_or_else(|| Error::Catalog(format!("unknown group {name}"))),
    }
}

const GROUP_FORMULA: &str = "|{l in Z(G): l^2 = 1}| * |{b in Hom(G, Q^x): b^2 = 1}|, enumerated from the group table";
const DUAL_FORMULA: &str = "|{b in Hom(G, Q^x)}| * |{l in G: l^2 = 1}| for abelian G; semisimple and cosemisimple";

/// The built-in examples, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    // (group, ribbon count from the group-algebra formula)
    let groups: [(&str, usize); 9] =
        [("C1", 1), ("C2", 4), ("C3", 1), ("C4", 4), ("C5", 1), ("C6", 4), ("S3", 2), ("D4", 8), ("Q8", 8)];
    for (g, count) in groups {
        out.push(CatalogEntry {
            id: format!("group-{g}-Q"),
            description: if g == "C1" {
                "trivial Hopf algebra Q".into()
            } else {
                format!("group algebra Q[{g}]")
            },
            params: CatalogParams::Group { group: g.into() },
            expected: Some(Expected { ribbon_count: count, spherical: true, modular: true, provenance: GROUP_FORMULA }),
        });
    }
    for (g, count) in [("C2", 4), ("C3", 1), ("C4", 4), ("C5", 1), ("C6", 4)] {
        out.push(CatalogEntry {
            id: format!("dual-group-{g}-Q"),
            description: format!("dual of Q[{g}]: functions on {g}"),
            params: CatalogParams::DualGroup { group: g.into() },
            expected: Some(Expected { ribbon_count: count, spherical: true, modular: true, provenance: DUAL_FORMULA }),
        });
    }
    for field in [FieldSpec::Rational, FieldSpec::Prime { p: 5 }] {
        out.push(CatalogEntry {
            id: format!("sweedler-{}", if field == FieldSpec::Rational { "Q".into() } else { "F5".to_string() }),
            description: format!("Sweedler's 4-dimensional Hopf algebra over {field}"),
            params: CatalogParams::Sweedler { field },
            expected: Some(Expected {
                ribbon_count: 0,
                spherical: false,
                modular: false,
                provenance: "a = g is not a square in G(H) = C2; alpha(g) = -1",
            }),
        });
    }
    out.push(CatalogEntry {
        id: "taft-3-F7".into(),
        description: "Taft algebra of dimension 9 over F_7, q = 2".into(),
        params: CatalogParams::Taft { n: 3, p: 7, q: 2 },
        expected: Some(Expected {
            ribbon_count: 1,
            spherical: false,
            modular: true,
            provenance: "squaring is bijective on C3, so the square roots of (a, alpha) are unique; direct certification",
        }),
    });
    out.push(CatalogEntry {
        id: "taft-4-F5".into(),
        description: "Taft algebra of dimension 16 over F_5, q = 2".into(),
        params: CatalogParams::Taft { n: 4, p: 5, q: 2 },
        expected: Some(Expected {
            ribbon_count: 0,
            spherical: false,
            modular: false,
            provenance: "a generates G(H) = C4 and is not a square",
        }),
    });
    out
}

pub fn lookup(id: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.id == id)
}
