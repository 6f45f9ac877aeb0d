//! Graded self-injective algebra families and their Cartan data.
//!
//! Only basic algebras whose simples are one-dimensional are representable.
//! Cartan entry `(i, j)` is `dim Hom(P_i, P_j)`, the multiplicity of the
//! simple `S_i` in the projective `P_j`; with one-dimensional simples the
//! entries therefore sum to `dim Λ`.
//!
//! Built-in local families use generators in degree 1 and take the
//! Gorenstein parameter to be minus the top socle degree.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactmat::ZMatrix;
use crate::json::{big_to_value, value_to_big};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Exterior,
    TruncatedPoly,
    ElemAbelianGroupAlgebra,
    Nakayama,
    Tensor,
    Raw,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Exterior => "exterior",
            Family::TruncatedPoly => "truncated_poly",
            Family::ElemAbelianGroupAlgebra => "elem_abelian_group_algebra",
            Family::Nakayama => "nakayama",
            Family::Tensor => "tensor",
            Family::Raw => "raw",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Family-specific construction parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyParams {
    Exterior {
        generators: u32,
    },
    TruncatedPoly {
        modulus: u64,
    },
    ElemAbelianGroupAlgebra {
        p: u64,
        r: u32,
    },
    Nakayama {
        simples: usize,
        length: usize,
    },
    Tensor {
        factors: Vec<GradedAlgebraDescriptor>,
    },
    Raw,
}

impl FamilyParams {
    pub fn family(&self) -> Family {
        match self {
            FamilyParams::Exterior { .. } => Family::Exterior,
            FamilyParams::TruncatedPoly { .. } => Family::TruncatedPoly,
            FamilyParams::ElemAbelianGroupAlgebra { .. } => Family::ElemAbelianGroupAlgebra,
            FamilyParams::Nakayama { .. } => Family::Nakayama,
            FamilyParams::Tensor { .. } => Family::Tensor,
            FamilyParams::Raw => Family::Raw,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlgebraDescriptor {
    params: FamilyParams,
    n_simples: usize,
    cartan: ZMatrix,
    total_dim: BigInt,
    gorenstein_param: i64,
}

impl GradedAlgebraDescriptor {
    /// Exterior algebra on `g` generators: `dim = 2^g`, `a = -g`.
    pub fn exterior(g: u32) -> Result<Self> {
        if g < 1 {
            return Err(Error::Domain(
                "exterior algebra needs at least one generator".into(),
            ));
        }
        let dim = BigInt::from(2).pow(g);
        Ok(Self::local(
            FamilyParams::Exterior { generators: g },
            dim,
            -i64::from(g),
        ))
    }

    /// `k[x]/(x^m)`: `dim = m`, `a = -(m - 1)`.
    pub fn truncated_poly(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::Domain(format!(
                "truncated polynomial needs m >= 2, got {m}"
            )));
        }
        let a = -i64::try_from(m - 1)
            .map_err(|_| Error::Domain(format!("truncation degree {m} too large")))?;
        Ok(Self::local(
            FamilyParams::TruncatedPoly { modulus: m },
            BigInt::from(m),
            a,
        ))
    }

    /// `F_p[(Z/p)^r] ≅ F_p[x_1..x_r]/(x_i^p)`: `dim = p^r`, `a = -r(p - 1)`.
    pub fn elem_abelian_group_algebra(p: u64, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if r < 1 {
            return Err(Error::Domain(
                "elementary abelian group needs rank >= 1".into(),
            ));
        }
        let socle = (p - 1)
            .checked_mul(u64::from(r))
            .and_then(|s| i64::try_from(s).ok())
            .ok_or_else(|| Error::Domain("socle degree overflows".into()))?;
        let dim = BigInt::from(p).pow(r);
        Ok(Self::local(
            FamilyParams::ElemAbelianGroupAlgebra { p, r },
            dim,
            -socle,
        ))
    }

    /// Self-injective Nakayama algebra on the cyclic quiver with `n` vertices
    /// and Loewy length `len`: Cartan matrix `Σ_{t<len} P^t` for the cyclic
    /// permutation `P` with `P[i][j] = 1` iff `i ≡ j + 1 (mod n)`.
    pub fn nakayama(n: usize, len: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain(
                "nakayama algebra needs at least one simple".into(),
            ));
        }
        if len < 2 {
            return Err(Error::Domain(format!(
                "Loewy length must be >= 2, got {len}"
            )));
        }
        let mut shift = ZMatrix::zeros(n, n);
        for j in 0..n {
            shift.set((j + 1) % n, j, 1);
        }
        let mut power = ZMatrix::identity(n);
        let mut cartan = ZMatrix::zeros(n, n);
        for _ in 0..len {
            cartan = cartan.try_add(&power)?;
            power = power.try_mul(&shift)?;
        }
        let a = -i64::try_from(len - 1).map_err(|_| Error::Domain("length too large".into()))?;
        Ok(GradedAlgebraDescriptor {
            params: FamilyParams::Nakayama {
                simples: n,
                length: len,
            },
            n_simples: n,
            cartan,
            total_dim: BigInt::from(n) * BigInt::from(len),
            gorenstein_param: a,
        })
    }

    /// `a ⊗_k b`: Cartan matrices take the Kronecker product, dimensions and
    /// simple counts multiply, socle degrees add.
    pub fn tensor(a: &Self, b: &Self) -> Result<Self> {
        let mut factors = Vec::new();
        for x in [a, b] {
            match &x.params {
                FamilyParams::Tensor { factors: inner } => factors.extend(inner.iter().cloned()),
                _ => factors.push(x.clone()),
            }
        }
        let gorenstein_param = a
            .gorenstein_param
            .checked_add(b.gorenstein_param)
            .ok_or_else(|| Error::Domain("Gorenstein parameter overflows".into()))?;
        Ok(GradedAlgebraDescriptor {
            params: FamilyParams::Tensor { factors },
            n_simples: a.n_simples * b.n_simples,
            cartan: a.cartan.kron(&b.cartan),
            total_dim: &a.total_dim * &b.total_dim,
            gorenstein_param,
        })
    }

    /// Folds [`tensor`](Self::tensor) over a non-empty list.
    pub fn tensor_all(factors: &[Self]) -> Result<Self> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::Domain("tensor product of zero factors".into()))?;
        let mut acc = first.clone();
        for f in rest {
            acc = Self::tensor(&acc, f)?;
        }
        Ok(acc)
    }

    /// Validated descriptor from explicit data.
    pub fn raw(
        cartan: ZMatrix,
        total_dim: BigInt,
        n_simples: usize,
        gorenstein_param: i64,
    ) -> Result<Self> {
        if !cartan.is_square() {
            return Err(Error::schema("cartan", "not square"));
        }
        if cartan.entries().iter().any(Signed::is_negative) {
            return Err(Error::schema("cartan", "has negative entries"));
        }
        if cartan.rows() != n_simples {
            return Err(Error::schema(
                "simples",
                format!("is {n_simples} but cartan is {0}x{0}", cartan.rows()),
            ));
        }
        if !total_dim.is_positive() {
            return Err(Error::schema("dim", "must be positive"));
        }
        if gorenstein_param > 0 {
            return Err(Error::schema("gorenstein_param", "must be <= 0"));
        }
        let sum = cartan.sum_entries();
        if sum != total_dim {
            return Err(Error::schema(
                "dim",
                format!("is {total_dim} but cartan entries sum to {sum}"),
            ));
        }
        Ok(GradedAlgebraDescriptor {
            params: FamilyParams::Raw,
            n_simples,
            cartan,
            total_dim,
            gorenstein_param,
        })
    }

    pub fn from_json_str(doc: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(doc)
            .map_err(|e| Error::schema("document", format!("is not valid JSON: {e}")))?;
        Self::from_json_value(&value)
    }

    pub fn from_json_value(value: &Value) -> Result<Self> {
        let doc: DescriptorDoc = serde_json::from_value(value.clone())
            .map_err(|e| Error::schema("document", e.to_string()))?;
        doc.build()
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.to_path_buf(),
            message: e.to_string(),
            not_found: e.kind() == std::io::ErrorKind::NotFound,
        })?;
        Self::from_json_str(&text)
    }

    fn local(params: FamilyParams, dim: BigInt, a: i64) -> Self {
        GradedAlgebraDescriptor {
            params,
            n_simples: 1,
            cartan: ZMatrix::scalar(dim.clone()),
            total_dim: dim,
            gorenstein_param: a,
        }
    }

    pub fn family(&self) -> Family {
        self.params.family()
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn n_simples(&self) -> usize {
        self.n_simples
    }

    pub fn cartan(&self) -> &ZMatrix {
        &self.cartan
    }

    pub fn total_dim(&self) -> &BigInt {
        &self.total_dim
    }

    pub fn gorenstein_param(&self) -> i64 {
        self.gorenstein_param
    }

    pub fn is_local(&self) -> bool {
        self.n_simples == 1
    }

    /// True when the Gorenstein parameter comes from the socle-degree rule
    /// rather than a known closed form or user input.
    pub fn gorenstein_param_is_extrapolated(&self) -> bool {
        !matches!(
            self.params,
            FamilyParams::Exterior { .. } | FamilyParams::Raw
        )
    }

    /// Compares the algebraic data, ignoring how the descriptor was built.
    pub fn same_data(&self, other: &Self) -> bool {
        self.n_simples == other.n_simples
            && self.cartan == other.cartan
            && self.total_dim == other.total_dim
            && self.gorenstein_param == other.gorenstein_param
    }

    /// Short human-readable label such as `exterior(g=3)`.
    pub fn label(&self) -> String {
        match &self.params {
            FamilyParams::Exterior { generators } => format!("exterior(g={generators})"),
            FamilyParams::TruncatedPoly { modulus } => format!("truncated_poly(m={modulus})"),
            FamilyParams::ElemAbelianGroupAlgebra { p, r } => {
                format!("elem_abelian_group_algebra(p={p}, r={r})")
            }
            FamilyParams::Nakayama { simples, length } => {
                format!("nakayama(n={simples}, len={length})")
            }
            FamilyParams::Tensor { factors } => {
                let parts: Vec<String> = factors.iter().map(Self::label).collect();
                format!("tensor({})", parts.join(" ⊗ "))
            }
            FamilyParams::Raw => format!("raw({0}x{0})", self.n_simples),
        }
    }
}

pub fn exterior(g: u32) -> Result<GradedAlgebraDescriptor> {
    GradedAlgebraDescriptor::exterior(g)
}

pub fn truncated_poly(m: u64) -> Result<GradedAlgebraDescriptor> {
    GradedAlgebraDescriptor::truncated_poly(m)
}

pub fn elem_abelian_group_algebra(p: u64, r: u32) -> Result<GradedAlgebraDescriptor> {
    GradedAlgebraDescriptor::elem_abelian_group_algebra(p, r)
}

pub fn nakayama(n: usize, len: usize) -> Result<GradedAlgebraDescriptor> {
    GradedAlgebraDescriptor::nakayama(n, len)
}

pub fn tensor(
    a: &GradedAlgebraDescriptor,
    b: &GradedAlgebraDescriptor,
) -> Result<GradedAlgebraDescriptor> {
    GradedAlgebraDescriptor::tensor(a, b)
}

pub fn from_file(path: &Path) -> Result<GradedAlgebraDescriptor> {
    GradedAlgebraDescriptor::from_file(path)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Echo form: `{"family", "params", "simples", "cartan", "dim", "gorenstein_param"}`.
impl Serialize for GradedAlgebraDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(6))?;
        map.serialize_entry("family", self.family().tag())?;
        map.serialize_entry("params", &ParamsEcho(&self.params))?;
        map.serialize_entry("simples", &self.n_simples)?;
        map.serialize_entry("cartan", &self.cartan)?;
        map.serialize_entry("dim", &big_to_value(&self.total_dim))?;
        map.serialize_entry("gorenstein_param", &self.gorenstein_param)?;
        map.end()
    }
}

struct ParamsEcho<'a>(&'a FamilyParams);

impl Serialize for ParamsEcho<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        match self.0 {
            FamilyParams::Exterior { generators } => {
                map.serialize_entry("generators", generators)?
            }
            FamilyParams::TruncatedPoly { modulus } => map.serialize_entry("modulus", modulus)?,
            FamilyParams::ElemAbelianGroupAlgebra { p, r } => {
                map.serialize_entry("p", p)?;
                map.serialize_entry("r", r)?;
            }
            FamilyParams::Nakayama { simples, length } => {
                map.serialize_entry("simples", simples)?;
                map.serialize_entry("length", length)?;
            }
            FamilyParams::Tensor { factors } => map.serialize_entry("factors", factors)?,
            FamilyParams::Raw => {}
        }
        map.end()
    }
}

/// On-disk descriptor document.
#[derive(Debug, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
enum DescriptorDoc {
    Exterior {
        generators: u32,
    },
    TruncatedPoly {
        modulus: u64,
    },
    ElemAbelianGroupAlgebra {
        p: u64,
        r: u32,
    },
    Nakayama {
        simples: usize,
        length: usize,
    },
    Tensor {
        factors: Vec<Value>,
    },
    Raw {
        cartan: Value,
        dim: Value,
        simples: usize,
        gorenstein_param: i64,
    },
}

impl DescriptorDoc {
    fn build(self) -> Result<GradedAlgebraDescriptor> {
        let domain_as_schema = |field: &'static str| {
            move |e: Error| match e {
                Error::Domain(msg) => Error::schema(field, msg),
                other => other,
            }
        };
        match self {
            DescriptorDoc::Exterior { generators } => GradedAlgebraDescriptor::exterior(generators)
                .map_err(domain_as_schema("generators")),
            DescriptorDoc::TruncatedPoly { modulus } => {
                GradedAlgebraDescriptor::truncated_poly(modulus)
                    .map_err(domain_as_schema("modulus"))
            }
            DescriptorDoc::ElemAbelianGroupAlgebra { p, r } => {
                GradedAlgebraDescriptor::elem_abelian_group_algebra(p, r)
                    .map_err(domain_as_schema(if is_prime(p) { "r" } else { "p" }))
            }
            DescriptorDoc::Nakayama { simples, length } => {
                GradedAlgebraDescriptor::nakayama(simples, length).map_err(domain_as_schema(
                    if simples < 1 { "simples" } else { "length" },
                ))
            }
            DescriptorDoc::Tensor { factors } => {
                if factors.is_empty() {
                    return Err(Error::schema("factors", "must be non-empty"));
                }
                let built = factors
                    .iter()
                    .map(GradedAlgebraDescriptor::from_json_value)
                    .collect::<Result<Vec<_>>>()?;
                GradedAlgebraDescriptor::tensor_all(&built)
            }
            DescriptorDoc::Raw {
                cartan,
                dim,
                simples,
                gorenstein_param,
            } => {
                let cartan = parse_cartan(&cartan)?;
                let dim =
                    value_to_big(&dim).ok_or_else(|| Error::schema("dim", "must be an integer"))?;
                GradedAlgebraDescriptor::raw(cartan, dim, simples, gorenstein_param)
            }
        }
    }
}

fn parse_cartan(v: &Value) -> Result<ZMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::schema("cartan", "must be an array of arrays"))?;
    if rows.is_empty() {
        return Err(Error::schema("cartan", "is empty"));
    }
    let mut parsed = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| Error::schema("cartan", "must be an array of arrays"))?;
        let row = row
            .iter()
            .map(|x| {
                value_to_big(x).ok_or_else(|| Error::schema("cartan", "entries must be integers"))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != rows.len() {
            return Err(Error::schema("cartan", "not square"));
        }
        parsed.push(row);
    }
    ZMatrix::from_rows(parsed).map_err(|_| Error::schema("cartan", "not square"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn m(rows: &[&[i64]]) -> ZMatrix {
        ZMatrix::from_rows(rows.iter().map(|r| r.iter().copied())).unwrap()
    }

    #[test]
    fn exterior_data() {
        let e = exterior(3).unwrap();
        assert_eq!(e.total_dim(), &b(8));
        assert_eq!(e.cartan(), &ZMatrix::scalar(8));
        assert_eq!(e.gorenstein_param(), -3);
        let e1 = exterior(1).unwrap();
        assert_eq!((e1.total_dim(), e1.gorenstein_param()), (&b(2), -1));
        assert!(matches!(exterior(0), Err(Error::Domain(_))));
    }

    #[test]
    fn group_algebra_data() {
        let g = elem_abelian_group_algebra(2, 3).unwrap();
        assert_eq!(g.cartan(), &ZMatrix::scalar(8));
        assert!(elem_abelian_group_algebra(3, 1)
            .unwrap()
            .same_data(&truncated_poly(3).unwrap()));
        assert_eq!(
            elem_abelian_group_algebra(5, 2).unwrap().gorenstein_param(),
            -8
        );
        assert!(matches!(
            elem_abelian_group_algebra(4, 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            elem_abelian_group_algebra(1, 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn truncated_data() {
        assert!(truncated_poly(2).unwrap().same_data(&exterior(1).unwrap()));
        assert_eq!(truncated_poly(4).unwrap().cartan(), &ZMatrix::scalar(4));
        assert!(matches!(truncated_poly(1), Err(Error::Domain(_))));
    }

    #[test]
    fn nakayama_data() {
        assert!(nakayama(1, 5)
            .unwrap()
            .same_data(&truncated_poly(5).unwrap()));
        assert_eq!(nakayama(2, 2).unwrap().cartan(), &m(&[&[1, 1], &[1, 1]]));
        let n33 = nakayama(3, 3).unwrap();
        assert_eq!(n33.cartan(), &m(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]));
        assert_eq!(n33.cartan().det().unwrap(), b(0));
        assert_eq!(
            nakayama(3, 4).unwrap().cartan(),
            &m(&[&[2, 1, 1], &[1, 2, 1], &[1, 1, 2]])
        );
        assert!(nakayama(2, 1).is_err());
        assert!(nakayama(0, 3).is_err());
    }

    #[test]
    fn nakayama_uniserial_orientation() {
        // P_0 has composition factors S_0, S_1 for len 2 on 3 vertices
        let c = nakayama(3, 2).unwrap().cartan().clone();
        assert_eq!(c, m(&[&[1, 0, 1], &[1, 1, 0], &[0, 1, 1]]));
    }

    #[test]
    fn tensor_data() {
        let e1 = exterior(1).unwrap();
        let t = tensor(&e1, &e1).unwrap();
        assert!(t.same_data(&exterior(2).unwrap()));
        assert_eq!(t.family(), Family::Tensor);

        let tp = truncated_poly(3).unwrap();
        let t3 = GradedAlgebraDescriptor::tensor_all(&[tp.clone(), tp.clone(), tp]).unwrap();
        assert!(t3.same_data(&elem_abelian_group_algebra(3, 3).unwrap()));
        match t3.params() {
            FamilyParams::Tensor { factors } => assert_eq!(factors.len(), 3),
            other => panic!("unexpected params {other:?}"),
        }

        let nt = tensor(&nakayama(2, 2).unwrap(), &truncated_poly(2).unwrap()).unwrap();
        assert_eq!(nt.n_simples(), 2);
        assert_eq!(nt.cartan(), &m(&[&[2, 2], &[2, 2]]));
        assert_eq!(nt.total_dim(), &b(8));
        assert!(GradedAlgebraDescriptor::tensor_all(&[]).is_err());
    }

    #[test]
    fn file_documents() {
        let raw = GradedAlgebraDescriptor::from_json_str(
            r#"{"family":"raw","cartan":[[8]],"dim":8,"simples":1,"gorenstein_param":-3}"#,
        )
        .unwrap();
        assert!(raw.same_data(&exterior(3).unwrap()));
        assert_eq!(raw.family(), Family::Raw);

        let e = GradedAlgebraDescriptor::from_json_str(r#"{"family":"exterior","generators":2}"#)
            .unwrap();
        assert_eq!(e, exterior(2).unwrap());

        let r = GradedAlgebraDescriptor::from_json_str(
            r#"{"family":"raw","cartan":[[1,2],[3,4]],"dim":10,"simples":2,"gorenstein_param":-1}"#,
        )
        .unwrap();
        assert_eq!(r.cartan(), &m(&[&[1, 2], &[3, 4]]));

        let t = GradedAlgebraDescriptor::from_json_str(
            r#"{"family":"tensor","factors":[{"family":"nakayama","simples":2,"length":2},
                {"family":"truncated_poly","modulus":2}]}"#,
        )
        .unwrap();
        assert_eq!(t.cartan(), &m(&[&[2, 2], &[2, 2]]));

        let g = GradedAlgebraDescriptor::from_json_str(
            r#"{"family":"elem_abelian_group_algebra","p":2,"r":3}"#,
        )
        .unwrap();
        assert_eq!(g.total_dim(), &b(8));
    }

    #[test]
    fn accepts_big_entries_as_strings() {
        let doc = r#"{"family":"raw","cartan":[["18446744073709551616"]],
            "dim":"18446744073709551616","simples":1,"gorenstein_param":-64}"#;
        let d = GradedAlgebraDescriptor::from_json_str(doc).unwrap();
        assert!(d.same_data(&exterior(64).unwrap()));
    }

    fn schema_field(doc: &str) -> String {
        match GradedAlgebraDescriptor::from_json_str(doc) {
            Err(Error::Schema { field, .. }) => field,
            other => panic!("expected schema violation, got {other:?}"),
        }
    }

    #[test]
    fn validation_errors_name_the_field() {
        let e = GradedAlgebraDescriptor::from_json_str(
            r#"{"family":"raw","cartan":[[1,2]],"dim":3,"simples":1,"gorenstein_param":-1}"#,
        )
        .unwrap_err();
        assert_eq!(e.to_string(), "schema_violation: cartan not square");
        assert_eq!(
            schema_field(
                r#"{"family":"raw","cartan":[[1,-2],[0,1]],"dim":0,"simples":2,"gorenstein_param":-1}"#
            ),
            "cartan"
        );
        assert_eq!(
            schema_field(
                r#"{"family":"raw","cartan":[[8]],"dim":8,"simples":1,"gorenstein_param":2}"#
            ),
            "gorenstein_param"
        );
        assert_eq!(
            schema_field(
                r#"{"family":"raw","cartan":[[8]],"dim":9,"simples":1,"gorenstein_param":-3}"#
            ),
            "dim"
        );
        assert_eq!(
            schema_field(
                r#"{"family":"raw","cartan":[[8]],"dim":8,"simples":2,"gorenstein_param":-3}"#
            ),
            "simples"
        );
        assert_eq!(
            schema_field(r#"{"family":"exterior","generators":0}"#),
            "generators"
        );
        assert_eq!(
            schema_field(r#"{"family":"elem_abelian_group_algebra","p":6,"r":1}"#),
            "p"
        );
        assert_eq!(
            schema_field(r#"{"family":"tensor","factors":[]}"#),
            "factors"
        );
    }

    #[test]
    fn unknown_fields_and_families_rejected() {
        assert_eq!(
            schema_field(r#"{"family":"exterior","generators":2,"colour":1}"#),
            "document"
        );
        assert_eq!(
            schema_field(r#"{"family":"weyl","generators":2}"#),
            "document"
        );
        assert_eq!(schema_field(r#"{"generators":2}"#), "document");
        assert_eq!(schema_field("not json"), "document");
    }

    #[test]
    fn missing_file_is_not_found() {
        let e = from_file(Path::new("/definitely/not/here.json")).unwrap_err();
        assert_eq!(e.code(), "file_not_found");
    }

    #[test]
    fn echo_round_trips_through_raw() {
        let d = nakayama(3, 4).unwrap();
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(v["family"], "nakayama");
        assert_eq!(v["params"]["length"], 4);
        let raw = serde_json::json!({
            "family": "raw",
            "cartan": v["cartan"],
            "dim": v["dim"],
            "simples": v["simples"],
            "gorenstein_param": v["gorenstein_param"],
        });
        assert!(GradedAlgebraDescriptor::from_json_value(&raw)
            .unwrap()
            .same_data(&d));
    }

    #[test]
    fn labels() {
        assert_eq!(exterior(3).unwrap().label(), "exterior(g=3)");
        let t = tensor(&exterior(1).unwrap(), &nakayama(2, 2).unwrap()).unwrap();
        assert_eq!(t.label(), "tensor(exterior(g=1) ⊗ nakayama(n=2, len=2))");
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
