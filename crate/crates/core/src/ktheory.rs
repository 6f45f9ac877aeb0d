//! Homotopy K-theory of stable categories over finite fields.
//!
//! For a matrix `C` acting on `E(k)^n`, the cone of `C` has a long exact
//! sequence of homotopy groups which splits into short exact sequences
//!
//! ```text
//! 0 → coker(C on KH_i(k)^n) → KH_i(cone C) → ker(C on KH_{i-1}(k)^n) → 0
//! ```
//!
//! With `C = C_Λ`, the cone is `E(stmod Λ)`. Over a finite field `F_q`,
//! `KH_*(F_q) = K_*(F_q)` is known completely: `K_0 = Z`,
//! `K_{2i-1} = Z/(q^i - 1)`, `K_{2i} = 0` for `i ≥ 1`, and nothing in
//! negative degrees.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::abgroup::AbGroup;
use crate::algebras::{is_prime, FamilyParams, GradedAlgebraDescriptor};
use crate::error::{Error, Result};
use crate::exactmat::ZMatrix;
use crate::json::serialize_big;

/// `F_q` with `q = p^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FiniteFieldSpec {
    pub q: u64,
    #[serde(skip)]
    pub p: u64,
    #[serde(skip)]
    pub exponent: u32,
}

impl FiniteFieldSpec {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::Domain(format!("{q} is not a prime power")));
        }
        let p = (2..)
            .take_while(|d: &u64| d.saturating_mul(*d) <= q)
            .find(|d| q % d == 0)
            .unwrap_or(q);
        let mut rest = q;
        let mut exponent = 0;
        while rest % p == 0 {
            rest /= p;
            exponent += 1;
        }
        if rest != 1 || !is_prime(p) {
            return Err(Error::Domain(format!("{q} is not a prime power")));
        }
        Ok(FiniteFieldSpec { q, p, exponent })
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        Self::new(p)
    }
}

/// Groups of the base field that feed the cone sequence. Each is cyclic:
/// order 0 stands for `Z`, order 1 for the trivial group.
pub trait BaseKTheory {
    fn cyclic_order(&self, degree: i64) -> BigInt;
}

impl BaseKTheory for FiniteFieldSpec {
    fn cyclic_order(&self, degree: i64) -> BigInt {
        match degree {
            d if d < 0 => BigInt::one(),
            0 => BigInt::zero(),
            d if d % 2 == 1 => {
                let i = u32::try_from((d + 1) / 2).expect("degree fits in u32");
                BigInt::from(self.q).pow(i) - 1
            }
            _ => BigInt::one(),
        }
    }
}

/// Quillen's `K_i(F_q)`.
pub fn quillen_k(field: &FiniteFieldSpec, i: u32) -> AbGroup {
    AbGroup::cyclic(field.cyclic_order(i64::from(i)))
}

/// Cokernel and kernel of `m` acting diagonally on `(Z/order)^n`.
fn action_on(m: &ZMatrix, order: &BigInt) -> Result<(AbGroup, AbGroup)> {
    if order.is_zero() {
        Ok((AbGroup::cokernel(m), AbGroup::integer_kernel(m)))
    } else if order.is_one() {
        Ok((AbGroup::trivial(), AbGroup::trivial()))
    } else {
        let (ker, coker) = AbGroup::mod_action_kernel_cokernel(m, order)?;
        Ok((coker, ker))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeGroup {
    #[serde(rename = "i")]
    pub degree: u32,
    /// The split candidate `coker_part ⊕ ker_part`.
    pub group: AbGroup,
    pub ambiguous: bool,
    pub coker_part: AbGroup,
    pub ker_part: AbGroup,
}

/// The homotopy groups of `cone(m)` for `E = KH` over `base`, degrees
/// `0..=max_degree`.
///
/// A degree is flagged ambiguous when its extension problem is not
/// settled: the cokernel part is nontrivial and the kernel part has torsion.
/// A free kernel part always splits off.
pub fn cone_homotopy_groups(
    m: &ZMatrix,
    base: &impl BaseKTheory,
    max_degree: u32,
) -> Result<Vec<DegreeGroup>> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "cone needs an endomorphism, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let mut out = Vec::with_capacity(max_degree as usize + 1);
    for degree in 0..=max_degree {
        let i = i64::from(degree);
        let (coker_part, _) = action_on(m, &base.cyclic_order(i))?;
        let (_, ker_part) = action_on(m, &base.cyclic_order(i - 1))?;
        let ambiguous = !coker_part.is_trivial() && ker_part.has_torsion();
        out.push(DegreeGroup {
            degree,
            group: coker_part.direct_sum(&ker_part),
            ambiguous,
            coker_part,
            ker_part,
        });
    }
    Ok(out)
}

/// `E(stmod Λ) ≅ cone(E(k)^n --C_Λ--> E(k)^n)`, valid for every
/// A¹-homotopy invariant `E`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConePresentation {
    pub matrix: ZMatrix,
    pub rank: usize,
    pub template: String,
    #[serde(serialize_with = "serialize_big")]
    pub determinant: BigInt,
    /// Unimodular matrix: every invariant vanishes.
    pub phantom: bool,
}

pub fn symbolic_cone(algebra: &GradedAlgebraDescriptor) -> ConePresentation {
    let matrix = algebra.cartan().clone();
    let rank = algebra.n_simples();
    let determinant = matrix.det().expect("cartan matrices are square");
    let template = if rank == 1 {
        format!("cone(E(k) --·{}--> E(k))", matrix.get(0, 0))
    } else {
        format!("cone(E(k)^{rank} --C_Λ--> E(k)^{rank})")
    };
    ConePresentation {
        phantom: determinant.abs().is_one(),
        matrix,
        rank,
        template,
        determinant,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub algebra: GradedAlgebraDescriptor,
    pub base: FiniteFieldSpec,
    pub groups: Vec<DegreeGroup>,
    pub symbolic_cone: ConePresentation,
    pub notes: Vec<String>,
}

impl InvariantResult {
    pub fn degree(&self, i: u32) -> Option<&DegreeGroup> {
        self.groups.iter().find(|g| g.degree == i)
    }

    pub fn any_ambiguous(&self) -> bool {
        self.groups.iter().any(|g| g.ambiguous)
    }
}

pub fn stable_kh(
    algebra: &GradedAlgebraDescriptor,
    base: &FiniteFieldSpec,
    max_degree: u32,
) -> Result<InvariantResult> {
    let groups = cone_homotopy_groups(algebra.cartan(), base, max_degree)?;
    let mut notes = Vec::new();
    if let FamilyParams::ElemAbelianGroupAlgebra { p, r } = algebra.params() {
        if *p == base.q {
            notes.push(format!(
                "KH_i(C*(BE^{r}; F_{p})) ≅ K_i(F_{p}) for all i >= 0, E^{r} = (Z/{p})^{r}"
            ));
        }
    }
    if algebra.gorenstein_param_is_extrapolated() {
        notes.push(format!(
            "extrapolated: Gorenstein parameter {} from the socle-degree rule",
            algebra.gorenstein_param()
        ));
    }
    Ok(InvariantResult {
        algebra: algebra.clone(),
        base: *base,
        groups,
        symbolic_cone: symbolic_cone(algebra),
        notes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K0Verdict {
    pub holds: bool,
    pub kh0: AbGroup,
    pub cokernel: AbGroup,
}

/// Degree 0 of the engine must equal `coker(C_Λ) ≅ K_0(stmod Λ)`.
pub fn k0_consistency(
    algebra: &GradedAlgebraDescriptor,
    base: &FiniteFieldSpec,
) -> Result<K0Verdict> {
    let kh = stable_kh(algebra, base, 0)?;
    let kh0 = kh.groups[0].group.clone();
    let cokernel = AbGroup::cokernel(algebra.cartan());
    Ok(K0Verdict {
        holds: kh0 == cokernel && !kh.groups[0].ambiguous,
        kh0,
        cokernel,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhantomScanEntry {
    pub algebra: GradedAlgebraDescriptor,
    #[serde(serialize_with = "serialize_big")]
    pub determinant: BigInt,
    pub is_phantom: bool,
}

/// Flags descriptors whose Cartan matrix is unimodular.
pub fn phantom_scan(algebras: &[GradedAlgebraDescriptor]) -> Vec<PhantomScanEntry> {
    algebras
        .iter()
        .map(|a| {
            let determinant = a.cartan().det().expect("cartan matrices are square");
            PhantomScanEntry {
                algebra: a.clone(),
                is_phantom: determinant.abs().is_one(),
                determinant,
            }
        })
        .collect()
}
