//! The φ-matrix: the grading-shift endomorphism minus the identity, written
//! in the coordinates of the full exceptional collection of the graded
//! singularity category.
//!
//! For `n` simples and Gorenstein parameter `a` the matrix has size
//! `n·|a|` and is block lower-bidiagonal: `-I` blocks on the diagonal,
//! `±I` blocks on the subdiagonal and a free final block column, which
//! records how the shifted-out object decomposes along the collection.
//! Its bottom block has `-I` added.
//!
//! Two sign conventions are in use. Taking orbits by the grading shift
//! gives `+I` on the subdiagonal ([`PhiConvention::ShiftOrbit`]); composing
//! with a desuspension, as for exterior algebras via projective space,
//! gives `-I` there ([`PhiConvention::Desuspended`]) because any additive
//! invariant sends the suspension to `-1`. Both give the same Smith normal
//! form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmat::ZMatrix;
use crate::json::{serialize_big, serialize_big_seq};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PhiConvention {
    /// Subdiagonal blocks `+I`.
    ShiftOrbit,
    /// Subdiagonal blocks `-I`.
    Desuspended,
}

impl PhiConvention {
    fn subdiagonal(self) -> i64 {
        match self {
            PhiConvention::ShiftOrbit => 1,
            PhiConvention::Desuspended => -1,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            PhiConvention::ShiftOrbit => "shift orbit (subdiagonal +1)",
            PhiConvention::Desuspended => "desuspended shift (subdiagonal -1)",
        }
    }
}

impl fmt::Display for PhiConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.describe())
    }
}

/// Input to [`build_phi`].
///
/// `last_column` has `n_simples · abs_a` rows and `n_simples` columns; for
/// local algebras it is a single column of multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiSpec {
    pub n_simples: usize,
    pub abs_a: usize,
    pub last_column: ZMatrix,
    pub convention: PhiConvention,
}

impl PhiSpec {
    pub fn size(&self) -> usize {
        self.n_simples * self.abs_a
    }
}

/// The signed binomial multiplicities `ψ_{-i} = (-1)^{i+1} C(g, i+1)`,
/// `0 ≤ i < g`, read off the Koszul resolution of `O(1)` on `P^{g-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KoszulColumn {
    pub generators: u32,
    /// `psi[i]` is `ψ_{-i}`.
    #[serde(serialize_with = "serialize_big_seq")]
    pub psi: Vec<BigInt>,
}

impl KoszulColumn {
    /// The column as it sits in φ: top row `ψ_{-(g-1)}`, bottom row `ψ_0`.
    pub fn as_matrix_column(&self) -> ZMatrix {
        ZMatrix::column(self.psi.iter().rev().cloned()).expect("g >= 1")
    }
}

pub fn koszul_column(g: u32) -> Result<KoszulColumn> {
    if g < 1 {
        return Err(Error::Domain(
            "Koszul column needs at least one generator".into(),
        ));
    }
    let mut binom = BigInt::one(); // C(g, 0)
    let mut psi = Vec::with_capacity(g as usize);
    for i in 0..g {
        // C(g, i+1) = C(g, i) · (g - i) / (i + 1)
        binom = binom * BigInt::from(g - i) / BigInt::from(i + 1);
        psi.push(if i % 2 == 0 {
            -binom.clone()
        } else {
            binom.clone()
        });
    }
    Ok(KoszulColumn { generators: g, psi })
}

pub fn build_phi(spec: &PhiSpec) -> Result<ZMatrix> {
    let n = spec.n_simples;
    if n == 0 || spec.abs_a == 0 {
        return Err(Error::Domain(format!(
            "phi needs positive simples and |a|, got n={n}, |a|={}",
            spec.abs_a
        )));
    }
    let size = spec.size();
    let lc = &spec.last_column;
    if lc.rows() != size || lc.cols() != n {
        return Err(Error::Dimension(format!(
            "last column block must be {size}x{n}, got {}x{}",
            lc.rows(),
            lc.cols()
        )));
    }
    let sub = BigInt::from(spec.convention.subdiagonal());
    let mut phi = ZMatrix::zeros(size, size);
    let last = size - n;
    for k in 0..spec.abs_a - 1 {
        for s in 0..n {
            phi.set(k * n + s, k * n + s, -1);
            phi.set((k + 1) * n + s, k * n + s, sub.clone());
        }
    }
    for i in 0..size {
        for s in 0..n {
            let mut x = lc.get(i, s).clone();
            if i == last + s {
                x -= 1;
            }
            phi.set(i, last + s, x);
        }
    }
    Ok(phi)
}

/// φ for the exterior algebra on `g` generators, desuspended convention.
pub fn exterior_phi(g: u32) -> Result<ZMatrix> {
    let col = koszul_column(g)?;
    build_phi(&PhiSpec {
        n_simples: 1,
        abs_a: g as usize,
        last_column: col.as_matrix_column(),
        convention: PhiConvention::Desuspended,
    })
}

/// Determinant together with its sign, since only `|det|` is convention-free.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedDeterminant {
    #[serde(serialize_with = "serialize_big")]
    pub value: BigInt,
    #[serde(serialize_with = "serialize_big")]
    pub abs: BigInt,
    pub sign: i8,
}

impl SignedDeterminant {
    pub fn of(m: &ZMatrix) -> Result<Self> {
        let value = m.det()?;
        let sign = if value.is_negative() {
            -1
        } else if value.is_positive() {
            1
        } else {
            0
        };
        Ok(SignedDeterminant {
            abs: value.abs(),
            value,
            sign,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnfClaimVerdict {
    pub holds: bool,
    #[serde(serialize_with = "serialize_big_seq")]
    pub phi_diagonal: Vec<BigInt>,
    #[serde(serialize_with = "serialize_big_seq")]
    pub cartan_diagonal: Vec<BigInt>,
    /// `(1, …, 1)` followed by `cartan_diagonal`, padded to φ's size.
    #[serde(serialize_with = "serialize_big_seq")]
    pub expected_diagonal: Vec<BigInt>,
}

/// Checks that `snf(φ) = diag(I, snf(C_Λ))`.
///
/// A mismatch is a `false` verdict; only non-square inputs are errors.
pub fn verify_snf_claim(phi: &ZMatrix, cartan: &ZMatrix) -> Result<SnfClaimVerdict> {
    for (what, m) in [("phi", phi), ("cartan", cartan)] {
        if !m.is_square() {
            return Err(Error::Dimension(format!(
                "{what} must be square, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
    }
    let phi_diagonal = phi.snf().invariant_factors();
    let cartan_diagonal = cartan.snf().invariant_factors();
    let ones = phi.rows().saturating_sub(cartan.rows());
    let expected_diagonal: Vec<BigInt> = std::iter::repeat(BigInt::one())
        .take(ones)
        .chain(cartan_diagonal.iter().cloned())
        .collect();
    Ok(SnfClaimVerdict {
        holds: phi.rows() >= cartan.rows() && phi_diagonal == expected_diagonal,
        phi_diagonal,
        cartan_diagonal,
        expected_diagonal,
    })
}
