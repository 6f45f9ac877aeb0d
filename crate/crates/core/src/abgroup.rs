//! Finitely generated abelian groups in invariant-factor form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmat::ZMatrix;

/// `Z^free_rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_k` with `2 ≤ t_1 | t_2 | … | t_k`.
///
/// The representation is canonical, so structural equality is group
/// isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::Infinite => write!(f, "infinite"),
        }
    }
}

impl AbGroup {
    pub fn trivial() -> Self {
        AbGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/n`; `n = 0` gives `Z` and `|n| = 1` the trivial group.
    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        AbGroup::from_cyclic_orders(0, [n.into()])
    }

    /// Direct sum of `Z^free_rank` with cyclic groups of the given orders,
    /// in any order. Order 0 contributes a copy of `Z`; signs are ignored.
    pub fn from_cyclic_orders(free_rank: usize, orders: impl IntoIterator<Item = BigInt>) -> Self {
        let mut free_rank = free_rank;
        let mut finite = Vec::new();
        for n in orders {
            let n = n.abs();
            if n.is_zero() {
                free_rank += 1;
            } else if !n.is_one() {
                finite.push(n);
            }
        }
        AbGroup {
            free_rank,
            torsion: divisibility_chain(finite),
        }
    }

    /// Accepts an already-canonical chain and rejects anything else.
    pub fn from_invariant_factors(free_rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        let two = BigInt::from(2);
        if let Some(t) = torsion.iter().find(|t| **t < two) {
            return Err(Error::Domain(format!("invariant factor {t} is below 2")));
        }
        if let Some(w) = torsion.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::Domain(format!(
                "invariant factors {} and {} do not form a divisibility chain",
                w[0], w[1]
            )));
        }
        Ok(AbGroup { free_rank, torsion })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn has_torsion(&self) -> bool {
        !self.torsion.is_empty()
    }

    pub fn order(&self) -> GroupOrder {
        if self.free_rank > 0 {
            GroupOrder::Infinite
        } else {
            GroupOrder::Finite(self.torsion.iter().product())
        }
    }

    pub fn direct_sum(&self, other: &AbGroup) -> AbGroup {
        AbGroup::from_cyclic_orders(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    /// `Z^rows / image(m)`.
    pub fn cokernel(m: &ZMatrix) -> AbGroup {
        let factors = m.snf().invariant_factors();
        let nonzero = factors.iter().filter(|d| !d.is_zero()).count();
        AbGroup::from_cyclic_orders(
            m.rows() - nonzero,
            factors.into_iter().filter(|d| !d.is_zero()),
        )
    }

    /// Kernel of `m` acting on `Z^cols`, which is free of rank `cols - rank`.
    pub fn integer_kernel(m: &ZMatrix) -> AbGroup {
        AbGroup::free(m.cols() - m.rank())
    }

    /// Kernel and cokernel of the endomorphism of `(Z/modulus)^N` induced by
    /// the square matrix `m`.
    ///
    /// With `snf(m) = diag(d_1, …, d_N)` both groups are
    /// `⊕ Z/gcd(d_i, modulus)`, reading `gcd(0, modulus)` as `modulus`.
    pub fn mod_action_kernel_cokernel(m: &ZMatrix, modulus: &BigInt) -> Result<(AbGroup, AbGroup)> {
        if *modulus < BigInt::from(2) {
            return Err(Error::Domain(format!(
                "modulus must be at least 2, got {modulus}"
            )));
        }
        if !m.is_square() {
            return Err(Error::Dimension(format!(
                "mod action needs a square matrix, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let orders: Vec<BigInt> = m
            .snf()
            .invariant_factors()
            .iter()
            .map(|d| {
                if d.is_zero() {
                    modulus.clone()
                } else {
                    d.gcd(modulus)
                }
            })
            .collect();
        let g = AbGroup::from_cyclic_orders(0, orders);
        Ok((g.clone(), g))
    }
}

/// Normalizes positive orders (all ≥ 2) into a divisibility chain by
/// replacing pairs `(a, b)` with `(gcd, lcm)`, which preserves the group.
fn divisibility_chain(mut xs: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[j].is_multiple_of(&xs[i]) {
                continue;
            }
            let g = xs[i].gcd(&xs[j]);
            let l = xs[i].lcm(&xs[j]);
            xs[i] = g;
            xs[j] = l;
        }
    }
    xs.retain(|x| !x.is_one());
    xs
}

pub fn cokernel(m: &ZMatrix) -> AbGroup {
    AbGroup::cokernel(m)
}

pub fn mod_action_kernel_cokernel(m: &ZMatrix, modulus: &BigInt) -> Result<(AbGroup, AbGroup)> {
    AbGroup::mod_action_kernel_cokernel(m, modulus)
}

pub fn direct_sum(a: &AbGroup, b: &AbGroup) -> AbGroup {
    a.direct_sum(b)
}

/// Renders as `0`, or factors joined by ` x `: `Z^2 x Z/2 x Z/4`.
impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" x "))
    }
}

impl FromStr for AbGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(AbGroup::trivial());
        }
        let bad = |part: &str| Error::Domain(format!("cannot parse group factor {part:?}"));
        let mut free_rank = 0;
        let mut orders = Vec::new();
        for part in s.split(" x ").map(str::trim) {
            if part == "Z" {
                free_rank += 1;
            } else if let Some(r) = part.strip_prefix("Z^") {
                free_rank += r.parse::<usize>().map_err(|_| bad(part))?;
            } else if let Some(t) = part.strip_prefix("Z/") {
                let t: BigInt = t.parse().map_err(|_| bad(part))?;
                if t < BigInt::from(2) {
                    return Err(bad(part));
                }
                orders.push(t);
            } else {
                return Err(bad(part));
            }
        }
        Ok(AbGroup::from_cyclic_orders(free_rank, orders))
    }
}

impl Serialize for AbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
