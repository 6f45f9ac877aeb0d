//! Brute-force verifiers for the fast paths.
//!
//! Nothing here calls [`ZMatrix::det`], [`ZMatrix::snf`] or the group
//! canonicalization in [`crate::abgroup`]: minors are expanded by hand,
//! finite groups are enumerated element by element and their structure is
//! recovered from an element-order census. The suites at the bottom compare
//! these against the library on seeded random inputs.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::abgroup::AbGroup;
use crate::algebras::GradedAlgebraDescriptor;
use crate::error::{Error, Result};
use crate::exactmat::ZMatrix;

pub const DEFAULT_SEED: u64 = 7;

pub const DIVISOR_MAX_DIM: usize = 6;
pub const BRUTE_MAX_SIZE: usize = 3;
pub const BRUTE_MAX_MODULUS: u64 = 12;
pub const NAKAYAMA_MAX_PRODUCT: usize = 64;

/// Determinantal divisors `D_1, …, D_r` with `r = min(rows, cols)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorChain {
    pub chain: Vec<BigInt>,
}

impl DivisorChain {
    /// `d_i = D_i / D_{i-1}` while `D_i ≠ 0`, then zeros.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let mut prev = BigInt::one();
        self.chain
            .iter()
            .map(|d| {
                if d.is_zero() || prev.is_zero() {
                    prev = BigInt::zero();
                    BigInt::zero()
                } else {
                    let f = d / &prev;
                    prev = d.clone();
                    f
                }
            })
            .collect()
    }
}

pub fn determinantal_divisors(m: &ZMatrix) -> Result<DivisorChain> {
    let r = m.rows().min(m.cols());
    if r > DIVISOR_MAX_DIM {
        return Err(Error::OracleGuard(format!(
            "determinantal divisors limited to min dimension {DIVISOR_MAX_DIM}, got {r}"
        )));
    }
    let rows = m.to_rows();
    let mut chain = Vec::with_capacity(r);
    for k in 1..=r {
        let mut g = BigInt::zero();
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let minor: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect())
                    .collect();
                g = g.gcd(&laplace(&minor));
            }
        }
        chain.push(g);
    }
    Ok(DivisorChain { chain })
}

/// All `k`-element subsets of `0..n`, lexicographic.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Laplace expansion along the first row.
fn laplace(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &a[0][j] * laplace(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Kernel and cokernel of `m` acting on `(Z/modulus)^N`, by enumerating all
/// `modulus^N` vectors.
pub fn brute_mod_kernel(m: &ZMatrix, modulus: u64) -> Result<(AbGroup, AbGroup)> {
    let n = m.rows();
    if !m.is_square() || n > BRUTE_MAX_SIZE {
        return Err(Error::OracleGuard(format!(
            "brute force needs a square matrix of size <= {BRUTE_MAX_SIZE}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if !(2..=BRUTE_MAX_MODULUS).contains(&modulus) {
        return Err(Error::OracleGuard(format!(
            "brute force needs 2 <= modulus <= {BRUTE_MAX_MODULUS}, got {modulus}"
        )));
    }
    let md = BigInt::from(modulus);
    let entries: Vec<u64> = m
        .entries()
        .iter()
        .map(|x| x.mod_floor(&md).to_u64().expect("reduced entry"))
        .collect();
    let apply = |v: &[u64]| -> Vec<u64> {
        (0..n)
            .map(|i| (0..n).map(|j| entries[i * n + j] * v[j]).sum::<u64>() % modulus)
            .collect()
    };
    let space = all_vectors(n, modulus);
    let kernel: Vec<Vec<u64>> = space
        .iter()
        .filter(|v| apply(v).iter().all(|&x| x == 0))
        .cloned()
        .collect();
    let image: HashSet<Vec<u64>> = space.iter().map(|v| apply(v)).collect();

    let scale = |k: u64, v: &[u64]| -> Vec<u64> { v.iter().map(|x| x * k % modulus).collect() };
    let is_zero = |v: &[u64]| v.iter().all(|&x| x == 0);

    let ker_group = census_group(kernel.len() as u64, |k| {
        kernel.iter().filter(|v| is_zero(&scale(k, v))).count() as u64
    });
    // |{x + H : k x ∈ H}| = |{x : k x ∈ H}| / |H|
    let h = image.len() as u64;
    let coker_group = census_group(space.len() as u64 / h, |k| {
        space
            .iter()
            .filter(|v| image.contains(&scale(k, v)))
            .count() as u64
            / h
    });
    Ok((ker_group, coker_group))
}

fn all_vectors(n: usize, modulus: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..modulus).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Rebuilds a finite abelian group of the given order from
/// `torsion_count(k) = #{x : k·x = 0}`.
///
/// For each prime `p | order`, `#{x : p^j x = 0} = p^{Σ_i min(e_i, j)}`, so
/// successive ratios count the cyclic `p`-factors of exponent `≥ j`.
fn census_group(order: u64, torsion_count: impl Fn(u64) -> u64) -> AbGroup {
    let mut exponents: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for p in prime_factors(order) {
        let mut parts: Vec<u32> = Vec::new(); // parts[j-1] = #factors with exponent >= j
        let mut prev = 1u64;
        let mut pj = p;
        loop {
            let c = torsion_count(pj);
            if c == prev {
                break;
            }
            parts.push(ilog(c / prev, p));
            prev = c;
            pj *= p;
        }
        // conjugate partition: exponents of the cyclic factors, largest first
        let count = parts.first().copied().unwrap_or(0);
        let exps = (0..count)
            .map(|i| parts.iter().filter(|&&c| c > i).count() as u32)
            .collect();
        exponents.insert(p, exps);
    }
    let width = exponents.values().map(Vec::len).max().unwrap_or(0);
    // largest invariant factor collects the largest exponent of every prime
    let mut factors: Vec<BigInt> = (0..width)
        .map(|i| {
            exponents
                .iter()
                .map(|(p, e)| BigInt::from(*p).pow(e.get(i).copied().unwrap_or(0)))
                .product()
        })
        .collect();
    factors.reverse();
    AbGroup::from_invariant_factors(0, factors).expect("census produces a divisibility chain")
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn ilog(mut x: u64, p: u64) -> u32 {
    let mut k = 0;
    while x > 1 {
        x /= p;
        k += 1;
    }
    k
}

/// Cartan matrix of the self-injective Nakayama algebra by walking each
/// uniserial projective: `P_j` has composition factors `S_j, S_{j+1}, …,
/// S_{j+len-1}` (indices mod `n`), and entry `(i, j)` counts copies of `S_i`.
pub fn nakayama_cartan_oracle(n: usize, len: usize) -> Result<ZMatrix> {
    if n == 0 || len == 0 || n * len > NAKAYAMA_MAX_PRODUCT {
        return Err(Error::OracleGuard(format!(
            "nakayama oracle needs 1 <= n*len <= {NAKAYAMA_MAX_PRODUCT}, got n={n}, len={len}"
        )));
    }
    let mut counts = vec![vec![0i64; n]; n];
    for j in 0..n {
        for layer in 0..len {
            counts[(j + layer) % n][j] += 1;
        }
    }
    ZMatrix::from_rows(counts)
}

/// Which cross-check to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Snf,
    #[serde(rename = "modkernel")]
    ModKernel,
    Nakayama,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::Snf, Suite::ModKernel, Suite::Nakayama];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Snf => "snf",
            Suite::ModKernel => "modkernel",
            Suite::Nakayama => "nakayama",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub seed: u64,
    pub cases: usize,
    pub mismatches: usize,
    pub first_mismatch: Option<String>,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

pub const SNF_CASES: usize = 1000;
pub const MODKERNEL_CASES: usize = 500;

pub fn run_suite(suite: Suite, seed: u64) -> SuiteSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = 0;
    let mut mismatches = 0;
    let mut first_mismatch = None;
    let mut record = |ok: bool, what: &dyn Fn() -> String| {
        cases += 1;
        if !ok {
            mismatches += 1;
            if first_mismatch.is_none() {
                first_mismatch = Some(what());
            }
        }
    };
    match suite {
        Suite::Snf => {
            for _ in 0..SNF_CASES {
                let m = random_matrix(&mut rng, 5, 5, 9);
                let fast = m.snf().invariant_factors();
                let slow = determinantal_divisors(&m).map(|c| c.invariant_factors());
                record(slow.as_ref() == Ok(&fast), &|| {
                    format!("{m}: snf {fast:?}, divisors {slow:?}")
                });
            }
        }
        Suite::ModKernel => {
            for _ in 0..MODKERNEL_CASES {
                let n = rng.gen_range(1..=BRUTE_MAX_SIZE);
                let m = random_matrix_sized(&mut rng, n, n, 6);
                let modulus = rng.gen_range(2..=BRUTE_MAX_MODULUS);
                let fast = AbGroup::mod_action_kernel_cokernel(&m, &BigInt::from(modulus));
                let slow = brute_mod_kernel(&m, modulus);
                record(fast.is_ok() && fast == slow, &|| {
                    format!("{m} mod {modulus}: formula {fast:?}, enumeration {slow:?}")
                });
            }
        }
        Suite::Nakayama => {
            for n in 1..=NAKAYAMA_MAX_PRODUCT {
                for len in 2..=NAKAYAMA_MAX_PRODUCT / n {
                    let built =
                        GradedAlgebraDescriptor::nakayama(n, len).map(|d| d.cartan().clone());
                    let walked = nakayama_cartan_oracle(n, len);
                    record(built.is_ok() && built == walked, &|| {
                        format!("nakayama({n},{len}): built {built:?}, walked {walked:?}")
                    });
                }
            }
        }
    }
    SuiteSummary {
        suite,
        seed,
        cases,
        mismatches,
        first_mismatch,
    }
}

/// Random matrix with dimensions in `1..=max_rows × 1..=max_cols` and
/// entries in `[-bound, bound]`.
pub fn random_matrix(rng: &mut impl Rng, max_rows: usize, max_cols: usize, bound: i64) -> ZMatrix {
    let rows = rng.gen_range(1..=max_rows);
    let cols = rng.gen_range(1..=max_cols);
    random_matrix_sized(rng, rows, cols, bound)
}

pub fn random_matrix_sized(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> ZMatrix {
    let data = (0..rows * cols)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    ZMatrix::new(rows, cols, data).expect("positive dimensions")
}
