//! Cycle index polynomials `Z(σ, t)` and `Z_G(t)`, integer partitions, and
//! the power-sum vector `(Σ w_i, Σ w_i², …, Σ w_iⁿ)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Monomial, MultiPoly, Rat};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::permgroup::{PermGroup, Permutation};

/// Upper bound on `n` for the partition-indexed fast paths.
pub const MAX_PARTITION_DEGREE: usize = 20;

/// `Z_G` for a group of degree `n`, a polynomial in exactly `n` variables
/// `t_1..t_n` where `t_i` marks a cycle of length `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleIndex {
    degree: usize,
    poly: MultiPoly,
}

impl CycleIndex {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly {
        self.poly
    }

    pub fn to_text(&self) -> String {
        self.poly.to_text("t")
    }
}

/// A partition of `n` as weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPartition {
    parts: Vec<usize>,
}

impl IntPartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::validation("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(IntPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Entry `i - 1` is the number of parts equal to `i`; length is `n`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut c = vec![0; self.total()];
        for &p in &self.parts {
            c[p - 1] += 1;
        }
        c
    }

    /// Centralizer order `∏ i^{c_i} · c_i!` of the matching conjugacy class
    /// of `Sym(n)`.
    pub fn centralizer_order(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (i, &c)| acc * BigInt::from(i + 1).pow(c as u32) * factorial(c))
    }

    /// Number of permutations of this cycle type, `n! / ∏ i^{c_i} c_i!`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.total()) / self.centralizer_order()
    }

    /// Sign shared by the class, `(-1)^(n - #parts)`.
    pub fn sign(&self) -> i8 {
        if (self.total() - self.parts.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// All partitions of `n`, in reverse-lexicographic order (`[n]` first,
/// `[1, …, 1]` last).
pub fn partitions(n: usize) -> Result<Vec<IntPartition>> {
    Error::check_range("partition size", n, 1, MAX_PARTITION_DEGREE)?;
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
        if left == 0 {
            out.push(IntPartition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

fn cycle_type_exponents(c: &[usize]) -> Monomial {
    Monomial::new(c.iter().map(|&x| x as u32).collect())
}

/// `Z(σ, t) = t_1^{c_1(σ)} ⋯ t_n^{c_n(σ)}` with coefficient 1.
pub fn cycle_index_monomial(sigma: &Permutation) -> MultiPoly {
    MultiPoly::monomial(cycle_type_exponents(&sigma.cycle_type()), Rat::one())
}

/// `Z_G(t) = (1/|G|) Σ_{σ∈G} Z(σ, t)`, summed element by element.
pub fn cycle_index(group: &PermGroup, strategy: Strategy) -> CycleIndex {
    let counts = strategy.fold_slice(
        group.elements(),
        HashMap::<Vec<usize>, u64>::new,
        |mut acc, s| {
            *acc.entry(s.cycle_type()).or_default() += 1;
            acc
        },
        merge_counts,
    );
    let n = group.degree();
    let order = Rat::from_integer(BigInt::from(group.order()));
    let mut poly = MultiPoly::zero(n);
    for (c, k) in counts {
        poly.add_term(cycle_type_exponents(&c), Rat::from_integer(BigInt::from(k)) / &order);
    }
    CycleIndex { degree: n, poly }
}

pub(crate) fn merge_counts<K: std::hash::Hash + Eq>(mut a: HashMap<K, u64>, b: HashMap<K, u64>) -> HashMap<K, u64> {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

/// `Z_{Sym(n)}` summed over cycle types with weight `1 / ∏ i^{c_i} c_i!`.
pub fn cycle_index_symmetric(n: usize) -> Result<CycleIndex> {
    class_sum(n, |_| Rat::one())
}

/// `(1/n!) Σ_{σ∈Sym(n)} sgn(σ) Z(σ, t)`, summed over cycle types.
pub fn signed_cycle_index_symmetric(n: usize) -> Result<CycleIndex> {
    class_sum(n, |p| if p.sign() > 0 { Rat::one() } else { -Rat::one() })
}

fn class_sum(n: usize, weight: impl Fn(&IntPartition) -> Rat) -> Result<CycleIndex> {
    let mut poly = MultiPoly::zero(n);
    for p in partitions(n)? {
        let coef = weight(&p) / Rat::from_integer(p.centralizer_order());
        poly.add_term(cycle_type_exponents(&p.multiplicities()), coef);
    }
    Ok(CycleIndex { degree: n, poly })
}

/// Symbolic power sums `[p_1, …, p_n]` with `p_j = Σ_{i=1}^m w_i^j`, each a
/// polynomial in `m` variables.
pub fn power_sum_vector(m: usize, n: usize) -> Result<Vec<MultiPoly>> {
    Error::check_range("color count", m, 1, usize::MAX)?;
    Error::check_range("degree", n, 1, usize::MAX)?;
    Ok((1..=n as u32)
        .map(|j| {
            let mut p = MultiPoly::zero(m);
            for i in 0..m {
                let mut e = vec![0; m];
                e[i] = j;
                p.add_term(Monomial::new(e), Rat::one());
            }
            p
        })
        .collect())
}

/// Power sums evaluated at numeric weights.
pub fn power_sums_numeric(weights: &[Rat], n: usize) -> Result<Vec<Rat>> {
    Error::check_range("color count", weights.len(), 1, usize::MAX)?;
    Error::check_range("degree", n, 1, usize::MAX)?;
    let mut powers: Vec<Rat> = weights.to_vec();
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        if j > 0 {
            for (p, w) in powers.iter_mut().zip(weights) {
                *p *= w;
            }
        }
        out.push(powers.iter().fold(Rat::zero(), |a, b| a + b));
    }
    Ok(out)
}
