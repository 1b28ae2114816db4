//! The elementary symmetric polynomial `e_n` as a signed cycle index of
//! `Sym(n)`, and the determinant of a matrix from the traces of its powers:
//!
//! ```text
//! e_n(w) = (1/n!) Σ_{σ∈Sym(n)} sgn(σ) Z(σ, p(w))        (n ≤ m)
//! det(L) = (1/n!) Σ_{σ∈Sym(n)} sgn(σ) Z(σ, t),  t_i = tr(L^i)
//! ```
//!
//! The signed sums run over conjugacy classes (integer partitions); the
//! element-by-element sum is kept for small `n` as a cross-check. Each
//! identity has an independent oracle: subset expansion for `e_n`, Bareiss
//! elimination for the determinant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{Monomial, MultiPoly, Rat};
use crate::cycleindex::{
    cycle_index_monomial, factorial, power_sum_vector, signed_cycle_index_symmetric, MAX_PARTITION_DEGREE,
};
use crate::enumeration::Caps;
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::permgroup::PermGroup;

/// Largest `n` for the element-by-element signed sum over `Sym(n)`.
pub const MAX_ELEMENTWISE_DEGREE: usize = 8;

/// Square matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    order: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::validation("matrix must have at least one row"));
        }
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::Dimension { expected: order, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(RatMatrix { order, entries })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect()).collect())
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zero(order);
        for i in 0..order {
            m.entries[i * order + i] = Rat::one();
        }
        m
    }

    pub fn zero(order: usize) -> Self {
        RatMatrix { order, entries: vec![Rat::zero(); order * order] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rat]> {
        self.entries.chunks(self.order)
    }

    pub fn trace(&self) -> Rat {
        (0..self.order).fold(Rat::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.order != other.order {
            return Err(Error::Dimension { expected: self.order, found: other.order });
        }
        let n = self.order;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }
}

/// `[tr(L), tr(L²), …, tr(Lⁿ)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceVector(pub Vec<Rat>);

impl TraceVector {
    pub fn values(&self) -> &[Rat] {
        &self.0
    }
}

/// Traces of `L, L², …, L^upto` by repeated exact multiplication.
pub fn trace_powers(l: &RatMatrix, upto: usize) -> Result<TraceVector> {
    if upto != l.order() {
        return Err(Error::Dimension { expected: l.order(), found: upto });
    }
    let mut power = l.clone();
    let mut out = Vec::with_capacity(upto);
    for i in 0..upto {
        if i > 0 {
            power = power.mul(l)?;
        }
        out.push(power.trace());
    }
    Ok(TraceVector(out))
}

/// `det(L)` as the signed cycle index of `Sym(n)` evaluated at the trace
/// vector.
pub fn det_via_traces(l: &RatMatrix) -> Result<Rat> {
    let n = l.order();
    Error::check_range("matrix order", n, 1, MAX_PARTITION_DEGREE)?;
    let t = trace_powers(l, n)?;
    signed_cycle_index_symmetric(n)?.poly().eval(t.values())
}

/// Exact determinant by fraction-free (Bareiss) elimination. Each row is
/// first scaled to integers by the lcm of its denominators; the integer
/// determinant is divided by the product of those scale factors at the end.
pub fn det_bareiss(l: &RatMatrix) -> Rat {
    let n = l.order();
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = l
        .rows()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Rat::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = sign * &a[n - 1][n - 1];
    Rat::new(det, scale)
}

/// `(1/n!) Σ sgn(σ) Z(σ, p(w))` in `m` variables, summed over cycle types,
/// with no restriction relating `n` and `m`.
pub fn signed_cycle_index_at_power_sums(n: usize, m: usize) -> Result<MultiPoly> {
    Error::check_range("degree", n, 1, MAX_PARTITION_DEGREE)?;
    Error::check_range("variable count", m, 1, usize::MAX)?;
    signed_cycle_index_symmetric(n)?.poly().substitute(&power_sum_vector(m, n)?)
}

fn check_n_le_m(n: usize, m: usize) -> Result<()> {
    Error::check_range("degree", n, 1, usize::MAX)?;
    if n > m {
        return Err(Error::validation(format!("e_n needs n <= m, got n = {n}, m = {m}")));
    }
    Ok(())
}

/// `e_n(w_1, …, w_m)` via the signed cycle index of `Sym(n)`; needs
/// `1 ≤ n ≤ m` and `n ≤ 20`.
pub fn elementary_symmetric_via_cycle_index(n: usize, m: usize) -> Result<MultiPoly> {
    check_n_le_m(n, m)?;
    signed_cycle_index_at_power_sums(n, m)
}

/// Same value as [`elementary_symmetric_via_cycle_index`], summing
/// `sgn(σ) Z(σ, t)` over every element of `Sym(n)` before substituting.
pub fn elementary_symmetric_via_elements(n: usize, m: usize, strategy: Strategy) -> Result<MultiPoly> {
    check_n_le_m(n, m)?;
    Error::check_range("degree", n, 1, MAX_ELEMENTWISE_DEGREE)?;
    let group = PermGroup::named(&format!("sym:{n}"))?;
    let signed = strategy.fold_slice(
        group.elements(),
        || MultiPoly::zero(n),
        |acc, s| acc.add(&cycle_index_monomial(s).scale(&s.sign_rat())).expect("same ring"),
        |a, b| a.add(&b).expect("same ring"),
    );
    let signed = signed.scale(&(Rat::one() / Rat::from_integer(factorial(n))));
    signed.substitute(&power_sum_vector(m, n)?)
}

/// `e_n` by expanding `Σ_{|S| = n} ∏_{i∈S} w_i` over all `n`-subsets.
pub fn elementary_symmetric_direct(n: usize, m: usize, caps: &Caps) -> Result<MultiPoly> {
    check_n_le_m(n, m)?;
    let needed = binomial(m, n);
    if needed > BigInt::from(caps.max_subsets) {
        return Err(Error::Resource {
            what: "subsets C(m, n)",
            needed: u128::try_from(needed).unwrap_or(u128::MAX),
            cap: caps.max_subsets as u128,
        });
    }
    let mut out = MultiPoly::zero(m);
    let mut subset: Vec<usize> = (0..n).collect();
    loop {
        let mut e = vec![0u32; m];
        for &i in &subset {
            e[i] = 1;
        }
        out.add_term(Monomial::new(e), Rat::one());
        // advance to the next n-subset in lexicographic order
        let Some(pos) = (0..n).rev().find(|&i| subset[i] < m - n + i) else {
            break;
        };
        subset[pos] += 1;
        for i in pos + 1..n {
            subset[i] = subset[i - 1] + 1;
        }
    }
    Ok(out)
}

pub fn binomial(m: usize, n: usize) -> BigInt {
    if n > m {
        return BigInt::zero();
    }
    factorial(m) / (factorial(n) * factorial(m - n))
}

/// Cofactor expansion along the first row. Exponential in the order; only
/// meant as a third determinant for small matrices.
pub fn det_cofactor(l: &RatMatrix) -> Rat {
    fn rec(rows: &[Vec<Rat>]) -> Rat {
        let n = rows.len();
        if n == 1 {
            return rows[0][0].clone();
        }
        let mut total = Rat::zero();
        for j in 0..n {
            if rows[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Rat>> = rows[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &rows[0][j] * rec(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    let rows: Vec<Vec<Rat>> = l.rows().map(<[Rat]>::to_vec).collect();
    rec(&rows)
}
