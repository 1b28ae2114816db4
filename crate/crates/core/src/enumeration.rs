//! Weighted Pólya enumeration and its `Δ`-weighted generalization.
//!
//! For a group `G` acting on `n` points, `m` colors with weights `w_1..w_m`
//! and any rational function `Δ` on `G`,
//!
//! ```text
//! Σ_k ( Σ_{f : W(f) = w^k} Σ_{σ ∈ G_f} Δ(σ) ) w^k  =  Σ_{σ∈G} Δ(σ) Z(σ, p(w))
//! ```
//!
//! where `p(w)` is the power-sum vector. [`extended_enumerate`] computes the
//! right-hand side; [`lhs_stabilizer_oracle`] and [`lhs_partition_oracle`]
//! compute the left-hand side by brute force in two different ways (over
//! colorings and their stabilizers, and over ordered set partitions of the
//! points and the Young-type subgroups fixing them). With `Δ = 1/|G|` the
//! inner sum is the number of orbits of weight `w^k`, which is classical
//! weighted Pólya enumeration ([`polya_enumerate`]).

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{MultiPoly, Rat};
use crate::cycleindex::{cycle_index, cycle_index_monomial, power_sum_vector};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::permgroup::{self, Coloring, CompVector, PermGroup, Permutation};

/// Limits for the brute-force routines. Exceeding one is an error, never a
/// silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of colorings (or ordered set partitions) visited.
    pub max_colorings: u64,
    /// Maximum `|G| · m^n`.
    pub max_work: u64,
    /// Maximum number of subsets expanded by the elementary symmetric
    /// polynomial oracle.
    pub max_subsets: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_colorings: 1_000_000, max_work: 100_000_000, max_subsets: 1_000_000 }
    }
}

impl Caps {
    fn coloring_count(&self, n: usize, m: usize) -> Result<u64> {
        let needed = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if needed > self.max_colorings as u128 {
            return Err(Error::Resource { what: "colorings m^n", needed, cap: self.max_colorings as u128 });
        }
        Ok(needed as u64)
    }

    fn check_work(&self, group: &PermGroup, colorings: u64) -> Result<()> {
        let needed = group.order() as u128 * colorings as u128;
        if needed > self.max_work as u128 {
            return Err(Error::Resource { what: "|G|·m^n", needed, cap: self.max_work as u128 });
        }
        Ok(())
    }
}

/// A rational-valued function on the elements of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaWeight {
    /// `Δ(σ) = 1/|G|`.
    Uniform,
    /// `Δ(σ) = sgn(σ)`.
    Sign,
    /// Explicit values; must cover every element of the target group.
    Table(HashMap<Permutation, Rat>),
}

impl DeltaWeight {
    pub fn table<I: IntoIterator<Item = (Permutation, Rat)>>(entries: I) -> Self {
        DeltaWeight::Table(entries.into_iter().collect())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            DeltaWeight::Uniform => "uniform",
            DeltaWeight::Sign => "sign",
            DeltaWeight::Table(_) => "table",
        }
    }

    /// Values of `Δ` aligned with `group.elements()`.
    pub fn values_for(&self, group: &PermGroup) -> Result<Vec<Rat>> {
        match self {
            DeltaWeight::Uniform => {
                let v = Rat::one() / Rat::from_integer(BigInt::from(group.order()));
                Ok(vec![v; group.order()])
            }
            DeltaWeight::Sign => Ok(group.elements().iter().map(Permutation::sign_rat).collect()),
            DeltaWeight::Table(t) => group
                .elements()
                .iter()
                .map(|s| {
                    t.get(s).cloned().ok_or_else(|| Error::validation(format!("delta table has no value for {s}")))
                })
                .collect(),
        }
    }
}

/// A generating function `Σ_k c_k w^k`, homogeneous of degree `n` in `m`
/// color variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFunction {
    degree: usize,
    poly: MultiPoly,
}

impl GenFunction {
    fn from_counts(degree: usize, colors: usize, acc: HashMap<Vec<usize>, Rat>) -> Self {
        let mut poly = MultiPoly::zero(colors);
        for (k, c) in acc {
            poly.add_term(crate::algebra::Monomial::new(k.iter().map(|&x| x as u32).collect()), c);
        }
        GenFunction { degree, poly }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn colors(&self) -> usize {
        self.poly.nvars()
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly {
        self.poly
    }

    /// Coefficient of `w^k`.
    pub fn coefficient(&self, k: &CompVector) -> Rat {
        self.poly.coefficient(&k.exponents())
    }

    /// Evaluates at numeric color weights.
    pub fn eval(&self, weights: &[Rat]) -> Result<Rat> {
        self.poly.eval(weights)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.poly.is_homogeneous(self.degree as u64)
    }

    pub fn to_text(&self) -> String {
        self.poly.to_text("w")
    }
}

/// `Σ_{σ∈G} Δ(σ) Z(σ, t)`, grouped by cycle type.
pub fn weighted_cycle_index(group: &PermGroup, delta: &DeltaWeight, strategy: Strategy) -> Result<MultiPoly> {
    let values = delta.values_for(group)?;
    let pairs: Vec<(&Permutation, &Rat)> = group.elements().iter().zip(&values).collect();
    let by_type = strategy.fold_slice(
        &pairs,
        HashMap::<Vec<usize>, Rat>::new,
        |mut acc, (s, d)| {
            *acc.entry(s.cycle_type()).or_insert_with(Rat::zero) += (*d).clone();
            acc
        },
        merge_rats,
    );
    let mut poly = MultiPoly::zero(group.degree());
    for (c, d) in by_type {
        poly.add_term(crate::algebra::Monomial::new(c.iter().map(|&x| x as u32).collect()), d);
    }
    Ok(poly)
}

fn merge_rats<K: std::hash::Hash + Eq>(mut a: HashMap<K, Rat>, b: HashMap<K, Rat>) -> HashMap<K, Rat> {
    for (k, v) in b {
        *a.entry(k).or_insert_with(Rat::zero) += v;
    }
    a
}

fn check_colors(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::validation("color count must be at least 1"));
    }
    Ok(())
}

/// Classical weighted Pólya enumeration: `Z_G` at the power sums of
/// `w_1..w_m`. Coefficient of `w^k` counts orbits of colorings with `k_i`
/// points of color `i`.
pub fn polya_enumerate(group: &PermGroup, m: usize, strategy: Strategy) -> Result<GenFunction> {
    check_colors(m)?;
    let z = cycle_index(group, strategy);
    let poly = z.poly().substitute(&power_sum_vector(m, group.degree())?)?;
    Ok(GenFunction { degree: group.degree(), poly })
}

/// `Σ_{σ∈G} Δ(σ) Z(σ, p(w))`.
pub fn extended_enumerate(group: &PermGroup, delta: &DeltaWeight, m: usize, strategy: Strategy) -> Result<GenFunction> {
    check_colors(m)?;
    let z = weighted_cycle_index(group, delta, strategy)?;
    let poly = z.substitute(&power_sum_vector(m, group.degree())?)?;
    Ok(GenFunction { degree: group.degree(), poly })
}

/// Left-hand side by brute force over colorings: for every `f ∈ Y^X` adds
/// `Σ_{σ∈G_f} Δ(σ)` to the coefficient of `w^{comp(f)}`.
pub fn lhs_stabilizer_oracle(
    group: &PermGroup,
    delta: &DeltaWeight,
    m: usize,
    caps: &Caps,
    strategy: Strategy,
) -> Result<GenFunction> {
    check_colors(m)?;
    let n = group.degree();
    let total = caps.coloring_count(n, m)?;
    caps.check_work(group, total)?;
    let values = delta.values_for(group)?;
    let acc = strategy.fold_range(
        total,
        HashMap::<Vec<usize>, Rat>::new,
        |mut acc, idx| {
            let f = Coloring::from_index(idx, n, m);
            let stab_sum =
                group.elements().iter().zip(&values).filter(|(s, _)| s.fixes(&f)).fold(Rat::zero(), |a, (_, d)| a + d);
            if !stab_sum.is_zero() {
                let k = permgroup::composition(&f, m).expect("colors in range");
                *acc.entry(k.0).or_insert_with(Rat::zero) += stab_sum;
            }
            acc
        },
        merge_rats,
    );
    Ok(GenFunction::from_counts(n, m, acc))
}

/// An ordered tuple of disjoint blocks `(A_1, …, A_m)` covering
/// `{0, …, n-1}`; blocks may be empty. Block `i` is the preimage of color `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in &mut blocks {
            b.sort_unstable();
            for &x in b.iter() {
                if x >= n || seen[x] {
                    return Err(Error::validation(format!("blocks do not partition 0..{n}")));
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::validation(format!("blocks do not cover 0..{n}")));
        }
        Ok(OrderedSetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn sizes(&self) -> CompVector {
        CompVector(self.blocks.iter().map(Vec::len).collect())
    }

    /// The coloring `f_α` that paints block `i` with color `i`.
    pub fn to_coloring(&self) -> Coloring {
        let n = self.blocks.iter().map(Vec::len).sum();
        let mut image = vec![0; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                image[x] = i;
            }
        }
        Coloring::from_vec_unchecked(image)
    }

    /// Whether `σ ∈ Sym(A_1) × ⋯ × Sym(A_m)`, i.e. `σ` maps every block into
    /// itself.
    pub fn is_preserved_by(&self, sigma: &Permutation) -> bool {
        self.blocks.iter().all(|b| b.iter().all(|&x| b.binary_search(&sigma.apply(x)).is_ok()))
    }

    /// Calls `visit` on every ordered set partition of `0..n` with block
    /// sizes `k`, choosing each block as an increasing subset of the points
    /// not yet used.
    pub fn for_each_with_sizes(n: usize, k: &CompVector, mut visit: impl FnMut(&OrderedSetPartition)) {
        if k.total() != n {
            return;
        }
        let mut current = OrderedSetPartition { blocks: vec![Vec::new(); k.0.len()] };
        let mut used = vec![false; n];
        fill_block(0, 0, k, &mut used, &mut current, &mut visit);
    }

    pub fn all_with_sizes(n: usize, k: &CompVector) -> Vec<OrderedSetPartition> {
        let mut out = Vec::new();
        Self::for_each_with_sizes(n, k, |a| out.push(a.clone()));
        out
    }
}

fn fill_block(
    block: usize,
    from: usize,
    k: &CompVector,
    used: &mut [bool],
    cur: &mut OrderedSetPartition,
    visit: &mut impl FnMut(&OrderedSetPartition),
) {
    if block == k.0.len() {
        visit(cur);
        return;
    }
    if cur.blocks[block].len() == k.0[block] {
        fill_block(block + 1, 0, k, used, cur, visit);
        return;
    }
    for x in from..used.len() {
        if used[x] {
            continue;
        }
        used[x] = true;
        cur.blocks[block].push(x);
        fill_block(block, x + 1, k, used, cur, visit);
        cur.blocks[block].pop();
        used[x] = false;
    }
}

/// Left-hand side by brute force over ordered set partitions: for every
/// composition `k` and every `α ∈ k(X)`, adds `Σ_{σ ∈ Sym(α) ∩ G} Δ(σ)` to
/// the coefficient of `w^k`.
pub fn lhs_partition_oracle(
    group: &PermGroup,
    delta: &DeltaWeight,
    m: usize,
    caps: &Caps,
    strategy: Strategy,
) -> Result<GenFunction> {
    check_colors(m)?;
    let n = group.degree();
    let total = caps.coloring_count(n, m)?;
    caps.check_work(group, total)?;
    let values = delta.values_for(group)?;
    let compositions = CompVector::all(n, m);
    let acc = strategy.fold_slice(
        &compositions,
        HashMap::<Vec<usize>, Rat>::new,
        |mut acc, k| {
            let mut coef = Rat::zero();
            OrderedSetPartition::for_each_with_sizes(n, k, |alpha| {
                for (s, d) in group.elements().iter().zip(&values) {
                    if alpha.is_preserved_by(s) {
                        coef += d;
                    }
                }
            });
            if !coef.is_zero() {
                *acc.entry(k.0.clone()).or_insert_with(Rat::zero) += coef;
            }
            acc
        },
        merge_rats,
    );
    Ok(GenFunction::from_counts(n, m, acc))
}

/// Colorings constant on every cycle of `σ`; there are `m^{#cycles(σ)}`.
pub fn fixed_colorings(sigma: &Permutation, m: usize, caps: &Caps) -> Result<Vec<Coloring>> {
    check_colors(m)?;
    let cycles = sigma.cycles();
    let total = caps.coloring_count(cycles.len(), m)?;
    Ok((0..total)
        .map(|idx| {
            let choice = Coloring::from_index(idx, cycles.len(), m);
            let mut image = vec![0; sigma.degree()];
            for (cycle, &c) in cycles.iter().zip(choice.image()) {
                for &x in cycle {
                    image[x] = c;
                }
            }
            Coloring::from_vec_unchecked(image)
        })
        .collect())
}

/// Both sides of `Σ_{f ∈ F_σ} W(f) = Z(σ, p(w))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaKeyReport {
    pub holds: bool,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
}

pub fn lemma_key_check(sigma: &Permutation, m: usize, caps: &Caps) -> Result<LemmaKeyReport> {
    let mut lhs = MultiPoly::zero(m);
    for f in fixed_colorings(sigma, m, caps)? {
        let k = permgroup::composition(&f, m)?;
        lhs.add_term(crate::algebra::Monomial::new(k.exponents()), Rat::one());
    }
    let rhs = if sigma.degree() == 0 {
        MultiPoly::one(m)
    } else {
        cycle_index_monomial(sigma).substitute(&power_sum_vector(m, sigma.degree())?)?
    };
    Ok(LemmaKeyReport { holds: lhs == rhs, lhs, rhs })
}

/// Orbit counts `a_k` by explicitly partitioning `Y^X` into `G`-orbits.
pub fn brute_force_orbit_counts(group: &PermGroup, m: usize, caps: &Caps) -> Result<GenFunction> {
    check_colors(m)?;
    let n = group.degree();
    let total = caps.coloring_count(n, m)?;
    caps.check_work(group, total)?;
    let mut seen: HashSet<Coloring> = HashSet::new();
    let mut counts: HashMap<Vec<usize>, u64> = HashMap::new();
    for idx in 0..total {
        let f = Coloring::from_index(idx, n, m);
        if seen.contains(&f) {
            continue;
        }
        let orbit = permgroup::orbit(group, &f)?;
        *counts.entry(permgroup::composition(&f, m)?.0).or_default() += 1;
        seen.extend(orbit);
    }
    Ok(GenFunction::from_counts(
        n,
        m,
        counts.into_iter().map(|(k, c)| (k, Rat::from_integer(BigInt::from(c)))).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn g(spec: &str) -> PermGroup {
        PermGroup::named(spec).unwrap()
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    const S: Strategy = Strategy::Sequential;

    #[test]
    fn polya_examples() {
        let caps = Caps::default();
        let t = polya_enumerate(&PermGroup::trivial(2), 2, S).unwrap();
        assert_eq!(t.to_text(), "w1^2 + 2*w1*w2 + w2^2");
        let s2 = polya_enumerate(&g("sym:2"), 2, S).unwrap();
        assert_eq!(s2.to_text(), "w1^2 + w1*w2 + w2^2");
        assert_eq!(s2, brute_force_orbit_counts(&g("sym:2"), 2, &caps).unwrap());
        let c4 = polya_enumerate(&g("cyclic:4"), 2, S).unwrap();
        assert_eq!(c4.to_text(), "w1^4 + w1^3*w2 + 2*w1^2*w2^2 + w1*w2^3 + w2^4");
        assert_eq!(c4, brute_force_orbit_counts(&g("cyclic:4"), 2, &caps).unwrap());
        assert_eq!(c4.eval(&[int(1), int(1)]).unwrap(), int(6));
        assert!(polya_enumerate(&g("sym:2"), 0, S).is_err());
    }

    #[test]
    fn extended_examples() {
        for spec in ["sym:3", "cyclic:4", "dihedral:5", "alt:4"] {
            for m in 1..=3 {
                let grp = g(spec);
                assert_eq!(
                    extended_enumerate(&grp, &DeltaWeight::Uniform, m, S).unwrap(),
                    polya_enumerate(&grp, m, S).unwrap()
                );
            }
        }
        let e2 = extended_enumerate(&g("sym:2"), &DeltaWeight::Sign, 2, S).unwrap();
        // Σ sgn(σ) Z(σ, p(w)) = p1² − p2 = 2·e_2; dividing Δ by |G| gives e_2 itself
        assert_eq!(e2.to_text(), "2*w1*w2");
        let sgn_over_order = DeltaWeight::table([(Permutation::identity(2), rat(1, 2)), (perm(&[1, 0]), rat(-1, 2))]);
        assert_eq!(extended_enumerate(&g("sym:2"), &sgn_over_order, 2, S).unwrap().to_text(), "w1*w2");
        let seven = DeltaWeight::table([(Permutation::identity(1), int(7))]);
        assert_eq!(extended_enumerate(&PermGroup::trivial(1), &seven, 1, S).unwrap().to_text(), "7*w1");
    }

    #[test]
    fn table_must_cover_group() {
        let partial = DeltaWeight::table([(Permutation::identity(2), int(1))]);
        let err = extended_enumerate(&g("sym:2"), &partial, 2, S).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
        assert!(lhs_stabilizer_oracle(&g("sym:2"), &partial, 2, &Caps::default(), S).is_err());
    }

    #[test]
    fn stabilizer_oracle_examples() {
        let caps = Caps::default();
        let c4 = g("cyclic:4");
        assert_eq!(
            lhs_stabilizer_oracle(&c4, &DeltaWeight::Uniform, 2, &caps, S).unwrap(),
            brute_force_orbit_counts(&c4, 2, &caps).unwrap()
        );
        let s = lhs_stabilizer_oracle(&g("sym:2"), &DeltaWeight::Sign, 2, &caps, S).unwrap();
        // only k = (1,1) survives; each of its two colorings has trivial stabilizer
        assert_eq!(s.to_text(), "2*w1*w2");
        let d = DeltaWeight::table([(Permutation::identity(3), rat(-2, 3))]);
        let triv = lhs_stabilizer_oracle(&PermGroup::trivial(3), &d, 2, &caps, S).unwrap();
        let sum = MultiPoly::var(2, 0).unwrap().add(&MultiPoly::var(2, 1).unwrap()).unwrap();
        assert_eq!(triv.poly(), &sum.pow(3).scale(&rat(-2, 3)));
    }

    #[test]
    fn partition_oracle_examples() {
        let caps = Caps::default();
        let d = DeltaWeight::table([(Permutation::identity(3), int(5))]);
        assert_eq!(
            lhs_partition_oracle(&PermGroup::trivial(3), &d, 3, &caps, S).unwrap(),
            lhs_stabilizer_oracle(&PermGroup::trivial(3), &d, 3, &caps, S).unwrap()
        );
        let s3 = lhs_partition_oracle(&g("sym:3"), &DeltaWeight::Sign, 3, &caps, S).unwrap();
        assert_eq!(s3.to_text(), "6*w1*w2*w3");
        for spec in ["sym:4", "cyclic:5", "dihedral:3"] {
            let grp = g(spec);
            let one = lhs_partition_oracle(&grp, &DeltaWeight::Uniform, 1, &caps, S).unwrap();
            assert_eq!(one.to_text(), format!("w1^{}", grp.degree()));
        }
    }

    #[test]
    fn caps_fail_loudly() {
        let tight = Caps { max_colorings: 8, ..Caps::default() };
        let grp = g("sym:4");
        let err = lhs_stabilizer_oracle(&grp, &DeltaWeight::Sign, 2, &tight, S).unwrap_err();
        assert!(matches!(err, Error::Resource { needed: 16, cap: 8, .. }));
        assert!(lhs_partition_oracle(&grp, &DeltaWeight::Sign, 2, &tight, S).is_err());
        let low_work = Caps { max_work: 100, ..Caps::default() };
        assert!(lhs_stabilizer_oracle(&grp, &DeltaWeight::Sign, 2, &low_work, S).is_err());
        assert!(fixed_colorings(&Permutation::identity(4), 3, &tight).is_err());
    }

    #[test]
    fn ordered_set_partitions() {
        let k = CompVector(vec![2, 0, 1]);
        let all = OrderedSetPartition::all_with_sizes(3, &k);
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|a| a.sizes() == k && a.blocks()[1].is_empty()));
        // multinomial 5!/(2!2!1!) = 30
        assert_eq!(OrderedSetPartition::all_with_sizes(5, &CompVector(vec![2, 2, 1])).len(), 30);
        let a = OrderedSetPartition::new(3, vec![vec![2, 0], vec![1]]).unwrap();
        assert_eq!(a.to_coloring().image(), &[0, 1, 0]);
        assert!(a.is_preserved_by(&perm(&[2, 1, 0])));
        assert!(!a.is_preserved_by(&perm(&[1, 0, 2])));
        assert!(OrderedSetPartition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(OrderedSetPartition::new(3, vec![vec![0], vec![1]]).is_err());
    }

    #[test]
    fn partition_to_coloring_is_a_bijection() {
        for m in 1..=3 {
            let n = 4;
            let mut images = HashSet::new();
            for k in CompVector::all(n, m) {
                OrderedSetPartition::for_each_with_sizes(n, &k, |a| {
                    let f = a.to_coloring();
                    assert_eq!(permgroup::composition(&f, m).unwrap(), k);
                    assert!(images.insert(f));
                });
            }
            assert_eq!(images.len() as u64, (m as u64).pow(n as u32));
        }
    }

    #[test]
    fn fixed_coloring_examples() {
        let caps = Caps::default();
        assert_eq!(fixed_colorings(&Permutation::identity(2), 2, &caps).unwrap().len(), 4);
        let cyc = perm(&[1, 2, 3, 4, 0]);
        let fc = fixed_colorings(&cyc, 3, &caps).unwrap();
        assert_eq!(fc.len(), 3);
        assert!(fc.iter().all(|f| f.image().iter().all(|&c| c == f.image()[0])));
        let s = perm(&[1, 0, 2]);
        let fc = fixed_colorings(&s, 2, &caps).unwrap();
        assert_eq!(fc.len(), 4);
        assert!(fc.iter().all(|f| s.fixes(f)));
    }

    #[test]
    fn lemma_key_examples() {
        let caps = Caps::default();
        let r = lemma_key_check(&Permutation::identity(1), 2, &caps).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs.to_text("w"), "w1 + w2");
        let r = lemma_key_check(&perm(&[1, 0]), 2, &caps).unwrap();
        assert!(r.holds);
        assert_eq!(r.rhs.to_text("w"), "w1^2 + w2^2");
        let r = lemma_key_check(&perm(&[1, 0, 2]), 2, &caps).unwrap();
        assert!(r.holds);
        let p1 = MultiPoly::var(2, 0).unwrap().add(&MultiPoly::var(2, 1).unwrap()).unwrap();
        let p2 = MultiPoly::var(2, 0).unwrap().pow(2).add(&MultiPoly::var(2, 1).unwrap().pow(2)).unwrap();
        assert_eq!(r.lhs, p2.mul(&p1).unwrap());
    }

    #[test]
    fn strategies_agree() {
        let caps = Caps::default();
        let grp = g("dihedral:5");
        let d = DeltaWeight::table(grp.elements().iter().enumerate().map(|(i, s)| (s.clone(), rat(i as i64 - 4, 3))));
        for m in 1..=3 {
            let seq = lhs_stabilizer_oracle(&grp, &d, m, &caps, Strategy::Sequential).unwrap();
            assert_eq!(seq, lhs_stabilizer_oracle(&grp, &d, m, &caps, Strategy::Parallel).unwrap());
            assert_eq!(seq, lhs_partition_oracle(&grp, &d, m, &caps, Strategy::Parallel).unwrap());
            assert_eq!(seq, extended_enumerate(&grp, &d, m, Strategy::Parallel).unwrap());
        }
    }
}
