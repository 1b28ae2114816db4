//! Permutations of `{0, …, n-1}`, explicit permutation groups, and the
//! induced action on colorings.
//!
//! # Composition convention
//!
//! A coloring `f` is moved by `σ` via `f^σ(x) = f(σ(x))` (see [`act`]).
//! [`Permutation::compose`] is ordinary function composition,
//! `σ.compose(τ)(x) = σ(τ(x))`, which is exactly what makes
//!
//! ```text
//! act(σ.compose(τ), f) == act(τ, act(σ, f))
//! ```
//!
//! hold. Nothing else in the crate depends on the convention, since every
//! group is closed under both orders.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::Rat;
use crate::error::{Error, Result};

/// Largest group the explicit-element representation will build (10!).
pub const DEFAULT_GROUP_CAP: usize = 3_628_800;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[x]` is the image of `x`; must be a bijection on `0..len`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &y in &images {
            if y >= n || seen[y] {
                return Err(Error::validation(format!("{images:?} is not a permutation of 0..{n}")));
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`; omitted points are fixed.
    /// Commas are accepted as separators inside a cycle.
    pub fn from_cycles(n: usize, s: &str) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body =
                rest.strip_prefix('(').ok_or_else(|| Error::parse(format!("expected '(' in cycle string {s:?}")))?;
            let close = body.find(')').ok_or_else(|| Error::parse(format!("unclosed cycle in {s:?}")))?;
            let points = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::parse(format!("bad point {t:?} in {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            for &p in &points {
                if p >= n {
                    return Err(Error::validation(format!("point {p} out of range for degree {n}")));
                }
                if moved[p] {
                    return Err(Error::validation(format!("point {p} appears twice in {s:?}")));
                }
                moved[p] = true;
            }
            for (i, &p) in points.iter().enumerate() {
                images[p] = points[(i + 1) % points.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&y| self.images[y]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles including fixed points, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Entry `i - 1` counts the cycles of length `i`.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut c = vec![0; self.degree()];
        for cycle in self.cycles() {
            c[cycle.len() - 1] += 1;
        }
        c
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// `+1` or `-1`, i.e. `(-1)^(n - #cycles)`.
    pub fn sign(&self) -> i8 {
        if (self.degree() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn sign_rat(&self) -> Rat {
        if self.sign() > 0 {
            Rat::one()
        } else {
            -Rat::one()
        }
    }

    /// Whether `self` fixes `f` under [`act`], without building `f^σ`.
    pub fn fixes(&self, f: &Coloring) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| f.image[y] == f.image[x])
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points omitted; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// A finite permutation group stored as its full list of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, elements: vec![Permutation::identity(degree)] }
    }

    /// Breadth-first closure of `generators` under composition.
    pub fn generate(degree: usize, generators: &[Permutation], cap: usize) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::Dimension { expected: degree, found: g.degree() });
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            for g in generators {
                let next = e.compose(g);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::Resource {
                            what: "group closure",
                            needed: seen.len() as u128,
                            cap: cap as u128,
                        });
                    }
                    elements.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(PermGroup { degree, elements })
    }

    /// Wraps an explicit element list after checking the group axioms.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        for e in &elements {
            if e.degree() != degree {
                return Err(Error::Dimension { expected: degree, found: e.degree() });
            }
        }
        let set: HashSet<Permutation> = elements.iter().cloned().collect();
        if set.len() != elements.len() {
            return Err(Error::validation("duplicate group elements"));
        }
        if !set.contains(&Permutation::identity(degree)) {
            return Err(Error::validation("element list lacks the identity"));
        }
        let group = PermGroup { degree, elements };
        if !group.is_closed() {
            return Err(Error::validation("element list is not closed under composition"));
        }
        if !group.elements.iter().all(|e| set.contains(&e.inverse())) {
            return Err(Error::validation("element list is not closed under inverses"));
        }
        Ok(group)
    }

    /// Builds one of `sym:n`, `alt:n`, `cyclic:n`, `dihedral:n`, `trivial:n`.
    pub fn named(spec: &str) -> Result<Self> {
        let (kind, n) = spec
            .split_once(':')
            .ok_or_else(|| Error::validation(format!("group spec {spec:?} is not of the form kind:n")))?;
        let n: usize = n.trim().parse().map_err(|_| Error::validation(format!("bad degree in group spec {spec:?}")))?;
        Error::check_range("group degree", n, 1, 64)?;
        let cycle = |pts: &[usize]| -> Permutation {
            let mut images: Vec<usize> = (0..n).collect();
            for (i, &p) in pts.iter().enumerate() {
                images[p] = pts[(i + 1) % pts.len()];
            }
            Permutation { images }
        };
        let rotation = Permutation { images: (0..n).map(|x| (x + 1) % n).collect() };
        let gens = match kind.trim() {
            "trivial" => vec![],
            "cyclic" => vec![rotation],
            "dihedral" => {
                let reflection = Permutation { images: (0..n).map(|x| (n - x) % n).collect() };
                vec![rotation, reflection]
            }
            "sym" => {
                Error::check_range("symmetric group degree", n, 1, 10)?;
                if n == 1 {
                    vec![]
                } else {
                    vec![cycle(&[0, 1]), rotation]
                }
            }
            "alt" => {
                Error::check_range("alternating group degree", n, 1, 10)?;
                (2..n).map(|i| cycle(&[0, 1, i])).collect()
            }
            other => return Err(Error::validation(format!("unknown group kind {other:?}"))),
        };
        Self::generate(n, &gens, DEFAULT_GROUP_CAP)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// Brute-force check that `a ∘ b` lies in the group for all pairs.
    pub fn is_closed(&self) -> bool {
        let set: HashSet<&Permutation> = self.elements.iter().collect();
        self.elements.iter().all(|a| self.elements.iter().all(|b| set.contains(&a.compose(b))))
    }
}

/// A function `X → Y` stored as its image array of color indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    image: Vec<usize>,
}

impl Coloring {
    /// Validates every entry against the color count `m`.
    pub fn new(image: Vec<usize>, m: usize) -> Result<Self> {
        if let Some(&bad) = image.iter().find(|&&c| c >= m) {
            return Err(Error::validation(format!("color {bad} out of range for {m} colors")));
        }
        Ok(Coloring { image })
    }

    pub(crate) fn from_vec_unchecked(image: Vec<usize>) -> Self {
        Coloring { image }
    }

    /// The `index`-th coloring of `n` points with `m` colors in lexicographic
    /// order (point 0 is the most significant digit).
    pub fn from_index(mut index: u64, n: usize, m: usize) -> Self {
        let mut image = vec![0; n];
        for slot in image.iter_mut().rev() {
            *slot = (index % m as u64) as usize;
            index /= m as u64;
        }
        Coloring { image }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }
}

/// Per-color point counts `(k_1, …, k_m)` of a coloring; sums to `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompVector(pub Vec<usize>);

impl CompVector {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Exponent vector of the monomial `w^(k)`.
    pub fn exponents(&self) -> Vec<u32> {
        self.0.iter().map(|&k| k as u32).collect()
    }

    /// All compositions of `n` into `m` non-negative parts, lexicographically
    /// descending (so `(n, 0, …, 0)` comes first).
    pub fn all(n: usize, m: usize) -> Vec<CompVector> {
        fn rec(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<CompVector>) {
            if slots == 1 {
                cur.push(left);
                out.push(CompVector(cur.clone()));
                cur.pop();
                return;
            }
            for k in (0..=left).rev() {
                cur.push(k);
                rec(left - k, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if m > 0 {
            rec(n, m, &mut Vec::with_capacity(m), &mut out);
        }
        out
    }
}

/// `f^σ` with `f^σ(x) = f(σ(x))`.
pub fn act(sigma: &Permutation, f: &Coloring) -> Result<Coloring> {
    if sigma.degree() != f.degree() {
        return Err(Error::Dimension { expected: sigma.degree(), found: f.degree() });
    }
    Ok(Coloring { image: sigma.images.iter().map(|&y| f.image[y]).collect() })
}

pub fn orbit(group: &PermGroup, f: &Coloring) -> Result<BTreeSet<Coloring>> {
    group.elements.iter().map(|s| act(s, f)).collect()
}

pub fn stabilizer(group: &PermGroup, f: &Coloring) -> Result<PermGroup> {
    if group.degree != f.degree() {
        return Err(Error::Dimension { expected: group.degree, found: f.degree() });
    }
    let elements = group.elements.iter().filter(|s| s.fixes(f)).cloned().collect();
    Ok(PermGroup { degree: group.degree, elements })
}

pub fn composition(f: &Coloring, m: usize) -> Result<CompVector> {
    let mut counts = vec![0; m];
    for &c in &f.image {
        if c >= m {
            return Err(Error::validation(format!("color {c} out of range for {m} colors")));
        }
        counts[c] += 1;
    }
    Ok(CompVector(counts))
}

/// `Σ_{σ∈G} (1/|G|) m^{#cycles(σ)}`, the number of orbits of `m`-colorings.
pub fn burnside_count(group: &PermGroup, m: usize) -> Rat {
    let total = group
        .elements
        .iter()
        .fold(Rat::zero(), |acc, s| acc + Rat::from_integer(num_bigint::BigInt::from(m).pow(s.cycle_count() as u32)));
    total / Rat::from_integer(group.order().into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn col(v: &[usize], m: usize) -> Coloring {
        Coloring::new(v.to_vec(), m).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(matches!(Permutation::new(vec![0, 0, 1]), Err(Error::Validation(_))));
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn cycle_notation() {
        let p = Permutation::from_cycles(5, "(0 1)(2 3 4)").unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 4, 2]);
        assert_eq!(p.to_string(), "(0 1)(2 3 4)");
        assert_eq!(Permutation::from_cycles(3, "").unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::from_cycles(3, "(1,2)").unwrap().images(), &[0, 2, 1]);
        assert_eq!(Permutation::identity(2).to_string(), "()");
        assert!(Permutation::from_cycles(3, "(0 3)").is_err());
        assert!(Permutation::from_cycles(3, "(0 1)(1 2)").is_err());
        assert!(Permutation::from_cycles(3, "(0 1").is_err());
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(4).cycle_type(), vec![4, 0, 0, 0]);
        assert_eq!(perm(&[1, 2, 3, 0]).cycle_type(), vec![0, 0, 0, 1]);
        let p = Permutation::from_cycles(5, "(0 1)(2 3 4)").unwrap();
        assert_eq!(p.cycle_type(), vec![0, 1, 1, 0, 0]);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Permutation::identity(3).sign(), 1);
        assert_eq!(perm(&[1, 0, 2]).sign(), -1);
        assert_eq!(perm(&[1, 2, 0]).sign(), 1);
        assert_eq!(perm(&[1, 0, 2]).sign_rat(), -Rat::one());
    }

    #[test]
    fn generate_examples() {
        let g = PermGroup::generate(3, &[], DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(g.order(), 1);
        let c4 = PermGroup::generate(4, &[perm(&[1, 2, 3, 0])], DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(c4.order(), 4);
        let s4 = PermGroup::generate(4, &[perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])], DEFAULT_GROUP_CAP).unwrap();
        // oracle: every one of the 24 permutations of 4 points is a member
        let all = PermGroup::named("sym:4").unwrap();
        assert_eq!(s4.order(), 24);
        assert!(all.elements().iter().all(|p| s4.contains(p)));
        assert!(s4.is_closed());
        let capped = PermGroup::generate(4, &[perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])], 10);
        assert!(matches!(capped, Err(Error::Resource { .. })));
        assert!(matches!(PermGroup::generate(3, &[perm(&[1, 0])], 10), Err(Error::Dimension { .. })));
    }

    #[test]
    fn named_examples() {
        assert_eq!(PermGroup::named("sym:3").unwrap().order(), 6);
        assert_eq!(PermGroup::named("cyclic:5").unwrap().order(), 5);
        assert_eq!(PermGroup::named("alt:4").unwrap().order(), 12);
        assert_eq!(PermGroup::named("alt:2").unwrap().order(), 1);
        assert_eq!(PermGroup::named("trivial:6").unwrap().order(), 1);
        assert_eq!(PermGroup::named("sym:1").unwrap().order(), 1);
        let d4 = PermGroup::named("dihedral:4").unwrap();
        let by_hand = PermGroup::generate(4, &[perm(&[1, 2, 3, 0]), perm(&[0, 3, 2, 1])], 100).unwrap();
        assert_eq!(d4.order(), 8);
        assert!(by_hand.elements().iter().all(|p| d4.contains(p)));
        assert_eq!(PermGroup::named("dihedral:5").unwrap().order(), 10);
        assert!(PermGroup::named("foo:3").is_err());
        assert!(PermGroup::named("sym").is_err());
        assert!(PermGroup::named("sym:0").is_err());
        assert!(PermGroup::named("sym:11").is_err());
        assert!(PermGroup::named("cyclic:x").is_err());
    }

    #[test]
    fn from_elements_checks_axioms() {
        let c3 = PermGroup::named("cyclic:3").unwrap();
        assert!(PermGroup::from_elements(3, c3.elements().to_vec()).is_ok());
        assert!(PermGroup::from_elements(3, vec![perm(&[1, 2, 0])]).is_err());
        assert!(PermGroup::from_elements(3, vec![Permutation::identity(3), perm(&[1, 2, 0])]).is_err());
    }

    #[test]
    fn act_examples() {
        let f = col(&[0, 1, 2], 3);
        assert_eq!(act(&Permutation::identity(3), &f).unwrap(), f);
        let c = col(&[1, 1, 1], 2);
        assert_eq!(act(&perm(&[2, 0, 1]), &c).unwrap(), c);
        // σ = (0 1 2): 0↦1, 1↦2, 2↦0; f^σ(x) = f(σ(x)) = [f(1), f(2), f(0)]
        let sigma = Permutation::from_cycles(3, "(0 1 2)").unwrap();
        assert_eq!(act(&sigma, &f).unwrap().image(), &[1, 2, 0]);
        assert!(act(&Permutation::identity(2), &f).is_err());
    }

    #[test]
    fn orbit_examples() {
        let f = col(&[0, 0, 1, 1], 2);
        assert_eq!(orbit(&PermGroup::trivial(4), &f).unwrap().len(), 1);
        assert_eq!(orbit(&PermGroup::named("cyclic:4").unwrap(), &f).unwrap().len(), 4);
        assert_eq!(orbit(&PermGroup::named("sym:3").unwrap(), &col(&[2, 2, 2], 3)).unwrap().len(), 1);
    }

    #[test]
    fn stabilizer_examples() {
        let s3 = PermGroup::named("sym:3").unwrap();
        assert_eq!(stabilizer(&s3, &col(&[1, 1, 1], 2)).unwrap().order(), 6);
        let st = stabilizer(&s3, &col(&[0, 0, 1], 2)).unwrap();
        assert_eq!(st.order(), 2);
        assert!(st.contains(&perm(&[1, 0, 2])));
        assert_eq!(stabilizer(&PermGroup::trivial(3), &col(&[0, 1, 0], 2)).unwrap().order(), 1);
    }

    #[test]
    fn composition_examples() {
        assert_eq!(composition(&col(&[0, 0, 1], 2), 2).unwrap().0, vec![2, 1]);
        assert_eq!(composition(&col(&[1, 1, 1], 3), 3).unwrap().0, vec![0, 3, 0]);
        assert_eq!(composition(&col(&[0, 1, 2, 1], 3), 3).unwrap().0, vec![1, 2, 1]);
        assert!(composition(&col(&[0, 2], 3), 2).is_err());
        assert!(Coloring::new(vec![0, 3], 3).is_err());
    }

    #[test]
    fn compositions_enumerated() {
        let all = CompVector::all(3, 2);
        assert_eq!(
            all.iter().map(|c| c.0.clone()).collect::<Vec<_>>(),
            vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]
        );
        // C(n+m-1, m-1)
        assert_eq!(CompVector::all(5, 3).len(), 21);
        assert_eq!(CompVector::all(0, 2).len(), 1);
    }

    #[test]
    fn coloring_index_roundtrip() {
        let all: BTreeSet<Coloring> = (0..27).map(|i| Coloring::from_index(i, 3, 3)).collect();
        assert_eq!(all.len(), 27);
        assert_eq!(Coloring::from_index(5, 3, 3).image(), &[0, 1, 2]);
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
    }

    fn arb_group() -> impl Strategy<Value = PermGroup> {
        (1usize..=5).prop_flat_map(|n| {
            prop::collection::vec(arb_perm(n), 0..=2)
                .prop_map(move |gens| PermGroup::generate(n, &gens, DEFAULT_GROUP_CAP).unwrap())
        })
    }

    proptest! {
        #[test]
        fn orbit_stabilizer(g in arb_group(), m in 1usize..=3, seed in any::<u64>()) {
            let n = g.degree();
            let total = (m as u64).pow(n as u32);
            let f = Coloring::from_index(seed % total, n, m);
            let o = orbit(&g, &f).unwrap();
            let s = stabilizer(&g, &f).unwrap();
            prop_assert_eq!(o.len() * s.order(), g.order());
        }

        #[test]
        fn act_is_right_action(
            (s, t, f) in (1usize..=6).prop_flat_map(|n| (
                arb_perm(n),
                arb_perm(n),
                prop::collection::vec(0usize..3, n).prop_map(|v| Coloring::new(v, 3).unwrap()),
            ))
        ) {
            prop_assert_eq!(act(&s.compose(&t), &f).unwrap(), act(&t, &act(&s, &f).unwrap()).unwrap());
        }

        #[test]
        fn weight_is_constant_on_orbits(g in arb_group(), seed in any::<u64>()) {
            let n = g.degree();
            let f = Coloring::from_index(seed % 3u64.pow(n as u32), n, 3);
            let k = composition(&f, 3).unwrap();
            prop_assert_eq!(k.total(), n);
            for h in orbit(&g, &f).unwrap() {
                prop_assert_eq!(&composition(&h, 3).unwrap(), &k);
            }
        }

        #[test]
        fn sign_and_cycle_type_structure((a, b) in (arb_perm(5), arb_perm(5))) {
            prop_assert_eq!(a.compose(&b).sign(), a.sign() * b.sign());
            let conj = b.compose(&a).compose(&b.inverse());
            prop_assert_eq!(conj.cycle_type(), a.cycle_type());
            let weighted: usize = a.cycle_type().iter().enumerate().map(|(i, c)| (i + 1) * c).sum();
            prop_assert_eq!(weighted, 5);
            let parity: usize = a.cycle_type().iter().enumerate().map(|(i, c)| i * c).sum();
            prop_assert_eq!(a.sign(), if parity.is_multiple_of(2) { 1 } else { -1 });
        }

        #[test]
        fn generated_groups_are_closed(g in arb_group()) {
            prop_assert!(g.is_closed());
            prop_assert!(g.contains(&Permutation::identity(g.degree())));
            let fact: usize = (1..=g.degree()).product();
            prop_assert_eq!(fact % g.order(), 0);
        }
    }
}
