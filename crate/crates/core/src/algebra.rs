//! Exact rationals and sparse multivariate polynomials over them.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational of unbounded magnitude, always stored in lowest terms with
/// a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Renders `p/q`, or `p` when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exponent vector, one slot per indeterminate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Graded lexicographic order: total degree first, then lex on exponents.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms live in a hash map keyed by exponent vector; zero coefficients are
/// never stored, so two polynomials are equal exactly when their term maps
/// are. Canonical graded-lex order is applied only when terms are listed via
/// [`MultiPoly::sorted_terms`] or rendered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: HashMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: HashMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::constant(nvars), c);
        p
    }

    /// The indeterminate with zero-based index `idx`.
    pub fn var(nvars: usize, idx: usize) -> Result<Self> {
        if idx >= nvars {
            return Err(Error::Dimension { expected: nvars, found: idx + 1 });
        }
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Ok(Self::monomial(Monomial(e), Rat::one()))
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let mut p = Self::zero(m.len());
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated monomials.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut p = Self::zero(nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(Error::Dimension { expected: nvars, found: exp.len() });
            }
            p.add_term(Monomial(exp), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Terms in graded-lex descending order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.grlex_cmp(a.0));
        v
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rat {
        self.terms.get(&Monomial(exponents.to_vec())).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coefficient_sum(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| acc + c)
    }

    /// True when every term has total degree `d` (the zero polynomial
    /// qualifies for every `d`).
    pub fn is_homogeneous(&self, d: u64) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        debug_assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn check_dims(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension { expected: self.nvars, found: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&-Rat::one())
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dims(other)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// `self^e` by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Replaces variable `i` by `images[i]` and expands.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.nvars {
            return Err(Error::Dimension { expected: self.nvars, found: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            // No variables: only the constant term can be present.
            None => return Ok(self.clone()),
        };
        for img in images {
            if img.nvars != target {
                return Err(Error::Dimension { expected: target, found: img.nvars });
            }
        }
        let mut cache = PowerCache::new(images);
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut prod = Self::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(cache.get(i, e))?;
                }
            }
            for (pm, pc) in prod.terms {
                out.add_term(pm, pc);
            }
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::Dimension { expected: self.nvars, found: point.len() });
        }
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Renders the polynomial in canonical text form with variables named
    /// `{prefix}1`, `{prefix}2`, …; e.g. `1/2*t1^2 + 1/2*t2`.
    pub fn to_text(&self, prefix: &str) -> String {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("{prefix}{i}")).collect();
        self.to_text_with(&names)
    }

    pub fn to_text_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{e}", names[i]) })
                    .collect();
            if vars.is_empty() {
                out.push_str(&format_rat(&mag));
            } else {
                if !mag.is_one() {
                    let _ = write!(out, "{}*", format_rat(&mag));
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

/// Lazily computed powers of substitution images.
struct PowerCache<'a> {
    images: &'a [MultiPoly],
    powers: Vec<Vec<MultiPoly>>,
}

impl<'a> PowerCache<'a> {
    fn new(images: &'a [MultiPoly]) -> Self {
        PowerCache { images, powers: vec![Vec::new(); images.len()] }
    }

    fn get(&mut self, var: usize, e: u32) -> &MultiPoly {
        let slot = &mut self.powers[var];
        if slot.is_empty() {
            slot.push(self.images[var].clone());
        }
        while slot.len() < e as usize {
            let next = slot.last().unwrap().mul(&self.images[var]).expect("same ring");
            slot.push(next);
        }
        &slot[e as usize - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(nvars: usize, terms: &[(&[u32], i64, i64)]) -> MultiPoly {
        MultiPoly::from_terms(nvars, terms.iter().map(|(e, n, d)| (e.to_vec(), rat(*n, *d)))).unwrap()
    }

    fn w(nvars: usize, i: usize) -> MultiPoly {
        MultiPoly::var(nvars, i).unwrap()
    }

    #[test]
    fn rat_parse_and_format() {
        assert_eq!(parse_rat("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rat("-7").unwrap(), int(-7));
        assert_eq!(parse_rat(" 2/-4 ").unwrap(), rat(-1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(format_rat(&rat(-3, 6)), "-1/2");
        assert_eq!(format_rat(&int(5)), "5");
    }

    #[test]
    fn add_examples() {
        let a = w(2, 0).add(&w(2, 1)).unwrap();
        let b = w(2, 0).sub(&w(2, 1)).unwrap();
        assert_eq!(a.add(&b).unwrap(), w(2, 0).scale(&int(2)));
        assert_eq!(a.add(&MultiPoly::zero(2)).unwrap(), a);
        let t = p(2, &[(&[2, 0], 1, 1)]).add(&p(2, &[(&[1, 1], 3, 1)])).unwrap();
        assert_eq!(t.to_text("t"), "t1^2 + 3*t1*t2");
        assert!(matches!(a.add(&MultiPoly::zero(3)), Err(Error::Dimension { .. })));
    }

    #[test]
    fn mul_examples() {
        let s = w(2, 0).add(&w(2, 1)).unwrap();
        let d = w(2, 0).sub(&w(2, 1)).unwrap();
        assert_eq!(s.mul(&d).unwrap().to_text("w"), "w1^2 - w2^2");
        assert_eq!(s.mul(&MultiPoly::one(2)).unwrap(), s);
        assert_eq!(s.mul(&s).unwrap().to_text("w"), "w1^2 + 2*w1*w2 + w2^2");
        assert!(s.mul(&MultiPoly::one(1)).is_err());
    }

    #[test]
    fn pow_examples() {
        let s = w(2, 0).add(&w(2, 1)).unwrap();
        assert_eq!(s.pow(0), MultiPoly::one(2));
        assert_eq!(s.pow(2).to_text("w"), "w1^2 + 2*w1*w2 + w2^2");
        let s3 = w(3, 0).add(&w(3, 1)).unwrap().add(&w(3, 2)).unwrap();
        let cube = s3.pow(3);
        // 10 distinct monomials of degree 3 in 3 variables, 27 = 3^3 summed coefficients
        assert_eq!(cube.len(), 10);
        assert_eq!(cube.coefficient_sum(), int(27));
        assert_eq!(cube.coefficient(&[1, 1, 1]), int(6));
        assert_eq!(cube.coefficient(&[2, 1, 0]), int(3));
    }

    #[test]
    fn substitute_examples() {
        let s = w(2, 0).add(&w(2, 1)).unwrap();
        let sq = p(1, &[(&[2], 1, 1)]);
        assert_eq!(sq.substitute(std::slice::from_ref(&s)).unwrap().to_text("w"), "w1^2 + 2*w1*w2 + w2^2");
        assert!(MultiPoly::zero(1).substitute(std::slice::from_ref(&s)).unwrap().is_zero());
        // (t1^2 + t2)/2 at power sums of two variables
        let z = p(2, &[(&[2, 0], 1, 2), (&[0, 1], 1, 2)]);
        let p2 = w(2, 0).pow(2).add(&w(2, 1).pow(2)).unwrap();
        let out = z.substitute(&[s.clone(), p2]).unwrap();
        assert_eq!(out.to_text("w"), "w1^2 + w1*w2 + w2^2");
        assert!(z.substitute(std::slice::from_ref(&s)).is_err());
        assert!(z.substitute(&[s, MultiPoly::one(3)]).is_err());
    }

    #[test]
    fn eval_examples() {
        let sq = p(1, &[(&[2], 1, 1)]);
        assert_eq!(sq.eval(&[int(5)]).unwrap(), int(25));
        assert_eq!(MultiPoly::zero(3).eval(&[int(1), int(2), int(3)]).unwrap(), int(0));
        let z = p(2, &[(&[2, 0], 1, 2), (&[0, 1], -1, 2)]);
        assert_eq!(z.eval(&[int(5), int(29)]).unwrap(), int(-2));
        assert!(z.eval(&[int(5)]).is_err());
    }

    #[test]
    fn text_rendering() {
        let z = p(3, &[(&[3, 0, 0], 1, 6), (&[1, 1, 0], 1, 2), (&[0, 0, 1], 1, 3)]);
        assert_eq!(z.to_text("t"), "1/6*t1^3 + 1/2*t1*t2 + 1/3*t3");
        assert_eq!(MultiPoly::zero(2).to_text("t"), "0");
        assert_eq!(MultiPoly::constant(2, rat(-3, 4)).to_text("t"), "-3/4");
        let q = p(2, &[(&[0, 0], 1, 1), (&[1, 0], -1, 1), (&[0, 2], -5, 3)]);
        assert_eq!(q.to_text("w"), "-5/3*w2^2 - w1 + 1");
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..=2, nvars), arb_rat()), 0..5)
            .prop_map(move |terms| MultiPoly::from_terms(nvars, terms).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (MultiPoly, MultiPoly, MultiPoly)> {
        (1usize..=4).prop_flat_map(|n| (arb_poly(n), arb_poly(n), arb_poly(n)))
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in arb_triple()) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert!(a.sub(&a).unwrap().is_zero());
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn identity_substitution_is_noop(a in (1usize..=4).prop_flat_map(arb_poly)) {
            let n = a.nvars();
            let vars: Vec<_> = (0..n).map(|i| MultiPoly::var(n, i).unwrap()).collect();
            prop_assert_eq!(a.substitute(&vars).unwrap(), a);
        }

        #[test]
        fn substitution_commutes_with_evaluation(
            (a, imgs, x) in (1usize..=3, 1usize..=3).prop_flat_map(|(n, k)| (
                arb_poly(n),
                prop::collection::vec(arb_poly(k), n),
                prop::collection::vec(arb_rat(), k),
            ))
        ) {
            let lhs = a.substitute(&imgs).unwrap().eval(&x).unwrap();
            let inner: Vec<Rat> = imgs.iter().map(|g| g.eval(&x).unwrap()).collect();
            prop_assert_eq!(lhs, a.eval(&inner).unwrap());
        }

        #[test]
        fn pow_matches_repeated_multiplication(a in arb_poly(2), e in 0u32..5) {
            let mut acc = MultiPoly::one(2);
            for _ in 0..e {
                acc = acc.mul(&a).unwrap();
            }
            prop_assert_eq!(a.pow(e), acc);
        }

        #[test]
        fn rat_matches_cross_multiplication(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let x = rat(a, b);
            let y = rat(c, d);
            // a/b + c/d == (ad + cb)/bd, compared by cross-multiplication
            let s = &x + &y;
            prop_assert_eq!(s.numer() * BigInt::from(b * d), s.denom() * BigInt::from(a * d + c * b));
            let m = &x * &y;
            prop_assert_eq!(m.numer() * BigInt::from(b * d), m.denom() * BigInt::from(a * c));
            prop_assert!(s.denom().is_positive());
            prop_assert!(num_integer::Integer::gcd(s.numer(), s.denom()).is_one());
        }
    }
}
