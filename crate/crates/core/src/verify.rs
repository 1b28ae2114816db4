//! Randomized and exhaustive verification suites that compare each identity
//! against its brute-force oracle.
//!
//! Every random instance is drawn up front from a ChaCha generator seeded by
//! [`VerifyConfig::seed`]; only the evaluation fans out across threads, and
//! the first failing instance is chosen by position, so a report depends on
//! the configuration alone.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{format_rat, MultiPoly, Rat};
use crate::cycleindex::factorial;
use crate::enumeration::{
    brute_force_orbit_counts, extended_enumerate, lemma_key_check, lhs_partition_oracle, lhs_stabilizer_oracle,
    polya_enumerate, Caps, DeltaWeight,
};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::formats::{delta_to_json, group_to_json, matrix_to_json};
use crate::permgroup::{PermGroup, Permutation, DEFAULT_GROUP_CAP};
use crate::symdet::{
    det_bareiss, det_via_traces, elementary_symmetric_direct, elementary_symmetric_via_cycle_index,
    elementary_symmetric_via_elements, trace_powers, RatMatrix, MAX_ELEMENTWISE_DEGREE,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// `Σ_{f∈F_σ} W(f) = Z(σ, p(w))` for every `σ ∈ Sym(n)`.
    LemmaKey,
    /// Extended enumeration against the stabilizer oracle.
    Main1,
    /// Extended enumeration against both oracles, including ordered set
    /// partitions.
    Main3,
    /// Uniform `Δ` reproduces brute-force orbit counts for named groups.
    Remark,
    /// `e_n` from the signed cycle index against subset expansion.
    Esym,
    /// Determinant from traces against Bareiss elimination.
    Det,
    /// Signed extended enumeration over `Sym(n)` against `n!·e_n`.
    Consistency,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::LemmaKey, Suite::Main1, Suite::Main3, Suite::Remark, Suite::Esym, Suite::Det, Suite::Consistency];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LemmaKey => "lemma-key",
            Suite::Main1 => "main1",
            Suite::Main3 => "main3",
            Suite::Remark => "remark",
            Suite::Esym => "esym",
            Suite::Det => "det",
            Suite::Consistency => "consistency",
        }
    }

    pub fn parse(s: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::validation(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub max_m: usize,
    pub seed: u64,
    /// Random `(G, Δ, m)` triples for `main1` / `main3`.
    pub trials: usize,
    /// Largest `n = m` bound for the `esym` suite.
    pub max_esym: usize,
    /// Largest matrix order for the `det` suite.
    pub max_order: usize,
    /// Random matrices per order for the `det` suite.
    pub matrices_per_order: usize,
    pub caps: Caps,
    pub strategy: Strategy,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 5,
            max_m: 3,
            seed: 0,
            trials: 50,
            max_esym: 7,
            max_order: 6,
            matrices_per_order: 200,
            caps: Caps::default(),
            strategy: Strategy::default(),
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        Error::check_range("max-n", self.max_n, 1, 8)?;
        Error::check_range("max-m", self.max_m, 1, 8)?;
        Error::check_range("max-esym", self.max_esym, 1, 12)?;
        Error::check_range("max-order", self.max_order, 1, 20)?;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    /// Human-readable description of the first failing case.
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// One line: `suite <name>: <cases> cases PASS|FAIL`.
    pub fn summary(&self) -> String {
        format!("suite {}: {} cases {}", self.suite.name(), self.cases, if self.passed() { "PASS" } else { "FAIL" })
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let (cases, counterexample) = match suite {
        Suite::LemmaKey => lemma_key_suite(cfg)?,
        Suite::Main1 => extension_suite(cfg, false)?,
        Suite::Main3 => extension_suite(cfg, true)?,
        Suite::Remark => remark_suite(cfg)?,
        Suite::Esym => esym_suite(cfg)?,
        Suite::Det => det_suite(cfg)?,
        Suite::Consistency => consistency_suite(cfg)?,
    };
    Ok(SuiteReport { suite, cases, counterexample })
}

/// Evaluates `check` on every case and returns the first failure by index.
fn first_failure<T: Sync>(
    strategy: Strategy,
    cases: &[T],
    check: impl Fn(&T) -> Result<Option<String>> + Sync + Send,
) -> Result<(usize, Option<String>)> {
    let outcomes = strategy.map_slice(cases, check);
    for o in outcomes {
        if let Some(msg) = o? {
            return Ok((cases.len(), Some(msg)));
        }
    }
    Ok((cases.len(), None))
}

fn lemma_key_suite(cfg: &VerifyConfig) -> Result<(usize, Option<String>)> {
    let mut cases = Vec::new();
    for n in 1..=cfg.max_n {
        let g = PermGroup::named(&format!("sym:{n}"))?;
        for s in g.elements() {
            for m in 1..=cfg.max_m {
                cases.push((s.clone(), m));
            }
        }
    }
    first_failure(cfg.strategy, &cases, |(s, m)| {
        let r = lemma_key_check(s, *m, &cfg.caps)?;
        Ok((!r.holds).then(|| {
            format!(
                "sigma = {s} on {} points, m = {m}\n  fixed-coloring sum: {}\n  Z(sigma, p(w)):     {}",
                s.degree(),
                r.lhs.to_text("w"),
                r.rhs.to_text("w")
            )
        }))
    })
}

/// A random `(G, Δ, m)` instance for the extension suites.
#[derive(Debug, Clone)]
pub struct ExtensionCase {
    pub group: PermGroup,
    pub delta: DeltaWeight,
    pub colors: usize,
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::new(v).expect("shuffle is a bijection")
}

/// Draws `trials` instances: `G` is the closure of up to two random elements
/// of `Sym(n)`, and `Δ` cycles through uniform, sign and a random table with
/// numerators in `[-5, 5]` and denominators in `[1, 5]`.
pub fn random_extension_cases(cfg: &VerifyConfig) -> Result<Vec<ExtensionCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(cfg.trials);
    for i in 0..cfg.trials {
        let n = rng.gen_range(1..=cfg.max_n);
        let m = rng.gen_range(1..=cfg.max_m);
        let k = rng.gen_range(0..=2);
        let gens: Vec<Permutation> = (0..k).map(|_| random_perm(&mut rng, n)).collect();
        let group = PermGroup::generate(n, &gens, DEFAULT_GROUP_CAP)?;
        let delta = match i % 3 {
            0 => DeltaWeight::Uniform,
            1 => DeltaWeight::Sign,
            _ => DeltaWeight::table(group.elements().iter().map(|s| {
                let num: i64 = rng.gen_range(-5..=5);
                let den: i64 = rng.gen_range(1..=5);
                (s.clone(), Rat::new(BigInt::from(num), BigInt::from(den)))
            })),
        };
        out.push(ExtensionCase { group, delta, colors: m });
    }
    Ok(out)
}

fn describe_case(c: &ExtensionCase) -> String {
    format!(
        "group = {}\n  delta = {}\n  m = {}",
        group_to_json(&c.group),
        delta_to_json(&c.delta, c.group.degree()),
        c.colors
    )
}

fn extension_suite(cfg: &VerifyConfig, with_partitions: bool) -> Result<(usize, Option<String>)> {
    let cases = random_extension_cases(cfg)?;
    // Oracles run sequentially inside each case; the cases themselves fan out.
    first_failure(cfg.strategy, &cases, |c| {
        let rhs = extended_enumerate(&c.group, &c.delta, c.colors, Strategy::Sequential)?;
        let stab = lhs_stabilizer_oracle(&c.group, &c.delta, c.colors, &cfg.caps, Strategy::Sequential)?;
        let mut msg = None;
        if rhs != stab {
            msg = Some(format!(
                "{}\n  sum of delta over G_f:  {}\n  sum delta(s) Z(s, p(w)): {}",
                describe_case(c),
                stab.to_text(),
                rhs.to_text()
            ));
        } else if with_partitions {
            let part = lhs_partition_oracle(&c.group, &c.delta, c.colors, &cfg.caps, Strategy::Sequential)?;
            if part != rhs {
                msg = Some(format!(
                    "{}\n  ordered-partition sum:   {}\n  sum delta(s) Z(s, p(w)): {}",
                    describe_case(c),
                    part.to_text(),
                    rhs.to_text()
                ));
            }
        }
        if msg.is_none() && !rhs.is_homogeneous() {
            msg = Some(format!("{}\n  not homogeneous: {}", describe_case(c), rhs.to_text()));
        }
        Ok(msg)
    })
}

/// Named groups `sym`, `alt`, `cyclic`, `dihedral` of every degree up to
/// `max_n`.
pub fn named_groups(max_n: usize) -> Result<Vec<(String, PermGroup)>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for kind in ["sym", "alt", "cyclic", "dihedral"] {
            let spec = format!("{kind}:{n}");
            let g = PermGroup::named(&spec)?;
            out.push((spec, g));
        }
    }
    Ok(out)
}

fn remark_suite(cfg: &VerifyConfig) -> Result<(usize, Option<String>)> {
    let mut cases = Vec::new();
    for (spec, g) in named_groups(cfg.max_n)? {
        for m in 1..=cfg.max_m {
            cases.push((spec.clone(), g.clone(), m));
        }
    }
    first_failure(cfg.strategy, &cases, |(spec, g, m)| {
        let ext = extended_enumerate(g, &DeltaWeight::Uniform, *m, Strategy::Sequential)?;
        let classical = polya_enumerate(g, *m, Strategy::Sequential)?;
        let orbits = brute_force_orbit_counts(g, *m, &cfg.caps)?;
        let integral = ext.poly().terms().all(|(_, c)| c.is_integer() && !c.is_negative());
        let ok = integral && ext == orbits && classical == orbits;
        Ok((!ok).then(|| {
            format!(
                "group = {spec}, m = {m}\n  uniform extension: {}\n  classical:         {}\n  orbit counts:      {}",
                ext.to_text(),
                classical.to_text(),
                orbits.to_text()
            )
        }))
    })
}

fn esym_suite(cfg: &VerifyConfig) -> Result<(usize, Option<String>)> {
    let mut cases = Vec::new();
    for m in 1..=cfg.max_esym {
        for n in 1..=m {
            cases.push((n, m));
        }
    }
    first_failure(cfg.strategy, &cases, |&(n, m)| {
        let direct = elementary_symmetric_direct(n, m, &cfg.caps)?;
        let classes = elementary_symmetric_via_cycle_index(n, m)?;
        if classes != direct {
            return Ok(Some(format!(
                "n = {n}, m = {m}\n  signed cycle index: {}\n  subset expansion:   {}",
                classes.to_text("w"),
                direct.to_text("w")
            )));
        }
        if n <= MAX_ELEMENTWISE_DEGREE {
            let elements = elementary_symmetric_via_elements(n, m, Strategy::Sequential)?;
            if elements != classes {
                return Ok(Some(format!(
                    "n = {n}, m = {m}\n  element-wise sum: {}\n  class-wise sum:   {}",
                    elements.to_text("w"),
                    classes.to_text("w")
                )));
            }
        }
        Ok(None)
    })
}

/// Random `n × n` matrices with entries `p/q`, `p ∈ [-9, 9]`,
/// `q ∈ [-9, 9] \ {0}`.
pub fn random_matrices(seed: u64, order: usize, count: usize) -> Vec<RatMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (order as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    (0..count)
        .map(|_| {
            let rows = (0..order)
                .map(|_| {
                    (0..order)
                        .map(|_| {
                            let p: i64 = rng.gen_range(-9..=9);
                            let mut q: i64 = rng.gen_range(-9..=8);
                            if q >= 0 {
                                q += 1;
                            }
                            Rat::new(BigInt::from(p), BigInt::from(q))
                        })
                        .collect()
                })
                .collect();
            RatMatrix::from_rows(rows).expect("square")
        })
        .collect()
}

/// Pinned determinant cases: identity matrices, a matrix with a repeated
/// row, and `[[1,2],[3,4]]`.
pub fn pinned_matrices() -> Vec<(RatMatrix, Rat)> {
    let mut v: Vec<(RatMatrix, Rat)> = (1..=6).map(|n| (RatMatrix::identity(n), Rat::one())).collect();
    v.push((RatMatrix::from_ints(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]).expect("square"), Rat::zero()));
    v.push((RatMatrix::from_ints(&[&[1, 2], &[3, 4]]).expect("square"), Rat::from_integer((-2).into())));
    v
}

fn det_suite(cfg: &VerifyConfig) -> Result<(usize, Option<String>)> {
    let mut cases: Vec<(RatMatrix, Option<Rat>)> = pinned_matrices().into_iter().map(|(l, d)| (l, Some(d))).collect();
    for order in 1..=cfg.max_order {
        cases.extend(random_matrices(cfg.seed, order, cfg.matrices_per_order).into_iter().map(|l| (l, None)));
    }
    first_failure(cfg.strategy, &cases, |(l, expected)| {
        let via = det_via_traces(l)?;
        let oracle = det_bareiss(l);
        let ok = via == oracle && expected.as_ref().is_none_or(|e| *e == oracle);
        Ok((!ok).then(|| {
            let traces: Vec<String> =
                trace_powers(l, l.order()).map(|t| t.values().iter().map(format_rat).collect()).unwrap_or_default();
            let mut s = format!(
                "matrix = {}\n  traces = [{}]\n  det via traces = {}\n  det by Bareiss = {}",
                matrix_to_json(l),
                traces.join(", "),
                format_rat(&via),
                format_rat(&oracle)
            );
            if let Some(e) = expected {
                let _ = write!(s, "\n  expected = {}", format_rat(e));
            }
            s
        }))
    })
}

fn consistency_suite(cfg: &VerifyConfig) -> Result<(usize, Option<String>)> {
    let mut cases = Vec::new();
    for n in 1..=cfg.max_n.min(4) {
        for m in 1..=4 {
            cases.push((n, m));
        }
    }
    first_failure(cfg.strategy, &cases, |&(n, m)| {
        let g = PermGroup::named(&format!("sym:{n}"))?;
        let signed = extended_enumerate(&g, &DeltaWeight::Sign, m, Strategy::Sequential)?;
        let expected = if n <= m {
            elementary_symmetric_direct(n, m, &cfg.caps)?.scale(&Rat::from_integer(factorial(n)))
        } else {
            MultiPoly::zero(m)
        };
        Ok((signed.poly() != &expected).then(|| {
            format!(
                "n = {n}, m = {m}\n  extended(sym:n, sign): {}\n  n! * e_n:              {}",
                signed.to_text(),
                expected.to_text("w")
            )
        }))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            max_n: 4,
            max_m: 2,
            trials: 12,
            max_esym: 4,
            max_order: 3,
            matrices_per_order: 10,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn every_suite_passes_small() {
        for s in Suite::ALL {
            let r = run_suite(s, &small()).unwrap();
            assert!(r.passed(), "{}: {:?}", s.name(), r.counterexample);
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()).unwrap(), s);
        }
        assert!(Suite::parse("nope").is_err());
    }

    #[test]
    fn random_cases_depend_only_on_seed() {
        let a = random_extension_cases(&small()).unwrap();
        let b = random_extension_cases(&small()).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.group, y.group);
            assert_eq!(x.delta, y.delta);
            assert_eq!(x.colors, y.colors);
        }
        assert_eq!(random_matrices(3, 3, 5), random_matrices(3, 3, 5));
        assert_ne!(random_matrices(3, 3, 5), random_matrices(4, 3, 5));
    }

    #[test]
    fn reports_first_failure() {
        let cases = [1, 2, 3, 4];
        let (n, msg) =
            first_failure(Strategy::Parallel, &cases, |&x| Ok((x >= 2).then(|| format!("bad {x}")))).unwrap();
        assert_eq!(n, 4);
        assert_eq!(msg.as_deref(), Some("bad 2"));
    }

    #[test]
    fn rejects_out_of_range_config() {
        let cfg = VerifyConfig { max_n: 0, ..VerifyConfig::default() };
        assert!(run_suite(Suite::Main1, &cfg).is_err());
    }
}
