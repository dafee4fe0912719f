//! Exact zero-divisor decision procedures.
//!
//! A nonzero non-unit `x̄` of an artinian local ring `R̄ = R/J` is an exact
//! zero-divisor exactly when `(0 : x̄)` is principal. If `(0 : x̄) = (ȳ)` then
//! `ℓ(ȳR̄) = ℓ(R̄) − ℓ(0 : ȳ)` and `ℓ(0 : x̄) = ℓ(R̄) − ℓ(x̄R̄)`, so
//! `ℓ(0 : ȳ) = ℓ(x̄R̄)`; together with `x̄ ⊆ (0 : ȳ)` this forces
//! `(0 : ȳ) = (x̄)`. The pair test therefore needs one Nakayama count, and the
//! reverse annihilator is still checked explicitly whenever a twin is handed in.
//!
//! Everything is computed inside the coordinate space of the ambient ring:
//! quotients `R/(x_1..x_k)` are represented by the ideal `(x_1..x_k)`, and
//! twins are lifted to `R`. Twins are only defined up to a unit (and, on a
//! quotient, up to the ideal), so they are compared by the ideals they generate.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::{annihilator, annihilator_of_ideal, ideal_of, min_gens, principal_generator, IdealInRing};
use crate::ring::{ArtinianRing, RingElement};

/// Longest sequence accepted by the factorial/exponential checks.
pub const MAX_EXHAUSTIVE_LEN: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairFailure {
    Zero,
    Unit,
    AnnihilatorZero,
    AnnihilatorNotPrincipal,
}

impl PairFailure {
    pub fn as_str(&self) -> &'static str {
        match self {
            PairFailure::Zero => "zero",
            PairFailure::Unit => "unit",
            PairFailure::AnnihilatorZero => "annihilator_zero",
            PairFailure::AnnihilatorNotPrincipal => "annihilator_not_principal",
        }
    }
}

#[derive(Clone, Debug)]
pub struct EzdReport {
    pub x: RingElement,
    pub verdict: bool,
    pub twin: Option<RingElement>,
    /// `(ℓ(x̄R̄), ℓ(0 : x̄))` in the working quotient `R̄`.
    pub dims: (usize, usize),
    pub failure: Option<PairFailure>,
}

fn ideal_mod(ring: &ArtinianRing, gens: &[RingElement], modulo: Option<&IdealInRing>) -> IdealInRing {
    let i = ideal_of(ring, gens);
    match modulo {
        Some(j) => i.sum(j),
        None => i,
    }
}

fn dim_of(modulo: Option<&IdealInRing>) -> usize {
    modulo.map_or(0, IdealInRing::dim)
}

/// Is `x̄` an exact zero-divisor on `R/J`? The twin is the deterministic principal generator
/// of `(0 : x̄)`, lifted to `R`.
pub fn pair_test(ring: &ArtinianRing, x: &RingElement, modulo: Option<&IdealInRing>) -> EzdReport {
    let base = dim_of(modulo);
    let fail = |reason, dims| EzdReport {
        x: x.clone(),
        verdict: false,
        twin: None,
        dims,
        failure: Some(reason),
    };
    let xi = ideal_mod(ring, std::slice::from_ref(x), modulo);
    let ann = annihilator(ring, x, modulo);
    let dims = (xi.dim() - base, ann.dim() - base);
    if dims.0 == 0 {
        return fail(PairFailure::Zero, dims);
    }
    if ring.is_unit(x) {
        return fail(PairFailure::Unit, dims);
    }
    if dims.1 == 0 {
        return fail(PairFailure::AnnihilatorZero, dims);
    }
    match principal_generator(ring, &ann, modulo) {
        None => fail(PairFailure::AnnihilatorNotPrincipal, dims),
        Some(twin) => {
            debug_assert!(is_pair(ring, x, &twin, modulo));
            EzdReport {
                x: x.clone(),
                verdict: true,
                twin: Some(twin),
                dims,
                failure: None,
            }
        }
    }
}

/// `(x̄, ȳ)` is a pair of exact zero-divisors on `R/J`: both nonzero non-units,
/// `(0 : x̄) = (ȳ)` and `(0 : ȳ) = (x̄)`.
pub fn is_pair(ring: &ArtinianRing, x: &RingElement, y: &RingElement, modulo: Option<&IdealInRing>) -> bool {
    let base = dim_of(modulo);
    let xi = ideal_mod(ring, std::slice::from_ref(x), modulo);
    let yi = ideal_mod(ring, std::slice::from_ref(y), modulo);
    if xi.dim() == base || yi.dim() == base || ring.is_unit(x) || ring.is_unit(y) {
        return false;
    }
    annihilator(ring, x, modulo) == yi && annihilator(ring, y, modulo) == xi
}

/// Same ideal in `R/J`: the notion of equality for twins.
pub fn same_up_to_unit(ring: &ArtinianRing, a: &RingElement, b: &RingElement, modulo: Option<&IdealInRing>) -> bool {
    ideal_mod(ring, std::slice::from_ref(a), modulo) == ideal_mod(ring, std::slice::from_ref(b), modulo)
}

#[derive(Clone, Debug)]
pub struct PermutabilityResult {
    pub verdict: bool,
    /// 1-based positions of the first ordering (lexicographic) that is not a sequence.
    pub failing_permutation: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrongMethod {
    /// Twin lifts adjusted into the annihilator by one membership test per index.
    Lift,
    /// Every subset/index combination checked against the definition.
    Exhaustive,
}

#[derive(Clone, Debug)]
pub struct LiftResult {
    pub verdict: bool,
    pub minimal: bool,
    /// `y_i' = y_i + r_1 x_1 + … + r_{i−1} x_{i−1}` with `x_i y_i' = 0`, when the verdict is true.
    pub adjusted_twins: Option<Vec<RingElement>>,
    /// 1-based index whose twin cannot be moved into `(0 : x_i)`.
    pub failing_index: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ExhaustiveResult {
    pub verdict: bool,
    /// First counterexample `(S, j)`, 1-based.
    pub witness: Option<(Vec<usize>, usize)>,
    pub used_adjusted_twins: bool,
}

#[derive(Clone, Debug)]
pub struct StrongResult {
    pub verdict: bool,
    pub method: StrongMethod,
    pub lift: LiftResult,
    pub exhaustive: Option<ExhaustiveResult>,
    pub agree: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct SequenceReport {
    pub xs: Vec<RingElement>,
    pub is_sequence: bool,
    /// 1-based index of the first element that fails on its quotient.
    pub failing_index: Option<usize>,
    pub failure: Option<PairFailure>,
    /// Twin of `x_i` on `R/(x_1..x_{i−1})`, lifted to `R`; one per passing prefix element.
    pub twins: Vec<RingElement>,
    pub mu: usize,
    pub minimal: bool,
    pub permutable: Option<PermutabilityResult>,
    pub strong: Option<StrongResult>,
}

/// Iterated pair tests on `R/(x_1..x_{i−1})`.
pub fn sequence_test(ring: &ArtinianRing, xs: &[RingElement]) -> SequenceReport {
    let mut twins = Vec::new();
    let mut failing_index = None;
    let mut failure = None;
    let mut j = IdealInRing::zero(ring);
    for (i, x) in xs.iter().enumerate() {
        let rep = pair_test(ring, x, Some(&j));
        if !rep.verdict {
            failing_index = Some(i + 1);
            failure = rep.failure;
            break;
        }
        twins.push(rep.twin.expect("verdict true"));
        j = j.sum(&ideal_of(ring, std::slice::from_ref(x)));
    }
    let mu = min_gens(ring, &ideal_of(ring, xs), None).0;
    SequenceReport {
        xs: xs.to_vec(),
        is_sequence: failing_index.is_none(),
        failing_index,
        failure,
        twins,
        mu,
        minimal: mu == xs.len(),
        permutable: None,
        strong: None,
    }
}

/// Lexicographic permutations of `0..n`.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

pub fn permutability_test(ring: &ArtinianRing, xs: &[RingElement]) -> Result<PermutabilityResult> {
    if xs.len() > MAX_EXHAUSTIVE_LEN {
        return Err(Error::TooLong {
            len: xs.len(),
            max: MAX_EXHAUSTIVE_LEN,
        });
    }
    for perm in permutations(xs.len()) {
        let ordered: Vec<RingElement> = perm.iter().map(|&i| xs[i].clone()).collect();
        if !sequence_test(ring, &ordered).is_sequence {
            return Ok(PermutabilityResult {
                verdict: false,
                failing_permutation: Some(perm.iter().map(|i| i + 1).collect()),
            });
        }
    }
    Ok(PermutabilityResult {
        verdict: true,
        failing_permutation: None,
    })
}

fn check_sequence_twins(ring: &ArtinianRing, xs: &[RingElement], twins: &[RingElement]) -> Result<()> {
    if twins.len() != xs.len() {
        return Err(Error::Precondition("one twin per sequence element is required".into()));
    }
    let mut j = IdealInRing::zero(ring);
    for (i, (x, y)) in xs.iter().zip(twins).enumerate() {
        if !is_pair(ring, x, y, Some(&j)) {
            return Err(Error::Precondition(format!(
                "element {} with the given twin is not a pair of exact zero-divisors on its quotient",
                i + 1
            )));
        }
        j = j.sum(&ideal_of(ring, std::slice::from_ref(x)));
    }
    Ok(())
}

/// Strongness via twin adjustment: the sequence must be minimal and each twin must lie in
/// `(0 : x_i) + (x_1..x_{i−1})`; the `(0 : x_i)` component is the adjusted twin.
pub fn strong_test_lift(ring: &ArtinianRing, xs: &[RingElement], twins: &[RingElement]) -> Result<LiftResult> {
    check_sequence_twins(ring, xs, twins)?;
    let mu = min_gens(ring, &ideal_of(ring, xs), None).0;
    let minimal = mu == xs.len();
    if !minimal {
        return Ok(LiftResult {
            verdict: false,
            minimal,
            adjusted_twins: None,
            failing_index: None,
        });
    }
    let mut adjusted = Vec::new();
    for (i, (x, y)) in xs.iter().zip(twins).enumerate() {
        let ann = annihilator(ring, x, None);
        let prefix = ideal_of(ring, &xs[..i]);
        match ann.space().split(prefix.space(), y.coords()) {
            Some((inside, _)) => adjusted.push(RingElement(inside)),
            None => {
                return Ok(LiftResult {
                    verdict: false,
                    minimal,
                    adjusted_twins: None,
                    failing_index: Some(i + 1),
                })
            }
        }
    }
    Ok(LiftResult {
        verdict: true,
        minimal,
        adjusted_twins: Some(adjusted),
        failing_index: None,
    })
}

/// Strongness straight from the definition: for every `j` and every `S ⊆ {1..n} \ {j}`,
/// `(x_j, y_j)` is a pair on `R/(x_S)`. Enumerates `j` outermost, subsets by bitmask.
pub fn strong_test_exhaustive(ring: &ArtinianRing, xs: &[RingElement], twins: &[RingElement]) -> Result<ExhaustiveResult> {
    let n = xs.len();
    if n > MAX_EXHAUSTIVE_LEN {
        return Err(Error::TooLong {
            len: n,
            max: MAX_EXHAUSTIVE_LEN,
        });
    }
    if twins.len() != n {
        return Err(Error::Precondition("one twin per sequence element is required".into()));
    }
    for j in 0..n {
        for mask in 0u32..(1 << n) {
            if mask & (1 << j) != 0 {
                continue;
            }
            let subset: Vec<usize> = (0..n).filter(|k| mask & (1 << k) != 0).collect();
            let gens: Vec<RingElement> = subset.iter().map(|&k| xs[k].clone()).collect();
            let jx = ideal_of(ring, &gens);
            if !is_pair(ring, &xs[j], &twins[j], Some(&jx)) {
                return Ok(ExhaustiveResult {
                    verdict: false,
                    witness: Some((subset.iter().map(|k| k + 1).collect(), j + 1)),
                    used_adjusted_twins: false,
                });
            }
        }
    }
    Ok(ExhaustiveResult {
        verdict: true,
        witness: None,
        used_adjusted_twins: false,
    })
}

/// Runs the lift test and, for short sequences, the exhaustive test with the adjusted twins
/// (raw sequence twins when no adjustment exists).
pub fn strong_test(ring: &ArtinianRing, xs: &[RingElement], twins: &[RingElement]) -> Result<StrongResult> {
    let lift = strong_test_lift(ring, xs, twins)?;
    let exhaustive = if xs.len() <= MAX_EXHAUSTIVE_LEN {
        let (used, ys) = match &lift.adjusted_twins {
            Some(a) => (true, a.as_slice()),
            None => (false, twins),
        };
        let mut e = strong_test_exhaustive(ring, xs, ys)?;
        e.used_adjusted_twins = used;
        Some(e)
    } else {
        None
    };
    let agree = exhaustive.as_ref().map(|e| e.verdict == lift.verdict);
    Ok(StrongResult {
        verdict: lift.verdict,
        method: StrongMethod::Lift,
        lift,
        exhaustive,
        agree,
    })
}

/// Which optional checks to run on a sequence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Checks {
    pub permutable: bool,
    pub strong: bool,
}

impl Checks {
    pub fn all() -> Self {
        Checks {
            permutable: true,
            strong: true,
        }
    }
}

/// `sequence_test` plus the requested permutability and strongness checks
/// (skipped when the input is not a sequence; both are then false).
pub fn analyze_sequence(ring: &ArtinianRing, xs: &[RingElement], checks: Checks) -> Result<SequenceReport> {
    let mut rep = sequence_test(ring, xs);
    if checks.permutable {
        rep.permutable = Some(if rep.is_sequence {
            permutability_test(ring, xs)?
        } else {
            PermutabilityResult {
                verdict: false,
                failing_permutation: Some((1..=xs.len()).collect()),
            }
        });
    }
    if checks.strong && rep.is_sequence {
        rep.strong = Some(strong_test(ring, xs, &rep.twins)?);
    }
    if let (Some(p), Some(s)) = (&rep.permutable, &rep.strong) {
        debug_assert!(!s.verdict || p.verdict, "strong implies permutable");
        debug_assert!(!p.verdict || rep.minimal, "permutable implies minimal");
    }
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorReport {
    /// `ℓ((0 :_N x)/yN)` with `N = R/J`.
    pub tor1: usize,
    /// `ℓ((0 :_N y)/xN)`.
    pub tor2: usize,
}

impl TorReport {
    /// The resolution `… → R →y R →x R` is 2-periodic, so `Tor_{i+2} ≅ Tor_i` for `i ≥ 1`.
    pub fn vanishes(&self) -> bool {
        self.tor1 == 0 && self.tor2 == 0
    }
}

/// `Tor_i^R(R/J, R/(x))` for a pair `(x, y)` on `R`, from the periodic resolution of `R/(x)`.
pub fn tor_periodic(ring: &ArtinianRing, x: &RingElement, y: &RingElement, j: &IdealInRing) -> Result<TorReport> {
    if !is_pair(ring, x, y, None) {
        return Err(Error::Precondition("(x, y) is not a pair of exact zero-divisors on R".into()));
    }
    let yn = ideal_of(ring, std::slice::from_ref(y)).sum(j);
    let xn = ideal_of(ring, std::slice::from_ref(x)).sum(j);
    let ann_x = annihilator(ring, x, Some(j));
    let ann_y = annihilator(ring, y, Some(j));
    Ok(TorReport {
        tor1: ann_x.dim() - yn.dim(),
        tor2: ann_y.dim() - xn.dim(),
    })
}

#[derive(Clone, Debug)]
pub struct TorStrongResult {
    pub verdict: bool,
    /// 1-based index of an element that is not an exact zero-divisor on `R`.
    pub not_ezd: Option<usize>,
    /// First `(S, j, report)` with nonvanishing Tor (1-based).
    pub first_nonzero: Option<(Vec<usize>, usize, TorReport)>,
}

/// Strongness through homology: every `x_j` is an exact zero-divisor on `R` and
/// `Tor_i(R/(x_S), R/(x_j)) = 0` for all `i > 0`, all `S ∌ j`.
pub fn strong_test_tor(ring: &ArtinianRing, xs: &[RingElement]) -> Result<TorStrongResult> {
    let n = xs.len();
    if n > MAX_EXHAUSTIVE_LEN {
        return Err(Error::TooLong {
            len: n,
            max: MAX_EXHAUSTIVE_LEN,
        });
    }
    let mut twins = Vec::new();
    for (j, x) in xs.iter().enumerate() {
        let rep = pair_test(ring, x, None);
        match rep.twin {
            Some(t) => twins.push(t),
            None => {
                return Ok(TorStrongResult {
                    verdict: false,
                    not_ezd: Some(j + 1),
                    first_nonzero: None,
                })
            }
        }
    }
    for j in 0..n {
        for mask in 0u32..(1 << n) {
            if mask & (1 << j) != 0 {
                continue;
            }
            let subset: Vec<usize> = (0..n).filter(|k| mask & (1 << k) != 0).collect();
            let gens: Vec<RingElement> = subset.iter().map(|&k| xs[k].clone()).collect();
            let t = tor_periodic(ring, &xs[j], &twins[j], &ideal_of(ring, &gens))?;
            if !t.vanishes() {
                return Ok(TorStrongResult {
                    verdict: false,
                    not_ezd: None,
                    first_nonzero: Some((subset.iter().map(|k| k + 1).collect(), j + 1, t)),
                });
            }
        }
    }
    Ok(TorStrongResult {
        verdict: true,
        not_ezd: None,
        first_nonzero: None,
    })
}

fn require_strong(ring: &ArtinianRing, xs: &[RingElement], twins: &[RingElement]) -> Result<()> {
    check_sequence_twins(ring, xs, twins)?;
    let lift = strong_test_lift(ring, xs, twins)?;
    if !lift.verdict {
        return Err(Error::Precondition("sequence is not strong".into()));
    }
    for (x, y) in xs.iter().zip(twins) {
        if !ring.mul(x, y).is_zero() {
            return Err(Error::Precondition("twins must satisfy x_i·y_i = 0 (use adjusted twins)".into()));
        }
    }
    Ok(())
}

fn twin_choice(xs: &[RingElement], twins: &[RingElement], mask: u32) -> Vec<RingElement> {
    xs.iter()
        .zip(twins)
        .enumerate()
        .map(|(i, (x, y))| if mask & (1 << i) != 0 { y.clone() } else { x.clone() })
        .collect()
}

/// All `2^n` sequences `z` with `z_i ∈ {x_i, y_i}`, each with its full strongness analysis.
pub fn twin_swap_closure(ring: &ArtinianRing, xs: &[RingElement], adjusted_twins: &[RingElement]) -> Result<Vec<SequenceReport>> {
    if xs.len() > MAX_EXHAUSTIVE_LEN {
        return Err(Error::TooLong {
            len: xs.len(),
            max: MAX_EXHAUSTIVE_LEN,
        });
    }
    require_strong(ring, xs, adjusted_twins)?;
    (0u32..(1 << xs.len()))
        .map(|mask| {
            let z = twin_choice(xs, adjusted_twins, mask);
            analyze_sequence(
                ring,
                &z,
                Checks {
                    permutable: false,
                    strong: true,
                },
            )
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthSumCheck {
    pub lhs: usize,
    pub rhs: usize,
    pub terms: Vec<usize>,
    pub equal: bool,
}

/// `ℓ(R) = Σ_{z_i ∈ {x_i, y_i}} ℓ(R/(z_1..z_n))` for a strong sequence with adjusted twins.
pub fn length_sum_check(ring: &ArtinianRing, xs: &[RingElement], adjusted_twins: &[RingElement]) -> Result<LengthSumCheck> {
    if xs.len() > MAX_EXHAUSTIVE_LEN {
        return Err(Error::TooLong {
            len: xs.len(),
            max: MAX_EXHAUSTIVE_LEN,
        });
    }
    require_strong(ring, xs, adjusted_twins)?;
    let terms: Vec<usize> = (0u32..(1 << xs.len()))
        .map(|mask| ring.length() - ideal_of(ring, &twin_choice(xs, adjusted_twins, mask)).dim())
        .collect();
    let rhs = terms.iter().sum();
    Ok(LengthSumCheck {
        lhs: ring.length(),
        rhs,
        equal: rhs == ring.length(),
        terms,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthBound {
    /// Multiplicity; equals the length for an artinian ring.
    pub e: usize,
    /// `⌊log₂ e⌋`.
    pub bound: usize,
    pub ok: bool,
    pub tight: bool,
}

pub fn floor_log2(e: usize) -> usize {
    assert!(e > 0);
    (usize::BITS - 1 - e.leading_zeros()) as usize
}

/// Compares an achieved strong-sequence length `n` with `log₂ e(R)`.
pub fn strong_length_bound(ring: &ArtinianRing, n: usize) -> LengthBound {
    let e = ring.length();
    let bound = floor_log2(e);
    LengthBound {
        e,
        bound,
        ok: n <= bound,
        tight: 1usize.checked_shl(n as u32).is_some_and(|p| p == e),
    }
}

#[derive(Clone, Debug)]
pub struct AnnihilatorCheck {
    pub principal: bool,
    pub generator: Option<RingElement>,
    pub double_annihilator_ok: bool,
    pub length_ok: bool,
}

impl AnnihilatorCheck {
    pub fn holds(&self) -> bool {
        self.principal && self.double_annihilator_ok && self.length_ok
    }
}

/// For `J = (x_1..x_n)`: is `(0 : J)` principal, does its generator's annihilator equal `J`,
/// and is `ℓ(0 : J) = ℓ(R/J)`?
pub fn annihilator_principal_check(ring: &ArtinianRing, xs: &[RingElement]) -> AnnihilatorCheck {
    let j = ideal_of(ring, xs);
    let ann = annihilator_of_ideal(ring, &j);
    let generator = principal_generator(ring, &ann, None);
    let double_annihilator_ok = generator
        .as_ref()
        .is_some_and(|g| annihilator(ring, g, None) == j);
    AnnihilatorCheck {
        principal: generator.is_some(),
        double_annihilator_ok,
        length_ok: ann.dim() == ring.length() - j.dim(),
        generator,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Pairs,
    Sequences,
    /// Sequences whose elements minimally generate the ideal they span.
    MinimalSequences,
    Strong,
}

#[derive(Clone, Debug)]
pub enum Pool {
    LinearForms,
    AllElements,
    Given(Vec<RingElement>),
}

#[derive(Clone, Debug)]
pub struct SearchHit {
    pub xs: Vec<RingElement>,
    /// Sequence twins; adjusted twins in strong mode.
    pub twins: Vec<RingElement>,
}

/// Cap on the number of candidates a pool may contain.
pub const MAX_POOL: usize = 100_000;

/// Candidate elements, each scaled so its first nonzero coordinate is 1, duplicates removed.
pub fn pool_elements(ring: &ArtinianRing, pool: &Pool) -> Result<Vec<RingElement>> {
    let field = ring.field();
    match pool {
        Pool::Given(list) => {
            let mut out: Vec<RingElement> = Vec::new();
            for e in list {
                let e = ring.projective_normalize(e);
                if !out.contains(&e) {
                    out.push(e);
                }
            }
            Ok(out)
        }
        Pool::LinearForms => {
            let Some(scalars) = field.elements() else {
                return Err(Error::PoolTooLarge("linear forms over QQ are infinite".into()));
            };
            let n = ring.nvars();
            let p = scalars.len();
            let count: f64 = (0..n).map(|i| (p as f64).powi((n - 1 - i) as i32)).sum();
            if count > MAX_POOL as f64 {
                return Err(Error::PoolTooLarge(format!("{count} linear forms")));
            }
            let vars: Vec<RingElement> = (0..n).map(|i| ring.var(i)).collect();
            let mut out = Vec::new();
            for lead in 0..n {
                let tail = n - lead - 1;
                for code in 0..p.pow(tail as u32) {
                    let mut e = vars[lead].clone();
                    let mut c = code;
                    for k in (lead + 1..n).rev() {
                        let coef = &scalars[c % p];
                        c /= p;
                        e = ring.add(&e, &ring.scale(&vars[k], coef));
                    }
                    let e = ring.projective_normalize(&e);
                    if !e.is_zero() && !out.contains(&e) {
                        out.push(e);
                    }
                }
            }
            Ok(out)
        }
        Pool::AllElements => {
            let Some(scalars) = field.elements() else {
                return Err(Error::PoolTooLarge("ring over QQ has infinitely many elements".into()));
            };
            let bits = ring.length() as f64 * (scalars.len() as f64).log2();
            if bits > 20.0 {
                return Err(Error::PoolTooLarge(format!("{bits:.1} bits of elements (limit 20)")));
            }
            let len = ring.length();
            let p = scalars.len();
            let mut out = Vec::new();
            // first nonzero coordinate fixed to 1
            for lead in 0..len {
                let tail = len - lead - 1;
                for code in 0..p.pow(tail as u32) {
                    let mut v = vec![field.zero(); len];
                    v[lead] = field.one();
                    let mut c = code;
                    for k in (lead + 1..len).rev() {
                        v[k] = scalars[c % p].clone();
                        c /= p;
                    }
                    out.push(RingElement(v));
                }
            }
            Ok(out)
        }
    }
}

struct Dfs<'a> {
    ring: &'a ArtinianRing,
    pool: &'a [RingElement],
    mode: SearchMode,
    length: usize,
    limit: Option<usize>,
}

impl Dfs<'_> {
    fn full(&self, hits: &[SearchHit]) -> bool {
        self.limit.is_some_and(|l| hits.len() >= l)
    }

    /// Extends with pool entries from `start` on.
    fn extend(&self, st: &mut Prefix, start: usize, hits: &mut Vec<SearchHit>) {
        if st.xs.len() == self.length {
            let twins = match self.mode {
                SearchMode::Strong => st.adjusted.clone(),
                _ => st.twins.clone(),
            };
            debug_assert!(self.mode != SearchMode::Strong
                || strong_test_lift(self.ring, &st.xs, &st.twins).is_ok_and(|l| l.verdict));
            hits.push(SearchHit { xs: st.xs.clone(), twins });
            return;
        }
        for (i, c) in self.pool.iter().enumerate().skip(start) {
            if self.full(hits) {
                return;
            }
            let Some((twin, adjusted, next)) = self.accept(st, c) else {
                continue;
            };
            let prev = std::mem::replace(&mut st.ideal, next);
            st.xs.push(c.clone());
            st.twins.push(twin);
            st.adjusted.push(adjusted);
            self.extend(st, self.next_start(i), hits);
            st.xs.pop();
            st.twins.pop();
            st.adjusted.pop();
            st.ideal = prev;
        }
    }

    /// Strongness is a condition on the set of pairs (every subset against every other index),
    /// so strong tuples are enumerated once, in increasing pool order.
    fn next_start(&self, i: usize) -> usize {
        match self.mode {
            SearchMode::Strong => i + 1,
            _ => 0,
        }
    }

    /// Can `c` extend the current prefix? Every prefix of a hit qualifies on its own, and for
    /// strong sequences the earlier lifts do not depend on later elements, so only the new
    /// element's twin needs adjusting. Returns the twin, its adjustment and the new ideal.
    fn accept(&self, st: &Prefix, c: &RingElement) -> Option<(RingElement, RingElement, IdealInRing)> {
        let twin = pair_test(self.ring, c, Some(&st.ideal)).twin?;
        let next = st.ideal.sum(&ideal_of(self.ring, std::slice::from_ref(c)));
        let len = st.xs.len() + 1;
        let minimal = || min_gens(self.ring, &next, None).0 == len;
        match self.mode {
            SearchMode::Pairs | SearchMode::Sequences => Some((twin.clone(), twin, next)),
            SearchMode::MinimalSequences => minimal().then(|| (twin.clone(), twin, next)),
            SearchMode::Strong => {
                if !minimal() {
                    return None;
                }
                let ann = annihilator(self.ring, c, None);
                let (inside, _) = ann.space().split(st.ideal.space(), twin.coords())?;
                Some((twin, RingElement(inside), next))
            }
        }
    }
}

struct Prefix {
    xs: Vec<RingElement>,
    twins: Vec<RingElement>,
    adjusted: Vec<RingElement>,
    ideal: IdealInRing,
}

/// Depth-first search for exact zero-divisor tuples drawn from a pool, in pool order.
/// Strong mode lists each set once, ordered by pool position.
/// Top-level branches run in parallel; results keep the sequential order.
pub fn search(
    ring: &ArtinianRing,
    mode: SearchMode,
    length: usize,
    pool: &Pool,
    limit: Option<usize>,
) -> Result<Vec<SearchHit>> {
    let length = if mode == SearchMode::Pairs { 1 } else { length };
    let elements = pool_elements(ring, pool)?;
    if length == 0 {
        return Ok(vec![SearchHit {
            xs: vec![],
            twins: vec![],
        }]);
    }
    let dfs = Dfs {
        ring,
        pool: &elements,
        mode,
        length,
        limit,
    };
    let per_branch: Vec<Vec<SearchHit>> = elements
        .par_iter()
        .enumerate()
        .map(|(i, c)| {
            let mut hits = Vec::new();
            let mut st = Prefix {
                xs: vec![],
                twins: vec![],
                adjusted: vec![],
                ideal: IdealInRing::zero(ring),
            };
            if let Some((twin, adjusted, next)) = dfs.accept(&st, c) {
                st.xs.push(c.clone());
                st.twins.push(twin);
                st.adjusted.push(adjusted);
                st.ideal = next;
                dfs.extend(&mut st, dfs.next_start(i), &mut hits);
            }
            hits
        })
        .collect();
    let mut out: Vec<SearchHit> = per_branch.into_iter().flatten().collect();
    if let Some(l) = limit {
        out.truncate(l);
    }
    Ok(out)
}

/// Longest strong sequence of linear forms (or other pool elements), searching lengths
/// `1, 2, …` until none exists. Returns the length and one witness.
pub fn max_strong_length(ring: &ArtinianRing, pool: &Pool) -> Result<(usize, Option<SearchHit>)> {
    let mut best = (0, None);
    for len in 1..=MAX_EXHAUSTIVE_LEN {
        let hits = search(ring, SearchMode::Strong, len, pool, Some(1))?;
        match hits.into_iter().next() {
            Some(h) => best = (len, Some(h)),
            None => break,
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::monomial::MonomialOrder;
    use crate::ring::build_ring_from_strs;

    const F7: FieldSpec = FieldSpec::Prime(7);

    fn xy_quadrics() -> ArtinianRing {
        build_ring_from_strs(F7, &["x1", "x2"], &["x1^2 + x2^2", "x1*x2"], MonomialOrder::Grevlex).unwrap()
    }

    fn quartic() -> ArtinianRing {
        build_ring_from_strs(F7, &["x"], &["x^4"], MonomialOrder::Grevlex).unwrap()
    }

    fn els(r: &ArtinianRing, srcs: &[&str]) -> Vec<RingElement> {
        srcs.iter().map(|s| r.parse_element(s).unwrap()).collect()
    }

    #[test]
    fn pair_test_examples() {
        let r = xy_quadrics();
        let rep = pair_test(&r, &r.var(0), None);
        assert!(rep.verdict);
        assert!(same_up_to_unit(&r, rep.twin.as_ref().unwrap(), &r.var(1), None));
        assert_eq!(rep.dims, (2, 2));
        let z = pair_test(&r, &r.zero(), None);
        assert_eq!(z.failure, Some(PairFailure::Zero));
        let u = pair_test(&r, &r.one(), None);
        assert_eq!(u.failure, Some(PairFailure::Unit));
        let quartic = quartic();
        let x2 = quartic.parse_element("x^2").unwrap();
        let rep = pair_test(&quartic, &x2, None);
        assert!(rep.verdict);
        assert!(same_up_to_unit(&quartic, rep.twin.as_ref().unwrap(), &x2, None));
    }

    #[test]
    fn non_principal_annihilator() {
        // k[x,y]/(x^2, xy, y^2): (0 : x) = m needs two generators
        let r = build_ring_from_strs(F7, &["x", "y"], &["x^2", "x*y", "y^2"], MonomialOrder::Grevlex).unwrap();
        let rep = pair_test(&r, &r.var(0), None);
        assert_eq!(rep.failure, Some(PairFailure::AnnihilatorNotPrincipal));
    }

    #[test]
    fn permutations_are_lexicographic() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], vec![0, 1, 2]);
        assert_eq!(p[2], vec![1, 0, 2]);
        assert_eq!(p[5], vec![2, 1, 0]);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn zero_is_not_a_sequence() {
        let r = xy_quadrics();
        let rep = sequence_test(&r, &[r.zero()]);
        assert!(!rep.is_sequence);
        assert_eq!(rep.failing_index, Some(1));
    }

    #[test]
    fn singleton_is_permutable_and_strong() {
        let r = xy_quadrics();
        let xs = vec![r.var(0)];
        let rep = analyze_sequence(&r, &xs, Checks::all()).unwrap();
        assert!(rep.permutable.unwrap().verdict);
        assert!(rep.strong.unwrap().verdict);
    }

    #[test]
    fn guards() {
        let r = xy_quadrics();
        let long = vec![r.var(0); 7];
        assert!(matches!(permutability_test(&r, &long), Err(Error::TooLong { .. })));
        assert!(matches!(strong_test_exhaustive(&r, &long, &long), Err(Error::TooLong { .. })));
        // the raw twins of (x1, x2) are not a strong pair
        let xs = els(&r, &["x1", "x2"]);
        let twins = els(&r, &["x2", "x2"]);
        assert!(matches!(length_sum_check(&r, &xs, &twins), Err(Error::Precondition(_))));
        assert!(matches!(tor_periodic(&r, &r.var(0), &r.var(0), &IdealInRing::zero(&r)), Err(Error::Precondition(_))));
        assert!(strong_test_exhaustive(&r, &[], &[]).unwrap().verdict);
    }

    #[test]
    fn floor_log2_values() {
        assert_eq!(floor_log2(1), 0);
        assert_eq!(floor_log2(4), 2);
        assert_eq!(floor_log2(8), 3);
        assert_eq!(floor_log2(9), 3);
    }

    #[test]
    fn linear_form_pool_size() {
        let r = xy_quadrics();
        let pool = pool_elements(&r, &Pool::LinearForms).unwrap();
        assert_eq!(pool.len(), 8);
        assert_eq!(pool[0], r.var(0));
    }

    #[test]
    fn pools_over_rationals_are_rejected() {
        let r = build_ring_from_strs(FieldSpec::Rationals, &["x"], &["x^2"], MonomialOrder::Grevlex).unwrap();
        assert!(matches!(pool_elements(&r, &Pool::LinearForms), Err(Error::PoolTooLarge(_))));
        assert!(matches!(pool_elements(&r, &Pool::AllElements), Err(Error::PoolTooLarge(_))));
    }
    fn mixed_squares() -> ArtinianRing {
        build_ring_from_strs(F7, &["x1", "x2", "x3"], &["x1^2", "x2^2 + x1*x3", "x3^2"], MonomialOrder::Grevlex)
            .unwrap()
    }

    #[test]
    fn xy_quadrics_sequence_is_permutable_not_strong() {
        let r = xy_quadrics();
        let xs = els(&r, &["x1", "x2"]);
        let rep = analyze_sequence(&r, &xs, Checks::all()).unwrap();
        assert!(rep.is_sequence && rep.minimal);
        assert!(same_up_to_unit(&r, &rep.twins[0], &r.var(1), None));
        let j = ideal_of(&r, &xs[..1]);
        assert!(same_up_to_unit(&r, &rep.twins[1], &r.var(1), Some(&j)));
        assert!(rep.permutable.as_ref().unwrap().verdict);
        let strong = rep.strong.unwrap();
        assert!(!strong.verdict);
        assert_eq!(strong.lift.failing_index, Some(2));
        let ex = strong.exhaustive.unwrap();
        assert!(!ex.verdict);
        assert_eq!(ex.witness, Some((vec![2], 1)));
        assert_eq!(strong.agree, Some(true));
    }

    #[test]
    fn xy_quadrics_strong_pair() {
        let r = xy_quadrics();
        let xs = els(&r, &["x1 + x2", "x1"]);
        let rep = sequence_test(&r, &xs);
        assert!(rep.is_sequence);
        let lift = strong_test_lift(&r, &xs, &rep.twins).unwrap();
        assert!(lift.verdict);
        let adj = lift.adjusted_twins.unwrap();
        assert!(same_up_to_unit(&r, &adj[0], &xs[0], None));
        assert!(same_up_to_unit(&r, &adj[1], &r.var(1), None));
        for (x, y) in xs.iter().zip(&adj) {
            assert!(r.mul(x, y).is_zero());
        }
        assert!(strong_test_exhaustive(&r, &xs, &adj).unwrap().verdict);
        assert!(strong_test_tor(&r, &xs).unwrap().verdict);
        let closure = twin_swap_closure(&r, &xs, &adj).unwrap();
        assert_eq!(closure.len(), 4);
        assert!(closure.iter().all(|c| c.strong.as_ref().unwrap().verdict));
        let d = length_sum_check(&r, &xs, &adj).unwrap();
        assert_eq!((d.lhs, d.rhs, d.terms.clone()), (4, 4, vec![1, 1, 1, 1]));
        let b = strong_length_bound(&r, 2);
        assert!(b.ok && b.tight && b.e == 4);
    }

    #[test]
    fn quartic_examples() {
        let r = quartic();
        let xs = els(&r, &["x^3", "x^2", "x"]);
        let rep = sequence_test(&r, &xs);
        assert!(rep.is_sequence);
        assert_eq!(rep.mu, 1);
        assert!(!rep.minimal);
        let x2 = els(&r, &["x^2"]);
        let d = length_sum_check(&r, &x2, &x2).unwrap();
        assert_eq!(d.terms, vec![2, 2]);
        assert!(d.equal);
        assert!(search(&r, SearchMode::Strong, 2, &Pool::AllElements, None).unwrap().is_empty());
    }

    #[test]
    fn mixed_squares_sequence_and_permutations() {
        let r = mixed_squares();
        let xs = els(&r, &["x1", "x2", "x3"]);
        let rep = sequence_test(&r, &xs);
        assert!(rep.is_sequence && rep.minimal);
        assert_eq!(r.length() - ideal_of(&r, &xs).dim(), 1);
        let perm = permutability_test(&r, &xs).unwrap();
        assert!(!perm.verdict);
        assert_eq!(perm.failing_permutation, Some(vec![2, 1, 3]));
        let b = strong_length_bound(&r, 1);
        assert_eq!((b.e, b.bound, b.ok), (8, 3, true));
        let hits = search(&r, SearchMode::Sequences, 3, &Pool::Given(xs.clone()), None).unwrap();
        assert!(hits.iter().any(|h| h.xs == xs));
    }

    #[test]
    fn tor_examples() {
        let r = xy_quadrics();
        let (x, y) = (r.var(0), r.var(1));
        let t = tor_periodic(&r, &x, &y, &ideal_of(&r, std::slice::from_ref(&y))).unwrap();
        assert!(t.tor1 > 0);
        assert!(tor_periodic(&r, &x, &y, &IdealInRing::zero(&r)).unwrap().vanishes());
        let u = r.parse_element("x1 + x2").unwrap();
        assert!(tor_periodic(&r, &u, &u, &ideal_of(&r, &[x])).unwrap().vanishes());
    }

    #[test]
    fn search_examples() {
        let r = xy_quadrics();
        let hits = search(&r, SearchMode::Strong, 2, &Pool::LinearForms, None).unwrap();
        let target = els(&r, &["x1", "x1 + x2"]);
        assert!(hits
            .iter()
            .any(|h| h.xs.iter().zip(&target).all(|(a, b)| same_up_to_unit(&r, a, b, None))));
        for h in &hits {
            let rev: Vec<RingElement> = h.xs.iter().rev().cloned().collect();
            let rep = analyze_sequence(&r, &rev, Checks::all()).unwrap();
            assert!(rep.strong.unwrap().verdict);
        }
        let k = build_ring_from_strs(F7, &["x"], &["x"], MonomialOrder::Grevlex).unwrap();
        assert!(search(&k, SearchMode::Pairs, 1, &Pool::LinearForms, None).unwrap().is_empty());
        let b = strong_length_bound(&k, 0);
        assert_eq!((b.e, b.bound), (1, 0));
        // pairs are symmetric in their twins
        for h in search(&r, SearchMode::Pairs, 1, &Pool::AllElements, None).unwrap() {
            let back = pair_test(&r, &h.twins[0], None);
            assert!(same_up_to_unit(&r, back.twin.as_ref().unwrap(), &h.xs[0], None));
        }
    }

    #[test]
    fn annihilator_of_sequence_is_principal() {
        let r = mixed_squares();
        let c = annihilator_principal_check(&r, &els(&r, &["x1", "x2"]));
        assert!(c.holds());
    }
}
