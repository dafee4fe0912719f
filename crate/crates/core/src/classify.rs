//! Hilbert functions, socles and the complete-intersection predicates, plus the
//! checks that relate them to exact zero-divisor sequences.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ezd::{floor_log2, search, sequence_test, Pool, SearchHit, SearchMode};
use crate::ideal::{ideal_of, max_ideal, min_gens, socle};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{build_ring, ArtinianRing, RingElement};

/// Minimal generators of a homogeneous ideal, computed degree by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedGenerators {
    /// Sorted degrees of a minimal homogeneous generating set.
    pub degrees: Vec<u32>,
    pub mu: usize,
    pub ci: bool,
    pub quadratic: bool,
    pub koszul_ci: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyReport {
    pub length: usize,
    /// `dim 𝔪^i/𝔪^{i+1}` for `i = 0..=s`.
    pub hilbert_function: Vec<usize>,
    pub socle_degree: usize,
    pub socle_dim: usize,
    pub gorenstein: bool,
    /// All defining polynomials homogeneous.
    pub graded: bool,
    /// `I ⊆ 𝔪²`, i.e. `dim 𝔪/𝔪² = #vars`.
    pub embedded_minimally: bool,
    /// Present only when graded and minimally embedded.
    pub generators: Option<GradedGenerators>,
    /// Multiplicity; the length in dimension zero.
    pub e: usize,
    pub log2_bound: usize,
}

impl ClassifyReport {
    pub fn ci(&self) -> Option<bool> {
        self.generators.as_ref().map(|g| g.ci)
    }

    pub fn koszul_ci(&self) -> Option<bool> {
        self.generators.as_ref().map(|g| g.koszul_ci)
    }

    pub fn hilbert_series(&self) -> String {
        render_series(&self.hilbert_function)
    }
}

/// `1 + 2t + t^2` style rendering of a coefficient list.
pub fn render_series(coeffs: &[usize]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "t".into(),
            (1, c) => format!("{c}t"),
            (i, 1) => format!("t^{i}"),
            (i, c) => format!("{c}t^{i}"),
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn hilbert_function(ring: &ArtinianRing) -> Vec<usize> {
    let f = ring.filtration();
    (0..f.len() - 1).map(|i| f[i].dim() - f[i + 1].dim()).collect()
}

/// Standard monomials counted by degree; equals the Hilbert function for graded input.
pub fn staircase_degree_counts(ring: &ArtinianRing) -> Vec<usize> {
    let mut counts = vec![0; ring.socle_degree() + 1];
    for m in ring.basis() {
        let d = m.degree() as usize;
        if d >= counts.len() {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    counts
}

pub fn is_graded(ring: &ArtinianRing) -> bool {
    ring.ideal_generators().iter().all(Polynomial::is_homogeneous)
}

fn coords_of(ring: &ArtinianRing, m: &Monomial) -> Vector {
    let p = Polynomial::term(ring.field(), ring.order(), m.clone(), ring.field().one());
    ring.element(&p).expect("monomial in ring variables").0
}

/// `I_d` as a subspace of the degree-`d` monomial coordinates, for a homogeneous ideal.
fn ideal_in_degree(ring: &ArtinianRing, monos: &[Monomial]) -> Subspace {
    let cols: Vec<Vector> = monos.iter().map(|m| coords_of(ring, m)).collect();
    Matrix::from_cols(ring.field(), ring.length(), &cols).kernel()
}

/// Degrees of minimal generators: `dim I_d − dim(S_1·I_{d−1})` for `d ≤ s + 1`.
pub fn graded_generator_degrees(ring: &ArtinianRing) -> Result<Vec<u32>> {
    if !is_graded(ring) {
        return Err(Error::NotGraded);
    }
    let n = ring.nvars();
    let f = ring.field();
    let mut degrees = Vec::new();
    if n == 0 {
        return Ok(degrees);
    }
    let mut prev_monos = Monomial::all_of_degree(n, 0);
    let mut prev = Subspace::zero(f, 1);
    for d in 1..=(ring.socle_degree() as u32 + 1) {
        let monos = Monomial::all_of_degree(n, d);
        let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let cur = ideal_in_degree(ring, &monos);
        let mut shifted = Vec::new();
        for v in prev.vectors() {
            for k in 0..n {
                let xk = Monomial::var(n, k);
                let mut w = vec![f.zero(); monos.len()];
                for (c, m) in v.iter().zip(&prev_monos) {
                    if !c.is_zero() {
                        w[index[&m.mul(&xk)]] = c.clone();
                    }
                }
                shifted.push(w);
            }
        }
        let generated = Subspace::span(f, monos.len(), &shifted);
        debug_assert!(generated.is_subspace_of(&cur));
        degrees.extend(std::iter::repeat_n(d, cur.dim() - generated.dim()));
        prev = cur;
        prev_monos = monos;
    }
    Ok(degrees)
}

pub fn classify(ring: &ArtinianRing) -> ClassifyReport {
    let hf = hilbert_function(ring);
    let n = ring.nvars();
    let socle_dim = socle(ring).dim();
    let graded = is_graded(ring);
    let embedded_minimally = hf.get(1).copied().unwrap_or(0) == n;
    let generators = (graded && embedded_minimally).then(|| {
        let degrees = graded_generator_degrees(ring).expect("graded");
        let mu = degrees.len();
        let ci = mu == n;
        let quadratic = degrees.iter().all(|&d| d == 2);
        GradedGenerators {
            mu,
            ci,
            quadratic,
            koszul_ci: ci && quadratic,
            degrees,
        }
    });
    ClassifyReport {
        length: ring.length(),
        socle_degree: ring.socle_degree(),
        hilbert_function: hf,
        socle_dim,
        gorenstein: socle_dim == 1,
        graded,
        embedded_minimally,
        generators,
        e: ring.length(),
        log2_bound: floor_log2(ring.length()),
    }
}

/// Graded minimal generators, with the errors `classify` folds into `None`.
pub fn graded_generators(ring: &ArtinianRing) -> Result<GradedGenerators> {
    let rep = classify(ring);
    if !rep.graded {
        return Err(Error::NotGraded);
    }
    rep.generators.ok_or(Error::NotEmbeddedMinimally)
}

fn linear_coefficients(ring: &ArtinianRing, x: &RingElement) -> Option<Vector> {
    let p = ring.to_polynomial(x);
    if p.is_zero() || !p.is_homogeneous() || p.total_degree() != Some(1) {
        return None;
    }
    Some((0..ring.nvars()).map(|i| p.coefficient(&Monomial::var(ring.nvars(), i))).collect())
}

/// `R/(l_1..l_k)` for linear forms `l`, re-presented in the variables that remain
/// after solving the forms for their pivot variables.
pub fn linear_quotient(ring: &ArtinianRing, forms: &[Vector]) -> Result<ArtinianRing> {
    let n = ring.nvars();
    let f = ring.field();
    let order = ring.order();
    let (rref, pivots) = Matrix::from_rows(f, n, forms).rref_with_pivots();
    let keep: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
    let m = keep.len();
    let new_var = |k: usize| Polynomial::var(f, m, order, k);
    let mut images = vec![Polynomial::zero(f, m, order); n];
    for (k, &v) in keep.iter().enumerate() {
        images[v] = new_var(k);
    }
    // pivot variable = −(its row's non-pivot part)
    for (r, &pv) in pivots.iter().enumerate() {
        let mut img = Polynomial::zero(f, m, order);
        for (k, &v) in keep.iter().enumerate() {
            let c = rref.get(r, v);
            if !c.is_zero() {
                img = img.sub(&new_var(k).scale(c)).expect("same ring");
            }
        }
        images[pv] = img;
    }
    let gens: Vec<Polynomial> = ring.ideal_generators().iter().map(|g| g.substitute(&images, m)).collect();
    let names: Vec<String> = keep.iter().map(|&i| ring.var_names()[i].clone()).collect();
    build_ring(f, &names, &gens, order)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientClass {
    /// Number of sequence elements divided out.
    pub i: usize,
    pub length: usize,
    pub gorenstein: bool,
    pub ci: bool,
}

#[derive(Clone, Debug)]
pub struct CiQuotientCheck {
    /// Graded ring, minimally embedded, linear forms.
    pub applicable: bool,
    pub is_sequence: bool,
    pub quotients: Vec<QuotientClass>,
    pub all_ci: bool,
    /// `is_sequence ⇔ all_ci`.
    pub consistent: bool,
}

/// For minimal generators `x_1..x_n` of `𝔪`: the tuple is a sequence of exact zero-divisors
/// exactly when every `R/(x_1..x_i)` is a complete intersection. Both sides are computed.
pub fn ci_quotient_check(ring: &ArtinianRing, xs: &[RingElement]) -> Result<CiQuotientCheck> {
    let mu_m = min_gens(ring, &max_ideal(ring), None).0;
    let ideal = ideal_of(ring, xs);
    let mu_x = min_gens(ring, &ideal, None).0;
    if mu_x != xs.len() || ideal != max_ideal(ring) || mu_m != xs.len() {
        return Err(Error::NotMinimalGenerators);
    }
    let is_sequence = sequence_test(ring, xs).is_sequence;
    let forms: Option<Vec<Vector>> = xs.iter().map(|x| linear_coefficients(ring, x)).collect();
    let rep = classify(ring);
    let Some(forms) = forms.filter(|_| rep.generators.is_some()) else {
        return Ok(CiQuotientCheck {
            applicable: false,
            is_sequence,
            quotients: vec![],
            all_ci: false,
            consistent: true,
        });
    };
    let mut quotients = Vec::new();
    for i in 0..=xs.len() {
        let q = linear_quotient(ring, &forms[..i])?;
        debug_assert_eq!(q.length(), ring.length() - ideal_of(ring, &xs[..i]).dim());
        let c = classify(&q);
        quotients.push(QuotientClass {
            i,
            length: c.length,
            gorenstein: c.gorenstein,
            ci: c.ci().unwrap_or(false),
        });
    }
    let all_ci = quotients.iter().all(|q| q.ci);
    Ok(CiQuotientCheck {
        applicable: true,
        is_sequence,
        quotients,
        all_ci,
        consistent: is_sequence == all_ci,
    })
}

#[derive(Clone, Debug)]
pub struct TopSequenceCheck {
    /// Length equals the socle degree and the tuple is a minimal sequence.
    pub applicable: bool,
    pub generates_max_ideal: bool,
    pub ci: Option<bool>,
    /// `y_j ∉ 𝔪² + (x_1..x_{j−1})` for each sequence twin.
    pub twins_outside_m2: Vec<bool>,
    pub holds: bool,
}

/// A minimal sequence of exact zero-divisors whose length equals the socle degree generates
/// `𝔪`, the ring is a complete intersection, and no twin lies in `𝔪²`.
pub fn top_sequence_check(ring: &ArtinianRing, xs: &[RingElement]) -> TopSequenceCheck {
    let seq = sequence_test(ring, xs);
    let applicable = !xs.is_empty() && xs.len() == ring.socle_degree() && seq.is_sequence && seq.minimal;
    if !applicable {
        return TopSequenceCheck {
            applicable,
            generates_max_ideal: false,
            ci: None,
            twins_outside_m2: vec![],
            holds: true,
        };
    }
    let generates_max_ideal = ideal_of(ring, xs) == max_ideal(ring);
    let ci = classify(ring).ci();
    let m2 = ring.max_ideal_power(2);
    let twins_outside_m2: Vec<bool> = seq
        .twins
        .iter()
        .enumerate()
        .map(|(j, y)| {
            let prefix = ideal_of(ring, &xs[..j]);
            !m2.sum(prefix.space()).expect("same ring").contains(y.coords())
        })
        .collect();
    let holds = generates_max_ideal && ci != Some(false) && twins_outside_m2.iter().all(|&b| b);
    TopSequenceCheck {
        applicable,
        generates_max_ideal,
        ci,
        twins_outside_m2,
        holds,
    }
}

#[derive(Clone, Debug)]
pub struct QuadraticCiCheck {
    pub socle_degree: usize,
    pub koszul_ci: Option<bool>,
    /// A minimal sequence of exact zero-divisors among linear forms of length `s`, if any.
    pub witness: Option<SearchHit>,
    /// Socle degree 2: a witness exists exactly for Koszul complete intersections.
    pub equivalence_holds: Option<bool>,
    /// Any socle degree: a witness forces a Koszul complete intersection.
    pub implication_holds: Option<bool>,
    /// Socle degree 3 over a finite field: agreement only, no theorem applies.
    pub evidence_agrees: Option<bool>,
}

/// Relates Koszul complete intersections to minimal sequences of linear exact zero-divisors of
/// length equal to the socle degree.
pub fn quadratic_ci_check(ring: &ArtinianRing) -> Result<QuadraticCiCheck> {
    if !is_graded(ring) {
        return Err(Error::NotGraded);
    }
    let s = ring.socle_degree();
    let koszul_ci = classify(ring).koszul_ci();
    let witness = if s == 0 {
        None
    } else {
        search(ring, SearchMode::MinimalSequences, s, &Pool::LinearForms, Some(1))?
            .into_iter()
            .next()
    };
    let found = witness.is_some();
    let equivalence_holds = if s == 2 { koszul_ci.map(|k| k == found) } else { None };
    let implication_holds = found.then(|| koszul_ci == Some(true));
    let evidence_agrees = if s == 3 { koszul_ci.map(|k| k == found) } else { None };
    Ok(QuadraticCiCheck {
        socle_degree: s,
        koszul_ci,
        witness,
        equivalence_holds,
        implication_holds,
        evidence_agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_polynomial;
    use crate::ring::{build_ring_from_strs, inverse_system_ring};

    const F7: FieldSpec = FieldSpec::Prime(7);

    fn ring(vars: &[&str], gens: &[&str]) -> ArtinianRing {
        build_ring_from_strs(F7, vars, gens, MonomialOrder::Grevlex).unwrap()
    }

    fn xy_quadrics() -> ArtinianRing {
        ring(&["x1", "x2"], &["x1^2 + x2^2", "x1*x2"])
    }

    fn mixed_squares() -> ArtinianRing {
        ring(&["x1", "x2", "x3"], &["x1^2", "x2^2 + x1*x3", "x3^2"])
    }

    fn els(r: &ArtinianRing, srcs: &[&str]) -> Vec<RingElement> {
        srcs.iter().map(|s| r.parse_element(s).unwrap()).collect()
    }

    #[test]
    fn xy_quadrics_classification() {
        let c = classify(&xy_quadrics());
        assert_eq!(c.length, 4);
        assert_eq!(c.hilbert_function, vec![1, 2, 1]);
        assert_eq!(c.hilbert_series(), "1 + 2t + t^2");
        assert!(c.gorenstein);
        assert_eq!(c.ci(), Some(true));
        assert_eq!(c.koszul_ci(), Some(true));
        assert_eq!(c.log2_bound, 2);
    }

    #[test]
    fn mixed_squares_classification() {
        let r = mixed_squares();
        let c = classify(&r);
        assert_eq!(c.hilbert_function, vec![1, 3, 3, 1]);
        assert_eq!(c.generators.as_ref().unwrap().degrees, vec![2, 2, 2]);
        assert_eq!(c.koszul_ci(), Some(true));
        assert_eq!(staircase_degree_counts(&r), c.hilbert_function);
    }

    #[test]
    fn cubic_is_ci_not_quadratic() {
        let c = classify(&ring(&["x"], &["x^3"]));
        assert_eq!(c.hilbert_function, vec![1, 1, 1]);
        let g = c.generators.unwrap();
        assert!(g.ci && !g.quadratic && !g.koszul_ci);
    }

    #[test]
    fn non_ci_and_non_minimal_embedding() {
        let c = classify(&ring(&["x", "y"], &["x^2", "x*y", "y^3"]));
        assert_eq!(c.generators.as_ref().unwrap().mu, 3);
        assert_eq!(c.ci(), Some(false));
        assert!(!c.gorenstein);
        let r = ring(&["x", "y"], &["x - y^2", "y^3"]);
        let c = classify(&r);
        assert!(!c.embedded_minimally && !c.graded && c.ci().is_none());
        assert!(matches!(graded_generators(&r), Err(Error::NotGraded)));
        let r = ring(&["x", "y"], &["x", "y^3"]);
        assert!(matches!(graded_generators(&r), Err(Error::NotEmbeddedMinimally)));
    }

    #[test]
    fn field_classification() {
        let k = build_ring_from_strs(F7, &[], &[], MonomialOrder::Grevlex).unwrap();
        let c = classify(&k);
        assert_eq!(c.hilbert_function, vec![1]);
        assert_eq!(c.ci(), Some(true));
    }

    #[test]
    fn series_rendering() {
        assert_eq!(render_series(&[1, 3, 3, 1]), "1 + 3t + 3t^2 + t^3");
        assert_eq!(render_series(&[1, 1]), "1 + t");
    }

    #[test]
    fn linear_quotient_of_mixed_squares() {
        let r = mixed_squares();
        let q = linear_quotient(&r, &[linear_coefficients(&r, &r.var(1)).unwrap()]).unwrap();
        assert_eq!(q.nvars(), 2);
        assert_eq!(q.length(), 3);
        assert!(!classify(&q).gorenstein);
        let u = r.parse_element("x1 + 2*x2").unwrap();
        let q = linear_quotient(&r, &[linear_coefficients(&r, &u).unwrap()]).unwrap();
        assert_eq!(q.length(), r.length() - ideal_of(&r, &[u]).dim());
    }

    #[test]
    fn ci_quotients_mixed_squares() {
        let r = mixed_squares();
        let good = ci_quotient_check(&r, &els(&r, &["x1", "x2", "x3"])).unwrap();
        assert!(good.applicable && good.is_sequence && good.all_ci && good.consistent);
        assert_eq!(good.quotients.len(), 4);
        let bad = ci_quotient_check(&r, &els(&r, &["x2", "x1", "x3"])).unwrap();
        assert!(!bad.is_sequence && !bad.all_ci && bad.consistent);
        assert!(!bad.quotients[1].gorenstein);
        assert!(matches!(ci_quotient_check(&r, &els(&r, &["x1", "x2"])), Err(Error::NotMinimalGenerators)));
        let k = build_ring_from_strs(F7, &[], &[], MonomialOrder::Grevlex).unwrap();
        assert!(ci_quotient_check(&k, &[]).unwrap().consistent);
    }

    #[test]
    fn top_sequences() {
        let r = xy_quadrics();
        let c = top_sequence_check(&r, &els(&r, &["x1", "x2"]));
        assert!(c.applicable && c.generates_max_ideal && c.holds);
        assert_eq!(c.ci, Some(true));
        let quartic = ring(&["x"], &["x^4"]);
        assert!(!top_sequence_check(&quartic, &[quartic.var(0)]).applicable);
    }

    #[test]
    fn quadratic_ci_examples() {
        let c = quadratic_ci_check(&xy_quadrics()).unwrap();
        assert_eq!(c.equivalence_holds, Some(true));
        assert!(c.witness.is_some());
        let sq = quadratic_ci_check(&ring(&["x", "y"], &["x^2", "y^2"])).unwrap();
        assert_eq!(sq.koszul_ci, Some(true));
        assert!(sq.witness.is_some());
        let non = quadratic_ci_check(&ring(&["x", "y"], &["x^2", "x*y", "y^3"])).unwrap();
        assert_eq!(non.socle_degree, 2);
        assert_eq!(non.equivalence_holds, Some(true));
        assert!(non.witness.is_none());
        let r = ring(&["x", "y"], &["x - y^2", "y^3"]);
        assert!(matches!(quadratic_ci_check(&r), Err(Error::NotGraded)));
    }

    #[test]
    fn inverse_system_x1x2x3() {
        let vars: Vec<String> = ["x1", "x2", "x3"].iter().map(|s| s.to_string()).collect();
        let f = parse_polynomial("x1*x2*x3", &vars, F7, MonomialOrder::Grevlex).unwrap();
        let r = inverse_system_ring(F7, &vars, &f).unwrap();
        let c = classify(&r);
        assert_eq!(c.length, 8);
        assert!(c.gorenstein);
        assert_eq!(c.koszul_ci(), Some(true));
        let q = quadratic_ci_check(&r).unwrap();
        assert_eq!(q.socle_degree, 3);
        assert_eq!(q.evidence_agrees, Some(true));
        assert_eq!(q.implication_holds, Some(true));
    }
}
