//! Exact zero-divisor verdicts compared with a definition-level check that enumerates every
//! element of a small finite ring.

use std::collections::HashSet;

use ezd_core::ezd::{pair_test, sequence_test};
use ezd_core::ideal::ideal_of;
use ezd_core::{build_ring_from_strs, ArtinianRing, FieldSpec, MonomialOrder, RingElement};

type Set = HashSet<RingElement>;

fn ring(p: u64, vars: &[&str], ideal: &[&str]) -> ArtinianRing {
    build_ring_from_strs(FieldSpec::Prime(p), vars, ideal, MonomialOrder::Grevlex).unwrap()
}

fn all_elements(r: &ArtinianRing) -> Vec<RingElement> {
    let scalars = r.field().elements().unwrap();
    let mut out = vec![Vec::new()];
    for _ in 0..r.length() {
        out = out
            .into_iter()
            .flat_map(|v| {
                scalars.iter().map(move |c| {
                    let mut w = v.clone();
                    w.push(c.clone());
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(RingElement).collect()
}

struct Brute<'a> {
    r: &'a ArtinianRing,
    elems: Vec<RingElement>,
}

impl<'a> Brute<'a> {
    fn new(r: &'a ArtinianRing) -> Self {
        Brute { r, elems: all_elements(r) }
    }

    /// `Ra_1 + ... + Ra_k`, built one generator at a time.
    fn ideal(&self, gens: &[RingElement]) -> Set {
        let mut cur: Set = HashSet::from([self.r.zero()]);
        for g in gens {
            let multiples: Set = self.elems.iter().map(|s| self.r.mul(s, g)).collect();
            cur = cur.iter().flat_map(|a| multiples.iter().map(move |b| (a, b))).map(|(a, b)| self.r.add(a, b)).collect();
        }
        cur
    }

    fn plus(&self, a: &Set, b: &Set) -> Set {
        a.iter().flat_map(|x| b.iter().map(move |y| self.r.add(x, y))).collect()
    }

    fn colon(&self, j: &Set, x: &RingElement) -> Set {
        self.elems.iter().filter(|s| j.contains(&self.r.mul(s, x))).cloned().collect()
    }

    fn is_unit(&self, x: &RingElement) -> bool {
        let one = self.r.one();
        self.elems.iter().any(|s| self.r.mul(s, x) == one)
    }

    /// x is an exact zero-divisor on R/J: a nonzero non-unit whose annihilator is a nonzero
    /// principal ideal (y) with (0 : y) = (x), all modulo J.
    fn is_ezd(&self, x: &RingElement, j: &Set) -> bool {
        if j.contains(x) || self.is_unit(x) {
            return false;
        }
        let ann = self.colon(j, x);
        if ann.len() == j.len() {
            return false;
        }
        let xj = self.plus(&self.ideal(std::slice::from_ref(x)), j);
        ann.iter().any(|y| self.plus(&self.ideal(std::slice::from_ref(y)), j) == ann && self.colon(j, y) == xj)
    }
}

/// Exact zero-divisors of R and of R/(g), counted by enumeration; the engine must agree
/// element by element.
fn counts(r: &ArtinianRing, modulo: &RingElement) -> (usize, usize) {
    let b = Brute::new(r);
    let zero: Set = HashSet::from([r.zero()]);
    let j = b.ideal(std::slice::from_ref(modulo));
    let ji = ideal_of(r, std::slice::from_ref(modulo));
    let (mut n0, mut n1) = (0, 0);
    for x in &b.elems {
        let brute = b.is_ezd(x, &zero);
        assert_eq!(pair_test(r, x, None).verdict, brute, "{}", r.render(x));
        n0 += brute as usize;
        let brute = b.is_ezd(x, &j);
        assert_eq!(pair_test(r, x, Some(&ji)).verdict, brute, "{} mod {}", r.render(x), r.render(modulo));
        n1 += brute as usize;
    }
    (n0, n1)
}

#[test]
fn plane_quadrics_gf3() {
    let r = ring(3, &["x1", "x2"], &["x1^2 + x2^2", "x1*x2"]);
    assert_eq!(counts(&r, &r.var(0)), (24, 18));
}

#[test]
fn truncated_line_gf3() {
    let r = ring(3, &["x"], &["x^4"]);
    let x2 = r.parse_element("x^2").unwrap();
    assert_eq!(counts(&r, &x2), (26, 18));
}

#[test]
fn squares_gf3() {
    let r = ring(3, &["x", "y"], &["x^2", "y^2"]);
    assert_eq!(counts(&r, &r.var(1)), (24, 18));
}

#[test]
fn non_ci_plane_gf3() {
    let r = ring(3, &["x", "y"], &["x^2", "x*y", "y^3"]);
    assert_eq!(counts(&r, &r.var(1)), (0, 18));
}

#[test]
fn cubic_curve_gf2() {
    let r = ring(2, &["x", "y"], &["x^2", "y^3"]);
    assert_eq!(counts(&r, &r.var(0)), (28, 24));
}

/// Sequence verdicts against the element-level definition, over every pair of elements.
#[test]
fn sequences_of_length_two_gf3() {
    let r = ring(3, &["x1", "x2"], &["x1^2 + x2^2", "x1*x2"]);
    let b = Brute::new(&r);
    let zero: Set = HashSet::from([r.zero()]);
    let ezds: Vec<&RingElement> = b.elems.iter().filter(|x| b.is_ezd(x, &zero)).collect();
    let mut passing = 0;
    for x in &ezds {
        let j = b.ideal(&[(*x).clone()]);
        for y in &b.elems {
            let brute = b.is_ezd(y, &j);
            assert_eq!(sequence_test(&r, &[(*x).clone(), y.clone()]).is_sequence, brute);
            passing += brute as usize;
        }
    }
    assert_eq!(passing, 432);
}
