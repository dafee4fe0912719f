//! Buchberger's algorithm, normal forms and the staircase of a zero-dimensional ideal.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::field::FieldSpec;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// A reduced Gröbner basis: monic, tail-reduced, leading monomials pairwise non-dividing,
/// sorted ascending by leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    field: FieldSpec,
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    staircase: Option<Vec<Monomial>>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Standard monomials ascending, when there are finitely many.
    pub fn staircase(&self) -> Option<&[Monomial]> {
        self.staircase.as_deref()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators
            .first()
            .and_then(|g| g.leading_monomial())
            .is_some_and(Monomial::is_one)
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.generators.iter().filter_map(|g| g.leading_monomial()).collect()
    }

    /// Variables without a pure power among the leading monomials.
    pub fn free_variables(&self) -> Vec<usize> {
        let mut has = vec![false; self.nvars];
        for m in self.leading_monomials() {
            if let Some(i) = m.pure_power_var() {
                has[i] = true;
            }
        }
        (0..self.nvars).filter(|&i| !has[i]).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        reduce(f, &self.generators)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Buchberger's criterion checked directly on every pair.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| reduce(&s_polynomial(&g[i], &g[j]), g).is_zero()))
    }
}

/// Full reduction of `f` by `gens` (remainder has no term divisible by a leading monomial).
pub fn reduce(f: &Polynomial, gens: &[Polynomial]) -> Polynomial {
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((m, c)) = p.leading().cloned() {
        let divisor = gens.iter().find_map(|g| {
            let (lm, lc) = g.leading()?;
            lm.quotient_of(&m).map(|q| (g, q, lc))
        });
        match divisor {
            Some((g, q, lc)) => {
                let factor = &c * &lc.inv();
                p = p.sub(&g.mul_term(&q, &factor)).expect("same ring");
            }
            None => {
                let t = Polynomial::term(p.field(), p.order(), m.clone(), c.clone());
                p = p.sub(&t).expect("same ring");
                rem.push((m, c));
            }
        }
    }
    Polynomial::from_terms(f.field(), f.nvars(), f.order(), rem)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (a, ca) = f.leading().expect("nonzero");
    let (b, cb) = g.leading().expect("nonzero");
    let l = a.lcm(b);
    let fa = f.mul_term(&a.quotient_of(&l).expect("divides"), &ca.inv());
    let gb = g.mul_term(&b.quotient_of(&l).expect("divides"), &cb.inv());
    fa.sub(&gb).expect("same ring")
}

/// Reduced Gröbner basis of the ideal generated by `gens` (all in one polynomial ring).
///
/// Pairs are processed smallest-lcm first, ties broken by pair index; pairs with coprime
/// leading monomials and pairs caught by the chain criterion are skipped.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> GroebnerBasis {
    let first = gens.first().expect("at least one generator");
    let (field, nvars) = (first.field(), first.nvars());
    for g in gens {
        assert!(g.field() == field && g.nvars() == nvars, "generators from different rings");
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let g = g.with_order(order);
        if !g.is_zero() && !basis.contains(&g.monic()) {
            basis.push(g.monic());
        }
    }
    if basis.iter().any(|g| g.leading_monomial().is_some_and(Monomial::is_one)) {
        let one = Polynomial::constant(field, nvars, order, field.one());
        return finish(field, nvars, order, vec![one]);
    }

    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    while let Some(&(i, j)) = pairs.iter().min_by(|p, q| {
        let lp = pair_lcm(&basis, **p);
        let lq = pair_lcm(&basis, **q);
        order.cmp(&lp, &lq).then_with(|| p.cmp(q))
    }) {
        pairs.remove(&(i, j));
        let (lmi, lmj) = (lm(&basis[i]), lm(&basis[j]));
        if lmi.is_coprime(lmj) {
            continue;
        }
        let l = lmi.lcm(lmj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&l)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if r.leading_monomial().is_some_and(Monomial::is_one) {
            let one = Polynomial::constant(field, nvars, order, field.one());
            return finish(field, nvars, order, vec![one]);
        }
        let n = basis.len();
        basis.push(r);
        for k in 0..n {
            pairs.insert((k, n));
        }
    }
    finish(field, nvars, order, basis)
}

fn lm(p: &Polynomial) -> &Monomial {
    p.leading_monomial().expect("basis elements are nonzero")
}

fn pair_lcm(basis: &[Polynomial], (i, j): (usize, usize)) -> Monomial {
    lm(&basis[i]).lcm(lm(&basis[j]))
}

fn finish(field: FieldSpec, nvars: usize, order: MonomialOrder, basis: Vec<Polynomial>) -> GroebnerBasis {
    // minimal basis: drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let m = lm(g);
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && lm(h).divides(m) && (lm(h) != m || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..keep.len())
        .map(|i| {
            let others: Vec<Polynomial> = keep
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.clone())
                .collect();
            reduce(&keep[i], &others).monic()
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(lm(a), lm(b)));
    let mut gb = GroebnerBasis {
        field,
        nvars,
        order,
        generators: reduced,
        staircase: None,
    };
    gb.staircase = compute_staircase(&gb);
    gb
}

/// Breadth-first walk from 1 through monomials outside the leading-term ideal.
fn compute_staircase(gb: &GroebnerBasis) -> Option<Vec<Monomial>> {
    if gb.is_unit_ideal() {
        return Some(vec![]);
    }
    if !gb.free_variables().is_empty() {
        return None;
    }
    let lms = gb.leading_monomials();
    let start = Monomial::one(gb.nvars);
    let mut seen: HashSet<Monomial> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(m) = queue.pop_front() {
        for i in 0..gb.nvars {
            let next = m.mul(&Monomial::var(gb.nvars, i));
            if !seen.contains(&next) && !lms.iter().any(|l| l.divides(&next)) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
        out.push(m);
    }
    out.sort_by(|a, b| gb.order.cmp(a, b));
    debug_assert!(out.windows(2).all(|w| gb.order.cmp(&w[0], &w[1]) == Ordering::Less));
    Some(out)
}

/// The zero ideal of a polynomial ring (no generators).
pub fn zero_ideal(field: FieldSpec, nvars: usize, order: MonomialOrder) -> GroebnerBasis {
    let mut gb = GroebnerBasis {
        field,
        nvars,
        order,
        generators: vec![],
        staircase: None,
    };
    gb.staircase = compute_staircase(&gb);
    gb
}
