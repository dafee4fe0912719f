//! Sparse multivariate polynomials in distributed form.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::monomial::{Monomial, MonomialOrder};

/// Terms are kept strictly descending under `order`, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldSpec,
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(field: FieldSpec, nvars: usize, order: MonomialOrder) -> Self {
        Polynomial {
            field,
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: FieldSpec, nvars: usize, order: MonomialOrder, c: Scalar) -> Self {
        Self::term(field, order, Monomial::one(nvars), c)
    }

    pub fn term(field: FieldSpec, order: MonomialOrder, m: Monomial, c: Scalar) -> Self {
        let nvars = m.nvars();
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Polynomial {
            field,
            nvars,
            order,
            terms,
        }
    }

    pub fn var(field: FieldSpec, nvars: usize, order: MonomialOrder, i: usize) -> Self {
        Self::term(field, order, Monomial::var(nvars, i), field.one())
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(
        field: FieldSpec,
        nvars: usize,
        order: MonomialOrder,
        mut raw: Vec<(Monomial, Scalar)>,
    ) -> Self {
        raw.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut terms: Vec<(Monomial, Scalar)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            debug_assert_eq!(m.nvars(), nvars);
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Polynomial {
            field,
            nvars,
            order,
            terms,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(n, _)| n.degree() == m.degree()),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(n, _)| n == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        Polynomial::from_terms(self.field, self.nvars, order, self.terms.clone())
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field || self.nvars != other.nvars || self.order != other.order {
            return Err(Error::Mismatch);
        }
        Ok(())
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Scalar| if negate { -c } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, ca) = &self.terms[i];
            let (b, cb) = &other.terms[j];
            match self.order.cmp(a, b) {
                Ordering::Greater => {
                    out.push((a.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.clone(), sign(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((a.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            order: self.order,
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-&self.field.one())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, self.nvars, self.order);
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
            ..self.clone()
        }
    }

    /// Multiplication by `c·m`; order is preserved because monomial orders are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, self.nvars, self.order);
        }
        Polynomial {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                raw.push((a.mul(b), ca * cb));
            }
        }
        Ok(Polynomial::from_terms(self.field, self.nvars, self.order, raw))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.field, self.nvars, self.order, self.field.one());
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Substitutes `x_i ↦ images[i]` (each image a polynomial in `target_nvars` variables).
    pub fn substitute(&self, images: &[Polynomial], target_nvars: usize) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let mut acc = Polynomial::zero(self.field, target_nvars, self.order);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(self.field, target_nvars, self.order, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e)).expect("same ring");
                }
            }
            acc = acc.add(&t).expect("same ring");
        }
        acc
    }

    /// Human-readable form that the polynomial parser accepts back.
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&m.render(names));
            } else {
                s.push_str(&format!("{}*{}", abs, m.render(names)));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn p(src: &str, vars: &[&str], f: FieldSpec) -> Polynomial {
        parse_polynomial(src, &names(vars), f, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let q = FieldSpec::Rationals;
        let a = p("x + y", &["x", "y"], q);
        let b = p("x - y", &["x", "y"], q);
        assert_eq!(a.mul(&b).unwrap(), p("x^2 - y^2", &["x", "y"], q));
    }

    #[test]
    fn frobenius_in_char_two() {
        let f = FieldSpec::Prime(2);
        let a = p("x + y", &["x", "y"], f);
        assert_eq!(a.mul(&a).unwrap(), p("x^2 + y^2", &["x", "y"], f));
    }

    #[test]
    fn monomial_product_is_one_term() {
        let f = FieldSpec::Prime(7);
        let prod = p("x", &["x", "y"], f).mul(&p("y", &["x", "y"], f)).unwrap();
        assert_eq!(prod.terms().len(), 1);
        assert_eq!(prod.render(&names(&["x", "y"])), "x*y");
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = p("x", &["x", "y"], FieldSpec::Prime(7));
        let b = p("x", &["x", "y"], FieldSpec::Prime(5));
        assert_eq!(a.mul(&b), Err(Error::Mismatch));
        let c = p("x", &["x"], FieldSpec::Prime(7));
        assert_eq!(a.add(&c), Err(Error::Mismatch));
    }

    #[test]
    fn render_negative_rationals() {
        let q = FieldSpec::Rationals;
        let a = p("-x^2 + 3/2*y - 1", &["x", "y"], q);
        assert_eq!(a.render(&names(&["x", "y"])), "-x^2 + 3/2*y - 1");
    }

    #[test]
    fn substitution_eliminates_a_variable() {
        let f = FieldSpec::Prime(7);
        let g = p("x^2 + y^2", &["x", "y"], f);
        // y -> -x in a one-variable ring
        let imgs = vec![
            Polynomial::var(f, 1, MonomialOrder::Grevlex, 0),
            Polynomial::var(f, 1, MonomialOrder::Grevlex, 0).neg(),
        ];
        let s = g.substitute(&imgs, 1);
        assert_eq!(s.render(&names(&["x"])), "2*x^2");
    }
}
