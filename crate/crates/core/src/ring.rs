//! Artinian local rings `K[x_1..x_n]/I` as finite-dimensional algebras.
//!
//! Elements are coordinate vectors over the standard monomials of a reduced
//! Gröbner basis; multiplication by each variable is a nilpotent matrix. All
//! later computations (ideals, quotients by ideals, annihilators) are linear
//! algebra inside this one coordinate space.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::groebner::{self, GroebnerBasis};
use crate::ideal::IdealInRing;
use crate::linalg::{axpy, is_zero_vec, Matrix, Subspace, Vector};
use crate::monomial::{Monomial, MonomialOrder};
use crate::parse::{parse_polynomial, validate_vars};
use crate::poly::Polynomial;

/// A commutative finite-dimensional algebra generated by nilpotent variable actions.
pub trait Algebra {
    fn field(&self) -> FieldSpec;
    fn dim(&self) -> usize;
    /// Multiplication by each generator, acting on coordinate columns.
    fn var_mults(&self) -> &[Matrix];
}

/// Coordinates of an element over the ring's standard-monomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement(pub Vector);

impl RingElement {
    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.0)
    }
}

#[derive(Clone, Debug)]
pub struct ArtinianRing {
    field: FieldSpec,
    var_names: Vec<String>,
    order: MonomialOrder,
    ideal_gens: Vec<Polynomial>,
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    mult: Vec<Matrix>,
    basis_mult: Vec<Matrix>,
    filtration: Vec<Subspace>,
}

impl Algebra for ArtinianRing {
    fn field(&self) -> FieldSpec {
        self.field
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn var_mults(&self) -> &[Matrix] {
        &self.mult
    }
}

/// `𝔪^0 ⊋ 𝔪^1 ⊋ … ⊋ 𝔪^{s+1} = 0`, where `𝔪` is the sum of the images of the variable actions.
///
/// Panics if the powers stabilise at a nonzero space (non-nilpotent action).
pub fn power_filtration<A: Algebra + ?Sized>(alg: &A) -> Vec<Subspace> {
    let f = alg.field();
    let mut out = vec![Subspace::full(f, alg.dim())];
    loop {
        let cur = out.last().expect("nonempty");
        if cur.is_zero() {
            return out;
        }
        let mut vecs = Vec::new();
        for m in alg.var_mults() {
            for v in cur.vectors() {
                vecs.push(m.mul_vec(&v));
            }
        }
        let next = Subspace::span(f, alg.dim(), &vecs);
        assert!(next.dim() < cur.dim(), "maximal ideal is not nilpotent");
        out.push(next);
    }
}

impl ArtinianRing {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// The nonzero generators the ring was presented with.
    pub fn ideal_generators(&self) -> &[Polynomial] {
        &self.ideal_gens
    }

    /// Standard monomials, ascending; `basis()[0]` is 1.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Length ℓ(R), the K-dimension.
    pub fn length(&self) -> usize {
        self.basis.len()
    }

    pub fn mult_matrices(&self) -> &[Matrix] {
        &self.mult
    }

    /// `𝔪^0, 𝔪^1, …, 𝔪^{s+1} = 0`.
    pub fn filtration(&self) -> &[Subspace] {
        &self.filtration
    }

    /// Power of the maximal ideal, zero beyond the socle degree.
    pub fn max_ideal_power(&self, k: usize) -> Subspace {
        self.filtration
            .get(k)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.field, self.length()))
    }

    /// Largest `s` with `𝔪^s ≠ 0`.
    pub fn socle_degree(&self) -> usize {
        self.filtration.len() - 2
    }

    pub fn zero(&self) -> RingElement {
        RingElement(vec![self.field.zero(); self.length()])
    }

    pub fn one(&self) -> RingElement {
        let mut v = self.zero();
        v.0[0] = self.field.one();
        v
    }

    pub fn var(&self, i: usize) -> RingElement {
        self.element(&Polynomial::var(self.field, self.nvars(), self.order, i))
            .expect("variable lives in the ring")
    }

    /// Normal-form coordinates of `f`.
    pub fn element(&self, f: &Polynomial) -> Result<RingElement> {
        if f.field() != self.field || f.nvars() != self.nvars() {
            return Err(Error::Mismatch);
        }
        let nf = self.gb.normal_form(&f.with_order(self.order));
        let mut v = self.zero();
        for (m, c) in nf.terms() {
            v.0[self.index[m]] = c.clone();
        }
        Ok(RingElement(v.0))
    }

    pub fn parse_element(&self, src: &str) -> Result<RingElement> {
        let p = parse_polynomial(src, &self.var_names, self.field, self.order)?;
        self.element(&p)
    }

    pub fn to_polynomial(&self, a: &RingElement) -> Polynomial {
        let terms = self
            .basis
            .iter()
            .zip(a.coords())
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Polynomial::from_terms(self.field, self.nvars(), self.order, terms)
    }

    /// Rendered normal form scaled so its leading coefficient is 1.
    pub fn render_normalized(&self, a: &RingElement) -> String {
        self.to_polynomial(a).monic().render(&self.var_names)
    }

    pub fn render(&self, a: &RingElement) -> String {
        self.to_polynomial(a).render(&self.var_names)
    }

    /// Matrix of multiplication by `a`.
    pub fn mult_by(&self, a: &RingElement) -> Matrix {
        let mut acc = Matrix::zeros(self.field, self.length(), self.length());
        for (c, m) in a.coords().iter().zip(&self.basis_mult) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let mut out = vec![self.field.zero(); self.length()];
        for (c, m) in a.coords().iter().zip(&self.basis_mult) {
            if !c.is_zero() {
                axpy(&mut out, c, &m.mul_vec(b.coords()));
            }
        }
        RingElement(out)
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement(a.coords().iter().zip(b.coords()).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement(a.coords().iter().zip(b.coords()).map(|(x, y)| x - y).collect())
    }

    pub fn scale(&self, a: &RingElement, c: &Scalar) -> RingElement {
        RingElement(a.coords().iter().map(|x| x * c).collect())
    }

    /// In a local ring an element is a unit iff it lies outside `𝔪`, i.e. has nonzero constant term.
    pub fn is_unit(&self, a: &RingElement) -> bool {
        !a.coords()[0].is_zero()
    }

    /// Scales `a` so its first nonzero coordinate is 1.
    pub fn projective_normalize(&self, a: &RingElement) -> RingElement {
        match a.coords().iter().find(|c| !c.is_zero()) {
            None => a.clone(),
            Some(c) => self.scale(a, &c.inv()),
        }
    }

    pub fn quotient(&self, j: &IdealInRing) -> Result<QuotientData> {
        QuotientData::new(self, j)
    }
}

/// Builds `K[vars]/(ideal_gens)` and checks it is zero-dimensional and local.
pub fn build_ring(
    field: FieldSpec,
    vars: &[String],
    ideal_gens: &[Polynomial],
    order: MonomialOrder,
) -> Result<ArtinianRing> {
    validate_vars(vars)?;
    let n = vars.len();
    for g in ideal_gens {
        if g.field() != field || g.nvars() != n {
            return Err(Error::Mismatch);
        }
    }
    let gens: Vec<Polynomial> = ideal_gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order))
        .collect();
    let gb = if gens.is_empty() {
        groebner::zero_ideal(field, n, order)
    } else {
        groebner::buchberger(&gens, order)
    };
    if gb.is_unit_ideal() {
        return Err(Error::UnitIdeal);
    }
    let Some(staircase) = gb.staircase() else {
        let v = gb.free_variables()[0];
        return Err(Error::NotZeroDimensional(vars[v].clone()));
    };
    let basis = staircase.to_vec();
    let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let len = basis.len();

    let coords = |p: &Polynomial| -> Vector {
        let mut v = vec![field.zero(); len];
        for (m, c) in p.terms() {
            v[index[m]] = c.clone();
        }
        v
    };
    let mult: Vec<Matrix> = (0..n)
        .map(|i| {
            let cols: Vec<Vector> = basis
                .iter()
                .map(|b| {
                    let prod = Polynomial::term(field, order, b.mul(&Monomial::var(n, i)), field.one());
                    coords(&gb.normal_form(&prod))
                })
                .collect();
            Matrix::from_cols(field, len, &cols)
        })
        .collect();
    for (i, m) in mult.iter().enumerate() {
        if !m.pow(len).is_zero() {
            return Err(Error::NotLocal(vars[i].clone()));
        }
    }
    let basis_mult: Vec<Matrix> = basis
        .iter()
        .map(|b| {
            let mut acc = Matrix::identity(field, len);
            for (i, &e) in b.exps().iter().enumerate() {
                for _ in 0..e {
                    acc = mult[i].mul(&acc);
                }
            }
            acc
        })
        .collect();
    let mut ring = ArtinianRing {
        field,
        var_names: vars.to_vec(),
        order,
        ideal_gens: gens,
        gb,
        basis,
        index,
        mult,
        basis_mult,
        filtration: vec![],
    };
    ring.filtration = power_filtration(&ring);
    Ok(ring)
}

/// Parses generator strings and builds the ring.
pub fn build_ring_from_strs(
    field: FieldSpec,
    vars: &[&str],
    ideal: &[&str],
    order: MonomialOrder,
) -> Result<ArtinianRing> {
    let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    let gens = ideal
        .iter()
        .map(|s| parse_polynomial(s, &names, field, order))
        .collect::<Result<Vec<_>>>()?;
    build_ring(field, &names, &gens, order)
}

/// `R/J` realised on the coordinates complementary to the pivots of `J`.
#[derive(Clone, Debug)]
pub struct QuotientData {
    field: FieldSpec,
    ideal: IdealInRing,
    section: Vec<usize>,
    mult: Vec<Matrix>,
}

impl QuotientData {
    fn new(ring: &ArtinianRing, j: &IdealInRing) -> Result<Self> {
        if j.dim() == ring.length() {
            return Err(Error::WholeRing);
        }
        let section = j.space().complement_coords();
        let mult = ring
            .mult_matrices()
            .iter()
            .map(|m| {
                let cols: Vec<Vector> = section
                    .iter()
                    .map(|&c| j.space().quotient_coords(&m.col(c)))
                    .collect();
                Matrix::from_cols(ring.field(), section.len(), &cols)
            })
            .collect();
        Ok(QuotientData {
            field: ring.field(),
            ideal: j.clone(),
            section,
            mult,
        })
    }

    pub fn ideal(&self) -> &IdealInRing {
        &self.ideal
    }

    pub fn length(&self) -> usize {
        self.section.len()
    }

    /// Basis coordinates of the parent ring whose unit vectors span the chosen complement.
    pub fn section(&self) -> &[usize] {
        &self.section
    }

    pub fn project(&self, a: &RingElement) -> Vector {
        self.ideal.space().quotient_coords(a.coords())
    }

    pub fn lift(&self, v: &[Scalar], parent_len: usize) -> RingElement {
        let mut out = vec![self.field.zero(); parent_len];
        for (&c, x) in self.section.iter().zip(v) {
            out[c] = x.clone();
        }
        RingElement(out)
    }
}

impl Algebra for QuotientData {
    fn field(&self) -> FieldSpec {
        self.field
    }

    fn dim(&self) -> usize {
        self.section.len()
    }

    fn var_mults(&self) -> &[Matrix] {
        &self.mult
    }
}

/// Generators of `(0 :_Q F)` for the contraction action of `Q = K[X]` on `S = K[X]`:
/// `X^a ∘ X^b = X^{b-a}` when `a ≤ b`, else 0.
///
/// Degree `d ≤ s` contributes the kernel of `Q_d → S_{s-d}`; all of `Q_{s+1}` is added.
pub fn inverse_system_ideal(form: &Polynomial) -> Result<Vec<Polynomial>> {
    if form.is_zero() || !form.is_homogeneous() {
        return Err(Error::BadForm);
    }
    let (field, n, order) = (form.field(), form.nvars(), form.order());
    let s = form.total_degree().expect("nonzero");
    let mut gens = Vec::new();
    for d in 0..=s {
        let src = Monomial::all_of_degree(n, d);
        let tgt = Monomial::all_of_degree(n, s - d);
        let tindex: HashMap<&Monomial, usize> = tgt.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let cols: Vec<Vector> = src
            .iter()
            .map(|m| {
                let mut v = vec![field.zero(); tgt.len()];
                for (t, c) in form.terms() {
                    if let Some(q) = m.quotient_of(t) {
                        let k = tindex[&q];
                        v[k] = &v[k] + c;
                    }
                }
                v
            })
            .collect();
        let contraction = Matrix::from_cols(field, tgt.len(), &cols);
        for k in contraction.kernel().vectors() {
            let terms = src.iter().cloned().zip(k).filter(|(_, c)| !c.is_zero()).collect();
            gens.push(Polynomial::from_terms(field, n, order, terms));
        }
    }
    for m in Monomial::all_of_degree(n, s + 1) {
        gens.push(Polynomial::term(field, order, m, field.one()));
    }
    Ok(gens)
}

/// The Gorenstein ring `Q/(0 :_Q F)` for a nonzero homogeneous form `F` in the variables `vars`.
pub fn inverse_system_ring(
    field: FieldSpec,
    vars: &[String],
    form: &Polynomial,
) -> Result<ArtinianRing> {
    if form.field() != field || form.nvars() != vars.len() {
        return Err(Error::Mismatch);
    }
    let gens = inverse_system_ideal(form)?;
    build_ring(field, vars, &gens, form.order())
}
