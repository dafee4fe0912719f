//! Ideals as variable-stable subspaces: closure, annihilators, Nakayama counts, socle.

use crate::linalg::{Matrix, Subspace, Vector};
use crate::ring::{Algebra, ArtinianRing, RingElement};

/// An ideal of an [`ArtinianRing`], stored as a subspace of its coordinate space
/// together with the elements it was generated from.
#[derive(Clone, Debug)]
pub struct IdealInRing {
    space: Subspace,
    generators: Vec<RingElement>,
}

impl PartialEq for IdealInRing {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space
    }
}

impl Eq for IdealInRing {}

impl IdealInRing {
    /// Wraps a subspace already known to be stable under every variable.
    pub fn from_space(space: Subspace, generators: Vec<RingElement>) -> Self {
        IdealInRing { space, generators }
    }

    pub fn zero(ring: &ArtinianRing) -> Self {
        IdealInRing {
            space: Subspace::zero(ring.field(), ring.length()),
            generators: vec![],
        }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn generators(&self) -> &[RingElement] {
        &self.generators
    }

    pub fn contains(&self, a: &RingElement) -> bool {
        self.space.contains(a.coords())
    }

    pub fn is_subset_of(&self, other: &IdealInRing) -> bool {
        self.space.is_subspace_of(&other.space)
    }

    pub fn sum(&self, other: &IdealInRing) -> IdealInRing {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        IdealInRing {
            space: self.space.sum(&other.space).expect("same ring"),
            generators: gens,
        }
    }

    pub fn intersect(&self, other: &IdealInRing) -> IdealInRing {
        IdealInRing {
            space: self.space.intersect(&other.space).expect("same ring"),
            generators: vec![],
        }
    }
}

/// Smallest subspace containing `vecs` and stable under every variable action.
pub fn closure<A: Algebra + ?Sized>(alg: &A, vecs: &[Vector]) -> Subspace {
    let f = alg.field();
    let mut cur = Subspace::span(f, alg.dim(), vecs);
    loop {
        let grown = cur.sum(&m_times(alg, &cur)).expect("same ambient");
        if grown.dim() == cur.dim() {
            return cur;
        }
        cur = grown;
    }
}

/// `𝔪 · V = Σ_i x_i V`.
pub fn m_times<A: Algebra + ?Sized>(alg: &A, v: &Subspace) -> Subspace {
    let mut vecs = Vec::new();
    for m in alg.var_mults() {
        for b in v.vectors() {
            vecs.push(m.mul_vec(&b));
        }
    }
    Subspace::span(alg.field(), alg.dim(), &vecs)
}

/// `(0 : 𝔪)`, the common kernel of the variable actions.
pub fn socle_space<A: Algebra + ?Sized>(alg: &A) -> Subspace {
    let n = alg.dim();
    let mut rows = Vec::new();
    for m in alg.var_mults() {
        rows.extend(m.row_vectors());
    }
    Matrix::from_rows(alg.field(), n, &rows).kernel()
}

pub fn ideal_of(ring: &ArtinianRing, gens: &[RingElement]) -> IdealInRing {
    let vecs: Vec<Vector> = gens.iter().map(|g| g.0.clone()).collect();
    IdealInRing {
        space: closure(ring, &vecs),
        generators: gens.to_vec(),
    }
}

pub fn max_ideal(ring: &ArtinianRing) -> IdealInRing {
    let gens = (0..ring.nvars()).map(|i| ring.var(i)).collect();
    IdealInRing {
        space: ring.max_ideal_power(1),
        generators: gens,
    }
}

/// `{r : r·a ∈ J}` (with `J = 0` when `modulo` is `None`): the preimage in `R`
/// of the annihilator of `ā` in `R/J`.
pub fn annihilator(ring: &ArtinianRing, a: &RingElement, modulo: Option<&IdealInRing>) -> IdealInRing {
    let ma = ring.mult_by(a);
    let space = match modulo {
        None => ma.kernel(),
        Some(j) => {
            let cols: Vec<Vector> = (0..ring.length())
                .map(|c| j.space().quotient_coords(&ma.col(c)))
                .collect();
            let rows = j.space().complement_coords().len();
            Matrix::from_cols(ring.field(), rows, &cols).kernel()
        }
    };
    IdealInRing {
        space,
        generators: vec![],
    }
}

/// `(0 : I) = ⋂ (0 : g)` over a spanning set of `I`.
pub fn annihilator_of_ideal(ring: &ArtinianRing, i: &IdealInRing) -> IdealInRing {
    let mut rows = Vec::new();
    for v in i.space().vectors() {
        rows.extend(ring.mult_by(&RingElement(v)).row_vectors());
    }
    let space = Matrix::from_rows(ring.field(), ring.length(), &rows).kernel();
    IdealInRing {
        space,
        generators: vec![],
    }
}

/// Nakayama count `μ((I+J)/J) = dim (I+J) − dim(𝔪(I+J) + J)` with deterministic witnesses:
/// the RREF basis rows of `I+J` that extend `𝔪(I+J) + J`, taken in order.
pub fn min_gens(
    ring: &ArtinianRing,
    i: &IdealInRing,
    modulo: Option<&IdealInRing>,
) -> (usize, Vec<RingElement>) {
    let total = match modulo {
        None => i.space().clone(),
        Some(j) => i.space().sum(j.space()).expect("same ring"),
    };
    let mut acc = m_times(ring, &total);
    if let Some(j) = modulo {
        acc = acc.sum(j.space()).expect("same ring");
    }
    let mut witnesses = Vec::new();
    for row in total.vectors() {
        if !acc.contains(&row) {
            acc = acc.sum(&Subspace::span(ring.field(), ring.length(), std::slice::from_ref(&row))).expect("same ring");
            witnesses.push(RingElement(row));
        }
    }
    (witnesses.len(), witnesses)
}

/// A generator of `(I+J)/J` when it is principal.
pub fn principal_generator(
    ring: &ArtinianRing,
    i: &IdealInRing,
    modulo: Option<&IdealInRing>,
) -> Option<RingElement> {
    let (mu, mut w) = min_gens(ring, i, modulo);
    match mu {
        1 => w.pop(),
        _ => None,
    }
}

pub fn socle(ring: &ArtinianRing) -> IdealInRing {
    IdealInRing {
        space: socle_space(ring),
        generators: vec![],
    }
}
