//! Koszul complexes over an artinian ring and their homology.
//!
//! `K_i = R^{C(p,i)}` with basis `e_J` for increasing index tuples `J`, and
//! `d(e_{j_1<…<j_i}) = Σ_k (−1)^{k+1} x_{j_k} e_{J \ j_k}`. Coordinates of `K_i`
//! are laid out block by block: tuple position times `ℓ(R)` plus the basis index.

use crate::error::{Error, Result};
use crate::ezd::sequence_test;
use crate::ideal::ideal_of;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::ring::{ArtinianRing, RingElement};

pub const MAX_KOSZUL_LEN: usize = 4;

/// Increasing `i`-subsets of `0..p` in lexicographic order.
pub fn subsets(p: usize, i: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, p: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for j in start..p {
            if p - j < left {
                break;
            }
            cur.push(j);
            go(j + 1, p, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, p, i, &mut Vec::new(), &mut out);
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

pub struct KoszulComplex<'a> {
    ring: &'a ArtinianRing,
    xs: Vec<RingElement>,
    bases: Vec<Vec<Vec<usize>>>,
    /// `diffs[i]` is `d_i : K_i → K_{i−1}`; `diffs[0]` is unused.
    diffs: Vec<Matrix>,
}

impl<'a> KoszulComplex<'a> {
    pub fn new(ring: &'a ArtinianRing, xs: &[RingElement]) -> Result<Self> {
        if xs.is_empty() {
            return Err(Error::Precondition("the Koszul complex needs at least one element".into()));
        }
        let p = xs.len();
        let l = ring.length();
        let f = ring.field();
        let bases: Vec<Vec<Vec<usize>>> = (0..=p).map(|i| subsets(p, i)).collect();
        let mults: Vec<Matrix> = xs.iter().map(|x| ring.mult_by(x)).collect();
        let mut diffs = vec![Matrix::zeros(f, l, 0)];
        for i in 1..=p {
            let src = &bases[i];
            let dst = &bases[i - 1];
            let mut d = Matrix::zeros(f, l * dst.len(), l * src.len());
            for (c, tuple) in src.iter().enumerate() {
                for (k, &jk) in tuple.iter().enumerate() {
                    let mut face = tuple.clone();
                    face.remove(k);
                    let r = dst.iter().position(|t| *t == face).expect("face is a subset");
                    let m = if k % 2 == 0 { mults[jk].clone() } else { mults[jk].scale(&f.from_i64(-1)) };
                    for a in 0..l {
                        for b in 0..l {
                            d.set(r * l + a, c * l + b, m.get(a, b).clone());
                        }
                    }
                }
            }
            diffs.push(d);
        }
        for i in 2..=p {
            assert!(diffs[i - 1].mul(&diffs[i]).is_zero(), "d_{} d_{} != 0", i - 1, i);
        }
        Ok(KoszulComplex {
            ring,
            xs: xs.to_vec(),
            bases,
            diffs,
        })
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn elements(&self) -> &[RingElement] {
        &self.xs
    }

    pub fn rank(&self, i: usize) -> usize {
        self.bases.get(i).map_or(0, Vec::len)
    }

    /// `d_i` for `1 ≤ i ≤ p`.
    pub fn differential(&self, i: usize) -> Option<&Matrix> {
        (1..=self.len()).contains(&i).then(|| &self.diffs[i])
    }

    fn module_dim(&self, i: usize) -> usize {
        self.rank(i) * self.ring.length()
    }

    /// Diagonal action of `a` on `K_i`.
    fn act(&self, a: &Matrix, v: &[crate::field::Scalar]) -> Vector {
        let l = self.ring.length();
        let mut out = Vec::with_capacity(v.len());
        for block in v.chunks(l) {
            out.extend(a.mul_vec(block));
        }
        out
    }

    fn cycles(&self, i: usize) -> Subspace {
        let f = self.ring.field();
        if i == 0 {
            Subspace::full(f, self.module_dim(0))
        } else {
            self.diffs[i].kernel()
        }
    }

    fn boundaries(&self, i: usize) -> Subspace {
        let f = self.ring.field();
        let n = self.module_dim(i);
        if i == self.len() {
            return Subspace::zero(f, n);
        }
        let d = &self.diffs[i + 1];
        let cols: Vec<Vector> = (0..d.cols()).map(|c| d.col(c)).collect();
        Subspace::span(f, n, &cols)
    }

    pub fn homology(&self, i: usize) -> Result<HomologyModule> {
        let p = self.len();
        if i > p {
            return Err(Error::OutOfRange(i));
        }
        let z = self.cycles(i);
        let b = self.boundaries(i);
        debug_assert!(b.is_subspace_of(&z));
        let f = self.ring.field();
        let n = self.module_dim(i);
        let mut moved = Vec::new();
        for m in self.ring.mult_matrices() {
            for v in z.vectors() {
                moved.push(self.act(m, &v));
            }
        }
        let mz = Subspace::span(f, n, &moved).sum(&b).expect("same ambient");
        let killed = self.xs.iter().all(|x| {
            let m = self.ring.mult_by(x);
            z.vectors().iter().all(|v| b.contains(&self.act(&m, v)))
        });
        assert!(killed, "the ideal must annihilate Koszul homology");
        let base_len = self.ring.length() - ideal_of(self.ring, &self.xs).dim();
        let length = z.dim() - b.dim();
        let mu = z.dim() - mz.dim();
        Ok(HomologyModule {
            degree: i,
            length,
            mu,
            base_length: base_len,
            free: length == mu * base_len,
            rank_expected: binomial(p, i),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyModule {
    pub degree: usize,
    pub length: usize,
    /// Minimal number of generators as a module over `S = R/(x_1..x_p)`.
    pub mu: usize,
    /// `ℓ(S)`.
    pub base_length: usize,
    /// Free over `S` (of rank `mu`).
    pub free: bool,
    pub rank_expected: usize,
}

impl HomologyModule {
    pub fn free_of_expected_rank(&self) -> bool {
        self.free && self.mu == self.rank_expected
    }
}

#[derive(Clone, Debug)]
pub struct PrefixRow {
    pub p: usize,
    /// `x_p ∉ (x_1..x_{p−1})`.
    pub new_generator: bool,
    pub homology: Vec<HomologyModule>,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct KoszulCriterion {
    pub prefixes: Vec<PrefixRow>,
    pub koszul_verdict: bool,
    pub sequential_verdict: bool,
    pub agree: bool,
}

/// A tuple is a sequence of exact zero-divisors exactly when, for each prefix,
/// the last element is new and every Koszul homology module is free of rank `C(p,i)`
/// over the prefix quotient. Both sides are computed and compared.
pub fn koszul_criterion_check(ring: &ArtinianRing, xs: &[RingElement]) -> Result<KoszulCriterion> {
    if xs.len() > MAX_KOSZUL_LEN {
        return Err(Error::TooLong {
            len: xs.len(),
            max: MAX_KOSZUL_LEN,
        });
    }
    let mut prefixes = Vec::new();
    for p in 1..=xs.len() {
        let prev = ideal_of(ring, &xs[..p - 1]);
        let new_generator = !prev.contains(&xs[p - 1]);
        let cx = KoszulComplex::new(ring, &xs[..p])?;
        let homology = (0..=p).map(|i| cx.homology(i)).collect::<Result<Vec<_>>>()?;
        let ok = new_generator && homology.iter().all(HomologyModule::free_of_expected_rank);
        prefixes.push(PrefixRow {
            p,
            new_generator,
            homology,
            ok,
        });
    }
    let koszul_verdict = prefixes.iter().all(|r| r.ok);
    let sequential_verdict = sequence_test(ring, xs).is_sequence;
    Ok(KoszulCriterion {
        prefixes,
        koszul_verdict,
        sequential_verdict,
        agree: koszul_verdict == sequential_verdict,
    })
}
