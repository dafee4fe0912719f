use proptest::prelude::*;
use proptest::test_runner::RngSeed;

use ezd_core::ezd::{is_pair, pair_test, sequence_test};
use ezd_core::ideal::{annihilator, ideal_of};
use ezd_core::koszul::KoszulComplex;
use ezd_core::{
    buchberger, build_ring, ArtinianRing, FieldSpec, Matrix, Monomial, MonomialOrder, Polynomial, RingElement,
    Scalar, Subspace, Vector,
};

const P: u64 = 5;

fn field() -> FieldSpec {
    FieldSpec::Prime(P)
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::Grevlex), Just(MonomialOrder::Lex), Just(MonomialOrder::Grlex)]
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(0x5eed),
        ..ProptestConfig::default()
    }
}

type RawPoly = Vec<(Vec<u32>, i64)>;

fn raw_poly(nvars: usize, maxdeg: u32, terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((prop::collection::vec(0..=maxdeg, nvars), 0..P as i64), 1..=terms)
}

fn poly(raw: &RawPoly, nvars: usize, order: MonomialOrder) -> Polynomial {
    let f = field();
    let terms = raw.iter().map(|(e, c)| (Monomial::new(e.clone()), f.from_i64(*c))).collect();
    Polynomial::from_terms(f, nvars, order, terms)
}

/// Drops the constant term so the ideal stays inside the maximal ideal.
fn no_constant(raw: &RawPoly) -> RawPoly {
    raw.iter().filter(|(e, _)| e.iter().any(|&d| d > 0)).cloned().collect()
}

/// A local artinian ring: pure powers of every variable plus a few random generators.
fn local_ring() -> impl Strategy<Value = ArtinianRing> {
    (2usize..=3, orders())
        .prop_flat_map(|(n, order)| {
            (
                Just(n),
                Just(order),
                prop::collection::vec(2u32..=4, n),
                prop::collection::vec(raw_poly(n, 3, 4), 0..=2),
            )
        })
        .prop_map(|(n, order, powers, extra)| {
            let mut gens: Vec<Polynomial> = powers
                .iter()
                .enumerate()
                .map(|(i, &k)| {
                    let mut e = vec![0; n];
                    e[i] = k;
                    Polynomial::term(field(), order, Monomial::new(e), field().one())
                })
                .collect();
            gens.extend(extra.iter().map(|r| poly(&no_constant(r), n, order)));
            build_ring(field(), &names(n), &gens, order).expect("pure powers make the ring local")
        })
}

fn element(ring: &ArtinianRing, coeffs: &[i64]) -> RingElement {
    RingElement(coeffs.iter().take(ring.length()).map(|&c| field().from_i64(c)).collect())
}

fn ring_and_elements(k: usize) -> impl Strategy<Value = (ArtinianRing, Vec<Vec<i64>>)> {
    local_ring().prop_flat_map(move |r| {
        let l = r.length();
        (Just(r), prop::collection::vec(prop::collection::vec(0..P as i64, l), k))
    })
}

fn vecs(rows: &[Vec<i64>]) -> Vec<Vector> {
    rows.iter().map(|r| r.iter().map(|&c| field().from_i64(c)).collect()).collect()
}

fn space(dim: usize, rows: &[Vec<i64>]) -> Subspace {
    Subspace::span(field(), dim, &vecs(rows))
}

fn rank_of(dim: usize, rows: &[Vector]) -> usize {
    Matrix::from_rows(field(), dim, rows).rank()
}

fn scalar(c: i64) -> Scalar {
    field().from_i64(c)
}

fn subspace_pair() -> impl Strategy<Value = (usize, Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    (1usize..=7).prop_flat_map(|d| {
        let row = prop::collection::vec(0..P as i64, d);
        (
            Just(d),
            prop::collection::vec(row.clone(), 0..=d + 1),
            prop::collection::vec(row, 0..=d + 1),
        )
    })
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn grassmann_identity((d, a, b) in subspace_pair()) {
        let (u, w) = (space(d, &a), space(d, &b));
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        // Rank of the stacked generators is an independent count of dim(U + W).
        let stacked: Vec<Vector> = vecs(&a).into_iter().chain(vecs(&b)).collect();
        prop_assert_eq!(sum.dim(), rank_of(d, &stacked));
        for v in meet.vectors() {
            prop_assert!(u.contains(&v) && w.contains(&v));
        }
    }

    #[test]
    fn buchberger_output_is_a_reduced_basis(
        order in orders(),
        // Exponents stay small: random lex bases in three variables blow up quickly.
        raws in prop::collection::vec(raw_poly(3, 2, 4), 1..=3),
    ) {
        let gens: Vec<Polynomial> = raws.iter().map(|r| poly(r, 3, order)).collect();
        let gb = buchberger(&gens, order);
        prop_assert!(gb.s_pairs_reduce_to_zero());
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
        for g in gb.generators() {
            prop_assert!(g.leading().unwrap().1.is_one());
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(
        order in orders(),
        raws in prop::collection::vec(raw_poly(2, 3, 3), 1..=3),
        f in raw_poly(2, 4, 5),
        g in raw_poly(2, 4, 5),
        c in 0..P as i64,
    ) {
        let gens: Vec<Polynomial> = raws.iter().map(|r| poly(r, 2, order)).collect();
        let gb = buchberger(&gens, order);
        let (f, g) = (poly(&f, 2, order), poly(&g, 2, order));
        let nf = gb.normal_form(&f);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        let combo = f.scale(&scalar(c)).add(&g).unwrap();
        let expect = nf.scale(&scalar(c)).add(&gb.normal_form(&g)).unwrap();
        prop_assert_eq!(gb.normal_form(&combo), expect);
        prop_assert!(gb.contains(&f.sub(&nf).unwrap()));
    }

    #[test]
    fn multiplication_matrices_commute_and_are_nilpotent(ring in local_ring()) {
        let ms = ring.mult_matrices();
        for a in ms {
            prop_assert!(a.pow(ring.length()).is_zero());
            for b in ms {
                prop_assert_eq!(a.mul(b), b.mul(a));
            }
        }
    }

    #[test]
    fn annihilator_rank_nullity((ring, es) in ring_and_elements(1)) {
        let a = element(&ring, &es[0]);
        let ann = annihilator(&ring, &a, None);
        let image = ring.mult_by(&a).rank();
        prop_assert_eq!(ann.dim() + image, ring.length());
        prop_assert_eq!(ideal_of(&ring, std::slice::from_ref(&a)).dim(), image);
        for v in ann.space().vectors() {
            prop_assert!(ring.mul(&a, &RingElement(v)).is_zero());
        }
    }

    #[test]
    fn multiplication_is_associative_and_distributive((ring, es) in ring_and_elements(3)) {
        let (a, b, c) = (element(&ring, &es[0]), element(&ring, &es[1]), element(&ring, &es[2]));
        prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
        prop_assert_eq!(ring.mul(&a, &ring.add(&b, &c)), ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c)));
        prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
    }
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn twins_are_symmetric((ring, es) in ring_and_elements(1)) {
        let x = element(&ring, &es[0]);
        let r = pair_test(&ring, &x, None);
        if let Some(y) = &r.twin {
            prop_assert!(r.verdict);
            prop_assert!(is_pair(&ring, y, &x, None));
            let back = pair_test(&ring, y, None);
            prop_assert!(back.verdict);
            // (0:y) = (x), so the twin of the twin generates the ideal of x.
            let twin2 = back.twin.unwrap();
            let (lhs, rhs) = (ideal_of(&ring, &[twin2]), ideal_of(&ring, std::slice::from_ref(&x)));
            prop_assert_eq!(lhs.space(), rhs.space());
            prop_assert_eq!(r.dims.0 + r.dims.1, ring.length());
        }
    }

    #[test]
    fn koszul_differentials_square_to_zero((ring, es) in ring_and_elements(3)) {
        let xs: Vec<RingElement> = es.iter().map(|e| element(&ring, e)).collect();
        let k = KoszulComplex::new(&ring, &xs).unwrap();
        // Euler characteristic of the complex is zero for p >= 1.
        let mut chi: i64 = 0;
        for i in 0..=3 {
            let h = k.homology(i).unwrap();
            chi += if i % 2 == 0 { h.length as i64 } else { -(h.length as i64) };
        }
        prop_assert_eq!(chi, 0);
    }

    #[test]
    fn sequence_twins_annihilate((ring, es) in ring_and_elements(2)) {
        let xs: Vec<RingElement> = es.iter().map(|e| element(&ring, e)).collect();
        let rep = sequence_test(&ring, &xs);
        let mut prefix = ideal_of(&ring, &[]);
        for (x, y) in xs.iter().zip(&rep.twins) {
            prop_assert!(prefix.contains(&ring.mul(x, y)));
            prefix = prefix.sum(&ideal_of(&ring, std::slice::from_ref(x)));
        }
    }
}
