use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nfblocks::certify::{irreducible, separated, Verdict};
use nfblocks::charpoly::graph_charpoly;
use nfblocks::matrix::multinomial;
use nfblocks::geometry::{geo_graph, pair_set, Sites};
use nfblocks::poly::{resultant, Assignment, HalfExpVec, MPoly, Substitution, TPoly};
use nfblocks::{enumerate_edges, Color, Edge, GElem, MarkedGraph, NormalForm};

const NV: usize = 3;

fn mpoly(nvars: usize, half: bool) -> impl Strategy<Value = MPoly> {
    let step = if half { 1u16 } else { 2 };
    let term = (prop::collection::vec(0u16..4, nvars), -9i64..10)
        .prop_map(move |(e, c)| (HalfExpVec::from_doubled(e.into_iter().map(|x| x * step)), BigInt::from(c)));
    prop::collection::vec(term, 0..5).prop_map(move |t| MPoly::from_terms(nvars, t))
}

fn substitution() -> impl Strategy<Value = Assignment> {
    prop::collection::vec(prop_oneof![Just(None), (0..NV).prop_map(|v| Some(Substitution::Var(v))), (-4i64..5).prop_map(|c| Some(Substitution::Value(c.into())))], NV)
        .prop_map(|subs| {
            subs.into_iter()
                .enumerate()
                .filter_map(|(i, s)| s.map(|s| (i, s)))
                // A variable may only be renamed to a variable that stays put.
                .collect::<Assignment>()
        })
        .prop_filter("acyclic renaming", |a| {
            a.values().all(|s| match s {
                Substitution::Var(v) => !a.contains_key(v),
                Substitution::Value(_) => true,
            })
        })
}

fn monic_from_roots(roots: &[MPoly]) -> TPoly {
    roots.iter().fold(TPoly::one(NV), |acc, r| &acc * &TPoly::linear(r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in mpoly(NV, true), b in mpoly(NV, true), c in mpoly(NV, true)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn specialization_is_a_homomorphism(a in mpoly(NV, false), b in mpoly(NV, false), asg in substitution()) {
        let s = |p: &MPoly| p.specialize(&asg).unwrap();
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
    }

    #[test]
    fn square_roots_of_squares(p in mpoly(NV, true)) {
        let sq = &p * &p;
        let s = sq.sqrt().expect("a square has a root");
        prop_assert_eq!(&s * &s, sq);
    }

    /// `Res(Π(t - r_i), Π(t - s_j)) = ± Π(r_i - s_j)`, which vanishes exactly
    /// when a root is shared.
    #[test]
    fn resultant_detects_common_roots(
        r in prop::collection::vec(mpoly(NV, false), 1..3),
        s in prop::collection::vec(mpoly(NV, false), 1..3),
        plant in any::<bool>(),
    ) {
        let mut s = s;
        if plant {
            s[0] = r[0].clone();
        }
        let a = monic_from_roots(&r);
        let b = monic_from_roots(&s);
        let mut expected = MPoly::one(NV);
        for x in &r {
            for y in &s {
                expected = &expected * &(x - y);
            }
        }
        let res = resultant(&a, &b).unwrap();
        prop_assert!(res == expected || res == -&expected);
        if plant {
            prop_assert!(res.is_zero());
        }
    }

    #[test]
    fn linear_forms_are_integral(q in 1u32..=5, m in 2usize..=6, seed in any::<u64>()) {
        let nf = NormalForm::new(q, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a: Vec<i64> = (0..m).map(|_| rand::Rng::gen_range(&mut rng, -6..=6)).collect();
        prop_assert!(nf.linear_form(&a).is_ok());
    }

    /// With `Σ n_i = 0`, setting every support variable equal kills `a(ξ)`.
    #[test]
    fn balanced_linear_forms_vanish_on_the_diagonal(q in 1u32..=4, m in 2usize..=5, seed in any::<u64>()) {
        let nf = NormalForm::new(q, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a: Vec<i64> = (0..m - 1).map(|_| rand::Rng::gen_range(&mut rng, -4..=4)).collect();
        a.push(-a.iter().sum::<i64>());
        let support: Vec<usize> = (0..m).filter(|&i| a[i] != 0).collect();
        let mut asg = Assignment::new();
        for &i in support.iter().skip(1) {
            asg.insert(i, Substitution::Var(support[0]));
        }
        prop_assert!(nf.linear_form(&a).unwrap().specialize(&asg).unwrap().is_zero());
    }

    #[test]
    fn canonical_form_is_orbit_invariant(seed in any::<u64>(), size in 1usize..=5, pick in any::<prop::sample::Index>()) {
        let (q, m) = (1, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = MarkedGraph::random_connected(m, q, size, &mut rng).unwrap();
        let base = g.canonicalize().unwrap();
        let t = pick.get(g.vertices()).inv();
        let shift = GElem::new(vec![2, -1, 0], 1).unwrap();
        let perm = [2, 0, 1];
        let moved = g.translate(&shift).unwrap().translate(&GElem::tau(m)).unwrap().translate(&t).unwrap().permute(&perm);
        prop_assert_eq!(moved.canonicalize().unwrap(), base);
    }

    #[test]
    fn charpolys_have_integral_exponents(seed in any::<u64>(), size in 1usize..=5, q in 1u32..=2) {
        let m = 2 * q as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = MarkedGraph::random_connected(m, q, size, &mut rng).unwrap();
        let chi = graph_charpoly(&NormalForm::new(q, m).unwrap(), &g).unwrap();
        prop_assert!(chi.has_integer_exponents());
        prop_assert!(chi.is_monic());
        prop_assert_eq!(chi.degree(), Some(g.len()));
    }

    #[test]
    fn reducible_certificates_multiply_back(r in prop::collection::vec(mpoly(NV, false), 2..4)) {
        let p = monic_from_roots(&r);
        prop_assume!(p.degree() == Some(r.len()));
        let cert = irreducible(&p, 8).unwrap();
        prop_assert_ne!(cert.verdict, Verdict::Irreducible);
        if cert.verdict == Verdict::Reducible {
            let prod = cert.factors.iter().fold(TPoly::one(NV), |acc, f| &acc * f);
            prop_assert_eq!(prod, p);
        }
    }

    /// Degree two is decided outright.
    #[test]
    fn quadratics_are_decided(b in mpoly(NV, false), c in mpoly(NV, false)) {
        let p = TPoly::from_coeffs(NV, vec![c, b, MPoly::one(NV)]);
        let cert = irreducible(&p, 8).unwrap();
        prop_assert_ne!(cert.verdict, Verdict::Unknown);
        if cert.verdict == Verdict::Reducible {
            let prod = cert.factors.iter().fold(TPoly::one(NV), |acc, f| &acc * f);
            prop_assert_eq!(prod, p);
        }
    }

    #[test]
    fn separation_flags_are_symmetric(a in prop::collection::vec(mpoly(NV, false), 1..3), b in prop::collection::vec(mpoly(NV, false), 1..3)) {
        let a = monic_from_roots(&a);
        let b = monic_from_roots(&b);
        let ab = separated(&a, &b).unwrap();
        let ba = separated(&b, &a).unwrap();
        prop_assert_eq!(ab.flags.distinct, ba.flags.distinct);
        prop_assert_eq!(ab.flags.resultant_nonzero, ba.flags.resultant_nonzero);
        prop_assert_eq!(ab.flags.opposite_resultant_nonzero, ba.flags.opposite_resultant_nonzero);
        prop_assert_eq!(ab.flags.discriminant_a_nonzero, ba.flags.discriminant_b_nonzero);
        prop_assert_eq!(ab.separated, ba.separated);
    }

    #[test]
    fn geometric_edges_satisfy_their_equations(coords in prop::collection::vec(-4i64..=4, 6)) {
        let v: Vec<Vec<i64>> = coords.chunks(2).map(|c| c.to_vec()).collect();
        prop_assume!(v.iter().collect::<BTreeSet<_>>().len() == 3);
        let sites = Sites::new(2, v.clone()).unwrap();
        let g = geo_graph(&sites, 1, 6).unwrap();
        let n2 = |p: &[i64]| p.iter().map(|x| x * x).sum::<i64>();
        for e in &g.edges {
            let p: Vec<i64> = (0..2).map(|d| e.edge.n.iter().zip(&v).map(|(c, s)| c * s[d]).sum()).collect();
            let energy: i64 = e.edge.n.iter().zip(&v).map(|(c, s)| c * n2(s)).sum();
            prop_assert!(!sites.contains(&e.h) && !sites.contains(&e.k));
            match e.edge.color {
                Color::Black => {
                    prop_assert!((0..2).all(|d| p[d] + e.k[d] - e.h[d] == 0));
                    prop_assert_eq!(energy + n2(&e.k) - n2(&e.h), 0);
                }
                Color::Red => {
                    prop_assert!((0..2).all(|d| p[d] + e.k[d] + e.h[d] == 0));
                    prop_assert_eq!(energy + n2(&e.k) + n2(&e.h), 0);
                }
            }
        }
    }

    #[test]
    fn red_pair_sets_ignore_the_box(coords in prop::collection::vec(-3i64..=3, 6)) {
        let v: Vec<Vec<i64>> = coords.chunks(2).map(|c| c.to_vec()).collect();
        prop_assume!(v.iter().collect::<BTreeSet<_>>().len() == 3);
        let sites = Sites::new(2, v).unwrap();
        for e in enumerate_edges(2, 3).unwrap().into_iter().filter(|e| e.color == Color::Red) {
            prop_assert_eq!(pair_set(&e, &sites, 1).unwrap(), pair_set(&e, &sites, 9).unwrap());
        }
    }
}

#[test]
fn generators_are_closed_under_inverse() {
    for q in 1..=3u32 {
        for m in 2..=5 {
            let edges: BTreeSet<Edge> = enumerate_edges(q, m).unwrap().into_iter().collect();
            for e in &edges {
                let g = e.generator();
                match e.color {
                    Color::Black => {
                        let inv = Edge::new(e.n.iter().map(|x| -x).collect(), q).unwrap();
                        assert!(edges.contains(&inv));
                        assert!(e.plus().iter().sum::<i64>() <= i64::from(q));
                        assert_eq!(e.plus().iter().sum::<i64>(), e.minus().iter().sum::<i64>());
                    }
                    Color::Red => {
                        assert!(g.mul(&g).unwrap().is_identity());
                        assert!(e.plus().iter().sum::<i64>() < i64::from(q));
                        assert!(e.minus().iter().sum::<i64>() <= i64::from(q) + 1);
                    }
                }
            }
        }
    }
}

#[test]
fn squared_edge_coefficients_carry_the_support() {
    for q in 1..=3u32 {
        let m = 2 * q as usize + 1;
        let nf = NormalForm::new(q, m).unwrap();
        for e in enumerate_edges(q, m).unwrap() {
            let c = nf.edge_coeff(&e).unwrap();
            let c2 = &c * &c;
            for i in e.support() {
                assert!(u64::from(c2.min_doubled(i)) >= 2 * e.n[i].unsigned_abs(), "{e}");
            }
        }
    }
}

/// With `m = 2q`, a full-support edge saturates both shape bounds and its
/// coefficient collapses to one monomial.
#[test]
fn full_support_edges_have_monomial_coefficients() {
    for q in 1..=4u32 {
        let m = 2 * q as usize;
        let nf = NormalForm::new(q, m).unwrap();
        let q = i64::from(q);
        for e in enumerate_edges(q as u32, m).unwrap().into_iter().filter(|e| e.support().len() == m) {
            let (plus, minus) = (e.plus(), e.minus());
            let value = match e.color {
                Color::Black => BigInt::from(q + 1) * multinomial(q, &plus) * multinomial(q, &minus),
                Color::Red => BigInt::from(q) * multinomial(q - 1, &plus) * multinomial(q + 1, &minus),
            };
            let exp = HalfExpVec::from_doubled(e.n.iter().map(|x| x.unsigned_abs() as u16));
            assert_eq!(nf.edge_coeff(&e).unwrap(), MPoly::monomial(exp, value), "{e}");
        }
    }
}

#[test]
fn edge_coefficients_are_never_zero() {
    let nf = NormalForm::new(3, 6).unwrap();
    assert!(enumerate_edges(3, 6).unwrap().iter().all(|e| !nf.edge_coeff(e).unwrap().is_zero()));
}
