use std::sync::Arc;

use proptest::prelude::*;

use grirr_core::artinian::{
    index_of_reducibility_primary, is_irreducible_primary, is_m_primary, socle,
    socle_rank_via_colon,
};
use grirr_core::gradedfield::{HomogeneousElement, SupportLattice};
use grirr_core::harness::{ideal_of_points, theorem51_check, PointConfiguration};
use grirr_core::ideal::{ideal_equal, intersect, product, quotient, saturate, sum, Ideal};
use grirr_core::monomial_decomp::MonomialIdeal;
use grirr_core::parse::{parse_polynomial, parse_ring};
use grirr_core::ring::{GradingMap, Monomial, MonomialOrder, Polynomial, RingSpec};
use grirr_core::scalar::{Field, DEFAULT_PRIME};
use grirr_core::star::{is_graded, star};

fn ring(field: Field, n: usize) -> Arc<RingSpec> {
    RingSpec::new(field, ["x", "y", "z"][..n].iter().copied()).unwrap()
}

/// Sparse polynomial from `(coefficient, exponents)` data, degree at most 3 per variable.
fn poly(r: &Arc<RingSpec>, terms: &[(i64, Vec<u32>)]) -> Polynomial {
    let n = r.nvars();
    Polynomial::from_terms(
        r,
        MonomialOrder::GrevLex,
        terms
            .iter()
            .map(|(c, e)| (r.field().from_i64(*c), Monomial::new(e[..n].to_vec())))
            .collect(),
    )
}

fn terms(max_terms: usize, max_exp: u32) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    prop::collection::vec(
        (-6i64..=6, prop::collection::vec(0..=max_exp, 3)),
        1..=max_terms,
    )
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::Prime(DEFAULT_PRIME)),
        Just(Field::Prime(7))
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn print_parse_round_trip(field in fields(), n in 1usize..=3, t in terms(5, 4)) {
        let r = ring(field, n);
        let f = poly(&r, &t);
        let again = parse_polynomial(&f.to_string(), &r).unwrap();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn ring_axioms(field in fields(), a in terms(3, 2), b in terms(3, 2), c in terms(3, 2)) {
        let r = ring(field, 3);
        let (a, b, c) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn intersection_membership(
        n in 1usize..=2,
        i in prop::collection::vec(terms(2, 2), 1..=2),
        j in prop::collection::vec(terms(2, 2), 1..=2),
        f in terms(3, 3),
    ) {
        let r = ring(Field::Prime(DEFAULT_PRIME), n);
        let a = Ideal::new(&r, i.iter().map(|t| poly(&r, t)).collect()).unwrap();
        let b = Ideal::new(&r, j.iter().map(|t| poly(&r, t)).collect()).unwrap();
        let meet = intersect(&a, &b).unwrap();
        let f = poly(&r, &f);
        prop_assert_eq!(meet.contains(&f), a.contains(&f) && b.contains(&f));
        // the product lies inside the intersection, which lies inside the sum
        prop_assert!(meet.contains_ideal(&product(&a, &b).unwrap()));
        prop_assert!(sum(&a, &b).unwrap().contains_ideal(&meet));
        for g in a.generators() {
            let gf = g * &f;
            prop_assert_eq!(meet.contains(&gf), b.contains(&gf));
        }
    }

    #[test]
    fn quotient_and_saturation_laws(
        n in 1usize..=2,
        i in prop::collection::vec(terms(2, 2), 1..=3),
        j in terms(2, 2),
    ) {
        let r = ring(Field::Prime(DEFAULT_PRIME), n);
        let a = Ideal::new(&r, i.iter().map(|t| poly(&r, t)).collect()).unwrap();
        let g = poly(&r, &j);
        prop_assume!(!g.is_zero());
        let by = Ideal::new(&r, vec![g.clone()]).unwrap();
        let q = quotient(&a, &by).unwrap();
        prop_assert!(q.contains_ideal(&a));
        for h in q.generators() {
            prop_assert!(a.contains(&(h * &g)));
        }
        let sat = saturate(&a, &g).unwrap();
        prop_assert!(sat.contains_ideal(&q));
        let again = quotient(&sat, &by).unwrap();
        prop_assert!(ideal_equal(&again, &sat).unwrap());
    }

    #[test]
    fn star_is_monotone(
        n in 1usize..=2,
        i in prop::collection::vec(terms(2, 3), 1..=2),
        extra in terms(2, 3),
        weights in prop::collection::vec(0i64..=2, 3),
    ) {
        let r = ring(Field::Prime(DEFAULT_PRIME), n);
        let mut w: Vec<i64> = weights[..n].to_vec();
        if w.iter().all(|&x| x == 0) {
            w[0] = 1;
        }
        let grading = GradingMap::new(n, vec![w]).unwrap();
        let small = Ideal::new(&r, i.iter().map(|t| poly(&r, t)).collect()).unwrap();
        let mut gens = small.generators().to_vec();
        gens.push(poly(&r, &extra));
        let big = Ideal::new(&r, gens).unwrap();
        let s_small = star(&small, &grading).unwrap().star_ideal;
        let s_big = star(&big, &grading).unwrap().star_ideal;
        prop_assert!(s_big.contains_ideal(&s_small));
        prop_assert!(is_graded(&s_small, &grading).unwrap());
        for w in star(&big, &grading).unwrap().witnesses {
            prop_assert!(big.contains(&w.element));
        }
    }

    #[test]
    fn irreducible_monomial_ideals_are_pure_powers(
        n in 1usize..=3,
        powers in prop::collection::vec(1u32..=4, 3),
        extra in prop::collection::vec(prop::collection::vec(0u32..4, 3), 0..=3),
    ) {
        let mut gens: Vec<Monomial> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = powers[i];
                Monomial::new(e)
            })
            .collect();
        for e in &extra {
            let m: Vec<u32> = e[..n].iter().zip(&powers).map(|(x, p)| x % p).collect();
            if m.iter().any(|&x| x > 0) {
                gens.push(Monomial::new(m));
            }
        }
        let mono = MonomialIdeal::new(n, gens);
        let r = ring(Field::Rational, n);
        let ideal = mono.to_ideal(&r);
        prop_assert!(is_m_primary(&ideal));
        let pure = mono.generators().iter().all(|g| g.support_size() == 1);
        prop_assert_eq!(is_irreducible_primary(&ideal).unwrap(), pure);
        prop_assert_eq!(mono.is_irreducible(), pure);
    }

    #[test]
    fn socle_rank_matches_colon_length(
        n in 1usize..=2,
        powers in prop::collection::vec(2u32..=4, 2),
        extra in prop::collection::vec(terms(3, 3), 0..=2),
    ) {
        let r = ring(Field::Prime(DEFAULT_PRIME), n);
        let mut gens: Vec<Polynomial> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = powers[i];
                Polynomial::monomial(&r, MonomialOrder::GrevLex, Monomial::new(e))
            })
            .collect();
        // extra generators without constant terms keep the ideal inside m
        for t in &extra {
            let f = poly(&r, t);
            let c = f.coefficient(&Monomial::one(n));
            let constant = Polynomial::constant(&r, MonomialOrder::GrevLex, c);
            gens.push(&f - &constant);
        }
        let ideal = Ideal::new(&r, gens).unwrap();
        prop_assert!(is_m_primary(&ideal));
        let rank = socle(&ideal).unwrap().rank();
        prop_assert!(rank >= 1);
        prop_assert_eq!(socle_rank_via_colon(&ideal).unwrap(), rank);
        prop_assert_eq!(index_of_reducibility_primary(&ideal).unwrap(), rank);
    }

    #[test]
    fn point_ideals_vanish_exactly_on_their_points(
        pts in prop::collection::btree_set((-4i64..=4, -4i64..=4), 1..=4),
    ) {
        let pts: Vec<(i64, i64)> = pts.into_iter().filter(|&p| p != (0, 0)).collect();
        prop_assume!(!pts.is_empty());
        let config = PointConfiguration::from_integers(Field::Rational, &pts).unwrap();
        let ideal = ideal_of_points(&config).unwrap();
        for &(a, b) in &pts {
            let v = [Field::Rational.from_i64(a), Field::Rational.from_i64(b)];
            prop_assert!(ideal.generators().iter().all(|g| g.evaluate(&v).is_zero()));
        }
        let rep = theorem51_check(&config).unwrap();
        prop_assert!(rep.consistent());
        prop_assert_eq!(rep.ir_i, pts.len());
    }

    #[test]
    fn homogeneous_products_stay_in_the_support(
        gens in prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 1..=3),
        a in prop::collection::vec(-2i64..=2, 3),
        b in prop::collection::vec(-2i64..=2, 3),
    ) {
        let lattice = SupportLattice::generated_by(2, &gens);
        let point = |k: &[i64]| {
            let mut v = vec![0i64; 2];
            for (c, g) in k.iter().zip(lattice.basis()) {
                v[0] += c * g[0];
                v[1] += c * g[1];
            }
            v
        };
        let f = Field::Prime(7);
        let x = HomogeneousElement::new(f.from_i64(3), point(&a)).unwrap();
        let y = HomogeneousElement::new(f.from_i64(5), point(&b)).unwrap();
        let xy = x.mul(&y);
        prop_assert!(lattice.contains(&xy.exponent));
        prop_assert!(x.mul(&x.inverse()).is_one());
        for g in &gens {
            prop_assert!(lattice.contains(g));
        }
    }
}

#[test]
fn equality_ignores_generators_and_orders() {
    let r = parse_ring("QQ[x,y]").unwrap();
    let p = |s: &str| parse_polynomial(s, &r).unwrap();
    let a = Ideal::new(&r, vec![p("x^2 - y"), p("x*y - 1")]).unwrap();
    let b = Ideal::new(&r, vec![p("x - y^2"), p("y^3 - 1"), p("x^2 - y")]).unwrap();
    assert!(ideal_equal(&a, &b).unwrap());
    assert_eq!(
        a.groebner_basis(MonomialOrder::Lex).elements(),
        b.groebner_basis(MonomialOrder::Lex).elements()
    );
}
