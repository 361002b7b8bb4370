use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use toric_monoids::algebra::{
    derive, evaluate, multiply, tensor_multiply, tensor_power, DerivationRule, LaurentElement,
    TensorElement,
};
use toric_monoids::demazure::{pair_equivalence, roots_up_to, RootPair};
use toric_monoids::lattice::{dual_cone, primitive, semigroup_generators, Cone2, LatticePoint};
use toric_monoids::{classify_cone, comult, cone_of_spec, MonoidSpec};

fn point() -> impl Strategy<Value = LatticePoint> {
    (-6i64..=6, -6i64..=6).prop_map(|(x, y)| LatticePoint::m(x, y))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    rational().prop_filter("nonzero", |q| !q.is_zero())
}

fn laurent() -> impl Strategy<Value = LaurentElement> {
    prop::collection::vec((point(), rational()), 0..5).prop_map(LaurentElement::from_terms)
}

fn tensor() -> impl Strategy<Value = TensorElement> {
    prop::collection::vec((point(), point(), rational()), 0..4).prop_map(TensorElement::from_terms)
}

/// A strongly convex full-dimensional cone in `M` with rays in a small box.
fn cone() -> impl Strategy<Value = Cone2> {
    (point(), point()).prop_filter_map("independent primitive rays", |(a, b)| {
        if a.is_zero() || b.is_zero() {
            return None;
        }
        let (a, b) = (primitive(&a).ok()?, primitive(&b).ok()?);
        let c = Cone2::new(a, b).ok()?;
        c.is_full_dim().then_some(c)
    })
}

fn spec() -> impl Strategy<Value = MonoidSpec> {
    (1u64..=8, 1u64..=8, 0u64..=8, any::<bool>()).prop_filter_map("coprime", |(n, a, b, is_x)| {
        if is_x {
            MonoidSpec::x(n, a, b).ok()
        } else {
            MonoidSpec::y(n, a, b).ok()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn multiplication_is_commutative_and_associative(f in laurent(), g in laurent(), h in laurent()) {
        prop_assert_eq!(multiply(&f, &g), multiply(&g, &f));
        prop_assert_eq!(multiply(&multiply(&f, &g), &h), multiply(&f, &multiply(&g, &h)));
        prop_assert_eq!(multiply(&f, &(&g + &h)), &multiply(&f, &g) + &multiply(&f, &h));
        prop_assert_eq!(multiply(&f, &LaurentElement::one()), f);
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in laurent(), g in laurent(), x in nonzero_rational(), y in nonzero_rational()) {
        let at = |e: &LaurentElement| evaluate(e, (&x, &y)).unwrap();
        prop_assert_eq!(at(&multiply(&f, &g)), at(&f) * at(&g));
        prop_assert_eq!(at(&(&f + &g)), at(&f) + at(&g));
    }

    #[test]
    fn derivations_satisfy_leibniz(f in laurent(), g in laurent(), root in point(), ray in point()) {
        let d = DerivationRule::new(root, ray.with_ambient(toric_monoids::Ambient::N));
        let lhs = derive(&d, &multiply(&f, &g));
        let rhs = &multiply(&derive(&d, &f), &g) + &multiply(&f, &derive(&d, &g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_product_is_associative(s in tensor(), t in tensor(), u in tensor()) {
        prop_assert_eq!(
            tensor_multiply(&tensor_multiply(&s, &t), &u),
            tensor_multiply(&s, &tensor_multiply(&t, &u))
        );
        prop_assert_eq!(s.flip().flip(), s);
    }

    #[test]
    fn tensor_power_recursion(s in tensor(), k in 0u64..6) {
        prop_assert_eq!(tensor_power(&s, k + 1), tensor_multiply(&tensor_power(&s, k), &s));
        prop_assert_eq!(tensor_power(&s, 0), TensorElement::one());
    }

    #[test]
    fn primitive_vectors(v in point(), k in 1i64..5) {
        prop_assume!(!v.is_zero());
        let p = primitive(&v).unwrap();
        prop_assert!(p.is_primitive());
        prop_assert_eq!(primitive(&v.scale(&BigInt::from(k))).unwrap(), p.clone());
        prop_assert_eq!(v.clone(), p.scale(&v.content()));
    }

    #[test]
    fn duality_is_an_involution(c in cone()) {
        let d = dual_cone(&c).unwrap();
        prop_assert_eq!(dual_cone(&d).unwrap(), c.clone());
        // membership agrees with the pairing characterisation
        for u in d.lattice_points(5) {
            for r in c.rays() {
                let pairing = u.x() * r.x() + u.y() * r.y();
                prop_assert!(pairing >= BigInt::zero());
            }
        }
    }

    #[test]
    fn hilbert_basis_generates_and_is_irreducible(c in cone()) {
        let basis = semigroup_generators(&c).unwrap();
        for r in c.rays() {
            prop_assert!(basis.contains(r));
        }
        for (i, g) in basis.iter().enumerate() {
            for (j, h) in basis.iter().enumerate() {
                if i != j {
                    prop_assert!(!c.contains_lattice(&(g - h)), "{} - {} in cone", g, h);
                }
            }
        }
        // every small lattice point of the cone is reached from the basis
        for u in c.lattice_points(4) {
            prop_assert!(reachable(&c, &basis, &u), "{} not generated", u);
        }
    }

    #[test]
    fn classification_round_trip(s in spec()) {
        let cone = cone_of_spec(&s);
        prop_assert_eq!(classify_cone(&cone, s.n()).unwrap(), s);
    }

    #[test]
    fn comult_is_multiplicative(s in spec(), i in 0usize..40, j in 0usize..40) {
        let points = cone_of_spec(&s).lattice_points(4);
        let (u, v) = (&points[i % points.len()], &points[j % points.len()]);
        let rule = s.comult_rule();
        prop_assert_eq!(
            comult(&rule, &(u + v)).unwrap(),
            tensor_multiply(&comult(&rule, u).unwrap(), &comult(&rule, v).unwrap())
        );
    }

    #[test]
    fn pair_equivalence_is_reflexive_and_symmetric(c in cone(), i in 0usize..2) {
        let sigma = dual_cone(&c).unwrap();
        let roots = roots_up_to(&sigma, i, 6).unwrap();
        prop_assume!(roots.len() >= 2);
        let pairs: Vec<RootPair> = roots
            .windows(2)
            .map(|w| RootPair::new(w[0].clone(), w[1].clone()).unwrap())
            .collect();
        let others: Vec<RootPair> = roots_up_to(&sigma, 1 - i, 6)
            .unwrap()
            .windows(2)
            .map(|w| RootPair::new(w[0].clone(), w[1].clone()).unwrap())
            .collect();
        for p in pairs.iter().chain(&others) {
            prop_assert!(pair_equivalence(&sigma, p, p).unwrap());
            for q in pairs.iter().chain(&others) {
                prop_assert_eq!(
                    pair_equivalence(&sigma, p, q).unwrap(),
                    pair_equivalence(&sigma, q, p).unwrap()
                );
            }
        }
    }
}

/// Whether `u` is a sum of elements of `basis`, by descending search.
fn reachable(c: &Cone2, basis: &[LatticePoint], u: &LatticePoint) -> bool {
    fn go(
        c: &Cone2,
        basis: &[LatticePoint],
        u: &LatticePoint,
        dead: &mut BTreeSet<LatticePoint>,
    ) -> bool {
        if u.is_zero() {
            return true;
        }
        if dead.contains(u) {
            return false;
        }
        let found = basis.iter().any(|g| {
            let rest = u - g;
            c.contains_lattice(&rest) && go(c, basis, &rest, dead)
        });
        if !found {
            dead.insert(u.clone());
        }
        found
    }
    go(c, basis, u, &mut BTreeSet::new())
}
