use fanoverify::cones::decompose::{eff_cone, ne_cone};
use fanoverify::cones::{Cone, Membership};
use fanoverify::exact::{Mat, Rat};
use proptest::prelude::*;

fn v(x: &[i64]) -> Vec<Rat> {
    x.iter().map(|&a| Rat::int(a)).collect()
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Carathéodory: v is in the cone iff it is a nonnegative combination of
/// some linearly independent subset of the generators. Every subset is
/// tried, solving exactly.
fn in_cone_by_subsets(gens: &[Vec<Rat>], target: &[Rat]) -> bool {
    if target.iter().all(Rat::is_zero) {
        return true;
    }
    let n = gens.len();
    let dim = target.len();
    (1u32..1 << n).any(|mask| {
        let picked: Vec<&Vec<Rat>> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &gens[i]).collect();
        if picked.len() > dim {
            return false;
        }
        let k = picked.len();
        let aug = Mat::from_fn(&(), dim, k + 1, |r, c| if c < k { picked[c][r].clone() } else { target[r].clone() });
        let (red, pivots) = aug.rref();
        // independent columns and a consistent system: the solution is unique
        pivots == (0..k).collect::<Vec<_>>() && (0..k).all(|i| !red.get(i, k).is_negative())
    })
}

fn small_cone(dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(-3i64..=3, dim), 1..=6)
        .prop_filter("nonzero generators", |g| g.iter().all(|r| r.iter().any(|&x| x != 0)))
}

fn check_member(cone: &Cone, x: &[Rat]) {
    let oracle = in_cone_by_subsets(cone.generators(), x);
    match cone.member(x).unwrap() {
        Membership::Inside(w) => {
            assert!(oracle, "{x:?}");
            assert!(w.coefficients.iter().all(|c| !c.is_negative()));
            assert_eq!(cone.recombine(&w), x);
        }
        Membership::Outside(z) => {
            assert!(!oracle, "{x:?}");
            assert!(dot(&z, x).is_negative());
            assert!(cone.generators().iter().all(|g| !dot(&z, g).is_negative()));
        }
    }
}

fn check_duality(cone: &Cone, ineq: &[Vec<Rat>], x: &[Rat]) {
    let by_dual = ineq.iter().all(|a| !dot(a, x).is_negative());
    assert_eq!(by_dual, cone.member(x).unwrap().is_inside(), "{x:?}");
}

/// Rays as primitive integer vectors, sorted, for order-free comparison.
fn normalized(rays: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let mut out: Vec<Vec<Rat>> = rays
        .into_iter()
        .map(|r| {
            let lead = r.iter().find(|x| !x.is_zero()).unwrap().clone();
            let lead = if lead.is_negative() { -lead } else { lead };
            r.iter().map(|x| x / &lead).collect()
        })
        .collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn curve_cone_membership_is_complete(x in proptest::collection::vec(-5i64..=5, 3)) {
        check_member(&ne_cone(), &v(&x));
        check_member(&eff_cone(), &v(&x));
    }

    #[test]
    fn random_cone_membership_is_complete(g in small_cone(3), x in proptest::collection::vec(-5i64..=5, 3)) {
        let refs: Vec<&[i64]> = g.iter().map(Vec::as_slice).collect();
        check_member(&Cone::from_ints(3, &refs).unwrap(), &v(&x));
    }

    #[test]
    fn duality_on_random_cones(g in small_cone(3), x in proptest::collection::vec(-5i64..=5, 3)) {
        let refs: Vec<&[i64]> = g.iter().map(Vec::as_slice).collect();
        let cone = Cone::from_ints(3, &refs).unwrap();
        check_duality(&cone, &cone.dual_inequalities(), &v(&x));
    }

    #[test]
    fn extremal_rays_ignore_order(g in small_cone(3), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut shuffled = g.clone();
        shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let make = |rows: &[Vec<i64>]| {
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            Cone::from_ints(3, &refs).unwrap()
        };
        prop_assert_eq!(normalized(make(&g).extremal_rays()), normalized(make(&shuffled).extremal_rays()));
    }
}

#[test]
fn duality_on_the_geometric_cones() {
    for cone in [ne_cone(), eff_cone()] {
        let ineq = cone.dual_inequalities();
        for a in -4..=4 {
            for b in -4..=4 {
                for c in -4..=4 {
                    check_duality(&cone, &ineq, &v(&[a, b, c]));
                }
            }
        }
    }
}

#[test]
fn curve_cone_extremal_rays_any_order() {
    let gens = ne_cone().generators().to_vec();
    let expected = normalized(ne_cone().extremal_rays());
    assert_eq!(expected.len(), 4);
    let mut order: Vec<usize> = (0..gens.len()).collect();
    // every rotation and the reversal
    for _ in 0..gens.len() {
        order.rotate_left(1);
        for rev in [false, true] {
            let mut o = order.clone();
            if rev {
                o.reverse();
            }
            let cone = Cone::new(3, o.iter().map(|&i| gens[i].clone()).collect()).unwrap();
            assert_eq!(normalized(cone.extremal_rays()), expected);
        }
    }
}

