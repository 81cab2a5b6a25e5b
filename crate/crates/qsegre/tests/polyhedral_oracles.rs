//! Exact-arithmetic agreement between the simplex-backed cone operations
//! and the Carathéodory subset search.

use qsegre::RationalCone;
use qsegre_testkit::{
    cone_contains_bruteforce, random_simplicial_generators, strongly_convex_bruteforce,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn membership_agrees_with_caratheodory_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in [2usize, 3] {
        for _ in 0..25 {
            let generators = random_simplicial_generators(&mut rng, n, 5);
            let cone = RationalCone::new(n, generators.clone()).unwrap();
            for _ in 0..8 {
                let v: Vec<i64> = (0..n).map(|_| rng.random_range(-6..=6)).collect();
                assert_eq!(
                    cone.contains(&v).unwrap(),
                    cone_contains_bruteforce(&generators, &v),
                    "disagreement for cone {generators:?} and point {v:?}"
                );
            }
        }
    }
}

#[test]
fn membership_agrees_on_wide_cones() {
    // more generators than dimensions, including redundant ones
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [2usize, 3] {
        for _ in 0..15 {
            let extra = rng.random_range(1..=3);
            let mut generators = random_simplicial_generators(&mut rng, n, 5);
            for _ in 0..extra {
                let g: Vec<i64> = (0..n).map(|_| rng.random_range(-5..=5)).collect();
                if g.iter().any(|&x| x != 0) {
                    generators.push(g);
                }
            }
            let cone = RationalCone::new(n, generators.clone()).unwrap();
            for _ in 0..8 {
                let v: Vec<i64> = (0..n).map(|_| rng.random_range(-6..=6)).collect();
                assert_eq!(
                    cone.contains(&v).unwrap(),
                    cone_contains_bruteforce(&generators, &v)
                );
            }
        }
    }
}

#[test]
fn strong_convexity_agrees_with_bruteforce() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for n in [2usize, 3] {
        for _ in 0..25 {
            let mut generators = random_simplicial_generators(&mut rng, n, 5);
            // sometimes widen the cone so both verdicts occur
            if rng.random_bool(0.5) {
                let flipped: Vec<i64> = generators[0].iter().map(|&x| -x).collect();
                generators.push(flipped);
            }
            let cone = RationalCone::new(n, generators.clone()).unwrap();
            assert_eq!(
                cone.is_strongly_convex(),
                strongly_convex_bruteforce(&generators),
                "disagreement for {generators:?}"
            );
        }
    }
}

#[test]
fn dual_of_dual_reproduces_random_simplicial_cones() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in [2usize, 3] {
        for _ in 0..20 {
            let generators = random_simplicial_generators(&mut rng, n, 5);
            let cone = RationalCone::new(n, generators).unwrap();
            let double_dual = cone.dual().unwrap().dual().unwrap();
            assert_eq!(double_dual, cone);
        }
    }
}
