mod common;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use toricrep::homology::{
    boundary_matrix, rank_exact, rank_mod_p, reduced_betti_with, RankMethod, SparseMatrix,
    RANK_PRIME,
};
use toricrep::{reduced_betti, SimplicialComplex};

use common::{oracle_reduced_betti, random_facets, rational_rank};

#[test]
fn betti_numbers_match_rational_oracle() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..150 {
        let (n, facets) = random_facets(&mut rng, 10);
        let k = SimplicialComplex::new(n, facets.clone()).unwrap();
        let expect = oracle_reduced_betti(n, &facets);
        assert_eq!(reduced_betti(&k).values, expect, "facets {facets:?}");
        assert_eq!(reduced_betti_with(&k, RankMethod::Exact).values, expect);
    }
}

#[test]
fn boundary_squares_to_zero() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let (n, facets) = random_facets(&mut rng, 9);
        let k = SimplicialComplex::new(n, facets).unwrap();
        for d in 0..k.dim().max(0) as usize {
            let prod = boundary_matrix(&k, d)
                .matrix
                .mul_dense(&boundary_matrix(&k, d + 1).matrix);
            assert!(prod.iter().flatten().all(|&x| x == 0));
        }
    }
}

#[test]
fn modular_and_exact_ranks_agree() {
    let mut rng = StdRng::seed_from_u64(13);
    let mut checked = 0;
    while checked < 100 {
        let (n, facets) = random_facets(&mut rng, 10);
        let k = SimplicialComplex::new(n, facets).unwrap();
        for d in 0..=k.dim().max(0) as usize {
            let m = boundary_matrix(&k, d).matrix;
            let exact = rank_exact(&m);
            assert_eq!(rank_mod_p(&m, RANK_PRIME), exact);
            assert_eq!(rational_rank(&m.to_dense()), exact);
            checked += 1;
        }
    }
}

#[test]
fn dense_integer_matrices_rank() {
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..100 {
        let rows = rng.gen_range(1..7);
        let cols = rng.gen_range(1..7);
        let dense: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        let m = SparseMatrix::from_dense(&dense);
        let expect = rational_rank(&dense);
        assert_eq!(rank_exact(&m), expect, "{dense:?}");
        assert_eq!(rank_mod_p(&m, RANK_PRIME), expect, "{dense:?}");
    }
}

#[test]
fn betti_invariant_under_relabeling() {
    let mut rng = StdRng::seed_from_u64(19);
    // the seven-vertex torus
    let facets: Vec<Vec<u32>> = (0..7u32)
        .flat_map(|i| {
            [
                vec![i, (i + 1) % 7, (i + 3) % 7],
                vec![i, (i + 2) % 7, (i + 3) % 7],
            ]
        })
        .collect();
    let torus = SimplicialComplex::new(7, facets).unwrap();
    let base = reduced_betti(&torus);
    assert_eq!(base.values, vec![0, 0, 2, 1]);
    for _ in 0..50 {
        let mut perm: Vec<u32> = (0..7).collect();
        perm.shuffle(&mut rng);
        assert_eq!(reduced_betti(&torus.relabel(&perm).unwrap()), base);
    }
    for _ in 0..50 {
        let (n, facets) = random_facets(&mut rng, 12);
        let k = SimplicialComplex::new(n, facets).unwrap();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        perm.shuffle(&mut rng);
        assert_eq!(reduced_betti(&k.relabel(&perm).unwrap()), reduced_betti(&k));
    }
}

#[test]
fn euler_characteristic_matches_f_vector() {
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..100 {
        let (n, facets) = random_facets(&mut rng, 10);
        let k = SimplicialComplex::new(n, facets).unwrap();
        assert_eq!(
            reduced_betti(&k).euler_characteristic(),
            k.f_vector().reduced_euler_characteristic()
        );
    }
}
