mod common;

use toricrep::nestohedra::{
    adjacent_transpositions, is_nested, nested_set_complex, symmetric_equivariance,
    top_descent_set, top_homology_check, toric_space_of, BuildingSet,
};
use toricrep::poset::{boolean_rank_selected, type_a_subset_model};
use toricrep::{reduced_betti, Gf2Vector};

use common::permutations_with_descent_set;

/// The characteristic row vector `x^T Λ` for row set `rows`: a vertex
/// (a member of the building set) gets 1 iff it meets `I` in an odd number of
/// elements, where `I` is `rows` padded with the last ground element to even
/// size.
fn odd_intersection_vector(vertices: &[u32], n: usize, rows: u32) -> Gf2Vector {
    let i_mask = if rows.count_ones().is_multiple_of(2) {
        rows
    } else {
        rows | 1 << n
    };
    Gf2Vector::from_support(
        vertices.len(),
        (0..vertices.len()).filter(|&v| (vertices[v] & i_mask).count_ones() % 2 == 1),
    )
}

fn factorial(m: usize) -> usize {
    (1..=m).product()
}

#[test]
fn complete_building_set_gives_permutohedron_sphere() {
    for m in 2..=5 {
        let nsc = nested_set_complex(&BuildingSet::complete(m).unwrap()).unwrap();
        assert_eq!(nsc.complex.facets().len(), factorial(m));
        assert_eq!(nsc.vertices.len(), (1 << m) - 2);
        let b = reduced_betti(&nsc.complex);
        for (d, v) in b.iter() {
            assert_eq!(v, u64::from(d == m as isize - 2), "m = {m} degree {d}");
        }
    }
}

#[test]
fn facets_are_nested_and_maximal() {
    for (n, k) in [(3, 1), (3, 2), (5, 1), (5, 3)] {
        let b = BuildingSet::family_b(n, k).unwrap();
        let nsc = nested_set_complex(&b).unwrap();
        for facet in nsc.complex.facets() {
            let masks: Vec<u32> = facet.iter().map(|&v| nsc.vertices[v as usize]).collect();
            assert!(is_nested(&b, &masks));
            // adding any other vertex breaks nestedness
            for (v, &m) in nsc.vertices.iter().enumerate() {
                if !facet.contains(&(v as u32)) {
                    let mut bigger = masks.clone();
                    bigger.push(m);
                    assert!(!is_nested(&b, &bigger));
                }
            }
        }
        assert!(symmetric_equivariance(&b, &adjacent_transpositions(n + 1)).unwrap());
    }
}

#[test]
fn top_degree_matches_descent_set_count() {
    for (n, k) in [(3, 1), (3, 2), (5, 1), (5, 2)] {
        let report = top_homology_check(n, k).unwrap();
        let q = top_descent_set(n, k);
        assert_eq!(
            report.top_dimension,
            permutations_with_descent_set(n + 1, &q),
            "({n},{k})"
        );
        assert_eq!(report.expected_top_dimension, report.top_dimension as u128);
        assert!(report.vanishing_above && report.holds(), "({n},{k})");
    }
    assert!(top_homology_check(4, 1).is_err());
}

#[test]
fn proper_subcomplexes_have_no_homology_at_or_above_top() {
    let n = 5;
    for k in 1..=3 {
        let b = BuildingSet::family_b(n, k).unwrap();
        let nsc = nested_set_complex(&b).unwrap();
        let d = n.div_ceil(2) + k / 2;
        let all = (1u32 << n) - 1;
        for rows in 1..all {
            let s = odd_intersection_vector(&nsc.vertices, n, rows);
            let ks = nsc.complex.full_subcomplex_on(&s);
            let betti = reduced_betti(&ks.complex);
            for (j, v) in betti.iter() {
                assert!(
                    j < d as isize - 1 || v == 0,
                    "k = {k}, rows {rows:b}, degree {j}"
                );
            }
        }
    }
}

#[test]
fn proper_subcomplexes_can_exceed_top_dimension() {
    // I = {0, 5}: the chain {0} < {0,1} < .. < {0,..,4} is nested and
    // every member meets I once
    let b = BuildingSet::family_b(5, 1).unwrap();
    let nsc = nested_set_complex(&b).unwrap();
    let s = odd_intersection_vector(&nsc.vertices, 5, 0b1);
    assert_eq!(nsc.complex.full_subcomplex_on(&s).complex.dim(), 4);
}

#[test]
fn full_odd_subcomplex_matches_rank_selected_boolean_complex() {
    for (n, k) in [(3, 1), (3, 2), (5, 1), (5, 2)] {
        let b = BuildingSet::family_b(n, k).unwrap();
        let (nsc, space) = toric_space_of(&b).unwrap();
        let all = (1u32 << n) - 1;
        let s = odd_intersection_vector(&nsc.vertices, n, all);
        // the same vector as the sum of all rows of Λ
        let mut sum = Gf2Vector::zeros(nsc.vertices.len());
        for i in 0..n {
            sum.xor_assign(space.lambda().row(i));
        }
        assert_eq!(s, sum);
        let ks = nsc.complex.full_subcomplex_on(&s);
        let ground: Vec<u32> = (1..=n as u32 + 1).collect();
        let ranks: Vec<usize> = top_descent_set(n, k).iter().map(|&x| x as usize).collect();
        let poset = boolean_rank_selected(&ground, &ranks).unwrap();
        assert_eq!(
            reduced_betti(&ks.complex),
            reduced_betti(&poset.complex),
            "({n},{k})"
        );
    }
}

#[test]
fn family_one_is_the_type_a_subset_model() {
    for n in 1..=5 {
        let nsc = nested_set_complex(&BuildingSet::family_b(n, 1).unwrap()).unwrap();
        let model = type_a_subset_model(n).unwrap();
        let relabel: Vec<u32> = nsc
            .vertices
            .iter()
            .map(|&m| model.vertex_of(m).unwrap())
            .collect();
        assert_eq!(
            nsc.complex.relabel(&relabel).unwrap(),
            model.complex,
            "n = {n}"
        );
    }
}
