use toricrep::coxeter::{
    build_coxeter_complex, coefficient_orbits, f_vector_by_parabolic_indices,
    h_vector_by_parabolic_indices, lambda_matrix, weyl_vertex_action,
};
use toricrep::group::{euler_characteristic, orbit_decomposition, toric_homology, RealToricSpace};
use toricrep::poset::{coweight_to_subset, type_a_subset_model};
use toricrep::tableaux::{decompose_type_a, decompose_type_b};
use toricrep::RootSystem;

fn space(label: &str) -> (RealToricSpace, toricrep::VertexGroup) {
    let rs: RootSystem = label.parse().unwrap();
    let cx = build_coxeter_complex(&rs).unwrap();
    let g = weyl_vertex_action(&cx).unwrap();
    (
        RealToricSpace::new(cx.complex.clone(), lambda_matrix(&cx)).unwrap(),
        g,
    )
}

#[test]
fn orbit_shortcut_agrees_with_full_sum() {
    for label in ["G2", "B3", "C3", "A4", "F4"] {
        let (x, g) = space(label);
        let with = toric_homology(&x, Some(&g)).unwrap();
        assert_eq!(with, toric_homology(&x, None).unwrap(), "{label}");
        assert_eq!(
            with.euler_characteristic(),
            euler_characteristic(&x),
            "{label}"
        );
    }
}

#[test]
fn exceptional_betti_numbers() {
    let (g2, g) = space("G2");
    assert_eq!(toric_homology(&g2, Some(&g)).unwrap().values, vec![1, 9, 0]);
    let (f4, g) = space("F4");
    assert_eq!(
        toric_homology(&f4, Some(&g)).unwrap().values,
        vec![1, 57, 264, 0, 0]
    );
}

#[test]
fn type_a_homology_matches_decomposition() {
    for n in 1..=5u32 {
        let (x, g) = space(&format!("A{n}"));
        let b = toric_homology(&x, Some(&g)).unwrap();
        for r in 0..=n {
            let expect = if 2 * r <= n + 1 {
                decompose_type_a(n, r).unwrap().total_dimension
            } else {
                0
            };
            assert_eq!(b.get(r as isize) as u128, expect, "A{n} degree {r}");
        }
    }
}

#[test]
fn type_b_homology_matches_decomposition() {
    for n in 2..=4u32 {
        let (x, g) = space(&format!("B{n}"));
        let b = toric_homology(&x, Some(&g)).unwrap();
        for k in 0..=n {
            assert_eq!(
                b.get(k as isize) as u128,
                decompose_type_b(n, k).unwrap().total_dimension,
                "B{n} degree {k}"
            );
        }
    }
    let (b3, g) = space("B3");
    assert_eq!(
        toric_homology(&b3, Some(&g)).unwrap().values,
        vec![1, 12, 11, 0]
    );
}

#[test]
fn orbit_sizes() {
    let sizes = |label: &str| -> Vec<usize> {
        coefficient_orbits(&label.parse().unwrap())
            .unwrap()
            .iter()
            .map(|o| o.size)
            .collect()
    };
    assert_eq!(sizes("G2"), vec![3]);
    assert_eq!(sizes("F4"), vec![12, 3]);
    assert_eq!(sizes("E6"), vec![36, 27]);
    assert_eq!(sizes("E7"), vec![63, 63, 1]);
    assert_eq!(sizes("E8"), vec![135, 120]);
    let (e6, g) = space("E6");
    assert_eq!(
        orbit_decomposition(&g, e6.lambda())
            .unwrap()
            .nonzero_sizes(),
        vec![36, 27]
    );
    // a single row is a simple root mod 2, so it lies in the root orbit
    for i in 0..6 {
        assert_eq!(g.orbit_of(e6.lambda().row(i)).len(), 36);
    }
    let rows = |label: &str| -> Vec<(Vec<usize>, usize)> {
        coefficient_orbits(&label.parse().unwrap())
            .unwrap()
            .into_iter()
            .map(|o| (o.representative_rows, o.size))
            .collect()
    };
    assert_eq!(
        rows("E7"),
        vec![(vec![0], 63), (vec![0, 1], 63), (vec![1, 4, 6], 1)]
    );
    assert_eq!(rows("F4"), vec![(vec![2], 12), (vec![0], 3)]);
}

#[test]
fn h_vectors_and_euler_characteristics() {
    let cases: [(&str, &[i128], i128); 5] = [
        ("G2", &[1, 10, 1], -8),
        ("F4", &[1, 236, 678, 236, 1], 208),
        ("E6", &[1, 1272, 12183, 24928, 12183, 1272, 1], -3104),
        (
            "E7",
            &[1, 17635, 309969, 1123915, 1123915, 309969, 17635, 1],
            0,
        ),
        (
            "E8",
            &[
                1, 881752, 28336348, 169022824, 300247750, 169022824, 28336348, 881752, 1,
            ],
            17111296,
        ),
    ];
    for (label, h, chi) in cases {
        let rs: RootSystem = label.parse().unwrap();
        let hv = h_vector_by_parabolic_indices(&rs);
        assert_eq!(hv, h, "{label}");
        let alt: i128 = hv
            .iter()
            .enumerate()
            .map(|(i, &x)| if i % 2 == 0 { x } else { -x })
            .sum();
        assert_eq!(alt, chi, "{label}");
    }
    for label in ["G2", "F4", "E6"] {
        let rs: RootSystem = label.parse().unwrap();
        let cx = build_coxeter_complex(&rs).unwrap();
        assert_eq!(
            cx.complex.f_vector(),
            f_vector_by_parabolic_indices(&rs),
            "{label}"
        );
    }
}

#[test]
fn type_a_complex_is_the_subset_model() {
    for n in 1..=4usize {
        let cx = build_coxeter_complex(&format!("A{n}").parse().unwrap()).unwrap();
        let model = type_a_subset_model(n).unwrap();
        let relabel: Vec<u32> = cx
            .ray_coords
            .iter()
            .map(|c| {
                model
                    .vertex_of(coweight_to_subset(c))
                    .expect("proper subset")
            })
            .collect();
        let mut sorted = relabel.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), relabel.len(), "bijective on vertices");
        assert_eq!(cx.complex.relabel(&relabel).unwrap(), model.complex, "A{n}");
    }
}

#[test]
fn weyl_group_orders_by_closure() {
    for label in ["G2", "B3", "A3", "D4"] {
        let rs: RootSystem = label.parse().unwrap();
        let cx = build_coxeter_complex(&rs).unwrap();
        assert_eq!(
            weyl_vertex_action(&cx).unwrap().order(1 << 20).unwrap(),
            rs.weyl_order(),
            "{label}"
        );
    }
}
