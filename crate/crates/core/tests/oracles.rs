//! Independent checks against whole-group enumeration.
//!
//! The oracle builds every element of W as a rational matrix from the
//! simple reflections, applies it to ω_i and takes the closest pair of
//! distinct images. It shares only the realization with the library.

use std::collections::BTreeSet;

use coxangle::{
    angular_distance, opposition, realize, Angle, CoxeterDiagram, Matrix, Permutation, Vector, Q,
};

fn whole_group(d: &CoxeterDiagram) -> Vec<Matrix> {
    let r = realize(d).unwrap();
    let gens: Vec<Matrix> = d
        .nodes()
        .iter()
        .map(|&i| r.reflection_matrix(i).unwrap())
        .collect();
    let identity = Matrix::identity(r.ambient_dim());
    let mut seen = BTreeSet::from([identity.rows()]);
    let mut frontier = vec![identity.clone()];
    let mut all = vec![identity];
    while let Some(g) = frontier.pop() {
        for s in &gens {
            let h = s * &g;
            if seen.insert(h.rows()) {
                all.push(h.clone());
                frontier.push(h);
            }
        }
    }
    all
}

fn brute_force_angle(d: &CoxeterDiagram, i: u32, group: &[Matrix]) -> Angle {
    let r = realize(d).unwrap();
    let omega = r.fundamental_weight(i).unwrap().clone();
    let orbit: BTreeSet<Vector> = group.iter().map(|g| g.apply(&omega)).collect();
    let orbit: Vec<Vector> = orbit.into_iter().collect();
    let norm = omega.norm_squared();
    let mut best: Option<Q> = None;
    for (a, x) in orbit.iter().enumerate() {
        for y in &orbit[a + 1..] {
            let c = x.dot(y) / &norm;
            if best.as_ref().is_none_or(|b| c > *b) {
                best = Some(c);
            }
        }
    }
    Angle::from_cos(best.unwrap()).unwrap()
}

#[test]
fn angular_distance_matches_whole_group_enumeration() {
    for name in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "G2"] {
        let d = CoxeterDiagram::builtin(name).unwrap();
        let group = whole_group(&d);
        assert_eq!(
            num_bigint::BigUint::from(group.len()),
            coxangle::group_order(&d),
            "{name}"
        );
        for &i in d.nodes() {
            let expected = brute_force_angle(&d, i, &group);
            assert_eq!(
                angular_distance(&d, i).unwrap(),
                expected,
                "{name} node {i}"
            );
        }
    }
}

#[test]
fn opposition_matches_longest_element_of_whole_group() {
    for name in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "G2"] {
        let d = CoxeterDiagram::builtin(name).unwrap();
        let r = realize(&d).unwrap();
        // w0 is the unique element sending every simple root to a negative root
        let neg_simple: Vec<Vector> = d
            .nodes()
            .iter()
            .map(|&i| r.simple_root(i).unwrap().neg())
            .collect();
        let w0 = whole_group(&d)
            .into_iter()
            .find(|g| {
                d.nodes().iter().all(|&i| {
                    let image = g.apply(r.simple_root(i).unwrap());
                    neg_simple.contains(&image)
                })
            })
            .expect("w0 exists");
        let pairs = d.nodes().iter().map(|&i| {
            let image = w0.apply(r.simple_root(i).unwrap()).neg();
            let j = d
                .nodes()
                .iter()
                .copied()
                .find(|&j| *r.simple_root(j).unwrap() == image)
                .unwrap();
            (i, j)
        });
        let expected = Permutation::from_pairs(pairs).unwrap();
        assert_eq!(opposition(&d).unwrap(), expected, "{name}");
    }
}

#[test]
fn brute_force_oracle_sanity() {
    // a hand-checkable case: the hexagon of A2 weights
    let d = CoxeterDiagram::builtin("A2").unwrap();
    let group = whole_group(&d);
    assert_eq!(group.len(), 6);
    assert_eq!(
        brute_force_angle(&d, 1, &group),
        Angle::pi_fraction(2, 3).unwrap()
    );
}
