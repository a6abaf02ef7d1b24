mod common;

use common::naive::{mismatches, Naive};
use planar_curvature::embedding::{isomorphic, Mode};
use planar_curvature::generators::{platonic, PlatonicSolid};
use planar_curvature::io::{parse, serialize};

#[test]
fn library_agrees_with_brute_force_on_corpus() {
    for (name, t) in common::corpus() {
        let bad = mismatches(&t);
        assert!(bad.is_empty(), "{name}: {bad:?}");
    }
}

#[test]
fn brute_force_face_count_of_cube() {
    let naive = Naive::new(&platonic(PlatonicSolid::Cube).unwrap());
    assert_eq!(naive.faces.len(), 6);
    assert!(naive.faces.iter().all(|f| f.len() == 4));
}

#[test]
fn windows_of_spheres_agree_with_brute_force() {
    for (name, t) in common::sphere_corpus().into_iter().take(12) {
        for f in t.faces().take(3) {
            let w = common::window(&t, f);
            let bad = mismatches(&w);
            assert!(bad.is_empty(), "{name} opened at {f}: {bad:?}");
        }
    }
}

#[test]
fn planar_round_trip_on_corpus() {
    for (name, t) in common::corpus() {
        let text = serialize(&t);
        let back = parse(&text).unwrap();
        assert_eq!(serialize(&back), text, "{name}");
        assert_eq!(back.rotation_lists(), t.rotation_lists(), "{name}");
        assert_eq!(back.outer_hint(), t.outer_hint(), "{name}");
        if t.mode() == Mode::Sphere {
            assert!(isomorphic(&t, &back).unwrap(), "{name}");
        }
    }
}
