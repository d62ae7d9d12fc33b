mod common;

use oddhole::oracle::lemmas::{check_no_short_shortcut, check_pyramid_majors};
use oddhole::oracle::{
    all_shortest_odd_holes, brute_find_pyramids, brute_shortest_odd_hole, generate, optimal_great_pyramids, Family,
    InstanceSpec, Planted,
};
use oddhole::report::{Sidecar, Witness};
use oddhole::structure::{check_great_pyramid, is_jewelled};
use oddhole::{find_jewelled, locate_from_tuple, DetectorTag};

#[test]
fn planted_minima_match_the_oracle() {
    let mut specs = Vec::new();
    for ambient in 0..=3 {
        for (l1, l2, l3) in [(2, 2, 1), (3, 3, 2), (4, 2, 1), (3, 5, 2)] {
            specs.push(Family::PlantedPyramid { l1, l2, l3, ambient });
        }
        for p_len in 2..=5 {
            specs.push(Family::PlantedJewel { p_len, ambient });
        }
    }
    for (seed, family) in specs.into_iter().enumerate() {
        let inst = generate(&InstanceSpec::new(family, seed as u64)).unwrap();
        let oracle = brute_shortest_odd_hole(&inst.graph).unwrap();
        assert_eq!(oracle.length(), inst.expected_min, "{:?}", inst.spec);
        let side = Sidecar::from_instance(&inst);
        assert!(side.witness.unwrap().check(&inst.graph).is_ok());
    }
}

#[test]
fn jewels_are_found_by_the_jewel_detector() {
    for p_len in 2..=6 {
        let inst = generate(&InstanceSpec::new(Family::PlantedJewel { p_len, ambient: 0 }, 0)).unwrap();
        let d = find_jewelled(&inst.graph);
        assert_eq!(d.detector(), Some(DetectorTag::Jewel));
        assert_eq!(d.length(), inst.expected_min);
        assert!(all_shortest_odd_holes(&inst.graph).iter().any(|h| is_jewelled(&inst.graph, h)));
    }
}

#[test]
fn planted_pyramid_is_an_optimal_great_pyramid() {
    for (l1, l2, l3) in [(3, 3, 2), (4, 4, 1), (5, 3, 2), (4, 4, 3)] {
        let inst = generate(&InstanceSpec::new(Family::PlantedPyramid { l1, l2, l3, ambient: 0 }, 0)).unwrap();
        let g = &inst.graph;
        let best = inst.expected_min.unwrap();
        let optimal = optimal_great_pyramids(&brute_find_pyramids(g).unwrap(), best);
        assert!(!optimal.is_empty());
        for w in &optimal {
            assert_eq!(w.height(), l3);
            assert!(check_great_pyramid(g, w, best).is_ok());
            assert!(check_pyramid_majors(g, w).is_ok());
            for h in all_shortest_odd_holes(g) {
                assert!(check_no_short_shortcut(g, &h, w.height()).is_ok());
            }
        }
    }
}

#[test]
fn proof_tuple_survives_ambient_noise() {
    for seed in 0..40 {
        let family = Family::PlantedPyramid { l1: 5, l2: 5, l3: 2, ambient: 4 };
        let inst = generate(&InstanceSpec::new(family, seed)).unwrap();
        let Some(Planted::Pyramid { tuple, .. }) = &inst.planted else { unreachable!() };
        let hole = locate_from_tuple(&inst.graph, tuple).unwrap().expect("tuple rebuilds a hole");
        assert_eq!(Some(hole.len()), inst.expected_min);
        let w = Witness::Hole { hole: hole.vertices().to_vec() };
        assert!(w.check(&inst.graph).is_ok());
    }
}

#[test]
fn classic_graphs() {
    let petersen = common::petersen();
    assert_eq!(brute_shortest_odd_hole(&petersen).unwrap().length(), Some(5));
    assert_eq!(oddhole::find_5hole(&petersen).length(), Some(5));
}
