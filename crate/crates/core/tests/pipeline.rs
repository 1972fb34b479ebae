//! Cross-module integration: the full pipeline from generated points to
//! verified certificates and documents, plus adversarial certificate
//! tampering.

use radon_link::document::{parse_pointfile, ResultDocument};
use radon_link::generator::{gen_moment_curve_ints, gen_random};
use radon_link::linalg::{rat, Mat, Rational};
use radon_link::oracle::{enumerate, EnumOptions};
use radon_link::sweep::{find_partition, Parity};
use radon_link::verify::{linked, verify_certificate, Certificate};
use radon_link::Error;

#[test]
fn every_dimension_round_trips_through_find_and_verify() {
    for n in 1..=6 {
        let c = gen_random(n, 42 + n as u64, 30).unwrap();
        let r = find_partition(&c).unwrap();
        assert!(verify_certificate(&c, &r).unwrap(), "n={n}");

        let doc = ResultDocument::new(&c, &r, true);
        let parsed = ResultDocument::from_json(&doc.to_json()).unwrap();
        assert!(verify_certificate(&c, &parsed.to_partition_result()).unwrap(), "n={n}");
    }
}

#[test]
fn odd_outputs_pass_the_independent_verifier() {
    for (n, seed) in [(1usize, 10u64), (3, 11), (5, 12)] {
        let c = gen_random(n, seed, 40).unwrap();
        let r = find_partition(&c).unwrap();
        assert!(linked(&c, &r.first, &r.second).unwrap(), "n={n}");
    }
}

#[test]
fn moment_curve_fixture_in_three_dimensions() {
    let c = gen_moment_curve_ints(3, 1..=6).unwrap();
    let r = find_partition(&c).unwrap();
    assert_eq!(r.first, vec![1, 3, 5]);
    assert_eq!(r.second, vec![2, 4, 6]);
    assert!(verify_certificate(&c, &r).unwrap());
    // One piercing in each direction: the linked pair.
    assert_eq!(
        radon_link::verify::piercing_counts(&c, &[1, 3, 5], &[2, 4, 6]).unwrap(),
        (1, 1)
    );
}

#[test]
fn moment_curve_fixture_in_four_dimensions() {
    let c = gen_moment_curve_ints(4, 1..=7).unwrap();
    let r = find_partition(&c).unwrap();
    assert_eq!(r.parity, Parity::Even);
    assert_eq!((r.first.clone(), r.second.clone()), (vec![2, 4, 6], vec![3, 5, 7]));
    assert!(verify_certificate(&c, &r).unwrap());

    let report = enumerate(&c, &EnumOptions::default()).unwrap();
    assert_eq!(report.count, 7);
    assert_eq!(report.parity, Parity::Odd);
    assert!(report.contains(&r.first, &r.second));
    // 70 unordered candidate pairs of disjoint triples among 7 points.
    let candidates = 35 * 4 / 2;
    assert_eq!(candidates, 70);
    assert!(report.count <= candidates);
}

#[test]
fn sweep_output_of_mapped_input_stays_in_the_oracle_set() {
    let c = gen_moment_curve_ints(3, 1..=6).unwrap();
    let base = enumerate(&c, &EnumOptions::default()).unwrap();
    let map = Mat::from_rows(vec![
        vec![rat(2), rat(1), rat(0)],
        vec![rat(0), rat(1), rat(-1)],
        vec![rat(1), rat(0), rat(3)],
    ])
    .unwrap();
    let shift = vec![rat(-7), rat(2), rat(5)];
    let mapped = c.apply_affine(&map, &shift).unwrap();
    let r = find_partition(&mapped).unwrap();
    assert!(base.contains(&r.first, &r.second));
    assert_eq!(
        enumerate(&mapped, &EnumOptions::default()).unwrap().pairs,
        base.pairs
    );
}

#[test]
fn zeroed_coefficient_fails_verification() {
    let c = gen_moment_curve_ints(2, 0..=4).unwrap();
    let mut r = find_partition(&c).unwrap();
    match &mut r.certificate {
        Certificate::InteriorIntersection { first, .. } => {
            first.coeffs[0] = rat(0);
        }
        _ => unreachable!("even case emits interior-intersection"),
    }
    assert_eq!(verify_certificate(&c, &r).unwrap(), false);
}

#[test]
fn forged_common_point_fails_verification() {
    let c = gen_moment_curve_ints(2, 0..=4).unwrap();
    let mut r = find_partition(&c).unwrap();
    match &mut r.certificate {
        Certificate::InteriorIntersection { point, .. } => {
            point[0] += rat(1);
        }
        _ => unreachable!(),
    }
    assert_eq!(verify_certificate(&c, &r).unwrap(), false);
}

#[test]
fn swapped_subsets_still_verify_for_the_symmetric_kind() {
    let c = gen_moment_curve_ints(2, 0..=4).unwrap();
    let mut r = find_partition(&c).unwrap();
    std::mem::swap(&mut r.first, &mut r.second);
    assert!(verify_certificate(&c, &r).unwrap());
}

#[test]
fn linking_roles_are_checked_structurally() {
    let c = gen_moment_curve_ints(3, 1..=6).unwrap();
    let mut r = find_partition(&c).unwrap();
    // Swapping the outer pair is fine: roles live inside the certificate.
    std::mem::swap(&mut r.first, &mut r.second);
    assert!(verify_certificate(&c, &r).unwrap());
    // Swapping the roles without swapping the witnesses is malformed.
    match &mut r.certificate {
        Certificate::Linking { p1, n2, .. } => std::mem::swap(p1, n2),
        _ => unreachable!(),
    }
    assert!(matches!(verify_certificate(&c, &r), Err(Error::Document(_))));
}

#[test]
fn foreign_subsets_are_rejected_as_malformed() {
    let c = gen_moment_curve_ints(2, 0..=4).unwrap();
    let mut r = find_partition(&c).unwrap();
    r.first = vec![1, 2];
    r.second = vec![3, 4];
    assert!(matches!(verify_certificate(&c, &r), Err(Error::Document(_))));
}

#[test]
fn certificates_survive_json_and_stay_exact() {
    // Fractional coordinates exercise the p/q serialization.
    let text = "2 5\n0 0\n1/2 1/4\n2 4\n7/2 49/4\n5 25\n";
    let c = parse_pointfile(text).unwrap();
    let r = find_partition(&c).unwrap();
    let doc = ResultDocument::new(&c, &r, true);
    let back = ResultDocument::from_json(&doc.to_json()).unwrap();
    assert_eq!(back.to_partition_result(), r);
    assert_eq!(doc.to_json(), back.to_json());
}

// The solution space claims behind the sweep: the system has a plane of
// solutions, and pinning any single coordinate to zero cuts it to a
// line.
#[test]
fn augmenting_the_system_with_one_vanishing_coordinate_drops_nullity_to_one() {
    for n in 1..=3usize {
        let c = gen_random(n, 77 + n as u64, 20).unwrap();
        let sys = c.build_system();
        assert_eq!(sys.null_space_basis().len(), 2);
        let m = c.point_count();
        for i in 0..m {
            let mut rows: Vec<Vec<Rational>> =
                (0..sys.rows()).map(|r| sys.row(r).to_vec()).collect();
            let mut unit = vec![rat(0); m];
            unit[i] = rat(1);
            rows.push(unit);
            let augmented = Mat::from_rows(rows).unwrap();
            assert_eq!(augmented.null_space_basis().len(), 1, "n={n}, i={i}");
        }
    }
}

#[test]
fn enumeration_reports_are_deterministic() {
    let c = gen_random(3, 5, 30).unwrap();
    let a = enumerate(&c, &EnumOptions::default()).unwrap();
    let b = enumerate(&c, &EnumOptions::default()).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.parity, if a.count % 2 == 0 { Parity::Even } else { Parity::Odd });
    for (x, y) in &a.pairs {
        assert!(x <= y);
        assert!(x.windows(2).all(|w| w[0] < w[1]));
        assert!(y.windows(2).all(|w| w[0] < w[1]));
    }
}
