mod common;

use common::{configurations, datum, global_stalk};
use oscillo_core::kgroup::{compute_s1, compute_s2, reconstruct_h_diagonal};
use oscillo_core::lefschetz::oscillator_stalk_char;
use oscillo_core::root_datum::{admissible_types, build_root_datum};
use oscillo_core::{Coweight, HalfLaurent};

#[test]
fn coroot_identities_rank_three_and_f4() {
    let one_minus_q = HalfLaurent::from_terms([(0, 1), (2, -1)]);
    let two = HalfLaurent::monomial(0, 2);
    let mut types = admissible_types(3);
    types.push("F4".parse().unwrap());
    for t in types {
        let d = build_root_datum(t);
        for theta in d.positive_coroots() {
            assert_eq!(compute_s1(&d, theta).unwrap().poly, one_minus_q, "{t} {theta}");
            assert_eq!(compute_s2(&d, theta).unwrap().poly, two, "{t} {theta}");
            assert!(reconstruct_h_diagonal(&d, theta).unwrap().is_standard(), "{t} {theta}");
        }
    }
}

#[test]
fn g2_highest_coroot() {
    let d = datum("G2");
    let highest = Coweight::new(vec![2, 3]);
    assert!(d.is_coroot(&highest));
    assert_eq!(compute_s2(&d, &highest).unwrap().poly, HalfLaurent::monomial(0, 2));
}

#[test]
fn zero_theta_rejected() {
    let d = datum("A2");
    assert!(compute_s1(&d, &Coweight::zero(2)).is_err());
    assert!(compute_s2(&d, &Coweight::zero(2)).is_err());
    assert!(compute_s1(&d, &Coweight::new(vec![1, -1])).is_err());
}

#[test]
fn factorization_rank_three() {
    for t in ["A3", "B3", "C3"] {
        let d = datum(t);
        for thetas in configurations(3, 3) {
            let labelled: Vec<(Coweight, String)> =
                thetas.iter().enumerate().map(|(i, c)| (c.clone(), format!("p{i}"))).collect();
            assert_eq!(oscillator_stalk_char(&d, &labelled).unwrap(), global_stalk(&d, &thetas), "{t} {thetas:?}");
        }
    }
}

#[test]
fn a2_two_point_example() {
    // alpha_1 at x, alpha_2 at y: only {alpha_1, alpha_2} contributes, split
    // across the two points, so the stalk is V (x) V in length 2.
    let d = datum("A2");
    let thetas = vec![Coweight::new(vec![1, 0]), Coweight::new(vec![0, 1])];
    let s = global_stalk(&d, &thetas);
    let v = HalfLaurent::standard();
    assert_eq!(s.by_length().len(), 1);
    assert_eq!(s.by_length()[&2], &v * &v);
}
