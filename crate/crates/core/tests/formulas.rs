use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use quadform::algebra::{Coeff, CoeffRing};
use quadform::formula::{
    construct_classical, construct_hurwitz_radon, from_json, orthonormal_vectors, point, pointwise_defect,
    restrict_formula, to_json, ClassicalKind, SosFormula,
};
use quadform::FormulaError;

fn random_tensor(rng: &mut StdRng, ring: &CoeffRing, p: i64, r: usize, s: usize, n: usize) -> SosFormula {
    let tensor = (0..n)
        .map(|_| (0..r).map(|_| (0..s).map(|_| ring.from_i64(rng.gen_range(0..p))).collect()).collect())
        .collect();
    SosFormula::new(ring.clone(), r, s, n, tensor).unwrap()
}

#[test]
fn expansion_and_hurwitz_agree_on_random_tensors() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut verified = 0;
    for (p, trials) in [(3u64, 100), (5, 100)] {
        let ring = CoeffRing::prime_field(p).unwrap();
        for _ in 0..trials {
            let r = rng.gen_range(1..=3);
            let s = rng.gen_range(1..=3);
            let n = rng.gen_range(1..=3);
            let f = random_tensor(&mut rng, &ring, p as i64, r, s, n);
            let by_expansion = f.verify_by_expansion();
            assert_eq!(by_expansion, f.verify_by_hurwitz().unwrap(), "{}", to_json(&f));
            verified += usize::from(by_expansion);
        }
    }
    // small shapes hit genuine formulas often enough to exercise both outcomes
    assert!(verified > 0 && verified < 200);
}

#[test]
fn constructed_formulas_agree() {
    let mut all: Vec<SosFormula> =
        [ClassicalKind::Two, ClassicalKind::Four, ClassicalKind::Eight, ClassicalKind::Trivial(3, 2)]
            .into_iter()
            .map(|k| construct_classical(k).unwrap())
            .collect();
    all.extend([1, 2, 3, 4, 6, 8, 12, 16, 32].map(construct_hurwitz_radon));
    for f in &all {
        assert!(f.verify_by_expansion());
        assert!(f.verify_by_hurwitz().unwrap());
    }
}

#[test]
fn expansion_defect_examples() {
    let f = SosFormula::from_i64(1, 1, 1, &[vec![vec![2]]]).unwrap();
    assert_eq!(f.expansion_defect().to_text(&f.names()), "3*x1^2*y1^2");
    let zero = SosFormula::from_i64(1, 1, 1, &[vec![vec![0]]]).unwrap();
    assert!(!zero.verify_by_expansion());
    assert!(!zero.verify_by_hurwitz().unwrap());
    let gauss = construct_classical(ClassicalKind::Two).unwrap();
    assert!(gauss.expansion_defect().is_zero());
}

#[test]
fn pointwise_checks_match_symbolic_ones() {
    let mut rng = StdRng::seed_from_u64(11);
    let ring = CoeffRing::prime_field(7).unwrap();
    let euler = construct_classical(ClassicalKind::Four).unwrap().change_ring(&ring).unwrap();
    let broken = SosFormula::from_i64(2, 2, 2, &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]])
        .unwrap()
        .change_ring(&ring)
        .unwrap();
    assert!(!broken.verify_by_expansion());
    let mut saw_nonzero = false;
    for _ in 0..50 {
        let pick =
            |rng: &mut StdRng, k: usize| -> Vec<Coeff> { (0..k).map(|_| ring.from_i64(rng.gen_range(0..7))).collect() };
        let (x, y) = (pick(&mut rng, 4), pick(&mut rng, 4));
        assert!(ring.is_zero(&pointwise_defect(&euler, &x, &y)));
        let (x2, y2) = (x[..2].to_vec(), y[..2].to_vec());
        let d = pointwise_defect(&broken, &x2, &y2);
        // the symbolic defect evaluated at the point agrees with direct evaluation
        let sym = broken.expansion_defect().evaluate(&point(&x2, &y2));
        assert_eq!(ring.neg(&d), sym);
        saw_nonzero |= !ring.is_zero(&d);
    }
    assert!(saw_nonzero);
}

#[test]
fn hurwitz_round_trip() {
    for f in [construct_hurwitz_radon(8), construct_classical(ClassicalKind::Trivial(2, 3)).unwrap()] {
        let back = f.to_hurwitz().to_formula().unwrap();
        assert_eq!(back, f);
        assert!(f.to_hurwitz().verify().unwrap());
    }
}

#[test]
fn orthonormal_pairs_and_restrictions() {
    let hr = construct_hurwitz_radon(16);
    for (r, s) in [(2, 16), (9, 16), (5, 11)] {
        let g = restrict_formula(&hr, r, s).unwrap();
        assert!(g.verify_by_expansion());
        assert!(orthonormal_vectors(&g).unwrap().ok);
    }
    assert!(matches!(orthonormal_vectors(&construct_hurwitz_radon(1)), Err(FormulaError::TooFewRows(1))));
    assert!(restrict_formula(&hr, 10, 16).is_err());
}

#[test]
fn json_round_trip_of_constructed_formulas() {
    for n in [1, 2, 4, 8, 16] {
        let f = construct_hurwitz_radon(n);
        assert_eq!(from_json(&to_json(&f)).unwrap(), f);
    }
}
