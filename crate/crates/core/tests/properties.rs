mod common;

use common::*;
use ketsim::gates::{apply_single, apply_two, hadamard, rotation, swap};
use ketsim::qft::{
    build_qft_circuit, dft_oracle, qft_direct, qft_product_form, run_circuit, GateApplication,
};
use ketsim::{Amplitude, BasisState, StateVector};
use proptest::prelude::*;

const TOL: f64 = 1e-12;

fn arb_state(max_width: usize) -> impl Strategy<Value = StateVector> {
    (1..=max_width).prop_flat_map(|w| {
        prop::collection::vec((0..(1u64 << w), -1.0f64..1.0, -1.0f64..1.0), 1..=4).prop_map(
            move |terms| {
                StateVector::from_terms(w, terms.into_iter().map(|(i, re, im)| (i, c(re, im))))
                    .unwrap()
            },
        )
    })
}

fn arb_same_width_pair(max_width: usize) -> impl Strategy<Value = (StateVector, StateVector)> {
    (1..=max_width).prop_flat_map(|w| {
        let one = prop::collection::vec((0..(1u64 << w), -1.0f64..1.0, -1.0f64..1.0), 1..=4)
            .prop_map(move |terms| {
                StateVector::from_terms(w, terms.into_iter().map(|(i, re, im)| (i, c(re, im))))
                    .unwrap()
            });
        (one.clone(), one)
    })
}

fn arb_normalized(max_width: usize) -> impl Strategy<Value = StateVector> {
    arb_state(max_width).prop_filter_map("nonzero", |v| {
        (v.norm() > 1e-3).then(|| v.scale(c(1.0 / v.norm(), 0.0)))
    })
}

fn arb_scalar() -> impl Strategy<Value = Amplitude> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| c(re, im))
}

proptest! {
    #[test]
    fn tensor_distributes_over_add_on_the_left((a1, a2) in arb_same_width_pair(4), b in arb_state(4)) {
        let lhs = a1.add(&a2).unwrap().tensor(&b).unwrap();
        let rhs = a1.tensor(&b).unwrap().add(&a2.tensor(&b).unwrap()).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs).unwrap() < TOL);
    }

    #[test]
    fn tensor_distributes_over_add_on_the_right(a in arb_state(4), (b1, b2) in arb_same_width_pair(4)) {
        let lhs = a.tensor(&b1.add(&b2).unwrap()).unwrap();
        let rhs = a.tensor(&b1).unwrap().add(&a.tensor(&b2).unwrap()).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs).unwrap() < TOL);
    }

    #[test]
    fn tensor_commutes_with_scale(a in arb_state(4), b in arb_state(4), s in arb_scalar()) {
        let base = a.tensor(&b).unwrap().scale(s);
        prop_assert!(a.scale(s).tensor(&b).unwrap().max_abs_diff(&base).unwrap() < TOL);
        prop_assert!(a.tensor(&b.scale(s)).unwrap().max_abs_diff(&base).unwrap() < TOL);
    }

    #[test]
    fn tensor_is_associative_on_kets(
        (wa, ia) in (1usize..4).prop_flat_map(|w| (Just(w), 0..(1u64 << w))),
        (wb, ib) in (1usize..4).prop_flat_map(|w| (Just(w), 0..(1u64 << w))),
        (wc, ic) in (1usize..4).prop_flat_map(|w| (Just(w), 0..(1u64 << w))),
    ) {
        let a = StateVector::basis_ket(wa, ia).unwrap();
        let b = StateVector::basis_ket(wb, ib).unwrap();
        let cc = StateVector::basis_ket(wc, ic).unwrap();
        let left = a.tensor(&b).unwrap().tensor(&cc).unwrap();
        let right = a.tensor(&b.tensor(&cc).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn canonicalize_is_idempotent_and_keeps_norm(v in arb_state(6)) {
        let once = v.canonicalize();
        prop_assert_eq!(once.canonicalize(), once.clone());
        prop_assert!((once.norm() - v.norm()).abs() < TOL);
    }

    #[test]
    fn bits_round_trip(w in 1usize..=8, seed in any::<u64>()) {
        let index = seed % (1u64 << w);
        let ket = BasisState::new(w, index).unwrap();
        let rebuilt = BasisState::from_bits(&ket.bits()).unwrap();
        prop_assert_eq!(rebuilt, ket);
        let v = StateVector::basis_ket(w, rebuilt.index()).unwrap();
        prop_assert_eq!(v.kets().next().unwrap().0.bits(), ket.bits());
    }

    #[test]
    fn single_qubit_gates_preserve_norm(v in arb_normalized(6), pos in 1usize..=6) {
        let pos = 1 + (pos - 1) % v.width();
        let out = apply_single(&hadamard(), pos, &v).unwrap();
        prop_assert!((out.norm() - 1.0).abs() < TOL);
    }

    #[test]
    fn two_qubit_gates_preserve_norm(v in arb_normalized(6), a in 1usize..=6, b in 1usize..=6, d in 1u32..6) {
        prop_assume!(v.width() >= 2);
        let (i, j) = (1 + (a - 1) % v.width(), 1 + (b - 1) % v.width());
        prop_assume!(i != j);
        let (i, j) = (i.min(j), i.max(j));
        for g in [swap(), rotation(d).unwrap()] {
            let out = apply_two(&g, i, j, &v).unwrap();
            prop_assert!((out.norm() - 1.0).abs() < TOL);
        }
    }

    #[test]
    fn single_gates_at_distinct_positions_commute(v in arb_normalized(6), a in 1usize..=6, b in 1usize..=6) {
        let (i, k) = (1 + (a - 1) % v.width(), 1 + (b - 1) % v.width());
        prop_assume!(i != k);
        let h = hadamard();
        let ik = apply_single(&h, k, &apply_single(&h, i, &v).unwrap()).unwrap();
        let ki = apply_single(&h, i, &apply_single(&h, k, &v).unwrap()).unwrap();
        prop_assert!(ik.max_abs_diff(&ki).unwrap() < TOL);
    }

    #[test]
    fn involutions(v in arb_normalized(6), a in 1usize..=6, b in 1usize..=6) {
        let i = 1 + (a - 1) % v.width();
        let h = hadamard();
        let hh = apply_single(&h, i, &apply_single(&h, i, &v).unwrap()).unwrap();
        prop_assert!(hh.max_abs_diff(&v).unwrap() < TOL);
        let j = 1 + (b - 1) % v.width();
        if i != j {
            let (i, j) = (i.min(j), i.max(j));
            let ss = apply_two(&swap(), i, j, &apply_two(&swap(), i, j, &v).unwrap()).unwrap();
            prop_assert!(ss.max_abs_diff(&v).unwrap() < TOL);
        }
    }

    #[test]
    fn single_gate_matches_dense_kronecker_lift(v in arb_normalized(5), a in 1usize..=5) {
        let n = v.width();
        let i = 1 + (a - 1) % n;
        let m = lift(&single_matrix(&hadamard()), i, n);
        let expected = matvec(&m, &v.to_dense());
        let got = apply_single(&hadamard(), i, &v).unwrap().to_dense();
        prop_assert!(max_diff(&got, &expected) < TOL);
    }

    #[test]
    fn two_gate_matches_dense_kronecker_lift(v in arb_normalized(5), a in 1usize..=5, b in 1usize..=5, d in 1u32..5) {
        let n = v.width();
        prop_assume!(n >= 2);
        let (i, j) = (1 + (a - 1) % n, 1 + (b - 1) % n);
        prop_assume!(i != j);
        let (i, j) = (i.min(j), i.max(j));
        for g in [swap(), rotation(d).unwrap()] {
            let m = lift_two(&two_matrix(&g), i, j, n);
            let expected = matvec(&m, &v.to_dense());
            let got = apply_two(&g, i, j, &v).unwrap().to_dense();
            prop_assert!(max_diff(&got, &expected) < TOL);
        }
    }

    #[test]
    fn qft_circuit_is_linear(v in arb_normalized(5)) {
        let q = v.width();
        let out = run_circuit(&build_qft_circuit(q).unwrap(), &v).unwrap();
        let expected = dft_oracle(&v.to_dense()).unwrap();
        prop_assert!(max_diff(&out.to_dense(), &expected) < 1e-10);
        prop_assert!((out.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn circuit_text_round_trips(q in 1usize..10) {
        let circuit = build_qft_circuit(q).unwrap();
        let parsed: Vec<GateApplication> =
            circuit.to_text().lines().map(|l| l.parse().unwrap()).collect();
        prop_assert_eq!(parsed.as_slice(), circuit.steps());
    }
}

#[test]
fn dense_lift_helper_is_sound() {
    // the swap-chain lift of SWAP(1, 3) must exchange the outer bits of every 3-qubit ket
    let m = lift_two(&two_matrix(&swap()), 1, 3, 3);
    for idx in 0..8u64 {
        let v = StateVector::basis_ket(3, idx).unwrap();
        let out = matvec(&m, &v.to_dense());
        let b = BasisState::new(3, idx).unwrap().bits();
        let target = BasisState::from_bits(&[b[2], b[1], b[0]]).unwrap().index();
        assert_eq!(out[target as usize], c(1.0, 0.0));
    }
}

#[test]
fn qft_three_routes_agree_small() {
    for q in 1..=4 {
        let circuit = build_qft_circuit(q).unwrap();
        for j in 0..(1u64 << q) {
            let via_circuit =
                run_circuit(&circuit, &StateVector::basis_ket(q, j).unwrap()).unwrap();
            let direct = qft_direct(j, q).unwrap();
            let product = qft_product_form(j, q).unwrap();
            assert!(
                via_circuit.max_abs_diff(&direct).unwrap() < 1e-10,
                "q={q} j={j}"
            );
            assert!(
                product.max_abs_diff(&direct).unwrap() < 1e-10,
                "q={q} j={j}"
            );
        }
    }
}
