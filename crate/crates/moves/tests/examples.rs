mod common;

use common::q;
use moves::{evaluate_move, failed_laws, Direction, MoveKind};
use pinned_groups::Scalar;
use weyl_core::MoveTag;

fn run(tag: MoveTag, dir: Direction, x: &[Scalar]) -> Vec<Scalar> {
    evaluate_move(MoveKind::new(tag, dir), x).unwrap()
}

fn assert_values(got: &[Scalar], want: &[Scalar]) {
    assert_eq!(got.len(), want.len());
    for (g, w) in got.iter().zip(want) {
        assert!(g.equals(w).unwrap(), "got {got:?}, want {want:?}");
    }
}

fn sqrt3() -> Scalar {
    Scalar::from_i64(3).sqrt().unwrap()
}

#[test]
fn a2_on_ones() {
    let y = run(MoveTag::StdA2, Direction::Forward, &[q(1, 1), q(1, 1), q(1, 1)]);
    assert_eq!(y, vec![q(1, 2), q(2, 1), q(1, 2)]);
}

#[test]
fn ns44_examples() {
    let f = Direction::Forward;
    assert_eq!(run(MoveTag::Ns44, f, &[q(1, 1), q(4, 1)]), vec![q(2, 1), q(3, 1)]);
    assert_eq!(run(MoveTag::Ns44, f, &[q(2, 1), q(8, 1)]), vec![q(4, 1), q(6, 1)]);
    assert_eq!(run(MoveTag::Ns44, Direction::Backward, &[q(2, 1), q(3, 1)]), vec![q(1, 1), q(4, 1)]);
}

#[test]
fn ns45_examples() {
    let f = Direction::Forward;
    let b = Direction::Backward;
    let ones = [q(1, 1), q(1, 1), q(1, 1)];
    let y = run(MoveTag::Ns45, f, &ones);
    assert_eq!(y, vec![q(1, 4), q(2, 1), q(3, 4)]);
    assert_eq!(run(MoveTag::Ns45, b, &y), ones.to_vec());
    assert_eq!(run(MoveTag::Ns45, f, &[q(1, 1), q(2, 1), q(1, 1)]), vec![q(1, 2), q(2, 1), q(3, 2)]);
}

#[test]
fn ns46_backward_from_ones_lands_in_q_sqrt3() {
    let x = vec![q(1, 1); 4];
    let kind = MoveKind::new(MoveTag::Ns46, Direction::Backward);
    let y = evaluate_move(kind, &x).unwrap();
    let s = sqrt3();
    let want = [
        &s - &q(1, 1),
        (&q(2, 1) - &s).mul(&q(1, 2)),
        &q(3, 1) - &s,
        (&q(2, 1) + &s).mul(&q(1, 2)),
    ];
    assert_values(&y, &want);
    assert!(y.iter().all(Scalar::is_exact));
    assert!(failed_laws(kind, &x, &y).unwrap().is_empty());
}

#[test]
fn ns47_fixes_d() {
    let x = [q(1, 1), q(2, 1), q(3, 1), q(5, 1), q(1, 2), q(3, 2)];
    for dir in [Direction::Forward, Direction::Backward] {
        let y = run(MoveTag::Ns47, dir, &x);
        assert_eq!(y[3], q(5, 1));
    }
}

#[test]
fn ns43i_swaps() {
    assert_eq!(run(MoveTag::Ns43i, Direction::Forward, &[q(1, 3), q(7, 2)]), vec![q(7, 2), q(1, 3)]);
}

#[test]
fn rejects_bad_inputs() {
    let kind = MoveKind::new(MoveTag::Ns44, Direction::Forward);
    assert!(matches!(evaluate_move(kind, &[q(1, 1)]), Err(moves::MoveError::Arity { expected: 2, got: 1 })));
    assert!(matches!(evaluate_move(kind, &[q(1, 1), q(-1, 1)]), Err(moves::MoveError::NotPositive(1))));
}
