mod common;

use moves::{check_move_identity, evaluate_move, Certificate, Direction, MoveKind};
use weyl_core::MoveTag;

const TAGS: [MoveTag; 12] = [
    MoveTag::StdA1A1,
    MoveTag::StdA2,
    MoveTag::StdB2,
    MoveTag::StdG2,
    MoveTag::StarSwap,
    MoveTag::Ns43i,
    MoveTag::Ns44,
    MoveTag::Ns45,
    MoveTag::Ns46,
    MoveTag::Ns47,
    MoveTag::Ns48,
    MoveTag::Ns49,
];

fn samples(tag: MoveTag) -> usize {
    match tag {
        MoveTag::Ns47 | MoveTag::Ns48 | MoveTag::Ns49 | MoveTag::StdG2 => 8,
        _ => 25,
    }
}

#[test]
fn every_move_satisfies_its_matrix_identity() {
    for (t, tag) in TAGS.into_iter().enumerate() {
        for dir in [Direction::Forward, Direction::Backward] {
            let kind = MoveKind::new(tag, dir);
            let mut r = common::rng(100 + t as u64);
            for _ in 0..samples(tag) {
                let x = common::sample(&mut r, kind.arity());
                let chk = check_move_identity(kind, &x).unwrap_or_else(|e| panic!("{kind} on {x:?}: {e}"));
                if let Certificate::Interval { max_relative_width } = chk.certificate {
                    assert!(max_relative_width < 2f64.powi(-128), "{kind}: width {max_relative_width}");
                }
            }
        }
    }
}

#[test]
fn rational_moves_stay_rational() {
    let mut r = common::rng(7);
    for tag in [MoveTag::StdA1A1, MoveTag::StdA2, MoveTag::StdB2, MoveTag::StdG2, MoveTag::Ns43i] {
        for dir in [Direction::Forward, Direction::Backward] {
            let kind = MoveKind::new(tag, dir);
            let x = common::sample(&mut r, kind.arity());
            let y = evaluate_move(kind, &x).unwrap();
            assert!(y.iter().all(|v| v.as_rational().is_some()), "{kind}");
        }
    }
}

#[test]
fn round_trips_are_identity() {
    for (t, tag) in TAGS.into_iter().enumerate() {
        for dir in [Direction::Forward, Direction::Backward] {
            let kind = MoveKind::new(tag, dir);
            let mut r = common::rng(900 + t as u64);
            for _ in 0..samples(tag) {
                let x = common::sample(&mut r, kind.arity());
                let y = evaluate_move(kind, &x).unwrap();
                let z = evaluate_move(kind.inverse(), &y).unwrap();
                for (a, b) in x.iter().zip(&z) {
                    assert!(a.equals(b).unwrap(), "{kind}: {x:?} -> {y:?} -> {z:?}");
                }
            }
        }
    }
}
