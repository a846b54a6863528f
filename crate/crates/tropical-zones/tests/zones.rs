mod common;

use common::{rng, series, series_vec};
use moves::{compose_transition, evaluate_move, transition_between, Direction, MoveKind};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use tropical_zones::{is_dyadic_vec, valuations, zone_map, zone_transition};
use weyl_core::{CartanDatum, Family, MoveTag, StarChoice, TwistedWeyl};

fn kinds() -> Vec<MoveKind> {
    let mut out = Vec::new();
    for tag in [
        MoveTag::StdA1A1,
        MoveTag::StdA2,
        MoveTag::StdB2,
        MoveTag::Ns43i,
        MoveTag::Ns44,
        MoveTag::Ns45,
        MoveTag::Ns46,
    ] {
        for d in [Direction::Forward, Direction::Backward] {
            out.push(MoveKind::new(tag, d));
        }
    }
    out
}

#[test]
fn valuation_is_a_homomorphism() {
    let mut g = rng(101);
    for _ in 0..500 {
        let (x, y) = (series(&mut g), series(&mut g));
        let (vx, vy) = (x.valuation().unwrap(), y.valuation().unwrap());
        assert_eq!(x.mul(&y).valuation().unwrap(), &vx + &vy);
        assert_eq!(x.add(&y).valuation().unwrap(), vx.clone().min(vy.clone()));
        assert_eq!(x.div(&y).unwrap().valuation().unwrap(), &vx - &vy);
        assert_eq!(x.sqrt().unwrap().valuation().unwrap(), &vx / BigRational::from_integer(BigInt::from(2)));
    }
}

#[test]
fn moves_preserve_zones() {
    let mut g = rng(102);
    for kind in kinds() {
        let zm = zone_map(kind).unwrap();
        for _ in 0..200 {
            let x = series_vec(&mut g, kind.arity());
            let out = evaluate_move(kind, &x).unwrap();
            assert_eq!(valuations(&out).unwrap(), zm.apply(&valuations(&x).unwrap()).unwrap(), "{kind}");
        }
    }
}

#[test]
fn zone_maps_are_bijective() {
    let mut g = rng(103);
    for kind in kinds() {
        let (f, b) = (zone_map(kind).unwrap(), zone_map(kind.inverse()).unwrap());
        for _ in 0..100 {
            let v: Vec<BigRational> = (0..kind.arity())
                .map(|_| BigRational::new(BigInt::from(g.gen_range(-20..=20)), BigInt::from(g.gen_range(1..=6))))
                .collect();
            assert_eq!(b.apply(&f.apply(&v).unwrap()).unwrap(), v, "{kind}");
        }
    }
}

#[test]
fn one_move_from_integers_needs_one_halving() {
    let mut g = rng(104);
    for tag in [MoveTag::Ns44, MoveTag::Ns45, MoveTag::Ns46] {
        for d in [Direction::Forward, Direction::Backward] {
            let zm = zone_map(MoveKind::new(tag, d)).unwrap();
            for _ in 0..200 {
                let v: Vec<BigRational> = (0..tag.arity())
                    .map(|_| BigRational::from_integer(BigInt::from(g.gen_range(-10..=10))))
                    .collect();
                let out = zm.apply(&v).unwrap();
                let two = BigInt::from(2);
                for x in &out {
                    assert!(x.denom() == &BigInt::from(1) || x.denom() == &two, "{tag:?} {v:?} -> {out:?}");
                }
                let mut cur = out;
                for _ in 0..5 {
                    cur = zm.apply(&cur).unwrap();
                    assert!(is_dyadic_vec(&cur));
                }
            }
        }
    }
}

#[test]
fn transition_maps_preserve_zones() {
    let mut g = rng(105);
    let data = [
        CartanDatum::new(Family::A, 2, StarChoice::Flip).unwrap(),
        CartanDatum::new(Family::A, 3, StarChoice::Identity).unwrap(),
        CartanDatum::new(Family::A, 3, StarChoice::Flip).unwrap(),
        CartanDatum::new(Family::B, 2, StarChoice::Identity).unwrap(),
    ];
    for d in data {
        let tw = TwistedWeyl::new(&d).unwrap();
        let w0 = tw.group().longest_id();
        let words = tw.involution_words_id(w0).unwrap();
        for _ in 0..20 {
            let (s, t) = (&words[g.gen_range(0..words.len())], &words[g.gen_range(0..words.len())]);
            let map = transition_between(&tw, s, t).unwrap();
            let x = series_vec(&mut g, s.len());
            let out = compose_transition(&d, &map, &x).unwrap();
            assert_eq!(
                valuations(&out).unwrap(),
                zone_transition(&d, &map, &valuations(&x).unwrap()).unwrap()
            );
        }
    }
}
