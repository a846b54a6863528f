mod common;

use common::rng;
use moves::psi_product;
use pinned_groups::{PinnedModel, Scalar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tp_cells::{weyl_cell_a, CellContext};
use tropical_zones::{usemifield_element, usemifield_multiply, PositiveRational, TropicalQ, Trivial, UPoint};
use weyl_core::{CartanDatum, Family, StarChoice, WeylGroup};

fn group(f: Family, r: usize) -> WeylGroup {
    WeylGroup::new(&CartanDatum::new(f, r, StarChoice::Identity).unwrap()).unwrap()
}

fn trivial_point(g: &WeylGroup, e: usize) -> UPoint<Trivial> {
    let w = g.element(e).word;
    let n = w.len();
    usemifield_element(g, &w, &vec![Trivial; n]).unwrap()
}

#[test]
fn trivial_table_is_demazure() {
    for g in [group(Family::A, 2), group(Family::B, 2), group(Family::A, 3)] {
        for a in 0..g.order() {
            for b in 0..g.order() {
                let p = usemifield_multiply(&g, &trivial_point(&g, a), &trivial_point(&g, b)).unwrap();
                assert_eq!(p.index, g.demazure_ids(a, b));
                assert_eq!(p.word, g.element(p.index).word);
            }
        }
    }
}

fn draw(g: &mut ChaCha8Rng, grp: &WeylGroup) -> (Vec<usize>, Vec<PositiveRational>) {
    let e = g.gen_range(0..grp.order());
    let w = grp.element(e).word;
    let c = w
        .iter()
        .map(|_| PositiveRational::new(common::r(g.gen_range(1..=12), g.gen_range(1..=7))).unwrap())
        .collect();
    (w, c)
}

fn scalars(c: &[PositiveRational]) -> Vec<Scalar> {
    c.iter().map(PositiveRational::to_scalar).collect()
}

#[test]
fn positive_rational_product_matches_matrices() {
    let mut g = rng(201);
    for rank in [2, 3] {
        let model = PinnedModel::special_linear(rank, StarChoice::Identity).unwrap();
        let ctx = CellContext::new(model.clone()).unwrap();
        let grp = ctx.tw.group().clone();
        for _ in 0..100 {
            let (w1, c1) = draw(&mut g, &grp);
            let (w2, c2) = draw(&mut g, &grp);
            let p = usemifield_element(&grp, &w1, &c1).unwrap();
            let q = usemifield_element(&grp, &w2, &c2).unwrap();
            let pq = usemifield_multiply(&grp, &p, &q).unwrap();
            let m = psi_product(&model, &w1, &scalars(&c1))
                .unwrap()
                .mul(&psi_product(&model, &w2, &scalars(&c2)).unwrap());
            assert!(psi_product(&model, &pq.word, &scalars(&pq.coords)).unwrap().equals(&m).unwrap());
            let (word, _) = weyl_cell_a(&ctx, &m).unwrap();
            assert_eq!(grp.id_of_word(&word).unwrap(), pq.index);
        }
    }
}

#[test]
fn arbitrary_words_reduce_to_their_product() {
    let mut g = rng(202);
    let grp = group(Family::B, 2);
    for _ in 0..100 {
        let n = g.gen_range(0..8);
        let w: Vec<usize> = (0..n).map(|_| g.gen_range(1..=2)).collect();
        let c: Vec<TropicalQ> = (0..n).map(|_| TropicalQ::int(g.gen_range(-5..=5))).collect();
        let p = usemifield_element(&grp, &w, &c).unwrap();
        let triv = usemifield_element(&grp, &w, &vec![Trivial; n]).unwrap();
        assert_eq!(p.index, triv.index);
        let left = usemifield_element(&grp, &w[..n / 2], &c[..n / 2]).unwrap();
        let right = usemifield_element(&grp, &w[n / 2..], &c[n / 2..]).unwrap();
        assert_eq!(usemifield_multiply(&grp, &left, &right).unwrap(), p);
    }
}
