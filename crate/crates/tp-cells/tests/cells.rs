mod common;

use common::{gl, pick, rng, sample, sl, tau_torus};
use pinned_groups::Scalar;
use rand::Rng;
use tp_cells::{
    cell_dimension, classify_cell, factor_unipotent_a, jacobian_rank, kappa, kappa_joint, kappa_joint_half,
    kappa_minus, parameter_count, psi_plus, weyl_cell_a, CellContext,
};

fn contexts() -> Vec<CellContext> {
    vec![sl(2, false), sl(2, true), sl(3, false), sl(3, true)]
}

#[test]
fn factor_inverts_psi() {
    let mut r = rng(81);
    let ctxs = [sl(2, false), sl(3, false)];
    for n in 0..200 {
        let ctx = &ctxs[n % 2];
        let g = ctx.tw.group();
        let e = r.gen_range(0..g.order());
        let words = g.reduced_words(e);
        let word = pick(&mut r, &words).clone();
        let coords = sample(&mut r, word.len());
        let m = psi_plus(ctx, &word, &coords).unwrap();
        assert_eq!(factor_unipotent_a(ctx, &m, &word).unwrap(), coords, "word {word:?}");
        // every other reduced word of the same element factors the same matrix
        let other = pick(&mut r, &words).clone();
        let c2 = factor_unipotent_a(ctx, &m, &other).unwrap();
        assert!(psi_plus(ctx, &other, &c2).unwrap().equals(&m).unwrap());
    }
}

#[test]
fn factor_rejects_other_cells() {
    let mut r = rng(82);
    let ctx = sl(3, false);
    let g = ctx.tw.group();
    for _ in 0..100 {
        let e = r.gen_range(0..g.order());
        let f = r.gen_range(0..g.order());
        if e == f {
            continue;
        }
        let words = g.reduced_words(e);
        let word = pick(&mut r, &words).clone();
        let m = psi_plus(&ctx, &word, &sample(&mut r, word.len())).unwrap();
        let other = g.element(f).word;
        assert!(factor_unipotent_a(&ctx, &m, &other).is_err(), "{word:?} vs {other:?}");
    }
}

#[test]
fn cell_multiplication_follows_demazure_product() {
    let mut r = rng(83);
    for ctx in [sl(2, false), sl(3, false)] {
        let g = ctx.tw.group();
        for _ in 0..60 {
            let (e, f) = (r.gen_range(0..g.order()), r.gen_range(0..g.order()));
            let (we, wf) = (g.element(e).word, g.element(f).word);
            let u = psi_plus(&ctx, &we, &sample(&mut r, we.len())).unwrap();
            let v = psi_plus(&ctx, &wf, &sample(&mut r, wf.len())).unwrap();
            let (word, _) = weyl_cell_a(&ctx, &u.mul(&v)).unwrap();
            assert_eq!(g.id_of_word(&word).unwrap(), g.demazure_ids(e, f));
        }
    }
}

#[test]
fn kappa_images_are_tau_fixed_and_classified() {
    let mut r = rng(84);
    for ctx in contexts() {
        for e in ctx.tw.twisted_ids() {
            for word in ctx.tw.involution_words_id(e).unwrap() {
                let a = sample(&mut r, word.len());
                let k = kappa(&ctx, &word, &a).unwrap();
                assert!(ctx.model.is_tau_fixed(&k).unwrap());
                assert_eq!(classify_cell(&ctx, &k).unwrap(), ctx.tw.info(e).unwrap());
                let km = kappa_minus(&ctx, &word, &a).unwrap();
                assert!(ctx.model.is_tau_fixed(&km).unwrap());
                assert_eq!(classify_cell(&ctx, &km).unwrap(), ctx.tw.info(e).unwrap());
            }
        }
    }
}

#[test]
fn index_law_for_the_twisted_action() {
    let mut r = rng(85);
    for ctx in contexts() {
        let g = ctx.tw.group();
        for e in ctx.tw.twisted_ids() {
            let words = ctx.tw.involution_words_id(e).unwrap();
            for _ in 0..20 {
                let word = pick(&mut r, &words).clone();
                let k = kappa(&ctx, &word, &sample(&mut r, word.len())).unwrap();
                for i in 1..=ctx.model.rank() {
                    let a = common::positive(&mut r);
                    let moved = ctx.model.twisted_action(&ctx.model.gen_x(i, &a).unwrap(), &k).unwrap();
                    let si = g.id_of_word(&[i]).unwrap();
                    let expect = ctx.tw.info(ctx.tw.cell_index_action_id(si, e).unwrap()).unwrap();
                    assert_eq!(classify_cell(&ctx, &moved).unwrap(), expect);
                }
            }
        }
    }
}

fn joint_contexts() -> Vec<CellContext> {
    vec![gl(2), sl(2, false), sl(2, true), gl(3)]
}

#[test]
fn joint_images_are_tau_fixed_with_square_roots() {
    let mut r = rng(86);
    for ctx in joint_contexts() {
        let ids = ctx.tw.twisted_ids();
        for &a in &ids {
            for &b in &ids {
                let words = ctx.tw.joint_words_id(a, b).unwrap();
                for _ in 0..3 {
                    let jj = pick(&mut r, &words).clone();
                    let coords = sample(&mut r, jj.len());
                    let t = tau_torus(&ctx, &mut r);
                    let g = kappa_joint(&ctx, &jj, &coords, &t).unwrap();
                    assert!(ctx.model.is_tau_fixed(&g).unwrap(), "{}", ctx.model.name());
                    let h = kappa_joint_half(&ctx, &jj, &coords, &t).unwrap();
                    let hh = h.mul(&ctx.model.tau(&h).unwrap());
                    assert!(hh.equals(&g).unwrap(), "{} {jj:?}", ctx.model.name());
                }
            }
        }
    }
}

#[test]
fn gl2_joint_images_have_equal_diagonal_and_unit_determinant() {
    let mut r = rng(87);
    let ctx = gl(2);
    let ids = ctx.tw.twisted_ids();
    for _ in 0..100 {
        let (a, b) = (*pick(&mut r, &ids), *pick(&mut r, &ids));
        let words = ctx.tw.joint_words_id(a, b).unwrap();
        let jj = pick(&mut r, &words).clone();
        let g = kappa_joint(&ctx, &jj, &sample(&mut r, jj.len()), &tau_torus(&ctx, &mut r)).unwrap();
        assert!(g.get(0, 0).equals(g.get(1, 1)).unwrap());
        assert!(g.det().unwrap().equals(&Scalar::one()).unwrap());
    }
}

#[test]
fn parameter_count_matches_cell_dimension() {
    let mut r = rng(88);
    for ctx in [gl(2), sl(2, false), sl(2, true)] {
        let ids = ctx.tw.twisted_ids();
        for &a in &ids {
            for &b in &ids {
                let dim = cell_dimension(&ctx, a, b).unwrap();
                for jj in ctx.tw.joint_words_id(a, b).unwrap() {
                    assert_eq!(parameter_count(&ctx, &jj).unwrap(), dim);
                }
                let words = ctx.tw.joint_words_id(a, b).unwrap();
                let jj = pick(&mut r, &words).clone();
                let rank = jacobian_rank(&ctx, &jj, &sample(&mut r, jj.len()), &tau_torus(&ctx, &mut r)).unwrap();
                assert_eq!(rank, dim, "{} {jj:?}", ctx.model.name());
            }
        }
    }
}
