use num_bigint::BigInt;
use num_rational::BigRational;
use pinned_groups::{model_catalog, Level, Matrix, PinnedError, PinnedModel, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weyl_core::StarChoice;

fn s(x: &str) -> Scalar {
    x.parse().unwrap()
}

fn m(rows: &[&[&str]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|x| s(x)).collect()).collect())
}

fn random_positive(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_ratio(rng.gen_range(1..=1000), rng.gen_range(1..=1000))
}

/// A random product of generators and a torus element.
fn random_element(model: &PinnedModel, rng: &mut ChaCha8Rng) -> Matrix {
    let n = model.dim();
    let mut g = Matrix::identity(n);
    for _ in 0..4 {
        let i = rng.gen_range(1..=model.rank());
        let a = random_positive(rng);
        let step = if rng.gen_bool(0.5) {
            model.gen_x(i, &a).unwrap()
        } else {
            model.gen_y(i, &a).unwrap()
        };
        g = g.mul(&step);
    }
    let coords: Vec<Scalar> = (0..model.torus_rank()).map(|_| random_positive(rng)).collect();
    g.mul(&model.torus_elt(&coords).unwrap())
}

#[test]
fn catalog_models_validate() {
    for model in model_catalog().unwrap() {
        model.validate().unwrap_or_else(|e| panic!("{}: {e}", model.name()));
    }
    PinnedModel::g2_in_so7().unwrap().validate().unwrap();
}

#[test]
fn generator_examples() {
    let sl3 = PinnedModel::special_linear(2, StarChoice::Identity).unwrap();
    let x = sl3.gen_x(1, &s("7/2")).unwrap();
    assert_eq!(x, m(&[&["1", "7/2", "0"], &["0", "1", "0"], &["0", "0", "1"]]));
    assert_eq!(sl3.gen_x(2, &Scalar::zero()).unwrap(), Matrix::identity(3));
    let a = sl3.gen_x(1, &s("1")).unwrap();
    assert_eq!(a.mul(&a), sl3.gen_x(1, &s("2")).unwrap());
    assert!(sl3.gen_x(3, &s("1")).is_err());
}

#[test]
fn sigma_tau_examples() {
    let gl2 = PinnedModel::general_linear(2).unwrap();
    let x = gl2.gen_x(1, &s("3")).unwrap();
    assert_eq!(gl2.sigma(&x).unwrap(), x);
    let t = Matrix::diagonal(vec![s("2"), s("5")]);
    assert_eq!(gl2.tau(&t).unwrap(), t.inverse().unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let g = random_element(&gl2, &mut rng);
        assert_eq!(gl2.tau(&g).unwrap(), PinnedModel::sigma_linear_closed_form(&g).unwrap());
    }
    let gl3 = PinnedModel::general_linear(3).unwrap();
    for _ in 0..20 {
        let g = random_element(&gl3, &mut rng);
        assert_eq!(gl3.sigma(&g).unwrap(), PinnedModel::sigma_linear_closed_form(&g).unwrap());
    }
}

#[test]
fn tau_is_an_involutive_antiautomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for model in model_catalog().unwrap() {
        for _ in 0..100 {
            let g = random_element(&model, &mut rng);
            let h = random_element(&model, &mut rng);
            let tg = model.tau(&g).unwrap();
            assert_eq!(model.tau(&tg).unwrap(), g, "{}", model.name());
            let lhs = model.tau(&g.mul(&h)).unwrap();
            assert_eq!(lhs, model.tau(&h).unwrap().mul(&tg), "{}", model.name());
            // g τ(g) is τ-fixed, and g ↦ τ(g⁻¹) is an involutive automorphism
            assert!(model.is_tau_fixed(&g.mul(&tg)).unwrap());
            let theta = |x: &Matrix| model.tau(&x.inverse().unwrap()).unwrap();
            assert_eq!(theta(&theta(&g)), g);
            assert_eq!(theta(&g.mul(&h)), theta(&g).mul(&theta(&h)));
        }
    }
}

#[test]
fn twisted_action_examples() {
    let gl2 = PinnedModel::general_linear(2).unwrap();
    let id = Matrix::identity(2);
    let x1 = gl2.gen_x(1, &s("1")).unwrap();
    assert_eq!(gl2.twisted_action(&x1, &id).unwrap(), gl2.gen_x(1, &s("2")).unwrap());
    let g1 = Matrix::from_i64(&[vec![3, 1], vec![4, 2]]);
    assert_eq!(gl2.twisted_action(&id, &g1).unwrap(), g1);
    let t = Matrix::diagonal(vec![s("2"), s("1")]);
    assert_eq!(gl2.twisted_action(&t, &id).unwrap(), id);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for model in model_catalog().unwrap() {
        let g = random_element(&model, &mut rng);
        let h = random_element(&model, &mut rng);
        let g1 = random_element(&model, &mut rng);
        let lhs = model.twisted_action(&g.mul(&h), &g1).unwrap();
        let rhs = model
            .twisted_action(&g, &model.twisted_action(&h, &g1).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn membership_examples() {
    let gl2 = PinnedModel::general_linear(2).unwrap();
    let id = Matrix::identity(2);
    assert!(gl2.is_tau_fixed(&id).unwrap() && gl2.is_in_h(&id).unwrap());
    let d = Matrix::diagonal(vec![s("2"), s("3")]);
    assert!(gl2.is_in_h(&d).unwrap());
    let x = gl2.gen_x(1, &s("1")).unwrap();
    assert!(!gl2.is_in_h(&x).unwrap());
    assert!(gl2.is_tau_fixed(&x).unwrap());
    // H in GL_n: entries vanish off the even-sum positions
    let gl3 = PinnedModel::general_linear(3).unwrap();
    let h = Matrix::from_i64(&[vec![2, 0, 1], vec![0, 5, 0], vec![1, 0, 3]]);
    assert!(gl3.is_in_h(&h).unwrap());
    let not_h = Matrix::from_i64(&[vec![2, 1, 0], vec![0, 5, 0], vec![0, 0, 3]]);
    assert!(!gl3.is_in_h(&not_h).unwrap());
}

#[test]
fn gauss_examples_and_round_trip() {
    let gl2 = PinnedModel::general_linear(2).unwrap();
    let g = Matrix::from_i64(&[vec![1, 1], vec![1, 2]]);
    let (l, t, u) = gl2.gauss_decompose(&g).unwrap();
    assert_eq!(l, gl2.gen_y(1, &s("1")).unwrap());
    assert_eq!(t, Matrix::identity(2));
    assert_eq!(u, gl2.gen_x(1, &s("1")).unwrap());
    let id = Matrix::identity(2);
    assert_eq!(gl2.gauss_decompose(&id).unwrap(), (id.clone(), id.clone(), id.clone()));
    let swap = Matrix::from_i64(&[vec![0, 1], vec![1, 0]]);
    assert_eq!(gl2.gauss_decompose(&swap).unwrap_err(), PinnedError::NotInBruhatCell);
    assert_eq!(PinnedError::NotInBruhatCell.to_string(), "not in open Bruhat cell");

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for model in model_catalog().unwrap() {
        for _ in 0..5 {
            let n = model.dim();
            let mut lower = Matrix::identity(n);
            let mut upper = Matrix::identity(n);
            for _ in 0..5 {
                let i = rng.gen_range(1..=model.rank());
                lower = lower.mul(&model.gen_y(i, &random_positive(&mut rng)).unwrap());
                upper = upper.mul(&model.gen_x(i, &random_positive(&mut rng)).unwrap());
            }
            let coords: Vec<Scalar> = (0..model.torus_rank()).map(|_| random_positive(&mut rng)).collect();
            let t = model.torus_elt(&coords).unwrap();
            let g = lower.mul(&t).mul(&upper);
            assert_eq!(model.gauss_decompose(&g).unwrap(), (lower, t, upper));
        }
    }
}

#[test]
fn doubled_model_tau() {
    let sl2 = PinnedModel::special_linear(1, StarChoice::Identity).unwrap();
    let dd = PinnedModel::doubled(&sl2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..20 {
        let g = random_element(&sl2, &mut rng);
        let sg = sl2.sigma(&g).unwrap();
        let mut pair = Matrix::zeros(4, 4);
        for r in 0..2 {
            for c in 0..2 {
                pair.set(r, c, g.get(r, c).clone());
                pair.set(r + 2, c + 2, sg.get(r, c).clone());
            }
        }
        assert!(dd.is_tau_fixed(&pair).unwrap());
        let h = random_element(&sl2, &mut rng);
        let mut other = pair.clone();
        for r in 0..2 {
            for c in 0..2 {
                other.set(r + 2, c + 2, h.get(r, c).clone());
            }
        }
        assert!(!dd.is_tau_fixed(&other).unwrap());
    }
}

#[test]
fn sp4_braid_relation_length_four() {
    let sp4 = PinnedModel::symplectic(2).unwrap();
    // short letter first: (a,b,c,d) on 1212 equals 2121 with the coordinates below
    let (a, b, c, d) = (s("1"), s("2"), s("3"), s("5"));
    let p1 = a.mul(&a).mul(&b).add(&a.mul(&a).mul(&d)).add(&s("2").mul(&a).mul(&c).mul(&d)).add(&c.mul(&c).mul(&d));
    let p2 = a.mul(&b).add(&a.mul(&d)).add(&c.mul(&d));
    let out = [
        b.mul(&c).mul(&c).mul(&d).div(&p1).unwrap(),
        p1.div(&p2).unwrap(),
        p2.mul(&p2).div(&p1).unwrap(),
        a.mul(&b).mul(&c).div(&p2).unwrap(),
    ];
    let x = |i: usize, v: &Scalar| sp4.gen_x(i, v).unwrap();
    let lhs = x(1, &a).mul(&x(2, &b)).mul(&x(1, &c)).mul(&x(2, &d));
    let rhs = x(2, &out[0]).mul(&x(1, &out[1])).mul(&x(2, &out[2])).mul(&x(1, &out[3]));
    assert_eq!(lhs, rhs);
}

#[test]
fn torus_fixed_dimensions() {
    let dims: Vec<(String, usize)> = model_catalog()
        .unwrap()
        .iter()
        .map(|m| (m.name().to_string(), m.tau_fixed_torus_dim()))
        .collect();
    let get = |n: &str| dims.iter().find(|d| d.0 == n).unwrap().1;
    assert_eq!(get("GL2"), 0);
    assert_eq!(get("GL3"), 0);
    assert_eq!(get("SL3"), 0);
    assert_eq!(get("SL3*"), 1);
    assert_eq!(get("SL4*"), 1);
    assert_eq!(get("SO8*"), 1);
    assert_eq!(get("SL3xSL3"), 2);
}

#[test]
fn torus_half_examples() {
    let sl3s = PinnedModel::special_linear(2, StarChoice::Flip).unwrap();
    let id = Matrix::identity(3);
    assert_eq!(sl3s.torus_half(&id).unwrap(), id);
    let t1 = Matrix::diagonal(vec![s("2"), s("1/4"), s("2")]);
    let t2 = sl3s.torus_half(&t1).unwrap();
    assert_eq!(t2.get(0, 0).level(), Level::Quadratic);
    assert_eq!(t2.mul(&sl3s.tau(&t2).unwrap()), t1);
    let not_fixed = Matrix::diagonal(vec![s("4"), s("1"), s("1/4")]);
    assert_eq!(sl3s.torus_half(&not_fixed).unwrap_err(), PinnedError::NotTauFixed);
    let gl2 = PinnedModel::general_linear(2).unwrap();
    assert_eq!(gl2.torus_half(&Matrix::identity(2)).unwrap(), Matrix::identity(2));
    let d = Matrix::diagonal(vec![s("4"), s("1")]);
    assert_eq!(gl2.torus_half(&d).unwrap_err(), PinnedError::NotTauFixed);
    // coordinate form: c2 = 1/c1 is the τ-fixed line
    let c = vec![s("3"), s("1/3")];
    assert!(sl3s.is_tau_fixed_torus_coords(&c).unwrap());
    let half = sl3s.torus_half_coords(&c).unwrap();
    let t = sl3s.torus_elt(&half).unwrap();
    assert_eq!(t.mul(&sl3s.tau(&t).unwrap()), sl3s.torus_elt(&c).unwrap());
}

#[test]
fn omega_requires_recipe() {
    let d = weyl_core::CartanDatum::new(weyl_core::Family::A, 3, StarChoice::Flip).unwrap();
    assert!(PinnedModel::for_datum(&d).is_ok());
    let dd = weyl_core::CartanDatum::simple(weyl_core::Family::B, 3).unwrap();
    assert_eq!(PinnedModel::for_datum(&dd).unwrap().name(), "SO7");
}

#[test]
fn json_round_trip() {
    let s3 = s("3").sqrt().unwrap().add(&s("1/2"));
    let g = Matrix::diagonal(vec![s3.clone(), s("-7/3"), s("2").sqrt().unwrap().mul(&s3)]);
    let text = serde_json::to_string(&g).unwrap();
    assert!(text.contains("\"kind\":\"quad\""));
    assert!(text.contains("\"num\":\"-7\",\"den\":\"3\""));
    let back: Matrix = serde_json::from_str(&text).unwrap();
    assert_eq!(back, g);
    let r = Scalar::from_rational(BigRational::new(BigInt::from(5), BigInt::from(8)));
    assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"kind":"rat","num":"5","den":"8"}"#);
}
