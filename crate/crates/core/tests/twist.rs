use std::sync::Arc;

use hochlift::algebra::truncated_polynomial;
use hochlift::complexes::{periodic_resolution, verify_exactness, Cochain, FreeElement};
use hochlift::foundations::{Bicharacter, Field, GradingGroup, Scalar};
use hochlift::lifting::{verify_homotopy_lifting, ChainMap, Resolution};
use hochlift::twist::{
    tensor_cochain, tensor_homotopy_lifting, twisted_tensor_resolution, verify_factorization, FactorizationOptions,
    Side, TotalGen, TwistError, TwistedTensorResolution,
};

fn side(field: Field, n: usize, label: &str, len: usize) -> Arc<Resolution> {
    let alg = truncated_polynomial(field, n, label, GradingGroup::integers(), &[1]).unwrap();
    let p = periodic_resolution(Arc::new(alg), n, len).unwrap();
    Arc::new(Resolution::new(Arc::new(p)).unwrap())
}

fn build(field: Field, q: Scalar, len: usize) -> TwistedTensorResolution {
    let t = Bicharacter::on_integers(field, q).unwrap();
    twisted_tensor_resolution(side(field, 2, "x", len), side(field, 2, "y", len), t).unwrap()
}

fn rat(n: i64) -> Scalar {
    Field::Rational.from_i64(n)
}

/// ψ(e_i) = i·e_i on a one-generator-per-degree complex.
fn scaling_lifting(len: usize, alg: &hochlift::algebra::GradedAlgebra) -> ChainMap {
    let images = (0..=len).map(|i| vec![FreeElement::generator(alg, 0).scaled(&rat(i as i64))]).collect();
    ChainMap { shift: 0, start: 0, images }
}

#[test]
fn total_complexes_are_exact() {
    for q in [1, -1] {
        let tt = build(Field::Rational, rat(q), 6);
        let report = verify_exactness(tt.resolution().complex(), 5).unwrap();
        assert!(report.exact(), "q = {q}: {report}");
    }
}

#[test]
fn degree_zero_diagonal() {
    let tt = build(Field::Rational, rat(-1), 3);
    let d0 = &tt.resolution().diagonal().images[0][0];
    let c = tt.total().algebra();
    assert_eq!(d0.terms().collect::<Vec<_>>(), vec![((0, c.unit(), c.unit()), &rat(1))]);
}

#[test]
fn tensor_lifting_matches_worked_values() {
    let tt = build(Field::Rational, rat(1), 6);
    let (pres, qres) = (tt.left(), tt.right());
    let (p, q) = (pres.complex(), qres.complex());
    let (a, b) = (p.algebra(), q.algebra());
    let f = Cochain::single(p, 1, 0, a.basis(1));
    let g = Cochain::single(q, 2, 0, b.basis(1));
    let psi_f = scaling_lifting(6, a);
    // g_{2j}(e′_{2j}) = e′_{2j−1}, zero in odd degrees
    let images = (0..=6)
        .map(|j| {
            if j >= 1 && j % 2 == 0 {
                vec![FreeElement::generator(b, 0)]
            } else {
                vec![FreeElement::new()]
            }
        })
        .collect::<Vec<_>>();
    let psi_g = ChainMap { shift: -1, start: 1, images: images[..].to_vec() };
    let psi_g = ChainMap { images: { let mut v = psi_g.images; v[0] = Vec::new(); v }, ..psi_g };
    assert!(verify_homotopy_lifting(qres, &g, &psi_g, true).passed());

    let lift = tensor_homotopy_lifting(&tt, &f, &psi_f, &g, &psi_g).unwrap();
    let res = tt.resolution();
    let report = verify_homotopy_lifting(res, &lift.cocycle, &lift.map, false);
    assert!(report.passed(), "{report}");

    let total = tt.total();
    let c = total.algebra();
    let (x, y, one) = (c.index_of("x").unwrap(), c.index_of("y").unwrap(), c.unit());
    let k = total.index_of(3, TotalGen { i: 1, g: 0, h: 0 }).unwrap();
    let e1e0 = total.index_of(1, TotalGen { i: 1, g: 0, h: 0 }).unwrap();
    let e0e1 = total.index_of(1, TotalGen { i: 0, g: 0, h: 0 }).unwrap();
    let got: Vec<_> = lift.map.images[3][k].terms().map(|(k, c)| (k, c.clone())).collect();
    assert_eq!(got, vec![((e0e1, x, one), rat(1)), ((e1e0, one, y), rat(1))]);
}

#[test]
fn kernel_checks() {
    let f7 = Field::prime(7).unwrap();
    let tt = build(f7, f7.from_i64(2), 4);
    let p = tt.left().complex();
    let f = Cochain::single(p, 1, 0, p.algebra().one());
    let g = Cochain::single(tt.right().complex(), 1, 0, tt.right().complex().algebra().basis(1));
    match tensor_cochain(tt.total(), &f, &g) {
        Err(TwistError::NotInKernel { side: Side::Left, .. }) => {}
        other => panic!("expected a kernel violation, got {other:?}"),
    }
}

#[test]
fn untwisted_factorization() {
    let tt = build(Field::Rational, rat(1), 9);
    let report = verify_factorization(&tt, 4, FactorizationOptions::default()).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn twisted_factorization() {
    let tt = build(Field::Rational, rat(-1), 9);
    let report = verify_factorization(&tt, 4, FactorizationOptions::default()).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn dropped_sign_is_noticed() {
    let tt = build(Field::Rational, rat(1), 9);
    let options = FactorizationOptions { drop_bracket_sign: true };
    let report = verify_factorization(&tt, 4, options).unwrap();
    assert!(report.failures() > 0);
    assert!(report.to_string().lines().any(|l| l.starts_with("FAIL pair=")));
}

#[test]
fn order_four_twist_over_f5() {
    let f5 = Field::prime(5).unwrap();
    let tt = build(f5, f5.from_i64(2), 11);
    let report = verify_factorization(&tt, 5, FactorizationOptions::default()).unwrap();
    assert_eq!(report.left.len(), 2);
    assert!(report.passed(), "{report}");
}

#[test]
fn worked_example_values() {
    let ex = hochlift::example::WorkedExample::new(6).unwrap();
    let report = ex.run().unwrap();
    assert!(report.passed(), "{report}");
    println!("{report}");
}
