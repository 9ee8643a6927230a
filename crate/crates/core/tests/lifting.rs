use std::sync::Arc;

use hochlift::complexes::{
    are_cohomologous, cohomology_basis, is_cocycle, periodic_truncated_resolution, Cochain, FreeElement,
};
use hochlift::foundations::Field;
use hochlift::lifting::{
    bracket, cup, lift_chain_map, solve_homotopy_lifting, verify_homotopy_lifting, BaseMap, ChainMap, Resolution,
};

fn dual_numbers(len: usize) -> Resolution {
    let p = periodic_truncated_resolution(Field::Rational, 2, len).unwrap();
    Resolution::new(Arc::new(p)).unwrap()
}

fn q(n: i64) -> hochlift::foundations::Scalar {
    Field::Rational.from_i64(n)
}

#[test]
fn closed_form_diagonal_is_a_chain_map() {
    let res = dual_numbers(6);
    let p = res.complex();
    assert!(res.diagonal().chain_map_failures(p, res.square().complex(), p.augmentation()).is_empty());
    assert_eq!(res.diagonal().images[2][0].len(), 3);
}

#[test]
fn closed_form_liftings_verify() {
    let res = dual_numbers(6);
    let p = res.complex().clone();
    let alg = p.algebra().clone();
    let f = Cochain::single(&p, 1, 0, alg.basis(1));
    assert!(is_cocycle(&p, &f).unwrap());
    let images = (0..=6)
        .map(|i| vec![FreeElement::generator(&alg, 0).scaled(&q(i as i64))])
        .collect();
    let psi_f = ChainMap { shift: 0, start: 0, images };
    let report = verify_homotopy_lifting(&res, &f, &psi_f, false);
    assert!(report.passed(), "{report}");

    let solved = solve_homotopy_lifting(&res, &f).unwrap();
    assert!(verify_homotopy_lifting(&res, &f, &solved.map, false).passed());

    let h = Cochain::single(&p, 2, 0, alg.one());
    let psi_h = solve_homotopy_lifting(&res, &h).unwrap();
    assert!(psi_h.map.images.iter().flatten().all(FreeElement::is_zero));
    let zero = ChainMap { shift: -1, start: 1, images: psi_h.map.images.clone() };
    assert!(verify_homotopy_lifting(&res, &h, &zero, false).passed());

    let fh = bracket(&res, &f, &psi_f, &h, &psi_h.map).unwrap();
    assert_eq!(fh, h.scale(&q(-2)));
    let fh2 = bracket(&res, &f, &solved.map, &h, &psi_h.map).unwrap();
    assert!(are_cohomologous(&p, &fh, &fh2).unwrap());
    assert!(bracket(&res, &f, &psi_f, &f, &psi_f).unwrap().is_zero());
}

#[test]
fn perturbed_lifting_is_caught() {
    let res = dual_numbers(5);
    let p = res.complex().clone();
    let alg = p.algebra().clone();
    let f = Cochain::single(&p, 1, 0, alg.basis(1));
    let mut psi = solve_homotopy_lifting(&res, &f).unwrap().map;
    psi.images[3][0].add_term(0, 0, 1, q(1));
    let report = verify_homotopy_lifting(&res, &f, &psi, false);
    assert!(!report.passed());
    assert!(report.condition1.iter().any(|r| r.degree == 3));
}

#[test]
fn dual_number_cohomology() {
    let p = periodic_truncated_resolution(Field::Rational, 2, 6).unwrap();
    let dims: Vec<usize> = (0..5).map(|n| cohomology_basis(&p, n).unwrap().dim()).collect();
    assert_eq!(dims, vec![2, 1, 1, 1, 1]);
    assert!(cohomology_basis(&p, 6).is_err());
}

#[test]
fn cup_products() {
    let res = dual_numbers(6);
    let p = res.complex().clone();
    let alg = p.algebra().clone();
    let f = Cochain::single(&p, 1, 0, alg.basis(1));
    let h = Cochain::single(&p, 2, 0, alg.one());
    assert!(cup(&res, &f, &f).unwrap().is_zero());
    assert_eq!(cup(&res, &h, &h).unwrap(), Cochain::single(&p, 4, 0, alg.one()));
    let unit = Cochain::single(&p, 0, 0, alg.one());
    assert!(are_cohomologous(&p, &cup(&res, &unit, &f).unwrap(), &f).unwrap());
}

#[test]
fn cube_truncation_uses_lifted_diagonal() {
    let p = Arc::new(periodic_truncated_resolution(Field::Rational, 3, 5).unwrap());
    let res = Resolution::new(p.clone()).unwrap();
    assert!(res.diagonal().chain_map_failures(&p, res.square().complex(), p.augmentation()).is_empty());
    for n in 1..4 {
        for f in cohomology_basis(&p, n).unwrap().classes {
            let l = solve_homotopy_lifting(&res, &f).unwrap();
            let report = verify_homotopy_lifting(&res, &f, &l.map, false);
            assert!(report.passed(), "degree {n}: {report}");
        }
    }
    let id = lift_chain_map(&p, &p, BaseMap::Identity, 5).unwrap();
    assert!(id.chain_map_failures(&p, &p, p.augmentation()).is_empty());
}
