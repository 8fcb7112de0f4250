use num_traits::{One, Zero};

use super::*;
use crate::classify::LatticeElement;
use crate::exactnum::{GaussianRational, Poly, RationalFunction as Rf};
use crate::liealg::{same_span, CartanVector, GroupSpec, Vector};
use crate::rootdata::Involution;

fn poly(c: &[i64]) -> Rf {
    Rf::from_poly(Poly::from_ints(c))
}

fn d(f: &Rf) -> Rf {
    f.derivative()
}

fn k(n: i64) -> Rf {
    Rf::from_int(n)
}

fn samples() -> Vec<[Rf; 4]> {
    vec![
        [poly(&[1, 2, 0, 1]), poly(&[3, 0, 1]), poly(&[0, 1, 5]), poly(&[2, 7])],
        [poly(&[0, 1, 1]), poly(&[1, 0, 0, 2]), poly(&[3, 1]), poly(&[0, 0, 1])],
        [poly(&[2, 0, 1]), poly(&[1, 1]), poly(&[1, 0, 0, 1]), poly(&[5, 0, 1])],
        [Rf::z().inv().unwrap(), poly(&[1, 3]), poly(&[0, 2]), poly(&[1])],
    ]
}

fn proportional(f: &Rf, g: &Rf) -> bool {
    f.checked_div(g).is_ok_and(|q| q.as_constant().is_some())
}

/// Residual values of the family with the given functions substituted.
fn residuals(name: &str, fs: &[Rf]) -> Vec<Residual> {
    let data = example(name).unwrap().with_functions(fs);
    check_extended_solution(&data).unwrap().residuals
}

#[test]
fn domains() {
    let su3 = GroupSpec::su(3);
    let dom =
        nilpotent_domain(&su3, &CartanVector::from_ints(&[1, 0, -1]), Some(&Involution::sigma_rho(&su3))).unwrap();
    assert_eq!(dom.labels_at(0), vec!["X12-X23"]);
    assert_eq!(dom.labels_at(1), vec!["X13"]);
    let so6 = GroupSpec::so(6);
    let dom = nilpotent_domain(&so6, &CartanVector::from_ints(&[2, 1, 0]), Some(&Involution::sigma_rho(&so6))).unwrap();
    let mut l0 = dom.labels_at(0);
    l0.sort();
    assert_eq!(l0, vec!["X12", "X13-Y13", "X23-Y23", "Y12"]);
    assert_eq!(dom.labels_at(1), vec!["X13+Y13"]);
    assert_eq!(dom.labels_at(2), vec!["Y12"]);
    let su4 = GroupSpec::su(4);
    let dom = nilpotent_domain(
        &su4,
        &CartanVector::from_ints(&[1, 0, 0, -1]),
        Some(&Involution::sigma_rho_i(&su4, 1).unwrap()),
    )
    .unwrap();
    let mut l0 = dom.labels_at(0);
    l0.sort();
    assert_eq!(l0, vec!["X12-X34", "X13-X24"]);
    assert_eq!(dom.labels_at(1), vec!["X14"]);
    assert!(matches!(
        nilpotent_domain(&so6, &CartanVector::from_ints(&[1, 1, 1]), Some(&Involution::sigma_rho(&so6))),
        Err(crate::Error::XiNotSigmaFixed)
    ));
}

#[test]
fn rp5_constraint() {
    for [a, b, c, _] in samples() {
        let r = residuals("rp5", &[a.clone(), b.clone(), c.clone()]);
        let want = &d(&c) - &(&(&b * &d(&a)) - &(&a * &d(&b)));
        assert!(!r.is_empty());
        assert!(r.iter().all(|x| proportional(&x.value, &want) && x.label == "Y12"));
    }
    let ok =
        residuals("rp5", &[Rf::z(), poly(&[0, 0, 1]), poly(&[0, 0, 0, 1]).scale(&GaussianRational::from_frac(-1, 3))]);
    assert!(ok.is_empty());
    let bad = residuals("rp5", &[Rf::z(), poly(&[0, 0, 1]), Rf::zero()]);
    assert!(!bad.is_empty());
}

#[test]
fn g3r6_constraints() {
    for [a, b, c, dd] in samples() {
        let fs = [a.clone(), b.clone(), c.clone(), dd.clone(), poly(&[1, 1]), poly(&[0, 0, 2])];
        let r = residuals("g3r6-worked", &fs);
        let e1 = &(&k(2) * &d(&c)) - &(&(&a * &d(&b)) - &(&b * &d(&a)));
        let e2 = &(&k(3) * &d(&dd)) - &(&(&k(3) * &(&c * &d(&b))) - &(&b * &d(&c)));
        let by = |l: &str| r.iter().find(|x| x.label == l).map(|x| x.value.clone()).unwrap_or_else(Rf::zero);
        assert!(proportional(&by("X13"), &e1));
        assert!(proportional(&by("Y13"), &e1));
        let rest = &by("Y12") - (&e2.scale(&GaussianRational::from_frac(1, 3)));
        assert_eq!(rest, &b.scale(&GaussianRational::from_frac(1, 3)) * &e1);
        assert_eq!(r.len(), 3);
        assert_eq!(
            check_extended_solution(&example("g3r6-worked").unwrap().with_functions(&fs)).unwrap().constraints.len(),
            2
        );
    }
    let worked = example("g3r6-worked").unwrap();
    assert!(check_extended_solution(&worked).unwrap().pass);
    let worked_lambda = worked.with_functions(&[Rf::z(), Rf::z(), k(1), Rf::z(), poly(&[3, 1]), poly(&[0, 0, 5])]);
    assert!(check_extended_solution(&worked_lambda).unwrap().pass);
}

#[test]
fn su4_unrestricted_constraint() {
    for [a, b, c, _] in samples() {
        let r = residuals("l4s-free", &[a.clone(), b.clone(), c.clone()]);
        let want = &(&a * &d(&b)) - &(&b * &d(&a));
        assert!(!r.is_empty());
        assert!(r.iter().all(|x| proportional(&x.value, &want)));
    }
    assert!(residuals("l4s-free", &[Rf::z(), poly(&[0, 3]), poly(&[1, 1])]).is_empty());
    assert!(!residuals("l4s-free", &[Rf::z(), poly(&[0, 0, 1]), poly(&[1, 1])]).is_empty());
}

#[test]
fn unconstrained_families() {
    for [a, b, c, dd] in samples() {
        assert!(residuals("rp3", std::slice::from_ref(&a)).is_empty());
        assert!(residuals("wu1", &[a.clone(), b.clone()]).is_empty());
        assert!(residuals("wu2", &[a.clone(), b.clone()]).is_empty());
        assert!(residuals("q2s", &[k(2), k(-1), k(5), a.clone()]).is_empty());
        assert!(residuals("l4s", &[a.clone(), a.scale(&GaussianRational::from_int(7)), c.clone()]).is_empty());
        assert!(residuals("l4s", &[a.clone(), dd.clone(), c.clone()]).is_empty());
    }
    assert!(!residuals("q2s", &[Rf::z(), k(0), k(0), k(0)]).is_empty());
}

#[test]
fn q2s_zeta2_constraint() {
    for [a, b, c, _] in samples() {
        let r = residuals("q2s-zeta2", &[b.clone(), a.clone(), c.clone()]);
        let want = &d(&c) - &(&(&a * &d(&b)) - &(&b * &d(&a)));
        assert!(!r.is_empty());
        assert!(r.iter().all(|x| proportional(&x.value, &want)));
    }
}

fn rf_rows(rows: &[&[Rf]]) -> Vec<Vec<Rf>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

#[test]
fn exp_closed_forms() {
    let e = exp_c(&example("rp3").unwrap()).unwrap().lambda_coeff(0);
    let a = Rf::z();
    let a2 = &a * &a;
    let o = Rf::one;
    let zr = Rf::zero;
    assert_eq!(
        e.rows(),
        rf_rows(&[
            &[o(), a.clone(), -&a2, a.clone()],
            &[zr(), o(), -&a, zr()],
            &[zr(), zr(), o(), zr()],
            &[zr(), zr(), -&a, o()],
        ])
    );
    for (name, sign) in [("wu1", -1), ("wu2", 1)] {
        let fa = poly(&[1, 2, 3]);
        let fb = poly(&[0, 5]);
        let data = example(name).unwrap().with_functions(&[fa.clone(), fb.clone()]);
        let e = exp_c(&data).unwrap();
        let e13 = e.get(0, 2);
        let half = GaussianRational::from_frac(1, 2);
        assert_eq!(e13.coeff(0), (&fa * &fa).scale(&GaussianRational::from_int(sign)).scale(&half));
        assert_eq!(e13.coeff(1), fb);
    }
    let zero = example("rp3").unwrap().with_functions(&[Rf::zero()]);
    assert_eq!(exp_c(&zero).unwrap(), crate::liealg::LambdaMatrix::identity(4, crate::liealg::Basis::U));
}

fn span_at(vs: &[Vec<Rf>], z0: i64) -> Vec<Vector> {
    let z = GaussianRational::from_int(z0);
    vs.iter().map(|v| v.iter().map(|f| f.eval_exact(&z).unwrap()).collect()).collect()
}

fn assert_same_span(got: &[Vec<Rf>], want: &[Vec<Rf>]) {
    for z0 in [2, 3, 5, 7, -4] {
        assert!(same_span(&span_at(got, z0), &span_at(want, z0)), "spans differ at z={z0}");
    }
}

fn vecf(c: &[&[i64]]) -> Vec<Rf> {
    c.iter().map(|p| poly(p)).collect()
}

#[test]
fn s1_invariant_flags() {
    let a = Rf::z();
    let f = sone_invariant_flag(&example("rp3").unwrap()).unwrap();
    assert_eq!(f[0].level, -1);
    assert_same_span(&f[0].vectors, &[vec![&a * &a, a.clone(), k(-1), a.clone()]]);

    let f = sone_invariant_flag(&example("g3r6-worked").unwrap()).unwrap();
    let v = vecf(&[&[12, 0, -12, 0, -1], &[0, 0, 0, -4], &[12, 0, -6], &[12], &[0, -12], &[-12, 0, 6]]);
    let w = vecf(&[&[0, 6, 0, 1], &[0, 0, 3], &[0, 3], &[0], &[3], &[0, -3]]);
    assert_eq!(f[0].level, -2);
    assert_same_span(&f[0].vectors, std::slice::from_ref(&v));
    assert_same_span(&f[1].vectors, &[w, v]);

    let data = example("rp5").unwrap();
    let fs = [poly(&[1, 1]), poly(&[0, 0, 2]), poly(&[3, 0, 1])];
    let f = sone_invariant_flag(&data.with_functions(&fs)).unwrap();
    let (a, b, c) = (&fs[0], &fs[1], &fs[2]);
    let a1 = vec![a * a, &(a * b) + c, a.clone(), k(-1), k(0), a.clone()];
    let a2 = vec![&(a * b) - c, b * b, b.clone(), k(0), k(-1), b.clone()];
    assert_same_span(&f[0].vectors, &[a1, a2]);

    assert!(matches!(sone_invariant_flag(&example("wu1").unwrap()), Err(crate::Error::NotSOneInvariant)));
}

#[test]
fn examples_round_trip_and_pass() {
    for (name, _) in example_names() {
        let data = example(name).unwrap();
        let back = ExtendedSolutionData::from_json(&data.to_json()).unwrap();
        assert_eq!(back, data, "{name}");
        assert!(check_extended_solution(&back).unwrap().pass, "{name}");
    }
}

#[test]
fn data_outside_domain_is_rejected() {
    let so6 = GroupSpec::so(6);
    let r = ExtendedSolutionData::new(
        so6,
        Some(Involution::sigma_rho(&so6)),
        LatticeElement::new(vec![1, 1]),
        vec![(0, "X13+Y13", Rf::z())],
    );
    assert!(matches!(r, Err(crate::Error::Schema(_))));
    assert!(parse_combination(&so6, "X12+Q7").is_err());
    assert_eq!(parse_combination(&so6, "2X12-Y12").unwrap(), parse_combination(&so6, "X12+X12-Y12").unwrap());
}

#[test]
fn check_is_deterministic() {
    let d = example("g3r6-worked").unwrap().with_functions(&samples()[0]);
    assert_eq!(check_extended_solution(&d).unwrap(), check_extended_solution(&d).unwrap());
}

#[test]
fn family_constraint_sites() {
    let sites = |name: &str| -> Vec<(usize, String)> {
        family_constraints(&example(name).unwrap()).unwrap().into_iter().map(|s| (s.lambda, s.label)).collect()
    };
    assert_eq!(sites("rp5").len(), 1);
    assert_eq!(sites("g3r6-worked").len(), 2);
    assert_eq!(sites("l4s-free").len(), 1);
    for name in ["rp3", "wu1", "wu2", "q2s", "l4s"] {
        assert!(sites(name).is_empty(), "{name}");
    }
}
