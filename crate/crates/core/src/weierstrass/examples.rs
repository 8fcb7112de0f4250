use super::data::ExtendedSolutionData;
use crate::classify::LatticeElement;
use crate::error::{Error, Result};
use crate::exactnum::RationalFunction as Rf;
use crate::liealg::GroupSpec;
use crate::rootdata::Involution;

fn z() -> Rf {
    Rf::z()
}

fn zpow(k: usize) -> Rf {
    Rf::monomial(crate::exactnum::GaussianRational::from_int(1), k)
}

/// Built-in example names with a one-line description.
pub fn example_names() -> Vec<(&'static str, &'static str)> {
    vec![
        ("rp3", "RP3, class (z1, sigma_rho,1) in SO4: a(X12+Y12), a=z"),
        ("rp5", "RP5, class (z2, sigma_rho,2) in SO6: a(X13+Y13)+b(X23+Y23)+cY12, a=z, b=z^2, c=-z^3/3"),
        ("g3r6-worked", "G3R6, class (z1+z2, sigma_rho) in SO6: a=b=z, c=1, d=z, e=f=0"),
        ("wu1", "L3s, class (z1, sigma_rho) in SU3: a(X12-X23)+b lambda X13, a=z, b=1"),
        ("wu2", "L3s, class (z1, sigma_rho,1) in SU3: a(X12+X23)+b lambda X13, a=z, b=1"),
        ("q2s", "Q2s, class (2z1, sigma_rho) in SU4: c1(X13+X24)+c2 X14+c3 X23+a lambda(X13-X24), c=(1,2,3), a=z"),
        ("q2s-zeta2", "Q2s, class (z2, sigma_rho,2) in SU4: b(X12+X34)+a(X13-X24)+cX14, a=z, b=z^2, c=z^3/3"),
        ("l4s", "L4s, class (z2, sigma_rho,1) in SU4: a(X12-X34)+alpha a(X13-X24)+c lambda X14, a=z, alpha=2, c=z^2"),
        ("l4s-free", "SU4, xi=z2 without involution: a(X12-X34)+b(X13+X24)+c lambda X14, a=z, b=3z, c=z^2"),
    ]
}

/// Named Weierstrass datum with its default coefficient functions.
pub fn example(name: &str) -> Result<ExtendedSolutionData> {
    let name = match name {
        "wu-class1" => "wu1",
        "wu-class2" => "wu2",
        "g3r6" => "g3r6-worked",
        other => other,
    };
    let so4 = GroupSpec::so(4);
    let so6 = GroupSpec::so(6);
    let su3 = GroupSpec::su(3);
    let su4 = GroupSpec::su(4);
    let le = |c: &[i64]| LatticeElement::new(c.to_vec());
    match name {
        "rp3" => {
            ExtendedSolutionData::new(so4, Some(Involution::sigma_rho_i(&so4, 1)?), le(&[1]), vec![(0, "X12+Y12", z())])
        }
        "rp5" => ExtendedSolutionData::new(
            so6,
            Some(Involution::sigma_rho_i(&so6, 2)?),
            le(&[0, 1]),
            vec![
                (0, "X13+Y13", z()),
                (0, "X23+Y23", zpow(2)),
                (0, "Y12", zpow(3).scale(&crate::exactnum::GaussianRational::from_frac(-1, 3))),
            ],
        ),
        "g3r6-worked" => ExtendedSolutionData::new(
            so6,
            Some(Involution::sigma_rho(&so6)),
            le(&[1, 1]),
            vec![
                (0, "X12", z()),
                (0, "X23-Y23", z()),
                (0, "X13-Y13", Rf::from_int(1)),
                (0, "Y12", z()),
                (1, "X13+Y13", Rf::from_int(0)),
                (2, "Y12", Rf::from_int(0)),
            ],
        ),
        "wu1" => ExtendedSolutionData::new(
            su3,
            Some(Involution::sigma_rho(&su3)),
            le(&[1]),
            vec![(0, "X12-X23", z()), (1, "X13", Rf::from_int(1))],
        ),
        "wu2" => ExtendedSolutionData::new(
            su3,
            Some(Involution::sigma_rho_i(&su3, 1)?),
            le(&[1]),
            vec![(0, "X12+X23", z()), (1, "X13", Rf::from_int(1))],
        ),
        "q2s" => ExtendedSolutionData::new(
            su4,
            Some(Involution::sigma_rho(&su4)),
            le(&[2, 0]),
            vec![
                (0, "X13+X24", Rf::from_int(1)),
                (0, "X14", Rf::from_int(2)),
                (0, "X23", Rf::from_int(3)),
                (1, "X13-X24", z()),
            ],
        ),
        "q2s-zeta2" => ExtendedSolutionData::new(
            su4,
            Some(Involution::sigma_rho_i(&su4, 2)?),
            le(&[0, 1]),
            vec![
                (0, "X12+X34", zpow(2)),
                (0, "X13-X24", z()),
                (0, "X14", zpow(3).scale(&crate::exactnum::GaussianRational::from_frac(1, 3))),
            ],
        ),
        "l4s" => ExtendedSolutionData::new(
            su4,
            Some(Involution::sigma_rho_i(&su4, 1)?),
            le(&[0, 1]),
            vec![
                (0, "X12-X34", z()),
                (0, "X13-X24", z().scale(&crate::exactnum::GaussianRational::from_int(2))),
                (1, "X14", zpow(2)),
            ],
        ),
        "l4s-free" => ExtendedSolutionData::new(
            su4,
            None,
            le(&[0, 1]),
            vec![
                (0, "X12-X34", z()),
                (0, "X13+X24", z().scale(&crate::exactnum::GaussianRational::from_int(3))),
                (1, "X14", zpow(2)),
            ],
        ),
        other => Err(Error::Schema(format!("unknown example '{other}'"))),
    }
}
