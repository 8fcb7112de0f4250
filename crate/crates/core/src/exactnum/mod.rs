//! Exact Gaussian-rational scalars, polynomials in z and rational functions.

mod gaussian;
mod poly;
mod rf;

pub use gaussian::{rat, rat_to_real, GaussianRational};
pub use poly::Poly;
pub use rf::{rf_arith, rf_derivative, rf_eval, RationalFunction, RfOp, DEFAULT_POLE_THRESHOLD};

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn z() -> RationalFunction {
        RationalFunction::z()
    }

    fn c(n: i64) -> RationalFunction {
        RationalFunction::from_int(n)
    }

    #[test]
    fn add_z_z() {
        assert_eq!(rf_arith(RfOp::Add, &z(), &z()).unwrap(), &c(2) * &z());
    }

    #[test]
    fn mul_z_inverse() {
        let inv = z().inv().unwrap();
        assert_eq!(rf_arith(RfOp::Mul, &z(), &inv).unwrap(), RationalFunction::one());
    }

    #[test]
    fn div_keeps_reduced_form() {
        let f = &(&z() * &z()) + &c(1);
        let q = rf_arith(RfOp::Div, &f, &z()).unwrap();
        assert_eq!(q.num(), &Poly::from_ints(&[1, 0, 1]));
        assert_eq!(q.den(), &Poly::from_ints(&[0, 1]));
    }

    #[test]
    fn div_by_zero_function() {
        assert!(matches!(
            rf_arith(RfOp::Div, &z(), &RationalFunction::zero()),
            Err(crate::Error::DivisionByZeroFunction)
        ));
    }

    #[test]
    fn derivatives() {
        assert_eq!(rf_derivative(&(&z() * &z())), &c(2) * &z());
        let inv = z().inv().unwrap();
        let expect = -(&(&z() * &z()).inv().unwrap());
        assert_eq!(rf_derivative(&inv), expect);
        let cube = &(&(&z() * &z()) * &z()) * &RationalFunction::from_frac(1, 3);
        assert_eq!(rf_derivative(&cube), &z() * &z());
    }

    #[test]
    fn evaluation() {
        let sq = &z() * &z();
        assert_eq!(rf_eval(&sq, Complex::new(2.0, 0.0)).unwrap(), Complex::new(4.0, 0.0));
        assert!(matches!(rf_eval(&z().inv().unwrap(), Complex::new(0.0, 0.0)), Err(crate::Error::PoleAtPoint(_))));
        let mob = (&z() - &c(1)).checked_div(&(&z() + &c(1))).unwrap();
        assert_eq!(rf_eval(&mob, Complex::new(1.0, 0.0)).unwrap(), Complex::new(0.0, 0.0));
    }

    #[test]
    fn json_roundtrip() {
        let f = (&(&z() * &z()) + &RationalFunction::constant(GaussianRational::i()))
            .checked_div(&(&z() - &RationalFunction::from_frac(1, 3)))
            .unwrap();
        let s = serde_json::to_string(&f).unwrap();
        let g: RationalFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["den"][0], serde_json::json!([-1, 3, 0, 1]));
    }

    fn arb_gr() -> impl Strategy<Value = GaussianRational> {
        (-5i64..=5, 1i64..=4, -3i64..=3, 1i64..=3).prop_map(|(a, b, c, d)| GaussianRational::new(rat(a, b), rat(c, d)))
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(arb_gr(), 0..=max_deg + 1).prop_map(Poly::new)
    }

    fn arb_rf() -> impl Strategy<Value = RationalFunction> {
        (arb_poly(3), arb_poly(2)).prop_map(|(n, d)| {
            let d = if d.is_zero() { Poly::one() } else { d };
            RationalFunction::new(n, d).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn add_then_sub_is_identity(f in arb_rf(), g in arb_rf()) {
            let h = rf_arith(RfOp::Sub, &rf_arith(RfOp::Add, &f, &g).unwrap(), &g).unwrap();
            prop_assert_eq!(h, f);
        }

        #[test]
        fn derivative_is_a_derivation(f in arb_rf(), g in arb_rf()) {
            let lhs = rf_derivative(&(&f * &g));
            let rhs = &(&f * &rf_derivative(&g)) + &(&rf_derivative(&f) * &g);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn evaluation_commutes_with_arithmetic(
            f in arb_rf(), g in arb_rf(), re in -2.0f64..2.0, im in -2.0f64..2.0
        ) {
            let z0 = Complex::new(re, im);
            if let (Ok(a), Ok(b)) = (rf_eval(&f, z0), rf_eval(&g, z0)) {
                for (op, expect) in [(RfOp::Add, a + b), (RfOp::Sub, a - b), (RfOp::Mul, a * b)] {
                    let h = rf_arith(op, &f, &g).unwrap();
                    if let Ok(v) = rf_eval(&h, z0) {
                        let scale = 1.0 + expect.norm() + a.norm() * b.norm();
                        prop_assert!((v - expect).norm() <= 1e-12 * scale * 1e2);
                    }
                }
            }
        }
    }
}
