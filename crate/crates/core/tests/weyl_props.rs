mod common;

use proptest::prelude::*;
use rug::Rational;
use uq21::repspace::{t_weight_space, u_weight_space, weights_up_to_level, Signature};
use uq21::weylracah::{weyl_block, weyl_coefficient, weyl_coefficient_r_sum};
use uq21::EvalContext;

fn signature() -> impl Strategy<Value = Signature> {
    (0i64..=4, 2i64..=6).prop_map(|(w, h)| Signature::new(w + 1, 1, 1 - h).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn blocks_are_orthogonal(s in signature(), num in 2i64..30) {
        let ctx = EvalContext::exact(Rational::from((num, 10))).unwrap();
        for w in weights_up_to_level(&s, 3) {
            let b = weyl_block(&s, &w, &ctx).unwrap();
            prop_assert!(b.orthogonality_residual(&ctx) < 1e-40, "{}", w);
        }
    }

    #[test]
    fn both_summations_agree(s in signature(), num in 2i64..30) {
        let ctx = EvalContext::exact(Rational::from((num, 10))).unwrap();
        for w in weights_up_to_level(&s, 3) {
            for u in u_weight_space(&s, &w) {
                for t in t_weight_space(&s, &w) {
                    prop_assert_eq!(weyl_coefficient(&s, &u, &t, &ctx).unwrap(), weyl_coefficient_r_sum(&s, &u, &t, &ctx).unwrap());
                }
            }
        }
    }

    #[test]
    fn symmetric_under_q_inversion(s in signature(), num in 2i64..30) {
        let q = EvalContext::exact(Rational::from((num, 10))).unwrap();
        let inv = EvalContext::exact(Rational::from((10, num))).unwrap();
        for w in weights_up_to_level(&s, 2) {
            for u in u_weight_space(&s, &w) {
                for t in t_weight_space(&s, &w) {
                    let a = weyl_coefficient(&s, &u, &t, &q).unwrap();
                    let b = weyl_coefficient(&s, &u, &t, &inv).unwrap();
                    prop_assert!(a.same_value(&b, &q), "{} {}", u, t);
                }
            }
        }
    }
}
