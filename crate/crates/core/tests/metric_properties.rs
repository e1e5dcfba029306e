use exradii_core::metrics::{exradius_sq, semi_perimeter};
use exradii_core::{
    cos_vertex, heron16, integer_sqrt, metrics, tan_half_sq, tangent_lengths, ExactRational, Side,
    TriangleSides,
};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;

fn triangle() -> impl Strategy<Value = TriangleSides> {
    (1u64..=1_000_000, 1u64..=1_000_000)
        .prop_flat_map(|(a, b)| {
            let lo = a.abs_diff(b) + 1;
            let hi = (a + b - 1).min(1_000_000);
            (Just(a), Just(b), lo..=hi.max(lo))
        })
        .prop_filter_map("triangle", |(a, b, c)| TriangleSides::new(a, b, c).ok())
}

fn half(n: i128) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn exradius_squared_times_gap(t in triangle()) {
        let m = metrics(&t);
        for x in Side::ALL {
            let (y, z) = t.others(x);
            let s = &m.s;
            let gap = |len: u64| s - half(2 * len as i128);
            prop_assert_eq!(
                m.rho(x).radicand() * gap(t.side(x)),
                s * gap(y) * gap(z)
            );
            // ρ² = s² tan²(θ/2)
            prop_assert_eq!(m.rho(x).radicand(), &(s * s * tan_half_sq(&t, x)));
        }
    }

    #[test]
    fn exradii_product_is_area_sq_times_s_sq(t in triangle()) {
        let m = metrics(&t);
        let product = m.rho_a.radicand() * m.rho_b.radicand() * m.rho_c.radicand();
        let e2 = ExactRational::new(BigInt::from(m.heron16.clone()), BigInt::from(16));
        prop_assert_eq!(product, e2 * &m.s * &m.s);
    }

    #[test]
    fn tangent_lengths_sum_and_difference(t in triangle()) {
        for base in Side::ALL {
            let (x, y) = tangent_lengths(&t, base);
            let (b, c) = t.others(base);
            prop_assert_eq!(&x + &y, ExactRational::from_integer(t.side(base).into()));
            prop_assert_eq!(&x - &y, ExactRational::from_integer(BigInt::from(b) - BigInt::from(c)));
        }
    }

    #[test]
    fn heron16_is_positive_four_factor_product(t in triangle()) {
        let h = heron16(&t);
        prop_assert!(!h.is_zero());
        let two_s = BigUint::from(t.perimeter());
        let s2 = semi_perimeter(&t) * ExactRational::from_integer(2.into());
        prop_assert_eq!(s2, ExactRational::from_integer(BigInt::from(two_s.clone())));
        let f = |x: u64| &two_s - BigUint::from(2 * x as u128);
        prop_assert_eq!(h.clone(), &two_s * f(t.a()) * f(t.b()) * f(t.c()));
        if let Some(root) = integer_sqrt(&h) {
            if (&root % 4u8).is_zero() {
                prop_assert!((&h % 16u8).is_zero());
            }
        }
    }

    #[test]
    fn cosine_in_open_unit_interval(t in triangle()) {
        let one = ExactRational::from_integer(1.into());
        for x in Side::ALL {
            let c = cos_vertex(&t, x);
            prop_assert!(c > -one.clone() && c < one);
        }
    }

    #[test]
    fn tan_half_matches_cosine(t in triangle()) {
        let one = ExactRational::from_integer(1.into());
        for x in Side::ALL {
            let c = cos_vertex(&t, x);
            prop_assert_eq!(tan_half_sq(&t, x), (&one - &c) / (&one + &c));
        }
    }

    #[test]
    fn integral_area_forces_rational_exradii(t in triangle()) {
        let m = metrics(&t);
        if let Some(e) = m.area.resolved() {
            for x in Side::ALL {
                let via_area = e / (&m.s - half(2 * t.side(x) as i128));
                prop_assert_eq!(m.rho(x).resolved(), Some(&via_area));
            }
        }
    }

    #[test]
    fn right_angle_iff_exradius_is_s(t in triangle()) {
        let m = metrics(&t);
        for x in Side::ALL {
            let is_s = m.rho(x).resolved() == Some(&m.s);
            prop_assert_eq!(is_s, m.cos(x).is_zero());
        }
    }
}

#[test]
fn right_angle_iff_on_scaled_triples() {
    for (a, b, c) in [(3u64, 4, 5), (5, 12, 13), (8, 15, 17), (20, 21, 29), (30, 40, 50)] {
        let t = TriangleSides::new(a, b, c).unwrap();
        let m = metrics(&t);
        assert_eq!(m.rho_c.resolved(), Some(&m.s));
        assert!(m.rho_a.resolved() != Some(&m.s));
        assert!(m.rho_b.resolved() != Some(&m.s));
        assert!(m.cos_c.is_zero());
    }
}

#[test]
fn exradius_sq_is_positive() {
    let t = TriangleSides::new(2, 3, 4).unwrap();
    for x in Side::ALL {
        assert!(exradius_sq(&t, x) > ExactRational::zero());
    }
    // (2,3,4): s = 9/2, ρ_a² = (9/2)(3/2)(1/2)/(5/2) = 27/20
    assert_eq!(
        exradius_sq(&t, Side::A),
        ExactRational::new(27.into(), 20.into())
    );
}
