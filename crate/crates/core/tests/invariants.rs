use dunkl_cylinder::angular::{s_squared, AngularEigenfunction, AngularMode, AngularSector};
use dunkl_cylinder::diff::FiniteDiff;
use dunkl_cylinder::dunkl::{CartPoint, DunklParams, Identity};
use dunkl_cylinder::parity::Parity;
use dunkl_cylinder::specfun::{bessel_j, bessel_zero, jacobi_p, log_gamma, scaled_bessel, BesselOrder};
use dunkl_cylinder::spectrum::{admissible, total_energy, ParityTriple, StateLabel};
use dunkl_cylinder::states::{axial_state, radial_from_indices, CylinderGeometry};
use proptest::prelude::*;

fn j(nu: f64, x: f64) -> f64 {
    bessel_j(BesselOrder::new(nu).unwrap(), x).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bessel_recurrence(nu in 0.05f64..20.0, x in 0.1f64..60.0) {
        let lhs = j(nu - 1.0, x) + j(nu + 1.0, x);
        let rhs = 2.0 * nu / x * j(nu, x);
        let scale = j(nu - 1.0, x).abs().max(j(nu + 1.0, x).abs()).max(rhs.abs());
        prop_assert!((lhs - rhs).abs() <= 1e-11 * scale, "nu {nu} x {x}: {lhs} vs {rhs}");
    }

    #[test]
    fn scaled_bessel_sign_law(nu in 0u32..8, power in -8i32..6, x in 0.01f64..30.0) {
        prop_assume!(power + nu as i32 >= 0);
        let order = BesselOrder::integer(nu);
        let plus = scaled_bessel(order, power as f64, x).unwrap();
        let minus = scaled_bessel(order, power as f64, -x).unwrap();
        let sign = Parity::of_power(power as i64 + nu as i64).factor();
        prop_assert!((minus - sign * plus).abs() <= 1e-13 * plus.abs());
    }

    #[test]
    fn zeros_are_roots_and_interlace(nu in -0.9f64..12.0, n in 1u32..8) {
        let a = BesselOrder::new(nu).unwrap();
        let b = BesselOrder::new(nu + 1.0).unwrap();
        let z = bessel_zero(a, n).unwrap();
        prop_assert!(z.bracket.0 <= z.value && z.value <= z.bracket.1);
        prop_assert!(j(nu, z.value).abs() < 1e-13);
        let next = bessel_zero(a, n + 1).unwrap().value;
        let other = bessel_zero(b, n).unwrap().value;
        prop_assert!(z.value < other && other < next);
    }

    #[test]
    fn jacobi_reflection(n in 0u32..12, a in -0.9f64..4.0, b in -0.9f64..4.0, x in -1.0f64..1.0) {
        let lhs = jacobi_p(n, a, b, -x).unwrap();
        let rhs = if n % 2 == 0 { 1.0 } else { -1.0 } * jacobi_p(n, b, a, x).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
    }

    #[test]
    fn log_gamma_recurrence(x in 0.01f64..50.0) {
        let lhs = log_gamma(x + 1.0).unwrap();
        let rhs = log_gamma(x).unwrap() + x.ln();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
    }

    #[test]
    fn separation_constant_closed_forms(mu1 in -0.45f64..3.0, mu2 in -0.45f64..3.0, twoell in 0u32..14) {
        let p = DunklParams::new(mu1, mu2, 0.5).unwrap();
        let ell = twoell as f64 / 2.0;
        let big_m = mu1 + mu2;
        let big_n = 2.0 * ell + big_m;
        let s2 = s_squared(&p, twoell);
        prop_assert!((s2 - 4.0 * ell * (ell + big_m)).abs() <= 1e-12 * s2.abs().max(1.0));
        prop_assert!((s2 - (big_n * big_n - big_m * big_m)).abs() <= 1e-11 * s2.abs().max(1.0));
    }

    #[test]
    fn angular_reflection_parities(mu1 in 0.0f64..2.0, mu2 in 0.0f64..2.0, k in 0u32..6, phi in 0.0f64..std::f64::consts::TAU) {
        let p = DunklParams::new(mu1, mu2, 0.5).unwrap();
        for sector in AngularSector::ALL {
            let f = AngularEigenfunction::new(&p, AngularMode::with_degree(sector, k)).unwrap();
            let v = f.value(phi);
            let scale = v.abs().max(1e-300);
            prop_assert!((f.value(std::f64::consts::PI - phi) - sector.r1().factor() * v).abs() <= 1e-11 * scale.max(1.0));
            prop_assert!((f.value(-phi) - sector.r2().factor() * v).abs() <= 1e-11 * scale.max(1.0));
        }
    }

    #[test]
    fn reflections_are_involutions(x in -3.0f64..3.0, y in -3.0f64..3.0, z in -3.0f64..3.0) {
        let p = DunklParams::new(0.4, 0.9, 1.5).unwrap();
        let f = |q: CartPoint| (q.x + 2.0 * q.y * q.y - q.z.powi(3)) * (-q.x * q.x).exp();
        for id in Identity::all() {
            if matches!(id, Identity::Involution(_) | Identity::ReflectionsCommute(..) | Identity::CoordinateAnticommutes(_)) {
                prop_assert!(id.residual(&p, f, CartPoint::new(x, y, z), &FiniteDiff::high_order()).unwrap() <= 1e-15);
            }
        }
    }

    #[test]
    fn energies_scale_with_geometry(big_n in 0u32..6, n in 1u32..4, m in 0u32..5, np in 1u32..4, r_c in 1.0f64..20.0, h in 1.0f64..20.0, t in 1.5f64..4.0) {
        let a = CylinderGeometry::finite(r_c, h).unwrap();
        let b = CylinderGeometry::finite(t * r_c, t * h).unwrap();
        let ea = radial_from_indices(&a, big_n, 0, n).unwrap().energy() + axial_state(&a, Parity::Even, m, np).unwrap().energy();
        let eb = radial_from_indices(&b, big_n, 0, n).unwrap().energy() + axial_state(&b, Parity::Even, m, np).unwrap().energy();
        prop_assert!((ea - t * t * eb).abs() <= 1e-13 * ea);
    }

    #[test]
    fn states_vanish_on_the_walls(big_n in 0u32..7, n in 1u32..5, m in 0u32..7, np in 1u32..5) {
        let g = CylinderGeometry::finite(10.0, 15.0).unwrap();
        let r = radial_from_indices(&g, big_n, big_n % 2, n).unwrap();
        prop_assert!(r.value(10.0).abs() < 1e-12);
        for parity in [Parity::Even, Parity::Odd] {
            let s = axial_state(&g, parity, m, np).unwrap();
            prop_assert!(s.value(15.0).abs() < 1e-12 && s.value(-15.0).abs() < 1e-12);
        }
    }

    #[test]
    fn energy_grows_with_index(big_n in 0u32..6, n in 1u32..5) {
        let g = CylinderGeometry::finite(10.0, 15.0).unwrap();
        let lo = radial_from_indices(&g, big_n, 0, n).unwrap().energy();
        let hi = radial_from_indices(&g, big_n, 0, n + 1).unwrap().energy();
        let wider = radial_from_indices(&g, big_n + 1, 0, n).unwrap().energy();
        prop_assert!(0.0 < lo && lo < hi && lo < wider);
    }

    #[test]
    fn admissible_labels_are_consistent(signs in (0usize..8), big_n in 0u32..9, big_m in 0u32..9, m in 0u32..4) {
        let class = ParityTriple::all()[signs];
        let label = StateLabel::finite(class, big_n, big_m, m, 1, 1);
        if admissible(&label).is_admissible() {
            prop_assert!(big_n >= big_m && big_n - big_m == label.twoell);
            prop_assert_eq!(Parity::of_power(label.twoell as i64), class.r1 * class.r2);
            let g = CylinderGeometry::finite(10.0, 15.0).unwrap();
            let e = total_energy(&g, &label).unwrap();
            prop_assert!((e.e_total - e.e_radial - e.e_axial).abs() <= f64::EPSILON * e.e_total);
        }
    }
}
