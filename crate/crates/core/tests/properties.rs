use proptest::prelude::*;

use ptdirac::clifford::{gamma_set, proportionality_defect, representation_change};
use ptdirac::kinematics::{boost, dispersion_table, norm3, speeds, FourVector};
use ptdirac::observables::{constraint_residuals, mean_velocity};
use ptdirac::spinors::dirac_residual;
use ptdirac::symmetries::{
    apply_boost, apply_discrete, covariance_residual, lorentz_generator, transformation_tensor, DiscreteKind,
};
use ptdirac::{amplitude, format, EnergySign, Helicity, PlaneWaveSpec, Representation, Species};

fn direction() -> impl Strategy<Value = [f64; 3]> {
    (-1.0f64..=1.0, 0.0f64..std::f64::consts::TAU).prop_map(|(z, phi)| {
        let r = (1.0 - z * z).max(0.0).sqrt();
        [r * phi.cos(), r * phi.sin(), z]
    })
}

fn sign() -> impl Strategy<Value = EnergySign> {
    prop_oneof![Just(EnergySign::Positive), Just(EnergySign::Negative)]
}

fn helicity() -> impl Strategy<Value = Helicity> {
    prop_oneof![Just(Helicity::Plus), Just(Helicity::Minus)]
}

fn rep() -> impl Strategy<Value = Representation> {
    prop_oneof![Just(Representation::Standard), Just(Representation::Weyl)]
}

/// Valid spec of any species; the `k / m` ratio spans each shell.
fn spec() -> impl Strategy<Value = PlaneWaveSpec> {
    let species = prop_oneof![
        Just(Species::Pseudotachyon),
        Just(Species::Bradyon),
        Just(Species::Luxon)
    ];
    (
        species,
        0.3f64..3.0,
        0.001f64..1.0,
        direction(),
        sign(),
        helicity(),
        rep(),
    )
        .prop_map(|(species, m, t, n, energy_sign, helicity, rep)| {
            let (mass, k) = match species {
                Species::Pseudotachyon => (m, m * (1.0 + 9.0 * t)),
                Species::Bradyon => (m, 10.0 * m * t),
                Species::Luxon => (0.0, 10.0 * t),
            };
            let momentum = n.map(|x| x * k);
            // keep |p| >= m after rounding of the direction
            let mass = if species == Species::Pseudotachyon {
                mass.min(norm3(momentum))
            } else {
                mass
            };
            PlaneWaveSpec {
                species,
                energy_sign,
                momentum,
                mass,
                helicity,
                rep,
            }
        })
}

fn massive(species: Species) -> impl Strategy<Value = PlaneWaveSpec> {
    spec().prop_map(move |s| {
        let mut s = s;
        if s.species != species {
            let m = if s.mass > 0.0 { s.mass } else { 1.0 };
            s.species = species;
            s.mass = m.min(norm3(s.momentum));
        }
        s
    })
}

proptest! {
    #[test]
    fn amplitudes_solve_their_equation(s in spec()) {
        let w = amplitude(&s).unwrap();
        prop_assert!(dirac_residual(&s, &w).unwrap() <= 1e-12);
        let expected = if s.species == Species::Bradyon { 2.0 * s.energy().unwrap() } else { 2.0 * s.k() };
        prop_assert!((w.norm_sqr() - expected).abs() <= 1e-11);
    }

    #[test]
    fn amplitudes_are_helicity_eigenstates(s in spec()) {
        let w = amplitude(&s).unwrap();
        let lam = gamma_set(s.rep).helicity_operator(s.momentum).unwrap();
        prop_assert!((lam * w - w.scale(s.state_helicity().into())).norm() <= 1e-11);
    }

    #[test]
    fn weyl_maps_to_standard_ray(s in spec()) {
        let weyl = amplitude(&s.with_rep(Representation::Weyl)).unwrap();
        let std = amplitude(&s.with_rep(Representation::Standard)).unwrap();
        prop_assert!(proportionality_defect(&(representation_change() * weyl), &std) <= 1e-12);
    }

    #[test]
    fn pseudotachyon_mean_speed_is_dual(s in massive(Species::Pseudotachyon)) {
        let v = mean_velocity(&s).unwrap();
        let (k, e) = (s.k(), s.energy().unwrap());
        prop_assert!((norm3(v) - e / k).abs() <= 1e-12);
        prop_assert!(norm3(v) < 1.0);
    }

    #[test]
    fn constraint_systems_vanish(s in prop_oneof![massive(Species::Pseudotachyon), massive(Species::Bradyon)]) {
        for c in constraint_residuals(&s).unwrap() {
            prop_assert!(c.value.abs() <= 1e-11, "{} = {}", c.label, c.value);
        }
    }

    #[test]
    fn discrete_images_solve_target_equations(s in spec()) {
        for kind in DiscreteKind::ALL {
            prop_assert!(apply_discrete(kind, &s).unwrap().residual <= 1e-12);
        }
    }

    #[test]
    fn boosted_amplitudes_stay_solutions(s in spec(), axis in direction(), zeta in -2.0f64..=2.0) {
        let axis = axis.map(|x| x / norm3(axis));
        prop_assert!(apply_boost(&s, axis, zeta).unwrap().residual <= 1e-10);
    }

    #[test]
    fn boost_round_trip(e in -5.0f64..5.0, p in direction(), k in 0.0f64..5.0, axis in direction(), zeta in -2.0f64..=2.0) {
        let axis = axis.map(|x| x / norm3(axis));
        let q = FourVector::from_parts(e, p.map(|x| x * k));
        let back = boost(&boost(&q, axis, zeta).unwrap(), axis, -zeta).unwrap();
        prop_assert!(back.max_abs_diff(&q) <= 1e-12 * 8.0 * (e.abs() + k + 1.0));
    }

    #[test]
    fn infinitesimal_map_is_second_order(raw in prop::array::uniform6(-1.0f64..=1.0), r in rep()) {
        prop_assume!(raw.iter().any(|x| x.abs() > 0.1));
        let build = |scale: f64| {
            let mut om = [[0.0; 4]; 4];
            let mut n = 0;
            for a in 0..4 {
                for b in (a + 1)..4 {
                    om[a][b] = raw[n] * scale;
                    om[b][a] = -raw[n] * scale;
                    n += 1;
                }
            }
            covariance_residual(&transformation_tensor(&om), &lorentz_generator(&om, r).unwrap(), r)
        };
        let ratio = build(1e-3) / build(5e-4);
        prop_assert!((ratio / 4.0 - 1.0).abs() <= 0.1, "ratio {ratio}");
    }

    #[test]
    fn speeds_respect_bounds(m in 0.001f64..100.0, t in 0.0001f64..100.0) {
        let eps = m * t;
        let s = speeds(eps, m).unwrap();
        prop_assert!((0.0..1.0).contains(&s.v));
        prop_assert!(s.w.unwrap() > 1.0);
        prop_assert!((s.v * s.w.unwrap() - 1.0).abs() <= 1e-13);
        prop_assert_eq!(s.u.is_some(), eps >= m);
    }

    #[test]
    fn dispersion_rows_ascend(m in 0.0f64..10.0, lo in 0.0f64..5.0, span in 0.1f64..50.0, steps in 2usize..200) {
        let rows = dispersion_table(m, lo, lo + span, steps).unwrap();
        prop_assert_eq!(rows.len(), steps);
        prop_assert!(rows.windows(2).all(|w| w[1].epsilon > w[0].epsilon));
        prop_assert_eq!(rows.last().unwrap().epsilon, lo + span);
    }

    #[test]
    fn seventeen_digits_round_trip(x in prop::num::f64::NORMAL) {
        let text = format::number(x, 17);
        prop_assert_eq!(text.parse::<f64>().unwrap(), x);
    }

    #[test]
    fn nine_digits_are_close(x in -1e6f64..1e6) {
        prop_assume!(x != 0.0);
        let back: f64 = format::number(x, 9).parse().unwrap();
        prop_assert!(((back - x) / x).abs() <= 5e-9);
    }
}
