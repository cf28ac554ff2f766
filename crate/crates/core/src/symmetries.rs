//! Discrete symmetries (P, C, T, 4-inversion) and Lorentz spinor maps.
//!
//! C and T are anti-linear: they are modelled as a unitary matrix together
//! with a flag saying the argument is complex-conjugated first. Every
//! operator is checked in momentum space by applying it to an amplitude and
//! measuring how well the image solves the wave equation it should solve.
//!
//! | op | image            | equation of the image               |
//! |----|------------------|-------------------------------------|
//! | P  | `U_P w`          | same energy sign, momentum `−p`      |
//! | C  | `U_C w*`         | opposite energy sign, momentum `p`   |
//! | T  | `U_T w*`         | same energy sign, momentum `−p`      |
//! | I  | `U_I w`          | opposite energy sign, momentum `p`   |

use std::fmt;

use crate::clifford::{gamma_set, Bispinor, Complex, Matrix4, Representation, I, METRIC};
use crate::error::{Error, Result};
use crate::kinematics::{self, scale3, FourVector, Species, ThreeVector};
use crate::spinors::{amplitude, dirac_operator_at, EnergySign, PlaneWaveSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiscreteKind {
    Parity,
    ChargeConjugation,
    TimeInversion,
    FourInversion,
}

impl DiscreteKind {
    pub const ALL: [DiscreteKind; 4] = [
        DiscreteKind::Parity,
        DiscreteKind::ChargeConjugation,
        DiscreteKind::TimeInversion,
        DiscreteKind::FourInversion,
    ];

    /// C and T act on the complex conjugate of the wave function.
    pub fn conjugates_argument(self) -> bool {
        matches!(self, DiscreteKind::ChargeConjugation | DiscreteKind::TimeInversion)
    }

    pub fn letter(self) -> char {
        match self {
            DiscreteKind::Parity => 'P',
            DiscreteKind::ChargeConjugation => 'C',
            DiscreteKind::TimeInversion => 'T',
            DiscreteKind::FourInversion => 'I',
        }
    }
}

impl fmt::Display for DiscreteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sector {
    Bradyonic,
    Pseudotachyonic,
}

impl Sector {
    pub const ALL: [Sector; 2] = [Sector::Bradyonic, Sector::Pseudotachyonic];

    /// Luxons belong to both; they are filed with the pseudotachyons.
    pub fn of(species: Species) -> Sector {
        match species {
            Species::Bradyon => Sector::Bradyonic,
            Species::Pseudotachyon | Species::Luxon => Sector::Pseudotachyonic,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryMatrix {
    pub kind: DiscreteKind,
    pub sector: Sector,
    pub rep: Representation,
    pub matrix: Matrix4,
    pub conjugates_argument: bool,
}

impl SymmetryMatrix {
    pub fn act(&self, w: &Bispinor) -> Bispinor {
        if self.conjugates_argument {
            self.matrix * w.conj()
        } else {
            self.matrix * *w
        }
    }
}

/// Operators: bradyonic `P = γ⁰`, `C = iγ²`, `T = iγ¹γ³`, `I = iγ⁵`;
/// pseudotachyonic P and C pick up a right factor `γ⁵`.
pub fn discrete_operator(kind: DiscreteKind, sector: Sector, rep: Representation) -> SymmetryMatrix {
    let g = gamma_set(rep);
    let matrix = match (kind, sector) {
        (DiscreteKind::Parity, Sector::Bradyonic) => g.gamma[0],
        (DiscreteKind::Parity, Sector::Pseudotachyonic) => g.gamma[0] * g.gamma5,
        (DiscreteKind::ChargeConjugation, Sector::Bradyonic) => g.gamma[2] * I,
        (DiscreteKind::ChargeConjugation, Sector::Pseudotachyonic) => g.gamma[2] * g.gamma5 * I,
        (DiscreteKind::TimeInversion, _) => g.gamma[1] * g.gamma[3] * I,
        (DiscreteKind::FourInversion, _) => g.gamma5 * I,
    };
    SymmetryMatrix {
        kind,
        sector,
        rep,
        matrix,
        conjugates_argument: kind.conjugates_argument(),
    }
}

/// The transformed amplitude and the wave equation it was checked against.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteImage {
    pub transformed: Bispinor,
    pub target_sign: EnergySign,
    pub target_momentum: FourVector,
    /// `‖D_target · transformed‖ / ‖transformed‖`.
    pub residual: f64,
}

pub fn apply_discrete(kind: DiscreteKind, spec: &PlaneWaveSpec) -> Result<DiscreteImage> {
    let w = amplitude(spec)?;
    let p = spec.four_momentum()?;
    let op = discrete_operator(kind, Sector::of(spec.species), spec.rep);
    let transformed = op.act(&w);
    let reflected = FourVector::from_parts(p.e, scale3(p.momentum(), -1.0));
    let (target_sign, target_momentum) = match kind {
        DiscreteKind::Parity | DiscreteKind::TimeInversion => (spec.energy_sign, reflected),
        DiscreteKind::ChargeConjugation | DiscreteKind::FourInversion => (spec.energy_sign.flip(), p),
    };
    let d = dirac_operator_at(spec.species, target_sign, &target_momentum, spec.mass, spec.rep);
    let residual = (d * transformed).norm() / transformed.norm();
    Ok(DiscreteImage {
        transformed,
        target_sign,
        target_momentum,
        residual,
    })
}

/// `U_P U_C U_T` and its phase relative to `U_I = iγ⁵`.
#[derive(Clone, Debug, PartialEq)]
pub struct PctProduct {
    pub matrix: Matrix4,
    /// `c` with `U_P U_C U_T = c · iγ⁵`.
    pub phase: Complex,
    /// `‖U_P U_C U_T − c · iγ⁵‖_F`, zero when the product is a pure phase times `U_I`.
    pub defect: f64,
}

pub fn pct_product(sector: Sector, rep: Representation) -> PctProduct {
    let op = |k| discrete_operator(k, sector, rep).matrix;
    let matrix = op(DiscreteKind::Parity) * op(DiscreteKind::ChargeConjugation) * op(DiscreteKind::TimeInversion);
    let inversion = op(DiscreteKind::FourInversion);
    // U_I is unitary, so tr(U_I† M)/4 projects M onto U_I
    let phase = (inversion.dagger() * matrix).trace() / 4.0;
    let defect = matrix.distance(&(inversion * phase));
    PctProduct { matrix, phase, defect }
}

fn check_antisymmetric(omega: &[[f64; 4]; 4]) -> Result<()> {
    let scale = omega.iter().flatten().fold(0.0f64, |a, x| a.max(x.abs()));
    for a in 0..4 {
        for b in 0..4 {
            let (x, y) = (omega[a][b], omega[b][a]);
            if !x.is_finite() || (x + y).abs() > 1e-14 * scale {
                return Err(Error::invalid(format!(
                    "delta_omega must be antisymmetric and finite; entries ({a},{b}) = {x}, ({b},{a}) = {y}"
                )));
            }
        }
    }
    Ok(())
}

/// `(i/4) σ_{μν} ω^{μν}` in the standard representation.
fn generator(omega: &[[f64; 4]; 4], rep: Representation) -> Matrix4 {
    let g = gamma_set(rep);
    let mut acc = Matrix4::ZERO;
    for mu in 0..4 {
        for nu in 0..4 {
            if omega[mu][nu] != 0.0 {
                // indices are in range, so this cannot fail
                let s = g.sigma_tensor(mu, nu).expect("index in range");
                acc += s * omega[mu][nu];
            }
        }
    }
    acc * Complex::new(0.0, 0.25)
}

/// Infinitesimal spinor map `S = I + (i/4) σ_{μν} Δω^{μν}` for the coordinate
/// change `x' = a x`, `a^ν_μ = δ^ν_μ + Δω^ν_μ`, with `ψ(x) = S ψ'(x')`.
///
/// With this sign `γ^μ a^ν_μ S = S γ^ν` holds up to `O(Δω²)`.
pub fn lorentz_generator(delta_omega: &[[f64; 4]; 4], rep: Representation) -> Result<Matrix4> {
    check_antisymmetric(delta_omega)?;
    Ok(Matrix4::identity() + generator(delta_omega, rep))
}

/// `a^ν_μ = δ^ν_μ + Δω^{νρ} g_{ρμ}`.
pub fn transformation_tensor(delta_omega: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    std::array::from_fn(|nu| {
        std::array::from_fn(|mu| {
            let delta = if nu == mu { 1.0 } else { 0.0 };
            delta + delta_omega[nu][mu] * METRIC[mu]
        })
    })
}

/// `max_ν ‖γ^μ a^ν_μ S − S γ^ν‖_F`.
pub fn covariance_residual(a: &[[f64; 4]; 4], s: &Matrix4, rep: Representation) -> f64 {
    let g = gamma_set(rep);
    (0..4)
        .map(|nu| {
            let lhs = (0..4).fold(Matrix4::ZERO, |acc, mu| acc + g.gamma[mu] * a[nu][mu]) * *s;
            lhs.distance(&(*s * g.gamma[nu]))
        })
        .fold(0.0, f64::max)
}

/// `Δω^{μν}` of a finite boost: `ω^{0i} = −ζ n_i`, `ω^{i0} = ζ n_i`.
pub fn boost_parameters(axis: ThreeVector, rapidity: f64) -> [[f64; 4]; 4] {
    let mut omega = [[0.0; 4]; 4];
    for i in 0..3 {
        omega[0][i + 1] = -rapidity * axis[i];
        omega[i + 1][0] = rapidity * axis[i];
    }
    omega
}

/// Spinor map of [`kinematics::boost`]: `S p̸ S⁻¹ = (Λp)̸`, so `S w` solves
/// the wave equation at the boosted momentum.
///
/// Computed as the matrix exponential of the generator; equals
/// `cosh(ζ/2) − sinh(ζ/2) n·α`.
pub fn lorentz_boost_spinor(axis: ThreeVector, rapidity: f64, rep: Representation) -> Result<Matrix4> {
    kinematics::check_unit_axis(axis)?;
    if !rapidity.is_finite() {
        return Err(Error::invalid("rapidity must be finite"));
    }
    Ok(generator(&boost_parameters(axis, rapidity), rep).exp())
}

/// A boosted amplitude with its covariance residual.
#[derive(Clone, Debug, PartialEq)]
pub struct BoostImage {
    pub transformed: Bispinor,
    pub boosted_momentum: FourVector,
    /// `‖D(Λp) S w‖ / ‖S w‖`.
    pub residual: f64,
}

pub fn apply_boost(spec: &PlaneWaveSpec, axis: ThreeVector, rapidity: f64) -> Result<BoostImage> {
    let w = amplitude(spec)?;
    let p = spec.four_momentum()?;
    let s = lorentz_boost_spinor(axis, rapidity, spec.rep)?;
    let boosted_momentum = kinematics::boost(&p, axis, rapidity)?;
    let transformed = s * w;
    let d = dirac_operator_at(spec.species, spec.energy_sign, &boosted_momentum, spec.mass, spec.rep);
    let residual = (d * transformed).norm() / transformed.norm();
    Ok(BoostImage {
        transformed,
        boosted_momentum,
        residual,
    })
}

pub use crate::verify::run_symmetry_suite;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::representation_change;
    use crate::spinors::Helicity;
    use Representation::*;

    fn pt_u() -> PlaneWaveSpec {
        PlaneWaveSpec::new(
            Species::Pseudotachyon,
            EnergySign::Positive,
            [0.0, 0.0, 5.0],
            3.0,
            Helicity::Plus,
            Standard,
        )
        .unwrap()
    }

    #[test]
    fn operator_spot_values() {
        let g = gamma_set(Standard);
        assert_eq!(
            discrete_operator(DiscreteKind::Parity, Sector::Pseudotachyonic, Standard).matrix,
            g.gamma[0] * g.gamma5
        );
        assert_eq!(
            discrete_operator(DiscreteKind::Parity, Sector::Bradyonic, Standard).matrix,
            g.gamma[0]
        );
        for rep in Representation::ALL {
            let gs = gamma_set(rep);
            assert_eq!(
                discrete_operator(DiscreteKind::FourInversion, Sector::Pseudotachyonic, rep).matrix,
                gs.gamma5 * I
            );
        }
        assert!(discrete_operator(DiscreteKind::TimeInversion, Sector::Bradyonic, Weyl).conjugates_argument);
        assert!(!discrete_operator(DiscreteKind::Parity, Sector::Bradyonic, Weyl).conjugates_argument);
    }

    #[test]
    fn operators_are_unitary_and_weyl_ones_are_w_conjugates() {
        let w = representation_change();
        for kind in DiscreteKind::ALL {
            for sector in Sector::ALL {
                for rep in Representation::ALL {
                    let u = discrete_operator(kind, sector, rep).matrix;
                    assert!((u.dagger() * u).distance(&Matrix4::identity()) <= 1e-14);
                }
                let std = discrete_operator(kind, sector, Standard).matrix;
                let weyl = discrete_operator(kind, sector, Weyl).matrix;
                assert!((w * weyl * w).distance(&std) <= 1e-14);
            }
        }
    }

    #[test]
    fn intertwining_spot_values() {
        let u = pt_u();
        let p = apply_discrete(DiscreteKind::Parity, &u).unwrap();
        assert_eq!(p.target_momentum, FourVector::new(4.0, 0.0, 0.0, -5.0));
        assert_eq!(p.target_sign, EnergySign::Positive);
        assert!(p.residual <= 1e-12);
        let c = apply_discrete(DiscreteKind::ChargeConjugation, &u).unwrap();
        assert_eq!(c.target_sign, EnergySign::Negative);
        assert!(c.residual <= 1e-12);
        let t = apply_discrete(DiscreteKind::TimeInversion, &u).unwrap();
        assert_eq!(t.target_momentum, FourVector::new(4.0, 0.0, 0.0, -5.0));
        assert!(t.residual <= 1e-12);
        let i = apply_discrete(DiscreteKind::FourInversion, &u).unwrap();
        assert!(i.residual <= 1e-12);
    }

    #[test]
    fn wrong_sector_operator_fails_the_check() {
        // the bradyonic parity operator does not map pseudotachyon solutions to solutions
        let u = pt_u();
        let w = amplitude(&u).unwrap();
        let img = discrete_operator(DiscreteKind::Parity, Sector::Bradyonic, Standard).matrix * w;
        let d = dirac_operator_at(
            Species::Pseudotachyon,
            EnergySign::Positive,
            &FourVector::new(4.0, 0.0, 0.0, -5.0),
            3.0,
            Standard,
        );
        assert!((d * img).norm() / img.norm() > 0.1);
    }

    #[test]
    fn pct_equals_four_inversion() {
        let g = gamma_set(Standard);
        let pt = pct_product(Sector::Pseudotachyonic, Standard);
        assert!(pt.matrix.distance(&(g.gamma5 * I)) <= 1e-14);
        assert!((pt.phase - 1.0).norm() <= 1e-15);
        let weyl = pct_product(Sector::Pseudotachyonic, Weyl);
        assert!(weyl.matrix.distance(&(gamma_set(Weyl).gamma5 * I)) <= 1e-14);
        let br = pct_product(Sector::Bradyonic, Standard);
        assert!(br.defect <= 1e-14);
        assert!((br.phase + 1.0).norm() <= 1e-15);
        assert!((br.matrix.dagger() * br.matrix).distance(&Matrix4::identity()) <= 1e-14);
    }

    #[test]
    fn generator_spot_values() {
        let zero = [[0.0; 4]; 4];
        assert_eq!(lorentz_generator(&zero, Standard).unwrap(), Matrix4::identity());
        let mut bad = zero;
        bad[0][1] = 1e-3;
        assert!(lorentz_generator(&bad, Standard).is_err());
    }

    fn sample_omega(scale: f64) -> [[f64; 4]; 4] {
        let raw = [0.3, -0.7, 0.2, 0.9, -0.4, 0.5];
        let mut om = [[0.0; 4]; 4];
        let mut n = 0;
        for a in 0..4 {
            for b in (a + 1)..4 {
                om[a][b] = raw[n] * scale;
                om[b][a] = -raw[n] * scale;
                n += 1;
            }
        }
        om
    }

    #[test]
    fn first_order_covariance_is_quadratic() {
        for rep in Representation::ALL {
            let om = sample_omega(1e-3);
            let half = sample_omega(5e-4);
            let r1 = covariance_residual(&transformation_tensor(&om), &lorentz_generator(&om, rep).unwrap(), rep);
            let r2 = covariance_residual(
                &transformation_tensor(&half),
                &lorentz_generator(&half, rep).unwrap(),
                rep,
            );
            assert!(((r1 / r2) - 4.0).abs() <= 0.4, "ratio {}", r1 / r2);
            assert!(r1 <= 10.0 * 1e-6 * 6.0);
            let s = lorentz_generator(&om, rep).unwrap();
            assert!(s.commutator(&gamma_set(rep).gamma5).frobenius_norm() <= 1e-14);
        }
    }

    #[test]
    fn finite_boost_matches_closed_form() {
        let axis = [0.6, 0.0, 0.8];
        let zeta = 1.4;
        let g = gamma_set(Standard);
        let s = lorentz_boost_spinor(axis, zeta, Standard).unwrap();
        let closed = Matrix4::identity() * (zeta / 2.0).cosh() - g.alpha_dot(axis) * (zeta / 2.0).sinh();
        assert!(s.distance(&closed) <= 1e-13);
        assert!((s.det() - 1.0).norm() <= 1e-12);
        assert_eq!(lorentz_boost_spinor(axis, 0.0, Standard).unwrap(), Matrix4::identity());
        assert!(lorentz_boost_spinor([1.0, 1.0, 0.0], 0.3, Standard).is_err());
    }

    #[test]
    fn finite_boost_satisfies_exact_covariance() {
        // exact form of the covariance condition: a is the inverse boost
        let axis = [0.0, 0.6, 0.8];
        let s = lorentz_boost_spinor(axis, 0.9, Standard).unwrap();
        let a = kinematics::boost_matrix(axis, -0.9).unwrap();
        assert!(covariance_residual(&a, &s, Standard) <= 1e-13);
    }

    #[test]
    fn boosted_solution_spot_value() {
        let img = apply_boost(&pt_u(), [0.0, 0.0, 1.0], 0.5).unwrap();
        assert!(img.residual <= 1e-10);
        let a = lorentz_boost_spinor([0.0, 0.0, 1.0], 0.3, Standard).unwrap();
        let b = lorentz_boost_spinor([0.0, 0.0, 1.0], 0.8, Standard).unwrap();
        let ab = lorentz_boost_spinor([0.0, 0.0, 1.0], 1.1, Standard).unwrap();
        assert!((a * b).distance(&ab) <= 1e-12);
    }
}
