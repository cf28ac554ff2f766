//! Closed-form plane-wave amplitudes for bradyons, pseudotachyons and luxons.
//!
//! A plane wave is `N w e^{∓ipx}`: the upper sign is a positive-energy state
//! with amplitude `u_p`, the lower sign a negative-energy state with amplitude
//! `v_p` whose physical momentum is `−p`. Helicity states are labelled by
//! `λ = ±1`; `u_{pλ}` has helicity `λ` and `v_{pλ}` has helicity `−λ`.
//!
//! Amplitudes are built from square roots of the factored shell relation
//! (`ε² = (k+mλ)(k−mλ)` for pseudotachyons, `k² = (ε+m)(ε−m)` for bradyons)
//! instead of the ratio forms, so the zero-energy pseudotachyon (`k = m`) and
//! slow bradyons come out exact rather than as `0/0`.

use std::fmt;

use crate::clifford::{gamma_set, pauli_dot, representation_change, Bispinor, Complex, Matrix4, Representation, ONE};
use crate::error::{Error, Result};
use crate::kinematics::{energy_from_momentum, norm3, scale3, FourVector, MassShell, Species, ThreeVector};

/// Two-component spinor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PauliSpinor(pub [Complex; 2]);

impl PauliSpinor {
    pub fn new(a: Complex, b: Complex) -> Self {
        PauliSpinor([a, b])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0[0].norm_sqr() + self.0[1].norm_sqr()
    }

    pub fn scale(&self, s: f64) -> [Complex; 2] {
        [self.0[0] * s, self.0[1] * s]
    }
}

fn apply2(m: &crate::clifford::Matrix2, v: [Complex; 2]) -> [Complex; 2] {
    [m.0[0][0] * v[0] + m.0[0][1] * v[1], m.0[1][0] * v[0] + m.0[1][1] * v[1]]
}

/// Twice the spin projection on the momentum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Helicity {
    Plus,
    Minus,
}

impl Helicity {
    pub const ALL: [Helicity; 2] = [Helicity::Plus, Helicity::Minus];

    pub fn value(self) -> f64 {
        match self {
            Helicity::Plus => 1.0,
            Helicity::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Helicity {
        match self {
            Helicity::Plus => Helicity::Minus,
            Helicity::Minus => Helicity::Plus,
        }
    }

    pub fn from_value(l: i32) -> Result<Helicity> {
        match l {
            1 => Ok(Helicity::Plus),
            -1 => Ok(Helicity::Minus),
            _ => Err(Error::invalid(format!("helicity must be +1 or -1, got {l}"))),
        }
    }
}

impl fmt::Display for Helicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Helicity::Plus => "+1",
            Helicity::Minus => "-1",
        })
    }
}

/// Which sign of the plane-wave phase: `u` (positive) or `v` (negative energy).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnergySign {
    Positive,
    Negative,
}

impl EnergySign {
    pub const ALL: [EnergySign; 2] = [EnergySign::Positive, EnergySign::Negative];

    pub fn value(self) -> f64 {
        match self {
            EnergySign::Positive => 1.0,
            EnergySign::Negative => -1.0,
        }
    }

    pub fn flip(self) -> EnergySign {
        match self {
            EnergySign::Positive => EnergySign::Negative,
            EnergySign::Negative => EnergySign::Positive,
        }
    }
}

impl fmt::Display for EnergySign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnergySign::Positive => "+",
            EnergySign::Negative => "-",
        })
    }
}

/// Unit eigenvector of `n·σ` with eigenvalue `λ`.
///
/// Phase convention, for polar angles `(ϑ, φ)` of `n`:
/// `θ₊ = (cos ϑ/2, e^{iφ} sin ϑ/2)`, `θ₋ = (−e^{−iφ} sin ϑ/2, cos ϑ/2)`.
pub fn helicity_spinor(direction: ThreeVector, helicity: Helicity) -> Result<PauliSpinor> {
    let n = norm3(direction);
    if n == 0.0 {
        return Err(Error::ZeroMomentum);
    }
    crate::kinematics::check_unit_axis(direction)?;
    let [x, y, z] = direction;
    let cos_half = ((1.0 + z) / 2.0).max(0.0).sqrt();
    let sin_half = ((1.0 - z) / 2.0).max(0.0).sqrt();
    let rho = x.hypot(y);
    let phase = if rho == 0.0 {
        ONE
    } else {
        Complex::new(x / rho, y / rho)
    };
    Ok(match helicity {
        Helicity::Plus => PauliSpinor::new(cos_half.into(), phase * sin_half),
        Helicity::Minus => PauliSpinor::new(-phase.conj() * sin_half, cos_half.into()),
    })
}

/// Labels one exact plane-wave solution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneWaveSpec {
    pub species: Species,
    pub energy_sign: EnergySign,
    pub momentum: ThreeVector,
    pub mass: f64,
    pub helicity: Helicity,
    pub rep: Representation,
}

impl PlaneWaveSpec {
    pub fn new(
        species: Species,
        energy_sign: EnergySign,
        momentum: ThreeVector,
        mass: f64,
        helicity: Helicity,
        rep: Representation,
    ) -> Result<Self> {
        let spec = PlaneWaveSpec {
            species,
            energy_sign,
            momentum,
            mass,
            helicity,
            rep,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks the shell constraints and `|p| > 0`, returning the shell.
    pub fn validate(&self) -> Result<MassShell> {
        if !self.momentum.iter().all(|x| x.is_finite()) {
            return Err(Error::invalid("momentum components must be finite"));
        }
        let shell = MassShell::new(self.species, self.k(), self.mass)?;
        if shell.k == 0.0 {
            return Err(Error::ZeroMomentum);
        }
        Ok(shell)
    }

    pub fn k(&self) -> f64 {
        norm3(self.momentum)
    }

    pub fn energy(&self) -> Result<f64> {
        energy_from_momentum(self.species, self.k(), self.mass)
    }

    /// `p^μ = (ε; p)` labelling the amplitude (not the physical momentum of a `v` state).
    pub fn four_momentum(&self) -> Result<FourVector> {
        Ok(FourVector::from_parts(self.energy()?, self.momentum))
    }

    pub fn direction(&self) -> ThreeVector {
        scale3(self.momentum, 1.0 / self.k())
    }

    /// Helicity eigenvalue of the state: `λ` for `u`, `−λ` for `v`.
    pub fn state_helicity(&self) -> f64 {
        self.helicity.value() * self.energy_sign.value()
    }

    pub fn with_rep(&self, rep: Representation) -> Self {
        PlaneWaveSpec { rep, ..*self }
    }

    pub fn with_sign(&self, energy_sign: EnergySign) -> Self {
        PlaneWaveSpec { energy_sign, ..*self }
    }

    pub fn with_helicity(&self, helicity: Helicity) -> Self {
        PlaneWaveSpec { helicity, ..*self }
    }
}

/// Quantization volume for the one-particle-per-`V` normalization.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalizationContext {
    pub volume: f64,
}

impl Default for NormalizationContext {
    fn default() -> Self {
        NormalizationContext { volume: 1.0 }
    }
}

impl NormalizationContext {
    pub fn new(volume: f64) -> Result<Self> {
        if !volume.is_finite() || volume <= 0.0 {
            return Err(Error::invalid(format!("volume must be finite and > 0, got {volume}")));
        }
        Ok(NormalizationContext { volume })
    }
}

fn stack(upper: [Complex; 2], lower: [Complex; 2]) -> Bispinor {
    Bispinor::from_halves(upper, lower)
}

/// Helicity amplitude `u_{pλ}` or `v_{pλ}` for `spec`.
///
/// Norms are `w†w = 2k` for pseudotachyons and luxons and `2ε` for bradyons.
pub fn amplitude(spec: &PlaneWaveSpec) -> Result<Bispinor> {
    let shell = spec.validate()?;
    let (k, m, e) = (shell.k, shell.m, shell.epsilon);
    let l = spec.helicity.value();
    let n = spec.direction();
    let th = helicity_spinor(n, spec.helicity)?;
    let thm = helicity_spinor(n, spec.helicity.flip())?;
    let sq = |x: f64| x.max(0.0).sqrt();
    use EnergySign::*;
    use Representation::*;
    // luxons are the m = 0 member of the pseudotachyon family
    let pt_like = matches!(spec.species, Species::Pseudotachyon | Species::Luxon);
    let w = match (pt_like, spec.rep, spec.energy_sign) {
        (true, Standard, Positive) => stack(th.scale(sq(k + m * l)), th.scale(l * sq(k - m * l))),
        (true, Standard, Negative) => stack(thm.scale(-l * sq(k + m * l)), thm.scale(sq(k - m * l))),
        (true, Weyl, Positive) => stack(th.scale(sq(k + e * l)), th.scale(l * sq(k - e * l))),
        (true, Weyl, Negative) => stack(thm.scale(sq(k - e * l)), thm.scale(l * sq(k + e * l))),
        (false, Standard, Positive) => stack(th.scale(sq(e + m)), th.scale(l * sq(e - m))),
        (false, Standard, Negative) => stack(thm.scale(-l * sq(e - m)), thm.scale(sq(e + m))),
        (false, Weyl, Positive) => stack(th.scale(sq(e + k * l)), th.scale(sq(e - k * l))),
        (false, Weyl, Negative) => stack(thm.scale(-sq(e - k * l)), thm.scale(sq(e + k * l))),
    };
    Ok(w)
}

/// Amplitude parameterized by a free two-component spinor instead of helicity.
///
/// Standard basis: `u = (φ; Mφ)`, `v = (Mχ; χ)` with `M = (p·σ − m)/ε` for
/// pseudotachyons and luxons, `M = p·σ/(ε + m)` for bradyons.
/// Weyl basis: `u = (ξ; Aξ)`, `v = (Bη; η)` with `A = (p·σ − ε)/m`,
/// `B = −(p·σ + ε)/m` for pseudotachyons and `A = (ε − p·σ)/m`,
/// `B = −(ε + p·σ)/m` for bradyons.
pub fn amplitude_from_spinor(
    species: Species,
    energy_sign: EnergySign,
    p: ThreeVector,
    m: f64,
    spinor: PauliSpinor,
    rep: Representation,
) -> Result<Bispinor> {
    if !p.iter().all(|x| x.is_finite()) {
        return Err(Error::invalid("momentum components must be finite"));
    }
    let shell = MassShell::new(species, norm3(p), m)?;
    let e = shell.epsilon;
    let ps = pauli_dot(p);
    let id = crate::clifford::Matrix2::IDENTITY;
    let pt_like = matches!(species, Species::Pseudotachyon | Species::Luxon);
    let s = spinor.0;
    let other = match rep {
        Representation::Standard => {
            let map = if pt_like {
                if e == 0.0 {
                    return Err(Error::TranscendentDivision);
                }
                (ps + id.scale((-m).into())).scale((1.0 / e).into())
            } else {
                ps.scale((1.0 / (e + m)).into())
            };
            apply2(&map, s)
        }
        Representation::Weyl => {
            if m == 0.0 {
                return Err(Error::MasslessSpecies);
            }
            let eps = id.scale(e.into());
            let map = match (pt_like, energy_sign) {
                (true, EnergySign::Positive) => ps + -eps,
                (true, EnergySign::Negative) => -(ps + eps),
                (false, EnergySign::Positive) => eps + -ps,
                (false, EnergySign::Negative) => -(eps + ps),
            };
            apply2(&map.scale((1.0 / m).into()), s)
        }
    };
    Ok(match energy_sign {
        EnergySign::Positive => stack(s, other),
        EnergySign::Negative => stack(other, s),
    })
}

/// Momentum-space wave operator for a given label momentum `p = (ε; p)`.
///
/// Pseudotachyon: `p̸ ∓ mγ⁵`; bradyon: `p̸ ∓ m`; luxon: `p̸`; the upper sign
/// annihilates `u`, the lower `v`.
pub fn dirac_operator_at(
    species: Species,
    energy_sign: EnergySign,
    p: &FourVector,
    m: f64,
    rep: Representation,
) -> Matrix4 {
    let g = gamma_set(rep);
    let slash = g.slash(p);
    let mass_term = match species {
        Species::Pseudotachyon => g.gamma5 * m,
        Species::Bradyon => Matrix4::identity() * m,
        Species::Luxon => Matrix4::ZERO,
    };
    match energy_sign {
        EnergySign::Positive => slash - mass_term,
        EnergySign::Negative => slash + mass_term,
    }
}

pub fn dirac_operator(spec: &PlaneWaveSpec) -> Result<Matrix4> {
    let p = spec.four_momentum()?;
    Ok(dirac_operator_at(
        spec.species,
        spec.energy_sign,
        &p,
        spec.mass,
        spec.rep,
    ))
}

/// `‖D w‖ / ‖w‖`.
pub fn dirac_residual(spec: &PlaneWaveSpec, w: &Bispinor) -> Result<f64> {
    let d = dirac_operator(spec)?;
    Ok((d * *w).norm() / w.norm())
}

/// `N = 1/√(2kV)` for pseudotachyons and luxons, `1/√(2εV)` for bradyons.
pub fn normalization_factor(spec: &PlaneWaveSpec, ctx: &NormalizationContext) -> Result<f64> {
    let shell = spec.validate()?;
    let scale = match spec.species {
        Species::Bradyon => shell.epsilon,
        Species::Pseudotachyon | Species::Luxon => shell.k,
    };
    Ok(1.0 / (2.0 * scale * ctx.volume).sqrt())
}

pub fn convert_representation(b: &Bispinor, from: Representation, to: Representation) -> Bispinor {
    if from == to {
        *b
    } else {
        // W is an involution, so the same matrix serves both directions
        representation_change() * *b
    }
}

/// Helper for building a Pauli spinor from real components.
pub fn pauli_spinor(a: f64, b: f64) -> PauliSpinor {
    PauliSpinor::new(a.into(), b.into())
}
