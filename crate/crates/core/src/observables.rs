//! Hamiltonians and plane-wave expectation values.
//!
//! Every expectation value is a ratio of bilinears in the amplitude, e.g.
//! `⟨α⟩ = w†αw / w†w`; the normalization volume cancels and never enters.
//! Each quantity is computed from the actual amplitude and can be compared
//! with its closed form (`*_closed_form` functions).

use crate::clifford::{gamma_set, Bispinor, Matrix4, Representation};
use crate::error::{Error, Result};
use crate::kinematics::{dual_momentum, energy_from_momentum, norm3, scale3, FourVector, Species, ThreeVector};
use crate::spinors::{amplitude, EnergySign, PlaneWaveSpec};

/// Momentum-space hamiltonian: `α·p + mα⁵` (pseudotachyon), `α·p + mγ⁰`
/// (bradyon), `α·p` (luxon).
pub fn hamiltonian(species: Species, p: ThreeVector, m: f64, rep: Representation) -> Result<Matrix4> {
    energy_from_momentum(species, norm3(p), m)?;
    let g = gamma_set(rep);
    let kinetic = g.alpha_dot(p);
    Ok(match species {
        Species::Pseudotachyon => kinetic + g.alpha5 * m,
        Species::Bradyon => kinetic + g.gamma[0] * m,
        Species::Luxon => kinetic,
    })
}

/// `‖H† − ηHη‖_F` with `η = I` for bradyons and luxons and `η = γ⁵` for
/// pseudotachyons, whose mass term `mα⁵` is anti-hermitian.
pub fn hermiticity_defect(species: Species, h: &Matrix4, rep: Representation) -> f64 {
    let target = match species {
        Species::Pseudotachyon => {
            let g5 = gamma_set(rep).gamma5;
            g5 * *h * g5
        }
        _ => *h,
    };
    h.dagger().distance(&target)
}

/// Relative residual of the energy eigen-equation.
///
/// `u`: `‖H(p)u − εu‖/‖u‖`. `v`: `‖H(−p)v + εv‖/‖v‖`, since the
/// negative-energy wave carries momentum `−p`.
pub fn energy_eigencheck(spec: &PlaneWaveSpec) -> Result<f64> {
    let w = amplitude(spec)?;
    let e = spec.energy()?;
    let (p, target) = match spec.energy_sign {
        EnergySign::Positive => (spec.momentum, e),
        EnergySign::Negative => (scale3(spec.momentum, -1.0), -e),
    };
    let h = hamiltonian(spec.species, p, spec.mass, spec.rep)?;
    let image = h * w;
    Ok((image - w.scale(target.into())).norm() / w.norm())
}

fn expectation(w: &Bispinor, op: &Matrix4) -> f64 {
    // hermitian operators only; the imaginary part is rounding noise
    w.inner(&(*op * *w)).re / w.norm_sqr()
}

/// `⟨α⟩ = w†αw / w†w` from the amplitude.
pub fn mean_velocity(spec: &PlaneWaveSpec) -> Result<ThreeVector> {
    let w = amplitude(spec)?;
    let g = gamma_set(spec.rep);
    Ok(std::array::from_fn(|i| expectation(&w, &g.alpha[i])))
}

/// `εp/k²` (pseudotachyon, luxon) or `p/ε` (bradyon).
pub fn mean_velocity_closed_form(spec: &PlaneWaveSpec) -> Result<ThreeVector> {
    let shell = spec.validate()?;
    Ok(match spec.species {
        Species::Bradyon => scale3(spec.momentum, 1.0 / shell.epsilon),
        Species::Pseudotachyon | Species::Luxon => scale3(spec.momentum, shell.epsilon / (shell.k * shell.k)),
    })
}

/// `ε/m` for bradyons, `k/m` for pseudotachyons.
fn four_vector_prefactor(spec: &PlaneWaveSpec) -> Result<f64> {
    let shell = spec.validate()?;
    match spec.species {
        Species::Luxon => Err(Error::MasslessSpecies),
        _ if shell.m == 0.0 => Err(Error::MasslessSpecies),
        Species::Bradyon => Ok(shell.epsilon / shell.m),
        Species::Pseudotachyon => Ok(shell.k / shell.m),
    }
}

fn bilinear_four_vector(spec: &PlaneWaveSpec, with_gamma5: bool) -> Result<FourVector> {
    let prefactor = four_vector_prefactor(spec)?;
    let w = amplitude(spec)?;
    let g = gamma_set(spec.rep);
    let c: [f64; 4] = std::array::from_fn(|mu| {
        // w̄ Γ w = w† γ⁰ Γ w
        let mut op = g.gamma[0] * g.gamma[mu];
        if with_gamma5 {
            op = op * g.gamma5;
        }
        prefactor * expectation(&w, &op)
    });
    Ok(FourVector::new(c[0], c[1], c[2], c[3]))
}

/// `v̄^μ = (ε/m or k/m) · w̄γ^μw / w†w`.
pub fn mean_four_velocity(spec: &PlaneWaveSpec) -> Result<FourVector> {
    bilinear_four_vector(spec, false)
}

/// `p/m` (bradyon) or `p̃/m` (pseudotachyon).
pub fn mean_four_velocity_closed_form(spec: &PlaneWaveSpec) -> Result<FourVector> {
    let m = spec.mass;
    four_vector_prefactor(spec)?;
    let p = spec.four_momentum()?;
    Ok(match spec.species {
        Species::Bradyon => p * (1.0 / m),
        _ => dual_momentum(&p)? * (1.0 / m),
    })
}

/// `s̄^μ = (ε/m or k/m) · w̄γ^μγ⁵w / w†w`.
pub fn mean_spin_four_vector(spec: &PlaneWaveSpec) -> Result<FourVector> {
    bilinear_four_vector(spec, true)
}

/// `λ' p̃/m` (bradyon) or `λ' p/m` (pseudotachyon), where `λ'` is the state
/// helicity (`λ` for `u`, `−λ` for `v`).
pub fn mean_spin_four_vector_closed_form(spec: &PlaneWaveSpec) -> Result<FourVector> {
    let m = spec.mass;
    four_vector_prefactor(spec)?;
    let p = spec.four_momentum()?;
    let l = spec.state_helicity();
    Ok(match spec.species {
        Species::Bradyon => dual_momentum(&p)? * (l / m),
        _ => p * (l / m),
    })
}

/// One line of a kinematic constraint system, `value` should vanish.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstraintResidual {
    pub label: &'static str,
    pub value: f64,
}

/// Residuals of the species' constraint system, using the bilinear
/// four-vectors of the actual amplitude.
///
/// Bradyon: `p² − m²`, `p·v̄ − m`, `p·s̄`.
/// Pseudotachyon: `p² + m²`, `p·v̄`, `p·s̄ + mλ'`.
pub fn constraint_residuals(spec: &PlaneWaveSpec) -> Result<Vec<ConstraintResidual>> {
    let p = spec.four_momentum()?;
    let v = mean_four_velocity(spec)?;
    let s = mean_spin_four_vector(spec)?;
    let m = spec.mass;
    let r = |label, value| ConstraintResidual { label, value };
    Ok(match spec.species {
        Species::Bradyon => vec![
            r("p^2 - m^2", p.norm_sqr() - m * m),
            r("p.vbar - m", p.dot(&v) - m),
            r("p.sbar", p.dot(&s)),
        ],
        _ => vec![
            r("p^2 + m^2", p.norm_sqr() + m * m),
            r("p.vbar", p.dot(&v)),
            r("p.sbar + m*lambda", p.dot(&s) + m * spec.state_helicity()),
        ],
    })
}

/// Everything measurable on one plane wave.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpectationReport {
    pub mean_velocity: ThreeVector,
    /// Absent for luxons.
    pub mean_four_velocity: Option<FourVector>,
    pub mean_spin_four_vector: Option<FourVector>,
    pub constraint_residuals: Vec<ConstraintResidual>,
    /// Largest componentwise gap between bilinear values and closed forms.
    pub closed_form_defect: f64,
}

pub fn expectation_report(spec: &PlaneWaveSpec) -> Result<ExpectationReport> {
    let mean_velocity = mean_velocity(spec)?;
    let closed = mean_velocity_closed_form(spec)?;
    let mut defect = (0..3).map(|i| (mean_velocity[i] - closed[i]).abs()).fold(0.0, f64::max);
    let (four_velocity, spin, residuals) = if spec.species == Species::Luxon || spec.mass == 0.0 {
        (None, None, Vec::new())
    } else {
        let v = mean_four_velocity(spec)?;
        let s = mean_spin_four_vector(spec)?;
        defect = defect
            .max(v.max_abs_diff(&mean_four_velocity_closed_form(spec)?))
            .max(s.max_abs_diff(&mean_spin_four_vector_closed_form(spec)?));
        (Some(v), Some(s), constraint_residuals(spec)?)
    };
    Ok(ExpectationReport {
        mean_velocity,
        mean_four_velocity: four_velocity,
        mean_spin_four_vector: spin,
        constraint_residuals: residuals,
        closed_form_defect: defect,
    })
}
