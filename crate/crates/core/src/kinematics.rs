//! Four-vectors, mass shells, the dual momentum and the three energy–speed laws.
//!
//! Units are `ħ = c = 1`. Speeds are fractions of `c`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub type ThreeVector = [f64; 3];

pub fn dot3(a: ThreeVector, b: ThreeVector) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn norm3(a: ThreeVector) -> f64 {
    dot3(a, a).sqrt()
}

pub fn scale3(a: ThreeVector, s: f64) -> ThreeVector {
    a.map(|x| x * s)
}

/// Tolerance on `|axis| = 1` for boost and direction arguments.
pub const UNIT_AXIS_TOL: f64 = 1e-12;

pub(crate) fn check_unit_axis(axis: ThreeVector) -> Result<()> {
    let n = norm3(axis);
    if !n.is_finite() || (n - 1.0).abs() > UNIT_AXIS_TOL {
        return Err(Error::invalid(format!("axis must be a unit vector, |axis| = {n}")));
    }
    Ok(())
}

/// `(ε; p)` with contravariant components.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct FourVector {
    pub e: f64,
    pub px: f64,
    pub py: f64,
    pub pz: f64,
}

impl FourVector {
    pub const fn new(e: f64, px: f64, py: f64, pz: f64) -> Self {
        FourVector { e, px, py, pz }
    }

    pub fn from_parts(e: f64, p: ThreeVector) -> Self {
        FourVector::new(e, p[0], p[1], p[2])
    }

    pub fn components(&self) -> [f64; 4] {
        [self.e, self.px, self.py, self.pz]
    }

    pub fn momentum(&self) -> ThreeVector {
        [self.px, self.py, self.pz]
    }

    /// `k = |p|`.
    pub fn k(&self) -> f64 {
        norm3(self.momentum())
    }

    pub fn dot(&self, other: &FourVector) -> f64 {
        minkowski_dot(self, other)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.dot(self)
    }

    pub fn is_finite(&self) -> bool {
        self.components().iter().all(|x| x.is_finite())
    }

    pub fn max_abs_diff(&self, other: &FourVector) -> f64 {
        let (a, b) = (self.components(), other.components());
        (0..4).map(|i| (a[i] - b[i]).abs()).fold(0.0, f64::max)
    }
}

impl fmt::Display for FourVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // adding +0.0 turns -0.0 into 0.0
        let [e, x, y, z] = self.components().map(|c| c + 0.0);
        write!(f, "({e}; {x}, {y}, {z})")
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, o: FourVector) -> FourVector {
        FourVector::new(self.e + o.e, self.px + o.px, self.py + o.py, self.pz + o.pz)
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, o: FourVector) -> FourVector {
        FourVector::new(self.e - o.e, self.px - o.px, self.py - o.py, self.pz - o.pz)
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        self * -1.0
    }
}

impl Mul<f64> for FourVector {
    type Output = FourVector;
    fn mul(self, s: f64) -> FourVector {
        FourVector::new(self.e * s, self.px * s, self.py * s, self.pz * s)
    }
}

/// `a·b = a⁰b⁰ − a⃗·b⃗`.
pub fn minkowski_dot(a: &FourVector, b: &FourVector) -> f64 {
    a.e * b.e - dot3(a.momentum(), b.momentum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Species {
    /// Ordinary massive particle, `p² = m²`.
    Bradyon,
    /// Spin-½ particle with `p² = −m²`.
    Pseudotachyon,
    /// Massless, `p² = 0`.
    Luxon,
}

impl Species {
    pub const ALL: [Species; 3] = [Species::Bradyon, Species::Pseudotachyon, Species::Luxon];
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Species::Bradyon => "bradyon",
            Species::Pseudotachyon => "pseudotachyon",
            Species::Luxon => "luxon",
        })
    }
}

fn check_non_negative(name: &str, x: f64) -> Result<()> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::invalid(format!("{name} must be finite and >= 0, got {x}")));
    }
    Ok(())
}

/// Energy on the mass shell of `species` for momentum magnitude `k`.
pub fn energy_from_momentum(species: Species, k: f64, m: f64) -> Result<f64> {
    check_non_negative("k", k)?;
    check_non_negative("m", m)?;
    match species {
        Species::Bradyon => Ok(k.hypot(m)),
        Species::Pseudotachyon => {
            if k < m {
                return Err(Error::NonPhysicalMomentum { k, m });
            }
            // factored form keeps k = m exact
            Ok(((k - m) * (k + m)).sqrt())
        }
        Species::Luxon => {
            if m != 0.0 {
                return Err(Error::MassNotZero(m));
            }
            Ok(k)
        }
    }
}

/// A validated point `(m, k, ε)` on one of the three shells.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MassShell {
    pub species: Species,
    pub m: f64,
    pub k: f64,
    pub epsilon: f64,
}

impl MassShell {
    pub fn new(species: Species, k: f64, m: f64) -> Result<MassShell> {
        let epsilon = energy_from_momentum(species, k, m)?;
        Ok(MassShell { species, m, k, epsilon })
    }

    /// Recompute `k` from `ε` and `m`.
    pub fn momentum_from_energy(&self) -> f64 {
        match self.species {
            Species::Bradyon => ((self.epsilon - self.m) * (self.epsilon + self.m)).max(0.0).sqrt(),
            Species::Pseudotachyon => self.epsilon.hypot(self.m),
            Species::Luxon => self.epsilon,
        }
    }

    /// Zero-energy pseudotachyon, `k = m`.
    pub fn is_transcendent(&self) -> bool {
        self.species == Species::Pseudotachyon && self.epsilon == 0.0
    }
}

/// `p̃ = (k; ε p / k)`, orthogonal to `p` with `p̃² = −p²`.
pub fn dual_momentum(p: &FourVector) -> Result<FourVector> {
    let k = p.k();
    if k == 0.0 {
        return Err(Error::ZeroMomentum);
    }
    Ok(FourVector::from_parts(k, scale3(p.momentum(), p.e / k)))
}

/// Speeds (fractions of `c`) at energy `ε` for mass `m`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Speeds {
    /// Bradyon, `√(ε²−m²)/ε`; absent for `ε < m` and at `ε = 0`.
    pub u: Option<f64>,
    /// Pseudotachyon mean speed, `ε/√(ε²+m²)`; zero at `ε = 0`.
    pub v: f64,
    /// Classical tachyon, `√(ε²+m²)/ε`; absent at `ε = 0`.
    pub w: Option<f64>,
}

pub fn speeds(epsilon: f64, m: f64) -> Result<Speeds> {
    check_non_negative("epsilon", epsilon)?;
    check_non_negative("m", m)?;
    if epsilon == 0.0 {
        return Ok(Speeds {
            u: None,
            v: 0.0,
            w: None,
        });
    }
    let h = epsilon.hypot(m);
    let u = (epsilon >= m).then(|| ((epsilon - m) * (epsilon + m)).sqrt() / epsilon);
    Ok(Speeds {
        u,
        v: epsilon / h,
        w: Some(h / epsilon),
    })
}

/// Proper boost with rapidity `ζ` along the unit `axis`.
///
/// Convention: `ε' = ε cosh ζ − (n·p) sinh ζ`, `(n·p)' = (n·p) cosh ζ − ε sinh ζ`,
/// transverse momentum unchanged.
pub fn boost(p: &FourVector, axis: ThreeVector, rapidity: f64) -> Result<FourVector> {
    check_unit_axis(axis)?;
    if !rapidity.is_finite() {
        return Err(Error::invalid("rapidity must be finite"));
    }
    let (ch, sh) = (rapidity.cosh(), rapidity.sinh());
    let mom = p.momentum();
    let par = dot3(axis, mom);
    let e = p.e * ch - par * sh;
    let shift = par * (ch - 1.0) - p.e * sh;
    Ok(FourVector::from_parts(
        e,
        [
            mom[0] + shift * axis[0],
            mom[1] + shift * axis[1],
            mom[2] + shift * axis[2],
        ],
    ))
}

/// The 4×4 real matrix `Λ^μ_ν` of [`boost`].
pub fn boost_matrix(axis: ThreeVector, rapidity: f64) -> Result<[[f64; 4]; 4]> {
    let mut out = [[0.0; 4]; 4];
    for col in 0..4 {
        let mut unit = [0.0; 4];
        unit[col] = 1.0;
        let image = boost(&FourVector::new(unit[0], unit[1], unit[2], unit[3]), axis, rapidity)?;
        for (row, x) in image.components().into_iter().enumerate() {
            out[row][col] = x;
        }
    }
    Ok(out)
}

/// One row of an energy–speed table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DispersionRow {
    pub epsilon: f64,
    pub u: Option<f64>,
    pub v: f64,
    pub w: Option<f64>,
}

/// `steps` evenly spaced energies from `eps_min` to `eps_max` inclusive.
pub fn dispersion_table(m: f64, eps_min: f64, eps_max: f64, steps: usize) -> Result<Vec<DispersionRow>> {
    check_non_negative("m", m)?;
    check_non_negative("eps_min", eps_min)?;
    if !eps_max.is_finite() || eps_max <= eps_min {
        return Err(Error::invalid(format!(
            "energy range must satisfy 0 <= eps_min < eps_max, got [{eps_min}, {eps_max}]"
        )));
    }
    if steps < 2 {
        return Err(Error::invalid(format!("steps must be >= 2, got {steps}")));
    }
    let span = eps_max - eps_min;
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            let epsilon = if i + 1 == steps {
                eps_max
            } else {
                eps_min + span * i as f64 / last
            };
            let s = speeds(epsilon, m)?;
            Ok(DispersionRow {
                epsilon,
                u: s.u,
                v: s.v,
                w: s.w,
            })
        })
        .collect()
}
