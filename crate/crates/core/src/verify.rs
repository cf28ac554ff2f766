//! Seeded invariant suite.
//!
//! Every check records the largest residual seen over its trials and
//! compares it with a pinned limit. Limits are stated for the reference
//! tolerance `1e-12` and scale linearly with the configured tolerance, so a
//! tighter `tol` makes every residual check stricter. The one ratio check
//! (quadratic order of the infinitesimal Lorentz map) is not scaled.
//!
//! Trial `t` of group `g` draws from its own ChaCha stream keyed by
//! `(seed, g, t)`, so results do not depend on evaluation order.

use std::f64::consts::PI;
use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::clifford::{
    gamma_set, pauli_dot, proportionality_defect, representation_change, Complex, Matrix2, Matrix4, Representation,
    METRIC,
};
use crate::error::{Error, Result};
use crate::kinematics::{self, dual_momentum, speeds, FourVector, MassShell, Species, ThreeVector};
use crate::observables;
use crate::spinors::{self, amplitude, EnergySign, Helicity, NormalizationContext, PlaneWaveSpec};
use crate::symmetries::{self, DiscreteKind, Sector};

/// Tolerance at which every pinned limit applies unscaled.
pub const REFERENCE_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    pub tol: f64,
}

impl VerifyConfig {
    pub fn new(seed: u64, trials: usize, tol: f64) -> Result<Self> {
        if trials == 0 {
            return Err(Error::invalid("trials must be >= 1"));
        }
        if !tol.is_finite() || tol <= 0.0 {
            return Err(Error::invalid(format!("tol must be finite and > 0, got {tol}")));
        }
        Ok(VerifyConfig { seed, trials, tol })
    }

    fn limit(&self, pinned: f64) -> f64 {
        pinned * (self.tol / REFERENCE_TOL)
    }
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            trials: 1000,
            tol: REFERENCE_TOL,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    Clifford,
    Kinematics,
    Spinors,
    Observables,
    Symmetries,
}

impl Group {
    pub const ALL: [Group; 5] = [
        Group::Clifford,
        Group::Kinematics,
        Group::Spinors,
        Group::Observables,
        Group::Symmetries,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::Clifford => "clifford",
            Group::Kinematics => "kinematics",
            Group::Spinors => "spinors",
            Group::Observables => "observables",
            Group::Symmetries => "symmetries",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub group: Group,
    pub name: &'static str,
    pub worst: f64,
    pub limit: f64,
}

impl Check {
    /// NaN residuals fail.
    pub fn passed(&self) -> bool {
        self.worst <= self.limit
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub config: VerifyConfig,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, group: Group, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.group == group && c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed: {}", self.config.seed)?;
        writeln!(f, "trials: {}", self.config.trials)?;
        writeln!(f, "tol: {:e}", self.config.tol)?;
        for c in &self.checks {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{verdict} {}.{} max={:.3e} limit={:.3e}",
                c.group.name(),
                c.name,
                c.worst,
                c.limit
            )?;
        }
        for g in Group::ALL {
            let (total, ok) = self
                .checks
                .iter()
                .filter(|c| c.group == g)
                .fold((0, 0), |(t, p), c| (t + 1, p + usize::from(c.passed())));
            if total > 0 {
                let verdict = if ok == total { "PASS" } else { "FAIL" };
                writeln!(f, "group {verdict} {} {ok}/{total}", g.name())?;
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        write!(f, "summary: {passed}/{} passed", self.checks.len())
    }
}

/// Running maximum that turns NaN into +∞.
#[derive(Clone, Copy, Debug, Default)]
struct Worst(f64);

impl Worst {
    fn see(&mut self, x: f64) {
        self.0 = if x.is_nan() { f64::INFINITY } else { self.0.max(x) };
    }

    fn see_all(&mut self, xs: impl IntoIterator<Item = f64>) {
        xs.into_iter().for_each(|x| self.see(x));
    }

    /// A boolean property: 0 when it holds, +∞ otherwise.
    fn require(&mut self, ok: bool) {
        if !ok {
            self.0 = f64::INFINITY;
        }
    }
}

/// Collects the checks of one group.
struct Sheet<'a> {
    config: &'a VerifyConfig,
    group: Group,
    checks: Vec<Check>,
}

impl<'a> Sheet<'a> {
    fn new(config: &'a VerifyConfig, group: Group) -> Self {
        Sheet {
            config,
            group,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: &'static str, worst: Worst, pinned: f64) {
        let limit = self.config.limit(pinned);
        self.checks.push(Check {
            group: self.group,
            name,
            worst: worst.0,
            limit,
        });
    }

    fn push_fixed(&mut self, name: &'static str, worst: Worst, limit: f64) {
        self.checks.push(Check {
            group: self.group,
            name,
            worst: worst.0,
            limit,
        });
    }

    fn rng(&self, trial: usize) -> ChaCha8Rng {
        trial_rng(self.config.seed, self.group, trial)
    }
}

fn trial_rng(seed: u64, group: Group, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((group as u64) << 48) | trial as u64);
    rng
}

fn unit_vector<R: Rng>(rng: &mut R) -> ThreeVector {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..2.0 * PI);
    let r = (1.0 - z * z).max(0.0).sqrt();
    [r * phi.cos(), r * phi.sin(), z]
}

fn pick<R: Rng, T: Copy>(rng: &mut R, items: &[T]) -> T {
    items[rng.gen_range(0..items.len())]
}

fn sample_mass<R: Rng>(rng: &mut R) -> f64 {
    rng.gen_range(0.5..3.0)
}

/// `|p|` on the shell of `species`; pseudotachyons hit `k = m` exactly on
/// every 16th trial.
fn sample_k<R: Rng>(rng: &mut R, species: Species, m: f64, trial: usize) -> f64 {
    match species {
        Species::Pseudotachyon if trial.is_multiple_of(16) => m,
        Species::Pseudotachyon => rng.gen_range(m..=10.0 * m),
        Species::Bradyon => 10.0 * m * (1.0 - rng.gen::<f64>()),
        Species::Luxon => 10.0 * (1.0 - rng.gen::<f64>()),
    }
}

fn sample_spec<R: Rng>(rng: &mut R, species: Species, trial: usize) -> PlaneWaveSpec {
    let m = if species == Species::Luxon {
        0.0
    } else {
        sample_mass(rng)
    };
    let k = sample_k(rng, species, m, trial);
    let momentum = unit_vector(rng).map(|x| x * k);
    // re-derive m so that k = m survives the rounding of |p|
    let mass = if k == m && species == Species::Pseudotachyon {
        kinematics::norm3(momentum)
    } else {
        m
    };
    PlaneWaveSpec {
        species,
        energy_sign: pick(rng, &EnergySign::ALL),
        momentum,
        mass,
        helicity: pick(rng, &Helicity::ALL),
        rep: pick(rng, &Representation::ALL),
    }
}

/// All eight (sign, helicity, representation) variants of one shell point.
fn variants(base: &PlaneWaveSpec) -> impl Iterator<Item = PlaneWaveSpec> + '_ {
    EnergySign::ALL.into_iter().flat_map(move |s| {
        Helicity::ALL.into_iter().flat_map(move |h| {
            Representation::ALL.into_iter().map(move |r| PlaneWaveSpec {
                energy_sign: s,
                helicity: h,
                rep: r,
                ..*base
            })
        })
    })
}

fn identity_scaled(x: f64) -> Matrix4 {
    Matrix4::identity() * x
}

fn clifford(config: &VerifyConfig) -> Vec<Check> {
    let mut sheet = Sheet::new(config, Group::Clifford);
    let sets = Representation::ALL.map(gamma_set);
    let mut anti = Worst::default();
    let mut herm = Worst::default();
    for t in 0..config.trials {
        let mut rng = sheet.rng(t);
        let g = &sets[rng.gen_range(0..2)];
        let (mu, nu) = (rng.gen_range(0..4), rng.gen_range(0..4));
        let expected = if mu == nu { METRIC[mu] * 2.0 } else { 0.0 };
        anti.see(
            g.gamma[mu]
                .anticommutator(&g.gamma[nu])
                .distance(&identity_scaled(expected)),
        );
        // γ^μ† = γ⁰γ^μγ⁰
        herm.see(g.gamma[mu].dagger().distance(&(g.gamma[0] * g.gamma[mu] * g.gamma[0])));
        herm.see(g.gamma5.anticommutator(&g.gamma[nu]).frobenius_norm());
    }
    let mut five = Worst::default();
    let mut alpha5 = Worst::default();
    let mut conj = Worst::default();
    for g in &sets {
        herm.see(g.gamma5.dagger().distance(&g.gamma5));
        herm.see((g.gamma5 * g.gamma5).distance(&Matrix4::identity()));
        let product = g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3] * crate::clifford::I;
        five.see(product.distance(&g.gamma5));
        alpha5.see((g.alpha5 * g.alpha5).distance(&identity_scaled(-1.0)));
    }
    let w = representation_change();
    let winv = w.dagger();
    for mu in [0, 1, 2, 3, 5] {
        let weyl = sets[1].gamma_or_five(mu).copied().unwrap_or(Matrix4::ZERO);
        let std = sets[0].gamma_or_five(mu).copied().unwrap_or(Matrix4::ZERO);
        conj.see((w * weyl * winv).distance(&std));
    }
    let mut spin = Worst::default();
    let sigma = crate::clifford::pauli();
    for i in 0..3 {
        let block = Matrix4::from_blocks(sigma[i], Matrix2::ZERO, Matrix2::ZERO, sigma[i]);
        spin.see(sets[0].sigma_spin[i].distance(&block));
        spin.see((sets[0].alpha[i] * sets[0].gamma5).distance(&block));
    }
    sheet.push("anticommutation", anti, 1e-13);
    sheet.push("hermiticity", herm, 1e-13);
    sheet.push("gamma5_product", five, 1e-14);
    sheet.push("alpha5_square", alpha5, 1e-14);
    sheet.push("w_conjugation", conj, 1e-14);
    sheet.push("spin_blocks", spin, 1e-14);
    sheet.checks
}

fn kinematics_group(config: &VerifyConfig) -> Vec<Check> {
    let mut sheet = Sheet::new(config, Group::Kinematics);
    let mut shell = Worst::default();
    let mut dual = Worst::default();
    let mut bounds = Worst::default();
    let mut reciprocity = Worst::default();
    let mut composition = Worst::default();
    let mut invariance = Worst::default();
    for t in 0..config.trials {
        let mut rng = sheet.rng(t);
        let species = pick(&mut rng, &Species::ALL);
        let m = if species == Species::Luxon {
            0.0
        } else {
            sample_mass(&mut rng)
        };
        let k = sample_k(&mut rng, species, m, t);
        match MassShell::new(species, k, m) {
            Ok(s) => shell.see((s.momentum_from_energy() - k).abs() / k.max(f64::MIN_POSITIVE)),
            Err(_) => shell.require(false),
        }

        let massive = pick(&mut rng, &[Species::Pseudotachyon, Species::Bradyon]);
        let m = sample_mass(&mut rng);
        let k = sample_k(&mut rng, massive, m, t).max(1e-3);
        let n = unit_vector(&mut rng);
        let p = FourVector::from_parts(
            kinematics::energy_from_momentum(massive, k, m).unwrap_or(f64::NAN),
            n.map(|x| x * k),
        );
        match dual_momentum(&p) {
            Ok(d) => {
                let scale = p.norm_sqr().abs().max(1.0);
                dual.see(p.dot(&d).abs() / scale);
                dual.see((d.norm_sqr() + p.norm_sqr()).abs() / scale);
            }
            Err(_) => dual.require(false),
        }

        let eps = m * 100.0 * (1.0 - rng.gen::<f64>());
        match speeds(eps, m) {
            Ok(s) => {
                bounds.require((0.0..1.0).contains(&s.v));
                bounds.require(s.w.is_some_and(|w| w > 1.0));
                bounds.require(s.u.map_or(eps < m, |u| eps >= m && (0.0..1.0).contains(&u)));
                reciprocity.see((s.v * s.w.unwrap_or(f64::NAN) - 1.0).abs());
            }
            Err(_) => bounds.require(false),
        }

        let axis = unit_vector(&mut rng);
        let (z1, z2): (f64, f64) = (rng.gen_range(-2.0..=2.0), rng.gen_range(-2.0..=2.0));
        let chained = kinematics::boost(&p, axis, z1).and_then(|q| kinematics::boost(&q, axis, z2));
        let direct = kinematics::boost(&p, axis, z1 + z2);
        match (chained, direct) {
            (Ok(a), Ok(b)) => {
                let scale = a
                    .components()
                    .iter()
                    .chain(b.components().iter())
                    .fold(1.0f64, |s, x| s.max(x.abs()));
                composition.see(a.max_abs_diff(&b) / scale);
                invariance.see((b.norm_sqr() - p.norm_sqr()).abs() / (scale * scale));
            }
            _ => composition.require(false),
        }
    }

    // fixed spot values and trends of the energy–speed laws
    let mut spot = Worst::default();
    match speeds(4.0, 3.0) {
        Ok(s) => {
            spot.see((s.u.unwrap_or(f64::NAN) - 0.661437828).abs());
            spot.see((s.v - 0.8).abs());
            spot.see((s.w.unwrap_or(f64::NAN) - 1.25).abs());
        }
        Err(_) => spot.require(false),
    }
    let mut monotone = Worst::default();
    let mut newtonian = Worst::default();
    for m in [0.01, 0.3, 1.0, 3.0, 50.0] {
        match kinematics::dispersion_table(m, 0.0, 20.0 * m, 401) {
            Ok(rows) => monotone.require(rows.windows(2).all(|w| w[1].v > w[0].v)),
            Err(_) => monotone.require(false),
        }
        for i in 1..=100 {
            let eps = m / 100.0 * i as f64 / 100.0;
            let v = speeds(eps, m).map(|s| s.v).unwrap_or(f64::NAN);
            newtonian.see((v - eps / m).abs() / (eps / m));
        }
    }
    sheet.push("shell_round_trip", shell, 1e-12);
    sheet.push("dual_orthogonality", dual, 1e-10);
    sheet.push("speed_bounds", bounds, 0.0);
    sheet.push("v_times_w", reciprocity, 1e-13);
    sheet.push("boost_composition", composition, 1e-12);
    sheet.push("boost_invariance", invariance, 1e-12);
    sheet.push("dispersion_spot", spot, 1e-9);
    sheet.push("v_increasing", monotone, 0.0);
    sheet.push_fixed("newtonian_trend", newtonian, 0.01);
    sheet.checks
}

fn spinors_group(config: &VerifyConfig) -> Vec<Check> {
    let mut sheet = Sheet::new(config, Group::Spinors);
    let mut solution = Worst::default();
    let mut norm = Worst::default();
    let mut normalization = Worst::default();
    let mut helicity = Worst::default();
    let mut adjoint = Worst::default();
    let mut consistency = Worst::default();
    let mut chirality = Worst::default();
    let mut decoupling = Worst::default();
    for t in 0..config.trials {
        let mut rng = sheet.rng(t);
        let species = pick(&mut rng, &Species::ALL);
        let base = sample_spec(&mut rng, species, t);
        let volume = 10f64.powf(rng.gen_range(-1.0..2.0));
        let ctx = NormalizationContext { volume };
        for spec in variants(&base) {
            let Ok(w) = amplitude(&spec) else {
                solution.require(false);
                continue;
            };
            solution.see(spinors::dirac_residual(&spec, &w).unwrap_or(f64::NAN));
            let k = spec.k();
            let e = spec.energy().unwrap_or(f64::NAN);
            let expected = if spec.species == Species::Bradyon {
                2.0 * e
            } else {
                2.0 * k
            };
            norm.see((w.norm_sqr() - expected).abs());
            let n = spinors::normalization_factor(&spec, &ctx).unwrap_or(f64::NAN);
            normalization.see((n * n * w.norm_sqr() * volume - 1.0).abs());
            let g = gamma_set(spec.rep);
            if let Ok(lam) = g.helicity_operator(spec.momentum) {
                helicity.see((lam * w - w.scale(spec.state_helicity().into())).norm());
            }
            // w̄ D' = 0: γ⁵ anticommutes with γ⁰, so the pseudotachyon mass term flips sign
            let p = FourVector::from_parts(e, spec.momentum);
            let adjoint_sign = if spec.species == Species::Pseudotachyon {
                spec.energy_sign.flip()
            } else {
                spec.energy_sign
            };
            let dbar = spinors::dirac_operator_at(spec.species, adjoint_sign, &p, spec.mass, spec.rep);
            // ‖w̄ D'‖ = ‖D'† γ⁰ w‖
            adjoint.see((dbar.dagger() * g.gamma[0] * w).norm() / w.norm());
            if spec.rep == Representation::Weyl {
                let std = amplitude(&spec.with_rep(Representation::Standard));
                match std {
                    Ok(s) => consistency.see(proportionality_defect(&(representation_change() * w), &s)),
                    Err(_) => consistency.require(false),
                }
            }
            if spec.species == Species::Luxon {
                chirality.see((g.gamma5 * w - w.scale(spec.state_helicity().into())).norm());
            }
        }
        if base.species == Species::Luxon {
            for rep in Representation::ALL {
                let at = |s, h| {
                    amplitude(&PlaneWaveSpec {
                        energy_sign: s,
                        helicity: h,
                        rep,
                        ..base
                    })
                };
                match (
                    at(EnergySign::Positive, Helicity::Plus),
                    at(EnergySign::Negative, Helicity::Minus),
                    at(EnergySign::Positive, Helicity::Minus),
                    at(EnergySign::Negative, Helicity::Plus),
                ) {
                    (Ok(up), Ok(vm), Ok(um), Ok(vp)) => {
                        chirality.see(up.max_abs_diff(&vm));
                        chirality.see(um.max_abs_diff(&(-vp)));
                    }
                    _ => chirality.require(false),
                }
            }
        }

        // zero-energy pseudotachyon: upper and lower halves decouple
        let p = unit_vector(&mut rng).map(|x| x * sample_mass(&mut rng));
        let m = kinematics::norm3(p);
        let ps = pauli_dot(p);
        for h in Helicity::ALL {
            for sign in EnergySign::ALL {
                let spec = PlaneWaveSpec {
                    species: Species::Pseudotachyon,
                    energy_sign: sign,
                    momentum: p,
                    mass: m,
                    helicity: h,
                    rep: Representation::Standard,
                };
                let Ok(w) = amplitude(&spec) else {
                    decoupling.require(false);
                    continue;
                };
                // u: (p·σ + m)χ = 0, (p·σ − m)φ = 0; v swaps the signs
                let s = if sign == EnergySign::Positive { m } else { -m };
                let lower = apply2(&ps, w.lower(), s);
                let upper = apply2(&ps, w.upper(), -s);
                decoupling.see(
                    lower
                        .iter()
                        .chain(upper.iter())
                        .map(|z| z.norm_sqr())
                        .sum::<f64>()
                        .sqrt(),
                );
            }
        }
    }
    sheet.push("solution", solution, 1e-12);
    sheet.push("norm", norm, 1e-11);
    sheet.push("normalization", normalization, 1e-11);
    sheet.push("helicity", helicity, 1e-11);
    sheet.push("chirality", chirality, 1e-14);
    sheet.push("transcendent_decoupling", decoupling, 1e-12);
    sheet.push("adjoint_equation", adjoint, 1e-11);
    sheet.push("representation_consistency", consistency, 1e-12);
    sheet.checks
}

/// `(M + shift) x` for a Pauli-space matrix.
fn apply2(m: &Matrix2, x: [Complex; 2], shift: f64) -> [Complex; 2] {
    let a = m.0;
    [
        (a[0][0] + shift) * x[0] + a[0][1] * x[1],
        a[1][0] * x[0] + (a[1][1] + shift) * x[1],
    ]
}

fn observables_group(config: &VerifyConfig) -> Vec<Check> {
    let mut sheet = Sheet::new(config, Group::Observables);
    let mut duality = Worst::default();
    let mut bradyon = Worst::default();
    let mut closed = Worst::default();
    let mut squares = Worst::default();
    let mut constraints = Worst::default();
    let mut eigen = Worst::default();
    let mut adjoint = Worst::default();
    let mut helicity = Worst::default();
    for t in 0..config.trials {
        let mut rng = sheet.rng(t);
        // k > m strictly for the duality law
        let mut pt = sample_spec(&mut rng, Species::Pseudotachyon, 1);
        if pt.k() <= pt.mass {
            pt.momentum = pt.momentum.map(|x| x * 1.5);
        }
        let br = sample_spec(&mut rng, Species::Bradyon, t);
        for spec in variants(&pt) {
            match observables::mean_velocity(&spec) {
                Ok(v) => {
                    let speed = kinematics::norm3(v);
                    let e = spec.energy().unwrap_or(f64::NAN);
                    duality.see((speed * spec.k() / e - 1.0).abs());
                    duality.require(speed < 1.0);
                }
                Err(_) => duality.require(false),
            }
        }
        for spec in variants(&br) {
            match (observables::mean_velocity(&spec), spec.energy()) {
                (Ok(v), Ok(e)) => bradyon.see((0..3).map(|i| (v[i] - spec.momentum[i] / e).abs()).fold(0.0, f64::max)),
                _ => bradyon.require(false),
            }
        }
        for spec in variants(&pt).chain(variants(&br)) {
            match observables::expectation_report(&spec) {
                Ok(r) => {
                    closed.see(r.closed_form_defect);
                    constraints.see_all(r.constraint_residuals.iter().map(|c| c.value.abs()));
                    match (r.mean_four_velocity, r.mean_spin_four_vector) {
                        (Some(v), Some(s)) => {
                            squares.see((v.norm_sqr() - 1.0).abs());
                            squares.see((s.norm_sqr() + 1.0).abs());
                        }
                        _ => squares.require(false),
                    }
                }
                Err(_) => closed.require(false),
            }
            eigen.see(observables::energy_eigencheck(&spec).unwrap_or(f64::NAN));
            match observables::hamiltonian(spec.species, spec.momentum, spec.mass, spec.rep) {
                Ok(h) => {
                    adjoint.see(observables::hermiticity_defect(spec.species, &h, spec.rep));
                    if let Ok(lam) = gamma_set(spec.rep).helicity_operator(spec.momentum) {
                        helicity.see(h.commutator(&lam).frobenius_norm());
                    }
                }
                Err(_) => adjoint.require(false),
            }
        }
    }
    sheet.push("velocity_duality", duality, 1e-12);
    sheet.push("bradyon_velocity", bradyon, 1e-12);
    sheet.push("closed_forms", closed, 1e-11);
    sheet.push("four_vector_squares", squares, 1e-11);
    sheet.push("constraints", constraints, 1e-11);
    sheet.push("energy_eigenvalue", eigen, 1e-12);
    sheet.push("hamiltonian_adjoint", adjoint, 1e-13);
    sheet.push("helicity_conserved", helicity, 1e-12);
    sheet.checks
}

fn random_omega<R: Rng>(rng: &mut R, scale: f64) -> [[f64; 4]; 4] {
    let mut om = [[0.0; 4]; 4];
    for a in 0..4 {
        for b in (a + 1)..4 {
            let x = rng.gen_range(-1.0..=1.0) * scale;
            om[a][b] = x;
            om[b][a] = -x;
        }
    }
    om
}

fn symmetries_group(config: &VerifyConfig) -> Vec<Check> {
    let mut sheet = Sheet::new(config, Group::Symmetries);
    let mut unitarity = Worst::default();
    for kind in DiscreteKind::ALL {
        for sector in Sector::ALL {
            for rep in Representation::ALL {
                let u = symmetries::discrete_operator(kind, sector, rep).matrix;
                unitarity.see((u.dagger() * u).distance(&Matrix4::identity()));
            }
        }
    }
    let mut pct = Worst::default();
    let product = symmetries::pct_product(Sector::Pseudotachyonic, Representation::Standard);
    pct.see(
        product
            .matrix
            .distance(&(gamma_set(Representation::Standard).gamma5 * crate::clifford::I)),
    );
    let mut pct_bradyon = Worst::default();
    for rep in Representation::ALL {
        let b = symmetries::pct_product(Sector::Bradyonic, rep);
        pct_bradyon.see(b.defect);
        pct_bradyon.see((b.phase + 1.0).norm());
    }
    let mut sigma5 = Worst::default();
    for rep in Representation::ALL {
        let g = gamma_set(rep);
        for mu in 0..4 {
            for nu in 0..4 {
                match g.sigma_tensor(mu, nu) {
                    Ok(s) => sigma5.see(s.commutator(&g.gamma5).frobenius_norm()),
                    Err(_) => sigma5.require(false),
                }
            }
        }
    }

    let mut intertwining = Worst::default();
    let mut ratio = Worst::default();
    let mut commutes = Worst::default();
    let mut covariance = Worst::default();
    let mut composition = Worst::default();
    let mut determinant = Worst::default();
    for t in 0..config.trials {
        let mut rng = sheet.rng(t);
        let species = pick(&mut rng, &Species::ALL);
        let spec = sample_spec(&mut rng, species, t);
        for kind in DiscreteKind::ALL {
            intertwining.see(
                symmetries::apply_discrete(kind, &spec)
                    .map(|i| i.residual)
                    .unwrap_or(f64::NAN),
            );
        }

        let rep = spec.rep;
        let om = random_omega(&mut rng, 1e-3);
        let half = om.map(|row| row.map(|x| x / 2.0));
        let residual = |o: &[[f64; 4]; 4]| {
            symmetries::lorentz_generator(o, rep)
                .map(|s| symmetries::covariance_residual(&symmetries::transformation_tensor(o), &s, rep))
                .unwrap_or(f64::NAN)
        };
        ratio.see((residual(&om) / residual(&half) / 4.0 - 1.0).abs());
        let g5 = gamma_set(rep).gamma5;
        if let Ok(s) = symmetries::lorentz_generator(&om, rep) {
            commutes.see(s.commutator(&g5).frobenius_norm());
        }

        let axis = unit_vector(&mut rng);
        let zeta: f64 = rng.gen_range(-2.0..=2.0);
        let zeta2: f64 = rng.gen_range(-2.0..=2.0);
        match symmetries::apply_boost(&spec, axis, zeta) {
            Ok(img) => covariance.see(img.residual),
            Err(_) => covariance.require(false),
        }
        let s = |z| symmetries::lorentz_boost_spinor(axis, z, rep);
        match (s(zeta), s(zeta2), s(zeta + zeta2)) {
            (Ok(a), Ok(b), Ok(ab)) => {
                composition.see((a * b).distance(&ab) / ab.frobenius_norm());
                determinant.see((a.det() - 1.0).norm());
                commutes.see(a.commutator(&g5).frobenius_norm() / a.frobenius_norm());
            }
            _ => composition.require(false),
        }
    }
    sheet.push("unitarity", unitarity, 1e-14);
    sheet.push("pct_product", pct, 1e-14);
    sheet.push("pct_bradyon_phase", pct_bradyon, 1e-14);
    sheet.push("sigma_commutes_gamma5", sigma5, 1e-14);
    sheet.push("intertwining", intertwining, 1e-12);
    sheet.push_fixed("generator_quadratic", ratio, 0.1);
    sheet.push("spinor_map_commutes_gamma5", commutes, 1e-13);
    sheet.push("boost_covariance", covariance, 1e-10);
    sheet.push("boost_composition", composition, 1e-12);
    sheet.push("boost_determinant", determinant, 1e-12);
    sheet.checks
}

pub fn run_group(group: Group, config: &VerifyConfig) -> Vec<Check> {
    match group {
        Group::Clifford => clifford(config),
        Group::Kinematics => kinematics_group(config),
        Group::Spinors => spinors_group(config),
        Group::Observables => observables_group(config),
        Group::Symmetries => symmetries_group(config),
    }
}

/// Runs every group.
pub fn run_all(config: &VerifyConfig) -> Report {
    let checks = Group::ALL.into_iter().flat_map(|g| run_group(g, config)).collect();
    Report {
        config: *config,
        checks,
    }
}

/// Symmetry checks alone: unitarity, PCT, intertwining, Lorentz maps.
pub fn run_symmetry_suite(seed: u64, trials: usize, tol: f64) -> Result<Report> {
    let config = VerifyConfig::new(seed, trials, tol)?;
    Ok(Report {
        config,
        checks: symmetries_group(&config),
    })
}
