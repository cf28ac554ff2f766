//! Infinitesimal and finite Lorentz maps acting on bispinors.

use ptdirac::kinematics::boost;
use ptdirac::symmetries::{
    apply_boost, boost_parameters, covariance_residual, lorentz_boost_spinor, lorentz_generator, transformation_tensor,
};
use ptdirac::{EnergySign, Helicity, PlaneWaveSpec, Representation, Species};

fn main() -> ptdirac::Result<()> {
    let rep = Representation::Standard;
    // the covariance defect of the first-order map shrinks quadratically
    let mut previous = None;
    for step in 0..6 {
        let scale = 1e-2 / 2f64.powi(step);
        let mut omega = boost_parameters([0.6, 0.0, 0.8], scale);
        omega[1][2] = 0.7 * scale;
        omega[2][1] = -0.7 * scale;
        let s = lorentz_generator(&omega, rep)?;
        let r = covariance_residual(&transformation_tensor(&omega), &s, rep);
        let ratio = previous.map_or(String::new(), |p: f64| format!("  ratio {:.4}", p / r));
        println!("|Δω| ~ {scale:.2e}: residual {r:.3e}{ratio}");
        previous = Some(r);
    }

    let spec = PlaneWaveSpec::new(
        Species::Pseudotachyon,
        EnergySign::Positive,
        [0.0, 0.0, 5.0],
        3.0,
        Helicity::Plus,
        rep,
    )?;
    for zeta in [-2.0, -0.5, 0.5, 1.0, 2.0] {
        let img = apply_boost(&spec, [0.0, 0.0, 1.0], zeta)?;
        println!(
            "ζ={zeta:+.1}: p' = {}  residual {:.1e}",
            img.boosted_momentum, img.residual
        );
    }

    let axis = [0.0, 0.6, 0.8];
    let s = lorentz_boost_spinor(axis, 1.2, rep)?;
    println!("\ndet S = {:.6}", s.det());
    let p = spec.four_momentum()?;
    println!("p = {p} -> Λp = {}", boost(&p, axis, 1.2)?);
    Ok(())
}
