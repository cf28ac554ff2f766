//! Mean velocity, 4-velocity, 4-spin and the constraint systems, compared with
//! the classical speeds of the same energy.

use ptdirac::kinematics::{norm3, speeds};
use ptdirac::observables::expectation_report;
use ptdirac::{EnergySign, Helicity, PlaneWaveSpec, Representation, Species};

fn main() -> ptdirac::Result<()> {
    let m = 1.0;
    println!("{:>6} {:>8} {:>10} {:>10} {:>10}", "k", "ε", "|⟨v⟩|", "ε/k", "w = k/ε");
    for k in [1.0, 1.01, 1.1, 1.5, 2.0, 5.0, 20.0] {
        let spec = PlaneWaveSpec::new(
            Species::Pseudotachyon,
            EnergySign::Positive,
            [0.0, 0.0, k],
            m,
            Helicity::Plus,
            Representation::Standard,
        )?;
        let e = spec.energy()?;
        let r = expectation_report(&spec)?;
        let classical = speeds(e, m)?.w.map_or("-".to_string(), |w| format!("{w:.6}"));
        println!(
            "{k:>6} {e:>8.4} {:>10.6} {:>10.6} {:>10}",
            norm3(r.mean_velocity),
            e / k,
            classical
        );
    }

    for (species, k, helicity, sign) in [
        (Species::Pseudotachyon, 5.0, Helicity::Plus, EnergySign::Positive),
        (Species::Pseudotachyon, 5.0, Helicity::Minus, EnergySign::Negative),
        (Species::Bradyon, 4.0, Helicity::Minus, EnergySign::Positive),
    ] {
        let spec = PlaneWaveSpec::new(species, sign, [0.0, 0.0, k], 3.0, helicity, Representation::Weyl)?;
        let r = expectation_report(&spec)?;
        println!("\n{species} {sign} λ={helicity} p={k}ẑ m=3");
        println!("  ⟨v⟩ = {:?}", r.mean_velocity);
        println!("  v̄  = {}", r.mean_four_velocity.expect("massive"));
        println!("  s̄  = {}", r.mean_spin_four_vector.expect("massive"));
        for c in &r.constraint_residuals {
            println!("  {:<18} {:.1e}", c.label, c.value);
        }
        println!("  bilinear vs closed form: {:.1e}", r.closed_form_defect);
    }
    Ok(())
}
