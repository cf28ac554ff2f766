//! The zero-energy pseudotachyon (`k = m`): its amplitude, velocity and the
//! decoupled halves of the bispinor.

use ptdirac::observables::{expectation_report, mean_velocity};
use ptdirac::spinors::amplitude_from_spinor;
use ptdirac::spinors::pauli_spinor;
use ptdirac::{amplitude, EnergySign, Helicity, PlaneWaveSpec, Representation, Species};

fn main() -> ptdirac::Result<()> {
    for helicity in Helicity::ALL {
        let spec = PlaneWaveSpec::new(
            Species::Pseudotachyon,
            EnergySign::Positive,
            [0.0, 0.0, 3.0],
            3.0,
            helicity,
            Representation::Standard,
        )?;
        let w = amplitude(&spec)?;
        println!(
            "λ={helicity}: ε={} upper=({:.4}, {:.4}) lower=({:.4}, {:.4}) ⟨v⟩={:?}",
            spec.energy()?,
            w[0].re,
            w[1].re,
            w[2].re,
            w[3].re,
            mean_velocity(&spec)?
        );
    }

    let report = expectation_report(&PlaneWaveSpec::new(
        Species::Pseudotachyon,
        EnergySign::Positive,
        [0.0, 0.0, 3.0],
        3.0,
        Helicity::Plus,
        Representation::Standard,
    )?)?;
    println!("mean 4-velocity at rest energy: {:?}", report.mean_four_velocity);

    // the spinor-parameterized form divides by ε and has no value here
    let err = amplitude_from_spinor(
        Species::Pseudotachyon,
        EnergySign::Positive,
        [0.0, 0.0, 3.0],
        3.0,
        pauli_spinor(1.0, 0.0),
        Representation::Standard,
    )
    .unwrap_err();
    println!("spinor form: {err}");
    Ok(())
}
