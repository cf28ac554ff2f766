//! Weyl-basis amplitudes mapped to the standard basis agree as rays.

use ptdirac::clifford::{proportionality_defect, representation_change};
use ptdirac::spinors::convert_representation;
use ptdirac::{amplitude, EnergySign, Helicity, PlaneWaveSpec, Representation, Species};

fn main() -> ptdirac::Result<()> {
    let w = representation_change();
    println!("W =\n{w:?}");
    for species in Species::ALL {
        let m = if species == Species::Luxon { 0.0 } else { 1.2 };
        for sign in EnergySign::ALL {
            for helicity in Helicity::ALL {
                let spec = PlaneWaveSpec::new(species, sign, [0.3, -1.1, 1.9], m, helicity, Representation::Weyl)?;
                let weyl = amplitude(&spec)?;
                let std = amplitude(&spec.with_rep(Representation::Standard))?;
                let mapped = convert_representation(&weyl, Representation::Weyl, Representation::Standard);
                println!(
                    "{species:>13} {sign} λ={helicity}: defect {:.1e}",
                    proportionality_defect(&mapped, &std)
                );
            }
        }
    }
    Ok(())
}
