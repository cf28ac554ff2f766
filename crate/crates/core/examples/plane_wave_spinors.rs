//! Helicity amplitudes for each species, with norms and wave-equation residuals.

use ptdirac::spinors::dirac_residual;
use ptdirac::{amplitude, EnergySign, Helicity, PlaneWaveSpec, Representation, Species};

fn main() -> ptdirac::Result<()> {
    let cases = [
        (Species::Pseudotachyon, [0.0, 0.0, 5.0], 3.0),
        (Species::Bradyon, [0.0, 0.0, 4.0], 3.0),
        (Species::Luxon, [0.0, 0.0, 2.0], 0.0),
        (Species::Pseudotachyon, [1.0, -2.0, 2.0], 1.5),
    ];
    for (species, p, m) in cases {
        for sign in EnergySign::ALL {
            for helicity in Helicity::ALL {
                let spec = PlaneWaveSpec::new(species, sign, p, m, helicity, Representation::Standard)?;
                let w = amplitude(&spec)?;
                let comps: Vec<String> = (0..4).map(|i| format!("{:+.4}{:+.4}i", w[i].re, w[i].im)).collect();
                println!(
                    "{species:>13} {sign} λ={helicity} p={p:?} ε={:.4}  w=({})  w†w={:.4}  |Dw|/|w|={:.1e}",
                    spec.energy()?,
                    comps.join(", "),
                    w.norm_sqr(),
                    dirac_residual(&spec, &w)?
                );
            }
        }
    }

    // below threshold there is no pseudotachyon solution
    let err = PlaneWaveSpec::new(
        Species::Pseudotachyon,
        EnergySign::Positive,
        [0.0, 0.0, 2.0],
        3.0,
        Helicity::Plus,
        Representation::Standard,
    )
    .unwrap_err();
    println!("\nk < m: {err}");
    Ok(())
}
