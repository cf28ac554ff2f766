//! Parity, charge conjugation, time inversion and 4-inversion on plane waves.

use ptdirac::symmetries::{apply_discrete, discrete_operator, pct_product, DiscreteKind, Sector};
use ptdirac::{EnergySign, Helicity, PlaneWaveSpec, Representation, Species};

fn main() -> ptdirac::Result<()> {
    let spec = PlaneWaveSpec::new(
        Species::Pseudotachyon,
        EnergySign::Positive,
        [0.0, 0.0, 5.0],
        3.0,
        Helicity::Plus,
        Representation::Standard,
    )?;
    for kind in DiscreteKind::ALL {
        let op = discrete_operator(kind, Sector::Pseudotachyonic, spec.rep);
        let image = apply_discrete(kind, &spec)?;
        println!(
            "{kind}: antilinear={:<5} target sign {} momentum {}  residual {:.1e}",
            op.conjugates_argument, image.target_sign, image.target_momentum, image.residual
        );
    }

    for sector in Sector::ALL {
        for rep in Representation::ALL {
            let pct = pct_product(sector, rep);
            println!(
                "{sector:?} {rep}: U_P U_C U_T = ({:.3}) · iγ⁵, defect {:.1e}",
                pct.phase, pct.defect
            );
        }
    }
    Ok(())
}
