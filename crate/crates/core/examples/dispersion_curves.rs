//! Energy–speed curves for bradyons, pseudotachyons and classical tachyons,
//! written as CSV to stdout (or to the path given as the first argument).

use std::fs::File;
use std::io::{self, BufWriter, Write};

use ptdirac::format::{write_dispersion_csv, DEFAULT_PRECISION};
use ptdirac::kinematics::dispersion_table;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rows = dispersion_table(3.0, 0.0, 10.0, 41)?;
    let mut out: Box<dyn Write> = match std::env::args().nth(1) {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    write_dispersion_csv(&mut out, &rows, DEFAULT_PRECISION)?;
    out.flush()?;

    // the pseudotachyon curve starts linearly, v ≈ ε/m, while bradyons are not yet on shell
    let slow = dispersion_table(3.0, 0.0, 0.03, 4)?;
    for r in slow.iter().skip(1) {
        eprintln!("ε={:.3}: v={:.6} ε/m={:.6}", r.epsilon, r.v, r.epsilon / 3.0);
    }
    Ok(())
}
