//! Run the seeded invariant suite programmatically.

use ptdirac::verify::{run_all, run_group, Group, VerifyConfig};

fn main() -> ptdirac::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    let config = VerifyConfig::new(seed, 500, 1e-12)?;
    let report = run_all(&config);
    println!("{report}");

    let strict = VerifyConfig::new(seed, 50, 1e-15)?;
    for check in run_group(Group::Spinors, &strict) {
        println!(
            "at tol 1e-15: {}.{} {}",
            check.group.name(),
            check.name,
            if check.passed() { "holds" } else { "breaks" }
        );
    }
    Ok(())
}
