//! Build both gamma-matrix sets and check the algebra they satisfy.

use ptdirac::clifford::{gamma_set, representation_change, Matrix4, Representation, I, METRIC};

fn main() {
    for rep in Representation::ALL {
        let g = gamma_set(rep);
        let mut worst = 0.0f64;
        for mu in 0..4 {
            for nu in 0..4 {
                let expected = if mu == nu {
                    Matrix4::identity() * (2.0 * METRIC[mu])
                } else {
                    Matrix4::ZERO
                };
                worst = worst.max(g.gamma[mu].anticommutator(&g.gamma[nu]).distance(&expected));
            }
        }
        let five = (g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3] * I).distance(&g.gamma5);
        let alpha5 = (g.alpha5 * g.alpha5 + Matrix4::identity()).frobenius_norm();
        println!(
            "{rep}: max |{{γ^μ, γ^ν}} - 2g^μν| = {worst:e}, |iγ⁰γ¹γ²γ³ - γ⁵| = {five:e}, |(α⁵)² + 1| = {alpha5:e}"
        );
    }

    println!("\nstandard γ⁵:\n{:?}", gamma_set(Representation::Standard).gamma5);
    println!("weyl γ⁵:\n{:?}", gamma_set(Representation::Weyl).gamma5);

    let w = representation_change();
    let (std, weyl) = (gamma_set(Representation::Standard), gamma_set(Representation::Weyl));
    for mu in 0..4 {
        println!(
            "W γ^{mu}_weyl W = γ^{mu}_std within {:e}",
            (w * weyl.gamma[mu] * w).distance(&std.gamma[mu])
        );
    }

    let sigma = std.sigma_tensor(1, 2).expect("valid indices");
    println!(
        "\nσ_12 commutes with γ⁵ within {:e}",
        sigma.commutator(&std.gamma5).frobenius_norm()
    );
}
