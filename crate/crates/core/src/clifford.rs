//! Dense complex 4×4 matrix algebra and the gamma-matrix structures built on it.
//!
//! Two bases are supported: the standard (Dirac) representation, with a
//! diagonal `γ⁰`, and the Weyl (chiral) representation, with a diagonal `γ⁵`.
//! Every entry is built from the literals `0, ±1, ±i`, so the algebraic
//! identities hold to the last bit wherever the arithmetic allows it.
//!
//! The metric is `diag(+1, -1, -1, -1)` throughout.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kinematics::FourVector;

pub type Complex = Complex64;

pub const ZERO: Complex = Complex::new(0.0, 0.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const I: Complex = Complex::new(0.0, 1.0);

/// Minkowski metric `g^{μν} = g_{μν}`, diagonal entries.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Default absolute tolerance for comparisons between O(1) quantities.
pub const DEFAULT_TOL: f64 = 1e-12;

/// A 2×2 complex matrix, used for Pauli matrices and block construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix2(pub [[Complex; 2]; 2]);

impl Matrix2 {
    pub const ZERO: Matrix2 = Matrix2([[ZERO, ZERO], [ZERO, ZERO]]);
    pub const IDENTITY: Matrix2 = Matrix2([[ONE, ZERO], [ZERO, ONE]]);

    pub fn scale(&self, s: Complex) -> Matrix2 {
        let mut out = *self;
        for row in out.0.iter_mut() {
            for z in row.iter_mut() {
                *z *= s;
            }
        }
        out
    }
}

impl Add for Matrix2 {
    type Output = Matrix2;
    fn add(self, rhs: Matrix2) -> Matrix2 {
        let mut out = self;
        for r in 0..2 {
            for c in 0..2 {
                out.0[r][c] += rhs.0[r][c];
            }
        }
        out
    }
}

impl Neg for Matrix2 {
    type Output = Matrix2;
    fn neg(self) -> Matrix2 {
        self.scale(-ONE)
    }
}

/// The three Pauli matrices `σ₁, σ₂, σ₃`.
pub fn pauli() -> [Matrix2; 3] {
    [
        Matrix2([[ZERO, ONE], [ONE, ZERO]]),
        Matrix2([[ZERO, -I], [I, ZERO]]),
        Matrix2([[ONE, ZERO], [ZERO, -ONE]]),
    ]
}

/// `n·σ` for a real 3-vector `n`.
pub fn pauli_dot(n: [f64; 3]) -> Matrix2 {
    let s = pauli();
    s[0].scale(n[0].into()) + s[1].scale(n[1].into()) + s[2].scale(n[2].into())
}

/// A four-component complex column vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bispinor(pub [Complex; 4]);

impl Bispinor {
    pub const ZERO: Bispinor = Bispinor([ZERO; 4]);

    pub fn new(c: [Complex; 4]) -> Self {
        Bispinor(c)
    }

    pub fn from_real(c: [f64; 4]) -> Self {
        Bispinor(c.map(Complex::from))
    }

    /// Stack two 2-component halves as `(upper; lower)`.
    pub fn from_halves(upper: [Complex; 2], lower: [Complex; 2]) -> Self {
        Bispinor([upper[0], upper[1], lower[0], lower[1]])
    }

    pub fn upper(&self) -> [Complex; 2] {
        [self.0[0], self.0[1]]
    }

    pub fn lower(&self) -> [Complex; 2] {
        [self.0[2], self.0[3]]
    }

    /// Hermitian inner product `self† · other`.
    pub fn inner(&self, other: &Bispinor) -> Complex {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a.conj() * b).sum()
    }

    /// `w†w`.
    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn conj(&self) -> Bispinor {
        Bispinor(self.0.map(|z| z.conj()))
    }

    pub fn scale(&self, s: Complex) -> Bispinor {
        Bispinor(self.0.map(|z| z * s))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest componentwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Bispinor) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Index<usize> for Bispinor {
    type Output = Complex;
    fn index(&self, i: usize) -> &Complex {
        &self.0[i]
    }
}

impl Add for Bispinor {
    type Output = Bispinor;
    fn add(self, rhs: Bispinor) -> Bispinor {
        Bispinor(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for Bispinor {
    type Output = Bispinor;
    fn sub(self, rhs: Bispinor) -> Bispinor {
        Bispinor(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for Bispinor {
    type Output = Bispinor;
    fn neg(self) -> Bispinor {
        Bispinor(self.0.map(|z| -z))
    }
}

/// Phase-insensitive distance between two rays:
/// `sqrt(‖a‖²‖b‖² − |a†b|²) / (‖a‖‖b‖)`, zero iff `a ∥ b`.
///
/// The numerator is evaluated through the Lagrange identity
/// `Σ_{i<j} |a_i b_j − a_j b_i|²`, which avoids the cancellation of the
/// direct difference (that form bottoms out near `1e-8`).
pub fn proportionality_defect(a: &Bispinor, b: &Bispinor) -> f64 {
    let (na, nb) = (a.norm(), b.norm());
    if na == 0.0 || nb == 0.0 {
        return if na == nb { 0.0 } else { 1.0 };
    }
    let mut acc = 0.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            acc += (a.0[i] * b.0[j] - a.0[j] * b.0[i]).norm_sqr();
        }
    }
    acc.sqrt() / (na * nb)
}

/// Dense complex 4×4 matrix, row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct Matrix4(pub [[Complex; 4]; 4]);

impl fmt::Debug for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix4[")?;
        for row in &self.0 {
            write!(f, "  ")?;
            for z in row {
                write!(f, "{:>+9.4}{:>+9.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Matrix4 {
    pub const ZERO: Matrix4 = Matrix4([[ZERO; 4]; 4]);

    pub fn identity() -> Matrix4 {
        Matrix4::diagonal([ONE; 4])
    }

    pub fn diagonal(d: [Complex; 4]) -> Matrix4 {
        let mut m = Matrix4::ZERO;
        for (i, z) in d.into_iter().enumerate() {
            m.0[i][i] = z;
        }
        m
    }

    /// Assemble from 2×2 blocks `[[a, b], [c, d]]`.
    pub fn from_blocks(a: Matrix2, b: Matrix2, c: Matrix2, d: Matrix2) -> Matrix4 {
        let mut m = Matrix4::ZERO;
        for r in 0..2 {
            for col in 0..2 {
                m.0[r][col] = a.0[r][col];
                m.0[r][col + 2] = b.0[r][col];
                m.0[r + 2][col] = c.0[r][col];
                m.0[r + 2][col + 2] = d.0[r][col];
            }
        }
        m
    }

    pub fn scale(&self, s: Complex) -> Matrix4 {
        Matrix4(self.0.map(|row| row.map(|z| z * s)))
    }

    pub fn scale_real(&self, s: f64) -> Matrix4 {
        Matrix4(self.0.map(|row| row.map(|z| z * s)))
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Matrix4 {
        Matrix4(std::array::from_fn(|r| std::array::from_fn(|c| self.0[c][r].conj())))
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Matrix4 {
        Matrix4(self.0.map(|row| row.map(|z| z.conj())))
    }

    pub fn trace(&self) -> Complex {
        (0..4).map(|i| self.0[i][i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn apply(&self, v: &Bispinor) -> Bispinor {
        Bispinor(std::array::from_fn(|r| (0..4).map(|c| self.0[r][c] * v.0[c]).sum()))
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Matrix4) -> Matrix4 {
        *self * *other - *other * *self
    }

    /// `{A, B} = AB + BA`.
    pub fn anticommutator(&self, other: &Matrix4) -> Matrix4 {
        *self * *other + *other * *self
    }

    /// Frobenius distance `‖self − other‖_F`.
    pub fn distance(&self, other: &Matrix4) -> f64 {
        (*self - *other).frobenius_norm()
    }

    pub fn approx_eq(&self, other: &Matrix4, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> Complex {
        let mut a = self.0;
        let mut det = ONE;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
                .unwrap_or(col);
            if a[pivot][col].norm() == 0.0 {
                return ZERO;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= a[col][col];
            for row in (col + 1)..4 {
                let f = a[row][col] / a[col][col];
                for k in col..4 {
                    let t = a[col][k];
                    a[row][k] -= f * t;
                }
            }
        }
        det
    }

    /// Matrix exponential by scaling and squaring of a truncated Taylor series.
    ///
    /// The argument is halved until its norm drops below 1/2; 20 Taylor terms
    /// then leave a truncation error far below `f64` resolution.
    pub fn exp(&self) -> Matrix4 {
        let norm = self.frobenius_norm();
        let mut squarings = 0u32;
        if norm > 0.5 {
            squarings = (norm / 0.5).log2().ceil() as u32;
        }
        let scaled = self.scale_real(0.5f64.powi(squarings as i32));
        let mut term = Matrix4::identity();
        let mut sum = Matrix4::identity();
        for n in 1..=20 {
            term = (term * scaled).scale_real(1.0 / n as f64);
            sum += term;
        }
        for _ in 0..squarings {
            sum = sum * sum;
        }
        sum
    }
}

impl Index<(usize, usize)> for Matrix4 {
    type Output = Complex;
    fn index(&self, (r, c): (usize, usize)) -> &Complex {
        &self.0[r][c]
    }
}

impl IndexMut<(usize, usize)> for Matrix4 {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex {
        &mut self.0[r][c]
    }
}

impl Add for Matrix4 {
    type Output = Matrix4;
    fn add(self, rhs: Matrix4) -> Matrix4 {
        Matrix4(std::array::from_fn(|r| {
            std::array::from_fn(|c| self.0[r][c] + rhs.0[r][c])
        }))
    }
}

impl AddAssign for Matrix4 {
    fn add_assign(&mut self, rhs: Matrix4) {
        *self = *self + rhs;
    }
}

impl Sub for Matrix4 {
    type Output = Matrix4;
    fn sub(self, rhs: Matrix4) -> Matrix4 {
        Matrix4(std::array::from_fn(|r| {
            std::array::from_fn(|c| self.0[r][c] - rhs.0[r][c])
        }))
    }
}

impl Neg for Matrix4 {
    type Output = Matrix4;
    fn neg(self) -> Matrix4 {
        self.scale_real(-1.0)
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: Matrix4) -> Matrix4 {
        Matrix4(std::array::from_fn(|r| {
            std::array::from_fn(|c| (0..4).map(|k| self.0[r][k] * rhs.0[k][c]).sum())
        }))
    }
}

impl Mul<Bispinor> for Matrix4 {
    type Output = Bispinor;
    fn mul(self, rhs: Bispinor) -> Bispinor {
        self.apply(&rhs)
    }
}

impl Mul<Complex> for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: Complex) -> Matrix4 {
        self.scale(rhs)
    }
}

impl Mul<f64> for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: f64) -> Matrix4 {
        self.scale_real(rhs)
    }
}

/// Gamma-matrix basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    /// Dirac basis: `γ⁰ = diag(1, 1, −1, −1)`, `γ⁵` off-diagonal.
    Standard,
    /// Chiral basis: `γ⁵ = diag(1, 1, −1, −1)`, `γ⁰` off-diagonal.
    Weyl,
}

impl Representation {
    pub const ALL: [Representation; 2] = [Representation::Standard, Representation::Weyl];
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Representation::Standard => "standard",
            Representation::Weyl => "weyl",
        })
    }
}

/// All gamma-matrix structures of one representation.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaSet {
    pub rep: Representation,
    /// `γ^μ` with upper index, μ = 0..3.
    pub gamma: [Matrix4; 4],
    pub gamma5: Matrix4,
    /// `α_k = γ⁰γ^k`.
    pub alpha: [Matrix4; 3],
    /// `α⁵ = γ⁰γ⁵`, squares to `−I`.
    pub alpha5: Matrix4,
    /// Spin matrices `Σ_k = α_k γ⁵`.
    pub sigma_spin: [Matrix4; 3],
}

impl GammaSet {
    pub fn new(rep: Representation) -> GammaSet {
        let s = pauli();
        let (one, zero) = (Matrix2::IDENTITY, Matrix2::ZERO);
        let (gamma, gamma5) = match rep {
            Representation::Standard => (
                [
                    Matrix4::from_blocks(one, zero, zero, -one),
                    Matrix4::from_blocks(zero, s[0], -s[0], zero),
                    Matrix4::from_blocks(zero, s[1], -s[1], zero),
                    Matrix4::from_blocks(zero, s[2], -s[2], zero),
                ],
                Matrix4::from_blocks(zero, one, one, zero),
            ),
            Representation::Weyl => (
                [
                    Matrix4::from_blocks(zero, one, one, zero),
                    Matrix4::from_blocks(zero, -s[0], s[0], zero),
                    Matrix4::from_blocks(zero, -s[1], s[1], zero),
                    Matrix4::from_blocks(zero, -s[2], s[2], zero),
                ],
                Matrix4::from_blocks(one, zero, zero, -one),
            ),
        };
        let alpha: [Matrix4; 3] = std::array::from_fn(|k| gamma[0] * gamma[k + 1]);
        let sigma_spin = alpha.map(|a| a * gamma5);
        GammaSet {
            rep,
            gamma,
            gamma5,
            alpha,
            alpha5: gamma[0] * gamma5,
            sigma_spin,
        }
    }

    /// `γ_μ = g_{μν} γ^ν`.
    pub fn lowered(&self, mu: usize) -> Matrix4 {
        self.gamma[mu] * METRIC[mu]
    }

    /// `p̸ = p_μ γ^μ = ε γ⁰ − p·γ`.
    pub fn slash(&self, p: &FourVector) -> Matrix4 {
        let c = p.components();
        (0..4).fold(Matrix4::ZERO, |acc, mu| acc + self.gamma[mu] * (METRIC[mu] * c[mu]))
    }

    /// `α·p` for a 3-vector.
    pub fn alpha_dot(&self, p: [f64; 3]) -> Matrix4 {
        (0..3).fold(Matrix4::ZERO, |acc, k| acc + self.alpha[k] * p[k])
    }

    /// `Σ·p` for a 3-vector.
    pub fn spin_dot(&self, p: [f64; 3]) -> Matrix4 {
        (0..3).fold(Matrix4::ZERO, |acc, k| acc + self.sigma_spin[k] * p[k])
    }

    /// Helicity operator `Λ = (p·Σ)/|p|`.
    pub fn helicity_operator(&self, p: [f64; 3]) -> Result<Matrix4> {
        let k = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
        if k == 0.0 {
            return Err(Error::ZeroMomentum);
        }
        Ok(self.spin_dot(p) * (1.0 / k))
    }

    /// Spin tensor `σ_{μν} = (i/2)(γ_μγ_ν − γ_νγ_μ)`, lower indices.
    pub fn sigma_tensor(&self, mu: usize, nu: usize) -> Result<Matrix4> {
        if mu > 3 || nu > 3 {
            return Err(Error::invalid(format!(
                "spin tensor indices must lie in 0..=3, got ({mu}, {nu})"
            )));
        }
        let (a, b) = (self.lowered(mu), self.lowered(nu));
        Ok(a.commutator(&b) * Complex::new(0.0, 0.5))
    }

    /// Convenience: the matrix `γ^μ` for μ in 0..=3, or `γ⁵` for μ = 5.
    pub fn gamma_or_five(&self, mu: usize) -> Option<&Matrix4> {
        match mu {
            0..=3 => Some(&self.gamma[mu]),
            5 => Some(&self.gamma5),
            _ => None,
        }
    }
}

pub fn gamma_set(rep: Representation) -> GammaSet {
    GammaSet::new(rep)
}

/// Change of basis `W` taking Weyl-basis bispinors `(ξ; η)` to standard-basis
/// `(φ; χ)` with `φ = (ξ+η)/√2`, `χ = (ξ−η)/√2`.
///
/// `W` is real symmetric and its own inverse, so `W γ_Weyl W = γ_Standard`.
pub fn representation_change() -> Matrix4 {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let one = Matrix2::IDENTITY.scale(h.into());
    Matrix4::from_blocks(one, one, one, -one)
}
