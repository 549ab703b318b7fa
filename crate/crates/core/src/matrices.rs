//! Symbolic matrices over the coefficient ring and over noncommutative
//! polynomials: the colour-dependent R-matrices, Kronecker products,
//! Yang-Baxter and RTT residuals, and expansion of the matrix-form
//! relations into component relations.
//!
//! Basis conventions: two-dimensional indices `1, 2` correspond to `(x, y)`
//! and `(xi, eta)`; the tensor basis is ordered `11, 12, 21, 22` and the
//! Kronecker product is row-major, `(A ⊗ B)[(i1,i2),(j1,j2)] =
//! A[i1,j1]·B[i2,j2]` with `(i1,i2) ↦ 2·i1 + i2`.

use thiserror::Error;

use crate::algebra::{GenKind, Generator, NcPoly, Word};
use crate::coeff::{CoeffPoly, ExponentForm};
use crate::colour::ColourSymbol;
use crate::rewrite::{RewriteError, RewriteSystem, Sector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix dimensions do not match: {0}")]
    Shape(String),
    #[error("matrix is singular over the coefficient ring (no invertible pivot in column {0})")]
    Singular(usize),
}

/// A dense matrix over the commutative coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMatrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<CoeffPoly<R>>,
}

impl<R: Scalar> CMatrix<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        CMatrix { rows, cols, entries: vec![CoeffPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, CoeffPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CoeffPoly<R>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix rows");
        CMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &CoeffPoly<R> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CoeffPoly<R>) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &CoeffPoly<R>) -> Self {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = CoeffPoly::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.entry(i, k).mul(other.entry(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Row-major Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        out.set(
                            i1 * other.rows + i2,
                            j1 * other.cols + j2,
                            self.entry(i1, j1).mul(other.entry(i2, j2)),
                        );
                    }
                }
            }
        }
        out
    }

    /// Exact inverse by Gauss-Jordan elimination with invertible-monomial
    /// pivots. Fails with [`MatrixError::Singular`] when a column has no
    /// invertible pivot, which cannot happen for the R-matrix family at
    /// generic `q`.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::Shape(format!("{}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| a.entry(r, col).inverse_monomial().is_some())
                .ok_or(MatrixError::Singular(col))?;
            if pivot_row != col {
                for j in 0..n {
                    let tmp = a.entry(col, j).clone();
                    a.set(col, j, a.entry(pivot_row, j).clone());
                    a.set(pivot_row, j, tmp);
                    let tmp = inv.entry(col, j).clone();
                    inv.set(col, j, inv.entry(pivot_row, j).clone());
                    inv.set(pivot_row, j, tmp);
                }
            }
            let pinv = a.entry(col, col).inverse_monomial().expect("pivot chosen invertible");
            for j in 0..n {
                a.set(col, j, a.entry(col, j).mul(&pinv));
                inv.set(col, j, inv.entry(col, j).mul(&pinv));
            }
            for r in 0..n {
                if r == col || a.entry(r, col).is_zero() {
                    continue;
                }
                let f = a.entry(r, col).clone();
                for j in 0..n {
                    a.set(r, j, a.entry(r, j).sub(&f.mul(a.entry(col, j))));
                    inv.set(r, j, inv.entry(r, j).sub(&f.mul(inv.entry(col, j))));
                }
            }
        }
        Ok(inv)
    }
}

// ---------------------------------------------------------------------------
// the named matrices
// ---------------------------------------------------------------------------

/// The six named 4×4 matrices of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixName {
    /// The colour-dependent R-matrix.
    R,
    /// The braided matrix `R̂ = P·R`.
    Rhat,
    /// Coordinate exchange matrix `B = q⁻¹·R̂`.
    B,
    /// Grassmann exchange matrix `C = q·R̂`.
    C,
    /// Derivative-differential matrix `D = C⁻¹`.
    D,
    /// Derivative exchange matrix `F = q⁻¹·R̂`.
    F,
}

impl MatrixName {
    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "R" | "r" => Some(MatrixName::R),
            "Rhat" | "rhat" => Some(MatrixName::Rhat),
            "B" | "b" => Some(MatrixName::B),
            "C" | "c" => Some(MatrixName::C),
            "D" | "d" => Some(MatrixName::D),
            "F" | "f" => Some(MatrixName::F),
            _ => None,
        }
    }
}

fn qe<R: Scalar>(k: i64, a: i64, c1: &ColourSymbol<R>, b: i64, c2: &ColourSymbol<R>) -> CoeffPoly<R> {
    CoeffPoly::q_pow(
        ExponentForm::int(k)
            .plus_colour(c1, R::int(a))
            .plus_colour(c2, R::int(b)),
    )
}

/// The 4×4 flip (permutation) operator `P(v ⊗ w) = w ⊗ v`.
pub fn flip2<R: Scalar>() -> CMatrix<R> {
    let mut p = CMatrix::zero(4, 4);
    // basis 11, 12, 21, 22
    p.set(0, 0, CoeffPoly::one());
    p.set(1, 2, CoeffPoly::one());
    p.set(2, 1, CoeffPoly::one());
    p.set(3, 3, CoeffPoly::one());
    p
}

/// Build one of the named matrices at the given colour pair.
pub fn build_matrix<R: Scalar>(
    name: MatrixName,
    c1: &ColourSymbol<R>,
    c2: &ColourSymbol<R>,
) -> Result<CMatrix<R>, MatrixError> {
    let zero = CoeffPoly::zero;
    let qq = CoeffPoly::<R>::q_int(1).sub(&CoeffPoly::q_int(-1));
    let m = match name {
        MatrixName::R => CMatrix::from_rows(vec![
            vec![qe(1, -1, c1, 1, c2), zero(), zero(), zero()],
            vec![zero(), qe(0, 1, c1, 1, c2), zero(), zero()],
            vec![zero(), qq, qe(0, -1, c1, -1, c2), zero()],
            vec![zero(), zero(), zero(), qe(1, 1, c1, -1, c2)],
        ]),
        MatrixName::Rhat => CMatrix::from_rows(vec![
            vec![qe(1, -1, c1, 1, c2), zero(), zero(), zero()],
            vec![zero(), qq, qe(0, -1, c1, -1, c2), zero()],
            vec![zero(), qe(0, 1, c1, 1, c2), zero(), zero()],
            vec![zero(), zero(), zero(), qe(1, 1, c1, -1, c2)],
        ]),
        MatrixName::B | MatrixName::F => {
            build_matrix(MatrixName::Rhat, c1, c2)?.scale(&CoeffPoly::q_int(-1))
        }
        MatrixName::C => build_matrix(MatrixName::Rhat, c1, c2)?.scale(&CoeffPoly::q_int(1)),
        MatrixName::D => build_matrix(MatrixName::C, c1, c2)?.inverse()?,
    };
    Ok(m)
}

/// `R12 = R ⊗ I` on the first two legs of a three-fold tensor space.
pub fn embed_12<R: Scalar>(m: &CMatrix<R>) -> CMatrix<R> {
    m.kron(&CMatrix::identity(2))
}

/// `R23 = I ⊗ R` on the last two legs.
pub fn embed_23<R: Scalar>(m: &CMatrix<R>) -> CMatrix<R> {
    CMatrix::identity(2).kron(m)
}

/// `R13`: conjugate the `12`-embedding with the `(2,3)` flip.
pub fn embed_13<R: Scalar>(m: &CMatrix<R>) -> CMatrix<R> {
    let p23 = CMatrix::identity(2).kron(&flip2());
    p23.mul(&embed_12(m)).mul(&p23)
}

/// The coloured quantum Yang-Baxter residual
/// `R12(c1,c2)·R13(c1,c3)·R23(c2,c3) - R23(c2,c3)·R13(c1,c3)·R12(c1,c2)`.
pub fn ybe_residual<R: Scalar>(
    c1: &ColourSymbol<R>,
    c2: &ColourSymbol<R>,
    c3: &ColourSymbol<R>,
) -> Result<CMatrix<R>, MatrixError> {
    let r12 = embed_12(&build_matrix(MatrixName::R, c1, c2)?);
    let r13 = embed_13(&build_matrix(MatrixName::R, c1, c3)?);
    let r23 = embed_23(&build_matrix(MatrixName::R, c2, c3)?);
    Ok(r12.mul(&r13).mul(&r23).sub(&r23.mul(&r13).mul(&r12)))
}

/// The braided Yang-Baxter residual for `R̂ = P·R`.
///
/// Transporting the quantum Yang-Baxter equation through the flips fixes
/// the colour placement:
/// `R̂12(c2,c3)·R̂23(c1,c3)·R̂12(c1,c2) = R̂23(c1,c2)·R̂12(c1,c3)·R̂23(c2,c3)`.
pub fn braided_ybe_residual<R: Scalar>(
    c1: &ColourSymbol<R>,
    c2: &ColourSymbol<R>,
    c3: &ColourSymbol<R>,
) -> Result<CMatrix<R>, MatrixError> {
    let rh = |a: &ColourSymbol<R>, b: &ColourSymbol<R>| build_matrix(MatrixName::Rhat, a, b);
    let lhs = embed_12(&rh(c2, c3)?).mul(&embed_23(&rh(c1, c3)?)).mul(&embed_12(&rh(c1, c2)?));
    let rhs = embed_23(&rh(c1, c2)?).mul(&embed_12(&rh(c1, c3)?)).mul(&embed_23(&rh(c2, c3)?));
    Ok(lhs.sub(&rhs))
}

/// The permutation operator of the 3-cycle free transport identity:
/// `braided_ybe_residual = -P·ybe_residual·(flip bookkeeping)`, exposed for
/// the equivalence test: `P131 = P12·P23·P12` reverses all three legs.
pub fn flip_131<R: Scalar>() -> CMatrix<R> {
    let p12 = flip2::<R>().kron(&CMatrix::identity(2));
    let p23 = CMatrix::identity(2).kron(&flip2::<R>());
    p12.mul(&p23).mul(&p12)
}

// ---------------------------------------------------------------------------
// matrices over noncommutative entries
// ---------------------------------------------------------------------------

/// A dense matrix with noncommutative polynomial entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcMatrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<NcPoly<R>>,
}

impl<R: Scalar> NcMatrix<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        NcMatrix { rows, cols, entries: vec![NcPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, NcPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<NcPoly<R>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix rows");
        NcMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &NcPoly<R> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: NcPoly<R>) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[NcPoly<R>] {
        &self.entries
    }

    pub fn from_coeff(m: &CMatrix<R>) -> Self {
        NcMatrix {
            rows: m.rows,
            cols: m.cols,
            entries: m.entries.iter().map(|c| NcPoly::scalar(c.clone())).collect(),
        }
    }

    /// Order-preserving product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = NcPoly::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.entry(i, k).mul(other.entry(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        NcMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        out.set(
                            i1 * other.rows + i2,
                            j1 * other.cols + j2,
                            self.entry(i1, j1).mul(other.entry(i2, j2)),
                        );
                    }
                }
            }
        }
        out
    }
}

/// The quantum matrix `T` at one colour.
pub fn t_matrix<R: Scalar>(colour: &ColourSymbol<R>) -> NcMatrix<R> {
    let g = |k: GenKind| NcPoly::generator(k, colour.clone());
    NcMatrix::from_rows(vec![
        vec![g(GenKind::A), g(GenKind::B)],
        vec![g(GenKind::C), g(GenKind::D)],
    ])
}

/// The 16 entries of `R(c1,c2)·T1(c1)·T2(c2) - T2(c2)·T1(c1)·R(c1,c2)`.
pub fn rtt_relations<R: Scalar>(
    c1: &ColourSymbol<R>,
    c2: &ColourSymbol<R>,
) -> Result<Vec<NcPoly<R>>, MatrixError> {
    let r = NcMatrix::from_coeff(&build_matrix(MatrixName::R, c1, c2)?);
    let t1 = t_matrix(c1).kron(&NcMatrix::identity(2));
    let t2 = NcMatrix::identity(2).kron(&t_matrix(c2));
    let residual = r.mul(&t1).mul(&t2).sub(&t2.mul(&t1).mul(&r));
    Ok(residual.entries().to_vec())
}

// ---------------------------------------------------------------------------
// component expansion of the matrix-form relations
// ---------------------------------------------------------------------------

/// The six matrix-form relation families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixForm {
    /// `x^i_{c1} x^j_{c2} = B^{ij}_{kl} x^k_{c2} x^l_{c1}`
    Plane,
    /// `ξ^i_{c1} ξ^j_{c2} = -C^{ij}_{kl} ξ^k_{c2} ξ^l_{c1}`
    Hyperplane,
    /// `∂_{j c1} x^i_{c2} = δ^i_j + C^{ik}_{jl} x^l_{c2} ∂_{k c1}`
    VarDeriv,
    /// `∂_{i c1} ∂_{j c2} = F^{lk}_{ji} ∂_{k c2} ∂_{l c1}`, `i ≤ j`
    DerivDeriv,
    /// `x^i_{c1} ξ^j_{c2} = C^{ij}_{kl} ξ^k_{c2} x^l_{c1}`
    VarDiff,
    /// `∂_{j c1} ξ^i_{c2} = D^{ik}_{jl} ξ^l_{c2} ∂_{k c1}`
    DerivDiff,
}

impl MatrixForm {
    pub const ALL: [MatrixForm; 6] = [
        MatrixForm::Plane,
        MatrixForm::Hyperplane,
        MatrixForm::VarDeriv,
        MatrixForm::DerivDeriv,
        MatrixForm::VarDiff,
        MatrixForm::DerivDiff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MatrixForm::Plane => "plane",
            MatrixForm::Hyperplane => "hyperplane",
            MatrixForm::VarDeriv => "var-deriv",
            MatrixForm::DerivDeriv => "deriv-deriv",
            MatrixForm::VarDiff => "var-diff",
            MatrixForm::DerivDiff => "deriv-diff",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        MatrixForm::ALL.iter().copied().find(|f| f.name() == s)
    }

    /// The sector whose explicit rule families must absorb the components.
    pub fn sector(self) -> Sector {
        match self {
            MatrixForm::Plane => Sector::Plane,
            MatrixForm::Hyperplane => Sector::Hyperplane,
            _ => Sector::Calculus,
        }
    }
}

fn coordinate(i: usize) -> GenKind {
    if i == 0 {
        GenKind::X
    } else {
        GenKind::Y
    }
}

fn form(i: usize) -> GenKind {
    if i == 0 {
        GenKind::Xi
    } else {
        GenKind::Eta
    }
}

fn derivative(i: usize) -> GenKind {
    if i == 0 {
        GenKind::Dx
    } else {
        GenKind::Dy
    }
}

fn two_letter<R: Scalar>(
    k1: GenKind,
    c1: &ColourSymbol<R>,
    k2: GenKind,
    c2: &ColourSymbol<R>,
) -> NcPoly<R> {
    NcPoly::from_word(Word(vec![
        Generator::new(k1, c1.clone()),
        Generator::new(k2, c2.clone()),
    ]))
}

/// Expand one matrix-form family into its component relation polynomials.
///
/// The case split on the free indices: off-diagonal components use the
/// matrix at `(c1, c2)`, diagonal components the matrix at `(c2, c1)`; the
/// derivative-derivative family always uses `F(c1, c2)` and is stated for
/// `i ≤ j` only, the `i > j` relations being the same equations read
/// backwards.
pub fn component_expand<R: Scalar>(
    which: MatrixForm,
    c1: &ColourSymbol<R>,
    c2: &ColourSymbol<R>,
) -> Result<Vec<NcPoly<R>>, MatrixError> {
    let tensor = |i: usize, j: usize| i * 2 + j;
    let pick = |i: usize, j: usize| -> Result<CMatrix<R>, MatrixError> {
        let name = match which {
            MatrixForm::Plane => MatrixName::B,
            MatrixForm::Hyperplane | MatrixForm::VarDeriv | MatrixForm::VarDiff => MatrixName::C,
            MatrixForm::DerivDeriv => MatrixName::F,
            MatrixForm::DerivDiff => MatrixName::D,
        };
        if which != MatrixForm::DerivDeriv && i == j {
            build_matrix(name, c2, c1)
        } else {
            build_matrix(name, c1, c2)
        }
    };

    let mut out = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            if which == MatrixForm::DerivDeriv && i > j {
                continue;
            }
            let m = pick(i, j)?;
            let rel = match which {
                // x^i_{c1} x^j_{c2} - Σ B^{ij}_{kl} x^k_{c2} x^l_{c1}
                MatrixForm::Plane => {
                    let mut rel = two_letter(coordinate(i), c1, coordinate(j), c2);
                    for k in 0..2 {
                        for l in 0..2 {
                            rel = rel.sub(
                                &two_letter(coordinate(k), c2, coordinate(l), c1)
                                    .scale(m.entry(tensor(i, j), tensor(k, l))),
                            );
                        }
                    }
                    rel
                }
                // ξ^i_{c1} ξ^j_{c2} + Σ C^{ij}_{kl} ξ^k_{c2} ξ^l_{c1}
                MatrixForm::Hyperplane => {
                    let mut rel = two_letter(form(i), c1, form(j), c2);
                    for k in 0..2 {
                        for l in 0..2 {
                            rel = rel.add(
                                &two_letter(form(k), c2, form(l), c1)
                                    .scale(m.entry(tensor(i, j), tensor(k, l))),
                            );
                        }
                    }
                    rel
                }
                // ∂_{j c1} x^i_{c2} - δ^i_j - Σ C^{ik}_{jl} x^l_{c2} ∂_{k c1}
                MatrixForm::VarDeriv => {
                    let mut rel = two_letter(derivative(j), c1, coordinate(i), c2);
                    if i == j {
                        rel = rel.sub(&NcPoly::one());
                    }
                    for k in 0..2 {
                        for l in 0..2 {
                            rel = rel.sub(
                                &two_letter(coordinate(l), c2, derivative(k), c1)
                                    .scale(m.entry(tensor(i, k), tensor(j, l))),
                            );
                        }
                    }
                    rel
                }
                // ∂_{i c1} ∂_{j c2} - Σ F^{lk}_{ji} ∂_{k c2} ∂_{l c1}
                MatrixForm::DerivDeriv => {
                    let mut rel = two_letter(derivative(i), c1, derivative(j), c2);
                    for k in 0..2 {
                        for l in 0..2 {
                            rel = rel.sub(
                                &two_letter(derivative(k), c2, derivative(l), c1)
                                    .scale(m.entry(tensor(l, k), tensor(j, i))),
                            );
                        }
                    }
                    rel
                }
                // x^i_{c1} ξ^j_{c2} - Σ C^{ij}_{kl} ξ^k_{c2} x^l_{c1}
                MatrixForm::VarDiff => {
                    let mut rel = two_letter(coordinate(i), c1, form(j), c2);
                    for k in 0..2 {
                        for l in 0..2 {
                            rel = rel.sub(
                                &two_letter(form(k), c2, coordinate(l), c1)
                                    .scale(m.entry(tensor(i, j), tensor(k, l))),
                            );
                        }
                    }
                    rel
                }
                // ∂_{j c1} ξ^i_{c2} - Σ D^{ik}_{jl} ξ^l_{c2} ∂_{k c1}
                MatrixForm::DerivDiff => {
                    let mut rel = two_letter(derivative(j), c1, form(i), c2);
                    for k in 0..2 {
                        for l in 0..2 {
                            rel = rel.sub(
                                &two_letter(form(l), c2, derivative(k), c1)
                                    .scale(m.entry(tensor(i, k), tensor(j, l))),
                            );
                        }
                    }
                    rel
                }
            };
            out.push(rel);
        }
    }
    Ok(out)
}

/// Fraction-free reduction of `target` against the span of `basis`.
///
/// Returns the reduced remainder; zero means a nonzero ring multiple of the
/// target lies in the coefficient-linear span of the basis (membership over
/// generic `q`, where every nonzero coefficient is invertible). The
/// coefficient ring is an integral domain, so cross-multiplication by
/// pivots never kills a nonzero vector.
pub fn span_reduce<R: Scalar>(target: &NcPoly<R>, basis: &[NcPoly<R>]) -> NcPoly<R> {
    let mut rows: Vec<NcPoly<R>> = basis.iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut reduced = target.clone();
    let mut used: Vec<Word<R>> = Vec::new();
    loop {
        // triangularize lazily: pick an unused pivot word from some row
        let mut progressed = false;
        for r in 0..rows.len() {
            let pivot_word = rows[r]
                .terms()
                .map(|(w, _)| w.clone())
                .find(|w| !used.contains(w));
            let Some(w) = pivot_word else { continue };
            let pc = rows[r].coefficient(&w);
            if pc.is_zero() {
                continue;
            }
            // eliminate w from every other row and from the target
            let row = rows[r].clone();
            for (s, other) in rows.iter_mut().enumerate() {
                if s == r {
                    continue;
                }
                let oc = other.coefficient(&w);
                if !oc.is_zero() {
                    *other = other.scale(&pc).sub(&row.scale(&oc));
                }
            }
            let tc = reduced.coefficient(&w);
            if !tc.is_zero() {
                reduced = reduced.scale(&pc).sub(&row.scale(&tc));
            }
            used.push(w);
            progressed = true;
        }
        if !progressed {
            return reduced;
        }
        rows.retain(|p| !p.is_zero());
    }
}

/// Normalize every entry of an RTT residual against the FRT rules; the
/// result lists the entries that do not vanish (empty means consistency).
pub fn rtt_nonzero_entries<R: Scalar>(
    c1: &ColourSymbol<R>,
    c2: &ColourSymbol<R>,
) -> Result<Vec<(usize, NcPoly<R>)>, VerifyError> {
    let sys = RewriteSystem::new(Sector::Frt);
    let mut bad = Vec::new();
    for (i, rel) in rtt_relations(c1, c2)?.into_iter().enumerate() {
        let nf = sys.normalize(&rel)?;
        if !nf.is_zero() {
            bad.push((i, nf));
        }
    }
    Ok(bad)
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}
