//! Twisted centralizers `C(A, a) = { B : AB = aBA }`.
//!
//! With column-stacking `vec`, `vec(AB) = (I ⊗ A)·vec(B)` and
//! `vec(BA) = (Aᵀ ⊗ I)·vec(B)`, so `C(A, a)` is the kernel of
//! `T = (I ⊗ A) − a·(Aᵀ ⊗ I)`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Felt, Matrix, Vector};
use crate::MAX_ORDER;

/// Largest `p^(n²)` the brute-force oracle will enumerate.
pub const BRUTE_FORCE_LIMIT: u128 = 1 << 20;

/// A square matrix `A` together with the twist `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistSpec {
    matrix: Matrix,
    twist: Felt,
}

impl TwistSpec {
    pub fn new(matrix: Matrix, twist: Felt) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if matrix.rows() > MAX_ORDER {
            return Err(Error::InvalidOrder(matrix.rows()));
        }
        matrix.prime().ensure_same(twist.prime())?;
        Ok(TwistSpec { matrix, twist })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn twist(&self) -> Felt {
        self.twist
    }

    pub fn order(&self) -> usize {
        self.matrix.rows()
    }
}

/// A basis of `C(A, a)` whose vec images are the rows of an RREF matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerBasis {
    spec: TwistSpec,
    basis: Vec<Matrix>,
}

impl CentralizerBasis {
    pub fn spec(&self) -> &TwistSpec {
        &self.spec
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Vec images of the basis, i.e. the rows of the canonical generator matrix.
    pub fn generator_rows(&self) -> Vec<Vector> {
        self.basis.iter().map(Matrix::vec).collect()
    }

    /// Checks whether `b` lies in the span of the basis.
    pub fn spans(&self, b: &Matrix) -> Result<bool> {
        in_rref_span(&self.generator_rows(), &b.vec())
    }
}

/// Membership of `v` in the span of RREF rows: subtract `v[pivot]·row` for each row
/// and check that nothing remains.
pub(crate) fn in_rref_span(rows: &[Vector], v: &Vector) -> Result<bool> {
    let mut residual = v.clone();
    for row in rows {
        let Some(pivot) = row.values().iter().position(|&c| c != 0) else {
            continue;
        };
        let c = residual.get(pivot);
        if !c.is_zero() {
            residual = residual.add(&row.scale(-c)?)?;
        }
    }
    Ok(residual.is_zero())
}

/// Reduces a list of vectors to the nonzero rows of their RREF.
pub(crate) fn canonical_rows(vs: &[Vector]) -> Result<Vec<Vector>> {
    let Some(stack) = Matrix::from_row_vectors(vs)? else {
        return Ok(Vec::new());
    };
    let r = stack.rref();
    Ok((0..r.rank).map(|i| r.matrix.row(i)).collect())
}

fn from_vectors(spec: TwistSpec, vs: &[Vector]) -> Result<CentralizerBasis> {
    let n = spec.order();
    let basis = canonical_rows(vs)?
        .iter()
        .map(|v| Matrix::unvec(v, n, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(CentralizerBasis { spec, basis })
}

/// `T = (Iₙ ⊗ A) − a·(Aᵀ ⊗ Iₙ)`, so that `T·vec(B) = vec(AB − aBA)`.
pub fn twisted_operator(spec: &TwistSpec) -> Matrix {
    let a = &spec.matrix;
    let id = Matrix::identity(a.prime(), a.rows());
    let left = id.kronecker(a).expect("same field");
    let right = a
        .transpose()
        .kronecker(&id)
        .and_then(|m| m.scale(spec.twist))
        .expect("same field");
    left.sub(&right).expect("same shape")
}

/// Solves for `C(A, a)` as the null space of the twisted operator.
pub fn centralizer_code(spec: &TwistSpec) -> Result<CentralizerBasis> {
    let kernel = twisted_operator(spec).kernel_basis();
    from_vectors(spec.clone(), &kernel)
}

pub fn is_member(b: &Matrix, spec: &TwistSpec) -> Result<bool> {
    let a = &spec.matrix;
    a.prime().ensure_same(b.prime())?;
    if b.shape() != a.shape() {
        return Err(Error::ShapeMismatch {
            op: "is_member",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let ab = a.mul(b)?;
    let aba = b.mul(a)?.scale(spec.twist)?;
    Ok(ab == aba)
}

/// Enumerates every `n × n` matrix over GF(p) and keeps the members of `C(A, a)`.
///
/// Test oracle only: the work is `p^(n²)`, capped at [`BRUTE_FORCE_LIMIT`].
/// Results are in enumeration order (index `i` has base-p digits as its
/// row-major entries, most significant first).
pub fn brute_force_centralizer(spec: &TwistSpec) -> Result<Vec<Matrix>> {
    let p = spec.matrix.prime();
    let n = spec.order();
    let cells = (n * n) as u32;
    let total = (p.get() as u128)
        .checked_pow(cells)
        .filter(|&w| w <= BRUTE_FORCE_LIMIT)
        .ok_or(Error::GuardExceeded {
            what: "brute-force centralizer p^(n^2)",
            work: (p.get() as u128).saturating_pow(cells),
            limit: BRUTE_FORCE_LIMIT,
        })? as u64;
    let q = p.get() as u64;
    let mut members: Vec<(u64, Matrix)> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let mut digits = vec![0u32; n * n];
            let mut rest = idx;
            for slot in digits.iter_mut().rev() {
                *slot = (rest % q) as u32;
                rest /= q;
            }
            let b = Matrix::new(p, n, n, digits).expect("digits < p");
            match is_member(&b, spec) {
                Ok(true) => Some((idx, b)),
                _ => None,
            }
        })
        .collect();
    members.sort_unstable_by_key(|(idx, _)| *idx);
    Ok(members.into_iter().map(|(_, b)| b).collect())
}

/// Carries a basis of `C(D, a)` to `C(A, a)` for `D = P·A·P⁻¹` via `B ↦ P⁻¹·B·P`.
///
/// `target` is `A`. Every image is checked for membership in `C(A, a)`; a
/// failure means `D` is not `P·A·P⁻¹`.
pub fn conjugation_transfer(
    basis_d: &CentralizerBasis,
    conj: &Matrix,
    target: &Matrix,
) -> Result<CentralizerBasis> {
    let conj_inv = conj.inverse()?;
    let spec = TwistSpec::new(target.clone(), basis_d.spec.twist)?;
    let mut images = Vec::with_capacity(basis_d.dim());
    for b in &basis_d.basis {
        let img = conj_inv.mul(b)?.mul(conj)?;
        if !is_member(&img, &spec)? {
            return Err(Error::TransferBroke);
        }
        images.push(img.vec());
    }
    from_vectors(spec, &images)
}
