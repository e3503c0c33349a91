//! Combinatorial matrices `A = xJₙ + yIₙ` and their spectra over GF(p).
//!
//! `A` has the all-ones vector `u` as an eigenvector with eigenvalue `xn + y`,
//! and every vector with coordinate sum zero is an eigenvector for `y`. Over
//! GF(p) the two eigenvalues can coincide (when `p | xn`); then `u` itself has
//! coordinate sum zero and `A` is defective unless `x = 0`.
//!
//! Diagonalization here uses an explicit eigenbasis. Conjugating by the
//! elementary row operations "subtract row 1 from row i" only reaches an
//! upper-triangular form (first row `xn + y, x, …, x`); see [`triangularize`].
//! Its diagonal carries the same eigenvalues.

use crate::error::{Error, Result};
use crate::linalg::{Felt, Matrix, Prime, Vector};
use crate::MAX_ORDER;

/// Largest characteristic accepted by [`eigen_scan`].
pub const SCAN_PRIME_LIMIT: u32 = 997;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CombParams {
    n: usize,
    x: Felt,
    y: Felt,
}

impl CombParams {
    pub fn new(n: usize, x: Felt, y: Felt) -> Result<Self> {
        x.prime().ensure_same(y.prime())?;
        if !(2..=MAX_ORDER).contains(&n) {
            return Err(Error::InvalidOrder(n));
        }
        Ok(CombParams { n, x, y })
    }

    /// Convenience constructor from raw integers; `x` and `y` are reduced mod p.
    pub fn from_ints(n: usize, x: u64, y: u64, p: u64) -> Result<Self> {
        let p = Prime::new(p)?;
        Self::new(n, p.elt(x), p.elt(y))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> Felt {
        self.x
    }

    pub fn y(&self) -> Felt {
        self.y
    }

    pub fn prime(&self) -> Prime {
        self.x.prime()
    }

    /// `xn + y` reduced mod p: the eigenvalue on the all-ones vector.
    pub fn row_sum(&self) -> Felt {
        self.x.times(self.n as u64) + self.y
    }

    /// Whether `(p, n, x, y)` satisfies `p | xn + y` with `x, y ≢ 0`.
    pub fn theorem_hypotheses(&self) -> bool {
        self.row_sum().is_zero() && !self.x.is_zero() && !self.y.is_zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialKind {
    /// All-ones `Jₙ`.
    AllOnes,
    /// Identity `Iₙ`.
    Identity,
    /// Single 1 in the (1,1) position.
    E11,
}

pub fn special_matrix(kind: SpecialKind, n: usize, p: Prime) -> Result<Matrix> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidOrder(n));
    }
    Ok(match kind {
        SpecialKind::AllOnes => Matrix::from_fn(p, n, n, |_, _| 1),
        SpecialKind::Identity => Matrix::identity(p, n),
        SpecialKind::E11 => Matrix::from_fn(p, n, n, |i, j| (i == 0 && j == 0) as u64),
    })
}

pub fn comb_matrix(params: &CombParams) -> Matrix {
    let (x, y) = (params.x.value() as u64, params.y.value() as u64);
    Matrix::from_fn(params.prime(), params.n, params.n, |i, j| {
        if i == j {
            x + y
        } else {
            x
        }
    })
}

/// Eigenvalues with geometric multiplicities, sorted by eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spectrum {
    pairs: Vec<(Felt, usize)>,
}

impl Spectrum {
    fn from_pairs(mut pairs: Vec<(Felt, usize)>) -> Self {
        pairs.retain(|&(_, m)| m > 0);
        pairs.sort_by_key(|(l, _)| l.value());
        Spectrum { pairs }
    }

    pub fn pairs(&self) -> &[(Felt, usize)] {
        &self.pairs
    }

    pub fn multiplicity(&self, eigenvalue: Felt) -> usize {
        self.pairs
            .iter()
            .find(|(l, _)| *l == eigenvalue)
            .map_or(0, |&(_, m)| m)
    }

    pub fn total_multiplicity(&self) -> usize {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    /// `(eigenvalue, multiplicity)` as plain integers.
    pub fn as_ints(&self) -> Vec<(u32, usize)> {
        self.pairs.iter().map(|&(l, m)| (l.value(), m)).collect()
    }
}

/// Scans every `λ ∈ GF(p)` and records `nullity(M − λI)` when positive.
pub fn eigen_scan(m: &Matrix) -> Result<Spectrum> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let p = m.prime();
    if p.get() > SCAN_PRIME_LIMIT {
        return Err(Error::ScanTooLarge {
            p: p.get(),
            limit: SCAN_PRIME_LIMIT,
        });
    }
    let id = Matrix::identity(p, m.rows());
    let mut pairs = Vec::new();
    for lambda in p.elements() {
        let shifted = m.sub(&id.scale(lambda)?)?;
        pairs.push((lambda, shifted.nullity()));
    }
    Ok(Spectrum::from_pairs(pairs))
}

/// Closed-form spectrum of `xJₙ + yIₙ`.
pub fn comb_spectrum(params: &CombParams) -> Spectrum {
    let n = params.n;
    let (x, y) = (params.x, params.y);
    let top = params.row_sum();
    let pairs = if x.is_zero() {
        vec![(y, n)]
    } else if top != y {
        vec![(top, 1), (y, n - 1)]
    } else {
        // p | xn: u has coordinate sum zero, so only the n - 1 sum-zero directions remain.
        vec![(y, n - 1)]
    };
    Spectrum::from_pairs(pairs)
}

/// Checks `A·u = (xn + y)·u` for the all-ones vector `u`.
pub fn all_ones_eigencheck(params: &CombParams) -> bool {
    let p = params.prime();
    let u = Vector::ones(p, params.n);
    let lhs = comb_matrix(params).mul_vec(&u).expect("conformable by construction");
    let rhs = u.scale(params.row_sum()).expect("same field");
    lhs == rhs
}

/// A similarity `P·A·P⁻¹ = D` with `D` diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagPair {
    pub p: Matrix,
    pub p_inv: Matrix,
    pub d: Matrix,
}

impl DiagPair {
    /// Recomputes `P·A·P⁻¹` and compares it with `D`.
    pub fn conjugates(&self, a: &Matrix) -> Result<bool> {
        Ok(self.p.mul(a)?.mul(&self.p_inv)? == self.d)
    }
}

/// Diagonalizes `xJₙ + yIₙ` by an eigenbasis.
///
/// Row 1 of `P` is the all-ones vector; rows 2..n are the kernel basis of
/// `xJₙ` (equivalently of `Jₙ`). Then `D = diag(xn + y, y, …, y)`.
pub fn diagonalize(params: &CombParams) -> Result<DiagPair> {
    let p = params.prime();
    let n = params.n;
    if params.x.is_zero() {
        let id = Matrix::identity(p, n);
        return Ok(DiagPair {
            p: id.clone(),
            p_inv: id.clone(),
            d: id.scale(params.y)?,
        });
    }
    if comb_spectrum(params).total_multiplicity() < n {
        return Err(Error::Defective(p.get()));
    }
    let xj = special_matrix(SpecialKind::AllOnes, n, p)?.scale(params.x)?;
    let mut rows = vec![Vector::ones(p, n)];
    rows.extend(xj.kernel_basis());
    let pm = Matrix::from_row_vectors(&rows)?.expect("n >= 2 rows");
    let p_inv = pm.inverse()?;
    let mut diag = vec![params.y; n];
    diag[0] = params.row_sum();
    Ok(DiagPair {
        p: pm,
        p_inv,
        d: Matrix::diagonal(&diag),
    })
}

/// Conjugation by the elementary matrices `Rᵢ` ("subtract row 1 from row i").
///
/// Returns `(P, P·A·P⁻¹)` with `P = Rₙ₋₁⋯R₁`. The result is upper triangular
/// with diagonal `(xn + y, y, …, y)` and first row `(xn + y, x, …, x)`; it is
/// diagonal only when `x ≡ 0`.
pub fn triangularize(params: &CombParams) -> (Matrix, Matrix) {
    let p = params.prime();
    let n = params.n;
    let minus_one = (p.get() - 1) as u64;
    let mut pm = Matrix::identity(p, n);
    for i in 1..n {
        let r = Matrix::from_fn(p, n, n, |r, c| {
            if r == c {
                1
            } else if r == i && c == 0 {
                minus_one
            } else {
                0
            }
        });
        pm = r.mul(&pm).expect("square");
    }
    let inv = pm.inverse().expect("unit lower triangular");
    let t = pm
        .mul(&comb_matrix(params))
        .and_then(|m| m.mul(&inv))
        .expect("square");
    (pm, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, x: u64, y: u64, p: u64) -> CombParams {
        CombParams::from_ints(n, x, y, p).unwrap()
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(CombParams::from_ints(1, 1, 1, 3), Err(Error::InvalidOrder(1)));
        assert_eq!(CombParams::from_ints(65, 1, 1, 3), Err(Error::InvalidOrder(65)));
        assert!(CombParams::from_ints(64, 1, 1, 3).is_ok());
        let p3 = Prime::new(3).unwrap();
        let p5 = Prime::new(5).unwrap();
        assert!(CombParams::new(2, p3.one(), p5.one()).is_err());
    }

    #[test]
    fn comb_matrix_examples() {
        let p3 = Prime::new(3).unwrap();
        assert_eq!(
            comb_matrix(&params(2, 1, 1, 3)),
            Matrix::from_rows(p3, &[&[2, 1], &[1, 2]])
        );
        let p7 = Prime::new(7).unwrap();
        assert_eq!(comb_matrix(&params(4, 0, 1, 7)), Matrix::identity(p7, 4));
        let p5 = Prime::new(5).unwrap();
        assert_eq!(
            comb_matrix(&params(3, 1, 0, 5)),
            special_matrix(SpecialKind::AllOnes, 3, p5).unwrap()
        );
    }

    #[test]
    fn comb_matrix_matches_linear_combination() {
        for p in [2u64, 3, 5, 7] {
            let pr = Prime::new(p).unwrap();
            for n in 2..5 {
                let j = special_matrix(SpecialKind::AllOnes, n, pr).unwrap();
                let id = special_matrix(SpecialKind::Identity, n, pr).unwrap();
                for x in pr.elements() {
                    for y in pr.elements() {
                        let pr_ = CombParams::new(n, x, y).unwrap();
                        let expect = j.scale(x).unwrap().add(&id.scale(y).unwrap()).unwrap();
                        let a = comb_matrix(&pr_);
                        assert_eq!(a, expect);
                        assert_eq!(a.transpose(), a);
                    }
                }
            }
        }
    }

    #[test]
    fn special_matrices() {
        let p3 = Prime::new(3).unwrap();
        assert_eq!(
            special_matrix(SpecialKind::E11, 2, p3).unwrap(),
            Matrix::from_rows(p3, &[&[1, 0], &[0, 0]])
        );
        let p2 = Prime::new(2).unwrap();
        assert_eq!(
            special_matrix(SpecialKind::AllOnes, 2, p2).unwrap(),
            Matrix::from_rows(p2, &[&[1, 1], &[1, 1]])
        );
        let p5 = Prime::new(5).unwrap();
        assert_eq!(
            special_matrix(SpecialKind::Identity, 3, p5).unwrap(),
            Matrix::identity(p5, 3)
        );
        assert!(special_matrix(SpecialKind::E11, 0, p5).is_err());
        // n = 1 is allowed for the special matrices themselves
        assert_eq!(
            special_matrix(SpecialKind::AllOnes, 1, p5).unwrap(),
            Matrix::identity(p5, 1)
        );
    }

    #[test]
    fn eigen_scan_examples() {
        for p in [2, 5, 7] {
            let pr = Prime::new(p).unwrap();
            assert_eq!(eigen_scan(&Matrix::identity(pr, 4)).unwrap().as_ints(), vec![(1, 4)]);
        }
        let a = comb_matrix(&params(2, 1, 1, 3));
        assert_eq!(eigen_scan(&a).unwrap().as_ints(), vec![(0, 1), (1, 1)]);
        let a = comb_matrix(&params(3, 2, 1, 5));
        assert_eq!(eigen_scan(&a).unwrap().as_ints(), vec![(1, 2), (2, 1)]);

        let big = Prime::new(1009).unwrap();
        assert_eq!(
            eigen_scan(&Matrix::identity(big, 2)),
            Err(Error::ScanTooLarge { p: 1009, limit: 997 })
        );
        assert!(matches!(
            eigen_scan(&Matrix::zeros(big, 2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn comb_spectrum_examples() {
        assert_eq!(comb_spectrum(&params(2, 1, 1, 3)).as_ints(), vec![(0, 1), (1, 1)]);
        assert_eq!(comb_spectrum(&params(3, 2, 1, 5)).as_ints(), vec![(1, 2), (2, 1)]);
        assert_eq!(comb_spectrum(&params(3, 1, 1, 3)).as_ints(), vec![(1, 2)]);
        assert_eq!(comb_spectrum(&params(4, 0, 3, 5)).as_ints(), vec![(3, 4)]);
    }

    #[test]
    fn comb_spectrum_agrees_with_scan_small() {
        for p in [2u64, 3, 5, 7] {
            let pr = Prime::new(p).unwrap();
            for n in 2..=5 {
                for x in pr.elements() {
                    for y in pr.elements() {
                        let c = CombParams::new(n, x, y).unwrap();
                        assert_eq!(comb_spectrum(&c), eigen_scan(&comb_matrix(&c)).unwrap(), "{c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn all_ones_is_always_an_eigenvector() {
        assert!(all_ones_eigencheck(&params(2, 1, 1, 3)));
        assert!(all_ones_eigencheck(&params(3, 2, 1, 5)));
        for p in [2u64, 3, 5, 7, 11] {
            for n in 2..6 {
                for x in 0..p {
                    for y in 0..p {
                        assert!(all_ones_eigencheck(&params(n, x, y, p)));
                    }
                }
            }
        }
    }

    #[test]
    fn diagonalize_examples() {
        let c = params(2, 1, 1, 3);
        let dp = diagonalize(&c).unwrap();
        let p3 = Prime::new(3).unwrap();
        assert_eq!(dp.d, Matrix::diagonal(&[p3.zero(), p3.one()]));
        assert!(dp.conjugates(&comb_matrix(&c)).unwrap());

        let c = params(4, 0, 3, 7);
        let dp = diagonalize(&c).unwrap();
        let p7 = Prime::new(7).unwrap();
        assert_eq!(dp.p, Matrix::identity(p7, 4));
        assert_eq!(dp.d, Matrix::identity(p7, 4).scale(p7.elt(3)).unwrap());

        assert_eq!(diagonalize(&params(3, 1, 1, 3)), Err(Error::Defective(3)));
    }

    #[test]
    fn diagonalize_consistent_with_spectrum() {
        for p in [2u64, 3, 5, 7] {
            for n in 2..=5 {
                for x in 0..p {
                    for y in 0..p {
                        let c = params(n, x, y, p);
                        let spec = comb_spectrum(&c);
                        match diagonalize(&c) {
                            Ok(dp) => {
                                assert_eq!(spec.total_multiplicity(), n);
                                assert!(dp.d.is_diagonal());
                                assert!(dp.conjugates(&comb_matrix(&c)).unwrap());
                                for &(l, m) in spec.pairs() {
                                    let count = dp.d.diagonal_entries().iter().filter(|&&d| d == l).count();
                                    assert_eq!(count, m);
                                }
                                if c.theorem_hypotheses() {
                                    assert!(dp.d.get(0, 0).is_zero());
                                    assert!((1..n).all(|i| dp.d.get(i, i) == c.y()));
                                }
                            }
                            Err(e) => {
                                assert_eq!(e, Error::Defective(p as u32));
                                assert!(spec.total_multiplicity() < n);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn elementary_conjugation_is_triangular_not_diagonal() {
        // n = 2, x = y = 1 over GF(5): P·A·P⁻¹ = [[3, 1], [0, 1]]
        let c = params(2, 1, 1, 5);
        let (_, t) = triangularize(&c);
        let p5 = Prime::new(5).unwrap();
        assert_eq!(t, Matrix::from_rows(p5, &[&[3, 1], &[0, 1]]));
        assert!(!t.is_diagonal());

        for p in [2u64, 3, 5, 7] {
            for n in 2..=5 {
                for x in 0..p {
                    for y in 0..p {
                        let c = params(n, x, y, p);
                        let (_, t) = triangularize(&c);
                        assert!(t.is_upper_triangular());
                        let mut expect = vec![c.y(); n];
                        expect[0] = c.row_sum();
                        assert_eq!(t.diagonal_entries(), expect);
                        assert!((1..n).all(|j| t.get(0, j) == c.x()));
                    }
                }
            }
        }
    }
}
