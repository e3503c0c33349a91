//! Linear codes given by an RREF generator matrix.
//!
//! Capacities follow the usual rules for minimum distance `d`: any pattern
//! of at most `d − 1` symbol errors is detected and any pattern of at most
//! `⌊(d − 1)/2⌋` is corrected by nearest-codeword decoding. (Some write-ups
//! of the `[n², 1, n²]` centralizer codes quote `⌊(n² − 1)/2⌋` for detection
//! as well; `d − 1 = n² − 1` is the correct figure.)

use std::fmt;

use crate::centralizer::{canonical_rows, in_rref_span, CentralizerBasis};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Prime, Vector};

/// Largest message space `p^k` that enumeration-based routines will walk.
pub const ENUMERATION_LIMIT: u128 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    p: Prime,
    length: usize,
    /// Nonzero rows of an RREF matrix; empty for the zero code.
    rows: Vec<Vector>,
    generator: Option<Matrix>,
}

impl LinearCode {
    /// Builds the code spanned by `rows`, normalizing to RREF and dropping dependent rows.
    pub fn from_rows(p: Prime, length: usize, rows: &[Vector]) -> Result<Self> {
        for r in rows {
            p.ensure_same(r.prime())?;
            if r.len() != length {
                return Err(Error::LengthMismatch {
                    expected: length,
                    actual: r.len(),
                });
            }
        }
        let rows = canonical_rows(rows)?;
        let generator = Matrix::from_row_vectors(&rows)?;
        Ok(LinearCode {
            p,
            length,
            rows,
            generator,
        })
    }

    pub fn from_generator(g: &Matrix) -> Result<Self> {
        Self::from_rows(g.prime(), g.cols(), &g.row_vectors())
    }

    /// Codewords are the column-stacked basis matrices, so `N = n²`.
    pub fn from_basis(basis: &CentralizerBasis) -> Result<Self> {
        let n = basis.spec().order();
        Self::from_rows(basis.spec().matrix().prime(), n * n, &basis.generator_rows())
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn generator_rows(&self) -> &[Vector] {
        &self.rows
    }

    /// `None` for the zero code.
    pub fn generator(&self) -> Option<&Matrix> {
        self.generator.as_ref()
    }

    /// Number of codewords, `p^k`, or `None` if it overflows `u128`.
    pub fn size(&self) -> Option<u128> {
        (self.p.get() as u128).checked_pow(self.dimension() as u32)
    }

    fn enumeration_guard(&self, what: &'static str) -> Result<u64> {
        match self.size() {
            Some(s) if s <= ENUMERATION_LIMIT => Ok(s as u64),
            other => Err(Error::GuardExceeded {
                what,
                work: other.unwrap_or(u128::MAX),
                limit: ENUMERATION_LIMIT,
            }),
        }
    }

    pub fn encode(&self, msg: &Vector) -> Result<Vector> {
        self.p.ensure_same(msg.prime())?;
        if msg.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                actual: msg.len(),
            });
        }
        match self.generator() {
            Some(g) => g.left_mul_vec(msg),
            None => Ok(Vector::zeros(self.p, self.length)),
        }
    }

    pub fn contains(&self, word: &Vector) -> Result<bool> {
        self.p.ensure_same(word.prime())?;
        if word.len() != self.length {
            return Err(Error::LengthMismatch {
                expected: self.length,
                actual: word.len(),
            });
        }
        in_rref_span(&self.rows, word)
    }

    /// The message with index `idx` in base-p, last coordinate least significant.
    pub fn message(&self, mut idx: u64) -> Vector {
        let q = self.p.get() as u64;
        let mut digits = vec![0u64; self.dimension()];
        for d in digits.iter_mut().rev() {
            *d = idx % q;
            idx /= q;
        }
        Vector::from_values(self.p, &digits)
    }

    /// All `(message, codeword)` pairs, guarded by [`ENUMERATION_LIMIT`].
    pub fn codewords(&self) -> Result<Vec<(Vector, Vector)>> {
        let total = self.enumeration_guard("codeword enumeration p^k")?;
        (0..total)
            .map(|i| {
                let m = self.message(i);
                let c = self.encode(&m)?;
                Ok((m, c))
            })
            .collect()
    }

    pub fn min_distance(&self) -> Result<usize> {
        if self.dimension() == 0 {
            return Err(Error::ZeroCode);
        }
        let total = self.enumeration_guard("minimum distance p^k")?;
        let mut best = usize::MAX;
        for i in 1..total {
            let w = self.encode(&self.message(i))?.weight();
            best = best.min(w);
        }
        Ok(best)
    }

    pub fn analyze(&self) -> Result<CodeReport> {
        let d = self.min_distance()?;
        let report = CodeReport::new(self.length, self.dimension(), d);
        debug_assert!(d <= self.length - self.dimension() + 1, "Singleton bound violated");
        Ok(report)
    }

    /// Nearest-codeword decoding by exhaustive search. Ties are reported, not broken.
    pub fn decode_nearest(&self, word: &Vector) -> Result<DecodeResult> {
        self.p.ensure_same(word.prime())?;
        if word.len() != self.length {
            return Err(Error::LengthMismatch {
                expected: self.length,
                actual: word.len(),
            });
        }
        let total = self.enumeration_guard("nearest-codeword decoding p^k")?;
        let mut best: Option<(usize, u64, Vector)> = None;
        let mut ties = 0usize;
        for i in 0..total {
            let c = self.encode(&self.message(i))?;
            let dist = c.distance(word)?;
            match &best {
                Some((b, _, _)) if dist > *b => {}
                Some((b, _, _)) if dist == *b => ties += 1,
                _ => {
                    best = Some((dist, i, c));
                    ties = 0;
                }
            }
        }
        let (distance, idx, codeword) = best.expect("at least the zero codeword");
        Ok(DecodeResult {
            status: if ties == 0 {
                DecodeStatus::Unique
            } else {
                DecodeStatus::Ambiguous
            },
            codeword,
            message: self.message(idx),
            distance,
        })
    }
}

/// Information rate `k/N`, kept as an exact unreduced pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rate {
    pub k: usize,
    pub n: usize,
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.k, self.n)
    }
}

impl Rate {
    /// Cross-multiplied comparison against `num/den`.
    pub fn equals(&self, num: usize, den: usize) -> bool {
        self.k * den == num * self.n
    }
}

/// `[N, k, d]` and the figures derived from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeReport {
    pub length: usize,
    pub dimension: usize,
    pub min_distance: usize,
    pub mds: bool,
    pub detect: usize,
    pub correct: usize,
    pub rate: Rate,
}

impl CodeReport {
    pub fn new(length: usize, dimension: usize, min_distance: usize) -> Self {
        CodeReport {
            length,
            dimension,
            min_distance,
            mds: min_distance + dimension == length + 1,
            detect: min_distance.saturating_sub(1),
            correct: min_distance.saturating_sub(1) / 2,
            rate: Rate {
                k: dimension,
                n: length,
            },
        }
    }
}

impl fmt::Display for CodeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.length, self.dimension, self.min_distance)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecodeStatus {
    Unique,
    Ambiguous,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub status: DecodeStatus,
    /// A nearest codeword (the first found when ambiguous).
    pub codeword: Vector,
    pub message: Vector,
    pub distance: usize,
}
