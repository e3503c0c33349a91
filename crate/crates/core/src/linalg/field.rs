//! Prime-field scalars.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported characteristic. Products of two reduced values fit in `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// A prime characteristic `p`, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) {
            return Err(Error::PrimeOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub(crate) fn reduce(self, v: u64) -> u32 {
        (v % self.0 as u64) as u32
    }

    pub fn elt(self, v: u64) -> Felt {
        Felt {
            value: self.reduce(v),
            p: self,
        }
    }

    pub fn zero(self) -> Felt {
        self.elt(0)
    }

    pub fn one(self) -> Felt {
        self.elt(1)
    }

    /// All field elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = Felt> {
        (0..self.0 as u64).map(move |v| self.elt(v))
    }

    pub(crate) fn ensure_same(self, other: Prime) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.0,
                right: other.0,
            })
        }
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Trial division; `p` is at most 2^31 so this is at most ~46k steps.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes up to and including `limit`.
pub fn primes_up_to(limit: u64) -> Vec<Prime> {
    (2..=limit)
        .filter(|&v| is_prime(v))
        .map(|v| Prime(v as u32))
        .collect()
}

/// An element of GF(p), always fully reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Felt {
    value: u32,
    p: Prime,
}

impl Felt {
    pub fn new(value: u64, p: Prime) -> Self {
        p.elt(value)
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn prime(self) -> Prime {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn try_add(self, rhs: Felt) -> Result<Felt> {
        self.p.ensure_same(rhs.p)?;
        Ok(self.p.elt(self.value as u64 + rhs.value as u64))
    }

    pub fn try_sub(self, rhs: Felt) -> Result<Felt> {
        self.try_add(rhs.neg())
    }

    pub fn try_mul(self, rhs: Felt) -> Result<Felt> {
        self.p.ensure_same(rhs.p)?;
        Ok(self.p.elt(self.value as u64 * rhs.value as u64))
    }

    /// Multiplicative inverse via Fermat: `a^(p-2)`.
    pub fn inv(self) -> Result<Felt> {
        if self.value == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(self.p.get() as u64 - 2))
    }

    pub fn pow(self, mut exp: u64) -> Felt {
        let p = self.p.get() as u64;
        let mut base = self.value as u64;
        let mut acc = 1 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        self.p.elt(acc)
    }

    /// Multiplies by a non-negative integer, i.e. adds `self` to itself `k` times.
    pub fn times(self, k: u64) -> Felt {
        self.p.elt(self.value as u64 * self.p.reduce(k) as u64)
    }
}

impl fmt::Display for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

// Operator forms panic on mismatched fields; use the `try_*` methods where that can happen.

impl Add for Felt {
    type Output = Felt;
    fn add(self, rhs: Felt) -> Felt {
        self.try_add(rhs).expect("Felt + Felt across different fields")
    }
}

impl Sub for Felt {
    type Output = Felt;
    fn sub(self, rhs: Felt) -> Felt {
        self.try_sub(rhs).expect("Felt - Felt across different fields")
    }
}

impl Mul for Felt {
    type Output = Felt;
    fn mul(self, rhs: Felt) -> Felt {
        self.try_mul(rhs).expect("Felt * Felt across different fields")
    }
}

impl Neg for Felt {
    type Output = Felt;
    fn neg(self) -> Felt {
        let p = self.p.get();
        Felt {
            value: if self.value == 0 { 0 } else { p - self.value },
            p: self.p,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(MAX_PRIME).is_ok());
        assert_eq!(Prime::new(4), Err(Error::NotPrime(4)));
        assert_eq!(Prime::new(1), Err(Error::PrimeOutOfRange(1)));
        assert_eq!(Prime::new(0), Err(Error::PrimeOutOfRange(0)));
        assert_eq!(
            Prime::new(1 << 31),
            Err(Error::PrimeOutOfRange(1 << 31))
        );
        // 2^32 + 15 is prime but too large
        assert!(matches!(
            Prime::new(4_294_967_311),
            Err(Error::PrimeOutOfRange(_))
        ));
        // prime power: extension fields are not supported
        assert_eq!(Prime::new(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn small_examples() {
        let p3 = gf(3);
        assert_eq!((p3.elt(2) + p3.elt(2)).value(), 1);
        for v in 0..3 {
            assert!((p3.zero() * p3.elt(v)).is_zero());
        }
        let p2 = gf(2);
        assert_eq!((-p2.one()).value(), 1);
    }

    #[test]
    fn inverses() {
        let p5 = gf(5);
        assert_eq!(p5.elt(2).inv().unwrap().value(), 3);
        for p in [2, 3, 5, 7, 13] {
            assert_eq!(gf(p).one().inv().unwrap(), gf(p).one());
        }
        assert_eq!(p5.zero().inv(), Err(Error::ZeroInverse));
        let big = gf(MAX_PRIME);
        let a = big.elt(123_456_789);
        assert_eq!(a * a.inv().unwrap(), big.one());
    }

    #[test]
    fn mismatched_fields_rejected() {
        let a = gf(3).one();
        let b = gf(5).one();
        assert_eq!(
            a.try_add(b),
            Err(Error::FieldMismatch { left: 3, right: 5 })
        );
        assert!(a.try_mul(b).is_err());
    }

    fn field_and_triple() -> impl Strategy<Value = (Prime, Felt, Felt, Felt)> {
        prop::sample::select(vec![2u64, 3, 5, 7]).prop_flat_map(|p| {
            let p = Prime::new(p).unwrap();
            let e = 0..p.get() as u64;
            (Just(p), e.clone(), e.clone(), e)
                .prop_map(|(p, a, b, c)| (p, p.elt(a), p.elt(b), p.elt(c)))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms((p, a, b, c) in field_and_triple()) {
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a + p.zero(), a);
            prop_assert_eq!(a * p.one(), a);
            prop_assert!((a + (-a)).is_zero());
            if !a.is_zero() {
                prop_assert_eq!(a * a.inv().unwrap(), p.one());
            }
        }
    }
}
