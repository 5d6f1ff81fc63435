use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{bareiss, elim, gf2, Matrix};
use crate::error::{Error, Result};

/// Exact field arithmetic. Implementors are cheap handles; elements carry
/// no reference to their field.
pub trait Field: Clone + Send + Sync + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn spec(&self) -> FieldSpec;

    fn lift(&self, m: &Matrix<i64>) -> Matrix<Self::Elem> {
        Matrix::from_fn(m.rows(), m.cols(), |i, j| self.from_i64(*m.get(i, j)))
    }

    /// Rank of an integer matrix read in this field.
    fn rank_int(&self, m: &Matrix<i64>) -> usize {
        elim::rank(self, &self.lift(m))
    }
}

/// `GF(p)` for a prime `p < 2³¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) && p < (1 << 31) {
            Ok(PrimeField { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        self.pow(*a, self.p - 2)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    fn rank_int(&self, m: &Matrix<i64>) -> usize {
        if self.p == 2 {
            gf2::rank(m)
        } else {
            elim::rank(self, &self.lift(m))
        }
    }
}

/// The rationals with arbitrary-precision entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero in Q");
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn rank_int(&self, m: &Matrix<i64>) -> usize {
        bareiss::rank(m)
    }
}

/// Which field to compute over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "FieldRepr", into = "FieldRepr")]
pub enum FieldSpec {
    Prime(u64),
    Rational,
}

// Internally tagged enums cannot hold a bare integer, so the wire shape
// `{"type":"gfp","p":2}` goes through this mirror.
#[derive(Serialize, Deserialize)]
#[serde(tag = "type")]
enum FieldRepr {
    #[serde(rename = "gfp")]
    Prime { p: u64 },
    #[serde(rename = "q")]
    Rational,
}

impl From<FieldRepr> for FieldSpec {
    fn from(r: FieldRepr) -> Self {
        match r {
            FieldRepr::Prime { p } => FieldSpec::Prime(p),
            FieldRepr::Rational => FieldSpec::Rational,
        }
    }
}

impl From<FieldSpec> for FieldRepr {
    fn from(s: FieldSpec) -> Self {
        match s {
            FieldSpec::Prime(p) => FieldRepr::Prime { p },
            FieldSpec::Rational => FieldRepr::Rational,
        }
    }
}

impl FieldSpec {
    pub fn gf(p: u64) -> Result<Self> {
        PrimeField::new(p).map(|_| FieldSpec::Prime(p))
    }

    pub fn gf2() -> Self {
        FieldSpec::Prime(2)
    }

    /// Re-checks primality, e.g. after deserialization.
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Prime(p) => PrimeField::new(*p).map(|_| ()),
            FieldSpec::Rational => Ok(()),
        }
    }

    /// Parses `q`, `gf2`, `gf3`, ... or a bare prime.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "q" || s == "rational" || s == "rationals" {
            return Ok(FieldSpec::Rational);
        }
        let digits = s.strip_prefix("gf").unwrap_or(&s);
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("unknown field '{s}' (use q or gf<p>)")))?;
        FieldSpec::gf(p)
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::gf2()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rational => write!(f, "Q"),
        }
    }
}

/// Runs `$body` with `$f` bound to a `&impl Field` matching the spec.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {{
        match $spec {
            $crate::linalg::FieldSpec::Prime(p) => {
                let field = $crate::linalg::PrimeField::new(p).expect("field spec holds a prime");
                let $f = &field;
                $body
            }
            $crate::linalg::FieldSpec::Rational => {
                let $f = &$crate::linalg::Rationals;
                $body
            }
        }
    }};
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
