//! Exact scalars over ℚ or a prime field 𝔽_p.
//!
//! A [`Field`] is a small copyable context value; every [`Scalar`] remembers
//! which field it lives in. Combining scalars from different fields is a
//! programming error and panics.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::FoundationError;

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// 𝔽_p; rejects non-primes and primes that do not fit comfortably in `u32`
    /// (products are formed in `u64`).
    pub fn prime(p: u64) -> Result<Field, FoundationError> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(FoundationError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod {
                residue: n.rem_euclid(p as i64) as u64,
                prime: p,
            },
        }
    }

    /// `num/den`; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar, FoundationError> {
        let d = self.from_i64(den);
        let inv = d.inv().ok_or(FoundationError::DivisionByZero)?;
        Ok(self.from_i64(num) * inv)
    }

    /// Parses the canonical text syntax: `p/q` or an integer for ℚ, a decimal
    /// residue (any integer is reduced) for 𝔽_p.
    pub fn parse(&self, text: &str) -> Result<Scalar, FoundationError> {
        let text = text.trim();
        let bad = || FoundationError::BadScalar(text.to_string());
        match *self {
            Field::Rational => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(FoundationError::DivisionByZero);
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            Field::Prime(p) => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                let reduce = |v: &BigInt| -> u64 {
                    let r = v.mod_floor(&BigInt::from(p));
                    u64::try_from(r).expect("residue fits in u64")
                };
                let n = Scalar::Mod {
                    residue: reduce(&num),
                    prime: p,
                };
                let d = Scalar::Mod {
                    residue: reduce(&den),
                    prime: p,
                };
                Ok(n * d.inv().ok_or(FoundationError::DivisionByZero)?)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of ℚ (canonical reduced fraction, positive denominator) or of 𝔽_p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { residue: u64, prime: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod { prime, .. } => Field::Prime(*prime),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { residue, .. } => *residue == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero. Uses Fermat's little theorem over 𝔽_p.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Mod { residue, prime } => Scalar::Mod {
                residue: pow_mod(*residue, prime - 2, *prime),
                prime: *prime,
            },
        })
    }

    /// Integer power; negative exponents go through the inverse.
    ///
    /// Panics on `0^k` with `k < 0`.
    pub fn pow(&self, exp: i64) -> Scalar {
        let base = if exp < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let e = exp.unsigned_abs();
        match base {
            Scalar::Rational(r) => {
                let e = u32::try_from(e).expect("exponent too large for rational power");
                Scalar::Rational(num_traits::pow::Pow::pow(r, e))
            }
            Scalar::Mod { residue, prime } => Scalar::Mod {
                residue: pow_mod(residue, e, prime),
                prime,
            },
        }
    }

    fn check_same(&self, other: &Scalar) {
        if let (Scalar::Mod { prime: p, .. }, Scalar::Mod { prime: q, .. }) = (self, other) {
            assert_eq!(p, q, "scalars from different prime fields");
            return;
        }
        assert_eq!(
            self.field(),
            other.field(),
            "scalars from different fields"
        );
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { residue, .. } => write!(f, "{residue}"),
        }
    }
}

impl Scalar {
    /// True when the canonical text form starts with a minus sign.
    pub fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { residue: a, prime }, Scalar::Mod { residue: b, .. }) => Scalar::Mod {
                residue: (a + b) % prime,
                prime: *prime,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Mod { residue: a, prime }, Scalar::Mod { residue: b, .. }) => Scalar::Mod {
                residue: (a + prime - b) % prime,
                prime: *prime,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { residue: a, prime }, Scalar::Mod { residue: b, .. }) => Scalar::Mod {
                residue: a * b % prime,
                prime: *prime,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { residue, prime } => Scalar::Mod {
                residue: (prime - residue) % prime,
                prime: *prime,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}
