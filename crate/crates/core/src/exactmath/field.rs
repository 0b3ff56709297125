//! Ground fields and their elements.
//!
//! Two kinds of field are supported: the rationals, with arbitrary-precision
//! numerators and denominators, and prime fields `F_p` for odd primes `p`.
//! Characteristic 2 is rejected when the field is constructed, so every
//! other part of the crate may divide by 2 freely.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for a prime field. Residue products must fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Rational,
    Prime(u64),
}

/// Descriptor of a ground field: `Q` or `F_p` with `p` an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field(Kind);

impl Field {
    pub const fn rational() -> Self {
        Field(Kind::Rational)
    }

    /// The prime field `F_p`. Fails for `p = 2`, composite `p`, and `p >= 2^31`.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::Char2Field);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= MAX_MODULUS {
            return Err(Error::InvalidParams(format!(
                "modulus {p} exceeds the supported bound 2^31"
            )));
        }
        Ok(Field(Kind::Prime(p)))
    }

    /// `Some(p)` for `F_p`, `None` for the rationals.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Kind::Rational => None,
            Kind::Prime(p) => Some(p),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.0, Kind::Rational)
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, v: i64) -> Scalar {
        match self.0 {
            Kind::Rational => Scalar {
                field: *self,
                value: Value::Rational(BigRational::from_integer(BigInt::from(v))),
            },
            Kind::Prime(p) => Scalar {
                field: *self,
                value: Value::Residue(v.rem_euclid(p as i64) as u64),
            },
        }
    }

    /// `num / den` in this field.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        self.int(num).div(&self.int(den))
    }

    /// Embeds an exact rational. For `F_p` the denominator must be prime to `p`.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self.0 {
            Kind::Rational => Ok(Scalar {
                field: *self,
                value: Value::Rational(q.clone()),
            }),
            Kind::Prime(p) => {
                let reduce = |b: &BigInt| -> u64 {
                    b.mod_floor(&BigInt::from(p))
                        .to_u64()
                        .expect("residue fits in u64")
                };
                let num = Scalar {
                    field: *self,
                    value: Value::Residue(reduce(q.numer())),
                };
                let den = Scalar {
                    field: *self,
                    value: Value::Residue(reduce(q.denom())),
                };
                num.div(&den)
            }
        }
    }

    /// Residue `r mod p` as a scalar. Only meaningful for prime fields; for `Q`
    /// this is the integer `r`.
    pub fn residue(&self, r: u64) -> Scalar {
        match self.0 {
            Kind::Rational => Scalar {
                field: *self,
                value: Value::Rational(BigRational::from_integer(BigInt::from(r))),
            },
            Kind::Prime(p) => Scalar {
                field: *self,
                value: Value::Residue(r % p),
            },
        }
    }

    /// Parses `int` or `num/den`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let q = parse_rational(s.trim())?;
        self.from_rational(&q)
    }

    pub fn check(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.to_string(), other.to_string()))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rational => write!(f, "rational"),
            Kind::Prime(p) => write!(f, "gf {p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `rational` or `gf <p>`.
    fn from_str(s: &str) -> Result<Self> {
        let mut words = s.split_whitespace();
        match (words.next(), words.next(), words.next()) {
            (Some("rational"), None, None) => Ok(Field::rational()),
            (Some("gf"), Some(p), None) => {
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::InvalidParams(format!("bad modulus `{p}`")))?;
                Field::prime(p)
            }
            _ => Err(Error::InvalidParams(format!("unknown field `{s}`"))),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidParams(format!("bad scalar `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

pub(crate) fn is_prime(p: u64) -> bool {
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

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Rational(BigRational),
    Residue(u64),
}

/// An element of a [`Field`]. Rationals are kept in lowest terms with a
/// positive denominator, residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: Field,
    value: Value,
}

impl Scalar {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(q) => q.is_zero(),
            Value::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rational(q) => q.is_one(),
            Value::Residue(r) => *r == 1,
        }
    }

    /// The residue, for prime-field scalars.
    pub fn residue(&self) -> Option<u64> {
        match &self.value {
            Value::Residue(r) => Some(*r),
            Value::Rational(_) => None,
        }
    }

    /// The exact rational value, for scalars over `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rational(q) => Some(q),
            Value::Residue(_) => None,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let value = match &self.value {
            Value::Rational(q) => Value::Rational(q.recip()),
            Value::Residue(r) => {
                let p = self.field.characteristic();
                Value::Residue(pow_mod(*r, p - 2, p))
            }
        };
        Ok(Scalar {
            field: self.field,
            value,
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// An exact square root in the ground field, if one exists.
    ///
    /// Over `Q` the non-negative root is returned; over `F_p` the root with
    /// the smaller residue.
    pub fn sqrt(&self) -> Option<Scalar> {
        match &self.value {
            Value::Rational(q) => {
                if q.is_negative() {
                    return None;
                }
                let (n, d) = (q.numer(), q.denom());
                let (rn, rd) = (n.sqrt(), d.sqrt());
                if &(&rn * &rn) == n && &(&rd * &rd) == d {
                    Some(Scalar {
                        field: self.field,
                        value: Value::Rational(BigRational::new(rn, rd)),
                    })
                } else {
                    None
                }
            }
            Value::Residue(a) => {
                let p = self.field.characteristic();
                tonelli_shanks(*a, p).map(|r| self.field.residue(r.min(p - r)))
            }
        }
    }

    /// Legendre symbol test: `true` for zero and for quadratic residues.
    /// Over `Q` this falls back to an exact square-root test.
    pub fn is_square(&self) -> bool {
        match &self.value {
            Value::Residue(a) => {
                let p = self.field.characteristic();
                *a == 0 || pow_mod(*a, (p - 1) / 2, p) == 1
            }
            Value::Rational(_) => self.sqrt().is_some(),
        }
    }

    fn combine(&self, other: &Scalar, op: Op) -> Scalar {
        assert_eq!(
            self.field, other.field,
            "scalar arithmetic across different fields"
        );
        let value = match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(match op {
                Op::Add => a + b,
                Op::Sub => a - b,
                Op::Mul => a * b,
            }),
            (Value::Residue(a), Value::Residue(b)) => {
                let p = self.field.characteristic();
                Value::Residue(match op {
                    Op::Add => (a + b) % p,
                    Op::Sub => (a + p - b) % p,
                    Op::Mul => (a * b) % p,
                })
            }
            _ => unreachable!("field tags agree"),
        };
        Scalar {
            field: self.field,
            value,
        }
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn tonelli_shanks(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p)
        .find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)
        .expect("odd prime has a non-residue");
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = t2 * t2 % p;
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    Some(r)
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.combine(rhs, $op)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.combine(&rhs, $op)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.combine(rhs, $op)
            }
        }
    };
}

forward_binop!(Add, add, Op::Add);
forward_binop!(Sub, sub, Op::Sub);
forward_binop!(Mul, mul, Op::Mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.field.zero() - self
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Value::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Value::Residue(r) => write!(f, "{r}"),
        }
    }
}
