//! Exact coefficient fields: the rationals and small prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest prime modulus accepted for `GF(q)`.
pub const MAX_PRIME: u32 = 97;

/// Descriptor of the ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// Validated prime field `GF(q)`.
    pub fn prime(q: u32) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&q)
            || !(2..q)
                .take_while(|d| d * d <= q)
                .all(|d| !q.is_multiple_of(d))
        {
            return Err(Error::InvalidField(format!(
                "GF({q}): modulus must be a prime at most {MAX_PRIME}"
            )));
        }
        Ok(Field::Prime(q))
    }

    pub fn zero(self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(q) => FieldElement::Prime {
                value: n.rem_euclid(q as i64) as u32,
                modulus: q,
            },
        }
    }

    /// `num / den` as a field element.
    pub fn fraction(self, num: i64, den: i64) -> Result<FieldElement> {
        self.from_i64(num).try_div(&self.from_i64(den))
    }

    /// Parses `a`, `-a` or `a/b` with decimal integers.
    pub fn parse_element(self, text: &str) -> Result<FieldElement> {
        let text = text.trim();
        let bad = || Error::Parse {
            line: 1,
            column: 1,
            message: format!("invalid field element `{text}`"),
        };
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.ratio_of(&num, &den)
    }

    pub(crate) fn ratio_of(self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        match self {
            Field::Rational => Ok(FieldElement::Rational(BigRational::new(
                num.clone(),
                den.clone(),
            ))),
            Field::Prime(q) => {
                let reduce = |b: &BigInt| -> i64 {
                    let m = BigInt::from(q);
                    let r = ((b % &m) + &m) % &m;
                    i64::try_from(r).expect("residue fits")
                };
                self.fraction(reduce(num), reduce(den))
            }
        }
    }

    /// All elements of a prime field, in residue order. `None` for the rationals.
    pub fn elements(self) -> Option<Vec<FieldElement>> {
        match self {
            Field::Rational => None,
            Field::Prime(q) => Some((0..q as i64).map(|v| self.from_i64(v)).collect()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(q) => write!(f, "GF({q})"),
        }
    }
}

/// An element of [`Field`], always stored in canonical form.
///
/// Mixing elements of different fields in one operation is a programming error
/// and panics; every value in a computation originates from one presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Prime { value: u32, modulus: u32 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Prime { value, .. } => *value == 1,
        }
    }

    /// True for a negative rational; prime-field elements are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, FieldElement::Rational(r) if r.is_negative())
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(r) => FieldElement::Rational(r.recip()),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, mut exp: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

fn pow_mod(base: u32, mut exp: u32, modulus: u32) -> u32 {
    let m = modulus as u64;
    let mut b = base as u64 % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u32
}

fn mixed(a: &FieldElement, b: &FieldElement) -> ! {
    panic!("arithmetic between {} and {}", a.field(), b.field())
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (
                FieldElement::Prime {
                    value: a,
                    modulus: p,
                },
                FieldElement::Prime {
                    value: b,
                    modulus: q,
                },
            ) if p == q => FieldElement::Prime {
                value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            _ => mixed(self, rhs),
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (
                FieldElement::Prime {
                    value: a,
                    modulus: p,
                },
                FieldElement::Prime {
                    value: b,
                    modulus: q,
                },
            ) if p == q => FieldElement::Prime {
                value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            _ => mixed(self, rhs),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Parses a comma-separated point, e.g. `1,2,-1/3`. The empty string is the
/// point of `A^0`.
pub fn parse_point(field: Field, text: &str) -> Result<Vec<FieldElement>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|s| field.parse_element(s)).collect()
}

pub fn format_point(point: &[FieldElement]) -> String {
    point
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
