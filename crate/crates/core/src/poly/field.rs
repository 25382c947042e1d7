use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient storage type. Always a reduced representative in `[0, p)`.
pub type Coeff = u32;

pub const DEFAULT_CHARACTERISTIC: u32 = 32003;

/// The prime field `F_p`, used as an arithmetic context for raw coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
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

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn from_i64(&self, v: i64) -> Coeff {
        v.rem_euclid(self.p as i64) as Coeff
    }

    #[inline]
    pub fn add(&self, a: Coeff, b: Coeff) -> Coeff {
        let s = a as u64 + b as u64;
        (if s >= self.p as u64 { s - self.p as u64 } else { s }) as Coeff
    }

    #[inline]
    pub fn sub(&self, a: Coeff, b: Coeff) -> Coeff {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: Coeff) -> Coeff {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Coeff, b: Coeff) -> Coeff {
        ((a as u64 * b as u64) % self.p as u64) as Coeff
    }

    pub fn pow(&self, mut a: Coeff, mut e: u64) -> Coeff {
        let mut r: Coeff = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: Coeff) -> Coeff {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    #[inline]
    pub fn div(&self, a: Coeff, b: Coeff) -> Coeff {
        self.mul(a, self.inv(b))
    }

    /// Symmetric representative in `(-p/2, p/2]`, for display.
    pub fn to_signed(&self, a: Coeff) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn element(&self, v: i64) -> Fp {
        Fp {
            value: self.from_i64(v),
            field: *self,
        }
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField {
            p: DEFAULT_CHARACTERISTIC,
        }
    }
}

/// A standalone field element that carries its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: Coeff,
    field: PrimeField,
}

impl Fp {
    pub fn value(&self) -> Coeff {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.field.p
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inv(&self) -> Option<Fp> {
        (self.value != 0).then(|| Fp {
            value: self.field.inv(self.value),
            field: self.field,
        })
    }

    fn same_field(&self, other: &Fp) {
        assert_eq!(self.field, other.field, "elements of different prime fields");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.same_field(&rhs);
        Fp {
            value: self.field.add(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.same_field(&rhs);
        Fp {
            value: self.field.sub(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.same_field(&rhs);
        Fp {
            value: self.field.mul(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        self.same_field(&rhs);
        Fp {
            value: self.field.div(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}
