use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Eigenvalue `±1` of a reflection operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_sign(sign: i64) -> Result<Self> {
        match sign {
            1 => Ok(Parity::Even),
            -1 => Ok(Parity::Odd),
            other => Err(Error::Input(format!("parity must be +1 or -1, got {other}"))),
        }
    }

    /// Parity of `(−1)^n`.
    pub fn of_power(n: i64) -> Self {
        if n.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn factor(self) -> f64 {
        self.sign() as f64
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl TryFrom<i8> for Parity {
    type Error = Error;
    fn try_from(v: i8) -> Result<Self> {
        Parity::from_sign(v as i64)
    }
}

impl From<Parity> for i8 {
    fn from(p: Parity) -> i8 {
        p.sign()
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sign())
    }
}
