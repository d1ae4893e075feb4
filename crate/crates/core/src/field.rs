use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is neither 0 nor a prime")]
    NotPrime(u64),
    #[error("cannot parse characteristic `{0}`")]
    Parse(String),
}

/// Coefficient field, identified by its characteristic (0 means ℚ, a prime
/// `p` means GF(p)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn new(characteristic: u64) -> Result<Self, FieldError> {
        if characteristic == 0 {
            return Ok(Self::RATIONALS);
        }
        if characteristic > u32::MAX as u64 || !is_prime(characteristic) {
            return Err(FieldError::NotPrime(characteristic));
        }
        Ok(Self { characteristic: characteristic as u32 })
    }

    /// GF(p). Panics if `p` is not prime.
    pub fn prime(p: u32) -> Self {
        Self::new(p as u64).expect("prime characteristic")
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self::RATIONALS
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = FieldError;

    fn try_from(value: u64) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

impl From<FieldSpec> for u64 {
    fn from(f: FieldSpec) -> u64 {
        f.characteristic as u64
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let c: u64 = s.trim().parse().map_err(|_| FieldError::Parse(s.to_string()))?;
        Self::new(c)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "QQ"),
            p => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
