//! Checked 64-bit integer helpers. Overflow is always an error.

use crate::error::{Error, Result};

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

pub(crate) fn factorial(n: u32) -> Result<i64> {
    let mut out: i64 = 1;
    for k in 2..=i64::from(n) {
        out = mul(out, k)?;
    }
    Ok(out)
}

pub(crate) fn pow(base: i64, exp: u32) -> Result<i64> {
    let mut out: i64 = 1;
    for _ in 0..exp {
        out = mul(out, base)?;
    }
    Ok(out)
}
