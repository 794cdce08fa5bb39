//! Exact-rational parsing and canonical formatting.
//!
//! Accepted forms: `"p/q"` (q > 0 after reduction), plain integers `"p"`,
//! and finite decimal literals such as `"0.29"`, which convert exactly
//! (`29/100`). Output is always lowest terms with positive denominator,
//! printed as `"p"` when the denominator is 1 and `"p/q"` otherwise.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn parse_bigint(s: &str) -> Result<BigInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("invalid integer {s:?}: {e}")))
}

/// Parse `"p/q"`, `"p"`, or a finite decimal literal into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    if let Some((num, den)) = t.split_once('/') {
        let n = parse_bigint(num)?;
        let d = parse_bigint(den)?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {t:?}")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("invalid decimal literal {t:?}")));
        }
        let negative = int_part.starts_with('-');
        let int = if int_part == "-" {
            BigInt::zero()
        } else {
            parse_bigint(int_part)?
        };
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac = parse_bigint(frac_part)?;
        let numer = int * &scale + if negative { -frac } else { frac };
        return Ok(BigRational::new(numer, scale));
    }
    Ok(BigRational::from_integer(parse_bigint(t)?))
}

pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
