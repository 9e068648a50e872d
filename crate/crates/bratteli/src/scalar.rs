//! Exact rational scalars.
//!
//! Every structural computation in the crate is carried out over the
//! rationals; floating point appears only in [`operator
//! norm`](crate::algebra::AlgebraElement::operator_norm) evaluation. All
//! the embeddings studied here send matrix units to sums of matrix units,
//! so rational entries are closed under every construction (twist
//! unitaries are permutations, hence also rational).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::ToPrimitive;

pub type Scalar = BigRational;

/// `p/q` as an exact scalar. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn integer(n: i64) -> Scalar {
    BigRational::from(BigInt::from(n))
}

pub fn one() -> Scalar {
    integer(1)
}

pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Renders a scalar as `p` or `p/q`, the form used in all file formats.
pub fn format(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse(s: &str) -> Option<Scalar> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(BigRational::from),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().ok()?;
            let q = q.trim().parse::<BigInt>().ok()?;
            if q == BigInt::from(0) {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_parse_round_trip() {
        for (p, q) in [(1, 1), (-3, 2), (0, 5), (7, 3)] {
            let x = ratio(p, q);
            assert_eq!(parse(&format(&x)), Some(x));
        }
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert_eq!(parse("1/0"), None);
    }
}
