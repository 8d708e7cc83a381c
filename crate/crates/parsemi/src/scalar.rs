//! Exact rational scalars.
//!
//! Every computation in this crate is over the rationals; there is no
//! floating point anywhere. Equality of scalars, vectors and matrices is
//! therefore exact and tolerance-free.

use num_bigint::BigInt;
use num_rational::BigRational;

/// The ground field: arbitrary-precision rationals.
pub type Rat = BigRational;

/// Integer as a scalar.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Fraction `p/q` as a scalar. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().ok()?;
            let q: BigInt = q.parse().ok()?;
            if q == BigInt::from(0) {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Serializes as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/3"] {
            let x = parse_rat(s).unwrap();
            assert_eq!(format_rat(&x), s);
        }
        assert_eq!(parse_rat("4/2").map(|x| format_rat(&x)).unwrap(), "2");
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("a").is_none());
        assert!(parse_rat("1.5").is_none());
    }
}
