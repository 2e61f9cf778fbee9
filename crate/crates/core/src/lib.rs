//! Decide and construct generalized and fractional hypertree decompositions
//! of bounded width for hypergraph classes with structural restrictions
//! (bounded intersection, multi-intersection, degree, rank), approximate the
//! fractional hypertree width under multi-intersection bounds, and generate
//! hard instances with verifiable witness decompositions.
//!
//! All width decisions use exact rational arithmetic; nothing width-relevant
//! goes through floating point.

pub mod bags;
pub mod covers;
pub mod ctd;
pub mod decomp;
pub mod error;
pub mod format;
pub mod gen;
pub mod hardness;
pub mod hypergraph;
pub mod lp;
pub mod metrics;
pub mod set;
pub mod solve;

/// Exact scalar used throughout for weights, widths and thresholds.
pub type Rat = num_rational::BigRational;

pub use error::{Error, Result};
pub use hypergraph::{Component, Hypergraph, ReducedHypergraph};
pub use set::{EdgeSet, VertexSet};

use num_bigint::BigInt;

/// `p/q` as an exact rational.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as an exact rational.
pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Parses "p/q" or a plain integer into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::BadRational(s.to_string()))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q == BigInt::from(0) {
                return Err(Error::BadRational(s.to_string()));
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Formats a rational as "p/q", keeping an explicit denominator ("3" -> "3/1").
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        assert_eq!(parse_rat("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rat("2").unwrap(), rat_int(2));
        assert_eq!(parse_rat(" 7/4 ").unwrap(), rat(7, 4));
        assert_eq!(format_rat(&rat(1, 1)), "1/1");
        assert_eq!(format_rat(&rat(6, 4)), "3/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
