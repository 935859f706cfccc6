//! Exact arithmetic over the rationals: polynomials, rational functions,
//! matrices, characteristic polynomials and determinants of polynomial matrices.

mod charpoly;
mod matrix;
mod poly;
mod polymatrix;
mod ratfun;

pub use charpoly::{charpoly, charpoly_berkowitz, charpoly_with_adjugate, CharpolyAdjugate};
pub use matrix::{bareiss_det, QMatrix};
pub use poly::Polynomial;
pub use polymatrix::{interpolate, interpolate_consecutive, polymatrix_det, PolyMatrix};
pub use ratfun::{RatFunMatrix, RationalFunction};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `p/q`, always with an explicit denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Short human form: `p` when integral, `p/q` otherwise.
pub fn display_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q` or a finite decimal such as `-0.25`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = match int.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            digits => digits.parse().ok()?,
        };
        let frac_part: BigInt = frac.parse().ok()?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let magnitude = Rational::new(int_part * &scale + frac_part, scale);
        return Some(if negative { -magnitude } else { magnitude });
    }
    s.parse::<BigInt>().ok().map(Rational::from_integer)
}

pub(crate) fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.lcm(b)
}
