//! Exact rationals backed by `num::BigRational`.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Canonical text: `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p`, `p/q` with optional sign. Rejects zero denominators.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    if den.starts_with('-') || den.starts_with('+') {
        return None;
    }
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Nearest rational with denominator at most `max_den`; returns it with the
/// absolute distance to `v`. Ties prefer the smaller denominator.
pub fn nearest_small_rational(v: f64, max_den: i64) -> (Rational, f64) {
    let mut best = (int(v.round() as i64), (v - v.round()).abs());
    for q in 2..=max_den {
        let p = (v * q as f64).round();
        let err = (v - p / q as f64).abs();
        if err + 1e-15 < best.1 {
            best = (rat(p as i64, q), err);
        }
    }
    best
}

/// Exact conversion of a finite double that happens to be a small rational
/// (denominator ≤ 1000), used when law parameters are given as floats.
pub fn from_f64_exact_small(v: f64) -> Option<Rational> {
    let (r, err) = nearest_small_rational(v, 1000);
    (err < 1e-12).then_some(r)
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
