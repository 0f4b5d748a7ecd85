//! Exact angles on the Coxeter sphere.
//!
//! An angle is either `arccos(c)` for a rational `c`, or `pπ/q`. Two
//! `pπ/q` values compare by their fractions, two cosines by the cosines. A
//! mixed comparison is exact when `pπ/q` has a rational cosine (`p/q` one of
//! 1/3, 1/2, 2/3, 1). Otherwise `cos(pπ/q)` is irrational, so it differs
//! from every rational, and a rigorous enclosure refined until it excludes
//! the rational settles the order.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Q;

#[derive(Clone, Debug)]
pub enum Angle {
    /// `arccos(c)` with `-1 <= c <= 1`.
    ExactCos(Q),
    /// `pπ/q` in lowest terms with `0 < p/q <= 1`.
    RationalPi { p: u32, q: u32 },
}

/// Position of an angle relative to π/3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    GreaterThanPiOver3,
    EqualPiOver3,
    LessThanPiOver3,
}

impl Verdict {
    pub fn code(&self) -> &'static str {
        match self {
            Verdict::GreaterThanPiOver3 => "GT_PI_3",
            Verdict::EqualPiOver3 => "EQ_PI_3",
            Verdict::LessThanPiOver3 => "LT_PI_3",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

impl Angle {
    pub fn from_cos(c: Q) -> Result<Self> {
        if c > Q::one() || c < -Q::one() {
            return Err(Error::InvalidAngle(format!("cosine {c} outside [-1, 1]")));
        }
        Ok(Angle::ExactCos(c))
    }

    pub fn pi_fraction(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 || p > q {
            return Err(Error::InvalidAngle(format!("{p}π/{q} outside (0, π]")));
        }
        let g = p.gcd(&q);
        Ok(Angle::RationalPi { p: p / g, q: q / g })
    }

    pub fn pi() -> Self {
        Angle::RationalPi { p: 1, q: 1 }
    }

    pub fn pi_over(q: u32) -> Self {
        Angle::pi_fraction(1, q).expect("q >= 1")
    }

    /// Exact cosine when it is rational.
    pub fn rational_cos(&self) -> Option<Q> {
        match self {
            Angle::ExactCos(c) => Some(c.clone()),
            Angle::RationalPi { p, q: d } => match (p, d) {
                (1, 3) => Some(q(1, 2)),
                (1, 2) => Some(Q::zero()),
                (2, 3) => Some(q(-1, 2)),
                (1, 1) => Some(-Q::one()),
                _ => None,
            },
        }
    }

    /// Exact comparison against π/3; never consults floating point.
    pub fn verdict(&self) -> Verdict {
        match self.cmp(&Angle::pi_over(3)) {
            Ordering::Greater => Verdict::GreaterThanPiOver3,
            Ordering::Equal => Verdict::EqualPiOver3,
            Ordering::Less => Verdict::LessThanPiOver3,
        }
    }

    /// Display-only approximation in radians.
    pub fn radians_approx(&self) -> f64 {
        match self {
            Angle::ExactCos(c) => c.to_f64().unwrap_or(f64::NAN).clamp(-1.0, 1.0).acos(),
            Angle::RationalPi { p, q } => *p as f64 * std::f64::consts::PI / *q as f64,
        }
    }
}

impl PartialEq for Angle {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Angle {}

impl PartialOrd for Angle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Angle {
    /// Orders by angle size.
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Angle::RationalPi { p: a, q: b }, Angle::RationalPi { p: c, q: d }) = (self, other)
        {
            return (*a as u64 * *d as u64).cmp(&(*c as u64 * *b as u64));
        }
        match (self.rational_cos(), other.rational_cos()) {
            // larger cosine, smaller angle
            (Some(x), Some(y)) => y.cmp(&x),
            (Some(x), None) => {
                let Angle::RationalPi { p, q } = other else {
                    unreachable!("irrational cosines only come from pπ/q")
                };
                cmp_cos_pi_fraction(*p, *q, &x)
            }
            (None, Some(_)) => other.cmp(self).reverse(),
            (None, None) => unreachable!("handled by the fraction comparison"),
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pi_form = |f: &mut fmt::Formatter<'_>, p: u32, q: u32| match (p, q) {
            (1, 1) => write!(f, "π"),
            (1, q) => write!(f, "π/{q}"),
            (p, 1) => write!(f, "{p}π"),
            (p, q) => write!(f, "{p}π/{q}"),
        };
        match self {
            Angle::RationalPi { p, q } => pi_form(f, *p, *q),
            Angle::ExactCos(c) => {
                if *c == Q::one() {
                    write!(f, "0")
                } else if *c == q(1, 2) {
                    pi_form(f, 1, 3)
                } else if c.is_zero() {
                    pi_form(f, 1, 2)
                } else if *c == q(-1, 2) {
                    pi_form(f, 2, 3)
                } else if *c == -Q::one() {
                    pi_form(f, 1, 1)
                } else {
                    write!(f, "arccos({c})")
                }
            }
        }
    }
}

/// Angle order between `arccos(c)` and `pπ/q`, where `cos(pπ/q)` is
/// irrational.
fn cmp_cos_pi_fraction(p: u32, q_: u32, c: &Q) -> Ordering {
    let ratio = q(p as i64, q_ as i64);
    let mut terms = 8usize;
    loop {
        let (pi_lo, pi_hi) = pi_bounds(terms);
        let x_lo = &pi_lo * &ratio;
        let x_hi = &pi_hi * &ratio;
        // cos is decreasing on [0, π]
        if x_hi < pi_lo {
            let cos_lo = cos_bounds(&x_hi, terms).0;
            let cos_hi = cos_bounds(&x_lo, terms).1;
            if &cos_hi < c {
                // arccos(c) < pπ/q
                return Ordering::Less;
            }
            if &cos_lo > c {
                return Ordering::Greater;
            }
        }
        terms *= 2;
    }
}

/// Rigorous enclosure of π from Machin's formula.
fn pi_bounds(terms: usize) -> (Q, Q) {
    let (lo5, hi5) = atan_inv_bounds(5, terms);
    let (lo239, hi239) = atan_inv_bounds(239, terms);
    let lo = q(16, 1) * lo5 - q(4, 1) * hi239;
    let hi = q(16, 1) * hi5 - q(4, 1) * lo239;
    (round_down(&lo, terms), round_up(&hi, terms))
}

/// Enclosure of `atan(1/n)` by consecutive partial sums of its alternating
/// series.
fn atan_inv_bounds(n: i64, terms: usize) -> (Q, Q) {
    let x = q(1, n);
    let x2 = &x * &x;
    let mut power = x.clone();
    let mut sum = Q::zero();
    let mut prev = Q::zero();
    for k in 0..=terms {
        prev = sum.clone();
        let term = &power / Q::from_integer(BigInt::from(2 * k + 1));
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &x2;
    }
    if prev < sum {
        (prev, sum)
    } else {
        (sum, prev)
    }
}

/// Enclosure of `cos(x)` for `0 <= x < 3.4` by consecutive Taylor partial
/// sums; past the first term the series alternates with decreasing terms.
fn cos_bounds(x: &Q, terms: usize) -> (Q, Q) {
    debug_assert!(!x.is_negative() && *x < q(34, 10));
    let x2 = x * x;
    let mut term = Q::one();
    let mut sum = Q::one();
    let mut prev = Q::zero();
    for k in 1..=terms.max(2) {
        prev = sum.clone();
        term = -term * &x2 / Q::from_integer(BigInt::from((2 * k - 1) * (2 * k)));
        sum += &term;
    }
    if prev < sum {
        (prev, sum)
    } else {
        (sum, prev)
    }
}

fn dyadic_scale(terms: usize) -> BigInt {
    BigInt::one() << (4 * terms + 16)
}

fn round_down(x: &Q, terms: usize) -> Q {
    let s = dyadic_scale(terms);
    Q::new((x * Q::from_integer(s.clone())).floor().to_integer(), s)
}

fn round_up(x: &Q, terms: usize) -> Q {
    let s = dyadic_scale(terms);
    Q::new((x * Q::from_integer(s.clone())).ceil().to_integer(), s)
}
