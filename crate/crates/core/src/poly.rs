//! Univariate polynomials: integer polynomials with exact discriminants,
//! root-finding mod p, and a small rational-irreducibility test; plus
//! polynomials and rational functions over the exact rationals, used to check
//! algebraic identities symbolically in one variable.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{mod_mul, Field, Rational, Tol};
use crate::{Error, Result};

macro_rules! fmt_poly_body {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.is_zero() {
                return write!(f, "0");
            }
            let mut first = true;
            for (i, c) in self.coeffs.iter().enumerate().rev() {
                if num_traits::Zero::is_zero(c) {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                match i {
                    0 => write!(f, "{c}")?,
                    1 => write!(f, "({c})*t")?,
                    _ => write!(f, "({c})*t^{i}")?,
                }
            }
            Ok(())
        }
    };
}

/// A polynomial with arbitrary-precision integer coefficients, ascending
/// degree. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficients reduced into `[0, p)`.
    pub fn coeffs_mod(&self, p: u64) -> Vec<u64> {
        let bp = BigInt::from(p);
        self.coeffs
            .iter()
            .map(|c| u64::try_from(c.mod_floor(&bp)).expect("residue fits"))
            .collect()
    }

    /// Evaluate at `x` over `F_p`.
    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        horner_mod(&self.coeffs_mod(p), x, p)
    }

    /// All roots in `F_p` by exhaustive evaluation.
    pub fn roots_mod_p(&self, p: u64) -> Vec<u64> {
        let c = self.coeffs_mod(p);
        (0..p).filter(|&x| horner_mod(&c, x, p) == 0).collect()
    }

    pub fn has_root_mod_p(&self, p: u64) -> bool {
        let c = self.coeffs_mod(p);
        (0..p).any(|x| horner_mod(&c, x, p) == 0)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Discriminant by the closed formulas for degrees 2, 3, 4.
    pub fn discriminant(&self) -> Result<BigInt> {
        let d = self.degree();
        let c = |i: usize| self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
        match d {
            2 => {
                let (a, b, cc) = (c(2), c(1), c(0));
                Ok(&b * &b - BigInt::from(4) * a * cc)
            }
            3 => {
                let (a, b, cc, dd) = (c(3), c(2), c(1), c(0));
                Ok(
                    BigInt::from(18) * &a * &b * &cc * &dd - BigInt::from(4) * b.pow(3) * &dd
                        + b.pow(2) * cc.pow(2)
                        - BigInt::from(4) * &a * cc.pow(3)
                        - BigInt::from(27) * a.pow(2) * dd.pow(2),
                )
            }
            4 => {
                let (a, b, cc, dd, e) = (c(4), c(3), c(2), c(1), c(0));
                let i = BigInt::from;
                Ok(i(256) * a.pow(3) * e.pow(3)
                    - i(192) * a.pow(2) * &b * &dd * e.pow(2)
                    - i(128) * a.pow(2) * cc.pow(2) * e.pow(2)
                    + i(144) * a.pow(2) * &cc * dd.pow(2) * &e
                    - i(27) * a.pow(2) * dd.pow(4)
                    + i(144) * &a * b.pow(2) * &cc * e.pow(2)
                    - i(6) * &a * b.pow(2) * dd.pow(2) * &e
                    - i(80) * &a * &b * cc.pow(2) * &dd * &e
                    + i(18) * &a * &b * &cc * dd.pow(3)
                    + i(16) * &a * cc.pow(4) * &e
                    - i(4) * &a * cc.pow(3) * dd.pow(2)
                    - i(27) * b.pow(4) * e.pow(2)
                    + i(18) * b.pow(3) * &cc * &dd * &e
                    - i(4) * b.pow(3) * dd.pow(3)
                    - i(4) * b.pow(2) * cc.pow(3) * &e
                    + b.pow(2) * cc.pow(2) * dd.pow(2))
            }
            other => Err(Error::UnsupportedDegree(other)),
        }
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.coeffs.last().expect("nonzero").is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Irreducibility over the rationals for degree at most 4.
    ///
    /// Degrees 2 and 3 reduce to the rational-root theorem; degree 4
    /// additionally searches for a split into two integer quadratics over
    /// divisor pairs of the outer coefficients. Degree 0 counts as reducible,
    /// degree 1 as irreducible.
    pub fn is_irreducible_over_q(&self) -> Result<bool> {
        let f = self.primitive();
        match f.degree() {
            0 => Ok(false),
            1 => Ok(true),
            2 | 3 => Ok(!f.has_rational_root()),
            4 => Ok(!f.has_rational_root() && !f.has_quadratic_split()),
            d => Err(Error::UnsupportedDegree(d)),
        }
    }

    fn has_rational_root(&self) -> bool {
        if self.is_zero() || self.coeffs[0].is_zero() {
            return true; // root at 0
        }
        let a0 = self.coeffs[0].abs();
        let an = self.coeffs.last().expect("nonzero").abs();
        let n = self.degree();
        for p in divisors(&a0) {
            for q in divisors(&an) {
                if !p.gcd(&q).is_one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    // q^n f(p/q), kept integral
                    let num = BigInt::from(sign) * &p;
                    let mut total = BigInt::zero();
                    for (i, c) in self.coeffs.iter().enumerate() {
                        total += c * num.pow(i as u32) * q.pow((n - i) as u32);
                    }
                    if total.is_zero() {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Does a primitive quartic with no rational root split into two integer
    /// quadratics?
    fn has_quadratic_split(&self) -> bool {
        let a = self.coeffs[4].clone();
        let b = self.coeffs[3].clone();
        let c = self.coeffs[2].clone();
        let d = self.coeffs[1].clone();
        let e = self.coeffs[0].clone();
        debug_assert!(!e.is_zero(), "zero constant term implies a rational root");
        let verify =
            |a1: &BigInt, b1: &BigInt, c1: &BigInt, a2: &BigInt, b2: &BigInt, c2: &BigInt| {
                a1 * a2 == a
                    && a1 * b2 + a2 * b1 == b
                    && b1 * b2 + a1 * c2 + a2 * c1 == c
                    && b1 * c2 + b2 * c1 == d
                    && c1 * c2 == e
            };
        for a1 in divisors(&a.abs()) {
            let a2 = &a / &a1;
            for c1_abs in divisors(&e.abs()) {
                for c1 in [c1_abs.clone(), -c1_abs] {
                    let c2 = &e / &c1;
                    // a2 b1 + a1 b2 = b ; c2 b1 + c1 b2 = d
                    let det = &a2 * &c1 - &a1 * &c2;
                    if !det.is_zero() {
                        let n1 = &b * &c1 - &a1 * &d;
                        let n2 = &a2 * &d - &b * &c2;
                        if (&n1 % &det).is_zero() && (&n2 % &det).is_zero() {
                            let b1 = n1 / &det;
                            let b2 = n2 / &det;
                            if verify(&a1, &b1, &c1, &a2, &b2, &c2) {
                                return true;
                            }
                        }
                    } else {
                        // proportional equations: scan b1 within the
                        // Landau-Mignotte bound for a quadratic factor
                        let bound = BigInt::from(4) * self.norm2_ceil();
                        let mut b1 = -bound.clone();
                        while b1 <= bound {
                            let rem = &b - &a2 * &b1;
                            if (&rem % &a1).is_zero() {
                                let b2 = rem / &a1;
                                if verify(&a1, &b1, &c1, &a2, &b2, &c2) {
                                    return true;
                                }
                            }
                            b1 += 1;
                        }
                    }
                }
            }
        }
        false
    }

    fn norm2_ceil(&self) -> BigInt {
        let s: BigInt = self.coeffs.iter().map(|c| c * c).sum();
        s.sqrt() + 1
    }
}

impl fmt::Display for IntPoly {
    fmt_poly_body!();
}

fn horner_mod(coeffs: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in coeffs.iter().rev() {
        acc = (mod_mul(acc, x, p) + c) % p;
    }
    acc
}

/// All positive divisors of `|n|` (n nonzero), by trial division. The inputs
/// here are small leading/constant coefficients, not census-scale numbers.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let q = &n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// polynomials over Q
// ---------------------------------------------------------------------------

/// A polynomial with rational coefficients, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `t`.
    pub fn var() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) => {
                let inv = l.recip();
                QPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Euclidean division: `self = q * rhs + r` with `deg r < deg rhs`.
    pub fn div_rem(&self, rhs: &QPoly) -> (QPoly, QPoly) {
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        if self.is_zero() || self.degree() < rhs.degree() {
            return (QPoly::zero(), self.clone());
        }
        let dr = rhs.degree();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rational::zero(); self.degree() - dr + 1];
        let lead_inv = rhs.leading().expect("nonzero").recip();
        for k in (0..quo.len()).rev() {
            let top = rem[k + dr].clone() * &lead_inv;
            if !Zero::is_zero(&top) {
                for (i, c) in rhs.coeffs.iter().enumerate() {
                    let sub = c * &top;
                    rem[k + i] = rem[k + i].clone() - sub;
                }
            }
            quo[k] = top;
        }
        (QPoly::new(quo), QPoly::new(rem))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, rhs: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
            out.push(a + b);
        }
        QPoly::new(out)
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        self + (-rhs)
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a * b;
            }
        }
        QPoly::new(out)
    }
}

impl fmt::Display for QPoly {
    fmt_poly_body!();
}

// ---------------------------------------------------------------------------
// rational functions over Q
// ---------------------------------------------------------------------------

/// An element of `Q(t)`, kept reduced (coprime numerator and denominator,
/// monic denominator). Implements [`Field`], so the generic geometry runs
/// over it unchanged; that is how one-variable identities are verified
/// exactly rather than at sample points.
///
/// Square roots are not supported here: `sqrt_pair` is always `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct RatFun {
    num: QPoly,
    den: QPoly,
}

impl RatFun {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return RatFun {
                num: QPoly::zero(),
                den: QPoly::constant(Rational::one()),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero denominator").recip();
        let scale = QPoly::constant(lead);
        RatFun {
            num: num * scale.clone(),
            den: den * scale,
        }
    }

    /// The identity function `t`.
    pub fn var() -> Self {
        RatFun {
            num: QPoly::var(),
            den: QPoly::constant(Rational::one()),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFun {
            num: p,
            den: QPoly::constant(Rational::one()),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    /// Evaluate at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if Zero::is_zero(&d) {
            return None;
        }
        Some(self.num.eval(x) / d)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        RatFun::reduced(
            self.num.clone() * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        self + (-rhs)
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        RatFun::reduced(self.num * rhs.num, self.den * rhs.den)
    }
}

impl crate::field::FromInt for RatFun {
    fn int(n: i64) -> Self {
        RatFun::constant(Rational::from_integer(BigInt::from(n)))
    }
}

impl Field for RatFun {
    const EXACT: bool = true;

    fn embed(&self, n: i64) -> Self {
        RatFun::constant(Rational::from_integer(BigInt::from(n)))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFun::reduced(self.den.clone(), self.num.clone()))
    }

    fn sqrt_pair(&self) -> Option<(Self, Self)> {
        None
    }

    fn tol_eq(&self, other: &Self, _tol: Tol) -> bool {
        self == other
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FromInt;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn eval_and_roots_mod_p() {
        let u = IntPoly::from_ints(&[-1984, 896, -84, 1]);
        assert!(u.has_root_mod_p(47));
        assert_eq!(u.eval(&BigInt::from(0)), BigInt::from(-1984));
        let quad = IntPoly::from_ints(&[304, -96, 1]);
        assert!(quad.has_root_mod_p(11)); // legendre(5, 11) = +1
        assert!(!quad.has_root_mod_p(13)); // legendre(5, 13) = -1
        for r in quad.roots_mod_p(11) {
            assert_eq!(quad.eval_mod(r, 11), 0);
        }
    }

    #[test]
    fn discriminants() {
        // known anchors
        assert_eq!(
            IntPoly::from_ints(&[-1, 0, 0, 1]).discriminant().unwrap(),
            BigInt::from(-27)
        );
        assert_eq!(
            IntPoly::from_ints(&[-1, 0, 0, 0, 1])
                .discriminant()
                .unwrap(),
            BigInt::from(-256)
        );
        assert_eq!(
            IntPoly::from_ints(&[29, -14, 1]).discriminant().unwrap(),
            BigInt::from(80)
        );
        assert!(IntPoly::from_ints(&[1, 1]).discriminant().is_err());
        assert!(IntPoly::from_ints(&[1, 1, 1, 1, 1, 1])
            .discriminant()
            .is_err());
    }

    #[test]
    fn irreducibility() {
        assert!(IntPoly::from_ints(&[-1984, 896, -84, 1])
            .is_irreducible_over_q()
            .unwrap());
        assert!(!IntPoly::from_ints(&[-1, 0, 0, 1])
            .is_irreducible_over_q()
            .unwrap());
        // (x^2+1)^2
        assert!(!IntPoly::from_ints(&[1, 0, 2, 0, 1])
            .is_irreducible_over_q()
            .unwrap());
        // x^4 + 1: no rational roots, no rational quadratic split
        assert!(IntPoly::from_ints(&[1, 0, 0, 0, 1])
            .is_irreducible_over_q()
            .unwrap());
        // (x^2 - 2)(x^2 - 3)
        assert!(!IntPoly::from_ints(&[6, 0, -5, 0, 1])
            .is_irreducible_over_q()
            .unwrap());
        // (2x^2 + x + 1)(3x^2 + x + 2), a non-monic split
        assert!(!IntPoly::from_ints(&[2, 3, 8, 5, 6])
            .is_irreducible_over_q()
            .unwrap());
        // x^2 - 2
        assert!(IntPoly::from_ints(&[-2, 0, 1])
            .is_irreducible_over_q()
            .unwrap());
        // linear
        assert!(IntPoly::from_ints(&[4, 2]).is_irreducible_over_q().unwrap());
        // (x^2+1)(x^2+4): equal-ratio divisor pairs exercise the det = 0 branch
        assert!(!IntPoly::from_ints(&[4, 0, 5, 0, 1])
            .is_irreducible_over_q()
            .unwrap());
    }

    #[test]
    fn qpoly_division_and_gcd() {
        let a = QPoly::from_int_poly(&IntPoly::from_ints(&[27, -138, 164, -56]));
        let lin = QPoly::from_int_poly(&IntPoly::from_ints(&[-3, 2]));
        let (quo, rem) = a.div_rem(&lin);
        assert!(rem.is_zero());
        // -56t^3 + 164t^2 - 138t + 27 = (2t - 3)(-28t^2 + 40t - 9)
        assert_eq!(
            quo,
            QPoly::from_int_poly(&IntPoly::from_ints(&[-9, 40, -28]))
        );

        let prod = a.clone() * lin.clone();
        assert_eq!(prod.gcd(&a), a.monic());
        let g = lin.gcd(&QPoly::from_int_poly(&IntPoly::from_ints(&[1, 1])));
        assert_eq!(g, QPoly::constant(Rational::int(1)));
    }

    #[test]
    fn ratfun_field_ops() {
        let t = RatFun::var();
        let one = t.embed(1);
        // (t^2 - 1)/(t - 1) reduces to t + 1
        let r = (t.clone() * t.clone() - one.clone())
            .div(&(t.clone() - one.clone()))
            .unwrap();
        assert_eq!(r, t.clone() + one.clone());
        assert_eq!(r.eval(&q(3, 1)).unwrap(), q(4, 1));
        // inverse round trip
        let f = (t.clone() + one.clone())
            .div(&(t.clone() * t.clone() + t.embed(7)))
            .unwrap();
        assert_eq!(f.clone() * f.inv().unwrap(), one);
        // pole detection
        let g = one.clone().div(&(t.clone() - one.embed(2))).unwrap();
        assert!(g.eval(&q(2, 1)).is_none());
    }
}
