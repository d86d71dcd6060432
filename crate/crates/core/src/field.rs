//! Coefficient fields: arbitrary-precision rationals and odd prime fields.
//!
//! Fields are value-level descriptors (the prime field carries its modulus),
//! so one generic polynomial stack serves both characteristics. Elements of
//! `Rationals` are always stored normalized (reduced fraction, denominator
//! positive); elements of `PrimeField` are residues in `0..p`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Default modulus for prime-field computations.
pub const DEFAULT_PRIME: u64 = 32003;

pub trait Field: Clone + PartialEq + Eq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, Error>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// 0 for the rationals, p for a prime field.
    fn characteristic(&self) -> u64;
    /// Unit `u` such that scaling `coeffs` (leading coefficient first) by `u`
    /// gives the canonical representative: integer, collectively primitive,
    /// positive leading coefficient over the rationals; monic over a prime
    /// field. `coeffs` is nonempty and contains no zeros.
    fn canonical_scale(&self, coeffs: &[&Self::Elem]) -> Self::Elem;
    /// Text form accepted back by the polynomial parser.
    fn format_elem(&self, a: &Self::Elem) -> String;
    /// Value of a decimal digit string of arbitrary length.
    fn from_decimal(&self, digits: &str) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, Error> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Whether the printer should render this coefficient with a minus sign.
    fn is_display_negative(&self, _a: &Self::Elem) -> bool {
        false
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational, Error> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn canonical_scale(&self, coeffs: &[&BigRational]) -> BigRational {
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in coeffs {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut scale = BigRational::new(den_lcm, num_gcd);
        if coeffs[0].is_negative() {
            scale = -scale;
        }
        scale
    }

    fn format_elem(&self, a: &BigRational) -> String {
        use alloc::string::ToString;
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            let mut s = a.numer().to_string();
            s.push('/');
            s.push_str(&a.denom().to_string());
            s
        }
    }

    fn from_decimal(&self, digits: &str) -> BigRational {
        let n = digits.parse::<BigInt>().expect("caller feeds digit strings");
        BigRational::from_integer(n)
    }

    fn is_display_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
}

/// A prime field `F_p` with `p < 2^31`, so products fit in `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, Error> {
        if p >= (1 << 31) {
            return Err(Error::Invalid(alloc::format!("modulus {p} exceeds 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::Invalid(alloc::format!("modulus {p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Image of a rational number, if its denominator is invertible mod p.
    pub fn from_rational(&self, x: &BigRational) -> Option<u64> {
        let p = BigInt::from(self.p);
        let num = x.numer().mod_floor(&p);
        let den = x.denom().mod_floor(&p);
        let num = big_to_u64(&num);
        let den = big_to_u64(&den);
        if den == 0 {
            return None;
        }
        let inv = mod_inverse(den, self.p)?;
        Some(num * inv % self.p)
    }
}

fn big_to_u64(x: &BigInt) -> u64 {
    // Caller guarantees 0 <= x < p < 2^31.
    let (sign, digits) = x.to_u64_digits();
    match sign {
        Sign::NoSign => 0,
        Sign::Plus => digits[0],
        Sign::Minus => unreachable!("mod_floor yields nonnegative residues"),
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return None;
    }
    // Extended Euclid on signed 128-bit; p < 2^31 keeps everything in range.
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus is prime, nonzero residues are invertible");
    Some(t0.rem_euclid(p as i128) as u64)
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> Result<u64, Error> {
        mod_inverse(*a, self.p).ok_or(Error::DivisionByZero)
    }

    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn canonical_scale(&self, coeffs: &[&u64]) -> u64 {
        mod_inverse(*coeffs[0], self.p).expect("leading coefficient is nonzero")
    }

    fn format_elem(&self, a: &u64) -> String {
        use alloc::string::ToString;
        a.to_string()
    }

    fn from_decimal(&self, digits: &str) -> u64 {
        let mut acc = 0u64;
        for b in digits.bytes() {
            debug_assert!(b.is_ascii_digit());
            acc = (acc * 10 + (b - b'0') as u64) % self.p;
        }
        acc
    }
}

/// Scales a coefficient vector to canonical form in place. Shared by the
/// polynomial layer so every construction path normalizes identically.
pub fn canonicalize<F: Field>(field: &F, coeffs: &mut [F::Elem]) {
    if coeffs.is_empty() {
        return;
    }
    let refs: Vec<&F::Elem> = coeffs.iter().collect();
    let scale = field.canonical_scale(&refs);
    if field.is_one(&scale) {
        return;
    }
    for c in coeffs.iter_mut() {
        *c = field.mul(c, &scale);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites_and_large_moduli() {
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(32004).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
    }

    #[test]
    fn prime_field_inverses() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        for a in [1u64, 2, 7, 1000, 32002] {
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), 1);
        }
        assert!(f.inv(&0).is_err());
    }

    #[test]
    fn rational_canonical_scale_gives_primitive_integers() {
        let f = Rationals;
        let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let mut coeffs = alloc::vec![half, third];
        canonicalize(&f, &mut coeffs);
        assert_eq!(coeffs[0], f.from_i64(3));
        assert_eq!(coeffs[1], f.from_i64(-2));
    }

    #[test]
    fn rational_reduction_mod_p_matches_field_ops() {
        let q = Rationals;
        let f = PrimeField::new(5).unwrap();
        let x = BigRational::new(BigInt::from(3), BigInt::from(2));
        // 3/2 = 3 * 2^-1 = 3 * 3 = 9 = 4 mod 5
        assert_eq!(f.from_rational(&x), Some(4));
        let bad = BigRational::new(BigInt::from(1), BigInt::from(5));
        assert_eq!(f.from_rational(&bad), None);
        let _ = q;
    }
}
