//! Dense univariate polynomials over a base ring of coefficients, stored
//! lowest degree first with no trailing zeros.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient arithmetic for the two prime fields we build on.
pub(crate) trait Base {
    type E: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// Inverse of a nonzero element.
    fn inv(&self, a: &Self::E) -> Self::E;
}

pub(crate) struct Rationals;

impl Base for Rationals {
    type E = BigRational;

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
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

pub(crate) struct PrimeField {
    pub p: u64,
}

impl Base for PrimeField {
    type E = u64;

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
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        // Fermat: a^(p-2)
        let mut result = 1u64;
        let mut base = *a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }
}

pub(crate) fn trim<B: Base>(b: &B, mut a: Vec<B::E>) -> Vec<B::E> {
    while a.last().is_some_and(|c| b.is_zero(c)) {
        a.pop();
    }
    a
}

pub(crate) fn add<B: Base>(b: &B, x: &[B::E], y: &[B::E]) -> Vec<B::E> {
    let len = x.len().max(y.len());
    let zero = b.zero();
    let out = (0..len)
        .map(|i| b.add(x.get(i).unwrap_or(&zero), y.get(i).unwrap_or(&zero)))
        .collect();
    trim(b, out)
}

pub(crate) fn sub<B: Base>(b: &B, x: &[B::E], y: &[B::E]) -> Vec<B::E> {
    let len = x.len().max(y.len());
    let zero = b.zero();
    let out = (0..len)
        .map(|i| b.sub(x.get(i).unwrap_or(&zero), y.get(i).unwrap_or(&zero)))
        .collect();
    trim(b, out)
}

pub(crate) fn mul<B: Base>(b: &B, x: &[B::E], y: &[B::E]) -> Vec<B::E> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![b.zero(); x.len() + y.len() - 1];
    for (i, xi) in x.iter().enumerate() {
        if b.is_zero(xi) {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            out[i + j] = b.add(&out[i + j], &b.mul(xi, yj));
        }
    }
    trim(b, out)
}

/// Quotient and remainder of `x` by a nonzero `y`.
pub(crate) fn div_rem<B: Base>(b: &B, x: &[B::E], y: &[B::E]) -> (Vec<B::E>, Vec<B::E>) {
    assert!(!y.is_empty(), "polynomial division by zero");
    let mut rem = x.to_vec();
    let dy = y.len() - 1;
    let lead_inv = b.inv(&y[dy]);
    if rem.len() <= dy {
        return (Vec::new(), rem);
    }
    let mut quot = vec![b.zero(); rem.len() - dy];
    while rem.len() > dy {
        let shift = rem.len() - 1 - dy;
        let c = b.mul(rem.last().unwrap(), &lead_inv);
        for (j, yj) in y.iter().enumerate() {
            rem[shift + j] = b.sub(&rem[shift + j], &b.mul(&c, yj));
        }
        quot[shift] = c;
        rem = trim(b, rem);
    }
    (trim(b, quot), rem)
}

pub(crate) fn rem<B: Base>(b: &B, x: &[B::E], y: &[B::E]) -> Vec<B::E> {
    if x.len() < y.len() {
        return x.to_vec();
    }
    div_rem(b, x, y).1
}

/// Inverse of `x` modulo `modulus`, if `gcd(x, modulus) = 1`.
pub(crate) fn inv_mod<B: Base>(b: &B, x: &[B::E], modulus: &[B::E]) -> Option<Vec<B::E>> {
    // extended Euclid tracking only the coefficient of x
    let (mut r0, mut r1) = (modulus.to_vec(), rem(b, x, modulus));
    let (mut s0, mut s1): (Vec<B::E>, Vec<B::E>) = (Vec::new(), vec![b.one()]);
    while !r1.is_empty() {
        let (q, r) = div_rem(b, &r0, &r1);
        let s = sub(b, &s0, &mul(b, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = b.inv(&r0[0]);
    let out: Vec<B::E> = s0.iter().map(|e| b.mul(e, &c)).collect();
    Some(rem(b, &trim(b, out), modulus))
}

/// The m-th cyclotomic polynomial with integer coefficients.
pub(crate) fn cyclotomic(m: u32) -> Vec<BigInt> {
    let q = Rationals;
    let mut num: Vec<BigRational> = vec![BigRational::zero(); m as usize + 1];
    num[0] = -BigRational::one();
    num[m as usize] = BigRational::one();
    for d in 1..m {
        if m % d == 0 {
            let phi_d: Vec<BigRational> = cyclotomic(d)
                .into_iter()
                .map(BigRational::from_integer)
                .collect();
            num = div_rem(&q, &num, &phi_d).0;
        }
    }
    num.into_iter().map(|c| c.to_integer()).collect()
}

/// Irreducibility over F_p by trial division with every monic polynomial of
/// degree at most half the degree.
pub(crate) fn is_irreducible_mod_p(p: u64, f: &[u64]) -> bool {
    let b = PrimeField { p };
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let g = monic_from_code(p, d, code);
            if rem(&b, f, &g).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Monic polynomial of degree `d` whose lower coefficients are the base-p
/// digits of `code` (constant term first).
pub(crate) fn monic_from_code(p: u64, d: usize, mut code: u64) -> Vec<u64> {
    let mut g = Vec::with_capacity(d + 1);
    for _ in 0..d {
        g.push(code % p);
        code /= p;
    }
    g.push(1);
    g
}

/// The monic irreducible polynomial of degree `r` over F_p that comes first
/// when the non-leading coefficients are read as a base-p number with the
/// constant term as least significant digit.
pub(crate) fn lowest_irreducible(p: u64, r: u32) -> Vec<u64> {
    let count = p.pow(r);
    (0..count)
        .map(|code| monic_from_code(p, r as usize, code))
        .find(|g| is_irreducible_mod_p(p, g))
        .expect("an irreducible polynomial exists in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), ints(&[1, 1]));
        assert_eq!(cyclotomic(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(8), ints(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn irreducible_choices() {
        assert_eq!(lowest_irreducible(2, 1), vec![0, 1]);
        assert_eq!(lowest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(lowest_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(lowest_irreducible(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn inverse_mod_irreducible() {
        let b = PrimeField { p: 2 };
        let f = vec![1, 1, 1];
        let x = vec![0, 1];
        let inv = inv_mod(&b, &x, &f).unwrap();
        let prod = rem(&b, &mul(&b, &x, &inv), &f);
        assert_eq!(prod, vec![1]);
    }
}
