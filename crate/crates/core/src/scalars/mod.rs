//! Exact coefficient fields: cyclotomic extensions of the rationals and
//! finite fields, the m-th roots of unity in a fixed order, the loop
//! parameters, and dense exact linear algebra.

mod matrix;
pub(crate) mod poly;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use poly::{Base, PrimeField, Rationals};

pub use matrix::ExactMatrix;

/// Which field to compute over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// Q(zeta_m), the rationals adjoined a primitive m-th root of unity.
    CyclotomicRationals(u32),
    /// The field with p^r elements.
    PrimePowerField { p: u64, r: u32 },
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::CyclotomicRationals(m) => write!(f, "Q(zeta_{m})"),
            FieldSpec::PrimePowerField { p, r } => write!(f, "GF({p}^{r})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q(zeta_M)`, `Q`, `GF(P^R)` and `GF(P)`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidField(s.to_string());
        if t == "Q" {
            return Ok(FieldSpec::CyclotomicRationals(1));
        }
        if let Some(inner) = t.strip_prefix("Q(zeta_").and_then(|r| r.strip_suffix(')')) {
            let m: u32 = inner.parse().map_err(|_| bad())?;
            return Ok(FieldSpec::CyclotomicRationals(m));
        }
        if let Some(inner) = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
            let (p, r) = match inner.split_once('^') {
                Some((p, r)) => (p.parse().map_err(|_| bad())?, r.parse().map_err(|_| bad())?),
                None => (inner.parse().map_err(|_| bad())?, 1),
            };
            return Ok(FieldSpec::PrimePowerField { p, r });
        }
        Err(bad())
    }
}

/// An element of a [`Field`], as residue coefficients (constant term first,
/// no trailing zeros). Two scalars of the same field are equal iff they are
/// structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(Vec<BigRational>),
    Modular(Vec<u64>),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(c) => c.is_empty(),
            Scalar::Modular(c) => c.is_empty(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Modulus {
    Rational(Vec<BigRational>),
    Modular { p: u64, poly: Vec<u64> },
}

/// Handle to an exact field. Cheap to clone; all operations are pure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    spec: FieldSpec,
    modulus: Modulus,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            while n % d == 0 {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Build a field from its spec.
pub fn make_field(spec: FieldSpec) -> Result<Field> {
    let modulus = match &spec {
        FieldSpec::CyclotomicRationals(m) => {
            if *m == 0 {
                return Err(Error::InvalidField("Q(zeta_0)".into()));
            }
            Modulus::Rational(
                poly::cyclotomic(*m)
                    .into_iter()
                    .map(BigRational::from_integer)
                    .collect(),
            )
        }
        FieldSpec::PrimePowerField { p, r } => {
            if !is_prime(*p) {
                return Err(Error::InvalidField(format!("{p} is not prime")));
            }
            if *r == 0 {
                return Err(Error::InvalidField("GF(p^0)".into()));
            }
            if (*p as f64).powi(*r as i32) > 1e7 {
                return Err(Error::InvalidField(format!("GF({p}^{r}) is too large")));
            }
            Modulus::Modular {
                p: *p,
                poly: poly::lowest_irreducible(*p, *r),
            }
        }
    };
    Ok(Field { spec, modulus })
}

impl Field {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// 0 for the cyclotomic fields, p for GF(p^r).
    pub fn characteristic(&self) -> u64 {
        match &self.modulus {
            Modulus::Rational(_) => 0,
            Modulus::Modular { p, .. } => *p,
        }
    }

    /// Degree of the defining modulus over the prime field.
    pub fn degree(&self) -> usize {
        match &self.modulus {
            Modulus::Rational(m) => m.len() - 1,
            Modulus::Modular { poly, .. } => poly.len() - 1,
        }
    }

    /// The defining modulus as a JSON coefficient sequence (constant term first).
    pub fn modulus_json(&self) -> Value {
        match &self.modulus {
            Modulus::Rational(m) => Value::Array(m.iter().map(rational_json).collect()),
            Modulus::Modular { poly, .. } => Value::Array(poly.iter().map(|&c| c.into()).collect()),
        }
    }

    pub fn zero(&self) -> Scalar {
        match &self.modulus {
            Modulus::Rational(_) => Scalar::Rational(Vec::new()),
            Modulus::Modular { .. } => Scalar::Modular(Vec::new()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> Scalar {
        match &self.modulus {
            Modulus::Rational(m) => {
                let c = BigRational::from_integer(BigInt::from(v));
                Scalar::Rational(poly::rem(&Rationals, &poly::trim(&Rationals, vec![c]), m))
            }
            Modulus::Modular { p, poly: m } => {
                let c = v.rem_euclid(*p as i64) as u64;
                let b = PrimeField { p: *p };
                Scalar::Modular(poly::rem(&b, &poly::trim(&b, vec![c]), m))
            }
        }
    }

    pub fn from_rational(&self, v: &BigRational) -> Result<Scalar> {
        match &self.modulus {
            Modulus::Rational(m) => Ok(Scalar::Rational(poly::rem(
                &Rationals,
                &poly::trim(&Rationals, vec![v.clone()]),
                m,
            ))),
            Modulus::Modular { p, .. } => {
                let pb = BigInt::from(*p);
                let num = v.numer().mod_floor(&pb).to_u64().unwrap();
                let den = v.denom().mod_floor(&pb).to_u64().unwrap();
                if den == 0 {
                    return Err(Error::ScalarSyntax(format!("{v} has denominator divisible by {p}")));
                }
                let b = PrimeField { p: *p };
                let c = b.mul(&num, &b.inv(&den));
                Ok(Scalar::Modular(poly::trim(&b, vec![c])))
            }
        }
    }

    /// The generator x of the defining residue ring (a primitive root of
    /// unity for the cyclotomic fields).
    pub fn generator(&self) -> Scalar {
        match &self.modulus {
            Modulus::Rational(m) => {
                let x = vec![BigRational::zero(), BigRational::one()];
                Scalar::Rational(poly::rem(&Rationals, &x, m))
            }
            Modulus::Modular { p, poly: m } => {
                let b = PrimeField { p: *p };
                Scalar::Modular(poly::rem(&b, &[0, 1], m))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b, &self.modulus) {
            (Scalar::Rational(x), Scalar::Rational(y), Modulus::Rational(_)) => {
                Scalar::Rational(poly::add(&Rationals, x, y))
            }
            (Scalar::Modular(x), Scalar::Modular(y), Modulus::Modular { p, .. }) => {
                Scalar::Modular(poly::add(&PrimeField { p: *p }, x, y))
            }
            _ => panic!("scalar does not belong to field {}", self.spec),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b, &self.modulus) {
            (Scalar::Rational(x), Scalar::Rational(y), Modulus::Rational(_)) => {
                Scalar::Rational(poly::sub(&Rationals, x, y))
            }
            (Scalar::Modular(x), Scalar::Modular(y), Modulus::Modular { p, .. }) => {
                Scalar::Modular(poly::sub(&PrimeField { p: *p }, x, y))
            }
            _ => panic!("scalar does not belong to field {}", self.spec),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b, &self.modulus) {
            (Scalar::Rational(x), Scalar::Rational(y), Modulus::Rational(m)) => {
                if x.len() <= 1 && y.len() <= 1 {
                    // constants never need reduction
                    return Scalar::Rational(poly::mul(&Rationals, x, y));
                }
                Scalar::Rational(poly::rem(&Rationals, &poly::mul(&Rationals, x, y), m))
            }
            (Scalar::Modular(x), Scalar::Modular(y), Modulus::Modular { p, poly: m }) => {
                let b = PrimeField { p: *p };
                if x.len() <= 1 && y.len() <= 1 {
                    return Scalar::Modular(poly::mul(&b, x, y));
                }
                Scalar::Modular(poly::rem(&b, &poly::mul(&b, x, y), m))
            }
            _ => panic!("scalar does not belong to field {}", self.spec),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match (a, &self.modulus) {
            (Scalar::Rational(x), Modulus::Rational(m)) => {
                poly::inv_mod(&Rationals, x, m).map(Scalar::Rational)
            }
            (Scalar::Modular(x), Modulus::Modular { p, poly: m }) => {
                poly::inv_mod(&PrimeField { p: *p }, x, m).map(Scalar::Modular)
            }
            _ => panic!("scalar does not belong to field {}", self.spec),
        }
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut result = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    /// Number of elements for finite fields.
    fn size(&self) -> Option<u64> {
        match &self.modulus {
            Modulus::Rational(_) => None,
            Modulus::Modular { p, poly } => Some(p.pow(poly.len() as u32 - 1)),
        }
    }

    /// Finite-field element whose coefficients are the base-p digits of `code`.
    fn element_from_code(&self, mut code: u64) -> Scalar {
        match &self.modulus {
            Modulus::Modular { p, poly: m } => {
                let mut c = Vec::with_capacity(m.len() - 1);
                for _ in 0..m.len() - 1 {
                    c.push(code % p);
                    code /= p;
                }
                Scalar::Modular(poly::trim(&PrimeField { p: *p }, c))
            }
            Modulus::Rational(_) => unreachable!("only finite fields are enumerable"),
        }
    }

    /// Multiplicative order of a nonzero element.
    fn order(&self, a: &Scalar) -> u64 {
        let one = self.one();
        let mut x = a.clone();
        let mut k = 1;
        while x != one {
            x = self.mul(&x, a);
            k += 1;
        }
        k
    }

    /// Parse a scalar literal: an integer, a fraction `a/b`, or a JSON array
    /// of such coefficients (constant term first; integers for finite fields).
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let t = s.trim();
        if t.starts_with('[') {
            let v: Value = serde_json::from_str(t).map_err(|_| Error::ScalarSyntax(s.into()))?;
            return self.scalar_from_json(&v);
        }
        let r = parse_rational(t).ok_or_else(|| Error::ScalarSyntax(s.into()))?;
        self.from_rational(&r)
    }

    /// Coefficient-sequence serialization: rationals as strings, residues
    /// modulo p as integers.
    pub fn scalar_to_json(&self, a: &Scalar) -> Value {
        match a {
            Scalar::Rational(c) => Value::Array(c.iter().map(rational_json).collect()),
            Scalar::Modular(c) => Value::Array(c.iter().map(|&x| x.into()).collect()),
        }
    }

    pub fn scalar_from_json(&self, v: &Value) -> Result<Scalar> {
        let bad = || Error::ScalarSyntax(v.to_string());
        let items = match v {
            Value::Array(items) => items.clone(),
            other => vec![other.clone()],
        };
        let x = self.generator();
        let mut acc = self.zero();
        let mut power = self.one();
        for item in &items {
            let r = match item {
                Value::String(s) => parse_rational(s).ok_or_else(bad)?,
                Value::Number(n) => {
                    let i = n.as_i64().ok_or_else(bad)?;
                    BigRational::from_integer(BigInt::from(i))
                }
                _ => return Err(bad()),
            };
            let c = self.from_rational(&r)?;
            acc = self.add(&acc, &self.mul(&c, &power));
            power = self.mul(&power, &x);
        }
        Ok(acc)
    }

    /// Human-readable rendering, e.g. `3`, `-1/2`, `1+2*x`.
    pub fn display(&self, a: &Scalar) -> String {
        let coeffs: Vec<String> = match a {
            Scalar::Rational(c) => c.iter().map(|r| r.to_string()).collect(),
            Scalar::Modular(c) => c.iter().map(|r| r.to_string()).collect(),
        };
        if coeffs.is_empty() {
            return "0".into();
        }
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.as_str() != "0")
            .map(|(i, c)| match i {
                0 => c.clone(),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        terms.join("+")
    }
}

fn rational_json(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// The m roots of x^m - 1 listed with multiplicity: writing m = p^t * s with
/// p the characteristic (t = 0 in characteristic 0) and eta the chosen
/// primitive s-th root, entry (a-1)*p^t + b is eta^a for a = 1..s, b = 1..p^t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootList {
    pub roots: Vec<Scalar>,
    /// p^t, the multiplicity of every root.
    pub block: u32,
}

impl RootList {
    pub fn m(&self) -> usize {
        self.roots.len()
    }

    /// xi_l with the 1-based index used throughout.
    pub fn xi(&self, l: usize) -> &Scalar {
        &self.roots[l - 1]
    }
}

fn multiplicative_order_mod(p: u64, s: u64) -> u32 {
    if s == 1 {
        return 1;
    }
    let mut x = p % s;
    let mut k = 1;
    while x != 1 {
        x = x * p % s;
        k += 1;
    }
    k
}

/// The m-th roots of unity of `field` in the fixed grouped order.
pub fn roots_of_unity(field: &Field, m: u32) -> Result<RootList> {
    if m == 0 {
        return Err(Error::Invalid("m must be positive".into()));
    }
    let p = field.characteristic();
    let (block, s) = if p == 0 {
        (1u32, m)
    } else {
        let mut block = 1u32;
        let mut s = m;
        while s as u64 % p == 0 {
            s /= p as u32;
            block *= p as u32;
        }
        (block, s)
    };
    let eta = match field.spec() {
        FieldSpec::CyclotomicRationals(big_m) => {
            // Q(zeta_M) = Q(zeta_2M) for odd M
            let (order, zeta) = if big_m % 2 == 1 {
                let z = field.generator();
                let e = (*big_m as u64 + 1) / 2;
                (2 * *big_m, field.neg(&field.pow(&z, e)))
            } else {
                (*big_m, field.generator())
            };
            if order % s != 0 {
                let l = order.lcm(&s) as u64;
                let degree = (euler_phi(l) / euler_phi(order as u64)) as u32;
                return Err(Error::NotSplitting {
                    field: field.spec().to_string(),
                    m,
                    degree,
                    needed: format!("Q(zeta_{l})"),
                });
            }
            field.pow(&zeta, (order / s) as u64)
        }
        FieldSpec::PrimePowerField { p, r } => {
            let q = field.size().unwrap();
            if (q - 1) % s as u64 != 0 {
                let needed_r = multiplicative_order_mod(*p, s as u64);
                let total = (*r).lcm(&needed_r);
                return Err(Error::NotSplitting {
                    field: field.spec().to_string(),
                    m,
                    degree: total / r,
                    needed: format!("GF({p}^{total})"),
                });
            }
            (1..q)
                .map(|code| field.element_from_code(code))
                .find(|a| field.order(a) == s as u64)
                .expect("the multiplicative group is cyclic")
        }
    };
    let mut roots = Vec::with_capacity(m as usize);
    for a in 1..=s {
        let r = field.pow(&eta, a as u64);
        for _ in 0..block {
            roots.push(r.clone());
        }
    }
    Ok(RootList { roots, block })
}

/// The loop parameters delta_0..delta_{m-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterSet {
    deltas: Vec<Scalar>,
}

impl ParameterSet {
    pub fn m(&self) -> usize {
        self.deltas.len()
    }

    pub fn delta(&self, i: usize) -> &Scalar {
        &self.deltas[i]
    }

    pub fn deltas(&self) -> &[Scalar] {
        &self.deltas
    }

    pub fn all_zero(&self) -> bool {
        self.deltas.iter().all(Scalar::is_zero)
    }
}

/// Check delta_i * delta_0 = delta_i for 1 <= i < m.
pub fn validate_parameters(field: &Field, deltas: Vec<Scalar>, m: usize) -> Result<ParameterSet> {
    if deltas.len() != m {
        return Err(Error::ParameterCount {
            expected: m,
            got: deltas.len(),
        });
    }
    for (i, d) in deltas.iter().enumerate().skip(1) {
        if field.mul(d, &deltas[0]) != *d {
            return Err(Error::ParameterConstraint { index: i });
        }
    }
    Ok(ParameterSet { deltas })
}

/// Split a comma-separated list of scalar literals, keeping bracketed
/// coefficient sequences intact.
pub fn split_literals(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

/// Parse a δ list like `1,0` or `[1,2],0` in the given field.
pub fn parse_parameters(field: &Field, s: &str, m: usize) -> Result<ParameterSet> {
    let deltas = split_literals(s)
        .iter()
        .map(|lit| field.parse_scalar(lit))
        .collect::<Result<Vec<_>>>()?;
    validate_parameters(field, deltas, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(m: u32) -> Field {
        make_field(FieldSpec::CyclotomicRationals(m)).unwrap()
    }

    fn gf(p: u64, r: u32) -> Field {
        make_field(FieldSpec::PrimePowerField { p, r }).unwrap()
    }

    #[test]
    fn field_specs_parse_and_print() {
        let s: FieldSpec = "Q(zeta_4)".parse().unwrap();
        assert_eq!(s, FieldSpec::CyclotomicRationals(4));
        assert_eq!(s.to_string(), "Q(zeta_4)");
        let s: FieldSpec = "GF(2^3)".parse().unwrap();
        assert_eq!(s, FieldSpec::PrimePowerField { p: 2, r: 3 });
        assert_eq!("GF(5)".parse::<FieldSpec>().unwrap(), FieldSpec::PrimePowerField { p: 5, r: 1 });
        assert!("R".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn rationals_and_two_element_field() {
        let f = q(1);
        assert_eq!(f.characteristic(), 0);
        assert_eq!(f.degree(), 1);
        let g = gf(2, 1);
        assert_eq!(g.characteristic(), 2);
        assert_eq!(g.add(&g.one(), &g.one()), g.zero());
    }

    #[test]
    fn fourth_cyclotomic_modulus() {
        // x^4 - 1 = (x - 1)(x + 1)(x^2 + 1)
        let f = q(4);
        assert_eq!(f.modulus_json(), serde_json::json!(["1", "0", "1"]));
        let i = f.generator();
        assert_eq!(f.mul(&i, &i), f.from_int(-1));
    }

    #[test]
    fn non_prime_rejected() {
        assert!(make_field(FieldSpec::PrimePowerField { p: 4, r: 1 }).is_err());
    }

    #[test]
    fn root_lists() {
        let f = q(2);
        let r = roots_of_unity(&f, 2).unwrap();
        assert_eq!(r.roots, vec![f.from_int(-1), f.from_int(1)]);

        let g = gf(2, 1);
        let r = roots_of_unity(&g, 2).unwrap();
        assert_eq!(r.roots, vec![g.one(), g.one()]);
        assert_eq!(r.block, 2);

        let g = gf(5, 1);
        let r = roots_of_unity(&g, 4).unwrap();
        let want: Vec<Scalar> = [2, 4, 3, 1].iter().map(|&v| g.from_int(v)).collect();
        assert_eq!(r.roots, want);
    }

    #[test]
    fn odd_cyclotomic_contains_sign() {
        // Q = Q(zeta_1) already holds both square roots of unity
        let f = q(1);
        let r = roots_of_unity(&f, 2).unwrap();
        assert_eq!(r.roots, vec![f.from_int(-1), f.one()]);
        let f = q(3);
        assert!(roots_of_unity(&f, 6).is_ok());
    }

    #[test]
    fn non_splitting_reports_extension() {
        let g = gf(2, 1);
        match roots_of_unity(&g, 3) {
            Err(Error::NotSplitting { degree, needed, .. }) => {
                assert_eq!(degree, 2);
                assert_eq!(needed, "GF(2^2)");
            }
            other => panic!("unexpected {other:?}"),
        }
        match roots_of_unity(&q(1), 4) {
            Err(Error::NotSplitting { degree, .. }) => assert_eq!(degree, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(roots_of_unity(&gf(2, 2), 3).is_ok());
    }

    #[test]
    fn root_product_reconstructs_x_m_minus_one() {
        for (f, m) in [(q(3), 3u32), (q(4), 4), (gf(3, 1), 3), (gf(2, 2), 6), (gf(7, 1), 3)] {
            let r = roots_of_unity(&f, m).unwrap();
            // polynomial over the field as Vec<Scalar>, constant first
            let mut prod = vec![f.one()];
            for xi in &r.roots {
                let mut next = vec![f.zero(); prod.len() + 1];
                for (i, c) in prod.iter().enumerate() {
                    next[i + 1] = f.add(&next[i + 1], c);
                    next[i] = f.sub(&next[i], &f.mul(c, xi));
                }
                prod = next;
            }
            let mut want = vec![f.zero(); m as usize + 1];
            want[0] = f.from_int(-1);
            want[m as usize] = f.one();
            assert_eq!(prod, want, "field {}", f.spec());
        }
    }

    #[test]
    fn parameter_validation() {
        let f = q(1);
        let ok = |d: &[i64]| validate_parameters(&f, d.iter().map(|&v| f.from_int(v)).collect(), 2);
        assert!(ok(&[1, 5]).is_ok());
        assert!(ok(&[3, 0]).is_ok());
        assert_eq!(ok(&[2, 5]), Err(Error::ParameterConstraint { index: 1 }));
        assert!(matches!(ok(&[1]), Err(Error::ParameterCount { .. })));
    }

    #[test]
    fn literals() {
        let f = q(3);
        assert_eq!(split_literals("1,[0,1],-1/2"), vec!["1", "[0,1]", "-1/2"]);
        let p = parse_parameters(&f, "1,[0,1],-1/2", 3).unwrap();
        assert_eq!(p.delta(1), &f.generator());
        let g = gf(5, 1);
        assert_eq!(g.parse_scalar("1/2").unwrap(), g.from_int(3));
        let s = f.parse_scalar("[1,\"2/3\"]").unwrap();
        assert_eq!(f.scalar_from_json(&f.scalar_to_json(&s)).unwrap(), s);
    }

    #[test]
    fn inverses_in_extension_fields() {
        for f in [q(5), gf(2, 3), gf(3, 2)] {
            let x = f.add(&f.generator(), &f.from_int(2));
            let inv = f.inv(&x).unwrap();
            assert_eq!(f.mul(&x, &inv), f.one());
        }
    }
}
