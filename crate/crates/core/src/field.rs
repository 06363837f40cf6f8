//! Finite fields `GF(p^m) = GF(p)[z]/(modulus)` in polynomial-basis form.
//!
//! Elements are plain canonical integers ([`Elem`]): the little-endian base-`p`
//! value of the element's coordinates over `{1, z, ..., z^(m-1)}`. All
//! arithmetic goes through a [`Field`] handle, which is immutable, cheap to
//! clone and safe to share between threads. Fields of order at most `2^16`
//! carry log/antilog tables built from the smallest primitive element; the
//! polynomial reduction path stays available as [`Field::mul_reduce`] and the
//! two agree bit for bit.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 24;

/// Fields up to this order get log/antilog tables.
pub const TABLE_LIMIT: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must be monic of degree {0}")]
    NotMonic(usize),
    #[error("modulus coefficient {0} is not reduced mod p")]
    BadDigit(u64),
    #[error("modulus is reducible over GF(p)")]
    Reducible,
    #[error("field order exceeds 2^24")]
    TooLarge,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not the order of a subfield")]
    InvalidSubfield(u64),
    #[error("no element of multiplicative order {0}")]
    NoSuchRoot(u64),
    #[error("{value} is not an element of a field of order {order}")]
    OutOfRange { value: u64, order: u64 },
    #[error("malformed field description: {0}")]
    Parse(String),
}

/// Canonical integer encoding of a field element.
///
/// An `Elem` has no meaning without the [`Field`] it was produced by.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    // exp has length 2 * (order - 1) so a product of logs never needs a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    p: u32,
    m: usize,
    modulus: Vec<u32>,
    order: u32,
    // p^i for i in 0..=m
    place: Vec<u32>,
    // modulus as a bit mask, only meaningful for p = 2
    mask: u64,
    primitive: OnceLock<Elem>,
    tables: Option<Tables>,
}

/// A finite field `GF(p^m)` with an explicit monic irreducible modulus.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl Field {
    /// Builds `GF(p^m)` from `modulus`, given as `m + 1` ascending
    /// coefficients over `GF(p)`.
    pub fn new(p: u64, m: usize, modulus: &[u64]) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let order = (p as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
        if order > MAX_ORDER as u128 {
            return Err(FieldError::TooLarge);
        }
        if modulus.len() != m + 1 || modulus[m] != 1 {
            return Err(FieldError::NotMonic(m));
        }
        if let Some(&bad) = modulus.iter().find(|&&c| c >= p) {
            return Err(FieldError::BadDigit(bad));
        }
        if !irreducible_over_prime_field(modulus, p) {
            return Err(FieldError::Reducible);
        }
        Ok(Self::build(p as u32, m, modulus.iter().map(|&c| c as u32).collect(), true))
    }

    /// The prime field `GF(p)`, with modulus `x`.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::new(p, 1, &[0, 1])
    }

    /// Same field, but without log/antilog tables (reduction path only).
    pub fn without_tables(&self) -> Self {
        Self::build(self.0.p, self.0.m, self.0.modulus.clone(), false)
    }

    fn build(p: u32, m: usize, modulus: Vec<u32>, tables: bool) -> Self {
        let mut place = Vec::with_capacity(m + 1);
        let mut acc = 1u32;
        for _ in 0..=m {
            place.push(acc);
            acc = acc.wrapping_mul(p);
        }
        let order = place[m];
        let mask =
            if p == 2 { modulus.iter().enumerate().fold(0u64, |acc, (i, &c)| acc | ((c as u64) << i)) } else { 0 };
        let mut inner = Inner { p, m, modulus, order, place, mask, primitive: OnceLock::new(), tables: None };
        if tables && (order as u64) <= TABLE_LIMIT {
            let field = Field(Arc::new(inner));
            let g = field.primitive_element();
            let n = order as usize - 1;
            let mut exp = vec![0u32; 2 * n.max(1)];
            let mut log = vec![0u32; order as usize];
            let mut x = Elem::ONE;
            for (i, slot) in exp[..n].iter_mut().enumerate() {
                *slot = x.0;
                log[x.0 as usize] = i as u32;
                x = field.mul_reduce(x, g);
            }
            exp.copy_within(..n, n);
            inner = Arc::try_unwrap(field.0).unwrap_or_else(|_| unreachable!());
            inner.tables = Some(Tables { exp, log });
        }
        Field(Arc::new(inner))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p as u64
    }

    pub fn degree(&self) -> usize {
        self.0.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// Number of elements, `p^m`.
    pub fn order(&self) -> u64 {
        self.0.order as u64
    }

    pub fn has_tables(&self) -> bool {
        self.0.tables.is_some()
    }

    /// Checked conversion from the canonical integer encoding.
    pub fn elem(&self, value: u64) -> Result<Elem, FieldError> {
        if value < self.order() {
            Ok(Elem(value as u32))
        } else {
            Err(FieldError::OutOfRange { value, order: self.order() })
        }
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The image of the integer `n` under `Z -> GF(p) -> GF(p^m)`.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.order).map(Elem)
    }

    /// Coordinates of `a` over the polynomial basis, lowest first.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        let p = self.0.p;
        let mut v = a.0;
        (0..self.0.m)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    /// Inverse of [`Field::digits`]; digits are reduced mod `p`.
    pub fn from_digits(&self, digits: &[u32]) -> Elem {
        let p = self.0.p;
        Elem(digits.iter().take(self.0.m).zip(&self.0.place).map(|(&d, &w)| (d % p) * w).sum())
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.0.m == 1 {
            return Elem((a.0 + b.0) % p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        for &w in &self.0.place[..self.0.m] {
            out += ((x % p + y % p) % p) * w;
            x /= p;
            y /= p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0;
        for &w in &self.0.place[..self.0.m] {
            out += ((p - x % p) % p) * w;
            x /= p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => {
                if a.0 == 0 || b.0 == 0 {
                    Elem::ZERO
                } else {
                    let l = t.log[a.0 as usize] + t.log[b.0 as usize];
                    Elem(t.exp[l as usize])
                }
            }
            None => self.mul_reduce(a, b),
        }
    }

    /// Multiplication by polynomial product and reduction modulo the field
    /// modulus, never touching the tables.
    pub fn mul_reduce(&self, a: Elem, b: Elem) -> Elem {
        let m = self.0.m;
        let p = self.0.p as u64;
        if p == 2 {
            let (mut x, y) = (a.0 as u64, b.0 as u64);
            let mut prod = 0u64;
            let mut shift = 0;
            while x != 0 {
                if x & 1 == 1 {
                    prod ^= y << shift;
                }
                x >>= 1;
                shift += 1;
            }
            for i in (m..2 * m).rev() {
                if prod >> i & 1 == 1 {
                    prod ^= self.0.mask << (i - m);
                }
            }
            return Elem(prod as u32);
        }
        if m == 1 {
            return Elem(((a.0 as u64 * b.0 as u64) % p) as u32);
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // z^m = -(modulus[0] + ... + modulus[m-1] z^(m-1))
        for i in (m..2 * m - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &mj) in self.0.modulus[..m].iter().enumerate() {
                prod[i - m + j] = (prod[i - m + j] + (p - c) * mj as u64) % p;
            }
        }
        let digits: Vec<u32> = prod[..m].iter().map(|&d| d as u32).collect();
        self.from_digits(&digits)
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        match &self.0.tables {
            Some(t) => {
                let n = self.0.order - 1;
                Ok(Elem(t.exp[((n - t.log[a.0 as usize]) % n) as usize]))
            }
            None => Ok(self.pow_reduce(a, self.order() - 2)),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`; negative exponents invert first. `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem, FieldError> {
        if e == 0 {
            return Ok(Elem::ONE);
        }
        if a.0 == 0 {
            return if e > 0 { Ok(Elem::ZERO) } else { Err(FieldError::DivisionByZero) };
        }
        let n = self.order() - 1;
        // the multiplicative group has order n, so reduce the exponent first
        let r = (e as i128).rem_euclid(n as i128) as u64;
        match &self.0.tables {
            Some(t) => {
                let l = (t.log[a.0 as usize] as u64 * r) % n;
                Ok(Elem(t.exp[l as usize]))
            }
            None => Ok(self.pow_reduce(a, r)),
        }
    }

    fn pow_reduce(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_reduce(acc, base);
            }
            base = self.mul_reduce(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> Result<u64, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let mut ord = self.order() - 1;
        for q in prime_factors(ord) {
            while ord.is_multiple_of(q) && self.pow(a, (ord / q) as i64)? == Elem::ONE {
                ord /= q;
            }
        }
        Ok(ord)
    }

    /// Smallest (canonical integer) generator of the multiplicative group.
    pub fn primitive_element(&self) -> Elem {
        *self.0.primitive.get_or_init(|| {
            let n = self.order() - 1;
            let factors = prime_factors(n);
            (1..self.0.order)
                .map(Elem)
                .find(|&a| factors.iter().all(|q| self.pow_reduce(a, n / q) != Elem::ONE))
                .expect("the multiplicative group of a finite field is cyclic")
        })
    }

    /// Smallest (canonical integer) element of multiplicative order exactly `n`.
    pub fn primitive_root(&self, n: u64) -> Result<Elem, FieldError> {
        let group = self.order() - 1;
        if n == 0 || !group.is_multiple_of(n) {
            return Err(FieldError::NoSuchRoot(n));
        }
        let h = self.pow(self.primitive_element(), (group / n) as i64)?;
        let mut best: Option<Elem> = None;
        let mut x = Elem::ONE;
        for j in 1..=n {
            x = self.mul(x, h);
            if gcd(j, n) == 1 && best.is_none_or(|b| x < b) {
                best = Some(x);
            }
        }
        Ok(best.expect("phi(n) >= 1"))
    }

    /// Degree `d` over `GF(p)` of the subfield with `q = p^d` elements.
    pub fn subfield_degree(&self, q: u64) -> Result<usize, FieldError> {
        let p = self.characteristic();
        let mut acc = 1u64;
        for d in 1..=self.0.m {
            acc *= p;
            if acc == q {
                return if self.0.m.is_multiple_of(d) { Ok(d) } else { Err(FieldError::InvalidSubfield(q)) };
            }
            if acc > q {
                break;
            }
        }
        Err(FieldError::InvalidSubfield(q))
    }

    /// Whether `a` lies in the subfield of order `q`, i.e. `a^q = a`.
    pub fn in_subfield(&self, a: Elem, q: u64) -> Result<bool, FieldError> {
        self.subfield_degree(q)?;
        Ok(self.frobenius(a, q) == a)
    }

    // a^q for q >= 1 (works for a = 0 too)
    fn frobenius(&self, a: Elem, q: u64) -> Elem {
        if a.0 == 0 {
            Elem::ZERO
        } else {
            self.pow(a, q as i64).expect("nonzero base")
        }
    }

    /// The elements of the subfield of order `q`, sorted.
    pub fn subfield_elements(&self, q: u64) -> Result<Vec<Elem>, FieldError> {
        self.subfield_degree(q)?;
        if q == self.order() {
            return Ok(self.elements().collect());
        }
        let gamma = self.primitive_root(q - 1)?;
        let mut out = Vec::with_capacity(q as usize);
        out.push(Elem::ZERO);
        let mut x = Elem::ONE;
        for _ in 0..q - 1 {
            out.push(x);
            x = self.mul(x, gamma);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Relative trace `Tr(a) = a + a^q + ... + a^(q^(e-1))` onto the
    /// subfield of order `q`, where `e = m / d`.
    pub fn trace(&self, a: Elem, q: u64) -> Result<Elem, FieldError> {
        let d = self.subfield_degree(q)?;
        let mut acc = Elem::ZERO;
        let mut x = a;
        for _ in 0..self.0.m / d {
            acc = self.add(acc, x);
            x = self.frobenius(x, q);
        }
        Ok(acc)
    }

    /// Field description in the `p=<int> m=<int> modulus=<c0,...,cm>` form.
    pub fn describe(&self) -> String {
        self.to_string()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let modulus: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
        write!(f, "p={} m={} modulus={}", self.0.p, self.0.m, modulus.join(","))
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) [{}]", self.0.p, self.0.m, self)
    }
}

impl FromStr for Field {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (mut p, mut m, mut modulus) = (None, None, None);
        for token in s.split_whitespace() {
            let (key, value) =
                token.split_once('=').ok_or_else(|| FieldError::Parse(format!("expected key=value, got {token:?}")))?;
            let bad = |_| FieldError::Parse(format!("bad value for {key}: {value:?}"));
            match key {
                "p" => p = Some(value.parse::<u64>().map_err(bad)?),
                "m" => m = Some(value.parse::<usize>().map_err(bad)?),
                "modulus" => {
                    modulus = Some(
                        parse_int_list(value).map_err(|_| FieldError::Parse(format!("bad modulus list {value:?}")))?,
                    )
                }
                _ => return Err(FieldError::Parse(format!("unknown key {key:?}"))),
            }
        }
        let missing = |k: &str| FieldError::Parse(format!("missing {k}"));
        Field::new(
            p.ok_or_else(|| missing("p"))?,
            m.ok_or_else(|| missing("m"))?,
            &modulus.ok_or_else(|| missing("modulus"))?,
        )
    }
}

pub(crate) fn parse_int_list(s: &str) -> Result<Vec<u64>, std::num::ParseIntError> {
    s.split(',').map(|t| t.trim().parse::<u64>()).collect()
}

/// An element bundled with its field, for callers who want mismatches
/// between fields reported as errors.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Elem,
}

impl FieldElement {
    pub fn new(field: &Field, value: u64) -> Result<Self, FieldError> {
        Ok(Self { value: field.elem(value)?, field: field.clone() })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn to_int(&self) -> u64 {
        self.value.0 as u64
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    fn with(&self, value: Elem) -> Self {
        Self { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.with(self.field.div(self.value, other.value)?))
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, FieldError> {
        Ok(self.with(self.field.pow(self.value, e)?))
    }

    pub fn in_subfield(&self, q: u64) -> Result<bool, FieldError> {
        self.field.in_subfield(self.value, q)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in GF({}^{})", self.value.0, self.field.0.p, self.field.0.m)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// Remainder of `a` modulo the monic polynomial `b` over GF(p); ascending coefficients.
fn rem_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let c = *r.last().unwrap() % p;
        let shift = r.len() - 1 - db;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[shift + j] = (r[shift + j] + (p - c) * bj) % p;
            }
        }
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=m/2`.
fn irreducible_over_prime_field(modulus: &[u64], p: u64) -> bool {
    let m = modulus.len() - 1;
    for d in 1..=m / 2 {
        let count = p.pow(d as u32);
        let mut divisor = vec![0u64; d + 1];
        divisor[d] = 1;
        for t in 0..count {
            let mut v = t;
            for c in divisor.iter_mut().take(d) {
                *c = v % p;
                v /= p;
            }
            if rem_mod_p(modulus, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> Field {
        Field::new(2, 3, &[1, 1, 0, 1]).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(4, 1, &[0, 1]).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(Field::new(2, 2, &[1, 0, 1]).unwrap_err(), FieldError::Reducible);
        assert_eq!(Field::new(2, 2, &[1, 1, 0]).unwrap_err(), FieldError::NotMonic(2));
        assert_eq!(Field::new(2, 2, &[1, 1]).unwrap_err(), FieldError::NotMonic(2));
        assert_eq!(Field::new(3, 2, &[5, 0, 1]).unwrap_err(), FieldError::BadDigit(5));
        assert_eq!(Field::new(2, 25, &[0; 26]).unwrap_err(), FieldError::TooLarge);
        let gf7 = Field::new(7, 1, &[0, 1]).unwrap();
        assert_eq!(gf7.order(), 7);
        assert_eq!(gf8().order(), 8);
    }

    #[test]
    fn gf8_modulus_has_no_root() {
        // x^3 + x + 1 at 0 and 1
        for x in 0..2u64 {
            assert_eq!((x * x * x + x + 1) % 2, 1);
        }
    }

    #[test]
    fn small_arithmetic() {
        let f = Field::prime(7).unwrap();
        let e = |v| f.elem(v).unwrap();
        assert_eq!(f.add(e(3), e(5)), e(1));
        assert_eq!(f.mul(e(3), e(5)), e(1));
        assert_eq!(f.inv(e(3)).unwrap(), e(5));
        assert_eq!(f.pow(e(3), 0).unwrap(), e(1));
        assert_eq!(f.pow(e(3), -1).unwrap(), e(5));
        assert_eq!(f.inv(e(0)), Err(FieldError::DivisionByZero));
        assert_eq!(f.pow(e(0), -2), Err(FieldError::DivisionByZero));

        let g = gf8();
        let z = g.elem(2).unwrap();
        assert_eq!(g.add(z, z), Elem::ZERO);
        // (z+1) + z^2 = z^2+z+1
        assert_eq!(g.add(g.elem(3).unwrap(), g.elem(4).unwrap()), g.elem(7).unwrap());
        // z * z^2 = z + 1
        assert_eq!(g.mul(z, g.elem(4).unwrap()), g.elem(3).unwrap());
        // inv(z) = z^2 + 1
        assert_eq!(g.inv(z).unwrap(), g.elem(5).unwrap());
        assert_eq!(g.inv(Elem::ONE).unwrap(), Elem::ONE);
        assert_eq!(g.pow(g.primitive_element(), 7).unwrap(), Elem::ONE);
    }

    #[test]
    fn field_element_mismatch() {
        let a = FieldElement::new(&Field::prime(7).unwrap(), 3).unwrap();
        let b = FieldElement::new(&gf8(), 3).unwrap();
        assert_eq!(a.add(&b).unwrap_err(), FieldError::FieldMismatch);
        assert_eq!(a.mul(&a).unwrap().to_int(), 2);
        assert!(FieldElement::new(&gf8(), 8).is_err());
    }

    #[test]
    fn subfields() {
        let g = gf8();
        assert!(g.in_subfield(Elem(0), 2).unwrap());
        assert!(g.in_subfield(Elem(1), 2).unwrap());
        assert!(!g.in_subfield(Elem(2), 2).unwrap());
        assert_eq!(g.in_subfield(Elem(2), 4), Err(FieldError::InvalidSubfield(4)));
        assert!(g.elements().all(|a| g.in_subfield(a, 8).unwrap()));

        let g16 = Field::new(2, 4, &[1, 1, 0, 0, 1]).unwrap();
        let z = g16.elem(2).unwrap();
        assert_eq!(g16.element_order(z).unwrap(), 15);
        assert!(g16.in_subfield(g16.pow(z, 5).unwrap(), 4).unwrap());
        assert!(!g16.in_subfield(z, 4).unwrap());
        assert_eq!(g16.subfield_elements(4).unwrap().len(), 4);
    }

    #[test]
    fn roots_of_unity() {
        let g = gf8();
        assert_eq!(g.primitive_root(7).unwrap(), g.elem(2).unwrap());
        let f = Field::prime(7).unwrap();
        assert_eq!(f.primitive_root(2).unwrap(), f.elem(6).unwrap());
        assert_eq!(f.primitive_root(5), Err(FieldError::NoSuchRoot(5)));
        assert_eq!(f.primitive_root(1).unwrap(), Elem::ONE);
        // primitive element of GF(7) is 3
        assert_eq!(f.primitive_element(), f.elem(3).unwrap());
    }

    #[test]
    fn description_round_trip() {
        let g = gf8();
        assert_eq!(g.to_string(), "p=2 m=3 modulus=1,1,0,1");
        let back: Field = g.to_string().parse().unwrap();
        assert_eq!(back, g);
        assert!("p=2 m=3".parse::<Field>().is_err());
        assert!("p=2 m=3 modulus=1,1,0,1 q=3".parse::<Field>().is_err());
    }

    #[test]
    fn trace_lands_in_subfield() {
        let g16 = Field::new(2, 4, &[1, 1, 0, 0, 1]).unwrap();
        for a in g16.elements() {
            let t = g16.trace(a, 4).unwrap();
            assert!(g16.in_subfield(t, 4).unwrap());
            assert!(g16.in_subfield(g16.trace(a, 2).unwrap(), 2).unwrap());
        }
    }
}
