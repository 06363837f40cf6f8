//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored lowest degree first with trailing zeros stripped,
//! so the zero polynomial is the empty vector and has degree [`Degree::NegInf`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::field::{Elem, Field, FieldError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero polynomial has no leading coefficient")]
    ZeroPolynomial,
    #[error("evaluation points are not pairwise distinct")]
    DuplicatePoints,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("polynomial of degree {degree} does not fit in {limit} coefficients")]
    DegreeTooLarge { degree: Degree, limit: usize },
    #[error("polynomials over different fields")]
    FieldMismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Polynomial degree with `deg(0) = -inf`.
///
/// `NegInf` orders below every finite degree and absorbs addition.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInf,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInf,
        }
    }
}

impl Add<i64> for Degree {
    type Output = Degree;

    fn add(self, rhs: i64) -> Degree {
        self + Degree::Finite(rhs)
    }
}

impl PartialEq<i64> for Degree {
    fn eq(&self, other: &i64) -> bool {
        *self == Degree::Finite(*other)
    }
}

impl PartialOrd<i64> for Degree {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Degree::Finite(*other)))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn zero(field: &Field) -> Self {
        Self { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field, Elem::ONE)
    }

    pub fn constant(field: &Field, c: Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// `c * x^d`
    pub fn monomial(field: &Field, c: Elem, d: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; d + 1];
        coeffs[d] = c;
        Self::new(field, coeffs)
    }

    /// From ascending coefficients; trailing zeros are dropped.
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { field: field.clone(), coeffs }
    }

    /// From canonical integers, checking each against the field order.
    pub fn from_ints(field: &Field, coeffs: &[u64]) -> Result<Self, FieldError> {
        let coeffs = coeffs.iter().map(|&c| field.elem(c)).collect::<Result<_, _>>()?;
        Ok(Self::new(field, coeffs))
    }

    /// Monic `(x - r_1)...(x - r_n)`.
    pub fn from_roots(field: &Field, roots: &[Elem]) -> Self {
        let mut coeffs = vec![Elem::ONE];
        for &r in roots {
            let neg_r = field.neg(r);
            let mut next = vec![Elem::ZERO; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] = field.add(next[i + 1], c);
                next[i] = field.add(next[i], field.mul(c, neg_r));
            }
            coeffs = next;
        }
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n as i64 - 1),
        }
    }

    pub fn leading_coeff(&self) -> Result<Elem, PolyError> {
        self.coeffs.last().copied().ok_or(PolyError::ZeroPolynomial)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&Elem::ONE)
    }

    /// Scaled so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => self.scale(self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, a: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, a), c))
    }

    pub fn scale(&self, c: Elem) -> Self {
        if c.is_zero() {
            return Self::zero(&self.field);
        }
        let f = &self.field;
        Self { field: f.clone(), coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect() }
    }

    /// Multiplication by `x^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Elem::ZERO; d];
        coeffs.extend_from_slice(&self.coeffs);
        Self { field: self.field.clone(), coeffs }
    }

    /// `self - c * x^d * other`, the elementary reduction step used by the decoder.
    pub fn sub_scaled_shift(&self, c: Elem, d: usize, other: &Poly) -> Self {
        self.assert_same_field(other);
        let f = &self.field;
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < other.coeffs.len() + d {
            coeffs.resize(other.coeffs.len() + d, Elem::ZERO);
        }
        for (i, &b) in other.coeffs.iter().enumerate() {
            coeffs[i + d] = f.sub(coeffs[i + d], f.mul(c, b));
        }
        Self::new(f, coeffs)
    }

    /// Euclidean division: `(q, r)` with `self = q * divisor + r` and
    /// `deg(r) < deg(divisor)`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.check_same_field(divisor)?;
        let f = &self.field;
        let lc = divisor.leading_coeff().map_err(|_| PolyError::DivisionByZero)?;
        let lc_inv = f.inv(lc)?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + dd], lc_inv);
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    /// Division by the linear factor `x - a`, returning quotient and remainder `self(a)`.
    pub fn div_linear(&self, a: Elem) -> (Poly, Elem) {
        let f = &self.field;
        if self.is_zero() {
            return (self.clone(), Elem::ZERO);
        }
        let n = self.coeffs.len();
        let mut quot = vec![Elem::ZERO; n - 1];
        let mut carry = Elem::ZERO;
        for i in (0..n).rev() {
            let v = f.add(self.coeffs[i], f.mul(carry, a));
            if i == 0 {
                return (Poly::new(f, quot), v);
            }
            quot[i - 1] = v;
            carry = v;
        }
        unreachable!()
    }

    fn check_same_field(&self, other: &Poly) -> Result<(), PolyError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(PolyError::FieldMismatch)
        }
    }

    fn assert_same_field(&self, other: &Poly) {
        assert!(self.field == other.field, "polynomials over different fields");
    }

    fn zip_with(&self, other: &Poly, op: impl Fn(Elem, Elem) -> Elem) -> Poly {
        self.assert_same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| op(self.coeff(i), other.coeff(i))).collect();
        Poly::new(&self.field, coeffs)
    }

    /// Space-separated canonical integers, lowest degree first; empty for zero.
    pub fn to_text(&self) -> String {
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    }

    pub fn from_text(field: &Field, s: &str) -> Result<Self, PolyError> {
        let ints = s
            .split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|_| FieldError::Parse(format!("bad coefficient {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_ints(field, &ints)?)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self.to_text())
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let f = self.field.clone();
        self.zip_with(rhs, |a, b| f.add(a, b))
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let f = self.field.clone();
        self.zip_with(rhs, |a, b| f.sub(a, b))
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        let f = &self.field;
        Poly { field: f.clone(), coeffs: self.coeffs.iter().map(|&a| f.neg(a)).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.assert_same_field(rhs);
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut coeffs = vec![Elem::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, coeffs)
    }
}

fn check_distinct(points: &[Elem]) -> Result<(), PolyError> {
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        Err(PolyError::DuplicatePoints)
    } else {
        Ok(())
    }
}

/// `eta = (x - alpha_1)...(x - alpha_n)`.
pub fn vanishing_poly(field: &Field, alpha: &[Elem]) -> Result<Poly, PolyError> {
    check_distinct(alpha)?;
    Ok(Poly::from_roots(field, alpha))
}

/// One Lagrange basis polynomial together with its unnormalized form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangeTerm {
    /// `prod_{j != i} (x - alpha_j)`
    pub unnormalized: Poly,
    /// The unnormalized product evaluated at its own point `alpha_i`.
    pub weight: Elem,
    /// `unnormalized / weight`, equal to 1 at `alpha_i` and 0 at the other points.
    pub basis: Poly,
}

/// Lagrange basis of `E[x]_n` for the points `alpha`.
pub fn lagrange_basis(field: &Field, alpha: &[Elem]) -> Result<Vec<LagrangeTerm>, PolyError> {
    let eta = vanishing_poly(field, alpha)?;
    alpha
        .iter()
        .map(|&a| {
            let (unnormalized, rem) = eta.div_linear(a);
            debug_assert!(rem.is_zero());
            let weight = unnormalized.eval(a);
            let basis = unnormalized.scale(field.inv(weight)?);
            Ok(LagrangeTerm { unnormalized, weight, basis })
        })
        .collect()
}

/// The unique polynomial of degree `< n` taking the value `values[i]` at `alpha[i]`,
/// computed as the sum `values[i] * h_i`.
pub fn interpolate(field: &Field, values: &[Elem], alpha: &[Elem]) -> Result<Poly, PolyError> {
    if values.len() != alpha.len() {
        return Err(PolyError::LengthMismatch { expected: alpha.len(), got: values.len() });
    }
    let basis = lagrange_basis(field, alpha)?;
    Ok(combine(field, values, basis.iter().map(|t| &t.basis)))
}

/// `sum values[i] * polys[i]`.
pub(crate) fn combine<'a>(field: &Field, values: &[Elem], polys: impl Iterator<Item = &'a Poly>) -> Poly {
    let mut acc: Vec<Elem> = Vec::new();
    for (&v, p) in values.iter().zip(polys) {
        if v.is_zero() {
            continue;
        }
        if acc.len() < p.coeffs.len() {
            acc.resize(p.coeffs.len(), Elem::ZERO);
        }
        for (a, &c) in acc.iter_mut().zip(&p.coeffs) {
            *a = field.add(*a, field.mul(v, c));
        }
    }
    Poly::new(field, acc)
}

/// The evaluation map `f -> (f(alpha_1), ..., f(alpha_n))` on `E[x]_n`.
pub fn evaluate(f: &Poly, alpha: &[Elem]) -> Result<Vec<Elem>, PolyError> {
    check_distinct(alpha)?;
    if f.degree() >= alpha.len() as i64 {
        return Err(PolyError::DegreeTooLarge { degree: f.degree(), limit: alpha.len() });
    }
    Ok(alpha.iter().map(|&a| f.eval(a)).collect())
}
