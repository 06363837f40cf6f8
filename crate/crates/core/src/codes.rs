//! Reed-Solomon, generalized Reed-Solomon, alternant and BCH codes.
//!
//! A [`GrsCode`] is `GRS(alpha, u, k) = { (u_1 f(alpha_1), ..., u_n f(alpha_n)) : deg f < k }`;
//! Reed-Solomon is the case `u = 1`. An [`AltCode`] is the subfield subcode
//! `GRS(alpha, u, k) ∩ F^n` for a subfield `F` of the code's field, realized
//! by an explicit `F`-basis in reduced row-echelon form. A [`BchCode`] is the
//! alternant code whose evaluation points are the powers of a primitive `n`-th
//! root of unity.

use thiserror::Error;

use crate::field::{gcd, Elem, Field, FieldError};
use crate::linalg::{self, Matrix};
use crate::poly::{self, Degree, Poly, PolyError};

pub type Word = Vec<Elem>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("evaluation points are not pairwise distinct")]
    DuplicatePoints,
    #[error("multiplier at position {0} is zero")]
    ZeroMultiplier(usize),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("dimension {k} is invalid for length {n}")]
    InvalidDimension { k: usize, n: usize },
    #[error("message polynomial of degree {degree} does not fit dimension {k}")]
    DegreeTooLarge { degree: Degree, k: usize },
    #[error("symbol at position {0} is not in the subfield")]
    NotInSubfield(usize),
    #[error("length {0} is not valid for a BCH code over this field")]
    BadLength(usize),
    #[error("designed distance {delta} is invalid for length {n}")]
    BadDelta { delta: usize, n: usize },
    #[error("subfield basis disagrees with the BCH root conditions")]
    Inconsistent,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(PolyError),
}

impl From<PolyError> for CodeError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::DuplicatePoints => CodeError::DuplicatePoints,
            PolyError::LengthMismatch { expected, got } => CodeError::LengthMismatch { expected, got },
            PolyError::Field(f) => CodeError::Field(f),
            other => CodeError::Poly(other),
        }
    }
}

/// Componentwise scaling `(v_i) -> (u_i v_i)`.
pub fn distort(field: &Field, u: &[Elem], v: &[Elem]) -> Result<Word, CodeError> {
    check_multipliers(u)?;
    if u.len() != v.len() {
        return Err(CodeError::LengthMismatch { expected: u.len(), got: v.len() });
    }
    Ok(u.iter().zip(v).map(|(&a, &b)| field.mul(a, b)).collect())
}

/// Inverse of [`distort`].
pub fn undistort(field: &Field, u: &[Elem], v: &[Elem]) -> Result<Word, CodeError> {
    check_multipliers(u)?;
    let inv: Vec<Elem> = u.iter().map(|&a| field.inv(a)).collect::<Result<_, _>>()?;
    distort(field, &inv, v)
}

fn check_multipliers(u: &[Elem]) -> Result<(), CodeError> {
    match u.iter().position(|a| a.is_zero()) {
        Some(i) => Err(CodeError::ZeroMultiplier(i)),
        None => Ok(()),
    }
}

/// Hamming weight.
pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Hamming distance between equal-length words.
pub fn distance(a: &[Elem], b: &[Elem]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// `GRS(alpha, u, k)` with its cached Lagrange data.
#[derive(Clone, Debug)]
pub struct GrsCode {
    field: Field,
    alpha: Vec<Elem>,
    u: Vec<Elem>,
    k: usize,
    eta: Poly,
    // prod_{j != i} (alpha_i - alpha_j)
    weights: Vec<Elem>,
    // u_i^{-1} h_i
    scaled_basis: Vec<Poly>,
}

impl GrsCode {
    pub fn new(field: &Field, alpha: Vec<Elem>, u: Vec<Elem>, k: usize) -> Result<Self, CodeError> {
        let n = alpha.len();
        if u.len() != n {
            return Err(CodeError::LengthMismatch { expected: n, got: u.len() });
        }
        check_multipliers(&u)?;
        if k == 0 || k > n {
            return Err(CodeError::InvalidDimension { k, n });
        }
        for &a in alpha.iter().chain(&u) {
            field.elem(a.value() as u64)?;
        }
        let eta = poly::vanishing_poly(field, &alpha)?;
        let terms = poly::lagrange_basis(field, &alpha)?;
        let mut weights = Vec::with_capacity(n);
        let mut scaled_basis = Vec::with_capacity(n);
        for (term, &ui) in terms.into_iter().zip(&u) {
            weights.push(term.weight);
            scaled_basis.push(term.basis.scale(field.inv(ui)?));
        }
        Ok(Self { field: field.clone(), alpha, u, k, eta, weights, scaled_basis })
    }

    /// `RS(alpha, k)`, i.e. all multipliers equal to one.
    pub fn reed_solomon(field: &Field, alpha: Vec<Elem>, k: usize) -> Result<Self, CodeError> {
        let u = vec![Elem::ONE; alpha.len()];
        Self::new(field, alpha, u, k)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn alpha(&self) -> &[Elem] {
        &self.alpha
    }

    pub fn multipliers(&self) -> &[Elem] {
        &self.u
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_reed_solomon(&self) -> bool {
        self.u.iter().all(|&x| x == Elem::ONE)
    }

    /// `eta = prod (x - alpha_i)`
    pub fn eta(&self) -> &Poly {
        &self.eta
    }

    /// `h~_i(alpha_i) = prod_{j != i} (alpha_i - alpha_j)` for each position.
    pub fn lagrange_weights(&self) -> &[Elem] {
        &self.weights
    }

    /// `u_i^{-1} h_i` for each position.
    pub fn scaled_basis(&self) -> &[Poly] {
        &self.scaled_basis
    }

    /// `n - k + 1`
    pub fn designed_distance(&self) -> usize {
        self.n() - self.k + 1
    }

    /// Unique-decoding radius `floor((n - k) / 2)`.
    pub fn radius(&self) -> usize {
        (self.n() - self.k) / 2
    }

    pub fn encode(&self, message: &Poly) -> Result<Word, CodeError> {
        if message.field() != &self.field {
            return Err(CodeError::Poly(PolyError::FieldMismatch));
        }
        if message.degree() >= self.k as i64 {
            return Err(CodeError::DegreeTooLarge { degree: message.degree(), k: self.k });
        }
        Ok(self.alpha.iter().zip(&self.u).map(|(&a, &u)| self.field.mul(u, message.eval(a))).collect())
    }

    /// Canonical generator matrix: row `a` is `(u_i alpha_i^a)_i` for `0 <= a < k`.
    pub fn generator_matrix(&self) -> Matrix {
        let f = &self.field;
        let mut row = self.u.clone();
        let mut rows = Vec::with_capacity(self.k);
        for _ in 0..self.k {
            let next = row.iter().zip(&self.alpha).map(|(&r, &a)| f.mul(r, a)).collect();
            rows.push(std::mem::replace(&mut row, next));
        }
        rows
    }

    /// The dual code `GRS(alpha, v, n - k)` with `v_i = (u_i h~_i(alpha_i))^{-1}`.
    pub fn dual(&self) -> Result<GrsCode, CodeError> {
        if self.k == self.n() {
            return Err(CodeError::InvalidDimension { k: 0, n: self.n() });
        }
        let f = &self.field;
        let v = self.u.iter().zip(&self.weights).map(|(&u, &w)| f.inv(f.mul(u, w))).collect::<Result<Vec<_>, _>>()?;
        GrsCode::new(f, self.alpha.clone(), v, self.n() - self.k)
    }

    /// Parity-check matrix (generator of the dual); empty when `k = n`.
    pub fn parity_check_matrix(&self) -> Matrix {
        match self.dual() {
            Ok(d) => d.generator_matrix(),
            Err(_) => Vec::new(),
        }
    }

    /// The polynomial `h_{w'}` interpolating `u_i^{-1} w_i` at `alpha_i`.
    pub fn interpolant(&self, word: &[Elem]) -> Result<Poly, CodeError> {
        if word.len() != self.n() {
            return Err(CodeError::LengthMismatch { expected: self.n(), got: word.len() });
        }
        Ok(poly::combine(&self.field, word, self.scaled_basis.iter()))
    }

    /// Message polynomial of `word` when it is a codeword.
    pub fn message_of(&self, word: &[Elem]) -> Option<Poly> {
        let f = self.interpolant(word).ok()?;
        (f.degree() < self.k as i64).then_some(f)
    }

    pub fn contains(&self, word: &[Elem]) -> bool {
        self.message_of(word).is_some()
    }
}

/// Subfield subcode `GRS(alpha, u, k) ∩ F^n` where `|F| = q`.
#[derive(Clone, Debug)]
pub struct AltCode {
    grs: GrsCode,
    q: u64,
    generator: Matrix,
    pivots: Vec<usize>,
    alphabet: Vec<Elem>,
}

impl AltCode {
    pub fn new(grs: GrsCode, q: u64) -> Result<Self, CodeError> {
        let field = grs.field().clone();
        let d = field.subfield_degree(q)?;
        let n = grs.n();
        let h = grs.parity_check_matrix();
        let coords = SubfieldCoordinates::new(&field, q, field.degree() / d)?;
        let expanded: Matrix = h
            .iter()
            .flat_map(|row| {
                let per_symbol: Vec<Vec<Elem>> = row.iter().map(|&x| coords.of(x)).collect();
                (0..coords.len()).map(move |l| per_symbol.iter().map(|c| c[l]).collect::<Vec<_>>())
            })
            .collect();
        let generator = linalg::kernel(&field, &expanded, n);
        let pivots = generator
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("kernel rows are nonzero"))
            .collect();
        let alphabet = field.subfield_elements(q)?;
        Ok(Self { grs, q, generator, pivots, alphabet })
    }

    pub fn grs(&self) -> &GrsCode {
        &self.grs
    }

    pub fn field(&self) -> &Field {
        self.grs.field()
    }

    pub fn subfield_order(&self) -> u64 {
        self.q
    }

    /// Dimension over the subfield (at most `k`).
    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    /// Subfield basis in reduced row-echelon form.
    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Leading column of each generator row.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The subfield's elements, sorted.
    pub fn alphabet(&self) -> &[Elem] {
        &self.alphabet
    }

    pub fn designed_distance(&self) -> usize {
        self.grs.designed_distance()
    }

    pub fn in_subfield(&self, x: Elem) -> bool {
        self.alphabet.binary_search(&x).is_ok()
    }

    /// `sum coords[i] * g_i` over the generator rows.
    pub fn encode(&self, coords: &[Elem]) -> Result<Word, CodeError> {
        if coords.len() != self.dimension() {
            return Err(CodeError::LengthMismatch { expected: self.dimension(), got: coords.len() });
        }
        if let Some(i) = coords.iter().position(|&c| !self.in_subfield(c)) {
            return Err(CodeError::NotInSubfield(i));
        }
        let f = self.field();
        let mut word = vec![Elem::ZERO; self.grs.n()];
        for (&c, row) in coords.iter().zip(&self.generator) {
            if c.is_zero() {
                continue;
            }
            for (w, &g) in word.iter_mut().zip(row) {
                *w = f.add(*w, f.mul(c, g));
            }
        }
        Ok(word)
    }

    pub fn contains(&self, word: &[Elem]) -> bool {
        word.len() == self.grs.n() && word.iter().all(|&x| self.in_subfield(x)) && self.grs.contains(word)
    }

    /// Basis coordinates of a codeword: its entries at the pivot columns.
    pub fn message_of(&self, word: &[Elem]) -> Option<Vec<Elem>> {
        self.contains(word).then(|| self.pivots.iter().map(|&p| word[p]).collect())
    }
}

/// Coordinates over the `F`-basis `{1, z, ..., z^(e-1)}` of `E`, computed
/// through the trace dual basis.
struct SubfieldCoordinates {
    field: Field,
    q: u64,
    basis: Vec<Elem>,
    gram_inv: Matrix,
}

impl SubfieldCoordinates {
    fn new(field: &Field, q: u64, e: usize) -> Result<Self, CodeError> {
        // z has canonical encoding p whenever m > 1; for e = 1 only the unit is needed
        let z = if e > 1 { field.from_digits(&[0, 1]) } else { Elem::ONE };
        let mut basis = Vec::with_capacity(e);
        let mut x = Elem::ONE;
        for _ in 0..e {
            basis.push(x);
            x = field.mul(x, z);
        }
        let gram = basis
            .iter()
            .map(|&a| basis.iter().map(|&b| field.trace(field.mul(a, b), q)).collect())
            .collect::<Result<Matrix, _>>()?;
        let gram_inv = linalg::invert(field, &gram).expect("trace form is nondegenerate");
        Ok(Self { field: field.clone(), q, basis, gram_inv })
    }

    fn len(&self) -> usize {
        self.basis.len()
    }

    fn of(&self, x: Elem) -> Vec<Elem> {
        let f = &self.field;
        let traces: Vec<Elem> =
            self.basis.iter().map(|&b| f.trace(f.mul(x, b), self.q).expect("valid subfield")).collect();
        linalg::mat_vec(f, &self.gram_inv, &traces)
    }
}

/// `BCH(n, delta, b)`: words `c` over `F` with `c(beta^i) = 0` for
/// `b <= i < b + delta - 1`, where `c(x) = c_0 + c_1 x + ... + c_{n-1} x^{n-1}`.
#[derive(Clone, Debug)]
pub struct BchCode {
    n: usize,
    delta: usize,
    b: i64,
    beta: Elem,
    alt: AltCode,
}

impl BchCode {
    /// Builds the code over the subfield of order `q` of `extension`, with
    /// `beta` the smallest primitive `n`-th root of unity.
    pub fn new(extension: &Field, q: u64, n: usize, delta: usize, b: i64) -> Result<Self, CodeError> {
        let f = extension;
        f.subfield_degree(q)?;
        if n == 0 || gcd(n as u64, f.characteristic()) != 1 || !(f.order() - 1).is_multiple_of(n as u64) {
            return Err(CodeError::BadLength(n));
        }
        if delta <= 1 || delta > n {
            return Err(CodeError::BadDelta { delta, n });
        }
        let beta = f.primitive_root(n as u64)?;
        let alpha: Vec<Elem> = (0..n).map(|i| f.pow(beta, i as i64)).collect::<Result<_, _>>()?;
        let u: Vec<Elem> = alpha.iter().map(|&a| f.pow(a, b)).collect::<Result<_, _>>()?;
        // the root conditions are the parity checks of GRS(alpha, u, delta - 1)
        let checks = GrsCode::new(f, alpha, u, delta - 1)?;
        let alt = AltCode::new(checks.dual()?, q)?;
        let code = Self { n, delta, b, beta, alt };
        if !code.alt.generator().iter().all(|g| code.satisfies_roots(g)) {
            return Err(CodeError::Inconsistent);
        }
        Ok(code)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn offset(&self) -> i64 {
        self.b
    }

    pub fn beta(&self) -> Elem {
        self.beta
    }

    pub fn alt(&self) -> &AltCode {
        &self.alt
    }

    pub fn designed_distance(&self) -> usize {
        self.delta
    }

    /// `v_i = n^{-1} beta^{-i(b-1)}`, the multipliers of the GRS code whose
    /// subfield subcode this is.
    pub fn closed_form_multipliers(&self) -> Vec<Elem> {
        let f = self.alt.field();
        let n_inv = f.inv(f.from_int(self.n as i64)).expect("gcd(n, p) = 1");
        (0..self.n as i64)
            .map(|i| f.mul(n_inv, f.pow(self.beta, -i * (self.b - 1)).expect("beta is nonzero")))
            .collect()
    }

    /// Whether `c(beta^i) = 0` for every `b <= i < b + delta - 1`.
    pub fn satisfies_roots(&self, word: &[Elem]) -> bool {
        let f = self.alt.field();
        let c = Poly::new(f, word.to_vec());
        (self.b..self.b + self.delta as i64 - 1)
            .all(|i| c.eval(f.pow(self.beta, i).expect("beta is nonzero")).is_zero())
    }
}

/// Any of the supported code families.
#[derive(Clone, Debug)]
pub enum Code {
    Grs(GrsCode),
    Alt(AltCode),
    Bch(BchCode),
}

impl Code {
    /// The GRS code the decoder runs on.
    pub fn grs(&self) -> &GrsCode {
        match self {
            Code::Grs(g) => g,
            Code::Alt(a) => a.grs(),
            Code::Bch(b) => b.alt().grs(),
        }
    }

    pub fn alt(&self) -> Option<&AltCode> {
        match self {
            Code::Grs(_) => None,
            Code::Alt(a) => Some(a),
            Code::Bch(b) => Some(b.alt()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Code::Grs(g) if g.is_reed_solomon() => "rs",
            Code::Grs(_) => "grs",
            Code::Alt(_) => "alt",
            Code::Bch(_) => "bch",
        }
    }

    pub fn field(&self) -> &Field {
        self.grs().field()
    }

    pub fn n(&self) -> usize {
        self.grs().n()
    }

    /// Dimension of the underlying GRS code.
    pub fn k(&self) -> usize {
        self.grs().k()
    }

    pub fn designed_distance(&self) -> usize {
        match self {
            Code::Bch(b) => b.designed_distance(),
            _ => self.grs().designed_distance(),
        }
    }

    pub fn radius(&self) -> usize {
        self.grs().radius()
    }

    /// Dimension over the symbol alphabet; also the message length.
    pub fn dimension(&self) -> usize {
        match self.alt() {
            Some(a) => a.dimension(),
            None => self.k(),
        }
    }

    /// Size of the symbol alphabet.
    pub fn symbol_order(&self) -> u64 {
        match self.alt() {
            Some(a) => a.subfield_order(),
            None => self.field().order(),
        }
    }

    pub fn in_alphabet(&self, x: Elem) -> bool {
        match self.alt() {
            Some(a) => a.in_subfield(x),
            None => (x.value() as u64) < self.field().order(),
        }
    }

    /// Encodes `dimension()` message symbols: polynomial coefficients for
    /// GRS, subfield basis coordinates otherwise.
    pub fn encode(&self, message: &[Elem]) -> Result<Word, CodeError> {
        match self.alt() {
            Some(a) => a.encode(message),
            None => {
                if message.len() != self.k() {
                    return Err(CodeError::LengthMismatch { expected: self.k(), got: message.len() });
                }
                self.grs().encode(&Poly::new(self.field(), message.to_vec()))
            }
        }
    }

    /// Inverse of [`Code::encode`] on codewords.
    pub fn message_of(&self, word: &[Elem]) -> Option<Vec<Elem>> {
        match self.alt() {
            Some(a) => a.message_of(word),
            None => {
                let f = self.grs().message_of(word)?;
                Some((0..self.k()).map(|i| f.coeff(i)).collect())
            }
        }
    }

    pub fn contains(&self, word: &[Elem]) -> bool {
        match self.alt() {
            Some(a) => a.contains(word),
            None => self.grs().contains(word),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf7() -> Field {
        Field::prime(7).unwrap()
    }

    fn els(f: &Field, v: &[u64]) -> Vec<Elem> {
        v.iter().map(|&x| f.elem(x).unwrap()).collect()
    }

    fn ints(v: &[Elem]) -> Vec<u32> {
        v.iter().map(|x| x.value()).collect()
    }

    #[test]
    fn encode_examples() {
        let f = gf7();
        let rs = GrsCode::reed_solomon(&f, els(&f, &[1, 2, 3, 4, 5, 6]), 2).unwrap();
        let c = rs.encode(&Poly::from_ints(&f, &[1, 1]).unwrap()).unwrap();
        assert_eq!(ints(&c), vec![2, 3, 4, 5, 6, 0]);
        assert_eq!(weight(&rs.encode(&Poly::zero(&f)).unwrap()), 0);
        let grs = GrsCode::new(&f, els(&f, &[1, 2, 3, 4, 5, 6]), els(&f, &[2; 6]), 2).unwrap();
        assert_eq!(ints(&grs.encode(&Poly::one(&f)).unwrap()), vec![2; 6]);
        assert!(matches!(rs.encode(&Poly::from_ints(&f, &[0, 0, 1]).unwrap()), Err(CodeError::DegreeTooLarge { .. })));
    }

    #[test]
    fn construction_errors() {
        let f = gf7();
        assert_eq!(GrsCode::reed_solomon(&f, els(&f, &[1, 1]), 1).unwrap_err(), CodeError::DuplicatePoints);
        assert_eq!(GrsCode::new(&f, els(&f, &[1, 2]), els(&f, &[1, 0]), 1).unwrap_err(), CodeError::ZeroMultiplier(1));
        assert!(matches!(GrsCode::reed_solomon(&f, els(&f, &[1, 2]), 3), Err(CodeError::InvalidDimension { .. })));
        assert!(matches!(GrsCode::reed_solomon(&f, els(&f, &[1, 2]), 0), Err(CodeError::InvalidDimension { .. })));
    }

    #[test]
    fn distortion() {
        let f = gf7();
        let u = els(&f, &[1, 2, 3]);
        let v = els(&f, &[0, 5, 6]);
        let d = distort(&f, &u, &v).unwrap();
        assert_eq!(weight(&d), weight(&v));
        assert_eq!(undistort(&f, &u, &d).unwrap(), v);
        assert_eq!(distort(&f, &[Elem::ONE; 3], &v).unwrap(), v);
        assert_eq!(distort(&f, &els(&f, &[1, 0, 1]), &v), Err(CodeError::ZeroMultiplier(1)));
        assert!(matches!(distort(&f, &u, &v[..2]), Err(CodeError::LengthMismatch { .. })));
    }

    #[test]
    fn generator_matrix_examples() {
        let f = gf7();
        let c = GrsCode::reed_solomon(&f, els(&f, &[1, 2, 3]), 1).unwrap();
        assert_eq!(c.generator_matrix(), vec![vec![Elem::ONE; 3]]);
        let c = GrsCode::reed_solomon(&f, els(&f, &[1, 2, 3]), 2).unwrap();
        assert_eq!(c.generator_matrix(), vec![els(&f, &[1, 1, 1]), els(&f, &[1, 2, 3])]);
        let c = GrsCode::reed_solomon(&f, els(&f, &[1, 2, 3, 4, 5, 6]), 3).unwrap();
        assert_eq!(linalg::rank(&f, &c.generator_matrix(), 6), 3);
    }

    #[test]
    fn dual_examples() {
        let f = gf7();
        for k in 1..3 {
            let c = GrsCode::reed_solomon(&f, els(&f, &[1, 2, 3]), k).unwrap();
            assert_eq!(ints(c.dual().unwrap().multipliers()), vec![4, 6, 4]);
        }
        let c = GrsCode::reed_solomon(&f, els(&f, &[1, 2, 3]), 1).unwrap();
        let d = c.dual().unwrap();
        assert_eq!(d.generator_matrix(), vec![els(&f, &[4, 6, 4]), els(&f, &[4, 5, 5])]);
        for row in d.generator_matrix() {
            assert!(linalg::dot(&f, &row, &c.generator_matrix()[0]).is_zero());
        }
        let grs = GrsCode::new(&f, els(&f, &[0, 2, 3, 5]), els(&f, &[3, 1, 6, 2]), 2).unwrap();
        assert_eq!(grs.dual().unwrap().dual().unwrap().multipliers(), grs.multipliers());
        let full = GrsCode::reed_solomon(&f, els(&f, &[1, 2, 3]), 3).unwrap();
        assert!(matches!(full.dual(), Err(CodeError::InvalidDimension { .. })));
        assert_eq!(full.designed_distance(), 1);
    }

    #[test]
    fn alt_over_whole_field_is_grs() {
        let f = gf7();
        let grs = GrsCode::new(&f, els(&f, &[1, 2, 3, 4, 5]), els(&f, &[1, 3, 2, 6, 4]), 3).unwrap();
        let alt = AltCode::new(grs.clone(), 7).unwrap();
        assert_eq!(alt.dimension(), 3);
        for g in alt.generator() {
            assert!(grs.contains(g));
        }
        assert!(matches!(AltCode::new(grs, 49), Err(CodeError::Field(FieldError::InvalidSubfield(49)))));
    }

    #[test]
    fn alt_over_intermediate_subfield() {
        // GF(16) over GF(4)
        let f = Field::new(2, 4, &[1, 1, 0, 0, 1]).unwrap();
        let alpha: Vec<Elem> = f.elements().skip(1).collect();
        let grs = GrsCode::reed_solomon(&f, alpha, 11).unwrap();
        let alt = AltCode::new(grs.clone(), 4).unwrap();
        assert!(alt.dimension() <= 11);
        assert!(alt.dimension() > 0);
        for g in alt.generator() {
            assert!(g.iter().all(|&x| f.in_subfield(x, 4).unwrap()));
            assert!(grs.contains(g));
        }
    }

    #[test]
    fn subfield_coordinates_reconstruct() {
        let f = Field::new(2, 4, &[1, 1, 0, 0, 1]).unwrap();
        let coords = SubfieldCoordinates::new(&f, 4, 2).unwrap();
        for x in f.elements() {
            let c = coords.of(x);
            assert!(c.iter().all(|&a| f.in_subfield(a, 4).unwrap()));
            let back = c.iter().zip(&coords.basis).fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
            assert_eq!(back, x);
        }
        // over the prime field the coordinates are the digits
        let coords = SubfieldCoordinates::new(&f, 2, 4).unwrap();
        for x in f.elements() {
            assert_eq!(ints(&coords.of(x)), f.digits(x));
        }
    }

    #[test]
    fn bch_7_3_1_is_hamming() {
        let g8 = Field::new(2, 3, &[1, 1, 0, 1]).unwrap();
        let bch = BchCode::new(&g8, 2, 7, 3, 1).unwrap();
        assert_eq!(bch.alt().dimension(), 4);
        assert_eq!(bch.designed_distance(), 3);
        assert_eq!(bch.beta(), g8.elem(2).unwrap());
        // n^{-1} = 1 and b = 1, so every multiplier is one
        assert_eq!(bch.closed_form_multipliers(), vec![Elem::ONE; 7]);
        assert_eq!(bch.alt().grs().multipliers(), &bch.closed_form_multipliers()[..]);
    }

    #[test]
    fn bch_closed_form_matches_dual() {
        let g16 = Field::new(2, 4, &[1, 1, 0, 0, 1]).unwrap();
        for b in -2..4 {
            let bch = BchCode::new(&g16, 2, 15, 5, b).unwrap();
            assert_eq!(bch.alt().grs().multipliers(), &bch.closed_form_multipliers()[..]);
        }
        let g9 = Field::new(3, 2, &[1, 0, 1]).unwrap();
        let bch = BchCode::new(&g9, 3, 8, 3, 2).unwrap();
        assert_eq!(bch.alt().grs().multipliers(), &bch.closed_form_multipliers()[..]);
    }

    #[test]
    fn bch_full_delta() {
        let g8 = Field::new(2, 3, &[1, 1, 0, 1]).unwrap();
        let bch = BchCode::new(&g8, 2, 7, 7, 0).unwrap();
        // c(beta^i) = 0 for i = 0..5: only 0 and the all-ones word... over GF(2)
        // the all-ones word vanishes at beta^1..beta^6 but not at 1, so dimension 0 or 1
        for g in bch.alt().generator() {
            assert!(bch.satisfies_roots(g));
        }
        assert_eq!(bch.alt().grs().k(), 1);
    }

    #[test]
    fn bch_errors() {
        let g8 = Field::new(2, 3, &[1, 1, 0, 1]).unwrap();
        assert_eq!(BchCode::new(&g8, 2, 5, 3, 1).unwrap_err(), CodeError::BadLength(5));
        assert_eq!(BchCode::new(&g8, 2, 7, 1, 1).unwrap_err(), CodeError::BadDelta { delta: 1, n: 7 });
        assert_eq!(BchCode::new(&g8, 2, 7, 8, 1).unwrap_err(), CodeError::BadDelta { delta: 8, n: 7 });
    }

    #[test]
    fn code_messages_round_trip() {
        let g8 = Field::new(2, 3, &[1, 1, 0, 1]).unwrap();
        let code = Code::Bch(BchCode::new(&g8, 2, 7, 3, 1).unwrap());
        let msg = els(&g8, &[1, 0, 1, 1]);
        let c = code.encode(&msg).unwrap();
        assert!(code.contains(&c));
        assert_eq!(code.message_of(&c).unwrap(), msg);
        assert_eq!(code.encode(&els(&g8, &[2, 0, 1, 1])), Err(CodeError::NotInSubfield(0)));
        assert_eq!(code.kind(), "bch");

        let f = gf7();
        let rs = Code::Grs(GrsCode::reed_solomon(&f, els(&f, &[1, 2, 3, 4, 5, 6]), 3).unwrap());
        let msg = els(&f, &[4, 0, 0]);
        assert_eq!(rs.message_of(&rs.encode(&msg).unwrap()).unwrap(), msg);
        assert_eq!(rs.kind(), "rs");
    }
}
