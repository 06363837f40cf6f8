//! Interpolation-based unique decoding of GRS codes, and through them of
//! alternant and BCH codes.
//!
//! For a received word `r` the set
//!
//! ```text
//! M = { a(x) y + b(x) : a(alpha_i) u_i^{-1} r_i + b(alpha_i) = 0 for all i }
//! ```
//!
//! is a rank-two `E[x]`-module with basis `{eta, y - h_{r'}}`, where `eta`
//! vanishes on the evaluation points and `h_{r'}` interpolates `u_i^{-1} r_i`.
//! If at most `floor((n - k) / 2)` symbols are in error, the smallest element
//! of `M` under the `(k-1)`-weighted order is `f_e (y - h_{c'})`: the error
//! locator times `y` minus the sent message polynomial. The decoder turns the
//! starting basis into a Gröbner basis, one leading-term cancellation at a
//! time ([`Algorithm::Pivot`]) or one full polynomial division at a time
//! ([`Algorithm::Euclid`]), and reads the message off the element whose
//! leading term carries `y`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::codes::{distance, Code, GrsCode, Word};
use crate::field::Elem;
use crate::poly::{Degree, Poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecodeError {
    #[error("received word has length {got}, code length is {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("received symbol at position {0} is not a field element")]
    InvalidSymbol(usize),
    #[error("decoder invariant violated: {0}")]
    InvariantViolation(String),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Cancel one leading term per iteration.
    Pivot,
    /// Replace the pair by a full Euclidean division per iteration.
    Euclid,
}

impl Algorithm {
    pub fn letter(self) -> &'static str {
        match self {
            Algorithm::Pivot => "d",
            Algorithm::Euclid => "e",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "d" | "D" => Ok(Algorithm::Pivot),
            "e" | "E" => Ok(Algorithm::Euclid),
            _ => Err(format!("unknown algorithm {s:?} (expected d or e)")),
        }
    }
}

/// `x^x y^y` with `y` in `{0, 1}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub x: i64,
    pub y: u8,
}

/// The weighted order `>_s`: compare `x + s*y`, and on ties the monomial
/// containing `y` is larger.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct WeightedOrder {
    pub s: i64,
}

impl WeightedOrder {
    pub fn new(s: i64) -> Self {
        Self { s }
    }

    pub fn weighted_degree(&self, m: Monomial) -> i64 {
        m.x + self.s * m.y as i64
    }

    pub fn compare(&self, a: Monomial, b: Monomial) -> Ordering {
        self.weighted_degree(a).cmp(&self.weighted_degree(b)).then(a.y.cmp(&b.y))
    }

    /// Leading monomial of `a y + b`, `None` for the zero element.
    pub fn leading_term(&self, a: &Poly, b: &Poly) -> Option<Monomial> {
        let ya = a.degree().finite().map(|x| Monomial { x, y: 1 });
        let xb = b.degree().finite().map(|x| Monomial { x, y: 0 });
        match (ya, xb) {
            (Some(p), Some(q)) => Some(if self.compare(p, q) == Ordering::Less { q } else { p }),
            (p, q) => p.or(q),
        }
    }
}

/// The module basis `{A y + B, C y + D}` carried through the decoder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairBasis {
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
    pub d: Poly,
    /// Weight of `y`, `k - 1`.
    pub s: i64,
}

impl PairBasis {
    pub fn order(&self) -> WeightedOrder {
        WeightedOrder::new(self.s)
    }

    /// `deg(C) + k - 1 >= deg(D)`: the leading term of `C y + D` carries `y`.
    pub fn is_finished(&self) -> bool {
        self.c.degree() + self.s >= self.d.degree()
    }

    /// `deg(B) + deg(C) > deg(A) + deg(D)`
    pub fn degree_invariant(&self) -> bool {
        self.b.degree() + self.c.degree() > self.a.degree() + self.d.degree()
    }

    /// `deg(A) + k - 1 < deg(B)`: the leading term of `A y + B` is free of `y`.
    pub fn first_leads_without_y(&self) -> bool {
        self.a.degree() + self.s < self.b.degree()
    }

    /// `deg(D) - deg(C)`, or `None` standing for `-inf` once `D = 0`.
    pub fn gap(&self) -> Option<i64> {
        match (self.d.degree(), self.c.degree()) {
            (Degree::Finite(d), Degree::Finite(c)) => Some(d - c),
            (Degree::NegInf, _) => None,
            (Degree::Finite(_), Degree::NegInf) => Some(i64::MAX),
        }
    }

    fn degrees(&self) -> [Degree; 4] {
        [self.a.degree(), self.b.degree(), self.c.degree(), self.d.degree()]
    }
}

/// Result of a successful decode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    /// `h_{c'}`, of degree below `k`.
    pub message: Poly,
    pub codeword: Word,
    /// Zero-based positions where the received word was corrected.
    pub error_positions: Vec<usize>,
    /// Monic `prod (x - alpha_i)` over the error positions.
    pub error_locator: Poly,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FailureReason {
    /// `C` does not divide `D`.
    NonDivisible,
    /// The quotient has degree `>= k`.
    DegreeTooLarge,
    /// The candidate codeword is farther than `floor((n - k) / 2)` from the received word.
    RadiusExceeded,
    /// The candidate codeword has symbols outside the alternant code's subfield.
    OutsideSubfield,
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureReason::NonDivisible => "NonDivisible",
            FailureReason::DegreeTooLarge => "DegreeTooLarge",
            FailureReason::RadiusExceeded => "RadiusExceeded",
            FailureReason::OutsideSubfield => "OutsideSubfield",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeResult {
    Success(Decoded),
    Failure(FailureReason),
}

impl DecodeResult {
    pub fn is_success(&self) -> bool {
        matches!(self, DecodeResult::Success(_))
    }

    pub fn codeword(&self) -> Option<&Word> {
        match self {
            DecodeResult::Success(d) => Some(&d.codeword),
            DecodeResult::Failure(_) => None,
        }
    }
}

/// One basis update.
#[derive(Clone, Debug)]
pub struct Step {
    pub basis: PairBasis,
    /// `deg(D) - deg(B)` before the update.
    pub shift: i64,
}

/// Hook called after every basis update.
pub trait StepObserver {
    fn on_step(&mut self, index: usize, shift: i64, before: &PairBasis, after: &PairBasis);
}

impl StepObserver for () {
    fn on_step(&mut self, _: usize, _: i64, _: &PairBasis, _: &PairBasis) {}
}

fn check_word(code: &GrsCode, r: &[Elem]) -> Result<(), DecodeError> {
    if r.len() != code.n() {
        return Err(DecodeError::LengthMismatch { expected: code.n(), got: r.len() });
    }
    match r.iter().position(|x| x.value() as u64 >= code.field().order()) {
        Some(i) => Err(DecodeError::InvalidSymbol(i)),
        None => Ok(()),
    }
}

/// `h_{r'} = sum r_i u_i^{-1} h_i`.
pub fn received_interpolant(code: &GrsCode, r: &[Elem]) -> Result<Poly, DecodeError> {
    check_word(code, r)?;
    Ok(code.interpolant(r).expect("length checked"))
}

/// Whether `a y + b` vanishes at every point `(alpha_i, u_i^{-1} r_i)`.
pub fn module_contains(code: &GrsCode, r: &[Elem], a: &Poly, b: &Poly) -> bool {
    if r.len() != code.n() {
        return false;
    }
    let f = code.field();
    code.alpha().iter().zip(code.multipliers()).zip(r).all(|((&x, &u), &ri)| {
        let y = f.div(ri, u).expect("multipliers are nonzero");
        f.add(f.mul(a.eval(x), y), b.eval(x)).is_zero()
    })
}

/// `A = 0, B = eta, C = 1, D = -h_{r'}`.
pub fn init_basis(code: &GrsCode, r: &[Elem]) -> Result<PairBasis, DecodeError> {
    let h = received_interpolant(code, r)?;
    let f = code.field();
    Ok(PairBasis { a: Poly::zero(f), b: code.eta().clone(), c: Poly::one(f), d: -&h, s: code.k() as i64 - 1 })
}

/// Whether the leading terms of the two elements have different `y`-degrees,
/// which makes the pair a Gröbner basis of the module it generates.
pub fn is_groebner_pair(basis: &PairBasis) -> bool {
    let order = basis.order();
    match (order.leading_term(&basis.a, &basis.b), order.leading_term(&basis.c, &basis.d)) {
        (Some(p), Some(q)) => p.y != q.y,
        _ => false,
    }
}

fn violation(msg: impl Into<String>) -> DecodeError {
    DecodeError::InvariantViolation(msg.into())
}

fn pivot_data(basis: &PairBasis) -> Result<(i64, Elem), DecodeError> {
    if basis.is_finished() {
        return Err(violation("step requested on a finished basis"));
    }
    if !basis.degree_invariant() || !basis.first_leads_without_y() {
        return Err(violation(format!("bad basis before step: {:?}", basis.degrees())));
    }
    let f = basis.b.field();
    let (Degree::Finite(dd), Degree::Finite(db)) = (basis.d.degree(), basis.b.degree()) else {
        return Err(violation("B or D vanished before a step"));
    };
    let lc_d = basis.d.leading_coeff().expect("D is nonzero");
    let lc_b = basis.b.leading_coeff().expect("B is nonzero");
    let pivot = f.div(lc_d, lc_b).expect("B is nonzero");
    Ok((dd - db, pivot))
}

fn check_progress(before: &PairBasis, after: &PairBasis) -> Result<(), DecodeError> {
    if !after.degree_invariant() {
        return Err(violation(format!("deg(B)+deg(C) > deg(A)+deg(D) fails: {:?}", after.degrees())));
    }
    if !after.first_leads_without_y() {
        return Err(violation(format!("deg(A)+k-1 < deg(B) fails: {:?}", after.degrees())));
    }
    // None is -inf, which Option's ordering already puts below every Some
    if after.gap() >= before.gap() {
        return Err(violation(format!(
            "deg(D)-deg(C) did not decrease: {:?} -> {:?}",
            before.degrees(),
            after.degrees()
        )));
    }
    Ok(())
}

/// One leading-term cancellation. With `d = deg(D) - deg(B)` and
/// `pivot = LC(D)/LC(B)`:
///
/// * `d >= 0`: `C -= pivot x^d A`, `D -= pivot x^d B`;
/// * `d < 0`: `(A, B, C, D) <- (C, D, x^{-d} C - pivot A, x^{-d} D - pivot B)`.
pub fn groebner_step(basis: &PairBasis) -> Result<Step, DecodeError> {
    let (shift, pivot) = pivot_data(basis)?;
    let next = if shift >= 0 {
        let d = shift as usize;
        PairBasis {
            a: basis.a.clone(),
            b: basis.b.clone(),
            c: basis.c.sub_scaled_shift(pivot, d, &basis.a),
            d: basis.d.sub_scaled_shift(pivot, d, &basis.b),
            s: basis.s,
        }
    } else {
        let e = (-shift) as usize;
        PairBasis {
            a: basis.c.clone(),
            b: basis.d.clone(),
            c: basis.c.shift(e).sub_scaled_shift(pivot, 0, &basis.a),
            d: basis.d.shift(e).sub_scaled_shift(pivot, 0, &basis.b),
            s: basis.s,
        }
    };
    check_progress(basis, &next)?;
    Ok(Step { basis: next, shift })
}

/// One Euclidean step: `B = Q D + R`, then `(A, B, C, D) <- (C, D, A - Q C, R)`.
pub fn euclid_step(basis: &PairBasis) -> Result<Step, DecodeError> {
    let (shift, _) = pivot_data(basis)?;
    let (q, r) = basis.b.div_rem(&basis.d).map_err(|e| violation(e.to_string()))?;
    let next = PairBasis { a: basis.c.clone(), b: basis.d.clone(), c: &basis.a - &(&q * &basis.c), d: r, s: basis.s };
    check_progress(basis, &next)?;
    Ok(Step { basis: next, shift })
}

/// Final state of the basis conversion.
#[derive(Clone, Debug)]
pub struct Solved {
    /// Gröbner basis with `C` monic and `D` reduced modulo `B`.
    pub basis: PairBasis,
    pub iterations: usize,
}

/// Runs the basis conversion to completion, then normalizes the element
/// with `y` in its leading term: `D` is reduced modulo `B` (with `C`
/// adjusted by the same multiple of `A`) and `C` is made monic. That element
/// is then the same for both algorithms on every input.
pub fn solve(
    code: &GrsCode,
    r: &[Elem],
    algorithm: Algorithm,
    observer: &mut dyn StepObserver,
) -> Result<Solved, DecodeError> {
    let mut basis = init_basis(code, r)?;
    let cap = code.n() - code.k() + 2;
    let mut iterations = 0;
    while !basis.is_finished() {
        if iterations >= cap {
            return Err(violation(format!("no Gröbner basis after {cap} iterations")));
        }
        let step = match algorithm {
            Algorithm::Pivot => groebner_step(&basis)?,
            Algorithm::Euclid => euclid_step(&basis)?,
        };
        observer.on_step(iterations, step.shift, &basis, &step.basis);
        basis = step.basis;
        iterations += 1;
    }
    if !is_groebner_pair(&basis) {
        return Err(violation("stopped on a basis that is not a Gröbner basis"));
    }
    if basis.d.degree() >= basis.b.degree() {
        let (q, rem) = basis.d.div_rem(&basis.b).map_err(|e| violation(e.to_string()))?;
        basis.c = &basis.c - &(&q * &basis.a);
        basis.d = rem;
    }
    let lc = basis.c.leading_coeff().map_err(|_| violation("C vanished"))?;
    let inv = code.field().inv(lc).expect("nonzero");
    basis.c = basis.c.scale(inv);
    basis.d = basis.d.scale(inv);
    Ok(Solved { basis, iterations })
}

/// Reads the codeword off a finished basis: `-D / C` must be exact, of degree
/// below `k`, and re-encode to a word within the decoding radius of `r`.
pub fn extract_message(basis: &PairBasis, code: &GrsCode, r: &[Elem]) -> DecodeResult {
    let f = code.field();
    let (message, rem) = match (-&basis.d).div_rem(&basis.c) {
        Ok(qr) => qr,
        Err(_) => return DecodeResult::Failure(FailureReason::NonDivisible),
    };
    if !rem.is_zero() {
        return DecodeResult::Failure(FailureReason::NonDivisible);
    }
    if message.degree() >= code.k() as i64 {
        return DecodeResult::Failure(FailureReason::DegreeTooLarge);
    }
    let codeword = code.encode(&message).expect("degree checked");
    if distance(&codeword, r) > code.radius() {
        return DecodeResult::Failure(FailureReason::RadiusExceeded);
    }
    let error_locator = basis.c.monic();
    let error_positions =
        code.alpha().iter().enumerate().filter(|(_, &a)| error_locator.eval(a).is_zero()).map(|(i, _)| i).collect();
    debug_assert_eq!(f, message.field());
    DecodeResult::Success(Decoded { message, codeword, error_positions, error_locator })
}

pub fn decode_observed(
    code: &GrsCode,
    r: &[Elem],
    algorithm: Algorithm,
    observer: &mut dyn StepObserver,
) -> Result<DecodeResult, DecodeError> {
    let solved = solve(code, r, algorithm, observer)?;
    Ok(extract_message(&solved.basis, code, r))
}

pub fn decode(code: &GrsCode, r: &[Elem], algorithm: Algorithm) -> Result<DecodeResult, DecodeError> {
    decode_observed(code, r, algorithm, &mut ())
}

/// Decodes with leading-term cancellation.
pub fn decode_d(code: &GrsCode, r: &[Elem]) -> Result<DecodeResult, DecodeError> {
    decode(code, r, Algorithm::Pivot)
}

/// Decodes with Euclidean division.
pub fn decode_e(code: &GrsCode, r: &[Elem]) -> Result<DecodeResult, DecodeError> {
    decode(code, r, Algorithm::Euclid)
}

/// Decodes a word of any code family. Alternant and BCH words are decoded in
/// the ambient GRS code; a result outside the subfield is a failure.
pub fn decode_word(
    code: &Code,
    r: &[Elem],
    algorithm: Algorithm,
    observer: &mut dyn StepObserver,
) -> Result<DecodeResult, DecodeError> {
    let result = decode_observed(code.grs(), r, algorithm, observer)?;
    if let (Some(alt), DecodeResult::Success(d)) = (code.alt(), &result) {
        if !d.codeword.iter().all(|&x| alt.in_subfield(x)) {
            return Ok(DecodeResult::Failure(FailureReason::OutsideSubfield));
        }
    }
    Ok(result)
}

/// Counts basis updates.
#[derive(Default, Debug)]
pub struct IterationCounter {
    pub steps: usize,
}

impl StepObserver for IterationCounter {
    fn on_step(&mut self, _: usize, _: i64, _: &PairBasis, _: &PairBasis) {
        self.steps += 1;
    }
}

/// Records one `step=<i> d=<d> degA degB degC degD` line per update.
#[derive(Default, Debug)]
pub struct TraceRecorder {
    pub lines: Vec<String>,
}

impl StepObserver for TraceRecorder {
    fn on_step(&mut self, index: usize, shift: i64, _: &PairBasis, after: &PairBasis) {
        let [a, b, c, d] = after.degrees();
        self.lines.push(format!("step={index} d={shift} {a} {b} {c} {d}"));
    }
}

/// Re-checks, after every update, that both elements still lie in the module,
/// that `deg(B)+deg(C) > deg(A)+deg(D)`, that `deg(D)-deg(C)` strictly
/// decreased, and that the iteration count stays within `n - k + 2`.
pub struct InvariantChecker<'a> {
    code: &'a GrsCode,
    r: &'a [Elem],
    pub steps: usize,
    pub violations: Vec<String>,
}

impl<'a> InvariantChecker<'a> {
    pub fn new(code: &'a GrsCode, r: &'a [Elem]) -> Self {
        Self { code, r, steps: 0, violations: Vec::new() }
    }
}

impl StepObserver for InvariantChecker<'_> {
    fn on_step(&mut self, index: usize, _: i64, before: &PairBasis, after: &PairBasis) {
        self.steps += 1;
        let (code, r) = (self.code, self.r);
        if !module_contains(code, r, &after.a, &after.b) || !module_contains(code, r, &after.c, &after.d) {
            self.violations.push(format!("step {index}: element left the module"));
        }
        if !after.degree_invariant() {
            self.violations.push(format!("step {index}: degree invariant"));
        }
        if after.gap() >= before.gap() {
            self.violations.push(format!("step {index}: gap did not decrease"));
        }
        if self.steps > code.n() - code.k() + 2 {
            self.violations.push(format!("step {index}: iteration cap exceeded"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn rs_gf7(k: usize) -> GrsCode {
        let f = Field::prime(7).unwrap();
        let alpha = (1..7).map(|x| f.elem(x).unwrap()).collect();
        GrsCode::reed_solomon(&f, alpha, k).unwrap()
    }

    fn word(code: &GrsCode, v: &[u64]) -> Word {
        v.iter().map(|&x| code.field().elem(x).unwrap()).collect()
    }

    #[test]
    fn weighted_order_examples() {
        let xy = Monomial { x: 1, y: 1 };
        let x2 = Monomial { x: 2, y: 0 };
        assert_eq!(WeightedOrder::new(1).compare(xy, x2), Ordering::Greater);
        let y = Monomial { x: 0, y: 1 };
        assert_eq!(WeightedOrder::new(3).compare(y, x2), Ordering::Greater);
        let x = Monomial { x: 1, y: 0 };
        assert_eq!(WeightedOrder::new(0).compare(x, y), Ordering::Greater);
        assert_eq!(WeightedOrder::new(0).compare(x, x), Ordering::Equal);
    }

    #[test]
    fn module_membership_examples() {
        let code = rs_gf7(2);
        let r = word(&code, &[5, 3, 4, 0, 6, 0]);
        let f = code.field();
        let h = received_interpolant(&code, &r).unwrap();
        assert!(module_contains(&code, &r, &Poly::zero(f), code.eta()));
        assert!(module_contains(&code, &r, &Poly::one(f), &-&h));
        assert!(!module_contains(&code, &r, &Poly::one(f), &(&-&h + &Poly::one(f))));
        for (i, &a) in code.alpha().iter().enumerate() {
            assert_eq!(h.eval(a), r[i]);
        }
    }

    #[test]
    fn interpolant_of_codeword_is_message() {
        let f = Field::prime(7).unwrap();
        let alpha: Vec<Elem> = (1..7).map(|x| f.elem(x).unwrap()).collect();
        let u: Vec<Elem> = [3, 1, 4, 1, 5, 2].iter().map(|&x| f.elem(x).unwrap()).collect();
        let code = GrsCode::new(&f, alpha, u, 3).unwrap();
        let msg = Poly::from_ints(&f, &[6, 0, 2]).unwrap();
        let c = code.encode(&msg).unwrap();
        assert_eq!(received_interpolant(&code, &c).unwrap(), msg);
        assert!(received_interpolant(&code, &[Elem::ZERO; 6]).unwrap().is_zero());
        assert!(matches!(
            received_interpolant(&code, &c[..4]),
            Err(DecodeError::LengthMismatch { expected: 6, got: 4 })
        ));
    }

    #[test]
    fn initial_basis_properties() {
        let code = rs_gf7(2);
        let c = word(&code, &[2, 3, 4, 5, 6, 0]);
        let basis = init_basis(&code, &c).unwrap();
        assert!(module_contains(&code, &c, &basis.a, &basis.b));
        assert!(module_contains(&code, &c, &basis.c, &basis.d));
        assert!(basis.is_finished());
        assert!(is_groebner_pair(&basis));
        assert!(basis.degree_invariant());

        let r = word(&code, &[5, 3, 4, 0, 6, 0]);
        let noisy = init_basis(&code, &r).unwrap();
        assert!(!noisy.is_finished());
        assert!(!is_groebner_pair(&noisy));
    }

    #[test]
    fn worked_example_gf7() {
        let code = rs_gf7(2);
        let r = word(&code, &[5, 3, 4, 0, 6, 0]);
        for alg in [Algorithm::Pivot, Algorithm::Euclid] {
            let mut trace = TraceRecorder::default();
            let result = decode_observed(&code, &r, alg, &mut trace).unwrap();
            let DecodeResult::Success(d) = result else { panic!("{alg}: expected success") };
            assert_eq!(d.message, Poly::from_ints(code.field(), &[1, 1]).unwrap());
            assert_eq!(d.codeword, word(&code, &[2, 3, 4, 5, 6, 0]));
            assert_eq!(d.error_positions, vec![0, 3]);
            // (x - 1)(x - 4) = x^2 + 2x + 4
            assert_eq!(d.error_locator, Poly::from_ints(code.field(), &[4, 2, 1]).unwrap());
            assert!(!trace.lines.is_empty() && trace.lines.len() <= 6);
        }
    }

    #[test]
    fn steps_shrink_the_gap() {
        let code = rs_gf7(2);
        let r = word(&code, &[5, 3, 4, 0, 6, 0]);
        let mut basis = init_basis(&code, &r).unwrap();
        let mut n = 0;
        while !basis.is_finished() {
            let next = groebner_step(&basis).unwrap().basis;
            assert!(next.gap() < basis.gap());
            assert!(module_contains(&code, &r, &next.a, &next.b));
            assert!(module_contains(&code, &r, &next.c, &next.d));
            basis = next;
            n += 1;
        }
        assert!(n <= 6);
        assert!(is_groebner_pair(&basis));
        assert!(groebner_step(&basis).is_err());
    }

    #[test]
    fn zero_iterations_for_codewords() {
        let code = rs_gf7(3);
        let msg = Poly::from_ints(code.field(), &[1, 2, 3]).unwrap();
        let c = code.encode(&msg).unwrap();
        for alg in [Algorithm::Pivot, Algorithm::Euclid] {
            let mut count = IterationCounter::default();
            let result = decode_observed(&code, &c, alg, &mut count).unwrap();
            assert_eq!(count.steps, 0);
            assert_eq!(result.codeword(), Some(&c));
        }
    }

    #[test]
    fn extraction_from_constructed_basis() {
        let code = rs_gf7(2);
        let f = code.field();
        let msg = Poly::from_ints(f, &[1, 1]).unwrap();
        let c = code.encode(&msg).unwrap();
        let basis = PairBasis { a: Poly::zero(f), b: code.eta().clone(), c: Poly::one(f), d: -&msg, s: 1 };
        assert_eq!(extract_message(&basis, &code, &c).codeword(), Some(&c));

        let r = word(&code, &[5, 3, 4, 0, 6, 0]);
        let fe = Poly::from_roots(f, &[code.alpha()[0], code.alpha()[3]]);
        let basis = PairBasis { a: Poly::zero(f), b: code.eta().clone(), c: fe.clone(), d: -&(&fe * &msg), s: 1 };
        let DecodeResult::Success(d) = extract_message(&basis, &code, &r) else { panic!() };
        assert_eq!(d.error_positions, vec![0, 3]);
        assert_eq!(d.error_locator, fe);
    }

    #[test]
    fn wrong_length_is_an_error() {
        let code = rs_gf7(2);
        assert!(matches!(decode_d(&code, &[Elem::ZERO; 5]), Err(DecodeError::LengthMismatch { .. })));
        let bad = vec![Elem(9); 6];
        assert_eq!(decode_e(&code, &bad), Err(DecodeError::InvalidSymbol(0)));
    }

    #[test]
    fn algorithm_parsing() {
        assert_eq!("d".parse::<Algorithm>().unwrap(), Algorithm::Pivot);
        assert_eq!("e".parse::<Algorithm>().unwrap(), Algorithm::Euclid);
        assert!("x".parse::<Algorithm>().is_err());
    }
}
