//! Reed-Solomon, generalized Reed-Solomon, alternant and BCH codes over
//! explicit finite fields, with a unique decoder built on interpolation and
//! Gröbner bases of rank-two modules.
//!
//! ```
//! use alternant::{decode_d, Field, GrsCode, Poly};
//!
//! let f = Field::prime(7).unwrap();
//! let alpha = (1..7).map(|x| f.elem(x).unwrap()).collect();
//! let code = GrsCode::reed_solomon(&f, alpha, 2).unwrap();
//! let mut word = code.encode(&Poly::from_ints(&f, &[1, 1]).unwrap()).unwrap();
//! word[0] = f.elem(5).unwrap();
//! word[3] = f.elem(0).unwrap();
//! let decoded = decode_d(&code, &word).unwrap();
//! assert_eq!(decoded.codeword().unwrap(), &code.encode(&Poly::from_ints(&f, &[1, 1]).unwrap()).unwrap());
//! ```

pub mod cli;
pub mod codes;
pub mod decoder;
pub mod field;
pub mod harness;
pub mod linalg;
pub mod poly;
pub mod specfile;

pub use codes::{AltCode, BchCode, Code, CodeError, GrsCode, Word};
pub use decoder::{
    decode, decode_d, decode_e, decode_word, Algorithm, DecodeError, DecodeResult, Decoded, FailureReason, PairBasis,
};
pub use field::{Elem, Field, FieldElement, FieldError};
pub use poly::{Degree, Poly, PolyError};
