//! Polynomial remainder codes over finite fields: finite field and
//! polynomial arithmetic, CRT encoding, erasure interpolation, GCD-based
//! error decoding, brute-force reference decoders and a channel simulator.

pub mod code;
pub mod decoder;
pub mod error;
pub mod field;
pub mod interp;
pub mod io;
pub mod oracle;
pub mod poly;
pub mod sim;
pub mod tables;

pub use code::{CodeSpec, Codeword, Weights};
pub use decoder::{
    decode, list_decode, Algorithm, DecodeOptions, DecodeOutcome, FailureReason, Recovery, Stopping,
};
pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldOp};
pub use interp::{interpolate_direct, interpolate_fixed_transform, ErasurePattern};
pub use poly::{Degree, Poly};
