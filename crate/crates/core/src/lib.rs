//! Exact arithmetic, synthesis and translations for the Π family of
//! reversible combinator languages and `O_n(Z[1/√2])` words.

pub mod error;
pub mod lang;
pub mod linalg;
pub mod random;
pub mod ring;
pub mod synthesis;
pub mod translate;
pub mod words;

pub use error::{Error, ParseError, Result};
pub use linalg::{ExactMatrix, Generator, Level};
pub use ring::{Dyadic, RingInt};
pub use synthesis::{hpermute, normal_form_word, synthesize, SynthesisTrace};
pub use words::{words_equiv, Word};
