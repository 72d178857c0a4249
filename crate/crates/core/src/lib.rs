//! Framed braid groups: word problem, closure invariants, framed L-moves,
//! framed Hilden groups and plat closures.

pub mod canonical;
pub mod cli;
pub mod closure;
pub mod dsl;
pub mod error;
pub mod framed;
pub mod fuzz;
pub mod garside;
pub mod hilden;
pub mod moves;
pub mod plat;
pub mod word;

pub use closure::{
    closure_signature, closure_signature_with, knot_framing, signatures_match, FramingConvention,
    LinkSignature,
};
pub use error::{BraidError, Result};
pub use framed::{FramedBraid, FramedNormalForm};
pub use garside::{are_equal, to_normal_form, GarsideNormalForm};
pub use moves::{InsertSide, MoveDescriptor, MoveKind};
pub use word::{BraidWord, Letter, LetterKind, Permutation};
