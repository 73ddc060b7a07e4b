//! Hand evaluation: lookup tables and the hand types built on them.

mod hand;
mod lookup;
mod sweep;

pub use hand::{compare_hands, Hand, HandType, HandTypeSpec, Selection};
pub use lookup::{
    build_lookup, dump_ordered_hands, prime_product, rank_prime, Category, HandIdentity, Lookup,
    LookupKind,
};
pub use sweep::{sweep, sweep_deck, SweepReport};

use thiserror::Error;

use crate::cards::Card;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("expected {expected} cards, got {actual}")]
    Arity { expected: usize, actual: usize },
    #[error("duplicate card {0}")]
    DuplicateCard(Card),
    #[error("card {card} is not part of the {kind} deck")]
    OutsideDeck { card: Card, kind: LookupKind },
    #[error("hand does not qualify")]
    NotQualified,
    #[error("hole/board counts ({hole}, {board}) cannot form a {hand_type} hand")]
    IncompatibleCounts { hand_type: HandType, hole: usize, board: usize },
    #[error("cannot compare a {0} hand with a {1} hand")]
    MismatchedTypes(HandType, HandType),
    #[error("unknown hand type {0:?}")]
    UnknownHandType(String),
}
