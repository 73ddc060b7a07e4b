//! Multi-variant poker: a phase-based game state machine and a lookup-table
//! hand evaluator.
//!
//! * [`cards`]: card notation plus deterministic decks.
//! * [`eval`]: the six lookup tables and the hand types built on them.
//! * [`variants`]: variant definitions and the built-in catalog.
//! * [`engine`]: the game state and its verify/can/do operations.
//! * [`history`]: the line-oriented hand-history script and its replayer.

pub mod cards;
pub mod eval;
pub mod engine;
pub mod history;
pub mod variants;

pub use cards::{create_deck, format_cards, parse_cards, shuffle_deck, Card, CardError, DeckKind, Rank, Suit};
pub use eval::{compare_hands, dump_ordered_hands, EvalError, Hand, HandIdentity, HandType, Lookup, LookupKind};
pub use engine::{
    Automation, AutomationSet, DeckSource, EngineError, GameState, HoleCard, Operation, Phase, Pot, Record,
    StateConfig,
};
pub use history::{HandHistoryScript, ReplayError, ScriptError};
pub use variants::{
    builtin_variant, builtin_variant_with_stakes, BettingStructure, Chips, OpenerRule, Street, VariantDefinition,
    VariantError,
};
