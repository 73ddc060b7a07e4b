//! Fixtures shared by the benchmarks.

use poker_core::{builtin_variant, create_deck, shuffle_deck, Card, DeckKind, GameState, StateConfig};

/// `count` reproducible deals of `size` cards, each from a fresh shuffle.
pub fn deals(count: usize, size: usize) -> Vec<Vec<Card>> {
    let deck = create_deck(DeckKind::Standard);
    (0..count as u64).map(|seed| shuffle_deck(&deck, seed)[..size].to_vec()).collect()
}

/// A fully automated no-limit hold'em table.
pub fn holdem(players: usize, seed: u64) -> GameState {
    let variant = builtin_variant("no-limit-texas-holdem").expect("builtin");
    let config = StateConfig::new(vec![200; players]).blinds(vec![1, 2]).seed(seed);
    GameState::new(variant, config).expect("valid table")
}

/// Plays a hand where every player checks or calls to the river.
pub fn check_down(players: usize, seed: u64) -> GameState {
    let mut state = holdem(players, seed);
    while !state.is_terminal() {
        state.check_or_call().expect("someone is to act until the hand ends");
    }
    state
}
