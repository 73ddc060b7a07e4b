//! Exhaustive evaluation over every hand of a given size.

use std::time::{Duration, Instant};

use super::lookup::{rank_prime, LookupKind};
use super::EvalError;
use crate::cards::{create_deck, Card, DeckKind};

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub kind: LookupKind,
    pub hand_size: usize,
    /// Hands enumerated: every `hand_size`-subset of the deck.
    pub hands: u64,
    /// Hands with at least one qualifying selection.
    pub qualified_hands: u64,
    /// Distinct strength indices reached as the best selection of a hand.
    pub best_classes: u32,
    /// Distinct strength indices reached by any evaluated selection.
    pub selection_classes: u32,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn hands_per_second(&self) -> f64 {
        self.hands as f64 / self.elapsed.as_secs_f64().max(f64::MIN_POSITIVE)
    }
}

/// The deck a lookup kind is evaluated over.
pub fn sweep_deck(kind: LookupKind) -> Vec<Card> {
    match kind {
        LookupKind::ShortDeck => create_deck(DeckKind::ShortDeck),
        LookupKind::Kuhn => create_deck(DeckKind::Kuhn),
        _ => create_deck(DeckKind::Standard),
    }
}

fn index_combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let items: Vec<usize> = (0..n).collect();
    super::hand::for_each_combination(&items, k, &mut |c| out.push(c.to_vec()));
    out
}

/// Evaluates the best `arity`-card selection of every `hand_size`-card hand
/// from the kind's deck.
pub fn sweep(kind: LookupKind, hand_size: usize) -> Result<SweepReport, EvalError> {
    let table = kind.lookup();
    let arity = kind.arity();
    let deck = sweep_deck(kind);
    if hand_size < arity || hand_size > deck.len() {
        return Err(EvalError::Arity { expected: arity, actual: hand_size });
    }
    let primes: Vec<u64> = deck.iter().map(|c| rank_prime(c.rank)).collect();
    let suits: Vec<u8> = deck.iter().map(|c| 1 << c.suit.index()).collect();
    let selections = index_combinations(hand_size, arity);
    let mut best_seen = vec![false; table.class_count() as usize];
    let mut any_seen = vec![false; table.class_count() as usize];
    let (mut hands, mut qualified) = (0u64, 0u64);
    let start = Instant::now();

    let n = deck.len();
    let mut idx: Vec<usize> = (0..hand_size).collect();
    let mut sub = [deck[0]; 5];
    loop {
        hands += 1;
        let mut best: Option<u32> = None;
        for sel in &selections {
            let index = if kind == LookupKind::Badugi {
                for (slot, &s) in sel.iter().enumerate() {
                    sub[slot] = deck[idx[s]];
                }
                table.strength_index(&sub[..arity])
            } else {
                let mut product = 1u64;
                let mut suit_and = 0xFu8;
                for &s in sel {
                    product *= primes[idx[s]];
                    suit_and &= suits[idx[s]];
                }
                table.get(product, suit_and != 0).map(|e| e.index)
            };
            if let Some(i) = index {
                any_seen[i as usize] = true;
                best = best.max(Some(i));
            }
        }
        if let Some(b) = best {
            best_seen[b as usize] = true;
            qualified += 1;
        }

        let mut i = hand_size;
        while i > 0 && idx[i - 1] == i - 1 + n - hand_size {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..hand_size {
            idx[j] = idx[j - 1] + 1;
        }
    }

    let count = |v: &[bool]| v.iter().filter(|&&b| b).count() as u32;
    Ok(SweepReport {
        kind,
        hand_size,
        hands,
        qualified_hands: qualified,
        best_classes: count(&best_seen),
        selection_classes: count(&any_seen),
        elapsed: start.elapsed(),
    })
}
