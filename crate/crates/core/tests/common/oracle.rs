//! Naive hand categorizers used as ground truth for the lookup tables.
//!
//! Deliberately written from the rules, with no reference to the prime
//! hashing or table generation. Ranks are counted and classified, then
//! keys compare category first and tiebreak ranks second. Every key is ordered so that a
//! greater key is a stronger hand.

use poker_core::cards::{Card, Rank};

/// Comparable strength key. Greater is stronger.
pub type Key = Vec<i32>;

fn high_value(rank: Rank) -> i32 {
    rank.index() as i32 + 2
}

fn low_value(rank: Rank) -> i32 {
    if rank == Rank::Ace {
        1
    } else {
        rank.index() as i32 + 2
    }
}

/// Groups `(count, value)` sorted by count then value, both descending.
fn groups(values: &[i32]) -> Vec<(i32, i32)> {
    let mut out: Vec<(i32, i32)> = Vec::new();
    for &v in values {
        match out.iter_mut().find(|(_, w)| *w == v) {
            Some(g) => g.0 += 1,
            None => out.push((1, v)),
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn is_flush(cards: &[Card]) -> bool {
    cards.iter().all(|c| c.suit == cards[0].suit)
}

/// Top card of a straight among five distinct values, if any. `low_straight`
/// lists the values of the ace-low wheel for this deck.
fn straight_top(values: &[i32], low_straight: &[i32]) -> Option<i32> {
    let mut v = values.to_vec();
    v.sort();
    v.dedup();
    if v.len() != 5 {
        return None;
    }
    if v[4] - v[0] == 4 {
        return Some(v[4]);
    }
    let mut wheel = low_straight.to_vec();
    wheel.sort();
    if v == wheel {
        // ace plays low: top card is the second-highest value
        return Some(v[3]);
    }
    None
}

fn tiebreak(gs: &[(i32, i32)]) -> Vec<i32> {
    gs.iter().map(|g| g.1).collect()
}

/// Category codes for high hands, standard ordering.
pub const HIGH_CARD: i32 = 0;
pub const ONE_PAIR: i32 = 1;
pub const TWO_PAIR: i32 = 2;
pub const TRIPS: i32 = 3;
pub const STRAIGHT: i32 = 4;
pub const FLUSH: i32 = 5;
pub const FULL_HOUSE: i32 = 6;
pub const QUADS: i32 = 7;
pub const STRAIGHT_FLUSH: i32 = 8;

fn high_key(cards: &[Card], wheel: &[i32], short_deck: bool) -> Key {
    assert_eq!(cards.len(), 5);
    let values: Vec<i32> = cards.iter().map(|c| high_value(c.rank)).collect();
    let gs = groups(&values);
    let flush = is_flush(cards);
    let straight = straight_top(&values, wheel);
    let shape: Vec<i32> = gs.iter().map(|g| g.0).collect();
    let (cat, tb) = match (straight, flush) {
        (Some(top), true) => (STRAIGHT_FLUSH, vec![top]),
        (Some(top), false) => (STRAIGHT, vec![top]),
        (None, true) => (FLUSH, tiebreak(&gs)),
        (None, false) => {
            let cat = match shape.as_slice() {
                [4, 1] => QUADS,
                [3, 2] => FULL_HOUSE,
                [3, 1, 1] => TRIPS,
                [2, 2, 1] => TWO_PAIR,
                [2, 1, 1, 1] => ONE_PAIR,
                [1, 1, 1, 1, 1] => HIGH_CARD,
                other => panic!("impossible shape {other:?}"),
            };
            (cat, tiebreak(&gs))
        }
    };
    // short deck: flush beats full house
    let cat = if short_deck {
        match cat {
            FLUSH => FULL_HOUSE,
            FULL_HOUSE => FLUSH,
            c => c,
        }
    } else {
        cat
    };
    let mut key = vec![cat];
    key.extend(tb);
    key
}

pub fn standard_high(cards: &[Card]) -> Key {
    high_key(cards, &[14, 2, 3, 4, 5], false)
}

/// Short deck: sixes and up, A-6-7-8-9 is the lowest straight.
pub fn short_deck(cards: &[Card]) -> Key {
    assert!(cards.iter().all(|c| c.rank >= Rank::Six));
    high_key(cards, &[14, 6, 7, 8, 9], true)
}

/// Ace-to-five low without qualifier: straights and flushes ignored, fewer
/// pairs better, then lower cards better.
pub fn regular_low(cards: &[Card]) -> Key {
    assert_eq!(cards.len(), 5);
    let values: Vec<i32> = cards.iter().map(|c| low_value(c.rank)).collect();
    let gs = groups(&values);
    let shape: Vec<i32> = gs.iter().map(|g| g.0).collect();
    let badness = match shape.as_slice() {
        [1, 1, 1, 1, 1] => 0,
        [2, 1, 1, 1] => 1,
        [2, 2, 1] => 2,
        [3, 1, 1] => 3,
        [3, 2] => 4,
        [4, 1] => 5,
        other => panic!("impossible shape {other:?}"),
    };
    let mut key = vec![-badness];
    key.extend(gs.iter().map(|g| -g.1));
    key
}

/// `None` when the five cards do not make an eight-or-better low.
pub fn eight_or_better(cards: &[Card]) -> Option<Key> {
    assert_eq!(cards.len(), 5);
    let mut values: Vec<i32> = cards.iter().map(|c| low_value(c.rank)).collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    let mut distinct = values.clone();
    distinct.dedup();
    if distinct.len() != 5 || values[0] > 8 {
        return None;
    }
    Some(values.iter().map(|v| -v).collect())
}

/// Best badugi among the cards: more cards first, then lower.
pub fn badugi(cards: &[Card]) -> Key {
    let n = cards.len();
    let mut best: Option<Key> = None;
    for mask in 1u32..(1 << n) {
        let subset: Vec<Card> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| cards[i]).collect();
        let ok = subset.iter().enumerate().all(|(i, a)| {
            subset[i + 1..].iter().all(|b| a.rank != b.rank && a.suit != b.suit)
        });
        if !ok {
            continue;
        }
        let mut values: Vec<i32> = subset.iter().map(|c| low_value(c.rank)).collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        let mut key = vec![subset.len() as i32];
        key.extend(values.iter().map(|v| -v));
        if best.as_ref().is_none_or(|b| key > *b) {
            best = Some(key);
        }
    }
    best.expect("a single card is always a badugi")
}

/// Deuce-to-seven low: the exact reverse of standard high.
pub fn deuce_to_seven(cards: &[Card]) -> Key {
    standard_high(cards).into_iter().map(|v| -v).collect()
}

/// All k-subsets of `items`, in lexicographic index order.
pub fn combinations<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let n = items.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
