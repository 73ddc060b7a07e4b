//! Cards and decks.
//!
//! Cards use the two-character notation `<rank><suit>`, e.g. `"Ac"` or
//! `"Th"`. Ranks are written uppercase (`T` for ten) and suits lowercase.
//! Parsing accepts lowercase rank characters.

use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CardError {
    #[error("card string has odd length {0}")]
    OddLength(usize),
    #[error("unknown rank character {0:?}")]
    UnknownRank(char),
    #[error("unknown suit character {0:?}")]
    UnknownSuit(char),
    #[error("duplicate card {0}")]
    Duplicate(Card),
}

/// Card rank in ascending order, deuce lowest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Rank {
    Two = 0,
    Three,
    Four,
    Five,
    Six,
    Seven,
    Eight,
    Nine,
    Ten,
    Jack,
    Queen,
    King,
    Ace,
}

impl Rank {
    pub const ALL: [Rank; 13] = [
        Rank::Two,
        Rank::Three,
        Rank::Four,
        Rank::Five,
        Rank::Six,
        Rank::Seven,
        Rank::Eight,
        Rank::Nine,
        Rank::Ten,
        Rank::Jack,
        Rank::Queen,
        Rank::King,
        Rank::Ace,
    ];

    /// Zero-based position, 0 for deuce through 12 for ace.
    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub fn from_index(index: usize) -> Option<Rank> {
        Rank::ALL.get(index).copied()
    }

    pub fn to_char(self) -> char {
        b"23456789TJQKA"[self.index()] as char
    }

    pub fn from_char(c: char) -> Option<Rank> {
        let c = c.to_ascii_uppercase();
        "23456789TJQKA"
            .find(c)
            .and_then(Rank::from_index)
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Suits carry no strength. The derived order (c < d < h < s) is only used
/// for sorting and for breaking bring-in ties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Suit {
    Clubs = 0,
    Diamonds,
    Hearts,
    Spades,
}

impl Suit {
    pub const ALL: [Suit; 4] = [Suit::Clubs, Suit::Diamonds, Suit::Hearts, Suit::Spades];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn to_char(self) -> char {
        b"cdhs"[self.index()] as char
    }

    pub fn from_char(c: char) -> Option<Suit> {
        match c {
            'c' => Some(Suit::Clubs),
            'd' => Some(Suit::Diamonds),
            'h' => Some(Suit::Hearts),
            's' => Some(Suit::Spades),
            _ => None,
        }
    }
}

impl fmt::Display for Suit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Card {
    pub rank: Rank,
    pub suit: Suit,
}

impl Card {
    pub const fn new(rank: Rank, suit: Suit) -> Card {
        Card { rank, suit }
    }

    /// Dense index in `0..52`, `rank * 4 + suit`.
    #[inline]
    pub fn index(self) -> usize {
        self.rank.index() * 4 + self.suit.index()
    }

    #[inline]
    pub fn from_index(index: usize) -> Option<Card> {
        let rank = Rank::from_index(index / 4)?;
        Some(Card::new(rank, Suit::ALL[index % 4]))
    }
}

impl fmt::Display for Card {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.rank, self.suit)
    }
}

impl FromStr for Card {
    type Err = CardError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match parse_cards(s)?.as_slice() {
            [card] => Ok(*card),
            _ => Err(CardError::OddLength(s.chars().count())),
        }
    }
}

/// Parses a concatenation of two-character cards, e.g. `"Ac2d"`.
pub fn parse_cards(text: &str) -> Result<Vec<Card>, CardError> {
    let chars: Vec<char> = text.chars().collect();
    if !chars.len().is_multiple_of(2) {
        return Err(CardError::OddLength(chars.len()));
    }
    let mut cards = Vec::with_capacity(chars.len() / 2);
    let mut seen = 0u64;
    for pair in chars.chunks_exact(2) {
        let rank = Rank::from_char(pair[0]).ok_or(CardError::UnknownRank(pair[0]))?;
        let suit = Suit::from_char(pair[1]).ok_or(CardError::UnknownSuit(pair[1]))?;
        let card = Card::new(rank, suit);
        let bit = 1u64 << card.index();
        if seen & bit != 0 {
            return Err(CardError::Duplicate(card));
        }
        seen |= bit;
        cards.push(card);
    }
    Ok(cards)
}

pub fn format_cards(cards: &[Card]) -> String {
    let mut out = String::with_capacity(cards.len() * 2);
    for card in cards {
        out.push(card.rank.to_char());
        out.push(card.suit.to_char());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeckKind {
    Standard,
    ShortDeck,
    Kuhn,
}

impl DeckKind {
    pub fn size(self) -> usize {
        match self {
            DeckKind::Standard => 52,
            DeckKind::ShortDeck => 36,
            DeckKind::Kuhn => 3,
        }
    }

    pub fn contains(self, card: Card) -> bool {
        match self {
            DeckKind::Standard => true,
            DeckKind::ShortDeck => card.rank >= Rank::Six,
            DeckKind::Kuhn => card.suit == Suit::Spades && card.rank >= Rank::Jack && card.rank != Rank::Ace,
        }
    }
}

/// Every card of the deck, ordered by rank ascending and then by suit
/// (clubs, diamonds, hearts, spades).
pub fn create_deck(kind: DeckKind) -> Vec<Card> {
    Rank::ALL
        .iter()
        .flat_map(|&rank| Suit::ALL.iter().map(move |&suit| Card::new(rank, suit)))
        .filter(|&card| kind.contains(card))
        .collect()
}

/// Deterministic Fisher-Yates shuffle driven by ChaCha8 seeded with
/// `seed`. Indices are drawn by rejection sampling on 64-bit outputs, so the
/// permutation depends only on the seed and the input order.
pub fn shuffle_deck(deck: &[Card], seed: u64) -> Vec<Card> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = deck.to_vec();
    shuffle_with(&mut out, &mut rng);
    out
}

pub(crate) fn shuffle_with(cards: &mut [Card], rng: &mut ChaCha8Rng) {
    for i in (1..cards.len()).rev() {
        let j = uniform_below(rng, i as u64 + 1) as usize;
        cards.swap(i, j);
    }
}

fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    let zone = u64::MAX - (u64::MAX % bound);
    loop {
        let v = rng.next_u64();
        if v < zone {
            return v % bound;
        }
    }
}
