//! Perfect-hash lookup tables.
//!
//! Each rank maps to a prime; a card set hashes to the product of its rank
//! primes together with a flag telling whether every card shares one suit.
//! Unique factorization makes the product a perfect key for the rank
//! multiset, and the flag separates flushes from their unsuited twins.
//!
//! Tables are generated weakest class first, so the strength index grows
//! with hand strength for every kind, lowball kinds included.

use std::fmt;
use std::sync::OnceLock;

use rustc_hash::FxHashMap;

use crate::cards::{Card, Rank, Suit};
use crate::eval::EvalError;

const RANK_PRIMES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

#[inline]
pub fn rank_prime(rank: Rank) -> u64 {
    RANK_PRIMES[rank.index()]
}

/// Product of the rank primes. Order independent.
#[inline]
pub fn prime_product(cards: &[Card]) -> u64 {
    cards.iter().map(|c| rank_prime(c.rank)).product()
}

#[inline]
fn all_suited(cards: &[Card]) -> bool {
    cards.iter().all(|c| c.suit == cards[0].suit)
}

#[inline]
fn hash_key(product: u64, suited: bool) -> u64 {
    (product << 1) | suited as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LookupKind {
    Standard,
    EightOrBetter,
    ShortDeck,
    Regular,
    Badugi,
    Kuhn,
}

impl LookupKind {
    pub const ALL: [LookupKind; 6] = [
        LookupKind::Standard,
        LookupKind::EightOrBetter,
        LookupKind::ShortDeck,
        LookupKind::Regular,
        LookupKind::Badugi,
        LookupKind::Kuhn,
    ];

    /// Number of cards one evaluation consumes.
    pub fn arity(self) -> usize {
        match self {
            LookupKind::Badugi => 4,
            LookupKind::Kuhn => 1,
            _ => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LookupKind::Standard => "standard",
            LookupKind::EightOrBetter => "eight-or-better",
            LookupKind::ShortDeck => "short-deck",
            LookupKind::Regular => "regular",
            LookupKind::Badugi => "badugi",
            LookupKind::Kuhn => "kuhn",
        }
    }

    pub fn from_name(name: &str) -> Option<LookupKind> {
        let name = name.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        LookupKind::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Whether a card of this rank may appear in an input.
    pub fn accepts(self, rank: Rank) -> bool {
        match self {
            LookupKind::ShortDeck => rank >= Rank::Six,
            LookupKind::Kuhn => matches!(rank, Rank::Jack | Rank::Queen | Rank::King),
            _ => true,
        }
    }

    /// Whether a qualifier is applied, i.e. some legal inputs have no entry.
    pub fn is_qualified(self) -> bool {
        self == LookupKind::EightOrBetter
    }

    /// Rank order used for canonical text: ace low for lowball kinds.
    fn ace_low(self) -> bool {
        matches!(self, LookupKind::EightOrBetter | LookupKind::Regular | LookupKind::Badugi)
    }

    /// Lookup tables are built on first use and shared afterwards.
    pub fn lookup(self) -> &'static Lookup {
        static TABLES: [OnceLock<Lookup>; 6] = [
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
        ];
        TABLES[self as usize].get_or_init(|| build_lookup(self))
    }
}

impl fmt::Display for LookupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    HighCard,
    OnePair,
    TwoPair,
    ThreeOfAKind,
    Straight,
    Flush,
    FullHouse,
    FourOfAKind,
    StraightFlush,
    QualifiedLow,
    /// Badugi made of this many cards.
    Badugi(u8),
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Category::HighCard => "high-card",
            Category::OnePair => "one-pair",
            Category::TwoPair => "two-pair",
            Category::ThreeOfAKind => "three-of-a-kind",
            Category::Straight => "straight",
            Category::Flush => "flush",
            Category::FullHouse => "full-house",
            Category::FourOfAKind => "four-of-a-kind",
            Category::StraightFlush => "straight-flush",
            Category::QualifiedLow => "qualified-low",
            Category::Badugi(n) => return write!(f, "badugi-{n}"),
        };
        f.write_str(s)
    }
}

/// One table entry: the strength index plus the class it stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HandIdentity {
    pub index: u32,
    pub category: Category,
    pub suited: bool,
    ranks: [Rank; 5],
    len: u8,
    ace_low: bool,
}

impl HandIdentity {
    /// Ranks of the class, most significant first.
    pub fn ranks(&self) -> &[Rank] {
        &self.ranks[..self.len as usize]
    }

    /// A concrete card set realizing this class: all spades when suited,
    /// otherwise suits cycle c, d, h, s over the significance order so no
    /// two cards of a rank collide and five cards never share a suit.
    pub fn canonical_cards(&self) -> Vec<Card> {
        self.ranks()
            .iter()
            .enumerate()
            .map(|(i, &rank)| {
                let suit = if self.suited { Suit::Spades } else { Suit::ALL[i % 4] };
                Card::new(rank, suit)
            })
            .collect()
    }

    pub fn is_ace_low(&self) -> bool {
        self.ace_low
    }
}

impl fmt::Display for HandIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}",
            self.index,
            self.category,
            crate::cards::format_cards(&self.canonical_cards())
        )
    }
}

#[derive(Debug, Clone)]
pub struct Lookup {
    kind: LookupKind,
    /// Weakest first; entries sharing a class are adjacent, unsuited first.
    entries: Vec<HandIdentity>,
    positions: FxHashMap<u64, u32>,
    class_count: u32,
}

impl Lookup {
    pub fn kind(&self) -> LookupKind {
        self.kind
    }

    pub fn entries(&self) -> &[HandIdentity] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct strength indices; indices span `0..class_count`.
    pub fn class_count(&self) -> u32 {
        self.class_count
    }

    pub fn max_index(&self) -> u32 {
        self.class_count - 1
    }

    /// Raw hash probe.
    #[inline]
    pub fn get(&self, product: u64, suited: bool) -> Option<&HandIdentity> {
        self.positions
            .get(&hash_key(product, suited))
            .map(|&pos| &self.entries[pos as usize])
    }

    /// Strength index of a card set without validation. Badugi inputs must
    /// already be reduced to a valid badugi subset.
    #[inline]
    pub fn index_of(&self, cards: &[Card]) -> Option<u32> {
        self.get(prime_product(cards), all_suited(cards)).map(|e| e.index)
    }

    /// Validated evaluation of exactly `arity` distinct cards.
    pub fn evaluate(&self, cards: &[Card]) -> Result<HandIdentity, EvalError> {
        let arity = self.kind.arity();
        if cards.len() != arity {
            return Err(EvalError::Arity { expected: arity, actual: cards.len() });
        }
        check_distinct(cards)?;
        if let Some(card) = cards.iter().find(|c| !self.kind.accepts(c.rank)) {
            return Err(EvalError::OutsideDeck { card: *card, kind: self.kind });
        }
        if self.kind == LookupKind::Badugi {
            return Ok(*self.best_badugi(cards));
        }
        self.get(prime_product(cards), all_suited(cards))
            .copied()
            .ok_or(EvalError::NotQualified)
    }

    /// Badugi reduction: the strongest subset whose cards have pairwise
    /// distinct ranks and suits.
    fn best_badugi(&self, cards: &[Card]) -> &HandIdentity {
        let n = cards.len();
        let mut best: Option<&HandIdentity> = None;
        let mut subset = [cards[0]; 4];
        for mask in 1u32..(1 << n) {
            let mut len = 0;
            let mut ranks = 0u16;
            let mut suits = 0u8;
            let mut ok = true;
            for (i, card) in cards.iter().enumerate() {
                if mask & (1 << i) == 0 {
                    continue;
                }
                let rb = 1 << card.rank.index();
                let sb = 1 << card.suit.index();
                if ranks & rb != 0 || suits & sb != 0 {
                    ok = false;
                    break;
                }
                ranks |= rb;
                suits |= sb;
                subset[len] = *card;
                len += 1;
            }
            if !ok {
                continue;
            }
            let sub = &subset[..len];
            let entry = self
                .get(prime_product(sub), all_suited(sub))
                .expect("every badugi subset has an entry");
            if best.is_none_or(|b| entry.index > b.index) {
                best = Some(entry);
            }
        }
        best.expect("single cards are always badugis")
    }

    /// Badugi-aware strength index without validation.
    #[inline]
    pub(crate) fn strength_index(&self, cards: &[Card]) -> Option<u32> {
        if self.kind == LookupKind::Badugi {
            Some(self.best_badugi(cards).index)
        } else {
            self.index_of(cards)
        }
    }
}

pub(crate) fn check_distinct(cards: &[Card]) -> Result<(), EvalError> {
    let mut seen = 0u64;
    for card in cards {
        let bit = 1u64 << card.index();
        if seen & bit != 0 {
            return Err(EvalError::DuplicateCard(*card));
        }
        seen |= bit;
    }
    Ok(())
}

/// Ordered-hands text: one `<index>\t<category>\t<cards>` line per entry,
/// weakest first, each line terminated by `\n`.
pub fn dump_ordered_hands(lookup: &Lookup) -> String {
    let mut out = String::with_capacity(lookup.len() * 24);
    for entry in lookup.entries() {
        out.push_str(&entry.to_string());
        out.push('\n');
    }
    out
}

struct Builder {
    kind: LookupKind,
    entries: Vec<HandIdentity>,
    positions: FxHashMap<u64, u32>,
    next_index: u32,
}

impl Builder {
    fn new(kind: LookupKind) -> Builder {
        Builder { kind, entries: Vec::new(), positions: FxHashMap::default(), next_index: 0 }
    }

    /// Adds one class; `suitedness` lists which keys map to it.
    fn push(&mut self, ranks: &[Rank], category: Category, suitedness: &[bool]) {
        let product: u64 = ranks.iter().map(|&r| rank_prime(r)).product();
        let mut packed = [Rank::Two; 5];
        packed[..ranks.len()].copy_from_slice(ranks);
        for &suited in suitedness {
            let pos = self.entries.len() as u32;
            self.entries.push(HandIdentity {
                index: self.next_index,
                category,
                suited,
                ranks: packed,
                len: ranks.len() as u8,
                ace_low: self.kind.ace_low(),
            });
            let previous = self.positions.insert(hash_key(product, suited), pos);
            debug_assert!(previous.is_none(), "hash collision while building {}", self.kind);
        }
        self.next_index += 1;
    }

    fn finish(self) -> Lookup {
        Lookup {
            kind: self.kind,
            entries: self.entries,
            positions: self.positions,
            class_count: self.next_index,
        }
    }
}

/// Rank-multiset shapes, e.g. `[2, 1, 1, 1]` for one pair.
const HIGH_CARD: &[usize] = &[1, 1, 1, 1, 1];
const ONE_PAIR: &[usize] = &[2, 1, 1, 1];
const TWO_PAIR: &[usize] = &[2, 2, 1];
const TRIPS: &[usize] = &[3, 1, 1];
const FULL_HOUSE: &[usize] = &[3, 2];
const QUADS: &[usize] = &[4, 1];

/// All rank multisets of the given shape drawn from `ranks`, expanded into
/// significance order (bigger groups first, then by `value` descending) and
/// sorted weakest first under high-hand comparison with `value`.
fn multisets(ranks: &[Rank], shape: &[usize], value: fn(Rank) -> u8) -> Vec<Vec<Rank>> {
    fn recurse(
        ranks: &[Rank],
        shape: &[usize],
        value: fn(Rank) -> u8,
        chosen: &mut Vec<Rank>,
        out: &mut Vec<Vec<Rank>>,
    ) {
        let depth = chosen.len();
        if depth == shape.len() {
            let mut expanded = Vec::with_capacity(5);
            for (r, &n) in chosen.iter().zip(shape) {
                expanded.extend(std::iter::repeat_n(*r, n));
            }
            out.push(expanded);
            return;
        }
        for &r in ranks {
            if chosen.contains(&r) {
                continue;
            }
            // groups of equal size are listed in descending value
            if depth > 0 && shape[depth] == shape[depth - 1] && value(r) >= value(chosen[depth - 1]) {
                continue;
            }
            chosen.push(r);
            recurse(ranks, shape, value, chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    recurse(ranks, shape, value, &mut Vec::new(), &mut out);
    out.sort_by_key(|m| m.iter().map(|&r| value(r)).collect::<Vec<_>>());
    out
}

/// All sets of `k` distinct ranks, descending by `value`, weakest first.
fn distinct_sets(ranks: &[Rank], k: usize, value: fn(Rank) -> u8) -> Vec<Vec<Rank>> {
    multisets(ranks, &vec![1; k], value)
}

fn ace_high(rank: Rank) -> u8 {
    rank.index() as u8
}

fn ace_low(rank: Rank) -> u8 {
    if rank == Rank::Ace {
        0
    } else {
        rank.index() as u8 + 1
    }
}

/// Straights as rank lists (top card first), weakest first. `wheel` is the
/// ace-low straight of the deck, listed with the ace last.
fn straights(ranks: &[Rank], wheel: [Rank; 5]) -> Vec<Vec<Rank>> {
    let mut out = vec![wheel.to_vec()];
    for w in ranks.windows(5) {
        let mut s = w.to_vec();
        s.reverse();
        out.push(s);
    }
    out
}

fn is_straight(set: &[Rank], straights: &[Vec<Rank>]) -> bool {
    straights.iter().any(|s| {
        let mut a = s.clone();
        let mut b = set.to_vec();
        a.sort();
        b.sort();
        a == b
    })
}

pub fn build_lookup(kind: LookupKind) -> Lookup {
    let mut b = Builder::new(kind);
    let all = Rank::ALL;
    match kind {
        LookupKind::Standard | LookupKind::ShortDeck => {
            let short = kind == LookupKind::ShortDeck;
            let ranks: Vec<Rank> = all.iter().copied().filter(|&r| kind.accepts(r)).collect();
            let wheel = if short {
                [Rank::Nine, Rank::Eight, Rank::Seven, Rank::Six, Rank::Ace]
            } else {
                [Rank::Five, Rank::Four, Rank::Three, Rank::Two, Rank::Ace]
            };
            let straights = straights(&ranks, wheel);
            let plain: Vec<Vec<Rank>> = distinct_sets(&ranks, 5, ace_high)
                .into_iter()
                .filter(|s| !is_straight(s, &straights))
                .collect();
            let group = |b: &mut Builder, shape: &[usize], cat: Category| {
                for m in multisets(&ranks, shape, ace_high) {
                    b.push(&m, cat, &[false]);
                }
            };
            for s in &plain {
                b.push(s, Category::HighCard, &[false]);
            }
            group(&mut b, ONE_PAIR, Category::OnePair);
            group(&mut b, TWO_PAIR, Category::TwoPair);
            group(&mut b, TRIPS, Category::ThreeOfAKind);
            for s in &straights {
                b.push(s, Category::Straight, &[false]);
            }
            if short {
                group(&mut b, FULL_HOUSE, Category::FullHouse);
                for s in &plain {
                    b.push(s, Category::Flush, &[true]);
                }
            } else {
                for s in &plain {
                    b.push(s, Category::Flush, &[true]);
                }
                group(&mut b, FULL_HOUSE, Category::FullHouse);
            }
            group(&mut b, QUADS, Category::FourOfAKind);
            for s in &straights {
                b.push(s, Category::StraightFlush, &[true]);
            }
        }
        LookupKind::Regular => {
            // Reverse of ace-low high ordering: worst shape and highest
            // cards come first.
            let shapes = [
                (QUADS, Category::FourOfAKind),
                (FULL_HOUSE, Category::FullHouse),
                (TRIPS, Category::ThreeOfAKind),
                (TWO_PAIR, Category::TwoPair),
                (ONE_PAIR, Category::OnePair),
                (HIGH_CARD, Category::HighCard),
            ];
            for (shape, cat) in shapes {
                let suitedness: &[bool] = if shape == HIGH_CARD { &[false, true] } else { &[false] };
                for m in multisets(&all, shape, ace_low).into_iter().rev() {
                    b.push(&m, cat, suitedness);
                }
            }
        }
        LookupKind::EightOrBetter => {
            let ranks: Vec<Rank> = all.iter().copied().filter(|&r| ace_low(r) <= 7).collect();
            for s in distinct_sets(&ranks, 5, ace_low).into_iter().rev() {
                b.push(&s, Category::QualifiedLow, &[false, true]);
            }
        }
        LookupKind::Badugi => {
            for size in 1..=4usize {
                // a lone card is trivially single-suited
                let suited = size == 1;
                for s in distinct_sets(&all, size, ace_low).into_iter().rev() {
                    b.push(&s, Category::Badugi(size as u8), &[suited]);
                }
            }
        }
        LookupKind::Kuhn => {
            for r in [Rank::Jack, Rank::Queen, Rank::King] {
                b.push(&[r], Category::HighCard, &[true]);
            }
        }
    }
    b.finish()
}
