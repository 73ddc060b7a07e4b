use std::cmp::Ordering;
use std::fmt;

use crate::cards::Card;
use crate::eval::lookup::{check_distinct, HandIdentity, Lookup, LookupKind};
use crate::eval::EvalError;

/// Which cards a hand may be made from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Selection {
    /// Any `arity` cards from hole and board together.
    Any,
    /// Exactly `hole` hole cards plus `board` board cards.
    Exact { hole: usize, board: usize },
    /// Hole cards only; the board is ignored.
    HoleOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HandType {
    StandardHigh,
    /// Deuce-to-seven: standard ranking, reversed.
    StandardLow,
    GreekHoldem,
    OmahaHoldem,
    EightOrBetterLow,
    OmahaEightOrBetterLow,
    ShortDeckHoldem,
    RegularLow,
    OmahaRegularLow,
    Badugi,
    KuhnPoker,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HandTypeSpec {
    pub name: &'static str,
    pub lookup: LookupKind,
    pub arity: usize,
    pub selection: Selection,
    /// Selections that miss the table do not make a hand.
    pub qualified: bool,
    /// Strength runs opposite to the table index.
    pub reversed: bool,
}

impl HandType {
    pub const ALL: [HandType; 11] = [
        HandType::StandardHigh,
        HandType::StandardLow,
        HandType::GreekHoldem,
        HandType::OmahaHoldem,
        HandType::EightOrBetterLow,
        HandType::OmahaEightOrBetterLow,
        HandType::ShortDeckHoldem,
        HandType::RegularLow,
        HandType::OmahaRegularLow,
        HandType::Badugi,
        HandType::KuhnPoker,
    ];

    pub fn spec(self) -> HandTypeSpec {
        use HandType::*;
        let omaha = Selection::Exact { hole: 2, board: 3 };
        let (name, lookup, selection, reversed) = match self {
            StandardHigh => ("standard-high", LookupKind::Standard, Selection::Any, false),
            StandardLow => ("standard-low", LookupKind::Standard, Selection::Any, true),
            GreekHoldem => ("greek-holdem", LookupKind::Standard, omaha, false),
            OmahaHoldem => ("omaha-holdem", LookupKind::Standard, omaha, false),
            EightOrBetterLow => ("eight-or-better-low", LookupKind::EightOrBetter, Selection::Any, false),
            OmahaEightOrBetterLow => {
                ("omaha-eight-or-better-low", LookupKind::EightOrBetter, omaha, false)
            }
            ShortDeckHoldem => ("short-deck-holdem", LookupKind::ShortDeck, Selection::Any, false),
            RegularLow => ("regular-low", LookupKind::Regular, Selection::Any, false),
            OmahaRegularLow => ("omaha-regular-low", LookupKind::Regular, omaha, false),
            Badugi => ("badugi", LookupKind::Badugi, Selection::HoleOnly, false),
            KuhnPoker => ("kuhn-poker", LookupKind::Kuhn, Selection::HoleOnly, false),
        };
        HandTypeSpec {
            name,
            lookup,
            arity: lookup.arity(),
            selection,
            qualified: lookup.is_qualified(),
            reversed,
        }
    }

    pub fn name(self) -> &'static str {
        self.spec().name
    }

    /// Accepts canonical names plus a few short aliases (`standard`,
    /// `omaha`, `razz`, `2-7`).
    pub fn from_name(name: &str) -> Result<HandType, EvalError> {
        let norm = name.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        let alias = match norm.as_str() {
            "standard" | "high" | "texas-holdem" => Some(HandType::StandardHigh),
            "omaha" => Some(HandType::OmahaHoldem),
            "greek" => Some(HandType::GreekHoldem),
            "razz" | "regular" => Some(HandType::RegularLow),
            "2-7" | "deuce-to-seven" => Some(HandType::StandardLow),
            "eight-or-better" => Some(HandType::EightOrBetterLow),
            "short-deck" => Some(HandType::ShortDeckHoldem),
            "kuhn" => Some(HandType::KuhnPoker),
            _ => None,
        };
        alias
            .or_else(|| HandType::ALL.into_iter().find(|t| t.name() == norm))
            .ok_or_else(|| EvalError::UnknownHandType(name.to_string()))
    }

    fn table(self) -> &'static Lookup {
        self.spec().lookup.lookup()
    }

    fn strength(self, index: u32) -> u32 {
        if self.spec().reversed {
            self.table().max_index() - index
        } else {
            index
        }
    }
}

impl fmt::Display for HandType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An evaluated hand. Hands of one type compare by strength; hands of
/// different types are unordered.
#[derive(Debug, Clone)]
pub struct Hand {
    hand_type: HandType,
    cards: Vec<Card>,
    identity: HandIdentity,
    strength: u32,
}

impl Hand {
    /// Evaluates exactly `arity` cards as a hand of `hand_type`.
    pub fn from_cards(hand_type: HandType, cards: &[Card]) -> Result<Hand, EvalError> {
        let identity = hand_type.table().evaluate(cards)?;
        Ok(Hand {
            hand_type,
            cards: cards.to_vec(),
            strength: hand_type.strength(identity.index),
            identity,
        })
    }

    /// Strongest hand over every selection the hand type allows. `Ok(None)`
    /// means a qualified type found no qualifying selection.
    pub fn from_game(hand_type: HandType, hole: &[Card], board: &[Card]) -> Result<Option<Hand>, EvalError> {
        let spec = hand_type.spec();
        let all: Vec<Card> = hole.iter().chain(board).copied().collect();
        check_distinct(&all)?;
        if let Some(card) = all.iter().find(|c| !spec.lookup.accepts(c.rank)) {
            return Err(EvalError::OutsideDeck { card: *card, kind: spec.lookup });
        }
        let incompatible = EvalError::IncompatibleCounts { hand_type, hole: hole.len(), board: board.len() };
        let table = hand_type.table();
        let mut best: Option<(u32, Vec<Card>)> = None;
        let mut consider = |cards: &[Card]| {
            if let Some(index) = table.strength_index(cards) {
                let strength = hand_type.strength(index);
                if best.as_ref().is_none_or(|(s, _)| strength > *s) {
                    best = Some((strength, cards.to_vec()));
                }
            }
        };
        match spec.selection {
            Selection::Any => {
                if all.len() < spec.arity {
                    return Err(incompatible);
                }
                for_each_combination(&all, spec.arity, &mut |c| consider(c));
            }
            Selection::HoleOnly => {
                if hole.len() < spec.arity {
                    return Err(incompatible);
                }
                for_each_combination(hole, spec.arity, &mut |c| consider(c));
            }
            Selection::Exact { hole: h, board: b } => {
                if hole.len() < h || board.len() < b {
                    return Err(incompatible);
                }
                let mut buf = Vec::with_capacity(h + b);
                for_each_combination(hole, h, &mut |hs| {
                    for_each_combination(board, b, &mut |bs| {
                        buf.clear();
                        buf.extend_from_slice(hs);
                        buf.extend_from_slice(bs);
                        consider(&buf);
                    });
                });
            }
        }
        match best {
            Some((_, cards)) => Hand::from_cards(hand_type, &cards).map(Some),
            None if spec.qualified => Ok(None),
            None => unreachable!("unqualified hand types always make a hand"),
        }
    }

    pub fn hand_type(&self) -> HandType {
        self.hand_type
    }

    /// The cards that were evaluated.
    pub fn cards(&self) -> &[Card] {
        &self.cards
    }

    pub fn identity(&self) -> &HandIdentity {
        &self.identity
    }

    /// Greater is stronger within one hand type.
    pub fn strength(&self) -> u32 {
        self.strength
    }
}

impl PartialEq for Hand {
    fn eq(&self, other: &Self) -> bool {
        self.hand_type == other.hand_type && self.strength == other.strength
    }
}

impl PartialOrd for Hand {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.hand_type == other.hand_type).then(|| self.strength.cmp(&other.strength))
    }
}

pub fn compare_hands(a: &Hand, b: &Hand) -> Result<Ordering, EvalError> {
    a.partial_cmp(b)
        .ok_or(EvalError::MismatchedTypes(a.hand_type, b.hand_type))
}

/// Calls `f` with every `k`-subset of `items` in lexicographic order.
pub(crate) fn for_each_combination<T: Copy>(items: &[T], k: usize, f: &mut impl FnMut(&[T])) {
    let n = items.len();
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<T> = idx.iter().map(|&i| items[i]).collect();
    loop {
        f(&buf);
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i - 1..k {
            buf[j] = items[idx[j]];
        }
    }
}
