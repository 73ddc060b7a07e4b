//! Dealing streets, including burns and draws.

use super::{EngineError, HoleCard, Operation, Phase};
use crate::cards::Card;
use crate::engine::GameState;

impl GameState {
    pub(super) fn after_deal_step(&mut self) {
        let done = !self.burn_pending
            && !self.discard_pending.contains(&true)
            && self.hole_owed.iter().all(|&o| o == 0)
            && self.board_owed == 0;
        if done {
            self.enter_betting();
        }
    }

    fn check_dealing(&self, operation: &'static str) -> Result<(), EngineError> {
        self.expect_phase(Phase::Dealing, operation)?;
        if self.burn_pending {
            return Err(EngineError::BurnPending);
        }
        if self.discard_pending.contains(&true) {
            return Err(EngineError::DiscardsPending);
        }
        Ok(())
    }

    /// Explicit cards must be distinct cards still in the deck, between 1
    /// and `max` of them.
    fn check_explicit(&self, cards: &[Card], max: usize) -> Result<(), EngineError> {
        if cards.is_empty() || cards.len() > max {
            return Err(EngineError::WrongCardCount { max, actual: cards.len() });
        }
        for (i, c) in cards.iter().enumerate() {
            if cards[..i].contains(c) {
                return Err(EngineError::DuplicateCard(*c));
            }
            if !self.deck.contains(c) {
                return Err(EngineError::CardNotInDeck(*c));
            }
        }
        Ok(())
    }

    /// The burned card: the given one, or the top of the deck.
    pub fn verify_burn_card(&self, card: Option<Card>) -> Result<Card, EngineError> {
        self.expect_phase(Phase::Dealing, "burn-card")?;
        if !self.burn_pending {
            return Err(EngineError::BurnNotPending);
        }
        match card {
            Some(c) if self.deck.contains(&c) => Ok(c),
            Some(c) => Err(EngineError::CardNotInDeck(c)),
            None => self.deck.front().copied().ok_or(EngineError::DeckExhausted),
        }
    }

    pub fn can_burn_card(&self, card: Option<Card>) -> bool {
        self.verify_burn_card(card).is_ok()
    }

    pub fn burn_card(&mut self, card: Option<Card>) -> Result<Card, EngineError> {
        let c = self.verify_burn_card(card)?;
        self.commit(Operation::BurnCard(Some(c)));
        Ok(c)
    }

    pub(super) fn do_burn_card(&mut self, card: Card) {
        self.take_from_deck(card);
        self.burned.push(card);
        self.burn_pending = false;
        self.after_deal_step();
    }

    /// Next player to stand pat or discard, in seat order.
    pub fn discard_turn(&self) -> Option<usize> {
        if self.phase != Phase::Dealing || self.burn_pending {
            return None;
        }
        self.discard_pending.iter().position(|&d| d)
    }

    /// The player standing pat (empty `cards`) or discarding.
    pub fn verify_stand_pat_or_discard(&self, cards: &[Card]) -> Result<usize, EngineError> {
        self.expect_phase(Phase::Dealing, "stand-pat-or-discard")?;
        if self.burn_pending {
            return Err(EngineError::BurnPending);
        }
        let p = self.discard_turn().ok_or(EngineError::NoDiscardTurn)?;
        for (i, c) in cards.iter().enumerate() {
            if cards[..i].contains(c) {
                return Err(EngineError::DuplicateCard(*c));
            }
            if !self.hole[p].iter().any(|h| h.card == *c) {
                return Err(EngineError::CardNotHeld(*c));
            }
        }
        Ok(p)
    }

    pub fn can_stand_pat_or_discard(&self, cards: &[Card]) -> bool {
        self.verify_stand_pat_or_discard(cards).is_ok()
    }

    pub fn stand_pat_or_discard(&mut self, cards: &[Card]) -> Result<usize, EngineError> {
        let p = self.verify_stand_pat_or_discard(cards)?;
        self.commit(Operation::StandPatOrDiscard(cards.to_vec()));
        Ok(p)
    }

    pub(super) fn do_stand_pat_or_discard(&mut self, cards: &[Card]) {
        let p = self.discard_turn().expect("verified discard turn");
        self.hole[p].retain(|h| !cards.contains(&h.card));
        self.mucked.extend_from_slice(cards);
        self.hole_owed[p] += cards.len();
        self.discard_pending[p] = false;
        if !self.discard_pending.contains(&true) {
            let needed = self.hole_owed.iter().sum::<usize>() + self.board_owed;
            self.replenish(needed);
        }
        self.after_deal_step();
    }

    /// Player next in line for a hole card: fewest received this street,
    /// then lowest seat.
    pub fn next_hole_recipient(&self) -> Option<usize> {
        (0..self.player_count()).filter(|&i| self.hole_owed[i] > 0).min_by_key(|&i| (self.dealt_this_street[i], i))
    }

    /// The cards and recipient. Without explicit cards one card comes off
    /// the top of the deck.
    pub fn verify_deal_hole(
        &self,
        cards: Option<&[Card]>,
        player: Option<usize>,
    ) -> Result<(Vec<Card>, usize), EngineError> {
        self.check_dealing("deal-hole")?;
        let next = self.next_hole_recipient().ok_or(EngineError::NoHoleCardsDue)?;
        let p = match player {
            Some(p) => self.check_player(p)?,
            None => next,
        };
        let owed = self.hole_owed[p];
        if owed == 0 {
            return Err(EngineError::PlayerFullyDealt(p));
        }
        match cards {
            Some(cs) => {
                self.check_explicit(cs, owed)?;
                Ok((cs.to_vec(), p))
            }
            None => Ok((vec![*self.deck.front().ok_or(EngineError::DeckExhausted)?], p)),
        }
    }

    pub fn can_deal_hole(&self, cards: Option<&[Card]>, player: Option<usize>) -> bool {
        self.verify_deal_hole(cards, player).is_ok()
    }

    pub fn deal_hole(
        &mut self,
        cards: Option<&[Card]>,
        player: Option<usize>,
    ) -> Result<(Vec<Card>, usize), EngineError> {
        let (cs, p) = self.verify_deal_hole(cards, player)?;
        self.commit(Operation::DealHole { cards: Some(cs.clone()), player: Some(p) });
        Ok((cs, p))
    }

    pub(super) fn do_deal_hole(&mut self, cards: &[Card], p: usize) {
        let street = &self.variant.streets[self.street.expect("dealing happens on a street")];
        let (draw, down) = (street.draw, street.hole_down);
        for &card in cards {
            self.take_from_deck(card);
            let face_up = !draw && self.dealt_this_street[p] >= down;
            self.hole[p].push(HoleCard { card, face_up });
            self.dealt_this_street[p] += 1;
            self.hole_owed[p] -= 1;
        }
        self.after_deal_step();
    }

    /// The board cards. Without explicit cards every owed card comes off
    /// the top of the deck.
    pub fn verify_deal_board(&self, cards: Option<&[Card]>) -> Result<Vec<Card>, EngineError> {
        self.check_dealing("deal-board")?;
        if self.hole_owed.iter().any(|&o| o > 0) {
            return Err(EngineError::HoleCardsPending);
        }
        if self.board_owed == 0 {
            return Err(EngineError::NoBoardCardsDue);
        }
        match cards {
            Some(cs) => {
                self.check_explicit(cs, self.board_owed)?;
                Ok(cs.to_vec())
            }
            None if self.deck.len() >= self.board_owed => Ok(self.deck.iter().take(self.board_owed).copied().collect()),
            None => Err(EngineError::DeckExhausted),
        }
    }

    pub fn can_deal_board(&self, cards: Option<&[Card]>) -> bool {
        self.verify_deal_board(cards).is_ok()
    }

    pub fn deal_board(&mut self, cards: Option<&[Card]>) -> Result<Vec<Card>, EngineError> {
        let cs = self.verify_deal_board(cards)?;
        self.commit(Operation::DealBoard(Some(cs.clone())));
        Ok(cs)
    }

    pub(super) fn do_deal_board(&mut self, cards: &[Card]) {
        for &card in cards {
            self.take_from_deck(card);
            self.board.push(card);
        }
        self.board_owed -= cards.len();
        self.after_deal_step();
    }
}
