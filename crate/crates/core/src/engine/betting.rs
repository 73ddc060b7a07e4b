//! Betting rounds: opener selection plus every voluntary or forced betting
//! action.

use super::state::Round;
use super::{EngineError, Operation, Phase};
use crate::cards::{Card, Rank};
use crate::engine::GameState;
use crate::eval::HandType;
use crate::variants::{BettingStructure, Chips, OpenerRule};

/// Comparable strength of exposed cards; greater is better. Straights and
/// flushes do not count.
fn exposed_key(cards: &[Card], low: bool) -> Vec<i32> {
    let value = |r: Rank| {
        if low {
            // Ace plays low.
            if r == Rank::Ace { 0 } else { r.index() as i32 + 1 }
        } else {
            r.index() as i32
        }
    };
    let mut counts = [0usize; 13];
    for c in cards {
        counts[c.rank.index()] += 1;
    }
    let mut groups: Vec<(usize, i32)> =
        Rank::ALL.iter().filter(|r| counts[r.index()] > 0).map(|&r| (counts[r.index()], value(r))).collect();
    if low {
        // Fewer paired cards first, then the lowest high card.
        groups.sort_by_key(|g| std::cmp::Reverse(g.1));
        let paired = cards.len() - groups.len();
        let mut key = vec![-(paired as i32)];
        key.extend(groups.iter().map(|g| -g.1));
        key
    } else {
        groups.sort_by(|a, b| b.cmp(a));
        let shape = match groups.first().map_or(0, |g| g.0) {
            4 => 4,
            3 => 3,
            2 if groups.get(1).is_some_and(|g| g.0 == 2) => 2,
            2 => 1,
            _ => 0,
        };
        let mut key = vec![shape];
        key.extend(groups.iter().map(|g| g.1));
        key
    }
}

fn is_low(hand_type: HandType) -> bool {
    matches!(
        hand_type,
        HandType::StandardLow
            | HandType::EightOrBetterLow
            | HandType::OmahaEightOrBetterLow
            | HandType::RegularLow
            | HandType::OmahaRegularLow
            | HandType::Badugi
    )
}

impl GameState {
    fn able(&self, p: usize) -> bool {
        self.active[p] && self.stacks[p] > 0
    }

    fn upcards(&self, p: usize) -> Vec<Card> {
        self.hole[p].iter().filter(|h| h.face_up).map(|h| h.card).collect()
    }

    /// Seat that must bring in on the first street.
    pub(super) fn bring_in_seat(&self, rule: OpenerRule) -> usize {
        let key = |p: usize| {
            let card = *self.upcards(p).last().expect("bring-in streets deal an upcard");
            let rank = if rule == OpenerRule::BringInHighUpcard && card.rank == Rank::Ace {
                -1
            } else {
                card.rank.index() as i32
            };
            (rank, card.suit.index() as i32)
        };
        let seats = (0..self.player_count()).filter(|&p| self.active[p]);
        match rule {
            OpenerRule::BringInHighUpcard => seats.max_by_key(|&p| (key(p), std::cmp::Reverse(p))),
            _ => seats.min_by_key(|&p| (key(p), p)),
        }
        .expect("an active player exists")
    }

    /// Seat where the action starts under `rule`, ignoring ability to act.
    fn opening_seat(&self, rule: OpenerRule) -> usize {
        let n = self.player_count();
        match rule {
            OpenerRule::PositionAfterBlinds => self.blinds.iter().rposition(|&b| b > 0).map_or(0, |i| (i + 1) % n),
            OpenerRule::FirstActiveAfterButton => 0,
            OpenerRule::BringInLowUpcard | OpenerRule::BringInHighUpcard => self.bring_in_seat(rule),
            OpenerRule::BestExposedHand => {
                let low = is_low(self.variant.hand_types[0]);
                let mut best: Option<(Vec<i32>, usize)> = None;
                for p in (0..n).filter(|&p| self.active[p]) {
                    let key = exposed_key(&self.upcards(p), low);
                    if best.as_ref().is_none_or(|(k, _)| key > *k) {
                        best = Some((key, p));
                    }
                }
                best.map_or(0, |(_, p)| p)
            }
        }
    }

    pub(super) fn enter_betting(&mut self) {
        let n = self.player_count();
        let street = self.variant.streets[self.street.expect("betting happens on a street")].clone();
        let max_bet = self.max_bet();
        self.phase = Phase::Betting;
        self.round = Round {
            actor: None,
            needs_action: (0..n).map(|p| self.able(p)).collect(),
            may_raise: (0..n).map(|p| self.able(p)).collect(),
            increment: match self.variant.betting {
                BettingStructure::FixedLimit => street.min_bet,
                _ => street.min_bet.max(max_bet),
            },
            raises: 0,
            aggressor: None,
            opener: None,
            bring_in_player: None,
        };
        let able: Vec<usize> = (0..n).filter(|&p| self.able(p)).collect();
        let nothing_to_do = self.active_count() <= 1
            || able.is_empty()
            || (able.len() == 1 && self.bets[able[0]] >= max_bet);
        if nothing_to_do {
            return self.enter_bet_collection();
        }
        let start = self.opening_seat(street.opener);
        if street.opener.is_bring_in() && self.bring_in > 0 && self.able(start) {
            self.round.bring_in_player = Some(start);
            self.round.actor = Some(start);
            self.round.opener = Some(start);
            return;
        }
        match self.next_to_act(start, true) {
            Some(p) => {
                self.round.actor = Some(p);
                self.round.opener = Some(p);
            }
            None => self.enter_bet_collection(),
        }
    }

    /// First seat from `from` (inclusive when `inclusive`) that still has
    /// to act.
    fn next_to_act(&self, from: usize, inclusive: bool) -> Option<usize> {
        let n = self.player_count();
        let max_bet = self.max_bet();
        let able = (0..n).filter(|&p| self.able(p)).count();
        let skip = usize::from(!inclusive);
        (skip..n + skip).map(|o| (from + o) % n).find(|&q| {
            self.able(q)
                && (self.bets[q] < max_bet || (self.round.needs_action[q] && !(able == 1 && self.bets[q] >= max_bet)))
        })
    }

    fn advance_from(&mut self, p: usize) {
        if self.active_count() <= 1 {
            return self.end_betting();
        }
        match self.next_to_act(p, false) {
            Some(q) => self.round.actor = Some(q),
            None => self.end_betting(),
        }
    }

    fn end_betting(&mut self) {
        self.round.actor = None;
        self.enter_bet_collection();
    }

    fn current_actor(&self, operation: &'static str) -> Result<usize, EngineError> {
        self.expect_phase(Phase::Betting, operation)?;
        self.round.actor.ok_or(EngineError::NoActor)
    }

    /// The folding player.
    pub fn verify_fold(&self) -> Result<usize, EngineError> {
        let p = self.current_actor("fold")?;
        if self.bets[p] >= self.max_bet() {
            return Err(EngineError::NoWagerToFold);
        }
        Ok(p)
    }

    pub fn can_fold(&self) -> bool {
        self.verify_fold().is_ok()
    }

    pub fn fold(&mut self) -> Result<usize, EngineError> {
        let p = self.verify_fold()?;
        self.commit(Operation::Fold);
        Ok(p)
    }

    pub(super) fn do_fold(&mut self) {
        let p = self.round.actor.expect("verified actor");
        self.active[p] = false;
        self.round.needs_action[p] = false;
        self.muck_hole(p);
        self.refresh_pots();
        self.advance_from(p);
    }

    /// The acting player and the chips the check or call puts in.
    pub fn verify_check_or_call(&self) -> Result<(usize, Chips), EngineError> {
        let p = self.current_actor("check-or-call")?;
        if self.round.bring_in_player.is_some() {
            return Err(EngineError::BringInPending);
        }
        Ok((p, (self.max_bet() - self.bets[p]).min(self.stacks[p])))
    }

    pub fn can_check_or_call(&self) -> bool {
        self.verify_check_or_call().is_ok()
    }

    pub fn check_or_call(&mut self) -> Result<(usize, Chips), EngineError> {
        let r = self.verify_check_or_call()?;
        self.commit(Operation::CheckOrCall);
        Ok(r)
    }

    pub(super) fn do_check_or_call(&mut self) {
        let p = self.round.actor.expect("verified actor");
        self.wager(p, self.max_bet() - self.bets[p]);
        self.round.needs_action[p] = false;
        self.round.may_raise[p] = false;
        self.advance_from(p);
    }

    /// The player posting the bring-in and its amount.
    pub fn verify_post_bring_in(&self) -> Result<(usize, Chips), EngineError> {
        self.current_actor("post-bring-in")?;
        let p = self.round.bring_in_player.ok_or(EngineError::NoBringIn)?;
        Ok((p, self.bring_in.min(self.stacks[p])))
    }

    pub fn can_post_bring_in(&self) -> bool {
        self.verify_post_bring_in().is_ok()
    }

    pub fn post_bring_in(&mut self) -> Result<(usize, Chips), EngineError> {
        let r = self.verify_post_bring_in()?;
        self.commit(Operation::PostBringIn);
        Ok(r)
    }

    pub(super) fn do_post_bring_in(&mut self) {
        let p = self.round.bring_in_player.take().expect("verified bring-in");
        self.wager(p, self.bring_in);
        self.round.needs_action[p] = false;
        self.round.may_raise[p] = false;
        self.advance_from(p);
    }

    /// Legal `complete_bet_or_raise_to` range for the actor, both ends
    /// capped by the actor's stack.
    pub fn raise_bounds(&self) -> Result<(usize, Chips, Chips), EngineError> {
        let p = self.current_actor("complete-bet-or-raise-to")?;
        let street = self.street().expect("betting happens on a street");
        if !self.round.may_raise[p] {
            return Err(EngineError::RaiseNotAllowed("the action was not reopened"));
        }
        if !(0..self.player_count()).any(|q| q != p && self.able(q)) {
            return Err(EngineError::RaiseNotAllowed("no opponent can respond"));
        }
        if street.max_raises.is_some_and(|cap| self.round.raises >= cap) {
            return Err(EngineError::RaiseNotAllowed("the raise cap is reached"));
        }
        let max_bet = self.max_bet();
        let all_in = self.bets[p] + self.stacks[p];
        if all_in <= max_bet {
            return Err(EngineError::RaiseNotAllowed("the stack only covers a call"));
        }
        let min_to = if max_bet < street.min_bet { street.min_bet } else { max_bet + self.round.increment };
        let max_to = match self.variant.betting {
            BettingStructure::NoLimit => all_in,
            BettingStructure::FixedLimit => min_to,
            BettingStructure::PotLimit => {
                let call = max_bet - self.bets[p];
                let pot = self.total_pot_amount() + self.bets.iter().sum::<Chips>() + call;
                min_to.max(max_bet + pot)
            }
        };
        Ok((p, min_to.min(all_in), max_to.min(all_in)))
    }

    /// Smallest legal `complete_bet_or_raise_to` amount.
    pub fn min_completion_betting_or_raising_to(&self) -> Option<Chips> {
        self.raise_bounds().ok().map(|b| b.1)
    }

    /// Largest legal `complete_bet_or_raise_to` amount.
    pub fn max_completion_betting_or_raising_to(&self) -> Option<Chips> {
        self.raise_bounds().ok().map(|b| b.2)
    }

    /// The acting player and the total bet after the action. Without an
    /// amount the minimum is used.
    pub fn verify_complete_bet_or_raise_to(&self, amount: Option<Chips>) -> Result<(usize, Chips), EngineError> {
        let (p, min, max) = self.raise_bounds()?;
        let to = amount.unwrap_or(min);
        if to < min {
            return Err(EngineError::BelowMinimum { amount: to, minimum: min });
        }
        if to > max {
            return Err(EngineError::AboveMaximum { amount: to, maximum: max });
        }
        Ok((p, to))
    }

    pub fn can_complete_bet_or_raise_to(&self, amount: Option<Chips>) -> bool {
        self.verify_complete_bet_or_raise_to(amount).is_ok()
    }

    pub fn complete_bet_or_raise_to(&mut self, amount: Option<Chips>) -> Result<(usize, Chips), EngineError> {
        let r = self.verify_complete_bet_or_raise_to(amount)?;
        self.commit(Operation::CompleteBetOrRaiseTo(Some(r.1)));
        Ok(r)
    }

    pub(super) fn do_complete_bet_or_raise_to(&mut self, to: Chips) {
        let p = self.round.actor.expect("verified actor");
        let min_bet = self.street().expect("betting happens on a street").min_bet;
        let max_bet = self.max_bet();
        let raise_by = to - max_bet;
        let full = if max_bet < min_bet { to >= min_bet } else { raise_by >= self.round.increment };
        self.wager(p, to - self.bets[p]);
        if full && self.variant.betting != BettingStructure::FixedLimit {
            self.round.increment = raise_by.max(min_bet);
        }
        let others: Vec<usize> = (0..self.player_count()).filter(|&q| q != p && self.able(q)).collect();
        for q in others {
            self.round.needs_action[q] = true;
            if full {
                self.round.may_raise[q] = true;
            }
        }
        self.round.needs_action[p] = false;
        self.round.may_raise[p] = false;
        self.round.raises += 1;
        self.round.aggressor = Some(p);
        self.round.bring_in_player = None;
        self.advance_from(p);
    }
}
