//! Showdown and the settlement of the pots.

use super::{EngineError, Operation, Phase, Pot};
use crate::cards::Card;
use crate::engine::GameState;
use crate::eval::{Hand, HandType};
use crate::variants::Chips;

impl GameState {
    fn contender(&self, p: usize) -> bool {
        self.active[p] && !self.surrendered[p]
    }

    fn cards_of(&self, p: usize) -> Vec<Card> {
        self.hole_card_values(p)
    }

    /// Best hand of `p` under `hand_type`; `None` when it does not qualify.
    pub fn hand(&self, p: usize, hand_type: HandType) -> Option<Hand> {
        Hand::from_game(hand_type, &self.cards_of(p), &self.board).ok().flatten()
    }

    /// Chips each seat wins from `pot` as things stand. Surrendered hands
    /// win nothing unless nobody else is eligible.
    pub fn pot_shares(&self, pot: &Pot) -> Vec<Chips> {
        let mut shares = vec![0; self.player_count()];
        let mut contenders: Vec<usize> = pot.eligible.iter().copied().filter(|&p| self.contender(p)).collect();
        if contenders.is_empty() {
            contenders = pot.eligible.clone();
        }
        if contenders.len() == 1 {
            shares[contenders[0]] = pot.amount;
            return shares;
        }
        let sides: Vec<Vec<usize>> = self
            .variant
            .hand_types
            .iter()
            .map(|&t| {
                let hands: Vec<(usize, u32)> =
                    contenders.iter().filter_map(|&p| self.hand(p, t).map(|h| (p, h.strength()))).collect();
                let best = hands.iter().map(|h| h.1).max();
                hands.iter().filter(|h| Some(h.1) == best).map(|h| h.0).collect()
            })
            .filter(|w: &Vec<usize>| !w.is_empty())
            .collect();
        let sides = if sides.is_empty() { vec![contenders] } else { sides };
        // The first side takes the odd chip of an uneven split.
        let mut remaining = pot.amount;
        for (i, winners) in sides.iter().enumerate() {
            let left = (sides.len() - i) as Chips;
            let portion = remaining.div_ceil(left);
            remaining -= portion;
            let each = portion / winners.len() as Chips;
            let odd = (portion % winners.len() as Chips) as usize;
            for (k, &w) in winners.iter().enumerate() {
                shares[w] += each + Chips::from(k < odd);
            }
        }
        shares
    }

    fn winners(&self) -> Vec<bool> {
        let mut wins = vec![false; self.player_count()];
        for pot in &self.pots {
            for (p, share) in self.pot_shares(pot).into_iter().enumerate() {
                wins[p] |= share > 0;
            }
        }
        wins
    }

    /// Whether `p` still has an opponent for some pot.
    fn contested(&self, p: usize) -> bool {
        self.pots
            .iter()
            .filter(|pot| pot.eligible.contains(&p))
            .any(|pot| pot.eligible.iter().any(|&q| q != p && self.contender(q)))
    }

    pub(super) fn enter_showdown(&mut self) {
        self.phase = Phase::Showdown;
        let n = self.player_count();
        let contenders: Vec<usize> = (0..n).filter(|&p| self.contender(p)).collect();
        if contenders.len() <= 1 {
            return self.enter_hand_killing();
        }
        if contenders.iter().any(|&p| self.stacks[p] == 0) {
            for &p in &contenders {
                self.hole[p].iter_mut().for_each(|h| h.face_up = true);
                self.shown[p] = true;
            }
            return self.enter_hand_killing();
        }
        let start = self.round.aggressor.or(self.round.opener).unwrap_or(0);
        self.showdown_order = (0..n).map(|o| (start + o) % n).filter(|&p| self.contender(p)).collect();
        self.showdown_pos = 0;
        self.settle_showdown_turn();
    }

    fn settle_showdown_turn(&mut self) {
        while let Some(&p) = self.showdown_order.get(self.showdown_pos) {
            if self.contender(p) && self.contested(p) {
                return;
            }
            self.showdown_pos += 1;
        }
        self.enter_hand_killing();
    }

    /// Mucking would leave a pot with several eligible players and no hand.
    fn must_show(&self, p: usize) -> bool {
        self.pots.iter().filter(|pot| pot.eligible.contains(&p) && pot.eligible.len() >= 2).any(|pot| {
            !pot.eligible.iter().any(|&q| q != p && self.contender(q))
        })
    }

    /// Shows when the hand beats or ties every shown hand for some pot.
    fn worth_showing(&self, p: usize) -> bool {
        self.pots.iter().filter(|pot| pot.eligible.contains(&p)).any(|pot| {
            let shown: Vec<usize> =
                pot.eligible.iter().copied().filter(|&q| q != p && self.contender(q) && self.shown[q]).collect();
            shown.is_empty()
                || self.variant.hand_types.iter().any(|&t| match self.hand(p, t) {
                    Some(mine) => {
                        shown.iter().all(|&q| self.hand(q, t).is_none_or(|h| mine.strength() >= h.strength()))
                    }
                    None => false,
                })
        })
    }

    /// The player deciding, and whether they show. Without a choice the
    /// hand is shown only if it could win something.
    pub fn verify_show_or_muck_hole_cards(&self, show: Option<bool>) -> Result<(usize, bool), EngineError> {
        self.expect_phase(Phase::Showdown, "show-or-muck-hole-cards")?;
        let p = self.actor().ok_or(EngineError::NoActor)?;
        let forced = self.must_show(p);
        match show {
            Some(false) if forced => Err(EngineError::MuckNotAllowed),
            Some(s) => Ok((p, s)),
            None => Ok((p, forced || self.worth_showing(p))),
        }
    }

    pub fn can_show_or_muck_hole_cards(&self, show: Option<bool>) -> bool {
        self.verify_show_or_muck_hole_cards(show).is_ok()
    }

    pub fn show_or_muck_hole_cards(&mut self, show: Option<bool>) -> Result<(usize, bool), EngineError> {
        let r = self.verify_show_or_muck_hole_cards(show)?;
        self.commit(Operation::ShowOrMuckHoleCards(Some(r.1)));
        Ok(r)
    }

    pub(super) fn do_show_or_muck_hole_cards(&mut self, show: bool) {
        let p = self.actor().expect("verified actor");
        if show {
            self.hole[p].iter_mut().for_each(|h| h.face_up = true);
            self.shown[p] = true;
        } else {
            self.muck_hole(p);
            self.surrendered[p] = true;
        }
        self.showdown_pos += 1;
        self.settle_showdown_turn();
    }

    /// Contenders that win no share of any pot.
    pub fn killable_hands(&self) -> Vec<usize> {
        let wins = self.winners();
        (0..self.player_count()).filter(|&p| self.contender(p) && !wins[p]).collect()
    }

    pub(super) fn enter_hand_killing(&mut self) {
        self.phase = Phase::HandKilling;
        if self.killable_hands().is_empty() {
            self.enter_chips_pushing();
        }
    }

    pub fn verify_kill_hand(&self, player: Option<usize>) -> Result<usize, EngineError> {
        self.expect_phase(Phase::HandKilling, "kill-hand")?;
        let killable = self.killable_hands();
        let p = match player {
            Some(p) => self.check_player(p)?,
            None => *killable.first().ok_or(EngineError::NothingToKill)?,
        };
        if killable.contains(&p) {
            Ok(p)
        } else if self.contender(p) {
            Err(EngineError::HandWins(p))
        } else {
            Err(EngineError::NotKillable(p))
        }
    }

    pub fn can_kill_hand(&self, player: Option<usize>) -> bool {
        self.verify_kill_hand(player).is_ok()
    }

    pub fn kill_hand(&mut self, player: Option<usize>) -> Result<usize, EngineError> {
        let p = self.verify_kill_hand(player)?;
        self.commit(Operation::KillHand(Some(p)));
        Ok(p)
    }

    pub(super) fn do_kill_hand(&mut self, p: usize) {
        self.muck_hole(p);
        self.surrendered[p] = true;
        if self.killable_hands().is_empty() {
            self.enter_chips_pushing();
        }
    }

    pub(super) fn enter_chips_pushing(&mut self) {
        self.phase = Phase::ChipsPushing;
        if self.pots.is_empty() {
            self.enter_chips_pulling();
        }
    }

    /// Shares of the outermost pot, which is pushed next.
    pub fn verify_push_chips(&self) -> Result<Vec<Chips>, EngineError> {
        self.expect_phase(Phase::ChipsPushing, "push-chips")?;
        Ok(self.pot_shares(self.pots.last().expect("pushing phase has a pot")))
    }

    pub fn can_push_chips(&self) -> bool {
        self.verify_push_chips().is_ok()
    }

    pub fn push_chips(&mut self) -> Result<Vec<Chips>, EngineError> {
        let shares = self.verify_push_chips()?;
        self.commit(Operation::PushChips);
        Ok(shares)
    }

    pub(super) fn do_push_chips(&mut self) {
        let pot = self.pots.last().expect("verified pot").clone();
        for (p, share) in self.pot_shares(&pot).into_iter().enumerate() {
            self.bets[p] += share;
        }
        self.pots.pop();
        if self.pots.is_empty() {
            self.enter_chips_pulling();
        }
    }

    pub(super) fn enter_chips_pulling(&mut self) {
        self.phase = Phase::ChipsPulling;
        if self.bets.iter().all(|&b| b == 0) {
            self.phase = Phase::Terminal;
        }
    }

    /// The player pulling and the amount.
    pub fn verify_pull_chips(&self, player: Option<usize>) -> Result<(usize, Chips), EngineError> {
        self.expect_phase(Phase::ChipsPulling, "pull-chips")?;
        let p = match player {
            Some(p) => self.check_player(p)?,
            None => self.bets.iter().position(|&b| b > 0).ok_or(EngineError::NoChipsToPull)?,
        };
        if self.bets[p] == 0 {
            return Err(EngineError::NothingToPull(p));
        }
        Ok((p, self.bets[p]))
    }

    pub fn can_pull_chips(&self, player: Option<usize>) -> bool {
        self.verify_pull_chips(player).is_ok()
    }

    pub fn pull_chips(&mut self, player: Option<usize>) -> Result<(usize, Chips), EngineError> {
        let r = self.verify_pull_chips(player)?;
        self.commit(Operation::PullChips(Some(r.0)));
        Ok(r)
    }

    pub(super) fn do_pull_chips(&mut self, p: usize) {
        self.stacks[p] += std::mem::take(&mut self.bets[p]);
        if self.bets.iter().all(|&b| b == 0) {
            self.phase = Phase::Terminal;
        }
    }
}
