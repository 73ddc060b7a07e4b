//! Forced bets and bet collection.

use super::{EngineError, Operation, Phase, Record};
use crate::engine::GameState;
use crate::variants::Chips;

impl GameState {
    pub(super) fn enter_ante_posting(&mut self) {
        self.phase = Phase::AntePosting;
        for i in 0..self.player_count() {
            self.ante_owed[i] = self.antes[i] > 0;
        }
        if !self.ante_owed.contains(&true) {
            self.enter_bet_collection();
        }
    }

    pub(super) fn enter_bet_collection(&mut self) {
        self.phase = Phase::BetCollection;
        if self.bets.iter().all(|&b| b == 0) {
            self.after_collection();
        }
    }

    pub(super) fn enter_blind_posting(&mut self) {
        self.phase = Phase::BlindOrStraddlePosting;
        for i in 0..self.player_count() {
            self.blind_owed[i] = self.blinds[i] > 0;
        }
        if !self.blind_owed.contains(&true) {
            self.enter_street(0);
        }
    }

    /// Seat and amount; the amount is capped by the stack.
    pub fn verify_post_ante(&self, player: Option<usize>) -> Result<(usize, Chips), EngineError> {
        self.expect_phase(Phase::AntePosting, "post-ante")?;
        let p = match player {
            Some(p) => self.check_player(p)?,
            None => self.ante_owed.iter().position(|&o| o).ok_or(EngineError::NothingOwed(0))?,
        };
        if !self.ante_owed[p] {
            return Err(EngineError::NothingOwed(p));
        }
        Ok((p, self.antes[p].min(self.stacks[p])))
    }

    pub fn can_post_ante(&self, player: Option<usize>) -> bool {
        self.verify_post_ante(player).is_ok()
    }

    pub fn post_ante(&mut self, player: Option<usize>) -> Result<(usize, Chips), EngineError> {
        let r = self.verify_post_ante(player)?;
        self.commit(Operation::PostAnte(Some(r.0)));
        Ok(r)
    }

    pub(super) fn do_post_ante(&mut self, p: usize) {
        self.wager(p, self.antes[p]);
        self.ante_owed[p] = false;
        if !self.ante_owed.contains(&true) {
            self.enter_bet_collection();
        }
    }

    pub fn verify_collect_bets(&self) -> Result<(), EngineError> {
        self.expect_phase(Phase::BetCollection, "collect-bets")
    }

    pub fn can_collect_bets(&self) -> bool {
        self.verify_collect_bets().is_ok()
    }

    pub fn collect_bets(&mut self) -> Result<(), EngineError> {
        self.verify_collect_bets()?;
        self.commit(Operation::CollectBets);
        Ok(())
    }

    pub(super) fn do_collect_bets(&mut self) {
        for i in 0..self.player_count() {
            self.contributions[i] += std::mem::take(&mut self.bets[i]);
        }
        self.refresh_pots();
        self.collected_totals.push(self.total_pot_amount());
        self.after_collection();
    }

    pub fn verify_post_blind_or_straddle(&self, player: Option<usize>) -> Result<(usize, Chips), EngineError> {
        self.expect_phase(Phase::BlindOrStraddlePosting, "post-blind-or-straddle")?;
        let p = match player {
            Some(p) => self.check_player(p)?,
            None => self.blind_owed.iter().position(|&o| o).ok_or(EngineError::NothingOwed(0))?,
        };
        if !self.blind_owed[p] {
            return Err(EngineError::NothingOwed(p));
        }
        Ok((p, self.blinds[p].min(self.stacks[p])))
    }

    pub fn can_post_blind_or_straddle(&self, player: Option<usize>) -> bool {
        self.verify_post_blind_or_straddle(player).is_ok()
    }

    pub fn post_blind_or_straddle(&mut self, player: Option<usize>) -> Result<(usize, Chips), EngineError> {
        let r = self.verify_post_blind_or_straddle(player)?;
        self.commit(Operation::PostBlindOrStraddle(Some(r.0)));
        Ok(r)
    }

    pub(super) fn do_post_blind_or_straddle(&mut self, p: usize) {
        self.wager(p, self.blinds[p]);
        self.blind_owed[p] = false;
        if !self.blind_owed.contains(&true) {
            self.enter_street(0);
        }
    }

    /// Runs and logs a verified manual operation, then the automations that
    /// follow.
    pub(super) fn commit(&mut self, resolved: Operation) {
        self.execute_resolved(&resolved);
        self.log.push(Record { operation: resolved, automatic: false });
        self.run_automations();
    }
}
