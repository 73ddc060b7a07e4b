use std::collections::VecDeque;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{
    layer_pots, Automation, AutomationSet, DeckSource, EngineError, HoleCard, Operation, Phase, Pot, Record,
    StateConfig,
};
use crate::cards::{create_deck, shuffle_deck, shuffle_with, Card};
use crate::variants::{Chips, Street, VariantDefinition};

/// Mixed into the deck seed for the reshuffle stream so it differs from the
/// initial shuffle.
const RESHUFFLE_SALT: u64 = 0x5DEE_CE66_D1CE_5EED;

/// Per-street betting bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(super) struct Round {
    pub actor: Option<usize>,
    pub needs_action: Vec<bool>,
    pub may_raise: Vec<bool>,
    /// Size of the last full bet or raise.
    pub increment: Chips,
    /// Aggressive actions so far, completions included; forced bets are not
    /// counted.
    pub raises: u32,
    pub aggressor: Option<usize>,
    pub opener: Option<usize>,
    /// Set while the designated player still has to bring in or complete.
    pub bring_in_player: Option<usize>,
}

/// A hand in progress. Cloning yields an independent copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameState {
    pub(super) variant: VariantDefinition,
    pub(super) automations: AutomationSet,
    pub(super) antes: Vec<Chips>,
    pub(super) blinds: Vec<Chips>,
    pub(super) bring_in: Chips,
    pub(super) starting_stacks: Vec<Chips>,
    pub(super) rng: ChaCha8Rng,

    /// Front is the top card.
    pub(super) deck: VecDeque<Card>,
    pub(super) board: Vec<Card>,
    pub(super) burned: Vec<Card>,
    pub(super) mucked: Vec<Card>,
    pub(super) hole: Vec<Vec<HoleCard>>,

    pub(super) stacks: Vec<Chips>,
    pub(super) bets: Vec<Chips>,
    /// Chips collected from each seat into the pots so far.
    pub(super) contributions: Vec<Chips>,
    pub(super) pots: Vec<Pot>,
    /// Not folded.
    pub(super) active: Vec<bool>,
    /// Mucked or killed after the betting ended.
    pub(super) surrendered: Vec<bool>,
    pub(super) shown: Vec<bool>,

    pub(super) phase: Phase,
    pub(super) street: Option<usize>,

    pub(super) ante_owed: Vec<bool>,
    pub(super) blind_owed: Vec<bool>,

    pub(super) burn_pending: bool,
    pub(super) discard_pending: Vec<bool>,
    pub(super) hole_owed: Vec<usize>,
    pub(super) dealt_this_street: Vec<usize>,
    pub(super) board_owed: usize,

    pub(super) round: Round,

    pub(super) showdown_order: Vec<usize>,
    pub(super) showdown_pos: usize,

    pub(super) log: Vec<Record>,
    /// Total in the pots after each bet collection.
    pub(super) collected_totals: Vec<Chips>,
}

impl GameState {
    /// Creates a hand and runs every automated operation up to the first
    /// manual decision.
    pub fn new(variant: VariantDefinition, config: StateConfig) -> Result<GameState, EngineError> {
        variant.validate().map_err(|v| EngineError::Variant(crate::variants::VariantError::Invalid(v)))?;
        let n = config.player_count;
        if n < 2 || n > variant.max_players {
            return Err(EngineError::PlayerCount { count: n, max: variant.max_players });
        }
        if config.starting_stacks.len() != n {
            return Err(EngineError::StackCountMismatch { stacks: config.starting_stacks.len(), players: n });
        }
        if config.starting_stacks.contains(&0) {
            return Err(EngineError::EmptyStack);
        }
        let pad = |what: &'static str, values: &[Chips]| {
            if values.len() > n {
                return Err(EngineError::TooManySeats { what, given: values.len(), players: n });
            }
            let mut padded = values.to_vec();
            padded.resize(n, 0);
            Ok(padded)
        };
        let antes = pad("antes", &config.antes)?;
        let blinds = pad("blinds or straddles", &config.blinds_or_straddles)?;
        if config.bring_in > 0 && !variant.uses_bring_in() {
            return Err(EngineError::BringInUnsupported);
        }
        if antes.iter().all(|&a| a == 0) && blinds.iter().all(|&b| b == 0) && config.bring_in == 0 {
            return Err(EngineError::NoForcedBets);
        }

        let (deck, seed) = match config.deck {
            DeckSource::Seeded(seed) => (shuffle_deck(&create_deck(variant.deck), seed), seed),
            DeckSource::Preset(cards) => {
                let mut given = cards.clone();
                let mut expected = create_deck(variant.deck);
                given.sort_by_key(|c| c.index());
                expected.sort_by_key(|c| c.index());
                if given != expected {
                    return Err(EngineError::InvalidPresetDeck);
                }
                (cards, 0)
            }
        };

        let mut state = GameState {
            automations: config.automations,
            antes,
            blinds,
            bring_in: config.bring_in,
            stacks: config.starting_stacks.clone(),
            starting_stacks: config.starting_stacks,
            rng: ChaCha8Rng::seed_from_u64(seed ^ RESHUFFLE_SALT),
            deck: deck.into(),
            board: Vec::new(),
            burned: Vec::new(),
            mucked: Vec::new(),
            hole: vec![Vec::new(); n],
            bets: vec![0; n],
            contributions: vec![0; n],
            pots: Vec::new(),
            active: vec![true; n],
            surrendered: vec![false; n],
            shown: vec![false; n],
            phase: Phase::AntePosting,
            street: None,
            ante_owed: vec![false; n],
            blind_owed: vec![false; n],
            burn_pending: false,
            discard_pending: vec![false; n],
            hole_owed: vec![0; n],
            dealt_this_street: vec![0; n],
            board_owed: 0,
            round: Round::default(),
            showdown_order: Vec::new(),
            showdown_pos: 0,
            log: Vec::new(),
            collected_totals: Vec::new(),
            variant,
        };
        state.enter_ante_posting();
        state.run_automations();
        Ok(state)
    }

    // Views.

    pub fn variant(&self) -> &VariantDefinition {
        &self.variant
    }

    pub fn automations(&self) -> AutomationSet {
        self.automations
    }

    pub fn player_count(&self) -> usize {
        self.stacks.len()
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn is_terminal(&self) -> bool {
        self.phase == Phase::Terminal
    }

    /// Index of the current street; `None` before the first deal.
    pub fn street_index(&self) -> Option<usize> {
        self.street
    }

    pub fn street(&self) -> Option<&Street> {
        self.street.map(|k| &self.variant.streets[k])
    }

    pub fn antes(&self) -> &[Chips] {
        &self.antes
    }

    pub fn blinds_or_straddles(&self) -> &[Chips] {
        &self.blinds
    }

    pub fn bring_in(&self) -> Chips {
        self.bring_in
    }

    pub fn starting_stacks(&self) -> &[Chips] {
        &self.starting_stacks
    }

    pub fn stacks(&self) -> &[Chips] {
        &self.stacks
    }

    pub fn bets(&self) -> &[Chips] {
        &self.bets
    }

    /// Pots innermost first. Pushing removes them from the end.
    pub fn pots(&self) -> &[Pot] {
        &self.pots
    }

    pub fn total_pot_amount(&self) -> Chips {
        self.pots.iter().map(|p| p.amount).sum()
    }

    /// Every chip on the table; constant over a hand.
    pub fn total_chips(&self) -> Chips {
        self.stacks.iter().sum::<Chips>() + self.bets.iter().sum::<Chips>() + self.total_pot_amount()
    }

    /// Net result per seat.
    pub fn payoffs(&self) -> Vec<i128> {
        self.stacks.iter().zip(&self.starting_stacks).map(|(&s, &s0)| s as i128 - s0 as i128).collect()
    }

    pub fn board(&self) -> &[Card] {
        &self.board
    }

    pub fn burned(&self) -> &[Card] {
        &self.burned
    }

    pub fn mucked(&self) -> &[Card] {
        &self.mucked
    }

    /// Remaining deck, top card first.
    pub fn deck(&self) -> Vec<Card> {
        self.deck.iter().copied().collect()
    }

    pub fn hole_cards(&self, player: usize) -> &[HoleCard] {
        &self.hole[player]
    }

    pub fn hole_card_values(&self, player: usize) -> Vec<Card> {
        self.hole[player].iter().map(|h| h.card).collect()
    }

    /// Still in the hand: not folded.
    pub fn is_active(&self, player: usize) -> bool {
        self.active[player]
    }

    /// Gave up the hand at showdown or had it killed.
    pub fn is_surrendered(&self, player: usize) -> bool {
        self.surrendered[player]
    }

    pub fn is_all_in(&self, player: usize) -> bool {
        self.active[player] && self.stacks[player] == 0
    }

    /// Player whose betting or showdown decision is pending.
    pub fn actor(&self) -> Option<usize> {
        match self.phase {
            Phase::Betting => self.round.actor,
            Phase::Showdown => self.showdown_order.get(self.showdown_pos).copied(),
            _ => None,
        }
    }

    pub fn log(&self) -> &[Record] {
        &self.log
    }

    /// Pot total after each bet collection so far.
    pub fn collected_totals(&self) -> &[Chips] {
        &self.collected_totals
    }

    /// Checks chip conservation and the card partition. Also checks that pots
    /// are nonempty and nest by eligibility.
    pub fn check_invariants(&self) -> Result<(), String> {
        let expected: Chips = self.starting_stacks.iter().sum();
        if self.total_chips() != expected {
            return Err(format!("chips {} != {}", self.total_chips(), expected));
        }
        let mut cards: Vec<Card> = self
            .deck
            .iter()
            .chain(&self.board)
            .chain(&self.burned)
            .chain(&self.mucked)
            .copied()
            .chain(self.hole.iter().flatten().map(|h| h.card))
            .collect();
        let mut full = create_deck(self.variant.deck);
        cards.sort_by_key(|c| c.index());
        full.sort_by_key(|c| c.index());
        if cards != full {
            return Err("cards do not partition the deck".into());
        }
        for pair in self.pots.windows(2) {
            if !pair[1].eligible.iter().all(|p| pair[0].eligible.contains(p)) {
                return Err("side pot eligibility is not nested".into());
            }
        }
        if self.pots.iter().any(|p| p.amount == 0) {
            return Err("empty pot".into());
        }
        Ok(())
    }

    // Generic dispatch.

    /// Resolves every optional argument, or reports why `op` is illegal.
    pub fn verify(&self, op: &Operation) -> Result<Operation, EngineError> {
        Ok(match op {
            Operation::PostAnte(p) => Operation::PostAnte(Some(self.verify_post_ante(*p)?.0)),
            Operation::CollectBets => {
                self.verify_collect_bets()?;
                Operation::CollectBets
            }
            Operation::PostBlindOrStraddle(p) => {
                Operation::PostBlindOrStraddle(Some(self.verify_post_blind_or_straddle(*p)?.0))
            }
            Operation::BurnCard(c) => Operation::BurnCard(Some(self.verify_burn_card(*c)?)),
            Operation::DealHole { cards, player } => {
                let (cards, player) = self.verify_deal_hole(cards.as_deref(), *player)?;
                Operation::DealHole { cards: Some(cards), player: Some(player) }
            }
            Operation::DealBoard(cards) => Operation::DealBoard(Some(self.verify_deal_board(cards.as_deref())?)),
            Operation::StandPatOrDiscard(cards) => {
                self.verify_stand_pat_or_discard(cards)?;
                Operation::StandPatOrDiscard(cards.clone())
            }
            Operation::Fold => {
                self.verify_fold()?;
                Operation::Fold
            }
            Operation::CheckOrCall => {
                self.verify_check_or_call()?;
                Operation::CheckOrCall
            }
            Operation::PostBringIn => {
                self.verify_post_bring_in()?;
                Operation::PostBringIn
            }
            Operation::CompleteBetOrRaiseTo(a) => {
                Operation::CompleteBetOrRaiseTo(Some(self.verify_complete_bet_or_raise_to(*a)?.1))
            }
            Operation::ShowOrMuckHoleCards(s) => {
                Operation::ShowOrMuckHoleCards(Some(self.verify_show_or_muck_hole_cards(*s)?.1))
            }
            Operation::KillHand(p) => Operation::KillHand(Some(self.verify_kill_hand(*p)?)),
            Operation::PushChips => {
                self.verify_push_chips()?;
                Operation::PushChips
            }
            Operation::PullChips(p) => Operation::PullChips(Some(self.verify_pull_chips(*p)?.0)),
        })
    }

    pub fn can(&self, op: &Operation) -> bool {
        self.verify(op).is_ok()
    }

    /// Performs `op` and the automated operations that follow it. Returns
    /// the operation with its arguments resolved.
    pub fn apply(&mut self, op: &Operation) -> Result<Operation, EngineError> {
        let resolved = self.verify(op)?;
        self.commit(resolved.clone());
        Ok(resolved)
    }

    /// Runs a resolved operation; the caller has verified it.
    pub(super) fn execute_resolved(&mut self, op: &Operation) {
        match op {
            Operation::PostAnte(p) => self.do_post_ante(p.expect("resolved")),
            Operation::CollectBets => self.do_collect_bets(),
            Operation::PostBlindOrStraddle(p) => self.do_post_blind_or_straddle(p.expect("resolved")),
            Operation::BurnCard(c) => self.do_burn_card(c.expect("resolved")),
            Operation::DealHole { cards, player } => {
                self.do_deal_hole(cards.as_deref().expect("resolved"), player.expect("resolved"))
            }
            Operation::DealBoard(cards) => self.do_deal_board(cards.as_deref().expect("resolved")),
            Operation::StandPatOrDiscard(cards) => self.do_stand_pat_or_discard(cards),
            Operation::Fold => self.do_fold(),
            Operation::CheckOrCall => self.do_check_or_call(),
            Operation::PostBringIn => self.do_post_bring_in(),
            Operation::CompleteBetOrRaiseTo(a) => self.do_complete_bet_or_raise_to(a.expect("resolved")),
            Operation::ShowOrMuckHoleCards(s) => self.do_show_or_muck_hole_cards(s.expect("resolved")),
            Operation::KillHand(p) => self.do_kill_hand(p.expect("resolved")),
            Operation::PushChips => self.do_push_chips(),
            Operation::PullChips(p) => self.do_pull_chips(p.expect("resolved")),
        }
    }

    /// The automatable operation pending in the current phase, if its flag
    /// is set.
    fn pending_automation(&self) -> Option<Operation> {
        let on = |a: Automation| self.automations.contains(a);
        let op = match self.phase {
            Phase::AntePosting => Operation::PostAnte(None),
            Phase::BetCollection => Operation::CollectBets,
            Phase::BlindOrStraddlePosting => Operation::PostBlindOrStraddle(None),
            Phase::Dealing => {
                if self.burn_pending {
                    Operation::BurnCard(None)
                } else if self.discard_pending.contains(&true) {
                    return None;
                } else if self.hole_owed.iter().any(|&o| o > 0) {
                    Operation::DealHole { cards: None, player: None }
                } else {
                    Operation::DealBoard(None)
                }
            }
            Phase::Showdown => Operation::ShowOrMuckHoleCards(None),
            Phase::HandKilling => Operation::KillHand(None),
            Phase::ChipsPushing => Operation::PushChips,
            Phase::ChipsPulling => Operation::PullChips(None),
            Phase::Betting | Phase::Terminal => return None,
        };
        op.automation().filter(|&a| on(a)).map(|_| op)
    }

    pub(super) fn run_automations(&mut self) {
        while let Some(op) = self.pending_automation() {
            match self.verify(&op) {
                Ok(resolved) => {
                    self.execute_resolved(&resolved);
                    self.log.push(Record { operation: resolved, automatic: true });
                }
                Err(_) => break,
            }
        }
    }

    // Shared helpers.

    pub(super) fn check_player(&self, player: usize) -> Result<usize, EngineError> {
        if player < self.player_count() {
            Ok(player)
        } else {
            Err(EngineError::NoSuchPlayer(player))
        }
    }

    pub(super) fn expect_phase(&self, phase: Phase, operation: &'static str) -> Result<(), EngineError> {
        if self.phase == phase {
            Ok(())
        } else {
            Err(EngineError::WrongPhase { operation, phase: self.phase })
        }
    }

    pub(super) fn active_count(&self) -> usize {
        self.active.iter().filter(|&&a| a).count()
    }

    pub(super) fn max_bet(&self) -> Chips {
        self.bets.iter().copied().max().unwrap_or(0)
    }

    /// Moves up to `amount` from a stack to its bet; returns what moved.
    pub(super) fn wager(&mut self, player: usize, amount: Chips) -> Chips {
        let moved = amount.min(self.stacks[player]);
        self.stacks[player] -= moved;
        self.bets[player] += moved;
        moved
    }

    /// Recomputes pots from collected chips. Only seats all-in from earlier
    /// streets cap a layer; current bets are not yet collected.
    pub(super) fn refresh_pots(&mut self) {
        let all_in: Vec<bool> =
            (0..self.player_count()).map(|i| self.stacks[i] == 0 && self.bets[i] == 0).collect();
        self.pots = layer_pots(&self.contributions, &self.active, &all_in);
    }

    /// Moves a player's hole cards to the muck.
    pub(super) fn muck_hole(&mut self, player: usize) {
        let cards: Vec<Card> = self.hole[player].drain(..).map(|h| h.card).collect();
        self.mucked.extend(cards);
    }

    /// Shuffles mucked and burned cards under the deck when fewer than
    /// `needed` cards remain.
    pub(super) fn replenish(&mut self, needed: usize) {
        if self.deck.len() >= needed {
            return;
        }
        let mut pile: Vec<Card> = self.mucked.drain(..).chain(self.burned.drain(..)).collect();
        shuffle_with(&mut pile, &mut self.rng);
        self.deck.extend(pile);
    }

    pub(super) fn take_from_deck(&mut self, card: Card) {
        let at = self.deck.iter().position(|&c| c == card).expect("verified card is in the deck");
        self.deck.remove(at);
    }

    // Phase transitions that do not belong to one operation family.

    pub(super) fn after_collection(&mut self) {
        if self.active_count() <= 1 {
            return self.enter_showdown();
        }
        match self.street {
            None => self.enter_blind_posting(),
            Some(k) if k + 1 < self.variant.streets.len() => self.enter_street(k + 1),
            Some(_) => self.enter_showdown(),
        }
    }

    pub(super) fn enter_street(&mut self, k: usize) {
        let street = self.variant.streets[k].clone();
        let n = self.player_count();
        self.street = Some(k);
        self.phase = Phase::Dealing;
        self.burn_pending = street.burn;
        if street.burn {
            self.replenish(1);
        }
        for i in 0..n {
            let live = self.active[i];
            self.discard_pending[i] = live && street.draw;
            self.hole_owed[i] = if live { street.hole_count() } else { 0 };
            self.dealt_this_street[i] = 0;
        }
        self.board_owed = street.board;
        self.after_deal_step();
    }
}
