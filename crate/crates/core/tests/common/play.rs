//! Random tables and a random legal-action policy.

use poker_core::engine::{Automation, AutomationSet, GameState, Operation, StateConfig};
use poker_core::variants::{builtin_variant_with_stakes, Chips, VariantDefinition};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One variant per builtin family exercised by the fuzzers.
pub const FAMILIES: [&str; 8] = [
    "no-limit-texas-holdem",
    "pot-limit-omaha-hl8",
    "fixed-limit-7-card-stud",
    "fixed-limit-razz",
    "no-limit-5-card-draw",
    "fixed-limit-2-7-triple-draw",
    "fixed-limit-badugi",
    "kuhn-poker",
];

/// No hand of any builtin needs anywhere near this many operations.
pub const MAX_STEPS: usize = 2000;

pub struct Table {
    pub variant: VariantDefinition,
    pub config: StateConfig,
}

fn random_automations(rng: &mut ChaCha8Rng) -> AutomationSet {
    if rng.random_bool(0.5) {
        return AutomationSet::all();
    }
    Automation::ALL.iter().copied().filter(|_| rng.random_bool(0.5)).collect()
}

/// A random table for `family`. With `low_stacks` every stack is at most
/// the size of the forced bets, often below them.
pub fn random_table(family: &str, rng: &mut ChaCha8Rng, low_stacks: bool) -> Table {
    let small: Chips = rng.random_range(1..=4);
    let variant = builtin_variant_with_stakes(family, small, 2 * small).expect("builtin family");
    let players = rng.random_range(2..=variant.max_players.min(6));
    let stacks: Vec<Chips> = (0..players)
        .map(|_| if low_stacks { rng.random_range(1..=3) } else { rng.random_range(1..=300) })
        .collect();
    let mut config = StateConfig::new(stacks).automations(random_automations(rng)).seed(rng.random());

    if variant.uses_bring_in() {
        config = config.uniform_antes(rng.random_range(0..=1)).bring_in(rng.random_range(1..=small));
    } else if family == "kuhn-poker" {
        config = config.uniform_antes(rng.random_range(1..=2));
    } else {
        let mut blinds = match rng.random_range(0..3) {
            0 => vec![small.div_ceil(2), small],
            1 => vec![0, small],
            _ => vec![small.div_ceil(2), small, 2 * small],
        };
        blinds.truncate(players);
        config = config.blinds(blinds);
        match rng.random_range(0..4) {
            0 => config = config.uniform_antes(1),
            1 => {
                // big-blind ante
                let mut antes = vec![0; players];
                antes[1] = small;
                config = config.antes(antes);
            }
            _ => {}
        }
    }
    Table { variant, config }
}

/// Every operation with plausible arguments, legal or not.
pub fn candidate_operations(state: &GameState, rng: &mut ChaCha8Rng) -> Vec<Operation> {
    let mut ops = vec![
        Operation::PostAnte(None),
        Operation::CollectBets,
        Operation::PostBlindOrStraddle(None),
        Operation::BurnCard(None),
        Operation::DealHole { cards: None, player: None },
        Operation::DealBoard(None),
        Operation::PostBringIn,
        Operation::Fold,
        Operation::CheckOrCall,
        Operation::CheckOrCall,
        Operation::ShowOrMuckHoleCards(None),
        Operation::ShowOrMuckHoleCards(Some(true)),
        Operation::ShowOrMuckHoleCards(Some(false)),
        Operation::KillHand(None),
        Operation::PushChips,
        Operation::PullChips(None),
    ];
    if let (Some(min), Some(max)) =
        (state.min_completion_betting_or_raising_to(), state.max_completion_betting_or_raising_to())
    {
        ops.push(Operation::CompleteBetOrRaiseTo(Some(min)));
        ops.push(Operation::CompleteBetOrRaiseTo(Some(rng.random_range(min..=max))));
        ops.push(Operation::CompleteBetOrRaiseTo(Some(max)));
    }
    if let Some(p) = state.discard_turn() {
        let mut held = state.hole_card_values(p);
        held.shuffle(rng);
        let k = rng.random_range(0..=held.len());
        held.truncate(k);
        ops.push(Operation::StandPatOrDiscard(held));
    }
    ops
}

pub fn legal_operations(state: &GameState, rng: &mut ChaCha8Rng) -> Vec<Operation> {
    candidate_operations(state, rng).into_iter().filter(|op| state.can(op)).collect()
}

/// Picks one legal operation uniformly among the candidates.
pub fn random_legal(state: &GameState, rng: &mut ChaCha8Rng) -> Option<Operation> {
    legal_operations(state, rng).choose(rng).cloned()
}

/// Checks that a finished hand has settled every chip.
pub fn check_settled(state: &GameState) -> Result<(), String> {
    if !state.pots().is_empty() || state.bets().iter().any(|&b| b > 0) {
        return Err("terminal state still holds pots or bets".into());
    }
    let start: Chips = state.starting_stacks().iter().sum();
    let end: Chips = state.stacks().iter().sum();
    if start != end {
        return Err(format!("final stacks sum to {end}, started with {start}"));
    }
    Ok(())
}

/// Plays a table to the end with the random policy, checking invariants
/// after every operation. Returns the final state and the number of manual
/// operations.
pub fn play(table: Table, rng: &mut ChaCha8Rng) -> Result<(GameState, usize), String> {
    play_observed(table, rng, &mut |_| {})
}

/// [`play`], calling `observe` with the state after every operation.
pub fn play_observed(
    table: Table,
    rng: &mut ChaCha8Rng,
    observe: &mut impl FnMut(&GameState),
) -> Result<(GameState, usize), String> {
    let mut state = GameState::new(table.variant, table.config).map_err(|e| format!("creation: {e}"))?;
    state.check_invariants()?;
    for step in 0..MAX_STEPS {
        if state.is_terminal() {
            check_settled(&state)?;
            return Ok((state, step));
        }
        let op = random_legal(&state, rng).ok_or_else(|| format!("no legal operation in the {} phase", state.phase()))?;
        state.apply(&op).map_err(|e| format!("{op:?} passed can() but failed: {e}"))?;
        state.check_invariants().map_err(|e| format!("after {op:?}: {e}"))?;
        observe(&state);
    }
    Err(format!("no terminal state after {MAX_STEPS} operations"))
}

/// Plays one reproducible random hand of `family`.
pub fn random_hand(family: &str, seed: u64, low_stacks: bool) -> Result<(GameState, usize), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let table = random_table(family, &mut rng, low_stacks);
    play(table, &mut rng).map_err(|e| format!("{family}, seed {seed}: {e}"))
}
