//! Whole-system checks. Each returns a one-line summary on success and a
//! description of the first violation otherwise.

use std::collections::{HashMap, HashSet};
use std::thread;
use std::time::{Duration, Instant};

use poker_core::engine::{AutomationSet, EngineError, GameState, Operation, StateConfig};
use poker_core::eval::{sweep, sweep_deck, Selection};
use poker_core::history::{replay_text, MILLION_DOLLAR_POT};
use poker_core::variants::builtin_variant_with_stakes;
use poker_core::{create_deck, dump_ordered_hands, parse_cards, Card, Hand, HandType, LookupKind};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::oracle::{self, Key};
use super::play::{self, FAMILIES};

pub type Outcome = Result<String, String>;

pub const MILLION_DOLLAR_STACKS: [u64; 3] = [572_100, 1_997_500, 1_109_500];

fn cards(text: &str) -> Vec<Card> {
    parse_cards(text).expect("valid card literal")
}

/// Calls `f` with every `k`-subset of `items`, reusing one buffer.
pub fn for_each_subset<T: Copy>(items: &[T], k: usize, f: &mut impl FnMut(&[T])) {
    let n = items.len();
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<T> = Vec::with_capacity(k);
    loop {
        buf.clear();
        buf.extend(idx.iter().map(|&i| items[i]));
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
    }
}

// The televised million-dollar pot, through the operation API and through
// the script.

fn million_dollar_pot_by_api() -> Result<GameState, EngineError> {
    let variant = builtin_variant_with_stakes("no-limit-texas-holdem", 2000, 4000)?;
    let config = StateConfig::new(vec![1_125_600, 2_000_000, 553_500])
        .uniform_antes(500)
        .blinds(vec![1000, 2000])
        .automations(AutomationSet::all_but_dealing());
    let mut s = GameState::new(variant, config)?;
    for hole in ["Ac2d", "5h7s", "7h6h"] {
        s.deal_hole(Some(&cards(hole)), None)?;
    }
    s.complete_bet_or_raise_to(Some(7000))?;
    s.complete_bet_or_raise_to(Some(23000))?;
    s.fold()?;
    s.check_or_call()?;
    s.deal_board(Some(&cards("Jc3d5c")))?;
    s.complete_bet_or_raise_to(Some(35000))?;
    s.check_or_call()?;
    s.deal_board(Some(&cards("4h")))?;
    s.complete_bet_or_raise_to(Some(90000))?;
    s.complete_bet_or_raise_to(Some(232_600))?;
    s.complete_bet_or_raise_to(Some(1_067_100))?;
    s.check_or_call()?;
    s.deal_board(Some(&cards("Jh")))?;
    Ok(s)
}

pub fn million_dollar_pot() -> Outcome {
    let start = Instant::now();
    let by_api = million_dollar_pot_by_api().map_err(|e| format!("operation failed: {e}"))?;
    let by_script = replay_text(MILLION_DOLLAR_POT).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    for (path, state) in [("api", &by_api), ("script", &by_script)] {
        if !state.is_terminal() {
            return Err(format!("{path}: hand stopped in the {} phase", state.phase()));
        }
        if state.stacks() != MILLION_DOLLAR_STACKS {
            return Err(format!("{path}: final stacks {:?}", state.stacks()));
        }
    }
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("final stacks {:?} by api and script in {elapsed:?}", by_api.stacks()))
}

// Lookup tables against the naive categorizers.

/// Hash key independent of the prime encoding: the rank multiset plus
/// whether every card shares a suit.
type ClassKey = (Vec<usize>, bool);

fn class_key(cards: &[Card]) -> ClassKey {
    let mut ranks: Vec<usize> = cards.iter().map(|c| c.rank.index()).collect();
    ranks.sort_unstable();
    (ranks, cards.iter().all(|c| c.suit == cards[0].suit))
}

fn oracle_key(kind: LookupKind, cards: &[Card]) -> Option<Key> {
    match kind {
        LookupKind::Standard => Some(oracle::standard_high(cards)),
        LookupKind::ShortDeck => Some(oracle::short_deck(cards)),
        LookupKind::Regular => Some(oracle::regular_low(cards)),
        LookupKind::EightOrBetter => oracle::eight_or_better(cards),
        LookupKind::Badugi => Some(oracle::badugi(cards)),
        LookupKind::Kuhn => Some(vec![cards[0].rank.index() as i32]),
    }
}

fn is_badugi(cards: &[Card]) -> bool {
    cards
        .iter()
        .enumerate()
        .all(|(i, a)| cards[i + 1..].iter().all(|b| a.rank != b.rank && a.suit != b.suit))
}

/// Index to oracle key must be a strictly increasing function.
fn check_monotone(kind: LookupKind, by_index: &HashMap<u32, Key>) -> Result<(), String> {
    let mut indices: Vec<&u32> = by_index.keys().collect();
    indices.sort();
    for pair in indices.windows(2) {
        let (lo, hi) = (&by_index[pair[0]], &by_index[pair[1]]);
        if lo >= hi {
            return Err(format!("{kind}: index {} ({lo:?}) is not weaker than {} ({hi:?})", pair[0], pair[1]));
        }
    }
    Ok(())
}

/// Exhaustive pass over every legal input of a table. Returns the number of
/// distinct class keys with an entry and the number of distinct indices.
pub fn exhaustive_table(kind: LookupKind) -> Result<(usize, usize), String> {
    let table = kind.lookup();
    let deck = sweep_deck(kind);
    let mut keys: HashSet<ClassKey> = HashSet::new();
    let mut by_index: HashMap<u32, Key> = HashMap::new();
    let mut failure: Option<String> = None;
    let sizes = if kind == LookupKind::Badugi { 1..=4 } else { kind.arity()..=kind.arity() };
    for size in sizes {
        for_each_subset(&deck, size, &mut |hand| {
            if failure.is_some() {
                return;
            }
            let evaluable = kind != LookupKind::Badugi || is_badugi(hand);
            let expected = oracle_key(kind, hand);
            let index = if evaluable {
                table.index_of(hand)
            } else if size == kind.arity() {
                // reduction path: a non-badugi hand evaluates as its best subset
                table.evaluate(hand).ok().map(|e| e.index)
            } else {
                return;
            };
            match (index, expected) {
                (Some(i), Some(key)) => {
                    if evaluable {
                        keys.insert(class_key(hand));
                    }
                    match by_index.get(&i) {
                        Some(seen) if *seen != key => {
                            failure = Some(format!("{kind}: index {i} covers {seen:?} and {key:?}"));
                        }
                        Some(_) => {}
                        None => {
                            by_index.insert(i, key);
                        }
                    }
                }
                (None, None) => {}
                (i, k) => failure = Some(format!("{kind}: {hand:?} has index {i:?} but oracle says {k:?}")),
            }
        });
    }
    if let Some(f) = failure {
        return Err(f);
    }
    check_monotone(kind, &by_index)?;
    Ok((keys.len(), by_index.len()))
}

/// Table sizes counted as distinct lookup keys.
pub const TABLE_SIZES: [(LookupKind, usize); 6] = [
    (LookupKind::Standard, 7462),
    (LookupKind::EightOrBetter, 112),
    (LookupKind::ShortDeck, 1404),
    (LookupKind::Regular, 7462),
    (LookupKind::Badugi, 1092),
    (LookupKind::Kuhn, 3),
];

pub fn cardinalities() -> Outcome {
    let start = Instant::now();
    let results: Vec<Result<String, String>> = thread::scope(|scope| {
        let handles: Vec<_> = TABLE_SIZES
            .iter()
            .map(|&(kind, expected)| {
                scope.spawn(move || {
                    let table = kind.lookup();
                    let (keys, indices) = exhaustive_table(kind)?;
                    if keys != expected || table.len() != expected {
                        return Err(format!("{kind}: {keys} keys observed, {} built, {expected} expected", table.len()));
                    }
                    if indices != table.class_count() as usize {
                        return Err(format!("{kind}: {indices} indices observed of {}", table.class_count()));
                    }
                    Ok(format!("{kind}={keys}/{indices}"))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("table worker panicked")).collect()
    });
    let parts = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(300) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("keys/classes {} in {elapsed:.1?}", parts.join(" ")))
}

// from_game against brute force.

/// Hole and board sizes a hand type is dealt in practice.
fn random_shape(t: HandType, rng: &mut ChaCha8Rng) -> (usize, usize) {
    match t.spec().selection {
        Selection::Any => {
            let total = rng.random_range(5..=7);
            let hole = rng.random_range(0..=total);
            (hole, total - hole)
        }
        Selection::Exact { hole, board } => {
            let h = if t == HandType::GreekHoldem { hole } else { rng.random_range(4..=6) };
            (h, rng.random_range(board..=5))
        }
        Selection::HoleOnly if t == HandType::KuhnPoker => (1, 0),
        Selection::HoleOnly => (rng.random_range(4..=5), 0),
    }
}

/// The strongest strength over every allowed selection, enumerated
/// directly from the selection rule.
fn brute_force(t: HandType, hole: &[Card], board: &[Card]) -> Option<u32> {
    let arity = t.spec().arity;
    let mut best: Option<u32> = None;
    let mut consider = |sel: &[Card]| {
        if let Ok(h) = Hand::from_cards(t, sel) {
            best = best.max(Some(h.strength()));
        }
    };
    match t.spec().selection {
        Selection::Any => {
            let all: Vec<Card> = hole.iter().chain(board).copied().collect();
            for_each_subset(&all, arity, &mut consider);
        }
        Selection::HoleOnly => for_each_subset(hole, arity, &mut consider),
        Selection::Exact { hole: h, board: b } => {
            for hs in oracle::combinations(hole, h) {
                for bs in oracle::combinations(board, b) {
                    let sel: Vec<Card> = hs.iter().chain(&bs).copied().collect();
                    consider(&sel);
                }
            }
        }
    }
    best
}

pub fn from_game_matches_brute_force(t: HandType, cases: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deck = sweep_deck(t.spec().lookup);
    for _ in 0..cases {
        deck.shuffle(&mut rng);
        let (h, b) = random_shape(t, &mut rng);
        let (hole, board) = (&deck[..h], &deck[h..h + b]);
        let got = Hand::from_game(t, hole, board).map_err(|e| format!("{t}: {e}"))?;
        let expected = brute_force(t, hole, board);
        let strength = got.as_ref().map(Hand::strength);
        if strength != expected {
            return Err(format!("{t}: hole {hole:?} board {board:?} gave {strength:?}, brute force {expected:?}"));
        }
        if let Some(hand) = got {
            let again = Hand::from_cards(t, hand.cards()).map_err(|e| e.to_string())?;
            if again != hand {
                return Err(format!("{t}: reported cards {:?} do not make the hand", hand.cards()));
            }
        }
    }
    Ok(())
}

pub fn omaha_equivalence() -> Result<(), String> {
    let h0 = Hand::from_game(HandType::OmahaHoldem, &cards("6c7c8c9c"), &cards("8s9sTc"))
        .map_err(|e| e.to_string())?
        .ok_or("no Omaha hand")?;
    let h1 = Hand::from_cards(HandType::OmahaHoldem, &cards("6c7c8s9sTc")).map_err(|e| e.to_string())?;
    if h0 != h1 {
        return Err(format!("{} differs from {}", h0.identity(), h1.identity()));
    }
    Ok(())
}

pub fn from_game(cases: usize) -> Outcome {
    omaha_equivalence()?;
    thread::scope(|scope| {
        let handles: Vec<_> = HandType::ALL
            .iter()
            .enumerate()
            .map(|(i, &t)| scope.spawn(move || from_game_matches_brute_force(t, cases, 0xF00D + i as u64)))
            .collect();
        handles.into_iter().try_for_each(|h| h.join().expect("from_game worker panicked"))
    })?;
    Ok(format!("omaha paths agree; {cases} random cases for each of {} hand types", HandType::ALL.len()))
}

// Dumped order against the naive categorizers.

pub fn dump_order(kind: LookupKind) -> Result<usize, String> {
    let text = dump_ordered_hands(kind.lookup());
    let mut previous: Option<(u32, Key)> = None;
    let mut lines = 0;
    for line in text.lines() {
        lines += 1;
        let fields: Vec<&str> = line.split('\t').collect();
        let [index, _category, hand] = fields[..] else {
            return Err(format!("{kind}: malformed line {line:?}"));
        };
        let index: u32 = index.parse().map_err(|_| format!("{kind}: bad index in {line:?}"))?;
        let hand = parse_cards(hand).map_err(|e| format!("{kind}: {e}"))?;
        let key = oracle_key(kind, &hand).ok_or_else(|| format!("{kind}: {line:?} does not qualify"))?;
        if let Some((pi, pk)) = &previous {
            let sound = match index.cmp(pi) {
                std::cmp::Ordering::Less => false,
                std::cmp::Ordering::Equal => key == *pk,
                std::cmp::Ordering::Greater => key > *pk,
            };
            if !sound {
                return Err(format!("{kind}: {line:?} is out of order after index {pi} {pk:?}"));
            }
        }
        previous = Some((index, key));
    }
    if lines != kind.lookup().len() {
        return Err(format!("{kind}: {lines} lines for {} entries", kind.lookup().len()));
    }
    Ok(lines)
}

pub fn order_soundness() -> Outcome {
    let kinds = [LookupKind::Standard, LookupKind::ShortDeck, LookupKind::Regular, LookupKind::EightOrBetter];
    let mut parts = Vec::new();
    for kind in kinds {
        parts.push(format!("{kind}={}", dump_order(kind)?));
    }
    Ok(format!("zero disagreements over lines {}", parts.join(" ")))
}

// Engine fuzzing.

pub struct FuzzStats {
    pub hands: usize,
    pub operations: usize,
}

pub fn fuzz_family(family: &str, hands: usize, base_seed: u64, low_stacks: bool) -> Result<FuzzStats, String> {
    let mut operations = 0;
    for i in 0..hands {
        let (_, ops) = play::random_hand(family, base_seed + i as u64, low_stacks)?;
        operations += ops;
    }
    Ok(FuzzStats { hands, operations })
}

fn fuzz_all(hands: usize, base_seed: u64, low_stacks: bool) -> Result<FuzzStats, String> {
    thread::scope(|scope| {
        let handles: Vec<_> = FAMILIES
            .iter()
            .enumerate()
            .map(|(i, &family)| {
                scope.spawn(move || fuzz_family(family, hands, base_seed + ((i as u64) << 32), low_stacks))
            })
            .collect();
        let mut total = FuzzStats { hands: 0, operations: 0 };
        for h in handles {
            let stats = h.join().expect("fuzz worker panicked")?;
            total.hands += stats.hands;
            total.operations += stats.operations;
        }
        Ok(total)
    })
}

pub fn conservation(hands_per_family: usize) -> Outcome {
    let stats = fuzz_all(hands_per_family, 1, false)?;
    Ok(format!(
        "{} hands over {} families, {} manual operations, zero violations",
        stats.hands,
        FAMILIES.len(),
        stats.operations
    ))
}

// Triplet coherence.

/// An operation with arbitrary arguments, often illegal.
pub fn arbitrary_operation(state: &GameState, rng: &mut ChaCha8Rng) -> Operation {
    let n = state.player_count();
    let deck = create_deck(state.variant().deck);
    let player = |rng: &mut ChaCha8Rng| rng.random_bool(0.5).then(|| rng.random_range(0..=n));
    let some_cards = |rng: &mut ChaCha8Rng, k: usize| -> Vec<Card> {
        deck.choose_multiple(rng, k).copied().collect()
    };
    match rng.random_range(0..15) {
        0 => Operation::PostAnte(player(rng)),
        1 => Operation::CollectBets,
        2 => Operation::PostBlindOrStraddle(player(rng)),
        3 => Operation::BurnCard(rng.random_bool(0.5).then(|| *deck.choose(rng).unwrap())),
        4 => {
            let k = rng.random_range(1..=2);
            let cards = rng.random_bool(0.5).then(|| some_cards(rng, k));
            Operation::DealHole { cards, player: player(rng) }
        }
        5 => {
            let k = rng.random_range(1..=3);
            Operation::DealBoard(rng.random_bool(0.5).then(|| some_cards(rng, k)))
        }
        6 => {
            let mut held: Vec<Card> = (0..n).flat_map(|p| state.hole_card_values(p)).collect();
            held.extend(some_cards(rng, 1));
            held.shuffle(rng);
            held.truncate(rng.random_range(0..=3));
            Operation::StandPatOrDiscard(held)
        }
        7 => Operation::Fold,
        8 => Operation::CheckOrCall,
        9 => Operation::PostBringIn,
        10 => {
            let top = state.stacks().iter().max().copied().unwrap_or(0) + 10;
            Operation::CompleteBetOrRaiseTo(rng.random_bool(0.8).then(|| rng.random_range(0..=top)))
        }
        11 => Operation::ShowOrMuckHoleCards(rng.random_bool(0.5).then(|| rng.random_bool(0.5))),
        12 => Operation::KillHand(player(rng)),
        13 => Operation::PushChips,
        _ => Operation::PullChips(player(rng)),
    }
}

fn unit<T>(r: Result<T, EngineError>) -> Result<(), EngineError> {
    r.map(|_| ())
}

/// Runs the named triplet of one operation against `state`. The performing
/// method runs on a copy, which is returned.
fn named_triplet(state: &GameState, op: &Operation) -> (bool, Result<(), EngineError>, Result<(), EngineError>, GameState) {
    let mut after = state.clone();
    let s = state;
    let (can, verified, done) = match op {
        Operation::PostAnte(p) => (s.can_post_ante(*p), unit(s.verify_post_ante(*p)), unit(after.post_ante(*p))),
        Operation::CollectBets => (s.can_collect_bets(), s.verify_collect_bets(), after.collect_bets()),
        Operation::PostBlindOrStraddle(p) => (
            s.can_post_blind_or_straddle(*p),
            unit(s.verify_post_blind_or_straddle(*p)),
            unit(after.post_blind_or_straddle(*p)),
        ),
        Operation::BurnCard(c) => (s.can_burn_card(*c), unit(s.verify_burn_card(*c)), unit(after.burn_card(*c))),
        Operation::DealHole { cards, player } => {
            let cs = cards.as_deref();
            (s.can_deal_hole(cs, *player), unit(s.verify_deal_hole(cs, *player)), unit(after.deal_hole(cs, *player)))
        }
        Operation::DealBoard(cards) => {
            let cs = cards.as_deref();
            (s.can_deal_board(cs), unit(s.verify_deal_board(cs)), unit(after.deal_board(cs)))
        }
        Operation::StandPatOrDiscard(cs) => (
            s.can_stand_pat_or_discard(cs),
            unit(s.verify_stand_pat_or_discard(cs)),
            unit(after.stand_pat_or_discard(cs)),
        ),
        Operation::Fold => (s.can_fold(), unit(s.verify_fold()), unit(after.fold())),
        Operation::CheckOrCall => (s.can_check_or_call(), unit(s.verify_check_or_call()), unit(after.check_or_call())),
        Operation::PostBringIn => (s.can_post_bring_in(), unit(s.verify_post_bring_in()), unit(after.post_bring_in())),
        Operation::CompleteBetOrRaiseTo(a) => (
            s.can_complete_bet_or_raise_to(*a),
            unit(s.verify_complete_bet_or_raise_to(*a)),
            unit(after.complete_bet_or_raise_to(*a)),
        ),
        Operation::ShowOrMuckHoleCards(show) => (
            s.can_show_or_muck_hole_cards(*show),
            unit(s.verify_show_or_muck_hole_cards(*show)),
            unit(after.show_or_muck_hole_cards(*show)),
        ),
        Operation::KillHand(p) => (s.can_kill_hand(*p), unit(s.verify_kill_hand(*p)), unit(after.kill_hand(*p))),
        Operation::PushChips => (s.can_push_chips(), unit(s.verify_push_chips()), unit(after.push_chips())),
        Operation::PullChips(p) => (s.can_pull_chips(*p), unit(s.verify_pull_chips(*p)), unit(after.pull_chips(*p))),
    };
    (can, verified, done, after)
}

/// Checks both the generic and the named triplet for one (state, operation)
/// pair. Returns whether the operation was legal.
pub fn check_triplet(state: &GameState, op: &Operation) -> Result<bool, String> {
    let verified = state.verify(op);
    if state.can(op) != verified.is_ok() {
        return Err(format!("can({op:?}) disagrees with verify: {verified:?}"));
    }
    let mut after = state.clone();
    let applied = after.apply(op);
    match (&verified, &applied) {
        (Ok(a), Ok(b)) if a == b => {}
        (Err(a), Err(b)) if a == b => {
            if after != *state {
                return Err(format!("failed {op:?} ({a}) changed the state"));
            }
        }
        _ => return Err(format!("verify gave {verified:?} but apply gave {applied:?} for {op:?}")),
    }

    let (can, named_verified, done, named_after) = named_triplet(state, op);
    if can != named_verified.is_ok() {
        return Err(format!("named can disagrees with named verify for {op:?}: {named_verified:?}"));
    }
    if named_verified != verified.as_ref().map(|_| ()).map_err(Clone::clone) || named_verified != done {
        return Err(format!("named triplet for {op:?}: verify {named_verified:?}, run {done:?}, generic {verified:?}"));
    }
    if done.is_err() && named_after != *state {
        return Err(format!("failed named {op:?} changed the state"));
    }
    if done.is_ok() && named_after != after {
        return Err(format!("named and generic {op:?} reached different states"));
    }
    Ok(verified.is_ok())
}

pub struct TripletStats {
    pub pairs: usize,
    pub legal: usize,
    pub hands: usize,
}

/// Walks random hands, checking `samples` operations at every reachable
/// state before advancing with a random legal one.
pub fn triplet_walk(min_pairs: usize, samples: usize, seed: u64) -> Result<TripletStats, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stats = TripletStats { pairs: 0, legal: 0, hands: 0 };
    while stats.pairs < min_pairs {
        let family = FAMILIES[stats.hands % FAMILIES.len()];
        let low = rng.random_bool(0.2);
        let table = play::random_table(family, &mut rng, low);
        let mut state = GameState::new(table.variant, table.config).map_err(|e| e.to_string())?;
        stats.hands += 1;
        for _ in 0..play::MAX_STEPS {
            let legal = play::legal_operations(&state, &mut rng);
            for _ in 0..samples {
                let op = if rng.random_bool(0.3) && !legal.is_empty() {
                    legal.choose(&mut rng).unwrap().clone()
                } else {
                    arbitrary_operation(&state, &mut rng)
                };
                let ok = check_triplet(&state, &op).map_err(|e| format!("{family}: {e}"))?;
                stats.pairs += 1;
                stats.legal += ok as usize;
            }
            if state.is_terminal() {
                break;
            }
            let Some(op) = legal.choose(&mut rng) else {
                return Err(format!("{family}: stuck in the {} phase", state.phase()));
            };
            state.apply(op).map_err(|e| e.to_string())?;
        }
    }
    Ok(stats)
}

pub fn triplet_coherence(min_pairs: usize) -> Outcome {
    let workers = 4;
    let per_worker = min_pairs.div_ceil(workers);
    let results: Vec<Result<TripletStats, String>> = thread::scope(|scope| {
        let handles: Vec<_> =
            (0..workers).map(|w| scope.spawn(move || triplet_walk(per_worker, 4, 0x7819 + w as u64))).collect();
        handles.into_iter().map(|h| h.join().expect("triplet worker panicked")).collect()
    });
    let mut total = TripletStats { pairs: 0, legal: 0, hands: 0 };
    for r in results {
        let s = r?;
        total.pairs += s.pairs;
        total.legal += s.legal;
        total.hands += s.hands;
    }
    if total.pairs < min_pairs {
        return Err(format!("only {} pairs sampled", total.pairs));
    }
    Ok(format!(
        "{} (state, operation) pairs from {} hands, {} legal, zero violations",
        total.pairs, total.hands, total.legal
    ))
}

// Stacks below the forced bets.

fn low_stack_case(family: &str, config: StateConfig) -> Result<(), String> {
    let variant = builtin_variant_with_stakes(family, 2, 4).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (state, _) = play::play(play::Table { variant, config }, &mut rng).map_err(|e| format!("{family}: {e}"))?;
    play::check_settled(&state)
}

pub fn low_stacks(hands_per_family: usize) -> Outcome {
    let holdem = StateConfig::new(vec![1, 1]).blinds(vec![1, 2]);
    let state = GameState::new(builtin_variant_with_stakes("no-limit-texas-holdem", 2, 4).unwrap(), holdem.clone())
        .map_err(|e| e.to_string())?;
    if !state.is_terminal() {
        return Err(format!("stacks (1, 1) against blinds (1, 2) stopped in the {} phase", state.phase()));
    }
    play::check_settled(&state)?;
    low_stack_case("no-limit-texas-holdem", holdem.automations(AutomationSet::none()))?;
    low_stack_case("no-limit-texas-holdem", StateConfig::new(vec![1, 3, 2]).uniform_antes(2).blinds(vec![2, 4]))?;
    low_stack_case("fixed-limit-7-card-stud", StateConfig::new(vec![1, 1, 5]).uniform_antes(2).bring_in(2))?;
    low_stack_case("fixed-limit-razz", StateConfig::new(vec![1, 2]).bring_in(2))?;
    low_stack_case("kuhn-poker", StateConfig::new(vec![1, 1]).uniform_antes(2))?;
    let stats = fuzz_all(hands_per_family, 1 << 40, true)?;
    Ok(format!("fixed cases settle; {} random hands with stacks of 1 to 3 chips conserve chips", stats.hands))
}

// Exhaustive seven-card benchmark.

pub const SEVEN_CARD_HANDS: u64 = 133_784_560;

pub fn seven_card_sweep() -> Outcome {
    let report = sweep(LookupKind::Standard, 7).map_err(|e| e.to_string())?;
    if report.hands != SEVEN_CARD_HANDS {
        return Err(format!("{} hands enumerated", report.hands));
    }
    if report.selection_classes != 7462 {
        return Err(format!("self-check: {} of 7462 classes evaluated", report.selection_classes));
    }
    Ok(format!(
        "{} hands in {:.1?} ({:.0} hands/s); 7462 of 7462 classes evaluated, {} classes are a best hand",
        report.hands,
        report.elapsed,
        report.hands_per_second(),
        report.best_classes
    ))
}

