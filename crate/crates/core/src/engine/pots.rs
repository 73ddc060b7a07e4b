use crate::variants::Chips;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pot {
    pub amount: Chips,
    /// Seats that may win this pot, ascending.
    pub eligible: Vec<usize>,
}

/// Splits cumulative contributions into a main pot and side pots.
///
/// Layer boundaries are the contributions of active all-in players. A layer
/// belongs to the active players who put chips into it. Chips from a layer
/// nobody active reached fold into the layer below it. Pots are returned
/// innermost (main) first, and each pot's eligible set contains the next's.
pub fn layer_pots(contributions: &[Chips], active: &[bool], all_in: &[bool]) -> Vec<Pot> {
    let top = contributions.iter().copied().max().unwrap_or(0);
    let mut caps: Vec<Chips> = (0..contributions.len())
        .filter(|&i| active[i] && all_in[i] && contributions[i] > 0)
        .map(|i| contributions[i])
        .collect();
    caps.push(top);
    caps.sort_unstable();
    caps.dedup();

    let mut pots: Vec<Pot> = Vec::new();
    let mut floor = 0;
    for cap in caps {
        if cap == 0 {
            continue;
        }
        let amount: Chips = contributions.iter().map(|&c| c.min(cap) - c.min(floor)).sum();
        let eligible: Vec<usize> = (0..contributions.len()).filter(|&i| active[i] && contributions[i] > floor).collect();
        floor = cap;
        if amount == 0 {
            continue;
        }
        match pots.last_mut() {
            Some(last) if eligible.is_empty() => last.amount += amount,
            _ if eligible.is_empty() => {
                let everyone = (0..contributions.len()).filter(|&i| active[i]).collect();
                pots.push(Pot { amount, eligible: everyone });
            }
            _ => pots.push(Pot { amount, eligible }),
        }
    }
    pots
}
