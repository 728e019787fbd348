//! Breadth-first search over the full state graph of the `(n+1) x (n+1)`
//! game.
//!
//! States are packed into integers in base `n + 1` (disk `i` is digit `i`),
//! so the graph lives in flat distance arrays of `(n+1)^(n+1)` entries. Every
//! move is reversible, which makes the graph undirected: the distance to the
//! ending state is a BFS from the ending state.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::hanoi::{self, HanoiMove, HanoiState};
use crate::{Error, Result};

const UNREACHED: u32 = u32::MAX;

/// Upper bound on the number of states a search may allocate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_states: usize,
}

impl SearchBudget {
    /// `7^7`, enough for every `n <= 6`.
    pub const DEFAULT_MAX_STATES: usize = 823_543;
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_states: Self::DEFAULT_MAX_STATES,
        }
    }
}

struct StateSpace {
    n: usize,
    pow: Vec<usize>,
    size: usize,
}

impl StateSpace {
    fn new(n: usize, budget: SearchBudget) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewDisks { n });
        }
        let base = n + 1;
        let size = u32::try_from(base)
            .ok()
            .and_then(|e| base.checked_pow(e))
            .filter(|&size| size <= budget.max_states);
        let Some(size) = size else {
            return Err(Error::BudgetExceeded {
                what: "state-graph search",
                n,
                required: (base as u128).saturating_pow(base as u32),
                budget: budget.max_states as u128,
            });
        };
        let pow = (0..=n).map(|i| base.pow(i as u32)).collect();
        Ok(Self { n, pow, size })
    }

    fn encode(&self, pegs: &[u32]) -> usize {
        pegs.iter()
            .zip(&self.pow)
            .map(|(&p, &w)| p as usize * w)
            .sum()
    }

    fn decode(&self, mut index: usize, pegs: &mut [u32]) {
        let base = self.n + 1;
        for p in pegs.iter_mut() {
            *p = (index % base) as u32;
            index /= base;
        }
    }

    fn state(&self, index: usize) -> HanoiState {
        let mut pegs = vec![0; self.n + 1];
        self.decode(index, &mut pegs);
        HanoiState::from_valid(pegs)
    }

    /// Neighbours of `index` in the same order as [`hanoi::legal_moves`].
    fn neighbors(&self, index: usize, pegs: &mut [u32], tops: &mut [u32], out: &mut Vec<usize>) {
        const EMPTY: u32 = u32::MAX;
        out.clear();
        self.decode(index, pegs);
        tops.fill(EMPTY);
        for disk in (0..=self.n).rev() {
            tops[pegs[disk] as usize] = disk as u32;
        }
        for (disk, &peg) in pegs.iter().enumerate() {
            let from = peg as usize;
            if tops[from] != disk as u32 {
                continue;
            }
            let base_index = index - from * self.pow[disk];
            for (to, &top) in tops.iter().enumerate() {
                if to != from && (top == EMPTY || top > disk as u32) {
                    out.push(base_index + to * self.pow[disk]);
                }
            }
        }
    }

    fn bfs(&self, source: usize, mut parents: Option<&mut Vec<usize>>) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.size];
        let mut pegs = vec![0; self.n + 1];
        let mut tops = vec![0; self.n + 1];
        let mut next = Vec::with_capacity(self.n * self.n);
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            self.neighbors(u, &mut pegs, &mut tops, &mut next);
            for &v in &next {
                if dist[v] == UNREACHED {
                    dist[v] = dist[u] + 1;
                    if let Some(parents) = parents.as_deref_mut() {
                        parents[v] = u;
                    }
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

fn move_between(a: &HanoiState, b: &HanoiState) -> HanoiMove {
    let disk = a
        .pegs()
        .iter()
        .zip(b.pegs())
        .position(|(x, y)| x != y)
        .expect("adjacent states differ");
    HanoiMove::new(disk as u32, a.peg_of(disk), b.peg_of(disk))
}

/// Minimum number of moves from the starting state to the ending state.
pub fn shortest_win_length(n: usize, budget: SearchBudget) -> Result<u32> {
    let space = StateSpace::new(n, budget)?;
    let start = 0;
    let end = space.size - 1;
    let dist = space.bfs(start, None);
    Ok(dist[end])
}

/// A sequence of legal moves together with the states it passes through,
/// beginning at the starting state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strategy {
    moves: Vec<HanoiMove>,
    states: Vec<HanoiState>,
}

impl Strategy {
    /// Replays `moves` from the starting state, rejecting the first illegal
    /// one.
    pub fn from_moves(n: usize, moves: Vec<HanoiMove>) -> Result<Self> {
        let mut states = Vec::with_capacity(moves.len() + 1);
        states.push(hanoi::starting_state(n)?);
        for &m in &moves {
            let next = hanoi::apply_move(states.last().expect("non-empty"), m)?;
            states.push(next);
        }
        Ok(Self { moves, states })
    }

    pub fn moves(&self) -> &[HanoiMove] {
        &self.moves
    }

    /// `states[0]` is the start; `states[i]` follows move `i`.
    pub fn states(&self) -> &[HanoiState] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn is_win(&self) -> bool {
        let last = self.states.last().expect("non-empty");
        last.pegs().iter().all(|&p| p as usize == last.n())
    }

    /// Move numbers (1-based) after which the game sits in an ideal state.
    pub fn ideal_moves(&self) -> Vec<usize> {
        self.states
            .iter()
            .enumerate()
            .filter(|(_, s)| hanoi::is_ideal_state(s))
            .map(|(i, _)| i)
            .collect()
    }
}

/// One shortest winning strategy. Ties are broken by BFS discovery order,
/// so the result is deterministic.
pub fn solve(n: usize, budget: SearchBudget) -> Result<Strategy> {
    let space = StateSpace::new(n, budget)?;
    let start = 0;
    let end = space.size - 1;
    let mut parents = vec![usize::MAX; space.size];
    space.bfs(start, Some(&mut parents));

    let mut path = vec![end];
    let mut cur = end;
    while cur != start {
        cur = parents[cur];
        path.push(cur);
    }
    path.reverse();
    let states: Vec<HanoiState> = path.iter().map(|&i| space.state(i)).collect();
    let moves = states
        .windows(2)
        .map(|w| move_between(&w[0], &w[1]))
        .collect();
    Ok(Strategy { moves, states })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OptimalityFlags {
    /// Every ideal state is exactly `n + 1` moves from the start.
    pub a: bool,
    /// Every ideal state is exactly `n + 2` moves from the end.
    pub b: bool,
    /// Every shortest win visits exactly one ideal state, after move `n + 1`.
    pub c: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalityReport {
    pub n: usize,
    pub states_searched: usize,
    pub min_win_moves: u32,
    pub ideal_count: usize,
    /// Distinct distances from the start over all ideal states.
    pub ideal_levels: Vec<u32>,
    /// Distinct distances to the end over all ideal states.
    pub ideal_distances_to_end: Vec<u32>,
    /// The common start distance of the ideal states, when there is one.
    pub ideal_at_level: Option<u32>,
    pub shortest_wins: BigUint,
    /// Shortest wins passing through an ideal state after move `n + 1`.
    pub wins_through_ideal: BigUint,
    /// Ideal states lying on some shortest win at a move other than `n + 1`.
    pub misplaced_ideal_states: usize,
    pub flags: OptimalityFlags,
}

impl OptimalityReport {
    pub fn passed(&self) -> bool {
        self.min_win_moves as usize == 2 * self.n + 3
            && self.flags.a
            && self.flags.b
            && self.flags.c
    }
}

struct ShortestWins {
    space: StateSpace,
    from_start: Vec<u32>,
    to_end: Vec<u32>,
    length: u32,
}

impl ShortestWins {
    fn new(n: usize, budget: SearchBudget) -> Result<Self> {
        let space = StateSpace::new(n, budget)?;
        let from_start = space.bfs(0, None);
        let to_end = space.bfs(space.size - 1, None);
        let length = from_start[space.size - 1];
        Ok(Self {
            space,
            from_start,
            to_end,
            length,
        })
    }

    fn on_win(&self, i: usize) -> bool {
        self.from_start[i] != UNREACHED
            && self.to_end[i] != UNREACHED
            && self.from_start[i] + self.to_end[i] == self.length
    }

    /// States on some shortest win, grouped by move number.
    fn levels(&self) -> Vec<Vec<usize>> {
        let mut levels = vec![Vec::new(); self.length as usize + 1];
        for i in (0..self.space.size).filter(|&i| self.on_win(i)) {
            levels[self.from_start[i] as usize].push(i);
        }
        levels
    }

    /// Number of shortest paths from the start to each state of `levels`
    /// (forward) or from each such state to the end (backward).
    fn path_counts(&self, levels: &[Vec<usize>], forward: bool) -> BTreeMap<usize, BigUint> {
        let mut counts = BTreeMap::new();
        let mut pegs = vec![0; self.space.n + 1];
        let mut tops = vec![0; self.space.n + 1];
        let mut next = Vec::new();
        let order: Vec<&Vec<usize>> = if forward {
            levels.iter().collect()
        } else {
            levels.iter().rev().collect()
        };
        let dist = if forward {
            &self.from_start
        } else {
            &self.to_end
        };
        for (depth, level) in order.into_iter().enumerate() {
            for &v in level {
                if depth == 0 {
                    counts.insert(v, BigUint::from(1u8));
                    continue;
                }
                self.space.neighbors(v, &mut pegs, &mut tops, &mut next);
                let mut total = BigUint::zero();
                for &u in &next {
                    if let Some(c) = counts.get(&u) {
                        if dist[u] + 1 == dist[v] {
                            total += c;
                        }
                    }
                }
                counts.insert(v, total);
            }
        }
        counts
    }
}

fn sorted_distinct(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v.dedup();
    v
}

/// Layered shortest-path analysis of how optimal strategies meet the ideal
/// states. Paths are counted exactly, level by level, so claim (c) is
/// checked over every shortest win rather than a sample.
pub fn optimal_strategies_through_ideal(
    n: usize,
    budget: SearchBudget,
) -> Result<OptimalityReport> {
    let wins = ShortestWins::new(n, budget)?;
    let ideal = hanoi::enumerate_ideal_states(n)?;
    let ideal_index: Vec<usize> = ideal.iter().map(|s| wins.space.encode(s.pegs())).collect();

    let ideal_levels = sorted_distinct(ideal_index.iter().map(|&i| wins.from_start[i]).collect());
    let ideal_distances_to_end =
        sorted_distinct(ideal_index.iter().map(|&i| wins.to_end[i]).collect());
    let target_level = n as u32 + 1;
    let a = ideal_levels == [target_level];
    let b = ideal_distances_to_end == [target_level + 1];

    let levels = wins.levels();
    let forward = wins.path_counts(&levels, true);
    let backward = wins.path_counts(&levels, false);
    let shortest_wins = forward
        .get(&(wins.space.size - 1))
        .cloned()
        .unwrap_or_default();

    let mut wins_through_ideal = BigUint::zero();
    let mut misplaced_ideal_states = 0;
    for &i in ideal_index.iter().filter(|&&i| wins.on_win(i)) {
        if wins.from_start[i] == target_level {
            wins_through_ideal += &forward[&i] * &backward[&i];
        } else {
            misplaced_ideal_states += 1;
        }
    }
    // each shortest win crosses level n+1 exactly once, so the ideal states
    // there account for all wins iff every such crossing is ideal
    let c = misplaced_ideal_states == 0 && wins_through_ideal == shortest_wins;

    Ok(OptimalityReport {
        n,
        states_searched: wins.space.size,
        min_win_moves: wins.length,
        ideal_count: ideal.len(),
        ideal_at_level: match ideal_levels.as_slice() {
            [level] => Some(*level),
            _ => None,
        },
        ideal_levels,
        ideal_distances_to_end,
        shortest_wins,
        wins_through_ideal,
        misplaced_ideal_states,
        flags: OptimalityFlags { a, b, c },
    })
}

/// An edge of the opening graph: a move from one state to another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpeningEdge {
    pub level: u32,
    pub from: HanoiState,
    pub mv: HanoiMove,
    pub to: HanoiState,
}

/// The first `n + 1` moves of every shortest win, as a layered graph from
/// the start down to the ideal states. Edges are ordered by level, then by
/// source state, then by move.
pub fn opening_graph(n: usize, budget: SearchBudget) -> Result<Vec<OpeningEdge>> {
    let wins = ShortestWins::new(n, budget)?;
    let levels = wins.levels();
    let depth = (n + 1).min(wins.length as usize);
    let mut pegs = vec![0; n + 1];
    let mut tops = vec![0; n + 1];
    let mut next = Vec::new();
    let mut edges = Vec::new();
    for (level, states) in levels.iter().enumerate().take(depth) {
        let mut sources: Vec<HanoiState> = states.iter().map(|&i| wins.space.state(i)).collect();
        sources.sort_unstable();
        for from in sources {
            let u = wins.space.encode(from.pegs());
            wins.space.neighbors(u, &mut pegs, &mut tops, &mut next);
            for &v in &next {
                if wins.on_win(v) && wins.from_start[v] == level as u32 + 1 {
                    let to = wins.space.state(v);
                    edges.push(OpeningEdge {
                        level: level as u32 + 1,
                        mv: move_between(&from, &to),
                        from: from.clone(),
                        to,
                    });
                }
            }
        }
    }
    Ok(edges)
}
