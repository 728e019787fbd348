//! Slow, direct reference implementations used to check the library.
//!
//! Nothing here calls into the library's algorithms; each oracle restates
//! a definition in the most literal way available.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

/// Parks cars one at a time using a set of free spots. Returns the spot of
/// each car, or `Err(car)` for the first car (1-indexed) that cannot park.
pub fn park(prefs: &[u32]) -> Result<Vec<u32>, usize> {
    let n = prefs.len() as u32;
    let mut free: BTreeSet<u32> = (1..=n).collect();
    let mut spots = Vec::new();
    for (i, &a) in prefs.iter().enumerate() {
        let Some(&spot) = free.range(a..).next() else {
            return Err(i + 1);
        };
        free.remove(&spot);
        spots.push(spot);
    }
    Ok(spots)
}

pub fn displacement(prefs: &[u32]) -> Option<u64> {
    let spots = park(prefs).ok()?;
    Some(
        spots
            .iter()
            .zip(prefs)
            .map(|(&s, &a)| u64::from(s - a))
            .sum(),
    )
}

/// For every `k`, at least `k` cars prefer a spot `<= k`.
pub fn counting_criterion(prefs: &[u32]) -> bool {
    let n = prefs.len() as u32;
    (1..=n).all(|k| prefs.iter().filter(|&&a| a <= k).count() >= k as usize)
}

/// Every vector in `{lo..=hi}^len`, built by recursion.
pub fn all_vectors(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for head in lo..=hi {
        for mut tail in all_vectors(len - 1, lo, hi) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Stacks per peg, bottom first.
pub fn stacks(state: &[u32]) -> Vec<Vec<u32>> {
    let mut pegs = vec![Vec::new(); state.len()];
    for disk in (0..state.len()).rev() {
        pegs[state[disk] as usize].push(disk as u32);
    }
    pegs
}

/// The ideal-state definition read off the board: the largest disk alone on
/// peg 0, peg `n` empty, every interior peg non-empty, and exactly one
/// interior peg with two disks.
pub fn is_ideal_by_board(state: &[u32]) -> bool {
    let n = state.len() - 1;
    let pegs = stacks(state);
    let interior = &pegs[1..n];
    pegs[0] == [n as u32]
        && pegs[n].is_empty()
        && interior.iter().all(|s| !s.is_empty())
        && interior.iter().filter(|s| s.len() == 2).count() == 1
}

/// Moves `(disk, from, to)` computed from explicit stacks.
pub fn moves(state: &[u32]) -> Vec<(u32, u32, u32)> {
    let pegs = stacks(state);
    let mut out = Vec::new();
    for (p, from) in pegs.iter().enumerate() {
        let Some(&disk) = from.last() else { continue };
        for (q, to) in pegs.iter().enumerate() {
            if p != q && to.last().is_none_or(|&t| t > disk) {
                out.push((disk, p as u32, q as u32));
            }
        }
    }
    out.sort();
    out
}

pub fn step(state: &[u32], (disk, _, to): (u32, u32, u32)) -> Vec<u32> {
    let mut next = state.to_vec();
    next[disk as usize] = to;
    next
}

/// BFS distances over states stored as vectors in a hash map.
pub fn distances(source: Vec<u32>) -> HashMap<Vec<u32>, u32> {
    let mut dist = HashMap::new();
    dist.insert(source.clone(), 0);
    let mut queue = VecDeque::from([source]);
    while let Some(s) = queue.pop_front() {
        let d = dist[&s];
        for m in moves(&s) {
            let t = step(&s, m);
            if !dist.contains_key(&t) {
                dist.insert(t.clone(), d + 1);
                queue.push_back(t);
            }
        }
    }
    dist
}

/// Every shortest path from `start` to `end`, as state sequences.
pub fn all_shortest_paths(start: &[u32], end: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let from_start = distances(start.to_vec());
    let to_end = distances(end.to_vec());
    let length = from_start[end];
    let mut paths = Vec::new();
    let mut stack = vec![vec![start.to_vec()]];
    while let Some(path) = stack.pop() {
        let last = path.last().unwrap();
        if last == end {
            paths.push(path);
            continue;
        }
        let depth = path.len() as u32 - 1;
        for m in moves(last) {
            let next = step(last, m);
            if from_start[&next] == depth + 1 && to_end[&next] == length - depth - 1 {
                let mut extended = path.clone();
                extended.push(next);
                stack.push(extended);
            }
        }
    }
    paths
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}
