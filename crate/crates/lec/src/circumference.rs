//! Exact circumference by backtracking over simple paths.
//!
//! Cycles are rooted at their minimal vertex, the search extends paths through
//! larger vertices only, and a reachability bound prunes branches that cannot
//! beat the current best. Exceeding the state budget is a hard error, never an
//! approximation.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Length of a longest cycle; 0 when acyclic.
pub fn circumference(g: &Graph, budget: u64) -> Result<usize> {
    Ok(longest_cycle(g, budget)?.map_or(0, |c| c.len()))
}

/// A longest cycle as a vertex sequence (closed implicitly), or `None` when
/// acyclic. Deterministic for a given graph.
pub fn longest_cycle(g: &Graph, budget: u64) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    let mut states: u64 = 0;
    let mut path = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    for root in 0..n {
        path.clear();
        path.push(root);
        visited[root] = true;
        extend(
            g,
            root,
            &mut path,
            &mut visited,
            &mut best,
            &mut states,
            budget,
        )?;
        visited[root] = false;
    }
    Ok(best)
}

fn extend(
    g: &Graph,
    root: usize,
    path: &mut Vec<usize>,
    visited: &mut Vec<bool>,
    best: &mut Option<Vec<usize>>,
    states: &mut u64,
    budget: u64,
) -> Result<()> {
    *states += 1;
    if *states > budget {
        return Err(Error::BudgetExceeded(*states));
    }
    let v = *path.last().unwrap();
    if path.len() >= 3 && g.has_edge(v, root) {
        let better = best.as_ref().map_or(true, |b| path.len() > b.len());
        if better {
            *best = Some(path.clone());
        }
    }
    // Upper bound: the cycle through this path can only use vertices > root
    // that are free and reachable from v without touching the path interior.
    if let Some(b) = best {
        let reachable = free_reachable(g, root, v, visited);
        if path.len() + reachable <= b.len() {
            return Ok(());
        }
    }
    for &w in g.neighbours(v) {
        if w <= root || visited[w] {
            continue;
        }
        visited[w] = true;
        path.push(w);
        extend(g, root, path, visited, best, states, budget)?;
        path.pop();
        visited[w] = false;
    }
    Ok(())
}

/// Number of free vertices (> root, unvisited) reachable from `v` through
/// free vertices. The root itself does not count: it closes the cycle.
fn free_reachable(g: &Graph, root: usize, v: usize, visited: &[bool]) -> usize {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut stack = vec![v];
    seen[v] = true;
    let mut count = 0;
    while let Some(x) = stack.pop() {
        for &w in g.neighbours(x) {
            if w > root && !visited[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count
}

/// Unpruned enumeration of all simple cycles; test oracle for [`circumference`].
pub fn circumference_naive(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    let mut path = Vec::new();
    let mut visited = vec![false; n];
    fn walk(
        g: &Graph,
        root: usize,
        path: &mut Vec<usize>,
        visited: &mut Vec<bool>,
        best: &mut usize,
    ) {
        let v = *path.last().unwrap();
        if path.len() >= 3 && g.has_edge(v, root) {
            *best = (*best).max(path.len());
        }
        for &w in g.neighbours(v) {
            if w <= root || visited[w] {
                continue;
            }
            visited[w] = true;
            path.push(w);
            walk(g, root, path, visited, best);
            path.pop();
            visited[w] = false;
        }
    }
    for root in 0..n {
        path.clear();
        path.push(root);
        visited[root] = true;
        walk(g, root, &mut path, &mut visited, &mut best);
        visited[root] = false;
    }
    best
}

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn trees_are_acyclic() {
        assert_eq!(circumference(&families::path(6), DEFAULT_BUDGET).unwrap(), 0);
        assert_eq!(circumference(&families::star(4), DEFAULT_BUDGET).unwrap(), 0);
    }

    #[test]
    fn k4_is_hamiltonian() {
        assert_eq!(circumference(&families::complete(4), DEFAULT_BUDGET).unwrap(), 4);
    }

    #[test]
    fn petersen_circumference_is_nine() {
        assert_eq!(circumference(&families::petersen(), DEFAULT_BUDGET).unwrap(), 9);
        assert_eq!(circumference_naive(&families::petersen()), 9);
    }

    #[test]
    fn longest_cycle_is_a_cycle() {
        let g = families::petersen();
        let cyc = longest_cycle(&g, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(cyc.len(), 9);
        for i in 0..cyc.len() {
            assert!(g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
        }
    }

    #[test]
    fn budget_exceeded_is_an_error() {
        let g = families::complete(8);
        assert!(matches!(
            circumference(&g, 10),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn agrees_with_naive_on_small_graphs() {
        for g in [
            families::bowtie(),
            families::dumbbell(),
            families::k2s_plus(3),
            families::p_rs(2, 2),
            families::complete_bipartite(3, 3),
        ] {
            assert_eq!(
                circumference(&g, DEFAULT_BUDGET).unwrap(),
                circumference_naive(&g)
            );
        }
    }
}
