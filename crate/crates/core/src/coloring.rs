//! Brute-force signed coloring counts, used as an oracle for the
//! polynomial computations.
//!
//! With `lambda = 2 mu + 1` the colors are `-mu..=mu`; with `lambda = 2 mu`
//! they are `±1..=±mu`. A coloring `k` is proper when
//! `k(tail) != sign * k(head)` on every edge.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Default cap on `lambda^|V|`, the size of the search space.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// The signed color set of size `lambda`.
pub fn color_set(lambda: u32) -> Vec<i64> {
    let mu = (lambda / 2) as i64;
    if lambda % 2 == 1 {
        (-mu..=mu).collect()
    } else {
        (1..=mu).flat_map(|c| [-c, c]).collect()
    }
}

/// Number of proper signed `lambda`-colorings.
pub fn count_proper_colorings(g: &SignedGraph, lambda: u32) -> Result<u128> {
    count_proper_colorings_with_budget(g, lambda, DEFAULT_BUDGET)
}

pub fn count_proper_colorings_with_budget(g: &SignedGraph, lambda: u32, budget: u128) -> Result<u128> {
    count(g, lambda, budget, |a, sign, b| a != sign * b)
}

/// Number of colorings with `k(tail) == sign * k(head)` on every edge.
pub fn count_q_colorings(g: &SignedGraph, lambda: u32) -> Result<u128> {
    count_q_colorings_with_budget(g, lambda, DEFAULT_BUDGET)
}

pub fn count_q_colorings_with_budget(g: &SignedGraph, lambda: u32, budget: u128) -> Result<u128> {
    count(g, lambda, budget, |a, sign, b| a == sign * b)
}

fn count(g: &SignedGraph, lambda: u32, budget: u128, ok: impl Fn(i64, i64, i64) -> bool) -> Result<u128> {
    let n = g.vertex_count();
    let needed = (lambda as u128).saturating_pow(n.min(u32::MAX as usize) as u32);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }

    // Each edge is checked once both ends are colored, at its later end.
    let mut checks: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for e in g.edges() {
        let (a, b) = e.endpoints();
        checks[b].push((a, e.sign.value()));
    }

    let colors = color_set(lambda);
    let mut k = vec![0i64; n];
    Ok(search(0, &colors, &checks, &mut k, &ok))
}

fn search(
    v: usize,
    colors: &[i64],
    checks: &[Vec<(usize, i64)>],
    k: &mut [i64],
    ok: &impl Fn(i64, i64, i64) -> bool,
) -> u128 {
    if v == k.len() {
        return 1;
    }
    let mut total = 0;
    for &c in colors {
        k[v] = c;
        if checks[v].iter().all(|&(w, sign)| ok(c, sign, k[w])) {
            total += search(v + 1, colors, checks, k, ok);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn color_sets() {
        assert_eq!(color_set(1), vec![0]);
        assert_eq!(color_set(2), vec![-1, 1]);
        assert_eq!(color_set(3), vec![-1, 0, 1]);
        assert_eq!(color_set(4), vec![-1, 1, -2, 2]);
    }

    #[test]
    fn sp3_counts() {
        // (lambda - 1)^3 on odd lambda, lambda^3 - 3 lambda^2 + 3 lambda on even.
        let g = sp3();
        assert_eq!(count_proper_colorings(&g, 1).unwrap(), 0);
        assert_eq!(count_proper_colorings(&g, 2).unwrap(), 2);
        assert_eq!(count_proper_colorings(&g, 3).unwrap(), 8);
        assert_eq!(count_proper_colorings(&g, 4).unwrap(), 28);
        assert_eq!(count_proper_colorings(&g, 5).unwrap(), 64);
    }

    #[test]
    fn negative_loop_forbids_zero() {
        let g = sn(1, 1);
        assert_eq!(count_proper_colorings(&g, 3).unwrap(), 2);
        assert_eq!(count_proper_colorings(&g, 2).unwrap(), 2);
        assert_eq!(count_q_colorings(&g, 3).unwrap(), 1);
        assert_eq!(count_q_colorings(&g, 2).unwrap(), 0);
    }

    #[test]
    fn budget_is_enforced() {
        let g = SignedGraph::edgeless(8);
        assert!(matches!(
            count_proper_colorings(&g, 8),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(count_proper_colorings_with_budget(&g, 2, 256).unwrap(), 256);
    }
}
