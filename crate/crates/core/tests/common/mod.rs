//! Brute-force reference implementations shared by the integration tests.
//! Nothing here uses the cycle engine or the condition checkers.
#![allow(dead_code)]

use bipan_core::{BipartiteDigraph, Digraph, VertexId};

/// Dense adjacency matrix copy of a digraph.
pub fn matrix<G: Digraph>(g: &G) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.arcs() {
        m[u.0][v.0] = true;
    }
    m
}

fn extend(
    m: &[Vec<bool>],
    len: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if path.len() == len {
        return m[*path.last().unwrap()][path[0]] && out(path);
    }
    for v in 0..m.len() {
        if used[v] || (!path.is_empty() && !m[*path.last().unwrap()][v]) {
            continue;
        }
        used[v] = true;
        path.push(v);
        let stop = extend(m, len, path, used, out);
        path.pop();
        used[v] = false;
        if stop {
            return true;
        }
    }
    false
}

/// Visits every vertex sequence of length `len` that closes into a directed
/// cycle, in every rotation. Stops early when `visit` returns true.
pub fn each_cycle_sequence(m: &[Vec<bool>], len: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if len == 0 || len > m.len() {
        return false;
    }
    let mut used = vec![false; m.len()];
    extend(m, len, &mut Vec::new(), &mut used, visit)
}

pub fn has_cycle_of_length(m: &[Vec<bool>], len: usize) -> bool {
    each_cycle_sequence(m, len, &mut |_| true)
}

/// Every directed cycle of length at least 2, once each (rotation starting at
/// its smallest vertex).
pub fn all_cycles(m: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let mut found = Vec::new();
    for len in 2..=m.len() {
        each_cycle_sequence(m, len, &mut |p| {
            if p[0] == *p.iter().min().unwrap() {
                found.push(p.to_vec());
            }
            false
        });
    }
    found
}

pub fn strongly_connected(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    let mut r = m.to_vec();
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r.iter().all(|row| row.iter().all(|&b| b))
}

pub fn degree(m: &[Vec<bool>], v: usize) -> usize {
    (0..m.len()).filter(|&w| m[v][w]).count() + (0..m.len()).filter(|&w| m[w][v]).count()
}

/// Every pair with a common in- or out-neighbour has degree sum at least `bound`.
pub fn pair_condition(m: &[Vec<bool>], bound: usize) -> bool {
    let n = m.len();
    for u in 0..n {
        for v in u + 1..n {
            let dominated = (0..n).any(|w| (m[w][u] && m[w][v]) || (m[u][w] && m[v][w]));
            if dominated && degree(m, u) + degree(m, v) < bound {
                return false;
            }
        }
    }
    true
}

/// `true` when `cycle` is a directed cycle of `d` through distinct vertices.
pub fn is_cycle_in(d: &BipartiteDigraph, cycle: &[VertexId]) -> bool {
    let mut seen = std::collections::HashSet::new();
    cycle.len() >= 2
        && cycle.iter().all(|v| seen.insert(v.0))
        && (0..cycle.len()).all(|i| d.has_arc(cycle[i], cycle[(i + 1) % cycle.len()]))
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// `K*_{a,a}` with the arcs `x_i -> y_{sigma(i)}` and `y_i -> x_{tau(i)}` removed,
/// plus any further removals. Every vertex keeps in- and out-degree `a-1` before
/// the extra removals.
pub fn dense_family(a: usize, sigma: &[usize], tau: &[usize], extra: &[(usize, usize)]) -> BipartiteDigraph {
    let mut removed: Vec<(usize, usize)> = (0..a).flat_map(|i| [(i, a + sigma[i]), (a + i, tau[i])]).collect();
    removed.extend_from_slice(extra);
    BipartiteDigraph::complete(a).unwrap().without_arcs(&removed)
}
