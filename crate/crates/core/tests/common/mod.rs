//! Naive oracles shared by the integration tests. Everything here walks the
//! graph directly and avoids the library's own distance and class code.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use hitset_core::digraph::Digraph;
use hitset_core::graph::FunctionalGraph;

pub fn forward_len(g: &FunctionalGraph, x: usize) -> usize {
    let mut cur = x;
    let mut len = 0;
    while let Some(y) = g.succ(cur) {
        cur = y;
        len += 1;
    }
    len
}

pub fn iterate(g: &FunctionalGraph, x: usize, k: usize) -> Option<usize> {
    let mut cur = x;
    for _ in 0..k {
        cur = g.succ(cur)?;
    }
    Some(cur)
}

pub fn set_of(n: usize, members: &[usize]) -> Vec<bool> {
    let mut s = vec![false; n];
    for &m in members {
        s[m] = true;
    }
    s
}

/// Steps from `x` to the first member at or after `x`.
pub fn steps_to_member(g: &FunctionalGraph, inside: &[bool], x: usize) -> Option<usize> {
    let mut cur = x;
    let mut k = 0;
    loop {
        if inside[cur] {
            return Some(k);
        }
        cur = g.succ(cur)?;
        k += 1;
    }
}

pub fn forward_independent(g: &FunctionalGraph, members: &[usize], r: usize) -> bool {
    let inside = set_of(g.len(), members);
    members.iter().all(|&m| (1..=r).all(|k| iterate(g, m, k).is_none_or(|y| !inside[y])))
}

/// Every vertex with at least `horizon` forward steps has a member strictly ahead.
pub fn hits_interior(g: &FunctionalGraph, members: &[usize], horizon: usize) -> bool {
    let inside = set_of(g.len(), members);
    (0..g.len()).all(|x| {
        forward_len(g, x) < horizon || g.succ(x).and_then(|y| steps_to_member(g, &inside, y)).is_some()
    })
}

pub fn undirected(g: &FunctionalGraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.len()];
    for x in 0..g.len() {
        if let Some(y) = g.succ(x) {
            adj[x].push(y);
            adj[y].push(x);
        }
    }
    adj
}

/// Distances up to `limit` from `src` in the underlying undirected graph.
pub fn bfs(adj: &[Vec<usize>], src: usize, limit: usize) -> HashMap<usize, usize> {
    let mut dist = HashMap::new();
    dist.insert(src, 0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let d = dist[&u];
        if d == limit {
            continue;
        }
        for &v in &adj[u] {
            if !dist.contains_key(&v) {
                dist.insert(v, d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Components of `u` under "within `t` undirected steps".
pub fn classes_within(adj: &[Vec<usize>], u: &[usize], t: usize) -> Vec<Vec<usize>> {
    let inside = set_of(adj.len(), u);
    let mut comp = vec![usize::MAX; adj.len()];
    let mut out = Vec::new();
    for &x in u {
        if comp[x] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![x];
        comp[x] = id;
        let mut stack = vec![x];
        while let Some(a) = stack.pop() {
            for &b in bfs(adj, a, t).keys() {
                if inside[b] && comp[b] == usize::MAX {
                    comp[b] = id;
                    members.push(b);
                    stack.push(b);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Diameter of `class`, or `None` if some pair is more than `limit` apart.
pub fn diameter_within(adj: &[Vec<usize>], class: &[usize], limit: usize) -> Option<usize> {
    let mut best = 0;
    for &a in class {
        let dist = bfs(adj, a, limit);
        for b in class {
            best = best.max(*dist.get(b)?);
        }
    }
    Some(best)
}

/// Closed walks of each length at `v`, by plain matrix-vector steps.
pub fn closed_walk_lengths(h: &Digraph, v: usize, max_len: usize) -> Vec<bool> {
    let reach = walk_reach(h, v, max_len);
    reach.iter().map(|row| row[v]).collect()
}

/// `reach[k][u]`: some walk of exactly `k` steps runs from `v` to `u`.
pub fn walk_reach(h: &Digraph, v: usize, max_len: usize) -> Vec<Vec<bool>> {
    let m = h.len();
    let mut cur = vec![false; m];
    cur[v] = true;
    let mut out = vec![cur.clone()];
    for _ in 0..max_len {
        let mut next = vec![false; m];
        for a in 0..m {
            if cur[a] {
                for b in 0..m {
                    if h.has_edge(a, b) {
                        next[b] = true;
                    }
                }
            }
        }
        out.push(next.clone());
        cur = next;
    }
    out
}

pub fn is_hom(g: &FunctionalGraph, labels: &[usize], h: &Digraph) -> bool {
    (0..g.len()).all(|x| g.succ(x).is_none_or(|y| h.has_edge(labels[x], labels[y])))
}

/// Exhaustive search over all `m^n` maps.
pub fn hom_exists(g: &FunctionalGraph, h: &Digraph) -> bool {
    let (n, m) = (g.len(), h.len());
    if n == 0 {
        return true;
    }
    if m == 0 {
        return false;
    }
    let mut labels = vec![0usize; n];
    loop {
        if is_hom(g, &labels, h) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            labels[i] += 1;
            if labels[i] < m {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}
