//! Brute-force oracles over adjacency matrices. Nothing here calls into the
//! library except to read a graph's edge list.
#![allow(dead_code, clippy::needless_range_loop, clippy::type_complexity)]

use nicecubic::Graph;

pub type Adj = Vec<Vec<bool>>;

pub fn adj(g: &Graph) -> Adj {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

pub fn mask(vs: impl IntoIterator<Item = usize>) -> u64 {
    vs.into_iter().fold(0, |m, v| m | 1 << v)
}

pub fn full(n: usize) -> u64 {
    (1u64 << n) - 1
}

/// Closed neighbourhood as a bit mask.
pub fn closed(a: &Adj, u: usize) -> u64 {
    (0..a.len()).filter(|&v| v == u || a[u][v]).fold(0, |m, v| m | 1 << v)
}

/// Perfect matchings of the subgraph induced by `alive`, counted exhaustively.
pub fn pm_count(a: &Adj, alive: u64) -> u64 {
    if alive == 0 {
        return 1;
    }
    let u = alive.trailing_zeros() as usize;
    let rest = alive & !(1 << u);
    (0..a.len())
        .filter(|&v| rest >> v & 1 == 1 && a[u][v])
        .map(|v| pm_count(a, rest & !(1 << v)))
        .sum()
}

pub fn has_pm(a: &Adj, alive: u64) -> bool {
    if alive.count_ones() % 2 == 1 {
        return false;
    }
    if alive == 0 {
        return true;
    }
    let u = alive.trailing_zeros() as usize;
    let rest = alive & !(1 << u);
    (0..a.len()).any(|v| rest >> v & 1 == 1 && a[u][v] && has_pm(a, rest & !(1 << v)))
}

pub fn components(a: &Adj, alive: u64) -> Vec<u64> {
    let mut left = alive;
    let mut out = Vec::new();
    while left != 0 {
        let s = left.trailing_zeros() as usize;
        let mut comp = 1u64 << s;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..a.len() {
                if a[x][y] && alive >> y & 1 == 1 && comp >> y & 1 == 0 {
                    comp |= 1 << y;
                    stack.push(y);
                }
            }
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

pub fn odd_components(a: &Adj, s: u64) -> usize {
    components(a, full(a.len()) & !s)
        .into_iter()
        .filter(|c| c.count_ones() % 2 == 1)
        .count()
}

pub fn is_barrier(a: &Adj, s: u64) -> bool {
    s != 0 && odd_components(a, s) == s.count_ones() as usize
}

/// `G - N[u]` has a perfect matching.
pub fn nice_vertex(a: &Adj, u: usize) -> bool {
    has_pm(a, full(a.len()) & !closed(a, u))
}

pub fn nice_pair(a: &Adj, x: usize, y: usize) -> bool {
    has_pm(a, full(a.len()) & !closed(a, x) & !closed(a, y))
}

pub fn connected(a: &Adj, alive: u64) -> bool {
    components(a, alive).len() <= 1
}

/// Smallest vertex set whose removal disconnects the graph, capped at `n - 1`.
pub fn vertex_connectivity(a: &Adj) -> usize {
    let n = a.len();
    for k in 0..n.saturating_sub(1) {
        for s in subsets_of_size(n, k) {
            if !connected(a, full(n) & !s) {
                return k;
            }
        }
    }
    n.saturating_sub(1)
}

pub fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    (0..1u64 << n).filter(|s| s.count_ones() as usize == k).collect()
}

pub fn bipartite(a: &Adj) -> bool {
    let n = a.len();
    let mut colour = vec![None; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if !a[x][y] {
                    continue;
                }
                match colour[y] {
                    None => {
                        colour[y] = Some(!colour[x].unwrap());
                        stack.push(y);
                    }
                    Some(c) if c == colour[x].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// `G - x - y` has a perfect matching for every pair of distinct vertices.
pub fn bicritical(a: &Adj) -> bool {
    let n = a.len();
    (0..n).all(|x| (x + 1..n).all(|y| has_pm(a, full(n) & !(1 << x) & !(1 << y))))
}

/// Every edge lies in some perfect matching.
pub fn matching_covered(a: &Adj) -> bool {
    let n = a.len();
    connected(a, full(n))
        && (0..n).all(|x| (x + 1..n).all(|y| !a[x][y] || has_pm(a, full(n) & !(1 << x) & !(1 << y))))
}

/// Edges crossing the shore `x`.
pub fn cut_size(a: &Adj, x: u64) -> usize {
    let n = a.len();
    (0..n)
        .filter(|&u| x >> u & 1 == 1)
        .map(|u| (0..n).filter(|&v| x >> v & 1 == 0 && a[u][v]).count())
        .sum()
}

/// Every perfect matching meets `∂(x)` in exactly one edge.
pub fn tight_by_matchings(a: &Adj, x: u64) -> bool {
    let n = a.len();
    let mut ok = true;
    each_pm(a, full(n), &mut Vec::new(), &mut |m| {
        let crossing = m.iter().filter(|&&(u, v)| (x >> u & 1) != (x >> v & 1)).count();
        ok &= crossing == 1;
    });
    ok
}

fn each_pm(a: &Adj, alive: u64, cur: &mut Vec<(usize, usize)>, f: &mut dyn FnMut(&[(usize, usize)])) {
    if alive == 0 {
        f(cur);
        return;
    }
    let u = alive.trailing_zeros() as usize;
    let rest = alive & !(1 << u);
    for v in 0..a.len() {
        if rest >> v & 1 == 1 && a[u][v] {
            cur.push((u, v));
            each_pm(a, rest & !(1 << v), cur, f);
            cur.pop();
        }
    }
}

/// Plain graph6 encoder for `n < 63`.
pub fn graph6(a: &Adj) -> String {
    let n = a.len();
    assert!(n < 63);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(a[i][j]);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        s.push((v + 63) as char);
    }
    s
}

/// All permutations of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}

/// Isomorphism by trying every bijection.
pub fn isomorphic(a: &Adj, b: &Adj) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    permutations(n)
        .iter()
        .any(|p| (0..n).all(|i| (0..n).all(|j| a[i][j] == b[p[i]][p[j]])))
}

/// Number of labelled simple cubic graphs on `n` vertices, optionally
/// connected only, by backtracking over the upper triangle.
pub fn labelled_cubic_count(n: usize, connected_only: bool) -> u64 {
    fn go(a: &mut Adj, deg: &mut [usize], u: usize, v: usize, connected_only: bool) -> u64 {
        let n = a.len();
        if u == n {
            return u64::from(!connected_only || connected(a, full(n)));
        }
        if v == n {
            return if deg[u] == 3 { go(a, deg, u + 1, u + 2, connected_only) } else { 0 };
        }
        let mut total = 0;
        // remaining slots for u must be fillable by vertices after v
        if deg[u] + (n - v) >= 3 {
            total += go(a, deg, u, v + 1, connected_only);
        }
        if deg[u] < 3 && deg[v] < 3 {
            a[u][v] = true;
            a[v][u] = true;
            deg[u] += 1;
            deg[v] += 1;
            total += go(a, deg, u, v + 1, connected_only);
            deg[u] -= 1;
            deg[v] -= 1;
            a[u][v] = false;
            a[v][u] = false;
        }
        total
    }
    let mut a = vec![vec![false; n]; n];
    let mut deg = vec![0; n];
    go(&mut a, &mut deg, 0, 1, connected_only)
}

/// Size of the automorphism group by trying every bijection.
pub fn automorphism_count(a: &Adj) -> u64 {
    let n = a.len();
    permutations(n)
        .iter()
        .filter(|p| (0..n).all(|i| (0..n).all(|j| a[i][j] == a[p[i]][p[j]])))
        .count() as u64
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
