//! Connected vertex sets with a prescribed size and neighbourhood size.
//!
//! A connected set `A` containing a root `v` is encoded by growing two sets
//! from `S = {v}`, `B = {}`: while `T = N(S) \ B` is non-empty, the
//! smallest-labelled `w` in `T` joins `S` (emitting `1`) if `w` is in `A`, and
//! joins `B` (emitting `0`) otherwise. The run ends with `S = A` and
//! `B = N(A)`, so the code has exactly `|A| - 1` ones and `|N(A)|` zeros, and
//! distinct sets get distinct codes. Hence the number of connected sets with
//! `|A| = a`, `|N(A)| = b` containing `v` is at most `C(a + b - 1, b)`.
//!
//! Enumeration walks the same binary decision tree, 1-branch first.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConnectedSetCode {
    pub root: usize,
    pub bits: Vec<bool>,
    pub a: usize,
    pub b: usize,
}

impl ConnectedSetCode {
    pub fn bit_string(&self) -> String {
        self.bits.iter().map(|&x| if x { '1' } else { '0' }).collect()
    }

    /// CLI line form: `v a b:bits`.
    pub fn line(&self) -> String {
        format!("{} {} {}:{}", self.root, self.a, self.b, self.bit_string())
    }
}

impl fmt::Display for ConnectedSetCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

pub fn parse_bits(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .enumerate()
        .map(|(i, c)| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::Decode {
                position: i,
                reason: format!("unexpected character `{c}`"),
            }),
        })
        .collect()
}

/// Incremental `S`/`B`/`T` bookkeeping shared by the encoder, decoder and
/// enumerator. Every mutation has an exact inverse so the enumerator can
/// backtrack without copying.
struct Frontier<'g> {
    g: &'g Graph,
    in_s: Vec<bool>,
    in_b: Vec<bool>,
    /// Number of neighbours each vertex has in `S`.
    s_deg: Vec<u32>,
    t: BTreeSet<usize>,
    s: Vec<usize>,
    b: Vec<usize>,
}

impl<'g> Frontier<'g> {
    fn new(g: &'g Graph, root: usize) -> Self {
        let n = g.n();
        let mut f = Frontier {
            g,
            in_s: vec![false; n],
            in_b: vec![false; n],
            s_deg: vec![0; n],
            t: BTreeSet::new(),
            s: Vec::new(),
            b: Vec::new(),
        };
        f.push_s(root);
        f
    }

    fn next(&self) -> Option<usize> {
        self.t.first().copied()
    }

    fn push_s(&mut self, w: usize) {
        self.t.remove(&w);
        self.in_s[w] = true;
        self.s.push(w);
        for &u in self.g.neighbors(w) {
            self.s_deg[u] += 1;
            if self.s_deg[u] == 1 && !self.in_s[u] && !self.in_b[u] {
                self.t.insert(u);
            }
        }
    }

    fn pop_s(&mut self) {
        let w = self.s.pop().expect("non-empty S");
        for &u in self.g.neighbors(w) {
            self.s_deg[u] -= 1;
            if self.s_deg[u] == 0 && !self.in_s[u] && !self.in_b[u] {
                self.t.remove(&u);
            }
        }
        self.in_s[w] = false;
        self.t.insert(w);
    }

    fn push_b(&mut self, w: usize) {
        self.t.remove(&w);
        self.in_b[w] = true;
        self.b.push(w);
    }

    fn pop_b(&mut self) {
        let w = self.b.pop().expect("non-empty B");
        self.in_b[w] = false;
        self.t.insert(w);
    }

    fn sorted_s(&self) -> Vec<usize> {
        let mut s = self.s.clone();
        s.sort_unstable();
        s
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::param(format!("vertex {v} out of range for n = {}", g.n())));
    }
    Ok(())
}

/// Encode the connected set `set` (which must contain `root`) as a bit sequence.
pub fn encode_connected_set(g: &Graph, set: &[usize], root: usize) -> Result<ConnectedSetCode> {
    check_vertex(g, root)?;
    let member = g.membership(set)?;
    if !member[root] {
        return Err(Error::domain(format!("root {root} is not in the set")));
    }
    if set.len() == g.n() {
        return Err(Error::domain("set is the whole vertex set and has no boundary"));
    }
    if !g.is_connected_within(&member) {
        return Err(Error::domain("set is not connected"));
    }
    let mut f = Frontier::new(g, root);
    let mut bits = Vec::new();
    // The loop closes exactly when T is empty: S = A then (A is connected)
    // and every neighbour of A has been moved to B.
    while let Some(w) = f.next() {
        if member[w] {
            f.push_s(w);
            bits.push(true);
        } else {
            f.push_b(w);
            bits.push(false);
        }
    }
    debug_assert_eq!(f.s.len(), set.len());
    Ok(ConnectedSetCode {
        root,
        a: f.s.len(),
        b: f.b.len(),
        bits,
    })
}

/// Replay a code from `root`, returning the encoded set (sorted).
pub fn decode_connected_set(g: &Graph, root: usize, bits: &[bool]) -> Result<Vec<usize>> {
    check_vertex(g, root)?;
    let mut f = Frontier::new(g, root);
    for (i, &bit) in bits.iter().enumerate() {
        let w = f.next().ok_or_else(|| Error::Decode {
            position: i,
            reason: "no undecided neighbour left but bits remain".into(),
        })?;
        if bit {
            f.push_s(w);
        } else {
            f.push_b(w);
        }
    }
    if f.next().is_some() {
        return Err(Error::Decode {
            position: bits.len(),
            reason: format!("bits exhausted with {} undecided neighbours left", f.t.len()),
        });
    }
    Ok(f.sorted_s())
}

/// Limits for [`walk_connected_sets`].
#[derive(Debug, Clone, Copy)]
pub struct WalkLimits {
    /// Maximum |S| (including the root).
    pub max_size: usize,
    /// Maximum |B|.
    pub max_boundary: usize,
    /// Vertices with label below this bound are never taken into `S`.
    pub min_label: usize,
}

impl WalkLimits {
    pub fn unbounded(root: usize) -> Self {
        WalkLimits {
            max_size: usize::MAX,
            max_boundary: usize::MAX,
            min_label: root,
        }
    }
}

/// Visit every connected set `S` containing `root` (within the limits) exactly
/// once, in decision-tree order. The visitor receives `S` (insertion order)
/// and `N(S)`.
pub fn walk_connected_sets<F>(g: &Graph, root: usize, limits: WalkLimits, mut visit: F)
where
    F: FnMut(&[usize], &[usize]),
{
    if root >= g.n() || limits.max_size == 0 || root < limits.min_label {
        return;
    }
    let mut f = Frontier::new(g, root);
    walk(&mut f, &limits, &mut visit);
}

fn walk<F>(f: &mut Frontier<'_>, limits: &WalkLimits, visit: &mut F)
where
    F: FnMut(&[usize], &[usize]),
{
    let Some(w) = f.next() else {
        visit(&f.s, &f.b);
        return;
    };
    if f.s.len() == limits.max_size {
        // S is frozen: every remaining candidate must go to B.
        if f.b.len() + f.t.len() <= limits.max_boundary {
            let pending: Vec<usize> = f.t.iter().copied().collect();
            for &u in &pending {
                f.push_b(u);
            }
            visit(&f.s, &f.b);
            for _ in &pending {
                f.pop_b();
            }
        }
        return;
    }
    if w >= limits.min_label {
        f.push_s(w);
        walk(f, limits, visit);
        f.pop_s();
    }
    if f.b.len() < limits.max_boundary {
        f.push_b(w);
        walk(f, limits, visit);
        f.pop_b();
    }
}

/// All connected sets `A` with `root ∈ A`, `|A| = a`, `|N(A)| = b`, each once,
/// sorted internally, in decision-tree order (1-branch first).
pub fn enumerate_connected_sets(g: &Graph, root: usize, a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if a == 0 {
        return out;
    }
    let limits = WalkLimits {
        max_size: a,
        max_boundary: b,
        min_label: 0,
    };
    walk_connected_sets(g, root, limits, |s, nb| {
        if s.len() == a && nb.len() == b {
            let mut set = s.to_vec();
            set.sort_unstable();
            out.push(set);
        }
    });
    out
}

/// `C(a + b - 1, b)`, the counting bound; `C(-1, 0)` is taken as 1 for `a = 0`.
pub fn counting_bound(a: usize, b: usize) -> u128 {
    if a == 0 {
        return u128::from(b == 0);
    }
    binomial((a + b - 1) as u64, b as u64)
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Outcome of checking the counting bound over every `(v, a, b)` of a graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub triples: usize,
    pub sets: usize,
    pub violations: Vec<(usize, usize, usize)>,
}

/// Enumerate every `(v, a, b)` with `1 <= a <= n - 1` and `0 <= b <= n - a`
/// and record any triple whose count exceeds `C(a + b - 1, b)`.
pub fn verify_counting_bound(g: &Graph) -> BoundCheck {
    let n = g.n();
    let mut check = BoundCheck::default();
    for v in 0..n {
        for a in 1..n {
            for b in 0..=n - a {
                let count = enumerate_connected_sets(g, v, a, b).len();
                check.triples += 1;
                check.sets += count;
                if count as u128 > counting_bound(a, b) {
                    check.violations.push((v, a, b));
                }
            }
        }
    }
    check
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{generate_base, BaseKind};

    fn path(n: usize) -> Graph {
        generate_base(BaseKind::Path, n, None).unwrap()
    }

    fn star(n: usize) -> Graph {
        generate_base(BaseKind::Star, n, None).unwrap()
    }

    #[test]
    fn encode_examples() {
        let p3 = path(3);
        let c = encode_connected_set(&p3, &[1], 1).unwrap();
        assert_eq!(c.bit_string(), "00");
        assert_eq!((c.a, c.b), (1, 2));
        let err = encode_connected_set(&p3, &[0, 1, 2], 0).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        let c = encode_connected_set(&star(4), &[0, 1], 0).unwrap();
        assert_eq!(c.bit_string(), "100");
        assert_eq!(c.line(), "0 2 2:100");
    }

    #[test]
    fn whole_component_of_disconnected_graph_has_empty_boundary() {
        // Path 0-1-2 plus an isolated vertex 3: {0,1,2} is not V.
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let c = encode_connected_set(&g, &[0, 1, 2], 0).unwrap();
        assert_eq!(c.bit_string(), "11");
        assert_eq!((c.a, c.b), (3, 0));
        assert_eq!(enumerate_connected_sets(&g, 0, 3, 0), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn encode_rejects_bad_sets() {
        let p5 = path(5);
        assert!(encode_connected_set(&p5, &[0, 2], 0).is_err());
        assert!(encode_connected_set(&p5, &[1, 2], 0).is_err());
        assert!(encode_connected_set(&p5, &[7], 7).is_err());
    }

    #[test]
    fn decode_examples() {
        let p3 = path(3);
        assert_eq!(decode_connected_set(&p3, 1, &parse_bits("00").unwrap()).unwrap(), vec![1]);
        assert_eq!(decode_connected_set(&p3, 0, &parse_bits("10").unwrap()).unwrap(), vec![0, 1]);
        match decode_connected_set(&p3, 1, &parse_bits("0").unwrap()) {
            Err(Error::Decode { position, .. }) => assert_eq!(position, 1),
            other => panic!("expected decode error, got {other:?}"),
        }
        match decode_connected_set(&p3, 0, &parse_bits("1111").unwrap()) {
            Err(Error::Decode { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected decode error, got {other:?}"),
        }
        assert!(parse_bits("01x").is_err());
    }

    #[test]
    fn enumerate_examples() {
        let k15 = star(6);
        let sets = enumerate_connected_sets(&k15, 0, 3, 3);
        assert_eq!(sets.len(), 10);
        assert_eq!(counting_bound(3, 3), 10);

        let p5 = path(5);
        assert_eq!(enumerate_connected_sets(&p5, 2, 2, 2), vec![vec![1, 2], vec![2, 3]]);
        assert!(counting_bound(2, 2) >= 2);

        for v in 0..5 {
            assert_eq!(enumerate_connected_sets(&p5, v, 1, p5.degree(v)), vec![vec![v]]);
        }
        assert!(enumerate_connected_sets(&p5, 0, 0, 0).is_empty());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(60, 30), 118_264_581_564_861_424);
        assert_eq!(counting_bound(1, 0), 1);
    }

    #[test]
    fn unbounded_walk_visits_each_connected_set_once() {
        let g = generate_base(BaseKind::Grid, 9, None).unwrap();
        let mut seen = BTreeSet::new();
        for root in 0..g.n() {
            walk_connected_sets(&g, root, WalkLimits::unbounded(root), |s, _| {
                let mut s = s.to_vec();
                s.sort_unstable();
                assert_eq!(s[0], root);
                assert!(seen.insert(s));
            });
        }
        // Brute force: connected non-empty subsets of the 3x3 grid.
        let brute = (1u32..1 << 9)
            .filter(|&mask| {
                let member: Vec<bool> = (0..9).map(|i| mask >> i & 1 == 1).collect();
                g.is_connected_within(&member)
            })
            .count();
        assert_eq!(seen.len(), brute);
    }
}
