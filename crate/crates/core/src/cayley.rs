//! The Cayley graph `Cay(S_n, S)`: `g ~ h` iff `h g⁻¹ ∈ S`, so the
//! neighbours of `g` are the products `s·g`.
//!
//! Vertices are indexed by Lehmer rank. Below the memory budget the graph is
//! materialized as a flat adjacency table; above it only the neighbour
//! oracle is available.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::genset::{GenSet, Word};
use crate::parallel::Parallelism;
use crate::perm::Permutation;

/// Largest degree whose ranks fit in `u64`.
pub const MAX_RANK_DEGREE: usize = 20;
/// Largest degree whose ranks fit in the `u32` adjacency table.
pub const MAX_TABLE_DEGREE: usize = 12;

pub type VertexRank = u64;

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Lehmer rank: position of `p` in the lexicographic order of `S_n`.
pub fn rank(p: &Permutation) -> Result<VertexRank> {
    let n = p.degree();
    if n > MAX_RANK_DEGREE {
        return Err(Error::TooLarge(format!("ranks need n <= {MAX_RANK_DEGREE}")));
    }
    Ok(rank_small(p.as_slice()))
}

fn rank_small(images: &[u32]) -> u64 {
    let n = images.len();
    let mut seen: u32 = 0;
    let mut r: u64 = 0;
    for (i, &x) in images.iter().enumerate() {
        let smaller_used = (seen & ((1u32 << x) - 1)).count_ones();
        let digit = (x - smaller_used) as u64;
        r = r * (n - i) as u64 + digit;
        seen |= 1 << x;
    }
    r
}

pub fn unrank(r: VertexRank, n: usize) -> Result<Permutation> {
    if n > MAX_RANK_DEGREE {
        return Err(Error::TooLarge(format!("ranks need n <= {MAX_RANK_DEGREE}")));
    }
    if r as u128 >= factorial(n) {
        return Err(Error::RankOutOfRange { rank: r, degree: n });
    }
    Permutation::from_zero_based(unrank_small(r, n))
}

fn unrank_small(mut r: u64, n: usize) -> Vec<u32> {
    let mut digits = vec![0u32; n];
    for i in (0..n).rev() {
        let base = (n - i) as u64;
        digits[i] = (r % base) as u32;
        r /= base;
    }
    let mut unused: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    digits
        .into_iter()
        .map(|d| {
            // d-th set bit of `unused`
            let mut m = unused;
            for _ in 0..d {
                m &= m - 1;
            }
            let x = m.trailing_zeros();
            unused &= !(1 << x);
            x
        })
        .collect()
}

/// `[s·g for s in S]`, in generator order.
pub fn neighbors(g: &Permutation, set: &GenSet) -> Result<Vec<Permutation>> {
    if g.degree() != set.degree() {
        return Err(Error::DegreeMismatch(g.degree(), set.degree()));
    }
    Ok(set.elements().iter().map(|s| s.compose_unchecked(g)).collect())
}

pub fn adjacent(g: &Permutation, h: &Permutation, set: &GenSet) -> bool {
    set.contains(&h.compose_unchecked(&g.inverse()))
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphOptions {
    pub memory_budget: u128,
    /// Explicit tables are refused above this degree even if they fit.
    pub max_explicit_degree: usize,
}

impl Default for GraphOptions {
    fn default() -> Self {
        GraphOptions {
            memory_budget: 8 << 30,
            max_explicit_degree: 10,
        }
    }
}

impl GraphOptions {
    /// Lifts the degree ceiling to the table limit.
    pub fn big(mut self) -> Self {
        self.max_explicit_degree = MAX_TABLE_DEGREE;
        self
    }

    pub fn explicit_bytes(n: usize, valency: usize) -> u128 {
        factorial(n) * valency as u128 * std::mem::size_of::<u32>() as u128
    }

    pub fn admits_explicit(&self, n: usize, valency: usize) -> bool {
        n <= self.max_explicit_degree.min(MAX_TABLE_DEGREE)
            && Self::explicit_bytes(n, valency) <= self.memory_budget
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphMode {
    Explicit,
    Implicit,
}

/// Vertex universe `S_n` with its neighbour structure.
pub struct CayleyGraph {
    n: usize,
    set: GenSet,
    adjacency: Option<Vec<u32>>,
    connected: Option<bool>,
}

impl CayleyGraph {
    /// Explicit when the table fits `opts`, implicit otherwise.
    pub fn build(set: &GenSet, opts: &GraphOptions, par: &Parallelism) -> Result<CayleyGraph> {
        if opts.admits_explicit(set.degree(), set.len()) {
            Self::build_explicit(set, opts, par)
        } else {
            Ok(Self::implicit(set))
        }
    }

    pub fn implicit(set: &GenSet) -> CayleyGraph {
        CayleyGraph {
            n: set.degree(),
            set: set.clone(),
            adjacency: None,
            connected: None,
        }
    }

    /// Materializes the adjacency table or refuses with the required size.
    pub fn build_explicit(
        set: &GenSet,
        opts: &GraphOptions,
        par: &Parallelism,
    ) -> Result<CayleyGraph> {
        let n = set.degree();
        let limit = opts.max_explicit_degree.min(MAX_TABLE_DEGREE);
        if n > limit {
            return Err(Error::DegreeCeiling { n, limit });
        }
        let required = GraphOptions::explicit_bytes(n, set.len());
        if required > opts.memory_budget {
            return Err(Error::BudgetExceeded {
                n,
                required,
                budget: opts.memory_budget,
            });
        }
        let d = set.len();
        let count = factorial(n) as usize;
        let gens: Vec<&[u32]> = set.elements().iter().map(|s| s.as_slice()).collect();
        let mut adjacency = vec![0u32; count * d];
        par.install(|| {
            adjacency
                .par_chunks_mut(d * 4096)
                .enumerate()
                .for_each(|(chunk, rows)| {
                    let mut prod = vec![0u32; n];
                    for (i, row) in rows.chunks_mut(d).enumerate() {
                        let g = unrank_small((chunk * 4096 + i) as u64, n);
                        for (slot, s) in row.iter_mut().zip(&gens) {
                            // (s·g)[x] = g[s[x]]
                            for (x, p) in prod.iter_mut().enumerate() {
                                *p = g[s[x] as usize];
                            }
                            *slot = rank_small(&prod) as u32;
                        }
                    }
                });
        });
        let mut graph = CayleyGraph {
            n,
            set: set.clone(),
            adjacency: Some(adjacency),
            connected: None,
        };
        graph.connected = Some(graph.count_reachable() == count);
        Ok(graph)
    }

    fn count_reachable(&self) -> usize {
        let adj = self.adjacency.as_ref().expect("explicit");
        let d = self.set.len();
        let count = adj.len() / d;
        let mut seen = vec![0u64; count.div_ceil(64)];
        let mut queue = VecDeque::from([0u32]);
        seen[0] |= 1;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v as usize * d..(v as usize + 1) * d] {
                let (word, bit) = (w as usize / 64, w % 64);
                if seen[word] & (1 << bit) == 0 {
                    seen[word] |= 1 << bit;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn genset(&self) -> &GenSet {
        &self.set
    }

    pub fn valency(&self) -> usize {
        self.set.len()
    }

    pub fn mode(&self) -> GraphMode {
        if self.adjacency.is_some() {
            GraphMode::Explicit
        } else {
            GraphMode::Implicit
        }
    }

    pub fn is_explicit(&self) -> bool {
        self.adjacency.is_some()
    }

    pub fn vertex_count(&self) -> u128 {
        factorial(self.n)
    }

    pub fn edge_count(&self) -> u128 {
        self.vertex_count() * self.valency() as u128 / 2
    }

    /// Exact in explicit mode, unknown in implicit mode.
    pub fn connected(&self) -> Option<bool> {
        self.connected
    }

    pub fn adjacency(&self) -> Option<&[u32]> {
        self.adjacency.as_deref()
    }

    /// Neighbour ranks of vertex `v` in generator order; explicit mode only.
    pub fn row(&self, v: u32) -> &[u32] {
        let d = self.set.len();
        let adj = self.adjacency.as_ref().expect("explicit graph");
        &adj[v as usize * d..(v as usize + 1) * d]
    }

    pub fn neighbors(&self, g: &Permutation) -> Result<Vec<Permutation>> {
        neighbors(g, &self.set)
    }

    /// Plain-text edge list of rank pairs, `a b` with `a < b`, sorted.
    pub fn edge_list(&self) -> Result<String> {
        let adj = self.adjacency.as_ref().ok_or(Error::ImplicitGraph)?;
        let d = self.set.len();
        let mut edges = BTreeSet::new();
        for (v, row) in adj.chunks(d).enumerate() {
            for &w in row {
                let v = v as u32;
                edges.insert((v.min(w), v.max(w)));
            }
        }
        let mut out = String::new();
        for (a, b) in edges {
            writeln!(out, "{a} {b}").expect("write to string");
        }
        Ok(out)
    }
}

/// Breadth-first ball around `center`, sorted by distance then vertex.
pub fn ball(set: &GenSet, center: &Permutation, radius: usize) -> Result<Vec<(Permutation, usize)>> {
    if center.degree() != set.degree() {
        return Err(Error::DegreeMismatch(center.degree(), set.degree()));
    }
    let mut dist = HashMap::new();
    dist.insert(center.clone(), 0usize);
    let mut frontier = vec![center.clone()];
    for d in 1..=radius {
        let mut next = Vec::new();
        for v in &frontier {
            for s in set.elements() {
                let w = s.compose_unchecked(v);
                if !dist.contains_key(&w) {
                    dist.insert(w.clone(), d);
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<_> = dist.into_iter().collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalStructureReport {
    pub applicable: bool,
    pub ball_size: usize,
    /// The radius-2 ball is exactly the ten labelled vertices, at the
    /// labelled distances.
    pub vertices_match: bool,
    /// `e`, `t`, `c`, `c⁻¹` have exactly the drawn neighbourhoods.
    pub neighborhoods_match: bool,
    /// Whether the ball induces a tree (no edges among the distance-2 layer).
    pub induced_tree: bool,
    pub pass: bool,
}

/// Labelled radius-2 neighbourhood of `e`: `(word, distance, neighbour words)`.
const LOCAL_PICTURE: [(&str, usize, &[&str]); 4] = [
    ("e", 0, &["t", "c", "c-"]),
    ("t", 1, &["e", "c t", "c- t"]),
    ("c", 1, &["e", "t c", "c^2"]),
    ("c-", 1, &["e", "t c-", "c^-2"]),
];
const LOCAL_OUTER: [&str; 6] = ["c t", "c- t", "t c", "c^2", "t c-", "c^-2"];

/// Checks the radius-2 ball of `e` against the labelled local picture.
pub fn verify_local_structure(n: usize) -> Result<LocalStructureReport> {
    let set = GenSet::standard(n)?;
    if n < 5 {
        return Ok(LocalStructureReport {
            applicable: false,
            ball_size: 0,
            vertices_match: false,
            neighborhoods_match: false,
            induced_tree: false,
            pass: false,
        });
    }
    let eval = |w: &str| -> Result<Permutation> { w.parse::<Word>()?.evaluate_in(&set) };
    let b = ball(&set, &Permutation::identity(n), 2)?;
    let mut expected: Vec<(Permutation, usize)> = Vec::new();
    for (w, d, _) in LOCAL_PICTURE {
        expected.push((eval(w)?, d));
    }
    for w in LOCAL_OUTER {
        expected.push((eval(w)?, 2));
    }
    expected.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    let vertices_match = expected == b;

    let mut neighborhoods_match = true;
    for (w, _, nbrs) in LOCAL_PICTURE {
        let got: BTreeSet<Permutation> = neighbors(&eval(w)?, &set)?.into_iter().collect();
        let want = nbrs.iter().map(|x| eval(x)).collect::<Result<BTreeSet<_>>>()?;
        neighborhoods_match &= got == want;
    }

    let outer = LOCAL_OUTER.iter().map(|x| eval(x)).collect::<Result<Vec<_>>>()?;
    let mut induced_tree = true;
    for (i, a) in outer.iter().enumerate() {
        for b in &outer[i + 1..] {
            if adjacent(a, b, &set) {
                induced_tree = false;
            }
        }
    }
    Ok(LocalStructureReport {
        applicable: true,
        ball_size: b.len(),
        vertices_match,
        neighborhoods_match,
        induced_tree,
        pass: vertices_match && neighborhoods_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn std_set(n: usize) -> GenSet {
        GenSet::standard(n).unwrap()
    }

    #[test]
    fn rank_conventions() {
        assert_eq!(rank(&Permutation::identity(5)).unwrap(), 0);
        for n in 1..=12 {
            let rev: Vec<usize> = (1..=n).rev().collect();
            let p = Permutation::from_one_line(&rev).unwrap();
            assert_eq!(rank(&p).unwrap() as u128, factorial(n) - 1);
        }
        assert!(matches!(
            unrank(120, 5),
            Err(Error::RankOutOfRange { rank: 120, degree: 5 })
        ));
        assert!(rank(&Permutation::identity(21)).is_err());
        let big: Vec<usize> = (1..=20).rev().collect();
        let p = Permutation::from_one_line(&big).unwrap();
        assert_eq!(rank(&p).unwrap() as u128, factorial(20) - 1);
        assert_eq!(unrank(rank(&p).unwrap(), 20).unwrap(), p);
    }

    #[test]
    fn rank_is_lexicographic() {
        let mut prev: Option<Permutation> = None;
        for r in 0..720 {
            let p = unrank(r, 6).unwrap();
            if let Some(q) = prev {
                assert!(q < p);
            }
            prev = Some(p);
        }
    }

    #[test]
    fn neighbors_of_cycle_powers() {
        let n = 13;
        let set = std_set(n);
        let c = Permutation::n_cycle(n).unwrap();
        let t = Permutation::transposition(n, 1, 2).unwrap();
        let e = Permutation::identity(n);
        let nb: BTreeSet<_> = neighbors(&c, &set).unwrap().into_iter().collect();
        let want: BTreeSet<_> = [e.clone(), t.compose(&c).unwrap(), c.power(2)].into_iter().collect();
        assert_eq!(nb, want);
        let ci = c.inverse();
        let nb: BTreeSet<_> = neighbors(&ci, &set).unwrap().into_iter().collect();
        let want: BTreeSet<_> = [e.clone(), t.compose(&ci).unwrap(), c.power(-2)].into_iter().collect();
        assert_eq!(nb, want);
        assert_eq!(neighbors(&e, &set).unwrap(), set.elements());
        assert!(neighbors(&Permutation::identity(4), &set).is_err());
    }

    #[test]
    fn small_explicit_graphs() {
        let par = Parallelism::sequential();
        let g = CayleyGraph::build(&std_set(4), &GraphOptions::default(), &par).unwrap();
        assert!(g.is_explicit());
        assert_eq!(g.vertex_count(), 24);
        assert_eq!(g.edge_count(), 36);
        assert_eq!(g.connected(), Some(true));
        assert_eq!(g.edge_list().unwrap().lines().count(), 36);
        let g = CayleyGraph::build(&std_set(8), &GraphOptions::default(), &par).unwrap();
        assert_eq!(g.vertex_count(), 40320);
        assert_eq!(g.edge_list().unwrap().lines().count(), 60480);
    }

    #[test]
    fn large_degrees_are_implicit() {
        let par = Parallelism::sequential();
        let g = CayleyGraph::build(&std_set(13), &GraphOptions::default(), &par).unwrap();
        assert_eq!(g.mode(), GraphMode::Implicit);
        assert!(g.edge_list().is_err());
        let g = CayleyGraph::build(&std_set(11), &GraphOptions::default(), &par).unwrap();
        assert_eq!(g.mode(), GraphMode::Implicit);
    }

    #[test]
    fn explicit_refusals_name_required_bytes() {
        let par = Parallelism::sequential();
        let opts = GraphOptions {
            memory_budget: 1000,
            max_explicit_degree: 10,
        };
        match CayleyGraph::build_explicit(&std_set(6), &opts, &par) {
            Err(Error::BudgetExceeded { required, .. }) => assert_eq!(required, 720 * 3 * 4),
            other => panic!("unexpected {:?}", other.map(|g| g.vertex_count())),
        }
        assert!(matches!(
            CayleyGraph::build_explicit(&std_set(11), &GraphOptions::default(), &par),
            Err(Error::DegreeCeiling { n: 11, limit: 10 })
        ));
        // small budget falls back to implicit
        let g = CayleyGraph::build(&std_set(6), &opts, &par).unwrap();
        assert!(!g.is_explicit());
    }

    #[test]
    fn disconnected_custom_set() {
        let p = |s| Permutation::parse(s, 4).unwrap();
        let set = GenSet::custom(vec![p("(1 2)"), p("(3 4)")]).unwrap();
        let g = CayleyGraph::build(&set, &GraphOptions::default(), &Parallelism::sequential()).unwrap();
        assert_eq!(g.connected(), Some(false));
    }

    #[test]
    fn balls() {
        let set = std_set(13);
        let e = Permutation::identity(13);
        let b1 = ball(&set, &e, 1).unwrap();
        assert_eq!(b1.len(), 4);
        assert_eq!(b1[0], (e.clone(), 0));
        assert!(b1[1..].iter().all(|(p, d)| *d == 1 && set.contains(p)));
        assert_eq!(ball(&set, &e, 2).unwrap().len(), 10);
        assert_eq!(ball(&set, &e, 0).unwrap().len(), 1);
    }

    #[test]
    fn ball_of_smallest_graph_is_whole_graph() {
        // brute-force distances on the 6-vertex graph
        let set = std_set(3);
        let all = crate::genset::closure(set.elements(), 10).unwrap();
        let e = Permutation::identity(3);
        let mut dist: HashMap<Permutation, usize> = HashMap::from([(e.clone(), 0)]);
        loop {
            let mut changed = false;
            for v in &all {
                for w in &all {
                    if let (Some(&dv), true) = (dist.get(v), adjacent(v, w, &set)) {
                        let dw = dist.get(w).copied().unwrap_or(usize::MAX);
                        if dv + 1 < dw {
                            dist.insert(w.clone(), dv + 1);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let b = ball(&set, &e, 2).unwrap();
        assert_eq!(b.len(), 6);
        for (p, d) in b {
            assert_eq!(dist[&p], d);
        }
    }

    #[test]
    fn local_structure() {
        for n in [5, 13, 20] {
            let r = verify_local_structure(n).unwrap();
            assert!(r.pass, "n = {n}: {r:?}");
            assert_eq!(r.ball_size, 10);
        }
        assert!(verify_local_structure(13).unwrap().induced_tree);
        assert!(!verify_local_structure(4).unwrap().applicable);
    }
}
