use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::refine::{refine_pair, Colouring};
use super::{inner_witness, table_is_automorphism, AutMap};
use crate::cayley::CayleyGraph;
use crate::error::{Error, Result};
use crate::parallel::Parallelism;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Search-tree nodes, seeds included.
    pub nodes: u64,
    /// Nodes abandoned because the two refined colourings disagreed.
    pub prunes: u64,
    pub refinement_rounds: u64,
    /// Discrete leaves whose map failed the edge check.
    pub rejected_leaves: u64,
}

impl SearchStats {
    fn merge(&mut self, o: SearchStats) {
        self.nodes += o.nodes;
        self.prunes += o.prunes;
        self.refinement_rounds += o.refinement_rounds;
        self.rejected_leaves += o.rejected_leaves;
    }
}

#[derive(Clone, Debug)]
pub struct StabilizerResult {
    pub n: usize,
    /// Every automorphism fixing `e`, sorted by image table.
    pub elements: Vec<AutMap>,
    /// `|V| · |elements|`, valid because right translations act regularly.
    pub aut_order: u128,
    pub stats: SearchStats,
    pub millis: u128,
}

/// Computes the full stabilizer of the identity vertex.
///
/// Every choice of images for the neighbours of `e` seeds one search: the seed
/// colouring individualizes `e` and its neighbours, the target colouring
/// individualizes `e` and the chosen images. Both are refined together; a
/// histogram mismatch prunes the seed, a discrete result defines a single
/// candidate map, and otherwise the first non-singleton cell is split by
/// individualizing its least vertex against every vertex of the matching
/// target cell. Each candidate is verified edge by edge.
///
/// Seeds run in parallel and results are merged in seed order, so the output
/// is identical for any worker count.
pub fn stabilizer_search(graph: &CayleyGraph, par: &Parallelism) -> Result<StabilizerResult> {
    let start = Instant::now();
    let adj = graph.adjacency().ok_or(Error::ImplicitGraph)?;
    if graph.connected() != Some(true) {
        return Err(Error::Disconnected);
    }
    let d = graph.valency();
    let count = graph.vertex_count() as usize;
    let root_nbrs = graph.row(0).to_vec();
    let seeds = permutations(d);

    let per_seed: Vec<(Vec<Vec<u32>>, SearchStats)> = par.install(|| {
        seeds
            .par_iter()
            .map(|perm| {
                let mut a = vec![0u32; count];
                let mut b = vec![0u32; count];
                a[0] = 1;
                b[0] = 1;
                for (i, &p) in perm.iter().enumerate() {
                    a[root_nbrs[i] as usize] = 2 + i as u32;
                    b[root_nbrs[p] as usize] = 2 + i as u32;
                }
                let classes = if count > d + 1 { d + 2 } else { d + 1 };
                let mut found = Vec::new();
                let mut stats = SearchStats::default();
                descend(
                    graph,
                    adj,
                    Colouring { colours: a, classes },
                    Colouring { colours: b, classes },
                    &mut found,
                    &mut stats,
                );
                (found, stats)
            })
            .collect()
    });

    let mut tables = Vec::new();
    let mut stats = SearchStats::default();
    for (found, s) in per_seed {
        tables.extend(found);
        stats.merge(s);
    }
    tables.sort();
    let n = graph.degree();
    let elements = tables
        .into_iter()
        .map(|t| {
            let witness = inner_witness(graph, &t);
            let mut m = AutMap::from_table(n, t);
            m.witness = witness;
            m
        })
        .collect::<Vec<_>>();
    Ok(StabilizerResult {
        n,
        aut_order: graph.vertex_count() * elements.len() as u128,
        elements,
        stats,
        millis: start.elapsed().as_millis(),
    })
}

fn descend(
    graph: &CayleyGraph,
    adj: &[u32],
    mut a: Colouring,
    mut b: Colouring,
    found: &mut Vec<Vec<u32>>,
    stats: &mut SearchStats,
) {
    stats.nodes += 1;
    if !refine_pair(adj, graph.valency(), &mut a, &mut b, &mut stats.refinement_rounds) {
        stats.prunes += 1;
        return;
    }
    let count = a.colours.len();
    if a.classes == count {
        let mut by_colour = vec![0u32; count];
        for (w, &c) in b.colours.iter().enumerate() {
            by_colour[c as usize] = w as u32;
        }
        let table: Vec<u32> = a.colours.iter().map(|&c| by_colour[c as usize]).collect();
        if table_is_automorphism(graph, &table) {
            found.push(table);
        } else {
            stats.rejected_leaves += 1;
        }
        return;
    }
    // first non-singleton cell by colour id
    let mut sizes = vec![0u32; a.classes];
    for &c in &a.colours {
        sizes[c as usize] += 1;
    }
    let cell = sizes.iter().position(|&s| s > 1).expect("non-discrete") as u32;
    let pivot = a.colours.iter().position(|&c| c == cell).expect("cell member");
    let targets: Vec<usize> = (0..count).filter(|&w| b.colours[w] == cell).collect();
    let fresh = a.classes as u32;
    for y in targets {
        let mut a2 = Colouring {
            colours: a.colours.clone(),
            classes: a.classes + 1,
        };
        let mut b2 = Colouring {
            colours: b.colours.clone(),
            classes: b.classes + 1,
        };
        a2.colours[pivot] = fresh;
        b2.colours[y] = fresh;
        descend(graph, adj, a2, b2, found, stats);
    }
}

/// All permutations of `0..d` in lexicographic order.
fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..d).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..d).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..d).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}
