//! Unrestricted automorphism enumeration by backtracking.
//!
//! Vertices are mapped one at a time in a fixed order that always picks the
//! unmapped vertex with the most mapped neighbours, so cycles close as early
//! as possible. A vertex's candidates are the unused neighbours of its
//! parent's image that agree with every mapped neighbour, and the number of
//! used neighbours of the candidate must equal the number of mapped
//! neighbours of the vertex. Distances to the first [`ANCHORS`] mapped
//! vertices must also be preserved, which prunes a wrong branch long before
//! it closes a cycle. No colour refinement and no group structure is
//! involved, which keeps this independent of [`super::stabilizer_search`].

use rayon::prelude::*;

use super::{table_is_automorphism, AutMap};
use crate::cayley::CayleyGraph;
use crate::error::{Error, Result};
use crate::parallel::Parallelism;

/// Refuse graphs above `7!` vertices.
pub const BRUTEFORCE_MAX_VERTICES: u128 = 5040;

const UNSET: u32 = u32::MAX;
/// Mapped vertices whose distances every later candidate must match.
const ANCHORS: usize = 24;

struct Plan {
    order: Vec<u32>,
    /// For position `i`, a neighbour mapped earlier.
    parent: Vec<u32>,
    /// For position `i`, every neighbour mapped earlier.
    earlier: Vec<Vec<u32>>,
    /// All-pairs distances, row-major.
    dist: Vec<u8>,
}

fn plan(graph: &CayleyGraph) -> Plan {
    let count = graph.vertex_count() as usize;
    let mut placed = vec![false; count];
    let mut mapped_nbrs = vec![0usize; count];
    let mut last_touch = vec![0usize; count];
    let mut order = vec![0u32];
    placed[0] = true;
    for &w in graph.row(0) {
        mapped_nbrs[w as usize] += 1;
        last_touch[w as usize] = 1;
    }
    let mut frontier: Vec<u32> = graph.row(0).to_vec();
    frontier.sort_unstable();
    frontier.dedup();
    while order.len() < count {
        let (idx, &v) = frontier
            .iter()
            .enumerate()
            .max_by(|(_, &x), (_, &y)| {
                let (x, y) = (x as usize, y as usize);
                mapped_nbrs[x]
                    .cmp(&mapped_nbrs[y])
                    .then(last_touch[x].cmp(&last_touch[y]))
                    .then(y.cmp(&x))
            })
            .expect("connected graph");
        frontier.swap_remove(idx);
        placed[v as usize] = true;
        order.push(v);
        let stamp = order.len();
        for &w in graph.row(v) {
            if !placed[w as usize] {
                if mapped_nbrs[w as usize] == 0 {
                    frontier.push(w);
                }
                mapped_nbrs[w as usize] += 1;
                last_touch[w as usize] = stamp;
            }
        }
    }
    let mut position = vec![0usize; count];
    for (i, &v) in order.iter().enumerate() {
        position[v as usize] = i;
    }
    let earlier: Vec<Vec<u32>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            graph
                .row(v)
                .iter()
                .copied()
                .filter(|&w| position[w as usize] < i)
                .collect()
        })
        .collect();
    let parent = earlier
        .iter()
        .map(|e| e.first().copied().unwrap_or(UNSET))
        .collect();
    Plan {
        dist: distances(graph),
        order,
        parent,
        earlier,
    }
}

fn distances(graph: &CayleyGraph) -> Vec<u8> {
    let count = graph.vertex_count() as usize;
    let rows: Vec<Vec<u8>> = (0..count as u32)
        .into_par_iter()
        .map(|src| {
            let mut d = vec![u8::MAX; count];
            d[src as usize] = 0;
            let mut queue = std::collections::VecDeque::from([src]);
            while let Some(v) = queue.pop_front() {
                let next = d[v as usize] + 1;
                for &w in graph.row(v) {
                    if d[w as usize] == u8::MAX {
                        d[w as usize] = next;
                        queue.push_back(w);
                    }
                }
            }
            d
        })
        .collect();
    rows.concat()
}

/// Calls `visit` with every automorphism table sending `e` to `target`.
fn search_from(graph: &CayleyGraph, plan: &Plan, target: u32, visit: &mut impl FnMut(&[u32])) {
    let count = plan.order.len();
    let mut image = vec![UNSET; count];
    let mut used = vec![false; count];
    image[0] = target;
    used[target as usize] = true;
    // candidate stacks per position
    let mut cands: Vec<Vec<u32>> = vec![Vec::new(); count];
    let mut depth = 1;
    if count == 1 {
        visit(&image);
        return;
    }
    cands[1] = candidates(graph, plan, 1, &image, &used);
    loop {
        let v = plan.order[depth] as usize;
        if image[v] != UNSET {
            used[image[v] as usize] = false;
            image[v] = UNSET;
        }
        match cands[depth].pop() {
            None => {
                if depth == 1 {
                    return;
                }
                depth -= 1;
            }
            Some(c) => {
                image[v] = c;
                used[c as usize] = true;
                if depth + 1 == count {
                    if table_is_automorphism(graph, &image) {
                        visit(&image);
                    }
                } else {
                    depth += 1;
                    cands[depth] = candidates(graph, plan, depth, &image, &used);
                }
            }
        }
    }
}

fn candidates(graph: &CayleyGraph, plan: &Plan, i: usize, image: &[u32], used: &[bool]) -> Vec<u32> {
    let parent_image = image[plan.parent[i] as usize];
    let earlier = &plan.earlier[i];
    let count = plan.order.len();
    let v = plan.order[i] as usize;
    let anchors = &plan.order[..i.min(ANCHORS)];
    let mut out: Vec<u32> = graph
        .row(parent_image)
        .iter()
        .copied()
        .filter(|&c| !used[c as usize])
        .filter(|&c| {
            let row = graph.row(c);
            earlier.iter().all(|&m| row.contains(&image[m as usize]))
                && row.iter().filter(|&&y| used[y as usize]).count() == earlier.len()
                && anchors.iter().all(|&a| {
                    plan.dist[a as usize * count + v]
                        == plan.dist[image[a as usize] as usize * count + c as usize]
                })
        })
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

fn check_size(graph: &CayleyGraph) -> Result<()> {
    if !graph.is_explicit() {
        return Err(Error::ImplicitGraph);
    }
    if graph.vertex_count() > BRUTEFORCE_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "brute-force automorphisms need at most {BRUTEFORCE_MAX_VERTICES} vertices"
        )));
    }
    if graph.connected() != Some(true) {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Every automorphism of the graph, sorted by image table.
pub fn bruteforce_aut(graph: &CayleyGraph, par: &Parallelism) -> Result<Vec<AutMap>> {
    check_size(graph)?;
    let p = plan(graph);
    let count = graph.vertex_count() as u32;
    let mut tables: Vec<Vec<u32>> = par.install(|| {
        (0..count)
            .into_par_iter()
            .flat_map_iter(|target| {
                let mut found = Vec::new();
                search_from(graph, &p, target, &mut |t| found.push(t.to_vec()));
                found
            })
            .collect()
    });
    tables.sort();
    Ok(tables
        .into_iter()
        .map(|t| AutMap::from_table(graph.degree(), t))
        .collect())
}

#[derive(Clone, Debug)]
pub struct BruteForceSummary {
    pub order: u128,
    /// The automorphisms fixing `e`, sorted.
    pub stabilizer: Vec<AutMap>,
    /// Number of automorphisms sending `e` to each vertex, by rank.
    pub per_image: Vec<u64>,
}

/// Counts all automorphisms without storing them.
pub fn bruteforce_aut_count(graph: &CayleyGraph, par: &Parallelism) -> Result<BruteForceSummary> {
    check_size(graph)?;
    let p = plan(graph);
    let count = graph.vertex_count() as u32;
    let per_image: Vec<(u64, Vec<Vec<u32>>)> = par.install(|| {
        (0..count)
            .into_par_iter()
            .map(|target| {
                let mut k = 0u64;
                let mut fixed = Vec::new();
                search_from(graph, &p, target, &mut |t| {
                    k += 1;
                    if target == 0 {
                        fixed.push(t.to_vec());
                    }
                });
                (k, fixed)
            })
            .collect()
    });
    let mut stabilizer: Vec<Vec<u32>> = Vec::new();
    let mut counts = Vec::with_capacity(per_image.len());
    for (k, fixed) in per_image {
        counts.push(k);
        stabilizer.extend(fixed);
    }
    stabilizer.sort();
    Ok(BruteForceSummary {
        order: counts.iter().map(|&k| k as u128).sum(),
        stabilizer: stabilizer
            .into_iter()
            .map(|t| AutMap::from_table(graph.degree(), t))
            .collect(),
        per_image: counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::GraphOptions;
    use crate::genset::GenSet;
    use crate::perm::Permutation;

    fn graph_of(set: &GenSet) -> CayleyGraph {
        CayleyGraph::build(set, &GraphOptions::default(), &Parallelism::sequential()).unwrap()
    }

    #[test]
    fn prism_has_twelve_automorphisms() {
        let g = graph_of(&GenSet::standard(3).unwrap());
        let all = bruteforce_aut(&g, &Parallelism::sequential()).unwrap();
        assert_eq!(all.len(), 12);
    }

    #[test]
    fn complete_bipartite_k33() {
        // Cay(S_3, all transpositions) is K_{3,3}, with 2·3!·3! = 72 automorphisms
        let p = |s| Permutation::parse(s, 3).unwrap();
        let set = GenSet::custom(vec![p("(1 2)"), p("(1 3)"), p("(2 3)")]).unwrap();
        let g = graph_of(&set);
        assert_eq!(bruteforce_aut(&g, &Parallelism::sequential()).unwrap().len(), 72);
        let s = bruteforce_aut_count(&g, &Parallelism::sequential()).unwrap();
        assert_eq!(s.order, 72);
        assert_eq!(s.stabilizer.len(), 12);
    }

    #[test]
    fn size_limit() {
        let g = graph_of(&GenSet::standard(8).unwrap());
        assert!(matches!(
            bruteforce_aut(&g, &Parallelism::sequential()),
            Err(Error::TooLarge(_))
        ));
    }
}
