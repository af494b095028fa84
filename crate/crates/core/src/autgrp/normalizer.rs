//! The group `R(S_n) ⋊ Aut(S_n, S)` and the verdicts built on it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::group_auts::{aut_gs_bruteforce, aut_gs_fast, AUT_GS_BRUTEFORCE_MAX};
use super::stabilizer::{stabilizer_search, StabilizerResult};
use super::{table_is_automorphism, AutMap, MapForm};
use crate::cayley::{factorial, rank, unrank, CayleyGraph, GraphOptions};
use crate::error::{Error, Result};
use crate::genset::{GenSet, Label, Provenance};
use crate::parallel::Parallelism;
use crate::perm::Permutation;

/// Seed for every sampled check, so reports are reproducible.
pub const SAMPLE_SEED: u64 = 0x5eed_ca1e;

/// `{x ↦ (g⁻¹xg)·h : g ∈ inner, h ∈ S_n}`.
#[derive(Clone, Debug)]
pub struct NormalizerGroup {
    pub set: GenSet,
    /// The elements `g` with `g⁻¹Sg = S`, sorted.
    pub inner: Vec<Permutation>,
}

/// Builds the normalizer of the right regular representation for a
/// standard or variant set, or for any set with `n ≤ 8`.
pub fn build_normalizer_group(set: &GenSet) -> Result<NormalizerGroup> {
    let inner = aut_gs(set)?;
    Ok(NormalizerGroup {
        set: set.clone(),
        inner,
    })
}

fn aut_gs(set: &GenSet) -> Result<Vec<Permutation>> {
    match set.provenance() {
        Provenance::Custom => aut_gs_bruteforce(set),
        _ => aut_gs_fast(set),
    }
}

impl NormalizerGroup {
    pub fn degree(&self) -> usize {
        self.set.degree()
    }

    pub fn order(&self) -> u128 {
        self.inner.len() as u128 * factorial(self.degree())
    }

    /// Element `idx`, ordered by inner part first, then `h` by rank.
    pub fn element(&self, idx: u128) -> Result<AutMap> {
        let n = self.degree();
        if idx >= self.order() {
            return Err(Error::RankOutOfRange {
                rank: idx as u64,
                degree: n,
            });
        }
        let per = factorial(n);
        let g = self.inner[(idx / per) as usize].clone();
        let h = unrank((idx % per) as u64, n)?;
        Ok(AutMap::from_form(
            n,
            MapForm::Composite(vec![MapForm::Inn(g), MapForm::Right(h)]),
        ))
    }

    /// `Inn(g)` for each inner `g`, then the right translations by the set.
    pub fn generators(&self) -> Vec<AutMap> {
        let n = self.degree();
        self.inner
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| AutMap::from_form(n, MapForm::Inn(g.clone())))
            .chain(
                self.set
                    .elements()
                    .iter()
                    .map(|s| AutMap::from_form(n, MapForm::Right(s.clone()))),
            )
            .collect()
    }

    /// Every element as a rank table, sorted.
    pub fn tables(&self, graph: &CayleyGraph) -> Result<Vec<Vec<u32>>> {
        let mut out = (0..self.order())
            .map(|i| self.element(i)?.materialize(graph))
            .collect::<Result<Vec<_>>>()?;
        out.sort();
        Ok(out)
    }

    /// Exhaustive check of the generators on an explicit graph, which covers
    /// the whole group; on an implicit graph, `samples` random elements are
    /// checked on the ball of radius `radius`.
    pub fn verify(&self, graph: &CayleyGraph, samples: usize, radius: usize) -> Result<bool> {
        if graph.is_explicit() {
            for g in self.generators() {
                if !g.audit(graph)? {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let order = self.order();
        for _ in 0..samples {
            let idx = rng.gen_range(0..order);
            if !self.element(idx)?.audit_on_ball(&self.set, radius)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalityVerdict {
    pub n: usize,
    pub normal: bool,
    pub stabilizer_size: usize,
    /// `None` when `Aut(S_n, S)` was not computable for this set.
    pub aut_g_s_size: Option<usize>,
    pub sizes_agree: Option<bool>,
    pub multiplicativity_checks: u64,
    pub multiplicativity_failures: u64,
    pub aut_order: String,
    /// For each stabilizer element, the `g` with `σ = Inn(g)` if one exists.
    pub witnesses: Vec<Option<String>>,
}

/// Runs [`stabilizer_search`] and judges the result.
pub fn normality_check(graph: &CayleyGraph, par: &Parallelism) -> Result<NormalityVerdict> {
    let stab = stabilizer_search(graph, par)?;
    normality_from(graph, &stab)
}

/// A graph is normal iff every `σ` in the stabilizer of `e` satisfies
/// `σ(st) = σ(s)σ(t)` for all `s, t ∈ S`.
pub fn normality_from(graph: &CayleyGraph, stab: &StabilizerResult) -> Result<NormalityVerdict> {
    let set = graph.genset();
    let n = graph.degree();
    let mut checks = 0u64;
    let mut failures = 0u64;
    for sigma in &stab.elements {
        for s in set.elements() {
            for t in set.elements() {
                checks += 1;
                let lhs = sigma.image(&s.compose_unchecked(t))?;
                let rhs = sigma.image(s)?.compose_unchecked(&sigma.image(t)?);
                if lhs != rhs {
                    failures += 1;
                }
            }
        }
    }
    let aut_g_s_size = match set.provenance() {
        Provenance::Custom if n > AUT_GS_BRUTEFORCE_MAX => None,
        _ => Some(aut_gs(set)?.len()),
    };
    Ok(NormalityVerdict {
        n,
        normal: failures == 0,
        stabilizer_size: stab.elements.len(),
        sizes_agree: aut_g_s_size.map(|k| k == stab.elements.len()),
        aut_g_s_size,
        multiplicativity_checks: checks,
        multiplicativity_failures: failures,
        aut_order: stab.aut_order.to_string(),
        witnesses: stab
            .elements
            .iter()
            .map(|m| m.witness.as_ref().map(|g| g.to_string()))
            .collect(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ArcTransitivity {
    /// Orbits of the stabilizer on `N(e)`, as generator labels.
    pub orbits: Vec<Vec<String>>,
    pub arc_transitive: bool,
}

pub fn arc_transitivity_check(graph: &CayleyGraph, stab: &StabilizerResult) -> Result<ArcTransitivity> {
    let set = graph.genset();
    let d = set.len();
    let ranks: Vec<u64> = set.elements().iter().map(rank).collect::<Result<_>>()?;
    let mut root: Vec<usize> = (0..d).collect();
    fn find(root: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while root[r] != r {
            r = root[r];
        }
        root[x] = r;
        r
    }
    for sigma in &stab.elements {
        for i in 0..d {
            let img = rank(&sigma.image(&set.elements()[i])?)?;
            let j = ranks
                .iter()
                .position(|&r| r == img)
                .ok_or_else(|| Error::Unsupported("stabilizer element moves e".into()))?;
            let (a, b) = (find(&mut root, i), find(&mut root, j));
            root[a.max(b)] = a.min(b);
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..d {
        let r = find(&mut root, i);
        match orbits.iter_mut().find(|o| o[0] == r) {
            Some(o) => o.push(i),
            None => orbits.push(vec![i]),
        }
    }
    let mut named: Vec<Vec<String>> = orbits
        .into_iter()
        .map(|o| o.into_iter().map(|i| label_name(set, i)).collect())
        .collect();
    named.sort_by_key(|o| (o.len(), o.clone()));
    Ok(ArcTransitivity {
        arc_transitive: named.len() == 1,
        orbits: named,
    })
}

fn label_name(set: &GenSet, i: usize) -> String {
    match set.labels()[i] {
        Label::Letter(l) => l.to_string(),
        Label::Other(_) => set.elements()[i].to_string(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureProbe {
    pub n: usize,
    /// `x ↦ φx` preserves adjacency.
    pub left_phi_is_automorphism: bool,
    pub left_phi_scope: String,
    /// `x ↦ φx` commutes with the tested right translations and with `Inn(φ)`.
    pub left_phi_commutes: bool,
    pub commutation_scope: String,
    pub commutation_checks: u64,
    /// Centre order of `R(S_n) ⋊ Aut(S_n, S)`, computed for `n ≤ 6`.
    pub center_order: Option<u128>,
}

/// Largest degree with an exhaustive adjacency check of `x ↦ φx`.
pub const PROBE_EXPLICIT_MAX: usize = 8;
/// Largest degree with exhaustive commutation and centre computation.
pub const PROBE_EXHAUSTIVE_MAX: usize = 6;

/// Evidence on how `x ↦ φx` sits in the automorphism group of the standard
/// graph. No isomorphism type is inferred.
pub fn structure_probe(n: usize, par: &Parallelism) -> Result<StructureProbe> {
    let set = GenSet::standard(n)?;
    let phi = Permutation::phi_involution(n)?;
    let left = AutMap::from_form(n, MapForm::Left(phi.clone()));
    let inn = MapForm::Inn(phi.clone());
    let explicit = if n <= PROBE_EXPLICIT_MAX {
        Some(CayleyGraph::build_explicit(&set, &GraphOptions::default(), par)?)
    } else {
        None
    };
    let (left_phi_is_automorphism, left_phi_scope) = match &explicit {
        Some(g) => (left.audit(g)?, "exhaustive".to_string()),
        None => (left.audit_on_ball(&set, 5)?, "ball of radius 5".to_string()),
    };

    let commutes = |x: &Permutation, form: &MapForm| -> bool {
        let l = |y: &Permutation| phi.compose_unchecked(y);
        l(&form.apply(x)) == form.apply(&l(x))
    };
    let mut checks = 0u64;
    let mut ok = true;
    let scope;
    if n <= PROBE_EXHAUSTIVE_MAX {
        let all: Vec<Permutation> = (0..factorial(n) as u64).map(|r| unrank(r, n)).collect::<Result<_>>()?;
        for h in all.iter().map(|h| MapForm::Right(h.clone())).chain([inn.clone()]) {
            for x in &all {
                checks += 1;
                ok &= commutes(x, &h);
            }
        }
        scope = format!("all {} right translations and Inn(phi), on every vertex", all.len());
    } else if n <= PROBE_EXPLICIT_MAX {
        // commuting with r_s for s in S gives every r_h
        let forms: Vec<MapForm> = set
            .elements()
            .iter()
            .map(|s| MapForm::Right(s.clone()))
            .chain([inn.clone()])
            .collect();
        for r in 0..factorial(n) as u64 {
            let x = unrank(r, n)?;
            for f in &forms {
                checks += 1;
                ok &= commutes(&x, f);
            }
        }
        scope = "right translations by S and Inn(phi), on every vertex".to_string();
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let total = factorial(n.min(20)) as u64;
        let random = |rng: &mut ChaCha8Rng| -> Result<Permutation> {
            if n <= 20 {
                unrank(rng.gen_range(0..total), n)
            } else {
                let mut images: Vec<u32> = (0..n as u32).collect();
                for i in (1..n).rev() {
                    images.swap(i, rng.gen_range(0..=i));
                }
                Permutation::from_zero_based(images)
            }
        };
        for _ in 0..64 {
            let h = MapForm::Right(random(&mut rng)?);
            for _ in 0..16 {
                let x = random(&mut rng)?;
                checks += 2;
                ok &= commutes(&x, &h) && commutes(&x, &inn);
            }
        }
        scope = "64 sampled right translations and Inn(phi), 16 sampled vertices each".to_string();
    }

    let center_order = match &explicit {
        Some(g) if n <= PROBE_EXHAUSTIVE_MAX => Some(center_order(g)?),
        _ => None,
    };
    Ok(StructureProbe {
        n,
        left_phi_is_automorphism,
        left_phi_scope,
        left_phi_commutes: ok,
        commutation_scope: scope,
        commutation_checks: checks,
        center_order,
    })
}

/// Elements of the normalizer group commuting with each of its generators.
fn center_order(graph: &CayleyGraph) -> Result<u128> {
    let group = build_normalizer_group(graph.genset())?;
    let gens = group
        .generators()
        .iter()
        .map(|g| g.materialize(graph))
        .collect::<Result<Vec<_>>>()?;
    let tables = group.tables(graph)?;
    debug_assert!(tables.iter().all(|t| table_is_automorphism(graph, t)));
    let count = tables
        .iter()
        .filter(|z| {
            gens.iter().all(|g| {
                (0..z.len()).all(|x| z[g[x] as usize] == g[z[x] as usize])
            })
        })
        .count();
    Ok(count as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgrp::bruteforce_aut;

    fn graph(n: usize) -> CayleyGraph {
        CayleyGraph::build(
            &GenSet::standard(n).unwrap(),
            &GraphOptions::default(),
            &Parallelism::sequential(),
        )
        .unwrap()
    }

    #[test]
    fn normalizer_matches_bruteforce_at_three_and_four() {
        for n in [3, 4] {
            let g = graph(n);
            let group = build_normalizer_group(g.genset()).unwrap();
            assert_eq!(group.order(), 2 * factorial(n));
            assert!(group.verify(&g, 0, 0).unwrap());
            let brute: Vec<Vec<u32>> = bruteforce_aut(&g, &Parallelism::sequential())
                .unwrap()
                .iter()
                .map(|m| m.table().unwrap().to_vec())
                .collect();
            assert_eq!(group.tables(&g).unwrap(), brute);
        }
    }

    #[test]
    fn symbolic_normalizer_on_balls() {
        let set = GenSet::standard(13).unwrap();
        let g = CayleyGraph::implicit(&set);
        let group = build_normalizer_group(&set).unwrap();
        assert!(group.verify(&g, 50, 4).unwrap());
    }

    #[test]
    fn verdicts_for_small_n() {
        let par = Parallelism::sequential();
        for n in [4, 5, 6] {
            let g = graph(n);
            let stab = stabilizer_search(&g, &par).unwrap();
            let v = normality_from(&g, &stab).unwrap();
            assert!(v.normal);
            assert_eq!(v.stabilizer_size, 2);
            assert_eq!(v.multiplicativity_checks, 18);
            assert_eq!(v.sizes_agree, Some(true));
            let arcs = arc_transitivity_check(&g, &stab).unwrap();
            assert!(!arcs.arc_transitive);
            assert_eq!(arcs.orbits, vec![vec!["t".to_string()], vec!["c".into(), "c-".into()]]);
        }
    }

    #[test]
    fn probe_small() {
        let par = Parallelism::sequential();
        let p = structure_probe(5, &par).unwrap();
        assert!(p.left_phi_is_automorphism && p.left_phi_commutes);
        assert_eq!(p.center_order, Some(2));
        let p = structure_probe(13, &par).unwrap();
        assert!(p.left_phi_is_automorphism && p.left_phi_commutes);
        assert_eq!(p.center_order, None);
    }
}
