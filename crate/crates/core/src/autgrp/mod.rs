//! Automorphisms of the Cayley graph.
//!
//! * [`stabilizer_search`]: all automorphisms fixing `e`, by
//!   individualization and colour refinement over the explicit graph.
//! * [`bruteforce_aut`]: all automorphisms, by plain backtracking from every
//!   image of `e`; an oracle for small graphs.
//! * [`aut_gs_fast`] / [`aut_gs_bruteforce`] / [`extend_generator_map`]:
//!   group automorphisms of `S_n` fixing the connection set.
//! * [`NormalizerGroup`], [`normality_check`], [`arc_transitivity_check`],
//!   [`structure_probe`]: the verdicts assembled from the above.

mod brute;
mod group_auts;
mod normalizer;
mod refine;
mod stabilizer;

pub use brute::{bruteforce_aut, bruteforce_aut_count, BruteForceSummary, BRUTEFORCE_MAX_VERTICES};
pub use group_auts::{
    aut_gs_bruteforce, aut_gs_fast, extend_generator_map, set_preserving_automorphisms,
    GroupAutomorphism, AUT_GS_BRUTEFORCE_MAX, EXTEND_MAX_DEGREE,
};
pub use normalizer::{
    arc_transitivity_check, build_normalizer_group, normality_check, normality_from,
    structure_probe, ArcTransitivity, NormalityVerdict, NormalizerGroup, StructureProbe,
    SAMPLE_SEED,
};
pub use stabilizer::{stabilizer_search, SearchStats, StabilizerResult};

use std::collections::HashMap;

use crate::cayley::{ball, rank, unrank, CayleyGraph};
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::perm::Permutation;

/// Closed-form vertex maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapForm {
    Identity,
    /// `x ↦ g⁻¹ x g`
    Inn(Permutation),
    /// `x ↦ g x`
    Left(Permutation),
    /// `x ↦ x g`
    Right(Permutation),
    /// Applied in list order.
    Composite(Vec<MapForm>),
}

impl MapForm {
    pub fn apply(&self, x: &Permutation) -> Permutation {
        match self {
            MapForm::Identity => x.clone(),
            MapForm::Inn(g) => x.conjugate_unchecked(g),
            MapForm::Left(g) => g.compose_unchecked(x),
            MapForm::Right(g) => x.compose_unchecked(g),
            MapForm::Composite(parts) => parts.iter().fold(x.clone(), |acc, f| f.apply(&acc)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum MapRepr {
    Table(Vec<u32>),
    Form(MapForm),
}

/// A vertex bijection, either as an image table over ranks or in closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutMap {
    n: usize,
    repr: MapRepr,
    /// `g` when the map is known to equal `x ↦ g⁻¹ x g`.
    pub witness: Option<Permutation>,
}

impl AutMap {
    pub fn from_table(n: usize, table: Vec<u32>) -> AutMap {
        AutMap {
            n,
            repr: MapRepr::Table(table),
            witness: None,
        }
    }

    pub fn from_form(n: usize, form: MapForm) -> AutMap {
        let witness = match &form {
            MapForm::Inn(g) => Some(g.clone()),
            MapForm::Identity => Some(Permutation::identity(n)),
            _ => None,
        };
        AutMap {
            n,
            repr: MapRepr::Form(form),
            witness,
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> Option<&[u32]> {
        match &self.repr {
            MapRepr::Table(t) => Some(t),
            MapRepr::Form(_) => None,
        }
    }

    pub fn form(&self) -> Option<&MapForm> {
        match &self.repr {
            MapRepr::Form(f) => Some(f),
            MapRepr::Table(_) => None,
        }
    }

    pub fn image(&self, x: &Permutation) -> Result<Permutation> {
        if x.degree() != self.n {
            return Err(Error::DegreeMismatch(x.degree(), self.n));
        }
        match &self.repr {
            MapRepr::Form(f) => Ok(f.apply(x)),
            MapRepr::Table(t) => unrank(t[rank(x)? as usize] as u64, self.n),
        }
    }

    /// Image table over ranks.
    pub fn materialize(&self, graph: &CayleyGraph) -> Result<Vec<u32>> {
        match &self.repr {
            MapRepr::Table(t) => Ok(t.clone()),
            MapRepr::Form(f) => {
                if !graph.is_explicit() {
                    return Err(Error::ImplicitGraph);
                }
                let count = graph.vertex_count() as u64;
                (0..count)
                    .map(|r| Ok(rank(&f.apply(&unrank(r, self.n)?))? as u32))
                    .collect()
            }
        }
    }

    /// Exhaustive check that the map is a bijection preserving adjacency.
    pub fn audit(&self, graph: &CayleyGraph) -> Result<bool> {
        Ok(table_is_automorphism(graph, &self.materialize(graph)?))
    }

    /// Checks injectivity and adjacency preservation on the ball of radius
    /// `radius` around `e`; valid in any mode.
    pub fn audit_on_ball(&self, set: &GenSet, radius: usize) -> Result<bool> {
        let e = Permutation::identity(self.n);
        let b = ball(set, &e, radius)?;
        let mut images = HashMap::with_capacity(b.len());
        for (v, _) in &b {
            let fv = self.image(v)?;
            if images.insert(fv, ()).is_some() {
                return Ok(false);
            }
        }
        for (v, d) in &b {
            if *d == radius {
                continue;
            }
            let fv = self.image(v)?;
            let fv_inv = fv.inverse();
            for s in set.elements() {
                let fw = self.image(&s.compose_unchecked(v))?;
                if !set.contains(&fw.compose_unchecked(&fv_inv)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub(crate) fn table_is_automorphism(graph: &CayleyGraph, table: &[u32]) -> bool {
    let count = graph.vertex_count() as usize;
    if table.len() != count {
        return false;
    }
    let mut seen = vec![false; count];
    for &x in table {
        if x as usize >= count || seen[x as usize] {
            return false;
        }
        seen[x as usize] = true;
    }
    (0..count as u32).all(|v| {
        let fv = graph.row(table[v as usize]);
        graph.row(v).iter().all(|&w| fv.contains(&table[w as usize]))
    })
}

/// Finds `g` with `table = (x ↦ g⁻¹ x g)` when the set contains `c_n`.
pub(crate) fn inner_witness(graph: &CayleyGraph, table: &[u32]) -> Option<Permutation> {
    let set = graph.genset();
    let n = graph.degree();
    let c = set.letter(crate::genset::Letter::C)?;
    let image_c = unrank(table[rank(c).ok()? as usize] as u64, n).ok()?;
    let cycles = image_c.cycles();
    if cycles.len() != 1 || cycles[0].len() != n {
        return None;
    }
    // g⁻¹ c g = (g(1) g(2) … g(n)): g is a rotation of the image cycle
    let cyc = &cycles[0];
    let others: Vec<(u32, Permutation)> = set
        .elements()
        .iter()
        .map(|s| {
            let r = rank(s).expect("rank") as usize;
            (table[r], s.clone())
        })
        .collect();
    for shift in 0..n {
        let images: Vec<usize> = (0..n).map(|i| cyc[(i + shift) % n]).collect();
        let g = Permutation::from_one_line(&images).ok()?;
        let gens_ok = others
            .iter()
            .all(|(img, s)| rank(&s.conjugate_unchecked(&g)).ok() == Some(*img as u64));
        if gens_ok
            && (0..table.len() as u64).all(|r| {
                let x = unrank(r, n).expect("rank in range");
                rank(&x.conjugate_unchecked(&g)).ok() == Some(table[r as usize] as u64)
            })
        {
            return Some(g);
        }
    }
    None
}
