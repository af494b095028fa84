//! Simultaneous colour refinement of two vertex colourings of one graph.
//!
//! Each round recolours every vertex by its colour together with the sorted
//! colours of its neighbours. New colour ids are positions in the sorted list
//! of signatures, so equal signatures receive equal ids in both colourings
//! and ids never depend on thread count.

use rayon::prelude::*;

pub(crate) struct Colouring {
    pub colours: Vec<u32>,
    pub classes: usize,
}

/// Refines `a` and `b` in lockstep until stable. Returns `false` as soon as
/// their colour histograms differ, i.e. no automorphism maps one onto the
/// other.
pub(crate) fn refine_pair(
    adj: &[u32],
    valency: usize,
    a: &mut Colouring,
    b: &mut Colouring,
    rounds: &mut u64,
) -> bool {
    if valency <= 3 {
        refine_with(adj, valency, a, b, rounds, pack_u128)
    } else {
        refine_with(adj, valency, a, b, rounds, pack_wide)
    }
}

fn pack_u128(colours: &[u32], row: &[u32], own: u32) -> u128 {
    let mut nb = [0u32; 3];
    for (slot, &w) in nb.iter_mut().zip(row) {
        *slot = colours[w as usize];
    }
    nb[..row.len()].sort_unstable();
    (own as u128) << 96 | (nb[0] as u128) << 64 | (nb[1] as u128) << 32 | nb[2] as u128
}

fn pack_wide(colours: &[u32], row: &[u32], own: u32) -> Vec<u32> {
    let mut key = Vec::with_capacity(row.len() + 1);
    key.push(own);
    key.extend(row.iter().map(|&w| colours[w as usize]));
    key[1..].sort_unstable();
    key
}

fn refine_with<K, F>(
    adj: &[u32],
    valency: usize,
    a: &mut Colouring,
    b: &mut Colouring,
    rounds: &mut u64,
    key: F,
) -> bool
where
    K: Ord + Send + Sync + Clone,
    F: Fn(&[u32], &[u32], u32) -> K + Sync,
{
    let count = a.colours.len();
    loop {
        if a.classes == count {
            return true;
        }
        *rounds += 1;
        let sig = |c: &[u32]| -> Vec<K> {
            adj.par_chunks(valency)
                .zip(c.par_iter())
                .map(|(row, &own)| key(c, row, own))
                .collect()
        };
        let ka = sig(&a.colours);
        let kb = sig(&b.colours);
        let mut sa = ka.clone();
        let mut sb = kb.clone();
        sa.par_sort_unstable();
        sb.par_sort_unstable();
        if sa != sb {
            return false;
        }
        drop(sb);
        sa.dedup();
        let classes = sa.len();
        let recolour = |keys: &[K], out: &mut Vec<u32>| {
            out.par_iter_mut().zip(keys.par_iter()).for_each(|(c, k)| {
                *c = sa.binary_search(k).expect("signature present") as u32;
            });
        };
        recolour(&ka, &mut a.colours);
        recolour(&kb, &mut b.colours);
        let stable = classes == a.classes;
        a.classes = classes;
        b.classes = classes;
        if stable {
            return true;
        }
    }
}
