//! Group automorphisms of `S_n` that fix the connection set.

use std::collections::{HashMap, VecDeque};

use crate::cayley::{factorial, rank, unrank};
use crate::error::{Error, Result};
use crate::genset::{GenSet, Letter, Provenance};
use crate::perm::Permutation;

/// The elements `g` with `g⁻¹ S g = S`, solved in closed form.
///
/// Conjugation relabels points, so `g⁻¹ c g = (g(1) g(2) … g(n))`. For this to
/// be `c^{±1}`, `g` must step by a constant `±1` around the cycle; for the
/// transposition `(i i+1)` to be fixed, `g(i) ∈ {i, i+1}`. That leaves four
/// candidates, each checked directly.
pub fn aut_gs_fast(set: &GenSet) -> Result<Vec<Permutation>> {
    let n = set.degree();
    let i = match set.provenance() {
        Provenance::Standard => 1,
        Provenance::Variant(i) => *i,
        Provenance::Custom => {
            return Err(Error::Unsupported(
                "closed-form solver needs the standard or a variant set".into(),
            ))
        }
    };
    let c = set.letter(Letter::C).expect("letter c");
    let ci = set.letter(Letter::CInv).expect("letter c-");
    let t = set.letter(Letter::T).expect("letter t");
    let mut out = Vec::new();
    for anchor in [i, i + 1] {
        for step in [1i64, -1] {
            // g(i + m) = anchor + step·m, points taken mod n
            let images: Vec<usize> = (0..n)
                .map(|x| {
                    let m = x as i64 - (i as i64 - 1);
                    ((anchor as i64 - 1 + step * m).rem_euclid(n as i64) + 1) as usize
                })
                .collect();
            let g = Permutation::from_one_line(&images)?;
            let cg = c.conjugate_unchecked(&g);
            if t.conjugate_unchecked(&g) == *t && (cg == *c || cg == *ci) {
                out.push(g);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Largest degree scanned by [`aut_gs_bruteforce`].
pub const AUT_GS_BRUTEFORCE_MAX: usize = 8;

/// Scans all of `S_n` for elements whose conjugation fixes the set.
pub fn aut_gs_bruteforce(set: &GenSet) -> Result<Vec<Permutation>> {
    let n = set.degree();
    if n > AUT_GS_BRUTEFORCE_MAX {
        return Err(Error::TooLarge(format!(
            "brute-force scan needs n <= {AUT_GS_BRUTEFORCE_MAX}"
        )));
    }
    let mut out = Vec::new();
    for r in 0..factorial(n) as u64 {
        let g = unrank(r, n)?;
        if set
            .elements()
            .iter()
            .all(|s| set.contains(&s.conjugate_unchecked(&g)))
        {
            out.push(g);
        }
    }
    Ok(out)
}

/// A group automorphism of `S_n` as an image table indexed by Lehmer rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAutomorphism {
    pub n: usize,
    pub table: Vec<Permutation>,
}

impl GroupAutomorphism {
    pub fn image(&self, x: &Permutation) -> &Permutation {
        &self.table[rank(x).expect("small degree") as usize]
    }

    /// `g` with `table = (x ↦ g⁻¹ x g)`, if any.
    pub fn inner_witness(&self) -> Option<Permutation> {
        (0..factorial(self.n) as u64)
            .map(|r| unrank(r, self.n).expect("rank in range"))
            .find(|g| {
                self.table
                    .iter()
                    .enumerate()
                    .all(|(r, y)| unrank(r as u64, self.n).expect("rank").conjugate_unchecked(g) == *y)
            })
    }
}

/// Largest degree accepted by [`extend_generator_map`].
pub const EXTEND_MAX_DEGREE: usize = 6;

/// Tries to extend `t ↦ image_of_t`, `c ↦ image_of_c` (standard generators)
/// to an automorphism of `S_n`. Images are assigned along the breadth-first
/// closure; any clash, non-bijectivity, or failure of `f(xy) = f(x)f(y)` on
/// some pair gives `None`.
pub fn extend_generator_map(
    n: usize,
    image_of_t: &Permutation,
    image_of_c: &Permutation,
) -> Result<Option<GroupAutomorphism>> {
    if n > EXTEND_MAX_DEGREE {
        return Err(Error::TooLarge(format!(
            "generator extension needs n <= {EXTEND_MAX_DEGREE}"
        )));
    }
    let set = GenSet::standard(n)?;
    let t = set.letter(Letter::T).expect("t").clone();
    let c = set.letter(Letter::C).expect("c").clone();
    for img in [image_of_t, image_of_c] {
        if img.degree() != n {
            return Err(Error::DegreeMismatch(img.degree(), n));
        }
    }
    if image_of_t.order() != t.order() || image_of_c.order() != c.order() {
        return Ok(None);
    }
    let gens = [(t, image_of_t.clone()), (c, image_of_c.clone())];
    let e = Permutation::identity(n);
    let mut f: HashMap<Permutation, Permutation> = HashMap::from([(e.clone(), e.clone())]);
    let mut queue = VecDeque::from([e]);
    while let Some(x) = queue.pop_front() {
        let fx = f[&x].clone();
        for (g, img) in &gens {
            let y = x.compose_unchecked(g);
            let fy = fx.compose_unchecked(img);
            match f.get(&y) {
                Some(prev) if *prev != fy => return Ok(None),
                Some(_) => {}
                None => {
                    f.insert(y.clone(), fy);
                    queue.push_back(y);
                }
            }
        }
    }
    let count = factorial(n) as usize;
    let mut table = vec![Permutation::identity(n); count];
    let mut hit = vec![false; count];
    for (x, y) in &f {
        table[rank(x)? as usize] = y.clone();
        let ry = rank(y)? as usize;
        if hit[ry] {
            return Ok(None);
        }
        hit[ry] = true;
    }
    if f.len() != count {
        return Ok(None);
    }
    let elements: Vec<Permutation> = (0..count as u64).map(|r| unrank(r, n)).collect::<Result<_>>()?;
    for (rx, x) in elements.iter().enumerate() {
        for (ry, y) in elements.iter().enumerate() {
            let xy = rank(&x.compose_unchecked(y))? as usize;
            if table[xy] != table[rx].compose_unchecked(&table[ry]) {
                return Ok(None);
            }
        }
    }
    Ok(Some(GroupAutomorphism { n, table }))
}

/// Every automorphism of `S_n`, inner or not, mapping the standard set onto
/// itself. Such a map is fixed by the images of `t` and `c`, and both
/// images lie in the set, so trying every pair is exhaustive.
pub fn set_preserving_automorphisms(n: usize) -> Result<Vec<GroupAutomorphism>> {
    let set = GenSet::standard(n)?;
    let mut out = Vec::new();
    for a in set.elements() {
        for b in set.elements() {
            if let Some(f) = extend_generator_map(n, a, b)? {
                if set.elements().iter().all(|s| set.contains(f.image(s))) {
                    out.push(f);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_solver_finds_identity_and_phi() {
        let set = GenSet::standard(13).unwrap();
        let sols = aut_gs_fast(&set).unwrap();
        assert_eq!(sols.len(), 2);
        assert!(sols[0].is_identity());
        assert_eq!(sols[1], Permutation::phi_involution(13).unwrap());
        let sols = aut_gs_fast(&GenSet::standard(3).unwrap()).unwrap();
        assert_eq!(sols[1].to_string(), "(1 2)");
    }

    #[test]
    fn fast_solver_on_variant_sets() {
        let set = GenSet::variant(8, 4).unwrap();
        let sols = aut_gs_fast(&set).unwrap();
        assert_eq!(sols, aut_gs_bruteforce(&set).unwrap());
        assert_eq!(sols.len(), 2);
    }

    #[test]
    fn custom_sets_are_refused() {
        let p = |s| Permutation::parse(s, 4).unwrap();
        let set = GenSet::custom(vec![p("(1 2)"), p("(2 3)"), p("(3 4)")]).unwrap();
        assert!(matches!(aut_gs_fast(&set), Err(Error::Unsupported(_))));
        // the brute-force route still works: only the identity and the reversal
        assert_eq!(aut_gs_bruteforce(&set).unwrap().len(), 2);
    }

    #[test]
    fn bruteforce_at_five() {
        let sols = aut_gs_bruteforce(&GenSet::standard(5).unwrap()).unwrap();
        let shown: Vec<String> = sols.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["()", "(1 2)(3 5)"]);
        assert!(aut_gs_bruteforce(&GenSet::standard(9).unwrap()).is_err());
    }

    #[test]
    fn generator_extensions() {
        let n = 6;
        let t = Permutation::transposition(n, 1, 2).unwrap();
        let c = Permutation::n_cycle(n).unwrap();
        let id = extend_generator_map(n, &t, &c).unwrap().unwrap();
        assert!(id.table.iter().enumerate().all(|(r, y)| rank(y).unwrap() == r as u64));
        let inv = extend_generator_map(n, &t, &c.inverse()).unwrap().unwrap();
        let phi = Permutation::phi_involution(n).unwrap();
        for (r, y) in inv.table.iter().enumerate() {
            assert_eq!(*y, unrank(r as u64, n).unwrap().conjugate(&phi).unwrap());
        }
        assert_eq!(inv.inner_witness(), Some(phi));
        assert!(extend_generator_map(n, &t, &c.power(2)).unwrap().is_none());
        assert!(extend_generator_map(7, &t, &c).is_err());
    }

    #[test]
    fn only_two_set_preserving_automorphisms_at_six() {
        let n = 6;
        let set = set_preserving_automorphisms(n).unwrap();
        assert_eq!(set.len(), 2);
        assert!(set.iter().all(|f| f.inner_witness().is_some()));
    }
}
