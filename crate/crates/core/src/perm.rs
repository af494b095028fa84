//! Permutations of `{1, …, n}`.
//!
//! Products are read left to right: the written product `pq` applies `p`
//! first and then `q`, so `compose(p, q)[x] = q[p[x]]`. With this convention
//! `c⁻¹ (1 2) c = (2 3)` for the standard `n`-cycle `c = (1 2 … n)`.
//!
//! Points are 1-based on every public surface (constructors, parsing,
//! printing, [`Permutation::image`]); internally images are stored 0-based.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation stored as its one-line image table.
///
/// The derived ordering is lexicographic on the image table, which coincides
/// with the Lehmer-rank order used for vertex indexing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_zero_based(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidDegree(0));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::NotBijective);
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let mut zero = Vec::with_capacity(images.len());
        for &x in images {
            if x == 0 || x > images.len() {
                return Err(Error::PointOutOfRange {
                    point: x,
                    degree: images.len(),
                });
            }
            zero.push((x - 1) as u32);
        }
        Self::from_zero_based(zero)
    }

    /// Builds a permutation of degree `n` from disjoint cycles of 1-based points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree(n));
        }
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > n {
                    return Err(Error::PointOutOfRange { point: p, degree: n });
                }
                if touched[p - 1] {
                    return Err(Error::NotBijective);
                }
                touched[p - 1] = true;
            }
            for (i, &p) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// The standard `n`-cycle `(1 2 … n)`, mapping `x ↦ x+1` and `n ↦ 1`.
    pub fn n_cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidDegree(n));
        }
        Ok(Permutation {
            images: (0..n as u32).map(|x| (x + 1) % n as u32).collect(),
        })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidDegree(n));
        }
        if i == j {
            return Err(Error::DegenerateTransposition(i));
        }
        for p in [i, j] {
            if p == 0 || p > n {
                return Err(Error::PointOutOfRange { point: p, degree: n });
            }
        }
        let mut images: Vec<u32> = (0..n as u32).collect();
        images.swap(i - 1, j - 1);
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// The involution `(1 2)(3 n)(4 n-1)…`: swaps 1 and 2 and sends
    /// `k ↦ n+3−k` for `3 ≤ k ≤ n`. Conjugation by it swaps the standard
    /// `n`-cycle with its inverse and fixes `(1 2)`.
    pub fn phi_involution(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidDegree(n));
        }
        let mut images = vec![0u32; n];
        images[0] = 1;
        images[1] = 0;
        for k in 3..=n {
            images[k - 1] = (n + 3 - k - 1) as u32;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn image(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// 0-based image table.
    pub fn as_slice(&self) -> &[u32] {
        &self.images
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// The product `self · other`: `self` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self^k` for any integer `k`, by repeated squaring.
    pub fn power(&self, k: i64) -> Permutation {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// `g⁻¹ · self · g`, i.e. `self` with every point relabelled by `g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        self.check_degree(g)?;
        Ok(self.conjugate_unchecked(g))
    }

    pub(crate) fn conjugate_unchecked(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (x, &px) in self.images.iter().enumerate() {
            images[g.images[x] as usize] = g.images[px as usize];
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Disjoint cycles with 1-based points, each rotated so its minimum
    /// leads, sorted by leading point. Fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Lengths of all cycles, fixed points included.
    fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            lens.push(len);
        }
        lens
    }

    /// Sorted non-trivial cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycle_lengths().into_iter().filter(|&l| l > 1).collect();
        t.sort_unstable();
        t
    }

    /// Moved points, 1-based and ascending.
    pub fn support(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn order(&self) -> u128 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u128, |acc, l| lcm(acc, l as u128))
    }

    pub fn parity(&self) -> Parity {
        let cycles = self.cycle_lengths().len();
        if (self.degree() - cycles) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Parses cycle notation (`(1 2)(3 13)`, `()` or `e`) or one-line
    /// notation (`[2,1,3]`) at degree `n`.
    pub fn parse(s: &str, n: usize) -> Result<Permutation> {
        let s = s.trim();
        if s.starts_with('[') {
            let p: Permutation = s.parse()?;
            if p.degree() != n {
                return Err(Error::DegreeMismatch(p.degree(), n));
            }
            return Ok(p);
        }
        if s == "e" || s.is_empty() {
            return Ok(Permutation::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let body = &open[..close];
            let points = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {t:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if points.len() > 1 {
                cycles.push(points);
            }
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_cycles(n, &cycles)
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

/// One-line notation parser: `[2,1,3]`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [..] one-line notation, got {s:?}")))?;
        let images = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad image {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_line(&images)
    }
}

/// Cycle notation; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// One-line notation, e.g. `[2,1,3]`.
pub fn one_line_string(p: &Permutation) -> String {
    let body: Vec<String> = p.one_line().iter().map(|x| x.to_string()).collect();
    format!("[{}]", body.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, i: usize, j: usize) -> Permutation {
        Permutation::transposition(n, i, j).unwrap()
    }

    fn c(n: usize) -> Permutation {
        Permutation::n_cycle(n).unwrap()
    }

    #[test]
    fn product_convention_reproduces_known_conjugates() {
        let n = 13;
        let ci = c(n).inverse();
        // c⁻¹ (1 2) c = (2 3)
        let u = ci.compose(&t(n, 1, 2)).unwrap().compose(&c(n)).unwrap();
        assert_eq!(u, t(n, 2, 3));
        // c⁻² (1 2) c² = (3 4)
        let u = c(n).power(-2).compose(&t(n, 1, 2)).unwrap().compose(&c(n).power(2)).unwrap();
        assert_eq!(u, t(n, 3, 4));
        // c (1 2) c⁻¹ = (n 1)
        let u = c(n).compose(&t(n, 1, 2)).unwrap().compose(&ci).unwrap();
        assert_eq!(u, t(n, n, 1));
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        assert!(matches!(
            c(4).compose(&c(5)),
            Err(Error::DegreeMismatch(4, 5))
        ));
        assert!(c(4).conjugate(&c(5)).is_err());
    }

    #[test]
    fn identity_is_neutral() {
        let p = Permutation::parse("(1 3 2)(4 5)", 5).unwrap();
        assert_eq!(p.compose(&Permutation::identity(5)).unwrap(), p);
        assert_eq!(Permutation::identity(5).compose(&p).unwrap(), p);
    }

    #[test]
    fn inverses() {
        let inv = c(5).inverse();
        assert_eq!(inv.one_line(), vec![5, 1, 2, 3, 4]);
        assert_eq!(t(5, 1, 2).inverse(), t(5, 1, 2));
        assert_eq!(Permutation::identity(7).inverse(), Permutation::identity(7));
    }

    #[test]
    fn powers() {
        assert!(c(13).power(13).is_identity());
        assert!(c(12).power(12).is_identity());
        assert_eq!(c(13).power(-1), c(13).inverse());
        assert!(c(13).power(0).is_identity());
        assert_eq!(c(13).power(-5), c(13).power(5).inverse());
    }

    #[test]
    fn conjugates() {
        let n = 13;
        // c⁵ (3 4) c⁻⁵ = (n-2 n-1)
        let g = c(n).power(-5);
        assert_eq!(t(n, 3, 4).conjugate(&g).unwrap(), t(n, n - 2, n - 1));
        // c (1 2) c⁻¹ = (n 1)
        assert_eq!(t(n, 1, 2).conjugate(&c(n).inverse()).unwrap(), t(n, n, 1));
        let p = Permutation::parse("(1 5 2)(3 4)", 6).unwrap();
        assert_eq!(p.conjugate(&Permutation::identity(6)).unwrap(), p);
    }

    #[test]
    fn cycle_decomposition() {
        assert!(Permutation::identity(5).cycles().is_empty());
        assert_eq!(c(4).cycles(), vec![vec![1, 2, 3, 4]]);
        let phi = Permutation::phi_involution(13).unwrap();
        assert_eq!(
            phi.cycles(),
            vec![
                vec![1, 2],
                vec![3, 13],
                vec![4, 12],
                vec![5, 11],
                vec![6, 10],
                vec![7, 9]
            ]
        );
        assert_eq!(phi.image(8), 8);
        assert_eq!(phi.to_string(), "(1 2)(3 13)(4 12)(5 11)(6 10)(7 9)");
    }

    #[test]
    fn support_order_parity() {
        assert_eq!(c(13).power(5).support().len(), 13);
        let p = t(13, 1, 2).compose(&t(13, 3, 4)).unwrap();
        assert_eq!(p.order(), 2);
        assert_eq!(t(6, 1, 2).parity(), Parity::Odd);
        assert_eq!(c(5).parity(), Parity::Even);
        assert_eq!(c(6).parity(), Parity::Odd);
        assert_eq!(Permutation::parse("(1 2 3)(4 5)", 6).unwrap().order(), 6);
    }

    #[test]
    fn constructors() {
        assert!(matches!(Permutation::n_cycle(2), Err(Error::InvalidDegree(2))));
        assert!(matches!(
            Permutation::transposition(5, 2, 2),
            Err(Error::DegenerateTransposition(2))
        ));
        assert!(Permutation::transposition(5, 1, 6).is_err());
        assert!(Permutation::phi_involution(2).is_err());
        let phi5 = Permutation::phi_involution(5).unwrap();
        assert_eq!(phi5.to_string(), "(1 2)(3 5)");
        assert_eq!(Permutation::phi_involution(3).unwrap(), t(3, 1, 2));
    }

    #[test]
    fn phi_conjugation_swaps_cycle_and_fixes_transposition() {
        let n = 13;
        let phi = Permutation::phi_involution(n).unwrap();
        assert_eq!(c(n).conjugate(&phi).unwrap(), c(n).inverse());
        assert_eq!(t(n, 1, 2).conjugate(&phi).unwrap(), t(n, 1, 2));
    }

    #[test]
    fn parsing_and_printing() {
        let p = Permutation::parse("(1 2)(3 13)", 13).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 13)");
        let q = Permutation::parse("[2,1,3]", 3).unwrap();
        assert_eq!(q, t(3, 1, 2));
        assert_eq!(one_line_string(&q), "[2,1,3]");
        assert!(Permutation::parse("e", 4).unwrap().is_identity());
        assert!(Permutation::parse("()", 4).unwrap().is_identity());
        assert!(Permutation::parse("(1 2", 4).is_err());
        assert!(Permutation::parse("(1 1)", 4).is_err());
        assert!(Permutation::parse("(1 9)", 4).is_err());
        assert!(Permutation::parse("[1,1,2]", 3).is_err());
        assert!(Permutation::parse("[2,1,3]", 4).is_err());
        // cycle rotation to minimum
        assert_eq!(Permutation::parse("(3 1 2)", 3).unwrap().to_string(), "(1 2 3)");
    }

    #[test]
    fn large_degree_phi() {
        let n = 100_000;
        let phi = Permutation::phi_involution(n).unwrap();
        assert!(phi.compose(&phi).unwrap().is_identity());
        assert_eq!(phi.image(3), n);
    }
}
