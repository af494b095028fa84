//! Anchored simple-cycle censuses.
//!
//! Two independent engines find the cycles of a given length through a set of
//! anchor vertices containing `e`:
//!
//! * [`enumerate_cycles`] walks every simple path from `e` and keeps the ones
//!   that close up through all anchors. It knows nothing about the group.
//! * [`solve_exponent_equation`] enumerates alternating words
//!   `c^{i_k} t c^{i_{k-1}} t ⋯` that fit the length budget, keeps the ones
//!   that evaluate to the identity, and turns each into its closed walk.
//!
//! Both return canonical [`CycleCert`]s so their outputs compare directly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::cayley::adjacent;
use crate::error::{Error, Result};
use crate::genset::{GenSet, Letter, Word};
use crate::parallel::Parallelism;
use crate::perm::Permutation;

pub const DEFAULT_CYCLE_LENGTH: usize = 12;

/// A simple cycle through `e`, stored from `e` in the direction whose second
/// vertex is smaller.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleCert {
    vertices: Vec<Permutation>,
}

impl CycleCert {
    /// Canonicalizes a closed vertex sequence (without the repeated start).
    pub fn from_vertices(mut vertices: Vec<Permutation>) -> Result<CycleCert> {
        let n = vertices
            .first()
            .ok_or_else(|| Error::InvalidSequence("empty cycle".into()))?
            .degree();
        let start = vertices
            .iter()
            .position(|v| v.is_identity())
            .ok_or_else(|| Error::InvalidSequence("cycle does not pass through e".into()))?;
        vertices.rotate_left(start);
        if vertices.len() > 2 && vertices[1] > vertices[vertices.len() - 1] {
            vertices[1..].reverse();
        }
        debug_assert!(vertices.iter().all(|v| v.degree() == n));
        Ok(CycleCert { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.vertices.contains(p)
    }

    /// Re-checks adjacency, closure and distinctness against the neighbour oracle.
    pub fn verify(&self, set: &GenSet) -> bool {
        let l = self.vertices.len();
        if l < 3 {
            return false;
        }
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        distinct.len() == l
            && (0..l).all(|i| adjacent(&self.vertices[i], &self.vertices[(i + 1) % l], set))
    }
}

impl fmt::Display for CycleCert {
    /// Numbered vertex list in cycle notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            writeln!(f, "{i:>3}  {v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycleCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

impl Serialize for CycleCert {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.vertices.iter().map(|v| v.to_string()))
    }
}

/// Which anchors an exponent sequence pins down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    /// Through `e`, `c`, `c⁻¹`: the walk leaves `e` by `c` and returns from `c⁻¹`.
    A,
    /// Through `e`, `t`, `c`: leaves by `t`, returns from `c`.
    BPlus,
    /// Through `e`, `t`, `c⁻¹`: leaves by `t`, returns from `c⁻¹`.
    BMinus,
}

impl CaseTag {
    pub const ALL: [CaseTag; 3] = [CaseTag::A, CaseTag::BPlus, CaseTag::BMinus];

    /// The anchor vertices `e` plus two connection-set elements.
    pub fn anchors(self, set: &GenSet) -> Result<Vec<Permutation>> {
        let letters = match self {
            CaseTag::A => [Letter::C, Letter::CInv],
            CaseTag::BPlus => [Letter::T, Letter::C],
            CaseTag::BMinus => [Letter::T, Letter::CInv],
        };
        let mut out = vec![Permutation::identity(set.degree())];
        for l in letters {
            out.push(
                set.letter(l)
                    .ok_or_else(|| Error::Unsupported(format!("set has no letter {l}")))?
                    .clone(),
            );
        }
        Ok(out)
    }

    /// Number of transpositions in a word with `k` blocks.
    fn transpositions(self, k: usize) -> usize {
        match self {
            CaseTag::A => k - 1,
            CaseTag::BPlus | CaseTag::BMinus => k,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::A => "A",
            CaseTag::BPlus => "B+",
            CaseTag::BMinus => "B-",
        })
    }
}

/// Exponents `(i_1, …, i_k)` of the word `c^{i_k} t c^{i_{k-1}} t ⋯ t c^{i_1}`
/// (case A) or `c^{i_k} t ⋯ c^{i_1} t` (cases B±).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExponentSequence {
    pub case: CaseTag,
    pub exponents: Vec<i64>,
    pub budget: usize,
}

impl ExponentSequence {
    pub fn new(case: CaseTag, exponents: Vec<i64>, budget: usize) -> Result<ExponentSequence> {
        let s = ExponentSequence {
            case,
            exponents,
            budget,
        };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        let e = &self.exponents;
        let k = e.len();
        let bad = |m: &str| Err(Error::InvalidSequence(format!("{e:?}: {m}")));
        if k == 0 {
            return bad("no blocks");
        }
        if e.iter().any(|&i| i == 0) {
            return bad("zero exponent");
        }
        let (first, last) = (e[0], e[k - 1]);
        match self.case {
            CaseTag::A if first < 1 || last < 1 => return bad("end exponents must be positive"),
            CaseTag::BPlus if last > -1 => return bad("last exponent must be negative"),
            CaseTag::BMinus if last < 1 => return bad("last exponent must be positive"),
            _ => {}
        }
        if self.length() != self.budget {
            return bad("length does not match budget");
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.exponents.len()
    }

    /// Number of letters in the word.
    pub fn length(&self) -> usize {
        let powers: u64 = self.exponents.iter().map(|i| i.unsigned_abs()).sum();
        powers as usize + self.case.transpositions(self.k())
    }

    pub fn exponent_sum(&self) -> i64 {
        self.exponents.iter().sum()
    }

    pub fn word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.budget);
        for (pos, &i) in self.exponents.iter().enumerate().rev() {
            letters.extend_from_slice(Word::c_power(i).letters());
            let separator = match self.case {
                CaseTag::A => pos > 0,
                CaseTag::BPlus | CaseTag::BMinus => true,
            };
            if separator {
                letters.push(Letter::T);
            }
        }
        Word::new(letters)
    }

    /// The walk from `e` that reads the word right to left: `L+1` vertices,
    /// the last equal to the word's value.
    pub fn walk(&self, set: &GenSet) -> Result<Vec<Permutation>> {
        let word = self.word();
        let mut v = Permutation::identity(set.degree());
        let mut out = vec![v.clone()];
        for &l in word.letters().iter().rev() {
            let s = set
                .letter(l)
                .ok_or_else(|| Error::Unsupported(format!("set has no letter {l}")))?;
            v = s.compose_unchecked(&v);
            out.push(v.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for ExponentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All sequences of the case whose word has exactly `length` letters,
/// ordered by block count and then lexicographically.
pub fn admissible_sequences(case: CaseTag, length: usize) -> Vec<ExponentSequence> {
    let mut out = Vec::new();
    for k in 1..=length {
        let t = case.transpositions(k);
        if t >= length || length - t < k {
            continue;
        }
        let total = length - t;
        let mut parts = Vec::with_capacity(k);
        compositions(total, k, &mut parts, &mut |comp| {
            for mask in 0u32..(1 << k) {
                let exps: Vec<i64> = comp
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| if mask >> i & 1 == 1 { -(m as i64) } else { m as i64 })
                    .collect();
                if let Ok(s) = ExponentSequence::new(case, exps, length) {
                    out.push(s);
                }
            }
        });
    }
    out.sort_by(|a, b| a.k().cmp(&b.k()).then_with(|| a.exponents.cmp(&b.exponents)));
    out.dedup();
    out
}

fn compositions(total: usize, parts: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if parts == 1 {
        acc.push(total);
        f(acc);
        acc.pop();
        return;
    }
    for first in 1..=total.saturating_sub(parts - 1) {
        acc.push(first);
        compositions(total - first, parts - 1, acc, f);
        acc.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Outcome {
    Solution { cycle: CycleCert },
    /// The word evaluates to this non-identity permutation.
    NotIdentity { value: String },
    /// The word is the identity but its walk revisits a vertex.
    NotSimple { repeated: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub sequence: ExponentSequence,
    pub outcome: Outcome,
}

impl Candidate {
    pub fn is_solution(&self) -> bool {
        matches!(self.outcome, Outcome::Solution { .. })
    }
}

fn assess(set: &GenSet, seq: ExponentSequence) -> Result<Candidate> {
    let value = seq.word().evaluate_in(set)?;
    let outcome = if !value.is_identity() {
        Outcome::NotIdentity {
            value: value.to_string(),
        }
    } else {
        let mut walk = seq.walk(set)?;
        walk.pop();
        let mut seen = BTreeSet::new();
        match walk.iter().find(|v| !seen.insert(*v)) {
            Some(v) => Outcome::NotSimple {
                repeated: v.to_string(),
            },
            None => Outcome::Solution {
                cycle: CycleCert::from_vertices(walk)?,
            },
        }
    };
    Ok(Candidate {
        sequence: seq,
        outcome,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Solution {
    pub sequence: ExponentSequence,
    pub cycle: CycleCert,
}

/// Word-equation route to the anchored cycles of `case`, sorted by cycle.
pub fn solve_exponent_equation(set: &GenSet, length: usize, case: CaseTag) -> Result<Vec<Solution>> {
    check_length(length)?;
    let mut out = Vec::new();
    for seq in admissible_sequences(case, length) {
        let cand = assess(set, seq)?;
        if let Outcome::Solution { cycle } = cand.outcome {
            out.push(Solution {
                sequence: cand.sequence,
                cycle,
            });
        }
    }
    out.sort_by(|a, b| a.cycle.cmp(&b.cycle));
    Ok(out)
}

/// Candidates sharing a pattern. For case A the pattern is the multiset of
/// end exponents together with the multiset of interior exponents; for cases
/// B± it is the final exponent, with the multisets of the remaining exponents
/// listed as sub-patterns.
#[derive(Clone, Debug, Serialize)]
pub struct PatternGroup {
    pub fixed: Vec<i64>,
    pub sub_patterns: Vec<Vec<i64>>,
    pub candidates: Vec<Candidate>,
}

impl PatternGroup {
    pub fn solutions(&self) -> usize {
        self.candidates.iter().filter(|c| c.is_solution()).count()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockClass {
    pub k: usize,
    /// Candidates whose exponent sum is `≡ 0 (mod n)`, grouped by pattern.
    pub groups: Vec<PatternGroup>,
    /// Candidates with nonzero exponent sum mod `n`; each still refuted or
    /// confirmed by evaluation.
    pub other: Vec<Candidate>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub case: CaseTag,
    pub length: usize,
    pub degree: usize,
    pub blocks: Vec<BlockClass>,
}

impl Classification {
    pub fn block(&self, k: usize) -> Option<&BlockClass> {
        self.blocks.iter().find(|b| b.k == k)
    }

    pub fn solutions(&self) -> Vec<&Candidate> {
        self.blocks
            .iter()
            .flat_map(|b| b.groups.iter().flat_map(|g| &g.candidates).chain(&b.other))
            .filter(|c| c.is_solution())
            .collect()
    }
}

fn sorted(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v
}

/// Lists every candidate sequence by block count and pattern, each marked
/// as a solution or refuted by its evaluation or its non-simple walk.
pub fn classify_solution_types(set: &GenSet, length: usize, case: CaseTag) -> Result<Classification> {
    check_length(length)?;
    let n = set.degree() as i64;
    let mut by_k: BTreeMap<usize, (BTreeMap<Vec<i64>, PatternGroup>, Vec<Candidate>)> = BTreeMap::new();
    for seq in admissible_sequences(case, length) {
        let k = seq.k();
        let zero_sum = seq.exponent_sum().rem_euclid(n) == 0;
        let (fixed, sub) = match case {
            CaseTag::A if k >= 2 => (
                sorted(vec![seq.exponents[0], seq.exponents[k - 1]]),
                sorted(seq.exponents[1..k - 1].to_vec()),
            ),
            CaseTag::A => (seq.exponents.clone(), Vec::new()),
            CaseTag::BPlus | CaseTag::BMinus => {
                (vec![seq.exponents[k - 1]], sorted(seq.exponents[..k - 1].to_vec()))
            }
        };
        let cand = assess(set, seq)?;
        let entry = by_k.entry(k).or_default();
        if !zero_sum {
            entry.1.push(cand);
            continue;
        }
        let key = match case {
            CaseTag::A => [fixed.clone(), vec![i64::MIN], sub.clone()].concat(),
            _ => fixed.clone(),
        };
        let group = entry.0.entry(key).or_insert_with(|| PatternGroup {
            fixed,
            sub_patterns: Vec::new(),
            candidates: Vec::new(),
        });
        if !group.sub_patterns.contains(&sub) {
            group.sub_patterns.push(sub);
            group.sub_patterns.sort();
        }
        group.candidates.push(cand);
    }
    Ok(Classification {
        case,
        length,
        degree: set.degree(),
        blocks: by_k
            .into_iter()
            .map(|(k, (groups, other))| BlockClass {
                k,
                groups: groups.into_values().collect(),
                other,
            })
            .collect(),
    })
}

fn check_length(length: usize) -> Result<()> {
    if length < 3 {
        return Err(Error::InvalidSequence(format!("cycle length {length} < 3")));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleSearch {
    pub cycles: Vec<CycleCert>,
    /// Paths from `e` that reached full length.
    pub full_paths: u64,
    /// Path extensions explored.
    pub nodes: u64,
}

/// All simple cycles of exactly `length` vertices through every anchor, found
/// by depth-first search over simple paths from `e`. Only the radius-`length`
/// neighbourhood of `e` is touched, so any degree works.
pub fn enumerate_cycles(
    set: &GenSet,
    length: usize,
    anchors: &[Permutation],
    par: &Parallelism,
) -> Result<CycleSearch> {
    check_length(length)?;
    let n = set.degree();
    if let Some(a) = anchors.iter().find(|a| a.degree() != n) {
        return Err(Error::DegreeMismatch(a.degree(), n));
    }
    if !anchors.iter().any(|a| a.is_identity()) {
        return Err(Error::InvalidSequence("anchors must contain e".into()));
    }
    let e = Permutation::identity(n);
    let branches: Vec<_> = par.install(|| {
        set.elements()
            .par_iter()
            .map(|first| {
                let mut state = Dfs {
                    set,
                    length,
                    anchors,
                    path: vec![e.clone(), first.clone()],
                    found: Vec::new(),
                    full_paths: 0,
                    nodes: 1,
                };
                state.extend();
                (state.found, state.full_paths, state.nodes)
            })
            .collect()
    });
    let mut cycles = BTreeSet::new();
    let (mut full_paths, mut nodes) = (0, 0);
    for (found, f, k) in branches {
        cycles.extend(found);
        full_paths += f;
        nodes += k;
    }
    Ok(CycleSearch {
        cycles: cycles.into_iter().collect(),
        full_paths,
        nodes,
    })
}

struct Dfs<'a> {
    set: &'a GenSet,
    length: usize,
    anchors: &'a [Permutation],
    path: Vec<Permutation>,
    found: Vec<CycleCert>,
    full_paths: u64,
    nodes: u64,
}

impl Dfs<'_> {
    fn extend(&mut self) {
        let last = self.path.last().expect("non-empty path");
        if self.path.len() == self.length {
            self.full_paths += 1;
            // closes iff last ∈ S, and each cycle is kept in one direction
            if self.set.contains(last)
                && self.path[1] < *last
                && self.anchors.iter().all(|a| self.path.contains(a))
            {
                let cert = CycleCert {
                    vertices: self.path.clone(),
                };
                self.found.push(cert);
            }
            return;
        }
        let next: Vec<Permutation> = self
            .set
            .elements()
            .iter()
            .map(|s| s.compose_unchecked(last))
            .filter(|w| !self.path.contains(w))
            .collect();
        for w in next {
            self.nodes += 1;
            self.path.push(w);
            self.extend();
            self.path.pop();
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub through_c_cinv: usize,
    pub through_t_c: usize,
    pub through_t_cinv: usize,
}

impl Census {
    pub fn as_tuple(&self) -> (usize, usize, usize) {
        (self.through_c_cinv, self.through_t_c, self.through_t_cinv)
    }
}

/// Cycle counts through `{e,c,c⁻¹}`, `{e,t,c}` and `{e,t,c⁻¹}`.
pub fn census(set: &GenSet, length: usize, par: &Parallelism) -> Result<Census> {
    let count = |case: CaseTag| -> Result<usize> {
        Ok(enumerate_cycles(set, length, &case.anchors(set)?, par)?.cycles.len())
    };
    Ok(Census {
        through_c_cinv: count(CaseTag::A)?,
        through_t_c: count(CaseTag::BPlus)?,
        through_t_cinv: count(CaseTag::BMinus)?,
    })
}
