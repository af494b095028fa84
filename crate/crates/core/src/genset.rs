//! Connection sets and words over the letters `c`, `c⁻¹`, `t`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on [`closure`] size: 10! fits, 12! does not.
pub const DEFAULT_CLOSURE_CAP: usize = 40_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    C,
    CInv,
    T,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::C => Letter::CInv,
            Letter::CInv => Letter::C,
            Letter::T => Letter::T,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::C => "c",
            Letter::CInv => "c-",
            Letter::T => "t",
        })
    }
}

/// Symbolic name of a connection-set element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Label {
    Letter(Letter),
    Other(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Letter(l) => l.fmt(f),
            Label::Other(i) => write!(f, "s{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Standard,
    /// `{c, c⁻¹, (i i+1)}`
    Variant(usize),
    Custom,
}

/// An ordered, inverse-closed, identity-free connection set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSet {
    degree: usize,
    elements: Vec<Permutation>,
    labels: Vec<Label>,
    provenance: Provenance,
}

impl GenSet {
    /// `{c_n, c_n⁻¹, (1 2)}`.
    pub fn standard(n: usize) -> Result<GenSet> {
        let mut s = Self::variant(n, 1)?;
        s.provenance = Provenance::Standard;
        Ok(s)
    }

    /// `{c_n, c_n⁻¹, (i i+1)}`.
    pub fn variant(n: usize, i: usize) -> Result<GenSet> {
        if n < 3 {
            return Err(Error::InvalidDegree(n));
        }
        if i == 0 || i >= n {
            return Err(Error::InvalidGenSet(format!(
                "variant index {i} outside 1..={}",
                n - 1
            )));
        }
        let c = Permutation::n_cycle(n)?;
        let t = Permutation::transposition(n, i, i + 1)?;
        let elements = vec![c.clone(), c.inverse(), t];
        let labels = vec![
            Label::Letter(Letter::C),
            Label::Letter(Letter::CInv),
            Label::Letter(Letter::T),
        ];
        Self::validated(n, elements, labels, Provenance::Variant(i))
    }

    /// A user-supplied set. Elements equal to `c_n^{±1}` and a lone
    /// transposition are given the letter labels, everything else `Other`.
    pub fn custom(elements: Vec<Permutation>) -> Result<GenSet> {
        let n = elements
            .first()
            .ok_or_else(|| Error::InvalidGenSet("empty set".into()))?
            .degree();
        if n < 3 {
            return Err(Error::InvalidDegree(n));
        }
        let c = Permutation::n_cycle(n)?;
        let ci = c.inverse();
        let transpositions = elements
            .iter()
            .filter(|p| p.cycle_type() == [2])
            .count();
        let labels = elements
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if *p == c {
                    Label::Letter(Letter::C)
                } else if *p == ci {
                    Label::Letter(Letter::CInv)
                } else if transpositions == 1 && p.cycle_type() == [2] {
                    Label::Letter(Letter::T)
                } else {
                    Label::Other(i)
                }
            })
            .collect();
        Self::validated(n, elements, labels, Provenance::Custom)
    }

    fn validated(
        degree: usize,
        elements: Vec<Permutation>,
        labels: Vec<Label>,
        provenance: Provenance,
    ) -> Result<GenSet> {
        if elements.is_empty() {
            return Err(Error::InvalidGenSet("empty set".into()));
        }
        let mut seen = HashSet::new();
        for p in &elements {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch(p.degree(), degree));
            }
            if p.is_identity() {
                return Err(Error::InvalidGenSet("contains the identity".into()));
            }
            if !seen.insert(p.clone()) {
                return Err(Error::InvalidGenSet(format!("duplicate element {p}")));
            }
        }
        for p in &elements {
            if !seen.contains(&p.inverse()) {
                return Err(Error::InvalidGenSet(format!("inverse of {p} missing")));
            }
        }
        Ok(GenSet {
            degree,
            elements,
            labels,
            provenance,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    pub fn letter(&self, letter: Letter) -> Option<&Permutation> {
        self.labels
            .iter()
            .position(|l| *l == Label::Letter(letter))
            .map(|i| &self.elements[i])
    }

    /// True when all three letters are present.
    pub fn has_letters(&self) -> bool {
        [Letter::C, Letter::CInv, Letter::T]
            .iter()
            .all(|&l| self.letter(l).is_some())
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.provenance {
            Provenance::Standard => write!(f, "standard"),
            Provenance::Variant(i) => write!(f, "variant:{i}"),
            Provenance::Custom => {
                let parts: Vec<String> = self.elements.iter().map(|p| p.to_string()).collect();
                write!(f, "custom:{}", parts.join(";"))
            }
        }
    }
}

/// A word over `{c, c⁻¹, t}`, written left to right; the leftmost letter is
/// applied first when evaluated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `c^k` as |k| letters.
    pub fn c_power(k: i64) -> Word {
        let l = if k >= 0 { Letter::C } else { Letter::CInv };
        Word::new(vec![l; k.unsigned_abs() as usize])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Evaluates against the standard set of degree `n`.
    pub fn evaluate(&self, n: usize) -> Result<Permutation> {
        self.evaluate_in(&GenSet::standard(n)?)
    }

    pub fn evaluate_in(&self, set: &GenSet) -> Result<Permutation> {
        let mut acc = Permutation::identity(set.degree());
        for &l in &self.letters {
            let p = set
                .letter(l)
                .ok_or_else(|| Error::Unsupported(format!("set has no letter {l}")))?;
            acc = acc.compose_unchecked(p);
        }
        Ok(acc)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Whitespace-separated tokens `c`, `c-`, `t`, `c^k`, `c^-k`; `e` is the
    /// empty word.
    fn from_str(s: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            match tok {
                "c" => letters.push(Letter::C),
                "c-" => letters.push(Letter::CInv),
                "t" => letters.push(Letter::T),
                "e" => {}
                _ => {
                    let k = tok
                        .strip_prefix("c^")
                        .and_then(|k| k.parse::<i64>().ok())
                        .ok_or_else(|| Error::Parse(format!("bad word token {tok:?}")))?;
                    letters.extend(Word::c_power(k).letters);
                }
            }
        }
        Ok(Word { letters })
    }
}

impl fmt::Display for Word {
    /// Runs of `c` or `c-` are collapsed to `c^k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let run = j - i;
            match l {
                Letter::T => tokens.extend(std::iter::repeat("t".to_string()).take(run)),
                Letter::C if run == 1 => tokens.push("c".into()),
                Letter::CInv if run == 1 => tokens.push("c-".into()),
                Letter::C => tokens.push(format!("c^{run}")),
                Letter::CInv => tokens.push(format!("c^-{run}")),
            }
            i = j;
        }
        f.write_str(&tokens.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationStatus {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub word: String,
    pub min_degree: usize,
    pub status: RelationStatus,
}

/// The five identity words behind the anchored 12-cycles, with the least
/// degree at which each is claimed.
pub const RELATIONS: [(&str, usize); 5] = [
    ("c t c^-2 t c^2 t c^-2 t c", 4),
    ("c^-2 t c^2 t c^-2 t c^2 t", 4),
    ("c- t c t c- t c t c- t c t", 3),
    ("c^2 t c^-2 t c^2 t c^-2 t", 4),
    ("c t c- t c t c- t c t c- t", 3),
];

pub fn check_relations(n: usize) -> Result<Vec<RelationCheck>> {
    let set = GenSet::standard(n)?;
    RELATIONS
        .iter()
        .map(|&(text, floor)| {
            let status = if n < floor {
                RelationStatus::NotApplicable
            } else if text.parse::<Word>()?.evaluate_in(&set)?.is_identity() {
                RelationStatus::Holds
            } else {
                RelationStatus::Fails
            };
            Ok(RelationCheck {
                word: text.to_string(),
                min_degree: floor,
                status,
            })
        })
        .collect()
}

/// Breadth-first closure of `gens` under right multiplication, seeded at the
/// identity. Elements appear in discovery order.
pub fn closure(gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let n = gens
        .first()
        .ok_or_else(|| Error::InvalidGenSet("no generators".into()))?
        .degree();
    if let Some(g) = gens.iter().find(|g| g.degree() != n) {
        return Err(Error::DegreeMismatch(g.degree(), n));
    }
    let e = Permutation::identity(n);
    let mut seen = HashSet::new();
    seen.insert(e.clone());
    let mut order = vec![e.clone()];
    let mut queue = VecDeque::from([e]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose_unchecked(g);
            if seen.insert(y.clone()) {
                if order.len() >= cap {
                    return Err(Error::ClosureOverflow { cap });
                }
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_and_variant_sets() {
        let s3 = GenSet::standard(3).unwrap();
        let shown: Vec<String> = s3.elements().iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["(1 2 3)", "(1 3 2)", "(1 2)"]);
        assert_eq!(
            GenSet::variant(13, 1).unwrap().elements(),
            GenSet::standard(13).unwrap().elements()
        );
        let v = GenSet::variant(13, 3).unwrap();
        assert_eq!(v.letter(Letter::T).unwrap().to_string(), "(3 4)");
        assert!(GenSet::variant(13, 13).is_err());
        assert!(GenSet::variant(13, 0).is_err());
        assert!(GenSet::standard(2).is_err());
    }

    #[test]
    fn custom_sets_are_validated() {
        let p = |s| Permutation::parse(s, 4).unwrap();
        assert!(GenSet::custom(vec![p("(1 2 3 4)")]).is_err());
        assert!(GenSet::custom(vec![p("()"), p("(1 2)")]).is_err());
        assert!(GenSet::custom(vec![p("(1 2)"), p("(1 2)")]).is_err());
        let s = GenSet::custom(vec![p("(1 2 3 4)"), p("(1 4 3 2)"), p("(1 2)")]).unwrap();
        assert!(s.has_letters());
        let s = GenSet::custom(vec![p("(1 2)"), p("(2 3)"), p("(3 4)")]).unwrap();
        assert!(!s.has_letters());
        assert_eq!(s.labels()[2], Label::Other(2));
    }

    #[test]
    fn word_evaluation() {
        assert!(Word::default().evaluate(5).unwrap().is_identity());
        let w: Word = "c- t c".parse().unwrap();
        assert_eq!(
            w.evaluate(13).unwrap(),
            Permutation::transposition(13, 2, 3).unwrap()
        );
        let w: Word = "t t".parse().unwrap();
        assert!(w.evaluate(13).unwrap().is_identity());
        let w: Word = "c^-3 t c^2".parse().unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.to_string(), "c^-3 t c^2");
        assert!("c^x".parse::<Word>().is_err());
        assert!("q".parse::<Word>().is_err());
    }

    #[test]
    fn variant_words_use_variant_transposition() {
        let v = GenSet::variant(13, 3).unwrap();
        let w: Word = "t".parse().unwrap();
        assert_eq!(w.evaluate_in(&v).unwrap().to_string(), "(3 4)");
    }

    #[test]
    fn relations_at_representative_degrees() {
        for n in [13, 64] {
            assert!(check_relations(n)
                .unwrap()
                .iter()
                .all(|r| r.status == RelationStatus::Holds));
        }
        let at4 = check_relations(4).unwrap();
        for i in [0, 1, 3] {
            assert_eq!(at4[i].status, RelationStatus::Holds);
        }
        let at3 = check_relations(3).unwrap();
        let st: Vec<_> = at3.iter().map(|r| r.status).collect();
        assert_eq!(
            st,
            [
                RelationStatus::NotApplicable,
                RelationStatus::NotApplicable,
                RelationStatus::Holds,
                RelationStatus::NotApplicable,
                RelationStatus::Holds
            ]
        );
    }

    #[test]
    fn closures() {
        let s = |n| GenSet::standard(n).unwrap().elements().to_vec();
        assert_eq!(closure(&s(4), DEFAULT_CLOSURE_CAP).unwrap().len(), 24);
        assert_eq!(closure(&s(8), DEFAULT_CLOSURE_CAP).unwrap().len(), 40320);
        let c = Permutation::n_cycle(3).unwrap();
        assert_eq!(closure(&[c.clone(), c.inverse()], 100).unwrap().len(), 3);
        assert!(matches!(
            closure(&s(5), 100),
            Err(Error::ClosureOverflow { cap: 100 })
        ));
        assert!(closure(&[], 10).is_err());
    }

    #[test]
    fn closure_order_is_deterministic() {
        let s = GenSet::standard(5).unwrap();
        let a = closure(s.elements(), 1000).unwrap();
        let b = closure(s.elements(), 1000).unwrap();
        assert_eq!(a, b);
        assert!(a[0].is_identity());
        assert_eq!(&a[1..4], s.elements());
    }
}
