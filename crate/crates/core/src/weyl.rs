//! Symmetric-group and partition combinatorics.
//!
//! Permutations are stored in one-line notation with 1-based values. Products
//! follow function composition: `(u * v)(j) = u(v(j))`, so the word
//! `s1 s2` denotes the permutation `j -> s1(s2(j))`.

use std::fmt;
use std::ops::Mul;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("not a permutation of 1..{n}: {oneline:?}")]
    NotAPermutation { oneline: Vec<usize>, n: usize },
    #[error("simple reflection s{index} is out of range for n = {n}")]
    ReflectionOutOfRange { index: usize, n: usize },
    #[error("cycle entry {entry} is outside 1..={n}")]
    CycleEntryOutOfRange { entry: usize, n: usize },
    #[error("element {0} appears more than once in the cycles")]
    RepeatedCycleEntry(usize),
    #[error("parts must be weakly decreasing: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("length {got} exceeds n = {n}")]
    TooLong { got: usize, n: usize },
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Permutation {
    oneline: Vec<usize>,
}

impl Permutation {
    pub fn new(oneline: Vec<usize>) -> Result<Self, WeylError> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v > n || seen[v] {
                return Err(WeylError::NotAPermutation { oneline, n });
            }
            seen[v] = true;
        }
        Ok(Permutation { oneline })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            oneline: (1..=n).collect(),
        }
    }

    /// The simple transposition `s_i` exchanging `i` and `i + 1`.
    pub fn simple(i: usize, n: usize) -> Result<Self, WeylError> {
        if i == 0 || i >= n {
            return Err(WeylError::ReflectionOutOfRange { index: i, n });
        }
        let mut p = Self::identity(n);
        p.oneline.swap(i - 1, i);
        Ok(p)
    }

    /// `w0(i) = n + 1 - i`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            oneline: (1..=n).rev().collect(),
        }
    }

    /// Product `s_{i1} s_{i2} ... s_{il}` of simple reflections.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self, WeylError> {
        let mut p = Self::identity(n);
        for &i in word {
            p = &p * &Self::simple(i, n)?;
        }
        Ok(p)
    }

    /// Standard cycle notation: each cycle maps an entry to its successor.
    pub fn from_cycles(cycles: &[Vec<usize>], n: usize) -> Result<Self, WeylError> {
        let mut oneline: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        for cycle in cycles {
            for &e in cycle {
                if e == 0 || e > n {
                    return Err(WeylError::CycleEntryOutOfRange { entry: e, n });
                }
                if seen[e] {
                    return Err(WeylError::RepeatedCycleEntry(e));
                }
                seen[e] = true;
            }
            for (k, &e) in cycle.iter().enumerate() {
                oneline[e - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { oneline })
    }

    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    pub fn oneline(&self) -> &[usize] {
        &self.oneline
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.oneline[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.oneline.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { oneline: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Coxeter length, i.e. the inversion count.
    pub fn length(&self) -> usize {
        let w = &self.oneline;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// `i` is a left descent iff `l(s_i w) < l(w)`, i.e. `w^{-1}(i) > w^{-1}(i+1)`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.oneline.iter().position(|&x| x == v).unwrap();
        pos(i) > pos(i + 1)
    }

    /// Left-multiplication by `s_i` swaps the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let oneline = self
            .oneline
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Permutation { oneline }
    }

    /// Lexicographically smallest reduced word, obtained by peeling off the
    /// smallest left descent at every step.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = (1..w.n()).find(|&i| w.is_left_descent(i)) {
            word.push(i);
            w = w.left_mul_simple(i);
        }
        word
    }

    /// Every reduced word of `self` (exponential; intended for small n).
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in (1..self.n()).filter(|&i| self.is_left_descent(i)) {
            for mut tail in self.left_mul_simple(i).all_reduced_words() {
                tail.insert(0, i);
                out.push(tail);
            }
        }
        out
    }

    /// All permutations of `1..=n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                oneline: current.clone(),
            });
            // next lexicographic permutation
            let Some(k) = (0..n.saturating_sub(1))
                .rev()
                .find(|&k| current[k] < current[k + 1])
            else {
                break;
            };
            let l = (k + 1..n).rev().find(|&l| current[k] < current[l]).unwrap();
            current.swap(k, l);
            current[k + 1..].reverse();
        }
        out
    }

    /// Compact one-line rendering (`"3421"`), comma separated past n = 9.
    pub fn to_oneline_string(&self) -> String {
        if self.n() <= 9 {
            self.oneline.iter().map(|v| v.to_string()).collect()
        } else {
            self.oneline
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Parses a permutation of `1..=n` given in one-line digits (`3412`),
    /// comma-separated one-line (`3,4,1,2`), cycle notation (`(1,3,2,4)`), or
    /// a word in simple reflections (`s1 s2`, `s2`).
    pub fn parse(input: &str, n: usize, format: PermFormat) -> Result<Self, WeylError> {
        let s = input.trim();
        let fail = |reason: &str| WeylError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let format = match format {
            PermFormat::Auto => {
                if s.starts_with('(') {
                    PermFormat::Cycles
                } else if s.starts_with('s') {
                    PermFormat::Word
                } else if s == "id" || s == "e" {
                    return Ok(Self::identity(n));
                } else {
                    PermFormat::OneLine
                }
            }
            f => f,
        };
        match format {
            PermFormat::Cycles => {
                let mut cycles = Vec::new();
                for chunk in s.split(')') {
                    let chunk = chunk.trim();
                    if chunk.is_empty() {
                        continue;
                    }
                    let body = chunk
                        .strip_prefix('(')
                        .ok_or_else(|| fail("malformed cycle"))?;
                    let cycle = body
                        .split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|t| !t.is_empty())
                        .map(|t| t.parse::<usize>().map_err(|_| fail("bad cycle entry")))
                        .collect::<Result<Vec<_>, _>>()?;
                    if !cycle.is_empty() {
                        cycles.push(cycle);
                    }
                }
                Self::from_cycles(&cycles, n)
            }
            PermFormat::Word => {
                let word = s
                    .split(|c: char| c.is_whitespace() || c == ',' || c == '*')
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.strip_prefix('s')
                            .and_then(|d| d.parse::<usize>().ok())
                            .ok_or_else(|| fail("expected tokens like s1"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Self::from_word(&word, n)
            }
            PermFormat::OneLine | PermFormat::Auto => {
                let values: Vec<usize> = if s.contains(',') || s.contains(' ') {
                    s.split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|t| !t.is_empty())
                        .map(|t| t.parse::<usize>().map_err(|_| fail("bad entry")))
                        .collect::<Result<_, _>>()?
                } else {
                    s.chars()
                        .map(|ch| {
                            ch.to_digit(10)
                                .map(|d| d as usize)
                                .ok_or_else(|| fail("expected digits"))
                        })
                        .collect::<Result<_, _>>()?
                };
                if values.len() != n {
                    return Err(fail(&format!("expected {n} entries, got {}", values.len())));
                }
                Self::new(values)
            }
        }
    }
}

/// Input grammar selector for [`Permutation::parse`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PermFormat {
    #[default]
    Auto,
    OneLine,
    Cycles,
    Word,
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.n(), rhs.n(), "permutations of different sizes");
        Permutation {
            oneline: rhs.oneline.iter().map(|&v| self.oneline[v - 1]).collect(),
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.oneline)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_oneline_string())
    }
}

/// Weakly decreasing vector of non-negative parts, padded to length n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, WeylError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(WeylError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Zero-pads `parts` to length `n`.
    pub fn padded(parts: &[u32], n: usize) -> Result<Self, WeylError> {
        if parts.len() > n {
            return Err(WeylError::TooLong {
                got: parts.len(),
                n,
            });
        }
        let mut v = parts.to_vec();
        v.resize(n, 0);
        Self::new(v)
    }

    pub fn zero(n: usize) -> Self {
        Partition(vec![0; n])
    }

    /// `rho = (n-1, n-2, ..., 1, 0)`.
    pub fn staircase(n: usize) -> Self {
        Partition((0..n as u32).rev().collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part-wise sum.
    pub fn plus(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        Partition(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Vector of non-negative parts with no ordering constraint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(v . zeta)_i = zeta_{v(i)}`.
    pub fn permuted_by(&self, v: &Permutation) -> Composition {
        Composition((1..=self.len()).map(|i| self.0[v.apply(i) - 1]).collect())
    }

    /// Weakly decreasing rearrangement `zeta+` together with the minimal
    /// length `v` satisfying `v . zeta = zeta+`. A stable sort keeps equal
    /// parts in their original relative order, which is exactly the minimal
    /// coset representative.
    pub fn sort(&self) -> (Partition, Permutation) {
        let mut positions: Vec<usize> = (1..=self.len()).collect();
        positions.sort_by(|&i, &j| self.0[j - 1].cmp(&self.0[i - 1]));
        let sorted = positions.iter().map(|&i| self.0[i - 1]).collect();
        (Partition(sorted), Permutation { oneline: positions })
    }

    /// `self ⊂ other` part-wise.
    pub fn contained_in(&self, other: &[u32]) -> bool {
        self.len() == other.len() && self.0.iter().zip(other).all(|(a, b)| a <= b)
    }
}

/// Parses a comma or space separated list of non-negative integers.
pub fn parse_parts(input: &str) -> Result<Vec<u32>, WeylError> {
    input
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>().map_err(|_| WeylError::Parse {
                input: input.to_string(),
                reason: format!("`{t}` is not a non-negative integer"),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn reduced_word_examples() {
        assert!(Permutation::identity(3).reduced_word().is_empty());
        assert_eq!(p(&[3, 2, 1]).reduced_word(), vec![1, 2, 1]);
        assert_eq!(p(&[1, 3, 2]).reduced_word(), vec![2]);
    }

    #[test]
    fn reduced_word_is_lex_min_among_all_words() {
        // brute force: every word of length l(w) over {1, .., n-1} whose
        // product is w, keep the smallest
        for w in Permutation::all(4) {
            let len = w.length();
            let mut best: Option<Vec<usize>> = None;
            let total = 3usize.pow(len as u32);
            for code in 0..total {
                let mut word = Vec::with_capacity(len);
                let mut c = code;
                for _ in 0..len {
                    word.push(c % 3 + 1);
                    c /= 3;
                }
                word.reverse();
                if Permutation::from_word(&word, 4).unwrap() == w
                    && best.as_ref().is_none_or(|b| word < *b)
                {
                    best = Some(word);
                }
            }
            assert_eq!(Some(w.reduced_word()), best, "w = {w}");
        }
    }

    #[test]
    fn longest_elements() {
        assert_eq!(Permutation::longest(1).oneline(), &[1]);
        assert_eq!(Permutation::longest(3).oneline(), &[3, 2, 1]);
        let w0 = Permutation::longest(4);
        assert_eq!(w0.oneline(), &[4, 3, 2, 1]);
        assert_eq!(w0.length(), 6);
    }

    #[test]
    fn words_recover_permutations_in_s4() {
        for w in Permutation::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_word(&word, 4).unwrap(), w);
            for other in w.all_reduced_words() {
                assert_eq!(other.len(), w.length());
                assert_eq!(Permutation::from_word(&other, 4).unwrap(), w);
            }
        }
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::longest(4).all_reduced_words().len(), 16);
    }

    #[test]
    fn cycles() {
        assert_eq!(
            Permutation::from_cycles(&[vec![1, 2]], 2)
                .unwrap()
                .oneline(),
            &[2, 1]
        );
        assert_eq!(
            Permutation::from_cycles(&[vec![1, 3, 2, 4]], 4)
                .unwrap()
                .oneline(),
            &[3, 4, 2, 1]
        );
        assert_eq!(
            Permutation::from_cycles(&[vec![1, 4, 2, 3]], 4)
                .unwrap()
                .oneline(),
            &[4, 3, 1, 2]
        );
        assert_eq!(
            Permutation::from_cycles(&[vec![1, 2], vec![2, 3]], 3),
            Err(WeylError::RepeatedCycleEntry(2))
        );
    }

    #[test]
    fn parsing() {
        let auto = PermFormat::Auto;
        assert_eq!(Permutation::parse("231", 3, auto).unwrap(), p(&[2, 3, 1]));
        assert_eq!(Permutation::parse("s2", 3, auto).unwrap(), p(&[1, 3, 2]));
        assert_eq!(Permutation::parse("(2,3)", 3, auto).unwrap(), p(&[1, 3, 2]));
        assert_eq!(Permutation::parse("s1 s2", 3, auto).unwrap(), p(&[2, 3, 1]));
        assert_eq!(
            Permutation::parse("(1,3,2,4)", 4, auto).unwrap(),
            p(&[3, 4, 2, 1])
        );
        assert_eq!(
            Permutation::parse("3,4,2,1", 4, auto).unwrap(),
            p(&[3, 4, 2, 1])
        );
        assert_eq!(
            Permutation::parse("id", 3, auto).unwrap(),
            Permutation::identity(3)
        );
        assert!(Permutation::parse("12", 3, auto).is_err());
        assert!(Permutation::parse("s3", 3, auto).is_err());
        assert!(Permutation::parse("113", 3, auto).is_err());
        assert_eq!(parse_parts("1,1,0").unwrap(), vec![1, 1, 0]);
        assert!(parse_parts("1,-1").is_err());
    }

    #[test]
    fn composition_sorting() {
        let (plus, v) = Composition::new(vec![2, 1, 0]).sort();
        assert_eq!(plus.parts(), &[2, 1, 0]);
        assert!(v.is_identity());

        let (plus, v) = Composition::new(vec![0, 1]).sort();
        assert_eq!(plus.parts(), &[1, 0]);
        assert_eq!(v, Permutation::simple(1, 2).unwrap());
    }

    #[test]
    fn composition_sorting_is_minimal_by_brute_force() {
        let samples: Vec<Vec<u32>> = vec![
            vec![1, 2, 2, 1],
            vec![0, 0, 1, 0],
            vec![3, 0, 3, 1],
            vec![0, 1, 2, 3],
            vec![2, 2, 2, 2],
            vec![1, 0, 1, 0],
        ];
        for parts in samples {
            let zeta = Composition::new(parts.clone());
            let (plus, v) = zeta.sort();
            assert_eq!(zeta.permuted_by(&v).parts(), plus.parts());
            let best = Permutation::all(4)
                .into_iter()
                .filter(|u| zeta.permuted_by(u).parts() == plus.parts())
                .map(|u| u.length())
                .min()
                .unwrap();
            assert_eq!(v.length(), best, "zeta = {parts:?}");
            let minimal: Vec<_> = Permutation::all(4)
                .into_iter()
                .filter(|u| zeta.permuted_by(u).parts() == plus.parts() && u.length() == best)
                .collect();
            assert_eq!(minimal, vec![v]);
        }
        let (plus, v) = Composition::new(vec![1, 2, 2, 1]).sort();
        assert_eq!(plus.parts(), &[2, 2, 1, 1]);
        assert_eq!(v.oneline(), &[2, 3, 1, 4]);
    }

    #[test]
    fn partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(
            Partition::padded(&[2, 1], 4).unwrap().parts(),
            &[2, 1, 0, 0]
        );
        assert!(Partition::padded(&[1, 1, 1], 2).is_err());
        assert_eq!(Partition::staircase(4).parts(), &[3, 2, 1, 0]);
    }

    #[test]
    fn composition_is_left_to_right() {
        let s1 = Permutation::simple(1, 3).unwrap();
        let s2 = Permutation::simple(2, 3).unwrap();
        assert_eq!((&s1 * &s2).oneline(), &[2, 3, 1]);
        assert_eq!(
            Permutation::from_word(&[1, 2], 3).unwrap().oneline(),
            &[2, 3, 1]
        );
    }
}
