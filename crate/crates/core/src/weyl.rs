//! Coxeter-group machinery for the symmetric groups (type A) and the
//! dihedral group B2: reduced words, longest elements, and braid-move
//! connectivity.
//!
//! Elements are identified by their matrix in a faithful reflection
//! representation over exact scalars: permutation matrices for type A,
//! signed permutations of the plane for B2. Lengths come from a
//! breadth-first enumeration of the (small, finite) group.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::scalar::rat;

/// Enumeration is rejected beyond this Coxeter length.
pub const MAX_ENUM_LENGTH: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoxeterType {
    /// A(n-1), the symmetric group S_n; the parameter is n.
    A(usize),
    /// The Weyl group of B2 (order 8).
    B2,
}

/// A Coxeter system with its reflection representation and the length
/// table of the full group.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    kind: CoxeterType,
    generators: Vec<RatMatrix>,
    lengths: HashMap<RatMatrix, usize>,
}

/// A validated reduced word: 1-based generator indices whose count
/// equals the Coxeter length of the element they spell.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord {
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// One braid-relation substitution: replace the alternating pattern of
/// length `order` starting at `position` (0-based) by the swapped one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidMove {
    pub position: usize,
    pub order: usize,
}

impl CoxeterSystem {
    pub fn type_a(n: usize) -> Self {
        assert!(n >= 2, "type A needs n >= 2");
        let generators = (0..n - 1)
            .map(|i| {
                let mut m = RatMatrix::identity(n);
                m[(i, i)] = rat(0);
                m[(i + 1, i + 1)] = rat(0);
                m[(i, i + 1)] = rat(1);
                m[(i + 1, i)] = rat(1);
                m
            })
            .collect();
        Self::build(CoxeterType::A(n), generators)
    }

    pub fn b2() -> Self {
        // s1 swaps the coordinates, s2 negates the second one; m(1,2) = 4
        let s1 = RatMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let s2 = RatMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        Self::build(CoxeterType::B2, vec![s1, s2])
    }

    fn build(kind: CoxeterType, generators: Vec<RatMatrix>) -> Self {
        let dim = generators[0].rows();
        let mut lengths = HashMap::new();
        let mut queue = VecDeque::new();
        lengths.insert(RatMatrix::identity(dim), 0);
        queue.push_back(RatMatrix::identity(dim));
        while let Some(g) = queue.pop_front() {
            let l = lengths[&g];
            for s in &generators {
                let h = s.mul(&g);
                if !lengths.contains_key(&h) {
                    lengths.insert(h.clone(), l + 1);
                    queue.push_back(h);
                }
            }
        }
        CoxeterSystem { kind, generators, lengths }
    }

    pub fn kind(&self) -> CoxeterType {
        self.kind
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Entry m(i, j) of the Coxeter matrix, 1-based.
    pub fn coxeter_m(&self, i: usize, j: usize) -> Result<usize> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Ok(1);
        }
        Ok(match self.kind {
            CoxeterType::A(_) => {
                if i.abs_diff(j) == 1 {
                    3
                } else {
                    2
                }
            }
            CoxeterType::B2 => 4,
        })
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.generators.len() {
            return Err(Error::GeneratorIndex(i, self.generators.len()));
        }
        Ok(())
    }

    /// Matrix of the element spelled by a word of 1-based indices.
    pub fn word_matrix(&self, word: &[usize]) -> Result<RatMatrix> {
        let mut m = RatMatrix::identity(self.generators[0].rows());
        for &i in word {
            self.check_index(i)?;
            m = m.mul(&self.generators[i - 1]);
        }
        Ok(m)
    }

    pub fn length_of(&self, element: &RatMatrix) -> usize {
        self.lengths[element]
    }

    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        let m = self.word_matrix(word)?;
        Ok(self.length_of(&m) == word.len())
    }

    /// Validates a word into a `ReducedWord`.
    pub fn reduced_word(&self, word: &[usize]) -> Result<ReducedWord> {
        if self.is_reduced(word)? {
            Ok(ReducedWord { letters: word.to_vec() })
        } else {
            Err(Error::NotReduced)
        }
    }

    pub fn longest_element_length(&self) -> usize {
        *self.lengths.values().max().unwrap()
    }

    /// A lexicographically minimal reduced word for the longest element.
    pub fn longest_element(&self) -> ReducedWord {
        let target = self.longest_element_length();
        let w0 = self
            .lengths
            .iter()
            .find(|(_, &l)| l == target)
            .map(|(m, _)| m.clone())
            .unwrap();
        let mut words = self.reduced_words_of(&w0).unwrap();
        words.sort();
        words.into_iter().next().unwrap()
    }

    /// All reduced words for the element of `word`, lexicographic order.
    pub fn enumerate_reduced_words(&self, word: &ReducedWord) -> Result<Vec<ReducedWord>> {
        let m = self.word_matrix(word.letters())?;
        self.reduced_words_of(&m)
    }

    fn reduced_words_of(&self, element: &RatMatrix) -> Result<Vec<ReducedWord>> {
        let l = self.length_of(element);
        if l > MAX_ENUM_LENGTH {
            return Err(Error::LengthBound(l, MAX_ENUM_LENGTH));
        }
        let mut memo: BTreeMap<usize, HashMap<RatMatrix, Vec<Vec<usize>>>> = BTreeMap::new();
        let words = self.words_rec(element, &mut memo);
        let mut out: Vec<ReducedWord> = words.into_iter().map(|letters| ReducedWord { letters }).collect();
        out.sort();
        Ok(out)
    }

    fn words_rec(
        &self,
        element: &RatMatrix,
        memo: &mut BTreeMap<usize, HashMap<RatMatrix, Vec<Vec<usize>>>>,
    ) -> Vec<Vec<usize>> {
        let l = self.length_of(element);
        if l == 0 {
            return vec![vec![]];
        }
        if let Some(ws) = memo.get(&l).and_then(|m| m.get(element)) {
            return ws.clone();
        }
        let mut out = Vec::new();
        for (i, s) in self.generators.iter().enumerate() {
            let rest = s.mul(element);
            if self.length_of(&rest) == l - 1 {
                for mut tail in self.words_rec(&rest, memo) {
                    tail.insert(0, i + 1);
                    out.push(tail);
                }
            }
        }
        memo.entry(l).or_default().insert(element.clone(), out.clone());
        out
    }

    /// Applicable braid moves of a word, with the resulting words.
    fn braid_neighbors(&self, word: &[usize]) -> Vec<(BraidMove, Vec<usize>)> {
        let mut out = Vec::new();
        for pos in 0..word.len().saturating_sub(1) {
            let (i, j) = (word[pos], word[pos + 1]);
            if i == j {
                continue;
            }
            let m = self.coxeter_m(i, j).unwrap();
            if pos + m > word.len() {
                continue;
            }
            let alternating = (0..m).all(|k| word[pos + k] == if k % 2 == 0 { i } else { j });
            if !alternating {
                continue;
            }
            let mut next = word.to_vec();
            for k in 0..m {
                next[pos + k] = if k % 2 == 0 { j } else { i };
            }
            out.push((BraidMove { position: pos, order: m }, next));
        }
        out
    }

    /// Shortest sequence of single braid substitutions from `from` to
    /// `to`; errors if the words spell different elements.
    pub fn braid_move_path(&self, from: &ReducedWord, to: &ReducedWord) -> Result<Vec<BraidMove>> {
        if self.word_matrix(from.letters())? != self.word_matrix(to.letters())? {
            return Err(Error::DifferentElements);
        }
        if from == to {
            return Ok(vec![]);
        }
        let mut prev: HashMap<Vec<usize>, (Vec<usize>, BraidMove)> = HashMap::new();
        let mut queue = VecDeque::new();
        queue.push_back(from.letters.clone());
        prev.insert(from.letters.clone(), (vec![], BraidMove { position: 0, order: 0 }));
        while let Some(w) = queue.pop_front() {
            if w == to.letters {
                let mut path = Vec::new();
                let mut cur = w;
                while cur != from.letters {
                    let (p, mv) = prev[&cur].clone();
                    path.push(mv);
                    cur = p;
                }
                path.reverse();
                return Ok(path);
            }
            for (mv, next) in self.braid_neighbors(&w) {
                if !prev.contains_key(&next) {
                    prev.insert(next.clone(), (w.clone(), mv));
                    queue.push_back(next);
                }
            }
        }
        // reduced words of a common element are always braid-connected
        unreachable!("braid graph of a common element is connected")
    }

    /// Applies one braid move to a word (no validity re-check).
    pub fn apply_braid_move(&self, word: &[usize], mv: BraidMove) -> Vec<usize> {
        let (i, j) = (word[mv.position], word[mv.position + 1]);
        let mut next = word.to_vec();
        for k in 0..mv.order {
            next[mv.position + k] = if k % 2 == 0 { j } else { i };
        }
        next
    }
}
