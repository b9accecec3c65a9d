//! Reduction in path algebras modulo a two-sided ideal.
//!
//! Paths are compared length first (longer is larger), then
//! lexicographically by arrow index. Leading words of a reduced basis
//! determine the normal words, which become the algebra basis.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};

use crate::error::{Error, Result};
use crate::exactlin::{Field, Scalar};

use super::quiver::Arrow;

/// A path in product notation: `letters[0]` is applied last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    pub source: usize,
    pub target: usize,
    pub letters: Vec<usize>,
}

impl Word {
    pub fn trivial(v: usize) -> Word {
        Word { source: v, target: v, letters: Vec::new() }
    }

    pub fn from_letters(arrows: &[Arrow], letters: Vec<usize>) -> Word {
        assert!(!letters.is_empty());
        Word {
            source: arrows[*letters.last().unwrap()].source,
            target: arrows[letters[0]].target,
            letters,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    /// Product `self · o` (apply `o` first), if composable.
    pub fn times(&self, o: &Word) -> Option<Word> {
        if self.source != o.target {
            return None;
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&o.letters);
        Some(Word { source: o.source, target: self.target, letters })
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { source: self.target, target: self.source, letters }
    }

    pub fn render(&self, arrows: &[Arrow], vertices: &[String]) -> String {
        if self.letters.is_empty() {
            format!("e{}", vertices[self.source])
        } else {
            self.letters.iter().map(|&i| arrows[i].name.as_str()).collect::<Vec<_>>().join("·")
        }
    }

    fn find(&self, pat: &[usize]) -> Option<usize> {
        if pat.is_empty() || pat.len() > self.letters.len() {
            return None;
        }
        (0..=self.letters.len() - pat.len()).find(|&i| &self.letters[i..i + pat.len()] == pat)
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Word) -> Ordering {
        self.letters
            .len()
            .cmp(&o.letters.len())
            .then_with(|| self.letters.cmp(&o.letters))
            .then_with(|| (self.source, self.target).cmp(&(o.source, o.target)))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Word) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Element of the path algebra; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Word, Scalar>,
}

impl Poly {
    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Poly {
        let mut p = Poly::default();
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = &*x + c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    fn add_scaled_sandwich(&mut self, c: &Scalar, pre: &[usize], g: &Poly, post: &[usize], arrows: &[Arrow]) {
        for (w, d) in &g.terms {
            let mut letters = pre.to_vec();
            letters.extend_from_slice(&w.letters);
            letters.extend_from_slice(post);
            let word = if letters.is_empty() { w.clone() } else { Word::from_letters(arrows, letters) };
            self.add_term(word, &(c * d));
        }
    }

    fn monic(mut self) -> Poly {
        if let Some((_, c)) = self.leading() {
            let inv = c.inv().unwrap();
            for v in self.terms.values_mut() {
                *v = &*v * &inv;
            }
        }
        self
    }
}

#[derive(PartialEq, Eq)]
struct Pair {
    degree: usize,
    seq: usize,
    i: usize,
    j: usize,
    overlap: usize,
}

impl Ord for Pair {
    fn cmp(&self, o: &Pair) -> Ordering {
        // min-heap on (degree, seq)
        (o.degree, o.seq).cmp(&(self.degree, self.seq))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, o: &Pair) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Reduced generating set of a two-sided ideal whose leading words
/// describe the normal words.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    arrows: Vec<Arrow>,
    elems: Vec<Poly>,
}

const MAX_PAIRS: usize = 500_000;

impl GroebnerBasis {
    pub fn compute(field: Field, arrows: &[Arrow], relations: &[Poly], max_len: usize) -> Result<GroebnerBasis> {
        let _ = field;
        let mut st = State { arrows: arrows.to_vec(), slots: Vec::new(), heap: BinaryHeap::new(), seq: 0 };
        for r in relations {
            st.add(r.clone(), max_len)?;
        }
        let mut processed = 0;
        while let Some(pair) = st.heap.pop() {
            processed += 1;
            if processed > MAX_PAIRS {
                return Err(Error::NotFiniteDimensional("ideal reduction did not terminate".into()));
            }
            let (Some(g1), Some(g2)) = (st.slots[pair.i].clone(), st.slots[pair.j].clone()) else {
                continue;
            };
            let l1 = g1.leading().unwrap().0.letters.clone();
            let l2 = g2.leading().unwrap().0.letters.clone();
            let k = pair.overlap;
            let mut s = Poly::default();
            s.add_scaled_sandwich(&st.one(&g1), &[], &g1, &l2[k..], arrows);
            s.add_scaled_sandwich(&-st.one(&g1), &l1[..l1.len() - k], &g2, &[], arrows);
            st.add(s, max_len)?;
        }
        let elems = st.slots.into_iter().flatten().collect();
        Ok(GroebnerBasis { arrows: arrows.to_vec(), elems })
    }

    pub fn leading_words(&self) -> Vec<&Word> {
        self.elems.iter().map(|g| g.leading().unwrap().0).collect()
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.elems.iter().all(|g| w.find(&g.leading().unwrap().0.letters).is_none())
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        reduce_with(&self.arrows, self.elems.iter(), p.clone())
    }
}

fn reduce_with<'a>(arrows: &[Arrow], basis: impl Iterator<Item = &'a Poly> + Clone, mut work: Poly) -> Poly {
    let mut out = Poly::default();
    while let Some((w, c)) = work.terms.pop_last() {
        let hit = basis.clone().find_map(|g| {
            let lw = g.leading().unwrap().0;
            w.find(&lw.letters).map(|i| (g, i, lw.len()))
        });
        match hit {
            Some((g, i, len)) => {
                // g is monic; subtract c·pre·g·post, whose leading term cancels w.
                let pre = &w.letters[..i];
                let post = &w.letters[i + len..];
                let mut tail = g.clone();
                tail.terms.pop_last();
                work.add_scaled_sandwich(&-&c, pre, &tail, post, arrows);
            }
            None => {
                out.terms.insert(w, c);
            }
        }
    }
    out
}

struct State {
    arrows: Vec<Arrow>,
    slots: Vec<Option<Poly>>,
    heap: BinaryHeap<Pair>,
    seq: usize,
}

impl State {
    fn one(&self, g: &Poly) -> Scalar {
        g.leading().unwrap().1.field().one()
    }

    fn add(&mut self, f: Poly, max_len: usize) -> Result<()> {
        let mut pending = vec![f];
        while let Some(f) = pending.pop() {
            let f = reduce_with(&self.arrows, self.slots.iter().flatten(), f);
            if f.is_zero() {
                continue;
            }
            let f = f.monic();
            let lw = f.leading().unwrap().0.clone();
            if lw.len() > max_len {
                return Err(Error::NotFiniteDimensional(format!(
                    "relations force words longer than {max_len}"
                )));
            }
            for slot in self.slots.iter_mut() {
                let hit = slot.as_ref().is_some_and(|g| g.leading().unwrap().0.find(&lw.letters).is_some());
                if hit {
                    pending.push(slot.take().unwrap());
                }
            }
            let id = self.slots.len();
            self.slots.push(Some(f));
            for j in 0..=id {
                if self.slots[j].is_none() {
                    continue;
                }
                self.queue_overlaps(id, j);
                if j != id {
                    self.queue_overlaps(j, id);
                }
            }
        }
        Ok(())
    }

    fn queue_overlaps(&mut self, i: usize, j: usize) {
        let l1 = self.slots[i].as_ref().unwrap().leading().unwrap().0.letters.clone();
        let l2 = self.slots[j].as_ref().unwrap().leading().unwrap().0.letters.clone();
        for k in 1..l1.len().min(l2.len()) {
            if l1[l1.len() - k..] == l2[..k] {
                self.seq += 1;
                self.heap.push(Pair { degree: l1.len() + l2.len() - k, seq: self.seq, i, j, overlap: k });
            }
        }
    }
}
