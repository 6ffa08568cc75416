//! Words over the two-letter alphabet {a, b}, stored as packed letter
//! vectors. The depth of a word is its number of b's; the a-block encoding
//! a^{k0} b a^{k1} b ... b a^{kr} makes the push operator an index rotation.

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn from_letters(ls: Vec<Letter>) -> Self {
        Word(ls)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// weight = length
    pub fn weight(&self) -> u32 {
        self.0.len() as u32
    }

    /// depth = number of b's
    pub fn depth(&self) -> u32 {
        self.0.iter().filter(|&&l| l == Letter::B).count() as u32
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// a-block exponents (k0, ..., kr) of a^{k0} b a^{k1} b ... b a^{kr};
    /// a word with r b's yields r+1 entries.
    pub fn a_blocks(&self) -> Vec<u32> {
        let mut blocks = vec![0u32];
        for &l in &self.0 {
            match l {
                Letter::A => *blocks.last_mut().unwrap() += 1,
                Letter::B => blocks.push(0),
            }
        }
        blocks
    }

    pub fn from_a_blocks(blocks: &[u32]) -> Word {
        assert!(!blocks.is_empty());
        let mut v = Vec::new();
        for (i, &k) in blocks.iter().enumerate() {
            if i > 0 {
                v.push(Letter::B);
            }
            v.extend(std::iter::repeat(Letter::A).take(k as usize));
        }
        Word(v)
    }

    /// push(a^{k0} b ... b a^{kr}) = a^{kr} b a^{k0} b ... a^{k_{r-1}}.
    pub fn push(&self) -> Word {
        let mut blocks = self.a_blocks();
        if blocks.len() <= 1 {
            return self.clone();
        }
        blocks.rotate_right(1);
        Word::from_a_blocks(&blocks)
    }

    pub fn parse(s: &str) -> Result<Word> {
        let mut v = Vec::new();
        for ch in s.chars() {
            match ch {
                'a' => v.push(Letter::A),
                'b' => v.push(Letter::B),
                c if c.is_whitespace() => {}
                c => return Err(Error::Parse(format!("bad letter `{c}` in word"))),
            }
        }
        Ok(Word(v))
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &l in &self.0 {
            write!(f, "{}", if l == Letter::A { 'a' } else { 'b' })?;
        }
        Ok(())
    }
}

/// All shuffles of two words, with multiplicity.
pub fn shuffle_words(w1: &Word, w2: &Word) -> Vec<Word> {
    fn rec(a: &[Letter], b: &[Letter], prefix: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if a.is_empty() && b.is_empty() {
            out.push(Word::from_letters(prefix.clone()));
            return;
        }
        if let Some((&h, t)) = a.split_first() {
            prefix.push(h);
            rec(t, b, prefix, out);
            prefix.pop();
        }
        if let Some((&h, t)) = b.split_first() {
            prefix.push(h);
            rec(a, t, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(w1.letters(), w2.letters(), &mut Vec::new(), &mut out);
    out
}

/// The interleavings of (0..i) and (i..r) as permutation images: each
/// result perm satisfies: reading positions 1..r, position p receives
/// sequence element perm[p]. Used for mould alternality sums.
pub fn shuffle_index_patterns(i: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(a: &[usize], b: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if a.is_empty() && b.is_empty() {
            out.push(prefix.clone());
            return;
        }
        if let Some((&h, t)) = a.split_first() {
            prefix.push(h);
            rec(t, b, prefix, out);
            prefix.pop();
        }
        if let Some((&h, t)) = b.split_first() {
            prefix.push(h);
            rec(a, t, prefix, out);
            prefix.pop();
        }
    }
    let first: Vec<usize> = (0..i).collect();
    let second: Vec<usize> = (i..r).collect();
    let mut out = Vec::new();
    rec(&first, &second, &mut Vec::new(), &mut out);
    out
}
