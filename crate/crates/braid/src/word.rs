//! Braid words, the group relations, Markov moves, and the complexity
//! measure used by the resolving-tree construction.
//!
//! A word lives in `B_n[p]`: the subgroup of the `n`-strand braid group
//! generated by `sigma_1 .. sigma_{p-1}`. Strands `p+1 .. n` are split
//! unknot components. Letter `k > 0` is `sigma_k`, `k < 0` is
//! `sigma_k^{-1}`.

use std::fmt;

use crate::error::{Error, Result};

/// A braid word together with its strand count `n` and braided-prefix
/// bound `p`. Words are immutable values; every operation returns a new
/// word, so tree construction can share subwords freely.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<i32>,
    strands: usize,
    braided: usize,
}

impl BraidWord {
    /// Word in `B_n` with `p = n`.
    pub fn new(letters: Vec<i32>, strands: usize) -> Result<Self> {
        Self::with_prefix(letters, strands, strands)
    }

    /// Word in `B_n[p]`. Every letter `k` must satisfy `1 <= |k| <= p-1`.
    pub fn with_prefix(letters: Vec<i32>, strands: usize, braided: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parse("strand count must be positive".into()));
        }
        if braided == 0 || braided > strands {
            return Err(Error::Parse(format!(
                "braided prefix {braided} out of range 1..={strands}"
            )));
        }
        for &k in &letters {
            if k == 0 {
                return Err(Error::Parse("zero is not a generator index".into()));
            }
            let a = k.unsigned_abs() as usize;
            if a + 1 > braided {
                return Err(Error::Parse(format!(
                    "generator {a} needs at least {} braided strands, have {braided}",
                    a + 1
                )));
            }
        }
        Ok(BraidWord {
            letters,
            strands,
            braided,
        })
    }

    /// Parses whitespace- or comma-separated signed generator indices.
    /// When `strands` is omitted it defaults to `max |k| + 1` (and to 1
    /// for the empty word). `p` is set to `n`.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let k: i32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator token {tok:?}")))?;
            if k == 0 {
                return Err(Error::Parse("zero is not a generator index".into()));
            }
            letters.push(k);
        }
        let min_strands = letters
            .iter()
            .map(|k| k.unsigned_abs() as usize + 1)
            .max()
            .unwrap_or(1);
        let n = match strands {
            Some(n) => {
                if n < min_strands {
                    return Err(Error::Parse(format!(
                        "word needs at least {min_strands} strands, --strands gave {n}"
                    )));
                }
                n
            }
            None => min_strands,
        };
        Self::new(letters, n)
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Word length, written `l` throughout.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Strand count `n`.
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Braided-prefix bound `p`: only `sigma_1 .. sigma_{p-1}` may occur.
    pub fn braided(&self) -> usize {
        self.braided
    }

    /// Number of occurrences of generator `g` (counted by absolute value).
    pub fn occurrences(&self, g: usize) -> usize {
        self.letters
            .iter()
            .filter(|k| k.unsigned_abs() as usize == g)
            .count()
    }

    /// Positions of generator `g` in word order (bottom to top).
    pub fn positions_of(&self, g: usize) -> Vec<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, k)| k.unsigned_abs() as usize == g)
            .map(|(q, _)| q)
            .collect()
    }

    fn replace(&self, letters: Vec<i32>) -> Self {
        BraidWord {
            letters,
            strands: self.strands,
            braided: self.braided,
        }
    }

    /// Rule 1: repeatedly deletes adjacent `sigma_k sigma_k^{-1}` pairs
    /// until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &k in &self.letters {
            if stack.last() == Some(&-k) {
                stack.pop();
            } else {
                stack.push(k);
            }
        }
        self.replace(stack)
    }

    /// Rule 3: swaps the letters at `pos`, `pos+1`; requires the generator
    /// indices to differ by more than one.
    pub fn commute_step(&self, pos: usize) -> Result<Self> {
        if pos + 1 >= self.letters.len() {
            return Err(Error::IllegalMove(format!(
                "commute position {pos} out of range"
            )));
        }
        let a = self.letters[pos].unsigned_abs() as i64;
        let b = self.letters[pos + 1].unsigned_abs() as i64;
        if (a - b).abs() <= 1 {
            return Err(Error::IllegalMove(format!(
                "generators {a} and {b} do not commute"
            )));
        }
        let mut letters = self.letters.clone();
        letters.swap(pos, pos + 1);
        Ok(self.replace(letters))
    }

    /// Rule 2: rewrites a positive `(i, i±1, i)` segment starting at `pos`
    /// into `(i±1, i, i±1)`.
    pub fn yang_baxter_step(&self, pos: usize) -> Result<Self> {
        if pos + 3 > self.letters.len() {
            return Err(Error::IllegalMove(format!(
                "yang-baxter position {pos} out of range"
            )));
        }
        let (a, b, c) = (
            self.letters[pos],
            self.letters[pos + 1],
            self.letters[pos + 2],
        );
        if a <= 0 || b <= 0 || c <= 0 || a != c || (a - b).abs() != 1 {
            return Err(Error::IllegalMove(format!(
                "no braid-relation pattern at position {pos}: ({a}, {b}, {c})"
            )));
        }
        let mut letters = self.letters.clone();
        letters[pos] = b;
        letters[pos + 1] = a;
        letters[pos + 2] = b;
        Ok(self.replace(letters))
    }

    /// Rule 5 restricted to rotations: moves the first `k mod l` letters
    /// to the end (conjugation by the rotated prefix).
    pub fn cyclic_rotate(&self, k: usize) -> Self {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        self.replace(letters)
    }

    /// Rule 4: requires the top braided generator `p-1` to occur exactly
    /// once (exponent +1 or -1). Rotates that letter to the final
    /// position, deletes it, and removes the freed strand: both `p` and
    /// `n` decrease by one, so the closure is unchanged as a link.
    pub fn destabilize(&self) -> Result<Self> {
        if self.braided < 2 {
            return Err(Error::IllegalMove(
                "no braided generator to destabilize".into(),
            ));
        }
        let g = self.braided - 1;
        let at = self.positions_of(g);
        if at.len() != 1 {
            return Err(Error::IllegalMove(format!(
                "generator {g} occurs {} times, destabilization needs exactly one",
                at.len()
            )));
        }
        let rotated = self.cyclic_rotate(at[0] + 1);
        debug_assert_eq!(rotated.letters.last().map(|k| k.unsigned_abs() as usize), Some(g));
        let mut letters = rotated.letters;
        letters.pop();
        Ok(BraidWord {
            letters,
            strands: self.strands - 1,
            braided: self.braided - 1,
        })
    }

    /// Decrements `p` while the top braided generator is absent. Letters
    /// and `n` are untouched: the freed strands stay as split unknots in
    /// the trivial tail, so this is pure bookkeeping.
    pub fn trim_prefix(&self) -> Self {
        let mut braided = self.braided;
        while braided > 1 && self.occurrences(braided - 1) == 0 {
            braided -= 1;
        }
        BraidWord {
            letters: self.letters.clone(),
            strands: self.strands,
            braided,
        }
    }

    /// True iff all letters are positive and each generator
    /// `1 .. p-1` occurs at least once.
    pub fn is_strictly_positive(&self) -> bool {
        if self.letters.iter().any(|&k| k < 0) {
            return false;
        }
        let mut seen = vec![false; self.braided];
        for &k in &self.letters {
            seen[k as usize - 1] = true;
        }
        (1..self.braided).all(|g| seen[g - 1])
    }

    /// The complexity `chi = l - p + 1`: word length minus the number of
    /// distinct generators available. Zero exactly at unlink leaves.
    pub fn complexity(&self) -> Result<usize> {
        if !self.is_strictly_positive() {
            return Err(Error::NotStrictlyPositive(format!(
                "complexity is defined for strictly positive words, got {self}"
            )));
        }
        Ok(self.letters.len() + 1 - self.braided)
    }

    /// True iff the word is strictly positive with every generator used
    /// exactly once; the closure is then an unlink of `n - p + 1`
    /// components.
    pub fn is_unlink_leaf(&self) -> bool {
        self.is_strictly_positive() && self.letters.len() + 1 == self.braided
    }

    /// Permutation induced on the strands; `sigma_k` and its inverse both
    /// transpose strands `k`, `k+1`.
    pub fn closure_permutation(&self) -> Permutation {
        let mut perm = Permutation::identity(self.strands);
        for &k in &self.letters {
            let a = k.unsigned_abs() as usize - 1;
            perm.images.swap(a, a + 1);
        }
        perm
    }

    /// Number of components of the closure: cycles of the strand
    /// permutation.
    pub fn closure_components(&self) -> usize {
        self.closure_permutation().cycles()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let mut first = true;
        for k in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{k}")?;
            first = false;
        }
        Ok(())
    }
}

/// A bijection on the strand indices `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Image of strand `i` (1-based on both sides).
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn cycles(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut count = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = self.images[at];
            }
        }
        count
    }
}
