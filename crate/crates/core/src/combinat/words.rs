//! Permutations, packed words, standardization and packing.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Letter = u32;

/// Renders a word as a comma-free digit string when every letter is a single
/// digit (lengths up to 9), comma-separated otherwise.
pub fn format_word(letters: &[Letter]) -> String {
    if letters.len() <= 9 && letters.iter().all(|&a| a <= 9) {
        letters.iter().map(|a| char::from(b'0' + *a as u8)).collect()
    } else {
        letters
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Inverse of [`format_word`]. `""`, `"ε"` and `"∅"` denote the empty word.
pub fn parse_word(s: &str) -> Result<Vec<Letter>> {
    let s = s.trim();
    if s.is_empty() || s == "ε" || s == "∅" {
        return Ok(Vec::new());
    }
    let letters = if s.contains(',') {
        s.split(',')
            .map(|p| p.trim().parse::<Letter>().map_err(|e| Error::Parse(format!("{p:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("not a digit: {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?
    };
    if letters.contains(&0) {
        return Err(Error::Parse("letters must be positive".into()));
    }
    Ok(letters)
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation(Vec<Letter>);

impl Permutation {
    pub fn new(word: Vec<Letter>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &a in &word {
            let a = a as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Parse(format!(
                    "{} is not a permutation",
                    format_word(&word)
                )));
            }
            seen[a] = true;
        }
        Ok(Self(word))
    }

    pub(crate) fn from_vec_unchecked(word: Vec<Letter>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Self(word)
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as Letter).collect())
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_word(self) -> Vec<Letter> {
        self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &a) in self.0.iter().enumerate() {
            inv[a as usize - 1] = i as Letter + 1;
        }
        Self(inv)
    }

    /// The permutation with its largest letter erased.
    pub fn erase_max(&self) -> Self {
        let n = self.len() as Letter;
        Self(self.0.iter().copied().filter(|&a| a != n).collect())
    }

    /// Sum of the positions `i` (1-based) with `p_i > p_(i+1)`.
    pub fn maj(&self) -> usize {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .sum()
    }

    /// Major index of the inverse.
    pub fn imaj(&self) -> usize {
        // i is a descent of the inverse iff i+1 appears to the left of i.
        let mut pos = vec![0usize; self.len() + 1];
        for (i, &a) in self.0.iter().enumerate() {
            pos[a as usize] = i;
        }
        (1..self.len()).filter(|&i| pos[i + 1] < pos[i]).sum()
    }

    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count())
            .sum()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.0))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_word(s)?)
    }
}

/// A word whose set of letters is exactly `{1..m}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PackedWord(Vec<Letter>);

impl PackedWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if pack(&letters).0 != letters {
            return Err(Error::Parse(format!(
                "{} is not a packed word",
                format_word(&letters)
            )));
        }
        Ok(Self(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert_eq!(pack(&letters).0, letters);
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter, 0 for the empty word.
    pub fn max_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Erases every occurrence of the maximal letter; the result is packed.
    pub fn erase_max(&self) -> Self {
        let m = self.max_letter();
        Self(self.0.iter().copied().filter(|&a| a != m).collect())
    }
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.0))
    }
}

impl fmt::Debug for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PackedWord({self})")
    }
}

impl FromStr for PackedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_word(s)?)
    }
}

macro_rules! serde_as_string {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(&self.to_string())
            }
        }
        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}
serde_as_string!(Permutation);
serde_as_string!(PackedWord);

/// Relabels `word` by `1..n`: smallest letter first, equal letters left to right.
pub fn standardize(word: &[Letter]) -> Permutation {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| (word[i], i));
    let mut out = vec![0; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as Letter + 1;
    }
    Permutation(out)
}

/// Order-preserving relabeling of the occurring letters onto `{1..m}`.
pub fn pack(word: &[Letter]) -> PackedWord {
    let mut distinct: Vec<Letter> = word.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    PackedWord(
        word.iter()
            .map(|a| distinct.binary_search(a).expect("letter present") as Letter + 1)
            .collect(),
    )
}
