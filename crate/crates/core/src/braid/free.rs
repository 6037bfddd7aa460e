use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::word::BraidWord;
use crate::error::{Error, Result};

/// A word in a free group of finite rank. Letter `i > 0` is the `i`-th
/// generator, `-i` its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeGroupWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeGroupWord {
    /// Builds and freely reduces a word.
    pub fn new(rank: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        let mut raw = Vec::new();
        for l in letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::IndexOutOfRange {
                    what: "free generator",
                    index: l as i64,
                    bound: rank,
                });
            }
            raw.push(l);
        }
        Ok(FreeGroupWord {
            rank,
            letters: raw,
        }
        .free_reduce())
    }

    pub fn identity(rank: usize) -> Self {
        FreeGroupWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank);
        FreeGroupWord {
            rank,
            letters: vec![i as i32],
        }
    }

    pub fn x() -> Self {
        Self::generator(2, 1)
    }

    pub fn y() -> Self {
        Self::generator(2, 2)
    }

    /// `x y x^-1 y^-1` in the free group on `x, y`.
    pub fn commutator_xy() -> Self {
        FreeGroupWord {
            rank: 2,
            letters: vec![1, 2, -1, -2],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The unique freely reduced representative.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeGroupWord {
            rank: self.rank,
            letters: out,
        }
    }

    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.unsigned_abs() as usize == generator)
            .map(|l| l.signum() as i64)
            .sum()
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank <= 2 {
            for &l in &self.letters {
                let c = match l {
                    1 => 'x',
                    2 => 'y',
                    -1 => 'X',
                    _ => 'Y',
                };
                write!(f, "{c}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Debug for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}[{}]", self.rank, self)
    }
}

impl FromStr for FreeGroupWord {
    type Err = Error;

    /// Words over the alphabet `x y X Y`, capitals denoting inverses.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for (i, c) in s.chars().enumerate() {
            let l = match c {
                'x' => 1,
                'y' => 2,
                'X' => -1,
                'Y' => -2,
                c if c.is_whitespace() => continue,
                other => {
                    return Err(Error::parse(
                        i + 1,
                        format!("expected one of x y X Y, found {other:?}"),
                    ))
                }
            };
            letters.push(l);
        }
        FreeGroupWord::new(2, letters)
    }
}

/// A group whose elements can be multiplied and inverted in place of the
/// generators of a free group.
pub trait GroupElement: Clone {
    /// The identity of the group `self` lives in.
    fn one_like(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;

    fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut out = self.one_like();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }
}

impl GroupElement for FreeGroupWord {
    fn one_like(&self) -> Self {
        FreeGroupWord::identity(self.rank)
    }

    fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "free group rank mismatch");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeGroupWord {
            rank: self.rank,
            letters,
        }
        .free_reduce()
    }

    fn inv(&self) -> Self {
        FreeGroupWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }
}

impl GroupElement for BraidWord {
    fn one_like(&self) -> Self {
        BraidWord::identity(self.strands())
    }

    fn mul(&self, other: &Self) -> Self {
        self.concat(other).expect("braid strand count mismatch")
    }

    fn inv(&self) -> Self {
        self.inverse()
    }
}

/// Image of `word` under the homomorphism sending generator `i` to
/// `images[i - 1]`.
pub fn substitute<G: GroupElement>(word: &FreeGroupWord, images: &[G]) -> Result<G> {
    if images.len() != word.rank() {
        return Err(Error::ArityMismatch {
            expected: word.rank(),
            found: images.len(),
        });
    }
    let inverses: Vec<G> = images.iter().map(G::inv).collect();
    let mut out = images[0].one_like();
    for &l in word.letters() {
        let i = l.unsigned_abs() as usize - 1;
        out = if l > 0 {
            out.mul(&images[i])
        } else {
            out.mul(&inverses[i])
        };
    }
    Ok(out)
}

/// `f(a, b)` for a word `f` in `x, y`.
pub fn fg_substitute<G: GroupElement>(f: &FreeGroupWord, a: &G, b: &G) -> Result<G> {
    substitute(f, &[a.clone(), b.clone()])
}
