//! Ribbon braids: a braid together with an integer twist on every strand.
//!
//! Twists are indexed by the position a strand occupies at the source end
//! of the braid. Under composition the twists of the second factor are
//! pulled back along the permutation of the first, which turns the relation
//! `b_i t_{i+1} = t_i b_i` into a literal identity of normal forms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::{braid_equal, BraidWord, GroupElement};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RibbonBraid {
    braid: BraidWord,
    twists: Vec<i64>,
}

impl RibbonBraid {
    pub fn new(braid: BraidWord, twists: Vec<i64>) -> Result<Self> {
        if twists.len() != braid.strands() {
            return Err(Error::StrandMismatch {
                left: braid.strands(),
                right: twists.len(),
            });
        }
        Ok(RibbonBraid { braid, twists })
    }

    pub fn identity(n: usize) -> Self {
        RibbonBraid {
            braid: BraidWord::identity(n),
            twists: vec![0; n],
        }
    }

    pub fn from_braid(braid: BraidWord) -> Self {
        let n = braid.strands();
        RibbonBraid {
            braid,
            twists: vec![0; n],
        }
    }

    pub fn pure_twists(twists: Vec<i64>) -> Self {
        RibbonBraid {
            braid: BraidWord::identity(twists.len()),
            twists,
        }
    }

    /// The generator `b_i` (1-based).
    pub fn beta(n: usize, i: usize) -> Result<Self> {
        Ok(Self::from_braid(BraidWord::new(n, [i as i32])?))
    }

    /// The generator `t_j`: one twist on the strand at position `j`.
    pub fn tau(n: usize, j: usize) -> Result<Self> {
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange {
                what: "twisted strand",
                index: j as i64,
                bound: n,
            });
        }
        let mut twists = vec![0; n];
        twists[j - 1] = 1;
        Ok(Self::pure_twists(twists))
    }

    pub fn strands(&self) -> usize {
        self.braid.strands()
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    /// Twists by source position.
    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn is_identity(&self) -> bool {
        self.braid.is_empty() && self.twists.iter().all(|&t| t == 0)
    }

    pub fn perm_of(&self) -> Permutation {
        self.braid.perm_of()
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &RibbonBraid) -> Result<Self> {
        let braid = self.braid.concat(&other.braid)?;
        let perm = self.braid.perm_of();
        let twists = (0..self.strands())
            .map(|i| self.twists[i] + other.twists[perm.apply(i)])
            .collect();
        Ok(RibbonBraid { braid, twists })
    }

    pub fn inverse(&self) -> Self {
        let perm = self.braid.perm_of();
        let mut twists = vec![0; self.strands()];
        for i in 0..self.strands() {
            twists[perm.apply(i)] = -self.twists[i];
        }
        RibbonBraid {
            braid: self.braid.inverse(),
            twists,
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        GroupElement::pow(self, e)
    }

    /// Removes the strand starting at position `d`, with its twist.
    pub fn delete_strand(&self, d: usize) -> Result<Self> {
        let braid = self.braid.delete_strand(d)?;
        let mut twists = self.twists.clone();
        twists.remove(d - 1);
        Ok(RibbonBraid { braid, twists })
    }

    /// Parses `"w | t1,...,tn"`; the strand count is the length of the twist
    /// list.
    pub fn parse(text: &str) -> Result<Self> {
        let (word, twists) = text
            .split_once('|')
            .ok_or_else(|| Error::parse(1, "expected `word | twists`"))?;
        let offset = word.chars().count() + 2;
        let mut tw = Vec::new();
        let mut col = offset;
        for tok in twists.split(',') {
            let t = tok.trim();
            if !t.is_empty() || twists.contains(',') {
                let v: i64 = t
                    .parse()
                    .map_err(|_| Error::parse(col, format!("expected an integer twist, found {t:?}")))?;
                tw.push(v);
            }
            col += tok.chars().count() + 1;
        }
        let braid = BraidWord::parse(tw.len(), word)?;
        RibbonBraid::new(braid, tw)
    }
}

/// Equality in `B(n) x| Z^n`.
pub fn ribbon_equal(a: &RibbonBraid, b: &RibbonBraid) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(a.twists == b.twists && braid_equal(&a.braid, &b.braid)?)
}

pub fn ribbon_compose(a: &RibbonBraid, b: &RibbonBraid) -> Result<RibbonBraid> {
    a.compose(b)
}

pub fn ribbon_inverse(a: &RibbonBraid) -> RibbonBraid {
    a.inverse()
}

pub fn twists_of(a: &RibbonBraid) -> Vec<i64> {
    a.twists.clone()
}

impl GroupElement for RibbonBraid {
    fn one_like(&self) -> Self {
        RibbonBraid::identity(self.strands())
    }

    fn mul(&self, other: &Self) -> Self {
        self.compose(other).expect("ribbon strand count mismatch")
    }

    fn inv(&self) -> Self {
        self.inverse()
    }
}

impl fmt::Display for RibbonBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tw: Vec<String> = self.twists.iter().map(|t| t.to_string()).collect();
        if self.braid.is_empty() {
            write!(f, "| {}", tw.join(","))
        } else {
            write!(f, "{} | {}", self.braid, tw.join(","))
        }
    }
}

impl fmt::Debug for RibbonBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RB{}[{}]", self.strands(), self)
    }
}

impl FromStr for RibbonBraid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RibbonBraid::parse(s)
    }
}
