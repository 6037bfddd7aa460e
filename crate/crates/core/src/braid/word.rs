use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// Letter `i > 0` is the generator crossing positions `i` and `i + 1`,
/// letter `-i` its inverse. Words read left to right, the first letter acting
/// first. Stored words are always freely reduced.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

fn push_reduced(out: &mut Vec<i32>, letter: i32) {
    if out.last() == Some(&-letter) {
        out.pop();
    } else {
        out.push(letter);
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        let mut out = Vec::new();
        for letter in letters {
            let i = letter.unsigned_abs() as usize;
            if letter == 0 || i >= strands {
                return Err(Error::IndexOutOfRange {
                    what: "generator",
                    index: letter as i64,
                    bound: strands.saturating_sub(1),
                });
            }
            push_reduced(&mut out, letter);
        }
        Ok(BraidWord {
            strands,
            letters: out,
        })
    }

    /// Skips validation; letters must already be in range.
    pub(crate) fn from_letters_unchecked(strands: usize, letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out = Vec::new();
        for letter in letters {
            debug_assert!(letter != 0 && (letter.unsigned_abs() as usize) < strands);
            push_reduced(&mut out, letter);
        }
        BraidWord {
            strands,
            letters: out,
        }
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Parses the whitespace-separated signed-integer text form.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut col = 1;
        for tok in text.split(' ') {
            for sub in tok.split_whitespace() {
                let v: i32 = sub
                    .parse()
                    .map_err(|_| Error::parse(col, format!("expected a signed integer, found {sub:?}")))?;
                let i = v.unsigned_abs() as usize;
                if v == 0 || i >= strands {
                    return Err(Error::parse(
                        col,
                        format!("generator {v} out of range for {strands} strands"),
                    ));
                }
                letters.push(v);
            }
            col += tok.chars().count() + 1;
        }
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    fn check_same(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// `self` followed by `other`, freely reduced.
    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        self.check_same(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = BraidWord::identity(self.strands);
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base).expect("same strand count");
        }
        out
    }

    /// Image in the symmetric group: entry `p` is where the strand starting
    /// at position `p` ends.
    pub fn perm_of(&self) -> Permutation {
        // pos_of[s] = current position of strand s; at_pos[p] = strand at p
        let mut at_pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at_pos.swap(i, i + 1);
        }
        let mut end = vec![0; self.strands];
        for (p, &s) in at_pos.iter().enumerate() {
            end[s] = p;
        }
        Permutation::from_zero_based(end)
    }

    pub fn is_pure(&self) -> bool {
        self.perm_of().is_identity()
    }

    /// Embeds the word into `strands` strands with every index shifted by
    /// `offset`.
    pub fn embed(&self, offset: usize, strands: usize) -> Result<Self> {
        if offset + self.strands > strands {
            return Err(Error::StrandMismatch {
                left: offset + self.strands,
                right: strands,
            });
        }
        Ok(BraidWord {
            strands,
            letters: self
                .letters
                .iter()
                .map(|&l| l.signum() * (l.unsigned_abs() as i32 + offset as i32))
                .collect(),
        })
    }

    /// Replaces the strand that starts at position `k` by `m` parallel
    /// strands. Every crossing involving it becomes a block crossing.
    pub fn cable(&self, k: usize, m: usize) -> Result<Self> {
        let n = self.strands;
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange {
                what: "cabled strand",
                index: k as i64,
                bound: n,
            });
        }
        if m == 0 {
            return Err(Error::IndexOutOfRange {
                what: "cable width",
                index: 0,
                bound: usize::MAX,
            });
        }
        let width = m as i32;
        let mut thick = k as i32;
        let mut out = Vec::with_capacity(self.letters.len() * m);
        for &l in &self.letters {
            let i = l.abs();
            let s = l.signum();
            if i == thick {
                // cable on the left crosses the strand on its right
                for j in (thick..thick + width).rev() {
                    push_reduced(&mut out, s * j);
                }
                thick += 1;
            } else if i + 1 == thick {
                // strand on the left crosses the cable
                for j in i..i + width {
                    push_reduced(&mut out, s * j);
                }
                thick -= 1;
            } else if i < thick {
                push_reduced(&mut out, l);
            } else {
                push_reduced(&mut out, s * (i + width - 1));
            }
        }
        Ok(BraidWord {
            strands: n + m - 1,
            letters: out,
        })
    }

    /// Removes the strand starting at position `d` together with every
    /// crossing it takes part in.
    pub fn delete_strand(&self, d: usize) -> Result<Self> {
        let n = self.strands;
        if d == 0 || d > n {
            return Err(Error::IndexOutOfRange {
                what: "deleted strand",
                index: d as i64,
                bound: n,
            });
        }
        let mut cur = d as i32;
        let mut out = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let i = l.abs();
            if i == cur {
                cur += 1;
            } else if i + 1 == cur {
                cur -= 1;
            } else if i < cur {
                push_reduced(&mut out, l);
            } else {
                push_reduced(&mut out, l.signum() * (i - 1));
            }
        }
        Ok(BraidWord {
            strands: n - 1,
            letters: out,
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{}]", self.strands, self)
    }
}

/// The pure braid generator linking strands `i < j`:
/// `(b_{j-1} ... b_{i+1}) b_i^2 (b_{j-1} ... b_{i+1})^{-1}`.
pub fn pure_generator(n: usize, i: usize, j: usize) -> Result<BraidWord> {
    if i == 0 || i >= j || j > n {
        return Err(Error::IndexOutOfRange {
            what: "pure generator",
            index: if i == 0 || i >= j { i as i64 } else { j as i64 },
            bound: n,
        });
    }
    let conj: Vec<i32> = ((i + 1)..j).rev().map(|g| g as i32).collect();
    let letters = conj
        .iter()
        .copied()
        .chain([i as i32, i as i32])
        .chain(conj.iter().rev().map(|&g| -g));
    BraidWord::new(n, letters)
}

/// `(b_1 ... b_{m-1})^m`, the full twist on `m` strands.
pub fn full_twist(m: usize) -> Result<BraidWord> {
    if m == 0 {
        return Err(Error::IndexOutOfRange {
            what: "full twist width",
            index: 0,
            bound: usize::MAX,
        });
    }
    let row: Vec<i32> = (1..m as i32).collect();
    BraidWord::new(m, std::iter::repeat_n(row, m).flatten())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.iter().copied()).unwrap()
    }

    #[test]
    fn concat_examples() {
        assert!(w(2, &[1]).concat(&w(2, &[-1])).unwrap().is_empty());
        assert_eq!(w(3, &[1]).concat(&w(3, &[2])).unwrap().letters(), &[1, 2]);
        assert!(w(3, &[1, 2]).concat(&w(3, &[-2, -1])).unwrap().is_empty());
        assert!(matches!(
            w(2, &[1]).concat(&w(3, &[1])),
            Err(Error::StrandMismatch { .. })
        ));
    }

    #[test]
    fn perm_examples() {
        assert!(w(3, &[]).perm_of().is_identity());
        assert!(w(3, &[1, -1]).perm_of().is_identity());
        assert_eq!(w(3, &[1, 2]).perm_of().one_line(), vec![3, 1, 2]);
    }

    #[test]
    fn invalid_letters_rejected() {
        assert!(BraidWord::new(3, [3]).is_err());
        assert!(BraidWord::new(3, [0]).is_err());
        assert!(BraidWord::new(1, [1]).is_err());
        assert!(BraidWord::parse(3, "1 x").is_err());
        match BraidWord::parse(3, "1 2 5") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn pure_generator_examples() {
        assert_eq!(pure_generator(2, 1, 2).unwrap().letters(), &[1, 1]);
        assert_eq!(pure_generator(3, 2, 3).unwrap().letters(), &[2, 2]);
        assert_eq!(pure_generator(3, 1, 3).unwrap().letters(), &[2, 1, 1, -2]);
        assert!(pure_generator(3, 2, 2).is_err());
        assert!(pure_generator(3, 1, 4).is_err());
    }

    /// Deleting strands from x_{ij}: it links exactly strands i and j.
    #[test]
    fn pure_generators_link_only_their_strands() {
        for n in 2..=6 {
            for i in 1..n {
                for j in i + 1..=n {
                    let x = pure_generator(n, i, j).unwrap();
                    assert!(x.is_pure());
                    for d in 1..=n {
                        let rest = x.delete_strand(d).unwrap();
                        if d == i || d == j {
                            assert!(rest.is_empty(), "x{i}{j} minus {d}");
                        } else {
                            let (a, b) = (i - (d < i) as usize, j - (d < j) as usize);
                            assert_eq!(rest, pure_generator(n - 1, a, b).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pure_generator_example_deletions() {
        let x23 = pure_generator(3, 2, 3).unwrap();
        assert_eq!(x23.delete_strand(1).unwrap(), full_twist(2).unwrap());
        let x13 = pure_generator(3, 1, 3).unwrap();
        assert_eq!(x13.delete_strand(2).unwrap().letters(), &[1, 1]);
        assert!(x13.delete_strand(3).unwrap().is_empty());
    }

    #[test]
    fn full_twist_examples() {
        assert!(full_twist(1).unwrap().is_empty());
        assert_eq!(full_twist(2).unwrap().letters(), &[1, 1]);
        assert_eq!(full_twist(3).unwrap().letters(), &[1, 2, 1, 2, 1, 2]);
        assert!(full_twist(4).unwrap().is_pure());
        assert!(full_twist(0).is_err());
    }

    #[test]
    fn cable_examples() {
        assert!(w(1, &[]).cable(1, 3).unwrap().is_empty());
        assert_eq!(w(1, &[]).cable(1, 3).unwrap().strands(), 3);

        let c = w(2, &[1]).cable(2, 2).unwrap();
        assert_eq!(c.perm_of().one_line(), vec![3, 1, 2]);
        assert_eq!(c.delete_strand(2).unwrap(), w(2, &[1]));
        assert_eq!(c.delete_strand(3).unwrap(), w(2, &[1]));

        let c = w(2, &[1, 1]).cable(1, 2).unwrap();
        assert!(c.is_pure());
        // pairs (1,3) and (2,3) each see a full twist, the cable pair none
        assert_eq!(c.delete_strand(1).unwrap(), full_twist(2).unwrap());
        assert_eq!(c.delete_strand(2).unwrap(), full_twist(2).unwrap());
        assert!(c.delete_strand(3).unwrap().is_empty());
    }

    #[test]
    fn cable_perm_is_block_perm() {
        let a = w(3, &[1, -2, 1]);
        let c = a.cable(2, 3).unwrap();
        let p = a.perm_of();
        // strand starting inside the block follows strand 2 of `a`
        let q = c.perm_of();
        let block_start = |s: usize| if s < 1 { s } else { s + 2 };
        let target_of_thick = p.apply(1);
        for j in 0..3 {
            assert_eq!(q.apply(1 + j), target_of_thick + j);
        }
        for s in [0usize, 2] {
            let t = p.apply(s);
            let expected = if t < target_of_thick { t } else { t + 2 };
            assert_eq!(q.apply(block_start(s)), expected);
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        let a = BraidWord::parse(4, "1 -2  3").unwrap();
        assert_eq!(a.to_string(), "1 -2 3");
        assert_eq!(BraidWord::parse(4, &a.to_string()).unwrap(), a);
        assert!(BraidWord::parse(3, "").unwrap().is_empty());
    }
}
