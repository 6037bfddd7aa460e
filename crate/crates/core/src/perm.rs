//! Permutations in one-line notation.
//!
//! A permutation of length `n` is stored 0-based; the public constructors and
//! `Display` use the usual 1-based one-line form, so `[3, 1, 2]` sends
//! 1 to 3, 2 to 1 and 3 to 2.
//!
//! Two readings of the same array occur in this crate. For a braid, entry `p`
//! is the final position of the strand that starts at position `p`. For an
//! object of the colored operads, entry `p` is the label sitting at position
//! `p`. Composition is always written left to right: `a.then(&b)` applies `a`
//! first.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// Builds a permutation from its 1-based one-line form.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &v in values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{values:?}")));
            }
            seen[v - 1] = true;
            map.push(v - 1);
        }
        Ok(Permutation { map })
    }

    pub(crate) fn from_zero_based(map: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = map.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { map }
    }

    /// The adjacent transposition swapping positions `i` and `i + 1` (1-based).
    pub fn transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                what: "transposition",
                index: i as i64,
                bound: n.saturating_sub(1),
            });
        }
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(i - 1, i);
        Ok(Permutation { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// 0-based image of the 0-based point `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.map[p]
    }

    pub fn as_zero_based(&self) -> &[usize] {
        &self.map
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|v| v + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "permutation length mismatch");
        Permutation {
            map: self.map.iter().map(|&v| other.map[v]).collect(),
        }
    }

    /// Operadic composition in the symmetric-group operad.
    ///
    /// Substitutes `inner` for the value `k` of `self`: values above `k`
    /// shift up by `inner.len() - 1` and `k` expands to the block
    /// `k..k + inner.len() - 1` ordered by `inner`.
    pub fn compose_at(&self, k: usize, inner: &Permutation) -> Result<Self> {
        let m = self.len();
        if k == 0 || k > m {
            return Err(Error::IndexOutOfRange {
                what: "composition slot",
                index: k as i64,
                bound: m,
            });
        }
        let n = inner.len();
        let k0 = k - 1;
        let mut map = Vec::with_capacity(m + n - 1);
        for &v in &self.map {
            if v == k0 {
                map.extend(inner.map.iter().map(|&w| w + k0));
            } else if v > k0 {
                map.push(v + n - 1);
            } else {
                map.push(v);
            }
        }
        Ok(Permutation { map })
    }

    /// The relabelling of `m + n - 1` labels induced by relabelling the outer
    /// labels by `outer` and the labels of the inserted block by `inner`,
    /// where the block replaces label `k`.
    ///
    /// This is the permutation `phi` in the equivariance law
    /// `(s . a) o_{s(k)} (t . b) = phi . (a o_k b)`.
    pub fn block_relabel(outer: &Permutation, k: usize, inner: &Permutation) -> Result<Self> {
        let m = outer.len();
        if k == 0 || k > m {
            return Err(Error::IndexOutOfRange {
                what: "composition slot",
                index: k as i64,
                bound: m,
            });
        }
        let n = inner.len();
        let k0 = k - 1;
        let sk = outer.map[k0];
        let adjust = |v: usize| if v < sk { v } else { v + n - 1 };
        let mut map = Vec::with_capacity(m + n - 1);
        for c in 0..m {
            if c == k0 {
                map.extend(inner.map.iter().map(|&w| sk + w));
            } else {
                map.push(adjust(outer.map[c]));
            }
        }
        Ok(Permutation { map })
    }

    /// Removes the value `v` (1-based) from the one-line word and closes the
    /// gap. This is the effect on objects of filling in label `v`.
    pub fn delete_value(&self, v: usize) -> Result<Self> {
        if v == 0 || v > self.len() {
            return Err(Error::IndexOutOfRange {
                what: "label",
                index: v as i64,
                bound: self.len(),
            });
        }
        let v0 = v - 1;
        Ok(Permutation {
            map: self
                .map
                .iter()
                .filter(|&&w| w != v0)
                .map(|&w| if w > v0 { w - 1 } else { w })
                .collect(),
        })
    }

    /// Sign-free count of inversions.
    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.map[i] > self.map[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.map {
                write!(f, "{}", v + 1)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.map.iter().map(|v| (v + 1).to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts either packed digits (`"1423"`) or separated values
    /// (`"1 4 2 3"`, `"1,4,2,3"`).
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let trimmed = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(trimmed);
        let separated = trimmed.contains(|c: char| c.is_whitespace() || c == ',');
        let mut values = Vec::new();
        if separated {
            let mut col = 1;
            for tok in trimmed.split(|c: char| c.is_whitespace() || c == ',') {
                if !tok.is_empty() {
                    let v = tok
                        .parse::<usize>()
                        .map_err(|_| Error::parse(col, format!("expected a positive integer, found {tok:?}")))?;
                    values.push(v);
                }
                col += tok.chars().count() + 1;
            }
        } else {
            for (i, c) in trimmed.chars().enumerate() {
                let v = c
                    .to_digit(10)
                    .ok_or_else(|| Error::parse(i + 1, format!("expected a digit, found {c:?}")))?;
                values.push(v as usize);
            }
        }
        Permutation::from_one_line(&values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn sigma_composition_reference_value() {
        assert_eq!(p("132").compose_at(2, &p("12")).unwrap(), p("1423"));
    }

    #[test]
    fn identity_composes_to_identity() {
        for m in 1..5 {
            for n in 1..5 {
                for k in 1..=m {
                    let c = Permutation::identity(m)
                        .compose_at(k, &Permutation::identity(n))
                        .unwrap();
                    assert!(c.is_identity());
                    assert_eq!(c.len(), m + n - 1);
                }
            }
        }
    }

    #[test]
    fn swap_into_swap() {
        assert_eq!(p("21").compose_at(1, &p("21")).unwrap(), p("321"));
    }

    /// The position-substitution reading of "placing in position k" gives a
    /// different value on the reference example; only value substitution
    /// reproduces it.
    #[test]
    fn value_substitution_is_the_convention_that_matches() {
        let outer = p("132");
        let inner = p("12");
        let by_position = Permutation::block_relabel(&outer, 2, &inner).unwrap();
        assert_eq!(by_position, p("1342"));
        assert_ne!(by_position, p("1423"));
        assert_eq!(outer.compose_at(2, &inner).unwrap(), p("1423"));
    }

    #[test]
    fn out_of_range_slot() {
        assert!(p("12").compose_at(3, &p("1")).is_err());
        assert!(p("12").compose_at(0, &p("1")).is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("1 4 2 3"), p("1423"));
        assert_eq!(p("[1,4,2,3]"), p("1423"));
        assert!("112".parse::<Permutation>().is_err());
        assert!("1a".parse::<Permutation>().is_err());
        assert_eq!(p("10 1 2 3 4 5 6 7 8 9").to_string(), "10 1 2 3 4 5 6 7 8 9");
    }

    #[test]
    fn then_and_inverse() {
        let a = p("312");
        assert!(a.then(&a.inverse()).is_identity());
        // strand starting at 1 goes to 3, then 3 goes to 2
        assert_eq!(a.then(&a).one_line(), vec![2, 3, 1]);
    }

    #[test]
    fn delete_value_closes_gap() {
        assert_eq!(p("2413").delete_value(2).unwrap(), p("312"));
    }
}
