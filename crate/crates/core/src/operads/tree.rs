//! Parenthesized words: binary planar trees with labelled leaves, optionally
//! with nullary `*` leaves.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParenTree {
    Leaf(usize),
    Star,
    Node(Box<ParenTree>, Box<ParenTree>),
}

/// Address of a vertex: the sequence of turns taken from the root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

pub type NodePath = Vec<Side>;

impl ParenTree {
    pub fn leaf(label: usize) -> Self {
        ParenTree::Leaf(label)
    }

    pub fn node(left: ParenTree, right: ParenTree) -> Self {
        ParenTree::Node(Box::new(left), Box::new(right))
    }

    /// `(12)`, the generating binary operation.
    pub fn binary() -> Self {
        Self::node(Self::leaf(1), Self::leaf(2))
    }

    /// The right comb `1(2(3(...n)))` on the given labels.
    pub fn right_comb(labels: &[usize]) -> Self {
        match labels {
            [] => ParenTree::Star,
            [l] => ParenTree::Leaf(*l),
            [l, rest @ ..] => Self::node(ParenTree::Leaf(*l), Self::right_comb(rest)),
        }
    }

    /// The left comb `((12)3)...n`.
    pub fn left_comb(labels: &[usize]) -> Self {
        match labels {
            [] => ParenTree::Star,
            [l] => ParenTree::Leaf(*l),
            [init @ .., l] => Self::node(Self::left_comb(init), ParenTree::Leaf(*l)),
        }
    }

    /// Numbered leaves.
    pub fn arity(&self) -> usize {
        match self {
            ParenTree::Leaf(_) => 1,
            ParenTree::Star => 0,
            ParenTree::Node(a, b) => a.arity() + b.arity(),
        }
    }

    pub fn has_star(&self) -> bool {
        match self {
            ParenTree::Leaf(_) => false,
            ParenTree::Star => true,
            ParenTree::Node(a, b) => a.has_star() || b.has_star(),
        }
    }

    /// Labels of the numbered leaves, left to right.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut Vec<usize>) {
        match self {
            ParenTree::Leaf(l) => out.push(*l),
            ParenTree::Star => {}
            ParenTree::Node(a, b) => {
                a.collect_labels(out);
                b.collect_labels(out);
            }
        }
    }

    /// Checks that the labels are exactly `1..=arity`.
    pub fn validate(&self) -> Result<()> {
        Permutation::from_one_line(&self.labels()).map(|_| ())
    }

    /// The leaf word as a permutation (forgets the parenthesization and any
    /// `*` leaves).
    pub fn forget(&self) -> Result<Permutation> {
        Permutation::from_one_line(&self.labels())
    }

    pub fn map_labels(&self, f: &impl Fn(usize) -> usize) -> Self {
        match self {
            ParenTree::Leaf(l) => ParenTree::Leaf(f(*l)),
            ParenTree::Star => ParenTree::Star,
            ParenTree::Node(a, b) => Self::node(a.map_labels(f), b.map_labels(f)),
        }
    }

    /// Relabels leaf `l` as `s(l)`.
    pub fn act(&self, s: &Permutation) -> Self {
        self.map_labels(&|l| s.apply(l - 1) + 1)
    }

    /// The same shape with labels `1..n` in left-to-right order.
    pub fn standardized(&self) -> Self {
        let mut next = 0;
        self.standardize_from(&mut next)
    }

    fn standardize_from(&self, next: &mut usize) -> Self {
        match self {
            ParenTree::Leaf(_) => {
                *next += 1;
                ParenTree::Leaf(*next)
            }
            ParenTree::Star => ParenTree::Star,
            ParenTree::Node(a, b) => {
                let a = a.standardize_from(next);
                let b = b.standardize_from(next);
                Self::node(a, b)
            }
        }
    }

    /// Grafts `inner` at the leaf labelled `k` and relabels.
    pub fn compose_at(&self, k: usize, inner: &ParenTree) -> Result<Self> {
        let n = self.arity();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange {
                what: "composition slot",
                index: k as i64,
                bound: n,
            });
        }
        let m = inner.arity();
        let shifted = inner.map_labels(&|l| l + k - 1);
        Ok(self.graft(k, m, &shifted))
    }

    fn graft(&self, k: usize, m: usize, shifted: &ParenTree) -> Self {
        match self {
            ParenTree::Leaf(l) if *l == k => shifted.clone(),
            ParenTree::Leaf(l) if *l > k => ParenTree::Leaf(l + m - 1),
            ParenTree::Leaf(l) => ParenTree::Leaf(*l),
            ParenTree::Star => ParenTree::Star,
            ParenTree::Node(a, b) => Self::node(a.graft(k, m, shifted), b.graft(k, m, shifted)),
        }
    }

    /// Replaces leaf `k` by `*` and closes the gap in the labels.
    pub fn star_out(&self, k: usize) -> Result<Self> {
        let n = self.arity();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange {
                what: "label",
                index: k as i64,
                bound: n,
            });
        }
        Ok(self.graft(k, 0, &ParenTree::Star))
    }

    /// Prunes `*` leaves; `None` for a tree without numbered leaves.
    pub fn prune(&self) -> Option<Self> {
        match self {
            ParenTree::Leaf(l) => Some(ParenTree::Leaf(*l)),
            ParenTree::Star => None,
            ParenTree::Node(a, b) => match (a.prune(), b.prune()) {
                (Some(a), Some(b)) => Some(Self::node(a, b)),
                (Some(t), None) | (None, Some(t)) => Some(t),
                (None, None) => None,
            },
        }
    }

    pub fn subtree(&self, path: &[Side]) -> Option<&ParenTree> {
        match (path.split_first(), self) {
            (None, t) => Some(t),
            (Some((Side::Left, rest)), ParenTree::Node(a, _)) => a.subtree(rest),
            (Some((Side::Right, rest)), ParenTree::Node(_, b)) => b.subtree(rest),
            _ => None,
        }
    }

    /// Applies `f` to the subtree at `path`.
    pub fn replace_at(&self, path: &[Side], f: &impl Fn(&ParenTree) -> Option<ParenTree>) -> Option<Self> {
        match (path.split_first(), self) {
            (None, t) => f(t),
            (Some((Side::Left, rest)), ParenTree::Node(a, b)) => {
                Some(Self::node(a.replace_at(rest, f)?, (**b).clone()))
            }
            (Some((Side::Right, rest)), ParenTree::Node(a, b)) => {
                Some(Self::node((**a).clone(), b.replace_at(rest, f)?))
            }
            _ => None,
        }
    }

    /// Leaf positions (0-based, numbered leaves only) spanned by the vertex
    /// at `path`, as `start..end`.
    pub fn span(&self, path: &[Side]) -> Option<std::ops::Range<usize>> {
        let mut start = 0;
        let mut t = self;
        for side in path {
            match t {
                ParenTree::Node(a, b) => match side {
                    Side::Left => t = a,
                    Side::Right => {
                        start += a.arity();
                        t = b;
                    }
                },
                _ => return None,
            }
        }
        Some(start..start + t.arity())
    }

    /// `((A B) C) -> (A (B C))` at `path`.
    pub fn rotate_right(&self, path: &[Side]) -> Option<Self> {
        self.replace_at(path, &|t| match t {
            ParenTree::Node(ab, c) => match &**ab {
                ParenTree::Node(a, b) => Some(Self::node(
                    (**a).clone(),
                    Self::node((**b).clone(), (**c).clone()),
                )),
                _ => None,
            },
            _ => None,
        })
    }

    /// `(A (B C)) -> ((A B) C)` at `path`.
    pub fn rotate_left(&self, path: &[Side]) -> Option<Self> {
        self.replace_at(path, &|t| match t {
            ParenTree::Node(a, bc) => match &**bc {
                ParenTree::Node(b, c) => Some(Self::node(
                    Self::node((**a).clone(), (**b).clone()),
                    (**c).clone(),
                )),
                _ => None,
            },
            _ => None,
        })
    }

    /// `(A B) -> (B A)` at `path`.
    pub fn swap_at(&self, path: &[Side]) -> Option<Self> {
        self.replace_at(path, &|t| match t {
            ParenTree::Node(a, b) => Some(Self::node((**b).clone(), (**a).clone())),
            _ => None,
        })
    }

    /// Every binary tree with the given leaf word.
    pub fn all_bracketings(labels: &[usize]) -> Vec<ParenTree> {
        if labels.len() == 1 {
            return vec![ParenTree::Leaf(labels[0])];
        }
        let mut out = Vec::new();
        for split in 1..labels.len() {
            for a in Self::all_bracketings(&labels[..split]) {
                for b in Self::all_bracketings(&labels[split..]) {
                    out.push(Self::node(a.clone(), b));
                }
            }
        }
        out
    }

    fn max_label(&self) -> usize {
        self.labels().into_iter().max().unwrap_or(0)
    }
}

/// Drops the `*` leaves and the parentheses they leave behind.
pub fn star_forget(tree: &ParenTree) -> Result<ParenTree> {
    tree.prune().ok_or(Error::AllStarTree)
}

pub fn magma_compose(outer: &ParenTree, k: usize, inner: &ParenTree) -> Result<ParenTree> {
    outer.compose_at(k, inner)
}

impl fmt::Display for ParenTree {
    /// `{}` prints the spaced grammar `(a b)`; `{:#}` prints the packed form
    /// `(1(23))` when every label is a single digit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let packed = f.alternate() && self.max_label() <= 9;
        fn go(t: &ParenTree, packed: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match t {
                ParenTree::Leaf(l) => write!(f, "{l}"),
                ParenTree::Star => write!(f, "*"),
                ParenTree::Node(a, b) => {
                    write!(f, "(")?;
                    go(a, packed, f)?;
                    if !packed {
                        write!(f, " ")?;
                    }
                    go(b, packed, f)?;
                    write!(f, ")")
                }
            }
        }
        go(self, packed, f)
    }
}

impl fmt::Debug for ParenTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:#}")
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Open,
    Close,
    Label(usize),
    Star,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>> {
    let spaced = s.trim().contains(char::is_whitespace);
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            '(' => out.push((col, Token::Open)),
            ')' => out.push((col, Token::Close)),
            '*' | '∗' => out.push((col, Token::Star)),
            c if c.is_whitespace() => {}
            c if c.is_ascii_digit() => {
                if spaced {
                    let mut j = i;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    let text: String = chars[i..j].iter().collect();
                    let v: usize = text
                        .parse()
                        .map_err(|_| Error::parse(col, format!("label {text:?} too large")))?;
                    out.push((col, Token::Label(v)));
                    i = j;
                    continue;
                }
                out.push((col, Token::Label(c.to_digit(10).unwrap() as usize)));
            }
            other => return Err(Error::parse(col, format!("unexpected character {other:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn col(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_col, |t| t.0)
    }

    fn atom(&mut self) -> Result<ParenTree> {
        let col = self.col();
        match self.tokens.get(self.pos).cloned() {
            Some((_, Token::Label(0))) => Err(Error::parse(col, "labels start at 1")),
            Some((_, Token::Label(l))) => {
                self.pos += 1;
                Ok(ParenTree::Leaf(l))
            }
            Some((_, Token::Star)) => {
                self.pos += 1;
                Ok(ParenTree::Star)
            }
            Some((_, Token::Open)) => {
                self.pos += 1;
                let t = self.seq()?;
                match self.tokens.get(self.pos) {
                    Some((_, Token::Close)) => {
                        self.pos += 1;
                        Ok(t)
                    }
                    _ => Err(Error::parse(self.col(), "expected `)`")),
                }
            }
            Some((_, Token::Close)) => Err(Error::parse(col, "unexpected `)`")),
            None => Err(Error::parse(col, "unexpected end of input")),
        }
    }

    fn seq(&mut self) -> Result<ParenTree> {
        let first = self.atom()?;
        match self.tokens.get(self.pos) {
            None | Some((_, Token::Close)) => Ok(first),
            _ => {
                let second = self.atom()?;
                match self.tokens.get(self.pos) {
                    None | Some((_, Token::Close)) => Ok(ParenTree::node(first, second)),
                    _ => Err(Error::parse(
                        self.col(),
                        "a vertex takes exactly two subtrees; add parentheses",
                    )),
                }
            }
        }
    }
}

impl FromStr for ParenTree {
    type Err = Error;

    /// Accepts both `(1 (2 3))` and the packed `(1(23))`, with or without the
    /// outer parentheses. In packed input every digit is its own leaf; once
    /// whitespace appears, digit runs are multi-digit labels.
    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s)?;
        let mut p = Parser {
            tokens,
            pos: 0,
            end_col: s.chars().count() + 1,
        };
        let t = p.seq()?;
        if p.pos != p.tokens.len() {
            return Err(Error::parse(p.col(), "trailing input"));
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> ParenTree {
        s.parse().unwrap()
    }

    #[test]
    fn magma_composition_examples() {
        assert_eq!(
            magma_compose(&t("(1(34))(25)"), 4, &t("(13)2")).unwrap(),
            t("(1(3((46)5)))(27)")
        );
        assert_eq!(magma_compose(&t("1"), 1, &t("(12)")).unwrap(), t("(12)"));
        assert_eq!(magma_compose(&t("(12)"), 2, &t("(12)")).unwrap(), t("(1(23))"));
        assert!(magma_compose(&t("(12)"), 3, &t("(12)")).is_err());
    }

    #[test]
    fn forgetting_brackets_matches_sigma() {
        let a = t("(1(34))(25)");
        let b = t("(13)2");
        let c = a.compose_at(4, &b).unwrap();
        assert_eq!(
            c.forget().unwrap(),
            a.forget().unwrap().compose_at(4, &b.forget().unwrap()).unwrap()
        );
    }

    #[test]
    fn star_forget_examples() {
        assert_eq!(star_forget(&t("((*(1*))((**)(32)))")).unwrap(), t("(1(32))"));
        assert_eq!(star_forget(&t("((∗(1∗))((∗∗)(32)))")).unwrap(), t("(1(32))"));
        assert_eq!(star_forget(&t("(1(23))")).unwrap(), t("(1(23))"));
        assert_eq!(star_forget(&t("(1*)")).unwrap(), t("1"));
        assert_eq!(star_forget(&t("(**)")), Err(Error::AllStarTree));
    }

    #[test]
    fn printing() {
        let a = t("(1(3((46)5)))(27)");
        assert_eq!(a.to_string(), "((1 (3 ((4 6) 5))) (2 7))");
        assert_eq!(format!("{a:#}"), "((1(3((46)5)))(27))");
        assert_eq!(t(&a.to_string()), a);
        let big = t("(10 (2 (1 3)))");
        assert_eq!(big.labels(), vec![10, 2, 1, 3]);
        assert_eq!(format!("{big:#}"), "(10 (2 (1 3)))");
    }

    #[test]
    fn parse_errors() {
        for bad in ["(123)", "(12", "12)", "(1a)", "", "()"] {
            assert!(bad.parse::<ParenTree>().is_err(), "{bad}");
        }
        match "(12]".parse::<ParenTree>() {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rotations() {
        let a = t("((12)3)");
        assert_eq!(a.rotate_right(&[]).unwrap(), t("(1(23))"));
        assert_eq!(t("(1(23))").rotate_left(&[]).unwrap(), a);
        assert!(t("(1(23))").rotate_right(&[]).is_none());
        let b = t("(((12)3)4)");
        assert_eq!(b.rotate_right(&[Side::Left]).unwrap(), t("((1(23))4)"));
        assert_eq!(b.span(&[Side::Left, Side::Right]).unwrap(), 2..3);
    }

    #[test]
    fn star_out_and_counts() {
        let a = t("((12)3)");
        assert_eq!(a.star_out(2).unwrap(), t("((1*)2)"));
        assert_eq!(a.star_out(2).unwrap().prune().unwrap(), t("(12)"));
        assert_eq!(ParenTree::all_bracketings(&[1, 2, 3, 4]).len(), 5);
        assert_eq!(ParenTree::all_bracketings(&[1, 2, 3, 4, 5]).len(), 14);
    }
}
