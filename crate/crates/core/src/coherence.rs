//! Factorization of parenthesized (ribbon) braids into associators, block
//! braidings and twists, and evaluation of such factorizations under the
//! images of the generators in another operad.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operads::{BraidOperad, Instance, Object, Operad, OperadMorphism, ParenTree, Side};
use crate::perm::Permutation;
use crate::ribbon::RibbonBraid;

/// Direction of a rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rotation {
    /// `((A B) C) -> (A (B C))`
    Right,
    /// `(A (B C)) -> ((A B) C)`
    Left,
}

/// An elementary move. Node paths are read from the root of the current
/// tree; leaf positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    Assoc { node: Vec<Side>, dir: Rotation },
    /// Swaps the two children of `node`; `power` is `1` or `-1`.
    Braid { node: Vec<Side>, power: i32 },
    Twist { leaf: usize, exponent: i64 },
}

impl Move {
    /// The tree reached from `t`.
    pub fn apply(&self, t: &ParenTree) -> Result<ParenTree> {
        let out = match self {
            Move::Assoc { node, dir: Rotation::Right } => t.rotate_right(node),
            Move::Assoc { node, dir: Rotation::Left } => t.rotate_left(node),
            Move::Braid { node, .. } => t.swap_at(node),
            Move::Twist { leaf, .. } => (*leaf >= 1 && *leaf <= t.arity()).then(|| t.clone()),
        };
        out.ok_or_else(|| Error::NotComposable(format!("move {self} does not apply to {t:#}")))
    }

    pub fn inverse(&self) -> Move {
        match self {
            Move::Assoc { node, dir } => Move::Assoc {
                node: node.clone(),
                dir: match dir {
                    Rotation::Right => Rotation::Left,
                    Rotation::Left => Rotation::Right,
                },
            },
            Move::Braid { node, power } => Move::Braid {
                node: node.clone(),
                power: -power,
            },
            Move::Twist { leaf, exponent } => Move::Twist {
                leaf: *leaf,
                exponent: -exponent,
            },
        }
    }
}

fn path_str(p: &[Side]) -> String {
    if p.is_empty() {
        return "root".into();
    }
    p.iter()
        .map(|s| match s {
            Side::Left => 'L',
            Side::Right => 'R',
        })
        .collect()
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Assoc { node, dir: Rotation::Right } => write!(f, "a@{}", path_str(node)),
            Move::Assoc { node, dir: Rotation::Left } => write!(f, "a^-1@{}", path_str(node)),
            Move::Braid { node, power } => write!(f, "b^{power}@{}", path_str(node)),
            Move::Twist { leaf, exponent } => write!(f, "t^{exponent}@{leaf}"),
        }
    }
}

/// A sequence of composable moves starting at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoherencePath {
    pub source: ParenTree,
    pub moves: Vec<Move>,
}

impl CoherencePath {
    pub fn empty(source: ParenTree) -> Self {
        CoherencePath {
            source,
            moves: Vec::new(),
        }
    }

    /// Trees visited, starting with the source.
    pub fn trees(&self) -> Result<Vec<ParenTree>> {
        let mut out = vec![self.source.clone()];
        for m in &self.moves {
            let next = m.apply(out.last().expect("nonempty"))?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn target(&self) -> Result<ParenTree> {
        Ok(self.trees()?.pop().expect("nonempty"))
    }

    pub fn then(mut self, other: CoherencePath) -> Result<Self> {
        if self.target()? != other.source {
            return Err(Error::NotComposable("paths do not meet".into()));
        }
        self.moves.extend(other.moves);
        Ok(self)
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(CoherencePath {
            source: self.target()?,
            moves: self.moves.iter().rev().map(Move::inverse).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

impl fmt::Display for CoherencePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}:", self.source)?;
        for m in &self.moves {
            write!(f, " {m}")?;
        }
        Ok(())
    }
}

/// Right rotations taking `t` to the right comb on its leaf word.
fn to_right_comb(t: &ParenTree) -> Vec<Move> {
    let mut moves = Vec::new();
    let mut cur = t.clone();
    loop {
        // first vertex on the right spine whose left child is not a leaf
        let mut node = Vec::new();
        let mut found = None;
        let mut sub = &cur;
        while let ParenTree::Node(a, b) = sub {
            if matches!(**a, ParenTree::Node(..)) {
                found = Some(node.clone());
                break;
            }
            node.push(Side::Right);
            sub = b;
        }
        match found {
            Some(node) => {
                cur = cur.rotate_right(&node).expect("left child is a vertex");
                moves.push(Move::Assoc {
                    node,
                    dir: Rotation::Right,
                });
            }
            None => return moves,
        }
    }
}

/// A path of associativity moves from `p` to `q`, through the right comb.
pub fn rotation_path(p: &ParenTree, q: &ParenTree) -> Result<CoherencePath> {
    if p.labels() != q.labels() || p.has_star() || q.has_star() {
        return Err(Error::NotComposable(format!(
            "{p:#} and {q:#} do not have the same leaf word"
        )));
    }
    if p == q {
        return Ok(CoherencePath::empty(p.clone()));
    }
    let up = CoherencePath {
        source: p.clone(),
        moves: to_right_comb(p),
    };
    let down = CoherencePath {
        source: q.clone(),
        moves: to_right_comb(q),
    }
    .inverse()?;
    up.then(down)
}

/// The right comb on `word` with positions `i-1, i` (1-based pair `i, i+1`)
/// grouped, and the path to that pair.
fn comb_with_pair(word: &[usize], i: usize) -> (ParenTree, Vec<Side>) {
    let pair = ParenTree::node(ParenTree::Leaf(word[i - 1]), ParenTree::Leaf(word[i]));
    let mut items: Vec<ParenTree> = word[..i - 1].iter().map(|&l| ParenTree::Leaf(l)).collect();
    items.push(pair);
    items.extend(word[i + 1..].iter().map(|&l| ParenTree::Leaf(l)));
    let k = i - 1;
    let last = items.len() - 1;
    let mut path = vec![Side::Right; k];
    if k < last {
        path.push(Side::Left);
    }
    let mut tree = items.pop().expect("nonempty");
    while let Some(t) = items.pop() {
        tree = ParenTree::node(t, tree);
    }
    (tree, path)
}

/// Factors a morphism of a parenthesized instance: twists first, then one
/// block braiding per letter, with rotations in between.
pub fn factorize(m: &OperadMorphism) -> Result<CoherencePath> {
    let source = m
        .source()
        .as_tree()
        .ok_or_else(|| Error::InvalidMorphism("factorization needs parenthesized objects".into()))?
        .clone();
    let target = m.target().as_tree().expect("parenthesized").clone();
    if m.arity() == 0 {
        return Ok(CoherencePath::empty(source));
    }
    if source.has_star() || target.has_star() {
        return Err(Error::InvalidMorphism("factorization of trees with `*` leaves".into()));
    }
    let mut path = CoherencePath::empty(source.clone());
    for (p, &t) in m.payload().twists().iter().enumerate() {
        if t != 0 {
            path.moves.push(Move::Twist {
                leaf: p + 1,
                exponent: t,
            });
        }
    }
    let mut cur = source;
    for &l in m.braid().letters() {
        let i = l.unsigned_abs() as usize;
        let (comb, node) = comb_with_pair(&cur.labels(), i);
        let rot = rotation_path(&cur, &comb)?;
        path.moves.extend(rot.moves);
        let mv = Move::Braid {
            node,
            power: l.signum(),
        };
        cur = mv.apply(&comb)?;
        path.moves.push(mv);
    }
    path.moves.extend(rotation_path(&cur, &target)?.moves);
    Ok(path)
}

/// Images of the generators of `PaB` (and `PaRB`) in an operad `O`.
#[derive(Clone, Debug)]
pub struct MapData<O: Operad> {
    /// Image of the binary tree `(12)`.
    pub m: O::Object,
    /// Image of the braiding `(12) -> (21)`.
    pub beta: O::Morphism,
    /// Image of the associator `(12)3 -> 1(23)`.
    pub alpha: O::Morphism,
    /// Image of the twist, for ribbon sources.
    pub tau: Option<O::Morphism>,
    /// Whether the unital conditions are part of the data.
    pub unital: bool,
}

impl MapData<BraidOperad> {
    /// The identity map of `PaB`, or of `PaRB` for ribbon instances.
    pub fn canonical(instance: Instance) -> Result<Self> {
        if !instance.is_parenthesized() {
            return Err(Error::IllTypedData(format!("{instance} is not parenthesized")));
        }
        let tree = |s: &str| Object::Tree(s.parse().expect("literal tree"));
        let beta = OperadMorphism::new(
            instance,
            tree("(12)"),
            tree("(21)"),
            RibbonBraid::beta(2, 1)?,
        )?;
        let alpha = OperadMorphism::new(
            instance,
            tree("((12)3)"),
            tree("(1(23))"),
            RibbonBraid::identity(3),
        )?;
        let tau = if instance.is_ribbon() {
            Some(OperadMorphism::new(instance, tree("1"), tree("1"), RibbonBraid::tau(1, 1)?)?)
        } else {
            None
        };
        Ok(MapData {
            m: tree("(12)"),
            beta,
            alpha,
            tau,
            unital: instance.is_unital(),
        })
    }
}

impl<O: Operad> MapData<O> {
    /// Rejects data whose images have the wrong endpoints.
    pub fn type_check(&self, op: &O) -> Result<()> {
        let id_m = op.identity(&self.m)?;
        if op.arity(&id_m) != 2 {
            return Err(Error::IllTypedData("image of (12) must have arity 2".into()));
        }
        let swap = Permutation::transposition(2, 1)?;
        let sigma_m = op.source(&op.act(&swap, &id_m)?);
        if op.arity(&self.beta) != 2 || op.source(&self.beta) != self.m || op.target(&self.beta) != sigma_m {
            return Err(Error::IllTypedData(format!(
                "beta image must be a morphism {:?} -> {:?}",
                self.m, sigma_m
            )));
        }
        let left = op.compose_at(&id_m, 1, &id_m)?;
        let right = op.compose_at(&id_m, 2, &id_m)?;
        if op.arity(&self.alpha) != 3
            || op.source(&self.alpha) != op.source(&left)
            || op.target(&self.alpha) != op.source(&right)
        {
            return Err(Error::IllTypedData(format!(
                "alpha image must be a morphism {:?} -> {:?}",
                op.source(&left),
                op.source(&right)
            )));
        }
        if let Some(tau) = &self.tau {
            let unit = op.source(&op.unit());
            if op.arity(tau) != 1 || op.source(tau) != unit || op.target(tau) != unit {
                return Err(Error::IllTypedData("tau image must be an automorphism in arity one".into()));
            }
        }
        Ok(())
    }

    /// Identity on the image of a tree without `*` leaves.
    pub fn object_identity(&self, op: &O, t: &ParenTree) -> Result<O::Morphism> {
        let std = t.standardized();
        let id = self.standard_identity(op, &std)?;
        op.act(&t.forget()?, &id)
    }

    fn standard_identity(&self, op: &O, t: &ParenTree) -> Result<O::Morphism> {
        match t {
            ParenTree::Leaf(_) => Ok(op.unit()),
            ParenTree::Star => op
                .nullary()
                .ok_or_else(|| Error::IllTypedData("target has no arity-zero term".into())),
            ParenTree::Node(a, b) => {
                let fa = self.standard_identity(op, &a.standardized())?;
                let fb = self.standard_identity(op, &b.standardized())?;
                let id_m = op.identity(&self.m)?;
                op.compose_at(&op.compose_at(&id_m, 2, &fb)?, 1, &fa)
            }
        }
    }

    /// `pattern o (F(c_1), .., F(c_k))` for the standardized child trees,
    /// composed at decreasing slots.
    fn whisker_children(&self, op: &O, pattern: &O::Morphism, children: &[&ParenTree]) -> Result<O::Morphism> {
        let mut out = pattern.clone();
        for (idx, c) in children.iter().enumerate().rev() {
            let id = self.standard_identity(op, &c.standardized())?;
            out = op.compose_at(&out, idx + 1, &id)?;
        }
        Ok(out)
    }

    /// The image of a single move applied at `t`.
    pub fn evaluate_move(&self, op: &O, t: &ParenTree, mv: &Move) -> Result<O::Morphism> {
        let std = t.standardized();
        let relabel = t.forget()?;
        let local = match mv {
            Move::Twist { leaf, exponent } => {
                let tau = self
                    .tau
                    .as_ref()
                    .ok_or_else(|| Error::IllTypedData("twist move without a tau image".into()))?;
                let id = self.standard_identity(op, &std)?;
                return op.act(&relabel, &op.compose_at(&id, *leaf, &op.pow(tau, *exponent)?)?);
            }
            Move::Assoc { node, .. } | Move::Braid { node, .. } => node,
        };
        let sub = std
            .subtree(local)
            .ok_or_else(|| Error::NotComposable(format!("no vertex at {}", path_str(local))))?;
        let span = std.span(local).expect("vertex exists");
        let inner = match (mv, sub) {
            (Move::Assoc { dir: Rotation::Right, .. }, ParenTree::Node(ab, c)) => match &**ab {
                ParenTree::Node(a, b) => self.whisker_children(op, &self.alpha, &[a, b, c])?,
                _ => return Err(Error::NotComposable(format!("cannot rotate {sub:#}"))),
            },
            (Move::Assoc { dir: Rotation::Left, .. }, ParenTree::Node(a, bc)) => match &**bc {
                ParenTree::Node(b, c) => self.whisker_children(op, &op.inverse(&self.alpha), &[a, b, c])?,
                _ => return Err(Error::NotComposable(format!("cannot rotate {sub:#}"))),
            },
            (Move::Braid { power, .. }, ParenTree::Node(a, b)) => {
                let pattern = match power {
                    1 => self.beta.clone(),
                    -1 => op.inverse(&op.act(&Permutation::transposition(2, 1)?, &self.beta)?),
                    p => return Err(Error::InvalidMorphism(format!("braid move power {p}"))),
                };
                self.whisker_children(op, &pattern, &[a, b])?
            }
            _ => return Err(Error::NotComposable(format!("move {mv} does not apply to {t:#}"))),
        };
        // the context: the subtree collapsed to the leaf `span.start + 1`
        let width = span.end - span.start;
        let lo = span.start + 1;
        let context = std
            .replace_at(local, &|_| Some(ParenTree::Leaf(lo)))
            .expect("vertex exists")
            .map_labels(&|l| if l > lo { l + 1 - width } else { l });
        let ctx = self.standard_identity(op, &context.standardized())?;
        op.act(&relabel, &op.compose_at(&ctx, lo, &inner)?)
    }

    /// The image of a path: its moves evaluated and composed in order.
    pub fn evaluate_path(&self, op: &O, path: &CoherencePath) -> Result<O::Morphism> {
        let mut out = self.object_identity(op, &path.source)?;
        let mut cur = path.source.clone();
        for mv in &path.moves {
            let step = self.evaluate_move(op, &cur, mv)?;
            out = op.then(&out, &step)?;
            cur = mv.apply(&cur)?;
        }
        Ok(out)
    }
}

/// Evaluates `path` under `data`.
pub fn evaluate_path<O: Operad>(path: &CoherencePath, data: &MapData<O>, op: &O) -> Result<O::Morphism> {
    data.evaluate_path(op, path)
}

/// The image of a morphism of a parenthesized instance under `data`.
pub fn apply_map<O: Operad>(m: &OperadMorphism, data: &MapData<O>, op: &O) -> Result<O::Morphism> {
    if m.arity() == 0 {
        return op
            .nullary()
            .ok_or_else(|| Error::IllTypedData("target has no arity-zero term".into()));
    }
    data.evaluate_path(op, &factorize(m)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> ParenTree {
        s.parse().unwrap()
    }

    fn morphism(inst: Instance, src: &str, tgt: &str, payload: &str) -> OperadMorphism {
        OperadMorphism::new(
            inst,
            Object::Tree(t(src)),
            Object::Tree(t(tgt)),
            payload.parse().unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn rotation_path_examples() {
        assert!(rotation_path(&t("((12)3)"), &t("((12)3)")).unwrap().is_empty());
        let p = rotation_path(&t("((12)3)"), &t("(1(23))")).unwrap();
        assert_eq!(p.moves, vec![Move::Assoc { node: vec![], dir: Rotation::Right }]);
        let p = rotation_path(&t("(((12)3)4)"), &t("(1(2(34)))")).unwrap();
        assert!(p.len() <= 3);
        assert_eq!(p.target().unwrap(), t("(1(2(34)))"));
        assert!(rotation_path(&t("(12)"), &t("(21)")).is_err());
    }

    #[test]
    fn rotations_evaluate_to_identity_braids() {
        let op = BraidOperad::new(Instance::PaB);
        let data = MapData::canonical(Instance::PaB).unwrap();
        let trees = ParenTree::all_bracketings(&[3, 1, 4, 2, 5]);
        for p in &trees[..6] {
            for q in &trees[6..12] {
                let img = data.evaluate_path(&op, &rotation_path(p, q).unwrap()).unwrap();
                assert!(img.braid().is_empty());
                assert_eq!(img.source(), &Object::Tree(p.clone()));
                assert_eq!(img.target(), &Object::Tree(q.clone()));
            }
        }
    }

    #[test]
    fn factorization_examples() {
        let op = BraidOperad::new(Instance::PaB);
        let data = MapData::canonical(Instance::PaB).unwrap();

        let beta = morphism(Instance::PaB, "(12)", "(21)", "1 | 0,0");
        let f = factorize(&beta).unwrap();
        assert_eq!(f.moves, vec![Move::Braid { node: vec![], power: 1 }]);

        let x12 = morphism(Instance::PaB, "((12)3)", "((12)3)", "1 1 | 0,0,0");
        let img = data.evaluate_path(&op, &factorize(&x12).unwrap()).unwrap();
        assert!(img.equals(&x12).unwrap());

        let id = morphism(Instance::PaB, "((12)3)", "(1(23))", "| 0,0,0");
        let f = factorize(&id).unwrap();
        assert!(f.moves.iter().all(|m| matches!(m, Move::Assoc { .. })));
        assert!(data.evaluate_path(&op, &f).unwrap().equals(&id).unwrap());
    }

    #[test]
    fn ribbon_round_trip() {
        let op = BraidOperad::new(Instance::PaRB);
        let data = MapData::canonical(Instance::PaRB).unwrap();
        let m = morphism(Instance::PaRB, "((31)(24))", "(4((23)1))", "2 -1 3 -2 1 | 1,0,-2,3");
        let img = data.evaluate_path(&op, &factorize(&m).unwrap()).unwrap();
        assert!(img.equals(&m).unwrap(), "{img} vs {m}");
    }

    #[test]
    fn ill_typed_data() {
        let op = BraidOperad::new(Instance::PaB);
        let mut data = MapData::canonical(Instance::PaB).unwrap();
        assert!(data.type_check(&op).is_ok());
        data.beta = data.beta.then(&data.beta.act(&"21".parse().unwrap()).unwrap()).unwrap();
        assert!(matches!(data.type_check(&op), Err(Error::IllTypedData(_))));
    }
}
