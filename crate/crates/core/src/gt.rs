//! Grothendieck-Teichmuller pairs, their defining relations, the monoid
//! law, and the action on parenthesized (ribbon) braids.

use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;
use serde::Serialize;

use crate::braid::{braid_equal, fg_substitute, pure_generator, BraidWord, FreeGroupWord, GroupElement};
use crate::coherence::{apply_map, CoherencePath, MapData, Move, Rotation};
use crate::error::{Error, Result};
use crate::operads::{BraidOperad, Instance, Object, Operad, OperadMorphism, ParenTree, Side, TwistOperad};
use crate::perm::Permutation;
use crate::ribbon::RibbonBraid;

/// The `lambda` of a pair: an odd integer, or a residue class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Lambda {
    Exact(i64),
    Residue { value: u64, modulus: u64 },
}

impl Lambda {
    fn exact(self) -> Result<i64> {
        match self {
            Lambda::Exact(l) if l % 2 == 0 => Err(Error::EvenLambda(l)),
            Lambda::Exact(l) => Ok(l),
            Lambda::Residue { .. } => Err(Error::ModeMismatch("operation needs an exact lambda".into())),
        }
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda::Exact(l) => write!(f, "{l}"),
            Lambda::Residue { value, modulus } => write!(f, "{value}%{modulus}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GTPair {
    pub lambda: Lambda,
    pub f: FreeGroupWord,
}

impl GTPair {
    pub fn new(lambda: i64, f: FreeGroupWord) -> Self {
        GTPair {
            lambda: Lambda::Exact(lambda),
            f: f.free_reduce(),
        }
    }

    pub fn residue(value: i64, modulus: u64, f: FreeGroupWord) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ModeMismatch("modulus must be positive".into()));
        }
        Ok(GTPair {
            lambda: Lambda::Residue {
                value: value.rem_euclid(modulus as i64) as u64,
                modulus,
            },
            f: f.free_reduce(),
        })
    }

    pub fn identity() -> Self {
        GTPair::new(1, FreeGroupWord::identity(2))
    }
}

impl fmt::Display for GTPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.lambda, self.f)
    }
}

impl FromStr for GTPair {
    type Err = Error;

    /// `lambda;f`, with `lambda` an integer or `value%modulus` and `f` over
    /// `x y X Y`.
    fn from_str(s: &str) -> Result<Self> {
        let (l, f) = s
            .split_once(';')
            .ok_or_else(|| Error::parse(s.chars().count() + 1, "expected `lambda;f`"))?;
        let offset = l.chars().count() + 1;
        let word: FreeGroupWord = f.parse().map_err(|e| match e {
            Error::Parse { line, column, message } => Error::Parse {
                line,
                column: column + offset,
                message,
            },
            other => other,
        })?;
        let bad = |_| Error::parse(1, format!("expected an integer lambda, found {:?}", l.trim()));
        match l.trim().split_once('%') {
            Some((v, n)) => {
                let v: i64 = v.trim().parse().map_err(bad)?;
                let n: u64 = n.trim().parse().map_err(bad)?;
                GTPair::residue(v, n, word)
            }
            None => Ok(GTPair::new(l.trim().parse().map_err(bad)?, word)),
        }
    }
}

/// `f(x, y) f(y, x) = 1`.
pub fn check_i(f: &FreeGroupWord) -> bool {
    let (x, y) = (FreeGroupWord::x(), FreeGroupWord::y());
    let a = fg_substitute(f, &x, &y).expect("rank two");
    let b = fg_substitute(f, &y, &x).expect("rank two");
    a.mul(&b).is_empty()
}

/// `f(z, x) z^m f(y, z) y^m f(x, y) x^m = 1` with `z = (xy)^-1` and
/// `m = (lambda - 1) / 2`.
pub fn check_ii(lambda: i64, f: &FreeGroupWord) -> Result<bool> {
    if lambda % 2 == 0 {
        return Err(Error::EvenLambda(lambda));
    }
    let m = (lambda - 1) / 2;
    let (x, y) = (FreeGroupWord::x(), FreeGroupWord::y());
    let z = x.mul(&y).inv();
    let w = fg_substitute(f, &z, &x)?
        .mul(&z.pow(m))
        .mul(&fg_substitute(f, &y, &z)?)
        .mul(&y.pow(m))
        .mul(&fg_substitute(f, &x, &y)?)
        .mul(&x.pow(m));
    Ok(w.is_empty())
}

/// Both sides of the pentagon relation in `PB(4)`, in any group receiving
/// the pure braid generators.
pub fn relation_iii_sides<G: GroupElement>(f: &FreeGroupWord, x: impl Fn(usize, usize) -> G) -> Result<(G, G)> {
    let (x12, x13) = (x(1, 2), x(1, 3));
    let (x23, x24, x34) = (x(2, 3), x(2, 4), x(3, 4));
    let lhs = fg_substitute(f, &x12, &x23.mul(&x24))?.mul(&fg_substitute(f, &x13.mul(&x23), &x34)?);
    let rhs = fg_substitute(f, &x23, &x34)?
        .mul(&fg_substitute(f, &x12.mul(&x13), &x24.mul(&x34))?)
        .mul(&fg_substitute(f, &x12, &x23)?);
    Ok((lhs, rhs))
}

/// `f(x12, x23 x24) f(x13 x23, x34) = f(x23, x34) f(x12 x13, x24 x34) f(x12, x23)`
/// in `B(4)`.
pub fn check_iii(f: &FreeGroupWord) -> Result<bool> {
    let (lhs, rhs) = relation_iii_sides(f, |i, j| pure_generator(4, i, j).expect("indices in range"))?;
    braid_equal(&lhs, &rhs)
}

/// Outcome of the three relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
}

impl RelationReport {
    pub fn all(&self) -> bool {
        self.i && self.ii && self.iii
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = |b: bool| if b { "PASS" } else { "FAIL" };
        write!(f, "I: {}\nII: {}\nIII: {}", v(self.i), v(self.ii), v(self.iii))
    }
}

pub fn check_relations(p: &GTPair) -> Result<RelationReport> {
    let lambda = p.lambda.exact()?;
    Ok(RelationReport {
        i: check_i(&p.f),
        ii: check_ii(lambda, &p.f)?,
        iii: check_iii(&p.f)?,
    })
}

/// `(lambda, f) * (mu, g) = (lambda mu, f(g x^mu g^-1, y^mu) g)`.
///
/// In residue mode the exponent `mu` is taken as its least non-negative
/// representative.
pub fn gt_mul(a: &GTPair, b: &GTPair) -> Result<GTPair> {
    let (lambda, mu) = match (a.lambda, b.lambda) {
        (Lambda::Exact(l), Lambda::Exact(m)) => (Lambda::Exact(l * m), m),
        (Lambda::Residue { value: l, modulus: n }, Lambda::Residue { value: m, modulus: k }) if n == k => (
            Lambda::Residue {
                value: ((l as u128 * m as u128) % n as u128) as u64,
                modulus: n,
            },
            m as i64,
        ),
        _ => {
            return Err(Error::ModeMismatch(format!(
                "cannot multiply lambda {} by {}",
                a.lambda, b.lambda
            )))
        }
    };
    let (x, y) = (FreeGroupWord::x(), FreeGroupWord::y());
    let g = &b.f;
    let first = g.mul(&x.pow(mu)).mul(&g.inv());
    let f = fg_substitute(&a.f, &first, &y.pow(mu))?.mul(g);
    Ok(GTPair { lambda, f })
}

fn tree(s: &str) -> ParenTree {
    s.parse().expect("literal tree")
}

fn path(source: &str, moves: Vec<Move>) -> CoherencePath {
    CoherencePath {
        source: tree(source),
        moves,
    }
}

fn assoc(node: Vec<Side>, dir: Rotation) -> Move {
    Move::Assoc { node, dir }
}

fn braid(node: Vec<Side>) -> Move {
    Move::Braid { node, power: 1 }
}

/// The two sides of each of the hexagons and the pentagon, as paths in
/// `PaB`.
pub fn coherence_diagrams() -> [(&'static str, CoherencePath, CoherencePath); 3] {
    use Rotation::{Left, Right};
    use Side::{Left as L, Right as R};
    [
        (
            "hexagon 1",
            path("((12)3)", vec![braid(vec![L]), assoc(vec![], Right), braid(vec![R])]),
            path("((12)3)", vec![assoc(vec![], Right), braid(vec![]), assoc(vec![], Right)]),
        ),
        (
            "hexagon 2",
            path("(1(23))", vec![braid(vec![R]), assoc(vec![], Left), braid(vec![L])]),
            path("(1(23))", vec![assoc(vec![], Left), braid(vec![]), assoc(vec![], Left)]),
        ),
        (
            "pentagon",
            path("(((12)3)4)", vec![assoc(vec![], Right), assoc(vec![], Right)]),
            path(
                "(((12)3)4)",
                vec![assoc(vec![L], Right), assoc(vec![], Right), assoc(vec![R], Right)],
            ),
        ),
    ]
}

/// Which of the defining diagrams a set of map data satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MapDataReport {
    pub hexagon1: bool,
    pub hexagon2: bool,
    pub pentagon: bool,
    /// `tau o_1 id = beta . (s beta) . (id o (tau, tau))`, when a twist is given.
    pub twist: Option<bool>,
    /// `alpha o_i * = id` for `i = 1, 2, 3`, when the data is unital.
    pub unital: Option<bool>,
}

impl MapDataReport {
    pub fn hexagons(&self) -> bool {
        self.hexagon1 && self.hexagon2
    }

    pub fn all(&self) -> bool {
        self.hexagons() && self.pentagon && self.twist.unwrap_or(true) && self.unital.unwrap_or(true)
    }
}

impl fmt::Display for MapDataReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = |b: bool| if b { "PASS" } else { "FAIL" };
        write!(
            f,
            "hexagon 1: {}\nhexagon 2: {}\npentagon: {}",
            v(self.hexagon1),
            v(self.hexagon2),
            v(self.pentagon)
        )?;
        if let Some(t) = self.twist {
            write!(f, "\ntwist: {}", v(t))?;
        }
        if let Some(u) = self.unital {
            write!(f, "\nunital: {}", v(u))?;
        }
        Ok(())
    }
}

/// Evaluates both sides of every required diagram under `data`.
pub fn check_map_data<O: Operad>(data: &MapData<O>, op: &O) -> Result<MapDataReport> {
    data.type_check(op)?;
    let mut verdicts = [false; 3];
    for (v, (_, lhs, rhs)) in verdicts.iter_mut().zip(coherence_diagrams()) {
        let l = data.evaluate_path(op, &lhs)?;
        let r = data.evaluate_path(op, &rhs)?;
        *v = op.equal(&l, &r)?;
    }
    let id_m = op.identity(&data.m)?;
    let twist = match &data.tau {
        Some(tau) => {
            let lhs = op.compose_at(tau, 1, &id_m)?;
            let swap = Permutation::transposition(2, 1)?;
            let both = op.compose_at(&op.compose_at(&id_m, 2, tau)?, 1, tau)?;
            let rhs = op.then(&op.then(&data.beta, &op.act(&swap, &data.beta)?)?, &both)?;
            Some(op.equal(&lhs, &rhs)?)
        }
        None => None,
    };
    let unital = if data.unital {
        let star = op
            .nullary()
            .ok_or_else(|| Error::IllTypedData("unital data needs an arity-zero term".into()))?;
        let mut ok = true;
        for i in 1..=3 {
            let c = op.compose_at(&data.alpha, i, &star)?;
            ok &= op.equal(&c, &op.identity(&op.source(&c))?)? && op.source(&c) == data.m;
        }
        Some(ok)
    } else {
        None
    };
    Ok(MapDataReport {
        hexagon1: verdicts[0],
        hexagon2: verdicts[1],
        pentagon: verdicts[2],
        twist,
        unital,
    })
}

/// The data `beta -> beta^lambda`, `alpha -> f(x12, x23) . alpha` (and
/// `tau -> tau^lambda` for ribbon instances) in a parenthesized instance.
pub fn build_endomorphism_in(p: &GTPair, instance: Instance) -> Result<MapData<BraidOperad>> {
    let lambda = p.lambda.exact()?;
    let canonical = MapData::canonical(instance)?;
    let beta = OperadMorphism::new(
        instance,
        canonical.beta.source().clone(),
        canonical.beta.target().clone(),
        RibbonBraid::from_braid(BraidWord::new(2, [1])?.pow(lambda)),
    )?;
    let f_braid = fg_substitute(&p.f, &pure_generator(3, 1, 2)?, &pure_generator(3, 2, 3)?)?;
    let alpha = OperadMorphism::new(
        instance,
        canonical.alpha.source().clone(),
        canonical.alpha.target().clone(),
        RibbonBraid::from_braid(f_braid),
    )?;
    let tau = match canonical.tau {
        Some(_) => Some(OperadMorphism::new(
            instance,
            Object::Tree(ParenTree::Leaf(1)),
            Object::Tree(ParenTree::Leaf(1)),
            RibbonBraid::pure_twists(vec![lambda]),
        )?),
        None => None,
    };
    Ok(MapData {
        m: canonical.m,
        beta,
        alpha,
        tau,
        unital: canonical.unital,
    })
}

/// [`build_endomorphism_in`] for `PaB`.
pub fn build_endomorphism(p: &GTPair) -> Result<MapData<BraidOperad>> {
    build_endomorphism_in(p, Instance::PaB)
}

/// The object-fixing endomorphism attached to a pair, for one instance.
///
/// Morphisms of arity at most two factor uniquely through the generators,
/// so they are transported for every odd `lambda`; from arity three on the
/// image depends on the factorization unless the pair satisfies the
/// relations, and such pairs are refused.
pub struct GtAction {
    pair: GTPair,
    instance: Instance,
    data: MapData<BraidOperad>,
    relations: Option<RelationReport>,
}

impl GtAction {
    pub fn new(pair: &GTPair, instance: Instance) -> Result<Self> {
        Ok(GtAction {
            pair: pair.clone(),
            instance,
            data: build_endomorphism_in(pair, instance)?,
            relations: None,
        })
    }

    pub fn pair(&self) -> &GTPair {
        &self.pair
    }

    fn relations(&mut self) -> Result<RelationReport> {
        if self.relations.is_none() {
            self.relations = Some(check_relations(&self.pair)?);
        }
        Ok(self.relations.expect("just computed"))
    }

    pub fn apply(&mut self, m: &OperadMorphism) -> Result<OperadMorphism> {
        if m.instance() != self.instance {
            return Err(Error::InstanceMismatch {
                left: self.instance.to_string(),
                right: m.instance().to_string(),
            });
        }
        if m.arity() >= 3 {
            let r = self.relations()?;
            if !r.all() {
                return Err(Error::RelationFailure(format!("{} ({})", self.pair, r.to_string().replace('\n', ", "))));
            }
        }
        apply_map(m, &self.data, &BraidOperad::new(self.instance))
    }
}

/// The image of `m` under the endomorphism attached to `p`.
pub fn apply_gt(p: &GTPair, m: &OperadMorphism) -> Result<OperadMorphism> {
    GtAction::new(p, m.instance())?.apply(m)
}

/// An integer linear form in the unknowns `x, y, a, b, c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct LinearForm(pub [i64; 5]);

impl LinearForm {
    pub const UNKNOWNS: [&'static str; 5] = ["x", "y", "a", "b", "c"];

    pub fn var(i: usize) -> Self {
        let mut c = [0; 5];
        c[i] = 1;
        LinearForm(c)
    }
}

impl Add for LinearForm {
    type Output = LinearForm;

    fn add(self, o: LinearForm) -> LinearForm {
        LinearForm(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Neg for LinearForm {
    type Output = LinearForm;

    fn neg(self) -> LinearForm {
        LinearForm(self.0.map(|c| -c))
    }
}

impl Zero for LinearForm {
    fn zero() -> Self {
        LinearForm([0; 5])
    }

    fn is_zero(&self) -> bool {
        self.0 == [0; 5]
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (c, v) in self.0.iter().zip(Self::UNKNOWNS) {
            match *c {
                0 => continue,
                1 => s.push_str(&format!(" + {v}")),
                -1 => s.push_str(&format!(" - {v}")),
                c if c > 0 => s.push_str(&format!(" + {c}{v}")),
                c => s.push_str(&format!(" - {}{v}", -c)),
            }
        }
        let s = s.trim_start_matches(" + ").replacen(" - ", "-", usize::from(s.starts_with(" - ")));
        if s.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", s.trim())
        }
    }
}

/// One homogeneous equation `form = 0`, from a component of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equation {
    pub diagram: &'static str,
    pub component: usize,
    pub coefficients: [i64; 5],
}

/// Solutions of a homogeneous integer system in `x, y, a, b, c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionSpace {
    pub rank: usize,
    /// Primitive integer vectors spanning the rational kernel.
    pub basis: Vec<[i64; 5]>,
}

impl SolutionSpace {
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Whether unknown `i` vanishes on every solution.
    pub fn forces_zero(&self, i: usize) -> bool {
        self.basis.iter().all(|v| v[i] == 0)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn kernel(rows: &[[i64; 5]]) -> SolutionSpace {
    let mut m: Vec<Vec<Ratio<i64>>> = rows
        .iter()
        .map(|r| r.iter().map(|&c| Ratio::from_integer(c)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..5 {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let lead = m[row][col];
        for v in m[row].iter_mut() {
            *v /= lead;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col];
                let pivot_row = m[row].clone();
                for (v, pv) in m[r].iter_mut().zip(pivot_row) {
                    *v -= factor * pv;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let mut basis = Vec::new();
    for free in (0..5).filter(|c| !pivots.contains(c)) {
        let mut v = [Ratio::from_integer(0i64); 5];
        v[free] = Ratio::from_integer(1);
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free];
        }
        let denom = v.iter().fold(1i64, |acc, q| num_integer::lcm(acc, *q.denom()));
        let ints: Vec<i64> = v.iter().map(|q| (q * denom).to_integer()).collect();
        let g = ints.iter().fold(0i64, |acc, &c| num_integer::gcd(acc, c.abs()));
        basis.push(std::array::from_fn(|i| ints[i] / g.max(1)));
    }
    SolutionSpace {
        rank: pivots.len(),
        basis,
    }
}

/// The linear system imposed on a map `PaB -> T` with `beta -> (x, y)` and
/// `alpha -> (a, b, c)`.
#[derive(Clone, Debug, Serialize)]
pub struct TwistSystem {
    pub equations: Vec<Equation>,
    /// Solutions of the whole system.
    pub full: SolutionSpace,
    /// Solutions of the pentagon alone.
    pub pentagon_only: SolutionSpace,
    /// Solutions of the hexagons alone.
    pub without_pentagon: SolutionSpace,
    /// Maps of the form `g -> h(target(g)) - h(source(g))` for an object
    /// labelling `h` with `h((12)) = (p, q)`: these are naturally isomorphic
    /// to the trivial map.
    pub coboundaries: SolutionSpace,
    /// Dimension of the solution space modulo coboundaries.
    pub dim_modulo_coboundaries: usize,
}

impl TwistSystem {
    pub fn only_zero(&self) -> bool {
        self.full.is_zero()
    }
}

/// Sets up and solves the hexagon and pentagon equations in `T`.
pub fn solve_maps_to_t() -> Result<TwistSystem> {
    let op = TwistOperad::<LinearForm>::new();
    let v = LinearForm::var;
    let data = MapData {
        m: 2usize,
        beta: vec![v(0), v(1)],
        alpha: vec![v(2), v(3), v(4)],
        tau: None,
        unital: false,
    };
    let mut equations = Vec::new();
    for (name, lhs, rhs) in coherence_diagrams() {
        let l = data.evaluate_path(&op, &lhs)?;
        let r = data.evaluate_path(&op, &rhs)?;
        for (i, (a, b)) in l.into_iter().zip(r).enumerate() {
            let d = a + -b;
            if !d.is_zero() {
                equations.push(Equation {
                    diagram: name,
                    component: i + 1,
                    coefficients: d.0,
                });
            }
        }
    }
    let rows = |pred: &dyn Fn(&str) -> bool| -> Vec<[i64; 5]> {
        equations
            .iter()
            .filter(|e| pred(e.diagram))
            .map(|e| e.coefficients)
            .collect()
    };
    let full = kernel(&rows(&|_| true));
    let pentagon_only = kernel(&rows(&|d| d == "pentagon"));
    let without_pentagon = kernel(&rows(&|d| d != "pentagon"));

    // coboundary maps: generated by h((12)) = (1, 0) and (0, 1)
    let mut gauge = Vec::new();
    for h in [vec![1i64, 0], vec![0, 1]] {
        let t = TwistOperad::<i64>::new();
        let swap = Permutation::transposition(2, 1)?;
        let beta = t.then(&t.inverse(&h), &t.act(&swap, &h)?)?;
        let left = t.compose_at(&h, 1, &h)?;
        let right = t.compose_at(&h, 2, &h)?;
        let alpha = t.then(&t.inverse(&left), &right)?;
        gauge.push([beta[0], beta[1], alpha[0], alpha[1], alpha[2]]);
    }
    // rank of the coboundary span, and of solutions plus coboundaries
    let span_rank = |vs: &[[i64; 5]]| 5 - kernel(vs).dim();
    let coboundary_rank = span_rank(&gauge);
    let mut joint = full.basis.clone();
    joint.extend(gauge.iter().copied());
    let dim_modulo = span_rank(&joint) - coboundary_rank;
    let coboundaries = SolutionSpace {
        rank: coboundary_rank,
        basis: gauge,
    };
    Ok(TwistSystem {
        equations,
        full,
        pentagon_only,
        without_pentagon,
        coboundaries,
        dim_modulo_coboundaries: dim_modulo,
    })
}

impl fmt::Display for TwistSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "equations (beta -> (x, y), alpha -> (a, b, c)):")?;
        for e in &self.equations {
            writeln!(f, "  {} [{}]: {} = 0", e.diagram, e.component, LinearForm(e.coefficients))?;
        }
        let show = |s: &SolutionSpace| -> String {
            if s.is_zero() {
                "{0}".to_string()
            } else {
                format!("span of {:?}", s.basis)
            }
        };
        writeln!(f, "solutions: {}", show(&self.full))?;
        writeln!(f, "pentagon alone forces b = 0: {}", self.pentagon_only.forces_zero(3))?;
        writeln!(f, "solutions without the pentagon: {}", show(&self.without_pentagon))?;
        write!(f, "dimension modulo coboundaries: {}", self.dim_modulo_coboundaries)
    }
}
