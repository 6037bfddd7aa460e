//! Acceptance suite: one line per criterion.
//!
//! Run with `cargo test -p gtbraid --test acceptance`. Criteria listed in
//! `KNOWN_FAILURES` are printed as FAIL with the reason and do not change the
//! exit status; any other failure (or a known failure that starts passing)
//! does.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gtbraid::braid::{braid_equal, full_twist, normal_form, pure_generator, BraidWord, FreeGroupWord};
use gtbraid::coherence::{apply_map, rotation_path, CoherencePath, MapData, Move, Rotation};
use gtbraid::gt::{
    apply_gt, build_endomorphism, build_endomorphism_in, check_i, check_ii, check_iii, check_map_data, gt_mul,
    solve_maps_to_t, GTPair, GtAction,
};
use gtbraid::operads::{
    axioms_fuzz, magma_compose, sigma_compose, star_forget, unital_compose, BraidOperad, FuzzInstance, Instance,
    Object, OperadMorphism, ParenTree, Sample, Side, TwistRule,
};
use gtbraid::quotients::{tower_check_iii, QuotientMap};
use gtbraid::{Permutation, RibbonBraid};

/// Wall-clock budget for each exact regression.
const REGRESSION_BUDGET: Duration = Duration::from_secs(1);
/// Budget for the three fuzz runs together.
const FUZZ_BUDGET: Duration = Duration::from_secs(60);
/// Budget per candidate for relation III.
const RELATION_III_BUDGET: Duration = Duration::from_secs(10);

const FUZZ_TRIALS: usize = 500;
const FUZZ_ARITY: usize = 4;
const FUZZ_WORD_LEN: usize = 8;
const ROUND_TRIP_SAMPLES: usize = 200;
const ACTION_SAMPLES: usize = 100;
const QUOTIENT_PAIRS: usize = 500;
const SEED: u64 = 20_240_611;

/// Criteria whose literal statement does not hold, with the reason.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    8,
    "the integer solution set is the rank-2 lattice of coboundary maps g -> h(target) - h(source); \
     it is zero only modulo these natural isomorphisms to the trivial map",
)];

type Outcome = Result<String, String>;
type Criterion = (usize, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn tree(s: &str) -> ParenTree {
    s.parse().unwrap()
}

fn obj(s: &str) -> Object {
    Object::Tree(tree(s))
}

fn w(n: usize, l: &[i32]) -> BraidWord {
    BraidWord::new(n, l.iter().copied()).unwrap()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn timed(budget: Duration, what: &str, f: impl FnOnce() -> Result<(), String>) -> Result<Duration, String> {
    let t = Instant::now();
    f()?;
    let el = t.elapsed();
    ensure(el < budget, format!("{what} took {el:?}, budget {budget:?}"))?;
    Ok(el)
}

fn criterion_1() -> Outcome {
    let b = REGRESSION_BUDGET;
    timed(b, "sigma", || {
        ensure(e(sigma_compose(&perm("132"), 2, &perm("12")))? == perm("1423"), "(132) o2 (12) != (1423)")
    })?;
    timed(b, "magma", || {
        let c = e(magma_compose(&tree("(1(34))(25)"), 4, &tree("(13)2")))?;
        ensure(c == tree("(1(3((46)5)))(27)"), format!("magma example gave {c:#}"))
    })?;
    timed(b, "star forget", || {
        let c = e(star_forget(&tree("((∗(1∗))((∗∗)(32)))")))?;
        ensure(c == tree("(1(32))"), format!("star forget gave {c:#}"))
    })?;
    timed(b, "Artin relations", || {
        ensure(e(braid_equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])))?, "braid relation")?;
        ensure(e(braid_equal(&w(4, &[1, 3]), &w(4, &[3, 1])))?, "far commutation")
    })?;
    timed(b, "strand deletion", || {
        let inst = Instance::PaBPlus;
        let beta = e(OperadMorphism::new(inst, obj("(12)"), obj("(21)"), e("1 | 0,0".parse())?))?;
        let id_m = e(OperadMorphism::identity(inst, obj("(12)")))?;
        let beta1 = BraidWord::new(2, [1]).unwrap();

        let a = e(id_m.compose_at(1, &beta))?;
        let d = e(unital_compose(&a, 2))?;
        ensure(d.braid().is_empty(), format!("d2(m o1 beta) = {}", d.braid()))?;

        let b2 = e(id_m.compose_at(2, &beta).and_then(|x| x.act(&perm("213"))))?;
        let d = e(unital_compose(&b2, 2))?;
        ensure(d.braid() == &beta1, format!("d2((213) m o2 beta) = {}", d.braid()))?;

        let c = e(beta.compose_at(2, &id_m))?;
        let d = e(unital_compose(&c, 2))?;
        ensure(d.braid() == &beta1, format!("d2(beta o2 m) = {}", d.braid()))
    })?;
    Ok("sigma, magma, star-forget, Artin and strand-deletion values reproduced".into())
}

fn criterion_2() -> Outcome {
    let inst = Instance::CoRB;
    let p = |s: &str| Object::Perm(perm(s));
    let tau = e(OperadMorphism::new(inst, p("1"), p("1"), e("| 1".parse())?))?;
    let id2 = e(OperadMorphism::identity(inst, p("12")))?;
    let c = e(tau.compose_at(1, &id2))?;
    let expected: RibbonBraid = e("1 1 | 1,1".parse())?;
    ensure(c.payload() == &expected, format!("(id,[1]) o1 (id,[0,0]) = {}", c.payload()))?;
    for m in 1..=5 {
        let r = e(full_twist(m))?;
        for i in 1..m as i32 {
            let g = w(m, &[i]);
            ensure(
                e(braid_equal(&e(r.concat(&g))?, &e(g.concat(&r))?))?,
                format!("R_{m} does not commute with b{i}"),
            )?;
        }
    }
    Ok("(id,[1]) o1 (id,[0,0]) = (b1^2,[1,1]); R_m central for m <= 5".into())
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let mut checks = 0;
    for inst in [FuzzInstance::Twist, FuzzInstance::Braid(Instance::CoRB), FuzzInstance::Braid(Instance::PaRB)] {
        let r = axioms_fuzz(inst, FUZZ_ARITY, FUZZ_WORD_LEN, FUZZ_TRIALS, SEED, TwistRule::Block);
        ensure(r.passed(), format!("{r}"))?;
        checks += r.checks;
    }
    let el = t.elapsed();
    ensure(el < FUZZ_BUDGET, format!("fuzzing took {el:?}"))?;
    let mutant = axioms_fuzz(FuzzInstance::Braid(Instance::CoRB), FUZZ_ARITY, FUZZ_WORD_LEN, FUZZ_TRIALS, SEED, TwistRule::TailOfInner);
    ensure(!mutant.passed(), "the tail-of-inner twist rule passed the fuzzer")?;
    Ok(format!(
        "T, CoRB, PaRB: {checks} checks over {FUZZ_TRIALS} trials each, 0 failures in {el:.1?}; tail-of-inner rule: {} failures",
        mutant.failures.len()
    ))
}

/// Free reduction with a stack, independent of the library.
fn reduce(letters: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn inv(v: &[i32]) -> Vec<i32> {
    v.iter().rev().map(|l| -l).collect()
}

fn subst(f: &[i32], a: &[i32], b: &[i32]) -> Vec<i32> {
    let mut out = Vec::new();
    for &l in f {
        match l {
            1 => out.extend_from_slice(a),
            -1 => out.extend(inv(a)),
            2 => out.extend_from_slice(b),
            _ => out.extend(inv(b)),
        }
    }
    out
}

fn power(v: &[i32], m: i64) -> Vec<i32> {
    let base = if m < 0 { inv(v) } else { v.to_vec() };
    (0..m.unsigned_abs()).flat_map(|_| base.clone()).collect()
}

fn words_up_to(len: usize) -> Vec<Vec<i32>> {
    let mut all = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for wd in &frontier {
            for l in [1, 2, -1, -2] {
                if wd.last() != Some(&-l) {
                    let mut v: Vec<i32> = wd.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

fn criterion_4() -> Outcome {
    let fw = |s: &str| -> FreeGroupWord { s.parse().unwrap() };
    for l in [1, -1] {
        ensure(check_i(&fw("")) && e(check_ii(l, &fw("")))? && e(check_iii(&fw("")))?, format!("({l}, e) fails"))?;
    }
    ensure(!e(check_ii(3, &fw("")))?, "(3, e) passes II")?;

    let (x, y) = (vec![1], vec![2]);
    let z = vec![-2, -1];
    let mut compared = 0;
    for f in words_up_to(4) {
        let word = FreeGroupWord::new(2, f.clone()).unwrap();
        let i = reduce([subst(&f, &x, &y), subst(&f, &y, &x)].concat()).is_empty();
        ensure(check_i(&word) == i, format!("check_I disagrees on {word}"))?;
        for lambda in [-3i64, -1, 1, 3, 5] {
            let m = (lambda - 1) / 2;
            let ii = reduce(
                [
                    subst(&f, &z, &x),
                    power(&z, m),
                    subst(&f, &y, &z),
                    power(&y, m),
                    subst(&f, &x, &y),
                    power(&x, m),
                ]
                .concat(),
            )
            .is_empty();
            ensure(e(check_ii(lambda, &word))? == ii, format!("check_II disagrees on ({lambda}, {word})"))?;
            compared += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut slowest = Duration::ZERO;
    for _ in 0..20 {
        let len = rng.gen_range(0..=8);
        let letters: Vec<i32> = (0..len).map(|_| [1, 2, -1, -2][rng.gen_range(0..4)]).collect();
        let f = FreeGroupWord::new(2, letters).unwrap();
        let t = Instant::now();
        e(check_iii(&f))?;
        let el = t.elapsed();
        ensure(el < RELATION_III_BUDGET, format!("check_III({f}) took {el:?}"))?;
        slowest = slowest.max(el);
    }
    Ok(format!(
        "(+-1,e) pass, (3,e) fails II; {compared} I/II verdicts match stack reduction; slowest III {slowest:.1?}"
    ))
}

fn criterion_5() -> Outcome {
    let pool = ["1;", "-1;", "3;", "-3;", "1;xyXY", "-1;xyXY", "3;xyXY", "-3;xyXY"];
    let op = BraidOperad::new(Instance::PaB);
    for s in pool {
        let p: GTPair = e(s.parse())?;
        let l = match p.lambda {
            gtbraid::gt::Lambda::Exact(l) => l,
            _ => unreachable!(),
        };
        let rel12 = check_i(&p.f) && e(check_ii(l, &p.f))?;
        let rel3 = e(check_iii(&p.f))?;
        let d = e(check_map_data(&e(build_endomorphism(&p))?, &op))?;
        ensure(rel12 == d.hexagons(), format!("{s}: I and II = {rel12}, hexagons = {}", d.hexagons()))?;
        ensure(rel3 == d.pentagon, format!("{s}: III = {rel3}, pentagon = {}", d.pentagon))?;
    }
    Ok(format!("I and II <=> hexagons, III <=> pentagon on all {} pairs", pool.len()))
}

fn neighbours(t: &ParenTree) -> Vec<(Move, ParenTree)> {
    fn nodes(t: &ParenTree, prefix: Vec<Side>, out: &mut Vec<Vec<Side>>) {
        if let ParenTree::Node(a, b) = t {
            out.push(prefix.clone());
            let mut l = prefix.clone();
            l.push(Side::Left);
            nodes(a, l, out);
            let mut r = prefix;
            r.push(Side::Right);
            nodes(b, r, out);
        }
    }
    let mut paths = Vec::new();
    nodes(t, Vec::new(), &mut paths);
    let mut out = Vec::new();
    for p in paths {
        for dir in [Rotation::Right, Rotation::Left] {
            let mv = Move::Assoc { node: p.clone(), dir };
            if let Ok(next) = mv.apply(t) {
                out.push((mv, next));
            }
        }
    }
    out
}

/// Every simple path of rotations from `p` to `q`.
fn simple_paths(p: &ParenTree, q: &ParenTree) -> Vec<CoherencePath> {
    fn go(cur: &ParenTree, q: &ParenTree, seen: &mut Vec<ParenTree>, moves: &mut Vec<Move>, out: &mut Vec<Vec<Move>>) {
        if cur == q {
            out.push(moves.clone());
            return;
        }
        for (mv, next) in neighbours(cur) {
            if !seen.contains(&next) {
                seen.push(next.clone());
                moves.push(mv);
                go(&next, q, seen, moves, out);
                moves.pop();
                seen.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(p, q, &mut vec![p.clone()], &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|moves| CoherencePath {
            source: p.clone(),
            moves,
        })
        .collect()
}

fn criterion_6() -> Outcome {
    let inst = Instance::PaRB;
    let op = BraidOperad::new(inst);
    let canonical = e(MapData::canonical(inst))?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..ROUND_TRIP_SAMPLES {
        let arity = rng.gen_range(1..=5);
        let m = op.random(&mut rng, arity, 10);
        let img = e(apply_map(&m, &canonical, &op))?;
        ensure(e(img.equals(&m))?, format!("sample {i}: {m} came back as {img}"))?;
    }

    let mut compared = 0;
    let data_sets = [
        (Instance::PaB, e(MapData::canonical(Instance::PaB))?),
        (Instance::PaB, e(build_endomorphism(&GTPair::new(-1, FreeGroupWord::identity(2))))?),
        (Instance::PaRB, canonical.clone()),
        (Instance::PaRB, e(build_endomorphism_in(&GTPair::new(-1, FreeGroupWord::identity(2)), Instance::PaRB))?),
    ];
    for word in [[1, 2, 3, 4], [3, 1, 4, 2]] {
        let trees = ParenTree::all_bracketings(&word);
        for p in &trees {
            for q in &trees {
                let paths = simple_paths(p, q);
                for (inst, data) in &data_sets {
                    let op = BraidOperad::new(*inst);
                    let reference = e(data.evaluate_path(&op, &e(rotation_path(p, q))?))?;
                    for path in &paths {
                        let img = e(data.evaluate_path(&op, path))?;
                        ensure(e(img.equals(&reference))?, format!("path {path} differs from rotation_path"))?;
                        compared += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{ROUND_TRIP_SAMPLES} PaRB round trips exact; {compared} arity-4 Tamari paths agree under 4 coherent data sets"
    ))
}

fn criterion_7() -> Outcome {
    let x12 = e(OperadMorphism::new(Instance::PaB, obj("(12)"), obj("(12)"), e("1 1 | 0,0".parse())?))?;
    let img = e(apply_gt(&GTPair::new(3, FreeGroupWord::identity(2)), &x12))?;
    ensure(e(braid_equal(img.braid(), &e(pure_generator(2, 1, 2))?.pow(3)))?, format!("got {}", img.braid()))?;

    let eps = FreeGroupWord::identity(2);
    let commutator = FreeGroupWord::commutator_xy();
    // pairs satisfying the relations act in every arity; the others only
    // up to arity two, where factorizations are unique
    let passing = [GTPair::new(1, eps.clone()), GTPair::new(-1, eps.clone())];
    let low = [
        GTPair::new(3, eps.clone()),
        GTPair::new(-3, commutator.clone()),
        GTPair::new(5, commutator),
        GTPair::new(-1, eps),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    for i in 0..ACTION_SAMPLES {
        let inst = if i % 2 == 0 { Instance::PaRB } else { Instance::PaB };
        let op = BraidOperad::new(inst);
        let arity = rng.gen_range(1..=4);
        let pool: &[GTPair] = if arity <= 2 { &low } else { &passing };
        let a = &pool[rng.gen_range(0..pool.len())];
        let b = &pool[rng.gen_range(0..pool.len())];
        let m = op.random(&mut rng, arity, 8);
        let mut act_a = e(GtAction::new(a, inst))?;
        let mut act_b = e(GtAction::new(b, inst))?;
        let ab = e(gt_mul(a, b))?;
        let img = e(act_b.apply(&m))?;
        ensure(img.source() == m.source() && img.target() == m.target(), format!("{m} moved its objects"))?;
        let lambda = match b.lambda {
            gtbraid::gt::Lambda::Exact(l) => l,
            _ => unreachable!(),
        };
        let scaled: Vec<i64> = m.payload().twists().iter().map(|t| t * lambda).collect();
        ensure(img.payload().twists() == scaled.as_slice(), format!("twists of {m} not scaled by {lambda}"))?;
        let lhs = e(GtAction::new(&ab, inst).and_then(|mut g| g.apply(&m)))?;
        let rhs = e(act_a.apply(&img))?;
        ensure(e(lhs.equals(&rhs))?, format!("({a})*({b}) on {m}: {lhs} vs {rhs}"))?;

        let zero = e(OperadMorphism::new(
            inst,
            m.source().clone(),
            m.target().clone(),
            RibbonBraid::from_braid(m.braid().clone()),
        ))?;
        let zero_img = e(act_a.apply(&zero))?;
        ensure(zero_img.payload().twists().iter().all(|&t| t == 0), "zero twists not preserved")?;
    }
    Ok(format!("x12 -> x12^3; {ACTION_SAMPLES} samples fix objects, scale twists, compose per gt_mul, keep PaB"))
}

fn criterion_8() -> Outcome {
    let sys = e(solve_maps_to_t())?;
    ensure(sys.pentagon_only.forces_zero(3), "the pentagon alone does not force b = 0")?;
    ensure(
        sys.dim_modulo_coboundaries == 0,
        format!("{} solutions beyond coboundaries", sys.dim_modulo_coboundaries),
    )?;
    ensure(
        sys.only_zero(),
        format!(
            "solution set is spanned by {:?} (pentagon alone forces b = 0; zero modulo coboundaries)",
            sys.full.basis
        ),
    )?;
    Ok("only the zero solution; the pentagon alone forces b = 0".into())
}

fn rewrite(rng: &mut ChaCha8Rng, word: &[i32], n: usize) -> Vec<i32> {
    let mut v = word.to_vec();
    for _ in 0..6 {
        let len = v.len();
        match rng.gen_range(0..4) {
            // b_i b_j b_i -> b_j b_i b_j, |i - j| = 1, for both signs
            0 if len >= 3 => {
                let p = rng.gen_range(0..len - 2);
                let (a, b, c) = (v[p], v[p + 1], v[p + 2]);
                if a == c && a.signum() == b.signum() && (a - b).abs() == 1 {
                    v[p] = b;
                    v[p + 1] = a;
                    v[p + 2] = b;
                }
            }
            // far commutation
            1 if len >= 2 => {
                let p = rng.gen_range(0..len - 1);
                if (v[p].abs() - v[p + 1].abs()).abs() >= 2 {
                    v.swap(p, p + 1);
                }
            }
            // insert a cancelling pair
            2 if n >= 2 => {
                let p = rng.gen_range(0..=len);
                let i = rng.gen_range(1..n as i32) * if rng.gen_bool(0.5) { 1 } else { -1 };
                v.splice(p..p, [i, -i]);
            }
            // insert b_i b_{i+1} b_i (b_{i+1} b_i b_{i+1})^-1
            _ if n >= 3 => {
                let p = rng.gen_range(0..=len);
                let i = rng.gen_range(1..n as i32 - 1);
                v.splice(p..p, [i, i + 1, i, -(i + 1), -i, -(i + 1)]);
            }
            _ => {}
        }
    }
    v
}

fn criterion_9() -> Outcome {
    let specs = ["sym", "ab", "burau:3:2", "burau:5:3", "burau:2:4", "burau:7:1", "twist:4"];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    for i in 0..QUOTIENT_PAIRS {
        let n = rng.gen_range(2..=5);
        let len = rng.gen_range(0..=12);
        let letters: Vec<i32> = (0..len)
            .map(|_| rng.gen_range(1..n as i32) * if rng.gen_bool(0.5) { 1 } else { -1 })
            .collect();
        let a = BraidWord::new(n, letters.clone()).unwrap();
        let b = if i % 2 == 0 {
            normal_form(&a).to_word()
        } else {
            BraidWord::new(n, rewrite(&mut rng, &letters, n)).unwrap()
        };
        ensure(e(braid_equal(&a, &b))?, format!("rewriting changed the braid: {a} vs {b}"))?;
        let twists: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        let ra = e(RibbonBraid::new(a.clone(), twists.clone()))?;
        let rb = e(RibbonBraid::new(b.clone(), twists))?;
        for s in specs {
            let q = e(QuotientMap::parse(s, n))?;
            ensure(e(q.eval(&ra))? == e(q.eval(&rb))?, format!("{s} separates {ra} and {rb}"))?;
        }
    }
    let levels: Vec<QuotientMap> = specs.iter().map(|s| QuotientMap::parse(s, 4).unwrap()).collect();
    let eps = FreeGroupWord::identity(2);
    ensure(e(check_iii(&eps))?, "III fails for the empty word")?;
    let report = e(tower_check_iii(&eps, &levels))?;
    ensure(report.not_refuted(), report.to_string())?;
    Ok(format!("{QUOTIENT_PAIRS} equal pairs agree in {} quotients; epsilon {report}", specs.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "exact regressions", criterion_1),
        (2, "CoRB composition and central full twists", criterion_2),
        (3, "operad axiom fuzz", criterion_3),
        (4, "GT relations", criterion_4),
        (5, "relations vs hexagons and pentagon", criterion_5),
        (6, "coherence engine", criterion_6),
        (7, "GT action", criterion_7),
        (8, "rigidity of T", criterion_8),
        (9, "quotient soundness", criterion_9),
    ];
    let mut unexpected = 0;
    for (n, name, run) in criteria {
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == n).map(|(_, why)| *why);
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let el = t.elapsed();
        match (outcome, known) {
            (Ok(msg), None) => println!("criterion {n} ({name}): PASS [{el:.1?}] {msg}"),
            (Ok(msg), Some(_)) => {
                unexpected += 1;
                println!("criterion {n} ({name}): PASS [{el:.1?}] {msg} -- listed as a known failure, update the list");
            }
            (Err(msg), Some(why)) => println!("criterion {n} ({name}): FAIL (known) [{el:.1?}] {msg}; {why}"),
            (Err(msg), None) => {
                unexpected += 1;
                println!("criterion {n} ({name}): FAIL [{el:.1?}] {msg}");
            }
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
