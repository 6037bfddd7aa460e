use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use gtbraid::braid::normal_form;
use gtbraid::coherence::factorize;
use gtbraid::gt::{check_map_data, check_relations, gt_mul, solve_maps_to_t, GTPair, GtAction, build_endomorphism_in};
use gtbraid::operads::{axioms_fuzz, BraidOperad, FuzzInstance, Instance, MorphismRecord, TwistRule};
use gtbraid::quotients::{tower_check_iii, QuotientMap};
use gtbraid::{braid_equal, ribbon_equal, BraidWord, Error, OperadMorphism, ParenTree, Permutation, RibbonBraid};

#[derive(Parser)]
#[command(name = "gtbraid", version, about = "Braid and ribbon braid operads, and the Grothendieck-Teichmuller action")]
struct Cli {
    /// Structured (JSON) output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a braid word, or of a ribbon braid `w | t1,..,tn`.
    Normalize {
        /// Strand count (braid words only).
        #[arg(long)]
        n: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Decide equality of two braids (or ribbon braids).
    Eq {
        #[arg(long)]
        n: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Operadic composition `a o_k b` of two morphisms given as JSON records.
    Compose {
        #[arg(long)]
        instance: Option<String>,
        #[arg(long)]
        at: usize,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Replace strand `at` of a braid by `m` parallel strands.
    Cable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        at: usize,
        #[arg(long)]
        m: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Graft tree `s` at leaf `k` of tree `t`.
    Magma { t: String, k: usize, s: String },
    /// Compose permutations in the symmetric operad.
    Sigma {
        /// `t k s`: computes `t o_k s`.
        #[arg(long, num_args = 3, value_names = ["T", "K", "S"])]
        compose: Vec<String>,
    },
    /// Grothendieck-Teichmuller pairs.
    Gt {
        #[command(subcommand)]
        command: GtCommand,
    },
    /// Randomized check of the operad axioms.
    Fuzz {
        /// t, cob, corb, pab, parb, pab+, parb+ or parb*.
        #[arg(long)]
        instance: String,
        #[arg(long, default_value_t = 4)]
        arity: usize,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum letters per random braid.
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Use the wrong twist rule (tail filled with the last inner twist).
        #[arg(long)]
        mutate: bool,
    },
    /// Image of a braid (or ribbon braid) in a finite quotient.
    Quotient {
        /// sym, ab, burau:N:k or twist:N.
        #[arg(long)]
        spec: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// The linear system for maps from PaB to the twist operad.
    SolveT,
    /// Coherence factorization of a morphism given as a JSON record.
    Factorize { morphism: String },
}

#[derive(Subcommand)]
enum GtCommand {
    /// Check relations I-III for `lambda;f`.
    Check {
        #[arg(allow_hyphen_values = true)]
        pair: String,
        /// Also check the hexagons and pentagon of the attached map data.
        #[arg(long)]
        diagrams: bool,
    },
    /// Product of two pairs.
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Apply the endomorphism of a pair to a morphism (JSON record).
    Act {
        #[arg(allow_hyphen_values = true)]
        pair: String,
        morphism: String,
    },
    /// Check relation III in finite quotients of B(4).
    Tower {
        /// The word f over x y X Y.
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long, value_delimiter = ',', default_value = "sym,ab,burau:3:2,burau:2:4,burau:5:3")]
        levels: Vec<String>,
    },
}

/// A failure with the argument it came from.
struct CliError {
    argument: String,
    error: Error,
}

type CliResult<T> = Result<T, CliError>;

fn at<T>(argument: &str, r: gtbraid::Result<T>) -> CliResult<T> {
    r.map_err(|error| CliError {
        argument: argument.to_string(),
        error,
    })
}

enum Braidish {
    Braid(BraidWord),
    Ribbon(RibbonBraid),
}

fn parse_braidish(name: &str, text: &str, n: Option<usize>) -> CliResult<Braidish> {
    if text.contains('|') {
        let r = at(name, RibbonBraid::parse(text))?;
        if let Some(n) = n {
            if n != r.strands() {
                return at(name, Err(Error::StrandMismatch { left: n, right: r.strands() }));
            }
        }
        Ok(Braidish::Ribbon(r))
    } else {
        let n = n.ok_or_else(|| CliError {
            argument: name.to_string(),
            error: Error::parse(1, "braid words need --n"),
        })?;
        Ok(Braidish::Braid(at(name, BraidWord::parse(n, text))?))
    }
}

fn parse_morphism(name: &str, text: &str, instance: Option<&str>) -> CliResult<OperadMorphism> {
    let mut record: MorphismRecord = serde_json::from_str(text).map_err(|e| CliError {
        argument: name.to_string(),
        error: Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        },
    })?;
    if let Some(i) = instance {
        record.instance = i.to_string();
    }
    at(name, OperadMorphism::try_from(&record))
}

struct Output {
    json: bool,
}

impl Output {
    fn emit<T: Serialize>(&self, plain: impl std::fmt::Display, value: &T) {
        if self.json {
            println!("{}", serde_json::to_string(value).expect("serializable"));
        } else {
            println!("{plain}");
        }
    }
}

fn verdict(b: bool) -> ExitCode {
    if b {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[derive(Serialize)]
struct NormalFormOut {
    strands: usize,
    delta_power: i64,
    factors: Vec<Vec<usize>>,
    word: String,
    twists: Option<Vec<i64>>,
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let out = Output { json: cli.json };
    match cli.command {
        Command::Normalize { n, word } => {
            let (braid, twists) = match parse_braidish("word", &word, n)? {
                Braidish::Braid(b) => (b, None),
                Braidish::Ribbon(r) => (r.braid().clone(), Some(r.twists().to_vec())),
            };
            let nf = normal_form(&braid);
            let w = nf.to_word();
            let plain = match &twists {
                Some(t) => RibbonBraid::new(w.clone(), t.clone()).expect("same strands").to_string(),
                None => w.to_string(),
            };
            out.emit(
                &plain,
                &NormalFormOut {
                    strands: nf.strands,
                    delta_power: nf.delta_power,
                    factors: nf.factors.iter().map(|f| f.iter().map(|p| p + 1).collect()).collect(),
                    word: w.to_string(),
                    twists,
                },
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Eq { n, a, b } => {
            let eq = match (parse_braidish("a", &a, n)?, parse_braidish("b", &b, n)?) {
                (Braidish::Braid(x), Braidish::Braid(y)) => at("b", braid_equal(&x, &y))?,
                (Braidish::Ribbon(x), Braidish::Ribbon(y)) => at("b", ribbon_equal(&x, &y))?,
                (Braidish::Braid(x), Braidish::Ribbon(y)) => at("b", ribbon_equal(&RibbonBraid::from_braid(x), &y))?,
                (Braidish::Ribbon(x), Braidish::Braid(y)) => at("b", ribbon_equal(&x, &RibbonBraid::from_braid(y)))?,
            };
            out.emit(eq, &eq);
            Ok(verdict(eq))
        }
        Command::Compose { instance, at: k, a, b } => {
            let a = parse_morphism("a", &a, instance.as_deref())?;
            let b = parse_morphism("b", &b, instance.as_deref())?;
            let c = at("--at", a.compose_at(k, &b))?;
            out.emit(&c, &MorphismRecord::from(&c));
            Ok(ExitCode::SUCCESS)
        }
        Command::Cable { n, at: k, m, word } => {
            let w = at("word", BraidWord::parse(n, &word))?;
            let c = at("--at", w.cable(k, m))?;
            out.emit(&c, &c.letters());
            Ok(ExitCode::SUCCESS)
        }
        Command::Magma { t, k, s } => {
            let t: ParenTree = at("t", t.parse())?;
            let s: ParenTree = at("s", s.parse())?;
            let c = at("k", t.compose_at(k, &s))?;
            out.emit(format!("{c:#}"), &format!("{c:#}"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sigma { compose } => {
            if compose.len() != 3 {
                return at("--compose", Err(Error::parse(1, "expected `--compose T K S`")));
            }
            let t: Permutation = at("T", compose[0].parse())?;
            let k: usize = compose[1].parse().map_err(|_| CliError {
                argument: "K".into(),
                error: Error::parse(1, format!("expected a slot number, found {:?}", compose[1])),
            })?;
            let s: Permutation = at("S", compose[2].parse())?;
            let c = at("K", t.compose_at(k, &s))?;
            out.emit(&c, &c.one_line());
            Ok(ExitCode::SUCCESS)
        }
        Command::Gt { command } => run_gt(command, &out),
        Command::Fuzz {
            instance,
            arity,
            trials,
            seed,
            max_len,
            mutate,
        } => {
            let inst: FuzzInstance = at("--instance", instance.parse())?;
            let rule = if mutate { TwistRule::TailOfInner } else { TwistRule::Block };
            let report = axioms_fuzz(inst, arity, max_len, trials, seed, rule);
            out.emit(report.to_string().trim_end(), &report);
            Ok(verdict(report.passed()))
        }
        Command::Quotient { spec, n, word } => {
            let r = match parse_braidish("word", &word, n)? {
                Braidish::Braid(b) => RibbonBraid::from_braid(b),
                Braidish::Ribbon(r) => r,
            };
            let q = at("--spec", QuotientMap::parse(&spec, r.strands()))?;
            let v = at("word", q.eval(&r))?;
            out.emit(&v, &v);
            Ok(ExitCode::SUCCESS)
        }
        Command::SolveT => {
            let sys = at("solve-t", solve_maps_to_t())?;
            out.emit(&sys, &sys);
            Ok(ExitCode::SUCCESS)
        }
        Command::Factorize { morphism } => {
            let m = parse_morphism("morphism", &morphism, None)?;
            let p = at("morphism", factorize(&m))?;
            out.emit(&p, &p);
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(Serialize)]
struct CheckOut {
    pair: String,
    relations: gtbraid::gt::RelationReport,
    diagrams: Option<gtbraid::gt::MapDataReport>,
}

fn run_gt(command: GtCommand, out: &Output) -> CliResult<ExitCode> {
    match command {
        GtCommand::Check { pair, diagrams } => {
            let p: GTPair = at("pair", pair.parse())?;
            let relations = at("pair", check_relations(&p))?;
            let diagrams = if diagrams {
                let data = at("pair", build_endomorphism_in(&p, Instance::PaRB))?;
                Some(at("pair", check_map_data(&data, &BraidOperad::new(Instance::PaRB)))?)
            } else {
                None
            };
            let mut plain = relations.to_string();
            if let Some(d) = &diagrams {
                plain = format!("{plain}\n{d}");
            }
            let ok = relations.all() && diagrams.is_none_or(|d| d.all());
            out.emit(
                plain,
                &CheckOut {
                    pair: p.to_string(),
                    relations,
                    diagrams,
                },
            );
            Ok(verdict(ok))
        }
        GtCommand::Mul { a, b } => {
            let a: GTPair = at("a", a.parse())?;
            let b: GTPair = at("b", b.parse())?;
            let c = at("b", gt_mul(&a, &b))?;
            out.emit(&c, &c.to_string());
            Ok(ExitCode::SUCCESS)
        }
        GtCommand::Act { pair, morphism } => {
            let p: GTPair = at("pair", pair.parse())?;
            let m = parse_morphism("morphism", &morphism, None)?;
            let mut action = at("pair", GtAction::new(&p, m.instance()))?;
            let img = at("morphism", action.apply(&m))?;
            out.emit(&img, &MorphismRecord::from(&img));
            Ok(ExitCode::SUCCESS)
        }
        GtCommand::Tower { f, levels } => {
            let f = at("f", f.parse())?;
            let qs = levels
                .iter()
                .map(|s| at("--levels", QuotientMap::parse(s, 4)))
                .collect::<CliResult<Vec<_>>>()?;
            let report = at("f", tower_check_iii(&f, &qs))?;
            out.emit(&report, &report);
            Ok(verdict(report.not_refuted()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError { argument, error }) => {
            eprintln!("error: in argument `{argument}`: {error}");
            ExitCode::from(2)
        }
    }
}
