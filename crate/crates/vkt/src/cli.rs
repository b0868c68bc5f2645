use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use vkt_core::invariants::{
    affine_index_polynomial, definitions_agree, odd_wriggle_polynomial, vassiliev, wriggle_polynomial,
};
use vkt_core::labeling::{label_arcs, weight_table};
use vkt_core::linkdiag::smooth;
use vkt_core::mutation::{enumerate_block_pairs, mutate, mutation_detection_report, validate_blocks};
use vkt_core::transform::{
    self, connected_sum, crossing_change, family, find_bigons, find_kinks, r1_delete, r1_insert, r2_delete,
    r2_insert, r3_apply, r3_sites, random_move_walk, replay, trial_seed, FamilyBase, KinkOrder, Move,
    R2Orientation, R3Site, RandomWalkConfig,
};
use vkt_core::{
    BlockPair, BlockRange, CrossingId, GaussCode, MutationKind, OrderedTwoComponentLink, Parity, Passage, Sign,
};

use crate::error::CliError;
use crate::fixtures::{load_code, parse_link, read_input};
use crate::output::{Field, Format, Report};

#[derive(Debug, Parser)]
#[command(name = "vkt", version, about = "Invariants, moves and mutations of virtual knots given as signed Gauss codes")]
pub struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a code; print its canonical form.
    Parse {
        /// Code text, file, fixture name, or `-` for stdin.
        input: String,
    },
    /// Compute invariants of a knot, or linking numbers of a `first | second` link.
    Invariant(InvariantArgs),
    /// Apply a symmetry, local move or surgery.
    #[command(subcommand)]
    Transform(TransformOp),
    /// Apply a positive mutation and report whether the polynomial sees it.
    Mutate(MutateArgs),
    /// Seeded Reidemeister walks checking that the invariants never move.
    Fuzz(FuzzArgs),
    /// A member of the twisted mutant families.
    Family(FamilyArgs),
    /// Polynomials and detection results for both families up to a bound.
    Report(ReportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    Affine,
    Wriggle,
    OddWriggle,
}

impl PolyKind {
    fn name(self) -> &'static str {
        match self {
            PolyKind::Affine => "affine",
            PolyKind::Wriggle => "wriggle",
            PolyKind::OddWriggle => "odd-wriggle",
        }
    }
}

#[derive(Debug, Args)]
pub struct InvariantArgs {
    pub input: String,
    /// Polynomial invariant(s) to compute. Defaults to wriggle when nothing else is asked for.
    #[arg(long, value_enum)]
    pub poly: Vec<PolyKind>,
    #[arg(long)]
    pub odd_writhe: bool,
    #[arg(long)]
    pub writhe: bool,
    /// Vassiliev invariant of the given order.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub vassiliev: Vec<u32>,
    /// Arc labels and crossing weights.
    #[arg(long)]
    pub weights: bool,
    /// Label of the arc before position 0 when printing labels.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub start: i64,
    #[arg(long)]
    pub parity: bool,
    /// Recompute every weight by all three definitions and fail on disagreement.
    #[arg(long)]
    pub cross_check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Ou,
    Uo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PassageArg {
    Over,
    Under,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrientationArg {
    Same,
    Reversed,
}

#[derive(Debug, Subcommand)]
pub enum TransformOp {
    /// Switch every crossing.
    Mirror { input: String },
    /// Reverse the orientation.
    Reverse { input: String },
    /// Connected sum with a second code.
    Connsum {
        input: String,
        other: String,
        /// Cut position in the first code (default: its end).
        #[arg(long)]
        cut_a: Option<usize>,
        /// Cut position in the second code.
        #[arg(long, default_value_t = 0)]
        cut_b: usize,
    },
    /// Switch a single crossing.
    CrossingChange { input: String, crossing: String },
    /// Replace a crossing by three twisted crossings.
    Twist { input: String, crossing: String },
    /// Oriented smoothing at a crossing.
    Smooth { input: String, crossing: String },
    /// Insert a kink at a gap, delete one, or list the deletable ones.
    R1 {
        input: String,
        #[arg(long, conflicts_with = "remove")]
        at: Option<usize>,
        #[arg(long, value_parser = parse_sign, default_value = "+", allow_hyphen_values = true)]
        sign: Sign,
        #[arg(long, value_enum, default_value_t = OrderArg::Ou)]
        order: OrderArg,
        #[arg(long)]
        remove: Option<String>,
    },
    /// Insert a bigon between two gaps, delete one, or list the deletable ones.
    R2 {
        input: String,
        /// Two gap positions `a,b`.
        #[arg(long, value_parser = parse_pair, conflicts_with = "remove")]
        at: Option<(usize, usize)>,
        #[arg(long, value_parser = parse_sign, default_value = "+", allow_hyphen_values = true)]
        sign: Sign,
        #[arg(long, value_enum, default_value_t = PassageArg::Over)]
        passage: PassageArg,
        #[arg(long, value_enum, default_value_t = OrientationArg::Same)]
        orientation: OrientationArg,
        /// Two crossing labels `c1,c2`.
        #[arg(long)]
        remove: Option<String>,
    },
    /// Apply a triangle move at a site `i,j,k`, or list the sites.
    R3 {
        input: String,
        #[arg(long, value_parser = parse_triple)]
        site: Option<[usize; 3]>,
    },
    /// Apply a move log, one move per line.
    Moves {
        input: String,
        /// Log file, or `-` for stdin.
        #[arg(long, value_name = "LOG")]
        replay: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Reflection,
    Rotation,
}

#[derive(Debug, Args)]
pub struct MutateArgs {
    pub input: String,
    /// Zero-based inclusive cyclic ranges `a..b,c..d`. Without it, valid pairs are listed.
    #[arg(long, value_parser = parse_blocks)]
    pub blocks: Option<BlockSpec>,
    #[arg(long, value_enum, default_value_t = KindArg::Reflection)]
    pub kind: KindArg,
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    pub input: String,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 20)]
    pub steps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Insertions stop above this many crossings.
    #[arg(long, default_value_t = 24)]
    pub max_crossings: usize,
    /// Write the move log of every failing trial here.
    #[arg(long)]
    pub log_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_parser = parse_base)]
    pub base: FamilyBase,
    #[arg(long)]
    pub n: u32,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long, default_value_t = 15)]
    pub max_n: u32,
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+" | "plus" | "1" => Ok(Sign::Plus),
        "-" | "minus" | "-1" => Ok(Sign::Minus),
        _ => Err(format!("expected + or -, got {s:?}")),
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected a,b")?;
    Ok((a.trim().parse().map_err(|_| "bad position")?, b.trim().parse().map_err(|_| "bad position")?))
}

fn parse_triple(s: &str) -> Result<[usize; 3], String> {
    let v: Vec<usize> =
        s.split(',').map(|w| w.trim().parse::<usize>()).collect::<Result<_, _>>().map_err(|_| "bad position")?;
    v.try_into().map_err(|_| "expected i,j,k".to_string())
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or(format!("expected a..b, got {s:?}"))?;
    Ok((a.trim().parse().map_err(|_| "bad block start")?, b.trim().parse().map_err(|_| "bad block end")?))
}

/// Inclusive ranges `(first, last)` of the two blocks.
pub type BlockSpec = ((usize, usize), (usize, usize));

fn parse_blocks(s: &str) -> Result<BlockSpec, String> {
    let (a, b) = s.split_once(',').ok_or("expected a..b,c..d")?;
    Ok((parse_range(a)?, parse_range(b)?))
}

fn parse_base(s: &str) -> Result<FamilyBase, String> {
    FamilyBase::from_name(s).ok_or(format!("unknown family base {s:?}; expected K1, MK1, K2 or MK2"))
}

pub fn format_blocks(pair: &BlockPair, n: usize) -> String {
    format!("{}..{},{}..{}", pair.first.start, pair.first.last(n), pair.second.start, pair.second.last(n))
}

/// A finished command: what to print and the exit status.
pub struct Outcome {
    pub report: Report,
    pub failure: Option<String>,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, failure: None }
    }
}

/// Run the command line `args` (program name first). Returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.report.render(cli.format).as_bytes());
            match outcome.failure {
                Some(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    1
                }
                None => 0,
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Parse { input } => parse_cmd(input),
        Command::Invariant(a) => invariant_cmd(a),
        Command::Transform(op) => transform_cmd(op).map(Outcome::from),
        Command::Mutate(a) => mutate_cmd(a).map(Outcome::from),
        Command::Fuzz(a) => fuzz_cmd(a),
        Command::Family(a) => family_cmd(a).map(Outcome::from),
        Command::Report(a) => report_cmd(a).map(Outcome::from),
    }
}

fn valid_code(input: &str) -> Result<GaussCode, CliError> {
    let code = load_code(input)?;
    code.ensure_valid()?;
    Ok(code)
}

fn parse_cmd(input: &str) -> Result<Outcome, CliError> {
    let code = load_code(input)?;
    let validation = code.validate();
    let mut r = Report::new();
    r.push("code", Field::Code(code.clone()));
    r.push("crossings", Field::Int(code.crossings().len() as i64));
    r.push("valid", Field::Bool(validation.is_ok()));
    if validation.is_ok() {
        r.push("canonical", Field::Code(code.canonical_form()?));
        return Ok(r.into());
    }
    r.push("violations", Field::Lines(validation.violations.iter().map(|v| v.to_string()).collect()));
    Ok(Outcome { report: r, failure: Some(format!("{} validation violation(s)", validation.violations.len())) })
}

fn link_report(link: &OrderedTwoComponentLink) -> Report {
    Report::new()
        .with("link", Field::Link(link.clone()))
        .with("lk_over", Field::Int(link.lk_over()))
        .with("lk_under", Field::Int(link.lk_under()))
        .with("wriggle_number", Field::Int(link.wriggle_number()))
}

fn invariant_cmd(a: &InvariantArgs) -> Result<Outcome, CliError> {
    let text = read_input(&a.input)?;
    if text.contains('|') {
        return Ok(link_report(&parse_link(&text)?).into());
    }
    let code = crate::fixtures::parse_code(&text)?;
    code.ensure_valid()?;
    let mut polys = a.poly.clone();
    let nothing_else = !(a.odd_writhe || a.writhe || a.weights || a.parity || !a.vassiliev.is_empty());
    if polys.is_empty() && nothing_else {
        polys.push(PolyKind::Wriggle);
    }
    let mut r = Report::new();
    for kind in polys {
        let p = match kind {
            PolyKind::Affine => affine_index_polynomial(&code)?,
            PolyKind::Wriggle => wriggle_polynomial(&code)?,
            PolyKind::OddWriggle => odd_wriggle_polynomial(&code)?,
        };
        r.push(kind.name(), Field::Poly(p));
    }
    if a.writhe {
        r.push("writhe", Field::Int(code.writhe()?));
    }
    if a.odd_writhe {
        r.push("odd_writhe", Field::Int(code.odd_writhe()?));
    }
    for &n in &a.vassiliev {
        r.push(format!("v{n}"), Field::Rational(vassiliev(&code, n)?));
    }
    if a.weights {
        let labels = label_arcs(&code, a.start)?;
        let weights = weight_table(&code)?;
        r.push("labels", Field::Ints(labels.labels));
        r.push("weights", Field::IntMap(weights.iter().map(|(k, v)| (k.to_string(), *v)).collect()));
    }
    if a.parity {
        let parities: std::collections::BTreeMap<String, String> = code
            .chords()?
            .iter()
            .map(|ch| {
                let p = match ch.parity() {
                    Parity::Odd => "odd",
                    Parity::Even => "even",
                };
                (ch.id.to_string(), p.to_string())
            })
            .collect();
        r.push("parity", Field::TextMap(parities.into_iter().collect()));
    }
    let mut failure = None;
    if a.cross_check {
        let report = definitions_agree(&code)?;
        let mut g = Report::new().with("agree", Field::Bool(report.agree()));
        if !report.agree() {
            g.push("detail", Field::Text(report.to_string()));
            failure = Some(format!("weight definitions disagree: {report}"));
        }
        r.push("cross_check", Field::Group(g));
    }
    Ok(Outcome { report: r, failure })
}

fn crossing(code: &GaussCode, name: &str) -> Result<CrossingId, CliError> {
    let id = CrossingId::new(name);
    if !code.contains(&id) {
        return Err(vkt_core::Error::UnknownCrossing(id).into());
    }
    Ok(id)
}

fn code_report(code: GaussCode) -> Report {
    Report::new().with("code", Field::Code(code))
}

fn transform_cmd(op: &TransformOp) -> Result<Report, CliError> {
    Ok(match op {
        TransformOp::Mirror { input } => code_report(transform::mirror(&valid_code(input)?)),
        TransformOp::Reverse { input } => code_report(transform::reverse(&valid_code(input)?)),
        TransformOp::Connsum { input, other, cut_a, cut_b } => {
            let a = valid_code(input)?;
            let b = valid_code(other)?;
            code_report(connected_sum(&a, &b, cut_a.unwrap_or(a.len()), *cut_b)?)
        }
        TransformOp::CrossingChange { input, crossing: c } => {
            let code = valid_code(input)?;
            code_report(crossing_change(&code, &crossing(&code, c)?)?)
        }
        TransformOp::Twist { input, crossing: c } => {
            let code = valid_code(input)?;
            let t = transform::twist_replace(&code, &crossing(&code, c)?)?;
            let names = t.crossings.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
            code_report(t.code).with("crossings", Field::Text(names))
        }
        TransformOp::Smooth { input, crossing: c } => {
            let code = valid_code(input)?;
            link_report(&smooth(&code, &crossing(&code, c)?)?)
        }
        TransformOp::R1 { input, at, sign, order, remove } => {
            let code = valid_code(input)?;
            match (at, remove) {
                (Some(p), _) => {
                    let order = match order {
                        OrderArg::Ou => KinkOrder::OverFirst,
                        OrderArg::Uo => KinkOrder::UnderFirst,
                    };
                    code_report(r1_insert(&code, *p, *sign, order)?)
                }
                (None, Some(c)) => code_report(r1_delete(&code, &crossing(&code, c)?)?),
                (None, None) => Report::new()
                    .with("kinks", Field::Lines(find_kinks(&code)?.iter().map(|c| c.to_string()).collect())),
            }
        }
        TransformOp::R2 { input, at, sign, passage, orientation, remove } => {
            let code = valid_code(input)?;
            match (at, remove) {
                (Some((a, b)), _) => {
                    let passage = match passage {
                        PassageArg::Over => Passage::Over,
                        PassageArg::Under => Passage::Under,
                    };
                    let orientation = match orientation {
                        OrientationArg::Same => R2Orientation::Same,
                        OrientationArg::Reversed => R2Orientation::Reversed,
                    };
                    code_report(r2_insert(&code, *a, *b, *sign, passage, orientation)?)
                }
                (None, Some(pair)) => {
                    let (c1, c2) = pair.split_once(',').ok_or(CliError::Usage("--remove expects c1,c2".into()))?;
                    code_report(r2_delete(&code, &crossing(&code, c1.trim())?, &crossing(&code, c2.trim())?)?)
                }
                (None, None) => Report::new().with(
                    "bigons",
                    Field::Lines(find_bigons(&code)?.iter().map(|(a, b)| format!("{a} {b}")).collect()),
                ),
            }
        }
        TransformOp::R3 { input, site } => {
            let code = valid_code(input)?;
            match site {
                Some(s) => code_report(r3_apply(&code, &R3Site::new(*s))?),
                None => Report::new()
                    .with("sites", Field::Lines(r3_sites(&code)?.iter().map(|s| s.to_string()).collect())),
            }
        }
        TransformOp::Moves { input, replay: log } => {
            let code = valid_code(input)?;
            let moves = parse_log(&read_log(log)?)?;
            code_report(replay(&code, &moves)?).with("moves", Field::Int(moves.len() as i64))
        }
    })
}

fn read_log(path: &str) -> Result<String, CliError> {
    if path == "-" {
        return read_input("-");
    }
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    Ok(vkt_core::transform::family::strip_comments(&text))
}

pub fn parse_log(text: &str) -> Result<Vec<Move>, CliError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.parse::<Move>().map_err(|e| CliError::Usage(e.to_string())))
        .collect()
}

fn mutate_cmd(a: &MutateArgs) -> Result<Report, CliError> {
    let code = valid_code(&a.input)?;
    let n = code.len();
    let Some(((a0, a1), (b0, b1))) = a.blocks else {
        let pairs = enumerate_block_pairs(&code)?;
        return Ok(Report::new().with("pairs", Field::Lines(pairs.iter().map(|p| format_blocks(p, n)).collect())));
    };
    if [a0, a1, b0, b1].iter().any(|&i| i >= n) {
        return Err(vkt_core::Error::PositionOutOfRange { position: a0.max(a1).max(b0).max(b1), len: n }.into());
    }
    let pair = BlockPair::new(BlockRange::inclusive(a0, a1, n), BlockRange::inclusive(b0, b1, n));
    let violations = validate_blocks(&code, &pair);
    if !violations.is_empty() {
        return Err(vkt_core::Error::InvalidBlocks(violations).into());
    }
    let kind = match a.kind {
        KindArg::Reflection => MutationKind::PositiveReflection,
        KindArg::Rotation => MutationKind::PositiveRotation,
    };
    let mutant = mutate(&code, &pair, kind)?;
    let mut r = Report::new()
        .with("mutant", Field::Code(mutant.code.clone()))
        .with("blocks", Field::Text(format_blocks(&mutant.image, n)));
    for row in mutation_detection_report(&code, &pair)?.rows {
        let g = Report::new()
            .with("before", Field::Poly(row.before))
            .with("after", Field::Poly(row.after))
            .with("detected", Field::Bool(row.detected));
        r.push(row.kind.name(), Field::Group(g));
    }
    Ok(r)
}

struct TrialFailure {
    trial: u64,
    seed: u64,
    what: String,
    log: Vec<Move>,
}

fn fuzz_cmd(a: &FuzzArgs) -> Result<Outcome, CliError> {
    let code = valid_code(&a.input)?;
    let reference = (
        wriggle_polynomial(&code)?,
        affine_index_polynomial(&code)?,
        odd_wriggle_polynomial(&code)?,
        code.odd_writhe()?,
    );
    let results: Vec<Result<Option<TrialFailure>, vkt_core::Error>> = (0..a.trials)
        .into_par_iter()
        .map(|trial| {
            let seed = trial_seed(a.seed, trial);
            let cfg = RandomWalkConfig { steps: a.steps, seed, max_crossings: a.max_crossings, ..Default::default() };
            let out = random_move_walk(&code, &cfg)?;
            let mut broken = Vec::new();
            if wriggle_polynomial(&out.code)? != reference.0 {
                broken.push("wriggle");
            }
            if affine_index_polynomial(&out.code)? != reference.1 {
                broken.push("affine");
            }
            if odd_wriggle_polynomial(&out.code)? != reference.2 {
                broken.push("odd-wriggle");
            }
            if out.code.odd_writhe()? != reference.3 {
                broken.push("odd-writhe");
            }
            if replay(&code, &out.log).ok().as_ref() != Some(&out.code) {
                broken.push("replay");
            }
            Ok((!broken.is_empty()).then(|| TrialFailure { trial, seed, what: broken.join(" "), log: out.log }))
        })
        .collect();
    let mut failures = Vec::new();
    for r in results {
        if let Some(f) = r? {
            failures.push(f);
        }
    }
    let mut r = Report::new()
        .with("trials", Field::Int(a.trials as i64))
        .with("steps", Field::Int(a.steps as i64))
        .with("seed", Field::Text(a.seed.to_string()))
        .with("violations", Field::Int(failures.len() as i64));
    for f in &failures {
        let lines: Vec<String> = f.log.iter().map(|m| m.to_string()).collect();
        if let Some(dir) = &a.log_dir {
            fs::create_dir_all(dir).map_err(|e| CliError::io(&dir.display().to_string(), e))?;
            let path = dir.join(format!("trial-{}.log", f.trial));
            let body = format!("# input {code}\n# seed {}\n# broken {}\n{}\n", f.seed, f.what, lines.join("\n"));
            fs::write(&path, body).map_err(|e| CliError::io(&path.display().to_string(), e))?;
        }
        let g = Report::new()
            .with("seed", Field::Text(f.seed.to_string()))
            .with("broken", Field::Text(f.what.clone()))
            .with("log", Field::Lines(lines));
        r.push(format!("trial{}", f.trial), Field::Group(g));
    }
    let failure = (!failures.is_empty()).then(|| format!("{} trial(s) changed an invariant", failures.len()));
    Ok(Outcome { report: r, failure })
}

fn family_cmd(a: &FamilyArgs) -> Result<Report, CliError> {
    let m = family(a.base, a.n)?;
    let n = m.code.len();
    Ok(Report::new()
        .with("member", Field::Text(format!("{}{}", a.base.name().trim_end_matches(char::is_numeric), a.n)))
        .with("code", Field::Code(m.code.clone()))
        .with("blocks", Field::Text(format_blocks(&m.blocks, n)))
        .with("polynomial", Field::Poly(wriggle_polynomial(&m.code)?)))
}

fn report_cmd(a: &ReportArgs) -> Result<Report, CliError> {
    let mut r = Report::new();
    for n in 1..=a.max_n {
        let (k, mk) = if n % 2 == 1 { (FamilyBase::K1, FamilyBase::MK1) } else { (FamilyBase::K2, FamilyBase::MK2) };
        let km = family(k, n)?;
        let mkm = family(mk, n)?;
        let det = mutation_detection_report(&km.code, &km.blocks)?;
        let g = Report::new()
            .with("K", Field::Poly(wriggle_polynomial(&km.code)?))
            .with("MK", Field::Poly(wriggle_polynomial(&mkm.code)?))
            .with("rotation", Field::Bool(det.row(MutationKind::PositiveRotation).detected))
            .with("reflection", Field::Bool(det.row(MutationKind::PositiveReflection).detected));
        r.push(format!("n{n}"), Field::Group(g));
    }
    Ok(r)
}
