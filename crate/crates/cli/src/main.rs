//! `covseq`: construct and verify covering sequences from the command line.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use covseq_core::construct::{
    debruijn, debruijn_binary, find_sparse_primitive, hamming_csc, interleave, primitive_cs, selfdual,
    selfdual_base, selfdual_step, square_interleave, square_interleave_verified, Gf2Poly,
};
use covseq_core::corpus::{corpus_entries, find_entry, lookup_bounds, verify_corpus_with, Source};
use covseq_core::search::{search_cs, SearchConfig};
use covseq_core::text::{parse_array, parse_code, parse_sequence, write_array, write_code, write_sequence, Header, Kind};
use covseq_core::twod::{debruijn_shift_array, fold_with, triangular_shift_array};
use covseq_core::verify::{
    coverage_with, covering_radius_with, is_c2ds_with, is_covering_sequence_with, sphere_covering_bound, CoverageReport,
    VerifyLimits,
};
use covseq_core::{greedy_merge, CyclicSequence, SequenceCode, TorusArray};

/// `println!` that reports write errors instead of panicking on a closed pipe.
macro_rules! say {
    ($($arg:tt)*) => {
        writeln!(io::stdout(), $($arg)*)?
    };
}

#[derive(Parser)]
#[command(name = "covseq", version, about = "Binary covering sequences, codes and 2D arrays")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustively check covering properties of a file.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Build sequences and codes.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Merge a covering sequence code into one covering sequence.
    Merge {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Code file, one codeword per line.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// Fold an (mn, R)-CS into an (m x n, R)-C2DS.
    Fold {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        seed: SeedArgs,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// (2 x n, 2R)-C2DS from an (n, R)-CS with triangular row shifts.
    Shift2d {
        #[command(flatten)]
        seed: SeedArgs,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// (m x n, mR)-C2DS from an (n, R)-CS with de Bruijn ordered row shifts.
    Shiftdb {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        seed: SeedArgs,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Local search for a short covering sequence.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Search only at this length.
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Embedded reference sequences.
    #[command(subcommand)]
    Corpus(CorpusCmd),
    /// Sphere-covering bound and the tabulated length range.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// A single cyclic sequence.
    Cs {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        file: PathBuf,
        /// Also compute the covering radius.
        #[arg(long)]
        radius: bool,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// A covering sequence code.
    Csc {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// A doubly periodic array.
    C2ds {
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        report: ReportArgs,
    },
}

#[derive(Args)]
struct ReportArgs {
    /// Take missing parameters from the file header.
    #[arg(long)]
    auto: bool,
    /// Print machine-readable key=value lines.
    #[arg(long)]
    kv: bool,
}

#[derive(Args)]
struct SeedArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Seed sequence file.
    #[arg(long)]
    file: PathBuf,
}

#[derive(Args)]
struct EmitArgs {
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Verify the result before writing it.
    #[arg(long)]
    verify: bool,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// De Bruijn sequence over q symbols.
    Debruijn {
        #[arg(long, default_value_t = 2)]
        q: usize,
        #[arg(long)]
        span: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cyclic Hamming code of length 2^k - 1 as a covering sequence code.
    Hamming {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Self-dual covering sequence code at window width 8, 16 or 32.
    Selfdual {
        #[arg(long, value_parser = ["8", "16", "32"])]
        target_n: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Interleave an (n1, r1)-CS and an (n2, r2)-CS of coprime lengths.
    Interleave {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        r1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        r2: usize,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Interleave an (n, R)-CS with itself at every phase into a (2n, 2R)-CS.
    Square {
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        fill: u8,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// (n + 2R + 1, R)-CS from a primitive polynomial of degree n.
    Primitive {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Polynomial as exponents (x^7+x^6+1) or coefficient bits c_0..c_n.
        #[arg(long)]
        poly: Option<String>,
        #[command(flatten)]
        emit: EmitArgs,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// List entry ids.
    List,
    /// Verify one entry or all of them.
    Verify {
        #[arg(long)]
        id: Option<String>,
    },
    /// Write one entry in text form.
    Export {
        #[arg(long)]
        id: String,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Successful run or a negative verification verdict.
enum Status {
    Ok,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(err) if err.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<Status> {
    let limits = VerifyLimits::from_env()?;
    match cmd {
        Command::Verify(v) => verify(v, &limits),
        Command::Construct(c) => construct(c, &limits),
        Command::Merge { n, r, input, out, verify } => {
            check_nr(n, r)?;
            let (_, words) = parse_code(&read(&input)?)?;
            let code = SequenceCode::new(n, r, words);
            let merged = greedy_merge(&code)?;
            let s = &merged.sequence;
            if verify && !check_sequence(s, n, r, &limits)? {
                return Ok(Status::Fail);
            }
            write_file(&out, &write_sequence(&Header::cs(n, r, s.len()), s))?;
            say!(
                "length={} total_overlap={} baseline={}",
                s.len(),
                merged.total_overlap,
                merged.zero_overlap_baseline
            );
            Ok(Status::Ok)
        }
        Command::Fold { m, seed, emit } => {
            check_nr(m * seed.n, seed.r)?;
            let s = read_sequence(&seed.file)?;
            let folded = fold_with(&s, m, seed.n, seed.r, &limits)?;
            eprintln!("padding={:?} padded_length={}", folded.padding, folded.padded_length);
            emit_array(&folded.array, m, seed.n, seed.r, &emit, &limits)
        }
        Command::Shift2d { seed, emit } => {
            check_nr(2 * seed.n, 2 * seed.r)?;
            let s = read_sequence(&seed.file)?;
            let a = triangular_shift_array(&s, seed.n, seed.r)?;
            emit_array(&a, 2, seed.n, 2 * seed.r, &emit, &limits)
        }
        Command::Shiftdb { m, seed, emit } => {
            check_nr(m * seed.n, m * seed.r)?;
            let s = read_sequence(&seed.file)?;
            let a = debruijn_shift_array(&s, seed.n, seed.r, m)?;
            emit_array(&a, m, seed.n, m * seed.r, &emit, &limits)
        }
        Command::Search { n, r, target, budget, seed, out } => {
            check_nr(n, r)?;
            let cfg = SearchConfig { target_length: target, budget, rng_seed: seed, ..SearchConfig::new(n, r) };
            let found = search_cs(&cfg)?;
            let s = &found.sequence;
            emit_text(out.as_deref(), &write_sequence(&Header::cs(n, r, s.len()), s))?;
            eprintln!("found={} length={} moves={} restarts={}", found.found, s.len(), found.moves, found.restarts);
            Ok(if found.found { Status::Ok } else { Status::Fail })
        }
        Command::Corpus(c) => corpus(c, &limits),
        Command::Bounds { n, r } => {
            check_nr(n, r)?;
            say!("sphere_bound={}", sphere_covering_bound(n, r)?);
            match lookup_bounds(n, r) {
                Some(b) => {
                    say!("table={b} ({})", b.source.description());
                    if let Some(note) = b.note() {
                        say!("note={note}");
                    }
                }
                None => say!("table=none"),
            }
            Ok(Status::Ok)
        }
    }
}

fn check_nr(n: usize, r: usize) -> Result<()> {
    if n == 0 || n > 32 {
        bail!("window width {n} must be between 1 and 32");
    }
    if r > n {
        bail!("radius {r} exceeds window width {n}");
    }
    Ok(())
}

/// `check_nr` on whatever was given on the command line.
fn check_given(n: Option<usize>, r: Option<usize>) -> Result<()> {
    match n {
        Some(n) => check_nr(n, r.unwrap_or(0)),
        None => Ok(()),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_sequence(path: &Path) -> Result<CyclicSequence> {
    Ok(parse_sequence(&read(path)?).with_context(|| format!("parsing {}", path.display()))?.1)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit_text(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => write_file(p, text),
        None => {
            io::stdout().lock().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// A verified flag or value from the header, with the flag taking precedence.
fn param(name: &str, flag: Option<usize>, header: Option<usize>, auto: bool) -> Result<usize> {
    match (flag, auto) {
        (Some(v), _) => Ok(v),
        (None, true) => header.with_context(|| format!("--{name} not given and the header has no {name}=")),
        (None, false) => bail!("--{name} is required (or pass --auto to read it from the header)"),
    }
}

fn header_of(header: &Option<Header>, kind: Kind) -> Header {
    header.clone().filter(|h| h.kind == Some(kind)).unwrap_or_default()
}

fn print_report(rep: &CoverageReport, length: usize, params: &[(&str, usize)], kv: bool) -> Result<()> {
    let verdict = if rep.is_covering() { "covering" } else { "not covering" };
    let shown: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    say!("{verdict} length={length} {}", shown.join(" "));
    say!(
        "covered {} of {} words by {} distinct windows",
        rep.covered_count, rep.space_size, rep.distinct_windows
    );
    if !rep.is_covering() {
        let sample: Vec<String> = rep.uncovered.iter().take(8).map(|w| w.to_string()).collect();
        say!("uncovered {} words, first: {}", rep.uncovered_total, sample.join(" "));
    }
    if kv {
        say!("verdict={}", if rep.is_covering() { "covering" } else { "not-covering" });
        say!("length={length}");
        for (k, v) in params {
            say!("{k}={v}");
        }
        say!("covered={}", rep.covered_count);
        say!("space={}", rep.space_size);
        say!("distinct_windows={}", rep.distinct_windows);
        say!("uncovered={}", rep.uncovered_total);
    }
    Ok(())
}

fn status(covering: bool) -> Status {
    if covering {
        Status::Ok
    } else {
        Status::Fail
    }
}

fn verify(cmd: VerifyCmd, limits: &VerifyLimits) -> Result<Status> {
    match cmd {
        VerifyCmd::Cs { n, r, file, radius, report } => {
            if !report.auto && (n.is_none() || (r.is_none() && !radius)) {
                bail!("--n and --r are required (or pass --auto to read them from the header)");
            }
            check_given(n, r)?;
            let (header, s) = parse_sequence(&read(&file)?)?;
            let h = header_of(&header, Kind::Cs);
            let n = param("n", n, h.n, report.auto)?;
            let r = match (r, radius) {
                (None, true) if h.r.is_none() => None,
                _ => Some(param("r", r, h.r, report.auto)?),
            };
            check_nr(n, r.unwrap_or(0))?;
            let mut ok = true;
            if let Some(r) = r {
                let rep = is_covering_sequence_with(&s, n, r, limits)?;
                print_report(&rep, s.len(), &[("n", n), ("r", r)], report.kv)?;
                ok = rep.is_covering();
            }
            if radius {
                say!("covering_radius={}", covering_radius_with(&s, n, limits)?);
            }
            Ok(status(ok))
        }
        VerifyCmd::Csc { n, r, file, report } => {
            if !report.auto && (n.is_none() || r.is_none()) {
                bail!("--n and --r are required (or pass --auto to read them from the header)");
            }
            check_given(n, r)?;
            let (header, words) = parse_code(&read(&file)?)?;
            let h = header_of(&header, Kind::Csc);
            let n = param("n", n, h.n, report.auto)?;
            let r = param("r", r, h.r, report.auto)?;
            check_nr(n, r)?;
            let code = SequenceCode::new(n, r, words);
            let rep = coverage_with(&code, limits)?;
            print_report(&rep, code.total_length(), &[("n", n), ("r", r), ("count", code.codewords.len())], report.kv)?;
            Ok(status(rep.is_covering()))
        }
        VerifyCmd::C2ds { m, n, r, file, report } => {
            if !report.auto && (m.is_none() || n.is_none() || r.is_none()) {
                bail!("--m, --n and --r are required (or pass --auto to read them from the header)");
            }
            check_given(m.zip(n).map(|(m, n)| m * n), r)?;
            let (header, a) = parse_array(&read(&file)?)?;
            let h = header_of(&header, Kind::C2ds);
            let m = param("m", m, h.m, report.auto)?;
            let n = param("n", n, h.n, report.auto)?;
            let r = param("r", r, h.r, report.auto)?;
            check_nr(m * n, r)?;
            let rep = is_c2ds_with(&a, m, n, r, limits)?;
            let dims = [("m", m), ("n", n), ("r", r), ("rows", a.rows()), ("cols", a.cols())];
            print_report(&rep, a.area(), &dims, report.kv)?;
            Ok(status(rep.is_covering()))
        }
    }
}

/// Reports a failed check on stderr.
fn check_sequence(s: &CyclicSequence, n: usize, r: usize, limits: &VerifyLimits) -> Result<bool> {
    let rep = is_covering_sequence_with(s, n, r, limits)?;
    if !rep.is_covering() {
        eprintln!("not covering: {} of {} words uncovered at ({n},{r})", rep.uncovered_total, rep.space_size);
    }
    Ok(rep.is_covering())
}

fn emit_sequence(s: &CyclicSequence, n: usize, r: usize, emit: &EmitArgs, limits: &VerifyLimits) -> Result<Status> {
    if emit.verify && !check_sequence(s, n, r, limits)? {
        return Ok(Status::Fail);
    }
    emit_text(emit.out.as_deref(), &write_sequence(&Header::cs(n, r, s.len()), s))?;
    Ok(Status::Ok)
}

fn emit_array(a: &TorusArray, m: usize, n: usize, r: usize, emit: &EmitArgs, limits: &VerifyLimits) -> Result<Status> {
    if emit.verify {
        let rep = is_c2ds_with(a, m, n, r, limits)?;
        if !rep.is_covering() {
            eprintln!("not covering: {} of {} words uncovered", rep.uncovered_total, rep.space_size);
            return Ok(Status::Fail);
        }
    }
    emit_text(emit.out.as_deref(), &write_array(&Header::c2ds(m, n, r, a.rows(), a.cols()), a))?;
    Ok(Status::Ok)
}

fn construct(cmd: ConstructCmd, limits: &VerifyLimits) -> Result<Status> {
    match cmd {
        ConstructCmd::Debruijn { q, span, out } => {
            if q < 2 || span == 0 {
                bail!("de Bruijn sequences need q >= 2 and span >= 1");
            }
            let text = if q == 2 {
                let s = debruijn_binary(span)?;
                write_sequence(&Header::cs(span, 0, s.len()), &s)
            } else {
                let d = debruijn(q, span)?;
                let sep = if q <= 10 { "" } else { " " };
                let body: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                format!("# q={q} span={span} len={}\n{}\n", d.len(), body.join(sep))
            };
            emit_text(out.as_deref(), &text)?;
            Ok(Status::Ok)
        }
        ConstructCmd::Hamming { k, emit } => {
            if !(2..=5).contains(&k) {
                bail!("--k must be between 2 and 5");
            }
            let code = hamming_csc(k)?;
            if emit.verify && !coverage_with(&code, limits)?.is_covering() {
                eprintln!("not covering");
                return Ok(Status::Fail);
            }
            let text = write_code(&Header::csc(code.n, code.radius, code.codewords.len()), &code);
            emit_text(emit.out.as_deref(), &text)?;
            Ok(Status::Ok)
        }
        ConstructCmd::Selfdual { target_n, out } => {
            let c16 = || selfdual_step(&selfdual_base());
            match target_n.as_str() {
                "8" | "16" => {
                    let c = if target_n == "8" { selfdual_base() } else { c16()? };
                    let words = selfdual::combine_all(&c)?;
                    let code = SequenceCode::new(c.half_length, 1, words);
                    let text = write_code(&Header::csc(code.n, 1, code.codewords.len()), &code);
                    emit_text(out.as_deref(), &text)?;
                }
                _ => {
                    // 2^20 codewords of length 128, written as they are produced
                    let c = c16()?;
                    let count = c.pairing.len() << (c.half_length - 2);
                    let sink: Box<dyn Write> = match &out {
                        Some(p) => Box::new(fs::File::create(p).with_context(|| format!("creating {}", p.display()))?),
                        None => Box::new(io::stdout().lock()),
                    };
                    let mut w = BufWriter::new(sink);
                    writeln!(w, "{}", Header::csc(2 * c.half_length, 1, count))?;
                    let mut io_err = None;
                    selfdual::for_each_combined_step(&c, |s| {
                        if io_err.is_none() {
                            io_err = writeln!(w, "{s}").err();
                        }
                        Ok(())
                    })?;
                    if let Some(e) = io_err {
                        return Err(e.into());
                    }
                    w.flush()?;
                }
            }
            Ok(Status::Ok)
        }
        ConstructCmd::Interleave { a, b, n1, r1, n2, r2, emit } => {
            check_nr(n1, r1)?;
            check_nr(n2, r2)?;
            check_nr(n1 + n2, r1 + r2)?;
            let (sa, sb) = (read_sequence(&a)?, read_sequence(&b)?);
            let s = interleave(&sa, &sb, n1, n2, r1, r2)?;
            emit_sequence(&s, n1 + n2, r1 + r2, &emit, limits)
        }
        ConstructCmd::Square { seed, fill, emit } => {
            check_nr(2 * seed.n, 2 * seed.r)?;
            let a = read_sequence(&seed.file)?;
            let (n, r) = (2 * seed.n, 2 * seed.r);
            if emit.verify {
                let (s, orientation) = match square_interleave_verified(&a, seed.n, seed.r, fill, limits) {
                    Ok(found) => found,
                    Err(covseq_core::Error::Precondition(msg)) if square_interleave(&a, seed.n, fill).is_ok() => {
                        eprintln!("not covering: {msg}");
                        return Ok(Status::Fail);
                    }
                    Err(e) => return Err(e.into()),
                };
                eprintln!("seed orientation={orientation:?}");
                emit_text(emit.out.as_deref(), &write_sequence(&Header::cs(n, r, s.len()), &s))?;
                return Ok(Status::Ok);
            }
            let s = square_interleave(&a, seed.n, fill)?;
            emit_sequence(&s, n, r, &emit, limits)
        }
        ConstructCmd::Primitive { n, r, poly, emit } => {
            let width = n + 2 * r + 1;
            check_nr(width, r)?;
            let p = match poly {
                Some(text) => text.parse::<Gf2Poly>()?,
                None => find_sparse_primitive(n, r)?
                    .with_context(|| format!("no primitive polynomial of degree {n} with c_1..c_{} = 0", 2 * r + 1))?,
            };
            eprintln!("polynomial={p}");
            let s = primitive_cs(n, r, p)?;
            emit_sequence(&s, width, r, &emit, limits)
        }
    }
}

fn corpus(cmd: CorpusCmd, limits: &VerifyLimits) -> Result<Status> {
    match cmd {
        CorpusCmd::List => {
            for e in corpus_entries() {
                let source = match e.source {
                    Source::Published(where_) => where_.to_string(),
                    Source::Search { seed } => format!("search seed={seed}"),
                };
                say!("{}\t{}", e.id, source);
            }
            Ok(Status::Ok)
        }
        CorpusCmd::Verify { id } => {
            let rep = verify_corpus_with(id.as_deref(), limits)?;
            for r in &rep.results {
                say!("{} {} {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.detail);
            }
            Ok(status(rep.all_passed()))
        }
        CorpusCmd::Export { id, out } => {
            let entry = find_entry(&id).with_context(|| format!("no corpus entry {id:?}"))?;
            write_file(&out, &entry.to_text())?;
            Ok(Status::Ok)
        }
    }
}
