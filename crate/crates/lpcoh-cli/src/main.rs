//! `lpcoh` — exact root-subset certificates and L^p-cohomology exponent
//! intervals for solvable Lie groups, on the command line.
//!
//! Verbs: `roots`, `psi {construct|verify|search}`, `exponents`,
//! `paper-report`, `list-classes`. Output is a human-readable table by
//! default; `--json` switches to the interchange schema (rationals as
//! "num/den" strings, vectors as arrays, intervals as
//! `{lo, hi, lo_open, hi_open}` with an `"+inf"` sentinel).
//!
//! Exit codes: 0 = pass, 1 = verification fail / definite negative,
//! 2 = usage or input error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use lpcoh::batch::{paper_report, paper_report_seq, PaperReport, ReportOptions};
use lpcoh::cartan::{catalog_entries, CartanLabel, FamilyTag, RealFormClass};
use lpcoh::psi::{
    construct_certificate, search_certificate, search_certificate_seq, verify_certificate,
    PsiCertificate, Strictness, VerificationReport,
};
use lpcoh::roots::{RootFamily, RootSystem};
use lpcoh::spectral::{
    check_condition1, check_nc, check_nt, default_xi, exponent_report, iwasawa_datum,
    spectral_profile, ExponentReport, SolvableDatum,
};
use lpcoh::{Rational, RationalVector};

#[derive(Parser)]
#[command(
    name = "lpcoh",
    version,
    about = "Exact root-subset certificates and L^p-cohomology exponent intervals"
)]
struct Cli {
    #[command(flatten)]
    out: OutputFlags,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct OutputFlags {
    /// Emit the JSON interchange document instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Omit the timestamp so identical inputs give byte-identical output.
    #[arg(long, global = true)]
    no_timestamp: bool,
    /// Write the document to a file instead of stdout.
    #[arg(long, short, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the positive roots of a family by norm class, with class sums.
    Roots {
        /// Family: A, B, C, D, BC, E6, E7, E8, F4, G2.
        family: String,
        /// Rank, required for the classical families.
        rank: Option<usize>,
    },
    /// Construct, verify, or search for Ψ-certificates.
    Psi {
        #[command(subcommand)]
        sub: PsiCmd,
    },
    /// Spectral profile and exponent intervals for a class or weight file.
    Exponents {
        /// Cartan class label, e.g. "B I" or "b-i"; omit when using --weights.
        class: Option<String>,
        /// Restricted rank l (defaults to the fixed rank for exceptional labels).
        l: Option<usize>,
        /// Real rank r, for the labels that need one.
        r: Option<usize>,
        /// JSON file with {l, weights: [{real, imag?, mult}], constraints?}.
        #[arg(long, value_name = "FILE", conflicts_with = "class")]
        weights: Option<PathBuf>,
        /// Contraction direction, e.g. "-3,-2,-1"; must satisfy (nC).
        #[arg(long, value_name = "VECTOR")]
        xi: Option<String>,
    },
    /// Full catalog sweep: construct, verify, condition (1), exponents.
    PaperReport {
        /// Restrict to one Cartan label.
        #[arg(long, value_name = "LABEL")]
        label: Option<String>,
        /// Disable the per-class fan-out.
        #[arg(long)]
        sequential: bool,
    },
    /// Show the class catalog with restricted families and multiplicities.
    ListClasses,
}

#[derive(Subcommand)]
enum PsiCmd {
    /// Emit the type-by-type certificate for a class.
    Construct {
        /// Cartan class label, e.g. "E VIII" or "f4-2".
        class: String,
        /// Restricted rank l (defaults to the fixed rank for exceptional labels).
        l: Option<usize>,
        /// Real rank r, for the labels that need one.
        r: Option<usize>,
    },
    /// Re-check every condition of a certificate document.
    Verify {
        /// Certificate JSON (bare, or a document containing one).
        file: PathBuf,
    },
    /// Exhaustively search root subsets decomposing a target vector.
    Search {
        /// Family: A, B, C, D, BC, E6, E7, E8, F4, G2.
        family: String,
        /// Rank, required for the classical families.
        rank: Option<usize>,
        /// Largest subset size to try.
        #[arg(long, value_name = "N")]
        max_size: usize,
        /// Accept one root-sum pair (condition (iii)′).
        #[arg(long)]
        allow_one_pair: bool,
        /// Target vector, e.g. "4,2,0"; defaults to the split 2ρ (all
        /// multiplicities one).
        #[arg(long, value_name = "VECTOR")]
        target: Option<String>,
        /// Stop after this many certificates.
        #[arg(long, value_name = "N")]
        limit: Option<usize>,
        /// Disable the chunked fan-out.
        #[arg(long)]
        sequential: bool,
    },
}

/// An error that already knows its exit code: 2 for usage/input problems,
/// 1 for definite negatives that are not usage errors.
struct CliError {
    code: u8,
    msg: String,
}

type CliResult<T> = Result<T, CliError>;

fn input_error(msg: impl Into<String>) -> CliError {
    CliError { code: 2, msg: msg.into() }
}

fn negative(msg: impl Into<String>) -> CliError {
    CliError { code: 1, msg: msg.into() }
}

impl From<lpcoh::Error> for CliError {
    fn from(e: lpcoh::Error) -> Self {
        input_error(e.to_string())
    }
}

/// The envelope around every JSON document: the command, its echoed
/// inputs, an overall status, and (unless suppressed) a timestamp.
#[derive(Serialize)]
struct RunRecord<T: Serialize> {
    command: String,
    inputs: serde_json::Value,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    timestamp: Option<String>,
    output: T,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.cmd {
        Cmd::Roots { ref family, rank } => cmd_roots(&cli.out, family, rank),
        Cmd::Psi { ref sub } => match sub {
            PsiCmd::Construct { class, l, r } => cmd_construct(&cli.out, class, *l, *r),
            PsiCmd::Verify { file } => cmd_verify(&cli.out, file),
            PsiCmd::Search { family, rank, max_size, allow_one_pair, target, limit, sequential } => {
                cmd_search(&cli.out, family, *rank, *max_size, *allow_one_pair, target.as_deref(), *limit, *sequential)
            }
        },
        Cmd::Exponents { ref class, l, r, ref weights, ref xi } => {
            cmd_exponents(&cli.out, class.as_deref(), l, r, weights.as_deref(), xi.as_deref())
        }
        Cmd::PaperReport { ref label, sequential } => {
            cmd_paper_report(&cli.out, label.as_deref(), sequential)
        }
        Cmd::ListClasses => cmd_list_classes(&cli.out),
    }
}

// ---------------------------------------------------------------- emission

fn emit<T: Serialize>(
    out: &OutputFlags,
    command: &str,
    inputs: serde_json::Value,
    status: &'static str,
    output: T,
    human: String,
) -> CliResult<u8> {
    let text = if out.json {
        let record = RunRecord {
            command: command.to_string(),
            inputs,
            status,
            timestamp: if out.no_timestamp {
                None
            } else {
                Some(chrono::Utc::now().to_rfc3339())
            },
            output,
        };
        let mut s = serde_json::to_string_pretty(&record)
            .map_err(|e| input_error(format!("serialization failed: {e}")))?;
        s.push('\n');
        s
    } else {
        human
    };
    match &out.output {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(if status == "pass" { 0 } else { 1 })
}

// ----------------------------------------------------------------- parsing

fn parse_family(name: &str, rank: Option<usize>) -> CliResult<RootFamily> {
    let need = |rank: Option<usize>| {
        rank.ok_or_else(|| input_error(format!("family {name} needs a rank argument")))
    };
    let fixed = |fam: RootFamily, rank: Option<usize>| match rank {
        Some(r) if r != fam.rank() => {
            Err(input_error(format!("{name} has fixed rank {}", fam.rank())))
        }
        _ => Ok(fam),
    };
    match name.to_ascii_uppercase().as_str() {
        "A" => Ok(RootFamily::A(need(rank)?)),
        "B" => Ok(RootFamily::B(need(rank)?)),
        "C" => Ok(RootFamily::C(need(rank)?)),
        "D" => Ok(RootFamily::D(need(rank)?)),
        "BC" => Ok(RootFamily::BC(need(rank)?)),
        "E6" => fixed(RootFamily::E6, rank),
        "E7" => fixed(RootFamily::E7, rank),
        "E8" => fixed(RootFamily::E8, rank),
        "F4" => fixed(RootFamily::F4, rank),
        "G2" => fixed(RootFamily::G2, rank),
        other => Err(input_error(format!("unknown root family {other:?}"))),
    }
}

/// The rank implied by a label when the caller omits `l`, for the labels
/// whose restricted system has a fixed rank.
fn implied_l(label: CartanLabel) -> Option<usize> {
    match label {
        CartanLabel::EI => Some(6),
        CartanLabel::EV => Some(7),
        CartanLabel::EVII => Some(3),
        CartanLabel::EVIII => Some(8),
        CartanLabel::F4J(_) => Some(4),
        CartanLabel::G => Some(2),
        CartanLabel::Complex(tag) => match tag {
            FamilyTag::E6 => Some(6),
            FamilyTag::E7 => Some(7),
            FamilyTag::E8 => Some(8),
            FamilyTag::F4 => Some(4),
            FamilyTag::G2 => Some(2),
            _ => None,
        },
        _ => None,
    }
}

fn parse_class(label: &str, l: Option<usize>, r: Option<usize>) -> CliResult<RealFormClass> {
    let label: CartanLabel = label.parse()?;
    let l = l
        .or_else(|| implied_l(label))
        .ok_or_else(|| input_error(format!("class {label} needs an l argument")))?;
    Ok(RealFormClass::new(label, l, r)?)
}

/// A vector given as "a,b,c" or "[a, b, c]" with "num/den" entries.
fn parse_vector(s: &str, expected_dim: usize) -> CliResult<RationalVector> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let coords: Vec<Rational> = inner
        .split(',')
        .map(|tok| tok.trim().trim_matches('"').parse::<Rational>())
        .collect::<Result<_, _>>()?;
    if coords.len() != expected_dim {
        return Err(input_error(format!(
            "vector {s:?} has {} coordinates, expected {expected_dim}",
            coords.len()
        )));
    }
    Ok(RationalVector::new(coords))
}

// -------------------------------------------------------------- formatting

fn table(rows: &[Vec<String>]) -> String {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; ncols];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i + 1 == row.len() {
                line.push_str(cell);
            } else {
                let _ = write!(line, "{cell:<width$}  ", width = widths[i]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn fmt_certificate(cert: &PsiCertificate) -> String {
    let mut s = String::new();
    if let Some(class) = &cert.class {
        let _ = writeln!(s, "class: {class}");
    }
    let _ = writeln!(s, "strictness: {}", cert.strictness);
    let mut rows = vec![vec!["m".to_string(), "root".to_string()]];
    for (m, b) in cert.coeffs.iter().zip(&cert.roots) {
        rows.push(vec![m.to_string(), b.to_string()]);
    }
    s.push_str(&table(&rows));
    if let Some((i, j)) = cert.offending_pair {
        let _ = writeln!(
            s,
            "offending pair: {} + {} = {}",
            cert.roots[i],
            cert.roots[j],
            cert.roots[i].add(&cert.roots[j]),
        );
    }
    s
}

fn fmt_report(report: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "(i)    sum = 2rho, coefficients > 0 : {} (residual {})",
        pf(report.cond_i),
        report.residual,
    );
    let _ = writeln!(
        s,
        "(ii)   spans restricted root space  : {} (rank {}/{})",
        pf(report.cond_ii),
        report.span_rank,
        report.required_rank,
    );
    let _ = writeln!(
        s,
        "(iii)  root-sum pairs               : {:?} ({} pair(s))",
        report.cond_iii,
        report.root_sum_pairs.len(),
    );
    let _ = writeln!(s, "(1)    cone in ker 2rho trivial     : {}", pf(report.cond_1));
    s
}

fn pf(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

// ----------------------------------------------------------------- roots

#[derive(Serialize)]
struct RootsDoc {
    family: String,
    rank: usize,
    ambient_dim: usize,
    classes: Vec<RootsClassDoc>,
    simple_roots: Vec<RationalVector>,
    positive_count: usize,
}

#[derive(Serialize)]
struct RootsClassDoc {
    class: String,
    count: usize,
    sum: RationalVector,
    roots: Vec<RationalVector>,
}

fn cmd_roots(out: &OutputFlags, family: &str, rank: Option<usize>) -> CliResult<u8> {
    let fam = parse_family(family, rank)?;
    let sys = RootSystem::build(fam)?;
    let classes: Vec<RootsClassDoc> = sys
        .classes()
        .into_iter()
        .map(|cls| {
            let roots: Vec<RationalVector> =
                sys.roots_in_class(cls).into_iter().cloned().collect();
            Ok(RootsClassDoc {
                class: cls.to_string(),
                count: roots.len(),
                sum: sys.norm_class_sum(cls)?,
                roots,
            })
        })
        .collect::<Result<_, lpcoh::Error>>()?;
    let doc = RootsDoc {
        family: fam.to_string(),
        rank: fam.rank(),
        ambient_dim: sys.ambient_dim(),
        simple_roots: sys.simple_roots().to_vec(),
        positive_count: sys.positive_roots().len(),
        classes,
    };

    let mut human = format!(
        "root system {} (rank {}, ambient dim {}, {} positive roots)\n",
        doc.family, doc.rank, doc.ambient_dim, doc.positive_count
    );
    for cls in &doc.classes {
        let _ = writeln!(human, "class {} ({} roots), sum {}:", cls.class, cls.count, cls.sum);
        for root in &cls.roots {
            let _ = writeln!(human, "  {root}");
        }
    }
    let _ = writeln!(
        human,
        "simple roots: {}",
        doc.simple_roots.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
    );

    emit(
        out,
        "roots",
        serde_json::json!({ "family": family, "rank": rank }),
        "pass",
        doc,
        human,
    )
}

// ------------------------------------------------------------------- psi

#[derive(Serialize)]
struct CertificateDoc {
    certificate: PsiCertificate,
    verification: VerificationReport,
    pass: bool,
}

fn cmd_construct(
    out: &OutputFlags,
    class: &str,
    l: Option<usize>,
    r: Option<usize>,
) -> CliResult<u8> {
    let class = parse_class(class, l, r)?;
    let cert = construct_certificate(&class)?;
    let sys = RootSystem::build(class.restricted_family()?)?;
    let report = verify_certificate(&sys, &class.two_rho()?, &cert)?;
    let pass = report.passes_as_claimed(&cert);

    let human = format!("{}{}", fmt_certificate(&cert), fmt_report(&report));
    let inputs = serde_json::json!({ "class": class.to_string() });
    let doc = CertificateDoc { certificate: cert, verification: report, pass };
    emit(out, "psi construct", inputs, if pass { "pass" } else { "fail" }, doc, human)
}

/// Accept a bare certificate, `{"certificate": …}`, or a full RunRecord
/// with the certificate under `output`.
fn extract_certificate(mut value: serde_json::Value) -> CliResult<PsiCertificate> {
    loop {
        let Some(obj) = value.as_object() else { break };
        if obj.contains_key("roots") && obj.contains_key("coeffs") {
            return serde_json::from_value(value)
                .map_err(|e| input_error(format!("bad certificate document: {e}")));
        }
        let Some(inner) = ["output", "certificate"].iter().find_map(|k| obj.get(*k)) else {
            break;
        };
        value = inner.clone();
    }
    Err(input_error("no certificate found in document"))
}

fn cmd_verify(out: &OutputFlags, file: &std::path::Path) -> CliResult<u8> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| input_error(format!("cannot read {}: {e}", file.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| input_error(format!("{} is not JSON: {e}", file.display())))?;
    let cert = extract_certificate(value)?;
    let class = cert
        .class
        .clone()
        .ok_or_else(|| input_error("certificate has no class; cannot infer system and target"))?;
    let sys = RootSystem::build(class.restricted_family()?)?;
    let report = verify_certificate(&sys, &class.two_rho()?, &cert)?;
    let pass = report.passes_as_claimed(&cert);

    let human = format!("{}{}", fmt_certificate(&cert), fmt_report(&report));
    let inputs = serde_json::json!({ "file": file.display().to_string() });
    let doc = CertificateDoc { certificate: cert, verification: report, pass };
    emit(out, "psi verify", inputs, if pass { "pass" } else { "fail" }, doc, human)
}

#[derive(Serialize)]
struct SearchDoc {
    family: String,
    target: RationalVector,
    max_size: usize,
    allow_one_pair: bool,
    count: usize,
    certificates: Vec<PsiCertificate>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    out: &OutputFlags,
    family: &str,
    rank: Option<usize>,
    max_size: usize,
    allow_one_pair: bool,
    target: Option<&str>,
    limit: Option<usize>,
    sequential: bool,
) -> CliResult<u8> {
    let fam = parse_family(family, rank)?;
    let sys = RootSystem::build(fam)?;
    let target = match target {
        Some(s) => parse_vector(s, sys.ambient_dim())?,
        None => sys.positive_sum(),
    };
    let certs = if sequential {
        search_certificate_seq(&sys, &target, max_size, allow_one_pair, limit)
    } else {
        search_certificate(&sys, &target, max_size, allow_one_pair, limit)
    };

    let mut human = format!(
        "search {} for target {}: {} certificate(s) of size <= {max_size}\n",
        fam,
        target,
        certs.len()
    );
    for (i, cert) in certs.iter().enumerate() {
        let _ = writeln!(human, "--- certificate {} ---", i + 1);
        human.push_str(&fmt_certificate(cert));
    }
    let inputs = serde_json::json!({
        "family": family, "rank": rank, "max_size": max_size,
        "allow_one_pair": allow_one_pair, "limit": limit,
    });
    let doc = SearchDoc {
        family: fam.to_string(),
        target,
        max_size,
        allow_one_pair,
        count: certs.len(),
        certificates: certs,
    };
    emit(out, "psi search", inputs, "pass", doc, human)
}

// -------------------------------------------------------------- exponents

#[derive(Serialize)]
struct ExponentsDoc {
    source: String,
    l: usize,
    n: usize,
    #[serde(rename = "D")]
    dim_total: usize,
    nc: bool,
    nt: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    condition1: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<ExponentReport>,
    /// Non-vanishing of reduced degree-l cohomology certified for
    /// p > h/w_l, backed by a passing certificate for the class.
    #[serde(skip_serializing_if = "Option::is_none")]
    degree_l_certified: Option<String>,
}

fn cmd_exponents(
    out: &OutputFlags,
    class: Option<&str>,
    l: Option<usize>,
    r: Option<usize>,
    weights: Option<&std::path::Path>,
    xi: Option<&str>,
) -> CliResult<u8> {
    let (source, datum, class) = match (class, weights) {
        (Some(label), None) => {
            let class = parse_class(label, l, r)?;
            (class.to_string(), iwasawa_datum(&class)?, Some(class))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
            let datum: SolvableDatum = serde_json::from_str(&text)
                .map_err(|e| input_error(format!("{} is not a weight datum: {e}", path.display())))?;
            (path.display().to_string(), datum, None)
        }
        _ => return Err(input_error("give either a class label or --weights FILE")),
    };

    let nc_witness = check_nc(&datum);
    let nt = check_nt(&datum);

    let xi = match xi {
        Some(s) => {
            let xi = parse_vector(s, datum.frame_dim())?;
            for w in datum.weights() {
                if !w.real_part.dot(&xi).is_negative() {
                    return Err(negative(format!(
                        "xi = {xi} violates (nC): weight with real part {} has nonnegative value",
                        w.real_part
                    )));
                }
            }
            Some(xi)
        }
        None => match &class {
            Some(c) => Some(default_xi(&RootSystem::build(c.restricted_family()?)?)?),
            None => nc_witness.clone(),
        },
    };

    let inputs = serde_json::json!({
        "source": source,
        "xi": xi.as_ref().map(|v| v.to_string()),
    });

    let Some(xi) = xi else {
        // (nC) has no witness: a definite negative, no intervals to emit.
        let doc = ExponentsDoc {
            source: source.clone(),
            l: datum.l(),
            n: datum.n(),
            dim_total: datum.dim_total(),
            nc: false,
            nt,
            condition1: None,
            report: None,
            degree_l_certified: None,
        };
        let human = format!(
            "{source}: (nC) absent — no contracting xi exists; no intervals emitted\n(nT): {}\n",
            pf(nt)
        );
        return emit(out, "exponents", inputs, "fail", doc, human);
    };

    let profile = spectral_profile(&datum, &xi)?;
    let report = exponent_report(&profile)?;
    let nc = nc_witness.is_some();

    let (condition1, degree_l_certified) = match &class {
        Some(c) => {
            let rho = c.two_rho()?;
            let all: Vec<usize> = (0..datum.weights().len()).collect();
            let cond1 = check_condition1(&datum, &all, &rho)?;
            let certified = construct_certificate(c).ok().and_then(|cert| {
                let sys = RootSystem::build(c.restricted_family().ok()?).ok()?;
                let rep = verify_certificate(&sys, &rho, &cert).ok()?;
                rep.passes_as_claimed(&cert).then(|| {
                    format!(
                        "non-vanishing of reduced degree-{} cohomology certified for p > {}",
                        profile.l, report.degree_l_threshold
                    )
                })
            });
            (Some(cond1), certified)
        }
        None => (None, None),
    };

    let mut human = format!(
        "{source}: l={}, n={}, D={}, xi={}\n",
        profile.l, profile.n, profile.dim_total, profile.xi
    );
    let _ = writeln!(
        human,
        "lambda = [{}], h = {}",
        profile.lambdas.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", "),
        profile.h
    );
    let _ = writeln!(human, "(nC): {}  (nT): {}  xi contracting: {}", pf(nc), pf(nt), pf(report.nc_with_xi));
    if let Some(c1) = condition1 {
        let _ = writeln!(human, "condition (1): {}", pf(c1));
    }
    let mut rows = vec![vec![
        "degree".to_string(),
        "vanishing".to_string(),
        "nonvanishing".to_string(),
        "dual".to_string(),
    ]];
    for d in &report.degrees {
        rows.push(vec![
            d.degree.to_string(),
            d.vanishing.as_ref().map(|i| i.to_string()).unwrap_or_else(|| "-".into()),
            d.nonvanishing.as_ref().map(|i| i.to_string()).unwrap_or_else(|| "-".into()),
            d.dual_degree.to_string(),
        ]);
    }
    human.push_str(&table(&rows));
    let _ = writeln!(
        human,
        "degree-{} threshold h/w_l = {} (dual {})",
        profile.l, report.degree_l_threshold, report.dual_threshold
    );
    if let Some(iv) = &report.rank_one_interval {
        let _ = writeln!(human, "rank-one vanishing interval: {iv}");
    }
    if let Some(line) = &degree_l_certified {
        let _ = writeln!(human, "{line}");
    }

    let pass = nc && report.nc_with_xi;
    let doc = ExponentsDoc {
        source,
        l: profile.l,
        n: profile.n,
        dim_total: profile.dim_total,
        nc,
        nt,
        condition1,
        report: Some(report),
        degree_l_certified,
    };
    emit(out, "exponents", inputs, if pass { "pass" } else { "fail" }, doc, human)
}

// ------------------------------------------------------------ paper-report

fn cmd_paper_report(out: &OutputFlags, label: Option<&str>, sequential: bool) -> CliResult<u8> {
    let only_label = label.map(|s| s.parse::<CartanLabel>()).transpose()?;
    let opts = ReportOptions { only_label, ..Default::default() };
    let report: PaperReport = if sequential {
        paper_report_seq(&opts)
    } else {
        paper_report(&opts)
    };

    let mut rows = vec![vec![
        "class".to_string(),
        "family".to_string(),
        "expected".to_string(),
        "observed".to_string(),
        "(i)".to_string(),
        "(ii)".to_string(),
        "(1)".to_string(),
        "nC".to_string(),
        "nT".to_string(),
        "h".to_string(),
        "D".to_string(),
        "status".to_string(),
    ]];
    for row in &report.rows {
        rows.push(vec![
            row.class.clone(),
            row.family.clone(),
            row.expected_strictness.to_string(),
            row.observed_strictness
                .map(|s: Strictness| s.to_string())
                .unwrap_or_else(|| "-".into()),
            pf(row.cond_i).to_string(),
            pf(row.cond_ii).to_string(),
            pf(row.cond_1).to_string(),
            pf(row.nc).to_string(),
            pf(row.nt).to_string(),
            row.h.as_ref().map(|q| q.to_string()).unwrap_or_else(|| "-".into()),
            row.dim_total.map(|d| d.to_string()).unwrap_or_else(|| "-".into()),
            pf(row.pass).to_string(),
        ]);
    }
    let mut human = table(&rows);
    let _ = writeln!(human, "rows: {}  status: {}", report.rows.len(), report.status);
    if let Some(first) = &report.first_failure {
        let _ = writeln!(human, "first failure: {first}");
    }

    let status: &'static str = if report.status == "pass" { "pass" } else { "fail" };
    let inputs = serde_json::json!({ "label": label });
    emit(out, "paper-report", inputs, status, report, human)
}

// ------------------------------------------------------------ list-classes

#[derive(Serialize)]
struct ClassEntryDoc {
    label: String,
    restricted: &'static str,
    constraints: &'static str,
    multiplicities: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

fn cmd_list_classes(out: &OutputFlags) -> CliResult<u8> {
    let entries: Vec<ClassEntryDoc> = catalog_entries()
        .into_iter()
        .map(|e| ClassEntryDoc {
            label: e.label.to_string(),
            restricted: e.restricted,
            constraints: e.constraints,
            multiplicities: e.multiplicities,
            note: e.note,
        })
        .collect();
    let mut rows = vec![vec![
        "label".to_string(),
        "restricted".to_string(),
        "constraints".to_string(),
        "multiplicities".to_string(),
        "note".to_string(),
    ]];
    for e in &entries {
        rows.push(vec![
            e.label.clone(),
            e.restricted.to_string(),
            e.constraints.to_string(),
            e.multiplicities.to_string(),
            e.note.unwrap_or("").to_string(),
        ]);
    }
    let human = table(&rows);
    emit(out, "list-classes", serde_json::json!({}), "pass", entries, human)
}
