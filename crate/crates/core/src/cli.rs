//! The `fuchsian-tiles` command line.
//!
//! ```text
//! fuchsian-tiles <decide|sigma|oracle|verify|render> <p> <q>
//!     [--m M] [--depth N] [--out PATH] [--format json|text]
//! ```
//!
//! Exit codes: 0 realizable / success, 1 not realizable, 2 invalid input,
//! 3 verification failed, 4 I/O failure. Every run ends with exactly one
//! `status=<word> code=<n>: <message>` line on stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde::{Serialize, Serializer};

use crate::criterion::{
    construct_sigma, oracle_scan, qualifying_prime, smallest_divisor_in_range, Certificate,
    TessellationType, Witness,
};
use crate::error::Error;
use crate::hgeom::{Polygon, ISOMETRY_EQ_TOL};
use crate::json::{format_f64, Fixed17};
use crate::svg;
use crate::tess::{
    freeness_check, generate_patch, reference_patch, EdgePairing, FREENESS_DEPTH_CAP,
    PATCH_DEPTH_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Decide,
    Sigma,
    Oracle,
    Verify,
    Render,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Parsed command line.
#[derive(Debug, Clone, Parser)]
#[command(
    name = "fuchsian-tiles",
    version,
    about = "Fundamental-domain certificates for {p,q} tessellations"
)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    pub p: u32,
    pub q: u32,
    /// Divisor of q to realise as the order of σρ (sigma, verify).
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long, default_value_t = 2)]
    pub depth: usize,
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    NotRealizable = 1,
    InvalidInput = 2,
    VerificationFailed = 3,
    Io = 4,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }

    fn word(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::NotRealizable => "not-realizable",
            Status::InvalidInput => "invalid-input",
            Status::VerificationFailed => "verification-failed",
            Status::Io => "io-error",
        }
    }
}

/// What a command produced: the status, a one-line message for stderr and
/// the body for stdout (or `--out`).
struct Outcome {
    status: Status,
    message: String,
    body: String,
}

impl Outcome {
    fn invalid(err: impl ToString) -> Self {
        Outcome {
            status: Status::InvalidInput,
            message: err.to_string(),
            body: String::new(),
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                let _ = writeln!(stderr, "status=ok code=0: {}", first_line(&e.to_string()));
                return 0;
            }
            let outcome =
                Outcome::invalid(first_line(&e.to_string()).trim_start_matches("error: "));
            return finish(outcome, None, stdout, stderr);
        }
    };
    let outcome = execute(&cfg);
    // render writes its own file; other commands route the body to --out.
    let out = if cfg.command == Command::Render {
        None
    } else {
        cfg.out.as_deref()
    };
    finish(outcome, out, stdout, stderr)
}

fn first_line(s: &str) -> String {
    s.lines().next().unwrap_or_default().to_string()
}

fn finish(
    mut outcome: Outcome,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8 {
    if !outcome.body.is_empty() {
        match out {
            Some(path) => {
                if let Err(e) = write_atomically(path, outcome.body.as_bytes()) {
                    outcome.status = Status::Io;
                    outcome.message = format!("cannot write {}: {e}", path.display());
                }
            }
            None => {
                let _ = stdout.write_all(outcome.body.as_bytes());
            }
        }
    }
    let status = outcome.status;
    let _ = writeln!(
        stderr,
        "status={} code={}: {}",
        status.word(),
        status.code(),
        outcome.message.replace('\n', " ")
    );
    status.code()
}

/// Writes via a temporary file in the destination directory, then renames.
pub fn write_atomically(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn execute(cfg: &RunConfig) -> Outcome {
    let t = match TessellationType::new(cfg.p, cfg.q) {
        Ok(t) => t,
        Err(e) => return Outcome::invalid(e),
    };
    match cfg.command {
        Command::Decide => cmd_decide(cfg, t),
        Command::Sigma => cmd_sigma(cfg, t),
        Command::Oracle => cmd_oracle(cfg, t),
        Command::Verify => cmd_verify(cfg, t),
        Command::Render => cmd_render(cfg, t),
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable report");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct DecideReport {
    p: u32,
    q: u32,
    realizable: bool,
    prime: Option<u64>,
}

fn cmd_decide(cfg: &RunConfig, t: TessellationType) -> Outcome {
    let prime = qualifying_prime(t);
    let report = DecideReport {
        p: t.p(),
        q: t.q(),
        realizable: prime.is_some(),
        prime,
    };
    let (status, message) = match prime {
        Some(d) => (
            Status::Ok,
            format!(
                "{{{},{}}} is realizable: prime {d} divides q and {d} ≤ p",
                t.p(),
                t.q()
            ),
        ),
        None => (
            Status::NotRealizable,
            format!(
                "{{{},{}}} is not realizable: no prime divisor of q is ≤ p",
                t.p(),
                t.q()
            ),
        ),
    };
    let body = match cfg.format {
        Format::Json => json_line(&report),
        Format::Text => format!("{message}\n"),
    };
    Outcome {
        status,
        message,
        body,
    }
}

fn certificate_text(cert: &Certificate) -> String {
    match (&cert.sigma_cycles, &cert.sigma_rho_cycles, cert.m) {
        (Some(s), Some(sr), Some(m)) => format!(
            "{{{},{}}}: sigma = {s}, sigma*rho = {sr}, order m = {m}\n",
            cert.p, cert.q
        ),
        _ => format!(
            "{{{},{}}}: no involution sigma with (sigma*rho)^q = 1\n",
            cert.p, cert.q
        ),
    }
}

/// The witness for `cfg`: `--m` if given (validated), else the smallest
/// divisor of `q` in `[2, p]`.
fn chosen_witness(cfg: &RunConfig, t: TessellationType) -> Result<Witness, Outcome> {
    let m = match cfg.m {
        Some(m) => {
            if m < 2 || m > t.p() || !t.q().is_multiple_of(m) {
                return Err(Outcome::invalid(format!(
                    "invalid --m {m}: need 2 ≤ m ≤ p = {} and m | q = {}",
                    t.p(),
                    t.q()
                )));
            }
            m
        }
        None => match smallest_divisor_in_range(t.p(), t.q()) {
            Some(m) => m,
            None => {
                return Err(Outcome {
                    status: Status::NotRealizable,
                    message: format!(
                        "{{{},{}}} is not realizable: no divisor of q in [2,p]",
                        t.p(),
                        t.q()
                    ),
                    body: String::new(),
                })
            }
        },
    };
    construct_sigma(t.p(), m).map_err(|e| Outcome {
        status: Status::VerificationFailed,
        message: e.to_string(),
        body: String::new(),
    })
}

fn cmd_sigma(cfg: &RunConfig, t: TessellationType) -> Outcome {
    let witness = match chosen_witness(cfg, t) {
        Ok(w) => w,
        Err(mut o) => {
            if o.status == Status::NotRealizable {
                let cert = Certificate::new(t, None);
                o.body = match cfg.format {
                    Format::Json => json_line(&cert),
                    Format::Text => certificate_text(&cert),
                };
            }
            return o;
        }
    };
    let cert = Certificate::new(t, Some(&witness));
    let body = match cfg.format {
        Format::Json => json_line(&cert),
        Format::Text => certificate_text(&cert),
    };
    Outcome {
        status: Status::Ok,
        message: format!("sigma = {} realizes m = {}", witness.sigma, witness.m),
        body,
    }
}

fn cmd_oracle(cfg: &RunConfig, t: TessellationType) -> Outcome {
    let scan = match oracle_scan(t) {
        Ok(scan) => scan,
        Err(e) => return Outcome::invalid(e),
    };
    let cert = Certificate::new(t, scan.witness.as_ref());
    let body = match cfg.format {
        Format::Json => json_line(&cert),
        Format::Text => format!(
            "{}examined {} involutions\n",
            certificate_text(&cert),
            scan.examined
        ),
    };
    let (status, message) = match &scan.witness {
        Some(w) => (
            Status::Ok,
            format!(
                "witness {} found after {} candidates",
                w.sigma, scan.examined
            ),
        ),
        None => (
            Status::NotRealizable,
            format!("no witness among all {} involutions", scan.examined),
        ),
    };
    Outcome {
        status,
        message,
        body,
    }
}

fn serialize_opt_f64<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    x.map(Fixed17).serialize(s)
}

#[derive(Debug, Clone, Serialize)]
struct Check {
    name: String,
    pass: bool,
    #[serde(serialize_with = "serialize_opt_f64")]
    residual: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
struct VerifyReport {
    p: u32,
    q: u32,
    depth: usize,
    m: u64,
    sigma: String,
    checks: Vec<Check>,
    tile_counts: (usize, usize),
    passed: bool,
}

fn cmd_verify(cfg: &RunConfig, t: TessellationType) -> Outcome {
    if cfg.depth > FREENESS_DEPTH_CAP {
        return Outcome::invalid(Error::DepthCap {
            depth: cfg.depth,
            cap: FREENESS_DEPTH_CAP,
        });
    }
    let witness = match chosen_witness(cfg, t) {
        Ok(w) => w,
        Err(o) => return o,
    };
    let failed = |e: Error| Outcome {
        status: Status::VerificationFailed,
        message: e.to_string(),
        body: String::new(),
    };
    let polygon = match Polygon::regular(t.p(), t.q()) {
        Ok(poly) => poly,
        Err(e) => return failed(e),
    };
    let ep = match EdgePairing::new(polygon, witness.sigma.clone()) {
        Ok(ep) => ep,
        Err(e) => return failed(e),
    };

    let mut checks = Vec::new();
    let inverse_residual = (1..=ep.p())
        .map(|i| {
            let j = ep.sigma().apply(i);
            ep.gen(j).compose(ep.gen(i)).identity_residual()
        })
        .fold(0.0, f64::max);
    checks.push(Check {
        name: "inverse_law".into(),
        pass: inverse_residual < ISOMETRY_EQ_TOL,
        residual: Some(inverse_residual),
    });
    for i in 1..=ep.p() {
        let residual = match ep.vertex_relation_residual(t.q(), i) {
            Ok(r) => r,
            Err(e) => return failed(e),
        };
        checks.push(Check {
            name: format!("vertex_relation_v{i}"),
            pass: residual < ISOMETRY_EQ_TOL,
            residual: Some(residual),
        });
    }
    let freeness = match freeness_check(&ep, cfg.depth) {
        Ok(r) => r,
        Err(e) => return failed(e),
    };
    checks.push(Check {
        name: "transitive".into(),
        pass: freeness.transitive_ok,
        residual: None,
    });
    checks.push(Check {
        name: "free".into(),
        pass: freeness.free_ok,
        residual: Some(freeness.max_residual),
    });
    checks.push(Check {
        name: "tile_counts_agree".into(),
        pass: freeness.tile_counts.0 == freeness.tile_counts.1,
        residual: None,
    });

    let passed = checks.iter().all(|c| c.pass);
    let report = VerifyReport {
        p: t.p(),
        q: t.q(),
        depth: cfg.depth,
        m: witness.m,
        sigma: witness.sigma.to_string(),
        checks,
        tile_counts: freeness.tile_counts,
        passed,
    };
    let body = match cfg.format {
        Format::Json => json_line(&report),
        Format::Text => {
            let mut s = format!(
                "{{{},{}}} sigma = {} (m = {}), depth {}\n",
                report.p, report.q, report.sigma, report.m, report.depth
            );
            for c in &report.checks {
                let residual = c.residual.map(format_f64).unwrap_or_else(|| "-".into());
                let _ = writeln!(
                    s,
                    "{:<22} {:<4} {residual}",
                    c.name,
                    if c.pass { "pass" } else { "FAIL" }
                );
            }
            let _ = writeln!(
                s,
                "tiles: generated {} reference {}",
                report.tile_counts.0, report.tile_counts.1
            );
            s
        }
    };
    let failures = report.checks.iter().filter(|c| !c.pass).count();
    let (status, message) = if passed {
        (
            Status::Ok,
            format!("all {} checks passed", report.checks.len()),
        )
    } else {
        (
            Status::VerificationFailed,
            format!("{failures} of {} checks failed", report.checks.len()),
        )
    };
    Outcome {
        status,
        message,
        body,
    }
}

#[derive(Serialize)]
struct RenderReport {
    p: u32,
    q: u32,
    depth: usize,
    tiles: usize,
    colored: bool,
    out: String,
}

fn cmd_render(cfg: &RunConfig, t: TessellationType) -> Outcome {
    if cfg.depth > PATCH_DEPTH_CAP {
        return Outcome::invalid(Error::DepthCap {
            depth: cfg.depth,
            cap: PATCH_DEPTH_CAP,
        });
    }
    let failed = |e: Error| Outcome {
        status: Status::VerificationFailed,
        message: e.to_string(),
        body: String::new(),
    };
    let polygon = match Polygon::regular(t.p(), t.q()) {
        Ok(poly) => poly,
        Err(e) => return failed(e),
    };
    let reference = match reference_patch(t.p(), t.q(), cfg.depth) {
        Ok(patch) => patch,
        Err(e) => return failed(e),
    };
    let generated = match smallest_divisor_in_range(t.p(), t.q()) {
        Some(m) => {
            let built = construct_sigma(t.p(), m)
                .and_then(|w| EdgePairing::new(polygon.clone(), w.sigma))
                .and_then(|ep| generate_patch(&ep, cfg.depth));
            match built {
                Ok(patch) => Some(patch),
                Err(e) => return failed(e),
            }
        }
        None => None,
    };
    let image = svg::render(&polygon, &reference, generated.as_ref());
    let report = RenderReport {
        p: t.p(),
        q: t.q(),
        depth: cfg.depth,
        tiles: reference.len(),
        colored: generated.is_some(),
        out: cfg
            .out
            .as_ref()
            .map(|p| p.display().to_string())
            .unwrap_or_else(|| "-".into()),
    };
    let message = format!("rendered {} tiles", reference.len());
    match &cfg.out {
        Some(path) => {
            if let Err(e) = write_atomically(path, image.as_bytes()) {
                return Outcome {
                    status: Status::Io,
                    message: format!("cannot write {}: {e}", path.display()),
                    body: String::new(),
                };
            }
            let body = match cfg.format {
                Format::Json => json_line(&report),
                Format::Text => format!("{message} to {}\n", report.out),
            };
            Outcome {
                status: Status::Ok,
                message,
                body,
            }
        }
        None => Outcome {
            status: Status::Ok,
            message,
            body: image,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("fuchsian-tiles").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn decide_exit_codes() {
        let (code, out, err) = run_str(&["decide", "3", "8"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"p\":3,\"q\":8,\"realizable\":true,\"prime\":2}\n");
        assert!(err.starts_with("status=ok code=0"));

        assert_eq!(run_str(&["decide", "3", "7"]).0, 1);

        let (code, _, err) = run_str(&["decide", "3", "5"]);
        assert_eq!(code, 2);
        assert!(err.contains("not hyperbolic: 1/p+1/q ≥ 1/2"), "{err}");
    }

    #[test]
    fn bad_arguments_are_invalid_input() {
        for args in [
            vec!["decide", "x", "8"],
            vec!["frobnicate", "3", "8"],
            vec!["decide", "3"],
            vec!["decide", "2", "9"],
            vec!["sigma", "5", "4", "--m", "3"],
            vec!["verify", "3", "8", "--depth", "5"],
            vec!["render", "3", "8", "--depth", "6"],
            vec!["oracle", "13", "4"],
        ] {
            let (code, _, err) = run_str(&args);
            assert_eq!(code, 2, "{args:?}: {err}");
            assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
            assert!(err.starts_with("status=invalid-input code=2: "), "{err}");
        }
    }

    #[test]
    fn sigma_text_format() {
        let (code, out, _) = run_str(&["sigma", "7", "3", "--format", "text"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{7,3}: sigma = (3 7)(5 6), sigma*rho = (1 2 7)(3 4 6), order m = 3\n"
        );
    }

    #[test]
    fn sigma_honours_explicit_m() {
        let (code, out, _) = run_str(&["sigma", "4", "6", "--m", "3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["m"], 3);
    }
}
