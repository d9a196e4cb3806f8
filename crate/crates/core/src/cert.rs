//! Certificates: a line-oriented record of a verified construction, the
//! checks it passed, and the quantum MDS parameters it implies.
//!
//! Layout (one `key: value` per line, in this order):
//!
//! ```text
//! format-version: 1
//! p: 3
//! e: 2
//! modulus: 2,2
//! q: 3
//! kind: circulant
//! k: 5
//! x: e^2,e^3,e^3,e^2,e^0
//! lambda: e^1
//! n: 10
//! dim: 5
//! dist: 6
//! checks.nonzero_entries: pass
//! ...
//! quantum: [[10,0,6]]_3
//! digest: sha256:<hex of every preceding byte>
//! ```
//!
//! GRS certificates carry `h:` instead of `x:` and `lambda: -`. `dim` and
//! `dist` describe the code C with C^{⊥h} ≤ C; the quantum triple is
//! [[n, 2·dim − n, dist]]_q.

use std::fmt;

use sha2::{Digest, Sha256};

use crate::circulant::{check_candidate, h_m, CirculantCandidate};
use crate::codes::{binomial, mds_certify, LinearCode, MdsStrategy, QuadricReport, MINOR_BUDGET};
use crate::error::{Error, Result};
use crate::gf::{format_elem, format_vector, Elem, Field, FieldRef};
use crate::grs::{check_parameters, verify_orthogonality_identity, GrsSpec};
use crate::poly::Poly;

pub const FORMAT_VERSION: u32 = 1;
/// Sampled minors for the analytic GRS strategy.
pub const ANALYTIC_SAMPLES: usize = 10_000;
pub const ANALYTIC_SEED: u64 = 0x5eed;

/// What a certificate was built from.
#[derive(Clone, Debug)]
pub enum Construction {
    Grs(GrsSpec),
    Circulant(CirculantCandidate),
}

impl Construction {
    pub fn field(&self) -> &FieldRef {
        match self {
            Construction::Grs(s) => &s.field,
            Construction::Circulant(c) => &c.field,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Construction::Grs(_) => "grs",
            Construction::Circulant(_) => "circulant",
        }
    }

    pub fn k(&self) -> usize {
        match self {
            Construction::Grs(s) => s.k,
            Construction::Circulant(c) => c.k(),
        }
    }
}

/// A passed check: `checks.<name>: <status> <detail>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// `pass` for verified properties, `info` for recorded measurements.
    pub status: &'static str,
    pub detail: String,
}

impl Check {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: "pass",
            detail: detail.into(),
        }
    }

    fn info(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: "info",
            detail: detail.into(),
        }
    }

    fn value(&self) -> String {
        if self.detail.is_empty() {
            self.status.to_string()
        } else {
            format!("{} {}", self.status, self.detail)
        }
    }
}

/// The first check that did not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    pub name: String,
    pub detail: String,
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.detail)
    }
}

impl From<CheckFailure> for Error {
    fn from(c: CheckFailure) -> Error {
        Error::CheckFailed(c.to_string())
    }
}

fn fail(name: impl Into<String>, detail: impl Into<String>) -> CheckFailure {
    CheckFailure {
        name: name.into(),
        detail: detail.into(),
    }
}

/// [[n, k, d]]_q.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuantumTriple {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u32,
    /// Implied by shortening, not constructed.
    pub derived: bool,
}

impl QuantumTriple {
    /// Quantum Singleton bound with equality: k = n − 2d + 2.
    pub fn is_mds(&self) -> bool {
        self.k + 2 * self.d == self.n + 2
    }

    /// Pure shortening r times: [[n−r, k+r, d−r]], valid for r ≤ d−2.
    pub fn shorten(&self, r: usize) -> Result<QuantumTriple> {
        if r + 2 > self.d {
            return Err(Error::OutOfRange(format!(
                "shortening {self} by r = {r} needs r <= d-2 = {}",
                self.d.saturating_sub(2)
            )));
        }
        Ok(QuantumTriple {
            n: self.n - r,
            k: self.k + r,
            d: self.d - r,
            q: self.q,
            derived: self.derived || r > 0,
        })
    }

    fn parse(s: &str) -> Result<QuantumTriple> {
        let bad = || Error::parse("quantum triple", s);
        let (body, q) = s
            .strip_prefix("[[")
            .and_then(|t| t.split_once("]]_"))
            .ok_or_else(bad)?;
        let parts: Vec<usize> = body
            .split(',')
            .map(|t| t.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let [n, k, d] = parts[..] else {
            return Err(bad());
        };
        Ok(QuantumTriple {
            n,
            k,
            d,
            q: q.parse().map_err(|_| bad())?,
            derived: false,
        })
    }
}

impl fmt::Display for QuantumTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]_{}", self.n, self.k, self.d, self.q)
    }
}

/// Construction data as recorded in the file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionData {
    Grs { h: Poly },
    Circulant { x: Vec<Elem> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub field: FieldRef,
    pub q: u32,
    pub k: usize,
    pub data: ConstructionData,
    pub lambda: Option<Elem>,
    pub n: usize,
    pub dim: usize,
    pub dist: usize,
    pub checks: Vec<Check>,
    pub quantum: QuantumTriple,
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self.data {
            ConstructionData::Grs { .. } => "grs",
            ConstructionData::Circulant { .. } => "circulant",
        }
    }

    /// Everything above the digest line.
    fn body(&self) -> String {
        let f = &self.field;
        let modulus: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
        let mut s = String::new();
        let mut line = |k: &str, v: String| {
            s.push_str(k);
            s.push_str(": ");
            s.push_str(&v);
            s.push('\n');
        };
        line("format-version", FORMAT_VERSION.to_string());
        line("p", f.characteristic().to_string());
        line("e", f.degree().to_string());
        line("modulus", modulus.join(","));
        line("q", self.q.to_string());
        line("kind", self.kind().to_string());
        line("k", self.k.to_string());
        match &self.data {
            ConstructionData::Grs { h } => line("h", h.to_text()),
            ConstructionData::Circulant { x } => line("x", format_vector(x)),
        }
        line("lambda", self.lambda.map_or("-".into(), format_elem));
        line("n", self.n.to_string());
        line("dim", self.dim.to_string());
        line("dist", self.dist.to_string());
        for c in &self.checks {
            line(&format!("checks.{}", c.name), c.value());
        }
        line("quantum", self.quantum.to_string());
        s
    }

    pub fn digest(&self) -> String {
        digest_of(&self.body())
    }

    /// The complete file contents.
    pub fn to_text(&self) -> String {
        let body = self.body();
        let d = digest_of(&body);
        format!("{body}digest: {d}\n")
    }

    /// Parses a certificate file. Only syntax is checked here; see
    /// [`verify_certificate`] for re-verification.
    pub fn parse(text: &str) -> Result<ParsedCertificate> {
        parse(text)
    }

    /// The construction this certificate describes.
    pub fn construction(&self) -> Result<Construction> {
        match &self.data {
            ConstructionData::Grs { h } => Ok(Construction::Grs(GrsSpec {
                field: self.field.clone(),
                q: self.q,
                k: self.k,
                h: h.clone(),
            })),
            ConstructionData::Circulant { x } => Ok(Construction::Circulant(
                CirculantCandidate::new(&self.field, x.clone())?,
            )),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn digest_of(body: &str) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(body.as_bytes())))
}

/// A parsed file together with the digest it claims.
#[derive(Clone, Debug)]
pub struct ParsedCertificate {
    pub certificate: Certificate,
    pub recorded_digest: String,
}

/// Runs every check for a construction, stopping at the first failure.
/// Returns the check list and the certified classical parameters
/// (n, dim, dist) of the dual-containing code together with λ.
fn run_checks(c: &Construction) -> std::result::Result<Outcome, CheckFailure> {
    match c {
        Construction::Grs(spec) => grs_checks(spec),
        Construction::Circulant(cand) => circulant_checks(cand),
    }
}

struct Outcome {
    checks: Vec<Check>,
    lambda: Option<Elem>,
    n: usize,
    dim: usize,
    dist: usize,
}

fn internal(name: &str, e: Error) -> CheckFailure {
    fail(name, e.to_string())
}

fn mds_check(
    code: &LinearCode,
    strategy: MdsStrategy,
    on: &str,
) -> std::result::Result<Check, CheckFailure> {
    let report = mds_certify(code, &strategy).map_err(|e| internal("mds", e))?;
    if !report.certified {
        return Err(fail("mds", report.to_string()));
    }
    let mut detail = format!("{report}");
    if let MdsStrategy::AnalyticGrs { seed, .. } = strategy {
        detail.push_str(&format!(" seed={seed}"));
    }
    Ok(Check::pass("mds", format!("{detail} on {on}")))
}

fn grs_checks(spec: &GrsSpec) -> std::result::Result<Outcome, CheckFailure> {
    let f = &spec.field;
    let (q, k) = (spec.q, spec.k);
    if f.q() != Some(q) {
        return Err(fail(
            "parameters",
            format!("field has q = {:?}, certificate says {q}", f.q()),
        ));
    }
    check_parameters(q, k).map_err(|e| internal("parameters", e))?;
    let mut checks = vec![Check::pass(
        "parameters",
        format!("k={k} <= q={q}, k != q-1"),
    )];

    let d = q as usize - k;
    if spec.h.degree() != Some(d) {
        return Err(fail(
            "h",
            format!("degree {:?} != q-k = {d}", spec.h.degree()),
        ));
    }
    if let Some(a) = f.elements().find(|&a| spec.h.eval(f, a).is_zero()) {
        return Err(fail("h", format!("h({}) = 0", format_elem(a))));
    }
    checks.push(Check::pass("h", format!("degree {d}, no roots")));

    let orth = verify_orthogonality_identity(spec).map_err(|e| internal("orthogonality", e))?;
    if !orth.top_is_one() {
        return Err(fail(
            "top_coefficient",
            format!(
                "coefficient of X^{} in h^(q+1) is {}, expected e^0",
                d * (q as usize + 1),
                format_elem(orth.top_coefficient)
            ),
        ));
    }
    checks.push(Check::pass("top_coefficient", ""));
    if let Some(&(i, j)) = orth.non_orthogonal.first() {
        return Err(fail(
            "orthogonality",
            format!("basis codewords X^{i}, X^{j} not orthogonal"),
        ));
    }
    checks.push(Check::pass(
        "orthogonality",
        format!("{} basis pairs", orth.pairs_checked),
    ));

    let d_code = spec.code().map_err(|e| internal("dual_containment", e))?;
    let c_code = d_code.hermitian_dual();
    if !c_code.contains_hermitian_dual() {
        return Err(fail("dual_containment", "C^perp_h is not contained in C"));
    }
    let n = d_code.len();
    checks.push(Check::pass(
        "dual_containment",
        format!(
            "D = C^perp_h [{n},{k}] self-orthogonal, C [{n},{}]",
            c_code.dim()
        ),
    ));

    let strategy = if binomial(n, k) <= MINOR_BUDGET {
        MdsStrategy::full()
    } else {
        MdsStrategy::AnalyticGrs {
            provenance: spec.general().provenance(),
            samples: ANALYTIC_SAMPLES,
            seed: ANALYTIC_SEED,
        }
    };
    checks.push(mds_check(&d_code, strategy, "D")?);
    checks.push(Check::info(
        "quadric",
        QuadricReport::for_code(&d_code).to_string(),
    ));

    Ok(Outcome {
        checks,
        lambda: None,
        n,
        dim: n - k,
        dist: k + 1,
    })
}

fn circulant_checks(cand: &CirculantCandidate) -> std::result::Result<Outcome, CheckFailure> {
    let f = &cand.field;
    let k = cand.k();
    let report = check_candidate(cand);
    if let Err(v) = &report.verdict {
        return Err(fail(v.check_name(), v.to_string()));
    }
    let mut checks = vec![Check::pass("nonzero_entries", "")];
    for m in 1..=k / 2 {
        checks.push(Check::pass(format!("h_{m}"), ""));
    }
    checks.push(Check::pass(
        "h_0",
        format!("H_0={}", format_elem(report.h_values[0])),
    ));
    for (j, r) in &report.minor_status {
        checks.push(Check::pass(
            format!("minors_{j}"),
            format!("{} nonsingular", r.checked),
        ));
    }
    let lambda = report
        .lambda
        .ok_or_else(|| fail("lambda", "no lambda makes (lambda I | M) self-orthogonal"))?;
    let norm = f.norm(lambda).map_err(|e| internal("lambda", e))?;
    if f.add(norm, h_m(f, &cand.x, 0)) != Elem::ZERO {
        return Err(fail("lambda", "lambda^(q+1) != -H_0"));
    }
    checks.push(Check::pass("lambda", "lambda^(q+1) = -H_0"));

    let (code, _) = crate::circulant::build_code(cand).map_err(|e| internal("self_dual", e))?;
    if !code.is_hermitian_self_dual() {
        return Err(fail(
            "self_dual",
            "(lambda I | M) is not Hermitian self-dual",
        ));
    }
    checks.push(Check::pass("self_dual", ""));
    checks.push(mds_check(&code, MdsStrategy::full(), "G")?);
    checks.push(Check::info(
        "quadric",
        QuadricReport::for_code(&code).to_string(),
    ));

    Ok(Outcome {
        checks,
        lambda: Some(lambda),
        n: 2 * k,
        dim: k,
        dist: k + 1,
    })
}

/// Re-verifies a construction and assembles its certificate.
pub fn make_certificate(c: &Construction) -> Result<Certificate> {
    let field = c.field().clone();
    let q = field.require_square()?;
    let out = run_checks(c)?;
    let data = match c {
        Construction::Grs(s) => ConstructionData::Grs { h: s.h.clone() },
        Construction::Circulant(cand) => ConstructionData::Circulant { x: cand.x.clone() },
    };
    let quantum = QuantumTriple {
        n: out.n,
        k: 2 * out.dim - out.n,
        d: out.dist,
        q,
        derived: false,
    };
    debug_assert!(quantum.is_mds());
    Ok(Certificate {
        field,
        q,
        k: c.k(),
        data,
        lambda: out.lambda,
        n: out.n,
        dim: out.dim,
        dist: out.dist,
        checks: out.checks,
        quantum,
    })
}

/// Rains shortening of the certified triple: [[n−r, k+r, d−r]]_q for
/// 0 ≤ r ≤ d−2. The result is implied, not constructed.
pub fn derive_params(cert: &Certificate, r: usize) -> Result<QuantumTriple> {
    let mut t = cert.quantum.shorten(r)?;
    t.derived = true;
    Ok(t)
}

/// Where a re-verification first disagreed with the file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Divergence {
    /// A check failed when re-run on the recorded construction data.
    CheckFailed(CheckFailure),
    /// A re-run check produced a different line.
    CheckMismatch {
        name: String,
        recorded: String,
        recomputed: String,
    },
    /// A recorded field disagrees with the recomputed value.
    Field {
        key: &'static str,
        recorded: String,
        recomputed: String,
    },
    Digest {
        recorded: String,
        recomputed: String,
    },
}

impl Divergence {
    /// Name of the failing check or key.
    pub fn name(&self) -> String {
        match self {
            Divergence::CheckFailed(c) => c.name.clone(),
            Divergence::CheckMismatch { name, .. } => name.clone(),
            Divergence::Field { key, .. } => key.to_string(),
            Divergence::Digest { .. } => "digest".into(),
        }
    }
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Divergence::CheckFailed(c) => write!(f, "check {} fails: {}", c.name, c.detail),
            Divergence::CheckMismatch {
                name,
                recorded,
                recomputed,
            } => write!(
                f,
                "check {name}: recorded {recorded:?}, recomputed {recomputed:?}"
            ),
            Divergence::Field {
                key,
                recorded,
                recomputed,
            } => write!(f, "{key}: recorded {recorded:?}, recomputed {recomputed:?}"),
            Divergence::Digest {
                recorded,
                recomputed,
            } => {
                write!(f, "digest: recorded {recorded}, recomputed {recomputed}")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub certificate: Certificate,
    pub checks_rerun: usize,
    pub divergence: Option<Divergence>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.divergence.is_none()
    }
}

/// Parses `text`, rebuilds the construction and re-runs every check.
/// Parse problems are errors; disagreements are reported as a [`Divergence`].
pub fn verify_certificate(text: &str) -> Result<VerifyReport> {
    let parsed = parse(text)?;
    let cert = parsed.certificate;
    let construction = cert.construction()?;
    let report = |checks_rerun, divergence| VerifyReport {
        certificate: cert.clone(),
        checks_rerun,
        divergence,
    };
    let fresh = match make_certificate(&construction) {
        Ok(c) => c,
        Err(Error::CheckFailed(_)) => {
            let failure = run_checks(&construction)
                .err()
                .expect("make_certificate failed");
            return Ok(report(0, Some(Divergence::CheckFailed(failure))));
        }
        Err(e) => return Err(e),
    };
    let ran = fresh.checks.len();
    let recorded: Vec<(String, String)> = cert
        .checks
        .iter()
        .map(|c| (c.name.clone(), c.value()))
        .collect();
    let recomputed: Vec<(String, String)> = fresh
        .checks
        .iter()
        .map(|c| (c.name.clone(), c.value()))
        .collect();
    for i in 0..recorded.len().max(recomputed.len()) {
        let r = recorded.get(i);
        let c = recomputed.get(i);
        if r != c {
            let name = c.or(r).map(|p| p.0.clone()).unwrap_or_default();
            return Ok(report(
                ran,
                Some(Divergence::CheckMismatch {
                    name,
                    recorded: r.map(|p| format!("{}: {}", p.0, p.1)).unwrap_or_default(),
                    recomputed: c.map(|p| format!("{}: {}", p.0, p.1)).unwrap_or_default(),
                }),
            ));
        }
    }
    let fields: [(&'static str, String, String); 5] = [
        (
            "lambda",
            cert.lambda.map_or("-".into(), format_elem),
            fresh.lambda.map_or("-".into(), format_elem),
        ),
        ("n", cert.n.to_string(), fresh.n.to_string()),
        ("dim", cert.dim.to_string(), fresh.dim.to_string()),
        ("dist", cert.dist.to_string(), fresh.dist.to_string()),
        (
            "quantum",
            cert.quantum.to_string(),
            fresh.quantum.to_string(),
        ),
    ];
    for (key, recorded, recomputed) in fields {
        if recorded != recomputed {
            return Ok(report(
                ran,
                Some(Divergence::Field {
                    key,
                    recorded,
                    recomputed,
                }),
            ));
        }
    }
    let recomputed = cert.digest();
    if recomputed != parsed.recorded_digest {
        return Ok(report(
            ran,
            Some(Divergence::Digest {
                recorded: parsed.recorded_digest,
                recomputed,
            }),
        ));
    }
    Ok(report(ran, None))
}

struct Lines<'a> {
    iter: std::iter::Peekable<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn peek_key(&mut self) -> Option<&'a str> {
        self.iter
            .peek()
            .and_then(|l| l.split_once(": ").map(|(k, _)| k))
    }

    fn expect(&mut self, key: &'static str) -> Result<&'a str> {
        let line = self
            .iter
            .next()
            .ok_or_else(|| Error::parse("certificate", format!("missing {key}")))?;
        match line.split_once(": ") {
            Some((k, v)) if k == key => Ok(v),
            _ => Err(Error::parse("certificate line", line)),
        }
    }

    fn number<T: std::str::FromStr>(&mut self, key: &'static str) -> Result<T> {
        let v = self.expect(key)?;
        v.parse()
            .map_err(|_| Error::parse("certificate number", format!("{key}: {v}")))
    }
}

fn parse(text: &str) -> Result<ParsedCertificate> {
    if !text.ends_with('\n') {
        return Err(Error::parse(
            "certificate",
            "file does not end with a newline",
        ));
    }
    let mut lines = Lines {
        iter: text.lines().peekable(),
    };
    let version: u32 = lines.number("format-version")?;
    if version != FORMAT_VERSION {
        return Err(Error::parse(
            "certificate format-version",
            version.to_string(),
        ));
    }
    let p: u32 = lines.number("p")?;
    let e: u32 = lines.number("e")?;
    let modulus: Vec<u32> = lines
        .expect("modulus")?
        .split(',')
        .map(|c| c.parse().map_err(|_| Error::parse("modulus", c)))
        .collect::<Result<_>>()?;
    let field: FieldRef = std::sync::Arc::new(Field::new(p, e, &modulus)?);
    let q: u32 = lines.number("q")?;
    if field.q() != Some(q) {
        return Err(Error::parse("certificate q", q.to_string()));
    }
    let kind = lines.expect("kind")?;
    let k: usize = lines.number("k")?;
    let data = match kind {
        "grs" => ConstructionData::Grs {
            h: Poly::parse(&field, lines.expect("h")?)?,
        },
        "circulant" => ConstructionData::Circulant {
            x: field.parse_vector(lines.expect("x")?)?,
        },
        other => return Err(Error::parse("certificate kind", other)),
    };
    if let ConstructionData::Circulant { x } = &data {
        if x.len() != k {
            return Err(Error::parse(
                "certificate x",
                format!("{} entries for k = {k}", x.len()),
            ));
        }
    }
    let lambda = match lines.expect("lambda")? {
        "-" => None,
        s => Some(field.parse_elem(s)?),
    };
    let n: usize = lines.number("n")?;
    let dim: usize = lines.number("dim")?;
    let dist: usize = lines.number("dist")?;
    let mut checks = Vec::new();
    while let Some(key) = lines.peek_key() {
        let Some(name) = key.strip_prefix("checks.") else {
            break;
        };
        let value = lines
            .iter
            .next()
            .expect("peeked")
            .split_once(": ")
            .expect("peeked")
            .1;
        let (status, detail) = value.split_once(' ').unwrap_or((value, ""));
        let status = match status {
            "pass" => "pass",
            "info" => "info",
            _ => return Err(Error::parse("check status", value)),
        };
        if name.is_empty() {
            return Err(Error::parse("check name", key));
        }
        checks.push(Check {
            name: name.to_string(),
            status,
            detail: detail.to_string(),
        });
    }
    if checks.is_empty() {
        return Err(Error::parse("certificate", "no checks.* lines"));
    }
    let quantum = QuantumTriple::parse(lines.expect("quantum")?)?;
    let digest = lines.expect("digest")?.to_string();
    if !digest.starts_with("sha256:") {
        return Err(Error::parse("digest", digest));
    }
    if let Some(extra) = lines.iter.next() {
        return Err(Error::parse("trailing certificate line", extra));
    }
    Ok(ParsedCertificate {
        certificate: Certificate {
            field,
            q,
            k,
            data,
            lambda,
            n,
            dim,
            dist,
            checks,
            quantum,
        },
        recorded_digest: digest,
    })
}

/// A circulant first row from the published search results.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub id: &'static str,
    pub q: u32,
    pub k: usize,
    pub x: &'static str,
    /// Expected [[n, k, d]].
    pub quantum: (usize, usize, usize),
}

pub const WITNESSES: [Witness; 7] = [
    Witness {
        id: "k5q3",
        q: 3,
        k: 5,
        x: "e^2,e^3,e^3,e^2,e^0",
        quantum: (10, 0, 6),
    },
    Witness {
        id: "k5q4",
        q: 4,
        k: 5,
        x: "e^2,e^12,e^12,e^2,e^0",
        quantum: (10, 0, 6),
    },
    Witness {
        id: "k6q7",
        q: 7,
        k: 6,
        x: "e^21,e^44,e^8,e^9,e^12,e^0",
        quantum: (12, 0, 7),
    },
    Witness {
        id: "k7q5",
        q: 5,
        k: 7,
        x: "e^10,e^10,e^0,e^6,e^3,e^6,e^0",
        quantum: (14, 0, 8),
    },
    Witness {
        id: "k7q7",
        q: 7,
        k: 7,
        x: "e^4,e^40,e^45,e^0,e^0,e^45,e^40",
        quantum: (14, 0, 8),
    },
    Witness {
        id: "k9q5",
        q: 5,
        k: 9,
        x: "e^0,e^14,e^21,e^16,e^17,e^17,e^16,e^21,e^14",
        quantum: (18, 0, 10),
    },
    Witness {
        id: "k9q7",
        q: 7,
        k: 9,
        x: "e^0,e^12,e^2,e^17,e^13,e^13,e^17,e^2,e^12",
        quantum: (18, 0, 10),
    },
];

pub fn witness(id: &str) -> Result<&'static Witness> {
    WITNESSES.iter().find(|w| w.id == id).ok_or_else(|| {
        let known: Vec<&str> = WITNESSES.iter().map(|w| w.id).collect();
        Error::OutOfRange(format!(
            "unknown witness {id:?}; known: {}",
            known.join(", ")
        ))
    })
}

impl Witness {
    pub fn candidate(&self) -> Result<CirculantCandidate> {
        let field = Field::for_q(self.q)?;
        let x = field.parse_vector(self.x)?;
        if x.len() != self.k {
            return Err(Error::Dimension(format!(
                "witness {} has {} entries",
                self.id,
                x.len()
            )));
        }
        CirculantCandidate::new(&field, x)
    }

    /// Builds and certifies the witness, also checking the expected triple.
    pub fn certify(&self) -> Result<Certificate> {
        let cert = make_certificate(&Construction::Circulant(self.candidate()?))?;
        let t = cert.quantum;
        if (t.n, t.k, t.d) != self.quantum {
            return Err(Error::CheckFailed(format!(
                "quantum: witness {} gives {t}, expected [[{},{},{}]]",
                self.id, self.quantum.0, self.quantum.1, self.quantum.2
            )));
        }
        Ok(cert)
    }
}
