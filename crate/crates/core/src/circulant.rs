//! Doubly-circulant codes G = (λI | M) with M circulant.
//!
//! Indices in this module are 1-based modulo k in documentation and reports
//! (x_1..x_k); the vectors themselves are ordinary 0-based slices.

use std::fmt;

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{format_elem, Elem, Field, FieldRef};
use crate::matrix::{minors_nonsingular_range, Matrix, MinorReport, SubmatrixFailure};

/// The k×k circulant whose (i+1)-st row is the first row shifted i places
/// right: M_{ij} = x_{j−i+1 mod k}.
pub fn circulant(field: &FieldRef, x: &[Elem]) -> Result<Matrix> {
    let k = x.len();
    if k < 2 {
        return Err(Error::OutOfRange(format!("circulant size {k} < 2")));
    }
    let mut data = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            data.push(x[(j + k - i) % k]);
        }
    }
    Matrix::new(field, k, k, data)
}

/// H_m(x) = Σ_i x_i x_{i+m}^q with indices mod k.
pub fn h_m(field: &Field, x: &[Elem], m: usize) -> Elem {
    let k = x.len();
    (0..k).fold(Elem::ZERO, |acc, i| {
        field.add(acc, field.mul(x[i], field.conj(x[(i + m) % k])))
    })
}

/// Cyclic rotation moving entry i to position i + s.
pub fn rotate(x: &[Elem], s: usize) -> Vec<Elem> {
    let k = x.len();
    (0..k).map(|i| x[(i + k - s % k) % k]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantCandidate {
    pub field: FieldRef,
    pub x: Vec<Elem>,
}

impl CirculantCandidate {
    pub fn new(field: &FieldRef, x: Vec<Elem>) -> Result<Self> {
        field.require_square()?;
        if x.len() < 2 {
            return Err(Error::OutOfRange(format!("circulant size {} < 2", x.len())));
        }
        Ok(CirculantCandidate {
            field: field.clone(),
            x,
        })
    }

    pub fn k(&self) -> usize {
        self.x.len()
    }

    pub fn matrix(&self) -> Matrix {
        circulant(&self.field, &self.x).expect("length checked at construction")
    }
}

/// The first violated condition, in evaluation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// x_index = 0 (1-based), i.e. a singular 1×1 submatrix.
    ZeroEntry {
        index: usize,
    },
    /// H_m(x) ≠ 0 for some 1 ≤ m ≤ ⌊k/2⌋.
    HNonzero {
        m: usize,
    },
    /// H_0(x) = Σ x_i^{q+1} = 0.
    HZeroVanishes,
    SingularMinor(SubmatrixFailure),
}

impl Violation {
    /// Stable check name used in reports and certificates.
    pub fn check_name(&self) -> String {
        match self {
            Violation::ZeroEntry { .. } => "nonzero_entries".into(),
            Violation::HNonzero { m } => format!("h_{m}"),
            Violation::HZeroVanishes => "h_0".into(),
            Violation::SingularMinor(f) => format!("minors_{}", f.j),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroEntry { index } => write!(f, "x_{index} = 0"),
            Violation::HNonzero { m } => write!(f, "H_{m}(x) != 0"),
            Violation::HZeroVanishes => write!(f, "H_0(x) = 0"),
            Violation::SingularMinor(s) => write!(f, "singular submatrix {s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    /// H_m(x) for m = 0..=⌊k/2⌋.
    pub h_values: Vec<Elem>,
    /// Per-size minor results for j = 2..=⌊k/2⌋ (only sizes that were reached).
    pub minor_status: Vec<(usize, MinorReport)>,
    pub lambda: Option<Elem>,
    pub verdict: Result<(), Violation>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict.is_ok()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, h) in self.h_values.iter().enumerate() {
            writeln!(f, "H_{m} = {}", format_elem(*h))?;
        }
        for (j, r) in &self.minor_status {
            match &r.failure {
                None => writeln!(f, "minors {j}x{j}: {} nonsingular", r.checked)?,
                Some(s) => writeln!(f, "minors {j}x{j}: singular at {s}")?,
            }
        }
        if let Some(l) = self.lambda {
            writeln!(f, "lambda = {}", format_elem(l))?;
        }
        match &self.verdict {
            Ok(()) => write!(f, "verdict: pass"),
            Err(v) => write!(f, "verdict: fail ({v})"),
        }
    }
}

/// Evaluates, fail-fast: all x_i ≠ 0; H_m = 0 for m = 1..⌊k/2⌋; H_0 ≠ 0;
/// all j×j minors of M nonsingular for j = 2..⌊k/2⌋.
pub fn check_candidate(c: &CirculantCandidate) -> CheckReport {
    let f = &c.field;
    let k = c.k();
    let half = k / 2;
    let h_values: Vec<Elem> = (0..=half).map(|m| h_m(f, &c.x, m)).collect();
    let mut report = CheckReport {
        h_values,
        minor_status: Vec::new(),
        lambda: None,
        verdict: Ok(()),
    };
    if let Some(i) = c.x.iter().position(|a| a.is_zero()) {
        report.verdict = Err(Violation::ZeroEntry { index: i + 1 });
        return report;
    }
    if let Some(m) = (1..=half).find(|&m| !report.h_values[m].is_zero()) {
        report.verdict = Err(Violation::HNonzero { m });
        return report;
    }
    if report.h_values[0].is_zero() {
        report.verdict = Err(Violation::HZeroVanishes);
        return report;
    }
    let m = c.matrix();
    for j in 2..=half {
        let r = minors_nonsingular_range(&m, j, j);
        let failure = r.failure.clone();
        report.minor_status.push((j, r));
        if let Some(s) = failure {
            report.verdict = Err(Violation::SingularMinor(s));
            return report;
        }
    }
    report.lambda = choose_lambda(c).ok();
    report
}

/// Gram matrix of (λI | M) without the λ part: M · (M^σ)ᵗ, entries H_{i−r}.
fn row_gram(c: &CirculantCandidate) -> Result<Matrix> {
    let m = c.matrix();
    m.mul(&m.conj()?.transpose())
}

/// The λ = ε^j of smallest j for which (λI | M) is Hermitian self-orthogonal.
pub fn choose_lambda(c: &CirculantCandidate) -> Result<Elem> {
    let f = &c.field;
    let h0 = h_m(f, &c.x, 0);
    if h0.is_zero() {
        return Err(Error::CheckFailed("H_0(x) = 0, no lambda exists".into()));
    }
    let gram = row_gram(c)?;
    let k = c.k();
    let off_diagonal_zero = (0..k).all(|i| (0..k).all(|r| i == r || gram[(i, r)].is_zero()));
    if !off_diagonal_zero {
        return Err(Error::CheckFailed(
            "rows of M are not mutually orthogonal; no lambda makes G self-orthogonal".into(),
        ));
    }
    for lambda in f.nonzero() {
        let n = f.norm(lambda)?;
        if (0..k).all(|i| f.add(n, gram[(i, i)]).is_zero()) {
            let code = assemble(c, lambda)?;
            if code.is_self_orthogonal() {
                return Ok(lambda);
            }
        }
    }
    Err(Error::CheckFailed(
        "no lambda makes G self-orthogonal".into(),
    ))
}

fn assemble(c: &CirculantCandidate, lambda: Elem) -> Result<LinearCode> {
    let g = Matrix::identity(&c.field, c.k())
        .scale(lambda)
        .hstack(&c.matrix())?;
    LinearCode::new(g)
}

/// The doubly-circulant code (λI | M) for a passing candidate.
pub fn build_code(c: &CirculantCandidate) -> Result<(LinearCode, Elem)> {
    let report = check_candidate(c);
    if let Err(v) = report.verdict {
        return Err(Error::CheckFailed(format!("candidate fails: {v}")));
    }
    let lambda = report
        .lambda
        .ok_or_else(|| Error::CheckFailed("no lambda".into()))?;
    Ok((assemble(c, lambda)?, lambda))
}

/// (M^σ)ᵗ · M = −λ^{q+1} I, i.e. (M^σ)ᵗ = −λ^{q+1} M⁻¹.
pub fn sesqui_condition(m: &Matrix, lambda: Elem) -> Result<bool> {
    let f = m.field();
    if m.rows() != m.cols() {
        return Err(Error::Dimension(
            "sesqui_condition needs a square matrix".into(),
        ));
    }
    if m.det()?.is_zero() {
        return Err(Error::Singular);
    }
    let lhs = m.conj()?.transpose().mul(m)?;
    let rhs = Matrix::identity(f, m.rows()).scale(f.neg(f.norm(lambda)?));
    Ok(lhs == rhs)
}

/// Expands the free entries (x_1, …, x_{(k+1)/2}) of a vector with
/// x_j = x_{k+2−j}. Only odd k is allowed: for even k the circulant always
/// contains a 2×2 submatrix with two equal columns.
pub fn symmetric_expand(free: &[Elem], k: usize) -> Result<Vec<Elem>> {
    if k.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!(
            "symmetric first rows need odd k (k = {k} forces a singular 2x2 submatrix)"
        )));
    }
    let want = k.div_ceil(2);
    if free.len() != want {
        return Err(Error::Dimension(format!(
            "k = {k} needs {want} free entries, got {}",
            free.len()
        )));
    }
    let mut x = free.to_vec();
    for j in want + 1..=k {
        x.push(free[k + 2 - j - 1]);
    }
    Ok(x)
}
