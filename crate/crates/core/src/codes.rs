//! Linear codes over F_{q²}: Hermitian duals, dual containment, MDS
//! certification, the quadric-dimension test and brute-force oracles.

use std::fmt;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldRef};
use crate::matrix::{det_in_place, Matrix};

/// Default cap on the number of k×k minors for full enumeration.
pub const MINOR_BUDGET: u128 = 1_000_000;
/// Default cap on the number of codewords for brute-force distance.
pub const CODEWORD_BUDGET: u128 = 1_000_000;

/// α(u, v) = Σ u_i v_i^q.
pub fn hermitian_inner(f: &Field, u: &[Elem], v: &[Elem]) -> Result<Elem> {
    f.require_square()?;
    if u.len() != v.len() {
        return Err(Error::Dimension(format!(
            "vectors of length {} and {}",
            u.len(),
            v.len()
        )));
    }
    Ok(u.iter()
        .zip(v)
        .fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, f.conj(b)))))
}

/// Gram matrix (α(g_i, g_j))_{ij} of the rows of `g`.
pub fn hermitian_gram(g: &Matrix) -> Result<Matrix> {
    g.mul(&g.conj()?.transpose())
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// A linear code given by a full-rank generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    g: Matrix,
}

impl LinearCode {
    pub fn new(g: Matrix) -> Result<LinearCode> {
        g.field().require_square()?;
        let rank = g.rank();
        if rank != g.rows() {
            return Err(Error::Dimension(format!(
                "generator has {} rows but rank {rank}",
                g.rows()
            )));
        }
        Ok(LinearCode { g })
    }

    pub fn from_rows(field: &FieldRef, n: usize, rows: &[Vec<Elem>]) -> Result<LinearCode> {
        LinearCode::new(Matrix::from_rows(field, n, rows)?)
    }

    /// The code spanned by `g`, after discarding dependent rows.
    pub fn spanned_by(g: &Matrix) -> Result<LinearCode> {
        LinearCode::new(g.row_space_basis())
    }

    pub fn field(&self) -> &FieldRef {
        self.g.field()
    }

    pub fn generator(&self) -> &Matrix {
        &self.g
    }

    pub fn len(&self) -> usize {
        self.g.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.g.cols() == 0
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn hermitian_dual(&self) -> LinearCode {
        let basis = self
            .g
            .null_space()
            .conj()
            .expect("square field checked at construction");
        LinearCode { g: basis }
    }

    /// C ≤ C^{⊥h}, i.e. every pair of generator rows is α-orthogonal.
    pub fn is_self_orthogonal(&self) -> bool {
        hermitian_gram(&self.g)
            .expect("square field checked at construction")
            .data()
            .iter()
            .all(|a| a.is_zero())
    }

    /// C^{⊥h} ≤ C, tested by the rank of the stacked generators.
    pub fn contains_hermitian_dual(&self) -> bool {
        let dual = self.hermitian_dual();
        let stacked = self
            .g
            .vstack(dual.generator())
            .expect("same field and length");
        stacked.rank() == self.dim()
    }

    pub fn is_hermitian_self_dual(&self) -> bool {
        2 * self.dim() == self.len() && self.contains_hermitian_dual()
    }

    pub fn same_row_space(&self, other: &LinearCode) -> bool {
        self.dim() == other.dim()
            && self.len() == other.len()
            && self
                .g
                .vstack(&other.g)
                .map(|s| s.rank() == self.dim())
                .unwrap_or(false)
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let Ok(row) = Matrix::from_rows(self.field(), self.len(), &[v.to_vec()]) else {
            return false;
        };
        self.g
            .vstack(&row)
            .map(|s| s.rank() == self.dim())
            .unwrap_or(false)
    }

    /// Codeword m·G.
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        if message.len() != self.dim() {
            return Err(Error::Dimension(format!(
                "message of length {} for a {}-dimensional code",
                message.len(),
                self.dim()
            )));
        }
        let f = self.field();
        let mut out = vec![Elem::ZERO; self.len()];
        for (i, &m) in message.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.g.row(i)) {
                *o = f.add(*o, f.mul(m, g));
            }
        }
        Ok(out)
    }
}

/// Evaluation data of a generalised Reed-Solomon code: coordinate i is
/// v_i·f(a_i), plus an optional last coordinate c·f_{k−1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrsProvenance {
    pub points: Vec<Elem>,
    pub multipliers: Vec<Elem>,
    pub extension: Option<Elem>,
}

impl GrsProvenance {
    pub fn len(&self) -> usize {
        self.points.len() + usize::from(self.extension.is_some())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Generator whose i-th row is the codeword of X^i.
    pub fn generator(&self, field: &FieldRef, k: usize) -> Result<Matrix> {
        if self.points.len() != self.multipliers.len() {
            return Err(Error::Dimension(
                "one multiplier per evaluation point".into(),
            ));
        }
        let rows: Vec<Vec<Elem>> = (0..k)
            .map(|i| {
                let mut row: Vec<Elem> = self
                    .points
                    .iter()
                    .zip(&self.multipliers)
                    .map(|(&a, &v)| field.mul(v, field.pow(a, i as u64)))
                    .collect();
                if let Some(c) = self.extension {
                    row.push(if i + 1 == k { c } else { Elem::ZERO });
                }
                row
            })
            .collect();
        Matrix::from_rows(field, self.len(), &rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MdsStrategy {
    /// Every k×k minor of G, refused above `budget` minors.
    FullMinors { budget: u128 },
    /// Structural argument from GRS provenance backed by randomly sampled minors.
    AnalyticGrs {
        provenance: GrsProvenance,
        samples: usize,
        seed: u64,
    },
    /// Random minors only; never certifies.
    Sampled { samples: usize, seed: u64 },
}

impl MdsStrategy {
    pub fn full() -> Self {
        MdsStrategy::FullMinors {
            budget: MINOR_BUDGET,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MdsStrategy::FullMinors { .. } => "full_minors",
            MdsStrategy::AnalyticGrs { .. } => "analytic_grs",
            MdsStrategy::Sampled { .. } => "sampled",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdsReport {
    pub strategy: &'static str,
    /// True only when the strategy proves d = n − k + 1.
    pub certified: bool,
    /// Sampled strategy: no singular minor was hit. Not a proof.
    pub heuristic_ok: bool,
    pub minors_checked: u64,
    /// First column set (0-based) with a vanishing k×k minor.
    pub singular_columns: Option<Vec<usize>>,
    /// Failed structural precondition of the analytic strategy.
    pub provenance_error: Option<String>,
    pub n: usize,
    pub k: usize,
}

impl MdsReport {
    /// Certified minimum distance, if certified.
    pub fn distance(&self) -> Option<usize> {
        self.certified.then_some(self.n - self.k + 1)
    }
}

impl fmt::Display for MdsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} minors", self.strategy, self.minors_checked)?;
        if let Some(c) = &self.singular_columns {
            write!(
                f,
                "; singular on columns {}",
                c.iter().map(|i| i + 1).join(",")
            )?;
        }
        if let Some(e) = &self.provenance_error {
            write!(f, "; {e}")?;
        }
        Ok(())
    }
}

fn minor(g: &Matrix, cols: &[usize], buf: &mut Vec<Elem>) -> Elem {
    let k = g.rows();
    buf.clear();
    for r in 0..k {
        let row = g.row(r);
        buf.extend(cols.iter().map(|&c| row[c]));
    }
    det_in_place(g.field(), buf, k)
}

fn sample_minors(g: &Matrix, samples: usize, seed: u64) -> (u64, Option<Vec<usize>>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut buf = Vec::new();
    let (n, k) = (g.cols(), g.rows());
    for i in 0..samples {
        let mut cols = rand::seq::index::sample(&mut rng, n, k).into_vec();
        cols.sort_unstable();
        if minor(g, &cols, &mut buf).is_zero() {
            return (i as u64 + 1, Some(cols));
        }
    }
    (samples as u64, None)
}

/// Checks d = n − k + 1, i.e. every k columns of G are independent.
pub fn mds_certify(code: &LinearCode, strategy: &MdsStrategy) -> Result<MdsReport> {
    let (n, k) = (code.len(), code.dim());
    let g = code.generator();
    let mut report = MdsReport {
        strategy: strategy.name(),
        certified: false,
        heuristic_ok: false,
        minors_checked: 0,
        singular_columns: None,
        provenance_error: None,
        n,
        k,
    };
    match strategy {
        MdsStrategy::FullMinors { budget } => {
            let required = binomial(n, k);
            if required > *budget {
                return Err(Error::Budget {
                    required,
                    budget: *budget,
                });
            }
            let mut buf = Vec::with_capacity(k * k);
            for cols in (0..n).combinations(k) {
                report.minors_checked += 1;
                if minor(g, &cols, &mut buf).is_zero() {
                    report.singular_columns = Some(cols);
                    return Ok(report);
                }
            }
            report.certified = true;
            report.heuristic_ok = true;
        }
        MdsStrategy::AnalyticGrs {
            provenance,
            samples,
            seed,
        } => {
            if let Err(e) = check_grs_provenance(code, provenance) {
                report.provenance_error = Some(e);
                return Ok(report);
            }
            let (checked, bad) = sample_minors(g, *samples, *seed);
            report.minors_checked = checked;
            report.heuristic_ok = bad.is_none();
            report.certified = bad.is_none();
            report.singular_columns = bad;
        }
        MdsStrategy::Sampled { samples, seed } => {
            let (checked, bad) = sample_minors(g, *samples, *seed);
            report.minors_checked = checked;
            report.heuristic_ok = bad.is_none();
            report.singular_columns = bad;
        }
    }
    Ok(report)
}

/// The structural MDS argument for GRS codes: distinct points, nonzero
/// multipliers, and a generator spanning the same space as the provenance.
fn check_grs_provenance(code: &LinearCode, prov: &GrsProvenance) -> Result<(), String> {
    let f = code.field();
    if prov.len() != code.len() {
        return Err(format!(
            "provenance length {} != code length {}",
            prov.len(),
            code.len()
        ));
    }
    if !prov.points.iter().all_unique() {
        return Err("evaluation points are not distinct".into());
    }
    if let Some(i) = prov.multipliers.iter().position(|m| m.is_zero()) {
        return Err(format!("multiplier {} is zero", i + 1));
    }
    if prov.extension.is_some_and(|c| c.is_zero()) {
        return Err("extension multiplier is zero".into());
    }
    if code.dim() > prov.points.len() + 1 {
        return Err("dimension exceeds the number of evaluation points".into());
    }
    let rebuilt = prov
        .generator(f, code.dim())
        .and_then(LinearCode::new)
        .map_err(|e| e.to_string())?;
    if !rebuilt.same_row_space(code) {
        return Err("generator does not match the GRS provenance".into());
    }
    Ok(())
}

/// Exact minimum weight of a nonzero codeword by enumeration of all Q^k messages.
pub fn min_distance_bruteforce(code: &LinearCode) -> Result<usize> {
    min_distance_bruteforce_with_budget(code, CODEWORD_BUDGET)
}

pub fn min_distance_bruteforce_with_budget(code: &LinearCode, budget: u128) -> Result<usize> {
    let f = code.field();
    let (n, k) = (code.len(), code.dim());
    let big_q = f.order() as u128;
    let required = big_q.checked_pow(k as u32).unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::Budget { required, budget });
    }
    if k == 0 {
        return Err(Error::OutOfRange(
            "zero code has no nonzero codeword".into(),
        ));
    }
    let g = code.generator();
    // Odometer over messages; each step adds one multiple of a generator row.
    let mut message = vec![0u32; k];
    let mut word = vec![Elem::ZERO; n];
    let mut best = n;
    loop {
        let mut i = 0;
        loop {
            if i == k {
                return Ok(best);
            }
            let old = Elem::from_index(message[i]);
            message[i] = (message[i] + 1) % f.order();
            let new = Elem::from_index(message[i]);
            let delta = f.sub(new, old);
            for (w, &gv) in word.iter_mut().zip(g.row(i)) {
                *w = f.add(*w, f.mul(delta, gv));
            }
            if message[i] != 0 {
                break;
            }
            i += 1;
        }
        let weight = word.iter().filter(|a| !a.is_zero()).count();
        if weight > 0 {
            best = best.min(weight);
        }
    }
}

/// Dimension of the space of quadratic forms in k variables vanishing on
/// every column of `g` (a k × n matrix).
pub fn quadric_dimension(g: &Matrix) -> usize {
    let f = g.field();
    let k = g.rows();
    let monomials: Vec<(usize, usize)> = (0..k).flat_map(|a| (a..k).map(move |b| (a, b))).collect();
    let rows: Vec<Vec<Elem>> = (0..g.cols())
        .map(|c| {
            monomials
                .iter()
                .map(|&(a, b)| f.mul(g[(a, c)], g[(b, c)]))
                .collect()
        })
        .collect();
    let eval = Matrix::from_rows(f, monomials.len(), &rows).expect("uniform rows");
    monomials.len() - eval.rank()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadricVerdict {
    /// Dimension differs from the GRS value: the code is not GRS.
    NotGrs,
    /// Equal to the GRS value at length ≥ 2k+1, where the converse holds for MDS codes.
    ConsistentWithGrs,
    /// Equal to the GRS value at length ≤ 2k, where equality decides nothing.
    Inconclusive,
}

impl fmt::Display for QuadricVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuadricVerdict::NotGrs => "not-grs",
            QuadricVerdict::ConsistentWithGrs => "grs",
            QuadricVerdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricReport {
    pub dimension: usize,
    /// C(k−1, 2), the value every GRS code attains.
    pub grs_value: usize,
    pub verdict: QuadricVerdict,
}

impl QuadricReport {
    pub fn for_code(code: &LinearCode) -> QuadricReport {
        let dimension = quadric_dimension(code.generator());
        let k = code.dim();
        let grs_value = binomial(k.saturating_sub(1), 2) as usize;
        let verdict = if dimension != grs_value {
            QuadricVerdict::NotGrs
        } else if code.len() > 2 * k {
            QuadricVerdict::ConsistentWithGrs
        } else {
            QuadricVerdict::Inconclusive
        };
        QuadricReport {
            dimension,
            grs_value,
            verdict,
        }
    }
}

impl fmt::Display for QuadricReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} grs={} {}",
            self.dimension, self.grs_value, self.verdict
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn hermitian_inner_examples() {
        let f4 = Field::for_q(2).unwrap();
        let one = vec![Elem::ONE, Elem::ONE];
        assert_eq!(hermitian_inner(&f4, &one, &one).unwrap(), Elem::ZERO);
        let f9 = Field::for_q(3).unwrap();
        let u = vec![Elem::ONE, f9.eps()];
        assert_eq!(hermitian_inner(&f9, &u, &u).unwrap(), Elem::ZERO);
        let z = vec![Elem::ZERO; 2];
        assert_eq!(hermitian_inner(&f9, &z, &u).unwrap(), Elem::ZERO);
        assert!(hermitian_inner(&f9, &u, &[Elem::ONE]).is_err());
        // α(v,u) = α(u,v)^q
        let v = vec![f9.eps_pow(5), f9.eps_pow(2)];
        assert_eq!(
            hermitian_inner(&f9, &v, &u).unwrap(),
            f9.conj(hermitian_inner(&f9, &u, &v).unwrap())
        );
    }

    #[test]
    fn dual_examples() {
        let f = Field::for_q(3).unwrap();
        let full = LinearCode::new(Matrix::identity(&f, 3)).unwrap();
        let dual = full.hermitian_dual();
        assert_eq!(dual.dim(), 0);
        assert!(full.contains_hermitian_dual());

        let c = LinearCode::from_rows(&f, 2, &[vec![Elem::ONE, f.eps()]]).unwrap();
        assert!(c.hermitian_dual().same_row_space(&c));
        assert!(c.is_hermitian_self_dual());

        let e1 = LinearCode::from_rows(&f, 2, &[vec![Elem::ONE, Elem::ZERO]]).unwrap();
        assert!(!e1.contains_hermitian_dual());
        assert!(!e1.is_self_orthogonal());
    }

    #[test]
    fn rank_deficient_generator_rejected() {
        let f = Field::for_q(3).unwrap();
        let r = vec![Elem::ONE, f.eps()];
        assert!(LinearCode::from_rows(&f, 2, &[r.clone(), r]).is_err());
    }

    #[test]
    fn identity_pair_is_not_mds() {
        let f = Field::for_q(3).unwrap();
        let i2 = Matrix::identity(&f, 2);
        let code = LinearCode::new(i2.hstack(&i2).unwrap()).unwrap();
        let rep = mds_certify(&code, &MdsStrategy::full()).unwrap();
        assert!(!rep.certified);
        assert_eq!(rep.singular_columns, Some(vec![0, 2]));
        assert_eq!(min_distance_bruteforce(&code).unwrap(), 2);
        let budget = MdsStrategy::FullMinors { budget: 5 };
        assert!(matches!(
            mds_certify(&code, &budget),
            Err(Error::Budget { required: 6, .. })
        ));
        let sampled = mds_certify(
            &code,
            &MdsStrategy::Sampled {
                samples: 100,
                seed: 1,
            },
        )
        .unwrap();
        assert!(!sampled.certified);
    }

    #[test]
    fn repetition_code_distance() {
        let f = Field::for_q(2).unwrap();
        let rep = LinearCode::from_rows(&f, 3, &[vec![Elem::ONE; 3]]).unwrap();
        assert_eq!(min_distance_bruteforce(&rep).unwrap(), 3);
        assert!(mds_certify(&rep, &MdsStrategy::full()).unwrap().certified);
    }

    #[test]
    fn quadric_dimension_of_no_points() {
        let f = Field::for_q(3).unwrap();
        let g = Matrix::zeros(&f, 3, 0);
        assert_eq!(quadric_dimension(&g), 6);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 5), 252);
        assert_eq!(binomial(18, 9), 48620);
        assert_eq!(binomial(50, 7), 99_884_400);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(0, 2), 0);
    }
}
