//! Generalised Reed-Solomon codes of length q²+1 contained in their Hermitian
//! dual, and an exhaustive scanner showing none exist once k ≥ q+1.
//!
//! Evaluation points follow a fixed order: a_i = ε^{i−1} for i = 1..q²−1 and
//! a_{q²} = 0. The self-orthogonal code is
//! D = {(h(a_1)f(a_1), …, h(a_{q²})f(a_{q²}), f_{k−1}) : deg f ≤ k−1}
//! where h is monic of degree q−k without roots in F_{q²}.

use itertools::Itertools;
use rayon::prelude::*;

use crate::codes::{binomial, hermitian_inner, GrsProvenance, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldRef};
use crate::poly::{smallest_irreducible, Poly};

/// Default cap on the number of instances examined by [`nogrs_scan`].
pub const SCAN_BUDGET: u128 = 10_000_000;

/// ε⁰, ε¹, …, ε^{q²−2}, 0.
pub fn canonical_points(f: &Field) -> Vec<Elem> {
    f.nonzero().chain(std::iter::once(Elem::ZERO)).collect()
}

/// A GRS code with arbitrary distinct points, multipliers and an optional
/// extension coordinate carrying c·f_{k−1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralGrsSpec {
    pub field: FieldRef,
    pub k: usize,
    pub points: Vec<Elem>,
    pub multipliers: Vec<Elem>,
    pub extension: Option<Elem>,
}

impl GeneralGrsSpec {
    pub fn new(
        field: &FieldRef,
        k: usize,
        points: Vec<Elem>,
        multipliers: Vec<Elem>,
        extension: Option<Elem>,
    ) -> Result<Self> {
        field.require_square()?;
        if points.len() != multipliers.len() {
            return Err(Error::Dimension(
                "one multiplier per evaluation point".into(),
            ));
        }
        if !points.iter().all_unique() {
            return Err(Error::Construction(
                "evaluation points must be distinct".into(),
            ));
        }
        if k == 0 {
            return Err(Error::OutOfRange("dimension must be at least 1".into()));
        }
        Ok(GeneralGrsSpec {
            field: field.clone(),
            k,
            points,
            multipliers,
            extension,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len() + usize::from(self.extension.is_some())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn provenance(&self) -> GrsProvenance {
        GrsProvenance {
            points: self.points.clone(),
            multipliers: self.multipliers.clone(),
            extension: self.extension,
        }
    }

    /// The evaluation codeword of `poly`, which must have degree ≤ k−1.
    pub fn encode(&self, poly: &Poly) -> Result<Vec<Elem>> {
        grs_encode(self, poly)
    }

    /// The code spanned by the codewords of 1, X, …, X^{k−1}.
    pub fn code(&self) -> Result<LinearCode> {
        LinearCode::new(self.provenance().generator(&self.field, self.k)?)
    }
}

pub fn grs_encode(spec: &GeneralGrsSpec, poly: &Poly) -> Result<Vec<Elem>> {
    if poly.degree().is_some_and(|d| d >= spec.k) {
        return Err(Error::OutOfRange(format!(
            "polynomial of degree {} exceeds k-1 = {}",
            poly.degree().unwrap_or(0),
            spec.k - 1
        )));
    }
    let f = &spec.field;
    let mut out: Vec<Elem> = spec
        .points
        .iter()
        .zip(&spec.multipliers)
        .map(|(&a, &v)| f.mul(v, poly.eval(f, a)))
        .collect();
    if let Some(c) = spec.extension {
        out.push(f.mul(c, poly.coeff(spec.k - 1)));
    }
    Ok(out)
}

/// The length-(q²+1) construction with multipliers h(a_i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrsSpec {
    pub field: FieldRef,
    pub q: u32,
    pub k: usize,
    pub h: Poly,
}

impl GrsSpec {
    pub fn points(&self) -> Vec<Elem> {
        canonical_points(&self.field)
    }

    pub fn general(&self) -> GeneralGrsSpec {
        let f = &self.field;
        let points = self.points();
        let multipliers = points.iter().map(|&a| self.h.eval(f, a)).collect();
        GeneralGrsSpec {
            field: f.clone(),
            k: self.k,
            points,
            multipliers,
            extension: Some(Elem::ONE),
        }
    }

    pub fn code(&self) -> Result<LinearCode> {
        self.general().code()
    }
}

/// Checks the construction's hypothesis on (q, k).
pub fn check_parameters(q: u32, k: usize) -> Result<()> {
    let qk = q as usize;
    if k == 0 || k > qk {
        return Err(Error::Construction(format!(
            "k = {k} outside 1..=q = {q}; the construction needs k <= q"
        )));
    }
    if k + 1 == qk {
        return Err(Error::Construction(format!(
            "k = q-1 = {k} is excluded; the construction needs k <= q with k != q-1"
        )));
    }
    Ok(())
}

/// Default h: 1 when k = q, else the smallest monic irreducible of degree q−k.
pub fn default_h(f: &Field, q: u32, k: usize) -> Result<Poly> {
    check_parameters(q, k)?;
    let d = q as usize - k;
    if d == 0 {
        return Ok(Poly::one());
    }
    smallest_irreducible(f, d)
}

#[derive(Clone, Debug)]
pub struct GrsConstruction {
    pub spec: GrsSpec,
    /// The [q²+1, k, q²+2−k] code D with D ≤ D^{⊥h}.
    pub code: LinearCode,
}

/// Builds D for (q, k) over the default presentation of F_{q²}.
pub fn grs_construct(q: u32, k: usize, h: Option<Poly>) -> Result<GrsConstruction> {
    let field = Field::for_q(q)?;
    grs_construct_in(&field, k, h)
}

/// Builds D over a given F_{q²}. An explicit `h` must have degree q−k and no
/// roots in the field; it is not required to be monic here, so that a bad
/// choice surfaces in [`verify_orthogonality_identity`] rather than being silently fixed.
pub fn grs_construct_in(field: &FieldRef, k: usize, h: Option<Poly>) -> Result<GrsConstruction> {
    let q = field.require_square()?;
    check_parameters(q, k)?;
    let d = q as usize - k;
    let h = match h {
        None => default_h(field, q, k)?,
        Some(h) => {
            if h.degree() != Some(d) {
                return Err(Error::Construction(format!(
                    "h must have degree q-k = {d}, got {}",
                    h.degree().map_or("-inf".into(), |x| x.to_string())
                )));
            }
            if let Some(a) = field.elements().find(|&a| h.eval(field, a).is_zero()) {
                return Err(Error::Construction(format!(
                    "h vanishes at {}",
                    crate::gf::format_elem(a)
                )));
            }
            h
        }
    };
    let spec = GrsSpec {
        field: field.clone(),
        q,
        k,
        h,
    };
    let code = spec.code()?;
    Ok(GrsConstruction { spec, code })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub pairs_checked: usize,
    /// Monomial index pairs (i, j) with α(X^i-codeword, X^j-codeword) ≠ 0.
    pub non_orthogonal: Vec<(usize, usize)>,
    /// Coefficient of X^{(q−k)(q+1)} in h^{q+1}.
    pub top_coefficient: Elem,
    pub h_monic: bool,
}

impl OrthogonalityReport {
    pub fn top_is_one(&self) -> bool {
        self.top_coefficient == Elem::ONE
    }

    pub fn passed(&self) -> bool {
        self.non_orthogonal.is_empty() && self.top_is_one()
    }
}

/// α-orthogonality of all pairs of monomial basis codewords, plus the
/// leading coefficient of h^{q+1}.
pub fn verify_orthogonality_identity(spec: &GrsSpec) -> Result<OrthogonalityReport> {
    let f = &spec.field;
    let general = spec.general();
    let basis: Vec<Vec<Elem>> = (0..spec.k)
        .map(|i| grs_encode(&general, &Poly::monomial(i)))
        .collect::<Result<_>>()?;
    let mut non_orthogonal = Vec::new();
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            if !hermitian_inner(f, u, v)?.is_zero() {
                non_orthogonal.push((i, j));
            }
        }
    }
    let hq1 = spec.h.pow(f, spec.q as u64 + 1);
    let top = (spec.q as usize - spec.k) * (spec.q as usize + 1);
    Ok(OrthogonalityReport {
        pairs_checked: spec.k * spec.k,
        non_orthogonal,
        top_coefficient: hq1.coeff(top),
        h_monic: spec.h.is_monic(),
    })
}

/// One GRS instance contained in its Hermitian dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanFinding {
    pub n: usize,
    /// Slot indices (0-based); slot i < q² is point a_{i+1}, slot q² is the extension.
    pub support: Vec<usize>,
    /// Norm v^{q+1} ∈ F_q* of the multiplier on each support slot.
    pub norms: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthScan {
    pub n: usize,
    pub instances: u128,
    pub findings: Vec<ScanFinding>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub q: u32,
    pub k: usize,
    pub lengths: Vec<LengthScan>,
}

impl ScanReport {
    pub fn findings(&self) -> impl Iterator<Item = &ScanFinding> {
        self.lengths.iter().flat_map(|l| l.findings.iter())
    }

    pub fn is_empty(&self) -> bool {
        self.findings().next().is_none()
    }
}

/// Number of instances a scan of length `n` examines.
pub fn scan_size(q: u32, n: usize) -> u128 {
    let slots = (q as usize).pow(2) + 1;
    binomial(slots, n) * (q as u128 - 1).pow(n as u32)
}

/// Enumerates GRS codes of dimension k and each length in `lengths`, up to
/// multiplier scaling within a norm class, and reports those with D ≤ D^{⊥h}.
///
/// Only v^{q+1} enters α, so each multiplier is represented by the smallest
/// ε-power with the required norm. A multiplier of zero is the same as
/// dropping the slot, which is covered by scanning shorter supports.
pub fn nogrs_scan(q: u32, k: usize, lengths: &[usize], budget: u128) -> Result<ScanReport> {
    let field = Field::for_q(q)?;
    nogrs_scan_in(&field, k, lengths, budget)
}

pub fn nogrs_scan_in(
    field: &FieldRef,
    k: usize,
    lengths: &[usize],
    budget: u128,
) -> Result<ScanReport> {
    let q = field.require_square()?;
    if k == 0 {
        return Err(Error::OutOfRange("dimension must be at least 1".into()));
    }
    let slots = field.order() as usize + 1;
    if let Some(&n) = lengths.iter().find(|&&n| n > slots) {
        return Err(Error::OutOfRange(format!(
            "length {n} exceeds q^2+1 = {slots}"
        )));
    }
    let required: u128 = lengths
        .iter()
        .filter(|&&n| n >= 2 * k)
        .map(|&n| scan_size(q, n))
        .sum();
    if required > budget {
        return Err(Error::Budget { required, budget });
    }

    let points = canonical_points(field);
    // norm class c ∈ F_q* → smallest multiplier with that norm
    let classes: Vec<(Elem, Elem)> = field
        .nonzero()
        .filter(|&c| field.in_subfield(c).unwrap_or(false))
        .map(|c| {
            (
                c,
                field.norm_preimage(c).unwrap().expect("norm is onto F_q*"),
            )
        })
        .collect();
    debug_assert_eq!(classes.len(), q as usize - 1);

    let mut out = Vec::with_capacity(lengths.len());
    for &n in lengths {
        if n < 2 * k {
            out.push(LengthScan {
                n,
                instances: 0,
                findings: Vec::new(),
                note: Some(format!(
                    "n = {n} < 2k = {}: a {k}-dimensional code of this length cannot lie in its Hermitian dual",
                    2 * k
                )),
            });
            continue;
        }
        let supports: Vec<Vec<usize>> = (0..slots).combinations(n).collect();
        let findings: Vec<ScanFinding> = supports
            .par_iter()
            .flat_map_iter(|support| scan_support(field, k, &points, &classes, support))
            .collect();
        log::info!("nogrs-scan q={q} k={k} n={n}: {} findings", findings.len());
        out.push(LengthScan {
            n,
            instances: scan_size(q, n),
            findings,
            note: None,
        });
    }
    Ok(ScanReport { q, k, lengths: out })
}

fn scan_support(
    field: &FieldRef,
    k: usize,
    points: &[Elem],
    classes: &[(Elem, Elem)],
    support: &[usize],
) -> Vec<ScanFinding> {
    let n = support.len();
    let ext_slot = points.len();
    let has_ext = support.last() == Some(&ext_slot);
    let pts: Vec<Elem> = support
        .iter()
        .filter(|&&s| s < ext_slot)
        .map(|&s| points[s])
        .collect();
    let mut found = Vec::new();
    for choice in (0..n).map(|_| 0..classes.len()).multi_cartesian_product() {
        let mults: Vec<Elem> = choice.iter().map(|&c| classes[c].1).collect();
        let (pm, ext) = if has_ext {
            (mults[..n - 1].to_vec(), Some(mults[n - 1]))
        } else {
            (mults, None)
        };
        let prov = GrsProvenance {
            points: pts.clone(),
            multipliers: pm,
            extension: ext,
        };
        let Ok(code) = prov.generator(field, k).and_then(LinearCode::new) else {
            continue;
        };
        if code.is_self_orthogonal() {
            found.push(ScanFinding {
                n,
                support: support.to_vec(),
                norms: choice.iter().map(|&c| classes[c].0).collect(),
            });
        }
    }
    found
}
