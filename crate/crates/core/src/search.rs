//! Exhaustive search for circulant first rows x that pass
//! [`check_candidate`](crate::circulant::check_candidate).
//!
//! Every entry of a solution is nonzero, so candidates range over
//! (F_{q²}*)^k. Two symmetries are quotiented out: scaling (H_m(sx) =
//! s^{q+1}H_m(x), minors scale by powers of s) and cyclic rotation (the
//! circulant of a rotated x is M with its columns permuted). Coordinate
//! equality constraints, including the symmetric mode x_j = x_{k+2−j}, shrink
//! the space further by tying coordinates into classes.

use std::fmt;
use std::ops::Range;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::circulant::{h_m, rotate};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldRef};
use crate::matrix::minors_nonsingular_range;

pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub field: FieldRef,
    pub k: usize,
    /// Restrict to x_j = x_{k+2−j} (odd k only).
    pub symmetric: bool,
    /// Fix the last coordinate to 1.
    pub normalize_scaling: bool,
    /// Keep only the canonical cyclic rotation.
    pub normalize_shift: bool,
    /// Extra constraints x_i = x_j, 1-based.
    pub equalities: Vec<(usize, usize)>,
    pub budget: u128,
    pub workers: usize,
}

impl SearchConfig {
    pub fn new(field: &FieldRef, k: usize) -> SearchConfig {
        SearchConfig {
            field: field.clone(),
            k,
            symmetric: false,
            normalize_scaling: true,
            normalize_shift: true,
            equalities: Vec::new(),
            budget: DEFAULT_BUDGET,
            workers: 1,
        }
    }

    pub fn symmetric(mut self, on: bool) -> Self {
        self.symmetric = on;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    /// Rotations do not preserve tied coordinates, so shift normalization
    /// only applies to unconstrained searches.
    pub fn shift_active(&self) -> bool {
        self.normalize_shift && !self.symmetric && self.equalities.is_empty()
    }

    fn validate(&self) -> Result<()> {
        self.field.require_square()?;
        if self.k < 2 {
            return Err(Error::OutOfRange(format!("k = {} < 2", self.k)));
        }
        if self.symmetric && self.k.is_multiple_of(2) {
            return Err(Error::OutOfRange(format!(
                "symmetric search needs odd k, got {}",
                self.k
            )));
        }
        if let Some(&(i, j)) = self
            .equalities
            .iter()
            .find(|&&(i, j)| i == 0 || j == 0 || i > self.k || j > self.k)
        {
            return Err(Error::OutOfRange(format!(
                "constraint x_{i} = x_{j} outside 1..={}",
                self.k
            )));
        }
        Ok(())
    }
}

/// Coordinates grouped into equality classes; one value per free class.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Layout {
    /// class index of each coordinate
    class_of: Vec<usize>,
    /// class pinned to 1 by scaling normalization
    fixed: Option<usize>,
    /// free classes in order of their smallest coordinate
    free: Vec<usize>,
}

impl Layout {
    fn new(cfg: &SearchConfig) -> Layout {
        let k = cfg.k;
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while p[r] != r {
                r = p[r];
            }
            p[i] = r;
            r
        }
        let mut pairs: Vec<(usize, usize)> = cfg
            .equalities
            .iter()
            .map(|&(i, j)| (i - 1, j - 1))
            .collect();
        if cfg.symmetric {
            pairs.extend((1..k).map(|i| (i, k - i)));
        }
        for (a, b) in pairs {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        // Renumber classes by first appearance.
        let mut ids = vec![usize::MAX; k];
        let mut next = 0;
        let class_of: Vec<usize> = (0..k)
            .map(|i| {
                let r = find(&mut parent, i);
                if ids[r] == usize::MAX {
                    ids[r] = next;
                    next += 1;
                }
                ids[r]
            })
            .collect();
        let fixed = cfg.normalize_scaling.then(|| class_of[k - 1]);
        let free = (0..next).filter(|&c| Some(c) != fixed).collect();
        Layout {
            class_of,
            fixed,
            free,
        }
    }
}

/// Number of candidates the search will examine.
pub fn search_space(cfg: &SearchConfig) -> u128 {
    let layout = Layout::new(cfg);
    let values = cfg.field.order() as u128 - 1;
    values
        .checked_pow(layout.free.len() as u32)
        .unwrap_or(u128::MAX)
}

/// Canonical representative of x under the enabled symmetries: scaling makes
/// the last nonzero coordinate 1; with shift also enabled, the result is the
/// lexicographically least rescaled rotation.
pub fn normalize(x: &[Elem], cfg: &SearchConfig) -> Result<Vec<Elem>> {
    normalize_with(&cfg.field, x, cfg.normalize_scaling, cfg.shift_active())
}

fn normalize_with(f: &Field, x: &[Elem], scaling: bool, shift: bool) -> Result<Vec<Elem>> {
    if x.iter().all(|a| a.is_zero()) {
        return Err(Error::OutOfRange("cannot normalize the zero vector".into()));
    }
    let rescale = |v: Vec<Elem>| -> Vec<Elem> {
        if !scaling {
            return v;
        }
        let last = *v
            .iter()
            .rev()
            .find(|a| !a.is_zero())
            .expect("nonzero vector");
        let inv = f.inv(last).expect("nonzero");
        v.into_iter().map(|a| f.mul(a, inv)).collect()
    };
    if !shift {
        return Ok(rescale(x.to_vec()));
    }
    Ok((0..x.len())
        .map(|s| rescale(rotate(x, s)))
        .min()
        .expect("k >= 1"))
}

/// A contiguous range of values (as exponents 0..q²−1) of the leading free class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub index: usize,
    pub lead: Range<u32>,
}

/// Splits the space by leading-coordinate prefix into `workers` disjoint
/// ranges (fewer if there are fewer leading values).
pub fn partition(cfg: &SearchConfig) -> Vec<Partition> {
    let layout = Layout::new(cfg);
    let values = if layout.free.is_empty() {
        1
    } else {
        cfg.field.order() - 1
    };
    let parts = (cfg.workers.max(1) as u32).min(values);
    (0..parts)
        .map(|i| Partition {
            index: i as usize,
            lead: (i * values / parts)..((i + 1) * values / parts),
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchCounts {
    pub examined: u64,
    /// pruned_h[m−1]: candidates rejected at H_m ≠ 0.
    pub pruned_h: Vec<u64>,
    pub pruned_h0: u64,
    /// Non-canonical rotations skipped.
    pub pruned_symmetry: u64,
    /// pruned_minor[j−2]: candidates rejected at a singular j×j minor.
    pub pruned_minor: Vec<u64>,
    pub solutions: u64,
}

impl SearchCounts {
    fn new(k: usize) -> Self {
        SearchCounts {
            pruned_h: vec![0; k / 2],
            pruned_minor: vec![0; (k / 2).saturating_sub(1)],
            ..Default::default()
        }
    }

    fn merge(&mut self, other: &SearchCounts) {
        self.examined += other.examined;
        self.pruned_h0 += other.pruned_h0;
        self.pruned_symmetry += other.pruned_symmetry;
        self.solutions += other.solutions;
        for (a, b) in self.pruned_h.iter_mut().zip(&other.pruned_h) {
            *a += b;
        }
        for (a, b) in self.pruned_minor.iter_mut().zip(&other.pruned_minor) {
            *a += b;
        }
    }
}

impl fmt::Display for SearchCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "examined {}", self.examined)?;
        for (m, c) in self.pruned_h.iter().enumerate() {
            write!(f, ", H_{}!=0 {c}", m + 1)?;
        }
        write!(f, ", H_0=0 {}", self.pruned_h0)?;
        write!(f, ", non-canonical {}", self.pruned_symmetry)?;
        for (j, c) in self.pruned_minor.iter().enumerate() {
            write!(f, ", minor{} {c}", j + 2)?;
        }
        write!(f, ", solutions {}", self.solutions)
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    /// Normalized solutions in ascending canonical order.
    pub solutions: Vec<Vec<Elem>>,
    pub counts: SearchCounts,
    pub space: u128,
    pub partitions: usize,
    pub elapsed: Duration,
}

/// Enumerates the whole normalized space and returns every passing x.
pub fn search(cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let space = search_space(cfg);
    if space > cfg.budget {
        return Err(Error::Budget {
            required: space,
            budget: cfg.budget,
        });
    }
    let start = Instant::now();
    let layout = Layout::new(cfg);
    let parts = partition(cfg);
    log::info!(
        "search q^2={} k={} symmetric={} space={space} partitions={}",
        cfg.field.order(),
        cfg.k,
        cfg.symmetric,
        parts.len()
    );
    let results: Vec<(Vec<Vec<Elem>>, SearchCounts)> = parts
        .par_iter()
        .map(|p| {
            let r = run_partition(cfg, &layout, p);
            log::info!("partition {} done: {}", p.index, r.1);
            r
        })
        .collect();
    let mut counts = SearchCounts::new(cfg.k);
    let mut solutions = Vec::new();
    for (sols, c) in results {
        counts.merge(&c);
        solutions.extend(sols);
    }
    solutions.sort();
    solutions.dedup();
    Ok(SearchResult {
        solutions,
        counts,
        space,
        partitions: parts.len(),
        elapsed: start.elapsed(),
    })
}

fn run_partition(
    cfg: &SearchConfig,
    layout: &Layout,
    part: &Partition,
) -> (Vec<Vec<Elem>>, SearchCounts) {
    let f = &*cfg.field;
    let k = cfg.k;
    let half = k / 2;
    let shift = cfg.shift_active();
    let mut counts = SearchCounts::new(k);
    let mut solutions = Vec::new();

    let nfree = layout.free.len();
    let mut class_value = vec![Elem::ONE; layout.class_of.iter().max().map_or(0, |m| m + 1)];
    if let Some(c) = layout.fixed {
        class_value[c] = Elem::ONE;
    }
    // digits[i] = exponent of free class i; digit 0 is the leading class.
    let mut digits = vec![0u32; nfree];
    let top = f.order() - 1;
    if nfree > 0 {
        if part.lead.is_empty() {
            return (solutions, counts);
        }
        digits[0] = part.lead.start;
    }
    let mut x = vec![Elem::ZERO; k];

    'candidates: loop {
        for (i, &c) in layout.free.iter().enumerate() {
            class_value[c] = f.eps_pow(digits[i] as u64);
        }
        for (xi, &c) in x.iter_mut().zip(&layout.class_of) {
            *xi = class_value[c];
        }
        counts.examined += 1;

        let pass = 'check: {
            for m in 1..=half {
                if !h_m(f, &x, m).is_zero() {
                    counts.pruned_h[m - 1] += 1;
                    break 'check false;
                }
            }
            if h_m(f, &x, 0).is_zero() {
                counts.pruned_h0 += 1;
                break 'check false;
            }
            if shift {
                let canon = normalize_with(f, &x, cfg.normalize_scaling, true).expect("nonzero");
                if canon != x {
                    counts.pruned_symmetry += 1;
                    break 'check false;
                }
            }
            if half >= 2 {
                let m = crate::circulant::circulant(&cfg.field, &x).expect("k >= 2");
                for j in 2..=half {
                    if !minors_nonsingular_range(&m, j, j).passed() {
                        counts.pruned_minor[j - 2] += 1;
                        break 'check false;
                    }
                }
            }
            true
        };
        if pass {
            counts.solutions += 1;
            solutions.push(x.clone());
        }

        // advance the odometer, least significant digit last
        let mut i = nfree;
        loop {
            if i == 0 {
                break 'candidates;
            }
            i -= 1;
            digits[i] += 1;
            let limit = if i == 0 { part.lead.end } else { top };
            if digits[i] < limit {
                break;
            }
            if i == 0 {
                break 'candidates;
            }
            digits[i] = 0;
        }
    }
    (solutions, counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn normalize_examples() {
        let f = Field::for_q(3).unwrap();
        let cfg = SearchConfig::new(&f, 2);
        let e = f.eps();
        assert_eq!(
            normalize(&[e, e], &cfg).unwrap(),
            vec![Elem::ONE, Elem::ONE]
        );
        let w = f.parse_vector("e^2,e^3,e^3,e^2,e^0").unwrap();
        let cfg5 = SearchConfig::new(&f, 5);
        let n = normalize(&w, &cfg5).unwrap();
        assert_eq!(normalize(&n, &cfg5).unwrap(), n);
        for s in 0..5 {
            let r = rotate(&w, s);
            let scaled: Vec<Elem> = r.iter().map(|&a| f.mul(a, f.eps_pow(3))).collect();
            assert_eq!(normalize(&scaled, &cfg5).unwrap(), n);
        }
        assert!(normalize(&[Elem::ZERO; 3], &cfg5).is_err());
    }

    #[test]
    fn layout_symmetric() {
        let f = Field::for_q(5).unwrap();
        let cfg = SearchConfig::new(&f, 9).symmetric(true);
        let l = Layout::new(&cfg);
        assert_eq!(l.class_of, vec![0, 1, 2, 3, 4, 4, 3, 2, 1]);
        assert_eq!(l.fixed, Some(1));
        assert_eq!(l.free, vec![0, 2, 3, 4]);
        assert_eq!(search_space(&cfg), 24u128.pow(4));
        assert!(!cfg.shift_active());
    }

    #[test]
    fn partitions_cover() {
        let f = Field::for_q(3).unwrap();
        let one = partition(&SearchConfig::new(&f, 5));
        assert_eq!(
            one,
            vec![Partition {
                index: 0,
                lead: 0..8
            }]
        );
        let all = partition(&SearchConfig::new(&f, 5).workers(8));
        assert_eq!(all.len(), 8);
        assert!(all
            .iter()
            .enumerate()
            .all(|(i, p)| p.lead == (i as u32..i as u32 + 1)));
        let four = partition(&SearchConfig::new(&f, 5).workers(4));
        assert_eq!(four.iter().map(|p| p.lead.len()).sum::<usize>(), 8);
        let many = partition(&SearchConfig::new(&f, 5).workers(100));
        assert_eq!(many.len(), 8);
    }

    #[test]
    fn budget_and_validation() {
        let f = Field::for_q(3).unwrap();
        let cfg = SearchConfig::new(&f, 5).budget(100);
        assert!(matches!(
            search(&cfg),
            Err(Error::Budget { required: 4096, .. })
        ));
        assert!(search(&SearchConfig::new(&f, 4).symmetric(true)).is_err());
        let mut bad = SearchConfig::new(&f, 4);
        bad.equalities.push((0, 2));
        assert!(search(&bad).is_err());
    }

    #[test]
    fn q3_k5_contains_witness_class() {
        let f = Field::for_q(3).unwrap();
        let cfg = SearchConfig::new(&f, 5);
        let r = search(&cfg).unwrap();
        assert_eq!(r.counts.examined, 4096);
        let w = f.parse_vector("e^2,e^3,e^3,e^2,e^0").unwrap();
        assert!(r.solutions.contains(&normalize(&w, &cfg).unwrap()));
    }
}
