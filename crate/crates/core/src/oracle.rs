//! Brute-force reference for Heron isosceles triangles.
//!
//! The scan walks every isosceles `(α, β)` with `α + 2β ≤ bound` and decides
//! Heron-ness and exradius integrality with nothing but [`heron16`],
//! [`integer_sqrt`] and [`integral_exradius`]. It shares no code with the
//! closed forms in [`crate::families`], so agreement between the two is
//! evidence rather than a tautology.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::time::Duration;

use num_traits::ToPrimitive;

use crate::families::{
    enumerate_f1_f2, enumerate_heron_isosceles, IsoTriangleRecord, Source, MIN_BOUND,
};
use crate::metrics::{heron16, integral_exradius};
use crate::root::integer_sqrt;
use crate::sides::{Side, TriangleSides};
use crate::{Error, Result};

/// An isosceles triangle with integer area, as found by the scan. Nothing
/// about parity or height is assumed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeronHit {
    pub alpha: u64,
    pub beta: u64,
    pub area: u128,
}

impl HeronHit {
    pub fn perimeter(&self) -> u128 {
        self.alpha as u128 + 2 * self.beta as u128
    }

    pub fn key(&self) -> (u64, u64) {
        (self.alpha, self.beta)
    }

    fn sides(&self) -> TriangleSides {
        TriangleSides::isosceles(self.alpha, self.beta).expect("scan only emits triangles")
    }

    /// Both distinct exradii divide out to integers.
    pub fn exradii_integral(&self) -> bool {
        let t = self.sides();
        let e = self.area.into();
        integral_exradius(&t, Side::A, &e).is_some() && integral_exradius(&t, Side::B, &e).is_some()
    }
}

/// All hits with base `alpha` and perimeter ≤ `bound`. Equilateral
/// candidates are tested too, and would be reported if they ever passed.
pub fn scan_base(alpha: u64, bound: u64) -> Vec<HeronHit> {
    let mut hits = Vec::new();
    if alpha as u128 + 2 > bound as u128 {
        return hits;
    }
    // 2β > α and α + 2β ≤ bound
    let lo = alpha / 2 + 1;
    let hi = (bound - alpha) / 2;
    for beta in lo..=hi {
        let t = TriangleSides::isosceles(alpha, beta).expect("2β > α");
        let Some(root) = integer_sqrt(&heron16(&t)) else { continue };
        // 16E² = root², so E is an integer iff 4 | root
        if (&root % 4u8).to_u8() != Some(0) {
            continue;
        }
        let area = (root / 4u8).to_u128().expect("area of a u64-perimeter triangle fits u128");
        hits.push(HeronHit { alpha, beta, area });
    }
    hits
}

/// Orders hits by (perimeter, α), the output contract of every scan.
pub fn sort_hits(hits: &mut [HeronHit]) {
    hits.sort_unstable_by_key(|h| (h.perimeter(), h.alpha));
}

/// Strategy for running [`scan_base`] over every base up to the bound.
/// Implementations must return the hits sorted with [`sort_hits`].
pub trait Scan {
    fn hits(&self, bound: u64) -> Vec<HeronHit>;
}

/// Single-threaded scan.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Scan for Sequential {
    fn hits(&self, bound: u64) -> Vec<HeronHit> {
        let mut hits: Vec<_> = (1..=bound).flat_map(|a| scan_base(a, bound)).collect();
        sort_hits(&mut hits);
        hits
    }
}

fn checked_hits<S: Scan + ?Sized>(scan: &S, bound: u64) -> Result<Vec<HeronHit>> {
    if bound < MIN_BOUND {
        return Err(Error::InvalidBound { bound, min: MIN_BOUND });
    }
    Ok(scan.hits(bound))
}

fn to_records(hits: &[HeronHit]) -> Result<Vec<IsoTriangleRecord>> {
    hits.iter()
        .map(|h| {
            let rec = IsoTriangleRecord::from_base_leg(h.alpha, h.beta, Source::BruteForce)?;
            assert_eq!(rec.area, h.area, "scan area disagrees with αh/2");
            Ok(rec)
        })
        .collect()
}

/// Every Heron isosceles triangle with perimeter ≤ `bound`, by direct scan.
pub fn brute_heron_isosceles<S: Scan + ?Sized>(
    scan: &S,
    bound: u64,
) -> Result<Vec<IsoTriangleRecord>> {
    to_records(&checked_hits(scan, bound)?)
}

/// The Heron isosceles triangles whose three exradii are all integers.
pub fn brute_integral_exradii<S: Scan + ?Sized>(
    scan: &S,
    bound: u64,
) -> Result<Vec<IsoTriangleRecord>> {
    let hits: Vec<_> = checked_hits(scan, bound)?
        .into_iter()
        .filter(HeronHit::exradii_integral)
        .collect();
    let recs = to_records(&hits)?;
    for r in &recs {
        assert!(r.exradii_integral(), "integer and rational exradius paths disagree");
    }
    Ok(recs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop1Violation {
    pub alpha: u64,
    pub beta: u64,
    pub area: u128,
    pub reason: &'static str,
}

/// Checks that a Heron isosceles triangle has an even base and an integer
/// height h = 2E/α with h² + (α/2)² = β².
pub fn audit_hit(hit: &HeronHit) -> Option<Prop1Violation> {
    let violation = |reason| Prop1Violation {
        alpha: hit.alpha,
        beta: hit.beta,
        area: hit.area,
        reason,
    };
    if hit.alpha == hit.beta {
        return Some(violation("equilateral triangle with integer area"));
    }
    if !hit.alpha.is_multiple_of(2) {
        return Some(violation("base is odd"));
    }
    let alpha = hit.alpha as u128;
    if !(2 * hit.area).is_multiple_of(alpha) {
        return Some(violation("height 2E/α is not an integer"));
    }
    let h = 2 * hit.area / alpha;
    let half = alpha / 2;
    let beta = hit.beta as u128;
    if h * h + half * half != beta * beta {
        return Some(violation("h² + (α/2)² ≠ β²"));
    }
    None
}

/// Which claim a report checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    /// Heron isosceles ⇒ even base and integer height.
    Prop1,
    /// Heron isosceles = union of the two gluing variants.
    Prop2,
    /// Integral exradii = F1 ∪ F2.
    Theorem1,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub target: Target,
    pub bound: u64,
    pub oracle_set: BTreeSet<(u64, u64)>,
    pub family_set: BTreeSet<(u64, u64)>,
    pub missing_from_family: BTreeSet<(u64, u64)>,
    pub extra_in_family: BTreeSet<(u64, u64)>,
    pub prop1_violations: Vec<Prop1Violation>,
    /// Triangles produced by more than one parameterization.
    pub overlaps: Vec<((u64, u64), Vec<Source>)>,
    /// Filled in by callers that have a clock.
    pub elapsed: Duration,
}

impl SearchReport {
    fn new(target: Target, bound: u64) -> Self {
        SearchReport {
            target,
            bound,
            oracle_set: BTreeSet::new(),
            family_set: BTreeSet::new(),
            missing_from_family: BTreeSet::new(),
            extra_in_family: BTreeSet::new(),
            prop1_violations: Vec::new(),
            overlaps: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.missing_from_family.is_empty()
            && self.extra_in_family.is_empty()
            && self.prop1_violations.is_empty()
    }

    /// Overlaps whose sources come from different families.
    pub fn cross_family_overlaps(&self) -> usize {
        self.overlaps
            .iter()
            .filter(|(_, s)| s.iter().any(|x| x.tag() != s[0].tag()))
            .count()
    }
}

pub fn verify_prop1<S: Scan + ?Sized>(scan: &S, bound: u64) -> Result<SearchReport> {
    let hits = checked_hits(scan, bound)?;
    let mut report = SearchReport::new(Target::Prop1, bound);
    report.oracle_set = hits.iter().map(HeronHit::key).collect();
    report.prop1_violations = hits.iter().filter_map(audit_hit).collect();
    Ok(report)
}

/// Compares the brute-force set with the parametric enumeration at the
/// same bound and records the symmetric difference.
pub fn verify_completeness<S: Scan + ?Sized>(
    scan: &S,
    bound: u64,
    target: Target,
) -> Result<SearchReport> {
    let hits = checked_hits(scan, bound)?;
    let mut report = SearchReport::new(target, bound);
    report.prop1_violations = hits.iter().filter_map(audit_hit).collect();

    let (oracle, family) = match target {
        Target::Prop1 => return verify_prop1(scan, bound),
        Target::Prop2 => (
            hits.iter().map(HeronHit::key).collect::<BTreeSet<_>>(),
            enumerate_heron_isosceles(bound)?,
        ),
        Target::Theorem1 => (
            hits.iter()
                .filter(|h| h.exradii_integral())
                .map(HeronHit::key)
                .collect(),
            enumerate_f1_f2(bound)?,
        ),
    };
    for rec in family {
        if rec.sources.len() > 1 {
            report.overlaps.push((rec.key(), rec.sources.clone()));
        }
        report.family_set.insert(rec.key());
    }
    report.oracle_set = oracle;
    report.missing_from_family = report
        .oracle_set
        .difference(&report.family_set)
        .copied()
        .collect();
    report.extra_in_family = report
        .family_set
        .difference(&report.oracle_set)
        .copied()
        .collect();
    Ok(report)
}
