//! Parametric families: Pythagorean triples, Heron isosceles triangles
//! built by gluing two congruent Pythagorean triangles along a leg, and the
//! two families F1/F2 whose members have all three exradii integral.
//!
//! Every generator computes the sides with checked `u64` arithmetic and
//! reports [`Error::Overflow`] rather than wrapping. Exradii on the
//! generated records always come from [`crate::metrics`], never from the
//! closed forms, so the closed forms can be checked against them.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::metrics::exradius;
use crate::root::{integer_sqrt_u128, ExactRoot};
use crate::sides::{Side, TriangleSides};
use crate::{Error, Result};

/// Smallest bound accepted by the enumerators and the oracle.
pub const MIN_BOUND: u64 = 3;

fn checked_product(what: &'static str, factors: &[u64]) -> Result<u64> {
    factors
        .iter()
        .try_fold(1u64, |acc, &f| acc.checked_mul(f))
        .ok_or(Error::Overflow(what))
}

fn check_bound(bound: u64) -> Result<()> {
    if bound < MIN_BOUND {
        return Err(Error::InvalidBound { bound, min: MIN_BOUND });
    }
    Ok(())
}

/// `m > n ≥ 1`, coprime, of opposite parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MNPair {
    m: u64,
    n: u64,
}

impl MNPair {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if n == 0 || m <= n {
            return Err(Error::OrderViolation { m, n });
        }
        if m.gcd(&n) != 1 {
            return Err(Error::NotCoprime { m, n });
        }
        if (m + n).is_multiple_of(2) {
            return Err(Error::SameParity { m, n });
        }
        Ok(MNPair { m, n })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// All valid pairs with `m ≤ max_m`, ordered by `(n, m)`.
    pub fn all_up_to(max_m: u64) -> Vec<MNPair> {
        let mut pairs = Vec::new();
        for n in 1..max_m {
            for m in n + 1..=max_m {
                if let Ok(p) = MNPair::new(m, n) {
                    pairs.push(p);
                }
            }
        }
        pairs
    }

    /// m² − n², m² + n² and 2mn.
    fn squares(&self) -> Result<(u64, u64, u64)> {
        let (m, n) = (self.m, self.n);
        let m2 = m.checked_mul(m).ok_or(Error::Overflow("m²"))?;
        let n2 = n * n;
        let sum = m2.checked_add(n2).ok_or(Error::Overflow("m² + n²"))?;
        Ok((m2 - n2, sum, checked_product("2mn", &[2, m, n])?))
    }
}

fn check_scale(scale: u64) -> Result<u64> {
    if scale == 0 {
        return Err(Error::ZeroScale);
    }
    Ok(scale)
}

/// Which leg of the Pythagorean triangle is labelled β.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum Orientation {
    /// β = 2δmn, γ = δ(m² − n²)
    #[default]
    EvenLegBeta,
    /// β = δ(m² − n²), γ = 2δmn
    OddLegBeta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PythParams {
    pub mn: MNPair,
    pub delta: u64,
    pub orientation: Orientation,
}

impl PythParams {
    pub fn new(mn: MNPair, delta: u64) -> Result<Self> {
        Ok(PythParams {
            mn,
            delta: check_scale(delta)?,
            orientation: Orientation::default(),
        })
    }

    pub fn with_orientation(mut self, orientation: Orientation) -> Self {
        self.orientation = orientation;
        self
    }

    pub fn perimeter(&self) -> u128 {
        let (m, n) = (self.mn.m as u128, self.mn.n as u128);
        2 * self.delta as u128 * m * (m + n)
    }
}

/// Pythagorean triangle with `a` the hypotenuse α and `(b, c)` = (β, γ).
pub fn gen_pythagorean(p: &PythParams) -> Result<TriangleSides> {
    let (diff, sum, twice) = p.mn.squares()?;
    let d = p.delta;
    let alpha = checked_product("δ(m² + n²)", &[d, sum])?;
    let even = checked_product("2δmn", &[d, twice])?;
    let odd = checked_product("δ(m² − n²)", &[d, diff])?;
    let (beta, gamma) = match p.orientation {
        Orientation::EvenLegBeta => (even, odd),
        Orientation::OddLegBeta => (odd, even),
    };
    TriangleSides::new(alpha, beta, gamma)
}

/// Closed-form exradii `(ρ_α, ρ_β, ρ_γ)` of a Pythagorean triangle:
/// `δm(m+n)`, `δn(m+n)`, `δm(m−n)` when β is the even leg. Under
/// [`Orientation::OddLegBeta`] the last two trade places.
pub fn pyth_exradii(p: &PythParams) -> Result<(u64, u64, u64)> {
    let (m, n, d) = (p.mn.m, p.mn.n, p.delta);
    let rho_alpha = checked_product("δm(m + n)", &[d, m, m + n])?;
    let rho_even = checked_product("δn(m + n)", &[d, n, m + n])?;
    let rho_odd = checked_product("δm(m − n)", &[d, m, m - n])?;
    Ok(match p.orientation {
        Orientation::EvenLegBeta => (rho_alpha, rho_even, rho_odd),
        Orientation::OddLegBeta => (rho_alpha, rho_odd, rho_even),
    })
}

/// Every primitive-or-scaled Pythagorean parameter set (β the even leg) with
/// perimeter `2δm(m+n) ≤ max_perimeter`, ordered by (perimeter, hypotenuse).
pub fn enumerate_pythagorean(max_perimeter: u64) -> Result<Vec<PythParams>> {
    check_bound(max_perimeter)?;
    let bound = max_perimeter as u128;
    let mut out = Vec::new();
    let mut m = 2u64;
    // n ≥ 1, δ ≥ 1 ⇒ perimeter ≥ 2m(m+1)
    while 2 * (m as u128) * (m as u128 + 1) <= bound {
        for n in 1..m {
            let Ok(mn) = MNPair::new(m, n) else { continue };
            let mut delta = 1;
            loop {
                let p = PythParams::new(mn, delta)?;
                if p.perimeter() > bound {
                    break;
                }
                out.push(p);
                delta += 1;
            }
        }
        m += 1;
    }
    out.sort_by_key(|p| {
        let (m, n) = (p.mn.m as u128, p.mn.n as u128);
        (p.perimeter(), p.delta as u128 * (m * m + n * n))
    });
    Ok(out)
}

/// How two congruent Pythagorean triangles are glued along a common leg h.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IsoVariant {
    /// Half-base is the odd-type leg: α = 2δ(m² − n²), h = 2δmn.
    A,
    /// Half-base is the even leg: α = 4δmn, h = δ(m² − n²).
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IsoFamily {
    pub variant: IsoVariant,
    pub mn: MNPair,
    pub delta: u64,
}

impl IsoFamily {
    pub fn new(variant: IsoVariant, mn: MNPair, delta: u64) -> Result<Self> {
        Ok(IsoFamily {
            variant,
            mn,
            delta: check_scale(delta)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct F1Params {
    /// K
    pub scale: u64,
    pub mn: MNPair,
}

impl F1Params {
    pub fn new(scale: u64, mn: MNPair) -> Result<Self> {
        Ok(F1Params { scale: check_scale(scale)?, mn })
    }

    /// `(ρ_α, ρ_β = ρ_γ)` = `(Km(m² − n²), 2Kmn²)`.
    pub fn closed_form_exradii(&self) -> Result<(u64, u64)> {
        let (m, n, k) = (self.mn.m, self.mn.n, self.scale);
        let (diff, _, _) = self.mn.squares()?;
        Ok((
            checked_product("Km(m² − n²)", &[k, m, diff])?,
            checked_product("2Kmn²", &[2, k, m, n, n])?,
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct F2Params {
    /// L
    pub scale: u64,
    pub mn: MNPair,
}

impl F2Params {
    pub fn new(scale: u64, mn: MNPair) -> Result<Self> {
        Ok(F2Params { scale: check_scale(scale)?, mn })
    }

    /// `(ρ_α, ρ_β = ρ_γ)` = `(2Lmn(m + n), L(m + n)(m − n)²)`.
    pub fn closed_form_exradii(&self) -> Result<(u64, u64)> {
        let (m, n, l) = (self.mn.m, self.mn.n, self.scale);
        Ok((
            checked_product("2Lmn(m + n)", &[2, l, m, n, m + n])?,
            checked_product("L(m + n)(m − n)²", &[l, m + n, m - n, m - n])?,
        ))
    }
}

/// Which generator produced a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Source {
    BruteForce,
    Iso { variant: IsoVariant, delta: u64, m: u64, n: u64 },
    F1 { k: u64, m: u64, n: u64 },
    F2 { l: u64, m: u64, n: u64 },
}

impl Source {
    /// Short tag used in tabular output.
    pub fn tag(&self) -> &'static str {
        match self {
            Source::BruteForce => "brute",
            Source::Iso { variant: IsoVariant::A, .. } => "iso-a",
            Source::Iso { variant: IsoVariant::B, .. } => "iso-b",
            Source::F1 { .. } => "F1",
            Source::F2 { .. } => "F2",
        }
    }

    /// `(scale, m, n)` for parametric sources.
    pub fn params(&self) -> Option<(u64, u64, u64)> {
        match *self {
            Source::BruteForce => None,
            Source::Iso { delta, m, n, .. } => Some((delta, m, n)),
            Source::F1 { k, m, n } => Some((k, m, n)),
            Source::F2 { l, m, n } => Some((l, m, n)),
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::BruteForce => f.write_str("brute"),
            Source::Iso { variant, delta, m, n } => {
                write!(f, "iso-{variant:?} δ={delta}, n={n}, m={m}")
            }
            Source::F1 { k, m, n } => write!(f, "F1 K={k}, n={n}, m={m}"),
            Source::F2 { l, m, n } => write!(f, "F2 L={l}, n={n}, m={m}"),
        }
    }
}

/// A Heron isosceles triangle: base α, legs β = γ, integer height h to the
/// base and integer area E = αh/2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoTriangleRecord {
    pub alpha: u64,
    pub beta: u64,
    pub h: u64,
    pub area: u128,
    pub rho_alpha: ExactRoot,
    /// Also ρ_γ.
    pub rho_beta: ExactRoot,
    /// Every parameterization that produced this triangle, sorted.
    pub sources: Vec<Source>,
}

impl IsoTriangleRecord {
    /// Builds the record from base and leg, checking α ≠ β, α even and
    /// h² + (α/2)² = β² with h an integer.
    pub fn from_base_leg(alpha: u64, beta: u64, source: Source) -> Result<Self> {
        let t = TriangleSides::isosceles(alpha, beta)?;
        let reject = |reason| Error::NotIsoRecord { alpha, beta, reason };
        if alpha == beta {
            return Err(reject("equilateral"));
        }
        if !alpha.is_multiple_of(2) {
            return Err(reject("odd base"));
        }
        let half = (alpha / 2) as u128;
        let h2 = beta as u128 * beta as u128 - half * half;
        let h = integer_sqrt_u128(h2).ok_or(reject("height is not an integer"))? as u64;
        Ok(IsoTriangleRecord {
            alpha,
            beta,
            h,
            area: half * h as u128,
            rho_alpha: exradius(&t, Side::A),
            rho_beta: exradius(&t, Side::B),
            sources: vec![source],
        })
    }

    pub fn sides(&self) -> TriangleSides {
        TriangleSides::isosceles(self.alpha, self.beta).expect("validated on construction")
    }

    /// Canonical identity `(α, β)`.
    pub fn key(&self) -> (u64, u64) {
        (self.alpha, self.beta)
    }

    pub fn perimeter(&self) -> u128 {
        self.alpha as u128 + 2 * self.beta as u128
    }

    pub fn rho_gamma(&self) -> &ExactRoot {
        &self.rho_beta
    }

    pub fn exradii_integral(&self) -> bool {
        self.rho_alpha.is_integer() && self.rho_beta.is_integer()
    }

    pub fn source(&self) -> &Source {
        &self.sources[0]
    }
}

/// Side lengths `(α, h, β)` of a glued Heron isosceles triangle.
fn iso_sides(variant: IsoVariant, m: u64, n: u64, delta: u64) -> Result<(u64, u64, u64)> {
    let (diff, sum, twice) = MNPair { m, n }.squares()?;
    let beta = checked_product("δ(m² + n²)", &[delta, sum])?;
    let (alpha, h) = match variant {
        IsoVariant::A => (
            checked_product("2δ(m² − n²)", &[2, delta, diff])?,
            checked_product("2δmn", &[delta, twice])?,
        ),
        IsoVariant::B => (
            checked_product("4δmn", &[2, delta, twice])?,
            checked_product("δ(m² − n²)", &[delta, diff])?,
        ),
    };
    Ok((alpha, h, beta))
}

fn iso_record(alpha: u64, h: u64, beta: u64, source: Source) -> Result<IsoTriangleRecord> {
    let rec = IsoTriangleRecord::from_base_leg(alpha, beta, source)?;
    debug_assert_eq!(rec.h, h);
    Ok(rec)
}

pub fn gen_heron_isosceles(f: &IsoFamily) -> Result<IsoTriangleRecord> {
    let (m, n, delta) = (f.mn.m, f.mn.n, f.delta);
    let (alpha, h, beta) = iso_sides(f.variant, m, n, delta)?;
    iso_record(alpha, h, beta, Source::Iso { variant: f.variant, delta, m, n })
}

/// The gluing construction with only `m > n ≥ 1` required; coprimality and
/// opposite parity are not needed for the result to be Heron isosceles.
pub fn gen_heron_isosceles_relaxed(
    variant: IsoVariant,
    m: u64,
    n: u64,
    delta: u64,
) -> Result<IsoTriangleRecord> {
    if n == 0 || m <= n {
        return Err(Error::OrderViolation { m, n });
    }
    check_scale(delta)?;
    let (alpha, h, beta) = iso_sides(variant, m, n, delta)?;
    iso_record(alpha, h, beta, Source::Iso { variant, delta, m, n })
}

/// F1: α = 2Kn(m² − n²), β = γ = Kn(m² + n²). Variant A with δ = Kn.
pub fn gen_f1(p: &F1Params) -> Result<IsoTriangleRecord> {
    let (m, n, k) = (p.mn.m, p.mn.n, p.scale);
    let delta = checked_product("Kn", &[k, n])?;
    let (alpha, h, beta) = iso_sides(IsoVariant::A, m, n, delta)?;
    iso_record(alpha, h, beta, Source::F1 { k, m, n })
}

/// F2: α = 4L(m − n)mn, β = γ = L(m − n)(m² + n²). Variant B with δ = L(m − n).
pub fn gen_f2(p: &F2Params) -> Result<IsoTriangleRecord> {
    let (m, n, l) = (p.mn.m, p.mn.n, p.scale);
    let delta = checked_product("L(m − n)", &[l, m - n])?;
    let (alpha, h, beta) = iso_sides(IsoVariant::B, m, n, delta)?;
    iso_record(alpha, h, beta, Source::F2 { l, m, n })
}

/// Lazily materialized records, ordered by (perimeter, α) and unique by
/// `(α, β)`.
///
/// The parameter sweep that finds the keys runs up front and is cheap; the
/// exact exradii are only computed as items are pulled.
pub struct FamilyStream {
    entries: alloc::vec::IntoIter<((u64, u64), Vec<Source>)>,
}

impl FamilyStream {
    fn new(found: BTreeMap<(u64, u64), Vec<Source>>) -> Self {
        let mut entries: Vec<_> = found.into_iter().collect();
        entries.sort_by_key(|((alpha, beta), _)| (*alpha as u128 + 2 * *beta as u128, *alpha));
        for (_, sources) in entries.iter_mut() {
            sources.sort();
        }
        FamilyStream { entries: entries.into_iter() }
    }

    pub fn remaining(&self) -> usize {
        self.entries.len()
    }
}

impl Iterator for FamilyStream {
    type Item = IsoTriangleRecord;

    fn next(&mut self) -> Option<IsoTriangleRecord> {
        let ((alpha, beta), sources) = self.entries.next()?;
        let mut rec = IsoTriangleRecord::from_base_leg(alpha, beta, sources[0])
            .expect("family members are Heron isosceles");
        rec.sources = sources;
        Some(rec)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.entries.size_hint()
    }
}

impl ExactSizeIterator for FamilyStream {}

/// Walks every valid `(m, n)` with `m` below the family's monotone cutoff and
/// every scale whose perimeter fits. `unit_perimeter(m, n)` is the perimeter
/// at scale 1; the perimeter is linear in the scale.
fn sweep(
    bound: u64,
    min_unit_perimeter: impl Fn(u128) -> u128,
    unit_perimeter: impl Fn(u128, u128) -> u128,
    mut emit: impl FnMut(u64, MNPair) -> Result<(u64, u64, Source)>,
    found: &mut BTreeMap<(u64, u64), Vec<Source>>,
) -> Result<()> {
    let bound = bound as u128;
    let mut m = 2u64;
    while min_unit_perimeter(m as u128) <= bound {
        for n in 1..m {
            let Ok(mn) = MNPair::new(m, n) else { continue };
            let unit = unit_perimeter(m as u128, n as u128);
            for scale in 1..=(bound / unit) as u64 {
                let (alpha, beta, source) = emit(scale, mn)?;
                found.entry((alpha, beta)).or_default().push(source);
            }
        }
        m += 1;
    }
    Ok(())
}

// Perimeters at scale 1:
//   F1 / variant A (δ = Kn):       α + 2β = 4nm² · K ≥ 4m²
//   F2 / variant B (δ = L(m − n)): α + 2β = 2(m − n)(m + n)² · L ≥ 2(2m − 1)²
//   variant B (δ free):            α + 2β = 2(m + n)² · δ ≥ 2(m + 1)²
// For F2, (m − n)(m + n)² is minimized over 1 ≤ n < m at an endpoint and
// (m − 1)(m + 1)² ≥ (2m − 1)² for m ≥ 2.

fn sweep_f1(bound: u64, found: &mut BTreeMap<(u64, u64), Vec<Source>>) -> Result<()> {
    sweep(
        bound,
        |m| 4 * m * m,
        |m, n| 4 * n * m * m,
        |k, mn| {
            let rec = f1_sides(k, mn)?;
            Ok((rec.0, rec.1, Source::F1 { k, m: mn.m, n: mn.n }))
        },
        found,
    )
}

fn sweep_f2(bound: u64, found: &mut BTreeMap<(u64, u64), Vec<Source>>) -> Result<()> {
    sweep(
        bound,
        |m| 2 * (2 * m - 1) * (2 * m - 1),
        |m, n| 2 * (m - n) * (m + n) * (m + n),
        |l, mn| {
            let delta = checked_product("L(m − n)", &[l, mn.m - mn.n])?;
            let (alpha, _, beta) = iso_sides(IsoVariant::B, mn.m, mn.n, delta)?;
            Ok((alpha, beta, Source::F2 { l, m: mn.m, n: mn.n }))
        },
        found,
    )
}

fn f1_sides(k: u64, mn: MNPair) -> Result<(u64, u64)> {
    let delta = checked_product("Kn", &[k, mn.n])?;
    let (alpha, _, beta) = iso_sides(IsoVariant::A, mn.m, mn.n, delta)?;
    Ok((alpha, beta))
}

/// Every F1 and F2 member with perimeter α + 2β ≤ `max_perimeter`.
pub fn enumerate_f1_f2(max_perimeter: u64) -> Result<FamilyStream> {
    check_bound(max_perimeter)?;
    let mut found = BTreeMap::new();
    sweep_f1(max_perimeter, &mut found)?;
    sweep_f2(max_perimeter, &mut found)?;
    Ok(FamilyStream::new(found))
}

/// Every glued Heron isosceles triangle (both variants, any δ) with
/// perimeter ≤ `max_perimeter`.
pub fn enumerate_heron_isosceles(max_perimeter: u64) -> Result<FamilyStream> {
    check_bound(max_perimeter)?;
    let mut found = BTreeMap::new();
    for variant in [IsoVariant::A, IsoVariant::B] {
        let a = variant == IsoVariant::A;
        sweep(
            max_perimeter,
            |m| if a { 4 * m * m } else { 2 * (m + 1) * (m + 1) },
            |m, n| if a { 4 * m * m } else { 2 * (m + n) * (m + n) },
            |delta, mn| {
                let (alpha, _, beta) = iso_sides(variant, mn.m, mn.n, delta)?;
                Ok((alpha, beta, Source::Iso { variant, delta, m: mn.m, n: mn.n }))
            },
            &mut found,
        )?;
    }
    Ok(FamilyStream::new(found))
}
