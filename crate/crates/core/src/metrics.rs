//! Semi-perimeter, Heron area, vertex cosines, half-angle tangents and
//! exradii of an integer triangle, all exact.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::root::ExactRoot;
use crate::sides::{Side, TriangleSides};
use crate::ExactRational;

fn half(n: u128) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(2u8))
}

/// 16E² = (a+b+c)(−a+b+c)(a−b+c)(a+b−c).
///
/// Strictly positive for any validated triangle. Runs in `u128` when the
/// product fits and falls back to big integers otherwise.
pub fn heron16(t: &TriangleSides) -> BigUint {
    let (a, b, c) = (t.a() as u128, t.b() as u128, t.c() as u128);
    // each factor < 2^66; validated sides keep the differences positive
    let factors = [a + b + c, b + c - a, a + c - b, a + b - c];
    let fast = factors
        .iter()
        .try_fold(1u128, |acc, &f| acc.checked_mul(f));
    match fast {
        Some(p) => BigUint::from(p),
        None => factors.iter().map(|&f| BigUint::from(f)).product(),
    }
}

/// s = (a+b+c)/2, half-integral for odd perimeters.
pub fn semi_perimeter(t: &TriangleSides) -> ExactRational {
    half(t.perimeter())
}

/// s − x for the given side, always positive.
fn s_minus(t: &TriangleSides, side: Side) -> ExactRational {
    let (y, z) = t.others(side);
    half(y as u128 + z as u128 - t.side(side) as u128)
}

/// Cosine of the angle opposite `side`, by the law of cosines.
pub fn cos_vertex(t: &TriangleSides, side: Side) -> ExactRational {
    let x = BigInt::from(t.side(side));
    let (y, z) = t.others(side);
    let (y, z) = (BigInt::from(y), BigInt::from(z));
    let num = &y * &y + &z * &z - &x * &x;
    let den = BigInt::from(2u8) * y * z;
    ExactRational::new(num, den)
}

/// tan²(θ/2) = (s−y)(s−z) / (s(s−x)) for the angle θ opposite `side`.
pub fn tan_half_sq(t: &TriangleSides, side: Side) -> ExactRational {
    let (y, z) = t.others(side);
    let (ys, zs) = (s_minus_len(t, y), s_minus_len(t, z));
    ys * zs / (semi_perimeter(t) * s_minus(t, side))
}

fn s_minus_len(t: &TriangleSides, len: u64) -> ExactRational {
    half(t.perimeter() - 2 * len as u128)
}

/// Tangent lengths `(x, y)` from the two endpoints of the base side to the
/// excircle's touch point on it.
///
/// With base `a` and the other sides `(b, c)` in cyclic order,
/// `x = (b − c + a)/2`, `y = (a + c − b)/2`, so `x + y = a` and
/// `x − y = b − c`.
pub fn tangent_lengths(t: &TriangleSides, base: Side) -> (ExactRational, ExactRational) {
    let a = t.side(base) as u128;
    let (b, c) = t.others(base);
    let (b, c) = (b as u128, c as u128);
    // b − c + a > 0 and a + c − b > 0 by the triangle inequality
    (half(b + a - c), half(a + c - b))
}

/// ρ² = s(s−y)(s−z)/(s−x) for the excircle opposite `side`.
pub fn exradius_sq(t: &TriangleSides, side: Side) -> ExactRational {
    let (y, z) = t.others(side);
    semi_perimeter(t) * s_minus_len(t, y) * s_minus_len(t, z) / s_minus(t, side)
}

pub fn exradius(t: &TriangleSides, side: Side) -> ExactRoot {
    ExactRoot::new(exradius_sq(t, side)).expect("exradius² is positive")
}

/// ρ = E/(s−x) = 2E/(2s−2x) as an integer, given an integral area `E`.
/// `None` when the division leaves a remainder.
pub fn integral_exradius(t: &TriangleSides, side: Side, area: &BigUint) -> Option<BigUint> {
    let (y, z) = t.others(side);
    let divisor = BigUint::from(y as u128 + z as u128 - t.side(side) as u128);
    let (q, r) = (area * 2u8).div_rem(&divisor);
    r.is_zero().then_some(q)
}

/// Every exact quantity derived from a triangle's sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleMetrics {
    pub sides: TriangleSides,
    /// a + b + c
    pub two_s: u128,
    pub s: ExactRational,
    /// 16E²
    pub heron16: BigUint,
    pub area: ExactRoot,
    pub cos_a: ExactRational,
    pub cos_b: ExactRational,
    pub cos_c: ExactRational,
    pub rho_a: ExactRoot,
    pub rho_b: ExactRoot,
    pub rho_c: ExactRoot,
}

impl TriangleMetrics {
    pub fn cos(&self, side: Side) -> &ExactRational {
        match side {
            Side::A => &self.cos_a,
            Side::B => &self.cos_b,
            Side::C => &self.cos_c,
        }
    }

    pub fn rho(&self, side: Side) -> &ExactRoot {
        match side {
            Side::A => &self.rho_a,
            Side::B => &self.rho_b,
            Side::C => &self.rho_c,
        }
    }

    /// Integer sides and integer area.
    pub fn is_heron(&self) -> bool {
        self.area.is_integer()
    }

    pub fn all_exradii_integral(&self) -> bool {
        Side::ALL.iter().all(|&x| self.rho(x).is_integer())
    }
}

pub fn metrics(t: &TriangleSides) -> TriangleMetrics {
    let heron16 = heron16(t);
    let area = ExactRoot::new(ExactRational::new(
        BigInt::from(heron16.clone()),
        BigInt::from(16u8),
    ))
    .expect("heron16 is positive");

    let rho = |side: Side| {
        let root = exradius(t, side);
        if let Some(e) = area.resolved() {
            let via_area = e / s_minus(t, side);
            assert_eq!(root.resolved(), Some(&via_area), "ρ = E/(s−x) for {t}");
        }
        root
    };

    TriangleMetrics {
        sides: *t,
        two_s: t.perimeter(),
        s: semi_perimeter(t),
        cos_a: cos_vertex(t, Side::A),
        cos_b: cos_vertex(t, Side::B),
        cos_c: cos_vertex(t, Side::C),
        rho_a: rho(Side::A),
        rho_b: rho(Side::B),
        rho_c: rho(Side::C),
        heron16,
        area,
    }
}
