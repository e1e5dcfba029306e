use core::fmt;

use crate::{Error, Result};

/// Names one side of a triangle, and with it the opposite vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
    C,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::A, Side::B, Side::C];
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "a",
            Side::B => "b",
            Side::C => "c",
        })
    }
}

/// Integer side lengths satisfying the strict triangle inequality.
///
/// `a` is opposite vertex A and so on. For isosceles triangles the
/// convention is `a` = base, `b` = `c` = legs. No role (hypotenuse, base) is
/// ever inferred from the magnitudes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriangleSides {
    a: u64,
    b: u64,
    c: u64,
}

impl TriangleSides {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::NonPositiveSide { a, b, c });
        }
        // u128 so that b + c cannot wrap
        let (wa, wb, wc) = (a as u128, b as u128, c as u128);
        if wa >= wb + wc || wb >= wa + wc || wc >= wa + wb {
            return Err(Error::DegenerateOrImpossible { a, b, c });
        }
        Ok(TriangleSides { a, b, c })
    }

    /// Isosceles triangle with the given base and two equal legs.
    pub fn isosceles(base: u64, leg: u64) -> Result<Self> {
        Self::new(base, leg, leg)
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn side(&self, side: Side) -> u64 {
        match side {
            Side::A => self.a,
            Side::B => self.b,
            Side::C => self.c,
        }
    }

    /// The two sides adjacent to the vertex opposite `side`, in cyclic order.
    pub fn others(&self, side: Side) -> (u64, u64) {
        match side {
            Side::A => (self.b, self.c),
            Side::B => (self.c, self.a),
            Side::C => (self.a, self.b),
        }
    }

    /// Perimeter, i.e. twice the semi-perimeter. Never overflows.
    pub fn perimeter(&self) -> u128 {
        self.a as u128 + self.b as u128 + self.c as u128
    }

    pub fn is_isosceles(&self) -> bool {
        self.a == self.b || self.b == self.c || self.a == self.c
    }
}

impl fmt::Display for TriangleSides {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}
