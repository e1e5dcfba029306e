//! The two worked tables of Heron isosceles triangles with integral
//! exradii: scale 1 and every valid `1 ≤ n < m ≤ 6`.

use alloc::vec::Vec;

use crate::families::{gen_f1, gen_f2, F1Params, F2Params, MNPair};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableFamily {
    F1,
    F2,
}

/// One row: parameters, α, β = γ, ρ_β = ρ_γ, ρ_α.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TableRow {
    pub family: TableFamily,
    pub scale: u64,
    pub m: u64,
    pub n: u64,
    pub alpha: u64,
    pub beta: u64,
    pub rho_beta: u64,
    pub rho_alpha: u64,
    pub area: u128,
    pub height: u64,
}

impl TableRow {
    pub fn perimeter(&self) -> u128 {
        self.alpha as u128 + 2 * self.beta as u128
    }
}

pub const TABLE_MAX_M: u64 = 6;

/// Rows ordered by `(n, m)`, the order the tables are usually printed in.
pub fn family_table(family: TableFamily, scale: u64, max_m: u64) -> Result<Vec<TableRow>> {
    MNPair::all_up_to(max_m)
        .into_iter()
        .map(|mn| {
            let rec = match family {
                TableFamily::F1 => gen_f1(&F1Params::new(scale, mn)?)?,
                TableFamily::F2 => gen_f2(&F2Params::new(scale, mn)?)?,
            };
            let int = |root: &crate::ExactRoot| {
                use num_traits::ToPrimitive;
                root.as_integer()
                    .and_then(|v| v.to_u64())
                    .expect("F1/F2 exradii are integers")
            };
            Ok(TableRow {
                family,
                scale,
                m: mn.m(),
                n: mn.n(),
                alpha: rec.alpha,
                beta: rec.beta,
                rho_beta: int(&rec.rho_beta),
                rho_alpha: int(&rec.rho_alpha),
                area: rec.area,
                height: rec.h,
            })
        })
        .collect()
}

/// Both tables, F1 first, eight rows each.
pub fn paper_tables() -> Result<(Vec<TableRow>, Vec<TableRow>)> {
    Ok((
        family_table(TableFamily::F1, 1, TABLE_MAX_M)?,
        family_table(TableFamily::F2, 1, TABLE_MAX_M)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eight_rows_each() {
        let (f1, f2) = paper_tables().unwrap();
        assert_eq!(f1.len(), 8);
        assert_eq!(f2.len(), 8);
        assert_eq!((f1[0].alpha, f1[0].beta, f1[0].rho_beta, f1[0].rho_alpha), (6, 5, 4, 6));
        let last = f2[7];
        assert_eq!((last.n, last.m), (5, 6));
        assert_eq!((last.alpha, last.beta, last.rho_beta, last.rho_alpha), (120, 61, 11, 660));
    }
}
