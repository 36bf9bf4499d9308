//! The four real Clifford algebras over a 3D vector space and their
//! geometric-product sign tables.
//!
//! Basis blades are stored in the order `[1, e1, e2, e3, e12, e13, e23, e123]`
//! with increasing digits inside each blade, so `e13` (not `e31 = -e13`) is
//! the stored element.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GaError;

/// Display names of the eight basis blades in storage order.
pub const BASIS: [&str; 8] = ["1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"];

/// Grade of each stored blade.
pub const GRADE: [usize; 8] = [0, 1, 1, 1, 2, 2, 2, 3];

/// Bitmask (bit k set <=> e_{k+1} present) of each stored blade. The map is
/// its own inverse, so it also turns a bitmask back into a storage index.
const MASK: [usize; 8] = [0, 1, 2, 4, 3, 5, 6, 7];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Signature {
    /// Cl(3,0): e1² = e2² = e3² = +1.
    Cl30,
    /// Cl(0,3): e1² = e2² = e3² = -1.
    Cl03,
    /// Cl(1,2): e1² = +1, e2² = e3² = -1.
    Cl12,
    /// Cl(2,1): e1² = e2² = +1, e3² = -1.
    Cl21,
}

/// One entry of the product table: `e_i e_j = sign * e_{index}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableEntry {
    pub index: usize,
    pub sign: i8,
}

pub type SignTable = [[TableEntry; 8]; 8];

impl Signature {
    pub const ALL: [Signature; 4] = [Signature::Cl30, Signature::Cl03, Signature::Cl12, Signature::Cl21];

    /// `(p, q)`: number of basis vectors squaring to +1 and -1.
    pub const fn pq(self) -> (u8, u8) {
        match self {
            Signature::Cl30 => (3, 0),
            Signature::Cl03 => (0, 3),
            Signature::Cl12 => (1, 2),
            Signature::Cl21 => (2, 1),
        }
    }

    /// Squares of `e1, e2, e3`.
    pub const fn squares(self) -> [i8; 3] {
        match self {
            Signature::Cl30 => [1, 1, 1],
            Signature::Cl03 => [-1, -1, -1],
            Signature::Cl12 => [1, -1, -1],
            Signature::Cl21 => [1, 1, -1],
        }
    }

    /// `I²` for the pseudoscalar `I = e123`.
    pub const fn pseudoscalar_square(self) -> f64 {
        match self {
            Signature::Cl30 | Signature::Cl12 => -1.0,
            Signature::Cl03 | Signature::Cl21 => 1.0,
        }
    }

    pub fn table(self) -> &'static SignTable {
        match self {
            Signature::Cl30 => &TABLE_CL30,
            Signature::Cl03 => &TABLE_CL03,
            Signature::Cl12 => &TABLE_CL12,
            Signature::Cl21 => &TABLE_CL21,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Signature::Cl30 => "cl30",
            Signature::Cl03 => "cl03",
            Signature::Cl12 => "cl12",
            Signature::Cl21 => "cl21",
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.pq();
        write!(f, "Cl({p},{q})")
    }
}

impl FromStr for Signature {
    type Err = GaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | ',' | ' ' | '_'))
            .collect::<String>()
            .to_ascii_lowercase();
        match t.as_str() {
            "cl30" => Ok(Signature::Cl30),
            "cl03" => Ok(Signature::Cl03),
            "cl12" => Ok(Signature::Cl12),
            "cl21" => Ok(Signature::Cl21),
            _ => Err(GaError::InvalidParameter(format!(
                "unknown algebra `{s}` (expected cl30, cl03, cl12 or cl21)"
            ))),
        }
    }
}

/// Sign from reordering the concatenated word `a b` of basis vectors into
/// increasing order (each transposition of distinct vectors flips the sign).
const fn reorder_sign(a: usize, b: usize) -> i8 {
    let mut swaps = 0u32;
    let mut x = a >> 1;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Builds the product table from `e_i e_j + e_j e_i = 2 δ_ij e_i²`.
const fn build_table(squares: [i8; 3]) -> SignTable {
    let mut table = [[TableEntry { index: 0, sign: 0 }; 8]; 8];
    let mut i = 0;
    while i < 8 {
        let mut j = 0;
        while j < 8 {
            let (a, b) = (MASK[i], MASK[j]);
            let mut sign = reorder_sign(a, b);
            let common = a & b;
            let mut k = 0;
            while k < 3 {
                if common & (1 << k) != 0 {
                    sign *= squares[k];
                }
                k += 1;
            }
            table[i][j] = TableEntry { index: MASK[a ^ b], sign };
            j += 1;
        }
        i += 1;
    }
    table
}

static TABLE_CL30: SignTable = build_table(Signature::Cl30.squares());
static TABLE_CL03: SignTable = build_table(Signature::Cl03.squares());
static TABLE_CL12: SignTable = build_table(Signature::Cl12.squares());
static TABLE_CL21: SignTable = build_table(Signature::Cl21.squares());
