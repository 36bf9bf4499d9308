//! Basis relabelings between isomorphic algebras: Cl(3,0) ↔ Cl(1,2), and the
//! even subalgebras of Cl(1,3) and Cl(3,1) ↔ Cl(3,0).
//!
//! Each table is a signed permutation of the eight coefficients. Two of the
//! relabelings are only algebra isomorphisms after flipping the sign of one
//! pair of blades; those signs are part of the tables below and are covered
//! by the homomorphism tests.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GaError, Result};
use crate::exp::exp;
use crate::multivector::Multivector;
use crate::signature::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RemapTable {
    /// Cl(3,0) ↔ Cl(1,2): `e2 ↔ e13`, `e3 ↔ e12`.
    Cl30Cl12Swap,
    /// Cl(3,0) → Cl(1,2): `e1 → e12`, `e2 → -e13`, `e3 → e1`, `e12 → e23`,
    /// `e13 → -e2`, `e23 → e3`.
    Cl30Cl12Cycle,
    /// Cl(1,3)⁺ → Cl(3,0): `e12 → e1`, `e13 → -e2`, `e14 → e3`, `e23 → e12`,
    /// `e24 → -e13`, `e34 → e23`.
    Cl13EvenA,
    /// Cl(1,3)⁺ → Cl(3,0): `e12 → e3`, `e13 → e2`, `e14 → e1`, `e23 → e23`,
    /// `e24 → e13`, `e34 → e12`.
    Cl13EvenB,
    /// Cl(3,1)⁺ → Cl(3,0): `e14 → e1`, `e24 → e2`, `e34 → e3`, bivectors of
    /// `e1, e2, e3` unchanged.
    Cl31EvenA,
    /// Cl(3,1)⁺ → Cl(3,0): `e12 → e23`, `e13 → -e13`, `e23 → e12`,
    /// `e14 → e3`, `e24 → -e2`, `e34 → e1`.
    Cl31EvenB,
}

impl RemapTable {
    pub const ALL: [RemapTable; 6] = [
        RemapTable::Cl30Cl12Swap,
        RemapTable::Cl30Cl12Cycle,
        RemapTable::Cl13EvenA,
        RemapTable::Cl13EvenB,
        RemapTable::Cl31EvenA,
        RemapTable::Cl31EvenB,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            RemapTable::Cl30Cl12Swap => "cl30-cl12-swap",
            RemapTable::Cl30Cl12Cycle => "cl30-cl12-cycle",
            RemapTable::Cl13EvenA => "cl13-even-a",
            RemapTable::Cl13EvenB => "cl13-even-b",
            RemapTable::Cl31EvenA => "cl31-even-a",
            RemapTable::Cl31EvenB => "cl31-even-b",
        }
    }

    /// Source index → (target index, sign), in the forward direction
    /// (Cl(3,0) → Cl(1,2), or even 4D → Cl(3,0)).
    fn forward(self) -> SignedPermutation {
        // 3D order: 1 e1 e2 e3 e12 e13 e23 e123
        // even 4D order: 1 e12 e13 e14 e23 e24 e34 e1234
        let pairs: [(usize, f64); 8] = match self {
            RemapTable::Cl30Cl12Swap => [(0, 1.), (1, 1.), (5, 1.), (4, 1.), (3, 1.), (2, 1.), (6, 1.), (7, 1.)],
            RemapTable::Cl30Cl12Cycle => [(0, 1.), (4, 1.), (5, -1.), (1, 1.), (6, 1.), (2, -1.), (3, 1.), (7, 1.)],
            RemapTable::Cl13EvenA => [(0, 1.), (1, 1.), (2, -1.), (3, 1.), (4, 1.), (5, -1.), (6, 1.), (7, 1.)],
            RemapTable::Cl13EvenB => [(0, 1.), (3, 1.), (2, 1.), (1, 1.), (6, 1.), (5, 1.), (4, 1.), (7, 1.)],
            RemapTable::Cl31EvenA => [(0, 1.), (4, 1.), (5, 1.), (1, 1.), (6, 1.), (2, 1.), (3, 1.), (7, 1.)],
            RemapTable::Cl31EvenB => [(0, 1.), (6, 1.), (5, -1.), (3, 1.), (4, 1.), (2, -1.), (1, 1.), (7, 1.)],
        };
        SignedPermutation(pairs)
    }

    fn even_signature(self) -> Option<EvenSignature> {
        match self {
            RemapTable::Cl13EvenA | RemapTable::Cl13EvenB => Some(EvenSignature::Cl13),
            RemapTable::Cl31EvenA | RemapTable::Cl31EvenB => Some(EvenSignature::Cl31),
            _ => None,
        }
    }
}

impl fmt::Display for RemapTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RemapTable {
    type Err = GaError;

    fn from_str(s: &str) -> Result<Self> {
        RemapTable::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| GaError::UnknownRemap(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy)]
struct SignedPermutation([(usize, f64); 8]);

impl SignedPermutation {
    fn apply(&self, c: &[f64; 8]) -> [f64; 8] {
        let mut out = [0.0; 8];
        for (i, &(j, s)) in self.0.iter().enumerate() {
            out[j] = s * c[i];
        }
        out
    }

    fn inverse(&self) -> Self {
        let mut inv = [(0, 1.0); 8];
        for (i, &(j, s)) in self.0.iter().enumerate() {
            inv[j] = (i, s);
        }
        SignedPermutation(inv)
    }
}

/// Relabels a Cl(3,0) multivector into Cl(1,2) or back, depending on the
/// input signature.
pub fn basis_remap(x: &Multivector, table: RemapTable) -> Result<Multivector> {
    if table.even_signature().is_some() {
        return Err(GaError::RemapDomain { table: table.name(), sig: x.sig });
    }
    let fwd = table.forward();
    match x.sig {
        Signature::Cl30 => Ok(Multivector::new(Signature::Cl12, fwd.apply(&x.c))),
        Signature::Cl12 => Ok(Multivector::new(Signature::Cl30, fwd.inverse().apply(&x.c))),
        sig => Err(GaError::RemapDomain { table: table.name(), sig }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EvenSignature {
    /// Cl(1,3): e1² = +1, e2² = e3² = e4² = -1.
    Cl13,
    /// Cl(3,1): e1² = e2² = e3² = +1, e4² = -1.
    Cl31,
}

impl EvenSignature {
    fn squares(self) -> [i8; 4] {
        match self {
            EvenSignature::Cl13 => [1, -1, -1, -1],
            EvenSignature::Cl31 => [1, 1, 1, -1],
        }
    }
}

/// Display names of the even 4D blades in storage order.
pub const EVEN_BASIS: [&str; 8] = ["1", "e12", "e13", "e14", "e23", "e24", "e34", "e1234"];
const EVEN_MASK: [u8; 8] = [0b0000, 0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100, 0b1111];

/// Element of the even subalgebra of Cl(1,3) or Cl(3,1).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvenMultivector {
    pub sig: EvenSignature,
    pub c: [f64; 8],
}

impl EvenMultivector {
    pub const fn new(sig: EvenSignature, c: [f64; 8]) -> Self {
        Self { sig, c }
    }

    pub fn to_cl30(&self, table: RemapTable) -> Result<Multivector> {
        self.check_table(table)?;
        Ok(Multivector::new(Signature::Cl30, table.forward().apply(&self.c)))
    }

    pub fn from_cl30(x: &Multivector, table: RemapTable) -> Result<Self> {
        let sig = table
            .even_signature()
            .ok_or(GaError::RemapDomain { table: table.name(), sig: x.sig })?;
        if x.sig != Signature::Cl30 {
            return Err(GaError::RemapDomain { table: table.name(), sig: x.sig });
        }
        Ok(Self { sig, c: table.forward().inverse().apply(&x.c) })
    }

    /// Exponential computed in Cl(3,0) through `table`.
    pub fn exp(&self, table: RemapTable) -> Result<Self> {
        let y = exp(&self.to_cl30(table)?);
        Self::from_cl30(&y, table)
    }

    /// Geometric product inside the even subalgebra.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.sig, other.sig, "signature mismatch in even multivector product");
        let squares = self.sig.squares();
        let mut out = [0.0; 8];
        for (i, &x) in self.c.iter().enumerate() {
            for (j, &y) in other.c.iter().enumerate() {
                let (a, b) = (EVEN_MASK[i], EVEN_MASK[j]);
                let mut sign = reorder_sign4(a, b);
                for (k, sq) in squares.iter().enumerate() {
                    if a & b & (1 << k) != 0 {
                        sign *= f64::from(*sq);
                    }
                }
                let k = EVEN_MASK.iter().position(|&m| m == a ^ b).expect("even blades are closed");
                out[k] += sign * x * y;
            }
        }
        Self { sig: self.sig, c: out }
    }

    fn check_table(&self, table: RemapTable) -> Result<()> {
        match table.even_signature() {
            Some(s) if s == self.sig => Ok(()),
            _ => Err(GaError::RemapDomain { table: table.name(), sig: Signature::Cl30 }),
        }
    }
}

fn reorder_sign4(a: u8, b: u8) -> f64 {
    let mut swaps = 0u32;
    let mut x = a >> 1;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}
