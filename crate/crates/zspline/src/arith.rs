//! Exact integer arithmetic: gcd/lcm folds and a chinese-remainder solver
//! for systems whose moduli need not be pairwise coprime.
//!
//! All arithmetic is arbitrary precision. Least common multiples grow
//! quickly under composition, so nothing here may silently wrap or round.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A congruence `x ≡ residue (mod modulus)` with `modulus >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    residue: BigInt,
    modulus: BigInt,
}

impl Congruence {
    /// Builds a congruence, rejecting moduli below 1.
    pub fn new(residue: impl Into<BigInt>, modulus: impl Into<BigInt>) -> Result<Self, Error> {
        let residue = residue.into();
        let modulus = modulus.into();
        if modulus < BigInt::one() {
            return Err(Error::NonPositive {
                what: "modulus",
                value: modulus,
            });
        }
        Ok(Congruence { residue, modulus })
    }

    pub fn residue(&self) -> &BigInt {
        &self.residue
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    /// True when `value` satisfies this congruence.
    pub fn holds_for(&self, value: &BigInt) -> bool {
        (value - &self.residue).mod_floor(&self.modulus).is_zero()
    }
}

/// The solution set of a compatible congruence system: exactly the integers
/// congruent to `value` modulo `modulus`, with `0 <= value < modulus` and
/// `modulus` the lcm of the input moduli.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtSolution {
    pub value: BigInt,
    pub modulus: BigInt,
}

/// Greatest common divisor of a nonempty list of positive integers.
pub fn gcd_all(values: &[BigInt]) -> Result<BigInt, Error> {
    fold_positive(values, "gcd", |acc, v| acc.gcd(v))
}

/// Least common multiple of a nonempty list of positive integers.
pub fn lcm_all(values: &[BigInt]) -> Result<BigInt, Error> {
    fold_positive(values, "lcm", |acc, v| acc.lcm(v))
}

fn fold_positive(
    values: &[BigInt],
    what: &'static str,
    combine: impl Fn(BigInt, &BigInt) -> BigInt,
) -> Result<BigInt, Error> {
    let (first, rest) = values.split_first().ok_or(Error::EmptyInput(what))?;
    for v in values {
        if !v.is_positive() {
            return Err(Error::NonPositive {
                what: "argument",
                value: v.clone(),
            });
        }
    }
    Ok(rest.iter().fold(first.clone(), combine))
}

/// Merges two congruences.
///
/// A common solution exists if and only if the residues agree modulo the
/// gcd of the two moduli. On success the combined solution set is a single
/// residue class modulo `lcm(m1, m2)`, reported in canonical form (least
/// nonnegative representative). Incompatible inputs are a normal outcome,
/// not an error.
pub fn crt_pair(a: &Congruence, b: &Congruence) -> Option<CrtSolution> {
    let eg = a.modulus.extended_gcd(&b.modulus);
    let diff = &b.residue - &a.residue;
    let (q, r) = diff.div_rem(&eg.gcd);
    if !r.is_zero() {
        return None;
    }
    let modulus = (&a.modulus / &eg.gcd) * &b.modulus;
    // eg.x * m1 ≡ gcd (mod m2), so the step below lands in b's class while
    // staying in a's.
    let value = (&a.residue + &a.modulus * eg.x * q).mod_floor(&modulus);
    Some(CrtSolution { value, modulus })
}

/// Solves a nonempty system of congruences by folding [`crt_pair`].
///
/// Each merge is exact (the running solution set is the intersection of the
/// sets merged so far), so the fold succeeds if and only if every pair of
/// input congruences is compatible, and the result does not depend on the
/// input order.
pub fn crt_system(congruences: &[Congruence]) -> Result<Option<CrtSolution>, Error> {
    let (first, rest) = congruences
        .split_first()
        .ok_or(Error::EmptyInput("congruence system"))?;
    let mut acc = CrtSolution {
        value: first.residue.mod_floor(&first.modulus),
        modulus: first.modulus.clone(),
    };
    for c in rest {
        let merged = Congruence {
            residue: acc.value,
            modulus: acc.modulus,
        };
        match crt_pair(&merged, c) {
            Some(next) => acc = next,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}
