//! Ideals of the coefficient ring ℤ.
//!
//! Every ideal of ℤ is principal, so an ideal is stored as its unique
//! non-negative generator: `0` is the zero ideal, `1` the unit ideal.
//! Coset representatives are the least non-negative residues, except for
//! the zero ideal where every integer is its own representative.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoefIdeal {
    generator: BigInt,
}

impl CoefIdeal {
    pub fn zero() -> Self {
        CoefIdeal {
            generator: BigInt::zero(),
        }
    }

    pub fn unit() -> Self {
        CoefIdeal {
            generator: BigInt::one(),
        }
    }

    /// The principal ideal `⟨a⟩`.
    pub fn principal(a: &BigInt) -> Self {
        CoefIdeal {
            generator: a.abs(),
        }
    }

    /// `⟨gens⟩ = ⟨gcd(gens)⟩`; the empty list generates `⟨0⟩`.
    pub fn from_generators<'a, I>(gens: I) -> Self
    where
        I: IntoIterator<Item = &'a BigInt>,
    {
        let generator = gens
            .into_iter()
            .fold(BigInt::zero(), |acc, g| acc.gcd(g));
        CoefIdeal { generator }
    }

    pub fn generator(&self) -> &BigInt {
        &self.generator
    }

    pub fn is_zero(&self) -> bool {
        self.generator.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.generator.is_one()
    }

    /// Neither `⟨0⟩` nor `⟨1⟩`: the ideal contributes scalar torsion.
    pub fn is_torsion(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn contains(&self, a: &BigInt) -> bool {
        if self.generator.is_zero() {
            a.is_zero()
        } else {
            a.is_multiple_of(&self.generator)
        }
    }

    pub fn sum(&self, other: &CoefIdeal) -> CoefIdeal {
        CoefIdeal {
            generator: self.generator.gcd(&other.generator),
        }
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &CoefIdeal) -> bool {
        other.contains(&self.generator)
    }

    /// Canonical representative of `a + self`.
    pub fn reduce(&self, a: &BigInt) -> BigInt {
        if self.generator.is_zero() {
            a.clone()
        } else {
            a.mod_floor(&self.generator)
        }
    }

    pub fn coset_rep(&self, a: &BigInt) -> CosetRep {
        CosetRep {
            value: self.reduce(a),
            ideal: self.clone(),
        }
    }

    pub fn is_canonical(&self, a: &BigInt) -> bool {
        self.generator.is_zero() || (!a.is_negative() && a < &self.generator)
    }

    /// All canonical representatives, or `None` when the quotient is ℤ itself.
    pub fn residues(&self) -> Option<Vec<BigInt>> {
        if self.generator.is_zero() {
            return None;
        }
        let mut out = Vec::new();
        let mut r = BigInt::zero();
        while r < self.generator {
            out.push(r.clone());
            r += 1;
        }
        Some(out)
    }
}

impl fmt::Display for CoefIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.generator)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetRep {
    pub value: BigInt,
    pub ideal: CoefIdeal,
}

/// Extended gcd with a non-negative gcd: returns `(d, u, v)` with `u·a + v·b = d`.
pub fn bezout(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Bezout coefficients for a whole list, folded left to right so the
/// witness is deterministic in list order.
pub fn bezout_many(values: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut d = BigInt::zero();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(values.len());
    for v in values {
        let (g, u, w) = bezout(&d, v);
        for c in coeffs.iter_mut() {
            *c *= &u;
        }
        coeffs.push(w);
        d = g;
    }
    (d, coeffs)
}
