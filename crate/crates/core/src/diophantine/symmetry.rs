use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::solution::SolutionXYZ;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Generator {
    /// `(x, y, z) ↦ (-x, y, -z)`
    Tau1,
    /// `(x, y, z) ↦ (x, -y, -z)`
    Tau2,
    /// `(x, y, z) ↦ (y, x, z)`
    Tau3,
}

/// A word in the generators, applied right to left.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct SymmetryElement {
    pub word: Vec<Generator>,
}

impl SymmetryElement {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn from_word(word: &[Generator]) -> Self {
        SymmetryElement { word: word.to_vec() }
    }

    /// One word for each of the eight group elements.
    pub fn all() -> Vec<Self> {
        use Generator::*;
        [
            &[][..],
            &[Tau1],
            &[Tau2],
            &[Tau1, Tau2],
            &[Tau3],
            &[Tau3, Tau1],
            &[Tau3, Tau2],
            &[Tau3, Tau1, Tau2],
        ]
        .iter()
        .map(|w| Self::from_word(w))
        .collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        SymmetryElement { word }
    }

    pub fn apply(&self, sol: &SolutionXYZ) -> SolutionXYZ {
        let [x, y, z] = self.apply_triple([sol.x.clone(), sol.y.clone(), sol.z.clone()]);
        SolutionXYZ { x, y, z }
    }

    /// The same action on triples over any ring, e.g. rational functions.
    pub fn apply_triple<T: Neg<Output = T>>(&self, t: [T; 3]) -> [T; 3] {
        self.word.iter().rev().fold(t, |[x, y, z], g| match g {
            Generator::Tau1 => [-x, y, -z],
            Generator::Tau2 => [x, -y, -z],
            Generator::Tau3 => [y, x, z],
        })
    }

    /// Action on a generic triple, used to compare group elements.
    pub fn signature(&self) -> SolutionXYZ {
        self.apply(&SolutionXYZ::new_unchecked(2, 3, 5))
    }
}

impl fmt::Display for SymmetryElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<&str> = self
            .word
            .iter()
            .map(|g| match g {
                Generator::Tau1 => "t1",
                Generator::Tau2 => "t2",
                Generator::Tau3 => "t3",
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// The eight images of `sol`.
pub fn orbit(sol: &SolutionXYZ) -> Vec<SolutionXYZ> {
    SymmetryElement::all().iter().map(|g| g.apply(sol)).collect()
}

/// Lexicographically least orbit member with `x ≥ y ≥ 0` and `z ≥ 0`.
pub fn canonical_form(sol: &SolutionXYZ) -> SolutionXYZ {
    let zero = BigInt::from(0);
    let members = orbit(sol);
    members
        .iter()
        .filter(|s| s.x >= s.y && s.y >= zero && s.z >= zero)
        .min()
        .or_else(|| members.iter().min())
        .cloned()
        .expect("orbit is nonempty")
}
