//! The family JSON interchange format used by every CLI subcommand:
//! `{"n": N, "k": K, "sets": [[..], ..]}` with 1-based, strictly increasing
//! inner arrays of length `k`. Emission is canonical (storage order), so any
//! emitted family re-parses identically.

use serde::{Deserialize, Serialize};

use crate::family::{KSubset, Params, SetFamily};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FamilyJson {
    pub n: u32,
    pub k: u32,
    pub sets: Vec<Vec<u32>>,
}

impl FamilyJson {
    pub fn from_family(f: &SetFamily) -> Self {
        FamilyJson {
            n: f.params().n(),
            k: f.params().k(),
            sets: f.iter().map(|m| m.elements()).collect(),
        }
    }

    /// Validates and converts. Rejects wrong-size or non-increasing sets,
    /// out-of-range elements, and duplicate sets.
    pub fn into_family(self) -> Result<SetFamily> {
        let params = Params::new(self.n, self.k)?;
        let mut members = Vec::with_capacity(self.sets.len());
        for set in &self.sets {
            if set.len() != self.k as usize {
                return Err(Error::Param(format!(
                    "set {set:?} has {} elements, expected k = {}",
                    set.len(),
                    self.k
                )));
            }
            if !set.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::Param(format!(
                    "set {set:?} is not strictly increasing"
                )));
            }
            members.push(KSubset::from_elements(params, set)?);
        }
        let family = SetFamily::new(params, members)?;
        if family.len() != self.sets.len() {
            return Err(Error::Param("duplicate sets in family".into()));
        }
        Ok(family)
    }
}

impl From<&SetFamily> for FamilyJson {
    fn from(f: &SetFamily) -> Self {
        FamilyJson::from_family(f)
    }
}

impl TryFrom<FamilyJson> for SetFamily {
    type Error = Error;

    fn try_from(j: FamilyJson) -> Result<SetFamily> {
        j.into_family()
    }
}
