//! Cross-validation of the classification against the brute-force census.

use thiserror::Error;

use crate::mapcore::{classify, ClassifyError, MapError};
use crate::oracle::{census, find_isomorphism, CensusError, CensusLimits, RotationSystem};

#[derive(Debug, Error)]
pub enum CrosscheckError {
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Export(#[from] MapError),
}

/// Outcome of matching census representatives to constructed maps.
#[derive(Debug, Clone)]
pub struct Crosscheck {
    pub r: usize,
    pub t: usize,
    pub oracle_count: usize,
    pub constructed_count: usize,
    /// `(oracle index, record index)` for every dart-conjugate pair.
    pub matching: Vec<(usize, usize)>,
    /// Census representatives isomorphic to no constructed map.
    pub unmatched_oracle: Vec<RotationSystem>,
    /// Labels of constructed maps the census did not find.
    pub unmatched_constructed: Vec<String>,
}

impl Crosscheck {
    pub fn agrees(&self) -> bool {
        self.oracle_count == self.constructed_count
            && self.unmatched_oracle.is_empty()
            && self.unmatched_constructed.is_empty()
            && self.matching.len() == self.oracle_count
    }
}

/// Runs the census for `K_q^{(t)}` and matches its representatives one to
/// one with the classified maps by dart conjugation.
pub fn oracle_vs_construction(q: usize, t: usize, limits: &CensusLimits) -> Result<Crosscheck, CrosscheckError> {
    let found = census(q, t, limits)?;
    let classified = classify(q as u64, t as u64)?;
    let exported = classified
        .maps
        .iter()
        .map(|m| m.to_rotation_system())
        .collect::<Result<Vec<_>, _>>()?;

    let mut taken = vec![false; exported.len()];
    let mut matching = Vec::new();
    let mut unmatched_oracle = Vec::new();
    for (i, rep) in found.representatives.iter().enumerate() {
        let hit = (0..exported.len()).find(|&k| !taken[k] && find_isomorphism(rep, &exported[k]).is_some());
        match hit {
            Some(k) => {
                taken[k] = true;
                matching.push((i, k));
            }
            None => unmatched_oracle.push(rep.clone()),
        }
    }
    let unmatched_constructed = classified
        .records
        .iter()
        .zip(&taken)
        .filter(|(_, &t)| !t)
        .map(|(r, _)| r.params.label())
        .collect();
    Ok(Crosscheck {
        r: q,
        t,
        oracle_count: found.count(),
        constructed_count: classified.records.len(),
        matching,
        unmatched_oracle,
        unmatched_constructed,
    })
}
