use serde::Serialize;

use crate::ffield::gcd;

use super::{maps_isomorphic, AlgebraicMap, MapError};

/// `wilson_power(maps[from], j) ≅ maps[to]` with `from ≠ to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WilsonLink {
    pub from: usize,
    pub to: usize,
    pub j: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WilsonPartition {
    /// Orbit id of each map; ids follow the order of first appearance.
    pub orbit_of: Vec<usize>,
    pub orbits: Vec<Vec<usize>>,
    pub links: Vec<WilsonLink>,
}

impl WilsonPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }
}

/// Partitions a complete list of pairwise non-isomorphic maps with a common
/// valency `n` into orbits of the operators `H_j`, `gcd(j, n) = 1`.
///
/// Errors if some `H_j` image is isomorphic to none of the listed maps.
pub fn wilson_orbits(maps: &[AlgebraicMap]) -> Result<WilsonPartition, MapError> {
    const UNSET: usize = usize::MAX;
    let mut orbit_of = vec![UNSET; maps.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut links = Vec::new();
    for i in 0..maps.len() {
        if orbit_of[i] != UNSET {
            continue;
        }
        let id = orbits.len();
        orbit_of[i] = id;
        let mut orbit = vec![i];
        let n = maps[i].map_type().1;
        for j in 2..n {
            if gcd(j, n) != 1 {
                continue;
            }
            let image = maps[i].wilson_power(j as i64)?;
            let Some(k) = maps.iter().position(|m| maps_isomorphic(&image, m)) else {
                return Err(MapError::Unmatched { index: i, j });
            };
            if k != i {
                links.push(WilsonLink { from: i, to: k, j });
            }
            if orbit_of[k] == UNSET {
                orbit_of[k] = id;
                orbit.push(k);
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(WilsonPartition { orbit_of, orbits, links })
}
