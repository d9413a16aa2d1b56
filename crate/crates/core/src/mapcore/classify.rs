use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::construct::{build_g, param_sets, ConstructError, ParamSet, Variant};

use super::{balanced_cayley, maps_isomorphic, wilson_orbits, AlgebraicMap, CayleyWitness, MapError, WilsonPartition};

/// Column order of [`RegularMapRecord::csv_row`].
pub const CSV_HEADER: &str = "q,t,poly,variant,ell,a,b,c,m,n,genus,chiral,self_dual,balanced_cayley,wilson_orbit";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapType {
    pub m: u64,
    pub n: u64,
}

/// One classified map with its invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularMapRecord {
    pub params: ParamSet,
    #[serde(rename = "type")]
    pub map_type: MapType,
    pub genus: u64,
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
    pub chiral: bool,
    pub self_dual: bool,
    pub balanced_cayley: bool,
    pub cayley_witness: CayleyWitness,
    pub wilson_orbit: usize,
}

impl RegularMapRecord {
    /// The polynomial, or `f=<f>` for dipoles, whose only parameter is `f`.
    pub fn poly_column(&self) -> String {
        match (&self.params.poly, self.params.variant) {
            (_, Variant::Dipole) => format!("f={}", self.params.f.unwrap_or(0)),
            (Some(mu), _) => mu.to_string(),
            (None, _) => String::new(),
        }
    }

    pub fn csv_row(&self) -> String {
        let p = &self.params;
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            p.q,
            p.t,
            self.poly_column(),
            p.variant,
            p.ell,
            p.a,
            p.b,
            p.c,
            self.map_type.m,
            self.map_type.n,
            self.genus,
            self.chiral,
            self.self_dual,
            self.balanced_cayley,
            self.wilson_orbit
        )
    }
}

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("{label}: construction failed: {source}")]
    Construct { label: String, source: ConstructError },
    #[error("{label}: {source}")]
    Map { label: String, source: MapError },
    #[error("{label}: {msg}")]
    Check { label: String, msg: String },
}

/// All classified maps for one `(q, t)`.
#[derive(Debug, Clone)]
pub struct Classification {
    pub q: u64,
    pub t: u64,
    pub records: Vec<RegularMapRecord>,
    pub maps: Vec<AlgebraicMap>,
    pub wilson: WilsonPartition,
}

struct Built {
    map: AlgebraicMap,
    record: RegularMapRecord,
}

fn build_one(ps: ParamSet) -> Result<Built, ClassifyError> {
    let label = format!("({}, {}) {}", ps.q, ps.t, ps.label());
    let check = |msg: String| ClassifyError::Check { label: label.clone(), msg };
    let group = build_g(&ps).map_err(|source| ClassifyError::Construct { label: label.clone(), source })?;
    let map = AlgebraicMap::of_group(group).map_err(|source| ClassifyError::Map { label: label.clone(), source })?;
    if !map.is_orientably_regular() {
        return Err(check("map is not orientably regular".into()));
    }
    match map.underlying_multigraph() {
        Ok((r, t)) if r as u64 == ps.q && t as u64 == ps.t => {}
        Ok((r, t)) => return Err(check(format!("underlying graph is K_{r}^({t})"))),
        Err(e) => return Err(check(format!("underlying graph is not complete: {e}"))),
    }
    let genus = map.genus().map_err(|source| ClassifyError::Map { label: label.clone(), source })?;
    let (m, n) = map.map_type();
    let cayley = balanced_cayley(&map);
    let record = RegularMapRecord {
        map_type: MapType { m, n },
        genus,
        vertices: map.vertices() as u64,
        edges: map.edges() as u64,
        faces: map.faces() as u64,
        chiral: map.is_chiral(),
        self_dual: map.is_self_dual(),
        balanced_cayley: cayley.balanced,
        cayley_witness: cayley.witness,
        wilson_orbit: 0,
        params: ps,
    };
    Ok(Built { map, record })
}

/// Builds, checks and computes invariants for every admissible parameter
/// set of `(q, t)`. Empty when `K_q^{(t)}` has no orientably-regular
/// embedding.
pub fn classify(q: u64, t: u64) -> Result<Classification, ClassifyError> {
    let built: Vec<Built> = param_sets(q, t)
        .into_par_iter()
        .map(build_one)
        .collect::<Result<_, _>>()?;
    let (maps, mut records): (Vec<_>, Vec<_>) = built.into_iter().map(|b| (b.map, b.record)).unzip();

    let pairs: Vec<(usize, usize)> = (0..maps.len())
        .flat_map(|i| (i + 1..maps.len()).map(move |j| (i, j)))
        .collect();
    if let Some(&(i, j)) = pairs.par_iter().find_first(|&&(i, j)| maps_isomorphic(&maps[i], &maps[j])) {
        return Err(ClassifyError::Check {
            label: records[j].params.label(),
            msg: format!("isomorphic to {}", records[i].params.label()),
        });
    }

    let wilson = wilson_orbits(&maps).map_err(|source| ClassifyError::Map {
        label: format!("({q}, {t})"),
        source,
    })?;
    for (r, &o) in records.iter_mut().zip(&wilson.orbit_of) {
        r.wilson_orbit = o;
    }
    Ok(Classification {
        q,
        t,
        records,
        maps,
        wilson,
    })
}
