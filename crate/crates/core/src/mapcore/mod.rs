//! Maps from a generating pair `(x, y)` with `(xy)² = 1`.
//!
//! Arcs are the elements of `G`. The rotation is `R: g ↦ gy`, the edge
//! involution is `L: g ↦ g·xy`, and automorphisms act by left
//! translation, so `Aut⁺` is exactly the centralizer of `⟨R, L⟩`. Vertices,
//! edges and faces are the cosets `g⟨y⟩`, `g⟨xy⟩` and `g⟨x⟩`.

mod cayley;
mod classify;
mod wilson;

use thiserror::Error;

use crate::construct::Group;
use crate::grp::{centralizer_order, closure, element_order, hom_extend, Elem, HomVerdict, Perm};
use crate::oracle::{RotationError, RotationSystem};

pub use cayley::{balanced_cayley, CayleyVerdict, CayleyWitness};
pub use classify::{classify, Classification, ClassifyError, MapType, RegularMapRecord, CSV_HEADER};
pub use wilson::{wilson_orbits, WilsonLink, WilsonPartition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("x and y generate only {reached} of {order} elements")]
    NotGenerating { reached: u64, order: u64 },
    #[error("xy is not an involution")]
    NotInvolution,
    #[error("group of order {0} is too large to build a map")]
    TooLarge(u64),
    #[error("power {j} is not coprime to the valency {n}")]
    NotCoprime { j: i64, n: u64 },
    #[error("non-integral or negative genus from V = {v}, E = {e}, F = {f}")]
    Genus { v: u64, e: u64, f: u64 },
    #[error("the power {j} of map #{index} matches no listed map")]
    Unmatched { index: usize, j: u64 },
    #[error("rotation system export failed: {0}")]
    Export(#[from] RotationError),
}

/// Largest group for which arcs are listed explicitly.
pub const MAX_MAP_ORDER: u64 = 1 << 24;

/// Why a map's underlying graph is not a complete multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotComplete {
    /// The edge through this arc joins its vertex to itself.
    Loop { arc: u32, vertex: u32 },
    /// This pair carries a different number of edges than pair `{0, 1}`.
    PairCount { u: u32, v: u32, count: usize, expected: usize },
}

impl std::fmt::Display for NotComplete {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotComplete::Loop { arc, vertex } => write!(f, "loop at vertex {vertex} through arc {arc}"),
            NotComplete::PairCount { u, v, count, expected } => {
                write!(f, "vertices {u} and {v} share {count} edges, expected {expected}")
            }
        }
    }
}

/// An orientable map given by its monodromy generators.
#[derive(Debug, Clone)]
pub struct AlgebraicMap {
    group: Group,
    x: Elem,
    y: Elem,
    rotation: Perm,
    edge: Perm,
    vertex_of: Vec<u32>,
    vertices: usize,
    m: u64,
    n: u64,
}

impl AlgebraicMap {
    /// Builds the map of `(group, x, y)`.
    pub fn new(group: Group, x: Elem, y: Elem) -> Result<Self, MapError> {
        let g = group.as_ref();
        let order = g.order();
        if order > MAX_MAP_ORDER {
            return Err(MapError::TooLarge(order));
        }
        let reached = closure(g, &[x, y], order)
            .map(|s| s.len() as u64)
            .unwrap_or(order + 1);
        if reached != order {
            return Err(MapError::NotGenerating { reached, order });
        }
        let z = g.mul(x, y);
        if z == g.identity() && order > 1 || g.mul(z, z) != g.identity() {
            return Err(MapError::NotInvolution);
        }
        let size = order as usize;
        let rotation = Perm::from_images((0..size).map(|i| g.mul(Elem(i as u32), y).0).collect())
            .expect("right multiplication is a bijection");
        let edge = Perm::from_images((0..size).map(|i| g.mul(Elem(i as u32), z).0).collect())
            .expect("right multiplication is a bijection");

        const UNSET: u32 = u32::MAX;
        let mut vertex_of = vec![UNSET; size];
        let mut vertices = 0;
        for s in 0..size {
            if vertex_of[s] != UNSET {
                continue;
            }
            let mut a = s as u32;
            while vertex_of[a as usize] == UNSET {
                vertex_of[a as usize] = vertices as u32;
                a = rotation.apply(a);
            }
            vertices += 1;
        }
        Ok(Self {
            m: element_order(g, x),
            n: element_order(g, y),
            group,
            x,
            y,
            rotation,
            edge,
            vertex_of,
            vertices,
        })
    }

    /// The map of a group's distinguished generators.
    pub fn of_group(group: Group) -> Result<Self, MapError> {
        let (x, y) = (group.gen_x(), group.gen_y());
        Self::new(group, x, y)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn x(&self) -> Elem {
        self.x
    }

    pub fn y(&self) -> Elem {
        self.y
    }

    pub fn arcs(&self) -> usize {
        self.rotation.len()
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> usize {
        self.arcs() / 2
    }

    pub fn faces(&self) -> usize {
        self.arcs() / self.m as usize
    }

    pub fn rotation(&self) -> &Perm {
        &self.rotation
    }

    pub fn edge_involution(&self) -> &Perm {
        &self.edge
    }

    pub fn vertex_of(&self, arc: Elem) -> u32 {
        self.vertex_of[arc.index()]
    }

    /// Type `{m, n}`: face length and valency.
    pub fn map_type(&self) -> (u64, u64) {
        (self.m, self.n)
    }

    /// Genus from Euler's formula; errors instead of rounding.
    pub fn genus(&self) -> Result<u64, MapError> {
        let size = self.arcs() as i128;
        let (v, e, f) = (self.vertices as i128, size / 2, size / self.m as i128);
        let chi = v - e + f;
        if size % 2 != 0 || size % self.m as i128 != 0 || chi % 2 != 0 || chi > 2 {
            return Err(MapError::Genus {
                v: v as u64,
                e: e as u64,
                f: f as u64,
            });
        }
        Ok(((2 - chi) / 2) as u64)
    }

    /// `(r, t)` if the underlying graph is `K_r^{(t)}`.
    pub fn underlying_multigraph(&self) -> Result<(usize, usize), NotComplete> {
        let r = self.vertices;
        let mut count = vec![0usize; r * r];
        for a in 0..self.arcs() as u32 {
            let b = self.edge.apply(a);
            let (u, v) = (self.vertex_of[a as usize], self.vertex_of[b as usize]);
            if u == v {
                return Err(NotComplete::Loop { arc: a, vertex: u });
            }
            count[u as usize * r + v as usize] += 1;
        }
        let t = if r > 1 { count[1] } else { 0 };
        for u in 0..r {
            for v in u + 1..r {
                let c = count[u * r + v];
                if c != t {
                    return Err(NotComplete::PairCount {
                        u: u as u32,
                        v: v as u32,
                        count: c,
                        expected: t,
                    });
                }
            }
        }
        Ok((r, t))
    }

    /// Independent regularity test: the centralizer of `⟨R, L⟩` on arcs has
    /// as many elements as there are arcs.
    pub fn is_orientably_regular(&self) -> bool {
        centralizer_order(&[self.rotation.clone(), self.edge.clone()], self.arcs()) == self.arcs() as u128
    }

    /// Certificate or first conflict for an automorphism inverting `x` and `y`.
    pub fn reflexibility(&self) -> HomVerdict {
        let g = self.group.as_ref();
        hom_extend(g, (self.x, self.y), g, (g.inv(self.x), g.inv(self.y)))
    }

    pub fn is_chiral(&self) -> bool {
        !self.reflexibility().is_isomorphic()
    }

    /// `None` when `ord x ≠ ord y`; otherwise the verdict for `x ↔ y`.
    pub fn duality(&self) -> Option<HomVerdict> {
        if self.m != self.n {
            return None;
        }
        let g = self.group.as_ref();
        Some(hom_extend(g, (self.x, self.y), g, (self.y, self.x)))
    }

    pub fn is_self_dual(&self) -> bool {
        self.duality().is_some_and(|v| v.is_isomorphic())
    }

    /// The map with rotation `y^j` and the same edge involution.
    pub fn wilson_power(&self, j: i64) -> Result<Self, MapError> {
        let n = self.n;
        let jr = j.rem_euclid(n as i64) as u64;
        if crate::ffield::gcd(jr, n) != 1 {
            return Err(MapError::NotCoprime { j, n });
        }
        let g = self.group.as_ref();
        let yj = g.pow(self.y, jr as i64);
        let x = g.mul(self.x, g.pow(self.y, 1 - jr as i64));
        Self::new(self.group.clone(), x, yj)
    }

    /// Exports arcs as darts with the group's element numbering.
    pub fn to_rotation_system(&self) -> Result<RotationSystem, MapError> {
        let (r, t) = self.underlying_multigraph().map_err(|e| {
            MapError::Export(RotationError::NotComplete {
                r: self.vertices,
                t: 0,
                reason: e.to_string(),
            })
        })?;
        Ok(RotationSystem::from_permutations(
            r,
            t,
            self.rotation.images(),
            self.edge.images().to_vec(),
        )?)
    }
}

/// Two maps are isomorphic iff `(x₁, y₁) ↦ (x₂, y₂)` extends to a group
/// isomorphism.
pub fn maps_isomorphic(a: &AlgebraicMap, b: &AlgebraicMap) -> bool {
    isomorphism_verdict(a, b).is_isomorphic()
}

pub fn isomorphism_verdict(a: &AlgebraicMap, b: &AlgebraicMap) -> HomVerdict {
    hom_extend(a.group.as_ref(), (a.x, a.y), b.group.as_ref(), (b.x, b.y))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::construct::{build_g, param_sets, Variant};
    use crate::grp::Cyclic;

    fn map_of(q: u64, t: u64, pick: impl Fn(&crate::construct::ParamSet) -> bool) -> AlgebraicMap {
        let ps = param_sets(q, t).into_iter().find(|p| pick(p)).expect("parameter set");
        AlgebraicMap::of_group(build_g(&ps).unwrap()).unwrap()
    }

    #[test]
    fn small_maps() {
        let k3 = map_of(3, 1, |_| true);
        assert_eq!((k3.arcs(), k3.vertices(), k3.edges(), k3.map_type().0), (6, 3, 3, 3));
        assert_eq!(k3.genus().unwrap(), 0);
        let k5 = map_of(5, 1, |_| true);
        assert_eq!((k5.arcs(), k5.vertices(), k5.edges()), (20, 5, 10));
        let dip = map_of(2, 3, |p| p.f == Some(1));
        assert_eq!((dip.arcs(), dip.vertices(), dip.edges()), (6, 2, 3));
    }

    #[test]
    fn underlying_graphs() {
        assert_eq!(map_of(7, 3, |_| true).underlying_multigraph(), Ok((7, 3)));
        assert_eq!(map_of(4, 4, |p| p.variant == Variant::Q4B && p.a == 0).underlying_multigraph(), Ok((4, 4)));
        // xy ∈ ⟨y⟩: a one-vertex bouquet
        let c4: Group = Arc::new(Cyclic::new(4));
        let bouquet = AlgebraicMap::new(c4.clone(), Elem(1), Elem(1)).unwrap();
        assert!(matches!(bouquet.underlying_multigraph(), Err(NotComplete::Loop { .. })));
    }

    #[test]
    fn genus_and_type_examples() {
        let m = map_of(5, 3, |p| p.poly.as_ref().unwrap().coeffs() == [3]);
        assert_eq!(m.map_type(), (12, 12));
        assert_eq!(m.genus().unwrap(), 11);
        let m = map_of(3, 3, |_| true);
        assert_eq!(m.map_type(), (3, 6));
        assert_eq!(m.genus().unwrap(), 1);
        let m = map_of(2, 8, |p| p.f == Some(3));
        assert_eq!(m.map_type(), (4, 8));
        assert_eq!(m.genus().unwrap(), 2);
    }

    #[test]
    fn build_errors() {
        let c4: Group = Arc::new(Cyclic::new(4));
        assert_eq!(
            AlgebraicMap::new(c4.clone(), Elem(2), Elem(2)).unwrap_err(),
            MapError::NotGenerating { reached: 2, order: 4 }
        );
        assert_eq!(AlgebraicMap::new(c4, Elem(1), Elem(2)).unwrap_err(), MapError::NotInvolution);
    }

    #[test]
    fn regularity() {
        for (q, t) in [(3, 3), (4, 4), (5, 1), (8, 2), (2, 5)] {
            for ps in param_sets(q, t) {
                assert!(AlgebraicMap::of_group(build_g(&ps).unwrap()).unwrap().is_orientably_regular());
            }
        }
        let c2: Group = Arc::new(Cyclic::new(2));
        let k2 = AlgebraicMap::new(c2.clone(), c2.gen_x(), c2.identity()).unwrap();
        assert_eq!(k2.arcs(), 2);
        assert!(k2.is_orientably_regular());
    }

    #[test]
    fn isomorphism_examples() {
        let maps: Vec<_> = param_sets(8, 2)
            .into_iter()
            .map(|p| AlgebraicMap::of_group(build_g(&p).unwrap()).unwrap())
            .collect();
        for (i, a) in maps.iter().enumerate() {
            for (j, b) in maps.iter().enumerate() {
                assert_eq!(maps_isomorphic(a, b), i == j);
            }
        }
    }

    #[test]
    fn chirality_and_duality_examples() {
        assert!(!map_of(4, 4, |_| true).is_chiral());
        assert!(map_of(8, 1, |_| true).is_chiral());
        assert!(map_of(5, 3, |_| true).is_chiral());
        for ps in param_sets(5, 3) {
            assert!(AlgebraicMap::of_group(build_g(&ps).unwrap()).unwrap().is_self_dual());
        }
        assert!(map_of(2, 8, |p| p.f == Some(5)).is_self_dual());
        assert!(!map_of(2, 4, |p| p.f == Some(3)).is_self_dual());
    }

    #[test]
    fn wilson_power_basics() {
        let m = map_of(4, 4, |p| p.variant == Variant::Q4B && p.a == 0);
        assert!(maps_isomorphic(&m.wilson_power(1).unwrap(), &m));
        let target = map_of(4, 4, |p| p.variant == Variant::Q4B && p.a == 2);
        assert!(maps_isomorphic(&m.wilson_power(5).unwrap(), &target));
        assert!(matches!(m.wilson_power(2), Err(MapError::NotCoprime { .. })));
        for (q, t) in [(4, 2), (5, 3), (8, 1)] {
            let m = map_of(q, t, |_| true);
            assert_eq!(maps_isomorphic(&m.wilson_power(-1).unwrap(), &m), !m.is_chiral());
        }
    }

    #[test]
    fn rotation_export_roundtrip() {
        let m = map_of(5, 1, |_| true);
        let rs = m.to_rotation_system().unwrap();
        assert_eq!(rs.vertices(), 5);
        let back: RotationSystem = rs.to_text().parse().unwrap();
        assert_eq!(back, rs);
    }
}
