use std::collections::BTreeSet;

use serde::Serialize;

use crate::grp::{commutator_subgroup, element_order, Elem, GroupModel};

use super::AlgebraicMap;

/// Largest vertex count for which regular subgroups are searched exhaustively.
pub const EXHAUSTIVE_VERTEX_LIMIT: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CayleyWitness {
    /// `G′` has one element per vertex and meets no vertex stabilizer.
    DerivedRegular { order: u64 },
    /// Every subgroup acting regularly on the vertices was listed;
    /// `normal` of the `regular` ones are normal in `G`.
    Exhaustive { regular: usize, normal: usize },
    /// `G′` does not act regularly and the vertex count is too large for an
    /// exhaustive search.
    Inconclusive { derived_order: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CayleyVerdict {
    pub balanced: bool,
    pub witness: CayleyWitness,
}

/// Elements fixing at least one vertex: the union of all conjugates of `⟨y⟩`.
fn vertex_fixers(map: &AlgebraicMap) -> Vec<bool> {
    let g = map.group().as_ref();
    let size = g.order() as usize;
    let mut ys = vec![g.identity()];
    let mut a = map.y();
    while a != g.identity() {
        ys.push(a);
        a = g.mul(a, map.y());
    }
    let mut fixes = vec![false; size];
    for h in 0..size as u32 {
        let h = Elem(h);
        let hi = g.inv(h);
        for &s in &ys {
            fixes[g.mul(g.mul(h, s), hi).index()] = true;
        }
    }
    fixes
}

fn is_normal(g: &dyn GroupModel, sub: &BTreeSet<Elem>, x: Elem, y: Elem) -> bool {
    [x, y].iter().all(|&s| {
        let si = g.inv(s);
        sub.iter().all(|&k| sub.contains(&g.mul(g.mul(s, k), si)))
    })
}

/// Subgroups of order `v ≤ 4` avoiding every vertex stabilizer.
fn regular_subgroups(map: &AlgebraicMap, fixes: &[bool], v: usize) -> Vec<BTreeSet<Elem>> {
    let g = map.group().as_ref();
    let id = g.identity();
    let free: Vec<Elem> = (0..fixes.len() as u32).map(Elem).filter(|e| !fixes[e.index()]).collect();
    let mut out: BTreeSet<BTreeSet<Elem>> = BTreeSet::new();
    match v {
        1 => {
            out.insert(BTreeSet::from([id]));
        }
        2 | 3 => {
            for &a in &free {
                if element_order(g, a) == v as u64 {
                    let sub: BTreeSet<Elem> = (0..v as i64).map(|i| g.pow(a, i)).collect();
                    if sub.iter().all(|&e| e == id || !fixes[e.index()]) {
                        out.insert(sub);
                    }
                }
            }
        }
        4 => {
            for &a in &free {
                match element_order(g, a) {
                    4 => {
                        let sub: BTreeSet<Elem> = (0..4).map(|i| g.pow(a, i)).collect();
                        if sub.iter().all(|&e| e == id || !fixes[e.index()]) {
                            out.insert(sub);
                        }
                    }
                    2 => {
                        for &b in &free {
                            if b != a && element_order(g, b) == 2 && g.mul(a, b) == g.mul(b, a) {
                                let ab = g.mul(a, b);
                                if !fixes[ab.index()] {
                                    out.insert(BTreeSet::from([id, a, b, ab]));
                                }
                            }
                        }
                    }
                    _ => {}
                }
            }
        }
        _ => unreachable!("exhaustive search is limited to four vertices"),
    }
    out.into_iter().collect()
}

/// Whether some normal subgroup of automorphisms acts regularly on the
/// vertices. `G′` is tried first; small vertex sets are searched
/// exhaustively when it fails.
pub fn balanced_cayley(map: &AlgebraicMap) -> CayleyVerdict {
    let g = map.group().as_ref();
    let v = map.vertices();
    let fixes = vertex_fixers(map);
    let derived = commutator_subgroup(g);
    let derived_order = derived.len() as u64;
    if derived.len() == v && derived.elements().iter().all(|&e| e == g.identity() || !fixes[e.index()]) {
        return CayleyVerdict {
            balanced: true,
            witness: CayleyWitness::DerivedRegular { order: derived_order },
        };
    }
    if v <= EXHAUSTIVE_VERTEX_LIMIT {
        let subs = regular_subgroups(map, &fixes, v);
        let normal = subs.iter().filter(|s| is_normal(g, s, map.x(), map.y())).count();
        return CayleyVerdict {
            balanced: normal > 0,
            witness: CayleyWitness::Exhaustive {
                regular: subs.len(),
                normal,
            },
        };
    }
    CayleyVerdict {
        balanced: false,
        witness: CayleyWitness::Inconclusive { derived_order },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_g, param_sets, Variant};

    fn verdicts(q: u64, t: u64) -> Vec<(Variant, u64, CayleyVerdict)> {
        param_sets(q, t)
            .into_iter()
            .map(|p| {
                let m = AlgebraicMap::of_group(build_g(&p).unwrap()).unwrap();
                (p.variant, p.a, balanced_cayley(&m))
            })
            .collect()
    }

    #[test]
    fn derived_subgroup_witnesses() {
        for (_, _, v) in verdicts(9, 3) {
            assert_eq!(v.witness, CayleyWitness::DerivedRegular { order: 9 });
        }
        for (variant, a, v) in verdicts(4, 4) {
            match variant {
                Variant::Q4A => assert!(v.balanced, "a = {a}"),
                _ => assert_eq!(
                    v,
                    CayleyVerdict {
                        balanced: false,
                        witness: CayleyWitness::Exhaustive { regular: 0, normal: 0 }
                    }
                ),
            }
        }
    }
}
