use std::collections::VecDeque;

use super::{Elem, GroupModel};

/// First inconsistency met while extending a generator assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomConflict {
    /// The groups have different orders.
    OrderMismatch { source: u64, target: u64 },
    /// `φ(g)·φ(s)` disagrees with the label already assigned to `g·s`.
    Inconsistent {
        at: Elem,
        generator: usize,
        expected: Elem,
        found: Elem,
    },
    /// The assignment extends to a homomorphism that is not injective.
    NotInjective { a: Elem, b: Elem },
    /// The source generators do not generate the source group.
    NotGenerating { reached: u64 },
}

impl std::fmt::Display for HomConflict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomConflict::OrderMismatch { source, target } => {
                write!(f, "group orders differ ({source} vs {target})")
            }
            HomConflict::Inconsistent {
                at,
                generator,
                expected,
                found,
            } => write!(
                f,
                "conflict at element #{} under generator {}: #{} vs #{}",
                at.0, generator, expected.0, found.0
            ),
            HomConflict::NotInjective { a, b } => {
                write!(f, "elements #{} and #{} have the same image", a.0, b.0)
            }
            HomConflict::NotGenerating { reached } => {
                write!(f, "source generators reach only {reached} elements")
            }
        }
    }
}

/// An explicit isomorphism: `images[g] = φ(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    images: Vec<Elem>,
}

impl Isomorphism {
    pub fn image(&self, g: Elem) -> Elem {
        self.images[g.index()]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    /// Re-checks `φ(ab) = φ(a)φ(b)` for one pair using both models.
    pub fn respects(&self, src: &dyn GroupModel, dst: &dyn GroupModel, a: Elem, b: Elem) -> bool {
        self.image(src.mul(a, b)) == dst.mul(self.image(a), self.image(b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomVerdict {
    Isomorphic(Isomorphism),
    NotIsomorphic(HomConflict),
}

impl HomVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, HomVerdict::Isomorphic(_))
    }

    pub fn certificate(&self) -> Option<&Isomorphism> {
        match self {
            HomVerdict::Isomorphic(iso) => Some(iso),
            HomVerdict::NotIsomorphic(_) => None,
        }
    }
}

/// Extends `src_gens[i] ↦ dst_gens[i]` to a homomorphism from the subgroup
/// generated by `src_gens`, labelling the Cayley graph breadth-first.
/// Returns the image table, `None` on elements not reached.
pub fn extend_homomorphism(
    src: &dyn GroupModel,
    src_gens: &[Elem],
    dst: &dyn GroupModel,
    dst_gens: &[Elem],
) -> Result<Vec<Option<Elem>>, HomConflict> {
    assert_eq!(src_gens.len(), dst_gens.len());
    let n = src.order() as usize;
    let mut label: Vec<Option<Elem>> = vec![None; n];
    let id = src.identity();
    label[id.index()] = Some(dst.identity());
    let mut queue = VecDeque::from([id]);
    let mut order = Vec::with_capacity(n);
    while let Some(g) = queue.pop_front() {
        order.push(g);
        let img = label[g.index()].unwrap();
        for (i, (&s, &t)) in src_gens.iter().zip(dst_gens).enumerate() {
            let gs = src.mul(g, s);
            let expected = dst.mul(img, t);
            match label[gs.index()] {
                None => {
                    label[gs.index()] = Some(expected);
                    queue.push_back(gs);
                }
                Some(found) if found != expected => {
                    return Err(HomConflict::Inconsistent {
                        at: g,
                        generator: i,
                        expected,
                        found,
                    })
                }
                Some(_) => {}
            }
        }
    }
    Ok(label)
}

/// Decides whether the generator assignment extends to an isomorphism,
/// returning the full bijection as a certificate.
pub fn hom_extend(
    src: &dyn GroupModel,
    src_gens: (Elem, Elem),
    dst: &dyn GroupModel,
    dst_gens: (Elem, Elem),
) -> HomVerdict {
    if src.order() != dst.order() {
        return HomVerdict::NotIsomorphic(HomConflict::OrderMismatch {
            source: src.order(),
            target: dst.order(),
        });
    }
    let labels = match extend_homomorphism(
        src,
        &[src_gens.0, src_gens.1],
        dst,
        &[dst_gens.0, dst_gens.1],
    ) {
        Ok(l) => l,
        Err(c) => return HomVerdict::NotIsomorphic(c),
    };
    let reached = labels.iter().filter(|l| l.is_some()).count() as u64;
    if reached != src.order() {
        return HomVerdict::NotIsomorphic(HomConflict::NotGenerating { reached });
    }
    let images: Vec<Elem> = labels.into_iter().map(Option::unwrap).collect();
    let mut preimage: Vec<Option<Elem>> = vec![None; images.len()];
    for (i, &img) in images.iter().enumerate() {
        if let Some(prev) = preimage[img.index()] {
            return HomVerdict::NotIsomorphic(HomConflict::NotInjective {
                a: prev,
                b: Elem(i as u32),
            });
        }
        preimage[img.index()] = Some(Elem(i as u32));
    }
    HomVerdict::Isomorphic(Isomorphism { images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{Cyclic, SymmetricThree};

    #[test]
    fn identity_assignment_is_isomorphism() {
        let s3 = SymmetricThree::default();
        let gens = (s3.gen_x(), s3.gen_y());
        let v = hom_extend(&s3, gens, &s3, gens);
        let iso = v.certificate().unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert!(iso.respects(&s3, &s3, Elem(a), Elem(b)));
            }
        }
    }

    #[test]
    fn swapped_orders_are_rejected() {
        let s3 = SymmetricThree::default();
        let v = hom_extend(&s3, (s3.gen_x(), s3.gen_y()), &s3, (s3.gen_y(), s3.gen_x()));
        assert!(!v.is_isomorphic());
    }

    #[test]
    fn automorphisms_of_z5() {
        let z5 = Cyclic::new(5);
        let ok = hom_extend(&z5, (Elem(1), Elem(1)), &z5, (Elem(2), Elem(2)));
        assert!(ok.is_isomorphic());
        let bad = hom_extend(&z5, (Elem(1), Elem(1)), &z5, (Elem(2), Elem(3)));
        assert!(!bad.is_isomorphic());
        let zero = hom_extend(&z5, (Elem(1), Elem(1)), &z5, (Elem(0), Elem(0)));
        assert!(matches!(
            zero,
            HomVerdict::NotIsomorphic(HomConflict::NotInjective { .. })
        ));
    }

    #[test]
    fn size_mismatch_is_immediate() {
        let a = Cyclic::new(4);
        let b = Cyclic::new(6);
        assert!(matches!(
            hom_extend(&a, (Elem(1), Elem(1)), &b, (Elem(1), Elem(1))),
            HomVerdict::NotIsomorphic(HomConflict::OrderMismatch { .. })
        ));
    }

    #[test]
    fn quotient_map_z12_to_z4() {
        let a = Cyclic::new(12);
        let b = Cyclic::new(4);
        let labels = extend_homomorphism(&a, &[Elem(1)], &b, &[Elem(1)]).unwrap();
        assert_eq!(labels[7], Some(Elem(3)));
        assert!(extend_homomorphism(&a, &[Elem(1)], &Cyclic::new(5), &[Elem(1)]).is_err());
    }
}
