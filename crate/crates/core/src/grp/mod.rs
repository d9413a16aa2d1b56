//! A small finite-group engine over pluggable element models.
//!
//! Every model packs its elements densely into `0..order`, so subsets are
//! plain bitmaps and homomorphisms are plain vectors.

mod hom;
mod perm;
mod word;

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use hom::{extend_homomorphism, hom_extend, HomConflict, HomVerdict, Isomorphism};
pub use perm::{centralizer_order, cycle_lengths, Perm};
pub use word::{Gen, Word, WordParseError, MAX_WORD_LENGTH};

/// A group element in a model's dense packing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Elem(pub u32);

impl Elem {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelTag {
    Agl,
    Inflated,
    Dipole,
    CosetTable,
    Cyclic,
}

impl fmt::Display for ModelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelTag::Agl => "agl",
            ModelTag::Inflated => "inflated",
            ModelTag::Dipole => "dipole",
            ModelTag::CosetTable => "coset-table",
            ModelTag::Cyclic => "cyclic",
        })
    }
}

/// A finite group with a distinguished generating pair.
pub trait GroupModel: Send + Sync + fmt::Debug {
    fn tag(&self) -> ModelTag;
    /// Size of the element universe; elements are `Elem(0..order)`.
    fn order(&self) -> u64;
    fn identity(&self) -> Elem;
    fn mul(&self, a: Elem, b: Elem) -> Elem;
    fn inv(&self, a: Elem) -> Elem;
    fn gen_x(&self) -> Elem;
    fn gen_y(&self) -> Elem;

    /// Human-readable rendering of an element.
    fn describe(&self, a: Elem) -> String {
        format!("#{}", a.0)
    }

    fn pow(&self, a: Elem, e: i64) -> Elem {
        let mut base = if e < 0 { self.inv(a) } else { a };
        let mut e = e.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    fn commutator(&self, a: Elem, b: Elem) -> Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded the bound of {0} elements")]
    ClosureBound(u64),
    #[error("generators produce {found} elements, expected {expected}")]
    NotGenerating { found: u64, expected: u64 },
    #[error("element order exceeds group order {0}")]
    NoFiniteOrder(u64),
}

/// A subgroup given by explicit enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    elems: Vec<Elem>,
    member: Vec<bool>,
}

impl Subgroup {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.member.get(g.index()).copied().unwrap_or(false)
    }

    /// Elements in increasing packing order.
    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }
}

/// Least `n ≥ 1` with `gⁿ = 1`.
pub fn element_order(g: &dyn GroupModel, a: Elem) -> u64 {
    let id = g.identity();
    let mut cur = a;
    let mut n = 1;
    while cur != id {
        cur = g.mul(cur, a);
        n += 1;
        assert!(n <= g.order(), "element order exceeds group order");
    }
    n
}

/// The subgroup generated by `gens`, by breadth-first right multiplication.
pub fn closure(g: &dyn GroupModel, gens: &[Elem], bound: u64) -> Result<Subgroup, GroupError> {
    let n = g.order() as usize;
    let mut member = vec![false; n];
    let id = g.identity();
    member[id.index()] = true;
    let mut elems = vec![id];
    let mut queue = VecDeque::from([id]);
    while let Some(h) = queue.pop_front() {
        for &s in gens {
            let hs = g.mul(h, s);
            if !member[hs.index()] {
                member[hs.index()] = true;
                elems.push(hs);
                if elems.len() as u64 > bound {
                    return Err(GroupError::ClosureBound(bound));
                }
                queue.push_back(hs);
            }
        }
    }
    elems.sort_unstable();
    Ok(Subgroup { elems, member })
}

/// Checks that the distinguished generators produce the whole universe.
pub fn check_generates(g: &dyn GroupModel) -> Result<(), GroupError> {
    let found = closure(g, &[g.gen_x(), g.gen_y()], g.order())?.len() as u64;
    if found == g.order() {
        Ok(())
    } else {
        Err(GroupError::NotGenerating {
            found,
            expected: g.order(),
        })
    }
}

/// The normal closure of `seeds` in the group generated by `ambient`.
pub fn normal_closure(g: &dyn GroupModel, seeds: &[Elem], ambient: &[Elem]) -> Subgroup {
    let mut gens: Vec<Elem> = seeds.to_vec();
    let bound = g.order();
    let mut sub = closure(g, &gens, bound).expect("subgroup of a finite group");
    let mut frontier = gens.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &n in &frontier {
            for &s in ambient {
                let c = g.mul(g.mul(g.inv(s), n), s);
                if !sub.contains(c) {
                    gens.push(c);
                    next.push(c);
                    sub = closure(g, &gens, bound).expect("subgroup of a finite group");
                }
            }
        }
        frontier = next;
    }
    sub
}

/// The derived subgroup. For a group generated by `x` and `y` this is the
/// normal closure of `[x, y]`.
pub fn commutator_subgroup(g: &dyn GroupModel) -> Subgroup {
    let (x, y) = (g.gen_x(), g.gen_y());
    normal_closure(g, &[g.commutator(x, y)], &[x, y])
}

/// Evaluates a word with `x ↦ gx`, `y ↦ gy`.
pub fn eval_word(g: &dyn GroupModel, w: &Word, gx: Elem, gy: Elem) -> Elem {
    w.letters().iter().fold(g.identity(), |acc, &(s, e)| {
        let base = match s {
            Gen::X => gx,
            Gen::Y => gy,
        };
        g.mul(acc, g.pow(base, e))
    })
}

/// Right multiplication by `s` as a permutation of the universe.
pub fn right_regular(g: &dyn GroupModel, s: Elem) -> Perm {
    Perm::from_images((0..g.order() as u32).map(|i| g.mul(Elem(i), s).0).collect())
        .expect("right multiplication is a bijection")
}

/// The cyclic group `Z_n` with both generators equal to `1`.
#[derive(Debug, Clone)]
pub struct Cyclic {
    n: u32,
}

impl Cyclic {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1);
        Self { n }
    }
}

impl GroupModel for Cyclic {
    fn tag(&self) -> ModelTag {
        ModelTag::Cyclic
    }
    fn order(&self) -> u64 {
        self.n as u64
    }
    fn identity(&self) -> Elem {
        Elem(0)
    }
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem((a.0 + b.0) % self.n)
    }
    fn inv(&self, a: Elem) -> Elem {
        Elem((self.n - a.0) % self.n)
    }
    fn gen_x(&self) -> Elem {
        Elem(1 % self.n)
    }
    fn gen_y(&self) -> Elem {
        Elem(1 % self.n)
    }
}

/// The symmetric group `S_3` as permutations of three points, generated by
/// a 2-cycle `x` and a 3-cycle `y`; a small non-abelian test model.
#[derive(Debug, Clone)]
pub struct SymmetricThree {
    perms: Vec<[u8; 3]>,
}

impl Default for SymmetricThree {
    fn default() -> Self {
        let mut perms = Vec::new();
        for a in 0..3u8 {
            for b in 0..3u8 {
                for c in 0..3u8 {
                    if a != b && b != c && a != c {
                        perms.push([a, b, c]);
                    }
                }
            }
        }
        Self { perms }
    }
}

impl SymmetricThree {
    fn find(&self, p: [u8; 3]) -> Elem {
        Elem(self.perms.iter().position(|&q| q == p).unwrap() as u32)
    }
}

impl GroupModel for SymmetricThree {
    fn tag(&self) -> ModelTag {
        ModelTag::Cyclic
    }
    fn order(&self) -> u64 {
        6
    }
    fn identity(&self) -> Elem {
        self.find([0, 1, 2])
    }
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        // apply a, then b
        let (pa, pb) = (self.perms[a.index()], self.perms[b.index()]);
        self.find([pb[pa[0] as usize], pb[pa[1] as usize], pb[pa[2] as usize]])
    }
    fn inv(&self, a: Elem) -> Elem {
        let p = self.perms[a.index()];
        let mut q = [0u8; 3];
        for i in 0..3 {
            q[p[i] as usize] = i as u8;
        }
        self.find(q)
    }
    fn gen_x(&self) -> Elem {
        self.find([1, 0, 2])
    }
    fn gen_y(&self) -> Elem {
        self.find([1, 2, 0])
    }
}


#[cfg(test)]
pub(crate) use tests::derived_by_brute_force;
