use std::collections::VecDeque;

/// A permutation of `0..n`, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u32).collect(),
        }
    }

    /// Returns `None` unless `images` is a bijection of `0..len`.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        Self {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `σ⁻¹ self σ` viewed as relabelling points by `σ`.
    pub fn relabel(&self, sigma: &Self) -> Self {
        let mut images = vec![0; self.len()];
        for i in 0..self.len() {
            images[sigma.images[i] as usize] = sigma.images[self.images[i] as usize];
        }
        Self { images }
    }
}

/// Cycle lengths, sorted ascending.
pub fn cycle_lengths(p: &Perm) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p.images[i] as usize;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

fn orbits(gens: &[Perm], n: usize) -> Vec<Vec<u32>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut orb = vec![s as u32];
        let mut queue = VecDeque::from([s as u32]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let j = g.apply(i);
                if !seen[j as usize] {
                    seen[j as usize] = true;
                    orb.push(j);
                    queue.push_back(j);
                }
            }
        }
        out.push(orb);
    }
    out
}

/// Whether `base ↦ image` extends to a map from the orbit of `base` to the
/// orbit of `image` commuting with every generator. Both orbits must have
/// been listed by the same breadth-first order.
fn equivariant_from(gens: &[Perm], base: u32, image: u32, n: usize, scratch: &mut Vec<u32>) -> bool {
    const UNSET: u32 = u32::MAX;
    scratch.clear();
    scratch.resize(n, UNSET);
    let mut used = vec![false; n];
    scratch[base as usize] = image;
    used[image as usize] = true;
    let mut queue = VecDeque::from([base]);
    while let Some(i) = queue.pop_front() {
        let fi = scratch[i as usize];
        for g in gens {
            let (j, fj) = (g.apply(i), g.apply(fi));
            match scratch[j as usize] {
                UNSET => {
                    if used[fj as usize] {
                        return false;
                    }
                    used[fj as usize] = true;
                    scratch[j as usize] = fj;
                    queue.push_back(j);
                }
                prev if prev != fj => return false,
                _ => {}
            }
        }
    }
    true
}

/// Order of the centralizer of `⟨gens⟩` in the symmetric group on `n`
/// points, saturating at `u128::MAX`.
///
/// A centralizing permutation is determined on each orbit by the image of
/// one point. Orbits fall into classes of equivalent actions; a class of
/// `m` orbits whose action has self-centralizer of order `c` contributes
/// `c^m · m!`.
pub fn centralizer_order(gens: &[Perm], n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    let orbs = orbits(gens, n);
    let mut scratch = Vec::new();
    let mut class_of: Vec<Option<usize>> = vec![None; orbs.len()];
    let mut classes: Vec<(u128, u32)> = Vec::new();
    for i in 0..orbs.len() {
        if class_of[i].is_some() {
            continue;
        }
        let base = orbs[i][0];
        let self_count = orbs[i]
            .iter()
            .filter(|&&c| equivariant_from(gens, base, c, n, &mut scratch))
            .count() as u128;
        let id = classes.len();
        classes.push((self_count, 1));
        class_of[i] = Some(id);
        for j in i + 1..orbs.len() {
            if class_of[j].is_some() || orbs[j].len() != orbs[i].len() {
                continue;
            }
            if orbs[j]
                .iter()
                .any(|&c| equivariant_from(gens, base, c, n, &mut scratch))
            {
                class_of[j] = Some(id);
                classes[id].1 += 1;
            }
        }
    }
    classes.iter().fold(1u128, |acc, &(c, m)| {
        let mut term = acc;
        for _ in 0..m {
            term = term.saturating_mul(c);
        }
        for f in 2..=m as u128 {
            term = term.saturating_mul(f);
        }
        term
    })
}
