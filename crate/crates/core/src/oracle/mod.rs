//! Brute-force census of orientably-regular embeddings of `K_r^{(t)}` by
//! explicit rotation systems.
//!
//! Nothing here depends on the algebraic constructions: the census
//! enumerates rotations, filters by regularity of the monodromy group, and
//! classifies survivors up to dart relabelling.

mod rotation;

use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use thiserror::Error;

pub use rotation::{canonical_code, find_isomorphism, RotationError, RotationSystem, MAX_DARTS};

/// `(r, t)` pairs the census is expected to finish on at desk scale.
pub const DEFAULT_FEASIBLE: &[(usize, usize)] = &[
    (2, 1),
    (2, 2),
    (2, 3),
    (2, 4),
    (2, 5),
    (2, 6),
    (2, 7),
    (3, 1),
    (3, 2),
    (3, 3),
    (4, 1),
    (4, 2),
    (5, 1),
];

pub fn is_default_feasible(r: usize, t: usize) -> bool {
    DEFAULT_FEASIBLE.contains(&(r, t))
}

#[derive(Debug, Clone)]
pub struct CensusLimits {
    /// Abort after this many complete rotation tuples.
    pub max_leaves: u64,
    /// Refuse instances with more darts than this.
    pub max_darts: usize,
    /// Restrict vertex 0 to one rotation per orbit of vertex and parallel
    /// edge relabellings. Disable only to validate that reduction.
    pub canonical_first_vertex: bool,
    /// Worker threads over the vertex-0 rotations.
    pub jobs: usize,
}

impl Default for CensusLimits {
    fn default() -> Self {
        Self {
            max_leaves: 1 << 32,
            max_darts: 64,
            canonical_first_vertex: true,
            jobs: 1,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("census needs r ≥ 2 and t ≥ 1, got r = {r}, t = {t}")]
    Invalid { r: usize, t: usize },
    #[error("{darts} darts exceeds the limit of {limit}")]
    TooLarge { darts: usize, limit: usize },
    #[error("leaf limit reached after {explored} rotation tuples ({survivors} regular, {classes} classes so far)")]
    LimitExceeded {
        explored: u64,
        survivors: u64,
        classes: usize,
    },
}

/// Result of a completed census.
#[derive(Debug, Clone)]
pub struct Census {
    pub r: usize,
    pub t: usize,
    /// Complete rotation tuples examined.
    pub leaves: u64,
    /// Regular rotation systems found before classification.
    pub survivors: u64,
    /// One representative per isomorphism class, ordered by canonical code.
    pub representatives: Vec<RotationSystem>,
}

impl Census {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Fixed dart labelling of `K_r^{(t)}`.
struct Layout {
    r: usize,
    t: usize,
    n: usize,
    /// Darts at each vertex, ordered by `(neighbour, copy)`.
    at: Vec<Vec<u32>>,
    /// `(neighbour, copy)` of each dart.
    label: Vec<(u32, u32)>,
}

impl Layout {
    fn new(r: usize, t: usize) -> Self {
        let n = r * (r - 1) * t;
        let mut at = vec![Vec::new(); r];
        let mut label = vec![(0, 0); n];
        let mut vertex = vec![0; n];
        let mut pair = 0usize;
        for u in 0..r {
            for v in u + 1..r {
                for c in 0..t {
                    let e = pair * t + c;
                    let (du, dv) = (2 * e as u32, 2 * e as u32 + 1);
                    label[du as usize] = (v as u32, c as u32);
                    label[dv as usize] = (u as u32, c as u32);
                    vertex[du as usize] = u as u32;
                    vertex[dv as usize] = v as u32;
                }
                pair += 1;
            }
        }
        for d in 0..n as u32 {
            at[vertex[d as usize] as usize].push(d);
        }
        for darts in &mut at {
            darts.sort_by_key(|&d| label[d as usize]);
        }
        Self {
            r,
            t,
            n,
            at,
            label,
        }
    }

    fn dart(&self, v: usize, neighbour: u32, copy: u32) -> u32 {
        *self.at[v]
            .iter()
            .find(|&&d| self.label[d as usize] == (neighbour, copy))
            .expect("dart exists")
    }

    /// Vertex-0 cyclic orders starting at `(1, 0)`, with neighbours first
    /// appearing in increasing order and copies of each neighbour in
    /// increasing order. Every rotation system is isomorphic to one whose
    /// vertex 0 reads like this, by relabelling the other vertices and the
    /// parallel edges of each pair.
    fn canonical_first(&self) -> Vec<Vec<u32>> {
        let k = self.r - 1;
        let mut out = Vec::new();
        let mut seq = Vec::with_capacity(k * self.t);
        let mut used = vec![0usize; k + 1];
        self.canonical_rec(&mut seq, &mut used, 0, &mut out);
        out
    }

    fn canonical_rec(&self, seq: &mut Vec<u32>, used: &mut [usize], introduced: usize, out: &mut Vec<Vec<u32>>) {
        let k = self.r - 1;
        if seq.len() == k * self.t {
            let mut copies = vec![0u32; k + 1];
            out.push(
                seq.iter()
                    .map(|&nb| {
                        let c = copies[nb as usize];
                        copies[nb as usize] += 1;
                        self.dart(0, nb, c)
                    })
                    .collect(),
            );
            return;
        }
        // reuse an introduced neighbour or introduce the next one
        let limit = if introduced < k { introduced + 1 } else { k };
        for nb in 1..=limit {
            if used[nb] == self.t {
                continue;
            }
            used[nb] += 1;
            seq.push(nb as u32);
            self.canonical_rec(seq, used, introduced.max(nb), out);
            seq.pop();
            used[nb] -= 1;
        }
    }

    /// All cyclic orders of the darts at `v`, each listed once with the
    /// lowest dart first, in lexicographic order of the remainder.
    fn all_rotations(&self, v: usize) -> Vec<Vec<u32>> {
        let darts = &self.at[v];
        let (first, rest) = darts.split_first().expect("vertex has darts");
        let mut out = Vec::new();
        let mut cur = vec![*first];
        let mut used = vec![false; rest.len()];
        permute(rest, &mut used, &mut cur, &mut out);
        out
    }
}

fn permute(items: &[u32], used: &mut [bool], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == items.len() + 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..items.len() {
        if !used[i] {
            used[i] = true;
            cur.push(items[i]);
            permute(items, used, cur, out);
            cur.pop();
            used[i] = false;
        }
    }
}

const UNSET: u32 = u32::MAX;

/// Necessary conditions on a common face length `m` for `n` darts on `r`
/// vertices: `m | n` and a nonnegative integral genus.
fn face_length_admissible(m: usize, n: usize, r: usize) -> bool {
    if m == 0 || n % m != 0 {
        return false;
    }
    let chi = r as i64 - (n / 2) as i64 + (n / m) as i64;
    chi <= 2 && chi % 2 == 0
}

struct Search<'a> {
    layout: &'a Layout,
    rotations: Vec<Vec<Vec<u32>>>,
    rot: Vec<u32>,
    edge: Vec<u32>,
    leaves: u64,
    survivors: u64,
    found: BTreeMap<Vec<u32>, Vec<u32>>,
    budget: &'a AtomicU64,
    stop: &'a AtomicBool,
    max_leaves: u64,
}

impl Search<'_> {
    /// Traces face paths through the steps made definite by fixing vertex
    /// `v`; returns the common face length so far, or `None` to prune.
    fn faces_ok(&self, v: usize, target: Option<usize>) -> Option<Option<usize>> {
        let mut target = target;
        let n = self.layout.n;
        for &d_at in &self.layout.at[v] {
            // the step d → R(L(d)) became definite for d = L(d_at)
            let d = self.edge[d_at as usize];
            let mut cur = d;
            let mut len = 0usize;
            loop {
                let next = self.rot[self.edge[cur as usize] as usize];
                if next == UNSET {
                    break;
                }
                len += 1;
                cur = next;
                if cur == d {
                    match target {
                        None => {
                            if !face_length_admissible(len, n, self.layout.r) {
                                return None;
                            }
                            target = Some(len);
                        }
                        Some(m) if m != len => return None,
                        Some(_) => {}
                    }
                    break;
                }
                if target.is_some_and(|m| len >= m) || len > n {
                    return None;
                }
            }
        }
        Some(target)
    }

    fn descend(&mut self, v: usize, target: Option<usize>) {
        if self.stop.load(Ordering::Relaxed) {
            return;
        }
        if v == self.layout.r {
            self.leaf();
            return;
        }
        for i in 0..self.rotations[v].len() {
            let cyc = &self.rotations[v][i];
            for (j, &d) in cyc.iter().enumerate() {
                self.rot[d as usize] = cyc[(j + 1) % cyc.len()];
            }
            if let Some(next_target) = self.faces_ok(v, target) {
                self.descend(v + 1, next_target);
            }
            if self.stop.load(Ordering::Relaxed) {
                break;
            }
        }
        for &d in &self.layout.at[v] {
            self.rot[d as usize] = UNSET;
        }
    }

    fn leaf(&mut self) {
        self.leaves += 1;
        if self.budget.fetch_add(1, Ordering::Relaxed) + 1 > self.max_leaves {
            self.stop.store(true, Ordering::Relaxed);
            return;
        }
        if is_regular(&self.rot, &self.edge) {
            self.survivors += 1;
            let rs = RotationSystem::from_permutations(self.layout.r, self.layout.t, &self.rot, self.edge.clone())
                .expect("census layout is a complete multigraph");
            let code = canonical_code(&rs);
            let entry = self.found.entry(code).or_insert_with(|| self.rot.clone());
            if self.rot < *entry {
                *entry = self.rot.clone();
            }
        }
    }
}

/// Whether `0 ↦ image` extends to a dart bijection commuting with `R` and
/// `L`, assuming `⟨R, L⟩` is transitive.
fn extends_to_automorphism(rot: &[u32], edge: &[u32], image: u32) -> bool {
    let n = rot.len();
    let mut sigma = vec![UNSET; n];
    let mut used = vec![false; n];
    sigma[0] = image;
    used[image as usize] = true;
    let mut stack = vec![0u32];
    while let Some(d) = stack.pop() {
        let s = sigma[d as usize];
        for perm in [rot, edge] {
            let (from, to) = (perm[d as usize], perm[s as usize]);
            match sigma[from as usize] {
                UNSET => {
                    if used[to as usize] {
                        return false;
                    }
                    used[to as usize] = true;
                    sigma[from as usize] = to;
                    stack.push(from);
                }
                prev if prev != to => return false,
                _ => {}
            }
        }
    }
    true
}

/// `⟨R, L⟩` is transitive and has exactly as many elements as there are
/// darts, by closure with early abort.
pub fn is_regular(rot: &[u32], edge: &[u32]) -> bool {
    let n = rot.len();
    // transitivity
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(d) = stack.pop() {
        for next in [rot[d] as usize, edge[d] as usize] {
            if !seen[next] {
                seen[next] = true;
                reached += 1;
                stack.push(next);
            }
        }
    }
    if reached != n {
        return false;
    }
    // With ⟨R, L⟩ transitive, automorphisms moving dart 0 to R(0) and to
    // L(0) generate a transitive centralizer, which forces regularity.
    if !extends_to_automorphism(rot, edge, rot[0]) || !extends_to_automorphism(rot, edge, edge[0]) {
        return false;
    }
    let gens = [rot.to_vec(), edge.to_vec()];
    let identity: Vec<u32> = (0..n as u32).collect();
    let mut elems: HashSet<Vec<u32>> = HashSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while let Some(g) = frontier.pop() {
        for s in &gens {
            let gs: Vec<u32> = g.iter().map(|&i| s[i as usize]).collect();
            if elems.insert(gs.clone()) {
                if elems.len() > n {
                    return false;
                }
                frontier.push(gs);
            }
        }
    }
    elems.len() == n
}

/// Enumerates all orientably-regular embeddings of `K_r^{(t)}` up to
/// isomorphism.
pub fn census(r: usize, t: usize, limits: &CensusLimits) -> Result<Census, CensusError> {
    census_with_progress(r, t, limits, &|_| {})
}

/// As [`census`], reporting the number of examined rotation tuples
/// periodically.
pub fn census_with_progress(
    r: usize,
    t: usize,
    limits: &CensusLimits,
    progress: &(dyn Fn(u64) + Sync),
) -> Result<Census, CensusError> {
    if r < 2 || t == 0 {
        return Err(CensusError::Invalid { r, t });
    }
    let darts = r
        .checked_mul(r - 1)
        .and_then(|v| v.checked_mul(t))
        .unwrap_or(usize::MAX);
    if darts > limits.max_darts {
        return Err(CensusError::TooLarge {
            darts,
            limit: limits.max_darts,
        });
    }
    let layout = Layout::new(r, t);
    let first = if limits.canonical_first_vertex {
        layout.canonical_first()
    } else {
        layout.all_rotations(0)
    };
    let rest: Vec<Vec<Vec<u32>>> = (0..r).map(|v| if v == 0 { Vec::new() } else { layout.all_rotations(v) }).collect();
    let edge: Vec<u32> = (0..layout.n as u32).map(|d| d ^ 1).collect();
    let budget = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let jobs = limits.jobs.max(1).min(first.len().max(1));

    let run = |worker: usize| {
        let mut rotations = rest.clone();
        rotations[0] = first.iter().skip(worker).step_by(jobs).cloned().collect();
        let mut s = Search {
            layout: &layout,
            rotations,
            rot: vec![UNSET; layout.n],
            edge: edge.clone(),
            leaves: 0,
            survivors: 0,
            found: BTreeMap::new(),
            budget: &budget,
            stop: &stop,
            max_leaves: limits.max_leaves,
        };
        // report progress between vertex-0 rotations
        let firsts = std::mem::take(&mut s.rotations[0]);
        for cyc in firsts {
            if stop.load(Ordering::Relaxed) {
                break;
            }
            s.rotations[0] = vec![cyc];
            s.descend(0, None);
            progress(budget.load(Ordering::Relaxed));
        }
        (s.leaves, s.survivors, s.found)
    };

    let results: Vec<_> = if jobs == 1 {
        vec![run(0)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs).map(|w| scope.spawn(move || run(w))).collect();
            handles.into_iter().map(|h| h.join().expect("census worker panicked")).collect()
        })
    };

    let mut leaves = 0;
    let mut survivors = 0;
    let mut found: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
    for (l, s, f) in results {
        leaves += l;
        survivors += s;
        for (code, rot) in f {
            let entry = found.entry(code).or_insert_with(|| rot.clone());
            if rot < *entry {
                *entry = rot;
            }
        }
    }
    if stop.load(Ordering::Relaxed) {
        return Err(CensusError::LimitExceeded {
            explored: leaves,
            survivors,
            classes: found.len(),
        });
    }
    let representatives = found
        .into_values()
        .map(|rot| RotationSystem::from_permutations(r, t, &rot, edge.clone()).expect("valid layout"))
        .collect();
    Ok(Census {
        r,
        t,
        leaves,
        survivors,
        representatives,
    })
}
